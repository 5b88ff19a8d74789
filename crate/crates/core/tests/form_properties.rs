//! Properties of the graded form algebra: grading under wedge, the
//! contact/mixed basis involution, and projection completeness.

use jetvar_core::corpus::{self, CorpusParams, Rng};
use jetvar_core::form::Form;

#[test]
fn wedge_adds_bidegrees_and_graded_commutes() {
    let mut rng = Rng::new(0xf0_0001);
    let params = CorpusParams {
        max_terms: 2,
        ..CorpusParams::default()
    };
    for _ in 0..60 {
        let sig = corpus::signature(&mut rng);
        let n = sig.base_len();
        let (ka, sa) = (rng.below(2) as usize, rng.below(n as u64 + 1) as usize);
        let (kb, sb) = (rng.below(2) as usize, rng.below(n as u64 + 1) as usize);
        let a = corpus::form(&sig, ka, sa, &params, &mut rng);
        let b = corpus::form(&sig, kb, sb, &params, &mut rng);

        let ab = a.wedge(&b);
        for (k, s) in ab.bidegrees() {
            assert_eq!((k, s), (ka + kb, sa + sb));
        }

        // a ^ b = (-1)^(deg a * deg b) b ^ a
        let ba = b.wedge(&a);
        let expected = if ((ka + sa) * (kb + sb)) % 2 == 1 {
            -&ba
        } else {
            ba
        };
        assert_eq!(ab, expected);
    }
}

#[test]
fn contact_mixed_contact_is_the_identity() {
    let mut rng = Rng::new(0xf0_0002);
    let params = CorpusParams {
        max_terms: 3,
        ..CorpusParams::default()
    };
    for _ in 0..500 {
        let sig = corpus::signature(&mut rng);
        let n = sig.base_len();
        let k = rng.below(3) as usize;
        let s = rng.below(n as u64 + 1) as usize;
        let phi = corpus::form(&sig, k, s, &params, &mut rng);
        assert_eq!(phi.to_mixed(&sig).to_contact(&sig), phi);
    }
}

#[test]
fn mixed_contact_mixed_is_the_identity() {
    let mut rng = Rng::new(0xf0_0003);
    let params = CorpusParams {
        max_terms: 3,
        ..CorpusParams::default()
    };
    for _ in 0..100 {
        let sig = corpus::signature(&mut rng);
        let n = sig.base_len();
        let k = rng.below(3) as usize;
        let s = rng.below(n as u64 + 1) as usize;
        // exercise the reverse direction through a contact-built form
        let phi = corpus::form(&sig, k, s, &params, &mut rng).to_mixed(&sig);
        assert_eq!(phi.to_contact(&sig).to_mixed(&sig), phi);
    }
}

#[test]
fn projections_reassemble_and_are_idempotent() {
    let mut rng = Rng::new(0xf0_0004);
    let params = CorpusParams::default();
    for _ in 0..60 {
        let sig = corpus::signature(&mut rng);
        let n = sig.base_len();
        // an inhomogeneous sum of two random bidegrees
        let a = corpus::form(
            &sig,
            rng.below(2) as usize,
            rng.below(n as u64 + 1) as usize,
            &params,
            &mut rng,
        );
        let b = corpus::form(
            &sig,
            1 + rng.below(2) as usize,
            rng.below(n as u64 + 1) as usize,
            &params,
            &mut rng,
        );
        let phi = &a + &b;

        let mut reassembled = Form::zero();
        for (k, s) in phi.bidegrees() {
            let piece = phi.project_contact(k).project_horizontal(s);
            assert_eq!(piece.project_contact(k), piece);
            assert_eq!(piece.project_horizontal(s), piece);
            // the two projections commute
            assert_eq!(piece, phi.project_horizontal(s).project_contact(k));
            reassembled.add_assign(&piece);
        }
        assert_eq!(reassembled, phi);
    }
}
