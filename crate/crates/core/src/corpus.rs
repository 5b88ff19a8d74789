//! Deterministic random corpora for the verification suites.
//!
//! The generators are seeded and platform-independent (a SplitMix64
//! stream with fixed constants), so every suite that consumes them is
//! reproducible bit for bit; determinism of results under reruns is
//! itself one of the things the suites assert.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::calculus::VerticalField;
use crate::expr::Expression;
use crate::form::{Form, WedgeFactor};
use crate::jet::{enumerate_jets, BundleSignature, JetVariable};
use crate::variational::Lagrangian;
use crate::Rational;

/// SplitMix64 stream; small, seedable, identical everywhere.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Small nonzero rational: numerator in `-9..=9`, denominator in
    /// `1..=3`.
    pub fn rational(&mut self) -> Rational {
        let numer = loop {
            let candidate = self.below(19) as i64 - 9;
            if candidate != 0 {
                break candidate;
            }
        };
        let denom = self.below(3) as i64 + 1;
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Size caps for generated objects.
#[derive(Debug, Clone, Copy)]
pub struct CorpusParams {
    pub max_jet_order: u32,
    pub max_degree: u32,
    pub max_terms: usize,
    pub with_atoms: bool,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_jet_order: 2,
            max_degree: 3,
            max_terms: 4,
            with_atoms: false,
        }
    }
}

/// One of the four small signatures (`n <= 2`, `m <= 2`) with fixed
/// coordinate names.
pub fn signature(rng: &mut Rng) -> BundleSignature {
    let bases: &[&[&str]] = &[&["x"], &["x", "t"]];
    let fibers: &[&[&str]] = &[&["u"], &["u", "v"]];
    let base = bases[rng.below(2) as usize];
    let fiber = fibers[rng.below(2) as usize];
    BundleSignature::new(base, fiber).expect("fixed names are valid")
}

/// Random polynomial expression within the caps; may be zero.
pub fn expression(sig: &BundleSignature, params: &CorpusParams, rng: &mut Rng) -> Expression {
    let jets = enumerate_jets(sig, params.max_jet_order);
    let mut pool: Vec<Expression> = (0..sig.base_len()).map(Expression::base).collect();
    pool.extend(jets.into_iter().map(Expression::jet));

    let terms = 1 + rng.below(params.max_terms.max(1) as u64) as usize;
    let mut out = Expression::zero();
    for _ in 0..terms {
        let mut term = Expression::constant(rng.rational());
        let degree = rng.below(params.max_degree as u64 + 1) as u32;
        for _ in 0..degree {
            let factor = &pool[rng.below(pool.len() as u64) as usize];
            term = &term * factor;
        }
        if params.with_atoms && rng.chance(1, 4) {
            let arg = &pool[rng.below(pool.len() as u64) as usize];
            let atom = match rng.below(3) {
                0 => Expression::sin(arg.clone()),
                1 => Expression::cos(arg.clone()),
                _ => Expression::exp(arg.clone()),
            };
            term = &term * &atom;
        }
        out.add_assign(&term);
    }
    out
}

/// Random expression resampled until nonzero.
pub fn nonzero_expression(
    sig: &BundleSignature,
    params: &CorpusParams,
    rng: &mut Rng,
) -> Expression {
    loop {
        let e = expression(sig, params, rng);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Random homogeneous form of bidegree `(k, s)`; zero when `k` exceeds
/// the contact generator pool.
pub fn form(
    sig: &BundleSignature,
    contact: usize,
    horizontal: usize,
    params: &CorpusParams,
    rng: &mut Rng,
) -> Form {
    let n = sig.base_len();
    assert!(horizontal <= n, "horizontal degree exceeds base dimension");
    let jets = enumerate_jets(sig, params.max_jet_order);
    let terms = 1 + rng.below(params.max_terms.max(1) as u64) as usize;
    let mut out = Form::zero();
    for _ in 0..terms {
        // choose `horizontal` distinct base indices
        let mut dx_pool: Vec<usize> = (0..n).collect();
        let mut factors: Vec<WedgeFactor> = Vec::new();
        for _ in 0..horizontal {
            let pos = rng.below(dx_pool.len() as u64) as usize;
            factors.push(WedgeFactor::Dx(dx_pool.remove(pos)));
        }
        // choose `contact` distinct jet variables
        let mut theta_pool: Vec<JetVariable> = jets.clone();
        if theta_pool.len() < contact {
            return Form::zero();
        }
        for _ in 0..contact {
            let pos = rng.below(theta_pool.len() as u64) as usize;
            factors.push(WedgeFactor::Theta(theta_pool.remove(pos)));
        }
        let coeff = nonzero_expression(sig, params, rng);
        out.add_assign(&Form::from_factors(coeff, &factors));
    }
    out
}

/// Random Lagrangian density within the caps.
pub fn lagrangian(sig: &BundleSignature, params: &CorpusParams, rng: &mut Rng) -> Lagrangian {
    Lagrangian::new(sig.clone(), nonzero_expression(sig, params, rng))
}

/// Random vertical field with components of jet order at most
/// `component_order`; roughly one in three fields has some component
/// identically zero, covering the vanishing-component regime.
pub fn vertical_field(
    sig: &BundleSignature,
    component_order: u32,
    params: &CorpusParams,
    rng: &mut Rng,
) -> VerticalField {
    let component_params = CorpusParams {
        max_jet_order: component_order,
        max_degree: params.max_degree.min(2),
        max_terms: 2,
        with_atoms: params.with_atoms,
    };
    let mut out = VerticalField::zero();
    for field in 0..sig.fiber_len() {
        if rng.chance(1, 3) {
            continue; // u^i = 0 identically
        }
        out.set_component(field, expression(sig, &component_params, rng));
    }
    out
}

/// A nonzero scalar of the kind `rational * y^i`: handy as a guaranteed
/// nonzero low-order building block.
pub fn simple_field_scalar(sig: &BundleSignature, rng: &mut Rng) -> Expression {
    let field = rng.below(sig.fiber_len() as u64) as usize;
    Expression::jet(JetVariable::base_field(sig.base_len(), field)).scale(&{
        let mut q = rng.rational();
        if q.is_one() {
            q = Rational::one();
        }
        q
    })
}
