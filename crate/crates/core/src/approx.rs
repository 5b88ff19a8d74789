//! Rational approximation of the elementary atoms for numeric evaluation.
//!
//! The polynomial core evaluates exactly; only `sin`, `cos`, `exp` need
//! approximation. Each is summed as an exact rational series with a
//! rigorous truncation bound, so the returned rational is within
//! `10^-ATOM_EPS_DIGITS` of the true value.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::expr::ElemFunc;
use crate::Rational;

/// Guaranteed absolute precision of atom evaluation, in decimal digits.
pub const ATOM_EPS_DIGITS: u32 = 40;

fn eps() -> Rational {
    // two guard digits over the stated precision
    Rational::new(BigInt::one(), BigInt::from(10u8).pow(ATOM_EPS_DIGITS + 2))
}

pub(crate) fn elem(func: ElemFunc, arg: &Rational) -> Rational {
    match func {
        ElemFunc::Sin => sin(arg),
        ElemFunc::Cos => cos(arg),
        ElemFunc::Exp => exp(arg),
    }
}

/// Alternating series in `q^2`; once the term index passes `|q|` the terms
/// decrease, so the tail is bounded by the first omitted term.
fn sin(q: &Rational) -> Rational {
    let q2 = q * q;
    let mut term = q.clone(); // q^(2j+1)/(2j+1)!
    let mut sum = Rational::zero();
    let mut j: u64 = 0;
    let eps = eps();
    loop {
        sum += &term;
        let next = -&term * &q2 / Rational::from_integer(BigInt::from((2 * j + 2) * (2 * j + 3)));
        let decreasing =
            Rational::from_integer(BigInt::from((2 * j + 2) * (2 * j + 3))) > &q2 * Rational::one();
        if decreasing && next.abs() < eps {
            return sum;
        }
        term = next;
        j += 1;
    }
}

fn cos(q: &Rational) -> Rational {
    let q2 = q * q;
    let mut term = Rational::one(); // q^(2j)/(2j)!
    let mut sum = Rational::zero();
    let mut j: u64 = 0;
    let eps = eps();
    loop {
        sum += &term;
        let next = -&term * &q2 / Rational::from_integer(BigInt::from((2 * j + 1) * (2 * j + 2)));
        let decreasing = Rational::from_integer(BigInt::from((2 * j + 1) * (2 * j + 2))) > q2;
        if decreasing && next.abs() < eps {
            return sum;
        }
        term = next;
        j += 1;
    }
}

/// For `q >= 0` the tail after a term with index `k >= 2q` is bounded by
/// twice the next term; negative arguments go through the reciprocal,
/// which at worst doubles the error (`e^q >= 1` there).
fn exp(q: &Rational) -> Rational {
    if q.is_negative() {
        let pos = exp(&-q.clone());
        return Rational::one() / pos;
    }
    let mut term = Rational::one(); // q^k/k!
    let mut sum = Rational::zero();
    let mut k: u64 = 0;
    let eps = eps();
    let two_q = q * Rational::from_integer(BigInt::from(2));
    loop {
        sum += &term;
        let next = &term * q / Rational::from_integer(BigInt::from(k + 1));
        let past_ratio = Rational::from_integer(BigInt::from(k + 1)) > two_q;
        if past_ratio && next.abs() < &eps / Rational::from_integer(BigInt::from(2)) {
            return sum;
        }
        term = next;
        k += 1;
    }
}
