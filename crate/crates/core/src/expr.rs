//! Exact scalar expressions over base coordinates and jet variables.
//!
//! An [`Expression`] is a canonical multivariate polynomial with exact
//! rational coefficients in the indeterminates `{x^lambda} U {y^i_Lambda}`,
//! optionally extended by opaque elementary atoms (`sin`, `cos`, `exp` of a
//! sub-expression) whose derivatives are table-driven. Two expressions are
//! equal iff their canonical forms coincide; on the polynomial core this
//! decides semantic equality, with atoms present it is sound but
//! incomplete (`sin(u)^2 + cos(u)^2 - 1` is nonzero syntactically). Callers
//! that need to report on completeness can consult [`Expression::has_atoms`].
//!
//! There is no floating point anywhere in this module.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::approx;
use crate::error::{Error, Result};
use crate::jet::{BundleSignature, JetVariable};
use crate::Rational;

pub use crate::approx::ATOM_EPS_DIGITS;

/// Elementary functions kept as opaque atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElemFunc {
    Sin,
    Cos,
    Exp,
}

impl ElemFunc {
    pub fn name(self) -> &'static str {
        match self {
            ElemFunc::Sin => "sin",
            ElemFunc::Cos => "cos",
            ElemFunc::Exp => "exp",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "sin" => Some(ElemFunc::Sin),
            "cos" => Some(ElemFunc::Cos),
            "exp" => Some(ElemFunc::Exp),
            _ => None,
        }
    }
}

/// An opaque atom `f(arg)` with a canonical argument.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Atom {
    pub func: ElemFunc,
    pub arg: Arc<Expression>,
}

/// A single multiplicative indeterminate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Factor {
    /// Base coordinate `x^lambda`.
    Base(usize),
    /// Jet variable `y^i_Lambda`.
    Jet(JetVariable),
    /// Opaque elementary atom.
    Atom(Atom),
}

/// A polynomial indeterminate that can be bound or differentiated by name:
/// atoms are composite and excluded.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Symbol {
    Base(usize),
    Jet(JetVariable),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Base(lambda) => write!(f, "x{lambda}"),
            Symbol::Jet(v) => write!(f, "{v}"),
        }
    }
}

/// A power product of factors, sorted and with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Monomial {
    factors: Vec<(Factor, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    fn single(factor: Factor) -> Self {
        Monomial {
            factors: alloc::vec![(factor, 1)],
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Factor, u32)> {
        self.factors.iter().map(|(f, e)| (f, *e))
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| *e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors: Vec<(Factor, u32)> =
            Vec::with_capacity(self.factors.len() + other.factors.len());
        let mut a = self.factors.iter().peekable();
        let mut b = other.factors.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((fa, ea)), Some((fb, eb))) => match fa.cmp(fb) {
                    core::cmp::Ordering::Less => {
                        factors.push((fa.clone(), *ea));
                        a.next();
                    }
                    core::cmp::Ordering::Greater => {
                        factors.push((fb.clone(), *eb));
                        b.next();
                    }
                    core::cmp::Ordering::Equal => {
                        factors.push((fa.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    factors.extend(a.by_ref().cloned());
                    break;
                }
                (None, Some(_)) => {
                    factors.extend(b.by_ref().cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { factors }
    }

    /// The monomial with the exponent at `pos` lowered by one.
    fn lower_exp(&self, pos: usize) -> Monomial {
        let mut factors = self.factors.clone();
        if factors[pos].1 > 1 {
            factors[pos].1 -= 1;
        } else {
            factors.remove(pos);
        }
        Monomial { factors }
    }
}

/// Exact scalar expression in canonical form.
///
/// The canonical form is a sorted term map `monomial -> coefficient` with
/// zero coefficients purged, so structural equality is semantic equality on
/// the polynomial core and normalization is idempotent by construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Expression {
    terms: BTreeMap<Monomial, Rational>,
}

impl Expression {
    pub fn zero() -> Self {
        Expression {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Expression::from_integer(1)
    }

    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), q);
        }
        Expression { terms }
    }

    pub fn from_integer(k: i64) -> Self {
        Expression::constant(Rational::from_integer(BigInt::from(k)))
    }

    /// The base coordinate `x^lambda`.
    pub fn base(lambda: usize) -> Self {
        Expression::from_term(Monomial::single(Factor::Base(lambda)), Rational::one())
    }

    /// The jet variable `y^i_Lambda`.
    pub fn jet(v: JetVariable) -> Self {
        Expression::from_term(Monomial::single(Factor::Jet(v)), Rational::one())
    }

    pub fn sin(arg: Expression) -> Self {
        Expression::atom(ElemFunc::Sin, arg)
    }

    pub fn cos(arg: Expression) -> Self {
        Expression::atom(ElemFunc::Cos, arg)
    }

    pub fn exp(arg: Expression) -> Self {
        Expression::atom(ElemFunc::Exp, arg)
    }

    /// `f(arg)` as an expression; a zero argument collapses by table
    /// (`sin 0 = 0`, `cos 0 = exp 0 = 1`).
    pub fn atom(func: ElemFunc, arg: Expression) -> Self {
        if arg.is_zero() {
            return match func {
                ElemFunc::Sin => Expression::zero(),
                ElemFunc::Cos | ElemFunc::Exp => Expression::one(),
            };
        }
        let atom = Atom {
            func,
            arg: Arc::new(arg),
        };
        Expression::from_term(Monomial::single(Factor::Atom(atom)), Rational::one())
    }

    pub(crate) fn from_term(monomial: Monomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Expression { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The rational value if the expression is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Expression) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, q: &Rational) -> Expression {
        if q.is_zero() {
            return Expression::zero();
        }
        Expression {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// `self^k` for `k >= 0`.
    pub fn int_pow(&self, k: u32) -> Expression {
        let mut acc = Expression::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to a named indeterminate;
    /// every other indeterminate is held fixed, atoms follow the chain
    /// rule with the table `sin' = cos`, `cos' = -sin`, `exp' = exp`.
    pub fn partial(&self, sym: &Symbol) -> Expression {
        let mut out = Expression::zero();
        for (m, c) in self.terms.iter() {
            for (pos, (factor, exp)) in m.factors.iter().enumerate() {
                match factor {
                    Factor::Base(lambda) => {
                        if *sym == Symbol::Base(*lambda) {
                            let coeff = c * Rational::from_integer(BigInt::from(*exp));
                            out.add_term(m.lower_exp(pos), coeff);
                        }
                    }
                    Factor::Jet(v) => {
                        if *sym == Symbol::Jet(v.clone()) {
                            let coeff = c * Rational::from_integer(BigInt::from(*exp));
                            out.add_term(m.lower_exp(pos), coeff);
                        }
                    }
                    Factor::Atom(atom) => {
                        let inner = atom.arg.partial(sym);
                        if inner.is_zero() {
                            continue;
                        }
                        let outer = atom_derivative(atom);
                        let rest = Expression::from_term(
                            m.lower_exp(pos),
                            c * Rational::from_integer(BigInt::from(*exp)),
                        );
                        out.add_assign(&(&(&rest * &outer) * &inner));
                    }
                }
            }
        }
        out
    }

    /// `d/dx^lambda` treating every jet variable as an independent symbol.
    pub fn partial_base(&self, lambda: usize) -> Expression {
        self.partial(&Symbol::Base(lambda))
    }

    /// `d/dy^i_Lambda`.
    pub fn partial_jet(&self, v: &JetVariable) -> Expression {
        self.partial(&Symbol::Jet(v.clone()))
    }

    /// Simultaneous substitution: bindings apply to the original symbols
    /// only, results are not re-substituted.
    pub fn substitute(&self, bindings: &BTreeMap<Symbol, Expression>) -> Expression {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = Expression::zero();
        for (m, c) in self.terms.iter() {
            let mut acc = Expression::constant(c.clone());
            for (factor, exp) in m.factors.iter() {
                let piece = match factor {
                    Factor::Base(lambda) => match bindings.get(&Symbol::Base(*lambda)) {
                        Some(repl) => repl.int_pow(*exp),
                        None => Expression::from_term(
                            Monomial {
                                factors: alloc::vec![(factor.clone(), *exp)],
                            },
                            Rational::one(),
                        ),
                    },
                    Factor::Jet(v) => match bindings.get(&Symbol::Jet(v.clone())) {
                        Some(repl) => repl.int_pow(*exp),
                        None => Expression::from_term(
                            Monomial {
                                factors: alloc::vec![(factor.clone(), *exp)],
                            },
                            Rational::one(),
                        ),
                    },
                    Factor::Atom(atom) => {
                        let arg = atom.arg.substitute(bindings);
                        Expression::atom(atom.func, arg).int_pow(*exp)
                    }
                };
                acc = &acc * &piece;
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Exact rational evaluation. Every symbol present must be bound;
    /// atoms are approximated to [`ATOM_EPS_DIGITS`] decimal digits of
    /// absolute precision, so the result is exact on the polynomial core
    /// and a stated-precision rational otherwise.
    pub fn eval(&self, point: &BTreeMap<Symbol, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in self.terms.iter() {
            let mut value = c.clone();
            for (factor, exp) in m.factors.iter() {
                let base = match factor {
                    Factor::Base(lambda) => point
                        .get(&Symbol::Base(*lambda))
                        .cloned()
                        .ok_or_else(|| Error::MissingBinding(Symbol::Base(*lambda).to_string()))?,
                    Factor::Jet(v) => point
                        .get(&Symbol::Jet(v.clone()))
                        .cloned()
                        .ok_or_else(|| Error::MissingBinding(Symbol::Jet(v.clone()).to_string()))?,
                    Factor::Atom(atom) => approx::elem(atom.func, &atom.arg.eval(point)?),
                };
                value *= pow_rational(&base, *exp);
            }
            total += value;
        }
        Ok(total)
    }

    /// Effective jet order: the maximal `|Lambda|` over jet variables
    /// actually present (atom arguments included); 0 when no jet variable
    /// occurs.
    pub fn effective_order(&self) -> u32 {
        self.jet_vars().iter().map(|v| v.order()).max().unwrap_or(0)
    }

    /// All jet variables occurring in the expression, atom arguments
    /// included.
    pub fn jet_vars(&self) -> BTreeSet<JetVariable> {
        let mut out = BTreeSet::new();
        self.collect_jet_vars(&mut out);
        out
    }

    fn collect_jet_vars(&self, out: &mut BTreeSet<JetVariable>) {
        for m in self.terms.keys() {
            for (factor, _) in m.factors.iter() {
                match factor {
                    Factor::Jet(v) => {
                        out.insert(v.clone());
                    }
                    Factor::Atom(atom) => atom.arg.collect_jet_vars(out),
                    Factor::Base(_) => {}
                }
            }
        }
    }

    /// All bindable symbols occurring in the expression, atom arguments
    /// included.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<Symbol>) {
        for m in self.terms.keys() {
            for (factor, _) in m.factors.iter() {
                match factor {
                    Factor::Base(lambda) => {
                        out.insert(Symbol::Base(*lambda));
                    }
                    Factor::Jet(v) => {
                        out.insert(Symbol::Jet(v.clone()));
                    }
                    Factor::Atom(atom) => atom.arg.collect_symbols(out),
                }
            }
        }
    }

    /// True when an opaque atom occurs anywhere; zero-testing is then
    /// sound but incomplete.
    pub fn has_atoms(&self) -> bool {
        self.terms.keys().any(|m| {
            m.factors
                .iter()
                .any(|(factor, _)| matches!(factor, Factor::Atom(_)))
        })
    }

    /// Maximal total degree over the terms, counting atoms by their
    /// exponent.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Render against a signature; the output round-trips through the
    /// shared expression grammar.
    pub fn display<'a>(&'a self, sig: &'a BundleSignature) -> ExprDisplay<'a> {
        ExprDisplay { expr: self, sig }
    }
}

fn pow_rational(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Table derivative of an atom with respect to its own argument.
fn atom_derivative(atom: &Atom) -> Expression {
    let arg = (*atom.arg).clone();
    match atom.func {
        ElemFunc::Sin => Expression::cos(arg),
        ElemFunc::Cos => -&Expression::sin(arg),
        ElemFunc::Exp => Expression::exp(arg),
    }
}

impl core::ops::Add for &Expression {
    type Output = Expression;
    fn add(self, rhs: &Expression) -> Expression {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl core::ops::Sub for &Expression {
    type Output = Expression;
    fn sub(self, rhs: &Expression) -> Expression {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl core::ops::Neg for &Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        Expression {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl core::ops::Mul for &Expression {
    type Output = Expression;
    fn mul(self, rhs: &Expression) -> Expression {
        let mut out = Expression::zero();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Display wrapper carrying coordinate names.
pub struct ExprDisplay<'a> {
    expr: &'a Expression,
    sig: &'a BundleSignature,
}

pub(crate) fn fmt_jet(
    f: &mut fmt::Formatter<'_>,
    sig: &BundleSignature,
    v: &JetVariable,
) -> fmt::Result {
    write!(f, "{}", sig.fiber_name(v.field))?;
    if v.index.order() > 0 {
        write!(f, "[")?;
        for (pos, lambda) in v.index.iter_indices().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", sig.base_name(lambda))?;
        }
        write!(f, "]")?;
    }
    Ok(())
}

fn fmt_factor(
    f: &mut fmt::Formatter<'_>,
    sig: &BundleSignature,
    factor: &Factor,
    exp: u32,
) -> fmt::Result {
    match factor {
        Factor::Base(lambda) => write!(f, "{}", sig.base_name(*lambda))?,
        Factor::Jet(v) => fmt_jet(f, sig, v)?,
        Factor::Atom(atom) => write!(f, "{}({})", atom.func.name(), atom.arg.display(sig))?,
    }
    if exp > 1 {
        write!(f, "^{exp}")?;
    }
    Ok(())
}

fn fmt_rational_abs(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    let q = q.abs();
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.expr.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.expr.terms.iter().enumerate() {
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs_is_one = c.abs().is_one();
            if m.is_one() {
                fmt_rational_abs(f, c)?;
            } else {
                if !abs_is_one {
                    fmt_rational_abs(f, c)?;
                    write!(f, "*")?;
                }
                for (fpos, (factor, exp)) in m.factors.iter().enumerate() {
                    if fpos > 0 {
                        write!(f, "*")?;
                    }
                    fmt_factor(f, self.sig, factor, *exp)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::MultiIndex;

    fn sig1() -> BundleSignature {
        BundleSignature::new(&["x"], &["y"]).unwrap()
    }

    fn y() -> Expression {
        Expression::jet(JetVariable::base_field(1, 0))
    }

    fn y_x() -> Expression {
        Expression::jet(JetVariable::new(
            0,
            MultiIndex::from_indices(1, &[0]).unwrap(),
        ))
    }

    fn y_xx() -> Expression {
        Expression::jet(JetVariable::new(
            0,
            MultiIndex::from_indices(1, &[0, 0]).unwrap(),
        ))
    }

    fn half() -> Rational {
        Rational::new(BigInt::from(1), BigInt::from(2))
    }

    #[test]
    fn ring_axioms_collapse() {
        let y = y();
        assert!((&y + &(-&y)).is_zero());
        let two_y = y.scale(&Rational::from_integer(BigInt::from(2)));
        let three_y = y.scale(&Rational::from_integer(BigInt::from(3)));
        let five_y = y.scale(&Rational::from_integer(BigInt::from(5)));
        assert_eq!(&two_y + &three_y, five_y);
        assert_eq!(&y_x() * &y_x(), y_x().int_pow(2));
    }

    #[test]
    fn partial_base_examples() {
        let x = Expression::base(0);
        let f = &x * &y_x();
        assert_eq!(f.partial_base(0), y_x());
        assert!(y_x().int_pow(2).partial_base(0).is_zero());
        // d/dx (sin(x) * y) = cos(x) * y
        let g = &Expression::sin(x.clone()) * &y();
        assert_eq!(g.partial_base(0), &Expression::cos(x) * &y());
    }

    #[test]
    fn partial_jet_examples() {
        let vx = JetVariable::new(0, MultiIndex::from_indices(1, &[0]).unwrap());
        let vxx = JetVariable::new(0, MultiIndex::from_indices(1, &[0, 0]).unwrap());
        let v0 = JetVariable::base_field(1, 0);

        let kinetic = y_x().int_pow(2).scale(&half());
        assert_eq!(kinetic.partial_jet(&vx), y_x());

        let f = &y() * &y_xx();
        assert_eq!(f.partial_jet(&vxx), y());

        assert!(y_x().partial_jet(&v0).is_zero());
    }

    #[test]
    fn substitution_is_simultaneous() {
        let v0 = JetVariable::base_field(1, 0);
        let vx = JetVariable::new(0, MultiIndex::from_indices(1, &[0]).unwrap());

        let mut bind = BTreeMap::new();
        bind.insert(Symbol::Jet(vx.clone()), Expression::from_integer(3));
        assert_eq!(
            y_x().int_pow(2).substitute(&bind),
            Expression::from_integer(9)
        );

        // y + y_x with y -> y_x must not cascade
        let mut bind = BTreeMap::new();
        bind.insert(Symbol::Jet(v0), y_x());
        let f = &y() + &y_x();
        assert_eq!(
            f.substitute(&bind),
            y_x().scale(&Rational::from_integer(BigInt::from(2)))
        );

        let g = &Expression::base(0) * &y();
        assert_eq!(g.substitute(&BTreeMap::new()), g);
    }

    #[test]
    fn is_zero_and_eval() {
        // (y+1)^2 - y^2 - 2y - 1 == 0
        let yv = y();
        let expanded = (&yv + &Expression::one()).int_pow(2);
        let rest =
            &(&expanded - &yv.int_pow(2)) - &yv.scale(&Rational::from_integer(BigInt::from(2)));
        assert!((&rest - &Expression::one()).is_zero());
        assert!(!y_x().is_zero());

        let mut point = BTreeMap::new();
        point.insert(
            Symbol::Jet(JetVariable::base_field(1, 0)),
            Rational::from_integer(BigInt::from(2)),
        );
        point.insert(
            Symbol::Jet(JetVariable::new(
                0,
                MultiIndex::from_indices(1, &[0]).unwrap(),
            )),
            Rational::from_integer(BigInt::from(3)),
        );
        let f = &y_x() * &y();
        assert_eq!(
            f.eval(&point).unwrap(),
            Rational::from_integer(BigInt::from(6))
        );

        let missing = y_xx().eval(&point);
        assert!(matches!(missing, Err(Error::MissingBinding(_))));
    }

    #[test]
    fn effective_order_tracks_atoms() {
        assert_eq!(Expression::one().effective_order(), 0);
        assert_eq!(y().effective_order(), 0);
        assert_eq!(y_xx().effective_order(), 2);
        assert_eq!(Expression::sin(y_x()).effective_order(), 1);
        assert!(Expression::sin(y_x()).has_atoms());
        assert!(!y_xx().has_atoms());
    }

    #[test]
    fn eval_through_atoms_is_stated_precision() {
        let mut point = BTreeMap::new();
        point.insert(Symbol::Jet(JetVariable::base_field(1, 0)), Rational::one());
        let f = &Expression::sin(y()) * &Expression::from_integer(2);
        let value = f.eval(&point).unwrap();
        let float = num_traits::ToPrimitive::to_f64(&value).unwrap();
        assert!((float - 2.0 * 1f64.sin()).abs() < 1e-12);
    }

    #[test]
    fn atom_zero_argument_collapses() {
        assert!(Expression::sin(Expression::zero()).is_zero());
        assert!(Expression::cos(Expression::zero()).is_one());
        assert!(Expression::exp(Expression::zero()).is_one());
    }

    #[test]
    fn display_round_trip_shape() {
        let sig = sig1();
        let e = &(&y() * &y_x()) - &Expression::constant(half());
        assert_eq!(alloc::format!("{}", e.display(&sig)), "-1/2 + y*y[x]");
        let f = -&y_xx();
        assert_eq!(alloc::format!("{}", f.display(&sig)), "-y[x,x]");
        assert_eq!(alloc::format!("{}", Expression::zero().display(&sig)), "0");
    }
}
