//! Differential forms on jet space in the contact basis.
//!
//! A [`Form`] is a finite sum of terms `coefficient * wedge monomial`,
//! where the wedge monomial is a product of horizontal generators
//! `dx^lambda` and contact generators `theta^i_Lambda`. Monomials are
//! stored canonically: the `dx` block first (ascending base index), then
//! the `theta` block (ascending canonical jet order), with the permutation
//! parity of any construction path folded into the coefficient, so any
//! two constructions of the same form compare equal structurally.
//!
//! A [`MixedForm`] is the same structure over the naive exterior basis
//! `{dx^lambda, dy^i_Lambda}`; it exists only at the exterior-derivative
//! boundary and for input conversion, via [`MixedForm::to_contact`] /
//! [`Form::to_mixed`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::expr::{fmt_jet, Expression};
use crate::jet::{BundleSignature, JetVariable, MultiIndex};
use crate::Rational;

/// Sorts 1-form factors, returning the parity of the permutation, or
/// `None` when a factor repeats (the wedge term vanishes).
fn sort_with_parity<T: Ord + Clone>(mut xs: Vec<T>) -> Option<(Vec<T>, bool)> {
    // insertion sort with transposition count; factor lists are short
    let mut odd = false;
    for i in 1..xs.len() {
        let mut j = i;
        while j > 0 && xs[j - 1] > xs[j] {
            xs.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    for pair in xs.windows(2) {
        if pair[0] == pair[1] {
            return None;
        }
    }
    Some((xs, odd))
}

/// A 1-form generator in the contact basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum WedgeFactor {
    Dx(usize),
    Theta(JetVariable),
}

/// Canonical wedge monomial: `dx` block then `theta` block, both strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct WedgeMonomial {
    dx: Vec<usize>,
    thetas: Vec<JetVariable>,
}

impl WedgeMonomial {
    /// The empty monomial (the scalar 1).
    pub fn scalar() -> Self {
        WedgeMonomial::default()
    }

    /// Canonicalizes a factor sequence; the sign is the permutation parity
    /// relative to the stored order, `None` when a factor repeats.
    pub fn from_sequence(factors: &[WedgeFactor]) -> Option<(Self, Rational)> {
        let (sorted, odd) = sort_with_parity(factors.to_vec())?;
        let mut dx = Vec::new();
        let mut thetas = Vec::new();
        for factor in sorted {
            match factor {
                WedgeFactor::Dx(lambda) => dx.push(lambda),
                WedgeFactor::Theta(v) => thetas.push(v),
            }
        }
        let sign = if odd {
            -Rational::one()
        } else {
            Rational::one()
        };
        Some((WedgeMonomial { dx, thetas }, sign))
    }

    /// The volume monomial `dx^0 ^ ... ^ dx^(n-1)`.
    pub fn volume(sig: &BundleSignature) -> Self {
        WedgeMonomial {
            dx: (0..sig.base_len()).collect(),
            thetas: Vec::new(),
        }
    }

    /// Assembles a monomial from blocks already in canonical order.
    pub(crate) fn from_sorted_parts(dx: Vec<usize>, thetas: Vec<JetVariable>) -> Self {
        debug_assert!(dx.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(thetas.windows(2).all(|w| w[0] < w[1]));
        WedgeMonomial { dx, thetas }
    }

    pub fn dx(&self) -> &[usize] {
        &self.dx
    }

    pub fn thetas(&self) -> &[JetVariable] {
        &self.thetas
    }

    /// Contact degree `k`.
    pub fn contact_degree(&self) -> usize {
        self.thetas.len()
    }

    /// Horizontal degree `s`.
    pub fn horizontal_degree(&self) -> usize {
        self.dx.len()
    }

    pub fn degree(&self) -> usize {
        self.dx.len() + self.thetas.len()
    }

    /// The factor sequence in stored order.
    pub fn factors(&self) -> Vec<WedgeFactor> {
        self.dx
            .iter()
            .map(|&lambda| WedgeFactor::Dx(lambda))
            .chain(self.thetas.iter().cloned().map(WedgeFactor::Theta))
            .collect()
    }
}

/// Element of the graded algebra of forms, graded by (contact,
/// horizontal) bidegree term by term. Zero coefficients are purged, so
/// structural equality is form equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Form {
    terms: BTreeMap<WedgeMonomial, Expression>,
}

impl Form {
    pub fn zero() -> Self {
        Form::default()
    }

    /// A (0,0)-form.
    pub fn from_expression(e: Expression) -> Self {
        Form::from_term(WedgeMonomial::scalar(), e)
    }

    pub fn from_term(monomial: WedgeMonomial, coeff: Expression) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Form { terms }
    }

    /// Builds `coeff * f_1 ^ ... ^ f_r` from an arbitrary factor sequence.
    pub fn from_factors(coeff: Expression, factors: &[WedgeFactor]) -> Self {
        match WedgeMonomial::from_sequence(factors) {
            None => Form::zero(),
            Some((monomial, sign)) => Form::from_term(monomial, coeff.scale(&sign)),
        }
    }

    /// The Lagrangian-style volume form `e * omega`.
    pub fn horizontal_density(sig: &BundleSignature, e: Expression) -> Self {
        Form::from_term(WedgeMonomial::volume(sig), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &Expression)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, monomial: &WedgeMonomial) -> Expression {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Expression::zero)
    }

    pub fn add_term(&mut self, monomial: WedgeMonomial, coeff: Expression) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Form) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// Multiplies every coefficient by a scalar function (wedge with a
    /// 0-form; no signs involved).
    pub fn scale_expr(&self, e: &Expression) -> Form {
        let mut out = Form::zero();
        for (m, c) in self.terms.iter() {
            out.add_term(m.clone(), c * e);
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Form {
        let mut out = Form::zero();
        for (m, c) in self.terms.iter() {
            out.add_term(m.clone(), c.scale(q));
        }
        out
    }

    /// Graded-commutative wedge product.
    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                let mut factors = ma.factors();
                factors.extend(mb.factors());
                if let Some((monomial, sign)) = WedgeMonomial::from_sequence(&factors) {
                    out.add_term(monomial, (ca * cb).scale(&sign));
                }
            }
        }
        out
    }

    /// Selects the terms of contact degree `k` (the projection `h_k`).
    pub fn project_contact(&self, k: usize) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.contact_degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Selects the terms of horizontal degree `s` (the projection `h^s`).
    pub fn project_horizontal(&self, s: usize) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.horizontal_degree() == s)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The horizontal projection `h_0 . h^n`.
    pub fn h0(&self, sig: &BundleSignature) -> Form {
        self.project_horizontal(sig.base_len()).project_contact(0)
    }

    /// All bidegrees `(k, s)` present.
    pub fn bidegrees(&self) -> BTreeSet<(usize, usize)> {
        self.terms
            .keys()
            .map(|m| (m.contact_degree(), m.horizontal_degree()))
            .collect()
    }

    /// The bidegree when the form is homogeneous and nonzero.
    pub fn single_bidegree(&self) -> Option<(usize, usize)> {
        let degrees = self.bidegrees();
        if degrees.len() == 1 {
            degrees.into_iter().next()
        } else {
            None
        }
    }

    /// True when every term has horizontal degree `s` (vacuously for 0).
    pub fn is_horizontal_degree(&self, s: usize) -> bool {
        self.terms.keys().all(|m| m.horizontal_degree() == s)
    }

    /// Maximal jet order over coefficients and theta factors.
    pub fn jet_order(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let theta_order = m.thetas.iter().map(|v| v.order()).max().unwrap_or(0);
                theta_order.max(c.effective_order())
            })
            .max()
            .unwrap_or(0)
    }

    /// Maximal coefficient degree over the terms.
    pub fn coefficient_degree(&self) -> u32 {
        self.terms
            .values()
            .map(|c| c.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn has_atoms(&self) -> bool {
        self.terms.values().any(|c| c.has_atoms())
    }

    /// Conversion to the naive exterior basis, substituting
    /// `theta^i_Lambda = dy^i_Lambda - y^i_{lambda+Lambda} dx^lambda`.
    pub fn to_mixed(&self, sig: &BundleSignature) -> MixedForm {
        let mut out = MixedForm::zero();
        for (m, c) in self.terms.iter() {
            let mut acc = MixedForm::from_term(
                MixedMonomial {
                    dx: m.dx.clone(),
                    dy: Vec::new(),
                },
                c.clone(),
            );
            for v in m.thetas.iter() {
                let mut one_form =
                    MixedForm::from_factors(Expression::one(), &[MixedFactor::Dy(v.clone())]);
                for lambda in 0..sig.base_len() {
                    let raised = Expression::jet(v.raise(lambda).expect("base index in range"));
                    one_form.add_assign(&MixedForm::from_factors(
                        -&raised,
                        &[MixedFactor::Dx(lambda)],
                    ));
                }
                acc = acc.wedge(&one_form);
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Render against a signature (terms printed theta block first).
    pub fn display<'a>(&'a self, sig: &'a BundleSignature) -> FormDisplay<'a> {
        FormDisplay { form: self, sig }
    }
}

/// A 1-form generator of the naive exterior basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum MixedFactor {
    Dx(usize),
    Dy(JetVariable),
}

/// Canonical monomial over `{dx, dy}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MixedMonomial {
    dx: Vec<usize>,
    dy: Vec<JetVariable>,
}

impl MixedMonomial {
    pub fn from_sequence(factors: &[MixedFactor]) -> Option<(Self, Rational)> {
        let (sorted, odd) = sort_with_parity(factors.to_vec())?;
        let mut dx = Vec::new();
        let mut dy = Vec::new();
        for factor in sorted {
            match factor {
                MixedFactor::Dx(lambda) => dx.push(lambda),
                MixedFactor::Dy(v) => dy.push(v),
            }
        }
        let sign = if odd {
            -Rational::one()
        } else {
            Rational::one()
        };
        Some((MixedMonomial { dx, dy }, sign))
    }

    pub fn dx(&self) -> &[usize] {
        &self.dx
    }

    pub fn dy(&self) -> &[JetVariable] {
        &self.dy
    }

    pub fn factors(&self) -> Vec<MixedFactor> {
        self.dx
            .iter()
            .map(|&lambda| MixedFactor::Dx(lambda))
            .chain(self.dy.iter().cloned().map(MixedFactor::Dy))
            .collect()
    }
}

/// Form over the naive exterior basis; input representation ahead of
/// [`MixedForm::to_contact`], and the codomain of the plain exterior
/// derivative used as an independent route in tests.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MixedForm {
    terms: BTreeMap<MixedMonomial, Expression>,
}

impl MixedForm {
    pub fn zero() -> Self {
        MixedForm::default()
    }

    pub fn from_expression(e: Expression) -> Self {
        MixedForm::from_term(MixedMonomial::default(), e)
    }

    pub fn from_term(monomial: MixedMonomial, coeff: Expression) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        MixedForm { terms }
    }

    pub fn from_factors(coeff: Expression, factors: &[MixedFactor]) -> Self {
        match MixedMonomial::from_sequence(factors) {
            None => MixedForm::zero(),
            Some((monomial, sign)) => MixedForm::from_term(monomial, coeff.scale(&sign)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MixedMonomial, &Expression)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, monomial: MixedMonomial, coeff: Expression) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MixedForm) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn wedge(&self, other: &MixedForm) -> MixedForm {
        let mut out = MixedForm::zero();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                let mut factors = ma.factors();
                factors.extend(mb.factors());
                if let Some((monomial, sign)) = MixedMonomial::from_sequence(&factors) {
                    out.add_term(monomial, (ca * cb).scale(&sign));
                }
            }
        }
        out
    }

    /// Conversion to the contact basis, substituting
    /// `dy^i_Lambda = theta^i_Lambda + y^i_{lambda+Lambda} dx^lambda`.
    pub fn to_contact(&self, sig: &BundleSignature) -> Form {
        let mut out = Form::zero();
        for (m, c) in self.terms.iter() {
            let mut acc = Form::from_term(
                WedgeMonomial {
                    dx: m.dx.clone(),
                    thetas: Vec::new(),
                },
                c.clone(),
            );
            for v in m.dy.iter() {
                let mut one_form =
                    Form::from_factors(Expression::one(), &[WedgeFactor::Theta(v.clone())]);
                for lambda in 0..sig.base_len() {
                    let raised = Expression::jet(v.raise(lambda).expect("base index in range"));
                    one_form.add_assign(&Form::from_factors(raised, &[WedgeFactor::Dx(lambda)]));
                }
                acc = acc.wedge(&one_form);
            }
            out.add_assign(&acc);
        }
        out
    }

    /// The horizontal projection `h_0 . h^n` through the contact basis.
    pub fn h0(&self, sig: &BundleSignature) -> Form {
        self.to_contact(sig).h0(sig)
    }
}

impl core::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl core::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl core::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Element of `E_1`: a source form `sum_i E_i theta^i ^ omega`, the shape
/// of Euler-Lagrange operators. Only order-0 contact factors occur.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SourceForm {
    components: BTreeMap<usize, Expression>,
}

impl SourceForm {
    pub fn zero() -> Self {
        SourceForm::default()
    }

    pub fn from_components<I: IntoIterator<Item = (usize, Expression)>>(components: I) -> Self {
        let mut out = SourceForm::zero();
        for (field, e) in components {
            out.set_component(field, e);
        }
        out
    }

    pub fn set_component(&mut self, field: usize, e: Expression) {
        if e.is_zero() {
            self.components.remove(&field);
        } else {
            self.components.insert(field, e);
        }
    }

    pub fn component(&self, field: usize) -> Expression {
        self.components
            .get(&field)
            .cloned()
            .unwrap_or_else(Expression::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Expression)> {
        self.components.iter().map(|(&i, e)| (i, e))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn has_atoms(&self) -> bool {
        self.components.values().any(|e| e.has_atoms())
    }

    pub fn jet_order(&self) -> u32 {
        self.components
            .values()
            .map(|e| e.effective_order())
            .max()
            .unwrap_or(0)
    }

    /// The (1, n) form `sum_i E_i theta^i ^ omega`.
    pub fn to_form(&self, sig: &BundleSignature) -> Form {
        let mut out = Form::zero();
        for (&field, e) in self.components.iter() {
            let mut factors = alloc::vec![WedgeFactor::Theta(JetVariable::base_field(
                sig.base_len(),
                field
            ))];
            factors.extend((0..sig.base_len()).map(WedgeFactor::Dx));
            out.add_assign(&Form::from_factors(e.clone(), &factors));
        }
        out
    }

    /// Reads a source form back off a (1, n) form whose contact factors
    /// are all of order 0.
    pub fn try_from_form(sig: &BundleSignature, form: &Form) -> Result<Self> {
        let n = sig.base_len();
        let mut out = SourceForm::zero();
        for (m, c) in form.terms.iter() {
            let shape_ok =
                m.horizontal_degree() == n && m.contact_degree() == 1 && m.thetas[0].order() == 0;
            if !shape_ok {
                return Err(Error::Bidegree {
                    expected: String::from("(1, n) with order-0 contact factor"),
                    found: alloc::format!(
                        "({}, {}) with top theta order {}",
                        m.contact_degree(),
                        m.horizontal_degree(),
                        m.thetas.iter().map(|v| v.order()).max().unwrap_or(0)
                    ),
                });
            }
            // stored monomial is omega ^ theta^i = (-1)^n theta^i ^ omega
            let sign = if n % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            let field = m.thetas[0].field;
            let mut e = out.component(field);
            e.add_assign(&c.scale(&sign));
            out.set_component(field, e);
        }
        Ok(out)
    }
}

/// Display wrapper for [`Form`].
pub struct FormDisplay<'a> {
    form: &'a Form,
    sig: &'a BundleSignature,
}

fn fmt_wedge_factors(
    f: &mut fmt::Formatter<'_>,
    sig: &BundleSignature,
    m: &WedgeMonomial,
) -> fmt::Result {
    let mut first = true;
    for v in m.thetas.iter() {
        if !first {
            write!(f, "^")?;
        }
        first = false;
        write!(f, "theta[{}", sig.fiber_name(v.field))?;
        if v.order() > 0 {
            write!(f, "; ")?;
            for (pos, lambda) in v.index.iter_indices().enumerate() {
                if pos > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", sig.base_name(lambda))?;
            }
        }
        write!(f, "]")?;
    }
    for &lambda in m.dx.iter() {
        if !first {
            write!(f, "^")?;
        }
        first = false;
        write!(f, "d{}", sig.base_name(lambda))?;
    }
    Ok(())
}

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.form.terms.is_empty() {
            return write!(f, "0");
        }
        let single_term = self.form.terms.len() == 1;
        for (pos, (m, c)) in self.form.terms.iter().enumerate() {
            // present theta block first: dxS ^ thetaT = (-1)^(s*k) thetaT ^ dxS
            let flip = (m.horizontal_degree() * m.contact_degree()) % 2 == 1;
            let shown = if flip { -c } else { c.clone() };
            if m.degree() == 0 {
                // scalar part: a lone term prints raw, otherwise parenthesized
                if pos > 0 {
                    write!(f, " + ")?;
                }
                if single_term {
                    write!(f, "{}", shown.display(self.sig))?;
                } else {
                    write!(f, "({})", shown.display(self.sig))?;
                }
                continue;
            }
            let (neg, magnitude) = if shown.term_count() == 1 {
                let (_, coeff) = shown.terms().next().unwrap();
                if coeff.is_negative() {
                    (true, -&shown)
                } else {
                    (false, shown.clone())
                }
            } else {
                (false, shown.clone())
            };
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if magnitude.is_one() {
                // coefficient 1: factors only
            } else if magnitude.term_count() == 1 {
                write!(f, "{}*", magnitude.display(self.sig))?;
            } else {
                write!(f, "({})*", magnitude.display(self.sig))?;
            }
            fmt_wedge_factors(f, self.sig, m)?;
        }
        Ok(())
    }
}

/// Wrapper displaying a jet variable with coordinate names.
pub struct JetDisplay<'a> {
    pub sig: &'a BundleSignature,
    pub var: &'a JetVariable,
}

impl fmt::Display for JetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_jet(f, self.sig, self.var)
    }
}

/// Convenience constructor for `theta^i_Lambda` as a form.
pub fn theta(sig: &BundleSignature, field: usize, indices: &[usize]) -> Form {
    let mi = MultiIndex::from_indices(sig.base_len(), indices).expect("base index in range");
    Form::from_factors(
        Expression::one(),
        &[WedgeFactor::Theta(JetVariable::new(field, mi))],
    )
}

/// Convenience constructor for `dx^lambda` as a form.
pub fn dx(lambda: usize) -> Form {
    Form::from_factors(Expression::one(), &[WedgeFactor::Dx(lambda)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::JetVariable;

    fn sig1() -> BundleSignature {
        BundleSignature::new(&["x"], &["y"]).unwrap()
    }

    fn jet_y(indices: &[usize]) -> JetVariable {
        JetVariable::new(0, MultiIndex::from_indices(1, indices).unwrap())
    }

    #[test]
    fn wedge_alternation_and_anticommutation() {
        let dx0 = dx(0);
        assert!(dx0.wedge(&dx0).is_zero());

        let sig = sig1();
        let th = theta(&sig, 0, &[]);
        let th_dx = th.wedge(&dx0);
        let dx_th = dx0.wedge(&th);
        assert_eq!(th_dx, -&dx_th);
        assert!(!th_dx.is_zero());

        // bilinearity with a scalar coefficient
        let y = Expression::jet(jet_y(&[]));
        let lhs = Form::from_expression(y.clone())
            .wedge(&dx0)
            .wedge(&theta(&sig, 0, &[0]));
        let rhs = dx0.wedge(&theta(&sig, 0, &[0])).scale_expr(&y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn to_contact_examples() {
        let sig = sig1();
        // dy = theta + y_x dx
        let dy = MixedForm::from_factors(Expression::one(), &[MixedFactor::Dy(jet_y(&[]))]);
        let expected = &theta(&sig, 0, &[]) + &dx(0).scale_expr(&Expression::jet(jet_y(&[0])));
        assert_eq!(dy.to_contact(&sig), expected);

        // dy_x = theta_x + y_xx dx
        let dy_x = MixedForm::from_factors(Expression::one(), &[MixedFactor::Dy(jet_y(&[0]))]);
        let expected = &theta(&sig, 0, &[0]) + &dx(0).scale_expr(&Expression::jet(jet_y(&[0, 0])));
        assert_eq!(dy_x.to_contact(&sig), expected);

        // dy ^ dx = theta ^ dx
        let dy_dx = MixedForm::from_factors(
            Expression::one(),
            &[MixedFactor::Dy(jet_y(&[])), MixedFactor::Dx(0)],
        );
        assert_eq!(dy_dx.to_contact(&sig), theta(&sig, 0, &[]).wedge(&dx(0)));
    }

    #[test]
    fn projections() {
        let sig = sig1();
        // h0(dy) = y_x dx
        let dy = MixedForm::from_factors(Expression::one(), &[MixedFactor::Dy(jet_y(&[]))]);
        assert_eq!(dy.h0(&sig), dx(0).scale_expr(&Expression::jet(jet_y(&[0]))));

        let th_dx = theta(&sig, 0, &[]).wedge(&dx(0));
        assert_eq!(th_dx.project_contact(1), th_dx);
        assert!(th_dx.project_contact(0).is_zero());

        // h0 is the identity on horizontal densities
        let density = Form::horizontal_density(&sig, Expression::jet(jet_y(&[0])));
        assert_eq!(density.h0(&sig), density);

        // sum over bidegrees reassembles the form
        let mixed = &th_dx + &density;
        let mut reassembled = Form::zero();
        for (k, s) in mixed.bidegrees() {
            reassembled.add_assign(&mixed.project_contact(k).project_horizontal(s));
        }
        assert_eq!(reassembled, mixed);
    }

    #[test]
    fn form_equality() {
        let sig = sig1();
        let a = dx(0).wedge(&theta(&sig, 0, &[]));
        let b = -&theta(&sig, 0, &[]).wedge(&dx(0));
        assert_eq!(a, b);

        let dy = MixedForm::from_factors(Expression::one(), &[MixedFactor::Dy(jet_y(&[]))]);
        let contact = &theta(&sig, 0, &[]) + &dx(0).scale_expr(&Expression::jet(jet_y(&[0])));
        assert_eq!(dy.to_contact(&sig), contact);

        let y_x_dx = dx(0).scale_expr(&Expression::jet(jet_y(&[0])));
        let y_dx = dx(0).scale_expr(&Expression::jet(jet_y(&[])));
        assert_ne!(y_x_dx, y_dx);
    }

    #[test]
    fn source_form_round_trip() {
        let sig = sig1();
        let mut source = SourceForm::zero();
        source.set_component(0, -&Expression::jet(jet_y(&[0, 0])));
        let form = source.to_form(&sig);
        assert_eq!(form.single_bidegree(), Some((1, 1)));
        let back = SourceForm::try_from_form(&sig, &form).unwrap();
        assert_eq!(back, source);

        // higher-order theta is rejected
        let bad = theta(&sig, 0, &[0]).wedge(&dx(0));
        assert!(SourceForm::try_from_form(&sig, &bad).is_err());
    }

    #[test]
    fn display_theta_first() {
        let sig = sig1();
        // stored dx ^ theta; displayed as theta-first with flipped sign
        let stored = dx(0).wedge(&theta(&sig, 0, &[]));
        assert_eq!(alloc::format!("{}", stored.display(&sig)), "-theta[y]^dx");
        let mut source = SourceForm::zero();
        source.set_component(0, -&Expression::jet(jet_y(&[0, 0])));
        let rendered = alloc::format!("{}", source.to_form(&sig).display(&sig));
        assert_eq!(rendered, "-y[x,x]*theta[y]^dx");
    }
}
