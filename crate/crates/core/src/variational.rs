//! Variational calculus on Lagrangian densities: Euler-Lagrange
//! operators, the first variational split with a canonical boundary term,
//! Noether currents and symmetry classification, the Helmholtz check, the
//! master-identity residual, and the bounded-order potential solver.
//!
//! Conventions. The split of `dL` in contact degree 1 is
//! `h_1(dL) = delta L + d_H(phi)`; the boundary term `phi` is produced by
//! a deterministic integration-by-parts descent (highest derivative
//! first, largest base index peeled first), and the symmetry current is
//! `J_u = -(J u _| phi)`. For a first-order density this makes `J_u` the
//! classical Noether current. Currents are canonical modulo
//! `d_H`-closed forms only; reports should say so.
//!
//! Every verdict that depends on the potential solver is local: absence
//! of a potential within bounds proves nothing globally, and closed-form
//! obstructions on the underlying bundle are outside what the engine can
//! detect.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::calculus::{
    contract, dh, dv, lie_derivative, total_derivative, total_derivative_multi, VerticalField,
};
use crate::error::{Error, Result};
use crate::expr::Expression;
use crate::form::{Form, SourceForm, WedgeFactor};
use crate::jet::{BundleSignature, JetVariable};
use crate::solve::solve_dh_potential;
use crate::Rational;

/// A Lagrangian `L = density * omega` of finite jet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lagrangian {
    sig: BundleSignature,
    density: Expression,
}

impl Lagrangian {
    pub fn new(sig: BundleSignature, density: Expression) -> Self {
        Lagrangian { sig, density }
    }

    pub fn signature(&self) -> &BundleSignature {
        &self.sig
    }

    pub fn density(&self) -> &Expression {
        &self.density
    }

    /// The horizontal (0, n) form `density * omega`.
    pub fn form(&self) -> Form {
        Form::horizontal_density(&self.sig, self.density.clone())
    }

    pub fn jet_order(&self) -> u32 {
        self.density.effective_order()
    }

    pub fn has_atoms(&self) -> bool {
        self.density.has_atoms()
    }
}

/// Ansatz bounds for the potential solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_jet_order: u32,
    pub max_poly_degree: u32,
}

impl Bounds {
    pub fn new(max_jet_order: u32, max_poly_degree: u32) -> Self {
        Bounds {
            max_jet_order,
            max_poly_degree,
        }
    }

    /// Default bounds for solving `d_H(xi) = phi`: one jet order above the
    /// input, same coefficient degree (degree at least 1).
    pub fn for_form(phi: &Form) -> Self {
        Bounds {
            max_jet_order: phi.jet_order() + 1,
            max_poly_degree: phi.coefficient_degree().max(1),
        }
    }
}

/// Result of the first variational formula `dL = delta L + d_H(phi)` in
/// contact degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariationalSplit {
    /// `delta L`, the Euler-Lagrange source form.
    pub el: SourceForm,
    /// The boundary term `phi` of bidegree (1, n-1).
    pub boundary: Form,
    /// Whether `h_1(dL) - el - d_H(phi) == 0` was verified exactly.
    pub residual_checked: bool,
}

/// Symmetry classification of a vertical field against a Lagrangian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    /// `L_u L = 0`.
    Exact,
    /// `L_u L = d_H(sigma)` with `sigma` found within bounds.
    Divergence,
    /// Not exact, and no potential found within the ansatz bounds; this is
    /// a bounded-search verdict, not a proof of asymmetry.
    NoneAtOrder,
}

impl SymmetryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SymmetryKind::Exact => "exact",
            SymmetryKind::Divergence => "divergence",
            SymmetryKind::NoneAtOrder => "none-at-order",
        }
    }
}

/// Full output of the Noether analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub kind: SymmetryKind,
    /// The computed Lie derivative `L_u L`, a (0, n) form.
    pub lie: Form,
    /// Potential with `d_H(sigma) = lie` (divergence case only).
    pub sigma: Option<Form>,
    /// The conserved current: `J_u` when exact, `J_u - sigma` for a
    /// divergence symmetry; canonical modulo `d_H`-closed forms.
    pub current: Option<Form>,
    /// Exact check of `d_H(current) + u _| delta L == 0` (the off-shell
    /// form of the conservation law; the divergence lies in the ideal of
    /// the Euler-Lagrange components).
    pub onshell_identity_checked: bool,
    /// Exact check of `L_u L - u _| delta L + d_H(u _| phi) == 0`.
    pub first_variational_checked: bool,
    /// Ansatz bounds the potential search used.
    pub bounds_used: Bounds,
    /// False when opaque atoms make zero-testing incomplete.
    pub zero_test_complete: bool,
}

/// The Euler-Lagrange operator by direct expansion:
/// `E_i = sum over Lambda of (-1)^|Lambda| d_Lambda(d density / dy^i_Lambda)`.
///
/// The independent `tau . d` route is [`crate::calculus::delta_var`]; the
/// two must agree exactly, and the test suites keep that as a standing
/// cross-check.
pub fn euler_lagrange(lagrangian: &Lagrangian) -> SourceForm {
    let sig = &lagrangian.sig;
    let mut out = SourceForm::zero();
    for v in lagrangian.density.jet_vars() {
        let partial = lagrangian.density.partial_jet(&v);
        if partial.is_zero() {
            continue;
        }
        let mut contribution = total_derivative_multi(sig, &partial, &v.index);
        if v.order() % 2 == 1 {
            contribution = -&contribution;
        }
        let mut component = out.component(v.field);
        component.add_assign(&contribution);
        out.set_component(v.field, component);
    }
    out
}

/// `omega_lambda = d/dx^lambda _| omega` as a wedge factor list with its
/// sign: the volume form with `dx^lambda` removed, times `(-1)^lambda`.
fn omega_contracted(sig: &BundleSignature, lambda: usize) -> (Vec<WedgeFactor>, Rational) {
    let factors: Vec<WedgeFactor> = (0..sig.base_len())
        .filter(|&mu| mu != lambda)
        .map(WedgeFactor::Dx)
        .collect();
    let sign = if lambda % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };
    (factors, sign)
}

/// The first variational split `h_1(dL) = delta L + d_H(phi)`, with `phi`
/// built by the deterministic descent
/// `f theta^i_{lambda+Lambda} ^ omega =
///  -d_lambda(f) theta^i_Lambda ^ omega - d_H(f theta^i_Lambda ^ omega_lambda)`,
/// peeling the largest base index of the highest jet variable first.
pub fn first_variational_split(lagrangian: &Lagrangian) -> VariationalSplit {
    let sig = &lagrangian.sig;

    // h_1(dL) = sum (d density / dy^i_Lambda) theta^i_Lambda ^ omega
    let mut work: BTreeMap<JetVariable, Expression> = BTreeMap::new();
    for v in lagrangian.density.jet_vars() {
        let partial = lagrangian.density.partial_jet(&v);
        if !partial.is_zero() {
            work.insert(v, partial);
        }
    }

    let mut el = SourceForm::zero();
    let mut boundary = Form::zero();
    while let Some((v, coeff)) = work.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        if v.order() == 0 {
            let mut component = el.component(v.field);
            component.add_assign(&coeff);
            el.set_component(v.field, component);
            continue;
        }
        let lambda = v.index.largest_index().expect("order >= 1");
        let lowered = JetVariable::new(v.field, v.index.remove(lambda).expect("count > 0"));

        // -d_lambda(f) continues the descent at one order lower
        let continued = -&total_derivative(sig, &coeff, lambda);
        if !continued.is_zero() {
            let mut entry = work.remove(&lowered).unwrap_or_else(Expression::zero);
            entry.add_assign(&continued);
            if entry.is_zero() {
                work.remove(&lowered);
            } else {
                work.insert(lowered.clone(), entry);
            }
        }

        // boundary accrues -f theta^i_Lambda ^ omega_lambda
        let (omega_rest, omega_sign) = omega_contracted(sig, lambda);
        let mut factors = alloc::vec![WedgeFactor::Theta(lowered)];
        factors.extend(omega_rest);
        boundary.add_assign(&Form::from_factors(-&coeff.scale(&omega_sign), &factors));
    }

    // exact residual check against the independent d_V route
    let d_contact_1 = dv(sig, &lagrangian.form()).project_contact(1);
    let mut residual = &el.to_form(sig) + &dh(sig, &boundary);
    for (m, c) in d_contact_1.terms() {
        residual.add_term(m.clone(), -c);
    }
    VariationalSplit {
        el,
        boundary,
        residual_checked: residual.is_zero(),
    }
}

/// Noether analysis of a vertical field `u` against `L`.
///
/// Computes `lie = L_u L`; when zero the symmetry is exact with current
/// `J_u = -(J u _| phi)`. Otherwise, if `lie` is variationally trivial, a
/// potential `sigma` with `d_H(sigma) = lie` is sought within bounds and
/// the modified current `J_u - sigma` is conserved. Failing both, the
/// verdict is none-at-order (a value, not an error). All residual
/// identities are verified exactly and recorded.
pub fn noether(
    lagrangian: &Lagrangian,
    field: &VerticalField,
    bounds: Option<Bounds>,
) -> Result<SymmetryReport> {
    let sig = &lagrangian.sig;
    let split = first_variational_split(lagrangian);
    if !split.residual_checked {
        return Err(Error::Internal(String::from(
            "first variational split residual is nonzero",
        )));
    }
    let el_form = split.el.to_form(sig);
    let lie = lie_derivative(sig, field, &lagrangian.form());
    let noether_current = -&contract(sig, field, &split.boundary);
    let bounds_used = bounds.unwrap_or_else(|| Bounds::for_form(&lie));
    let zero_test_complete = !lagrangian.has_atoms() && !field.has_atoms();

    // first variational formula: lie - u _| delta L + d_H(u _| phi) == 0
    let mut hn_residual = &lie - &contract(sig, field, &el_form);
    hn_residual.add_assign(&dh(sig, &contract(sig, field, &split.boundary)));
    let first_variational_checked = hn_residual.is_zero();

    let (kind, sigma, current) = if lie.is_zero() {
        (SymmetryKind::Exact, None, Some(noether_current))
    } else {
        // only d_H-exact Lie derivatives admit a potential; test
        // variational triviality first so hopeless searches are skipped
        let lie_density = Lagrangian::new(sig.clone(), density_of(sig, &lie)?);
        if !euler_lagrange(&lie_density).is_zero() {
            (SymmetryKind::NoneAtOrder, None, None)
        } else {
            match solve_dh_potential(sig, &lie, &bounds_used)? {
                Some(sigma) => {
                    let current = &noether_current - &sigma;
                    (SymmetryKind::Divergence, Some(sigma), Some(current))
                }
                None => (SymmetryKind::NoneAtOrder, None, None),
            }
        }
    };

    let onshell_identity_checked = match &current {
        Some(current) => {
            let mut residual = dh(sig, current);
            residual.add_assign(&contract(sig, field, &el_form));
            residual.is_zero()
        }
        None => false,
    };

    Ok(SymmetryReport {
        kind,
        lie,
        sigma,
        current,
        onshell_identity_checked,
        first_variational_checked,
        bounds_used,
        zero_test_complete,
    })
}

/// Reads the scalar density off a (0, n) form.
fn density_of(sig: &BundleSignature, form: &Form) -> Result<Expression> {
    let volume = crate::form::WedgeMonomial::volume(sig);
    let mut density = Expression::zero();
    for (m, c) in form.terms() {
        if *m != volume {
            return Err(Error::Bidegree {
                expected: String::from("(0, n)"),
                found: alloc::format!("{:?}", form.bidegrees()),
            });
        }
        density = c.clone();
    }
    Ok(density)
}

/// Helmholtz verdict for a source form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HelmholtzVerdict {
    /// `delta(E)`, the (2, n) obstruction; empty iff locally variational.
    pub obstruction: Form,
    /// Local verdict: closed-form obstructions on the underlying bundle
    /// are not detectable here.
    pub variational: bool,
    pub zero_test_complete: bool,
}

/// Applies the Helmholtz-Sonin map `delta` to a source form; the source
/// form is locally variational iff the obstruction vanishes.
pub fn helmholtz_check(sig: &BundleSignature, source: &SourceForm) -> HelmholtzVerdict {
    let obstruction = crate::calculus::delta_var(sig, &source.to_form(sig))
        .expect("source forms have horizontal degree n");
    HelmholtzVerdict {
        variational: obstruction.is_zero(),
        zero_test_complete: !source.has_atoms(),
        obstruction,
    }
}

/// The residual `delta(L_u L) - L_u(delta L)`; identically zero for every
/// Lagrangian and every vertical field whose components live on the
/// underlying bundle (jet order 0), so on that domain this operation is
/// an executable theorem and any nonzero output is an engine bug.
///
/// For generalized fields (components of higher jet order) the Lie
/// derivative of a source form leaves the source-form shape and the
/// residual is genuinely nonzero; the identity then holds only after
/// projecting the right-hand side back with the interior Euler operator.
pub fn master_identity_residual(lagrangian: &Lagrangian, field: &VerticalField) -> Result<Form> {
    let sig = &lagrangian.sig;
    let lie_of_l = lie_derivative(sig, field, &lagrangian.form());
    let left = crate::calculus::delta_var(sig, &lie_of_l)?;
    let right = lie_derivative(sig, field, &euler_lagrange(lagrangian).to_form(sig));
    Ok(&left - &right)
}

/// Searches for `xi` with `d_H(xi) = sigma` within the ansatz bounds.
///
/// The result is deterministic (canonical monomial order, free
/// coordinates zero). `None` proves nothing globally: a potential of
/// higher order or degree, or a closed-form obstruction on the underlying
/// bundle, may exist. For (0, n) inputs the caller should first confirm
/// variational triviality.
pub fn find_horizontal_potential(
    sig: &BundleSignature,
    sigma: &Form,
    bounds: Bounds,
) -> Result<Option<Form>> {
    solve_dh_potential(sig, sigma, &bounds)
}

/// Outcome of splitting a (k, n) form into source part and divergence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceDecomposition {
    /// `tau(psi)`, the source part.
    pub source: Form,
    /// `xi` with `d_H(xi) = psi - tau(psi)`, when found within bounds.
    pub potential: Option<Form>,
    /// Whether `psi == source + d_H(potential)` was verified exactly.
    pub residual_checked: bool,
}

/// Realizes the direct-sum decomposition of (k, n) forms into source
/// forms plus horizontal differentials. The remainder `psi - tau(psi)` is
/// always `d_H`-exact in principle; the solver may still miss it at the
/// given bounds, in which case the potential is reported absent.
pub fn decompose_source(
    sig: &BundleSignature,
    psi: &Form,
    bounds: Bounds,
) -> Result<SourceDecomposition> {
    if !psi.is_horizontal_degree(sig.base_len()) {
        return Err(Error::Bidegree {
            expected: String::from("horizontal degree n"),
            found: alloc::format!("{:?}", psi.bidegrees()),
        });
    }
    let source = crate::calculus::tau(sig, psi);
    let remainder = psi - &source;
    let potential = solve_dh_potential(sig, &remainder, &bounds)?;
    let residual_checked = match &potential {
        Some(xi) => {
            let mut residual = &source + &dh(sig, xi);
            for (m, c) in psi.terms() {
                residual.add_term(m.clone(), -c);
            }
            residual.is_zero()
        }
        None => false,
    };
    Ok(SourceDecomposition {
        source,
        potential,
        residual_checked,
    })
}

/// `delta L == 0`: exact, local verdict (a trivial Lagrangian is locally
/// a total divergence).
pub fn is_variationally_trivial(lagrangian: &Lagrangian) -> bool {
    euler_lagrange(lagrangian).is_zero()
}
