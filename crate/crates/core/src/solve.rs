//! Bounded-order horizontal-potential solver.
//!
//! Solves `d_H(xi) = sigma` exactly for `xi` of bidegree `(k, s-1)` by
//! linear algebra over a monomial ansatz: coefficients range over all
//! polynomial monomials within the requested jet order and degree, wedge
//! parts over all `(k, s-1)` monomials with contact factors within the jet
//! order. Two prunings keep the system small without losing solutions:
//!
//! - `d_H` preserves the per-field degree (jet factors and contact factors
//!   both count), so only ansatz elements whose field multidegree occurs
//!   in `sigma` can participate;
//! - a support closure keeps only elements whose images are connected to
//!   `sigma`'s support; dropped elements could only ever cancel among
//!   themselves, so any solution restricts to one over the kept set.
//!
//! The returned potential is deterministic: columns are eliminated in
//! canonical monomial order and non-pivot coordinates are set to zero.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::calculus::dh;
use crate::error::{Error, Result};
use crate::expr::{Expression, Factor, Monomial};
use crate::form::{Form, WedgeFactor, WedgeMonomial};
use crate::jet::{enumerate_jets, BundleSignature, JetVariable};
use crate::variational::Bounds;
use crate::Rational;

/// A fully resolved coordinate of the target space: wedge monomial plus
/// one polynomial monomial of its coefficient.
type TermKey = (WedgeMonomial, Monomial);

fn resolve(form: &Form) -> BTreeMap<TermKey, Rational> {
    let mut out = BTreeMap::new();
    for (w, c) in form.terms() {
        for (m, q) in c.terms() {
            out.insert((w.clone(), m.clone()), q.clone());
        }
    }
    out
}

/// Per-field degree vector of an ansatz element or a resolved target key.
fn multidegree(sig: &BundleSignature, w: &WedgeMonomial, m: &Monomial) -> Option<Vec<u32>> {
    let mut degrees = alloc::vec![0u32; sig.fiber_len()];
    for (factor, exp) in m.factors() {
        match factor {
            Factor::Base(_) => {}
            Factor::Jet(v) => degrees[v.field] += exp,
            // atoms are not degree-homogeneous; no filtering possible
            Factor::Atom(_) => return None,
        }
    }
    for v in w.thetas() {
        degrees[v.field] += 1;
    }
    Some(degrees)
}

fn choose<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut current: Vec<T> = Vec::new();
    fn rec<T: Clone>(
        items: &[T],
        k: usize,
        start: usize,
        current: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for pos in start..items.len() {
            current.push(items[pos].clone());
            rec(items, k, pos + 1, current, out);
            current.pop();
        }
    }
    rec(items, k, 0, &mut current, &mut out);
    out
}

/// Enumerates all monomials of total degree `<= max_degree` over the given
/// symbols, in ascending canonical order.
fn coefficient_monomials(symbols: &[Factor], max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u32; symbols.len()];
    fn rec(
        symbols: &[Factor],
        exps: &mut Vec<u32>,
        pos: usize,
        left: u32,
        out: &mut Vec<Monomial>,
    ) {
        if pos == symbols.len() {
            let mut e = Expression::one();
            for (factor, &exp) in symbols.iter().zip(exps.iter()) {
                if exp == 0 {
                    continue;
                }
                let single = match factor {
                    Factor::Base(lambda) => Expression::base(*lambda),
                    Factor::Jet(v) => Expression::jet(v.clone()),
                    Factor::Atom(_) => unreachable!("ansatz symbols are polynomial"),
                };
                e = &e * &single.int_pow(exp);
            }
            let (m, _) = e.terms().next().expect("monomial expression is nonzero");
            out.push(m.clone());
            return;
        }
        for exp in 0..=left {
            exps[pos] = exp;
            rec(symbols, exps, pos + 1, left - exp, out);
            exps[pos] = 0;
        }
    }
    rec(symbols, &mut exps, 0, max_degree, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Solves `d_H(xi) = sigma` within the ansatz bounds; `None` when no
/// potential exists there. Absence at given bounds proves nothing
/// globally.
pub(crate) fn solve_dh_potential(
    sig: &BundleSignature,
    sigma: &Form,
    bounds: &Bounds,
) -> Result<Option<Form>> {
    if bounds.max_poly_degree == 0 {
        return Err(Error::InvalidBounds(String::from(
            "max_poly_degree must be positive",
        )));
    }
    if sigma.is_zero() {
        return Ok(Some(Form::zero()));
    }
    let Some((k, s)) = sigma.single_bidegree() else {
        return Err(Error::Bidegree {
            expected: String::from("homogeneous (k, s)"),
            found: alloc::format!("{:?}", sigma.bidegrees()),
        });
    };
    if s == 0 {
        // no (k, -1) forms exist
        return Ok(None);
    }

    let jets = enumerate_jets(sig, bounds.max_jet_order);
    let mut symbols: Vec<Factor> = (0..sig.base_len()).map(Factor::Base).collect();
    symbols.extend(jets.iter().cloned().map(Factor::Jet));
    let coeff_monomials = coefficient_monomials(&symbols, bounds.max_poly_degree);

    let dx_choices = choose(&(0..sig.base_len()).collect::<Vec<_>>(), s - 1);
    let theta_choices: Vec<Vec<JetVariable>> = choose(&jets, k);

    let target = resolve(sigma);
    let target_degrees: BTreeSet<Option<Vec<u32>>> =
        target.keys().map(|(w, m)| multidegree(sig, w, m)).collect();
    let filter_by_degree = !target_degrees.contains(&None);

    // enumerate ansatz elements in canonical order, pruned by multidegree
    struct Element {
        wedge: WedgeMonomial,
        mono: Monomial,
        image: BTreeMap<TermKey, Rational>,
    }
    let mut elements: Vec<Element> = Vec::new();
    for dxs in &dx_choices {
        for thetas in &theta_choices {
            let mut factors: Vec<WedgeFactor> =
                dxs.iter().map(|&lambda| WedgeFactor::Dx(lambda)).collect();
            factors.extend(thetas.iter().cloned().map(WedgeFactor::Theta));
            let Some((wedge, _)) = WedgeMonomial::from_sequence(&factors) else {
                continue;
            };
            for mono in &coeff_monomials {
                if filter_by_degree && !target_degrees.contains(&multidegree(sig, &wedge, mono)) {
                    continue;
                }
                let basis_form = Form::from_term(
                    wedge.clone(),
                    Expression::from_term(mono.clone(), Rational::one()),
                );
                let image = resolve(&dh(sig, &basis_form));
                if image.is_empty() {
                    continue;
                }
                elements.push(Element {
                    wedge: wedge.clone(),
                    mono: mono.clone(),
                    image,
                });
            }
        }
    }

    // support closure from sigma's support
    let mut keys: BTreeSet<TermKey> = target.keys().cloned().collect();
    let mut active = alloc::vec![false; elements.len()];
    loop {
        let mut changed = false;
        for (pos, element) in elements.iter().enumerate() {
            if active[pos] {
                continue;
            }
            if element.image.keys().any(|key| keys.contains(key)) {
                active[pos] = true;
                keys.extend(element.image.keys().cloned());
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let columns: Vec<&Element> = elements
        .iter()
        .enumerate()
        .filter(|(pos, _)| active[*pos])
        .map(|(_, e)| e)
        .collect();

    // assemble the sparse system over the closed key set
    let row_of: BTreeMap<&TermKey, usize> = keys
        .iter()
        .enumerate()
        .map(|(row, key)| (key, row))
        .collect();
    let mut rows: Vec<BTreeMap<usize, Rational>> = alloc::vec![BTreeMap::new(); keys.len()];
    let mut occupancy: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new(); columns.len()];
    for (col, element) in columns.iter().enumerate() {
        for (key, value) in element.image.iter() {
            let row = row_of[key];
            rows[row].insert(col, value.clone());
            occupancy[col].insert(row);
        }
    }
    let mut rhs: Vec<Rational> = alloc::vec![Rational::zero(); keys.len()];
    for (key, value) in target.iter() {
        rhs[row_of[key]] = value.clone();
    }

    let Some(solution) = gauss_jordan(&mut rows, &mut occupancy, &mut rhs, columns.len()) else {
        return Ok(None);
    };

    let mut xi = Form::zero();
    for (col, value) in solution.iter().enumerate() {
        if value.is_zero() {
            continue;
        }
        xi.add_term(
            columns[col].wedge.clone(),
            Expression::from_term(columns[col].mono.clone(), value.clone()),
        );
    }
    let mut residual = dh(sig, &xi);
    for (w, c) in sigma.terms() {
        residual.add_term(w.clone(), -c);
    }
    if !residual.is_zero() {
        return Err(Error::Internal(String::from(
            "potential solver produced a non-solution",
        )));
    }
    Ok(Some(xi))
}

/// Sparse exact Gauss-Jordan elimination, columns processed in order,
/// free variables set to zero. Returns `None` when inconsistent.
fn gauss_jordan(
    rows: &mut [BTreeMap<usize, Rational>],
    occupancy: &mut [BTreeSet<usize>],
    rhs: &mut [Rational],
    ncols: usize,
) -> Option<Vec<Rational>> {
    let mut pivot_row_of_col: BTreeMap<usize, usize> = BTreeMap::new();
    let mut used = alloc::vec![false; rows.len()];
    for col in 0..ncols {
        let pivot = occupancy[col]
            .iter()
            .copied()
            .filter(|&row| !used[row] && rows[row].contains_key(&col))
            .min_by_key(|&row| (rows[row].len(), row));
        let Some(pivot) = pivot else {
            continue;
        };
        used[pivot] = true;
        pivot_row_of_col.insert(col, pivot);
        let lead = rows[pivot][&col].clone();
        let normalized: BTreeMap<usize, Rational> =
            rows[pivot].iter().map(|(&c, v)| (c, v / &lead)).collect();
        rows[pivot] = normalized;
        rhs[pivot] = &rhs[pivot] / &lead;

        let victims: Vec<usize> = occupancy[col]
            .iter()
            .copied()
            .filter(|&r| r != pivot)
            .collect();
        for victim in victims {
            let Some(factor) = rows[victim].get(&col).cloned() else {
                occupancy[col].remove(&victim);
                continue;
            };
            let pivot_entries: Vec<(usize, Rational)> =
                rows[pivot].iter().map(|(&c, v)| (c, v.clone())).collect();
            for (c, v) in pivot_entries {
                let delta = &factor * &v;
                let entry = rows[victim].entry(c).or_insert_with(Rational::zero);
                *entry -= delta;
                if entry.is_zero() {
                    rows[victim].remove(&c);
                    occupancy[c].remove(&victim);
                } else {
                    occupancy[c].insert(victim);
                }
            }
            let delta = &factor * &rhs[pivot];
            rhs[victim] -= delta;
        }
    }
    for (row, row_used) in used.iter().enumerate() {
        // a never-pivoted row ends with empty coefficients, so its
        // equation reads 0 == rhs
        if !row_used && !rhs[row].is_zero() {
            return None;
        }
    }
    let mut solution = alloc::vec![Rational::zero(); ncols];
    for (col, row) in pivot_row_of_col {
        solution[col] = rhs[row].clone();
    }
    Some(solution)
}
