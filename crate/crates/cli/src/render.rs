//! LaTeX rendering of expressions and forms. Text rendering lives with
//! the core types (it is the shared grammar); JSON embeds those text
//! renderings as strings.

use jetvar_core::expr::{Expression, Factor};
use jetvar_core::form::{Form, SourceForm, WedgeMonomial};
use jetvar_core::jet::{BundleSignature, JetVariable};
use jetvar_core::Rational;
use num_traits::{One, Signed};

fn latex_rational_abs(q: &Rational) -> String {
    let q = q.abs();
    if q.is_integer() {
        format!("{}", q.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn latex_jet(sig: &BundleSignature, v: &JetVariable) -> String {
    let mut out = sig.fiber_name(v.field).to_string();
    if v.order() > 0 {
        out.push_str("_{");
        for lambda in v.index.iter_indices() {
            out.push_str(sig.base_name(lambda));
        }
        out.push('}');
    }
    out
}

fn latex_factor(sig: &BundleSignature, factor: &Factor, exp: u32) -> String {
    let base = match factor {
        Factor::Base(lambda) => sig.base_name(*lambda).to_string(),
        Factor::Jet(v) => latex_jet(sig, v),
        Factor::Atom(atom) => {
            let name = match atom.func.name() {
                "sin" => "\\sin",
                "cos" => "\\cos",
                _ => "\\exp",
            };
            format!("{name}\\left({}\\right)", latex_expression(sig, &atom.arg))
        }
    };
    if exp > 1 {
        format!("{base}^{{{exp}}}")
    } else {
        base
    }
}

pub fn latex_expression(sig: &BundleSignature, e: &Expression) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, (m, c)) in e.terms().enumerate() {
        if pos == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_is_one = c.abs().is_one();
        let mut factors: Vec<String> = Vec::new();
        if m.is_one() || !coeff_is_one {
            factors.push(latex_rational_abs(c));
        }
        for (factor, exp) in m.factors() {
            factors.push(latex_factor(sig, factor, exp));
        }
        out.push_str(&factors.join("\\,"));
    }
    out
}

fn latex_wedge_factors(sig: &BundleSignature, m: &WedgeMonomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    for v in m.thetas() {
        let mut theta = format!("\\theta^{{{}}}", sig.fiber_name(v.field));
        if v.order() > 0 {
            theta.push_str("_{");
            for lambda in v.index.iter_indices() {
                theta.push_str(sig.base_name(lambda));
            }
            theta.push('}');
        }
        parts.push(theta);
    }
    for &lambda in m.dx() {
        parts.push(format!("d{}", sig.base_name(lambda)));
    }
    parts.join("\\wedge ")
}

/// Terms printed contact block first, matching the text renderer.
pub fn latex_form(sig: &BundleSignature, form: &Form) -> String {
    if form.is_zero() {
        return "0".to_string();
    }
    let single_term = form.terms().count() == 1;
    let mut out = String::new();
    for (pos, (m, c)) in form.terms().enumerate() {
        let flip = (m.horizontal_degree() * m.contact_degree()) % 2 == 1;
        let shown = if flip { -c } else { c.clone() };
        if m.degree() == 0 {
            if pos > 0 {
                out.push_str(" + ");
            }
            if single_term {
                out.push_str(&latex_expression(sig, &shown));
            } else {
                out.push_str(&format!("\\left({}\\right)", latex_expression(sig, &shown)));
            }
            continue;
        }
        let (neg, magnitude) = single_signed(&shown);
        if pos == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if magnitude.is_one() {
            // bare factors
        } else if magnitude.term_count() == 1 {
            out.push_str(&latex_expression(sig, &magnitude));
            out.push_str("\\,");
        } else {
            out.push_str(&format!(
                "\\left({}\\right)\\,",
                latex_expression(sig, &magnitude)
            ));
        }
        out.push_str(&latex_wedge_factors(sig, m));
    }
    out
}

fn single_signed(e: &Expression) -> (bool, Expression) {
    if e.term_count() == 1 {
        let (_, coeff) = e.terms().next().unwrap();
        if coeff.is_negative() {
            return (true, -e);
        }
    }
    (false, e.clone())
}

pub fn latex_source(sig: &BundleSignature, source: &SourceForm) -> String {
    latex_form(sig, &source.to_form(sig))
}
