//! Report objects and their text/JSON/LaTeX renderings.
//!
//! The JSON schema is versioned with a top-level `"schema": 1` and uses
//! canonical expression/form strings (re-parseable through the shared
//! grammar). Keys are emitted in sorted order, so identical invocations
//! render byte-identical output. Verdicts that rest on a bounded search
//! or a local theorem carry `"scope": "local"`.

use serde_json::{json, Map, Value};

use jetvar_core::form::{Form, SourceForm};
use jetvar_core::jet::BundleSignature;
use jetvar_core::variational::{
    Bounds, HelmholtzVerdict, SourceDecomposition, SymmetryKind, SymmetryReport, VariationalSplit,
};

use crate::model::Format;
use crate::render::{latex_form, latex_source};

#[derive(Debug, Clone)]
pub enum Report {
    EulerLagrange {
        lagrangian: String,
        el: SourceForm,
    },
    Split {
        lagrangian: String,
        split: VariationalSplit,
    },
    Noether {
        lagrangian: String,
        symmetry: String,
        report: SymmetryReport,
    },
    Lie {
        lagrangian: String,
        symmetry: String,
        lie: Form,
    },
    Trivial {
        lagrangian: String,
        trivial: bool,
        el: SourceForm,
    },
    Helmholtz {
        name: String,
        verdict: HelmholtzVerdict,
    },
    MasterCheck {
        lagrangian: String,
        symmetry: String,
        residual: Form,
        pass: bool,
    },
    Decompose {
        name: String,
        out: SourceDecomposition,
        bounds: Bounds,
    },
    Potential {
        name: String,
        potential: Option<Form>,
        bounds: Bounds,
    },
}

fn form_str(sig: &BundleSignature, form: &Form) -> String {
    format!("{}", form.display(sig))
}

fn bounds_json(bounds: &Bounds) -> Value {
    json!({
        "max_jet_order": bounds.max_jet_order,
        "max_poly_degree": bounds.max_poly_degree,
    })
}

fn source_components_json(sig: &BundleSignature, source: &SourceForm) -> Value {
    let mut map = Map::new();
    for (field, component) in source.components() {
        map.insert(
            sig.fiber_name(field).to_string(),
            Value::String(format!("{}", component.display(sig))),
        );
    }
    Value::Object(map)
}

fn incomplete_warning(out: &mut String, complete: bool) {
    if !complete {
        out.push_str("WARNING: zero-test incomplete (opaque atoms present)\n");
    }
}

impl Report {
    /// True when every zero-test behind the report was complete.
    fn zero_test_complete(&self) -> bool {
        match self {
            Report::EulerLagrange { el, .. } => !el.has_atoms(),
            Report::Split { split, .. } => !split.el.has_atoms() && !split.boundary.has_atoms(),
            Report::Noether { report, .. } => report.zero_test_complete,
            Report::Lie { lie, .. } => !lie.has_atoms(),
            Report::Trivial { el, .. } => !el.has_atoms(),
            Report::Helmholtz { verdict, .. } => verdict.zero_test_complete,
            Report::MasterCheck { residual, .. } => !residual.has_atoms(),
            Report::Decompose { out, .. } => !out.source.has_atoms(),
            Report::Potential { .. } => true,
        }
    }

    pub fn render(&self, sig: &BundleSignature, format: Format) -> String {
        match format {
            Format::Text => self.text(sig),
            Format::Json => {
                let mut value = self.json(sig);
                if let Value::Object(map) = &mut value {
                    map.insert("schema".to_string(), json!(1));
                    map.insert(
                        "completeness_flags".to_string(),
                        json!({"zero_test_complete": self.zero_test_complete()}),
                    );
                }
                // serde_json maps are sorted, so this is deterministic
                let mut rendered = serde_json::to_string_pretty(&value).expect("report serializes");
                rendered.push('\n');
                rendered
            }
            Format::Latex => self.latex(sig),
        }
    }

    fn text(&self, sig: &BundleSignature) -> String {
        let mut out = String::new();
        match self {
            Report::EulerLagrange { lagrangian, el } => {
                out.push_str(&format!("euler-lagrange {lagrangian}\n"));
                for (field, component) in el.components() {
                    out.push_str(&format!(
                        "  E[{}] = {}\n",
                        sig.fiber_name(field),
                        component.display(sig)
                    ));
                }
                if el.is_zero() {
                    out.push_str("  E = 0\n");
                }
                out.push_str(&format!("  delta L = {}\n", el.to_form(sig).display(sig)));
            }
            Report::Split { lagrangian, split } => {
                out.push_str(&format!("variational split of {lagrangian}\n"));
                out.push_str(&format!(
                    "  delta L = {}\n",
                    split.el.to_form(sig).display(sig)
                ));
                out.push_str(&format!(
                    "  boundary phi = {}\n",
                    split.boundary.display(sig)
                ));
                out.push_str(&format!(
                    "  residual check h1(dL) = delta L + dH(phi): {}\n",
                    if split.residual_checked {
                        "exact"
                    } else {
                        "FAILED"
                    }
                ));
            }
            Report::Noether {
                lagrangian,
                symmetry,
                report,
            } => {
                out.push_str(&format!("noether {lagrangian} {symmetry}\n"));
                out.push_str(&format!("  kind: {}\n", report.kind.as_str()));
                out.push_str(&format!("  lie derivative: {}\n", report.lie.display(sig)));
                if let Some(sigma) = &report.sigma {
                    out.push_str(&format!("  sigma = {}\n", sigma.display(sig)));
                }
                match &report.current {
                    Some(current) => {
                        out.push_str(&format!("  current = {}\n", current.display(sig)));
                        out.push_str("  current is canonical modulo d_H-closed forms\n");
                        out.push_str(&format!(
                            "  off-shell identity dH(current) = -(u _| delta L): {}\n",
                            if report.onshell_identity_checked {
                                "exact"
                            } else {
                                "FAILED"
                            }
                        ));
                    }
                    None => {
                        out.push_str(&format!(
                            "  no conserved current within bounds (max_jet_order {}, max_poly_degree {}); absence at these bounds is not a proof\n",
                            report.bounds_used.max_jet_order,
                            report.bounds_used.max_poly_degree
                        ));
                    }
                }
                out.push_str(&format!(
                    "  first variational formula: {}\n",
                    if report.first_variational_checked {
                        "exact"
                    } else {
                        "FAILED"
                    }
                ));
            }
            Report::Lie {
                lagrangian,
                symmetry,
                lie,
            } => {
                out.push_str(&format!("lie {lagrangian} {symmetry}\n"));
                out.push_str(&format!("  L_u L = {}\n", lie.display(sig)));
            }
            Report::Trivial {
                lagrangian,
                trivial,
                el,
            } => {
                out.push_str(&format!("trivial {lagrangian}\n"));
                out.push_str(&format!(
                    "  variationally trivial (local verdict): {}\n",
                    if *trivial { "yes" } else { "no" }
                ));
                if !*trivial {
                    out.push_str(&format!("  delta L = {}\n", el.to_form(sig).display(sig)));
                }
            }
            Report::Helmholtz { name, verdict } => {
                out.push_str(&format!("helmholtz {name}\n"));
                if verdict.variational {
                    out.push_str("  verdict: variational (local)\n");
                } else {
                    out.push_str("  verdict: not variational\n");
                    out.push_str(&format!(
                        "  obstruction = {}\n",
                        verdict.obstruction.display(sig)
                    ));
                }
            }
            Report::MasterCheck {
                lagrangian,
                symmetry,
                residual,
                pass,
            } => {
                out.push_str(&format!("master-check {lagrangian} {symmetry}\n"));
                out.push_str(&format!("  residual = {}\n", residual.display(sig)));
                out.push_str(&format!(
                    "  verdict: {}\n",
                    if *pass { "PASS" } else { "FAIL" }
                ));
            }
            Report::Decompose {
                name,
                out: decomposition,
                bounds,
            } => {
                out.push_str(&format!("decompose {name}\n"));
                out.push_str(&format!(
                    "  source part = {}\n",
                    decomposition.source.display(sig)
                ));
                match &decomposition.potential {
                    Some(xi) => {
                        out.push_str(&format!("  potential xi = {}\n", xi.display(sig)));
                        out.push_str(&format!(
                            "  residual check psi = tau(psi) + dH(xi): {}\n",
                            if decomposition.residual_checked { "exact" } else { "FAILED" }
                        ));
                    }
                    None => out.push_str(&format!(
                        "  no potential within bounds (max_jet_order {}, max_poly_degree {}); absence at these bounds is not a proof\n",
                        bounds.max_jet_order, bounds.max_poly_degree
                    )),
                }
            }
            Report::Potential {
                name,
                potential,
                bounds,
            } => {
                out.push_str(&format!("potential {name}\n"));
                match potential {
                    Some(xi) => out.push_str(&format!("  xi = {}\n", xi.display(sig))),
                    None => out.push_str(&format!(
                        "  no potential within bounds (max_jet_order {}, max_poly_degree {}); absence at these bounds is not a proof\n",
                        bounds.max_jet_order, bounds.max_poly_degree
                    )),
                }
            }
        }
        incomplete_warning(&mut out, self.zero_test_complete());
        out
    }

    fn json(&self, sig: &BundleSignature) -> Value {
        match self {
            Report::EulerLagrange { lagrangian, el } => json!({
                "command": "el",
                "lagrangian": lagrangian,
                "components": source_components_json(sig, el),
                "delta_l": form_str(sig, &el.to_form(sig)),
            }),
            Report::Split { lagrangian, split } => json!({
                "command": "split",
                "lagrangian": lagrangian,
                "delta_l": form_str(sig, &split.el.to_form(sig)),
                "boundary": form_str(sig, &split.boundary),
                "residuals": {"first_variational_split": split.residual_checked},
            }),
            Report::Noether {
                lagrangian,
                symmetry,
                report,
            } => json!({
                "command": "noether",
                "lagrangian": lagrangian,
                "symmetry": symmetry,
                "verdict": report.kind.as_str(),
                "kind": report.kind.as_str(),
                "lie": form_str(sig, &report.lie),
                "sigma": report.sigma.as_ref().map(|s| form_str(sig, s)),
                "current": report.current.as_ref().map(|c| form_str(sig, c)),
                "current_note": if matches!(report.kind, SymmetryKind::NoneAtOrder) {
                    Value::Null
                } else {
                    json!("canonical modulo d_H-closed forms")
                },
                "residuals": {
                    "first_variational_formula": report.first_variational_checked,
                    "off_shell_identity": report.onshell_identity_checked,
                },
                "bounds_used": bounds_json(&report.bounds_used),
                "scope": "local",
            }),
            Report::Lie {
                lagrangian,
                symmetry,
                lie,
            } => json!({
                "command": "lie",
                "lagrangian": lagrangian,
                "symmetry": symmetry,
                "lie": form_str(sig, lie),
            }),
            Report::Trivial {
                lagrangian,
                trivial,
                el,
            } => json!({
                "command": "trivial",
                "lagrangian": lagrangian,
                "verdict": if *trivial { "trivial" } else { "not-trivial" },
                "delta_l": form_str(sig, &el.to_form(sig)),
                "scope": "local",
            }),
            Report::Helmholtz { name, verdict } => json!({
                "command": "helmholtz",
                "source": name,
                "verdict": if verdict.variational { "variational" } else { "not-variational" },
                "obstruction": if verdict.obstruction.is_zero() {
                    Value::Null
                } else {
                    Value::String(form_str(sig, &verdict.obstruction))
                },
                "scope": "local",
            }),
            Report::MasterCheck {
                lagrangian,
                symmetry,
                residual,
                pass,
            } => json!({
                "command": "master-check",
                "lagrangian": lagrangian,
                "symmetry": symmetry,
                "residual": form_str(sig, residual),
                "verdict": if *pass { "pass" } else { "fail" },
            }),
            Report::Decompose { name, out, bounds } => json!({
                "command": "decompose",
                "form": name,
                "source": form_str(sig, &out.source),
                "potential": out.potential.as_ref().map(|xi| form_str(sig, xi)),
                "residuals": {"decomposition": out.residual_checked},
                "bounds_used": bounds_json(bounds),
                "scope": "local",
            }),
            Report::Potential {
                name,
                potential,
                bounds,
            } => json!({
                "command": "potential",
                "form": name,
                "verdict": if potential.is_some() { "found" } else { "not-found" },
                "potential": potential.as_ref().map(|xi| form_str(sig, xi)),
                "bounds_used": bounds_json(bounds),
                "scope": "local",
            }),
        }
    }

    fn latex(&self, sig: &BundleSignature) -> String {
        let mut out = String::new();
        match self {
            Report::EulerLagrange { el, .. } => {
                out.push_str(&format!("\\delta L = {}\n", latex_source(sig, el)));
            }
            Report::Split { split, .. } => {
                out.push_str(&format!("\\delta L = {}\n", latex_source(sig, &split.el)));
                out.push_str(&format!("\\phi = {}\n", latex_form(sig, &split.boundary)));
            }
            Report::Noether { report, .. } => {
                out.push_str(&format!(
                    "\\mathbf{{L}}_{{J^\\infty u}}L = {}\n",
                    latex_form(sig, &report.lie)
                ));
                if let Some(sigma) = &report.sigma {
                    out.push_str(&format!("\\sigma = {}\n", latex_form(sig, sigma)));
                }
                if let Some(current) = &report.current {
                    out.push_str(&format!(
                        "\\mathfrak{{J}}_u = {}\n",
                        latex_form(sig, current)
                    ));
                }
            }
            Report::Lie { lie, .. } => {
                out.push_str(&format!(
                    "\\mathbf{{L}}_{{J^\\infty u}}L = {}\n",
                    latex_form(sig, lie)
                ));
            }
            Report::Trivial { trivial, el, .. } => {
                out.push_str(&format!(
                    "\\delta L = {}\\quad\\text{{({})}}\n",
                    latex_source(sig, el),
                    if *trivial {
                        "variationally trivial, local"
                    } else {
                        "not trivial"
                    }
                ));
            }
            Report::Helmholtz { verdict, .. } => {
                out.push_str(&format!(
                    "\\delta(\\mathcal{{E}}) = {}\n",
                    latex_form(sig, &verdict.obstruction)
                ));
            }
            Report::MasterCheck { residual, pass, .. } => {
                out.push_str(&format!(
                    "\\delta(\\mathbf{{L}}_u L) - \\mathbf{{L}}_u(\\delta L) = {}\\quad\\text{{({})}}\n",
                    latex_form(sig, residual),
                    if *pass { "PASS" } else { "FAIL" }
                ));
            }
            Report::Decompose {
                out: decomposition, ..
            } => {
                out.push_str(&format!(
                    "\\tau(\\psi) = {}\n",
                    latex_form(sig, &decomposition.source)
                ));
                if let Some(xi) = &decomposition.potential {
                    out.push_str(&format!("\\xi = {}\n", latex_form(sig, xi)));
                }
            }
            Report::Potential { potential, .. } => match potential {
                Some(xi) => out.push_str(&format!("\\xi = {}\n", latex_form(sig, xi))),
                None => out.push_str("\\text{no potential within bounds}\n"),
            },
        }
        out
    }
}
