//! Command dispatch: resolve names in the model, run the corresponding
//! engine operation, and package a report.
//!
//! Exit-code contract: mathematical negatives (not variational,
//! none-at-order, no potential found) are ordinary reports with exit
//! status 0; nonzero exits are reserved for input errors and internal
//! identity-check failures.

use jetvar_core::calculus::lie_derivative;
use jetvar_core::variational::{
    decompose_source, euler_lagrange, find_horizontal_potential, first_variational_split,
    helmholtz_check, is_variationally_trivial, master_identity_residual, noether, Bounds,
    Lagrangian,
};
use jetvar_core::Form;

use crate::error::CliError;
use crate::model::ModelFile;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    El,
    Split,
    Noether,
    Lie,
    Trivial,
    Helmholtz,
    MasterCheck,
    Decompose,
    Potential,
}

#[derive(Debug, Clone, Default)]
pub struct RunArgs {
    pub lagrangian: Option<String>,
    pub symmetry: Option<String>,
    pub source: Option<String>,
    pub form: Option<String>,
    pub max_jet_order: Option<u32>,
    pub max_degree: Option<u32>,
}

impl RunArgs {
    /// Explicit flags win over model options over per-input defaults.
    fn bounds(&self, model: &ModelFile, fallback: Bounds) -> Bounds {
        Bounds {
            max_jet_order: self
                .max_jet_order
                .or(model.options.max_jet_order)
                .unwrap_or(fallback.max_jet_order),
            max_poly_degree: self
                .max_degree
                .or(model.options.max_poly_degree)
                .unwrap_or(fallback.max_poly_degree),
        }
    }

    fn wants_bounds(&self, model: &ModelFile) -> bool {
        self.max_jet_order.is_some()
            || self.max_degree.is_some()
            || model.options.max_jet_order.is_some()
            || model.options.max_poly_degree.is_some()
    }
}

pub fn run(model: &ModelFile, command: Command, args: &RunArgs) -> Result<Report, CliError> {
    let sig = &model.signature;
    match command {
        Command::El => {
            let (name, density) = model.lagrangian(args.lagrangian.as_deref())?;
            let lagrangian = Lagrangian::new(sig.clone(), density.clone());
            Ok(Report::EulerLagrange {
                lagrangian: name.to_string(),
                el: euler_lagrange(&lagrangian),
            })
        }
        Command::Split => {
            let (name, density) = model.lagrangian(args.lagrangian.as_deref())?;
            let lagrangian = Lagrangian::new(sig.clone(), density.clone());
            let split = first_variational_split(&lagrangian);
            if !split.residual_checked {
                return Err(CliError::Internal(
                    "first variational split residual is nonzero".to_string(),
                ));
            }
            Ok(Report::Split {
                lagrangian: name.to_string(),
                split,
            })
        }
        Command::Noether => {
            let (lname, density) = model.lagrangian(args.lagrangian.as_deref())?;
            let (sname, field) = model.symmetry(args.symmetry.as_deref())?;
            let lagrangian = Lagrangian::new(sig.clone(), density.clone());
            let bounds = if args.wants_bounds(model) {
                let lie = lie_derivative(sig, field, &lagrangian.form());
                Some(args.bounds(model, Bounds::for_form(&lie)))
            } else {
                None
            };
            let report = noether(&lagrangian, field, bounds)?;
            if !report.first_variational_checked {
                return Err(CliError::Internal(
                    "first variational formula residual is nonzero".to_string(),
                ));
            }
            if report.current.is_some() && !report.onshell_identity_checked {
                return Err(CliError::Internal(
                    "off-shell conservation identity residual is nonzero".to_string(),
                ));
            }
            Ok(Report::Noether {
                lagrangian: lname.to_string(),
                symmetry: sname.to_string(),
                report,
            })
        }
        Command::Lie => {
            let (lname, density) = model.lagrangian(args.lagrangian.as_deref())?;
            let (sname, field) = model.symmetry(args.symmetry.as_deref())?;
            let lagrangian = Lagrangian::new(sig.clone(), density.clone());
            Ok(Report::Lie {
                lagrangian: lname.to_string(),
                symmetry: sname.to_string(),
                lie: lie_derivative(sig, field, &lagrangian.form()),
            })
        }
        Command::Trivial => {
            let (name, density) = model.lagrangian(args.lagrangian.as_deref())?;
            let lagrangian = Lagrangian::new(sig.clone(), density.clone());
            let el = euler_lagrange(&lagrangian);
            Ok(Report::Trivial {
                lagrangian: name.to_string(),
                trivial: is_variationally_trivial(&lagrangian),
                el,
            })
        }
        Command::Helmholtz => {
            // explicit --source, else explicit --lagrangian (checking its
            // Euler-Lagrange operator), else the model's sole source,
            // else its sole Lagrangian
            let (name, source) = if args.source.is_some() {
                let (name, source) = model.source(args.source.as_deref())?;
                (name.to_string(), source.clone())
            } else if args.lagrangian.is_some() {
                let (name, density) = model.lagrangian(args.lagrangian.as_deref())?;
                let lagrangian = Lagrangian::new(sig.clone(), density.clone());
                (format!("delta({name})"), euler_lagrange(&lagrangian))
            } else if !model.sources.is_empty() {
                let (name, source) = model.source(None)?;
                (name.to_string(), source.clone())
            } else {
                let (name, density) = model.lagrangian(None)?;
                let lagrangian = Lagrangian::new(sig.clone(), density.clone());
                (format!("delta({name})"), euler_lagrange(&lagrangian))
            };
            Ok(Report::Helmholtz {
                name,
                verdict: helmholtz_check(sig, &source),
            })
        }
        Command::MasterCheck => {
            let (lname, density) = model.lagrangian(args.lagrangian.as_deref())?;
            let (sname, field) = model.symmetry(args.symmetry.as_deref())?;
            if field.jet_order() > 0 {
                return Err(CliError::input(format!(
                    "master-check requires a symmetry whose components have jet order 0 \
                     (a vector field on the bundle); `{sname}` has order {}",
                    field.jet_order()
                )));
            }
            let lagrangian = Lagrangian::new(sig.clone(), density.clone());
            let residual = master_identity_residual(&lagrangian, field)?;
            let pass = residual.is_zero();
            Ok(Report::MasterCheck {
                lagrangian: lname.to_string(),
                symmetry: sname.to_string(),
                residual,
                pass,
            })
        }
        Command::Decompose => {
            let (name, psi) = model.form(args.form.as_deref())?;
            let bounds = args.bounds(model, Bounds::for_form(psi));
            let out = decompose_source(sig, psi, bounds)?;
            if out.potential.is_some() && !out.residual_checked {
                return Err(CliError::Internal(
                    "decomposition residual is nonzero".to_string(),
                ));
            }
            Ok(Report::Decompose {
                name: name.to_string(),
                out,
                bounds,
            })
        }
        Command::Potential => {
            let (name, sigma): (String, Form) = if args.form.is_some() {
                let (name, form) = model.form(args.form.as_deref())?;
                (name.to_string(), form.clone())
            } else if args.lagrangian.is_some() || !model.lagrangians.is_empty() {
                let (name, density) = model.lagrangian(args.lagrangian.as_deref())?;
                (
                    name.to_string(),
                    Lagrangian::new(sig.clone(), density.clone()).form(),
                )
            } else {
                let (name, form) = model.form(None)?;
                (name.to_string(), form.clone())
            };
            let bounds = args.bounds(model, Bounds::for_form(&sigma));
            let potential = find_horizontal_potential(sig, &sigma, bounds)?;
            Ok(Report::Potential {
                name,
                potential,
                bounds,
            })
        }
    }
}
