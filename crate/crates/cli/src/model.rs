//! Parsed model files: a bundle signature plus named Lagrangians,
//! symmetry fields, source forms, general forms, and options.

use std::fmt;
use std::str::FromStr;

use jetvar_core::expr::Expression;
use jetvar_core::form::{Form, SourceForm};
use jetvar_core::jet::BundleSignature;
use jetvar_core::VerticalField;

use crate::error::CliError;

/// Output format of reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Latex => "latex",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(format!(
                "unknown format `{other}` (expected text, json or latex)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ModelOptions {
    pub max_jet_order: Option<u32>,
    pub max_poly_degree: Option<u32>,
    pub output: Option<Format>,
}

/// A fully parsed model file. Declarations keep their file order, names
/// are unique across all declaration kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFile {
    pub signature: BundleSignature,
    pub lagrangians: Vec<(String, Expression)>,
    pub symmetries: Vec<(String, VerticalField)>,
    pub sources: Vec<(String, SourceForm)>,
    pub forms: Vec<(String, Form)>,
    pub options: ModelOptions,
}

fn pick<'a, T>(
    kind: &str,
    items: &'a [(String, T)],
    requested: Option<&str>,
) -> Result<(&'a str, &'a T), CliError> {
    match requested {
        Some(name) => items
            .iter()
            .find(|(n, _)| n == name)
            .map(|(n, v)| (n.as_str(), v))
            .ok_or_else(|| CliError::input(format!("no {kind} named `{name}` in the model"))),
        None => match items.len() {
            0 => Err(CliError::input(format!("the model declares no {kind}"))),
            1 => Ok((items[0].0.as_str(), &items[0].1)),
            _ => Err(CliError::input(format!(
                "the model declares {} {kind}s; pick one explicitly",
                items.len()
            ))),
        },
    }
}

impl ModelFile {
    pub fn lagrangian(&self, name: Option<&str>) -> Result<(&str, &Expression), CliError> {
        pick("lagrangian", &self.lagrangians, name)
    }

    pub fn symmetry(&self, name: Option<&str>) -> Result<(&str, &VerticalField), CliError> {
        pick("symmetry", &self.symmetries, name)
    }

    pub fn source(&self, name: Option<&str>) -> Result<(&str, &SourceForm), CliError> {
        pick("source", &self.sources, name)
    }

    pub fn form(&self, name: Option<&str>) -> Result<(&str, &Form), CliError> {
        pick("form", &self.forms, name)
    }
}

fn write_expression_factor(
    f: &mut fmt::Formatter<'_>,
    sig: &BundleSignature,
    e: &Expression,
) -> fmt::Result {
    if e.term_count() == 1 && !e.is_one() {
        write!(f, "{}*", e.display(sig))
    } else if !e.is_one() {
        write!(f, "({})*", e.display(sig))
    } else {
        Ok(())
    }
}

impl fmt::Display for ModelFile {
    /// Renders the model back into its own grammar; parsing the output
    /// reproduces an equal `ModelFile`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = &self.signature;
        write!(f, "base")?;
        for name in sig.base_names() {
            write!(f, " {name}")?;
        }
        writeln!(f)?;
        write!(f, "field")?;
        for name in sig.fiber_names() {
            write!(f, " {name}")?;
        }
        writeln!(f)?;
        if let Some(k) = self.options.max_jet_order {
            writeln!(f, "set max_jet_order {k}")?;
        }
        if let Some(d) = self.options.max_poly_degree {
            writeln!(f, "set max_poly_degree {d}")?;
        }
        if let Some(fmt_opt) = self.options.output {
            writeln!(f, "set output {}", fmt_opt.as_str())?;
        }
        for (name, density) in &self.lagrangians {
            writeln!(f, "lagrangian {name} = {}", density.display(sig))?;
        }
        for (name, field) in &self.symmetries {
            write!(f, "symmetry {name} =")?;
            let mut first = true;
            for (fiber, component) in field.components() {
                if first {
                    write!(f, " ")?;
                    first = false;
                } else {
                    write!(f, " + ")?;
                }
                write_expression_factor(f, sig, component)?;
                write!(f, "d/d{}", sig.fiber_name(fiber))?;
            }
            if first {
                // the zero field still needs a valid right-hand side
                write!(f, " 0 * d/d{}", sig.fiber_name(0))?;
            }
            writeln!(f)?;
        }
        for (name, source) in &self.sources {
            write!(f, "source {name} =")?;
            let mut first = true;
            for (fiber, component) in source.components() {
                if first {
                    write!(f, " ")?;
                    first = false;
                } else {
                    write!(f, " + ")?;
                }
                write_expression_factor(f, sig, component)?;
                write!(f, "theta[{}]", sig.fiber_name(fiber))?;
            }
            if first {
                write!(f, " 0*theta[{}]", sig.fiber_name(0))?;
            }
            writeln!(f)?;
        }
        for (name, form) in &self.forms {
            writeln!(f, "form {name} = {}", form.display(sig))?;
        }
        Ok(())
    }
}
