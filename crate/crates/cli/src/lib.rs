//! Model-file front end for the jet-bundle variational engine: parser,
//! command dispatch, and report rendering.

pub mod commands;
pub mod error;
pub mod lexer;
pub mod model;
pub mod parser;
pub mod render;
pub mod report;

pub use commands::{run, Command, RunArgs};
pub use error::{CliError, ParseError};
pub use model::{Format, ModelFile, ModelOptions};
pub use parser::{parse_expression, parse_form, parse_model};
pub use report::Report;
