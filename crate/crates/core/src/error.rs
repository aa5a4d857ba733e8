use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input that does not match the partition or operand grammar.
    #[error("{}", render_parse(input, *position, message))]
    Parse { input: String, position: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computed quantity violated an identity that must hold, for example a
    /// negative multiplicity in a decomposition.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("malformed diagram: {0}")]
    Malformed(String),
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse { input: input.to_string(), position, message: message.into() }
    }
}

fn render_parse(input: &str, position: usize, message: &str) -> String {
    let pad = input.chars().take(position).count();
    format!("parse error at column {}: {message}\n  {input}\n  {}^", position + 1, " ".repeat(pad))
}
