use thiserror::Error;

use crate::form::SchubertForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse Schubert form {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid form {form}: {reason}")]
    InvalidForm { form: SchubertForm, reason: String },

    #[error("{0} is not reduced")]
    NotReduced(SchubertForm),

    #[error("{form} is a {components}-component link, not a knot")]
    NotAKnot { form: SchubertForm, components: u8 },

    #[error("cyclic substitution fails for {form}: {detail}")]
    NotSymmetric { form: SchubertForm, detail: String },

    #[error("degenerate presentation: {0}")]
    DegeneratePresentation(String),

    #[error("unsupported format {0:?}")]
    UnsupportedFormat(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::InvalidForm { .. } => "invalid_form",
            Error::NotReduced(_) => "not_reduced",
            Error::NotAKnot { .. } => "not_a_knot",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::DegeneratePresentation(_) => "degenerate_presentation",
            Error::UnsupportedFormat(_) => "unsupported_format",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
