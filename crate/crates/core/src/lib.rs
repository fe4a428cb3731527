//! Three-bridge link diagrams from Schubert forms `(p/n, q/m, s/l)`.
//!
//! A form is checked against the butterfly conditions, classified through
//! the permutation `μ = φγ`, oriented, and turned into Wirtinger style
//! presentations, a planar diagram, Gauss and DT codes.

pub mod butterfly;
pub mod classify;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod family;
pub mod form;
pub mod oracle;
pub mod orient;
pub mod perm;
pub mod presentation;
pub mod vertex;
pub mod word;

pub use butterfly::Butterfly;
pub use classify::{classify, LinkClass};
pub use diagram::gauss::{dt_code, gauss_code, DtCode, GaussCode};
pub use diagram::{build_diagram, CanonicalDiagram};
pub use error::{Error, Result};
pub use family::{family_word, torus_report, FamilyWord};
pub use form::{parse_schubert_form, validate_butterfly, SchubertForm, ValidationReport};
pub use orient::{orient, OrientationData};
pub use perm::Permutation;
pub use presentation::{
    over_presentation, over_relations, peripheral_system, under_presentation, Format,
    GroupPresentation, Shape,
};
pub use vertex::{Bridge, Vertex, VertexSet};
pub use word::{Generator, Letter, Word};
