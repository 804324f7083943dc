//! Renderers for complexes and resolutions: aligned text, JSON, LaTeX
//! block arrays and DOT graphs.

mod dot;
mod json;
mod latex;
mod text;

pub use dot::{dot_graph, homotopy_graph, EdgeKind, GraphEdge, HomotopyGraph};
pub use json::{
    DifferentialDoc, Document, EntryDoc, ModuleEntry, RingDoc,
};
pub use latex::{latex_matrix, latex_resolution, latex_taylor};
pub use text::{module_summary, text_matrix, text_resolution, text_taylor};
