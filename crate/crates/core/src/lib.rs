//! Labeled oriented graphs and the groups they present.
//!
//! A labeled oriented graph (LOG) encodes a presentation with one generator
//! per vertex and one relator `a b c⁻¹ b⁻¹` per edge `(a|b|c)`. This crate
//! checks the combinatorial hypotheses that make such a presentation complex
//! non-positively curved, builds the presentations together with their power
//! quotients `xⁿ = 1`, and provides the machinery to probe those groups:
//! link girth, abelianization, Reidemeister–Schreier kernels, Todd–Coxeter
//! enumeration, and exact curvature audits of surface diagrams.
//!
//! ```
//! use logkit::{cyclic_shift_family, verdict};
//!
//! let g = cyclic_shift_family(11).unwrap();
//! let v = verdict(&g);
//! assert!(v.npc && v.theorem2_applicable);
//! ```

pub mod cli;
pub mod coset;
pub mod diagram;
pub mod log;
pub mod npc;
pub mod presentation;
pub mod search;

pub use coset::{enumerate, todd_coxeter, verify_table, CosetTable, EnumerationResult, Limits, Strategy};
pub use diagram::{
    apply_cancellation, canonical_edge_sphere, canonical_power_sphere, curvature_report, find_cancellation_pairs,
    validate_diagram, AngleAssignment, CurvatureReport, SurfaceDiagram,
};
pub use log::{collapse_order, cyclic_shift_family, parse_log, validate, Edge, LabeledOrientedGraph, Shape};
pub use npc::{build_link_graph, find_forbidden_patterns, girth, verdict, Girth, LinkGraph, PatternReport, Verdict};
pub use presentation::{
    abelianization, braid_quotient, log_presentation, reidemeister_schreier_kernel, smith_normal_form, with_power,
    AbelianInvariants, Letter, Presentation, Word,
};
pub use search::{search_small_lois, SearchReport};
