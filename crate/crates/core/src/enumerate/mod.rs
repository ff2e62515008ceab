//! Isomorphism-free enumeration of small graphs and exhaustive extremal
//! searches over the enumerated classes.

mod canon;
mod generate;
mod search;

pub use canon::{canonical_form, canonical_graph, canonical_order, CANON_MAX_VERTICES};
pub use generate::{
    classes_from_graph6, classes_of, enumerate_graphs, ClassRep, EnumMode, EnumSpec, Filters, MAX_ENUM_EDGES,
    MAX_ENUM_VERTICES,
};
pub use search::{
    laplacian_equality_class, max_s2_by_cycle_dim, max_s2_trees, min_f_by_edges, min_f_by_vertices, objective_name,
    search_graph6_stream, Objective, RunnerUp, SearchReport, EXACT_MARGIN,
};
