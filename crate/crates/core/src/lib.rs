//! Certified spectral-radius computation and verification of
//! eigenvalue-decreasing graph rewrites.
//!
//! The crate has three layers:
//!
//! * exact machinery: integer characteristic polynomials, Sturm chains,
//!   and rational Collatz-Wielandt enclosures around the spectral radius;
//! * graph rewrites that are expected to lower the spectral radius:
//!   subdividing an edge on an internal path, splitting a vertex into an
//!   adjacent or non-adjacent pair, and expanding a vertex into a clique,
//!   together with rational witness vectors for the splits;
//! * a verification campaign that sweeps these claims over every small
//!   connected graph and random larger ones, producing a deterministic
//!   report.
//!
//! Floating point is used only to steer iterations; every verdict rests on
//! exact rational or integer arithmetic.

#![forbid(unsafe_code)]

pub mod charpoly;
pub mod compare;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod spectral;
pub mod transforms;
pub mod verify;
pub mod witness;

pub use charpoly::{char_poly, char_poly_with_cap};
pub use compare::{
    rho_compare, rho_compare_cached, ComparisonCertificate, ExactMode, RhoOrdering, RhoRelation,
};
pub use graph::{make_family, Graph, GraphError, NamedFamily, VertexId};
pub use graph6::{parse_graph6, to_graph6};
pub use poly::{
    bisect_once, isolate_largest_root, refine_to_width, IntPoly, RootInterval, SturmChain,
};
pub use spectral::{
    check_perron_positive, cycle_eigenvalues, spectral_radius, spectral_radius_with,
    SpectralConfig, SpectralError, SpectralResult,
};
pub use transforms::{
    expand_to_complete, find_internal_paths, split_vertex_adjacent, split_vertex_nonadjacent,
    subdivide_edge, ExpandSpec, InternalPath, SplitSpec, TransformError,
};
pub use verify::report::{TheoremReport, VerificationReport, Violation, ViolationKind};
pub use verify::{
    enumerate_connected, random_connected_graph, recognize, run_campaign, CampaignConfig,
    Recognized, Theorem, VerifyError,
};
pub use witness::{construct_split_witness, construct_split_witness_with, WitnessVector};
