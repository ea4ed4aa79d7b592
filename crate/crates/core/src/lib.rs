//! Sphere inspection and competitive hyperplane search.
//!
//! A closed curve *inspects* the unit sphere `S^{d−1}` if every sphere point
//! is seen from some curve point, where `p` sees `q` when the segment `pq`
//! touches the closed unit ball only at `q`. This crate provides
//!
//! - [`geometry`]: vectors, hyperplanes, polylines and the visibility predicate;
//! - [`tour`]: the `(2d)^{3/2}` cross-polytope inspection tour;
//! - [`verification`]: sampled inspection/containment checks, hemisphere
//!   covers and witness search for curves that fail to inspect;
//! - [`strategy`]: the doubling hyperplane-search strategy built from an
//!   inspecting curve, its competitive envelope, and the reverse extraction.

pub mod error;
pub mod geometry;
pub mod sampling;
pub mod strategy;
pub mod tolerance;
pub mod tour;
pub mod verification;

pub use error::{Error, Result};
pub use geometry::{
    curve_sees, first_hit, norm2, sees, support, CurveHit, Hyperplane, PolylineCurve, Segment,
    UnitDirection, Vector,
};
pub use sampling::{sample_unit_direction, seeded_rng, SeededRng};
pub use strategy::{
    build_doubling_strategy, check_envelope, envelope_bound, extract_inspection_curve,
    simulate_search, DoublingStrategy, SearchTranscript,
};
pub use tour::{
    build_inspection_tour, cross_polytope_vertices, hamiltonian_cycle, inspection_tour_length,
    CrossPolytopeSpec, HamiltonianOrder,
};
pub use verification::{
    find_uncovered_witness, hull_contains_sphere, refute_cover, simplex_cover, vertex_set_sees_all,
    visibility_matches_containment, CoverReport, Hemisphere,
};
