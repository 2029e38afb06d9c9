//! Combinatorial tools for alternating link diagrams and their twisted
//! checkerboard surfaces.
//!
//! The crate is split along the same lines as the analysis pipeline:
//!
//! * [`diagram`] parses PD codes into combinatorial maps, walks faces and
//!   computes the checkerboard colouring.
//! * [`twist`] finds twist regions and decides primality and
//!   twist-reducedness, returning witness curves on failure.
//! * [`augment`] adds crossing circles, removes crossing pairs and checks the
//!   structural properties of the resulting diagrams.
//! * [`surfaces`] does the Euler characteristic bookkeeping for checkerboard,
//!   punctured and twisted surfaces.
//! * [`graph`] is an embedded-multigraph engine (rotation systems) with the
//!   valence and bigon lemma checkers and an isomorph-free enumerator.
//! * [`families`] builds diagrams of pretzel links and similar seeds.

pub mod augment;
pub mod diagram;
pub mod families;
pub mod graph;
pub mod surfaces;
pub mod twist;

pub use augment::{
    augment, r_tw, r_tw_bound, reduce_twists, strip_circles, validate_augmented, AugmentError, AugmentedDiagram,
    ColorFilter, CrossingCircle, Stage, StructureItem, StructureReport, ARC_N_TW, INJ_N_TW,
};
pub use diagram::{
    checkerboard, faces, is_alternating, parse_pd, validate, Color, Coloring, DiagramError, Face, PlanarDiagram,
    ValidationReport,
};
pub use graph::{
    check_bigon_bound, check_disk_lemma, check_sphere_lemma, check_torus_lemma, collapse_bigon_families, complexity,
    double, enumerate_graphs, faces_and_genus, find_small_faces, search_counterexamples,
    triangulate_and_check_identity, ComplexityTuple, Constraints, Context, DoubleMode, EmbeddedGraph, GraphError,
    Lemma, Verdict,
};
pub use surfaces::{
    checkerboard_surface_report, punctured_surface_report, twist_region_subsurface, twisted_surface_report, Attachment,
    AttachmentRecord, SurfaceError, SurfaceKind, SurfaceReport,
};
pub use twist::{
    is_color_twist_reduced, is_prime, is_twist_reduced, twist_number, twist_regions, CurveWitness, TwistError,
    TwistRegion, WitnessKind,
};
