//! Simplicial complexes, descriptive nerves and planar digital convexity.

mod complex;
mod convexity;
mod descriptive;
mod hull;

pub use complex::{downward_closure_violation, SimplicialComplex};
pub use convexity::{
    check_convexity_theorem, check_d_convex_union_representable, lattice_of, lattice_of_idx,
    ConvexityReport, Equivalence, RepresentabilityReport, UnionMode,
};
pub use descriptive::{
    descriptive_nerve, kwise_descriptive_intersection, kwise_intersection_idx, nerve_faces,
    Collection, MAX_NERVE_MEMBERS,
};
pub use hull::{convex_hull_2d, cross, is_digitally_convex, lattice_points_in_hull, LatticeSet};
