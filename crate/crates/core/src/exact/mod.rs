//! Exact rational linear algebra, lattice algorithms and convex hulls.

pub mod config;
pub mod hull;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod membership;
pub mod rational;
pub mod smith;
pub mod volume;

pub use config::{validate_star, PointConfiguration, StarViolation, ValidatedConfig};
pub use hull::{convex_hull, ConvexHull, HPolytope, Halfspace, VPolytope};
pub use lattice::lattice_points;
pub use membership::{point_in_polytope, Location, Membership, MembershipCertificate};
pub use rational::{Int, Rational};
