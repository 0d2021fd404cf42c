//! Descriptive set operations over glossae.
//!
//! A [`Glossa`] pairs every element of a finite carrier with a real description
//! vector. On top of it the crate provides the descriptive intersection, the four
//! descriptive unions and their tolerance forms ([`setops`]), descriptive nerves and
//! digital convexity ([`nerve`]), an RGB image front end ([`imaging`]) and a seeded
//! randomized verification harness ([`verify`]).
//!
//! ```
//! use desops::{descriptive_intersection, ElementSet, Glossa};
//!
//! let g = Glossa::from_pairs([("B1", [1.0]), ("B2", [2.0]), ("B3", [1.0])], 1, [0.0]).unwrap();
//! let a: ElementSet = ["B1", "B2"].into_iter().collect();
//! let b: ElementSet = ["B3"].into_iter().collect();
//! let r = descriptive_intersection(&g, &a, &b, 0.0).unwrap();
//! assert_eq!(r, ["B1", "B3"].into_iter().collect());
//! ```

pub mod cli;
pub mod error;
pub mod glossa;
pub mod imaging;
pub mod nerve;
pub mod oracle;
pub mod setops;
pub mod verify;

pub use error::{Error, Result};
pub use glossa::{Description, Element, ElementSet, Entry, Glossa, Point};
pub use nerve::{
    check_convexity_theorem, check_d_convex_union_representable, descriptive_nerve,
    is_digitally_convex, kwise_descriptive_intersection, Collection, LatticeSet, SimplicialComplex,
};
pub use setops::{
    check_injective, descriptive_intersection, descriptive_union, DescriptiveResult, Selector,
    Spatial, UnionConfig, Variant,
};
