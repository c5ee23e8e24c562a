//! Toric knot mosaics.
//!
//! * [`tile`] and [`mosaic`]: the eleven tiles, square grids with torus edge
//!   identification, the base-11 code and suitable connectedness.
//! * [`generators`]: mosaic constructions for torus knots behind a
//!   name-keyed strategy registry.
//! * [`enumerate`]: pruned exhaustive search over suitably connected mosaics.
//! * [`diagram`]: planar diagrams, tracing with hidden crossings, Reidemeister
//!   simplification and PD codes.
//! * [`invariants`]: HOMFLY-PT and Alexander polynomials, signature, linking
//!   number.
//! * [`census`]: the knot table, identification, censuses and appendix checks.

pub mod census;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod invariants;
pub mod mosaic;
pub mod tile;

pub use error::{Error, Result};
pub use mosaic::{Boundary, Mosaic};
pub use tile::Tile;
