//! Hurwitz moves on tuples of Dehn twists, tracked exactly on the integer
//! homology of a closed surface.
//!
//! The crate provides:
//!
//! - [`symplectic`]: homology classes, the algebraic intersection pairing,
//!   twist transvections and evaluation of twist words to integer symplectic
//!   matrices;
//! - [`hurwitz`]: tuples of twists, Hurwitz moves at the tuple ("sharp") and
//!   intersection-matrix ("flat") levels, and the standard genus-2 tuples;
//! - [`verify`]: one-shot checkers for the shipped intersection certificates,
//!   the genus-2 chain relations and the worked monodromy identities, plus
//!   twist-inequality calculators;
//! - [`search`]: deterministic seeded search for move sequences that make
//!   all pairwise intersections nonzero;
//! - [`bounds`]: closed-form hyperbolic-geometry constants;
//! - [`hplane`]: upper half-plane geometry and a Monte-Carlo check of the
//!   geodesic separation bound;
//! - [`files`]: the plain-text word/tuple/moves/matrix formats;
//! - [`data`]: the shipped tuples, move sequences and word files.
//!
//! Everything is a pure function over immutable values; all types are safe
//! to share across threads.

pub mod bounds;
pub mod data;
pub mod error;
pub mod files;
pub mod hplane;
pub mod hurwitz;
pub mod search;
pub mod symplectic;
pub mod verify;

pub use error::{Error, Result};
