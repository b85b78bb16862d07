//! Finite-group machinery for deciding positive-scalar-curvature questions
//! about spherical space forms: validated Cayley tables, Sylow analysis,
//! mod-2 group cohomology in degree two, central extensions by Z/2, and the
//! classification pipeline itself.

pub mod cohomology;
pub mod gf2;
pub mod group;
pub mod spaceform;

pub use group::{FiniteGroup, GroupError, Subgroup};
