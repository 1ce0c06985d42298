//! Constructive upper bounds: each routine returns a proper orientation whose
//! maximum indegree respects the bound of its graph class.

use thiserror::Error;

use crate::orientation::OrientationError;
use crate::recognize::RecognizeError;

pub mod alternating;
pub mod claw_free;
pub mod cograph;
pub mod extend;
pub mod outerplanar;
pub mod path_block;
pub mod quasi_threshold;
pub mod split;
pub mod two_cut;
pub mod uniform_block;

pub use alternating::{extend_to_path, orient_alternating, AlternatingMode, PathContext};
pub use claw_free::claw_free_chordal_bound;
pub use cograph::{cograph_bounds, cograph_join_orient, cograph_orient, CographBounds};
pub use extend::{extend_partial, extend_partial_from, low_degree_orient, source_orientation};
pub use outerplanar::outerplanar_strip_orient;
pub use path_block::{path_block_compensated, PathBlockSequence};
pub use quasi_threshold::quasi_threshold_orient;
pub use split::split_orient;
pub use two_cut::two_cut_block_orient;
pub use uniform_block::uniform_block_orient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated at vertex {v} with neighbor {u} in S")]
    PreconditionViolated { v: usize, u: usize },
    #[error("the given orientation of S is not a proper orientation of G[S]")]
    NotProperOnS,
    #[error("adjacent vertices {0} and {1} both exceed the degree limit")]
    DegreeConditionViolated(usize, usize),
    #[error("compensation (c={c}, d={d}) is invalid for cliques of size {k}")]
    BadCompensation { c: usize, d: usize, k: usize },
    #[error("malformed input: {0}")]
    BadShape(&'static str),
    #[error("not a connected uniform block graph")]
    NotUniformBlock,
    #[error("block size {0} is not supported")]
    UnsupportedK(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error(transparent)]
    Recognize(#[from] RecognizeError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}
