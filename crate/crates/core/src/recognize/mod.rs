//! Graph class recognition and the decompositions the constructors consume.

use thiserror::Error;

pub mod blocks;
pub mod chordal;
pub mod cotree;
pub mod misc;
pub mod outerplanar;
pub mod split;

pub use blocks::{block_cut_tree, BlockCutTree, RootedBlockCutTree};
pub use chordal::{chordal_peo, clique_number_chordal, is_chordal, lex_bfs};
pub use cotree::{cograph_cotree, quasi_threshold_cotree, Cotree};
pub use misc::{cobipartition, is_claw_free, twin_partition};
pub use outerplanar::{maximal_outerplane_weak_dual, TriangleStrip};
pub use split::{split_partition, SplitPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("not chordal: chordless cycle {cycle:?}")]
    NotChordal { cycle: Vec<usize> },
    #[error("ordering is not a perfect elimination ordering of the graph")]
    InvalidPeo,
    #[error("not a split graph")]
    NotSplit,
    #[error("not quasi-threshold: induced {kind} on {witness:?}")]
    NotQuasiThreshold { kind: &'static str, witness: Vec<usize> },
    #[error("not a cograph: induced P4 {p4:?}")]
    NotCograph { p4: [usize; 4] },
    #[error("not a maximal outerplane graph with a path weak dual: {0}")]
    NotStrip(&'static str),
}
