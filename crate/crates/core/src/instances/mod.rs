//! Gadgets, the vertex cover reduction, kernels and generators.

use thiserror::Error;

pub mod gadgets;
pub mod kernel;
pub mod random;
pub mod reduction;
pub mod tight;

pub use gadgets::{gen_f, gen_s, gen_z, GadgetKind, GadgetMeta};
pub use kernel::{cobipartite_kernel, split_kernel};
pub use random::{random_class_instance, InstanceClass};
pub use reduction::{build_vc_certificate, reduce_vertex_cover, PlacedGadget, ReductionOutput, VertexRole};
pub use tight::{gen_block_tight, gen_split_tight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("input graph is not cubic")]
    NotCubic,
    #[error("input graph is not connected")]
    NotConnected,
    #[error("bad k={k}: {reason}")]
    BadK { k: usize, reason: &'static str },
    #[error("vertex set is not a vertex cover of size at most k")]
    NotACover,
    #[error("not a split graph")]
    NotSplit,
    #[error("not a cobipartite graph")]
    NotCobipartite,
}
