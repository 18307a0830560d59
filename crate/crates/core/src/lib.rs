//! Sparseness certificates and constructive Ramsey machinery for degenerate graphs.

pub mod embedding;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod ramsey;
pub mod random;
pub mod sparseness;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::{common_neighborhood, density_between, multi_density, DensityReport, Graph, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/orderings.md")]
    mod orderings {}
    #[doc = include_str!("../../../book/src/random-graphs.md")]
    mod random_graphs {}
    #[doc = include_str!("../../../book/src/embedding.md")]
    mod embedding {}
    #[doc = include_str!("../../../book/src/ramsey.md")]
    mod ramsey {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
