//! Enumeration of maximal induced subgraphs in complements of c-closed graphs.

pub mod bitset;
pub mod clique;
pub mod codegen;
pub mod combinatorics;
pub mod cotw;
pub mod closure;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod plex;
pub mod predicate;
pub mod report;
pub mod sparse;
pub mod treewidth;
pub mod util;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Distance, Graph};
pub use predicate::Predicate;
pub use report::EnumerationReport;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    pub mod intro {}
    #[doc = include_str!("../../../book/src/closure.md")]
    pub mod closure {}
    #[doc = include_str!("../../../book/src/cliques.md")]
    pub mod cliques {}
    #[doc = include_str!("../../../book/src/plexes.md")]
    pub mod plexes {}
    #[doc = include_str!("../../../book/src/sparse.md")]
    pub mod sparse {}
    #[doc = include_str!("../../../book/src/cotw.md")]
    pub mod cotw {}
    #[doc = include_str!("../../../book/src/codegen.md")]
    pub mod codegen {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    pub mod bounds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
