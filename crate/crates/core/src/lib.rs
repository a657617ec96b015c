pub mod acyclic;
pub mod ctc;
pub mod decomposition;
pub mod document;
pub mod error;
pub mod graph;
pub mod layout;
mod matching;
pub mod ordering;
pub mod pipeline;
pub mod svg;

pub use document::LayoutDocument;
pub use error::Error;
pub use graph::Digraph;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/acyclic.md")]
    mod acyclic {}
    #[doc = include_str!("../../../book/src/decompositions.md")]
    mod decompositions {}
    #[doc = include_str!("../../../book/src/reachability.md")]
    mod reachability {}
    #[doc = include_str!("../../../book/src/drawing.md")]
    mod drawing {}
    #[doc = include_str!("../../../book/src/ordering.md")]
    mod ordering {}
    #[doc = include_str!("../../../book/src/document.md")]
    mod document {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
