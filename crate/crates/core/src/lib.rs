//! Exact symmetric functions and chromatic symmetric functions of graphs.
//!
//! The crate computes in the ring of symmetric functions over the rationals
//! with the five classical bases (`e`, `h`, `m`, `p`, `s`), expands skew
//! Schur functions through the Littlewood-Richardson rule, computes Stanley's
//! chromatic symmetric function `X_G` of a finite simple graph, and checks
//! exhaustively at small sizes:
//!
//! * `s_D` is p-positive exactly when `D` is a horizontal strip;
//! * a nonzero multiple of `s_D` is chromatic exactly when `D` is a vertical
//!   strip, realized by a disjoint union of complete graphs;
//! * among the classical bases only multiples of `e_λ` are chromatic, apart
//!   from the basis elements that coincide with some `e_λ`.
//!
//! ```
//! use symchrom::{Basis, Caps, Graph, Partition, Rational, SymFunc};
//!
//! let k3 = Graph::complete(3)?;
//! let x = k3.chromatic_sym_edges(&Caps::default())?;
//! let e3 = SymFunc::from_basis(Basis::E, &Partition::row(3));
//! assert_eq!(x.display_in(Basis::E), "6*e[3]");
//! assert_eq!(x, e3.scale(&Rational::from_integer(6.into())));
//! # Ok::<(), symchrom::Error>(())
//! ```
//!
//! The guide under `book/` walks through each module; its code samples are
//! compiled and run as doc tests of this crate.

pub mod chromatic;
pub mod classify;
pub mod error;
pub mod identities;
pub mod partition;
mod tables;
pub mod symfunc;
pub mod tableau;

pub use chromatic::{Caps, Graph, UnionFind};
pub use classify::{
    find_graphs_with, ppositivity_classifier, realize_skew, verify_bases_theorem,
    verify_ppositive, verify_skew_theorem, Realization, VerificationReport,
};
pub use error::{Error, Result};
pub use identities::{verify_identities, IdentityBounds};
pub use partition::{partitions_of, Partition, SkewDiagram, StripClass, StripProfile};
pub use symfunc::{Basis, PSignature, Polynomial, Rational, SymFunc, SymFuncJson};
pub use tableau::{kostka, lr_expand, Tableau};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/symmetric-functions.md")]
    mod symmetric_functions {}
    #[doc = include_str!("../../../book/src/chromatic.md")]
    mod chromatic {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
