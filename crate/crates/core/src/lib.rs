//! Equilibrium pricing for sealed-bid combinatorial auctions.
//!
//! A combinatorial auction sells `J` item types (each with an integer supply)
//! to bidders who submit XOR lists of bundle bids. This crate solves the
//! winner determination problem exactly over rationals and computes the
//! pricing outcomes that can support the efficient allocation:
//!
//! * natural Walrasian equilibria (`NWE`) from the dual of the LP relaxation,
//! * artificial Walrasian equilibria (`AWE`) obtained by pricing valid cuts
//!   of the winner determination program as artificial items,
//! * price-match equilibria (`PME`), a refinement in which every winner's
//!   payment can be matched by an individually-rational allocation that
//!   excludes that winner,
//! * minimally artificial PME (`MAP`) prices, found by minimising the total
//!   artificial adjustment and elaborating it into integer cuts with prices,
//! * the classical VCG, minimum-revenue core-selecting (MRC) and pay-as-bid
//!   benchmarks.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every reported
//! equilibrium comes with verification certificates.
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability, and the `pricematch` binary for the command line interface.

pub mod cli;
pub mod cuts;
pub mod directions;
pub mod error;
pub mod gen;
pub mod kernel;
pub mod model;
pub mod pme;
pub mod pricing;
pub mod rational;
pub mod report;
pub mod rules;
pub mod wdp;

pub use error::Error;
pub use model::{AuctionInstance, Bid, Bidder, Item};
pub use rational::Rat;

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
