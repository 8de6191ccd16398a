//! Finite frames and their Priestley duals.
//!
//! A finite frame is a finite distributive lattice; its dual is the poset of
//! its prime filters, and it is recovered as the lattice of upsets of that
//! poset. The crate builds both sides, moves homomorphisms and monotone maps
//! across, computes nuclei and sublocales, and checks the algebraic and
//! order-theoretic characterizations of open localic maps against each other
//! over exhaustive catalogs of small posets. [`omega`] models one infinite
//! counterexample exactly.

pub mod bitset;
pub mod dot;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod frames;
pub mod json;
pub mod jt;
pub mod omega;
pub mod order;
pub mod sublocales;

pub use bitset::BitSet;
pub use duality::{clopup_frame, dual_of_hom, duality_roundtrip, hom_from_monotone, prime_filters, DualSpace};
pub use enumerate::{all_posets, catalog_frames, frames_up_to, PosetCatalog};
pub use error::{Error, Result};
pub use frames::{Frame, LatticeMap};
pub use jt::{jt_report, jt_reports, verify_jt, JtReport};
pub use order::{monotone_maps, MonotoneMap, Poset};
pub use sublocales::{Nucleus, Sublocale};
