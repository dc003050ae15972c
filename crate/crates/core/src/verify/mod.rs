//! Bounded exhaustive verification.
//!
//! [`enumerate_pcl`] lists every perfectly clustering Lyndon word over
//! `{a, b, c}` using all three letters up to a length bound. The catalog is
//! read into the slices of first and second palindromic parts
//! ([`compute_sets`]), which answer membership queries with a witness, an
//! obstruction certificate, or an honest "unknown up to the bound".
//! [`Verifier`] runs the individual claims on top of one shared catalog.

mod catalog;
mod claims;
mod sets;

pub use catalog::{enumerate_pcl, enumerate_pcl_with, CatalogEntry, PclCatalog};
pub use claims::{verify_claim, Claim, ClaimSettings, Stats, Status, VerificationReport, Verifier};
pub use sets::{compute_sets, membership, MembershipVerdict, PalindromeSetSlice, PalindromeSets, Side};

pub use crate::language::{language_membership, DirectiveLanguage};
