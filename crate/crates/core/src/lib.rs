//! Combinatorics on words around perfectly clustering words.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: ordered alphabets, words, Parikh vectors, conjugacy and Lyndon words.
//! * [`bwt`]: the Burrows-Wheeler transform and clustering analysis.
//! * [`palindrome`]: palindromic closure, iterated palindromization and directive words.
//! * [`factorization`]: special factorizations and the perfectly clustering Lyndon classifiers.
//! * [`language`]: the three regular languages of directive words.
//! * [`morphism`]: the letter exchange, its reversal, and four free-group automorphisms.
//! * [`verify`]: bounded exhaustive enumeration and claim checking.
//!
//! ```
//! use pclwords::{Word, bwt, factorization};
//!
//! let w = Word::ternary("acbcbbcbc").unwrap();
//! assert_eq!(bwt::bwt(&w).unwrap().to_string(), "ccccbbbba");
//! let f = factorization::palindromic_special_factorization(&w).unwrap().unwrap();
//! assert_eq!(f.to_string(), "a · cbc · b · bcb · c");
//! ```

pub mod bwt;
mod error;
pub mod factorization;
pub mod language;
pub mod morphism;
pub mod palindrome;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use language::DirectiveLanguage;
pub use words::{OrderedAlphabet, ParikhVector, Word};
