use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::catalog::{enumerate_pcl, PclCatalog};
use crate::factorization::{p1_obstruction_certificate, p2_obstruction_certificate, require_ternary};
use crate::{Error, Result, Word};

/// Which part of `a·π₁·b·π₂·c` a palindrome occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    P1,
    P2,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::P1 => "P1",
            Side::P2 => "P2",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p1" => Ok(Side::P1),
            "p2" => Ok(Side::P2),
            _ => Err(Error::UnknownSide(s.to_string())),
        }
    }
}

/// Palindromes seen in one position across a bounded catalog, each with its
/// shortest witness (ties broken lexicographically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeSetSlice {
    pub side: Side,
    pub bound: usize,
    elements: BTreeMap<Word, Word>,
}

impl PalindromeSetSlice {
    pub fn witness(&self, palindrome: &Word) -> Option<&Word> {
        self.elements.get(palindrome)
    }

    pub fn contains(&self, palindrome: &Word) -> bool {
        self.elements.contains_key(palindrome)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Word> {
        self.elements.keys()
    }

    /// `(palindrome, witness)` pairs sorted by length, then lexicographically.
    pub fn sorted(&self) -> Vec<(&Word, &Word)> {
        let mut pairs: Vec<_> = self.elements.iter().collect();
        pairs.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(y.0)));
        pairs
    }
}

pub fn compute_sets(catalog: &PclCatalog) -> (PalindromeSetSlice, PalindromeSetSlice) {
    let mut p1 = BTreeMap::new();
    let mut p2 = BTreeMap::new();
    // catalog order is (length, lexicographic), so the first witness is kept
    for entry in catalog.entries() {
        p1.entry(entry.pi1().clone()).or_insert_with(|| entry.word.clone());
        p2.entry(entry.pi2().clone()).or_insert_with(|| entry.word.clone());
    }
    let bound = catalog.bound();
    (
        PalindromeSetSlice { side: Side::P1, bound, elements: p1 },
        PalindromeSetSlice { side: Side::P2, bound, elements: p2 },
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipVerdict {
    /// A catalog word exhibiting the palindrome in the queried position.
    Member { witness: Word },
    /// A length-2 factor set that fits none of S1..S4.
    NonMemberDecisive { certificate: BTreeSet<Word> },
    /// No witness among words of length at most `bound`, and no certificate.
    UnknownUpTo { bound: usize },
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Self::Member { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            Self::Member { .. } => "member",
            Self::NonMemberDecisive { .. } => "non-member",
            Self::UnknownUpTo { .. } => "unknown",
        }
    }
}

impl fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Member { witness } => write!(f, "member (witness {witness})"),
            Self::NonMemberDecisive { certificate } => {
                let pairs: Vec<String> = certificate.iter().map(Word::to_string).collect();
                write!(f, "non-member (factors {{{}}})", pairs.join(", "))
            }
            Self::UnknownUpTo { bound } => write!(f, "unknown up to length {bound}"),
        }
    }
}

/// Both slices computed from one catalog.
#[derive(Debug, Clone)]
pub struct PalindromeSets {
    pub p1: PalindromeSetSlice,
    pub p2: PalindromeSetSlice,
}

impl PalindromeSets {
    pub fn new(catalog: &PclCatalog) -> Self {
        let (p1, p2) = compute_sets(catalog);
        Self { p1, p2 }
    }

    pub fn slice(&self, side: Side) -> &PalindromeSetSlice {
        match side {
            Side::P1 => &self.p1,
            Side::P2 => &self.p2,
        }
    }

    pub fn bound(&self) -> usize {
        self.p1.bound
    }

    /// Palindromes present in both slices.
    pub fn intersection(&self) -> Vec<&Word> {
        let mut common: Vec<&Word> = self.p1.keys().filter(|p| self.p2.contains(p)).collect();
        common.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        common
    }

    pub fn membership(&self, side: Side, candidate: &Word) -> Result<MembershipVerdict> {
        if !candidate.is_palindrome() {
            return Err(Error::NotPalindrome(candidate.to_string()));
        }
        if candidate.alphabet().len() != 3 {
            return Err(Error::NotTernaryAlphabet(candidate.alphabet().to_string()));
        }
        if let Some(witness) = self.slice(side).witness(candidate) {
            return Ok(MembershipVerdict::Member { witness: witness.clone() });
        }
        let certificate = match side {
            Side::P1 => p1_obstruction_certificate(candidate),
            Side::P2 => p2_obstruction_certificate(candidate),
        };
        Ok(match certificate {
            Some(certificate) => MembershipVerdict::NonMemberDecisive { certificate },
            None => MembershipVerdict::UnknownUpTo { bound: self.bound() },
        })
    }
}

/// Membership of `candidate` in P1 or P2 against the catalog at `bound`.
pub fn membership(side: Side, candidate: &Word, bound: usize) -> Result<MembershipVerdict> {
    if !candidate.is_palindrome() {
        return Err(Error::NotPalindrome(candidate.to_string()));
    }
    PalindromeSets::new(&enumerate_pcl(bound)?).membership(side, candidate)
}

/// Checks that a member witness really shows `candidate` in position `side`.
pub(crate) fn witness_is_valid(side: Side, candidate: &Word, witness: &Word) -> bool {
    use crate::factorization::{is_pcl, is_pcl_via_bwt, palindromic_special_factorization};
    if require_ternary(witness).is_err() {
        return false;
    }
    let classified = matches!(is_pcl(witness), Ok(true)) && matches!(is_pcl_via_bwt(witness), Ok(true));
    let placed = match palindromic_special_factorization(witness) {
        Ok(Some(f)) => match side {
            Side::P1 => f.pi1() == Some(candidate),
            Side::P2 => f.pi2() == Some(candidate),
        },
        _ => false,
    };
    classified && placed
}
