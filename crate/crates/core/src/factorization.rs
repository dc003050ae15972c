//! Special factorizations and the two perfectly clustering Lyndon classifiers.
//!
//! A ternary word `w` has a special factorization `w = a·π₁·b·π₂·c`; it is
//! palindromic when both parts are palindromes. A word is perfectly
//! clustering Lyndon exactly when it is a product of two palindromes and has
//! a palindromic special factorization ([`is_pcl`]), or equivalently when it
//! is Lyndon with a nonincreasing Burrows-Wheeler transform
//! ([`is_pcl_via_bwt`]).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bwt::is_perfectly_clustering_ranks;
use crate::words::{is_lyndon, is_palindrome, is_primitive, A, B, C};
use crate::{Error, OrderedAlphabet, Result, Word};

/// `w = a₁·π₁·a₂·π₂ ⋯ π_{k−1}·a_k` with separators `a₁ < ⋯ < a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFactorization {
    alphabet: Arc<OrderedAlphabet>,
    separators: Vec<u8>,
    parts: Vec<Word>,
    palindromic: bool,
}

impl SpecialFactorization {
    fn new(alphabet: &Arc<OrderedAlphabet>, separators: Vec<u8>, parts: Vec<Word>) -> Self {
        debug_assert_eq!(separators.len(), parts.len() + 1);
        let palindromic = parts.iter().all(Word::is_palindrome);
        Self { alphabet: Arc::clone(alphabet), separators, parts, palindromic }
    }

    pub fn separators(&self) -> Vec<char> {
        self.separators.iter().map(|&r| self.alphabet.symbol(r)).collect()
    }

    pub fn parts(&self) -> &[Word] {
        &self.parts
    }

    pub fn is_palindromic(&self) -> bool {
        self.palindromic
    }

    /// `π₁`, the part between the first two separators.
    pub fn pi1(&self) -> Option<&Word> {
        self.parts.first()
    }

    /// `π₂`, the part between the second and third separators.
    pub fn pi2(&self) -> Option<&Word> {
        self.parts.get(1)
    }

    /// Interleaves separators and parts.
    pub fn reconstruct(&self) -> Word {
        let mut letters = vec![self.separators[0]];
        for (part, &sep) in self.parts.iter().zip(&self.separators[1..]) {
            letters.extend_from_slice(part.letters());
            letters.push(sep);
        }
        Word::from_ranks(&self.alphabet, letters)
    }
}

impl fmt::Display for SpecialFactorization {
    /// `a · cbc · b · bcb · c`, with `ε` for empty parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alphabet.symbol(self.separators[0]))?;
        for (part, &sep) in self.parts.iter().zip(&self.separators[1..]) {
            if part.is_empty() {
                write!(f, " · ε")?;
            } else {
                write!(f, " · {part}")?;
            }
            write!(f, " · {}", self.alphabet.symbol(sep))?;
        }
        Ok(())
    }
}

impl Serialize for SpecialFactorization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SpecialFactorization", 3)?;
        st.serialize_field("separators", &self.separators().iter().collect::<String>())?;
        let parts: Vec<String> = self.parts.iter().map(Word::to_string).collect();
        st.serialize_field("parts", &parts)?;
        st.serialize_field("palindromic", &self.palindromic)?;
        st.end()
    }
}

/// `w = left · right` with both factors palindromes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromePairSplit {
    pub left: Word,
    pub right: Word,
}

impl fmt::Display for PalindromePairSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &Word| if w.is_empty() { "ε".to_string() } else { w.to_string() };
        write!(f, "{} · {}", show(&self.left), show(&self.right))
    }
}

pub(crate) fn require_ternary(w: &Word) -> Result<()> {
    if w.alphabet().len() != 3 || w.alph_ranks().len() != 3 {
        return Err(Error::NotTernary(w.to_string()));
    }
    Ok(())
}

/// Every factorization `w = a·π₁·b·π₂·c`, one per occurrence of `b` that can
/// serve as the middle separator, left to right.
pub fn special_factorizations(w: &Word) -> Result<Vec<SpecialFactorization>> {
    require_ternary(w)?;
    let letters = w.letters();
    let n = letters.len();
    if letters[0] != A || letters[n - 1] != C {
        return Ok(Vec::new());
    }
    Ok((1..n - 1)
        .filter(|&j| letters[j] == B)
        .map(|j| SpecialFactorization::new(w.alphabet(), vec![A, B, C], vec![w.factor(1..j), w.factor(j + 1..n - 1)]))
        .collect())
}

/// Positions of the middle `b` for which both parts are palindromes.
fn palindromic_split_points(letters: &[u8]) -> Vec<usize> {
    let n = letters.len();
    if n < 3 || letters[0] != A || letters[n - 1] != C {
        return Vec::new();
    }
    (1..n - 1)
        .filter(|&j| letters[j] == B && is_palindrome(&letters[1..j]) && is_palindrome(&letters[j + 1..n - 1]))
        .collect()
}

fn splits_into_two_palindromes(letters: &[u8]) -> Option<usize> {
    (0..=letters.len()).find(|&i| is_palindrome(&letters[..i]) && is_palindrome(&letters[i..]))
}

/// The special factorization whose two parts are palindromes, if any.
///
/// A primitive word that is also a product of two palindromes admits at most
/// one; finding two is reported as [`Error::NonUniqueFactorization`].
pub fn palindromic_special_factorization(w: &Word) -> Result<Option<SpecialFactorization>> {
    require_ternary(w)?;
    let letters = w.letters();
    let points = palindromic_split_points(letters);
    if points.len() > 1 && is_primitive(letters) && splits_into_two_palindromes(letters).is_some() {
        return Err(Error::NonUniqueFactorization(w.to_string()));
    }
    let n = letters.len();
    Ok(points
        .first()
        .map(|&j| SpecialFactorization::new(w.alphabet(), vec![A, B, C], vec![w.factor(1..j), w.factor(j + 1..n - 1)])))
}

/// A factorization `a₁·π₁·a₂ ⋯ π_{k−1}·a_k` over the letters of `w` in
/// increasing order with every part a palindrome, choosing the leftmost
/// separator positions.
pub fn general_palindromic_factorization(w: &Word) -> Option<SpecialFactorization> {
    fn search(letters: &[u8], seps: &[u8], from: usize, cuts: &mut Vec<usize>) -> bool {
        let n = letters.len();
        let Some((&sep, rest)) = seps.split_first() else {
            return true;
        };
        if rest.is_empty() {
            // the last separator closes the word
            if n > from && letters[n - 1] == sep && is_palindrome(&letters[from..n - 1]) {
                cuts.push(n - 1);
                return true;
            }
            return false;
        }
        for j in from..n.saturating_sub(1) {
            if letters[j] == sep && is_palindrome(&letters[from..j]) {
                cuts.push(j);
                if search(letters, rest, j + 1, cuts) {
                    return true;
                }
                cuts.pop();
            }
        }
        false
    }

    let letters = w.letters();
    let seps = w.alph_ranks();
    let (&first, rest) = seps.split_first()?;
    if letters[0] != first {
        return None;
    }
    if rest.is_empty() {
        return (letters.len() == 1).then(|| SpecialFactorization::new(w.alphabet(), seps.clone(), Vec::new()));
    }
    let mut cuts = vec![0];
    if !search(letters, rest, 1, &mut cuts) {
        return None;
    }
    let parts = cuts.windows(2).map(|c| w.factor(c[0] + 1..c[1])).collect();
    Some(SpecialFactorization::new(w.alphabet(), seps, parts))
}

/// The split into two palindromes with the shortest left factor.
pub fn product_of_two_palindromes(w: &Word) -> Option<PalindromePairSplit> {
    let n = w.len();
    splits_into_two_palindromes(w.letters())
        .map(|i| PalindromePairSplit { left: w.factor(0..i), right: w.factor(i..n) })
}

/// The four sets of length-2 factors one of which contains `Fact₂` of every
/// perfectly clustering ternary word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Lemma1Set {
    S1,
    S2,
    S3,
    S4,
}

/// Bit `3x + y` stands for the factor `xy` over ranks `a, b, c`.
pub(crate) type PairMask = u16;

pub(crate) const fn pair_bit(x: u8, y: u8) -> PairMask {
    1 << (3 * x + y)
}

const fn mask_of(pairs: [(u8, u8); 5]) -> PairMask {
    let mut mask = 0;
    let mut i = 0;
    while i < 5 {
        mask |= pair_bit(pairs[i].0, pairs[i].1);
        i += 1;
    }
    mask
}

impl Lemma1Set {
    pub const ALL: [Lemma1Set; 4] = [Self::S1, Self::S2, Self::S3, Self::S4];

    pub(crate) const fn mask(self) -> PairMask {
        match self {
            Self::S1 => mask_of([(A, B), (A, C), (B, A), (B, B), (C, A)]),
            Self::S2 => mask_of([(A, C), (B, B), (B, C), (C, A), (C, B)]),
            Self::S3 => mask_of([(A, A), (A, B), (A, C), (B, A), (C, A)]),
            Self::S4 => mask_of([(A, C), (B, C), (C, A), (C, B), (C, C)]),
        }
    }

    /// The members as strings over `abc`.
    pub fn members(self) -> Vec<String> {
        (0..9u8)
            .filter(|b| self.mask() & (1 << b) != 0)
            .map(|b| ["a", "b", "c"][(b / 3) as usize].to_string() + ["a", "b", "c"][(b % 3) as usize])
            .collect()
    }
}

impl fmt::Display for Lemma1Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

pub(crate) fn pair_mask(letters: &[u8]) -> PairMask {
    letters.windows(2).fold(0, |m, p| m | pair_bit(p[0], p[1]))
}

pub(crate) fn compatible_sets(mask: PairMask) -> impl Iterator<Item = Lemma1Set> {
    Lemma1Set::ALL.into_iter().filter(move |s| mask & !s.mask() == 0)
}

/// The sets among S1..S4 containing `f2`. An empty answer means no
/// perfectly clustering word has `f2` among its factors.
///
/// Elements that are not length-2 words over a ternary alphabet fit no set.
pub fn lemma1_compatible(f2: &BTreeSet<Word>) -> Vec<Lemma1Set> {
    let mut mask: PairMask = 0;
    for pair in f2 {
        match pair.letters() {
            &[x, y] if pair.alphabet().len() == 3 => mask |= pair_bit(x, y),
            _ => return Vec::new(),
        }
    }
    compatible_sets(mask).collect()
}

fn obstruction(framed: Word) -> Option<BTreeSet<Word>> {
    let f2 = framed.factors(2);
    lemma1_compatible(&f2).is_empty().then_some(f2)
}

/// `Fact₂(a·candidate·b)` when it fits none of S1..S4: a certificate that no
/// word `a·candidate·b·u·c` is perfectly clustering.
pub fn p1_obstruction_certificate(candidate: &Word) -> Option<BTreeSet<Word>> {
    let mut framed = candidate.with_letters(vec![A]);
    framed = framed.concat(candidate);
    framed.push(B);
    obstruction(framed)
}

/// `Fact₂(b·candidate·c)` when it fits none of S1..S4: a certificate that no
/// word `a·u·b·candidate·c` is perfectly clustering.
pub fn p2_obstruction_certificate(candidate: &Word) -> Option<BTreeSet<Word>> {
    let mut framed = candidate.with_letters(vec![B]);
    framed = framed.concat(candidate);
    framed.push(C);
    obstruction(framed)
}

pub fn p1_obstruction(candidate: &Word) -> bool {
    p1_obstruction_certificate(candidate).is_some()
}

/// Product of two palindromes with a palindromic special factorization.
pub fn is_pcl(w: &Word) -> Result<bool> {
    require_ternary(w)?;
    Ok(product_of_two_palindromes(w).is_some() && palindromic_special_factorization(w)?.is_some())
}

/// Lyndon with a nonincreasing Burrows-Wheeler transform.
pub fn is_pcl_via_bwt(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord("the perfectly clustering Lyndon property"));
    }
    Ok(is_lyndon(w.letters()) && is_perfectly_clustering_ranks(w.letters()))
}
