//! Finite words over totally ordered alphabets.
//!
//! Letters are stored as ranks (`u8`) into an [`OrderedAlphabet`], so
//! lexicographic comparison follows the alphabet order rather than the
//! character code of the symbols.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::sync::{Arc, LazyLock};

use crate::{Error, Result};

static ABC: LazyLock<Arc<OrderedAlphabet>> =
    LazyLock::new(|| Arc::new(OrderedAlphabet::new("abc").expect("valid alphabet")));

/// Rank of `a` in the ternary alphabet.
pub const A: u8 = 0;
/// Rank of `b` in the ternary alphabet.
pub const B: u8 = 1;
/// Rank of `c` in the ternary alphabet.
pub const C: u8 = 2;

/// A finite list of distinct symbols; a symbol's rank is its position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedAlphabet {
    symbols: Vec<char>,
}

impl OrderedAlphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > u8::MAX as usize {
            return Err(Error::AlphabetTooLarge);
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Self { symbols })
    }

    /// The alphabet of the distinct characters of `text`, in code point order.
    pub fn natural(text: &str) -> Result<Self> {
        let set: BTreeSet<char> = text.chars().collect();
        Self::new(&set.into_iter().collect::<String>())
    }

    /// The shared ternary alphabet `a < b < c`.
    pub fn abc() -> Arc<Self> {
        Arc::clone(&ABC)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn rank(&self, symbol: char) -> Option<u8> {
        self.symbols.iter().position(|&c| c == symbol).map(|r| r as u8)
    }

    pub fn symbol(&self, rank: u8) -> char {
        self.symbols[rank as usize]
    }
}

impl fmt::Display for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word. Every letter is a valid rank of its alphabet.
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<OrderedAlphabet>,
    letters: Vec<u8>,
}

impl Word {
    pub fn parse(text: &str, alphabet: &Arc<OrderedAlphabet>) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| alphabet.rank(c).ok_or_else(|| Error::ForeignLetter { letter: c, alphabet: alphabet.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { alphabet: Arc::clone(alphabet), letters })
    }

    /// Parses a word over the ternary alphabet `abc`.
    pub fn ternary(text: &str) -> Result<Self> {
        Self::parse(text, &ABC)
    }

    /// Builds a word from ranks.
    ///
    /// # Panics
    ///
    /// Panics if a rank is outside the alphabet.
    pub fn from_ranks(alphabet: &Arc<OrderedAlphabet>, letters: Vec<u8>) -> Self {
        assert!(letters.iter().all(|&r| (r as usize) < alphabet.len()), "rank outside alphabet");
        Self { alphabet: Arc::clone(alphabet), letters }
    }

    pub fn empty(alphabet: &Arc<OrderedAlphabet>) -> Self {
        Self { alphabet: Arc::clone(alphabet), letters: Vec::new() }
    }

    pub fn alphabet(&self) -> &Arc<OrderedAlphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.letters.last().copied()
    }

    /// A word over the same alphabet; ranks are trusted.
    pub(crate) fn with_letters(&self, letters: Vec<u8>) -> Self {
        Self { alphabet: Arc::clone(&self.alphabet), letters }
    }

    pub fn factor(&self, range: Range<usize>) -> Self {
        self.with_letters(self.letters[range].to_vec())
    }

    /// Concatenation `self · other`.
    ///
    /// # Panics
    ///
    /// Panics if the two words are over different alphabets.
    pub fn concat(&self, other: &Word) -> Self {
        assert!(self.same_alphabet(other), "concatenating words over different alphabets");
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        self.with_letters(letters)
    }

    pub fn push(&mut self, rank: u8) {
        assert!((rank as usize) < self.alphabet.len(), "rank outside alphabet");
        self.letters.push(rank);
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    /// `R(w)`: the letters in reverse order.
    pub fn reverse(&self) -> Self {
        self.with_letters(self.letters.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    /// Occurrence count of every alphabet symbol.
    pub fn parikh(&self) -> ParikhVector {
        let mut counts = vec![0; self.alphabet.len()];
        for &r in &self.letters {
            counts[r as usize] += 1;
        }
        ParikhVector { alphabet: Arc::clone(&self.alphabet), counts }
    }

    /// The symbols occurring in the word, in alphabet order.
    pub fn alph(&self) -> Vec<char> {
        self.alph_ranks().into_iter().map(|r| self.alphabet.symbol(r)).collect()
    }

    pub fn alph_ranks(&self) -> Vec<u8> {
        let mut seen = vec![false; self.alphabet.len()];
        for &r in &self.letters {
            seen[r as usize] = true;
        }
        (0..self.alphabet.len() as u8).filter(|&r| seen[r as usize]).collect()
    }

    /// `Fact_k(w)`: the distinct factors of length `k`.
    pub fn factors(&self, k: usize) -> BTreeSet<Word> {
        if k == 0 {
            return BTreeSet::from([self.with_letters(Vec::new())]);
        }
        self.letters.windows(k).map(|f| self.with_letters(f.to_vec())).collect()
    }

    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyWord("primitivity"));
        }
        Ok(is_primitive(&self.letters))
    }

    /// All `|w|` rotations, starting with `w` itself.
    pub fn conjugates(&self) -> Vec<Word> {
        (0..self.len()).map(|i| self.rotate(i)).collect()
    }

    /// `w_{i+1} ⋯ w_n w_1 ⋯ w_i`.
    pub fn rotate(&self, i: usize) -> Self {
        let mut letters = self.letters[i..].to_vec();
        letters.extend_from_slice(&self.letters[..i]);
        self.with_letters(letters)
    }

    pub fn is_lyndon(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyWord("the Lyndon property"));
        }
        Ok(is_lyndon(&self.letters))
    }

    /// The unique Lyndon word conjugate to a primitive word.
    pub fn lyndon_conjugate(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord("the Lyndon conjugate"));
        }
        if !is_primitive(&self.letters) {
            return Err(Error::NotPrimitive(self.to_string()));
        }
        let n = self.len();
        let doubled = [self.letters.as_slice(), self.letters.as_slice()].concat();
        let start = (0..n).min_by(|&i, &j| doubled[i..i + n].cmp(&doubled[j..j + n])).unwrap();
        Ok(self.rotate(start))
    }
}

pub(crate) fn is_palindrome(letters: &[u8]) -> bool {
    letters.iter().eq(letters.iter().rev())
}

pub(crate) fn is_primitive(letters: &[u8]) -> bool {
    let n = letters.len();
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| letters.chunks(d).any(|block| block != &letters[..d]))
}

/// Strictly smaller than every other rotation.
pub(crate) fn is_lyndon(letters: &[u8]) -> bool {
    let n = letters.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|i| {
        let rotated = letters[i..].iter().chain(&letters[..i]);
        letters.iter().cmp(rotated) == Ordering::Less
    })
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.same_alphabet(other)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl Ord for Word {
    /// Lexicographic by rank; words over different alphabets are ordered by
    /// their alphabets afterwards so that `Ord` stays consistent with `Eq`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters).then_with(|| self.alphabet.symbols.cmp(&other.alphabet.symbols))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|&r| write!(f, "{}", self.alphabet.symbol(r)))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// `(|w|_x)_x` for every symbol `x` of the alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParikhVector {
    alphabet: Arc<OrderedAlphabet>,
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn get(&self, symbol: char) -> Option<usize> {
        self.alphabet.rank(symbol).map(|r| self.counts[r as usize])
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, usize)> + '_ {
        self.alphabet.symbols().iter().copied().zip(self.counts.iter().copied())
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (symbol, count)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{symbol}:{count}")?;
        }
        write!(f, ")")
    }
}

/// Lyndon words over the whole alphabet with length at most `max_len`, in
/// lexicographic order (Duval's generation algorithm).
pub struct LyndonWords {
    alphabet: Arc<OrderedAlphabet>,
    max_len: usize,
    current: Vec<u8>,
    started: bool,
}

impl LyndonWords {
    pub fn new(alphabet: &Arc<OrderedAlphabet>, max_len: usize) -> Self {
        Self { alphabet: Arc::clone(alphabet), max_len, current: Vec::new(), started: false }
    }
}

impl Iterator for LyndonWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let top = self.alphabet.len() as u8 - 1;
        if !self.started {
            self.started = true;
            if self.max_len == 0 {
                return None;
            }
            self.current.push(0);
            return Some(Word::from_ranks(&self.alphabet, self.current.clone()));
        }
        let period = self.current.len();
        while self.current.len() < self.max_len {
            let r = self.current[self.current.len() - period];
            self.current.push(r);
        }
        while self.current.last() == Some(&top) {
            self.current.pop();
        }
        let last = self.current.last_mut()?;
        *last += 1;
        Some(Word::from_ranks(&self.alphabet, self.current.clone()))
    }
}
