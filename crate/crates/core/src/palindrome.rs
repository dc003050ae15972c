//! Palindromic closure, iterated palindromization and directive words.

use std::fmt;

use crate::words::is_palindrome;
use crate::{Error, Result, Word};

/// Length of the longest palindromic suffix, scanning suffixes longest first.
pub(crate) fn longest_palindromic_suffix_len(letters: &[u8]) -> usize {
    let n = letters.len();
    (0..n).find(|&i| is_palindrome(&letters[i..])).map_or(0, |i| n - i)
}

pub(crate) fn closure_ranks(letters: &[u8]) -> Vec<u8> {
    let n = letters.len();
    let prefix = n - longest_palindromic_suffix_len(letters);
    let mut out = letters.to_vec();
    out.extend(letters[..prefix].iter().rev());
    out
}

pub(crate) fn pal_ranks(directive: &[u8]) -> Vec<u8> {
    directive.iter().fold(Vec::new(), |mut acc, &x| {
        acc.push(x);
        closure_ranks(&acc)
    })
}

/// `Pal(directive)` unless some prefix image grows past `cap` letters.
pub(crate) fn pal_ranks_capped(directive: &[u8], cap: usize) -> Option<Vec<u8>> {
    let mut acc = Vec::new();
    for &x in directive {
        acc.push(x);
        acc = closure_ranks(&acc);
        if acc.len() > cap {
            return None;
        }
    }
    Some(acc)
}

/// The longest suffix of `w` that is a palindrome.
pub fn longest_palindromic_suffix(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord("the longest palindromic suffix"));
    }
    let n = w.len();
    Ok(w.factor(n - longest_palindromic_suffix_len(w.letters())..n))
}

/// `w⁽⁺⁾`: the shortest palindrome having `w` as a prefix.
pub fn palindromic_closure(w: &Word) -> Word {
    w.with_letters(closure_ranks(w.letters()))
}

/// Iterated palindromization: `Pal(ε) = ε`, `Pal(ux) = (Pal(u)x)⁽⁺⁾`.
pub fn pal(u: &Word) -> Word {
    u.with_letters(pal_ranks(u.letters()))
}

/// The preimage of an iterated palindrome under [`pal`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectiveWord(Word);

impl DirectiveWord {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// The iterated palindrome this word directs.
    pub fn image(&self) -> Word {
        pal(&self.0)
    }
}

impl fmt::Display for DirectiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Recovers `u` with `pal(u) = w`, or `None` if `w` is not an iterated
/// palindrome.
///
/// Walks the chain of palindromic prefixes `Pal(u₁⋯uᵢ)`: the letter of `w`
/// right after the current prefix is the next directive letter, and its
/// closure must again be a prefix of `w`.
pub fn directive_of(w: &Word) -> Option<DirectiveWord> {
    let target = w.letters();
    let mut prefix: Vec<u8> = Vec::new();
    let mut directive = Vec::new();
    while prefix.len() < target.len() {
        let x = target[prefix.len()];
        prefix.push(x);
        prefix = closure_ranks(&prefix);
        if !target.starts_with(&prefix) {
            return None;
        }
        directive.push(x);
    }
    Some(DirectiveWord(w.with_letters(directive)))
}

/// True iff `x` occurs in every factor of length 2 of `w`.
pub fn is_separating(x: char, w: &Word) -> bool {
    let Some(rank) = w.alphabet().rank(x) else {
        return w.len() <= 1;
    };
    w.letters().windows(2).all(|pair| pair.contains(&rank))
}

/// Whether `w` is a (lower) Christoffel word over the two letters it uses:
/// `w = x·m·y` with `x < y` and `m` an iterated palindrome over `{x, y}`.
///
/// Single letters count as trivial Christoffel words; the empty word does not.
pub fn is_christoffel(w: &Word) -> Result<bool> {
    let present = w.alph_ranks();
    match present.as_slice() {
        [] => Ok(false),
        [_] => Ok(w.len() == 1),
        &[low, high] => {
            let letters = w.letters();
            if letters[0] != low || letters[letters.len() - 1] != high {
                return Ok(false);
            }
            Ok(directive_of(&w.factor(1..letters.len() - 1)).is_some())
        }
        _ => Err(Error::NotBinary(w.to_string())),
    }
}
