//! The three regular languages of directive words `X*·Y*` over `{a, b, c}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::words::{A, B, C};
use crate::{Error, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DirectiveLanguage {
    /// `{a, c}*·{a, b}*`
    #[serde(rename = "acs-abs")]
    AcsAbs,
    /// `{a, c}*·{b, c}*`
    #[serde(rename = "acs-bcs")]
    AcsBcs,
    /// `{a, c}*·b*`
    #[serde(rename = "acs-bs")]
    AcsBs,
}

impl DirectiveLanguage {
    pub const ALL: [Self; 3] = [Self::AcsAbs, Self::AcsBcs, Self::AcsBs];

    pub fn id(self) -> &'static str {
        match self {
            Self::AcsAbs => "acs-abs",
            Self::AcsBcs => "acs-bcs",
            Self::AcsBs => "acs-bs",
        }
    }

    fn blocks(self) -> (&'static [u8], &'static [u8]) {
        match self {
            Self::AcsAbs => (&[A, C], &[A, B]),
            Self::AcsBcs => (&[A, C], &[B, C]),
            Self::AcsBs => (&[A, C], &[B]),
        }
    }

    /// Membership over ranks; the maximal prefix in the first block leaves
    /// the shortest suffix, so it is the only split worth testing.
    pub(crate) fn contains_ranks(self, letters: &[u8]) -> bool {
        let (first, second) = self.blocks();
        let cut = letters.iter().position(|x| !first.contains(x)).unwrap_or(letters.len());
        letters[cut..].iter().all(|x| second.contains(x))
    }

    /// Membership of a word over a ternary alphabet.
    pub fn contains(self, u: &Word) -> bool {
        u.alphabet().len() == 3 && self.contains_ranks(u.letters())
    }
}

impl fmt::Display for DirectiveLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for DirectiveLanguage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL.into_iter().find(|l| l.id() == s).ok_or_else(|| Error::UnknownLanguage(s.to_string()))
    }
}

/// Regular-language membership test by identifier.
pub fn language_membership(u: &Word, language: &str) -> Result<bool, Error> {
    Ok(language.parse::<DirectiveLanguage>()?.contains(u))
}
