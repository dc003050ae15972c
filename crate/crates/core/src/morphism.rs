//! The letter exchange `θ`, the antimorphism `ω = R∘θ`, and the free-group
//! automorphisms `λa, λb, ρb, ρc` that build perfectly clustering words.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::bwt::is_perfectly_clustering_ranks;
use crate::language::DirectiveLanguage;
use crate::words::{A, B, C};
use crate::{Error, OrderedAlphabet, Result, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedLetter {
    pub rank: u8,
    pub sign: Sign,
}

impl SignedLetter {
    pub const fn pos(rank: u8) -> Self {
        Self { rank, sign: Sign::Plus }
    }

    pub const fn neg(rank: u8) -> Self {
        Self { rank, sign: Sign::Minus }
    }

    pub fn exponent(self) -> i8 {
        match self.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn inverse(self) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        Self { rank: self.rank, sign }
    }
}

/// A freely reduced word of the free group on an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupWord {
    alphabet: Arc<OrderedAlphabet>,
    letters: Vec<SignedLetter>,
}

impl FreeGroupWord {
    /// Cancels adjacent `xx⁻¹` and `x⁻¹x` pairs until none remain.
    pub fn reduce(alphabet: &Arc<OrderedAlphabet>, letters: impl IntoIterator<Item = SignedLetter>) -> Self {
        let mut stack: Vec<SignedLetter> = Vec::new();
        for x in letters {
            assert!((x.rank as usize) < alphabet.len(), "rank outside alphabet");
            if stack.last() == Some(&x.inverse()) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        Self { alphabet: Arc::clone(alphabet), letters: stack }
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { alphabet: Arc::clone(&self.alphabet), letters: self.letters.iter().rev().map(|x| x.inverse()).collect() }
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|x| x.sign == Sign::Plus)
    }

    /// The underlying monoid word, if every exponent is positive.
    pub fn to_word(&self) -> Option<Word> {
        self.is_positive().then(|| Word::from_ranks(&self.alphabet, self.letters.iter().map(|x| x.rank).collect()))
    }
}

impl From<&Word> for FreeGroupWord {
    fn from(w: &Word) -> Self {
        Self {
            alphabet: Arc::clone(w.alphabet()),
            letters: w.letters().iter().map(|&r| SignedLetter::pos(r)).collect(),
        }
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for x in &self.letters {
            write!(f, "{}", self.alphabet.symbol(x.rank))?;
            if x.sign == Sign::Minus {
                f.write_str("⁻¹")?;
            }
        }
        Ok(())
    }
}

/// Free reduction of an arbitrary signed sequence.
pub fn free_reduce(alphabet: &Arc<OrderedAlphabet>, letters: &[SignedLetter]) -> FreeGroupWord {
    FreeGroupWord::reduce(alphabet, letters.iter().copied())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AutomorphismName {
    LambdaA,
    LambdaB,
    RhoB,
    RhoC,
}

impl AutomorphismName {
    /// Trial order used by [`decompose`].
    pub const ALL: [Self; 4] = [Self::LambdaA, Self::LambdaB, Self::RhoB, Self::RhoC];

    pub fn id(self) -> &'static str {
        match self {
            Self::LambdaA => "lambda_a",
            Self::LambdaB => "lambda_b",
            Self::RhoB => "rho_b",
            Self::RhoC => "rho_c",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Self::LambdaA => "λa",
            Self::LambdaB => "λb",
            Self::RhoB => "ρb",
            Self::RhoC => "ρc",
        }
    }
}

impl fmt::Display for AutomorphismName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for AutomorphismName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.id() == s || n.symbol() == s)
            .ok_or_else(|| Error::UnknownAutomorphism(s.to_string()))
    }
}

/// One of `λa, λb, ρb, ρc` or its inverse, acting on the generators `a, b, c`.
/// Letters of larger rank are left fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub name: AutomorphismName,
    pub inverted: bool,
}

const P: fn(u8) -> SignedLetter = SignedLetter::pos;
const N: fn(u8) -> SignedLetter = SignedLetter::neg;

impl Automorphism {
    pub fn new(name: AutomorphismName) -> Self {
        Self { name, inverted: false }
    }

    pub fn inverse(self) -> Self {
        Self { name: self.name, inverted: !self.inverted }
    }

    /// Image of the generator of rank `x`.
    pub fn image(self, x: u8) -> Vec<SignedLetter> {
        use AutomorphismName::*;
        match (self.name, self.inverted, x) {
            (_, _, x) if x > C => vec![P(x)],
            // λa: a → a, b → ab, c → ac
            (LambdaA, false, A) => vec![P(A)],
            (LambdaA, false, y) => vec![P(A), P(y)],
            (LambdaA, true, A) => vec![P(A)],
            (LambdaA, true, y) => vec![N(A), P(y)],
            // λb: a → ab⁻¹, b → b, c → bc
            (LambdaB, false, A) | (RhoB, true, A) => vec![P(A), N(B)],
            (LambdaB, false, C) | (RhoB, true, C) => vec![P(B), P(C)],
            // ρb: a → ab, b → b, c → b⁻¹c
            (RhoB, false, A) | (LambdaB, true, A) => vec![P(A), P(B)],
            (RhoB, false, C) | (LambdaB, true, C) => vec![N(B), P(C)],
            (LambdaB | RhoB, _, _) => vec![P(B)],
            // ρc: a → ac, b → bc, c → c
            (RhoC, _, C) => vec![P(C)],
            (RhoC, false, y) => vec![P(y), P(C)],
            (RhoC, true, y) => vec![P(y), N(C)],
        }
    }

    pub fn apply(self, w: &FreeGroupWord) -> FreeGroupWord {
        let letters = w.letters.iter().flat_map(|x| {
            let image = self.image(x.rank);
            match x.sign {
                Sign::Plus => image,
                Sign::Minus => image.into_iter().rev().map(SignedLetter::inverse).collect(),
            }
        });
        FreeGroupWord::reduce(&w.alphabet, letters)
    }

    pub fn apply_word(self, w: &Word) -> FreeGroupWord {
        self.apply(&FreeGroupWord::from(w))
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if self.inverted {
            f.write_str("⁻¹")?;
        }
        Ok(())
    }
}

pub fn apply_automorphism(f: Automorphism, w: &FreeGroupWord) -> FreeGroupWord {
    f.apply(w)
}

pub fn inverse_automorphism(f: Automorphism) -> Automorphism {
    f.inverse()
}

fn require_ternary_alphabet(w: &Word) -> Result<()> {
    if w.alphabet().len() != 3 {
        return Err(Error::NotTernaryAlphabet(w.alphabet().to_string()));
    }
    Ok(())
}

/// `θ`: exchanges `a` and `c`, fixes `b`.
pub fn theta(w: &Word) -> Result<Word> {
    require_ternary_alphabet(w)?;
    Ok(w.with_letters(w.letters().iter().map(|&r| C - r).collect()))
}

/// `ω = R∘θ`.
pub fn omega(w: &Word) -> Result<Word> {
    Ok(theta(w)?.reverse())
}

fn directive_map(x: u8) -> AutomorphismName {
    match x {
        A => AutomorphismName::LambdaA,
        B => AutomorphismName::RhoB,
        _ => AutomorphismName::RhoC,
    }
}

/// `f_{x₁}∘⋯∘f_{xₙ}(abac)` with `a ↦ λa`, `b ↦ ρb`, `c ↦ ρc`; the last
/// directive letter acts first. The result is a perfectly clustering Lyndon
/// word `a·Pal(u)·b·q·c` when `u ∈ {a,c}*·{a,b}*`.
pub fn witness_from_directive(u: &Word) -> Result<Word> {
    require_ternary_alphabet(u)?;
    if !DirectiveLanguage::AcsAbs.contains(u) {
        return Err(Error::OutsideLanguage { word: u.to_string(), language: DirectiveLanguage::AcsAbs.id() });
    }
    let seed = u.with_letters(vec![A, B, A, C]);
    let image = u
        .letters()
        .iter()
        .rev()
        .fold(FreeGroupWord::from(&seed), |w, &x| Automorphism::new(directive_map(x)).apply(&w));
    image.to_word().ok_or_else(|| Error::NegativeImage(image.to_string()))
}

/// The mirror construction for second parts: `ω(witness(θ(u)))`, a perfectly
/// clustering Lyndon word `a·q·b·Pal(u)·c` when `u ∈ {a,c}*·{b,c}*`.
pub fn witness_p2_from_directive(u: &Word) -> Result<Word> {
    require_ternary_alphabet(u)?;
    if !DirectiveLanguage::AcsBcs.contains(u) {
        return Err(Error::OutsideLanguage { word: u.to_string(), language: DirectiveLanguage::AcsBcs.id() });
    }
    omega(&witness_from_directive(&theta(u)?)?)
}

/// `w = f(u)` with `u` shorter and perfectly clustering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub automorphism: AutomorphismName,
    pub preimage: Word,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.automorphism, self.preimage)
    }
}

/// Every qualifying decomposition, in the trial order `λa, λb, ρb, ρc`.
pub fn decompose_all(w: &Word) -> Result<Vec<Decomposition>> {
    require_ternary_alphabet(w)?;
    if w.len() < 3 {
        return Err(Error::TooShort { word: w.to_string(), min: 3 });
    }
    if !is_perfectly_clustering_ranks(w.letters()) {
        return Err(Error::NotPerfectlyClustering(w.to_string()));
    }
    let source = FreeGroupWord::from(w);
    Ok(AutomorphismName::ALL
        .into_iter()
        .filter_map(|name| {
            let f = Automorphism::new(name);
            let preimage = f.inverse().apply(&source).to_word()?;
            let qualifies = !preimage.is_empty()
                && preimage.len() < w.len()
                && is_perfectly_clustering_ranks(preimage.letters())
                && f.apply_word(&preimage) == source;
            qualifies.then_some(Decomposition { automorphism: name, preimage })
        })
        .collect())
}

/// The first qualifying decomposition. Expected to be present for every
/// perfectly clustering word of length at least 3.
pub fn decompose(w: &Word) -> Result<Option<Decomposition>> {
    Ok(decompose_all(w)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::factorization::palindromic_special_factorization;
    use crate::palindrome::pal;

    fn w(s: &str) -> Word {
        Word::ternary(s).unwrap()
    }

    fn fg(s: &str) -> FreeGroupWord {
        FreeGroupWord::from(&w(s))
    }

    fn auto(name: AutomorphismName) -> Automorphism {
        Automorphism::new(name)
    }

    use AutomorphismName::*;

    #[test]
    fn reduction_examples() {
        let abc = OrderedAlphabet::abc();
        let r = free_reduce(&abc, &[P(A), N(B), P(B), P(A)]);
        assert_eq!(r.to_string(), "aa");
        assert!(free_reduce(&abc, &[P(A), N(A)]).is_empty());
        assert_eq!(free_reduce(&abc, &[P(A), P(B), P(C)]).to_string(), "abc");
        assert_eq!(free_reduce(&abc, &[P(A), P(B), N(B), N(A), P(C)]).to_string(), "c");
        assert_eq!(free_reduce(&abc, &[N(A), P(B)]).to_string(), "a⁻¹b");
    }

    #[test]
    fn theta_omega_examples() {
        assert_eq!(theta(&w("bcb")).unwrap(), w("bab"));
        assert_eq!(theta(&w("cac")).unwrap(), w("aca"));
        assert_eq!(theta(&w("")).unwrap(), w(""));
        assert_eq!(omega(&w("acacbc")).unwrap(), w("abacac"));
        assert_eq!(omega(&w("abac")).unwrap(), w("acbc"));
        assert_eq!(omega(&w("b")).unwrap(), w("b"));
        let ab = Arc::new(OrderedAlphabet::new("ab").unwrap());
        assert!(matches!(theta(&Word::parse("ab", &ab).unwrap()), Err(Error::NotTernaryAlphabet(_))));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(auto(RhoC).apply(&fg("abac")), fg("acbcacc"));
        assert_eq!(auto(LambdaA).apply(&fg("abac")), fg("aabaac"));
        assert_eq!(auto(LambdaB).apply(&fg("abac")), fg("aac"));
        assert_eq!(auto(RhoB).apply(&fg("abac")), fg("abbac"));
        assert_eq!(auto(LambdaB).apply_word(&w("a")).to_string(), "ab⁻¹");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_automorphism(auto(LambdaA)).apply(&fg("aabaac")), fg("abac"));
        assert_eq!(auto(RhoC).inverse().apply(&fg("acbcacc")), fg("abac"));
        assert_eq!(auto(LambdaB).inverse().apply(&fg("aac")), fg("abac"));
        assert_eq!(auto(LambdaA).inverse().to_string(), "λa⁻¹");
    }

    #[test]
    fn inverses_fix_generators() {
        for name in AutomorphismName::ALL {
            let f = auto(name);
            for x in [A, B, C] {
                let generator = FreeGroupWord::reduce(&OrderedAlphabet::abc(), [P(x)]);
                assert_eq!(f.inverse().apply(&f.apply(&generator)), generator, "{f} on {x}");
                assert_eq!(f.apply(&f.inverse().apply(&generator)), generator, "{f} on {x}");
            }
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_from_directive(&w("c")).unwrap(), w("acbcacc"));
        assert_eq!(witness_from_directive(&w("a")).unwrap(), w("aabaac"));
        assert_eq!(witness_from_directive(&w("ca")).unwrap(), w("acacbcacacc"));
        assert_eq!(witness_from_directive(&w("")).unwrap(), w("abac"));
        let f = palindromic_special_factorization(&w("acacbcacacc")).unwrap().unwrap();
        assert_eq!(f.pi1(), Some(&pal(&w("ca"))));
        assert!(matches!(witness_from_directive(&w("bc")), Err(Error::OutsideLanguage { .. })));
        assert!(matches!(witness_p2_from_directive(&w("ba")), Err(Error::OutsideLanguage { .. })));
    }

    #[test]
    fn p2_witness_places_pal_second() {
        for u in ["", "b", "c", "cb", "acbc", "bbc"] {
            let witness = witness_p2_from_directive(&w(u)).unwrap();
            let f = palindromic_special_factorization(&witness).unwrap().unwrap();
            assert_eq!(f.pi2(), Some(&pal(&w(u))), "{u}");
        }
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&w("acbcacc")).unwrap().unwrap();
        assert_eq!((d.automorphism, d.preimage), (RhoC, w("abac")));
        let d = decompose(&w("aabaac")).unwrap().unwrap();
        assert_eq!((d.automorphism, d.preimage), (LambdaA, w("abac")));
        let d = decompose(&w("abac")).unwrap().unwrap();
        assert_eq!((d.automorphism, d.preimage.clone()), (LambdaA, w("bc")));
        assert_eq!(d.to_string(), "λa(bc)");
        assert!(matches!(decompose(&w("abc")), Err(Error::NotPerfectlyClustering(_))));
        assert!(matches!(decompose(&w("cb")), Err(Error::TooShort { .. })));
    }

    fn ternary_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..3, 0..max).prop_map(|letters| Word::from_ranks(&OrderedAlphabet::abc(), letters))
    }

    proptest! {
        #[test]
        fn theta_and_omega_are_involutions(x in ternary_word(20)) {
            prop_assert_eq!(theta(&theta(&x).unwrap()).unwrap(), x.clone());
            prop_assert_eq!(omega(&omega(&x).unwrap()).unwrap(), x);
        }

        #[test]
        fn automorphisms_round_trip(x in ternary_word(16), i in 0usize..4) {
            let f = auto(AutomorphismName::ALL[i]);
            let source = FreeGroupWord::from(&x);
            prop_assert_eq!(f.inverse().apply(&f.apply(&source)), source.clone());
            prop_assert_eq!(f.apply(&f.inverse().apply(&source)), source);
        }

        #[test]
        fn reduction_is_idempotent_and_respects_inverse(x in ternary_word(12), y in ternary_word(12)) {
            let abc = OrderedAlphabet::abc();
            let g = FreeGroupWord::from(&x);
            let h = FreeGroupWord::from(&y).inverse();
            let product = FreeGroupWord::reduce(&abc, g.letters().iter().chain(h.letters()).copied());
            let again = free_reduce(&abc, product.letters());
            prop_assert_eq!(&again, &product);
            let back = FreeGroupWord::reduce(&abc, product.letters().iter().chain(h.inverse().letters()).copied());
            prop_assert_eq!(back, g);
        }
    }
}
