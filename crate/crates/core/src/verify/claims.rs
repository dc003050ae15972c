use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::catalog::{enumerate_pcl_with, PclCatalog};
use super::sets::{witness_is_valid, MembershipVerdict, PalindromeSets, Side};
use crate::bwt::is_perfectly_clustering_ranks;
use crate::factorization::{compatible_sets, is_pcl, is_pcl_via_bwt, pair_mask, special_factorizations};
use crate::language::DirectiveLanguage;
use crate::morphism::{
    decompose, decompose_all, theta, witness_from_directive, witness_p2_from_directive, AutomorphismName,
};
use crate::palindrome::{directive_of, is_christoffel, pal, pal_ranks_capped};
use crate::words::LyndonWords;
use crate::{Error, OrderedAlphabet, Result, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Lemma1,
    Prop2,
    Lemma3,
    Prop4,
    Prop6,
    Prop7,
    Lemma5,
    Conjecture8,
    CharEquivalence,
    BinaryChristoffel,
    /// Exactly one palindromic special factorization per catalog word.
    Uniqueness,
    /// Every catalog word is `f(u)` for a shorter perfectly clustering `u`.
    Decomposition,
}

impl Claim {
    pub const ALL: [Claim; 12] = [
        Self::Lemma1,
        Self::Prop2,
        Self::Lemma3,
        Self::Prop4,
        Self::Prop6,
        Self::Prop7,
        Self::Lemma5,
        Self::Conjecture8,
        Self::CharEquivalence,
        Self::BinaryChristoffel,
        Self::Uniqueness,
        Self::Decomposition,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::Lemma1 => "lemma1",
            Self::Prop2 => "prop2",
            Self::Lemma3 => "lemma3",
            Self::Prop4 => "prop4",
            Self::Prop6 => "prop6",
            Self::Prop7 => "prop7",
            Self::Lemma5 => "lemma5",
            Self::Conjecture8 => "conjecture8",
            Self::CharEquivalence => "char-equivalence",
            Self::BinaryChristoffel => "binary-christoffel",
            Self::Uniqueness => "uniqueness",
            Self::Decomposition => "decomposition",
        }
    }

    /// Whether the check reads the palindrome catalog.
    pub fn needs_catalog(self) -> bool {
        !matches!(self, Self::CharEquivalence | Self::BinaryChristoffel)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Counterexample,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Counterexample => "counterexample",
            Self::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Stats {
    pub words_checked: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub bound: usize,
    pub status: Status,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    pub stats: Stats,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (bound {}): {} [{} words, {} ms]",
            self.claim, self.bound, self.status, self.stats.words_checked, self.stats.elapsed_ms
        )?;
        for word in &self.counterexamples {
            write!(f, "\n  counterexample: {word}")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Knobs for the claims that are not driven by the catalog bound alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimSettings {
    /// Maximum directive length for the Pal(u) classification claims.
    pub directive_len: usize,
    /// Maximum directive length for the `pal(u) = π₁` round trip.
    pub round_trip_len: usize,
    /// Random directives drawn for `lemma5`.
    pub samples: usize,
    /// Upper limit on `|Pal(b·u)|` for sampled directives.
    pub max_pal_len: usize,
    pub seed: u64,
}

impl Default for ClaimSettings {
    fn default() -> Self {
        Self { directive_len: 5, round_trip_len: 6, samples: 200, max_pal_len: 40, seed: 0x5eed }
    }
}

/// Runs claims against one lazily built catalog.
#[derive(Debug)]
pub struct Verifier {
    bound: usize,
    workers: usize,
    settings: ClaimSettings,
    catalog: OnceLock<PclCatalog>,
    sets: OnceLock<PalindromeSets>,
}

/// Outcome of a single check before timing is attached.
#[derive(Default)]
struct Tally {
    checked: u64,
    counterexamples: Vec<String>,
    notes: Vec<String>,
    inconclusive: bool,
}

impl Tally {
    fn fail(&mut self, word: impl fmt::Display) {
        self.counterexamples.push(word.to_string());
    }
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

/// All words over `abc` of length at most `max_len`, shortest first.
fn ternary_words(max_len: usize) -> Vec<Word> {
    let abc = OrderedAlphabet::abc();
    let mut out = vec![Word::empty(&abc)];
    let mut layer = out.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..3u8).map(move |x| {
                    let mut next = w.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

impl Verifier {
    pub fn new(bound: usize) -> Self {
        Self::with(bound, ClaimSettings::default(), 0)
    }

    pub fn with(bound: usize, settings: ClaimSettings, workers: usize) -> Self {
        Self { bound, workers, settings, catalog: OnceLock::new(), sets: OnceLock::new() }
    }

    /// Reuses an existing catalog; the bound is the catalog's.
    pub fn from_catalog(catalog: PclCatalog, settings: ClaimSettings) -> Self {
        let verifier = Self::with(catalog.bound(), settings, 0);
        let _ = verifier.catalog.set(catalog);
        verifier
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn settings(&self) -> &ClaimSettings {
        &self.settings
    }

    pub fn catalog(&self) -> Result<&PclCatalog> {
        if let Some(catalog) = self.catalog.get() {
            return Ok(catalog);
        }
        let built = enumerate_pcl_with(self.bound, self.workers)?;
        Ok(self.catalog.get_or_init(|| built))
    }

    pub fn sets(&self) -> Result<&PalindromeSets> {
        let catalog = self.catalog()?;
        Ok(self.sets.get_or_init(|| PalindromeSets::new(catalog)))
    }

    pub fn verify(&self, claim: Claim) -> Result<VerificationReport> {
        let start = Instant::now();
        let tally = match claim {
            Claim::Lemma1 => self.lemma1()?,
            Claim::Prop2 => self.prop2()?,
            Claim::Lemma3 => self.lemma3()?,
            Claim::Prop4 => self.pal_classification(Side::P1)?,
            Claim::Prop6 => self.pal_classification(Side::P2)?,
            Claim::Prop7 => self.prop7()?,
            Claim::Lemma5 => self.lemma5()?,
            Claim::Conjecture8 => self.conjecture8()?,
            Claim::CharEquivalence => self.char_equivalence()?,
            Claim::BinaryChristoffel => self.binary_christoffel()?,
            Claim::Uniqueness => self.uniqueness()?,
            Claim::Decomposition => self.decomposition()?,
        };
        let status = if !tally.counterexamples.is_empty() {
            Status::Counterexample
        } else if tally.inconclusive {
            Status::Unknown
        } else {
            Status::Pass
        };
        Ok(VerificationReport {
            claim: claim.id().to_string(),
            bound: self.bound,
            status,
            counterexamples: tally.counterexamples,
            notes: tally.notes,
            stats: Stats { words_checked: tally.checked, elapsed_ms: start.elapsed().as_millis() as u64 },
        })
    }

    fn lemma1(&self) -> Result<Tally> {
        let mut tally = Tally::default();
        for word in self.catalog()?.words() {
            for conjugate in word.conjugates() {
                tally.checked += 1;
                if compatible_sets(pair_mask(conjugate.letters())).next().is_none() {
                    tally.fail(&conjugate);
                }
            }
        }
        Ok(tally)
    }

    fn prop2(&self) -> Result<Tally> {
        let mut tally = Tally { checked: 2, ..Tally::default() };
        let sets = self.sets()?;
        let bcb = Word::ternary("bcb")?;
        match sets.membership(Side::P2, &bcb)? {
            MembershipVerdict::Member { witness } => tally.notes.push(format!("bcb in P2, witness {witness}")),
            MembershipVerdict::NonMemberDecisive { certificate } => {
                tally.fail(&bcb);
                tally.notes.push(format!("bcb obstructed in P2 by {certificate:?}"));
            }
            MembershipVerdict::UnknownUpTo { bound } => {
                tally.inconclusive = true;
                tally.notes.push(format!("no P2 witness for bcb up to length {bound}"));
            }
        }
        match sets.membership(Side::P1, &bcb)? {
            MembershipVerdict::Member { witness } => tally.fail(witness),
            MembershipVerdict::NonMemberDecisive { certificate } => {
                let pairs: Vec<String> = certificate.iter().map(Word::to_string).collect();
                tally.notes.push(format!("bcb not in P1, factors {{{}}}", pairs.join(", ")));
            }
            MembershipVerdict::UnknownUpTo { .. } => tally.inconclusive = true,
        }
        Ok(tally)
    }

    fn lemma3(&self) -> Result<Tally> {
        let mut tally = Tally::default();
        let sets = self.sets()?;
        for (palindrome, witness) in sets.p2.sorted() {
            tally.checked += 1;
            let image = theta(palindrome)?;
            match sets.p1.witness(&image) {
                Some(mirror) if mirror.len() == witness.len() => {}
                Some(_) => {
                    tally.fail(show(palindrome));
                    tally.notes.push(format!("witness length differs for θ({})", show(palindrome)));
                }
                None => tally.fail(show(palindrome)),
            }
        }
        for palindrome in sets.p1.keys() {
            tally.checked += 1;
            if !sets.p2.contains(&theta(palindrome)?) {
                tally.fail(show(palindrome));
            }
        }
        tally.notes.push(format!("|P1| = {}, |P2| = {}", sets.p1.len(), sets.p2.len()));
        Ok(tally)
    }

    /// Checks that `witness` is perfectly clustering Lyndon with `part` in
    /// position `side`, and that the catalog agrees when it is long enough.
    fn certify(&self, side: Side, part: &Word, witness: &Word, tally: &mut Tally) -> Result<()> {
        let placed = witness_is_valid(side, part, witness);
        let catalogued = witness.len() > self.bound || self.sets()?.slice(side).contains(part);
        if !placed || !catalogued {
            tally.fail(witness);
        }
        Ok(())
    }

    fn pal_classification(&self, side: Side) -> Result<Tally> {
        let (language, build): (_, fn(&Word) -> Result<Word>) = match side {
            Side::P1 => (DirectiveLanguage::AcsAbs, witness_from_directive),
            Side::P2 => (DirectiveLanguage::AcsBcs, witness_p2_from_directive),
        };
        let sets = self.sets()?;
        let settings = self.settings;
        let mut tally = Tally::default();
        let mut unknown = 0usize;
        for u in ternary_words(settings.directive_len.max(settings.round_trip_len)) {
            let image = pal(&u);
            if language.contains(&u) {
                tally.checked += 1;
                self.certify(side, &image, &build(&u)?, &mut tally)?;
            } else if u.len() <= settings.directive_len {
                tally.checked += 1;
                match sets.membership(side, &image)? {
                    MembershipVerdict::Member { witness } => {
                        tally.fail(format!("{} (Pal = {image}, witness {witness})", show(&u)))
                    }
                    MembershipVerdict::UnknownUpTo { .. } => unknown += 1,
                    MembershipVerdict::NonMemberDecisive { .. } => {}
                }
            }
        }
        tally.notes.push(format!("{unknown} directives outside {language} left undecided"));
        Ok(tally)
    }

    fn prop7(&self) -> Result<Tally> {
        let sets = self.sets()?;
        let mut tally = Tally::default();
        for u in ternary_words(self.settings.directive_len) {
            tally.checked += 1;
            let image = pal(&u);
            if DirectiveLanguage::AcsBs.contains(&u) {
                self.certify(Side::P1, &image, &witness_from_directive(&u)?, &mut tally)?;
                self.certify(Side::P2, &image, &witness_p2_from_directive(&u)?, &mut tally)?;
            } else if sets.membership(Side::P1, &image)?.is_member() && sets.membership(Side::P2, &image)?.is_member() {
                tally.fail(format!("{} (Pal = {image})", show(&u)));
            }
        }
        Ok(tally)
    }

    fn lemma5(&self) -> Result<Tally> {
        let settings = self.settings;
        let sets = self.sets()?;
        let abc = OrderedAlphabet::abc();
        let ac = Word::ternary("ac")?;
        let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
        let mut tally = Tally::default();
        let mut attempts = 0usize;
        let max_attempts = settings.samples.saturating_mul(10_000).max(1);
        while (tally.checked as usize) < settings.samples && attempts < max_attempts {
            attempts += 1;
            let len = rng.random_range(3..=settings.max_pal_len.max(3));
            let mut letters = vec![crate::words::B];
            letters.extend((0..len).map(|_| rng.random_range(0..3u8)));
            let u = Word::from_ranks(&abc, letters[1..].to_vec());
            if u.alph().len() != 3 {
                continue;
            }
            let Some(image) = pal_ranks_capped(&letters, settings.max_pal_len) else {
                continue;
            };
            let image = Word::from_ranks(&abc, image);
            tally.checked += 1;
            let member =
                sets.membership(Side::P1, &image)?.is_member() || sets.membership(Side::P2, &image)?.is_member();
            if image.factors(2).contains(&ac) || member {
                tally.fail(format!("{u} (Pal(bu) = {image})"));
            }
        }
        if (tally.checked as usize) < settings.samples {
            tally.inconclusive = true;
            tally.notes.push(format!("only {} admissible samples drawn", tally.checked));
        }
        Ok(tally)
    }

    fn conjecture8(&self) -> Result<Tally> {
        let sets = self.sets()?;
        let mut tally = Tally::default();
        let common = sets.intersection();
        for palindrome in &common {
            tally.checked += 1;
            match directive_of(palindrome) {
                Some(d) if DirectiveLanguage::AcsBs.contains(d.word()) => {}
                Some(d) => tally.fail(format!("{} (directive {})", show(palindrome), show(d.word()))),
                None => tally.fail(format!("{} (not an iterated palindrome)", show(palindrome))),
            }
        }
        tally.notes.push(format!("|P1 ∩ P2| = {}", common.len()));
        Ok(tally)
    }

    fn char_equivalence(&self) -> Result<Tally> {
        let abc = OrderedAlphabet::abc();
        let mut tally = Tally::default();
        let mut via_bwt = Vec::new();
        for word in LyndonWords::new(&abc, self.bound) {
            if word.alph().len() != 3 {
                continue;
            }
            tally.checked += 1;
            let bwt_side = is_pcl_via_bwt(&word)?;
            if is_pcl(&word)? != bwt_side {
                tally.fail(&word);
            }
            if bwt_side {
                via_bwt.push(word);
            }
        }
        if self.bound >= 3 {
            let catalog: Vec<&Word> = self.catalog()?.words().collect();
            via_bwt.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
            if catalog.len() != via_bwt.len() || catalog.iter().zip(&via_bwt).any(|(x, y)| *x != y) {
                tally.notes.push("catalog differs from the filtered Lyndon words".to_string());
                tally.fail("catalog");
            }
        }
        Ok(tally)
    }

    fn binary_christoffel(&self) -> Result<Tally> {
        let ab = std::sync::Arc::new(OrderedAlphabet::new("ab")?);
        let mut tally = Tally::default();
        for word in LyndonWords::new(&ab, self.bound).filter(|w| w.len() >= 2) {
            tally.checked += 1;
            if is_perfectly_clustering_ranks(word.letters()) != is_christoffel(&word)? {
                tally.fail(&word);
            }
        }
        Ok(tally)
    }

    fn uniqueness(&self) -> Result<Tally> {
        let mut tally = Tally::default();
        for word in self.catalog()?.words() {
            tally.checked += 1;
            let count = special_factorizations(word)?.iter().filter(|f| f.is_palindromic()).count();
            if count != 1 {
                tally.fail(format!("{word} ({count} factorizations)"));
            }
        }
        Ok(tally)
    }

    fn decomposition(&self) -> Result<Tally> {
        let mut tally = Tally::default();
        let mut first_choice: BTreeMap<&'static str, usize> = BTreeMap::new();
        for word in self.catalog()?.words() {
            tally.checked += 1;
            match decompose(word)? {
                Some(d) => *first_choice.entry(d.automorphism.id()).or_default() += 1,
                None => tally.fail(word),
            }
        }
        let usage: Vec<String> = first_choice.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        tally.notes.push(format!("first decomposition by automorphism: {}", usage.join(", ")));

        // does λb ever decompose a word built from a directive?
        let mut built = 0usize;
        let mut with_lambda_b = 0usize;
        for u in ternary_words(self.settings.directive_len) {
            if !DirectiveLanguage::AcsAbs.contains(&u) {
                continue;
            }
            let witness = witness_from_directive(&u)?;
            built += 1;
            if decompose_all(&witness)?.iter().any(|d| d.automorphism == AutomorphismName::LambdaB) {
                with_lambda_b += 1;
            }
        }
        tally
            .notes
            .push(format!("{with_lambda_b} of {built} directive-built witnesses admit a lambda_b decomposition"));
        Ok(tally)
    }
}

/// Runs one claim by identifier with default settings.
pub fn verify_claim(claim: &str, bound: usize) -> Result<VerificationReport> {
    Verifier::new(bound).verify(claim.parse()?)
}
