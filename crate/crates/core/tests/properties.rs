use std::sync::LazyLock;

use pclwords::factorization::{is_pcl, palindromic_special_factorization};
use pclwords::language::DirectiveLanguage;
use pclwords::morphism::{
    decompose, omega, theta, witness_from_directive, witness_p2_from_directive, Automorphism, AutomorphismName,
    FreeGroupWord,
};
use pclwords::palindrome::pal;
use pclwords::verify::{enumerate_pcl, PclCatalog, Verifier};
use pclwords::{OrderedAlphabet, Word};
use proptest::prelude::*;

static CATALOG: LazyLock<PclCatalog> = LazyLock::new(|| enumerate_pcl(13).unwrap());

fn ternary(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..3, 0..=max).prop_map(|v| Word::from_ranks(&OrderedAlphabet::abc(), v))
}

fn catalog_word() -> impl Strategy<Value = Word> {
    (0..CATALOG.len()).prop_map(|i| CATALOG.entries()[i].word.clone())
}

proptest! {
    #[test]
    fn omega_mirrors_the_factorization(x in catalog_word()) {
        let f = palindromic_special_factorization(&x).unwrap().unwrap();
        let mirror = omega(&x).unwrap();
        prop_assert!(is_pcl(&mirror).unwrap());
        let g = palindromic_special_factorization(&mirror).unwrap().unwrap();
        prop_assert_eq!(g.pi1().unwrap(), &theta(f.pi2().unwrap()).unwrap());
        prop_assert_eq!(g.pi2().unwrap(), &theta(f.pi1().unwrap()).unwrap());
    }

    #[test]
    fn catalog_words_decompose(x in catalog_word()) {
        let d = decompose(&x).unwrap().unwrap();
        let image = Automorphism::new(d.automorphism).apply_word(&d.preimage);
        prop_assert_eq!(image, FreeGroupWord::from(&x));
        prop_assert!(d.preimage.len() < x.len());
    }

    #[test]
    fn directive_witnesses_carry_their_palindrome(u in ternary(7)) {
        if DirectiveLanguage::AcsAbs.contains(&u) {
            let witness = witness_from_directive(&u).unwrap();
            let f = palindromic_special_factorization(&witness).unwrap().unwrap();
            prop_assert_eq!(f.pi1().unwrap(), &pal(&u));
        }
        if DirectiveLanguage::AcsBcs.contains(&u) {
            let witness = witness_p2_from_directive(&u).unwrap();
            let f = palindromic_special_factorization(&witness).unwrap().unwrap();
            prop_assert_eq!(f.pi2().unwrap(), &pal(&u));
        }
    }

    #[test]
    fn automorphisms_invert(x in ternary(12), i in 0..4usize) {
        let f = Automorphism::new(AutomorphismName::ALL[i]);
        let there = f.apply_word(&x);
        prop_assert_eq!(f.inverse().apply(&there), FreeGroupWord::from(&x));
    }
}

#[test]
fn catalog_entries_pass_both_classifiers() {
    for entry in CATALOG.entries() {
        assert!(is_pcl(&entry.word).unwrap(), "{}", entry.word);
        assert_eq!(entry.factorization.reconstruct(), entry.word);
    }
}

#[test]
fn every_claim_passes_at_the_default_bound() {
    let verifier = Verifier::new(12);
    for claim in pclwords::verify::Claim::ALL {
        let report = verifier.verify(claim).unwrap();
        assert!(report.passed(), "{report}");
    }
}
