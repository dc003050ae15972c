//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p pclwords --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use pclwords::bwt::{bwt, clustering_report, is_perfectly_clustering};
use pclwords::factorization::{is_pcl, is_pcl_via_bwt, palindromic_special_factorization};
use pclwords::morphism::{omega, theta};
use pclwords::palindrome::{directive_of, pal, palindromic_closure};
use pclwords::verify::{
    compute_sets, enumerate_pcl, Claim, ClaimSettings, MembershipVerdict, PalindromeSets, PclCatalog, Side, Status,
    Verifier,
};
use pclwords::{OrderedAlphabet, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn w(s: &str) -> Word {
    Word::ternary(s).unwrap()
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

/// Last column of the sorted rotation table, computed on strings.
fn oracle_bwt(s: &str, order: &str) -> String {
    let key = |t: &str| t.chars().map(|c| order.find(c).unwrap()).collect::<Vec<_>>();
    let n = s.len();
    let mut rotations: Vec<String> = (0..n).map(|i| format!("{}{}", &s[i..], &s[..i])).collect();
    rotations.sort_by_key(|r| key(r));
    rotations.iter().map(|r| r.chars().last().unwrap()).collect()
}

fn oracle_clustering(s: &str, order: &str) -> bool {
    let ranks: Vec<usize> = oracle_bwt(s, order).chars().map(|c| order.find(c).unwrap()).collect();
    ranks.windows(2).all(|p| p[0] >= p[1])
}

fn oracle_lyndon(s: &str) -> bool {
    (1..s.len()).all(|i| s < &format!("{}{}", &s[i..], &s[..i])[..])
}

fn all_strings(alphabet: &str, n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        out = out.iter().flat_map(|p| alphabet.chars().map(move |c| format!("{p}{c}"))).collect();
    }
    out
}

fn run_claim(catalog: &PclCatalog, claim: Claim, settings: ClaimSettings) -> Outcome {
    let report = Verifier::from_catalog(catalog.clone(), settings).verify(claim).map_err(|e| e.to_string())?;
    match report.status {
        Status::Pass => Ok(format!("{} words checked", report.stats.words_checked)),
        _ => Err(report.to_string()),
    }
}

fn criterion_1() -> Outcome {
    let latin = Arc::new(OrderedAlphabet::new("abcdefghijklmnopqrstuvwxyz").unwrap());
    for (input, expected) in [("apartment", "tpmteaanr"), ("aluminium", "mmnauuiil")] {
        let word = Word::parse(input, &latin).unwrap();
        let got = bwt(&word).unwrap().to_string();
        ensure(got == expected, || format!("bwt({input}) = {got}"))?;
    }
    let report = clustering_report(&Word::parse("aluminium", &latin).unwrap()).unwrap();
    ensure(report.permutation == Some(vec![4, 5, 1, 6, 2, 3]), || format!("permutation {:?}", report.permutation))?;
    Ok("apartment, aluminium and 451623 reproduced".into())
}

fn criterion_2() -> Outcome {
    let cases = [
        ("acbcbbcbc", "cbc", "bcb"),
        ("acacbc", "cac", ""),
        ("acbcacc", "c", "cac"),
        ("abacabbac", "bacab", "a"),
        ("abac", "", "a"),
    ];
    for (word, pi1, pi2) in cases {
        let x = w(word);
        ensure(is_pcl(&x).unwrap() && is_pcl_via_bwt(&x).unwrap(), || format!("{word} misclassified"))?;
        ensure(oracle_lyndon(word) && oracle_clustering(word, "abc"), || format!("oracle rejects {word}"))?;
        let f = palindromic_special_factorization(&x).unwrap().ok_or(format!("{word} has no factorization"))?;
        ensure(f.pi1() == Some(&w(pi1)) && f.pi2() == Some(&w(pi2)), || format!("{word} factors as {f}"))?;
    }
    Ok("5 words classified and factored".into())
}

fn criterion_3() -> Outcome {
    for word in ["abcbbbcbc", "acbccbbc"] {
        ensure(!oracle_clustering(word, "abc"), || format!("oracle says {word} clusters"))?;
        ensure(!is_perfectly_clustering(&w(word)).unwrap(), || format!("library says {word} clusters"))?;
    }
    Ok("both literal words rejected".into())
}

/// Lyndon words of length `n` over `k` letters, by Möbius inversion.
fn lyndon_count(k: i64, n: i64) -> i64 {
    let mobius = |m: i64| -> i64 {
        let (mut m, mut sign, mut p) = (m, 1, 2);
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if m > 1 {
            -sign
        } else {
            sign
        }
    };
    (1..=n).filter(|d| n % d == 0).map(|d| mobius(d) * k.pow((n / d) as u32)).sum::<i64>() / n
}

fn criterion_4(catalog: &PclCatalog) -> Outcome {
    let verifier = Verifier::from_catalog(catalog.restrict(12), ClaimSettings::default());
    let report = verifier.verify(Claim::CharEquivalence).map_err(|e| e.to_string())?;
    ensure(report.status == Status::Pass, || report.to_string())?;
    // full-alphabet Lyndon words, by inclusion-exclusion over the letter sets
    let expected: i64 = (1..=12).map(|n| lyndon_count(3, n) - 3 * lyndon_count(2, n) + 3 * lyndon_count(1, n)).sum();
    ensure(report.stats.words_checked as i64 == expected, || {
        format!("checked {} words, expected {expected}", report.stats.words_checked)
    })?;
    Ok(format!("{expected} Lyndon words, no disagreement"))
}

fn criterion_7(catalog: &PclCatalog) -> Outcome {
    let sets = PalindromeSets::new(&catalog.restrict(12));
    match sets.membership(Side::P2, &w("bcb")).unwrap() {
        MembershipVerdict::Member { witness } => {
            ensure(witness == w("acbcbbcbc"), || format!("P2 witness {witness}"))?;
        }
        other => return Err(format!("P2 verdict {other}")),
    }
    match sets.membership(Side::P1, &w("bcb")).unwrap() {
        MembershipVerdict::NonMemberDecisive { certificate } => {
            let expected: BTreeSet<Word> = ["ab", "bc", "cb", "bb"].into_iter().map(w).collect();
            ensure(certificate == expected, || format!("certificate {certificate:?}"))?;
        }
        other => return Err(format!("P1 verdict {other}")),
    }
    Ok("bcb in P2, obstructed in P1".into())
}

fn criterion_8(catalog: &PclCatalog) -> Outcome {
    for bound in [10, 12, 14] {
        let restricted = catalog.restrict(bound);
        let (p1, p2) = compute_sets(&restricted);
        let mirrored: BTreeSet<Word> = p2.keys().map(|p| theta(p).unwrap()).collect();
        let direct: BTreeSet<Word> = p1.keys().cloned().collect();
        ensure(mirrored == direct, || format!("θ(P2) ≠ P1 at bound {bound}"))?;
        run_claim(&restricted, Claim::Lemma3, ClaimSettings::default())?;
    }
    Ok("θ(P2) = P1 at 10, 12, 14".into())
}

fn criterion_9(catalog: &PclCatalog) -> Outcome {
    let restricted = catalog.restrict(14);
    let settings = ClaimSettings { directive_len: 5, round_trip_len: 6, ..ClaimSettings::default() };
    for claim in [Claim::Prop4, Claim::Prop6, Claim::Prop7] {
        run_claim(&restricted, claim, settings)?;
    }
    Ok("prop4, prop6, prop7 hold".into())
}

fn criterion_10(catalog: &PclCatalog) -> Outcome {
    let settings = ClaimSettings { samples: 200, max_pal_len: 40, ..ClaimSettings::default() };
    run_claim(&catalog.restrict(14), Claim::Lemma5, settings)
}

fn criterion_11(catalog: &PclCatalog) -> Outcome {
    let sets = PalindromeSets::new(catalog);
    let common = sets.intersection();
    for palindrome in &common {
        let directive = directive_of(palindrome).ok_or(format!("{palindrome} is not an iterated palindrome"))?;
        let letters = directive.word().to_string();
        let cut = letters.find('b').unwrap_or(letters.len());
        ensure(!letters[..cut].contains('b') && letters[cut..].chars().all(|c| c == 'b'), || {
            format!("counterexample {palindrome} with directive {letters}")
        })?;
    }
    run_claim(catalog, Claim::Conjecture8, ClaimSettings::default())?;
    Ok(format!("{} palindromes in P1 ∩ P2, none outside {{a,c}}*b*", common.len()))
}

/// Lower Christoffel word with `b_count` letters `b` out of `n`.
fn christoffel(n: usize, b_count: usize) -> String {
    (0..n).map(|i| if ((i + 1) * b_count) / n > (i * b_count) / n { 'b' } else { 'a' }).collect()
}

fn gcd(x: usize, y: usize) -> usize {
    if y == 0 {
        x
    } else {
        gcd(y, x % y)
    }
}

fn criterion_13() -> Outcome {
    for n in 2..=15 {
        let clustering: BTreeSet<String> =
            all_strings("ab", n).into_iter().filter(|s| oracle_lyndon(s) && oracle_clustering(s, "ab")).collect();
        let expected: BTreeSet<String> = (1..n).filter(|&k| gcd(n, k) == 1).map(|k| christoffel(n, k)).collect();
        ensure(clustering == expected, || format!("length {n}: {clustering:?} vs {expected:?}"))?;
    }
    let report = Verifier::new(15).verify(Claim::BinaryChristoffel).map_err(|e| e.to_string())?;
    ensure(report.status == Status::Pass, || report.to_string())?;
    Ok(format!("{} binary Lyndon words", report.stats.words_checked))
}

fn criterion_14() -> Outcome {
    let abc = OrderedAlphabet::abc();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let random_word = |rng: &mut ChaCha8Rng, max: usize| {
        let n = rng.random_range(0..=max);
        Word::from_ranks(&abc, (0..n).map(|_| rng.random_range(0..3u8)).collect())
    };

    for _ in 0..1000 {
        let x = random_word(&mut rng, 24);
        ensure(x.reverse().reverse() == x, || format!("reverse on {x}"))?;
        ensure(theta(&theta(&x).unwrap()).unwrap() == x, || format!("θ on {x}"))?;
        ensure(omega(&omega(&x).unwrap()).unwrap() == x, || format!("ω on {x}"))?;
        let closed = palindromic_closure(&x);
        ensure(palindromic_closure(&closed) == closed, || format!("closure on {x}"))?;
        if x.is_empty() {
            continue;
        }
        let transformed = bwt(&x).unwrap();
        ensure(transformed.to_string() == oracle_bwt(&x.to_string(), "abc"), || format!("bwt on {x}"))?;
        ensure(transformed.parikh() == x.parikh(), || format!("Parikh on {x}"))?;
        let shift = rng.random_range(0..x.len());
        ensure(bwt(&x.rotate(shift)).unwrap() == transformed, || format!("conjugate of {x}"))?;
    }

    for n in 0..=7 {
        for s in all_strings("abc", n) {
            let u = w(&s);
            let image = pal(&u);
            let back = directive_of(&image).ok_or(format!("no directive for Pal({s})"))?;
            ensure(back.word() == &u, || format!("directive_of(Pal({s})) = {}", back.word()))?;
            if let Some(&last) = s.as_bytes().last() {
                let shorter = pal(&w(&s[..s.len() - 1]));
                ensure(shorter.is_prefix_of(&image) && image.is_palindrome(), || format!("prefix chain at {s}"))?;
                ensure(image.letters().contains(&(last - b'a')), || format!("Pal({s}) lost a letter"))?;
            }
        }
    }

    let pruned: Vec<String> = enumerate_pcl(8).unwrap().words().map(Word::to_string).collect();
    let brute: Vec<String> = (3..=8)
        .flat_map(|n| all_strings("abc", n))
        .filter(|s| s.contains('a') && s.contains('b') && s.contains('c'))
        .filter(|s| oracle_lyndon(s) && oracle_clustering(s, "abc"))
        .collect();
    ensure(pruned == brute, || format!("pruned {} vs brute {}", pruned.len(), brute.len()))?;
    Ok(format!("properties hold, {} catalog words at bound 8", pruned.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let catalog = enumerate_pcl(16).expect("catalog at bound 16");
    let at14 = catalog.restrict(14);

    let criteria: Vec<Criterion<'_>> = vec![
        ("BWT fixtures", Box::new(criterion_1)),
        ("example words and their factorizations", Box::new(criterion_2)),
        ("documented non-clustering words", Box::new(criterion_3)),
        ("characterization equivalence up to 12", Box::new(|| criterion_4(&catalog))),
        (
            "unique palindromic factorization at 14",
            Box::new(|| run_claim(&at14, Claim::Uniqueness, ClaimSettings::default())),
        ),
        ("length-2 factor sets at 14", Box::new(|| run_claim(&at14, Claim::Lemma1, ClaimSettings::default()))),
        ("bcb separates P1 from P2", Box::new(|| criterion_7(&catalog))),
        ("θ-duality of P1 and P2", Box::new(|| criterion_8(&catalog))),
        ("iterated palindrome classification", Box::new(|| criterion_9(&catalog))),
        ("Pal(b·u) excluded from P1 and P2", Box::new(|| criterion_10(&catalog))),
        ("P1 ∩ P2 directives at 16", Box::new(|| criterion_11(&catalog))),
        ("decomposition at 14", Box::new(|| run_claim(&at14, Claim::Decomposition, ClaimSettings::default()))),
        ("binary clustering is Christoffel", Box::new(criterion_13)),
        ("property suites", Box::new(criterion_14)),
    ];

    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({} ms)", i + 1, t.elapsed().as_millis()),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {} ms",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed().as_millis()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
