//! Burrows-Wheeler transform and clustering analysis.

use serde::Serialize;

use crate::{Error, Result, Word};

/// Rotation start indices in sorted order. Equal rotations keep their
/// index order, which leaves the last-letter word unchanged.
fn sorted_rotations(letters: &[u8]) -> Vec<usize> {
    let n = letters.len();
    let doubled = [letters, letters].concat();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by(|&i, &j| doubled[i..i + n].cmp(&doubled[j..j + n]));
    starts
}

pub(crate) fn bwt_ranks(letters: &[u8]) -> Vec<u8> {
    let n = letters.len();
    sorted_rotations(letters).into_iter().map(|i| letters[(i + n - 1) % n]).collect()
}

pub(crate) fn is_nonincreasing(letters: &[u8]) -> bool {
    letters.windows(2).all(|p| p[0] >= p[1])
}

pub(crate) fn is_perfectly_clustering_ranks(letters: &[u8]) -> bool {
    !letters.is_empty() && is_nonincreasing(&bwt_ranks(letters))
}

/// Last letters of the lexicographically sorted rotations of `w`.
pub fn bwt(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord("the Burrows-Wheeler transform"));
    }
    Ok(w.with_letters(bwt_ranks(w.letters())))
}

/// True iff the transform of `w` lists its letters in nonincreasing order.
pub fn is_perfectly_clustering(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord("perfect clustering"));
    }
    Ok(is_perfectly_clustering_ranks(w.letters()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusteringReport {
    #[serde(serialize_with = "display")]
    pub bwt: Word,
    /// Maximal runs of the transform, in order.
    pub runs: Vec<(char, usize)>,
    /// 1-based ranks among the letters of `w`, in cluster order. Present
    /// when every letter forms exactly one run.
    pub permutation: Option<Vec<usize>>,
    pub perfect: bool,
}

fn display<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(w)
}

impl ClusteringReport {
    /// Run-length form, e.g. `c4b4a1`.
    pub fn runs_string(&self) -> String {
        self.runs.iter().map(|(c, n)| format!("{c}{n}")).collect()
    }

    /// One-line notation, e.g. `451623`; comma separated beyond nine letters.
    pub fn permutation_string(&self) -> Option<String> {
        let p = self.permutation.as_ref()?;
        let sep = if p.len() > 9 { "," } else { "" };
        Some(p.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
    }
}

pub fn clustering_report(w: &Word) -> Result<ClusteringReport> {
    let transformed = bwt(w)?;
    let alphabet = w.alphabet();

    let mut runs: Vec<(u8, usize)> = Vec::new();
    for &r in transformed.letters() {
        match runs.last_mut() {
            Some((last, n)) if *last == r => *n += 1,
            _ => runs.push((r, 1)),
        }
    }

    let present = w.alph_ranks();
    let permutation = (runs.len() == present.len())
        .then(|| runs.iter().map(|(r, _)| present.iter().position(|p| p == r).unwrap() + 1).collect());

    Ok(ClusteringReport {
        perfect: is_nonincreasing(transformed.letters()),
        runs: runs.into_iter().map(|(r, n)| (alphabet.symbol(r), n)).collect(),
        permutation,
        bwt: transformed,
    })
}
