use rayon::prelude::*;

use crate::bwt::is_perfectly_clustering_ranks;
use crate::factorization::{
    compatible_sets, pair_bit, palindromic_special_factorization, product_of_two_palindromes, PairMask,
    SpecialFactorization,
};
use crate::words::{is_lyndon, A, B, C};
use crate::{Error, OrderedAlphabet, Result, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub word: Word,
    pub factorization: SpecialFactorization,
}

impl CatalogEntry {
    pub fn pi1(&self) -> &Word {
        &self.factorization.parts()[0]
    }

    pub fn pi2(&self) -> &Word {
        &self.factorization.parts()[1]
    }
}

/// Perfectly clustering Lyndon words over `abc` with all three letters and
/// length at most `bound`, sorted by length then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PclCatalog {
    bound: usize,
    entries: Vec<CatalogEntry>,
    nodes_visited: u64,
}

impl PclCatalog {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().map(|e| &e.word)
    }

    /// Search nodes expanded while building the catalog.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes_visited
    }

    /// The sub-catalog of words of length at most `bound`.
    pub fn restrict(&self, bound: usize) -> PclCatalog {
        PclCatalog {
            bound: bound.min(self.bound),
            entries: self.entries.iter().filter(|e| e.word.len() <= bound).cloned().collect(),
            nodes_visited: self.nodes_visited,
        }
    }
}

struct Search {
    bound: usize,
    found: Vec<Vec<u8>>,
    visited: u64,
}

impl Search {
    /// Extends `prefix` while its length-2 factors stay inside one of S1..S4;
    /// every perfectly clustering word passes this filter.
    fn run(&mut self, prefix: &mut Vec<u8>, mask: PairMask) {
        self.visited += 1;
        if prefix.len() >= 3
            && [A, B, C].iter().all(|x| prefix.contains(x))
            && is_lyndon(prefix)
            && is_perfectly_clustering_ranks(prefix)
        {
            self.found.push(prefix.clone());
        }
        if prefix.len() == self.bound {
            return;
        }
        let last = prefix[prefix.len() - 1];
        for x in [A, B, C] {
            let next = mask | pair_bit(last, x);
            if compatible_sets(next).next().is_some() {
                prefix.push(x);
                self.run(prefix, next);
                prefix.pop();
            }
        }
    }
}

/// Search roots: the admissible length-3 prefixes starting with `a` (a
/// Lyndon word over the full alphabet starts with its least letter).
fn roots() -> Vec<(Vec<u8>, PairMask)> {
    let mut out = Vec::new();
    for y in [A, B, C] {
        for z in [A, B, C] {
            let mask = pair_bit(A, y) | pair_bit(y, z);
            if compatible_sets(mask).next().is_some() {
                out.push((vec![A, y, z], mask));
            }
        }
    }
    out
}

pub fn enumerate_pcl(bound: usize) -> Result<PclCatalog> {
    enumerate_pcl_with(bound, 0)
}

/// Like [`enumerate_pcl`] on a pool of `workers` threads (0 picks the rayon
/// default). The output does not depend on the worker count.
pub fn enumerate_pcl_with(bound: usize, workers: usize) -> Result<PclCatalog> {
    if bound < 3 {
        return Err(Error::BoundTooSmall { min: 3, got: bound });
    }
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(workers).build().map_err(|e| Error::WorkerPool(e.to_string()))?;
    let results: Vec<(Vec<Vec<u8>>, u64)> = pool.install(|| {
        roots()
            .into_par_iter()
            .map(|(mut prefix, mask)| {
                let mut search = Search { bound, found: Vec::new(), visited: 0 };
                search.run(&mut prefix, mask);
                (search.found, search.visited)
            })
            .collect()
    });

    let nodes_visited = results.iter().map(|(_, v)| v).sum();
    let mut found: Vec<Vec<u8>> = results.into_iter().flat_map(|(f, _)| f).collect();
    found.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));

    let abc = OrderedAlphabet::abc();
    let entries = found
        .into_iter()
        .map(|letters| {
            let word = Word::from_ranks(&abc, letters);
            let factorization = palindromic_special_factorization(&word)?
                .filter(|_| product_of_two_palindromes(&word).is_some())
                .ok_or_else(|| Error::CharacterizationMismatch(word.to_string()))?;
            Ok(CatalogEntry { word, factorization })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PclCatalog { bound, entries, nodes_visited })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bwt::is_perfectly_clustering;

    fn names(catalog: &PclCatalog) -> Vec<String> {
        catalog.words().map(Word::to_string).collect()
    }

    /// Every word of length 3..=bound, no pruning.
    fn brute_force(bound: usize) -> Vec<String> {
        let abc = OrderedAlphabet::abc();
        let mut out = Vec::new();
        for n in 3..=bound as u32 {
            for code in 0..3usize.pow(n) {
                let letters = (0..n).map(|i| (code / 3usize.pow(n - 1 - i) % 3) as u8).collect();
                let word = Word::from_ranks(&abc, letters);
                if word.alph().len() == 3 && word.is_lyndon().unwrap() && is_perfectly_clustering(&word).unwrap() {
                    out.push(word.to_string());
                }
            }
        }
        out
    }

    #[test]
    fn small_catalogs() {
        let four = names(&enumerate_pcl(4).unwrap());
        assert!(four.contains(&"abac".to_string()));
        assert_eq!(four, brute_force(4));
        let nine = names(&enumerate_pcl(9).unwrap());
        for word in ["acbcbbcbc", "acacbc", "acbcacc", "abacabbac"] {
            assert!(nine.contains(&word.to_string()), "{word}");
        }
        assert_eq!(enumerate_pcl(2), Err(Error::BoundTooSmall { min: 3, got: 2 }));
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for bound in 3..=8 {
            assert_eq!(names(&enumerate_pcl(bound).unwrap()), brute_force(bound), "bound {bound}");
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let one = enumerate_pcl_with(11, 1).unwrap();
        let four = enumerate_pcl_with(11, 4).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn restriction_matches_direct_enumeration() {
        let big = enumerate_pcl(11).unwrap();
        let small = enumerate_pcl(8).unwrap();
        assert_eq!(names(&big.restrict(8)), names(&small));
    }
}
