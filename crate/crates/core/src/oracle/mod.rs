//! Brute-force matroids given by their full basis family.
//!
//! Everything here is exhaustive and meant for ground sets of at most a dozen
//! or so elements. These routines are the reference against which the
//! path-presentation machinery is checked.

mod branch;
mod family;
mod iso;
mod minor;

use std::cmp::Reverse;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use branch::{branch_width, BranchDecomposition, BRANCH_WIDTH_LIMIT};
pub use family::{
    family_f, family_g, family_h, find_presentation, uniform, FIND_PRESENTATION_LIMIT,
};
pub use iso::{is_isomorphic, ISOMORPHISM_LIMIT};
pub use minor::{is_minor_oracle, OracleMinor, ORACLE_MINOR_LIMIT};

/// Hard cap imposed by the `u64` subset representation.
pub const MAX_GROUND: usize = 64;

/// A matroid on `{1, ..., n}` stored as its basis family.
///
/// Internally element `i` is bit `i - 1` of a `u64` mask. Bases are kept in
/// lexicographic order of their sorted label lists, so two matroids on the
/// same ground set are equal iff their basis families are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExplicitMatroid {
    n: usize,
    bases: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct MatroidFile {
    n: usize,
    bases: Vec<Vec<usize>>,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Removes bit `j`, shifting the higher bits down by one.
pub(crate) fn drop_bit(mask: u64, j: usize) -> u64 {
    let low = mask & ((1u64 << j) - 1);
    let high = (mask >> (j + 1)) << j;
    low | high
}

fn sort_lex(bases: &mut Vec<u64>) {
    bases.sort_unstable_by_key(|b| Reverse(b.reverse_bits()));
    bases.dedup();
}

impl ExplicitMatroid {
    /// Builds a matroid from bitmask bases, checking the basis axioms.
    pub fn new(n: usize, bases: Vec<u64>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::SizeLimit {
                size: n,
                limit: MAX_GROUND,
            });
        }
        if bases.is_empty() {
            return Err(Error::InvalidMatroid("empty basis family".into()));
        }
        if bases.iter().any(|&b| b & !full_mask(n) != 0) {
            return Err(Error::InvalidMatroid(format!(
                "basis uses an element outside [1, {n}]"
            )));
        }
        let rank = bases[0].count_ones();
        if bases.iter().any(|b| b.count_ones() != rank) {
            return Err(Error::InvalidMatroid("bases of different sizes".into()));
        }
        let m = ExplicitMatroid::from_bases_unchecked(n, bases);
        m.check_exchange()?;
        Ok(m)
    }

    /// Builds a matroid from 1-based label lists.
    pub fn from_label_sets(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut bases = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask = 0u64;
            for &x in set {
                if x == 0 || x > n {
                    return Err(Error::LabelOutOfRange {
                        label: x,
                        first: 1,
                        last: n,
                    });
                }
                mask |= 1 << (x - 1);
            }
            bases.push(mask);
        }
        ExplicitMatroid::new(n, bases)
    }

    pub(crate) fn from_bases_unchecked(n: usize, mut bases: Vec<u64>) -> Self {
        sort_lex(&mut bases);
        ExplicitMatroid { n, bases }
    }

    /// For producers that already emit bases in lexicographic order.
    pub(crate) fn from_sorted_unchecked(n: usize, bases: Vec<u64>) -> Self {
        debug_assert!(bases
            .windows(2)
            .all(|w| w[0].reverse_bits() > w[1].reverse_bits()));
        ExplicitMatroid { n, bases }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.bases[0].count_ones() as usize
    }

    /// Bases as bitmasks, lexicographically ordered.
    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    /// Bases as sorted 1-based label lists, lexicographically ordered.
    pub fn basis_label_sets(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&b| mask_to_labels(b)).collect()
    }

    pub fn is_basis(&self, mask: u64) -> bool {
        self.bases
            .binary_search_by_key(&Reverse(mask.reverse_bits()), |b| Reverse(b.reverse_bits()))
            .is_ok()
    }

    pub fn rank_of(&self, mask: u64) -> usize {
        self.bases
            .iter()
            .map(|b| (b & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        self.bases.iter().any(|b| b & mask == mask)
    }

    /// Ranks of all `2^n` subsets, indexed by mask.
    pub fn rank_table(&self) -> Vec<u8> {
        assert!(self.n <= 24, "rank table for {} elements", self.n);
        let size = 1usize << self.n;
        // independent sets are downward closed: mark bases, then propagate down
        let mut indep = vec![false; size];
        for &b in &self.bases {
            indep[b as usize] = true;
        }
        for mask in (0..size).rev() {
            if indep[mask] {
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    indep[mask ^ bit] = true;
                    rest ^= bit;
                }
            }
        }
        let mut rank = vec![0u8; size];
        for mask in 1..size {
            if indep[mask] {
                rank[mask] = mask.count_ones() as u8;
            } else {
                let mut rest = mask;
                let mut best = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(rank[mask ^ bit]);
                    rest ^= bit;
                }
                rank[mask] = best;
            }
        }
        rank
    }

    /// Elements in no basis (1-based).
    pub fn loops(&self) -> Vec<usize> {
        let union = self.bases.iter().fold(0, |acc, b| acc | b);
        mask_to_labels(full_mask(self.n) & !union)
    }

    /// Elements in every basis (1-based).
    pub fn coloops(&self) -> Vec<usize> {
        mask_to_labels(self.bases.iter().fold(full_mask(self.n), |acc, b| acc & b))
    }

    /// Checks the basis-exchange axiom over all pairs of bases.
    pub fn check_exchange(&self) -> Result<()> {
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let mut only1 = b1 & !b2;
                while only1 != 0 {
                    let x = only1 & only1.wrapping_neg();
                    only1 ^= x;
                    let mut only2 = b2 & !b1;
                    let mut found = false;
                    while only2 != 0 {
                        let y = only2 & only2.wrapping_neg();
                        only2 ^= y;
                        if set.contains(&((b1 & !x) | y)) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Err(Error::InvalidMatroid(format!(
                            "exchange fails for {:?}, {:?} at {}",
                            mask_to_labels(b1),
                            mask_to_labels(b2),
                            x.trailing_zeros() + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_label(&self, x: usize) -> Result<usize> {
        if x == 0 || x > self.n {
            Err(Error::LabelOutOfRange {
                label: x,
                first: 1,
                last: self.n,
            })
        } else {
            Ok(x - 1)
        }
    }

    /// `M \ x`; labels above `x` shift down by one.
    pub fn delete(&self, x: usize) -> Result<ExplicitMatroid> {
        let j = self.check_label(x)?;
        let bit = 1u64 << j;
        let coloop = self.bases.iter().all(|b| b & bit != 0);
        let bases = self
            .bases
            .iter()
            .filter(|&&b| coloop || b & bit == 0)
            .map(|&b| drop_bit(b & !bit, j))
            .collect();
        Ok(ExplicitMatroid::from_bases_unchecked(self.n - 1, bases))
    }

    /// `M / x`; labels above `x` shift down by one.
    pub fn contract(&self, x: usize) -> Result<ExplicitMatroid> {
        let j = self.check_label(x)?;
        let bit = 1u64 << j;
        let is_loop = self.bases.iter().all(|b| b & bit == 0);
        if is_loop {
            return self.delete(x);
        }
        let bases = self
            .bases
            .iter()
            .filter(|&&b| b & bit != 0)
            .map(|&b| drop_bit(b & !bit, j))
            .collect();
        Ok(ExplicitMatroid::from_bases_unchecked(self.n - 1, bases))
    }

    /// Complements of the bases.
    pub fn dual(&self) -> ExplicitMatroid {
        let full = full_mask(self.n);
        ExplicitMatroid::from_bases_unchecked(
            self.n,
            self.bases.iter().map(|b| full & !b).collect(),
        )
    }

    /// Disjoint union; the elements of `other` follow those of `self`.
    pub fn direct_sum(&self, other: &ExplicitMatroid) -> Result<ExplicitMatroid> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(Error::SizeLimit {
                size: n,
                limit: MAX_GROUND,
            });
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                bases.push(a | (b << self.n));
            }
        }
        Ok(ExplicitMatroid::from_bases_unchecked(n, bases))
    }

    /// Truncation to rank `target`: its bases are the independent sets of
    /// size `target`.
    pub fn truncate(&self, target: usize) -> Result<ExplicitMatroid> {
        if target == 0 || target > self.rank() {
            return Err(Error::TruncationRange {
                target,
                rank: self.rank(),
            });
        }
        let bases = k_subsets(self.n, target)
            .filter(|&s| self.is_independent(s))
            .collect();
        Ok(ExplicitMatroid::from_bases_unchecked(self.n, bases))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatroidFile {
            n: self.n,
            bases: self.basis_label_sets(),
        })
        .expect("serializing plain integers")
    }

    pub fn from_json(text: &str) -> Result<ExplicitMatroid> {
        let file: MatroidFile = serde_json::from_str(text)?;
        ExplicitMatroid::from_label_sets(file.n, &file.bases)
    }
}

pub(crate) fn mask_to_labels(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

/// All `k`-element subsets of `{0..n}` as masks, in increasing numeric order.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { None } else { Some(1u64 << n) };
    let first = if k == 0 { 0 } else { full_mask(k) };
    let mut next = if k <= n { Some(first) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let succ = (((r ^ cur) >> 2) / c) | r;
            match limit {
                Some(l) if succ >= l || r == 0 => None,
                None if r == 0 => None,
                _ => Some(succ),
            }
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(k_subsets(2, 3).count(), 0);
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(uniform(2, 4).unwrap().bases().len(), 6);
        let u03 = uniform(0, 3).unwrap();
        assert_eq!(u03.bases(), &[0]);
        assert_eq!(u03.loops(), vec![1, 2, 3]);
        assert_eq!(uniform(3, 3).unwrap().bases(), &[0b111]);
        assert!(matches!(
            uniform(4, 3),
            Err(Error::RankOutOfRange { rank: 4, n: 3 })
        ));
    }

    #[test]
    fn lexicographic_storage() {
        let u = uniform(2, 4).unwrap();
        assert_eq!(
            u.basis_label_sets(),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert!(u.is_basis(0b1010));
        assert!(!u.is_basis(0b0111));
    }

    #[test]
    fn minor_and_dual_examples() {
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(u24.delete(1).unwrap(), uniform(2, 3).unwrap());
        assert_eq!(u24.contract(1).unwrap(), uniform(1, 3).unwrap());
        assert_eq!(uniform(1, 3).unwrap().dual(), uniform(2, 3).unwrap());
        assert!(matches!(u24.delete(5), Err(Error::LabelOutOfRange { .. })));
        // deleting a coloop keeps the rest of each basis
        let u11 = uniform(1, 1).unwrap();
        assert_eq!(u11.delete(1).unwrap(), uniform(0, 0).unwrap());
        assert_eq!(
            uniform(0, 1).unwrap().contract(1).unwrap(),
            uniform(0, 0).unwrap()
        );
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(
            uniform(3, 4).unwrap().truncate(2).unwrap(),
            uniform(2, 4).unwrap()
        );
        let m = uniform(2, 3)
            .unwrap()
            .direct_sum(&uniform(1, 2).unwrap())
            .unwrap();
        assert_eq!(m.truncate(m.rank()).unwrap(), m);
        assert!(matches!(m.truncate(0), Err(Error::TruncationRange { .. })));
        assert!(matches!(m.truncate(4), Err(Error::TruncationRange { .. })));
    }

    #[test]
    fn truncated_sum_of_two_u34() {
        let u34 = uniform(3, 4).unwrap();
        let t = u34.direct_sum(&u34).unwrap().truncate(5).unwrap();
        assert_eq!((t.ground_size(), t.rank()), (8, 5));
        // brute force: 5-subsets of 8 with at most 3 from each half
        let expected = (0u64..256)
            .filter(|s| s.count_ones() == 5)
            .filter(|s| (s & 0x0f).count_ones() <= 3 && (s & 0xf0).count_ones() <= 3)
            .count();
        assert_eq!(t.bases().len(), expected);
        t.check_exchange().unwrap();
    }

    #[test]
    fn rejects_non_matroids() {
        // {1,2} and {3,4}: exchange fails
        assert!(matches!(
            ExplicitMatroid::from_label_sets(4, &[vec![1, 2], vec![3, 4]]),
            Err(Error::InvalidMatroid(_))
        ));
        assert!(ExplicitMatroid::from_label_sets(3, &[vec![1], vec![1, 2]]).is_err());
        assert!(ExplicitMatroid::from_label_sets(3, &[]).is_err());
        assert!(ExplicitMatroid::from_label_sets(3, &[vec![4]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let u = uniform(1, 2).unwrap();
        let text = u.to_json();
        assert_eq!(text, r#"{"n":2,"bases":[[1],[2]]}"#);
        assert_eq!(ExplicitMatroid::from_json(&text).unwrap(), u);
        assert!(ExplicitMatroid::from_json("{\"n\":2}").is_err());
    }

    #[test]
    fn rank_table_matches_rank_of() {
        let m = uniform(2, 3)
            .unwrap()
            .direct_sum(&uniform(1, 3).unwrap())
            .unwrap();
        let table = m.rank_table();
        for mask in 0..(1u64 << m.ground_size()) {
            assert_eq!(table[mask as usize] as usize, m.rank_of(mask));
        }
    }
}
