//! Finite quasi-order experiments: the loop/coloop code of square-width-0
//! presentations, minor posets over finite samples, and their chains and
//! anti-chains.

use std::fmt::Write as _;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::random_presentation;
use crate::error::{Error, Result};
use crate::minors::{is_presentation_minor, ElementClass};
use crate::oracle::{is_minor_oracle, ExplicitMatroid};
use crate::presentation::PathPresentation;
use crate::squares::square_width;

/// Most items a poset may hold.
pub const POSET_ITEM_LIMIT: usize = 256;
/// Largest ground set allowed in a presentation poset.
pub const POSET_GROUND_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LoopColoopCode {
    pub loops: usize,
    pub coloops: usize,
}

/// Counts loops and isthmuses of a square-width-0 presentation.
pub fn loops_coloops_code(pres: &PathPresentation) -> Result<LoopColoopCode> {
    let sw = square_width(pres);
    if sw > 0 {
        return Err(Error::NotBaseCase(sw));
    }
    let mut code = LoopColoopCode {
        loops: 0,
        coloops: 0,
    };
    for x in pres.labels() {
        match pres.classify(x)? {
            ElementClass::Loop => code.loops += 1,
            ElementClass::Isthmus => code.coloops += 1,
            ElementClass::Ordinary => unreachable!("square-width 0 has no ordinary elements"),
        }
    }
    Ok(code)
}

/// Componentwise order on codes.
pub fn base_case_order(a: LoopColoopCode, b: LoopColoopCode) -> bool {
    a.loops <= b.loops && a.coloops <= b.coloops
}

/// A finite quasi-order: `relation[i][j]` holds when `items[i] <= items[j]`.
#[derive(Clone, Debug)]
pub struct MinorPoset<T> {
    pub items: Vec<T>,
    pub relation: Vec<Vec<bool>>,
}

impl<T> MinorPoset<T> {
    /// Evaluates `le` on every ordered pair, in parallel, and checks that the
    /// result is a quasi-order.
    pub fn from_relation<F>(items: Vec<T>, le: F) -> Result<Self>
    where
        T: Sync,
        F: Fn(&T, &T) -> Result<bool> + Sync,
    {
        let n = items.len();
        if n > POSET_ITEM_LIMIT {
            return Err(Error::PosetTooLarge {
                items: n,
                limit: POSET_ITEM_LIMIT,
            });
        }
        let flat: Vec<bool> = (0..n * n)
            .into_par_iter()
            .map(|k| {
                if k / n == k % n {
                    Ok(true)
                } else {
                    le(&items[k / n], &items[k % n])
                }
            })
            .collect::<Result<_>>()?;
        let relation: Vec<Vec<bool>> = flat
            .chunks(n.max(1))
            .take(n)
            .map(<[bool]>::to_vec)
            .collect();
        let poset = MinorPoset { items, relation };
        if let Some((a, b, c)) = poset.transitivity_violation() {
            return Err(Error::NotTransitive { a, b, c });
        }
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.relation[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.relation[i][j] || self.relation[j][i]
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        self.relation[i][j] && !self.relation[j][i]
    }

    /// First triple `(a, b, c)` with `a <= b <= c` but not `a <= c`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for b in 0..n {
            for a in (0..n).filter(|&a| self.relation[a][b]) {
                if let Some(c) = (0..n).find(|&c| self.relation[b][c] && !self.relation[a][c]) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Lowest index of each equivalence class, in increasing order.
    fn representatives(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..i).all(|j| !(self.relation[i][j] && self.relation[j][i])))
            .collect()
    }

    /// A maximum anti-chain, as increasing indices.
    ///
    /// Computed through Dilworth's theorem: a maximum matching in the strict
    /// comparability graph gives a minimum chain cover, and König's
    /// construction turns the matching into an anti-chain of the same size.
    pub fn max_antichain(&self) -> Vec<usize> {
        let reps = self.representatives();
        let k = reps.len();
        let adj: Vec<Vec<usize>> = (0..k)
            .map(|a| (0..k).filter(|&b| self.lt(reps[a], reps[b])).collect())
            .collect();
        let mut match_right: Vec<Option<usize>> = vec![None; k];
        let mut match_left: Vec<Option<usize>> = vec![None; k];
        for a in 0..k {
            let mut visited = vec![false; k];
            augment(a, &adj, &mut visited, &mut match_left, &mut match_right);
        }
        // alternating reachability from unmatched left vertices
        let mut left_seen = vec![false; k];
        let mut right_seen = vec![false; k];
        let mut stack: Vec<usize> = (0..k).filter(|&a| match_left[a].is_none()).collect();
        for &a in &stack {
            left_seen[a] = true;
        }
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !right_seen[b] {
                    right_seen[b] = true;
                    if let Some(a2) = match_right[b] {
                        if !left_seen[a2] {
                            left_seen[a2] = true;
                            stack.push(a2);
                        }
                    }
                }
            }
        }
        (0..k)
            .filter(|&x| left_seen[x] && !right_seen[x])
            .map(|x| reps[x])
            .collect()
    }

    /// A longest strictly increasing chain, listed from the bottom.
    pub fn longest_chain(&self) -> Vec<usize> {
        let reps = self.representatives();
        // strict predecessors grow along the order, so this is a topological order
        let mut order = reps.clone();
        order.sort_by_key(|&i| (reps.iter().filter(|&&j| self.lt(j, i)).count(), i));
        let mut best: Vec<(usize, Option<usize>)> = vec![(0, None); self.len()];
        for (pos, &i) in order.iter().enumerate() {
            let mut entry = (1, None);
            for &j in &order[..pos] {
                if self.lt(j, i) && best[j].0 + 1 > entry.0 {
                    entry = (best[j].0 + 1, Some(j));
                }
            }
            best[i] = entry;
        }
        let Some(&top) = order
            .iter()
            .max_by_key(|&&i| (best[i].0, std::cmp::Reverse(i)))
        else {
            return Vec::new();
        };
        let mut chain = vec![top];
        while let Some(prev) = best[*chain.last().unwrap()].1 {
            chain.push(prev);
        }
        chain.reverse();
        chain
    }
}

fn augment(
    a: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &b in &adj[a] {
        if visited[b] {
            continue;
        }
        visited[b] = true;
        if match_right[b].is_none_or(|a2| augment(a2, adj, visited, match_left, match_right)) {
            match_right[b] = Some(a);
            match_left[a] = Some(b);
            return true;
        }
    }
    false
}

/// Pairwise presentation-minor relation over `items`.
pub fn build_poset(items: Vec<PathPresentation>) -> Result<MinorPoset<PathPresentation>> {
    if let Some(p) = items.iter().find(|p| p.ground_size() > POSET_GROUND_LIMIT) {
        return Err(Error::SizeLimit {
            size: p.ground_size(),
            limit: POSET_GROUND_LIMIT,
        });
    }
    MinorPoset::from_relation(items, |a, b| Ok(is_presentation_minor(a, b).is_some()))
}

/// Pairwise matroid-minor relation over explicit matroids.
pub fn build_oracle_poset(items: Vec<ExplicitMatroid>) -> Result<MinorPoset<ExplicitMatroid>> {
    MinorPoset::from_relation(items, |a, b| Ok(is_minor_oracle(a, b)?.is_some()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceRow {
    pub sample: usize,
    pub size: usize,
    pub square_width: usize,
    pub max_antichain: usize,
    pub longest_chain: usize,
}

/// Parameters of a random evidence run.
#[derive(Clone, Copy, Debug)]
pub struct EvidenceConfig {
    pub samples: usize,
    pub sample_size: usize,
    pub max_ground: usize,
    pub max_square_width: usize,
}

impl Default for EvidenceConfig {
    fn default() -> Self {
        EvidenceConfig {
            samples: 5,
            sample_size: 30,
            max_ground: 10,
            max_square_width: 1,
        }
    }
}

/// `count` random presentations on at most `max_ground` elements with
/// square-width at most `max_square_width`.
pub fn random_sample<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    max_ground: usize,
    max_square_width: usize,
) -> Vec<PathPresentation> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(0..=max_ground);
        let p = random_presentation(rng, n);
        if square_width(&p) <= max_square_width {
            out.push(p);
        }
    }
    out
}

/// Poset statistics for one sample. `square_width` is the largest in the
/// sample.
pub fn evidence_row(sample: usize, items: Vec<PathPresentation>) -> Result<EvidenceRow> {
    let square_width = items.iter().map(square_width).max().unwrap_or(0);
    let size = items.len();
    let poset = build_poset(items)?;
    Ok(EvidenceRow {
        sample,
        size,
        square_width,
        max_antichain: poset.max_antichain().len(),
        longest_chain: poset.longest_chain().len(),
    })
}

pub fn evidence_table<R: Rng + ?Sized>(
    rng: &mut R,
    config: EvidenceConfig,
) -> Result<Vec<EvidenceRow>> {
    (0..config.samples)
        .map(|s| {
            let items = random_sample(
                rng,
                config.sample_size,
                config.max_ground,
                config.max_square_width,
            );
            evidence_row(s + 1, items)
        })
        .collect()
}

/// Tab-separated, with a header line.
pub fn evidence_tsv(rows: &[EvidenceRow]) -> String {
    let mut out = String::from("sample\tsize\tsquare-width\tmax-antichain\tlongest-chain\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.sample, r.size, r.square_width, r.max_antichain, r.longest_chain
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::family_f;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn pres(p: &str, q: &str) -> PathPresentation {
        PathPresentation::from_words(p, q).unwrap()
    }

    #[test]
    fn code_examples() {
        let code = |p, q| loops_coloops_code(&pres(p, q)).unwrap();
        assert_eq!(
            code("EN", "EN"),
            LoopColoopCode {
                loops: 1,
                coloops: 1
            }
        );
        assert_eq!(
            code("ENE", "ENE"),
            LoopColoopCode {
                loops: 2,
                coloops: 1
            }
        );
        assert_eq!(
            code("NN", "NN"),
            LoopColoopCode {
                loops: 0,
                coloops: 2
            }
        );
        assert!(matches!(
            loops_coloops_code(&pres("EN", "NE")),
            Err(Error::NotBaseCase(1))
        ));
    }

    #[test]
    fn order_examples() {
        let c = |loops, coloops| LoopColoopCode { loops, coloops };
        assert!(base_case_order(c(1, 1), c(2, 1)));
        assert!(!base_case_order(c(2, 0), c(1, 5)));
    }

    #[test]
    fn poset_examples() {
        let p = build_poset(vec![pres("EN", "EN"), pres("ENE", "ENE")]).unwrap();
        assert!(p.le(0, 1) && !p.le(1, 0));
        let p = build_poset(vec![pres("EENN", "NNEE"), pres("ENN", "NNE")]).unwrap();
        assert!(p.le(1, 0) && !p.le(0, 1));
        let p = build_poset(vec![pres("EN", "NE")]).unwrap();
        assert_eq!(p.relation, vec![vec![true]]);
    }

    #[test]
    fn chain_and_antichain_examples() {
        let p = build_poset(vec![
            pres("EENE", "ENEE"),
            pres("EN", "EN"),
            pres("ENE", "ENE"),
        ])
        .unwrap();
        assert_eq!(p.longest_chain(), vec![1, 2, 0]);
        assert_eq!(p.max_antichain().len(), 1);

        let f = build_oracle_poset(vec![family_f(4).unwrap(), family_f(5).unwrap()]).unwrap();
        assert_eq!(f.max_antichain(), vec![0, 1]);
        assert_eq!(f.longest_chain().len(), 1);

        let empty = build_poset(Vec::new()).unwrap();
        assert!(empty.max_antichain().is_empty());
        assert!(empty.longest_chain().is_empty());
    }

    #[test]
    fn duplicates_collapse() {
        let p = build_poset(vec![pres("EN", "NE"), pres("EN", "NE"), pres("EE", "EE")]).unwrap();
        assert_eq!(p.max_antichain(), vec![0, 2]);
        assert_eq!(p.longest_chain().len(), 1);
    }

    #[test]
    fn evidence_is_deterministic() {
        let config = EvidenceConfig {
            samples: 2,
            sample_size: 12,
            max_ground: 8,
            max_square_width: 1,
        };
        let a = evidence_table(&mut StdRng::seed_from_u64(5), config).unwrap();
        let b = evidence_table(&mut StdRng::seed_from_u64(5), config).unwrap();
        assert_eq!(a, b);
        let tsv = evidence_tsv(&a);
        assert_eq!(tsv.lines().count(), 3);
        assert!(tsv.starts_with("sample\tsize\t"));
    }
}
