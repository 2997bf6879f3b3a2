//! Brute-force reference implementations shared by the integration tests.
//! None of them call into the library's own rank, minor or width code.

#![allow(dead_code)]

use lpm::{ExplicitMatroid, PathPresentation, Step};

/// `(l_i, u_i)` as 0-based positions: the `i`-th North step of the upper
/// word and of the lower word.
pub fn intervals(p: &PathPresentation) -> Vec<(usize, usize)> {
    let norths = |steps: &[Step]| -> Vec<usize> {
        steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::N)
            .map(|(i, _)| i)
            .collect()
    };
    let lo = norths(p.upper().steps());
    let hi = norths(p.lower().steps());
    lo.into_iter().zip(hi).collect()
}

/// Independence by trying every injective assignment of elements to
/// intervals.
pub fn independent(ivs: &[(usize, usize)], mask: u64) -> bool {
    fn assign(elems: &[usize], ivs: &[(usize, usize)], used: &mut Vec<bool>) -> bool {
        let Some((&x, rest)) = elems.split_first() else {
            return true;
        };
        for (j, &(l, u)) in ivs.iter().enumerate() {
            if !used[j] && l <= x && x <= u {
                used[j] = true;
                if assign(rest, ivs, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    let elems: Vec<usize> = (0..64).filter(|&j| mask >> j & 1 == 1).collect();
    assign(&elems, ivs, &mut vec![false; ivs.len()])
}

/// Bases as masks, by checking every subset of size `r`.
pub fn bases(p: &PathPresentation) -> Vec<u64> {
    let ivs = intervals(p);
    let n = p.ground_size();
    (0..1u64 << n)
        .filter(|m| m.count_ones() as usize == p.r() && independent(&ivs, *m))
        .collect()
}

pub fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

pub fn labels(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|&j| mask >> j & 1 == 1)
        .map(|j| j + 1)
        .collect()
}

pub fn rank(m: &ExplicitMatroid, mask: u64) -> usize {
    m.bases()
        .iter()
        .map(|b| (b & mask).count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `λ(A) = r(A) + r(E \ A) - r(E) + 1`.
pub fn connectivity(m: &ExplicitMatroid, a: u64) -> usize {
    let full = (1u64 << m.ground_size()) - 1;
    rank(m, a) + rank(m, full & !a) - m.rank() + 1
}

/// Branch-width by enumerating every cubic tree: leaves are inserted one at
/// a time by subdividing an edge of the current tree.
pub fn branch_width_by_trees(m: &ExplicitMatroid) -> usize {
    let n = m.ground_size();
    assert!((2..=8).contains(&n));
    // vertices 0..n are leaves; edges as (u, v)
    fn width(m: &ExplicitMatroid, n: usize, edges: &[(usize, usize)]) -> usize {
        let vertices = edges.len() + 1;
        let mut adj = vec![Vec::new(); vertices.max(n)];
        let mut max_vertex = 0;
        for &(u, v) in edges {
            max_vertex = max_vertex.max(u).max(v);
        }
        adj.resize(max_vertex + 1, Vec::new());
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        edges
            .iter()
            .map(|&(u, v)| {
                let mut mask = 0u64;
                let mut stack = vec![(v, u)];
                while let Some((x, parent)) = stack.pop() {
                    if x < n {
                        mask |= 1 << x;
                    }
                    for &y in &adj[x] {
                        if y != parent {
                            stack.push((y, x));
                        }
                    }
                }
                connectivity(m, mask)
            })
            .max()
            .unwrap()
    }
    fn grow(
        m: &ExplicitMatroid,
        n: usize,
        next_leaf: usize,
        edges: &mut Vec<(usize, usize)>,
        best: &mut usize,
    ) {
        if next_leaf == n {
            *best = (*best).min(width(m, n, edges));
            return;
        }
        let fresh = n + next_leaf;
        for e in 0..edges.len() {
            let (u, v) = edges[e];
            edges[e] = (u, fresh);
            edges.push((fresh, v));
            edges.push((fresh, next_leaf));
            grow(m, n, next_leaf + 1, edges, best);
            edges.pop();
            edges.pop();
            edges[e] = (u, v);
        }
    }
    let mut edges = vec![(0, 1)];
    let mut best = usize::MAX;
    grow(m, n, 2, &mut edges, &mut best);
    best
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn relabel(mask: u64, perm: &[usize]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|(j, _)| mask >> j & 1 == 1)
        .fold(0, |acc, (_, &t)| acc | 1 << t)
}

/// Isomorphism by trying every permutation.
pub fn isomorphic(a: &ExplicitMatroid, b: &ExplicitMatroid) -> bool {
    let n = a.ground_size();
    if n != b.ground_size() || a.bases().len() != b.bases().len() {
        return false;
    }
    let target = sorted(b.bases().to_vec());
    permutations(n)
        .into_iter()
        .any(|perm| sorted(a.bases().iter().map(|&x| relabel(x, &perm)).collect()) == target)
}

/// Deletion and contraction straight from the definitions: bases of
/// `M \ x` are the maximal sets among `{B - x}`, bases of `M / x` the sets
/// `B - x` for bases containing `x` (or all bases when `x` is a loop).
pub fn delete(m: &ExplicitMatroid, x: usize) -> Vec<Vec<usize>> {
    let bit = 1u64 << (x - 1);
    let avoid: Vec<u64> = m.bases().iter().copied().filter(|b| b & bit == 0).collect();
    let chosen = if avoid.is_empty() {
        m.bases().iter().map(|b| b & !bit).collect()
    } else {
        avoid
    };
    shift_out(chosen, x)
}

pub fn contract(m: &ExplicitMatroid, x: usize) -> Vec<Vec<usize>> {
    let bit = 1u64 << (x - 1);
    let with: Vec<u64> = m.bases().iter().copied().filter(|b| b & bit != 0).collect();
    let chosen = if with.is_empty() {
        m.bases().to_vec()
    } else {
        with.into_iter().map(|b| b & !bit).collect()
    };
    shift_out(chosen, x)
}

fn shift_out(masks: Vec<u64>, x: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = masks
        .into_iter()
        .map(|b| {
            labels(b)
                .into_iter()
                .map(|y| if y > x { y - 1 } else { y })
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn label_sets(m: &ExplicitMatroid) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = m.bases().iter().map(|&b| labels(b)).collect();
    v.sort();
    v
}

pub fn pres(p: &str, q: &str) -> PathPresentation {
    PathPresentation::from_words(p, q).unwrap()
}
