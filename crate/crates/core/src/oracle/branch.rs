//! Exact branch-width by dynamic programming over subsets.
//!
//! Root any cubic tree at the edge of leaf `e`. Every other edge then splits
//! off a set `S` of leaves below it, and the subtree below splits `S` into two
//! parts. So with `f({x}) = λ({x})` and
//! `f(S) = max(λ(S), min over splits S = A ⊔ B of max(f(A), f(B)))`,
//! the branch-width is `f(E \ {e})`. The cost is `O(3^n)`.

use super::{full_mask, ExplicitMatroid};
use crate::error::{Error, Result};

pub const BRANCH_WIDTH_LIMIT: usize = 12;

/// An unrooted tree whose internal vertices have degree 3 and whose leaves
/// are labelled bijectively by the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    /// Adjacency lists.
    pub adjacency: Vec<Vec<usize>>,
    /// 1-based element label of each leaf vertex, `None` for internal ones.
    pub leaf_label: Vec<Option<usize>>,
    pub width: usize,
}

impl BranchDecomposition {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            edges.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        edges
    }

    /// Leaf set (as a mask over 0-based elements) on the `to` side of edge
    /// `from - to`.
    pub fn side(&self, from: usize, to: usize) -> u64 {
        let mut mask = 0u64;
        let mut stack = vec![(to, from)];
        while let Some((v, parent)) = stack.pop() {
            if let Some(label) = self.leaf_label[v] {
                mask |= 1 << (label - 1);
            }
            stack.extend(
                self.adjacency[v]
                    .iter()
                    .filter(|&&w| w != parent)
                    .map(|&w| (w, v)),
            );
        }
        mask
    }

    /// Checks the tree shape: connected, acyclic, degree 1 or 3, each
    /// element on exactly one leaf.
    pub fn is_well_formed(&self, n: usize) -> bool {
        let vertices = self.adjacency.len();
        if vertices == 0 || self.edges().len() + 1 != vertices {
            return false;
        }
        let mut seen = vec![false; n];
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            match (self.leaf_label[v], nbrs.len()) {
                (Some(label), 1) if (1..=n).contains(&label) && !seen[label - 1] => {
                    seen[label - 1] = true
                }
                (None, 3) => {}
                _ => return false,
            }
        }
        let root = 0;
        let reach = if let Some(&w) = self.adjacency[root].first() {
            self.side(w, root) | self.side(root, w)
        } else {
            self.leaf_label[root].map_or(0, |l| 1 << (l - 1))
        };
        seen.iter().all(|&s| s) && reach == full_mask(n)
    }

    /// Maximum connectivity over the edges, recomputed from scratch.
    pub fn evaluate_width(&self, m: &ExplicitMatroid) -> usize {
        let full = full_mask(m.ground_size());
        let r = m.rank();
        self.edges()
            .into_iter()
            .map(|(u, v)| {
                let a = self.side(u, v);
                m.rank_of(a) + m.rank_of(full & !a) + 1 - r
            })
            .max()
            .unwrap_or(0)
    }
}

/// Exact branch-width and an optimal decomposition.
pub fn branch_width(m: &ExplicitMatroid) -> Result<(usize, BranchDecomposition)> {
    let n = m.ground_size();
    if n < 2 {
        return Err(Error::GroundTooSmall { n });
    }
    if n > BRANCH_WIDTH_LIMIT {
        return Err(Error::SizeLimit {
            size: n,
            limit: BRANCH_WIDTH_LIMIT,
        });
    }
    let rank = m.rank_table();
    let full = full_mask(n) as usize;
    let r = rank[full] as usize;
    let lambda = |s: usize| rank[s] as usize + rank[full ^ s] as usize + 1 - r;

    let last = 1usize << (n - 1);
    let rest = full ^ last;
    let mut best = vec![usize::MAX; rest + 1];
    let mut split = vec![0usize; rest + 1];
    for s in 1..=rest {
        if s & last != 0 {
            continue;
        }
        if s.count_ones() == 1 {
            best[s] = lambda(s);
            continue;
        }
        // parts containing the lowest element of s, excluding s itself
        let low = s & s.wrapping_neg();
        let others = s ^ low;
        let mut inner = usize::MAX;
        let mut sub = others;
        loop {
            let a = sub | low;
            if a != s {
                let w = best[a].max(best[s ^ a]);
                if w < inner {
                    inner = w;
                    split[s] = a;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        best[s] = inner.max(lambda(s));
    }

    let width = best[rest];
    let mut tree = BranchDecomposition {
        adjacency: Vec::new(),
        leaf_label: Vec::new(),
        width,
    };
    let leaf_e = add_vertex(&mut tree, Some(n));
    let root = build(&mut tree, rest, &split);
    connect(&mut tree, leaf_e, root);
    Ok((width, tree))
}

fn add_vertex(tree: &mut BranchDecomposition, label: Option<usize>) -> usize {
    tree.adjacency.push(Vec::new());
    tree.leaf_label.push(label);
    tree.adjacency.len() - 1
}

fn connect(tree: &mut BranchDecomposition, u: usize, v: usize) {
    tree.adjacency[u].push(v);
    tree.adjacency[v].push(u);
}

fn build(tree: &mut BranchDecomposition, s: usize, split: &[usize]) -> usize {
    if s.count_ones() == 1 {
        return add_vertex(tree, Some(s.trailing_zeros() as usize + 1));
    }
    let v = add_vertex(tree, None);
    let a = split[s];
    let left = build(tree, a, split);
    let right = build(tree, s ^ a, split);
    connect(tree, v, left);
    connect(tree, v, right);
    v
}
