use std::collections::HashSet;

use super::ExplicitMatroid;
use crate::error::{Error, Result};

pub const ISOMORPHISM_LIMIT: usize = 10;

/// Per-element and per-pair basis counts, used to prune the search.
struct Profile {
    degree: Vec<usize>,
    pair: Vec<Vec<usize>>,
}

impl Profile {
    fn of(m: &ExplicitMatroid) -> Profile {
        let n = m.ground_size();
        let mut degree = vec![0; n];
        let mut pair = vec![vec![0; n]; n];
        for &b in m.bases() {
            for i in 0..n {
                if b >> i & 1 == 0 {
                    continue;
                }
                degree[i] += 1;
                for j in (i + 1..n).filter(|&j| b >> j & 1 == 1) {
                    pair[i][j] += 1;
                    pair[j][i] += 1;
                }
            }
        }
        Profile { degree, pair }
    }
}

/// Finds a bijection carrying the bases of `a` onto those of `b`.
///
/// The result maps 0-based element `i` of `a` to `perm[i]` of `b`.
pub fn is_isomorphic(a: &ExplicitMatroid, b: &ExplicitMatroid) -> Result<Option<Vec<usize>>> {
    let n = a.ground_size();
    for size in [n, b.ground_size()] {
        if size > ISOMORPHISM_LIMIT {
            return Err(Error::SizeLimit {
                size,
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if n != b.ground_size() || a.rank() != b.rank() || a.bases().len() != b.bases().len() {
        return Ok(None);
    }
    let pa = Profile::of(a);
    let pb = Profile::of(b);
    let mut da = pa.degree.clone();
    let mut db = pb.degree.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }

    // Assign the most constrained elements first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (pb.degree.iter().filter(|&&d| d == pa.degree[i]).count(), i));

    let target: HashSet<u64> = b.bases().iter().copied().collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(0, &order, &pa, &pb, &mut perm, &mut used, a, &target) {
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    pa: &Profile,
    pb: &Profile,
    perm: &mut [usize],
    used: &mut [bool],
    a: &ExplicitMatroid,
    target: &HashSet<u64>,
) -> bool {
    if depth == order.len() {
        return a.bases().iter().all(|&basis| {
            let mapped = (0..perm.len())
                .filter(|&i| basis >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << perm[i]);
            target.contains(&mapped)
        });
    }
    let x = order[depth];
    for y in 0..perm.len() {
        if used[y] || pa.degree[x] != pb.degree[y] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| pa.pair[x][w] == pb.pair[y][perm[w]]);
        if !consistent {
            continue;
        }
        perm[x] = y;
        used[y] = true;
        if extend(depth + 1, order, pa, pb, perm, used, a, target) {
            return true;
        }
        used[y] = false;
        perm[x] = usize::MAX;
    }
    false
}
