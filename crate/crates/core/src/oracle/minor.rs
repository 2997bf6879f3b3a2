use super::{drop_bit, is_isomorphic, k_subsets, mask_to_labels, ExplicitMatroid};
use crate::error::{Error, Result};

pub const ORACLE_MINOR_LIMIT: usize = 10;

/// Certificate that `small` is isomorphic to `large \ deleted / contracted`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMinor {
    /// 1-based labels of `large`.
    pub deleted: Vec<usize>,
    /// 1-based labels of `large`.
    pub contracted: Vec<usize>,
    /// Maps the `i`-th surviving element of `large` (0-based, in label order)
    /// to a 0-based element of `small`.
    pub permutation: Vec<usize>,
}

/// `m \ delete / contract` for disjoint masks, with the survivors renumbered
/// in order.
pub(crate) fn minor_by_masks(m: &ExplicitMatroid, delete: u64, contract: u64) -> ExplicitMatroid {
    debug_assert_eq!(delete & contract, 0);
    // bases of M/C: B \ C over bases meeting C in a maximum number of elements
    let rc = m
        .bases()
        .iter()
        .map(|b| (b & contract).count_ones())
        .max()
        .unwrap_or(0);
    let contracted: Vec<u64> = m
        .bases()
        .iter()
        .filter(|b| (*b & contract).count_ones() == rc)
        .map(|b| b & !contract)
        .collect();
    // bases of (M/C)\D: those meeting D in a minimum number of elements
    let md = contracted
        .iter()
        .map(|b| (b & delete).count_ones())
        .min()
        .unwrap_or(0);
    let removed = delete | contract;
    let mut drops: Vec<usize> = (0..m.ground_size())
        .filter(|&j| removed >> j & 1 == 1)
        .collect();
    drops.reverse();
    let bases = contracted
        .into_iter()
        .filter(|b| (b & delete).count_ones() == md)
        .map(|b| drops.iter().fold(b, |acc, &j| drop_bit(acc, j)))
        .collect();
    ExplicitMatroid::from_bases_unchecked(m.ground_size() - drops.len(), bases)
}

/// Exhaustive matroid-level minor test.
///
/// Tries every split of the surplus elements into a contracted set of size
/// `r(large) - r(small)` and a deleted remainder, and looks for an isomorphism
/// between the resulting minor and `small`.
pub fn is_minor_oracle(
    small: &ExplicitMatroid,
    large: &ExplicitMatroid,
) -> Result<Option<OracleMinor>> {
    let n = large.ground_size();
    if n > ORACLE_MINOR_LIMIT {
        return Err(Error::SizeLimit {
            size: n,
            limit: ORACLE_MINOR_LIMIT,
        });
    }
    let ns = small.ground_size();
    if ns > n || small.rank() > large.rank() {
        return Ok(None);
    }
    let surplus = n - ns;
    let c = large.rank() - small.rank();
    if c > surplus {
        return Ok(None);
    }
    for removed in k_subsets(n, surplus) {
        let positions: Vec<usize> = (0..n).filter(|&j| removed >> j & 1 == 1).collect();
        for pick in k_subsets(surplus, c) {
            let contract = positions
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .fold(0u64, |acc, (_, &j)| acc | 1 << j);
            let delete = removed & !contract;
            let candidate = minor_by_masks(large, delete, contract);
            if candidate.rank() != small.rank() || candidate.bases().len() != small.bases().len() {
                continue;
            }
            if let Some(permutation) = is_isomorphic(&candidate, small)? {
                return Ok(Some(OracleMinor {
                    deleted: mask_to_labels(delete),
                    contracted: mask_to_labels(contract),
                    permutation,
                }));
            }
        }
    }
    Ok(None)
}
