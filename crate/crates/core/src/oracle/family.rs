use num_bigint::BigUint;

use super::{is_isomorphic, k_subsets, ExplicitMatroid, MAX_GROUND};
use crate::enumerate::presentations_with;
use crate::error::{Error, Result};
use crate::presentation::PathPresentation;

pub const FIND_PRESENTATION_LIMIT: usize = 10;

/// `U_{r,n}`: every `r`-subset of `[n]` is a basis.
pub fn uniform(r: usize, n: usize) -> Result<ExplicitMatroid> {
    if r > n {
        return Err(Error::RankOutOfRange { rank: r, n });
    }
    if n > MAX_GROUND {
        return Err(Error::SizeLimit {
            size: n,
            limit: MAX_GROUND,
        });
    }
    Ok(ExplicitMatroid::from_bases_unchecked(
        n,
        k_subsets(n, r).collect(),
    ))
}

fn truncated_sum(a: ExplicitMatroid, b: ExplicitMatroid, rank: usize) -> Result<ExplicitMatroid> {
    a.direct_sum(&b)?.truncate(rank)
}

fn check_index(family: char, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::FamilyIndex { family, n, min })
    } else {
        Ok(())
    }
}

/// `F_n = T_n(U_{n-2,n-1} ⊕ U_{n-2,n-1})`, defined for `n >= 4`.
pub fn family_f(n: usize) -> Result<ExplicitMatroid> {
    check_index('F', n, 4)?;
    truncated_sum(uniform(n - 2, n - 1)?, uniform(n - 2, n - 1)?, n)
}

/// `G_n = T_n(U_{n-1,n+1} ⊕ U_{n-1,n+1})`, defined for `n >= 2`.
pub fn family_g(n: usize) -> Result<ExplicitMatroid> {
    check_index('G', n, 2)?;
    truncated_sum(uniform(n - 1, n + 1)?, uniform(n - 1, n + 1)?, n)
}

/// `H_n = T_n(U_{n-2,n-1} ⊕ U_{n-1,n+1})`, defined for `n >= 3`.
pub fn family_h(n: usize) -> Result<ExplicitMatroid> {
    check_index('H', n, 3)?;
    truncated_sum(uniform(n - 2, n - 1)?, uniform(n - 1, n + 1)?, n)
}

/// Searches every presentation with the right `(m, r)` for one whose
/// matroid is isomorphic to `m`.
pub fn find_presentation(m: &ExplicitMatroid) -> Result<Option<PathPresentation>> {
    let n = m.ground_size();
    if n > FIND_PRESENTATION_LIMIT {
        return Err(Error::SizeLimit {
            size: n,
            limit: FIND_PRESENTATION_LIMIT,
        });
    }
    let r = m.rank();
    let count = BigUint::from(m.bases().len());
    for pres in presentations_with(n - r, r) {
        if pres.count_bases() != count {
            continue;
        }
        if is_isomorphic(&pres.to_explicit()?, m)?.is_some() {
            return Ok(Some(pres));
        }
    }
    Ok(None)
}
