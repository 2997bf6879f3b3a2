//! Squares, square-width, and cutting a presentation apart at a square.
//!
//! A presentation has a `k x k` square at prefix length `i` when, after `i`
//! steps, the lower path has taken exactly `k` more East steps than the upper
//! one (equivalently the upper path has taken `k` more North steps). The
//! square is proper when `i` lies in `[k+1, m+r-k-1]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::minors::{is_presentation_minor, MinorWitness};
use crate::presentation::{PathPresentation, PathWord, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SquareRecord {
    /// Prefix length `i`.
    pub position: usize,
    /// Side length `k`.
    pub size: usize,
    pub proper: bool,
}

/// Entry `i - 1` is `m(P_i) - m(Q_i)` for `i = 1..=m+r`.
pub fn gap_profile(pres: &PathPresentation) -> Vec<usize> {
    let mut gap = 0isize;
    pres.lower()
        .steps()
        .iter()
        .zip(pres.upper().steps())
        .map(|(&p, &q)| {
            gap += (p == Step::E) as isize - (q == Step::E) as isize;
            debug_assert!(gap >= 0);
            gap as usize
        })
        .collect()
}

pub fn square_width(pres: &PathPresentation) -> usize {
    gap_profile(pres).into_iter().max().unwrap_or(0)
}

pub fn is_proper(position: usize, size: usize, ground_size: usize) -> bool {
    position > size && position + size < ground_size
}

/// One record per prefix with a positive gap.
pub fn squares(pres: &PathPresentation) -> Vec<SquareRecord> {
    let n = pres.ground_size();
    gap_profile(pres)
        .into_iter()
        .enumerate()
        .filter(|&(_, k)| k > 0)
        .map(|(i, k)| SquareRecord {
            position: i + 1,
            size: k,
            proper: is_proper(i + 1, k, n),
        })
        .collect()
}

fn gap_at(pres: &PathPresentation, i: usize) -> Result<usize> {
    if i == 0 || i > pres.ground_size() {
        return Err(Error::NoSquare { position: i });
    }
    match gap_profile(pres)[i - 1] {
        0 => Err(Error::NoSquare { position: i }),
        k => Ok(k),
    }
}

/// Splits at the square at `i` into `(bottom, top)`.
///
/// With `k` the gap at `i`, bottom is `(P_i + N^k, Q_i + E^k)` on labels
/// starting at the original offset, and top is `(E^k + P'_i, N^k + Q'_i)`
/// labelled so that its last `m+r-i` elements keep their original labels.
/// Properness is not required.
pub fn pull_apart(
    pres: &PathPresentation,
    i: usize,
) -> Result<(PathPresentation, PathPresentation)> {
    let k = gap_at(pres, i)?;
    let (e, n) = (PathWord::repeat(Step::E, k), PathWord::repeat(Step::N, k));
    let (lower, upper) = (pres.lower(), pres.upper());
    let bottom = PathPresentation::from_parts_unchecked(
        lower.prefix(i).concat(&n),
        upper.prefix(i).concat(&e),
        pres.offset(),
    );
    let top = PathPresentation::from_parts_unchecked(
        e.concat(&lower.suffix_after(i)),
        n.concat(&upper.suffix_after(i)),
        pres.offset() + i - k,
    );
    Ok((bottom, top))
}

/// The four affix requirements of gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlueCondition {
    /// (i) the bottom lower path ends with `N^k`.
    BottomLowerEndsNorth,
    /// (ii) the bottom upper path ends with `E^k`.
    BottomUpperEndsEast,
    /// (iii) the top lower path starts with `E^k`.
    TopLowerStartsEast,
    /// (iv) the top upper path starts with `N^k`.
    TopUpperStartsNorth,
}

impl fmt::Display for GlueCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GlueCondition::BottomLowerEndsNorth => {
                "(i): bottom lower path must end with k North steps"
            }
            GlueCondition::BottomUpperEndsEast => {
                "(ii): bottom upper path must end with k East steps"
            }
            GlueCondition::TopLowerStartsEast => {
                "(iii): top lower path must start with k East steps"
            }
            GlueCondition::TopUpperStartsNorth => {
                "(iv): top upper path must start with k North steps"
            }
        })
    }
}

fn glue_condition(
    bottom: &PathPresentation,
    top: &PathPresentation,
    k: usize,
) -> Option<GlueCondition> {
    if !bottom.lower().ends_with(Step::N, k) {
        Some(GlueCondition::BottomLowerEndsNorth)
    } else if !bottom.upper().ends_with(Step::E, k) {
        Some(GlueCondition::BottomUpperEndsEast)
    } else if !top.lower().starts_with(Step::E, k) {
        Some(GlueCondition::TopLowerStartsEast)
    } else if !top.upper().starts_with(Step::N, k) {
        Some(GlueCondition::TopUpperStartsNorth)
    } else {
        None
    }
}

/// Strips the `k`-step affixes and concatenates: `P = P'_B + P'_T`,
/// `Q = Q'_B + Q'_T`. The result takes the bottom's label offset.
pub fn glue(
    bottom: &PathPresentation,
    top: &PathPresentation,
    k: usize,
) -> Result<PathPresentation> {
    if let Some(cond) = glue_condition(bottom, top, k) {
        return Err(Error::Glue(cond));
    }
    let cut = bottom.ground_size() - k;
    let lower = bottom
        .lower()
        .prefix(cut)
        .concat(&top.lower().suffix_after(k));
    let upper = bottom
        .upper()
        .prefix(cut)
        .concat(&top.upper().suffix_after(k));
    Ok(PathPresentation::new(lower, upper)?.with_offset(bottom.offset()))
}

/// Executable form of the gluing lemma: cut `pres` at its proper square at
/// `i`, shrink each side by its witness, glue the two minors back together
/// and ask the presentation-minor search whether the result is a minor of
/// `pres`.
///
/// `bottom_witness` uses the bottom's labels (starting at the original
/// offset) and `top_witness` the top's relabelled range.
pub fn check_lemma_imp(
    pres: &PathPresentation,
    i: usize,
    bottom_witness: &MinorWitness,
    top_witness: &MinorWitness,
) -> Result<bool> {
    let glued = glue_minors(pres, i, bottom_witness, top_witness)?;
    Ok(is_presentation_minor(&glued, pres).is_some())
}

/// The glued presentation examined by [`check_lemma_imp`].
pub fn glue_minors(
    pres: &PathPresentation,
    i: usize,
    bottom_witness: &MinorWitness,
    top_witness: &MinorWitness,
) -> Result<PathPresentation> {
    let k = gap_at(pres, i)?;
    if !is_proper(i, k, pres.ground_size()) {
        return Err(Error::ImproperSquare {
            position: i,
            size: k,
        });
    }
    let (bottom, top) = pull_apart(pres, i)?;
    let bottom_minor = bottom.apply_witness(bottom_witness)?;
    if !(bottom_minor.lower().ends_with(Step::N, k) && bottom_minor.upper().ends_with(Step::E, k)) {
        return Err(Error::SquareDestroyed { side: "bottom", k });
    }
    let top_minor = top.apply_witness(top_witness)?;
    if !(top_minor.lower().starts_with(Step::E, k) && top_minor.upper().starts_with(Step::N, k)) {
        return Err(Error::SquareDestroyed { side: "top", k });
    }
    glue(&bottom_minor, &top_minor, k)
}

/// Lower path of the form `E^m N^r`.
pub fn is_nested(pres: &PathPresentation) -> bool {
    pres.lower().starts_with(Step::E, pres.m())
}

/// Whether some square of maximum size is proper.
pub fn has_proper_widest_square(pres: &PathPresentation) -> bool {
    let width = square_width(pres);
    squares(pres).iter().any(|s| s.size == width && s.proper)
}
