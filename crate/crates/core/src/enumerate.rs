//! Exhaustive and random generators of presentations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::presentation::{PathPresentation, PathWord, Step};

/// All words with `m` East and `r` North steps, in lexicographic order (`E < N`).
pub fn words_with(m: usize, r: usize) -> Vec<PathWord> {
    fn go(m: usize, r: usize, cur: &mut Vec<Step>, out: &mut Vec<PathWord>) {
        if m == 0 && r == 0 {
            out.push(PathWord::new(cur.clone()));
            return;
        }
        if m > 0 {
            cur.push(Step::E);
            go(m - 1, r, cur, out);
            cur.pop();
        }
        if r > 0 {
            cur.push(Step::N);
            go(m, r - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, r, &mut Vec::with_capacity(m + r), &mut out);
    out
}

fn dominates(upper: &[usize], lower: &[usize]) -> bool {
    upper.iter().zip(lower).all(|(u, l)| u >= l)
}

/// Every valid presentation ending at `(m, r)`, ordered by (lower, upper).
pub fn presentations_with(m: usize, r: usize) -> impl Iterator<Item = PathPresentation> {
    let words = words_with(m, r);
    let counts: Vec<Vec<usize>> = words.iter().map(|w| w.prefix_north_counts()).collect();
    let mut out = Vec::new();
    for (i, lower) in words.iter().enumerate() {
        for (j, upper) in words.iter().enumerate() {
            if dominates(&counts[j], &counts[i]) {
                out.push(PathPresentation::from_parts_unchecked(
                    lower.clone(),
                    upper.clone(),
                    1,
                ));
            }
        }
    }
    out.into_iter()
}

/// Every valid presentation on `n` elements.
pub fn all_presentations(n: usize) -> impl Iterator<Item = PathPresentation> {
    (0..=n).flat_map(move |m| presentations_with(m, n - m))
}

/// Every valid presentation on at most `n` elements.
pub fn all_presentations_up_to(n: usize) -> impl Iterator<Item = PathPresentation> {
    (0..=n).flat_map(all_presentations)
}

/// Every presentation with `lower == upper` on `n` elements.
pub fn all_square_free(n: usize) -> impl Iterator<Item = PathPresentation> {
    (0..=n).flat_map(move |m| {
        words_with(m, n - m)
            .into_iter()
            .map(|w| PathPresentation::from_parts_unchecked(w.clone(), w, 1))
    })
}

fn random_word<R: Rng + ?Sized>(rng: &mut R, m: usize, r: usize) -> Vec<Step> {
    let mut steps: Vec<Step> = std::iter::repeat_n(Step::E, m)
        .chain(std::iter::repeat_n(Step::N, r))
        .collect();
    steps.shuffle(rng);
    steps
}

fn word_from_counts(counts: &[usize]) -> PathWord {
    PathWord::new(
        counts
            .windows(2)
            .map(|w| if w[1] > w[0] { Step::N } else { Step::E })
            .collect(),
    )
}

/// A random presentation ending at `(m, r)`: two random words, with the
/// pointwise minimum and maximum of their North-count profiles as the lower
/// and upper paths.
pub fn random_presentation_with<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    r: usize,
) -> PathPresentation {
    let a = PathWord::new(random_word(rng, m, r)).prefix_north_counts();
    let b = PathWord::new(random_word(rng, m, r)).prefix_north_counts();
    let lo: Vec<usize> = a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect();
    let hi: Vec<usize> = a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect();
    PathPresentation::from_parts_unchecked(word_from_counts(&lo), word_from_counts(&hi), 1)
}

/// A random presentation on `n` elements with a uniformly chosen corank.
pub fn random_presentation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PathPresentation {
    let m = rng.gen_range(0..=n);
    random_presentation_with(rng, m, n - m)
}
