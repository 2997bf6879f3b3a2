//! Lattice path presentations.
//!
//! A presentation is a pair of equal-length words over `{E, N}`: a lower
//! bounding path and an upper bounding path, both running from `(0,0)` to
//! `(m,r)`, with the lower path never rising above the upper one. Position `i`
//! of the words corresponds to the ground-set element `offset + i - 1`.
//!
//! The matroid of a presentation is the transversal matroid of its interval
//! system `[l_i, u_i]`, where `l_i` is the position of the `i`-th North step of
//! the upper path and `u_i` that of the lower path. Its bases are exactly the
//! sets whose indicator word stays between the two bounding paths.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::ExplicitMatroid;

/// Ground-set size above which [`PathPresentation::to_explicit`] refuses to
/// enumerate bases.
pub const DEFAULT_EXPLICIT_LIMIT: usize = 16;

/// A single lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// East, `(1,0)`.
    E,
    /// North, `(0,1)`.
    N,
}

impl Step {
    pub fn swapped(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }

    fn from_char(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::E),
            'N' => Some(Step::N),
            _ => None,
        }
    }
}

/// A finite word over `{E, N}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord(Vec<Step>);

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        PathWord(steps)
    }

    pub fn empty() -> Self {
        PathWord(Vec::new())
    }

    /// `count` copies of `step`.
    pub fn repeat(step: Step, count: usize) -> Self {
        PathWord(vec![step; count])
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of East steps.
    pub fn m(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::E).count()
    }

    /// Number of North steps.
    pub fn r(&self) -> usize {
        self.0.len() - self.m()
    }

    /// North counts of every prefix: entry `i` is `r` of the first `i` steps.
    pub fn prefix_north_counts(&self) -> Vec<usize> {
        let mut counts = Vec::with_capacity(self.0.len() + 1);
        let mut c = 0;
        counts.push(0);
        for &s in &self.0 {
            if s == Step::N {
                c += 1;
            }
            counts.push(c);
        }
        counts
    }

    /// 1-based positions of the North steps, in increasing order.
    pub fn north_positions(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::N)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The word with every letter exchanged.
    pub fn swapped(&self) -> PathWord {
        PathWord(self.0.iter().map(|s| s.swapped()).collect())
    }

    pub fn concat(&self, other: &PathWord) -> PathWord {
        let mut steps = self.0.clone();
        steps.extend_from_slice(&other.0);
        PathWord(steps)
    }

    /// First `len` steps.
    pub fn prefix(&self, len: usize) -> PathWord {
        PathWord(self.0[..len].to_vec())
    }

    /// Steps after the first `len`.
    pub fn suffix_after(&self, len: usize) -> PathWord {
        PathWord(self.0[len..].to_vec())
    }

    pub fn starts_with(&self, step: Step, count: usize) -> bool {
        self.0.len() >= count && self.0[..count].iter().all(|&s| s == step)
    }

    pub fn ends_with(&self, step: Step, count: usize) -> bool {
        self.0.len() >= count && self.0[self.0.len() - count..].iter().all(|&s| s == step)
    }

    pub(crate) fn remove(&mut self, index: usize) -> Step {
        self.0.remove(index)
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Step::from_char(c).ok_or(Error::InvalidStep {
                    position: i + 1,
                    found: c,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(PathWord)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl From<Vec<Step>> for PathWord {
    fn from(steps: Vec<Step>) -> Self {
        PathWord(steps)
    }
}

/// Closed integer interval of labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub low: usize,
    pub high: usize,
}

impl Interval {
    pub fn contains(&self, label: usize) -> bool {
        self.low <= label && label <= self.high
    }
}

/// The transversal presentation `(N_1, ..., N_r)` of a lattice path matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSystem {
    pub intervals: Vec<Interval>,
}

/// A validated pair of bounding paths with a contiguous label range.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathPresentation {
    lower: PathWord,
    upper: PathWord,
    offset: usize,
}

impl PathPresentation {
    /// Validates `lower`/`upper` and builds a presentation labelled from 1.
    pub fn new(lower: PathWord, upper: PathWord) -> Result<Self> {
        validate(&lower, &upper)?;
        Ok(PathPresentation {
            lower,
            upper,
            offset: 1,
        })
    }

    /// Parses two words directly, e.g. `from_words("EENN", "NNEE")`.
    pub fn from_words(lower: &str, upper: &str) -> Result<Self> {
        PathPresentation::new(lower.parse()?, upper.parse()?)
    }

    pub fn empty() -> Self {
        PathPresentation {
            lower: PathWord::empty(),
            upper: PathWord::empty(),
            offset: 1,
        }
    }

    /// Used by operations whose output is valid by construction.
    pub(crate) fn from_parts_unchecked(lower: PathWord, upper: PathWord, offset: usize) -> Self {
        debug_assert!(validate(&lower, &upper).is_ok(), "{lower} / {upper}");
        PathPresentation {
            lower,
            upper,
            offset,
        }
    }

    pub fn with_offset(mut self, offset: usize) -> Self {
        self.offset = offset;
        self
    }

    /// The lower bounding path `P`.
    pub fn lower(&self) -> &PathWord {
        &self.lower
    }

    /// The upper bounding path `Q`.
    pub fn upper(&self) -> &PathWord {
        &self.upper
    }

    /// Label of the first ground-set element.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn ground_size(&self) -> usize {
        self.lower.len()
    }

    pub fn m(&self) -> usize {
        self.lower.m()
    }

    pub fn r(&self) -> usize {
        self.lower.r()
    }

    pub fn labels(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.ground_size()
    }

    /// True when both presentations have the same words, ignoring labels.
    pub fn same_words(&self, other: &PathPresentation) -> bool {
        self.lower == other.lower && self.upper == other.upper
    }

    /// 0-based position of `label`.
    pub fn position(&self, label: usize) -> Result<usize> {
        if self.labels().contains(&label) {
            Ok(label - self.offset)
        } else {
            Err(Error::LabelOutOfRange {
                label,
                first: self.offset,
                last: (self.offset + self.ground_size()).saturating_sub(1),
            })
        }
    }

    /// Membership vector of a label set; duplicates are ignored.
    fn membership(&self, labels: &[usize]) -> Result<Vec<bool>> {
        let mut member = vec![false; self.ground_size()];
        for &x in labels {
            member[self.position(x)?] = true;
        }
        Ok(member)
    }

    /// The word `P(X)`: `N` at the positions of `X`, `E` elsewhere.
    pub fn word_of_subset(&self, labels: &[usize]) -> Result<PathWord> {
        let member = self.membership(labels)?;
        Ok(PathWord(
            member
                .into_iter()
                .map(|b| if b { Step::N } else { Step::E })
                .collect(),
        ))
    }

    pub fn intervals(&self) -> IntervalSystem {
        let intervals = self
            .upper
            .north_positions()
            .into_iter()
            .zip(self.lower.north_positions())
            .map(|(l, u)| Interval {
                low: l + self.offset - 1,
                high: u + self.offset - 1,
            })
            .collect();
        IntervalSystem { intervals }
    }

    /// Per-prefix bounds on the North count of a path inside the region.
    fn bounds(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.lower.prefix_north_counts(),
            self.upper.prefix_north_counts(),
        )
    }

    /// Whether `labels` is a basis: exactly `r` elements whose word stays
    /// between the bounding paths.
    pub fn is_basis(&self, labels: &[usize]) -> Result<bool> {
        let member = self.membership(labels)?;
        if member.iter().filter(|&&b| b).count() != self.r() {
            return Ok(false);
        }
        let (lo, hi) = self.bounds();
        let mut c = 0;
        for (i, &b) in member.iter().enumerate() {
            c += b as usize;
            if c < lo[i + 1] || c > hi[i + 1] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Size of a maximum partial transversal of `labels` in the interval system.
    pub fn rank_of(&self, labels: &[usize]) -> Result<usize> {
        let member = self.membership(labels)?;
        let intervals = self.intervals().intervals;
        // matched_to[j] = position matched to interval j
        let mut matched_to: Vec<Option<usize>> = vec![None; intervals.len()];
        let mut size = 0;
        for x in (0..member.len()).filter(|&p| member[p]) {
            let mut visited = vec![false; intervals.len()];
            if augment(
                x + self.offset,
                &intervals,
                &mut matched_to,
                &mut visited,
                self.offset,
            ) {
                size += 1;
            }
        }
        Ok(size)
    }

    /// Independence as a partial transversal of the interval system,
    /// decided by bipartite matching.
    pub fn is_independent(&self, labels: &[usize]) -> Result<bool> {
        let member = self.membership(labels)?;
        let size = member.iter().filter(|&&b| b).count();
        Ok(self.rank_of(labels)? == size)
    }

    /// Independence via lattice paths: `X` is independent iff `P(X)` is part
    /// of a path between the bounding paths, i.e. some basis path has a North
    /// step at every position of `X`.
    pub fn is_independent_by_paths(&self, labels: &[usize]) -> Result<bool> {
        let member = self.membership(labels)?;
        if member.iter().filter(|&&b| b).count() > self.r() {
            return Ok(false);
        }
        let (lo, hi) = self.bounds();
        let r = self.r();
        let mut reach = vec![false; r + 1];
        reach[0] = true;
        for (i, &forced) in member.iter().enumerate() {
            let mut next = vec![false; r + 1];
            for c in (0..=r).filter(|&c| reach[c]) {
                let mut targets = [None, Some(c + 1)];
                if !forced {
                    targets[0] = Some(c);
                }
                for t in targets.into_iter().flatten() {
                    if t <= r && lo[i + 1] <= t && t <= hi[i + 1] {
                        next[t] = true;
                    }
                }
            }
            reach = next;
        }
        Ok(reach[r])
    }

    /// Number of bases, counted as lattice paths inside the region.
    pub fn count_bases(&self) -> BigUint {
        let (lo, hi) = self.bounds();
        let r = self.r();
        let mut ways = vec![BigUint::zero(); r + 1];
        ways[0] = BigUint::one();
        for i in 1..=self.ground_size() {
            let mut next = vec![BigUint::zero(); r + 1];
            for (c, slot) in next.iter_mut().enumerate().take(hi[i] + 1).skip(lo[i]) {
                let mut total = ways[c].clone();
                if c > 0 {
                    total += &ways[c - 1];
                }
                *slot = total;
            }
            ways = next;
        }
        ways.swap_remove(r)
    }

    /// `feasible[i][c]`: a path inside the region passes through prefix `i`
    /// with North count `c` and can still reach `(m,r)`.
    fn completion_table(&self) -> Vec<Vec<bool>> {
        let (lo, hi) = self.bounds();
        let n = self.ground_size();
        let r = self.r();
        let mut feasible = vec![vec![false; r + 2]; n + 1];
        feasible[n][r] = true;
        for i in (0..n).rev() {
            for c in lo[i]..=hi[i].min(r) {
                feasible[i][c] = feasible[i + 1][c] || feasible[i + 1][c + 1];
            }
        }
        feasible
    }

    /// Bases in lexicographic order of their sorted label lists, at most `cap`.
    pub fn enumerate_bases(&self, cap: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_basis_position_set(cap, |positions| {
            out.push(positions.iter().map(|p| p + self.offset).collect());
        });
        out
    }

    fn for_each_basis_position_set(&self, cap: usize, mut visit: impl FnMut(&[usize])) {
        if cap == 0 {
            return;
        }
        let feasible = self.completion_table();
        let n = self.ground_size();
        let mut chosen = Vec::with_capacity(self.r());
        let mut emitted = 0;
        // Taking a North step first yields lexicographic order.
        #[allow(clippy::too_many_arguments)]
        fn walk(
            i: usize,
            c: usize,
            n: usize,
            feasible: &[Vec<bool>],
            chosen: &mut Vec<usize>,
            emitted: &mut usize,
            cap: usize,
            visit: &mut dyn FnMut(&[usize]),
        ) {
            if *emitted >= cap {
                return;
            }
            if i == n {
                visit(chosen);
                *emitted += 1;
                return;
            }
            if feasible[i + 1][c + 1] {
                chosen.push(i);
                walk(i + 1, c + 1, n, feasible, chosen, emitted, cap, visit);
                chosen.pop();
            }
            if feasible[i + 1][c] {
                walk(i + 1, c, n, feasible, chosen, emitted, cap, visit);
            }
        }
        if feasible[0][0] {
            walk(
                0,
                0,
                n,
                &feasible,
                &mut chosen,
                &mut emitted,
                cap,
                &mut visit,
            );
        }
    }

    /// Presentation of the dual matroid: letters swapped, roles exchanged.
    pub fn dual(&self) -> PathPresentation {
        PathPresentation::from_parts_unchecked(
            self.upper.swapped(),
            self.lower.swapped(),
            self.offset,
        )
    }

    /// Concatenation; the labels of `other` follow on from those of `self`.
    pub fn direct_sum(&self, other: &PathPresentation) -> PathPresentation {
        PathPresentation::from_parts_unchecked(
            self.lower.concat(&other.lower),
            self.upper.concat(&other.upper),
            self.offset,
        )
    }

    /// Explicit basis family, elements renumbered `1..=n` by position.
    pub fn to_explicit(&self) -> Result<ExplicitMatroid> {
        self.to_explicit_with_limit(DEFAULT_EXPLICIT_LIMIT)
    }

    pub fn to_explicit_with_limit(&self, limit: usize) -> Result<ExplicitMatroid> {
        let n = self.ground_size();
        if n > limit || n > crate::oracle::MAX_GROUND {
            return Err(Error::SizeLimit {
                size: n,
                limit: limit.min(crate::oracle::MAX_GROUND),
            });
        }
        let mut bases = Vec::new();
        self.for_each_basis_position_set(usize::MAX, |positions| {
            bases.push(positions.iter().fold(0u64, |acc, &p| acc | (1 << p)));
        });
        Ok(ExplicitMatroid::from_sorted_unchecked(n, bases))
    }
}

fn augment(
    label: usize,
    intervals: &[Interval],
    matched_to: &mut [Option<usize>],
    visited: &mut [bool],
    offset: usize,
) -> bool {
    for (j, iv) in intervals.iter().enumerate() {
        if !iv.contains(label) || visited[j] {
            continue;
        }
        visited[j] = true;
        let free = match matched_to[j] {
            None => true,
            Some(p) => augment(p + offset, intervals, matched_to, visited, offset),
        };
        if free {
            matched_to[j] = Some(label - offset);
            return true;
        }
    }
    false
}

fn validate(lower: &PathWord, upper: &PathWord) -> Result<()> {
    if lower.len() != upper.len() {
        return Err(Error::LengthMismatch {
            lower: lower.len(),
            upper: upper.len(),
        });
    }
    let (mut rl, mut ru) = (0usize, 0usize);
    for (i, (&a, &b)) in lower.steps().iter().zip(upper.steps()).enumerate() {
        rl += (a == Step::N) as usize;
        ru += (b == Step::N) as usize;
        if rl > ru {
            return Err(Error::DominanceViolated { position: i + 1 });
        }
    }
    if rl != ru {
        return Err(Error::EndpointMismatch {
            lower_m: lower.m(),
            lower_r: rl,
            upper_m: upper.m(),
            upper_r: ru,
            position: lower.len(),
        });
    }
    Ok(())
}

/// Parses a presentation from one of:
///
/// * the canonical `P=<word>` / `Q=<word>` / optional `offset=<int>` lines,
/// * two bare lines (lower, then upper),
/// * a single line with the two words separated by `/`, `,` or whitespace.
///
/// Blank lines and `#` comments are ignored.
pub fn parse_presentation(text: &str) -> Result<PathPresentation> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    if lines.iter().any(|(_, l)| l.contains('=')) {
        let (mut lower, mut upper, mut offset) = (None, None, 1);
        for &(no, line) in &lines {
            let (key, value) = line.split_once('=').ok_or_else(|| Error::MalformedLine {
                line: no,
                reason: "expected key=value".into(),
            })?;
            match key.trim() {
                "P" => lower = Some(value.trim().parse::<PathWord>()?),
                "Q" => upper = Some(value.trim().parse::<PathWord>()?),
                "offset" => {
                    offset = value.trim().parse().map_err(|_| Error::MalformedLine {
                        line: no,
                        reason: format!("bad offset {:?}", value.trim()),
                    })?
                }
                other => {
                    return Err(Error::MalformedLine {
                        line: no,
                        reason: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        let found = lower.is_some() as usize + upper.is_some() as usize;
        return match (lower, upper) {
            (Some(p), Some(q)) => Ok(PathPresentation::new(p, q)?.with_offset(offset)),
            _ => Err(Error::MissingWord { found }),
        };
    }

    let words: Vec<&str> = match lines.as_slice() {
        [(_, one)] => one
            .split(|c: char| c == '/' || c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty() || one.contains('/') || one.contains(','))
            .collect(),
        many => many.iter().map(|(_, l)| *l).collect(),
    };
    match words.as_slice() {
        [p, q] => PathPresentation::from_words(p.trim(), q.trim()),
        _ => Err(Error::MissingWord { found: words.len() }),
    }
}

impl FromStr for PathPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

/// Canonical interchange format: `P=`, `Q=` and, unless it is 1, `offset=`.
impl fmt::Display for PathPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "P={}", self.lower)?;
        writeln!(f, "Q={}", self.upper)?;
        if self.offset != 1 {
            writeln!(f, "offset={}", self.offset)?;
        }
        Ok(())
    }
}
