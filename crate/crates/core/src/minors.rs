//! Single-element deletion and contraction on presentations, minor witnesses,
//! presentation-level minor search and uniform-minor extraction.
//!
//! Labels in a witness are positional: each step names an element of the
//! presentation as it stands when that step is applied, and the presentation
//! keeps its label offset throughout.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::presentation::{PathPresentation, PathWord, Step};
use crate::squares::{gap_profile, square_width};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementClass {
    /// In no interval: East in both words with both paths at the same height.
    Loop,
    /// Some interval is exactly `{x}`: North in both words at the same height.
    Isthmus,
    Ordinary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorOp {
    Delete,
    Contract,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinorStep {
    pub op: MinorOp,
    pub label: usize,
}

impl MinorStep {
    pub fn delete(label: usize) -> Self {
        MinorStep {
            op: MinorOp::Delete,
            label,
        }
    }

    pub fn contract(label: usize) -> Self {
        MinorStep {
            op: MinorOp::Contract,
            label,
        }
    }
}

/// An ordered list of delete/contract steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MinorWitness {
    pub steps: Vec<MinorStep>,
}

impl MinorWitness {
    pub fn new(steps: Vec<MinorStep>) -> Self {
        MinorWitness { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, op: MinorOp) -> usize {
        self.steps.iter().filter(|s| s.op == op).count()
    }

    /// Rewrites the steps in terms of the labels `start` had before any step
    /// was applied.
    pub fn original_labels(&self, start: &PathPresentation) -> Result<Vec<MinorStep>> {
        let mut alive: Vec<usize> = start.labels().collect();
        let mut out = Vec::with_capacity(self.steps.len());
        for (index, step) in self.steps.iter().enumerate() {
            let pos = step
                .label
                .checked_sub(start.offset())
                .filter(|&p| p < alive.len())
                .ok_or_else(|| Error::WitnessStep {
                    index,
                    source: Box::new(Error::LabelOutOfRange {
                        label: step.label,
                        first: start.offset(),
                        last: (start.offset() + alive.len()).saturating_sub(1),
                    }),
                })?;
            out.push(MinorStep {
                op: step.op,
                label: alive.remove(pos),
            });
        }
        Ok(out)
    }
}

/// One step per line: `D <label>` or `C <label>`.
impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            let tag = match step.op {
                MinorOp::Delete => 'D',
                MinorOp::Contract => 'C',
            };
            writeln!(f, "{tag} {}", step.label)?;
        }
        Ok(())
    }
}

impl FromStr for MinorWitness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let malformed = || Error::MalformedWitness {
                line: i + 1,
                text: raw.to_string(),
            };
            let mut parts = line.split_whitespace();
            let op = match parts.next() {
                Some("D") => MinorOp::Delete,
                Some("C") => MinorOp::Contract,
                _ => return Err(malformed()),
            };
            let label = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(malformed)?;
            if parts.next().is_some() {
                return Err(malformed());
            }
            steps.push(MinorStep { op, label });
        }
        Ok(MinorWitness { steps })
    }
}

impl PathPresentation {
    pub fn classify(&self, x: usize) -> Result<ElementClass> {
        let p = self.position(x)?;
        Ok(self.classify_position(p))
    }

    fn classify_position(&self, p: usize) -> ElementClass {
        let lower = self.lower().steps();
        let upper = self.upper().steps();
        let below = lower[..p].iter().filter(|&&s| s == Step::N).count();
        let above = upper[..p].iter().filter(|&&s| s == Step::N).count();
        match (lower[p], upper[p]) {
            _ if below != above => ElementClass::Ordinary,
            (Step::E, Step::E) => ElementClass::Loop,
            (Step::N, Step::N) => ElementClass::Isthmus,
            _ => ElementClass::Ordinary,
        }
    }

    /// `M \ x`. Labels above `x` shift down by one.
    pub fn delete(&self, x: usize) -> Result<PathPresentation> {
        let p = self.position(x)?;
        Ok(self.remove_element(p, MinorOp::Delete))
    }

    /// `M / x`. Labels above `x` shift down by one.
    pub fn contract(&self, x: usize) -> Result<PathPresentation> {
        let p = self.position(x)?;
        Ok(self.remove_element(p, MinorOp::Contract))
    }

    fn remove_element(&self, p: usize, op: MinorOp) -> PathPresentation {
        let mut lower = self.lower().clone();
        let mut upper = self.upper().clone();
        match self.classify_position(p) {
            ElementClass::Loop | ElementClass::Isthmus => {
                lower.remove(p);
                upper.remove(p);
            }
            ElementClass::Ordinary => {
                let (from_upper, from_lower) = match op {
                    // first E of Q at or after x, last E of P at or before x
                    MinorOp::Delete => (
                        first_at_or_after(&upper, Step::E, p),
                        last_at_or_before(&lower, Step::E, p),
                    ),
                    // last N of Q at or before x, first N of P at or after x
                    MinorOp::Contract => (
                        last_at_or_before(&upper, Step::N, p),
                        first_at_or_after(&lower, Step::N, p),
                    ),
                };
                upper.remove(from_upper.expect("ordinary element has the upper step"));
                lower.remove(from_lower.expect("ordinary element has the lower step"));
            }
        }
        PathPresentation::from_parts_unchecked(lower, upper, self.offset())
    }

    /// Applies `witness` step by step.
    pub fn apply_witness(&self, witness: &MinorWitness) -> Result<PathPresentation> {
        let mut cur = self.clone();
        for (index, step) in witness.steps.iter().enumerate() {
            let next = match step.op {
                MinorOp::Delete => cur.delete(step.label),
                MinorOp::Contract => cur.contract(step.label),
            };
            cur = next.map_err(|e| Error::WitnessStep {
                index,
                source: Box::new(e),
            })?;
        }
        Ok(cur)
    }

    /// The step that removes position `p` with operation `op`, recorded as a
    /// contraction for isthmuses and a deletion for loops so that step counts
    /// track the change in rank and corank.
    fn recorded_step(&self, p: usize, op: MinorOp) -> MinorStep {
        let op = match self.classify_position(p) {
            ElementClass::Loop => MinorOp::Delete,
            ElementClass::Isthmus => MinorOp::Contract,
            ElementClass::Ordinary => op,
        };
        MinorStep {
            op,
            label: p + self.offset(),
        }
    }
}

fn first_at_or_after(word: &PathWord, step: Step, p: usize) -> Option<usize> {
    word.steps()[p..]
        .iter()
        .position(|&s| s == step)
        .map(|i| i + p)
}

fn last_at_or_before(word: &PathWord, step: Step, p: usize) -> Option<usize> {
    word.steps()[..=p].iter().rposition(|&s| s == step)
}

/// Searches for a witness taking `large` to `small`, word for word (label
/// offsets are ignored).
///
/// Breadth-first over ground size. Every witness has exactly
/// `|large| - |small|` steps; states are memoized on their word pair and
/// pruned once their corank or rank falls below that of `small`.
pub fn is_presentation_minor(
    small: &PathPresentation,
    large: &PathPresentation,
) -> Option<MinorWitness> {
    if small.m() > large.m() || small.r() > large.r() {
        return None;
    }
    let start = large.clone();
    if start.same_words(small) {
        return Some(MinorWitness::default());
    }
    // arena of (state, parent, step)
    let mut arena: Vec<(PathPresentation, usize, MinorStep)> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    arena.push((start, usize::MAX, MinorStep::delete(0)));
    frontier.push(0);
    let depth = large.ground_size() - small.ground_size();
    for level in 1..=depth {
        let mut seen: HashMap<(PathWord, PathWord), ()> = HashMap::new();
        let mut next = Vec::new();
        for &idx in &frontier {
            let state = arena[idx].0.clone();
            for p in 0..state.ground_size() {
                for op in [MinorOp::Delete, MinorOp::Contract] {
                    let class = state.classify_position(p);
                    if op == MinorOp::Contract && class != ElementClass::Ordinary {
                        continue;
                    }
                    let child = state.remove_element(p, op);
                    if child.m() < small.m() || child.r() < small.r() {
                        continue;
                    }
                    let key = (child.lower().clone(), child.upper().clone());
                    if seen.insert(key, ()).is_some() {
                        continue;
                    }
                    let step = state.recorded_step(p, op);
                    let found = level == depth && child.same_words(small);
                    arena.push((child, idx, step));
                    if found {
                        return Some(trace(&arena, arena.len() - 1));
                    }
                    next.push(arena.len() - 1);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            return None;
        }
    }
    None
}

fn trace(arena: &[(PathPresentation, usize, MinorStep)], mut idx: usize) -> MinorWitness {
    let mut steps = Vec::new();
    while arena[idx].1 != usize::MAX {
        steps.push(arena[idx].2);
        idx = arena[idx].1;
    }
    steps.reverse();
    MinorWitness { steps }
}

/// `E^k N^k / N^k E^k`, the presentation of `U_{k,2k}`.
pub fn canonical_uniform(k: usize) -> PathPresentation {
    let (e, n) = (PathWord::repeat(Step::E, k), PathWord::repeat(Step::N, k));
    PathPresentation::from_parts_unchecked(e.concat(&n), n.concat(&e), 1)
}

/// Lower-left corner `(x, y)` of the first `k x k` square.
fn square_corner(pres: &PathPresentation, k: usize) -> Option<(usize, usize)> {
    if k == 0 {
        return Some((0, 0));
    }
    let gaps = gap_profile(pres);
    let i = gaps.iter().position(|&g| g == k)? + 1;
    let prefix = pres.lower().prefix(i);
    let (m_lower, r_lower) = (prefix.m(), prefix.r());
    Some((m_lower - k, r_lower))
}

/// Shrinks a presentation with a `k x k` square down to `U_{k,2k}`.
///
/// While the square's lower-left corner is off the left edge, delete the
/// first element; while it is above the bottom edge, contract the first
/// element; then remove the last element, deleting when that keeps a
/// `k x k` square and contracting otherwise. Each candidate is kept only if
/// the result still has square-width at least `k`.
pub fn extract_uniform_minor(pres: &PathPresentation, k: usize) -> Result<MinorWitness> {
    let actual = square_width(pres);
    if actual < k {
        return Err(Error::SquareWidthTooSmall {
            required: k,
            actual,
        });
    }
    let mut cur = pres.clone();
    let mut steps = Vec::new();
    while cur.ground_size() > 2 * k {
        let (x, y) = square_corner(&cur, k).expect("square-width at least k");
        let n = cur.ground_size();
        let mut candidates = Vec::with_capacity(4);
        if x > 0 {
            candidates.push((0, MinorOp::Delete));
        }
        if y > 0 {
            candidates.push((0, MinorOp::Contract));
        }
        candidates.push((n - 1, MinorOp::Delete));
        candidates.push((n - 1, MinorOp::Contract));
        let (p, op, next) = candidates
            .into_iter()
            .map(|(p, op)| (p, op, cur.remove_element(p, op)))
            .find(|(_, _, next)| square_width(next) >= k)
            .ok_or(Error::ExtractionStuck { k, size: n })?;
        steps.push(cur.recorded_step(p, op));
        cur = next;
    }
    debug_assert!(cur.same_words(&canonical_uniform(k)), "{cur}");
    Ok(MinorWitness { steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(p: &str, q: &str) -> PathPresentation {
        PathPresentation::from_words(p, q).unwrap()
    }

    fn words(p: &PathPresentation) -> (String, String) {
        (p.lower().to_string(), p.upper().to_string())
    }

    #[test]
    fn classification_examples() {
        let lc = pres("EN", "EN");
        assert_eq!(lc.classify(1).unwrap(), ElementClass::Loop);
        assert_eq!(lc.classify(2).unwrap(), ElementClass::Isthmus);
        assert_eq!(
            pres("EENN", "NNEE").classify(2).unwrap(),
            ElementClass::Ordinary
        );
        assert_eq!(pres("ENE", "ENE").classify(3).unwrap(), ElementClass::Loop);
        assert!(matches!(lc.classify(3), Err(Error::LabelOutOfRange { .. })));
        // East in both words but strictly between the paths: not a loop
        assert_eq!(
            pres("EENN", "NEEN").classify(2).unwrap(),
            ElementClass::Ordinary
        );
        // North in both words at different heights: not an isthmus
        assert_eq!(
            pres("ENEN", "NNEE").classify(2).unwrap(),
            ElementClass::Ordinary
        );
    }

    #[test]
    fn delete_examples() {
        assert_eq!(
            words(&pres("EENN", "NNEE").delete(2).unwrap()),
            ("ENN".into(), "NNE".into())
        );
        assert_eq!(
            words(&pres("EN", "EN").delete(1).unwrap()),
            ("N".into(), "N".into())
        );
        assert_eq!(
            words(&pres("EN", "EN").delete(2).unwrap()),
            ("E".into(), "E".into())
        );
    }

    #[test]
    fn contract_examples() {
        assert_eq!(
            words(&pres("EENN", "NNEE").contract(2).unwrap()),
            ("EEN".into(), "NEE".into())
        );
        assert_eq!(
            words(&pres("EN", "EN").contract(1).unwrap()),
            ("N".into(), "N".into())
        );
        assert_eq!(
            words(&pres("EN", "EN").contract(2).unwrap()),
            ("E".into(), "E".into())
        );
    }

    #[test]
    fn offsets_are_kept() {
        let p = pres("EENN", "NNEE").with_offset(10);
        let d = p.delete(11).unwrap();
        assert_eq!(d.offset(), 10);
        assert_eq!(words(&d), ("ENN".into(), "NNE".into()));
        assert!(p.delete(2).is_err());
    }

    #[test]
    fn witness_application() {
        let u24 = pres("EENN", "NNEE");
        let w: MinorWitness = "D 2\n".parse().unwrap();
        assert_eq!(
            words(&u24.apply_witness(&w).unwrap()),
            ("ENN".into(), "NNE".into())
        );
        assert_eq!(u24.apply_witness(&MinorWitness::default()).unwrap(), u24);
        let w: MinorWitness = "D 2\nC 1\n".parse().unwrap();
        assert_eq!(
            words(&u24.apply_witness(&w).unwrap()),
            ("EN".into(), "NE".into())
        );
        let bad: MinorWitness = "D 1\nD 4\n".parse().unwrap();
        assert!(matches!(
            u24.apply_witness(&bad),
            Err(Error::WitnessStep { index: 1, .. })
        ));
    }

    #[test]
    fn witness_text_format() {
        let w = MinorWitness::new(vec![MinorStep::delete(3), MinorStep::contract(1)]);
        assert_eq!(w.to_string(), "D 3\nC 1\n");
        assert_eq!(w.to_string().parse::<MinorWitness>().unwrap(), w);
        assert!(matches!(
            "X 1".parse::<MinorWitness>(),
            Err(Error::MalformedWitness { line: 1, .. })
        ));
        assert!("D".parse::<MinorWitness>().is_err());
        assert!("D 1 2".parse::<MinorWitness>().is_err());
    }

    #[test]
    fn original_label_mapping() {
        let p = pres("EENN", "NNEE");
        let w: MinorWitness = "D 2\nC 2\n".parse().unwrap();
        let orig = w.original_labels(&p).unwrap();
        assert_eq!(orig, vec![MinorStep::delete(2), MinorStep::contract(3)]);
    }

    #[test]
    fn search_examples() {
        let small = pres("ENN", "NNE");
        let large = pres("EENN", "NNEE");
        let w = is_presentation_minor(&small, &large).unwrap();
        assert_eq!(w.len(), 1);
        assert!(large.apply_witness(&w).unwrap().same_words(&small));
        assert_eq!(
            is_presentation_minor(&large, &large),
            Some(MinorWitness::default())
        );
        assert_eq!(is_presentation_minor(&large, &small), None);
        // same matroid, different words: not a presentation minor
        assert_eq!(
            is_presentation_minor(&pres("EN", "EN"), &pres("NE", "NE")),
            None
        );
    }

    #[test]
    fn extraction_examples() {
        assert!(extract_uniform_minor(&pres("EENN", "NNEE"), 2)
            .unwrap()
            .is_empty());
        let big = pres("EEEEENNNNENEN", "NNNNNEEENEEEE");
        let w = extract_uniform_minor(&big, 3).unwrap();
        assert_eq!(w.len(), 7);
        assert!(big
            .apply_witness(&w)
            .unwrap()
            .same_words(&pres("EEENNN", "NNNEEE")));
        assert!(matches!(
            extract_uniform_minor(&pres("EN", "EN"), 1),
            Err(Error::SquareWidthTooSmall {
                required: 1,
                actual: 0
            })
        ));
        let w0 = extract_uniform_minor(&pres("EN", "EN"), 0).unwrap();
        assert_eq!(
            pres("EN", "EN").apply_witness(&w0).unwrap(),
            PathPresentation::empty()
        );
    }
}
