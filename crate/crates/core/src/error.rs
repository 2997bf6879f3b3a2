use thiserror::Error;

use crate::squares::GlueCondition;

/// Errors produced by the presentation, minor, square and oracle operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position} (expected 'E' or 'N')")]
    InvalidStep { position: usize, found: char },

    #[error("expected two words, found {found}")]
    MissingWord { found: usize },

    #[error("malformed input line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("word lengths differ: lower has {lower} steps, upper has {upper}")]
    LengthMismatch { lower: usize, upper: usize },

    #[error("endpoints differ: lower ends at ({lower_m},{lower_r}), upper ends at ({upper_m},{upper_r}); first differing count at position {position}")]
    EndpointMismatch {
        lower_m: usize,
        lower_r: usize,
        upper_m: usize,
        upper_r: usize,
        position: usize,
    },

    #[error("dominance violated at position {position}: lower path rises above upper path")]
    DominanceViolated { position: usize },

    #[error("label {label} outside ground set [{first}, {last}]")]
    LabelOutOfRange {
        label: usize,
        first: usize,
        last: usize,
    },

    #[error("ground set of size {size} exceeds the brute-force limit {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("no square at position {position}")]
    NoSquare { position: usize },

    #[error("square of size {size} at position {position} is not proper")]
    ImproperSquare { position: usize, size: usize },

    #[error("glue condition {0}")]
    Glue(GlueCondition),

    #[error("witness moved the {side} minor off its {k}x{k} square")]
    SquareDestroyed { side: &'static str, k: usize },

    #[error("square-width {actual} is below the requested {required}")]
    SquareWidthTooSmall { required: usize, actual: usize },

    #[error("no step keeps a {k}x{k} square on {size} elements")]
    ExtractionStuck { k: usize, size: usize },

    #[error("witness step {index} failed: {source}")]
    WitnessStep {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("malformed witness line {line}: {text:?}")]
    MalformedWitness { line: usize, text: String },

    #[error("rank {rank} out of range for ground set of size {n}")]
    RankOutOfRange { rank: usize, n: usize },

    #[error("truncation rank {target} out of range [1, {rank}]")]
    TruncationRange { target: usize, rank: usize },

    #[error("family {family} is defined for n >= {min}, got {n}")]
    FamilyIndex { family: char, n: usize, min: usize },

    #[error("branch-width needs at least two elements, got {n}")]
    GroundTooSmall { n: usize },

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("poset of {items} items exceeds the limit {limit}")]
    PosetTooLarge { items: usize, limit: usize },

    #[error("relation is not transitive: {a} <= {b} <= {c} but not {a} <= {c}")]
    NotTransitive { a: usize, b: usize, c: usize },

    #[error("square-width {0} presentation is not made of loops and coloops")]
    NotBaseCase(usize),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
