//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the captured output, so it can be tested without a process.

mod render;

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use lpm::minors::MinorWitness;
use lpm::oracle::{branch_width, family_f, family_g, family_h, ExplicitMatroid};
use lpm::squares::{gap_profile, glue, pull_apart, square_width, squares};
use lpm::wqo::{build_poset, evidence_table, evidence_tsv, EvidenceConfig};
use lpm::{extract_uniform_minor, is_presentation_minor, ElementClass, Error, PathPresentation};

pub use render::{grid, square_corners};

#[derive(Parser, Debug)]
#[command(name = "lpm", version, about = "Lattice path matroid toolkit")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A presentation given as a file, as inline text such as `EENN/NNEE`, or
/// through `--p`/`--q`.
#[derive(Args, Debug)]
struct Input {
    /// File path, `-` for stdin, or inline text.
    input: Option<String>,
    /// Lower path.
    #[arg(long, requires = "q", conflicts_with = "input")]
    p: Option<String>,
    /// Upper path.
    #[arg(long, requires = "p")]
    q: Option<String>,
    /// First label (overrides the input).
    #[arg(long)]
    offset: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sizes, rank, loops, coloops, square-width and gap profile.
    Info(Input),
    /// Number of bases and the first few in lexicographic order.
    Bases {
        #[command(flatten)]
        input: Input,
        /// How many bases to list.
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
    /// Searches for a witness that SMALL is a minor of LARGE.
    IsMinor { small: String, large: String },
    /// Deletes one element.
    Delete {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: usize,
    },
    /// Contracts one element.
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: usize,
    },
    /// Lists every square and draws one of them.
    Squares {
        #[command(flatten)]
        input: Input,
        /// Square to mark; defaults to the first widest one.
        #[arg(long)]
        at: Option<usize>,
    },
    /// Splits at the square at prefix length `--at`.
    Pull {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        at: usize,
        /// Write the bottom presentation here instead of stdout.
        #[arg(long, requires = "top")]
        bottom: Option<String>,
        /// Write the top presentation here instead of stdout.
        #[arg(long, requires = "bottom")]
        top: Option<String>,
    },
    /// Glues BOTTOM and TOP along a `k x k` square.
    Glue {
        bottom: String,
        top: String,
        #[arg(long)]
        k: usize,
    },
    /// Witness that reduces the input to `E^k N^k / N^k E^k`.
    UniformMinor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Applies a witness file to a presentation.
    Apply {
        #[command(flatten)]
        input: Input,
        /// Witness file or inline text (`D 2;C 1`).
        #[arg(long)]
        witness: String,
    },
    /// Explicit matroid JSON for a member of the F, G or H family.
    Gen {
        #[arg(long, value_parser = ["F", "G", "H"])]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Exact branch-width of an explicit matroid (JSON file or inline).
    BranchWidth { matroid: String },
    /// Minor poset over the given presentations.
    Antichain {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Random samples of presentations and their poset statistics (TSV).
    Evidence {
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 30)]
        sample_size: usize,
        #[arg(long, default_value_t = 10)]
        max_ground: usize,
        #[arg(long, default_value_t = 1)]
        max_square_width: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// ASCII drawing of the two bounding paths.
    Render(Input),
    /// Presentation of the dual matroid.
    Dual(Input),
    /// Direct sum of two presentations.
    Sum { first: String, second: String },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad arguments or unreadable input: exit code 2.
    Usage(String),
    /// The operation itself failed: exit code 1.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidStep { .. }
            | Error::MissingWord { .. }
            | Error::MalformedLine { .. }
            | Error::MalformedWitness { .. }
            | Error::Json(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut files = Vec::new();
    match dispatch(&cli, &mut files).and_then(|out| {
        for (path, text) in &files {
            std::fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {path}: {e}")))?;
        }
        Ok(out)
    }) {
        Ok(stdout) => Output {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n\nRun 'lpm --help' for usage.\n"),
        },
        Err(Failure::Domain(e)) => Output {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_text(arg: &str) -> CliResult<String> {
    if arg == "-" {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| Failure::Usage(format!("stdin: {e}")));
    }
    if Path::new(arg).is_file() {
        return std::fs::read_to_string(arg)
            .map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn parse_pres(arg: &str) -> CliResult<PathPresentation> {
    Ok(read_text(arg)?.parse::<PathPresentation>()?)
}

fn load(input: &Input) -> CliResult<PathPresentation> {
    let pres = match (&input.input, &input.p, &input.q) {
        (_, Some(p), Some(q)) => PathPresentation::from_words(p, q)?,
        (Some(arg), _, _) => parse_pres(arg)?,
        _ => {
            return Err(Failure::Usage(
                "no presentation given (pass a file, inline words, or --p/--q)".into(),
            ))
        }
    };
    Ok(match input.offset {
        Some(0) => return Err(Failure::Usage("offset must be at least 1".into())),
        Some(o) => pres.with_offset(o),
        None => pres,
    })
}

fn pres_json(p: &PathPresentation) -> Value {
    json!({ "lower": p.lower().to_string(), "upper": p.upper().to_string(), "offset": p.offset() })
}

fn witness_json(w: &MinorWitness) -> Value {
    Value::Array(
        w.to_string()
            .lines()
            .map(|l| Value::String(l.to_string()))
            .collect(),
    )
}

fn to_json(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn classes(p: &PathPresentation) -> CliResult<(Vec<usize>, Vec<usize>)> {
    let (mut loops, mut coloops) = (Vec::new(), Vec::new());
    for x in p.labels() {
        match p.classify(x)? {
            ElementClass::Loop => loops.push(x),
            ElementClass::Isthmus => coloops.push(x),
            ElementClass::Ordinary => {}
        }
    }
    Ok((loops, coloops))
}

fn dispatch(cli: &Cli, files: &mut Vec<(String, String)>) -> CliResult<String> {
    let json = cli.json;
    let mut out = String::new();
    match &cli.command {
        Command::Info(input) => {
            let p = load(input)?;
            let (loops, coloops) = classes(&p)?;
            let (sw, gaps, count) = (square_width(&p), gap_profile(&p), p.count_bases());
            if json {
                return Ok(to_json(json!({
                    "m": p.m(), "r": p.r(), "rank": p.r(), "square_width": sw,
                    "bases": count.to_string(), "loops": loops, "coloops": coloops,
                    "gaps": gaps, "presentation": pres_json(&p),
                })));
            }
            let _ = writeln!(
                out,
                "m={} r={} square-width={sw} bases={count}",
                p.m(),
                p.r()
            );
            let _ = writeln!(out, "rank={}", p.r());
            let _ = writeln!(out, "loops={}", join(&loops));
            let _ = writeln!(out, "coloops={}", join(&coloops));
            let _ = writeln!(out, "gaps={}", join(&gaps));
        }
        Command::Bases { input, cap } => {
            let p = load(input)?;
            let count = p.count_bases();
            let listed = p.enumerate_bases(*cap);
            if json {
                return Ok(to_json(
                    json!({ "count": count.to_string(), "bases": listed }),
                ));
            }
            let _ = writeln!(out, "count={count}");
            for b in &listed {
                let _ = writeln!(out, "{}", join(b));
            }
        }
        Command::IsMinor { small, large } => {
            let (s, l) = (parse_pres(small)?, parse_pres(large)?);
            let found = is_presentation_minor(&s, &l);
            if json {
                return Ok(to_json(
                    json!({ "minor": found.is_some(), "witness": found.as_ref().map(witness_json) }),
                ));
            }
            match found {
                Some(w) => out.push_str(&w.to_string()),
                None => out.push_str("none\n"),
            }
        }
        Command::Delete { input, x } | Command::Contract { input, x } => {
            let p = load(input)?;
            let q = if matches!(cli.command, Command::Delete { .. }) {
                p.delete(*x)?
            } else {
                p.contract(*x)?
            };
            return Ok(if json {
                to_json(pres_json(&q))
            } else {
                q.to_string()
            });
        }
        Command::Squares { input, at } => {
            let p = load(input)?;
            let list = squares(&p);
            if json {
                let triples: Vec<Value> = list
                    .iter()
                    .map(|s| json!({ "i": s.position, "k": s.size, "proper": s.proper }))
                    .collect();
                return Ok(to_json(
                    json!({ "square_width": square_width(&p), "squares": triples }),
                ));
            }
            let width = square_width(&p);
            let chosen = match at {
                Some(i) => Some(
                    *list
                        .iter()
                        .find(|s| s.position == *i)
                        .ok_or(Error::NoSquare { position: *i })?,
                ),
                None => list.iter().find(|s| s.size == width).copied(),
            };
            let marks = chosen.map_or_else(Vec::new, |s| square_corners(&p, s.position, s.size));
            out.push_str(&grid(&p, &marks));
            for s in &list {
                let tag = if s.proper { "proper" } else { "improper" };
                let _ = writeln!(out, "i={} k={} {tag}", s.position, s.size);
            }
        }
        Command::Pull {
            input,
            at,
            bottom,
            top,
        } => {
            let p = load(input)?;
            let (b, t) = pull_apart(&p, *at)?;
            if let (Some(bp), Some(tp)) = (bottom, top) {
                files.push((bp.clone(), b.to_string()));
                files.push((tp.clone(), t.to_string()));
            }
            if json {
                return Ok(to_json(
                    json!({ "bottom": pres_json(&b), "top": pres_json(&t) }),
                ));
            }
            if bottom.is_none() {
                let _ = write!(out, "# bottom\n{b}# top\n{t}");
            }
        }
        Command::Glue { bottom, top, k } => {
            let g = glue(&parse_pres(bottom)?, &parse_pres(top)?, *k)?;
            return Ok(if json {
                to_json(pres_json(&g))
            } else {
                g.to_string()
            });
        }
        Command::UniformMinor { input, k } => {
            let p = load(input)?;
            let w = extract_uniform_minor(&p, *k)?;
            let result = p.apply_witness(&w)?;
            if json {
                return Ok(to_json(
                    json!({ "witness": witness_json(&w), "result": pres_json(&result) }),
                ));
            }
            out.push_str(&w.to_string());
        }
        Command::Apply { input, witness } => {
            let p = load(input)?;
            let w: MinorWitness = read_text(witness)?.replace(';', "\n").parse()?;
            let q = p.apply_witness(&w)?;
            return Ok(if json {
                to_json(pres_json(&q))
            } else {
                q.to_string()
            });
        }
        Command::Gen { family, n } => {
            let m = match family.as_str() {
                "F" => family_f(*n)?,
                "G" => family_g(*n)?,
                _ => family_h(*n)?,
            };
            let _ = writeln!(out, "{}", m.to_json());
        }
        Command::BranchWidth { matroid } => {
            let m = ExplicitMatroid::from_json(&read_text(matroid)?)?;
            let (width, tree) = branch_width(&m)?;
            if json {
                return Ok(to_json(json!({
                    "width": width,
                    "edges": tree.edges(),
                    "leaves": tree.leaf_label,
                })));
            }
            let _ = writeln!(out, "{width}");
        }
        Command::Antichain { inputs } => {
            let items = inputs
                .iter()
                .map(|a| parse_pres(a))
                .collect::<CliResult<Vec<_>>>()?;
            let poset = build_poset(items)?;
            let anti: Vec<usize> = poset.max_antichain().into_iter().map(|i| i + 1).collect();
            let chain: Vec<usize> = poset.longest_chain().into_iter().map(|i| i + 1).collect();
            if json {
                return Ok(to_json(json!({
                    "relation": poset.relation, "max_antichain": anti, "longest_chain": chain,
                })));
            }
            for (i, p) in poset.items.iter().enumerate() {
                let row: String = poset.relation[i]
                    .iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect();
                let _ = writeln!(out, "{}\t{}/{}\t{row}", i + 1, p.lower(), p.upper());
            }
            let _ = writeln!(out, "max-antichain\t{}\t{}", anti.len(), join(&anti));
            let _ = writeln!(out, "longest-chain\t{}\t{}", chain.len(), join(&chain));
        }
        Command::Evidence {
            samples,
            sample_size,
            max_ground,
            max_square_width,
            seed,
        } => {
            let config = EvidenceConfig {
                samples: *samples,
                sample_size: *sample_size,
                max_ground: *max_ground,
                max_square_width: *max_square_width,
            };
            let rows = evidence_table(&mut StdRng::seed_from_u64(*seed), config)?;
            if json {
                return Ok(to_json(
                    serde_json::to_value(&rows).expect("rows serialize"),
                ));
            }
            out.push_str(&evidence_tsv(&rows));
        }
        Command::Render(input) => {
            let p = load(input)?;
            out.push_str(&grid(&p, &[]));
            if json {
                return Ok(to_json(
                    json!({ "grid": out, "presentation": pres_json(&p) }),
                ));
            }
        }
        Command::Dual(input) => {
            let d = load(input)?.dual();
            return Ok(if json {
                to_json(pres_json(&d))
            } else {
                d.to_string()
            });
        }
        Command::Sum { first, second } => {
            let s = parse_pres(first)?.direct_sum(&parse_pres(second)?);
            return Ok(if json {
                to_json(pres_json(&s))
            } else {
                s.to_string()
            });
        }
    }
    Ok(out)
}
