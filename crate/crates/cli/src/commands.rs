//! The five subcommands. Each returns an [`Outcome`] instead of printing, so
//! the binary stays a thin shell and tests can run commands in-process.

use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use romdom_core::closed_form::{self, Subcase};
use romdom_core::families::{self, FamilySpec};
use romdom_core::solve::{self, BruteOptions, Method, SolveResult};
use romdom_core::{Error, Graph, Labeling};
use serde::Serialize;

use crate::error::CliError;
use crate::formats;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const EXCLUDED_NOTE: &str = "double comet with p = 2 is outside the closed form's domain";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub prune: bool,
    /// Brute force is skipped above this many vertices in `gamma --method all`
    /// and in sweeps.
    pub brute_cutoff: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            prune: true,
            brute_cutoff: 14,
        }
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edgelist,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GammaMethod {
    Formula,
    Construction,
    TreeDp,
    Brute,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelMethod {
    Formula,
    Construction,
    TreeDp,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelFormat {
    Pairs,
    Json,
    DotColored,
}

/// A family spec such as `comet:6,3`, or a graph read from an edge-list file.
#[derive(Debug, Clone)]
pub enum Input {
    Spec(FamilySpec),
    Graph(Graph),
}

impl Input {
    /// Parses `arg` as a family spec first, then falls back to a file path.
    pub fn load(arg: &str) -> Result<Self, CliError> {
        if let Ok(spec) = arg.parse::<FamilySpec>() {
            spec.validate()?;
            return Ok(Input::Spec(spec));
        }
        if !Path::new(arg).exists() && arg.contains(':') {
            return Err(Error::BadSpec(arg.to_string()).into());
        }
        Ok(Input::Graph(formats::parse_edge_list(&read(arg)?)?))
    }

    pub fn graph(&self) -> Result<Graph, CliError> {
        match self {
            Input::Spec(spec) => Ok(families::generate(spec)?),
            Input::Graph(g) => Ok(g.clone()),
        }
    }

    fn spec(&self, what: &str) -> Result<&FamilySpec, CliError> {
        match self {
            Input::Spec(spec) => Ok(spec),
            Input::Graph(_) => Err(CliError::Usage(format!(
                "{what} needs a family spec (comet:t,r, dcomet:n,a,b or comb:n), not a file"
            ))),
        }
    }
}

pub fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn brute(g: &Graph, settings: &Settings) -> Result<SolveResult, CliError> {
    let opts = BruteOptions {
        node_limit: None,
        prune: settings.prune,
    };
    Ok(solve::solve_brute(g, &opts)?)
}

pub fn gen(g: &Graph, format: GraphFormat) -> Outcome {
    let stdout = match format {
        GraphFormat::Edgelist => formats::write_edge_list(g),
        GraphFormat::Dot => formats::write_dot(g),
        GraphFormat::Json => formats::write_graph_json(g),
    };
    Outcome {
        stdout,
        ..Outcome::default()
    }
}

pub fn gamma(input: &Input, method: GammaMethod, settings: &Settings) -> Result<Outcome, CliError> {
    let g = input.graph()?;
    let mut out = Outcome::default();
    let report = |out: &mut Outcome, r: &SolveResult| match r.method {
        Method::BruteForce => writeln!(out.stdout, "brute {} (nodes {})", r.gamma, r.nodes),
        m => writeln!(out.stdout, "{m} {}", r.gamma),
    };

    match method {
        GammaMethod::Formula | GammaMethod::Construction => {
            let spec = input.spec("this method")?;
            let value = if method == GammaMethod::Formula {
                closed_form::gamma(spec)
            } else {
                closed_form::construct(spec, None).map(|f| f.weight())
            };
            let name = if method == GammaMethod::Formula {
                "formula"
            } else {
                "construction"
            };
            match value {
                Ok(v) => writeln!(out.stdout, "{name} {v}").unwrap(),
                Err(Error::Excluded) => {
                    writeln!(
                        out.stdout,
                        "{name} excluded: {EXCLUDED_NOTE}; falling back to tree-dp"
                    )
                    .unwrap();
                    report(&mut out, &solve::solve_tree_dp(&g)?).unwrap();
                }
                Err(e) => return Err(e.into()),
            }
        }
        GammaMethod::TreeDp => report(&mut out, &solve::solve_tree_dp(&g)?).unwrap(),
        GammaMethod::Brute => report(&mut out, &brute(&g, settings)?).unwrap(),
        GammaMethod::All => {
            let mut values = Vec::new();
            if let Input::Spec(spec) = input {
                match closed_form::gamma(spec) {
                    Ok(v) => {
                        writeln!(out.stdout, "formula {v}").unwrap();
                        values.push(v);
                    }
                    Err(Error::Excluded) => {
                        writeln!(out.stdout, "formula excluded: {EXCLUDED_NOTE}").unwrap()
                    }
                    Err(e) => return Err(e.into()),
                }
                match closed_form::construct(spec, None) {
                    Ok(f) => {
                        let w = f.weight();
                        if g.is_valid_rdf(&f)? {
                            writeln!(out.stdout, "construction {w}").unwrap();
                            values.push(w);
                        } else {
                            writeln!(out.stdout, "construction {w} INVALID").unwrap();
                            out.code = EXIT_FAIL;
                        }
                    }
                    Err(Error::Excluded) => writeln!(out.stdout, "construction excluded").unwrap(),
                    Err(e) => return Err(e.into()),
                }
            }
            let tree = g.is_tree() || g.is_empty();
            if tree {
                let r = solve::solve_tree_dp(&g)?;
                report(&mut out, &r).unwrap();
                values.push(r.gamma);
            } else {
                writeln!(out.stdout, "tree-dp n/a (not a tree)").unwrap();
            }
            if g.n() <= settings.brute_cutoff || !tree {
                let r = brute(&g, settings)?;
                report(&mut out, &r).unwrap();
                values.push(r.gamma);
            } else {
                writeln!(
                    out.stdout,
                    "brute skipped ({} vertices > cutoff {})",
                    g.n(),
                    settings.brute_cutoff
                )
                .unwrap();
            }
            if values.windows(2).all(|w| w[0] == w[1]) && out.code == EXIT_OK {
                out.stdout.push_str("agree\n");
            } else {
                out.stdout.push_str("disagree\n");
                out.code = EXIT_FAIL;
            }
        }
    }
    Ok(out)
}

pub fn label(
    input: &Input,
    method: LabelMethod,
    subcase: Option<Subcase>,
    format: LabelFormat,
    settings: &Settings,
) -> Result<Outcome, CliError> {
    let g = input.graph()?;
    let mut out = Outcome::default();
    let f: Labeling = match method {
        LabelMethod::Formula => {
            return Err(CliError::Usage(
                "the formula gives a value, not a labeling; use --method construction".into(),
            ))
        }
        LabelMethod::Construction => {
            let spec = input.spec("construction")?;
            match closed_form::construct(spec, subcase) {
                Ok(f) => f,
                Err(Error::Excluded) => {
                    writeln!(
                        out.stderr,
                        "construction excluded: {EXCLUDED_NOTE}; using tree-dp"
                    )
                    .unwrap();
                    solve::solve_tree_dp(&g)?.labeling
                }
                Err(e) => return Err(e.into()),
            }
        }
        LabelMethod::TreeDp => solve::solve_tree_dp(&g)?.labeling,
        LabelMethod::Brute => brute(&g, settings)?.labeling,
    };

    let undefended = g.undefended(&f)?;
    if !undefended.is_empty() {
        writeln!(
            out.stderr,
            "internal error: labeling is not a Roman dominating function (undefended: {undefended:?})"
        )
        .unwrap();
        out.code = EXIT_FAIL;
        return Ok(out);
    }
    out.stdout = match format {
        LabelFormat::Pairs => formats::write_pairs(&f),
        LabelFormat::Json => formats::write_labeling_json(&f),
        LabelFormat::DotColored => formats::write_dot_colored(&g, &f),
    };
    Ok(out)
}

pub fn verify(g: &Graph, f: &Labeling) -> Result<Outcome, CliError> {
    let undefended = g.undefended(f)?;
    let mut out = Outcome::default();
    if undefended.is_empty() {
        writeln!(out.stdout, "valid weight {}", f.weight()).unwrap();
    } else {
        let list: Vec<String> = undefended.iter().map(|v| v.to_string()).collect();
        writeln!(
            out.stdout,
            "invalid weight {} undefended {}",
            f.weight(),
            list.join(",")
        )
        .unwrap();
        out.code = EXIT_FAIL;
    }
    Ok(out)
}

/// One line of a sweep table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: String,
    /// Compact spec with `;` between parameters so the field needs no quoting.
    pub params: String,
    pub gamma_formula: String,
    pub gamma_dp: u64,
    pub gamma_brute: String,
    pub agree: bool,
}

impl SweepRow {
    pub fn compute(spec: &FamilySpec, settings: &Settings) -> Result<Self, CliError> {
        let g = families::generate(spec)?;
        let formula = match closed_form::gamma(spec) {
            Ok(v) => Some(v),
            Err(Error::Excluded) => None,
            Err(e) => return Err(e.into()),
        };
        let dp = solve::solve_tree_dp(&g)?.gamma;
        let brute = if g.n() <= settings.brute_cutoff {
            Some(brute(&g, settings)?.gamma)
        } else {
            None
        };
        let agree = formula.is_none_or(|v| v == dp) && brute.is_none_or(|v| v == dp);
        Ok(Self {
            family: spec.tag().to_string(),
            params: spec.to_compact_with(";"),
            gamma_formula: formula.map_or("excluded".into(), |v| v.to_string()),
            gamma_dp: dp,
            gamma_brute: brute.map_or("skipped".into(), |v| v.to_string()),
            agree,
        })
    }
}

/// Inclusive range `lo..hi` or a single value.
fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad range `{text}`; expected `lo..hi` or a number"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        None => {
            let v = num(text)?;
            Ok((v, v))
        }
    }
}

/// Expands `family` plus `key=range` arguments into specs in parameter order.
///
/// Keys: comet `t` (and `r`, default 1); dcomet `p` (and `a`, `b`, default 1,
/// with `n = p + a + b`); comb `n`.
pub fn sweep_specs(family: &str, ranges: &[String]) -> Result<Vec<FamilySpec>, CliError> {
    let keys: &[(&str, Option<usize>)] = match family {
        "comet" => &[("t", None), ("r", Some(1))],
        "dcomet" => &[("p", None), ("a", Some(1)), ("b", Some(1))],
        "comb" => &[("n", None)],
        _ => return Err(CliError::Usage(format!("unknown family `{family}`"))),
    };
    let mut bounds: Vec<Option<(usize, usize)>> =
        keys.iter().map(|(_, d)| d.map(|v| (v, v))).collect();
    for arg in ranges {
        let (key, range) = arg
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected key=range, found `{arg}`")))?;
        let slot = keys
            .iter()
            .position(|(k, _)| *k == key.trim())
            .ok_or_else(|| CliError::Usage(format!("`{key}` is not a parameter of {family}")))?;
        bounds[slot] = Some(parse_range(range)?);
    }
    let bounds: Vec<(usize, usize)> = bounds
        .into_iter()
        .zip(keys)
        .map(|(b, (k, _))| b.ok_or_else(|| CliError::Usage(format!("missing range for `{k}`"))))
        .collect::<Result<_, _>>()?;

    let mut specs = Vec::new();
    let mut current: Vec<usize> = bounds.iter().map(|b| b.0).collect();
    'outer: loop {
        let spec = match (family, current.as_slice()) {
            ("comet", &[t, r]) => FamilySpec::Comet { t, r },
            ("dcomet", &[p, a, b]) => FamilySpec::DoubleComet { n: p + a + b, a, b },
            (_, &[n]) => FamilySpec::Comb { n },
            _ => unreachable!(),
        };
        spec.validate()?;
        specs.push(spec);
        // odometer, last key fastest
        for i in (0..current.len()).rev() {
            if current[i] < bounds[i].1 {
                current[i] += 1;
                continue 'outer;
            }
            current[i] = bounds[i].0;
        }
        break;
    }
    Ok(specs)
}

pub fn sweep(specs: &[FamilySpec], settings: &Settings) -> Result<Outcome, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut disagreements = 0;
    for spec in specs {
        let row = SweepRow::compute(spec, settings)?;
        if !row.agree {
            disagreements += 1;
        }
        writer.serialize(&row).expect("in-memory CSV write");
    }
    let mut stdout = String::from_utf8(writer.into_inner().expect("in-memory CSV flush"))
        .expect("CSV of ASCII fields");
    writeln!(
        stdout,
        "# rows {} disagreements {disagreements}",
        specs.len()
    )
    .unwrap();
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if disagreements == 0 {
            EXIT_OK
        } else {
            EXIT_FAIL
        },
    })
}
