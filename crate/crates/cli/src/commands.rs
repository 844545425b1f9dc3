use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use tb_core::density::{required_radius, search, search_with_fallback};
use tb_core::hamilton::{
    bipartite_balance, cut_indices, find_hamiltonian_cycle, hexagon_cut_set, verify_cut,
    HAMILTON_SEARCH_LIMIT,
};
use tb_core::share::{share_report, ShareError};
use tb_core::solve::{brute_force, verify_result, BRUTE_FORCE_LIMIT};
use tb_core::{
    closed_form_counts, format_ratio, solve, FiniteGraph, ParamKind, Rational, SolveError,
};

use crate::cert::{verify_certificate, Certificate};
use crate::format::{write_graph, GraphDocument, GraphFormat};
use crate::render::render_svg;
use crate::source::{parse_vertex_set, GraphSource};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "tb",
    version,
    about = "Tumbling-block graphs: generation, exact domination parameters, periodic densities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a graph as an edge list, DIMACS or JSON document.
    Gen {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value = "edges")]
        format: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Solve one parameter exactly.
    Solve {
        #[command(flatten)]
        source: GraphSource,
        /// gamma, gamma-op, f, f-op, ld, ic or old.
        #[arg(long)]
        param: String,
        /// Use exhaustive enumeration instead of branch and bound.
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Search periodic patterns on lattice quotients.
    Density {
        #[arg(long)]
        param: String,
        #[arg(long, default_value_t = 12)]
        max_det: i64,
        /// Keep extending the search one determinant at a time up to this
        /// value until the upper end of the known range is reached.
        #[arg(long)]
        fallback_det: Option<i64>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Shares (or open shares) of a dominating set.
    Shares {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated addresses like `w(1,1)` or vertex ids.
        #[arg(long)]
        set: String,
        #[arg(long)]
        open: bool,
    },
    /// Re-check a certificate.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Bipartite balance, exhaustive cycle search and vertex-cut certificates.
    Hamilton {
        #[command(flatten)]
        source: GraphSource,
        /// Block `i,j` around which to remove the nineteen-vertex cut.
        #[arg(long)]
        anchor: Option<String>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Draw a labelled graph as SVG, optionally highlighting a set.
    Render {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        set: Option<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io("output".into(), e)
}

fn parse_param(s: &str) -> Result<ParamKind, CliError> {
    s.parse()
        .map_err(|e: tb_core::solve::ParseParamError| CliError::Usage(e.to_string()))
}

fn names(g: &FiniteGraph, set: &[usize]) -> String {
    set.iter()
        .map(|&v| g.name(v))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Known range of each percentage parameter on the infinite graph, as
/// `(low, low_inclusive, high, high_inclusive)`.
pub fn known_range(kind: ParamKind) -> (Rational, bool, Rational, bool) {
    let r = Rational::new;
    match kind {
        ParamKind::Gamma => (r(1, 7), false, r(1, 5), true),
        ParamKind::GammaOp => (r(2, 9), true, r(2, 9), true),
        ParamKind::FMax => (r(11, 12), true, r(1, 1), false),
        ParamKind::FOpMax => (r(1, 1), true, r(1, 1), true),
        ParamKind::Ld => (r(1, 4), false, r(8, 27), true),
        ParamKind::Ic => (r(3, 11), true, r(1, 3), true),
        ParamKind::Old => (r(7, 18), true, r(7, 18), true),
    }
}

fn describe_range(kind: ParamKind) -> String {
    let (lo, lo_in, hi, hi_in) = known_range(kind);
    if lo == hi {
        format!("= {}", format_ratio(&lo))
    } else {
        format!(
            "{}{}, {}{}",
            if lo_in { '[' } else { '(' },
            format_ratio(&lo),
            format_ratio(&hi),
            if hi_in { ']' } else { ')' }
        )
    }
}

/// Executes one command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen {
            source,
            format,
            output,
        } => {
            let format: GraphFormat = format
                .parse()
                .map_err(|e: crate::format::FormatError| CliError::Usage(e.to_string()))?;
            let loaded = source.load()?;
            let g = &loaded.graph;
            let text = write_graph(g, loaded.descriptor.as_deref(), format);
            let mut summary = format!("n = {}, m = {}", g.n(), g.m());
            if let Some(spec) = source.family_spec() {
                let (n, m) =
                    closed_form_counts(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
                summary.push_str(&format!("; closed form for {spec}: n = {n}, m = {m}"));
            }
            match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    writeln!(out, "{summary}").map_err(io)?;
                }
                None => {
                    out.write_all(text.as_bytes()).map_err(io)?;
                    eprintln!("{summary}");
                }
            }
        }
        Command::Solve {
            source,
            param,
            brute,
            cert,
        } => {
            let kind = parse_param(&param)?;
            let loaded = source.load()?;
            let g = &loaded.graph;
            let result = if brute {
                if g.n() > BRUTE_FORCE_LIMIT {
                    return Err(CliError::Usage(format!(
                        "--brute accepts at most {BRUTE_FORCE_LIMIT} vertices"
                    )));
                }
                brute_force(g, kind)
            } else {
                solve(g, kind)
            };
            let result = result.map_err(|e| match e {
                SolveError::IsolatedVertices(_)
                | SolveError::ClosedTwins(_)
                | SolveError::OpenTwins(_) => CliError::Infeasible(e.to_string()),
                other => CliError::Usage(other.to_string()),
            })?;
            let verified = verify_result(g, &result).expect("solver witnesses are in range");
            writeln!(out, "{} = {}", kind.name(), result.value).map_err(io)?;
            writeln!(out, "witness: {{{}}}", names(g, &result.witness)).map_err(io)?;
            writeln!(out, "verified: {}", if verified { "yes" } else { "NO" }).map_err(io)?;
            writeln!(
                out,
                "nodes: {}, time: {:.3?}",
                result.stats.nodes, result.stats.elapsed
            )
            .map_err(io)?;
            if let Some(path) = cert {
                let doc = GraphDocument::from_graph(g, loaded.descriptor.as_deref());
                write_file(&path, &Certificate::witness(&result, doc).to_json())?;
            }
        }
        Command::Density {
            param,
            max_det,
            fallback_det,
            cert,
        } => {
            let kind = parse_param(&param)?;
            if max_det < 1 {
                return Err(CliError::Usage("--max-det must be at least 1".into()));
            }
            let not_found = |e: tb_core::DensityError| CliError::NotFound(e.to_string());
            let (best, examined) = match fallback_det {
                Some(limit) => {
                    let (_, _, hi, _) = known_range(kind);
                    let target = if kind.is_minimization() {
                        hi
                    } else {
                        known_range(kind).0
                    };
                    let o =
                        search_with_fallback(kind, max_det, limit, target).map_err(not_found)?;
                    (o.best, o.max_det_examined)
                }
                None => (search(kind, max_det).map_err(not_found)?, max_det),
            };
            let q = best.quotient;
            writeln!(out, "{}", format_ratio(&best.density)).map_err(io)?;
            writeln!(
                out,
                "{}: best density {} on quotient {q} (det {}, {} vertices), searched det <= {examined}, radius {}",
                kind.name(),
                format_ratio(&best.density),
                q.det(),
                q.vertex_count(),
                required_radius(kind)
            )
            .map_err(io)?;
            let pattern: Vec<String> = best.witness.iter().map(ToString::to_string).collect();
            writeln!(out, "pattern: {{{}}}", pattern.join(", ")).map_err(io)?;
            writeln!(out, "known range: {}", describe_range(kind)).map_err(io)?;
            if let Some(path) = cert {
                write_file(&path, &Certificate::density(&best).to_json())?;
            }
        }
        Command::Shares { source, set, open } => {
            let loaded = source.load()?;
            let g = &loaded.graph;
            let d = parse_vertex_set(g, &set)?;
            let report = share_report(g, &d, open).map_err(|e| match e {
                ShareError::NotDominating(v) => {
                    CliError::Infeasible(format!("vertex {} is undominated", g.name(v)))
                }
                ShareError::NotOpenDominating(v) => CliError::Infeasible(format!(
                    "vertex {} has no neighbour in the set",
                    g.name(v)
                )),
                other => CliError::Usage(other.to_string()),
            })?;
            let values: Vec<String> = d.iter().map(|v| share_display(&report.shares[v])).collect();
            writeln!(
                out,
                "{}; total {}",
                values.join(", "),
                format_ratio(&report.total)
            )
            .map_err(io)?;
        }
        Command::Verify { cert } => {
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| CliError::Io(cert.display().to_string(), e))?;
            let c = Certificate::from_json(&text)?;
            let summary = verify_certificate(&c)?;
            writeln!(out, "OK").map_err(io)?;
            writeln!(out, "{summary}").map_err(io)?;
        }
        Command::Hamilton {
            source,
            anchor,
            cert,
        } => {
            let loaded = source.load()?;
            let g = &loaded.graph;
            match bipartite_balance(g) {
                Ok((lo, hi, balanced)) => writeln!(
                    out,
                    "bipartite parts: {lo} vs {hi} ({})",
                    if balanced {
                        "balanced"
                    } else {
                        "unbalanced: no hamiltonian cycle"
                    }
                ),
                Err(_) => writeln!(out, "not bipartite"),
            }
            .map_err(io)?;
            if g.n() <= HAMILTON_SEARCH_LIMIT {
                let cycle = find_hamiltonian_cycle(g).expect("size checked");
                match cycle {
                    Some(c) => writeln!(out, "hamiltonian cycle: {}", names(g, &c)),
                    None => writeln!(out, "hamiltonian cycle: none (exhaustive search)"),
                }
                .map_err(io)?;
            } else {
                writeln!(
                    out,
                    "hamiltonian cycle: search skipped (n > {HAMILTON_SEARCH_LIMIT})"
                )
                .map_err(io)?;
            }
            if let Some(anchor) = anchor {
                let (i, j) = parse_pair(&anchor)?;
                let cut = hexagon_cut_set(i, j);
                let ids = cut_indices(g, &cut).map_err(|e| CliError::Usage(e.to_string()))?;
                let c = verify_cut(g, &ids).expect("indices come from the graph");
                writeln!(
                    out,
                    "cut at ({i},{j}): removed {}, components {}, isolated {}, certifies {}",
                    c.removed.len(),
                    c.components_after,
                    c.isolated_after,
                    if c.certifies { "yes" } else { "no" }
                )
                .map_err(io)?;
                if let Some(path) = cert {
                    let spec = source
                        .family_spec()
                        .ok_or_else(|| CliError::Usage("cut certificates need --family".into()))?;
                    let doc = Certificate::Cut {
                        family: spec.kind.name().to_string(),
                        rows: spec.r,
                        cols: spec.s,
                        anchor: [i, j],
                        removed: cut.iter().map(ToString::to_string).collect(),
                        components_after: c.components_after,
                        isolated_after: c.isolated_after,
                        certifies: c.certifies,
                    };
                    write_file(&path, &doc.to_json())?;
                }
            }
        }
        Command::Render {
            source,
            set,
            output,
        } => {
            let loaded = source.load()?;
            let g = &loaded.graph;
            let chosen = match &set {
                Some(s) => parse_vertex_set(g, s)?,
                None => Vec::new(),
            };
            let svg = render_svg(g, &chosen, loaded.descriptor.as_deref())?;
            match output {
                Some(path) => {
                    write_file(&path, &svg)?;
                    writeln!(out, "wrote {} vertices to {}", g.n(), path.display()).map_err(io)?;
                }
                None => out.write_all(svg.as_bytes()).map_err(io)?,
            }
        }
    }
    Ok(())
}

/// Integers print bare, other values as `p/q`.
fn share_display(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_ratio(r)
    }
}

fn parse_pair(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("expected `i,j`, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}
