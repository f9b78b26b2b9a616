//! Command-line front end. Every subcommand reads one input, writes one
//! JSON report to standard output (or `--json <path>`), and prints a short
//! human summary on standard error. Exit status: 0 on success, 1 on invalid
//! input or parameters, 2 when a bounded search ran out of budget.

mod format;
mod report;

use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use collapse_core::collapse::{
    self, Collapsibility, Decision, GreedyOutcome, MoveOrder, SearchConfig,
};
use collapse_core::hypergraph;
use collapse_core::mes::{self, FacetOrdering};
use collapse_core::setpair::{self, Lemma, LemmaParams, SearchOutcome};
use collapse_core::SimplicialComplex;

use report::{
    CertificateJson, CollapseReport, CollapsibilityReport, ComplexJson, CovReport, DPrimeReport,
    ExtremalReportJson, IntReport, KGraphReport, LemmaReport, LemmaUndecidedReport, MesReport,
    UndecidedReport,
};

const DEFAULT_BUDGET: u64 = 10_000_000;

/// Inputs stay at desk scale; everything downstream packs vertex sets into
/// 128-bit masks.
const MAX_INPUT_VERTICES: usize = 128;

#[derive(Parser)]
#[command(
    name = "collapse-lab",
    version,
    about = "Hypergraph complexes, collapsibility bounds, and collapse certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderingMode {
    /// Facets sorted lexicographically.
    Lex,
    /// Facet lines in file order.
    Given,
    /// Try all orderings (at most 7 facets) and keep a minimizer.
    Search,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LemmaArg {
    /// Disjoint pairs (A_i ∩ B_i = ∅), bound C(r+p, r).
    FranklKalai,
    /// Intersection threshold (|A_i ∩ B_i| ≤ t < |A_i ∩ B_j|), bound C(r+p-2t, r-t).
    Furedi,
    /// Partition transversals, bound 2^r.
    Lnp,
}

impl LemmaArg {
    fn name(self) -> &'static str {
        match self {
            LemmaArg::FranklKalai => "frankl-kalai",
            LemmaArg::Furedi => "furedi",
            LemmaArg::Lnp => "lnp",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Covering complex Cov(H, p, t) of a hypergraph file.
    BuildCov {
        input: PathBuf,
        /// Cover size budget p.
        #[arg(short)]
        p: u32,
        /// Per-edge cover threshold t.
        #[arg(short, default_value_t = 1)]
        t: u32,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also write the complex in the text format, ready for the
        /// complex-reading subcommands.
        #[arg(long)]
        text: Option<PathBuf>,
    },
    /// Intersection complex Int(H, t) of a hypergraph file.
    BuildInt {
        input: PathBuf,
        /// Pairwise intersection threshold t.
        #[arg(short, default_value_t = 1)]
        t: u32,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        text: Option<PathBuf>,
    },
    /// Independence complex of a graph file.
    BuildInd {
        input: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        text: Option<PathBuf>,
    },
    /// Exclusion-sequence collapsibility bound of a complex file.
    MesBound {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderingMode::Lex)]
        ordering: OrderingMode,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Vertex/facet chain bound d'(X) of a complex file.
    DPrime {
        input: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Graph invariant k(G), the chain bound of the independence complex.
    KGraph {
        input: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide d-collapsibility of a complex file at a fixed d.
    Collapse {
        input: PathBuf,
        /// Free faces may have at most this many vertices.
        #[arg(short)]
        d: u32,
        /// Run the deterministic greedy strategy instead of the exact search.
        #[arg(long)]
        greedy: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Smallest d for which the complex is d-collapsible, with certificate.
    Collapsibility {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Exhaustively confirm a set-pair lemma bound on a small ground set.
    VerifyLemma {
        lemma: LemmaArg,
        #[arg(short)]
        r: Option<u32>,
        #[arg(short)]
        p: Option<u32>,
        #[arg(short)]
        t: Option<u32>,
        /// Ground set size (default r+p+1).
        #[arg(short, long)]
        ground: Option<u32>,
        /// Part sizes for lnp, e.g. --parts 2,2.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<u32>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check that the extremal families hit the collapsibility bounds.
    VerifyExtremal {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        p: u32,
        #[arg(short, default_value_t = 0)]
        t: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Format(#[from] format::FormatError),
    #[error("{0}")]
    Core(#[from] collapse_core::Error),
    #[error("{path}: {err}")]
    Io { path: String, err: io::Error },
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|err| CliError::Io {
                path: "stdin".into(),
                err,
            })?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        err,
    })
}

fn emit<T: serde::Serialize>(value: &T, json: &Option<PathBuf>) -> Result<(), CliError> {
    report::emit(value, json.as_deref()).map_err(|err| CliError::Io {
        path: json
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "stdout".into()),
        err,
    })
}

fn check_scale(what: &str, n: usize) -> Result<(), CliError> {
    if n > MAX_INPUT_VERTICES {
        return Err(usage(format!(
            "{what} has {n} elements; at most {MAX_INPUT_VERTICES} are supported"
        )));
    }
    Ok(())
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let x = format::parse_complex(&read_input(path)?)?;
    check_scale("complex vertex set", x.vertices().len())?;
    Ok(x)
}

fn load_graph(path: &Path) -> Result<hypergraph::Graph, CliError> {
    let g = format::parse_graph(&read_input(path)?)?;
    check_scale("graph vertex set", g.vertex_count())?;
    Ok(g)
}

fn load_hypergraph(path: &Path) -> Result<hypergraph::Hypergraph, CliError> {
    let h = format::parse_hypergraph(&read_input(path)?)?;
    // Complexes built from H live on its edge set.
    check_scale("hypergraph edge list", h.edge_count())?;
    Ok(h)
}

fn write_text(x: &SimplicialComplex, text: &Option<PathBuf>) -> Result<(), CliError> {
    if let Some(path) = text {
        std::fs::write(path, format::write_complex(x)).map_err(|err| CliError::Io {
            path: path.display().to_string(),
            err,
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    match cmd {
        Command::BuildCov {
            input,
            p,
            t,
            json,
            text,
        } => {
            let h = load_hypergraph(&input)?;
            let (x, witnesses) = hypergraph::cov_complex_with_witnesses(&h, p, t)?;
            emit(&CovReport::of(&x, &witnesses), &json)?;
            write_text(&x, &text)?;
            eprintln!(
                "covering complex (p={p}, t={t}): {} vertices, {} maximal faces",
                x.vertices().len(),
                x.maximal_faces().len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::BuildInt {
            input,
            t,
            json,
            text,
        } => {
            let h = load_hypergraph(&input)?;
            let (x, dropped) = hypergraph::int_complex_with_dropped(&h, t)?;
            emit(&IntReport::of(&x, &dropped), &json)?;
            write_text(&x, &text)?;
            eprintln!(
                "intersection complex (t={t}): {} vertices, {} maximal faces, {} edges dropped",
                x.vertices().len(),
                x.maximal_faces().len(),
                dropped.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::BuildInd { input, json, text } => {
            let g = load_graph(&input)?;
            let x = hypergraph::independence_complex(&g);
            emit(&ComplexJson::of(&x), &json)?;
            write_text(&x, &text)?;
            eprintln!(
                "independence complex: {} vertices, {} maximal faces",
                x.vertices().len(),
                x.maximal_faces().len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::MesBound {
            input,
            ordering,
            json,
        } => {
            let text = read_input(&input)?;
            let (x, given) = format::parse_complex_with_order(&text)?;
            check_scale("complex vertex set", x.vertices().len())?;
            let (d_mes, ord, mode) = match ordering {
                OrderingMode::Lex => {
                    let ord = FacetOrdering::lex(&x);
                    (mes::d_of_ordering(&x, &ord)?, ord, "lex")
                }
                OrderingMode::Given => {
                    let ord = FacetOrdering::new(&x, given)?;
                    (mes::d_of_ordering(&x, &ord)?, ord, "given")
                }
                OrderingMode::Search => {
                    let (d, ord) = mes::min_ordering_search(&x)?;
                    (d, ord, "search")
                }
            };
            let ordering_lists = ord
                .faces()
                .iter()
                .map(|f| f.vertices().to_vec())
                .collect();
            emit(
                &MesReport {
                    d_mes,
                    mode: mode.into(),
                    ordering: ordering_lists,
                },
                &json,
            )?;
            eprintln!("d_mes = {d_mes} ({mode} ordering, {} entries)", ord.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::DPrime { input, json } => {
            let x = load_complex(&input)?;
            let (d, witness) = mes::d_prime(&x)?;
            emit(&DPrimeReport::of(d, &witness), &json)?;
            eprintln!("d_prime = {d}");
            Ok(ExitCode::SUCCESS)
        }
        Command::KGraph { input, json } => {
            let g = load_graph(&input)?;
            let (k, witness) = mes::k_graph(&g);
            emit(&KGraphReport::of(k, &witness), &json)?;
            eprintln!("k = {k}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Collapse {
            input,
            d,
            greedy,
            budget,
            json,
        } => {
            let x = load_complex(&input)?;
            if greedy {
                return match collapse::greedy_collapse(&x, d) {
                    GreedyOutcome::Collapsed(cert) => {
                        let steps = cert.steps.len();
                        emit(
                            &CollapseReport {
                                d,
                                decision: "collapsed".into(),
                                certificate: Some(CertificateJson::of(&cert)),
                                residual: None,
                            },
                            &json,
                        )?;
                        eprintln!("greedy collapse reached the void complex in {steps} steps");
                        Ok(ExitCode::SUCCESS)
                    }
                    GreedyOutcome::Stuck(residual) => {
                        eprintln!(
                            "greedy collapse stuck with {} maximal faces left",
                            residual.maximal_faces().len()
                        );
                        emit(
                            &CollapseReport {
                                d,
                                decision: "stuck".into(),
                                certificate: None,
                                residual: Some(ComplexJson::of(&residual)),
                            },
                            &json,
                        )?;
                        Ok(ExitCode::SUCCESS)
                    }
                };
            }
            let cfg = SearchConfig {
                budget,
                order: MoveOrder::LargestInterval,
            };
            match collapse::is_d_collapsible(&x, d, &cfg) {
                Decision::Collapsible(cert) => {
                    let steps = cert.steps.len();
                    emit(
                        &CollapseReport {
                            d,
                            decision: "collapsible".into(),
                            certificate: Some(CertificateJson::of(&cert)),
                            residual: None,
                        },
                        &json,
                    )?;
                    eprintln!("{d}-collapsible ({steps} steps)");
                    Ok(ExitCode::SUCCESS)
                }
                Decision::NotCollapsible => {
                    emit(
                        &CollapseReport {
                            d,
                            decision: "not-collapsible".into(),
                            certificate: None,
                            residual: None,
                        },
                        &json,
                    )?;
                    eprintln!("not {d}-collapsible");
                    Ok(ExitCode::SUCCESS)
                }
                Decision::Undecided => {
                    emit(
                        &UndecidedReport {
                            undecided_at_d: d,
                            budget,
                        },
                        &json,
                    )?;
                    eprintln!("undecided at d = {d} (budget {budget})");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Collapsibility {
            input,
            budget,
            json,
        } => {
            let x = load_complex(&input)?;
            let cfg = SearchConfig {
                budget,
                order: MoveOrder::LargestInterval,
            };
            match collapse::collapsibility(&x, &cfg) {
                Collapsibility::Exact { d, certificate } => {
                    let steps = certificate.steps.len();
                    emit(
                        &CollapsibilityReport {
                            collapsibility: d,
                            certificate: CertificateJson::of(&certificate),
                        },
                        &json,
                    )?;
                    eprintln!("collapsibility = {d} ({steps} steps)");
                    Ok(ExitCode::SUCCESS)
                }
                Collapsibility::Undecided { at_d } => {
                    emit(
                        &UndecidedReport {
                            undecided_at_d: at_d,
                            budget,
                        },
                        &json,
                    )?;
                    eprintln!("undecided at d = {at_d} (budget {budget})");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::VerifyLemma {
            lemma,
            r,
            p,
            t,
            ground,
            parts,
            budget,
            json,
        } => {
            let (params, core_lemma, r_eff, p_eff, t_eff) = match lemma {
                LemmaArg::FranklKalai => {
                    let r = r.ok_or_else(|| usage("frankl-kalai needs -r"))?;
                    let p = p.ok_or_else(|| usage("frankl-kalai needs -p"))?;
                    (
                        LemmaParams::FranklKalai { r, p },
                        Lemma::FranklKalai,
                        r,
                        p,
                        0,
                    )
                }
                LemmaArg::Furedi => {
                    let r = r.ok_or_else(|| usage("furedi needs -r"))?;
                    let p = p.ok_or_else(|| usage("furedi needs -p"))?;
                    let t = t.ok_or_else(|| usage("furedi needs -t"))?;
                    (LemmaParams::Furedi { r, p, t }, Lemma::Furedi, r, p, t)
                }
                LemmaArg::Lnp => {
                    let sizes = parts.ok_or_else(|| usage("lnp needs --parts, e.g. --parts 2,2"))?;
                    let r = sizes.len() as u32;
                    (
                        LemmaParams::Lnp { part_sizes: sizes },
                        Lemma::Lnp,
                        r,
                        0,
                        0,
                    )
                }
            };
            let bound = setpair::lemma_bound(core_lemma, r_eff, p_eff, t_eff)?;
            let g = match (lemma, ground) {
                (LemmaArg::Lnp, _) => 0,
                (_, Some(g)) => g,
                (_, None) => r_eff + p_eff + 1,
            };
            match setpair::max_system_search(&params, g, budget)? {
                SearchOutcome::Exact(k_found) => {
                    let ok = u64::from(k_found) <= bound;
                    emit(
                        &LemmaReport {
                            lemma: lemma.name().into(),
                            k_found,
                            bound,
                            ok,
                        },
                        &json,
                    )?;
                    eprintln!(
                        "{}: longest system {k_found}, bound {bound} ({})",
                        lemma.name(),
                        if ok { "holds" } else { "VIOLATED" }
                    );
                    Ok(ExitCode::SUCCESS)
                }
                SearchOutcome::Undecided => {
                    emit(
                        &LemmaUndecidedReport {
                            lemma: lemma.name().into(),
                            undecided: true,
                            bound,
                            budget,
                        },
                        &json,
                    )?;
                    eprintln!("{}: undecided (budget {budget})", lemma.name());
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::VerifyExtremal { r, p, t, json } => {
            let rep = setpair::verify_extremal_complexes(r, p, t)?;
            for c in &rep.checks {
                eprintln!(
                    "{}: found {:?}, expected {} [{}]",
                    c.name,
                    c.found_dimension,
                    c.expected_dimension,
                    if c.ok { "ok" } else { "FAIL" }
                );
            }
            let ok = rep.all_ok();
            emit(&ExtremalReportJson::of(&rep), &json)?;
            eprintln!(
                "extremal families (r={r}, p={p}, t={t}): {}",
                if ok { "all checks passed" } else { "CHECKS FAILED" }
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
