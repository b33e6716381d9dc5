//! Command-line surface: fixture generation, reductions with gap
//! certificates, exact/heuristic solving, verification, and the
//! acceptance suite. Exit codes: 0 success, 1 schema/usage error,
//! 2 cap-abort, 3 verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vecpack::embed;
use vecpack::graphs::Graph;
use vecpack::hypergraphs::{self, Hypergraph};
use vecpack::instance::{Norm, PackingInstance};
use vecpack::labelcover::LabelCover;
use vecpack::reduce;
use vecpack::schema::{self, Document};
use vecpack::setsys::SetSystem;
use vecpack::solve;
use vecpack::suite;
use vecpack::Error;

#[derive(Parser)]
#[command(name = "vecpack", about = "Packing-dimension embeddings and gap reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a fixture object (graph, set system, H_r^n[k], toy Label Cover).
    Gen {
        #[arg(long, value_enum)]
        what: GenKind,
        /// Vertex / element count for random fixtures.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Color / alphabet parameter where applicable.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Missing-value budget for H_r^n[k].
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Edge probability in percent for random graphs.
        #[arg(long, default_value_t = 50)]
        percent: u32,
        /// Named Label Cover toys.
        #[arg(long, value_enum, default_value_t = LcFixture::Identity)]
        fixture: LcFixture,
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a named reduction; writes the target instance and prints the
    /// gap certificate.
    Reduce {
        #[arg(long, value_enum)]
        from: ReduceFrom,
        #[arg(long, value_enum)]
        to: ReduceTo,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Certificate destination (default: <output>.cert.json).
        #[arg(long)]
        cert_out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Clique size for the Monochromatic-Clique reduction.
        #[arg(long, default_value_t = 2)]
        b: usize,
        /// Balance bound (balanced coloring) or lex power.
        #[arg(long, default_value_t = 2)]
        c: usize,
    },
    /// Solve a packing instance or set-cover family.
    Solve {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = NormArg::Inf)]
        norm: NormArg,
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Verify an embedding or re-derive a reduction certificate.
    Verify {
        #[arg(long, value_enum)]
        what: VerifyWhat,
        #[arg(short, long)]
        input: PathBuf,
        /// Embedding to check (default: recompute from the family).
        #[arg(long)]
        embedding: Option<PathBuf>,
        #[arg(long, value_enum)]
        from: Option<ReduceFrom>,
        #[arg(long, value_enum)]
        to: Option<ReduceTo>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        b: usize,
        #[arg(long, default_value_t = 2)]
        c: usize,
    },
    /// Run the acceptance battery and print the pass/fail table.
    Suite {
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Graph,
    Setsys,
    Bouquet,
    Hrnk,
    Labelcover,
    Fano,
}

#[derive(Clone, Copy, ValueEnum)]
enum LcFixture {
    Identity,
    Conflicting,
    BhcSat,
    BhcUnsat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceFrom {
    Setcover,
    Monoclique,
    Lex,
    Bhc,
    Labelcover,
    Rainbow,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceTo {
    Vbp,
    Vs,
    Graph,
    Bhc,
    Rainbow,
    Vbc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Vbp,
    Vs,
    Vbc,
    Setcover,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Mode {
    Exact,
    Greedy,
    FirstFit,
    ListGreedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Inf,
    L1,
    L2,
}

impl NormArg {
    fn norm(self) -> Norm {
        match self {
            NormArg::Inf => Norm::Infinity,
            NormArg::L1 => Norm::Finite(1),
            NormArg::L2 => Norm::Finite(2),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded(_) => 2u8,
                Error::Internal(_) => 3u8,
                _ => 1u8,
            })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen {
            what,
            n,
            k,
            r,
            percent,
            fixture,
            seed,
            output,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let doc = match what {
                GenKind::Graph => Document::Graph(suite::random_graph(&mut rng, n, percent)),
                GenKind::Setsys => {
                    Document::SetSystem(suite::random_simple_family(&mut rng, n.max(2), 3, 3))
                }
                GenKind::Bouquet => {
                    let (sys, _, _, _) = suite::random_bouquet(&mut rng, n.max(2));
                    Document::SetSystem(sys)
                }
                GenKind::Hrnk => Document::Hypergraph(hypergraphs::gen_h_r_n_k(k, n, r)?),
                GenKind::Fano => Document::Hypergraph(suite::fano_plane()),
                GenKind::Labelcover => Document::LabelCover(match fixture {
                    LcFixture::Identity => suite::identity_lc(),
                    LcFixture::Conflicting => suite::conflicting_lc(),
                    LcFixture::BhcSat => suite::bhc_sat_lc(),
                    LcFixture::BhcUnsat => suite::bhc_unsat_lc(),
                }),
            };
            emit(&doc, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce {
            from,
            to,
            input,
            output,
            cert_out,
            k,
            b,
            c,
        } => {
            let doc = read_doc(&input)?;
            let (target, cert) = apply_reduction(from, to, &doc, k, b, c)?;
            if let Some(path) = &output {
                write_doc(&target, path)?;
                let cert_path = cert_out
                    .unwrap_or_else(|| path.with_extension("cert.json"));
                write_doc(&Document::GapCertificate(cert.clone()), &cert_path)?;
            } else {
                emit(&target, None)?;
            }
            emit(&Document::GapCertificate(cert), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            problem,
            mode,
            norm,
            input,
        } => {
            let doc = read_doc(&input)?;
            let out = match problem {
                Problem::Setcover => {
                    let sys = expect_setsys(&doc)?;
                    let mode = match mode {
                        Mode::Exact => solve::SetCoverMode::Exact,
                        Mode::Greedy => solve::SetCoverMode::Greedy,
                        _ => return Err(Error::Schema("set cover: use exact or greedy".into())),
                    };
                    serde_json::to_string_pretty(&solve::setcover(sys, mode)?)
                }
                Problem::Vbp => {
                    let inst = expect_instance(&doc)?;
                    let mode = match mode {
                        Mode::Exact => solve::VbpMode::Exact,
                        Mode::FirstFit => solve::VbpMode::FirstFit(None),
                        _ => return Err(Error::Schema("VBP: use exact or first-fit".into())),
                    };
                    serde_json::to_string_pretty(&solve::vbp(inst, mode)?)
                }
                Problem::Vs => {
                    let inst = expect_instance(&doc)?;
                    let mode = match mode {
                        Mode::Exact => solve::VsMode::Exact,
                        Mode::ListGreedy => solve::VsMode::ListGreedy,
                        _ => return Err(Error::Schema("VS: use exact or list-greedy".into())),
                    };
                    serde_json::to_string_pretty(&solve::vs(inst, mode, norm.norm())?)
                }
                Problem::Vbc => {
                    let inst = expect_instance(&doc)?;
                    let mode = match mode {
                        Mode::Exact => solve::VbcMode::Exact,
                        Mode::Greedy => solve::VbcMode::Greedy,
                        _ => return Err(Error::Schema("VBC: use exact or greedy".into())),
                    };
                    serde_json::to_string_pretty(&solve::vbc(inst, mode)?)
                }
            }
            .map_err(|e| Error::Internal(e.to_string()))?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            what,
            input,
            embedding,
            from,
            to,
            k,
            b,
            c,
        } => match what {
            VerifyWhat::Embedding => {
                let doc = read_doc(&input)?;
                let sys = expect_setsys(&doc)?;
                let emb = match embedding {
                    Some(path) => match read_doc(&path)? {
                        Document::Embedding(e) => e,
                        other => {
                            return Err(Error::Schema(format!(
                                "expected an embedding, got {}",
                                other.kind()
                            )))
                        }
                    },
                    None => embed::full_embedding(sys)?,
                };
                let a = vecpack::setsys::analyze(sys);
                let report =
                    embed::verify_embedding(sys, &emb, a.k.max(2) + 1, None, false)?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| Error::Internal(e.to_string()))?
                );
                Ok(if report.ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(3)
                })
            }
            VerifyWhat::Reduction => {
                let (from, to) = match (from, to) {
                    (Some(f), Some(t)) => (f, t),
                    _ => {
                        return Err(Error::Schema(
                            "verify --what reduction needs --from and --to".into(),
                        ))
                    }
                };
                let doc = read_doc(&input)?;
                let (_, cert) = apply_reduction(from, to, &doc, k, b, c)?;
                emit(&Document::GapCertificate(cert), None)?;
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Suite { seed } => {
            let reports = suite::run_suite(seed);
            print!("{}", suite::render(&reports));
            Ok(if reports.iter().all(|r| r.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Embedding,
    Reduction,
}

fn apply_reduction(
    from: ReduceFrom,
    to: ReduceTo,
    doc: &Document,
    k: usize,
    b: usize,
    c: usize,
) -> Result<(Document, reduce::GapCertificate), Error> {
    match (from, to) {
        (ReduceFrom::Setcover, ReduceTo::Vbp) => {
            let sys = expect_setsys(doc)?;
            let out = reduce::setcover_to_vbp(sys)?;
            let cert = reduce::verify_setcover_to_vbp(sys)?;
            Ok((Document::PackingInstance(out.instance), cert))
        }
        (ReduceFrom::Monoclique, ReduceTo::Vs) => {
            let g = expect_graph(doc)?;
            let out = reduce::monoclique_to_vs(g, k, b)?;
            let cert = reduce::verify_monoclique_to_vs(g, k, b)?;
            Ok((Document::PackingInstance(out.instance), cert))
        }
        (ReduceFrom::Lex, ReduceTo::Graph) => {
            let g = expect_graph(doc)?;
            let amplified = reduce::lex_amplify(g, c)?;
            let cert = reduce::verify_lex_amplify(g, c, k)?;
            Ok((Document::Graph(amplified), cert))
        }
        (ReduceFrom::Bhc, ReduceTo::Vs) => {
            let h = expect_hypergraph(doc)?;
            let inst = reduce::bhc_to_vs(h, k)?;
            let cert = reduce::verify_bhc_to_vs(h, k, c)?;
            Ok((Document::PackingInstance(inst), cert))
        }
        (ReduceFrom::Labelcover, ReduceTo::Bhc) => {
            let lc = expect_labelcover(doc)?;
            let out = reduce::labelcover_to_bhc(lc, k)?;
            let cert = reduce::verify_labelcover_to_bhc(lc, k)?;
            Ok((Document::Hypergraph(out.hypergraph), cert))
        }
        (ReduceFrom::Labelcover, ReduceTo::Rainbow) => {
            let lc = expect_labelcover(doc)?;
            let out = reduce::labelcover_to_rainbow(lc, k)?;
            let cert = reduce::verify_labelcover_to_rainbow(lc, k)?;
            Ok((Document::Hypergraph(out.hypergraph), cert))
        }
        (ReduceFrom::Rainbow, ReduceTo::Vbc) => {
            let h = expect_hypergraph(doc)?;
            let inst = reduce::rainbow_to_vbc(h)?;
            let cert = reduce::verify_rainbow_to_vbc(h, k)?;
            Ok((Document::PackingInstance(inst), cert))
        }
        _ => Err(Error::Schema("unsupported --from/--to combination".into())),
    }
}

fn read_doc(path: &Path) -> Result<Document, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Schema(format!("{}: {e}", path.display())))?;
    schema::parse(&text)
}

fn write_doc(doc: &Document, path: &Path) -> Result<(), Error> {
    fs::write(path, schema::serialize(doc))
        .map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}

fn emit(doc: &Document, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(path) => write_doc(doc, path),
        None => {
            print!("{}", schema::serialize(doc));
            Ok(())
        }
    }
}

fn expect_setsys(doc: &Document) -> Result<&SetSystem, Error> {
    match doc {
        Document::SetSystem(s) => Ok(s),
        other => Err(Error::Schema(format!("expected a set system, got {}", other.kind()))),
    }
}

fn expect_graph(doc: &Document) -> Result<&Graph, Error> {
    match doc {
        Document::Graph(g) => Ok(g),
        other => Err(Error::Schema(format!("expected a graph, got {}", other.kind()))),
    }
}

fn expect_hypergraph(doc: &Document) -> Result<&Hypergraph, Error> {
    match doc {
        Document::Hypergraph(h) => Ok(h),
        other => Err(Error::Schema(format!("expected a hypergraph, got {}", other.kind()))),
    }
}

fn expect_labelcover(doc: &Document) -> Result<&LabelCover, Error> {
    match doc {
        Document::LabelCover(lc) => Ok(lc),
        other => Err(Error::Schema(format!("expected a label cover, got {}", other.kind()))),
    }
}

fn expect_instance(doc: &Document) -> Result<&PackingInstance, Error> {
    match doc {
        Document::PackingInstance(inst) => Ok(inst),
        other => Err(Error::Schema(format!("expected a packing instance, got {}", other.kind()))),
    }
}
