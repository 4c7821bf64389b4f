use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schubert::chains::{increasing_chains, Composition};
use schubert::lrtable::{LrTable, LrTableRecord};
use schubert::verify::{run_suite, Suite, SuiteReport};
use schubert::{
    expand_in_schubert_basis, lr_coefficients, rcgraph, schubert as schubert_poly, skew, Error, Permutation,
    SchubertMethod, SkewMethod,
};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Schubert polynomials, rc-graphs, Bruhat chains and LR coefficients")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SCHUBERT_FORMAT", default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchubertArg {
    Rcgraph,
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum SkewArg {
    Normalform,
    Chains,
    Lr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Bijection,
    Routes,
    Corollary,
    Pieri,
    Stability,
    Construction,
    Grassmannian,
    Gates,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial S_w.
    Schubert {
        perm: String,
        /// Ambient size; defaults to the length of the permutation.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "rcgraph")]
        method: SchubertArg,
    },
    /// Print the skew Schubert polynomial S_{w/u}.
    Skew {
        w: String,
        u: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "normalform")]
        method: SkewArg,
        /// Print the expansion in the Schubert basis instead of the polynomial.
        #[arg(long)]
        expand: bool,
    },
    /// Structure constants c^w_{u,v} of S_u * S_v.
    Lr {
        u: String,
        v: String,
        #[arg(long)]
        n: Option<usize>,
        /// Append the rows to this NDJSON cache file instead of printing them.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the rc-graphs of w.
    Rcgraphs {
        w: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        render: Option<Render>,
    },
    /// Enumerate the increasing labeled chains from u to w.
    Chains {
        u: String,
        w: String,
        #[arg(long)]
        n: Option<usize>,
        /// Keep only chains of this type, e.g. 1,2,0.
        #[arg(long = "type")]
        chain_type: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_perm(s: &str, n: Option<usize>) -> Result<Permutation, Error> {
    let p: Permutation = s.parse()?;
    match n {
        Some(n) => p.embed(n),
        None => Ok(p),
    }
}

/// Ambient size shared by several permutation arguments.
fn common_n(words: &[&str], n: Option<usize>) -> Result<usize, Error> {
    let longest = words.iter().map(|w| w.parse::<Permutation>().map(|p| p.n())).collect::<Result<Vec<_>, _>>()?;
    let needed = longest.into_iter().max().unwrap_or(1);
    match n {
        Some(n) if n < needed => Err(Error::Embed { from: needed, to: n }),
        Some(n) => Ok(n),
        None => Ok(needed),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, Error> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Schubert { perm, n, method } => {
            let w = parse_perm(&perm, n)?;
            let method = match method {
                SchubertArg::Rcgraph => SchubertMethod::RcGraph,
                SchubertArg::Chain => SchubertMethod::Chain,
            };
            let p = schubert_poly(&w, w.n(), method)?;
            if json {
                writeln!(out, "{}", p.to_json(w.n()))?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Command::Skew { w, u, n, method, expand } => {
            let n = common_n(&[&w, &u], n)?;
            let (w, u) = (parse_perm(&w, Some(n))?, parse_perm(&u, Some(n))?);
            let method = match method {
                SkewArg::Normalform => SkewMethod::NormalForm,
                SkewArg::Chains => SkewMethod::Chains,
                SkewArg::Lr => SkewMethod::Lr,
            };
            let p = skew(&w, &u, n, method)?;
            if expand {
                writeln!(out, "{}", expand_in_schubert_basis(&p, n)?.to_json())?;
            } else if json {
                writeln!(out, "{}", p.to_json(n))?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Command::Lr { u, v, n, out: cache } => {
            let n = common_n(&[&u, &v], n)?;
            let (u, v) = (parse_perm(&u, Some(n))?, parse_perm(&v, Some(n))?);
            match cache {
                Some(path) => {
                    let mut table = LrTable::load(&path)?;
                    let cached = table.lookup(n, &u.to_word(), &v.to_word());
                    let rows = if cached.is_empty() {
                        LrTableRecord::rows(&u, &v, &lr_coefficients(&u, &v, n)?)
                    } else {
                        cached
                    };
                    let written = table.append(&path, &rows)?;
                    eprintln!("{} rows, {written} new, cache {}", rows.len(), path.display());
                }
                None => {
                    for row in LrTableRecord::rows(&u, &v, &lr_coefficients(&u, &v, n)?) {
                        if json {
                            writeln!(out, "{}", serde_json::to_string(&row)?)?;
                        } else {
                            writeln!(out, "w={} c={}", row.w, row.c)?;
                        }
                    }
                }
            }
        }
        Command::Rcgraphs { w, n, render } => {
            let w = parse_perm(&w, n)?;
            let render = render.unwrap_or(if json { Render::Json } else { Render::Ascii });
            for (idx, graph) in rcgraph::enumerate(&w).enumerate() {
                match render {
                    Render::Json => writeln!(out, "{}", graph.to_json())?,
                    Render::Ascii => {
                        if idx > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{}", graph.to_ascii())?;
                    }
                }
            }
        }
        Command::Chains { u, w, n, chain_type } => {
            let n = common_n(&[&u, &w], n)?;
            let (u, w) = (parse_perm(&u, Some(n))?, parse_perm(&w, Some(n))?);
            let wanted = chain_type.map(|t| t.parse::<Composition>()).transpose()?.map(|mut alpha| {
                alpha.0.resize(n.saturating_sub(1).max(alpha.0.len()), 0);
                alpha
            });
            for chain in increasing_chains(&u, &w) {
                if wanted.as_ref().is_some_and(|a| *a != chain.chain_type()) {
                    continue;
                }
                if json {
                    writeln!(out, "{}", chain.to_json())?;
                } else {
                    writeln!(out, "{chain}")?;
                }
            }
        }
        Command::Verify { suite, n, seed } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Bijection => vec![Suite::Bijection],
                SuiteArg::Routes => vec![Suite::Routes],
                SuiteArg::Corollary => vec![Suite::Corollary],
                SuiteArg::Pieri => vec![Suite::Pieri],
                SuiteArg::Stability => vec![Suite::Stability],
                SuiteArg::Construction => vec![Suite::Construction],
                SuiteArg::Grassmannian => vec![Suite::Grassmannian],
                SuiteArg::Gates => vec![Suite::Gates],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut all_passed = true;
            for suite in suites {
                let report = run_suite(suite, n, seed)?;
                all_passed &= report.passed;
                print_report(out, &report, json)?;
            }
            out.flush()?;
            return Ok(all_passed);
        }
    }
    out.flush()?;
    Ok(true)
}

fn print_report(out: &mut impl Write, report: &SuiteReport, json: bool) -> Result<(), Error> {
    if json {
        writeln!(out, "{}", serde_json::to_string(report)?)?;
        return Ok(());
    }
    let status = if report.passed { "pass" } else { "FAIL" };
    writeln!(out, "{} n={}: {status} ({} checks)", report.suite, report.n, report.checks)?;
    for failure in &report.failures {
        writeln!(out, "  {failure}")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(Error::Io(msg)) if msg.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
