use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use morse_pr::catalog::{build_catalog, verify_fixtures, write_catalog};
use morse_pr::chord::ChordJson;
use morse_pr::export::{export, Document, ExportError, Format, Parsed};
use morse_pr::prdiag::{
    boundary_restriction, census, from_colored_chord, to_colored_chord_with, validate, PrDiagram, PrError, PrJson,
};
use morse_pr::Symmetry;

#[derive(Parser)]
#[command(name = "morse-pr", version, about = "Classify and check Pr-diagrams of Morse flows")]
struct Cli {
    /// Which symmetries identify two diagrams.
    #[arg(long, global = true, default_value = "dihedral")]
    symmetry: Symmetry,
    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "MORSE_PR_WORKERS")]
    workers: Option<usize>,
    /// Directory (classify) or file (export, convert) to write results to.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate chord diagrams, colorings and Pr-diagrams of one genus.
    Classify {
        #[arg(long)]
        genus: u32,
    },
    /// Check the five well-formedness properties of a Pr-diagram.
    Validate { file: PathBuf },
    /// Decide whether two diagrams are equivalent.
    Iso { a: PathBuf, b: PathBuf },
    /// Fixed-point census and the necessary conditions.
    Census { file: PathBuf },
    /// Convert between colored chord diagrams and Pr-diagrams.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
    },
    /// Separatrix graph of the flow on the boundary surface.
    Boundary { file: PathBuf },
    /// Fixture corpus operations.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
    /// Render a diagram.
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Check every shipped fixture against the manifest.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Chord,
    Pr,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Svg,
    Json,
}

enum Failure {
    /// A negative verdict: the JSON is still printed, exit code 1.
    Negative(Value, String),
    /// Bad input or IO: exit code 2.
    Error(String),
}

type Outcome = Result<(Value, String), Failure>;

fn read_doc(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn input_error(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Error(format!("{}: {e}", path.display()))
}

fn read_pr(path: &Path) -> Result<PrDiagram, Failure> {
    match read_doc(path)? {
        Document::Pr(j) => j.to_diagram().map_err(|e| input_error(path, e)),
        Document::Chord(_) => Err(input_error(path, "expected a Pr-diagram, found a chord diagram")),
    }
}

/// Invalid diagrams are negative verdicts; anything else is an input error.
fn verdict(path: &Path, e: PrError) -> Failure {
    match e {
        PrError::InvalidDiagram(w) | PrError::NotOptimal(w) => {
            Failure::Negative(json!({"valid": false, "error": w}), format!("{}: {w}", path.display()))
        }
        PrError::InvalidColoring(c) => {
            Failure::Negative(json!({"valid": false, "error": c.to_string()}), format!("{}: {c}", path.display()))
        }
        other => input_error(path, other),
    }
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<Option<String>, Failure> {
    match out {
        None => Ok(None),
        Some(p) => {
            std::fs::write(p, content).map_err(|e| Failure::Error(format!("{}: {e}", p.display())))?;
            Ok(Some(p.display().to_string()))
        }
    }
}

fn workers(cli: &Cli) -> usize {
    cli.workers.filter(|&w| w > 0).unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run(cli: &Cli) -> Outcome {
    let sym = cli.symmetry;
    match &cli.command {
        Command::Classify { genus } => {
            let start = Instant::now();
            let cat = build_catalog(*genus, sym, workers(cli)).map_err(|e| Failure::Error(e.to_string()))?;
            if let Some(dir) = &cli.out {
                write_catalog(&cat, dir).map_err(|e| Failure::Error(e.to_string()))?;
            }
            let mut report = cat.report.clone();
            report.runtime_ms = Some(start.elapsed().as_millis() as u64);
            let r = &report;
            let summary = format!(
                "genus {}: {} bases, {} colored ({} river, on {} bases), {} Pr-diagrams [{}] in {} ms",
                r.genus,
                r.bases,
                r.colored,
                r.river_colored,
                r.river_bases,
                r.pr_diagrams,
                r.symmetry,
                r.runtime_ms.unwrap_or(0)
            );
            Ok((serde_json::to_value(&report).expect("report"), summary))
        }
        Command::Validate { file } => {
            let d = read_pr(file)?;
            let report = validate(&d);
            let value = serde_json::to_value(&report).expect("report");
            match report.first_failure() {
                None => Ok((value, format!("{}: all five properties hold", file.display()))),
                Some(v) => Err(Failure::Negative(
                    value,
                    format!(
                        "{}: property {} fails: {}",
                        file.display(),
                        v.property,
                        v.witness.clone().unwrap_or_default()
                    ),
                )),
            }
        }
        Command::Iso { a, b } => {
            let code = |p: &PathBuf| -> Result<String, Failure> {
                Ok(match read_doc(p)?.resolve().map_err(|e| input_error(p, e))? {
                    Parsed::Chord(c) => format!("chord:{}", c.canonical(sym).code()),
                    Parsed::Colored(c) => format!("colored:{}", c.canonical(sym).code()),
                    Parsed::Pr(d) => format!("pr:{}", d.code(sym)),
                })
            };
            let (ca, cb) = (code(a)?, code(b)?);
            let eq = ca == cb;
            let value = json!({"equivalent": eq, "symmetry": sym, "codes": [ca, cb]});
            let summary = format!("{} and {} are {}equivalent", a.display(), b.display(), if eq { "" } else { "not " });
            if eq {
                Ok((value, summary))
            } else {
                Err(Failure::Negative(value, summary))
            }
        }
        Command::Census { file } => {
            let d = read_pr(file)?;
            let c = census(&d).map_err(|e| verdict(file, e))?;
            let morse = c.morse_checks();
            let value = json!({"census": c, "counts": c.counts(), "morse": morse});
            let summary = format!("{}: census {:?}, boundary genus {}", file.display(), c.counts(), c.g_boundary);
            if morse.pass {
                Ok((value, summary))
            } else {
                Err(Failure::Negative(value, format!("{summary}; necessary conditions fail")))
            }
        }
        Command::Convert { to, file } => {
            let doc = read_doc(file)?;
            let (value, summary) = match (to, doc.resolve().map_err(|e| input_error(file, e))?) {
                (Target::Chord, Parsed::Pr(d)) => {
                    let c = to_colored_chord_with(&d, sym).map_err(|e| verdict(file, e))?;
                    let mut v = serde_json::to_value(ChordJson::from(&c)).expect("chord");
                    v["code"] = json!(c.code());
                    (v, format!("{}: colored chord diagram {}", file.display(), c.code()))
                }
                (Target::Pr, Parsed::Colored(c)) => {
                    let d = from_colored_chord(&c).map_err(|e| verdict(file, e))?;
                    let v = serde_json::to_value(PrJson::from(&d)).expect("pr");
                    (v, format!("{}: Pr-diagram with {} darts", file.display(), d.surface().dart_count()))
                }
                (Target::Chord, _) => return Err(input_error(file, "expected a Pr-diagram")),
                (Target::Pr, _) => return Err(input_error(file, "expected a colored chord diagram")),
            };
            let text = serde_json::to_string_pretty(&value).expect("json") + "\n";
            match write_out(&cli.out, &text)? {
                Some(p) => Ok((json!({"written": p}), summary)),
                None => Ok((value, summary)),
            }
        }
        Command::Boundary { file } => {
            let d = read_pr(file)?;
            let g = boundary_restriction(&d).map_err(|e| verdict(file, e))?;
            let summary = format!(
                "{}: {} nodes, {} separatrices, boundary genus {}",
                file.display(),
                g.nodes.len(),
                g.edges.len(),
                g.genus
            );
            let mut v = serde_json::to_value(&g).expect("graph");
            v["euler"] = json!(g.euler());
            Ok((v, summary))
        }
        Command::Fixtures { action: FixturesAction::Verify } => {
            let report = verify_fixtures(sym);
            let value = serde_json::to_value(&report).expect("report");
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            let summary = format!("{} fixture checks, {failed} failed", report.checks.len());
            match report.first_regression() {
                Ok(()) => Ok((value, summary)),
                Err(e) => Err(Failure::Negative(value, format!("{summary}: {e}"))),
            }
        }
        Command::Export { format, file } => {
            let doc = read_doc(file)?;
            let fmt = match format {
                ExportFormat::Dot => Format::Dot,
                ExportFormat::Svg => Format::Svg,
                ExportFormat::Json => Format::Json,
            };
            let content = export(&doc, fmt).map_err(|e| match e {
                ExportError::NotPlanar(w) => Failure::Negative(
                    json!({"exported": false, "error": format!("no planar layout: {w}")}),
                    format!("{}: no planar layout ({w}); try --format dot", file.display()),
                ),
                other => input_error(file, other),
            })?;
            let summary = format!("{}: {} bytes", file.display(), content.len());
            match write_out(&cli.out, &content)? {
                Some(p) => Ok((json!({"exported": true, "format": fmt, "written": p}), summary)),
                None => Ok((json!({"exported": true, "format": fmt, "content": content}), summary)),
            }
        }
    }
}

fn print(value: &Value) {
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(value).expect("json"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, summary)) => {
            print(&value);
            eprintln!("{summary}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(value, summary)) => {
            print(&value);
            eprintln!("{summary}");
            ExitCode::from(1)
        }
        Err(Failure::Error(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
