//! Command-line front end. Exit status: 0 success, 1 rejection or search
//! failure, 2 usage, input or parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::curry_howard::{extract_with, normalize, CurryHowardError, LambdaTerm};
use crate::kernel::{check_document_in, CheckReport, Context, Diagnostic, Environment, Mode};
use crate::prelude::load_preludes;
use crate::proof_format::{parse_document, parse_formula, print_lemma, Lemma, Pos, ProofDocument};
use crate::render::{render, Format, RenderOptions};
use crate::search::{prove, SearchError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gpnd", version, about = "Check, render and search natural deduction proofs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Checking {
    /// Admit the classical rules PEM and NNE.
    #[arg(long)]
    classical: bool,
    /// Do not load the arithmetic, set and classical preludes.
    #[arg(long)]
    no_prelude: bool,
}

impl Checking {
    fn mode(&self) -> Mode {
        if self.classical {
            Mode::Classical
        } else {
            Mode::Intuitionistic
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check documents; directories contribute their .gpnd files in name order.
    Check {
        #[command(flatten)]
        checking: Checking,
        /// One JSON record per diagnostic instead of text lines.
        #[arg(long)]
        json: bool,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Render the lemmas of a document.
    Render {
        #[command(flatten)]
        checking: Checking,
        #[arg(long, default_value = "ascii", value_parser = parse_format)]
        format: Format,
        /// Only this lemma.
        #[arg(long)]
        lemma: Option<String>,
        #[arg(long)]
        unicode: bool,
        /// Show the hypotheses in scope at every node.
        #[arg(long)]
        contexts: bool,
        #[arg(long, default_value_t = 100)]
        width: usize,
        file: PathBuf,
    },
    /// Print the lambda term of a propositional lemma.
    Extract {
        #[command(flatten)]
        term: TermArgs,
    },
    /// Print the normal form of a propositional lemma's lambda term.
    Normalize {
        #[command(flatten)]
        term: TermArgs,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
    },
    /// Search for a proof and print it as a lemma.
    Prove {
        #[arg(long, default_value_t = 12)]
        depth: usize,
        /// Hypothesis `label : formula`; repeatable.
        #[arg(long = "hyp")]
        hyps: Vec<String>,
        formula: String,
    },
}

#[derive(Args, Debug)]
struct TermArgs {
    #[command(flatten)]
    checking: Checking,
    #[arg(long)]
    lemma: String,
    #[arg(long)]
    unicode: bool,
    file: PathBuf,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

/// A failure that ends the command with the given status.
struct Exit(i32, String);

type Outcome = Result<i32, Exit>;

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let outcome = match cli.command {
        Command::Check { checking, json, inputs } => check(&checking, json, &inputs, out, err),
        Command::Render { checking, format, lemma, unicode, contexts, width, file } => {
            let opts = RenderOptions { format, show_contexts: contexts, unicode, max_width: width };
            render_cmd(&checking, &opts, lemma.as_deref(), &file, out)
        }
        Command::Extract { term } => lambda(&term, None, out),
        Command::Normalize { term, steps } => lambda(&term, Some(steps), out),
        Command::Prove { depth, hyps, formula } => prove_cmd(depth, &hyps, &formula, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "{msg}");
            code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn environment(checking: &Checking) -> Result<Environment, Exit> {
    if checking.no_prelude {
        Ok(Environment::new())
    } else {
        load_preludes().map_err(|e| usage(e.to_string()))
    }
}

fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, Exit> {
    let mut files = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let entries = std::fs::read_dir(input)
                .map_err(|e| usage(format!("{}: {e}", input.display())))?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "gpnd"))
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(input.clone());
        }
    }
    Ok(files)
}

fn read(path: &Path) -> Result<ProofDocument, Exit> {
    let src = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_document(&src).map_err(|e| usage(format!("{}:{e}", path.display())))
}

#[derive(Serialize)]
struct DiagnosticRecord<'a> {
    file: String,
    lemma: &'a str,
    class: &'a str,
    path: String,
    labels: &'a [String],
    message: &'a str,
}

impl<'a> DiagnosticRecord<'a> {
    fn new(file: &Path, d: &'a Diagnostic) -> Self {
        DiagnosticRecord {
            file: file.display().to_string(),
            lemma: &d.lemma,
            class: d.class.name(),
            path: d.path.iter().map(usize::to_string).collect::<Vec<_>>().join("."),
            labels: &d.detail,
            message: &d.message,
        }
    }
}

fn check(checking: &Checking, json: bool, inputs: &[PathBuf], out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let env = environment(checking)?;
    let mut status = EXIT_OK;
    for file in expand_inputs(inputs)? {
        let doc = match read(&file) {
            Ok(doc) => doc,
            Err(Exit(code, msg)) => {
                let _ = writeln!(err, "{msg}");
                status = status.max(code);
                continue;
            }
        };
        let report = check_document_in(&env, &doc, checking.mode());
        for d in &report.diagnostics {
            let _ = if json {
                let record = serde_json::to_string(&DiagnosticRecord::new(&file, d)).expect("plain record");
                writeln!(err, "{record}")
            } else {
                writeln!(err, "{}|{}|{}|{}", file.display(), d.class, d.node_path(), d.message)
            };
        }
        let verdict = if report.accepted { "accepted" } else { "rejected" };
        let n = report.lemmas.len();
        let noun = if n == 1 { "lemma" } else { "lemmas" };
        let _ = writeln!(out, "{}: {verdict} ({n} {noun})", file.display());
        if !report.accepted {
            status = status.max(EXIT_REJECTED);
        }
    }
    Ok(status)
}

fn checked(checking: &Checking, file: &Path) -> Result<(ProofDocument, CheckReport), Exit> {
    let env = environment(checking)?;
    let doc = read(file)?;
    let report = check_document_in(&env, &doc, checking.mode());
    Ok((doc, report))
}

fn selected<'a>(doc: &'a ProofDocument, name: Option<&str>) -> Result<Vec<&'a Lemma>, Exit> {
    match name {
        Some(n) => doc.lemma(n).map(|l| vec![l]).ok_or_else(|| usage(format!("no lemma named `{n}`"))),
        None => Ok(doc.lemmas.iter().collect()),
    }
}

fn render_cmd(
    checking: &Checking,
    opts: &RenderOptions,
    lemma: Option<&str>,
    file: &Path,
    out: &mut dyn Write,
) -> Outcome {
    let (doc, report) = checked(checking, file)?;
    let lemmas = selected(&doc, lemma)?;
    for (i, l) in lemmas.iter().enumerate() {
        let text = render(l, opts, &report).map_err(|e| Exit(EXIT_REJECTED, format!("{}: {e}", l.name)))?;
        if i > 0 {
            let _ = writeln!(out);
        }
        let _ = match opts.format {
            Format::Latex => writeln!(out, "% {}", l.name),
            _ => writeln!(out, "lemma {}:", l.name),
        };
        let _ = write!(out, "{text}");
    }
    Ok(EXIT_OK)
}

fn lambda(args: &TermArgs, steps: Option<usize>, out: &mut dyn Write) -> Outcome {
    let (doc, report) = checked(&args.checking, &args.file)?;
    let lemma = selected(&doc, Some(&args.lemma))?[0];
    if !report.lemma_accepted(&lemma.name) {
        return Err(Exit(EXIT_REJECTED, format!("lemma `{}` is not accepted by the checker", lemma.name)));
    }
    let failed = |e: CurryHowardError| Exit(EXIT_REJECTED, format!("{}: {e}", lemma.name));
    let mut term: LambdaTerm = extract_with(&lemma.root, &|n| doc.lemma(n)).map_err(failed)?;
    if let Some(limit) = steps {
        let ctx = Context::from_hypotheses(&lemma.hypotheses, Mode::Intuitionistic);
        term = normalize(&term, &ctx, limit).map_err(failed)?;
    }
    let _ = if args.unicode { writeln!(out, "{term:#}") } else { writeln!(out, "{term}") };
    Ok(EXIT_OK)
}

fn prove_cmd(depth: usize, hyps: &[String], formula: &str, out: &mut dyn Write) -> Outcome {
    let goal = parse_formula(formula).map_err(|e| usage(format!("formula: {e}")))?;
    let mut hypotheses = Vec::new();
    for h in hyps {
        let (label, f) = h
            .split_once(':')
            .ok_or_else(|| usage(format!("hypothesis `{h}` is not of the form `label : formula`")))?;
        let f = parse_formula(f).map_err(|e| usage(format!("hypothesis `{h}`: {e}")))?;
        hypotheses.push((label.trim().to_string(), f));
    }
    match prove(&goal, &hypotheses, depth) {
        Ok(root) => {
            let lemma = Lemma { name: "goal".into(), hypotheses, goal, root, pos: Pos::default() };
            let _ = writeln!(out, "{}", print_lemma(&lemma));
            Ok(EXIT_OK)
        }
        Err(e @ SearchError::NotFound(_)) => Err(Exit(EXIT_REJECTED, e.to_string())),
        Err(e) => Err(usage(e.to_string())),
    }
}
