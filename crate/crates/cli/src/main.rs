//! `pclw`: queries, enumeration and claim verification for perfectly
//! clustering words.

mod input;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use thiserror::Error;

use pclwords::bwt::{bwt, clustering_report};
use pclwords::factorization::{
    general_palindromic_factorization, is_pcl, is_pcl_via_bwt, palindromic_special_factorization,
    product_of_two_palindromes,
};
use pclwords::morphism::{decompose, witness_from_directive, witness_p2_from_directive};
use pclwords::palindrome::{directive_of, pal, palindromic_closure};
use pclwords::verify::{
    enumerate_pcl_with, Claim, ClaimSettings, MembershipVerdict, PalindromeSets, Side, Status, VerificationReport,
    Verifier,
};
use pclwords::{OrderedAlphabet, Word};

use input::{Item, Letters};
use output::{Envelope, Format, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{location}: {input:?}: {source}")]
    Input { location: String, input: String, source: pclwords::Error },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] pclwords::Error),
    #[error("cannot write output: {0}")]
    Output(String),
}

#[derive(Debug, Parser)]
#[command(name = "pclw", version, about = "Burrows-Wheeler clustering and palindromic factorizations of words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Length bound for enumeration, sets, membership and verification.
    #[arg(long, global = true, default_value_t = 12)]
    max_len: usize,
    /// Ordered alphabet, e.g. "abc"; inferred from each word when omitted.
    #[arg(long, global = true)]
    alphabet: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Read one word per line from PATH ("-" for stdin).
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<String>,
    /// Claim identifier for `verify`; all claims when omitted.
    #[arg(long, global = true)]
    claim: Option<String>,
    /// p1 or p2.
    #[arg(long, global = true)]
    side: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Burrows-Wheeler transform.
    Bwt { words: Vec<String> },
    /// Transform, run structure and clustering permutation.
    Cluster { words: Vec<String> },
    /// Iterated palindrome of a directive word.
    Pal { words: Vec<String> },
    /// Directive word of an iterated palindrome.
    Directive { words: Vec<String> },
    /// Palindromic right closure.
    Closure { words: Vec<String> },
    /// Palindromic special factorization over abc.
    Factorize { words: Vec<String> },
    /// Both perfectly clustering Lyndon classifiers.
    Check { words: Vec<String> },
    /// Perfectly clustering Lyndon words up to --max-len.
    Enumerate,
    /// P1 and P2 palindromes with their shortest witnesses.
    Sets,
    /// Three-valued membership of palindromes in P1 or P2.
    Membership { words: Vec<String> },
    /// Split a perfectly clustering word as f(u) for an automorphism f.
    Decompose { words: Vec<String> },
    /// Perfectly clustering Lyndon word built from a directive word.
    Witness { words: Vec<String> },
    /// Run claim checks up to --max-len.
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bwt { .. } => "bwt",
            Command::Cluster { .. } => "cluster",
            Command::Pal { .. } => "pal",
            Command::Directive { .. } => "directive",
            Command::Closure { .. } => "closure",
            Command::Factorize { .. } => "factorize",
            Command::Check { .. } => "check",
            Command::Enumerate => "enumerate",
            Command::Sets => "sets",
            Command::Membership { .. } => "membership",
            Command::Decompose { .. } => "decompose",
            Command::Witness { .. } => "witness",
            Command::Verify => "verify",
        }
    }

    fn words(&self) -> &[String] {
        match self {
            Command::Bwt { words }
            | Command::Cluster { words }
            | Command::Pal { words }
            | Command::Directive { words }
            | Command::Closure { words }
            | Command::Factorize { words }
            | Command::Check { words }
            | Command::Membership { words }
            | Command::Decompose { words }
            | Command::Witness { words } => words,
            Command::Enumerate | Command::Sets | Command::Verify => &[],
        }
    }

    fn is_generic(&self) -> bool {
        matches!(
            self,
            Command::Bwt { .. }
                | Command::Cluster { .. }
                | Command::Pal { .. }
                | Command::Directive { .. }
                | Command::Closure { .. }
        )
    }

    fn uses_bound(&self) -> bool {
        matches!(self, Command::Enumerate | Command::Sets | Command::Membership { .. } | Command::Verify)
    }
}

/// The empty word shows as `ε` in text output.
fn show(w: &Word) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

fn sides(cli: &Cli) -> Result<Vec<Side>, CliError> {
    match &cli.side {
        None => Ok(vec![Side::P1, Side::P2]),
        Some(s) => Ok(vec![s.parse::<Side>()?]),
    }
}

struct Run {
    table: Table,
    status: &'static str,
    checked: u64,
    extra: Map<String, Value>,
    failed: bool,
    /// Set when `verify` ran exactly one claim.
    report: Option<VerificationReport>,
}

impl Run {
    fn of(table: Table) -> Self {
        let checked = table.rows.len() as u64;
        Self { table, status: "ok", checked, extra: Map::new(), failed: false, report: None }
    }
}

fn per_word(
    items: &[Item],
    letters: &Letters,
    columns: &[&'static str],
    mut row: impl FnMut(&Item, Word) -> Result<(Vec<Value>, String), CliError>,
) -> Result<Table, CliError> {
    let mut table = Table::new(columns);
    for item in items {
        let word = letters.parse(item)?;
        let (values, line) = row(item, word).map_err(|e| match e {
            CliError::Library(source) => {
                CliError::Input { location: item.location.clone(), input: item.text.clone(), source }
            }
            other => other,
        })?;
        let mut full = vec![json!(item.text)];
        full.extend(values);
        table.push(full, line);
    }
    Ok(table)
}

fn execute(cli: &Cli) -> Result<Run, CliError> {
    let command = &cli.command;
    if command.uses_bound() && cli.max_len == 0 {
        return Err(CliError::Usage("--max-len must be at least 1".into()));
    }
    // factorize falls back to the k-separator factorization over other alphabets
    let general_factorize =
        matches!(command, Command::Factorize { .. }) && cli.alphabet.as_deref().is_some_and(|a| a != "abc");
    let letters = if command.is_generic() || general_factorize {
        let alphabet = cli.alphabet.as_deref().map(OrderedAlphabet::new).transpose()?.map(Arc::new);
        Letters::Generic(alphabet)
    } else {
        match cli.alphabet.as_deref() {
            None | Some("abc") => Letters::Ternary,
            Some(other) => {
                return Err(CliError::Usage(format!(
                    "{} works over the alphabet abc only, not {other:?}",
                    command.name()
                )))
            }
        }
    };
    let items = input::collect(command.words(), cli.file.as_deref())?;
    let takes_words = !matches!(command, Command::Enumerate | Command::Sets | Command::Verify);
    if takes_words && items.is_empty() {
        return Err(CliError::Usage(format!("{} needs at least one word or --file", command.name())));
    }

    Ok(match command {
        Command::Bwt { .. } => Run::of(per_word(&items, &letters, &["input", "bwt"], |_, w| {
            let t = bwt(&w)?;
            Ok((vec![json!(t.to_string())], t.to_string()))
        })?),
        Command::Cluster { .. } => {
            Run::of(per_word(&items, &letters, &["input", "bwt", "runs", "permutation", "perfect"], |_, w| {
                let r = clustering_report(&w)?;
                let perm = r.permutation_string();
                let line = format!(
                    "{} runs {} permutation {} {}",
                    r.bwt,
                    r.runs_string(),
                    perm.as_deref().unwrap_or("-"),
                    if r.perfect { "perfect" } else { "not-perfect" }
                );
                Ok((vec![json!(r.bwt.to_string()), json!(r.runs_string()), json!(perm), json!(r.perfect)], line))
            })?)
        }
        Command::Pal { .. } => Run::of(per_word(&items, &letters, &["input", "pal"], |_, u| {
            let p = pal(&u);
            Ok((vec![json!(p.to_string())], show(&p)))
        })?),
        Command::Directive { .. } => Run::of(per_word(&items, &letters, &["input", "directive"], |_, w| {
            let d = directive_of(&w);
            let line = d.as_ref().map_or("none".into(), |d| show(d.word()));
            Ok((vec![json!(d.map(|d| d.word().to_string()))], line))
        })?),
        Command::Closure { .. } => Run::of(per_word(&items, &letters, &["input", "closure"], |_, w| {
            let c = palindromic_closure(&w);
            Ok((vec![json!(c.to_string())], show(&c)))
        })?),
        Command::Factorize { .. } => Run::of(per_word(
            &items,
            &letters,
            &["input", "factorization", "pi1", "pi2", "palindrome_pair"],
            |_, w| {
                let f = if w.alphabet().len() == 3 {
                    palindromic_special_factorization(&w)?
                } else {
                    general_palindromic_factorization(&w)
                };
                let pair = product_of_two_palindromes(&w);
                let line = f.as_ref().map_or("no palindromic special factorization".into(), |f| f.to_string());
                Ok((
                    vec![
                        json!(f.as_ref().map(|f| f.to_string())),
                        json!(f.as_ref().and_then(|f| f.pi1()).map(Word::to_string)),
                        json!(f.as_ref().and_then(|f| f.pi2()).map(Word::to_string)),
                        json!(pair.map(|p| p.to_string())),
                    ],
                    line,
                ))
            },
        )?),
        Command::Check { .. } => {
            let mut run = Run::of(per_word(
                &items,
                &letters,
                &["input", "lyndon", "pcl_via_bwt", "pcl_via_factorization", "agree"],
                |_, w| {
                    let lyndon = w.is_lyndon()?;
                    let via_bwt = is_pcl_via_bwt(&w)?;
                    let via_factors = is_pcl(&w)?;
                    let line = format!(
                        "{} lyndon={lyndon} bwt={via_bwt} factorization={via_factors}",
                        if via_bwt && via_factors { "pcl" } else { "not-pcl" }
                    );
                    Ok((vec![json!(lyndon), json!(via_bwt), json!(via_factors), json!(via_bwt == via_factors)], line))
                },
            )?);
            // a disagreement between the classifiers is a counterexample
            if run.table.rows.iter().any(|row| row[4] == json!(false)) {
                run.status = "counterexample";
                run.failed = true;
            }
            run
        }
        Command::Decompose { .. } => {
            Run::of(per_word(&items, &letters, &["input", "automorphism", "preimage"], |_, w| {
                let d = decompose(&w)?;
                let line = d.as_ref().map_or("none".into(), |d| d.to_string());
                Ok((
                    vec![json!(d.as_ref().map(|d| d.automorphism.id())), json!(d.map(|d| d.preimage.to_string()))],
                    line,
                ))
            })?)
        }
        Command::Witness { .. } => {
            let sides = sides(cli)?;
            let mut table = Table::new(&["input", "side", "pal", "witness"]);
            for item in &items {
                let u = letters.parse(item)?;
                for &side in &sides {
                    let built = match side {
                        Side::P1 => witness_from_directive(&u),
                        Side::P2 => witness_p2_from_directive(&u),
                    }
                    .map_err(|source| CliError::Input {
                        location: item.location.clone(),
                        input: item.text.clone(),
                        source,
                    })?;
                    let p = pal(&u);
                    table.push(
                        vec![json!(item.text), json!(side.to_string()), json!(p.to_string()), json!(built.to_string())],
                        format!("{side} {} {built}", show(&p)),
                    );
                }
            }
            Run::of(table)
        }
        Command::Enumerate => {
            let catalog = enumerate_pcl_with(cli.max_len, cli.workers)?;
            let mut table = Table::new(&["word", "factorization", "pi1", "pi2"]);
            for e in catalog.entries() {
                table.push(
                    vec![
                        json!(e.word.to_string()),
                        json!(e.factorization.to_string()),
                        json!(e.pi1().to_string()),
                        json!(e.pi2().to_string()),
                    ],
                    format!("{} {}", e.word, e.factorization),
                );
            }
            Run::of(table)
        }
        Command::Sets => {
            let sets = PalindromeSets::new(&enumerate_pcl_with(cli.max_len, cli.workers)?);
            let mut table = Table::new(&["side", "palindrome", "witness"]);
            for side in sides(cli)? {
                for (p, witness) in sets.slice(side).sorted() {
                    table.push(
                        vec![json!(side.to_string()), json!(p.to_string()), json!(witness.to_string())],
                        format!("{side} {} {witness}", show(p)),
                    );
                }
            }
            let mut run = Run::of(table);
            let common: Vec<String> = sets.intersection().into_iter().map(Word::to_string).collect();
            run.extra.insert("intersection".into(), json!(common));
            run
        }
        Command::Membership { .. } => {
            let sides = sides(cli)?;
            let sets = PalindromeSets::new(&enumerate_pcl_with(cli.max_len, cli.workers)?);
            let mut table = Table::new(&["input", "side", "verdict", "witness", "certificate"]);
            for item in &items {
                let candidate = letters.parse(item)?;
                for &side in &sides {
                    let verdict = sets.membership(side, &candidate).map_err(|source| CliError::Input {
                        location: item.location.clone(),
                        input: item.text.clone(),
                        source,
                    })?;
                    let (witness, certificate) = match &verdict {
                        MembershipVerdict::Member { witness } => (json!(witness.to_string()), Value::Null),
                        MembershipVerdict::NonMemberDecisive { certificate } => {
                            (Value::Null, json!(certificate.iter().map(Word::to_string).collect::<Vec<_>>()))
                        }
                        MembershipVerdict::UnknownUpTo { .. } => (Value::Null, Value::Null),
                    };
                    table.push(
                        vec![json!(item.text), json!(side.to_string()), json!(verdict.status()), witness, certificate],
                        format!("{side} {}: {verdict}", show(&candidate)),
                    );
                }
            }
            Run::of(table)
        }
        Command::Verify => verify(cli)?,
    })
}

fn verify(cli: &Cli) -> Result<Run, CliError> {
    let claims = match &cli.claim {
        Some(id) => vec![id.parse::<Claim>()?],
        None => Claim::ALL.to_vec(),
    };
    let verifier = Verifier::with(cli.max_len, ClaimSettings::default(), cli.workers);
    let mut table = Table::new(&["claim", "status", "counterexamples", "notes", "words_checked"]);
    let mut worst = Status::Pass;
    let mut single = None;
    let mut checked = 0;
    for claim in &claims {
        let report = verifier.verify(*claim)?;
        worst = match (worst, report.status) {
            (Status::Counterexample, _) | (_, Status::Counterexample) => Status::Counterexample,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Pass,
        };
        checked += report.stats.words_checked;
        table.push(
            vec![
                json!(report.claim),
                json!(report.status),
                json!(report.counterexamples),
                json!(report.notes),
                json!(report.stats.words_checked),
            ],
            report.to_string(),
        );
        if claims.len() == 1 {
            single = Some(report);
        }
    }
    let status = match worst {
        Status::Pass => "pass",
        Status::Counterexample => "counterexample",
        Status::Unknown => "unknown",
    };
    Ok(Run { table, status, checked, extra: Map::new(), failed: worst == Status::Counterexample, report: single })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let run = match execute(&cli) {
        Ok(run) => run,
        Err(e) => {
            eprintln!("pclw {}: {e}", cli.command.name());
            return ExitCode::from(2);
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = match (cli.format, &run.report) {
        (Format::Text, _) => output::write_text(&mut out, &run.table),
        (Format::Csv, _) => output::write_csv(&mut out, &run.table),
        (Format::Json, Some(report)) => serde_json::to_value(report)
            .map_err(|e| CliError::Output(e.to_string()))
            .and_then(|value| output::write_json(&mut out, &value)),
        (Format::Json, None) => {
            let envelope = Envelope {
                key: "subcommand",
                name: cli.command.name(),
                bound: cli.command.uses_bound().then_some(cli.max_len),
                status: run.status,
                list: "results",
                words_checked: run.checked,
                elapsed_ms,
            };
            output::write_json(&mut out, &output::to_json(&envelope, &run.table, run.extra))
        }
    };
    if let Err(e) = written.and_then(|_| out.flush().map_err(|e| CliError::Output(e.to_string()))) {
        eprintln!("pclw {}: {e}", cli.command.name());
        return ExitCode::from(2);
    }
    if run.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
