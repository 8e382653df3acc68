//! Command-line front end for `phang-core`: construction, checking,
//! canonical forms, exhaustive search, length tables, the 2-of-4 catalog and
//! SVG rendering.
//!
//! [`run`] is the whole program; `main` only wires it to the process streams.
//! Exit status is 0 on success, 1 when a verification fails (or a search
//! aborts), and 2 on usage errors.

mod cli;
pub mod parallel;
pub mod records;
pub mod render;

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::time::Instant;

use clap::Parser;
use serde::Serialize;

use phang_core::construct::{
    balanced_k1, catalog, chain_expr, chain_updown_expr, default_check_mode, demaine_split,
    extension_greedy, length_table, nails, wastlund_corank2, ConstructionReport, CATALOG_NAMES,
};
use phang_core::search::{canonical_form, Minimum, SearchConfig, SearchOutcome};
use phang_core::{CheckMode, Spec, Word};

use cli::{Cli, Command, ConventionArg, Method, ModeArg};
use records::{CheckRecord, ConstructionRecord, SearchRecord, Sharding, TableRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Usage(String),
    Failed(String),
}

type Outcome = Result<i32, Failure>;

fn usage<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Usage(format!("{context}: {e}"))
}

fn io(e: std::io::Error) -> Failure {
    Failure::Failed(format!("i/o error: {e}"))
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
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
    let result = match cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Check(a) => check(a, stdin, out),
        Command::Canon(a) => canon(a, out),
        Command::Search(a) => search(a, out, err),
        Command::Table(a) => table(a, out),
        Command::Catalog(a) => show_catalog(a, out),
        Command::Render(a) => render_cmd(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
    }
}

fn parse_puzzle(text: &str, convention: ConventionArg) -> Result<Spec, Failure> {
    let full = if text.contains('@') {
        text.to_string()
    } else {
        let c = match convention {
            ConventionArg::Demaine => "demaine",
            ConventionArg::Wastlund => "wastlund",
        };
        format!("{text}@{c}")
    };
    full.parse().map_err(usage("--puzzle"))
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse().map_err(usage("--word"))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(|e| Failure::Failed(e.to_string()))?;
    writeln!(out, "{line}").map_err(io)
}

fn status(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn demaine(spec: &Spec) -> Result<u32, Failure> {
    spec.demaine_k()
        .ok_or_else(|| Failure::Usage("expected a threshold puzzle".into()))
}

fn build(method: Method, k: u32, n: u8) -> Result<ConstructionReport, Failure> {
    let mismatch =
        |needs: &str| Failure::Usage(format!("method {method:?} builds {needs}, not {k}-of-{n}"));
    let mode = default_check_mode(n);
    let report = match method {
        Method::Split => demaine_split(k, n),
        Method::Wastlund if k + 2 == n as u32 => wastlund_corank2(n),
        Method::Wastlund => return Err(mismatch("(n-2)-of-n")),
        Method::Chain if k == n as u32 => {
            ConstructionReport::build("chain", k, n, chain_expr(&nails(n)), mode)
        }
        Method::Chain => return Err(mismatch("n-of-n")),
        Method::Updown if k + 1 == n as u32 => {
            ConstructionReport::build("updown", k, n, chain_updown_expr(&nails(n)), mode)
        }
        Method::Updown => return Err(mismatch("(n-1)-of-n")),
        Method::Balanced if k == 1 => balanced_k1(&nails(n))
            .and_then(|e| ConstructionReport::build("balanced", k, n, e, mode)),
        Method::Balanced => return Err(mismatch("1-of-n")),
        Method::Extension => extension_greedy(k, n),
    };
    report.map_err(usage("construct"))
}

fn construct(a: cli::ConstructArgs, out: &mut dyn Write) -> Outcome {
    let spec = parse_puzzle(&a.puzzle, a.convention)?;
    let k = demaine(&spec)?;
    let r = build(a.method, k, spec.n())?;
    if a.json {
        json_line(out, &ConstructionRecord::from(&r))?;
    } else {
        writeln!(out, "method: {}", r.method).map_err(io)?;
        writeln!(out, "puzzle: {}-of-{}", r.k, r.n).map_err(io)?;
        writeln!(out, "word: {}", r.word).map_err(io)?;
        writeln!(out, "unreduced: {}", r.unreduced).map_err(io)?;
        writeln!(out, "reduced: {}", r.reduced).map_err(io)?;
        writeln!(out, "verdict: {}", r.verdict).map_err(io)?;
    }
    Ok(status(r.verdict.is_ok()))
}

fn mode_for(mode: Option<ModeArg>, n: u8) -> CheckMode {
    match mode {
        Some(ModeArg::Full) => CheckMode::Full,
        Some(ModeArg::Essential) => CheckMode::Essential,
        None => default_check_mode(n),
    }
}

fn mode_name(m: CheckMode) -> &'static str {
    match m {
        CheckMode::Full => "full",
        CheckMode::Essential => "essential",
    }
}

fn check_one(
    word: &Word,
    spec: &Spec,
    mode: Option<ModeArg>,
    json: bool,
    out: &mut dyn Write,
) -> Result<bool, Failure> {
    let mode = mode_for(mode, spec.n());
    let v = spec.check(word, mode).map_err(usage("check"))?;
    if json {
        json_line(
            out,
            &CheckRecord::new(
                word.to_string(),
                spec.to_string(),
                mode_name(mode).into(),
                &v,
            ),
        )?;
    } else {
        writeln!(out, "{v}").map_err(io)?;
    }
    Ok(v.is_ok())
}

fn check(a: cli::CheckArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    let fixed = a
        .puzzle
        .as_deref()
        .map(|p| parse_puzzle(p, a.convention))
        .transpose()?;
    if let Some(text) = &a.word {
        let spec = fixed.ok_or_else(|| Failure::Usage("--word needs --puzzle".into()))?;
        let ok = check_one(&parse_word(text)?, &spec, a.mode, a.json, out)?;
        return Ok(status(ok));
    }
    let mut all_ok = true;
    let mut seen = 0;
    for (i, line) in stdin.lines().enumerate() {
        let line = line.map_err(io)?;
        if line.trim().is_empty() {
            continue;
        }
        seen += 1;
        let at = format!("stdin line {}", i + 1);
        let rec: records::WordInput = serde_json::from_str(&line).map_err(usage(&at))?;
        let word: Word = rec.word.parse().map_err(usage(&at))?;
        let spec = match (&fixed, rec.k, rec.n) {
            (Some(s), _, _) => s.clone(),
            (None, Some(k), Some(n)) => Spec::threshold(k, n).map_err(usage(&at))?,
            _ => {
                return Err(Failure::Usage(format!(
                    "{at}: record names no puzzle and no --puzzle given"
                )))
            }
        };
        all_ok &= check_one(&word, &spec, a.mode, a.json, out)?;
    }
    if seen == 0 {
        return Err(Failure::Usage("no --word and no records on stdin".into()));
    }
    Ok(status(all_ok))
}

fn canon(a: cli::CanonArgs, out: &mut dyn Write) -> Outcome {
    let c = canonical_form(&parse_word(&a.word)?).map_err(usage("--word"))?;
    if a.json {
        json_line(
            out,
            &serde_json::json!({ "word": a.word, "canonical": c.to_string() }),
        )?;
    } else {
        writeln!(out, "{c}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn search(a: cli::SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let spec = parse_puzzle(&a.puzzle, a.convention)?;
    let mut cfg = SearchConfig {
        node_budget: a.budget,
        allow_long: a.long,
        ..SearchConfig::default()
    };
    if let Some(every) = a.progress_every {
        cfg.progress_every = every.max(1);
    }
    let threads = a.threads.unwrap_or(1).max(1);
    let sharding = match (a.shards, a.shard_id) {
        (Some(shards), Some(id)) => {
            cfg = cfg.shard(shards, id);
            Sharding {
                shards,
                shard_id: Some(id),
                threads: 1,
            }
        }
        _ => Sharding {
            shards: threads,
            shard_id: None,
            threads,
        },
    };
    let progress = |shard: u32, nodes: u64| eprintln!("progress: shard {shard}, {nodes} nodes");
    let start = Instant::now();
    let result: Result<Option<SearchOutcome>, _> = match (a.exact_len, a.max_len) {
        (Some(len), _) if sharding.shard_id.is_some() => {
            let id = cfg.shard_id;
            phang_core::search::search_length_with_progress(&spec, len, &cfg, &mut |n| {
                progress(id, n)
            })
            .map(Some)
        }
        (Some(len), _) => {
            parallel::search_length_threaded(&spec, len, &cfg, threads, &progress).map(Some)
        }
        (None, Some(max)) => parallel::find_minimum_threaded(&spec, max, &cfg, threads, &progress)
            .map(|m| match m {
                Minimum::Found(o) => Some(o),
                Minimum::NotFound { .. } => None,
            }),
        (None, None) => unreachable!("clap requires one length flag"),
    };
    let seconds = start.elapsed().as_secs_f64();
    let outcome = match result {
        Ok(o) => o,
        Err(e @ phang_core::search::SearchError::BudgetExceeded { .. }) => {
            return Err(Failure::Failed(e.to_string()));
        }
        Err(e) => return Err(Failure::Usage(e.to_string())),
    };
    let Some(o) = outcome else {
        let max = a.max_len.unwrap_or(0);
        if a.json {
            json_line(
                out,
                &serde_json::json!({ "spec": spec.to_string(), "max_length": max, "solutions": [], "seconds": seconds }),
            )?;
        } else {
            writeln!(out, "{spec}: no solution up to length {max}").map_err(io)?;
        }
        return Ok(EXIT_OK);
    };
    if a.json {
        json_line(out, &SearchRecord::new(&o, seconds, sharding))?;
    } else {
        let shard_note = match sharding.shard_id {
            Some(id) => format!(", shard {id} of {}", sharding.shards),
            None => String::new(),
        };
        writeln!(
            out,
            "{} length {}: {} solution(s), {} nodes{shard_note}",
            o.spec,
            o.length,
            o.solutions.len(),
            o.nodes_explored
        )
        .map_err(io)?;
        for s in &o.solutions {
            writeln!(out, "{s}").map_err(io)?;
        }
        let _ = writeln!(err, "elapsed: {seconds:.3} s");
    }
    Ok(EXIT_OK)
}

fn table(a: cli::TableArgs, out: &mut dyn Write) -> Outcome {
    let rows = length_table(a.k, a.max_i).map_err(usage("table"))?;
    if !a.json {
        writeln!(
            out,
            "{:>3} {:>12} {:>28} {:>10}",
            "i", "n", "length", "ratio"
        )
        .map_err(io)?;
    }
    for r in rows {
        if a.json {
            json_line(
                out,
                &TableRecord {
                    k: a.k,
                    i: r.i,
                    n: r.n,
                    length: r.length.to_string(),
                    ratio: r.ratio,
                },
            )?;
        } else {
            let ratio = r
                .ratio
                .map(|x| format!("{x:.6}"))
                .unwrap_or_else(|| "-".into());
            writeln!(out, "{:>3} {:>12} {:>28} {:>10}", r.i, r.n, r.length, ratio).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn show_catalog(a: cli::CatalogArgs, out: &mut dyn Write) -> Outcome {
    let names: Vec<&str> = match &a.name {
        Some(n) => vec![n.as_str()],
        None => CATALOG_NAMES.to_vec(),
    };
    let mut all_ok = true;
    for name in names {
        let r = catalog(name).map_err(usage("--name"))?;
        all_ok &= r.verdict.is_ok();
        if a.json {
            json_line(out, &ConstructionRecord::from(&r))?;
        } else if a.name.is_some() {
            writeln!(
                out,
                "{name}: unreduced {} reduced {} {}",
                r.unreduced, r.reduced, r.verdict
            )
            .map_err(io)?;
            writeln!(out, "expr: {}", r.expr).map_err(io)?;
            writeln!(out, "word: {}", r.word).map_err(io)?;
        } else {
            writeln!(
                out,
                "{name:<16} {:>4} {:>4}  {}",
                r.unreduced, r.reduced, r.verdict
            )
            .map_err(io)?;
        }
    }
    Ok(status(all_ok))
}

fn render_cmd(a: cli::RenderArgs, out: &mut dyn Write) -> Outcome {
    let svg = render::render_svg(&parse_word(&a.word)?).map_err(usage("render"))?;
    match a.out {
        Some(path) => std::fs::write(&path, svg)
            .map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))?,
        None => out.write_all(svg.as_bytes()).map_err(io)?,
    }
    Ok(EXIT_OK)
}
