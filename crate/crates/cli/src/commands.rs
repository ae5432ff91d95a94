use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use skewbrace::brace::{self, format_brace_text, parse_brace_text, verify_yang_baxter, yb_map, YbVerdict};
use skewbrace::db::{self, Database};
use skewbrace::enumerate::{enumerate_order, ENUMERATION_MAX_ORDER};
use skewbrace::{ideal, radical, SkewBrace};

use crate::output::{Format, KeyValues, Table};
use crate::{Cli, Command, DbCommand, EnumerateArgs, Orders, PopulationArgs, QueryArgs, SourceArgs};

/// Orders enumerated on the fly only with `--deep`.
const DEEP_FROM: usize = 16;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] skewbrace::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

pub enum Outcome {
    Clean,
    /// A checked theorem failed on some brace.
    Violations,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::Enumerate(args) => cmd_enumerate(args, f),
        Command::Analyze(args) => cmd_analyze(args, f),
        Command::Check(args) => cmd_check(args, f),
        Command::Experiments(args) => cmd_experiments(args, f),
        Command::Db(cmd) => cmd_db(cmd, f),
        Command::Ybe(args) => cmd_ybe(args, f),
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn load_db(path: &Path) -> Result<Database> {
    let file = File::open(path).map_err(io_err(path))?;
    Ok(db::read_db(BufReader::new(file))?)
}

fn save_db(path: &Path, database: &Database) -> Result<()> {
    let file = File::create(path).map_err(io_err(path))?;
    let mut w = BufWriter::new(file);
    db::write_db(database, &mut w)?;
    w.flush().map_err(io_err(path))
}

fn enumerate_checked(n: usize, classical: bool, deep: bool) -> Result<Vec<SkewBrace>> {
    if n >= DEEP_FROM && n <= ENUMERATION_MAX_ORDER && !deep {
        return Err(CliError::Usage(format!("order {n} requires --deep")));
    }
    Ok(enumerate_order(n, classical)?)
}

fn census_output(rows: &[(usize, usize, usize)], f: Format) -> String {
    match f {
        Format::Human => rows.iter().map(|(n, s, b)| format!("{n} {s} {b}\n")).collect(),
        _ => {
            let mut t = Table::new(&["order", "skew", "classical"]);
            for (n, s, b) in rows {
                t.push(vec![n.to_string(), s.to_string(), b.to_string()]);
            }
            t.render(f)
        }
    }
}

fn cmd_enumerate(args: &EnumerateArgs, f: Format) -> Result<Outcome> {
    let mut all = vec![];
    for n in args.order.iter() {
        let braces = enumerate_checked(n, args.classical, args.deep)?;
        let (s, b) = skewbrace::enumerate::census_counts(&braces);
        print!("{}", census_output(&[(n, s, b)], f));
        std::io::stdout().flush().ok();
        all.extend(braces);
    }
    if let Some(path) = &args.out {
        let database = Database::from_braces(&all);
        save_db(path, &database)?;
        eprintln!("wrote {} records to {}", database.entries.len(), path.display());
    }
    Ok(Outcome::Clean)
}

/// Database for the given orders: loaded from disk or enumerated.
fn population_db(db_path: Option<&Path>, orders: Option<&Orders>, deep: bool) -> Result<Database> {
    match db_path {
        Some(p) => {
            let mut database = load_db(p)?;
            if let Some(o) = orders {
                database.entries.retain(|e| o.iter().contains(&e.order));
            }
            Ok(database)
        }
        None => {
            let orders = orders.cloned().unwrap_or_else(|| "1..12".parse().unwrap());
            let mut all = vec![];
            for n in orders.iter() {
                all.extend(enumerate_checked(n, false, deep)?);
            }
            Ok(Database::from_braces(&all))
        }
    }
}

struct Member {
    order: usize,
    index: usize,
    brace: SkewBrace,
}

fn population(args: &PopulationArgs) -> Result<Vec<Member>> {
    let database = population_db(args.db.as_deref(), args.order.as_ref(), args.deep)?;
    database
        .entries
        .par_iter()
        .map(|e| {
            Ok(Member {
                order: e.order,
                index: e.index,
                brace: e.brace()?,
            })
        })
        .collect()
}

fn resolve_source(args: &SourceArgs) -> Result<(String, SkewBrace)> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        return Ok((path.display().to_string(), parse_brace_text(&text)?));
    }
    let (Some(order), Some(index)) = (args.order, args.index) else {
        return Err(CliError::Usage("give --file, or --order and --index".into()));
    };
    let order_range = Orders(order..=order);
    let database = population_db(args.db.as_deref(), Some(&order_range), args.deep)?;
    let brace = database.get(order, index)?.brace()?;
    Ok((format!("{order}:{index}"), brace))
}

fn label(b: &SkewBrace) -> String {
    brace::describe(b).short_label()
}

fn flags(b: &SkewBrace) -> String {
    let mut out = vec![];
    if b.is_classical() {
        out.push("classical");
    }
    if b.is_trivial() {
        out.push("trivial");
    }
    if b.is_two_sided() {
        out.push("two-sided");
    }
    if b.is_star_associative() {
        out.push("star-assoc");
    }
    if out.is_empty() {
        "-".into()
    } else {
        out.join(",")
    }
}

fn sizes(chain: &radical::SeriesChain) -> String {
    let v: Vec<String> = chain.terms.iter().map(|t| t.len().to_string()).collect();
    v.join(" ")
}

fn verdict_text(v: YbVerdict) -> String {
    match v {
        YbVerdict::Solution => "solution".into(),
        YbVerdict::NotBijective => "not bijective".into(),
        YbVerdict::BraidFails(x, y, z) => format!("braid relation fails at ({x}, {y}, {z})"),
        YbVerdict::LeftDegenerate(x) => format!("degenerate: sigma_{x} not bijective"),
        YbVerdict::RightDegenerate(y) => format!("degenerate: tau_{y} not bijective"),
    }
}

fn cmd_analyze(args: &SourceArgs, f: Format) -> Result<Outcome> {
    let (source, a) = resolve_source(args)?;
    let d = brace::describe(&a);
    let mut kv = KeyValues::default();
    kv.add("source", source);
    kv.add("order", a.order());
    kv.add("additive", d.additive.label());
    kv.add("multiplicative", d.multiplicative.label());
    kv.add("flags", flags(&a));
    kv.add("socle", brace::socle(&a));
    let ideals = ideal::ideal_masks(&a);
    kv.add("ideals", ideals.len());
    for i in &ideals {
        kv.add("ideal", i);
    }
    let left = ideal::all_left_ideals(&a);
    kv.add("left_ideals", left.len());
    for l in &left {
        let kind = match l.kind {
            ideal::IdealKind::Ideal => "ideal",
            ideal::IdealKind::LeftIdeal => "left",
        };
        kv.add("left_ideal", format!("{} {kind}", l.mask));
    }
    kv.add("left_series", sizes(&radical::left_series(&a)));
    kv.add("right_series", sizes(&radical::right_series(&a)));
    kv.add("derived_series", sizes(&radical::derived_series(&a)));
    let mut outcome = Outcome::Clean;
    match radical::radical_report(&a) {
        Ok(r) => {
            kv.add("left_nilpotent", r.is_left_nilpotent);
            kv.add("right_nilpotent", r.is_right_nilpotent);
            kv.add("solvable", r.is_solvable);
            kv.add("simple", r.is_simple);
            kv.add("prime", r.is_prime);
            kv.add("semiprime", r.is_semiprime);
            kv.add("baer", &r.baer);
            kv.add("wedderburn", &r.wedderburn);
            kv.add("prime_ideals", r.prime_ideals.len());
            for p in &r.prime_ideals {
                kv.add("prime_ideal", p);
            }
        }
        Err(e) => {
            kv.add("radical_report", format!("FAILED: {e}"));
            outcome = Outcome::Violations;
        }
    }
    let r = yb_map(&a);
    kv.add("yang_baxter", verdict_text(verify_yang_baxter(&r)));
    kv.add("involutive", r.is_involutive());
    print!("{}", kv.render(f));
    Ok(outcome)
}

fn cmd_ybe(args: &SourceArgs, f: Format) -> Result<Outcome> {
    let (source, a) = resolve_source(args)?;
    let r = yb_map(&a);
    let verdict = verify_yang_baxter(&r);
    let mut kv = KeyValues::default();
    kv.add("source", source);
    kv.add("order", a.order());
    kv.add("yang_baxter", verdict_text(verdict));
    kv.add("involutive", r.is_involutive());
    kv.add("classical", a.is_classical());
    print!("{}", kv.render(f));
    Ok(if verdict.holds() {
        Outcome::Clean
    } else {
        Outcome::Violations
    })
}

fn cmd_check(args: &PopulationArgs, f: Format) -> Result<Outcome> {
    let members = population(args)?;
    let rows: Vec<(Vec<String>, bool)> = members
        .par_iter()
        .map(|m| {
            let b = &m.brace;
            let mut row = vec![m.order.to_string(), m.index.to_string(), label(b), flags(b)];
            match radical::radical_report(b) {
                Ok(r) => {
                    row.extend([
                        r.baer.len().to_string(),
                        r.wedderburn.len().to_string(),
                        r.prime_ideals.len().to_string(),
                        "ok".into(),
                    ]);
                    (row, true)
                }
                Err(e) => {
                    row.extend(["-".into(), "-".into(), "-".into(), format!("FAILED: {e}")]);
                    (row, false)
                }
            }
        })
        .collect();
    let mut t = Table::new(&["order", "index", "brace", "flags", "baer", "wedderburn", "primes", "status"]);
    let mut clean = true;
    for (row, ok) in rows {
        clean &= ok;
        t.push(row);
    }
    print!("{}", t.render(f));
    Ok(if clean { Outcome::Clean } else { Outcome::Violations })
}

fn is_composite(n: usize) -> bool {
    n > 3 && (2..n).any(|d| n.is_multiple_of(d))
}

fn cmd_experiments(args: &PopulationArgs, f: Format) -> Result<Outcome> {
    let members = population(args)?;
    let facts: Vec<(bool, bool, bool, bool)> = members
        .par_iter()
        .map(|m| {
            let b = &m.brace;
            (b.is_classical(), b.is_star_associative(), b.is_two_sided(), radical::is_simple(b))
        })
        .collect();
    let mut orders: Vec<usize> = members.iter().map(|m| m.order).collect();
    orders.dedup();

    let mut sweep = Table::new(&[
        "order",
        "classical",
        "classical_star_assoc",
        "counterexamples",
        "star_assoc_not_two_sided",
    ])
    .titled("two-sided sweep");
    let mut witnesses = Table::new(&["order", "index", "brace", "classical"]).titled("star-associative, not two-sided");
    let mut simple = Table::new(&["order", "simple", "composite"]).titled("simple braces");
    let mut simple_list = Table::new(&["order", "index", "brace"]).titled("simple braces of composite order");
    let mut counterexamples_total = 0;
    for &n in &orders {
        let idx: Vec<usize> = (0..members.len()).filter(|&k| members[k].order == n).collect();
        let classical = idx.iter().filter(|&&k| facts[k].0).count();
        let classical_assoc = idx.iter().filter(|&&k| facts[k].0 && facts[k].1).count();
        let counter = idx.iter().filter(|&&k| facts[k].0 && facts[k].1 && !facts[k].2).count();
        let not_two_sided: Vec<usize> = idx.iter().copied().filter(|&k| facts[k].1 && !facts[k].2).collect();
        counterexamples_total += counter;
        sweep.push(vec![
            n.to_string(),
            classical.to_string(),
            classical_assoc.to_string(),
            counter.to_string(),
            not_two_sided.len().to_string(),
        ]);
        for k in not_two_sided {
            let m = &members[k];
            witnesses.push(vec![
                n.to_string(),
                m.index.to_string(),
                label(&m.brace),
                m.brace.is_classical().to_string(),
            ]);
        }
        let simples: Vec<usize> = idx.iter().copied().filter(|&k| facts[k].3).collect();
        simple.push(vec![n.to_string(), simples.len().to_string(), is_composite(n).to_string()]);
        if is_composite(n) {
            for k in simples {
                let m = &members[k];
                simple_list.push(vec![n.to_string(), m.index.to_string(), label(&m.brace)]);
            }
        }
    }

    let scans: Vec<Vec<Vec<String>>> = members
        .par_iter()
        .map(|m| {
            let mut rows = vec![];
            if let Some((k, t)) = radical::non_normal_left_series_term(&m.brace) {
                rows.push(vec![
                    m.order.to_string(),
                    m.index.to_string(),
                    label(&m.brace),
                    format!("left series term {} not normal in (A,+)", k + 1),
                    t.to_string(),
                ]);
            }
            if let Some((k, t)) = radical::non_ideal_derived_term(&m.brace) {
                rows.push(vec![
                    m.order.to_string(),
                    m.index.to_string(),
                    label(&m.brace),
                    format!("derived term {} not an ideal", k + 1),
                    t.to_string(),
                ]);
            }
            rows
        })
        .collect();
    let mut series = Table::new(&["order", "index", "brace", "finding", "term"]).titled("series witnesses");
    for row in scans.into_iter().flatten() {
        series.push(row);
    }

    let sections = [sweep, witnesses, simple, simple_list, series];
    let rendered: Vec<String> = sections.iter().map(|t| t.render(f)).collect();
    let sep = if f == Format::Records { "" } else { "\n" };
    print!("{}", rendered.join(sep));
    Ok(if counterexamples_total == 0 {
        Outcome::Clean
    } else {
        Outcome::Violations
    })
}

fn cmd_db(cmd: &DbCommand, f: Format) -> Result<Outcome> {
    match cmd {
        DbCommand::Pack { file, out } => {
            let text = std::fs::read_to_string(file).map_err(io_err(file))?;
            let b = parse_brace_text(&text)?;
            let database = Database::from_braces(&[b]);
            match out {
                Some(p) => save_db(p, &database)?,
                None => print!("{}", db::format_db(&database)),
            }
            Ok(Outcome::Clean)
        }
        DbCommand::Unpack(args) => {
            let (_, b) = resolve_source(args)?;
            print!("{}", format_brace_text(&b));
            Ok(Outcome::Clean)
        }
        DbCommand::Verify { db: path } => {
            let database = load_db(path)?;
            let mut kv = KeyValues::default();
            kv.add("records", database.entries.len());
            let outcome = match database.verify() {
                Ok(()) => {
                    kv.add("status", "ok");
                    Outcome::Clean
                }
                Err(e) => {
                    kv.add("status", format!("FAILED: {e}"));
                    Outcome::Violations
                }
            };
            print!("{}", kv.render(f));
            Ok(outcome)
        }
        DbCommand::Census { db: path } => {
            let database = load_db(path)?;
            print!("{}", census_output(&db::census(&database), f));
            Ok(Outcome::Clean)
        }
        DbCommand::Query(args) => cmd_query(args, f),
    }
}

fn cmd_query(args: &QueryArgs, f: Format) -> Result<Outcome> {
    let database = load_db(&args.db)?;
    let matches: Vec<Option<Vec<String>>> = database
        .entries
        .par_iter()
        .map(|e| -> Result<Option<Vec<String>>> {
            if args.order.as_ref().is_some_and(|o| !o.iter().contains(&e.order)) {
                return Ok(None);
            }
            let d = e.descriptor()?;
            let b = e.brace()?;
            let keep = args.additive.as_ref().is_none_or(|name| &d.additive.label() == name)
                && args.multiplicative.as_ref().is_none_or(|name| &d.multiplicative.label() == name)
                && (!args.classical || d.classical)
                && (!args.non_trivial || !d.trivial)
                && args.ideals.is_none_or(|k| d.ideal_count == k)
                && (!args.simple || radical::is_simple(&b));
            Ok(keep.then(|| vec![e.order.to_string(), e.index.to_string(), d.short_label(), flags(&b)]))
        })
        .collect::<Result<_>>()?;
    let mut t = Table::new(&["order", "index", "brace", "flags"]);
    for row in matches.into_iter().flatten() {
        t.push(row);
    }
    print!("{}", t.render(f));
    Ok(Outcome::Clean)
}
