//! The `weakrh` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when an audit
//! (`family --verify`, `check`) finds a failing claim or a table discrepancy.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::digits::{digit_count, to_digits, Base, DigitString, Natural};
use crate::enumeration::{reproduce_tables, scan_with, ScanRequest, StoreWriter};
use crate::error::{Error, Result};
use crate::families::{
    check_bound_theorems, check_digit_inequalities, check_zero_term_theorem, generate,
    sample_numbers, verify_family, Claim, ClaimReport, FamilyId, FamilySpec, DEFAULT_BUDGET,
};
use crate::solvers::{classify, extra_term_search, witnesses, ClassificationRecord, Mode, WitnessSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanOut {
    Text,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Bounds,
    ZeroTerm,
    Inequalities,
    Growth,
    Tables,
}

#[derive(Debug, Parser)]
#[command(
    name = "weakrh",
    version,
    about = "Classify, enumerate and audit weak Ramanujan-Hardy numbers in any base"
)]
struct Cli {
    /// Report format for classify, witnesses, extra-term, family and check.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Also print numbers as base-b digit strings.
    #[arg(long, global = true)]
    show_digits: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full classification record for each N.
    Classify {
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: Base,
        #[arg(required = true, value_parser = parse_natural)]
        n: Vec<Natural>,
    },
    /// Witness set of N in one mode.
    Witnesses {
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: Base,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(value_parser = parse_natural)]
        n: Natural,
    },
    /// Every N that admits extra term A.
    ExtraTerm {
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: Base,
        /// add or mul
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(value_parser = parse_natural)]
        a: Natural,
    },
    /// Classify every N in [lo, hi).
    Scan {
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: Base,
        #[arg(long, default_value = "0", value_parser = parse_natural)]
        lo: Natural,
        #[arg(long, value_parser = parse_natural)]
        hi: Natural,
        /// Comma-separated modes.
        #[arg(long, value_delimiter = ',', value_parser = parse_mode, default_value = "warh,wmrh,arh,mrh")]
        mode: Vec<Mode>,
        #[arg(long, value_enum, default_value = "text")]
        out: ScanOut,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "WEAKRH_JOBS", default_value = "0")]
        jobs: usize,
        #[arg(long, default_value = "4096")]
        chunk: u64,
        /// Also write every record to this CSV store.
        #[arg(long)]
        store: Option<PathBuf>,
    },
    /// List or verify members of an infinite family.
    Family {
        #[arg(long, value_parser = parse_family)]
        id: FamilyId,
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: Base,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        p: Option<u32>,
        /// Digit string I, in the chosen base.
        #[arg(long)]
        i: Option<String>,
        #[arg(long, default_value = "3")]
        count: usize,
        /// Most listed witnesses checked per member.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Run an audit suite.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: Base,
        /// bounds: largest N; inequalities: sample size; growth: members per family.
        #[arg(long)]
        limit: Option<u64>,
        /// Seed for the inequality sample.
        #[arg(long, default_value = "1")]
        seed: u64,
        /// Print passing instances too.
        #[arg(long)]
        verbose: bool,
    },
}

fn parse_base(s: &str) -> std::result::Result<Base, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_natural(s: &str) -> std::result::Result<Natural, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a nonnegative integer"))
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<FamilyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    format: Format,
    show_digits: bool,
}

impl Ctx<'_> {
    fn num(&self, n: &Natural, b: Base) -> String {
        if self.show_digits {
            format!("{n} [{}]_{b}", to_digits(n, b))
        } else {
            n.to_string()
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

fn joined(ws: &WitnessSet, sep: &str) -> String {
    let parts: Vec<String> = ws.witnesses().iter().map(|w| w.to_string()).collect();
    parts.join(sep)
}

fn symbol(mode: Mode) -> &'static str {
    if mode.is_weak() {
        "A"
    } else {
        "M"
    }
}

fn print_record(ctx: &mut Ctx, r: &ClassificationRecord) -> Result<()> {
    let b = r.base;
    let text = match ctx.format {
        Format::Text => {
            let mut t = format!(
                "{} (base {b})\n  s = {}, palindrome = {}, niven = {}\n",
                ctx.num(&r.n, b),
                r.digit_sum,
                r.is_palindrome,
                r.is_niven
            );
            for m in Mode::ALL {
                t.push_str(&format!("  {m}: {} {}\n", symbol(m), r.set(m)));
            }
            t
        }
        Format::Kv => {
            let mut t = format!(
                "n={}\nbase={b}\ns={}\npalindrome={}\nniven={}\n",
                r.n, r.digit_sum, r.is_palindrome, r.is_niven
            );
            if ctx.show_digits {
                t.push_str(&format!("digits={}\n", to_digits(&r.n, b)));
            }
            for m in Mode::ALL {
                t.push_str(&format!("{m}={}\n", joined(r.set(m), ";")));
            }
            t
        }
    };
    ctx.out.write_all(text.as_bytes()).map_err(io)
}

fn cmd_classify(ctx: &mut Ctx, base: Base, ns: &[Natural]) -> Result<u8> {
    for (i, n) in ns.iter().enumerate() {
        if i > 0 {
            writeln!(ctx.out).map_err(io)?;
        }
        print_record(ctx, &classify(n, base))?;
    }
    Ok(0)
}

fn cmd_witnesses(ctx: &mut Ctx, base: Base, mode: Mode, n: &Natural) -> Result<u8> {
    let w = witnesses(n, base, mode);
    let text = match ctx.format {
        Format::Text => format!("{}: {} \u{2208} {w}\n", ctx.num(n, base), symbol(mode)),
        Format::Kv => format!(
            "n={n}\nbase={base}\nmode={mode}\ncount={}\nwitnesses={}\n",
            w.len(),
            joined(&w, ";")
        ),
    };
    ctx.out.write_all(text.as_bytes()).map_err(io)?;
    Ok(0)
}

fn cmd_extra_term(ctx: &mut Ctx, base: Base, mode: Mode, a: &Natural) -> Result<u8> {
    let r = extra_term_search(a, base, mode)?;
    let bound = if mode.is_additive() {
        "k <= A + 4".to_string()
    } else if base.get() >= 6 {
        "k <= A + 4 (b >= 6)".to_string()
    } else {
        "k <= A + 5 (b <= 5)".to_string()
    };
    let parts: Vec<String> = r.instances.iter().map(|n| ctx.num(n, base)).collect();
    let text = match ctx.format {
        Format::Text => format!(
            "A = {a}, mode {mode}, base {base}: {{{}}}\nfinite by the digit-count bound {bound}; digit sums up to {} were searched and larger ones are excluded, so every instance has at most {} digits\n",
            parts.join(", "),
            r.digit_sum_cap,
            r.max_digits
        ),
        Format::Kv => {
            let plain: Vec<String> = r.instances.iter().map(|n| n.to_string()).collect();
            format!(
                "a={a}\nbase={base}\nmode={mode}\ncount={}\ninstances={}\nbound={bound}\ndigit_sum_cap={}\nmax_digits={}\n",
                r.instances.len(),
                plain.join(";"),
                r.digit_sum_cap,
                r.max_digits
            )
        }
    };
    ctx.out.write_all(text.as_bytes()).map_err(io)?;
    Ok(0)
}

fn record_json(r: &ClassificationRecord) -> serde_json::Value {
    let list = |m: Mode| -> Vec<String> { r.set(m).witnesses().iter().map(|w| w.to_string()).collect() };
    json!({
        "n": r.n.to_string(),
        "base": r.base.get(),
        "s": r.digit_sum,
        "palindrome": r.is_palindrome,
        "niven": r.is_niven,
        "warh": list(Mode::AdditiveWeak),
        "wmrh": list(Mode::MultiplicativeWeak),
        "arh": list(Mode::AdditiveRH),
        "mrh": list(Mode::MultiplicativeRH),
    })
}

enum Sink<'a, 'w> {
    Csv(Box<StoreWriter<&'a mut (dyn Write + 'w)>>),
    Raw(&'a mut (dyn Write + 'w)),
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    ctx: &mut Ctx,
    base: Base,
    lo: Natural,
    hi: Natural,
    modes: Vec<Mode>,
    out_fmt: ScanOut,
    jobs: usize,
    chunk: u64,
    store: Option<PathBuf>,
) -> Result<u8> {
    if out_fmt == ScanOut::Bfile && modes.len() != 1 {
        return Err(Error::InvalidParams("--out bfile needs exactly one --mode".into()));
    }
    let req = ScanRequest::new(base, lo, hi)
        .with_modes(&modes)
        .with_workers(jobs)
        .with_chunk_size(chunk);
    let mut store_w = match &store {
        Some(path) => {
            let f = File::create(path).map_err(|e| Error::io(path, e))?;
            Some(StoreWriter::new(BufWriter::new(f))?)
        }
        None => None,
    };
    let show = ctx.show_digits;
    let mut sink = if out_fmt == ScanOut::Csv {
        Sink::Csv(Box::new(StoreWriter::new(&mut *ctx.out)?))
    } else {
        Sink::Raw(&mut *ctx.out)
    };
    let mut index = 0usize;
    let mut first = true;
    if let Sink::Raw(out) = &mut sink {
        if out_fmt == ScanOut::Json {
            out.write_all(b"[").map_err(io)?;
        }
    }
    scan_with(&req, |r| {
        if let Some(w) = store_w.as_mut() {
            w.write(&r)?;
        }
        let member = modes.iter().any(|&m| r.is_member(m));
        let out = match &mut sink {
            Sink::Csv(w) => return w.write(&r),
            Sink::Raw(out) => out,
        };
        if !member {
            return Ok(());
        }
        match out_fmt {
            ScanOut::Json => {
                let sep = if first { "\n" } else { ",\n" };
                first = false;
                write!(out, "{sep}{}", record_json(&r)).map_err(io)
            }
            ScanOut::Bfile => {
                index += 1;
                writeln!(out, "{index} {}", r.n).map_err(io)
            }
            _ => {
                let mut line = r.n.to_string();
                if show {
                    line.push_str(&format!(" [{}]_{base}", to_digits(&r.n, base)));
                }
                for &m in &modes {
                    line.push_str(&format!("\t{m}={}", r.set(m)));
                }
                writeln!(out, "{line}").map_err(io)
            }
        }
    })?;
    match sink {
        Sink::Csv(w) => w.finish()?,
        Sink::Raw(out) => {
            if out_fmt == ScanOut::Json {
                out.write_all(if first { b"]\n" } else { b"\n]\n" }).map_err(io)?;
            }
        }
    }
    if let Some(w) = store_w {
        w.finish()?;
    }
    Ok(0)
}

fn claim_text(c: &Claim) -> String {
    match c {
        Claim::ExtraTerm { mode, term } => format!("{mode} extra term {term}"),
        Claim::Multiplier { mode, multiplier } => format!("{mode} multiplier {multiplier}"),
        Claim::Member(m) => format!("is {m}"),
        Claim::NotMember(m) => format!("not {m}"),
        Claim::NotNiven => "not Niven".into(),
        Claim::DigitSum(s) => format!("digit sum {s}"),
        Claim::CountAtLeast { mode, count } => format!("at least {count} {mode} witnesses"),
        Claim::CountExactly { mode, count } => format!("exactly {count} {mode} witnesses"),
        Claim::Step { step, .. } => format!("step {step} from previous member"),
        Claim::Truncated { listed, total } => format!("listing cut at {listed} of {total}"),
    }
}

fn print_report(ctx: &mut Ctx, report: &ClaimReport) -> Result<u8> {
    let text = match ctx.format {
        Format::Text => report.to_tsv(),
        Format::Kv => report.to_kv(),
    };
    ctx.out.write_all(text.as_bytes()).map_err(io)?;
    Ok(if report.has_failures() { 2 } else { 0 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_family(
    ctx: &mut Ctx,
    id: FamilyId,
    base: Base,
    k: Option<u64>,
    p: Option<u32>,
    i: Option<String>,
    count: usize,
    budget: usize,
    verify: bool,
) -> Result<u8> {
    let mut spec = FamilySpec::new(id, base).with_budget(budget);
    spec.k = k;
    spec.p = p;
    if let Some(i) = i {
        spec.i = Some(DigitString::parse(&i, base)?);
    }
    if verify {
        let report = verify_family(&spec, count)?;
        return print_report(ctx, &report);
    }
    for m in generate(&spec, count)? {
        let claims: Vec<String> = m.claims.iter().take(8).map(claim_text).collect();
        let more = m.claims.len().saturating_sub(8);
        let tail = if more > 0 { format!("; {more} more") } else { String::new() };
        let text = match ctx.format {
            Format::Text => format!(
                "{}\tN={}\tdigits={}\t{}{tail}\n",
                m.params,
                ctx.num(&m.n, base),
                digit_count(&m.n, base),
                claims.join("; ")
            ),
            Format::Kv => format!(
                "params={}\nn={}\nclaims={}{tail}\n\n",
                m.params,
                m.n,
                claims.join("; ")
            ),
        };
        ctx.out.write_all(text.as_bytes()).map_err(io)?;
    }
    Ok(0)
}

fn cmd_check(ctx: &mut Ctx, suite: Suite, base: Base, limit: Option<u64>, seed: u64, verbose: bool) -> Result<u8> {
    match suite {
        Suite::ZeroTerm => print_report(ctx, &check_zero_term_theorem(base)),
        Suite::Bounds => {
            let limit = Natural::from(limit.unwrap_or(100_000));
            print_report(ctx, &check_bound_theorems(base, &limit))
        }
        Suite::Inequalities => {
            let count = limit.unwrap_or(100_000) as usize;
            let sample = sample_numbers(base, count, 2, 24, seed);
            let mut report = check_digit_inequalities(base, &sample);
            if verbose {
                report.note(format!("sample seed {seed}, 2 to 24 digits"));
            }
            print_report(ctx, &report)
        }
        Suite::Growth => {
            let count = limit.unwrap_or(2) as usize;
            let mut report = ClaimReport::new(format!("growth families, base {base}"), format!("{count} members each"));
            for id in [FamilyId::F7, FamilyId::F8] {
                report.merge(verify_family(&FamilySpec::new(id, base), count)?);
            }
            if !verbose {
                report.entries.retain(|e| e.verdict == crate::families::Verdict::Fail);
            }
            print_report(ctx, &report)
        }
        Suite::Tables => {
            let report = reproduce_tables();
            let text = match ctx.format {
                Format::Text => report.to_text(),
                Format::Kv => report.to_kv(),
            };
            ctx.out.write_all(text.as_bytes()).map_err(io)?;
            Ok(if report.has_discrepancies() { 2 } else { 0 })
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    let mut ctx = Ctx {
        out,
        format: cli.format,
        show_digits: cli.show_digits,
    };
    match cli.command {
        Command::Classify { base, n } => cmd_classify(&mut ctx, base, &n),
        Command::Witnesses { base, mode, n } => cmd_witnesses(&mut ctx, base, mode, &n),
        Command::ExtraTerm { base, mode, a } => cmd_extra_term(&mut ctx, base, mode, &a),
        Command::Scan {
            base,
            lo,
            hi,
            mode,
            out,
            jobs,
            chunk,
            store,
        } => cmd_scan(&mut ctx, base, lo, hi, mode, out, jobs, chunk, store),
        Command::Family {
            id,
            base,
            k,
            p,
            i,
            count,
            budget,
            verify,
        } => cmd_family(&mut ctx, id, base, k, p, i, count, budget, verify),
        Command::Check {
            suite,
            base,
            limit,
            seed,
            verbose,
        } => cmd_check(&mut ctx, suite, base, limit, seed, verbose),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
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
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let code = match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    };
    let _ = out.flush();
    code
}
