//! The `tlh` command line. [`run`] does all the work so the binary stays a
//! one-liner and tests can drive it in process.
//!
//! Exit codes: 0 on success, 1 when a check suite fails, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{run_suite, Suite, SuiteParams};
use crate::fillings::{c_statistic, f_sigma, g_sigma, pair_of_sigma, SigmaSeq};
use crate::links::{colored_torus_homology, normalized_homology, torus_link_homology, ColorOrder, TorusLinkSpec};
use crate::recursion::{eval_p, MemoStats, MemoTable};
use crate::ring::{render, render::poly_to_json, to_json, Format, GradedSeries, LaurentPoly, Monomial};
use crate::sequences::{parse_int_seq, SeqPair};

#[derive(Parser, Debug)]
#[command(name = "tlh", version, about = "Triply graded homology of positive torus links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct OutputOpts {
    /// Also print the expansion up to this q-degree
    #[arg(long, value_name = "D")]
    expand: Option<u32>,
    /// human, json or latex
    #[arg(long, default_value = "human", value_parser = parse_format)]
    format: Format,
    /// Load and save the memo table in FILE
    #[arg(long, value_name = "FILE")]
    cache: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OrderArg {
    /// 1^l 0^(ml-l), 1^l 0^(nl-l)
    Theorem,
    /// 0^(ml-l) 1^l, 0^(nl-l) 1^l
    Example,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Poincaré series of the torus link T(m, n)
    Torus {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Apply the (Q^-4 A T)^((e+c-n)/2) normalization
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// p(v, w) for binary strings of equal weight (use "" for the empty string)
    Pair {
        v: String,
        w: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// T(m, n) colored by Sym^l, up to an overall monomial
    Colored {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        l: i64,
        #[arg(long, value_enum, default_value = "both")]
        order: OrderArg,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// f(σ) = p(v(σ), w(σ)) for σ in {0..r}^N given as a comma separated list
    Sigma {
        r: u32,
        sigma: String,
        /// Print g(σ) = p(v(σ), w(σ)0) instead
        #[arg(long)]
        g: bool,
        /// Also print inv(σ), c(σ) and rev(σ)
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run a check suite: paper-values, symmetry, positivity, lemma53, roundtrip, unknot-family
    Check {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Row bound for σ sequences (lemma53, roundtrip)
        #[arg(long)]
        r: Option<u32>,
        /// Length bound; its meaning depends on the suite
        #[arg(long)]
        len: Option<usize>,
        /// Truncation q-degree (positivity)
        #[arg(long)]
        depth: Option<u32>,
        /// Number of random inputs (symmetry, lemma53)
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for the random inputs
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// A failure to report on stderr together with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        msg: msg.to_string(),
    }
}

/// Reads `TLH_THREADS`; unset means "all cores".
pub fn threads_setting() -> Result<Option<usize>, String> {
    match std::env::var("TLH_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("TLH_THREADS must be a positive integer, got `{s}`")),
        },
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let threads = match threads_setting() {
        Ok(t) => t,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return 2;
        }
    };
    // output is buffered so the command can run on the pool
    let (mut obuf, mut ebuf) = (Vec::new(), Vec::new());
    let status = pool.install(|| dispatch(cli.command, &mut obuf, &mut ebuf));
    let _ = out.write_all(&obuf);
    let _ = err.write_all(&ebuf);
    match status {
        Ok(()) => 0,
        Err(f) => {
            if !f.msg.is_empty() {
                let _ = writeln!(err, "error: {}", f.msg);
            }
            f.code
        }
    }
}

/// Everything a computing command hands to [`emit`].
struct Outcome {
    command: &'static str,
    params: Value,
    result: GradedSeries,
    /// Printed as `label = series` in text formats.
    label: Option<&'static str>,
    /// Extra human-readable lines printed before the result.
    lines: Vec<String>,
    /// Extra JSON fields merged into the envelope.
    extra: Vec<(&'static str, Value)>,
}

fn open_memo(cache: &Option<PathBuf>, err: &mut dyn Write) -> MemoTable {
    let memo = MemoTable::new();
    if let Some(path) = cache {
        if path.exists() {
            if let Err(e) = memo.load(path) {
                let _ = writeln!(err, "warning: ignoring cache {}: {e}", path.display());
            }
        }
    }
    memo
}

fn close_memo(memo: &MemoTable, cache: &Option<PathBuf>) -> Result<(), Failure> {
    if let Some(path) = cache {
        memo.save(path).map_err(|e| usage(format!("cannot write cache {}: {e}", path.display())))?;
    }
    Ok(())
}

fn json_value(text: &str) -> Value {
    serde_json::from_str(text).expect("encoder emits valid json")
}

fn monomial_json(m: Monomial) -> Value {
    json!([m.q, m.a, m.t])
}

fn stats_json(s: &MemoStats) -> Value {
    json!({
        "entries": s.entries,
        "hits": s.hits,
        "misses": s.misses,
        "max_depth": s.max_depth,
    })
}

fn render_expansion(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Latex => render(&GradedSeries::from_poly(p.clone()), Format::Latex),
        _ => crate::ring::render::render_poly(p),
    }
}

fn emit(
    o: Outcome,
    opts: &OutputOpts,
    memo: &MemoTable,
    start: Instant,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let expansion = opts.expand.map(|d| (d, o.result.expand(d)));
    let stats = memo.stats();
    let elapsed = start.elapsed();
    let io = |e: std::io::Error| usage(format!("cannot write output: {e}"));
    match opts.format {
        Format::Json => {
            let mut env = json!({
                "command": o.command,
                "params": o.params,
                "result": json_value(&to_json(&o.result)),
                "expansion": match &expansion {
                    Some((d, p)) => json!({"max_q_degree": d, "terms": json_value(&poly_to_json(p))}),
                    None => Value::Null,
                },
                "memo": stats_json(&stats),
                "timing_ms": elapsed.as_millis() as u64,
            });
            let obj = env.as_object_mut().expect("object literal");
            for (k, v) in o.extra {
                obj.insert(k.to_string(), v);
            }
            writeln!(out, "{env}").map_err(io)?;
        }
        format => {
            for line in &o.lines {
                writeln!(out, "{line}").map_err(io)?;
            }
            match o.label {
                Some(l) => writeln!(out, "{l} = {}", render(&o.result, format)),
                None => writeln!(out, "{}", render(&o.result, format)),
            }
            .map_err(io)?;
            if let Some((d, p)) = &expansion {
                writeln!(out, "expansion to q-degree {d}: {}", render_expansion(p, format)).map_err(io)?;
            }
            let _ = writeln!(err, "memo: {stats}; {} ms", elapsed.as_millis());
        }
    }
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let start = Instant::now();
    match cmd {
        Command::Torus {
            m,
            n,
            normalized,
            out: opts,
        } => {
            let spec = TorusLinkSpec::new(m, n).map_err(usage)?;
            let memo = open_memo(&opts.cache, err);
            let result = if normalized {
                normalized_homology(spec, &memo).map_err(usage)?
            } else {
                torus_link_homology(spec, &memo)
            };
            close_memo(&memo, &opts.cache)?;
            let o = Outcome {
                command: "torus",
                params: json!({"m": m, "n": n, "normalized": normalized}),
                result,
                label: None,
                lines: Vec::new(),
                extra: Vec::new(),
            };
            emit(o, &opts, &memo, start, out, err)
        }
        Command::Pair { v, w, out: opts } => {
            let pair = SeqPair::parse(&v, &w).map_err(usage)?;
            let memo = open_memo(&opts.cache, err);
            let result = eval_p(&pair, &memo);
            close_memo(&memo, &opts.cache)?;
            let o = Outcome {
                command: "pair",
                params: json!({"v": v, "w": w}),
                result,
                label: None,
                lines: Vec::new(),
                extra: Vec::new(),
            };
            emit(o, &opts, &memo, start, out, err)
        }
        Command::Colored {
            m,
            n,
            l,
            order,
            out: opts,
        } => {
            let memo = open_memo(&opts.cache, err);
            let c = colored_torus_homology(m, n, l, &memo).map_err(usage)?;
            close_memo(&memo, &opts.cache)?;
            let (m_, n_, l_) = (c.m, c.n, c.l);
            let first = ColorOrder::OnesFirst.pair(m_, n_, l_);
            let last = ColorOrder::OnesLast.pair(m_, n_, l_);
            let mut lines = Vec::new();
            let mut extra = Vec::new();
            let result = match order {
                OrderArg::Theorem => c.ones_first.clone(),
                OrderArg::Example => c.ones_last.clone(),
                OrderArg::Both => {
                    let ratio = c.orders_agree_up_to_monomial();
                    lines.push(format!("order {first}: {}", render(&c.ones_first, opts.format)));
                    lines.push(format!("order {last}: {}", render(&c.ones_last, opts.format)));
                    lines.push(match ratio {
                        Some(x) => format!("orders agree up to the monomial {}", render(&GradedSeries::monomial(x), Format::Human)),
                        None => "orders differ (not related by a monomial)".to_string(),
                    });
                    extra.push((
                        "orders",
                        json!({
                            "theorem": {"pair": first.to_string(), "series": json_value(&to_json(&c.ones_first))},
                            "example": {"pair": last.to_string(), "series": json_value(&to_json(&c.ones_last))},
                            "ratio": ratio.map(monomial_json),
                        }),
                    ));
                    c.ones_first.clone()
                }
            };
            let order_name = match order {
                OrderArg::Theorem => "theorem",
                OrderArg::Example => "example",
                OrderArg::Both => "both",
            };
            let o = Outcome {
                command: "colored",
                params: json!({"m": m, "n": n, "l": l, "order": order_name}),
                result,
                label: None,
                lines,
                extra,
            };
            emit(o, &opts, &memo, start, out, err)
        }
        Command::Sigma {
            r,
            sigma,
            g,
            stats,
            out: opts,
        } => {
            let entries = parse_int_seq(&sigma).map_err(usage)?;
            let s = SigmaSeq::new(r, entries).map_err(usage)?;
            let memo = open_memo(&opts.cache, err);
            let result = if g { g_sigma(&s, &memo) } else { f_sigma(&s, &memo) };
            close_memo(&memo, &opts.cache)?;
            let pair = pair_of_sigma(&s);
            let mut lines = vec![format!("v = {}", pair.v()), format!("w = {}", pair.w())];
            let mut extra = vec![
                ("v", json!(pair.v().to_string())),
                ("w", json!(pair.w().to_string())),
            ];
            if stats {
                let rev = s.rev();
                lines.push(format!("inv = {}", s.inversions()));
                lines.push(format!("c = {}", c_statistic(&s)));
                lines.push(format!("rev = {rev}"));
                extra.push((
                    "stats",
                    json!({"inv": s.inversions(), "c": c_statistic(&s), "rev": rev.entries()}),
                ));
            }
            let o = Outcome {
                command: "sigma",
                params: json!({"r": r, "sigma": s.entries(), "g": g}),
                result,
                label: Some(if g { "g" } else { "f" }),
                lines,
                extra,
            };
            emit(o, &opts, &memo, start, out, err)
        }
        Command::Check {
            suite,
            r,
            len,
            depth,
            samples,
            seed,
        } => {
            let params = SuiteParams {
                r,
                len,
                depth,
                samples,
                seed,
            };
            if r == Some(0) {
                return Err(usage("--r must be positive"));
            }
            let memo = MemoTable::new();
            let report = run_suite(suite, &params, &memo);
            write!(out, "{report}").map_err(|e| usage(format!("cannot write output: {e}")))?;
            let _ = writeln!(err, "memo: {}; {} ms", memo.stats(), start.elapsed().as_millis());
            if report.all_pass() {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    msg: format!("{} failed", suite),
                })
            }
        }
    }
}
