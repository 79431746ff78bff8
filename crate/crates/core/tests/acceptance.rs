//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Timed criteria go through the command-line front end so the
//! measured path is the one users run.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;
use tlh::checks::fixtures::{self, SIGMA_EXAMPLE, TREFOIL_SYM2_MATCH};
use tlh::checks::{run_suite, CaseResult, Suite, SuiteParams, SuiteReport};
use tlh::recursion::MemoTable;
use tlh::ring::{from_json, render, Format, GradedSeries};

const FIXTURE_LIMIT: Duration = Duration::from_secs(1);
const TORUS_6_6_LIMIT: Duration = Duration::from_secs(1);
const TORUS_8_8_LIMIT: Duration = Duration::from_secs(10);
const TORUS_10_10_LIMIT: Duration = Duration::from_secs(120);

struct Line {
    pass: bool,
    detail: String,
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tlh").chain(args.iter().copied()).chain(["--format", "json"]);
    let code = tlh::cli::run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err).trim()));
    }
    serde_json::from_slice(&out).map_err(|e| e.to_string())
}

fn series_of(v: &Value, key: &str) -> Result<GradedSeries, String> {
    from_json(&v[key].to_string()).map_err(|e| e.to_string())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let x = f();
    (x, start.elapsed())
}

fn within(pass: bool, took: Duration, limit: Duration, what: &str) -> Line {
    Line {
        pass: pass && took < limit,
        detail: format!("{what}; {} ms, limit {} ms", took.as_millis(), limit.as_millis()),
    }
}

fn from_err(e: String) -> Line {
    Line { pass: false, detail: e }
}

fn torus_4_6() -> Line {
    let (res, took) = timed(|| cli_json(&["torus", "4", "6"]).and_then(|v| series_of(&v, "result")));
    match res {
        Ok(s) => within(s == fixtures::t46_display(), took, FIXTURE_LIMIT, "exact match with the transcribed display"),
        Err(e) => from_err(e),
    }
}

fn colored_unknot() -> Line {
    let (res, took) = timed(|| {
        (1..=6)
            .map(|l| {
                let v = cli_json(&["colored", "1", "1", &l.to_string()])?;
                Ok((l, series_of(&v, "result")? == fixtures::colored_unknot_formula(l)))
            })
            .collect::<Result<Vec<_>, String>>()
    });
    match res {
        Ok(all) => {
            let bad: Vec<String> = all.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.to_string()).collect();
            let what = if bad.is_empty() {
                "l = 1..6 exact".to_string()
            } else {
                format!("mismatch at l = {}", bad.join(", "))
            };
            within(bad.is_empty(), took, FIXTURE_LIMIT, &what)
        }
        Err(e) => from_err(e),
    }
}

fn colored_trefoil() -> Line {
    let (res, took) = timed(|| cli_json(&["colored", "2", "3", "2"]));
    let v = match res {
        Ok(v) => v,
        Err(e) => return from_err(e),
    };
    let (order, with_prefactor) = TREFOIL_SYM2_MATCH;
    let key = match order {
        tlh::links::ColorOrder::OnesFirst => "theorem",
        tlh::links::ColorOrder::OnesLast => "example",
    };
    let series = match series_of(&v["orders"][key], "series") {
        Ok(s) => s,
        Err(e) => return from_err(e),
    };
    let series = if with_prefactor {
        series
    } else {
        // the command always applies the prefactor
        &series * &GradedSeries::from_poly(tlh::links::colored_prefactor(2).den().to_poly())
    };
    let ratio = series.monomial_ratio(&fixtures::colored_trefoil_display());
    let what = match ratio {
        Some(m) => format!(
            "{order}, prefactor {with_prefactor}, ratio {}",
            render(&GradedSeries::monomial(m), Format::Human)
        ),
        None => format!("{order}, prefactor {with_prefactor}: no monomial ratio"),
    };
    within(ratio.is_some(), took, FIXTURE_LIMIT, &what)
}

fn sigma_example() -> Line {
    let list: Vec<String> = SIGMA_EXAMPLE.sigma.iter().map(u32::to_string).collect();
    match cli_json(&["sigma", &SIGMA_EXAMPLE.r.to_string(), &list.join(",")]) {
        Ok(v) => {
            let (got_v, got_w) = (v["v"].as_str().unwrap_or(""), v["w"].as_str().unwrap_or(""));
            Line {
                pass: got_v == SIGMA_EXAMPLE.v && got_w == SIGMA_EXAMPLE.w,
                detail: format!("v = {got_v}, w = {got_w}"),
            }
        }
        Err(e) => from_err(e),
    }
}

fn suite_line(report: &SuiteReport) -> Line {
    let passed = report.cases.iter().filter(|c| c.pass).count();
    let cases: Vec<String> = report
        .cases
        .iter()
        .map(|c| {
            let tag = if c.pass { "" } else { "FAILED " };
            if c.detail.is_empty() {
                format!("{tag}{}", c.name)
            } else {
                format!("{tag}{} ({})", c.name, c.detail)
            }
        })
        .collect();
    let detail = format!("{passed}/{} cases: {}", report.cases.len(), cases.join("; "));
    Line {
        pass: report.all_pass(),
        detail,
    }
}

fn parity(reports: &[&SuiteReport]) -> Line {
    let cases: Vec<(&str, &CaseResult)> = reports
        .iter()
        .flat_map(|r| r.cases.iter().map(move |c| (r.suite.name(), c)))
        .filter(|(_, c)| c.name == "even homological degrees")
        .collect();
    let bad: Vec<String> = cases
        .iter()
        .filter(|(_, c)| !c.pass)
        .map(|(s, c)| format!("{s}: {}", c.detail))
        .collect();
    let detail = if bad.is_empty() {
        let details: Vec<String> = cases.iter().map(|(s, c)| format!("{s} {}", c.detail)).collect();
        details.join(", ")
    } else {
        bad.join("; ")
    };
    Line {
        pass: bad.is_empty() && cases.len() == reports.len(),
        detail,
    }
}

fn binary_torus(n: &str, threads: &str) -> Result<(String, String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_tlh"))
        .args(["torus", n, n, "--format", "json"])
        .env("TLH_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    if !out.status.success() {
        return Err(format!("torus {n} {n} exited with {}", out.status));
    }
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let m = &v["memo"];
    let stats = format!(
        "memo entries={} hits={} misses={} max_depth={}",
        m["entries"], m["hits"], m["misses"], m["max_depth"]
    );
    Ok((v["result"].to_string(), stats, took))
}

/// Every memo field was present in the output envelope.
fn memo_reported(stats: &str) -> bool {
    !stats.contains("null")
}

fn performance() -> Line {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, limit) in [("6", TORUS_6_6_LIMIT), ("8", TORUS_8_8_LIMIT), ("10", TORUS_10_10_LIMIT)] {
        let one = binary_torus(n, "1");
        let eight = binary_torus(n, "8");
        match (one, eight) {
            (Ok((r1, stats, t1)), Ok((r8, _, t8))) => {
                let ok = r1 == r8 && t1 < limit && t8 < limit && memo_reported(&stats);
                pass &= ok;
                parts.push(format!(
                    "T({n},{n}) {} / {} ms (limit {}), {}, threads 1 vs 8 {}",
                    t1.as_millis(),
                    t8.as_millis(),
                    limit.as_millis(),
                    stats,
                    if r1 == r8 { "identical" } else { "DIFFER" }
                ));
            }
            (Err(e), _) | (_, Err(e)) => {
                pass = false;
                parts.push(e);
            }
        }
    }
    Line {
        pass,
        detail: parts.join("; "),
    }
}

fn main() -> ExitCode {
    let memo = MemoTable::new();
    let params = SuiteParams::default();
    let run = |suite, p: &SuiteParams| run_suite(suite, p, &memo);

    let symmetry = run(Suite::Symmetry, &params);
    let unknots = run(Suite::UnknotFamily, &params);
    let positivity = run(Suite::Positivity, &params);
    let lemma = run(Suite::Lemma53, &params);
    let roundtrip = run(Suite::Roundtrip, &params);
    let paper = run(
        Suite::PaperValues,
        &SuiteParams {
            len: Some(6),
            ..params.clone()
        },
    );

    let lines: Vec<(&str, Line)> = vec![
        ("T(4,6) regression", torus_4_6()),
        ("colored unknot", colored_unknot()),
        ("colored trefoil", colored_trefoil()),
        ("sigma example", sigma_example()),
        ("symmetry", suite_line(&symmetry)),
        ("unknot family", suite_line(&unknots)),
        ("positivity", suite_line(&positivity)),
        ("parity", parity(&[&symmetry, &unknots, &positivity, &lemma, &paper])),
        ("rotation identities", suite_line(&lemma)),
        ("filling round trips", suite_line(&roundtrip)),
        ("performance", performance()),
    ];

    let mut failed = 0;
    for (i, (name, line)) in lines.iter().enumerate() {
        let tag = if line.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name}: {}", i + 1, line.detail);
        failed += usize::from(!line.pass);
    }
    println!("acceptance: {}/{} criteria passed", lines.len() - failed, lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
