//! Executable check suites: published values, symmetry, positivity, the
//! rotation identities and the filling dictionary. Suites report rather than
//! panic so callers can scan parameter ranges.

pub mod fixtures;
pub mod sample;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::fillings::{c_statistic, v_of_sigma, verify_lemma53, w_of_sigma, Filling, SigmaSeq};
use crate::links::{colored_prefactor, colored_torus_homology, torus_link_homology, ColorOrder, TorusLinkSpec};
use crate::recursion::{eval_p, unknot, MemoTable};
use crate::ring::{GradedSeries, Monomial};
use crate::sequences::{BitString, SeqPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    PaperValues,
    Symmetry,
    Positivity,
    Lemma53,
    Roundtrip,
    UnknotFamily,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::PaperValues,
        Suite::Symmetry,
        Suite::Positivity,
        Suite::Lemma53,
        Suite::Roundtrip,
        Suite::UnknotFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperValues => "paper-values",
            Suite::Symmetry => "symmetry",
            Suite::Positivity => "positivity",
            Suite::Lemma53 => "lemma53",
            Suite::Roundtrip => "roundtrip",
            Suite::UnknotFamily => "unknot-family",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Suite parameters; `None` selects the suite's default.
///
/// | suite | `r` | `len` | `depth` | `samples` |
/// |---|---|---|---|---|
/// | paper-values | | largest colored unknot (4) | | |
/// | symmetry | | exhaustive bound on `ℓ(v)+ℓ(w)` (10) | | random pairs (200) |
/// | positivity | | bound on each length and on `m, n` (6) | `q`-degree (12) | |
/// | lemma53 | rows (3) | columns (4) | | random sequences (100) |
/// | roundtrip | rows (4) | columns (5) | | |
/// | unknot-family | | largest `m` (12) | | |
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub r: Option<u32>,
    pub len: Option<usize>,
    pub depth: Option<u32>,
    pub samples: Option<usize>,
    pub seed: u64,
}

/// Length bound for random symmetry pairs.
pub const RANDOM_PAIR_MAX_LEN: usize = 16;
/// Bounds for random rotation-identity inputs.
pub const RANDOM_SIGMA_MAX_R: u32 = 5;
pub const RANDOM_SIGMA_MAX_LEN: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CaseResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CaseResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}: {}", self.suite, c.name)?;
            } else {
                writeln!(f, "{tag} {}: {} ({})", self.suite, c.name, c.detail)?;
            }
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        writeln!(f, "{}: {passed}/{} cases passed", self.suite, self.cases.len())
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams, memo: &MemoTable) -> SuiteReport {
    let cases = match suite {
        Suite::PaperValues => paper_values(params, memo),
        Suite::Symmetry => symmetry(params, memo),
        Suite::Positivity => positivity(params, memo),
        Suite::Lemma53 => lemma53(params, memo),
        Suite::Roundtrip => roundtrip(params),
        Suite::UnknotFamily => unknot_family(params, memo),
    };
    SuiteReport { suite, cases }
}

/// Lists at most a few offending inputs.
fn summarize<T: fmt::Display>(bad: &[T], total: usize) -> String {
    if bad.is_empty() {
        return format!("{total} checked");
    }
    let shown: Vec<String> = bad.iter().take(5).map(|x| x.to_string()).collect();
    let more = if bad.len() > 5 { ", ..." } else { "" };
    format!("{} of {total} failed: {}{more}", bad.len(), shown.join(", "))
}

fn parity_case<'a>(values: impl IntoIterator<Item = &'a GradedSeries>) -> CaseResult {
    let (mut n, mut odd) = (0, 0);
    for v in values {
        n += 1;
        if !v.has_even_t_exponents() {
            odd += 1;
        }
    }
    let detail = if odd == 0 {
        format!("{n} values")
    } else {
        format!("{odd} of {n} values have odd T exponents")
    };
    CaseResult::new("even homological degrees", odd == 0, detail)
}

/// Which strand order and prefactor choice reproduces the colored trefoil
/// display, with the monomial ratio where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCandidate {
    pub order: ColorOrder,
    pub with_prefactor: bool,
    pub ratio: Option<Monomial>,
}

pub fn resolve_colored_trefoil(memo: &MemoTable) -> Vec<OrderCandidate> {
    let display = fixtures::colored_trefoil_display();
    let mut out = Vec::new();
    for order in [ColorOrder::OnesFirst, ColorOrder::OnesLast] {
        let raw = eval_p(&order.pair(2, 3, 2), memo);
        for with_prefactor in [true, false] {
            let value = if with_prefactor { &colored_prefactor(2) * &raw } else { raw.clone() };
            out.push(OrderCandidate {
                order,
                with_prefactor,
                ratio: value.monomial_ratio(&display),
            });
        }
    }
    out
}

fn paper_values(params: &SuiteParams, memo: &MemoTable) -> Vec<CaseResult> {
    let mut cases = Vec::new();
    let mut values = Vec::new();

    let t46 = torus_link_homology(TorusLinkSpec::new(4, 6).expect("positive"), memo);
    cases.push(CaseResult::new(
        "T(4,6) equals the published display",
        t46 == fixtures::t46_display(),
        "",
    ));
    values.push(t46);

    for l in 1..=params.len.unwrap_or(4) {
        let c = colored_torus_homology(1, 1, l as i64, memo).expect("positive");
        let want = fixtures::colored_unknot_formula(l);
        let pass = c.ones_first == want && c.ones_last == want;
        cases.push(CaseResult::new(format!("colored unknot l = {l}"), pass, ""));
        values.push(c.ones_first);
    }

    let candidates = resolve_colored_trefoil(memo);
    let matching: Vec<String> = candidates
        .iter()
        .filter(|c| c.ratio.is_some())
        .map(|c| {
            let pre = if c.with_prefactor { "with prefactor" } else { "raw" };
            format!("{} {pre}", c.order)
        })
        .collect();
    let (order, pre) = fixtures::TREFOIL_SYM2_MATCH;
    let recorded = candidates
        .iter()
        .any(|c| c.order == order && c.with_prefactor == pre && c.ratio.is_some());
    let detail = if matching.is_empty() {
        "no configuration matches".to_string()
    } else {
        format!("matches: {}", matching.join("; "))
    };
    cases.push(CaseResult::new("colored trefoil up to a monomial", recorded, detail));

    let ex = fixtures::SIGMA_EXAMPLE;
    let s = SigmaSeq::new(ex.r, ex.sigma.to_vec()).expect("valid example");
    let (v, w) = (v_of_sigma(&s), w_of_sigma(&s));
    let got = |ok: bool, x: String| if ok { String::new() } else { format!("got {x}") };
    let ok = v.to_string() == ex.v;
    cases.push(CaseResult::new(format!("v{s} = {}", ex.v), ok, got(ok, v.to_string())));
    let ok = w.to_string() == ex.w;
    cases.push(CaseResult::new(format!("w{s} = {}", ex.w), ok, got(ok, w.to_string())));
    let c = c_statistic(&s);
    cases.push(CaseResult::new(format!("c{s} = 7"), c == 7, got(c == 7, c.to_string())));

    cases.push(parity_case(&values));
    cases
}

/// Evaluates `p(v, w)` and `p(w, v)`; returns both values and whether they agree.
fn symmetric(p: &SeqPair, memo: &MemoTable) -> (bool, GradedSeries, GradedSeries) {
    let a = eval_p(p, memo);
    let b = eval_p(&p.swapped(), memo);
    (a == b, a, b)
}

fn symmetry_case(name: String, pairs: &[SeqPair], memo: &MemoTable, values: &mut Vec<GradedSeries>) -> CaseResult {
    let results: Vec<(bool, GradedSeries, GradedSeries)> = pairs.par_iter().map(|p| symmetric(p, memo)).collect();
    let bad: Vec<&SeqPair> = pairs.iter().zip(&results).filter(|(_, r)| !r.0).map(|(p, _)| p).collect();
    let pass = bad.is_empty();
    let detail = summarize(&bad, pairs.len());
    for (_, a, b) in results {
        values.push(a);
        values.push(b);
    }
    CaseResult::new(name, pass, detail)
}

fn symmetry(params: &SuiteParams, memo: &MemoTable) -> Vec<CaseResult> {
    let total = params.len.unwrap_or(10);
    let samples = params.samples.unwrap_or(200);
    let mut values = Vec::new();
    let mut cases = Vec::new();

    let exhaustive = sample::pairs_with_total_length(total);
    cases.push(symmetry_case(
        format!("p(v,w) = p(w,v) for ℓ(v)+ℓ(w) <= {total}"),
        &exhaustive,
        memo,
        &mut values,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let random: Vec<SeqPair> = (0..samples)
        .map(|_| sample::random_pair(&mut rng, RANDOM_PAIR_MAX_LEN))
        .collect();
    cases.push(symmetry_case(
        format!(
            "p(v,w) = p(w,v) for {samples} random pairs, lengths <= {RANDOM_PAIR_MAX_LEN}, seed {}",
            params.seed
        ),
        &random,
        memo,
        &mut values,
    ));

    cases.push(parity_case(&values));
    cases
}

fn positivity(params: &SuiteParams, memo: &MemoTable) -> Vec<CaseResult> {
    let len = params.len.unwrap_or(6);
    let depth = params.depth.unwrap_or(12);
    let mut cases = Vec::new();

    let pairs = sample::all_pairs(len, len);
    let values: Vec<GradedSeries> = pairs.par_iter().map(|p| eval_p(p, memo)).collect();
    let bad: Vec<&SeqPair> = pairs
        .iter()
        .zip(&values)
        .filter(|(_, v)| !v.expand(depth).all_coefficients_nonnegative())
        .map(|(p, _)| p)
        .collect();
    cases.push(CaseResult::new(
        format!("p(v,w) >= 0 to q-degree {depth} for lengths <= {len}"),
        bad.is_empty(),
        summarize(&bad, pairs.len()),
    ));

    let specs: Vec<(usize, usize)> = (1..=len).flat_map(|m| (1..=len).map(move |n| (m, n))).collect();
    let torus: Vec<GradedSeries> = specs
        .par_iter()
        .map(|&(m, n)| torus_link_homology(TorusLinkSpec::new(m as i64, n as i64).expect("positive"), memo))
        .collect();
    let bad: Vec<String> = specs
        .iter()
        .zip(&torus)
        .filter(|(_, v)| !v.expand(depth).all_coefficients_nonnegative())
        .map(|((m, n), _)| format!("T({m},{n})"))
        .collect();
    cases.push(CaseResult::new(
        format!("T(m,n) >= 0 to q-degree {depth} for m, n <= {len}"),
        bad.is_empty(),
        summarize(&bad, specs.len()),
    ));

    cases.push(parity_case(values.iter().chain(&torus)));
    cases
}

fn lemma_case(name: String, sigmas: &[SigmaSeq], memo: &MemoTable, values: &mut Vec<GradedSeries>) -> CaseResult {
    let reports: Vec<_> = sigmas.par_iter().map(|s| verify_lemma53(s, memo)).collect();
    let mut bad = Vec::new();
    let mut checks = 0;
    for rep in reports {
        checks += rep.checks.len();
        bad.extend(rep.failures().map(|c| c.to_string()));
        for c in rep.checks {
            values.push(c.lhs);
            values.push(c.rhs);
        }
    }
    let mut detail = summarize(&bad, checks);
    if bad.is_empty() {
        detail = format!("{checks} identities over {} sequences", sigmas.len());
    }
    CaseResult::new(name, bad.is_empty(), detail)
}

fn lemma53(params: &SuiteParams, memo: &MemoTable) -> Vec<CaseResult> {
    let max_r = params.r.unwrap_or(3);
    let max_n = params.len.unwrap_or(4);
    let samples = params.samples.unwrap_or(100);
    let mut values = Vec::new();
    let mut cases = Vec::new();

    let exhaustive: Vec<SigmaSeq> = (1..=max_r)
        .flat_map(|r| (0..=max_n).flat_map(move |n| SigmaSeq::all(r, n)))
        .collect();
    cases.push(lemma_case(
        format!("rotation identities for r <= {max_r}, N <= {max_n}"),
        &exhaustive,
        memo,
        &mut values,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let random: Vec<SigmaSeq> = (0..samples)
        .map(|_| sample::random_sigma(&mut rng, RANDOM_SIGMA_MAX_R, RANDOM_SIGMA_MAX_LEN))
        .collect();
    cases.push(lemma_case(
        format!(
            "rotation identities for {samples} random σ, r <= {RANDOM_SIGMA_MAX_R}, N <= {RANDOM_SIGMA_MAX_LEN}, seed {}",
            params.seed
        ),
        &random,
        memo,
        &mut values,
    ));

    cases.push(parity_case(&values));
    cases
}

/// Checks the σ-level effect of rotating `σ`; returns a failure description.
fn rotation_mismatch(s: &SigmaSeq) -> Option<String> {
    let (&k, init) = s.entries().split_last()?;
    let r = s.r();
    let rest = SigmaSeq::new(r, init.to_vec()).expect("entries in range");
    let t = Filling::from_sigma(s);
    let expect: Vec<(Option<bool>, SigmaSeq)> = if k == 0 {
        vec![(None, rest)]
    } else if k < r {
        vec![(None, rest.prepend(k - 1))]
    } else {
        vec![(Some(false), rest.prepend(r)), (Some(true), rest.prepend(r - 1))]
    };
    for (fill, want) in expect {
        match t.rotate(fill) {
            Ok(u) if u.sigma() == want => {}
            Ok(u) => return Some(format!("r={r} {s} fill {fill:?}: got {}, want {want}", u.sigma())),
            Err(e) => return Some(format!("r={r} {s}: {e}")),
        }
    }
    None
}

fn roundtrip(params: &SuiteParams) -> Vec<CaseResult> {
    let max_r = params.r.unwrap_or(4);
    let max_n = params.len.unwrap_or(5);
    let all: Vec<SigmaSeq> = (1..=max_r)
        .flat_map(|r| (0..=max_n).flat_map(move |n| SigmaSeq::all(r, n)))
        .collect();
    let range = format!("r <= {max_r}, N <= {max_n}");
    let label = |s: &SigmaSeq| format!("r={} {s}", s.r());
    let mut cases = Vec::new();

    let bad: Vec<String> = all
        .iter()
        .filter(|s| Filling::from_sigma(s).sigma() != **s)
        .map(label)
        .collect();
    cases.push(CaseResult::new(
        format!("σ -> filling -> σ, {range}"),
        bad.is_empty(),
        summarize(&bad, all.len()),
    ));

    let bad: Vec<String> = all
        .iter()
        .filter(|s| {
            let w = w_of_sigma(s);
            match Filling::from_w(s.r() as usize, s.len(), &w) {
                Ok(t) => t != Filling::from_sigma(s) || t.sigma() != **s,
                Err(_) => true,
            }
        })
        .map(label)
        .collect();
    cases.push(CaseResult::new(
        format!("σ -> w -> filling -> σ, {range}"),
        bad.is_empty(),
        summarize(&bad, all.len()),
    ));

    let bad: Vec<String> = all.iter().filter_map(rotation_mismatch).collect();
    cases.push(CaseResult::new(
        format!("rotation acts on σ as σ0 -> σ, σk -> (k-1)σ, σr -> rσ | (r-1)σ, {range}"),
        bad.is_empty(),
        summarize(&bad, all.iter().filter(|s| !s.is_empty()).count()),
    ));

    let bad: Vec<String> = all
        .iter()
        .filter(|s| v_of_sigma(s).weight() != w_of_sigma(s).weight())
        .map(label)
        .collect();
    cases.push(CaseResult::new(
        format!("|v(σ)| = |w(σ)|, {range}"),
        bad.is_empty(),
        summarize(&bad, all.len()),
    ));

    let single: Vec<&SigmaSeq> = all.iter().filter(|s| s.r() == 1).collect();
    let bad: Vec<String> = single
        .iter()
        .filter(|s| v_of_sigma(s) != w_of_sigma(s))
        .map(|s| label(s))
        .collect();
    cases.push(CaseResult::new(
        "w(σ) = v(σ) when r = 1",
        bad.is_empty(),
        summarize(&bad, single.len()),
    ));
    cases
}

fn unknot_family(params: &SuiteParams, memo: &MemoTable) -> Vec<CaseResult> {
    let max_m = params.len.unwrap_or(12);
    let u = unknot();
    let mut values = Vec::new();
    let mut cases = Vec::new();
    let one_zero = BitString::zeros(1);
    for m in 1..=max_m {
        let zeros = BitString::zeros(m);
        let left = eval_p(&SeqPair::new(zeros.clone(), one_zero.clone()).expect("weight 0"), memo);
        let right = eval_p(&SeqPair::new(one_zero.clone(), zeros).expect("weight 0"), memo);
        let torus = torus_link_homology(TorusLinkSpec::new(m as i64, 1).expect("positive"), memo);
        let pass = left == u && right == u && torus == u;
        cases.push(CaseResult::new(format!("p(0^{m}, 0) = p(0, 0^{m}) = (1+a)/(1-q)"), pass, ""));
        values.extend([left, right, torus]);
    }
    cases.push(parity_case(&values));
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let memo = MemoTable::new();
        let params = SuiteParams {
            r: Some(2),
            len: Some(3),
            depth: Some(4),
            samples: Some(5),
            seed: 1,
        };
        for s in Suite::ALL {
            let rep = run_suite(s, &params, &memo);
            assert!(rep.all_pass(), "{rep}");
        }
    }

    #[test]
    fn trefoil_resolution_is_recorded() {
        let memo = MemoTable::new();
        let found = resolve_colored_trefoil(&memo);
        let (order, pre) = fixtures::TREFOIL_SYM2_MATCH;
        let hit = found
            .iter()
            .find(|c| c.order == order && c.with_prefactor == pre)
            .unwrap();
        assert_eq!(hit.ratio, Some(Monomial::ONE));
    }

    #[test]
    fn report_format() {
        let rep = SuiteReport {
            suite: Suite::Roundtrip,
            cases: vec![CaseResult::new("a", true, ""), CaseResult::new("b", false, "why")],
        };
        assert_eq!(
            rep.to_string(),
            "PASS roundtrip: a\nFAIL roundtrip: b (why)\nroundtrip: 1/2 cases passed\n"
        );
        assert!(!rep.all_pass());
    }
}
