use std::fmt;

use super::{f_sigma, g_sigma, SigmaSeq};
use crate::recursion::{t_pow_plus_a, MemoTable};
use crate::ring::{GradedSeries, Monomial};

/// The rotation identities satisfied by `f` and `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `f(σ0) = (t^l + a) f(σ)`
    L1,
    /// `f(σk) = f((k-1)σ)`, `1 ≤ k ≤ r-1`
    L2,
    /// `f(σr) = t^-l f((r-1)σ) + q t^-l f(rσ)`
    L3,
    /// `g(σk0) = (t^(l+1) + a) g((k-1)σ)`, `1 ≤ k ≤ r-1`
    K1a,
    /// `g(σr0) = g((r-1)σ)`
    K1b,
    /// `g(σk) = g((k-1)σ)`, `1 ≤ k ≤ r-1`
    K2,
    /// `g(σr) = t^-l g((r-1)σ) + q t^-l g(rσ)`
    K3,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Identity::L1 => "L1",
            Identity::L2 => "L2",
            Identity::L3 => "L3",
            Identity::K1a => "K1a",
            Identity::K1b => "K1b",
            Identity::K2 => "K2",
            Identity::K3 => "K3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub sigma: SigmaSeq,
    pub k: Option<u32>,
    pub holds: bool,
    pub lhs: GradedSeries,
    pub rhs: GradedSeries,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={} σ={}", self.identity, self.sigma.r(), self.sigma)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        f.write_str(if self.holds { ": pass" } else { ": FAIL" })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Lemma53Report {
    pub checks: Vec<IdentityCheck>,
}

impl Lemma53Report {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn split(l: usize, one: GradedSeries, zero: GradedSeries) -> GradedSeries {
    (&one + &zero.scale(Monomial::var_q())).scale(Monomial::var_t().pow(-(l as i32)))
}

/// Evaluates both sides of every identity that applies to the base sequence
/// `sigma`. Failures are reported, not raised.
pub fn verify_lemma53(sigma: &SigmaSeq, memo: &MemoTable) -> Lemma53Report {
    let r = sigma.r();
    let l = sigma.occupied();
    let f = |s: &SigmaSeq| f_sigma(s, memo);
    let g = |s: &SigmaSeq| g_sigma(s, memo);
    let mut checks = Vec::new();
    let mut record = |identity, k, lhs: GradedSeries, rhs: GradedSeries| {
        checks.push(IdentityCheck {
            identity,
            sigma: sigma.clone(),
            k,
            holds: lhs == rhs,
            lhs,
            rhs,
        });
    };

    record(Identity::L1, None, f(&sigma.push(0)), &f(sigma) * &t_pow_plus_a(l));
    for k in 1..r {
        record(Identity::L2, Some(k), f(&sigma.push(k)), f(&sigma.prepend(k - 1)));
    }
    record(
        Identity::L3,
        None,
        f(&sigma.push(r)),
        split(l, f(&sigma.prepend(r - 1)), f(&sigma.prepend(r))),
    );

    for k in 1..r {
        record(
            Identity::K1a,
            Some(k),
            g(&sigma.push(k).push(0)),
            &g(&sigma.prepend(k - 1)) * &t_pow_plus_a(l + 1),
        );
    }
    record(Identity::K1b, None, g(&sigma.push(r).push(0)), g(&sigma.prepend(r - 1)));
    for k in 1..r {
        record(Identity::K2, Some(k), g(&sigma.push(k)), g(&sigma.prepend(k - 1)));
    }
    record(
        Identity::K3,
        None,
        g(&sigma.push(r)),
        split(l, g(&sigma.prepend(r - 1)), g(&sigma.prepend(r))),
    );

    Lemma53Report { checks }
}
