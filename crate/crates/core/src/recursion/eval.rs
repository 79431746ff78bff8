use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::rule::step;
use super::MemoTable;
use crate::ring::GradedSeries;
use crate::sequences::SeqPair;

/// Evaluates `p(v, w)`, filling `memo` with every intermediate pair.
///
/// Pairs missing from the table are found with an explicit stack, ranked by
/// their distance from the base cases, and computed rank by rank. Pairs of
/// equal rank do not depend on each other and are evaluated in parallel on the
/// current rayon pool.
pub fn eval_p(pair: &SeqPair, memo: &MemoTable) -> GradedSeries {
    if let Some(v) = memo.get(pair) {
        memo.record_hits(1);
        return (*v).clone();
    }

    let mut pending: HashSet<SeqPair> = HashSet::new();
    let mut stack = vec![pair.clone()];
    let mut hits = 0u64;
    while let Some(p) = stack.pop() {
        if pending.contains(&p) || memo.contains(&p) {
            hits += 1;
            continue;
        }
        let s = step(&p);
        for c in s.children() {
            debug_assert!(c.descent_key() < p.descent_key(), "{c} does not precede {p}");
            stack.push(c.clone());
        }
        pending.insert(p);
    }
    memo.record_hits(hits);
    memo.record_misses(pending.len() as u64);

    // children always have a smaller descent key, so this order is topological
    let mut order: Vec<SeqPair> = pending.iter().cloned().collect();
    order.sort_by(|a, b| a.descent_key().cmp(&b.descent_key()).then_with(|| a.cmp(b)));
    let mut rank: HashMap<&SeqPair, usize> = HashMap::with_capacity(order.len());
    let mut levels: Vec<Vec<&SeqPair>> = Vec::new();
    for p in &order {
        let r = step(p)
            .children()
            .into_iter()
            .filter_map(|c| rank.get(c).map(|r| r + 1))
            .max()
            .unwrap_or(0);
        rank.insert(p, r);
        if levels.len() <= r {
            levels.resize_with(r + 1, Vec::new);
        }
        levels[r].push(p);
    }
    memo.record_depth(levels.len());

    for level in &levels {
        level.par_iter().for_each(|p| {
            let value = step(p).combine(|c| {
                let v = memo.get(c).expect("children are computed at a lower rank");
                (*v).clone()
            });
            memo.insert((*p).clone(), value);
        });
    }

    (*memo.get(pair).expect("root was scheduled")).clone()
}

/// Direct recursive evaluation with a private table; the independent route
/// used to cross-check [`eval_p`] on small inputs.
pub fn eval_p_recursive(pair: &SeqPair) -> GradedSeries {
    fn go(p: &SeqPair, seen: &mut HashMap<SeqPair, GradedSeries>) -> GradedSeries {
        if let Some(v) = seen.get(p) {
            return v.clone();
        }
        let s = step(p);
        let kids: Vec<(SeqPair, GradedSeries)> = s
            .children()
            .into_iter()
            .map(|c| (c.clone(), go(c, seen)))
            .collect();
        let value = s.combine(|c| {
            kids.iter()
                .find(|(k, _)| k == c)
                .map(|(_, v)| v.clone())
                .expect("child evaluated")
        });
        seen.insert(p.clone(), value.clone());
        value
    }
    go(pair, &mut HashMap::new())
}

/// Number of worker threads requested through `TLH_THREADS`.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("TLH_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|n| *n > 0)
}

/// A pool honouring `TLH_THREADS` (all cores when unset).
pub fn build_pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads_from_env() {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{DenomVector, LaurentPoly, Monomial};
    use crate::sequences::BitString;

    fn pair(v: &str, w: &str) -> SeqPair {
        SeqPair::parse(v, w).unwrap()
    }

    fn series(terms: &[(i32, i32, i32, i64)], den: u32) -> GradedSeries {
        GradedSeries::new(
            LaurentPoly::from_qat_terms(terms.iter().copied()),
            DenomVector::factor(1, den),
        )
    }

    #[test]
    fn empty_pair_is_one() {
        assert_eq!(eval_p(&pair("", ""), &MemoTable::new()), GradedSeries::one());
    }

    #[test]
    fn hopf_link_by_hand() {
        // t^-1 (1+a)(q + t + a - qt) / (1-q)^2
        let inner = LaurentPoly::from_qat_terms([(1, 0, 0, 1), (0, 0, 1, 1), (0, 1, 0, 1), (1, 0, 1, -1)]);
        let one_plus_a = LaurentPoly::from_qat_terms([(0, 0, 0, 1), (0, 1, 0, 1)]);
        let want = GradedSeries::new(
            (&one_plus_a * &inner).scale(Monomial::from_qat(0, 0, -1)),
            DenomVector::factor(1, 2),
        );
        assert_eq!(eval_p(&pair("00", "00"), &MemoTable::new()), want);
    }

    #[test]
    fn trefoil_by_hand() {
        // t^-1 (1+a)(t + a + q) / (1-q)
        let want = series(
            &[
                (0, 0, 0, 1),
                (0, 1, -1, 1),
                (1, 0, -1, 1),
                (0, 1, 0, 1),
                (0, 2, -1, 1),
                (1, 1, -1, 1),
            ],
            1,
        );
        assert_eq!(eval_p(&pair("00", "000"), &MemoTable::new()), want);
    }

    #[test]
    fn all_ones_is_product() {
        for l in 0..6 {
            let mut want = LaurentPoly::one();
            for i in 0..l {
                want = &want * &super::super::rule::t_pow_plus_a(i);
            }
            let p = SeqPair::new(BitString::ones(l), BitString::ones(l)).unwrap();
            assert_eq!(eval_p(&p, &MemoTable::new()), GradedSeries::from_poly(want));
        }
    }

    #[test]
    fn stats_after_small_eval() {
        let memo = MemoTable::new();
        eval_p(&pair("0", "0"), &memo);
        let st = memo.stats();
        assert!(st.entries >= 2);
        assert_eq!(st.misses as usize, st.entries);
        assert!(memo.contains(&pair("1", "1")));
    }

    #[test]
    fn stacked_and_recursive_routes_agree() {
        let memo = MemoTable::new();
        for (m, n) in [(2, 2), (2, 5), (3, 4), (4, 4), (5, 3)] {
            let p = SeqPair::torus(m, n);
            assert_eq!(eval_p(&p, &memo), eval_p_recursive(&p));
        }
    }

    #[test]
    fn long_pairs_do_not_overflow_the_stack() {
        // p(10^k, 1) peels one zero per step down to p(1, 1)
        let v = BitString::zeros(400).prepend(true);
        let p = SeqPair::new(v, BitString::ones(1)).unwrap();
        let memo = MemoTable::new();
        let want = LaurentPoly::from_qat_terms([(0, 0, 0, 1), (0, 1, 0, 1)]);
        assert_eq!(eval_p(&p, &memo), GradedSeries::from_poly(want));
        assert!(memo.stats().max_depth > 400);
    }
}
