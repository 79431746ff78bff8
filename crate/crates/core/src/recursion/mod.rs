//! Memoized evaluation of `p(v, w)`.

mod eval;
mod memo;
mod rule;

pub use eval::{build_pool, eval_p, eval_p_recursive, threads_from_env};
pub use memo::{MemoStats, MemoTable, PersistError, ENCODER_VERSION};
pub use rule::{classify_rule, t_pow_plus_a, unknot, RuleTag};
