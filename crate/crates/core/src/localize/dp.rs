use std::collections::HashMap;

use crate::matroid::{Matroid, Subset};

/// Arithmetic the permutation recursion needs.
pub(crate) struct SumOps<'a, T> {
    pub zero: T,
    pub one: T,
    /// Weight of stepping from `a` to `x`.
    pub step: &'a dyn Fn(usize, usize) -> T,
    pub add: &'a dyn Fn(&T, &T) -> T,
    pub mul: &'a dyn Fn(&T, &T) -> T,
}

/// Sum over orderings `(i_1..i_m)` of `comp` whose greedy basis is `b ∩ comp`
/// of `prod_k step(i_{k+1}, i_k)`.
///
/// Whether the next element is kept by the greedy scan depends only on the
/// set placed so far, so the sum is memoised over `(placed set, last element)`.
pub(crate) fn permutation_sum<T: Clone>(m: &Matroid, comp: Subset, b: Subset, ops: &SumOps<'_, T>) -> T {
    let b = b.intersection(comp);
    let valid = |u: Subset, x: usize| {
        let grows = m.rank_of(u.with(x)) > m.rank_of(u);
        grows == b.contains(x)
    };
    fn rec<T: Clone>(
        u: Subset,
        a: usize,
        comp: Subset,
        valid: &dyn Fn(Subset, usize) -> bool,
        ops: &SumOps<'_, T>,
        memo: &mut HashMap<(u32, usize), T>,
    ) -> T {
        if u == comp {
            return ops.one.clone();
        }
        if let Some(v) = memo.get(&(u.bits(), a)) {
            return v.clone();
        }
        let mut acc = ops.zero.clone();
        for x in comp.difference(u).elems() {
            if valid(u, x) {
                let rest = rec(u.with(x), x, comp, valid, ops, memo);
                acc = (ops.add)(&acc, &(ops.mul)(&(ops.step)(x, a), &rest));
            }
        }
        memo.insert((u.bits(), a), acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    let mut acc = ops.zero.clone();
    for x in comp.elems() {
        if valid(Subset::EMPTY, x) {
            let rest = rec(Subset::singleton(x), x, comp, &valid, ops, &mut memo);
            acc = (ops.add)(&acc, &rest);
        }
    }
    acc
}
