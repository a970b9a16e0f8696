use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Partition;

/// A finite integer combination of Schur functions.
pub type SchurCombination = BTreeMap<Partition, BigInt>;

fn add_into(acc: &mut SchurCombination, p: Partition, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match acc.entry(p) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `comb * h_k` by the Pieri rule, dropping shapes with more than `max_parts` rows.
pub fn pieri_h(comb: &SchurCombination, k: u32, max_parts: Option<usize>) -> SchurCombination {
    let mut out = SchurCombination::new();
    for (lam, c) in comb {
        for nu in lam.add_horizontal_strips(k, max_parts) {
            add_into(&mut out, nu, c.clone());
        }
    }
    out
}

fn product_uncached(lam: &Partition, mu: &Partition) -> SchurCombination {
    // s_mu = det(h_{mu_i - i + j}); expand the determinant row by row,
    // applying each chosen h to the running combination.
    fn rec(
        mu: &Partition,
        row: usize,
        cols: &mut Vec<usize>,
        comb: SchurCombination,
        negative: bool,
        out: &mut SchurCombination,
    ) {
        if cols.is_empty() {
            for (p, c) in comb {
                add_into(out, p, if negative { -c } else { c });
            }
            return;
        }
        for pos in 0..cols.len() {
            let j = cols[pos];
            let k = mu.part(row) as i64 - row as i64 + j as i64;
            if k < 0 {
                continue;
            }
            let next = pieri_h(&comb, k as u32, None);
            if next.is_empty() {
                continue;
            }
            cols.remove(pos);
            rec(mu, row + 1, cols, next, negative ^ (pos % 2 == 1), out);
            cols.insert(pos, j);
        }
    }
    let mut out = SchurCombination::new();
    let mut start = SchurCombination::new();
    start.insert(lam.clone(), BigInt::one());
    let mut cols: Vec<usize> = (0..mu.len()).collect();
    rec(mu, 0, &mut cols, start, false, &mut out);
    out
}

type ProductCache = Mutex<HashMap<(Partition, Partition), Arc<SchurCombination>>>;

fn cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `s_lam * s_mu` expanded in Schur functions.
pub fn schur_product(lam: &Partition, mu: &Partition) -> Arc<SchurCombination> {
    // Commutative: put the shorter factor through the determinant.
    let (a, b) = if (mu.len(), mu) <= (lam.len(), lam) {
        (lam, mu)
    } else {
        (mu, lam)
    };
    let key = (a.clone(), b.clone());
    if let Some(v) = cache().lock().expect("cache lock").get(&key) {
        return Arc::clone(v);
    }
    let v = Arc::new(product_uncached(a, b));
    cache()
        .lock()
        .expect("cache lock")
        .insert(key, Arc::clone(&v));
    v
}

/// The Littlewood–Richardson coefficient `c^nu_{lam, mu}`.
pub fn lr_coeff(lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu) {
        return BigInt::zero();
    }
    schur_product(lam, mu)
        .get(nu)
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

/// All `(alpha, beta, c^nu_{alpha beta})` with nonzero coefficient.
pub fn lr_splittings(nu: &Partition) -> Vec<(Partition, Partition, BigInt)> {
    let subs = nu.subpartitions();
    let mut out = Vec::new();
    for a in &subs {
        for b in &subs {
            if a.size() + b.size() != nu.size() {
                continue;
            }
            let c = lr_coeff(a, b, nu);
            if !c.is_zero() {
                out.push((a.clone(), b.clone(), c));
            }
        }
    }
    out
}
