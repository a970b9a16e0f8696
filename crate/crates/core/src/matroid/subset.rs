use std::cmp::Ordering;
use std::fmt;

/// A subset of `{1..=16}` stored as a bitmask, bit `i - 1` for element `i`.
///
/// Ordered lexicographically as sorted element lists: the set holding the
/// smallest element of the symmetric difference comes first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u32);

pub const MAX_GROUND: usize = 16;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// Panics on elements outside `1..=16`.
    pub fn from_elems(elems: impl IntoIterator<Item = usize>) -> Subset {
        let mut bits = 0u32;
        for e in elems {
            assert!((1..=MAX_GROUND).contains(&e), "element {e} out of range");
            bits |= 1 << (e - 1);
        }
        Subset(bits)
    }

    pub fn full(n: usize) -> Subset {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << (e - 1))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> (e - 1) & 1 == 1
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << (e - 1))
    }

    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn difference(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    /// Elements in increasing order, 1-based.
    pub fn elems(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elems().collect()
    }

    /// All `k`-subsets of `{1..=n}` in lexicographic order.
    pub fn all_of_size(n: usize, k: usize) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>) {
            if cur.len() == k {
                out.push(Subset::from_elems(cur.iter().copied()));
                return;
            }
            for e in start..=n {
                if n - e + 1 < k - cur.len() {
                    break;
                }
                cur.push(e);
                rec(e + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut cur, &mut out);
        out
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elems().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_on_equal_sizes() {
        let all = Subset::all_of_size(4, 2);
        let lists: Vec<Vec<usize>> = all.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            lists,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        let mut sorted = all.clone();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn set_ops() {
        let a = Subset::from_elems([1, 3]);
        assert!(a.contains(3) && !a.contains(2));
        assert_eq!(a.with(2).without(1), Subset::from_elems([2, 3]));
        assert_eq!(Subset::full(3).len(), 3);
        assert_eq!(Subset::all_of_size(5, 0), vec![Subset::EMPTY]);
        assert_eq!(Subset::all_of_size(16, 8).len(), 12870);
    }
}
