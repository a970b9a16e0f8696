use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::SymError;

/// Integer partition, parts strictly positive and weakly decreasing.
///
/// Ordered by size first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Trailing zeros are dropped; any other violation is an error.
    pub fn new(parts: Vec<u32>) -> Result<Partition, SymError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(SymError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.largest();
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.largest() <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The rectangle with `rows` parts equal to `cols`.
    pub fn rectangle(rows: usize, cols: u32) -> Partition {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    /// Every partition fitting in a `rows x cols` box, in graded order.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every partition contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        Partition::in_box(self.len(), self.largest())
            .into_iter()
            .filter(|p| self.contains(p))
            .collect()
    }

    /// Partitions `mu` with `self / mu` a horizontal strip.
    pub fn remove_horizontal_strips(&self) -> Vec<Partition> {
        let l = self.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; l];
        fn rec(lam: &[u32], i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
                return;
            }
            let lo = lam.get(i + 1).copied().unwrap_or(0);
            for m in lo..=lam[i] {
                cur[i] = m;
                rec(lam, i + 1, cur, out);
            }
        }
        rec(&self.0, 0, &mut cur, &mut out);
        out
    }

    /// Partitions `nu` with `nu / self` a horizontal strip of size `k`,
    /// optionally capped at `max_parts` rows.
    pub fn add_horizontal_strips(&self, k: u32, max_parts: Option<usize>) -> Vec<Partition> {
        let l = self.len();
        let rows = match max_parts {
            Some(m) => m.min(l + 1),
            None => l + 1,
        };
        let mut out = Vec::new();
        let mut cur = vec![0u32; rows];
        fn rec(lam: &Partition, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
                }
                return;
            }
            let base = lam.part(i);
            let cap = if i == 0 { left } else { (lam.part(i - 1) - base).min(left) };
            for add in 0..=cap {
                cur[i] = base + add;
                rec(lam, i + 1, left - add, cur, out);
            }
        }
        rec(self, 0, k, &mut cur, &mut out);
        out
    }
}

/// 180-degree rotated complement of `lam` inside a `rows x cols` rectangle.
pub fn rect_complement(lam: &Partition, rows: usize, cols: u32) -> Result<Partition, SymError> {
    if !lam.fits(rows, cols) {
        return Err(SymError::DoesNotFit {
            partition: lam.clone(),
            rows,
            cols,
        });
    }
    Partition::new((0..rows).map(|i| cols - lam.part(rows - 1 - i)).collect())
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = SymError;

    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Shorthand for tests and examples; panics on an invalid partition.
#[macro_export]
macro_rules! partition {
    () => { $crate::symfunc::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::symfunc::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}
