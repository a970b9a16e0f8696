use super::Partition;

/// A filling of a Young diagram, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in the cell at `row`, `col` (both 1-based).
    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.rows[row - 1][col - 1]
    }

    /// `(row, col, entry)` for every cell, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &e)| (i + 1, j + 1, e)))
    }

    /// Weakly increasing rows, strictly increasing columns.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&e| e >= 1)
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`.
pub fn sst_enumerate(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.len() > max_entry as usize {
        return out;
    }
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
        .collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        max_entry: u32,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (i, j) = cells[k];
        let left = if j > 0 { rows[i][j - 1] } else { 1 };
        let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        // Room for the strictly increasing cells below in this column.
        let below = shape.parts()[i + 1..].iter().filter(|&&p| p as usize > j).count() as u32;
        let lo = left.max(above);
        let hi = max_entry.saturating_sub(below);
        for e in lo..=hi {
            rows[i][j] = e;
            rec(k + 1, cells, rows, max_entry, shape, out);
        }
        rows[i][j] = 0;
    }
    rec(0, &cells, &mut rows, max_entry, shape, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn enumeration_examples() {
        let one = sst_enumerate(&partition![1], 2);
        assert_eq!(one.len(), 2);
        assert_eq!(one[0].rows(), &[vec![1]]);
        assert_eq!(one[1].rows(), &[vec![2]]);

        let t = sst_enumerate(&partition![2, 1], 2);
        let rows: Vec<_> = t.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1, 1], vec![2]], vec![vec![1, 2], vec![2]]]);

        assert!(sst_enumerate(&partition![1, 1, 1], 2).is_empty());
        assert_eq!(sst_enumerate(&Partition::empty(), 3).len(), 1);
    }

    #[test]
    fn enumeration_is_exhaustive_and_valid() {
        // Compare against filtering every filling of a 3-cell shape with entries <= 3.
        let shape = partition![2, 1];
        let mut brute = 0;
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    if a <= b && a < c {
                        brute += 1;
                    }
                }
            }
        }
        let got = sst_enumerate(&shape, 3);
        assert_eq!(got.len(), brute);
        assert!(got.iter().all(Tableau::is_semistandard));
    }
}
