use crate::error::{Error, Result};
use crate::par;

const WORD: usize = 64;

/// Row-major 0/1 matrix packed into 64-bit words. Bits past `cols` in the
/// last word of each row are always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(WORD);
        Self { rows, cols, words, bits: vec![0; rows * words] }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> bool>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from per-row lists of set columns.
    pub fn from_rows<I, R>(cols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = usize>,
    {
        let rows: Vec<Vec<usize>> = rows.into_iter().map(|r| r.into_iter().collect()).collect();
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        self.bits[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        let w = &mut self.bits[i * self.words + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    /// Packed words of row `i`.
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn row_count_ones(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set columns of row `i` in increasing order.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(i))
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut t = BoolMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Entry-wise negation, keeping padding bits clear.
    pub fn complement(&self) -> BoolMatrix {
        let mut c = self.clone();
        for w in c.bits.iter_mut() {
            *w = !*w;
        }
        c.clear_padding();
        c
    }

    fn clear_padding(&mut self) {
        let tail = self.cols % WORD;
        if tail == 0 || self.words == 0 {
            return;
        }
        let mask = (1u64 << tail) - 1;
        for i in 0..self.rows {
            self.bits[i * self.words + self.words - 1] &= mask;
        }
    }

    /// Boolean product `self * other`.
    pub fn mul(&self, other: &BoolMatrix) -> Result<BoolMatrix> {
        check_inner(self, other)?;
        let bt = other.transpose();
        let rows = par::map_indices(self.rows, |i| {
            (0..bt.rows).filter(|&j| rows_intersect(self.row(i), bt.row(j))).collect::<Vec<_>>()
        });
        Ok(BoolMatrix::from_rows(other.cols, rows))
    }

    /// Single-threaded product; same output as [`BoolMatrix::mul`].
    pub fn mul_sequential(&self, other: &BoolMatrix) -> Result<BoolMatrix> {
        check_inner(self, other)?;
        let bt = other.transpose();
        let rows = par::map_indices_sequential(self.rows, |i| {
            (0..bt.rows).filter(|&j| rows_intersect(self.row(i), bt.row(j))).collect::<Vec<_>>()
        });
        Ok(BoolMatrix::from_rows(other.cols, rows))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn check_inner(a: &BoolMatrix, b: &BoolMatrix) -> Result<()> {
    if a.cols == b.rows {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", a.rows, a.cols, b.rows, b.cols)))
    }
}

pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD + b)
        })
    })
}

pub(crate) fn rows_intersect(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

pub(crate) fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// All `(i, j)` with `(a * b)[i, j] = 0`, in row-major order.
///
/// `b` is transposed once so every entry becomes a word-wise AND of two
/// packed rows.
pub fn complement_zero_pairs(a: &BoolMatrix, b: &BoolMatrix) -> Result<Vec<(usize, usize)>> {
    check_inner(a, b)?;
    let bt = b.transpose();
    let rows = par::map_indices(a.rows, |i| {
        (0..bt.rows).filter(|&j| !rows_intersect(a.row(i), bt.row(j))).map(|j| (i, j)).collect::<Vec<_>>()
    });
    Ok(rows.into_iter().flatten().collect())
}

impl BoolMatrix {
    /// First `(i, j)` in row-major order with a zero product entry for which
    /// `accept(i, j)` also holds. `bt` is the transpose of the right factor.
    pub fn find_zero_pair_transposed<T, F>(&self, bt: &BoolMatrix, accept: F) -> Result<Option<T>>
    where
        T: Send,
        F: Fn(usize, usize) -> Option<T> + Sync + Send,
    {
        if self.cols != bt.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} against transposed {}x{}",
                self.rows, self.cols, bt.rows, bt.cols
            )));
        }
        Ok(par::find_first(self.rows, |i| {
            let row = self.row(i);
            (0..bt.rows).find_map(|j| if rows_intersect(row, bt.row(j)) { None } else { accept(i, j) })
        }))
    }

    /// Number of columns where rows `i` of `self` and `j` of `other` are both set.
    pub fn row_overlap(&self, i: usize, other: &BoolMatrix, j: usize) -> usize {
        intersection_count(self.row(i), other.row(j))
    }

    /// True when rows `i` of `self` and `j` of `other` share a set column.
    pub fn rows_meet(&self, i: usize, other: &BoolMatrix, j: usize) -> bool {
        rows_intersect(self.row(i), other.row(j))
    }
}
