use std::fmt;

const WORD: usize = 64;

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b);
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

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        let w = self.data[row * self.words_per_row + col / WORD];
        (w >> (col % WORD)) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        let w = &mut self.data[row * self.words_per_row + col / WORD];
        let bit = 1u64 << (col % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn row(&self, row: usize) -> Vec<bool> {
        (0..self.cols).map(|c| self.get(row, c)).collect()
    }

    /// Row as a `0`/`1` string.
    pub fn row_string(&self, row: usize) -> String {
        (0..self.cols)
            .map(|c| if self.get(row, c) { '1' } else { '0' })
            .collect()
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows).map(|r| self.row_string(r)).collect()
    }

    /// Rank over GF(2) by Gaussian elimination on whole words.
    pub fn rank(&self) -> usize {
        let wpr = self.words_per_row;
        let mut data = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let word = col / WORD;
            let bit = 1u64 << (col % WORD);
            let Some(pivot) = (rank..self.rows).find(|&r| data[r * wpr + word] & bit != 0) else {
                continue;
            };
            if pivot != rank {
                for w in 0..wpr {
                    data.swap(pivot * wpr + w, rank * wpr + w);
                }
            }
            for r in (rank + 1)..self.rows {
                if data[r * wpr + word] & bit != 0 {
                    for w in word..wpr {
                        let v = data[rank * wpr + w];
                        data[r * wpr + w] ^= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Whether the leading `size x size` block is lower triangular with ones
    /// on the diagonal.
    pub fn is_lower_unitriangular(&self, size: usize) -> bool {
        size <= self.rows.min(self.cols)
            && (0..size).all(|i| self.get(i, i) && ((i + 1)..size).all(|j| !self.get(i, j)))
    }

    pub fn column_is_zero(&self, col: usize) -> bool {
        (0..self.rows).all(|r| !self.get(r, col))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row_string(r))?;
        }
        Ok(())
    }
}
