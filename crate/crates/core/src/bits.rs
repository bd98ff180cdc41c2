//! Minimal fixed-width bitset matrix used for order relations and adjacency.

#[derive(Clone)]
pub(crate) struct BitMatrix {
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            words,
            data: vec![0; rows * words],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    /// Indices set in both rows, ascending.
    pub fn and_rows(&self, r1: usize, r2: usize) -> Vec<usize> {
        let (a, b) = (self.row(r1), self.row(r2));
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut bits = a[w] & b[w];
            while bits != 0 {
                let tz = bits.trailing_zeros() as usize;
                out.push(w * 64 + tz);
                bits &= bits - 1;
            }
        }
        out
    }
}

/// A single bit row, used for set-of-vertices bookkeeping.
#[derive(Clone)]
pub(crate) struct BitRow {
    data: Vec<u64>,
}

impl BitRow {
    pub fn new(cols: usize) -> Self {
        BitRow {
            data: vec![0; cols.div_ceil(64)],
        }
    }

    #[inline]
    pub fn set(&mut self, c: usize) {
        self.data[c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub fn clear(&mut self, c: usize) {
        self.data[c / 64] &= !(1 << (c % 64));
    }

    #[inline]
    pub fn get(&self, c: usize) -> bool {
        self.data[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.data.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let tz = bits.trailing_zeros() as usize;
                out.push(w * 64 + tz);
                bits &= bits - 1;
            }
        }
        out
    }
}
