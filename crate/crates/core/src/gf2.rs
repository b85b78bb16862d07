//! Dense linear algebra over GF(2) on bit-packed vectors.
//!
//! Everything here is exact: ranks, kernels and span membership are computed
//! by Gaussian elimination on `u64` blocks, never by floating point.

const BLOCK: usize = 64;

/// Bit vector of fixed length over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vec {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vec {
    pub fn zeros(len: usize) -> Self {
        Gf2Vec {
            len,
            words: vec![0; len.div_ceil(BLOCK)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / BLOCK] >> (i % BLOCK) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % BLOCK);
        if value {
            self.words[i / BLOCK] |= mask;
        } else {
            self.words[i / BLOCK] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &Gf2Vec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the first set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * BLOCK + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

impl std::fmt::Debug for Gf2Vec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Lexicographic order reading bit 0 first (bit 0 is the most significant).
impl Ord for Gf2Vec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        assert_eq!(self.len, other.len, "length mismatch in comparison");
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                // The vector holding 0 at the lowest differing bit is smaller.
                let bit = (a ^ b).trailing_zeros();
                return if a >> bit & 1 == 0 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Gf2Vec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Bit-packed matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vec>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![Gf2Vec::zeros(cols); rows],
        }
    }

    pub fn from_rows(rows: Vec<Gf2Vec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        Gf2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &Gf2Vec {
        &self.data[r]
    }

    pub fn rank(&self) -> usize {
        let mut ech = Gf2Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Basis of the right kernel: all v with M·v = 0.
    pub fn kernel_basis(&self) -> Vec<Gf2Vec> {
        let mut ech = Gf2Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row.clone());
        }
        ech.kernel_basis()
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &Gf2Vec) -> Gf2Vec {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        let mut out = Gf2Vec::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = 0u64;
            for (a, b) in row.words.iter().zip(&v.words) {
                acc ^= a & b;
            }
            out.set(r, acc.count_ones() % 2 == 1);
        }
        out
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.data {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

/// Row space in reduced row echelon form, built incrementally.
///
/// Rows are kept fully reduced with strictly increasing pivots, so
/// [`Gf2Echelon::reduce`] maps every vector to the unique coset
/// representative that vanishes on all pivot columns — which is also the
/// lexicographically least element of its coset.
#[derive(Clone)]
pub struct Gf2Echelon {
    len: usize,
    rows: Vec<Gf2Vec>,
    pivots: Vec<usize>,
}

impl Gf2Echelon {
    pub fn new(len: usize) -> Self {
        Gf2Echelon {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Gf2Vec] {
        &self.rows
    }

    /// Insert a vector; returns true when it enlarges the row space.
    pub fn insert(&mut self, v: Gf2Vec) -> bool {
        assert_eq!(v.len(), self.len, "length mismatch in insert");
        let v = self.reduce(v);
        let Some(pivot) = v.first_one() else {
            return false;
        };
        // Back-substitute to keep earlier rows reduced against the new pivot.
        for row in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&v);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, v);
        true
    }

    /// Canonical representative of `v` modulo the row space.
    pub fn reduce(&self, mut v: Gf2Vec) -> Gf2Vec {
        assert_eq!(v.len(), self.len, "length mismatch in reduce");
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            if v.get(pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &Gf2Vec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Basis of {v : R·v = 0} where R is the stored row space.
    pub fn kernel_basis(&self) -> Vec<Gf2Vec> {
        let pivot_set: std::collections::HashSet<usize> = self.pivots.iter().copied().collect();
        let mut basis = Vec::with_capacity(self.len - self.rows.len());
        for free in 0..self.len {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = Gf2Vec::zeros(self.len);
            v.set(free, true);
            for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
                if row.get(free) {
                    v.set(pivot, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}
