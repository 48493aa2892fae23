//! Dense bit vectors over F2 and incremental Gaussian elimination.

/// A fixed-length vector over F2, packed into 64-bit blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Vec {
    len: usize,
    bits: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.bits[i / 64] |= 1 << (i % 64);
        } else {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.bits[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Index of the first set bit, if any.
    pub fn leading(&self) -> Option<usize> {
        for (block, &w) in self.bits.iter().enumerate() {
            if w != 0 {
                return Some(block * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// A row basis in reduced form, one pivot per row.  Supports incremental
/// insertion and membership tests for spans of F2 vectors.
#[derive(Clone, Debug)]
pub struct F2Basis {
    dim: usize,
    rows: Vec<F2Vec>,
    pivots: Vec<usize>,
}

impl F2Basis {
    pub fn new(dim: usize) -> Self {
        F2Basis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Eliminates `v` against the current rows and returns the residual.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v` into the span.  Returns true if the rank grew.
    pub fn insert(&mut self, v: &F2Vec) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some(p) => {
                // keep earlier rows reduced against the new pivot
                for row in &mut self.rows {
                    if row.get(p) {
                        row.xor_assign(&r);
                    }
                }
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
        }
    }
}

/// Whether the binomial coefficient C(n, r) is odd (Lucas' theorem).
pub fn binomial_is_odd(n: u64, r: u64) -> bool {
    r <= n && (r & (n - r)) == 0
}
