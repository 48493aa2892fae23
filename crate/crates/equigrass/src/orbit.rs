//! Shared machinery for symmetric-group orbits of monomials.
//!
//! A monomial in variables a_1..a_k, b_1..b_k (a-exponents at most 1) factors
//! per index into a "pure" piece a^eps b^d.  The orbit of the monomial under
//! simultaneous permutation of indices is determined by the multiset of pure
//! factors, and the multiset is determined by the sorted list of factor
//! degrees eps + 2d (parity separates eps).

use crate::partitions::Partition;

/// Pure factor at one index: an optional a together with a b-power.
/// Ordering by (d, a) agrees with ordering by total degree a + 2d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub d: u32,
    pub a: bool,
}

impl Factor {
    pub fn degree(&self) -> u32 {
        2 * self.d + u32::from(self.a)
    }

    /// Degree-to-factor decoding: 2r -> b^r, 2r+1 -> a b^r.
    pub fn from_degree(deg: u32) -> Factor {
        Factor {
            d: deg / 2,
            a: deg % 2 == 1,
        }
    }
}

/// Factors of the canonical monomial attached to a partition.
pub fn factors_of_partition(p: &Partition) -> Vec<Factor> {
    p.parts().iter().map(|&d| Factor::from_degree(d)).collect()
}

pub fn partition_of_factors(factors: &[Factor]) -> Partition {
    Partition::new(factors.iter().map(|f| f.degree()).collect())
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct arrangements of the factor multiset, i.e. the monomials in
/// the orbit. `factors` need not be sorted.
pub fn arrangements(factors: &[Factor]) -> Vec<Vec<Factor>> {
    let mut v = factors.to_vec();
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(v.clone());
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}

/// Orbit size k!/(product of multiplicities!) without enumerating.
pub fn orbit_size(factors: &[Factor]) -> u64 {
    let mut v = factors.to_vec();
    v.sort_unstable();
    // running multinomial coefficient of the prefix: multiply by i and divide
    // by the position of v[i] within its block of equal factors (exact)
    let mut size: u64 = 1;
    let mut run = 0u64;
    for i in 0..v.len() {
        if i > 0 && v[i] == v[i - 1] {
            run += 1;
        } else {
            run = 1;
        }
        size = size * (i as u64 + 1) / run;
    }
    size
}
