//! Normal forms in the k-fold tensor power of the rank-one cohomology ring.
//!
//! The ambient ring is generated over the point coefficients by a_1..a_k in
//! bidegree (1,1) and b_1..b_k in bidegree (2,1), subject to
//! a_i^2 = r a_i + t b_i.  A monomial is normal when every a-exponent is at
//! most one; rewriting a square strictly lowers the total a-degree, so the
//! reduction below terminates with a unique normal form.

use crate::m2::{Bidegree, M2Element};
use crate::orbit::{arrangements, orbit_size, partition_of_factors, Factor};
use crate::partitions::Partition;
use std::collections::HashMap;
use std::fmt;

/// A normal monomial: a-exponents packed as bits, b-exponents per index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TkMonomial {
    pub a_mask: u64,
    pub b: Vec<u32>,
}

impl TkMonomial {
    pub fn one(k: usize) -> Self {
        TkMonomial {
            a_mask: 0,
            b: vec![0; k],
        }
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    pub fn from_factors(factors: &[Factor]) -> Self {
        let mut m = TkMonomial::one(factors.len());
        for (i, f) in factors.iter().enumerate() {
            if f.a {
                m.a_mask |= 1 << i;
            }
            m.b[i] = f.d;
        }
        m
    }

    pub fn factors(&self) -> Vec<Factor> {
        (0..self.k())
            .map(|i| Factor {
                a: self.a_mask >> i & 1 == 1,
                d: self.b[i],
            })
            .collect()
    }

    pub fn bidegree(&self) -> Bidegree {
        let a = self.a_mask.count_ones() as i64;
        let d: i64 = self.b.iter().map(|&x| x as i64).sum();
        Bidegree::new(a + 2 * d, a + d)
    }

    /// Partition of per-index pure-factor degrees; classifies the orbit.
    pub fn orbit_partition(&self) -> Partition {
        partition_of_factors(&self.factors())
    }

    /// The canonical representative of a partition's orbit: factor degrees
    /// assigned to indices in ascending order.
    pub fn from_partition(p: &Partition) -> Self {
        Self::from_factors(&crate::orbit::factors_of_partition(p))
    }

    pub fn orbit_len(&self) -> u64 {
        orbit_size(&self.factors())
    }

    /// All monomials in the orbit.
    pub fn orbit(&self) -> Vec<TkMonomial> {
        arrangements(&self.factors())
            .into_iter()
            .map(|f| TkMonomial::from_factors(&f))
            .collect()
    }

    pub fn mul_raw(&self, other: &TkMonomial) -> RawMonomial {
        debug_assert_eq!(self.k(), other.k());
        RawMonomial {
            a: (0..self.k())
                .map(|i| (self.a_mask >> i & 1) as u32 + (other.a_mask >> i & 1) as u32)
                .collect(),
            b: self
                .b
                .iter()
                .zip(&other.b)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }
}

impl fmt::Display for TkMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lead = true;
        for i in 0..self.k() {
            if self.a_mask >> i & 1 == 1 {
                if !lead {
                    write!(f, " ")?;
                }
                lead = false;
                write!(f, "a{}", i + 1)?;
            }
            if self.b[i] > 0 {
                if !lead {
                    write!(f, " ")?;
                }
                lead = false;
                if self.b[i] == 1 {
                    write!(f, "b{}", i + 1)?;
                } else {
                    write!(f, "b{}^{}", i + 1, self.b[i])?;
                }
            }
        }
        if lead {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A monomial with arbitrary a-exponents, before normalization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawMonomial {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl RawMonomial {
    pub fn k(&self) -> usize {
        self.a.len()
    }
}

/// Rewrites every a_i^2 into r a_i + t b_i.  Returns the normal monomials
/// with the coefficient each branch accumulates.
pub fn normalize_raw(m: &RawMonomial) -> Vec<(TkMonomial, M2Element)> {
    match m.a.iter().position(|&e| e >= 2) {
        None => {
            let mut mono = TkMonomial::one(m.k());
            for (i, &e) in m.a.iter().enumerate() {
                if e == 1 {
                    mono.a_mask |= 1 << i;
                }
            }
            mono.b = m.b.clone();
            vec![(mono, M2Element::one())]
        }
        Some(i) => {
            let mut out = Vec::new();
            let mut rho_branch = m.clone();
            rho_branch.a[i] -= 1;
            for (mono, c) in normalize_raw(&rho_branch) {
                out.push((mono, c.mul(&M2Element::rho())));
            }
            let mut tau_branch = m.clone();
            tau_branch.a[i] -= 2;
            tau_branch.b[i] += 1;
            for (mono, c) in normalize_raw(&tau_branch) {
                out.push((mono, c.mul(&M2Element::tau())));
            }
            out
        }
    }
}

/// A polynomial in normal form: normal monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TkElement {
    pub k: usize,
    pub terms: HashMap<TkMonomial, M2Element>,
}

impl TkElement {
    pub fn zero(k: usize) -> Self {
        TkElement {
            k,
            terms: HashMap::new(),
        }
    }

    pub fn add_term(&mut self, mono: TkMonomial, coeff: M2Element) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(mono.k(), self.k);
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Normalizes a raw polynomial, given as raw monomials with coefficients.
pub fn normalize(poly: &[(RawMonomial, M2Element)], k: usize) -> TkElement {
    let mut out = TkElement::zero(k);
    for (raw, coeff) in poly {
        assert_eq!(raw.k(), k, "raw monomial arity");
        for (mono, extra) in normalize_raw(raw) {
            out.add_term(mono, coeff.mul(&extra));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::m2::M2Element as M2;

    fn raw(a: &[u32], b: &[u32]) -> RawMonomial {
        RawMonomial {
            a: a.to_vec(),
            b: b.to_vec(),
        }
    }

    #[test]
    fn square_rewrites_once() {
        // a1^2 -> r a1 + t b1
        let n = normalize(&[(raw(&[2], &[0]), M2::one())], 1);
        let mut expect = TkElement::zero(1);
        expect.add_term(TkMonomial { a_mask: 1, b: vec![0] }, M2::rho());
        expect.add_term(TkMonomial { a_mask: 0, b: vec![1] }, M2::tau());
        assert_eq!(n, expect);
    }

    #[test]
    fn cube_matches_both_association_orders() {
        // a1^3 = r^2 a1 + r t b1 + t a1 b1, and (a1*a1)*a1 = a1*(a1*a1)
        let n = normalize(&[(raw(&[3], &[0]), M2::one())], 1);
        let mut expect = TkElement::zero(1);
        expect.add_term(TkMonomial { a_mask: 1, b: vec![0] }, M2::pos(0, 2));
        expect.add_term(TkMonomial { a_mask: 0, b: vec![1] }, M2::pos(1, 1));
        expect.add_term(TkMonomial { a_mask: 1, b: vec![1] }, M2::tau());
        assert_eq!(n, expect);

        // brute-force: normalize a1^2 first, then multiply by a1 again
        let square = normalize(&[(raw(&[2], &[0]), M2::one())], 1);
        let mut assoc = TkElement::zero(1);
        for (m, c) in &square.terms {
            let r = RawMonomial {
                a: vec![(m.a_mask & 1) as u32 + 1],
                b: m.b.clone(),
            };
            for (mono, extra) in normalize_raw(&r) {
                assoc.add_term(mono, c.mul(&extra));
            }
        }
        assert_eq!(assoc, expect);
    }

    #[test]
    fn already_normal() {
        let n = normalize(&[(raw(&[0], &[5]), M2::one())], 1);
        assert_eq!(n.terms.len(), 1);
        assert!(n
            .terms
            .contains_key(&TkMonomial { a_mask: 0, b: vec![5] }));
    }

    #[test]
    fn orbit_of_partition() {
        let p = Partition::new(vec![1, 2, 2]);
        let m = TkMonomial::from_partition(&p);
        assert_eq!(m.orbit_partition(), p);
        let orbit = m.orbit();
        assert_eq!(orbit.len() as u64, m.orbit_len());
        assert_eq!(orbit.len(), 3);
        for o in &orbit {
            assert_eq!(o.orbit_partition(), p);
            assert_eq!(o.bidegree(), m.bidegree());
        }
    }
}
