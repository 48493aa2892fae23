//! Exact arithmetic in the bigraded coefficient ring of a point.
//!
//! The ring has a positive cone Z/2[t, r], where t sits in bidegree (0,1) and
//! r in bidegree (1,1), and a negative cone spanned by classes Q/(t^k r^l) in
//! bidegree (-l, -2-k-l), with Q^2 = 0.  Every bidegree carries at most one
//! basis class, so an element is a finite set of monomials added mod 2.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

/// Bidegree (p, q): topological degree and weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, other: Bidegree) -> Bidegree {
        Bidegree::new(self.p + other.p, self.q + other.q)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A basis monomial: t^a r^b in the positive cone or Q/(t^k r^l) in the
/// negative cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum M2Monomial {
    Pos { tau: u32, rho: u32 },
    Neg { tau: u32, rho: u32 },
}

impl M2Monomial {
    pub fn bidegree(&self) -> Bidegree {
        match *self {
            M2Monomial::Pos { tau, rho } => Bidegree::new(rho as i64, tau as i64 + rho as i64),
            M2Monomial::Neg { tau, rho } => {
                Bidegree::new(-(rho as i64), -2 - tau as i64 - rho as i64)
            }
        }
    }

    /// Product of two monomials; `None` means zero.  Mixed-cone products are
    /// governed by divisibility: t^a r^b * Q/(t^k r^l) survives exactly when
    /// a <= k and b <= l, and Q^2 = 0 kills the negative cone against itself.
    pub fn mul(&self, other: &M2Monomial) -> Option<M2Monomial> {
        use M2Monomial::*;
        match (*self, *other) {
            (Pos { tau: a, rho: b }, Pos { tau: c, rho: d }) => Some(Pos {
                tau: a + c,
                rho: b + d,
            }),
            (Neg { .. }, Neg { .. }) => None,
            (Pos { tau: a, rho: b }, Neg { tau: k, rho: l })
            | (Neg { tau: k, rho: l }, Pos { tau: a, rho: b }) => {
                if a <= k && b <= l {
                    Some(Neg {
                        tau: k - a,
                        rho: l - b,
                    })
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for M2Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: &str, e: u32, lead: &mut bool) -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !*lead {
                write!(f, " ")?;
            }
            *lead = false;
            if e == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{e}")
            }
        }
        match *self {
            M2Monomial::Pos { tau, rho } => {
                if tau == 0 && rho == 0 {
                    return write!(f, "1");
                }
                let mut lead = true;
                var(f, "t", tau, &mut lead)?;
                var(f, "r", rho, &mut lead)
            }
            M2Monomial::Neg { tau, rho } => {
                if tau == 0 && rho == 0 {
                    return write!(f, "Q");
                }
                write!(f, "Q/(")?;
                let mut lead = true;
                var(f, "t", tau, &mut lead)?;
                var(f, "r", rho, &mut lead)?;
                write!(f, ")")
            }
        }
    }
}

/// Whether the ring is nonzero in bidegree (p, q).
pub fn in_support(p: i64, q: i64) -> bool {
    (q >= 0 && 0 <= p && p <= q) || (p <= 0 && q <= p - 2)
}

/// The unique basis monomial in a supported bidegree.
pub fn monomial_at(p: i64, q: i64) -> Option<M2Monomial> {
    if !in_support(p, q) {
        return None;
    }
    if q >= 0 {
        Some(M2Monomial::Pos {
            tau: (q - p) as u32,
            rho: p as u32,
        })
    } else {
        Some(M2Monomial::Neg {
            tau: (p - q - 2) as u32,
            rho: (-p) as u32,
        })
    }
}

/// A finite F2-combination of basis monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct M2Element {
    terms: BTreeSet<M2Monomial>,
}

impl M2Element {
    pub fn zero() -> Self {
        M2Element::default()
    }

    pub fn from_monomial(m: M2Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        M2Element { terms }
    }

    pub fn one() -> Self {
        Self::pos(0, 0)
    }

    pub fn tau() -> Self {
        Self::pos(1, 0)
    }

    pub fn rho() -> Self {
        Self::pos(0, 1)
    }

    pub fn theta() -> Self {
        Self::neg(0, 0)
    }

    /// t^a r^b
    pub fn pos(tau: u32, rho: u32) -> Self {
        Self::from_monomial(M2Monomial::Pos { tau, rho })
    }

    /// Q/(t^k r^l)
    pub fn neg(tau: u32, rho: u32) -> Self {
        Self::from_monomial(M2Monomial::Neg { tau, rho })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.contains_unit()
    }

    /// Whether the monomial 1 appears; equivalently whether the element is
    /// nonzero modulo the ideal (r, t, negative cone).
    pub fn contains_unit(&self) -> bool {
        self.terms.contains(&M2Monomial::Pos { tau: 0, rho: 0 })
    }

    pub fn terms(&self) -> impl Iterator<Item = &M2Monomial> {
        self.terms.iter()
    }

    pub fn toggle(&mut self, m: M2Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Mod-2 sum (symmetric difference of term sets).
    pub fn add(&self, other: &M2Element) -> M2Element {
        let mut out = self.clone();
        for &m in &other.terms {
            out.toggle(m);
        }
        out
    }

    pub fn mul(&self, other: &M2Element) -> M2Element {
        let mut out = M2Element::zero();
        for a in &self.terms {
            for b in &other.terms {
                if let Some(m) = a.mul(b) {
                    out.toggle(m);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> M2Element {
        let mut out = M2Element::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter();
        match it.next() {
            None => true,
            Some(first) => it.all(|m| m.bidegree() == first.bidegree()),
        }
    }

    /// Bidegree of a nonzero homogeneous element.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let first = self.terms.iter().next()?.bidegree();
        if self.terms.iter().all(|m| m.bidegree() == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Image under the map to F2 that sends t to 1 and kills r and the
    /// negative cone.
    pub fn forget(&self) -> bool {
        let mut acc = false;
        for m in &self.terms {
            if let M2Monomial::Pos { rho: 0, .. } = m {
                acc = !acc;
            }
        }
        acc
    }
}

impl fmt::Display for M2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tau_times_rho() {
        let p = M2Element::tau().mul(&M2Element::rho());
        assert_eq!(p, M2Element::pos(1, 1));
        assert_eq!(p.bidegree(), Some(Bidegree::new(1, 2)));
    }

    #[test]
    fn theta_squares_to_zero() {
        assert!(M2Element::theta().mul(&M2Element::theta()).is_zero());
    }

    #[test]
    fn tau_into_negative_cone() {
        // t * Q/(t r) = Q/r
        let p = M2Element::tau().mul(&M2Element::neg(1, 1));
        assert_eq!(p, M2Element::neg(0, 1));
        // t * Q = 0: bidegree (0,-1) is outside the support
        assert!(M2Element::tau().mul(&M2Element::theta()).is_zero());
        assert!(!in_support(0, -1));
    }

    #[test]
    fn forgetful() {
        assert!(M2Element::pos(3, 0).forget());
        assert!(!M2Element::rho().add(&M2Element::pos(1, 1)).forget());
        assert!(!M2Element::neg(2, 0).forget());
        assert!(M2Element::one().forget());
    }

    #[test]
    fn support_matches_monomials() {
        // every monomial's bidegree is in the support, and every supported
        // bidegree holds exactly one monomial
        for tau in 0..8u32 {
            for rho in 0..8u32 {
                for m in [M2Monomial::Pos { tau, rho }, M2Monomial::Neg { tau, rho }] {
                    let d = m.bidegree();
                    assert!(in_support(d.p, d.q), "{m} at {d}");
                    assert_eq!(monomial_at(d.p, d.q), Some(m));
                }
            }
        }
        for p in -12..=12i64 {
            for q in -12..=12i64 {
                assert_eq!(in_support(p, q), monomial_at(p, q).is_some());
            }
        }
    }

    fn random_element(rng: &mut ChaCha8Rng) -> M2Element {
        let mut e = M2Element::zero();
        for _ in 0..rng.gen_range(0..4) {
            let tau = rng.gen_range(0..4);
            let rho = rng.gen_range(0..4);
            if rng.gen_bool(0.7) {
                e.toggle(M2Monomial::Pos { tau, rho });
            } else {
                e.toggle(M2Monomial::Neg { tau, rho });
            }
        }
        e
    }

    #[test]
    fn mul_commutative_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let x = random_element(&mut rng);
            let y = random_element(&mut rng);
            let z = random_element(&mut rng);
            assert_eq!(x.mul(&y), y.mul(&x));
            assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            // distributivity over mod-2 addition
            assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        }
    }

    #[test]
    fn degree_additive_or_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let a = {
                let e = random_element(&mut rng);
                match e.terms.iter().next() {
                    Some(&m) => M2Element::from_monomial(m),
                    None => continue,
                }
            };
            let b = {
                let e = random_element(&mut rng);
                match e.terms.iter().next() {
                    Some(&m) => M2Element::from_monomial(m),
                    None => continue,
                }
            };
            let p = a.mul(&b);
            if !p.is_zero() {
                let expect = a.bidegree().unwrap() + b.bidegree().unwrap();
                assert_eq!(p.bidegree(), Some(expect));
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(M2Element::one().to_string(), "1");
        assert_eq!(M2Element::pos(2, 1).to_string(), "t^2 r");
        assert_eq!(M2Element::theta().to_string(), "Q");
        assert_eq!(M2Element::neg(2, 1).to_string(), "Q/(t^2 r)");
        assert_eq!(M2Element::neg(0, 3).to_string(), "Q/(r^3)");
        let s = M2Element::tau().add(&M2Element::rho());
        assert_eq!(s.to_string(), "t + r");
    }
}
