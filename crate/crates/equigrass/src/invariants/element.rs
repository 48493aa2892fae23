//! Elements of the invariant ring in the canonical orbit-sum basis.
//!
//! The symmetric group permutes the index pairs (a_i, b_i); the invariant
//! subring is a free module over the point coefficients with one basis class
//! per orbit of normal monomials, and orbits are classified by partitions of
//! the per-index factor degrees.  A partition with k parts in which the part
//! 2r stands for b^r and the part 2r+1 for a b^r therefore names a basis
//! class [m]; the class has bidegree (sum, weight) of the partition.

use super::tk::{normalize_raw, TkElement, TkMonomial};
use crate::chart::RankChart;
use crate::m2::{Bidegree, M2Element};
use crate::partitions::{enumerate_partitions, Partition};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantsError {
    /// An orbit whose monomial coefficients disagree (or are missing).
    NotInvariant {
        orbit: Partition,
        detail: String,
    },
    OutOfRange {
        what: String,
    },
}

impl fmt::Display for InvariantsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantsError::NotInvariant { orbit, detail } => {
                write!(f, "not invariant on orbit {orbit}: {detail}")
            }
            InvariantsError::OutOfRange { what } => write!(f, "out of range: {what}"),
        }
    }
}

impl std::error::Error for InvariantsError {}

/// How `to_basis` treats a polynomial that is not invariant: reject it, or
/// project it by summing the coefficients over each orbit (the coset-sum
/// averaging available in characteristic two).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Collect {
    Strict,
    Symmetrize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantElement {
    k: usize,
    terms: BTreeMap<Partition, M2Element>,
}

impl InvariantElement {
    pub fn zero(k: usize) -> Self {
        InvariantElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &M2Element)> {
        self.terms.iter()
    }

    pub fn coeff(&self, class: &Partition) -> M2Element {
        self.terms.get(class).cloned().unwrap_or_else(M2Element::zero)
    }

    /// The basis class [m] named by a partition, with coefficient 1.
    pub fn class(k: usize, p: Partition) -> Result<Self, InvariantsError> {
        if p.k() != k {
            return Err(InvariantsError::OutOfRange {
                what: format!("partition {p} does not have {k} parts"),
            });
        }
        Ok(Self::zero(k).with(p, M2Element::one()))
    }

    pub fn one(k: usize) -> Self {
        Self::scalar(k, M2Element::one())
    }

    pub fn scalar(k: usize, c: M2Element) -> Self {
        Self::zero(k).with(Partition::zeros(k), c)
    }

    fn with(mut self, class: Partition, c: M2Element) -> Self {
        self.add_class(class, c);
        self
    }

    pub fn add_class(&mut self, class: Partition, c: M2Element) {
        debug_assert_eq!(class.k(), self.k);
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&class).unwrap_or_else(M2Element::zero);
        let sum = cur.add(&c);
        if !sum.is_zero() {
            self.terms.insert(class, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_class(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &M2Element) -> Self {
        let mut out = Self::zero(self.k);
        for (p, x) in &self.terms {
            out.add_class(p.clone(), x.mul(c));
        }
        out
    }

    /// Orbit sum of a normal monomial: the single basis class of its orbit.
    pub fn orbit_sum(m: &TkMonomial) -> Self {
        Self::zero(m.k()).with(m.orbit_partition(), M2Element::one())
    }

    /// Full expansion as a polynomial.
    pub fn expand(&self) -> TkElement {
        let mut out = TkElement::zero(self.k);
        for (p, c) in &self.terms {
            for m in TkMonomial::from_partition(p).orbit() {
                out.add_term(m, c.clone());
            }
        }
        out
    }

    /// Collects a normal-form polynomial into the orbit basis.  In strict
    /// mode every orbit must appear with one common coefficient on all of its
    /// monomials; otherwise the per-orbit coefficients are summed.
    pub fn to_basis(e: &TkElement, mode: Collect) -> Result<Self, InvariantsError> {
        struct Acc {
            coeff: M2Element,
            sum: M2Element,
            seen: u64,
            mismatch: bool,
        }
        let mut groups: BTreeMap<Partition, Acc> = BTreeMap::new();
        for (m, c) in &e.terms {
            let orbit = m.orbit_partition();
            groups
                .entry(orbit)
                .and_modify(|acc| {
                    acc.seen += 1;
                    acc.sum = acc.sum.add(c);
                    if acc.coeff != *c {
                        acc.mismatch = true;
                    }
                })
                .or_insert_with(|| Acc {
                    coeff: c.clone(),
                    sum: c.clone(),
                    seen: 1,
                    mismatch: false,
                });
        }
        let mut out = Self::zero(e.k);
        for (orbit, acc) in groups {
            let full = TkMonomial::from_partition(&orbit).orbit_len();
            match mode {
                Collect::Strict => {
                    if acc.mismatch {
                        return Err(InvariantsError::NotInvariant {
                            detail: "coefficients differ within the orbit".into(),
                            orbit,
                        });
                    }
                    if acc.seen != full {
                        return Err(InvariantsError::NotInvariant {
                            detail: format!("{} of {} orbit monomials present", acc.seen, full),
                            orbit,
                        });
                    }
                    out.add_class(orbit, acc.coeff);
                }
                Collect::Symmetrize => out.add_class(orbit, acc.sum),
            }
        }
        Ok(out)
    }

    /// Ring product, computed by full expansion followed by normalization
    /// and re-collection.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "mixed arities");
        let ex = self.expand();
        let ey = other.expand();
        let mut out = TkElement::zero(self.k);
        for (mx, cx) in &ex.terms {
            for (my, cy) in &ey.terms {
                let c = cx.mul(cy);
                if c.is_zero() {
                    continue;
                }
                let raw = mx.mul_raw(my);
                for (mono, extra) in normalize_raw(&raw) {
                    out.add_term(mono, c.mul(&extra));
                }
            }
        }
        Self::to_basis(&out, Collect::Strict).expect("product of invariants is invariant")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.k);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Bidegree of a nonzero homogeneous element.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut deg = None;
        for (p, c) in &self.terms {
            let base = Bidegree::new(p.sum() as i64, p.weight() as i64);
            let cd = c.bidegree()?;
            let total = base + cd;
            match deg {
                None => deg = Some(total),
                Some(d) if d == total => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// Reduction modulo (r, t): keeps the classes whose coefficient contains
    /// the unit monomial.
    pub fn mod_rho_tau(&self) -> Self {
        let mut out = Self::zero(self.k);
        for (p, c) in &self.terms {
            if c.contains_unit() {
                out.add_class(p.clone(), M2Element::one());
            }
        }
        out
    }

    /// Whether every coefficient lies in the ideal (r, t).
    pub fn in_rho_tau_ideal(&self) -> bool {
        self.terms.values().all(|c| !c.contains_unit())
    }

    // ---- named classes ----

    /// w_i, the i-th elementary symmetric class in the a's.
    pub fn w(k: usize, i: usize) -> Result<Self, InvariantsError> {
        if i < 1 || i > k {
            return Err(InvariantsError::OutOfRange {
                what: format!("w_{i} needs 1 <= {i} <= k = {k}"),
            });
        }
        let mut parts = vec![0; k - i];
        parts.extend(std::iter::repeat(1).take(i));
        Self::class(k, Partition::new(parts))
    }

    /// c_i, the i-th elementary symmetric class in the b's.
    pub fn c(k: usize, i: usize) -> Result<Self, InvariantsError> {
        if i < 1 || i > k {
            return Err(InvariantsError::OutOfRange {
                what: format!("c_{i} needs 1 <= {i} <= k = {k}"),
            });
        }
        let mut parts = vec![0; k - i];
        parts.extend(std::iter::repeat(2).take(i));
        Self::class(k, Partition::new(parts))
    }

    /// wc_{i,j} = [a_1..a_i b_{i+1}..b_{i+j}], the disjoint-index class.
    pub fn wc(k: usize, i: usize, j: usize) -> Result<Self, InvariantsError> {
        if i + j > k {
            return Err(InvariantsError::OutOfRange {
                what: format!("wc_{{{i},{j}}} needs i + j <= k = {k}"),
            });
        }
        let mut parts = vec![0; k - i - j];
        parts.extend(std::iter::repeat(1).take(i));
        parts.extend(std::iter::repeat(2).take(j));
        Self::class(k, Partition::new(parts))
    }

    /// w_i^(e) = [a_1..a_i b_1^e..b_i^e], the overlapping-index class.
    pub fn w_e(k: usize, i: usize, e: u32) -> Result<Self, InvariantsError> {
        if i < 1 || i > k {
            return Err(InvariantsError::OutOfRange {
                what: format!("w_{i}^({e}) needs 1 <= {i} <= k = {k}"),
            });
        }
        let mut parts = vec![0; k - i];
        parts.extend(std::iter::repeat(2 * e + 1).take(i));
        Self::class(k, Partition::new(parts))
    }

    /// The power-sum class [b_1^n].
    pub fn b_power(k: usize, n: u32) -> Result<Self, InvariantsError> {
        if n == 0 {
            return Ok(Self::one(k));
        }
        let mut parts = vec![0; k - 1];
        parts.push(2 * n);
        Self::class(k, Partition::new(parts))
    }
}

impl fmt::Display for InvariantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{p}")?;
            } else if c.terms().count() > 1 {
                write!(f, "({c}) * {p}")?;
            } else {
                write!(f, "{c} * {p}")?;
            }
        }
        Ok(())
    }
}

/// Number of basis classes per bidegree: chart of the free-module ranks.
pub fn rank_chart_inv(k: usize, p_max: u32) -> RankChart {
    let mut chart = RankChart::new();
    for p in 0..=p_max {
        for part in enumerate_partitions(p, k) {
            chart.add(p, part.weight(), 1);
        }
    }
    chart
}

/// Right-hand side of the reduction w_1^(e) = sum_i w_1^(e-i) c_i, valid for
/// e >= k.
pub fn w1e_reduce(k: usize, e: u32) -> Result<InvariantElement, InvariantsError> {
    if (e as usize) < k {
        return Err(InvariantsError::OutOfRange {
            what: format!("w_1^({e}) reduction needs e >= k = {k}"),
        });
    }
    let mut out = InvariantElement::zero(k);
    for i in 1..=k {
        let term = InvariantElement::w_e(k, 1, e - i as u32)?.mul(&InvariantElement::c(k, i)?);
        out = out.add(&term);
    }
    Ok(out)
}

/// Fully reduced square of w_i^(e).
pub fn square_w_e(k: usize, i: usize, e: u32) -> Result<InvariantElement, InvariantsError> {
    let x = InvariantElement::w_e(k, i, e)?;
    Ok(x.mul(&x))
}
