//! Symmetric-function bookkeeping: mod-2 Newton polynomials in the Chern
//! classes, and the forgetful map onto ordinary symmetric polynomials in the
//! Stiefel-Whitney classes.

use super::element::{InvariantElement, InvariantsError};
use std::collections::BTreeSet;
use std::fmt;

/// An F2 polynomial in c_1..c_k, kept as a set of exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPoly {
    pub k: usize,
    terms: BTreeSet<Vec<u32>>,
}

impl CPoly {
    pub fn zero(k: usize) -> Self {
        CPoly {
            k,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        let mut p = Self::zero(k);
        p.toggle(vec![0; k]);
        p
    }

    /// The generator c_i.
    pub fn gen(k: usize, i: usize) -> Self {
        assert!((1..=k).contains(&i));
        let mut e = vec![0; k];
        e[i - 1] = 1;
        let mut p = Self::zero(k);
        p.toggle(e);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.iter()
    }

    fn toggle(&mut self, e: Vec<u32>) {
        if !self.terms.remove(&e) {
            self.terms.insert(e);
        }
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let mut out = self.clone();
        for t in &other.terms {
            out.toggle(t.clone());
        }
        out
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut out = Self::zero(self.k);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        out
    }

    /// Evaluation in the invariant ring, substituting the Chern classes.
    pub fn eval(&self) -> Result<InvariantElement, InvariantsError> {
        let mut out = InvariantElement::zero(self.k);
        for t in &self.terms {
            let mut m = InvariantElement::one(self.k);
            for (i, &e) in t.iter().enumerate() {
                if e > 0 {
                    m = m.mul(&InvariantElement::c(self.k, i + 1)?.pow(e));
                }
            }
            out = out.add(&m);
        }
        Ok(out)
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_exponent_poly(&self.terms, "c", f)
    }
}

/// An F2 polynomial in the nonequivariant classes w_1..w_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoly {
    pub k: usize,
    terms: BTreeSet<Vec<u32>>,
}

impl WPoly {
    pub fn zero(k: usize) -> Self {
        WPoly {
            k,
            terms: BTreeSet::new(),
        }
    }

    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut out = Self::zero(k);
        for t in terms {
            assert_eq!(t.len(), k);
            if !out.terms.remove(&t) {
                out.terms.insert(t);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_exponent_poly(&self.terms, "w", f)
    }
}

fn fmt_exponent_poly(
    terms: &BTreeSet<Vec<u32>>,
    var: &str,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, t) in terms.iter().enumerate() {
        if n > 0 {
            write!(f, " + ")?;
        }
        let mut lead = true;
        for (i, &e) in t.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !lead {
                write!(f, " ")?;
            }
            lead = false;
            if e == 1 {
                write!(f, "{var}_{}", i + 1)?;
            } else {
                write!(f, "{var}_{}^{e}", i + 1)?;
            }
        }
        if lead {
            write!(f, "1")?;
        }
    }
    Ok(())
}

/// Mod-2 Newton polynomial: N_n(c_1..c_k) expresses the power sum [b_1^n]
/// in the elementary symmetric classes, via the recursion
/// N_n = sum_{i=1..min(n-1,k)} c_i N_{n-i} + (n odd and n <= k) c_n.
pub fn newton_power_sum(n: u32, k: usize) -> CPoly {
    assert!(n >= 1);
    let mut table: Vec<CPoly> = vec![CPoly::zero(k)]; // N_0 unused
    for m in 1..=n {
        let mut acc = CPoly::zero(k);
        for i in 1..=(m - 1).min(k as u32) {
            acc = acc.add(&CPoly::gen(k, i as usize).mul(&table[(m - i) as usize]));
        }
        if m % 2 == 1 && m <= k as u32 {
            acc = acc.add(&CPoly::gen(k, m as usize));
        }
        table.push(acc);
    }
    table.pop().unwrap()
}

// ---- forgetful map ----

/// Image of an invariant element in ordinary mod-2 cohomology: substitute
/// t = 1, r = 0 and b_i = a_i^2, then rewrite the resulting symmetric
/// polynomial in the elementary symmetric classes w_1..w_k.
pub fn forgetful(x: &InvariantElement) -> WPoly {
    let k = x.k();
    // a-exponent vectors of the image polynomial over F2
    let mut poly: BTreeSet<Vec<u32>> = BTreeSet::new();
    for (mono, coeff) in x.expand().terms.iter() {
        if !coeff.forget() {
            continue;
        }
        let e: Vec<u32> = (0..k)
            .map(|i| (mono.a_mask >> i & 1) as u32 + 2 * mono.b[i])
            .collect();
        if !poly.remove(&e) {
            poly.insert(e);
        }
    }
    reduce_to_elementary(poly, k)
}

/// Expansion of e_1^{m_1} ... e_k^{m_k} as a set of a-exponent vectors.
fn expand_elementary_monomial(m: &[u32], k: usize) -> BTreeSet<Vec<u32>> {
    let mut cur: BTreeSet<Vec<u32>> = BTreeSet::new();
    cur.insert(vec![0; k]);
    for (i, &mult) in m.iter().enumerate() {
        let size = i + 1;
        for _ in 0..mult {
            let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
            for base in &cur {
                for subset in subsets_of_size(k, size) {
                    let mut e = base.clone();
                    for idx in subset {
                        e[idx] += 1;
                    }
                    if !next.remove(&e) {
                        next.insert(e);
                    }
                }
            }
            cur = next;
        }
    }
    cur
}

fn subsets_of_size(k: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, size, cur, out);
            cur.pop();
        }
    }
    rec(0, k, size, &mut cur, &mut out);
    out
}

/// Standard leading-term reduction of a symmetric F2 polynomial into the
/// elementary symmetric basis.
fn reduce_to_elementary(mut poly: BTreeSet<Vec<u32>>, k: usize) -> WPoly {
    let mut out = WPoly::zero(k);
    while let Some(lead) = poly.iter().max().cloned() {
        // the lex-leading exponent vector of a symmetric polynomial is
        // weakly decreasing
        debug_assert!(lead.windows(2).all(|w| w[0] >= w[1]), "not symmetric: {lead:?}");
        let m: Vec<u32> = (0..k)
            .map(|i| lead[i] - if i + 1 < k { lead[i + 1] } else { 0 })
            .collect();
        for t in expand_elementary_monomial(&m, k) {
            if !poly.remove(&t) {
                poly.insert(t);
            }
        }
        if !out.terms.remove(&m) {
            out.terms.insert(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn wpoly(k: usize, terms: &[&[u32]]) -> WPoly {
        WPoly::from_terms(k, terms.iter().map(|t| t.to_vec()))
    }

    #[test]
    fn newton_small() {
        // N_1 = c_1 and N_2 = c_1^2 (squaring the power sum in char 2)
        assert_eq!(newton_power_sum(1, 3), CPoly::gen(3, 1));
        let n2 = newton_power_sum(2, 3);
        assert_eq!(n2, CPoly::gen(3, 1).mul(&CPoly::gen(3, 1)));
        // N_5 over three variables
        let n5 = newton_power_sum(5, 3);
        assert_eq!(
            n5.to_string(),
            "c_1 c_2^2 + c_1^2 c_3 + c_1^3 c_2 + c_1^5 + c_2 c_3"
        );
    }

    #[test]
    fn newton_evaluates_to_power_sum() {
        for k in 1..=4usize {
            for n in 1..=6u32 {
                let lhs = newton_power_sum(n, k).eval().unwrap();
                let rhs = InvariantElement::b_power(k, n).unwrap();
                assert_eq!(lhs, rhs, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn forgetful_images() {
        // c_1 -> w_1^2, c_2 -> w_2^2, w_i -> w_i
        for k in 2..=3usize {
            assert_eq!(
                forgetful(&InvariantElement::c(k, 1).unwrap()),
                wpoly(k, &[&{
                    let mut v = vec![0; k];
                    v[0] = 2;
                    v
                }])
            );
            assert_eq!(
                forgetful(&InvariantElement::c(k, 2).unwrap()),
                wpoly(k, &[&{
                    let mut v = vec![0; k];
                    v[1] = 2;
                    v
                }])
            );
            for i in 1..=k {
                let mut v = vec![0; k];
                v[i - 1] = 1;
                assert_eq!(forgetful(&InvariantElement::w(k, i).unwrap()), wpoly(k, &[&v]));
            }
        }
        // w_1^(1) -> w_1 w_2 + w_1^3 at k = 2
        assert_eq!(
            forgetful(&InvariantElement::w_e(2, 1, 1).unwrap()),
            wpoly(2, &[&[1, 1], &[3, 0]])
        );
    }

    #[test]
    fn forgetful_is_a_ring_map() {
        let k = 3;
        let samples = [
            InvariantElement::w(k, 1).unwrap(),
            InvariantElement::w(k, 2).unwrap(),
            InvariantElement::c(k, 2).unwrap(),
            InvariantElement::w_e(k, 1, 1).unwrap(),
            InvariantElement::wc(k, 1, 2).unwrap(),
        ];
        for x in &samples {
            for y in &samples {
                let lhs = forgetful(&x.mul(y));
                // multiply the images as symmetric polynomials by expanding
                // back through the invariant ring with t = 1, r = 0
                let rhs = mul_wpoly(&forgetful(x), &forgetful(y));
                assert_eq!(lhs, rhs);
            }
        }
        // rho-multiples die
        let x = InvariantElement::w(k, 2)
            .unwrap()
            .scale(&crate::m2::M2Element::rho());
        assert!(forgetful(&x).is_zero());
    }

    fn mul_wpoly(x: &WPoly, y: &WPoly) -> WPoly {
        let k = x.k;
        let mut acc: BTreeSet<Vec<u32>> = BTreeSet::new();
        for a in x.terms() {
            for b in y.terms() {
                let mut w = vec![0u32; k];
                for i in 0..k {
                    w[i] = a[i] + b[i];
                }
                // multiply the two elementary monomials by re-expansion
                let mut prod_m = vec![0u32; k];
                for i in 0..k {
                    prod_m[i] = w[i];
                }
                if !acc.remove(&prod_m) {
                    acc.insert(prod_m);
                }
            }
        }
        WPoly::from_terms(k, acc)
    }

    #[test]
    fn forgetful_of_basis_class() {
        // [b_1^2] at k = 2 forgets to p_4 = w_1^4 + ... in elementary terms
        let x = InvariantElement::class(2, Partition::new(vec![0, 4])).unwrap();
        let got = forgetful(&x);
        // p_4(a_1,a_2) = a_1^4 + a_2^4 = (e_1^2 + ...)^2: e_1^4 + e_2^2... over F2:
        // p_2 = e_1^2, p_4 = p_2^2 = e_1^4 (k = 2 has e_1^4 + 0)
        // direct: a1^4 + a2^4 = (a1^2+a2^2)^2 = ((a1+a2)^2)^2 = e1^4
        assert_eq!(got, wpoly(2, &[&[4, 0]]));
    }
}
