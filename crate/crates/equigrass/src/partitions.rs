//! Partitions of an integer into a fixed number of nonnegative parts.
//!
//! Partitions are stored with exactly k parts, weakly increasing, with zero
//! parts explicit.  They index the canonical free basis of the invariant ring
//! and the trees generated by the successor operation (adding 2 to a part).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from arbitrary-order parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn zeros(k: usize) -> Self {
        Partition {
            parts: vec![0; k],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn odd_count(&self) -> u32 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u32
    }

    /// Sum of ceil(part/2) over the parts; equals (sum + odd_count)/2.
    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|&p| p.div_ceil(2)).sum()
    }

    /// All partitions obtained by adding 2 to exactly one part.
    pub fn successors(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for i in 0..self.parts.len() {
            let mut parts = self.parts.clone();
            parts[i] += 2;
            out.insert(Partition::new(parts));
        }
        out
    }

    /// A partition is minimal when it is no other partition's successor,
    /// i.e. all parts are 0 or 1.
    pub fn is_minimal(&self) -> bool {
        self.parts.iter().all(|&p| p <= 1)
    }

    /// The unique minimal partition this one descends from: each part is
    /// replaced by its parity.
    pub fn minimal_root(&self) -> Partition {
        Partition::new(self.parts.iter().map(|&p| p % 2).collect())
    }

    /// Subtract 1 from every odd part and add 1 to every even part.  This is
    /// an involution exchanging partitions counted by prt(n, k, j) with those
    /// counted by prt(n + k - 2j, k, k - j).
    pub fn dual(&self) -> Partition {
        Partition::new(
            self.parts
                .iter()
                .map(|&p| if p % 2 == 1 { p - 1 } else { p + 1 })
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Ok(Partition::new(Vec::new()));
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad partition part {t:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n` into exactly `k` nonnegative parts, ascending, in
/// lexicographic order of the part tuples.
pub fn enumerate_partitions(n: u32, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(left: usize, min: u32, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            if n == 0 {
                out.push(Partition {
                    parts: cur.clone(),
                });
            }
            return;
        }
        // parts are weakly increasing, so each remaining part is at least v
        let mut v = min;
        while v * left as u32 <= n {
            cur.push(v);
            rec(left - 1, v, n - v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    rec(k, 0, n, &mut cur, &mut out);
    out
}

/// The k+1 minimal partitions with k parts: j ones and k-j zeros.
pub fn minimal_partitions(k: usize) -> Vec<Partition> {
    (0..=k)
        .map(|j| {
            let mut parts = vec![0; k - j];
            parts.extend(std::iter::repeat(1).take(j));
            Partition::new(parts)
        })
        .collect()
}

/// prt(n, k, j): partitions of n into k nonnegative parts of which exactly j
/// are odd.  Counted by exhaustive enumeration for small n and by the
/// recurrence prt(n,k,j) = prt(n,k-1,j) + prt(n-k,k,k-j) for larger n; the
/// two routes are cross-checked in the tests.
pub fn count_prt(n: i64, k: u32, j: u32) -> u64 {
    if n < 0 {
        return 0;
    }
    if n <= 30 {
        count_prt_enum(n as u32, k, j)
    } else {
        count_prt_dp(n, k, j)
    }
}

pub fn count_prt_enum(n: u32, k: u32, j: u32) -> u64 {
    enumerate_partitions(n, k as usize)
        .iter()
        .filter(|p| p.odd_count() == j)
        .count() as u64
}

pub fn count_prt_dp(n: i64, k: u32, j: u32) -> u64 {
    fn rec(n: i64, k: u32, j: u32, memo: &mut HashMap<(i64, u32, u32), u64>) -> u64 {
        if n < 0 || j > k {
            return 0;
        }
        if k == 0 {
            return u64::from(n == 0 && j == 0);
        }
        if n == 0 {
            return u64::from(j == 0);
        }
        if let Some(&v) = memo.get(&(n, k, j)) {
            return v;
        }
        // split on whether a zero part exists; removing it keeps j, while
        // subtracting 1 from every positive part flips each parity
        let v = rec(n, k - 1, j, memo) + rec(n - k as i64, k, k - j, memo);
        memo.insert((n, k, j), v);
        v
    }
    rec(n, k, j, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(Partition::new(vec![6]).weight(), 3);
        assert_eq!(Partition::new(vec![5, 1]).weight(), 4);
        assert_eq!(Partition::zeros(3).weight(), 0);
        // weights of the seven partitions of 6 into at most 3 parts
        let expected = [
            (vec![0, 0, 6], 3),
            (vec![0, 1, 5], 4),
            (vec![0, 2, 4], 3),
            (vec![1, 1, 4], 4),
            (vec![0, 3, 3], 4),
            (vec![1, 2, 3], 4),
            (vec![2, 2, 2], 3),
        ];
        for (parts, w) in expected {
            let p = Partition::new(parts);
            assert_eq!(p.weight(), w, "{p}");
            assert_eq!(p.weight(), (p.sum() + p.odd_count()) / 2);
        }
    }

    #[test]
    fn prt_examples() {
        assert_eq!(count_prt(8, 5, 4), 4);
        for k in 0..6 {
            assert_eq!(count_prt(0, k, 0), 1);
        }
        assert_eq!(count_prt(5, 4, 1), 4);
        // parity: n - j odd forces zero
        for n in 0..12i64 {
            for k in 0..5 {
                for j in 0..=k {
                    if (n - j as i64) % 2 != 0 {
                        assert_eq!(count_prt(n, k, j), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn prt_routes_agree() {
        for n in 0..=30u32 {
            for k in 0..=6 {
                for j in 0..=k {
                    assert_eq!(
                        count_prt_enum(n, k, j),
                        count_prt_dp(n as i64, k, j),
                        "prt({n},{k},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn successor_examples() {
        let s = Partition::new(vec![0, 1, 1]).successors();
        let expect: BTreeSet<_> = [Partition::new(vec![0, 1, 3]), Partition::new(vec![1, 1, 2])]
            .into_iter()
            .collect();
        assert_eq!(s, expect);
        assert_eq!(
            Partition::new(vec![0]).successors(),
            [Partition::new(vec![2])].into_iter().collect()
        );
        // both single-part bumps coincide after sorting
        assert_eq!(
            Partition::new(vec![1, 1]).successors(),
            [Partition::new(vec![1, 3])].into_iter().collect()
        );
    }

    #[test]
    fn successors_shift_weight_and_sum() {
        for n in 0..=10 {
            for p in enumerate_partitions(n, 4) {
                for s in p.successors() {
                    assert_eq!(s.sum(), p.sum() + 2);
                    assert_eq!(s.weight(), p.weight() + 1);
                    assert_eq!(s.minimal_root(), p.minimal_root());
                }
            }
        }
    }

    #[test]
    fn minimal_roots() {
        assert_eq!(
            Partition::new(vec![3, 4, 7]).minimal_root(),
            Partition::new(vec![0, 1, 1])
        );
        let m = Partition::new(vec![0, 1, 1]);
        assert_eq!(m.minimal_root(), m);
        assert_eq!(
            Partition::new(vec![2, 4, 6, 8]).minimal_root(),
            Partition::zeros(4)
        );
        // idempotent
        for n in 0..=9 {
            for p in enumerate_partitions(n, 3) {
                assert_eq!(p.minimal_root().minimal_root(), p.minimal_root());
            }
        }
    }

    #[test]
    fn exactly_k_plus_one_minimal() {
        for k in 1..=5usize {
            let minimal = minimal_partitions(k);
            assert_eq!(minimal.len(), k + 1);
            // exhaustive scan in low degrees
            let mut found = BTreeSet::new();
            for n in 0..=12 {
                for p in enumerate_partitions(n, k) {
                    if p.is_minimal() {
                        found.insert(p);
                    }
                }
            }
            assert_eq!(found, minimal.iter().cloned().collect());
        }
    }

    #[test]
    fn duality_bijection() {
        assert_eq!(
            Partition::new(vec![0, 1, 1, 3, 3]).dual(),
            Partition::new(vec![0, 0, 1, 2, 2])
        );
        assert_eq!(count_prt(8, 5, 4), count_prt(5, 5, 1));
        assert_eq!(Partition::zeros(4).dual(), Partition::new(vec![1, 1, 1, 1]));
        for n in 0..=12 {
            for p in enumerate_partitions(n, 5) {
                let d = p.dual();
                let (k, j) = (p.k() as u32, p.odd_count());
                assert_eq!(d.sum() as i64, n as i64 + k as i64 - 2 * j as i64);
                assert_eq!(d.odd_count(), k - j);
                assert_eq!(d.dual(), p);
            }
        }
    }

    #[test]
    fn prt_duality_identity() {
        for n in 0..=20i64 {
            for k in 1..=6u32 {
                for j in 0..=k {
                    assert_eq!(
                        count_prt(n, k, j),
                        count_prt(n + k as i64 - 2 * j as i64, k, k - j)
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let six_three = enumerate_partitions(6, 3);
        assert_eq!(six_three.len(), 7);
        let expect: BTreeSet<Partition> = [
            vec![0, 0, 6],
            vec![0, 1, 5],
            vec![0, 2, 4],
            vec![1, 1, 4],
            vec![0, 3, 3],
            vec![1, 2, 3],
            vec![2, 2, 2],
        ]
        .into_iter()
        .map(Partition::new)
        .collect();
        assert_eq!(six_three.into_iter().collect::<BTreeSet<_>>(), expect);

        let seven_five = enumerate_partitions(7, 5);
        assert_eq!(seven_five.len(), 13);
        let by_odd = |j: u32| seven_five.iter().filter(|p| p.odd_count() == j).count();
        assert_eq!((by_odd(1), by_odd(3), by_odd(5)), (7, 5, 1));

        assert_eq!(enumerate_partitions(0, 4), vec![Partition::zeros(4)]);
    }

    #[test]
    fn enumeration_matches_prt() {
        for n in 0..=14 {
            for k in 1..=5usize {
                let all = enumerate_partitions(n, k);
                let total: u64 = (0..=k as u32).map(|j| count_prt(n as i64, k as u32, j)).sum();
                assert_eq!(all.len() as u64, total);
                for j in 0..=k as u32 {
                    assert_eq!(
                        all.iter().filter(|p| p.odd_count() == j).count() as u64,
                        count_prt(n as i64, k as u32, j)
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_render() {
        let p: Partition = "[0,1,3]".parse().unwrap();
        assert_eq!(p, Partition::new(vec![0, 1, 3]));
        assert_eq!(p.to_string(), "[0,1,3]");
        let q: Partition = "2, 1, 0".parse().unwrap();
        assert_eq!(q.to_string(), "[0,1,2]");
        assert!("[a]".parse::<Partition>().is_err());
    }
}
