//! Equivariant Schubert cells for Grassmannians of the alternating universe.
//!
//! A cell is encoded three ways: a Schubert symbol (weakly increasing
//! sigma_1 <= ... <= sigma_k), an a-sequence (a_i = sigma_i + i, strictly
//! increasing), or a *-pattern (asterisks at the a_i positions of the sign
//! string +-+-..., position 1 first).  The cell has topological dimension
//! sum(sigma_i); its weight counts, for each asterisk, the signs of the
//! opposite parity to its own box lying to its left.

use crate::chart::RankChart;
use crate::m2::Bidegree;
use crate::partitions::{enumerate_partitions, Partition};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertSymbol {
    sigma: Vec<u32>,
}

impl SchubertSymbol {
    /// Requires a weakly increasing sequence.
    pub fn new(sigma: Vec<u32>) -> Result<Self, String> {
        if sigma.windows(2).any(|w| w[0] > w[1]) {
            return Err(format!("Schubert symbol must be weakly increasing: {sigma:?}"));
        }
        Ok(SchubertSymbol { sigma })
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn k(&self) -> usize {
        self.sigma.len()
    }

    pub fn dimension(&self) -> u32 {
        self.sigma.iter().sum()
    }

    pub fn a_sequence(&self) -> Vec<u32> {
        self.sigma
            .iter()
            .enumerate()
            .map(|(i, &s)| s + i as u32 + 1)
            .collect()
    }

    pub fn pattern(&self) -> StarPattern {
        StarPattern {
            stars: self.a_sequence(),
        }
    }
}

impl fmt::Display for SchubertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.sigma.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Star positions (1-indexed, strictly increasing) in the sign string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarPattern {
    stars: Vec<u32>,
}

impl StarPattern {
    pub fn new(stars: Vec<u32>) -> Result<Self, String> {
        if stars.iter().any(|&s| s == 0) {
            return Err("star positions are 1-indexed".into());
        }
        if stars.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("star positions must be strictly increasing: {stars:?}"));
        }
        Ok(StarPattern { stars })
    }

    pub fn stars(&self) -> &[u32] {
        &self.stars
    }

    pub fn k(&self) -> usize {
        self.stars.len()
    }

    pub fn symbol(&self) -> SchubertSymbol {
        SchubertSymbol {
            sigma: self
                .stars
                .iter()
                .enumerate()
                .map(|(i, &a)| a - i as u32 - 1)
                .collect(),
        }
    }

    /// The sign string with asterisks: '+' in odd boxes, '-' in even boxes,
    /// '*' where a star sits.
    pub fn draw(&self) -> String {
        let n = self.stars.last().copied().unwrap_or(0);
        let mut out = String::new();
        for m in 1..=n {
            if self.stars.binary_search(&m).is_ok() {
                out.push('*');
            } else {
                out.push(if m % 2 == 1 { '+' } else { '-' });
            }
        }
        out
    }

    /// Patterns reached by moving one star two boxes right into an empty box.
    pub fn successors(&self) -> BTreeSet<StarPattern> {
        let mut out = BTreeSet::new();
        for i in 0..self.stars.len() {
            let target = self.stars[i] + 2;
            if self.stars.binary_search(&target).is_err() {
                let mut stars = self.stars.clone();
                stars[i] = target;
                stars.sort_unstable();
                out.insert(StarPattern { stars });
            }
        }
        out
    }
}

impl fmt::Display for StarPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.stars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for StarPattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut stars = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad star position {t:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        stars.sort_unstable();
        StarPattern::new(stars)
    }
}

/// Bidegree (dimension, cell-weight) of the cell attached to a symbol.
pub fn cell_bidegree(symbol: &SchubertSymbol) -> Bidegree {
    let stars = symbol.a_sequence();
    let p = symbol.dimension() as i64;
    let mut q = 0i64;
    for (i, &a) in stars.iter().enumerate() {
        // boxes 1..a-1: odd boxes carry '+', even boxes carry '-'; stars
        // erase their box's sign and erased signs are not counted
        let odd_before = (a / 2) as i64;
        let even_before = ((a - 1) / 2) as i64;
        let stars_before = &stars[..i];
        let odd_stars = stars_before.iter().filter(|&&s| s % 2 == 1).count() as i64;
        let even_stars = stars_before.len() as i64 - odd_stars;
        q += if a % 2 == 0 {
            odd_before - odd_stars // '+' signs left of an even-box star
        } else {
            even_before - even_stars // '-' signs left of an odd-box star
        };
    }
    Bidegree::new(p, q)
}

/// Window of cells to enumerate: everything of dimension at most `MaxDim`,
/// or everything inside a finite ambient space of dimension N (a_k <= N).
#[derive(Clone, Copy, Debug)]
pub enum CellWindow {
    MaxDim(u32),
    Ambient(u32),
}

pub fn enumerate_cells(
    k: usize,
    window: CellWindow,
) -> Result<Vec<(SchubertSymbol, Bidegree)>, String> {
    if k < 1 {
        return Err("need k >= 1".into());
    }
    let sigma_cap = match window {
        CellWindow::MaxDim(d) => d,
        CellWindow::Ambient(n) => {
            if (n as usize) < k {
                return Ok(Vec::new());
            }
            n - k as u32
        }
    };
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(
        i: usize,
        min: u32,
        used: u32,
        cap: u32,
        total_cap: Option<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<(SchubertSymbol, Bidegree)>,
    ) {
        if i == cur.len() {
            let s = SchubertSymbol { sigma: cur.clone() };
            let d = cell_bidegree(&s);
            out.push((s, d));
            return;
        }
        for v in min..=cap {
            if let Some(t) = total_cap {
                if used + v > t {
                    break;
                }
            }
            cur[i] = v;
            rec(i + 1, v, used + v, cap, total_cap, cur, out);
        }
    }
    let total_cap = match window {
        CellWindow::MaxDim(d) => Some(d),
        CellWindow::Ambient(_) => None,
    };
    rec(0, 0, 0, sigma_cap, total_cap, &mut cur, &mut out);
    Ok(out)
}

/// Number of Schubert cells in each bidegree, for dimensions up to p_max.
pub fn e1_rank_chart(k: usize, p_max: u32) -> RankChart {
    let mut chart = RankChart::new();
    for (_, d) in enumerate_cells(k, CellWindow::MaxDim(p_max)).expect("k >= 1") {
        chart.add(d.p as u32, d.q as u32, 1);
    }
    chart
}

/// The k+1 patterns from which no star can move two boxes left.  Listed by
/// increasing dimension; the i-th (1-indexed) has bidegree
/// (binom(i,2), binom(i,2)).
pub fn minimal_patterns(k: usize) -> Vec<StarPattern> {
    (0..=k)
        .map(|t| {
            let mut stars: Vec<u32> = (1..=(k - t) as u32).collect();
            let base = (k - t) as u32;
            stars.extend((1..=t as u32).map(|s| base + 2 * s));
            StarPattern { stars }
        })
        .collect()
}

/// gamma_i for 1 <= i <= k+1: the number of odd entries in the partition
/// matched to the i-th minimal pattern.
pub fn gamma(i: usize, k: usize) -> Result<u32, String> {
    if i < 1 || i > k + 1 {
        return Err(format!("gamma index {i} out of range 1..={}", k + 1));
    }
    if (k + i) % 2 == 0 {
        Ok(((k + i) / 2) as u32)
    } else {
        Ok(((k + 1 - i) / 2) as u32)
    }
}

/// Degree-preserving bijection from partitions with k parts to patterns with
/// k stars: even parts place stars in even boxes, odd parts in odd boxes.
/// It intertwines the two successor operations.
pub fn partition_to_pattern(p: &Partition) -> StarPattern {
    let mut stars = Vec::with_capacity(p.k());
    let mut even_box = 0u32;
    let mut prev = 0u32;
    for &u in p.parts().iter().filter(|&&u| u % 2 == 0) {
        even_box += (u - prev) / 2 + 1;
        prev = u;
        stars.push(2 * even_box);
    }
    let mut odd_box = 0u32;
    let mut prev = 1u32;
    for &v in p.parts().iter().filter(|&&v| v % 2 == 1) {
        odd_box += (v - prev) / 2 + 1;
        prev = v;
        stars.push(2 * odd_box - 1);
    }
    stars.sort_unstable();
    StarPattern { stars }
}

pub fn pattern_to_partition(t: &StarPattern) -> Partition {
    let mut parts = Vec::with_capacity(t.k());
    // even boxes: part = 2 * (even boxes skipped so far)
    let mut prev_box = 0u32;
    let mut prev_part = 0u32;
    for &pos in t.stars.iter().filter(|&&s| s % 2 == 0) {
        let e = pos / 2;
        let part = if prev_box == 0 {
            2 * (e - 1)
        } else {
            prev_part + 2 * (e - prev_box - 1)
        };
        parts.push(part);
        prev_box = e;
        prev_part = part;
    }
    // odd boxes: part = 1 + 2 * (odd boxes skipped so far)
    let mut prev_box = 0u32;
    let mut prev_part = 0u32;
    for &pos in t.stars.iter().filter(|&&s| s % 2 == 1) {
        let f = (pos + 1) / 2;
        let part = if prev_box == 0 {
            2 * f - 1
        } else {
            prev_part + 2 * (f - prev_box - 1)
        };
        parts.push(part);
        prev_box = f;
        prev_part = part;
    }
    Partition::new(parts)
}

/// Column sums of the cell chart agree with classical cell counts: the
/// number of cells of dimension p is the number of partitions of p into at
/// most k parts.
pub fn classical_cell_count(p: u32, k: usize) -> u64 {
    enumerate_partitions(p, k).len() as u64
}
