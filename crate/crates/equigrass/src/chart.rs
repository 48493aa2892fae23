//! Bigraded rank charts: finitely supported maps (p, q) -> count, with the
//! column/diagonal aggregations and the ASCII/CSV/JSON renderings used by the
//! command line.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RankChart {
    entries: BTreeMap<(u32, u32), u64>,
}

impl RankChart {
    pub fn new() -> Self {
        RankChart::default()
    }

    pub fn add(&mut self, p: u32, q: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((p, q)).or_insert(0) += count;
        }
    }

    pub fn get(&self, p: u32, q: u32) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Nonzero entries in lexicographic (p, q) order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(p, q), &c)| (p, q, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_p(&self) -> u32 {
        self.entries.keys().map(|&(p, _)| p).max().unwrap_or(0)
    }

    pub fn max_q(&self) -> u32 {
        self.entries.keys().map(|&(_, q)| q).max().unwrap_or(0)
    }

    /// Restriction to columns p <= p_max.
    pub fn truncate(&self, p_max: u32) -> RankChart {
        RankChart {
            entries: self
                .entries
                .iter()
                .filter(|&(&(p, _), _)| p <= p_max)
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    pub fn column_sum(&self, p: u32) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(ep, _), _)| ep == p)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Sum along the diagonal q - p = c.
    pub fn diagonal_sum(&self, c: i64) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(p, q), _)| q as i64 - p as i64 == c)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Grid with the origin at the bottom left, blank boxes for zero, and a
    /// bullet marking the origin.
    pub fn ascii(&self) -> String {
        let p_max = self.max_p();
        let q_max = self.max_q();
        let cell = self
            .entries
            .values()
            .map(|c| c.to_string().len())
            .chain(std::iter::once(p_max.to_string().len()))
            .max()
            .unwrap_or(1)
            + 1;
        let label = q_max.to_string().len().max(1);
        let mut out = String::new();
        for q in (0..=q_max).rev() {
            out.push_str(&format!("{q:>label$} |"));
            for p in 0..=p_max {
                let c = self.get(p, q);
                if c == 0 {
                    out.push_str(&" ".repeat(cell));
                } else {
                    out.push_str(&format!("{c:>cell$}"));
                }
            }
            out.push('\n');
        }
        out.push_str(&format!("{:>label$} •", ""));
        out.push_str(&"-".repeat(cell * (p_max as usize + 1)));
        out.push('\n');
        out.push_str(&format!("{:>label$}  ", ""));
        for p in 0..=p_max {
            out.push_str(&format!("{p:>cell$}"));
        }
        out.push('\n');
        out
    }

    /// `p,q,count` lines for the nonzero entries, lexicographic in (p, q).
    pub fn csv(&self) -> String {
        let mut out = String::from("p,q,count\n");
        for (p, q, c) in self.entries() {
            out.push_str(&format!("{p},{q},{c}\n"));
        }
        out
    }
}

/// JSON document wrapping a chart: `{k, p_max, entries: [[p, q, count], ...]}`
/// with entries in lexicographic (p, q) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartDoc {
    pub k: u32,
    pub p_max: u32,
    pub entries: Vec<(u32, u32, u64)>,
}

impl ChartDoc {
    pub fn new(k: u32, p_max: u32, chart: &RankChart) -> Self {
        ChartDoc {
            k,
            p_max,
            entries: chart.entries().collect(),
        }
    }

    pub fn chart(&self) -> RankChart {
        let mut out = RankChart::new();
        for &(p, q, c) in &self.entries {
            out.add(p, q, c);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chart serialization")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
