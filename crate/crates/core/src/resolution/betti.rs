use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Graded Betti numbers `β_{p,p+s}` of an ideal, keyed by `(p, s)`.
/// Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub p: usize,
    pub s: usize,
    pub value: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut t = Self::new();
        for ((p, s), v) in entries {
            t.add(p, s, v);
        }
        t
    }

    /// `β_{p,p+s}`.
    pub fn get(&self, p: usize, s: usize) -> u64 {
        self.entries.get(&(p, s)).copied().unwrap_or(0)
    }

    /// `β_{i,j}` in total-degree indexing.
    pub fn graded(&self, i: usize, j: usize) -> u64 {
        if j < i {
            return 0;
        }
        self.get(i, j - i)
    }

    pub fn set(&mut self, p: usize, s: usize, v: u64) {
        if v == 0 {
            self.entries.remove(&(p, s));
        } else {
            self.entries.insert((p, s), v);
        }
    }

    pub fn add(&mut self, p: usize, s: usize, v: u64) {
        if v != 0 {
            *self.entries.entry((p, s)).or_insert(0) += v;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries
            .iter()
            .map(|(&(p, s), &value)| BettiEntry { p, s, value })
    }

    /// Projective dimension: last nonzero column.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(p, _)| p).max()
    }

    /// Regularity: last nonzero row.
    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|&(_, s)| s).max()
    }

    pub fn min_row(&self) -> Option<usize> {
        self.entries.keys().map(|&(_, s)| s).min()
    }

    /// Total Betti numbers `β_p`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.pd().map_or(0, |p| p + 1)];
        for (&(p, _), v) in &self.entries {
            out[p] += v;
        }
        out
    }

    /// Row `s` from column 0 to the projective dimension.
    pub fn row(&self, s: usize) -> Vec<u64> {
        (0..=self.pd().unwrap_or(0))
            .map(|p| self.get(p, s))
            .collect()
    }

    /// Coefficients `c_j = Σ_i (-1)^i β_{i,j}`, indexed by total degree.
    pub fn alternating_sums(&self) -> Vec<i128> {
        let top = self.entries.keys().map(|&(p, s)| p + s).max().unwrap_or(0);
        let mut out = vec![0i128; top + 1];
        for (&(p, s), &v) in &self.entries {
            let v = v as i128;
            out[p + s] += if p % 2 == 0 { v } else { -v };
        }
        out
    }
}

/// Macaulay2-style diagram: rows `s`, columns `p`, `.` for zero.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(pd), Some(lo), Some(hi)) = (self.pd(), self.min_row(), self.reg()) else {
            return f.write_str("(zero)\n");
        };
        let cells: Vec<Vec<String>> = (lo..=hi)
            .map(|s| {
                (0..=pd)
                    .map(|p| match self.get(p, s) {
                        0 => ".".to_string(),
                        v => v.to_string(),
                    })
                    .collect()
            })
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain((0..=pd).map(|p| p.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = hi.to_string().len();
        write!(f, "{:>label$} |", "")?;
        for p in 0..=pd {
            write!(f, " {p:>width$}")?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "{}-+{}",
            "-".repeat(label),
            "-".repeat((width + 1) * (pd + 1))
        )?;
        for (s, row) in (lo..=hi).zip(&cells) {
            write!(f, "{s:>label$} |")?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
