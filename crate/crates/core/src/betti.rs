//! Betti tables, the Eliahou-Kervaire formula and extremal corners.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::ideal::MCounts;
use crate::ideal::MonomialIdeal;
use crate::macaulay::binomial_u64;

/// Graded Betti numbers `beta_{i,j}` of an ideal (not of the quotient),
/// stored sparsely. Only positive entries are kept; `i <= n` and `j > i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    n: usize,
    entries: Vec<[u64; 3]>,
}

/// A position `beta_{i, i+d}` together with its value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub i: usize,
    pub d: u32,
    pub value: u64,
}

impl Corner {
    pub fn new(i: usize, d: u32, value: u64) -> Self {
        Corner { i, d, value }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RenderOptions {
    /// Print the zero rows from `d = 1` up to the first nonzero row.
    pub leading_zero_rows: bool,
    /// Render `beta_{i,j}(S/I) = beta_{i-1,j}(I)` instead.
    pub quotient: bool,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (usize, u32, u64)>,
    ) -> Result<Self> {
        let mut t = BettiTable::new(n);
        for (i, j, b) in entries {
            t.add(i, j, b)?;
        }
        Ok(t)
    }

    /// Adds `b` to `beta_{i,j}`.
    pub fn add(&mut self, i: usize, j: u32, b: u64) -> Result<()> {
        if i > self.n {
            return Err(Error::Input(format!(
                "homological index {i} exceeds n = {}",
                self.n
            )));
        }
        if j as usize <= i {
            return Err(Error::Input(format!(
                "beta_{{{i},{j}}} would sit at or below the diagonal j = i"
            )));
        }
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `(i, j, beta_{i,j})`, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `beta_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// Whether the table respects the shape of an ideal's table
    /// (`i <= n - 1`).
    pub fn is_ideal_shaped(&self) -> bool {
        self.entries.keys().all(|&(i, _)| i < self.n)
    }

    pub fn to_json(&self) -> String {
        let wire = BettiJson {
            n: self.n,
            entries: self
                .entries()
                .map(|(i, j, b)| [i as u64, j as u64, b])
                .collect(),
        };
        serde_json::to_string(&wire).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: BettiJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        BettiTable::from_entries(
            wire.n,
            wire.entries
                .iter()
                .map(|e| (e[0] as usize, e[1] as u32, e[2])),
        )
    }

    /// Text grid with rows indexed by `d = j - i` and columns by `i`.
    pub fn render(&self, opts: RenderOptions) -> String {
        // (column, row degree) -> value for the object being displayed
        let mut cells: BTreeMap<(usize, u32), u64> = BTreeMap::new();
        let ncols;
        let first_row;
        if opts.quotient {
            ncols = self.n + 1;
            first_row = 0;
            cells.insert((0, 0), 1);
            for (i, j, b) in self.entries() {
                cells.insert((i + 1, j - i as u32 - 1), b);
            }
        } else {
            ncols = self.n;
            first_row = 1;
            for (i, j, b) in self.entries() {
                cells.insert((i, j - i as u32), b);
            }
        }
        if cells.is_empty() {
            return "(zero table)\n".to_string();
        }
        let dmin = cells.keys().map(|k| k.1).min().unwrap();
        let dmax = cells.keys().map(|k| k.1).max().unwrap();
        let start = if opts.leading_zero_rows {
            first_row.min(dmin)
        } else {
            dmin
        };
        let ncols = ncols.max(cells.keys().map(|k| k.0 + 1).max().unwrap());
        let width = cells.values().map(|v| v.to_string().len()).max().unwrap();
        let mut out = String::new();
        for d in start..=dmax {
            let row: Vec<String> = (0..ncols)
                .map(|c| {
                    let v = cells.get(&(c, d)).copied().unwrap_or(0);
                    format!("{v:>width$}")
                })
                .collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }
}

/// Eliahou-Kervaire: `beta_{i,i+d}(I) = sum_{k=i}^{n} binom(k-1, i) m_{k,d}(I)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_stable() {
        return Err(Error::Domain(
            "the Eliahou-Kervaire formula needs a stable ideal; use the homology oracle".into(),
        ));
    }
    betti_from_m(&ideal.m_counts_by_degree_unchecked(), ideal.n())
}

/// `m_{i,d} = sum_{k=0}^{n} (-1)^{k-i+1} binom(k, i-1) beta_{k,k+d}` for
/// `i = 1, ..., n+1`. Values may be negative for arbitrary tables.
pub fn m_from_betti(table: &BettiTable) -> MCounts {
    let n = table.n();
    let mut by_row: BTreeMap<u32, Vec<i64>> = BTreeMap::new();
    for (k, j, b) in table.entries() {
        let d = j - k as u32;
        by_row.entry(d).or_insert_with(|| vec![0; n + 1])[k] = b as i64;
    }
    let mut counts = MCounts::new();
    for (d, betas) in by_row {
        for i in 1..=n + 1 {
            let mut acc: i64 = 0;
            for (k, &b) in betas.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = binomial_u64(k as i64, i as i64 - 1) as i64;
                // (-1)^{k-i+1} has the parity of k + i + 1
                let s = if (k + i + 1) % 2 == 0 { 1 } else { -1 };
                acc += s * c * b;
            }
            if acc != 0 {
                counts.insert((i, d), acc);
            }
        }
    }
    counts
}

/// `beta_{i,i+d} = sum_{k=i}^{n+1} binom(k-1, i) m_{k,d}` for `i = 0, ..., n`,
/// keeping signs. Keys are `(i, j)`; zero values are dropped.
pub fn betti_from_m_signed(counts: &MCounts, n: usize) -> Result<BTreeMap<(usize, u32), i64>> {
    let mut by_row: BTreeMap<u32, Vec<i64>> = BTreeMap::new();
    for (&(k, d), &c) in counts {
        if k == 0 || k > n + 1 {
            return Err(Error::Input(format!("max-index {k} outside 1..={}", n + 1)));
        }
        by_row.entry(d).or_insert_with(|| vec![0; n + 2])[k] += c;
    }
    let mut out = BTreeMap::new();
    for (d, ms) in by_row {
        for i in 0..=n {
            let acc: i64 = ms
                .iter()
                .enumerate()
                .skip(i.max(1))
                .map(|(k, &m)| binomial_u64(k as i64 - 1, i as i64) as i64 * m)
                .sum();
            if acc != 0 {
                out.insert((i, i as u32 + d), acc);
            }
        }
    }
    Ok(out)
}

/// [`betti_from_m_signed`] for counts that describe an actual table.
pub fn betti_from_m(counts: &MCounts, n: usize) -> Result<BettiTable> {
    let mut table = BettiTable::new(n);
    for ((i, j), b) in betti_from_m_signed(counts, n)? {
        if b < 0 {
            return Err(Error::Infeasible(format!(
                "counts give beta_{{{i},{j}}} = {b} < 0"
            )));
        }
        table.add(i, j, b as u64)?;
    }
    Ok(table)
}

/// Nonzero `beta_{i,i+d}` with no other nonzero entry weakly south-east of
/// it, sorted by increasing `i` (so `d` strictly decreases).
pub fn extremal_corners(table: &BettiTable) -> Vec<Corner> {
    let cells: Vec<Corner> = table
        .entries()
        .map(|(i, j, b)| Corner::new(i, j - i as u32, b))
        .collect();
    pareto_top(&cells)
}

fn pareto_top(cells: &[Corner]) -> Vec<Corner> {
    let mut out: Vec<Corner> = cells
        .iter()
        .filter(|c| {
            !cells
                .iter()
                .any(|o| (o.i, o.d) != (c.i, c.d) && o.i >= c.i && o.d >= c.d)
        })
        .copied()
        .collect();
    out.sort();
    out
}

/// Extremal Betti numbers of a stable ideal read off the m-counts:
/// `beta_{i,i+j}` is extremal iff `m_{i+1,j} != 0` and no other nonzero
/// `m_{p+1,q}` has `p >= i`, `q >= j`; its value is `m_{i+1,j}`.
pub fn extremal_from_stable(ideal: &MonomialIdeal) -> Result<Vec<Corner>> {
    let counts = ideal.m_counts_by_degree()?;
    let cells: Vec<Corner> = counts
        .iter()
        .map(|(&(k, d), &c)| Corner::new(k - 1, d, c as u64))
        .collect();
    Ok(pareto_top(&cells))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twin_table() -> BettiTable {
        BettiTable::from_entries(
            3,
            [
                (0, 4, 6),
                (1, 5, 6),
                (2, 6, 1),
                (0, 5, 3),
                (1, 6, 6),
                (2, 7, 3),
            ],
        )
        .unwrap()
    }

    fn twin_i() -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            3,
            &[
                &[4, 0, 0],
                &[3, 1, 0],
                &[2, 2, 0],
                &[1, 3, 0],
                &[0, 4, 0],
                &[3, 0, 1],
                &[2, 1, 2],
                &[2, 0, 3],
                &[1, 2, 2],
            ],
        )
        .unwrap()
    }

    #[test]
    fn ek_examples() {
        assert_eq!(ek_betti(&twin_i()).unwrap(), twin_table());
        let p = MonomialIdeal::from_exponents(3, &[&[0, 0, 0]]);
        assert!(p.is_err());
        let p = MonomialIdeal::from_exponents(3, &[&[5, 0, 0]]).unwrap();
        assert_eq!(
            ek_betti(&p).unwrap(),
            BettiTable::from_entries(3, [(0, 5, 1)]).unwrap()
        );
        let sq = MonomialIdeal::maximal_power(2, 2).unwrap();
        assert_eq!(
            ek_betti(&sq).unwrap(),
            BettiTable::from_entries(2, [(0, 2, 3), (1, 3, 2)]).unwrap()
        );
        let unstable = MonomialIdeal::from_exponents(2, &[&[0, 1]]).unwrap();
        assert!(matches!(ek_betti(&unstable), Err(Error::Domain(_))));
    }

    #[test]
    fn m_betti_conversions() {
        let counts = m_from_betti(&twin_table());
        let expected: MCounts = [((1, 4), 1), ((2, 4), 4), ((3, 4), 1), ((3, 5), 3)]
            .into_iter()
            .collect();
        assert_eq!(counts, expected);
        assert_eq!(betti_from_m(&expected, 3).unwrap(), twin_table());
        assert!(m_from_betti(&BettiTable::new(4)).is_empty());
        let single: MCounts = [((4, 2), 1)].into_iter().collect();
        let t = betti_from_m(&single, 4).unwrap();
        for i in 0..4 {
            assert_eq!(t.get(i, i as u32 + 2), binomial_u64(3, i as i64));
        }
        let bad: MCounts = [((2, 2), -1)].into_iter().collect();
        assert!(matches!(betti_from_m(&bad, 3), Err(Error::Infeasible(_))));
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(extremal_corners(&twin_table()), vec![Corner::new(2, 5, 3)]);
        assert_eq!(
            extremal_from_stable(&twin_i()).unwrap(),
            vec![Corner::new(2, 5, 3)]
        );
        let single = BettiTable::from_entries(3, [(0, 4, 1)]).unwrap();
        assert_eq!(extremal_corners(&single), vec![Corner::new(0, 4, 1)]);
        let p = MonomialIdeal::from_exponents(2, &[&[3, 0]]).unwrap();
        assert_eq!(
            extremal_from_stable(&p).unwrap(),
            vec![Corner::new(0, 3, 1)]
        );
    }

    #[test]
    fn rendering() {
        let t = twin_table();
        assert_eq!(t.render(RenderOptions::default()), "6 6 1\n3 6 3\n");
        let full = t.render(RenderOptions {
            leading_zero_rows: true,
            ..Default::default()
        });
        assert_eq!(full, "0 0 0\n0 0 0\n0 0 0\n6 6 1\n3 6 3\n");
        assert_eq!(
            BettiTable::new(2).render(RenderOptions::default()),
            "(zero table)\n"
        );
        let sq = BettiTable::from_entries(2, [(0, 2, 3), (1, 3, 2)]).unwrap();
        assert_eq!(sq.render(RenderOptions::default()), "3 2\n");
        let q = sq.render(RenderOptions {
            quotient: true,
            ..Default::default()
        });
        assert_eq!(q, "1 0 0\n0 3 2\n");
    }

    #[test]
    fn json_shape() {
        let t = BettiTable::from_entries(2, [(1, 3, 2), (0, 2, 3)]).unwrap();
        assert_eq!(t.to_json(), r#"{"n":2,"entries":[[0,2,3],[1,3,2]]}"#);
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
        assert!(BettiTable::from_json("{").is_err());
    }
}
