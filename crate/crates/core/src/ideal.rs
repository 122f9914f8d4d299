//! Monomial ideals and the counting invariants attached to them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::macaulay::binomial_u64;
use crate::monomial::{enumerate_degree, with_max_index, Monomial};

/// Generator counts `m_{k,d}` keyed by `(k, d)`: `k` is the max-index
/// (1-based, up to `n + 1` for data coming from Betti tables) and `d` the
/// degree. Zero entries are never stored.
pub type MCounts = BTreeMap<(usize, u32), i64>;

/// A vector `(m_1, ..., m_n)` of nonnegative counts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MVector(pub Vec<u64>);

impl MVector {
    pub fn zeros(n: usize) -> Self {
        MVector(vec![0; n])
    }

    /// `m_i`, 1-based.
    pub fn get(&self, i: usize) -> u64 {
        self.0[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Prefix sums: the m-vector of `m * J` when this is the m-vector of a
    /// strongly stable `J`.
    pub fn cumulative(&self) -> MVector {
        let mut acc = 0;
        MVector(
            self.0
                .iter()
                .map(|&x| {
                    acc += x;
                    acc
                })
                .collect(),
        )
    }
}

impl Deref for MVector {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for MVector {
    fn from(v: Vec<u64>) -> Self {
        MVector(v)
    }
}

impl fmt::Display for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A monomial ideal given by its minimal generating set `G(I)`.
///
/// Generators are kept sorted in decreasing degree-lexicographic order. The
/// zero ideal (no generators) only arises from [`MonomialIdeal::zero`] and
/// as a component ideal below the initial degree; every other constructor
/// rejects it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn minimal_subset(mut raw: Vec<Monomial>) -> Vec<Monomial> {
    raw.sort_by_key(|u| u.degree());
    raw.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(raw.len());
    for u in raw {
        if !kept.iter().any(|g| g.divides(&u)) {
            kept.push(u);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `raw`, reduced to its minimal generating set.
    pub fn new(n: usize, raw: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("need at least one variable".into()));
        }
        let raw: Vec<Monomial> = raw.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::Input("empty generating set (zero ideal)".into()));
        }
        for u in &raw {
            if u.n() != n {
                return Err(Error::Input(format!(
                    "generator {u} lives in {} variables, expected {n}",
                    u.n()
                )));
            }
            if u.is_one() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_subset(raw),
        })
    }

    /// Alias of [`MonomialIdeal::new`]: the inclusion-minimal generating set.
    pub fn minimalize(n: usize, raw: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        Self::new(n, raw)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    /// Builds from exponent rows; convenient for literals.
    pub fn from_exponents(n: usize, rows: &[&[u32]]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| Monomial::new(r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    /// `(x_1, ..., x_n)^d`.
    pub fn maximal_power(n: usize, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnitIdeal);
        }
        Self::new(n, enumerate_degree(n, d)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Smallest generator degree (the initial degree), `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Degrees in which minimal generators occur, increasing.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.gens.iter().map(Monomial::degree).collect();
        set.into_iter().collect()
    }

    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    /// Basis of `I_d`, decreasing.
    pub fn graded_component(&self, d: u32) -> Vec<Monomial> {
        if self.is_zero() || self.min_degree().is_some_and(|m| m > d) {
            return Vec::new();
        }
        enumerate_degree(self.n, d)
            .expect("degree within cap")
            .into_iter()
            .filter(|u| self.contains(u))
            .collect()
    }

    /// `I_<d>`: the ideal generated by `I_d`; zero when `I_d` is empty.
    pub fn component_ideal(&self, d: u32) -> MonomialIdeal {
        let comp = self.graded_component(d);
        if comp.is_empty() {
            return MonomialIdeal::zero(self.n);
        }
        MonomialIdeal {
            n: self.n,
            gens: comp,
        }
    }

    /// `m^q I`.
    pub fn times_maximal(&self, q: u32) -> MonomialIdeal {
        let mut cur = self.clone();
        for _ in 0..q {
            if cur.is_zero() {
                break;
            }
            let raw = cur
                .gens
                .iter()
                .flat_map(|g| (1..=self.n).map(move |i| g.mul_var(i)))
                .collect();
            cur = MonomialIdeal {
                n: self.n,
                gens: minimal_subset(raw),
            };
        }
        cur
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::Input("ideals live in different rings".into()));
        }
        let raw: Vec<Monomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        if raw.is_empty() {
            return Ok(MonomialIdeal::zero(self.n));
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_subset(raw),
        })
    }

    /// `I ∩ K[x_1, ..., x_ell]`, extended back to `S`.
    pub fn restrict(&self, ell: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            gens: self
                .gens
                .iter()
                .filter(|g| g.max_index() <= ell)
                .cloned()
                .collect(),
        }
    }

    /// Stability: `(u / x_{m(u)}) x_i ∈ I` for every generator `u` and
    /// every `i < m(u)`.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            let m = u.max_index();
            (1..m).all(|i| self.contains(&u.exchange(m, i).unwrap()))
        })
    }

    /// Strong stability: `(u / x_j) x_i ∈ I` for every generator `u`, every
    /// `x_j | u` and every `i < j`. Checking `i = j - 1` suffices on
    /// generators since the moves compose inside the ideal.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            (2..=self.n).all(|j| match u.exchange(j, j - 1) {
                Some(v) => self.contains(&v),
                None => true,
            })
        })
    }

    /// Every graded component from the initial degree up to one past the
    /// largest generator degree is a top segment of `S_d`. Beyond that the
    /// components are `m`-multiples of a lexsegment and hence lexsegments.
    pub fn is_lexsegment(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return true;
        };
        (lo..=hi + 1).all(|d| {
            let all = enumerate_degree(self.n, d).expect("degree within cap");
            let comp = self.graded_component(d);
            all[..comp.len()] == comp[..]
        })
    }

    /// For an ideal generated in one degree `d`: for each `i <= ell` the
    /// generators with max-index `i` are the biggest ones of that kind.
    pub fn is_piecewise_lex_up_to(&self, ell: usize) -> Result<bool> {
        let degrees = self.generator_degrees();
        if degrees.len() > 1 {
            return Err(Error::Domain(format!(
                "piecewise lexsegment test needs generators in one degree, found degrees {degrees:?}"
            )));
        }
        let Some(&d) = degrees.first() else {
            return Ok(true);
        };
        for i in 1..=ell.min(self.n) {
            let have: Vec<&Monomial> = self.gens.iter().filter(|g| g.max_index() == i).collect();
            let top = with_max_index(i, d, self.n)?;
            if top.iter().take(have.len()).ne(have.iter().copied()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(m_1(I), ..., m_n(I))` counted over `G(I)`.
    pub fn m_vector(&self) -> MVector {
        let mut m = MVector::zeros(self.n);
        for g in &self.gens {
            m.0[g.max_index() - 1] += 1;
        }
        m
    }

    /// `m_{i,d}(I)` over `G(I)` without checking stability.
    pub fn m_counts_by_degree_unchecked(&self) -> MCounts {
        let mut counts = MCounts::new();
        for g in &self.gens {
            *counts.entry((g.max_index(), g.degree())).or_insert(0) += 1;
        }
        counts
    }

    /// `m_{i,d}(I)`; requires a stable ideal.
    pub fn m_counts_by_degree(&self) -> Result<MCounts> {
        if !self.is_stable() {
            return Err(Error::Domain(
                "m-counts feed the Eliahou-Kervaire formula only for stable ideals".into(),
            ));
        }
        Ok(self.m_counts_by_degree_unchecked())
    }

    /// `(mu_{1,j}, ..., mu_{n,j})`: monomials of `I_j` sorted by max-index.
    pub fn mu_row(&self, j: u32) -> MVector {
        let mut row = MVector::zeros(self.n);
        for u in self.graded_component(j) {
            row.0[u.max_index() - 1] += 1;
        }
        row
    }

    /// The matrix of generators, rows from the initial degree through the
    /// largest generator degree.
    pub fn generator_matrix(&self) -> Result<GeneratorMatrix> {
        if !self.is_strongly_stable() {
            return Err(Error::Domain(
                "the matrix of generators is defined for strongly stable ideals".into(),
            ));
        }
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Ok(GeneratorMatrix::empty(self.n));
        };
        let rows = (lo..=hi).map(|j| self.mu_row(j)).collect();
        GeneratorMatrix::new(self.n, lo, rows)
    }

    /// `h_d(S/I)`: the number of degree-`d` monomials outside `I`.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        let total = binomial_u64(self.n as i64 + d as i64 - 1, d as i64);
        total - self.graded_component(d).len() as u64
    }

    /// The smallest strongly stable ideal containing `monos`.
    pub fn borel_closure(n: usize, monos: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut seen: BTreeSet<Monomial> = BTreeSet::new();
        let mut stack: Vec<Monomial> = monos.into_iter().collect();
        while let Some(u) = stack.pop() {
            if u.n() != n {
                return Err(Error::Input(format!("{u} does not live in {n} variables")));
            }
            if !seen.insert(u.clone()) {
                continue;
            }
            for j in 2..=n {
                if let Some(v) = u.exchange(j, j - 1) {
                    if !seen.contains(&v) {
                        stack.push(v);
                    }
                }
            }
        }
        Self::new(n, seen)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// The matrix of generators `(mu_{i,j})` with `mu_{i,j} = m_i(I_<j>)`.
///
/// Row `r` holds degree `jmin + r`. Rows above `jmin` are zero; rows past
/// the last stored one follow the stabilization rule
/// `mu_{i,j} = sum_{q <= i} mu_{q,j-1}`. Equality compares the implied
/// infinite matrices.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    n: usize,
    jmin: u32,
    rows: Vec<MVector>,
}

impl GeneratorMatrix {
    pub fn new(n: usize, jmin: u32, rows: Vec<MVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("need at least one variable".into()));
        }
        if jmin == 0 {
            return Err(Error::Input("rows start in degree 1 or later".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Input(format!("row {r} does not have {n} entries")));
        }
        Ok(GeneratorMatrix { n, jmin, rows })
    }

    pub fn empty(n: usize) -> Self {
        GeneratorMatrix {
            n,
            jmin: 1,
            rows: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn jmin(&self) -> u32 {
        self.jmin
    }

    pub fn rows(&self) -> &[MVector] {
        &self.rows
    }

    /// Degree of the last stored row.
    pub fn last_degree(&self) -> Option<u32> {
        (!self.rows.is_empty()).then(|| self.jmin + self.rows.len() as u32 - 1)
    }

    /// Row `j` of the implied infinite matrix.
    pub fn row(&self, j: u32) -> MVector {
        if j < self.jmin || self.rows.is_empty() {
            return MVector::zeros(self.n);
        }
        let last = self.last_degree().unwrap();
        if j <= last {
            return self.rows[(j - self.jmin) as usize].clone();
        }
        let mut row = self.rows.last().unwrap().clone();
        for _ in last..j {
            row = row.cumulative();
        }
        row
    }

    /// Drops leading zero rows and trailing rows implied by stabilization.
    pub fn normalized(&self) -> GeneratorMatrix {
        let mut rows = self.rows.clone();
        let mut jmin = self.jmin;
        let lead = rows.iter().take_while(|r| r.is_zero()).count();
        rows.drain(..lead);
        jmin += lead as u32;
        while rows.len() >= 2 && rows[rows.len() - 1] == rows[rows.len() - 2].cumulative() {
            rows.pop();
        }
        if rows.is_empty() {
            return GeneratorMatrix::empty(self.n);
        }
        GeneratorMatrix {
            n: self.n,
            jmin,
            rows,
        }
    }

    /// `m_{i,j} = mu_{i,j} - sum_{q <= i} mu_{q,j-1}`.
    pub fn mu_to_m(&self) -> Result<MCounts> {
        let mut counts = MCounts::new();
        let Some(last) = self.last_degree() else {
            return Ok(counts);
        };
        for j in self.jmin..=last {
            let prev = self.row(j - 1).cumulative();
            let cur = self.row(j);
            for i in 1..=self.n {
                let (a, b) = (cur.get(i), prev.get(i));
                if a < b {
                    return Err(Error::Infeasible(format!(
                        "mu_{{{i},{j}}} = {a} is below the cumulative bound {b}"
                    )));
                }
                if a > b {
                    counts.insert((i, j), (a - b) as i64);
                }
            }
        }
        Ok(counts)
    }

    /// Inverse of [`GeneratorMatrix::mu_to_m`], by induction on the degree.
    pub fn m_to_mu(counts: &MCounts, n: usize) -> Result<GeneratorMatrix> {
        let mut lo = u32::MAX;
        let mut hi = 0;
        for (&(i, d), &c) in counts {
            if i == 0 || i > n {
                return Err(Error::Input(format!("max-index {i} outside 1..={n}")));
            }
            if c < 0 {
                return Err(Error::Input(format!("negative count m_{{{i},{d}}} = {c}")));
            }
            if c > 0 {
                lo = lo.min(d);
                hi = hi.max(d);
            }
        }
        if lo == u32::MAX {
            return Ok(GeneratorMatrix::empty(n));
        }
        let mut rows: Vec<MVector> = Vec::new();
        let mut prev = MVector::zeros(n);
        for j in lo..=hi {
            let base = prev.cumulative();
            let row = MVector(
                (1..=n)
                    .map(|i| base.get(i) + counts.get(&(i, j)).copied().unwrap_or(0) as u64)
                    .collect(),
            );
            prev = row.clone();
            rows.push(row);
        }
        GeneratorMatrix::new(n, lo, rows)
    }
}

impl PartialEq for GeneratorMatrix {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        a.n == b.n && a.rows == b.rows && (a.rows.is_empty() || a.jmin == b.jmin)
    }
}

impl Eq for GeneratorMatrix {}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    pub(crate) fn twin_i() -> MonomialIdeal {
        ideal(
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
    }

    pub(crate) fn twin_j() -> MonomialIdeal {
        ideal(
            3,
            &[
                &[4, 0, 0],
                &[3, 1, 0],
                &[2, 2, 0],
                &[3, 0, 1],
                &[1, 2, 1],
                &[1, 1, 2],
                &[1, 4, 0],
                &[2, 0, 3],
                &[0, 4, 1],
            ],
        )
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[2, 1]]).gens(), &[m(&[2, 0])]);
        assert_eq!(twin_i().gens().len(), 9);
        assert_eq!(
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]).gens(),
            &[m(&[1, 1, 0]), m(&[0, 1, 1])]
        );
        assert_eq!(
            MonomialIdeal::from_exponents(2, &[&[0, 0], &[1, 0]]),
            Err(Error::UnitIdeal)
        );
        assert!(MonomialIdeal::new(2, Vec::new()).is_err());
    }

    #[test]
    fn contains_and_components() {
        let i = ideal(3, &[&[2, 0, 0]]);
        assert!(i.contains(&m(&[2, 0, 1])));
        assert!(!i.contains(&m(&[1, 1, 0])));
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            i.graded_component(2),
            vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        let i = ideal(2, &[&[2, 0]]);
        assert_eq!(i.graded_component(3), vec![m(&[3, 0]), m(&[2, 1])]);
        assert!(i.component_ideal(1).is_zero());
        assert_eq!(i.component_ideal(2), i);
    }

    #[test]
    fn component_of_non_stable_twin() {
        let expected = ideal(
            3,
            &[
                &[4, 0, 0],
                &[3, 1, 0],
                &[2, 2, 0],
                &[3, 0, 1],
                &[1, 2, 1],
                &[1, 1, 2],
            ],
        );
        assert_eq!(twin_j().component_ideal(4), expected);
    }

    #[test]
    fn times_maximal_examples() {
        let i = ideal(2, &[&[1, 0]]);
        assert_eq!(i.times_maximal(1), ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(i.times_maximal(0), i);
    }

    #[test]
    fn stability_predicates() {
        assert!(twin_i().is_strongly_stable());
        assert!(!twin_j().is_strongly_stable());
        assert!(!twin_j().is_stable());
        assert!(!ideal(2, &[&[0, 1]]).is_stable());
        // stable but not strongly stable
        let s = ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1]]);
        assert!(s.is_stable());
        let t = ideal(
            3,
            &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1]],
        );
        assert!(t.is_strongly_stable());
        let u = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1]]);
        assert!(u.is_stable() && !u.is_strongly_stable());
        assert!(ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]]).is_lexsegment());
        assert!(!ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]).is_lexsegment());
    }

    #[test]
    fn piecewise_lex_checks() {
        let mixed = ideal(2, &[&[1, 0], &[0, 2]]);
        assert!(mixed.is_piecewise_lex_up_to(2).is_err());
        let top = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 1]]);
        assert!(!top.is_piecewise_lex_up_to(3).unwrap());
        assert!(top.is_piecewise_lex_up_to(2).unwrap());
    }

    #[test]
    fn counting_invariants() {
        let counts = twin_i().m_counts_by_degree().unwrap();
        let expected: MCounts = [((1, 4), 1), ((2, 4), 4), ((3, 4), 1), ((3, 5), 3)]
            .into_iter()
            .collect();
        assert_eq!(counts, expected);
        let counts = ideal(3, &[&[6, 0, 0]]).m_counts_by_degree().unwrap();
        assert_eq!(counts, [((1, 6), 1)].into_iter().collect());
        let sq = MonomialIdeal::maximal_power(3, 2).unwrap();
        assert_eq!(
            sq.m_counts_by_degree().unwrap(),
            [((1, 2), 1), ((2, 2), 2), ((3, 2), 3)]
                .into_iter()
                .collect()
        );
        assert!(twin_j().m_counts_by_degree().is_err());
        assert_eq!(
            twin_j()
                .m_counts_by_degree_unchecked()
                .values()
                .sum::<i64>(),
            9
        );
    }

    #[test]
    fn generator_matrix_examples() {
        let gm = ideal(3, &[&[1, 0, 0]]).generator_matrix().unwrap();
        assert_eq!(gm.row(1), MVector(vec![1, 0, 0]));
        assert_eq!(gm.row(2), MVector(vec![1, 1, 1]));
        let sq = MonomialIdeal::maximal_power(3, 2)
            .unwrap()
            .generator_matrix()
            .unwrap();
        assert_eq!(sq.jmin(), 2);
        assert_eq!(sq.rows(), &[MVector(vec![1, 2, 3])]);
        assert!(twin_j().generator_matrix().is_err());
    }

    #[test]
    fn mu_m_conversion() {
        let gm = twin_i().generator_matrix().unwrap();
        assert_eq!(gm.rows(), &[MVector(vec![1, 4, 1]), MVector(vec![1, 5, 9])]);
        let counts = gm.mu_to_m().unwrap();
        assert_eq!(counts.get(&(3, 5)), Some(&3));
        assert_eq!(GeneratorMatrix::m_to_mu(&counts, 3).unwrap(), gm);
        let zero = GeneratorMatrix::new(3, 2, vec![MVector::zeros(3)]).unwrap();
        assert!(zero.mu_to_m().unwrap().is_empty());
        let bad = GeneratorMatrix::new(
            4,
            5,
            vec![MVector(vec![1, 3, 2, 2]), MVector(vec![1, 3, 6, 9])],
        )
        .unwrap();
        assert!(matches!(bad.mu_to_m(), Err(Error::Infeasible(_))));
    }

    #[test]
    fn hilbert_function_examples() {
        let sq = MonomialIdeal::maximal_power(3, 2).unwrap();
        assert_eq!(
            (0..5).map(|d| sq.hilbert_function(d)).collect::<Vec<_>>(),
            vec![1, 3, 0, 0, 0]
        );
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            (0..5).map(|d| i.hilbert_function(d)).collect::<Vec<_>>(),
            vec![1, 2, 1, 1, 1]
        );
        let z = MonomialIdeal::zero(3);
        assert_eq!(z.hilbert_function(3), 10);
    }

    #[test]
    fn borel_closure_of_single_monomial() {
        let c = MonomialIdeal::borel_closure(3, [m(&[0, 1, 1])]).unwrap();
        assert_eq!(
            c,
            ideal(
                3,
                &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1]]
            )
        );
        assert!(c.is_strongly_stable());
    }
}
