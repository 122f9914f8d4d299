//! Monomials of `S = K[x_1, ..., x_n]` as dense exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::macaulay::binomial_u64;

/// Largest total degree accepted anywhere in the crate.
pub const MAX_DEGREE: u32 = 64;

/// A monomial `x_1^{a_1} ... x_n^{a_n}`; position `i - 1` holds the exponent
/// of `x_i`.
///
/// `Ord` is the degree-lexicographic order with `x_1 > x_2 > ... > x_n`:
/// degree first, then the exponent vectors compared from `x_1` on. Monomials
/// in different rings compare by `n` first, which only keeps the order total.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::Input(
                "a monomial needs at least one variable".into(),
            ));
        }
        let deg: u64 = exps.iter().map(|&e| e as u64).sum();
        if deg > MAX_DEGREE as u64 {
            return Err(Error::Input(format!(
                "degree {deg} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        Ok(Monomial { exps })
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        assert!(n >= 1);
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} outside 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub(crate) fn from_exps_unchecked(exps: Vec<u32>) -> Self {
        debug_assert!(!exps.is_empty());
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `m(u)`: the largest `e` with `x_e | u`, or 0 for the monomial 1.
    pub fn max_index(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.n() == other.n() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `u * x_i`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial { exps }
    }

    /// `u / x_i`, if `x_i` divides `u`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial { exps })
    }

    /// The Borel move `(u / x_j) * x_i`, if `x_j` divides `u`.
    pub fn exchange(&self, j: usize, i: usize) -> Option<Monomial> {
        if self.exps[j - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[j - 1] -= 1;
        exps[i - 1] += 1;
        Some(Monomial { exps })
    }

    /// Least common multiple.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// The same exponents viewed in a ring with `n >= self.n()` variables.
    pub fn extend_to(&self, n: usize) -> Monomial {
        assert!(n >= self.n());
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x_{}", i + 1)?,
                _ => write!(f, "x_{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Degree-lexicographic comparison that rejects monomials from different
/// rings.
pub fn deglex_compare(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.n() != v.n() {
        return Err(Error::Input(format!(
            "cannot compare monomials in {} and {} variables",
            u.n(),
            v.n()
        )));
    }
    Ok(u.cmp(v))
}

fn check_degree(d: u32) -> Result<()> {
    if d > MAX_DEGREE {
        return Err(Error::Input(format!(
            "degree {d} exceeds the supported maximum {MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// All monomials of degree `d` in `n` variables, strictly decreasing.
pub fn enumerate_degree(n: usize, d: u32) -> Result<Vec<Monomial>> {
    check_degree(d)?;
    if n == 0 {
        return Err(Error::Input("need at least one variable".into()));
    }
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if pos == n - 1 {
            cur[pos] = left;
            out.push(Monomial { exps: cur.clone() });
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::with_capacity(binomial_u64(n as i64 + d as i64 - 1, d as i64) as usize);
    rec(0, d, &mut vec![0; n], &mut out);
    Ok(out)
}

/// Number of degree-`d` monomials with max-index `ell`: `binom(ell+d-2, d-1)`.
pub fn count_with_max_index(ell: usize, d: u32) -> u64 {
    if ell == 0 || d == 0 {
        return u64::from(ell == 0 && d == 0);
    }
    binomial_u64(ell as i64 + d as i64 - 2, d as i64 - 1)
}

/// The degree-`d` monomials with `m(u) = ell`, strictly decreasing: `x_ell`
/// times the degree-`(d-1)` monomials of `K[x_1, ..., x_ell]`.
pub fn with_max_index(ell: usize, d: u32, n: usize) -> Result<Vec<Monomial>> {
    if ell == 0 || ell > n {
        return Err(Error::Domain(format!("max-index {ell} outside 1..={n}")));
    }
    if d == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    Ok(enumerate_degree(ell, d - 1)?
        .into_iter()
        .map(|w| w.extend_to(n).mul_var(ell))
        .collect())
}

/// `u(ell, k, d)`: the `k`-th biggest degree-`d` monomial with max-index
/// `ell` (1-based `k`).
pub fn kth_biggest_with_max_index(ell: usize, k: u64, d: u32, n: usize) -> Result<Monomial> {
    let bound = if ell >= 1 && d >= 1 {
        count_with_max_index(ell, d)
    } else {
        0
    };
    if k == 0 || k > bound {
        return Err(Error::Domain(format!(
            "k={k} must lie in 1..=binom(ell+d-2, ell-1)={bound} for ell={ell}, d={d}"
        )));
    }
    let list = with_max_index(ell, d, n)?;
    Ok(list[(k - 1) as usize].clone())
}
