//! Graded Betti numbers of arbitrary monomial ideals from multigraded
//! simplicial homology.
//!
//! `beta_{i,b}(I)` is the rank of the reduced homology in dimension `i - 1`
//! of the upper Koszul complex `{ tau subset supp(b) : x^{b - tau} in I }`.
//! Only multidegrees dividing the lcm of the generators contribute.

use std::collections::HashMap;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Default cap on the number of multidegrees visited by [`oracle_betti`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 2_000_000;

/// A simplicial complex on vertices `1..=n` (`n <= 32`); faces are bitmasks
/// with bit `v - 1` standing for vertex `v`.
///
/// The void complex has no faces at all; the complex `{emptyset}` has just
/// the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<u32>,
}

impl SimplicialComplex {
    /// Builds the complex from a face list, closing it under subsets.
    pub fn new(n: usize, faces: impl IntoIterator<Item = u32>) -> Self {
        assert!(n <= 32);
        let mut all: Vec<u32> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut stack: Vec<u32> = faces.into_iter().collect();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            all.push(f);
            let mut bits = f;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                stack.push(f & !low);
                bits &= !low;
            }
        }
        all.sort_by_key(|f| (f.count_ones(), *f));
        SimplicialComplex { n, faces: all }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face dimension, `-1` for `{emptyset}` and `None` when void.
    pub fn dim(&self) -> Option<i64> {
        self.faces.iter().map(|f| f.count_ones() as i64 - 1).max()
    }
}

/// The upper Koszul complex of `I` in multidegree `b`.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    let n = ideal.n();
    assert!(n <= 32, "the homology oracle supports at most 32 variables");
    let support: Vec<usize> = (1..=n).filter(|&i| b.exp(i) > 0).collect();
    let mut faces = Vec::new();
    for mask in 0u32..(1u32 << support.len()) {
        let mut exps = b.exps().to_vec();
        let mut face = 0u32;
        for (bit, &v) in support.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                exps[v - 1] -= 1;
                face |= 1 << (v - 1);
            }
        }
        if ideal.contains(&Monomial::from_exps_unchecked(exps)) {
            faces.push(face);
        }
    }
    // membership is closed under shrinking tau, so the list is already a complex
    let mut c = SimplicialComplex { n, faces };
    c.faces.sort_by_key(|f| (f.count_ones(), *f));
    c
}

/// Rank over the rationals of an integer matrix, by fraction-free
/// (Bareiss) elimination with overflow checks.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col];
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let factor = row[col];
            for c in col..ncols {
                let v = pivot
                    .checked_mul(row[c])
                    .and_then(|x| x.checked_sub(factor.checked_mul(pivot_row[c])?))
                    .expect("entries overflow i128 during elimination");
                row[c] = v / prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Reduced homology ranks; entry `t` is the rank in dimension `t - 1`, so
/// index 0 is dimension -1. The void complex yields an empty vector.
pub fn reduced_homology_ranks(c: &SimplicialComplex) -> Vec<u64> {
    let Some(dim) = c.dim() else {
        return Vec::new();
    };
    let top = (dim + 1) as usize;
    // faces grouped by cardinality
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in c.faces() {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u32, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(k, &f)| (f, k)).collect())
        .collect();
    // rank of the boundary from size s to size s - 1, for s = 1..=top
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_size[s - 1].len()];
                let mut sign = 1;
                for v in 0..32 {
                    if f >> v & 1 == 1 {
                        row[index[s - 1][&(f & !(1 << v))]] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        ranks[s] = integer_rank(&rows);
    }
    (0..=top)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

/// Betti table of an arbitrary monomial ideal. Fails with a budget error
/// when the lcm has more than `budget` divisors.
pub fn oracle_betti_with_budget(ideal: &MonomialIdeal, budget: u64) -> Result<BettiTable> {
    let n = ideal.n();
    let mut table = BettiTable::new(n);
    if ideal.is_zero() {
        return Ok(table);
    }
    if n > 32 {
        return Err(Error::Domain(
            "the homology oracle supports at most 32 variables".into(),
        ));
    }
    let lcm = ideal.lcm();
    let count = lcm
        .exps()
        .iter()
        .try_fold(1u64, |acc, &e| acc.checked_mul(e as u64 + 1));
    match count {
        Some(c) if c <= budget => {}
        _ => {
            return Err(Error::Budget(format!(
                "the lcm {lcm} has more than {budget} divisors; use the Eliahou-Kervaire path for stable ideals or a smaller input"
            )))
        }
    }
    let mut b = vec![0u32; n];
    loop {
        let mono = Monomial::from_exps_unchecked(b.clone());
        // x^b itself must lie in I for any face to exist
        if ideal.contains(&mono) {
            let h = reduced_homology_ranks(&upper_koszul(ideal, &mono));
            let deg = mono.degree();
            for (t, &r) in h.iter().enumerate() {
                if r > 0 {
                    table.add(t, deg, r)?;
                }
            }
        }
        // next divisor of the lcm in odometer order
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(table);
            }
            if b[pos] < lcm.exps()[pos] {
                b[pos] += 1;
                break;
            }
            b[pos] = 0;
            pos += 1;
        }
    }
}

/// [`oracle_betti_with_budget`] with [`DEFAULT_ORACLE_BUDGET`].
pub fn oracle_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    oracle_betti_with_budget(ideal, DEFAULT_ORACLE_BUDGET)
}
