//! Binomial coefficients, Macaulay representations and the operators built
//! on top of them.
//!
//! All arithmetic here is arbitrary precision. Binomials follow the
//! convention `binom(p, q) = 0` whenever `p < 0` or `q < 0`, `binom(p, q) = 0`
//! for `q > p >= 0`, and `binom(0, 0) = 1`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `binom(p, q)` with the sign convention described in the module docs.
pub fn binomial(p: i64, q: i64) -> BigUint {
    if p < 0 || q < 0 || q > p {
        return BigUint::zero();
    }
    let q = q.min(p - q) as u64;
    let p = p as u64;
    let mut acc = BigUint::one();
    // acc = binom(p - q + t, t) after step t, so every division is exact
    for t in 1..=q {
        acc *= p - q + t;
        acc /= t;
    }
    acc
}

/// `binom(p, q)` as a machine integer. Panics if the value does not fit in
/// a `u64`; callers use it for counts of explicitly enumerated monomials.
pub fn binomial_u64(p: i64, q: i64) -> u64 {
    binomial(p, q)
        .to_u64()
        .unwrap_or_else(|| panic!("binom({p}, {q}) does not fit in u64"))
}

/// The `d`-th Macaulay representation `a = sum_{i=1}^d binom(k(i), i)` with
/// `k(d) > k(d-1) > ... > k(1) >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    value: BigUint,
    /// `ks[0] = k(d)`, ..., `ks[d-1] = k(1)`.
    ks: Vec<u64>,
}

impl MacaulayRep {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn d(&self) -> usize {
        self.ks.len()
    }

    /// `k(i)` for `1 <= i <= d`.
    pub fn k(&self, i: usize) -> u64 {
        assert!(
            i >= 1 && i <= self.d(),
            "index {i} outside 1..={}",
            self.d()
        );
        self.ks[self.d() - i]
    }

    /// `(k(d), ..., k(1))`.
    pub fn ks(&self) -> &[u64] {
        &self.ks
    }

    /// `sum_i binom(k(i) + j, i + j)`, i.e. `a^<d,j>`.
    pub fn shifted(&self, j: i64) -> BigUint {
        (1..=self.d())
            .map(|i| binomial(self.k(i) as i64 + j, i as i64 + j))
            .sum()
    }
}

/// Largest `k` with `binom(k, i) <= rem`, assuming `rem >= 1` and `i >= 1`.
fn largest_top(rem: &BigUint, i: usize) -> u64 {
    let i64_i = i as i64;
    let mut lo = i as u64; // binom(i, i) = 1 <= rem
    let mut hi = lo.max(1) * 2;
    while binomial(hi as i64, i64_i) <= *rem {
        lo = hi;
        hi *= 2;
    }
    // binom(lo, i) <= rem < binom(hi, i)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid as i64, i64_i) <= *rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The `d`-th Macaulay representation of `a`, computed greedily.
///
/// For `a = 0` (and for the trailing zero terms in general) the canonical
/// choice `k(i) = i - 1` is made, which keeps `0^<d,j> = 0` for every `j`.
pub fn macaulay_rep(a: &BigUint, d: usize) -> MacaulayRep {
    assert!(d >= 1, "Macaulay representations need d >= 1");
    let mut ks = Vec::with_capacity(d);
    let mut rem = a.clone();
    for i in (1..=d).rev() {
        let k = if rem.is_zero() {
            (i - 1) as u64
        } else {
            let k = largest_top(&rem, i);
            rem -= binomial(k as i64, i as i64);
            k
        };
        if let Some(&prev) = ks.last() {
            debug_assert!(k < prev, "greedy representation must decrease");
        }
        ks.push(k);
    }
    debug_assert!(rem.is_zero());
    MacaulayRep {
        value: a.clone(),
        ks,
    }
}

/// `a^<d,j> = sum_i binom(k(i) + j, i + j)` over the `d`-th Macaulay
/// representation of `a`. In particular `a^<d,0> = a` and `a^<d,1> = a^<d>`.
pub fn macaulay_shift(a: &BigUint, d: usize, j: i64) -> BigUint {
    macaulay_rep(a, d).shifted(j)
}

/// `min { a : k <= a^<i-1, ell-i> }` for `2 <= i < ell`.
///
/// The map `a -> a^<i-1, ell-i>` is nondecreasing and dominates the
/// identity, so the minimum lies in `1..=k` and is found by bisection.
pub fn min_shift_preimage(k: &BigUint, i: usize, ell: usize) -> BigUint {
    assert!(i >= 2 && i < ell, "need 2 <= i < ell, got i={i}, ell={ell}");
    let d = i - 1;
    let j = (ell - i) as i64;
    if k.is_zero() {
        return BigUint::zero();
    }
    let mut lo = BigUint::zero(); // shift(lo) < k
    let mut hi = k.clone(); // shift(hi) >= k
    debug_assert!(macaulay_shift(&hi, d, j) >= *k);
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        if macaulay_shift(&mid, d, j) >= *k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// O-sequence test in vector numbering: `m_1 = 1` and
/// `m_{i+1} <= m_i^<i-1>` for all `i >= 2`.
///
/// No constraint is placed between `m_1` and `m_2`; the separate bound
/// `m_2 <= d` belongs to the callers that need it.
pub fn is_o_sequence(m: &[u64]) -> bool {
    if m.first() != Some(&1) {
        return false;
    }
    (2..m.len()).all(|i| {
        let cur = BigUint::from(m[i - 1]);
        BigUint::from(m[i]) <= macaulay_shift(&cur, i - 1, 1)
    })
}

/// Prefix sums `(v_1, v_1 + v_2, ..., v_1 + ... + v_r)`.
pub fn transform_t(v: &[BigUint]) -> Vec<BigUint> {
    let mut acc = BigUint::zero();
    v.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

/// Last entry of the `q`-fold prefix-sum transform of `v`.
pub fn s_q(v: &[BigUint], q: u64) -> BigUint {
    assert!(!v.is_empty(), "s_q of an empty vector");
    let mut cur = v.to_vec();
    for _ in 0..q {
        cur = transform_t(&cur);
    }
    cur.pop().unwrap()
}

/// Convenience conversion for small vectors.
pub fn to_big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}
