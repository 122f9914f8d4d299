//! Extremal Betti profiles: the numerical conditions for their existence
//! and an explicit witness built from lexsegment pieces.
//!
//! All statements here are about characteristic 0, where a profile is
//! realized by some homogeneous ideal iff it is realized by a strongly
//! stable one.

use std::fmt;

use num_bigint::BigUint;

use crate::betti::{ek_betti, extremal_corners, Corner};
use crate::constructions::{big_to_u64, u_ideal};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::macaulay::{binomial, macaulay_shift, s_q};
use crate::oracle::oracle_betti;

/// Prescribed extremal Betti numbers `beta_{i_p, i_p + j_p} = b_p`, with
/// `0 < i_1 < ... < i_k < n`, `j_1 > ... > j_k > 0` and `b_p >= 1`.
/// A triple is stored as a [`Corner`] with `d = j_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalProfile {
    n: usize,
    triples: Vec<Corner>,
}

impl ExtremalProfile {
    /// Sorts the triples by `i` and validates them.
    pub fn new(n: usize, mut triples: Vec<Corner>) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::Input("a profile needs at least one corner".into()));
        }
        triples.sort_by_key(|c| c.i);
        for c in &triples {
            if c.i == 0 || c.i >= n {
                return Err(Error::Input(format!(
                    "corner column {} must lie in 1..{n}",
                    c.i
                )));
            }
            if c.d == 0 {
                return Err(Error::Input(
                    "corner degrees j_p must be positive; degree-0 corners are outside the existence criterion".into(),
                ));
            }
            if c.value == 0 {
                return Err(Error::Input("corner values must be positive".into()));
            }
        }
        for w in triples.windows(2) {
            if w[0].i == w[1].i {
                return Err(Error::Input(format!("two corners in column {}", w[0].i)));
            }
            if w[0].d <= w[1].d {
                return Err(Error::Input(format!(
                    "corner degrees must strictly decrease as i grows: ({},{}) then ({},{})",
                    w[0].i, w[0].d, w[1].i, w[1].d
                )));
            }
        }
        Ok(ExtremalProfile { n, triples })
    }

    /// Parses `"i1,j1,b1;i2,j2,b2;..."`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut triples = Vec::new();
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let nums: Vec<&str> = part.split(',').map(str::trim).collect();
            if nums.len() != 3 {
                return Err(Error::Parse(format!("expected i,j,b in {part:?}")));
            }
            let bad = |s: &str| Error::Parse(format!("not a nonnegative integer: {s:?}"));
            let i = nums[0].parse::<usize>().map_err(|_| bad(nums[0]))?;
            let j = nums[1].parse::<u32>().map_err(|_| bad(nums[1]))?;
            let b = nums[2].parse::<u64>().map_err(|_| bad(nums[2]))?;
            triples.push(Corner::new(i, j, b));
        }
        Self::new(n, triples)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[Corner] {
        &self.triples
    }

    /// Triple `p`, 1-based.
    pub fn triple(&self, p: usize) -> Corner {
        self.triples[p - 1]
    }
}

impl fmt::Display for ExtremalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .triples
            .iter()
            .map(|c| format!("{},{},{}", c.i, c.d, c.value))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// `(b^<i, -i>, b^<i, 1-i>, ..., b^<i, len-1-i>)`: the m-vector, in its first
/// `len` entries, of `U(i+1, b, j)` for any `j`.
fn shifted_vector(b: &BigUint, i: usize, len: usize) -> Vec<BigUint> {
    (1..=len)
        .map(|t| macaulay_shift(b, i, t as i64 - 1 - i as i64))
        .collect()
}

/// `v^p` for `2 <= p <= k`, of length `i_{p-1} + 1`.
pub fn v_vector(profile: &ExtremalProfile, p: usize) -> Vec<BigUint> {
    assert!(
        p >= 2 && p <= profile.k(),
        "p = {p} outside 2..={}",
        profile.k()
    );
    let cur = profile.triple(p);
    let prev = profile.triple(p - 1);
    shifted_vector(&BigUint::from(cur.value), cur.i, prev.i + 1)
}

/// One inequality `lhs <= rhs` attached to corner `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub p: usize,
    /// The prefix-sum term added to `b_p`; absent for `p = k`.
    pub carried: Option<BigUint>,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl ConditionCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

impl fmt::Display for ConditionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds() { "<=" } else { ">" };
        match &self.carried {
            Some(s) => write!(
                f,
                "p={}: {} + b_{} = {} {rel} {}",
                self.p, s, self.p, self.lhs, self.rhs
            ),
            None => write!(
                f,
                "p={}: b_{} = {} {rel} {}",
                self.p, self.p, self.lhs, self.rhs
            ),
        }
    }
}

/// Per-corner evaluation of the existence inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// Ordered `p = k, k-1, ..., 1`.
    pub checks: Vec<ConditionCheck>,
}

impl ConditionReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(ConditionCheck::holds)
    }

    pub fn first_failure(&self) -> Option<&ConditionCheck> {
        self.checks.iter().find(|c| !c.holds())
    }
}

fn corner_bound(c: Corner) -> BigUint {
    binomial(c.i as i64 + c.d as i64 - 1, c.i as i64)
}

/// The inequalities `b_k <= binom(i_k+j_k-1, i_k)` and
/// `S_{j_p - j_{p+1}}(v^{p+1}) + b_p <= binom(i_p+j_p-1, i_p)`, where `v^{p+1}`
/// only involves `b_{p+1}`.
///
/// For `k <= 2` this is equivalent to existence. For longer profiles it can
/// pass on infeasible input; [`check_conditions_sharp`] is the exact test.
pub fn check_conditions(profile: &ExtremalProfile) -> ConditionReport {
    let k = profile.k();
    let last = profile.triple(k);
    let mut checks = vec![ConditionCheck {
        p: k,
        carried: None,
        lhs: BigUint::from(last.value),
        rhs: corner_bound(last),
    }];
    for p in (1..k).rev() {
        let c = profile.triple(p);
        let next = profile.triple(p + 1);
        let s = s_q(&v_vector(profile, p + 1), (c.d - next.d) as u64);
        checks.push(ConditionCheck {
            p,
            carried: Some(s.clone()),
            lhs: s + c.value,
            rhs: corner_bound(c),
        });
    }
    ConditionReport { checks }
}

/// The counts `K_p`: the witness ideal's degree-`j_p` component inside
/// `K[x_1, ..., x_{i_p+1}]` is `U(i_p+1, K_p, j_p)`. `K_k = b_k` and
/// `K_p = S_{j_p - j_{p+1}}(K_{p+1}^<i_{p+1}, t-1-i_{p+1}>, t <= i_p+1) + b_p`.
fn sharp_checks(profile: &ExtremalProfile) -> (ConditionReport, Vec<BigUint>) {
    let k = profile.k();
    let last = profile.triple(k);
    let mut counts = vec![BigUint::from(0u32); k + 1];
    counts[k] = BigUint::from(last.value);
    let mut checks = vec![ConditionCheck {
        p: k,
        carried: None,
        lhs: counts[k].clone(),
        rhs: corner_bound(last),
    }];
    for p in (1..k).rev() {
        let c = profile.triple(p);
        let next = profile.triple(p + 1);
        let w = shifted_vector(&counts[p + 1], next.i, c.i + 1);
        let s = s_q(&w, (c.d - next.d) as u64);
        counts[p] = &s + c.value;
        checks.push(ConditionCheck {
            p,
            carried: Some(s),
            lhs: counts[p].clone(),
            rhs: corner_bound(c),
        });
    }
    (ConditionReport { checks }, counts)
}

/// The same inequalities with the carried term computed from the whole
/// tail `b_{p+1}, ..., b_k` instead of `b_{p+1}` alone. Agrees with
/// [`check_conditions`] for `k <= 2` and decides existence for every `k`.
pub fn check_conditions_sharp(profile: &ExtremalProfile) -> ConditionReport {
    sharp_checks(profile).0
}

/// One piece `U(ell, count, degree)` of an `(i, j)`-lex ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexPiece {
    pub ell: usize,
    pub count: u64,
    pub degree: u32,
}

/// The pieces `U(i_p + 1, K_p, j_p)` whose sum is the witness, or the first
/// failing inequality.
pub fn ij_lex_pieces(profile: &ExtremalProfile) -> Result<Vec<LexPiece>> {
    let (report, counts) = sharp_checks(profile);
    if let Some(fail) = report.first_failure() {
        return Err(Error::Infeasible(format!(
            "no ideal has extremal Betti numbers {profile}: {fail}"
        )));
    }
    (1..=profile.k())
        .rev()
        .map(|p| {
            let c = profile.triple(p);
            Ok(LexPiece {
                ell: c.i + 1,
                count: big_to_u64(&counts[p])?,
                degree: c.d,
            })
        })
        .collect()
}

/// The `(i, j)`-lex ideal with the prescribed extremal Betti numbers: a sum
/// of lexsegment ideals of `K[x_1, ..., x_{i_p+1}]` generated in degree
/// `j_p`.
pub fn construct_ij_lex(profile: &ExtremalProfile) -> Result<MonomialIdeal> {
    let n = profile.n();
    let mut ideal = MonomialIdeal::zero(n);
    for piece in ij_lex_pieces(profile)? {
        ideal = ideal.sum(&u_ideal(piece.ell, piece.count, piece.degree, n)?)?;
    }
    Ok(ideal)
}

/// Whether the extremal corners of `I` are exactly the profile. Stable
/// ideals use the Eliahou-Kervaire table, others the homology oracle.
pub fn verify_profile(ideal: &MonomialIdeal, profile: &ExtremalProfile) -> Result<bool> {
    if ideal.n() != profile.n() {
        return Ok(false);
    }
    let table = if ideal.is_stable() {
        ek_betti(ideal)?
    } else {
        oracle_betti(ideal)?
    };
    Ok(extremal_corners(&table) == profile.triples())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::extremal_from_stable;
    use crate::macaulay::to_big;

    fn prof(s: &str, n: usize) -> ExtremalProfile {
        ExtremalProfile::parse(s, n).unwrap()
    }

    #[test]
    fn parsing_and_validation() {
        let p = prof("3,2,2; 2,4,2", 4);
        assert_eq!(p.triples(), &[Corner::new(2, 4, 2), Corner::new(3, 2, 2)]);
        assert_eq!(p.to_string(), "2,4,2;3,2,2");
        assert!(matches!(
            ExtremalProfile::parse("2,0,1", 4),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            ExtremalProfile::parse("4,2,1", 4),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            ExtremalProfile::parse("0,2,1", 4),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            ExtremalProfile::parse("1,2,1;2,3,1", 4),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            ExtremalProfile::parse("1,2,0", 4),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            ExtremalProfile::parse("1,2", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            ExtremalProfile::parse("1,x,2", 4),
            Err(Error::Parse(_))
        ));
        assert!(ExtremalProfile::parse("", 4).is_err());
    }

    #[test]
    fn v_vectors() {
        assert_eq!(v_vector(&prof("2,4,1;3,2,2", 4), 2), to_big(&[1, 2, 2]));
        assert_eq!(v_vector(&prof("2,4,1;3,2,1", 4), 2), to_big(&[1, 1, 1]));
        assert_eq!(v_vector(&prof("1,5,1;2,3,1", 3), 2), to_big(&[1, 1]));
    }

    #[test]
    fn worked_example_conditions() {
        let r = check_conditions(&prof("2,4,4;3,2,1", 4));
        assert!(r.passes());
        assert_eq!(r.checks[0].rhs, BigUint::from(4u32));
        assert_eq!(r.checks[1].carried, Some(BigUint::from(6u32)));
        assert_eq!(r.checks[1].rhs, BigUint::from(10u32));
        assert!(!check_conditions(&prof("2,4,5;3,2,1", 4)).passes());
        let r = check_conditions(&prof("2,4,1;3,2,2", 4));
        assert!(r.passes());
        assert_eq!(r.checks[1].lhs, BigUint::from(10u32));
        assert!(!check_conditions(&prof("2,4,2;3,2,2", 4)).passes());
        // a single corner at its bound binom(4, 2) = 6
        assert!(check_conditions(&prof("2,3,6", 4)).passes());
        assert!(!check_conditions(&prof("2,3,7", 4)).passes());
    }

    #[test]
    fn sharp_differs_only_for_long_profiles() {
        let p = prof("1,4,1;2,3,3;3,2,1", 4);
        assert!(check_conditions(&p).passes());
        let sharp = check_conditions_sharp(&p);
        assert!(!sharp.passes());
        assert_eq!(sharp.first_failure().unwrap().p, 1);
        for s in ["2,4,4;3,2,1", "2,4,2;3,2,2", "1,3,2"] {
            let p = prof(s, 4);
            assert_eq!(
                check_conditions(&p).passes(),
                check_conditions_sharp(&p).passes()
            );
        }
    }

    #[test]
    fn constructions() {
        let base = construct_ij_lex(&prof("3,2,2", 4)).unwrap();
        assert_eq!(base, u_ideal(4, 2, 2, 4).unwrap());
        assert_eq!(
            extremal_from_stable(&base).unwrap(),
            vec![Corner::new(3, 2, 2)]
        );

        let p = prof("2,4,1;3,2,1", 4);
        let i = construct_ij_lex(&p).unwrap();
        let low = u_ideal(4, 1, 2, 4).unwrap();
        assert_eq!(low.gens().len(), 4);
        let new: Vec<String> = i
            .gens()
            .iter()
            .filter(|g| g.degree() == 4 && g.max_index() == 3)
            .map(|g| g.to_string())
            .collect();
        assert_eq!(new, vec!["x_2^3x_3"]);
        assert!(verify_profile(&i, &p).unwrap());

        let two = construct_ij_lex(&prof("1,2,2", 2)).unwrap();
        assert_eq!(two, MonomialIdeal::maximal_power(2, 2).unwrap());
        assert!(matches!(
            construct_ij_lex(&prof("2,4,5;3,2,1", 4)),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn verify_on_twin_ideal() {
        let i = MonomialIdeal::from_exponents(
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
        .unwrap();
        assert!(verify_profile(&i, &prof("2,5,3", 3)).unwrap());
        assert!(!verify_profile(&i, &prof("2,4,1", 3)).unwrap());
    }
}
