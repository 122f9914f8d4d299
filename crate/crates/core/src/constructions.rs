//! Explicit ideal constructions and the realizability checks for matrices
//! of generators.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ideal::{GeneratorMatrix, MVector, MonomialIdeal};
use crate::macaulay::{binomial_u64, is_o_sequence, macaulay_rep};
use crate::monomial::{
    count_with_max_index, enumerate_degree, kth_biggest_with_max_index, with_max_index, Monomial,
};

/// A piecewise lexsegment ideal together with its strong-stability verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLex {
    pub ideal: MonomialIdeal,
    pub strongly_stable: bool,
}

/// The ideal of type `(d, m)`: for each `i` the biggest `m_i` degree-`d`
/// monomials with max-index `i`.
pub fn piecewise_lex(d: u32, m: &MVector) -> Result<PiecewiseLex> {
    let n = m.len();
    if n == 0 {
        return Err(Error::Input("need at least one variable".into()));
    }
    if d == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    let mut gens = Vec::new();
    for i in 1..=n {
        let want = m.get(i);
        let avail = count_with_max_index(i, d);
        if want > avail {
            return Err(Error::Domain(format!(
                "m_{i} = {want} exceeds the {avail} degree-{d} monomials with max-index {i}"
            )));
        }
        if want > 0 {
            gens.extend(with_max_index(i, d, n)?.into_iter().take(want as usize));
        }
    }
    let ideal = if gens.is_empty() {
        MonomialIdeal::zero(n)
    } else {
        MonomialIdeal::new(n, gens)?
    };
    let strongly_stable = ideal.is_strongly_stable();
    Ok(PiecewiseLex {
        ideal,
        strongly_stable,
    })
}

/// A strongly stable ideal with prescribed m-vector, generally in mixed
/// degrees. Needs `m_1 = 1` and no nonzero entry after a zero one.
pub fn murai_ideal(m: &MVector) -> Result<MonomialIdeal> {
    let n = m.len();
    if n == 0 || m.get(1) != 1 {
        return Err(Error::Infeasible(
            "an m-vector of a strongly stable ideal has m_1 = 1".into(),
        ));
    }
    if let Some(i) = (1..n).find(|&i| m.get(i) == 0 && m.get(i + 1) != 0) {
        return Err(Error::Infeasible(format!(
            "m_{i} = 0 but m_{} = {}; nonzero entries must form a prefix",
            i + 1,
            m.get(i + 1)
        )));
    }
    let k = (1..=n).rev().find(|&i| m.get(i) != 0).unwrap();
    if k == 1 {
        return MonomialIdeal::new(n, [Monomial::var(n, 1)]);
    }
    let mut gens = Vec::new();
    let mut v1 = vec![0u32; n];
    v1[0] = m.get(2) as u32;
    gens.push(Monomial::new(v1)?);
    for j in 2..=k {
        // P_j = prod_{i <= j-2} x_i^{m_{i+1} - 1}
        let mut prefix = vec![0u32; n];
        for i in 1..j - 1 {
            prefix[i - 1] = m.get(i + 1) as u32 - 1;
        }
        let mj = m.get(j) as u32;
        let tail = if j < k { m.get(j + 1) as u32 } else { 1 };
        for t in 0..mj {
            let mut e = prefix.clone();
            e[j - 2] += mj - 1 - t;
            e[j - 1] += tail + t;
            gens.push(Monomial::new(e)?);
        }
    }
    MonomialIdeal::new(n, gens)
}

/// `U(ell, k, d)`: the degree-`d` monomials of `K[x_1, ..., x_ell]` that are
/// at least `u(ell, k, d)`, as an ideal of `K[x_1, ..., x_n]`.
pub fn u_ideal(ell: usize, k: u64, d: u32, n: usize) -> Result<MonomialIdeal> {
    let u = kth_biggest_with_max_index(ell, k, d, n)?;
    let gens: Vec<Monomial> = enumerate_degree(n, d)?
        .into_iter()
        .filter(|v| v.max_index() <= ell && *v >= u)
        .collect();
    MonomialIdeal::new(n, gens)
}

fn check_mu(n: usize, d: u32, mu: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    let total = binomial_u64(n as i64 + d as i64 - 1, d as i64);
    if mu == 0 || mu > total {
        return Err(Error::Domain(format!(
            "mu = {mu} must lie in 1..=binom(n+d-1, d)={total}"
        )));
    }
    Ok(total)
}

/// The lexsegment ideal spanned by the `mu` biggest degree-`d` monomials.
pub fn lexsegment_ideal(n: usize, d: u32, mu: u64) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::Input("need at least one variable".into()));
    }
    check_mu(n, d, mu)?;
    let mut all = enumerate_degree(n, d)?;
    all.truncate(mu as usize);
    MonomialIdeal::new(n, all)
}

/// One block `prefix * [x_t, ..., x_n]_r` of a natural decomposition. When
/// `t > n` the bracket is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub prefix: Monomial,
    pub t: usize,
    pub r: u32,
}

impl Block {
    /// `binom(n - t + r, r)`, or 0 for an empty bracket.
    pub fn size(&self) -> u64 {
        let n = self.prefix.n();
        if self.t > n {
            return 0;
        }
        binomial_u64((n - self.t) as i64 + self.r as i64, self.r as i64)
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        let n = self.prefix.n();
        if self.t > n {
            return Vec::new();
        }
        let vars = n - self.t + 1;
        enumerate_degree(vars, self.r)
            .expect("degree within cap")
            .into_iter()
            .map(|w| {
                let mut e = vec![0u32; self.t - 1];
                e.extend_from_slice(w.exps());
                self.prefix.mul(&Monomial::from_exps_unchecked(e))
            })
            .collect()
    }
}

/// The `d` blocks whose disjoint union is the set of degree-`d` monomials
/// strictly smaller than `u`.
pub fn natural_decomposition(u: &Monomial) -> Result<Vec<Block>> {
    if u.is_one() {
        return Err(Error::Domain(
            "the monomial 1 has no natural decomposition".into(),
        ));
    }
    let n = u.n();
    // u = x_{j(1)} ... x_{j(d)} with j(1) <= ... <= j(d)
    let mut js = Vec::new();
    for i in 1..=n {
        js.extend(std::iter::repeat_n(i, u.exp(i) as usize));
    }
    let d = js.len() as u32;
    let mut prefix = Monomial::one(n);
    let mut blocks = Vec::with_capacity(js.len());
    for (p, &j) in js.iter().enumerate() {
        blocks.push(Block {
            prefix: prefix.clone(),
            t: j + 1,
            r: d - p as u32,
        });
        prefix = prefix.mul_var(j);
    }
    Ok(blocks)
}

/// m-vector of `lexsegment_ideal(n, d, mu)`, evaluated from the Macaulay
/// representation of `binom(n+d-1, d) - mu` without building the ideal.
pub fn dlex_mvector(n: usize, d: u32, mu: u64) -> Result<MVector> {
    if n == 0 {
        return Err(Error::Input("need at least one variable".into()));
    }
    let total = check_mu(n, d, mu)?;
    let rep = macaulay_rep(&BigUint::from(total - mu), d as usize);
    let m = (1..=n)
        .map(|i| {
            let full = binomial_u64(i as i64 + d as i64 - 2, d as i64 - 1);
            let below: u64 = (1..=d as usize)
                .map(|j| binomial_u64(rep.k(j) as i64 - n as i64 + i as i64 - 1, j as i64 - 1))
                .sum();
            full - below
        })
        .collect();
    Ok(MVector(m))
}

/// Whether `m` is the m-vector of a lexsegment ideal generated in degree
/// `d`. The zero vector is not.
pub fn is_dlex_sequence(m: &MVector, d: u32) -> bool {
    let mu: u64 = m.iter().sum();
    match dlex_mvector(m.len(), d, mu) {
        Ok(v) => v == *m,
        Err(_) => false,
    }
}

/// A reason a generator matrix fails one of the necessary conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixViolation {
    /// The nonzero row `j` is not an O-sequence.
    NotOSequence { j: u32, row: MVector },
    /// `mu_{2,j} > j`.
    SecondEntryTooLarge { j: u32, value: u64 },
    /// The nonzero row `j` is not a `j`-lex sequence.
    NotLexSequence { j: u32, row: MVector },
    /// `mu_{i,j} < sum_{q <= i} mu_{q,j-1}`.
    BelowCumulative {
        i: usize,
        j: u32,
        value: u64,
        bound: u64,
    },
}

impl fmt::Display for MatrixViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixViolation::NotOSequence { j, row } => {
                write!(f, "row {j} = {row} is not an O-sequence")
            }
            MatrixViolation::SecondEntryTooLarge { j, value } => {
                write!(f, "row {j}: mu_2 = {value} exceeds the degree {j}")
            }
            MatrixViolation::NotLexSequence { j, row } => {
                write!(f, "row {j} = {row} is not a {j}-lex sequence")
            }
            MatrixViolation::BelowCumulative { i, j, value, bound } => write!(
                f,
                "mu_{{{i},{j}}} = {value} < {bound} = sum of mu_{{q,{}}} for q <= {i}",
                j - 1
            ),
        }
    }
}

/// Result of a matrix check; passes iff there are no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatrixCheck {
    pub violations: Vec<MatrixViolation>,
}

impl MatrixCheck {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

fn cumulative_violations(m: &GeneratorMatrix, out: &mut Vec<MatrixViolation>) {
    let Some(last) = m.last_degree() else {
        return;
    };
    for j in m.jmin()..=last {
        let bound = m.row(j - 1).cumulative();
        let row = m.row(j);
        for i in 1..=m.n() {
            if row.get(i) < bound.get(i) {
                out.push(MatrixViolation::BelowCumulative {
                    i,
                    j,
                    value: row.get(i),
                    bound: bound.get(i),
                });
            }
        }
    }
}

fn nonzero_rows(m: &GeneratorMatrix) -> impl Iterator<Item = (u32, &MVector)> {
    m.rows()
        .iter()
        .enumerate()
        .map(move |(r, row)| (m.jmin() + r as u32, row))
        .filter(|(_, row)| !row.is_zero())
}

/// Necessary conditions for being the matrix of generators of a strongly
/// stable ideal: every nonzero row is an O-sequence with `mu_{2,j} <= j`,
/// and consecutive rows satisfy the cumulative inequality.
pub fn check_matrix_necessary(m: &GeneratorMatrix) -> MatrixCheck {
    let mut violations = Vec::new();
    for (j, row) in nonzero_rows(m) {
        if !is_o_sequence(row) {
            violations.push(MatrixViolation::NotOSequence {
                j,
                row: row.clone(),
            });
        }
        if row.len() >= 2 && row.get(2) > j as u64 {
            violations.push(MatrixViolation::SecondEntryTooLarge {
                j,
                value: row.get(2),
            });
        }
    }
    cumulative_violations(m, &mut violations);
    MatrixCheck { violations }
}

/// The characterization of matrices of generators of lexsegment ideals:
/// nonzero rows are lex sequences of their degree, plus the cumulative
/// inequality.
pub fn check_matrix_lex(m: &GeneratorMatrix) -> MatrixCheck {
    let mut violations = Vec::new();
    for (j, row) in nonzero_rows(m) {
        if !is_dlex_sequence(row, j) {
            violations.push(MatrixViolation::NotLexSequence {
                j,
                row: row.clone(),
            });
        }
    }
    cumulative_violations(m, &mut violations);
    MatrixCheck { violations }
}

/// Where the greedy realization stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyFailure {
    /// Fewer than `wanted` monomials of degree `j` and max-index `i` lie
    /// outside the ideal built so far.
    Exhausted {
        j: u32,
        i: usize,
        wanted: u64,
        available: u64,
    },
    /// After degree `j` the ideal is no longer strongly stable; `i` is the
    /// smallest max-index of an offending generator.
    NotStronglyStable { j: u32, i: usize, witness: Monomial },
}

impl fmt::Display for GreedyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GreedyFailure::Exhausted { j, i, wanted, available } => write!(
                f,
                "degree {j}: need {wanted} new generators with max-index {i}, only {available} monomials left"
            ),
            GreedyFailure::NotStronglyStable { j, i, witness } => write!(
                f,
                "degree {j}: generator {witness} (max-index {i}) breaks strong stability"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Realized(MonomialIdeal),
    Failed(GreedyFailure),
}

fn first_unstable(ideal: &MonomialIdeal) -> Option<&Monomial> {
    ideal
        .gens()
        .iter()
        .filter(|u| {
            (2..=ideal.n()).any(|j| u.exchange(j, j - 1).is_some_and(|v| !ideal.contains(&v)))
        })
        .min_by_key(|u| u.max_index())
}

/// Degree-by-degree greedy realization: the first nonzero row is realized
/// by a piecewise lexsegment ideal, and each later degree adds, for every
/// max-index `i`, the biggest `m_{i,j}` monomials not yet in the ideal.
///
/// Failure does not prove that no ideal exists once `n >= 4`. For `n <= 3`
/// every matrix passing [`check_matrix_necessary`] is realized.
pub fn realize_matrix_greedy(m: &GeneratorMatrix) -> Result<GreedyOutcome> {
    let check = check_matrix_necessary(m);
    if !check.passes() {
        let list: Vec<String> = check.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Infeasible(format!(
            "necessary conditions fail: {}",
            list.join("; ")
        )));
    }
    let n = m.n();
    let Some((j0, first)) = nonzero_rows(m).next() else {
        return Ok(GreedyOutcome::Realized(MonomialIdeal::zero(n)));
    };
    let start = piecewise_lex(j0, first)?;
    if let Some(w) = first_unstable(&start.ideal) {
        return Ok(GreedyOutcome::Failed(GreedyFailure::NotStronglyStable {
            j: j0,
            i: w.max_index(),
            witness: w.clone(),
        }));
    }
    let mut ideal = start.ideal;
    let last = m.last_degree().unwrap();
    for j in j0 + 1..=last {
        let bound = m.row(j - 1).cumulative();
        let row = m.row(j);
        let mut fresh = Vec::new();
        for i in 1..=n {
            let wanted = row.get(i) - bound.get(i);
            if wanted == 0 {
                continue;
            }
            let outside: Vec<Monomial> = with_max_index(i, j, n)?
                .into_iter()
                .filter(|u| !ideal.contains(u))
                .collect();
            if (outside.len() as u64) < wanted {
                return Ok(GreedyOutcome::Failed(GreedyFailure::Exhausted {
                    j,
                    i,
                    wanted,
                    available: outside.len() as u64,
                }));
            }
            fresh.extend(outside.into_iter().take(wanted as usize));
        }
        if fresh.is_empty() {
            continue;
        }
        ideal = ideal.sum(&MonomialIdeal::new(n, fresh)?)?;
        if let Some(w) = first_unstable(&ideal) {
            return Ok(GreedyOutcome::Failed(GreedyFailure::NotStronglyStable {
                j,
                i: w.max_index(),
                witness: w.clone(),
            }));
        }
    }
    debug_assert_eq!(ideal.generator_matrix().ok().as_ref(), Some(m));
    Ok(GreedyOutcome::Realized(ideal))
}

/// `|L_{<u}|` summed over the blocks of the natural decomposition.
pub fn count_below(u: &Monomial) -> Result<u64> {
    Ok(natural_decomposition(u)?.iter().map(Block::size).sum())
}

pub(crate) fn big_to_u64(x: &BigUint) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::Domain(format!("{x} is too large for an explicit construction")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::macaulay_shift;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    fn mv(v: &[u64]) -> MVector {
        MVector(v.to_vec())
    }

    #[test]
    fn piecewise_lex_examples() {
        let p = piecewise_lex(5, &mv(&[1, 3, 2, 2])).unwrap();
        let expected = ideal(
            4,
            &[
                &[5, 0, 0, 0],
                &[4, 1, 0, 0],
                &[3, 2, 0, 0],
                &[2, 3, 0, 0],
                &[4, 0, 1, 0],
                &[3, 1, 1, 0],
                &[4, 0, 0, 1],
                &[3, 1, 0, 1],
            ],
        );
        assert_eq!(p.ideal, expected);
        assert!(p.strongly_stable);
        let p = piecewise_lex(3, &mv(&[1, 0, 0])).unwrap();
        assert_eq!(p.ideal, ideal(3, &[&[3, 0, 0]]));
        let p = piecewise_lex(2, &mv(&[1, 2, 3])).unwrap();
        assert_eq!(p.ideal, MonomialIdeal::maximal_power(3, 2).unwrap());
        assert!(matches!(
            piecewise_lex(2, &mv(&[1, 3])),
            Err(Error::Domain(_))
        ));
        assert!(!piecewise_lex(2, &mv(&[1, 0, 1])).unwrap().strongly_stable);
    }

    #[test]
    fn murai_examples() {
        assert_eq!(
            murai_ideal(&mv(&[1, 2])).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        let i = murai_ideal(&mv(&[1, 2, 2])).unwrap();
        assert_eq!(
            i,
            ideal(
                3,
                &[&[2, 0, 0], &[1, 2, 0], &[0, 3, 0], &[1, 1, 1], &[1, 0, 2]]
            )
        );
        assert!(i.is_strongly_stable());
        assert_eq!(i.m_vector(), mv(&[1, 2, 2]));
        assert_eq!(
            murai_ideal(&mv(&[1, 0, 0])).unwrap(),
            ideal(3, &[&[1, 0, 0]])
        );
        assert!(matches!(
            murai_ideal(&mv(&[1, 0, 1])),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            murai_ideal(&mv(&[2, 1])),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn u_ideal_examples() {
        let u = u_ideal(4, 2, 2, 4).unwrap();
        assert_eq!(
            u,
            ideal(
                4,
                &[
                    &[2, 0, 0, 0],
                    &[1, 1, 0, 0],
                    &[1, 0, 1, 0],
                    &[1, 0, 0, 1],
                    &[0, 2, 0, 0],
                    &[0, 1, 1, 0],
                    &[0, 1, 0, 1]
                ]
            )
        );
        assert_eq!(u.m_vector(), mv(&[1, 2, 2, 2]));
        for i in 1..=4 {
            let closed = macaulay_shift(&BigUint::from(2u32), 3, i as i64 - 4);
            assert_eq!(BigUint::from(u.m_vector().get(i)), closed);
        }
        assert_eq!(u_ideal(1, 1, 3, 2).unwrap(), ideal(2, &[&[3, 0]]));
        let big = u_ideal(3, 7, 4, 4).unwrap();
        assert_eq!(big.gens().len(), 12);
        assert!(big
            .gens()
            .iter()
            .all(|g| g.max_index() <= 3 && *g >= m(&[0, 3, 1, 0])));
        assert!(matches!(u_ideal(2, 5, 3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn lexsegment_examples() {
        assert_eq!(
            lexsegment_ideal(3, 2, 4).unwrap(),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]])
        );
        assert_eq!(
            lexsegment_ideal(3, 2, 6).unwrap(),
            MonomialIdeal::maximal_power(3, 2).unwrap()
        );
        assert_eq!(lexsegment_ideal(2, 3, 1).unwrap(), ideal(2, &[&[3, 0]]));
        assert!(lexsegment_ideal(2, 3, 5).is_err());
        assert!(lexsegment_ideal(2, 3, 0).is_err());
    }

    #[test]
    fn natural_decomposition_examples() {
        let blocks = natural_decomposition(&m(&[0, 2, 0])).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].monomials(), vec![m(&[0, 0, 2])]);
        assert_eq!(blocks[1].monomials(), vec![m(&[0, 1, 1])]);
        let low = natural_decomposition(&m(&[0, 0, 3])).unwrap();
        assert!(low
            .iter()
            .all(|b| b.size() == 0 && b.monomials().is_empty()));
        assert!(natural_decomposition(&Monomial::one(2)).is_err());
        for u in enumerate_degree(3, 3).unwrap() {
            let below = enumerate_degree(3, 3)
                .unwrap()
                .into_iter()
                .filter(|v| *v < u)
                .count();
            assert_eq!(count_below(&u).unwrap(), below as u64);
        }
    }

    #[test]
    fn dlex_examples() {
        assert_eq!(dlex_mvector(3, 2, 4).unwrap(), mv(&[1, 2, 1]));
        assert_eq!(dlex_mvector(3, 3, 10).unwrap(), mv(&[1, 3, 6]));
        assert_eq!(dlex_mvector(4, 2, 1).unwrap(), mv(&[1, 0, 0, 0]));
        // the top seven degree-2 monomials in four variables are U(4,2,2)
        assert_eq!(dlex_mvector(4, 2, 7).unwrap(), mv(&[1, 2, 2, 2]));
        assert!(is_dlex_sequence(&mv(&[1, 2, 1]), 2));
        assert!(is_dlex_sequence(&mv(&[1, 0, 0]), 1));
        assert!(is_dlex_sequence(&mv(&[1, 2, 2, 2]), 2));
        assert!(!is_dlex_sequence(&mv(&[1, 2, 0]), 2));
        assert!(!is_dlex_sequence(&mv(&[0, 0, 0]), 2));
    }

    #[test]
    fn matrix_checks() {
        let first = GeneratorMatrix::new(4, 2, vec![mv(&[1, 2, 0, 0]), mv(&[1, 3, 3, 4])]).unwrap();
        let second =
            GeneratorMatrix::new(4, 5, vec![mv(&[1, 3, 2, 2]), mv(&[1, 4, 6, 9])]).unwrap();
        assert!(check_matrix_necessary(&first).passes());
        assert!(check_matrix_necessary(&second).passes());
        let bad = GeneratorMatrix::new(4, 5, vec![mv(&[1, 3, 2, 2]), mv(&[1, 3, 6, 9])]).unwrap();
        let c = check_matrix_necessary(&bad);
        assert_eq!(
            c.violations,
            vec![MatrixViolation::BelowCumulative {
                i: 2,
                j: 6,
                value: 3,
                bound: 4
            }]
        );
        let lex = lexsegment_ideal(3, 2, 4)
            .unwrap()
            .generator_matrix()
            .unwrap();
        assert!(check_matrix_lex(&lex).passes());
        let not_lex = GeneratorMatrix::new(3, 2, vec![mv(&[1, 2, 0])]).unwrap();
        assert!(!check_matrix_lex(&not_lex).passes());
        let zeros = GeneratorMatrix::new(3, 1, vec![mv(&[0, 0, 0]), mv(&[1, 1, 0])]).unwrap();
        assert!(check_matrix_lex(&zeros).passes());
    }

    #[test]
    fn greedy_examples() {
        let mat = GeneratorMatrix::new(3, 2, vec![mv(&[1, 2, 2]), mv(&[1, 3, 6])]).unwrap();
        let GreedyOutcome::Realized(i) = realize_matrix_greedy(&mat).unwrap() else {
            panic!("expected a realization");
        };
        assert_eq!(i.generator_matrix().unwrap(), mat);
        let new: Vec<_> = i
            .gens()
            .iter()
            .filter(|g| g.degree() == 3)
            .cloned()
            .collect();
        assert_eq!(new, vec![m(&[0, 0, 3])]);
        let second =
            GeneratorMatrix::new(4, 5, vec![mv(&[1, 3, 2, 2]), mv(&[1, 4, 6, 9])]).unwrap();
        assert!(matches!(
            realize_matrix_greedy(&second).unwrap(),
            GreedyOutcome::Failed(_)
        ));
        let single = GeneratorMatrix::new(4, 5, vec![mv(&[1, 3, 2, 2])]).unwrap();
        let GreedyOutcome::Realized(i) = realize_matrix_greedy(&single).unwrap() else {
            panic!("single rows are realized");
        };
        assert_eq!(i, piecewise_lex(5, &mv(&[1, 3, 2, 2])).unwrap().ideal);
        let bad = GeneratorMatrix::new(4, 5, vec![mv(&[1, 3, 2, 2]), mv(&[1, 3, 6, 9])]).unwrap();
        assert!(matches!(
            realize_matrix_greedy(&bad),
            Err(Error::Infeasible(_))
        ));
    }
}
