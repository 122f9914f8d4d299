//! Exhaustive generation of strongly stable ideals and bounded searches
//! over them.
//!
//! An ideal is built degree by degree. In degree `d` its component `B_d`
//! must contain `m B_{d-1}` and be closed under the Borel moves; the new
//! minimal generators are exactly `B_d \ m B_{d-1}`. Scanning the degree-`d`
//! monomials in decreasing order and admitting a monomial only when all of
//! its immediate Borel predecessors are in lists every such `B_d` once.

use std::collections::HashMap;

use crate::betti::Corner;
use crate::error::{Error, Result};
use crate::extremal::ExtremalProfile;
use crate::ideal::{GeneratorMatrix, MCounts, MonomialIdeal};
use crate::monomial::{enumerate_degree, Monomial};

/// Default cap on visited search nodes.
pub const DEFAULT_SEARCH_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// The degree-`d` monomials with their Borel predecessors and the maps
/// from the previous degree given by multiplication with a variable.
struct Layer {
    mons: Vec<Monomial>,
    maxidx: Vec<usize>,
    preds: Vec<Vec<usize>>,
    /// `up[w]` lists `w * x_i` for every monomial `w` of degree `d - 1`.
    up: Vec<Vec<usize>>,
}

fn build_layers(n: usize, dmax: u32) -> Result<Vec<Layer>> {
    let mut layers: Vec<Layer> = Vec::with_capacity(dmax as usize + 1);
    let mut prev: Vec<Monomial> = vec![Monomial::one(n)];
    layers.push(Layer {
        mons: prev.clone(),
        maxidx: vec![0],
        preds: vec![Vec::new()],
        up: Vec::new(),
    });
    for d in 1..=dmax {
        let mons = enumerate_degree(n, d)?;
        let index: HashMap<&Monomial, usize> =
            mons.iter().enumerate().map(|(k, u)| (u, k)).collect();
        let preds = mons
            .iter()
            .map(|u| {
                (2..=n)
                    .filter_map(|j| u.exchange(j, j - 1))
                    .map(|v| index[&v])
                    .collect()
            })
            .collect();
        let up = prev
            .iter()
            .map(|w| (1..=n).map(|i| index[&w.mul_var(i)]).collect())
            .collect();
        let maxidx = mons.iter().map(Monomial::max_index).collect();
        layers.push(Layer {
            mons: mons.clone(),
            maxidx,
            preds,
            up,
        });
        prev = mons;
    }
    Ok(layers)
}

/// Inclusive bounds `(lo, hi)` on the number of new generators with a
/// given max-index in a given degree.
pub type Bounds<'a> = &'a dyn Fn(usize, u32) -> (u64, u64);

struct Engine<'a> {
    n: usize,
    dmax: u32,
    layers: Vec<Layer>,
    bounds: Bounds<'a>,
    budget: u64,
    nodes: u64,
    emitted: u64,
}

enum Flow {
    Continue,
    Stop,
}

impl<'a> Engine<'a> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "search budget of {} nodes exhausted after {} ideals",
                self.budget, self.emitted
            )));
        }
        Ok(())
    }

    fn degree(
        &mut self,
        d: u32,
        prev: &BitSet,
        gens: &mut Vec<Monomial>,
        emit: &mut dyn FnMut(&[Monomial]) -> Flow,
    ) -> Result<Flow> {
        if d > self.dmax {
            if gens.is_empty() {
                return Ok(Flow::Continue);
            }
            self.emitted += 1;
            return Ok(emit(gens));
        }
        let layer = &self.layers[d as usize];
        let len = layer.mons.len();
        let mut forced = BitSet::new(len);
        for w in prev.ones() {
            for &t in &layer.up[w] {
                forced.set(t);
            }
        }
        let n = self.n;
        let mut lo = vec![0u64; n + 1];
        let mut hi = vec![0u64; n + 1];
        for k in 1..=n {
            (lo[k], hi[k]) = (self.bounds)(k, d);
            if lo[k] > hi[k] {
                return Ok(Flow::Continue);
            }
        }
        // suffix[pos][k]: free monomials of max-index k at positions >= pos
        let mut suffix = vec![vec![0u64; n + 1]; len + 1];
        for pos in (0..len).rev() {
            suffix[pos] = suffix[pos + 1].clone();
            if !forced.get(pos) {
                suffix[pos][layer.maxidx[pos]] += 1;
            }
        }
        if (1..=n).any(|k| suffix[0][k] < lo[k]) {
            return Ok(Flow::Continue);
        }
        let mut state = ScanState {
            set: forced.clone(),
            forced,
            counts: vec![0; n + 1],
            lo,
            hi,
            suffix,
        };
        self.scan(d, 0, &mut state, gens, emit)
    }

    fn scan(
        &mut self,
        d: u32,
        pos: usize,
        st: &mut ScanState,
        gens: &mut Vec<Monomial>,
        emit: &mut dyn FnMut(&[Monomial]) -> Flow,
    ) -> Result<Flow> {
        self.tick()?;
        let n = self.n;
        if (1..=n).any(|k| st.counts[k] + st.suffix[pos][k] < st.lo[k]) {
            return Ok(Flow::Continue);
        }
        let len = self.layers[d as usize].mons.len();
        // skip forced positions
        let mut pos = pos;
        while pos < len && st.forced.get(pos) {
            pos += 1;
        }
        if pos == len {
            let set = st.set.clone();
            return self.degree(d + 1, &set, gens, emit);
        }
        let layer = &self.layers[d as usize];
        let k = layer.maxidx[pos];
        let admissible = st.counts[k] < st.hi[k] && layer.preds[pos].iter().all(|&p| st.set.get(p));
        if admissible {
            let mono = layer.mons[pos].clone();
            st.set.set(pos);
            st.counts[k] += 1;
            gens.push(mono);
            let flow = self.scan(d, pos + 1, st, gens, emit)?;
            gens.pop();
            st.counts[k] -= 1;
            st.set.clear(pos);
            if let Flow::Stop = flow {
                return Ok(Flow::Stop);
            }
        }
        self.scan(d, pos + 1, st, gens, emit)
    }
}

struct ScanState {
    set: BitSet,
    forced: BitSet,
    counts: Vec<u64>,
    lo: Vec<u64>,
    hi: Vec<u64>,
    suffix: Vec<Vec<u64>>,
}

/// Runs `visit` on the generator list of every nonzero strongly stable
/// ideal with generators in degrees `<= dmax` whose new-generator counts
/// respect `bounds`, in depth-first order. `visit` returns `true` to stop.
/// Returns the number of ideals visited.
pub fn for_each_strongly_stable(
    n: usize,
    dmax: u32,
    bounds: Bounds<'_>,
    budget: u64,
    visit: &mut dyn FnMut(&[Monomial]) -> bool,
) -> Result<u64> {
    if n == 0 {
        return Err(Error::Input("need at least one variable".into()));
    }
    if dmax == 0 {
        return Ok(0);
    }
    let mut engine = Engine {
        n,
        dmax,
        layers: build_layers(n, dmax)?,
        bounds,
        budget,
        nodes: 0,
        emitted: 0,
    };
    let start = BitSet::new(1);
    let mut emit = |g: &[Monomial]| if visit(g) { Flow::Stop } else { Flow::Continue };
    engine.degree(1, &start, &mut Vec::new(), &mut emit)?;
    Ok(engine.emitted)
}

const UNBOUNDED: Bounds<'static> = &|_, _| (0, u64::MAX);

fn canonical_key(i: &MonomialIdeal) -> (u32, Vec<Monomial>) {
    (i.max_degree().unwrap_or(0), i.gens().to_vec())
}

/// Every nonzero strongly stable ideal of `K[x_1, ..., x_n]` with minimal
/// generators in degrees `<= dmax`, ordered by largest generator degree and
/// then lexicographically by the decreasing generator lists.
pub fn enumerate_strongly_stable(n: usize, dmax: u32, budget: u64) -> Result<Vec<MonomialIdeal>> {
    let mut out = Vec::new();
    let mut fail = None;
    for_each_strongly_stable(n, dmax, UNBOUNDED, budget, &mut |g| {
        match MonomialIdeal::new(n, g.iter().cloned()) {
            Ok(i) => out.push(i),
            Err(e) => fail = Some(e),
        }
        fail.is_some()
    })?;
    if let Some(e) = fail {
        return Err(e);
    }
    out.sort_by_cached_key(canonical_key);
    Ok(out)
}

/// Number of ideals [`enumerate_strongly_stable`] would return.
pub fn count_strongly_stable(n: usize, dmax: u32, budget: u64) -> Result<u64> {
    for_each_strongly_stable(n, dmax, UNBOUNDED, budget, &mut |_| false)
}

/// Independent generator: filters all antichains of monomials of degrees
/// `1..=dmax` by strong stability. Only for tiny rings.
pub fn enumerate_strongly_stable_brute(n: usize, dmax: u32) -> Result<Vec<MonomialIdeal>> {
    let mut mons = Vec::new();
    for d in 1..=dmax {
        mons.extend(enumerate_degree(n, d)?);
    }
    if mons.len() > 24 {
        return Err(Error::Budget(format!(
            "{} candidate monomials is too many for the brute-force generator",
            mons.len()
        )));
    }
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << mons.len()) {
        let chosen: Vec<&Monomial> = (0..mons.len())
            .filter(|&t| mask >> t & 1 == 1)
            .map(|t| &mons[t])
            .collect();
        let antichain = chosen
            .iter()
            .all(|u| chosen.iter().all(|v| std::ptr::eq(*u, *v) || !u.divides(v)));
        if !antichain {
            continue;
        }
        let ideal = MonomialIdeal::new(n, chosen.into_iter().cloned())?;
        if ideal.is_strongly_stable() {
            out.push(ideal);
        }
    }
    out.sort_by_cached_key(canonical_key);
    Ok(out)
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MonomialIdeal),
    /// No ideal exists at all: the bounds cover every candidate.
    NoneCertified,
    /// No ideal within the degree bound; larger degrees were not explored.
    NoneWithinBounds,
}

fn search_counts(
    n: usize,
    dmax: u32,
    bounds: Bounds<'_>,
    budget: u64,
) -> Result<Option<MonomialIdeal>> {
    let mut hit = None;
    for_each_strongly_stable(n, dmax, bounds, budget, &mut |g| {
        hit = Some(g.to_vec());
        true
    })?;
    hit.map(|g| MonomialIdeal::new(n, g)).transpose()
}

/// A strongly stable ideal whose matrix of generators is `m`.
///
/// Counts of new generators are fixed degree by degree. A match found is
/// the first in search order; a miss is certified when `dmax` reaches the
/// degree of the last new generator the matrix asks for.
pub fn search_matrix(m: &GeneratorMatrix, dmax: u32, budget: u64) -> Result<SearchOutcome> {
    let counts: MCounts = match m.mu_to_m() {
        Ok(c) => c,
        Err(Error::Infeasible(_)) => return Ok(SearchOutcome::NoneCertified),
        Err(e) => return Err(e),
    };
    let Some(top) = counts.keys().map(|&(_, d)| d).max() else {
        // only the zero ideal has no generators
        return Ok(SearchOutcome::NoneCertified);
    };
    if top > dmax {
        return Ok(SearchOutcome::NoneWithinBounds);
    }
    let bounds = |k: usize, d: u32| {
        let c = counts.get(&(k, d)).copied().unwrap_or(0) as u64;
        (c, c)
    };
    Ok(match search_counts(m.n(), top, &bounds, budget)? {
        Some(i) => SearchOutcome::Found(i),
        None => SearchOutcome::NoneCertified,
    })
}

/// A strongly stable ideal whose extremal Betti numbers are exactly the
/// profile. A miss is certified once `dmax >= j_1`.
pub fn search_extremal_profile(
    profile: &ExtremalProfile,
    dmax: u32,
    budget: u64,
) -> Result<SearchOutcome> {
    let corners: Vec<Corner> = profile.triples().to_vec();
    let top = corners[0].d;
    if dmax < top {
        return Ok(SearchOutcome::NoneWithinBounds);
    }
    // m_{k,d} sits at position (k - 1, d) of the table
    let bounds = |k: usize, d: u32| {
        let i = k - 1;
        if let Some(c) = corners.iter().find(|c| c.i == i && c.d == d) {
            return (c.value, c.value);
        }
        if corners.iter().any(|c| i <= c.i && d <= c.d) {
            (0, u64::MAX)
        } else {
            (0, 0)
        }
    };
    Ok(match search_counts(profile.n(), top, &bounds, budget)? {
        Some(i) => SearchOutcome::Found(i),
        None => SearchOutcome::NoneCertified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::extremal_from_stable;
    use crate::ideal::MVector;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    #[test]
    fn two_variables_degree_two() {
        let all = enumerate_strongly_stable(2, 2, DEFAULT_SEARCH_BUDGET).unwrap();
        let mut expected = vec![
            ideal(2, &[&[1, 0]]),
            ideal(2, &[&[1, 0], &[0, 1]]),
            ideal(2, &[&[2, 0]]),
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
        ];
        expected.sort_by_cached_key(canonical_key);
        assert_eq!(all, expected);
    }

    #[test]
    fn one_variable() {
        let all = enumerate_strongly_stable(1, 5, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(
            count_strongly_stable(1, 5, DEFAULT_SEARCH_BUDGET).unwrap(),
            5
        );
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 1..=3 {
            for dmax in 1..=3 {
                if n == 3 && dmax == 3 {
                    continue; // covered by the integration tests
                }
                let fast = enumerate_strongly_stable(n, dmax, DEFAULT_SEARCH_BUDGET).unwrap();
                let slow = enumerate_strongly_stable_brute(n, dmax).unwrap();
                assert_eq!(fast, slow, "n={n} dmax={dmax}");
            }
        }
    }

    #[test]
    fn budget_errors() {
        let err = count_strongly_stable(3, 4, 10).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }

    #[test]
    fn matrix_search() {
        let first = GeneratorMatrix::new(
            4,
            2,
            vec![MVector(vec![1, 2, 0, 0]), MVector(vec![1, 3, 3, 4])],
        )
        .unwrap();
        assert_eq!(
            search_matrix(&first, 3, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::NoneCertified
        );
        assert_eq!(
            search_matrix(&first, 2, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::NoneWithinBounds
        );
        let target = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 2]]);
        let gm = target.generator_matrix().unwrap();
        match search_matrix(&gm, 3, DEFAULT_SEARCH_BUDGET).unwrap() {
            SearchOutcome::Found(i) => assert_eq!(i.generator_matrix().unwrap(), gm),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn profile_search() {
        let p = ExtremalProfile::parse("2,4,1;3,2,1", 4).unwrap();
        match search_extremal_profile(&p, 4, DEFAULT_SEARCH_BUDGET).unwrap() {
            SearchOutcome::Found(i) => {
                assert_eq!(extremal_from_stable(&i).unwrap(), p.triples());
            }
            other => panic!("{other:?}"),
        }
        let p = ExtremalProfile::parse("1,3,2", 3).unwrap();
        assert_eq!(
            search_extremal_profile(&p, 2, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::NoneWithinBounds
        );
        let bad = ExtremalProfile::parse("1,3,4", 3).unwrap();
        assert_eq!(
            search_extremal_profile(&bad, 3, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::NoneCertified
        );
    }
}
