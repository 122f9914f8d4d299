#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use extbetti_core::enumeration::{enumerate_strongly_stable, DEFAULT_SEARCH_BUDGET};
use extbetti_core::monomial::enumerate_degree;
use extbetti_core::{Monomial, MonomialIdeal};

/// Borel closure of a few random monomials of degrees `1..=dmax`, biased
/// towards the higher degrees so that the ideals are not all `(x_1)`.
pub fn random_strongly_stable(rng: &mut ChaCha8Rng, n: usize, dmax: u32) -> MonomialIdeal {
    let pool: Vec<Vec<Monomial>> = (1..=dmax)
        .map(|d| enumerate_degree(n, d).unwrap())
        .collect();
    let count = rng.gen_range(1..=4);
    let seeds: Vec<Monomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range((dmax.saturating_sub(2)).max(1)..=dmax);
            let layer = &pool[(d - 1) as usize];
            // prefer the bottom of the order so closures stay small
            let lo = layer.len() / 3;
            layer[rng.gen_range(lo..layer.len())].clone()
        })
        .collect();
    MonomialIdeal::borel_closure(n, seeds).unwrap()
}

pub fn random_corpus(seed: u64, count: usize, n: usize, dmax: u32) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_strongly_stable(&mut rng, n, dmax))
        .collect()
}

/// Every strongly stable ideal with `n <= 3` and generator degrees `<= 4`.
pub fn exhaustive_corpus() -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.extend(enumerate_strongly_stable(n, 4, DEFAULT_SEARCH_BUDGET).unwrap());
    }
    out
}

/// Ideals generated in a single degree: the degree-`d` components of the
/// random corpus.
pub fn one_degree_corpus(seed: u64, count: usize, n: usize, dmax: u32) -> Vec<MonomialIdeal> {
    random_corpus(seed, count, n, dmax)
        .into_iter()
        .map(|i| {
            let d = i.max_degree().unwrap();
            i.component_ideal(d)
        })
        .collect()
}
