//! Seeded random complete intersections for property tests.
//!
//! Each `a_j` is a homogeneous element of `I` whose graded-reverse-lex
//! leading term is a pure power `x_{v_j}^{D_j}` of its own variable. Pairwise
//! coprime leading terms make `a₁,…,a_c` a Gröbner basis with a regular
//! initial ideal, so the sequence is regular.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Rational;
use crate::homotopy::CompleteIntersectionData;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::quotient::monomials_of_degree;
use crate::taylor::MonomialIdeal;

/// Environment variable holding the seed for [`seeded_rng`].
pub const SEED_VAR: &str = "CITAYLOR_SEED";

const VAR_NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

/// The seed from `CITAYLOR_SEED`, or `default` when unset or unparsable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

pub fn seeded_rng(default: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env(default))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomInstanceConfig {
    pub min_vars: usize,
    pub max_vars: usize,
    pub max_generators: usize,
    pub max_codim: usize,
    pub max_generator_degree: u32,
    /// Degree of `a_j` exceeds that of its pure-power generator by at most this.
    pub max_degree_excess: u32,
    /// Extra terms added to each `a_j` besides the leading pure power.
    pub max_extra_terms: usize,
}

impl Default for RandomInstanceConfig {
    fn default() -> Self {
        RandomInstanceConfig {
            min_vars: 2,
            max_vars: 4,
            max_generators: 5,
            max_codim: 2,
            max_generator_degree: 3,
            max_degree_excess: 1,
            max_extra_terms: 2,
        }
    }
}

fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

fn random_coefficient<R: Rng>(rng: &mut R) -> Rational {
    let n = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
    Rational::from_integer(n.into())
}

pub fn random_instance<R: Rng>(
    rng: &mut R,
    cfg: &RandomInstanceConfig,
) -> CompleteIntersectionData<Rational> {
    let nvars = rng.gen_range(cfg.min_vars..=cfg.max_vars.min(VAR_NAMES.len()));
    let c = rng.gen_range(1..=cfg.max_codim.min(nvars));
    let r = rng.gen_range(c..=cfg.max_generators.max(c));
    let ring = PolyRing::new(&VAR_NAMES[..nvars]).expect("valid names");

    let mut vars: Vec<usize> = (0..nvars).collect();
    vars.shuffle(rng);
    vars.truncate(c);

    let mut generators: Vec<Monomial> = Vec::new();
    let mut powers = Vec::new();
    for &v in &vars {
        let e = rng.gen_range(1..=cfg.max_generator_degree);
        let mut exps = vec![0; nvars];
        exps[v] = e;
        generators.push(Monomial::new(exps));
        powers.push(e);
    }
    let mut attempts = 0;
    while generators.len() < r && attempts < 50 {
        attempts += 1;
        let d = rng.gen_range(1..=cfg.max_generator_degree);
        let m = random_monomial(rng, nvars, d);
        if !generators.contains(&m) {
            generators.push(m);
        }
    }
    generators.shuffle(rng);
    let ideal = MonomialIdeal::new(generators.clone()).expect("nonempty");

    let order = MonomialOrder::GradedReverseLex;
    let sequence = vars
        .iter()
        .zip(&powers)
        .map(|(&v, &e)| {
            let degree = e + rng.gen_range(0..=cfg.max_degree_excess);
            let mut exps = vec![0; nvars];
            exps[v] = degree;
            let lead = Monomial::new(exps);
            let mut a = Polynomial::term(lead.clone(), random_coefficient(rng));
            let mut candidates: Vec<Monomial> = monomials_of_degree(nvars, degree)
                .into_iter()
                .filter(|m| {
                    order.cmp(m, &lead).is_lt() && generators.iter().any(|g| g.divides(m))
                })
                .collect();
            candidates.shuffle(rng);
            let extra = rng.gen_range(0..=cfg.max_extra_terms);
            for m in candidates.into_iter().take(extra) {
                a.add_term(m, random_coefficient(rng));
            }
            a
        })
        .collect();
    CompleteIntersectionData::new(ring, ideal, sequence).expect("valid by construction")
}
