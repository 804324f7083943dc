//! Worked examples and comparison helpers shared by the integration tests.
#![allow(dead_code)]

use citaylor::homotopy::{Assignment, CompleteIntersectionData, FixedAssignments, LiftStrategy};
use citaylor::random::{random_instance, RandomInstanceConfig};
use citaylor::{BasisLabel, Field, HomotopySystem, LabeledGradedMatrix, PolyRing, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Q = Rational;

pub fn ci(vars: &[&str], ideal: &[&str], seq: &[&str]) -> CompleteIntersectionData<Q> {
    CompleteIntersectionData::parse(PolyRing::new(vars).unwrap(), ideal, seq).unwrap()
}

pub fn system(data: CompleteIntersectionData<Q>, strategy: &LiftStrategy) -> HomotopySystem<Q> {
    HomotopySystem::build(data, strategy).unwrap()
}

/// `I = ⟨x², y², z²⟩`, `a = x²z + xy²`.
pub fn first_example() -> CompleteIntersectionData<Q> {
    ci(&["x", "y", "z"], &["x^2", "y^2", "z^2"], &["x^2*z+x*y^2"])
}

/// `I = ⟨x₁², x₂²⟩`, `a = x₁⁵`.
pub fn power_hypersurface() -> CompleteIntersectionData<Q> {
    ci(&["x1", "x2"], &["x1^2", "x2^2"], &["x1^5"])
}

/// `I = ⟨xy, xz, yz⟩`, `a = xyz`.
pub fn monomial_hypersurface() -> CompleteIntersectionData<Q> {
    ci(&["x", "y", "z"], &["x*y", "x*z", "y*z"], &["x*y*z"])
}

/// Attribute the single term `xyz` to generator `gen` (0-based).
pub fn xyz_lift(data: &CompleteIntersectionData<Q>, gen: usize) -> LiftStrategy {
    LiftStrategy::Fixed(FixedAssignments::new(vec![Assignment {
        term: data.ring().parse_monomial("x*y*z").unwrap(),
        generator: gen,
        element: None,
    }]))
}

/// `I = ⟨x², y²⟩`, `a = x²y + xy²`.
pub fn polynomial_hypersurface() -> CompleteIntersectionData<Q> {
    ci(&["x", "y"], &["x^2", "y^2"], &["x^2*y+x*y^2"])
}

/// `I = ⟨x², y², z², w²⟩`, `𝔞 = ⟨x³ + y³, z³ + w³⟩`.
pub fn codim_two() -> CompleteIntersectionData<Q> {
    ci(
        &["x", "y", "z", "w"],
        &["x^2", "y^2", "z^2", "w^2"],
        &["x^3+y^3", "z^3+w^3"],
    )
}

/// Compares every entry and the shape; the message names the first mismatch.
pub fn expect_matrix<F: Field, L: BasisLabel>(
    ring: &PolyRing<F>,
    name: &str,
    m: &LabeledGradedMatrix<F, L>,
    rows: &[&[&str]],
) -> Result<(), String> {
    let ncols = rows.first().map_or(0, |r| r.len());
    if m.nrows() != rows.len() || m.ncols() != ncols {
        return Err(format!(
            "{name}: shape {}x{}, expected {}x{}",
            m.nrows(),
            m.ncols(),
            rows.len(),
            ncols
        ));
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, src) in row.iter().enumerate() {
            let want = ring.parse(src).unwrap();
            let got = m.entry(i, j);
            if got != want {
                return Err(format!(
                    "{name}: entry ({}, {}) is {}, expected {src}",
                    m.rows()[i].label(),
                    m.cols()[j].label(),
                    ring.format(&got)
                ));
            }
        }
    }
    Ok(())
}

pub fn expect_labels<L: BasisLabel>(name: &str, labels: &[L], want: &[&str]) -> Result<(), String> {
    let got: Vec<String> = labels.iter().map(BasisLabel::label).collect();
    if got != want {
        return Err(format!("{name}: labels {got:?}, expected {want:?}"));
    }
    Ok(())
}

/// A random fixed assignment: each term goes to a random dividing generator.
pub fn random_fixed<R: Rng>(rng: &mut R, data: &CompleteIntersectionData<Q>) -> LiftStrategy {
    let gens = data.ideal().generators();
    let mut entries = Vec::new();
    for (i, a) in data.sequence().iter().enumerate() {
        for (m, _) in a.terms() {
            let dividing: Vec<usize> = (0..gens.len()).filter(|&j| gens[j].divides(m)).collect();
            entries.push(Assignment {
                term: m.clone(),
                generator: *dividing.choose(rng).expect("term lies in I"),
                element: Some(i),
            });
        }
    }
    LiftStrategy::Fixed(FixedAssignments::new(entries))
}

/// Random instance paired with a lift strategy cycling through all three kinds.
pub fn random_case<R: Rng>(rng: &mut R, index: usize) -> (CompleteIntersectionData<Q>, LiftStrategy) {
    let data = random_instance(rng, &RandomInstanceConfig::default());
    let strategy = match index % 3 {
        0 => LiftStrategy::First,
        1 => LiftStrategy::Average,
        _ => random_fixed(rng, &data),
    };
    (data, strategy)
}
