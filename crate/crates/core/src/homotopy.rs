//! Lifting a regular sequence into a monomial ideal and the resulting
//! homotopies on the Taylor complex.
//!
//! Given `a_i = Σ_t f_{i,t} m_t`, the map `σ_i : T_k → T_{k+1}` is
//!
//! ```text
//! σ_i(ε_S) = Σ_{t ∉ S} (-1)^(k - p - 1) (f_{i,t} m_t m_S / m_{S∪t}) ε_{S∪t}
//! ```
//!
//! where `p` is the 1-based position of `t` in `S ∪ {t}`. Together with the
//! Taylor differential these form a system of higher homotopies whose
//! components of order two and above all vanish.

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{BasisLabel, LabeledGradedMatrix};
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::report::{CheckFailure, Report};
use crate::taylor::{sign, MonomialIdeal, SubsetLabel, TaylorComplex};

/// A monomial ideal together with homogeneous `a₁,…,a_c` inside it.
///
/// The sequence is assumed to be regular; this is not checked.
#[derive(Debug, Clone)]
pub struct CompleteIntersectionData<F> {
    ring: PolyRing<F>,
    ideal: MonomialIdeal,
    sequence: Vec<Polynomial<F>>,
    degrees: Vec<u32>,
}

impl<F: Field> CompleteIntersectionData<F> {
    pub fn new(
        ring: PolyRing<F>,
        ideal: MonomialIdeal,
        sequence: Vec<Polynomial<F>>,
    ) -> Result<Self> {
        if sequence.is_empty() {
            return Err(Error::InvalidSequence("the sequence is empty".into()));
        }
        if ideal.nvars() != ring.nvars() {
            return Err(Error::InvalidIdeal(format!(
                "ideal has {} variables but the ring has {}",
                ideal.nvars(),
                ring.nvars()
            )));
        }
        let mut degrees = Vec::with_capacity(sequence.len());
        for (i, a) in sequence.iter().enumerate() {
            let d = a.total_degree().ok_or_else(|| {
                Error::InvalidSequence(format!("sequence element {} is zero", i + 1))
            })?;
            if !a.is_homogeneous() {
                return Err(Error::Nonhomogeneous { element: i + 1 });
            }
            if a.terms().any(|(m, _)| m.nvars() != ring.nvars()) {
                return Err(Error::InvalidSequence(format!(
                    "sequence element {} lives in a different ring",
                    i + 1
                )));
            }
            degrees.push(d);
        }
        Ok(CompleteIntersectionData {
            ring,
            ideal,
            sequence,
            degrees,
        })
    }

    pub fn parse<S: AsRef<str>, T: AsRef<str>>(
        ring: PolyRing<F>,
        ideal: &[S],
        sequence: &[T],
    ) -> Result<Self> {
        let ideal = MonomialIdeal::parse(&ring, ideal)?;
        let sequence = sequence
            .iter()
            .map(|s| ring.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, ideal, sequence)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn sequence(&self) -> &[Polynomial<F>] {
        &self.sequence
    }

    /// `d_j = deg a_j`.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Codimension `c`.
    pub fn codim(&self) -> usize {
        self.sequence.len()
    }
}

/// One user-supplied choice of generator for a term of a sequence element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub term: Monomial,
    /// 0-based generator index.
    pub generator: usize,
    /// 0-based sequence element; `None` applies to every element.
    pub element: Option<usize>,
}

#[derive(Deserialize)]
struct AssignmentFile {
    assignments: Vec<AssignmentEntry>,
}

#[derive(Deserialize)]
struct AssignmentEntry {
    term: String,
    gen: usize,
    #[serde(default)]
    ci: Option<usize>,
}

/// Fixed term → generator assignments, read from
/// `{"assignments":[{"term":"x^2*z","gen":1},…]}` with 1-based `gen` and an
/// optional 1-based `ci` selecting the sequence element.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FixedAssignments {
    entries: Vec<Assignment>,
}

impl FixedAssignments {
    pub fn new(entries: Vec<Assignment>) -> Self {
        FixedAssignments { entries }
    }

    pub fn from_json<F: Field>(ring: &PolyRing<F>, src: &str) -> Result<Self> {
        let file: AssignmentFile = serde_json::from_str(src)
            .map_err(|e| Error::InvalidAssignment(format!("bad JSON: {e}")))?;
        let entries = file
            .assignments
            .into_iter()
            .map(|e| {
                if e.gen == 0 {
                    return Err(Error::InvalidAssignment("`gen` is 1-based".into()));
                }
                if e.ci == Some(0) {
                    return Err(Error::InvalidAssignment("`ci` is 1-based".into()));
                }
                Ok(Assignment {
                    term: ring.parse_monomial(&e.term)?,
                    generator: e.gen - 1,
                    element: e.ci.map(|c| c - 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FixedAssignments { entries })
    }

    pub fn entries(&self) -> &[Assignment] {
        &self.entries
    }

    /// Element-specific entries win over global ones.
    pub fn lookup(&self, element: usize, term: &Monomial) -> Option<usize> {
        let specific = self
            .entries
            .iter()
            .find(|a| a.element == Some(element) && &a.term == term);
        specific
            .or_else(|| {
                self.entries
                    .iter()
                    .find(|a| a.element.is_none() && &a.term == term)
            })
            .map(|a| a.generator)
    }
}

/// How each term `c·x^α` of `a_i` is attributed to a generator dividing it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum LiftStrategy {
    /// The smallest-index generator dividing the term.
    #[default]
    First,
    /// Equal weight on every dividing generator.
    Average,
    Fixed(FixedAssignments),
}

/// One row `(f_{i,1},…,f_{i,r})` with `Σ_t f_{i,t} m_t = a`.
///
/// `element` is the 0-based position of `a` in its sequence; it selects
/// fixed assignments and labels errors.
pub fn compute_lift<F: Field>(
    a: &Polynomial<F>,
    ideal: &MonomialIdeal,
    strategy: &LiftStrategy,
    element: usize,
) -> Result<Vec<Polynomial<F>>> {
    if a.is_zero() {
        return Err(Error::InvalidSequence(format!(
            "sequence element {} is zero",
            element + 1
        )));
    }
    let gens = ideal.generators();
    let mut row = vec![Polynomial::zero(); gens.len()];
    for (m, c) in a.terms() {
        let divisors: Vec<usize> = (0..gens.len()).filter(|&j| gens[j].divides(m)).collect();
        if divisors.is_empty() {
            return Err(Error::NotInIdeal {
                element: element + 1,
                term: format!("{:?}", m.exponents()),
            });
        }
        match strategy {
            LiftStrategy::First => {
                let j = divisors[0];
                row[j].add_term(m.divide(&gens[j])?, c.clone());
            }
            LiftStrategy::Average => {
                let k = BigRational::from_integer(divisors.len().into());
                let weight = F::from_rational(&k.recip()).ok_or_else(|| {
                    Error::CharacteristicObstruction {
                        weight: format!("1/{k}"),
                        characteristic: F::characteristic(),
                    }
                })?;
                for &j in &divisors {
                    row[j].add_term(m.divide(&gens[j])?, c.clone() * weight.clone());
                }
            }
            LiftStrategy::Fixed(fixed) => {
                let j = fixed.lookup(element, m).ok_or_else(|| {
                    Error::InvalidAssignment(format!(
                        "no assignment for term {:?} of element {}",
                        m.exponents(),
                        element + 1
                    ))
                })?;
                if j >= gens.len() {
                    return Err(Error::InvalidAssignment(format!(
                        "generator {} does not exist (r = {})",
                        j + 1,
                        gens.len()
                    )));
                }
                let quotient = m.divide(&gens[j]).map_err(|_| {
                    Error::InvalidAssignment(format!(
                        "generator {} does not divide term {:?}",
                        j + 1,
                        m.exponents()
                    ))
                })?;
                row[j].add_term(quotient, c.clone());
            }
        }
    }
    Ok(row)
}

/// The coefficients `f_{i,j}` expressing each `a_i` in the generators `m_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftMatrix<F> {
    entries: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> LiftMatrix<F> {
    pub fn compute(ci: &CompleteIntersectionData<F>, strategy: &LiftStrategy) -> Result<Self> {
        let entries = ci
            .sequence()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                compute_lift(a, ci.ideal(), strategy, i).map_err(|e| match e {
                    Error::NotInIdeal { element, .. } => {
                        let term = a
                            .terms()
                            .map(|(m, _)| m)
                            .find(|m| !ci.ideal().generators().iter().any(|g| g.divides(m)))
                            .expect("offending term");
                        Error::NotInIdeal {
                            element,
                            term: ci.ring().format_monomial(term),
                        }
                    }
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LiftMatrix { entries })
    }

    /// Checked construction: shape `c × r` and `Σ_j f_{i,j} m_j = a_i`.
    pub fn from_entries(
        ci: &CompleteIntersectionData<F>,
        entries: Vec<Vec<Polynomial<F>>>,
    ) -> Result<Self> {
        let lift = Self::from_entries_unchecked(entries);
        lift.check_shape(ci)?;
        if let Some(row) = lift.mismatched_row(ci) {
            return Err(Error::LiftMismatch { row: row + 1 });
        }
        Ok(lift)
    }

    /// No validation at all. Meant for perturbation experiments.
    pub fn from_entries_unchecked(entries: Vec<Vec<Polynomial<F>>>) -> Self {
        LiftMatrix { entries }
    }

    fn check_shape(&self, ci: &CompleteIntersectionData<F>) -> Result<()> {
        let r = ci.ideal().len();
        if self.entries.len() != ci.codim() || self.entries.iter().any(|row| row.len() != r) {
            return Err(Error::ShapeMismatch(format!(
                "lift must be {} x {}",
                ci.codim(),
                r
            )));
        }
        Ok(())
    }

    /// First row `i` with `Σ_j f_{i,j} m_j ≠ a_i`.
    pub fn mismatched_row(&self, ci: &CompleteIntersectionData<F>) -> Option<usize> {
        (0..self.entries.len()).find(|&i| {
            let mut sum = Polynomial::zero();
            for (f, m) in self.entries[i].iter().zip(ci.ideal().generators()) {
                sum.add_assign_ref(&f.mul_monomial(m));
            }
            sum != ci.sequence()[i]
        })
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial<F>] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<Polynomial<F>>] {
        &self.entries
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        self.entries[i][j] = p;
    }
}

/// Convex combination `Σ_k w_k L_k` of lifts for the same data.
pub fn average_lifts<F: Field>(
    lifts: &[LiftMatrix<F>],
    weights: &[BigRational],
) -> Result<LiftMatrix<F>> {
    if lifts.is_empty() || lifts.len() != weights.len() {
        return Err(Error::ShapeMismatch(
            "need one weight per lift and at least one lift".into(),
        ));
    }
    let total: BigRational = weights.iter().cloned().sum();
    if weights.iter().any(Signed::is_negative) || !total.is_one() {
        return Err(Error::WeightSum);
    }
    let shape: Vec<usize> = lifts[0].entries.iter().map(Vec::len).collect();
    if lifts
        .iter()
        .any(|l| l.entries.iter().map(Vec::len).collect::<Vec<_>>() != shape)
    {
        return Err(Error::ShapeMismatch("lifts have different shapes".into()));
    }
    let scalars = weights
        .iter()
        .map(|w| {
            F::from_rational(w).ok_or_else(|| Error::CharacteristicObstruction {
                weight: w.to_string(),
                characteristic: F::characteristic(),
            })
        })
        .collect::<Result<Vec<F>>>()?;
    let mut entries: Vec<Vec<Polynomial<F>>> = shape
        .iter()
        .map(|&len| vec![Polynomial::zero(); len])
        .collect();
    for (lift, w) in lifts.iter().zip(&scalars) {
        if w.is_zero() {
            continue;
        }
        for (i, row) in lift.entries.iter().enumerate() {
            for (j, f) in row.iter().enumerate() {
                entries[i][j].add_assign_ref(&f.scale(w));
            }
        }
    }
    Ok(LiftMatrix { entries })
}

/// `σ_{e_i} : T_k → T_{k+1}` built from one lift row. For `k = r` the map
/// goes to the zero module.
pub fn sigma_e<F: Field>(
    taylor: &TaylorComplex<F>,
    lift_row: &[Polynomial<F>],
    k: usize,
) -> LabeledGradedMatrix<F, SubsetLabel> {
    let domain = taylor.basis(k).to_vec();
    let codomain = taylor.basis(k + 1).to_vec();
    let gens = taylor.ideal().generators();
    let mut m = LabeledGradedMatrix::zeros(codomain, domain);
    for col in 0..m.ncols() {
        let s = &m.cols()[col];
        let mut column = Vec::new();
        for t in 0..gens.len() {
            if s.contains(t) || lift_row[t].is_zero() {
                continue;
            }
            let p = s.insertion_position(t) as i64;
            let mut union = s.members().to_vec();
            union.insert((p - 1) as usize, t);
            let row = taylor.index_of(&union).expect("S ∪ t is a basis element");
            let target = &m.rows()[row];
            let quotient = gens[t]
                .mul(s.lcm())
                .divide(target.lcm())
                .expect("m_{S∪t} divides m_t m_S");
            let c = sign::<F>(k as i64 - p - 1);
            column.push((row, lift_row[t].mul_term(&quotient, &c)));
        }
        for (row, entry) in column {
            m.set(row, col, entry);
        }
    }
    m
}

/// The Taylor differential plus one homotopy `σ_{e_i}` per sequence element.
#[derive(Debug, Clone)]
pub struct HomotopySystem<F> {
    ci: CompleteIntersectionData<F>,
    lift: LiftMatrix<F>,
    taylor: TaylorComplex<F>,
    /// `sigma[i][k] = σ_{e_i} : T_k → T_{k+1}` for `0 ≤ k ≤ r`.
    sigma: Vec<Vec<LabeledGradedMatrix<F, SubsetLabel>>>,
}

impl<F: Field> HomotopySystem<F> {
    /// Builds the homotopies from a lift. Only the shape of the lift is
    /// validated; use [`verify_homotopy_system`] for the identities.
    pub fn new(ci: CompleteIntersectionData<F>, lift: LiftMatrix<F>) -> Result<Self> {
        lift.check_shape(&ci)?;
        let taylor = TaylorComplex::new(ci.ideal().clone());
        let r = taylor.len();
        let sigma = lift
            .entries
            .iter()
            .map(|row| (0..=r).map(|k| sigma_e(&taylor, row, k)).collect())
            .collect();
        Ok(HomotopySystem {
            ci,
            lift,
            taylor,
            sigma,
        })
    }

    pub fn build(ci: CompleteIntersectionData<F>, strategy: &LiftStrategy) -> Result<Self> {
        let lift = LiftMatrix::compute(&ci, strategy)?;
        Self::new(ci, lift)
    }

    pub fn ci(&self) -> &CompleteIntersectionData<F> {
        &self.ci
    }

    pub fn lift(&self) -> &LiftMatrix<F> {
        &self.lift
    }

    pub fn taylor(&self) -> &TaylorComplex<F> {
        &self.taylor
    }

    /// `σ_0 = τ_k`.
    pub fn sigma_zero(&self, k: usize) -> LabeledGradedMatrix<F, SubsetLabel> {
        self.taylor.differential_or_zero(k)
    }

    /// `σ_{e_i}` on `T_k`, `i` 0-based, `0 ≤ k ≤ r`.
    pub fn sigma_e(&self, i: usize, k: usize) -> &LabeledGradedMatrix<F, SubsetLabel> {
        &self.sigma[i][k]
    }

    /// Nonzero `σ_{e_i}` entries whose degree is not `d_i + v_S − v_{S∪t}`.
    pub fn homogeneity_report(&self) -> Report {
        let mut report = Report::new("homotopy homogeneity");
        for (i, maps) in self.sigma.iter().enumerate() {
            let d = self.ci.degrees()[i] as i64;
            for (k, m) in maps.iter().enumerate() {
                report.checks += 1;
                if let Some(&(row, col)) = m.degree_mismatches(d).first() {
                    report.fail(CheckFailure {
                        condition: format!("deg sigma_{} entry", i + 1),
                        degree: k,
                        witness: m.cols()[col].label(),
                        detail: format!("row {}", m.rows()[row].label()),
                    });
                }
            }
        }
        report
    }
}

/// Outcome of the three homotopy identities.
#[derive(Debug, Clone)]
pub struct HomotopyVerification {
    /// (a) `σ₀σ₀ = 0`
    pub differential: Report,
    /// (b) `σ₀σ_{e_j} + σ_{e_j}σ₀ = a_j`
    pub homotopy: Report,
    /// (c) `σ_{e_i}σ_{e_j} + σ_{e_j}σ_{e_i} = 0`, including `i = j`
    pub anticommute: Report,
}

impl HomotopyVerification {
    pub fn passed(&self) -> bool {
        self.differential.passed() && self.homotopy.passed() && self.anticommute.passed()
    }

    pub fn reports(&self) -> [&Report; 3] {
        [&self.differential, &self.homotopy, &self.anticommute]
    }
}

fn first_nonzero<F: Field>(
    m: &LabeledGradedMatrix<F, SubsetLabel>,
) -> Option<(String, String)> {
    m.entries().next().map(|(r, c, _)| (m.cols()[c].label(), m.rows()[r].label()))
}

/// Checks conditions (a), (b) and (c) exactly on every `T_k`.
pub fn verify_homotopy_system<F: Field>(sys: &HomotopySystem<F>) -> HomotopyVerification {
    let r = sys.taylor.len();
    let c = sys.ci.codim();
    let nvars = sys.ci.ring().nvars();

    let mut differential = sys.taylor.verify();
    differential.name = "(a) sigma_0^2 = 0".into();

    let mut homotopy = Report::new("(b) sigma_0 sigma_e + sigma_e sigma_0 = a");
    'outer: for j in 0..c {
        let a = &sys.ci.sequence()[j];
        for k in 0..=r {
            homotopy.checks += 1;
            let basis = sys.taylor.basis(k).to_vec();
            let mut total = LabeledGradedMatrix::zeros(basis.clone(), basis.clone());
            if k < r {
                total = total.add(&sys.taylor.differential(k + 1).compose(sys.sigma_e(j, k)));
            }
            if k >= 1 {
                total = total.add(&sys.sigma_e(j, k - 1).compose(sys.taylor.differential(k)));
            }
            let target = LabeledGradedMatrix::diagonal(basis.clone(), basis, a);
            let diff = total.sub(&target);
            if let Some((witness, row)) = first_nonzero(&diff) {
                homotopy.fail(CheckFailure {
                    condition: format!("(b) j={}", j + 1),
                    degree: k,
                    witness,
                    detail: format!("discrepancy in coefficient of {row}"),
                });
                break 'outer;
            }
        }
    }
    let _ = nvars;

    let mut anticommute = Report::new("(c) sigma_ei sigma_ej + sigma_ej sigma_ei = 0");
    'outer: for i in 0..c {
        for j in i..c {
            for k in 0..=r {
                anticommute.checks += 1;
                if k + 1 > r {
                    continue;
                }
                let mut total = sys.sigma_e(i, k + 1).compose(sys.sigma_e(j, k));
                total = total.add(&sys.sigma_e(j, k + 1).compose(sys.sigma_e(i, k)));
                if let Some((witness, row)) = first_nonzero(&total) {
                    anticommute.fail(CheckFailure {
                        condition: format!("(c) i={} j={}", i + 1, j + 1),
                        degree: k,
                        witness,
                        detail: format!("nonzero coefficient of {row}"),
                    });
                    break 'outer;
                }
            }
        }
    }

    HomotopyVerification {
        differential,
        homotopy,
        anticommute,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::Zero;

    fn ci(vars: &[&str], ideal: &[&str], seq: &[&str]) -> CompleteIntersectionData<Rational> {
        CompleteIntersectionData::parse(PolyRing::new(vars).unwrap(), ideal, seq).unwrap()
    }

    fn polys(ring: &PolyRing<Rational>, srcs: &[&str]) -> Vec<Polynomial<Rational>> {
        srcs.iter().map(|s| ring.parse(s).unwrap()).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn first_lifts_match_examples() {
        let d = ci(&["x", "y", "z"], &["x*y", "x*z", "y*z"], &["x*y*z"]);
        let lift = LiftMatrix::compute(&d, &LiftStrategy::First).unwrap();
        assert_eq!(lift.row(0), polys(d.ring(), &["z", "0", "0"]).as_slice());

        let d = ci(&["x", "y", "z"], &["x^2", "y^2", "z^2"], &["x^2*z + x*y^2"]);
        let lift = LiftMatrix::compute(&d, &LiftStrategy::First).unwrap();
        assert_eq!(lift.row(0), polys(d.ring(), &["z", "x", "0"]).as_slice());
    }

    #[test]
    fn average_lift_is_mean_of_single_choices() {
        let d = ci(&["x", "y", "z"], &["x*y", "x*z", "y*z"], &["x*y*z"]);
        let lift = LiftMatrix::compute(&d, &LiftStrategy::Average).unwrap();
        // mean of (z,0,0), (0,y,0), (0,0,x)
        let singles = [["z", "0", "0"], ["0", "y", "0"], ["0", "0", "x"]];
        let mut mean = vec![Polynomial::zero(); 3];
        for s in &singles {
            for (acc, p) in mean.iter_mut().zip(polys(d.ring(), s)) {
                acc.add_assign_ref(&p.scale(&q(1, 3)));
            }
        }
        assert_eq!(lift.row(0), mean.as_slice());
        assert_eq!(lift.row(0), polys(d.ring(), &["1/3*z", "1/3*y", "1/3*x"]).as_slice());
        assert!(lift.mismatched_row(&d).is_none());
    }

    #[test]
    fn average_in_bad_characteristic() {
        let ring: PolyRing<Fp<3>> = PolyRing::new(&["x", "y", "z"]).unwrap();
        let d = CompleteIntersectionData::parse(ring, &["x*y", "x*z", "y*z"], &["x*y*z"]).unwrap();
        assert!(matches!(
            LiftMatrix::compute(&d, &LiftStrategy::Average),
            Err(Error::CharacteristicObstruction { .. })
        ));
    }

    #[test]
    fn not_in_ideal_names_term() {
        let d = ci(&["x", "y"], &["x^2", "y^2"], &["x*y"]);
        match LiftMatrix::compute(&d, &LiftStrategy::First) {
            Err(Error::NotInIdeal { element, term }) => {
                assert_eq!(element, 1);
                assert_eq!(term, "x*y");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sequence_validation() {
        let ring: PolyRing<Rational> = PolyRing::new(&["x", "y"]).unwrap();
        assert!(matches!(
            CompleteIntersectionData::parse(ring.clone(), &["x"], &["x + x^2"]),
            Err(Error::Nonhomogeneous { element: 1 })
        ));
        assert!(CompleteIntersectionData::parse(ring.clone(), &["x"], &["0"]).is_err());
        assert!(CompleteIntersectionData::parse::<&str, &str>(ring, &["x"], &[]).is_err());
    }

    #[test]
    fn fixed_assignments_from_json() {
        let d = ci(&["x", "y", "z"], &["x*y", "x*z", "y*z"], &["x*y*z"]);
        let f = FixedAssignments::from_json(
            d.ring(),
            r#"{"assignments":[{"term":"x*y*z","gen":2}]}"#,
        )
        .unwrap();
        let lift = LiftMatrix::compute(&d, &LiftStrategy::Fixed(f)).unwrap();
        assert_eq!(lift.row(0), polys(d.ring(), &["0", "y", "0"]).as_slice());

        let bad = FixedAssignments::from_json(
            d.ring(),
            r#"{"assignments":[{"term":"x*y*z","gen":4}]}"#,
        )
        .unwrap();
        assert!(matches!(
            LiftMatrix::compute(&d, &LiftStrategy::Fixed(bad)),
            Err(Error::InvalidAssignment(_))
        ));
        let d2 = ci(&["x", "y", "z"], &["x^2", "y^2", "z^2"], &["x^2*z + x*y^2"]);
        let partial = FixedAssignments::from_json(
            d2.ring(),
            r#"{"assignments":[{"term":"x^2*z","gen":1}]}"#,
        )
        .unwrap();
        assert!(LiftMatrix::compute(&d2, &LiftStrategy::Fixed(partial)).is_err());
        let nondiv = FixedAssignments::from_json(
            d2.ring(),
            r#"{"assignments":[{"term":"x^2*z","gen":2},{"term":"x*y^2","gen":2}]}"#,
        )
        .unwrap();
        assert!(LiftMatrix::compute(&d2, &LiftStrategy::Fixed(nondiv)).is_err());
        assert!(FixedAssignments::from_json(d2.ring(), "{}").is_err());
        assert!(FixedAssignments::from_json(
            d2.ring(),
            r#"{"assignments":[{"term":"x","gen":0}]}"#
        )
        .is_err());
    }

    #[test]
    fn averaging_weights() {
        let d = ci(&["x", "y", "z"], &["x*y", "x*z", "y*z"], &["x*y*z"]);
        let a = LiftMatrix::from_entries(&d, vec![polys(d.ring(), &["z", "0", "0"])]).unwrap();
        let b = LiftMatrix::from_entries(&d, vec![polys(d.ring(), &["0", "y", "0"])]).unwrap();
        let one = BigRational::one();
        let zero = BigRational::zero();
        assert_eq!(
            average_lifts(&[a.clone(), b.clone()], &[one.clone(), zero.clone()]).unwrap(),
            a
        );
        assert_eq!(
            average_lifts(&[a.clone(), a.clone()], &[q(1, 2), q(1, 2)]).unwrap(),
            a
        );
        assert_eq!(
            average_lifts(&[a.clone(), b.clone()], &[q(1, 2), q(1, 3)]),
            Err(Error::WeightSum)
        );
        assert_eq!(
            average_lifts(&[a.clone(), b.clone()], &[q(3, 2), q(-1, 2)]),
            Err(Error::WeightSum)
        );
        assert!(LiftMatrix::from_entries(&d, vec![polys(d.ring(), &["y", "0", "0"])]).is_err());
    }

    #[test]
    fn sigma_on_first_example() {
        let d = ci(&["x", "y", "z"], &["x^2", "y^2", "z^2"], &["x^2*z + x*y^2"]);
        let sys = HomotopySystem::build(d, &LiftStrategy::First).unwrap();
        let ring = sys.ci().ring().clone();
        let p = |s: &str| ring.parse(s).unwrap();

        // σ(ε_∅) = z ε₁ + x ε₂
        let s0 = sys.sigma_e(0, 0);
        assert_eq!((s0.nrows(), s0.ncols()), (3, 1));
        assert_eq!(s0.entry(0, 0), p("z"));
        assert_eq!(s0.entry(1, 0), p("x"));
        assert_eq!(s0.entry(2, 0), p("0"));

        // rows 12,13,23; cols 1,2,3
        let s1 = sys.sigma_e(0, 1);
        assert_eq!(s1.entry(0, 0), p("x"));
        assert_eq!(s1.entry(0, 1), p("-z"));
        assert_eq!(s1.entry(1, 2), p("-z"));
        assert_eq!(s1.entry(2, 2), p("-x"));
        assert_eq!(s1.nnz(), 4);

        assert!(sys.sigma_e(0, 3).is_zero());
        assert_eq!(sys.sigma_e(0, 3).nrows(), 0);

        let v = verify_homotopy_system(&sys);
        assert!(v.passed(), "{:?}", v);
        assert!(sys.homogeneity_report().passed());
    }

    #[test]
    fn corrupted_lift_is_localized() {
        let d = ci(&["x", "y", "z"], &["x^2", "y^2", "z^2"], &["x^2*z + x*y^2"]);
        let mut lift = LiftMatrix::compute(&d, &LiftStrategy::First).unwrap();
        lift.set_entry(0, 2, Polynomial::one(3));
        assert!(lift.mismatched_row(&d).is_some());
        let sys = HomotopySystem::new(d, lift).unwrap();
        let v = verify_homotopy_system(&sys);
        assert!(v.differential.passed());
        assert!(v.anticommute.passed());
        let failure = v.homotopy.failure.expect("condition (b) must fail");
        assert_eq!(failure.condition, "(b) j=1");
        assert_eq!(failure.degree, 0);
        assert_eq!(failure.witness, "∅");
    }

    #[test]
    fn hypersurface_example_homotopies() {
        let d = ci(&["x1", "x2"], &["x1^2", "x2^2"], &["x1^5"]);
        let sys = HomotopySystem::build(d, &LiftStrategy::First).unwrap();
        let ring = sys.ci().ring().clone();
        let s0 = sys.sigma_e(0, 0);
        assert_eq!(s0.entry(0, 0), ring.parse("x1^3").unwrap());
        assert!(s0.entry(1, 0).is_zero());
        let s1 = sys.sigma_e(0, 1);
        assert_eq!((s1.nrows(), s1.ncols()), (1, 2));
        assert!(s1.entry(0, 0).is_zero());
        assert_eq!(s1.entry(0, 1), ring.parse("-x1^3").unwrap());
    }
}
