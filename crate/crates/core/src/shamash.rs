//! The Eisenbud–Shamash resolution of `R/I` over `R = Q/𝔞`.
//!
//! `F_n` has one basis element `y^(u) ⊗ ε_S` for each divided-power index
//! `u ∈ ℕ^c` and subset `S ⊆ [r]` with `2|u| + |S| = n`. The differential
//! sends `y^(u) ⊗ ε_S` to
//!
//! ```text
//! y^(u) ⊗ τ(ε_S) + Σ_{j : u_j ≥ 1} y^(u − e_j) ⊗ σ_{e_j}(ε_S)
//! ```
//!
//! Homotopies of order two and above vanish, so no other terms appear and no
//! divided-power coefficients are ever needed.

use std::collections::HashMap;
use std::fmt;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homotopy::HomotopySystem;
use crate::matrix::{BasisLabel, LabeledGradedMatrix};
use crate::poly::Polynomial;
use crate::report::{CheckFailure, Report};
use crate::taylor::{subset_name, SubsetLabel, TaylorComplex};

/// Exponent vector of a divided-power monomial `y₁^(u₁)⋯y_c^(u_c)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DPIndex {
    parts: Vec<u32>,
    weight: u32,
}

impl DPIndex {
    pub fn new(parts: Vec<u32>) -> Self {
        let weight = parts.iter().sum();
        DPIndex { parts, weight }
    }

    pub fn zero(c: usize) -> Self {
        DPIndex::new(vec![0; c])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|u|`.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `u − e_j`, if `u_j ≥ 1`.
    pub fn lower(&self, j: usize) -> Option<DPIndex> {
        let mut parts = self.parts.clone();
        parts[j] = parts[j].checked_sub(1)?;
        Some(DPIndex::new(parts))
    }

    pub fn raise(&self, j: usize) -> DPIndex {
        let mut parts = self.parts.clone();
        parts[j] += 1;
        DPIndex::new(parts)
    }

    /// All `u ∈ ℕ^c` with `|u| = m`, lexicographically descending.
    pub fn compositions(c: usize, m: u32) -> Vec<DPIndex> {
        fn go(c: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<DPIndex>) {
            if prefix.len() + 1 == c {
                prefix.push(m);
                out.push(DPIndex::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=m).rev() {
                prefix.push(first);
                go(c, m - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if c > 0 {
            go(c, m, &mut Vec::with_capacity(c), &mut out);
        }
        out
    }
}

impl fmt::Display for DPIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// The basis element `y^(u) ⊗ ε_S` of `F_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShamashBasisElement {
    u: DPIndex,
    subset: SubsetLabel,
    hdeg: usize,
    twist: u32,
}

impl ShamashBasisElement {
    /// `degrees[j] = deg a_j`.
    pub fn new(u: DPIndex, subset: SubsetLabel, degrees: &[u32]) -> Self {
        assert_eq!(u.len(), degrees.len(), "index length must equal codimension");
        let hdeg = 2 * u.weight() as usize + subset.len();
        let twist = subset.degree()
            + u.parts()
                .iter()
                .zip(degrees)
                .map(|(p, d)| p * d)
                .sum::<u32>();
        ShamashBasisElement {
            u,
            subset,
            hdeg,
            twist,
        }
    }

    pub fn u(&self) -> &DPIndex {
        &self.u
    }

    pub fn subset(&self) -> &SubsetLabel {
        &self.subset
    }

    pub fn hdeg(&self) -> usize {
        self.hdeg
    }

    fn key(&self) -> (Vec<u32>, Vec<usize>) {
        (self.u.parts().to_vec(), self.subset.members().to_vec())
    }
}

impl BasisLabel for ShamashBasisElement {
    fn twist(&self) -> u32 {
        self.twist
    }

    fn same_block(&self, other: &Self) -> bool {
        self.subset.len() == other.subset.len() && self.u == other.u
    }

    fn label(&self) -> String {
        format!("{}:{}", self.u, subset_name(&self.subset.one_based()))
    }
}

/// Basis of `F_n`: by `|S|` ascending, then `u` descending, then `S` lex.
///
/// For `c = 1` the index `u` is determined by `|S|`.
pub fn shamash_basis<F: Field>(
    taylor: &TaylorComplex<F>,
    degrees: &[u32],
    n: usize,
) -> Vec<ShamashBasisElement> {
    let c = degrees.len();
    let mut out = Vec::new();
    for k in (n % 2..=n.min(taylor.len())).step_by(2) {
        let m = ((n - k) / 2) as u32;
        for u in DPIndex::compositions(c, m) {
            for s in taylor.basis(k) {
                out.push(ShamashBasisElement::new(u.clone(), s.clone(), degrees));
            }
        }
    }
    out
}

fn index_map(basis: &[ShamashBasisElement]) -> HashMap<(Vec<u32>, Vec<usize>), usize> {
    basis.iter().enumerate().map(|(i, b)| (b.key(), i)).collect()
}

fn assemble<F: Field>(
    system: &HomotopySystem<F>,
    domain: &[ShamashBasisElement],
    codomain: &[ShamashBasisElement],
) -> LabeledGradedMatrix<F, ShamashBasisElement> {
    let taylor = system.taylor();
    let index = index_map(codomain);
    let mut m = LabeledGradedMatrix::zeros(codomain.to_vec(), domain.to_vec());
    for (col, b) in domain.iter().enumerate() {
        let k = b.subset.len();
        let s_index = taylor
            .index_of(b.subset.members())
            .expect("subset belongs to the Taylor basis");
        let mut image: Vec<(usize, Polynomial<F>)> = Vec::new();
        if k >= 1 {
            let tau = taylor.differential(k);
            for (row, p) in tau.column(s_index) {
                let key = (b.u.parts().to_vec(), tau.rows()[row].members().to_vec());
                image.push((index[&key], p.clone()));
            }
        }
        for j in 0..b.u.len() {
            let Some(lower) = b.u.lower(j) else { continue };
            let sigma = system.sigma_e(j, k);
            for (row, p) in sigma.column(s_index) {
                let key = (lower.parts().to_vec(), sigma.rows()[row].members().to_vec());
                image.push((index[&key], p.clone()));
            }
        }
        for (row, p) in image {
            m.add_to(row, col, &p);
        }
    }
    m
}

/// `φ_n : F_n → F_{n−1}` for `n ≥ 1`.
pub fn shamash_differential<F: Field>(
    system: &HomotopySystem<F>,
    n: usize,
) -> LabeledGradedMatrix<F, ShamashBasisElement> {
    assert!(n >= 1, "differentials start at n = 1");
    let degrees = system.ci().degrees();
    let domain = shamash_basis(system.taylor(), degrees, n);
    let codomain = shamash_basis(system.taylor(), degrees, n - 1);
    assemble(system, &domain, &codomain)
}

/// `rank F_n = Σ_{k ≡ n (2), k ≤ min(r,n)} C(r,k)·C(c + (n−k)/2 − 1, c − 1)`.
pub fn rank_formula(r: usize, c: usize, n: usize) -> u128 {
    assert!(c >= 1, "codimension must be positive");
    (n % 2..=n.min(r))
        .step_by(2)
        .map(|k| {
            let m = (n - k) / 2;
            binomial(r as u128, k as u128) * binomial((c + m - 1) as u128, (c - 1) as u128)
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Upper bound for `β_{2m}` (even) or `β_{2m+1}` (odd) of `R/I` over `R`.
pub fn betti_bound(r: usize, c: usize, m: usize, parity: Parity) -> u128 {
    let (offset, extra) = match parity {
        Parity::Even => (0, 0),
        Parity::Odd => (1, 1),
    };
    (0..=m)
        .filter(|j| 2 * j + offset <= r)
        .map(|j| {
            binomial(r as u128, (2 * j + extra) as u128)
                * binomial((c + m - j - 1) as u128, (c - 1) as u128)
        })
        .sum()
}

/// A unit entry that prevents the resolution from being minimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MinimalityWitness {
    /// A Taylor entry `m_S / m_{S−s}` equal to a unit.
    TaylorUnit {
        k: usize,
        row: String,
        col: String,
        value: String,
    },
    /// A lift coefficient `f_{i,t}` with nonzero constant term (1-based).
    LiftUnit {
        element: usize,
        generator: usize,
        constant: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minimality {
    pub witnesses: Vec<MinimalityWitness>,
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// `F` is minimal iff the Taylor complex is minimal and every `f_{i,t}` lies
/// in the maximal ideal.
pub fn minimality_check<F: Field>(system: &HomotopySystem<F>) -> Minimality {
    let mut witnesses = Vec::new();
    let taylor = system.taylor();
    for k in 1..=taylor.len() {
        let tau = taylor.differential(k);
        for (row, col, p) in tau.entries() {
            if p.total_degree() == Some(0) {
                witnesses.push(MinimalityWitness::TaylorUnit {
                    k,
                    row: tau.rows()[row].label(),
                    col: tau.cols()[col].label(),
                    value: p.constant_term().to_string(),
                });
            }
        }
    }
    for (i, row) in system.lift().rows().iter().enumerate() {
        for (t, f) in row.iter().enumerate() {
            let c = f.constant_term();
            if !c.is_zero() {
                witnesses.push(MinimalityWitness::LiftUnit {
                    element: i + 1,
                    generator: t + 1,
                    constant: c.to_string(),
                });
            }
        }
    }
    Minimality { witnesses }
}

/// The stable 2-periodic pair of a hypersurface resolution.
///
/// `a` is `φ_{n₀}` with its rows relabelled from `F_{n₀−1}` to `F_{n₀+1}`,
/// `b` is `φ_{n₀+1}`; both composites are `a₁` times the identity.
#[derive(Debug, Clone)]
pub struct MatrixFactorization<F> {
    pub start: usize,
    pub element: Polynomial<F>,
    pub a: LabeledGradedMatrix<F, ShamashBasisElement>,
    pub b: LabeledGradedMatrix<F, ShamashBasisElement>,
}

impl<F: Field> MatrixFactorization<F> {
    /// Checks `AB = a·I` and `BA = a·I`.
    pub fn verify(&self) -> Report {
        let mut report = Report::new("matrix factorization AB = BA = a I");
        let products = [
            ("AB", self.a.compose(&self.b)),
            ("BA", self.b.compose(&self.a)),
        ];
        for (name, p) in products {
            report.checks += 1;
            let target = LabeledGradedMatrix::diagonal(
                p.rows().to_vec(),
                p.cols().to_vec(),
                &self.element,
            );
            let diff = p.sub(&target);
            if let Some((row, col)) = diff.first_nonzero() {
                report.fail(CheckFailure {
                    condition: format!("{name} = a I"),
                    degree: self.start,
                    witness: diff.cols()[col].label(),
                    detail: format!("row {}", diff.rows()[row].label()),
                });
            }
        }
        report
    }
}

/// The resolution `F_0 ← F_1 ← ⋯ ← F_N` with its diagnostics.
#[derive(Debug, Clone)]
pub struct ShamashResolution<F> {
    system: HomotopySystem<F>,
    max_step: usize,
    bases: Vec<Vec<ShamashBasisElement>>,
    differentials: Vec<LabeledGradedMatrix<F, ShamashBasisElement>>,
    minimality: Minimality,
    tail_start: Option<usize>,
}

impl<F: Field> ShamashResolution<F> {
    pub fn new(system: HomotopySystem<F>, max_step: usize) -> Self {
        let degrees = system.ci().degrees().to_vec();
        let bases: Vec<_> = (0..=max_step)
            .map(|n| shamash_basis(system.taylor(), &degrees, n))
            .collect();
        let differentials = (1..=max_step)
            .map(|n| assemble(&system, &bases[n], &bases[n - 1]))
            .collect();
        let minimality = minimality_check(&system);
        let mut res = ShamashResolution {
            system,
            max_step,
            bases,
            differentials,
            minimality,
            tail_start: None,
        };
        res.tail_start = res.tail_periodicity().ok().flatten();
        res
    }

    pub fn system(&self) -> &HomotopySystem<F> {
        &self.system
    }

    pub fn max_step(&self) -> usize {
        self.max_step
    }

    pub fn basis(&self, n: usize) -> &[ShamashBasisElement] {
        &self.bases[n]
    }

    pub fn bases(&self) -> &[Vec<ShamashBasisElement>] {
        &self.bases
    }

    pub fn rank(&self, n: usize) -> usize {
        self.bases[n].len()
    }

    /// `φ_n`, `1 ≤ n ≤ N`.
    pub fn differential(&self, n: usize) -> &LabeledGradedMatrix<F, ShamashBasisElement> {
        assert!(
            (1..=self.max_step).contains(&n),
            "phi_{n} is outside 1..={}",
            self.max_step
        );
        &self.differentials[n - 1]
    }

    pub fn differentials(&self) -> &[LabeledGradedMatrix<F, ShamashBasisElement>] {
        &self.differentials
    }

    pub fn minimality(&self) -> &Minimality {
        &self.minimality
    }

    /// Start of the periodic tail found at construction, if any.
    pub fn tail_start(&self) -> Option<usize> {
        self.tail_start
    }

    /// `L_j : F_{n+1} → F_{n−1}` scaled by `a_j`.
    fn lowering(&self, n: usize, j: usize) -> LabeledGradedMatrix<F, ShamashBasisElement> {
        let domain = &self.bases[n + 1];
        let codomain = &self.bases[n - 1];
        let index = index_map(codomain);
        let a = &self.system.ci().sequence()[j];
        let mut m = LabeledGradedMatrix::zeros(codomain.clone(), domain.clone());
        for (col, b) in domain.iter().enumerate() {
            if let Some(lower) = b.u.lower(j) {
                let row = index[&(lower.parts().to_vec(), b.subset.members().to_vec())];
                m.set(row, col, a.clone());
            }
        }
        m
    }

    /// `φ_n φ_{n+1} = Σ_j a_j L_j` for `1 ≤ n ≤ N − 1`.
    pub fn phi_squared_check(&self) -> Report {
        let mut report = Report::new("phi_n phi_(n+1) = sum a_j L_j");
        for n in 1..self.max_step {
            report.checks += 1;
            let mut diff = self.differential(n).compose(self.differential(n + 1));
            for j in 0..self.system.ci().codim() {
                diff = diff.sub(&self.lowering(n, j));
            }
            if let Some((row, col)) = diff.first_nonzero() {
                report.fail(CheckFailure {
                    condition: "phi^2 = sum a_j L_j".into(),
                    degree: n,
                    witness: diff.cols()[col].label(),
                    detail: format!("discrepancy in coefficient of {}", diff.rows()[row].label()),
                });
                break;
            }
        }
        report
    }

    /// Every nonzero entry of `φ_n` has degree `twist(col) − twist(row)`.
    pub fn homogeneity_report(&self) -> Report {
        let mut report = Report::new("phi homogeneity");
        for n in 1..=self.max_step {
            report.checks += 1;
            let phi = self.differential(n);
            if let Some(&(row, col)) = phi.degree_mismatches(0).first() {
                report.fail(CheckFailure {
                    condition: "deg phi entry = twist(col) - twist(row)".into(),
                    degree: n,
                    witness: phi.cols()[col].label(),
                    detail: format!("row {}", phi.rows()[row].label()),
                });
            }
        }
        report
    }

    /// `basis(n)` shifted by `u ↦ u + 1` equals `basis(n + 2)`.
    fn shift_matches(&self, n: usize) -> bool {
        let (from, to) = (&self.bases[n], &self.bases[n + 2]);
        from.len() == to.len()
            && from
                .iter()
                .zip(to)
                .all(|(a, b)| a.subset == b.subset && a.u.raise(0) == b.u)
    }

    fn stable_at(&self, n: usize) -> bool {
        self.shift_matches(n)
            && self.shift_matches(n - 1)
            && self.differential(n + 2).same_entries(self.differential(n))
    }

    /// Smallest `n₀ ≥ 1` with `φ_{n+2} = φ_n` under the shift for every
    /// `n₀ ≤ n ≤ N − 2`. At least two consecutive maps must be confirmed,
    /// so `n₀ ≤ N − 3`. Only defined for `c = 1`.
    pub fn tail_periodicity(&self) -> Result<Option<usize>> {
        if self.system.ci().codim() != 1 {
            return Err(Error::NotApplicable(
                "periodicity is only defined for a single element".into(),
            ));
        }
        let n_max = self.max_step.saturating_sub(2);
        let mut start = None;
        for n in (1..=n_max).rev() {
            if self.stable_at(n) {
                start = Some(n);
            } else {
                break;
            }
        }
        Ok(start.filter(|&n0| n0 + 3 <= self.max_step))
    }

    pub fn matrix_factorization(&self) -> Result<MatrixFactorization<F>> {
        let n0 = self
            .tail_periodicity()?
            .ok_or(Error::NoStableTail {
                max_step: self.max_step,
            })?;
        let a = self.differential(n0).with_rows(self.bases[n0 + 1].clone());
        let b = self.differential(n0 + 1).clone();
        Ok(MatrixFactorization {
            start: n0,
            element: self.system.ci().sequence()[0].clone(),
            a,
            b,
        })
    }
}
