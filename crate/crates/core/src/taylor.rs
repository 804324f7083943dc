//! The Taylor complex of a monomial ideal.
//!
//! `T_k` has one basis element `ε_S` for every `k`-subset `S` of the
//! generators, twisted by the degree of `m_S = lcm{m_s : s ∈ S}`, and
//!
//! ```text
//! τ_k(ε_S) = Σ_i (-1)^(k-i) (m_S / m_{S - s_i}) ε_{S - s_i}
//! ```
//!
//! where `s_i` is the `i`-th smallest element of `S` (1-indexed).

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{BasisLabel, LabeledGradedMatrix};
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::report::{CheckFailure, Report};

/// An ordered list of monomial generators `m₁,…,m_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
    warnings: Vec<String>,
}

impl MonomialIdeal {
    pub fn new(generators: Vec<Monomial>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidIdeal("an ideal needs at least one generator".into()))?;
        let n = first.nvars();
        if generators.iter().any(|m| m.nvars() != n) {
            return Err(Error::InvalidIdeal(
                "generators live in different rings".into(),
            ));
        }
        let mut warnings = Vec::new();
        for (i, j) in (0..generators.len()).tuple_combinations() {
            if generators[i] == generators[j] {
                warnings.push(format!(
                    "generators {} and {} coincide; the Taylor complex is not minimal",
                    i + 1,
                    j + 1
                ));
            }
        }
        Ok(MonomialIdeal {
            generators,
            warnings,
        })
    }

    /// Reads generators written in the polynomial grammar. Each must be a
    /// single term; its coefficient is discarded.
    pub fn parse<F: Field, S: AsRef<str>>(ring: &PolyRing<F>, srcs: &[S]) -> Result<Self> {
        let gens = srcs
            .iter()
            .map(|s| {
                let p = ring.parse(s.as_ref())?;
                match p.num_terms() {
                    0 => Err(Error::InvalidIdeal(format!(
                        "generator `{}` is zero",
                        s.as_ref()
                    ))),
                    1 => Ok(p.terms().next().expect("one term").0.clone()),
                    _ => Err(Error::InvalidIdeal(format!(
                        "generator `{}` is not a monomial",
                        s.as_ref()
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Number of generators `r`.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].nvars()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `m_S`, with `m_∅ = 1`. Indices are 0-based.
    pub fn lcm_of(&self, subset: &[usize]) -> Monomial {
        subset
            .iter()
            .fold(Monomial::one(self.nvars()), |acc, &s| acc.lcm(&self.generators[s]))
    }
}

/// A subset `S ⊆ [r]` naming the Taylor basis element `ε_S`, with its lcm
/// and degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetLabel {
    members: Vec<usize>,
    lcm: Monomial,
    degree: u32,
}

impl SubsetLabel {
    /// `members` are 0-based generator indices; they are sorted here.
    pub fn new(ideal: &MonomialIdeal, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&s| s >= ideal.len()) {
            return Err(Error::OutOfRange {
                what: "generator index",
                value: bad + 1,
                max: ideal.len(),
            });
        }
        let lcm = ideal.lcm_of(&members);
        let degree = lcm.degree();
        Ok(SubsetLabel {
            members,
            lcm,
            degree,
        })
    }

    /// 0-based, strictly increasing.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.members.iter().map(|s| s + 1).collect()
    }

    pub fn lcm(&self) -> &Monomial {
        &self.lcm
    }

    /// `v_S = deg m_S`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// 1-based position that `t` takes in `S ∪ {t}`.
    pub fn insertion_position(&self, t: usize) -> usize {
        self.members.partition_point(|&s| s < t) + 1
    }
}

/// Compact subset name: `∅`, `12`, `123`; comma separated once `r ≥ 10`.
pub fn subset_name(one_based: &[usize]) -> String {
    if one_based.is_empty() {
        "∅".to_string()
    } else if one_based.iter().all(|&s| s < 10) {
        one_based.iter().map(|s| s.to_string()).collect()
    } else {
        one_based.iter().join(",")
    }
}

impl BasisLabel for SubsetLabel {
    fn twist(&self) -> u32 {
        self.degree
    }

    fn same_block(&self, other: &Self) -> bool {
        self.len() == other.len()
    }

    fn label(&self) -> String {
        subset_name(&self.one_based())
    }
}

/// All `k`-subsets of `[r]` in lexicographic order.
pub fn taylor_basis(ideal: &MonomialIdeal, k: usize) -> Result<Vec<SubsetLabel>> {
    let r = ideal.len();
    if k > r {
        return Err(Error::OutOfRange {
            what: "Taylor degree",
            value: k,
            max: r,
        });
    }
    (0..r)
        .combinations(k)
        .map(|s| SubsetLabel::new(ideal, s))
        .collect()
}

fn index_map(basis: &[SubsetLabel]) -> HashMap<Vec<usize>, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members.clone(), i))
        .collect()
}

pub(crate) fn sign<F: Field>(exponent: i64) -> F {
    if exponent.rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}

fn build_differential<F: Field>(
    k: usize,
    domain: &[SubsetLabel],
    codomain: &[SubsetLabel],
) -> LabeledGradedMatrix<F, SubsetLabel> {
    let rows = index_map(codomain);
    let mut m = LabeledGradedMatrix::zeros(codomain.to_vec(), domain.to_vec());
    for (col, s) in domain.iter().enumerate() {
        for i in 0..k {
            let mut face = s.members.clone();
            face.remove(i);
            let row = rows[&face];
            let quotient = s
                .lcm
                .divide(&codomain[row].lcm)
                .expect("m_{S-s} divides m_S");
            let c = sign::<F>(k as i64 - (i as i64 + 1));
            m.set(row, col, Polynomial::term(quotient, c));
        }
    }
    m
}

/// `τ_k : T_k → T_{k-1}` for `1 ≤ k ≤ r`.
pub fn taylor_differential<F: Field>(
    ideal: &MonomialIdeal,
    k: usize,
) -> Result<LabeledGradedMatrix<F, SubsetLabel>> {
    if k == 0 || k > ideal.len() {
        return Err(Error::OutOfRange {
            what: "Taylor differential index",
            value: k,
            max: ideal.len(),
        });
    }
    let domain = taylor_basis(ideal, k)?;
    let codomain = taylor_basis(ideal, k - 1)?;
    Ok(build_differential(k, &domain, &codomain))
}

/// `(T_k, τ_k)` for all `0 ≤ k ≤ r`.
#[derive(Debug, Clone)]
pub struct TaylorComplex<F> {
    ideal: MonomialIdeal,
    bases: Vec<Vec<SubsetLabel>>,
    indices: Vec<HashMap<Vec<usize>, usize>>,
    differentials: Vec<LabeledGradedMatrix<F, SubsetLabel>>,
}

impl<F: Field> TaylorComplex<F> {
    pub fn new(ideal: MonomialIdeal) -> Self {
        let r = ideal.len();
        let bases: Vec<_> = (0..=r)
            .map(|k| taylor_basis(&ideal, k).expect("k ≤ r"))
            .collect();
        let indices = bases.iter().map(|b| index_map(b)).collect();
        let differentials = (1..=r)
            .map(|k| build_differential(k, &bases[k], &bases[k - 1]))
            .collect();
        TaylorComplex {
            ideal,
            bases,
            indices,
            differentials,
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Number of generators `r`; the complex has length `r`.
    pub fn len(&self) -> usize {
        self.ideal.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Basis of `T_k`; empty when `k > r`.
    pub fn basis(&self, k: usize) -> &[SubsetLabel] {
        self.bases.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Position of a subset (0-based members, sorted) in the basis of `T_|S|`.
    pub fn index_of(&self, members: &[usize]) -> Option<usize> {
        self.indices.get(members.len())?.get(members).copied()
    }

    /// `τ_k` for `1 ≤ k ≤ r`.
    pub fn differential(&self, k: usize) -> &LabeledGradedMatrix<F, SubsetLabel> {
        &self.differentials[k - 1]
    }

    /// `τ_k` for any `k`, with the zero map outside `1..=r`.
    pub fn differential_or_zero(&self, k: usize) -> LabeledGradedMatrix<F, SubsetLabel> {
        if k >= 1 && k <= self.len() {
            self.differentials[k - 1].clone()
        } else {
            let codomain = if k == 0 { vec![] } else { self.basis(k - 1).to_vec() };
            LabeledGradedMatrix::zeros(codomain, self.basis(k).to_vec())
        }
    }

    pub fn verify(&self) -> Report {
        let mut report = Report::new("taylor d^2 = 0");
        for k in 1..self.len() {
            report.checks += 1;
            let composite = self.differential(k).compose(self.differential(k + 1));
            let first = composite.entries().next().map(|(r, c, p)| (r, c, p.num_terms()));
            if let Some((row, col, nterms)) = first {
                report.fail(CheckFailure {
                    condition: "tau_k tau_{k+1} = 0".into(),
                    degree: k + 1,
                    witness: composite.cols()[col].label(),
                    detail: format!(
                        "nonzero coefficient on {} ({} terms)",
                        composite.rows()[row].label(),
                        nterms
                    ),
                });
                break;
            }
        }
        report
    }
}

/// Checks `τ_k ∘ τ_{k+1} = 0` for every `1 ≤ k < r`.
pub fn verify_taylor<F: Field>(ideal: &MonomialIdeal) -> Report {
    TaylorComplex::<F>::new(ideal.clone()).verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn ring() -> PolyRing<Rational> {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(&ring(), gens).unwrap()
    }

    #[test]
    fn basis_order_and_lcms() {
        let i = ideal(&["x*y", "x*z", "y*z"]);
        let b = taylor_basis(&i, 2).unwrap();
        let names: Vec<_> = b.iter().map(|s| s.label()).collect();
        assert_eq!(names, ["12", "13", "23"]);
        let xyz = Monomial::new(vec![1, 1, 1]);
        assert!(b.iter().all(|s| s.lcm() == &xyz && s.degree() == 3));

        let empty = taylor_basis(&i, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].lcm().is_one());
        assert_eq!(empty[0].degree(), 0);

        let top = taylor_basis(&ideal(&["x^2", "y^2", "z^2"]), 3).unwrap();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].degree(), 6);
        assert_eq!(top[0].lcm(), &Monomial::new(vec![2, 2, 2]));

        assert!(taylor_basis(&i, 4).is_err());
    }

    #[test]
    fn insertion_positions() {
        let i = ideal(&["x", "y", "z"]);
        let s = SubsetLabel::new(&i, vec![1]).unwrap();
        assert_eq!(s.insertion_position(0), 1);
        assert_eq!(s.insertion_position(2), 2);
        assert_eq!(SubsetLabel::new(&i, vec![]).unwrap().insertion_position(2), 1);
    }

    #[test]
    fn single_generator() {
        let i = ideal(&["x"]);
        let t = TaylorComplex::<Rational>::new(i);
        assert!(t.verify().passed());
        assert_eq!(t.verify().checks, 0);
        let d = t.differential(1);
        assert_eq!((d.nrows(), d.ncols()), (1, 1));
        assert_eq!(d.entry(0, 0), ring().parse("x").unwrap());
    }

    #[test]
    fn duplicates_warn() {
        let i = ideal(&["x", "y", "x"]);
        assert_eq!(i.warnings().len(), 1);
        assert!(verify_taylor::<Rational>(&i).passed());
        assert!(MonomialIdeal::parse(&ring(), &["x+y"]).is_err());
        assert!(MonomialIdeal::parse(&ring(), &["0"]).is_err());
        assert!(MonomialIdeal::new(vec![]).is_err());
    }

    #[test]
    fn subset_names() {
        assert_eq!(subset_name(&[]), "∅");
        assert_eq!(subset_name(&[1, 2, 3]), "123");
        assert_eq!(subset_name(&[2, 11]), "2,11");
    }
}
