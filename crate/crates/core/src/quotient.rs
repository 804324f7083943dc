//! Bounded-degree exactness checks over `Q/𝔞`.
//!
//! A small Buchberger implementation supplies normal forms and standard
//! monomials. The homology of `F_{n+1} → F_n → F_{n−1}` is then computed
//! degree by degree as a problem in finite-dimensional linear algebra.

use std::collections::HashMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{BasisLabel, LabeledGradedMatrix};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::report::{CheckFailure, Report};
use crate::shamash::ShamashResolution;

/// Limits after which Buchberger gives up with [`Error::CapExceeded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerCaps {
    /// S-pairs processed.
    pub max_pairs: usize,
    /// Largest lcm degree of a pair that may be processed.
    pub max_degree: u32,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps {
            max_pairs: 10_000,
            max_degree: 40,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<F> {
    generators: Vec<Polynomial<F>>,
    leading: Vec<Monomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|l| l.divides(m))
    }

    /// Standard monomials of degree `d`, in descending order.
    pub fn graded_piece(&self, nvars: usize, d: u32) -> GradedPieceBasis {
        let mut monomials: Vec<Monomial> = monomials_of_degree(nvars, d)
            .into_iter()
            .filter(|m| self.is_standard(m))
            .collect();
        monomials.sort_by(|a, b| self.order.cmp(b, a));
        GradedPieceBasis {
            degree: d,
            monomials,
        }
    }
}

/// Standard monomials spanning `(Q/𝔞)_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPieceBasis {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl GradedPieceBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }
}

pub(crate) fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn go(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
    } else {
        go(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    }
    out
}

fn monic<F: Field>(p: &Polynomial<F>, order: MonomialOrder) -> Polynomial<F> {
    match p.leading_term(order) {
        Some((_, c)) => p.scale(&c.inverse().expect("nonzero leading coefficient")),
        None => Polynomial::zero(),
    }
}

/// Remainder of `p` on division by `gens`, whose leading monomials are `leading`.
fn reduce<F: Field>(
    p: &Polynomial<F>,
    gens: &[Polynomial<F>],
    leading: &[Monomial],
    order: MonomialOrder,
) -> Polynomial<F> {
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero();
    while let Some((m, c)) = rest.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leading.iter().position(|l| l.divides(&m)) {
            Some(i) => {
                let q = m.divide(&leading[i]).expect("divisor checked");
                // generators are monic
                rest.add_scaled(&gens[i], &q, &-c);
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    remainder
}

fn s_polynomial<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    lf: &Monomial,
    lg: &Monomial,
) -> Polynomial<F> {
    let l = lf.lcm(lg);
    let mut s = f.mul_monomial(&l.divide(lf).expect("lcm"));
    s.add_scaled(g, &l.divide(lg).expect("lcm"), &-F::one());
    s
}

/// Gröbner basis of `gens` with respect to `order`.
///
/// Pairs are processed lowest lcm degree first; pairs with coprime leading
/// monomials are skipped. The result is reduced and monic.
pub fn buchberger<F: Field>(
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    caps: GroebnerCaps,
) -> Result<GroebnerBasis<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut leading: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = monic(g, order);
        leading.push(g.leading_term(order).expect("nonzero").0.clone());
        basis.push(g);
    }
    if basis.is_empty() {
        return Err(Error::InvalidIdeal("no nonzero generators".into()));
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    loop {
        let Some(pos) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| leading[i].lcm(&leading[j]).degree())
            .map(|(k, _)| k)
        else {
            break;
        };
        let (i, j) = pairs.remove(pos);
        if leading[i].is_coprime(&leading[j]) {
            continue;
        }
        let degree = leading[i].lcm(&leading[j]).degree();
        if degree > caps.max_degree {
            return Err(Error::CapExceeded(format!(
                "S-pair of degree {degree} exceeds max degree {}",
                caps.max_degree
            )));
        }
        processed += 1;
        if processed > caps.max_pairs {
            return Err(Error::CapExceeded(format!(
                "more than {} S-pairs",
                caps.max_pairs
            )));
        }
        let s = s_polynomial(&basis[i], &basis[j], &leading[i], &leading[j]);
        let h = reduce(&s, &basis, &leading, order);
        if !h.is_zero() {
            let h = monic(&h, order);
            let k = basis.len();
            leading.push(h.leading_term(order).expect("nonzero").0.clone());
            basis.push(h);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }

    // keep generators whose leading monomial is minimal, then inter-reduce
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            j != i
                && leading[j].divides(&leading[i])
                && (leading[j] != leading[i] || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut generators: Vec<Polynomial<F>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let lead: Vec<Monomial> = keep.iter().map(|&i| leading[i].clone()).collect();
    for i in 0..generators.len() {
        let tail = &generators[i] - &Polynomial::term(lead[i].clone(), F::one());
        let others: Vec<usize> = (0..generators.len()).filter(|&j| j != i).collect();
        let og: Vec<Polynomial<F>> = others.iter().map(|&j| generators[j].clone()).collect();
        let ol: Vec<Monomial> = others.iter().map(|&j| lead[j].clone()).collect();
        let tail = reduce(&tail, &og, &ol, order);
        generators[i] = &tail + &Polynomial::term(lead[i].clone(), F::one());
    }
    let mut idx: Vec<usize> = (0..generators.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&lead[b], &lead[a]));
    Ok(GroebnerBasis {
        generators: idx.iter().map(|&i| generators[i].clone()).collect(),
        leading: idx.iter().map(|&i| lead[i].clone()).collect(),
        order,
        reduced: true,
    })
}

/// Remainder of `p` modulo the basis; zero iff `p` lies in the ideal.
pub fn normal_form<F: Field>(p: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Polynomial<F> {
    reduce(p, &gb.generators, &gb.leading, gb.order)
}

/// Rank of a dense matrix by Gaussian elimination.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        for x in &mut rows[rank][col..] {
            *x = x.clone() * inv.clone();
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest {
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        rank += 1;
    }
    rank
}

/// Homology of `F_{n+1} → F_n → F_{n−1}` in one internal degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: u32,
    /// `dim (F_n)_d`
    pub dim: usize,
    /// `rank (φ_n)_d`
    pub rank_out: usize,
    /// `rank (φ_{n+1})_d`
    pub rank_in: usize,
    pub homology: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub report: Report,
    pub characteristic: u64,
    pub degrees: Vec<DegreeHomology>,
}

struct GradedPieces<'a, F> {
    gb: &'a GroebnerBasis<F>,
    nvars: usize,
    cache: HashMap<u32, (GradedPieceBasis, HashMap<Monomial, usize>)>,
}

impl<F: Field> GradedPieces<'_, F> {
    fn piece(&mut self, d: u32) -> &(GradedPieceBasis, HashMap<Monomial, usize>) {
        let (gb, nvars) = (self.gb, self.nvars);
        self.cache.entry(d).or_insert_with(|| {
            let basis = gb.graded_piece(nvars, d);
            let index = basis
                .monomials
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            (basis, index)
        })
    }

    /// Offsets of each summand inside `(⊕ R(−t_i))_d` and the total dimension.
    fn layout<L: BasisLabel>(&mut self, labels: &[L], d: u32) -> (Vec<Option<usize>>, usize) {
        let mut offsets = Vec::with_capacity(labels.len());
        let mut total = 0;
        for l in labels {
            match d.checked_sub(l.twist()) {
                Some(e) => {
                    offsets.push(Some(total));
                    total += self.piece(e).0.dim();
                }
                None => offsets.push(None),
            }
        }
        (offsets, total)
    }

    /// Dense matrix of `φ` restricted to internal degree `d`, one row per
    /// domain vector (rank is transpose invariant).
    fn restrict<L: BasisLabel>(&mut self, phi: &LabeledGradedMatrix<F, L>, d: u32) -> Vec<Vec<F>> {
        let (col_offsets, _) = self.layout(phi.cols(), d);
        let (row_offsets, row_dim) = self.layout(phi.rows(), d);
        let mut out = Vec::new();
        for (col, label) in phi.cols().iter().enumerate() {
            let Some(e) = d.checked_sub(label.twist()) else { continue };
            debug_assert!(col_offsets[col].is_some());
            let monomials = self.piece(e).0.monomials.clone();
            for mu in &monomials {
                let mut vector = vec![F::zero(); row_dim];
                for (row, p) in phi.column(col) {
                    let Some(offset) = row_offsets[row] else { continue };
                    let image = normal_form(&p.mul_monomial(mu), self.gb);
                    let Some(target) = d.checked_sub(phi.rows()[row].twist()) else {
                        continue;
                    };
                    let index = &self.piece(target).1;
                    for (m, c) in image.terms() {
                        // entries are homogeneous, so m has degree `target`
                        let i = index[m];
                        vector[offset + i] = vector[offset + i].clone() + c.clone();
                    }
                }
                out.push(vector);
            }
        }
        out
    }
}

/// Checks that `phi_out ∘ phi_in` is exact at the middle module in every
/// internal degree `d ≤ max_degree`, over `Q/⟨ideal⟩`.
pub fn exactness_window<F: Field, L: BasisLabel>(
    phi_out: &LabeledGradedMatrix<F, L>,
    phi_in: &LabeledGradedMatrix<F, L>,
    ideal: &[Polynomial<F>],
    nvars: usize,
    n: usize,
    max_degree: u32,
    caps: GroebnerCaps,
) -> Result<ExactnessReport> {
    if ideal.iter().all(Polynomial::is_zero) {
        return Err(Error::NotApplicable(
            "exactness over Q/a needs at least one nonzero element of a".into(),
        ));
    }
    if phi_out.ncols() != phi_in.nrows() {
        return Err(Error::ShapeMismatch("maps are not composable".into()));
    }
    let gb = buchberger(ideal, MonomialOrder::GradedReverseLex, caps)?;
    let mut pieces = GradedPieces {
        gb: &gb,
        nvars,
        cache: HashMap::new(),
    };
    let mut report = Report::new(format!("exactness at F_{n}"));
    let mut degrees = Vec::new();
    for d in 0..=max_degree {
        report.checks += 1;
        let (_, dim) = pieces.layout(phi_out.cols(), d);
        let rank_out = rank(pieces.restrict(phi_out, d));
        let rank_in = rank(pieces.restrict(phi_in, d));
        let homology = dim as i64 - rank_out as i64 - rank_in as i64;
        if homology != 0 {
            report.fail(CheckFailure {
                condition: format!("H_{n} = 0"),
                degree: n,
                witness: format!("internal degree {d}"),
                detail: format!(
                    "dim {dim}, rank phi_{n} = {rank_out}, rank phi_{} = {rank_in}",
                    n + 1
                ),
            });
        }
        degrees.push(DegreeHomology {
            degree: d,
            dim,
            rank_out,
            rank_in,
            homology: homology.max(0) as usize,
        });
    }
    Ok(ExactnessReport {
        report,
        characteristic: F::characteristic(),
        degrees,
    })
}

fn check_range<F: Field>(res: &ShamashResolution<F>, n: usize) -> Result<()> {
    if n == 0 || n + 1 > res.max_step() {
        return Err(Error::OutOfRange {
            what: "homological degree",
            value: n,
            max: res.max_step().saturating_sub(1),
        });
    }
    Ok(())
}

/// Exactness of a characteristic-zero resolution at `F_n`, checked after
/// reducing every coefficient into the prime field `G`.
pub fn check_exactness<G: Field>(
    res: &ShamashResolution<impl Field>,
    n: usize,
    max_degree: u32,
    caps: GroebnerCaps,
) -> Result<ExactnessReport> {
    check_range(res, n)?;
    let p = G::characteristic();
    let to_g = |c: &_| {
        let q: BigRational = Field::to_rational(c).ok_or_else(|| {
            Error::NotApplicable("coefficients are not rational; check in the native field".into())
        })?;
        G::from_rational(&q).ok_or_else(|| Error::BadPrime(p, format!("denominator of {q}")))
    };
    let phi_out = res.differential(n).map_coefficients(to_g)?;
    let phi_in = res.differential(n + 1).map_coefficients(to_g)?;
    let ideal = res
        .system()
        .ci()
        .sequence()
        .iter()
        .map(|a| a.try_map_coefficients(to_g))
        .collect::<Result<Vec<_>>>()?;
    let nvars = res.system().ci().ring().nvars();
    exactness_window(&phi_out, &phi_in, &ideal, nvars, n, max_degree, caps)
}

/// Exactness at `F_n` in the resolution's own coefficient field.
pub fn check_exactness_native<F: Field>(
    res: &ShamashResolution<F>,
    n: usize,
    max_degree: u32,
    caps: GroebnerCaps,
) -> Result<ExactnessReport> {
    check_range(res, n)?;
    exactness_window(
        res.differential(n),
        res.differential(n + 1),
        res.system().ci().sequence(),
        res.system().ci().ring().nvars(),
        n,
        max_degree,
        caps,
    )
}
