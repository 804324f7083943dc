//! Sparse polynomial matrices whose rows and columns are labelled by graded
//! basis elements.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::field::Field;
use crate::poly::Polynomial;

/// A basis element of a graded free module.
pub trait BasisLabel: Clone + Debug + PartialEq {
    /// Internal degree shift `k` of the summand `R(-k)`.
    fn twist(&self) -> u32;
    /// Whether two labels belong to the same block; dividers are drawn between blocks.
    fn same_block(&self, other: &Self) -> bool;
    /// Short label used by the exporters.
    fn label(&self) -> String;
}

/// A map between graded free modules, stored column by column.
///
/// Column `j` is the image of the `j`-th domain basis element, expressed in
/// the codomain basis given by `rows`.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGradedMatrix<F, L> {
    rows: Vec<L>,
    cols: Vec<L>,
    columns: Vec<BTreeMap<usize, Polynomial<F>>>,
}

impl<F: Field, L: BasisLabel> LabeledGradedMatrix<F, L> {
    pub fn zeros(rows: Vec<L>, cols: Vec<L>) -> Self {
        let columns = vec![BTreeMap::new(); cols.len()];
        LabeledGradedMatrix {
            rows,
            cols,
            columns,
        }
    }

    /// `p` times the identity; `rows` and `cols` must have equal length.
    pub fn diagonal(rows: Vec<L>, cols: Vec<L>, p: &Polynomial<F>) -> Self {
        assert_eq!(rows.len(), cols.len(), "diagonal matrix must be square");
        let mut m = Self::zeros(rows, cols);
        for i in 0..m.ncols() {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn rows(&self) -> &[L] {
        &self.rows
    }

    pub fn cols(&self) -> &[L] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Polynomial<F>> {
        self.columns[col].get(&row)
    }

    pub fn entry(&self, row: usize, col: usize) -> Polynomial<F> {
        self.get(row, col).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, row: usize, col: usize, p: Polynomial<F>) {
        assert!(row < self.nrows(), "row {row} out of range");
        if p.is_zero() {
            self.columns[col].remove(&row);
        } else {
            self.columns[col].insert(row, p);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, p: &Polynomial<F>) {
        let sum = match self.columns[col].get(&row) {
            Some(old) => old + p,
            None => p.clone(),
        };
        self.set(row, col, sum);
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, &Polynomial<F>)> {
        self.columns[col].iter().map(|(r, p)| (*r, p))
    }

    /// Nonzero entries as `(row, col, entry)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial<F>)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, p)| (*r, c, p)))
    }

    /// Position of the first nonzero entry in column-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.columns
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.keys().next().map(|r| (*r, c)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    /// The composite `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.ncols(),
            rhs.nrows(),
            "cannot compose {}x{} with {}x{}",
            self.nrows(),
            self.ncols(),
            rhs.nrows(),
            rhs.ncols()
        );
        let mut out = Self::zeros(self.rows.clone(), rhs.cols.clone());
        for (j, rcol) in rhs.columns.iter().enumerate() {
            let mut acc: BTreeMap<usize, Polynomial<F>> = BTreeMap::new();
            for (k, b) in rcol {
                for (i, a) in &self.columns[*k] {
                    let prod = a * b;
                    acc.entry(*i).or_default().add_assign_ref(&prod);
                }
            }
            acc.retain(|_, p| !p.is_zero());
            out.columns[j] = acc;
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows(), self.ncols()), (rhs.nrows(), rhs.ncols()));
        let mut out = self.clone();
        for (r, c, p) in rhs.entries() {
            out.add_to(r, c, p);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale_coeff(&-F::one()))
    }

    pub fn scale_coeff(&self, c: &F) -> Self {
        let mut out = Self::zeros(self.rows.clone(), self.cols.clone());
        for (r, col, e) in self.entries() {
            out.set(r, col, e.scale(c));
        }
        out
    }

    /// Multiplies every entry by `p`.
    pub fn scale(&self, p: &Polynomial<F>) -> Self {
        let mut out = Self::zeros(self.rows.clone(), self.cols.clone());
        for (r, c, e) in self.entries() {
            out.set(r, c, e * p);
        }
        out
    }

    /// Same entries with new row labels (used for shift identifications).
    pub fn with_rows(&self, rows: Vec<L>) -> Self {
        assert_eq!(rows.len(), self.nrows());
        LabeledGradedMatrix {
            rows,
            cols: self.cols.clone(),
            columns: self.columns.clone(),
        }
    }

    pub fn with_cols(&self, cols: Vec<L>) -> Self {
        assert_eq!(cols.len(), self.ncols());
        LabeledGradedMatrix {
            rows: self.rows.clone(),
            cols,
            columns: self.columns.clone(),
        }
    }

    /// Same entries under a different label type.
    pub fn map_labels<M: BasisLabel>(&self, mut f: impl FnMut(&L) -> M) -> LabeledGradedMatrix<F, M> {
        LabeledGradedMatrix {
            rows: self.rows.iter().map(&mut f).collect(),
            cols: self.cols.iter().map(&mut f).collect(),
            columns: self.columns.clone(),
        }
    }

    /// Entries equal as matrices, ignoring labels.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.nrows() == other.nrows() && self.columns == other.columns
    }

    /// Nonzero entries whose total degree differs from
    /// `twist(col) - twist(row) + offset`.
    pub fn degree_mismatches(&self, offset: i64) -> Vec<(usize, usize)> {
        self.entries()
            .filter(|(r, c, p)| {
                let expected =
                    self.cols[*c].twist() as i64 - self.rows[*r].twist() as i64 + offset;
                !p.is_homogeneous() || p.total_degree().map(i64::from) != Some(expected)
            })
            .map(|(r, c, _)| (r, c))
            .collect()
    }

    /// Positions `i` such that a divider sits between rows `i-1` and `i`.
    pub fn row_dividers(&self) -> Vec<usize> {
        dividers(&self.rows)
    }

    pub fn col_dividers(&self) -> Vec<usize> {
        dividers(&self.cols)
    }

    pub fn map_coefficients<G: Field, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<LabeledGradedMatrix<G, L>, E> {
        let mut out = LabeledGradedMatrix::zeros(self.rows.clone(), self.cols.clone());
        for (r, c, p) in self.entries() {
            out.set(r, c, p.try_map_coefficients(&mut f)?);
        }
        Ok(out)
    }
}

fn dividers<L: BasisLabel>(labels: &[L]) -> Vec<usize> {
    (1..labels.len())
        .filter(|&i| !labels[i].same_block(&labels[i - 1]))
        .collect()
}
