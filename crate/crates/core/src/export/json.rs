use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{BasisLabel, LabeledGradedMatrix};
use crate::poly::PolyRing;
use crate::shamash::{ShamashBasisElement, ShamashResolution};
use crate::taylor::{subset_name, SubsetLabel, TaylorComplex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDoc {
    pub vars: Vec<String>,
    pub char: u64,
}

/// One basis element: divided-power index, 1-based subset and twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleEntry {
    pub u: Vec<u32>,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub twist: u32,
}

impl From<&SubsetLabel> for ModuleEntry {
    fn from(l: &SubsetLabel) -> Self {
        ModuleEntry {
            u: vec![],
            s: l.one_based(),
            twist: l.degree(),
        }
    }
}

impl From<&ShamashBasisElement> for ModuleEntry {
    fn from(b: &ShamashBasisElement) -> Self {
        ModuleEntry {
            u: b.u().parts().to_vec(),
            s: b.subset().one_based(),
            twist: b.twist(),
        }
    }
}

impl BasisLabel for ModuleEntry {
    fn twist(&self) -> u32 {
        self.twist
    }

    fn same_block(&self, other: &Self) -> bool {
        self.s.len() == other.s.len() && self.u == other.u
    }

    fn label(&self) -> String {
        let s = subset_name(&self.s);
        if self.u.is_empty() {
            s
        } else {
            let u: Vec<String> = self.u.iter().map(u32::to_string).collect();
            format!("{}:{s}", u.join(","))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub row: usize,
    pub col: usize,
    pub poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialDoc {
    pub from: usize,
    pub to: usize,
    pub entries: Vec<EntryDoc>,
}

/// Serialized complex: modules indexed by homological degree and the
/// sparse differentials between them, plus free-form verification reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub ring: RingDoc,
    pub ideal: Vec<String>,
    pub ci: Vec<String>,
    pub modules: Vec<Vec<ModuleEntry>>,
    pub differentials: Vec<DifferentialDoc>,
    #[serde(default)]
    pub reports: Map<String, Value>,
}

fn ring_doc<F: Field>(ring: &PolyRing<F>) -> RingDoc {
    RingDoc {
        vars: ring.var_names().to_vec(),
        char: ring.characteristic(),
    }
}

fn differential_doc<F: Field, L: BasisLabel>(
    ring: &PolyRing<F>,
    from: usize,
    m: &LabeledGradedMatrix<F, L>,
) -> DifferentialDoc {
    // row-major so the listing reads like the printed matrix
    let mut entries: Vec<EntryDoc> = m
        .entries()
        .map(|(row, col, p)| EntryDoc {
            row,
            col,
            poly: ring.format(p),
        })
        .collect();
    entries.sort_by_key(|e| (e.row, e.col));
    DifferentialDoc {
        from,
        to: from - 1,
        entries,
    }
}

impl Document {
    pub fn from_taylor<F: Field>(
        ring: &PolyRing<F>,
        taylor: &TaylorComplex<F>,
        reports: Map<String, Value>,
    ) -> Self {
        let ideal = taylor
            .ideal()
            .generators()
            .iter()
            .map(|m| ring.format_monomial(m))
            .collect();
        Document {
            ring: ring_doc(ring),
            ideal,
            ci: vec![],
            modules: (0..=taylor.len())
                .map(|k| taylor.basis(k).iter().map(ModuleEntry::from).collect())
                .collect(),
            differentials: (1..=taylor.len())
                .map(|k| differential_doc(ring, k, taylor.differential(k)))
                .collect(),
            reports,
        }
    }

    pub fn from_resolution<F: Field>(res: &ShamashResolution<F>, reports: Map<String, Value>) -> Self {
        let ci = res.system().ci();
        let ring = ci.ring();
        Document {
            ring: ring_doc(ring),
            ideal: ci
                .ideal()
                .generators()
                .iter()
                .map(|m| ring.format_monomial(m))
                .collect(),
            ci: ci.sequence().iter().map(|a| ring.format(a)).collect(),
            modules: res
                .bases()
                .iter()
                .map(|b| b.iter().map(ModuleEntry::from).collect())
                .collect(),
            differentials: (1..=res.max_step())
                .map(|n| differential_doc(ring, n, res.differential(n)))
                .collect(),
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Document(e.to_string()))
    }

    /// Ring described by the document, over `F`. The characteristic must
    /// agree with `F`.
    pub fn ring<F: Field>(&self) -> Result<PolyRing<F>> {
        if self.ring.char != F::characteristic() {
            return Err(Error::Document(format!(
                "document has characteristic {}, expected {}",
                self.ring.char,
                F::characteristic()
            )));
        }
        PolyRing::new(&self.ring.vars)
    }

    /// Rebuilds every differential as a labelled matrix.
    pub fn matrices<F: Field>(&self) -> Result<Vec<LabeledGradedMatrix<F, ModuleEntry>>> {
        let ring = self.ring::<F>()?;
        self.differentials
            .iter()
            .map(|d| {
                if d.to + 1 != d.from || d.from >= self.modules.len() {
                    return Err(Error::Document(format!(
                        "differential {} -> {} does not match the modules",
                        d.from, d.to
                    )));
                }
                let mut m = LabeledGradedMatrix::zeros(
                    self.modules[d.to].clone(),
                    self.modules[d.from].clone(),
                );
                for e in &d.entries {
                    if e.row >= m.nrows() || e.col >= m.ncols() {
                        return Err(Error::Document(format!(
                            "entry ({}, {}) outside a {} x {} matrix",
                            e.row,
                            e.col,
                            m.nrows(),
                            m.ncols()
                        )));
                    }
                    m.set(e.row, e.col, ring.parse(&e.poly)?);
                }
                Ok(m)
            })
            .collect()
    }
}
