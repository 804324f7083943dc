use std::fmt::Write;

use crate::field::Field;
use crate::matrix::{BasisLabel, LabeledGradedMatrix};
use crate::poly::PolyRing;
use crate::shamash::ShamashResolution;
use crate::taylor::TaylorComplex;

fn latex_poly(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '*' => {}
            '^' => {
                out.push_str("^{");
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                    out.push(d);
                    chars.next();
                }
                out.push('}');
            }
            _ => out.push(ch),
        }
    }
    out
}

fn latex_label(label: &str) -> String {
    label.replace('∅', "\\emptyset")
}

/// A `blockarray` with column labels above and row labels to the right;
/// block boundaries become `|` in the column format and `\BAhhline` rows.
pub fn latex_matrix<F: Field, L: BasisLabel>(
    ring: &PolyRing<F>,
    name: &str,
    m: &LabeledGradedMatrix<F, L>,
) -> String {
    let mut out = String::new();
    writeln!(out, "{name} =").unwrap();
    if m.nrows() == 0 || m.ncols() == 0 {
        writeln!(out, "    0").unwrap();
        return out;
    }
    let ncols = m.ncols();
    writeln!(
        out,
        "    \\begin{{blockarray}}{{*{{{}}}{{>{{\\scriptstyle}}c}}<{{}}}}",
        ncols + 1
    )
    .unwrap();
    let header: Vec<String> = m.cols().iter().map(|l| latex_label(&l.label())).collect();
    writeln!(out, "    {} \\\\", header.join(" & ")).unwrap();
    let dividers = m.col_dividers();
    let columns: String = (0..ncols)
        .map(|c| if dividers.contains(&c) { "|r" } else { "r" })
        .collect();
    writeln!(
        out,
        "    \\begin{{block}}{{[{columns}]>{{\\scriptstyle}}c<{{}}}}"
    )
    .unwrap();
    let row_div = m.row_dividers();
    for r in 0..m.nrows() {
        if row_div.contains(&r) {
            writeln!(out, "    \\BAhhline{{{}}}", "-".repeat(ncols)).unwrap();
        }
        let cells: Vec<String> = (0..ncols)
            .map(|c| m.get(r, c).map_or_else(|| "0".into(), |p| latex_poly(&ring.format(p))))
            .collect();
        writeln!(
            out,
            "    {} & {} \\\\",
            cells.join(" & "),
            latex_label(&m.rows()[r].label())
        )
        .unwrap();
    }
    writeln!(out, "    \\end{{block}}").unwrap();
    writeln!(out, "    \\end{{blockarray}}").unwrap();
    out
}

pub fn latex_taylor<F: Field>(ring: &PolyRing<F>, taylor: &TaylorComplex<F>) -> String {
    let mut out = String::new();
    for k in 1..=taylor.len() {
        out.push_str("\\[\n");
        out.push_str(&latex_matrix(ring, &format!("\\tau_{{{k}}}"), taylor.differential(k)));
        out.push_str("\\]\n");
    }
    out
}

pub fn latex_resolution<F: Field>(res: &ShamashResolution<F>) -> String {
    let ring = res.system().ci().ring();
    let mut out = String::new();
    for n in 1..=res.max_step() {
        out.push_str("\\[\n");
        out.push_str(&latex_matrix(ring, &format!("\\varphi_{{{n}}}"), res.differential(n)));
        out.push_str("\\]\n");
    }
    out
}
