use std::fmt::Write;

use crate::field::Field;
use crate::matrix::{BasisLabel, LabeledGradedMatrix};
use crate::poly::PolyRing;
use crate::shamash::ShamashResolution;
use crate::taylor::TaylorComplex;

/// `R(-3) ⊕ R(-4)^3`, twists ascending; `0` for the zero module.
pub fn module_summary<L: BasisLabel>(basis: &[L]) -> String {
    if basis.is_empty() {
        return "0".into();
    }
    let mut twists: Vec<u32> = basis.iter().map(BasisLabel::twist).collect();
    twists.sort_unstable();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < twists.len() {
        let t = twists[i];
        let count = twists[i..].iter().take_while(|&&s| s == t).count();
        let summand = if t == 0 { "R".to_string() } else { format!("R(-{t})") };
        parts.push(if count == 1 {
            summand
        } else {
            format!("{summand}^{count}")
        });
        i += count;
    }
    parts.join(" ⊕ ")
}

fn width(s: &str) -> usize {
    s.chars().count()
}

/// An aligned matrix with column labels on top and row labels on the left.
/// `|` and dashed lines separate blocks.
pub fn text_matrix<F: Field, L: BasisLabel>(
    ring: &PolyRing<F>,
    name: &str,
    m: &LabeledGradedMatrix<F, L>,
) -> String {
    let mut out = String::new();
    writeln!(out, "{name}: {} x {}", m.nrows(), m.ncols()).unwrap();
    if m.nrows() == 0 || m.ncols() == 0 {
        return out;
    }
    let col_labels: Vec<String> = m.cols().iter().map(BasisLabel::label).collect();
    let row_labels: Vec<String> = m.rows().iter().map(BasisLabel::label).collect();
    let cells: Vec<Vec<String>> = (0..m.nrows())
        .map(|r| {
            (0..m.ncols())
                .map(|c| m.get(r, c).map_or_else(|| "0".to_string(), |p| ring.format(p)))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..m.ncols())
        .map(|c| {
            cells
                .iter()
                .map(|row| width(&row[c]))
                .chain([width(&col_labels[c])])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let label_width = row_labels.iter().map(|l| width(l)).max().unwrap_or(0);
    let col_div = m.col_dividers();
    let row_div = m.row_dividers();

    let line = |out: &mut String, head: &str, items: &[String]| {
        let mut s = format!("{head}{} ", " ".repeat(label_width - width(head)));
        for (c, item) in items.iter().enumerate() {
            s.push_str(if col_div.contains(&c) { " | " } else { "  " });
            s.push_str(&" ".repeat(widths[c] - width(item)));
            s.push_str(item);
        }
        writeln!(out, "{}", s.trim_end()).unwrap();
    };
    let rule = {
        let mut s = "-".repeat(label_width + 1);
        for (c, w) in widths.iter().enumerate() {
            s.push_str(if col_div.contains(&c) { "-+-" } else { "--" });
            s.push_str(&"-".repeat(*w));
        }
        s
    };

    line(&mut out, "", &col_labels);
    writeln!(out, "{rule}").unwrap();
    for (r, row) in cells.iter().enumerate() {
        if row_div.contains(&r) {
            writeln!(out, "{rule}").unwrap();
        }
        line(&mut out, &row_labels[r], row);
    }
    out
}

pub fn text_taylor<F: Field>(ring: &PolyRing<F>, taylor: &TaylorComplex<F>) -> String {
    let mut out = String::new();
    for k in 0..=taylor.len() {
        writeln!(out, "T_{k} = {}", module_summary(taylor.basis(k))).unwrap();
    }
    for k in 1..=taylor.len() {
        out.push('\n');
        out.push_str(&text_matrix(ring, &format!("tau_{k}"), taylor.differential(k)));
    }
    out
}

pub fn text_resolution<F: Field>(res: &ShamashResolution<F>) -> String {
    let ring = res.system().ci().ring();
    let mut out = String::new();
    for n in 0..=res.max_step() {
        writeln!(out, "F_{n} = {}", module_summary(res.basis(n))).unwrap();
    }
    for n in 1..=res.max_step() {
        out.push('\n');
        out.push_str(&text_matrix(ring, &format!("phi_{n}"), res.differential(n)));
    }
    out
}
