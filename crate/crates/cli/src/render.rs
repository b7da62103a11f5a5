//! Plain-text and LaTeX emitters.

use std::fmt::Write;

use weylcoh::chartab::CharacterTable;
use weylcoh::cohomology::{EquivariantResult, PoincareResult};
use weylcoh::poly::{write_poly, PolyStyle};
use weylcoh::{ExactPoly, WeylData};

fn poly_in(p: &ExactPoly, var: &str) -> String {
    let mut s = String::new();
    write_poly(&mut s, p, var, PolyStyle::Plain).expect("write to string");
    s
}

pub fn classes_plain(w: &WeylData) -> String {
    let mut out = String::new();
    writeln!(out, "{} ({}), |W| = {}, degrees {:?}", w.cartan, w.cartan.group_name(), w.order, w.degrees).unwrap();
    let width = w
        .classes
        .iter()
        .map(|c| c.descriptor.to_string().len())
        .max()
        .unwrap_or(0);
    for c in &w.classes {
        writeln!(
            out,
            "{:<width$}  {:>8}  {}",
            c.descriptor.to_string(),
            c.size.to_string(),
            poly_in(&c.det_poly, "s")
        )
        .unwrap();
    }
    out
}

pub fn poincare_latex(r: &PoincareResult) -> String {
    format!(
        "P_t(H(R_{{{},{}}})) = {}",
        r.n,
        r.cartan.group_name(),
        r.poly.to_latex()
    )
}

pub fn equivariant_plain(r: &EquivariantResult) -> String {
    let coeffs: Vec<String> = r.truncation.iter().map(|c| c.to_string()).collect();
    format!("{}\n{}", r.series, coeffs.join(" "))
}

pub fn equivariant_latex(r: &EquivariantResult) -> String {
    format!(
        "P_t(H_G(R_{{{},{}}})) = \\frac{{{}}}{{{}}}",
        r.n,
        r.cartan.group_name(),
        r.series.numerator().to_latex(),
        r.series.denominator().to_latex()
    )
}

/// Character table with `χ_k` rows and cycle-notation columns.
pub fn char_table_plain(t: &CharacterTable) -> String {
    let headers: Vec<String> = t.columns.iter().map(|c| c.cycle_notation()).collect();
    let labels: Vec<String> = t
        .rows_in_chi_order()
        .into_iter()
        .map(|r| format!("χ_{} {}", t.chi_number(r), t.rows[r]))
        .collect();
    let label_width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(c, h)| {
            t.values
                .iter()
                .map(|row| row[c].to_string().len())
                .chain([h.len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = String::new();
    write!(out, "{:label_width$} |", "").unwrap();
    for (h, w) in headers.iter().zip(&widths) {
        write!(out, " {h:>w$}").unwrap();
    }
    out.push('\n');
    let rule = label_width + 2 + widths.iter().map(|w| w + 1).sum::<usize>();
    out.push_str(&"-".repeat(rule));
    out.push('\n');
    for (label, r) in labels.iter().zip(t.rows_in_chi_order()) {
        let pad = label_width - label.chars().count();
        write!(out, "{label}{} |", " ".repeat(pad)).unwrap();
        for (v, w) in t.values[r].iter().zip(&widths) {
            write!(out, " {v:>w$}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn char_table_latex(t: &CharacterTable) -> String {
    let mut out = String::new();
    writeln!(out, "\\begin{{tabular}}{{c|{}}}", "c".repeat(t.columns.len())).unwrap();
    let headers: Vec<String> = t.columns.iter().map(|c| c.cycle_notation()).collect();
    writeln!(out, "  & {}\\\\", headers.join(" & ")).unwrap();
    out.push_str("\\hline\n");
    for r in t.rows_in_chi_order() {
        let vals: Vec<String> = t.values[r].iter().map(|v| v.to_string()).collect();
        writeln!(out, "$\\chi_{{{}}}$ & {} \\\\", t.chi_number(r), vals.join(" & ")).unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}
