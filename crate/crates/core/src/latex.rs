//! LaTeX emission for matrices and representations.
//!
//! Matrices print as `smallmatrix` upper triangles: the diagonal is `0`,
//! entries above it are typeset, cells below it are left empty except for a
//! single `*` in the bottom-left corner standing for the skew reflection.
//! Coefficient symbols map to Greek (`T5` to `\Theta_{5}`, `P12` to
//! `\Phi_{12}`); rationals use `\frac`.

use crate::pfaffian::SkewMatrix;
use crate::repr::Representation;
use crate::ring::Ring;
use crate::text::{format_element, Style};

/// One skew matrix as a bracketed `smallmatrix` upper triangle.
pub fn skew_matrix(m: &SkewMatrix) -> String {
    let n = m.size();
    let ring = m.ring();
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut cells = Vec::with_capacity(n);
        for j in 1..=n {
            if j < i {
                cells.push(if i == n && j == 1 {
                    "*".to_string()
                } else {
                    String::new()
                });
            } else if j == i {
                cells.push("0".to_string());
            } else {
                let v = m.entry(i, j);
                cells.push(if ring.is_zero(&v) {
                    "0".to_string()
                } else {
                    format_element(ring, &v, Style::Latex)
                });
            }
        }
        rows.push(cells.join("&"));
    }
    format!(
        "\\left[\\begin{{smallmatrix}}\n{}\n\\end{{smallmatrix}}\\right]",
        rows.join("\\\\\n")
    )
}

/// The derived-entry name `a23` as `a_{2,3}`.
fn derived_label(name: &str) -> String {
    let mut chars = name.chars();
    match (chars.next(), chars.next(), chars.next()) {
        (Some(letter), Some(i), Some(j)) if name.len() == 3 => {
            format!("{letter}_{{{i},{j}}}")
        }
        _ => name.to_string(),
    }
}

/// A full representation: the pencil equation, the three matrices, and the
/// derived entries when present.
pub fn representation(rep: &Representation) -> String {
    let mut out = String::new();
    out.push_str("% pencil M = x A + y B + z C with Pf(M) = f\n");
    out.push_str("\\begin{align*}\n");
    let blocks: Vec<String> = rep
        .matrices()
        .iter()
        .map(|(name, m)| format!("{} &= {}", name, skew_matrix(m)))
        .collect();
    out.push_str(&blocks.join("\\,,\\\\\n"));
    out.push_str("\\,.\n\\end{align*}\n");
    if let Some(derived) = rep.derived() {
        let ring = rep.ring();
        out.push_str("% derived entries\n\\begin{align*}\n");
        let lines: Vec<String> = derived
            .iter()
            .map(|(name, v)| {
                format!(
                    "{} &= {}",
                    derived_label(name),
                    format_element(ring, v, Style::Latex)
                )
            })
            .collect();
        out.push_str(&lines.join("\\,,\\\\\n"));
        out.push_str("\\,.\n\\end{align*}\n");
    }
    out
}

/// An element in LaTeX syntax.
pub fn element(ring: &Ring, v: &crate::ring::Element) -> String {
    format_element(ring, v, Style::Latex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{build, CoefficientVector};

    #[test]
    fn two_by_two_layout() {
        let ring = Ring::integers();
        let m = SkewMatrix::from_upper(ring.clone(), 2, [((1, 2), ring.embed_int(5))]).unwrap();
        let tex = skew_matrix(&m);
        assert_eq!(
            tex,
            "\\left[\\begin{smallmatrix}\n0&5\\\\\n*&0\n\\end{smallmatrix}\\right]"
        );
    }

    #[test]
    fn symbols_map_to_greek() {
        let rep = build(&CoefficientVector::generic(2).unwrap()).unwrap();
        let tex = skew_matrix(rep.a());
        assert!(tex.contains("\\Theta_{4}"), "got: {tex}");
        let rep5 = build(&CoefficientVector::generic(5).unwrap()).unwrap();
        let tex5 = representation(&rep5);
        assert!(tex5.contains("\\Phi_{15}"));
        assert!(tex5.contains("a_{2,3} &= "));
    }

    #[test]
    fn derived_labels() {
        assert_eq!(derived_label("a23"), "a_{2,3}");
        assert_eq!(derived_label("b68"), "b_{6,8}");
        assert_eq!(derived_label("other"), "other");
    }
}
