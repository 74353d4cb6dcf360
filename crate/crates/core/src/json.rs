//! JSON documents for matrices and representations.
//!
//! Two document shapes, both carrying elements as text in the ring's
//! element syntax:
//!
//! ```json
//! {"size": 4, "entries": [[1, 2, "5"], [3, 4, "-1"]]}
//! ```
//!
//! for a skew matrix (the ring is supplied by the caller), and
//!
//! ```json
//! {"degree": 2, "size": 4, "ring": "int",
//!  "matrices": {"A": [...], "B": [...], "C": [...]},
//!  "derived": {"a23": "..."}}
//! ```
//!
//! for a representation, where `ring` is `int`, `rat`, `mod:n`, or `sym`
//! (the generic coefficient ring of the document's degree) and `derived`
//! appears only at degree 5. Emission is deterministic: entries ascend by
//! position and maps are sorted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pfaffian::SkewMatrix;
use crate::repr::{symbolic_coefficient_ring, Representation};
use crate::ring::Ring;

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    size: usize,
    entries: Vec<(usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
struct MatricesDoc {
    #[serde(rename = "A")]
    a: Vec<(usize, usize, String)>,
    #[serde(rename = "B")]
    b: Vec<(usize, usize, String)>,
    #[serde(rename = "C")]
    c: Vec<(usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
struct RepresentationDoc {
    degree: u32,
    size: usize,
    ring: String,
    matrices: MatricesDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    derived: Option<BTreeMap<String, String>>,
}

fn bad_json(err: &serde_json::Error) -> Error {
    Error::parse(0, format!("invalid JSON: {err}"))
}

fn entries_out(m: &SkewMatrix) -> Vec<(usize, usize, String)> {
    m.upper_entries()
        .map(|(&(i, j), v)| (i, j, m.ring().format_element(v)))
        .collect()
}

fn entries_in(ring: &Ring, size: usize, entries: &[(usize, usize, String)]) -> Result<SkewMatrix> {
    let parsed = entries
        .iter()
        .map(|(i, j, text)| Ok(((*i, *j), ring.parse_element(text)?)))
        .collect::<Result<Vec<_>>>()?;
    SkewMatrix::from_upper(ring.clone(), size, parsed)
}

/// Serializes a skew matrix (ring carried out of band).
pub fn skew_to_json(m: &SkewMatrix) -> String {
    let doc = MatrixDoc {
        size: m.size(),
        entries: entries_out(m),
    };
    serde_json::to_string_pretty(&doc).expect("document serializes")
}

/// Parses a skew matrix document, interpreting entries in `ring`.
pub fn skew_from_json(ring: &Ring, text: &str) -> Result<SkewMatrix> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| bad_json(&e))?;
    entries_in(ring, doc.size, &doc.entries)
}

/// The ring token a representation serializes under.
pub fn ring_token_for(rep: &Representation) -> Result<String> {
    if let Some(tok) = rep.ring().token() {
        return Ok(tok);
    }
    if rep.ring() == &symbolic_coefficient_ring(rep.degree())? {
        return Ok("sym".into());
    }
    Err(Error::InvalidRing(
        "only int, rat, mod:n, and the generic symbolic coefficient ring have a JSON form".into(),
    ))
}

/// Resolves a document ring token; `sym` needs the degree to pick the
/// right coefficient symbols.
pub fn ring_from_token(token: &str, degree: u32) -> Result<Ring> {
    if token == "sym" {
        symbolic_coefficient_ring(degree)
    } else {
        Ring::parse_token(token)
    }
}

/// Serializes a representation.
pub fn representation_to_json(rep: &Representation) -> Result<String> {
    let ring = rep.ring();
    let derived = rep.derived().map(|map| {
        map.iter()
            .map(|(name, v)| (name.clone(), ring.format_element(v)))
            .collect()
    });
    let doc = RepresentationDoc {
        degree: rep.degree(),
        size: rep.size(),
        ring: ring_token_for(rep)?,
        matrices: MatricesDoc {
            a: entries_out(rep.a()),
            b: entries_out(rep.b()),
            c: entries_out(rep.c()),
        },
        derived,
    };
    Ok(serde_json::to_string_pretty(&doc).expect("document serializes"))
}

/// Parses a representation document back into matrices over its ring.
pub fn representation_from_json(text: &str) -> Result<Representation> {
    let doc: RepresentationDoc = serde_json::from_str(text).map_err(|e| bad_json(&e))?;
    let ring = ring_from_token(&doc.ring, doc.degree)?;
    if doc.size != 2 * doc.degree as usize {
        return Err(Error::ShapeError(format!(
            "document claims size {} for degree {}",
            doc.size, doc.degree
        )));
    }
    let a = entries_in(&ring, doc.size, &doc.matrices.a)?;
    let b = entries_in(&ring, doc.size, &doc.matrices.b)?;
    let c = entries_in(&ring, doc.size, &doc.matrices.c)?;
    let derived = match doc.derived {
        Some(map) => {
            let mut parsed = BTreeMap::new();
            for (name, text) in map {
                parsed.insert(name, ring.parse_element(&text)?);
            }
            Some(parsed)
        }
        None => None,
    };
    Representation::new(doc.degree, a, b, c, derived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::repr::{build, form_ring, represent, verify, CoefficientVector};

    #[test]
    fn matrix_roundtrip() {
        let ring = Ring::integers();
        let m = SkewMatrix::from_upper(
            ring.clone(),
            4,
            [
                ((1, 2), ring.embed_int(2)),
                ((1, 3), ring.embed_int(-3)),
                ((3, 4), ring.embed_int(5)),
            ],
        )
        .unwrap();
        let text = skew_to_json(&m);
        let back = skew_from_json(&ring, &text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn matrix_rejects_malformed_documents() {
        let ring = Ring::integers();
        assert!(matches!(
            skew_from_json(&ring, "not json"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            skew_from_json(&ring, r#"{"size": 3, "entries": []}"#),
            Err(Error::ShapeError(_))
        ));
        assert!(matches!(
            skew_from_json(&ring, r#"{"size": 4, "entries": [[2, 1, "5"]]}"#),
            Err(Error::IndexError(_))
        ));
        assert!(matches!(
            skew_from_json(&ring, r#"{"size": 4, "entries": [[1, 2, "x"]]}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn representation_roundtrip_over_scalar_rings() {
        for ring in [
            Ring::integers(),
            Ring::rationals(),
            Ring::modular(6).unwrap(),
        ] {
            let fring = form_ring(ring.clone()).unwrap();
            let fp = fring.as_poly().unwrap().clone();
            let f = MultiPoly::parse(&fp, "x^4 + 2*y^4 - z^4 + x*y*z^2").unwrap();
            let rep = represent(&f, None).unwrap();
            let text = representation_to_json(&rep).unwrap();
            let back = representation_from_json(&text).unwrap();
            assert_eq!(back, rep);
            assert!(verify(&back, &f, false).unwrap().pfaffian_matches);
        }
    }

    #[test]
    fn representation_roundtrip_symbolic_with_derived() {
        let rep = build(&CoefficientVector::generic(5).unwrap()).unwrap();
        let text = representation_to_json(&rep).unwrap();
        assert!(text.contains("\"sym\""));
        assert!(text.contains("\"derived\""));
        let back = representation_from_json(&text).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn representation_rejects_inconsistent_documents() {
        let doc = r#"{"degree": 2, "size": 6, "ring": "int",
                      "matrices": {"A": [], "B": [], "C": []}}"#;
        assert!(matches!(
            representation_from_json(doc),
            Err(Error::ShapeError(_))
        ));
        let doc = r#"{"degree": 2, "size": 4, "ring": "complex",
                      "matrices": {"A": [], "B": [], "C": []}}"#;
        assert!(matches!(
            representation_from_json(doc),
            Err(Error::InvalidRing(_))
        ));
    }
}
