//! Input parsing and validation for central hyperplane arrangements with
//! multiplicities.
//!
//! Input documents are JSON:
//!
//! ```json
//! {
//!   "affine_dim": 2,
//!   "hyperplanes": [
//!     { "coeffs": [1, -1], "mult": 1 },
//!     { "coeffs": ["1/2", 1], "mult": 2 }
//!   ]
//! }
//! ```
//!
//! Coefficients are exact rationals given as JSON integers or `"p/q"`
//! strings; floats are rejected.

use num_traits::Zero;
use serde::Deserialize;

use crate::error::Error;
use crate::rational::{parse_rat, Rat};

#[derive(Debug, Clone)]
pub struct Hyperplane {
    /// Linear form cutting out the hyperplane, length `affine_dim`.
    pub form: Vec<Rat>,
    pub mult: u32,
}

#[derive(Debug, Clone)]
pub struct ArrangementInput {
    pub affine_dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

#[derive(Deserialize)]
struct RawDocument {
    affine_dim: usize,
    hyperplanes: Vec<RawHyperplane>,
}

#[derive(Deserialize)]
struct RawHyperplane {
    coeffs: Vec<RawCoeff>,
    mult: u32,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Int(i64),
    Str(String),
}

impl RawCoeff {
    fn to_rat(&self) -> Result<Rat, Error> {
        match self {
            RawCoeff::Int(n) => Ok(crate::rational::rat_int(*n)),
            RawCoeff::Str(s) => parse_rat(s),
        }
    }
}

/// Parse and validate an arrangement document.
pub fn parse_arrangement(document: &str) -> Result<ArrangementInput, Error> {
    let raw: RawDocument =
        serde_json::from_str(document).map_err(|e| Error::BadDocument(e.to_string()))?;
    let mut hyperplanes = Vec::with_capacity(raw.hyperplanes.len());
    for (i, h) in raw.hyperplanes.iter().enumerate() {
        if h.coeffs.len() != raw.affine_dim {
            return Err(Error::BadFormLength {
                index: i,
                expected: raw.affine_dim,
                got: h.coeffs.len(),
            });
        }
        let form: Vec<Rat> = h
            .coeffs
            .iter()
            .map(RawCoeff::to_rat)
            .collect::<Result<_, _>>()?;
        hyperplanes.push(Hyperplane { form, mult: h.mult });
    }
    let input = ArrangementInput {
        affine_dim: raw.affine_dim,
        hyperplanes,
    };
    input.validate()?;
    Ok(input)
}

impl ArrangementInput {
    pub fn validate(&self) -> Result<(), Error> {
        if self.affine_dim < 2 {
            return Err(Error::AmbientTooSmall(self.affine_dim));
        }
        if self.hyperplanes.is_empty() {
            return Err(Error::BadDocument("no hyperplanes given".to_string()));
        }
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if h.form.iter().all(Rat::is_zero) {
                return Err(Error::ZeroForm(i));
            }
            if h.mult < 1 {
                return Err(Error::BadMultiplicity(i, h.mult));
            }
        }
        for i in 0..self.hyperplanes.len() {
            for j in (i + 1)..self.hyperplanes.len() {
                if proportional(&self.hyperplanes[i].form, &self.hyperplanes[j].form) {
                    return Err(Error::ProportionalForms(i, j));
                }
            }
        }
        Ok(())
    }

    /// Total degree `d` of the divisor.
    pub fn total_degree(&self) -> u64 {
        self.hyperplanes.iter().map(|h| h.mult as u64).sum()
    }

    /// The same arrangement with every multiplicity scaled by `k`.
    pub fn scaled(&self, k: u32) -> ArrangementInput {
        ArrangementInput {
            affine_dim: self.affine_dim,
            hyperplanes: self
                .hyperplanes
                .iter()
                .map(|h| Hyperplane {
                    form: h.form.clone(),
                    mult: h.mult * k,
                })
                .collect(),
        }
    }

    /// The same arrangement with the hyperplane list permuted:
    /// `out.hyperplanes[i] = self.hyperplanes[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> ArrangementInput {
        assert_eq!(perm.len(), self.hyperplanes.len());
        ArrangementInput {
            affine_dim: self.affine_dim,
            hyperplanes: perm
                .iter()
                .map(|&i| self.hyperplanes[i].clone())
                .collect(),
        }
    }
}

fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    // a and b are proportional over Q iff all 2x2 minors vanish
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const THREE_LINES: &str = r#"{
        "affine_dim": 2,
        "hyperplanes": [
            { "coeffs": [1, -1], "mult": 1 },
            { "coeffs": [1, 1], "mult": 1 },
            { "coeffs": [1, 0], "mult": 1 }
        ]
    }"#;

    #[test]
    fn parses_three_concurrent_lines() {
        let a = parse_arrangement(THREE_LINES).unwrap();
        assert_eq!(a.affine_dim, 2);
        assert_eq!(a.hyperplanes.len(), 3);
        assert_eq!(a.total_degree(), 3);
    }

    #[test]
    fn rejects_proportional_forms() {
        let doc = r#"{ "affine_dim": 2, "hyperplanes": [
            { "coeffs": [1, 0], "mult": 1 },
            { "coeffs": [2, 0], "mult": 1 }
        ]}"#;
        match parse_arrangement(doc) {
            Err(Error::ProportionalForms(0, 1)) => {}
            other => panic!("expected proportional-forms error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_multiplicity() {
        let doc = r#"{ "affine_dim": 2, "hyperplanes": [
            { "coeffs": [1, 0], "mult": 0 }
        ]}"#;
        assert!(matches!(
            parse_arrangement(doc),
            Err(Error::BadMultiplicity(0, 0))
        ));
    }

    #[test]
    fn rejects_floats_and_zero_forms() {
        let doc = r#"{ "affine_dim": 2, "hyperplanes": [
            { "coeffs": [0.5, 1], "mult": 1 }
        ]}"#;
        assert!(parse_arrangement(doc).is_err());
        let doc = r#"{ "affine_dim": 2, "hyperplanes": [
            { "coeffs": [0, 0], "mult": 1 }
        ]}"#;
        assert!(matches!(parse_arrangement(doc), Err(Error::ZeroForm(0))));
    }

    #[test]
    fn rejects_small_ambient() {
        let doc = r#"{ "affine_dim": 1, "hyperplanes": [
            { "coeffs": [1], "mult": 1 }
        ]}"#;
        assert!(matches!(
            parse_arrangement(doc),
            Err(Error::AmbientTooSmall(1))
        ));
    }

    #[test]
    fn accepts_rational_strings() {
        let doc = r#"{ "affine_dim": 2, "hyperplanes": [
            { "coeffs": ["1/2", "-3"], "mult": 2 }
        ]}"#;
        let a = parse_arrangement(doc).unwrap();
        assert_eq!(a.hyperplanes[0].form[0], crate::rational::rat(1, 2));
        assert_eq!(a.hyperplanes[0].form[1], crate::rational::rat_int(-3));
    }
}
