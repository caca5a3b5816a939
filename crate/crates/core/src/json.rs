//! JSON formats: quiver files and exact polynomials.
//!
//! Rationals travel as strings (`"p"` or `"p/q"`) so no precision is lost in
//! readers that parse numbers as doubles.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Rational};
use crate::quiver::Quiver;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub from: String,
    pub to: String,
    pub mult: u32,
}

impl QuiverFile {
    pub fn from_quiver(q: &Quiver) -> Self {
        QuiverFile {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowEntry {
                    from: q.vertices()[a.source].clone(),
                    to: q.vertices()[a.target].clone(),
                    mult: a.mult,
                })
                .collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        let index = |i: usize, field: &str, name: &str| {
            self.vertices.iter().position(|v| v == name).ok_or_else(|| {
                Error::input(format!("arrows[{i}].{field}: unknown vertex {name:?}"))
            })
        };
        let mut arrows = Vec::with_capacity(self.arrows.len());
        for (i, a) in self.arrows.iter().enumerate() {
            let s = index(i, "from", &a.from)?;
            let t = index(i, "to", &a.to)?;
            if s == t {
                return Err(Error::input(format!(
                    "arrows[{i}]: loop at vertex {:?}",
                    a.from
                )));
            }
            if a.mult == 0 {
                return Err(Error::input(format!(
                    "arrows[{i}].mult: must be at least 1"
                )));
            }
            arrows.push((s, t, a.mult));
        }
        Quiver::new(self.vertices.clone(), arrows)
    }
}

/// Parse and validate a quiver document.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let file: QuiverFile =
        serde_json::from_str(text).map_err(|e| Error::input(format!("quiver file: {e}")))?;
    file.to_quiver()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub terms: Vec<(i64, String)>,
    pub degree: Option<i64>,
}

impl PolynomialJson {
    pub fn from_polynomial(p: &LaurentPolynomial) -> Self {
        PolynomialJson {
            terms: p.terms().map(|(e, c)| (e, c.to_string())).collect(),
            degree: p.degree().ok(),
        }
    }

    pub fn to_polynomial(&self) -> Result<LaurentPolynomial> {
        let mut last = None;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if last.is_some_and(|l| l >= *e) {
                return Err(Error::input("polynomial exponents must strictly increase"));
            }
            last = Some(*e);
            let c =
                Rational::from_str(c).map_err(|_| Error::input(format!("bad rational {c:?}")))?;
            if num_traits::Zero::is_zero(&c) {
                return Err(Error::input(format!("zero coefficient at exponent {e}")));
            }
            terms.push((*e, c));
        }
        let p = LaurentPolynomial::from_terms(terms);
        if p.degree().ok() != self.degree {
            return Err(Error::input(
                "polynomial degree field disagrees with its terms",
            ));
        }
        Ok(p)
    }
}

pub fn parse_polynomial(text: &str) -> Result<LaurentPolynomial> {
    let doc: PolynomialJson =
        serde_json::from_str(text).map_err(|e| Error::input(format!("polynomial: {e}")))?;
    doc.to_polynomial()
}

/// `#[serde(with = ...)]` adapter writing a polynomial as [`PolynomialJson`].
pub mod polynomial {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        p: &LaurentPolynomial,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson::from_polynomial(p).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<LaurentPolynomial, D::Error> {
        PolynomialJson::deserialize(d)?
            .to_polynomial()
            .map_err(serde::de::Error::custom)
    }
}

/// Big integers as decimal strings.
pub mod bigints {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    #[test]
    fn quiver_file_examples() {
        let q = parse_quiver(r#"{"vertices":["1","2"],"arrows":[{"from":"1","to":"2","mult":2}]}"#)
            .unwrap();
        assert_eq!(q, Quiver::kronecker(2));
        let looped = r#"{"vertices":["1"],"arrows":[{"from":"1","to":"1","mult":1}]}"#;
        assert!(parse_quiver(looped)
            .unwrap_err()
            .to_string()
            .contains("loop"));
        let missing = r#"{"vertices":["1","2"],"arrows":[{"from":"1","to":"2"}]}"#;
        assert!(parse_quiver(missing)
            .unwrap_err()
            .to_string()
            .contains("mult"));
        let unknown = r#"{"vertices":["1","2"],"arrows":[{"from":"1","to":"3","mult":1}]}"#;
        assert!(parse_quiver(unknown)
            .unwrap_err()
            .to_string()
            .contains("arrows[0].to"));
        for bad in [
            r#"{"vertices":["1","2"],"arrows":[{"from":"1","to":"2","mult":0}]}"#,
            r#"{"vertices":["1","2"],"arrows":[{"from":"1","to":"2","mult":-1}]}"#,
            r#"{"vertices":["1","1"],"arrows":[]}"#,
            r#"{"vertices":["1"]"#,
        ] {
            assert_eq!(parse_quiver(bad).unwrap_err().exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn quiver_file_round_trip() {
        for q in [Quiver::point(), Quiver::kronecker(3), Quiver::triangle()] {
            let text = serde_json::to_string(&QuiverFile::from_quiver(&q)).unwrap();
            assert_eq!(parse_quiver(&text).unwrap(), q);
        }
    }

    #[test]
    fn polynomial_json() {
        let p = LaurentPolynomial::from_terms([
            (-2, rational(-1, 2)),
            (0, rational(1, 1)),
            (3, rational(7, 3)),
        ]);
        let text = serde_json::to_string(&PolynomialJson::from_polynomial(&p)).unwrap();
        assert_eq!(
            text,
            r#"{"terms":[[-2,"-1/2"],[0,"1"],[3,"7/3"]],"degree":3}"#
        );
        assert_eq!(parse_polynomial(&text).unwrap(), p);
        let zero =
            serde_json::to_string(&PolynomialJson::from_polynomial(&LaurentPolynomial::zero()))
                .unwrap();
        assert_eq!(zero, r#"{"terms":[],"degree":null}"#);
        assert!(parse_polynomial(&zero).unwrap().is_zero());
        assert!(parse_polynomial(r#"{"terms":[[1,"1"],[0,"1"]],"degree":1}"#).is_err());
        assert!(parse_polynomial(r#"{"terms":[[0,"0"]],"degree":0}"#).is_err());
        assert!(parse_polynomial(r#"{"terms":[[0,"1"]],"degree":2}"#).is_err());
    }
}
