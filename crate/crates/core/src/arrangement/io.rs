//! JSON arrangement files.
//!
//! ```json
//! {"dim": 2, "label": "two lines",
//!  "hyperplanes": [{"normal": ["1", "-2/3"], "offset": "1/2"},
//!                  {"normal": [0, 1], "offset": 0}]}
//! ```
//!
//! Rationals are strings `±p/q` or JSON integers. An optional
//! `"characteristic": p` reads the equations over `F_p`.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Arrangement, Hyperplane};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::linalg::GroundField;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn parse(&self) -> Result<Rational> {
        match self {
            Number::Int(i) => Ok(Rational::from_integer((*i).into())),
            Number::Text(s) => Rational::from_str(s.trim())
                .map_err(|_| Error::Parse(format!("not a rational number: {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HyperplaneFile {
    normal: Vec<Number>,
    offset: Number,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    dim: usize,
    hyperplanes: Vec<HyperplaneFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    characteristic: Option<u64>,
}

impl ArrangementFile {
    pub fn to_arrangement(&self) -> Result<Arrangement> {
        let field = match self.characteristic {
            None | Some(0) => GroundField::Rational,
            Some(p) => GroundField::Prime(p),
        };
        let mut hs = Vec::with_capacity(self.hyperplanes.len());
        for h in &self.hyperplanes {
            if h.normal.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: h.normal.len(),
                });
            }
            let normal = h
                .normal
                .iter()
                .map(Number::parse)
                .collect::<Result<Vec<_>>>()?;
            let offset = h.offset.parse()?;
            hs.push(match field {
                GroundField::Rational => Hyperplane::new(normal, offset)?,
                GroundField::Prime(_) => {
                    let int = |r: &Rational| {
                        if r.is_integer() {
                            Ok(r.to_integer())
                        } else {
                            Err(Error::Parse("entries over F_p must be integers".into()))
                        }
                    };
                    Hyperplane::from_raw(
                        normal.iter().map(int).collect::<Result<Vec<BigInt>>>()?,
                        int(&offset)?,
                    )
                }
            });
        }
        let a = Arrangement::new(self.dim, field, hs)?;
        Ok(match &self.label {
            Some(l) => a.with_label(l.clone()),
            None => a,
        })
    }

    pub fn from_arrangement(a: &Arrangement) -> Self {
        let num = |x: &BigInt| Number::Text(x.to_string());
        ArrangementFile {
            dim: a.dim(),
            hyperplanes: a
                .hyperplanes()
                .iter()
                .map(|h| HyperplaneFile {
                    normal: h.normal().iter().map(num).collect(),
                    offset: num(h.offset()),
                })
                .collect(),
            label: a.label().map(str::to_owned),
            characteristic: match a.field() {
                GroundField::Rational => None,
                GroundField::Prime(p) => Some(p),
            },
        }
    }
}

impl Arrangement {
    pub fn from_json(text: &str) -> Result<Arrangement> {
        let file: ArrangementFile = serde_json::from_str(text)?;
        file.to_arrangement()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ArrangementFile::from_arrangement(self))
            .expect("arrangement serializes")
    }

    pub fn read_json(path: impl AsRef<Path>) -> Result<Arrangement> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_strings_and_integers() {
        let a = Arrangement::from_json(
            r#"{"dim": 2, "label": "demo", "hyperplanes": [
                {"normal": ["1", "-2/3"], "offset": "1/2"},
                {"normal": [0, 0], "offset": 0}]}"#,
        )
        .unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.label(), Some("demo"));
        assert_eq!(
            a.hyperplane(0),
            &Hyperplane::from_ints(&[6, -4], 3).unwrap()
        );
        assert!(a.hyperplane(1).is_degenerate());
    }

    #[test]
    fn round_trip() {
        let a = Arrangement::from_int_rows(3, &[(vec![1, -1, 0], 2), (vec![0, 0, 5], -1)])
            .unwrap()
            .with_label("x");
        assert_eq!(Arrangement::from_json(&a.to_json()).unwrap(), a);
        let m = Arrangement::over_prime(3, 2, &[(vec![2, 1], 1)]).unwrap();
        assert_eq!(Arrangement::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = |s: &str| Arrangement::from_json(s).unwrap_err();
        assert!(matches!(bad("{"), Error::Parse(_)));
        assert!(matches!(
            bad(r#"{"dim": 2, "hyperplanes": [{"normal": ["1"], "offset": 0}]}"#),
            Error::DimensionMismatch {
                expected: 2,
                got: 1
            }
        ));
        assert_eq!(
            bad(r#"{"dim": 1, "hyperplanes": [{"normal": [0], "offset": 1}]}"#),
            Error::InvalidHyperplane
        );
        assert!(matches!(
            bad(r#"{"dim": 1, "hyperplanes": [{"normal": ["x"], "offset": 1}]}"#),
            Error::Parse(_)
        ));
    }
}
