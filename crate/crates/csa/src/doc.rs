//! The JSON documents consumed and produced by the command-line tools.
//!
//! Polynomials travel as ascending coefficient lists of exact rational
//! strings, so t^2 + t/2 + 1 is `["1", "1/2", "1"]`. Every document type
//! pairs a serde shape with a conversion into the checked core type; the
//! serde step reports malformed JSON, the conversion step reports
//! documents that are well-formed but wrong.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::brauer::{quaternion_to_csa, Csa, SplittingOverride};
use crate::charpoly::CharPolyVerdict;
use crate::classes::{ClassInvariant, Partition, RcfStructure};
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::quat::{QuatAlgebra, QuatElt, QuatMat};
use crate::rat::{parse_rat, Rat};
use crate::splitting::{Place, SplittingType};

fn json_err(err: serde_json::Error) -> Error {
    Error::Document(err.to_string())
}

/// Ascending coefficient list for a polynomial document.
pub fn poly_to_doc(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(Rat::to_string).collect()
}

pub fn poly_from_doc(coeffs: &[String]) -> Result<RatPoly> {
    let coeffs = coeffs
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<Rat>>>()?;
    Ok(RatPoly::from_coeffs(coeffs))
}

/// Quaternion shorthand: the algebra with i^2 = a, j^2 = b.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuaternionDoc {
    pub a: String,
    pub b: String,
}

impl QuaternionDoc {
    pub fn to_algebra(&self) -> Result<QuatAlgebra> {
        QuatAlgebra::new(parse_rat(&self.a)?, parse_rat(&self.b)?)
    }
}

/// One local invariant: a place (`"inf"` or a prime) and a rational value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantEntry {
    pub place: String,
    pub value: String,
}

/// An algebra Mat_capacity(D) described either by the local invariants of
/// its division part or by a quaternion shorthand. Exactly one of the two
/// forms must be present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub capacity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Vec<InvariantEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quaternion: Option<QuaternionDoc>,
}

impl AlgebraDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_err)
    }

    pub fn to_csa(&self) -> Result<Csa> {
        match (&self.invariants, &self.quaternion) {
            (Some(_), Some(_)) => Err(Error::Document(
                "give either invariants or a quaternion pair, not both".into(),
            )),
            (None, None) => Err(Error::Document(
                "an algebra needs invariants or a quaternion pair".into(),
            )),
            (None, Some(q)) => {
                let alg = q.to_algebra()?;
                quaternion_to_csa(alg.a(), alg.b(), self.capacity)
            }
            (Some(entries), None) => {
                let mut invariants = BTreeMap::new();
                for entry in entries {
                    let place = Place::from_str(&entry.place)?;
                    let value = parse_rat(&entry.value)?;
                    if invariants.insert(place, value).is_some() {
                        return Err(Error::Document(format!(
                            "place {} listed twice",
                            entry.place
                        )));
                    }
                }
                Csa::new(self.capacity, invariants)
            }
        }
    }

    /// The quaternion form, required by the matrix-level commands.
    pub fn to_quaternion(&self) -> Result<(QuatAlgebra, usize)> {
        match &self.quaternion {
            Some(q) => Ok((q.to_algebra()?, self.capacity)),
            None => Err(Error::Document(
                "this command needs the quaternion form of the algebra".into(),
            )),
        }
    }
}

/// One override row: a known local splitting for (poly, place).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverrideEntry {
    pub poly: Vec<String>,
    pub place: String,
    pub local_degrees: Vec<usize>,
}

pub fn overrides_from_json(text: &str) -> Result<SplittingOverride> {
    let entries: Vec<OverrideEntry> = serde_json::from_str(text).map_err(json_err)?;
    let mut table = SplittingOverride::empty();
    for entry in entries {
        let g = poly_from_doc(&entry.poly)?;
        let place = Place::from_str(&entry.place)?;
        table.insert(g, place, entry.local_degrees)?;
    }
    Ok(table)
}

/// A conjugacy-class invariant: one partition per monic irreducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub assignments: Vec<ClassAssignment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassAssignment {
    pub poly: Vec<String>,
    pub partition: Vec<usize>,
}

impl ClassDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_err)
    }

    pub fn to_class(&self) -> Result<ClassInvariant> {
        let mut assignments = BTreeMap::new();
        for entry in &self.assignments {
            let g = poly_from_doc(&entry.poly)?;
            let lambda = Partition::new(entry.partition.clone())?;
            if assignments.insert(g, lambda).is_some() {
                return Err(Error::Document(format!(
                    "polynomial {} assigned twice",
                    poly_from_doc(&entry.poly)?
                )));
            }
        }
        ClassInvariant::new(assignments)
    }

    pub fn from_class(class: &ClassInvariant) -> Self {
        ClassDoc {
            assignments: class
                .assignments()
                .iter()
                .map(|(g, lambda)| ClassAssignment {
                    poly: poly_to_doc(g),
                    partition: lambda.parts().to_vec(),
                })
                .collect(),
        }
    }
}

/// A square matrix over a quaternion algebra, entries as [w, x, y, z]
/// coordinate strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub algebra: QuaternionDoc,
    pub n: usize,
    pub entries: Vec<Vec<[String; 4]>>,
}

impl MatrixDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_err)
    }

    pub fn to_matrix(&self) -> Result<QuatMat> {
        let algebra = self.algebra.to_algebra()?;
        if self.entries.len() != self.n {
            return Err(Error::Document(format!(
                "expected {} rows, got {}",
                self.n,
                self.entries.len()
            )));
        }
        let mut flat = Vec::with_capacity(self.n * self.n);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.n {
                return Err(Error::Document(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    self.n
                )));
            }
            for [w, x, y, z] in row {
                flat.push(QuatElt::new(
                    parse_rat(w)?,
                    parse_rat(x)?,
                    parse_rat(y)?,
                    parse_rat(z)?,
                ));
            }
        }
        QuatMat::new(algebra, self.n, flat)
    }

    pub fn from_matrix(m: &QuatMat) -> Self {
        let show = |q: &QuatElt| {
            [
                q.w.to_string(),
                q.x.to_string(),
                q.y.to_string(),
                q.z.to_string(),
            ]
        };
        MatrixDoc {
            algebra: QuaternionDoc {
                a: m.algebra().a().to_string(),
                b: m.algebra().b().to_string(),
            },
            n: m.n(),
            entries: (0..m.n())
                .map(|i| (0..m.n()).map(|j| show(m.entry(i, j))).collect())
                .collect(),
        }
    }
}

/// The decision output: overall answer plus one certificate per factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub answer: bool,
    pub factors: Vec<FactorDoc>,
}

/// Certificate for one irreducible factor p^a: the component dimension n
/// and tensor capacity c are present only when the divisibility condition
/// on a*deg(p) held, matching the staged evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub p: Vec<String>,
    pub a: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    pub cond_a: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cond_b: Option<bool>,
}

impl VerdictDoc {
    pub fn from_verdict(v: &CharPolyVerdict) -> Self {
        VerdictDoc {
            answer: v.answer,
            factors: v
                .certificates
                .iter()
                .map(|cert| FactorDoc {
                    p: poly_to_doc(&cert.factor),
                    a: cert.multiplicity,
                    n: cert.component_dim,
                    c: cert.tensor_capacity,
                    cond_a: cert.cond_a,
                    cond_b: cert.cond_b,
                })
                .collect(),
        }
    }
}

/// Local splitting report for one place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingDoc {
    pub place: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<LocalFactorDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFactorDoc {
    pub e: usize,
    pub f: usize,
}

impl SplittingDoc {
    pub fn new(place: &Place, st: &SplittingType) -> Self {
        match st {
            SplittingType::Archimedean { real, complex } => SplittingDoc {
                place: place.to_string(),
                real: Some(*real),
                complex: Some(*complex),
                factors: None,
            },
            SplittingType::Finite { factors } => SplittingDoc {
                place: place.to_string(),
                real: None,
                complex: None,
                factors: Some(
                    factors
                        .iter()
                        .map(|lf| LocalFactorDoc { e: lf.e, f: lf.f })
                        .collect(),
                ),
            },
        }
    }
}

/// Rational canonical form report, mirroring the symbolic block data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcfDoc {
    pub factors: Vec<RcfFactorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcfFactorDoc {
    pub poly: Vec<String>,
    pub partition: Vec<usize>,
    pub component_dim: usize,
    pub morita_multiplicity: usize,
    pub division_degree: usize,
    pub top_exponent: usize,
    pub block_exponents: Vec<usize>,
}

impl RcfDoc {
    pub fn from_structure(rcf: &RcfStructure) -> Self {
        RcfDoc {
            factors: rcf
                .factors
                .iter()
                .map(|f| RcfFactorDoc {
                    poly: poly_to_doc(&f.factor),
                    partition: f.partition.parts().to_vec(),
                    component_dim: f.component_dim,
                    morita_multiplicity: f.morita_multiplicity,
                    division_degree: f.division_degree,
                    top_exponent: f.top_exponent,
                    block_exponents: f.block_exponents.clone(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn poly_doc_round_trip() {
        let p = RatPoly::from_coeffs(vec![rat_int(1), rat(1, 2), rat_int(1)]);
        let doc = poly_to_doc(&p);
        assert_eq!(doc, vec!["1", "1/2", "1"]);
        assert_eq!(poly_from_doc(&doc).unwrap(), p);
        assert_eq!(poly_to_doc(&RatPoly::zero()), Vec::<String>::new());
        assert_eq!(poly_from_doc(&[]).unwrap(), RatPoly::zero());
    }

    #[test]
    fn algebra_doc_quaternion_form() {
        let doc = AlgebraDoc::from_json(
            r#"{ "quaternion": {"a": "-1", "b": "-1"}, "capacity": 2 }"#,
        )
        .unwrap();
        let algebra = doc.to_csa().unwrap();
        assert_eq!(algebra.capacity(), 2);
        assert_eq!(algebra.division_degree(), 2);
        let (quat, n) = doc.to_quaternion().unwrap();
        assert_eq!(n, 2);
        assert_eq!(*quat.a(), rat_int(-1));
    }

    #[test]
    fn algebra_doc_invariant_form() {
        let doc = AlgebraDoc::from_json(
            r#"{ "capacity": 1,
                 "invariants": [ {"place": "2", "value": "1/2"},
                                 {"place": "inf", "value": "1/2"} ] }"#,
        )
        .unwrap();
        let algebra = doc.to_csa().unwrap();
        assert!(algebra.is_division());
        assert_eq!(algebra.division_degree(), 2);
        assert!(doc.to_quaternion().is_err());
    }

    #[test]
    fn algebra_doc_rejects_bad_shapes() {
        assert!(AlgebraDoc::from_json(r#"{ "capacity": 1 }"#)
            .unwrap()
            .to_csa()
            .is_err());
        assert!(AlgebraDoc::from_json(
            r#"{ "capacity": 1, "quaternion": {"a": "-1", "b": "-1"},
                 "invariants": [] }"#
        )
        .unwrap()
        .to_csa()
        .is_err());
        assert!(AlgebraDoc::from_json(r#"{ "capacity": 1, "extra": 3 }"#).is_err());
        let dup = AlgebraDoc::from_json(
            r#"{ "capacity": 1,
                 "invariants": [ {"place": "2", "value": "1/2"},
                                 {"place": "2", "value": "0"} ] }"#,
        )
        .unwrap();
        assert!(matches!(dup.to_csa(), Err(Error::Document(_))));
    }

    #[test]
    fn override_doc_builds_table() {
        let table = overrides_from_json(
            r#"[ {"poly": ["2", "0", "1"], "place": "7", "local_degrees": [1, 1]} ]"#,
        )
        .unwrap();
        let g = RatPoly::from_ints(&[2, 0, 1]);
        assert_eq!(
            table.get(&g, &Place::finite(7)),
            Some(&vec![1usize, 1])
        );
    }

    #[test]
    fn class_doc_round_trip() {
        let doc = ClassDoc::from_json(
            r#"{ "assignments": [ {"poly": ["1", "0", "1"], "partition": [2, 1]} ] }"#,
        )
        .unwrap();
        let class = doc.to_class().unwrap();
        assert_eq!(ClassDoc::from_class(&class), doc);
        let dup = ClassDoc {
            assignments: vec![
                ClassAssignment {
                    poly: vec!["1".into(), "0".into(), "1".into()],
                    partition: vec![1],
                },
                ClassAssignment {
                    poly: vec!["1".into(), "0".into(), "1".into()],
                    partition: vec![2],
                },
            ],
        };
        assert!(dup.to_class().is_err());
    }

    #[test]
    fn matrix_doc_round_trip() {
        let text = r#"{
            "algebra": {"a": "-1", "b": "-1"},
            "n": 1,
            "entries": [[["1/2", "0", "-1", "3"]]]
        }"#;
        let doc = MatrixDoc::from_json(text).unwrap();
        let m = doc.to_matrix().unwrap();
        assert_eq!(m.entry(0, 0).w, rat(1, 2));
        assert_eq!(MatrixDoc::from_matrix(&m), doc);

        let ragged = MatrixDoc {
            algebra: QuaternionDoc {
                a: "-1".into(),
                b: "-1".into(),
            },
            n: 2,
            entries: vec![vec![["0".into(), "0".into(), "0".into(), "0".into()]]],
        };
        assert!(ragged.to_matrix().is_err());
    }

    #[test]
    fn verdict_doc_shape() {
        let algebra = quaternion_to_csa(&rat_int(-1), &rat_int(-1), 1).unwrap();
        let verdict = crate::charpoly::is_characteristic_polynomial(
            &algebra,
            &RatPoly::from_ints(&[1, 0, 1]),
            &SplittingOverride::empty(),
        )
        .unwrap();
        let doc = VerdictDoc::from_verdict(&verdict);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains(r#""answer":true"#));
        assert!(json.contains(r#""cond_a":true"#));
        let back: VerdictDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);

        let rejected = crate::charpoly::is_characteristic_polynomial(
            &algebra,
            &RatPoly::from_ints(&[-2, 0, 1]),
            &SplittingOverride::empty(),
        )
        .unwrap();
        let doc = VerdictDoc::from_verdict(&rejected);
        assert!(!doc.answer);
        assert_eq!(doc.factors[0].cond_b, Some(false));
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains(r#""cond_b":false"#));
    }
}
