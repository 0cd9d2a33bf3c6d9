//! JSON file format for structure constants.
//!
//! ```json
//! {
//!   "name": "H4",
//!   "field": "Q",
//!   "dim": 4,
//!   "labels": ["1", "g", "x", "gx"],
//!   "unit": ["1", "0", "0", "0"],
//!   "counit": ["1", "1", "0", "0"],
//!   "mult": [[1, 1, 0, "1"], [1, 2, 3, "1"]],
//!   "comult": [[0, 0, 0, "1"], [2, 2, 0, "1"], [2, 1, 2, "1"]],
//!   "antipode": [[0, 0, "1"], [2, 3, "-1"]]
//! }
//! ```
//!
//! `mult` entries `[i, j, k, c]` mean `e_i e_j` has coefficient `c` on `e_k`;
//! `comult` entries `[i, j, k, c]` mean `Δ(e_i)` has `c` on `e_j ⊗ e_k`;
//! `antipode` entries `[i, j, c]` mean `S(e_i)` has `c` on `e_j`. Omitted
//! entries are zero and repeated entries are summed. Scalars are strings:
//! `"-3/4"` over `Q` and `F_p`, polynomials in `z` such as `"1 + 2*z^2"` over
//! `Q(zeta_n)`, where `z` is a primitive `n`-th root of unity.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::hopf::{verify_axioms, HopfAlgebra, StructureConstants};
use crate::scalar::{Field, Scalar};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    #[serde(default)]
    pub mult: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub comult: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub antipode: Vec<(usize, usize, String)>,
}

/// `Q`, `F_p` (also `GF(p)`), `Q(zeta_n)` (also `Q(z_n)`, `cyclotomic:n`).
pub fn parse_field(text: &str) -> Result<Field, Error> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse {
        location: "field".into(),
        message: format!("unknown field descriptor {text:?}; expected Q, F_p or Q(zeta_n)"),
    };
    let number = |s: &str| s.parse::<u64>().map_err(|_| bad());
    if t == "Q" || t == "QQ" {
        return Ok(Field::rationals());
    }
    if let Some(p) = t.strip_prefix("F_").or_else(|| t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')'))) {
        return Ok(Field::prime(number(p)?)?);
    }
    let cyc = t
        .strip_prefix("Q(zeta_")
        .or_else(|| t.strip_prefix("Q(z_"))
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| t.strip_prefix("cyclotomic:"));
    match cyc {
        Some(n) => Ok(Field::cyclotomic(number(n)?)?),
        None => Err(bad()),
    }
}

fn parse_scalar(field: &Field, text: &str, location: String) -> Result<Scalar, Error> {
    field.parse_scalar(text).map_err(|e| Error::Parse {
        location,
        message: e.to_string(),
    })
}

fn check(index: usize, dim: usize, location: &str) -> Result<(), Error> {
    if index < dim {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            what: location.to_string(),
            index,
            dim,
        })
    }
}

impl AlgebraFile {
    pub fn from_algebra(h: &HopfAlgebra) -> Self {
        let sc = h.to_structure_constants();
        let s = |x: &Scalar| x.to_string();
        AlgebraFile {
            name: Some(h.name().to_string()),
            field: h.field().to_string(),
            dim: h.dim(),
            labels: Some(sc.labels.clone()),
            unit: sc.unit.iter().map(s).collect(),
            counit: sc.counit.iter().map(s).collect(),
            mult: sc.mult.iter().map(|(i, j, k, c)| (*i, *j, *k, s(c))).collect(),
            comult: sc.comult.iter().map(|(i, j, k, c)| (*i, *j, *k, s(c))).collect(),
            antipode: sc.antipode.iter().map(|(i, j, c)| (*i, *j, s(c))).collect(),
        }
    }

    /// Builds the algebra without checking the Hopf axioms.
    pub fn to_algebra(&self) -> Result<HopfAlgebra, Error> {
        let field = parse_field(&self.field)?;
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse {
                location: "dim".into(),
                message: "dimension must be positive".into(),
            });
        }
        let vector = |v: &[String], what: &str| -> Result<Vec<Scalar>, Error> {
            if v.len() != n {
                return Err(Error::Parse {
                    location: what.into(),
                    message: format!("expected {n} entries, found {}", v.len()),
                });
            }
            v.iter()
                .enumerate()
                .map(|(i, x)| parse_scalar(&field, x, format!("{what}[{i}]")))
                .collect()
        };
        let labels = match &self.labels {
            Some(l) if l.len() != n => {
                return Err(Error::Parse {
                    location: "labels".into(),
                    message: format!("expected {n} labels, found {}", l.len()),
                })
            }
            Some(l) => l.clone(),
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        let mut mult = Vec::with_capacity(self.mult.len());
        for (t, (i, j, k, c)) in self.mult.iter().enumerate() {
            let loc = format!("mult[{t}]");
            for x in [i, j, k] {
                check(*x, n, &loc)?;
            }
            mult.push((*i, *j, *k, parse_scalar(&field, c, loc)?));
        }
        let mut comult = Vec::with_capacity(self.comult.len());
        for (t, (i, j, k, c)) in self.comult.iter().enumerate() {
            let loc = format!("comult[{t}]");
            for x in [i, j, k] {
                check(*x, n, &loc)?;
            }
            comult.push((*i, *j, *k, parse_scalar(&field, c, loc)?));
        }
        let mut antipode = Vec::with_capacity(self.antipode.len());
        for (t, (i, j, c)) in self.antipode.iter().enumerate() {
            let loc = format!("antipode[{t}]");
            for x in [i, j] {
                check(*x, n, &loc)?;
            }
            antipode.push((*i, *j, parse_scalar(&field, c, loc)?));
        }
        let sc = StructureConstants {
            unit: vector(&self.unit, "unit")?,
            counit: vector(&self.counit, "counit")?,
            field,
            labels,
            mult,
            comult,
            antipode,
        };
        HopfAlgebra::from_structure_constants(self.name.clone().unwrap_or_else(|| "A".into()), sc)
    }

    /// Pretty JSON with one structure constant per line.
    pub fn to_json(&self) -> String {
        fn compact<T: Serialize>(v: &T) -> String {
            serde_json::to_string(v).expect("serializable")
        }
        fn table<T: Serialize>(entries: &[T]) -> String {
            if entries.is_empty() {
                return "[]".into();
            }
            let rows: Vec<String> = entries.iter().map(|e| format!("    {}", compact(e))).collect();
            format!("[\n{}\n  ]", rows.join(",\n"))
        }
        let mut fields = Vec::new();
        if let Some(name) = &self.name {
            fields.push(format!("  \"name\": {}", compact(name)));
        }
        fields.push(format!("  \"field\": {}", compact(&self.field)));
        fields.push(format!("  \"dim\": {}", self.dim));
        if let Some(labels) = &self.labels {
            fields.push(format!("  \"labels\": {}", compact(labels)));
        }
        fields.push(format!("  \"unit\": {}", compact(&self.unit)));
        fields.push(format!("  \"counit\": {}", compact(&self.counit)));
        fields.push(format!("  \"mult\": {}", table(&self.mult)));
        fields.push(format!("  \"comult\": {}", table(&self.comult)));
        fields.push(format!("  \"antipode\": {}", table(&self.antipode)));
        format!("{{\n{}\n}}", fields.join(",\n"))
    }

    /// SHA-256 of the canonical compact JSON encoding.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("serializable");
        Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Parses file contents; malformed JSON is reported with line and column.
pub fn parse_str(text: &str) -> Result<HopfAlgebra, Error> {
    parse_file_struct(text)?.to_algebra()
}

pub fn parse_file_struct(text: &str) -> Result<AlgebraFile, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

/// Reads, builds and verifies an algebra; axiom failures become [`Error::Axiom`].
pub fn parse(path: &Path) -> Result<HopfAlgebra, Error> {
    let text = std::fs::read_to_string(path)?;
    let h = parse_str(&text)?;
    let cert = verify_axioms(&h);
    let failure = cert.failures().next().map(|f| {
        format!(
            "{} fails at {:?}{}",
            f.name,
            f.witness.clone().unwrap_or_default(),
            f.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default()
        )
    });
    match failure {
        None => Ok(h),
        Some(msg) => Err(Error::Axiom(msg)),
    }
}

pub fn serialize(h: &HopfAlgebra) -> String {
    AlgebraFile::from_algebra(h).to_json()
}
