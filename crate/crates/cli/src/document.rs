//! JSON documents read and written by the CLI.

use std::path::Path;

use frobenius_core::{AxiomReport, Outcome64, Tensor64, Tolerance64, Witness64, WitnessKind};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed tensor document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field(field: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Rows of `P`; new basis vector `f_a` is column `a`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_change: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A structure tensor on disk: `table[i][j][k]` is the coefficient of `e_k`
/// in `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TensorDocument {
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub table: Vec<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unity_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl TensorDocument {
    pub fn read(path: &Path) -> Result<Self, DocumentError> {
        let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    /// Pretty JSON with a trailing newline; floats use shortest round-trip
    /// formatting.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("tensor documents serialise");
        s.push('\n');
        s
    }

    fn validate(&self) -> Result<(), DocumentError> {
        let n = self.dim;
        if n == 0 {
            return Err(field("dim", "must be positive"));
        }
        if n > frobenius_core::linalg::DEFAULT_MAX_DIM {
            return Err(field(
                "dim",
                format!("{n} exceeds the cap {}", frobenius_core::linalg::DEFAULT_MAX_DIM),
            ));
        }
        if self.basis_names.len() != n {
            return Err(field(
                "basis_names",
                format!("has {} entries, expected {n}", self.basis_names.len()),
            ));
        }
        if self.table.len() != n {
            return Err(field("table", format!("has {} slices, expected {n}", self.table.len())));
        }
        for (i, slice) in self.table.iter().enumerate() {
            if slice.len() != n {
                return Err(field(
                    format!("table[{i}]"),
                    format!("has {} rows, expected {n}", slice.len()),
                ));
            }
            for (j, row) in slice.iter().enumerate() {
                if row.len() != n {
                    return Err(field(
                        format!("table[{i}][{j}]"),
                        format!("has {} entries, expected {n}", row.len()),
                    ));
                }
            }
        }
        if let Some(u) = self.unity_index {
            if u >= n {
                return Err(field("unity_index", format!("{u} is out of range for dim {n}")));
            }
        }
        Ok(())
    }

    pub fn to_tensor(&self) -> Result<Tensor64, DocumentError> {
        let constants = self.table.iter().flatten().flatten().copied().collect();
        Tensor64::new(self.dim, constants, self.basis_names.clone(), self.unity_index).map_err(|e| {
            let name = if matches!(e, frobenius_core::AlgebraError::NotUnity(_)) {
                "unity_index"
            } else {
                "table"
            };
            field(name, e.to_string())
        })
    }

    pub fn from_tensor(t: &Tensor64, provenance: Option<Provenance>) -> Self {
        Self {
            dim: t.dim(),
            basis_names: t.basis_names().to_vec(),
            table: t.to_nested(),
            unity_index: t.unity_index(),
            provenance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToleranceDoc {
    pub eps: f64,
    pub rel: f64,
}

impl From<&Tolerance64> for ToleranceDoc {
    fn from(t: &Tolerance64) -> Self {
        Self {
            eps: t.eps(),
            rel: t.rel(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomDoc {
    pub has_unity: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unity: Option<Vec<f64>>,
    pub associative: bool,
    pub worst_assoc_residual: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_triple: Option<[usize; 3]>,
}

impl From<&AxiomReport<f64>> for AxiomDoc {
    fn from(r: &AxiomReport<f64>) -> Self {
        Self {
            has_unity: r.has_unity,
            unity: r.unity.as_ref().map(|u| u.coords().as_slice().to_vec()),
            associative: r.associative,
            worst_assoc_residual: r.worst_assoc_residual,
            witness_triple: r.witness_triple.map(|(i, j, k)| [i, j, k]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub kind: String,
    pub stage: String,
    pub residual: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<&Witness64> for WitnessDoc {
    fn from(w: &Witness64) -> Self {
        let v = |x: &frobenius_core::Element64| Some(x.coords().as_slice().to_vec());
        let mut doc = Self {
            kind: w.kind_name().to_string(),
            stage: w.stage.as_str().to_string(),
            residual: w.residual,
            a: None,
            b: None,
            triple: None,
            detail: None,
        };
        match &w.kind {
            WitnessKind::ZeroDivisor { a, b } => {
                doc.a = v(a);
                doc.b = v(b);
            }
            WitnessKind::NonAssociative { triple: (i, j, k) } => doc.triple = Some([*i, *j, *k]),
            WitnessKind::NoUnity => {}
            WitnessKind::NotAlgebraicStep { detail, pair } => {
                doc.detail = Some(detail.clone());
                if let Some((a, b)) = pair {
                    doc.a = v(a);
                    doc.b = v(b);
                }
            }
        }
        doc
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// Output of `classify`, `verify` and `shortcut`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    /// `Success` or the failure kind.
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Rows of the map from input coordinates to `1, i, j, k` coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homomorphism_residual: Option<f64>,
    /// Residual recomputed through quaternion arithmetic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomDoc>,
    pub tolerance: ToleranceDoc,
    pub timing: Timing,
}

impl ReportDocument {
    pub fn new(command: &str, outcome: &Outcome64, tol: &Tolerance64) -> Self {
        let mut r = Self {
            command: command.to_string(),
            outcome: String::new(),
            label: None,
            iso: None,
            homomorphism_residual: None,
            verify_residual: None,
            witness: None,
            axioms: None,
            tolerance: tol.into(),
            timing: Timing { elapsed_ms: 0.0 },
        };
        match outcome {
            Outcome64::Success { label, iso, residual } => {
                r.outcome = "Success".into();
                r.label = Some(label.to_string());
                r.iso = Some(iso.to_rows());
                r.homomorphism_residual = Some(*residual);
            }
            Outcome64::Failure(w) => {
                r.outcome = w.kind_name().into();
                r.witness = Some(w.into());
            }
        }
        r
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
        s.push('\n');
        s
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("{}: {}", self.command, self.outcome);
        if let Some(l) = &self.label {
            out += &format!(" ({l})");
        }
        out.push('\n');
        if let Some(iso) = &self.iso {
            out += "iso (input coordinates -> 1, i, j, k):\n";
            for row in iso {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>12.6}")).collect();
                out += &format!("  [{}]\n", cells.join(", "));
            }
        }
        if let Some(r) = self.homomorphism_residual {
            out += &format!("homomorphism residual: {r:e}\n");
        }
        if let Some(r) = self.verify_residual {
            out += &format!("independent check:     {r:e}\n");
        }
        if let Some(w) = &self.witness {
            out += &format!("witness: {} at stage {} (residual {:e})\n", w.kind, w.stage, w.residual);
            if let Some(a) = &w.a {
                out += &format!("  a = {a:?}\n");
            }
            if let Some(b) = &w.b {
                out += &format!("  b = {b:?}\n");
            }
            if let Some([i, j, k]) = w.triple {
                out += &format!("  (e{i} e{j}) e{k} != e{i} (e{j} e{k})\n");
            }
            if let Some(d) = &w.detail {
                out += &format!("  {d}\n");
            }
        }
        if let Some(a) = &self.axioms {
            out += &format!(
                "axioms: unity {}, associative {} (worst associator {:e})\n",
                if a.has_unity { "yes" } else { "no" },
                if a.associative { "yes" } else { "no" },
                a.worst_assoc_residual
            );
            if let Some(u) = &a.unity {
                out += &format!("  unity = {u:?}\n");
            }
            if let Some([i, j, k]) = a.witness_triple {
                out += &format!("  worst triple ({i}, {j}, {k})\n");
            }
        }
        out += &format!(
            "tolerance: eps {:e}, rel {:e}\n",
            self.tolerance.eps, self.tolerance.rel
        );
        out += &format!("elapsed: {:.3} ms\n", self.timing.elapsed_ms);
        out
    }
}
