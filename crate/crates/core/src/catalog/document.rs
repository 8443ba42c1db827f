//! JSON documents describing a hypersurface and a list of factorizations.

use std::collections::HashSet;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{ArithError, PolyRing};
use crate::ideals::{IdealError, QuotientContext};
use crate::matfac::{MatfacError, MatrixFactorization, ModulePoint, PolyMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDecl {
    pub variables: Vec<String>,
    #[serde(default = "default_field")]
    pub field: String,
}

fn default_field() -> String {
    "QQ".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDecl {
    pub name: String,
    pub phi: Vec<Vec<String>>,
    pub psi: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub ring: RingDecl,
    pub potential: String,
    pub modules: Vec<ModuleDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed document at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("unsupported coefficient field `{0}` (only QQ)")]
    UnsupportedField(String),
    #[error("bad ring declaration: {0}")]
    Ring(ArithError),
    #[error("bad potential: {0}")]
    Potential(IdealError),
    #[error("module `{module}`, {matrix}[{row}][{col}]: {source}")]
    Entry { module: String, matrix: &'static str, row: usize, col: usize, source: ArithError },
    #[error("module `{module}`: {message}")]
    Shape { module: String, message: String },
    #[error("module `{module}`: {source}")]
    Validation { module: String, source: MatfacError },
    #[error("duplicate module name `{0}`")]
    DuplicateName(String),
    #[error("document lists no modules")]
    NoModules,
}

/// A validated document: its hypersurface and annihilated points, in order.
#[derive(Clone, Debug)]
pub struct LoadedCatalog {
    pub ctx: QuotientContext,
    pub points: Vec<ModulePoint>,
    pub provenance: Option<String>,
}

impl Document {
    pub fn from_json(src: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(src).map_err(|e| DocumentError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_factorizations(ctx: &QuotientContext, mfs: &[&MatrixFactorization], provenance: Option<String>) -> Self {
        Document {
            ring: RingDecl { variables: ctx.ring().variables().to_vec(), field: default_field() },
            potential: ctx.potential().to_string(),
            modules: mfs
                .iter()
                .map(|m| ModuleDecl {
                    name: m.label().to_string(),
                    phi: m.phi().row_strings(),
                    psi: m.psi().row_strings(),
                })
                .collect(),
            provenance,
        }
    }

    /// Parses and validates every module without computing annihilators.
    pub fn factorizations(&self) -> Result<(QuotientContext, Vec<MatrixFactorization>), DocumentError> {
        if self.ring.field != "QQ" {
            return Err(DocumentError::UnsupportedField(self.ring.field.clone()));
        }
        if self.modules.is_empty() {
            return Err(DocumentError::NoModules);
        }
        let ring = PolyRing::degrevlex(&self.ring.variables).map_err(DocumentError::Ring)?;
        let ctx = QuotientContext::parse(&ring, &self.potential).map_err(DocumentError::Potential)?;
        let mut seen = HashSet::new();
        let mut mfs = Vec::with_capacity(self.modules.len());
        for m in &self.modules {
            if !seen.insert(m.name.as_str()) {
                return Err(DocumentError::DuplicateName(m.name.clone()));
            }
            let phi = parse_matrix(&ring, &m.name, "phi", &m.phi)?;
            let psi = parse_matrix(&ring, &m.name, "psi", &m.psi)?;
            let mf = MatrixFactorization::new(&ctx, phi, psi, m.name.clone())
                .map_err(|source| DocumentError::Validation { module: m.name.clone(), source })?;
            mfs.push(mf);
        }
        Ok((ctx, mfs))
    }

    pub fn load(&self) -> Result<LoadedCatalog, DocumentError> {
        let (ctx, mfs) = self.factorizations()?;
        Ok(LoadedCatalog { ctx, points: annihilate_all(mfs), provenance: self.provenance.clone() })
    }
}

fn parse_matrix(
    ring: &PolyRing,
    module: &str,
    matrix: &'static str,
    rows: &[Vec<String>],
) -> Result<PolyMatrix, DocumentError> {
    let mut parsed = Vec::with_capacity(rows.len());
    for (row, entries) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(entries.len());
        for (col, s) in entries.iter().enumerate() {
            let p = ring.parse(s).map_err(|source| DocumentError::Entry {
                module: module.to_string(),
                matrix,
                row,
                col,
                source,
            })?;
            out.push(p);
        }
        parsed.push(out);
    }
    PolyMatrix::from_rows(ring, parsed)
        .map_err(|message| DocumentError::Shape { module: module.to_string(), message: format!("{matrix}: {message}") })
}

/// Computes every stable annihilator, in parallel, preserving order.
pub fn annihilate_all(mfs: Vec<MatrixFactorization>) -> Vec<ModulePoint> {
    mfs.into_par_iter().map(ModulePoint::new).collect()
}

pub fn load_document(path: impl AsRef<Path>) -> Result<LoadedCatalog, DocumentError> {
    let path = path.as_ref();
    let src = std::fs::read_to_string(path)
        .map_err(|e| DocumentError::Io { path: path.display().to_string(), message: e.to_string() })?;
    Document::from_json(&src)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = r#"{
        "ring": {"variables": ["y"], "field": "QQ"},
        "potential": "y^3",
        "modules": [
            {"name": "M_0", "phi": [["y"]], "psi": [["y^2"]]},
            {"name": "M_1", "phi": [["y^2"]], "psi": [["y"]]}
        ]
    }"#;

    #[test]
    fn load_small_document() {
        let cat = Document::from_json(A2).unwrap().load().unwrap();
        assert_eq!(cat.points.len(), 2);
        assert_eq!(cat.points[1].label(), "M_1");
        assert_eq!(cat.points[0].annihilator().to_string(), "(y)");
        assert!(cat.provenance.is_none());
    }

    #[test]
    fn document_errors() {
        let dup = A2.replace("\"M_1\"", "\"M_0\"");
        assert_eq!(Document::from_json(&dup).unwrap().load().unwrap_err(), DocumentError::DuplicateName("M_0".into()));
        let bad = A2.replace("[[\"y^2\"]]}", "[[\"y\"]]}");
        match Document::from_json(&bad).unwrap().load().unwrap_err() {
            DocumentError::Validation { module, source: MatfacError::IdentityViolation { row, col, .. } } => {
                assert_eq!((module.as_str(), row, col), ("M_0", 0, 0));
            }
            e => panic!("unexpected {e}"),
        }
        let typo = A2.replace("\"y^2\"]]}", "\"y^\"]]}");
        assert!(matches!(
            Document::from_json(&typo).unwrap().load().unwrap_err(),
            DocumentError::Entry { matrix: "psi", row: 0, col: 0, .. }
        ));
        let empty = r#"{"ring": {"variables": ["y"]}, "potential": "y^3", "modules": []}"#;
        assert_eq!(Document::from_json(empty).unwrap().load().unwrap_err(), DocumentError::NoModules);
        let field = A2.replace("\"QQ\"", "\"GF7\"");
        assert_eq!(Document::from_json(&field).unwrap().load().unwrap_err(), DocumentError::UnsupportedField("GF7".into()));
        assert!(matches!(Document::from_json("{\"ring\": 3"), Err(DocumentError::Json { line: 1, .. })));
    }

    #[test]
    fn round_trip() {
        let doc = Document::from_json(A2).unwrap();
        let (ctx, mfs) = doc.factorizations().unwrap();
        let refs: Vec<&MatrixFactorization> = mfs.iter().collect();
        let again = Document::from_factorizations(&ctx, &refs, None);
        assert_eq!(Document::from_json(&again.to_json()).unwrap(), again);
        assert_eq!(again.modules, doc.modules);
    }
}
