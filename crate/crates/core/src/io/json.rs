//! JSON documents for systems, structure constants and Darboux expressions.
//!
//! ```text
//! system     {"vars":[..], "params":[..]?, "fields":[[coeff × |vars|]..]}
//! structure  {"dim":d, "basis_prefix":"e"?, "brackets":[{"i","j","k","c"}..]}
//! darboux    {"factors":[[base, exponent]..], "exp":[[coeff, kind, arg]..]}
//! ```
//!
//! Indices in structure documents are 1-based and must satisfy `i < j`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Ctx, VarContext};
use crate::error::{Error, Result};
use crate::fields::{FieldSystem, VectorField};
use crate::invariants::{AtomKind, DarbouxExpr, ExpAtom, Factor};
use crate::lie::StructureConstants;

use super::parse::parse_scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<String>,
    pub fields: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDocument {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_prefix: Option<String>,
    pub brackets: Vec<BracketDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DarbouxDocument {
    pub factors: Vec<(String, String)>,
    pub exp: Vec<(String, String, String)>,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

impl SystemDocument {
    pub fn lower(&self) -> Result<FieldSystem> {
        let ctx = VarContext::new(self.vars.iter().cloned(), self.params.iter().cloned())?;
        let mut members = Vec::with_capacity(self.fields.len());
        for (i, row) in self.fields.iter().enumerate() {
            if row.len() != ctx.num_vars() {
                return Err(Error::Arity {
                    field: i + 1,
                    expected: ctx.num_vars(),
                    found: row.len(),
                });
            }
            let coeffs = row
                .iter()
                .map(|t| parse_scalar(t, &ctx))
                .collect::<Result<Vec<_>>>()?;
            members.push(VectorField::new(&ctx, coeffs)?);
        }
        FieldSystem::new(&ctx, members)
    }

    pub fn from_system(s: &FieldSystem) -> Self {
        SystemDocument {
            vars: s.ctx().variables().to_vec(),
            params: s.ctx().parameters().to_vec(),
            fields: s
                .members()
                .iter()
                .map(|m| m.coeffs().iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

/// Reads a field system; all fields share one context.
pub fn parse_system(text: &str) -> Result<FieldSystem> {
    from_json::<SystemDocument>(text)?.lower()
}

pub fn print_system(s: &FieldSystem) -> String {
    to_json(&SystemDocument::from_system(s))
}

/// Context in which bracket constants are read; names are rejected later.
fn constant_ctx() -> Ctx {
    VarContext::with_variables(["_"]).expect("valid name")
}

pub fn parse_structure(text: &str) -> Result<StructureConstants> {
    let doc: StructureDocument = from_json(text)?;
    let ctx = constant_ctx();
    let mut entries = Vec::with_capacity(doc.brackets.len());
    for b in &doc.brackets {
        if b.i == 0 || b.j == 0 || b.k == 0 {
            return Err(Error::Schema("bracket indices are 1-based".into()));
        }
        let c = parse_scalar(&b.c, &ctx)?.constant_value().ok_or_else(|| {
            Error::Schema(format!("structure constant `{}` is not a number", b.c))
        })?;
        entries.push((b.i - 1, b.j - 1, b.k - 1, c));
    }
    let sc = StructureConstants::new(doc.dim, entries)?;
    Ok(match doc.basis_prefix {
        Some(p) => sc.with_prefix(p),
        None => sc,
    })
}

impl StructureDocument {
    pub fn from_structure(sc: &StructureConstants) -> Self {
        StructureDocument {
            dim: sc.dim(),
            basis_prefix: (sc.basis_prefix() != "e").then(|| sc.basis_prefix().to_string()),
            brackets: sc
                .entries()
                .into_iter()
                .map(|(i, j, k, c)| BracketDocument {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    c: c.to_string(),
                })
                .collect(),
        }
    }
}

pub fn print_structure(sc: &StructureConstants) -> String {
    to_json(&StructureDocument::from_structure(sc))
}

pub fn parse_darboux(text: &str, ctx: &Ctx) -> Result<DarbouxExpr> {
    let doc: DarbouxDocument = from_json(text)?;
    let factors = doc
        .factors
        .iter()
        .map(|(b, e)| {
            Ok(Factor {
                base: parse_scalar(b, ctx)?,
                exponent: parse_scalar(e, ctx)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let atoms = doc
        .exp
        .iter()
        .map(|(c, kind, arg)| {
            Ok(ExpAtom {
                coeff: parse_scalar(c, ctx)?,
                kind: AtomKind::parse(kind)?,
                arg: parse_scalar(arg, ctx)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    DarbouxExpr::new(ctx, factors, atoms)
}

pub fn print_darboux(f: &DarbouxExpr) -> String {
    let doc = DarbouxDocument {
        factors: f
            .factors()
            .iter()
            .map(|x| (x.base.to_string(), x.exponent.to_string()))
            .collect(),
        exp: f
            .atoms()
            .iter()
            .map(|a| {
                (
                    a.coeff.to_string(),
                    a.kind.as_str().to_string(),
                    a.arg.to_string(),
                )
            })
            .collect(),
    };
    to_json(&doc)
}
