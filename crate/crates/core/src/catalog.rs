//! Built-in example systems.
//!
//! | name           | payload                                   |
//! |----------------|-------------------------------------------|
//! | `so3`          | rotation fields on ℝ³                     |
//! | `so_pq(p,q)`   | planar and hyperbolic rotation generators |
//! | `sl2_triple`   | the `V₊, V₀, V₋` fields on ℝ³             |
//! | `olver_r4`     | two non-commuting fields on ℝ⁴            |
//! | `sl3`          | structure constants of `sl(3)`            |
//! | `so4`, `so22`  | structure constants of `so(4)`, `so(2,2)` |

use num_rational::BigRational;

use crate::algebra::{Ctx, Polynomial, VarContext};
use crate::error::{Error, Result};
use crate::fields::{FieldSystem, VectorField};
use crate::io::parse::{parse_polynomial, parse_scalar};
use crate::lie::{Representation, StructureConstants};

/// Stable catalog identifiers; `so_pq` takes its signature as `so_pq(p,q)`.
pub const NAMES: [&str; 7] = [
    "so3",
    "so_pq",
    "sl2_triple",
    "olver_r4",
    "sl3",
    "so4",
    "so22",
];

#[derive(Clone, Debug)]
pub enum Payload {
    Fields(FieldSystem),
    Structure(StructureConstants),
}

/// A named example with the invariants it is known to have.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    name: String,
    payload: Payload,
    expected: Vec<(Representation, String)>,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    /// The explicit field system, for entries given by fields.
    pub fn field_system(&self) -> Option<FieldSystem> {
        match &self.payload {
            Payload::Fields(s) => Some(s.clone()),
            Payload::Structure(_) => None,
        }
    }

    pub fn structure_constants(&self) -> Option<&StructureConstants> {
        match &self.payload {
            Payload::Structure(sc) => Some(sc),
            Payload::Fields(_) => None,
        }
    }

    /// Fields of the entry; structure constants are realised in `rep`.
    pub fn system(&self, rep: Representation) -> FieldSystem {
        match &self.payload {
            Payload::Fields(s) => s.clone(),
            Payload::Structure(sc) => sc.fields(rep),
        }
    }

    /// Known polynomial invariants of [`Self::system`] for `rep`. Entries given
    /// by fields list theirs under both representations.
    pub fn expected_invariants(&self, rep: Representation) -> Vec<Polynomial> {
        let sys = self.system(rep);
        self.expected
            .iter()
            .filter(|(r, _)| matches!(self.payload, Payload::Fields(_)) || *r == rep)
            .map(|(_, text)| parse_polynomial(text, sys.ctx()).expect("catalog invariant parses"))
            .collect()
    }
}

fn fields_from_rows(ctx: &Ctx, rows: &[&[&str]]) -> FieldSystem {
    let members = rows
        .iter()
        .map(|row| {
            let coeffs = row
                .iter()
                .map(|t| parse_scalar(t, ctx).expect("catalog coefficient parses"))
                .collect();
            VectorField::new(ctx, coeffs).expect("catalog arity")
        })
        .collect();
    FieldSystem::new(ctx, members).expect("shared context")
}

fn xyz() -> Ctx {
    VarContext::with_variables(["x", "y", "z"]).expect("valid names")
}

pub fn so3() -> FieldSystem {
    fields_from_rows(
        &xyz(),
        &[&["y", "-x", "0"], &["0", "z", "-y"], &["z", "0", "-x"]],
    )
}

/// `V₊ = 2y∂x + z∂y`, `V₀ = -2x∂x + 2z∂z`, `V₋ = -x∂y - 2y∂z`.
pub fn sl2_triple() -> FieldSystem {
    fields_from_rows(
        &xyz(),
        &[
            &["2*y", "z", "0"],
            &["-2*x", "0", "2*z"],
            &["0", "-x", "-2*y"],
        ],
    )
}

pub fn olver_r4() -> FieldSystem {
    let ctx = VarContext::with_variables(["x", "y", "z", "w"]).expect("valid names");
    fields_from_rows(&ctx, &[&["0", "z", "-y", "0"], &["1", "w", "0", "y"]])
}

/// Generators `x_{i+1}∂_i - x_i∂_{i+1}` for `i ≠ p` and `x_{p+1}∂_p + x_p∂_{p+1}`.
pub fn so_pq_fields(p: usize, q: usize) -> Result<FieldSystem> {
    let n = p + q;
    if p == 0 || n < 2 {
        return Err(Error::InvalidSignature(p, q));
    }
    let ctx = VarContext::indexed("x", n)?;
    let mut members = Vec::new();
    for i in 0..n - 1 {
        let mut f = VectorField::zero(&ctx).into_coeffs();
        let xi = crate::algebra::RationalFunction::var(&ctx, i);
        let xj = crate::algebra::RationalFunction::var(&ctx, i + 1);
        f[i] = xj;
        f[i + 1] = if i + 1 == p { xi } else { -xi };
        members.push(VectorField::new(&ctx, f)?);
    }
    FieldSystem::new(&ctx, members)
}

fn signature_form(p: usize, q: usize) -> String {
    let mut s = String::new();
    for i in 1..=p + q {
        if i > p {
            s.push('-');
        } else if i > 1 {
            s.push('+');
        }
        s.push_str(&format!("x{i}^2"));
    }
    s
}

/// `[e_i, e_j] = Σ c e_k` as `(i, j, [(k, c)..])`, 1-based.
type Relation = (usize, usize, &'static [(usize, i64)]);

/// The commutation relations of `sl(3)` on the basis `e1 … e8`.
pub fn sl3() -> StructureConstants {
    let rel: [Relation; 21] = [
        (1, 2, &[(2, 1)]),
        (1, 3, &[(3, 2)]),
        (1, 4, &[(4, -1)]),
        (1, 6, &[(6, 1)]),
        (1, 7, &[(7, -2)]),
        (1, 8, &[(8, -1)]),
        (2, 4, &[(1, 1), (5, -1)]),
        (2, 5, &[(2, 1)]),
        (2, 6, &[(3, 1)]),
        (2, 7, &[(8, -1)]),
        (3, 4, &[(6, -1)]),
        (3, 5, &[(3, -1)]),
        (3, 7, &[(1, 1)]),
        (3, 8, &[(2, 1)]),
        (4, 5, &[(4, -1)]),
        (4, 8, &[(7, -1)]),
        (5, 6, &[(6, 2)]),
        (5, 7, &[(7, -1)]),
        (5, 8, &[(8, -2)]),
        (6, 7, &[(4, 1)]),
        (6, 8, &[(5, 1)]),
    ];
    let entries = rel.iter().flat_map(|&(i, j, rhs)| {
        rhs.iter()
            .map(move |&(k, c)| (i - 1, j - 1, k - 1, BigRational::from_integer(c.into())))
    });
    StructureConstants::new(8, entries).expect("sl(3) satisfies Jacobi")
}

pub const SL3_COADJOINT_I1: &str = "x5^2+x1^2-x1*x5+3*x7*x3+3*x8*x6+3*x2*x4";
pub const SL3_COADJOINT_I2: &str = "2*x1^3-3*x5*x1^2+9*x2*x4*x1-3*x1*x5^2-18*x1*x8*x6+9*x7*x3*x1\
+2*x5^3+9*x5*x8*x6-18*x7*x5*x3+9*x5*x2*x4+27*x7*x6*x2+27*x4*x3*x8";
pub const SL3_ADJOINT_I1: &str = "x5^2+x1*x5+x1^2+x7*x3+x8*x6+x4*x2";
pub const SL3_ADJOINT_I2: &str =
    "-x1^2*x5-x1*x6*x8+x1*x4*x2-x1*x5^2-x3*x7*x5+x4*x8*x3+x2*x6*x7+x4*x5*x2";

/// Parses `so_pq(p,q)` (whitespace allowed inside the parentheses).
fn parse_signature(name: &str) -> Option<(usize, usize)> {
    let inner = name.strip_prefix("so_pq(")?.strip_suffix(')')?;
    let (p, q) = inner.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    use Representation::*;
    let fields = |name: &str, s: FieldSystem, inv: &[&str]| CatalogEntry {
        name: name.to_string(),
        payload: Payload::Fields(s),
        expected: inv.iter().map(|t| (Coadjoint, t.to_string())).collect(),
    };
    let entry = match name {
        "so3" => fields(name, so3(), &["x^2+y^2+z^2"]),
        "sl2_triple" => fields(name, sl2_triple(), &["x*z-y^2"]),
        "olver_r4" => fields(name, olver_r4(), &["y^2+z^2-w^2"]),
        "sl3" => CatalogEntry {
            name: name.to_string(),
            payload: Payload::Structure(sl3()),
            expected: vec![
                (Coadjoint, SL3_COADJOINT_I1.into()),
                (Coadjoint, SL3_COADJOINT_I2.into()),
                (Adjoint, SL3_ADJOINT_I1.into()),
                (Adjoint, SL3_ADJOINT_I2.into()),
            ],
        },
        "so4" | "so22" => {
            let (p, q) = if name == "so4" { (4, 0) } else { (2, 2) };
            CatalogEntry {
                name: name.to_string(),
                payload: Payload::Structure(StructureConstants::so_pq(p, q)?),
                expected: Vec::new(),
            }
        }
        _ => {
            let Some((p, q)) = parse_signature(name) else {
                return Err(Error::UnknownCatalog(name.to_string()));
            };
            let s = so_pq_fields(p, q)?;
            fields(&format!("so_pq({p},{q})"), s, &[&signature_form(p, q)])
        }
    };
    Ok(entry)
}
