//! Abstract Lie algebras by structure constants and their fundamental fields.
//!
//! Indices are 0-based in this API; the JSON format and the printed tables are
//! 1-based.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Ctx, Polynomial, RationalFunction, VarContext};
use crate::error::{Error, Result};
use crate::fields::{FieldSystem, VectorField};

/// Which fundamental fields to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Adjoint,
    Coadjoint,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::Adjoint => "adjoint",
            Representation::Coadjoint => "coadjoint",
        })
    }
}

/// `[e_i, e_j] = Σ_k c_{ij}^k e_k`, stored sparsely for `i < j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    dim: usize,
    basis_prefix: String,
    table: BTreeMap<(usize, usize), BTreeMap<usize, BigRational>>,
}

impl StructureConstants {
    /// Builds the table from `(i, j, k, c)` entries and checks the Jacobi identity.
    pub fn new(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, BigRational)>,
    ) -> Result<Self> {
        let sc = Self::new_unchecked(dim, entries)?;
        if let Some((i, j, k)) = sc.jacobi_violation() {
            return Err(Error::InvalidStructureConstants(format!(
                "Jacobi identity fails for (e{}, e{}, e{})",
                i + 1,
                j + 1,
                k + 1
            )));
        }
        Ok(sc)
    }

    /// Builds the table without the Jacobi check; indices and ordering are
    /// still validated.
    pub fn new_unchecked(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, BigRational)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidStructureConstants(
                "dimension must be positive".into(),
            ));
        }
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, BigRational>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidStructureConstants(format!(
                    "index out of range in [e{}, e{}] -> e{}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if i >= j {
                return Err(Error::InvalidStructureConstants(format!(
                    "entries must have i < j, found [e{}, e{}]",
                    i + 1,
                    j + 1
                )));
            }
            let row = table.entry((i, j)).or_default();
            if row.contains_key(&k) {
                return Err(Error::InvalidStructureConstants(format!(
                    "duplicate entry for [e{}, e{}] -> e{}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if !c.is_zero() {
                row.insert(k, c);
            }
        }
        table.retain(|_, row| !row.is_empty());
        Ok(StructureConstants {
            dim,
            basis_prefix: "e".into(),
            table,
        })
    }

    pub fn with_prefix(mut self, prefix: impl Into<String>) -> Self {
        self.basis_prefix = prefix.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_prefix(&self) -> &str {
        &self.basis_prefix
    }

    /// Nonzero pairs `(i, j)` with `i < j`.
    pub fn nonzero_pairs(&self) -> usize {
        self.table.len()
    }

    /// `(i, j, k, c)` for every stored nonzero constant, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, BigRational)> {
        self.table
            .iter()
            .flat_map(|(&(i, j), row)| row.iter().map(move |(&k, c)| (i, j, k, c.clone())))
            .collect()
    }

    /// `c_{ij}^k` for any `i, j`, using antisymmetry.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> BigRational {
        if i == j {
            return BigRational::zero();
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        match self.table.get(&key).and_then(|row| row.get(&k)) {
            Some(c) if sign > 0 => c.clone(),
            Some(c) => -c.clone(),
            None => BigRational::zero(),
        }
    }

    /// `[e_i, e_j]` as a dense coefficient vector.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<BigRational> {
        (0..self.dim).map(|k| self.coeff(i, j, k)).collect()
    }

    fn bracket_vec(&self, v: &[BigRational], j: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (l, vl) in v.iter().enumerate() {
            if vl.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                let c = self.coeff(l, j, k);
                if !c.is_zero() {
                    *o += vl * c;
                }
            }
        }
        out
    }

    fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let a = self.bracket_vec(&self.bracket(i, j), k);
                    let b = self.bracket_vec(&self.bracket(j, k), i);
                    let c = self.bracket_vec(&self.bracket(k, i), j);
                    if a.iter()
                        .zip(&b)
                        .zip(&c)
                        .any(|((x, y), z)| !(x + y + z).is_zero())
                    {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Whether `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` for all triples.
    pub fn validate_jacobi(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    /// The context `x1, …, x_dim` in which fundamental fields live.
    pub fn coordinate_context(&self) -> Ctx {
        VarContext::indexed("x", self.dim).expect("x1.. are valid names")
    }

    fn linear_form(
        ctx: &Ctx,
        coeffs: impl Iterator<Item = (usize, BigRational)>,
    ) -> RationalFunction {
        let mut num = Polynomial::zero(ctx);
        let mut den = num_bigint::BigInt::one();
        let terms: Vec<(usize, BigRational)> = coeffs.filter(|(_, c)| !c.is_zero()).collect();
        for (_, c) in &terms {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        for (i, c) in terms {
            let scaled = (c * BigRational::from_integer(den.clone())).to_integer();
            num = num + Polynomial::var(ctx, i).scale(&scaled);
        }
        RationalFunction::new(num, Polynomial::constant(ctx, den)).expect("nonzero denominator")
    }

    /// Adjoint fields `X_m = Σ_j (Σ_i x_i c_{m,i}^j) ∂/∂x_j`.
    pub fn adjoint_fields(&self) -> FieldSystem {
        let ctx = self.coordinate_context();
        let members = (0..self.dim)
            .map(|m| {
                let coeffs = (0..self.dim)
                    .map(|j| {
                        Self::linear_form(&ctx, (0..self.dim).map(|i| (i, self.coeff(m, i, j))))
                    })
                    .collect();
                VectorField::new(&ctx, coeffs).expect("arity matches")
            })
            .collect();
        FieldSystem::new(&ctx, members).expect("shared context")
    }

    /// Coadjoint fields `X_m = -Σ_j (Σ_i x_i c_{m,j}^i) ∂/∂x_j`.
    pub fn coadjoint_fields(&self) -> FieldSystem {
        let ctx = self.coordinate_context();
        let members = (0..self.dim)
            .map(|m| {
                let coeffs = (0..self.dim)
                    .map(|j| {
                        Self::linear_form(&ctx, (0..self.dim).map(|i| (i, -self.coeff(m, j, i))))
                    })
                    .collect();
                VectorField::new(&ctx, coeffs).expect("arity matches")
            })
            .collect();
        FieldSystem::new(&ctx, members).expect("shared context")
    }

    pub fn fields(&self, rep: Representation) -> FieldSystem {
        match rep {
            Representation::Adjoint => self.adjoint_fields(),
            Representation::Coadjoint => self.coadjoint_fields(),
        }
    }

    /// Structure constants of `so(p, q)` in the basis
    /// `M_ab = (E_ab - E_ba) η`, `a < b`, ordered lexicographically.
    pub fn so_pq(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n < 2 {
            return Err(Error::InvalidSignature(p, q));
        }
        let eta: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let basis: Vec<Vec<Vec<i64>>> = pairs
            .iter()
            .map(|&(a, b)| {
                let mut m = vec![vec![0i64; n]; n];
                m[a][b] = eta[b];
                m[b][a] = -eta[a];
                m
            })
            .collect();
        let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| (0..n).map(|t| x[r][t] * y[t][c]).sum())
                        .collect()
                })
                .collect()
        };
        let mut entries = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let ab = mul(&basis[i], &basis[j]);
                let ba = mul(&basis[j], &basis[i]);
                let comm: Vec<Vec<i64>> = (0..n)
                    .map(|r| (0..n).map(|c| ab[r][c] - ba[r][c]).collect())
                    .collect();
                let mut recon = vec![vec![0i64; n]; n];
                for (k, &(a, b)) in pairs.iter().enumerate() {
                    let c = comm[a][b] / eta[b];
                    if c != 0 {
                        entries.push((i, j, k, BigRational::from_integer(c.into())));
                        for r in 0..n {
                            for s in 0..n {
                                recon[r][s] += c * basis[k][r][s];
                            }
                        }
                    }
                }
                debug_assert_eq!(recon, comm, "commutator lies in so(p,q)");
            }
        }
        Self::new(pairs.len(), entries)
    }
}

pub fn validate_jacobi(sc: &StructureConstants) -> bool {
    sc.validate_jacobi()
}

pub fn adjoint_fields(sc: &StructureConstants) -> FieldSystem {
    sc.adjoint_fields()
}

pub fn coadjoint_fields(sc: &StructureConstants) -> FieldSystem {
    sc.coadjoint_fields()
}
