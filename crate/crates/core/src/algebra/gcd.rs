//! Multivariate gcd over ℤ.
//!
//! A heuristic evaluation gcd is tried first on small inputs; its result is
//! certified by trial division. Otherwise the dense modular algorithm in
//! [`super::modgcd`] is used. A subresultant remainder sequence is kept as a
//! test oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Polynomial;

/// Greatest common divisor as a primitive polynomial with positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    gcd_full(a, b).primitive_part()
}

/// Least common multiple, including integer content, positive leading coefficient.
pub fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.ctx());
    }
    let g = gcd_full(a, b);
    (a.exact_div(&g).expect("gcd divides") * b).normalized_sign()
}

/// Gcd over ℤ[names] including the integer content, positive leading coefficient.
pub(crate) fn gcd_full(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.clone().normalized_sign();
    }
    if b.is_zero() || a == b {
        return a.clone().normalized_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::constant(a.ctx(), a.content().gcd(&b.content()));
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let core = gcd_no_monomial_content(&a.div_monomial(&ma), &b.div_monomial(&mb));
    core.mul_term(&mg, &BigInt::one())
}

fn gcd_no_monomial_content(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_constant() || b.is_constant() {
        return Polynomial::constant(a.ctx(), a.content().gcd(&b.content()));
    }
    let sa = a.support();
    let sb = b.support();
    // a name present in only one operand can only contribute through content
    for v in 0..sa.len() {
        if sa[v] && !sb[v] {
            return gcd_full(&content_in(a, v), b);
        }
        if sb[v] && !sa[v] {
            return gcd_full(a, &content_in(b, v));
        }
    }
    if a.num_terms() == b.num_terms() && a.terms()[0].0 == b.terms()[0].0 {
        let pa = a.primitive_part().normalized_sign();
        if pa == b.primitive_part().normalized_sign() {
            return pa.scale(&a.content().gcd(&b.content()));
        }
    }
    let (small, large) = if a.num_terms() <= b.num_terms() {
        (a, b)
    } else {
        (b, a)
    };
    let ps = small.primitive_part();
    let pl = large.primitive_part();
    if may_divide(&ps, &pl) && pl.exact_div(&ps).is_some() {
        return ps.normalized_sign().scale(&a.content().gcd(&b.content()));
    }
    if let Some(g) = heuristic_gcd(a, b, HEU_BIT_LIMIT) {
        return g.normalized_sign();
    }
    super::modgcd::modular_gcd(a, b)
}

/// Cheap necessary conditions for `a | b`: degrees, leading monomials and
/// divisibility of integer values at two points.
fn may_divide(a: &Polynomial, b: &Polynomial) -> bool {
    let n = a.ctx().len();
    if (0..n).any(|v| a.degree_in(v) > b.degree_in(v)) {
        return false;
    }
    if b.terms()[0].0.div(&a.terms()[0].0).is_none() {
        return false;
    }
    for shift in [2i64, 3] {
        let point: Vec<BigInt> = (0..n).map(|v| BigInt::from(shift + 2 * v as i64)).collect();
        let va = eval_int(a, &point);
        if va.is_zero() {
            continue;
        }
        if !(eval_int(b, &point) % va).is_zero() {
            return false;
        }
    }
    true
}

fn eval_int(p: &Polynomial, point: &[BigInt]) -> BigInt {
    let powers: Vec<Vec<BigInt>> = point
        .iter()
        .enumerate()
        .map(|(v, x)| {
            let mut row = vec![BigInt::one()];
            for k in 0..p.degree_in(v) as usize {
                let next = &row[k] * x;
                row.push(next);
            }
            row
        })
        .collect();
    p.terms()
        .iter()
        .map(|(m, c)| {
            m.support()
                .fold(c.clone(), |acc, v| acc * &powers[v][m.exp(v) as usize])
        })
        .sum()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in name `v`.
pub(crate) fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = p
        .coefficients_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| (c.num_terms(), c.total_degree()));
    let mut iter = coeffs.into_iter();
    let mut g = match iter.next() {
        Some(c) => c.normalized_sign(),
        None => return Polynomial::zero(p.ctx()),
    };
    for c in iter {
        if g.is_one() {
            break;
        }
        g = gcd_full(&g, &c);
    }
    g
}

/// Integers larger than this abandon the heuristic.
const HEU_BIT_LIMIT: u64 = 2048;
const HEU_ATTEMPTS: usize = 4;

/// Evaluation gcd: substitutes an integer `ξ` for one name, recurses, and
/// lifts the result back by balanced `ξ`-adic expansion. Since
/// `ξ ≥ 2·min(|a|, |b|) + 2`, a lifted primitive candidate dividing both
/// inputs is their gcd. Includes the integer content.
fn heuristic_gcd(a: &Polynomial, b: &Polynomial, limit: u64) -> Option<Polynomial> {
    let ctx = a.ctx();
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let ca = a.content();
    let cb = b.content();
    let content = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return Some(Polynomial::constant(ctx, content));
    }
    let a = a.div_int_exact(&ca);
    let b = b.div_int_exact(&cb);
    let sa = a.support();
    let sb = b.support();
    let v = (0..sa.len()).find(|&v| sa[v] || sb[v])?;
    let norm = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = norm * 2u32 + 2u32;
    for _ in 0..HEU_ATTEMPTS {
        if xi.bits() > limit {
            return None;
        }
        let ea = a.eval_name_int(v, &xi);
        let eb = b.eval_name_int(v, &xi);
        if !ea.is_zero() && !eb.is_zero() {
            let h = heuristic_gcd(&ea, &eb, limit)?;
            let lifted = lift_adic(&h, v, &xi).primitive_part();
            if !lifted.is_zero() && a.exact_div(&lifted).is_some() && b.exact_div(&lifted).is_some()
            {
                return Some(lifted.scale(&content));
            }
        }
        // growth factor used by common implementations of the method
        xi = &xi * 73794u32 * xi.sqrt().sqrt() / 27011u32 + 1u32;
    }
    None
}

/// Reads every integer coefficient of `h` as a balanced base-`xi` number
/// whose k-th digit multiplies `v^k`.
fn lift_adic(h: &Polynomial, v: usize, xi: &BigInt) -> Polynomial {
    let half: BigInt = xi / 2u32;
    let mut terms = Vec::new();
    for (m, c) in h.terms() {
        let mut c = c.clone();
        let mut k = 0u32;
        while !c.is_zero() {
            let mut d = c.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            c = (&c - &d) / xi;
            if !d.is_zero() {
                terms.push((m.with_exp(v, k), d));
            }
            k += 1;
        }
    }
    Polynomial::from_terms(h.ctx(), terms)
}

/// Pairwise-coprime refinement of a list of nonzero polynomials: returns
/// primitive, nonconstant factors such that every input is (up to a constant)
/// a product of powers of them.
pub fn coprime_basis(inputs: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in inputs {
        let mut pending = vec![squarefree_part(p)];
        while let Some(mut q) = pending.pop() {
            if q.is_constant() {
                continue;
            }
            let mut i = 0;
            while i < basis.len() {
                let g = gcd(&basis[i], &q);
                if g.is_constant() {
                    i += 1;
                    continue;
                }
                let f = basis.swap_remove(i);
                let f_rest = f.exact_div(&g).expect("gcd divides");
                q = q.exact_div(&g).expect("gcd divides");
                pending.push(g);
                pending.push(f_rest);
                i = 0;
                if q.is_constant() {
                    break;
                }
            }
            if !q.is_constant() {
                basis.push(squarefree_part(&q));
            }
        }
    }
    basis.sort_by(|a, b| {
        b.terms()[0]
            .0
            .cmp(&a.terms()[0].0)
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    basis.dedup();
    basis
}

/// Product of the distinct irreducible factors: `p / gcd(p, ∂p/∂x₁, …)`.
pub fn squarefree_part(p: &Polynomial) -> Polynomial {
    let p = p.primitive_part().normalized_sign();
    if p.is_constant() {
        return p;
    }
    let support = p.support();
    let mut g = p.clone();
    for (v, used) in support.iter().enumerate() {
        if g.is_constant() {
            break;
        }
        if *used {
            g = gcd(&g, &p.derivative(v));
        }
    }
    p.exact_div(&g).expect("gcd divides").normalized_sign()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::{Ctx, VarContext};

    fn vars(names: &[&str]) -> (Ctx, Vec<Polynomial>) {
        let ctx = VarContext::with_variables(names.iter().copied()).unwrap();
        let vs = (0..names.len()).map(|i| Polynomial::var(&ctx, i)).collect();
        (ctx, vs)
    }

    fn int(ctx: &Ctx, v: i64) -> Polynomial {
        Polynomial::constant(ctx, v)
    }

    #[test]
    fn common_factor() {
        let (_, v) = vars(&["x", "y"]);
        let (x, y) = (&v[0], &v[1]);
        let a = x * x - y * y;
        let b = x - y;
        assert_eq!(gcd(&a, &b), b);
    }

    #[test]
    fn zero_conventions() {
        let (ctx, v) = vars(&["x", "y"]);
        assert!(gcd(&Polynomial::zero(&ctx), &Polynomial::zero(&ctx)).is_zero());
        let b = -(&v[0] + &v[1]);
        assert_eq!(gcd(&Polynomial::zero(&ctx), &b), &v[0] + &v[1]);
    }

    #[test]
    fn primitive_part_of_gcd() {
        let (ctx, v) = vars(&["x", "y"]);
        let s = &v[0] + &v[1];
        let a = &int(&ctx, 2) * &s;
        let b = &int(&ctx, 4) * &s;
        assert_eq!(gcd(&a, &b), s);
        assert_eq!(gcd_full(&a, &b), a);
    }

    #[test]
    fn multivariate_cofactors() {
        let (ctx, v) = vars(&["x", "y", "z", "w"]);
        let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
        let g = x * z - y * y + &int(&ctx, 3) * w;
        let f1 = x * x + y * z * w + &int(&ctx, 1);
        let f2 = z.pow(3) - x * w + y;
        let a = &g * &f1;
        let b = &g * &f2;
        assert_eq!(gcd(&a, &b), g.clone().normalized_sign());
        let a2 = &a * &g;
        assert_eq!(gcd(&a2, &(&b * &g)), (&g * &g).normalized_sign());
        assert!(gcd(&f1, &f2).is_one());
    }

    #[test]
    fn monomial_and_missing_variable() {
        let (_, v) = vars(&["x", "y", "z"]);
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let a = x * x * y;
        let b = x * y * z + x * x;
        assert_eq!(gcd(&a, &b), x.clone());
        let c = (x + y) * (y + z);
        let d = (x + y) * x;
        assert_eq!(gcd(&c, &d), x + y);
    }

    #[test]
    fn fast_paths_agree_with_remainder_sequence() {
        let (ctx, v) = vars(&["x", "y", "z"]);
        let mut rng = crate::sample::Lcg::new(11);
        let random = |rng: &mut crate::sample::Lcg| {
            let mut p = int(&ctx, rng.range(-3, 3));
            for _ in 0..4 {
                let mut t = int(&ctx, rng.range(-4, 4));
                for x in &v {
                    t = &t * &x.pow(rng.range(0, 2) as u32);
                }
                p = &p + &t;
            }
            p
        };
        for _ in 0..120 {
            let (f, g, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
            if f.is_zero() || g.is_zero() || c.is_zero() {
                continue;
            }
            let (a, b) = (&f * &c, &g * &c);
            let fast = gcd(&a, &b);
            let (ma, mb) = (a.monomial_content(), b.monomial_content());
            let (pa, pb) = (a.div_monomial(&ma), b.div_monomial(&mb));
            if pa.support() == pb.support() && !pa.is_constant() {
                let slow = sequence::sequence_gcd(&pa, &pb).primitive_part();
                assert_eq!(gcd(&pa, &pb), slow);
                assert_eq!(
                    super::super::modgcd::modular_gcd(&pa, &pb).primitive_part(),
                    slow
                );
            }
            assert!(fast
                .exact_div(&c.primitive_part().normalized_sign())
                .is_some());
        }
    }

    #[test]
    fn coprime_refinement() {
        let (_, v) = vars(&["x", "y"]);
        let (x, y) = (&v[0], &v[1]);
        assert_eq!(squarefree_part(&(x * x * y)), x * y);
        let basis = coprime_basis(&[x * y, y * y, x + y]);
        assert_eq!(basis.len(), 3);
        assert!(basis.contains(x) && basis.contains(y) && basis.contains(&(x + y)));
    }
}
