use std::sync::OnceLock;

use jointinv_core::catalog;
use jointinv_core::invariants::{self, DarbouxExpr};
use jointinv_core::lie::Representation;
use jointinv_core::sample::{sample_points, Lcg};
use jointinv_core::{
    frobenius, Ctx, FieldSystem, Monomial, Polynomial, RationalFunction, VarContext, VectorField,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn ctx() -> &'static Ctx {
    static CTX: OnceLock<Ctx> = OnceLock::new();
    CTX.get_or_init(|| VarContext::with_variables(["x", "y", "z"]).unwrap())
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform3(0u32..3), -3i64..=3), 0..4).prop_map(|terms| {
        Polynomial::from_terms(
            ctx(),
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), BigInt::from(c))),
        )
    })
}

fn scalar() -> impl Strategy<Value = RationalFunction> {
    small_poly().prop_map(RationalFunction::from_poly)
}

fn field() -> impl Strategy<Value = VectorField> {
    prop::collection::vec(scalar(), 3).prop_map(|c| VectorField::new(ctx(), c).unwrap())
}

fn bracket(a: &VectorField, b: &VectorField) -> VectorField {
    a.bracket(b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_identity(a in field(), b in field(), c in field()) {
        let s = bracket(&a, &bracket(&b, &c))
            .add(&bracket(&b, &bracket(&c, &a))).unwrap()
            .add(&bracket(&c, &bracket(&a, &b))).unwrap();
        prop_assert!(s.is_zero());
    }

    #[test]
    fn application_is_a_derivation(a in field(), f in scalar(), g in scalar()) {
        let lhs = a.apply(&(&f * &g)).unwrap();
        let rhs = &(&f * &a.apply(&g).unwrap()) + &(&g * &a.apply(&f).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_the_commutator(a in field(), b in field(), f in scalar()) {
        let lhs = bracket(&a, &b).apply(&f).unwrap();
        let rhs = &a.apply(&b.apply(&f).unwrap()).unwrap() - &b.apply(&a.apply(&f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(bracket(&a, &b).add(&bracket(&b, &a)).unwrap().is_zero());
    }
}

/// Every field system the catalog can produce, with a label.
fn catalog_systems() -> Vec<(String, FieldSystem)> {
    let mut out = Vec::new();
    for name in ["so3", "sl2_triple", "olver_r4"] {
        out.push((
            name.to_string(),
            catalog::lookup(name)
                .unwrap()
                .system(Representation::Coadjoint),
        ));
    }
    for n in 2..=5 {
        for p in 1..=n {
            let name = format!("so_pq({},{})", p, n - p);
            out.push((
                name.clone(),
                catalog::lookup(&name).unwrap().field_system().unwrap(),
            ));
        }
    }
    for name in ["sl3", "so4", "so22"] {
        let entry = catalog::lookup(name).unwrap();
        for rep in [Representation::Adjoint, Representation::Coadjoint] {
            out.push((format!("{name}/{rep}"), entry.system(rep)));
        }
    }
    out
}

fn stacked(a: &FieldSystem, b: &FieldSystem) -> FieldSystem {
    let mut m = a.members().to_vec();
    m.extend(b.members().iter().cloned());
    FieldSystem::new(a.ctx(), m).unwrap()
}

#[test]
fn pointwise_rank_never_exceeds_generic_rank() {
    for (name, s) in catalog_systems() {
        let r = s.generic_rank();
        let points = sample_points(s.ctx(), 3, 20, &s.denominators());
        assert_eq!(points.len(), 20, "{name}");
        let mut hits = 0;
        for p in &points {
            let k = s.rank_at_point(p).unwrap();
            assert!(k <= r, "{name}");
            hits += usize::from(k == r);
        }
        assert!(hits > 0, "{name}: generic rank never attained");
    }
}

/// Echelon rows: unit at their own pivot, zero at other pivots, and
/// brackets with no pivot components, checked symbolically or at sample points.
fn check_echelon_shape(name: &str, e: &frobenius::EchelonSystem, symbolic: bool) {
    assert!(e.is_reduced(), "{name}");
    for (i, row) in e.rows().iter().enumerate() {
        for (j, &p) in e.pivots().iter().enumerate() {
            let c = row.coeff(p);
            assert!(
                if i == j { c.is_one() } else { c.is_zero() },
                "{name}: row {i} pivot {p}"
            );
        }
        assert!(row.coeffs()[..e.pivots()[i]]
            .iter()
            .all(RationalFunction::is_zero));
    }
    let rows = e.rows();
    let points = sample_points(e.ctx(), 7, 6, &e.to_system().denominators());
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if symbolic {
                let b = e.bracket(i, j).unwrap();
                assert!(
                    e.pivots().iter().all(|&p| b.coeff(p).is_zero()),
                    "{name}: [{i},{j}]"
                );
                continue;
            }
            for x in &points {
                let b = rows[i].bracket_at(&rows[j], x).unwrap();
                assert!(
                    e.pivots().iter().all(|&p| b[p].is_zero()),
                    "{name}: [{i},{j}]"
                );
            }
        }
    }
}

fn check_reduction(name: &str, s: &FieldSystem, symbolic: bool) -> frobenius::EchelonSystem {
    let e = frobenius::rref(s);
    assert_eq!(e.len(), s.generic_rank(), "{name}");
    check_echelon_shape(name, &e, symbolic);
    assert_eq!(frobenius::rref(&e.to_system()), e, "{name}: idempotence");
    let mut dens = s.denominators();
    dens.extend(e.to_system().denominators());
    dens.extend(e.genericity_factors());
    let both = stacked(s, &e.to_system());
    for p in sample_points(s.ctx(), 5, 20, &dens) {
        let r = s.rank_at_point(&p).unwrap();
        if r < e.len() {
            continue;
        }
        assert_eq!(both.rank_at_point(&p).unwrap(), r, "{name}: row space");
        assert_eq!(
            e.to_system().rank_at_point(&p).unwrap(),
            r,
            "{name}: row space"
        );
    }
    e
}

#[test]
fn lie_algebra_reductions_commute() {
    for (name, s) in catalog_systems() {
        if name == "olver_r4" {
            continue;
        }
        let e = check_reduction(&name, &s, true);
        assert!(e.is_abelian(), "{name}");
        let c = frobenius::commuting_closure(&s);
        assert_eq!(c.iterations, 0, "{name}");
        assert_eq!(c.system, e, "{name}");
    }
}

fn random_poly(ctx: &Ctx, rng: &mut Lcg) -> Polynomial {
    let n = ctx.num_vars();
    let mut terms = Vec::new();
    for _ in 0..rng.range(0, 3) {
        let mut e = vec![0u32; n];
        for _ in 0..rng.range(0, 2) {
            e[rng.below(n)] += 1;
        }
        terms.push((Monomial::from_exponents(&e), BigInt::from(rng.range(-3, 3))));
    }
    Polynomial::from_terms(ctx, terms)
}

fn random_family(rng: &mut Lcg) -> FieldSystem {
    let n = rng.range(2, 5) as usize;
    let k = rng.range(1, 4) as usize;
    let ctx = VarContext::indexed("x", n).unwrap();
    let members = (0..k)
        .map(|_| {
            let c = (0..n)
                .map(|_| RationalFunction::from_poly(random_poly(&ctx, rng)))
                .collect();
            VectorField::new(&ctx, c).unwrap()
        })
        .collect();
    FieldSystem::new(&ctx, members).unwrap()
}

#[test]
fn closure_of_random_families() {
    let mut rng = Lcg::new(2024);
    let mut grew = 0;
    for case in 0..100 {
        let s = random_family(&mut rng);
        let name = format!("family {case}");
        check_reduction(&name, &s, false);
        let c = frobenius::commuting_closure(&s);
        let n = s.ctx().num_vars();
        assert!(c.iterations <= n, "{name}");
        assert!(c.system.is_abelian(), "{name}");
        check_echelon_shape(&name, &c.system, false);
        assert_eq!(
            c.system.len(),
            frobenius::rref(&s).len() + c.iterations,
            "{name}"
        );
        // the closure contains the original fields
        let with_orig = stacked(&c.system.to_system(), &s);
        assert_eq!(with_orig.generic_rank(), c.system.len(), "{name}");
        grew += usize::from(c.iterations > 0);
    }
    assert!(grew > 0, "no random family needed closing");
}

#[test]
fn invariants_survive_closure() {
    for (name, s) in catalog_systems()
        .into_iter()
        .chain(std::iter::once(("olver".to_string(), catalog::olver_r4())))
    {
        if s.ctx().num_vars() > 6 {
            continue;
        }
        let closed = frobenius::commuting_closure(&s).system.to_system();
        for d in 1..=3 {
            let a = invariants::polynomial_invariants(&s, d);
            let b = invariants::polynomial_invariants(&closed, d);
            assert!(a.spans_same(&b), "{name} degree {d}");
        }
    }
}

#[test]
fn reduction_ignores_nonzero_rescaling() {
    let c = ctx();
    let factor = jointinv_core::io::parse_scalar("(1+x^2)/(2-y)", c).unwrap();
    for s in [catalog::so3(), catalog::sl2_triple()] {
        let scaled: Vec<VectorField> = s
            .members()
            .iter()
            .map(|m| m.scale(&factor).unwrap())
            .collect();
        let t = FieldSystem::new(c, scaled).unwrap();
        assert_eq!(frobenius::rref(&t), frobenius::rref(&s));
    }
}

#[test]
fn darboux_agrees_with_annihilation() {
    let mut rng = Lcg::new(99);
    for (name, s) in catalog_systems() {
        if s.ctx().num_vars() > 4 {
            continue;
        }
        let basis = invariants::polynomial_invariants(&s, 2);
        for p in basis.basis() {
            let f = DarbouxExpr::from_polynomial(p).unwrap();
            assert!(invariants::verify_darboux(&s, &f).unwrap(), "{name}: {p}");
        }
        for _ in 0..5 {
            let p = random_poly(s.ctx(), &mut rng);
            if p.is_zero() {
                continue;
            }
            let f = DarbouxExpr::from_polynomial(&p).unwrap();
            let rf = RationalFunction::from_poly(p.clone());
            let annihilated = s.members().iter().all(|m| m.apply(&rf).unwrap().is_zero());
            assert_eq!(
                invariants::verify_darboux(&s, &f).unwrap(),
                annihilated,
                "{name}: {p}"
            );
        }
    }
}

#[test]
fn generated_fields_reverse_the_bracket() {
    for name in ["sl3", "so4", "so22"] {
        let sc = catalog::lookup(name)
            .unwrap()
            .structure_constants()
            .unwrap()
            .clone();
        for rep in [Representation::Adjoint, Representation::Coadjoint] {
            let s = sc.fields(rep);
            let x = s.members();
            for m in 0..sc.dim() {
                for l in 0..sc.dim() {
                    let mut want = VectorField::zero(s.ctx());
                    for (k, c) in sc.bracket(m, l).iter().enumerate() {
                        let c = RationalFunction::from_rational(s.ctx(), &-c.clone());
                        want = want.add(&x[k].scale(&c).unwrap()).unwrap();
                    }
                    assert_eq!(bracket(&x[m], &x[l]), want, "{name}/{rep} [{m},{l}]");
                }
            }
        }
    }
}

#[test]
fn generated_coefficients_are_linear_forms() {
    for name in ["sl3", "so4", "so22"] {
        let sc = catalog::lookup(name)
            .unwrap()
            .structure_constants()
            .unwrap()
            .clone();
        for rep in [Representation::Adjoint, Representation::Coadjoint] {
            for m in sc.fields(rep).members() {
                for c in m.coeffs() {
                    assert!(c.is_polynomial(), "{name}/{rep}");
                    assert!(
                        c.numer().terms().iter().all(|(t, _)| t.degree() == 1),
                        "{name}/{rep}"
                    );
                }
            }
        }
    }
}
