use jointinv_core::catalog::{
    self, SL3_ADJOINT_I1, SL3_ADJOINT_I2, SL3_COADJOINT_I1, SL3_COADJOINT_I2,
};
use jointinv_core::invariants::{self, expected_invariant_count, functional_independence};
use jointinv_core::io::{parse_darboux, parse_polynomial, parse_system};
use jointinv_core::lie::Representation;
use jointinv_core::{frobenius, EchelonSystem, FieldSystem, Polynomial};

fn rows(e: &EchelonSystem) -> Vec<Vec<String>> {
    e.rows()
        .iter()
        .map(|r| r.coeffs().iter().map(ToString::to_string).collect())
        .collect()
}

fn strs(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn basis_strings(s: &FieldSystem, d: u32) -> Vec<String> {
    invariants::polynomial_invariants(s, d)
        .basis()
        .iter()
        .map(ToString::to_string)
        .collect()
}

#[test]
fn rotations_in_three_space() {
    let s = catalog::so3();
    let e = frobenius::rref(&s);
    assert_eq!(rows(&e), strs(&[&["1", "0", "-x/z"], &["0", "1", "-y/z"]]));
    assert_eq!(e.pivots(), &[0, 1]);
    assert!(e.is_abelian());
    assert_eq!(e.genericity().to_string(), "z");
    assert_eq!(basis_strings(&s, 2), ["x^2+y^2+z^2"]);
    assert_eq!(expected_invariant_count(&s), 1);
    let c = frobenius::commuting_closure(&s);
    assert_eq!(c.iterations, 0);
    assert_eq!(c.system, e);
}

#[test]
fn sl2_triple_reduction() {
    let s = catalog::sl2_triple();
    let e = frobenius::rref(&s);
    assert_eq!(rows(&e), strs(&[&["1", "0", "-z/x"], &["0", "1", "2*y/x"]]));
    assert!(e.is_abelian());
    assert_eq!(basis_strings(&s, 2), ["x*z-y^2"]);
}

#[test]
fn sign_flipped_lowering_field_has_full_rank() {
    let s = parse_system(
        r#"{"vars":["x","y","z"],"fields":[["2*y","z","0"],["-2*x","0","2*z"],["0","-x","2*y"]]}"#,
    )
    .unwrap();
    assert_eq!(s.generic_rank(), 3);
    assert!(invariants::polynomial_invariants(&s, 3).basis().is_empty());
}

#[test]
fn four_space_closure() {
    let s = catalog::olver_r4();
    assert!(!frobenius::rref(&s).is_abelian());
    assert!(frobenius::rref(&s)
        .bracket_independence_check(0, 1)
        .unwrap());
    let c = frobenius::commuting_closure(&s);
    assert_eq!(c.iterations, 1);
    assert_eq!(
        c.steps[0]
            .bracket()
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
        ["0", "0", "-w/z", "-1"]
    );
    assert_eq!(
        rows(&c.system),
        strs(&[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "y/w"],
            &["0", "0", "1", "z/w"]
        ])
    );
    assert!(c.system.is_abelian());
    assert_eq!(basis_strings(&s, 2), ["y^2+z^2-w^2"]);
    assert_eq!(basis_strings(&c.system.to_system(), 2), ["y^2+z^2-w^2"]);
}

#[test]
fn signature_forms() {
    for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        let entry = catalog::lookup(&format!("so_pq({p},{q})")).unwrap();
        let s = entry.field_system().unwrap();
        assert_eq!(s.len(), p + q - 1);
        let e = frobenius::rref(&s);
        assert!(e.is_abelian(), "so({p},{q})");
        let basis = invariants::polynomial_invariants(&s, 2);
        let expected = entry.expected_invariants(Representation::Coadjoint);
        assert_eq!(basis.dimension(), 1);
        assert!(basis.contains(&expected[0]), "so({p},{q})");
    }
    let hyperbolic = catalog::lookup("so_pq(1,1)")
        .unwrap()
        .field_system()
        .unwrap();
    assert_eq!(
        hyperbolic.members()[0].to_string(),
        "(x2)*d/dx1 + (x1)*d/dx2"
    );
}

fn field_rows(s: &FieldSystem) -> Vec<Vec<String>> {
    s.members()
        .iter()
        .map(|m| m.coeffs().iter().map(ToString::to_string).collect())
        .collect()
}

#[test]
fn sl3_coadjoint() {
    let s = catalog::sl3().coadjoint_fields();
    let printed: [&[&str]; 8] = [
        &["0", "-x2", "-2*x3", "x4", "0", "-x6", "2*x7", "x8"],
        &["x2", "0", "0", "-x1+x5", "-x2", "-x3", "x8", "0"],
        &["2*x3", "0", "0", "x6", "x3", "0", "-x1", "-x2"],
        &["-x4", "x1-x5", "-x6", "0", "x4", "0", "0", "x7"],
        &["0", "x2", "-x3", "-x4", "0", "-2*x6", "x7", "2*x8"],
        &["x6", "x3", "0", "0", "2*x6", "0", "-x4", "-x5"],
        &["-2*x7", "-x8", "x1", "0", "-x7", "x4", "0", "0"],
        &["-x8", "0", "x2", "-x7", "-2*x8", "x5", "0", "0"],
    ];
    assert_eq!(field_rows(&s), strs(&printed));
    assert_eq!(expected_invariant_count(&s), 2);
    let basis = invariants::polynomial_invariants(&s, 3);
    assert_eq!(basis.dimension(), 2);
    let i1 = parse_polynomial(SL3_COADJOINT_I1, s.ctx()).unwrap();
    let i2 = parse_polynomial(SL3_COADJOINT_I2, s.ctx()).unwrap();
    assert!(basis.contains(&i1) && basis.contains(&i2));
    assert_eq!(functional_independence(&[i1, i2]), 2);
    assert_eq!(basis.independent_count(), 2);
}

#[test]
fn sl3_adjoint() {
    let s = catalog::sl3().adjoint_fields();
    let printed: [&[&str]; 8] = [
        &["0", "x2", "2*x3", "-x4", "0", "x6", "-2*x7", "-x8"],
        &["x4", "-x1+x5", "x6", "0", "-x4", "0", "0", "-x7"],
        &["x7", "x8", "-2*x1-x5", "0", "0", "-x4", "0", "0"],
        &["-x2", "0", "0", "x1-x5", "x2", "x3", "-x8", "0"],
        &["0", "-x2", "x3", "x4", "0", "2*x6", "-x7", "-2*x8"],
        &["0", "0", "-x2", "x7", "x8", "-x1-2*x5", "0", "0"],
        &["-x3", "0", "0", "-x6", "0", "0", "2*x1+x5", "x2"],
        &["0", "-x3", "0", "0", "-x6", "0", "x4", "x1+2*x5"],
    ];
    assert_eq!(field_rows(&s), strs(&printed));
    assert_eq!(expected_invariant_count(&s), 2);
    let basis = invariants::polynomial_invariants(&s, 3);
    assert_eq!(basis.dimension(), 2);
    assert!(basis.contains(&parse_polynomial(SL3_ADJOINT_I1, s.ctx()).unwrap()));
    assert!(basis.contains(&parse_polynomial(SL3_ADJOINT_I2, s.ctx()).unwrap()));
    assert_eq!(invariants::polynomial_invariants(&s, 2).dimension(), 1);
}

#[test]
fn sl3_structure() {
    let sc = catalog::sl3();
    assert_eq!(sc.nonzero_pairs(), 21);
    assert!(sc.validate_jacobi());
}

fn flip_first_three(p: &Polynomial) -> Polynomial {
    let ctx = p.ctx();
    let images: Vec<Polynomial> = (0..ctx.len())
        .map(|i| {
            let v = Polynomial::var(ctx, i);
            if i < 3 {
                -v
            } else {
                v
            }
        })
        .collect();
    p.substitute(&images)
}

#[test]
fn real_forms_of_so4() {
    for name in ["so4", "so22"] {
        let sc = catalog::lookup(name)
            .unwrap()
            .structure_constants()
            .unwrap()
            .clone();
        assert_eq!(sc.dim(), 6);
        assert!(sc.validate_jacobi());
        let s = sc.coadjoint_fields();
        let basis = invariants::polynomial_invariants(&s, 2);
        assert_eq!(basis.dimension(), 2, "{name}");
        assert_eq!(basis.independent_count(), 2, "{name}");
        for f in basis.basis() {
            assert!(basis.contains(&flip_first_three(f)), "{name}: {f}");
        }
    }
}

#[test]
fn darboux_examples() {
    let helix = parse_system(r#"{"vars":["x","y","z"],"fields":[["y","-x","1"]]}"#).unwrap();
    let f = parse_darboux(
        r#"{"factors":[],"exp":[["1","rational","z"],["1","arctan","y/x"]]}"#,
        helix.ctx(),
    )
    .unwrap();
    assert!(invariants::verify_darboux(&helix, &f).unwrap());

    let sl2 = catalog::sl2_triple();
    let g = parse_darboux(r#"{"factors":[["x*z-y^2","5/2"]],"exp":[]}"#, sl2.ctx()).unwrap();
    assert!(invariants::verify_darboux(&sl2, &g).unwrap());

    let bpp2 = parse_system(r#"{"vars":["s","w"],"fields":[["s","s+w"]]}"#).unwrap();
    let h = parse_darboux(
        r#"{"factors":[],"exp":[["1","rational","w/s"],["-1","log","s"]]}"#,
        bpp2.ctx(),
    )
    .unwrap();
    assert!(invariants::verify_darboux(&bpp2, &h).unwrap());
}

#[test]
fn sl3_coadjoint_echelon_form() {
    let s = catalog::sl3().coadjoint_fields();
    let e = frobenius::rref(&s);
    assert_eq!(e.pivots(), &[0, 1, 2, 3, 4, 5]);
    assert!(e.is_abelian());
    let den = "(-x3*x5*x6+x6*x3*x1-x4*x3^2+x6^2*x2)";
    let printed = [
        (1, 6, format!("-(x7*x6^2+x4*x6*x1-x4^2*x3)/{den}")),
        (2, 7, format!("-(x7*x6*x2-x4*x3*x8)/{den}")),
        (3, 7, format!("-(-x3^2*x8-x2*x5*x3+x2^2*x6)/{den}")),
        (5, 6, format!("-(x7*x6*x2-x4*x3*x8)/{den}")),
    ];
    for (r, c, text) in printed {
        let want = jointinv_core::io::parse_scalar(&text, s.ctx()).unwrap();
        assert_eq!(e.rows()[r].coeff(c), &want, "entry ({r},{c})");
    }
}
