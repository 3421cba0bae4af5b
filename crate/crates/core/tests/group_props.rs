use proptest::prelude::*;
use sigma_core::groupfix::{
    basis_check, character_decomposition_check, commutation_check, paired_charpoly_check,
    sn_fixed_point_certificate, thm3_certificate, AbelianGroup, PairedElement,
};
use sigma_core::{CycloNum, Matrix, MultiPoly, Ring, Status};

/// The ten abelian groups of order 2 to 8, up to isomorphism.
const GROUPS: [&str; 10] = ["2", "3", "4", "2x2", "5", "6", "7", "8", "2x4", "2x2x2"];

fn group(i: usize) -> AbelianGroup {
    AbelianGroup::parse(GROUPS[i]).unwrap()
}

/// `det(t·I − M)` by fraction-free elimination over `Q(ζ)[t]`, independent of
/// the Berkowitz kernel.
fn char_poly_via_det(m: &Matrix<CycloNum>) -> MultiPoly {
    let n = m.rows();
    let t = MultiPoly::var("t");
    let tm = Matrix::from_fn(n, n, |i, j| {
        let e = MultiPoly::constant(m.get(i, j).clone());
        if i == j {
            &t - &e
        } else {
            -e
        }
    });
    tm.determinant()
}

fn closed_form(n: usize, pe: &PairedElement) -> MultiPoly {
    let t = MultiPoly::var("t");
    (&t.pow(pe.c) - &MultiPoly::constant(pe.epsilon.clone())).pow(n as u64 / pe.c)
}

#[test]
fn paired_charpoly_all_small_groups() {
    for i in 0..GROUPS.len() {
        let g = group(i);
        let r = paired_charpoly_check(&g);
        assert_eq!(r.status, Status::Verified, "{}", g);
        assert_eq!(commutation_check(&g).status, Status::Verified, "{}", g);
        assert_eq!(basis_check(&g).status, Status::Verified, "{}", g);
    }
}

#[test]
fn epsilon_is_a_sign_and_c_divides_n() {
    for i in 0..GROUPS.len() {
        let g = group(i);
        for pe in PairedElement::all(&g) {
            assert_eq!(g.order() as u64 % pe.c, 0);
            assert!(pe.epsilon.is_one() || pe.epsilon == CycloNum::from_int(-1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn charpoly_matches_determinant_oracle(gi in 0..GROUPS.len(), pick in any::<prop::sample::Index>()) {
        let g = group(gi);
        let pairs = PairedElement::all(&g);
        let pe = &pairs[pick.index(pairs.len())];
        let m = pe.matrix(&g);
        prop_assert_eq!(char_poly_via_det(&m), closed_form(g.order(), pe));
        prop_assert_eq!(m.pow(pe.c), Matrix::scalar(g.order(), pe.epsilon.clone()));
    }

    #[test]
    fn characters_are_homomorphisms(gi in 0..GROUPS.len(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let g = group(gi);
        let els = g.elements();
        let chars = g.characters();
        let (x, y) = (&els[a.index(els.len())], &els[b.index(els.len())]);
        let chi = &chars[c.index(chars.len())];
        prop_assert_eq!(chi.value(&g, &g.add(x, y)), chi.value(&g, x) * chi.value(&g, y));
        prop_assert!(chi.value(&g, x).pow_u(g.exponent()).is_one());
    }
}

#[test]
fn product_system_instances() {
    for (src, m, i, j) in [
        ("2", 2, 2, 1),
        ("2x2", 2, 2, 1),
        ("2x3", 6, 6, 1),
        ("3", 3, 3, 2),
    ] {
        let g = AbelianGroup::parse(src).unwrap();
        let r = thm3_certificate(&g, m, i, j).unwrap();
        assert_eq!(r.status, Status::Verified, "{src}\n{}", r.to_text());
    }
}

#[test]
fn product_system_hypothesis_failure_is_not_verified() {
    let g = AbelianGroup::parse("2x2").unwrap();
    let r = thm3_certificate(&g, 3, 3, 1).unwrap();
    assert_ne!(r.status, Status::Verified);
}

#[test]
fn decomposition_and_trace_certificates() {
    for (n1, n2) in [(1, 4), (2, 4), (1, 5), (3, 3)] {
        let r = character_decomposition_check(n1, n2).unwrap();
        assert_eq!(r.status, Status::Verified);
    }
    // n1 = n2 with m2 − m1 even: −n2/n1 = −1 and (−1)^2 = 1.
    let r = sn_fixed_point_certificate(3, 3, 1, 3).unwrap();
    assert_eq!(r.status, Status::Refuted);
    assert!(r.witness().is_some());
}
