use std::collections::BTreeMap;

use proptest::prelude::*;
use sigma_core::algebras::{
    centrality_check, companion_matrix, general_ext_sigma, model_matrix, model_relations_check,
    sample_element, sigma_all_in_algebra, sigma_of_model, AlgebraElement, SearchConfig, TensorSpec,
};
use sigma_core::expr::parse_poly;
use sigma_core::symfun::{newton_convert, NewtonDirection};
use sigma_core::{CycloNum, MultiPoly, RatFunc, Status};

#[test]
fn symbol_relations_up_to_degree_five() {
    for r in 2..=5 {
        let spec = TensorSpec::symbol(r, "z", "w").unwrap();
        assert_eq!(
            model_relations_check(&spec).status,
            Status::Verified,
            "r = {r}"
        );
    }
    for src in [
        "symbol 2 z1 w1, symbol 2 z2 w2",
        "symbol 2 z1 w1, symbol 3 z2 w2",
    ] {
        let spec = TensorSpec::parse(src).unwrap();
        assert_eq!(
            model_relations_check(&spec).status,
            Status::Verified,
            "{src}"
        );
    }
}

#[test]
fn centrality_on_fifty_elements() {
    for r in [2, 3] {
        let spec = TensorSpec::symbol(r, "z", "w").unwrap();
        let rep = centrality_check(&spec, 50, 2024).unwrap();
        assert_eq!(rep.status, Status::Verified, "{}", rep.to_text());
    }
}

#[test]
fn sigma_of_generator_x() {
    for r in 2..=5u32 {
        let spec = TensorSpec::symbol(r, "z", "w").unwrap();
        let x = AlgebraElement::parse(&spec, "x").unwrap();
        let s = sigma_all_in_algebra(&spec, &x).unwrap();
        let mut expect = vec![MultiPoly::zero(); r as usize];
        expect[r as usize - 1] = parse_poly("-z").unwrap();
        assert_eq!(s, expect, "r = {r}");
    }
}

fn quaternion() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-5i64..=5)
}

fn quat_elem(spec: &TensorSpec, c: [i64; 4]) -> AlgebraElement {
    let src = format!("{} + {}*x + {}*y + {}*x*y", c[0], c[1], c[2], c[3]);
    AlgebraElement::parse(spec, &src).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn quaternion_norm_form(c in quaternion()) {
        let spec = TensorSpec::symbol(2, "z", "w").unwrap();
        let s = sigma_all_in_algebra(&spec, &quat_elem(&spec, c)).unwrap();
        let expect = parse_poly(&format!(
            "{} - {}*z - {}*w + {}*z*w",
            c[0] * c[0], c[1] * c[1], c[2] * c[2], c[3] * c[3]
        )).unwrap();
        prop_assert_eq!(&s[1], &expect);
        prop_assert_eq!(&s[0], &MultiPoly::from_int(-2 * c[0]));
    }

    #[test]
    fn sigma1_linear_and_norm_multiplicative(t in 0u64..1000) {
        let spec = TensorSpec::symbol(2, "z", "w").unwrap();
        let cfg = SearchConfig::new(1, 99, 1);
        let x = sample_element(&spec, &cfg, 2 * t);
        let y = sample_element(&spec, &cfg, 2 * t + 1);
        let mut sum = x.clone();
        for (b, c) in &y.coords {
            sum.add_term(b.clone(), c.clone());
        }
        let sx = sigma_all_in_algebra(&spec, &x).unwrap();
        let sy = sigma_all_in_algebra(&spec, &y).unwrap();
        let ss = sigma_all_in_algebra(&spec, &sum).unwrap();
        prop_assert_eq!(&ss[0], &(&sx[0] + &sy[0]));
        let prod = model_matrix(&spec, &x).mul(&model_matrix(&spec, &y));
        let sp = sigma_of_model(&spec, &prod).unwrap();
        prop_assert_eq!(&sp[1], &(&sx[1] * &sy[1]));
    }
}

#[test]
fn general_extension_companion_fixture() {
    let x = parse_poly("x").unwrap();
    for n in 1..=6 {
        for i in 1..=n {
            assert_eq!(
                general_ext_sigma(n, &x, i).unwrap(),
                RatFunc::var(&format!("a{i}"))
            );
        }
    }
}

#[test]
fn newton_bridge() {
    for n in 1..=5usize {
        let c = companion_matrix(n);
        let p: Vec<MultiPoly> = (1..=n).map(|k| c.pow(k as u64).trace()).collect();
        let e = newton_convert(NewtonDirection::PowersToElementary, &p, n).unwrap();
        for (i, ei) in e.iter().enumerate() {
            let a = MultiPoly::var(&format!("a{}", i + 1));
            let expect = if i % 2 == 0 { -a } else { a };
            assert_eq!(ei, &expect, "n = {n}, i = {}", i + 1);
        }
    }
}

#[test]
fn tensor_sigma_is_central() {
    let spec = TensorSpec::parse("symbol 2 z1 w1, symbol 2 z2 w2").unwrap();
    let elem = AlgebraElement::parse(&spec, "1 + x1 + y2 + x1*y1*x2").unwrap();
    let s = sigma_all_in_algebra(&spec, &elem).unwrap();
    assert_eq!(s.len(), 4);
    let centers = ["z1", "w1", "z2", "w2"];
    for p in &s {
        assert!(
            p.used_vars().iter().all(|v| centers.contains(&v.as_str())),
            "{p}"
        );
    }
    // Evaluate the norm at a point and compare with the determinant of the
    // numeric model (u_t, v_t chosen as square roots of the point).
    let env: BTreeMap<String, CycloNum> = [("z1", 4), ("w1", 9), ("z2", 1), ("w2", 16)]
        .iter()
        .map(|(k, v)| (k.to_string(), CycloNum::from_int(*v)))
        .collect();
    let roots: BTreeMap<String, CycloNum> = [("u_z1", 2), ("v_w1", 3), ("u_z2", 1), ("v_w2", 4)]
        .iter()
        .map(|(k, v)| (k.to_string(), CycloNum::from_int(*v)))
        .collect();
    let m = model_matrix(&spec, &elem).map(|e| e.eval(&roots).unwrap());
    assert_eq!(s[3].eval(&env).unwrap(), m.determinant());
}
