use super::*;
use crate::exactalg::{LaurentPoly, RatFun};
use crate::kacmoody::LieElt;
use crate::tensormat::TensorMat;
use crate::vars;

fn two(a: LieElt) -> LieElt {
    a.scale_int(2)
}

#[test]
fn t_matrices() {
    let tp = build_t(Sign::Plus, 5);
    let tm = build_t(Sign::Minus, 5);
    assert_eq!(tp.get((0, 1), &[0]), two(LieElt::f(0)));
    assert!(tp.get((1, 0), &[0]).is_zero());
    assert_eq!(tm.get((1, 0), &[0]), two(LieElt::e(0)).scale_int(-1));
    assert_eq!(extract_mode(&tp, &[3]).unwrap()[1][0], two(LieElt::e(3)));
    assert!(extract_mode(&tp, &[6]).is_err());
    assert!(extract_mode(&tm, &[1]).is_err());
    for t in [&tp, &tm] {
        for d in -5..=5 {
            let tr = &t.get((0, 0), &[d]) + &t.get((1, 1), &[d]);
            assert!(tr.is_zero());
        }
    }
}

#[test]
fn b_matrices() {
    let b = build_b(BFamily::Onsager, 4).unwrap();
    assert_eq!(b.get((0, 1), &[0]), two(&LieElt::e(0) + &LieElt::f(0)));
    assert_eq!(b.get((0, 0), &[2]), &LieElt::h(2) - &LieElt::h(-2));
    assert_eq!(b.get((1, 0), &[3]), two(&LieElt::e(3) + &LieElt::f(-3)));
    assert_eq!(b.get((0, 1), &[3]), two(&LieElt::e(-3) + &LieElt::f(3)));
    assert!(b.iter().all(|(_, _, l)| l.coeff(&crate::kacmoody::BasisSymbol::C).is_zero()));

    let b = build_b(BFamily::Augmented, 4).unwrap();
    let c_half = LieElt::c().scale_rat(&crate::exactalg::rat(1, 2));
    assert_eq!(b.get((0, 0), &[0]), &LieElt::h(0) + &c_half);
    assert_eq!(b.get((1, 1), &[0]), -(&LieElt::h(0) + &c_half));
    assert_eq!(b.get((0, 1), &[2]), two(&LieElt::f(2) + &LieElt::f(-3)));
    assert_eq!(b.get((1, 0), &[2]), two(&LieElt::e(2) + &LieElt::e(-1)));
    for (pos, deg, l) in b.iter() {
        let has_c = !l.coeff(&crate::kacmoody::BasisSymbol::C).is_zero();
        assert_eq!(has_c, deg[0] == 0 && pos.0 == pos.1, "{pos:?} {deg:?}");
    }

    let b = build_b(BFamily::Invariant, 4).unwrap();
    assert_eq!(b.get((1, 0), &[0]), two(LieElt::e(0)));

    let b = build_b(BFamily::KappaMinus, 4).unwrap();
    assert_eq!(b.meta()[0].trunc_lo, -1);
    assert!(!b.get((0, 1), &[-1]).is_zero());
}

#[test]
fn constant_bracket_is_matrix_bracket() {
    let (x, y) = (vars::x(), vars::y());
    let tp = build_t(Sign::Plus, 0);
    let br = series_bracket(&tp.in_var(x), &tp.in_var(y)).unwrap();
    // [h0/2, 2 f0] at position ((1,1),(1,2))
    assert_eq!(br.get((0, 1), &[0, 0]), two(LieElt::f(0)).scale_int(-1));
    assert!(series_bracket(&tp.in_var(x), &tp.in_var(x)).is_err());
}

#[test]
fn bracket_antisymmetry() {
    let (x, y) = (vars::x(), vars::y());
    let b = build_b(BFamily::Augmented, 3).unwrap();
    let ab = series_bracket(&b.in_var(x), &b.in_var(y)).unwrap();
    let ba = series_bracket(&b.in_var(y), &b.in_var(x)).unwrap();
    // [B1(x), B2(y)] = -P [B1(y), B2(x)] P with the variables exchanged
    let back = ba.swap_legs().unwrap().reorder(&[x, y]).unwrap();
    assert!(ab.add(&back).unwrap().is_zero());
}

#[test]
fn exact_range_rule() {
    let e = SupportMeta::new(Some(0), None, 0, 6).exact();
    assert_eq!(e, ExactRange { lo: None, hi: Some(6) });
    assert_eq!(e.shift(0, 2), ExactRange { lo: None, hi: Some(6) });
    assert_eq!(e.shift(-1, 2).hi, Some(5));
    let e = SupportMeta::new(None, Some(0), -6, 0).exact();
    assert_eq!(e.shift(0, 2), ExactRange { lo: Some(-4), hi: None });
}

#[test]
fn clearing_by_one_compares_full_window() {
    let tp = build_t(Sign::Plus, 3);
    let cmp = clear_and_compare(&[Product::plain(tp.clone())], &[Product::plain(tp)]).unwrap();
    assert!(cmp.clearing.is_one());
    assert_eq!(cmp.region.bounds, vec![(0, 3)]);
    assert!(cmp.residual.is_zero());
}

#[test]
fn safe_region_with_clearing() {
    let (x, y) = (vars::x(), vars::y());
    let tp = build_t(Sign::Plus, 5);
    let br = series_bracket(&tp.in_var(x), &tp.in_var(y)).unwrap();
    let px = LaurentPoly::var(x);
    let py = LaurentPoly::var(y);
    let d = &(&px - &py) * &(&(&px * &py) - &LaurentPoly::one());
    let inv = RatFun::new(LaurentPoly::one(), &d).unwrap();
    let scalar = TensorMat::identity(2).scale(&inv);
    let lhs = Product {
        scalar,
        series: br.clone(),
        scalar_left: true,
        sign: 1,
    };
    let rhs = Product {
        scalar: TensorMat::identity(2).scale(&inv),
        series: br,
        scalar_left: false,
        sign: 1,
    };
    let cmp = clear_and_compare(&[lhs], &[rhs]).unwrap();
    assert_eq!(cmp.region.bounds, vec![(0, 5), (0, 5)]);
}

#[test]
fn frt_relations() {
    let rep = check_frt_relations(6).unwrap();
    assert!(rep.passed(), "{:?}", rep.details);
    let rep = check_frt_relations_with(6, false).unwrap();
    assert!(!rep.passed());
    assert!(rep.details.iter().any(|w| w.residual.contains('c')));
    assert!(matches!(check_frt_relations(1), Err(crate::Error::WindowTooSmall { .. })));
}

#[test]
fn exchange_relations() {
    for fam in BFamily::ALL {
        let rep = check_exchange(fam, 6).unwrap();
        assert!(rep.passed(), "{fam}: {:?}", rep.details);
    }
}

#[test]
fn exchange_region_grows_with_window() {
    let a = check_exchange(BFamily::Onsager, 6).unwrap();
    let b = check_exchange(BFamily::Onsager, 8).unwrap();
    assert!(b.compared > a.compared);
}

#[test]
fn exchange_with_wrong_rbar_fails() {
    let (x, y) = (vars::x(), vars::y());
    let b = build_b(BFamily::Onsager, 5).unwrap();
    let rbar = crate::tensormat::build_rbar(&BFamily::Augmented.boundary(), x, y).unwrap();
    let rep = check_exchange_with("mismatched", &b, &rbar, 5).unwrap();
    assert!(!rep.passed() && !rep.details.is_empty());
}
