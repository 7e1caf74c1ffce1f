//! Matrices over rational functions with tensor-leg structure, the
//! r-matrix and boundary matrices, and the matrix-identity checkers.

mod boundary;
mod checks;
mod matrix;

pub use boundary::{
    build_boundary, build_r, build_rbar, symbolic_boundary, BoundaryFamily, BoundaryMat, Params,
};
pub use checks::{
    check_cybe, check_cybe_derivative, check_cybe_sampled, check_m_condition, check_nscybe,
    check_nscybe_sampled, check_r_symmetries, check_reflection, check_u_conditions,
    rbar_skew_residual,
};
pub use matrix::{RMat, TensorMat};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, LaurentPoly, RatFun, Variable};
    use crate::vars;

    /// Tensor product of matrix units `E_{ij}` given 1-based.
    fn units(pairs: &[(usize, usize)]) -> TensorMat {
        let legs = pairs.len();
        let (mut row, mut col) = (0, 0);
        for &(i, j) in pairs {
            row = row * 2 + (i - 1);
            col = col * 2 + (j - 1);
        }
        TensorMat::zeros(legs).with_entry(row, col, RatFun::one())
    }

    fn same(a: &TensorMat, b: &TensorMat) -> bool {
        a.sub(b).unwrap().is_zero()
    }

    #[test]
    fn r_matrix_entries() {
        let u = vars::u();
        let r = build_r(u);
        let pu = LaurentPoly::var(u);
        let expected = RatFun::new(LaurentPoly::int(-2), &(&pu - &LaurentPoly::one())).unwrap();
        assert!(r.get(1, 2).equals(&expected));
        let expected = RatFun::new(
            -&(&pu + &LaurentPoly::one()),
            &(&pu - &LaurentPoly::one()).scale(&rat(2, 1)),
        )
        .unwrap();
        assert!(r.get(0, 0).equals(&expected));
        assert!(r.trace().is_zero());
    }

    #[test]
    fn leg_embedding_examples() {
        let m = units(&[(1, 2), (2, 1)]);
        let id = TensorMat::identity(1);
        let e = m.leg_embed(&[1, 2], 3).unwrap();
        let expected = units(&[(1, 2), (2, 1), (1, 1)])
            .add(&units(&[(1, 2), (2, 1), (2, 2)]))
            .unwrap();
        assert!(same(&e, &expected));

        let e = m.leg_embed(&[1, 3], 3).unwrap();
        let expected = units(&[(1, 2), (1, 1), (2, 1)])
            .add(&units(&[(1, 2), (2, 2), (2, 1)]))
            .unwrap();
        assert!(same(&e, &expected));

        let idid = id.leg_embed(&[1], 2).unwrap();
        assert!(same(&idid.leg_embed(&[2, 3], 3).unwrap(), &TensorMat::identity(3)));
        assert!(m.leg_embed(&[1, 4], 3).is_err());
        assert!(m.leg_embed(&[2, 2], 3).is_err());
    }

    #[test]
    fn partial_transpose_examples() {
        let m = units(&[(1, 2), (2, 1)]);
        assert!(same(&m.partial_transpose(1).unwrap(), &units(&[(2, 1), (2, 1)])));
        let r = build_r(vars::u());
        let back = r.partial_transpose(2).unwrap().partial_transpose(2).unwrap();
        assert!(same(&back, &r));
        assert!(r.partial_transpose(3).is_err());
    }

    #[test]
    fn embed_commutes_with_disjoint_transpose() {
        let r = build_r(vars::u());
        let a = r.leg_embed(&[1, 3], 3).unwrap().partial_transpose(2).unwrap();
        let b = r.leg_embed(&[1, 3], 3).unwrap();
        // leg 2 is the identity there, so its transpose is trivial
        assert!(same(&a, &b));
        let a = r.partial_transpose(2).unwrap().leg_embed(&[1, 3], 3).unwrap();
        let b = r.leg_embed(&[1, 3], 3).unwrap().partial_transpose(3).unwrap();
        assert!(same(&a, &b));
    }

    #[test]
    fn partial_trace_of_product() {
        let a = units(&[(1, 2)]);
        let b = units(&[(2, 1)]);
        let ab = a.leg_embed(&[1], 2).unwrap().mul(&b.leg_embed(&[2], 2).unwrap()).unwrap();
        assert!(ab.partial_trace(1).unwrap().is_zero());
        let id_b = TensorMat::identity(1).leg_embed(&[1], 2).unwrap()
            .mul(&b.leg_embed(&[2], 2).unwrap()).unwrap();
        assert!(same(&id_b.partial_trace(1).unwrap(), &b.scale(&RatFun::int(2))));
    }

    #[test]
    fn boundary_constructors() {
        let u = symbolic_boundary(BoundaryFamily::UDiag).unwrap();
        assert!(u.matrix().get(1, 1).equals(&-RatFun::var(Variable::parameter("k*"))));

        let u = symbolic_boundary(BoundaryFamily::UOffdiag).unwrap();
        let x = vars::x();
        assert!(u.matrix().get(0, 1).equals(&RatFun::from_poly(LaurentPoly::var_half_pow(x, -1).unwrap())));
        assert!(u.matrix().get(1, 0).equals(&RatFun::from_poly(-LaurentPoly::var_half_pow(x, 1).unwrap())));

        let m = symbolic_boundary(BoundaryFamily::MOns).unwrap();
        let mu = RatFun::var(Variable::parameter("mu"));
        assert!(m.matrix().get(0, 0).equals(&mu.checked_div(&RatFun::var(x)).unwrap()));
        assert!(m.matrix().get(1, 1).equals(&(&mu * &RatFun::var(x))));

        assert!(matches!(
            build_boundary(BoundaryFamily::MOns, &Params::new()),
            Err(crate::Error::MissingParameter(_))
        ));
        assert!("nonsense".parse::<BoundaryFamily>().is_err());
    }

    #[test]
    fn general_k_determinant() {
        let k = symbolic_boundary(BoundaryFamily::KGeneral).unwrap();
        let p = |n: &str| RatFun::var(Variable::parameter(n));
        let x = RatFun::var(vars::x());
        let xm = &x - &x.inv().unwrap();
        let expected = &(&(&p("alpha") * &p("delta")) * &(&xm * &xm))
            + &(&(&p("beta") + &(&p("gamma") * &x.inv().unwrap())) * &(&p("beta") + &(&p("gamma") * &x)));
        assert!(k.matrix().det_2x2().equals(&expected));
    }

    #[test]
    fn classical_r_matrix_checks_pass() {
        let r = build_r(vars::u());
        assert!(check_cybe(&r).unwrap().passed());
        assert!(check_cybe_derivative(&r).unwrap().passed());
        assert!(check_cybe_sampled(&r, 7, 5).unwrap().passed());
        assert!(check_r_symmetries(&r).unwrap().passed());
        assert!(check_r_symmetries(&TensorMat::zeros(2)).unwrap().passed());
    }

    #[test]
    fn mutated_r_matrix_fails() {
        let r = build_r(vars::u());
        let doubled = r.with_entry(1, 2, r.get(1, 2).scale(&rat(2, 1)));
        let rep = check_cybe(&doubled).unwrap();
        assert!(!rep.passed() && !rep.details.is_empty());
        assert!(!check_cybe_sampled(&doubled, 7, 3).unwrap().passed());

        // r11 alone is odd under u -> 1/u, so flipping it keeps both symmetries
        let flipped = r.with_entry(0, 0, -r.get(0, 0));
        assert!(check_r_symmetries(&flipped).unwrap().passed());
        let flipped = r.with_entry(1, 1, -r.get(1, 1));
        let rep = check_r_symmetries(&flipped).unwrap();
        assert!(!rep.passed() && !rep.details.is_empty());
    }

    #[test]
    fn u_conditions() {
        let mut params = BoundaryFamily::UDiag.symbolic_params();
        assert!(check_u_conditions(&build_boundary(BoundaryFamily::UDiag, &params).unwrap(), 1)
            .unwrap()
            .passed());
        params.insert("k".into(), RatFun::one());
        params.insert("k*".into(), RatFun::one());
        let udiag = build_boundary(BoundaryFamily::UDiag, &params).unwrap();
        assert!(check_u_conditions(&udiag, 1).unwrap().passed());
        assert!(!check_u_conditions(&udiag, -1).unwrap().passed());

        for sign in [1, -1] {
            let mut p = Params::new();
            p.insert("sign".into(), RatFun::int(sign));
            let u = build_boundary(BoundaryFamily::UOffdiag, &p).unwrap();
            assert!(check_u_conditions(&u, sign).unwrap().passed(), "sign {sign}");
            assert!(!check_u_conditions(&u, -sign).unwrap().passed());
        }
    }

    #[test]
    fn reflection_equation() {
        for fam in [
            BoundaryFamily::KGeneral,
            BoundaryFamily::KappaPlus,
            BoundaryFamily::KappaMinus,
            BoundaryFamily::UDiag,
            BoundaryFamily::UOffdiag,
        ] {
            let k = symbolic_boundary(fam).unwrap();
            assert!(check_reflection(&k).unwrap().passed(), "{fam}");
        }
        let k = symbolic_boundary(BoundaryFamily::KGeneral).unwrap();
        let p = |n: &str| RatFun::var(Variable::parameter(n));
        let bad = k
            .with_entry(0, 1, &p("beta") + &(&p("gamma") * &RatFun::var(vars::x())))
            .unwrap();
        assert!(!check_reflection(&bad).unwrap().passed());
    }

    #[test]
    fn rbar_examples() {
        let (x, y) = (vars::x(), vars::y());
        let mut p = Params::new();
        p.insert("k".into(), RatFun::one());
        p.insert("k*".into(), RatFun::one());
        let u = build_boundary(BoundaryFamily::UDiag, &p).unwrap();
        let rb = build_rbar(&u, x, y).unwrap();
        let px = LaurentPoly::var(x);
        let py = LaurentPoly::var(y);
        let a = RatFun::new(-&(&px + &py), &(&px - &py).scale(&rat(2, 1))).unwrap();
        let xy = &px * &py;
        let b = RatFun::new(&LaurentPoly::one() + &xy, &(&xy - &LaurentPoly::one()).scale(&rat(2, 1))).unwrap();
        assert!(rb.get(0, 0).equals(&(&a + &b)));

        let off = symbolic_boundary(BoundaryFamily::UOffdiag).unwrap();
        let rb = build_rbar(&off, x, y).unwrap();
        assert!(!rbar_skew_residual(&rb).unwrap().is_zero());
        assert!(build_rbar(&off, x, x).is_err());
    }

    #[test]
    fn nscybe_for_twists() {
        let (x, y) = (vars::x(), vars::y());
        for fam in [
            BoundaryFamily::UDiag,
            BoundaryFamily::UOffdiag,
            BoundaryFamily::KGeneral,
            BoundaryFamily::KappaPlus,
            BoundaryFamily::KappaMinus,
        ] {
            let rb = build_rbar(&symbolic_boundary(fam).unwrap(), x, y).unwrap();
            let rep = check_nscybe(&rb).unwrap();
            assert!(rep.passed(), "{fam}: {:?}", rep.details);
            assert!(check_nscybe_sampled(&rb, 3, 3).unwrap().passed());
        }
        let k = symbolic_boundary(BoundaryFamily::KGeneral).unwrap();
        let p = |n: &str| RatFun::var(Variable::parameter(n));
        let bad = k
            .with_entry(0, 1, &p("beta") + &(&p("gamma") * &RatFun::var(vars::x())))
            .unwrap();
        let rb = build_rbar(&bad, x, y).unwrap();
        assert!(!check_nscybe(&rb).unwrap().passed());
    }

    #[test]
    fn m_conditions() {
        let (x, y) = (vars::x(), vars::y());
        let mut p = Params::new();
        p.insert("k".into(), RatFun::one());
        p.insert("k*".into(), RatFun::one());
        let ons = build_rbar(&build_boundary(BoundaryFamily::UDiag, &p).unwrap(), x, y).unwrap();
        let aug = build_rbar(&symbolic_boundary(BoundaryFamily::UOffdiag).unwrap(), x, y).unwrap();
        let inv = build_rbar(&symbolic_boundary(BoundaryFamily::KappaPlus).unwrap(), x, y).unwrap();
        let m_ons = symbolic_boundary(BoundaryFamily::MOns).unwrap();
        let m_aug = symbolic_boundary(BoundaryFamily::MAug).unwrap();
        let m_inv = symbolic_boundary(BoundaryFamily::MInv).unwrap();
        assert!(check_m_condition(&m_ons, &ons).unwrap().passed());
        assert!(check_m_condition(&m_aug, &aug).unwrap().passed());
        assert!(check_m_condition(&m_inv, &inv).unwrap().passed());
        assert!(!check_m_condition(&m_ons, &aug).unwrap().passed());
    }
}
