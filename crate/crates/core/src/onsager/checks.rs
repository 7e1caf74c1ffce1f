use super::algebra::{
    bracket_symbols, bracket_with, kappa_hom, morphism_image, tilde_image,
    OnsElt, OnsFamily, OnsKind, OnsSymbol,
};
use crate::error::Result;
use crate::kacmoody::{bracket, AutoMap, LieElt};
use crate::report::{CheckReport, Collector};

/// Bracket on symbols, as used by the `_with` checks.
pub type SymbolBracket = dyn Fn(&OnsSymbol, &OnsSymbol) -> Result<OnsElt>;

fn bracket_elts(a: &OnsElt, b: &OnsElt, br: &SymbolBracket) -> Result<OnsElt> {
    bracket_with(a, b, br)
}

/// Jacobi identity on all triples of canonical symbols with mode at most `window`.
pub fn check_jacobi(family: OnsFamily, window: i64) -> Result<CheckReport> {
    check_jacobi_with(family, &bracket_symbols, window)
}

pub fn check_jacobi_with(family: OnsFamily, br: &SymbolBracket, window: i64) -> Result<CheckReport> {
    let mut c = Collector::new(format!("Jacobi identity ({family})"));
    c.region(format!("all triples with |mode| <= {window}"));
    let basis: Vec<OnsElt> = family
        .basis(window)
        .iter()
        .map(|s| OnsElt::sym(s.kind, s.mode))
        .collect();
    let syms = family.basis(window);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate().skip(i + 1) {
            let ab = bracket_elts(a, b, br)?;
            for (k, cc) in basis.iter().enumerate().skip(j + 1) {
                let bc = bracket_elts(b, cc, br)?;
                let ca = bracket_elts(cc, a, br)?;
                let sum = &(&bracket_elts(a, &bc, br)? + &bracket_elts(b, &ca, br)?)
                    + &bracket_elts(cc, &ab, br)?;
                c.compare(
                    || format!("({}, {}, {})", syms[i], syms[j], syms[k]),
                    (!sum.is_zero()).then(|| sum.to_string()),
                );
            }
        }
    }
    Ok(c.finish())
}

/// `phi([a,b]) = [phi(a), phi(b)]` for the embedding into affine sl2.
pub fn check_morphism(family: OnsFamily, window: i64) -> Result<CheckReport> {
    check_morphism_with(family, &morphism_image, window)
}

pub fn check_morphism_with(
    family: OnsFamily,
    image: &dyn Fn(&OnsSymbol) -> LieElt,
    window: i64,
) -> Result<CheckReport> {
    let mut c = Collector::new(format!("morphism ({family})"));
    c.region(format!("all pairs with |mode| <= {window}"));
    hom_pairs(&mut c, &family.basis(window), image)?;
    Ok(c.finish())
}

fn hom_pairs(c: &mut Collector, syms: &[OnsSymbol], image: &dyn Fn(&OnsSymbol) -> LieElt) -> Result<()> {
    let images: Vec<LieElt> = syms.iter().map(image).collect();
    for (i, a) in syms.iter().enumerate() {
        for (j, b) in syms.iter().enumerate().skip(i + 1) {
            let lhs = bracket_symbols(a, b)?.map_lie(image);
            let rhs = bracket(&images[i], &images[j]);
            let res = &lhs - &rhs;
            c.compare(|| format!("[{a}, {b}]"), (!res.is_zero()).then(|| res.to_string()));
        }
    }
    Ok(())
}

fn sym(kind: OnsKind, mode: i64) -> OnsElt {
    OnsElt::sym(kind, mode)
}

/// The relations `(lhs, rhs, label)` defining each family by generators.
fn generator_relations(family: OnsFamily, br: &SymbolBracket) -> Result<Vec<(String, OnsElt, OnsElt)>> {
    use OnsKind::*;
    let b = |x: &OnsElt, y: &OnsElt| bracket_elts(x, y, br);
    let mut out = Vec::new();
    match family {
        OnsFamily::Onsager => {
            let (a0, a1) = (sym(A, 0), sym(A, 1));
            let a01 = b(&a0, &a1)?;
            let lhs = b(&a0, &b(&a0, &a01)?)?;
            out.push(("[A0,[A0,[A0,A1]]] = 16[A0,A1]".into(), lhs, a01.scale_int(16)));
            let a10 = b(&a1, &a0)?;
            let lhs = b(&a1, &b(&a1, &a10)?)?;
            out.push(("[A1,[A1,[A1,A0]]] = 16[A1,A0]".into(), lhs, a10.scale_int(16)));
        }
        OnsFamily::Augmented => {
            let (zp, zm, k0) = (sym(Zp, 0), sym(Zm, 0), sym(K, 0));
            for (s, (x, y)) in [("+", (&zp, &zm)), ("-", (&zm, &zp))] {
                let other = if s == "+" { "-" } else { "+" };
                let lhs = b(x, &b(x, &b(x, y)?)?)?;
                out.push((format!("[Z{s}0,[Z{s}0,[Z{s}0,Z{other}0]]] = 0"), lhs, OnsElt::zero()));
            }
            out.push(("[K0,Z+0] = 4Z+0".into(), b(&k0, &zp)?, zp.scale_int(4)));
            out.push(("[K0,Z-0] = -4Z-0".into(), b(&k0, &zm)?, zm.scale_int(-4)));
        }
        OnsFamily::Invariant => {
            let (h0, h1, e0, e1, f0, f1) = (sym(H, 0), sym(H, 1), sym(E, 0), sym(E, 1), sym(F, 0), sym(F, 1));
            let rels = [
                ("[H0,E0] = 4E0", b(&h0, &e0)?, e0.scale_int(4)),
                ("[H0,F0] = -4F0", b(&h0, &f0)?, f0.scale_int(-4)),
                ("[E0,F0] = 2H0", b(&e0, &f0)?, h0.scale_int(2)),
                ("[H0,E1] = 4E1", b(&h0, &e1)?, e1.scale_int(4)),
                ("[H1,E0] = 4E1", b(&h1, &e0)?, e1.scale_int(4)),
                ("[H0,F1] = -4F1", b(&h0, &f1)?, f1.scale_int(-4)),
                ("[H1,F0] = -4F1", b(&h1, &f0)?, f1.scale_int(-4)),
                ("[E0,F1] = 2H1", b(&e0, &f1)?, h1.scale_int(2)),
                ("[E1,F0] = 2H1", b(&e1, &f0)?, h1.scale_int(2)),
                ("[H1,[E1,F1]] = 0", b(&h1, &b(&e1, &f1)?)?, OnsElt::zero()),
            ];
            out.extend(rels.into_iter().map(|(l, x, y)| (l.to_string(), x, y)));
        }
    }
    Ok(out)
}

/// The Dolan-Grady type relations, both in the abstract algebra and for the
/// images in affine sl2.
pub fn check_dolan_grady(family: OnsFamily) -> Result<CheckReport> {
    check_dolan_grady_with(family, &bracket_symbols)
}

pub fn check_dolan_grady_with(family: OnsFamily, br: &SymbolBracket) -> Result<CheckReport> {
    let mut c = Collector::new(format!("Dolan-Grady relations ({family})"));
    c.region("generator relations, abstract and in affine sl2");
    for (label, lhs, rhs) in generator_relations(family, br)? {
        let res = &lhs - &rhs;
        c.compare(|| format!("abstract {label}"), (!res.is_zero()).then(|| res.to_string()));
    }
    for (label, lhs, rhs) in image_relations(family) {
        let res = &lhs - &rhs;
        c.compare(|| format!("sl2 {label}"), (!res.is_zero()).then(|| res.to_string()));
    }
    Ok(c.finish())
}

/// Generator relations evaluated directly on the affine sl2 images.
fn image_relations(family: OnsFamily) -> Vec<(String, LieElt, LieElt)> {
    use OnsKind::*;
    let im = |k: OnsKind, n: i64| sym(k, n).map_lie(morphism_image);
    let nest = |x: &LieElt, y: &LieElt| bracket(x, &bracket(x, &bracket(x, y)));
    match family {
        OnsFamily::Onsager => {
            let (a0, a1) = (im(A, 0), im(A, 1));
            vec![
                ("DG A0".into(), nest(&a0, &a1), bracket(&a0, &a1).scale_int(16)),
                ("DG A1".into(), nest(&a1, &a0), bracket(&a1, &a0).scale_int(16)),
            ]
        }
        OnsFamily::Augmented => {
            let (zp, zm, k0) = (im(Zp, 0), im(Zm, 0), im(K, 0));
            vec![
                ("Z+ cubic".into(), nest(&zp, &zm), LieElt::zero()),
                ("Z- cubic".into(), nest(&zm, &zp), LieElt::zero()),
                ("[K0,Z+0]".into(), bracket(&k0, &zp), zp.scale_int(4)),
                ("[K0,Z-0]".into(), bracket(&k0, &zm), zm.scale_int(-4)),
            ]
        }
        OnsFamily::Invariant => {
            let (h1, e1, f1) = (im(H, 1), im(E, 1), im(F, 1));
            vec![("[H1,[E1,F1]]".into(), bracket(&h1, &bracket(&e1, &f1)), LieElt::zero())]
        }
    }
}

/// Affine sl2 automorphisms fixing each family pointwise.
pub fn fixed_point_maps(family: OnsFamily) -> Vec<(AutoMap, bool)> {
    match family {
        OnsFamily::Onsager => vec![(AutoMap::Theta1, false)],
        OnsFamily::Augmented => vec![(AutoMap::Theta2, false)],
        OnsFamily::Invariant => vec![(AutoMap::LusztigPlus, false), (AutoMap::LusztigMinus, true)],
    }
}

/// Every image with mode at most `window` is fixed by the family's
/// automorphism; the invariant family is checked in both kappa forms.
pub fn check_fixed_point(family: OnsFamily, window: i64) -> Result<CheckReport> {
    let mut c = Collector::new(format!("fixed points ({family})"));
    c.region(format!("images with |mode| <= {window}"));
    for (map, tilde) in fixed_point_maps(family) {
        fixed_points_into(&mut c, family, map, tilde, window);
    }
    Ok(c.finish())
}

/// [`check_fixed_point`] with an explicit map, e.g. a wrong one.
pub fn check_fixed_point_with(family: OnsFamily, map: AutoMap, tilde: bool, window: i64) -> Result<CheckReport> {
    let mut c = Collector::new(format!("fixed points ({family}, {map})"));
    c.region(format!("images with |mode| <= {window}"));
    fixed_points_into(&mut c, family, map, tilde, window);
    Ok(c.finish())
}

fn fixed_points_into(c: &mut Collector, family: OnsFamily, map: AutoMap, tilde: bool, window: i64) {
    for s in family.basis(window) {
        let img = if family == OnsFamily::Invariant {
            kappa_hom(&s, tilde)
        } else {
            morphism_image(&s)
        };
        let res = &map.apply(&img) - &img;
        c.compare(
            || format!("{map}({s}{})", if tilde { "~" } else { "" }),
            (!res.is_zero()).then(|| res.to_string()),
        );
    }
}

/// The invariant algebra maps homomorphically onto both kappa subalgebras:
/// `E -> Ebar/2, F -> Fbar/2, H -> Hbar` and the same with tildes.
pub fn check_kappa_isomorphism(window: i64) -> Result<CheckReport> {
    check_kappa_isomorphism_with(&|s| kappa_hom(s, true), window)
}

pub fn check_kappa_isomorphism_with(tilde: &dyn Fn(&OnsSymbol) -> LieElt, window: i64) -> Result<CheckReport> {
    let mut c = Collector::new("kappa isomorphism");
    c.region(format!("invariant pairs with |mode| <= {window}, both kappa forms"));
    let syms = OnsFamily::Invariant.basis(window);
    hom_pairs(&mut c, &syms, &|s| kappa_hom(s, false))?;
    hom_pairs(&mut c, &syms, tilde)?;
    Ok(c.finish())
}

/// The tilde map shifted by one mode on `E`; not a homomorphism.
pub fn shifted_tilde(s: &OnsSymbol) -> LieElt {
    if s.kind == OnsKind::E {
        tilde_image(&OnsSymbol::new(OnsKind::E, s.mode + 1)).scale_rat(&crate::exactalg::rat(1, 2))
    } else {
        kappa_hom(s, true)
    }
}

/// Rank of the images of the canonical basis with mode at most `window`,
/// together with the basis size.
pub fn image_rank(family: OnsFamily, window: i64) -> (usize, usize) {
    use crate::exactalg::Rational;
    use num_traits::Zero;
    let syms = family.basis(window);
    let mut rows: Vec<std::collections::BTreeMap<crate::kacmoody::BasisSymbol, Rational>> = syms
        .iter()
        .map(|s| {
            morphism_image(s)
                .terms()
                .map(|(b, k)| (*b, k.as_constant().expect("constant coefficients")))
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut i = 0;
    while i < rows.len() {
        let Some((&pivot, pv)) = rows[i].iter().next().map(|(k, v)| (k, v.clone())) else {
            rows.swap_remove(i);
            continue;
        };
        let row = rows[i].clone();
        for r in rows.iter_mut().skip(i + 1) {
            if let Some(f) = r.get(&pivot).cloned() {
                let f = f / &pv;
                for (k, v) in &row {
                    let e = r.entry(*k).or_insert_with(Rational::zero);
                    *e -= &f * v;
                }
                r.retain(|_, v| !v.is_zero());
            }
        }
        rank += 1;
        i += 1;
    }
    (rank, syms.len())
}
