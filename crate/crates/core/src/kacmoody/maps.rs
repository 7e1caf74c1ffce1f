use std::fmt;
use std::str::FromStr;

use super::elt::{bracket, BasisSymbol, Kind, LieElt};
use crate::error::{Error, Result};
use crate::exactalg::rat;
use crate::report::{CheckReport, Collector};

/// The named automorphisms of affine sl2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutoMap {
    Theta1,
    Theta2,
    LusztigPlus,
    LusztigMinus,
}

impl AutoMap {
    pub const ALL: [AutoMap; 4] = [
        AutoMap::Theta1,
        AutoMap::Theta2,
        AutoMap::LusztigPlus,
        AutoMap::LusztigMinus,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AutoMap::Theta1 => "theta1",
            AutoMap::Theta2 => "theta2",
            AutoMap::LusztigPlus => "lusztig_plus",
            AutoMap::LusztigMinus => "lusztig_minus",
        }
    }

    /// Image of a basis symbol.
    pub fn image(&self, s: &BasisSymbol) -> LieElt {
        use Kind::{E, F, H};
        let n = match s {
            BasisSymbol::C => return -LieElt::c(),
            BasisSymbol::Mode(_, n) => *n,
        };
        let kind = match s {
            BasisSymbol::Mode(k, _) => *k,
            BasisSymbol::C => unreachable!(),
        };
        let h_shift = |mult: i64| {
            let mut out = LieElt::h(-n);
            if n == 0 {
                out += &LieElt::c().scale_int(mult);
            }
            out
        };
        match (self, kind) {
            (AutoMap::Theta1, E) => LieElt::f(-n),
            (AutoMap::Theta1, F) => LieElt::e(-n),
            (AutoMap::Theta1, H) => -LieElt::h(-n),
            (AutoMap::Theta2, E) => LieElt::e(1 - n),
            (AutoMap::Theta2, F) => LieElt::f(-n - 1),
            (AutoMap::Theta2, H) => h_shift(1),
            (AutoMap::LusztigPlus, E) => LieElt::e(-n),
            (AutoMap::LusztigPlus, F) => LieElt::f(-n),
            (AutoMap::LusztigPlus, H) => LieElt::h(-n),
            (AutoMap::LusztigMinus, E) => LieElt::e(2 - n),
            (AutoMap::LusztigMinus, F) => LieElt::f(-n - 2),
            (AutoMap::LusztigMinus, H) => h_shift(2),
        }
    }

    pub fn apply(&self, a: &LieElt) -> LieElt {
        a.map_linear(|s| self.image(s))
    }

    fn is_involution_checked(&self) -> bool {
        matches!(self, AutoMap::Theta1 | AutoMap::Theta2)
    }
}

impl fmt::Display for AutoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AutoMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AutoMap::ALL
            .iter()
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "map",
                name: s.to_string(),
            })
    }
}

/// Applies the named map.
pub fn apply_map(name: &str, a: &LieElt) -> Result<LieElt> {
    Ok(name.parse::<AutoMap>()?.apply(a))
}

/// Checks `map([a,b]) = [map(a), map(b)]` on all basis pairs with
/// `|mode| <= window`, and `map . map = id` for the two involutions.
pub fn check_automorphism(map: AutoMap, window: i64) -> CheckReport {
    check_automorphism_with(map.name(), |s| map.image(s), map.is_involution_checked(), window)
}

/// [`check_automorphism`] for an arbitrary map given on basis symbols.
pub fn check_automorphism_with(
    name: &str,
    image: impl Fn(&BasisSymbol) -> LieElt,
    involution: bool,
    window: i64,
) -> CheckReport {
    let mut c = Collector::new(format!("automorphism {name}"));
    c.region(format!("basis pairs with |mode| <= {window}"));
    let basis = BasisSymbol::window(window);
    let images: Vec<LieElt> = basis.iter().map(&image).collect();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate().skip(i + 1) {
            let lhs = bracket(&LieElt::basis(*a), &LieElt::basis(*b)).map_linear(&image);
            let rhs = bracket(&images[i], &images[j]);
            let res = &lhs - &rhs;
            c.compare(|| format!("[{a}, {b}]"), (!res.is_zero()).then_some(res));
        }
    }
    if involution {
        for (s, img) in basis.iter().zip(&images) {
            let res = &img.map_linear(&image) - &LieElt::basis(*s);
            c.compare(|| format!("map^2({s})"), (!res.is_zero()).then_some(res));
        }
    }
    c.finish()
}

/// Images of the Serre-Chevalley generators `k_1, x_1^+, x_1^-, k_0, x_0^+, x_0^-`
/// and of the central element.
pub struct ChevalleyImages {
    pub k: [LieElt; 2],
    pub x_plus: [LieElt; 2],
    pub x_minus: [LieElt; 2],
    pub c: LieElt,
}

impl Default for ChevalleyImages {
    fn default() -> Self {
        ChevalleyImages {
            k: [-&LieElt::c() - LieElt::h(0), LieElt::h(0)],
            x_plus: [LieElt::f(-1), LieElt::e(0)],
            x_minus: [LieElt::e(1), LieElt::f(0)],
            c: -LieElt::c(),
        }
    }
}

/// Serre-Chevalley relations on the default images, plus a check that the
/// images generate every basis element with `|mode| <= window`.
pub fn check_serre_chevalley(window: i64) -> CheckReport {
    check_serre_chevalley_with(&ChevalleyImages::default(), window)
}

pub fn check_serre_chevalley_with(img: &ChevalleyImages, window: i64) -> CheckReport {
    let mut c = Collector::new("Serre-Chevalley relations");
    c.region(format!("generators, and generation of modes |n| <= {window}"));
    let cartan = [[2i64, -2], [-2, 2]];
    let mut eq = |label: String, lhs: LieElt, rhs: LieElt| {
        let res = &lhs - &rhs;
        c.compare(|| label, (!res.is_zero()).then_some(res));
    };
    for i in 0..2 {
        for j in 0..2 {
            eq(format!("[k{i}, k{j}]"), bracket(&img.k[i], &img.k[j]), LieElt::zero());
            eq(
                format!("[k{i}, x{j}+]"),
                bracket(&img.k[i], &img.x_plus[j]),
                img.x_plus[j].scale_int(cartan[i][j]),
            );
            eq(
                format!("[k{i}, x{j}-]"),
                bracket(&img.k[i], &img.x_minus[j]),
                img.x_minus[j].scale_int(-cartan[i][j]),
            );
            let expected = if i == j { img.k[j].clone() } else { LieElt::zero() };
            eq(format!("[x{i}+, x{j}-]"), bracket(&img.x_plus[i], &img.x_minus[j]), expected);
            if i != j {
                for (sign, xs) in [("+", &img.x_plus), ("-", &img.x_minus)] {
                    let mut t = xs[j].clone();
                    for _ in 0..3 {
                        t = bracket(&xs[i], &t);
                    }
                    eq(format!("ad(x{i}{sign})^3 x{j}{sign}"), t, LieElt::zero());
                }
            }
        }
    }
    eq("k0 + k1".into(), &img.k[0] + &img.k[1], img.c.clone());
    let gens = [&img.k[0], &img.k[1], &img.x_plus[0], &img.x_plus[1], &img.x_minus[0], &img.x_minus[1]];
    for g in gens {
        eq(format!("[c, {g}]"), bracket(&img.c, g), LieElt::zero());
    }

    // e_{n+-1} and f_{n+-1} from h_{+-1}; h_n = [e_n, f_0]
    let half = rat(1, 2);
    let h1 = bracket(&img.x_minus[0], &img.x_minus[1]);
    let hm1 = bracket(&img.x_plus[1], &img.x_plus[0]);
    let mut e_up = img.x_plus[1].clone();
    let mut e_dn = e_up.clone();
    let mut f_up = img.x_minus[1].clone();
    let mut f_dn = f_up.clone();
    for n in 1..=window {
        e_up = bracket(&h1, &e_up).scale_rat(&half);
        e_dn = bracket(&hm1, &e_dn).scale_rat(&half);
        f_up = bracket(&h1, &f_up).scale_rat(&-&half);
        f_dn = bracket(&hm1, &f_dn).scale_rat(&-&half);
        eq(format!("generated e_{n}"), e_up.clone(), LieElt::e(n));
        eq(format!("generated e_{}", -n), e_dn.clone(), LieElt::e(-n));
        eq(format!("generated f_{n}"), f_up.clone(), LieElt::f(n));
        eq(format!("generated f_{}", -n), f_dn.clone(), LieElt::f(-n));
        for (m, e) in [(n, &e_up), (-n, &e_dn)] {
            eq(format!("generated h_{m}"), bracket(e, &img.x_minus[1]), LieElt::h(m));
        }
    }
    c.finish()
}
