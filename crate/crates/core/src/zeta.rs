//! Monodromy zeta-functions in factored form.
//!
//! The zeta-function of the monodromy of a germ is always a finite product
//! `Π (1 - t^{d_i})^{ν_i}` here, kept exactly in that factored shape
//! ([`ZetaFactored`]).  Three independent ways of producing one:
//!
//! * [`acampo_zeta`] — from resolution data: one factor `(1-t^m)^{-χ}` per
//!   exceptional component with multiplicity `m` and Euler characteristic
//!   `χ` of its open part;
//! * [`varchenko_zeta`] — combinatorially from the Newton boundary: for
//!   every coordinate subset `I` with `f^I ≢ 0`, each top-dimensional
//!   compact face of `Γ(f^I)` contributes `(1-t^{d})^{-χ}` where `d` is
//!   the face level and `χ` the signed normalized cone volume divided by
//!   `d` (an integer whenever the facet normal is primitive);
//! * [`oka_zeta`] — for boundaries that are degenerate along some top
//!   faces only: the combinatorial part is corrected by the local Milnor
//!   numbers on each degenerate face and multiplied by local
//!   zeta-functions computed at the singular points of the associated
//!   exceptional divisor.
//!
//! Degrees convert to Milnor numbers ([`milnor_from_zeta`]) and the
//! minimal period is the zeta-multiplicity ([`zeta_multiplicity`]), which
//! bounds the multiplicity of the germ from above... from below; see the
//! inequality test.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::nd::{nd_profile, Verdict};
use crate::newton::{facet_chi, newton_complex};
use crate::poly::Poly;
use crate::Rat;

// ---------------------------------------------------------------------------
// The factored zeta type
// ---------------------------------------------------------------------------

/// A finite product `Π (1 - t^{d})^{ν_d}` with distinct positive periods
/// `d` and nonzero integer exponents `ν_d`.
///
/// The empty product is `1`.  Multiplication adds exponents; factors whose
/// exponent cancels to zero disappear, so equality of products is equality
/// of the maps.  Serialization is the ascending list of `[period,
/// exponent]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZetaFactored {
    factors: BTreeMap<u64, i64>,
}

impl ZetaFactored {
    /// The empty product `ζ = 1`.
    pub fn one() -> Self {
        ZetaFactored::default()
    }

    /// The single factor `(1 - t^period)^exponent`.
    ///
    /// # Panics
    /// Panics if `period == 0`.
    pub fn factor(period: u64, exponent: i64) -> Self {
        let mut z = ZetaFactored::one();
        z.mul_factor(period, exponent);
        z
    }

    /// Multiplies `(1 - t^period)^exponent` into `self`.
    ///
    /// # Panics
    /// Panics if `period == 0`.
    pub fn mul_factor(&mut self, period: u64, exponent: i64) {
        assert!(period >= 1, "zeta factor with period 0");
        if exponent == 0 {
            return;
        }
        let e = self.factors.entry(period).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.factors.remove(&period);
        }
    }

    /// The product of two factored zeta-functions.
    pub fn mul(&self, other: &ZetaFactored) -> ZetaFactored {
        let mut out = self.clone();
        for (&d, &e) in &other.factors {
            out.mul_factor(d, e);
        }
        out
    }

    /// `self^k` (negative `k` inverts, `k = 0` gives `1`).
    pub fn pow(&self, k: i64) -> ZetaFactored {
        let mut out = ZetaFactored::one();
        if k != 0 {
            for (&d, &e) in &self.factors {
                out.mul_factor(d, e * k);
            }
        }
        out
    }

    /// Degree as a rational function of `t`: `Σ d·ν_d`.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(&d, &e)| d as i64 * e).sum()
    }

    /// True when the product is empty (`ζ = 1`).
    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The exponent of `(1 - t^period)`, zero when absent.
    pub fn exponent_of(&self, period: u64) -> i64 {
        self.factors.get(&period).copied().unwrap_or(0)
    }

    /// Ascending `(period, exponent)` pairs.
    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&d, &e)| (d, e))
    }
}

impl std::fmt::Display for ZetaFactored {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (&d, &e) in &self.factors {
            write!(f, "(1-t^{d})")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for ZetaFactored {
    /// Ascending `[period, exponent]` pairs.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.factors())
    }
}

/// Minimal period appearing in `ζ` (the zeta-multiplicity `m_ζ`).
pub fn zeta_multiplicity(zeta: &ZetaFactored) -> Result<u64> {
    zeta_multiplicity_factor(zeta).map(|(d, _)| d)
}

/// Minimal period and its exponent (the zeta-multiplicity factor).
pub fn zeta_multiplicity_factor(zeta: &ZetaFactored) -> Result<(u64, i64)> {
    zeta.factors().next().ok_or(Error::EmptyZeta {
        context: "zeta-multiplicity of the empty product".into(),
    })
}

/// Milnor number from the degree: `μ = (-1)^n (deg ζ + 1)`.
///
/// Valid when the germ has an isolated singularity (the caller's
/// responsibility); a negative result is rejected because no Milnor number
/// can produce it, which catches non-isolated inputs and bad data.
pub fn milnor_from_zeta(zeta: &ZetaFactored, n: usize) -> Result<i64> {
    let degree = zeta.degree();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let value = sign * (degree + 1);
    if value < 0 {
        return Err(Error::BadMilnorFromZeta { degree, value });
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// The three formulas
// ---------------------------------------------------------------------------

/// Zeta-function from resolution data: `Π (1 - t^{m_i})^{-χ_i}` over the
/// exceptional components, with `m_i` the multiplicity of the pullback
/// along the component and `χ_i` the Euler characteristic of its open
/// part.
pub fn acampo_zeta(components: &[(u64, i64)]) -> Result<ZetaFactored> {
    let mut z = ZetaFactored::one();
    for &(m, chi) in components {
        if m == 0 {
            return Err(Error::InvalidWeight {
                w: vec![0],
                msg: "exceptional multiplicities must be ≥ 1".into(),
            });
        }
        z.mul_factor(m, -chi);
    }
    Ok(z)
}

/// Factors contributed by one coordinate subset.
#[derive(Debug, Clone, Serialize)]
pub struct SubsetFactor {
    /// 0-based variables of the subset `I`.
    pub vars: Vec<usize>,
    /// `Π (1-t^{d})^{-χ}` over the top-dimensional compact faces of
    /// `Γ(f^I)`.
    pub factors: ZetaFactored,
}

/// Result of the combinatorial zeta computation.
#[derive(Debug, Clone, Serialize)]
pub struct VarchenkoReport {
    /// The assembled zeta-function.
    pub zeta: ZetaFactored,
    /// Per-subset factors, for auditing (subsets with `f^I ≡ 0` are
    /// skipped).
    pub per_subset: Vec<SubsetFactor>,
}

/// Combinatorial zeta-function from the Newton boundary, with
/// nondegeneracy of every compact face of every restriction verified
/// first.
///
/// Convenience is *not* required, and the singularity may be non-isolated;
/// subsets with `f^I ≡ 0` contribute nothing.
pub fn varchenko_zeta(f: &Poly) -> Result<VarchenkoReport> {
    varchenko_zeta_with(f, false)
}

/// [`varchenko_zeta`] with the nondegeneracy verification optionally
/// skipped (`assume_nd = true`), in which case the result is the
/// combinatorial invariant of the boundary alone and the caller asserts it
/// equals the zeta-function of the germ.
pub fn varchenko_zeta_with(f: &Poly, assume_nd: bool) -> Result<VarchenkoReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: "zeta-function of the zero germ".into(),
        });
    }
    if !f.vanishes_at_origin() {
        return Err(Error::Hypothesis {
            name: "vanishes-at-origin".into(),
            detail: "the germ must vanish at the origin".into(),
        });
    }
    let n = f.nvars();
    let mut zeta = ZetaFactored::one();
    let mut per_subset = Vec::new();
    for bits in 1u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|i| bits >> i & 1 == 1).collect();
        let fi = f.project(&vars);
        if fi.is_zero() {
            continue;
        }
        if !assume_nd {
            let profile = nd_profile(&fi)?;
            for fv in &profile.faces {
                match fv.verdict {
                    Verdict::Degenerate => {
                        return Err(Error::Hypothesis {
                            name: "newton-nondegenerate".into(),
                            detail: format!(
                                "the face with points {:?} of the restriction to variables {:?} is degenerate",
                                fv.points,
                                vars.iter().map(|v| v + 1).collect::<Vec<_>>()
                            ),
                        });
                    }
                    Verdict::Undecided => {
                        return Err(Error::CannotCertify {
                            what: format!(
                                "nondegeneracy of the face with points {:?} of the restriction to variables {:?}",
                                fv.points,
                                vars.iter().map(|v| v + 1).collect::<Vec<_>>()
                            ),
                        });
                    }
                    Verdict::Nondegenerate => {}
                }
            }
        }
        let complex = newton_complex(&fi)?;
        let mut factors = ZetaFactored::one();
        for facet in complex.compact_facets() {
            let d = facet.normal_level.expect("compact facet carries its level");
            let chi = facet_chi(&complex, facet.id)?;
            let chi = chi.to_i64().ok_or_else(|| Error::BudgetExceeded {
                what: "facet Euler characteristic magnitude".into(),
                budget: i64::MAX as usize,
            })?;
            factors.mul_factor(d as u64, -chi);
        }
        zeta = zeta.mul(&factors);
        per_subset.push(SubsetFactor { vars, factors });
    }
    Ok(VarchenkoReport { zeta, per_subset })
}

// ---------------------------------------------------------------------------
// Assembly over a degenerate boundary
// ---------------------------------------------------------------------------

/// One singular point on the exceptional divisor of a degenerate face.
#[derive(Debug, Clone, Serialize)]
pub struct SingularPointRecord {
    /// Chart coordinates of the point.
    #[serde(serialize_with = "crate::rats_as_strings")]
    pub point: Vec<Rat>,
    /// Local Milnor number of the divisor curve at the point.
    pub mu: usize,
}

/// Everything the assembly needs about one degenerate top face.
#[derive(Debug, Clone, Serialize)]
pub struct DegenerateFaceData {
    /// Primitive normal of the degenerate face.
    pub w: Vec<i64>,
    /// Its level `d(w; f)`.
    pub d: i64,
    /// The singular points of the associated exceptional curve.
    pub points: Vec<SingularPointRecord>,
    /// One local zeta-function per point (of the pulled-back germ there).
    pub local_zetas: Vec<ZetaFactored>,
}

/// The three zeta-functions of the degenerate-boundary assembly.
#[derive(Debug, Clone, Serialize)]
pub struct OkaZeta {
    /// The full zeta-function `ζ = ζ' · Π_p ζ_p`.
    pub zeta: ZetaFactored,
    /// `ζ' = ζ_{f_s} · Π_w (1 - t^{d(w)})^{(-1)^{n-1} Σ μ_p}`.
    pub zeta_prime: ZetaFactored,
    /// The combinatorial zeta-function of the boundary alone.
    pub zeta_fs: ZetaFactored,
}

/// Assembles the zeta-function of a germ whose boundary is degenerate
/// along the top faces listed in `data` (and nowhere else — this is
/// verified).
///
/// `ζ_{f_s}` is evaluated combinatorially from the boundary: a generic
/// coefficient perturbation with the same boundary is nondegenerate, and
/// the combinatorial formula depends on the boundary alone, so no actual
/// perturbation is performed.  With empty `data` the result collapses to
/// the plain combinatorial zeta-function.
pub fn oka_zeta(f: &Poly, data: &[DegenerateFaceData]) -> Result<OkaZeta> {
    let n = f.nvars();
    let report = varchenko_zeta_with(f, true)?;
    let zeta_fs = report.zeta;

    // The degeneracy must be confined to the listed top faces.
    let complex = newton_complex(f)?;
    let profile = nd_profile(f)?;
    let mut degenerate_normals: Vec<Vec<i64>> = Vec::new();
    for fv in &profile.faces {
        match fv.verdict {
            Verdict::Degenerate => {
                let face = &complex.faces[fv.face];
                let (Some(normal), Some(level)) = (&face.normal, face.normal_level) else {
                    return Err(Error::Hypothesis {
                        name: "weakly-almost-nondegenerate".into(),
                        detail: format!(
                            "the degenerate face with points {:?} is not a top face",
                            fv.points
                        ),
                    });
                };
                if !data.iter().any(|dd| &dd.w == normal && dd.d == level) {
                    return Err(Error::LocalDataMismatch {
                        detail: format!(
                            "no data supplied for the degenerate face with normal {normal:?} and level {level}"
                        ),
                    });
                }
                degenerate_normals.push(normal.clone());
            }
            Verdict::Undecided => {
                return Err(Error::CannotCertify {
                    what: format!(
                        "nondegeneracy of the face with points {:?}",
                        fv.points
                    ),
                });
            }
            Verdict::Nondegenerate => {}
        }
    }
    for dd in data {
        if !degenerate_normals.contains(&dd.w) {
            return Err(Error::LocalDataMismatch {
                detail: format!(
                    "data supplied for {:?}, which is not a degenerate top face",
                    dd.w
                ),
            });
        }
        if dd.points.len() != dd.local_zetas.len() {
            return Err(Error::LocalDataMismatch {
                detail: format!(
                    "face {:?} has {} singular points but {} local zeta-functions",
                    dd.w,
                    dd.points.len(),
                    dd.local_zetas.len()
                ),
            });
        }
    }

    let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    let mut zeta_prime = zeta_fs.clone();
    for dd in data {
        let mu_tot: usize = dd.points.iter().map(|p| p.mu).sum();
        zeta_prime.mul_factor(dd.d as u64, sign * mu_tot as i64);
    }
    let mut zeta = zeta_prime.clone();
    for dd in data {
        for local in &dd.local_zetas {
            zeta = zeta.mul(local);
        }
    }
    Ok(OkaZeta {
        zeta,
        zeta_prime,
        zeta_fs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::chart_pullback;
    use crate::nd::{find_pre_nd_change, Verdict};
    use crate::{rat, ratio};
    use num_traits::One;

    const SEXTIC: &str = "7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3";

    #[test]
    fn factored_calculus() {
        let a = ZetaFactored::factor(3, 1);
        let b = ZetaFactored::factor(3, -1);
        assert!(a.mul(&b).is_one());
        assert_eq!(a.mul(&b).degree(), 0);
        assert_eq!(a.mul(&b).to_string(), "1");

        // degree((1-t^24)^-1 (1-t^8)(1-t^3)(1-t^6)^-2) = -25.
        let mut z = ZetaFactored::factor(24, -1);
        z.mul_factor(8, 1);
        z.mul_factor(3, 1);
        z.mul_factor(6, -2);
        assert_eq!(z.degree(), -25);
        assert_eq!(z.to_string(), "(1-t^3)(1-t^6)^-2(1-t^8)(1-t^24)^-1");
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            "[[3,1],[6,-2],[8,1],[24,-1]]"
        );

        let p = ZetaFactored::factor(5, -1).pow(3);
        assert_eq!(p.to_string(), "(1-t^5)^-3");
        assert_eq!(zeta_multiplicity_factor(&ZetaFactored::factor(2, 5)).unwrap(), (2, 5));
        assert!(matches!(
            zeta_multiplicity(&ZetaFactored::one()),
            Err(Error::EmptyZeta { .. })
        ));
    }

    #[test]
    fn acampo_merging() {
        assert!(acampo_zeta(&[]).unwrap().is_one());
        let z = acampo_zeta(&[(6, -1)]).unwrap();
        assert_eq!(z.to_string(), "(1-t^6)");
        let merged = acampo_zeta(&[(2, 1), (2, -3)]).unwrap();
        assert_eq!(merged.to_string(), "(1-t^2)^2");
        assert!(acampo_zeta(&[(0, 1)]).is_err());
    }

    #[test]
    fn cusp_zeta_and_milnor() {
        let f = Poly::parse(2, "z1^2+z2^3").unwrap();
        let report = varchenko_zeta(&f).unwrap();
        assert_eq!(report.zeta.to_string(), "(1-t^2)^-1(1-t^3)^-1(1-t^6)");
        assert_eq!(report.zeta.degree(), 1);
        assert_eq!(milnor_from_zeta(&report.zeta, 2).unwrap(), 2);
        // Three subsets contribute: {1}, {2}, {1,2}.
        assert_eq!(report.per_subset.len(), 3);

        // Smooth germ: degree -1 gives Milnor number 0.
        let line = Poly::parse(2, "z1+z2^2").unwrap();
        let z = varchenko_zeta(&line).unwrap().zeta;
        assert_eq!(milnor_from_zeta(&z, 2).unwrap(), 0);
    }

    #[test]
    fn fermat_cubic_and_shifted_variants() {
        let f = Poly::parse(3, "z1^3+z2^3+z3^3").unwrap();
        let z = varchenko_zeta(&f).unwrap().zeta;
        assert_eq!(z.to_string(), "(1-t^3)^-3");
        assert_eq!(z.degree(), -9);
        assert_eq!(milnor_from_zeta(&z, 3).unwrap(), 8);

        // x^d + y^d + z^d + x^{d+1}: the extra monomial is above the
        // boundary, the single factor has period d and exponent
        // -(d^2 - 3d + 3).
        for d in [2i64, 3] {
            let s = format!("z1^{d}+z2^{d}+z3^{d}+z1^{}", d + 1);
            let g = Poly::parse(3, &s).unwrap();
            let z = varchenko_zeta(&g).unwrap().zeta;
            let (period, exp) = zeta_multiplicity_factor(&z).unwrap();
            assert_eq!(period, d as u64);
            assert_eq!(exp, -(d * d - 3 * d + 3));
            assert_eq!(z.factors().count(), 1);
            // Degree matches the homogeneous Milnor number (d-1)^3.
            assert_eq!(milnor_from_zeta(&z, 3).unwrap(), (d - 1).pow(3));
        }
    }

    #[test]
    fn sextic_boundary_zeta() {
        let f = Poly::parse(3, SEXTIC).unwrap();
        // The top face is degenerate, so the verifying entry point refuses…
        assert!(matches!(
            varchenko_zeta(&f),
            Err(Error::Hypothesis { name, .. }) if name == "newton-nondegenerate"
        ));
        // …while the boundary-only evaluation gives the combinatorial zeta.
        let z = varchenko_zeta_with(&f, true).unwrap().zeta;
        assert_eq!(z.to_string(), "(1-t^3)(1-t^6)^-4");
        assert_eq!(z.degree(), -21);
        assert_eq!(milnor_from_zeta(&z, 3).unwrap(), 20);
    }

    #[test]
    fn local_divisor_germ_zetas() {
        // x1^6 ((1/4) x2^2 + 64 x3^3 + (-1/2)^m x1^{2m}): the exceptional
        // germ over the A2 point of the sextic cofactor, in coordinates
        // where it is nondegenerate.  Two period patterns depending on
        // gcd(m, 3).
        for m in [1i64, 2, 3, 6] {
            let c = ratio(-1, 2).pow(m as i32);
            let mut g = Poly::zero(3);
            g.add_term(crate::poly::Expo(vec![6, 2, 0]), ratio(1, 4));
            g.add_term(crate::poly::Expo(vec![6, 0, 3]), rat(64));
            g.add_term(crate::poly::Expo(vec![6 + 2 * m, 0, 0]), c);
            // Nondegeneracy of every face of this germ is decidable, so no
            // assume-nd is needed.
            let z = varchenko_zeta(&g).unwrap().zeta;
            let expected = if m % 3 == 0 {
                ZetaFactored::factor((2 * m + 6) as u64, -2)
            } else {
                ZetaFactored::factor((6 * m + 18) as u64, -1)
                    .mul(&ZetaFactored::factor((2 * m + 6) as u64, 1))
            };
            assert_eq!(z, expected, "m = {m}");
        }
    }

    #[test]
    fn oka_assembly_collapses_without_degenerate_data() {
        let f = Poly::parse(2, "z1^2+z2^3").unwrap();
        let oka = oka_zeta(&f, &[]).unwrap();
        let plain = varchenko_zeta(&f).unwrap().zeta;
        assert_eq!(oka.zeta, plain);
        assert_eq!(oka.zeta_prime, plain);
        assert_eq!(oka.zeta_fs, plain);
    }

    #[test]
    fn oka_assembly_checks_its_data() {
        let f = Poly::parse(3, SEXTIC).unwrap();
        // Missing data for the degenerate face.
        assert!(matches!(
            oka_zeta(&f, &[]),
            Err(Error::LocalDataMismatch { .. })
        ));
        // Data for a face that is not degenerate.
        let bogus = DegenerateFaceData {
            w: vec![1, 1, 1],
            d: 3,
            points: vec![],
            local_zetas: vec![],
        };
        let good = DegenerateFaceData {
            w: vec![2, 2, 1],
            d: 6,
            points: vec![],
            local_zetas: vec![],
        };
        assert!(matches!(
            oka_zeta(&f, &[good, bogus]),
            Err(Error::LocalDataMismatch { .. })
        ));
    }

    #[test]
    fn shifted_sextic_assembly_matches_known_zetas() {
        // g = sextic + z2^{3+m}: the shift monomial is above the boundary,
        // the single degenerate face has normal (2,2,1), level 6, and one
        // A2 point on its exceptional curve.  Local zeta-functions are
        // computed on the verified-nondegenerate local model.
        let f = Poly::parse(3, SEXTIC).unwrap();
        let cp = chart_pullback(&f, &[vec![2, 2, 1], vec![1, 1, 1], vec![1, 0, 0]]).unwrap();
        let curve = cp.cofactor.project(&[1, 2]);
        let point = vec![ratio(-1, 2), ratio(-1, 4)];
        let h_local = curve.translate(&point);

        for m in [1i64, 2, 3, 6] {
            let g = {
                let mut g = f.clone();
                g.add_term(crate::poly::Expo(vec![0, 3 + m, 0]), Rat::one());
                g
            };
            // Shift coefficient transported into the chart: the extra
            // exponent row at the divisor generator is y1^{2m} y2^m, and
            // the unit value at the point is y2^m = (-1/2)^m.
            let c = ratio(-1, 2).pow(m as i32);
            let s = 2 * m;
            let (_, report) = find_pre_nd_change(&h_local, s, &c, 3)
                .unwrap()
                .expect("shear found");
            assert_eq!(report.profile.verdict, Verdict::Nondegenerate);
            let exceptional = report.model.mul_monomial(&crate::poly::Expo(vec![6, 0, 0]), &rat(1));
            let local = varchenko_zeta(&exceptional).unwrap().zeta;

            let data = DegenerateFaceData {
                w: vec![2, 2, 1],
                d: 6,
                points: vec![SingularPointRecord {
                    point: point.clone(),
                    mu: 2,
                }],
                local_zetas: vec![local],
            };
            let oka = oka_zeta(&g, &[data]).unwrap();
            assert_eq!(oka.zeta_fs.to_string(), "(1-t^3)(1-t^6)^-4", "m = {m}");
            assert_eq!(oka.zeta_prime.to_string(), "(1-t^3)(1-t^6)^-2", "m = {m}");
            let expected = if m % 3 == 0 {
                ZetaFactored::factor(3, 1)
                    .mul(&ZetaFactored::factor(6, -2))
                    .mul(&ZetaFactored::factor((2 * m + 6) as u64, -2))
            } else {
                ZetaFactored::factor(3, 1)
                    .mul(&ZetaFactored::factor(6, -2))
                    .mul(&ZetaFactored::factor((2 * m + 6) as u64, 1))
                    .mul(&ZetaFactored::factor((6 * m + 18) as u64, -1))
            };
            assert_eq!(oka.zeta, expected, "m = {m}");
            assert_eq!(oka.zeta.degree(), -21 - 4 * m, "m = {m}");
            assert_eq!(milnor_from_zeta(&oka.zeta, 3).unwrap(), 20 + 4 * m);
        }
    }

    #[test]
    fn multiplicity_bounds_hold_on_the_corpus() {
        // m_ζ(h) ≥ mult₀(h) on germs whose zeta we trust.
        for (n, s) in [
            (2, "z1^2+z2^3"),
            (2, "z1^2+z2^7"),
            (3, "z1^3+z2^3+z3^3"),
            (3, "z1^2+z2^3+z3^5"),
        ] {
            let f = Poly::parse(n, s).unwrap();
            let z = varchenko_zeta(&f).unwrap().zeta;
            let mult = f.order().unwrap();
            assert!(
                zeta_multiplicity(&z).unwrap() as i64 >= mult,
                "zeta-multiplicity below multiplicity for {s}"
            );
        }
    }
}
