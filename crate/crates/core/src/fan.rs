//! Simplicial fans in the nonnegative orthant, toric chart pullbacks, and
//! regularization (Hirzebruch–Jung in 2-D, stellar subdivision in 3-D).
//!
//! A *regular simplicial cone* `σ = Cone(u₁, …, u_n) ⊂ R₊^n` determines the
//! monomial chart `π_σ : z_j = Π_i y_i^{u_i[j]}`; pulling a germ `f` back
//! along `π_σ` factors as `f∘π_σ = Π_i y_i^{d(u_i;f)} · f̃_σ(y)` with
//! *cofactor* `f̃_σ` not divisible by any `y_i`. A fan of such cones covering
//! `R₊^n` that is *admissible* for `f` (each cone's generators expose a common
//! face of the Newton polyhedron) gives the toric modification used to
//! compute zeta-functions and to certify shift formulas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{
    det_i64, gcd_of_maximal_minors, inverse_rat, is_primitive, solve_rat, subsets_of_size,
};
use crate::poly::{Expo, Poly};
use crate::{rat, Rat};

use num_traits::{Signed, Zero};

// ---------------------------------------------------------------------------
// Cones and fans
// ---------------------------------------------------------------------------

/// A fan given by its vertex set and maximal cones.
///
/// The JSON interchange form is
/// `{"vertices": [[2,2,1], …], "maximal_cones": [[1,2,3], …]}` with
/// **1-based** indices into `vertices`; in memory the indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    /// Ambient dimension.
    pub nvars: usize,
    /// Primitive generators (the vertices of the fan).
    pub vertices: Vec<Vec<i64>>,
    /// Maximal cones as 0-based index lists into `vertices`.
    pub maximal_cones: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct FanJson {
    vertices: Vec<Vec<i64>>,
    maximal_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Build a fan, checking basic well-formedness (dimensions, primitivity,
    /// nonnegativity, index ranges).
    pub fn new(
        nvars: usize,
        vertices: Vec<Vec<i64>>,
        maximal_cones: Vec<Vec<usize>>,
    ) -> Result<Fan> {
        for v in &vertices {
            if v.len() != nvars {
                return Err(Error::InvalidCone {
                    msg: format!("vertex {v:?} does not have {nvars} coordinates"),
                });
            }
            if v.iter().any(|&x| x < 0) || v.iter().all(|&x| x == 0) {
                return Err(Error::InvalidCone {
                    msg: format!("vertex {v:?} must be nonzero and nonnegative"),
                });
            }
            if !is_primitive(v) {
                return Err(Error::InvalidCone {
                    msg: format!("vertex {v:?} is not primitive"),
                });
            }
        }
        for cone in &maximal_cones {
            for &i in cone {
                if i >= vertices.len() {
                    return Err(Error::InvalidCone {
                        msg: format!("cone index {i} out of range"),
                    });
                }
            }
        }
        Ok(Fan {
            nvars,
            vertices,
            maximal_cones,
        })
    }

    /// Parse the JSON interchange form (1-based cone indices).
    pub fn from_json(nvars: usize, text: &str) -> Result<Fan> {
        let raw: FanJson = serde_json::from_str(text)?;
        let mut cones = Vec::with_capacity(raw.maximal_cones.len());
        for cone in raw.maximal_cones {
            let mut c = Vec::with_capacity(cone.len());
            for i in cone {
                if i == 0 {
                    return Err(Error::InvalidCone {
                        msg: "cone indices are 1-based; found 0".into(),
                    });
                }
                c.push(i - 1);
            }
            cones.push(c);
        }
        Fan::new(nvars, raw.vertices, cones)
    }

    /// Serialize to the JSON interchange form (1-based cone indices).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "maximal_cones": self
                .maximal_cones
                .iter()
                .map(|c| c.iter().map(|&i| i + 1).collect::<Vec<usize>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Generators (as vectors) of the `i`-th maximal cone.
    pub fn cone_generators(&self, i: usize) -> Vec<Vec<i64>> {
        self.maximal_cones[i]
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect()
    }
}

/// Exact membership test `w ∈ Cone(gens)` by conic Carathéodory: some
/// subset of the generators expresses `w` as a nonnegative combination.
pub fn cone_contains(gens: &[Vec<i64>], w: &[i64]) -> bool {
    conic_coefficients(gens, w).is_some()
}

/// Nonnegative rational coefficients expressing `w` in the generators (over
/// some subset, unused generators reported as 0), or `None` if `w` is outside.
pub fn conic_coefficients(gens: &[Vec<i64>], w: &[i64]) -> Option<Vec<Rat>> {
    let n = w.len();
    if w.iter().all(|&x| x == 0) {
        return Some(vec![rat(0); gens.len()]);
    }
    for size in 1..=gens.len().min(n) {
        for sub in subsets_of_size(gens.len(), size) {
            let a: Vec<Vec<Rat>> = (0..n)
                .map(|r| sub.iter().map(|&g| rat(gens[g][r])).collect())
                .collect();
            let b: Vec<Rat> = w.iter().map(|&x| rat(x)).collect();
            if let Some(lambda) = solve_rat(&a, &b) {
                if lambda.iter().all(|c| !c.is_negative()) {
                    let mut full = vec![rat(0); gens.len()];
                    for (j, &g) in sub.iter().enumerate() {
                        full[g] = lambda[j].clone();
                    }
                    return Some(full);
                }
            }
        }
    }
    None
}

/// Is the simplicial cone on these generators *regular* (part of a basis of
/// the lattice)? For `k` generators in `Z^n` this means linear independence
/// with the gcd of all maximal minors equal to 1.
pub fn is_regular(gens: &[Vec<i64>]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let cols: Vec<Vec<i64>> = gens.to_vec();
    gcd_of_maximal_minors(&cols) == crate::Int::from(1)
}

// ---------------------------------------------------------------------------
// Fan validation
// ---------------------------------------------------------------------------

/// Outcome of the four fan checks, with human-readable witnesses for every
/// failure.
#[derive(Clone, Debug, Serialize)]
pub struct FanValidation {
    /// Every maximal cone is simplicial, full-dimensional, and regular.
    pub regular: bool,
    /// Every maximal cone's generators expose a common face of `Γ₊(f)`.
    pub admissible: bool,
    /// Every non-axis vertex `u` has `d(u; f) > 0` after stripping the
    /// monomial content of `f`.
    pub small: bool,
    /// The maximal cones cover `R₊^n` without overlapping interiors.
    pub covering: bool,
    /// Witnesses for each failed check.
    pub failures: Vec<String>,
}

impl FanValidation {
    /// All four checks passed.
    pub fn ok(&self) -> bool {
        self.regular && self.admissible && self.small && self.covering
    }
}

/// Run the four fan checks against a germ `f`.
pub fn validate_fan(fan: &Fan, f: &Poly) -> Result<FanValidation> {
    let n = fan.nvars;
    if f.nvars() != n {
        return Err(Error::Dimension {
            context: format!("fan in {n} variables, polynomial in {}", f.nvars()),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: "fan validation".into(),
        });
    }
    let mut failures = Vec::new();

    // (1) Regularity.
    let mut regular = true;
    for (ci, cone) in fan.maximal_cones.iter().enumerate() {
        let gens = fan.cone_generators(ci);
        if cone.len() != n {
            regular = false;
            failures.push(format!(
                "cone #{} has {} generators, expected {n}",
                ci + 1,
                cone.len()
            ));
            continue;
        }
        let d = det_i64(&gens).abs();
        if d != crate::Int::from(1) {
            regular = false;
            failures.push(format!(
                "cone #{} has determinant ±{d}, not ±1: {gens:?}",
                ci + 1
            ));
        }
    }

    // (2) Admissibility: common exposed face per cone.
    let mut admissible = true;
    for (ci, _) in fan.maximal_cones.iter().enumerate() {
        let gens = fan.cone_generators(ci);
        let mut common: Option<Vec<Expo>> = None;
        for g in &gens {
            let (_, face) = f.weighted_min(g)?;
            common = Some(match common {
                None => face,
                Some(prev) => prev.into_iter().filter(|e| face.contains(e)).collect(),
            });
        }
        if common.map(|c| c.is_empty()).unwrap_or(true) {
            admissible = false;
            failures.push(format!(
                "cone #{} generators expose no common face of the Newton polyhedron",
                ci + 1
            ));
        }
    }

    // (3) Smallness: non-axis vertices see positive weighted order.
    let (_, reduced) = f.strip_monomial_content();
    let mut small = true;
    for v in &fan.vertices {
        let is_axis = v.iter().filter(|&&x| x != 0).count() == 1
            && v.iter().all(|&x| x == 0 || x == 1);
        if is_axis {
            continue;
        }
        let (d, _) = reduced.weighted_min(v)?;
        if d <= 0 {
            small = false;
            failures.push(format!(
                "non-axis vertex {v:?} has d(v; f) = {d} ≤ 0 on the reduced polynomial"
            ));
        }
    }

    // (4) Covering: wall condition + exact sample grid.
    let mut covering = true;
    // Every coordinate axis must be a vertex of a covering fan.
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        if !fan.vertices.contains(&e) {
            covering = false;
            failures.push(format!("axis generator {e:?} is not a fan vertex"));
        }
    }
    if n >= 2 {
        use std::collections::BTreeMap;
        let mut wall_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for cone in &fan.maximal_cones {
            if cone.len() != n {
                continue; // already reported under regularity
            }
            for skip in 0..n {
                let mut wall: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                wall.sort_unstable();
                *wall_count.entry(wall).or_insert(0) += 1;
            }
        }
        for (wall, count) in &wall_count {
            let on_boundary = (0..n).any(|i| wall.iter().all(|&v| fan.vertices[v][i] == 0));
            let expected = if on_boundary { 1 } else { 2 };
            if *count != expected {
                covering = false;
                let verts: Vec<&Vec<i64>> = wall.iter().map(|&v| &fan.vertices[v]).collect();
                failures.push(format!(
                    "wall {verts:?} lies in {count} maximal cones, expected {expected}"
                ));
            }
        }
    }
    // Exact sample grid: coverage and interior-disjointness.
    let mut samples: Vec<Vec<i64>> = Vec::new();
    let grid_max = 5i64;
    let mut stack = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        if cur.len() == n {
            if cur.iter().any(|&x| x != 0) {
                samples.push(cur);
            }
            continue;
        }
        for x in 0..=grid_max {
            let mut next = cur.clone();
            next.push(x);
            stack.push(next);
        }
    }
    for v in &fan.vertices {
        samples.push(v.clone());
    }
    for i in 0..fan.vertices.len() {
        for j in i + 1..fan.vertices.len() {
            let s: Vec<i64> = fan.vertices[i]
                .iter()
                .zip(&fan.vertices[j])
                .map(|(a, b)| a + b)
                .collect();
            samples.push(s);
        }
    }
    for w in &samples {
        let mut inside = 0usize;
        let mut strictly = 0usize;
        for (ci, cone) in fan.maximal_cones.iter().enumerate() {
            if cone.len() != n {
                continue;
            }
            let gens = fan.cone_generators(ci);
            // Unique coordinates in a full-dimensional simplicial cone.
            let a: Vec<Vec<Rat>> = (0..n)
                .map(|r| (0..n).map(|g| rat(gens[g][r])).collect())
                .collect();
            let b: Vec<Rat> = w.iter().map(|&x| rat(x)).collect();
            if let Some(lambda) = solve_rat(&a, &b) {
                if lambda.iter().all(|c| !c.is_negative()) {
                    inside += 1;
                    if lambda.iter().all(|c| c.is_positive()) {
                        strictly += 1;
                    }
                }
            }
        }
        if inside == 0 {
            covering = false;
            failures.push(format!("sample weight {w:?} is not covered by any maximal cone"));
        }
        if strictly > 1 {
            covering = false;
            failures.push(format!(
                "sample weight {w:?} lies in the interior of {strictly} maximal cones"
            ));
        }
    }
    failures.dedup();
    failures.truncate(20);

    Ok(FanValidation {
        regular,
        admissible,
        small,
        covering,
        failures,
    })
}

// ---------------------------------------------------------------------------
// Chart pullbacks
// ---------------------------------------------------------------------------

/// The pullback of a germ along the monomial chart of a regular cone:
/// `f(π_σ(y)) = Π_i y_i^{multiplicities[i]} · cofactor(y)`.
#[derive(Clone, Debug, Serialize)]
pub struct ChartPullback {
    /// The cone generators `u_1, …, u_n`, in chart order.
    pub generators: Vec<Vec<i64>>,
    /// `d(u_i; f)`: the exponent of `y_i` in the exceptional monomial.
    pub multiplicities: Vec<i64>,
    /// The cofactor `f̃_σ`, not divisible by any chart variable.
    pub cofactor: Poly,
}

impl ChartPullback {
    /// The full pullback `Π y_i^{m_i} · f̃_σ`.
    pub fn full_pullback(&self) -> Poly {
        self.cofactor
            .mul_monomial(&Expo(self.multiplicities.clone()), &rat(1))
    }

    /// The exponent matrix of the chart as rows of variable images:
    /// row `j` is the exponent vector of the image of `z_{j+1}`.
    pub fn substitution_rows(&self) -> Vec<Vec<i64>> {
        let n = self.generators.len();
        (0..n)
            .map(|j| (0..n).map(|i| self.generators[i][j]).collect())
            .collect()
    }
}

/// Pull a germ back along the monomial chart `z_j = Π_i y_i^{u_i[j]}` of a
/// regular full-dimensional cone `σ = Cone(u_1, …, u_n)` with `u_i ≥ 0`.
pub fn chart_pullback(f: &Poly, gens: &[Vec<i64>]) -> Result<ChartPullback> {
    let n = f.nvars();
    if gens.len() != n || gens.iter().any(|g| g.len() != n) {
        return Err(Error::InvalidCone {
            msg: format!("chart needs {n} generators of length {n}"),
        });
    }
    if gens.iter().any(|g| g.iter().any(|&x| x < 0)) {
        return Err(Error::InvalidCone {
            msg: "chart generators must be nonnegative".into(),
        });
    }
    if det_i64(gens).abs() != crate::Int::from(1) {
        return Err(Error::NotRegular {
            generators: gens.to_vec(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: "chart pullback".into(),
        });
    }
    let mut mult = Vec::with_capacity(n);
    for g in gens {
        let (d, _) = f.weighted_min(g)?;
        mult.push(d);
    }
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| gens[i][j]).collect())
        .collect();
    let pulled = f.substitute_monomial_map(&rows, false)?;
    let neg = Expo(mult.iter().map(|&m| -m).collect());
    let cofactor = pulled.mul_monomial(&neg, &rat(1));
    debug_assert!(cofactor.is_ordinary(), "cofactor division must be exact");
    debug_assert!(
        (0..n).all(|i| cofactor.terms().any(|(e, _)| e.0[i] == 0)),
        "cofactor must not be divisible by any chart variable"
    );
    Ok(ChartPullback {
        generators: gens.to_vec(),
        multiplicities: mult,
        cofactor,
    })
}

/// Chart data of the shifted germ `g = f + c·z_k^{d_k+m}` where `z_k^{d_k}`
/// is the pure power of `z_k` on the boundary of `Γ₊(f)`.
#[derive(Clone, Debug, Serialize)]
pub struct ShiftedChart {
    /// Chart pullback of the shifted germ `g`.
    pub chart: ChartPullback,
    /// The exponent `d_k + m` of the shift monomial.
    pub shift_exponent: i64,
    /// Exponent vector of the shift monomial inside the cofactor.
    pub extra_exponent: Vec<i64>,
}

/// Pull back `f + c·z_{k}^{d_k+m}` along a chart (0-based variable index
/// `k0`, shift amount `m ≥ 1`).
///
/// The shift monomial lies strictly above the Newton boundary in the `z_k`
/// direction, so the exceptional multiplicities are those of `f` itself and
/// the shift only adds one monomial to the cofactor.
pub fn chart_pullback_shifted(
    f: &Poly,
    gens: &[Vec<i64>],
    k0: usize,
    m: i64,
    coeff: &Rat,
) -> Result<ShiftedChart> {
    let n = f.nvars();
    if k0 >= n {
        return Err(Error::VarIndex {
            index: k0 + 1,
            nvars: n,
        });
    }
    if m < 1 {
        return Err(Error::Hypothesis {
            name: "positive-shift".into(),
            detail: format!("shift amount must be ≥ 1, got {m}"),
        });
    }
    if coeff.is_zero() {
        return Err(Error::Hypothesis {
            name: "positive-shift".into(),
            detail: "shift coefficient must be nonzero".into(),
        });
    }
    // d_k: the smallest pure power of z_k in f.
    let d_k = f
        .terms()
        .filter(|(e, _)| e.vars() == vec![k0])
        .map(|(e, _)| e.0[k0])
        .min()
        .ok_or_else(|| Error::Hypothesis {
            name: "convenient".into(),
            detail: format!("no pure power of z{} in the support", k0 + 1),
        })?;
    let base = chart_pullback(f, gens)?;
    let s = d_k + m;
    let extra: Vec<i64> = gens
        .iter()
        .zip(&base.multiplicities)
        .map(|(g, &mi)| s * g[k0] - mi)
        .collect();
    debug_assert!(
        extra.iter().all(|&e| e >= 0),
        "the shift monomial lies above the boundary, so its chart exponents dominate"
    );
    let mut cof = base.cofactor.clone();
    cof.add_term(Expo(extra.clone()), coeff.clone());
    Ok(ShiftedChart {
        chart: ChartPullback {
            generators: base.generators,
            multiplicities: base.multiplicities,
            cofactor: cof,
        },
        shift_exponent: s,
        extra_exponent: extra,
    })
}

/// Apply a local analytic change of coordinates to a germ: substitute
/// `z_i := images[i]`, after checking the change fixes the origin and has an
/// invertible linear part.
pub fn apply_local_change(h: &Poly, images: &[Poly]) -> Result<Poly> {
    let n = h.nvars();
    if images.len() != n || images.iter().any(|g| g.nvars() != n) {
        return Err(Error::Dimension {
            context: format!("coordinate change needs {n} images in {n} variables"),
        });
    }
    for (i, g) in images.iter().enumerate() {
        if !g.vanishes_at_origin() {
            return Err(Error::NotInvertible {
                detail: format!("image of z{} does not vanish at the origin", i + 1),
            });
        }
    }
    let jac: Vec<Vec<Rat>> = images
        .iter()
        .map(|g| {
            (0..n)
                .map(|j| g.coeff(&Expo::axis(n, j, 1)))
                .collect::<Vec<Rat>>()
        })
        .collect();
    if inverse_rat(&jac).is_none() {
        return Err(Error::NotInvertible {
            detail: "linear part of the coordinate change is singular".into(),
        });
    }
    Ok(h.substitute(images))
}

// ---------------------------------------------------------------------------
// Hirzebruch–Jung subdivision (2-D) and stellar regularization (3-D)
// ---------------------------------------------------------------------------

/// Resolve a 2-dimensional cone `Cone(u, v)` into a chain of regular cones.
///
/// Returns the full chain of primitive generators from `u` to `v` (inclusive);
/// consecutive pairs span regular cones (`|det| = 1`). The inserted
/// generators are the lattice points on the compact boundary of the convex
/// hull of the nonzero lattice points of the cone.
pub fn hj_subdivide_2d(u: &[i64], v: &[i64]) -> Result<Vec<Vec<i64>>> {
    if u.len() != 2 || v.len() != 2 {
        return Err(Error::InvalidCone {
            msg: "Hirzebruch–Jung subdivision works on 2-dimensional cones".into(),
        });
    }
    if !is_primitive(u) || !is_primitive(v) {
        return Err(Error::InvalidCone {
            msg: format!("generators must be primitive: {u:?}, {v:?}"),
        });
    }
    let cross = |a: &[i64], b: &[i64]| -> i128 {
        a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
    };
    let orient = cross(u, v);
    if orient == 0 {
        return Err(Error::InvalidCone {
            msg: format!("generators are dependent: {u:?}, {v:?}"),
        });
    }
    let (a, b, flipped) = if orient > 0 {
        (u.to_vec(), v.to_vec(), false)
    } else {
        (v.to_vec(), u.to_vec(), true)
    };
    // Candidate generators: primitive lattice points in the fundamental
    // parallelogram {λa + μb : 0 ≤ λ, μ ≤ 1}.
    let det = cross(&a, &b); // > 0
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    let xs = [0i64, a[0], b[0], a[0] + b[0]];
    let ys = [0i64, a[1], b[1], a[1] + b[1]];
    let (xmin, xmax) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (ymin, ymax) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            if x == 0 && y == 0 {
                continue;
            }
            let p = [x, y];
            // Cramer: p = λa + μb with λ = cross(p,b)/det, μ = cross(a,p)/det.
            let lam_num = cross(&p, &b);
            let mu_num = cross(&a, &p);
            if lam_num < 0 || lam_num > det || mu_num < 0 || mu_num > det {
                continue;
            }
            if !is_primitive(&p) {
                continue;
            }
            candidates.push(p.to_vec());
        }
    }
    // Angular sort from a towards b.
    candidates.sort_by(|p, q| {
        let c = cross(p, q);
        if c > 0 {
            std::cmp::Ordering::Less
        } else if c < 0 {
            std::cmp::Ordering::Greater
        } else {
            // Same ray: nearer point first (both primitive ⇒ equal; stable).
            (p[0].abs() + p[1].abs()).cmp(&(q[0].abs() + q[1].abs()))
        }
    });
    debug_assert_eq!(candidates.first(), Some(&a));
    debug_assert_eq!(candidates.last(), Some(&b));
    // Graham-style scan keeping the chain nearest the origin: walking from a
    // to b, every turn must be clockwise or straight (cross ≤ 0); a
    // counterclockwise turn means the middle point is not on the chain.
    let mut chain: Vec<Vec<i64>> = Vec::new();
    for p in candidates {
        while chain.len() >= 2 {
            let c1 = &chain[chain.len() - 2];
            let c2 = &chain[chain.len() - 1];
            let d1 = [c2[0] - c1[0], c2[1] - c1[1]];
            let d2 = [p[0] - c2[0], p[1] - c2[1]];
            if cross(&d1, &d2) > 0 {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }
    debug_assert!(
        chain
            .windows(2)
            .all(|w| cross(&w[0], &w[1]) == 1),
        "consecutive chain generators must span regular cones"
    );
    if flipped {
        chain.reverse();
    }
    Ok(chain)
}

/// Subdivide a full-dimensional simplicial cone in `R³` into regular cones by
/// budgeted stellar subdivision.
///
/// Each step inserts the primitive lattice point of the half-open fundamental
/// parallelepiped with the smallest coefficient sum, splitting every cone it
/// lies in. Each split strictly reduces multiplicity, so the procedure
/// terminates; `budget` bounds the number of splits defensively.
pub fn regularize_cone_3d(gens: &[Vec<i64>], budget: usize) -> Result<Vec<Vec<Vec<i64>>>> {
    if gens.len() != 3 || gens.iter().any(|g| g.len() != 3) {
        return Err(Error::InvalidCone {
            msg: "stellar regularization works on full-dimensional cones in R^3".into(),
        });
    }
    if gens.iter().any(|g| !is_primitive(g)) {
        return Err(Error::InvalidCone {
            msg: format!("generators must be primitive: {gens:?}"),
        });
    }
    if det_i64(gens).is_zero() {
        return Err(Error::InvalidCone {
            msg: format!("generators are dependent: {gens:?}"),
        });
    }
    // Maintain the whole current subdivision; each step inserts one point
    // and stellarly splits *every* cone containing it, so the family stays a
    // face-to-face tiling of the input cone throughout.
    let mut cones: Vec<Vec<Vec<i64>>> = vec![gens.to_vec()];
    let mut steps = 0usize;
    while let Some(pos) = cones
        .iter()
        .position(|c| det_i64(c).abs() != crate::Int::from(1))
    {
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExceeded {
                what: "stellar subdivision steps".into(),
                budget,
            });
        }
        let (p, _) = parallelepiped_point(&cones[pos])?;
        let mut next: Vec<Vec<Vec<i64>>> = Vec::with_capacity(cones.len() + 2);
        for cone in &cones {
            // Unique conic coordinates of p in this full-dimensional cone.
            let a: Vec<Vec<Rat>> = (0..3)
                .map(|r| (0..3).map(|g| rat(cone[g][r])).collect())
                .collect();
            let b: Vec<Rat> = p.iter().map(|&t| rat(t)).collect();
            let lambda = solve_rat(&a, &b).expect("full-dimensional cone");
            if lambda.iter().any(|l| l.is_negative()) {
                next.push(cone.clone()); // p outside: untouched
                continue;
            }
            for i in 0..3 {
                if lambda[i].is_zero() {
                    continue;
                }
                let mut child = cone.clone();
                child[i] = p.clone();
                next.push(child);
            }
        }
        cones = next;
    }
    cones.sort();
    Ok(cones)
}

/// The primitive lattice point `p = Σ λ_i u_i` with `λ ∈ [0,1)³`, `p ≠ 0`,
/// minimizing `Σ λ_i` (ties broken lexicographically).
fn parallelepiped_point(gens: &[Vec<i64>]) -> Result<(Vec<i64>, Vec<Rat>)> {
    let mut best: Option<(Rat, Vec<i64>, Vec<Rat>)> = None;
    let mut corners_x = Vec::new();
    let mut corners_y = Vec::new();
    let mut corners_z = Vec::new();
    for mask in 0..8u32 {
        let mut c = [0i64; 3];
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (cc, &gc) in c.iter_mut().zip(g) {
                    *cc += gc;
                }
            }
        }
        corners_x.push(c[0]);
        corners_y.push(c[1]);
        corners_z.push(c[2]);
    }
    let a: Vec<Vec<Rat>> = (0..3)
        .map(|r| (0..3).map(|g| rat(gens[g][r])).collect())
        .collect();
    for x in *corners_x.iter().min().unwrap()..=*corners_x.iter().max().unwrap() {
        for y in *corners_y.iter().min().unwrap()..=*corners_y.iter().max().unwrap() {
            for z in *corners_z.iter().min().unwrap()..=*corners_z.iter().max().unwrap() {
                if x == 0 && y == 0 && z == 0 {
                    continue;
                }
                let p = vec![x, y, z];
                if !is_primitive(&p) {
                    continue;
                }
                let b: Vec<Rat> = p.iter().map(|&t| rat(t)).collect();
                let Some(lam) = solve_rat(&a, &b) else {
                    continue;
                };
                if lam
                    .iter()
                    .any(|l| l.is_negative() || *l >= rat(1))
                {
                    continue;
                }
                let total: Rat = lam.iter().cloned().sum();
                let cand = (total, p, lam);
                best = Some(match best {
                    None => cand,
                    Some(cur) => {
                        if (&cand.0, &cand.1) < (&cur.0, &cur.1) {
                            cand
                        } else {
                            cur
                        }
                    }
                });
            }
        }
    }
    best.map(|(_, p, l)| (p, l)).ok_or_else(|| Error::InvalidCone {
        msg: "no parallelepiped point found in a non-regular cone".into(),
    })
}
