//! Newton polyhedra, face lattices, dual diagrams, Newton numbers.
//!
//! For `f = Σ c_α z^α` with `f(0) = 0`, the **Newton polyhedron** `Γ₊(f)` is
//! the convex hull of `⋃_{α ∈ supp f} (α + R₊^n)`; the **Newton boundary**
//! `Γ(f)` is the union of its compact faces. For a weight vector `w ≥ 0`,
//! `d(w; f) = min_{α ∈ supp f} ℓ_w(α)` and `Δ(w; f)` is the face of `Γ₊(f)`
//! where the minimum is attained.
//!
//! Construction here is direct exact integer geometry (no general hull
//! library): facet normals are enumerated from spanning subsets of support
//! points and coordinate rays, verified as supporting hyperplanes; the face
//! lattice is the closure of facets under intersection, with each face
//! identified by its support points **and** its recession rays; the canonical
//! exposing weight of a face is the sum of the normals of all facets
//! containing it, which lies in the relative interior of its normal cone.
//! Everything works in ambient dimension ≤ 4.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{det_i64, make_primitive, rank_rat, subsets_of_size};
use crate::poly::{Expo, Poly};
use crate::{rat, Int};

/// Maximum ambient dimension supported by the face-lattice machinery.
pub const MAX_DIM: usize = 4;

/// A face of a Newton polyhedron.
#[derive(Clone, Debug, Serialize)]
pub struct Face {
    /// Identifier (index into [`NewtonComplex::faces`]).
    pub id: usize,
    /// Dimension of the face (0 = vertex).
    pub dim: usize,
    /// True if the face is bounded (lies on the Newton boundary).
    pub compact: bool,
    /// Indices into [`NewtonComplex::support`] of the support points on the face.
    pub points: Vec<usize>,
    /// Coordinate rays in the recession cone of the face (0-based axes).
    pub rays: Vec<usize>,
    /// Canonical exposing weight: the sum of the primitive normals of all
    /// facets containing this face.
    pub exposing: Vec<i64>,
    /// `ℓ_exposing` evaluated on the face (i.e. `d(exposing; f)`).
    pub level: i64,
    /// Primitive normal vector if this face is a facet.
    pub normal: Option<Vec<i64>>,
    /// `d(normal; f)` if this face is a facet.
    pub normal_level: Option<i64>,
}

/// The face lattice of a Newton polyhedron.
#[derive(Clone, Debug, Serialize)]
pub struct NewtonComplex {
    /// Number of coordinates of the lattice points below.
    pub nvars: usize,
    /// Ambient 0-based variable indices these coordinates correspond to
    /// (identity for a full-dimensional complex; the subset `I` for `f^I`).
    pub ambient_vars: Vec<usize>,
    /// Support points of the polynomial, deduplicated, graded-lex order.
    pub support: Vec<Expo>,
    /// Every proper face, sorted by (dim, points).
    pub faces: Vec<Face>,
    /// True if the boundary meets every coordinate axis.
    pub convenient: bool,
}

impl NewtonComplex {
    /// Faces of a given dimension.
    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    /// Vertices of the Newton polyhedron.
    pub fn vertices(&self) -> Vec<&Face> {
        self.faces_of_dim(0).collect()
    }

    /// All facets ((n−1)-dimensional faces), compact or not.
    pub fn facets(&self) -> Vec<&Face> {
        self.faces_of_dim(self.nvars - 1).collect()
    }

    /// Compact facets (the top-dimensional pieces of the Newton boundary).
    pub fn compact_facets(&self) -> Vec<&Face> {
        self.faces
            .iter()
            .filter(|f| f.dim + 1 == self.nvars && f.compact)
            .collect()
    }

    /// All compact faces (the cells of the Newton boundary).
    pub fn compact_faces(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.compact).collect()
    }

    /// Exponent vectors of the support points of a face.
    pub fn face_points(&self, face: &Face) -> Vec<Expo> {
        face.points.iter().map(|&i| self.support[i].clone()).collect()
    }

    /// Membership test `α ∈ Γ₊(f)` via the facet inequalities.
    pub fn contains_point(&self, alpha: &Expo) -> bool {
        assert_eq!(alpha.len(), self.nvars);
        self.faces.iter().all(|f| match (&f.normal, f.normal_level) {
            (Some(n), Some(d)) => alpha.weighted(n) >= d,
            _ => true,
        })
    }

    /// Support points lying on the Newton boundary (on some compact face).
    pub fn boundary_support(&self) -> Vec<usize> {
        let mut on = vec![false; self.support.len()];
        for f in self.faces.iter().filter(|f| f.compact) {
            for &p in &f.points {
                on[p] = true;
            }
        }
        (0..self.support.len()).filter(|&i| on[i]).collect()
    }

    /// Normalized volume `n! · Vol_n(Cone(Δ, 0))` of the cone over a compact
    /// face `Δ`, an exact integer. Lower-dimensional faces give 0.
    ///
    /// # Panics
    /// Panics if the face is not compact or the id is stale.
    pub fn normalized_volume(&self, face_id: usize) -> Int {
        let face = &self.faces[face_id];
        assert!(face.compact, "normalized volume needs a compact face");
        if face.dim + 1 != self.nvars {
            return Int::zero();
        }
        let pts = self.face_points(face);
        match self.nvars {
            1 => Int::from(pts[0].0[0]),
            2 => {
                // Extreme points of the segment maximize the determinant.
                let mut best = Int::zero();
                for i in 0..pts.len() {
                    for j in i + 1..pts.len() {
                        let d = det_i64(&[
                            vec![pts[i].0[0], pts[j].0[0]],
                            vec![pts[i].0[1], pts[j].0[1]],
                        ])
                        .abs();
                        if d > best {
                            best = d;
                        }
                    }
                }
                best
            }
            3 => polygon_cone_volume(&pts),
            4 => {
                // Fan out from a vertex of the 3-polytope over the
                // triangulations of the 2-faces that do not contain it.
                let apex_pt = &self.support[face.points[0]];
                let mut total = Int::zero();
                for g in &self.faces {
                    if !g.compact || g.dim != 2 || g.id == face.id {
                        continue;
                    }
                    if !g.points.iter().all(|p| face.points.contains(p)) {
                        continue;
                    }
                    if g.points.contains(&face.points[0]) {
                        continue;
                    }
                    let gpts = self.face_points(g);
                    for (a, b, c) in triangulate_polygon(&gpts) {
                        let m: Vec<Vec<i64>> = (0..4)
                            .map(|r| vec![apex_pt.0[r], a.0[r], b.0[r], c.0[r]])
                            .collect();
                        total += det_i64(&m).abs();
                    }
                }
                total
            }
            _ => unreachable!("dimension bound enforced at construction"),
        }
    }
}

/// `3! Vol_3` of the cone over a planar polygon (given by all its lattice
/// support points, hull taken internally).
fn polygon_cone_volume(pts: &[Expo]) -> Int {
    let tris = triangulate_polygon(pts);
    let mut total = Int::zero();
    for (a, b, c) in tris {
        let m: Vec<Vec<i64>> = (0..3).map(|r| vec![a.0[r], b.0[r], c.0[r]]).collect();
        total += det_i64(&m).abs();
    }
    total
}

/// Triangulate the convex hull of a planar point set (in any ambient
/// dimension) as a fan from its first hull vertex. Degenerate (collinear)
/// inputs yield no triangles.
fn triangulate_polygon(pts: &[Expo]) -> Vec<(Expo, Expo, Expo)> {
    let k = pts[0].len();
    // Project injectively to 2 coordinates: pick a coordinate pair where the
    // in-plane directions keep rank 2.
    let dirs: Vec<Vec<i64>> = pts[1..].iter().map(|p| p.sub(&pts[0]).0).collect();
    let mut proj = None;
    'outer: for i in 0..k {
        for j in i + 1..k {
            let m: Vec<Vec<crate::Rat>> = dirs
                .iter()
                .map(|d| vec![rat(d[i]), rat(d[j])])
                .collect();
            if rank_rat(&m) == 2 {
                proj = Some((i, j));
                break 'outer;
            }
        }
    }
    let Some((ci, cj)) = proj else {
        return Vec::new(); // collinear: no 2-dimensional content
    };
    let flat: Vec<(i64, i64)> = pts.iter().map(|p| (p.0[ci], p.0[cj])).collect();
    let hull = convex_hull_2d(&flat);
    if hull.len() < 3 {
        return Vec::new();
    }
    (1..hull.len() - 1)
        .map(|t| {
            (
                pts[hull[0]].clone(),
                pts[hull[t]].clone(),
                pts[hull[t + 1]].clone(),
            )
        })
        .collect()
}

/// Indices of the convex hull of 2-D integer points, counterclockwise
/// (Andrew's monotone chain, exact arithmetic, collinear points dropped).
fn convex_hull_2d(pts: &[(i64, i64)]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by_key(|&i| pts[i]);
    idx.dedup_by_key(|i| pts[*i]);
    if idx.len() <= 2 {
        return idx;
    }
    let cross = |o: usize, a: usize, b: usize| -> i128 {
        let (ox, oy) = pts[o];
        let (ax, ay) = pts[a];
        let (bx, by) = pts[b];
        (ax - ox) as i128 * (by - oy) as i128 - (ay - oy) as i128 * (bx - ox) as i128
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], i) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], i) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Build the full face lattice of the Newton polyhedron of `f`.
///
/// Works for any nonzero `f` in ≤ 4 variables (convenience is *not* required;
/// the `convenient` flag is reported, not enforced).
pub fn newton_complex(f: &Poly) -> Result<NewtonComplex> {
    let vars: Vec<usize> = (0..f.nvars()).collect();
    newton_complex_of_projection(f, &vars)
}

/// Face lattice of the projection `f^I` regarded inside `R^I`.
///
/// `vars` lists the 0-based ambient variables of `I` (strictly increasing);
/// the complex coordinates follow that order. Errors if `f^I = 0`.
pub fn newton_complex_of_projection(f: &Poly, vars: &[usize]) -> Result<NewtonComplex> {
    let g = f.project(vars);
    let k = vars.len();
    if k == 0 || k > MAX_DIM {
        return Err(Error::UnsupportedDimension {
            what: "newton complex".into(),
            nvars: k,
            max: MAX_DIM,
        });
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: format!("restriction to variables {vars:?} is zero"),
        });
    }
    if !g.is_ordinary() {
        return Err(Error::NegativeExponent {
            context: "newton complex of a Laurent polynomial".into(),
        });
    }
    let support = g.support();
    if support.len() > 128 {
        return Err(Error::UnsupportedDimension {
            what: "newton complex support size (bitset limit 128)".into(),
            nvars: support.len(),
            max: 128,
        });
    }

    // --- Facet enumeration -------------------------------------------------
    // Candidate normals come from spanning sets of (k−1) directions chosen
    // among support-point differences and coordinate rays.
    let mut facets: Vec<(Vec<i64>, i64, u128)> = Vec::new(); // (normal, level, points)
    let levels = |w: &[i64]| -> (i64, u128) {
        let mut d = i64::MAX;
        for p in &support {
            d = d.min(p.weighted(w));
        }
        let mut mask = 0u128;
        for (i, p) in support.iter().enumerate() {
            if p.weighted(w) == d {
                mask |= 1 << i;
            }
        }
        (d, mask)
    };
    if k == 1 {
        // Single facet: the vertex at min exponent, normal (1).
        let (d, mask) = levels(&[1]);
        facets.push((vec![1], d, mask));
    } else {
        for pc in 1..=k.min(support.len()) {
            let rc = k - pc;
            for pset in subsets_of_size(support.len(), pc) {
                for rset in subsets_of_size(k, rc) {
                    let mut dirs: Vec<Vec<i64>> = pset[1..]
                        .iter()
                        .map(|&i| support[i].sub(&support[pset[0]]).0)
                        .collect();
                    for &r in &rset {
                        let mut e = vec![0i64; k];
                        e[r] = 1;
                        dirs.push(e);
                    }
                    let Some(n) = cross_normal(&dirs, k) else {
                        continue;
                    };
                    // Orient nonnegative (a Γ₊ facet normal must be ≥ 0).
                    let n = if n.iter().all(|&x| x <= 0) {
                        n.iter().map(|&x| -x).collect::<Vec<i64>>()
                    } else {
                        n
                    };
                    if n.iter().any(|&x| x < 0) {
                        continue;
                    }
                    let (d, mask) = levels(&n);
                    // The generating points must lie on the face.
                    if pset.iter().any(|&i| mask & (1 << i) == 0) {
                        continue;
                    }
                    if facets.iter().any(|(fn_, _, _)| fn_ == &n) {
                        continue;
                    }
                    // Verify dimension k−1: points + rays where n_i = 0.
                    if face_dim(&support, mask, &n, k) == k - 1 {
                        facets.push((n, d, mask));
                    }
                }
            }
        }
    }
    facets.sort();

    // --- Face lattice: closure under intersection --------------------------
    // A face is identified by (support-point set, recession-ray set).
    #[derive(Clone)]
    struct ProtoFace {
        mask: u128,
        raymask: u32,
        exposing: Vec<i64>,
    }
    let raymask_of = |w: &[i64]| -> u32 {
        let mut m = 0u32;
        for (i, &x) in w.iter().enumerate() {
            if x == 0 {
                m |= 1 << i;
            }
        }
        m
    };
    let mut protos: Vec<ProtoFace> = facets
        .iter()
        .map(|(n, _, mask)| ProtoFace {
            mask: *mask,
            raymask: raymask_of(n),
            exposing: n.clone(),
        })
        .collect();
    let mut seen: Vec<(u128, u32)> = protos.iter().map(|p| (p.mask, p.raymask)).collect();
    loop {
        let mut added = false;
        let cur = protos.clone();
        for i in 0..cur.len() {
            for j in i + 1..cur.len() {
                let w: Vec<i64> = cur[i]
                    .exposing
                    .iter()
                    .zip(&cur[j].exposing)
                    .map(|(a, b)| a + b)
                    .collect();
                let mask = cur[i].mask & cur[j].mask;
                if mask == 0 {
                    // Disjoint support points ⇒ the two faces do not meet
                    // (every nonempty face contains a vertex of Γ₊, which is
                    // a support point), so this pair spawns no face.
                    continue;
                }
                let rm = raymask_of(&w);
                if !seen.contains(&(mask, rm)) {
                    seen.push((mask, rm));
                    protos.push(ProtoFace {
                        mask,
                        raymask: rm,
                        exposing: w,
                    });
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }

    // --- Assemble Face records --------------------------------------------
    let mut faces: Vec<Face> = Vec::with_capacity(protos.len());
    for p in &protos {
        // Canonical exposing weight: sum of normals of all facets ⊇ this face.
        let mut exposing = vec![0i64; k];
        let mut normal = None;
        let mut normal_level = None;
        for (n, d, fmask) in &facets {
            if (p.mask & fmask) == p.mask && (raymask_of(n) & p.raymask) == p.raymask {
                for (e, &x) in exposing.iter_mut().zip(n) {
                    *e += x;
                }
                if *fmask == p.mask && raymask_of(n) == p.raymask {
                    normal = Some(n.clone());
                    normal_level = Some(*d);
                }
            }
        }
        debug_assert!(exposing.iter().any(|&x| x != 0));
        let dim = face_dim(&support, p.mask, &exposing, k);
        let compact = exposing.iter().all(|&x| x > 0);
        let points: Vec<usize> = (0..support.len()).filter(|&i| p.mask & (1 << i) != 0).collect();
        let level = support[points[0]].weighted(&exposing);
        faces.push(Face {
            id: 0,
            dim,
            compact,
            points,
            rays: (0..k).filter(|&i| p.raymask & (1 << i) != 0).collect(),
            exposing,
            level,
            normal,
            normal_level,
        });
    }
    faces.sort_by(|a, b| (a.dim, &a.points, &a.rays).cmp(&(b.dim, &b.points, &b.rays)));
    for (i, f) in faces.iter_mut().enumerate() {
        f.id = i;
    }

    let convenient = g.is_convenient();
    Ok(NewtonComplex {
        nvars: k,
        ambient_vars: vars.to_vec(),
        support,
        faces,
        convenient,
    })
}

/// Primitive kernel vector of `k−1` independent directions in `Z^k`
/// (generalized cross product), or `None` if they are dependent.
fn cross_normal(dirs: &[Vec<i64>], k: usize) -> Option<Vec<i64>> {
    debug_assert_eq!(dirs.len(), k - 1);
    let mut n = Vec::with_capacity(k);
    for j in 0..k {
        let minor: Vec<Vec<i64>> = dirs
            .iter()
            .map(|d| {
                (0..k)
                    .filter(|&c| c != j)
                    .map(|c| d[c])
                    .collect::<Vec<i64>>()
            })
            .collect();
        let det = det_i64(&minor);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let v = det * Int::from(sign);
        n.push(i64::try_from(v).expect("normal entry overflow"));
    }
    make_primitive(&n)
}

/// Dimension of the face with the given support points and exposing weight:
/// affine rank of the points plus the rays `{e_i : w_i = 0}`.
fn face_dim(support: &[Expo], mask: u128, w: &[i64], k: usize) -> usize {
    let pts: Vec<usize> = (0..support.len()).filter(|&i| mask & (1 << i) != 0).collect();
    let mut rows: Vec<Vec<crate::Rat>> = Vec::new();
    let base = &support[pts[0]];
    for &p in &pts[1..] {
        rows.push(support[p].sub(base).0.iter().map(|&x| rat(x)).collect());
    }
    for (i, &wi) in w.iter().enumerate().take(k) {
        if wi == 0 {
            let mut e = vec![rat(0); k];
            e[i] = rat(1);
            rows.push(e);
        }
    }
    if rows.is_empty() {
        0
    } else {
        rank_rat(&rows)
    }
}

// ---------------------------------------------------------------------------
// Dual Newton diagram
// ---------------------------------------------------------------------------

/// A maximal cone of the dual Newton diagram (the normal cone of a vertex).
#[derive(Clone, Debug, Serialize)]
pub struct DualCone {
    /// Indices into [`DualDiagram::vertices`] of the generating normals.
    pub generators: Vec<usize>,
    /// The vertex of the Newton polyhedron this cone is dual to.
    pub dual_vertex: Expo,
}

/// The dual Newton diagram: facet normals and per-vertex normal cones
/// covering the nonnegative orthant.
#[derive(Clone, Debug, Serialize)]
pub struct DualDiagram {
    /// All primitive facet normals (the vertices of the dual diagram).
    pub vertices: Vec<Vec<i64>>,
    /// Indices of the strictly positive normals (duals of compact facets).
    pub positive_vertices: Vec<usize>,
    /// Normal cones of the vertices of the Newton polyhedron.
    pub cones: Vec<DualCone>,
}

/// Compute the dual Newton diagram of `f`.
pub fn dual_newton_diagram(f: &Poly) -> Result<DualDiagram> {
    let complex = newton_complex(f)?;
    dual_of_complex(&complex)
}

/// Dual diagram read off an already-built complex.
pub fn dual_of_complex(complex: &NewtonComplex) -> Result<DualDiagram> {
    let mut vertices: Vec<Vec<i64>> = Vec::new();
    for face in &complex.faces {
        if let Some(n) = &face.normal {
            if !vertices.contains(n) {
                vertices.push(n.clone());
            }
        }
    }
    vertices.sort();
    let positive_vertices = (0..vertices.len())
        .filter(|&i| vertices[i].iter().all(|&x| x > 0))
        .collect();
    let mut cones = Vec::new();
    for v in complex.faces_of_dim(0) {
        let pt = v.points[0];
        let mut gens: Vec<usize> = Vec::new();
        for face in &complex.faces {
            if let Some(n) = &face.normal {
                if face.points.contains(&pt) {
                    let idx = vertices.iter().position(|u| u == n).unwrap();
                    if !gens.contains(&idx) {
                        gens.push(idx);
                    }
                }
            }
        }
        gens.sort();
        cones.push(DualCone {
            generators: gens,
            dual_vertex: complex.support[pt].clone(),
        });
    }
    cones.sort_by(|a, b| a.dual_vertex.cmp(&b.dual_vertex));
    Ok(DualDiagram {
        vertices,
        positive_vertices,
        cones,
    })
}

// ---------------------------------------------------------------------------
// Newton number
// ---------------------------------------------------------------------------

/// Kouchnirenko's Newton number of a convenient polynomial:
///
/// `ν(f) = Σ_{∅ ≠ I ⊆ {1..n}} (−1)^{n−|I|} |I|! Vol_{|I|}(Γ₋(f^I)) + (−1)^n`.
///
/// For convenient `f` with nondegenerate boundary this equals the Milnor
/// number `μ(f)`.
pub fn newton_number(f: &Poly) -> Result<Int> {
    let n = f.nvars();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: "newton number".into(),
        });
    }
    if !f.vanishes_at_origin() {
        return Err(Error::Hypothesis {
            name: "vanishes-at-origin".into(),
            detail: "the germ must satisfy f(0) = 0".into(),
        });
    }
    if !f.is_convenient() {
        return Err(Error::Hypothesis {
            name: "convenient".into(),
            detail: "newton number needs a convenient polynomial (boundary meets every axis)".into(),
        });
    }
    let mut nu = Int::from((-1i64).pow(n as u32));
    for size in 1..=n {
        for vars in subsets_of_size(n, size) {
            let complex = newton_complex_of_projection(f, &vars)?;
            let mut vol = Int::zero();
            for facet in complex.compact_facets() {
                vol += complex.normalized_volume(facet.id);
            }
            let sign = if (n - size).is_multiple_of(2) { 1 } else { -1 };
            nu += vol * Int::from(sign);
        }
    }
    Ok(nu)
}

/// Per-face rational Euler-type weight used by the boundary zeta-function:
/// `χ(Δ) = (−1)^{k−1} k! Vol_k(Cone(Δ,0)) / d` for a compact facet `Δ` of a
/// `k`-dimensional complex with primitive normal `w` and level `d = d(w)`.
///
/// This is always an integer for primitive `w` (the lattice of the supporting
/// hyperplane has covolume `d`); the division here is checked.
pub fn facet_chi(complex: &NewtonComplex, face_id: usize) -> Result<Int> {
    let face = &complex.faces[face_id];
    let k = complex.nvars;
    let d = face.normal_level.ok_or_else(|| Error::InvalidCone {
        msg: "facet_chi needs a facet".into(),
    })?;
    if d <= 0 {
        return Err(Error::Hypothesis {
            name: "positive-level".into(),
            detail: "facet weight needs d(w; f) > 0 (f must vanish at the origin)".into(),
        });
    }
    let vol = complex.normalized_volume(face_id);
    let (q, r) = num_integer::Integer::div_rem(&vol, &Int::from(d));
    if !r.is_zero() {
        return Err(Error::NonIntegralExponent {
            period: d as u64,
            exponent: format!("{vol}/{d}"),
        });
    }
    let sign = if (k - 1).is_multiple_of(2) { 1 } else { -1 };
    Ok(q * Int::from(sign))
}
