//! Univariate and bivariate elimination over `Q`.
//!
//! This module supplies the exact commutative-algebra subroutines behind the
//! nondegeneracy certificates:
//!
//! * dense univariate polynomials [`UPoly`] with gcd, squarefree parts,
//!   Sturm chains, and **certified** integer/rational root extraction
//!   (no integer factorization: rational roots are found by monicizing and
//!   isolating real roots with exact Sturm bisection, so huge coefficients
//!   are handled soundly);
//! * resultants, computed fraction-free through integer Sylvester matrices;
//! * a bivariate layer (primitive-Euclid gcd in `(Q[x])[y]`, resultants by
//!   evaluation/interpolation at points where leading coefficients survive,
//!   squarefree tests) used for curves of critical points and discriminants.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::det_int;
use crate::poly::{Expo, Poly};
use crate::{rat, Int, Rat};

/// Dense univariate polynomial over `Q`; `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient vector is kept trimmed (no trailing zeros); the zero
/// polynomial has an empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    /// Build from a coefficient vector (low degree first), trimming zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    /// The constant polynomial.
    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    /// Coefficient slice, low degree first.
    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// True if constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    /// Leading coefficient.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn lc(&self) -> &Rat {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Coefficient of `x^i` (zero when out of range).
    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Derivative.
    pub fn derivative(&self) -> UPoly {
        if self.0.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    /// Sum.
    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    /// Difference.
    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// Product.
    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// `x^k · self`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); k];
        out.extend(self.0.iter().cloned());
        UPoly::new(out)
    }

    /// `self^k`.
    pub fn pow(&self, k: usize) -> UPoly {
        let mut acc = UPoly::constant(Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder of rational polynomial division.
    ///
    /// # Panics
    /// Panics when dividing by zero.
    pub fn divrem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let mut rem = self.0.clone();
        if rem.len() < divisor.0.len() {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        let inv = divisor.lc().clone().recip();
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] * &inv;
            if q.is_zero() {
                continue;
            }
            quot[i - dd] = q.clone();
            for j in 0..=dd {
                let v = &rem[i - dd + j] - &q * &divisor.0[j];
                rem[i - dd + j] = v;
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Exact division (asserts zero remainder).
    pub fn div_exact(&self, divisor: &UPoly) -> UPoly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic normalization (zero stays zero).
    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let inv = self.lc().clone().recip();
        self.scale(&inv)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> UPoly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// True if the polynomial has no repeated complex roots.
    pub fn is_squarefree(&self) -> bool {
        self.is_constant() || self.gcd(&self.derivative()).is_constant()
    }

    /// Clear denominators and content: the primitive integer coefficient
    /// vector of the rational multiple of `self` whose leading coefficient
    /// is positive.
    pub fn primitive_integer(&self) -> Vec<Int> {
        use num_integer::Integer;
        if self.is_zero() {
            return Vec::new();
        }
        let mut den = Int::one();
        for c in &self.0 {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<Int> = self
            .0
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = Int::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if g > Int::one() {
            for v in &mut ints {
                *v = &*v / &g;
            }
        }
        if ints.last().unwrap().is_negative() {
            for v in &mut ints {
                *v = -v.clone();
            }
        }
        ints
    }

    /// Convert a one-variable [`Poly`] into a dense `UPoly`.
    ///
    /// # Panics
    /// Panics unless `f` has exactly one variable and ordinary exponents.
    pub fn from_poly1(f: &Poly) -> UPoly {
        assert_eq!(f.nvars(), 1, "expected a univariate polynomial");
        let deg = f.degree().unwrap_or(0);
        assert!(deg >= 0, "Laurent polynomial cannot be densified");
        let mut out = vec![Rat::zero(); deg as usize + 1];
        for (e, c) in f.terms() {
            assert!(e.0[0] >= 0);
            out[e.0[0] as usize] = c.clone();
        }
        UPoly::new(out)
    }

    /// Convert back into a sparse one-variable [`Poly`].
    pub fn to_poly1(&self) -> Poly {
        let mut p = Poly::zero(1);
        for (i, c) in self.0.iter().enumerate() {
            p.add_term(Expo(vec![i as i64]), c.clone());
        }
        p
    }
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

/// Resultant of two univariate polynomials over `Q` (fraction-free Sylvester).
///
/// Conventions: `res(p, q) = lc(q)^{deg p}` when `deg q = 0`, `1` when both
/// are (nonzero) constants, `0` when either polynomial is zero.
pub fn resultant(p: &UPoly, q: &UPoly) -> Rat {
    if p.is_zero() || q.is_zero() {
        return Rat::zero();
    }
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    if dp == 0 && dq == 0 {
        return Rat::one();
    }
    if dp == 0 {
        let mut acc = Rat::one();
        for _ in 0..dq {
            acc *= &p.0[0];
        }
        return acc;
    }
    if dq == 0 {
        let mut acc = Rat::one();
        for _ in 0..dp {
            acc *= &q.0[0];
        }
        return acc;
    }
    // Scale to integers: res(c·p, q) = c^{deg q} · res(p, q).
    let pi = p.primitive_integer();
    let qi = q.primitive_integer();
    let scale_p = Rat::new(pi[dp].clone(), p.lc().numer().clone()) * Rat::new(p.lc().denom().clone(), Int::one());
    let scale_q = Rat::new(qi[dq].clone(), q.lc().numer().clone()) * Rat::new(q.lc().denom().clone(), Int::one());
    // scale_p = pi.lc / p.lc  (the rational multiplier turning p into pi).
    let n = dp + dq;
    let mut syl = vec![vec![Int::zero(); n]; n];
    for row in 0..dq {
        for (k, c) in pi.iter().enumerate() {
            syl[row][row + dp - k] = c.clone();
        }
    }
    for row in 0..dp {
        for (k, c) in qi.iter().enumerate() {
            syl[dq + row][row + dq - k] = c.clone();
        }
    }
    let det = det_int(&syl);
    // res(pi, qi) = scale_p^{dq} scale_q^{dp} res(p, q).
    let mut denom = Rat::one();
    for _ in 0..dq {
        denom *= &scale_p;
    }
    for _ in 0..dp {
        denom *= &scale_q;
    }
    Rat::from_integer(det) / denom
}

// ---------------------------------------------------------------------------
// Sturm chains and certified root extraction
// ---------------------------------------------------------------------------

/// Sturm chain of the squarefree part of `p`.
fn sturm_chain(p: &UPoly) -> Vec<UPoly> {
    let p0 = p.squarefree_part();
    let mut chain = vec![p0.clone(), p0.derivative()];
    while !chain.last().unwrap().is_zero() {
        let k = chain.len();
        let (_, r) = chain[k - 2].divrem(&chain[k - 1]);
        chain.push(r.scale(&rat(-1)));
    }
    chain.pop();
    chain
}

fn sign_changes_at(chain: &[UPoly], x: &Rat) -> usize {
    let mut signs = Vec::new();
    for p in chain {
        let v = p.eval(x);
        if !v.is_zero() {
            signs.push(v.is_positive());
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`;
/// requires `p(a) ≠ 0 ≠ p(b)`.
fn count_roots_between(chain: &[UPoly], a: &Rat, b: &Rat) -> usize {
    sign_changes_at(chain, a).saturating_sub(sign_changes_at(chain, b))
}

/// A point close to `target`, within distance `radius`, where `p` does not
/// vanish (exists because `p` has finitely many roots).
fn nonroot_near(p: &UPoly, target: &Rat, radius: &Rat) -> Rat {
    let mut offset = radius.clone();
    loop {
        for candidate in [target.clone(), target + &offset, target - &offset] {
            if !p.eval(&candidate).is_zero() {
                return candidate;
            }
        }
        offset /= rat(2);
    }
}

/// All integer roots of a nonzero polynomial, certified by exact Sturm
/// bisection (no divisor enumeration, so arbitrarily large coefficients are
/// fine).
pub fn integer_roots(p: &UPoly) -> Vec<Int> {
    assert!(!p.is_zero(), "integer_roots of the zero polynomial");
    let mut roots = Vec::new();
    // Strip powers of x.
    let mut q = p.clone();
    let val = q.0.iter().take_while(|c| c.is_zero()).count();
    if val > 0 {
        roots.push(Int::zero());
        q = UPoly::new(q.0[val..].to_vec());
    }
    if q.is_constant() {
        return roots;
    }
    let q = q.squarefree_part();
    let chain = sturm_chain(&q);
    // Cauchy bound: all roots have |r| < 1 + max |a_i| / |lead|.
    let lead = q.lc().clone();
    let mut bound = Rat::one();
    for c in &q.0 {
        let ratio = (c / &lead).abs();
        if ratio > bound {
            bound = ratio;
        }
    }
    bound += Rat::one();
    let half = Rat::new(Int::one(), Int::from(2));
    let lo = nonroot_near(&q, &(-&bound - &half), &half);
    let hi = nonroot_near(&q, &(&bound + &half), &half);
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        if count_roots_between(&chain, &a, &b) == 0 {
            continue;
        }
        if &b - &a < Rat::one() {
            // At most one integer strictly between a and b.
            let r = b.floor().to_integer();
            let rr = Rat::from_integer(r.clone());
            if a < rr && rr < b && q.eval(&rr).is_zero() {
                roots.push(r);
            }
            // A non-integer root in this gap is simply ignored.
            continue;
        }
        let mid = (&a + &b) / rat(2);
        let quarter = (&b - &a) / rat(8);
        let m = nonroot_near(&q, &mid, &quarter);
        stack.push((a.clone(), m.clone()));
        stack.push((m, b));
    }
    roots.sort();
    roots
}

/// All rational roots of a nonzero polynomial, certified.
///
/// Uses the classical monicization `y = lc·x`: rational roots of `p` become
/// integer roots of a monic integer polynomial, which are then isolated
/// exactly.
pub fn rational_roots(p: &UPoly) -> Vec<Rat> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    if p.is_constant() {
        return Vec::new();
    }
    let ints = p.primitive_integer();
    let d = ints.len() - 1;
    let lead = ints[d].clone();
    let mut roots: Vec<Rat> = if lead.is_one() {
        integer_roots(p).into_iter().map(Rat::from_integer).collect()
    } else {
        // q(y) = lead^(d-1) p(y / lead) = y^d + Σ_{i<d} a_i lead^(d-1-i) y^i, monic.
        let mut dense = vec![Rat::zero(); d + 1];
        dense[d] = Rat::one();
        let mut power = Int::one();
        for i in (0..d).rev() {
            dense[i] = Rat::from_integer(ints[i].clone() * &power);
            power *= &lead;
        }
        let q = UPoly::new(dense);
        integer_roots(&q)
            .into_iter()
            .map(|r| Rat::new(r, lead.clone()))
            .collect()
    };
    roots.sort();
    roots.dedup();
    debug_assert!(roots.iter().all(|r| p.eval(r).is_zero()));
    roots
}

/// Divide out every rational linear factor: returns the rational roots (with
/// multiplicity each ≥ 1, listed once) and the root-free cofactor.
pub fn strip_rational_roots(p: &UPoly) -> (Vec<Rat>, UPoly) {
    let mut q = p.clone();
    let roots = rational_roots(p);
    for r in &roots {
        let lin = UPoly::new(vec![-r.clone(), Rat::one()]);
        loop {
            let (quot, rem) = q.divrem(&lin);
            if rem.is_zero() {
                q = quot;
            } else {
                break;
            }
        }
    }
    (roots, q)
}

// ---------------------------------------------------------------------------
// Bivariate layer: Q[x][y] with x = z1, y = z2 of a two-variable Poly
// ---------------------------------------------------------------------------

/// View a two-variable polynomial as coefficients in `Q[x]` by powers of `y`.
pub fn to_tower(f: &Poly) -> Vec<UPoly> {
    assert_eq!(f.nvars(), 2, "expected a bivariate polynomial");
    let dy = f.terms().map(|(e, _)| e.0[1]).max().unwrap_or(0);
    let mut out: Vec<Vec<Rat>> = vec![Vec::new(); dy as usize + 1];
    for (e, c) in f.terms() {
        assert!(e.0[0] >= 0 && e.0[1] >= 0, "Laurent exponents not supported here");
        let (i, j) = (e.0[0] as usize, e.0[1] as usize);
        if out[j].len() <= i {
            out[j].resize(i + 1, Rat::zero());
        }
        out[j][i] = c.clone();
    }
    let mut tower: Vec<UPoly> = out.into_iter().map(UPoly::new).collect();
    while tower.last().is_some_and(UPoly::is_zero) {
        tower.pop();
    }
    tower
}

/// Rebuild a two-variable polynomial from its tower form.
pub fn from_tower(tower: &[UPoly]) -> Poly {
    let mut p = Poly::zero(2);
    for (j, c) in tower.iter().enumerate() {
        for (i, a) in c.coeffs().iter().enumerate() {
            p.add_term(Expo(vec![i as i64, j as i64]), a.clone());
        }
    }
    p
}

/// Swap the two variables of a bivariate polynomial.
pub fn swap_vars(f: &Poly) -> Poly {
    assert_eq!(f.nvars(), 2);
    let mut p = Poly::zero(2);
    for (e, c) in f.terms() {
        p.add_term(Expo(vec![e.0[1], e.0[0]]), c.clone());
    }
    p
}

fn tower_degree(t: &[UPoly]) -> Option<usize> {
    t.len().checked_sub(1)
}

fn tower_content(t: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for c in t {
        if !c.is_zero() {
            g = if g.is_zero() { c.monic() } else { g.gcd(c) };
        }
    }
    g
}

fn tower_div_content(t: &[UPoly], content: &UPoly) -> Vec<UPoly> {
    t.iter()
        .map(|c| if c.is_zero() { UPoly::zero() } else { c.div_exact(content) })
        .collect()
}

fn tower_primitive(t: &[UPoly]) -> (UPoly, Vec<UPoly>) {
    let c = tower_content(t);
    if c.is_zero() {
        return (UPoly::zero(), Vec::new());
    }
    (c.clone(), tower_div_content(t, &c))
}

/// Pseudo-remainder of `f` by `g` in `(Q[x])[y]` (both nonzero, `deg_y f ≥ deg_y g`).
fn tower_prem(f: &[UPoly], g: &[UPoly]) -> Vec<UPoly> {
    let dg = tower_degree(g).unwrap();
    let lg = g.last().unwrap().clone();
    let mut r: Vec<UPoly> = f.to_vec();
    while tower_degree(&r).is_some_and(|d| d >= dg) {
        let d = tower_degree(&r).unwrap();
        let lr = r.last().unwrap().clone();
        // r := lg·r − lr·y^{d−dg}·g
        let mut new_r: Vec<UPoly> = r.iter().map(|c| c.mul(&lg)).collect();
        for (k, gc) in g.iter().enumerate() {
            let idx = d - dg + k;
            new_r[idx] = new_r[idx].sub(&lr.mul(gc));
        }
        while new_r.last().is_some_and(UPoly::is_zero) {
            new_r.pop();
        }
        r = new_r;
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Gcd of two bivariate polynomials (primitive Euclidean algorithm).
///
/// The result is normalized: primitive in `x` with monic leading `y`-coefficient.
pub fn biv_gcd(f: &Poly, g: &Poly) -> Poly {
    let tf = to_tower(f);
    let tg = to_tower(g);
    if tf.is_empty() {
        return from_tower(&tg);
    }
    if tg.is_empty() {
        return from_tower(&tf);
    }
    let (cf, pf) = tower_primitive(&tf);
    let (cg, pg) = tower_primitive(&tg);
    let content_gcd = cf.gcd(&cg);
    let (mut a, mut b) = if tower_degree(&pf) >= tower_degree(&pg) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    while !b.is_empty() {
        let r = tower_prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { tower_primitive(&r).1 };
    }
    let normalized: Vec<UPoly> = {
        let lead_inv = a.last().unwrap().lc().clone().recip();
        a.iter().map(|c| c.scale(&lead_inv).mul(&content_gcd)).collect()
    };
    from_tower(&normalized)
}

/// True if a bivariate polynomial has no repeated (non-unit) factor.
pub fn biv_squarefree(f: &Poly) -> bool {
    if f.is_zero() {
        return false;
    }
    let g1 = biv_gcd(f, &f.partial(0));
    let g = biv_gcd(&g1, &f.partial(1));
    g.degree() == Some(0)
}

/// Evaluate a bivariate polynomial at `x = t`, producing a `UPoly` in `y`.
pub fn eval_x(f: &Poly, t: &Rat) -> UPoly {
    let tower = to_tower(f);
    UPoly::new(tower.iter().map(|c| c.eval(t)).collect())
}

/// Leading coefficient of `f` in the `y` variable, as a `UPoly` in `x`.
pub fn leading_coeff_y(f: &Poly) -> UPoly {
    to_tower(f).last().cloned().unwrap_or_else(UPoly::zero)
}

/// Degree of `f` in the `y` variable, or `None` for zero.
pub fn degree_y(f: &Poly) -> Option<usize> {
    tower_degree(&to_tower(f))
}

/// Lagrange interpolation through distinct rational nodes.
fn lagrange(points: &[(Rat, Rat)]) -> UPoly {
    let mut acc = UPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut numer = UPoly::constant(Rat::one());
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            numer = numer.mul(&UPoly::new(vec![-xj.clone(), Rat::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&numer.scale(&(yi / denom)));
    }
    acc
}

/// Resultant of two bivariate polynomials with respect to `y`, as a `UPoly`
/// in `x`. Computed by evaluation at points where neither `y`-leading
/// coefficient vanishes, followed by exact interpolation.
pub fn resultant_y(f: &Poly, g: &Poly) -> UPoly {
    let tf = to_tower(f);
    let tg = to_tower(g);
    if tf.is_empty() || tg.is_empty() {
        return UPoly::zero();
    }
    let dyf = tower_degree(&tf).unwrap();
    let dyg = tower_degree(&tg).unwrap();
    if dyf == 0 {
        return tf[0].pow(dyg);
    }
    if dyg == 0 {
        return tg[0].pow(dyf);
    }
    let dxf = tf.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let dxg = tg.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let bound = dxf * dyg + dxg * dyf + 1;
    let lf = tf.last().unwrap();
    let lg = tg.last().unwrap();
    let mut points = Vec::with_capacity(bound);
    let mut t_iter = 0i64;
    while points.len() < bound {
        let t = if t_iter % 2 == 0 { rat(t_iter / 2) } else { rat(-(t_iter / 2) - 1) };
        t_iter += 1;
        if lf.eval(&t).is_zero() || lg.eval(&t).is_zero() {
            continue;
        }
        let pf = UPoly::new(tf.iter().map(|c| c.eval(&t)).collect());
        let pg = UPoly::new(tg.iter().map(|c| c.eval(&t)).collect());
        points.push((t, resultant(&pf, &pg)));
    }
    lagrange(&points)
}

// ---------------------------------------------------------------------------
// Squarefreeness of low-dimensional homogeneous polynomials
// ---------------------------------------------------------------------------

/// Decide whether a homogeneous polynomial in at most 3 variables is reduced
/// (squarefree). Errors if `h` is zero, not homogeneous, or has too many
/// variables.
pub fn is_reduced_homogeneous(h: &Poly) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: "reducedness check".into(),
        });
    }
    let n = h.nvars();
    let ones = vec![1i64; n];
    if h.weighted_degree_if_homogeneous(&ones).is_none() {
        return Err(Error::Hypothesis {
            name: "homogeneous".into(),
            detail: format!("'{h}' is not homogeneous"),
        });
    }
    let (gamma, core) = h.strip_monomial_content();
    if gamma.0.iter().any(|&a| a >= 2) {
        return Ok(false);
    }
    match n {
        0 | 1 => Ok(true),
        2 => {
            // No variable divides `core`; dehomogenize z2 = 1.
            let u = UPoly::from_poly1(&dehomogenize(&core));
            Ok(u.is_squarefree())
        }
        3 => Ok(biv_squarefree(&dehomogenize(&core))),
        _ => Err(Error::UnsupportedDimension {
            what: "reducedness check".into(),
            nvars: n,
            max: 3,
        }),
    }
}

/// Set the last variable to 1 and drop it.
fn dehomogenize(f: &Poly) -> Poly {
    let n = f.nvars();
    let mut p = Poly::zero(n - 1);
    for (e, c) in f.terms() {
        p.add_term(Expo(e.0[..n - 1].to_vec()), c.clone());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn up(coeffs: &[i64]) -> UPoly {
        UPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let p = up(&[2, -3, 1]);
        let q = up(&[-1, 1]);
        let (quot, rem) = p.divrem(&q);
        assert_eq!(quot, up(&[-2, 1]));
        assert!(rem.is_zero());
        let g = p.gcd(&up(&[-2, 1]));
        assert_eq!(g, up(&[-2, 1]));
        assert!(p.is_squarefree());
        // (x-1)^2
        let sq = up(&[1, -2, 1]);
        assert!(!sq.is_squarefree());
        assert_eq!(sq.squarefree_part(), up(&[-1, 1]));
    }

    #[test]
    fn resultants_match_discriminant_behaviour() {
        // res(x^2+1, x^2-1) = 4 (roots ±i vs ±1, Π differences = 4).
        assert_eq!(resultant(&up(&[1, 0, 1]), &up(&[-1, 0, 1])), rat(4));
        // Shared root → 0.
        assert_eq!(resultant(&up(&[-1, 1]), &up(&[1, -2, 1])), rat(0));
        // res(p, q) with q constant is q^{deg p}.
        assert_eq!(resultant(&up(&[0, 0, 1]), &up(&[5])), rat(25));
        // Rational scaling: res(p/2, q) = (1/2)^{deg q} res(p, q).
        let p = up(&[1, 0, 1]).scale(&ratio(1, 2));
        assert_eq!(resultant(&p, &up(&[-1, 0, 1])), rat(1));
    }

    #[test]
    fn certified_integer_and_rational_roots() {
        // (x-3)(x+5)x = x^3 + 2x^2 - 15x
        let p = up(&[0, -15, 2, 1]);
        assert_eq!(integer_roots(&p), vec![Int::from(-5), Int::from(0), Int::from(3)]);
        // 6x^2 - 5x + 1 = (2x-1)(3x-1)
        let q = up(&[1, -5, 6]);
        assert_eq!(rational_roots(&q), vec![ratio(1, 3), ratio(1, 2)]);
        // x^2 - 2 has no rational roots.
        assert!(rational_roots(&up(&[-2, 0, 1])).is_empty());
        // Large coefficients still work (no factorization involved):
        // (x - 1000003)(x + 7) with a big spread.
        let big = up(&[-7000021, -999996, 1]);
        assert_eq!(
            integer_roots(&big),
            vec![Int::from(-7), Int::from(1000003)]
        );
        // Repeated roots reported once.
        let r = up(&[1, -2, 1]);
        assert_eq!(rational_roots(&r), vec![rat(1)]);
        let (roots, cofactor) = strip_rational_roots(&up(&[-2, 0, 1]).mul(&up(&[-1, 1])));
        assert_eq!(roots, vec![rat(1)]);
        assert_eq!(cofactor.degree(), Some(2));
    }

    #[test]
    fn bivariate_gcd_and_squarefree() {
        // f = (y - x)^2 (y + 1), g = (y - x)(y - 2)
        let ymx = Poly::parse(2, "z2-z1").unwrap();
        let f = ymx.mul_poly(&ymx).mul_poly(&Poly::parse(2, "z2+1").unwrap());
        let g = ymx.mul_poly(&Poly::parse(2, "z2-2").unwrap());
        let d = biv_gcd(&f, &g);
        assert_eq!(d.to_string(), "-z1+z2");
        assert!(!biv_squarefree(&f));
        assert!(biv_squarefree(&g));
        // Coprime pair.
        let a = Poly::parse(2, "z1^2+z2^2").unwrap();
        let b = Poly::parse(2, "z1*z2-1").unwrap();
        assert_eq!(biv_gcd(&a, &b).degree(), Some(0));
    }

    #[test]
    fn bivariate_resultant_eliminates() {
        // Res_y(y^2 - x, y - x) = x^2 - x (vanishes where the curves meet, x=0,1).
        let f = Poly::parse(2, "z2^2-z1").unwrap();
        let g = Poly::parse(2, "z2-z1").unwrap();
        let r = resultant_y(&f, &g);
        let mut roots = rational_roots(&r);
        roots.sort();
        assert_eq!(roots, vec![rat(0), rat(1)]);
        // Common factor → identically zero resultant.
        let h = f.mul_poly(&g);
        assert!(resultant_y(&h, &g).is_zero());
    }

    #[test]
    fn reduced_homogeneous_checks() {
        // Smooth Fermat cubic is reduced.
        let fermat = Poly::parse(3, "z1^3+z2^3+z3^3").unwrap();
        assert!(is_reduced_homogeneous(&fermat).unwrap());
        // A square factor is caught.
        let lin = Poly::parse(3, "z1+z2+z3").unwrap();
        let conic = Poly::parse(3, "z1*z2-z3^2").unwrap();
        let sq = lin.mul_poly(&lin).mul_poly(&conic);
        assert!(!is_reduced_homogeneous(&sq).unwrap());
        // Reduced but singular (three concurrent lines) is still reduced.
        let lines = Poly::parse(3, "z1*z2*z3").unwrap();
        assert!(is_reduced_homogeneous(&lines).unwrap());
        // Binary forms.
        assert!(is_reduced_homogeneous(&Poly::parse(2, "z1^3-z2^3").unwrap()).unwrap());
        assert!(!is_reduced_homogeneous(&Poly::parse(2, "z1^2*z2").unwrap()).unwrap());
        // Non-homogeneous input is rejected.
        assert!(is_reduced_homogeneous(&Poly::parse(2, "z1^2+z2").unwrap()).is_err());
    }
}
