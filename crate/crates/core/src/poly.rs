//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] is a finite sum `f = Σ c_α z^α` with `c_α ∈ Q` and
//! `α ∈ Z^n` (exponents are ordinarily nonnegative; Laurent exponents only
//! ever arise from monomial substitutions that explicitly allow them).
//! Terms are stored in a `BTreeMap` keyed by graded-lexicographic order, so
//! iteration order — and therefore serialization — is canonical.
//!
//! The text format accepted by [`Poly::parse`] and produced by
//! [`Poly::to_string`] is the usual sparse notation over variables
//! `z1, …, zn`:
//!
//! ```text
//! 7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3
//! ```
//!
//! with integer or `p/q` rational coefficients, optional `*` between the
//! coefficient and the first variable, and all whitespace ignored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Exponent vector of a monomial, ordered graded-lexicographically.
///
/// `Expo(vec![2, 0, 3])` stands for `z1^2 z3^3`. The ordering compares total
/// degree first and breaks ties lexicographically with `z1` weighted
/// heaviest, so the monomial sequence starts `1 < z1 < z2 < … < z1^2 < z1 z2 < …`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Expo(pub Vec<i64>);

impl Expo {
    /// Zero exponent vector (the constant monomial) in `n` variables.
    pub fn zero(n: usize) -> Self {
        Expo(vec![0; n])
    }

    /// `k`-th unit vector scaled by `e` in `n` variables (the monomial `z_{k+1}^e`).
    pub fn axis(n: usize, k: usize, e: i64) -> Self {
        let mut v = vec![0; n];
        v[k] = e;
        Expo(v)
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True if the vector has no entries.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `Σ α_i`.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Weighted degree `ℓ_w(α) = Σ w_i α_i`.
    ///
    /// # Panics
    /// Panics on length mismatch or overflow (exponents and weights in this
    /// crate are far below the `i64` range).
    pub fn weighted(&self, w: &[i64]) -> i64 {
        assert_eq!(self.0.len(), w.len(), "weight vector length mismatch");
        let s: i128 = self
            .0
            .iter()
            .zip(w)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum();
        i64::try_from(s).expect("weighted degree overflow")
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Expo) -> Expo {
        Expo(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference (may produce negative entries).
    pub fn sub(&self, other: &Expo) -> Expo {
        Expo(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Indices of the variables that actually occur (`α_i ≠ 0`).
    pub fn vars(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// True if every entry is nonnegative.
    pub fn is_ordinary(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over `Q` in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Expo, Rat>,
}

impl Serialize for Poly {
    /// Polynomials serialize as their canonical display string, which
    /// [`Poly::parse`] accepts back.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Poly {
    /// The zero polynomial in `n` variables.
    pub fn zero(n: usize) -> Self {
        Poly {
            nvars: n,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c` in `n` variables.
    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Expo::zero(n), c);
        p
    }

    /// The single variable `z_{k+1}` (0-based `k`) in `n` variables.
    pub fn var(n: usize, k: usize) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Expo::axis(n, k, 1), Rat::one());
        p
    }

    /// The monomial `c · z^α` in `n` variables.
    pub fn monomial(n: usize, expo: Expo, c: Rat) -> Self {
        assert_eq!(expo.len(), n, "exponent arity mismatch");
        let mut p = Poly::zero(n);
        p.add_term(expo, c);
        p
    }

    /// Build a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zero coefficients.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Expo, Rat)>,
    {
        let mut p = Poly::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Dimension {
                    context: format!("exponent vector {:?} has arity {}, expected {}", e.0, e.len(), n),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Add `c · z^α` in place, keeping the zero-free invariant.
    pub fn add_term(&mut self, expo: Expo, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate over `(exponent, coefficient)` pairs in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter()
    }

    /// The support of `f` (exponents of nonzero terms) in graded-lex order.
    pub fn support(&self) -> Vec<Expo> {
        self.terms.keys().cloned().collect()
    }

    /// Coefficient of `z^α` (zero if absent).
    pub fn coeff(&self, expo: &Expo) -> Rat {
        self.terms.get(expo).cloned().unwrap_or_else(Rat::zero)
    }

    /// Maximum total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Expo::degree).max()
    }

    /// Minimum total degree (the multiplicity `ord_0 f`), or `None` for zero.
    pub fn order(&self) -> Option<i64> {
        self.terms.keys().map(Expo::degree).min()
    }

    /// The initial polynomial: the sum of all terms of minimal total degree.
    pub fn initial_polynomial(&self) -> Poly {
        match self.order() {
            None => Poly::zero(self.nvars),
            Some(d) => {
                let mut p = Poly::zero(self.nvars);
                for (e, c) in &self.terms {
                    if e.degree() == d {
                        p.add_term(e.clone(), c.clone());
                    }
                }
                p
            }
        }
    }

    /// True if every exponent is nonnegative (no Laurent terms).
    pub fn is_ordinary(&self) -> bool {
        self.terms.keys().all(Expo::is_ordinary)
    }

    /// True if `f(0) = 0`, i.e. there is no constant term.
    pub fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&Expo::zero(self.nvars))
    }

    // ------------------------------------------------------------------
    // Arithmetic
    // ------------------------------------------------------------------

    /// Sum of two polynomials.
    ///
    /// # Panics
    /// Panics if the variable counts differ.
    pub fn add_poly(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    /// Difference of two polynomials.
    pub fn sub_poly(&self, other: &Poly) -> Poly {
        self.add_poly(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.terms.insert(e.clone(), -c.clone());
        }
        p
    }

    /// Product of two polynomials.
    ///
    /// # Panics
    /// Panics if the variable counts differ.
    pub fn mul_poly(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut p = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                p.add_term(e1.add(e2), c1 * c2);
            }
        }
        p
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut p = Poly::zero(self.nvars);
        for (e, k) in &self.terms {
            p.terms.insert(e.clone(), k * c);
        }
        p
    }

    /// Multiply by the monomial `c · z^α` (Laurent-safe).
    pub fn mul_monomial(&self, expo: &Expo, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut p = Poly::zero(self.nvars);
        for (e, k) in &self.terms {
            p.terms.insert(e.add(expo), k * c);
        }
        p
    }

    /// `f^k` by repeated squaring on term maps.
    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::constant(self.nvars, Rat::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Partial derivative `∂f/∂z_{i+1}` (0-based `i`).
    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.nvars, "variable index out of range");
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let a = e.0[i];
            if a != 0 {
                let mut e2 = e.clone();
                e2.0[i] -= 1;
                p.add_term(e2, c * Rat::from_integer(Int::from(a)));
            }
        }
        p
    }

    /// Evaluate at a rational point.
    ///
    /// # Panics
    /// Panics on arity mismatch or on a negative exponent at a zero coordinate.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &a) in e.0.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut base = point[i].clone();
                let mut k = a;
                if k < 0 {
                    assert!(!base.is_zero(), "negative exponent at zero coordinate");
                    base = base.recip();
                    k = -k;
                }
                for _ in 0..k {
                    term *= &base;
                }
            }
            acc += term;
        }
        acc
    }

    // ------------------------------------------------------------------
    // Support geometry
    // ------------------------------------------------------------------

    /// Restriction `f^I`: keep only terms whose support lies inside the
    /// 0-based variable set `vars` (i.e. set `z_i = 0` for `i ∉ vars`).
    /// The result lives in the same ambient variables.
    pub fn restrict(&self, vars: &[usize]) -> Poly {
        let mut keep = vec![false; self.nvars];
        for &i in vars {
            assert!(i < self.nvars, "variable index out of range");
            keep[i] = true;
        }
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.0.iter().enumerate().all(|(i, &a)| a == 0 || keep[i]) {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    /// Restriction to `vars` followed by reindexing into `vars.len()`
    /// variables (in the order given).
    pub fn project(&self, vars: &[usize]) -> Poly {
        let restricted = self.restrict(vars);
        let mut p = Poly::zero(vars.len());
        for (e, c) in &restricted.terms {
            let proj = Expo(vars.iter().map(|&i| e.0[i]).collect());
            p.terms.insert(proj, c.clone());
        }
        p
    }

    /// `d(w; f) = min { ℓ_w(α) : α ∈ supp f }` together with the minimizing
    /// support points (the face `Δ(w; f)` of the Newton polyhedron).
    ///
    /// Errors on the zero polynomial.
    pub fn weighted_min(&self, w: &[i64]) -> Result<(i64, Vec<Expo>)> {
        if w.len() != self.nvars {
            return Err(Error::Dimension {
                context: format!("weight vector has {} entries, expected {}", w.len(), self.nvars),
            });
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial {
                context: "weighted_min".into(),
            });
        }
        let d = self.terms.keys().map(|e| e.weighted(w)).min().unwrap();
        let face = self
            .terms
            .keys()
            .filter(|e| e.weighted(w) == d)
            .cloned()
            .collect();
        Ok((d, face))
    }

    /// The face function `f_w = Σ_{ℓ_w(α) = d(w;f)} c_α z^α`.
    pub fn face_function(&self, w: &[i64]) -> Result<Poly> {
        let (_, face) = self.weighted_min(w)?;
        let mut p = Poly::zero(self.nvars);
        for e in face {
            let c = self.terms[&e].clone();
            p.terms.insert(e, c);
        }
        Ok(p)
    }

    /// The sum of the terms supported on the given exponents.
    pub fn select_terms(&self, expos: &[Expo]) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for e in expos {
            if let Some(c) = self.terms.get(e) {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    /// If `f` is weighted homogeneous for `w` (all terms share one `ℓ_w`),
    /// return that common degree.
    pub fn weighted_degree_if_homogeneous(&self, w: &[i64]) -> Option<i64> {
        let mut it = self.terms.keys();
        let first = it.next()?.weighted(w);
        for e in it {
            if e.weighted(w) != first {
                return None;
            }
        }
        Some(first)
    }

    /// True if `f` is convenient: the support touches every coordinate axis,
    /// i.e. for each variable there is a pure-power term `c · z_i^{a}`, `a ≥ 1`.
    pub fn is_convenient(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.terms
                .keys()
                .any(|e| e.0[i] >= 1 && e.vars() == [i])
        })
    }

    /// Componentwise minimum of the support (the largest monomial factor
    /// `z^γ` dividing `f`), or `None` for zero.
    pub fn monomial_content(&self) -> Option<Expo> {
        if self.is_zero() {
            return None;
        }
        let mut gamma = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (g, &a) in gamma.iter_mut().zip(&e.0) {
                *g = (*g).min(a);
            }
        }
        Some(Expo(gamma))
    }

    /// Divide out the largest monomial factor, returning `(γ, f / z^γ)`.
    pub fn strip_monomial_content(&self) -> (Expo, Poly) {
        match self.monomial_content() {
            None => (Expo::zero(self.nvars), self.clone()),
            Some(g) => {
                let mut p = Poly::zero(self.nvars);
                for (e, c) in &self.terms {
                    p.terms.insert(e.sub(&g), c.clone());
                }
                (g, p)
            }
        }
    }

    // ------------------------------------------------------------------
    // Substitution
    // ------------------------------------------------------------------

    /// Monomial substitution `z^α ↦ y^{α·A}` for an integer matrix `A` with
    /// one row per input variable `z_j` (row `j` = exponent vector of the
    /// image of `z_j` in the output variables).
    ///
    /// With `allow_laurent = false`, any negative output exponent is an
    /// error; with `true`, Laurent terms are kept.
    pub fn substitute_monomial_map(&self, a: &[Vec<i64>], allow_laurent: bool) -> Result<Poly> {
        if a.len() != self.nvars {
            return Err(Error::Dimension {
                context: format!("matrix has {} rows, expected {}", a.len(), self.nvars),
            });
        }
        let m = if a.is_empty() { 0 } else { a[0].len() };
        if a.iter().any(|row| row.len() != m) {
            return Err(Error::Dimension {
                context: "ragged substitution matrix".into(),
            });
        }
        let mut p = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut out = vec![0i128; m];
            for (j, &aj) in e.0.iter().enumerate() {
                for (i, o) in out.iter_mut().enumerate() {
                    *o += aj as i128 * a[j][i] as i128;
                }
            }
            let out: Vec<i64> = out
                .into_iter()
                .map(|v| i64::try_from(v).expect("exponent overflow in substitution"))
                .collect();
            if !allow_laurent && out.iter().any(|&v| v < 0) {
                return Err(Error::NegativeExponent {
                    context: format!(
                        "monomial substitution maps exponent {:?} to {:?}",
                        e.0, out
                    ),
                });
            }
            p.add_term(Expo(out), c.clone());
        }
        Ok(p)
    }

    /// General substitution `f(φ_1, …, φ_n)` where each `φ_j` is a polynomial
    /// in a common set of output variables.
    ///
    /// # Panics
    /// Panics if `images.len() != nvars`, the images disagree on variable
    /// count, or any exponent of `f` is negative.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars, "one image per variable required");
        let m = images.first().map_or(0, Poly::nvars);
        assert!(
            images.iter().all(|p| p.nvars() == m),
            "images must share a variable count"
        );
        // Memoize powers of each image.
        let mut powers: Vec<Vec<Poly>> =
            images.iter().map(|p| vec![Poly::constant(m, Rat::one()), p.clone()]).collect();
        let mut acc = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(m, c.clone());
            for (j, &a) in e.0.iter().enumerate() {
                assert!(a >= 0, "general substitution requires ordinary exponents");
                let a = a as usize;
                while powers[j].len() <= a {
                    let next = powers[j].last().unwrap().mul_poly(&images[j]);
                    powers[j].push(next);
                }
                term = term.mul_poly(&powers[j][a]);
            }
            acc = acc.add_poly(&term);
        }
        acc
    }

    /// Translate coordinates: `f(z + p)` for a rational point `p`.
    pub fn translate(&self, point: &[Rat]) -> Poly {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let images: Vec<Poly> = (0..self.nvars)
            .map(|i| {
                let mut p = Poly::var(self.nvars, i);
                p.add_term(Expo::zero(self.nvars), point[i].clone());
                p
            })
            .collect();
        self.substitute(&images)
    }

    /// Clear denominators: returns `(q, terms)` with `q ∈ Z`, `q > 0`, such
    /// that `q·f` has the listed integer coefficients.
    pub fn integer_scaled(&self) -> (Int, Vec<(Expo, Int)>) {
        let mut q = Int::one();
        for c in self.terms.values() {
            q = q.lcm(c.denom());
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.numer() * (&q / c.denom())))
            .collect();
        (q, terms)
    }

    // ------------------------------------------------------------------
    // Parsing
    // ------------------------------------------------------------------

    /// Parse the sparse text format (see module docs).
    ///
    /// Grammar, with all whitespace ignored:
    ///
    /// ```text
    /// poly   := ['+'|'-'] term { ('+'|'-') term }
    /// term   := coef [ '*' factors ] | [coef '*'] factors
    /// factors:= factor { ['*'] factor }
    /// factor := 'z' index [ '^' exponent ]
    /// coef   := digits [ '/' digits ]
    /// ```
    ///
    /// Variable indices are `1..=nvars`; exponents must be nonnegative.
    pub fn parse(nvars: usize, input: &str) -> Result<Poly> {
        let src: Vec<(usize, char)> = input
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut pos = 0usize; // index into src
        let err = |pos: usize, msg: &str, src: &[(usize, char)]| -> Error {
            let byte = src.get(pos).map_or_else(|| input.len(), |&(b, _)| b);
            Error::Parse {
                pos: byte,
                msg: msg.to_string(),
            }
        };

        let read_digits = |pos: &mut usize, src: &[(usize, char)]| -> Option<String> {
            let start = *pos;
            while *pos < src.len() && src[*pos].1.is_ascii_digit() {
                *pos += 1;
            }
            (*pos > start).then(|| src[start..*pos].iter().map(|&(_, c)| c).collect())
        };

        if src.is_empty() {
            return Err(err(0, "empty polynomial", &src));
        }

        let mut poly = Poly::zero(nvars);
        loop {
            // Sign.
            let mut negative = false;
            while pos < src.len() && (src[pos].1 == '+' || src[pos].1 == '-') {
                if src[pos].1 == '-' {
                    negative = !negative;
                }
                pos += 1;
            }
            if pos >= src.len() {
                return Err(err(pos, "expected a term", &src));
            }

            // Optional coefficient.
            let mut coef: Option<Rat> = None;
            if src[pos].1.is_ascii_digit() {
                let numer = read_digits(&mut pos, &src).unwrap();
                let numer: Int = numer.parse().expect("digit string");
                let mut denom = Int::one();
                if pos < src.len() && src[pos].1 == '/' {
                    pos += 1;
                    let d = read_digits(&mut pos, &src)
                        .ok_or_else(|| err(pos, "expected denominator digits after '/'", &src))?;
                    denom = d.parse().expect("digit string");
                    if denom.is_zero() {
                        return Err(err(pos, "zero denominator", &src));
                    }
                }
                coef = Some(Rat::new(numer, denom));
                if pos < src.len() && src[pos].1 == '*' {
                    pos += 1;
                    if pos >= src.len() || src[pos].1 != 'z' {
                        return Err(err(pos, "expected a variable after '*'", &src));
                    }
                }
            }

            // Factors.
            let mut expo = Expo::zero(nvars);
            let mut saw_factor = false;
            loop {
                if pos < src.len() && src[pos].1 == '*' && saw_factor {
                    pos += 1;
                    if pos >= src.len() || src[pos].1 != 'z' {
                        return Err(err(pos, "expected a variable after '*'", &src));
                    }
                }
                if pos >= src.len() || src[pos].1 != 'z' {
                    break;
                }
                pos += 1;
                let idx = read_digits(&mut pos, &src)
                    .ok_or_else(|| err(pos, "expected a variable index after 'z'", &src))?;
                let idx: usize = idx.parse().map_err(|_| err(pos, "variable index too large", &src))?;
                if idx == 0 || idx > nvars {
                    return Err(Error::VarIndex { index: idx, nvars });
                }
                let mut e: i64 = 1;
                if pos < src.len() && src[pos].1 == '^' {
                    pos += 1;
                    if pos < src.len() && src[pos].1 == '-' {
                        return Err(Error::NegativeExponent {
                            context: format!("exponent of z{idx} in the input"),
                        });
                    }
                    let d = read_digits(&mut pos, &src)
                        .ok_or_else(|| err(pos, "expected exponent digits after '^'", &src))?;
                    e = d.parse().map_err(|_| err(pos, "exponent too large", &src))?;
                }
                expo.0[idx - 1] += e;
                saw_factor = true;
            }

            if coef.is_none() && !saw_factor {
                return Err(err(pos, "expected a coefficient or a variable", &src));
            }
            let mut c = coef.unwrap_or_else(Rat::one);
            if negative {
                c = -c;
            }
            poly.add_term(expo, c);

            if pos >= src.len() {
                break;
            }
            if src[pos].1 != '+' && src[pos].1 != '-' {
                return Err(err(pos, "expected '+' or '-' between terms", &src));
            }
        }
        Ok(poly)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(out, "-")?;
                }
            } else if neg {
                write!(out, "-")?;
            } else {
                write!(out, "+")?;
            }
            let has_vars = e.0.iter().any(|&a| a != 0);
            let show_coef = !mag.is_one() || !has_vars;
            if show_coef {
                if mag.denom().is_one() {
                    write!(out, "{}", mag.numer())?;
                } else {
                    write!(out, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            let mut first_factor = !show_coef;
            for (i, &a) in e.0.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !first_factor {
                    write!(out, "*")?;
                }
                first_factor = false;
                write!(out, "z{}", i + 1)?;
                if a != 1 {
                    write!(out, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}
