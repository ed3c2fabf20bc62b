//! Milnor numbers and μ*-sequences by exact truncated linear algebra.
//!
//! For a germ `f` with Jacobian ideal `J = (∂₁f, …, ∂_nf)`, the engine
//! computes `t(m) = dim_Q Q[z]/(J + 𝔪^{m+1})` exactly: the span of all
//! truncated monomial multiples `π_m(z^β ∂_i f)` is closed under multiplying
//! echelon rows by variables, so a queue-based closure finds its rank without
//! ever enumerating `β`.
//!
//! `t(m)` is nondecreasing in `m` and converges to the colength of `J`, i.e.
//! to the Milnor number when the singularity is isolated. Two certificates:
//!
//! * **safe** — `t(m) ≤ m`. Then some graded slice of `Q[z]/(J + 𝔪^{m+1})`
//!   vanishes, Nakayama forces `𝔪^k ⊆ J` for some `k ≤ m`, and `t(m)` *is*
//!   the Milnor number with the singularity provably isolated.
//! * **stabilized** — `t(m) = t(m−1)` (a plateau). Heuristic but cheap; pass
//!   `safe` to keep going until the rigorous bound is reached.
//!
//! Generic polar invariants (`μ*`) are computed by sampling graph-form plane
//! sections with growing integer coefficients: the section Milnor number is
//! upper-semicontinuous, so the generic value is the minimum over samples,
//! certified by agreement among several independent draws.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Expo, Poly};
use crate::{rat, Int};

/// All exponent vectors in `n` variables of total degree ≤ `m`, sorted.
pub fn monomials_up_to(n: usize, m: i64) -> Vec<Expo> {
    fn rec(n: usize, left: i64, prefix: &mut Vec<i64>, out: &mut Vec<Expo>) {
        if prefix.len() == n {
            out.push(Expo(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m.max(0), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Sparse integer vector over the monomial basis, ascending index, no zeros.
type SpVec = Vec<(u32, Int)>;

fn strip_content(v: &mut SpVec) {
    let mut g = Int::zero();
    for (_, c) in v.iter() {
        g = g.gcd(c);
    }
    if g > Int::from(1) {
        for (_, c) in v.iter_mut() {
            *c /= &g;
        }
    }
}

/// `v := v·(b/g) − row·(a/g)` where `a`, `b` are the shared leading
/// coefficients; eliminates the leading index of `v`.
fn eliminate(v: &SpVec, row: &SpVec) -> SpVec {
    let a = &v[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let ca = b / &g; // multiplies v
    let cb = a / &g; // multiplies row
    let mut out: SpVec = Vec::with_capacity(v.len() + row.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < v.len() || j < row.len() {
        let pick_v = j >= row.len() || (i < v.len() && v[i].0 < row[j].0);
        let pick_r = i >= v.len() || (j < row.len() && row[j].0 < v[i].0);
        if pick_v {
            out.push((v[i].0, &v[i].1 * &ca));
            i += 1;
        } else if pick_r {
            out.push((row[j].0, -(&row[j].1 * &cb)));
            j += 1;
        } else {
            let c = &v[i].1 * &ca - &row[j].1 * &cb;
            if !c.is_zero() {
                out.push((v[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    debug_assert!(out.first().map(|t| t.0 != v[0].0).unwrap_or(true));
    out
}

/// `t(m) = dim_Q Q[z]/(J(f) + 𝔪^{m+1})`, the truncated Jacobian colength.
pub fn truncated_milnor(f: &Poly, m: i64) -> Result<usize> {
    let n = f.nvars();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: "truncated milnor number".into(),
        });
    }
    if m < 0 {
        return Err(Error::Dimension {
            context: format!("truncation order must be ≥ 0, got {m}"),
        });
    }
    let basis = monomials_up_to(n, m);
    if basis.len() > 200_000 {
        return Err(Error::BudgetExceeded {
            what: format!("monomial basis of size {}", basis.len()),
            budget: 200_000,
        });
    }
    let index: HashMap<Expo, u32> = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u32))
        .collect();
    let to_vec = |p: &Poly| -> SpVec {
        let (_, scaled) = p.integer_scaled();
        let mut v: SpVec = scaled
            .into_iter()
            .filter_map(|(e, c)| index.get(&e).map(|&i| (i, c)))
            .collect();
        v.sort_by_key(|t| t.0);
        v
    };
    let mut queue: VecDeque<SpVec> = VecDeque::new();
    for i in 0..n {
        let d = f.partial(i);
        if !d.is_zero() {
            queue.push_back(to_vec(&d));
        }
    }
    let mut echelon: HashMap<u32, SpVec> = HashMap::new();
    while let Some(mut v) = queue.pop_front() {
        // Loop ends when `v` reduces to zero or becomes a new echelon row.
        while let Some(&(lead, _)) = v.first() {
            if let Some(row) = echelon.get(&lead) {
                v = eliminate(&v, row);
                strip_content(&mut v);
            } else {
                strip_content(&mut v);
                // Enqueue the variable shifts of the new row.
                for l in 0..n {
                    let shifted: SpVec = v
                        .iter()
                        .filter_map(|(idx, c)| {
                            let e = basis[*idx as usize].add(&Expo::axis(n, l, 1));
                            index.get(&e).map(|&i2| (i2, c.clone()))
                        })
                        .collect();
                    if !shifted.is_empty() {
                        queue.push_back(shifted);
                    }
                }
                echelon.insert(lead, v);
                break;
            }
        }
    }
    Ok(basis.len() - echelon.len())
}

/// How a Milnor number computation was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    /// `t(m) ≤ m`: rigorous — the singularity is isolated and `μ = t(m)`.
    Safe,
    /// `t(m)` reached a plateau; correct for isolated singularities once the
    /// plateau is genuine, but not a proof of isolation.
    Stabilized,
}

/// Result of a Milnor number computation.
#[derive(Clone, Debug, Serialize)]
pub struct MilnorResult {
    /// The Milnor number.
    pub mu: usize,
    /// Certification level of the answer.
    pub certificate: Certificate,
    /// The truncation order at which the answer was accepted.
    pub truncation: i64,
}

/// Options for [`milnor_number`].
#[derive(Clone, Debug)]
pub struct MilnorOptions {
    /// Largest truncation order to try before giving up.
    pub max_truncation: i64,
    /// Require the rigorous `t(m) ≤ m` certificate.
    pub safe: bool,
}

impl Default for MilnorOptions {
    fn default() -> Self {
        MilnorOptions {
            max_truncation: 24,
            safe: false,
        }
    }
}

/// Milnor number of an isolated hypersurface singularity at the origin by
/// stabilization of the truncated Jacobian colength.
pub fn milnor_number(f: &Poly, opts: &MilnorOptions) -> Result<MilnorResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial {
            context: "milnor number".into(),
        });
    }
    if !f.vanishes_at_origin() {
        return Err(Error::Hypothesis {
            name: "vanishes-at-origin".into(),
            detail: "the germ must satisfy f(0) = 0".into(),
        });
    }
    let mut history: Vec<usize> = Vec::new();
    let mut prev: Option<usize> = None;
    for m in 1..=opts.max_truncation {
        let t = truncated_milnor(f, m)?;
        history.push(t);
        if t as i64 <= m {
            return Ok(MilnorResult {
                mu: t,
                certificate: Certificate::Safe,
                truncation: m,
            });
        }
        if !opts.safe && prev == Some(t) {
            return Ok(MilnorResult {
                mu: t,
                certificate: Certificate::Stabilized,
                truncation: m,
            });
        }
        prev = Some(t);
    }
    Err(Error::NotStabilized {
        budget: opts.max_truncation as usize,
        history,
    })
}

/// Multiplicity (order) of the germ at the origin.
pub fn multiplicity(f: &Poly) -> Result<i64> {
    f.order().ok_or_else(|| Error::ZeroPolynomial {
        context: "multiplicity".into(),
    })
}

/// Membership in `W(n, m; μ)`: does the `m`-truncated Jacobian colength of
/// `f` equal `μ`?
pub fn in_w(f: &Poly, m: i64, mu: usize) -> Result<bool> {
    Ok(truncated_milnor(f, m)? == mu)
}

/// Options controlling generic plane-section sampling.
#[derive(Clone, Debug)]
pub struct SectionOptions {
    /// RNG seed; equal seeds give bit-identical results.
    pub seed: u64,
    /// How many independent samples must agree on the minimum.
    pub agreement: usize,
    /// Total sample budget (failed/non-isolated samples count).
    pub max_attempts: usize,
    /// Settings passed to the per-section Milnor computation.
    pub milnor: MilnorOptions,
}

impl Default for SectionOptions {
    fn default() -> Self {
        SectionOptions {
            seed: 0,
            agreement: 3,
            max_attempts: 12,
            milnor: MilnorOptions::default(),
        }
    }
}

/// Restrict `f` to the graph-form `dim`-plane `z_j = Σ_{l ≤ dim} b[j][l] z_l`
/// (for `j > dim`), producing a germ in `dim` variables.
fn graph_section(f: &Poly, dim: usize, b: &[Vec<i64>]) -> Poly {
    let n = f.nvars();
    let mut images: Vec<Poly> = Vec::with_capacity(n);
    for l in 0..dim {
        images.push(Poly::var(dim, l));
    }
    for row in b {
        let mut g = Poly::zero(dim);
        for (l, &c) in row.iter().enumerate() {
            g = g.add_poly(&Poly::var(dim, l).scale(&rat(c)));
        }
        images.push(g);
    }
    f.substitute(&images)
}

/// Milnor number of the generic `dim`-plane section of `f` (the entry
/// `μ^(dim)` of the μ*-sequence), by seeded sampling with agreement
/// certification. `dim = n` is the plain Milnor number; `dim = 1` is exact:
/// `multiplicity − 1`.
pub fn section_milnor(f: &Poly, dim: usize, opts: &SectionOptions) -> Result<MilnorResult> {
    let n = f.nvars();
    if dim == 0 || dim > n {
        return Err(Error::Dimension {
            context: format!("section dimension {dim} out of range 1..={n}"),
        });
    }
    if dim == n {
        return milnor_number(f, &opts.milnor);
    }
    if dim == 1 {
        let mu = (multiplicity(f)? - 1).max(0) as usize;
        return Ok(MilnorResult {
            mu,
            certificate: Certificate::Safe,
            truncation: 0,
        });
    }
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let mut best: Option<usize> = None;
    let mut best_count = 0usize;
    let mut best_result: Option<MilnorResult> = None;
    let mut skipped = 0usize;
    for attempt in 0..opts.max_attempts {
        let range = 1 + (attempt as i64) / 2;
        let b: Vec<Vec<i64>> = (dim..n)
            .map(|_| (0..dim).map(|_| rng.gen_range(-range..=range)).collect())
            .collect();
        let g = graph_section(f, dim, &b);
        match milnor_number(&g, &opts.milnor) {
            Ok(res) => {
                match best {
                    Some(cur) if res.mu > cur => {} // non-generic: larger value
                    Some(cur) if res.mu == cur => best_count += 1,
                    _ => {
                        best = Some(res.mu);
                        best_count = 1;
                        best_result = Some(res);
                    }
                }
                if best_count >= opts.agreement {
                    return Ok(best_result.unwrap());
                }
            }
            Err(Error::NotStabilized { .. }) => {
                skipped += 1; // non-isolated section: not generic
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::InconsistentTrials {
        detail: format!(
            "no {}-fold agreement on the generic {dim}-section in {} attempts \
             (min so far {:?} seen {}×, {} non-isolated samples skipped)",
            opts.agreement, opts.max_attempts, best, best_count, skipped
        ),
    })
}

/// The μ*-sequence `(μ^(n), μ^(n−1), …, μ^(1))` of generic polar invariants.
pub fn mu_star(f: &Poly, opts: &SectionOptions) -> Result<Vec<usize>> {
    let n = f.nvars();
    let mut out = Vec::with_capacity(n);
    for dim in (1..=n).rev() {
        out.push(section_milnor(f, dim, opts)?.mu);
    }
    Ok(out)
}

/// Membership in `W*(n, m; μ*)`: the truncated colength matches `target[0]`
/// and a generic hyperplane section lies in `W*(n−1, m; target[1..])`,
/// recursively down to curves.
///
/// Generic hyperplanes are sampled in graph form; by semicontinuity the
/// generic section realizes the *minimum* truncated colength, which is
/// certified by agreement before recursing into a minimizing section.
pub fn in_w_star(f: &Poly, m: i64, target: &[usize], opts: &SectionOptions) -> Result<bool> {
    let n = f.nvars();
    if target.len() != n {
        return Err(Error::Dimension {
            context: format!("target μ* has {} entries, expected {n}", target.len()),
        });
    }
    if truncated_milnor(f, m)? != target[0] {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let dim = n - 1;
    let mut samples: Vec<(usize, Poly)> = Vec::new();
    for attempt in 0..opts.max_attempts {
        let range = 1 + (attempt as i64) / 2;
        let b: Vec<Vec<i64>> = vec![(0..dim).map(|_| rng.gen_range(-range..=range)).collect()];
        let g = graph_section(f, dim, &b);
        if g.is_zero() {
            continue;
        }
        let t = truncated_milnor(&g, m)?;
        samples.push((t, g));
        let min = samples.iter().map(|(t, _)| *t).min().unwrap();
        let count = samples.iter().filter(|(t, _)| *t == min).count();
        if count >= opts.agreement {
            let (_, generic) = samples.iter().find(|(t, _)| *t == min).unwrap();
            let deeper = SectionOptions {
                seed: opts.seed.wrapping_add(0x9e37_79b9_7f4a_7c15),
                ..opts.clone()
            };
            return in_w_star(generic, m, &target[1..], &deeper);
        }
    }
    Err(Error::InconsistentTrials {
        detail: format!(
            "no {}-fold agreement on the generic hyperplane section in {} attempts",
            opts.agreement, opts.max_attempts
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Poly {
        Poly::parse(n, s).unwrap()
    }

    #[test]
    fn truncated_colength_is_nondecreasing_and_stabilizes() {
        let f = p(2, "z1^2+z2^3");
        let ts: Vec<usize> = (1..=6).map(|m| truncated_milnor(&f, m).unwrap()).collect();
        assert_eq!(ts, vec![2, 2, 2, 2, 2, 2]);
        let g = p(2, "z1^2+z2^6");
        let ts: Vec<usize> = (1..=7).map(|m| truncated_milnor(&g, m).unwrap()).collect();
        assert_eq!(ts, vec![2, 3, 4, 5, 5, 5, 5]);
        for w in ts.windows(2) {
            assert!(w[0] <= w[1] || w[0] == *ts.last().unwrap());
        }
    }

    #[test]
    fn milnor_oracles() {
        let cases = [
            (2, "z1^2+z2^3", 2),
            (2, "z1^2+z2^2", 1),
            (2, "z1^3+z2^3", 4),
            (2, "z1^2+z2^6", 5),
            (3, "z1^2+z2^3+z3^5", 8),
            (3, "z1^3+z2^3+z3^6", 20),
            (3, "z1^2+z2^2+z3^2", 1),
            (2, "z1^3+z1*z2^3", 7), // D-type: x(x^2 + y^3)
        ];
        for (n, s, mu) in cases {
            let res = milnor_number(&p(n, s), &MilnorOptions::default()).unwrap();
            assert_eq!(res.mu, mu, "μ({s})");
        }
        // The cusp certifies safe already at truncation 2.
        let res = milnor_number(&p(2, "z1^2+z2^3"), &MilnorOptions::default()).unwrap();
        assert_eq!(res.certificate, Certificate::Safe);
        assert_eq!(res.truncation, 2);
        // Smooth germ: μ = 0.
        let res = milnor_number(&p(2, "z1+z2^2"), &MilnorOptions::default()).unwrap();
        assert_eq!(res.mu, 0);
        assert_eq!(res.certificate, Certificate::Safe);
    }

    #[test]
    fn safe_mode_reaches_the_rigorous_bound() {
        let f = p(3, "z1^2+z2^3+z3^5");
        let fast = milnor_number(&f, &MilnorOptions::default()).unwrap();
        let safe = milnor_number(
            &f,
            &MilnorOptions {
                safe: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(fast.mu, 8);
        assert_eq!(safe.mu, 8);
        assert_eq!(safe.certificate, Certificate::Safe);
        assert!(safe.truncation as usize >= safe.mu || safe.mu <= safe.truncation as usize);
        assert!(fast.truncation <= safe.truncation);
    }

    #[test]
    fn non_isolated_singularity_is_an_error() {
        // z1·z2 in three variables: the singular locus is the z3-axis.
        let f = p(3, "z1*z2");
        let err = milnor_number(&f, &MilnorOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NotStabilized { .. }));
        assert_eq!(
            err.hypothesis_name().as_deref(),
            Some("isolated-singularity")
        );
        // Whitney umbrella-like: also non-isolated.
        let g = p(3, "z1^2*z3+z2^2");
        assert!(matches!(
            milnor_number(&g, &MilnorOptions::default()),
            Err(Error::NotStabilized { .. })
        ));
    }

    #[test]
    fn membership_in_w() {
        let f = p(2, "z1^2+z2^3");
        for m in [2, 3, 5] {
            assert!(in_w(&f, m, 2).unwrap());
            assert!(!in_w(&f, m, 1).unwrap());
            assert!(!in_w(&f, m, 3).unwrap());
        }
        // Low truncation undercounts: t(1) = 2 also here, but for a higher
        // singularity t(1) < μ.
        let g = p(2, "z1^3+z2^3");
        assert!(!in_w(&g, 1, 4).unwrap()); // t(1) = 3
        assert!(in_w(&g, 2, 4).unwrap());
    }

    #[test]
    fn mu_star_brieskorn_two_seeds() {
        let f = p(3, "z1^2+z2^3+z3^5");
        for seed in [0u64, 1] {
            let opts = SectionOptions {
                seed,
                ..Default::default()
            };
            assert_eq!(mu_star(&f, &opts).unwrap(), vec![8, 2, 1]);
        }
    }

    #[test]
    fn mu_star_ordinary_cusp_and_quadric() {
        let opts = SectionOptions::default();
        assert_eq!(mu_star(&p(2, "z1^2+z2^3"), &opts).unwrap(), vec![2, 1]);
        assert_eq!(mu_star(&p(3, "z1^2+z2^2+z3^2"), &opts).unwrap(), vec![1, 1, 1]);
        // Homogeneous cubic surface cone with an ordinary triple point:
        // μ* = ((d−1)^3, (d−1)^2, d−1) for generic cones; here d = 3 with
        // a nondegenerate example.
        let g = p(3, "z1^3+z2^3+z3^3+z1*z2*z3");
        assert_eq!(mu_star(&g, &opts).unwrap(), vec![8, 4, 2]);
    }

    #[test]
    fn w_star_membership() {
        let f = p(2, "z1^2+z2^3");
        let opts = SectionOptions::default();
        assert!(in_w_star(&f, 3, &[2, 1], &opts).unwrap());
        assert!(!in_w_star(&f, 3, &[2, 2], &opts).unwrap());
        assert!(!in_w_star(&f, 3, &[3, 1], &opts).unwrap());
        let g = p(3, "z1^2+z2^3+z3^5");
        assert!(in_w_star(&g, 5, &[8, 2, 1], &opts).unwrap());
        assert!(!in_w_star(&g, 5, &[8, 2, 2], &opts).unwrap());
    }

    #[test]
    fn multiplicity_oracle() {
        assert_eq!(multiplicity(&p(2, "z1^2+z2^3")).unwrap(), 2);
        assert_eq!(multiplicity(&p(3, "z1*z2*z3")).unwrap(), 3);
        assert!(multiplicity(&Poly::zero(2)).is_err());
    }
}
