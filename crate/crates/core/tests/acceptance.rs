//! Acceptance suite.
//!
//! Each numbered criterion of the project contract is one test; the cargo
//! harness line `test criterion_N_… ok`/`FAILED` is the per-criterion
//! pass/fail line. Every test asserts the exact stated values and checks
//! its wall-clock budget. The suites are runnable standalone:
//!
//! ```text
//! cargo test --test acceptance                 # all criteria
//! cargo test --test acceptance criterion_8     # one criterion
//! ```

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use muzeta::fan::{chart_pullback, hj_subdivide_2d};
use muzeta::matrix::{det_i64, make_primitive};
use muzeta::milnor::{
    in_w, milnor_number, mu_star, multiplicity, MilnorOptions, SectionOptions,
};
use muzeta::nd::{curve_singular_points, nd_profile, Verdict};
use muzeta::newton::newton_number;
use muzeta::pipeline::{milnor_orlik, mu_star_triple, shift_input, shift_milnor, ShiftOptions};
use muzeta::poly::{Expo, Poly};
use muzeta::zeta::{
    milnor_from_zeta, varchenko_zeta, zeta_multiplicity, zeta_multiplicity_factor, ZetaFactored,
};
use muzeta::{rat, Int};

const SEXTIC: &str = "7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3";
const NODAL: &str = "z1^3+z2^3-2*z3^3-3*z1^2*z2+3*z1*z3^2";

fn sextic() -> Poly {
    Poly::parse(3, SEXTIC).unwrap()
}

/// The sextic with the second variable shifted: f + z2^(3+m).
fn shifted_sextic(m: i64) -> Poly {
    Poly::parse(3, &format!("{SEXTIC}+z2^{}", 3 + m)).unwrap()
}

fn budget(start: Instant, limit_secs: u64, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(limit_secs),
        "{what} took {elapsed:?}, budget {limit_secs}s"
    );
}

/// Criterion 1 — shift formula: for m in 1..=4 the pipeline returns
/// mu = 20 + 4m on the sextic with k = 2, and the truncated-rank engine on
/// the explicit shifted germ returns the identical value. Budget 120 s.
#[test]
fn criterion_1_shift_formula_and_engine_agree() {
    let start = Instant::now();
    for m in 1..=4 {
        let input = shift_input(sextic(), &[2, 2, 1], 2, m).unwrap();
        let opts = ShiftOptions {
            check_linear: true,
            ..ShiftOptions::default()
        };
        let res = shift_milnor(&input, None, &opts).unwrap();
        assert_eq!(res.mu, 20 + 4 * m, "pipeline mu at m = {m}");
        let engine = res
            .evidence
            .mu_linear
            .as_ref()
            .expect("check_linear records the engine run");
        assert_eq!(engine.mu as i64, 20 + 4 * m, "engine mu at m = {m}");
        // Belt and braces: the engine value is reproduced on the germ built
        // here, independently of the pipeline's own construction.
        let direct = milnor_number(&shifted_sextic(m), &MilnorOptions::default()).unwrap();
        assert_eq!(direct.mu as i64, 20 + 4 * m, "direct engine mu at m = {m}");
    }
    budget(start, 120, "criterion 1");
}

/// Criterion 2 — exact factored zeta-functions of the shifted sextic for
/// m in {1,2,3,6}: the boundary part, the primed assembly, the full zeta
/// (two shapes, by gcd(m,3)), and degree -21-4m. Budget 10 s.
#[test]
fn criterion_2_zeta_factored_forms() {
    let start = Instant::now();
    for m in [1i64, 2, 3, 6] {
        let input = shift_input(sextic(), &[2, 2, 1], 2, m).unwrap();
        let res = shift_milnor(&input, None, &ShiftOptions::default()).unwrap();
        let z = &res.evidence.zeta;
        assert_eq!(z.zeta_fs.to_string(), "(1-t^3)(1-t^6)^-4", "m = {m}");
        assert_eq!(z.zeta_prime.to_string(), "(1-t^3)(1-t^6)^-2", "m = {m}");
        let mut expected = ZetaFactored::one();
        expected.mul_factor(3, 1);
        expected.mul_factor(6, -2);
        if m % 3 == 0 {
            // One singular point contributing twice the same period.
            expected.mul_factor((2 * m + 6) as u64, -2);
        } else {
            expected.mul_factor((2 * m + 6) as u64, 1);
            expected.mul_factor((6 * m + 18) as u64, -1);
        }
        assert_eq!(z.zeta.to_string(), expected.to_string(), "m = {m}");
        assert_eq!(z.zeta.degree(), -21 - 4 * m, "degree at m = {m}");
    }
    budget(start, 10, "criterion 2");
}

/// A random convenient polynomial with pure powers on every axis plus a few
/// interior monomials, resampled until the nondegeneracy profile certifies
/// it.
fn random_nd_poly(n: usize, rng: &mut StdRng) -> Poly {
    loop {
        let mut f = Poly::zero(n);
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = rng.gen_range(2..=5);
            f.add_term(Expo(e), rat(rng.gen_range(1..=4)));
        }
        for _ in 0..rng.gen_range(1..=3) {
            let e: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            if e.iter().all(|&x| x == 0) {
                continue;
            }
            let c = rng.gen_range(-5..=5);
            if c != 0 {
                f.add_term(Expo(e), rat(c));
            }
        }
        // Random cancellation can erase a pure power; keep only convenient
        // supports with at least one non-axis term.
        if f.support().len() <= n || !f.is_convenient() {
            continue;
        }
        if let Ok(profile) = nd_profile(&f) {
            if profile.verdict == Verdict::Nondegenerate {
                return f;
            }
        }
    }
}

/// Criterion 3 — three-way oracle agreement on a corpus of at least 20
/// convenient Newton-nondegenerate polynomials in 2 and 3 variables
/// (Fermat, Brieskorn with exponents <= 7, and randomized certified
/// supports): Newton number = rank-engine Milnor number = the number read
/// off the boundary zeta degree. Budget 300 s.
#[test]
fn criterion_3_three_way_oracle_on_nd_corpus() {
    let start = Instant::now();
    let mut corpus: Vec<Poly> = Vec::new();
    for d in 2..=7 {
        corpus.push(Poly::parse(2, &format!("z1^{d}+z2^{d}")).unwrap());
    }
    for d in 2..=4 {
        corpus.push(Poly::parse(3, &format!("z1^{d}+z2^{d}+z3^{d}")).unwrap());
    }
    for (a, b) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5)] {
        corpus.push(Poly::parse(2, &format!("z1^{a}+z2^{b}")).unwrap());
    }
    for (a, b, c) in [(2, 3, 5), (2, 3, 7), (3, 3, 6), (2, 4, 6), (5, 5, 5)] {
        corpus.push(Poly::parse(3, &format!("z1^{a}+z2^{b}+z3^{c}")).unwrap());
    }
    let mut rng = StdRng::seed_from_u64(20260815);
    for _ in 0..4 {
        corpus.push(random_nd_poly(2, &mut rng));
    }
    for _ in 0..3 {
        corpus.push(random_nd_poly(3, &mut rng));
    }
    assert!(corpus.len() >= 20, "corpus has {} members", corpus.len());

    for f in &corpus {
        let n = f.nvars();
        let nu = newton_number(f).unwrap_or_else(|e| panic!("newton number of {f}: {e}"));
        let mu = milnor_number(f, &MilnorOptions::default())
            .unwrap_or_else(|e| panic!("milnor number of {f}: {e}"))
            .mu;
        let zeta = varchenko_zeta(f)
            .unwrap_or_else(|e| panic!("boundary zeta of {f}: {e}"))
            .zeta;
        let mu_zeta = milnor_from_zeta(&zeta, n).unwrap();
        assert_eq!(nu, Int::from(mu), "newton number vs engine on {f}");
        assert_eq!(mu_zeta, mu as i64, "zeta degree vs engine on {f}");
    }
    budget(start, 300, "criterion 3");
}

/// Criterion 4 — product-formula oracles: the weighted-homogeneous product
/// value equals the rank engine on x^a + y^b + z^c for the four exponent
/// triples, with values 1, 8, 8, 20. Budget 60 s.
#[test]
fn criterion_4_product_formula_oracles() {
    let start = Instant::now();
    let lcm3 = |a: i64, b: i64, c: i64| num_integer::lcm(num_integer::lcm(a, b), c);
    for ((a, b, c), expected) in [(2, 2, 2), (3, 3, 3), (2, 3, 5), (3, 3, 6)]
        .into_iter()
        .zip([1i64, 8, 8, 20])
    {
        let d = lcm3(a, b, c);
        let w = vec![d / a, d / b, d / c];
        let product = milnor_orlik(&w, d).unwrap();
        assert_eq!(product, rat(expected), "product formula on ({a},{b},{c})");
        let f = Poly::parse(3, &format!("z1^{a}+z2^{b}+z3^{c}")).unwrap();
        let engine = milnor_number(&f, &MilnorOptions::default()).unwrap();
        assert_eq!(engine.mu as i64, expected, "engine on ({a},{b},{c})");
    }
    budget(start, 60, "criterion 4");
}

/// Criterion 5 — mu*-triple of a reduced homogeneous cubic with a single
/// rational node in the torus: the node is certified by the exact local
/// test (one singular point, local Milnor number 1), and for m = 1 the
/// formula triple and the sampling engine both give (9, 4, 2). Budget 300 s.
#[test]
fn criterion_5_mu_star_triple_of_nodal_cubic() {
    let start = Instant::now();
    let f = Poly::parse(3, NODAL).unwrap();

    // Local rank test for the node, in two affine charts that together
    // cover every candidate singular point of the projective curve.
    let chart3 = f.substitute(&[
        Poly::var(2, 0),
        Poly::var(2, 1),
        Poly::parse(2, "1").unwrap(),
    ]);
    let points = curve_singular_points(&chart3).unwrap();
    assert_eq!(points.len(), 1, "one singular point in the z3 = 1 chart");
    assert_eq!(points[0].point, vec![rat(1), rat(1)]);
    assert_eq!(points[0].mu, 1, "the singular point is a node");
    let chart1 = f.substitute(&[
        Poly::parse(2, "1").unwrap(),
        Poly::var(2, 0),
        Poly::var(2, 1),
    ]);
    let points = curve_singular_points(&chart1).unwrap();
    assert_eq!(points.len(), 1, "one singular point in the z1 = 1 chart");
    assert_eq!(points[0].point, vec![rat(1), rat(1)]);

    // Formula route: mu_tot = 1 from the shift pipeline, then the triple.
    let input = shift_input(f.clone(), &[1, 1, 1], 1, 1).unwrap();
    let res = shift_milnor(&input, None, &ShiftOptions::default()).unwrap();
    assert_eq!(res.mu_tot, 1);
    assert_eq!(mu_star_triple(3, 1, res.mu_tot), [9, 4, 2]);
    assert_eq!(res.mu, 9);

    // Engine route: the explicit shifted germ, five-sample agreement.
    let g = Poly::parse(3, &format!("{NODAL}+z1^4")).unwrap();
    let opts = SectionOptions {
        agreement: 5,
        max_attempts: 20,
        ..SectionOptions::default()
    };
    assert_eq!(mu_star(&g, &opts).unwrap(), vec![9, 4, 2]);
    budget(start, 300, "criterion 5");
}

/// Criterion 6 — zeta-multiplicity: the minimal period of the shifted
/// sextic's full zeta is 3 and equals the germ's multiplicity; for
/// x^d + y^d + z^d + x^(d+1) with d in {2, 3} the minimal period is d with
/// factor exponent -(d^2 - 3d + 3) (the derived value; checked directly:
/// -1 for d = 2, -3 for d = 3). Budget 30 s.
#[test]
fn criterion_6_zeta_multiplicity() {
    let start = Instant::now();
    let input = shift_input(sextic(), &[2, 2, 1], 2, 1).unwrap();
    let res = shift_milnor(&input, None, &ShiftOptions::default()).unwrap();
    let m_zeta = zeta_multiplicity(&res.evidence.zeta.zeta).unwrap();
    assert_eq!(m_zeta, 3);
    assert_eq!(multiplicity(&shifted_sextic(1)).unwrap(), 3);

    for d in [2i64, 3] {
        let f = Poly::parse(3, &format!("z1^{d}+z2^{d}+z3^{d}+z1^{}", d + 1)).unwrap();
        let zeta = varchenko_zeta(&f).unwrap().zeta;
        let (period, exponent) = zeta_multiplicity_factor(&zeta).unwrap();
        assert_eq!(period as i64, d, "minimal period at d = {d}");
        assert_eq!(exponent, -(d * d - 3 * d + 3), "factor exponent at d = {d}");
    }
    budget(start, 30, "criterion 6");
}

/// Criterion 7 — membership classes: the cusp lies in W(2, m; 2) for
/// m in {2, 3, 5} and outside W(2, m; mu) for mu in {1, 3}; the
/// mu*-sequence of x^2 + y^3 + z^5 is (8, 2, 1) under two different seeds.
/// Budget 60 s.
#[test]
fn criterion_7_membership_classes() {
    let start = Instant::now();
    let cusp = Poly::parse(2, "z1^2+z2^3").unwrap();
    for m in [2i64, 3, 5] {
        assert!(in_w(&cusp, m, 2).unwrap(), "cusp in W(2,{m};2)");
        for mu in [1usize, 3] {
            assert!(!in_w(&cusp, m, mu).unwrap(), "cusp not in W(2,{m};{mu})");
        }
    }
    let f = Poly::parse(3, "z1^2+z2^3+z3^5").unwrap();
    for seed in [0u64, 1] {
        let opts = SectionOptions {
            seed,
            ..SectionOptions::default()
        };
        assert_eq!(mu_star(&f, &opts).unwrap(), vec![8, 2, 1], "seed {seed}");
    }
    budget(start, 60, "criterion 7");
}

/// The five maximal cones of the standard weight-space fan of the sextic.
fn sextic_fan_charts() -> Vec<Vec<Vec<i64>>> {
    let w = vec![2i64, 2, 1];
    let o = vec![1i64, 1, 1];
    let e1 = vec![1i64, 0, 0];
    let e2 = vec![0i64, 1, 0];
    let e3 = vec![0i64, 0, 1];
    vec![
        vec![w.clone(), o.clone(), e1.clone()],
        vec![w.clone(), o.clone(), e2.clone()],
        vec![w, e1.clone(), e2.clone()],
        vec![o.clone(), e1, e3.clone()],
        vec![o, e2, e3],
    ]
}

/// Criterion 8 — standalone property suites: chart-pullback reassembly on
/// every chart of the sextic's fan; unit adjacent determinants for the
/// continued-fraction subdivision of 50 random plane cones; star-
/// triangulation independence of signed volumes for 50 random lattice
/// triangles and 50 tetrahedra. Budget 120 s.
#[test]
fn criterion_8_property_suites() {
    let start = Instant::now();

    // Chart-pullback reassembly: substituting the monomial images of the
    // chart into f reproduces exceptional-monomial times cofactor.
    let f = sextic();
    for gens in sextic_fan_charts() {
        let cp = chart_pullback(&f, &gens).unwrap();
        let images: Vec<Poly> = cp
            .substitution_rows()
            .into_iter()
            .map(|row| Poly::monomial(3, Expo(row), rat(1)))
            .collect();
        assert_eq!(
            f.substitute(&images),
            cp.full_pullback(),
            "reassembly on chart {gens:?}"
        );
    }

    // Hirzebruch–Jung subdivision: adjacent generators span unimodular
    // cones, and the chain starts and ends at the input rays.
    let mut rng = StdRng::seed_from_u64(88);
    let mut checked = 0;
    while checked < 50 {
        let u: Vec<i64> = (0..2).map(|_| rng.gen_range(0..=12)).collect();
        let v: Vec<i64> = (0..2).map(|_| rng.gen_range(0..=12)).collect();
        let (Some(u), Some(v)) = (make_primitive(&u), make_primitive(&v)) else {
            continue;
        };
        if u == v {
            continue;
        }
        let chain = hj_subdivide_2d(&u, &v).unwrap();
        assert_eq!(chain.first(), Some(&u));
        assert_eq!(chain.last(), Some(&v));
        for pair in chain.windows(2) {
            let d = det_i64(&[pair[0].clone(), pair[1].clone()]);
            assert_eq!(
                num_traits::Signed::abs(&d),
                Int::from(1),
                "adjacent determinant for {u:?}, {v:?}"
            );
        }
        checked += 1;
    }

    // Star-triangulation independence: for a simplex v0..vk and any lattice
    // point p, the signed volumes of the simplices with one vertex replaced
    // by p sum to the signed volume of the whole — the k-dimensional
    // splitting identity underlying triangulation-independent volumes.
    for dim in [2usize, 3] {
        for _ in 0..50 {
            let vertex =
                |rng: &mut StdRng| -> Vec<i64> { (0..dim).map(|_| rng.gen_range(-6..=6)).collect() };
            let simplex: Vec<Vec<i64>> = (0..=dim).map(|_| vertex(&mut rng)).collect();
            let p = vertex(&mut rng);
            let signed_vol = |s: &[Vec<i64>]| -> Int {
                let rows: Vec<Vec<i64>> = (1..=dim)
                    .map(|i| (0..dim).map(|j| s[i][j] - s[0][j]).collect())
                    .collect();
                det_i64(&rows)
            };
            let total = signed_vol(&simplex);
            let mut sum = Int::from(0);
            for i in 0..=dim {
                let mut part = simplex.clone();
                part[i] = p.clone();
                sum += signed_vol(&part);
            }
            assert_eq!(sum, total, "splitting identity on {simplex:?} at {p:?}");
        }
    }
    budget(start, 120, "criterion 8");
}
