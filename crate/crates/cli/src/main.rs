//! `muzeta` — exact polyhedral and algebraic invariants of hypersurface
//! singularities, as deterministic JSON.
//!
//! Every command prints a single JSON object
//! `{"command", "input", "result", "citations"}`. The `input` field embeds
//! the canonical serialization of everything that was analyzed, so a report
//! can be reproduced by re-running the command on its own `input` block.
//! Rationals print as exact `"p/q"` strings; factored zeta-functions as
//! ascending `[period, exponent]` pairs. The `citations` field names the
//! formulas the result rests on.
//!
//! Exit codes: 0 on success; 2 when a named mathematical hypothesis fails
//! (the error object carries the hypothesis name); 1 on usage or input
//! errors.

use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use muzeta::fan::{chart_pullback, validate_fan, Fan};
use muzeta::milnor::{
    in_w, in_w_star, milnor_number, mu_star, MilnorOptions, SectionOptions,
};
use muzeta::nd::nd_profile;
use muzeta::newton::{dual_newton_diagram, newton_complex, newton_number};
use muzeta::pipeline::{
    shift_input, shift_milnor, zariski_surface_report, LocalChange, ShiftOptions,
};
use muzeta::poly::Poly;
use muzeta::zeta::{varchenko_zeta_with, zeta_multiplicity, ZetaFactored};
use muzeta::Rat;

/// Exact polyhedral and algebraic invariants of hypersurface singularities.
#[derive(Parser)]
#[command(
    name = "muzeta",
    version,
    disable_help_subcommand = true,
    about,
    long_about = "Exact polyhedral and algebraic invariants of hypersurface singularities.\n\
                  Output is one JSON object per run: {command, input, result, citations}.\n\
                  Exit codes: 0 success, 2 named hypothesis failure, 1 usage error."
)]
struct Cli {
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

/// A germ given on the command line (or stdin) in variables `z1..zn`.
#[derive(Args)]
struct PolyIn {
    /// Number of variables (the germ lives in z1..zn).
    #[arg(short = 'n', long = "nvars", value_name = "N")]
    n: usize,
    /// Polynomial, e.g. "z1^2+z2^3"; omit or pass "-" to read stdin.
    #[arg(value_name = "POLY")]
    f: Option<String>,
}

impl PolyIn {
    fn read(&self) -> Result<Poly> {
        let text = match self.f.as_deref() {
            Some("-") | None => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .context("reading the polynomial from stdin")?;
                s
            }
            Some(s) => s.to_string(),
        };
        Ok(Poly::parse(self.n, text.trim())?)
    }
}

/// Knobs of the truncated-rank Milnor engine.
#[derive(Args)]
struct EngineArgs {
    /// Largest truncation order the rank engine may try.
    #[arg(long, default_value_t = 24, value_name = "ORDER")]
    truncation: i64,
    /// Require the rigorous colength-vs-order certificate (no plateau
    /// heuristic).
    #[arg(long)]
    safe: bool,
}

impl EngineArgs {
    fn options(&self) -> MilnorOptions {
        MilnorOptions {
            max_truncation: self.truncation,
            safe: self.safe,
        }
    }
    fn input_json(&self) -> Value {
        json!({"truncation": self.truncation, "safe": self.safe})
    }
}

/// Knobs of the seeded generic-section sampler.
#[derive(Args)]
struct SamplingArgs {
    /// RNG seed; equal seeds give byte-identical output.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent random sections that must agree in each dimension.
    #[arg(long, default_value_t = 3, value_name = "K")]
    trials: usize,
}

impl SamplingArgs {
    fn options(&self, engine: &EngineArgs) -> SectionOptions {
        SectionOptions {
            seed: self.seed,
            agreement: self.trials,
            max_attempts: self.trials.saturating_mul(4),
            milnor: engine.options(),
        }
    }
}

/// The shift-formula inputs shared by `zeta-oka`, `shift`.
#[derive(Args)]
struct ShiftArgs {
    /// Positive primitive weight vector, comma-separated (e.g. 2,2,1).
    #[arg(long, required = true, value_delimiter = ',', value_name = "W")]
    w: Vec<i64>,
    /// 1-based index of the shifted variable.
    #[arg(long, value_name = "K")]
    k: usize,
    /// Shift amount m >= 1 (the monomial added is z_k^(d_k+m)).
    #[arg(long, value_name = "M")]
    m: i64,
    /// JSON file of admissible coordinate changes, one entry per singular
    /// point: [{"point": ["p/q", ...], "images": ["z1+2*z2", "z2"]}].
    #[arg(long, value_name = "FILE")]
    local_data: Option<PathBuf>,
    /// Bound on shear coefficients in the automatic admissibility search.
    #[arg(long, default_value_t = 3, value_name = "B")]
    search_bound: i64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Face lattice of the Newton polyhedron of f.
    Newton(PolyIn),
    /// Dual Newton diagram: facet normals and vertex normal cones.
    Dual(PolyIn),
    /// Face-by-face nondegeneracy profile of the Newton boundary.
    Nd(PolyIn),
    /// Alternating lattice-volume sum of a convenient Newton boundary.
    NewtonNumber(PolyIn),
    /// Monodromy zeta-function from the Newton boundary, subset by subset.
    ZetaVarchenko {
        #[command(flatten)]
        poly: PolyIn,
        /// Skip the per-face nondegeneracy verification.
        #[arg(long)]
        assume_nd: bool,
    },
    /// Zeta-functions of a shifted weighted-homogeneous germ: the boundary
    /// part, the primed assembly, and the full zeta with local factors.
    ZetaOka {
        #[command(flatten)]
        poly: PolyIn,
        #[command(flatten)]
        shift: ShiftArgs,
    },
    /// Milnor number by truncated Jacobian-colength stabilization.
    Milnor {
        #[command(flatten)]
        poly: PolyIn,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Whole mu*-sequence via seeded generic plane sections.
    MuStar {
        #[command(flatten)]
        poly: PolyIn,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Membership in W(n, m; mu), or with --mu-star in W*(n, m; mu*).
    InW {
        #[command(flatten)]
        poly: PolyIn,
        /// Truncation order m of the membership class.
        #[arg(long, value_name = "M")]
        m: i64,
        /// Target Milnor number for plain W(n, m; mu).
        #[arg(long, conflicts_with = "mu_star")]
        mu: Option<usize>,
        /// Target mu*-sequence (comma-separated, top dimension first) for
        /// W*(n, m; mu*).
        #[arg(long, value_delimiter = ',', value_name = "SEQ")]
        mu_star: Option<Vec<usize>>,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Milnor number of f + z_k^(d_k+m) by the shift formula, with the full
    /// evidence trail (chart, singular points, local zetas, cross-checks).
    Shift {
        #[command(flatten)]
        poly: PolyIn,
        #[command(flatten)]
        shift: ShiftArgs,
        /// Also run the rank engine on the explicit shifted germ and
        /// require agreement.
        #[arg(long)]
        check_linear: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Compare two reduced plane curves of one degree through their shifted
    /// surface germs: zeta-functions, mu*-triples, hypothesis battery.
    ZariskiReport {
        /// Number of variables (must be 3: homogeneous curves in z1,z2,z3).
        #[arg(short = 'n', long = "nvars", value_name = "N")]
        n: usize,
        /// First curve.
        #[arg(value_name = "F0")]
        f0: String,
        /// Second curve.
        #[arg(value_name = "F1")]
        f1: String,
        /// 1-based index of the shifted variable.
        #[arg(long, value_name = "K")]
        k: usize,
        /// Shift amount m >= 1.
        #[arg(long, value_name = "M")]
        m: i64,
        /// Bound on shear coefficients in the admissibility search.
        #[arg(long, default_value_t = 3, value_name = "B")]
        search_bound: i64,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Validate a weight-space fan against f: regularity, admissibility,
    /// smallness, covering.
    FanValidate {
        #[command(flatten)]
        poly: PolyIn,
        /// Fan as JSON {"vertices": [[...]], "maximal_cones": [[1-based]]}.
        #[arg(long, value_name = "FILE", required = true)]
        fan: PathBuf,
    },
    /// Pull f back along one monomial chart: exceptional multiplicities and
    /// the cofactor.
    ChartPullback {
        #[command(flatten)]
        poly: PolyIn,
        /// Chart generators inline, rows separated by ';' (e.g.
        /// "2,2,1;1,1,1;1,0,0").
        #[arg(long, value_name = "ROWS", conflicts_with = "fan")]
        chart: Option<String>,
        /// Fan file to take the chart from (with --cone).
        #[arg(long, value_name = "FILE", requires = "cone")]
        fan: Option<PathBuf>,
        /// 1-based index of the maximal cone of --fan to use.
        #[arg(long, value_name = "I", requires = "fan")]
        cone: Option<usize>,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Newton(_) => "newton",
            Cmd::Dual(_) => "dual",
            Cmd::Nd(_) => "nd",
            Cmd::NewtonNumber(_) => "newton-number",
            Cmd::ZetaVarchenko { .. } => "zeta-varchenko",
            Cmd::ZetaOka { .. } => "zeta-oka",
            Cmd::Milnor { .. } => "milnor",
            Cmd::MuStar { .. } => "mu-star",
            Cmd::InW { .. } => "in-w",
            Cmd::Shift { .. } => "shift",
            Cmd::ZariskiReport { .. } => "zariski-report",
            Cmd::FanValidate { .. } => "fan-validate",
            Cmd::ChartPullback { .. } => "chart-pullback",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = cli.command.name();
    let (doc, code) = match run(&cli.command) {
        Ok((input, result, citations)) => (
            json!({
                "command": command,
                "input": input,
                "result": result,
                "citations": citations,
            }),
            0u8,
        ),
        Err(err) => {
            let (kind, hypothesis, code) = classify(&err);
            (
                json!({
                    "command": command,
                    "error": {
                        "kind": kind,
                        "hypothesis": hypothesis,
                        "message": format!("{err:#}"),
                    },
                }),
                code,
            )
        }
    };
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&doc).expect("JSON serialization cannot fail")
    );
    if let Err(e) = emit(cli.output.as_deref(), &text) {
        eprintln!("muzeta: {e:#}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Split errors into the exit-code classes: named hypothesis failures (2)
/// versus anything the caller can fix in the invocation (1).
fn classify(err: &anyhow::Error) -> (&'static str, Option<String>, u8) {
    if let Some(e) = err.downcast_ref::<muzeta::Error>() {
        if let Some(name) = e.hypothesis_name() {
            return ("hypothesis-failure", Some(name), 2);
        }
        return ("invalid-input", None, 1);
    }
    ("usage", None, 1)
}

/// Run one subcommand, producing the `input` echo, the `result`, and the
/// formula citations.
fn run(cmd: &Cmd) -> Result<(Value, Value, Vec<&'static str>)> {
    match cmd {
        Cmd::Newton(poly) => {
            let f = poly.read()?;
            let complex = newton_complex(&f)?;
            Ok((
                poly_input(&f),
                serde_json::to_value(&complex)?,
                vec!["newton-polyhedron-faces"],
            ))
        }
        Cmd::Dual(poly) => {
            let f = poly.read()?;
            let dual = dual_newton_diagram(&f)?;
            Ok((
                poly_input(&f),
                serde_json::to_value(&dual)?,
                vec!["dual-newton-diagram"],
            ))
        }
        Cmd::Nd(poly) => {
            let f = poly.read()?;
            let profile = nd_profile(&f)?;
            Ok((
                poly_input(&f),
                serde_json::to_value(&profile)?,
                vec!["face-nondegeneracy-tests"],
            ))
        }
        Cmd::NewtonNumber(poly) => {
            let f = poly.read()?;
            let nu = newton_number(&f)?;
            Ok((
                poly_input(&f),
                json!({ "newton_number": int_json(&nu) }),
                vec!["alternating-volume-sum"],
            ))
        }
        Cmd::ZetaVarchenko { poly, assume_nd } => {
            let f = poly.read()?;
            let report = varchenko_zeta_with(&f, *assume_nd)?;
            let mut input = poly_input(&f);
            merge(&mut input, json!({"assume_nd": assume_nd}));
            Ok((
                input,
                json!({
                    "zeta": zeta_json(&report.zeta),
                    "multiplicity": zeta_multiplicity(&report.zeta).ok(),
                    "per_subset": serde_json::to_value(&report.per_subset)?,
                }),
                vec!["boundary-zeta-formula"],
            ))
        }
        Cmd::ZetaOka { poly, shift } => {
            let f = poly.read()?;
            let (result, mut input, _) = run_shift(&f, shift, false, &EngineArgs {
                truncation: 24,
                safe: false,
            })?;
            merge(&mut input, poly_input(&f));
            let z = &result.evidence.zeta;
            Ok((
                input,
                json!({
                    "zeta_fs": zeta_json(&z.zeta_fs),
                    "zeta_prime": zeta_json(&z.zeta_prime),
                    "zeta": zeta_json(&z.zeta),
                    "multiplicity": zeta_multiplicity(&z.zeta).ok(),
                    "mu": result.mu,
                    "mu_tot": result.mu_tot,
                }),
                vec!["divisor-zeta-assembly", "boundary-zeta-formula"],
            ))
        }
        Cmd::Milnor { poly, engine } => {
            let f = poly.read()?;
            let res = milnor_number(&f, &engine.options())?;
            let mut input = poly_input(&f);
            merge(&mut input, engine.input_json());
            Ok((
                input,
                serde_json::to_value(&res)?,
                vec!["jacobian-colength-stabilization"],
            ))
        }
        Cmd::MuStar {
            poly,
            sampling,
            engine,
        } => {
            let f = poly.read()?;
            let seq = mu_star(&f, &sampling.options(engine))?;
            let mut input = poly_input(&f);
            merge(&mut input, engine.input_json());
            merge(
                &mut input,
                json!({"seed": sampling.seed, "trials": sampling.trials}),
            );
            Ok((
                input,
                json!({ "mu_star": seq }),
                vec!["generic-section-sequence", "jacobian-colength-stabilization"],
            ))
        }
        Cmd::InW {
            poly,
            m,
            mu,
            mu_star: target,
            sampling,
            engine,
        } => {
            let f = poly.read()?;
            let mut input = poly_input(&f);
            merge(&mut input, json!({"m": m}));
            match (mu, target) {
                (Some(mu), None) => {
                    let member = in_w(&f, *m, *mu)?;
                    merge(&mut input, json!({"mu": mu}));
                    Ok((
                        input,
                        json!({ "member": member }),
                        vec!["truncated-colength-membership"],
                    ))
                }
                (None, Some(seq)) => {
                    let member = in_w_star(&f, *m, seq, &sampling.options(engine))?;
                    merge(&mut input, json!({"mu_star": seq}));
                    merge(&mut input, engine.input_json());
                    merge(
                        &mut input,
                        json!({"seed": sampling.seed, "trials": sampling.trials}),
                    );
                    Ok((
                        input,
                        json!({ "member": member }),
                        vec![
                            "truncated-colength-membership",
                            "generic-section-sequence",
                        ],
                    ))
                }
                _ => bail!("pass exactly one of --mu or --mu-star"),
            }
        }
        Cmd::Shift {
            poly,
            shift,
            check_linear,
            engine,
        } => {
            let f = poly.read()?;
            let (result, mut input, _) = run_shift(&f, shift, *check_linear, engine)?;
            merge(&mut input, poly_input(&f));
            merge(&mut input, json!({"check_linear": check_linear}));
            merge(&mut input, engine.input_json());
            Ok((
                input,
                serde_json::to_value(&result)?,
                vec![
                    "shift-formula",
                    "milnor-orlik-product",
                    "divisor-zeta-assembly",
                    "boundary-zeta-formula",
                ],
            ))
        }
        Cmd::ZariskiReport {
            n,
            f0,
            f1,
            k,
            m,
            search_bound,
            engine,
        } => {
            let f0 = Poly::parse(*n, f0)?;
            let f1 = Poly::parse(*n, f1)?;
            let opts = ShiftOptions {
                search_bound: *search_bound,
                check_linear: false,
                milnor: engine.options(),
            };
            let report = zariski_surface_report(&f0, &f1, *k, *m, &opts)?;
            let mut input = json!({
                "n": n,
                "f0": f0.to_string(),
                "f1": f1.to_string(),
                "k": k,
                "m": m,
                "search_bound": search_bound,
            });
            merge(&mut input, engine.input_json());
            let citations = vec![
                "boundary-zeta-formula",
                "divisor-zeta-assembly",
                "shift-formula",
                "milnor-orlik-product",
                "mu-star-triple",
            ];
            Ok((input, serde_json::to_value(&report)?, citations))
        }
        Cmd::FanValidate { poly, fan } => {
            let f = poly.read()?;
            let text = fs::read_to_string(fan)
                .with_context(|| format!("reading fan file {}", fan.display()))?;
            let fan = Fan::from_json(poly.n, &text)?;
            let validation = validate_fan(&fan, &f)?;
            let ok = validation.ok();
            let mut result = serde_json::to_value(&validation)?;
            merge(&mut result, json!({"ok": ok}));
            let mut input = poly_input(&f);
            merge(&mut input, json!({"fan": fan.to_json()}));
            Ok((input, result, vec!["fan-validation"]))
        }
        Cmd::ChartPullback {
            poly,
            chart,
            fan,
            cone,
        } => {
            let f = poly.read()?;
            let gens = match (chart, fan, cone) {
                (Some(rows), None, None) => parse_chart(rows)?,
                (None, Some(path), Some(i)) => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading fan file {}", path.display()))?;
                    let fan = Fan::from_json(poly.n, &text)?;
                    if *i == 0 || *i > fan.maximal_cones.len() {
                        bail!(
                            "--cone {i} out of range: the fan has {} maximal cones",
                            fan.maximal_cones.len()
                        );
                    }
                    fan.cone_generators(i - 1)
                }
                _ => bail!("pass either --chart ROWS or --fan FILE with --cone I"),
            };
            let pullback = chart_pullback(&f, &gens)?;
            let mut input = poly_input(&f);
            merge(&mut input, json!({"chart": gens}));
            let mut result = serde_json::to_value(&pullback)?;
            merge(
                &mut result,
                json!({"full_pullback": pullback.full_pullback().to_string()}),
            );
            Ok((input, result, vec!["monomial-chart-pullback"]))
        }
    }
}

/// Shared zeta-oka/shift driver: parse the flags, run the shift pipeline.
fn run_shift(
    f: &Poly,
    args: &ShiftArgs,
    check_linear: bool,
    engine: &EngineArgs,
) -> Result<(muzeta::pipeline::ShiftResult, Value, Vec<LocalChange>)> {
    let input = shift_input(f.clone(), &args.w, args.k, args.m)?;
    let (changes, changes_json) = match &args.local_data {
        Some(path) => parse_local_data(path)?,
        None => (Vec::new(), Value::Null),
    };
    let opts = ShiftOptions {
        search_bound: args.search_bound,
        check_linear,
        milnor: engine.options(),
    };
    let data = if changes.is_empty() {
        None
    } else {
        Some(changes.as_slice())
    };
    let result = shift_milnor(&input, data, &opts)?;
    let input_json = json!({
        "w": args.w,
        "k": args.k,
        "m": args.m,
        "search_bound": args.search_bound,
        "local_data": changes_json,
    });
    Ok((result, input_json, changes))
}

/// Admissible-coordinate file: a JSON array of
/// `{"point": ["p/q", ...], "images": ["z1+2*z2", "z2"]}` entries. Points
/// live in the two curve variables of the divisor chart.
fn parse_local_data(path: &Path) -> Result<(Vec<LocalChange>, Value)> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading local-data file {}", path.display()))?;
    let raw: Value = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as JSON", path.display()))?;
    let entries = raw
        .as_array()
        .ok_or_else(|| anyhow!("local data must be a JSON array"))?;
    let mut changes = Vec::with_capacity(entries.len());
    let mut canon = Vec::with_capacity(entries.len());
    for (i, entry) in entries.iter().enumerate() {
        let point = entry
            .get("point")
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("local-data entry {i}: missing \"point\" array"))?
            .iter()
            .map(|v| -> Result<Rat> {
                let s = v
                    .as_str()
                    .ok_or_else(|| anyhow!("local-data entry {i}: coordinates are \"p/q\" strings"))?;
                s.parse::<Rat>()
                    .map_err(|e| anyhow!("local-data entry {i}: bad rational {s:?}: {e}"))
            })
            .collect::<Result<Vec<Rat>>>()?;
        let images = entry
            .get("images")
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("local-data entry {i}: missing \"images\" array"))?
            .iter()
            .map(|v| -> Result<Poly> {
                let s = v
                    .as_str()
                    .ok_or_else(|| anyhow!("local-data entry {i}: images are polynomial strings"))?;
                Ok(Poly::parse(point.len(), s)?)
            })
            .collect::<Result<Vec<Poly>>>()?;
        canon.push(json!({
            "point": point.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "images": images.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
        changes.push(LocalChange { point, images });
    }
    Ok((changes, Value::Array(canon)))
}

/// Inline chart rows: "2,2,1;1,1,1;1,0,0".
fn parse_chart(rows: &str) -> Result<Vec<Vec<i64>>> {
    rows.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|e| anyhow!("bad chart entry {x:?}: {e}"))
                })
                .collect()
        })
        .collect()
}

fn poly_input(f: &Poly) -> Value {
    json!({"n": f.nvars(), "f": f.to_string()})
}

/// A factored zeta with its display form and degree alongside the exact
/// `[period, exponent]` pairs.
fn zeta_json(z: &ZetaFactored) -> Value {
    json!({
        "factors": z,
        "display": z.to_string(),
        "degree": z.degree(),
    })
}

/// Big integers as JSON numbers when they fit, exact strings otherwise.
fn int_json(v: &muzeta::Int) -> Value {
    match v.to_string().parse::<i64>() {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

/// Merge the keys of `extra` (an object) into `target` (an object).
fn merge(target: &mut Value, extra: Value) {
    if let (Value::Object(t), Value::Object(e)) = (target, extra) {
        t.extend(e);
    }
}
