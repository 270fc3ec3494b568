//! Command-line surface for the curve-complex verification library.
//!
//! Purpose: build the canonical finite complex for a surface, run any named
//! verification suite, reproduce the moving-part self-map on the four-piece
//! surfaces, and run a seeded cross-engine consistency sweep.
//!
//! Exit codes are a stable contract: 0 = success, 1 = a verification
//! failure (with JSON detail on stdout), 2 = usage error (unknown check,
//! invalid or out-of-range surface, exhausted budget).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ccw_core::complex::{build_x, SimplicialComplex};
use ccw_core::curves::Curve;
use ccw_core::intersection::{chord_calculus, dehn_twist, intersect, intersection_oracle};
use ccw_core::pants::{self, LemmaReport};
use ccw_core::rigidity::{self, non_induced_certificate};
use ccw_core::surface_model::{build_model, ModelPolygon, SurfaceSpec};
use ccw_core::Error;

#[derive(Parser)]
#[command(
    name = "ccw",
    version,
    about = "Curve-complex verification jobs on non-orientable surfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the canonical curve complex for the surface with `g` crosscaps
    /// and `n` holes
    Build {
        g: u32,
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one named verification suite on a surface
    Verify {
        /// Registry key of the check (see `ccw verify list 0 0`)
        check_id: String,
        g: u32,
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build the moving-part self-map on the four-piece surface with `g`
    /// crosscaps and print its split, verdicts, and certificate
    Counterexample {
        g: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Seeded random consistency sweep across the intersection engines
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Checks that take only a model.
type PlainCheck = fn(&ModelPolygon) -> ccw_core::Result<LemmaReport>;
/// Checks whose enumeration accepts an optional budget override.
type BudgetedCheck = fn(&ModelPolygon, Option<usize>) -> ccw_core::Result<LemmaReport>;

enum Check {
    Plain(PlainCheck),
    Budgeted(BudgetedCheck),
}

/// Every registered verification suite, keyed by its registry slug.
const REGISTRY: &[(&str, Check)] = &[
    ("numberofcurve", Check::Plain(pants::check_numberofcurve)),
    ("toppants", Check::Plain(pants::check_toppants)),
    ("curvetype", Check::Plain(pants::check_curvetype)),
    ("cccc", Check::Plain(pants::check_cccc)),
    ("valency2", Check::Plain(pants::check_valency2)),
    ("valency1", Check::Plain(pants::check_valency1)),
    ("lingraph", Check::Plain(pants::check_lingraph)),
    ("notriangle", Check::Plain(pants::check_notriangle)),
    ("delta-table", Check::Plain(pants::check_delta_table)),
    ("cor-linpath", Check::Plain(pants::check_cor_linpath)),
    ("nonadjforclo", Check::Plain(pants::check_nonadjforclo)),
    ("nonadjforn2", Check::Plain(pants::check_nonadjforn2)),
    ("g3ct", Check::Plain(pants::check_g3ct)),
    ("lemma-2-0", Check::Plain(pants::check_lemma_2_0)),
    ("cloct", Check::Plain(pants::check_cloct)),
    ("nonadjacency", Check::Budgeted(rigidity::check_nonadjacency)),
    ("lintolin", Check::Budgeted(rigidity::check_lintolin)),
    ("g1ct", Check::Budgeted(rigidity::check_g1ct)),
    ("linpath", Check::Budgeted(rigidity::check_linpath)),
    ("all-alpha-i", Check::Budgeted(rigidity::check_all_alpha_i)),
    ("idenonstar", Check::Plain(rigidity::check_idenonstar)),
    ("mainxx", Check::Budgeted(rigidity::check_mainxx)),
];

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Build { g, n, format } => cmd_build(g, n, format),
        Cmd::Verify { check_id, g, n, format } => cmd_verify(&check_id, g, n, format),
        Cmd::Counterexample { g, format } => cmd_counterexample(g, format),
        Cmd::Selfcheck { seed } => cmd_selfcheck(seed),
    };
    ExitCode::from(code)
}

/// Exit code for an error bubbling out of the library: bad input and
/// exhausted budgets are usage errors; everything else is a failure.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::InvalidSurface(_)
        | Error::InvalidCurve(_)
        | Error::Unsupported(_)
        | Error::BudgetExceeded(_) => 2,
        Error::VerificationFailed(_) | Error::Internal(_) => 1,
    }
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    error_code(e)
}

fn budget_from_env() -> Result<Option<usize>, String> {
    match std::env::var("CCW_BUDGET") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| format!("CCW_BUDGET must be a non-negative integer, got {s:?}")),
        Err(_) => Ok(None),
    }
}

fn complex_json(x: &SimplicialComplex) -> serde_json::Value {
    json!({
        "g": x.spec.genus,
        "n": x.spec.holes,
        "vertices": x.vertices.iter().map(Curve::name).collect::<Vec<_>>(),
        "edges": x.edges.iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
    })
}

fn complex_dot(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph x_{}_{} {{\n", x.spec.genus, x.spec.holes));
    for v in &x.vertices {
        out.push_str(&format!("  \"{}\";\n", v.name()));
    }
    for &(u, v) in &x.edges {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            x.vertices[u].name(),
            x.vertices[v].name()
        ));
    }
    out.push_str("}\n");
    out
}

fn cmd_build(g: u32, n: u32, format: Format) -> u8 {
    let x = match build_x(SurfaceSpec::new(g, n)) {
        Ok(x) => x,
        Err(e) => return fail(&e),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&complex_json(&x)).unwrap()),
        Format::Dot => print!("{}", complex_dot(&x)),
        Format::Text => {
            println!(
                "complex on N_{{{g},{n}}}: {} vertices, {} edges",
                x.vertex_count(),
                x.edge_count()
            );
            for (i, v) in x.vertices.iter().enumerate() {
                let nbrs: Vec<String> = x
                    .edges
                    .iter()
                    .filter_map(|&(a, b)| {
                        if a == i {
                            Some(x.vertices[b].name())
                        } else if b == i {
                            Some(x.vertices[a].name())
                        } else {
                            None
                        }
                    })
                    .collect();
                println!("  {} -- {}", v.name(), nbrs.join(", "));
            }
        }
    }
    0
}

fn cmd_verify(check_id: &str, g: u32, n: u32, format: Format) -> u8 {
    let Some((_, check)) = REGISTRY.iter().find(|(slug, _)| *slug == check_id) else {
        eprintln!(
            "error: unknown check {check_id:?}; registered checks: {}",
            REGISTRY.iter().map(|(s, _)| *s).collect::<Vec<_>>().join(", ")
        );
        return 2;
    };
    let budget = match budget_from_env() {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let model = match build_model(SurfaceSpec::new(g, n)) {
        Ok(m) => m,
        Err(e) => return fail(&e),
    };
    let report = match check {
        Check::Plain(f) => f(&model),
        Check::Budgeted(f) => f(&model, budget),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let status = if report.passed() { "pass" } else { "fail" };
    match format {
        Format::Json | Format::Dot => {
            let doc = json!({
                "check": report.lemma,
                "instance": { "g": g, "n": n },
                "status": status,
                "instances_checked": report.instances_checked,
                "failures": report.failures,
                "notes": report.notes,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!(
                "{}: {} on N_{{{g},{n}}} ({} instances)",
                report.lemma, status, report.instances_checked
            );
            for f in &report.failures {
                println!("  failure: {f}");
            }
            for note in &report.notes {
                println!("  note: {note}");
            }
        }
    }
    if report.passed() {
        0
    } else {
        1
    }
}

fn cmd_counterexample(g: u32, format: Format) -> u8 {
    if !(1..=4).contains(&g) {
        eprintln!("error: the moving-part construction needs g between 1 and 4 (n = 4 - g)");
        return 2;
    }
    let n = 4 - g;
    let spec = SurfaceSpec::new(g, n);
    let model = match build_model(spec) {
        Ok(m) => m,
        Err(e) => return fail(&e),
    };
    let (split, map) = match rigidity::build_counterexample(spec) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let simplicial = match rigidity::check_simplicial(&model, &map) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let locally_injective = match rigidity::check_locally_injective(&model, &map) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let certificate = match non_induced_certificate(&model, &map) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let ok = simplicial && locally_injective;
    match format {
        Format::Json | Format::Dot => {
            let cert_json = certificate.as_ref().map(|c| {
                json!({
                    "gamma": c.gamma.name(),
                    "delta": c.delta.name(),
                    "i_before": c.i_before,
                    "i_after": c.i_after,
                })
            });
            let doc = json!({
                "check": "counterexample",
                "instance": { "g": g, "n": n },
                "status": if ok { "pass" } else { "fail" },
                "fixed_part": split.a_set.iter().map(Curve::name).collect::<Vec<_>>(),
                "moved_part": split.b_set.iter().map(Curve::name).collect::<Vec<_>>(),
                "simplicial": simplicial,
                "locally_injective": locally_injective,
                "certificate": cert_json,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!("self-map of the complex on N_{{{g},{n}}}");
            println!(
                "  fixed part A: {}",
                split.a_set.iter().map(Curve::name).collect::<Vec<_>>().join(", ")
            );
            println!(
                "  moved part B: {}",
                split.b_set.iter().map(Curve::name).collect::<Vec<_>>().join(", ")
            );
            println!("  simplicial: {simplicial}");
            println!("  locally injective: {locally_injective}");
            match &certificate {
                Some(c) => println!(
                    "  not induced by any homeomorphism: i({}, {}) changes {} -> {}",
                    c.gamma.name(),
                    c.delta.name(),
                    c.i_before,
                    c.i_after
                ),
                None => println!("  inducedness: inconclusive (no intersection mismatch found)"),
            }
        }
    }
    if ok {
        0
    } else {
        1
    }
}

/// Seeded sweep: sample vertex pairs on small surfaces and insist the three
/// intersection routes agree and are symmetric; sample twistable triples and
/// insist twisting both curves of a pair preserves their intersection number.
fn cmd_selfcheck(seed: u64) -> u8 {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let specs: Vec<SurfaceSpec> = (0..=4u32)
        .flat_map(|g| (0..=5u32).map(move |n| SurfaceSpec::new(g, n)))
        .filter(|s| s.genus + s.holes >= 4 && s.genus + s.holes <= 5)
        .collect();
    let mut pair_checks = 0u32;
    let mut twist_checks = 0u32;
    for _ in 0..40 {
        let spec = *specs.choose(&mut rng).unwrap();
        let model = match build_model(spec) {
            Ok(m) => m,
            Err(e) => return fail(&e),
        };
        let x = match build_x(spec) {
            Ok(x) => x,
            Err(e) => return fail(&e),
        };
        let a = x.vertices.choose(&mut rng).unwrap().clone();
        let b = x.vertices.choose(&mut rng).unwrap().clone();
        if a == b {
            continue;
        }
        let ab = match intersect(&model, &a, &b) {
            Ok(r) => r.value,
            Err(e) => return fail(&e),
        };
        let ba = match intersect(&model, &b, &a) {
            Ok(r) => r.value,
            Err(e) => return fail(&e),
        };
        if ab != ba {
            eprintln!(
                "selfcheck: asymmetric intersection on N_{{{},{}}}: i({},{})={} but i({},{})={}",
                spec.genus, spec.holes, a.name(), b.name(), ab, b.name(), a.name(), ba
            );
            return 1;
        }
        if let Ok(Some(cc)) = chord_calculus(&model, &a, &b) {
            if cc != ab {
                eprintln!(
                    "selfcheck: chord calculus disagrees on N_{{{},{}}}: {} vs {}",
                    spec.genus, spec.holes, cc, ab
                );
                return 1;
            }
        }
        match intersection_oracle(&model, &a, &b) {
            Ok(r) => {
                if r.value != ab {
                    eprintln!(
                        "selfcheck: polyline oracle disagrees on N_{{{},{}}}: {} vs {}",
                        spec.genus, spec.holes, r.value, ab
                    );
                    return 1;
                }
            }
            Err(Error::Unsupported(_)) => {}
            Err(e) => return fail(&e),
        }
        pair_checks += 1;

        // One twist probe per round when the sampled pair admits one.
        if let Curve::Beta { .. } = a {
            let power = *[-2i64, -1, 1, 2].choose(&mut rng).unwrap();
            let ta = match dehn_twist(&model, &b, &a, power) {
                Ok(t) => t,
                // One-sided curves admit no twist; skip those samples.
                Err(Error::Unsupported(_)) | Err(Error::InvalidCurve(_)) => continue,
                Err(e) => return fail(&e),
            };
            let back = match dehn_twist(&model, &ta, &a, -power) {
                Ok(t) => t,
                Err(e) => return fail(&e),
            };
            let same = match (back.realize(&model), b.realize(&model)) {
                (Ok(rb), Ok(ro)) => match ccw_core::position::is_isotopic(&model, &rb, &ro) {
                    Ok(v) => v,
                    Err(e) => return fail(&e),
                },
                (Err(e), _) | (_, Err(e)) => return fail(&e),
            };
            if !same {
                eprintln!(
                    "selfcheck: twist of power {power} about {} failed to invert on {}",
                    a.name(),
                    b.name()
                );
                return 1;
            }
            twist_checks += 1;
        }
    }
    println!("selfcheck passed: {pair_checks} pair checks, {twist_checks} twist round-trips (seed {seed})");
    0
}
