//! Command line front end for the degree-polynomial library.
//!
//! Every subcommand prints human-readable text by default and a single
//! JSON document with `--json`. Output is deterministic byte-for-byte
//! for fixed flags. Exit codes: 0 on success, 1 when independently
//! computed routes disagree (with a structured diff on stderr), 2 on
//! usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use degpoly::acceptance::{run_all, Tier};
use degpoly::degrees::{
    cap_y_to_y, d_chains, d_determinant, d_differential, d_duan, d_integration,
    d_schur_differential, degree_of_schubert, det_variants_for, lr_via_degrees, DRoute,
    DetVariant,
};
use degpoly::demazure::{
    alternating_character_check, demazure_character, demazure_dimension, flagged_schur_det,
    flagged_schur_tableaux, generic_point, gt_count, gt_lattice_points, gt_generating_sum,
    gt_volume, DimensionRoute, GTPolytopeSpec,
};
use degpoly::exactpoly::{format_rat, rat_int};
use degpoly::identities::{cartan_gram_check, conjecture_report, conjecture_rhs};
use degpoly::parking::{d_long_cycle, long_cycle, parking_polynomial};
use degpoly::permgroup::{all_perms, b_of, CartanMatrix, ReducedWord};
use degpoly::schubert::{
    compositions_bounded, inverse_kostka, kostka_row, lr_coefficients, schubert_poly,
    schubert_vexillary, strictly_dominant_inverse_kostka, InverseKostkaMethod, SchubertError,
};
use degpoly::{Perm, Poly, Rat};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "degpoly",
    version,
    about = "Exact degree polynomials of Schubert varieties and the objects around them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree polynomial of a Bruhat interval
    Dpoly(DpolyArgs),
    /// Schubert polynomial of a permutation
    Schubert(SchubertArgs),
    /// Schubert-Kostka matrix entries
    Kostka(KostkaArgs),
    /// Inverse Schubert-Kostka entries
    KostkaInverse(KostkaInverseArgs),
    /// Littlewood-Richardson coefficients by independent routes
    Lr(LrArgs),
    /// Demazure characters, dimensions, and polytope volumes
    Demazure(DemazureArgs),
    /// Gelfand-Tsetlin lattice points of a flagged polytope
    Gt(GtArgs),
    /// Parking polynomial and the long-cycle degree polynomial
    Parking(ParkingArgs),
    /// Permanent identity for the Gram matrix of positive roots
    Permanent(PermanentArgs),
    /// Conjectured closed form, evaluated literally and compared
    Conjecture(ConjectureArgs),
    /// Run the acceptance criteria
    Selftest(SelftestArgs),
}

enum Failure {
    Usage(String),
    Invariant(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_perm(s: &str) -> Result<Perm, Failure> {
    Perm::parse(s).map_err(usage)
}

fn poly_value(p: &Poly) -> Value {
    serde_json::from_str(&p.to_json_string()).expect("polynomial JSON is valid")
}

fn poly_diff_failure(
    context: &str,
    left_route: &str,
    left: &Poly,
    right_route: &str,
    right: &Poly,
) -> Failure {
    let body = json!({
        "invariant_violation": context,
        "left": {"route": left_route, "poly": poly_value(left)},
        "right": {"route": right_route, "poly": poly_value(right)},
        "difference": poly_value(&left.sub(right)),
    });
    Failure::Invariant(body.to_string())
}

fn value_diff_failure(
    context: &str,
    left_route: &str,
    left: &str,
    right_route: &str,
    right: &str,
) -> Failure {
    let body = json!({
        "invariant_violation": context,
        "left": {"route": left_route, "value": left},
        "right": {"route": right_route, "value": right},
    });
    Failure::Invariant(body.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dpoly(a) => run_dpoly(a),
        Command::Schubert(a) => run_schubert(a),
        Command::Kostka(a) => run_kostka(a),
        Command::KostkaInverse(a) => run_kostka_inverse(a),
        Command::Lr(a) => run_lr(a),
        Command::Demazure(a) => run_demazure(a),
        Command::Gt(a) => run_gt(a),
        Command::Parking(a) => run_parking(a),
        Command::Permanent(a) => run_permanent(a),
        Command::Conjecture(a) => run_conjecture(a),
        Command::Selftest(a) => run_selftest(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Chains,
    Integrate,
    Diff,
    Det,
    #[value(name = "det-312")]
    Det312,
    #[value(name = "det-231")]
    Det231,
    #[value(name = "schur-diff")]
    SchurDiff,
    Duan,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coords {
    /// Root coordinates Y_i = y_i - y_{i+1}, the canonical comparison form
    #[value(name = "Y")]
    CapY,
    /// Plain coordinates y_1, ..., y_n as the route emitted them
    #[value(name = "y")]
    LowerY,
}

#[derive(Args)]
struct DpolyArgs {
    /// Top of the interval, one-line notation: 231 or 2,3,1
    #[arg(long)]
    w: String,
    /// Bottom of the interval; defaults to the identity
    #[arg(long)]
    u: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Chains)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Coords::CapY)]
    coords: Coords,
    #[arg(long)]
    json: bool,
}

struct DpolyOutput {
    route: &'static str,
    cap_y: Poly,
    y: Poly,
    empty_interval: bool,
}

fn run_dpoly(a: DpolyArgs) -> Result<(), Failure> {
    let w = parse_perm(&a.w)?;
    let u = a.u.as_deref().map(parse_perm).transpose()?;
    if u.is_some() && !matches!(a.method, Method::Chains | Method::Diff) {
        return Err(Failure::Usage(
            "--u only combines with --method chains or diff; the other routes compute D_{id,w}"
                .into(),
        ));
    }
    let n = w.n().max(u.as_ref().map_or(1, Perm::n));
    let w = w.extend(n);
    let u = u.map_or_else(|| Perm::identity(n), |p| p.extend(n));

    let from_dp = |dp: degpoly::degrees::DegreePolynomial| DpolyOutput {
        route: dp.route.name(),
        cap_y: dp.cap_y_form,
        y: dp.y_form,
        empty_interval: dp.empty_interval,
    };
    let out = match a.method {
        Method::Chains => from_dp(d_chains(&u, &w)),
        Method::Integrate => from_dp(d_integration(&w)),
        Method::Diff => from_dp(d_differential(&u, &w)),
        Method::Det => match det_variants_for(&w).as_slice() {
            [variant] => from_dp(d_determinant(&w, *variant).map_err(usage)?),
            [_, _] => {
                return Err(Failure::Usage(format!(
                    "{w} avoids both 312 and 231, so two determinant forms apply; \
                     pick --method det-312 or det-231 explicitly"
                )))
            }
            _ => from_dp(d_schur_differential(&w).map_err(usage)?),
        },
        Method::Det312 => from_dp(d_determinant(&w, DetVariant::Av312).map_err(usage)?),
        Method::Det231 => from_dp(d_determinant(&w, DetVariant::Av231).map_err(usage)?),
        Method::SchurDiff => from_dp(d_schur_differential(&w).map_err(usage)?),
        Method::Duan => {
            let word = ReducedWord::for_permutation(&w);
            let cap = d_duan(&CartanMatrix::type_a(n - 1), &word);
            DpolyOutput {
                route: "duan",
                y: cap_y_to_y(&cap),
                cap_y: cap,
                empty_interval: false,
            }
        }
    };

    let (coords_tag, poly) = match a.coords {
        Coords::CapY => ("Y", &out.cap_y),
        Coords::LowerY => ("y", &out.y),
    };
    if a.json {
        let doc = json!({
            "u": u.to_string(),
            "w": w.to_string(),
            "method": out.route,
            "coords": coords_tag,
            "empty_interval": out.empty_interval,
            "poly": poly_value(poly),
        });
        println!("{doc}");
    } else {
        if out.empty_interval {
            println!("note: {u} is not below {w} in Bruhat order; the interval is empty");
        }
        println!("D[{u}, {w}] ({}, coords {coords_tag}) = {poly}", out.route);
    }
    Ok(())
}

#[derive(Args)]
struct SchubertArgs {
    #[arg(long)]
    w: String,
    #[arg(long)]
    json: bool,
}

fn run_schubert(a: SchubertArgs) -> Result<(), Failure> {
    let w = parse_perm(&a.w)?;
    let s = schubert_poly(&w);
    if let Ok(v) = schubert_vexillary(&w) {
        if v != s {
            return Err(poly_diff_failure(
                &format!("Schubert polynomial routes disagree at w = {w}"),
                "transition",
                &s,
                "vexillary",
                &v,
            ));
        }
    }
    if a.json {
        let doc = json!({"w": w.to_string(), "poly": poly_value(&s)});
        println!("{doc}");
    } else {
        println!("S[{w}] = {s}");
    }
    Ok(())
}

#[derive(Args)]
struct KostkaArgs {
    /// One row: all a with K_{w,a} nonzero
    #[arg(long, conflicts_with = "n")]
    w: Option<String>,
    /// Whole sector: every permutation of S_n
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    json: bool,
}

fn kostka_rows_for(w: &Perm) -> Vec<Value> {
    kostka_row(w)
        .iter()
        .map(|(a, k)| json!({"w": w.to_string(), "a": a, "value": k.to_string()}))
        .collect()
}

fn run_kostka(a: KostkaArgs) -> Result<(), Failure> {
    let rows: Vec<Value> = match (&a.w, a.n) {
        (Some(ws), None) => kostka_rows_for(&parse_perm(ws)?),
        (None, Some(n)) => {
            if !(1..=5).contains(&n) {
                return Err(Failure::Usage(
                    "sector dumps are kept at desk scale; --n at most 5".into(),
                ));
            }
            all_perms(n).iter().flat_map(kostka_rows_for).collect()
        }
        _ => {
            return Err(Failure::Usage(
                "pass exactly one of --w <perm> or --n <size>".into(),
            ))
        }
    };
    if a.json {
        println!("{}", Value::Array(rows.clone()));
    } else {
        for row in &rows {
            println!(
                "K[w={}, a={}] = {}",
                row["w"].as_str().expect("row has w"),
                row["a"],
                row["value"].as_str().expect("row has value"),
            );
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KMethod {
    Alternating,
    Dcoeff,
    #[value(name = "closed-312")]
    Closed312,
    #[value(name = "closed-231")]
    Closed231,
    #[value(name = "strictly-dominant")]
    StrictlyDominant,
}

#[derive(Args)]
struct KostkaInverseArgs {
    /// Single entry: the permutation index
    #[arg(long, requires = "a", conflicts_with = "n")]
    w: Option<String>,
    /// Single entry: the exponent index, comma separated
    #[arg(long, value_delimiter = ',', requires = "w")]
    a: Option<Vec<usize>>,
    /// Whole sector: nonzero entries over S_n, alternating method
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = KMethod::Alternating)]
    method: KMethod,
    #[arg(long)]
    json: bool,
}

fn run_kostka_inverse(args: KostkaInverseArgs) -> Result<(), Failure> {
    match (&args.w, &args.a, args.n) {
        (Some(ws), Some(a), None) => {
            let w = parse_perm(ws)?;
            let (method_name, value) = match args.method {
                KMethod::Alternating => (
                    "alternating",
                    inverse_kostka(a, &w, InverseKostkaMethod::Alternating).map_err(usage)?,
                ),
                KMethod::Dcoeff => (
                    "dcoeff",
                    inverse_kostka(a, &w, InverseKostkaMethod::DCoeff).map_err(usage)?,
                ),
                KMethod::Closed312 => (
                    "closed-312",
                    inverse_kostka(a, &w, InverseKostkaMethod::Closed312).map_err(usage)?,
                ),
                KMethod::Closed231 => (
                    "closed-231",
                    inverse_kostka(a, &w, InverseKostkaMethod::Closed231).map_err(usage)?,
                ),
                KMethod::StrictlyDominant => {
                    let entry = strictly_dominant_inverse_kostka(a, &w).map_err(usage)?;
                    let value = entry.ok_or_else(|| {
                        Failure::Usage(format!(
                            "exponent {a:?} has support beyond the code of {w}; \
                             outside the strictly-dominant closed form"
                        ))
                    })?;
                    ("strictly-dominant", value)
                }
            };
            if args.json {
                let doc = json!({
                    "w": w.to_string(),
                    "a": a,
                    "method": method_name,
                    "value": format_rat(&value),
                });
                println!("{doc}");
            } else {
                println!("Kinv[a={a:?}, w={w}] = {} ({method_name})", format_rat(&value));
            }
            Ok(())
        }
        (None, None, Some(n)) => {
            if !(1..=4).contains(&n) {
                return Err(Failure::Usage(
                    "sector dumps are kept at desk scale; --n at most 4".into(),
                ));
            }
            if args.method != KMethod::Alternating {
                return Err(Failure::Usage(
                    "sector dumps use the alternating method; --method selects \
                     the route for single entries"
                        .into(),
                ));
            }
            let mut rows = Vec::new();
            for w in all_perms(n) {
                let l = w.length();
                for a in compositions_bounded(l, n, l) {
                    let value = inverse_kostka(&a, &w, InverseKostkaMethod::Alternating)
                        .map_err(usage)?;
                    if value != rat_int(0) {
                        rows.push(json!({
                            "w": w.to_string(),
                            "a": a,
                            "value": format_rat(&value),
                        }));
                    }
                }
            }
            if args.json {
                println!("{}", Value::Array(rows.clone()));
            } else {
                for row in &rows {
                    println!(
                        "Kinv[a={}, w={}] = {}",
                        row["a"],
                        row["w"].as_str().expect("row has w"),
                        row["value"].as_str().expect("row has value"),
                    );
                }
            }
            Ok(())
        }
        _ => Err(Failure::Usage(
            "pass either --w <perm> --a <exponents> or --n <size>".into(),
        )),
    }
}

#[derive(Args)]
struct LrArgs {
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    #[arg(long)]
    json: bool,
}

fn run_lr(a: LrArgs) -> Result<(), Failure> {
    let u = parse_perm(&a.u)?;
    let v = parse_perm(&a.v)?;
    let coefficients = lr_coefficients(&u, &v).map_err(|e| match e {
        SchubertError::RouteMismatch(msg) => Failure::Invariant(
            json!({"invariant_violation": msg}).to_string(),
        ),
        other => usage(other),
    })?;
    let v_key = v.trim();
    for (w, c) in &coefficients {
        let via_degrees = lr_via_degrees(&u, w);
        let d = via_degrees.get(&v_key).cloned().unwrap_or_else(|| rat_int(0));
        if d != Rat::from_integer(c.clone()) {
            return Err(value_diff_failure(
                &format!("c_{{{u},{v}}}^{{{w}}} disagrees across routes"),
                "product-expansion",
                &c.to_string(),
                "degree-expansion",
                &format_rat(&d),
            ));
        }
    }
    if a.json {
        let rows: Vec<Value> = coefficients
            .iter()
            .map(|(w, c)| json!({"w": w.to_string(), "value": c.to_string()}))
            .collect();
        let doc = json!({
            "u": u.to_string(),
            "v": v.to_string(),
            "coefficients": rows,
        });
        println!("{doc}");
    } else {
        println!("S[{u}] * S[{v}] =");
        for (w, c) in &coefficients {
            println!("  {c} * S[{w}]");
        }
        if coefficients.is_empty() {
            println!("  0");
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Char,
    Dim,
    Gtcount,
    Volume,
}

#[derive(Args)]
struct DemazureArgs {
    /// Highest weight, weakly decreasing, comma separated
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<u32>,
    #[arg(long)]
    w: String,
    #[arg(long, value_enum)]
    what: What,
    /// Offset into the fixed prime sequence for the generic-point check
    #[arg(long, default_value_t = 0)]
    seed: usize,
    #[arg(long)]
    json: bool,
}

fn run_demazure(a: DemazureArgs) -> Result<(), Failure> {
    let w = parse_perm(&a.w)?;
    let lambda = a.lambda;
    let n = w.n();
    let flagged = b_of(&w).ok();
    let spec_for = || GTPolytopeSpec::new(lambda.clone(), w.clone()).map_err(usage);

    match a.what {
        What::Char => {
            let ch = demazure_character(&lambda, &w).map_err(usage)?;
            if let Some(b) = &flagged {
                let mu: Vec<usize> = lambda.iter().map(|&v| v as usize).collect();
                let ones = vec![1usize; n];
                let tableaux = flagged_schur_tableaux(&mu, &ones, b, n);
                if tableaux != ch {
                    return Err(poly_diff_failure(
                        &format!("character routes disagree at w = {w}, lambda = {lambda:?}"),
                        "operators",
                        &ch,
                        "tableaux",
                        &tableaux,
                    ));
                }
                let det = flagged_schur_det(&mu, &ones, b, n);
                if det != ch {
                    return Err(poly_diff_failure(
                        &format!("character routes disagree at w = {w}, lambda = {lambda:?}"),
                        "operators",
                        &ch,
                        "lattice-path-determinant",
                        &det,
                    ));
                }
                let spec = spec_for()?;
                let gsum = gt_generating_sum(&spec);
                if gsum != ch {
                    return Err(poly_diff_failure(
                        &format!("character routes disagree at w = {w}, lambda = {lambda:?}"),
                        "operators",
                        &ch,
                        "lattice-points",
                        &gsum,
                    ));
                }
                let point = generic_point(n, a.seed);
                let agreed =
                    alternating_character_check(&lambda, &w, &point).map_err(usage)?;
                if !agreed {
                    return Err(Failure::Invariant(
                        json!({
                            "invariant_violation": format!(
                                "alternating character sum disagrees with the character \
                                 at the generic point (seed offset {})", a.seed
                            ),
                        })
                        .to_string(),
                    ));
                }
            }
            if a.json {
                let doc = json!({
                    "lambda": lambda,
                    "w": w.to_string(),
                    "what": "char",
                    "poly": poly_value(&ch),
                });
                println!("{doc}");
            } else {
                println!("ch[lambda={lambda:?}, w={w}] = {ch}");
            }
        }
        What::Dim => {
            let by_char =
                demazure_dimension(&lambda, &w, DimensionRoute::CharacterAtOne).map_err(usage)?;
            if flagged.is_some() {
                let by_det = demazure_dimension(&lambda, &w, DimensionRoute::BinomialDet)
                    .map_err(usage)?;
                if by_det != by_char {
                    return Err(value_diff_failure(
                        &format!("dimension routes disagree at w = {w}, lambda = {lambda:?}"),
                        "binomial-determinant",
                        &format_rat(&by_det),
                        "character-at-one",
                        &format_rat(&by_char),
                    ));
                }
            }
            emit_scalar(a.json, &lambda, &w, "dim", &format_rat(&by_char))?;
        }
        What::Gtcount => {
            let spec = spec_for()?;
            emit_scalar(a.json, &lambda, &w, "gtcount", &gt_count(&spec).to_string())?;
        }
        What::Volume => {
            let spec = spec_for()?;
            let volume = gt_volume(&spec).map_err(|e| match e {
                degpoly::demazure::DemazureError::EhrhartNonPolynomial { .. } => {
                    Failure::Invariant(json!({"invariant_violation": e.to_string()}).to_string())
                }
                other => usage(other),
            })?;
            let point: Vec<Rat> = lambda.iter().map(|&v| rat_int(v as i64)).collect();
            let degree_value = d_integration(&w).y_form.evaluate(&point);
            if volume != degree_value {
                return Err(value_diff_failure(
                    &format!("volume routes disagree at w = {w}, lambda = {lambda:?}"),
                    "ehrhart",
                    &format_rat(&volume),
                    "degree-polynomial",
                    &format_rat(&degree_value),
                ));
            }
            emit_scalar(a.json, &lambda, &w, "volume", &format_rat(&volume))?;
        }
    }
    Ok(())
}

fn emit_scalar(
    json_mode: bool,
    lambda: &[u32],
    w: &Perm,
    what: &str,
    value: &str,
) -> Result<(), Failure> {
    if json_mode {
        let doc = json!({
            "lambda": lambda,
            "w": w.to_string(),
            "what": what,
            "value": value,
        });
        println!("{doc}");
    } else {
        println!("{what}[lambda={lambda:?}, w={w}] = {value}");
    }
    Ok(())
}

#[derive(Args)]
struct GtArgs {
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<u32>,
    #[arg(long)]
    w: String,
    /// Also list every lattice pattern, row by row
    #[arg(long)]
    patterns: bool,
    #[arg(long)]
    json: bool,
}

fn run_gt(a: GtArgs) -> Result<(), Failure> {
    let w = parse_perm(&a.w)?;
    let spec = GTPolytopeSpec::new(a.lambda.clone(), w.clone()).map_err(usage)?;
    let count = gt_count(&spec);
    let patterns: Option<Vec<Vec<Vec<i64>>>> = if a.patterns {
        if count > 5000.into() {
            return Err(Failure::Usage(format!(
                "{count} patterns is too many to list; drop --patterns"
            )));
        }
        Some(
            gt_lattice_points(&spec)
                .iter()
                .map(|p| {
                    (1..=p.n())
                        .map(|r| (1..=r).map(|j| p.entry(r, j)).collect())
                        .collect()
                })
                .collect(),
        )
    } else {
        None
    };
    if a.json {
        let mut doc = json!({
            "lambda": a.lambda,
            "w": w.to_string(),
            "flag": spec.flag(),
            "free_entries": spec.free_entries(),
            "count": count.to_string(),
        });
        if let Some(p) = &patterns {
            doc["patterns"] = json!(p);
        }
        println!("{doc}");
    } else {
        println!(
            "GT polytope for lambda={:?}, w={w}: flag {:?}, {} free entries, {count} lattice points",
            a.lambda,
            spec.flag(),
            spec.free_entries(),
        );
        if let Some(pats) = &patterns {
            for (i, rows) in pats.iter().enumerate() {
                let flat: Vec<String> = rows.iter().map(|r| format!("{r:?}")).collect();
                println!("  #{:<4} {}", i + 1, flat.join(" "));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PRoute {
    Parking,
    Ballot,
    #[value(name = "nested-integral")]
    NestedIntegral,
    #[value(name = "det-full")]
    DetFull,
    #[value(name = "det-steck")]
    DetSteck,
    #[value(name = "two-power-expansion")]
    TwoPowerExpansion,
    Trees,
    Recurrence,
    Chains,
}

impl PRoute {
    fn to_droute(self) -> DRoute {
        match self {
            PRoute::Parking => DRoute::Parking,
            PRoute::Ballot => DRoute::Ballot,
            PRoute::NestedIntegral => DRoute::NestedIntegral,
            PRoute::DetFull => DRoute::DetFull,
            PRoute::DetSteck => DRoute::DetSteck,
            PRoute::TwoPowerExpansion => DRoute::TwoPowerExpansion,
            PRoute::Trees => DRoute::Trees,
            PRoute::Recurrence => DRoute::Recurrence,
            PRoute::Chains => DRoute::Chains,
        }
    }
}

#[derive(Args)]
struct ParkingArgs {
    /// Number of letters in the long cycle s_1 ... s_r
    #[arg(long, default_value_t = 4)]
    r: usize,
    #[arg(long, value_enum, default_value_t = PRoute::Parking)]
    route: PRoute,
    #[arg(long)]
    json: bool,
}

fn run_parking(a: ParkingArgs) -> Result<(), Failure> {
    if !(1..=7).contains(&a.r) {
        return Err(Failure::Usage(
            "--r between 1 and 7; the enumerative routes grow factorially".into(),
        ));
    }
    let dp = d_long_cycle(a.r, a.route.to_droute()).map_err(usage)?;
    let p_r = parking_polynomial(a.r);
    let w = long_cycle(a.r);
    let rho: Vec<Rat> = (0..=a.r).map(|i| rat_int((a.r - i) as i64)).collect();
    let degree = degree_of_schubert(&w, &rho);
    if a.json {
        let doc = json!({
            "r": a.r,
            "w": w.to_string(),
            "route": dp.route.name(),
            "degree_poly": poly_value(&dp.cap_y_form),
            "parking_poly": poly_value(&p_r),
            "degree_at_rho": format_rat(&degree),
        });
        println!("{doc}");
    } else {
        println!("P_{} = {p_r}", a.r);
        println!("D[{w}] ({}) = {}", dp.route.name(), dp.cap_y_form);
        println!("degree at rho = {}", format_rat(&degree));
    }
    Ok(())
}

#[derive(Args)]
struct PermanentArgs {
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long)]
    json: bool,
}

fn run_permanent(a: PermanentArgs) -> Result<(), Failure> {
    if !(2..=5).contains(&a.n) {
        return Err(Failure::Usage(
            "the Gram permanent is kept at desk scale; --n between 2 and 5".into(),
        ));
    }
    let report = cartan_gram_check(a.n);
    if !report.ok() {
        return Err(value_diff_failure(
            &format!("Gram permanent identity fails at n = {}", report.n),
            "permanent",
            &format_rat(&report.permanent),
            "factorial-product",
            &format_rat(&report.factorial_product),
        ));
    }
    if a.json {
        let doc = json!({
            "n": report.n,
            "permanent": format_rat(&report.permanent),
            "factorial_product": format_rat(&report.factorial_product),
            "order_times_heights": format_rat(&report.order_times_heights),
        });
        println!("{doc}");
    } else {
        println!(
            "per(B B^T) = {} = 1! 2! ... {}! = n! * prod of root heights",
            format_rat(&report.permanent),
            report.n,
        );
    }
    Ok(())
}

#[derive(Args)]
struct ConjectureArgs {
    /// Report every special permutation with leading code entry up to this
    #[arg(long, default_value_t = 3, conflicts_with = "w")]
    nmax: usize,
    /// Evaluate the transcribed right-hand side for one permutation
    #[arg(long)]
    w: Option<String>,
    #[arg(long)]
    json: bool,
}

fn run_conjecture(a: ConjectureArgs) -> Result<(), Failure> {
    if let Some(ws) = &a.w {
        let w = parse_perm(ws)?;
        let rhs = conjecture_rhs(&w).map_err(usage)?;
        if a.json {
            let doc = json!({"w": w.to_string(), "rhs": poly_value(&rhs)});
            println!("{doc}");
        } else {
            println!("conjectured rhs for {w} = {rhs}");
        }
        return Ok(());
    }
    if !(1..=4).contains(&a.nmax) {
        return Err(Failure::Usage(
            "the report doubles per step; --nmax between 1 and 4".into(),
        ));
    }
    let rows = conjecture_report(a.nmax);
    if a.json {
        let docs: Vec<Value> = rows
            .iter()
            .map(|row| {
                json!({
                    "w": row.w.to_string(),
                    "n": row.n,
                    "k": row.k,
                    "a": row.a,
                    "valid_subsets": row.valid_subset_count,
                    "lhs_degree": row.lhs_degree,
                    "rhs_degree": row.rhs_degree,
                    "outcome": row.outcome.name(),
                })
            })
            .collect();
        println!("{}", Value::Array(docs));
    } else {
        for row in &rows {
            let rhs_degree = row
                .rhs_degree
                .map_or_else(|| "-".to_string(), |d| d.to_string());
            println!(
                "w={} n={} k={} a={:?} subsets={} lhs_degree={} rhs_degree={} outcome={}",
                row.w,
                row.n,
                row.k,
                row.a,
                row.valid_subset_count,
                row.lhs_degree,
                rhs_degree,
                row.outcome.name(),
            );
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TierArg {
    Default,
    Extended,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, value_enum, default_value_t = TierArg::Default)]
    tier: TierArg,
    #[arg(long)]
    json: bool,
}

fn run_selftest(a: SelftestArgs) -> Result<(), Failure> {
    let (tier, tier_name) = match a.tier {
        TierArg::Default => (Tier::Default, "default"),
        TierArg::Extended => (Tier::Extended, "extended"),
    };
    let results = run_all(tier);
    let failed = results.iter().filter(|r| !r.passed).count();
    if a.json {
        let rows: Vec<Value> = results
            .iter()
            .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed}))
            .collect();
        let doc = json!({
            "tier": tier_name,
            "results": rows,
            "all_passed": failed == 0,
        });
        println!("{doc}");
    } else {
        for r in &results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("[{status}] criterion {:02} ({})", r.id, r.name);
        }
        println!(
            "{}/{} criteria passed (tier {tier_name})",
            results.len() - failed,
            results.len(),
        );
    }
    if failed > 0 {
        let detail: Vec<String> = results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| format!("criterion {:02}: {}", r.id, r.detail))
            .collect();
        return Err(Failure::Invariant(
            json!({"invariant_violation": detail.join("; ")}).to_string(),
        ));
    }
    Ok(())
}
