//! Cross-route self-checks covering the whole crate.
//!
//! Every criterion recomputes one quantity along independent routes and
//! demands exact agreement; nothing is compared with a tolerance. The
//! checks are exposed as a library so that both the integration test
//! target and the command-line `selftest` subcommand can drive them and
//! report one line per criterion.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degrees::{
    coproduct_check, d_chains, d_determinant, d_differential, d_integration, degree_of_schubert,
    det_variants_for, lr_via_degrees, DRoute, DetVariant,
};
use crate::demazure::{
    demazure_character, demazure_dimension, flagged_schur_det, flagged_schur_tableaux, gt_count,
    gt_generating_sum, gt_volume, DimensionRoute, GTPolytopeSpec,
};
use crate::exactpoly::{
    d_pairing, format_rat, rat, rat_factorial, rat_int, Family, Poly, Rat,
};
use crate::identities::{
    cartan_gram_check, conjecture_report, conjecture_rhs, permanent, permanent_naive,
    ConjectureOutcome,
};
use crate::operators::{demazure_t, divided_difference, integrate_i};
use crate::parking::{
    binary_tree_sum, d_long_cycle, long_cycle, parking_polynomial, parking_recurrence,
    LONG_CYCLE_ROUTES,
};
use crate::permgroup::{all_perms, b_of, bruhat_leq, is_strictly_dominant, Perm};
use crate::schubert::{
    compositions_bounded, inverse_kostka, lr_coefficients, lr_coefficients_alternating,
    schubert_poly, strictly_dominant_inverse_kostka, InverseKostkaMethod,
};

pub const CRITERION_COUNT: usize = 13;

/// Default keeps every sweep at desk scale; Extended widens the
/// cross-route sweep of criterion 1 to the symmetric group on five
/// letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Default,
    Extended,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn criterion_name(id: usize) -> &'static str {
    match id {
        1 => "cross-route degree polynomials",
        2 => "worked-example degree polynomials",
        3 => "longest-element normalization",
        4 => "long-cycle degrees and routes",
        5 => "parking polynomial displays",
        6 => "root Gram permanents",
        7 => "Schubert/degree duality",
        8 => "inverse Kostka routes",
        9 => "Demazure character and lattice sweep",
        10 => "dimension growth interpolation",
        11 => "Littlewood-Richardson routes",
        12 => "conjecture evaluator fidelity",
        13 => "operator algebra relations",
        _ => panic!("criterion ids run from 1 to {CRITERION_COUNT}"),
    }
}

pub fn run_criterion(id: usize, tier: Tier) -> CriterionResult {
    let (passed, detail) = match id {
        1 => cross_route_degrees(tier),
        2 => worked_examples(),
        3 => longest_element_normalization(),
        4 => long_cycle_degrees(),
        5 => parking_displays(),
        6 => gram_permanents(),
        7 => duality_sweep(),
        8 => inverse_kostka_routes(),
        9 => demazure_sweep(),
        10 => dimension_interpolation(),
        11 => littlewood_richardson_routes(),
        12 => conjecture_fidelity(),
        13 => operator_relations(),
        _ => panic!("criterion ids run from 1 to {CRITERION_COUNT}"),
    };
    CriterionResult {
        id,
        name: criterion_name(id),
        passed,
        detail,
    }
}

pub fn run_all(tier: Tier) -> Vec<CriterionResult> {
    (1..=CRITERION_COUNT)
        .map(|id| run_criterion(id, tier))
        .collect()
}

struct Check {
    checks: usize,
    failures: Vec<String>,
}

impl Check {
    fn new() -> Check {
        Check {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn is<F: FnOnce() -> String>(&mut self, ok: bool, label: F) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn finish(self, summary: String) -> (bool, String) {
        let detail = format!("{summary}; {} exact checks", self.checks);
        if self.failures.is_empty() {
            (true, detail)
        } else {
            (
                false,
                format!(
                    "{detail}; {} failed, first: {}",
                    self.failures.len(),
                    self.failures[0]
                ),
            )
        }
    }
}

fn catalan(n: usize) -> usize {
    match n {
        0 | 1 => 1,
        2 => 2,
        3 => 5,
        4 => 14,
        5 => 42,
        _ => panic!("only desk-scale Catalan numbers are needed"),
    }
}

fn cross_route_degrees(tier: Tier) -> (bool, String) {
    let start = Instant::now();
    let (n, budget) = match tier {
        Tier::Default => (4, Duration::from_secs(60)),
        Tier::Extended => (5, Duration::from_secs(900)),
    };
    let mut chk = Check::new();
    let id = Perm::identity(n);
    let mut av312 = 0usize;
    let mut av231 = 0usize;
    for w in all_perms(n) {
        let reference = d_chains(&id, &w);
        let integ = d_integration(&w);
        chk.is(integ.cap_y_form == reference.cap_y_form, || {
            format!("integration route disagrees with chains at w = {w}")
        });
        let diff = d_differential(&id, &w);
        chk.is(diff.cap_y_form == reference.cap_y_form, || {
            format!("differential route disagrees with chains at w = {w}")
        });
        for variant in det_variants_for(&w) {
            match variant {
                DetVariant::Av312 => av312 += 1,
                DetVariant::Av231 => av231 += 1,
            }
            let det = d_determinant(&w, variant).expect("variant chosen by avoidance");
            chk.is(det.cap_y_form == reference.cap_y_form, || {
                format!("{:?} determinant disagrees with chains at w = {w}", variant)
            });
        }
    }
    let expected = catalan(n);
    chk.is(av312 == expected, || {
        format!("expected {expected} permutations avoiding 312, saw {av312}")
    });
    chk.is(av231 == expected, || {
        format!("expected {expected} permutations avoiding 231, saw {av231}")
    });
    let elapsed = start.elapsed();
    chk.is(elapsed <= budget, || {
        format!("runtime {elapsed:.2?} exceeds budget {budget:?}")
    });
    chk.finish(format!("S_{n} swept in {elapsed:.2?}"))
}

fn worked_examples() -> (bool, String) {
    let mut chk = Check::new();
    let y = |i| Poly::var(Family::CapY, 2, i);

    let d = d_chains(
        &Perm::identity(3),
        &Perm::parse("231").expect("valid one-line"),
    );
    let expect = y(1).mul(&y(2)).add(&y(2).pow(2).scale(&rat(1, 2)));
    chk.is(d.cap_y_form == expect, || {
        format!("degree polynomial of 231 is {}", d.cap_y_form)
    });

    let d = d_chains(
        &Perm::parse("132").expect("valid one-line"),
        &Perm::parse("321").expect("valid one-line"),
    );
    let expect = y(1)
        .add(&y(2))
        .mul(&y(1))
        .add(&y(1).mul(&y(2)))
        .scale(&rat(1, 2));
    chk.is(d.cap_y_form == expect, || {
        format!("degree polynomial of [132, 321] is {}", d.cap_y_form)
    });
    chk.finish("both displayed degree polynomials reproduced".to_string())
}

fn longest_element_normalization() -> (bool, String) {
    let mut chk = Check::new();
    for n in 2..=5 {
        let w0 = Perm::longest(n);
        let rho: Vec<Rat> = (0..n).map(|i| rat_int((n - 1 - i) as i64)).collect();
        let value = d_integration(&w0).y_form.evaluate(&rho);
        chk.is(value.is_one(), || {
            format!("n = {n}: value at the staircase point is {}", format_rat(&value))
        });
    }
    chk.finish("longest elements normalize to 1 for n = 2..5".to_string())
}

fn long_cycle_degrees() -> (bool, String) {
    let mut chk = Check::new();
    let expected = [1i64, 3, 16, 125, 1296];
    for r in 1..=5usize {
        let w = long_cycle(r);
        let rho: Vec<Rat> = (0..=r).map(|i| rat_int((r - i) as i64)).collect();
        let degree = degree_of_schubert(&w, &rho);
        chk.is(degree == rat_int(expected[r - 1]), || {
            format!(
                "degree of the length-{r} cycle is {}, expected {}",
                format_rat(&degree),
                expected[r - 1]
            )
        });
        let reference = d_long_cycle(r, DRoute::Parking).expect("supported route");
        for route in LONG_CYCLE_ROUTES {
            let d = d_long_cycle(r, route).expect("supported route");
            chk.is(d.cap_y_form == reference.cap_y_form, || {
                format!("route {} disagrees at r = {r}", route.name())
            });
        }
    }
    chk.finish(format!(
        "degrees {:?} and {} routes per cycle",
        expected,
        LONG_CYCLE_ROUTES.len()
    ))
}

fn parking_displays() -> (bool, String) {
    let mut chk = Check::new();
    let y = |i| Poly::var(Family::CapY, 3, i);
    let expect = y(1)
        .mul(&y(2))
        .mul(&y(3))
        .scale(&rat_int(6))
        .add(&y(1).pow(2).mul(&y(2)).scale(&rat_int(3)))
        .add(&y(1).mul(&y(2).pow(2)).scale(&rat_int(3)))
        .add(&y(1).pow(2).mul(&y(3)).scale(&rat_int(3)))
        .add(&y(1).pow(3));
    let p3 = parking_polynomial(3);
    chk.is(p3 == expect, || format!("P_3 came out as {p3}"));
    for r in 0..=5usize {
        let reference = parking_polynomial(r);
        chk.is(binary_tree_sum(r) == reference, || {
            format!("binary-tree sum disagrees at r = {r}")
        });
        chk.is(parking_recurrence(r) == reference, || {
            format!("recurrence disagrees at r = {r}")
        });
    }
    chk.finish("P_3 display and three enumerations for r <= 5".to_string())
}

fn gram_permanents() -> (bool, String) {
    let mut chk = Check::new();
    for (n, value) in [(3usize, 12i64), (4, 288), (5, 34560)] {
        let report = cartan_gram_check(n);
        chk.is(report.permanent == rat_int(value), || {
            format!(
                "per(B B^T) for n = {n} is {}, expected {value}",
                format_rat(&report.permanent)
            )
        });
        chk.is(report.ok(), || {
            format!("factorial and root-height forms disagree at n = {n}")
        });
    }
    let displayed: [[i64; 6]; 6] = [
        [2, 1, 1, -1, -1, 0],
        [1, 2, 1, 1, 0, -1],
        [1, 1, 2, 0, 1, 1],
        [-1, 1, 0, 2, 1, -1],
        [-1, 0, 1, 1, 2, 1],
        [0, -1, 1, -1, 1, 2],
    ];
    let m: Vec<Vec<Rat>> = displayed
        .iter()
        .map(|row| row.iter().map(|&v| rat_int(v)).collect())
        .collect();
    chk.is(permanent(&m) == rat_int(288), || {
        "inclusion-exclusion permanent of the six-root Gram matrix is not 288".to_string()
    });
    chk.is(permanent_naive(&m) == rat_int(288), || {
        "permutation-sum permanent of the six-root Gram matrix is not 288".to_string()
    });
    chk.finish("Gram permanents 12, 288, 34560 along independent routes".to_string())
}

fn duality_sweep() -> (bool, String) {
    let start = Instant::now();
    let budget = Duration::from_secs(30);
    let mut chk = Check::new();
    let perms = all_perms(4);
    let degrees: Vec<Poly> = perms.iter().map(|w| d_integration(w).y_form.clone()).collect();
    for u in &perms {
        let su = schubert_poly(u);
        for (w, d) in perms.iter().zip(&degrees) {
            let pairing = d_pairing(&su, d);
            let expect = if u == w { Rat::one() } else { Rat::zero() };
            chk.is(pairing == expect, || {
                format!(
                    "pairing at (u, w) = ({u}, {w}) is {}",
                    format_rat(&pairing)
                )
            });
        }
    }
    let elapsed = start.elapsed();
    chk.is(elapsed <= budget, || {
        format!("runtime {elapsed:.2?} exceeds budget {budget:?}")
    });
    chk.finish(format!("576 pairings in {elapsed:.2?}"))
}

fn inverse_kostka_routes() -> (bool, String) {
    let mut chk = Check::new();
    let p312 = Perm::parse("312").expect("valid pattern");
    let p231 = Perm::parse("231").expect("valid pattern");
    for w in all_perms(4) {
        let length = w.length();
        let av312 = crate::permgroup::avoids(&w, &p312);
        let av231 = crate::permgroup::avoids(&w, &p231);
        let dominant = is_strictly_dominant(&w);
        for a in compositions_bounded(length, 4, length.max(1)) {
            let alternating = inverse_kostka(&a, &w, InverseKostkaMethod::Alternating)
                .expect("alternating route is total");
            let dcoeff = inverse_kostka(&a, &w, InverseKostkaMethod::DCoeff)
                .expect("coefficient route is total");
            chk.is(alternating == dcoeff, || {
                format!("alternating vs coefficient readoff at a = {a:?}, w = {w}")
            });
            if av312 {
                let closed = inverse_kostka(&a, &w, InverseKostkaMethod::Closed312)
                    .expect("w avoids 312");
                chk.is(closed == alternating, || {
                    format!("312 closed form at a = {a:?}, w = {w}")
                });
            }
            if av231 {
                let closed = inverse_kostka(&a, &w, InverseKostkaMethod::Closed231)
                    .expect("w avoids 231");
                chk.is(closed == alternating, || {
                    format!("231 closed form at a = {a:?}, w = {w}")
                });
            }
            if dominant {
                let closed = strictly_dominant_inverse_kostka(&a, &w)
                    .expect("w is strictly dominant");
                if let Some(value) = closed {
                    chk.is(value == alternating, || {
                        format!("strictly dominant closed form at a = {a:?}, w = {w}")
                    });
                }
            }
        }
    }

    let a = [1usize, 0, 0, 3, 0, 2, 1, 0, 0, 2];
    let w = long_cycle(9);
    let closed = inverse_kostka(&a, &w, InverseKostkaMethod::Closed312)
        .expect("the long cycle avoids 312");
    chk.is(closed == -Rat::one(), || {
        format!("closed-form ten-letter entry is {}", format_rat(&closed))
    });
    let d = d_long_cycle(9, DRoute::TwoPowerExpansion).expect("supported route");
    let e: Vec<u32> = a.iter().map(|&v| v as u32).collect();
    let mut expansion = d.y_form.coefficient(&e);
    for &ai in &a {
        expansion *= rat_factorial(ai as u64);
    }
    chk.is(expansion == -Rat::one(), || {
        format!("two-power ten-letter entry is {}", format_rat(&expansion))
    });
    chk.finish("routes agree on S_4 and on the ten-letter entry".to_string())
}

fn demazure_lambdas() -> [[u32; 4]; 3] {
    [[3, 2, 1, 0], [2, 2, 1, 0], [2, 1, 1, 0]]
}

fn demazure_sweep() -> (bool, String) {
    let mut chk = Check::new();
    let mut swept = 0usize;
    for w in all_perms(4) {
        let Ok(b) = b_of(&w) else {
            continue;
        };
        swept += 1;
        for lambda in demazure_lambdas() {
            let ch = demazure_character(&lambda, &w).expect("w avoids 312");
            let mu: Vec<usize> = lambda.iter().map(|&v| v as usize).collect();
            let ones = [1usize; 4];
            let tableaux = flagged_schur_tableaux(&mu, &ones, &b, 4);
            chk.is(tableaux == ch, || {
                format!("tableau sum vs character at w = {w}, lambda = {lambda:?}")
            });
            let det = flagged_schur_det(&mu, &ones, &b, 4);
            chk.is(det == ch, || {
                format!("determinant vs character at w = {w}, lambda = {lambda:?}")
            });
            let spec = GTPolytopeSpec::new(lambda.to_vec(), w.clone())
                .expect("valid polytope data");
            chk.is(gt_generating_sum(&spec) == ch, || {
                format!("lattice generating sum vs character at w = {w}, lambda = {lambda:?}")
            });
            let dim_det = demazure_dimension(&lambda, &w, DimensionRoute::BinomialDet)
                .expect("w avoids 312");
            let dim_ch = demazure_dimension(&lambda, &w, DimensionRoute::CharacterAtOne)
                .expect("w avoids 312");
            let count = Rat::from_integer(gt_count(&spec));
            chk.is(dim_det == dim_ch, || {
                format!("determinant vs character-at-one dimension at w = {w}, lambda = {lambda:?}")
            });
            chk.is(dim_det == count, || {
                format!("dimension vs lattice count at w = {w}, lambda = {lambda:?}")
            });
            let volume = gt_volume(&spec).expect("counting function is a polynomial");
            let point: Vec<Rat> = lambda.iter().map(|&v| rat_int(v as i64)).collect();
            let degree_value = d_integration(&w).y_form.evaluate(&point);
            chk.is(volume == degree_value, || {
                format!("volume vs degree value at w = {w}, lambda = {lambda:?}")
            });
        }
    }
    chk.is(swept == 14, || {
        format!("expected 14 flagged permutations, saw {swept}")
    });
    chk.finish("14 permutations x 3 highest weights".to_string())
}

fn forward_differences(values: &[Rat]) -> Vec<Rat> {
    values.windows(2).map(|pair| &pair[1] - &pair[0]).collect()
}

fn dimension_interpolation() -> (bool, String) {
    let mut chk = Check::new();
    for w in all_perms(4) {
        if b_of(&w).is_err() {
            continue;
        }
        let length = w.length();
        for lambda in demazure_lambdas() {
            let values: Vec<Rat> = (0..=(length as u32 + 1))
                .map(|k| {
                    let scaled: Vec<u32> = lambda.iter().map(|&v| v * k).collect();
                    demazure_dimension(&scaled, &w, DimensionRoute::BinomialDet)
                        .expect("w avoids 312")
                })
                .collect();
            let mut diffs = values;
            for _ in 0..length {
                diffs = forward_differences(&diffs);
            }
            chk.is(diffs[0] == diffs[1], || {
                format!("growth exceeds degree {length} at w = {w}, lambda = {lambda:?}")
            });
            let leading = &diffs[0] / rat_factorial(length as u64);
            let point: Vec<Rat> = lambda.iter().map(|&v| rat_int(v as i64)).collect();
            let degree_value = d_integration(&w).y_form.evaluate(&point);
            chk.is(leading == degree_value, || {
                format!(
                    "leading coefficient {} vs degree value {} at w = {w}, lambda = {lambda:?}",
                    format_rat(&leading),
                    format_rat(&degree_value)
                )
            });
            if lambda == [3, 2, 1, 0] {
                chk.is(!diffs[0].is_zero(), || {
                    format!("degree drops below {length} at w = {w} for a regular weight")
                });
            }
        }
    }
    chk.finish("dimension growth interpolated exactly".to_string())
}

fn littlewood_richardson_routes() -> (bool, String) {
    let mut chk = Check::new();
    let perms = all_perms(3);
    for w in &perms {
        chk.is(coproduct_check(w), || format!("coproduct fails at w = {w}"));
        for u in &perms {
            if !bruhat_leq(u, w) {
                continue;
            }
            let via_degrees = lr_via_degrees(u, w);
            for (v, c) in &via_degrees {
                chk.is(c.is_integer() && !c.is_negative(), || {
                    format!(
                        "coefficient {} at (u, v, w) = ({u}, {v}, {w}) is not a nonnegative integer",
                        format_rat(c)
                    )
                });
            }
            for v in &perms {
                if u.length() + v.length() != w.length() {
                    continue;
                }
                let expect = via_degrees.get(&v.trim()).cloned().unwrap_or_else(Rat::zero);
                let product = lr_coefficients(u, v).expect("product route is total");
                let got = product
                    .get(&w.trim())
                    .cloned()
                    .unwrap_or_else(BigInt::zero);
                chk.is(Rat::from_integer(got.clone()) == expect, || {
                    format!("product vs degree-pairing route at (u, v, w) = ({u}, {v}, {w})")
                });
                let alternating = lr_coefficients_alternating(u, v, 5)
                    .expect("ambient group is large enough");
                let got_alt = alternating
                    .get(&w.trim())
                    .cloned()
                    .unwrap_or_else(BigInt::zero);
                chk.is(got_alt == got, || {
                    format!("Kostka route disagrees at (u, v, w) = ({u}, {v}, {w})")
                });
            }
        }
    }
    chk.finish("three routes and the coproduct over S_3".to_string())
}

fn conjecture_fidelity() -> (bool, String) {
    let mut chk = Check::new();
    let rhs = conjecture_rhs(&Perm::parse("41532").expect("valid one-line"))
        .expect("41532 is special");
    let y = |i| Poly::var(Family::Y, 5, i);
    let vandermonde = |a: Poly, b: Poly, c: Poly| {
        a.sub(&b).mul(&a.sub(&c)).mul(&b.sub(&c))
    };
    let expect = vandermonde(y(1), y(2), y(4))
        .sub(&vandermonde(y(1), y(2), y(5)))
        .sub(&vandermonde(y(1), y(3), y(4)))
        .add(&vandermonde(y(1), y(3), y(5)))
        .add(&vandermonde(y(2), y(3), y(4)))
        .sub(&vandermonde(y(2), y(3), y(5)))
        .scale(&rat(1, 30));
    chk.is(rhs == expect, || "six-term display not reproduced".to_string());

    let rows = conjecture_report(3);
    chk.is(rows.len() == 7, || {
        format!("expected 7 report rows, saw {}", rows.len())
    });
    for row in &rows {
        chk.is(
            row.outcome == ConjectureOutcome::UnequalDegreeMismatch,
            || {
                format!(
                    "w = {} classified as {} instead of a degree mismatch",
                    row.w,
                    row.outcome.name()
                )
            },
        );
    }
    chk.finish("evaluator matches the display; report classifies all rows".to_string())
}

fn random_poly<R: Rng>(rng: &mut R, arity: usize) -> Poly {
    let mut p = Poly::zero(Family::Y, arity);
    for _ in 0..rng.gen_range(2..=4) {
        let mut e = vec![0u32; arity];
        let mut budget = 4u32;
        for slot in e.iter_mut() {
            let v = rng.gen_range(0..=budget.min(2));
            *slot = v;
            budget -= v;
        }
        let num = rng.gen_range(-9i64..=9);
        if num == 0 {
            continue;
        }
        let den = rng.gen_range(1i64..=4);
        p = p.add(&Poly::monomial(Family::Y, arity, &e, rat(num, den)));
    }
    p
}

fn operator_relations() -> (bool, String) {
    let mut chk = Check::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0f2a_6d31);
    for round in 0..24usize {
        let n = 2 + round % 3;
        let f = random_poly(&mut rng, n);
        let g = random_poly(&mut rng, n);
        for i in 1..n {
            chk.is(
                divided_difference(i, &divided_difference(i, &f)).is_zero(),
                || format!("difference operator {i} does not square to zero"),
            );
            chk.is(
                integrate_i(i, &integrate_i(i, &f)).is_zero(),
                || format!("integration operator {i} does not square to zero"),
            );
            let t = demazure_t(i, &f);
            chk.is(demazure_t(i, &t) == t, || {
                format!("isobaric operator {i} is not idempotent")
            });
            chk.is(
                d_pairing(&divided_difference(i, &f), &g)
                    == d_pairing(&f, &integrate_i(i, &g)),
                || format!("operators {i} are not adjoint under the pairing"),
            );
        }
        for i in 1..n.saturating_sub(1) {
            let lhs = divided_difference(
                i,
                &divided_difference(i + 1, &divided_difference(i, &f)),
            );
            let rhs = divided_difference(
                i + 1,
                &divided_difference(i, &divided_difference(i + 1, &f)),
            );
            chk.is(lhs == rhs, || {
                format!("difference braid fails at {i}, {}", i + 1)
            });
            let lhs = integrate_i(i, &integrate_i(i + 1, &integrate_i(i, &f)));
            let rhs = integrate_i(i + 1, &integrate_i(i, &integrate_i(i + 1, &f)));
            chk.is(lhs == rhs, || {
                format!("integration braid fails at {i}, {}", i + 1)
            });
            let lhs = demazure_t(i, &demazure_t(i + 1, &demazure_t(i, &f)));
            let rhs = demazure_t(i + 1, &demazure_t(i, &demazure_t(i + 1, &f)));
            chk.is(lhs == rhs, || {
                format!("isobaric braid fails at {i}, {}", i + 1)
            });
        }
        if n == 4 {
            chk.is(
                divided_difference(1, &divided_difference(3, &f))
                    == divided_difference(3, &divided_difference(1, &f)),
                || "distant difference operators do not commute".to_string(),
            );
            chk.is(
                integrate_i(1, &integrate_i(3, &f)) == integrate_i(3, &integrate_i(1, &f)),
                || "distant integration operators do not commute".to_string(),
            );
            chk.is(
                demazure_t(1, &demazure_t(3, &f)) == demazure_t(3, &demazure_t(1, &f)),
                || "distant isobaric operators do not commute".to_string(),
            );
        }
    }
    let total = chk.checks;
    chk.is(total >= 200, || {
        format!("only {total} relation checks were generated")
    });
    chk.finish(format!("{total} randomized relation checks"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_cover_all_ids() {
        for id in 1..=CRITERION_COUNT {
            assert!(!criterion_name(id).is_empty());
        }
    }

    #[test]
    fn check_accumulator_reports_first_failure() {
        let mut chk = Check::new();
        chk.is(true, || unreachable!());
        chk.is(false, || "broken".to_string());
        chk.is(false, || "also broken".to_string());
        let (passed, detail) = chk.finish("demo".to_string());
        assert!(!passed);
        assert!(detail.contains("3 exact checks"));
        assert!(detail.contains("2 failed"));
        assert!(detail.contains("broken"));
    }
}
