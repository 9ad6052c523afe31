//! Divided difference, Demazure, and integration operators.
//!
//! For a polynomial `f` and `1 <= i < arity`:
//!
//! * `A_i f = (f - s_i f) / (x_i - x_{i+1})`,
//! * `T_i f = (z_i f - z_{i+1} s_i f) / (z_i - z_{i+1})`,
//! * `I_i g` integrates `g(y_1, ..., y_i - t, y_{i+1} + t, ..., y_n)`
//!   over `t` from `0` to `y_i - y_{i+1}`.
//!
//! `A_i` and `I_i` square to zero and satisfy the braid relations; `T_i`
//! is idempotent and satisfies the braid relations. [`apply_word`] applies
//! a sequence of such operators with the first letter acting first.
//!
//! [`integrate_i_generic`] evaluates the action of `I_j` on monomials in
//! the simple-root coordinates `Y` through a Cartan matrix, which agrees
//! with `I_j` in type A and extends it to arbitrary Cartan data.

use crate::exactpoly::{divides_exactly, rat_int, Poly, Rat};
use crate::permgroup::CartanMatrix;

/// Selects which operator [`apply_word`] iterates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    DividedDifference,
    Demazure,
    Integration,
}

fn divide_by_var_difference(num: &Poly, i: usize, what: &str) -> Poly {
    let arity = num.arity();
    let den = Poly::var(num.family(), arity, i).sub(&Poly::var(num.family(), arity, i + 1));
    divides_exactly(&den, num)
        .expect("difference of distinct variables is nonzero")
        .unwrap_or_else(|| panic!("{what}: numerator must be divisible by v{i} - v{}", i + 1))
}

/// Divided difference `A_i f = (f - s_i f) / (x_i - x_{i+1})`.
pub fn divided_difference(i: usize, f: &Poly) -> Poly {
    assert!(i >= 1 && i < f.arity(), "operator index out of range");
    let num = f.sub(&f.swap_vars(i, i + 1));
    divide_by_var_difference(&num, i, "divided difference")
}

/// Demazure operator `T_i f = (z_i f - z_{i+1} s_i f) / (z_i - z_{i+1})`.
pub fn demazure_t(i: usize, f: &Poly) -> Poly {
    assert!(i >= 1 && i < f.arity(), "operator index out of range");
    let zi = Poly::var(f.family(), f.arity(), i);
    let zi1 = Poly::var(f.family(), f.arity(), i + 1);
    let num = zi.mul(f).sub(&zi1.mul(&f.swap_vars(i, i + 1)));
    divide_by_var_difference(&num, i, "Demazure operator")
}

/// Integration operator
/// `I_i g = integral from 0 to y_i - y_{i+1} of
/// g(y_1, ..., y_i - t, y_{i+1} + t, ..., y_n) dt`.
pub fn integrate_i(i: usize, g: &Poly) -> Poly {
    let n = g.arity();
    assert!(i >= 1 && i < n, "operator index out of range");
    let fam = g.family();
    let t = Poly::var(fam, n + 1, n + 1);
    let images: Vec<Poly> = (1..=n)
        .map(|k| {
            let v = Poly::var(fam, n + 1, k);
            if k == i {
                v.sub(&t)
            } else if k == i + 1 {
                v.add(&t)
            } else {
                v
            }
        })
        .collect();
    let integrand = g.substitute(&images);
    let lower = Poly::zero(fam, n);
    let upper = Poly::var(fam, n, i).sub(&Poly::var(fam, n, i + 1));
    crate::exactpoly::integrate_aux(&integrand, &lower, &upper)
}

/// Action of the integration operator for letter `j` on polynomials in
/// the root coordinates `Y_1, ..., Y_r`, driven by a Cartan matrix of
/// rank `r`. On a monomial `Y^c` it produces
///
/// ```text
/// sum over (0 <= k_m <= c_m) of
///   (-1)^k  prod_m [ binom(c_m, k_m) a_{m j}^{k_m} ]
///   Y^{c - k_vec} Y_j^{k + 1} / (k + 1),        k = sum_m k_m.
/// ```
pub fn integrate_i_generic(j: usize, g: &Poly, a: &CartanMatrix) -> Poly {
    let r = a.rank();
    assert_eq!(g.arity(), r, "polynomial arity must equal the Cartan rank");
    assert!(j >= 1 && j <= r, "letter out of range for the Cartan matrix");
    let mut out = Poly::zero(g.family(), r);
    for (e, c) in g.terms_desc() {
        let active: Vec<usize> = (0..r).filter(|&m| e.0[m] > 0).collect();
        let mut choice = vec![0u32; active.len()];
        loop {
            let mut coeff = c.clone();
            let mut k_total: u32 = 0;
            let mut degenerate = false;
            for (slot, &m) in active.iter().enumerate() {
                let km = choice[slot];
                if km > 0 {
                    let amj = a.entry(m + 1, j);
                    if amj == 0 {
                        degenerate = true;
                        break;
                    }
                    let mut factor = crate::exactpoly::binom(e.0[m] as i64, km as i64);
                    for _ in 0..km {
                        factor *= amj;
                    }
                    coeff *= Rat::from_integer(factor);
                }
                k_total += km;
            }
            if !degenerate {
                if k_total % 2 == 1 {
                    coeff = -coeff;
                }
                coeff /= rat_int((k_total + 1) as i64);
                let mut e2 = e.0.clone();
                for (slot, &m) in active.iter().enumerate() {
                    e2[m] -= choice[slot];
                }
                e2[j - 1] += k_total + 1;
                out = out.add(&Poly::monomial(g.family(), r, &e2, coeff));
            }
            // Advance the multi-index odometer.
            let mut slot = 0;
            loop {
                if slot == active.len() {
                    break;
                }
                if choice[slot] < e.0[active[slot]] {
                    choice[slot] += 1;
                    break;
                }
                choice[slot] = 0;
                slot += 1;
            }
            if slot == active.len() {
                break;
            }
        }
    }
    out
}

/// Applies the chosen operator for each letter of `word`, first letter
/// first, starting from `seed`.
pub fn apply_word(word: &[usize], seed: &Poly, kind: OperatorKind) -> Poly {
    let mut acc = seed.clone();
    for &i in word {
        acc = match kind {
            OperatorKind::DividedDifference => divided_difference(i, &acc),
            OperatorKind::Demazure => demazure_t(i, &acc),
            OperatorKind::Integration => integrate_i(i, &acc),
        };
    }
    acc
}

/// Applies [`integrate_i_generic`] for each letter of `word`, first
/// letter first, starting from the constant 1.
pub fn apply_word_generic(word: &[usize], a: &CartanMatrix) -> Poly {
    let mut acc = Poly::one(crate::exactpoly::Family::CapY, a.rank());
    for &j in word {
        acc = integrate_i_generic(j, &acc, a);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, Family};
    use proptest::prelude::*;

    fn x(arity: usize, i: usize) -> Poly {
        Poly::var(Family::X, arity, i)
    }

    fn z(arity: usize, i: usize) -> Poly {
        Poly::var(Family::Z, arity, i)
    }

    fn yv(arity: usize, i: usize) -> Poly {
        Poly::var(Family::Y, arity, i)
    }

    fn cy(arity: usize, i: usize) -> Poly {
        Poly::var(Family::CapY, arity, i)
    }

    #[test]
    fn divided_difference_golden_values() {
        assert_eq!(divided_difference(1, &x(2, 1)), Poly::one(Family::X, 2));
        let f = x(3, 1).pow(2).mul(&x(3, 2));
        assert_eq!(divided_difference(2, &f), x(3, 1).pow(2));
        assert_eq!(divided_difference(1, &f), x(3, 1).mul(&x(3, 2)));
        assert!(divided_difference(1, &x(3, 3)).is_zero());
    }

    #[test]
    fn demazure_golden_values() {
        assert_eq!(demazure_t(1, &z(2, 1)), z(2, 1).add(&z(2, 2)));
        assert_eq!(demazure_t(1, &Poly::one(Family::Z, 2)), Poly::one(Family::Z, 2));
        assert!(demazure_t(1, &z(2, 2)).is_zero());
    }

    #[test]
    fn integration_golden_values() {
        let one = Poly::one(Family::Y, 2);
        assert_eq!(integrate_i(1, &one), yv(2, 1).sub(&yv(2, 2)));
        // Direct hand integration gives
        // I_2(I_1(1)) = (y1 - y2)(y2 - y3) + (y2 - y3)^2 / 2.
        let d = apply_word(&[1, 2], &Poly::one(Family::Y, 3), OperatorKind::Integration);
        let y1 = yv(3, 1);
        let y2 = yv(3, 2);
        let y3 = yv(3, 3);
        let cap1 = y1.sub(&y2);
        let cap2 = y2.sub(&y3);
        let expect = cap1.mul(&cap2).add(&cap2.pow(2).scale(&rat(1, 2)));
        assert_eq!(d, expect);
    }

    #[test]
    fn generic_integration_matches_type_a() {
        let a = CartanMatrix::type_a(2);
        for word in [vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]] {
            let generic = apply_word_generic(&word, &a);
            let direct = apply_word(&word, &Poly::one(Family::Y, 3), OperatorKind::Integration);
            // Convert y coordinates to root coordinates Y1 = y1 - y2,
            // Y2 = y2 - y3 by substituting y1 = Y1 + Y2, y2 = Y2, y3 = 0.
            let images = vec![
                cy(2, 1).add(&cy(2, 2)),
                cy(2, 2),
                Poly::zero(Family::CapY, 2),
            ];
            assert_eq!(direct.substitute(&images), generic, "word {word:?}");
        }
    }

    #[test]
    fn generic_integration_two_letter_display() {
        // I_j(Y_i) = Y_i Y_j - a_ij Y_j^2 / 2 for distinct letters.
        let a = CartanMatrix::new(vec![vec![2, -3], vec![-5, 2]]).unwrap();
        let got = integrate_i_generic(2, &cy(2, 1), &a);
        let expect = cy(2, 1)
            .mul(&cy(2, 2))
            .add(&cy(2, 2).pow(2).scale(&rat(3, 2)));
        assert_eq!(got, expect);
    }

    #[test]
    fn generic_integration_is_nilpotent() {
        let a = CartanMatrix::new(vec![vec![2, -3], vec![-5, 2]]).unwrap();
        for j in 1..=2 {
            let once = integrate_i_generic(j, &Poly::one(Family::CapY, 2), &a);
            let twice = integrate_i_generic(j, &once, &a);
            assert!(twice.is_zero(), "I_{j} applied twice must vanish");
        }
    }

    #[test]
    fn operator_word_for_staircase() {
        // Applying A along a reduced word of the longest element sends
        // the staircase monomial to 1.
        let staircase = x(3, 1).pow(2).mul(&x(3, 2));
        let out = apply_word(&[1, 2, 1], &staircase, OperatorKind::DividedDifference);
        assert_eq!(out, Poly::one(Family::X, 3));
    }

    fn arb_poly(family: Family, arity: usize) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, arity), -3i64..=3),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = Poly::zero(family, arity);
            for (e, c) in terms {
                let m = Poly::monomial(family, arity, &e, crate::exactpoly::rat_int(c));
                p = p.add(&m);
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn divided_difference_relations(f in arb_poly(Family::X, 3)) {
            let a1 = divided_difference(1, &f);
            prop_assert!(divided_difference(1, &a1).is_zero());
            let lhs = divided_difference(1, &divided_difference(2, &a1));
            let rhs = divided_difference(2, &divided_difference(1, &divided_difference(2, &f)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn demazure_relations(f in arb_poly(Family::Z, 3)) {
            let t1 = demazure_t(1, &f);
            prop_assert_eq!(demazure_t(1, &t1), t1);
            let lhs = demazure_t(1, &demazure_t(2, &demazure_t(1, &f)));
            let rhs = demazure_t(2, &demazure_t(1, &demazure_t(2, &f)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integration_relations(g in arb_poly(Family::Y, 3)) {
            let i1 = integrate_i(1, &g);
            prop_assert!(integrate_i(1, &i1).is_zero());
            let lhs = integrate_i(1, &integrate_i(2, &i1));
            let rhs = integrate_i(2, &integrate_i(1, &integrate_i(2, &g)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integration_is_adjoint_to_divided_difference(
            f in arb_poly(Family::X, 3),
            g in arb_poly(Family::Y, 3),
        ) {
            use crate::exactpoly::d_pairing;
            let lhs = d_pairing(&f, &integrate_i(1, &g));
            let rhs = d_pairing(&divided_difference(1, &f), &g);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
