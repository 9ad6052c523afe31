//! Parking functions and the degree polynomial of the long cycle
//! `s_1 s_2 ... s_r` in the symmetric group on `r + 1` letters.
//!
//! The parking polynomial `P_r` is the generating sum `Y_{b_1} ... Y_{b_r}`
//! over parking functions of length `r`; the degree polynomial of the
//! long cycle is `P_r(Y_r, ..., Y_1) / r!`. This module computes it by
//! several independent routes (parking sum, ballot sum, nested
//! integration, two determinants, the signed composition expansion,
//! increasing binary trees, the Kreweras-style recurrence, and plain
//! chain enumeration) so they can be cross-checked exactly.
//!
//! The value `P_r(l_1 - l_2, ..., l_r - l_{r+1})` also counts the
//! lattice points of the order-polytope-like region cut out by a weakly
//! decreasing sequence bounded above by `l`; the generalization of
//! parking functions behind that count is not materialized here, only
//! the polynomial value.

use crate::degrees::{
    d_chains, divided_power_entry, monomial_matrix_det, DRoute, DegreePolynomial,
};
use crate::exactpoly::{binom, integrate_aux, rat_factorial, Family, Poly, Rat};
use crate::permgroup::{all_perms, Perm};
use num_traits::{One, Zero};

/// Errors raised by long-cycle computations.
#[derive(Debug, thiserror::Error)]
pub enum ParkingError {
    #[error("route {0} does not compute the long-cycle degree polynomial")]
    UnsupportedRoute(&'static str),
}

/// The long cycle `s_1 s_2 ... s_r`, with one-line notation
/// `(2, 3, ..., r + 1, 1)`.
pub fn long_cycle(r: usize) -> Perm {
    let mut word: Vec<usize> = (2..=r + 1).collect();
    word.push(1);
    Perm::from_one_line(word).expect("one-line notation is a permutation")
}

/// Whether `b` is a parking function: each entry is in `1..=len` and at
/// least `k` entries are `<= k` for every `k`.
pub fn is_parking_function(b: &[usize]) -> bool {
    let r = b.len();
    if b.iter().any(|&v| v < 1 || v > r) {
        return false;
    }
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &v)| v <= i + 1)
}

/// All parking functions of length `r`, in lexicographic order.
pub fn parking_functions(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut b = vec![1usize; r];
    if r == 0 {
        out.push(b);
        return out;
    }
    loop {
        if is_parking_function(&b) {
            out.push(b.clone());
        }
        let mut pos = r;
        while pos > 0 && b[pos - 1] == r {
            b[pos - 1] = 1;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        b[pos - 1] += 1;
    }
    out
}

/// The parking polynomial `P_r = sum Y_{b_1} ... Y_{b_r}` over parking
/// functions of length `r`, an arity-`r` polynomial in root coordinates.
pub fn parking_polynomial(r: usize) -> Poly {
    let mut out = Poly::zero(Family::CapY, r);
    for b in parking_functions(r) {
        let mut e = vec![0u32; r];
        for &v in &b {
            e[v - 1] += 1;
        }
        out = out.add(&Poly::monomial(Family::CapY, r, &e, Rat::one()));
    }
    out
}

/// Weight sum over increasing binary trees with `r` vertices. Each tree
/// is reached through its in-order word; the minimum label splits the
/// word into the left and right subtrees. A subtree occupying leaf
/// slots `lo..=lo+m` with left subword length `a` contributes the
/// factor `Y_lo + ... + Y_{lo+a}` at its root.
pub fn binary_tree_sum(r: usize) -> Poly {
    if r == 0 {
        return Poly::one(Family::CapY, 0);
    }
    fn weight(word: &[usize], lo: usize, r: usize) -> Poly {
        if word.is_empty() {
            return Poly::one(Family::CapY, r);
        }
        let m = word
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .expect("word is nonempty")
            .0;
        let mut wt = Poly::zero(Family::CapY, r);
        for slot in lo..=lo + m {
            wt = wt.add(&Poly::var(Family::CapY, r, slot));
        }
        wt.mul(&weight(&word[..m], lo, r))
            .mul(&weight(&word[m + 1..], lo + m + 1, r))
    }
    let mut total = Poly::zero(Family::CapY, r);
    for word in all_perms(r) {
        total = total.add(&weight(&word.one_line(), 1, r));
    }
    total
}

fn shift_vars(p: &Poly, arity: usize, offset: usize) -> Poly {
    if p.arity() == 0 {
        return p.with_arity(arity);
    }
    let images: Vec<Poly> = (1..=p.arity())
        .map(|i| Poly::var(Family::CapY, arity, i + offset))
        .collect();
    p.substitute(&images)
}

/// The parking polynomial by the interval-splitting recurrence
/// `P_r = sum_k C(r-1, k-1) (Y_1 + ... + Y_k) P_{k-1}(Y_1..Y_{k-1})
/// P_{r-k}(Y_{k+1}..Y_r)` with `P_0 = 1`. The binomial factor counts
/// the interleavings of two saturated chains when an interval splits
/// into a product of two smaller intervals.
pub fn parking_recurrence(r: usize) -> Poly {
    let mut memo: Vec<Poly> = vec![Poly::one(Family::CapY, 0)];
    for m in 1..=r {
        let mut acc = Poly::zero(Family::CapY, m);
        for k in 1..=m {
            let mut lin = Poly::zero(Family::CapY, m);
            for i in 1..=k {
                lin = lin.add(&Poly::var(Family::CapY, m, i));
            }
            let left = shift_vars(&memo[k - 1], m, 0);
            let right = shift_vars(&memo[m - k], m, k);
            let interleavings = Rat::from_integer(binom(m as i64 - 1, k as i64 - 1));
            acc = acc.add(&lin.mul(&left).mul(&right).scale(&interleavings));
        }
        memo.push(acc);
    }
    memo.pop().expect("memo holds entries up to r")
}

/// Inverse Schubert-Kostka entry against the long cycle: the vector
/// `(a_1, ..., a_r, a_{r+1} + 1)` must split into blocks `(0, ..., 0, l)`
/// with `l - 1` zeros each; with `k` blocks the entry is
/// `(-1)^{r+1-k}`, otherwise zero.
pub fn long_cycle_inverse_kostka(a: &[usize], r: usize) -> Rat {
    let mut v = a.to_vec();
    if v.len() > r + 1 && v[r + 1..].iter().any(|&x| x != 0) {
        return Rat::zero();
    }
    v.resize(r + 1, 0);
    v[r] += 1;
    let mut blocks = 0usize;
    let mut zeros = 0usize;
    for &x in &v {
        if x == 0 {
            zeros += 1;
        } else {
            if x != zeros + 1 {
                return Rat::zero();
            }
            blocks += 1;
            zeros = 0;
        }
    }
    if zeros > 0 {
        return Rat::zero();
    }
    let sign = Rat::one();
    if (r + 1 - blocks) % 2 == 1 {
        -sign
    } else {
        sign
    }
}

fn reverse_and_scale(p: &Poly, r: usize) -> Poly {
    let reversed = if r == 0 {
        p.clone()
    } else {
        let images: Vec<Poly> = (1..=r)
            .map(|i| Poly::var(Family::CapY, r, r + 1 - i))
            .collect();
        p.substitute(&images)
    };
    reversed.scale(&rat_factorial(r as u64).recip())
}

fn ballot_sum(r: usize) -> Poly {
    let mut out = Poly::zero(Family::CapY, r);
    let mut c = vec![0u32; r];
    fn rec(pos: usize, used: u32, r: usize, c: &mut Vec<u32>, out: &mut Poly) {
        if pos == r {
            if used as usize == r {
                let mut coeff = Rat::one();
                for &ci in c.iter() {
                    coeff /= rat_factorial(ci as u64);
                }
                *out = out.add(&Poly::monomial(Family::CapY, r, c, coeff));
            }
            return;
        }
        let cap = if pos + 1 < r { pos as u32 + 1 } else { r as u32 };
        for v in 0..=cap.saturating_sub(used) {
            c[pos] = v;
            rec(pos + 1, used + v, r, c, out);
            c[pos] = 0;
        }
    }
    rec(0, 0, r, &mut c, &mut out);
    out
}

fn nested_integral_y(r: usize) -> Poly {
    if r == 0 {
        return Poly::one(Family::Y, 1);
    }
    let prev = nested_integral_y(r - 1);
    let mut images: Vec<Poly> = (1..r).map(|i| Poly::var(Family::Y, r + 2, i)).collect();
    images.push(Poly::var(Family::Y, r + 2, r + 2));
    let lifted = prev.substitute(&images);
    let lower = Poly::var(Family::Y, r + 1, r + 1);
    let upper = Poly::var(Family::Y, r + 1, r);
    integrate_aux(&lifted, &lower, &upper)
}

fn two_power_sum(r: usize) -> Poly {
    let n = r + 1;
    let mut out = Poly::zero(Family::Y, n);
    let mut parts: Vec<usize> = Vec::new();
    fn rec(remaining: usize, parts: &mut Vec<usize>, out: &mut Poly, r: usize) {
        let n = r + 1;
        if remaining == 0 {
            let k = parts.len();
            let mut e = vec![0u32; n];
            let mut coeff = Rat::one();
            let mut s = 0usize;
            for (j, &part) in parts.iter().enumerate() {
                s += part;
                if j + 1 < k {
                    e[s - 1] += part as u32;
                    coeff /= rat_factorial(part as u64);
                } else {
                    e[n - 1] += part as u32 - 1;
                    coeff /= rat_factorial(part as u64 - 1);
                }
            }
            if (n - k) % 2 == 1 {
                coeff = -coeff;
            }
            *out = out.add(&Poly::monomial(Family::Y, n, &e, coeff));
            return;
        }
        for part in 1..=remaining {
            parts.push(part);
            rec(remaining - part, parts, out, r);
            parts.pop();
        }
    }
    rec(n, &mut parts, &mut out, r);
    out
}

/// Degree polynomial of the long cycle `s_1 ... s_r` by the requested
/// route. All routes agree on the canonical root-coordinate form.
pub fn d_long_cycle(r: usize, route: DRoute) -> Result<DegreePolynomial, ParkingError> {
    assert!(r >= 1, "the long cycle needs at least one letter");
    let w = long_cycle(r);
    let id = Perm::identity(r + 1);
    match route {
        DRoute::Parking => {
            let cap = reverse_and_scale(&parking_polynomial(r), r);
            Ok(DegreePolynomial::from_cap_y(id, w, cap, route))
        }
        DRoute::Ballot => Ok(DegreePolynomial::from_cap_y(id, w, ballot_sum(r), route)),
        DRoute::NestedIntegral => Ok(DegreePolynomial::from_y(
            id,
            w,
            nested_integral_y(r),
            route,
        )),
        DRoute::DetFull => {
            let y_form = monomial_matrix_det(r + 1, r + 1, |i, j| {
                let b = if i <= r {
                    i as i64 - j as i64 + 1
                } else {
                    r as i64 + 1 - j as i64
                };
                let (e, coeff) = divided_power_entry(b)?;
                Some((i, e, coeff))
            });
            Ok(DegreePolynomial::from_y(id, w, y_form, route))
        }
        DRoute::DetSteck => {
            let restricted = monomial_matrix_det(r, r, |i, j| {
                let (e, coeff) = divided_power_entry(i as i64 - j as i64 + 1)?;
                Some((i, e, coeff))
            });
            Ok(DegreePolynomial::from_y(
                id,
                w,
                restricted.with_arity(r + 1),
                route,
            ))
        }
        DRoute::TwoPowerExpansion => Ok(DegreePolynomial::from_y(id, w, two_power_sum(r), route)),
        DRoute::Trees => {
            let cap = reverse_and_scale(&binary_tree_sum(r), r);
            Ok(DegreePolynomial::from_cap_y(id, w, cap, route))
        }
        DRoute::Recurrence => {
            let cap = reverse_and_scale(&parking_recurrence(r), r);
            Ok(DegreePolynomial::from_cap_y(id, w, cap, route))
        }
        DRoute::Chains => Ok(d_chains(&id, &w)),
        other => Err(ParkingError::UnsupportedRoute(other.name())),
    }
}

/// The routes [`d_long_cycle`] accepts, in presentation order.
pub const LONG_CYCLE_ROUTES: [DRoute; 9] = [
    DRoute::Parking,
    DRoute::Ballot,
    DRoute::NestedIntegral,
    DRoute::DetFull,
    DRoute::DetSteck,
    DRoute::TwoPowerExpansion,
    DRoute::Trees,
    DRoute::Recurrence,
    DRoute::Chains,
];
