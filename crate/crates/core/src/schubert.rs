//! Schubert polynomials, the Schubert-Kostka matrix, its inverse, the
//! standard elementary monomial basis, and Littlewood-Richardson
//! coefficients.
//!
//! `schubert_poly` computes the Schubert polynomial by divided differences
//! from the staircase monomial. For a permutation in the symmetric group
//! on `n` letters the result has arity `n` and is stable under appending
//! fixed points.
//!
//! The Kostka matrix is `K_{w,a} = [x^a] S_w`; its inverse is available by
//! four methods: a signed sum over the symmetric group, closed forms for
//! 312-avoiding and 231-avoiding permutations, and readoff from the degree
//! polynomial.

use crate::exactpoly::{d_pairing, rat_factorial, Family, Poly, Rat};
use crate::operators::{apply_word, OperatorKind};
use crate::permgroup::{
    all_perms, avoids, code, flag, perm_from_code, permuted_vector, reduced_word, shape, Perm,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Errors raised by Schubert-basis computations.
#[derive(Debug, thiserror::Error)]
pub enum SchubertError {
    #[error("permutation {perm} contains a {pattern} pattern")]
    PatternPresent { perm: String, pattern: String },
    #[error("expansion would need the symmetric group on {needed} letters, cap is {cap}")]
    AmbientTooLarge { needed: usize, cap: usize },
    #[error("routes disagree: {0}")]
    RouteMismatch(String),
    #[error("schubert expansion stalled; this is a bug")]
    ExpansionStalled,
}

/// Largest symmetric group used when expanding products in the Schubert
/// basis.
pub const AMBIENT_CAP: usize = 8;

fn staircase(n: usize) -> Poly {
    let e: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    Poly::monomial(Family::X, n, &e, Rat::one())
}

/// Schubert polynomial of `w`, an `x`-family polynomial of arity `n`.
///
/// The staircase monomial is carried down by divided differences along a
/// reduced word of `w0 w`.
pub fn schubert_poly(w: &Perm) -> Poly {
    let n = w.n();
    let v = Perm::longest(n).compose(w);
    apply_word(&reduced_word(&v), &staircase(n), OperatorKind::DividedDifference)
}

/// Schubert polynomial of a vexillary (2143-avoiding) permutation as the
/// flagged Schur polynomial of its shape and flag.
pub fn schubert_vexillary(w: &Perm) -> Result<Poly, SchubertError> {
    if !avoids(w, &Perm::parse("2143").expect("valid pattern")) {
        return Err(SchubertError::PatternPresent {
            perm: w.to_string(),
            pattern: "2143".to_string(),
        });
    }
    let mu = shape(w);
    let b = flag(w);
    let a = vec![1; mu.len()];
    let s = crate::demazure::flagged_schur_tableaux(&mu, &a, &b, w.n());
    Ok(s.with_family(Family::X))
}

/// The row `a -> K_{w,a}` of the Schubert-Kostka matrix, holding the
/// exponent vectors and coefficients of the Schubert polynomial.
pub fn kostka_row(w: &Perm) -> BTreeMap<Vec<usize>, BigInt> {
    let s = schubert_poly(w);
    let mut out = BTreeMap::new();
    for (e, c) in s.terms_desc() {
        debug_assert!(c.is_integer());
        out.insert(
            e.0.iter().map(|&k| k as usize).collect::<Vec<usize>>(),
            c.to_integer(),
        );
    }
    out
}

/// All Schubert-Kostka rows for one symmetric group, materialized once.
pub struct KostkaSector {
    n: usize,
    rows: BTreeMap<Perm, BTreeMap<Vec<usize>, BigInt>>,
}

impl KostkaSector {
    pub fn new(n: usize) -> KostkaSector {
        let rows = all_perms(n)
            .into_iter()
            .map(|w| {
                let row = kostka_row(&w);
                (w, row)
            })
            .collect();
        KostkaSector { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `K_{w,a}`, zero when `x^a` does not occur in the Schubert
    /// polynomial of `w`.
    pub fn entry(&self, w: &Perm, a: &[usize]) -> BigInt {
        let key = normalize_exponent(a, self.n);
        match key {
            Some(k) => self
                .rows
                .get(w)
                .and_then(|row| row.get(&k))
                .cloned()
                .unwrap_or_else(BigInt::zero),
            None => BigInt::zero(),
        }
    }

    pub fn row(&self, w: &Perm) -> Option<&BTreeMap<Vec<usize>, BigInt>> {
        self.rows.get(w)
    }

    /// `K^{-1}_{a,w}` by the signed sum over the symmetric group.
    pub fn inverse_entry(&self, a: &[usize], w: &Perm) -> Rat {
        let n = self.n;
        let Some(a) = normalize_exponent(a, n) else {
            return Rat::zero();
        };
        let w0w = Perm::longest(n).compose(&w.extend(n));
        let rho: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
        let mut acc = BigInt::zero();
        for u in all_perms(n) {
            let urho = permuted_vector(&u, &rho);
            if urho.iter().zip(&a).any(|(&r, &ai)| r < ai) {
                continue;
            }
            let diff: Vec<usize> = urho.iter().zip(&a).map(|(&r, &ai)| r - ai).collect();
            let k = self.entry(&w0w, &diff);
            if u.length() % 2 == 0 {
                acc += k;
            } else {
                acc -= k;
            }
        }
        Rat::from_integer(acc)
    }
}

/// Pads or truncates an exponent vector to length `n`; `None` when a
/// nonzero entry would be dropped, in which case the matrix entry is zero.
fn normalize_exponent(a: &[usize], n: usize) -> Option<Vec<usize>> {
    if a.len() > n && a[n..].iter().any(|&v| v != 0) {
        return None;
    }
    let mut out = a[..a.len().min(n)].to_vec();
    out.resize(n, 0);
    Some(out)
}

/// Method selector for [`inverse_kostka`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseKostkaMethod {
    /// Signed sum of Kostka entries over the symmetric group.
    Alternating,
    /// Closed form for 312-avoiding `w`.
    Closed312,
    /// Closed form for 231-avoiding `w`.
    Closed231,
    /// Readoff from the degree polynomial of `w`.
    DCoeff,
}

/// Sign of a vector being a permuted strictly decreasing staircase:
/// if `v` equals `u(rho)` for some permutation `u` returns
/// `(-1)^{length(u)}`, otherwise zero.
fn staircase_sign(v: &[usize]) -> i64 {
    let n = v.len();
    let mut uinv = Vec::with_capacity(n);
    for &vj in v {
        if vj >= n {
            return 0;
        }
        uinv.push(n - vj);
    }
    match Perm::from_one_line(uinv) {
        Ok(p) => {
            if p.length() % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Err(_) => 0,
    }
}

/// Inverse Schubert-Kostka entry `K^{-1}_{a,w}` by the chosen method.
///
/// The closed forms require the corresponding pattern avoidance and fail
/// otherwise. All methods agree where defined.
pub fn inverse_kostka(
    a: &[usize],
    w: &Perm,
    method: InverseKostkaMethod,
) -> Result<Rat, SchubertError> {
    let n = w.n();
    let Some(a) = normalize_exponent(a, n) else {
        return Ok(Rat::zero());
    };
    match method {
        InverseKostkaMethod::Alternating => {
            let w0w = Perm::longest(n).compose(w);
            let row = kostka_row(&w0w);
            let rho: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            let mut acc = BigInt::zero();
            for u in all_perms(n) {
                let urho = permuted_vector(&u, &rho);
                if urho.iter().zip(&a).any(|(&r, &ai)| r < ai) {
                    continue;
                }
                let diff: Vec<usize> = urho.iter().zip(&a).map(|(&r, &ai)| r - ai).collect();
                let k = row.get(&diff).cloned().unwrap_or_else(BigInt::zero);
                if u.length() % 2 == 0 {
                    acc += k;
                } else {
                    acc -= k;
                }
            }
            Ok(Rat::from_integer(acc))
        }
        InverseKostkaMethod::Closed312 => {
            if !avoids(w, &Perm::parse("312").expect("valid pattern")) {
                return Err(SchubertError::PatternPresent {
                    perm: w.to_string(),
                    pattern: "312".to_string(),
                });
            }
            let c = code(&Perm::longest(n).compose(w));
            let v: Vec<usize> = a.iter().zip(&c).map(|(&ai, &ci)| ai + ci).collect();
            Ok(Rat::from_integer(BigInt::from(staircase_sign(&v))))
        }
        InverseKostkaMethod::Closed231 => {
            if !avoids(w, &Perm::parse("231").expect("valid pattern")) {
                return Err(SchubertError::PatternPresent {
                    perm: w.to_string(),
                    pattern: "231".to_string(),
                });
            }
            let c = code(&w.compose(&Perm::longest(n)));
            let v: Vec<usize> = (0..n).map(|j| c[j] + a[n - 1 - j]).collect();
            let mut sign = staircase_sign(&v);
            let total: usize = a.iter().sum();
            if total % 2 == 1 {
                sign = -sign;
            }
            Ok(Rat::from_integer(BigInt::from(sign)))
        }
        InverseKostkaMethod::DCoeff => {
            let d = apply_word(
                &reduced_word(w),
                &Poly::one(Family::Y, n),
                OperatorKind::Integration,
            );
            let e: Vec<u32> = a.iter().map(|&v| v as u32).collect();
            let mut coeff = d.coefficient(&e);
            for &ai in &a {
                coeff *= rat_factorial(ai as u64);
            }
            Ok(coeff)
        }
    }
}

/// Closed form for strictly dominant `w`, whose code is a strict
/// partition `c_1 > ... > c_{k-1} > c_k = 0 = ...`. For exponents
/// supported on the first `k` coordinates the entry is the sign of the
/// permutation arranging `(a_1, ..., a_k)` as `(c_1, ..., c_k)`, or
/// zero when no such permutation exists. Exponents with support beyond
/// the first `k` coordinates are outside the closed form and yield
/// `None`.
pub fn strictly_dominant_inverse_kostka(
    a: &[usize],
    w: &Perm,
) -> Result<Option<Rat>, SchubertError> {
    for pattern in ["132", "231"] {
        if !avoids(w, &Perm::parse(pattern).expect("valid pattern")) {
            return Err(SchubertError::PatternPresent {
                perm: w.to_string(),
                pattern: pattern.to_string(),
            });
        }
    }
    let n = w.n();
    let c = code(w);
    let k = c.iter().filter(|&&v| v > 0).count() + 1;
    debug_assert!(k <= n, "a strict partition code ends in zero");
    let Some(a) = normalize_exponent(a, n) else {
        return Ok(None);
    };
    if a[k..].iter().any(|&v| v != 0) {
        return Ok(None);
    }
    for sigma in all_perms(k) {
        if (1..=k).all(|i| a[i - 1] == c[sigma.at(i) - 1]) {
            let sign = if sigma.length() % 2 == 0 {
                Rat::one()
            } else {
                -Rat::one()
            };
            return Ok(Some(sign));
        }
    }
    Ok(Some(Rat::zero()))
}

/// Report of the inversion symmetry
/// `K^{-1}_{a,w} = (-1)^{|a|} K^{-1}_{reverse(a), w0 w w0}`.
pub struct SymmetryReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub failures: Vec<(Vec<usize>, Perm)>,
}

/// Checks the inversion symmetry for every `w` in the symmetric group on
/// `n` letters and every `a` with `|a| = length(w)` and `a_i <= n`.
pub fn kostka_inverse_symmetry_check(n: usize) -> SymmetryReport {
    let sector = KostkaSector::new(n);
    let w0 = Perm::longest(n);
    let mut pairs_checked = 0;
    let mut failures = Vec::new();
    for w in all_perms(n) {
        let conj = w0.compose(&w).compose(&w0);
        for a in compositions_bounded(w.length(), n, n) {
            let lhs = sector.inverse_entry(&a, &w);
            let rev: Vec<usize> = a.iter().rev().cloned().collect();
            let mut rhs = sector.inverse_entry(&rev, &conj);
            if a.iter().sum::<usize>() % 2 == 1 {
                rhs = -rhs;
            }
            pairs_checked += 1;
            if lhs != rhs {
                failures.push((a.clone(), w.clone()));
            }
        }
    }
    SymmetryReport {
        n,
        pairs_checked,
        failures,
    }
}

/// All vectors of length `parts` with entries in `0..=bound` summing to
/// `total`.
pub fn compositions_bounded(total: usize, parts: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; parts];
    fn rec(
        slot: usize,
        remaining: usize,
        bound: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slot == cur.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = remaining.min(bound);
        for v in 0..=hi {
            cur[slot] = v;
            rec(slot + 1, remaining - v, bound, cur, out);
        }
        cur[slot] = 0;
    }
    rec(0, total, bound, &mut cur, &mut out);
    out
}

fn elem_symmetric(k: usize, vars: usize, arity: usize, family: Family) -> Poly {
    if k > vars {
        return Poly::zero(family, arity);
    }
    let mut out = Poly::zero(family, arity);
    let idx: Vec<usize> = (0..vars).collect();
    for comb in itertools::Itertools::combinations(idx.into_iter(), k) {
        let mut e = vec![0u32; arity];
        for i in comb {
            e[i] = 1;
        }
        out = out.add(&Poly::monomial(family, arity, &e, Rat::one()));
    }
    out
}

/// Standard elementary monomial `e_a`, the product over `i >= 2` of the
/// elementary symmetric polynomial `e_{a_i}(x_1, ..., x_{i-1})`. Zero
/// unless `0 <= a_i <= i - 1` for all `i`.
pub fn elementary_monomial(a: &[usize], arity: usize) -> Poly {
    if a.iter().enumerate().any(|(i, &ai)| ai > i) {
        return Poly::zero(Family::X, arity);
    }
    let mut out = Poly::one(Family::X, arity);
    for (i, &ai) in a.iter().enumerate().skip(1) {
        if ai > 0 {
            out = out.mul(&elem_symmetric(ai, i, arity, Family::X));
        }
    }
    out
}

/// Expands the Schubert polynomial of `w` over the standard elementary
/// monomials, returning the nonzero coefficients keyed by index vector.
pub fn schubert_in_e_basis(w: &Perm) -> BTreeMap<Vec<usize>, Rat> {
    let n = w.n();
    let w0 = Perm::longest(n);
    let conj = w0.compose(w).compose(&w0);
    let row = kostka_row(&conj);
    let rho: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
    let mut out: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
    let mut indices: Vec<Vec<usize>> = vec![vec![0]];
    for i in 2..=n {
        let mut next = Vec::new();
        for a in &indices {
            for v in 0..=i - 1 {
                let mut b = a.clone();
                b.push(v);
                next.push(b);
            }
        }
        indices = next;
    }
    for a in indices {
        let w0a: Vec<usize> = a.iter().rev().cloned().collect();
        let mut coeff = BigInt::zero();
        for u in all_perms(n) {
            let urho = permuted_vector(&u, &rho);
            // index = w0(a) + u(rho) - rho, entrywise; skip when negative.
            let mut idx = Vec::with_capacity(n);
            let mut ok = true;
            for j in 0..n {
                let s = w0a[j] + urho[j];
                if s < rho[j] {
                    ok = false;
                    break;
                }
                idx.push(s - rho[j]);
            }
            if !ok {
                continue;
            }
            let k = row.get(&idx).cloned().unwrap_or_else(BigInt::zero);
            if u.length() % 2 == 0 {
                coeff += k;
            } else {
                coeff -= k;
            }
        }
        if !coeff.is_zero() {
            out.insert(a, Rat::from_integer(coeff));
        }
    }
    out
}

/// Expands a polynomial in the Schubert basis by repeatedly subtracting
/// the Schubert polynomial indexed by the lex-minimal monomial.
///
/// Returns the coefficients keyed by trimmed permutations. Requires every
/// monomial `x^a` to satisfy `max_i(a_i + i) <= AMBIENT_CAP`.
pub fn expand_in_schubert_basis(p: &Poly) -> Result<BTreeMap<Perm, Rat>, SchubertError> {
    let mut out: BTreeMap<Perm, Rat> = BTreeMap::new();
    for (_, comp) in p.homogeneous_components() {
        let mut ambient = 1usize;
        for (e, _) in comp.terms_desc() {
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    ambient = ambient.max(k as usize + i + 1);
                }
            }
        }
        if ambient > AMBIENT_CAP {
            return Err(SchubertError::AmbientTooLarge {
                needed: ambient,
                cap: AMBIENT_CAP,
            });
        }
        let mut r = comp.with_arity(ambient);
        let mut last_min: Option<Vec<u32>> = None;
        while !r.is_zero() {
            let (e, c) = r
                .terms_desc()
                .min_by(|(a, _), (b, _)| a.0.cmp(&b.0))
                .map(|(e, c)| (e.0.clone(), c.clone()))
                .expect("nonzero polynomial has terms");
            if let Some(prev) = &last_min {
                if *prev >= e {
                    return Err(SchubertError::ExpansionStalled);
                }
            }
            last_min = Some(e.clone());
            let code_vec: Vec<usize> = e.iter().map(|&k| k as usize).collect();
            let w = perm_from_code(&code_vec).expect("ambient chosen to fit the code");
            let s = schubert_poly(&w);
            r = r.sub(&s.scale(&c));
            *out.entry(w.trim()).or_insert_with(Rat::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Littlewood-Richardson coefficients `c_{u,v}^w` of the product
/// `S_u S_v = sum_w c_{u,v}^w S_w`, keyed by trimmed `w`.
///
/// The product is expanded greedily in the Schubert basis. When the
/// ambient group is small enough the result is recomputed by the
/// Kostka route `c_{u,v}^w = sum_{a,b} K_{u,a} K_{v,b} K^{-1}_{a+b,w}`
/// and both routes must agree.
pub fn lr_coefficients(u: &Perm, v: &Perm) -> Result<BTreeMap<Perm, BigInt>, SchubertError> {
    let n = u.n().max(v.n());
    let su = schubert_poly(&u.extend(n));
    let sv = schubert_poly(&v.extend(n));
    let product = su.mul(&sv);
    let expansion = expand_in_schubert_basis(&product)?;
    let mut out: BTreeMap<Perm, BigInt> = BTreeMap::new();
    for (w, c) in &expansion {
        if !c.is_integer() || c.is_negative() {
            return Err(SchubertError::RouteMismatch(format!(
                "coefficient of {w} in S_{u} S_{v} is {} but must be a nonnegative integer",
                crate::exactpoly::format_rat(c)
            )));
        }
        out.insert(w.clone(), c.to_integer());
    }

    let mut ambient = n;
    for (e, _) in product.terms_desc() {
        for (i, &k) in e.0.iter().enumerate() {
            if k > 0 {
                ambient = ambient.max(k as usize + i + 1);
            }
        }
    }
    if ambient <= 6 {
        let alt = lr_coefficients_alternating(u, v, ambient)?;
        if alt != out {
            return Err(SchubertError::RouteMismatch(format!(
                "S_{u} S_{v}: product expansion {out:?} vs Kostka route {alt:?}"
            )));
        }
    }
    Ok(out)
}

/// Littlewood-Richardson coefficients by the Kostka route inside the
/// symmetric group on `m` letters: the monomial expansion of `S_u S_v`
/// is converted back through the inverse Kostka matrix.
pub fn lr_coefficients_alternating(
    u: &Perm,
    v: &Perm,
    m: usize,
) -> Result<BTreeMap<Perm, BigInt>, SchubertError> {
    assert!(
        m >= u.n().max(v.n()),
        "ambient group must contain both factors"
    );
    let sector = KostkaSector::new(m);
    let su = schubert_poly(&u.extend(m));
    let sv = schubert_poly(&v.extend(m));
    let product = su.mul(&sv);
    // Transposed index: exponent vector -> rows of the Kostka matrix
    // that contain it.
    let mut transpose: BTreeMap<Vec<usize>, Vec<(Perm, BigInt)>> = BTreeMap::new();
    for w in all_perms(m) {
        if let Some(row) = sector.row(&w) {
            for (a, k) in row {
                transpose
                    .entry(a.clone())
                    .or_default()
                    .push((w.clone(), k.clone()));
            }
        }
    }
    let rho: Vec<usize> = (0..m).map(|i| m - 1 - i).collect();
    let w0 = Perm::longest(m);
    let mut acc: BTreeMap<Perm, BigInt> = BTreeMap::new();
    for (e, coeff) in product.terms_desc() {
        debug_assert!(coeff.is_integer());
        let s: Vec<usize> = e.0.iter().map(|&k| k as usize).collect();
        let coeff = coeff.to_integer();
        for z in all_perms(m) {
            let zrho = permuted_vector(&z, &rho);
            if zrho.iter().zip(&s).any(|(&r, &si)| r < si) {
                continue;
            }
            let t: Vec<usize> = zrho.iter().zip(&s).map(|(&r, &si)| r - si).collect();
            let Some(hits) = transpose.get(&t) else {
                continue;
            };
            let sign_neg = z.length() % 2 == 1;
            for (w0w, k) in hits {
                let w = w0.compose(w0w);
                let delta = &coeff * k;
                let entry = acc.entry(w.trim()).or_insert_with(BigInt::zero);
                if sign_neg {
                    *entry -= delta;
                } else {
                    *entry += delta;
                }
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(acc)
}

/// Entry of the Gram matrix of Schubert polynomials under the
/// differential pairing, `L_{u,w} = sum_a K_{u,a} K_{w,a} a!`.
pub fn l_matrix_entry(u: &Perm, w: &Perm) -> Rat {
    let n = u.n().max(w.n());
    let su = schubert_poly(&u.extend(n));
    let sw = schubert_poly(&w.extend(n)).with_family(Family::Y);
    d_pairing(&su, &sw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat_int;

    fn p(s: &str) -> Perm {
        Perm::parse(s).unwrap()
    }

    fn x(arity: usize, i: usize) -> Poly {
        Poly::var(Family::X, arity, i)
    }

    #[test]
    fn schubert_basics() {
        assert_eq!(schubert_poly(&Perm::identity(3)), Poly::one(Family::X, 3));
        assert_eq!(
            schubert_poly(&Perm::longest(3)),
            x(3, 1).pow(2).mul(&x(3, 2))
        );
        assert_eq!(schubert_poly(&p("213")), x(3, 1));
        assert_eq!(schubert_poly(&p("132")), x(3, 1).add(&x(3, 2)));
        assert_eq!(schubert_poly(&p("231")), x(3, 1).mul(&x(3, 2)));
        assert_eq!(schubert_poly(&p("312")), x(3, 1).pow(2));
    }

    #[test]
    fn schubert_stability_under_extension() {
        for w in all_perms(3) {
            let small = schubert_poly(&w);
            let big = schubert_poly(&w.extend(5));
            assert_eq!(small.with_arity(5), big);
        }
    }

    #[test]
    fn dominant_schubert_is_one_monomial() {
        for w in all_perms(4) {
            if avoids(&w, &p("132")) {
                let c: Vec<u32> = code(&w).iter().map(|&v| v as u32).collect();
                assert_eq!(
                    schubert_poly(&w),
                    Poly::monomial(Family::X, 4, &c, Rat::one())
                );
            }
        }
    }

    #[test]
    fn vexillary_route_matches_divided_differences() {
        for w in all_perms(4) {
            if avoids(&w, &p("2143")) {
                let via_flags = schubert_vexillary(&w).unwrap();
                assert_eq!(via_flags, schubert_poly(&w), "w = {w}");
            }
        }
        assert!(schubert_vexillary(&p("2143")).is_err());
    }

    #[test]
    fn kostka_row_of_simple_reflection() {
        // S_{s_2} = x1 + x2 inside the symmetric group on 3 letters.
        let row = kostka_row(&p("132"));
        assert_eq!(row.len(), 2);
        assert_eq!(row[&vec![1, 0, 0]], BigInt::one());
        assert_eq!(row[&vec![0, 1, 0]], BigInt::one());
    }

    #[test]
    fn inverse_kostka_methods_agree_on_s3() {
        for w in all_perms(3) {
            for a in compositions_bounded(w.length(), 3, 3) {
                let alt = inverse_kostka(&a, &w, InverseKostkaMethod::Alternating).unwrap();
                let dc = inverse_kostka(&a, &w, InverseKostkaMethod::DCoeff).unwrap();
                assert_eq!(alt, dc, "w = {w}, a = {a:?}");
                if avoids(&w, &p("312")) {
                    let c312 = inverse_kostka(&a, &w, InverseKostkaMethod::Closed312).unwrap();
                    assert_eq!(alt, c312, "w = {w}, a = {a:?}");
                }
                if avoids(&w, &p("231")) {
                    let c231 = inverse_kostka(&a, &w, InverseKostkaMethod::Closed231).unwrap();
                    assert_eq!(alt, c231, "w = {w}, a = {a:?}");
                }
            }
        }
    }

    #[test]
    fn inverse_kostka_is_inverse_on_s3() {
        // Matrix identity: sum_a K^{-1}_{a,w} K_{v,a} = delta_{v,w},
        // summing over a with |a| = length(w) and entries at most 3.
        let sector = KostkaSector::new(3);
        for w in all_perms(3) {
            for v in all_perms(3) {
                if v.length() != w.length() {
                    continue;
                }
                let mut acc = Rat::zero();
                for a in compositions_bounded(w.length(), 3, 3) {
                    let ki = sector.inverse_entry(&a, &w);
                    let k = Rat::from_integer(sector.entry(&v, &a));
                    acc += ki * k;
                }
                let expect = if v == w { rat_int(1) } else { Rat::zero() };
                assert_eq!(acc, expect, "v = {v}, w = {w}");
            }
        }
    }

    #[test]
    fn inverse_kostka_long_cycle_entry_in_s10() {
        let w = Perm::from_one_line(vec![2, 3, 4, 5, 6, 7, 8, 9, 10, 1]).unwrap();
        let a = vec![1, 0, 0, 3, 0, 2, 1, 0, 0, 2];
        let got = inverse_kostka(&a, &w, InverseKostkaMethod::Closed312).unwrap();
        assert_eq!(got, rat_int(-1));
    }

    #[test]
    fn inverse_kostka_vanishes_outside_the_group() {
        let w = p("231");
        let a = vec![0, 0, 0, 2];
        assert_eq!(
            inverse_kostka(&a, &w, InverseKostkaMethod::Alternating).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn strictly_dominant_closed_form_matches_alternating() {
        let dominant: Vec<Perm> = all_perms(4)
            .into_iter()
            .filter(crate::permgroup::is_strictly_dominant)
            .collect();
        assert_eq!(dominant.len(), 8);
        for w in &dominant {
            for a in compositions_bounded(w.length(), 4, 4) {
                let Some(closed) = strictly_dominant_inverse_kostka(&a, w).unwrap() else {
                    continue;
                };
                let alt = inverse_kostka(&a, w, InverseKostkaMethod::Alternating).unwrap();
                assert_eq!(closed, alt, "w = {w}, a = {a:?}");
            }
        }
        // The restriction of the degree polynomial to the first k
        // variables is the signed sum of divided powers, so every
        // exponent the closed form covers is reachable.
        let w = Perm::parse("4213").unwrap();
        assert_eq!(
            strictly_dominant_inverse_kostka(&[3, 1, 0, 0], &w).unwrap(),
            Some(rat_int(1))
        );
        assert_eq!(
            strictly_dominant_inverse_kostka(&[1, 3, 0, 0], &w).unwrap(),
            Some(rat_int(-1))
        );
        assert_eq!(
            strictly_dominant_inverse_kostka(&[0, 3, 1, 0], &w).unwrap(),
            Some(rat_int(1))
        );
        assert_eq!(
            strictly_dominant_inverse_kostka(&[2, 2, 0, 0], &w).unwrap(),
            Some(Rat::zero())
        );
        assert_eq!(
            strictly_dominant_inverse_kostka(&[2, 1, 0, 1], &w).unwrap(),
            None
        );
        assert!(strictly_dominant_inverse_kostka(&[1, 0, 0], &Perm::parse("132").unwrap()).is_err());
    }

    #[test]
    fn near_dominant_two_case_closed_form() {
        // w with code (k, k-2, ..., 1, 0, ...): entries are signs at
        // rearrangements of the first k code entries, opposite signs at
        // (k - tau_1, ..., k - tau_k, 1, 0, ...), and zero elsewhere.
        for k in [2usize, 3] {
            let n = k + 2;
            let mut cvec: Vec<usize> = vec![k];
            cvec.extend((1..=k.saturating_sub(2)).rev());
            cvec.resize(n, 0);
            let w = perm_from_code(&cvec).unwrap();
            for a in compositions_bounded(w.length(), n, n) {
                let got = inverse_kostka(&a, &w, InverseKostkaMethod::Alternating).unwrap();
                let mut expect = Rat::zero();
                for sigma in all_perms(k) {
                    let arranged: Vec<usize> =
                        (1..=k).map(|i| cvec[sigma.at(i) - 1]).collect();
                    let mut cand = arranged.clone();
                    cand.resize(n, 0);
                    if cand == a {
                        expect = if sigma.length() % 2 == 0 {
                            rat_int(1)
                        } else {
                            rat_int(-1)
                        };
                    }
                    let mut cand2: Vec<usize> =
                        (1..=k).map(|i| k - sigma.at(i)).collect();
                    cand2.push(1);
                    cand2.resize(n, 0);
                    if cand2 == a {
                        expect = if sigma.length() % 2 == 0 {
                            rat_int(-1)
                        } else {
                            rat_int(1)
                        };
                    }
                }
                assert_eq!(got, expect, "k = {k}, a = {a:?}");
            }
        }
    }

    #[test]
    fn symmetry_check_small_groups() {
        for n in 2..=4 {
            let report = kostka_inverse_symmetry_check(n);
            assert!(report.pairs_checked > 0);
            assert!(
                report.failures.is_empty(),
                "n = {n}: {:?}",
                report.failures
            );
        }
    }

    #[test]
    fn elementary_monomials() {
        assert_eq!(elementary_monomial(&[0, 0, 0], 3), Poly::one(Family::X, 3));
        assert!(elementary_monomial(&[1, 0, 0], 3).is_zero());
        assert!(elementary_monomial(&[0, 2, 0], 3).is_zero());
        let e = elementary_monomial(&[0, 1, 2], 3);
        // e_1(x1) * e_2(x1, x2) = x1 * x1 x2.
        assert_eq!(e, x(3, 1).pow(2).mul(&x(3, 2)));
    }

    #[test]
    fn e_basis_expansion_reconstructs_schubert() {
        for n in 2..=4 {
            for w in all_perms(n) {
                let coeffs = schubert_in_e_basis(&w);
                let mut acc = Poly::zero(Family::X, n);
                for (a, c) in &coeffs {
                    acc = acc.add(&elementary_monomial(a, n).scale(c));
                }
                assert_eq!(acc, schubert_poly(&w), "w = {w}");
            }
        }
    }

    #[test]
    fn e_basis_of_213_avoiders_has_unit_coefficients() {
        for w in all_perms(4) {
            if avoids(&w, &p("213")) {
                for (_, c) in schubert_in_e_basis(&w) {
                    assert!(c.clone().abs() == rat_int(1), "w = {w}, c = {c}");
                }
            }
        }
    }

    #[test]
    fn cauchy_e_identity_on_s3() {
        // e_{w0(rho - a)} = sum_w K_{w,a} S_{w w0} for 0 <= a <= rho.
        let n = 3;
        let sector = KostkaSector::new(n);
        let w0 = Perm::longest(n);
        for a in [
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![2, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![2, 1, 0],
        ] {
            // Index w0(rho - a): entry i equals i - a[n - 1 - i], 0-based.
            let idx: Vec<usize> = (0..n).map(|i| i - a[n - 1 - i]).collect();
            let lhs = elementary_monomial(&idx, n);
            let mut rhs = Poly::zero(Family::X, n);
            for w in all_perms(n) {
                let k = sector.entry(&w, &a);
                if !k.is_zero() {
                    let ww0 = w.compose(&w0);
                    rhs = rhs.add(&schubert_poly(&ww0).scale(&Rat::from_integer(k)));
                }
            }
            assert_eq!(lhs, rhs, "a = {a:?}");
        }
    }

    #[test]
    fn monomial_expansion_in_schubert_basis() {
        // x1^2 x2 is already a Schubert polynomial; x2 is not.
        let m = Poly::monomial(Family::X, 3, &[2, 1, 0], Rat::one());
        let exp = expand_in_schubert_basis(&m).unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp[&p("321")], rat_int(1));
        let x2 = Poly::var(Family::X, 2, 2);
        let exp = expand_in_schubert_basis(&x2).unwrap();
        // x2 = S_{132} - S_{21}, keys trimmed of fixed points.
        assert_eq!(exp[&p("132")], rat_int(1));
        assert_eq!(exp[&p("21")], rat_int(-1));
        assert_eq!(exp.len(), 2);
    }

    #[test]
    fn lr_products_in_s3() {
        let c = lr_coefficients(&p("213"), &p("213")).unwrap();
        // S_{213}^2 = x1^2 = S_{312}.
        assert_eq!(c.len(), 1);
        assert_eq!(c[&p("312")], BigInt::one());
        let c = lr_coefficients(&p("213"), &p("132")).unwrap();
        // x1 (x1 + x2) = S_{312} + S_{231}.
        assert_eq!(c.len(), 2);
        assert_eq!(c[&p("312")], BigInt::one());
        assert_eq!(c[&p("231")], BigInt::one());
        let c = lr_coefficients(&p("321"), &p("321")).unwrap();
        // Highest coefficient leaves the group on 3 letters.
        let w = Perm::from_one_line(vec![5, 3, 1, 2, 4]).unwrap();
        assert_eq!(c[&w], BigInt::one());
    }

    #[test]
    fn lr_chevalley_rule() {
        // Multiplication by S_{s_i} is governed by covers u -> u t_{jk}
        // weighted by the indicator j <= i < k.
        for n in [3usize, 4] {
            for i in 1..n {
                let si = Perm::simple(n, i);
                for u in all_perms(n) {
                    let c = lr_coefficients(&si, &u).unwrap();
                    let mut expect: BTreeMap<Perm, BigInt> = BTreeMap::new();
                    for (v, j, k) in crate::permgroup::bruhat_covers_up(&u.extend(n + 1)) {
                        if j <= i && i < k {
                            expect.insert(v.trim(), BigInt::one());
                        }
                    }
                    assert_eq!(c, expect, "i = {i}, u = {u}");
                }
            }
        }
    }

    #[test]
    fn l_matrix_is_symmetric_with_unit_diagonal_leading_term() {
        for u in all_perms(3) {
            for w in all_perms(3) {
                let lu = l_matrix_entry(&u, &w);
                let lw = l_matrix_entry(&w, &u);
                assert_eq!(lu, lw);
                assert!(lu.is_integer());
            }
            assert!(l_matrix_entry(&u, &u) > Rat::zero());
        }
    }
}
