//! Demazure characters, flagged Schur polynomials, and generalized
//! Gelfand-Tsetlin polytopes.
//!
//! The Demazure character `ch_{lambda,w}` is built by applying the
//! operators `T_i` along a reduced word of `w` to the monomial
//! `z^lambda`. For a 312-avoiding permutation `w` with flag `b = b(w)`
//! it equals the flagged Schur polynomial `s_lambda^b`, which in turn
//! has a tableau sum, a lattice-path determinant, and a lattice-point
//! generating sum over the generalized Gelfand-Tsetlin polytope. The
//! module keeps all four routes separate so they can be compared
//! exactly.

use crate::exactpoly::{binom, rat_factorial, rat_int, Family, Poly, Rat};
use crate::operators::{apply_word, OperatorKind};
use crate::permgroup::{all_perms, avoids, b_of, permuted_vector, reduced_word, Perm};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Errors raised by character and polytope computations.
#[derive(Debug, thiserror::Error)]
pub enum DemazureError {
    #[error("permutation {perm} contains a {pattern} pattern")]
    PatternPresent { perm: String, pattern: String },
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<u32>),
    #[error("lambda has {found} parts, expected {expected}")]
    LambdaLength { found: usize, expected: usize },
    #[error("dilate counts do not fit a polynomial of degree {degree}: leftover difference {leftover}")]
    EhrhartNonPolynomial { degree: usize, leftover: String },
    #[error("evaluation point hits a pole of the character sum")]
    PoleAtPoint,
    #[error(transparent)]
    Perm(#[from] crate::permgroup::PermError),
}

fn require_partition(lambda: &[u32]) -> Result<(), DemazureError> {
    if lambda.windows(2).any(|p| p[0] < p[1]) {
        return Err(DemazureError::NotAPartition(lambda.to_vec()));
    }
    Ok(())
}

fn require_312_avoiding(w: &Perm) -> Result<(), DemazureError> {
    if !avoids(w, &Perm::parse("312").expect("valid pattern")) {
        return Err(DemazureError::PatternPresent {
            perm: w.to_string(),
            pattern: "312".to_string(),
        });
    }
    Ok(())
}

/// Complete homogeneous polynomial `h_m(z_k, ..., z_l)` in the given
/// ambient arity; zero when `k > l` or `m < 0` by the lattice-path
/// convention.
pub fn complete_homogeneous(m: i64, k: usize, l: usize, arity: usize) -> Poly {
    if k > l {
        return Poly::zero(Family::Z, arity);
    }
    if m < 0 {
        return Poly::zero(Family::Z, arity);
    }
    assert!(l <= arity, "variable range exceeds arity");
    let mut out = Poly::zero(Family::Z, arity);
    // Multisets of size m from {k, ..., l}, built as weakly increasing
    // index sequences.
    fn rec(
        next: usize,
        l: usize,
        remaining: i64,
        expo: &mut Vec<u32>,
        out: &mut Poly,
        arity: usize,
    ) {
        if remaining == 0 {
            *out = out.add(&Poly::monomial(Family::Z, arity, expo, Rat::one()));
            return;
        }
        if next > l {
            return;
        }
        for take in 0..=remaining {
            expo[next - 1] += take as u32;
            rec(next + 1, l, remaining - take, expo, out, arity);
            expo[next - 1] -= take as u32;
        }
    }
    let mut expo = vec![0u32; arity];
    rec(k, l, m, &mut expo, &mut out, arity);
    out
}

/// Flagged Schur polynomial as a sum over flagged semistandard tableaux
/// of shape `mu`: entries of row `i` lie in `[a_i, b_i]`, rows weakly
/// increase, columns strictly increase.
pub fn flagged_schur_tableaux(mu: &[usize], a: &[usize], b: &[usize], arity: usize) -> Poly {
    let n = mu.len();
    assert_eq!(a.len(), n, "lower flag length must match shape length");
    assert_eq!(b.len(), n, "upper flag length must match shape length");
    assert!(mu.windows(2).all(|p| p[0] >= p[1]), "shape must be a partition");
    assert!(a.windows(2).all(|p| p[0] <= p[1]), "lower flag must weakly increase");
    assert!(b.windows(2).all(|p| p[0] <= p[1]), "upper flag must weakly increase");
    for i in 0..n {
        if mu[i] > 0 {
            assert!(a[i] >= 1 && b[i] <= arity, "row bounds must fit the arity");
        }
    }
    let mut out = Poly::zero(Family::Z, arity);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
    fn fill(
        i: usize,
        j: usize,
        mu: &[usize],
        a: &[usize],
        b: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Poly,
        arity: usize,
    ) {
        let n = mu.len();
        if i == n {
            let mut expo = vec![0u32; arity];
            for row in rows.iter() {
                for &t in row {
                    expo[t - 1] += 1;
                }
            }
            *out = out.add(&Poly::monomial(Family::Z, arity, &expo, Rat::one()));
            return;
        }
        if j == mu[i] {
            fill(i + 1, 0, mu, a, b, rows, out, arity);
            return;
        }
        let mut lo = a[i];
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        for t in lo..=b[i] {
            rows[i].push(t);
            fill(i, j + 1, mu, a, b, rows, out, arity);
            rows[i].pop();
        }
    }
    fill(0, 0, mu, a, b, &mut rows, &mut out, arity);
    out
}

/// Flagged Schur polynomial as the lattice-path determinant
/// `det(h_{mu_i - i + j} (z_{a_j}, ..., z_{b_i}))`.
pub fn flagged_schur_det(mu: &[usize], a: &[usize], b: &[usize], arity: usize) -> Poly {
    let n = mu.len();
    assert_eq!(a.len(), n, "lower flag length must match shape length");
    assert_eq!(b.len(), n, "upper flag length must match shape length");
    let mut out = Poly::zero(Family::Z, arity);
    for sigma in all_perms(n.max(1)) {
        if n == 0 {
            return Poly::one(Family::Z, arity);
        }
        let mut term = Poly::one(Family::Z, arity);
        let mut zero = false;
        for i in 1..=n {
            let j = sigma.at(i);
            let m = mu[i - 1] as i64 - i as i64 + j as i64;
            let entry = complete_homogeneous(m, a[j - 1], b[i - 1], arity);
            if entry.is_zero() {
                zero = true;
                break;
            }
            term = term.mul(&entry);
        }
        if zero {
            continue;
        }
        if sigma.length() % 2 == 1 {
            term = term.neg();
        }
        out = out.add(&term);
    }
    out
}

/// Demazure character: the `T`-operators along a reduced word of `w`
/// applied to `z^lambda`. The first letter of the word acts last.
pub fn demazure_character(lambda: &[u32], w: &Perm) -> Result<Poly, DemazureError> {
    let n = w.n();
    if lambda.len() != n {
        return Err(DemazureError::LambdaLength {
            found: lambda.len(),
            expected: n,
        });
    }
    require_partition(lambda)?;
    let seed = Poly::monomial(Family::Z, n, lambda, Rat::one());
    let mut word = reduced_word(w);
    word.reverse();
    Ok(apply_word(&word, &seed, OperatorKind::Demazure))
}

/// Which algorithm computes a Demazure module dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionRoute {
    BinomialDet,
    CharacterAtOne,
}

fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut out = BigInt::zero();
    for sigma in all_perms(n) {
        let mut term = BigInt::one();
        for i in 1..=n {
            term *= &m[i - 1][sigma.at(i) - 1];
        }
        if sigma.length() % 2 == 1 {
            term = -term;
        }
        out += term;
    }
    out
}

/// Dimension of the Demazure module for `lambda` and `w`, either by the
/// binomial determinant `det(C(lambda_i + b_i - i, b_i - j))` (requires
/// `w` 312-avoiding) or by evaluating the character at `(1, ..., 1)`.
pub fn demazure_dimension(
    lambda: &[u32],
    w: &Perm,
    route: DimensionRoute,
) -> Result<Rat, DemazureError> {
    let n = w.n();
    if lambda.len() != n {
        return Err(DemazureError::LambdaLength {
            found: lambda.len(),
            expected: n,
        });
    }
    require_partition(lambda)?;
    match route {
        DimensionRoute::BinomialDet => {
            let b = b_of(w)?;
            let m: Vec<Vec<BigInt>> = (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| {
                            binom(
                                lambda[i - 1] as i64 + b[i - 1] as i64 - i as i64,
                                b[i - 1] as i64 - j as i64,
                            )
                        })
                        .collect()
                })
                .collect();
            Ok(Rat::from_integer(det_bigint(&m)))
        }
        DimensionRoute::CharacterAtOne => {
            let ch = demazure_character(lambda, w)?;
            let ones = vec![Rat::one(); n];
            Ok(ch.evaluate(&ones))
        }
    }
}

/// A Gelfand-Tsetlin pattern: triangular array with `rows[r]` holding
/// the `r + 1` entries of the row of that length, bottom row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Entry `p_{rj}`, with `r` the row length and `j` the 1-based
    /// position.
    pub fn entry(&self, r: usize, j: usize) -> i64 {
        self.rows[r - 1][j - 1]
    }

    /// Top row.
    pub fn shape(&self) -> &[i64] {
        &self.rows[self.rows.len() - 1]
    }

    /// Consecutive row-sum differences.
    pub fn weight(&self) -> Vec<i64> {
        let mut prev = 0i64;
        self.rows
            .iter()
            .map(|row| {
                let s: i64 = row.iter().sum();
                let beta = s - prev;
                prev = s;
                beta
            })
            .collect()
    }
}

/// The generalized Gelfand-Tsetlin polytope of a partition and a
/// 312-avoiding permutation: patterns of shape `lambda` with the column
/// freeze `p_{nj} = ... = p_{b_j, j} = lambda_j`.
#[derive(Clone, Debug)]
pub struct GTPolytopeSpec {
    lambda: Vec<u32>,
    w: Perm,
    b: Vec<usize>,
}

impl GTPolytopeSpec {
    pub fn new(lambda: Vec<u32>, w: Perm) -> Result<GTPolytopeSpec, DemazureError> {
        if lambda.len() != w.n() {
            return Err(DemazureError::LambdaLength {
                found: lambda.len(),
                expected: w.n(),
            });
        }
        require_partition(&lambda)?;
        let b = b_of(&w)?;
        Ok(GTPolytopeSpec { lambda, w, b })
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    pub fn flag(&self) -> &[usize] {
        &self.b
    }

    /// Number of unfrozen pattern entries; equals the length of `w`.
    pub fn free_entries(&self) -> usize {
        self.w.length()
    }

    pub fn dilate(&self, k: u32) -> GTPolytopeSpec {
        GTPolytopeSpec {
            lambda: self.lambda.iter().map(|&v| v * k).collect(),
            w: self.w.clone(),
            b: self.b.clone(),
        }
    }

    /// Admissible values for position `j` (1-based) of the row of length
    /// `r`, given the row of length `r + 1` above it.
    fn bounds(&self, r: usize, j: usize, above: &[i64]) -> (i64, i64) {
        let hi = above[j - 1];
        let lo = above[j];
        if r >= self.b[j - 1] {
            let v = self.lambda[j - 1] as i64;
            (v.max(lo), v.min(hi))
        } else {
            (lo, hi)
        }
    }
}

/// All integer patterns in the polytope, in row-major enumeration
/// order.
pub fn gt_lattice_points(spec: &GTPolytopeSpec) -> Vec<GTPattern> {
    let top: Vec<i64> = spec.lambda.iter().map(|&v| v as i64).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![top];
    fn descend(spec: &GTPolytopeSpec, stack: &mut Vec<Vec<i64>>, out: &mut Vec<GTPattern>) {
        let above = stack.last().expect("stack holds at least the top row");
        let r = above.len() - 1;
        if r == 0 {
            let mut rows = stack.clone();
            rows.reverse();
            out.push(GTPattern { rows });
            return;
        }
        let mut row = vec![0i64; r];
        fn fill(
            spec: &GTPolytopeSpec,
            j: usize,
            r: usize,
            row: &mut Vec<i64>,
            stack: &mut Vec<Vec<i64>>,
            out: &mut Vec<GTPattern>,
        ) {
            if j > r {
                stack.push(row.clone());
                descend(spec, stack, out);
                stack.pop();
                return;
            }
            let above = stack.last().expect("stack is nonempty").clone();
            let (lo, hi) = spec.bounds(r, j, &above);
            for v in lo..=hi {
                row[j - 1] = v;
                fill(spec, j + 1, r, row, stack, out);
            }
        }
        fill(spec, 1, r, &mut row, stack, out);
    }
    descend(spec, &mut stack, &mut out);
    out
}

/// Number of lattice points, by dynamic programming over rows with
/// memoization on the current row.
pub fn gt_count(spec: &GTPolytopeSpec) -> BigInt {
    let top: Vec<i64> = spec.lambda.iter().map(|&v| v as i64).collect();
    let mut memo: HashMap<Vec<i64>, BigInt> = HashMap::new();
    fn ways(spec: &GTPolytopeSpec, above: &[i64], memo: &mut HashMap<Vec<i64>, BigInt>) -> BigInt {
        let r = above.len() - 1;
        if r == 0 {
            return BigInt::one();
        }
        if let Some(v) = memo.get(above) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut row = vec![0i64; r];
        fn fill(
            spec: &GTPolytopeSpec,
            above: &[i64],
            j: usize,
            r: usize,
            row: &mut Vec<i64>,
            total: &mut BigInt,
            memo: &mut HashMap<Vec<i64>, BigInt>,
        ) {
            if j > r {
                *total += ways(spec, row, memo);
                return;
            }
            let (lo, hi) = spec.bounds(r, j, above);
            for v in lo..=hi {
                row[j - 1] = v;
                fill(spec, above, j + 1, r, row, total, memo);
            }
        }
        fill(spec, above, 1, r, &mut row, &mut total, memo);
        memo.insert(above.to_vec(), total.clone());
        total
    }
    ways(spec, &top, &mut memo)
}

/// Generating sum of `z^weight` over the lattice points; equals the
/// Demazure character.
pub fn gt_generating_sum(spec: &GTPolytopeSpec) -> Poly {
    let n = spec.lambda.len();
    let mut out = Poly::zero(Family::Z, n);
    for p in gt_lattice_points(spec) {
        let expo: Vec<u32> = p
            .weight()
            .into_iter()
            .map(|v| u32::try_from(v).expect("pattern weights are nonnegative"))
            .collect();
        out = out.add(&Poly::monomial(Family::Z, n, &expo, Rat::one()));
    }
    out
}

/// Euclidean volume of the polytope inside its free-coordinate space,
/// obtained as the leading Ehrhart coefficient: lattice points of the
/// dilates `k * lambda` are counted for `k = 0, ..., l + 1` with
/// `l = length(w)`, and the `l`-th finite difference at zero divided by
/// `l!` is returned. A nonzero `(l+1)`-st difference is a hard error.
pub fn gt_volume(spec: &GTPolytopeSpec) -> Result<Rat, DemazureError> {
    let l = spec.free_entries();
    let mut values: Vec<BigInt> = (0..=(l as u32 + 1))
        .map(|k| gt_count(&spec.dilate(k)))
        .collect();
    for _ in 0..l {
        values = values.windows(2).map(|p| &p[1] - &p[0]).collect();
    }
    let leading = values[0].clone();
    let leftover = &values[1] - &values[0];
    if !leftover.is_zero() {
        return Err(DemazureError::EhrhartNonPolynomial {
            degree: l,
            leftover: leftover.to_string(),
        });
    }
    Ok(Rat::from_integer(leading) / rat_factorial(l as u64))
}

/// The fixed sequence of pairwise distinct evaluation points used for
/// generic checks: consecutive primes, skipping `offset` of them.
pub fn generic_point(n: usize, offset: usize) -> Vec<Rat> {
    let mut primes = Vec::with_capacity(n + offset);
    let mut candidate: i64 = 2;
    while primes.len() < n + offset {
        if (2..candidate).take_while(|d| d * d <= candidate).all(|d| candidate % d != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes[offset..].iter().map(|&p| rat_int(p)).collect()
}

fn rat_pow_signed(base: &Rat, e: i64) -> Rat {
    let mut out = Rat::one();
    for _ in 0..e.unsigned_abs() {
        out *= base;
    }
    if e < 0 {
        out = out.recip();
    }
    out
}

/// Evaluates the alternating character sum
/// `sum_{u in W_b} (-1)^{l(u)} z^{u(lambda+rho)-rho} prod (1 - z^{-alpha})^{-1}`
/// at the given point and compares it with the Demazure character there.
/// Also verifies `|W_b| = prod (b_i - i + 1)` and that each `u`
/// contributes exactly `length(w)` denominator factors.
pub fn alternating_character_check(
    lambda: &[u32],
    w: &Perm,
    z_point: &[Rat],
) -> Result<bool, DemazureError> {
    require_312_avoiding(w)?;
    let n = w.n();
    if lambda.len() != n {
        return Err(DemazureError::LambdaLength {
            found: lambda.len(),
            expected: n,
        });
    }
    require_partition(lambda)?;
    assert_eq!(z_point.len(), n, "evaluation point must have one entry per variable");
    if z_point.iter().any(|z| z.is_zero()) {
        return Err(DemazureError::PoleAtPoint);
    }
    let b = b_of(w)?;
    let members: Vec<Perm> = all_perms(n)
        .into_iter()
        .filter(|u| (1..=n).all(|i| u.at(i) <= b[i - 1]))
        .collect();
    let expected_size: usize = (1..=n).map(|i| b[i - 1] - i + 1).product();
    if members.len() != expected_size {
        return Ok(false);
    }
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let lam_rho: Vec<i64> = lambda
        .iter()
        .zip(&rho)
        .map(|(&l, &r)| l as i64 + r)
        .collect();
    let mut sum = Rat::zero();
    for u in &members {
        let moved = permuted_vector(u, &lam_rho);
        let mut term = if u.length() % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        for i in 0..n {
            term *= rat_pow_signed(&z_point[i], moved[i] - rho[i]);
        }
        let uinv = u.inverse();
        let mut factors = 0usize;
        for i in 1..=n {
            for j in (i + 1)..=b[uinv.at(i) - 1] {
                let denom =
                    Rat::one() - z_point[j - 1].clone() / z_point[i - 1].clone();
                if denom.is_zero() {
                    return Err(DemazureError::PoleAtPoint);
                }
                term /= denom;
                factors += 1;
            }
        }
        if factors != w.length() {
            return Ok(false);
        }
        sum += term;
    }
    let ch = demazure_character(lambda, w)?.evaluate(z_point);
    Ok(sum == ch)
}

/// All weakly increasing flags with `i <= b_i <= n`.
pub fn all_flags(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut b = Vec::with_capacity(n);
    fn rec(n: usize, b: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if b.len() == n {
            out.push(b.clone());
            return;
        }
        let i = b.len() + 1;
        let lo = i.max(b.last().copied().unwrap_or(1));
        for v in lo..=n {
            b.push(v);
            rec(n, b, out);
            b.pop();
        }
    }
    rec(n, &mut b, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::demazure_t;
    use crate::permgroup::{flag_to_312, isolated_entry_path};

    fn p(s: &str) -> Perm {
        Perm::parse(s).unwrap()
    }

    #[test]
    fn complete_homogeneous_conventions() {
        assert!(complete_homogeneous(1, 3, 2, 3).is_zero());
        assert!(complete_homogeneous(-1, 1, 2, 3).is_zero());
        assert_eq!(complete_homogeneous(0, 1, 3, 3), Poly::one(Family::Z, 3));
        // h_2(z1, z2) = z1^2 + z1 z2 + z2^2.
        let h = complete_homogeneous(2, 1, 2, 2);
        assert_eq!(h.num_terms(), 3);
        assert_eq!(h.coefficient(&[1, 1]), Rat::one());
    }

    #[test]
    fn single_box_and_full_schur() {
        let s = flagged_schur_tableaux(&[1], &[1], &[3], 3);
        let expect = Poly::var(Family::Z, 3, 1)
            .add(&Poly::var(Family::Z, 3, 2))
            .add(&Poly::var(Family::Z, 3, 3));
        assert_eq!(s, expect);
        // Full Schur s_{(2,1)}(z1, z2, z3) has 8 tableaux.
        let s = flagged_schur_tableaux(&[2, 1, 0], &[1, 1, 1], &[3, 3, 3], 3);
        let ones = vec![Rat::one(); 3];
        assert_eq!(s.evaluate(&ones), rat_int(8));
    }

    #[test]
    fn tableau_sum_matches_determinant() {
        // Every shape inside the staircase of S_3, every flag.
        let shapes = [
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![2, 0, 0],
            vec![2, 1, 0],
        ];
        for mu in &shapes {
            for b in all_flags(3) {
                let a = vec![1, 1, 1];
                let t = flagged_schur_tableaux(mu, &a, &b, 3);
                let d = flagged_schur_det(mu, &a, &b, 3);
                assert_eq!(t, d, "mu = {mu:?}, b = {b:?}");
            }
        }
        // A nontrivial lower flag.
        let t = flagged_schur_tableaux(&[2, 1], &[1, 2], &[2, 3], 3);
        let d = flagged_schur_det(&[2, 1], &[1, 2], &[2, 3], 3);
        assert_eq!(t, d);
    }

    #[test]
    fn character_of_identity_and_longest() {
        let lambda = [2, 1, 0];
        let ch = demazure_character(&lambda, &Perm::identity(3)).unwrap();
        assert_eq!(ch, Poly::monomial(Family::Z, 3, &[2, 1, 0], Rat::one()));
        let ch = demazure_character(&lambda, &Perm::longest(3)).unwrap();
        let schur = flagged_schur_tableaux(&[2, 1, 0], &[1, 1, 1], &[3, 3, 3], 3);
        assert_eq!(ch, schur);
    }

    #[test]
    fn character_golden_for_231() {
        // ch_{(2,1,0),231} = z1^2 z2 + z1 z2^2 + z1^2 z3 + z1 z2 z3 + z2^2 z3.
        let ch = demazure_character(&[2, 1, 0], &p("231")).unwrap();
        let mut expect = Poly::zero(Family::Z, 3);
        for e in [[2, 1, 0], [1, 2, 0], [2, 0, 1], [1, 1, 1], [0, 2, 1]] {
            expect = expect.add(&Poly::monomial(Family::Z, 3, &e, Rat::one()));
        }
        assert_eq!(ch, expect);
    }

    #[test]
    fn character_equals_flagged_schur_on_312_avoiders() {
        let lambda = [2, 1, 0];
        for w in all_perms(3) {
            let Ok(b) = b_of(&w) else { continue };
            let ch = demazure_character(&lambda, &w).unwrap();
            let schur =
                flagged_schur_tableaux(&[2, 1, 0], &[1, 1, 1], &b, 3);
            assert_eq!(ch, schur, "w = {w}");
        }
    }

    #[test]
    fn character_is_word_independent() {
        // 321 = s1 s2 s1 = s2 s1 s2.
        let lambda = [3, 1, 0];
        let seed = Poly::monomial(Family::Z, 3, &lambda, Rat::one());
        let a = apply_word(&[1, 2, 1], &seed, OperatorKind::Demazure);
        let b = apply_word(&[2, 1, 2], &seed, OperatorKind::Demazure);
        assert_eq!(a, b);
    }

    #[test]
    fn isolated_entry_steps_intertwine_with_t_operators() {
        for b in all_flags(4) {
            let s_b = flagged_schur_tableaux(&[3, 2, 1, 0], &[1; 4], &b, 4);
            for i in 0..4 {
                let k = b[i];
                if k == 4 || b.iter().filter(|&&v| v == k).count() != 1 {
                    continue;
                }
                let mut b2 = b.clone();
                b2[i] += 1;
                let s_b2 = flagged_schur_tableaux(&[3, 2, 1, 0], &[1; 4], &b2, 4);
                assert_eq!(demazure_t(k, &s_b), s_b2, "b = {b:?}, k = {k}");
            }
        }
    }

    #[test]
    fn flag_path_yields_reduced_word() {
        let w = p("32154");
        let b = b_of(&w).unwrap();
        assert_eq!(b, vec![3, 3, 3, 5, 5]);
        let steps = isolated_entry_path(&b).unwrap();
        let labels: Vec<usize> = steps.iter().map(|(_, k)| *k).collect();
        assert_eq!(labels, vec![4, 2, 1, 2]);
        let mut prod = Perm::identity(5);
        for &k in labels.iter().rev() {
            prod = prod.compose(&Perm::simple(5, k));
        }
        assert_eq!(prod, w);
        assert_eq!(w.length(), labels.len());
        assert_eq!(flag_to_312(&b).unwrap(), w);
    }

    #[test]
    fn dimension_routes_agree() {
        let d = demazure_dimension(&[2, 1, 0], &p("231"), DimensionRoute::BinomialDet).unwrap();
        assert_eq!(d, rat_int(5));
        let d = demazure_dimension(&[2, 1, 0], &p("231"), DimensionRoute::CharacterAtOne).unwrap();
        assert_eq!(d, rat_int(5));
        let d = demazure_dimension(&[0, 0, 0], &p("321"), DimensionRoute::BinomialDet).unwrap();
        assert_eq!(d, rat_int(1));
        let d = demazure_dimension(&[1, 0, 0], &Perm::longest(3), DimensionRoute::BinomialDet)
            .unwrap();
        assert_eq!(d, rat_int(3));
        assert!(demazure_dimension(&[1, 0, 0], &p("312"), DimensionRoute::BinomialDet).is_err());
    }

    #[test]
    fn lattice_points_golden() {
        let spec = GTPolytopeSpec::new(vec![2, 1, 0], p("231")).unwrap();
        let points = gt_lattice_points(&spec);
        assert_eq!(points.len(), 5);
        assert_eq!(gt_count(&spec), BigInt::from(5));
        let ch = demazure_character(&[2, 1, 0], &p("231")).unwrap();
        assert_eq!(gt_generating_sum(&spec), ch);
        let zero = GTPolytopeSpec::new(vec![0, 0, 0], p("231")).unwrap();
        assert_eq!(gt_count(&zero), BigInt::one());
    }

    #[test]
    fn volume_golden() {
        let spec = GTPolytopeSpec::new(vec![2, 1, 0], p("231")).unwrap();
        assert_eq!(gt_volume(&spec).unwrap(), crate::exactpoly::rat(3, 2));
        let zero = GTPolytopeSpec::new(vec![0, 0, 0], p("231")).unwrap();
        assert_eq!(gt_volume(&zero).unwrap(), Rat::zero());
    }

    #[test]
    fn volume_matches_degree_polynomial() {
        for w in all_perms(3) {
            if b_of(&w).is_err() {
                continue;
            }
            let spec = GTPolytopeSpec::new(vec![2, 1, 0], w.clone()).unwrap();
            let vol = gt_volume(&spec).unwrap();
            let d = crate::degrees::d_integration(&w);
            let point = vec![rat_int(2), rat_int(1), rat_int(0)];
            assert_eq!(vol, d.y_form.evaluate(&point), "w = {w}");
        }
    }

    #[test]
    fn alternating_sum_matches_character() {
        let point = generic_point(3, 0);
        assert_eq!(point, vec![rat_int(2), rat_int(3), rat_int(5)]);
        for w in all_perms(3) {
            if b_of(&w).is_err() {
                continue;
            }
            assert!(
                alternating_character_check(&[2, 1, 0], &w, &point).unwrap(),
                "w = {w}"
            );
        }
        // Equal coordinates hit a pole.
        let bad = vec![rat_int(2), rat_int(2), rat_int(5)];
        assert!(matches!(
            alternating_character_check(&[2, 1, 0], &Perm::longest(3), &bad),
            Err(DemazureError::PoleAtPoint)
        ));
    }

    #[test]
    fn flag_enumeration_sizes_are_catalan() {
        assert_eq!(all_flags(3).len(), 5);
        assert_eq!(all_flags(4).len(), 14);
    }
}
