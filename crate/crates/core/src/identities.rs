//! Permanent identities for the Gram matrix of type-A roots, and an
//! evaluator for the conjectured closed form of the degree polynomial
//! of special permutations.
//!
//! The conjecture evaluator is deliberately a comparator, not an
//! assertion: it computes the conjectured right-hand side literally as
//! displayed, compares it with the degree polynomial, and reports the
//! outcome. As transcribed, the signed sum of Vandermonde products
//! telescopes to the zero polynomial for every special permutation
//! (each block contributes terms that differ by a constant in the
//! varied argument), while the left side is homogeneous of degree
//! `n(n+1)/2`. The report therefore records a degree mismatch for
//! every row; the evaluator itself is pinned by the exact six-term
//! example for `w = 41532`.

use crate::degrees::{d_integration, y_to_cap_y};
use crate::exactpoly::{rat_factorial, Family, Poly, Rat};
use crate::permgroup::{all_perms, code, perm_from_code, Perm};
use num_traits::{One, Zero};

/// Errors raised by the conjecture evaluator.
#[derive(Debug, thiserror::Error)]
pub enum IdentitiesError {
    #[error("permutation {0} is not special")]
    NotSpecial(String),
}

/// Exact permanent by Ryser's inclusion-exclusion over column subsets.
pub fn permanent(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    assert!(n <= 20, "permanent is exponential in the size");
    if n == 0 {
        return Rat::one();
    }
    let mut total = Rat::zero();
    for mask in 0usize..(1 << n) {
        let bits = mask.count_ones() as usize;
        let mut prod = Rat::one();
        for row in m {
            let mut s = Rat::zero();
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    s += entry;
                }
            }
            if s.is_zero() {
                prod = Rat::zero();
                break;
            }
            prod *= s;
        }
        if prod.is_zero() {
            continue;
        }
        if (n - bits) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// Permanent as the plain sum over permutations; exponentially slower
/// than [`permanent`] and only suitable as a small-size cross-check.
pub fn permanent_naive(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    assert!(n <= 8, "use the Ryser permanent for larger matrices");
    if n == 0 {
        return Rat::one();
    }
    let mut total = Rat::zero();
    for sigma in all_perms(n) {
        let mut prod = Rat::one();
        for i in 1..=n {
            prod *= &m[i - 1][sigma.at(i) - 1];
        }
        total += prod;
    }
    total
}

/// Gram-permanent report: `B` is the incidence matrix of the positive
/// roots `e_i - e_j`, and the permanent of `B B^T` is compared against
/// `1! 2! ... n!` and against the group order times the product of
/// `(rho, alpha-check)` over positive roots.
pub struct CartanGramReport {
    pub n: usize,
    pub permanent: Rat,
    pub factorial_product: Rat,
    pub order_times_heights: Rat,
}

impl CartanGramReport {
    pub fn ok(&self) -> bool {
        self.permanent == self.factorial_product
            && self.permanent == self.order_times_heights
    }
}

/// Builds the root incidence matrix for the symmetric group on `n`
/// letters, forms its Gram matrix, and checks the permanent identities.
pub fn cartan_gram_check(n: usize) -> CartanGramReport {
    assert!((2..=5).contains(&n), "the Gram permanent is kept at desk scale");
    let roots: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let m = roots.len();
    let mut gram = vec![vec![Rat::zero(); m]; m];
    for (r, &(i1, j1)) in roots.iter().enumerate() {
        for (s, &(i2, j2)) in roots.iter().enumerate() {
            let mut dot = 0i64;
            dot += i64::from(i1 == i2) - i64::from(i1 == j2);
            dot -= i64::from(j1 == i2) - i64::from(j1 == j2);
            gram[r][s] = Rat::from_integer(dot.into());
        }
    }
    let mut factorial_product = Rat::one();
    for k in 1..=n {
        factorial_product *= rat_factorial(k as u64);
    }
    let mut order_times_heights = rat_factorial(n as u64);
    for &(i, j) in &roots {
        order_times_heights *= Rat::from_integer(((j - i) as i64).into());
    }
    CartanGramReport {
        n,
        permanent: permanent(&gram),
        factorial_product,
        order_times_heights,
    }
}

/// A permutation whose code reads `n, n-1, ..., 2, 1` with at most one
/// zero between consecutive entries, then zeros.
#[derive(Clone, Debug)]
pub struct SpecialPermutation {
    pub w: Perm,
    /// The leading code entry.
    pub n: usize,
    /// Number of zeros directly preceded by a nonzero entry.
    pub k: usize,
    /// Positions of those zeros; the last is always `n + k`.
    pub a: Vec<usize>,
}

impl SpecialPermutation {
    /// Classifies `w`, returning `None` when its code does not match
    /// the special pattern.
    pub fn detect(w: &Perm) -> Option<SpecialPermutation> {
        let c = code(w);
        let nonzero: Vec<(usize, usize)> = c
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v > 0)
            .map(|(i, &v)| (i + 1, v))
            .collect();
        if nonzero.is_empty() {
            return None;
        }
        let n = nonzero[0].1;
        if nonzero[0].0 != 1 || nonzero.len() != n {
            return None;
        }
        for (t, &(pos, v)) in nonzero.iter().enumerate() {
            if v != n - t {
                return None;
            }
            if t > 0 && pos - nonzero[t - 1].0 > 2 {
                return None;
            }
        }
        let mut a = Vec::new();
        for i in 1..c.len() {
            if c[i] == 0 && c[i - 1] > 0 {
                a.push(i + 1);
            }
        }
        let k = a.len();
        debug_assert_eq!(a.last(), Some(&(n + k)));
        debug_assert_eq!(w.length(), n * (n + 1) / 2);
        Some(SpecialPermutation {
            w: w.clone(),
            n,
            k,
            a,
        })
    }
}

/// All special permutations with leading code entry `n`, one per choice
/// of optional zeros between consecutive code entries.
pub fn special_permutations(n: usize) -> Vec<SpecialPermutation> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for mask in 0usize..(1 << (n - 1)) {
        let mut c: Vec<usize> = Vec::new();
        for v in (1..=n).rev() {
            c.push(v);
            if v > 1 && mask & (1 << (n - v)) != 0 {
                c.push(0);
            }
        }
        c.push(0);
        let w = perm_from_code(&c).expect("special codes are valid");
        out.push(SpecialPermutation::detect(&w).expect("constructed codes are special"));
    }
    out
}

/// All valid index subsets of a special permutation: from each block
/// `{a_{i-1}+1, ..., a_i}` all elements but one are taken. Subsets are
/// returned with ascending elements.
pub fn valid_subsets(sp: &SpecialPermutation) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut prev = 0usize;
    for &ai in &sp.a {
        let block: Vec<usize> = (prev + 1..=ai).collect();
        prev = ai;
        let mut next = Vec::with_capacity(out.len() * block.len().saturating_sub(1).max(1));
        for base in &out {
            for dropped in &block {
                let mut j = base.clone();
                j.extend(block.iter().filter(|e| *e != dropped));
                next.push(j);
            }
        }
        out = next;
    }
    out
}

fn vandermonde(args: &[Poly], family: Family, arity: usize) -> Poly {
    let mut acc = Poly::one(family, arity);
    for i in 0..args.len() {
        for j in (i + 1)..args.len() {
            acc = acc.mul(&args[i].sub(&args[j]));
        }
    }
    acc
}

/// Sign exponent of a valid subset:
/// `d_J = C(n+k+1, 2) - 1 - (a_1+1) - ... - (a_{k-1}+1) - sum(J)`.
pub fn subset_sign_exponent(sp: &SpecialPermutation, subset: &[usize]) -> usize {
    let nk = sp.n + sp.k;
    let mut d = (nk * (nk + 1) / 2) as i64 - 1;
    for &ai in &sp.a[..sp.k - 1] {
        d -= ai as i64 + 1;
    }
    for &j in subset {
        d -= j as i64;
    }
    usize::try_from(d).expect("the maximal-sum subset has exponent zero")
}

/// The conjectured right-hand side for a special permutation, evaluated
/// literally: `C_{nk}` times the signed sum of Vandermonde products in
/// the variables `y_{n+k-j+1}`, `j` running over each valid subset in
/// descending order.
pub fn conjecture_rhs_special(sp: &SpecialPermutation) -> Poly {
    let nk = sp.n + sp.k;
    let mut sum = Poly::zero(Family::Y, nk);
    for subset in valid_subsets(sp) {
        let args: Vec<Poly> = subset
            .iter()
            .rev()
            .map(|&j| Poly::var(Family::Y, nk, nk - j + 1))
            .collect();
        let mut term = vandermonde(&args, Family::Y, nk);
        if subset_sign_exponent(sp, &subset) % 2 == 1 {
            term = term.neg();
        }
        sum = sum.add(&term);
    }
    let mut c_nk = Rat::one();
    for m in (sp.n + 1)..=(sp.n + sp.k - 1) {
        c_nk *= rat_factorial(m as u64);
    }
    c_nk /= rat_factorial((sp.n * (sp.n + 1) / 2) as u64);
    sum.scale(&c_nk)
}

/// Classifies `w` and evaluates the conjectured right-hand side.
pub fn conjecture_rhs(w: &Perm) -> Result<Poly, IdentitiesError> {
    let sp = SpecialPermutation::detect(w)
        .ok_or_else(|| IdentitiesError::NotSpecial(w.to_string()))?;
    Ok(conjecture_rhs_special(&sp))
}

/// How the conjectured value compares with the degree polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureOutcome {
    Equal,
    UnequalDegreeMismatch,
    UnequalSameDegree,
}

impl ConjectureOutcome {
    pub fn name(self) -> &'static str {
        match self {
            ConjectureOutcome::Equal => "equal",
            ConjectureOutcome::UnequalDegreeMismatch => "unequal-degree-mismatch",
            ConjectureOutcome::UnequalSameDegree => "unequal-same-degree",
        }
    }
}

/// One comparison in a [`conjecture_report`].
#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub w: Perm,
    pub n: usize,
    pub k: usize,
    pub a: Vec<usize>,
    pub valid_subset_count: usize,
    pub lhs_degree: usize,
    pub rhs_degree: Option<usize>,
    pub outcome: ConjectureOutcome,
}

/// Evaluates the conjecture for every special permutation with leading
/// code entry up to `n_max` and reports each comparison; nothing is
/// asserted.
pub fn conjecture_report(n_max: usize) -> Vec<ConjectureRow> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for sp in special_permutations(n) {
            let rhs = conjecture_rhs_special(&sp);
            let lhs = d_integration(&sp.w);
            let rhs_cap = y_to_cap_y(&rhs);
            let outcome = if rhs_cap == lhs.cap_y_form {
                ConjectureOutcome::Equal
            } else if rhs.homogeneous_degree().map(|d| d as usize) == Some(sp.w.length()) {
                ConjectureOutcome::UnequalSameDegree
            } else {
                ConjectureOutcome::UnequalDegreeMismatch
            };
            rows.push(ConjectureRow {
                valid_subset_count: valid_subsets(&sp).len(),
                lhs_degree: sp.w.length(),
                rhs_degree: rhs.homogeneous_degree().map(|d| d as usize),
                outcome,
                w: sp.w,
                n: sp.n,
                k: sp.k,
                a: sp.a,
            });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, rat_int};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect()
    }

    #[test]
    fn permanent_small_cases() {
        let id = int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(permanent(&id), Rat::one());
        let ones = int_matrix(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(permanent(&ones), rat_int(6));
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(permanent(&m), rat_int(10));
        assert_eq!(permanent(&[]), Rat::one());
    }

    #[test]
    fn gram_permanent_goldens() {
        let expected = [(2usize, 2i64), (3, 12), (4, 288), (5, 34560)];
        for (n, value) in expected {
            let report = cartan_gram_check(n);
            assert_eq!(report.permanent, rat_int(value), "n = {n}");
            assert_eq!(report.factorial_product, rat_int(value));
            assert_eq!(report.order_times_heights, rat_int(value));
            assert!(report.ok());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn ryser_matches_naive(entries in proptest::collection::vec((-5i64..=5, 1i64..=3), 25)) {
            let m: Vec<Vec<Rat>> = entries
                .chunks(5)
                .map(|row| row.iter().map(|&(p, q)| rat(p, q)).collect())
                .collect();
            prop_assert_eq!(permanent(&m), permanent_naive(&m));
        }
    }

    #[test]
    fn special_detection() {
        let w = Perm::parse("41532").unwrap();
        let sp = SpecialPermutation::detect(&w).unwrap();
        assert_eq!((sp.n, sp.k), (3, 2));
        assert_eq!(sp.a, vec![2, 5]);
        let w = Perm::parse("761829543").unwrap();
        let sp = SpecialPermutation::detect(&w).unwrap();
        assert_eq!((sp.n, sp.k), (6, 3));
        assert_eq!(sp.a, vec![3, 5, 9]);
        assert!(SpecialPermutation::detect(&Perm::parse("321").unwrap()).is_some());
        assert!(SpecialPermutation::detect(&Perm::parse("231").unwrap()).is_none());
        assert!(SpecialPermutation::detect(&Perm::identity(3)).is_none());
    }

    #[test]
    fn special_enumeration_counts() {
        for n in 1..=4 {
            let all = special_permutations(n);
            assert_eq!(all.len(), 1 << (n - 1), "n = {n}");
            let distinct: BTreeSet<String> = all.iter().map(|sp| sp.w.to_string()).collect();
            assert_eq!(distinct.len(), all.len());
            for sp in &all {
                assert_eq!(sp.w.length(), n * (n + 1) / 2);
                assert_eq!(*sp.a.last().unwrap(), sp.n + sp.k);
            }
        }
    }

    #[test]
    fn valid_subsets_golden() {
        let sp = SpecialPermutation::detect(&Perm::parse("41532").unwrap()).unwrap();
        let got: BTreeSet<Vec<usize>> = valid_subsets(&sp).into_iter().collect();
        let expect: BTreeSet<Vec<usize>> = [
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![1, 4, 5],
            vec![2, 3, 4],
            vec![2, 3, 5],
            vec![2, 4, 5],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn maximal_subset_has_sign_one() {
        for n in 1..=4 {
            for sp in special_permutations(n) {
                let nk = sp.n + sp.k;
                let skip: BTreeSet<usize> = std::iter::once(1)
                    .chain(sp.a[..sp.k - 1].iter().map(|&ai| ai + 1))
                    .collect();
                let l: Vec<usize> = (1..=nk).filter(|i| !skip.contains(i)).collect();
                let subsets = valid_subsets(&sp);
                assert!(subsets.contains(&l), "n = {n}, w = {}", sp.w);
                assert_eq!(subset_sign_exponent(&sp, &l), 0);
                let max_sum = subsets
                    .iter()
                    .map(|j| j.iter().sum::<usize>())
                    .max()
                    .unwrap();
                assert_eq!(l.iter().sum::<usize>(), max_sum);
            }
        }
    }

    #[test]
    fn conjecture_rhs_six_term_golden() {
        let w = Perm::parse("41532").unwrap();
        let sp = SpecialPermutation::detect(&w).unwrap();
        for (subset, d) in [
            (vec![2, 4, 5], 0),
            (vec![1, 4, 5], 1),
            (vec![2, 3, 5], 1),
            (vec![1, 3, 5], 2),
            (vec![2, 3, 4], 2),
            (vec![1, 3, 4], 3),
        ] {
            assert_eq!(subset_sign_exponent(&sp, &subset), d, "J = {subset:?}");
        }
        let rhs = conjecture_rhs(&w).unwrap();
        let y = |i| Poly::var(Family::Y, 5, i);
        let ad = |i: usize, j: usize, k: usize| {
            vandermonde(&[y(i), y(j), y(k)], Family::Y, 5)
        };
        let expect = ad(1, 2, 4)
            .sub(&ad(1, 2, 5))
            .sub(&ad(1, 3, 4))
            .add(&ad(1, 3, 5))
            .add(&ad(2, 3, 4))
            .sub(&ad(2, 3, 5))
            .scale(&rat(1, 30));
        assert_eq!(rhs, expect);
        // The six signed terms cancel: within each sign class the products
        // telescope, and the display collapses to the zero polynomial.
        assert!(rhs.is_zero());
        assert!(conjecture_rhs(&Perm::parse("231").unwrap()).is_err());
    }

    #[test]
    fn smallest_case_cancels_to_zero() {
        let rhs = conjecture_rhs(&Perm::parse("21").unwrap()).unwrap();
        assert!(rhs.is_zero());
    }

    #[test]
    fn report_classifies_every_special_permutation() {
        let rows = conjecture_report(3);
        assert_eq!(rows.len(), 1 + 2 + 4);
        for row in &rows {
            assert_eq!(row.outcome, ConjectureOutcome::UnequalDegreeMismatch);
            assert_eq!(row.lhs_degree, row.n * (row.n + 1) / 2);
            assert_eq!(row.rhs_degree, None, "w = {}", row.w);
        }
        let target = rows
            .iter()
            .find(|row| row.w == Perm::parse("41532").unwrap())
            .expect("the six-term example is part of the sweep");
        assert_eq!(target.valid_subset_count, 6);
        assert_eq!((target.lhs_degree, target.rhs_degree), (6, None));
    }
}
