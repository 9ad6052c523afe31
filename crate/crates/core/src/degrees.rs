//! Degree polynomials of Schubert varieties.
//!
//! For permutations `u <= w` the degree polynomial is
//!
//! ```text
//! D_{u,w}(y) = (1 / (l(w) - l(u))!) *
//!              sum over saturated chains u = v_0 < ... < v_l = w
//!              of the product of the Chevalley weights y_i - y_j
//!              attached to the covers v t_{ij} along the chain.
//! ```
//!
//! It is homogeneous of degree `l(w) - l(u)`, and `l(w)! * D_w(lambda)`
//! is the degree of the Schubert variety of `w` in the projective
//! embedding given by a dominant weight `lambda`.
//!
//! Routes implemented here: dynamic programming over the Bruhat interval
//! ([`d_chains`]), iterated integration operators ([`d_integration`]),
//! Schubert polynomials acting as differential operators on the top
//! degree polynomial ([`d_differential`]), determinant formulas for
//! 312-avoiding and 231-avoiding permutations ([`d_determinant`]), and a
//! Cartan-matrix closed formula over a reduced word ([`d_duan`]).
//!
//! All routes are compared through the canonical form in root
//! coordinates, obtained by `y_i -> Y_i + ... + Y_{n-1}`, `y_n -> 0`.

use crate::exactpoly::{
    apply_diff_operator, d_pairing, rat_factorial, rat_int, Family, Poly, Rat,
};
use crate::operators::{apply_word, OperatorKind};
use crate::permgroup::{
    all_perms, avoids, bruhat_covers_up, bruhat_leq, code, reduced_word, CartanMatrix, Perm,
    ReducedWord,
};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Errors raised by degree-polynomial computations.
#[derive(Debug, thiserror::Error)]
pub enum DegreesError {
    #[error("permutation {perm} contains a {pattern} pattern")]
    PatternPresent { perm: String, pattern: String },
    #[error("invalid block data: {0}")]
    InvalidBlocks(String),
    #[error(transparent)]
    Schubert(#[from] crate::schubert::SchubertError),
}

/// Which algorithm produced a [`DegreePolynomial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DRoute {
    Chains,
    Integration,
    Differential,
    Det312,
    Det231,
    SchurDifferential,
    Duan,
    Parking,
    Ballot,
    NestedIntegral,
    DetFull,
    DetSteck,
    TwoPowerExpansion,
    Trees,
    Recurrence,
}

impl DRoute {
    pub fn name(self) -> &'static str {
        match self {
            DRoute::Chains => "chains",
            DRoute::Integration => "integration",
            DRoute::Differential => "differential",
            DRoute::Det312 => "det-312",
            DRoute::Det231 => "det-231",
            DRoute::SchurDifferential => "schur-differential",
            DRoute::Duan => "duan",
            DRoute::Parking => "parking",
            DRoute::Ballot => "ballot",
            DRoute::NestedIntegral => "nested-integral",
            DRoute::DetFull => "det-full",
            DRoute::DetSteck => "det-steck",
            DRoute::TwoPowerExpansion => "two-power-expansion",
            DRoute::Trees => "trees",
            DRoute::Recurrence => "recurrence",
        }
    }
}

/// Determinant variant selector for [`d_determinant`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetVariant {
    Av312,
    Av231,
}

/// A degree polynomial together with its endpoints and provenance.
///
/// `y_form` is the polynomial in the coordinates `y_1, ..., y_n` as the
/// producing route emitted it; different routes may differ by the
/// translation `y_i -> y_i + c`, which the degree polynomial is invariant
/// under. `cap_y_form` is the canonical form in root coordinates and is
/// the field to compare across routes.
#[derive(Clone, Debug)]
pub struct DegreePolynomial {
    pub u: Perm,
    pub w: Perm,
    pub y_form: Poly,
    pub cap_y_form: Poly,
    pub route: DRoute,
    /// Set when `u` is not below `w`, in which case both forms are zero.
    pub empty_interval: bool,
}

impl DegreePolynomial {
    pub(crate) fn from_y(u: Perm, w: Perm, y_form: Poly, route: DRoute) -> DegreePolynomial {
        let cap_y_form = y_to_cap_y(&y_form);
        DegreePolynomial {
            u,
            w,
            y_form,
            cap_y_form,
            route,
            empty_interval: false,
        }
    }

    pub(crate) fn from_cap_y(u: Perm, w: Perm, cap_y_form: Poly, route: DRoute) -> DegreePolynomial {
        let y_form = cap_y_to_y(&cap_y_form);
        DegreePolynomial {
            u,
            w,
            y_form,
            cap_y_form,
            route,
            empty_interval: false,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cap_y_form.is_zero()
    }
}

/// Rewrites a `y`-family polynomial of arity `n` in the root coordinates
/// `Y_i = y_i - y_{i+1}` by substituting `y_i -> Y_i + ... + Y_{n-1}` and
/// `y_n -> 0`. The result has arity `n - 1`.
pub fn y_to_cap_y(p: &Poly) -> Poly {
    let n = p.arity();
    assert!(n >= 1, "need at least one variable");
    let images: Vec<Poly> = (1..=n)
        .map(|i| {
            let mut acc = Poly::zero(Family::CapY, n - 1);
            for k in i..n {
                acc = acc.add(&Poly::var(Family::CapY, n - 1, k));
            }
            acc
        })
        .collect();
    p.substitute(&images)
}

/// Inverse of [`y_to_cap_y`] up to translation: `Y_i -> y_i - y_{i+1}`.
/// The result has arity one more than the input.
pub fn cap_y_to_y(p: &Poly) -> Poly {
    let r = p.arity();
    let images: Vec<Poly> = (1..=r)
        .map(|i| Poly::var(Family::Y, r + 1, i).sub(&Poly::var(Family::Y, r + 1, i + 1)))
        .collect();
    if r == 0 {
        return p.with_family(Family::Y).with_arity(1);
    }
    p.substitute(&images)
}

/// Degree polynomial by dynamic programming over the Bruhat interval.
///
/// When `u` is not below `w` the zero polynomial is returned with the
/// `empty_interval` flag set.
pub fn d_chains(u: &Perm, w: &Perm) -> DegreePolynomial {
    let n = u.n().max(w.n());
    let u = u.extend(n);
    let w = w.extend(n);
    if !bruhat_leq(&u, &w) {
        return DegreePolynomial {
            y_form: Poly::zero(Family::Y, n),
            cap_y_form: Poly::zero(Family::CapY, n.saturating_sub(1)),
            u,
            w,
            route: DRoute::Chains,
            empty_interval: true,
        };
    }
    let interval: Vec<Perm> = all_perms(n)
        .into_iter()
        .filter(|v| bruhat_leq(&u, v) && bruhat_leq(v, &w))
        .collect();
    let mut by_length: BTreeMap<usize, Vec<Perm>> = BTreeMap::new();
    for v in interval {
        by_length.entry(v.length()).or_default().push(v);
    }
    let mut sums: HashMap<Perm, Poly> = HashMap::new();
    sums.insert(w.clone(), Poly::one(Family::Y, n));
    for (_, layer) in by_length.iter().rev() {
        for v in layer {
            if *v == w {
                continue;
            }
            let mut acc = Poly::zero(Family::Y, n);
            for (v2, i, j) in bruhat_covers_up(v) {
                if let Some(f) = sums.get(&v2) {
                    let weight = Poly::var(Family::Y, n, i).sub(&Poly::var(Family::Y, n, j));
                    acc = acc.add(&weight.mul(f));
                }
            }
            sums.insert(v.clone(), acc);
        }
    }
    let l = w.length() - u.length();
    let y_form = sums
        .remove(&u)
        .expect("bottom of a nonempty interval is reachable")
        .scale(&rat_factorial(l as u64).recip());
    DegreePolynomial::from_y(u, w, y_form, DRoute::Chains)
}

/// Degree polynomial `D_w` by iterated integration operators along a
/// reduced word of `w`.
pub fn d_integration(w: &Perm) -> DegreePolynomial {
    let n = w.n();
    let y_form = apply_word(
        &reduced_word(w),
        &Poly::one(Family::Y, n),
        OperatorKind::Integration,
    );
    DegreePolynomial::from_y(Perm::identity(n), w.clone(), y_form, DRoute::Integration)
}

/// Normalized Vandermonde: the degree polynomial of the longest element,
/// `prod_{i<j} (y_i - y_j) / (1! 2! ... (n-1)!)`.
pub fn top_degree_polynomial(n: usize) -> Poly {
    let mut acc = Poly::one(Family::Y, n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            acc = acc.mul(&Poly::var(Family::Y, n, i).sub(&Poly::var(Family::Y, n, j)));
        }
    }
    let mut denom = Rat::one();
    for k in 1..n {
        denom *= rat_factorial(k as u64);
    }
    acc.scale(&denom.recip())
}

/// Degree polynomial `D_{u,w}` by applying `S_u(d/dy) S_{w0 w}(d/dy)` to
/// the degree polynomial of the longest element.
pub fn d_differential(u: &Perm, w: &Perm) -> DegreePolynomial {
    let n = u.n().max(w.n());
    let u = u.extend(n);
    let w = w.extend(n);
    let su = crate::schubert::schubert_poly(&u);
    let sw0w = crate::schubert::schubert_poly(&Perm::longest(n).compose(&w));
    let operator = su.mul(&sw0w);
    let y_form = apply_diff_operator(&operator, &top_degree_polynomial(n));
    DegreePolynomial::from_y(u, w, y_form, DRoute::Differential)
}

/// Divided power `y^(b) = y^b / b!` as an optional monomial datum; `None`
/// encodes zero (negative `b`).
pub(crate) fn divided_power_entry(b: i64) -> Option<(u32, Rat)> {
    if b < 0 {
        return None;
    }
    Some((b as u32, rat_factorial(b as u64).recip()))
}

/// Determinant of a matrix whose entries are monomials
/// `coeff * y_var^exp`, expanded over permutations.
pub(crate) fn monomial_matrix_det(
    n: usize,
    arity: usize,
    entry: impl Fn(usize, usize) -> Option<(usize, u32, Rat)>,
) -> Poly {
    let mut out = Poly::zero(Family::Y, arity);
    for sigma in all_perms(n) {
        let mut coeff = if sigma.length() % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        let mut expo = vec![0u32; arity];
        let mut zero = false;
        for i in 1..=n {
            match entry(i, sigma.at(i)) {
                Some((var, e, c)) => {
                    expo[var - 1] += e;
                    coeff *= c;
                }
                None => {
                    zero = true;
                    break;
                }
            }
        }
        if !zero {
            out = out.add(&Poly::monomial(Family::Y, arity, &expo, coeff));
        }
    }
    out
}

/// Degree polynomial by determinant, for 312-avoiding or 231-avoiding
/// permutations.
///
/// For 312-avoiding `w` with `c = code(w0 w)` the matrix entry is the
/// divided power `y_i^(n - c_i - j)`; for 231-avoiding `w` with
/// `c = code(w w0)` it is `(-y_{n-i+1})^(n - c_i - j)`.
pub fn d_determinant(w: &Perm, variant: DetVariant) -> Result<DegreePolynomial, DegreesError> {
    let n = w.n();
    let (pattern, c) = match variant {
        DetVariant::Av312 => ("312", code(&Perm::longest(n).compose(w))),
        DetVariant::Av231 => ("231", code(&w.compose(&Perm::longest(n)))),
    };
    if !avoids(w, &Perm::parse(pattern).expect("valid pattern")) {
        return Err(DegreesError::PatternPresent {
            perm: w.to_string(),
            pattern: pattern.to_string(),
        });
    }
    let y_form = monomial_matrix_det(n, n, |i, j| {
        let b = n as i64 - c[i - 1] as i64 - j as i64;
        let (e, mut coeff) = divided_power_entry(b)?;
        let var = match variant {
            DetVariant::Av312 => i,
            DetVariant::Av231 => {
                if e % 2 == 1 {
                    coeff = -coeff;
                }
                n - i + 1
            }
        };
        Some((var, e, coeff))
    });
    let route = match variant {
        DetVariant::Av312 => DRoute::Det312,
        DetVariant::Av231 => DRoute::Det231,
    };
    Ok(DegreePolynomial::from_y(
        Perm::identity(n),
        w.clone(),
        y_form,
        route,
    ))
}

/// Degree polynomial for a 3412-avoiding permutation by applying the
/// flagged Schur polynomial of the vexillary complement `w0 w` as a
/// differential operator to the degree polynomial of the longest
/// element.
pub fn d_schur_differential(w: &Perm) -> Result<DegreePolynomial, DegreesError> {
    if !avoids(w, &Perm::parse("3412").expect("valid pattern")) {
        return Err(DegreesError::PatternPresent {
            perm: w.to_string(),
            pattern: "3412".to_string(),
        });
    }
    let n = w.n();
    let v = Perm::longest(n).compose(w);
    let mu = crate::permgroup::shape(&v);
    let b = crate::permgroup::flag(&v);
    let a = vec![1; mu.len()];
    let operator = crate::demazure::flagged_schur_tableaux(&mu, &a, &b, n);
    let y_form = apply_diff_operator(&operator, &top_degree_polynomial(n));
    Ok(DegreePolynomial::from_y(
        Perm::identity(n),
        w.clone(),
        y_form,
        DRoute::SchurDifferential,
    ))
}

/// Which determinant variants apply to `w`.
pub fn det_variants_for(w: &Perm) -> Vec<DetVariant> {
    let mut out = Vec::new();
    if avoids(w, &Perm::parse("312").expect("valid pattern")) {
        out.push(DetVariant::Av312);
    }
    if avoids(w, &Perm::parse("231").expect("valid pattern")) {
        out.push(DetVariant::Av231);
    }
    out
}

/// Closed formula for the degree polynomial over a reduced word
/// `(i_1, ..., i_l)` and a Cartan matrix `A`, as a polynomial in the root
/// coordinates:
///
/// ```text
/// sum over arrays (k_pq), 1 <= p < q <= l, k_pq >= 0, with
///   K_in(s) + 1 >= K_out(s) for all s, of
///   prod_{p<q} (-a_{i_p i_q})^{k_pq} / k_pq!
///   * prod_s K_in(s)! Y_{i_s}^{K_in(s) + 1 - K_out(s)}
///            / (K_in(s) + 1 - K_out(s))!
/// ```
///
/// where `K_in(s)` sums `k_ps` over `p < s` and `K_out(s)` sums `k_sq`
/// over `q > s`.
pub fn d_duan(a: &CartanMatrix, word: &ReducedWord) -> Poly {
    let letters = word.letters();
    let l = letters.len();
    let r = a.rank();
    assert!(
        letters.iter().all(|&i| i <= r),
        "letters must index rows of the Cartan matrix"
    );
    let mut out = Poly::zero(Family::CapY, r);

    // Depth-first search over positions: when visiting position s
    // (0-based), K_in(s) is final. Choose the outflows (k_{s,q})_{q>s}
    // subject to sum <= K_in(s) + 1 and a_{i_s i_q} != 0, then recurse.
    // The leftover capacity at s is the exponent of Y_{i_s}, and the
    // factor K_in(s)! / leftover! is folded in when the outflows of s
    // are fixed.
    fn dfs(
        s: usize,
        inflow: &mut Vec<u32>,
        coeff: Rat,
        exponents: &mut Vec<u32>,
        letters: &[usize],
        a: &CartanMatrix,
        out: &mut Poly,
        r: usize,
    ) {
        let l = letters.len();
        if s == l {
            let mut expo = vec![0u32; r];
            for (t, &e) in exponents.iter().enumerate() {
                expo[letters[t] - 1] += e;
            }
            *out = out.add(&Poly::monomial(Family::CapY, r, &expo, coeff));
            return;
        }
        let capacity = inflow[s] + 1;
        let targets: Vec<usize> = ((s + 1)..l)
            .filter(|&q| a.entry(letters[s], letters[q]) != 0)
            .collect();
        // Enumerate outflow tuples over the admissible targets.
        fn choose(
            idx: usize,
            remaining: u32,
            targets: &[usize],
            s: usize,
            inflow: &mut Vec<u32>,
            coeff: Rat,
            exponents: &mut Vec<u32>,
            letters: &[usize],
            a: &CartanMatrix,
            out: &mut Poly,
            r: usize,
        ) {
            if idx == targets.len() {
                let mut c = coeff;
                c *= rat_factorial(inflow[s] as u64);
                c /= rat_factorial(remaining as u64);
                exponents.push(remaining);
                dfs(s + 1, inflow, c, exponents, letters, a, out, r);
                exponents.pop();
                return;
            }
            let q = targets[idx];
            for k in 0..=remaining {
                let mut c = coeff.clone();
                if k > 0 {
                    let aij = a.entry(letters[s], letters[q]);
                    let mut power = Rat::one();
                    for _ in 0..k {
                        power *= rat_int(-aij);
                    }
                    c *= power / rat_factorial(k as u64);
                    inflow[q] += k;
                }
                choose(
                    idx + 1,
                    remaining - k,
                    targets,
                    s,
                    inflow,
                    c,
                    exponents,
                    letters,
                    a,
                    out,
                    r,
                );
                if k > 0 {
                    inflow[q] -= k;
                }
            }
        }
        choose(
            0, capacity, &targets, s, inflow, coeff, exponents, letters, a, out, r,
        );
    }

    let mut inflow = vec![0u32; l];
    let mut exponents = Vec::with_capacity(l);
    dfs(
        0,
        &mut inflow,
        Rat::one(),
        &mut exponents,
        letters,
        a,
        &mut out,
        r,
    );
    out
}

/// Degree of the Schubert variety of `w` in the embedding given by
/// `lambda`: `length(w)! * D_w(lambda)`.
pub fn degree_of_schubert(w: &Perm, lambda: &[Rat]) -> Rat {
    assert_eq!(lambda.len(), w.n(), "lambda length must match group size");
    let d = d_integration(w);
    d.y_form.evaluate(lambda) * rat_factorial(w.length() as u64)
}

/// Littlewood-Richardson coefficients `c_{u,v}^w` for fixed `u <= w`,
/// obtained by pairing Schubert polynomials against `D_{u,w}`:
/// `D_{u,w} = sum_v c_{u,v}^w D_v`, so `c_v = (S_v, D_{u,w})`.
pub fn lr_via_degrees(u: &Perm, w: &Perm) -> BTreeMap<Perm, Rat> {
    let n = u.n().max(w.n());
    let d = d_chains(u, w);
    let mut out = BTreeMap::new();
    if d.empty_interval {
        return out;
    }
    let l = w.length() - u.length();
    for v in all_perms(n) {
        if v.length() != l {
            continue;
        }
        let sv = crate::schubert::schubert_poly(&v);
        let c = d_pairing(&sv, &d.y_form);
        if !c.is_zero() {
            out.insert(v.trim(), c);
        }
    }
    out
}

/// Verifies the coproduct identity
/// `D_w(y_1 + z_1, ..., y_n + z_n) = sum_{u,v} c_{u,v}^w D_u(y) D_v(z)`
/// inside one polynomial ring on `2n` variables.
pub fn coproduct_check(w: &Perm) -> bool {
    let n = w.n();
    let d = d_chains(&Perm::identity(n), w);
    let images: Vec<Poly> = (1..=n)
        .map(|i| Poly::var(Family::Y, 2 * n, i).add(&Poly::var(Family::Y, 2 * n, n + i)))
        .collect();
    let lhs = d.y_form.substitute(&images);
    let mut rhs = Poly::zero(Family::Y, 2 * n);
    for u in all_perms(n) {
        if !bruhat_leq(&u, w) {
            continue;
        }
        let du = d_chains(&Perm::identity(n), &u).y_form.with_arity(2 * n);
        for (v, c) in lr_via_degrees(&u, w) {
            let dv = d_chains(&Perm::identity(n), &v.extend(n)).y_form;
            // Shift the second factor onto variables n+1, ..., 2n.
            let shift: Vec<Poly> = (1..=n)
                .map(|i| Poly::var(Family::Y, 2 * n, n + i))
                .collect();
            let dv_shifted = dv.substitute(&shift);
            rhs = rhs.add(&du.mul(&dv_shifted).scale(&c));
        }
    }
    lhs == rhs
}

/// Verifies multiplicativity over block-diagonal permutations: for
/// permutations `w^1, ..., w^m` placed on consecutive letter blocks, the
/// degree polynomial of the concatenation equals the product of the
/// degree polynomials of the blocks in their own variables, and the
/// evaluation at a concatenated `lambda` factors accordingly.
///
/// Each block must avoid 312 or avoid 231.
pub fn block_product_check(blocks: &[Perm], lambdas: &[Vec<i64>]) -> Result<bool, DegreesError> {
    if blocks.is_empty() || blocks.len() != lambdas.len() {
        return Err(DegreesError::InvalidBlocks(
            "need the same positive number of blocks and lambda blocks".into(),
        ));
    }
    for (b, lam) in blocks.iter().zip(lambdas) {
        if lam.len() != b.n() {
            return Err(DegreesError::InvalidBlocks(format!(
                "lambda block {lam:?} does not match block size {}",
                b.n()
            )));
        }
        if det_variants_for(b).is_empty() {
            return Err(DegreesError::PatternPresent {
                perm: b.to_string(),
                pattern: "312 and 231".to_string(),
            });
        }
    }
    let n: usize = blocks.iter().map(Perm::n).sum();
    let mut word = Vec::with_capacity(n);
    let mut offset = 0;
    for b in blocks {
        word.extend(b.one_line().iter().map(|&v| v + offset));
        offset += b.n();
    }
    let w = Perm::from_one_line(word).expect("blocks concatenate to a permutation");
    let lhs = d_chains(&Perm::identity(n), &w).y_form;
    let mut rhs = Poly::one(Family::Y, n);
    let mut offset = 0;
    for b in blocks {
        let db = d_chains(&Perm::identity(b.n()), b).y_form;
        let shift: Vec<Poly> = (1..=b.n())
            .map(|i| Poly::var(Family::Y, n, offset + i))
            .collect();
        rhs = rhs.mul(&db.substitute(&shift));
        offset += b.n();
    }
    if lhs != rhs {
        return Ok(false);
    }
    let point: Vec<Rat> = lambdas
        .iter()
        .flatten()
        .map(|&v| rat_int(v))
        .collect();
    let mut prod = Rat::one();
    for (b, lam) in blocks.iter().zip(lambdas) {
        let pt: Vec<Rat> = lam.iter().map(|&v| rat_int(v)).collect();
        prod *= d_chains(&Perm::identity(b.n()), b).y_form.evaluate(&pt);
    }
    Ok(lhs.evaluate(&point) == prod)
}
