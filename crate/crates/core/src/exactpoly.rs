//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Poly`] is a finite map from exponent vectors to nonzero
//! `BigRational` coefficients, tagged with a variable family and an arity.
//! Four variable families are supported: `x1, x2, ...` and `z1, z2, ...`
//! for polynomial rings acted on by divided difference and Demazure
//! operators, `y1, y2, ...` for degree polynomials in coordinate form, and
//! `Y1, Y2, ...` for degree polynomials in simple-root coordinates.
//!
//! Operations that combine two polynomials require equal family and arity
//! and panic otherwise; mixing families silently is almost always a bug in
//! the caller. Fallible conversions (parsing, JSON) return [`PolyError`].
//!
//! The canonical term order is graded lexicographic, and serialized forms
//! list terms in descending canonical order so that equal polynomials have
//! byte-identical JSON.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Errors raised by parsing and serialization of polynomials and scalars.
#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
    #[error("unknown variable family tag `{0}`")]
    BadFamily(String),
    #[error("exponent vector of length {found} does not match arity {arity}")]
    BadExponent { found: usize, arity: usize },
    #[error("invalid polynomial JSON: {0}")]
    BadJson(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}

/// Convenience constructor for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
pub fn parse_rat(s: &str) -> Result<Rat, PolyError> {
    let t = s.trim();
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| PolyError::BadRational(s.to_string())),
        Some((p, q)) => {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| PolyError::BadRational(s.to_string()))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| PolyError::BadRational(s.to_string()))?;
            if q.is_zero() {
                return Err(PolyError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Formats a rational as `"p"` or `"p/q"` in lowest terms.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// `n!` as a rational.
pub fn rat_factorial(n: u64) -> Rat {
    BigRational::from_integer(factorial(n))
}

/// Binomial coefficient through the falling factorial, valid for any
/// integer `n` and zero when `k < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(n - t);
    }
    let q = BigRational::new(num, factorial(k as u64));
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Variable family tag. Serialized as `"x"`, `"y"`, `"z"`, `"Y"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "Y")]
    CapY,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::CapY => "Y",
        }
    }

    pub fn from_tag(s: &str) -> Result<Family, PolyError> {
        match s {
            "x" => Ok(Family::X),
            "y" => Ok(Family::Y),
            "z" => Ok(Family::Z),
            "Y" => Ok(Family::CapY),
            other => Err(PolyError::BadFamily(other.to_string())),
        }
    }

    /// Display name of the `i`-th variable, 1-based.
    pub fn var_name(self, i: usize) -> String {
        format!("{}{}", self.tag(), i)
    }
}

/// Exponent vector of a monomial. Ordered by total degree, then
/// lexicographically, so the maximal element of a term map is the leading
/// term in graded lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expo(pub Vec<u32>);

impl Expo {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    family: Family,
    arity: usize,
    terms: Vec<TermJson>,
}

/// Sparse exact polynomial. See the module documentation for conventions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    family: Family,
    arity: usize,
    terms: BTreeMap<Expo, Rat>,
}

impl Poly {
    pub fn zero(family: Family, arity: usize) -> Poly {
        Poly {
            family,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(family: Family, arity: usize) -> Poly {
        Poly::constant(family, arity, Rat::one())
    }

    pub fn constant(family: Family, arity: usize, c: Rat) -> Poly {
        let mut p = Poly::zero(family, arity);
        p.insert_term(Expo(vec![0; arity]), c);
        p
    }

    /// The variable `i`, 1-based. Panics if `i` is out of range.
    pub fn var(family: Family, arity: usize, i: usize) -> Poly {
        assert!(i >= 1 && i <= arity, "variable index {i} out of 1..={arity}");
        let mut e = vec![0u32; arity];
        e[i - 1] = 1;
        Poly::monomial(family, arity, &e, Rat::one())
    }

    pub fn monomial(family: Family, arity: usize, expo: &[u32], c: Rat) -> Poly {
        assert_eq!(expo.len(), arity, "exponent length must equal arity");
        let mut p = Poly::zero(family, arity);
        p.insert_term(Expo(expo.to_vec()), c);
        p
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Expo::degree).max()
    }

    /// `Some(d)` if nonzero and every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Expo::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter().rev()
    }

    /// Leading term in graded lexicographic order.
    pub fn leading(&self) -> Option<(&Expo, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of the given exponent vector, zero when absent.
    pub fn coefficient(&self, expo: &[u32]) -> Rat {
        assert_eq!(expo.len(), self.arity, "exponent length must equal arity");
        self.terms
            .get(&Expo(expo.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn insert_term(&mut self, e: Expo, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Poly, op: &str) {
        assert_eq!(
            self.family, other.family,
            "{op}: variable families differ ({} vs {})",
            self.family.tag(),
            other.family.tag()
        );
        assert_eq!(
            self.arity, other.arity,
            "{op}: arities differ ({} vs {})",
            self.arity, other.arity
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_compatible(other, "add");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_compatible(other, "sub");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.family, self.arity);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.family, self.arity);
        }
        let mut out = Poly::zero(self.family, self.arity);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_compatible(other, "mul");
        let mut out = Poly::zero(self.family, self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = Expo(
                    ea.0.iter()
                        .zip(&eb.0)
                        .map(|(a, b)| a + b)
                        .collect::<Vec<_>>(),
                );
                out.insert_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.family, self.arity);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `i`, 1-based.
    pub fn partial_derivative(&self, i: usize) -> Poly {
        assert!(i >= 1 && i <= self.arity, "variable index out of range");
        let mut out = Poly::zero(self.family, self.arity);
        for (e, c) in &self.terms {
            let k = e.0[i - 1];
            if k == 0 {
                continue;
            }
            let mut e2 = e.0.clone();
            e2[i - 1] = k - 1;
            out.insert_term(Expo(e2), c * rat_int(k as i64));
        }
        out
    }

    /// Evaluates at an exact point. `point.len()` must equal the arity.
    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.arity, "point length must equal arity");
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in point.iter().zip(&e.0) {
                for _ in 0..k {
                    term *= v;
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes every variable simultaneously: variable `i` becomes
    /// `images[i-1]`. All images must share one family and arity, which
    /// become the family and arity of the result.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.arity, "need one image per variable");
        let (family, arity) = match images.first() {
            Some(p) => (p.family, p.arity),
            None => (self.family, 0),
        };
        for p in images {
            assert_eq!(p.family, family, "substitution images must share family");
            assert_eq!(p.arity, arity, "substitution images must share arity");
        }
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(self.arity);
        let max_exp: Vec<u32> = (0..self.arity)
            .map(|k| self.terms.keys().map(|e| e.0[k]).max().unwrap_or(0))
            .collect();
        for (img, &m) in images.iter().zip(&max_exp) {
            let mut row = vec![Poly::one(family, arity)];
            for k in 1..=m {
                let next = row[(k - 1) as usize].mul(img);
                row.push(next);
            }
            powers.push(row);
        }
        let mut out = Poly::zero(family, arity);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(family, arity, c.clone());
            for (k, &m) in e.0.iter().enumerate() {
                if m > 0 {
                    term = term.mul(&powers[k][m as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exchanges variables `i` and `j`, 1-based.
    pub fn swap_vars(&self, i: usize, j: usize) -> Poly {
        assert!(i >= 1 && i <= self.arity && j >= 1 && j <= self.arity);
        let mut out = Poly::zero(self.family, self.arity);
        for (e, c) in &self.terms {
            let mut e2 = e.0.clone();
            e2.swap(i - 1, j - 1);
            out.insert_term(Expo(e2), c.clone());
        }
        out
    }

    /// Reinterprets the polynomial in another variable family.
    pub fn with_family(&self, family: Family) -> Poly {
        let mut out = Poly::zero(family, self.arity);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.clone());
        }
        out
    }

    /// Pads with trailing variables, or drops trailing variables that do
    /// not occur. Panics when shrinking onto an occurring variable.
    pub fn with_arity(&self, arity: usize) -> Poly {
        let mut out = Poly::zero(self.family, arity);
        for (e, c) in &self.terms {
            let mut e2 = e.0.clone();
            if arity >= e2.len() {
                e2.resize(arity, 0);
            } else {
                assert!(
                    e2[arity..].iter().all(|&k| k == 0),
                    "cannot shrink arity below an occurring variable"
                );
                e2.truncate(arity);
            }
            out.terms.insert(Expo(e2), c.clone());
        }
        out
    }

    /// Splits into homogeneous components, keyed by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.degree())
                .or_insert_with(|| Poly::zero(self.family, self.arity))
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    /// Canonical JSON encoding with terms in descending graded lex order.
    pub fn to_json_string(&self) -> String {
        let mirror = PolyJson {
            family: self.family,
            arity: self.arity,
            terms: self
                .terms_desc()
                .map(|(e, c)| TermJson {
                    c: format_rat(c),
                    e: e.0.clone(),
                })
                .collect(),
        };
        serde_json::to_string(&mirror).expect("polynomial JSON serialization cannot fail")
    }

    /// Parses the JSON encoding produced by [`Poly::to_json_string`].
    /// Accepts terms in any order and normalizes.
    pub fn from_json_str(s: &str) -> Result<Poly, PolyError> {
        let mirror: PolyJson =
            serde_json::from_str(s).map_err(|e| PolyError::BadJson(e.to_string()))?;
        let mut p = Poly::zero(mirror.family, mirror.arity);
        for t in mirror.terms {
            if t.e.len() != mirror.arity {
                return Err(PolyError::BadExponent {
                    found: t.e.len(),
                    arity: mirror.arity,
                });
            }
            p.insert_term(Expo(t.e), parse_rat(&t.c)?);
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms_desc() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.family.var_name(i + 1)
                    } else {
                        format!("{}^{}", self.family.var_name(i + 1), k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rat(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Applies `f` as a constant-coefficient differential operator to `g`:
/// every monomial `c * v^a` of `f` acts as `c * d^a / dv^a`. The arities
/// must agree; the result lives in the family of `g`.
pub fn apply_diff_operator(f: &Poly, g: &Poly) -> Poly {
    assert_eq!(f.arity, g.arity, "operator and operand arities differ");
    let mut out = Poly::zero(g.family, g.arity);
    for (ef, cf) in &f.terms {
        for (eg, cg) in &g.terms {
            if ef.0.iter().zip(&eg.0).any(|(a, b)| a > b) {
                continue;
            }
            let mut coeff = cf * cg;
            let mut e = Vec::with_capacity(g.arity);
            for (&a, &b) in ef.0.iter().zip(&eg.0) {
                for t in 0..a {
                    coeff *= rat_int((b - t) as i64);
                }
                e.push(b - a);
            }
            out.insert_term(Expo(e), coeff);
        }
    }
    out
}

/// Pairing `(f, g) = constant term of f(d/dv) g(v)`. Symmetric in its
/// arguments; on monomials it evaluates to `a! = a_1! a_2! ...` times the
/// product of matching coefficients.
pub fn d_pairing(f: &Poly, g: &Poly) -> Rat {
    assert_eq!(f.arity, g.arity, "pairing requires equal arities");
    let mut acc = Rat::zero();
    for (e, cf) in &f.terms {
        if let Some(cg) = g.terms.get(e) {
            let mut term = cf * cg;
            for &k in &e.0 {
                term *= rat_factorial(k as u64);
            }
            acc += term;
        }
    }
    acc
}

/// Definite integral in the final auxiliary variable.
///
/// `p` must have arity one larger than `lower` and `upper`; its last
/// variable is the integration variable. The result has the base arity:
/// `F(upper) - F(lower)` where `F` is the antiderivative of `p` in the
/// last variable and the remaining variables are kept.
pub fn integrate_aux(p: &Poly, lower: &Poly, upper: &Poly) -> Poly {
    let base = p.arity.checked_sub(1).expect("integrand needs a variable");
    assert_eq!(lower.arity, base, "lower bound arity must be base arity");
    assert_eq!(upper.arity, base, "upper bound arity must be base arity");
    assert_eq!(lower.family, p.family, "bound family must match integrand");
    assert_eq!(upper.family, p.family, "bound family must match integrand");
    let max_t = p.terms.keys().map(|e| e.0[base]).max().unwrap_or(0);
    let mut upper_pow = vec![Poly::one(p.family, base)];
    let mut lower_pow = vec![Poly::one(p.family, base)];
    for k in 1..=(max_t + 1) {
        upper_pow.push(upper_pow[(k - 1) as usize].mul(upper));
        lower_pow.push(lower_pow[(k - 1) as usize].mul(lower));
    }
    let mut out = Poly::zero(p.family, base);
    for (e, c) in &p.terms {
        let k = e.0[base];
        let coeff = c / rat_int((k + 1) as i64);
        let mono = Poly::monomial(p.family, base, &e.0[..base], coeff);
        out = out.add(&mono.mul(&upper_pow[(k + 1) as usize]));
        out = out.sub(&mono.mul(&lower_pow[(k + 1) as usize]));
    }
    out
}

/// Tests exact divisibility and returns the quotient when it exists.
///
/// Returns `Ok(Some(q))` when `p = d * q`, `Ok(None)` when `d` does not
/// divide `p`, and an error when `d` is zero.
pub fn divides_exactly(d: &Poly, p: &Poly) -> Result<Option<Poly>, PolyError> {
    if d.is_zero() {
        return Err(PolyError::ZeroDivisor);
    }
    d.assert_compatible(p, "divides_exactly");
    let (lt_d, lc_d) = d.leading().expect("nonzero divisor has a leading term");
    let mut q = Poly::zero(p.family, p.arity);
    let mut r = p.clone();
    while !r.is_zero() {
        let (lt_r, lc_r) = r.leading().expect("nonzero remainder has a leading term");
        if lt_d.0.iter().zip(&lt_r.0).any(|(a, b)| a > b) {
            return Ok(None);
        }
        let e: Vec<u32> = lt_r.0.iter().zip(&lt_d.0).map(|(a, b)| a - b).collect();
        let m = Poly::monomial(p.family, p.arity, &e, lc_r / lc_d);
        r = r.sub(&m.mul(d));
        q = q.add(&m);
    }
    Ok(Some(q))
}
