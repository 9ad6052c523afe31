//! Permutations in one-line notation, Bruhat order, codes, flags, and
//! Cartan matrices.
//!
//! A [`Perm`] stores the one-line word `w(1), ..., w(n)` with 1-based
//! values and caches its inversion number. Composition follows
//! `(u * v)(i) = u(v(i))`. Multiplying on the right by the simple
//! transposition `s_i` exchanges positions `i` and `i + 1`.

use itertools::Itertools;
use std::fmt;

/// Errors raised by permutation and flag constructors.
#[derive(Debug, thiserror::Error)]
pub enum PermError {
    #[error("`{0:?}` is not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse permutation `{0}`")]
    Parse(String),
    #[error("permutation {perm} contains a {pattern} pattern")]
    PatternPresent { perm: String, pattern: String },
    #[error("`{0:?}` is not a valid Lehmer code")]
    InvalidCode(Vec<usize>),
    #[error("`{0:?}` is not a weakly increasing flag with i <= b_i <= n")]
    InvalidFlag(Vec<usize>),
    #[error("word {word:?} is not reduced for its permutation (length {len})")]
    NotReduced { word: Vec<usize>, len: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    word: Vec<usize>,
    len: usize,
}

fn inversions(word: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..word.len() {
        for j in (i + 1)..word.len() {
            if word[i] > word[j] {
                inv += 1;
            }
        }
    }
    inv
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            word: (1..=n).collect(),
            len: 0,
        }
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Perm {
        Perm {
            word: (1..=n).rev().collect(),
            len: n * (n - 1) / 2,
        }
    }

    /// The simple transposition `s_i` inside the symmetric group on `n`
    /// letters, `1 <= i <= n - 1`.
    pub fn simple(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "simple reflection index out of range");
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, i);
        Perm { word, len: 1 }
    }

    pub fn from_one_line(word: Vec<usize>) -> Result<Perm, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(word));
            }
            seen[v] = true;
        }
        let len = inversions(&word);
        Ok(Perm { word, len })
    }

    /// Parses `"231"` (single digits) or `"12,3,7,...,1"` (comma separated).
    pub fn parse(s: &str) -> Result<Perm, PermError> {
        let t = s.trim();
        let word: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| PermError::Parse(s.to_string()))?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| PermError::Parse(s.to_string()))?
        };
        if word.is_empty() {
            return Err(PermError::Parse(s.to_string()));
        }
        Perm::from_one_line(word)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.word
    }

    /// Value `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn inverse(&self) -> Perm {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Perm {
            word,
            len: self.len,
        }
    }

    /// `(self * other)(i) = self(other(i))`. Requires equal sizes.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "composition requires equal sizes");
        let word: Vec<usize> = other.word.iter().map(|&v| self.word[v - 1]).collect();
        let len = inversions(&word);
        Perm { word, len }
    }

    /// Right multiplication by the transposition of positions `i < j`.
    pub fn right_t(&self, i: usize, j: usize) -> Perm {
        assert!(i >= 1 && j <= self.n() && i < j);
        let mut word = self.word.clone();
        word.swap(i - 1, j - 1);
        let len = inversions(&word);
        Perm { word, len }
    }

    /// Embeds into a larger symmetric group by appending fixed points.
    pub fn extend(&self, m: usize) -> Perm {
        assert!(m >= self.n(), "extend cannot shrink a permutation");
        let mut word = self.word.clone();
        word.extend(self.n() + 1..=m);
        Perm {
            word,
            len: self.len,
        }
    }

    /// Drops trailing fixed points, keeping at least one letter.
    pub fn trim(&self) -> Perm {
        let mut m = self.n();
        while m > 1 && self.word[m - 1] == m {
            m -= 1;
        }
        Perm {
            word: self.word[..m].to_vec(),
            len: self.len,
        }
    }

    /// Right descent positions `i` with `w(i) > w(i + 1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(","))
        }
    }
}

/// All permutations of `{1, ..., n}` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (1..=n)
        .permutations(n)
        .map(|word| {
            let len = inversions(&word);
            Perm { word, len }
        })
        .collect()
}

/// Lehmer code: `c_i = #{ j > i : w(j) < w(i) }`.
pub fn code(w: &Perm) -> Vec<usize> {
    let word = w.one_line();
    (0..word.len())
        .map(|i| (i + 1..word.len()).filter(|&j| word[j] < word[i]).count())
        .collect()
}

/// Inverse of [`code`]: `w(i)` is the `(c_i + 1)`-st smallest unused value.
pub fn perm_from_code(c: &[usize]) -> Result<Perm, PermError> {
    let n = c.len();
    let mut unused: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for (i, &ci) in c.iter().enumerate() {
        if ci + i + 1 > n {
            return Err(PermError::InvalidCode(c.to_vec()));
        }
        word.push(unused.remove(ci));
    }
    Perm::from_one_line(word)
}

/// Shape of a permutation: the nonzero code entries sorted decreasingly.
pub fn shape(w: &Perm) -> Vec<usize> {
    let mut mu: Vec<usize> = code(w).into_iter().filter(|&c| c > 0).collect();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    mu
}

/// Flag of a permutation: for each position `i` whose inversion set
/// `{ j > i : w(j) < w(i) }` is nonempty, the value `min(j) - 1`, with the
/// results sorted increasingly.
pub fn flag(w: &Perm) -> Vec<usize> {
    let word = w.one_line();
    let mut b: Vec<usize> = (0..word.len())
        .filter_map(|i| (i + 1..word.len()).find(|&j| word[j] < word[i]))
        .collect();
    b.sort_unstable();
    b
}

/// Builds the dominant permutation of a weakly decreasing code by the
/// greedy rule `w(i) = min { j > c_i : j unused }`.
pub fn code_to_dominant(c: &[usize]) -> Result<Perm, PermError> {
    let n = c.len();
    if c.windows(2).any(|p| p[0] < p[1]) || c.iter().enumerate().any(|(i, &ci)| ci + i + 1 > n) {
        return Err(PermError::InvalidCode(c.to_vec()));
    }
    let mut used = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    for &ci in c {
        let j = (ci + 1..=n)
            .find(|&j| !used[j])
            .ok_or_else(|| PermError::InvalidCode(c.to_vec()))?;
        used[j] = true;
        word.push(j);
    }
    Perm::from_one_line(word)
}

/// Whether `w` avoids the given pattern.
pub fn avoids(w: &Perm, pattern: &Perm) -> bool {
    let word = w.one_line();
    let k = pattern.n();
    if k > word.len() {
        return true;
    }
    let rel = |a: usize, b: usize| a.cmp(&b);
    !(0..word.len()).combinations(k).any(|idx| {
        (0..k)
            .tuple_combinations()
            .all(|(a, b)| rel(word[idx[a]], word[idx[b]]) == rel(pattern.at(a + 1), pattern.at(b + 1)))
    })
}

fn avoids_word(w: &Perm, pattern: &str) -> bool {
    avoids(w, &Perm::parse(pattern).expect("valid pattern literal"))
}

/// Strictly dominant permutations are those whose code is a strict
/// partition; equivalently they avoid both 132 and 231.
pub fn is_strictly_dominant(w: &Perm) -> bool {
    let c = code(w);
    let last = c.iter().rposition(|&v| v > 0).map_or(0, |p| p + 1);
    c[..last].windows(2).all(|p| p[0] > p[1])
}

/// Covers of `u` in Bruhat order, as `(u t_{ij}, i, j)` with positions
/// `i < j` and `length(u t_{ij}) = length(u) + 1`.
pub fn bruhat_covers_up(u: &Perm) -> Vec<(Perm, usize, usize)> {
    let word = u.one_line();
    let n = word.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if word[i - 1] < word[j - 1]
                && (i..j - 1).all(|k| !(word[i - 1] < word[k] && word[k] < word[j - 1]))
            {
                out.push((u.right_t(i, j), i, j));
            }
        }
    }
    out
}

/// Bruhat order comparison by the dominance criterion on the rank matrix:
/// `u <= w` iff `#{ k <= i : u(k) >= j } <= #{ k <= i : w(k) >= j }`
/// for all `i, j`.
pub fn bruhat_leq(u: &Perm, w: &Perm) -> bool {
    assert_eq!(u.n(), w.n(), "comparison requires equal sizes");
    let n = u.n();
    for i in 1..=n {
        for j in 1..=n {
            let cu = (1..=i).filter(|&k| u.at(k) >= j).count();
            let cw = (1..=i).filter(|&k| w.at(k) >= j).count();
            if cu > cw {
                return false;
            }
        }
    }
    true
}

/// All saturated chains `u = v_0 < v_1 < ... < v_l = w` in Bruhat order,
/// each listed from bottom to top. Empty when `u` is not below `w`.
pub fn saturated_chains(u: &Perm, w: &Perm) -> Vec<Vec<Perm>> {
    if u.n() != w.n() || !bruhat_leq(u, w) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut prefix = vec![u.clone()];
    fn dfs(current: &Perm, w: &Perm, prefix: &mut Vec<Perm>, out: &mut Vec<Vec<Perm>>) {
        if current == w {
            out.push(prefix.clone());
            return;
        }
        for (v, _, _) in bruhat_covers_up(current) {
            if bruhat_leq(&v, w) {
                prefix.push(v.clone());
                dfs(&v, w, prefix, out);
                prefix.pop();
            }
        }
    }
    dfs(u, w, &mut prefix, &mut out);
    out
}

/// A reduced word for `w`, produced by repeatedly stripping the first
/// descent. Reading the letters left to right and multiplying the simple
/// reflections in that order yields `w`.
pub fn reduced_word(w: &Perm) -> Vec<usize> {
    let mut v = w.clone();
    let mut letters = Vec::with_capacity(w.length());
    while !v.is_identity() {
        let i = (1..v.n())
            .find(|&i| v.at(i) > v.at(i + 1))
            .expect("non-identity permutation has a descent");
        letters.push(i);
        v = v.right_t(i, i + 1);
    }
    letters.reverse();
    letters
}

/// A word in the simple reflections together with the symmetric group it
/// lives in, validated to be reduced on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Validates that the product `s_{letters[0]} ... s_{letters[last]}`
    /// has length equal to the number of letters.
    pub fn new(n: usize, letters: Vec<usize>) -> Result<ReducedWord, PermError> {
        if letters.iter().any(|&i| i == 0 || i >= n) {
            return Err(PermError::NotReduced {
                word: letters,
                len: 0,
            });
        }
        let mut w = Perm::identity(n);
        for &i in &letters {
            w = w.compose(&Perm::simple(n, i));
        }
        if w.length() != letters.len() {
            return Err(PermError::NotReduced {
                word: letters,
                len: w.length(),
            });
        }
        Ok(ReducedWord { n, letters })
    }

    pub fn for_permutation(w: &Perm) -> ReducedWord {
        ReducedWord {
            n: w.n(),
            letters: reduced_word(w),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn permutation(&self) -> Perm {
        let mut w = Perm::identity(self.n);
        for &i in &self.letters {
            w = w.compose(&Perm::simple(self.n, i));
        }
        w
    }
}

/// Applies `u` to a vector of values: the result `r` satisfies
/// `r[u(p)] = v[p]`, i.e. `r[j] = v[u^{-1}(j)]`.
pub fn permuted_vector<T: Clone>(u: &Perm, v: &[T]) -> Vec<T> {
    assert_eq!(u.n(), v.len(), "vector length must match permutation size");
    let inv = u.inverse();
    (1..=u.n()).map(|j| v[inv.at(j) - 1].clone()).collect()
}

/// Whether `b` lies in the set of flags `i <= b_i <= n` weakly increasing.
pub fn is_valid_flag(b: &[usize]) -> bool {
    let n = b.len();
    b.iter().enumerate().all(|(i, &bi)| bi >= i + 1 && bi <= n)
        && b.windows(2).all(|p| p[0] <= p[1])
}

/// Flag of a 312-avoiding permutation: `b_i = n - c_i` where `c` is the
/// code of `w0 w`.
pub fn b_of(w: &Perm) -> Result<Vec<usize>, PermError> {
    if !avoids_word(w, "312") {
        return Err(PermError::PatternPresent {
            perm: w.to_string(),
            pattern: "312".to_string(),
        });
    }
    let n = w.n();
    let c = code(&Perm::longest(n).compose(w));
    Ok(c.into_iter().map(|ci| n - ci).collect())
}

/// Inverse of [`b_of`]: the 312-avoiding permutation with flag `b`, built
/// by `w(1) = b_1` and `w(i) = max { j <= b_i : j unused }`.
pub fn flag_to_312(b: &[usize]) -> Result<Perm, PermError> {
    if !is_valid_flag(b) {
        return Err(PermError::InvalidFlag(b.to_vec()));
    }
    let n = b.len();
    let mut used = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    for &bi in b {
        let j = (1..=bi)
            .rev()
            .find(|&j| !used[j])
            .ok_or_else(|| PermError::InvalidFlag(b.to_vec()))?;
        used[j] = true;
        word.push(j);
    }
    Perm::from_one_line(word)
}

/// Walks from the identity flag `(1, 2, ..., n)` to `b` by unit steps on
/// isolated entries, raising position `n - 1` first, then `n - 2`, and so
/// on. Each step `(f, k)` records the flag after the step and the value
/// `k` that was isolated before it. Reading the labels in reverse order
/// gives a reduced word for [`flag_to_312`]`(b)`.
pub fn isolated_entry_path(b: &[usize]) -> Result<Vec<(Vec<usize>, usize)>, PermError> {
    if !is_valid_flag(b) {
        return Err(PermError::InvalidFlag(b.to_vec()));
    }
    let n = b.len();
    let mut f: Vec<usize> = (1..=n).collect();
    let mut steps = Vec::new();
    for pos in (0..n.saturating_sub(1)).rev() {
        while f[pos] < b[pos] {
            let k = f[pos];
            debug_assert_eq!(
                f.iter().filter(|&&v| v == k).count(),
                1,
                "entry being raised must be isolated"
            );
            f[pos] += 1;
            steps.push((f.clone(), k));
        }
    }
    debug_assert_eq!(f, b, "path must terminate at the requested flag");
    Ok(steps)
}

/// Integer Cartan-like matrix with diagonal entries equal to 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<CartanMatrix, PermError> {
        let r = entries.len();
        if entries.iter().any(|row| row.len() != r) {
            return Err(PermError::InvalidCartan("matrix is not square".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row[i] != 2 {
                return Err(PermError::InvalidCartan(format!(
                    "diagonal entry ({i},{i}) must be 2"
                )));
            }
        }
        Ok(CartanMatrix { entries })
    }

    /// The type A Cartan matrix of rank `r`.
    pub fn type_a(r: usize) -> CartanMatrix {
        let entries = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        CartanMatrix { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry `a_{ij}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// Whether off-diagonal entries are nonpositive.
    pub fn is_standard(&self) -> bool {
        let r = self.rank();
        (1..=r).all(|i| (1..=r).all(|j| i == j || self.entry(i, j) <= 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Perm {
        Perm::parse(s).unwrap()
    }

    #[test]
    fn construction_and_parsing() {
        assert_eq!(p("231").one_line(), &[2, 3, 1]);
        assert_eq!(Perm::parse("3,1,2").unwrap(), p("312"));
        assert!(Perm::parse("221").is_err());
        assert!(Perm::parse("0").is_err());
        assert!(Perm::parse("").is_err());
        let big = Perm::from_one_line((1..=12).rev().collect()).unwrap();
        assert_eq!(big.to_string(), "12,11,10,9,8,7,6,5,4,3,2,1");
        assert_eq!(p("4132").to_string(), "4132");
    }

    #[test]
    fn length_inverse_compose() {
        assert_eq!(p("231").length(), 2);
        assert_eq!(Perm::longest(4).length(), 6);
        assert_eq!(p("231").inverse(), p("312"));
        let s1 = Perm::simple(3, 1);
        let s2 = Perm::simple(3, 2);
        assert_eq!(s1.compose(&s2), p("231"));
        assert_eq!(s2.compose(&s1), p("312"));
        assert_eq!(p("231").compose(&p("231").inverse()), Perm::identity(3));
    }

    #[test]
    fn codes_and_shapes() {
        assert_eq!(code(&p("41532")), vec![3, 0, 2, 1, 0]);
        let w = Perm::from_one_line(vec![7, 6, 1, 8, 2, 9, 5, 4, 3]).unwrap();
        assert_eq!(code(&w), vec![6, 5, 0, 4, 0, 3, 2, 1, 0]);
        assert_eq!(perm_from_code(&[3, 0, 2, 1, 0]).unwrap(), p("41532"));
        assert_eq!(shape(&p("41532")), vec![3, 2, 1]);
        assert!(perm_from_code(&[5, 0, 0]).is_err());
    }

    #[test]
    fn code_round_trip_s5() {
        for w in all_perms(5) {
            assert_eq!(perm_from_code(&code(&w)).unwrap(), w);
        }
    }

    #[test]
    fn dominant_permutations() {
        let w = code_to_dominant(&[2, 2, 0, 0]).unwrap();
        assert_eq!(w, p("3412"));
        assert_eq!(code(&w), vec![2, 2, 0, 0]);
        assert!(code_to_dominant(&[1, 2, 0]).is_err());
        assert!(avoids(&w, &p("132")));
    }

    #[test]
    fn flags_of_vexillary_permutations() {
        assert_eq!(flag(&p("213")), vec![1]);
        assert_eq!(shape(&p("213")), vec![1]);
        assert_eq!(flag(&p("1432")), vec![2, 3]);
        assert_eq!(shape(&p("1432")), vec![2, 1]);
    }

    #[test]
    fn pattern_avoidance() {
        assert!(avoids(&p("1234"), &p("321")));
        assert!(!avoids(&p("41532"), &p("312")));
        assert!(avoids(&p("2143"), &p("312")));
        assert!(!avoids(&p("2143"), &p("2143")));
        assert!(avoids(&p("12"), &p("321")));
        assert!(is_strictly_dominant(&p("321")));
        assert!(is_strictly_dominant(&p("4213")));
        assert!(!is_strictly_dominant(&p("3412")));
    }

    #[test]
    fn strictly_dominant_count_is_a_power_of_two() {
        for n in 2..=5 {
            let count = all_perms(n)
                .iter()
                .filter(|w| is_strictly_dominant(w))
                .count();
            assert_eq!(count, 1 << (n - 1));
        }
        for w in all_perms(5) {
            let closed = avoids(&w, &p("132")) && avoids(&w, &p("231"));
            assert_eq!(is_strictly_dominant(&w), closed);
        }
    }

    #[test]
    fn bruhat_covers_of_the_identity_and_above() {
        let covers = bruhat_covers_up(&Perm::identity(3));
        let targets: Vec<Perm> = covers.iter().map(|(v, _, _)| v.clone()).collect();
        assert_eq!(targets.len(), 2);
        assert!(targets.contains(&p("213")));
        assert!(targets.contains(&p("132")));
        let covers = bruhat_covers_up(&p("213"));
        let got: Vec<(Perm, usize, usize)> = covers;
        assert!(got.iter().any(|(v, i, j)| v == &p("231") && (*i, *j) == (2, 3)));
        assert!(got.iter().any(|(v, i, j)| v == &p("312") && (*i, *j) == (1, 3)));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn bruhat_comparison_and_chains() {
        assert!(bruhat_leq(&Perm::identity(3), &p("321")));
        assert!(!bruhat_leq(&p("321"), &p("231")));
        assert!(!bruhat_leq(&p("1324"), &p("2143")));
        let chains = saturated_chains(&Perm::identity(3), &p("231"));
        assert_eq!(chains.len(), 2);
        for chain in &chains {
            assert_eq!(chain.len(), 3);
            assert_eq!(chain[0], Perm::identity(3));
            assert_eq!(chain[2], p("231"));
        }
        assert_eq!(saturated_chains(&p("321"), &p("231")).len(), 0);
        assert_eq!(saturated_chains(&p("231"), &p("231")).len(), 1);
    }

    #[test]
    fn bruhat_matches_subword_characterization_on_s4() {
        // Independent oracle: u <= w iff some subword of a fixed reduced
        // word of w is a reduced word of u.
        let perms = all_perms(4);
        for w in &perms {
            let word = reduced_word(w);
            for u in &perms {
                let mut reachable = false;
                'outer: for mask in 0u32..(1 << word.len()) {
                    let mut v = Perm::identity(4);
                    let mut count = 0;
                    for (t, &i) in word.iter().enumerate() {
                        if mask >> t & 1 == 1 {
                            v = v.compose(&Perm::simple(4, i));
                            count += 1;
                        }
                    }
                    if v == *u && count == u.length() {
                        reachable = true;
                        break 'outer;
                    }
                }
                assert_eq!(bruhat_leq(u, w), reachable, "u={u} w={w}");
            }
        }
    }

    #[test]
    fn reduced_words() {
        assert_eq!(reduced_word(&p("231")), vec![1, 2]);
        assert_eq!(reduced_word(&Perm::identity(4)), Vec::<usize>::new());
        let rw = ReducedWord::new(3, vec![1, 2, 1]).unwrap();
        assert_eq!(rw.permutation(), p("321"));
        assert!(ReducedWord::new(3, vec![1, 1]).is_err());
        assert!(ReducedWord::new(3, vec![3]).is_err());
    }

    #[test]
    fn flags_of_312_avoiders() {
        let w = p("32154");
        assert_eq!(b_of(&w).unwrap(), vec![3, 3, 3, 5, 5]);
        assert!(b_of(&p("312")).is_err());
        assert_eq!(flag_to_312(&[3, 3, 3, 5, 5]).unwrap(), w);
        assert!(flag_to_312(&[2, 1]).is_err());
        assert!(flag_to_312(&[1, 3]).is_err());
    }

    #[test]
    fn flag_bijection_round_trip() {
        for n in 1..=5 {
            let avoiders: Vec<Perm> = all_perms(n)
                .into_iter()
                .filter(|w| avoids_word(w, "312"))
                .collect();
            for w in &avoiders {
                let b = b_of(w).unwrap();
                assert!(is_valid_flag(&b));
                assert_eq!(&flag_to_312(&b).unwrap(), w);
                let sum: usize = b.iter().sum();
                assert_eq!(sum - n * (n + 1) / 2, w.length());
            }
        }
    }

    #[test]
    fn isolated_entry_path_golden() {
        let steps = isolated_entry_path(&[3, 3, 3, 5, 5]).unwrap();
        let labels: Vec<usize> = steps.iter().map(|(_, k)| *k).collect();
        assert_eq!(labels, vec![4, 2, 1, 2]);
        let mut w = Perm::identity(5);
        for &k in labels.iter().rev() {
            w = w.compose(&Perm::simple(5, k));
        }
        assert_eq!(w, p("32154"));
    }

    #[test]
    fn isolated_entry_paths_give_reduced_words() {
        for n in 1..=5 {
            for w in all_perms(n).into_iter().filter(|w| avoids_word(w, "312")) {
                let b = b_of(&w).unwrap();
                let steps = isolated_entry_path(&b).unwrap();
                let mut letters: Vec<usize> =
                    steps.iter().map(|(_, k)| *k).collect();
                letters.reverse();
                let rw = ReducedWord::new(n.max(2), letters).unwrap();
                assert_eq!(rw.permutation().extend(n.max(2)), w.extend(n.max(2)));
                assert_eq!(rw.len(), w.length());
            }
        }
    }

    #[test]
    fn permuted_vectors() {
        let u = p("231");
        // r[u(p)] = v[p]: value at position 1 moves to position 2.
        assert_eq!(permuted_vector(&u, &[10, 20, 30]), vec![30, 10, 20]);
    }

    #[test]
    fn cartan_matrices() {
        let a = CartanMatrix::type_a(3);
        assert_eq!(a.entry(1, 2), -1);
        assert_eq!(a.entry(1, 3), 0);
        assert_eq!(a.entry(2, 2), 2);
        assert!(a.is_standard());
        assert!(CartanMatrix::new(vec![vec![2, 0], vec![0, 3]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, 0]]).is_err());
        let generic = CartanMatrix::new(vec![vec![2, 5], vec![-1, 2]]).unwrap();
        assert!(!generic.is_standard());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reduced_word_reconstructs_permutation(word in proptest::collection::vec(1usize..=5, 0..10)) {
            let mut w = Perm::identity(6);
            for &i in &word {
                w = w.compose(&Perm::simple(6, i));
            }
            let rw = reduced_word(&w);
            prop_assert_eq!(rw.len(), w.length());
            let mut v = Perm::identity(6);
            for &i in &rw {
                v = v.compose(&Perm::simple(6, i));
            }
            prop_assert_eq!(v, w);
        }

        #[test]
        fn inverse_round_trip(word in proptest::collection::vec(1usize..=5, 0..10)) {
            let mut w = Perm::identity(6);
            for &i in &word {
                w = w.compose(&Perm::simple(6, i));
            }
            prop_assert_eq!(w.inverse().inverse(), w.clone());
            prop_assert_eq!(w.inverse().length(), w.length());
        }
    }
}
