//! Two independent dimension oracles for Demazure modules: characters via
//! isobaric divided differences, and lattice points of FFLV polytope faces.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lift;
use crate::parallel::{self, Exec};
use crate::perm::Permutation;
use crate::rectsets::RootSubset;
use crate::weights::Weight;

/// A Laurent polynomial in `x_1, …, x_nvars` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(exponents: Vec<i32>) -> Self {
        let mut p = LaurentPoly::zero(exponents.len());
        p.add_term(exponents, 1);
        p
    }

    pub fn add_term(&mut self, exponents: Vec<i32>, coeff: i64) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of distinct monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[i32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Value at `x_1 = … = x_nvars = 1`.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: usize) -> LaurentPoly {
        self.check_index(i);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, i);
            out.terms.insert(e, c);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap(i) == *self)
    }

    fn check_index(&self, i: usize) {
        assert!(i >= 1 && i < self.nvars, "simple index {i} out of range for {} variables", self.nvars);
    }

    /// `π_i f = (x_i f − x_{i+1} s_i f) / (x_i − x_{i+1})`, evaluated
    /// monomial by monomial as a geometric sum.
    pub fn isobaric(&self, i: usize) -> LaurentPoly {
        self.check_index(i);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let (p, q) = (e[i - 1], e[i]);
            let mut push = |a: i32, b: i32, sign: i64| {
                let mut e2 = e.clone();
                e2[i - 1] = a;
                e2[i] = b;
                out.add_term(e2, sign * c);
            };
            if p >= q {
                for t in 0..=p - q {
                    push(p - t, q + t, 1);
                }
            } else if p + 1 < q {
                for t in 0..=q - p - 2 {
                    push(q - 1 - t, p + 1 + t, -1);
                }
            }
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(k, &a)| if a == 1 { format!("x{}", k + 1) } else { format!("x{}^{a}", k + 1) })
                    .collect();
                let mono = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
                if *c == 1 {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn check_pair(tau: &Permutation, lambda: &Weight) -> Result<()> {
    if tau.degree() != lambda.rank() + 1 {
        return Err(Error::RankMismatch { left: tau.rank(), right: lambda.rank() });
    }
    lambda.require_dominant()
}

fn epsilon_monomial(lambda: &Weight) -> LaurentPoly {
    LaurentPoly::monomial(lambda.to_epsilon().into_iter().map(|a| a as i32).collect())
}

/// `π_{i₁}⋯π_{i_ℓ}(x^λ)` for a reduced word of `tau`.
pub fn demazure_character(tau: &Permutation, lambda: &Weight) -> Result<LaurentPoly> {
    check_pair(tau, lambda)?;
    demazure_character_for_word(lambda, &tau.reduced_word())
}

/// `π_{i₁}⋯π_{i_ℓ}(x^λ)`, rightmost operator applied first.
pub fn demazure_character_for_word(lambda: &Weight, word: &[usize]) -> Result<LaurentPoly> {
    lambda.require_dominant()?;
    let rank = lambda.rank();
    if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > rank) {
        return Err(Error::WordIndexOutOfRange { index: bad, rank });
    }
    let mut f = epsilon_monomial(lambda);
    for &i in word.iter().rev() {
        f = f.isobaric(i);
    }
    Ok(f)
}

pub fn demazure_dim(tau: &Permutation, lambda: &Weight) -> Result<u64> {
    let d = demazure_character(tau, lambda)?.eval_ones();
    u64::try_from(d).map_err(|_| Error::postcondition(format!("negative dimension {d}")))
}

/// The face of the FFLV polytope `P(λ)` where coordinates outside
/// `support` vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFLVFace {
    support: RootSubset,
    marking: Weight,
}

impl FFLVFace {
    pub fn new(support: RootSubset, marking: Weight) -> Result<Self> {
        if support.rank() != marking.rank() {
            return Err(Error::RankMismatch { left: support.rank(), right: marking.rank() });
        }
        marking.require_dominant()?;
        if !support.is_triangular_subset() {
            return Err(Error::precondition(format!("support {support} is not triangular")));
        }
        Ok(FFLVFace { support, marking })
    }

    pub fn rank(&self) -> usize {
        self.marking.rank()
    }

    pub fn support(&self) -> &RootSubset {
        &self.support
    }

    pub fn marking(&self) -> &Weight {
        &self.marking
    }

    pub fn count(&self) -> u64 {
        self.count_with(Exec::default())
    }

    /// Number of lattice points, splitting on the first coordinate.
    pub fn count_with(&self, exec: Exec) -> u64 {
        let search = Search::new(self);
        if search.coords.is_empty() {
            return 1;
        }
        let firsts: Vec<i64> = (0..=search.upper[0]).collect();
        parallel::map_collect(exec, firsts, |v| {
            let mut x = vec![0i64; search.coords.len()];
            x[0] = v;
            if search.feasible(&x) {
                let mut count = 0u64;
                search.walk(&mut x, 1, &mut |_| count += 1);
                count
            } else {
                0
            }
        })
        .into_iter()
        .sum()
    }

    /// All lattice points, indexed like the support in `(i, j)` order,
    /// listed lexicographically.
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        let search = Search::new(self);
        let mut out = Vec::new();
        let mut x = vec![0i64; search.coords.len()];
        search.walk(&mut x, 0, &mut |p| out.push(p.to_vec()));
        out
    }

    /// Whether `x` (indexed like the support) satisfies every Dyck-path inequality.
    pub fn contains_point(&self, x: &[i64]) -> bool {
        let search = Search::new(self);
        x.len() == search.coords.len() && x.iter().all(|&v| v >= 0) && search.feasible(x)
    }
}

struct Search {
    n: usize,
    coords: Vec<(usize, usize)>,
    /// `slot[p][q]` is the coordinate index of `α_{p,q}`, if in the support.
    slot: Vec<Vec<Option<usize>>>,
    upper: Vec<i64>,
    /// `prefix[k] = c_1 + … + c_k`.
    prefix: Vec<i64>,
}

impl Search {
    fn new(face: &FFLVFace) -> Self {
        let n = face.rank();
        let mut prefix = vec![0i64; n + 1];
        for t in 1..=n {
            prefix[t] = prefix[t - 1] + face.marking.coeff(t);
        }
        let coords: Vec<(usize, usize)> = face.support.iter().map(|r| (r.i(), r.j())).collect();
        let mut slot = vec![vec![None; n + 1]; n + 1];
        for (idx, &(p, q)) in coords.iter().enumerate() {
            slot[p][q] = Some(idx);
        }
        let upper = coords.iter().map(|&(p, q)| prefix[q] - prefix[p - 1]).collect();
        Search { n, coords, slot, upper, prefix }
    }

    fn value(&self, x: &[i64], p: usize, q: usize) -> i64 {
        self.slot[p][q].map_or(0, |k| x[k])
    }

    /// Longest-path DP from each `α_{i,i}`; a path moves `(p,q) → (p,q+1)` or `(p+1,q)`.
    fn feasible(&self, x: &[i64]) -> bool {
        let n = self.n;
        let mut best = vec![vec![i64::MIN; n + 1]; n + 1];
        for i in 1..=n {
            for p in i..=n {
                for q in p..=n {
                    let from_left = if q > p { best[p][q - 1] } else { i64::MIN };
                    let from_above = if p > i { best[p - 1][q] } else { i64::MIN };
                    let prev = if p == i && q == i { 0 } else { from_left.max(from_above) };
                    best[p][q] = if prev == i64::MIN { i64::MIN } else { prev + self.value(x, p, q) };
                }
                if best[p][p] > self.prefix[p] - self.prefix[i - 1] {
                    return false;
                }
            }
        }
        true
    }

    fn walk(&self, x: &mut [i64], idx: usize, visit: &mut dyn FnMut(&[i64])) {
        if idx == self.coords.len() {
            visit(x);
            return;
        }
        for v in 0..=self.upper[idx] {
            x[idx] = v;
            if v > 0 && !self.feasible(x) {
                break;
            }
            self.walk(x, idx + 1, visit);
        }
        x[idx] = 0;
    }
}

/// Lattice points of the face of `P(λ)` supported on `support`.
pub fn polytope_count(support: &RootSubset, lambda: &Weight) -> Result<u64> {
    Ok(FFLVFace::new(support.clone(), lambda.clone())?.count())
}

pub fn polytope_count_with(support: &RootSubset, lambda: &Weight, exec: Exec) -> Result<u64> {
    Ok(FFLVFace::new(support.clone(), lambda.clone())?.count_with(exec))
}

/// The dimension of `V_τ(λ)` from each oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimsReport {
    pub demazure: u64,
    pub polytope: u64,
    /// `Π_t dim V_{τ̃_t}(λ̃_t)` over the components, for rectangular `τ`.
    pub lifted: Option<u64>,
    pub equal: bool,
}

pub fn dims_agree(tau: &Permutation, lambda: &Weight) -> Result<DimsReport> {
    check_pair(tau, lambda)?;
    if !tau.is_triangular() {
        return Err(Error::precondition(format!("{tau} is not triangular")));
    }
    let demazure = demazure_dim(tau, lambda)?;
    let polytope = polytope_count(&tau.inversion_set(), lambda)?;
    let lifted = if tau.is_rectangular() {
        let mut prod = 1u64;
        for comp in lift::lift_general(tau, lambda)? {
            prod *= demazure_dim(&comp.result.tau_tilde, &comp.result.lambda_tilde)?;
        }
        Some(prod)
    } else {
        None
    };
    let equal = demazure == polytope && lifted.is_none_or(|l| l == demazure);
    Ok(DimsReport { demazure, polytope, lifted, equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec()).unwrap()
    }

    #[test]
    fn isobaric_closed_form() {
        let x1 = LaurentPoly::monomial(vec![1, 0]);
        let expect = &x1 + &LaurentPoly::monomial(vec![0, 1]);
        assert_eq!(x1.isobaric(1), expect);
        assert!(LaurentPoly::monomial(vec![0, 1]).isobaric(1).is_zero());
        let mut m = LaurentPoly::zero(2);
        m.add_term(vec![1, 1], -1);
        assert_eq!(LaurentPoly::monomial(vec![0, 2]).isobaric(1), m);
        let f = LaurentPoly::monomial(vec![3, -2, 1]);
        assert_eq!(f.isobaric(2).isobaric(2), f.isobaric(2));
    }

    #[test]
    fn add_cancels() {
        let a = LaurentPoly::monomial(vec![1, 0]);
        let mut b = LaurentPoly::zero(2);
        b.add_term(vec![1, 0], -1);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn character_examples() {
        let lam = w(&[2, 1, 0]);
        let ch = demazure_character(&Permutation::identity(4), &lam).unwrap();
        assert_eq!(ch, LaurentPoly::monomial(vec![3, 1, 0, 0]));
        let ch = demazure_character(&p("21"), &w(&[1])).unwrap();
        assert_eq!(ch.to_string(), "x1 + x2");
        let ch = demazure_character(&p("321"), &w(&[1, 1])).unwrap();
        assert_eq!(ch.eval_ones(), 8);
        assert_eq!(ch.coeff(&[1, 1, 1]), 2);
        assert!(ch.is_symmetric());
        assert!(demazure_character(&p("21"), &w(&[-1])).is_err());
        assert!(demazure_character(&p("321"), &w(&[1])).is_err());
    }

    #[test]
    fn dim_examples() {
        assert_eq!(demazure_dim(&p("43251"), &w(&[1, 0, 0, 0])).unwrap(), 4);
        assert_eq!(demazure_dim(&Permutation::identity(5), &w(&[2, 0, 1, 3])).unwrap(), 1);
        assert_eq!(demazure_dim(&p("15263784"), &w(&[0, 1, 0, 0, 0, 0, 0])).unwrap(), 4);
        assert_eq!(demazure_dim(&Permutation::longest(4), &w(&[1, 1, 1])).unwrap(), 64);
    }

    #[test]
    fn polytope_examples() {
        let n = p("43251").inversion_set();
        let face = FFLVFace::new(n.clone(), w(&[1, 0, 0, 0])).unwrap();
        assert_eq!(face.count(), 4);
        // Coordinates in (i,j) order: a11, a12, a14, a22, a24, a34, a44.
        let pts = face.lattice_points();
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|x| x[3..].iter().all(|&v| v == 0)));
        assert_eq!(polytope_count(&RootSubset::empty(3), &w(&[2, 1, 0])).unwrap(), 1);
        assert_eq!(polytope_count(&RootSubset::full(2).unwrap(), &w(&[1, 1])).unwrap(), 8);
        assert_eq!(polytope_count(&RootSubset::full(3).unwrap(), &w(&[1, 1, 1])).unwrap(), 64);
        assert!(polytope_count(&p("2413").inversion_set(), &w(&[1, 0, 0])).is_err());
    }

    #[test]
    fn count_strategies_agree() {
        let n = p("4321").inversion_set();
        let lam = w(&[2, 1, 2]);
        let s = polytope_count_with(&n, &lam, Exec::Sequential).unwrap();
        let par = polytope_count_with(&n, &lam, Exec::Parallel).unwrap();
        assert_eq!(s, par);
        assert_eq!(s, demazure_dim(&p("4321"), &lam).unwrap());
    }

    #[test]
    fn dims_agree_examples() {
        let r = dims_agree(&p("43251"), &w(&[1, 0, 0, 0])).unwrap();
        assert_eq!(r, DimsReport { demazure: 4, polytope: 4, lifted: Some(4), equal: true });
        let r = dims_agree(&Permutation::identity(3), &w(&[1, 2])).unwrap();
        assert_eq!((r.demazure, r.polytope, r.lifted), (1, 1, Some(1)));
        let r = dims_agree(&Permutation::longest(4), &w(&[1, 1, 1])).unwrap();
        assert_eq!((r.demazure, r.polytope), (64, 64));
        assert!(r.equal);
        assert!(dims_agree(&p("2413"), &w(&[1, 0, 0])).is_err());
    }
}
