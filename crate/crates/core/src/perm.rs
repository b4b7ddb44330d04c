//! Permutations in one-line notation, inversion sets and pattern avoidance.
//!
//! Composition is `(p∘q)(x) = p(q(x))`. A word `[i₁, …, i_k]` denotes
//! `s_{i₁}∘…∘s_{i_k}`, so the rightmost reflection acts first.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parallel::{self, Exec};
use crate::rectsets::RootSubset;
use crate::roots::{PosRoot, SignedRoot};

/// Largest degree accepted by [`census`] unless a larger bound is configured.
pub const DEFAULT_CENSUS_BOUND: usize = 8;

/// Forbidden patterns of rectangular elements.
pub const RECTANGULAR_PATTERNS: [[u8; 4]; 4] = [[2, 4, 1, 3], [2, 4, 3, 1], [4, 2, 1, 3], [4, 2, 3, 1]];

/// Forbidden patterns of triangular elements.
pub const TRIANGULAR_PATTERNS: [[u8; 4]; 2] = [[4, 2, 3, 1], [2, 4, 1, 3]];

/// An element of the symmetric group `𝔖_m`, stored 1-based in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    oneline: Vec<u8>,
}

/// Patterns are permutations; containment is order-isomorphism of a subsequence.
pub type Pattern = Permutation;

impl Permutation {
    pub fn new(oneline: Vec<u8>) -> Result<Self> {
        let m = oneline.len();
        if m == 0 || m > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {m} out of range")));
        }
        let mut seen = vec![false; m + 1];
        for &v in &oneline {
            let v = v as usize;
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(format!("{oneline:?} is not a bijection of 1..={m}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { oneline: (1..=degree as u8).collect() }
    }

    /// The longest element `w₀ = m(m−1)…1`.
    pub fn longest(degree: usize) -> Self {
        Permutation { oneline: (1..=degree as u8).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.oneline.len()
    }

    /// Rank of the root system `W` acts on, `degree − 1`.
    pub fn rank(&self) -> usize {
        self.degree() - 1
    }

    pub fn oneline(&self) -> &[u8] {
        &self.oneline
    }

    /// `p(x)` for `1 ≤ x ≤ degree`.
    pub fn apply(&self, x: usize) -> usize {
        self.oneline[x - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (k, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        Permutation { oneline: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(Permutation { oneline: other.oneline.iter().map(|&x| self.oneline[x as usize - 1]).collect() })
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Permutation> {
        if a == 0 || b == 0 || a > degree || b > degree {
            return Err(Error::InvalidPermutation(format!("transposition ({a} {b}) outside 1..={degree}")));
        }
        let mut p = Permutation::identity(degree);
        p.oneline.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The reflection `s_α` for `α = ε_i − ε_{j+1}`.
    pub fn reflection(root: &PosRoot) -> Permutation {
        let mut p = Permutation::identity(root.rank() + 1);
        p.oneline.swap(root.i() - 1, root.j());
        p
    }

    /// `s_{i₁}∘…∘s_{i_k}` in `𝔖_{rank+1}`.
    pub fn from_word(rank: usize, word: &[usize]) -> Result<Permutation> {
        if rank == 0 {
            return Err(Error::InvalidRank(0));
        }
        let mut p = Permutation::identity(rank + 1);
        for &i in word {
            if i == 0 || i > rank {
                return Err(Error::WordIndexOutOfRange { index: i, rank });
            }
            // p ∘ s_i permutes positions i and i+1 of the one-line notation.
            p.oneline.swap(i - 1, i);
        }
        Ok(p)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let m = self.degree();
        (0..m).map(|a| (a + 1..m).filter(|&b| self.oneline[a] > self.oneline[b]).count()).sum()
    }

    /// `N(p) = {α_{i,j−1} : i < j, p(i) > p(j)}` in rank `degree − 1`.
    pub fn inversion_set(&self) -> RootSubset {
        let m = self.degree();
        let mut set = RootSubset::empty(self.rank());
        for a in 0..m {
            for b in a + 1..m {
                if self.oneline[a] > self.oneline[b] {
                    let root = PosRoot::new(self.rank(), a + 1, b).expect("index in range");
                    set.insert(root).expect("same rank");
                }
            }
        }
        set
    }

    /// The image of a signed root under `p`, via `ε_k ↦ ε_{p(k)}`.
    pub fn act_on_root(&self, root: &SignedRoot) -> Result<SignedRoot> {
        if root.root.rank() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: root.root.rank() });
        }
        let (a, b) = root.epsilon_pair();
        SignedRoot::from_epsilon(self.rank(), self.apply(a), self.apply(b))
    }

    /// Whether some subsequence of the one-line notation is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Pattern) -> bool {
        contains_subsequence_pattern(&self.oneline, pattern.oneline())
    }

    pub fn avoids_all(&self, patterns: &[Pattern]) -> bool {
        patterns.iter().all(|q| !self.contains_pattern(q))
    }

    /// Avoids 2413, 2431, 4213 and 4231.
    pub fn is_rectangular(&self) -> bool {
        PermClass::Rectangular.contains(self)
    }

    /// Avoids 4231 and 2413.
    pub fn is_triangular(&self) -> bool {
        PermClass::Triangular.contains(self)
    }

    /// Rectangularity from the four-index inequalities: for all `i<k<j<ℓ`,
    /// `p(i)>p(j) ∧ p(k)>p(ℓ)` iff `p(i)>p(ℓ) ∧ p(k)>p(j)`.
    pub fn is_rectangular_by_inequalities(&self) -> bool {
        let p = &self.oneline;
        let m = p.len();
        for i in 0..m {
            for k in i + 1..m {
                for j in k + 1..m {
                    for l in j + 1..m {
                        let first = p[i] > p[j] && p[k] > p[l];
                        let second = p[i] > p[l] && p[k] > p[j];
                        if first != second {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Triangularity from its defining inequalities: for all `i<k≤j<ℓ` with
    /// `p(i)>p(j)` and `p(k)>p(ℓ)`, one has `p(i)>p(ℓ)` and `p(k)≥p(j)`.
    pub fn is_triangular_by_inequalities(&self) -> bool {
        let p = &self.oneline;
        let m = p.len();
        for i in 0..m {
            for k in i + 1..m {
                for j in k..m {
                    for l in j + 1..m {
                        if p[i] > p[j] && p[k] > p[l] && !(p[i] > p[l] && p[k] >= p[j]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// One-line notation of `p⁻¹` read backwards, i.e. `p⁻¹∘w₀`. Applying it
    /// twice gives `w₀∘p∘w₀`.
    pub fn involution_i(&self) -> Permutation {
        let mut inv = self.inverse();
        inv.oneline.reverse();
        inv
    }

    /// A reduced word, found by repeatedly sorting the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.oneline.clone();
        let mut removed = Vec::with_capacity(self.length());
        while let Some(pos) = p.windows(2).position(|w| w[0] > w[1]) {
            // p = (p·s_i)·s_i with ℓ(p·s_i) = ℓ(p) − 1.
            p.swap(pos, pos + 1);
            removed.push(pos + 1);
        }
        removed.reverse();
        removed
    }

    /// Restriction to the positions `lo..=hi`, relabelled to `1..=hi−lo+1`.
    /// Requires the block to be stable under `p`.
    pub fn restrict_block(&self, lo: usize, hi: usize) -> Result<Permutation> {
        if lo == 0 || lo > hi || hi > self.degree() {
            return Err(Error::precondition(format!("block {lo}..={hi} outside 1..={}", self.degree())));
        }
        let block: Vec<u8> = self.oneline[lo - 1..hi]
            .iter()
            .map(|&v| {
                let v = v as usize;
                if v < lo || v > hi {
                    Err(Error::precondition(format!("{self} does not stabilise block {lo}..={hi}")))
                } else {
                    Ok((v - lo + 1) as u8)
                }
            })
            .collect::<Result<_>>()?;
        Permutation::new(block)
    }
}

fn contains_subsequence_pattern(seq: &[u8], pattern: &[u8]) -> bool {
    if pattern.len() > seq.len() {
        return false;
    }
    if pattern.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    search_pattern(seq, pattern, 0, &mut chosen)
}

/// Depth-first scan over increasing position tuples, pruning as soon as the
/// chosen prefix is not order-isomorphic to the pattern prefix.
fn search_pattern(seq: &[u8], pattern: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for pos in start..=seq.len() - remaining {
        let v = seq[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &q)| (c < v) == (q < pattern[depth]));
        if consistent {
            chosen.push(v);
            if search_pattern(seq, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Whether `seq` contains `pattern` at positions whose last one is the last
/// entry of `seq`.
fn pattern_ends_at_last(seq: &[u8], pattern: &[u8]) -> bool {
    let (&last, prefix) = match seq.split_last() {
        Some(x) => x,
        None => return false,
    };
    let (&plast, pprefix) = pattern.split_last().expect("non-empty pattern");
    if pprefix.len() > prefix.len() {
        return false;
    }
    // Candidates must sit on the correct side of the final entry.
    let filtered: Vec<(usize, u8)> = prefix.iter().copied().enumerate().collect();
    let mut chosen = Vec::with_capacity(pprefix.len());
    search_with_last(&filtered, pprefix, plast, last, 0, &mut chosen)
}

fn search_with_last(
    prefix: &[(usize, u8)],
    pattern: &[u8],
    plast: u8,
    last: u8,
    start: usize,
    chosen: &mut Vec<u8>,
) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for idx in start..=prefix.len() - remaining {
        let v = prefix[idx].1;
        if (v < last) != (pattern[depth] < plast) {
            continue;
        }
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &q)| (c < v) == (q < pattern[depth]));
        if consistent {
            chosen.push(v);
            if search_with_last(prefix, pattern, plast, last, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// A pattern-defined class of permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PermClass {
    Rectangular,
    Triangular,
}

impl PermClass {
    pub fn patterns(self) -> Vec<Pattern> {
        let raw: &[[u8; 4]] = match self {
            PermClass::Rectangular => &RECTANGULAR_PATTERNS,
            PermClass::Triangular => &TRIANGULAR_PATTERNS,
        };
        raw.iter().map(|q| Permutation { oneline: q.to_vec() }).collect()
    }

    pub fn contains(self, p: &Permutation) -> bool {
        p.avoids_all(&self.patterns())
    }

    pub fn name(self) -> &'static str {
        match self {
            PermClass::Rectangular => "rectangular",
            PermClass::Triangular => "triangular",
        }
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PermClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rectangular" => Ok(PermClass::Rectangular),
            "triangular" => Ok(PermClass::Triangular),
            other => Err(Error::Parse(format!("unknown class {other:?}, expected rectangular or triangular"))),
        }
    }
}

/// Bound and execution strategy for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub bound: usize,
    pub exec: Exec,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { bound: DEFAULT_CENSUS_BOUND, exec: Exec::default() }
    }
}

impl EnumerationConfig {
    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        if n > self.bound {
            return Err(Error::BoundExceeded { n, limit: self.bound });
        }
        Ok(())
    }
}

/// Number of elements of `𝔖_n` in `class`, under the default bound.
pub fn census(n: usize, class: PermClass) -> Result<u64> {
    census_with(n, class, &EnumerationConfig::default())
}

pub fn census_with(n: usize, class: PermClass, config: &EnumerationConfig) -> Result<u64> {
    config.check(n)?;
    let patterns = class.patterns();
    let per_first = parallel::map_collect(config.exec, (1..=n as u8).collect(), |first| {
        let mut count = 0u64;
        walk_class(n, &patterns, first, &mut |_| count += 1);
        count
    });
    Ok(per_first.into_iter().sum())
}

/// Members of `class` in `𝔖_n`, in lexicographic one-line order.
pub fn enumerate(n: usize, class: PermClass) -> Result<Vec<Permutation>> {
    enumerate_with(n, class, &EnumerationConfig::default())
}

pub fn enumerate_with(n: usize, class: PermClass, config: &EnumerationConfig) -> Result<Vec<Permutation>> {
    config.check(n)?;
    let patterns = class.patterns();
    let chunks = parallel::map_collect(config.exec, (1..=n as u8).collect(), |first| {
        let mut out = Vec::new();
        walk_class(n, &patterns, first, &mut |p| out.push(Permutation { oneline: p.to_vec() }));
        out
    });
    Ok(chunks.into_iter().flatten().collect())
}

/// Every permutation of `𝔖_n`, lexicographically.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for first in 1..=n as u8 {
        walk_class(n, &[], first, &mut |p| out.push(Permutation { oneline: p.to_vec() }));
    }
    out
}

/// Lexicographic depth-first walk over permutations starting with `first`,
/// pruning prefixes that already contain a forbidden pattern.
fn walk_class(n: usize, patterns: &[Pattern], first: u8, visit: &mut dyn FnMut(&[u8])) {
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    prefix.push(first);
    used[first as usize] = true;
    walk_rec(n, patterns, &mut prefix, &mut used, visit);
}

fn walk_rec(n: usize, patterns: &[Pattern], prefix: &mut Vec<u8>, used: &mut [bool], visit: &mut dyn FnMut(&[u8])) {
    if patterns.iter().any(|q| pattern_ends_at_last(prefix, q.oneline())) {
        return;
    }
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    for v in 1..=n as u8 {
        if !used[v as usize] {
            used[v as usize] = true;
            prefix.push(v);
            walk_rec(n, patterns, prefix, used, visit);
            prefix.pop();
            used[v as usize] = false;
        }
    }
}

/// Parses `s1 s2 s3` (or `1 2 3`) into simple-reflection indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let digits = t.strip_prefix('s').unwrap_or(t);
            digits.parse::<usize>().map_err(|_| Error::Parse(format!("bad simple reflection {t:?}")))
        })
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit string (`43251`, degree ≤ 9) or comma-separated (`4,3,2,5,1`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d as u8),
                    _ => Err(Error::Parse(format!("bad digit {c:?} in {s:?}"))),
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for v in &self.oneline {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
