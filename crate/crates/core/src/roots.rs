//! The positive roots of type `A_n` and their dominance order.
//!
//! A positive root `α_{i,j} = α_i + … + α_j` is identified with the integer
//! interval `[i, j]` of simple indices. In ε-coordinates it is
//! `ε_i − ε_{j+1}`. Comparisons between roots of different ambient rank are
//! errors, never `false`.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The positive root poset of `A_rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RankedRootSystem {
    rank: usize,
}

impl RankedRootSystem {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        Ok(RankedRootSystem { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.rank * (self.rank + 1) / 2
    }

    /// All positive roots, sorted by `(i, j)`.
    pub fn positive_roots(&self) -> impl Iterator<Item = PosRoot> + Clone {
        let rank = self.rank;
        (1..=rank).flat_map(move |i| (i..=rank).map(move |j| PosRoot { rank, i, j }))
    }

    /// The highest root `θ = α_{1,rank}`.
    pub fn theta(&self) -> PosRoot {
        PosRoot { rank: self.rank, i: 1, j: self.rank }
    }

    pub fn root(&self, i: usize, j: usize) -> Result<PosRoot> {
        PosRoot::new(self.rank, i, j)
    }
}

/// A positive root `α_{i,j}` of a rank-`rank` system, `1 ≤ i ≤ j ≤ rank`.
///
/// Ordering is lexicographic on `(rank, i, j)`; within one system that is the
/// `(i, j)` order used for all sorted output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosRoot {
    rank: usize,
    i: usize,
    j: usize,
}

impl PosRoot {
    pub fn new(rank: usize, i: usize, j: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        if i == 0 || i > j || j > rank {
            return Err(Error::InvalidRoot { rank, i, j });
        }
        Ok(PosRoot { rank, i, j })
    }

    pub fn simple(rank: usize, i: usize) -> Result<Self> {
        PosRoot::new(rank, i, i)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn height(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn support(&self) -> RangeInclusive<usize> {
        self.i..=self.j
    }

    pub fn is_simple(&self) -> bool {
        self.i == self.j
    }

    /// The two ε-indices `(a, b)` with `α = ε_a − ε_b`.
    pub fn epsilon_pair(&self) -> (usize, usize) {
        (self.i, self.j + 1)
    }

    /// The root `ε_a − ε_b` for `a < b`, in rank `rank`.
    pub fn from_epsilon_pair(rank: usize, a: usize, b: usize) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidRoot { rank, i: a, j: b.saturating_sub(1) });
        }
        PosRoot::new(rank, a, b - 1)
    }

    fn check_rank(&self, other: &PosRoot) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    /// Dominance order: `self ≤ other` iff `other.i ≤ self.i` and `self.j ≤ other.j`.
    pub fn leq(&self, other: &PosRoot) -> Result<bool> {
        self.check_rank(other)?;
        Ok(other.i <= self.i && self.j <= other.j)
    }

    pub fn join(&self, other: &PosRoot) -> Result<PosRoot> {
        self.check_rank(other)?;
        Ok(PosRoot { rank: self.rank, i: self.i.min(other.i), j: self.j.max(other.j) })
    }

    /// The meet, present only when the supports intersect.
    pub fn meet(&self, other: &PosRoot) -> Result<Option<PosRoot>> {
        self.check_rank(other)?;
        let i = self.i.max(other.i);
        let j = self.j.min(other.j);
        Ok((i <= j).then_some(PosRoot { rank: self.rank, i, j }))
    }

    /// Whether `supp(self) ∪ supp(other)` is an interval.
    pub fn supports_connected(&self, other: &PosRoot) -> Result<bool> {
        self.check_rank(other)?;
        Ok(self.i.max(other.i) <= self.j.min(other.j) + 1)
    }

    /// Whether `self + other` is again a root.
    pub fn sum_is_root(&self, other: &PosRoot) -> Result<bool> {
        self.check_rank(other)?;
        Ok(self.j + 1 == other.i || other.j + 1 == self.i)
    }

    /// Same interval, ambient rank changed. Used to re-index sub-root systems.
    pub(crate) fn with_shift(&self, rank: usize, shift: isize) -> Result<PosRoot> {
        let i = self.i as isize + shift;
        let j = self.j as isize + shift;
        if i < 1 || j < 1 {
            return Err(Error::InvalidRoot { rank, i: i.max(0) as usize, j: j.max(0) as usize });
        }
        PosRoot::new(rank, i as usize, j as usize)
    }

    /// Parses `a[i,j]` or the simple-root shorthand `a[i]`.
    pub fn parse(rank: usize, s: &str) -> Result<PosRoot> {
        let err = || Error::Parse(format!("expected a root like \"a[i,j]\", got {s:?}"));
        let body = s
            .trim()
            .strip_prefix("a[")
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(err)?;
        let mut parts = body.split(',').map(|p| p.trim().parse::<usize>());
        let i = parts.next().ok_or_else(err)?.map_err(|_| err())?;
        let j = match parts.next() {
            Some(j) => j.map_err(|_| err())?,
            None => i,
        };
        if parts.next().is_some() {
            return Err(err());
        }
        PosRoot::new(rank, i, j)
    }
}

impl fmt::Display for PosRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.i, self.j)
    }
}

/// `±α` for a positive root `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot {
    pub negative: bool,
    pub root: PosRoot,
}

impl SignedRoot {
    pub fn positive(root: PosRoot) -> Self {
        SignedRoot { negative: false, root }
    }

    pub fn negative(root: PosRoot) -> Self {
        SignedRoot { negative: true, root }
    }

    pub fn negated(self) -> Self {
        SignedRoot { negative: !self.negative, root: self.root }
    }

    pub fn is_positive(&self) -> bool {
        !self.negative
    }

    /// `ε_a − ε_b` as a signed root; `a ≠ b`.
    pub fn from_epsilon(rank: usize, a: usize, b: usize) -> Result<Self> {
        if a < b {
            Ok(SignedRoot::positive(PosRoot::from_epsilon_pair(rank, a, b)?))
        } else {
            Ok(SignedRoot::negative(PosRoot::from_epsilon_pair(rank, b, a)?))
        }
    }

    /// `(a, b)` with the signed root equal to `ε_a − ε_b`.
    pub fn epsilon_pair(&self) -> (usize, usize) {
        let (a, b) = self.root.epsilon_pair();
        if self.negative {
            (b, a)
        } else {
            (a, b)
        }
    }
}

impl From<PosRoot> for SignedRoot {
    fn from(root: PosRoot) -> Self {
        SignedRoot::positive(root)
    }
}

impl Serialize for PosRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for SignedRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-{}", self.root)
        } else {
            write!(f, "{}", self.root)
        }
    }
}
