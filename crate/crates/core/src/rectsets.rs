//! Finite sets of positive roots and their triangular / rectangular structure.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::roots::{PosRoot, RankedRootSystem};

/// A set of positive roots of one fixed rank. Rank `0` is the empty system.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSubset {
    rank: usize,
    members: BTreeSet<PosRoot>,
}

/// Outcome of the rectangularity test, with the lexicographically least
/// violating pair when an axiom fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RectCheck {
    Rectangular,
    /// `α, β ∈ A` with connected supports whose join or existing meet is missing.
    R1Violation(PosRoot, PosRoot),
    /// `α, β ∈ Φ⁺` with `α∨β, α∧β ∈ A` but `α` or `β` missing.
    R2Violation(PosRoot, PosRoot),
}

impl RectCheck {
    pub fn is_rectangular(&self) -> bool {
        matches!(self, RectCheck::Rectangular)
    }

    pub fn witness(&self) -> Option<(PosRoot, PosRoot)> {
        match *self {
            RectCheck::Rectangular => None,
            RectCheck::R1Violation(a, b) | RectCheck::R2Violation(a, b) => Some((a, b)),
        }
    }
}

/// Connected components of a rectangular set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Maximal intervals `[lo, hi]` of simple indices, left to right.
    pub intervals: Vec<(usize, usize)>,
    /// `A ∩ Φ⁺_{I_t}`, still in the ambient rank.
    pub components: Vec<RootSubset>,
}

impl Decomposition {
    /// Component `t` re-indexed as a subset of its own rank-`|I_t|` system.
    pub fn local_component(&self, t: usize) -> RootSubset {
        let (lo, hi) = self.intervals[t];
        self.components[t].restrict_to(lo, hi).expect("component lies in its interval")
    }
}

impl RootSubset {
    pub fn empty(rank: usize) -> Self {
        RootSubset { rank, members: BTreeSet::new() }
    }

    /// Every positive root of the rank.
    pub fn full(rank: usize) -> Result<Self> {
        let sys = RankedRootSystem::new(rank)?;
        Ok(RootSubset { rank, members: sys.positive_roots().collect() })
    }

    pub fn from_roots(rank: usize, roots: impl IntoIterator<Item = PosRoot>) -> Result<Self> {
        let mut set = RootSubset::empty(rank);
        for r in roots {
            set.insert(r)?;
        }
        Ok(set)
    }

    /// Builds from `(i, j)` index pairs.
    pub fn from_pairs(rank: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        RootSubset::from_roots(rank, pairs.iter().map(|&(i, j)| PosRoot::new(rank, i, j)).collect::<Result<Vec<_>>>()?)
    }

    pub fn insert(&mut self, root: PosRoot) -> Result<bool> {
        if root.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: root.rank() });
        }
        Ok(self.members.insert(root))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, root: &PosRoot) -> bool {
        self.members.contains(root)
    }

    /// Members in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = &PosRoot> + Clone {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<PosRoot> {
        &self.members
    }

    pub fn is_subset(&self, other: &RootSubset) -> bool {
        self.rank == other.rank && self.members.is_subset(&other.members)
    }

    fn positive_roots(&self) -> Vec<PosRoot> {
        match RankedRootSystem::new(self.rank) {
            Ok(sys) => sys.positive_roots().collect(),
            Err(_) => Vec::new(),
        }
    }

    /// (R1): closure under joins of support-connected pairs and existing meets.
    pub fn is_triangular_subset(&self) -> bool {
        self.r1_witness().is_none()
    }

    fn r1_witness(&self) -> Option<(PosRoot, PosRoot)> {
        let v: Vec<PosRoot> = self.members.iter().copied().collect();
        for (x, a) in v.iter().enumerate() {
            for b in &v[x..] {
                if !a.supports_connected(b).expect("same rank") {
                    continue;
                }
                let join_ok = self.contains(&a.join(b).expect("same rank"));
                let meet_ok = match a.meet(b).expect("same rank") {
                    Some(m) => self.contains(&m),
                    None => true,
                };
                if !(join_ok && meet_ok) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    fn r2_witness(&self) -> Option<(PosRoot, PosRoot)> {
        let all = self.positive_roots();
        for (x, a) in all.iter().enumerate() {
            for b in &all[x..] {
                let Some(m) = a.meet(b).expect("same rank") else { continue };
                let j = a.join(b).expect("same rank");
                if self.contains(&j) && self.contains(&m) && !(self.contains(a) && self.contains(b)) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    pub fn rectangular_check(&self) -> RectCheck {
        if let Some((a, b)) = self.r1_witness() {
            return RectCheck::R1Violation(a, b);
        }
        if let Some((a, b)) = self.r2_witness() {
            return RectCheck::R2Violation(a, b);
        }
        RectCheck::Rectangular
    }

    /// (R1) and (R2).
    pub fn is_rectangular_subset(&self) -> bool {
        self.rectangular_check().is_rectangular()
    }

    fn require_rectangular(&self) -> Result<()> {
        match self.rectangular_check() {
            RectCheck::Rectangular => Ok(()),
            RectCheck::R1Violation(a, b) => {
                Err(Error::precondition(format!("root set is not rectangular: (R1) fails for ({a}, {b})")))
            }
            RectCheck::R2Violation(a, b) => {
                Err(Error::precondition(format!("root set is not rectangular: (R2) fails for ({a}, {b})")))
            }
        }
    }

    /// Whether the highest root `α_{1,rank}` is a member. Requires rectangularity.
    pub fn is_irreducible(&self) -> Result<bool> {
        self.require_rectangular()?;
        Ok(self.rank > 0 && self.contains(&RankedRootSystem::new(self.rank)?.theta()))
    }

    /// Maximal intervals covered by the union of supports.
    pub fn support_intervals(&self) -> Vec<(usize, usize)> {
        let mut covered = vec![false; self.rank + 2];
        for r in &self.members {
            for s in r.support() {
                covered[s] = true;
            }
        }
        let mut out = Vec::new();
        let mut s = 1;
        while s <= self.rank {
            if covered[s] {
                let lo = s;
                while covered[s + 1] {
                    s += 1;
                }
                out.push((lo, s));
            }
            s += 1;
        }
        out
    }

    /// Splits a rectangular set into irreducible rectangular pieces on
    /// disjoint, non-adjacent intervals.
    pub fn decompose(&self) -> Result<Decomposition> {
        self.require_rectangular()?;
        let intervals = self.support_intervals();
        let components: Vec<RootSubset> = intervals
            .iter()
            .map(|&(lo, hi)| RootSubset {
                rank: self.rank,
                members: self.members.iter().filter(|r| lo <= r.i() && r.j() <= hi).copied().collect(),
            })
            .collect();
        let d = Decomposition { intervals, components };
        for t in 0..d.intervals.len() {
            let local = d.local_component(t);
            if !local.is_irreducible()? {
                return Err(Error::postcondition(format!("component {t} of {self} is reducible")));
            }
        }
        Ok(d)
    }

    /// Members supported in `[lo, hi]`, re-indexed into rank `hi − lo + 1`.
    pub fn restrict_to(&self, lo: usize, hi: usize) -> Result<RootSubset> {
        if lo == 0 || lo > hi || hi > self.rank {
            return Err(Error::precondition(format!("interval [{lo}, {hi}] outside rank {}", self.rank)));
        }
        let rank = hi - lo + 1;
        let shift = -(lo as isize - 1);
        let members = self
            .members
            .iter()
            .filter(|r| lo <= r.i() && r.j() <= hi)
            .map(|r| r.with_shift(rank, shift))
            .collect::<Result<_>>()?;
        Ok(RootSubset { rank, members })
    }

    /// `A⁻ = A ∩ {α_{1,j}}` and `A⁺ = A ∩ {α_{i,rank}}`. For irreducible
    /// rectangular sets, also checks that the meets `A⁻ ∧ A⁺` rebuild `A`.
    pub fn boundary_sets(&self) -> Result<(RootSubset, RootSubset)> {
        let minus = RootSubset {
            rank: self.rank,
            members: self.members.iter().filter(|r| r.i() == 1).copied().collect(),
        };
        let plus = RootSubset {
            rank: self.rank,
            members: self.members.iter().filter(|r| r.j() == self.rank).copied().collect(),
        };
        if self.is_rectangular_subset() && self.is_irreducible()? {
            let rebuilt = meet_closure(&minus, &plus);
            if rebuilt != *self {
                return Err(Error::postcondition(format!("{self} is not the meet set of its boundary")));
            }
        }
        Ok((minus, plus))
    }
}

/// `{α ∧ β : α ∈ A⁻, β ∈ A⁺, α ∧ β exists}`.
pub fn meet_closure(minus: &RootSubset, plus: &RootSubset) -> RootSubset {
    let mut out = RootSubset::empty(minus.rank);
    for a in minus.iter() {
        for b in plus.iter() {
            if let Some(m) = a.meet(b).expect("same rank") {
                out.members.insert(m);
            }
        }
    }
    out
}

impl fmt::Display for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSubset(rank {}, {self})", self.rank)
    }
}

impl Serialize for RootSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members.iter())
    }
}
