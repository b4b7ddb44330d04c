//! The region `∇_n` of the rank-`(2n−1)` root poset and its order ideals.
//!
//! Cells are addressed by `(k, h)` with `α̃_{n−k+1, n+h−1}`; a cell exists
//! iff `h + k ≤ n + 1`. An ideal is then a staircase-bounded Young shape
//! with row lengths `c_k` and column lengths `r_h`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rectsets::RootSubset;
use crate::roots::{PosRoot, RankedRootSystem, SignedRoot};
use crate::weights::Weight;

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    Ok(())
}

/// The root `α̃_{n−k+1, n+h−1}` at cell `(k, h)`.
pub fn nabla_root(n: usize, k: usize, h: usize) -> Result<PosRoot> {
    check_n(n)?;
    if k == 0 || h == 0 || h + k > n + 1 {
        return Err(Error::precondition(format!("no cell (k={k}, h={h}) in nabla_{n}")));
    }
    PosRoot::new(2 * n - 1, n - k + 1, n + h - 1)
}

/// The cell `(k, h)` of a root, if it lies in `∇_n`.
pub fn nabla_coords(n: usize, root: &PosRoot) -> Option<(usize, usize)> {
    if n == 0 || root.rank() != 2 * n - 1 {
        return None;
    }
    let (i, j) = (root.i(), root.j());
    (i <= n && n <= j && j - i < n).then(|| (n - i + 1, j - n + 1))
}

/// `∇_n = {α̃_{i,j} : i ≤ n ≤ j, j − i ≤ n − 1}`.
pub fn nabla(n: usize) -> Result<RootSubset> {
    check_n(n)?;
    let mut set = RootSubset::empty(2 * n - 1);
    for k in 1..=n {
        for h in 1..=n + 1 - k {
            set.insert(nabla_root(n, k, h)?)?;
        }
    }
    Ok(set)
}

/// Contained in `∇_n` and closed downward inside it.
pub fn is_nabla_ideal(n: usize, a: &RootSubset) -> bool {
    if n == 0 || a.rank() != 2 * n - 1 {
        return false;
    }
    a.iter().all(|r| match nabla_coords(n, r) {
        // Below (k, h) inside ∇_n are the cells (k', h') with k' ≤ k, h' ≤ h.
        Some((k, h)) => (1..=k).all(|k2| (1..=h).all(|h2| a.contains(&nabla_root(n, k2, h2).expect("cell")))),
        None => false,
    })
}

/// Row and column lengths of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowColStats {
    pub c: Vec<usize>,
    pub r: Vec<usize>,
}

impl RowColStats {
    /// `c_k`, 1-based.
    pub fn c(&self, k: usize) -> usize {
        self.c[k - 1]
    }

    /// `r_h`, 1-based.
    pub fn r(&self, h: usize) -> usize {
        self.r[h - 1]
    }
}

/// Image of a `∇_n` root under `τ_A⁻¹` as given by the closed formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NablaImage {
    Root(SignedRoot),
    /// The formula produced the empty interval `α̃_{p,q}` with `p = q + 1`.
    Degenerate { p: usize, q: usize },
}

impl fmt::Display for NablaImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NablaImage::Root(r) => write!(f, "{r}"),
            NablaImage::Degenerate { p, q } => write!(f, "degenerate a[{p},{q}]"),
        }
    }
}

/// A validated `∇_n`-ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NablaIdeal {
    n: usize,
    members: RootSubset,
}

impl Serialize for NablaIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

impl NablaIdeal {
    pub fn new(n: usize, members: RootSubset) -> Result<Self> {
        check_n(n)?;
        if members.rank() != 2 * n - 1 {
            return Err(Error::RankMismatch { left: 2 * n - 1, right: members.rank() });
        }
        if !is_nabla_ideal(n, &members) {
            return Err(Error::precondition(format!("{members} is not a nabla_{n} ideal")));
        }
        Ok(NablaIdeal { n, members })
    }

    pub fn empty(n: usize) -> Result<Self> {
        NablaIdeal::new(n, RootSubset::empty(2 * n.max(1) - 1))
    }

    pub fn full(n: usize) -> Result<Self> {
        NablaIdeal::new(n, nabla(n)?)
    }

    /// The ideal with row lengths `c_1 ≥ c_2 ≥ … ≥ c_n`.
    pub fn from_row_lengths(n: usize, c: &[usize]) -> Result<Self> {
        check_n(n)?;
        if c.len() != n {
            return Err(Error::precondition(format!("expected {n} row lengths, got {}", c.len())));
        }
        let mut set = RootSubset::empty(2 * n - 1);
        for (k, &len) in (1..).zip(c) {
            for h in 1..=len {
                set.insert(nabla_root(n, k, h)?)?;
            }
        }
        NablaIdeal::new(n, set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        2 * self.n - 1
    }

    pub fn members(&self) -> &RootSubset {
        &self.members
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

    pub fn stats(&self) -> RowColStats {
        let mut c = vec![0; self.n];
        let mut r = vec![0; self.n];
        for root in self.members.iter() {
            let (k, h) = nabla_coords(self.n, root).expect("member of nabla");
            c[k - 1] = c[k - 1].max(h);
            r[h - 1] = r[h - 1].max(k);
        }
        RowColStats { c, r }
    }

    /// Members sorted by decreasing height, ties by `(i, j)`.
    pub fn height_order(&self) -> Vec<PosRoot> {
        let mut v: Vec<PosRoot> = self.members.iter().copied().collect();
        v.sort_by(|a, b| b.height().cmp(&a.height()).then(a.cmp(b)));
        v
    }

    /// `τ_A = s_{β₁}…s_{β_r}` for the default height order.
    pub fn tau_a(&self) -> Permutation {
        product_of_reflections(self.rank() + 1, &self.height_order())
    }

    /// `τ_A` for a caller-chosen order, which must list every member once
    /// with non-increasing height.
    pub fn tau_a_in_order(&self, order: &[PosRoot]) -> Result<Permutation> {
        let listed = RootSubset::from_roots(self.rank(), order.iter().copied())?;
        if listed != self.members || order.len() != self.len() {
            return Err(Error::precondition("order must list each ideal member exactly once"));
        }
        if order.windows(2).any(|w| w[0].height() < w[1].height()) {
            return Err(Error::precondition("order must not increase in height"));
        }
        Ok(product_of_reflections(self.rank() + 1, order))
    }

    fn cell(&self, root: &PosRoot) -> Result<(usize, usize)> {
        nabla_coords(self.n, root).ok_or_else(|| Error::precondition(format!("{root} is not in nabla_{}", self.n)))
    }

    /// `τ_A⁻¹(α)` for `α ∈ ∇_n`, from the row/column statistics alone.
    pub fn tau_inv_on_nabla(&self, root: &PosRoot) -> Result<NablaImage> {
        let (k, h) = self.cell(root)?;
        let st = self.stats();
        let n = self.n;
        let rank = self.rank();
        if self.contains(root) {
            let root = PosRoot::new(rank, n + h - st.r(h), n - k + st.c(k))?;
            return Ok(NablaImage::Root(SignedRoot::negative(root)));
        }
        let p = n - k + st.c(k) + 1;
        let q = n + h - st.r(h) - 1;
        if p == q + 1 {
            return Ok(NablaImage::Degenerate { p, q });
        }
        Ok(NablaImage::Root(SignedRoot::positive(PosRoot::new(rank, p, q)?)))
    }

    /// `i_A(α) = −τ_A⁻¹(α)` for `α ∈ A`.
    pub fn i_a(&self, root: &PosRoot) -> Result<PosRoot> {
        if !self.contains(root) {
            return Err(Error::precondition(format!("{root} is not in the ideal")));
        }
        match self.tau_inv_on_nabla(root)? {
            NablaImage::Root(r) if r.negative => Ok(r.root),
            other => Err(Error::postcondition(format!("tau_A^-1({root}) = {other} is not negative"))),
        }
    }

    /// A weight `μ` with `⟨μ, α^∨⟩ = f(α)` on `A`, non-negative pairings off
    /// `A`, and `τ_A⁻¹μ` dominant. `f` must satisfy hypotheses (i)–(iv).
    pub fn weight_mu(&self, f: &BTreeMap<PosRoot, i64>) -> Result<Weight> {
        self.check_weight_hypotheses(f)?;
        let rank = self.rank();
        let mut mu = Weight::zero(rank)?;
        if self.is_empty() {
            return Ok(mu);
        }
        let n = self.n;
        let root = |i: usize, j: usize| PosRoot::new(rank, i, j).expect("index in range");
        let fv = |i: usize, j: usize| f[&root(i, j)];
        let h = (1..=n).find(|&t| self.contains(&root(t, n))).expect("a[n,n] is a member");
        let k = (n..=rank).rev().find(|&t| self.contains(&root(n, t))).expect("a[n,n] is a member");
        mu.add_fundamental(n, fv(n, n));
        for t in h..n {
            mu.add_fundamental(t, fv(t, n) - fv(t + 1, n));
        }
        for t in n + 1..=k {
            mu.add_fundamental(t, fv(n, t) - fv(n, t - 1));
        }
        mu.add_fundamental(h - 1, -fv(h, n));
        mu.add_fundamental(k + 1, -fv(n, k));
        self.check_weight_mu(f, &mu)?;
        Ok(mu)
    }

    fn check_weight_hypotheses(&self, f: &BTreeMap<PosRoot, i64>) -> Result<()> {
        if f.len() != self.len() || !f.keys().all(|r| self.contains(r)) {
            return Err(Error::precondition("f must be defined exactly on the ideal"));
        }
        if let Some((a, fa)) = f.iter().find(|(_, &v)| v > 0) {
            return Err(Error::precondition(format!("hypothesis (i) fails: f({a}) = {fa} > 0")));
        }
        for (a, &fa) in f {
            for (b, &fb) in f {
                if a.leq(b)? && fa > fb {
                    return Err(Error::precondition(format!("hypothesis (ii) fails: {a} <= {b} but f decreases")));
                }
            }
        }
        for (a, &fa) in f {
            for (b, &fb) in f {
                // Every member contains index n, so meets exist.
                let m = a.meet(b)?.expect("meet inside nabla");
                let excess = fa + fb - f[&m];
                match f.get(&a.join(b)?) {
                    Some(&fj) if fj != excess => {
                        return Err(Error::precondition(format!("hypothesis (iii) fails at ({a}, {b})")));
                    }
                    None if excess < 0 => {
                        return Err(Error::precondition(format!("hypothesis (iv) fails at ({a}, {b})")));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    fn check_weight_mu(&self, f: &BTreeMap<PosRoot, i64>, mu: &Weight) -> Result<()> {
        for beta in RankedRootSystem::new(self.rank())?.positive_roots() {
            let p = mu.pair(&beta)?;
            match f.get(&beta) {
                Some(&fb) if p != fb => {
                    return Err(Error::postcondition(format!("<mu, {beta}> = {p}, expected {fb}")));
                }
                None if p < 0 => return Err(Error::postcondition(format!("<mu, {beta}> = {p} < 0 off the ideal"))),
                _ => {}
            }
        }
        let lam = mu.act(&self.tau_a().inverse())?;
        if !lam.is_dominant() {
            return Err(Error::postcondition(format!("tau_A^-1 mu = {lam} is not dominant")));
        }
        Ok(())
    }
}

fn product_of_reflections(degree: usize, order: &[PosRoot]) -> Permutation {
    let mut p = Permutation::identity(degree);
    for beta in order {
        p = p.compose(&Permutation::reflection(beta)).expect("same degree");
    }
    p
}
