//! Integral weights of `A_rank` in the fundamental-weight basis.
//!
//! `λ = Σ c_t ϖ_t`. Internally the Weyl group acts through ε-coordinates
//! `a_k = Σ_{t ≥ k} c_t` (`k = 1..=rank+1`, so `a_{rank+1} = 0`).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::roots::PosRoot;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight {
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidRank(0));
        }
        Ok(Weight { coeffs })
    }

    pub fn zero(rank: usize) -> Result<Self> {
        Weight::new(vec![0; rank])
    }

    /// `ϖ_r`. Index `0` and `rank + 1` (the trivial and determinant
    /// characters) are the zero weight.
    pub fn fundamental(rank: usize, r: usize) -> Result<Self> {
        let mut w = Weight::zero(rank)?;
        match r {
            0 => {}
            r if r == rank + 1 => {}
            r if r <= rank => w.coeffs[r - 1] = 1,
            _ => return Err(Error::precondition(format!("no fundamental weight {r} in rank {rank}"))),
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> i64 {
        self.coeffs[t - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant { weight: self.to_string() })
        }
    }

    /// `⟨λ, α_{i,j}^∨⟩ = c_i + … + c_j`.
    pub fn pair(&self, root: &PosRoot) -> Result<i64> {
        if root.rank() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: root.rank() });
        }
        Ok(self.coeffs[root.i() - 1..root.j()].iter().sum())
    }

    /// Adds `m·ϖ_t`, silently dropping `t = 0` and `t = rank + 1`.
    pub fn add_fundamental(&mut self, t: usize, m: i64) {
        if (1..=self.rank()).contains(&t) {
            self.coeffs[t - 1] += m;
        }
    }

    pub fn to_epsilon(&self) -> Vec<i64> {
        let mut a = vec![0i64; self.rank() + 1];
        for k in (0..self.rank()).rev() {
            a[k] = a[k + 1] + self.coeffs[k];
        }
        a
    }

    pub fn from_epsilon(a: &[i64]) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::InvalidRank(0));
        }
        Weight::new(a.windows(2).map(|w| w[0] - w[1]).collect())
    }

    /// `w·λ`, with `w` sending `ε_k ↦ ε_{w(k)}`.
    pub fn act(&self, w: &Permutation) -> Result<Weight> {
        if w.degree() != self.rank() + 1 {
            return Err(Error::RankMismatch { left: self.rank(), right: w.rank() });
        }
        let a = self.to_epsilon();
        let mut b = vec![0i64; a.len()];
        for (k, &ak) in a.iter().enumerate() {
            b[w.apply(k + 1) - 1] = ak;
        }
        Weight::from_epsilon(&b)
    }

    /// The dominant weight in the Weyl orbit of `self`.
    pub fn dominant_representative(&self) -> Weight {
        let mut a = self.to_epsilon();
        a.sort_unstable_by(|x, y| y.cmp(x));
        Weight::from_epsilon(&a).expect("rank preserved")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated fundamental coefficients, e.g. `1,0,0,0`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coefficient {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::new(coeffs)
    }
}
