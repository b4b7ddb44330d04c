//! Lifting a rectangular `τ ∈ 𝔖_{n+1}` and a dominant `λ` to a pair
//! `(τ̃, λ̃)` for `𝔖_{2n}`, and checking the lift.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dimension::{demazure_dim, polytope_count};
use crate::error::{Error, Result};
use crate::nabla::{is_nabla_ideal, nabla_root, NablaIdeal};
use crate::parallel::{self, Exec};
use crate::perm::{self, EnumerationConfig, PermClass, Permutation};
use crate::rectsets::RootSubset;
use crate::roots::{PosRoot, RankedRootSystem};
use crate::weights::Weight;

/// The order-reversing bijection `𝒟 : N(τ) → ∇_n` for irreducible rectangular `τ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DMap {
    #[serde(skip)]
    n: usize,
    source: RootSubset,
    /// `n = j₁ > j₂ > … > j_s`, the ends of `N(τ)⁻`.
    js: Vec<usize>,
    /// `1 = i₁ < i₂ < … < i_r`, the starts of `N(τ)⁺`.
    is: Vec<usize>,
    /// `(α, 𝒟(α))`, ordered by `α`.
    pairs: BTreeMap<PosRoot, PosRoot>,
    image: NablaIdeal,
}

impl DMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &RootSubset {
        &self.source
    }

    pub fn js(&self) -> &[usize] {
        &self.js
    }

    pub fn is(&self) -> &[usize] {
        &self.is
    }

    pub fn image(&self) -> &NablaIdeal {
        &self.image
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&PosRoot, &PosRoot)> {
        self.pairs.iter()
    }

    pub fn apply(&self, root: &PosRoot) -> Result<PosRoot> {
        self.pairs
            .get(root)
            .copied()
            .ok_or_else(|| Error::precondition(format!("{root} is not in the inversion set")))
    }
}

fn require_irreducible_rectangular(tau: &Permutation) -> Result<RootSubset> {
    if tau.degree() < 2 {
        return Err(Error::InvalidRank(0));
    }
    let n = tau.inversion_set();
    if !n.is_rectangular_subset() {
        return Err(Error::precondition(format!("{tau} is not rectangular")));
    }
    if !n.is_irreducible()? {
        return Err(Error::precondition(format!("{tau} is reducible; use lift_general")));
    }
    Ok(n)
}

pub fn d_map(tau: &Permutation) -> Result<DMap> {
    let source = require_irreducible_rectangular(tau)?;
    let n = tau.rank();
    let (minus, plus) = source.boundary_sets()?;
    let mut js: Vec<usize> = minus.iter().map(|r| r.j()).collect();
    js.reverse();
    let is: Vec<usize> = plus.iter().map(|r| r.i()).collect();
    let mut pairs = BTreeMap::new();
    let mut image = RootSubset::empty(2 * n - 1);
    for root in source.iter() {
        let h = is.iter().position(|&i| i == root.i()).map(|x| x + 1);
        let k = js.iter().position(|&j| j == root.j()).map(|x| x + 1);
        let (Some(h), Some(k)) = (h, k) else {
            return Err(Error::postcondition(format!("{root} is not a boundary meet")));
        };
        let target = nabla_root(n, k, h).map_err(|e| Error::postcondition(e.to_string()))?;
        pairs.insert(*root, target);
        image.insert(target)?;
    }
    let image = NablaIdeal::new(n, image).map_err(|e| Error::postcondition(e.to_string()))?;
    Ok(DMap { n, source, js, is, pairs, image })
}

/// `(τ̃, λ̃)` and the intermediate data for an irreducible rectangular `τ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftResult {
    pub tau: Permutation,
    pub lambda: Weight,
    pub tau_tilde: Permutation,
    pub lambda_tilde: Weight,
    pub ideal: NablaIdeal,
    #[serde(skip)]
    pub dmap: DMap,
    /// `τ̃·λ̃`.
    pub mu: Weight,
}

/// `r' = n − v + u` for the fundamental weight `ϖ_r`.
pub fn fundamental_index(dmap: &DMap, r: usize) -> usize {
    let v = dmap.js.iter().filter(|&&j| j >= r).count();
    let u = dmap.is.iter().filter(|&&i| i <= r).count();
    dmap.n - v + u
}

pub fn lift(tau: &Permutation, lambda: &Weight) -> Result<LiftResult> {
    if lambda.rank() != tau.rank() {
        return Err(Error::RankMismatch { left: tau.rank(), right: lambda.rank() });
    }
    lambda.require_dominant()?;
    let dmap = d_map(tau)?;
    let n = dmap.n;
    let ideal = dmap.image.clone();
    let tau_tilde = ideal.tau_a();
    let mut lambda_tilde = Weight::zero(2 * n - 1)?;
    for r in 1..=n {
        lambda_tilde.add_fundamental(fundamental_index(&dmap, r), lambda.coeff(r));
    }
    let mu = lambda_tilde.act(&tau_tilde)?;
    for (alpha, d) in dmap.pairs() {
        let (lhs, rhs) = (mu.pair(d)?, -lambda.pair(alpha)?);
        if lhs != rhs {
            return Err(Error::postcondition(format!("<mu, D({alpha})> = {lhs}, expected {rhs}")));
        }
    }
    for beta in RankedRootSystem::new(2 * n - 1)?.positive_roots() {
        if !ideal.contains(&beta) && mu.pair(&beta)? < 0 {
            return Err(Error::postcondition(format!("<mu, {beta}> < 0 off the ideal")));
        }
    }
    Ok(LiftResult { tau: tau.clone(), lambda: lambda.clone(), tau_tilde, lambda_tilde, ideal, dmap, mu })
}

/// The lift of one irreducible component of a rectangular `τ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentLift {
    /// Simple indices `[lo, hi]` of the component.
    pub interval: (usize, usize),
    pub tau_local: Permutation,
    pub lambda_local: Weight,
    pub result: LiftResult,
}

/// Lifts each irreducible component separately, left to right.
pub fn lift_general(tau: &Permutation, lambda: &Weight) -> Result<Vec<ComponentLift>> {
    if lambda.rank() != tau.rank() {
        return Err(Error::RankMismatch { left: tau.rank(), right: lambda.rank() });
    }
    lambda.require_dominant()?;
    let decomposition = tau.inversion_set().decompose()?;
    decomposition
        .intervals
        .iter()
        .map(|&(lo, hi)| {
            let tau_local = tau.restrict_block(lo, hi + 1)?;
            let lambda_local = Weight::new(lambda.coeffs()[lo - 1..hi].to_vec())?;
            let result = lift(&tau_local, &lambda_local)?;
            Ok(ComponentLift { interval: (lo, hi), tau_local, lambda_local, result })
        })
        .collect()
}

/// Names of the checks in a [`VerificationReport`], in report order.
pub const CHECK_NAMES: [&str; 8] = [
    "ideal",
    "inversion_set",
    "poset_isomorphism",
    "commutativity",
    "pairing",
    "weight_mu",
    "tilde_rectangular",
    "dimension",
];

/// Dimensions of `V_τ(λ)` and of the lifted modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCheck {
    pub demazure: u64,
    pub polytope: u64,
    /// `Π_t dim V_{τ̃_t}(λ̃_t)` by the Demazure oracle.
    pub lifted_demazure: u64,
    /// The same product by polytope counts on `Ñ(τ̃_t)`.
    pub lifted_polytope: u64,
}

impl DimensionCheck {
    pub fn all_equal(&self) -> bool {
        let d = self.demazure;
        self.polytope == d && self.lifted_demazure == d && self.lifted_polytope == d
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub tau: Permutation,
    pub lambda: Weight,
    pub checks: BTreeMap<&'static str, bool>,
    pub dimensions: Option<DimensionCheck>,
    /// First failure message per failed check.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub failures: BTreeMap<&'static str, String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&b| b)
    }
}

/// Which checks [`verify_lift_with`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub dimensions: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { dimensions: true }
    }
}

/// All checks, including both dimension oracles.
pub fn verify_lift(tau: &Permutation, lambda: &Weight) -> Result<VerificationReport> {
    verify_lift_with(tau, lambda, VerifyOptions::default())
}

pub fn verify_lift_with(tau: &Permutation, lambda: &Weight, options: VerifyOptions) -> Result<VerificationReport> {
    if !tau.is_rectangular() {
        return Err(Error::precondition(format!("{tau} is not rectangular")));
    }
    let components = lift_general(tau, lambda)?;
    let mut report = VerificationReport {
        tau: tau.clone(),
        lambda: lambda.clone(),
        checks: BTreeMap::new(),
        dimensions: None,
        failures: BTreeMap::new(),
    };
    let mut record = |name: &'static str, outcome: std::result::Result<(), String>| {
        let ok = outcome.is_ok();
        let entry = report.checks.entry(name).or_insert(true);
        *entry &= ok;
        if let Err(msg) = outcome {
            report.failures.entry(name).or_insert(msg);
        }
    };
    for name in CHECK_NAMES {
        if name != "dimension" || options.dimensions {
            record(name, Ok(()));
        }
    }
    for comp in &components {
        let res = &comp.result;
        record("ideal", check_ideal(res));
        record("inversion_set", check_inversion_set(res));
        record("poset_isomorphism", check_poset_isomorphism(res));
        record("commutativity", check_commutativity(res));
        record("pairing", check_pairing(res));
        record("weight_mu", check_weight_mu(res));
        record("tilde_rectangular", check_tilde_rectangular(res));
    }
    if options.dimensions {
        match dimension_check(tau, lambda, &components) {
            Ok(dims) => {
                let ok = dims.all_equal();
                record("dimension", if ok { Ok(()) } else { Err(format!("dimensions differ: {dims:?}")) });
                report.dimensions = Some(dims);
            }
            Err(e) => record("dimension", Err(e.to_string())),
        }
    }
    Ok(report)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_ideal(res: &LiftResult) -> std::result::Result<(), String> {
    let n = res.dmap.n;
    ensure(is_nabla_ideal(n, res.ideal.members()), || format!("{} is not a nabla_{n} ideal", res.ideal.members()))
}

fn check_inversion_set(res: &LiftResult) -> std::result::Result<(), String> {
    let inv = res.tau_tilde.inverse().inversion_set();
    ensure(&inv == res.ideal.members(), || format!("N(tau_tilde^-1) = {inv}, ideal = {}", res.ideal.members()))?;
    ensure(res.tau_tilde.length() == res.ideal.len(), || "length of tau_tilde differs from |ideal|".into())
}

/// `i_A ∘ 𝒟 : N(τ) → Ñ(τ̃)` is a bijection that preserves order, joins and existing meets.
fn check_poset_isomorphism(res: &LiftResult) -> std::result::Result<(), String> {
    let err = |e: Error| e.to_string();
    let phi: BTreeMap<PosRoot, PosRoot> = res
        .dmap
        .pairs()
        .map(|(a, d)| res.ideal.i_a(d).map(|x| (*a, x)))
        .collect::<Result<_>>()
        .map_err(err)?;
    let image = RootSubset::from_roots(res.ideal.rank(), phi.values().copied()).map_err(err)?;
    let target = res.tau_tilde.inversion_set();
    ensure(image == target && image.len() == phi.len(), || format!("image {image} differs from N(tau_tilde) {target}"))?;
    for (a, pa) in &phi {
        for (b, pb) in &phi {
            let (le, ple) = (a.leq(b).map_err(err)?, pa.leq(pb).map_err(err)?);
            ensure(le == ple, || format!("order not preserved on ({a}, {b})"))?;
            let j = a.join(b).map_err(err)?;
            if let Some(pj) = phi.get(&j) {
                ensure(*pj == pa.join(pb).map_err(err)?, || format!("join not preserved on ({a}, {b})"))?;
            }
            if let Some(m) = a.meet(b).map_err(err)? {
                if let Some(pm) = phi.get(&m) {
                    let pmeet = pa.meet(pb).map_err(err)?;
                    ensure(pmeet == Some(*pm), || format!("meet not preserved on ({a}, {b})"))?;
                }
            }
        }
    }
    Ok(())
}

fn check_commutativity(res: &LiftResult) -> std::result::Result<(), String> {
    let n = res.tau_tilde.inversion_set();
    for g in n.iter() {
        for d in n.iter() {
            ensure(!g.sum_is_root(d).expect("same rank"), || format!("{g} + {d} is a root"))?;
        }
    }
    Ok(())
}

fn check_pairing(res: &LiftResult) -> std::result::Result<(), String> {
    let err = |e: Error| e.to_string();
    ensure(res.lambda_tilde.is_dominant(), || format!("lambda_tilde {} is not dominant", res.lambda_tilde))?;
    let dom = res.mu.dominant_representative();
    ensure(dom == res.lambda_tilde, || format!("dominant representative of mu is {dom}"))?;
    for (alpha, d) in res.dmap.pairs() {
        let (lhs, rhs) = (res.mu.pair(d).map_err(err)?, -res.lambda.pair(alpha).map_err(err)?);
        ensure(lhs == rhs, || format!("<mu, {d}> = {lhs}, expected {rhs}"))?;
    }
    for beta in RankedRootSystem::new(res.ideal.rank()).map_err(err)?.positive_roots() {
        if !res.ideal.contains(&beta) {
            ensure(res.mu.pair(&beta).map_err(err)? >= 0, || format!("<mu, {beta}> < 0"))?;
        }
    }
    Ok(())
}

/// `f(𝒟α) = −⟨λ, α^∨⟩` and the weight built from `f`.
pub fn transported_pairing(res: &LiftResult) -> Result<BTreeMap<PosRoot, i64>> {
    res.dmap.pairs().map(|(a, d)| Ok((*d, -res.lambda.pair(a)?))).collect()
}

fn check_weight_mu(res: &LiftResult) -> std::result::Result<(), String> {
    let err = |e: Error| e.to_string();
    let f = transported_pairing(res).map_err(err)?;
    let mu = res.ideal.weight_mu(&f).map_err(err)?;
    let back = mu.act(&res.tau_tilde.inverse()).map_err(err)?;
    ensure(back == res.lambda_tilde, || format!("tau_tilde^-1 mu = {back}, lambda_tilde = {}", res.lambda_tilde))
}

fn check_tilde_rectangular(res: &LiftResult) -> std::result::Result<(), String> {
    let err = |e: Error| e.to_string();
    let n = res.tau_tilde.inversion_set();
    let intervals = n.support_intervals();
    let [(lo, hi)] = intervals[..] else {
        return Err(format!("N(tau_tilde) spans intervals {intervals:?}"));
    };
    let local = n.restrict_to(lo, hi).map_err(err)?;
    ensure(local.is_rectangular_subset(), || format!("N(tau_tilde) on [{lo}, {hi}] is not rectangular"))?;
    ensure(local.is_irreducible().map_err(err)?, || format!("N(tau_tilde) on [{lo}, {hi}] is reducible"))
}

fn dimension_check(tau: &Permutation, lambda: &Weight, components: &[ComponentLift]) -> Result<DimensionCheck> {
    let demazure = demazure_dim(tau, lambda)?;
    let polytope = polytope_count(&tau.inversion_set(), lambda)?;
    let mut lifted_demazure = 1;
    let mut lifted_polytope = 1;
    for comp in components {
        let res = &comp.result;
        lifted_demazure *= demazure_dim(&res.tau_tilde, &res.lambda_tilde)?;
        lifted_polytope *= polytope_count(&res.tau_tilde.inversion_set(), &res.lambda_tilde)?;
    }
    Ok(DimensionCheck { demazure, polytope, lifted_demazure, lifted_polytope })
}

/// Every weight of `rank` with coefficients in `0..=max_coeff`, lexicographically.
pub fn bounded_weights(rank: usize, max_coeff: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (0..=max_coeff).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|c| Weight::new(c).expect("rank >= 1")).collect()
}

/// [`verify_lift`] over every rectangular `τ ∈ 𝔖_degree` and every weight with
/// coefficients in `0..=max_coeff`, ordered by `τ` then `λ`.
pub fn sweep(degree: usize, max_coeff: i64, exec: Exec) -> Result<Vec<VerificationReport>> {
    if degree < 2 {
        return Err(Error::InvalidRank(degree.saturating_sub(1)));
    }
    if max_coeff < 0 {
        return Err(Error::precondition("max coefficient must be non-negative"));
    }
    let config = EnumerationConfig { exec, ..EnumerationConfig::default() };
    let perms = perm::enumerate_with(degree, PermClass::Rectangular, &config)?;
    let weights = bounded_weights(degree - 1, max_coeff);
    let pairs: Vec<(Permutation, Weight)> =
        perms.iter().flat_map(|p| weights.iter().map(move |w| (p.clone(), w.clone()))).collect();
    parallel::map_collect(exec, pairs, |(p, w)| verify_lift(&p, &w)).into_iter().collect()
}
