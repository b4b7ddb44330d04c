//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rectlift::dimension::demazure_character_for_word;
use rectlift::lift::{bounded_weights, transported_pairing};
use rectlift::perm::{all_permutations, enumerate};
use rectlift::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    check(census(4, PermClass::Rectangular).unwrap() == 20, || "census(4, rectangular) != 20".into())?;
    check(census(4, PermClass::Triangular).unwrap() == 22, || "census(4, triangular) != 22".into())?;
    let mut counts = Vec::new();
    for n in 1..=8 {
        let got = census(n, PermClass::Rectangular).unwrap();
        check(got == rect_recurrence(n), || format!("r_{n} = {got}, recurrence gives {}", rect_recurrence(n)))?;
        counts.push(got);
    }
    Ok(format!("r_1..r_8 = {counts:?}"))
}

fn criterion_2() -> Outcome {
    let rect_patterns: Vec<Vec<usize>> = vec![vec![2, 4, 1, 3], vec![2, 4, 3, 1], vec![4, 2, 1, 3], vec![4, 2, 3, 1]];
    let tri_patterns: Vec<Vec<usize>> = vec![vec![4, 2, 3, 1], vec![2, 4, 1, 3]];
    let mut total = 0;
    for n in 1..=6 {
        for p in all_permutations(n) {
            let v = oneline(&p);
            let n_p = p.inversion_set();
            let rect = [
                p.is_rectangular(),
                p.is_rectangular_by_inequalities(),
                n_p.is_rectangular_subset(),
                !rect_patterns.iter().any(|q| contains_pattern(&v, q)),
            ];
            check(rect.iter().all(|&b| b == rect[0]), || format!("rectangular tests disagree on {p}: {rect:?}"))?;
            let tri = [
                p.is_triangular(),
                p.is_triangular_by_inequalities(),
                n_p.is_triangular_subset(),
                !tri_patterns.iter().any(|q| contains_pattern(&v, q)),
            ];
            check(tri.iter().all(|&b| b == tri[0]), || format!("triangular tests disagree on {p}: {tri:?}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} permutations, n <= 6"))
}

fn criterion_3() -> Outcome {
    let tau = perm("43251");
    let expect_n: Vec<(usize, usize)> = vec![(1, 1), (1, 2), (1, 4), (2, 2), (2, 4), (3, 4), (4, 4)];
    let got_n: Vec<(usize, usize)> = tau.inversion_set().iter().map(|r| (r.i(), r.j())).collect();
    check(got_n == expect_n, || format!("N(43251) = {got_n:?}"))?;
    check(inversion_pairs(&oneline(&tau)) == expect_n, || "oracle disagrees on N(43251)".into())?;

    let d = d_map(&tau).map_err(|e| e.to_string())?;
    let ideal_pairs = vec![(2, 4), (3, 4), (3, 5), (4, 4), (4, 5), (4, 6), (4, 7)];
    let got_ideal: Vec<(usize, usize)> = d.image().members().iter().map(|r| (r.i(), r.j())).collect();
    check(got_ideal == ideal_pairs, || format!("D image = {got_ideal:?}"))?;

    let tau_a = d.image().tau_a();
    let expect_tau_a = word_to_oneline(8, &[4, 5, 6, 7, 3, 4, 2]);
    check(oneline(&tau_a) == expect_tau_a, || format!("tau_A = {tau_a}, expected {expect_tau_a:?}"))?;

    let st = d.image().stats();
    check(st.c == vec![4, 2, 1, 0] && st.r == vec![3, 2, 1, 1], || format!("stats = {st:?}"))?;

    let tilde = vec![(2, 2), (2, 4), (2, 7), (4, 4), (4, 7), (6, 7), (7, 7)];
    let got: Vec<(usize, usize)> = tau_a.inversion_set().iter().map(|r| (r.i(), r.j())).collect();
    check(got == tilde, || format!("N(tau_tilde) = {got:?}"))?;
    check(inversion_pairs(&expect_tau_a) == tilde, || "oracle disagrees on N(tau_tilde)".into())?;
    Ok(format!("tau_tilde = {tau_a}"))
}

fn random_ideal(rng: &mut StdRng, n: usize) -> NablaIdeal {
    // Row lengths non-increasing and inside the staircase h + k <= n + 1.
    let mut c = Vec::with_capacity(n);
    let mut prev = n;
    for k in 1..=n {
        let cap = prev.min(n + 1 - k);
        let len = rng.gen_range(0..=cap);
        c.push(len);
        prev = len;
    }
    NablaIdeal::from_row_lengths(n, &c).unwrap()
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut cells = 0;
    for t in 0..200 {
        let n = 1 + t % 6;
        let a = random_ideal(&mut rng, n);
        let tau = oneline(&a.tau_a());
        let inv = inverse(&tau);
        for beta in nabla(n).unwrap().iter() {
            let image = a.tau_inv_on_nabla(beta).map_err(|e| e.to_string())?;
            let NablaImage::Root(img) = image else {
                return Err(format!("degenerate image for {beta} in {:?}", a.members()));
            };
            let (x, y) = (inv[beta.i() - 1], inv[beta.j()]);
            let (lo, hi, negative) = if x < y { (x, y, false) } else { (y, x, true) };
            let ok = img.negative == negative && img.root.i() == lo && img.root.j() == hi - 1;
            check(ok, || format!("tau_A^-1({beta}) = {img}, oracle gives eps_{x} - eps_{y}"))?;
            cells += 1;
        }
        let members: Vec<(usize, usize)> = a.members().iter().map(|r| (r.i(), r.j())).collect();
        check(inversion_pairs(&inv) == members, || format!("N(tau_A^-1) != A for {members:?}"))?;
        check(inversion_pairs(&tau).len() == a.len(), || "length of tau_A != |A|".into())?;
    }
    Ok(format!("200 ideals, {cells} nabla cells"))
}

/// Rectangular τ with λ ∈ {0,1}ⁿ for 𝔖₄, 𝔖₅ and λ ∈ {0,1,2}ⁿ for 𝔖₄.
fn sweep_pairs() -> Vec<(Permutation, Weight)> {
    let mut out = Vec::new();
    for (degree, max) in [(4, 2), (5, 1)] {
        for p in enumerate(degree, PermClass::Rectangular).unwrap() {
            for w in bounded_weights(degree - 1, max) {
                out.push((p.clone(), w));
            }
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let mut n = 0;
    for (deg, max) in [(4, 2), (5, 1)] {
        let reports = sweep(deg, max, Exec::Parallel).map_err(|e| e.to_string())?;
        for r in &reports {
            check(r.passed(), || format!("verify_lift({}, {}) failed: {:?}", r.tau, r.lambda, r.failures))?;
            let dims = r.dimensions.as_ref().ok_or("no dimensions")?;
            // Fundamental weights also have a closed-form oracle.
            let coeffs = r.lambda.coeffs();
            if coeffs.iter().sum::<i64>() == 1 {
                let k = coeffs.iter().position(|&c| c == 1).unwrap() + 1;
                let expect = minuscule_demazure_dim(&oneline(&r.tau), k);
                check(dims.demazure == expect, || format!("dim V_{}(w_{k}) = {}, oracle {expect}", r.tau, dims.demazure))?;
            }
            if r.tau == Permutation::longest(deg) {
                let expect = weyl_dim(coeffs);
                check(dims.demazure == expect, || format!("dim V(lambda) = {}, Weyl {expect}", dims.demazure))?;
            }
            let brute = brute_polytope_count(
                deg - 1,
                &inversion_pairs(&oneline(&r.tau)),
                coeffs,
            );
            check(dims.polytope == brute, || format!("polytope count {} vs brute {brute}", dims.polytope))?;
        }
        n += reports.len();
    }
    check(n == sweep_pairs().len(), || "sweep size mismatch".into())?;
    Ok(format!("{n} (tau, lambda) pairs"))
}

fn random_reduced_word(rng: &mut StdRng, p: &[usize]) -> Vec<usize> {
    let mut v = p.to_vec();
    let mut word = Vec::new();
    loop {
        let descents: Vec<usize> = (0..v.len() - 1).filter(|&k| v[k] > v[k + 1]).collect();
        let Some(&k) = descents.choose(rng) else { break };
        v.swap(k, k + 1);
        word.push(k + 1);
    }
    word.reverse();
    word
}

fn criterion_6() -> Outcome {
    let mut weights = 0;
    for rank in 1..=4 {
        let w0 = Permutation::longest(rank + 1);
        for lam in bounded_weights(rank, 2) {
            let d = demazure_dim(&w0, &lam).map_err(|e| e.to_string())?;
            let expect = weyl_dim(lam.coeffs());
            check(d == expect, || format!("dim V({lam}) = {d}, Weyl {expect}"))?;
            weights += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut perms = 0;
    for degree in 3..=5 {
        let lam = weight(&vec![1; degree - 1]);
        for p in all_permutations(degree) {
            let v = oneline(&p);
            let reference = demazure_character(&p, &lam).map_err(|e| e.to_string())?;
            for _ in 0..20 {
                let word = random_reduced_word(&mut rng, &v);
                check(word_to_oneline(degree, &word) == v, || format!("bad random word for {p}"))?;
                let ch = demazure_character_for_word(&lam, &word).map_err(|e| e.to_string())?;
                check(ch == reference, || format!("character of {p} depends on the word {word:?}"))?;
            }
            perms += 1;
        }
    }
    Ok(format!("{weights} Weyl checks, {perms} permutations x 20 words"))
}

fn criterion_7() -> Outcome {
    let pairs = sweep_pairs();
    let mut count = 0;
    for (tau, lam) in &pairs {
        for comp in lift_general(tau, lam).map_err(|e| e.to_string())? {
            let res = &comp.result;
            let f = transported_pairing(res).map_err(|e| e.to_string())?;
            let mu = res.ideal.weight_mu(&f).map_err(|e| format!("weight_mu for {tau}, {lam}: {e}"))?;
            let rank = res.ideal.rank();
            for i in 1..=rank {
                for j in i..=rank {
                    let pr = pair(mu.coeffs(), i, j);
                    let r = root(rank, i, j);
                    match f.get(&r) {
                        Some(&fv) => check(pr == fv, || format!("<mu, {r}> = {pr}, f = {fv}"))?,
                        None => check(pr >= 0, || format!("<mu, {r}> = {pr} < 0 off the ideal"))?,
                    }
                }
            }
            let back = act(&inverse(&oneline(&res.tau_tilde)), mu.coeffs());
            check(back.iter().all(|&c| c >= 0), || format!("tau_tilde^-1 mu = {back:?} not dominant"))?;
            check(back == res.lambda_tilde.coeffs(), || {
                format!("tau_tilde^-1 mu = {back:?}, lambda_tilde = {}", res.lambda_tilde)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} component lifts"))
}

fn criterion_8() -> Outcome {
    let mut seen: BTreeMap<Permutation, usize> = BTreeMap::new();
    for (tau, lam) in sweep_pairs() {
        if seen.contains_key(&tau) {
            continue;
        }
        let mut roots = 0;
        for comp in lift_general(&tau, &lam).map_err(|e| e.to_string())? {
            let t = oneline(&comp.result.tau_tilde);
            let n = inversion_pairs(&t);
            for &(a, b) in &n {
                for &(c, d) in &n {
                    // ε_a − ε_{b+1} plus ε_c − ε_{d+1} is a root iff the middle indices cancel.
                    check(b + 1 != c && d + 1 != a, || format!("a[{a},{b}] + a[{c},{d}] is a root for {tau}"))?;
                }
            }
            roots += n.len();
        }
        seen.insert(tau, roots);
    }
    Ok(format!("{} rectangular elements", seen.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("census", criterion_1),
        ("classification equivalence", criterion_2),
        ("running example fixtures", criterion_3),
        ("closed-form inverse", criterion_4),
        ("theorem sweep", criterion_5),
        ("oracle cross-validation", criterion_6),
        ("weight construction", criterion_7),
        ("commutativity of the lift", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg} ({secs:.2}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
