//! Independent oracles. Nothing here calls the library's algorithms beyond
//! constructors and accessors.

#![allow(dead_code)]

use rectlift::{Permutation, PosRoot, Weight};

/// One-line notation as a plain vector.
pub fn oneline(p: &Permutation) -> Vec<usize> {
    p.oneline().iter().map(|&v| v as usize).collect()
}

/// `s_{i₁}∘…∘s_{i_k}` evaluated pointwise: `x ↦ s_{i₁}(…s_{i_k}(x))`.
pub fn word_to_oneline(degree: usize, word: &[usize]) -> Vec<usize> {
    (1..=degree)
        .map(|x| {
            word.iter().rev().fold(x, |y, &i| if y == i { i + 1 } else if y == i + 1 { i } else { y })
        })
        .collect()
}

/// `(p∘q)(x) = p(q(x))`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x - 1]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (k, &v) in p.iter().enumerate() {
        inv[v - 1] = k + 1;
    }
    inv
}

/// `(i, j)` pairs of `N(p)`: `α_{i,j} ∈ N(p)` iff `p(i) > p(j+1)`.
pub fn inversion_pairs(p: &[usize]) -> Vec<(usize, usize)> {
    let m = p.len();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i..m {
            if p[i - 1] > p[j] {
                out.push((i, j));
            }
        }
    }
    out.sort();
    out
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if m < k {
        return vec![];
    }
    let mut out = k_subsets(m - 1, k);
    for mut s in k_subsets(m - 1, k - 1) {
        s.push(m - 1);
        out.push(s);
    }
    out
}

/// Pattern containment by scanning every subsequence of length `|q|`.
pub fn contains_pattern(p: &[usize], q: &[usize]) -> bool {
    k_subsets(p.len(), q.len()).into_iter().any(|pos| {
        (0..q.len()).all(|a| (0..q.len()).all(|b| (p[pos[a]] < p[pos[b]]) == (q[a] < q[b])))
    })
}

pub fn all_perms(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_perms(m - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, m);
            out.push(v);
        }
    }
    out.sort();
    out
}

/// Rectangular counts from the recurrence `r₁ = 1, r₂ = 2, r_n = 4r_{n−1} − 2r_{n−2}`.
pub fn rect_recurrence(n: usize) -> u64 {
    let mut r = [1u64, 2u64];
    if n == 1 {
        return 1;
    }
    for _ in 3..=n {
        r = [r[1], 4 * r[1] - 2 * r[0]];
    }
    r[1]
}

/// ε-coordinates of `Σ c_t ϖ_t`.
pub fn epsilon(c: &[i64]) -> Vec<i64> {
    let mut a = vec![0; c.len() + 1];
    for k in (0..c.len()).rev() {
        a[k] = a[k + 1] + c[k];
    }
    a
}

/// `w·λ` via `ε_k ↦ ε_{w(k)}`, returned in fundamental coordinates.
pub fn act(w: &[usize], c: &[i64]) -> Vec<i64> {
    let a = epsilon(c);
    let mut b = vec![0; a.len()];
    for k in 0..a.len() {
        b[w[k] - 1] = a[k];
    }
    b.windows(2).map(|x| x[0] - x[1]).collect()
}

/// `⟨λ, α_{i,j}^∨⟩` from ε-coordinates.
pub fn pair(c: &[i64], i: usize, j: usize) -> i64 {
    let a = epsilon(c);
    a[i - 1] - a[j]
}

/// Weyl dimension formula `Π_{a<b} (λ_a − λ_b + b − a)/(b − a)` in exact integers.
pub fn weyl_dim(c: &[i64]) -> u64 {
    let a = epsilon(c);
    let m = a.len();
    let (mut num, mut den) = (1i128, 1i128);
    for x in 0..m {
        for y in x + 1..m {
            num *= (a[x] - a[y] + (y - x) as i64) as i128;
            den *= (y - x) as i128;
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as u64
}

/// `dim V_τ(ϖ_r)`: `r`-subsets below `τ({1..r})` in the componentwise order of sorted tuples.
pub fn minuscule_demazure_dim(tau: &[usize], r: usize) -> u64 {
    let mut top: Vec<usize> = tau[..r].to_vec();
    top.sort();
    k_subsets(tau.len(), r)
        .into_iter()
        .filter(|s| s.iter().zip(&top).all(|(&x, &t)| x < t))
        .count() as u64
}

/// Every Dyck path from `(i,i)` to `(j,j)` as a list of cells.
fn dyck_paths(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(p: usize, q: usize, j: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        cur.push((p, q));
        if p == j && q == j {
            out.push(cur.clone());
        } else {
            if q < j {
                go(p, q + 1, j, cur, out);
            }
            if p < q {
                go(p + 1, q, j, cur, out);
            }
        }
        cur.pop();
    }
    let mut out = Vec::new();
    go(i, i, j, &mut Vec::new(), &mut out);
    out
}

/// Lattice points of the FFLV face, by scanning the bounding box and
/// testing every Dyck path explicitly.
pub fn brute_polytope_count(rank: usize, support: &[(usize, usize)], c: &[i64]) -> u64 {
    let s = |i: usize, j: usize| c[i - 1..j].iter().sum::<i64>();
    let paths: Vec<(i64, Vec<usize>)> = (1..=rank)
        .flat_map(|i| (i..=rank).map(move |j| (i, j)))
        .flat_map(|(i, j)| {
            dyck_paths(i, j).into_iter().map(move |path| {
                let idx = path.iter().filter_map(|cell| support.iter().position(|x| x == cell)).collect();
                (s(i, j), idx)
            })
        })
        .collect();
    let bounds: Vec<i64> = support.iter().map(|&(p, q)| s(p, q)).collect();
    let mut x = vec![0i64; support.len()];
    let mut count = 0;
    loop {
        if paths.iter().all(|(b, idx)| idx.iter().map(|&k| x[k]).sum::<i64>() <= *b) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == x.len() {
                return count;
            }
            if x[k] < bounds[k] {
                x[k] += 1;
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

pub fn root(rank: usize, i: usize, j: usize) -> PosRoot {
    PosRoot::new(rank, i, j).unwrap()
}

pub fn weight(c: &[i64]) -> Weight {
    Weight::new(c.to_vec()).unwrap()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn from_oneline(v: &[usize]) -> Permutation {
    Permutation::new(v.iter().map(|&x| x as u8).collect()).unwrap()
}
