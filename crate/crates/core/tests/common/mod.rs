//! Independent oracles: dense exact elimination and hand-written structure
//! constants, sharing nothing with the library beyond the scalar type.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Rank by textbook Gauss-Jordan elimination on a dense copy.
pub fn dense_rank(m: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = Q::one() / a[rank][c].clone();
        for x in a[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in c..cols {
                    let v = &a[rank][k] * &f;
                    a[r][k] = &a[r][k] - v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `m x = b` has a solution, by comparing ranks.
pub fn dense_solvable(m: &[Vec<Q>], b: &[Q]) -> bool {
    let aug: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(row, v)| row.iter().cloned().chain([v.clone()]).collect())
        .collect();
    dense_rank(m) == dense_rank(&aug)
}

/// Hand-copied brackets `[e_a, e_b] = c e_{a+b}` of the finite builtins and
/// of W₁, with `None` for zero.
pub fn oracle_bracket(name: &str, a: i64, b: i64) -> Option<(i64, Q)> {
    let c = match name {
        "w1" => a - b,
        "sl2" => match (a, b) {
            (2, -2) => 1,
            (-2, 2) => -1,
            (2, 0) => 2,
            (0, 2) => -2,
            (-2, 0) => -2,
            (0, -2) => 2,
            _ => 0,
        },
        "heisenberg" => match (a, b) {
            (1, 2) => 1,
            (2, 1) => -1,
            _ => 0,
        },
        _ => 0,
    };
    (c != 0).then(|| (a + b, q(c)))
}

pub fn oracle_support(name: &str) -> Vec<i64> {
    match name {
        "sl2" => vec![-2, 0, 2],
        "heisenberg" => vec![1, 2, 3],
        "abelian1" => vec![0],
        "abelian2" => vec![1, 2],
        "abelian3" => vec![1, 2, 3],
        other => panic!("no finite oracle for {other}"),
    }
}

/// Every tuple of length `n` over `support`.
pub fn all_tuples(support: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                support.iter().map(move |&k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn increasing(t: &[i64]) -> bool {
    t.windows(2).all(|w| w[0] < w[1])
}

fn sorted_sign(t: &[i64]) -> Option<(i64, Vec<i64>)> {
    let mut v = t.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    increasing(&v).then_some((sign, v))
}

/// Dense matrix of the coboundary from `source` to `target` tuples, built
/// straight from the textbook formulas.
pub fn dense_d(name: &str, lie: bool, source: &[Vec<i64>], target: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let mut m = vec![vec![q(0); source.len()]; target.len()];
    let col = |t: &[i64]| source.iter().position(|s| s == t);
    for (r, t) in target.iter().enumerate() {
        let n = t.len();
        for i in 0..n {
            for j in i + 1..n {
                let Some((w, c)) = oracle_bracket(name, t[i], t[j]) else {
                    continue;
                };
                if lie {
                    // (−1)^{i+j} f([x_i, x_j], rest)
                    let mut args = vec![w];
                    args.extend((0..n).filter(|&k| k != i && k != j).map(|k| t[k]));
                    if let Some((s, sorted)) = sorted_sign(&args) {
                        if let Some(cidx) = col(&sorted) {
                            let sign = if (i + j) % 2 == 0 { s } else { -s };
                            m[r][cidx] = &m[r][cidx] + &c * q(sign);
                        }
                    }
                } else {
                    // (−1)^j f(…, [x_i, x_j] at i, …, x̂_j, …), j 0-based
                    let mut args: Vec<i64> = t.clone();
                    args[i] = w;
                    args.remove(j);
                    if let Some(cidx) = col(&args) {
                        let s = if j % 2 == 0 { 1 } else { -1 };
                        m[r][cidx] = &m[r][cidx] + &c * q(s);
                    }
                }
            }
        }
    }
    m
}

/// Cochain basis of degree `n` for a finite algebra (all weights).
pub fn finite_basis(name: &str, lie: bool, n: usize) -> Vec<Vec<i64>> {
    let all = all_tuples(&oracle_support(name), n);
    if lie {
        all.into_iter().filter(|t| increasing(t)).collect()
    } else {
        all
    }
}

/// Strictly increasing tuples of length `n` from `lo..=hi`.
pub fn increasing_tuples(lo: i64, hi: i64, n: usize) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (lo..=hi)
        .flat_map(|first| {
            increasing_tuples(first + 1, hi, n - 1)
                .into_iter()
                .map(move |mut t| {
                    t.insert(0, first);
                    t
                })
        })
        .collect()
}

/// Zero-weight basis of W₁: brute-force filtering of `[−1, n]ⁿ` for Leibniz,
/// increasing tuples for Lie.
pub fn w1_zero_weight_basis(lie: bool, n: usize) -> Vec<Vec<i64>> {
    let candidates = if lie {
        increasing_tuples(-1, n as i64, n)
    } else {
        let support: Vec<i64> = (-1..=n as i64).collect();
        all_tuples(&support, n)
    };
    candidates
        .into_iter()
        .filter(|t| t.iter().sum::<i64>() == 0)
        .collect()
}

/// `dim H^n` for `n ≤ top` from dense ranks over the given bases.
pub fn dense_dims(
    name: &str,
    lie: bool,
    top: usize,
    basis: impl Fn(usize) -> Vec<Vec<i64>>,
) -> Vec<usize> {
    let bases: Vec<Vec<Vec<i64>>> = (0..=top + 1).map(&basis).collect();
    let ranks: Vec<usize> = (0..=top)
        .map(|n| dense_rank(&dense_d(name, lie, &bases[n], &bases[n + 1])))
        .collect();
    (0..=top)
        .map(|n| bases[n].len() - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect()
}
