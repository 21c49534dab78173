//! Brute-force reference for monomial module arithmetic.
//!
//! Each result is rebuilt from a membership predicate evaluated on a box of
//! lattice points known to contain every minimal generator. A member is
//! minimal when stepping down in any single coordinate leaves the set.
//! Nothing here calls the arithmetic under test.

#![allow(dead_code)]

use stellate_core::{ExponentVector, MonomialModule, PrimeFamily};

pub type Point = Vec<i64>;

pub fn gens(a: &MonomialModule) -> Vec<Point> {
    a.gens().iter().map(|g| g.coords().to_vec()).collect()
}

pub fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Point], p: &[i64]) -> bool {
    gens.iter().any(|g| le(g, p))
}

fn lo(gens: &[Point]) -> Point {
    let n = gens[0].len();
    (0..n)
        .map(|j| gens.iter().map(|g| g[j]).min().unwrap())
        .collect()
}

fn hi(gens: &[Point]) -> Point {
    let n = gens[0].len();
    (0..n)
        .map(|j| gens.iter().map(|g| g[j]).max().unwrap())
        .collect()
}

/// Minimal points of the upset `{p : pred(p)}`, searching the box
/// `[lo - 1, hi + 1]`.
pub fn rebuild(lo: &[i64], hi: &[i64], pred: impl Fn(&[i64]) -> bool) -> MonomialModule {
    let n = lo.len();
    let mut out = Vec::new();
    let mut p: Point = lo.iter().map(|x| x - 1).collect();
    loop {
        if pred(&p) {
            let minimal = (0..n).all(|j| {
                let mut q = p.clone();
                q[j] -= 1;
                !pred(&q)
            });
            if minimal {
                out.push(ExponentVector::new(p.clone()));
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                return MonomialModule::new(n, out).expect("oracle found no generator");
            }
            p[j] += 1;
            if p[j] <= hi[j] + 1 {
                break;
            }
            p[j] = lo[j] - 1;
            j += 1;
        }
    }
}

fn plus(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn minus(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &MonomialModule, b: &MonomialModule) -> MonomialModule {
    let (ga, gb) = (gens(a), gens(b));
    let all: Vec<Point> = ga.iter().chain(&gb).cloned().collect();
    rebuild(&lo(&all), &hi(&all), |p| member(&ga, p) || member(&gb, p))
}

pub fn mul(a: &MonomialModule, b: &MonomialModule) -> MonomialModule {
    let (ga, gb) = (gens(a), gens(b));
    rebuild(&plus(&lo(&ga), &lo(&gb)), &plus(&hi(&ga), &hi(&gb)), |p| {
        ga.iter().any(|x| gb.iter().any(|y| le(&plus(x, y), p)))
    })
}

pub fn intersect(a: &MonomialModule, b: &MonomialModule) -> MonomialModule {
    let (ga, gb) = (gens(a), gens(b));
    let all: Vec<Point> = ga.iter().chain(&gb).cloned().collect();
    rebuild(&lo(&all), &hi(&all), |p| member(&ga, p) && member(&gb, p))
}

/// `(A : B) = {p : p + b ∈ A for every generator b of B}`.
pub fn colon(a: &MonomialModule, b: &MonomialModule) -> MonomialModule {
    let (ga, gb) = (gens(a), gens(b));
    rebuild(
        &minus(&lo(&ga), &hi(&gb)),
        &minus(&hi(&ga), &lo(&gb)),
        |p| gb.iter().all(|y| member(&ga, &plus(p, y))),
    )
}

pub fn inverse(a: &MonomialModule) -> MonomialModule {
    colon(&MonomialModule::unit(a.nvars()), a)
}

pub fn v_close(a: &MonomialModule) -> MonomialModule {
    inverse(&inverse(a))
}

pub fn contains(a: &MonomialModule, p: &[i64]) -> bool {
    member(&gens(a), p)
}

/// Minimal generators of `X·B` from generator lists.
pub fn power_step(x: &[Point], b: &[Point]) -> Vec<Point> {
    let mut next: Vec<Point> = x
        .iter()
        .flat_map(|u| b.iter().map(move |v| plus(u, v)))
        .collect();
    next.sort();
    next.dedup();
    let all = next.clone();
    next.retain(|u| !dominated(&all, u));
    next
}

fn dominated(set: &[Point], x: &[i64]) -> bool {
    set.iter().any(|y| y.as_slice() != x && le(y, x))
}

/// `A_S = ∪_n (A : P^n)` with `P` the product of the generators of `S`,
/// stopping at the first `n` where the colon repeats. `None` when no repeat
/// happens within `bound` steps.
///
/// Only for GV sets: then `A_S ⊆ x^meet(A) D`, and lowering a coordinate
/// above `join(A)` to `join(A)` keeps a point in every `(A : P^n)`, so
/// minimal generators stay in `[meet(A), join(A)]`.
pub fn s_transform(
    a: &MonomialModule,
    s_gens: &[MonomialModule],
    bound: u32,
) -> Option<MonomialModule> {
    let nvars = a.nvars();
    let ga = gens(a);
    let mut p = vec![vec![0; nvars]];
    for g in s_gens {
        let gg = gens(g);
        p = p
            .iter()
            .flat_map(|x| gg.iter().map(move |y| plus(x, y)))
            .collect();
    }
    let mut prev = a.clone();
    let mut pn = vec![vec![0; nvars]];
    for _ in 1..=bound {
        pn = power_step(&pn, &p);
        let next = rebuild(&lo(&ga), &hi(&ga), |x| {
            pn.iter().all(|q| member(&ga, &plus(x, q)))
        });
        if next == prev {
            return Some(next);
        }
        prev = next;
    }
    None
}

/// `∩_σ A·D_{P_σ}`: a point is a member when, for each `σ`, some generator
/// is below it on the coordinates in `σ`.
pub fn loc_star(a: &MonomialModule, family: &PrimeFamily) -> MonomialModule {
    let ga = gens(a);
    rebuild(&lo(&ga), &hi(&ga), |p| {
        family
            .sigmas()
            .iter()
            .all(|s| ga.iter().any(|g| s.iter().all(|&j| g[j] <= p[j])))
    })
}
