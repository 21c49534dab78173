//! Oracle model of `D = K[x1, x2, ...]` in countably many variables.
//!
//! Only two families of ideals are supported, each with a closed-form
//! membership test on monomials:
//!
//! * `M^n`, where `M = (x1, x2, ...)`: a monomial lies in `M^n` iff its
//!   degree is at least `n`;
//! * `A = (x_n M^n : n ≥ 1)`: a monomial lies in `A` iff some `x_i` divides
//!   it and its degree is at least `i + 1`, i.e. `minidx(m) ≤ deg(m) - 1`.
//!
//! With `S = {M^n}` these exhibit an S-transform that is not idempotent:
//! `A_S = M` but `M_S = D`. Every member of `S` is a GV-ideal, so the
//! failure comes from `M^n` not being finitely generated. The closed forms
//! are cross-checked against finite truncations `K[x1..xk]`, where the
//! ideals become ordinary monomial ideals.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialModule};
use crate::report::{PropertyReport, ReportBuilder};
use crate::sample::rng;
use crate::star::{in_saturation, is_gv, s_transform, MultiplicativeSet};

/// Largest variable index a query may use.
pub const MAX_INDEX: u32 = 1 << 16;

/// A monomial of `K[x1, x2, ...]`: variable index to positive exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct InfMonomial(BTreeMap<u32, u32>);

impl InfMonomial {
    pub fn one() -> Self {
        InfMonomial(BTreeMap::new())
    }

    pub fn var(index: u32) -> Result<Self> {
        Self::new([(index, 1)])
    }

    /// Builds a monomial from `(index, exponent)` pairs; zero exponents are
    /// dropped and repeated indices multiply.
    pub fn new(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, e) in pairs {
            if i == 0 || i > MAX_INDEX {
                return Err(Error::PreconditionFailed(format!(
                    "variable index {i} outside 1..={MAX_INDEX}"
                )));
            }
            if e > 0 {
                *map.entry(i).or_insert(0) += e;
            }
        }
        Ok(InfMonomial(map))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.values().map(|&e| e as u64).sum()
    }

    /// Smallest variable index present; `None` for `1`.
    pub fn min_index(&self) -> Option<u32> {
        self.0.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    pub fn mul(&self, other: &InfMonomial) -> InfMonomial {
        let mut map = self.0.clone();
        for (&i, &e) in &other.0 {
            *map.entry(i).or_insert(0) += e;
        }
        InfMonomial(map)
    }

    pub fn divides(&self, other: &InfMonomial) -> bool {
        self.0
            .iter()
            .all(|(i, e)| other.0.get(i).is_some_and(|f| f >= e))
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&i, &e)| (i, e))
    }

    /// Exponent vector in `K[x1..xk]`, if the support fits.
    pub fn truncate(&self, k: usize) -> Option<ExponentVector> {
        let mut v = vec![0i64; k];
        for (i, e) in self.exponents() {
            let slot = v.get_mut(i as usize - 1)?;
            *slot = e as i64;
        }
        Some(ExponentVector::new(v))
    }
}

impl fmt::Display for InfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (i, e)) in self.exponents().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Ideals of the infinite-variable ring with decidable membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OracleIdeal {
    /// `M^n` for `n ≥ 1`.
    MPower(u32),
    /// `A = (x_n M^n : n ≥ 1)`.
    ExampleA,
}

impl fmt::Display for OracleIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleIdeal::MPower(1) => f.write_str("M"),
            OracleIdeal::MPower(n) => write!(f, "M^{n}"),
            OracleIdeal::ExampleA => f.write_str("A"),
        }
    }
}

pub fn inf_member(m: &InfMonomial, ideal: OracleIdeal) -> bool {
    match ideal {
        OracleIdeal::MPower(n) => m.degree() >= n as u64,
        OracleIdeal::ExampleA => match m.min_index() {
            None => false,
            Some(i) => (i as u64) < m.degree(),
        },
    }
}

/// An `n` with `x·M^n ⊆ target`, or `None` if there is none.
///
/// For `A`: if `x ≠ 1`, any product `x·u` with `deg u = n` has
/// `minidx ≤ minidx(x)` and degree `deg(x) + n`, so
/// `n = max(1, minidx(x) - deg(x) + 1)` works. For `x = 1` no `n` works,
/// because `x_{n+1}^n ∈ M^n` is not in `A`. For `M^k`, `n = k` works.
pub fn s_member_witness(x: &InfMonomial, target: OracleIdeal) -> Option<u32> {
    match target {
        OracleIdeal::MPower(k) => Some(k),
        OracleIdeal::ExampleA => {
            let i = x.min_index()? as i64;
            Some((i - x.degree() as i64 + 1).max(1) as u32)
        }
    }
}

/// `x ∈ target_S` with `S = {M^n}`.
pub fn inf_s_member(x: &InfMonomial, target: OracleIdeal) -> bool {
    s_member_witness(x, target).is_some()
}

/// Outcome of a transform query on a Laurent monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentQuery {
    pub member: bool,
    pub note: Option<String>,
}

/// `x ∈ target_S` for `x` given with possibly negative exponents. Both
/// `A` and every `M^n` are integral and each `M^n` is GV, so `D_S = D` and
/// `target_S ⊆ D`: anything with a negative exponent is outside.
pub fn inf_s_member_laurent(exps: &[(u32, i64)], target: OracleIdeal) -> Result<LaurentQuery> {
    if let Some(&(i, e)) = exps.iter().find(|&&(_, e)| e < 0) {
        return Ok(LaurentQuery {
            member: false,
            note: Some(format!(
                "x{i}^{e} has a negative exponent; every M^n is a GV-ideal, so D_S = D and \
                 {target}_S is contained in D"
            )),
        });
    }
    let x = InfMonomial::new(exps.iter().map(|&(i, e)| (i, e as u32)))?;
    Ok(LaurentQuery {
        member: inf_s_member(&x, target),
        note: None,
    })
}

/// All exponent vectors of total degree `d` in `k` variables.
pub fn degree_vectors(k: usize, d: i64) -> Vec<ExponentVector> {
    fn rec(k: usize, d: i64, prefix: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == k {
            prefix.push(d);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(k, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, d, &mut Vec::with_capacity(k), &mut out);
    out
}

/// The ideal restricted to `K[x1..xk]`, as a finitely generated monomial
/// ideal: `M_k^n`, or `A_k` generated by `x_i M_k^i` for `i ≤ k`.
pub fn truncated(ideal: OracleIdeal, k: usize) -> MonomialModule {
    let gens = match ideal {
        OracleIdeal::MPower(n) => degree_vectors(k, n as i64),
        OracleIdeal::ExampleA => (1..=k)
            .flat_map(|i| {
                let xi = ExponentVector::unit(k, i - 1);
                degree_vectors(k, i as i64)
                    .into_iter()
                    .map(move |u| u.add(&xi))
            })
            .collect(),
    };
    MonomialModule::new(k, gens).expect("nonempty generator set")
}

fn random_monomial(rng: &mut impl Rng, max_index: u32, degree: u32) -> InfMonomial {
    InfMonomial::new((0..degree).map(|_| (rng.gen_range(1..=max_index), 1)))
        .expect("indices in range")
}

/// Compares the closed-form membership tests with brute-force membership in
/// the truncated ideals on sampled products `m·u`. Point membership is
/// stable under truncation; the transform `A_S` is not (in any finite
/// truncation `1 ∈ A_S`), which is recorded as an expected divergence.
pub fn truncation_crosscheck(
    max_vars: usize,
    max_deg: u32,
    n_samples: usize,
    seed: u64,
) -> PropertyReport {
    let max_vars = max_vars.clamp(1, 8);
    let max_deg = max_deg.clamp(1, 8);
    let mut rng = rng(seed);
    let mut b = ReportBuilder::new("truncation-crosscheck", seed);

    let mut cache: BTreeMap<(usize, OracleIdeal), MonomialModule> = BTreeMap::new();
    for _ in 0..n_samples {
        b.sample();
        let k = rng.gen_range(1..=max_vars);
        let d = rng.gen_range(0..=max_deg);
        let m = random_monomial(&mut rng, k as u32, d);
        let n = rng.gen_range(0..=max_deg);
        let u = random_monomial(&mut rng, k as u32, n);
        let point = m.mul(&u);
        let target = if rng.gen_bool(0.6) {
            OracleIdeal::ExampleA
        } else {
            OracleIdeal::MPower(rng.gen_range(1..=max_deg))
        };
        let trunc = cache
            .entry((k, target))
            .or_insert_with(|| truncated(target, k));
        let brute = trunc
            .contains(&point.truncate(k).expect("support within truncation"))
            .expect("same arity");
        let oracle = inf_member(&point, target);
        if brute != oracle {
            b.violation(
                "point-membership",
                "oracle membership equals truncated brute force",
                [
                    ("m*u", point.to_string()),
                    ("ideal", target.to_string()),
                    ("k", k.to_string()),
                ],
                Some(format!("oracle {oracle}, truncation {brute}")),
            );
        }
    }

    // Expected divergence: in K[x1..x3], M^4 ⊆ A, so 1 ∈ (A_3)_S.
    let a3 = truncated(OracleIdeal::ExampleA, 3);
    let m3 = truncated(OracleIdeal::MPower(1), 3);
    let contained = m3.pow(4).is_subset_of(&a3).expect("same arity");
    let s3 = MultiplicativeSet::new(vec![m3]).expect("integral");
    let unit_in_transform = s_transform(&a3, &s3).map(|t| t.is_unit()).unwrap_or(false);
    b.note(format!(
        "expected divergence (not an error): in K[x1..x3], M^4 ⊆ A is {contained} and (A)_S = D is \
         {unit_in_transform}; in the infinite ring 1 ∉ A_S, so A_S is not truncation-stable"
    ));
    b.finish()
}

/// Reproduces the non-idempotent S-transform: `A_S = M ⊊ D = (A_S)_S`.
///
/// Checks, on sampled monomials with indices up to 12 and degree up to 6:
/// every nonunit monomial lies in `A_S` (with its witness `n` re-verified by
/// membership queries), `1 ∉ A_S` (refuted for each `n` by `x_{n+1}^n`),
/// `1 ∈ M_S`, that every `M^n` is GV on truncations with at least two
/// variables, and that no finitely generated `B ⊆ A` has `1 ∈ B_S`.
pub fn verify_counterexample(seed: u64) -> PropertyReport {
    const MAX_IDX: u32 = 12;
    const MAX_DEG: u32 = 6;
    const QUERIES: usize = 500;
    let mut rng = rng(seed);
    let mut b = ReportBuilder::new("counterexample", seed);
    let a = OracleIdeal::ExampleA;
    let m = OracleIdeal::MPower(1);

    // (i) every nonunit monomial is in A_S, hence M ⊆ A_S.
    let mut nonunits_ok = true;
    for _ in 0..QUERIES {
        b.sample();
        let d = rng.gen_range(1..=MAX_DEG);
        let x = random_monomial(&mut rng, MAX_IDX, d);
        let witness = s_member_witness(&x, a);
        let confirmed = witness.is_some_and(|n| {
            let far = InfMonomial::new([(MAX_INDEX, n)]).expect("in range");
            let probes = (0..8)
                .map(|_| random_monomial(&mut rng, 4 * MAX_IDX, n))
                .chain([far]);
            probes
                .collect::<Vec<_>>()
                .iter()
                .all(|u| inf_member(&x.mul(u), a))
        });
        if !(inf_s_member(&x, a) && confirmed) {
            nonunits_ok = false;
            b.violation(
                "nonunits-in-transform",
                "x ∈ A_S for x ≠ 1",
                [("x", x.to_string())],
                None,
            );
        }
    }
    let x1 = InfMonomial::var(1).expect("in range");
    if !inf_s_member(&x1, a) {
        nonunits_ok = false;
        b.violation(
            "nonunits-in-transform",
            "x1 ∈ A_S",
            [("x", "x1".into())],
            None,
        );
    }

    // 1 ∉ A_S: for each n, x_{n+1}^n ∈ M^n \ A.
    let mut unit_excluded = !inf_s_member(&InfMonomial::one(), a);
    for n in 1..=4 * MAX_IDX {
        let probe = InfMonomial::new([(n + 1, n)]).expect("in range");
        if !inf_member(&probe, OracleIdeal::MPower(n)) || inf_member(&probe, a) {
            unit_excluded = false;
            b.violation(
                "unit-excluded",
                "M^n ⊄ A",
                [("n", n.to_string())],
                Some(probe.to_string()),
            );
        }
    }
    if !unit_excluded && b.violation_count() == 0 {
        b.violation("unit-excluded", "1 ∉ A_S", [], Some("1".into()));
    }
    let transform_is_m = nonunits_ok && unit_excluded;
    b.verdict("A_S = M", transform_is_m, None);
    b.note("M ⊆ A_S ⊊ D and M is maximal, so A_S = M");

    // (ii) 1 ∈ M_S since 1·M ⊆ M; hence (A_S)_S = M_S = D.
    let one_in_ms = inf_s_member(&InfMonomial::one(), m)
        && (0..50).all(|_| inf_member(&random_monomial(&mut rng, 4 * MAX_IDX, 1), m));
    if !one_in_ms {
        b.violation("unit-in-m-transform", "1 ∈ M_S", [], None);
    }
    b.verdict("(A_S)_S = D", one_in_ms, None);

    // (iii) idempotence fails.
    let idempotent = !(transform_is_m && one_in_ms);
    b.verdict(
        "A_S = (A_S)_S",
        idempotent,
        Some("1 ∈ (A_S)_S \\ A_S".into()),
    );
    if idempotent {
        b.violation("idempotence-fails", "A_S ≠ (A_S)_S", [], None);
    }
    b.note(
        "A_S = M ⊊ D = (A_S)_S; star axioms violated at idempotence. Every M^n is a \
         GV-ideal, but the members M^n of S are not finitely generated, so the finite-type \
         GV criterion does not apply",
    );

    // (iv) M^n is GV on truncations with at least two variables.
    let mut gv_ok = true;
    for k in 2..=6usize {
        for n in 1..=MAX_DEG {
            if !is_gv(&truncated(OracleIdeal::MPower(n), k)).unwrap_or(false) {
                gv_ok = false;
                b.violation(
                    "gv",
                    "(M^n)_v = D",
                    [("k", k.to_string()), ("n", n.to_string())],
                    None,
                );
            }
        }
    }
    b.verdict("(M^n)_v = D", gv_ok, None);

    // (v) finite character fails: finitely generated B ⊆ A never has 1 ∈ B_S.
    let mut fc_ok = true;
    for _ in 0..40 {
        let count = rng.gen_range(1..=5);
        let gens: Vec<InfMonomial> = (0..count)
            .map(|_| {
                let i = rng.gen_range(1..=4u32);
                InfMonomial::var(i)
                    .expect("in range")
                    .mul(&random_monomial(&mut rng, 8, i))
            })
            .collect();
        let support = gens
            .iter()
            .filter_map(InfMonomial::max_index)
            .max()
            .unwrap_or(1);
        // x_j^n with j beyond the support of B lies in M^n but not in B.
        let fresh = support + 1;
        let escapes = (1..=MAX_IDX).all(|n| {
            let probe = InfMonomial::new([(fresh, n)]).expect("in range");
            !gens.iter().any(|g| g.divides(&probe))
        });
        // Same question in K[x1..x_fresh], where S becomes {M_k^n}.
        let k = fresh as usize;
        let bmod = MonomialModule::new(k, gens.iter().map(|g| g.truncate(k).expect("fits")))
            .expect("nonempty");
        let sk = MultiplicativeSet::new(vec![truncated(m, k)]).expect("integral");
        let finite_answer = in_saturation(&bmod, &sk);
        let inputs = [(
            "B",
            gens.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
        )];
        if !escapes || finite_answer != Ok(false) {
            fc_ok = false;
            b.violation(
                "finite-character-fails",
                "1 ∉ B_S for finitely generated B ⊆ A",
                inputs,
                None,
            );
        }
    }
    b.verdict("1 ∉ B_S for finitely generated B ⊆ A", fc_ok, None);
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(pairs: &[(u32, u32)]) -> InfMonomial {
        InfMonomial::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn oracle_membership() {
        assert!(inf_member(&mono(&[(3, 1)]), OracleIdeal::MPower(1)));
        assert!(!inf_member(&mono(&[(2, 1), (5, 1)]), OracleIdeal::ExampleA));
        assert!(inf_member(&mono(&[(1, 1), (7, 1)]), OracleIdeal::ExampleA));
        assert!(!inf_member(&InfMonomial::one(), OracleIdeal::ExampleA));
    }

    #[test]
    fn transform_membership() {
        assert!(inf_s_member(&mono(&[(4, 1)]), OracleIdeal::ExampleA));
        assert!(!inf_s_member(&InfMonomial::one(), OracleIdeal::ExampleA));
        assert!(inf_s_member(&InfMonomial::one(), OracleIdeal::MPower(1)));
        assert_eq!(
            s_member_witness(&mono(&[(4, 1)]), OracleIdeal::ExampleA),
            Some(4)
        );
        assert_eq!(
            s_member_witness(&mono(&[(1, 3)]), OracleIdeal::ExampleA),
            Some(1)
        );
    }

    #[test]
    fn laurent_queries_are_outside() {
        let q = inf_s_member_laurent(&[(1, -1)], OracleIdeal::MPower(1)).unwrap();
        assert!(!q.member && q.note.is_some());
        let q = inf_s_member_laurent(&[(2, 1)], OracleIdeal::ExampleA).unwrap();
        assert!(q.member && q.note.is_none());
    }

    #[test]
    fn index_bounds() {
        assert!(InfMonomial::var(0).is_err());
        assert!(InfMonomial::var(MAX_INDEX + 1).is_err());
        assert!(InfMonomial::var(MAX_INDEX).is_ok());
    }

    #[test]
    fn truncation_examples() {
        let a4 = truncated(OracleIdeal::ExampleA, 4);
        assert!(a4.contains(&ExponentVector::from([1, 1, 0, 0])).unwrap());
        let a5 = truncated(OracleIdeal::ExampleA, 5);
        assert!(!a5.contains(&ExponentVector::from([0, 0, 1, 1, 0])).unwrap());
        let a3 = truncated(OracleIdeal::ExampleA, 3);
        let m3 = truncated(OracleIdeal::MPower(1), 3);
        assert!(m3.pow(4).is_subset_of(&a3).unwrap());
        assert_eq!(degree_vectors(3, 2).len(), 6);
    }

    #[test]
    fn display() {
        assert_eq!(mono(&[(7, 1), (1, 2)]).to_string(), "x1^2*x7");
        assert_eq!(InfMonomial::one().to_string(), "1");
    }
}
