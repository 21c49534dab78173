//! Star-operations on monomial modules: `d`, `v`, `t`, S-transforms and
//! localization stars, plus the multiplicative-set machinery behind them.

use std::fmt;

use crate::error::{Error, Result};
use crate::localization::{loc_star, PrimeFamily};
use crate::monomial::{ExponentVector, MonomialModule};

/// Default bound on the length of the chain `[A : P^n]`.
pub const DEFAULT_MAX_ITER: usize = 64;

/// A multiplicative set of integral ideals, presented by generators.
///
/// The set is every finite product of generators. Its closure is never
/// materialized: since all generators are integral, a product of `n`
/// generators contains `P^n`, where `P` is the product of all generators,
/// and `P^n` itself lies in the set. Every question about `S` or its
/// saturation therefore reduces to powers of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeSet {
    gens: Vec<MonomialModule>,
    product: MonomialModule,
    max_iter: usize,
}

impl MultiplicativeSet {
    pub fn new(gens: Vec<MonomialModule>) -> Result<Self> {
        let first = gens.first().ok_or(Error::ZeroIdeal)?;
        let nvars = first.nvars();
        let mut product = MonomialModule::unit(nvars);
        for g in &gens {
            if !g.is_integral() {
                return Err(Error::NotIntegral(g.to_string()));
            }
            product = product.mul(g)?;
        }
        Ok(MultiplicativeSet {
            gens,
            product,
            max_iter: DEFAULT_MAX_ITER,
        })
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter.max(1);
        self
    }

    pub fn gens(&self) -> &[MonomialModule] {
        &self.gens
    }

    /// `P`, the product of all generators.
    pub fn product(&self) -> &MonomialModule {
        &self.product
    }

    pub fn nvars(&self) -> usize {
        self.product.nvars()
    }

    pub fn max_iter(&self) -> usize {
        self.max_iter
    }

    /// True when every generator is a GV-ideal. Products of GV-ideals are
    /// GV, so this decides `S ⊆ S_v`.
    pub fn is_gv_system(&self) -> bool {
        self.gens.iter().all(|g| g.meet().is_zero())
    }

    /// The set with one more generator; used to probe saturation invariance.
    pub fn with_generator(&self, extra: MonomialModule) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.push(extra);
        Ok(MultiplicativeSet::new(gens)?.with_max_iter(self.max_iter))
    }
}

impl fmt::Display for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("closure{")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// `A_v = (A^{-1})^{-1}`.
pub fn v_close(a: &MonomialModule) -> MonomialModule {
    a.inverse().inverse()
}

/// Union of `B_v` over the subideals generated by nonempty subsets of the
/// generators of `a`. Exponential in the generator count.
pub fn t_close_by_subsets(a: &MonomialModule) -> MonomialModule {
    let gens = a.gens();
    let mut acc: Option<MonomialModule> = None;
    for mask in 1u64..(1u64 << gens.len()) {
        let sub = MonomialModule::new(
            a.nvars(),
            gens.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, g)| g.clone()),
        )
        .expect("nonempty subset of valid generators");
        let closed = v_close(&sub);
        acc = Some(match acc {
            None => closed,
            Some(u) => u.add(&closed).expect("same ambient"),
        });
    }
    acc.expect("modules are nonempty")
}

/// `A_t`. Every module here is finitely generated, so `A_t = A_v`.
pub fn t_close(a: &MonomialModule) -> MonomialModule {
    let closed = v_close(a);
    #[cfg(debug_assertions)]
    if a.gens().len() <= 10 {
        debug_assert_eq!(t_close_by_subsets(a), closed, "t and v disagree on {a}");
    }
    closed
}

/// Result of running the chain `C_n = [A : P^n]` to its fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilized {
    pub module: MonomialModule,
    /// First `n` with `C_{n+1} = C_n`.
    pub index: usize,
}

/// `A_S = { x ∈ K : xI ⊆ A for some I ∈ S }`, with the stabilization index.
///
/// `A_S` is the union of the ascending chain `[A : P^n]`. Once two
/// consecutive terms agree the chain is constant, since each term is the
/// previous one divided by `P`.
pub fn s_transform_chain(a: &MonomialModule, s: &MultiplicativeSet) -> Result<Stabilized> {
    if a.nvars() != s.nvars() {
        return Err(Error::ArityMismatch {
            expected: s.nvars(),
            found: a.nvars(),
        });
    }
    let p = s.product();
    let mut current = a.clone();
    let mut escaped: Option<ExponentVector> = None;
    for n in 0..s.max_iter() {
        let next = current.colon(p)?;
        if next == current {
            return Ok(Stabilized {
                module: current,
                index: n,
            });
        }
        if escaped.is_none() {
            escaped = next
                .gens()
                .iter()
                .find(|g| !current.contains(g).unwrap_or(false))
                .cloned();
        }
        current = next;
    }
    Err(Error::NonStabilizing {
        max_iter: s.max_iter(),
        escaped: escaped.expect("a non-stabilizing chain grows at its first step"),
    })
}

pub fn s_transform(a: &MonomialModule, s: &MultiplicativeSet) -> Result<MonomialModule> {
    s_transform_chain(a, s).map(|st| st.module)
}

/// True when `I^{-1} = D`.
pub fn is_gv(i: &MonomialModule) -> Result<bool> {
    if !i.is_integral() {
        return Err(Error::NotIntegral(i.to_string()));
    }
    Ok(i.inverse().is_unit())
}

/// Whether `I` lies in the saturation of `S`, i.e. contains some member
/// of `S`, equivalently `P^n ⊆ I` for some `n`.
///
/// Decided on the chain `[I : P^n]`: `1 ∈ [I : P^n]` exactly when
/// `P^n ⊆ I`. The answer is negative once the chain stabilizes without
/// reaching `1`; if it neither reaches `1` nor stabilizes within the
/// iteration guard, the question is left open.
pub fn in_saturation(i: &MonomialModule, s: &MultiplicativeSet) -> Result<bool> {
    if !i.is_integral() {
        return Err(Error::NotIntegral(i.to_string()));
    }
    if i.nvars() != s.nvars() {
        return Err(Error::ArityMismatch {
            expected: s.nvars(),
            found: i.nvars(),
        });
    }
    let p = s.product();
    let mut current = i.clone();
    let mut escaped = None;
    for _ in 0..s.max_iter() {
        if current.contains_one() {
            return Ok(true);
        }
        let next = current.colon(p)?;
        if next == current {
            return Ok(false);
        }
        if escaped.is_none() {
            escaped = next
                .gens()
                .iter()
                .find(|g| !current.contains(g).unwrap_or(false))
                .cloned();
        }
        current = next;
    }
    if current.contains_one() {
        return Ok(true);
    }
    Err(Error::NonStabilizing {
        max_iter: s.max_iter(),
        escaped: escaped.expect("chain grew"),
    })
}

/// Smallest `n` in `1..=bound` with `P^n ⊆ I`, computed by explicit powers.
pub fn saturation_power_witness(
    i: &MonomialModule,
    s: &MultiplicativeSet,
    bound: u32,
) -> Result<Option<u32>> {
    let p = s.product();
    let mut power = p.clone();
    for n in 1..=bound {
        if power.is_subset_of(i)? {
            return Ok(Some(n));
        }
        power = power.mul(p)?;
    }
    Ok(None)
}

/// A closure map `A ↦ A^⋆` on nonzero fractional monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarOperator {
    /// The identity.
    D,
    V,
    T,
    Transform(MultiplicativeSet),
    Localization(PrimeFamily),
}

impl StarOperator {
    pub fn apply(&self, a: &MonomialModule) -> Result<MonomialModule> {
        match self {
            StarOperator::D => Ok(a.clone()),
            StarOperator::V => Ok(v_close(a)),
            StarOperator::T => Ok(t_close(a)),
            StarOperator::Transform(s) => s_transform(a, s),
            StarOperator::Localization(f) => loc_star(a, f),
        }
    }

    /// Whether `A^⋆ = D`, i.e. `A ∈ S_⋆` for integral `A`.
    pub fn is_trivializing(&self, a: &MonomialModule) -> Result<bool> {
        Ok(self.apply(a)?.is_unit())
    }

    pub fn name(&self) -> String {
        match self {
            StarOperator::D => "d".into(),
            StarOperator::V => "v".into(),
            StarOperator::T => "t".into(),
            StarOperator::Transform(s) => format!("stransform({s})"),
            StarOperator::Localization(f) => format!("locstar({f})"),
        }
    }
}

impl fmt::Display for StarOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Outcome of [`transform_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformWitness {
    /// `J = (A : (x))`.
    pub ideal: MonomialModule,
    /// `J^⋆ = D` and `xJ ⊆ A`, placing `x` in `A_{S_⋆}`.
    pub verdict: bool,
}

/// For `x ∈ A^⋆`, produces `J = (A : (x))` and checks that it witnesses
/// `x ∈ A_{S_⋆}`.
pub fn transform_witness(
    star: &StarOperator,
    a: &MonomialModule,
    x: &ExponentVector,
) -> Result<TransformWitness> {
    let closed = star.apply(a)?;
    if !closed.contains(x)? {
        return Err(Error::PreconditionFailed(format!(
            "{x} is not in {star} applied to {a}"
        )));
    }
    let principal = MonomialModule::principal(x.clone());
    let j = a.colon_integral(&principal)?;
    let verdict = star.apply(&j)?.is_unit() && principal.mul(&j)?.is_subset_of(a)?;
    Ok(TransformWitness { ideal: j, verdict })
}
