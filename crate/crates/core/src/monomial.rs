//! Fractional monomial ideals of `D = K[x1, ..., xn]`.
//!
//! A Laurent monomial `x^a` is stored as its exponent vector `a ∈ Z^n`. A
//! monomial module is the up-set (under the componentwise order, which is
//! divisibility) generated by a finite antichain of exponent vectors. Every
//! such module is finitely generated and fractional, and it is integral
//! exactly when all generators are nonnegative. The coefficient field never
//! enters: membership of a polynomial reduces to membership of its terms.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        ExponentVector(coords)
    }

    /// The monomial `1`.
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    /// The variable `x_{index+1}` (zero-based index).
    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut coords = vec![0; nvars];
        coords[index] = 1;
        ExponentVector(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &ExponentVector) -> ExponentVector {
        self.zip_with(other, i64::max)
    }

    pub fn meet(&self, other: &ExponentVector) -> ExponentVector {
        self.zip_with(other, i64::min)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn scaled(&self, k: i64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| c * k).collect())
    }

    fn zip_with(&self, other: &ExponentVector, f: impl Fn(i64, i64) -> i64) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(coords: Vec<i64>) -> Self {
        ExponentVector(coords)
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(coords: [i64; N]) -> Self {
        ExponentVector(coords.to_vec())
    }
}

/// Renders as `x1^2*x2`, `x1^-1`, or `1`.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// The ambient domain `K[x1..xn]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    nvars: usize,
}

impl RingDescriptor {
    pub fn new(nvars: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::PreconditionFailed(
                "a ring needs at least one variable".into(),
            ));
        }
        Ok(RingDescriptor { nvars })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `D` itself.
    pub fn unit_ideal(&self) -> MonomialModule {
        MonomialModule::unit(self.nvars)
    }
}

/// A nonzero finitely generated fractional monomial ideal.
///
/// Generators are kept as a lexicographically sorted minimal antichain, so
/// structural equality coincides with equality of modules.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialModule {
    nvars: usize,
    gens: Vec<ExponentVector>,
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

/// Sort, dedup and drop every vector dominated by another.
///
/// Lex order extends the componentwise order, so a vector can only be
/// dominated by something that precedes it.
fn minimalize(mut vs: Vec<ExponentVector>) -> Vec<ExponentVector> {
    vs.sort_unstable();
    vs.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(vs.len());
    for v in vs {
        if !kept.iter().any(|k| k.divides(&v)) {
            kept.push(v);
        }
    }
    kept
}

impl MonomialModule {
    /// Builds a module from any generating set, normalizing it.
    pub fn new<I>(nvars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<ExponentVector>,
    {
        RingDescriptor::new(nvars)?;
        let gens: Vec<ExponentVector> = gens.into_iter().map(Into::into).collect();
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            check_arity(nvars, g.len())?;
        }
        Ok(MonomialModule {
            nvars,
            gens: minimalize(gens),
        })
    }

    /// Internal constructor for generator sets already known to be valid.
    fn from_raw(nvars: usize, gens: Vec<ExponentVector>) -> Self {
        debug_assert!(!gens.is_empty());
        MonomialModule {
            nvars,
            gens: minimalize(gens),
        }
    }

    /// The unit ideal `D = <1>`.
    pub fn unit(nvars: usize) -> Self {
        MonomialModule {
            nvars,
            gens: vec![ExponentVector::zero(nvars)],
        }
    }

    /// The principal module `(x^a)`.
    pub fn principal(a: ExponentVector) -> Self {
        MonomialModule {
            nvars: a.len(),
            gens: vec![a],
        }
    }

    /// The prime `P_σ = (x_j : j ∈ σ)` for zero-based indices.
    pub fn variable_ideal(nvars: usize, indices: &[usize]) -> Result<Self> {
        if let Some(&j) = indices.iter().find(|&&j| j >= nvars) {
            return Err(Error::BadSigma(format!(
                "variable index {} out of range for {} variables",
                j + 1,
                nvars
            )));
        }
        MonomialModule::new(
            nvars,
            indices.iter().map(|&j| ExponentVector::unit(nvars, j)),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.gens.iter().all(ExponentVector::is_nonnegative)
    }

    /// Componentwise minimum over all generators.
    pub fn meet(&self) -> ExponentVector {
        let mut it = self.gens.iter();
        let first = it.next().expect("modules are nonempty").clone();
        it.fold(first, |acc, g| acc.meet(g))
    }

    /// Componentwise maximum over all generators.
    pub fn join(&self) -> ExponentVector {
        let mut it = self.gens.iter();
        let first = it.next().expect("modules are nonempty").clone();
        it.fold(first, |acc, g| acc.join(g))
    }

    fn same_ambient(&self, other: &MonomialModule) -> Result<()> {
        check_arity(self.nvars, other.nvars)
    }

    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        check_arity(self.nvars, m.len())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(|g| g.coords().iter().all(|&c| c <= 0))
    }

    pub fn add(&self, other: &MonomialModule) -> Result<MonomialModule> {
        self.same_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(self.nvars, gens))
    }

    pub fn mul(&self, other: &MonomialModule) -> Result<MonomialModule> {
        self.same_ambient(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.add(h)))
            .collect();
        Ok(Self::from_raw(self.nvars, gens))
    }

    /// `self^n`; `n = 0` gives `D`.
    pub fn pow(&self, n: u32) -> MonomialModule {
        let mut acc = MonomialModule::unit(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// The principal multiple `x^a · self`.
    pub fn scale(&self, a: &ExponentVector) -> Result<MonomialModule> {
        check_arity(self.nvars, a.len())?;
        Ok(MonomialModule {
            nvars: self.nvars,
            gens: self.gens.iter().map(|g| g.add(a)).collect(),
        })
    }

    pub fn intersect(&self, other: &MonomialModule) -> Result<MonomialModule> {
        self.same_ambient(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.join(h)))
            .collect();
        Ok(Self::from_raw(self.nvars, gens))
    }

    /// `[self : other] = { x ∈ K : x·other ⊆ self }`.
    pub fn colon(&self, other: &MonomialModule) -> Result<MonomialModule> {
        self.same_ambient(other)?;
        let mut shifts = other
            .gens
            .iter()
            .map(|h| self.scale(&h.neg()).expect("arity checked"));
        let first = shifts.next().expect("modules are nonempty");
        Ok(shifts.fold(first, |acc, s| acc.intersect(&s).expect("arity checked")))
    }

    /// `(self : other) = [self : other] ∩ D`.
    pub fn colon_integral(&self, other: &MonomialModule) -> Result<MonomialModule> {
        self.colon(other)?
            .intersect(&MonomialModule::unit(self.nvars))
    }

    /// `A^{-1} = [D : A]`, always the principal module at `-meet(A)`.
    pub fn inverse(&self) -> MonomialModule {
        MonomialModule::principal(self.meet().neg())
    }

    pub fn is_subset_of(&self, other: &MonomialModule) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    /// Semantic equality, with an arity check.
    pub fn equals(&self, other: &MonomialModule) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.gens == other.gens)
    }
}

impl fmt::Display for MonomialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl PartialOrd for MonomialModule {
    /// Containment order.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.nvars != other.nvars {
            return None;
        }
        let le = self.is_subset_of(other).ok()?;
        let ge = other.is_subset_of(self).ok()?;
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}
