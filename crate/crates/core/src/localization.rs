//! Localization stars `A ↦ ∩_σ A·D_{P_σ}` for families of monomial primes.
//!
//! This works in the monomial-graded model: the localization of the monoid
//! of monomials at `P_σ = (x_j : j ∈ σ)` inverts every variable outside
//! `σ`. In the full polynomial ring non-monomial units such as `1 + x` lie
//! in every `D_{P_σ}`, so the intersection over monomial primes is never
//! `D` there; in the graded model it is `D` exactly when the family covers
//! every variable. Localizations are flat, so no flatness test is needed.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialModule};

/// A finite family of variable subsets `σ`, each naming the prime `P_σ`.
/// Indices are zero-based internally and one-based when displayed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFamily {
    nvars: usize,
    sigmas: Vec<Vec<usize>>,
}

fn check_sigma(nvars: usize, sigma: &[usize]) -> Result<()> {
    if sigma.is_empty() {
        return Err(Error::BadSigma("empty variable subset".into()));
    }
    if let Some(&j) = sigma.iter().find(|&&j| j >= nvars) {
        return Err(Error::BadSigma(format!(
            "variable x{} out of range for {} variables",
            j + 1,
            nvars
        )));
    }
    Ok(())
}

impl PrimeFamily {
    pub fn new(nvars: usize, sigmas: Vec<Vec<usize>>) -> Result<Self> {
        if sigmas.is_empty() {
            return Err(Error::BadSigma("a family needs at least one prime".into()));
        }
        let mut clean = Vec::with_capacity(sigmas.len());
        for mut s in sigmas {
            check_sigma(nvars, &s)?;
            s.sort_unstable();
            s.dedup();
            clean.push(s);
        }
        Ok(PrimeFamily {
            nvars,
            sigmas: clean,
        })
    }

    /// The family of all single-variable primes `(x_j)`.
    pub fn singletons(nvars: usize) -> Self {
        PrimeFamily {
            nvars,
            sigmas: (0..nvars).map(|j| vec![j]).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn sigmas(&self) -> &[Vec<usize>] {
        &self.sigmas
    }

    /// Zero-based variables that no `σ` mentions.
    pub fn uncovered(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|j| !self.sigmas.iter().any(|s| s.contains(j)))
            .collect()
    }

    pub fn is_covering(&self) -> bool {
        self.uncovered().is_empty()
    }

    /// The family with one more prime.
    pub fn refined(&self, sigma: Vec<usize>) -> Result<Self> {
        let mut sigmas = self.sigmas.clone();
        sigmas.push(sigma);
        PrimeFamily::new(self.nvars, sigmas)
    }

    pub fn prime(&self, sigma: &[usize]) -> Result<MonomialModule> {
        MonomialModule::variable_ideal(self.nvars, sigma)
    }
}

impl fmt::Display for PrimeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.sigmas.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (k, j) in s.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "x{}", j + 1)?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

fn restricted_divides(g: &ExponentVector, m: &ExponentVector, sigma: &[usize]) -> bool {
    sigma.iter().all(|&j| g.coords()[j] <= m.coords()[j])
}

/// Membership of `x^m` in `A·D_{P_σ}`: some generator divides `m` once the
/// variables outside `σ` are inverted.
pub fn loc_member(m: &ExponentVector, a: &MonomialModule, sigma: &[usize]) -> Result<bool> {
    check_sigma(a.nvars(), sigma)?;
    if m.len() != a.nvars() {
        return Err(Error::ArityMismatch {
            expected: a.nvars(),
            found: m.len(),
        });
    }
    Ok(a.gens().iter().any(|g| restricted_divides(g, m, sigma)))
}

/// `A^⋆ = ∩_σ A·D_{P_σ}`.
///
/// Every minimal element of the intersection takes each coordinate from
/// some generator of `A`, so the search runs over the grid of generator
/// coordinates.
pub fn loc_star(a: &MonomialModule, family: &PrimeFamily) -> Result<MonomialModule> {
    if a.nvars() != family.nvars() {
        return Err(Error::ArityMismatch {
            expected: family.nvars(),
            found: a.nvars(),
        });
    }
    let missing = family.uncovered();
    if !missing.is_empty() {
        return Err(Error::NonCovering {
            missing: missing.into_iter().map(|j| j + 1).collect(),
        });
    }
    let n = a.nvars();
    let axes: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut vals: Vec<i64> = a.gens().iter().map(|g| g.coords()[j]).collect();
            vals.sort_unstable();
            vals.dedup();
            vals
        })
        .collect();

    let mut members = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let point = ExponentVector::new((0..n).map(|j| axes[j][idx[j]]).collect());
        if family
            .sigmas()
            .iter()
            .all(|s| a.gens().iter().any(|g| restricted_divides(g, &point, s)))
        {
            members.push(point);
        }
        // odometer
        let mut j = 0;
        loop {
            if j == n {
                return MonomialModule::new(n, members);
            }
            idx[j] += 1;
            if idx[j] < axes[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Outcome of comparing `(A:B)B` with `A ∩ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonProduct {
    pub product: MonomialModule,
    pub intersection: MonomialModule,
    pub contained: bool,
    pub principal: bool,
    pub equal: bool,
}

impl ColonProduct {
    /// Containment always; equality when `B` is principal.
    pub fn holds(&self) -> bool {
        self.contained && (!self.principal || self.equal)
    }
}

pub fn check_colon_product(a: &MonomialModule, b: &MonomialModule) -> Result<ColonProduct> {
    let product = a.colon_integral(b)?.mul(b)?;
    let intersection = a.intersect(b)?;
    let contained = product.is_subset_of(&intersection)?;
    let equal = product == intersection;
    Ok(ColonProduct {
        principal: b.is_principal(),
        product,
        intersection,
        contained,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(gens: &[&[i64]]) -> MonomialModule {
        MonomialModule::new(gens[0].len(), gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn v(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    #[test]
    fn local_membership() {
        let a = m(&[&[2, 0], &[1, 1]]);
        assert!(loc_member(&v(&[1, 0]), &a, &[0]).unwrap());
        assert!(!loc_member(&v(&[0, 1]), &a, &[0]).unwrap());
        for c in [[0, 0], [1, 1], [2, 0], [1, 0], [3, 5]] {
            assert_eq!(
                loc_member(&v(&c), &a, &[0, 1]).unwrap(),
                a.contains(&v(&c)).unwrap()
            );
        }
        assert!(matches!(
            loc_member(&v(&[0, 0]), &a, &[]),
            Err(Error::BadSigma(_))
        ));
        assert!(matches!(
            loc_member(&v(&[0, 0]), &a, &[2]),
            Err(Error::BadSigma(_))
        ));
    }

    #[test]
    fn localization_star_examples() {
        let f = PrimeFamily::singletons(2);
        assert_eq!(
            loc_star(&m(&[&[2, 0], &[1, 1]]), &f).unwrap(),
            m(&[&[1, 0]])
        );
        assert_eq!(loc_star(&m(&[&[1, 1]]), &f).unwrap(), m(&[&[1, 1]]));
        let g = PrimeFamily::new(2, vec![vec![0, 1], vec![1]]).unwrap();
        assert_eq!(loc_star(&m(&[&[1, 1]]), &g).unwrap(), m(&[&[1, 1]]));
        assert!(loc_star(&m(&[&[2, 0], &[0, 2]]), &f).unwrap().is_unit());
    }

    #[test]
    fn non_covering_family_is_rejected() {
        let f = PrimeFamily::new(3, vec![vec![0], vec![1]]).unwrap();
        assert!(!f.is_covering());
        assert_eq!(
            loc_star(&MonomialModule::unit(3), &f),
            Err(Error::NonCovering { missing: vec![3] })
        );
        assert!(PrimeFamily::new(2, vec![]).is_err());
        assert!(PrimeFamily::new(2, vec![vec![]]).is_err());
    }

    #[test]
    fn colon_products() {
        let r = check_colon_product(&m(&[&[2, 0]]), &m(&[&[0, 1]])).unwrap();
        assert_eq!(r.product, m(&[&[2, 1]]));
        assert!(r.equal && r.holds());

        let r = check_colon_product(&m(&[&[1, 0]]), &m(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(r.product, m(&[&[2, 0], &[1, 1]]));
        assert_eq!(r.intersection, m(&[&[1, 0]]));
        assert!(r.contained && !r.equal && r.holds());

        let a = m(&[&[1, 2]]);
        let r = check_colon_product(&a, &a).unwrap();
        assert!(r.equal && r.product == a);
    }

    #[test]
    fn display() {
        let f = PrimeFamily::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        assert_eq!(f.to_string(), "{{x1,x3},{x2}}");
    }
}
