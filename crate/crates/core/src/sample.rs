//! Seeded samplers for the property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{ExponentVector, MonomialModule};
use crate::star::MultiplicativeSet;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of the random modules a suite draws.
///
/// Generator coordinates fall in `[-shift, max_deg]`; `shift = 0` gives
/// integral modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampler {
    pub nvars: usize,
    pub max_deg: i64,
    pub max_gens: usize,
    pub shift: i64,
}

impl Sampler {
    pub fn integral(nvars: usize, max_deg: i64, max_gens: usize) -> Self {
        Sampler {
            nvars,
            max_deg,
            max_gens,
            shift: 0,
        }
    }

    pub fn fractional(nvars: usize, max_deg: i64, max_gens: usize, shift: i64) -> Self {
        Sampler {
            nvars,
            max_deg,
            max_gens,
            shift,
        }
    }

    fn vector_in(&self, rng: &mut SampleRng, lo: i64, hi: i64) -> ExponentVector {
        ExponentVector::new((0..self.nvars).map(|_| rng.gen_range(lo..=hi)).collect())
    }

    fn gens_in(&self, rng: &mut SampleRng, lo: i64, hi: i64) -> MonomialModule {
        let k = rng.gen_range(1..=self.max_gens.max(1));
        let gens: Vec<_> = (0..k).map(|_| self.vector_in(rng, lo, hi)).collect();
        MonomialModule::new(self.nvars, gens).expect("sampler produces valid generators")
    }

    /// A module in the sampler's full (possibly fractional) range.
    pub fn module(&self, rng: &mut SampleRng) -> MonomialModule {
        self.gens_in(rng, -self.shift, self.max_deg)
    }

    pub fn integral_module(&self, rng: &mut SampleRng) -> MonomialModule {
        self.gens_in(rng, 0, self.max_deg)
    }

    /// A Laurent monomial used as a principal scalar `a ∈ K*`.
    pub fn scalar(&self, rng: &mut SampleRng) -> ExponentVector {
        let r = self.shift.max(1).min(self.max_deg.max(1));
        self.vector_in(rng, -r, r)
    }

    /// An integral module with `meet = 0`, i.e. a GV-ideal.
    pub fn gv_module(&self, rng: &mut SampleRng) -> MonomialModule {
        let a = self.integral_module(rng);
        a.scale(&a.meet().neg()).expect("same arity")
    }

    /// An integral module whose meet is nonzero, i.e. not a GV-ideal.
    pub fn non_gv_module(&self, rng: &mut SampleRng) -> MonomialModule {
        let a = self.gv_module(rng);
        let j = rng.gen_range(0..self.nvars);
        let bump = rng.gen_range(1..=2);
        a.scale(&ExponentVector::unit(self.nvars, j).scaled(bump))
            .expect("same arity")
    }

    /// A module containing `P^k` for small `k`, hence a member of the
    /// saturation of any set whose generator product is `p`.
    pub fn saturation_member(&self, rng: &mut SampleRng, p: &MonomialModule) -> MonomialModule {
        let k = rng.gen_range(1..=2);
        let base = p.pow(k);
        if rng.gen_bool(0.5) {
            base
        } else {
            base.add(&self.integral_module(rng)).expect("same arity")
        }
    }

    /// A multiplicative set with 1..=3 generators. When `gv` is false at
    /// least one generator is non-GV.
    pub fn multiplicative_set(&self, rng: &mut SampleRng, gv: bool) -> MultiplicativeSet {
        let k = rng.gen_range(1..=3usize);
        let bad = rng.gen_range(0..k);
        let gens: Vec<_> = (0..k)
            .map(|i| {
                if !gv && i == bad {
                    self.non_gv_module(rng)
                } else {
                    self.gv_module(rng)
                }
            })
            .collect();
        MultiplicativeSet::new(gens).expect("sampled generators are integral")
    }
}

/// Deterministic integral module with coordinates in `[0, max_deg]`.
pub fn random_module(nvars: usize, max_deg: i64, max_gens: usize, seed: u64) -> MonomialModule {
    Sampler::integral(nvars, max_deg, max_gens).integral_module(&mut rng(seed))
}

/// Deterministic fractional module with coordinates in `[-shift, max_deg]`.
pub fn random_fractional_module(
    nvars: usize,
    max_deg: i64,
    max_gens: usize,
    shift: i64,
    seed: u64,
) -> MonomialModule {
    Sampler::fractional(nvars, max_deg, max_gens, shift).module(&mut rng(seed))
}
