//! Seeded random monomial ideals for the verification sweep and for
//! property tests.

use rand::distributions::WeightedIndex;
use rand::prelude::*;

use crate::arith::binomial_u128;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

/// Configuration for drawing random ideals. `generators` monomials are
/// drawn independently and uniformly from the monomials whose degree lies
/// in `min_degree..=max_degree` (each degree weighted by how many monomials
/// it holds), then minimalized, so the resulting ideal can have fewer
/// generators than requested.
#[derive(Clone, Copy, Debug)]
pub struct IdealSampler {
    pub vars: usize,
    pub generators: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl IdealSampler {
    fn validate(&self) -> Result<()> {
        if self.vars == 0 {
            return Err(Error::input("sampler needs at least one variable"));
        }
        if self.min_degree == 0 {
            return Err(Error::input(
                "sampler degrees start at 1; a degree 0 generator would give the unit ideal",
            ));
        }
        if self.min_degree > self.max_degree {
            return Err(Error::input(format!(
                "empty degree range {}..={}",
                self.min_degree, self.max_degree
            )));
        }
        Ok(())
    }

    /// Draws a degree from the configured range, weighting degree `d` by
    /// `weight(d)`.
    fn sample_degree<R: Rng + ?Sized, W: Fn(usize) -> u128>(
        &self,
        rng: &mut R,
        weight: W,
    ) -> Result<usize> {
        let weights: Vec<u128> = (self.min_degree..=self.max_degree).map(weight).collect();
        let dist = WeightedIndex::new(&weights).map_err(|_| {
            Error::input(format!(
                "no monomials in {} variables with degree in {}..={}",
                self.vars, self.min_degree, self.max_degree
            ))
        })?;
        Ok(self.min_degree + dist.sample(rng))
    }

    /// Random squarefree ideal: generators drawn uniformly among squarefree
    /// monomials with degree in range.
    pub fn squarefree<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<MonomialIdeal> {
        self.validate()?;
        if self.vars > VarSet::MAX_VARS {
            return Err(Error::resource(format!(
                "squarefree sampling needs at most {} variables, got {}",
                VarSet::MAX_VARS,
                self.vars
            )));
        }
        let mut gens = Vec::with_capacity(self.generators);
        for _ in 0..self.generators {
            let d = self.sample_degree(rng, |d| binomial_u128(self.vars, d))?;
            let picked = rand::seq::index::sample(rng, self.vars, d);
            gens.push(Monomial::squarefree(
                self.vars,
                VarSet::from_indices(picked.iter().map(|i| i + 1)),
            ));
        }
        MonomialIdeal::new(self.vars, gens)
    }

    /// Random monomial ideal with arbitrary exponents: generators drawn
    /// uniformly among all monomials with degree in range, via a uniform
    /// stars-and-bars encoding.
    pub fn monomial<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<MonomialIdeal> {
        self.validate()?;
        let mut gens = Vec::with_capacity(self.generators);
        for _ in 0..self.generators {
            let d = self.sample_degree(rng, |d| binomial_u128(self.vars + d - 1, d))?;
            let mut stars = rand::seq::index::sample(rng, self.vars + d - 1, d).into_vec();
            stars.sort_unstable();
            let mut exps = vec![0u32; self.vars];
            for (t, p) in stars.into_iter().enumerate() {
                exps[p - t] += 1;
            }
            gens.push(Monomial::new(exps));
        }
        MonomialIdeal::new(self.vars, gens)
    }
}
