//! Polarization: the canonical squarefree ideal attached to a monomial
//! ideal by splitting each power into distinct copies of its variable. The
//! quotients by an ideal and by its polarization share all graded Betti
//! numbers, which turns the squarefree subset sweep into an oracle for
//! arbitrary monomial ideals.

use crate::betti::{hochster_betti, BettiTable};
use crate::error::{Error, Result};
use crate::homology::FieldChar;
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::Monomial;

/// A polarized ideal together with the bookkeeping that ties its variables
/// back to the source ring: target variable at (1-based) position `p`
/// corresponds to `slots()[p - 1] = (source variable, copy number)`.
#[derive(Clone, Debug)]
pub struct Polarization {
    source_n: usize,
    slots: Vec<(usize, u32)>,
    ideal: MonomialIdeal,
}

impl Polarization {
    pub fn source_vars(&self) -> usize {
        self.source_n
    }

    pub fn target_vars(&self) -> usize {
        self.slots.len()
    }

    /// Squarefree ideal over `target_vars()` variables.
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Copy labels in target-variable order: entry `p - 1` names the source
    /// variable and copy index of target variable `p`. Sorted by source
    /// variable, then copy.
    pub fn slots(&self) -> &[(usize, u32)] {
        &self.slots
    }
}

/// Polarizes a proper monomial ideal: each generator exponent `x_i^e`
/// becomes the product of copies `(i, 1) .. (i, e)`, and the copies of all
/// variables are flattened in sorted order. Generator degrees are
/// preserved, every target generator is squarefree, and source variables
/// absent from all generators contribute no target variables.
pub fn polarize(ideal: &MonomialIdeal) -> Result<Polarization> {
    if ideal.is_unit() {
        return Err(Error::input("cannot polarize the unit ideal"));
    }
    let n = ideal.ambient_vars();
    let mut copies = vec![0u32; n + 1];
    for g in ideal.generators() {
        for (v, c) in copies.iter_mut().enumerate().skip(1) {
            *c = (*c).max(g.exponent(v));
        }
    }
    let mut slots = Vec::new();
    let mut offset = vec![0usize; n + 1];
    for v in 1..=n {
        offset[v] = slots.len();
        for l in 1..=copies[v] {
            slots.push((v, l));
        }
    }
    let target_n = slots.len();
    let gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; target_n];
            for v in 1..=n {
                for l in 0..g.exponent(v) {
                    exps[offset[v] + l as usize] = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    debug_assert!(gens
        .iter()
        .zip(ideal.generators())
        .all(|(p, g)| p.degree() == g.degree() && p.is_squarefree()));
    let polarized = MonomialIdeal::new(target_n, gens)?;
    Ok(Polarization {
        source_n: n,
        slots,
        ideal: polarized,
    })
}

/// Betti table of the quotient by any proper monomial ideal: the subset
/// sweep runs on the polarization and the result is reported over the
/// source ring's variables, which is sound because the two quotients have
/// identical graded Betti numbers. The polarized variable count is bounded
/// (see `limits::max_polarized_vars`).
pub fn betti_monomial(ideal: &MonomialIdeal, ch: FieldChar) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::input("the zero quotient ring has no Betti table"));
    }
    let n = ideal.ambient_vars();
    if ideal.is_zero() {
        return BettiTable::from_entries(n, ch, []);
    }
    let p = polarize(ideal)?;
    let bound = limits::max_polarized_vars();
    if p.target_vars() > bound {
        return Err(Error::resource(format!(
            "polarized ambient size {} exceeds the {bound}-variable limit",
            p.target_vars()
        )));
    }
    let table = hochster_betti(p.ideal(), ch)?;
    // Homological degrees cannot outrun the source variable count; a
    // violation here means the computation itself went wrong.
    BettiTable::from_entries(n, ch, table.iter()).map_err(|e| {
        Error::inconsistency(format!(
            "polarized sweep produced a table that does not fit over {n} variables: {e}"
        ))
    })
}
