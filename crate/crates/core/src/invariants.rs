//! Homological invariants read off Betti tables: regularity, linearity of
//! the resolution, the largest linear prefix of a resolution, and
//! componentwise linearity, plus the fast truncation-regularity rule.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::{closed_form_truncation_betti, hochster_betti, BettiTable};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::FieldChar;
use crate::ideal::MonomialIdeal;
use crate::polarization::betti_monomial;
use crate::truncation::f_vector_truncated;

/// Castelnuovo-Mumford regularity of the ideal whose quotient the table
/// describes: one more than the widest row in positive homological degree.
/// Returns 0 only for the zero ideal's trivial table.
pub fn regularity(b: &BettiTable) -> usize {
    b.iter()
        .filter(|&((i, _), _)| i >= 1)
        .map(|((i, j), _)| j - i + 1)
        .max()
        .unwrap_or(0)
}

/// Regularity of the quotient ring itself: `regularity` minus one, except
/// that the zero ideal gives 0.
pub fn quotient_regularity(b: &BettiTable) -> usize {
    regularity(b).saturating_sub(1)
}

/// True when every entry in positive homological degree sits on the single
/// diagonal `j = k + i - 1`, so the resolution of the ideal is `k`-linear.
pub fn has_linear_resolution(b: &BettiTable, k: usize) -> bool {
    b.iter()
        .filter(|&((i, _), _)| i >= 1)
        .all(|((i, j), _)| j == k + i - 1)
}

/// Length of the linear prefix of a resolution: how many initial
/// homological degrees lie purely on the `j = k + i - 1` diagonal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum KIndex {
    Finite(usize),
    Infinite,
}

impl fmt::Display for KIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KIndex::Finite(p) => write!(f, "{p}"),
            KIndex::Infinite => write!(f, "infinity"),
        }
    }
}

/// The largest `p` such that the resolution is linear through homological
/// degree `p`: rows 1 through `p` sit purely on `j = k + i - 1`. An ideal
/// with a generator off degree `k` scores 0; a fully linear table scores
/// `Infinite`.
pub fn k_index(b: &BettiTable, k: usize) -> KIndex {
    let dirty = b
        .iter()
        .filter(|&((i, j), _)| i >= 1 && j != k + i - 1)
        .map(|((i, _), _)| i)
        .min();
    match dirty {
        Some(i) => KIndex::Finite(i - 1),
        None => KIndex::Infinite,
    }
}

/// Regularity of the ideal after truncation to degree `k`, given the
/// regularity `d` of the original ideal: whichever of the two is larger.
/// Holds for both truncation flavours.
pub fn reg_of_truncation(d: usize, k: usize) -> usize {
    d.max(k)
}

/// Smallest degree whose squarefree truncation has a linear resolution.
/// This always equals the regularity of the ideal, and the scan verifies
/// that instead of assuming it: each candidate table comes from the closed
/// form, and disagreement with the regularity is reported as an
/// inconsistency.
pub fn min_linear_truncation(ideal: &MonomialIdeal, ch: FieldChar) -> Result<usize> {
    let Some(min_deg) = ideal.min_degree() else {
        return Err(Error::input(
            "the zero ideal has no truncation with a linear resolution",
        ));
    };
    let b = hochster_betti(ideal, ch)?;
    let reg = regularity(&b);
    let n = ideal.ambient_vars();
    let f = SimplicialComplex::stanley_reisner(ideal)?.f_vector()?;
    for d in min_deg..=reg {
        let fd = f_vector_truncated(&f, n, d.saturating_sub(1));
        let table = closed_form_truncation_betti(&b, &fd, n, d)?;
        if has_linear_resolution(&table, d) {
            if d != reg {
                return Err(Error::inconsistency(format!(
                    "degree-{d} truncation is linear but the regularity is {reg}"
                )));
            }
            return Ok(d);
        }
    }
    Err(Error::inconsistency(format!(
        "no truncation up to the regularity {reg} has a linear resolution"
    )))
}

/// Verdict of the componentwise-linearity scan, carrying the first degree
/// whose slice fails when there is one.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ComponentwiseLinearity {
    Linear,
    FailsAt(usize),
}

impl ComponentwiseLinearity {
    pub fn is_linear(self) -> bool {
        matches!(self, ComponentwiseLinearity::Linear)
    }
}

impl fmt::Display for ComponentwiseLinearity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentwiseLinearity::Linear => write!(f, "componentwise linear"),
            ComponentwiseLinearity::FailsAt(j) => {
                write!(f, "not componentwise linear: the degree-{j} slice fails")
            }
        }
    }
}

/// Checks componentwise linearity degree by degree: for each `j` from the
/// minimal generator degree through the regularity, the ideal generated by
/// the degree-`j` elements must have a `j`-linear resolution. Slices above
/// the regularity are always linear and are skipped.
pub fn is_componentwise_linear(
    ideal: &MonomialIdeal,
    ch: FieldChar,
) -> Result<ComponentwiseLinearity> {
    if ideal.is_unit() {
        return Err(Error::input("the unit ideal has no linearity scan"));
    }
    let Some(min_deg) = ideal.min_degree() else {
        return Ok(ComponentwiseLinearity::Linear);
    };
    let reg = regularity(&betti_monomial(ideal, ch)?);
    for j in min_deg..=reg {
        let slice = ideal.degree_slice(j)?;
        let table = betti_monomial(&slice, ch)?;
        if !has_linear_resolution(&table, j) {
            return Ok(ComponentwiseLinearity::FailsAt(j));
        }
    }
    Ok(ComponentwiseLinearity::Linear)
}
