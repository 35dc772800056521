//! Hilbert-series numerators of monomial quotient rings.
//!
//! The series of a quotient by a monomial ideal in `n` variables is
//! `N(t) / (1-t)^n` for an integer polynomial `N`; this module computes `N`
//! from an f-vector, from a Betti table, or directly from generators by
//! inclusion-exclusion, and transforms it under degree truncation of the
//! ideal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{binomial_big, neg_one_pow};
use crate::betti::BettiTable;
use crate::complex::FVector;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::Monomial;

/// Numerator polynomial of a Hilbert series over `(1-t)^n`. Trailing zero
/// coefficients are trimmed, so the zero ring has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertNumerator {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl HilbertNumerator {
    pub fn new(n: usize, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HilbertNumerator { n, coeffs }
    }

    pub fn one(n: usize) -> Self {
        HilbertNumerator::new(n, vec![BigInt::one()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^s`, zero past the end.
    pub fn coeff(&self, s: usize) -> BigInt {
        self.coeffs.get(s).cloned().unwrap_or_default()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Dimension of the degree-`s` graded piece of the quotient, recovered
    /// by expanding `N(t) / (1-t)^n`.
    pub fn graded_dimension(&self, s: usize) -> BigInt {
        let mut acc = BigInt::zero();
        for (r, c) in self.coeffs.iter().enumerate().take(s + 1) {
            acc += c * binomial_big((self.n + s - r) as i64 - 1, (s - r) as i64);
        }
        acc
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match s {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if s == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{s}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for HilbertNumerator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HilbertNumerator", 2)?;
        st.serialize_field("n", &self.n)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for HilbertNumerator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(HilbertNumerator::new(raw.n, coeffs))
    }
}

/// Numerator from the f-vector of the complex of a squarefree ideal in `n`
/// variables: the coefficient of `t^s` is the alternating binomial transform
/// of the face counts.
pub fn hilbert_numerator_from_fvector(f: &FVector, n: usize) -> HilbertNumerator {
    let coeffs = (0..=n)
        .map(|s| {
            let mut acc = BigInt::zero();
            for r in 0..=s {
                acc += neg_one_pow((s - r) as i64)
                    * binomial_big((n - r) as i64, (s - r) as i64)
                    * BigInt::from(f.entry(r));
            }
            acc
        })
        .collect();
    HilbertNumerator::new(n, coeffs)
}

/// Numerator as the alternating sum of a Betti table: the coefficient of
/// `t^s` is the signed column sum over homological degrees.
pub fn hilbert_numerator_from_betti(b: &BettiTable) -> HilbertNumerator {
    let top = b.max_j();
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for ((i, j), v) in b.iter() {
        coeffs[j] += neg_one_pow(i as i64) * BigInt::from(v);
    }
    HilbertNumerator::new(b.n(), coeffs)
}

/// Numerator straight from the generators by inclusion-exclusion over
/// least common multiples of generator subsets. Exponential in the number
/// of generators, hence bounded (see `limits::max_hilbert_generators`).
pub fn hilbert_numerator_monomial(ideal: &MonomialIdeal) -> Result<HilbertNumerator> {
    let gens = ideal.generators();
    let bound = limits::max_hilbert_generators();
    if gens.len() > bound {
        return Err(Error::resource(format!(
            "inclusion-exclusion over {} generators exceeds the limit of {bound}",
            gens.len()
        )));
    }
    let n = ideal.ambient_vars();
    if gens.is_empty() {
        return Ok(HilbertNumerator::one(n));
    }
    let total = gens
        .iter()
        .fold(Monomial::unit(n), |acc, g| acc.lcm(g))
        .degree();
    let mut acc = vec![0i64; total + 1];
    fn walk(gens: &[Monomial], from: usize, lcm: &Monomial, sign: i64, acc: &mut [i64]) {
        acc[lcm.degree()] += sign;
        for idx in from..gens.len() {
            walk(gens, idx + 1, &lcm.lcm(&gens[idx]), -sign, acc);
        }
    }
    walk(gens, 0, &Monomial::unit(n), 1, &mut acc);
    Ok(HilbertNumerator::new(
        n,
        acc.into_iter().map(BigInt::from).collect(),
    ))
}

/// Numerator of the quotient by the degree-`k` truncation, from the
/// numerator of the original quotient. Below degree `k` the truncated
/// quotient has the dimensions of the full polynomial ring; at `k` and
/// above it matches the original, so the numerator shifts by an explicit
/// `(1-t)^n` multiple of the low-degree corrections.
pub fn hilbert_numerator_geq_truncation(nm: &HilbertNumerator, k: usize) -> HilbertNumerator {
    let n = nm.n();
    let mut coeffs: Vec<BigInt> = (0..nm.coeffs().len().max(n + k))
        .map(|s| nm.coeff(s))
        .collect();
    for s in 0..k {
        let gap = binomial_big((n + s) as i64 - 1, s as i64) - nm.graded_dimension(s);
        if gap.is_zero() {
            continue;
        }
        // Add gap * t^s * (1-t)^n.
        for i in 0..=n {
            coeffs[s + i] += &gap * neg_one_pow(i as i64) * binomial_big(n as i64, i as i64);
        }
    }
    HilbertNumerator::new(n, coeffs)
}
