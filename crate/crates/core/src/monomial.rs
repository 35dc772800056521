use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Set of variable indices drawn from `{1, ..., n}`, stored as a bitmask.
/// Bit `i - 1` is set when `x_i` is a member. Doubles as a simplex on the
/// same vertex numbering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct VarSet(u32);

impl VarSet {
    /// Hard cap imposed by the bitmask representation.
    pub const MAX_VARS: usize = 32;

    pub fn empty() -> Self {
        VarSet(0)
    }

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_VARS);
        if n == 32 {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    pub fn from_mask(mask: u32) -> Self {
        VarSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// Builds a set from 1-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut mask = 0u32;
        for i in indices {
            assert!(
                (1..=Self::MAX_VARS).contains(&i),
                "variable index out of range"
            );
            mask |= 1 << (i - 1);
        }
        VarSet(mask)
    }

    pub fn singleton(i: usize) -> Self {
        Self::from_indices([i])
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=Self::MAX_VARS).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(self, i: usize) -> Self {
        assert!((1..=Self::MAX_VARS).contains(&i));
        VarSet(self.0 | 1 << (i - 1))
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        VarSet(Self::full(n).0 & !self.0)
    }

    /// Members in ascending order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let i = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(i)
            }
        })
    }

    pub fn min_member(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Monomial in `n` variables as an exponent vector. The ambient size is the
/// vector length, so two monomials compare equal only in the same ring.
/// Serializes as the bare exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_i` in `n` variables, 1-based.
    pub fn variable(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial with the given support.
    pub fn squarefree(n: usize, support: VarSet) -> Self {
        let mut exps = vec![0; n];
        for i in support.iter() {
            assert!(i <= n, "support exceeds ambient");
            exps[i - 1] = 1;
        }
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VarSet {
        assert!(
            self.ambient() <= VarSet::MAX_VARS,
            "support requires ambient <= {}",
            VarSet::MAX_VARS
        );
        let mut mask = 0u32;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << idx;
            }
        }
        VarSet::from_mask(mask)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// Multiplies by the squarefree monomial on `vars`.
    pub fn mul_vars(&self, vars: VarSet) -> Monomial {
        let mut exps = self.exps.clone();
        for i in vars.iter() {
            exps[i - 1] += 1;
        }
        Monomial { exps }
    }
}

/// Canonical order: by degree, then a monomial with the higher power of an
/// earlier variable comes first. Gives the usual lexicographic listing
/// `x1^2 < x1*x2 < x2^2` within a degree.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", idx + 1)?;
            } else {
                write!(f, "x{}^{}", idx + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
