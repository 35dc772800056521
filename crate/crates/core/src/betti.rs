//! Graded Betti tables of monomial quotients, three ways: a subset-sweep
//! oracle that sums reduced homology of induced subcomplexes, a closed form
//! for squarefree truncations driven by the truncated f-vector, and
//! recovery of degree-truncation tables from a Betti table plus Hilbert
//! numerator. The last two never enumerate subsets; the oracle exists so
//! they can be checked against it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{binomial_big, binomial_u128, neg_one_pow};
use crate::complex::{mask_vec, FVector};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_numerator_from_fvector, HilbertNumerator};
use crate::homology::{homology_dims_from_facet_masks, FieldChar};
use crate::ideal::MonomialIdeal;
use crate::limits;

/// Sparse table of graded Betti numbers of a quotient ring, keyed by
/// (homological degree, internal degree). The `(0, 0)` entry is always 1
/// and no entry exceeds homological degree `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    n: usize,
    ch: FieldChar,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    /// Builds a table from `(i, j) -> value` pairs; the `(0, 0) -> 1` entry
    /// is implied and need not be listed. Rejects zero values, duplicate
    /// positions, `j < i`, entries at homological degree 0 other than the
    /// corner, and homological degrees above `n`.
    pub fn from_entries(
        n: usize,
        ch: FieldChar,
        entries: impl IntoIterator<Item = ((usize, usize), u64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        map.insert((0, 0), 1);
        for ((i, j), v) in entries {
            if (i, j) == (0, 0) {
                if v != 1 {
                    return Err(Error::input(format!("the (0, 0) entry must be 1, got {v}")));
                }
                continue;
            }
            if v == 0 {
                return Err(Error::input(format!("zero entry stored at ({i}, {j})")));
            }
            if i == 0 {
                return Err(Error::input(format!(
                    "homological degree 0 admits only the corner entry, got ({i}, {j})"
                )));
            }
            if j < i {
                return Err(Error::input(format!(
                    "internal degree below homological degree at ({i}, {j})"
                )));
            }
            if i > n {
                return Err(Error::input(format!(
                    "entry at homological degree {i} exceeds the ambient bound {n}"
                )));
            }
            if map.insert((i, j), v).is_some() {
                return Err(Error::input(format!("duplicate entry at ({i}, {j})")));
            }
        }
        Ok(BettiTable {
            n,
            ch,
            entries: map,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_char(&self) -> FieldChar {
        self.ch
    }

    /// Value at `(i, j)`, zero when absent.
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological degree with an entry (projective dimension).
    pub fn max_i(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest internal degree with an entry.
    pub fn max_j(&self) -> usize {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Smallest internal degree in homological degree 1; for the table of a
    /// quotient by an ideal this is the minimal generator degree. `None`
    /// when the ideal is zero.
    pub fn min_generator_degree(&self) -> Option<usize> {
        self.entries
            .keys()
            .filter(|&&(i, _)| i == 1)
            .map(|&(_, j)| j)
            .min()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_i = self.max_i();
        let max_row = self.iter().map(|((i, j), _)| j - i).max().unwrap_or(0);
        let totals: Vec<u64> = (0..=max_i)
            .map(|i| {
                self.iter()
                    .filter(|&((a, _), _)| a == i)
                    .map(|(_, v)| v)
                    .sum()
            })
            .collect();
        let cell = |i: usize, r: usize| -> String {
            match self.entry(i, i + r) {
                0 => ".".to_string(),
                v => v.to_string(),
            }
        };
        let widths: Vec<usize> = (0..=max_i)
            .map(|i| {
                let mut w = i.to_string().len().max(totals[i].to_string().len());
                for r in 0..=max_row {
                    w = w.max(cell(i, r).len());
                }
                w
            })
            .collect();
        let label_width = "total:".len().max(max_row.to_string().len() + 1);
        let row = |f: &mut fmt::Formatter<'_>, label: &str, cells: &[String]| -> fmt::Result {
            write!(f, "{label:>label_width$}")?;
            for (c, w) in cells.iter().zip(&widths) {
                write!(f, " {c:>w$}")?;
            }
            writeln!(f)
        };
        let header: Vec<String> = (0..=max_i).map(|i| i.to_string()).collect();
        row(f, "", &header)?;
        let total_cells: Vec<String> = totals.iter().map(|t| t.to_string()).collect();
        row(f, "total:", &total_cells)?;
        for r in 0..=max_row {
            let cells: Vec<String> = (0..=max_i).map(|i| cell(i, r)).collect();
            row(f, &format!("{r}:"), &cells)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    #[serde(rename = "char")]
    ch: FieldChar,
    n: usize,
    entries: Vec<(usize, usize, u64)>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawTable {
            ch: self.ch,
            n: self.n,
            entries: self.iter().map(|((i, j), v)| (i, j, v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTable::deserialize(d)?;
        BettiTable::from_entries(
            raw.n,
            raw.ch,
            raw.entries.into_iter().map(|(i, j, v)| ((i, j), v)),
        )
        .map_err(D::Error::custom)
    }
}

/// Betti table of the quotient by a squarefree ideal, by brute force: for
/// every vertex subset, the reduced homology of the induced subcomplex of
/// the ideal's complex contributes to the column of the subset's size.
/// Induced subcomplexes that are cones are skipped, as their homology
/// vanishes. The sweep runs in parallel with a deterministic result.
pub fn hochster_betti(ideal: &MonomialIdeal, ch: FieldChar) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::input("the zero quotient ring has no Betti table"));
    }
    if !ideal.is_squarefree() {
        return Err(Error::input(
            "the subset sweep needs a squarefree ideal; polarize first",
        ));
    }
    let n = ideal.ambient_vars();
    let bound = limits::max_sweep_vars();
    if n > bound {
        return Err(Error::resource(format!(
            "sweeping 2^{n} vertex subsets exceeds the {bound}-variable limit"
        )));
    }
    let cx = ideal.stanley_reisner()?;
    let facets = mask_vec(cx.facets());
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let entries = (0..=full)
        .into_par_iter()
        .try_fold(BTreeMap::<(usize, usize), u64>::new, |mut map, w| {
            if let Some(dims) = induced_homology(&facets, w, ch)? {
                let j = w.count_ones() as usize;
                for (c, &d) in dims.iter().enumerate() {
                    if d > 0 {
                        *map.entry((j - c, j)).or_insert(0) += d as u64;
                    }
                }
            }
            Ok::<_, Error>(map)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })?;
    BettiTable::from_entries(n, ch, entries)
}

/// Homology dimensions of the subcomplex induced on `w`, or `None` when it
/// is a cone and cannot contribute. A cheap conservative test (a vertex
/// common to every intersection) runs before facets are maximalized.
fn induced_homology(facets: &[u32], w: u32, ch: FieldChar) -> Result<Option<Vec<usize>>> {
    let mut common = w;
    for &f in facets {
        common &= f;
        if common == 0 {
            break;
        }
    }
    if common != 0 {
        return Ok(None);
    }
    let mut induced: Vec<u32> = facets.iter().map(|&f| f & w).collect();
    maximalize_masks(&mut induced);
    let mut apex = w;
    for &f in &induced {
        apex &= f;
    }
    if apex != 0 {
        return Ok(None);
    }
    homology_dims_from_facet_masks(&induced, ch).map(Some)
}

fn maximalize_masks(masks: &mut Vec<u32>) {
    masks.sort_unstable_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    masks.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(masks.len());
    for &m in masks.iter() {
        if !kept.iter().any(|&k| m & k == m) {
            kept.push(m);
        }
    }
    *masks = kept;
}

/// Betti table of the quotient by the degree-`k` squarefree truncation,
/// with no subset sweep: entries in rows `j - i >= k` are copied from the
/// original table, rows 1 through `k - 2` are zero, and the `j - i = k - 1`
/// diagonal is solved degree by degree from the truncated f-vector via the
/// alternating-sum identity between a table and its Hilbert numerator. The
/// same diagonal is also evaluated through the explicit binomial expression
/// and the two must agree.
///
/// `fk` must be the f-vector of the complex of the truncated ideal, so all
/// cardinalities below `k` are complete; `k` must be at least the minimal
/// generator degree recorded in `b`.
pub fn closed_form_truncation_betti(
    b: &BettiTable,
    fk: &FVector,
    n: usize,
    k: usize,
) -> Result<BettiTable> {
    if b.n() != n {
        return Err(Error::input(format!(
            "table is over {} variables but {n} were requested",
            b.n()
        )));
    }
    if k == 0 {
        return Err(Error::input("truncation degree must be at least 1"));
    }
    if let Some(m) = b.min_generator_degree() {
        if k < m {
            return Err(Error::input(format!(
                "truncation degree {k} is below the minimal generator degree {m}"
            )));
        }
    }
    for r in 0..=(k - 1).min(n) {
        let expected = binomial_u128(n, r) as u64;
        if fk.entry(r) != expected {
            return Err(Error::input(format!(
                "f-vector is not that of a degree-{k} truncation: {} faces of cardinality {r}, expected {expected}",
                fk.entry(r)
            )));
        }
    }
    let nk = hilbert_numerator_from_fvector(fk, n);
    let mut entries: Vec<((usize, usize), u64)> = b
        .iter()
        .filter(|&((i, j), _)| i >= 1 && j - i >= k)
        .collect();
    for s in k..=n {
        let i = s - k + 1;
        let mut rhs = nk.coeff(s);
        for l in 1..=s - k {
            rhs -= neg_one_pow(l as i64) * BigInt::from(b.entry(l, s));
        }
        let derived = neg_one_pow(i as i64) * rhs;

        let mut alpha = BigInt::zero();
        for r in 0..=s {
            alpha += neg_one_pow(k as i64 - 1 - r as i64)
                * binomial_big((n - r) as i64, (s - r) as i64)
                * BigInt::from(fk.entry(r));
        }
        for l in 1..i {
            alpha += neg_one_pow(l as i64 - i as i64 - 1) * BigInt::from(b.entry(l, s));
        }
        if alpha != derived {
            return Err(Error::inconsistency(format!(
                "diagonal evaluations disagree at total degree {s}: {alpha} vs {derived}"
            )));
        }
        if derived.is_negative() {
            return Err(Error::inconsistency(format!(
                "negative value {derived} recovered at ({i}, {s}); table and f-vector do not match"
            )));
        }
        if !derived.is_zero() {
            let v = u64::try_from(derived)
                .map_err(|_| Error::inconsistency("recovered entry does not fit in 64 bits"))?;
            entries.push(((i, s), v));
        }
    }
    BettiTable::from_entries(n, b.field_char(), entries)
}

/// Betti table of the quotient by the degree-`k` truncation `I ∩ M^k`,
/// reconstructed from the original quotient's table and the truncated
/// quotient's Hilbert numerator alone. Rows strictly above `k - 1` are
/// copied, rows strictly between 0 and `k - 1` are zero, and the diagonal
/// row `j - i = k - 1` is solved degree by degree from the numerator; each
/// total degree determines exactly one unknown.
pub fn betti_geq_k(b: &BettiTable, nm: &HilbertNumerator, k: usize) -> Result<BettiTable> {
    let n = b.n();
    if nm.n() != n {
        return Err(Error::input(format!(
            "numerator is over {} variables but the table is over {n}",
            nm.n()
        )));
    }
    if k == 0 {
        return Err(Error::input("truncation degree must be at least 1"));
    }
    if let Some(m) = b.min_generator_degree() {
        if k < m {
            return Err(Error::input(format!(
                "truncation degree {k} is below the minimal generator degree {m}"
            )));
        }
    }
    if nm.coeff(0) != BigInt::one() {
        return Err(Error::input("numerator must have constant term 1"));
    }
    for s in 1..k {
        if !nm.coeff(s).is_zero() {
            return Err(Error::input(format!(
                "numerator has a nonzero coefficient in degree {s}, impossible after truncation at {k}"
            )));
        }
    }
    let mut entries: Vec<((usize, usize), u64)> = b
        .iter()
        .filter(|&((i, j), _)| i >= 1 && j - i > k - 1)
        .collect();
    let smax = nm.degree().unwrap_or(0).max(b.max_j());
    for s in k..=smax {
        let i = s - k + 1;
        let mut rhs = nm.coeff(s);
        for l in 1..=s - k {
            rhs -= neg_one_pow(l as i64) * BigInt::from(b.entry(l, s));
        }
        let val = neg_one_pow(i as i64) * rhs;
        if val.is_negative() {
            return Err(Error::inconsistency(format!(
                "negative value {val} recovered at ({i}, {s}); table and numerator do not match"
            )));
        }
        if i > n {
            if !val.is_zero() {
                return Err(Error::inconsistency(format!(
                    "nonzero value {val} implied beyond homological degree {n} at total degree {s}"
                )));
            }
            continue;
        }
        if !val.is_zero() {
            let v = u64::try_from(val)
                .map_err(|_| Error::inconsistency("recovered entry does not fit in 64 bits"))?;
            entries.push(((i, s), v));
        }
    }
    BettiTable::from_entries(n, b.field_char(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_ideal, projective_plane};
    use crate::hilbert::{
        hilbert_numerator_from_betti, hilbert_numerator_geq_truncation, hilbert_numerator_monomial,
    };
    use crate::truncation::squarefree_truncate;

    fn table(n: usize, entries: &[((usize, usize), u64)]) -> BettiTable {
        BettiTable::from_entries(n, FieldChar::Zero, entries.iter().copied()).unwrap()
    }

    fn truncated_f(ideal: &MonomialIdeal, k: usize) -> FVector {
        squarefree_truncate(ideal, k)
            .unwrap()
            .stanley_reisner()
            .unwrap()
            .f_vector()
            .unwrap()
    }

    #[test]
    fn koszul_relation_on_one_generator() {
        let i = MonomialIdeal::parse("n=2\nx1*x2").unwrap();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        assert_eq!(b, table(2, &[((1, 2), 1)]));
    }

    #[test]
    fn single_variable_generator() {
        let i = MonomialIdeal::parse("n=1\nx1").unwrap();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        assert_eq!(b, table(1, &[((1, 1), 1)]));
    }

    #[test]
    fn zero_ideal_table_is_trivial() {
        let b = hochster_betti(&MonomialIdeal::zero(5), FieldChar::Zero).unwrap();
        assert_eq!(b, table(5, &[]));
    }

    #[test]
    fn unit_or_square_inputs_are_rejected() {
        assert!(hochster_betti(&MonomialIdeal::unit(2), FieldChar::Zero).is_err());
        let sq = MonomialIdeal::parse("n=2\nx1^2").unwrap();
        assert!(hochster_betti(&sq, FieldChar::Zero).is_err());
    }

    #[test]
    fn nine_variable_example_table() {
        let b = hochster_betti(&example_ideal(), FieldChar::Zero).unwrap();
        let expected = table(
            9,
            &[
                ((1, 3), 1),
                ((1, 4), 1),
                ((1, 6), 1),
                ((2, 7), 2),
                ((2, 8), 1),
                ((3, 9), 1),
            ],
        );
        assert_eq!(b, expected);
    }

    #[test]
    fn field_characteristic_changes_the_projective_plane_table() {
        let i = projective_plane().to_ideal().unwrap();
        let b0 = hochster_betti(&i, FieldChar::Zero).unwrap();
        let b2 = hochster_betti(&i, FieldChar::Prime(2)).unwrap();
        let b3 = hochster_betti(&i, FieldChar::Prime(3)).unwrap();
        // Tables over different fields are never equal as values, so compare
        // the underlying entries.
        let entries = |b: &BettiTable| b.iter().collect::<Vec<_>>();
        assert_eq!(entries(&b0), entries(&b3));
        assert_ne!(entries(&b0), entries(&b2));
        assert!(b2.max_i() > b0.max_i());
        // Torsion cancels in alternating sums, so all numerators agree.
        let nf = hilbert_numerator_from_fvector(&projective_plane().f_vector().unwrap(), 6);
        assert_eq!(hilbert_numerator_from_betti(&b0), nf);
        assert_eq!(hilbert_numerator_from_betti(&b2), nf);
    }

    #[test]
    fn closed_form_matches_known_truncation_values() {
        let i = example_ideal();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        let t = closed_form_truncation_betti(&b, &truncated_f(&i, 5), 9, 5).unwrap();
        let expected = table(
            9,
            &[
                ((1, 5), 20),
                ((2, 6), 50),
                ((3, 7), 55),
                ((4, 8), 29),
                ((5, 9), 6),
                ((1, 6), 1),
                ((2, 7), 2),
                ((2, 8), 1),
                ((3, 9), 1),
            ],
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn closed_form_agrees_with_the_sweep_for_every_degree() {
        let i = example_ideal();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        for k in 3..=9 {
            let closed = closed_form_truncation_betti(&b, &truncated_f(&i, k), 9, k).unwrap();
            let oracle =
                hochster_betti(&squarefree_truncate(&i, k).unwrap(), FieldChar::Zero).unwrap();
            assert_eq!(closed, oracle, "k={k}");
        }
    }

    #[test]
    fn closed_form_at_the_generation_degree_of_a_linear_ideal_is_identity() {
        let i = MonomialIdeal::parse("n=3\nx1*x2\nx1*x3\nx2*x3").unwrap();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        let t = closed_form_truncation_betti(&b, &truncated_f(&i, 2), 3, 2).unwrap();
        assert_eq!(t, b);
    }

    #[test]
    fn closed_form_input_checks() {
        let i = example_ideal();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        let fk = truncated_f(&i, 5);
        assert!(closed_form_truncation_betti(&b, &fk, 8, 5).is_err());
        assert!(closed_form_truncation_betti(&b, &fk, 9, 0).is_err());
        assert!(closed_form_truncation_betti(&b, &fk, 9, 2).is_err());
        // Original (untruncated) f-vector fails the completeness check.
        let f = i.stanley_reisner().unwrap().f_vector().unwrap();
        assert!(closed_form_truncation_betti(&b, &f, 9, 5).is_err());
    }

    #[test]
    fn closed_form_flags_inflated_f_vectors() {
        let i = example_ideal();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        let good = truncated_f(&i, 5);
        let mut cooked: Vec<u64> = good.entries().to_vec();
        cooked[5] = 500;
        let err = closed_form_truncation_betti(&b, &FVector::new(cooked), 9, 5).unwrap_err();
        assert!(matches!(err, Error::Inconsistency(_)), "{err}");
    }

    #[test]
    fn degree_truncation_recovery_on_the_eight_squares() {
        // Quotient by (x1^2, ..., x8^2): the table is the Koszul pattern
        // with C(8, r) in bidegree (r, 2r).
        let koszul: Vec<((usize, usize), u64)> = (1..=8)
            .map(|r| ((r, 2 * r), binomial_u128(8, r) as u64))
            .collect();
        let b = table(8, &koszul);
        let gens: Vec<crate::Monomial> = (1..=8)
            .map(|v| {
                let x = crate::Monomial::variable(8, v);
                x.mul(&x)
            })
            .collect();
        let ci = MonomialIdeal::new(8, gens).unwrap();
        let nm = hilbert_numerator_geq_truncation(&hilbert_numerator_monomial(&ci).unwrap(), 5);
        let got = betti_geq_k(&b, &nm, 5).unwrap();
        let expected = table(
            8,
            &[
                ((1, 5), 736),
                ((2, 6), 4200),
                ((3, 7), 10528),
                ((4, 8), 14910),
                ((5, 9), 12832),
                ((6, 10), 6776),
                ((7, 11), 2016),
                ((8, 12), 260),
                ((5, 10), 56),
                ((6, 12), 28),
                ((7, 14), 8),
                ((8, 16), 1),
            ],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn degree_truncation_at_the_generation_degree_is_identity() {
        let i = example_ideal();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        let nm = hilbert_numerator_from_betti(&b);
        let got = betti_geq_k(&b, &hilbert_numerator_geq_truncation(&nm, 3), 3).unwrap();
        assert_eq!(got, b);
    }

    #[test]
    fn degree_truncation_input_checks() {
        let i = example_ideal();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        let nm = hilbert_numerator_from_betti(&b);
        assert!(betti_geq_k(&b, &nm, 0).is_err());
        assert!(betti_geq_k(&b, &nm, 2).is_err());
        // A numerator with support below k cannot belong to a truncation.
        assert!(betti_geq_k(&b, &nm, 5).is_err());
        let wrong_n = HilbertNumerator::one(3);
        assert!(betti_geq_k(&b, &wrong_n, 3).is_err());
    }

    #[test]
    fn table_construction_rejects_malformed_entries() {
        assert!(BettiTable::from_entries(3, FieldChar::Zero, [((1, 2), 0)]).is_err());
        assert!(BettiTable::from_entries(3, FieldChar::Zero, [((2, 1), 5)]).is_err());
        assert!(BettiTable::from_entries(3, FieldChar::Zero, [((0, 2), 5)]).is_err());
        assert!(BettiTable::from_entries(3, FieldChar::Zero, [((4, 5), 5)]).is_err());
        assert!(BettiTable::from_entries(3, FieldChar::Zero, [((1, 2), 5), ((1, 2), 5)]).is_err());
        assert!(BettiTable::from_entries(3, FieldChar::Zero, [((0, 0), 2)]).is_err());
    }

    #[test]
    fn json_round_trip_and_shape() {
        let i = example_ideal();
        let b = hochster_betti(&i, FieldChar::Zero).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert!(json.contains("\"char\":0"));
        assert!(json.contains("[1,3,1]"));
        let back: BettiTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn grid_display_lines_up() {
        let b = table(3, &[((1, 2), 3), ((2, 3), 2), ((1, 3), 10)]);
        let shown = b.to_string();
        let lines: Vec<&str> = shown.lines().collect();
        assert_eq!(lines[0], "       0  1 2");
        assert_eq!(lines[1], "total: 1 13 2");
        assert_eq!(lines[2], "    0: 1  . .");
        assert_eq!(lines[3], "    1: .  3 2");
        assert_eq!(lines[4], "    2: . 10 .");
    }
}
