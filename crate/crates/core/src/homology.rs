//! Reduced simplicial homology dimensions over an exact field.
//!
//! All arithmetic is exact: characteristic zero ranks come from integer
//! elimination (unit pivots while they last, then fraction-free Bareiss on
//! the small residual block, escalating to big integers on overflow), prime
//! characteristic ranks from modular elimination. No floating point anywhere.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::{faces_by_card_of, mask_vec, SimplicialComplex};
use crate::error::{Error, Result};

/// Field characteristic for homology: zero or a prime below `2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldChar {
    Zero,
    Prime(u32),
}

impl FieldChar {
    /// Accepts `0` or a prime `p < 2^31`.
    pub fn new(c: u64) -> Result<Self> {
        if c == 0 {
            return Ok(FieldChar::Zero);
        }
        if c >= 1 << 31 {
            return Err(Error::input(format!("characteristic {c} is too large")));
        }
        if !is_prime(c as u32) {
            return Err(Error::input(format!("characteristic {c} is not prime")));
        }
        Ok(FieldChar::Prime(c as u32))
    }

    pub fn value(self) -> u64 {
        match self {
            FieldChar::Zero => 0,
            FieldChar::Prime(p) => p as u64,
        }
    }
}

impl fmt::Display for FieldChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for FieldChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.value())
    }
}

impl<'de> Deserialize<'de> for FieldChar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = u64::deserialize(d)?;
        FieldChar::new(v).map_err(D::Error::custom)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dimensions of the reduced homology of a nonvoid complex, indexed from
/// degree -1. The result has length `dim + 2`, so the empty complex gives
/// `[1]` and a complex with vertices starts `[0, ...]` whenever some vertex
/// exists.
pub fn reduced_homology_dims(cx: &SimplicialComplex, ch: FieldChar) -> Result<Vec<usize>> {
    if cx.is_void() {
        return Err(Error::input("the void complex has no homology"));
    }
    homology_dims_from_facet_masks(&mask_vec(cx.facets()), ch)
}

/// Same as `reduced_homology_dims` but on raw facet bitmasks. The facet list
/// must be a nonempty antichain.
pub(crate) fn homology_dims_from_facet_masks(
    facet_masks: &[u32],
    ch: FieldChar,
) -> Result<Vec<usize>> {
    debug_assert!(!facet_masks.is_empty());
    let layers = faces_by_card_of(facet_masks)?;
    let top = layers.len() - 1;
    // ranks[c] = rank of the boundary map from cardinality c to c - 1.
    let mut ranks = vec![0usize; top + 2];
    for c in 1..=top {
        let lower: HashMap<u32, usize> = layers[c - 1]
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let cols = boundary_columns(&layers[c], &lower);
        ranks[c] = rank(cols, layers[c - 1].len(), ch);
    }
    Ok((0..=top)
        .map(|c| layers[c].len() - ranks[c] - ranks[c + 1])
        .collect())
}

/// Boundary matrix columns: the column of a face lists each facet of the
/// face with the usual alternating sign by position.
fn boundary_columns(upper: &[u32], lower: &HashMap<u32, usize>) -> Vec<Vec<(usize, i64)>> {
    upper
        .iter()
        .map(|&face| {
            let mut col = Vec::with_capacity(face.count_ones() as usize);
            let mut rest = face;
            let mut sign = 1i64;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let sub = face & !bit;
                col.push((lower[&sub], sign));
                sign = -sign;
                rest &= rest - 1;
            }
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

fn rank(cols: Vec<Vec<(usize, i64)>>, nrows: usize, ch: FieldChar) -> usize {
    match ch {
        FieldChar::Zero => rank_char_zero(cols, nrows),
        FieldChar::Prime(p) => rank_mod_p(cols, nrows, p),
    }
}

fn rank_char_zero(cols: Vec<Vec<(usize, i64)>>, nrows: usize) -> usize {
    match rank_sparse_int(cols.clone(), nrows) {
        Some(r) => r,
        // Entry growth overflowed machine integers; redo exactly.
        None => rank_sparse_bigint(cols),
    }
}

/// Sparse elimination over the integers using only unit pivots, which keeps
/// every intermediate entry integral. Whatever cannot be reduced that way is
/// finished off by fraction-free elimination on the (typically tiny) dense
/// residual. Returns `None` on `i64` overflow.
fn rank_sparse_int(mut cols: Vec<Vec<(usize, i64)>>, nrows: usize) -> Option<usize> {
    let ncols = cols.len();
    let mut col_done = vec![false; ncols];
    let mut row_used = vec![false; nrows];
    let mut row_count = vec![0usize; nrows];
    for col in &cols {
        for &(r, _) in col {
            row_count[r] += 1;
        }
    }
    let mut rank = 0usize;
    loop {
        // Cheapest unit pivot: fewest column entries, then fewest row entries.
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for j in 0..ncols {
            if col_done[j] || cols[j].is_empty() {
                continue;
            }
            let nnz = cols[j].len();
            if let Some((bn, _, _, _)) = best {
                if nnz > bn {
                    continue;
                }
            }
            let cand = cols[j]
                .iter()
                .filter(|&&(_, v)| v.abs() == 1)
                .map(|&(r, _)| (row_count[r], r))
                .min();
            if let Some((rc, r)) = cand {
                if best.is_none_or(|(bn, br, _, _)| (nnz, rc) < (bn, br)) {
                    best = Some((nnz, rc, j, r));
                }
            }
        }
        let Some((_, _, pj, pr)) = best else { break };
        let pivot_val = cols[pj].iter().find(|&&(r, _)| r == pr).unwrap().1;
        let pivot = std::mem::take(&mut cols[pj]);
        col_done[pj] = true;
        for &(r, _) in &pivot {
            row_count[r] -= 1;
        }
        row_used[pr] = true;
        rank += 1;
        for j in 0..ncols {
            if col_done[j] {
                continue;
            }
            let Some(&(_, a)) = cols[j].iter().find(|&&(r, _)| r == pr) else {
                continue;
            };
            // pivot_val is +-1, so the multiplier is exact.
            let mult = a.checked_mul(pivot_val)?.checked_neg()?;
            let merged = merge_int(&cols[j], mult, &pivot)?;
            for &(r, _) in &cols[j] {
                row_count[r] -= 1;
            }
            for &(r, _) in &merged {
                row_count[r] += 1;
            }
            cols[j] = merged;
        }
    }

    // Dense residual on the unused rows.
    let mut live_rows: Vec<usize> = (0..nrows)
        .filter(|&r| !row_used[r] && row_count[r] > 0)
        .collect();
    live_rows.sort_unstable();
    let row_of: HashMap<usize, usize> =
        live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut dense: Vec<Vec<i128>> = Vec::new();
    for j in 0..ncols {
        if col_done[j] || cols[j].is_empty() {
            continue;
        }
        let mut row = vec![0i128; live_rows.len()];
        for &(r, v) in &cols[j] {
            row[row_of[&r]] = v as i128;
        }
        dense.push(row);
    }
    let residual = match bareiss_rank_i128(dense.clone()) {
        Some(r) => r,
        None => bareiss_rank_bigint(
            dense
                .iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        ),
    };
    Some(rank + residual)
}

/// target + mult * src over sorted sparse columns, dropping exact zeros.
fn merge_int(
    target: &[(usize, i64)],
    mult: i64,
    src: &[(usize, i64)],
) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        match (target.get(i), src.get(j)) {
            (Some(&(rt, vt)), Some(&(rs, vs))) if rt == rs => {
                let v = vt.checked_add(mult.checked_mul(vs)?)?;
                if v != 0 {
                    out.push((rt, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(rt, vt)), Some(&(rs, _))) if rt < rs => {
                out.push((rt, vt));
                i += 1;
            }
            (Some(_), Some(&(rs, vs))) => {
                out.push((rs, mult.checked_mul(vs)?));
                j += 1;
            }
            (Some(&(rt, vt)), None) => {
                out.push((rt, vt));
                i += 1;
            }
            (None, Some(&(rs, vs))) => {
                out.push((rs, mult.checked_mul(vs)?));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Some(out)
}

/// Fraction-free elimination with full pivoting; exact divisions throughout.
/// Returns `None` if an intermediate product leaves `i128`.
#[allow(clippy::needless_range_loop)] // the index pair is the pivot coordinate
fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    if m.is_empty() || m[0].is_empty() {
        return Some(0);
    }
    let (rows, cols) = (m.len(), m[0].len());
    let steps = rows.min(cols);
    let mut prev: i128 = 1;
    for k in 0..steps {
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if m[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return Some(k);
        };
        m.swap(k, pi);
        for row in &mut m {
            row.swap(k, pj);
        }
        let pk = m[k][k];
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = pk
                    .checked_mul(m[i][j])?
                    .checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = pk;
    }
    Some(steps)
}

#[allow(clippy::needless_range_loop)] // the index pair is the pivot coordinate
fn bareiss_rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let (rows, cols) = (m.len(), m[0].len());
    let steps = rows.min(cols);
    let mut prev = BigInt::one();
    for k in 0..steps {
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { return k };
        m.swap(k, pi);
        for row in &mut m {
            row.swap(k, pj);
        }
        let pk = m[k][k].clone();
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = &pk * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = pk;
    }
    steps
}

/// Exact-rank fallback: sparse elimination over the integers with arbitrary
/// pivots. Column updates scale by the pivot, which preserves rank, and each
/// column is reduced by its content to limit growth.
fn rank_sparse_bigint(int_cols: Vec<Vec<(usize, i64)>>) -> usize {
    let mut cols: Vec<Vec<(usize, BigInt)>> = int_cols
        .into_iter()
        .map(|col| col.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect())
        .collect();
    let ncols = cols.len();
    let mut col_done = vec![false; ncols];
    let mut rank = 0usize;
    loop {
        let mut best: Option<(usize, BigInt, usize, usize)> = None; // (nnz, |v|, col, row)
        for j in 0..ncols {
            if col_done[j] || cols[j].is_empty() {
                continue;
            }
            let nnz = cols[j].len();
            for &(r, ref v) in &cols[j] {
                let mag = v.abs();
                let better = match &best {
                    None => true,
                    Some((bn, bm, _, _)) => (nnz, &mag) < (*bn, bm),
                };
                if better {
                    best = Some((nnz, mag, j, r));
                }
            }
        }
        let Some((_, _, pj, pr)) = best else {
            return rank;
        };
        let pivot = std::mem::take(&mut cols[pj]);
        col_done[pj] = true;
        rank += 1;
        let pval = pivot.iter().find(|(r, _)| *r == pr).unwrap().1.clone();
        for j in 0..ncols {
            if col_done[j] {
                continue;
            }
            let Some(a) = cols[j]
                .iter()
                .find(|(r, _)| *r == pr)
                .map(|(_, v)| v.clone())
            else {
                continue;
            };
            let merged = merge_big(&cols[j], &pval, &a, &pivot);
            cols[j] = normalize_content(merged);
        }
    }
}

/// pval * target - a * src over sorted sparse columns.
fn merge_big(
    target: &[(usize, BigInt)],
    pval: &BigInt,
    a: &BigInt,
    src: &[(usize, BigInt)],
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        let rt = target.get(i).map(|e| e.0);
        let rs = src.get(j).map(|e| e.0);
        match (rt, rs) {
            (Some(rt), Some(rs)) if rt == rs => {
                let v = pval * &target[i].1 - a * &src[j].1;
                if !v.is_zero() {
                    out.push((rt, v));
                }
                i += 1;
                j += 1;
            }
            (Some(rt), Some(rs)) if rt < rs => {
                out.push((rt, pval * &target[i].1));
                i += 1;
            }
            (Some(_), Some(rs)) => {
                out.push((rs, -(a * &src[j].1)));
                j += 1;
            }
            (Some(rt), None) => {
                out.push((rt, pval * &target[i].1));
                i += 1;
            }
            (None, Some(rs)) => {
                out.push((rs, -(a * &src[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn normalize_content(col: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let mut g = BigInt::zero();
    for (_, v) in &col {
        g = g.gcd(v);
        if g.is_one() {
            return col;
        }
    }
    if g.is_zero() || g.is_one() {
        return col;
    }
    col.into_iter().map(|(r, v)| (r, v / &g)).collect()
}

/// Sparse elimination over the prime field `F_p`.
fn rank_mod_p(int_cols: Vec<Vec<(usize, i64)>>, nrows: usize, p: u32) -> usize {
    let p = p as u64;
    let mut cols: Vec<Vec<(usize, u64)>> = int_cols
        .into_iter()
        .map(|col| {
            col.into_iter()
                .filter_map(|(r, v)| {
                    let v = v.rem_euclid(p as i64) as u64;
                    (v != 0).then_some((r, v))
                })
                .collect()
        })
        .collect();
    let ncols = cols.len();
    let mut col_done = vec![false; ncols];
    let mut row_count = vec![0usize; nrows];
    for col in &cols {
        for &(r, _) in col {
            row_count[r] += 1;
        }
    }
    let mut rank = 0usize;
    loop {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for j in 0..ncols {
            if col_done[j] || cols[j].is_empty() {
                continue;
            }
            let nnz = cols[j].len();
            if let Some((bn, _, _, _)) = best {
                if nnz > bn {
                    continue;
                }
            }
            if let Some((rc, r)) = cols[j].iter().map(|&(r, _)| (row_count[r], r)).min() {
                if best.is_none_or(|(bn, br, _, _)| (nnz, rc) < (bn, br)) {
                    best = Some((nnz, rc, j, r));
                }
            }
        }
        let Some((_, _, pj, pr)) = best else {
            return rank;
        };
        let pivot = std::mem::take(&mut cols[pj]);
        col_done[pj] = true;
        for &(r, _) in &pivot {
            row_count[r] -= 1;
        }
        rank += 1;
        let pval = pivot.iter().find(|&&(r, _)| r == pr).unwrap().1;
        let pinv = mod_inverse(pval, p);
        for j in 0..ncols {
            if col_done[j] {
                continue;
            }
            let Some(&(_, a)) = cols[j].iter().find(|&&(r, _)| r == pr) else {
                continue;
            };
            let mult = p - a * pinv % p;
            let merged = merge_mod(&cols[j], mult % p, &pivot, p);
            for &(r, _) in &cols[j] {
                row_count[r] -= 1;
            }
            for &(r, _) in &merged {
                row_count[r] += 1;
            }
            cols[j] = merged;
        }
    }
}

fn merge_mod(
    target: &[(usize, u64)],
    mult: u64,
    src: &[(usize, u64)],
    p: u64,
) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        let rt = target.get(i).map(|e| e.0);
        let rs = src.get(j).map(|e| e.0);
        match (rt, rs) {
            (Some(rt), Some(rs)) if rt == rs => {
                let v = (target[i].1 + mult * src[j].1) % p;
                if v != 0 {
                    out.push((rt, v));
                }
                i += 1;
                j += 1;
            }
            (Some(rt), Some(rs)) if rt < rs => {
                out.push((rt, target[i].1));
                i += 1;
            }
            (Some(_), Some(rs)) => {
                let v = mult * src[j].1 % p;
                if v != 0 {
                    out.push((rs, v));
                }
                j += 1;
            }
            (Some(rt), None) => {
                out.push((rt, target[i].1));
                i += 1;
            }
            (None, Some(rs)) => {
                let v = mult * src[j].1 % p;
                if v != 0 {
                    out.push((rs, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
