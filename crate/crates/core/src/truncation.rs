//! Truncations of monomial ideals.
//!
//! Two flavours: `truncate_geq` keeps everything of degree at least `k`
//! (intersection with the `k`-th power of the maximal ideal), while
//! `squarefree_truncate` keeps the squarefree monomials of degree at least
//! `k`. Both are computed in one shot by padding generators, not by
//! iterating a degree at a time; the step recurrences on facets and
//! f-vectors are provided separately so they can be checked against the
//! from-scratch constructions.

use itertools::Itertools;

use crate::arith::binomial_u128;
use crate::complex::FVector;
use crate::error::{Error, Result};
use crate::ideal::{monomials_of_degree, MonomialIdeal};
use crate::monomial::{Monomial, VarSet};

/// The ideal of all elements of `ideal` of degree at least `k`.
///
/// Generators of degree below `k` are padded by every monomial of the
/// complementary degree and the union is minimalized. Exponential in the
/// padding degree, but exact.
pub fn truncate_geq(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    let n = ideal.ambient_vars();
    let mut gens = Vec::new();
    for g in ideal.generators() {
        let d = g.degree();
        if d >= k {
            gens.push(g.clone());
        } else {
            for pad in monomials_of_degree(n, k - d)? {
                gens.push(g.mul(&pad));
            }
        }
    }
    MonomialIdeal::new(n, gens)
}

/// The ideal generated by the squarefree monomials of `ideal` of degree at
/// least `k`. Requires a squarefree input; returns the zero ideal when no
/// squarefree element of degree `k` or more exists (in particular whenever
/// `k` exceeds the number of variables).
pub fn squarefree_truncate(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::input(
            "squarefree truncation needs a squarefree ideal",
        ));
    }
    let n = ideal.ambient_vars();
    let mut gens = Vec::new();
    for g in ideal.generators() {
        let d = g.degree();
        if d >= k {
            gens.push(g.clone());
        } else {
            let free: Vec<usize> = g.support().complement(n).iter().collect();
            for pad in free.iter().combinations(k - d) {
                let s = VarSet::from_indices(pad.into_iter().copied());
                gens.push(g.mul_vars(s));
            }
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Supports of the squarefree degree-`k` monomials that stay outside the
/// degree-`k` truncation. These are exactly the `k`-element faces of the
/// complex of the truncated ideal.
pub fn j_set(ideal: &MonomialIdeal, k: usize) -> Result<Vec<VarSet>> {
    let truncated = squarefree_truncate(ideal, k)?;
    let n = ideal.ambient_vars();
    if k > n {
        return Ok(Vec::new());
    }
    if binomial_u128(n, k) > crate::limits::max_enumeration() as u128 {
        return Err(Error::resource(format!(
            "enumerating {} of {} variable subsets exceeds the enumeration limit",
            k, n
        )));
    }
    let mut out: Vec<VarSet> = (1..=n)
        .combinations(k)
        .map(VarSet::from_indices)
        .filter(|&w| !truncated.contains(&Monomial::squarefree(n, w)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Facets of the complex of the degree-`k+1` truncation, assembled from the
/// degree-`k` truncation alone: the supports of its degree-`k` generators
/// together with its facets of cardinality at least `k`. The two parts are
/// automatically disjoint and jointly inclusion-free.
pub fn facets_after_truncation(ideal: &MonomialIdeal, k: usize) -> Result<Vec<VarSet>> {
    let Some(min_deg) = ideal.min_degree() else {
        return Err(Error::input(
            "facet recurrence needs an ideal with generators",
        ));
    };
    if ideal.is_unit() {
        return Err(Error::input("facet recurrence needs a proper ideal"));
    }
    if k < min_deg {
        return Err(Error::input(format!(
            "facet recurrence needs k at least the minimal generator degree {min_deg}, got {k}"
        )));
    }
    let n = ideal.ambient_vars();
    if k > n {
        // Past the variable count both truncations are zero, so the next
        // complex is the full simplex.
        return Ok(vec![VarSet::full(n)]);
    }
    let truncated = squarefree_truncate(ideal, k)?;
    let mut facets: Vec<VarSet> = truncated
        .generators()
        .iter()
        .filter(|g| g.degree() == k)
        .map(|g| g.support())
        .collect();
    let cx = truncated.stanley_reisner()?;
    facets.extend(cx.facets().iter().copied().filter(|f| f.card() >= k));
    facets.sort_unstable();
    Ok(facets)
}

/// f-vector of the complex of the degree-`k+1` truncation, from the
/// f-vector of the original complex on `n` vertices: every cardinality up
/// to `min(k, n)` is the full binomial count, higher cardinalities are
/// untouched.
pub fn f_vector_truncated(f: &FVector, n: usize, k: usize) -> FVector {
    let cap = k.min(n);
    let top = cap.max(f.len().saturating_sub(1));
    FVector::new(
        (0..=top)
            .map(|r| {
                if r <= cap {
                    binomial_u128(n, r) as u64
                } else {
                    f.entry(r)
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_ideal;
    use crate::ideal::monomials_of_degree;
    use crate::SimplicialComplex;
    use itertools::Itertools;

    #[test]
    fn low_k_leaves_ideals_unchanged() {
        let i = example_ideal();
        for k in 0..=3 {
            assert_eq!(truncate_geq(&i, k).unwrap(), i);
            assert_eq!(squarefree_truncate(&i, k).unwrap(), i);
        }
        let j = MonomialIdeal::parse("n=3\nx1^2*x2\nx3^3").unwrap();
        assert_eq!(truncate_geq(&j, 3).unwrap(), j);
    }

    #[test]
    fn truncation_membership_matches_degree_filter() {
        let i = MonomialIdeal::parse("n=3\nx1^2\nx2*x3").unwrap();
        let t = truncate_geq(&i, 3).unwrap();
        for d in 0..=6usize {
            for m in monomials_of_degree(3, d).unwrap() {
                assert_eq!(
                    t.contains(&m),
                    i.contains(&m) && m.degree() >= 3,
                    "degree {d}, monomial {m}"
                );
            }
        }
    }

    #[test]
    fn truncating_the_unit_ideal_gives_a_power_of_the_maximal_ideal() {
        let one = MonomialIdeal::unit(2);
        let t = truncate_geq(&one, 3).unwrap();
        let expected = MonomialIdeal::new(2, monomials_of_degree(2, 3).unwrap()).unwrap();
        assert_eq!(t, expected);
        assert_eq!(t.generators().len(), 4);
    }

    #[test]
    fn truncating_the_zero_ideal_is_zero() {
        let z = MonomialIdeal::zero(4);
        assert!(truncate_geq(&z, 5).unwrap().is_zero());
        assert!(squarefree_truncate(&z, 2).unwrap().is_zero());
    }

    #[test]
    fn squared_generators_truncated_to_degree_five() {
        let gens: Vec<Monomial> = (1..=8)
            .map(|v| {
                let x = Monomial::variable(8, v);
                x.mul(&x)
            })
            .collect();
        let i = MonomialIdeal::new(8, gens).unwrap();
        let t = truncate_geq(&i, 5).unwrap();
        assert!(t.generators().iter().all(|g| g.degree() == 5));
        assert!(t
            .generators()
            .iter()
            .all(|g| (1..=8).any(|v| g.exponent(v) >= 2)));
        for m in monomials_of_degree(8, 5).unwrap() {
            assert_eq!(t.contains(&m), i.contains(&m));
        }
    }

    #[test]
    fn squarefree_truncation_needs_squarefree_input() {
        let i = MonomialIdeal::parse("n=2\nx1^2").unwrap();
        assert!(squarefree_truncate(&i, 2).is_err());
    }

    #[test]
    fn squarefree_truncation_past_the_variable_count_is_zero() {
        let i = MonomialIdeal::parse("n=3\nx1*x2").unwrap();
        assert!(squarefree_truncate(&i, 4).unwrap().is_zero());
    }

    #[test]
    fn example_truncated_to_degree_five_has_known_f_vector() {
        let t = squarefree_truncate(&example_ideal(), 5).unwrap();
        assert!(t.generators().iter().all(|g| g.is_squarefree()));
        assert_eq!(t.min_degree(), Some(5));
        let f = t.stanley_reisner().unwrap().f_vector().unwrap();
        assert_eq!(f.entries(), &[1, 9, 36, 84, 126, 106, 53, 10]);
    }

    #[test]
    fn squarefree_truncation_is_idempotent_and_nested() {
        let i = example_ideal();
        let n = i.ambient_vars();
        for k in 3..=7 {
            let t = squarefree_truncate(&i, k).unwrap();
            assert_eq!(squarefree_truncate(&t, k).unwrap(), t);
            let next = squarefree_truncate(&i, k + 1).unwrap();
            // Higher truncations sit inside lower ones.
            for g in next.generators() {
                assert!(t.contains(g), "k={k}: {g} escaped");
            }
            // Membership for squarefree monomials is degree-filtered membership.
            for d in 0..=n {
                for w in (1..=n).combinations(d) {
                    let m = Monomial::squarefree(n, VarSet::from_indices(w));
                    assert_eq!(t.contains(&m), i.contains(&m) && m.degree() >= k);
                }
            }
        }
    }

    #[test]
    fn j_set_below_minimal_degree_is_everything() {
        let i = example_ideal();
        let js = j_set(&i, 2).unwrap();
        assert_eq!(js.len(), 36);
    }

    #[test]
    fn j_set_lists_the_k_faces_of_the_truncated_complex() {
        let i = example_ideal();
        for k in 3..=6 {
            let t = squarefree_truncate(&i, k).unwrap();
            let faces = t.stanley_reisner().unwrap().faces_by_card().unwrap();
            let expected: Vec<VarSet> = faces
                .get(k)
                .map(|layer| layer.iter().map(|&m| VarSet::from_mask(m)).collect())
                .unwrap_or_default();
            assert_eq!(j_set(&i, k).unwrap(), expected, "k={k}");
        }
    }

    #[test]
    fn next_truncation_candidates_are_top_faces_of_the_current_complex() {
        // The squarefree degree k+1 monomials surviving the next truncation
        // are exactly the k-dimensional faces of the current complex.
        let i = example_ideal();
        for k in 3..=6usize {
            let t = squarefree_truncate(&i, k).unwrap();
            let faces = t.stanley_reisner().unwrap().faces_by_card().unwrap();
            let expected: Vec<VarSet> = faces
                .get(k + 1)
                .map(|layer| layer.iter().map(|&m| VarSet::from_mask(m)).collect())
                .unwrap_or_default();
            assert_eq!(j_set(&i, k + 1).unwrap(), expected, "k={k}");
        }
    }

    #[test]
    fn facet_recurrence_matches_from_scratch_construction() {
        let i = example_ideal();
        for k in 3..=7usize {
            let got = facets_after_truncation(&i, k).unwrap();
            let direct = squarefree_truncate(&i, k + 1)
                .unwrap()
                .stanley_reisner()
                .unwrap();
            assert_eq!(got, direct.facets(), "k={k}");
            // Inclusion-free by construction.
            for (a, fa) in got.iter().enumerate() {
                for (b, fb) in got.iter().enumerate() {
                    assert!(a == b || !fa.is_subset_of(*fb));
                }
            }
        }
    }

    #[test]
    fn facet_recurrence_first_step_for_equigenerated_ideals() {
        let i = MonomialIdeal::parse("n=4\nx1*x2\nx3*x4").unwrap();
        let got = facets_after_truncation(&i, 2).unwrap();
        let cx = i.stanley_reisner().unwrap();
        let mut expected: Vec<VarSet> = i.generators().iter().map(|g| g.support()).collect();
        expected.extend(cx.facets().iter().copied().filter(|f| f.card() >= 2));
        expected.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn facet_recurrence_rejects_low_k_and_degenerate_ideals() {
        let i = example_ideal();
        assert!(facets_after_truncation(&i, 2).is_err());
        assert!(facets_after_truncation(&MonomialIdeal::zero(3), 1).is_err());
        assert!(facets_after_truncation(&MonomialIdeal::unit(3), 0).is_err());
    }

    #[test]
    fn iterated_facet_recurrence_reaches_the_known_f_vector() {
        let i = example_ideal();
        let mut current = i.clone();
        for k in 3..=4usize {
            let facets = facets_after_truncation(&current, k).unwrap();
            let cx = SimplicialComplex::from_facets(9, facets).unwrap();
            current = cx.to_ideal().unwrap();
        }
        let f = current.stanley_reisner().unwrap().f_vector().unwrap();
        assert_eq!(f.entries(), &[1, 9, 36, 84, 126, 106, 53, 10]);
        assert_eq!(current, squarefree_truncate(&i, 5).unwrap());
    }

    #[test]
    fn f_vector_step_matches_known_example() {
        let f = FVector::new(vec![1, 9, 36, 83, 119, 106, 53, 10]);
        let stepped = f_vector_truncated(&f, 9, 4);
        assert_eq!(stepped.entries(), &[1, 9, 36, 84, 126, 106, 53, 10]);
    }

    #[test]
    fn f_vector_step_past_the_dimension_is_pure_binomial() {
        let f = FVector::new(vec![1, 4, 3]);
        let stepped = f_vector_truncated(&f, 4, 3);
        assert_eq!(stepped.entries(), &[1, 4, 6, 4]);
        let capped = f_vector_truncated(&f, 4, 9);
        assert_eq!(capped.entries(), &[1, 4, 6, 4, 1]);
    }

    #[test]
    fn f_vector_step_agrees_with_truncated_complex() {
        let i = example_ideal();
        let f = i.stanley_reisner().unwrap().f_vector().unwrap();
        for k in 3..=7usize {
            let direct = squarefree_truncate(&i, k + 1)
                .unwrap()
                .stanley_reisner()
                .unwrap()
                .f_vector()
                .unwrap();
            let stepped = f_vector_truncated(&f, 9, k);
            assert_eq!(stepped, direct, "k={k}");
        }
    }
}
