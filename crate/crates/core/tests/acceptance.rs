//! Acceptance gate: six end-to-end criteria with exact integer expectations
//! and wall-clock budgets. Every criterion prints one PASS line (visible
//! under `cargo test --test acceptance -- --nocapture`); any deviation fails
//! the corresponding test.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hochster::arith::binomial_u128;
use hochster::betti::{betti_geq_k, closed_form_truncation_betti, hochster_betti};
use hochster::hilbert::{hilbert_numerator_geq_truncation, hilbert_numerator_monomial};
use hochster::invariants::{has_linear_resolution, k_index, min_linear_truncation};
use hochster::polarization::{betti_monomial, polarize};
use hochster::truncation::{f_vector_truncated, squarefree_truncate};
use hochster::{
    run_sweep, BettiTable, FieldChar, KIndex, Monomial, MonomialIdeal, SimplicialComplex,
    SweepConfig, VarSet,
};

fn ch(c: u64) -> FieldChar {
    FieldChar::new(c).unwrap()
}

fn example_ideal() -> MonomialIdeal {
    MonomialIdeal::parse("n=9\nx1*x2*x3\nx4*x5*x6*x7\nx1*x2*x4*x5*x8*x9\n").unwrap()
}

/// The complete intersection of `d`-th powers of all `n` variables.
fn powers(n: usize, d: u32) -> MonomialIdeal {
    let gens = (1..=n)
        .map(|v| {
            let mut exps = vec![0u32; n];
            exps[v - 1] = d;
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(n, gens).unwrap()
}

fn entries(b: &BettiTable) -> Vec<((usize, usize), u64)> {
    b.iter().collect()
}

/// Betti table of the quotient by the degree-`k` truncation, recovered from
/// the table and numerator of the original quotient.
fn geq_table(i: &MonomialIdeal, k: usize) -> BettiTable {
    let b = betti_monomial(i, ch(0)).unwrap();
    let nm = hilbert_numerator_monomial(i).unwrap();
    betti_geq_k(&b, &hilbert_numerator_geq_truncation(&nm, k), k).unwrap()
}

fn pass(criterion: usize, what: &str, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    if let Some(limit) = budget {
        assert!(
            elapsed < limit,
            "criterion {criterion} took {elapsed:.2?}, budget is {limit:?}"
        );
    }
    println!("criterion {criterion} ({what}): PASS in {elapsed:.2?}");
}

#[test]
fn criterion_1_nine_variable_example_end_to_end() {
    let started = Instant::now();
    let i = example_ideal();
    let f = i.stanley_reisner().unwrap().f_vector().unwrap();
    assert_eq!(f.entries(), &[1, 9, 36, 83, 119, 106, 53, 10]);

    let b = hochster_betti(&i, ch(0)).unwrap();
    assert_eq!(
        entries(&b),
        vec![
            ((0, 0), 1),
            ((1, 3), 1),
            ((1, 4), 1),
            ((1, 6), 1),
            ((2, 7), 2),
            ((2, 8), 1),
            ((3, 9), 1),
        ]
    );

    let t5 = squarefree_truncate(&i, 5).unwrap();
    let f5 = t5.stanley_reisner().unwrap().f_vector().unwrap();
    assert_eq!(f5.entries(), &[1, 9, 36, 84, 126, 106, 53, 10]);
    assert_eq!(f_vector_truncated(&f, 9, 4), f5);

    let expected_t5 = vec![
        ((0, 0), 1),
        ((1, 5), 20),
        ((1, 6), 1),
        ((2, 6), 50),
        ((2, 7), 2),
        ((2, 8), 1),
        ((3, 7), 55),
        ((3, 9), 1),
        ((4, 8), 29),
        ((5, 9), 6),
    ];
    let closed = closed_form_truncation_betti(&b, &f5, 9, 5).unwrap();
    assert_eq!(entries(&closed), expected_t5);
    let oracle = hochster_betti(&t5, ch(0)).unwrap();
    assert_eq!(entries(&oracle), expected_t5);

    assert_eq!(min_linear_truncation(&i, ch(0)).unwrap(), 7);
    pass(
        1,
        "nine-variable example end-to-end",
        started,
        Some(Duration::from_secs(5)),
    );
}

#[test]
fn criterion_2_eight_squares_degree_five_truncation() {
    let started = Instant::now();
    let i = powers(8, 2);
    let nm = hilbert_numerator_monomial(&i).unwrap();
    let n5 = hilbert_numerator_geq_truncation(&nm, 5);
    assert_eq!(
        n5.to_string(),
        "1 - 736t^5 + 4200t^6 - 10528t^7 + 14910t^8 - 12832t^9 + 6720t^10 \
         - 2016t^11 + 288t^12 - 8t^14 + t^16"
    );

    let b = betti_monomial(&i, ch(0)).unwrap();
    let table = betti_geq_k(&b, &n5, 5).unwrap();
    assert_eq!(
        entries(&table),
        vec![
            ((0, 0), 1),
            ((1, 5), 736),
            ((2, 6), 4200),
            ((3, 7), 10528),
            ((4, 8), 14910),
            ((5, 9), 12832),
            ((5, 10), 56),
            ((6, 10), 6776),
            ((6, 12), 28),
            ((7, 11), 2016),
            ((7, 14), 8),
            ((8, 12), 260),
            ((8, 16), 1),
        ]
    );
    pass(
        2,
        "eight squares truncated at degree five",
        started,
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_3_polarization_carries_the_table_and_linearity() {
    let started = Instant::now();
    let mixed = MonomialIdeal::parse("n=3\nx1^3\nx2^4\nx1^2*x2^2*x3^2\n").unwrap();
    let p = polarize(&mixed).unwrap();
    assert_eq!(p.ideal(), &example_ideal());

    // The polarized quotient shares its graded Betti numbers with the source.
    let b_mixed = betti_monomial(&mixed, ch(0)).unwrap();
    let b_example = hochster_betti(&example_ideal(), ch(0)).unwrap();
    assert_eq!(entries(&b_mixed), entries(&b_example));

    // Degree truncations of the source turn linear exactly when squarefree
    // truncations of the polarization do, at the regularity.
    let nm = hilbert_numerator_monomial(&mixed).unwrap();
    let f = example_ideal()
        .stanley_reisner()
        .unwrap()
        .f_vector()
        .unwrap();
    for k in 5..=8usize {
        let geq = betti_geq_k(&b_mixed, &hilbert_numerator_geq_truncation(&nm, k), k).unwrap();
        let via_geq = has_linear_resolution(&geq, k);
        let fk = f_vector_truncated(&f, 9, k - 1);
        let sqf = closed_form_truncation_betti(&b_example, &fk, 9, k).unwrap();
        let via_sqf = has_linear_resolution(&sqf, k);
        assert_eq!(via_geq, k >= 7, "degree truncation at k={k}");
        assert_eq!(via_sqf, k >= 7, "squarefree truncation at k={k}");
    }
    pass(3, "polarization carries table and linearity", started, None);
}

#[test]
fn criterion_4_complete_intersection_indices_and_thresholds() {
    let started = Instant::now();
    let sq3 = powers(3, 2);
    for k in 2..=3usize {
        assert_eq!(
            k_index(&geq_table(&sq3, k), k),
            KIndex::Finite(k - 1),
            "k={k}"
        );
    }
    for k in 4..=5usize {
        assert_eq!(k_index(&geq_table(&sq3, k), k), KIndex::Infinite, "k={k}");
    }

    for (n, d) in [(2usize, 3u32), (3, 2), (3, 3)] {
        let i = powers(n, d);
        let dd = d as usize;
        let threshold = n * dd - n + 1;
        for k in dd..=n * (dd - 1) + 1 {
            let table = geq_table(&i, k);
            assert_eq!(
                has_linear_resolution(&table, k),
                k >= threshold,
                "(n,d)=({n},{d}), k={k}"
            );
            // Every entry is the corner, on the linear diagonal, or a
            // surviving Koszul entry of value C(n, r) at (r, d*r).
            for ((bi, bj), v) in table.iter() {
                if (bi, bj) == (0, 0) {
                    continue;
                }
                let linear = bj == k + bi - 1;
                let koszul = bj == dd * bi && bi * (dd - 1) > k - 1;
                assert!(
                    linear || koszul,
                    "(n,d)=({n},{d}), k={k}: stray entry at ({bi},{bj})"
                );
                if koszul {
                    assert_eq!(v, binomial_u128(n, bi) as u64, "(n,d)=({n},{d}), k={k}");
                }
            }
            // All Koszul survivors are present, not just correct when present.
            for r in 1..=n {
                if r * (dd - 1) > k - 1 {
                    assert_eq!(table.entry(r, dd * r), binomial_u128(n, r) as u64);
                }
            }
        }
    }
    pass(
        4,
        "complete intersection indices and thresholds",
        started,
        None,
    );
}

#[test]
fn criterion_5_randomized_sweep_across_sizes() {
    let started = Instant::now();
    for n in 4..=8usize {
        let cfg = SweepConfig {
            vars: n,
            trials: 200,
            seed: n as u64 * 101 + 7,
            min_degree: 2,
            max_degree: 3,
            generators: 4,
            ch: ch(0),
        };
        let report = run_sweep(&cfg).unwrap();
        assert_eq!(report.trials(), 200);
        for &(label, passes) in report.lines() {
            assert_eq!(passes, 200, "n={n}: {label}");
        }
    }
    pass(
        5,
        "randomized sweep across sizes",
        started,
        Some(Duration::from_secs(600)),
    );
}

#[test]
fn criterion_6_homology_engine_sanity() {
    let started = Instant::now();
    let vs = |vars: &[usize]| VarSet::from_indices(vars.iter().copied());

    let triangle =
        SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]).unwrap();
    assert_eq!(
        hochster::homology::reduced_homology_dims(&triangle, ch(0)).unwrap(),
        vec![0, 0, 1]
    );

    let rp2 = SimplicialComplex::from_facets(
        6,
        [
            vs(&[1, 2, 4]),
            vs(&[1, 2, 6]),
            vs(&[1, 3, 4]),
            vs(&[1, 3, 5]),
            vs(&[1, 5, 6]),
            vs(&[2, 3, 5]),
            vs(&[2, 3, 6]),
            vs(&[2, 4, 5]),
            vs(&[3, 4, 6]),
            vs(&[4, 5, 6]),
        ],
    )
    .unwrap();
    assert_eq!(
        hochster::homology::reduced_homology_dims(&rp2, ch(0)).unwrap(),
        vec![0, 0, 0, 0]
    );
    assert_eq!(
        hochster::homology::reduced_homology_dims(&rp2, ch(2)).unwrap(),
        vec![0, 0, 1, 1]
    );

    // Any complex coned over a fresh apex is acyclic.
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for trial in 0..50 {
        let n = rng.gen_range(2..=7usize);
        let facet_count = rng.gen_range(1..=6usize);
        let apex = 1u32 << (n - 1);
        let facets: Vec<VarSet> = (0..facet_count)
            .map(|_| VarSet::from_mask(rng.gen_range(0..1u32 << (n - 1)) | apex))
            .collect();
        let cone = SimplicialComplex::from_facets(n, facets).unwrap();
        let dims = hochster::homology::reduced_homology_dims(&cone, ch(0)).unwrap();
        assert!(dims.iter().all(|&h| h == 0), "trial {trial}: {dims:?}");
    }
    pass(6, "homology engine sanity", started, None);
}
