use bsos::catalog::{builtin, builtin_source, catalog_names};
use bsos::format::{format_problem, parse_problem};
use bsos::Error;
use bsos_core::relaxation::assemble_raw;
use bsos_core::relaxation::remove_redundant;
use bsos_core::sdp_solver::{solve, SolveStatus, SolverOptions};
use bsos_core::RelaxationConfig;

/// (term count, degree, coefficient sum, constant term) per polynomial,
/// objective first, generators in order (bound generators excluded).
#[rustfmt::skip]
const CHECKSUMS: &[(&str, &[(usize, u32, f64, f64)])] = &[
    ("P4_2", &[(6, 2, 0.0, 0.0), (6, 2, 14.0, 0.0), (6, 2, 2.0, 0.0), (6, 2, 6.0, 0.0), (6, 2, 4.0, 0.0), (6, 2, 20.0, 0.0)]),
    ("P4_4", &[(4, 4, 0.0, 0.0), (6, 4, 14.0, 0.0), (6, 2, 2.0, 0.0), (6, 2, 6.0, 0.0), (6, 4, 4.0, 0.0), (6, 2, 20.0, 0.0)]),
    ("P4_6", &[(6, 6, 2.0, 0.0), (4, 2, 4.0, 0.0), (6, 2, 2.0, 0.0), (7, 4, 0.5, 2.5), (4, 4, 8.0, 0.0), (4, 3, 4.0, 0.0)]),
    ("P4_8", &[(6, 8, 2.0, 0.0), (4, 2, 4.0, 0.0), (6, 2, 2.0, 0.0), (7, 4, 0.5, 2.5), (4, 4, 8.0, 0.0), (4, 3, 4.0, 0.0)]),
    ("P6_2", &[(8, 2, 0.0, 0.0), (9, 2, 21.0, 0.0), (9, 2, 3.0, 0.0), (9, 2, 9.0, 0.0), (9, 2, 6.0, 0.0), (9, 2, 30.0, 0.0)]),
    ("P6_4", &[(8, 4, 0.0, 0.0), (9, 4, 15.0, 0.0), (9, 2, 0.0, 0.0), (9, 2, 9.0, 0.0), (9, 4, 3.0, 0.0), (9, 2, 30.0, 0.0)]),
    ("P6_6", &[(8, 6, 0.0, 0.0), (9, 6, 21.0, 0.0), (9, 2, 3.0, 0.0), (9, 2, 9.0, 0.0), (9, 6, 6.0, 0.0), (9, 2, 30.0, 0.0)]),
    ("P6_8", &[(8, 8, 0.0, 0.0), (9, 8, 21.0, 0.0), (9, 2, 3.0, 0.0), (9, 2, 9.0, 0.0), (9, 8, 6.0, 0.0), (9, 2, 30.0, 0.0)]),
    ("P8_2", &[(10, 2, 0.0, 0.0), (12, 2, 28.0, 0.0), (12, 2, 4.0, 0.0), (12, 2, 12.0, 0.0), (12, 2, 8.0, 0.0), (12, 2, 40.0, 0.0)]),
    ("P8_4", &[(10, 4, 0.0, 0.0), (12, 4, 28.0, 0.0), (12, 2, 4.0, 0.0), (12, 2, 12.0, 0.0), (12, 4, 8.0, 0.0), (12, 2, 40.0, 0.0)]),
    ("P8_6", &[(10, 6, 0.0, 0.0), (12, 6, 28.0, 0.0), (12, 2, 4.0, 0.0), (12, 2, 12.0, 0.0), (12, 6, 8.0, 0.0), (12, 2, 40.0, 0.0)]),
    ("P10_2", &[(12, 2, 0.0, 0.0), (15, 2, 35.0, 0.0), (15, 2, 5.0, 0.0), (15, 2, 15.0, 0.0), (15, 2, 10.0, 0.0), (15, 2, 50.0, 0.0)]),
    ("P10_4", &[(12, 4, 0.0, 0.0), (15, 4, 35.0, 0.0), (15, 2, 5.0, 0.0), (15, 2, 15.0, 0.0), (15, 4, 10.0, 0.0), (15, 2, 50.0, 0.0)]),
    ("P20_2", &[(22, 2, 0.0, 0.0), (29, 2, 70.0, 0.0), (29, 2, 10.0, 0.0), (29, 2, 30.0, 0.0), (29, 2, 20.0, 0.0), (29, 2, 100.0, 0.0)]),
    ("P20_4", &[(22, 4, 0.0, 0.0), (29, 2, 70.0, 0.0), (29, 2, 10.0, 0.0), (29, 2, 30.0, 0.0), (29, 2, 20.0, 0.0), (29, 2, 100.0, 0.0)]),
    ("C4_2", &[(7, 2, 4.0, 0.0), (5, 2, -5.0, 1.0), (5, 2, -5.0, 1.0), (5, 2, -8.75, 1.25), (5, 2, -8.75, 1.25), (5, 2, -8.9, 1.1)]),
    ("C4_4", &[(7, 4, 5.0, 0.0), (5, 4, -5.0, 1.0), (5, 4, -5.0, 1.0), (5, 4, -8.75, 1.25), (5, 4, -8.75, 1.25), (5, 4, -8.9, 1.1)]),
    ("C4_6", &[(7, 6, 5.333333333333333, 0.0), (5, 6, -5.0, 1.0), (5, 6, -5.0, 1.0), (5, 6, -8.75, 1.25), (5, 6, -8.75, 1.25), (5, 6, -8.9, 1.1)]),
    ("C6_2", &[(9, 2, 6.0, 0.0), (7, 2, -8.0, 1.0), (7, 2, -8.0, 1.0), (7, 2, -13.75, 1.25), (7, 2, -13.75, 1.25), (7, 2, -13.9, 1.1)]),
    ("C6_4", &[(9, 4, 7.0, 0.0), (7, 4, -8.0, 1.0), (7, 4, -8.0, 1.0), (7, 4, -13.75, 1.25), (7, 4, -13.75, 1.25), (7, 4, -13.9, 1.1)]),
    ("C6_6", &[(9, 6, 7.333333333333333, 0.0), (7, 6, -8.0, 1.0), (7, 6, -8.0, 1.0), (7, 6, -13.75, 1.25), (7, 6, -13.75, 1.25), (7, 6, -13.9, 1.1)]),
    ("C8_2", &[(11, 2, 8.0, 0.0), (9, 2, -11.0, 1.0), (9, 2, -11.0, 1.0), (9, 2, -18.75, 1.25), (9, 2, -18.75, 1.25), (9, 2, -18.9, 1.1)]),
    ("C8_4", &[(11, 4, 9.0, 0.0), (9, 4, -11.0, 1.0), (9, 4, -11.0, 1.0), (9, 4, -18.75, 1.25), (9, 4, -18.75, 1.25), (9, 4, -18.9, 1.1)]),
    ("C10_2", &[(13, 2, 10.0, 0.0), (11, 2, -14.0, 1.0), (11, 2, -14.0, 1.0), (11, 2, -23.75, 1.25), (11, 2, -23.75, 1.25), (11, 2, -23.9, 1.1)]),
    ("C10_4", &[(13, 4, 11.0, 0.0), (11, 4, -14.0, 1.0), (11, 4, -14.0, 1.0), (11, 4, -23.75, 1.25), (11, 4, -23.75, 1.25), (11, 4, -23.9, 1.1)]),
    ("C20_2", &[(23, 2, 20.0, 0.0), (21, 2, -29.0, 1.0), (21, 2, -29.0, 1.0), (21, 2, -48.75, 1.25), (21, 2, -48.75, 1.25), (21, 2, -48.9, 1.1)]),
    ("P1", &[(6, 2, 0.0, 0.0), (6, 2, 14.0, 0.0), (6, 2, 2.0, 0.0), (6, 2, 6.0, 0.0), (6, 2, 4.0, 0.0), (6, 2, 20.0, 0.0)]),
    ("P2", &[(3, 6, 1.0, 0.0), (2, 2, 2.0, 0.0), (3, 2, 1.0, 0.0), (4, 4, 1.5, 2.5), (2, 4, 4.0, 0.0), (2, 3, 2.0, 0.0)]),
    ("C1", &[(5, 4, 2.0, 0.0), (3, 4, -2.0, 1.0), (3, 4, -2.0, 1.0), (3, 4, -3.75, 1.25), (3, 4, -3.75, 1.25), (3, 4, -3.9, 1.1)]),
];

#[test]
fn every_entry_matches_its_checksums() {
    assert_eq!(CHECKSUMS.len(), catalog_names().len());
    for &(name, sums) in CHECKSUMS {
        let p = builtin(name).unwrap();
        let m = sums.len() - 1;
        assert_eq!(p.num_generators(), m + p.num_vars(), "{name}");
        let polys = std::iter::once(p.objective()).chain(p.generators()[..m].iter());
        for (j, (poly, &(terms, degree, sum, constant))) in polys.zip(sums).enumerate() {
            let c = poly.canonicalize();
            assert_eq!(c.terms().len(), terms, "{name} poly {j}");
            assert_eq!(c.degree(), degree, "{name} poly {j}");
            let s: f64 = c.terms().iter().map(|t| t.coeff).sum();
            assert!(
                (s - sum).abs() <= 1e-9 * (1.0 + sum.abs()),
                "{name} poly {j}: {s} vs {sum}"
            );
            let at_origin = c.evaluate(&vec![0.0; p.num_vars()]).unwrap();
            assert!((at_origin - constant).abs() <= 1e-12, "{name} poly {j}");
        }
    }
}

#[test]
fn bound_generators_are_appended() {
    for name in catalog_names() {
        let p = builtin(name).unwrap();
        let n = p.num_vars();
        let (_, listed) = builtin_source(name).unwrap();
        assert_eq!(p.num_generators(), listed.len() + n);
        for i in 0..n {
            let g = &p.generators()[listed.len() + i];
            let mut x = vec![0.3; n];
            x[i] = 0.7;
            assert_eq!(g.evaluate(&x).unwrap(), 0.7);
        }
    }
}

#[test]
fn p4_2_example() {
    let p = builtin("P4_2").unwrap();
    assert_eq!(p.num_vars(), 4);
    assert_eq!(p.num_generators(), 9);
    let f = p.objective();
    // x1² − x2² + x3² − x4² + x1 − x2 at (1, 2, 3, 4)
    assert!(
        (f.evaluate(&[1.0, 2.0, 3.0, 4.0]).unwrap() - (1.0 - 4.0 + 9.0 - 16.0 + 1.0 - 2.0)).abs()
            < 1e-12
    );
    assert!(p.generators()[..5].iter().all(|g| g.degree() == 2));
}

#[test]
fn c4_4_first_generator() {
    let p = builtin("C4_4").unwrap();
    assert_eq!(p.num_vars(), 4);
    let g1 = &p.generators()[0];
    // −x1⁴ − 2x2⁴ − x3⁴ − 2x4⁴ + 1 plus lower-degree terms vanish at the origin
    assert_eq!(g1.evaluate(&[0.0; 4]).unwrap(), 1.0);
    assert_eq!(g1.degree(), 4);
    let quartic: Vec<f64> = [[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]]
        .iter()
        .map(|e| {
            g1.terms()
                .iter()
                .find(|t| t.exponents == e.to_vec())
                .map_or(0.0, |t| t.coeff)
        })
        .collect();
    assert_eq!(quartic, vec![-1.0, -2.0, -1.0, -2.0]);
}

#[test]
fn names_are_case_insensitive_and_unknown_names_list_the_catalog() {
    assert_eq!(builtin("p4_2").unwrap(), builtin("P4_2").unwrap());
    match builtin("P99") {
        Err(Error::UnknownBuiltin { catalog, .. }) => {
            assert!(catalog.contains("P4_2") && catalog.contains("C20_2"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn every_builtin_round_trips_through_the_text_format() {
    for name in catalog_names() {
        let p = builtin(name).unwrap();
        assert_eq!(
            parse_problem(name, &format_problem(&p)).unwrap(),
            p,
            "{name}"
        );
    }
}

#[test]
fn p1_assembly_dimensions() {
    let inst = assemble_raw(&builtin("P1").unwrap(), &RelaxationConfig::bsos(1, 1)).unwrap();
    assert_eq!(inst.tau, 2);
    assert_eq!(inst.num_points(), 15);
    assert_eq!(inst.psd_size(), 5);
    // five constraints and four bounds
    assert_eq!(inst.num_pairs(), 19);
}

#[test]
fn p1_reduced_and_unreduced_agree() {
    let config = RelaxationConfig::bsos(1, 1);
    let raw = assemble_raw(&builtin("P1").unwrap(), &config).unwrap();
    let reduced = remove_redundant(raw.clone(), config.redundancy_tol);
    let a = solve(&raw, &SolverOptions::default());
    let b = solve(&reduced, &SolverOptions::default());
    assert_eq!(b.status, SolveStatus::Optimal);
    assert!(a.status.has_bound(), "{:?}", a.status);
    assert!(
        (a.bound - b.bound).abs() <= 1e-6,
        "{} vs {}",
        a.bound,
        b.bound
    );
}

#[test]
fn diagnostic_flags_upper_bounds_left_to_the_relaxation() {
    // the listed g_j <= 1 holds through the (1 − g_j) factors, not through K
    let report = builtin("P1").unwrap().scaling_diagnostic(20_000, 1.0, 3);
    assert!(report.feasible_samples > 0);
    assert!(!report.is_scaled());
    assert!(report.above_one[5..].iter().all(|&c| c == 0));
}
