//! Acceptance suite: one test per release criterion, each asserting exact
//! values and an upper bound on wall-clock time. Run with
//! `cargo test -p autmg --test acceptance` (add `-- --nocapture` to see the
//! per-criterion PASS lines).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num::{BigInt, Zero};

use autmg::cli;
use autmg::closedforms;
use autmg::exactnum::{frac, rat, Polynomial, Rational};
use autmg::genfun;
use autmg::oracle::{self, SearchBudget};
use autmg::recurrence::{self, IjMemo};

fn timed<F: FnOnce()>(limit: Duration, label: &str, body: F) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    assert!(
        elapsed < limit,
        "{label} took {elapsed:?}, limit {limit:?}"
    );
    println!("PASS {label} ({elapsed:?})");
}

fn parse_rat(v: &serde_json::Value) -> Rational {
    let num: BigInt = v["num"].as_str().unwrap().parse().unwrap();
    let den: BigInt = v["den"].as_str().unwrap().parse().unwrap();
    frac(num, den)
}

fn run_json(args: &[&str]) -> serde_json::Value {
    let out = cli::run(args.iter().map(|s| s.to_string()));
    assert_eq!(out.exit_code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

/// The tabulated exponential-sum formulas for n = 1..4 as (coefficient, base)
/// pairs, bases increasing.
fn tabulated_formulas() -> Vec<(u32, Vec<(Rational, u64)>)> {
    vec![
        (1, vec![(rat(1), 1)]),
        (2, vec![(frac(-1, 2), 2), (rat(1), 4)]),
        (3, vec![(frac(3, 4), 3), (frac(-25, 8), 5), (frac(27, 8), 9)]),
        (
            4,
            vec![
                (rat(-2), 4),
                (frac(27, 2), 6),
                (rat(-8), 8),
                (frac(-250, 12), 10),
                (frac(64, 3), 16),
            ],
        ),
    ]
}

/// The tabulated generating functions for n = 1..4 as (numerator, poles).
fn tabulated_genfuns() -> Vec<(u32, Polynomial, Vec<u64>)> {
    vec![
        (1, Polynomial::one(), vec![1]),
        (2, Polynomial::new(vec![frac(1, 2)]), vec![2, 4]),
        (3, Polynomial::one(), vec![3, 5, 9]),
        (4, Polynomial::from_ints(&[4, -34]), vec![4, 6, 8, 10, 16]),
    ]
}

#[test]
fn criterion_01_tabulated_formulas_and_genfuns() {
    timed(Duration::from_secs(1), "criterion 1: closed-form table for n = 1..4", || {
        for (n, expected_terms) in tabulated_formulas() {
            // library route
            let f = genfun::zn_to_expsum(n).unwrap();
            let got: Vec<(Rational, u64)> = f
                .terms()
                .iter()
                .map(|t| (t.coefficient.clone(), t.base))
                .collect();
            assert_eq!(got, expected_terms, "formula for n = {n}");
            // CLI emission, compared as rational data
            let doc = run_json(&["autmg", "formula", "--n", &n.to_string(), "--format", "json"]);
            let emitted: Vec<(Rational, u64)> = doc["terms"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| (parse_rat(&t["coefficient"]), t["base"].as_u64().unwrap()))
                .collect();
            assert_eq!(emitted, expected_terms, "emitted formula for n = {n}");
        }
        for (n, expected_num, expected_poles) in tabulated_genfuns() {
            let z = genfun::zn_ratfun(n).unwrap();
            assert_eq!(z.numerator(), &expected_num, "numerator for n = {n}");
            assert_eq!(z.poles(), &expected_poles[..], "poles for n = {n}");
            let doc = run_json(&["autmg", "genfun", "--n", &n.to_string(), "--format", "json"]);
            let emitted_num = Polynomial::new(
                doc["numerator"].as_array().unwrap().iter().map(parse_rat).collect(),
            );
            let emitted_poles: Vec<u64> = doc["poles"]
                .as_array()
                .unwrap()
                .iter()
                .map(|p| p.as_u64().unwrap())
                .collect();
            assert_eq!(emitted_num, expected_num, "emitted numerator for n = {n}");
            assert_eq!(emitted_poles, expected_poles, "emitted poles for n = {n}");
        }
    });
}

#[test]
fn criterion_02_polynomial_and_ratfun_lists() {
    timed(Duration::from_secs(5), "criterion 2: listed P_1..P_7 and Z_1..Z_6", || {
        let expected_p: Vec<Vec<(usize, i64)>> = vec![
            vec![(0, 1)],
            vec![(0, -1), (1, 1)],
            vec![(0, 2), (1, -3), (3, 1)],
            vec![(0, -6), (1, 12), (2, -3), (3, -4), (6, 1)],
            vec![(0, 24), (1, -60), (2, 30), (3, 20), (4, -10), (6, -5), (10, 1)],
            vec![
                (0, -120),
                (1, 360),
                (2, -270),
                (3, -90),
                (4, 120),
                (6, 20),
                (7, -15),
                (10, -6),
                (15, 1),
            ],
            vec![
                (0, 720),
                (1, -2520),
                (2, 2520),
                (3, 210),
                (4, -1260),
                (5, 210),
                (6, -70),
                (7, 210),
                (9, -35),
                (10, 42),
                (11, -21),
                (15, -7),
                (21, 1),
            ],
        ];
        for (n, terms) in (1u32..).zip(&expected_p) {
            let mut coeffs = vec![Rational::zero(); terms.last().unwrap().0 + 1];
            for &(d, c) in terms {
                coeffs[d] = rat(c);
            }
            let expected = Polynomial::new(coeffs);
            assert_eq!(genfun::pn_poly(n).unwrap().poly, expected, "P_{n}");
        }
        // P_7 spot checks: 13 terms, leading z^21
        let p7 = genfun::pn_poly(7).unwrap().poly;
        assert_eq!(p7.coeffs().iter().filter(|c| !c.is_zero()).count(), 13);
        assert_eq!(p7.degree(), 21);

        let expected_z: Vec<(Polynomial, Vec<u64>)> = vec![
            (Polynomial::one(), vec![1]),
            (Polynomial::new(vec![frac(1, 2)]), vec![2, 4]),
            (Polynomial::one(), vec![3, 5, 9]),
            (Polynomial::from_ints(&[4, -34]), vec![4, 6, 8, 10, 16]),
            (
                Polynomial::from_ints(&[25, -606, 3557]),
                vec![5, 7, 9, 11, 13, 17, 25],
            ),
            (
                // 24 * (9 - 451t + 7292t^2 - 37860t^3)
                Polynomial::from_ints(&[216, -10824, 175008, -908640]),
                vec![6, 8, 10, 12, 14, 18, 20, 26, 36],
            ),
        ];
        for (n, (num, poles)) in (1u32..).zip(&expected_z) {
            let z = genfun::zn_ratfun(n).unwrap();
            assert_eq!(z.numerator(), num, "Z_{n} numerator");
            assert_eq!(z.poles(), &poles[..], "Z_{n} poles");
        }
    });
}

#[test]
fn criterion_03_oracle_cross_validation() {
    timed(Duration::from_secs(60), "criterion 3: enumeration vs recurrence, n + k <= 6", || {
        let budget = SearchBudget::default();
        let mut memo = IjMemo::new();
        for n in 1..=6u32 {
            for k in 0..=(6 - n) {
                let direct = oracle::oracle_i(n, k, &budget).unwrap();
                let via_recurrence = memo.compute_i(n as i64, k as i64);
                assert_eq!(direct, via_recurrence, "I({n},{k})");
            }
        }
        assert_eq!(memo.compute_i(2, 2), frac(7, 12));
        assert_eq!(memo.compute_i(4, 0), frac(2, 3));
    });
}

#[test]
fn criterion_04_fixed_cyclomatic_closed_forms() {
    timed(Duration::from_secs(1), "criterion 4: tree and unicyclic closed forms", || {
        let mut memo = IjMemo::new();
        for n in 1..=12u32 {
            let expected_j0 = autmg::exactnum::int_pow(n as u64, n as i64 - 3);
            assert_eq!(memo.compute_j(n as i64, 0), expected_j0, "J({n},0)");
            assert_eq!(
                closedforms::dziobek_t(n),
                BigInt::from(n).pow(n.saturating_sub(2)),
                "T({n})"
            );
        }
        let prefix = [1i64, 3, 17, 142, 1569];
        for n in 1..=8u32 {
            let u = closedforms::unicyclic_j(n);
            assert_eq!(u, memo.compute_j(n as i64, 1), "J({n},1)");
            if (n as usize) <= prefix.len() {
                assert_eq!(u, rat(prefix[n as usize - 1]), "prefix at n = {n}");
            }
        }
    });
}

#[test]
fn criterion_05_four_route_agreement() {
    timed(Duration::from_secs(10), "criterion 5: four routes to J agree, n <= 6, k <= 12", || {
        let mut memo = IjMemo::new();
        for n in 1..=6u32 {
            let series = genfun::zn_ratfun(n).unwrap().expand(12);
            let formula = genfun::zn_to_expsum(n).unwrap();
            for k in 0..=12u32 {
                let via_j_recurrence = memo.compute_j(n as i64, k as i64);
                let via_series = series.coeff(k as usize);
                let via_formula = formula.eval(k as i64);
                let via_normalized_i = rat(recurrence::normalization_factor(n, k))
                    * memo.compute_i(n as i64, k as i64);
                assert_eq!(via_series, via_j_recurrence, "series route at ({n},{k})");
                assert_eq!(via_formula, via_j_recurrence, "formula route at ({n},{k})");
                assert_eq!(
                    via_normalized_i, via_j_recurrence,
                    "normalized I route at ({n},{k})"
                );
            }
        }
    });
}

#[test]
fn criterion_06_two_variable_generating_function() {
    timed(Duration::from_secs(10), "criterion 6: two-variable and composition-series routes", || {
        let table = recurrence::build_table(5, 6);
        let gf = genfun::bivariate_gf_i(5, 6).unwrap();
        for n in 1..=5u32 {
            for k in 0..=6u32 {
                assert_eq!(gf[&(n, k)], *table.i(n, k), "gf route at I({n},{k})");
            }
        }
        for n in 1..=5u32 {
            let r = genfun::rn_series(n, 6).unwrap();
            for k in 0..=6u32 {
                assert_eq!(r.coeff(k as usize), *table.i(n, k), "series route at I({n},{k})");
            }
        }
        // the n = 1 series is exp(x/2)
        let r1 = genfun::rn_series(1, 3).unwrap();
        assert_eq!(
            r1.coeffs(),
            &[rat(1), frac(1, 2), frac(1, 8), frac(1, 48)]
        );
    });
}

#[test]
fn criterion_07_vanishing_window() {
    timed(Duration::from_secs(5), "criterion 7: formulas vanish at -(n-1)..-1, n = 2..8", || {
        for n in 2..=8u32 {
            let f = genfun::zn_to_expsum(n).unwrap();
            for k in 1..n as i64 {
                assert_eq!(f.eval(-k), rat(0), "J-formula for n = {n} at k = -{k}");
            }
        }
    });
}

#[test]
fn criterion_08_abel_identity() {
    timed(Duration::from_secs(1), "criterion 8: Abel-type identity on 1..10 x 0..10", || {
        for n in 1..=10 {
            for j in 0..=10 {
                assert!(closedforms::abel_check(n, j), "(n,j) = ({n},{j})");
            }
        }
    });
}

#[test]
fn criterion_09_connected_graph_enumerator() {
    timed(Duration::from_secs(10), "criterion 9: connected-graph enumerators, n = 1..5", || {
        for n in 1..=5u32 {
            let via_p = genfun::cn_poly(n).unwrap();
            let direct = oracle::enumerate_connected_simple(n).unwrap();
            assert_eq!(via_p, direct, "C_{n}");
            assert_eq!(
                via_p.coeff((n - 1) as usize),
                rat(BigInt::from(n).pow(n.saturating_sub(2))),
                "tree count inside C_{n}"
            );
            if n > 1 {
                assert_eq!(via_p.leading_coeff(), Some(&rat(1)), "leading term of C_{n}");
                assert_eq!(via_p.degree(), (n * (n - 1) / 2) as isize);
            }
        }
    });
}

#[test]
fn criterion_10_distinct_square_sums() {
    timed(Duration::from_secs(1), "criterion 10: distinct square sums drive the pole sets", || {
        let expected_counts = [1usize, 2, 3, 5, 7, 9];
        for (n, &want) in (1u32..).zip(&expected_counts) {
            let (count, values) = genfun::distinct_square_sums(n);
            assert_eq!(count, want, "count at n = {n}");
            let poles: BTreeSet<u64> =
                genfun::zn_ratfun(n).unwrap().poles().iter().copied().collect();
            assert_eq!(poles.len(), count, "pole count at n = {n}");
            assert_eq!(poles, values, "pole set at n = {n}");
        }
        // the first square-sum collision: compositions [3,3] and [1,1,4]
        // both give 18, which must appear once
        let colliders: Vec<Vec<u32>> = genfun::compositions(6)
            .iter()
            .filter(|c| c.square_sum() == 18)
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(
            colliders,
            vec![vec![1, 1, 4], vec![1, 4, 1], vec![3, 3], vec![4, 1, 1]]
        );
        let (_, values) = genfun::distinct_square_sums(6);
        assert!(values.contains(&18));
        assert_eq!(genfun::zn_ratfun(6).unwrap().poles().iter().filter(|&&p| p == 18).count(), 1);
    });
}
