//! Acceptance criteria. Each test prints exactly one PASS/FAIL line.
//!
//! Run with `cargo test -p degbern --test acceptance -- --nocapture`.
//!
//! Every identity is checked exactly: a criterion passes only when every
//! residual is the zero polynomial (tolerance 0). The only non-exact bounds
//! are the wall-clock limits in criterion 11.

use std::time::{Duration, Instant};

use degbern::arith::{BiPoly, CycRat, Rat};
use degbern::classical::BernoulliTable;
use degbern::degenerate::{self as degen, DegenBernoulliTable};
use degbern::dirichlet::{self, enumerate_characters};
use degbern::padic::{character_sum_check, distribution_check, level_modulus, CosetSpec, MeasureSpec};
use degbern::report::IdentityReport;
use degbern::stirling::StirlingTable;
use degbern::suite::{failures, run_suite, run_with_tables, Section, SuiteConfig, SuiteTables};

/// Criteria 1 to 9 are exact: a passing report has a zero residual, which
/// renders as the empty string.
const PASSING_RESIDUAL: &str = "";
const SUITE_TIME_LIMIT: Duration = Duration::from_secs(60);
const TABLE_TIME_LIMIT: Duration = Duration::from_secs(300);
const TABLE_N: usize = 64;

struct Tally {
    checks: usize,
    problems: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, problems: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.problems.push(what());
        }
    }

    fn report(&mut self, r: &IdentityReport) {
        let ok = r.pass && r.residual == PASSING_RESIDUAL;
        self.expect(ok, || format!("{} [{}] residual {}", r.identity, r.params_string(), r.residual));
    }

    fn reports(&mut self, rs: &[IdentityReport]) {
        for r in rs {
            self.report(r);
        }
    }

    fn finish(self, id: u32, name: &str, detail: &str) {
        let ok = self.problems.is_empty();
        println!(
            "criterion {id:>2} {} {name}: {detail}; {} checks, {} failed",
            if ok { "PASS" } else { "FAIL" },
            self.checks,
            self.problems.len()
        );
        for p in self.problems.iter().take(10) {
            println!("    {p}");
        }
        assert!(ok, "criterion {id} failed");
    }
}

fn lambda_poly(s: &str) -> BiPoly {
    s.parse().unwrap()
}

#[test]
fn criterion_01_route_equivalence() {
    let n_max = 24;
    let table = DegenBernoulliTable::new(n_max);
    let oracle = degen::series_oracle(n_max);
    let mut t = Tally::new();
    for n in 0..=n_max {
        t.report(&degen::umbral_route_check(&table, n).unwrap());
        t.report(&degen::series_route_check(&table, &oracle, n).unwrap());
        t.expect(&degen::beta_poly_recurrence(n) == table.beta(n).unwrap(), || format!("recurrence n = {n}"));
    }
    t.finish(1, "route equivalence", "solve = umbral = series, n <= 24");
}

#[test]
fn criterion_02_degeneration() {
    let n_max = 24;
    let table = DegenBernoulliTable::new(n_max);
    let classical = BernoulliTable::new(n_max);
    let mut t = Tally::new();
    for n in 0..=n_max {
        t.report(&degen::degeneration_check(&table, &classical, n).unwrap());
    }
    let oracle = degen::series_oracle(2);
    let beta1 = lambda_poly("-1/2 + 1/2*l");
    let beta2 = lambda_poly("1/6 - 1/6*l^2");
    for (n, want) in [(1, &beta1), (2, &beta2)] {
        let at0 = BiPoly::from_lambda_poly(&table.beta(n).unwrap().eval_x(&Rat::zero()));
        t.expect(&at0 == want, || format!("beta_{n}(lambda) = {at0}"));
        let series = BiPoly::from_lambda_poly(&oracle[n].eval_x(&Rat::zero()));
        t.expect(&series == want, || format!("series beta_{n}(lambda) = {series}"));
    }
    t.finish(2, "degeneration", "beta_n(x|0) = B_n(x) for n <= 24, beta_1 and beta_2 verbatim");
}

#[test]
fn criterion_03_reflection() {
    let table = DegenBernoulliTable::new(24);
    let mut t = Tally::new();
    let reports = degen::reflection_check(&table, 24).unwrap();
    t.expect(reports.len() == 25, || format!("{} reflection reports", reports.len()));
    t.reports(&reports);
    t.finish(3, "reflection", "beta_n(1|l) - beta_n(l) = delta_{1,n} for n <= 24");
}

#[test]
fn criterion_04_multiplication() {
    let table = DegenBernoulliTable::new(12);
    let mut t = Tally::new();
    for n in 0..=12 {
        for d in 1..=5 {
            t.report(&degen::multiplication_check(&table, n, d).unwrap());
        }
    }
    t.finish(4, "multiplication theorem", "n <= 12, d = 1..5");
}

#[test]
fn criterion_05_power_sums() {
    let table = DegenBernoulliTable::new(11);
    let classical = BernoulliTable::new(11);
    let mut t = Tally::new();
    for m in 0..=10 {
        for n in 0..=20 {
            t.report(&degen::power_sum_check(&table, m, n).unwrap());
            t.report(&degen::classical_power_sum_check(&classical, m, n).unwrap());
        }
    }
    // 0 + 1 + 4 + 9 = (B_3(4) - B_3)/3
    let b3 = classical.poly(3).unwrap();
    let direct = (&b3.eval(&Rat::from(4), &Rat::zero()) - &b3.eval(&Rat::zero(), &Rat::zero())) * Rat::new(1, 3);
    t.expect(direct == Rat::from(14), || format!("classical sum of squares below 4 = {direct}"));
    t.finish(5, "power sums", "m <= 10, n <= 20, with the lambda = 0 classical limit");
}

#[test]
fn criterion_06_stirling_transforms() {
    let table = DegenBernoulliTable::new(16);
    let classical = BernoulliTable::new(17);
    let stirling = StirlingTable::new(16);
    let mut t = Tally::new();
    for n in 0..=16 {
        t.report(&degen::stirling1_transform_check(&table, &stirling, &classical, n).unwrap());
        t.report(&degen::stirling2_transform_check(&table, &stirling, &classical, n).unwrap());
    }
    t.finish(6, "Stirling transforms", "both identities for n <= 16");
}

#[test]
fn criterion_07_zeta() {
    let table = DegenBernoulliTable::new(24);
    let classical = BernoulliTable::new(24);
    let mut t = Tally::new();
    for n in 1..=24 {
        t.report(&degen::zeta_check(&table, &classical, n).unwrap());
        let z = degen::zeta_special_value(&table, n).unwrap();
        let want = classical.poly(n).unwrap().scale(&Rat::new(-1, n as u64));
        t.expect(z.eval_lambda(&Rat::zero()) == want, || format!("Hurwitz value n = {n}"));
    }
    let v = degen::zeta_special_value(&table, 2).unwrap().eval(&Rat::zero(), &Rat::zero());
    t.expect(v == Rat::new(-1, 12), || format!("zeta(-1, 0) = {v}"));
    t.expect(degen::zeta_special_value(&table, 0).is_err(), || "n = 0 is not rejected".into());
    t.finish(7, "zeta special values", "n <= 24, zeta(-1, 0) = -1/12 at lambda = 0");
}

#[test]
fn criterion_08_character_routes() {
    let n_max = 10;
    let table = DegenBernoulliTable::new(n_max);
    let classical = BernoulliTable::new(n_max);
    let mut t = Tally::new();
    for d in 1..=12u64 {
        let chars = enumerate_characters(d).unwrap();
        let units = (1..=d).filter(|a| num_gcd(*a, d) == 1).count();
        t.expect(chars.len() == units, || format!("d = {d}: {} characters", chars.len()));
        for (i, chi) in chars.iter().enumerate() {
            t.report(&dirichlet::validity_check(chi, i));
            let series = dirichlet::beta_chi_series(n_max, chi).unwrap();
            for n in 0..=n_max {
                t.report(&dirichlet::route_check(&table, &series, chi, i, n).unwrap());
                t.report(&dirichlet::degeneration_check(&table, &classical, chi, i, n).unwrap());
            }
        }
    }
    let mod4 = enumerate_characters(4).unwrap();
    let chi = mod4.iter().find(|c| !c.is_trivial()).unwrap();
    let half = CycRat::from_rat(Rat::new(-1, 2));
    let b1 = classical.gen_bernoulli_chi(1, chi).unwrap();
    t.expect(b1 == half, || format!("B_1,chi mod 4 = {b1}"));
    let closed = dirichlet::beta_chi_closed(&table, 1, chi).unwrap().at_lambda_zero();
    t.expect(closed == half, || format!("beta_1,chi(0) mod 4 = {closed}"));
    t.finish(8, "character routes", "closed = series for all characters mod 1..12, n <= 10, B_1,chi = -1/2 mod 4");
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn criterion_09_measure() {
    let table = DegenBernoulliTable::new(8);
    let mut t = Tally::new();
    for k in 0..=8 {
        for d in [1u64, 2, 3] {
            let chars = enumerate_characters(d).unwrap();
            for p in [2u64, 3, 5] {
                let spec = MeasureSpec::symbolic(k, d, p).unwrap();
                for level in 0..=2 {
                    for a in 0..level_modulus(d, p, level).unwrap() {
                        let coset = CosetSpec::new(a, d, p, level).unwrap();
                        t.report(&distribution_check(&table, &spec, &coset).unwrap());
                    }
                    for (i, chi) in chars.iter().enumerate() {
                        t.report(&character_sum_check(&table, &spec, chi, i, level).unwrap());
                    }
                }
            }
        }
    }
    let mod4 = enumerate_characters(4).unwrap();
    for (i, chi) in mod4.iter().enumerate().filter(|(_, c)| !c.is_trivial()) {
        for p in [3u64, 5] {
            for k in 0..=6 {
                let spec = MeasureSpec::symbolic(k, 4, p).unwrap();
                for level in 0..=2 {
                    t.report(&character_sum_check(&table, &spec, chi, i, level).unwrap());
                }
            }
        }
    }
    t.finish(9, "p-adic measure", "distribution law and level-N character sums, exact in lambda");
}

fn nonzero_failure(reports: &[IdentityReport]) -> bool {
    reports.iter().any(|r| !r.pass && r.residual != PASSING_RESIDUAL && r.residual != "0")
}

#[test]
fn criterion_10_negative_control() {
    let config = SuiteConfig { n_max: 24, ..SuiteConfig::default() };
    let clean = SuiteTables::build(24);
    let delta = Rat::new(1, 7);
    let mut t = Tally::new();

    // The full default suite on one corrupted coefficient.
    let mut tables = clean.clone();
    tables.beta = clean.beta.perturbed(5, 2, 1, &delta).unwrap();
    let full = run_with_tables(&config, &tables, &Section::ALL).unwrap();
    t.expect(nonzero_failure(&full), || "full suite missed beta_5 perturbation".into());

    // Every β_n, perturbed in-support, at its leading x term and outside its support.
    // These sections are a subset of the full suite, so a failure here is a
    // failure of the full suite too.
    let sections = [Section::Routes, Section::Degeneration, Section::Reflection];
    for n in 0..=24usize {
        for (dx, dl) in [(0u32, 0u32), (n as u32, 0), (0, n as u32 + 2)] {
            let mut tables = clean.clone();
            tables.beta = clean.beta.perturbed(n, dx, dl, &delta).unwrap();
            let reports = run_with_tables(&config, &tables, &sections).unwrap();
            t.expect(nonzero_failure(&reports), || format!("perturbation of beta_{n} at x^{dx} l^{dl} undetected"));
        }
    }
    let baseline = run_with_tables(&config, &clean, &sections).unwrap();
    t.expect(failures(&baseline) == 0, || "unperturbed tables fail".into());
    t.finish(10, "negative control", "single-coefficient perturbations of every beta_n, n <= 24");
}

#[test]
fn criterion_11_performance() {
    let mut t = Tally::new();
    let start = Instant::now();
    let reports = run_suite(&SuiteConfig::default()).unwrap();
    let suite_time = start.elapsed();
    t.expect(failures(&reports) == 0, || "default suite has failures".into());
    t.expect(suite_time < SUITE_TIME_LIMIT, || format!("default suite took {suite_time:?}"));

    let start = Instant::now();
    let table = DegenBernoulliTable::new(TABLE_N);
    let table_time = start.elapsed();
    t.expect(table.n_max() == TABLE_N, || "table size".into());
    t.expect(table_time < TABLE_TIME_LIMIT, || format!("table to n = 64 took {table_time:?}"));
    let detail = format!(
        "default suite {:.1}s (< {}s, {} reports), table to n = {TABLE_N} {:.1}s (< {}s)",
        suite_time.as_secs_f64(),
        SUITE_TIME_LIMIT.as_secs(),
        reports.len(),
        table_time.as_secs_f64(),
        TABLE_TIME_LIMIT.as_secs()
    );
    t.finish(11, "performance envelope", &detail);
}
