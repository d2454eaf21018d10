//! The identity-suite runner: fans independent checks out over a thread
//! pool and returns reports in a fixed order.

use rayon::prelude::*;

use crate::classical::BernoulliTable;
use crate::degenerate::{self as degen, DegenBernoulliTable};
use crate::dirichlet::{self, enumerate_characters, DirichletCharacter};
use crate::error::{Error, Result};
use crate::padic::{self, CosetSpec, MeasureSpec};
use crate::report::{Format, IdentityReport};
use crate::stirling::StirlingTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Routes,
    Degeneration,
    Reflection,
    Multiplication,
    PowerSums,
    Stirling,
    Zeta,
    Characters,
    Measure,
}

impl Section {
    pub const ALL: [Section; 9] = [
        Section::Routes,
        Section::Degeneration,
        Section::Reflection,
        Section::Multiplication,
        Section::PowerSums,
        Section::Stirling,
        Section::Zeta,
        Section::Characters,
        Section::Measure,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest β index anywhere in the suite; also caps `k_max` and `char_n_max`.
    pub n_max: usize,
    /// Multipliers 1..=d_max for the multiplication theorem.
    pub d_max: u64,
    /// Power sums use n = 1..=sum_terms.
    pub sum_terms: u64,
    pub char_moduli: Vec<u64>,
    pub char_n_max: usize,
    pub k_max: usize,
    pub primes: Vec<u64>,
    pub measure_moduli: Vec<u64>,
    /// Levels N = 0..levels.
    pub levels: u32,
    pub format: Format,
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 24,
            d_max: 5,
            sum_terms: 20,
            char_moduli: (1..=12).collect(),
            char_n_max: 10,
            k_max: 8,
            primes: vec![2, 3, 5],
            measure_moduli: vec![1, 2, 3],
            levels: 3,
            format: Format::Json,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.to_string()));
        if self.d_max == 0 {
            return bad("d-max must be positive");
        }
        if self.sum_terms == 0 {
            return bad("sum-terms must be positive");
        }
        if self.levels == 0 {
            return bad("levels must be positive");
        }
        if self.jobs == 0 {
            return bad("jobs must be positive");
        }
        if self.char_moduli.iter().chain(&self.measure_moduli).any(|&d| d == 0) {
            return bad("moduli must be positive");
        }
        if let Some(&d) =
            self.char_moduli.iter().chain(&self.measure_moduli).find(|&&d| d > dirichlet::DEFAULT_MODULUS_BOUND)
        {
            return Err(Error::ModulusTooLarge { modulus: d, bound: dirichlet::DEFAULT_MODULUS_BOUND });
        }
        for &p in &self.primes {
            padic::check_prime(p, padic::DEFAULT_PRIME_BOUND)?;
        }
        for &d in &self.measure_moduli {
            for &p in &self.primes {
                padic::level_modulus(d, p, self.levels)?;
            }
        }
        Ok(())
    }

    fn k_max(&self) -> usize {
        self.k_max.min(self.n_max)
    }

    fn char_n_max(&self) -> usize {
        self.char_n_max.min(self.n_max)
    }
}

/// Everything the verifiers read. Built once, then shared read-only.
#[derive(Clone, Debug)]
pub struct SuiteTables {
    pub beta: DegenBernoulliTable,
    pub classical: BernoulliTable,
    pub stirling: StirlingTable,
}

impl SuiteTables {
    pub fn build(n_max: usize) -> Self {
        SuiteTables {
            beta: DegenBernoulliTable::new(n_max),
            classical: BernoulliTable::new(n_max + 1),
            stirling: StirlingTable::new(n_max),
        }
    }
}

enum Work<'a> {
    Routes(usize),
    Degeneration(usize),
    Reflection,
    Multiplication(usize, u64),
    PowerSum(usize, u64),
    Stirling(usize),
    Zeta(usize),
    Character(&'a DirichletCharacter, usize),
    Distribution { k: usize, d: u64, p: u64, level: u32 },
    CharacterSum { k: usize, chi: &'a DirichletCharacter, index: usize, p: u64, level: u32 },
}

/// Builds the tables from `config` and runs every section.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    config.validate()?;
    run_with_tables(config, &SuiteTables::build(config.n_max), &Section::ALL)
}

/// Runs the chosen sections against caller-supplied tables. The series
/// oracles are always recomputed here, so a corrupted `tables.beta` shows up
/// as failing route reports.
pub fn run_with_tables(
    config: &SuiteConfig,
    tables: &SuiteTables,
    sections: &[Section],
) -> Result<Vec<IdentityReport>> {
    config.validate()?;
    let n_max = config.n_max;
    if tables.beta.n_max() < n_max || tables.classical.n_max() < n_max + 1 || tables.stirling.n_max() < n_max {
        return Err(Error::Config(format!("tables are smaller than n_max = {n_max}")));
    }
    let want = |s: Section| sections.contains(&s);

    let char_sets: Vec<(u64, Vec<DirichletCharacter>)> = if want(Section::Characters) || want(Section::Measure) {
        let mut moduli: Vec<u64> = Vec::new();
        if want(Section::Characters) {
            moduli.extend(&config.char_moduli);
        }
        if want(Section::Measure) {
            moduli.extend(&config.measure_moduli);
        }
        moduli.sort_unstable();
        moduli.dedup();
        moduli.into_iter().map(|d| enumerate_characters(d).map(|c| (d, c))).collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    let chars_of = |d: u64| &char_sets.iter().find(|(m, _)| *m == d).expect("enumerated above").1;

    let mut work: Vec<Work> = Vec::new();
    if want(Section::Routes) {
        work.extend((0..=n_max).map(Work::Routes));
    }
    if want(Section::Degeneration) {
        work.extend((0..=n_max).map(Work::Degeneration));
    }
    if want(Section::Reflection) {
        work.push(Work::Reflection);
    }
    if want(Section::Multiplication) {
        for n in 0..=n_max {
            work.extend((1..=config.d_max).map(|d| Work::Multiplication(n, d)));
        }
    }
    if want(Section::PowerSums) {
        for m in 0..n_max {
            work.extend((1..=config.sum_terms).map(|n| Work::PowerSum(m, n)));
        }
    }
    if want(Section::Stirling) {
        work.extend((0..=n_max).map(Work::Stirling));
    }
    if want(Section::Zeta) {
        work.extend((1..=n_max).map(Work::Zeta));
    }
    if want(Section::Characters) {
        for &d in &config.char_moduli {
            work.extend(chars_of(d).iter().enumerate().map(|(i, c)| Work::Character(c, i)));
        }
    }
    if want(Section::Measure) {
        for k in 0..=config.k_max() {
            for &d in &config.measure_moduli {
                for &p in &config.primes {
                    for level in 0..config.levels {
                        work.push(Work::Distribution { k, d, p, level });
                        for (index, chi) in chars_of(d).iter().enumerate() {
                            work.push(Work::CharacterSum { k, chi, index, p, level });
                        }
                    }
                }
            }
        }
    }

    let oracle = if want(Section::Routes) { degen::series_oracle(n_max) } else { Vec::new() };
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build().map_err(|e| Error::Config(e.to_string()))?;
    let batches: Vec<Vec<IdentityReport>> =
        pool.install(|| work.par_iter().map(|w| run_item(w, config, tables, &oracle)).collect::<Result<_>>())?;
    let mut reports: Vec<IdentityReport> = batches.into_iter().flatten().collect();
    reports.sort();
    Ok(reports)
}

fn run_item(
    work: &Work,
    config: &SuiteConfig,
    t: &SuiteTables,
    oracle: &[crate::arith::BiPoly],
) -> Result<Vec<IdentityReport>> {
    let beta = &t.beta;
    Ok(match *work {
        Work::Routes(n) => vec![degen::umbral_route_check(beta, n)?, degen::series_route_check(beta, oracle, n)?],
        Work::Degeneration(n) => vec![
            degen::degeneration_check(beta, &t.classical, n)?,
            degen::lambda_one_check(beta, n)?,
            degen::degree_check(beta, n)?,
        ],
        Work::Reflection => degen::reflection_check(beta, config.n_max)?,
        Work::Multiplication(n, d) => vec![degen::multiplication_check(beta, n, d)?],
        Work::PowerSum(m, n) => {
            vec![degen::power_sum_check(beta, m, n)?, degen::classical_power_sum_check(&t.classical, m, n)?]
        }
        Work::Stirling(n) => vec![
            degen::stirling1_transform_check(beta, &t.stirling, &t.classical, n)?,
            degen::stirling2_transform_check(beta, &t.stirling, &t.classical, n)?,
        ],
        Work::Zeta(n) => vec![degen::zeta_check(beta, &t.classical, n)?],
        Work::Character(chi, index) => character_checks(t, chi, index, config.char_n_max())?,
        Work::Distribution { k, d, p, level } => {
            let spec = MeasureSpec::symbolic(k, d, p)?;
            let modulus = padic::level_modulus(d, p, level)?;
            (0..modulus)
                .map(|a| padic::distribution_check(beta, &spec, &CosetSpec::new(a, d, p, level)?))
                .collect::<Result<_>>()?
        }
        Work::CharacterSum { k, chi, index, p, level } => {
            let spec = MeasureSpec::symbolic(k, chi.modulus(), p)?;
            vec![padic::character_sum_check(beta, &spec, chi, index, level)?]
        }
    })
}

/// Validity, closed-vs-series routes and the λ = 0 limit for one character,
/// for n = 0..=n_max.
pub fn character_checks(
    t: &SuiteTables,
    chi: &DirichletCharacter,
    index: usize,
    n_max: usize,
) -> Result<Vec<IdentityReport>> {
    let mut out = vec![dirichlet::validity_check(chi, index)];
    let series = dirichlet::beta_chi_series(n_max, chi)?;
    for n in 0..=n_max {
        out.push(dirichlet::route_check(&t.beta, &series, chi, index, n)?);
        out.push(dirichlet::degeneration_check(&t.beta, &t.classical, chi, index, n)?);
    }
    Ok(out)
}

/// Number of failing reports.
pub fn failures(reports: &[IdentityReport]) -> usize {
    reports.iter().filter(|r| !r.pass).count()
}
