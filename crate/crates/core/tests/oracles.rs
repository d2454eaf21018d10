//! Independent oracles for the degenerate tables.
//!
//! At λ = ±1/k the series (1+λt)^{1/λ} is a polynomial or the inverse of one,
//! so β_n(x|λ) for integer x can be read off an ordinary power series built
//! here from plain rational arithmetic, without touching the library's
//! series or falling-factorial code.

use degbern::arith::{CycRat, Rat, Ring};
use degbern::classical::BernoulliTable;
use degbern::degenerate::{power_sum, zeta_special_value, DegenBernoulliTable};
use degbern::dirichlet::{beta_chi_closed, enumerate_characters};

type Ser = Vec<Rat>;

fn mul(a: &Ser, b: &Ser, order: usize) -> Ser {
    let mut out = vec![Rat::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn inverse(a: &Ser, order: usize) -> Ser {
    let c0 = a[0].recip().expect("unit constant term");
    let mut out = vec![Rat::zero(); order + 1];
    out[0] = c0.clone();
    for n in 1..=order {
        let mut s = Rat::zero();
        for i in 1..=n.min(a.len() - 1) {
            s = &s + &(&a[i] * &out[n - i]);
        }
        out[n] = -&(&s * &c0);
    }
    out
}

fn power(a: &Ser, e: i64, order: usize) -> Ser {
    let mut acc = vec![Rat::one()];
    for _ in 0..e.unsigned_abs() {
        acc = mul(&acc, a, order);
    }
    if e < 0 {
        inverse(&acc, order)
    } else {
        acc
    }
}

/// (1 + λt)^{1/λ} with λ = sign/k.
fn exp_series(k: i64, sign: i64, order: usize) -> Ser {
    let lin = vec![Rat::one(), Rat::new(sign, k)];
    power(&lin, sign * k, order)
}

fn factorial(n: usize) -> Rat {
    (1..=n as i64).map(Rat::from).product()
}

/// t / (E^d − 1) to the given order, E = (1+λt)^{1/λ}.
fn kernel(e: &Ser, d: i64, order: usize) -> Ser {
    let ed = power(e, d, order + 1);
    // (E^d − 1)/t
    let shifted: Ser = (1..=order + 1).map(|i| ed[i].clone()).collect();
    inverse(&shifted, order)
}

#[test]
fn beta_matches_polynomial_generating_function() {
    let order = 16;
    let table = DegenBernoulliTable::new(order);
    for k in [1i64, 2, 3, 5] {
        for sign in [1i64, -1] {
            let lambda = Rat::new(sign, k);
            let e = exp_series(k, sign, order + 1);
            let base = kernel(&e, 1, order);
            for x in -3i64..=4 {
                let gf = mul(&base, &power(&e, x, order), order);
                for (n, coeff) in gf.iter().enumerate() {
                    let want = coeff * &factorial(n);
                    let got = table.beta(n).unwrap().eval(&Rat::from(x), &lambda);
                    assert_eq!(got, want, "n = {n}, x = {x}, lambda = {lambda}");
                }
            }
        }
    }
}

#[test]
fn lambda_one_numbers_vanish() {
    // At λ = 1 the kernel is t/((1+t) − 1) = 1.
    let table = DegenBernoulliTable::new(20);
    for n in 1..=20 {
        assert!(table.beta(n).unwrap().eval(&Rat::zero(), &Rat::one()).is_zero());
    }
}

#[test]
fn character_beta_matches_polynomial_generating_function() {
    let order = 10;
    let table = DegenBernoulliTable::new(order);
    for d in [3u64, 4, 5, 7, 8] {
        for chi in enumerate_characters(d).unwrap() {
            for (k, sign) in [(1i64, 1i64), (2, 1), (3, -1)] {
                let lambda = Rat::new(sign, k);
                let e = exp_series(k, sign, order + 1);
                let base = kernel(&e, d as i64, order);
                let mut gf = vec![CycRat::zero(); order + 1];
                for a in 0..d {
                    let w = chi.value(a as i64);
                    if w.is_zero() {
                        continue;
                    }
                    let part = mul(&base, &power(&e, a as i64, order), order);
                    for (n, c) in part.iter().enumerate() {
                        gf[n] = gf[n].add_ref(&w.scale(c));
                    }
                }
                for (n, coeff) in gf.iter().enumerate() {
                    let want = coeff.scale(&factorial(n));
                    let got = beta_chi_closed(&table, n, &chi).unwrap().value.eval(&CycRat::from_rat(lambda.clone()));
                    assert_eq!(got, want, "d = {d}, n = {n}, lambda = {lambda}");
                }
            }
        }
    }
}

#[test]
fn classical_numbers_match_known_values() {
    let t = BernoulliTable::new(20);
    let known = [
        (0, Rat::one()),
        (1, Rat::new(-1, 2)),
        (2, Rat::new(1, 6)),
        (4, Rat::new(-1, 30)),
        (6, Rat::new(1, 42)),
        (8, Rat::new(-1, 30)),
        (10, Rat::new(5, 66)),
        (12, Rat::new(-691, 2730)),
        (14, Rat::new(7, 6)),
        (16, Rat::new(-3617, 510)),
    ];
    for (n, b) in known {
        assert_eq!(t.number(n).unwrap(), &b, "B_{n}");
    }
    for n in (3..=19).step_by(2) {
        assert!(t.number(n).unwrap().is_zero());
    }
}

#[test]
fn power_sums_match_brute_force() {
    // Σ_{l<n} (l|λ)_m evaluated at several λ by direct products.
    for m in 0..=6usize {
        for n in 1..=8u64 {
            let sym = power_sum(m, n);
            for lambda in [Rat::zero(), Rat::new(1, 3), Rat::new(-2, 5), Rat::from(2)] {
                let mut want = Rat::zero();
                for l in 0..n {
                    let mut term = Rat::one();
                    for i in 0..m {
                        term = &term * &(&Rat::from(l) - &(&lambda * &Rat::from(i as u64)));
                    }
                    want = &want + &term;
                }
                assert_eq!(sym.eval(&lambda), want, "m = {m}, n = {n}");
            }
        }
    }
}

#[test]
fn zeta_classical_values() {
    let t = DegenBernoulliTable::new(4);
    let z2 = zeta_special_value(&t, 2).unwrap();
    assert_eq!(z2.eval(&Rat::zero(), &Rat::zero()), Rat::new(-1, 12));
    let z1 = zeta_special_value(&t, 1).unwrap();
    for x in [Rat::zero(), Rat::new(1, 3), Rat::from(2)] {
        assert_eq!(z1.eval(&x, &Rat::zero()), &Rat::new(1, 2) - &x);
    }
    assert!(zeta_special_value(&t, 0).is_err());
}
