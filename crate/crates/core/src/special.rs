//! Bernoulli and Euler polynomials, Genocchi numbers, power sums and the
//! discrete antiderivative.
//!
//! Bernoulli numbers and the Bernoulli/Euler polynomial tables are memoized in
//! a process-wide [`SequenceCache`]. Entries are appended in index order and
//! never change once written.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{binomial, int, is_integral, Rational};
use crate::poly::Polynomial;

/// Monotonically growing tables of `B_n`, `B_n(X)` and `E_n(X)`.
#[derive(Debug)]
pub struct SequenceCache {
    bernoulli_numbers: RwLock<Vec<Rational>>,
    bernoulli_polys: RwLock<Vec<Polynomial>>,
    euler_polys: RwLock<Vec<Polynomial>>,
}

static CACHE: LazyLock<SequenceCache> = LazyLock::new(SequenceCache::new);

/// Returns `table[n]`, extending the table under the write lock with `next`
/// (which receives the entries computed so far) if it is too short.
fn memoized<T: Clone>(table: &RwLock<Vec<T>>, n: usize, mut next: impl FnMut(&[T]) -> T) -> T {
    if let Some(v) = table.read().expect("cache poisoned").get(n) {
        return v.clone();
    }
    let mut guard = table.write().expect("cache poisoned");
    while guard.len() <= n {
        let v = next(&guard);
        guard.push(v);
    }
    guard[n].clone()
}

impl SequenceCache {
    pub fn new() -> Self {
        SequenceCache {
            bernoulli_numbers: RwLock::new(vec![int(1)]),
            bernoulli_polys: RwLock::new(Vec::new()),
            euler_polys: RwLock::new(Vec::new()),
        }
    }

    /// The shared process-wide cache.
    pub fn global() -> &'static SequenceCache {
        &CACHE
    }

    /// `B_n` from `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `n >= 1`.
    pub fn bernoulli_number(&self, n: usize) -> Rational {
        memoized(&self.bernoulli_numbers, n, |prev| {
            let m = prev.len() as u64;
            let s: Rational = prev
                .iter()
                .enumerate()
                .map(|(k, b)| b * Rational::from_integer(binomial(m + 1, k as u64)))
                .sum();
            -s / int(m as i64 + 1)
        })
    }

    /// `B_n(X) = sum_k C(n, k) B_k X^{n-k}`.
    pub fn bernoulli_poly(&self, n: usize) -> Polynomial {
        let numbers: Vec<Rational> = (0..=n).map(|k| self.bernoulli_number(k)).collect();
        memoized(&self.bernoulli_polys, n, |prev| {
            let m = prev.len();
            let coeffs = (0..=m)
                .map(|i| {
                    let k = m - i;
                    &numbers[k] * Rational::from_integer(binomial(m as u64, k as u64))
                })
                .collect();
            Polynomial::from_coeffs(coeffs)
        })
    }

    /// `E_n(X)`: the monic degree-`n` solution of `E(X+1) + E(X) = 2 X^n`.
    ///
    /// Comparing coefficients of `X^m` gives `2 e_m + sum_{k>m} C(k, m) e_k = 0`
    /// for `m < n`, solved from the top down.
    pub fn euler_poly(&self, n: usize) -> Polynomial {
        memoized(&self.euler_polys, n, |prev| {
            let m = prev.len();
            let mut e = vec![Rational::zero(); m + 1];
            e[m] = Rational::one();
            for j in (0..m).rev() {
                let s: Rational = (j + 1..=m)
                    .map(|k| &e[k] * Rational::from_integer(binomial(k as u64, j as u64)))
                    .sum();
                e[j] = -s / int(2);
            }
            Polynomial::from_coeffs(e)
        })
    }
}

impl Default for SequenceCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli_number(n: usize) -> Rational {
    CACHE.bernoulli_number(n)
}

/// Bernoulli polynomial `B_n(X)`.
pub fn bernoulli_poly(n: usize) -> Polynomial {
    CACHE.bernoulli_poly(n)
}

/// Euler polynomial `E_n(X)`.
pub fn euler_poly(n: usize) -> Polynomial {
    CACHE.euler_poly(n)
}

/// Genocchi number `G_n = 2 (1 - 2^n) B_n`, for `n >= 1`.
///
/// Panics if the result is not an integer or disagrees with `n E_{n-1}(0)`;
/// either would mean the arithmetic is broken.
pub fn genocchi(n: usize) -> Rational {
    assert!(n >= 1, "Genocchi numbers are indexed from 1");
    let two_pow = Rational::from_integer(BigInt::one() << n);
    let g = int(2) * (int(1) - two_pow) * bernoulli_number(n);
    assert!(is_integral(&g), "G_{n} = {g} is not an integer");
    let via_euler = int(n as i64) * euler_poly(n - 1).evaluate(&Rational::zero());
    assert_eq!(g, via_euler, "G_{n} disagrees with n E_(n-1)(0)");
    g
}

/// `c_n = G_{n+1} / (n + 1)`, the constant making `X^n - c_n` a member of `E_2`.
pub fn c_value(n: usize) -> Rational {
    genocchi(n + 1) / int(n as i64 + 1)
}

/// Power-sum polynomial `S_k` with `S_k(n) = 0^k + 1^k + ... + n^k`.
pub fn faulhaber(k: usize) -> Polynomial {
    let k1 = k as u64 + 1;
    let mut coeffs = vec![Rational::zero(); k + 2];
    for i in 0..=k {
        let c = Rational::from_integer(binomial(k1, i as u64)) * bernoulli_number(i);
        coeffs[k + 1 - i] += c / int(k1 as i64);
    }
    coeffs[k] += int(1);
    Polynomial::from_coeffs(coeffs)
}

/// Discrete antiderivative: `P*` with `P*(X+1) - P*(X) = P(X)` and zero
/// constant term, assembled as `sum_k p_k B_{k+1}(X) / (k + 1)`.
pub fn indefinite_sum(p: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc += &bernoulli_poly(k + 1).scale(&(c / int(k as i64 + 1)));
    }
    let mut coeffs = acc.coeffs().to_vec();
    if let Some(c0) = coeffs.first_mut() {
        *c0 = Rational::zero();
    }
    Polynomial::from_coeffs(coeffs)
}
