//! Ordinary generating functions of polynomial sequences.
//!
//! A polynomial `P` of degree `s` has `sum_n P(n) X^n = A_P(X) / (1 - X)^(s+1)`
//! with `deg A_P <= s` and `A_P(1) != 0`. Everything here works on the pair
//! (numerator, pole order) and never expands a power series; gap-sum questions
//! turn into divisibility of `A_P` by a fixed polynomial `D` with `D(1) != 0`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, int, Rational};
use crate::linalg::{self, Solution};
use crate::poly::{binomial_poly, Polynomial};

/// The rational series `numerator(X) / (1 - X)^pole_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OgfRep {
    pub numerator: Polynomial,
    pub pole_order: u32,
}

impl OgfRep {
    pub fn new(numerator: Polynomial, pole_order: u32) -> Self {
        OgfRep {
            numerator,
            pole_order,
        }
    }
}

/// `1 + X + ... + X^(d-1)`, so that `1 - X^d = (1 - X) * gap_divisor(d)`.
pub fn gap_divisor(d: u32) -> Polynomial {
    Polynomial::from_coeffs(vec![int(1); d as usize])
}

/// Numerator `U` with `sum_n P(n) X^n = U / (1 - X)^pole_order`.
///
/// Requires `pole_order > deg P`; the coefficients are the finite differences
/// `u_j = sum_i (-1)^i C(pole_order, i) P(j - i)` for `j < pole_order`, and
/// all later ones vanish.
pub fn ogf_numerator(p: &Polynomial, pole_order: u32) -> Result<Polynomial> {
    if p.degree() >= pole_order as i64 {
        return Err(Error::NotPolynomialSequence {
            degree: p.degree(),
            pole_order,
        });
    }
    let values: Vec<Rational> = (0..pole_order as i64).map(|n| p.evaluate_int(n)).collect();
    let coeffs = (0..pole_order as usize)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let c = Rational::from_integer(binomial(pole_order as u64, i as u64));
                    let term = c * &values[j - i];
                    if i % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    Ok(Polynomial::from_coeffs(coeffs))
}

/// `A_P`: the numerator at the minimal pole order `deg P + 1` (zero for `P = 0`).
pub fn a_p(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return Polynomial::zero();
    }
    ogf_numerator(p, (p.degree() + 1) as u32).expect("pole order exceeds degree")
}

/// The polynomial sequence whose generating function is `rep`, using
/// `1 / (1 - X)^a = sum_n binom(n + a - 1, a - 1) X^n`.
pub fn poly_from_ogf(rep: &OgfRep) -> Result<Polynomial> {
    let alpha = rep.pole_order;
    if rep.numerator.degree() >= alpha as i64 {
        return Err(Error::NotPolynomialSequence {
            degree: rep.numerator.degree(),
            pole_order: alpha,
        });
    }
    let kernel = binomial_poly(alpha - 1);
    let mut acc = Polynomial::zero();
    for (j, u) in rep.numerator.coeffs().iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        let shifted = kernel.shift(&int(alpha as i64 - 1 - j as i64));
        acc += &shifted.scale(u);
    }
    Ok(acc)
}

/// Cauchy product of two polynomial sequences, as a polynomial:
/// `r(n) = sum_{k=0}^{n} p(k) q(n - k)`.
pub fn convolve(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let numerator = &a_p(p) * &a_p(q);
    let pole_order = (p.degree() + q.degree() + 2) as u32;
    poly_from_ogf(&OgfRep::new(numerator, pole_order)).expect("product numerator has low degree")
}

fn check_divisor(d: &Polynomial) -> Result<()> {
    if d.is_zero() {
        return Err(Error::ZeroD);
    }
    if d.evaluate(&int(1)).is_zero() {
        return Err(Error::DVanishesAtOne);
    }
    Ok(())
}

/// Result of dividing `A_P` by `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityVerdict {
    pub member: bool,
    pub quotient: Polynomial,
    pub remainder: Polynomial,
}

/// Whether `P` lies in `E_D`, i.e. `D | A_P`.
pub fn member_general(p: &Polynomial, d: &Polynomial) -> Result<DivisibilityVerdict> {
    check_divisor(d)?;
    let (quotient, remainder) = a_p(p).euclid_div(d)?;
    Ok(DivisibilityVerdict {
        member: remainder.is_zero(),
        quotient,
        remainder,
    })
}

/// The space `E_D` for a fixed `D` with `D(1) != 0`, where `d = deg D + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSpace {
    divisor: Polynomial,
    d: u32,
    seed: Polynomial,
}

impl GeneralSpace {
    pub fn new(divisor: Polynomial) -> Result<Self> {
        check_divisor(&divisor)?;
        let d = (divisor.degree() + 1) as u32;
        // pole order d: the smallest one keeping deg D below it
        let seed = poly_from_ogf(&OgfRep::new(divisor.clone(), d))?;
        debug_assert_eq!(seed.degree(), d as i64 - 1);
        Ok(GeneralSpace { divisor, d, seed })
    }

    /// `E_d` as `E_{1 + X + ... + X^(d-1)}`.
    pub fn gap(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroStep);
        }
        Self::new(gap_divisor(d))
    }

    pub fn divisor(&self) -> &Polynomial {
        &self.divisor
    }

    /// `deg D + 1`; the complement `R_{d-2}[X]` has dimension `d - 1`.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// `h` with `D(X) / (1 - X)^d = sum_n h(n) X^n`.
    pub fn h(&self) -> &Polynomial {
        &self.seed
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        a_p(p)
            .euclid_div(&self.divisor)
            .map(|(_, r)| r.is_zero())
            .expect("divisor is nonzero")
    }

    /// Basis element `k`: `h` for `k = 0`, else `h * n^(k-1)` (Cauchy product).
    pub fn basis(&self, k: usize) -> Polynomial {
        if k == 0 {
            self.seed.clone()
        } else {
            convolve(&self.seed, &Polynomial::monomial(int(1), k - 1))
        }
    }

    /// Splits `P = Q + R` with `Q` in `E_D` and `deg R <= d - 2`.
    ///
    /// Divisibility by `D` is unaffected by extra factors of `(1 - X)`, so all
    /// numerators are taken at one common pole order, which makes `P -> U mod D`
    /// linear. `R` is then the solution of a `(d-1) x (d-1)` system.
    pub fn decompose(&self, p: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let unknowns = self.d as usize - 1;
        if unknowns == 0 {
            return Ok((p.clone(), Polynomial::zero()));
        }
        let pole_order = (p.degree().max(unknowns as i64 - 1).max(0) + 1) as u32;
        let residue = |q: &Polynomial| -> Result<Vec<Rational>> {
            let (_, r) = ogf_numerator(q, pole_order)?.euclid_div(&self.divisor)?;
            Ok((0..unknowns).map(|i| r.coeff(i)).collect())
        };
        let target = residue(p)?;
        let columns = (0..unknowns)
            .map(|i| residue(&Polynomial::monomial(int(1), i)))
            .collect::<Result<Vec<_>>>()?;
        let rows: Vec<Vec<Rational>> = (0..unknowns)
            .map(|row| columns.iter().map(|col| col[row].clone()).collect())
            .collect();
        let coeffs = match linalg::solve(&rows, &target) {
            Solution::Unique(c) => c,
            other => {
                return Err(Error::DirectSumViolation(format!(
                    "complement system for D = {} is {other:?}",
                    self.divisor
                )))
            }
        };
        let r = Polynomial::from_coeffs(coeffs);
        let q = p - &r;
        if !self.contains(&q) {
            return Err(Error::Invariant(format!(
                "decompose_general produced a non-member Q = {q}"
            )));
        }
        Ok((q, r))
    }
}

/// `h` for the space `E_D`.
pub fn h_poly(d: &Polynomial) -> Result<Polynomial> {
    Ok(GeneralSpace::new(d.clone())?.seed)
}

/// Basis element `k` of `E_D`.
pub fn basis_general(d: &Polynomial, k: usize) -> Result<Polynomial> {
    Ok(GeneralSpace::new(d.clone())?.basis(k))
}

/// `(Q, R)` with `P = Q + R`, `Q` in `E_D`, `deg R <= deg D - 1`.
pub fn decompose_general(p: &Polynomial, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    GeneralSpace::new(d.clone())?.decompose(p)
}
