//! Gap sums `S_{P,d}(n) = P(n) + P(n - d) + P(n - 2d) + ...` (stopping at the
//! smallest natural argument) and the space `E_d` of polynomials for which
//! that sum is a polynomial in `n`.
//!
//! `P` is in `E_d` exactly when `P(X) = binom(X+d, d) f(X+d) - binom(X, d) f(X)`
//! for some polynomial `f`; the sum is then `binom(n+d, d) f(n+d)`. Every `P`
//! splits uniquely as `Q + R` with `Q` in `E_d` and `deg R <= d - 2`.
//!
//! Coefficients are rationals throughout: statements over the reals restrict
//! unchanged to `Q[X]`, which is what is computed here.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Rational};
use crate::genfun::{gap_divisor, member_general};
use crate::poly::{binomial_poly, interpolate, Polynomial};
use crate::special::indefinite_sum;

fn check_step(d: u32) -> Result<()> {
    if d == 0 {
        Err(Error::ZeroStep)
    } else {
        Ok(())
    }
}

/// `sum_{k=0}^{floor(n/d)} P(n - k d)`, evaluated term by term.
pub fn brute_sum(p: &Polynomial, d: u32, n: u64) -> Result<Rational> {
    check_step(d)?;
    let (n, d) = (n as i64, d as i64);
    Ok((0..=n / d).map(|k| p.evaluate_int(n - k * d)).sum())
}

/// `binom(X+d, d) f(X+d) - binom(X, d) f(X)`.
pub fn witness_image(f: &Polynomial, d: u32) -> Polynomial {
    let shift = int(d as i64);
    let upper = binomial_poly(d).shift(&shift) * f.shift(&shift);
    &upper - &(binomial_poly(d) * f)
}

/// Gap-sum closed form `binom(X+d, d) f(X+d)` for the witness `f`.
pub fn closed_form_from_witness(f: &Polynomial, d: u32) -> Polynomial {
    let shift = int(d as i64);
    binomial_poly(d).shift(&shift) * f.shift(&shift)
}

/// Per-residue-class interpolation of the gap sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    /// All class polynomials coincide.
    pub polynomial: bool,
    /// Class `rho` interpolant through `(rho + j d, S(rho + j d))`.
    pub residue_polys: Vec<Polynomial>,
}

/// Decides whether `S_{P,d}` is a polynomial in `n` by brute force.
///
/// On each residue class `n = rho + j d` the sum is a polynomial in `j` of
/// degree at most `deg P + 1`, so `deg P + 2` samples determine it exactly.
/// The sequence is polynomial iff the `d` class interpolants are equal.
pub fn oracle_is_polynomial(p: &Polynomial, d: u32) -> Result<OracleRecord> {
    check_step(d)?;
    let samples = (p.degree() + 2).max(1) as u64;
    let residue_polys = (0..d as u64)
        .map(|rho| {
            let points = (0..samples)
                .map(|j| {
                    let n = rho + j * d as u64;
                    Ok((int(n as i64), brute_sum(p, d, n)?))
                })
                .collect::<Result<Vec<_>>>()?;
            interpolate(&points)
        })
        .collect::<Result<Vec<_>>>()?;
    let polynomial = residue_polys.windows(2).all(|w| w[0] == w[1]);
    Ok(OracleRecord {
        polynomial,
        residue_polys,
    })
}

/// `P = Q + R` with `Q` in `E_d` and `deg R <= d - 2`, plus the intermediate
/// polynomials of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub d: u32,
    /// `Q`, the `E_d` component.
    pub q_part: Polynomial,
    /// `R`, the component of degree at most `d - 2`.
    pub r_part: Polynomial,
    /// `P*` with `P*(X+1) - P*(X) = P(dX)`.
    pub p_star: Polynomial,
    /// Quotient of `P*` by `binom(dX, d)`.
    pub quotient: Polynomial,
    /// Remainder of `P*` by `binom(dX, d)`.
    pub remainder: Polynomial,
    /// `f(X) = quotient(X/d)`, the witness for `Q`.
    pub witness: Polynomial,
}

/// Splits `P` along `E_d (+) R_{d-2}[X]`.
pub fn decompose(p: &Polynomial, d: u32) -> Result<Decomposition> {
    decompose_with_offset(p, d, &Rational::zero())
}

/// [`decompose`] with `c` added to the antiderivative `P*`. The result's
/// `Q` and `R` do not depend on `c`.
pub fn decompose_with_offset(p: &Polynomial, d: u32, c: &Rational) -> Result<Decomposition> {
    check_step(d)?;
    let step = int(d as i64);
    let inv_step = rat(1, d as i64);

    let p_star = &indefinite_sum(&p.dilate(&step)?) + &Polynomial::constant(c.clone());
    let divisor = binomial_poly(d).dilate(&step)?;
    let (quotient, remainder) = p_star.euclid_div(&divisor)?;

    let witness = quotient.dilate(&inv_step)?;
    let q_part = witness_image(&witness, d);
    let r_part = remainder.forward_difference().dilate(&inv_step)?;

    if &q_part + &r_part != *p {
        return Err(Error::Invariant(format!(
            "decomposition of {p} for d = {d} does not add up"
        )));
    }
    if r_part.degree() > d as i64 - 2 {
        return Err(Error::Invariant(format!(
            "complement {r_part} exceeds degree {}",
            d as i64 - 2
        )));
    }
    Ok(Decomposition {
        d,
        q_part,
        r_part,
        p_star,
        quotient,
        remainder,
        witness,
    })
}

/// Verdict on `P in E_d` with every witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub d: u32,
    pub member: bool,
    /// `f` with `P(X) = binom(X+d,d) f(X+d) - binom(X,d) f(X)`.
    pub f: Option<Polynomial>,
    /// `S` with `S(n) = S_{P,d}(n)` for all `n >= 0`.
    pub closed_form: Option<Polynomial>,
    pub residue_polys: Vec<Polynomial>,
    /// `R` from the decomposition; zero iff member.
    pub defect: Polynomial,
    /// `A_P / (1 + X + ... + X^(d-1))` when exact.
    pub ogf_quotient: Option<Polynomial>,
    /// `A_P mod (1 + X + ... + X^(d-1))`.
    pub ogf_remainder: Polynomial,
}

/// Decides `P in E_d` constructively, then confirms the verdict against the
/// generating-function criterion and the interpolation oracle.
pub fn membership(p: &Polynomial, d: u32) -> Result<MembershipReport> {
    let dec = decompose(p, d)?;
    let member = dec.r_part.is_zero();
    let oracle = oracle_is_polynomial(p, d)?;
    let divisibility = member_general(p, &gap_divisor(d))?;

    if oracle.polynomial != member || divisibility.member != member {
        return Err(Error::Invariant(format!(
            "verdicts disagree for {p}, d = {d}: decompose {member}, \
             oracle {}, divisibility {}",
            oracle.polynomial, divisibility.member
        )));
    }

    let (f, closed_form) = if member {
        let f = dec.witness.clone();
        if witness_image(&f, d) != *p {
            return Err(Error::Invariant(format!(
                "witness {f} does not rebuild {p}"
            )));
        }
        let s = closed_form_from_witness(&f, d);
        if oracle.residue_polys[0] != s {
            return Err(Error::Invariant(format!(
                "closed form {s} disagrees with interpolated sum {}",
                oracle.residue_polys[0]
            )));
        }
        (Some(f), Some(s))
    } else {
        (None, None)
    };

    Ok(MembershipReport {
        d,
        member,
        f,
        closed_form,
        residue_polys: oracle.residue_polys,
        defect: dec.r_part,
        ogf_quotient: member.then_some(divisibility.quotient),
        ogf_remainder: divisibility.remainder,
    })
}

/// `e_k(X) = binom(X+d, d) (X+d)^k - binom(X, d) X^k`.
pub fn basis_ed(d: u32, k: usize) -> Polynomial {
    witness_image(&Polynomial::monomial(int(1), k), d)
}

/// `alpha` with `alpha(-1) = ... = alpha(-d+1) = 0` and
/// `P(X) = alpha(X) + alpha(X-1) + ... + alpha(X-d+1)`, for `P in E_d`, `d >= 2`.
///
/// With `S` the gap-sum closed form, `alpha(X) = S(X) - S(X-1)`, so
/// `sum_{k=0}^{n} alpha(k) = S(n)`.
pub fn banna_alpha(p: &Polynomial, d: u32) -> Result<Polynomial> {
    if d < 2 {
        return Err(Error::BannaStepTooSmall(d));
    }
    let report = membership(p, d)?;
    let Some(s) = report.closed_form else {
        return Err(Error::NoBannaRepresentation(d));
    };
    let alpha = &s - &s.shift(&int(-1));

    if let Some(j) = (1..d as i64).find(|&j| !alpha.evaluate_int(-j).is_zero()) {
        return Err(Error::Invariant(format!(
            "alpha = {alpha} does not vanish at -{j}"
        )));
    }
    let telescoped = (0..d as i64).fold(Polynomial::zero(), |acc, j| &acc + &alpha.shift(&int(-j)));
    if telescoped != *p {
        return Err(Error::Invariant(format!(
            "shifted copies of alpha = {alpha} sum to {telescoped}, not {p}"
        )));
    }
    Ok(alpha)
}

/// Coordinates `(a_0, ..., a_m)` of `P in E_d` in the basis `e_k`.
pub fn express_in_basis(p: &Polynomial, d: u32) -> Result<Vec<Rational>> {
    let report = membership(p, d)?;
    let f = report.f.ok_or(Error::NotMember(d))?;
    let coords = f.coeffs().to_vec();
    let rebuilt = coords
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (k, a)| {
            &acc + &basis_ed(d, k).scale(a)
        });
    if rebuilt != *p {
        return Err(Error::Invariant(format!(
            "basis coordinates rebuild {rebuilt}, not {p}"
        )));
    }
    Ok(coords)
}
