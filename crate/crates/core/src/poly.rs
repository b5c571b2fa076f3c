//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, int, parse_rational, Rational};

/// Polynomial with rational coefficients, stored lowest degree first.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::monomial(int(1), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from coefficients, lowest degree first; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at `x`.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_int(&self, x: i64) -> Rational {
        self.evaluate(&int(x))
    }

    /// `P(X + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let linear = Polynomial::from_coeffs(vec![c.clone(), int(1)]);
        self.compose(&linear)
    }

    /// `P(c X)`; the coefficient of `X^i` is multiplied by `c^i`.
    pub fn dilate(&self, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroDilation);
        }
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// `P(L(X))`, by Horner's scheme.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// Euclidean division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn euclid_div(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZeroPolynomial)?;
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd - 1);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Forward difference `P(X + 1) - P(X)`.
    pub fn forward_difference(&self) -> Self {
        &self.shift(&int(1)) - self
    }
}

/// `binom(X, d) = X (X - 1) ... (X - d + 1) / d!`; `binom(X, 0) = 1`.
pub fn binomial_poly(d: u32) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 0..d {
        let factor = Polynomial::from_coeffs(vec![int(-(i as i64)), int(1)]);
        acc = (&acc * &factor).scale(&Rational::new(1.into(), (i as i64 + 1).into()));
    }
    acc
}

/// The unique polynomial of degree `< points.len()` through all points,
/// built from Newton divided differences.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    let n = points.len();
    for i in 0..n {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(Error::DuplicateAbscissa(format_rational(&points[i].0)));
            }
        }
    }
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut result = Polynomial::zero();
    for i in (0..n).rev() {
        let node = Polynomial::from_coeffs(vec![-xs[i].clone(), int(1)]);
        result = &(&result * &node) + &Polynomial::constant(table[i].clone());
    }
    Ok(result)
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Polynomial {
    /// Renders `a_k*X^k + ... + a_0`, e.g. `1/6*X^3 + 1/2*X^2 + 1/3*X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            if k == 0 {
                f.write_str(&format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", format_rational(&magnitude), var)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Serialized as the list of coefficient strings, lowest degree first.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Polynomial::zero().degree(), -1);
        assert_eq!(p(&[0, 0, 0]).degree(), -1);
        assert_eq!(p(&[5]).degree(), 0);
        assert_eq!(p(&[1, 0, 3, 0]).degree(), 2);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        let q = p(&[3, -2, 7]);
        assert_eq!(&q + &Polynomial::zero(), q);
        let e0 = p(&[1, 2]);
        let e1 = p(&[2, 4, 3]);
        let x2 = (&e1 - &e0.scale(&int(2))).scale(&rat(1, 3));
        assert_eq!(x2, p(&[0, 0, 1]));
        assert_eq!(&q - &q, Polynomial::zero());
        assert_eq!(q.scale(&int(0)), Polynomial::zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(binomial_poly(2).evaluate_int(5), int(10));
        assert_eq!(Polynomial::zero().evaluate(&rat(7, 3)), int(0));
        // n(n+1)(n+2)/6 at n = 4
        let tetra = (p(&[0, 1]) * p(&[1, 1]) * p(&[2, 1])).scale(&rat(1, 6));
        assert_eq!(tetra.evaluate_int(4), int(20));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[0, 0, 1]).shift(&int(2)), p(&[4, 4, 1]));
        let q = p(&[3, 1, 4, 1, 5]);
        assert_eq!(q.shift(&int(0)), q);
        let expected = (p(&[2, 1]) * p(&[1, 1])).scale(&rat(1, 2));
        assert_eq!(binomial_poly(2).shift(&int(2)), expected);
    }

    #[test]
    fn dilate_examples() {
        let half = rat(1, 2);
        assert_eq!(
            p(&[0, 0, 1]).dilate(&half).unwrap(),
            Polynomial::monomial(rat(1, 4), 2)
        );
        assert_eq!(p(&[1, 1]).dilate(&int(2)).unwrap(), p(&[1, 2]));
        let q = p(&[-3, 0, 2, 9]);
        let back = q.dilate(&int(3)).unwrap().dilate(&rat(1, 3)).unwrap();
        assert_eq!(back, q);
        assert_eq!(q.dilate(&int(0)), Err(Error::ZeroDilation));
    }

    #[test]
    fn division_examples() {
        assert_eq!(
            p(&[0, 1, 1]).euclid_div(&p(&[0, 1])).unwrap(),
            (p(&[1, 1]), Polynomial::zero())
        );
        assert_eq!(
            p(&[0, 0, 0, 1]).euclid_div(&p(&[0, 0, 1])).unwrap(),
            (p(&[0, 1]), Polynomial::zero())
        );
        // A_P for P = X^2 is X + X^2, an exact multiple of 1 + X
        assert_eq!(
            p(&[0, 1, 1]).euclid_div(&p(&[1, 1])).unwrap(),
            (p(&[0, 1]), Polynomial::zero())
        );
        assert_eq!(
            p(&[1, 2]).euclid_div(&Polynomial::zero()),
            Err(Error::DivisionByZeroPolynomial)
        );
        let (q, r) = p(&[1]).euclid_div(&p(&[0, 0, 2])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn binomial_poly_examples() {
        assert_eq!(binomial_poly(0), Polynomial::one());
        assert_eq!(binomial_poly(1), Polynomial::x());
        assert_eq!(
            binomial_poly(2),
            Polynomial::from_coeffs(vec![int(0), rat(-1, 2), rat(1, 2)])
        );
        for d in 0..10u32 {
            let b = binomial_poly(d);
            assert_eq!(b.degree(), d as i64);
            for r in 0..d as i64 {
                assert!(b.evaluate_int(r).is_zero());
            }
            assert_eq!(b.evaluate_int(d as i64), int(1));
        }
    }

    #[test]
    fn interpolation_examples() {
        let pts = vec![(int(0), int(1)), (int(1), int(2)), (int(2), int(5))];
        assert_eq!(interpolate(&pts).unwrap(), p(&[1, 0, 1]));
        assert_eq!(
            interpolate(&[(int(4), rat(2, 7))]).unwrap(),
            Polynomial::constant(rat(2, 7))
        );
        let cube = p(&[0, 0, 0, 1]);
        let pts: Vec<_> = (0..4).map(|x| (int(x), cube.evaluate_int(x))).collect();
        assert_eq!(interpolate(&pts).unwrap(), cube);
        assert!(matches!(
            interpolate(&[(int(1), int(0)), (int(1), int(2))]),
            Err(Error::DuplicateAbscissa(_))
        ));
        assert!(interpolate(&[]).unwrap().is_zero());
    }

    #[test]
    fn rendering() {
        let s = Polynomial::from_coeffs(vec![int(0), rat(1, 3), rat(1, 2), rat(1, 6)]);
        assert_eq!(s.to_string(), "1/6*X^3 + 1/2*X^2 + 1/3*X");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "X^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-X");
        assert_eq!(p(&[2, -3]).to_string(), "-3*X + 2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(rat(-1, 4)).to_string(), "-1/4");
    }

    #[test]
    fn json_uses_rational_strings() {
        let q = Polynomial::from_coeffs(vec![rat(-1, 4), int(0), int(1)]);
        let text = serde_json::to_string(&q).unwrap();
        assert_eq!(text, r#"["-1/4","0","1"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&text).unwrap(), q);
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-9i64..=9, 0..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn division_round_trip(a in small_poly(8), b in small_poly(8)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.euclid_div(&b).unwrap();
            prop_assert_eq!(&(&b * &q) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn shift_inverse(a in small_poly(8), n in -20i64..20, d in 1i64..6) {
            let c = rat(n, d);
            prop_assert_eq!(a.shift(&c).shift(&-c.clone()), a);
        }

        #[test]
        fn dilate_multiplicative(a in small_poly(6), x in 1i64..5, y in -4i64..4) {
            prop_assume!(y != 0);
            let (cx, cy) = (rat(x, 3), int(y));
            let twice = a.dilate(&cx).unwrap().dilate(&cy).unwrap();
            prop_assert_eq!(twice, a.dilate(&(&cx * &cy)).unwrap());
        }

        #[test]
        fn interpolation_inverts_sampling(a in small_poly(7), extra in 0usize..3, start in -5i64..5) {
            let n = (a.degree() + 1).max(0) as usize + extra;
            let pts: Vec<_> = (0..n as i64)
                .map(|i| (int(start + 2 * i), a.evaluate_int(start + 2 * i)))
                .collect();
            if n == 0 {
                prop_assert!(a.is_zero());
            } else {
                prop_assert_eq!(interpolate(&pts).unwrap(), a);
            }
        }
    }
}
