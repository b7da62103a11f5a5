//! Exact univariate polynomials and rational functions over `Q`.
//!
//! Coefficients are [`BigRational`]s stored sparsely by degree. The zero
//! coefficient is never stored, so two polynomials are equal exactly when
//! their maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A univariate polynomial in `t` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    coeffs: BTreeMap<u32, BigRational>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^degree`.
    pub fn monomial(c: BigRational, degree: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from dense, degree-ascending integer coefficients.
    pub fn from_ints(dense: &[i64]) -> Self {
        Self::from_terms(
            dense
                .iter()
                .enumerate()
                .map(|(d, &c)| (d as u32, BigRational::from_integer(c.into()))),
        )
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated
    /// degrees are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, BigRational)>,
    {
        let mut coeffs: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (d, c) in terms {
            *coeffs.entry(d).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigRational {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in ascending degree order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigRational)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// Dense ascending coefficients for degrees `0..=max_degree`.
    pub fn to_dense(&self, max_degree: u32) -> Vec<BigRational> {
        (0..=max_degree).map(|d| self.coeff(d)).collect()
    }

    /// Dense ascending coefficients through the top degree (empty for zero).
    pub fn coefficients(&self) -> Vec<BigRational> {
        match self.degree() {
            Some(top) => self.to_dense(top),
            None => Vec::new(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Dense integer coefficients, or `None` if some coefficient is not an integer.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coefficients()
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&d, a)| (d, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d, if d % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `p(t^k)` for `k >= 1`.
    pub fn inflate(&self, k: u32) -> Self {
        assert!(k >= 1, "inflate by zero");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d * k, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (&d, c) in self.coeffs.iter().rev() {
            acc *= pow_rational(x, prev - d);
            acc += c;
            prev = d;
        }
        acc * pow_rational(x, prev)
    }

    /// Exact quotient `p / q`.
    ///
    /// Division runs from the lowest degree upward and fails with
    /// [`Error::InexactDivision`] as soon as a remainder term cannot be
    /// cancelled.
    pub fn div_exact(&self, q: &ExactPoly) -> Result<ExactPoly> {
        let (q_low, q_lead) = match q.coeffs.iter().next() {
            Some((&d, c)) => (d, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let q_top = q.degree().unwrap();
        let Some(p_top) = self.degree() else {
            return Ok(Self::zero());
        };
        if p_top < q_top {
            return Err(Error::InexactDivision);
        }
        let max_shift = p_top - q_top;
        let mut rem = self.coeffs.clone();
        let mut quot = BTreeMap::new();
        while let Some((&d, c)) = rem.iter().next() {
            if d < q_low || d - q_low > max_shift {
                return Err(Error::InexactDivision);
            }
            let shift = d - q_low;
            let factor = c / &q_lead;
            for (&qd, qc) in &q.coeffs {
                let slot = rem.entry(qd + shift).or_insert_with(BigRational::zero);
                *slot -= &factor * qc;
                if slot.is_zero() {
                    rem.remove(&(qd + shift));
                }
            }
            quot.insert(shift, factor);
        }
        Ok(Self { coeffs: quot })
    }

    /// Euclidean division by descending degree: `self = q * div + r` with
    /// `deg r < deg div`.
    pub fn div_rem(&self, div: &ExactPoly) -> Result<(ExactPoly, ExactPoly)> {
        let (div_top, div_lead) = match div.coeffs.iter().next_back() {
            Some((&d, c)) => (d, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = BTreeMap::new();
        while let Some((&d, c)) = rem.iter().next_back() {
            if d < div_top {
                break;
            }
            let shift = d - div_top;
            let factor = c / &div_lead;
            for (&qd, qc) in &div.coeffs {
                let slot = rem.entry(qd + shift).or_insert_with(BigRational::zero);
                *slot -= &factor * qc;
                if slot.is_zero() {
                    rem.remove(&(qd + shift));
                }
            }
            quot.insert(shift, factor);
        }
        Ok((Self { coeffs: quot }, Self { coeffs: rem }))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ExactPoly) -> ExactPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.coeffs.values().next_back().cloned() {
            Some(lead) => a.scale(&lead.recip()),
            None => a,
        }
    }
}

fn pow_rational(x: &BigRational, k: u32) -> BigRational {
    num_traits::pow(x.clone(), k as usize)
}

impl From<i64> for ExactPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }
}

impl AddAssign<&ExactPoly> for ExactPoly {
    fn add_assign(&mut self, rhs: &ExactPoly) {
        for (&d, c) in &rhs.coeffs {
            let slot = self.coeffs.entry(d).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                self.coeffs.remove(&d);
            }
        }
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, rhs: ExactPoly) -> ExactPoly {
        self += &rhs;
        self
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self + &(-rhs)
    }
}

impl Sub for ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: ExactPoly) -> ExactPoly {
        &self - &rhs
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let (lo, hi) = (
            self.low_degree().unwrap() + rhs.low_degree().unwrap(),
            self.degree().unwrap() + rhs.degree().unwrap(),
        );
        // Dense accumulation; products of class polynomials fill in quickly.
        let mut acc = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (&da, ca) in &self.coeffs {
            for (&db, cb) in &rhs.coeffs {
                acc[(da + db - lo) as usize] += ca * cb;
            }
        }
        ExactPoly {
            coeffs: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32 + lo, c))
                .collect(),
        }
    }
}

impl Mul for ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: ExactPoly) -> ExactPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for ExactPoly {
    fn sum<I: Iterator<Item = ExactPoly>>(iter: I) -> Self {
        iter.fold(ExactPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for ExactPoly {
    fn product<I: Iterator<Item = ExactPoly>>(iter: I) -> Self {
        iter.fold(ExactPoly::one(), |acc, p| acc * p)
    }
}

/// Renders as `1 + t^2 + 2*t^3`, ascending by degree.
impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, "t", PolyStyle::Plain)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyStyle {
    Plain,
    Latex,
}

/// Writes `p` in variable `var`, ascending by degree.
pub fn write_poly<W: fmt::Write>(
    out: &mut W,
    p: &ExactPoly,
    var: &str,
    style: PolyStyle,
) -> fmt::Result {
    if p.is_zero() {
        return out.write_str("0");
    }
    for (i, (d, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.write_str("-")?,
            (0, false) => {}
            (_, true) => out.write_str(" - ")?,
            (_, false) => out.write_str(" + ")?,
        }
        let mag = c.abs();
        let unit = mag.is_one();
        if d == 0 || !unit {
            match style {
                PolyStyle::Latex if !mag.is_integer() => {
                    write!(out, "\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())?
                }
                _ => write!(out, "{mag}")?,
            }
        }
        if d > 0 {
            if !unit && style == PolyStyle::Plain {
                out.write_str("*")?;
            }
            match (d, style) {
                (1, _) => out.write_str(var)?,
                (_, PolyStyle::Plain) => write!(out, "{var}^{d}")?,
                (_, PolyStyle::Latex) => write!(out, "{var}^{{{d}}}")?,
            }
        }
    }
    Ok(())
}

impl ExactPoly {
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        write_poly(&mut s, self, "t", PolyStyle::Latex).expect("write to string");
        s
    }
}

/// A quotient of two [`ExactPoly`]s.
///
/// The denominator is nonzero and its lowest-degree coefficient is 1. The
/// fraction is not automatically reduced; use [`RationalFunction::reduced`]
/// for the lowest-terms form and [`RationalFunction::same_function`] for
/// value equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: ExactPoly,
    denominator: ExactPoly,
}

impl RationalFunction {
    pub fn new(numerator: ExactPoly, denominator: ExactPoly) -> Result<Self> {
        let lead = denominator
            .terms()
            .next()
            .map(|(_, c)| c.clone())
            .ok_or(Error::ZeroDenominator)?;
        let inv = lead.recip();
        Ok(Self {
            numerator: numerator.scale(&inv),
            denominator: denominator.scale(&inv),
        })
    }

    pub fn from_poly(p: ExactPoly) -> Self {
        Self {
            numerator: p,
            denominator: ExactPoly::one(),
        }
    }

    pub fn numerator(&self) -> &ExactPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &ExactPoly {
        &self.denominator
    }

    /// Lowest-terms form: numerator and denominator share no common factor,
    /// and the denominator's lowest coefficient is 1. Equal functions have
    /// structurally equal reduced forms.
    pub fn reduced(&self) -> Self {
        if self.numerator.is_zero() {
            return Self::from_poly(ExactPoly::zero());
        }
        let g = self.numerator.gcd(&self.denominator);
        let num = self.numerator.div_exact(&g).expect("gcd divides numerator");
        let den = self
            .denominator
            .div_exact(&g)
            .expect("gcd divides denominator");
        Self::new(num, den).expect("nonzero denominator")
    }

    /// Value equality by cross-multiplication.
    pub fn same_function(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.denominator == other.denominator {
            return Self {
                numerator: &self.numerator + &other.numerator,
                denominator: self.denominator.clone(),
            };
        }
        let g = self.denominator.gcd(&other.denominator);
        let left = other.denominator.div_exact(&g).expect("gcd divides");
        let right = self.denominator.div_exact(&g).expect("gcd divides");
        let num = &(&self.numerator * &left) + &(&other.numerator * &right);
        Self::new(num, &self.denominator * &left).expect("nonzero denominator")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("nonzero denominator")
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// Power-series coefficients of `numerator / denominator` for degrees
    /// `0..=max_degree`.
    pub fn series_expand(&self, max_degree: u32) -> Result<Vec<BigRational>> {
        let c0 = self.denominator.coeff(0);
        if c0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let inv = c0.recip();
        let den: Vec<(u32, &BigRational)> = self
            .denominator
            .terms()
            .filter(|&(d, _)| d > 0 && d <= max_degree)
            .collect();
        let mut out: Vec<BigRational> = Vec::with_capacity(max_degree as usize + 1);
        for k in 0..=max_degree {
            let mut acc = self.numerator.coeff(k);
            for &(d, c) in &den {
                if d > k {
                    break;
                }
                acc -= c * &out[(k - d) as usize];
            }
            out.push(acc * &inv);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert_eq!(&p(&[3, 0, 5]) + &ExactPoly::zero(), p(&[3, 0, 5]));
        assert_eq!(&p(&[1, 0, 1]) + &p(&[0, 0, 0, 2]), p(&[1, 0, 1, 2]));
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let s = &p(&[1, 2, 3]) - &p(&[1, 2, 3]);
        assert!(s.is_zero());
        assert_eq!(s.degree(), None);
        assert_eq!(s, ExactPoly::zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        let lhs = &p(&[1, 1]).pow(2) * &p(&[1, 0, 1]);
        assert_eq!(lhs, p(&[1, 2, 2, 2, 1]));
        assert_eq!(lhs.eval(&q(2)), q(45));
        assert_eq!(&p(&[4, 0, 7]) * &ExactPoly::one(), p(&[4, 0, 7]));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p(&[1, 1]).pow(0), ExactPoly::one());
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
        assert_eq!(p(&[1, -1]).pow(3), p(&[1, -3, 3, -1]));
    }

    #[test]
    fn div_exact_examples() {
        let num = p(&[1, 0, 0, 0, -1]);
        assert_eq!(num.div_exact(&p(&[1, 0, -1])).unwrap(), p(&[1, 0, 1]));
        assert_eq!(num.div_exact(&p(&[1, 0, 1])).unwrap(), p(&[1, 0, -1]));
        assert_eq!(
            p(&[1, 1]).div_exact(&p(&[1, -1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            p(&[1]).div_exact(&ExactPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 0, 0, 1]).eval(&q(1)), q(2));
        assert_eq!(p(&[1, 0, 1, 2]).eval(&q(1)), q(4));
        assert_eq!(ExactPoly::zero().eval(&q(7)), q(0));
        assert_eq!(p(&[0, 0, 1]).eval(&q(3)), q(9));
    }

    #[test]
    fn series_examples() {
        let geo = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(geo.series_expand(3).unwrap(), vec![q(1); 4]);

        let su2 = RationalFunction::new(p(&[1, 0, 0, 1]), p(&[1, 0, 0, 0, -1])).unwrap();
        let want: Vec<_> = [1, 0, 0, 1, 1, 0, 0, 1, 1].iter().map(|&c| q(c)).collect();
        assert_eq!(su2.series_expand(8).unwrap(), want);

        let zero = RationalFunction::new(ExactPoly::zero(), p(&[1, -1])).unwrap();
        assert_eq!(zero.series_expand(2).unwrap(), vec![q(0); 3]);

        let pole = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert_eq!(pole.series_expand(2), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn rational_function_normalizes_denominator() {
        let f = RationalFunction::new(p(&[2]), p(&[0, -2, 4])).unwrap();
        assert_eq!(f.denominator(), &p(&[0, 1, -2]));
        assert_eq!(f.numerator(), &p(&[-1]));
        assert_eq!(
            RationalFunction::new(p(&[1]), ExactPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn reduced_form_is_canonical() {
        // (1 + t^3)/(1 - t^4) and (1 - t + t^2)/((1 - t)(1 + t^2))
        let a = RationalFunction::new(p(&[1, 0, 0, 1]), p(&[1, 0, 0, 0, -1])).unwrap();
        let b = RationalFunction::new(p(&[1, -1, 1]), &p(&[1, -1]) * &p(&[1, 0, 1])).unwrap();
        assert_ne!(a, b);
        assert!(a.same_function(&b));
        assert_eq!(a.reduced(), b.reduced());
        assert_eq!(a.reduced(), b);
    }

    #[test]
    fn rational_add_matches_series() {
        let a = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let b = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap();
        let s = a.add(&b);
        // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
        let want = RationalFunction::new(p(&[2]), p(&[1, 0, -1])).unwrap();
        assert!(s.same_function(&want));
        assert_eq!(s.reduced(), want);
    }

    #[test]
    fn display_plain_and_latex() {
        assert_eq!(p(&[1, 0, 1, 2]).to_string(), "1 + t^2 + 2*t^3");
        assert_eq!(p(&[0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -3]).to_string(), "-t - 3*t^10");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, 1, 2, 0, 0, 0, 0, 0, 0, 1]).to_latex(), "1 + t^{2} + 2t^{3} + t^{10}");
        let half = ExactPoly::monomial(BigRational::new(1.into(), 2.into()), 1);
        assert_eq!(half.to_string(), "1/2*t");
        assert_eq!(half.to_latex(), "\\frac{1}{2}t");
    }

    #[test]
    fn substitutions() {
        assert_eq!(p(&[1, 1, 1]).negate_variable(), p(&[1, -1, 1]));
        assert_eq!(p(&[1, 1]).inflate(2), p(&[1, 0, 1]));
    }

    fn small_poly() -> impl Strategy<Value = ExactPoly> {
        prop::collection::vec(-5i64..=5, 0..6).prop_map(|v| ExactPoly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn div_exact_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn eval_is_homomorphism(a in small_poly(), b in small_poly(), x in -4i64..=4) {
            let x = q(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn series_of_polynomial_is_its_coefficients(a in small_poly(), d in 0u32..8) {
            let f = RationalFunction::from_poly(a.clone());
            prop_assert_eq!(f.series_expand(d).unwrap(), a.to_dense(d));
        }

        #[test]
        fn reduced_preserves_value(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let f = RationalFunction::new(&a * &c, &b * &c).unwrap();
            let g = RationalFunction::new(a, b).unwrap();
            prop_assert_eq!(f.reduced(), g.reduced());
        }
    }
}
