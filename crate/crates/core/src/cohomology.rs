//! Poincaré polynomials and equivariant Hilbert series of `R_{n,G}`.
//!
//! For a class `c` of `W` with `det(1 - s*w) = D_c(s)`:
//!
//! * `E_c(t) = D_c(-t)` is the graded trace of `w` on `Λ t*` (generators in
//!   degree 1), so `E_c(t)^n` is its trace on `H(T^n)`;
//! * `C_c(t) = Π_i (1 - t^{2 d_i}) / D_c(t^2)` is its trace on the
//!   coinvariant algebra `H(G/T)` (generators in degree 2).
//!
//! The Poincaré polynomial is `(1/|W|) Σ_c |c| E_c(t)^n C_c(t)` and the
//! equivariant series is `(1/|W|) Σ_c |c| E_c(t)^n / D_c(t^2)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::chartab::{decompose_graded, CharacterPoly, CharacterTable, GradedClassFunction};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::poly::{ExactPoly, RationalFunction};
use crate::weyl::{CartanType, ConjClassData, Family, WeylData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareResult {
    pub cartan: CartanType,
    pub n: u32,
    pub poly: ExactPoly,
    /// `poly(1)`, the total Betti number.
    pub total_dim: BigUint,
}

impl PoincareResult {
    pub fn betti_numbers(&self) -> Vec<BigInt> {
        self.poly
            .integer_coefficients()
            .expect("checked integral at construction")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantResult {
    pub cartan: CartanType,
    pub n: u32,
    /// `P(t) / Π_i (1 - t^{2 d_i})`, unreduced.
    pub series: RationalFunction,
    /// Series coefficients for degrees `0..=truncate`.
    pub truncation: Vec<BigInt>,
}

/// Graded character of `w` on `H(T^n)`: `det(1 + t*w)^n`.
pub fn exterior_char(class: &ConjClassData, n: u32) -> ExactPoly {
    class.det_poly.negate_variable().pow(n)
}

/// `Π_i (1 - t^{2 d_i})`, the Hilbert series denominator of `H_G`.
pub fn invariant_denominator(weyl: &WeylData) -> ExactPoly {
    weyl.degrees
        .iter()
        .map(|&d| &ExactPoly::one() - &ExactPoly::monomial(BigRational::one(), 2 * d))
        .product()
}

/// Graded character of `w` on the coinvariant algebra, degrees doubled.
pub fn coinvariant_graded_char(weyl: &WeylData, class: &ConjClassData) -> Result<ExactPoly> {
    invariant_denominator(weyl).div_exact(&class.det_poly.inflate(2))
}

fn rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// `(1/|W|) Σ_c |c| χ(c) E_c(t)^n C_c(t)`: the graded multiplicity of the
/// class function `chi` in `H(G/T × T^n)`. With `chi` trivial this is the
/// Poincaré polynomial.
pub fn isotypic_poincare(weyl: &WeylData, n: u32, chi: &[BigRational]) -> Result<ExactPoly> {
    if chi.len() != weyl.classes.len() {
        return Err(Error::LengthMismatch {
            expected: weyl.classes.len(),
            got: chi.len(),
        });
    }
    let terms = weyl
        .classes
        .par_iter()
        .zip(chi.par_iter())
        .map(|(class, value)| {
            let coinv = coinvariant_graded_char(weyl, class)?;
            let weight = rational(&class.size) * value;
            Ok((&exterior_char(class, n) * &coinv).scale(&weight))
        })
        .collect::<Result<Vec<ExactPoly>>>()?;
    let total: ExactPoly = terms.into_iter().sum();
    Ok(total.scale(&rational(&weyl.order).recip()))
}

fn check_nonnegative_integral(degree: u32, c: &BigRational) -> Result<()> {
    if !c.is_integer() {
        return Err(Error::NonIntegral {
            degree,
            value: c.to_string(),
        });
    }
    if c.is_negative() {
        return Err(Error::NegativeCoefficient {
            degree,
            value: c.to_string(),
        });
    }
    Ok(())
}

pub fn poincare_from_weyl(weyl: &WeylData, n: u32) -> Result<PoincareResult> {
    let trivial = vec![BigRational::one(); weyl.classes.len()];
    let poly = isotypic_poincare(weyl, n, &trivial)?;
    for (d, c) in poly.terms() {
        check_nonnegative_integral(d, c)?;
    }
    let total = poly.eval(&BigRational::one());
    let total_dim = total
        .to_integer()
        .to_biguint()
        .expect("non-negative after positivity check");
    Ok(PoincareResult {
        cartan: weyl.cartan,
        n,
        poly,
        total_dim,
    })
}

/// Poincaré polynomial of `R_{n,G}`.
pub fn poincare_poly(cartan: CartanType, n: u32) -> Result<PoincareResult> {
    poincare_from_weyl(&WeylData::new(cartan), n)
}

/// Equivariant series as `P(t) / Π_i (1 - t^{2 d_i})`.
pub fn equivariant_series_factorized(weyl: &WeylData, n: u32) -> Result<RationalFunction> {
    let p = poincare_from_weyl(weyl, n)?;
    RationalFunction::new(p.poly, invariant_denominator(weyl))
}

/// Equivariant series as the class sum `(1/|W|) Σ_c |c| E_c(t)^n / D_c(t^2)`,
/// accumulated term by term over least common denominators. Independent of
/// the coinvariant characters.
pub fn equivariant_series_by_classes(weyl: &WeylData, n: u32) -> Result<RationalFunction> {
    let terms = weyl
        .classes
        .par_iter()
        .map(|class| {
            RationalFunction::new(
                exterior_char(class, n).scale(&rational(&class.size)),
                class.det_poly.inflate(2),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut acc = RationalFunction::from_poly(ExactPoly::zero());
    for term in &terms {
        acc = acc.add(term);
    }
    Ok(acc.scale(&rational(&weyl.order).recip()))
}

pub fn equivariant_from_weyl(weyl: &WeylData, n: u32, truncate: u32) -> Result<EquivariantResult> {
    let series = equivariant_series_factorized(weyl, n)?;
    let truncation = series
        .series_expand(truncate)?
        .into_iter()
        .enumerate()
        .map(|(d, c)| {
            check_nonnegative_integral(d as u32, &c)?;
            Ok(c.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivariantResult {
        cartan: weyl.cartan,
        n,
        series,
        truncation,
    })
}

/// `G`-equivariant Hilbert series of `R_{n,G}`, expanded through `truncate`.
pub fn equivariant_hilbert(cartan: CartanType, n: u32, truncate: u32) -> Result<EquivariantResult> {
    equivariant_from_weyl(&WeylData::new(cartan), n, truncate)
}

/// `dim H^degree(R_{n,G})`.
pub fn betti(cartan: CartanType, n: u32, degree: u32) -> Result<BigUint> {
    let p = poincare_poly(cartan, n)?;
    Ok(p.poly
        .coeff(degree)
        .to_integer()
        .to_biguint()
        .expect("non-negative"))
}

/// Primes dividing `|W|`: the only primes at which `H^*(R_{n,G}; Z)` can
/// carry torsion.
pub fn torsion_primes(cartan: CartanType) -> BTreeSet<u64> {
    // |W| is the product of the invariant degrees.
    crate::weyl::invariant_degrees(cartan)
        .into_iter()
        .flat_map(|d| prime_factors(d as u64))
        .collect()
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Betti numbers of `R_{n,SU(2)}` in closed form: `C(n,d)` for even `d` and
/// `C(n,d-2)` for odd `d`.
pub fn su2_betti_oracle(n: u32, degree: u32) -> BigUint {
    let k = if degree % 2 == 0 {
        Some(degree)
    } else {
        degree.checked_sub(2)
    };
    match k {
        Some(k) if k <= n => binomial(n, k),
        _ => BigUint::zero(),
    }
}

fn binomial(n: u32, k: u32) -> BigUint {
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| {
        let (q, r) = (acc * BigUint::from(n - i)).div_rem(&BigUint::from(i + 1));
        debug_assert!(r.is_zero());
        q
    })
}

/// Character-coefficient factors for type A: `H(R_{n,G})` is the trivial
/// isotypic part of `exterior^n · coinvariant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WDecomposition {
    pub cartan: CartanType,
    pub n: u32,
    pub table: CharacterTable,
    /// `Λ t*` with generators in degree 1.
    pub exterior: CharacterPoly,
    /// Coinvariant algebra with generators in degree 2.
    pub coinvariant: CharacterPoly,
}

impl WDecomposition {
    /// `⟨χ_1, (exterior)^n (coinvariant)⟩`.
    pub fn render(&self, latex: bool) -> String {
        if latex {
            format!(
                "P_t = \\langle \\chi_{{1}}, ({})^{{{}}}({}) \\rangle",
                self.exterior.render(true),
                self.n,
                self.coinvariant.render(true)
            )
        } else {
            format!(
                "P_t = <χ_1, ({})^{} ({})>",
                self.exterior.render(false),
                self.n,
                self.coinvariant.render(false)
            )
        }
    }
}

pub fn graded_w_decomposition(cartan: CartanType, n: u32) -> Result<WDecomposition> {
    if cartan.family() != Family::A {
        return Err(Error::UnsupportedFamily(cartan.family().letter()));
    }
    let weyl = WeylData::new(cartan);
    let limits = Limits {
        max_table: cartan.rank() + 1,
        ..Limits::default()
    };
    let table = CharacterTable::new(cartan.rank() + 1, &limits)?;
    let exterior: Vec<ExactPoly> = weyl.classes.iter().map(|c| exterior_char(c, 1)).collect();
    let coinvariant = weyl
        .classes
        .iter()
        .map(|c| coinvariant_graded_char(&weyl, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(WDecomposition {
        cartan,
        n,
        exterior: decompose_graded(&GradedClassFunction::from_class_polys(&exterior), &table)?,
        coinvariant: decompose_graded(&GradedClassFunction::from_class_polys(&coinvariant), &table)?,
        table,
    })
}

/// `Π_i (1 + t^{2 d_i - 1})`, the Poincaré polynomial of `G` itself.
pub fn group_poincare(weyl: &WeylData) -> ExactPoly {
    weyl.degrees
        .iter()
        .map(|&d| &ExactPoly::one() + &ExactPoly::monomial(BigRational::one(), 2 * d - 1))
        .product()
}

/// `2^{n·rank}`.
pub fn expected_total_dim(cartan: CartanType, n: u32) -> BigUint {
    BigUint::one() << (n as usize * cartan.rank())
}

/// Top degree of `H(R_{n,G})`: `n·rank + dim(G/T)`.
pub fn top_degree(weyl: &WeylData, n: u32) -> u32 {
    let flag: u32 = weyl.degrees.iter().map(|&d| 2 * d - 2).sum();
    n * weyl.rank() as u32 + flag
}
