//! Self-checks run by the `verify` subcommand.
//!
//! Every check recomputes an invariant the engine must satisfy and reports
//! one [`CheckOutcome`]. Informational lines (status `Info`) report
//! quantities that have no pass/fail meaning.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chartab::GradedClassFunction;
use crate::cohomology::{
    coinvariant_graded_char, equivariant_from_weyl, equivariant_series_by_classes,
    equivariant_series_factorized, expected_total_dim, graded_w_decomposition, group_poincare,
    isotypic_poincare, poincare_from_weyl, su2_betti_oracle, torsion_primes,
};
use crate::error::Result;
use crate::poly::{ExactPoly, RationalFunction};
use crate::weyl::{CartanType, Family, WeylData};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cartan: CartanType,
    pub n: u32,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        write!(f, "{tag} {} n={} {}", self.cartan, self.n, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Types and tuple sizes covered by `verify --all`.
pub fn standard_suite() -> Vec<(CartanType, u32)> {
    let types = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4"];
    types
        .iter()
        .flat_map(|t| {
            let cartan: CartanType = t.parse().expect("valid type");
            (0..=3).map(move |n| (cartan, n))
        })
        .collect()
}

/// Degree through which Molien series are compared.
pub const MOLIEN_DEGREE: u32 = 30;

struct Recorder {
    cartan: CartanType,
    n: u32,
    out: Vec<CheckOutcome>,
}

impl Recorder {
    fn check(&mut self, name: &'static str, result: Result<Option<String>>) {
        let (status, detail) = match result {
            Ok(None) => (Status::Pass, String::new()),
            Ok(Some(why)) => (Status::Fail, why),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.out.push(CheckOutcome {
            name,
            cartan: self.cartan,
            n: self.n,
            status,
            detail,
        });
    }

    fn info(&mut self, name: &'static str, detail: String) {
        self.out.push(CheckOutcome {
            name,
            cartan: self.cartan,
            n: self.n,
            status: Status::Info,
            detail,
        });
    }
}

fn rat(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

fn expect_eq<T: PartialEq + fmt::Display>(got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("got {got}, expected {want}"))
}

/// `(1/|W|) Σ_c |c| / D_c(s)` and `Π_i 1/(1 - s^{d_i})`, both expanded.
pub fn molien_pair(weyl: &WeylData, degree: u32) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    let mut avg = vec![BigRational::zero(); degree as usize + 1];
    for class in &weyl.classes {
        let f = RationalFunction::new(ExactPoly::one(), class.det_poly.clone())?;
        for (slot, c) in avg.iter_mut().zip(f.series_expand(degree)?) {
            *slot += c * rat(&class.size);
        }
    }
    let order = rat(&weyl.order);
    let avg = avg.into_iter().map(|c| c / &order).collect();
    let den: ExactPoly = weyl
        .degrees
        .iter()
        .map(|&d| &ExactPoly::one() - &ExactPoly::monomial(BigRational::one(), d))
        .product();
    let product = RationalFunction::new(ExactPoly::one(), den)?.series_expand(degree)?;
    Ok((avg, product))
}

fn prime_divisors(n: &BigUint) -> Vec<u64> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while n > BigUint::one() {
        let bp = BigUint::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += 1;
    }
    out
}

/// Runs every invariant check for one `(type, n)` pair.
pub fn run_checks(cartan: CartanType, n: u32) -> Vec<CheckOutcome> {
    let weyl = WeylData::new(cartan);
    let mut rec = Recorder {
        cartan,
        n,
        out: Vec::new(),
    };

    let total: BigUint = weyl.classes.iter().map(|c| c.size.clone()).sum();
    rec.check("class-sizes-sum-to-order", Ok(expect_eq(total, weyl.order.clone())));

    let prod: BigUint = weyl.degrees.iter().map(|&d| BigUint::from(d)).product();
    rec.check("degree-product-is-order", Ok(expect_eq(prod, weyl.order.clone())));

    rec.check(
        "molien-series",
        molien_pair(&weyl, MOLIEN_DEGREE).map(|(avg, prod)| {
            (avg != prod).then(|| "class average differs from product formula".to_string())
        }),
    );

    let coinv: Result<Vec<ExactPoly>> = weyl
        .classes
        .iter()
        .map(|c| coinvariant_graded_char(&weyl, c))
        .collect();
    rec.check(
        "regular-representation",
        coinv.clone().map(|cs| {
            let one = BigRational::one();
            cs.iter().enumerate().find_map(|(i, c)| {
                let want = if i == weyl.identity_index() {
                    rat(&weyl.order)
                } else {
                    BigRational::zero()
                };
                let got = c.eval(&one);
                (got != want).then(|| format!("class {} gives {got}", weyl.classes[i].descriptor))
            })
        }),
    );
    rec.check(
        "trivial-isotypic-normalization",
        coinv.map(|cs| {
            let avg: ExactPoly = cs
                .iter()
                .zip(&weyl.classes)
                .map(|(c, class)| c.scale(&rat(&class.size)))
                .sum::<ExactPoly>()
                .scale(&rat(&weyl.order).recip());
            expect_eq(avg, ExactPoly::one())
        }),
    );

    let poincare = poincare_from_weyl(&weyl, n);
    rec.check(
        "positivity",
        poincare.as_ref().map(|_| None).map_err(Clone::clone),
    );
    rec.check(
        "dimension-identity",
        poincare
            .as_ref()
            .map(|p| expect_eq(p.total_dim.clone(), expected_total_dim(cartan, n)))
            .map_err(Clone::clone),
    );
    rec.check(
        "group-cohomology-n1",
        poincare_from_weyl(&weyl, 1).map(|p| expect_eq(p.poly, group_poincare(&weyl))),
    );

    let formality = equivariant_series_by_classes(&weyl, n).and_then(|by_classes| {
        let factorized = equivariant_series_factorized(&weyl, n)?;
        Ok(expect_eq(by_classes.reduced(), factorized.reduced()))
    });
    rec.check("formality-factorization", formality);

    let depth = crate::cohomology::top_degree(&weyl, n) + 10;
    rec.check(
        "equivariant-positivity",
        equivariant_from_weyl(&weyl, n, depth).map(|_| None),
    );

    let primes: Vec<u64> = torsion_primes(cartan).into_iter().collect();
    rec.check(
        "torsion-primes",
        Ok((primes != prime_divisors(&weyl.order))
            .then(|| format!("got {primes:?} for |W| = {}", weyl.order))),
    );

    if cartan.family() == Family::A {
        if cartan.rank() == 1 {
            rec.check(
                "su2-closed-form",
                poincare.as_ref().map_err(Clone::clone).map(|p| {
                    (0..=n + 4).find_map(|d| {
                        let got = p.poly.coeff(d).to_integer();
                        let want = BigInt::from(su2_betti_oracle(n, d));
                        (got != want).then(|| format!("degree {d}: got {got}, expected {want}"))
                    })
                }),
            );
        }
        type_a_checks(&mut rec, &weyl, n);
    }
    rec.out
}

fn type_a_checks(rec: &mut Recorder, weyl: &WeylData, n: u32) {
    let cartan = weyl.cartan;
    let decomposition = graded_w_decomposition(cartan, n);
    rec.check(
        "character-decomposition-recombines",
        decomposition.as_ref().map_err(Clone::clone).and_then(|d| {
            let ext: Vec<ExactPoly> = weyl
                .classes
                .iter()
                .map(|c| crate::cohomology::exterior_char(c, 1))
                .collect();
            let coinv = weyl
                .classes
                .iter()
                .map(|c| coinvariant_graded_char(weyl, c))
                .collect::<Result<Vec<_>>>()?;
            let ok = d.exterior.recombine(&d.table) == GradedClassFunction::from_class_polys(&ext)
                && d.coinvariant.recombine(&d.table)
                    == GradedClassFunction::from_class_polys(&coinv);
            Ok((!ok).then(|| "recombined class functions differ".to_string()))
        }),
    );
    rec.check(
        "coinvariant-is-group-ring",
        decomposition.as_ref().map_err(Clone::clone).map(|d| {
            let one = BigRational::one();
            (0..d.table.rows.len()).find_map(|row| {
                let got = d.coinvariant.multiplicity(&d.table.rows[row]).eval(&one);
                let want = BigRational::from_integer(d.table.dimension(row).into());
                (got != want).then(|| format!("{}: {got} != {want}", d.table.rows[row]))
            })
        }),
    );
    if let Ok(d) = &decomposition {
        // Isotypic part for the sign character, reported alongside the
        // trivial-isotypic answer for comparison only.
        let sign_row = d.table.rows.len() - 1;
        let sign = d.table.character(sign_row);
        let trivial = d.table.character(0);
        if let (Ok(chi1), Ok(chi2)) = (
            isotypic_poincare(weyl, n, &trivial),
            isotypic_poincare(weyl, n, &sign),
        ) {
            rec.info(
                "isotypic-trivial-vs-sign",
                format!("<χ_1,…> = {chi1}; <χ_2,…> = {chi2}"),
            );
        }
    }
}

/// True when no outcome failed.
pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.status != Status::Fail)
}
