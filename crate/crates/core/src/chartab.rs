//! Symmetric-group characters and graded class functions.
//!
//! Characters are computed with the Murnaghan–Nakayama rule on beta-sets:
//! removing a border strip of length `k` from a partition is the same as
//! moving one bead of its beta-set down by `k` onto an empty position, and
//! the strip's height is the number of beads jumped over.
//!
//! Irreducibles are labelled by partitions. For display they also get a
//! `χ_k` number: `χ_1` is the trivial character `(m)`, `χ_2` the sign
//! character `(1^m)`, and the rest follow in order of increasing dimension,
//! ties broken by reverse lexicographic order of the partition. For `S_4`
//! this gives `χ_3 = (2,2)`, `χ_4 = (3,1)`, `χ_5 = (2,1,1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::partition::{factorial, partitions, Partition};
use crate::poly::ExactPoly;
use crate::weyl::WeylData;

/// `χ_λ(μ)`, the value of the irreducible character `λ` on the class of
/// cycle type `μ`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            mu: mu.size(),
        });
    }
    let len = lambda.len();
    let beta: BTreeSet<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    Ok(strip_sum(&beta, mu.parts()))
}

fn strip_sum(beta: &BTreeSet<usize>, strips: &[usize]) -> i64 {
    let Some((&k, rest)) = strips.split_first() else {
        return 1;
    };
    let mut total = 0;
    for &b in beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.range(b - k + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - k);
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * strip_sum(&next, rest);
    }
    total
}

/// Character table of `S_m`.
///
/// Rows run over irreducibles in reverse lexicographic order (trivial
/// first, sign last). Columns run over classes in ascending lexicographic
/// order (identity first), matching the class order of [`WeylData`] for
/// type `A_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub m: usize,
    pub rows: Vec<Partition>,
    pub columns: Vec<Partition>,
    pub class_sizes: Vec<BigUint>,
    pub values: Vec<Vec<i64>>,
    chi_numbers: Vec<usize>,
}

impl CharacterTable {
    pub fn new(m: usize, limits: &Limits) -> Result<Self> {
        if m == 0 {
            return Err(Error::CapExceeded {
                what: "m (must be at least 1)",
                value: 0,
                cap: 1,
            });
        }
        limits.check_table(m)?;
        let rows = partitions(m);
        let columns: Vec<Partition> = rows.iter().rev().cloned().collect();
        let order = factorial(m);
        let class_sizes = columns
            .iter()
            .map(|mu| &order / mu.centralizer_order())
            .collect();
        let values = rows
            .iter()
            .map(|lambda| {
                columns
                    .iter()
                    .map(|mu| mn_character(lambda, mu).expect("same size"))
                    .collect()
            })
            .collect::<Vec<Vec<i64>>>();
        let chi_numbers = chi_numbering(&rows, &values);
        Ok(Self {
            m,
            rows,
            columns,
            class_sizes,
            values,
            chi_numbers,
        })
    }

    pub fn order(&self) -> BigUint {
        factorial(self.m)
    }

    pub fn row_index(&self, lambda: &Partition) -> Option<usize> {
        self.rows.iter().position(|r| r == lambda)
    }

    pub fn column_index(&self, mu: &Partition) -> Option<usize> {
        self.columns.iter().position(|c| c == mu)
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.row_index(lambda)?][self.column_index(mu)?])
    }

    /// Dimension of the irreducible in row `row`.
    pub fn dimension(&self, row: usize) -> i64 {
        self.values[row][0]
    }

    /// The `k` in `χ_k` for row `row` (1-based).
    pub fn chi_number(&self, row: usize) -> usize {
        self.chi_numbers[row]
    }

    /// Row indices sorted by `χ` number.
    pub fn rows_in_chi_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&r| self.chi_numbers[r]);
        idx
    }

    /// Row `row` as a class function.
    pub fn character(&self, row: usize) -> Vec<BigRational> {
        self.values[row]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect()
    }

    /// `(1/m!) Σ_c |c| f(c) g(c)` over the columns of this table.
    pub fn inner_product(&self, f: &[BigRational], g: &[BigRational]) -> Result<BigRational> {
        weighted_inner_product(&self.class_sizes, &self.order(), f, g)
    }
}

fn chi_numbering(rows: &[Partition], values: &[Vec<i64>]) -> Vec<usize> {
    let last = rows.len() - 1;
    let mut rest: Vec<usize> = (1..last).collect();
    rest.sort_by_key(|&r| values[r][0]);
    let mut numbers = vec![0; rows.len()];
    numbers[0] = 1;
    if last > 0 {
        numbers[last] = 2;
    }
    for (k, r) in rest.into_iter().enumerate() {
        numbers[r] = k + 3;
    }
    numbers
}

fn weighted_inner_product(
    sizes: &[BigUint],
    order: &BigUint,
    f: &[BigRational],
    g: &[BigRational],
) -> Result<BigRational> {
    for v in [f, g] {
        if v.len() != sizes.len() {
            return Err(Error::LengthMismatch {
                expected: sizes.len(),
                got: v.len(),
            });
        }
    }
    let total = sizes
        .iter()
        .zip(f.iter().zip(g))
        .fold(BigRational::zero(), |acc, (s, (a, b))| {
            acc + BigRational::from_integer(BigInt::from(s.clone())) * a * b
        });
    Ok(total / BigRational::from_integer(BigInt::from(order.clone())))
}

/// `(1/|W|) Σ_c |c| f(c) g(c)` over the classes of `weyl`. Characters here
/// are real, so no conjugation is applied.
pub fn inner_product(f: &[BigRational], g: &[BigRational], weyl: &WeylData) -> Result<BigRational> {
    let sizes: Vec<BigUint> = weyl.classes.iter().map(|c| c.size.clone()).collect();
    weighted_inner_product(&sizes, &weyl.order, f, g)
}

/// A polynomial in `t` whose coefficients are class functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClassFunction {
    num_classes: usize,
    terms: BTreeMap<u32, Vec<BigRational>>,
}

impl GradedClassFunction {
    pub fn zero(num_classes: usize) -> Self {
        Self {
            num_classes,
            terms: BTreeMap::new(),
        }
    }

    /// Packs per-class polynomials (one per class, in class order) into a
    /// graded class function.
    pub fn from_class_polys(polys: &[ExactPoly]) -> Self {
        let mut out = Self::zero(polys.len());
        for (c, p) in polys.iter().enumerate() {
            for (d, coeff) in p.terms() {
                out.terms
                    .entry(d)
                    .or_insert_with(|| vec![BigRational::zero(); polys.len()])[c] = coeff.clone();
            }
        }
        out
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    /// Degrees carrying a nonzero class function, with that function.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &[BigRational])> + '_ {
        self.terms.iter().map(|(&d, v)| (d, v.as_slice()))
    }

    /// The polynomial seen by a single class.
    pub fn at_class(&self, class: usize) -> ExactPoly {
        ExactPoly::from_terms(self.terms.iter().map(|(&d, v)| (d, v[class].clone())))
    }

    pub fn to_class_polys(&self) -> Vec<ExactPoly> {
        (0..self.num_classes).map(|c| self.at_class(c)).collect()
    }
}

/// One irreducible with its graded multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleComponent {
    pub label: Partition,
    pub chi: usize,
    pub multiplicity: ExactPoly,
}

/// A graded class function written as `Σ_λ m_λ(t) χ_λ`. Components are in
/// `χ` order and only irreducibles that occur are listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPoly {
    pub components: Vec<IrreducibleComponent>,
}

impl CharacterPoly {
    pub fn multiplicity(&self, label: &Partition) -> ExactPoly {
        self.components
            .iter()
            .find(|c| &c.label == label)
            .map(|c| c.multiplicity.clone())
            .unwrap_or_default()
    }

    /// Multiplicity polynomials keyed by `χ` number.
    pub fn by_chi(&self) -> BTreeMap<usize, ExactPoly> {
        self.components
            .iter()
            .map(|c| (c.chi, c.multiplicity.clone()))
            .collect()
    }

    /// `Σ_λ m_λ(t) χ_λ` evaluated back into class functions.
    pub fn recombine(&self, table: &CharacterTable) -> GradedClassFunction {
        let per_class: Vec<ExactPoly> = (0..table.columns.len())
            .map(|col| {
                self.components
                    .iter()
                    .map(|c| {
                        let row = table.row_index(&c.label).expect("label from this table");
                        let v = BigRational::from_integer(table.values[row][col].into());
                        c.multiplicity.scale(&v)
                    })
                    .sum()
            })
            .collect();
        GradedClassFunction::from_class_polys(&per_class)
    }

    /// Renders in the `χ_1 + χ_4 t + (χ_3+χ_4) t^4` style.
    pub fn render(&self, latex: bool) -> String {
        let mut by_degree: BTreeMap<u32, Vec<(usize, BigRational)>> = BTreeMap::new();
        for c in &self.components {
            for (d, m) in c.multiplicity.terms() {
                by_degree.entry(d).or_default().push((c.chi, m.clone()));
            }
        }
        if by_degree.is_empty() {
            return "0".to_string();
        }
        let chi = |k: usize| {
            if latex {
                format!("\\chi_{{{k}}}")
            } else {
                format!("χ_{k}")
            }
        };
        let mut out = Vec::new();
        for (d, mut group) in by_degree {
            group.sort_by_key(|(k, _)| *k);
            let inner: Vec<String> = group
                .iter()
                .map(|(k, m)| {
                    if m == &BigRational::from_integer(1.into()) {
                        chi(*k)
                    } else {
                        format!("{m}{}", chi(*k))
                    }
                })
                .collect();
            let body = if inner.len() == 1 {
                inner[0].clone()
            } else {
                format!("({})", inner.join("+"))
            };
            out.push(match (d, latex) {
                (0, _) => body,
                (1, _) => format!("{body} t"),
                (_, true) => format!("{body} t^{{{d}}}"),
                (_, false) => format!("{body} t^{d}"),
            });
        }
        out.join(" + ")
    }
}

impl fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Writes each graded piece of `gcf` as a non-negative integer combination
/// of the irreducibles of `table`.
pub fn decompose_graded(gcf: &GradedClassFunction, table: &CharacterTable) -> Result<CharacterPoly> {
    if gcf.num_classes() != table.columns.len() {
        return Err(Error::LengthMismatch {
            expected: table.columns.len(),
            got: gcf.num_classes(),
        });
    }
    let mut components = Vec::new();
    for row in table.rows_in_chi_order() {
        let chi = table.character(row);
        let mut terms = Vec::new();
        for (d, f) in gcf.terms() {
            let m = table.inner_product(f, &chi)?;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::NotACharacter {
                    label: table.rows[row].to_string(),
                    degree: d,
                    value: m.to_string(),
                });
            }
            terms.push((d, m));
        }
        let multiplicity = ExactPoly::from_terms(terms);
        if !multiplicity.is_zero() {
            components.push(IrreducibleComponent {
                label: table.rows[row].clone(),
                chi: table.chi_number(row),
                multiplicity,
            });
        }
    }
    Ok(CharacterPoly { components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::CartanType;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn table(m: usize) -> CharacterTable {
        CharacterTable::new(m, &Limits::default()).unwrap()
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&part(&[1, 1, 1, 1]), &part(&[2, 1, 1])).unwrap(), -1);
        assert_eq!(
            mn_character(&part(&[2, 1]), &part(&[2, 2])),
            Err(Error::SizeMismatch { lambda: 3, mu: 4 })
        );
    }

    #[test]
    fn small_tables() {
        assert_eq!(table(2).values, vec![vec![1, 1], vec![1, -1]]);
        let t3 = table(3);
        assert_eq!(t3.rows, vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(t3.columns, vec![part(&[1, 1, 1]), part(&[2, 1]), part(&[3])]);
        assert_eq!(t3.values, vec![vec![1, 1, 1], vec![2, 0, -1], vec![1, -1, 1]]);
        assert_eq!(table(1).values, vec![vec![1]]);
    }

    #[test]
    fn chi_numbers_follow_documented_rule() {
        let t4 = table(4);
        let got: Vec<(Partition, usize)> = (0..5).map(|r| (t4.rows[r].clone(), t4.chi_number(r))).collect();
        assert_eq!(
            got,
            vec![
                (part(&[4]), 1),
                (part(&[3, 1]), 4),
                (part(&[2, 2]), 3),
                (part(&[2, 1, 1]), 5),
                (part(&[1, 1, 1, 1]), 2)
            ]
        );
        assert_eq!(table(1).chi_number(0), 1);
    }

    #[test]
    fn cap_enforced() {
        let limits = Limits::default();
        assert!(CharacterTable::new(11, &limits).is_err());
        assert!(CharacterTable::new(0, &limits).is_err());
        assert!(CharacterTable::new(10, &limits).is_ok());
    }

    #[test]
    fn orthogonality_through_seven() {
        for m in 1..=7 {
            let t = table(m);
            let n = t.rows.len();
            for a in 0..n {
                for b in 0..n {
                    let ip = t.inner_product(&t.character(a), &t.character(b)).unwrap();
                    assert_eq!(ip, q((a == b) as i64), "rows m={m}");
                }
            }
            // columns: Σ_λ χ_λ(μ) χ_λ(ν) = z_μ [μ = ν]
            for a in 0..n {
                for b in 0..n {
                    let s: i64 = (0..n).map(|r| t.values[r][a] * t.values[r][b]).sum();
                    let want = if a == b {
                        i64::try_from(t.columns[a].centralizer_order()).unwrap()
                    } else {
                        0
                    };
                    assert_eq!(s, want, "columns m={m}");
                }
            }
            let dims: i64 = (0..n).map(|r| t.dimension(r).pow(2)).sum();
            assert_eq!(BigUint::from(dims as u64), t.order());
        }
    }

    #[test]
    fn inner_product_on_weyl_classes() {
        let a2 = WeylData::new("A2".parse::<CartanType>().unwrap());
        let t3 = table(3);
        let triv = t3.character(0);
        let std = t3.character(1);
        assert_eq!(inner_product(&triv, &triv, &a2).unwrap(), q(1));
        assert_eq!(inner_product(&std, &std, &a2).unwrap(), q(1));
        let a1 = WeylData::new("A1".parse::<CartanType>().unwrap());
        let t2 = table(2);
        assert_eq!(inner_product(&t2.character(0), &t2.character(1), &a1).unwrap(), q(0));
        assert!(matches!(
            inner_product(&triv, &t2.character(0), &a2),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn columns_match_weyl_class_order() {
        for m in 2..=7 {
            let w = WeylData::new(CartanType::new(crate::Family::A, m - 1).unwrap());
            let t = table(m);
            let labels: Vec<Partition> = w
                .classes
                .iter()
                .map(|c| match &c.descriptor {
                    crate::ClassDescriptor::Cycle(p) => p.clone(),
                    _ => unreachable!(),
                })
                .collect();
            assert_eq!(labels, t.columns);
            let sizes: Vec<BigUint> = w.classes.iter().map(|c| c.size.clone()).collect();
            assert_eq!(sizes, t.class_sizes);
        }
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let t2 = table(2);
        // half the regular character is not a character
        let half = GradedClassFunction::from_class_polys(&[ExactPoly::from(1), ExactPoly::zero()]);
        assert!(matches!(decompose_graded(&half, &t2), Err(Error::NotACharacter { .. })));
        // trivial minus sign
        let diff = GradedClassFunction::from_class_polys(&[ExactPoly::zero(), ExactPoly::from(2)]);
        assert!(matches!(decompose_graded(&diff, &t2), Err(Error::NotACharacter { .. })));
        let short = GradedClassFunction::from_class_polys(&[ExactPoly::one()]);
        assert!(matches!(decompose_graded(&short, &t2), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn decompose_and_render() {
        let t2 = table(2);
        // regular representation of S_2 in degrees 0 and 2: 1 + t^2 at identity, 1 - t^2 at (12)
        let gcf = GradedClassFunction::from_class_polys(&[
            ExactPoly::from_ints(&[1, 0, 1]),
            ExactPoly::from_ints(&[1, 0, -1]),
        ]);
        let cp = decompose_graded(&gcf, &t2).unwrap();
        assert_eq!(cp.to_string(), "χ_1 + χ_2 t^2");
        assert_eq!(cp.render(true), "\\chi_{1} + \\chi_{2} t^{2}");
        assert_eq!(cp.recombine(&t2), gcf);
    }
}
