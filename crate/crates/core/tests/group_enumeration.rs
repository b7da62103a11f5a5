//! Class data checked against explicit enumeration of every Weyl group
//! element as a (signed) permutation matrix.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weylcoh::{CartanType, ExactPoly, Family, WeylData};

type Matrix = Vec<Vec<BigRational>>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn determinant(mut m: Matrix) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    det
}

/// Lagrange interpolation through `(x, y)` pairs.
fn interpolate(points: &[(BigRational, BigRational)]) -> ExactPoly {
    let mut out = ExactPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = ExactPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let lin = ExactPoly::from_terms([(0, -xj.clone()), (1, BigRational::one())]);
                basis = (&basis * &lin).scale(&(xi - xj).recip());
            }
        }
        out += &basis;
    }
    out
}

/// `det(I - s*M)` as a polynomial, by evaluation at `dim + 1` points.
fn char_poly(m: &Matrix) -> ExactPoly {
    let n = m.len();
    let points: Vec<_> = (0..=n as i64)
        .map(|s| {
            let a: Matrix = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let id = if i == j { rat(1) } else { rat(0) };
                            id - rat(s) * &m[i][j]
                        })
                        .collect()
                })
                .collect();
            (rat(s), determinant(a))
        })
        .collect();
    interpolate(&points)
}

/// Every element of `W` as a matrix on its natural reflection space.
fn elements(cartan: CartanType) -> Vec<Matrix> {
    let r = cartan.rank();
    match cartan.family() {
        Family::A => {
            // S_{r+1} on the sum-zero hyperplane, basis e_i - e_{i+1}.
            let m = r + 1;
            (0..m)
                .permutations(m)
                .map(|perm| {
                    let mut mat = vec![vec![rat(0); r]; r];
                    for j in 0..r {
                        // image of e_j - e_{j+1} = e_{p(j)} - e_{p(j+1)}
                        let mut v = vec![0i64; m];
                        v[perm[j]] += 1;
                        v[perm[j + 1]] -= 1;
                        // coordinates in the simple-root basis: partial sums
                        let mut acc = 0;
                        for (i, row) in mat.iter_mut().enumerate() {
                            acc += v[i];
                            row[j] = rat(acc);
                        }
                    }
                    mat
                })
                .collect()
        }
        family => {
            let mut out = Vec::new();
            for perm in (0..r).permutations(r) {
                for signs in 0u32..(1 << r) {
                    if family == Family::D && signs.count_ones() % 2 == 1 {
                        continue;
                    }
                    let mut mat = vec![vec![rat(0); r]; r];
                    for (j, &pj) in perm.iter().enumerate() {
                        mat[pj][j] = if signs >> j & 1 == 1 { rat(-1) } else { rat(1) };
                    }
                    out.push(mat);
                }
            }
            out
        }
    }
}

fn histogram_from_elements(cartan: CartanType) -> BTreeMap<Vec<String>, u64> {
    let mut hist = BTreeMap::new();
    for m in elements(cartan) {
        let key: Vec<String> = char_poly(&m).coefficients().iter().map(|c| c.to_string()).collect();
        *hist.entry(key).or_insert(0) += 1;
    }
    hist
}

fn histogram_from_classes(w: &WeylData) -> BTreeMap<Vec<String>, u64> {
    let mut hist = BTreeMap::new();
    for c in &w.classes {
        let key: Vec<String> = c.det_poly.coefficients().iter().map(|x| x.to_string()).collect();
        *hist.entry(key).or_insert(0) += u64::try_from(c.size.clone()).unwrap();
    }
    hist
}

const TYPES: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D3", "D4"];

#[test]
fn element_count_is_group_order() {
    for t in TYPES {
        let cartan: CartanType = t.parse().unwrap();
        let w = WeylData::new(cartan);
        assert_eq!(BigUint::from(elements(cartan).len()), w.order, "{t}");
    }
}

#[test]
fn det_polys_and_sizes_match_enumeration() {
    for t in TYPES {
        let cartan: CartanType = t.parse().unwrap();
        let w = WeylData::new(cartan);
        assert_eq!(histogram_from_elements(cartan), histogram_from_classes(&w), "{t}");
    }
}

#[test]
fn molien_series_by_element_sum() {
    // (1/|W|) Σ_w 1/det(1 - s w) computed over explicit elements.
    for t in ["A3", "B3", "D4"] {
        let cartan: CartanType = t.parse().unwrap();
        let w = WeylData::new(cartan);
        let els = elements(cartan);
        let mut avg = vec![BigRational::zero(); 21];
        for m in &els {
            let f = weylcoh::RationalFunction::new(ExactPoly::one(), char_poly(m)).unwrap();
            for (slot, c) in avg.iter_mut().zip(f.series_expand(20).unwrap()) {
                *slot += c;
            }
        }
        let order = rat(els.len() as i64);
        let avg: Vec<BigRational> = avg.into_iter().map(|c| c / &order).collect();
        let (_, product) = weylcoh::verify::molien_pair(&w, 20).unwrap();
        assert_eq!(avg, product, "{t}");
    }
}
