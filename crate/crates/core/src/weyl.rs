//! Weyl groups of the classical Cartan types.
//!
//! Conjugacy classes are indexed by cycle types: partitions of `rank + 1` for
//! type A and signed cycle types (pairs of partitions) for B, C and D. For
//! each class we keep the element count and `det(1 - s*w)` on the
//! reflection representation, which is all the averaging engine needs.
//!
//! Type D classes whose cycles are all positive and even split into two
//! classes of `W(D_n)`. Every class function computed here depends only on
//! the signed cycle type, so the halves are kept merged under one
//! descriptor carrying their combined size.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions, Partition};
use crate::poly::ExactPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }
}

/// A classical Cartan type: family letter plus rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidCartan {
                input: format!("{}{rank}", family.letter()),
                reason: format!(
                    "type {} needs rank >= {}",
                    family.letter(),
                    family.min_rank()
                ),
            });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Compact simply connected group with this root system.
    pub fn group_name(&self) -> String {
        let r = self.rank;
        match self.family {
            Family::A => format!("SU({})", r + 1),
            Family::B => format!("Spin({})", 2 * r + 1),
            Family::C => format!("Sp({r})"),
            Family::D => format!("Spin({})", 2 * r),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Accepts `A3`, `b2`, `SU(4)` (= A3) and `Sp(3)` (= C3), case-insensitively.
impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidCartan {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let upper = trimmed.to_ascii_uppercase();
        let parse_num = |digits: &str| -> Result<usize> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid("rank must be a decimal number"));
            }
            digits.parse().map_err(|_| invalid("rank out of range"))
        };
        for (prefix, family) in [("SU(", Family::A), ("SP(", Family::C)] {
            if let Some(rest) = upper.strip_prefix(prefix) {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| invalid("missing closing parenthesis"))?;
                let m = parse_num(inner)?;
                let rank = match family {
                    Family::A => m.checked_sub(1).ok_or_else(|| invalid("SU(m) needs m >= 2"))?,
                    _ => m,
                };
                return Self::new(family, rank).map_err(|_| invalid("rank too small"));
            }
        }
        let mut chars = upper.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(invalid("unknown family")),
        };
        let rank = parse_num(chars.as_str())?;
        Self::new(family, rank).map_err(|_| invalid("rank too small for this family"))
    }
}

/// Cycle-type label of a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassDescriptor {
    /// Type A: cycle type of a permutation of `rank + 1` letters.
    Cycle(Partition),
    /// Types B/C/D: lengths of positive and negative cycles.
    Signed {
        positive: Partition,
        negative: Partition,
    },
}

impl ClassDescriptor {
    pub fn signed(positive: Partition, negative: Partition) -> Self {
        Self::Signed { positive, negative }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Self::Cycle(p) => p.parts().iter().all(|&x| x == 1),
            Self::Signed { positive, negative } => {
                negative.is_empty() && positive.parts().iter().all(|&x| x == 1)
            }
        }
    }

    fn validate(&self, cartan: CartanType) -> Result<()> {
        let ok = match (self, cartan.family) {
            (Self::Cycle(p), Family::A) => p.size() == cartan.rank + 1,
            (Self::Signed { positive, negative }, Family::B | Family::C) => {
                positive.size() + negative.size() == cartan.rank
            }
            (Self::Signed { positive, negative }, Family::D) => {
                positive.size() + negative.size() == cartan.rank && negative.len() % 2 == 0
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidDescriptor {
                descriptor: self.to_string(),
                cartan: cartan.to_string(),
            })
        }
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cycle(p) => write!(f, "{p}"),
            Self::Signed { positive, negative } => write!(f, "[{positive}|{negative}]"),
        }
    }
}

/// One conjugacy class of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClassData {
    pub descriptor: ClassDescriptor,
    /// Number of elements in the class.
    pub size: BigUint,
    /// `det(1 - s*w)` on the reflection representation.
    pub det_poly: ExactPoly,
}

/// Weyl group data for a Cartan type: order, invariant degrees and classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylData {
    pub cartan: CartanType,
    pub order: BigUint,
    pub degrees: Vec<u32>,
    pub classes: Vec<ConjClassData>,
}

impl WeylData {
    pub fn new(cartan: CartanType) -> Self {
        Self {
            cartan,
            order: weyl_order(cartan),
            degrees: invariant_degrees(cartan),
            classes: conjugacy_classes(cartan),
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// Index of the identity class.
    pub fn identity_index(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.descriptor.is_identity())
            .expect("identity class present")
    }
}

/// `|W|`.
pub fn weyl_order(cartan: CartanType) -> BigUint {
    let r = cartan.rank;
    match cartan.family {
        Family::A => factorial(r + 1),
        Family::B | Family::C => (BigUint::one() << r) * factorial(r),
        Family::D => (BigUint::one() << (r - 1)) * factorial(r),
    }
}

/// Degrees of the basic polynomial invariants, ascending.
pub fn invariant_degrees(cartan: CartanType) -> Vec<u32> {
    let r = cartan.rank as u32;
    let mut out: Vec<u32> = match cartan.family {
        Family::A => (2..=r + 1).collect(),
        Family::B | Family::C => (1..=r).map(|i| 2 * i).collect(),
        Family::D => (1..r).map(|i| 2 * i).chain(std::iter::once(r)).collect(),
    };
    out.sort_unstable();
    out
}

/// Class descriptors in canonical order, identity first.
///
/// Type A: partitions of `rank + 1` in ascending lexicographic order, so
/// `(1^m)` comes first and `(m)` last. Types B/C/D: grouped by the size of
/// the negative part, then positive and negative partitions each in
/// ascending lexicographic order.
pub fn class_descriptors(cartan: CartanType) -> Vec<ClassDescriptor> {
    let r = cartan.rank;
    match cartan.family {
        Family::A => partitions(r + 1)
            .into_iter()
            .rev()
            .map(ClassDescriptor::Cycle)
            .collect(),
        family => {
            let mut out = Vec::new();
            for k in 0..=r {
                let negatives: Vec<Partition> = partitions(k)
                    .into_iter()
                    .rev()
                    .filter(|neg| family != Family::D || neg.len() % 2 == 0)
                    .collect();
                for pos in partitions(r - k).into_iter().rev() {
                    for neg in &negatives {
                        out.push(ClassDescriptor::signed(pos.clone(), neg.clone()));
                    }
                }
            }
            out
        }
    }
}

/// Number of elements of `W` with the given cycle type.
pub fn class_size(cartan: CartanType, descriptor: &ClassDescriptor) -> Result<BigUint> {
    descriptor.validate(cartan)?;
    Ok(match descriptor {
        ClassDescriptor::Cycle(p) => factorial(p.size()) / p.centralizer_order(),
        ClassDescriptor::Signed { positive, negative } => {
            // The signed cycle type is a single B_n class; it lies inside
            // D_n exactly when the number of negative cycles is even, which
            // `validate` already enforced.
            let r = cartan.rank;
            let hyperoctahedral = (BigUint::one() << r) * factorial(r);
            hyperoctahedral / (signed_centralizer(positive) * signed_centralizer(negative))
        }
    })
}

fn signed_centralizer(p: &Partition) -> BigUint {
    p.multiplicities()
        .into_iter()
        .map(|(part, mult)| BigUint::from(2 * part).pow(mult as u32) * factorial(mult))
        .product()
}

/// `det(1 - s*w)` on the reflection representation for `w` in the class.
pub fn reflection_det_poly(cartan: CartanType, descriptor: &ClassDescriptor) -> Result<ExactPoly> {
    descriptor.validate(cartan)?;
    let one_minus = |k: usize| binomial_factor(k as u32, -1);
    let one_plus = |k: usize| binomial_factor(k as u32, 1);
    match descriptor {
        ClassDescriptor::Cycle(p) => {
            // permutation representation modulo the trivial line
            let full: ExactPoly = p.parts().iter().map(|&k| one_minus(k)).product();
            full.div_exact(&one_minus(1))
        }
        ClassDescriptor::Signed { positive, negative } => Ok(positive
            .parts()
            .iter()
            .map(|&k| one_minus(k))
            .chain(negative.parts().iter().map(|&k| one_plus(k)))
            .product()),
    }
}

/// `1 + sign * s^k`.
fn binomial_factor(k: u32, sign: i64) -> ExactPoly {
    &ExactPoly::one() + &ExactPoly::monomial(BigRational::from_integer(sign.into()), k)
}

pub fn conjugacy_classes(cartan: CartanType) -> Vec<ConjClassData> {
    class_descriptors(cartan)
        .into_iter()
        .map(|descriptor| {
            let size = class_size(cartan, &descriptor).expect("enumerated descriptor is valid");
            let det_poly =
                reflection_det_poly(cartan, &descriptor).expect("enumerated descriptor is valid");
            ConjClassData {
                descriptor,
                size,
                det_poly,
            }
        })
        .collect()
}
