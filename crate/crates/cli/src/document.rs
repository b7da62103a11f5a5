//! JSON output documents.
//!
//! Polynomials are emitted as degree-ascending arrays of decimal strings so
//! that arbitrarily large coefficients survive JSON parsers that only know
//! doubles. Result payloads are stored as `serde_json::Value`, whose maps
//! are key-sorted, so parsing an emitted document and serializing it again
//! reproduces the same bytes.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use weylcoh::chartab::{CharacterPoly, CharacterTable};
use weylcoh::cohomology::{EquivariantResult, PoincareResult, WDecomposition};
use weylcoh::{CartanType, ClassDescriptor, ExactPoly, Partition, WeylData};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub query: Query,
    pub result: Value,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncate: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl Query {
    pub fn new(command: &str, cartan: Option<CartanType>) -> Self {
        Self {
            command: command.to_string(),
            family: cartan.map(|c| c.family().letter().to_string()),
            rank: cartan.map(|c| c.rank()),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub engine: String,
    pub version: String,
    pub elapsed_us: u64,
}

impl Provenance {
    pub fn new(elapsed_us: u64) -> Self {
        Self {
            engine: "weylcoh".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            elapsed_us,
        }
    }
}

#[derive(Serialize)]
pub struct PolyJson {
    pub coefficients: Vec<String>,
}

impl From<&ExactPoly> for PolyJson {
    fn from(p: &ExactPoly) -> Self {
        Self {
            coefficients: p.coefficients().iter().map(|c| c.to_string()).collect(),
        }
    }
}

fn partition_json(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

#[derive(Serialize)]
struct DescriptorJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_type: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    positive: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    negative: Option<Vec<usize>>,
}

impl From<&ClassDescriptor> for DescriptorJson {
    fn from(d: &ClassDescriptor) -> Self {
        match d {
            ClassDescriptor::Cycle(p) => Self {
                cycle_type: Some(partition_json(p)),
                positive: None,
                negative: None,
            },
            ClassDescriptor::Signed { positive, negative } => Self {
                cycle_type: None,
                positive: Some(partition_json(positive)),
                negative: Some(partition_json(negative)),
            },
        }
    }
}

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn big(n: &BigUint) -> String {
    n.to_string()
}

pub fn classes_result(w: &WeylData) -> Value {
    #[derive(Serialize)]
    struct ClassJson {
        label: String,
        descriptor: DescriptorJson,
        size: String,
        det_poly: PolyJson,
    }
    #[derive(Serialize)]
    struct Out {
        cartan: String,
        group: String,
        order: String,
        degrees: Vec<u32>,
        classes: Vec<ClassJson>,
    }
    to_value(Out {
        cartan: w.cartan.to_string(),
        group: w.cartan.group_name(),
        order: big(&w.order),
        degrees: w.degrees.clone(),
        classes: w
            .classes
            .iter()
            .map(|c| ClassJson {
                label: c.descriptor.to_string(),
                descriptor: (&c.descriptor).into(),
                size: big(&c.size),
                det_poly: (&c.det_poly).into(),
            })
            .collect(),
    })
}

pub fn poincare_result(r: &PoincareResult) -> Value {
    #[derive(Serialize)]
    struct Out {
        cartan: String,
        group: String,
        n: u32,
        poincare: PolyJson,
        total_dim: String,
    }
    to_value(Out {
        cartan: r.cartan.to_string(),
        group: r.cartan.group_name(),
        n: r.n,
        poincare: (&r.poly).into(),
        total_dim: big(&r.total_dim),
    })
}

pub fn equivariant_result(r: &EquivariantResult) -> Value {
    #[derive(Serialize)]
    struct Out {
        cartan: String,
        n: u32,
        numerator: PolyJson,
        denominator: PolyJson,
        truncation: Vec<String>,
    }
    to_value(Out {
        cartan: r.cartan.to_string(),
        n: r.n,
        numerator: r.series.numerator().into(),
        denominator: r.series.denominator().into(),
        truncation: r.truncation.iter().map(|c| c.to_string()).collect(),
    })
}

pub fn betti_result(cartan: CartanType, n: u32, degree: u32, value: &BigUint) -> Value {
    #[derive(Serialize)]
    struct Out {
        cartan: String,
        n: u32,
        degree: u32,
        betti: String,
    }
    to_value(Out {
        cartan: cartan.to_string(),
        n,
        degree,
        betti: big(value),
    })
}

pub fn torsion_result(cartan: CartanType, order: &BigUint, primes: &[u64]) -> Value {
    #[derive(Serialize)]
    struct Out {
        cartan: String,
        weyl_order: String,
        primes: Vec<u64>,
    }
    to_value(Out {
        cartan: cartan.to_string(),
        weyl_order: big(order),
        primes: primes.to_vec(),
    })
}

pub fn char_table_result(t: &CharacterTable) -> Value {
    #[derive(Serialize)]
    struct Row {
        chi: usize,
        partition: Vec<usize>,
        values: Vec<i64>,
    }
    #[derive(Serialize)]
    struct Column {
        cycle_type: Vec<usize>,
        notation: String,
        size: String,
    }
    #[derive(Serialize)]
    struct Out {
        m: usize,
        columns: Vec<Column>,
        rows: Vec<Row>,
    }
    to_value(Out {
        m: t.m,
        columns: t
            .columns
            .iter()
            .zip(&t.class_sizes)
            .map(|(c, s)| Column {
                cycle_type: partition_json(c),
                notation: c.cycle_notation(),
                size: big(s),
            })
            .collect(),
        rows: t
            .rows_in_chi_order()
            .into_iter()
            .map(|r| Row {
                chi: t.chi_number(r),
                partition: partition_json(&t.rows[r]),
                values: t.values[r].clone(),
            })
            .collect(),
    })
}

#[derive(Serialize)]
struct ComponentJson {
    chi: usize,
    partition: Vec<usize>,
    multiplicity: PolyJson,
}

fn components(cp: &CharacterPoly) -> Vec<ComponentJson> {
    cp.components
        .iter()
        .map(|c| ComponentJson {
            chi: c.chi,
            partition: partition_json(&c.label),
            multiplicity: (&c.multiplicity).into(),
        })
        .collect()
}

pub fn char_poly_result(d: &WDecomposition) -> Value {
    #[derive(Serialize)]
    struct Out {
        cartan: String,
        n: u32,
        exterior: Vec<ComponentJson>,
        coinvariant: Vec<ComponentJson>,
        expression: String,
    }
    to_value(Out {
        cartan: d.cartan.to_string(),
        n: d.n,
        exterior: components(&d.exterior),
        coinvariant: components(&d.coinvariant),
        expression: d.render(false),
    })
}
