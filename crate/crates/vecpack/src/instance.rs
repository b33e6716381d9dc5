//! Packing problem instances (VBP / VS / VBC) and exact objective
//! evaluation.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProblemKind {
    #[serde(rename = "VBP")]
    Vbp,
    #[serde(rename = "VS")]
    Vs,
    #[serde(rename = "VBC")]
    Vbc,
}

/// A d-dimensional vector job with every coordinate in [0, 1].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VectorJob {
    pub coords: Vec<Rational>,
}

impl VectorJob {
    pub fn new(coords: Vec<Rational>) -> Result<Self, Error> {
        for c in &coords {
            if !c.in_unit_interval() {
                return Err(Error::CoordinateOutOfRange(c.canonical_string()));
            }
        }
        Ok(VectorJob { coords })
    }

    pub fn zeros(dim: usize) -> Self {
        VectorJob {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        VectorJob {
            coords: bits
                .iter()
                .map(|&b| if b { Rational::one() } else { Rational::zero() })
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingInstance {
    pub kind: ProblemKind,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub machines: Option<usize>,
    pub jobs: Vec<VectorJob>,
}

impl PackingInstance {
    pub fn new(
        kind: ProblemKind,
        dim: usize,
        machines: Option<usize>,
        jobs: Vec<VectorJob>,
    ) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::Schema("dim must be >= 1".into()));
        }
        match (kind, machines) {
            (ProblemKind::Vs, Some(m)) if m >= 1 => {}
            (ProblemKind::Vs, _) => {
                return Err(Error::Schema("VS requires machines >= 1".into()))
            }
            (_, Some(_)) => {
                return Err(Error::Schema("machines only valid for VS".into()))
            }
            (_, None) => {}
        }
        for job in &jobs {
            if job.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: job.dim(),
                });
            }
        }
        Ok(PackingInstance {
            kind,
            dim,
            machines,
            jobs,
        })
    }

    pub fn n(&self) -> usize {
        self.jobs.len()
    }
}

/// Maps each job index to a 0-based part index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment {
    pub part_of: Vec<usize>,
}

impl Assignment {
    pub fn new(part_of: Vec<usize>) -> Self {
        Assignment { part_of }
    }

    pub fn part_count(&self) -> usize {
        self.part_of.iter().map(|&p| p + 1).max().unwrap_or(0)
    }
}

/// Norm selector for the VS objective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Norm {
    #[serde(rename = "inf")]
    Infinity,
    #[serde(rename = "l")]
    Finite(u32),
}

/// An exact objective value. Finite ℓ_r objectives that are not perfect
/// r-th powers are carried as the exact radicand so comparisons stay
/// exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObjectiveValue {
    Exact(Rational),
    /// value = radicand^(1/r); kept unevaluated.
    RthRoot { radicand: Rational, r: u32 },
}

impl ObjectiveValue {
    /// Exact comparison; values are compared via their r-th powers.
    pub fn cmp_exact(&self, other: &ObjectiveValue) -> std::cmp::Ordering {
        let (a, ra) = self.as_power();
        let (b, rb) = other.as_power();
        // compare a^(1/ra) vs b^(1/rb) via a^lcm/ra vs b^lcm/rb
        let lcm = num_integer_lcm(ra, rb);
        a.pow(lcm / ra).cmp(&b.pow(lcm / rb))
    }

    fn as_power(&self) -> (Rational, u32) {
        match self {
            ObjectiveValue::Exact(v) => (v.clone(), 1),
            ObjectiveValue::RthRoot { radicand, r } => (radicand.clone(), *r),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ObjectiveValue::Exact(v) => v.to_f64(),
            ObjectiveValue::RthRoot { radicand, r } => {
                radicand.to_f64().powf(1.0 / f64::from(*r))
            }
        }
    }
}

fn num_integer_lcm(a: u32, b: u32) -> u32 {
    num::integer::lcm(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectiveReport {
    /// Per-part, per-coordinate loads.
    pub loads: Vec<Vec<Rational>>,
    pub value: ObjectiveValue,
    pub feasible: bool,
}

/// Evaluates an assignment against an instance, exactly.
///
/// VBP: feasible iff every part's coordinate-wise sum is at most 1;
/// value is the part count. VS: value is the makespan (ℓ∞) or the ℓ_r
/// objective for finite r. VBC: value is the number of parts covering 1
/// in every coordinate; feasible iff all parts cover.
pub fn evaluate(
    instance: &PackingInstance,
    assignment: &Assignment,
    norm: Norm,
) -> Result<ObjectiveReport, Error> {
    if assignment.part_of.len() != instance.n() {
        return Err(Error::Schema(format!(
            "assignment covers {} jobs, instance has {}",
            assignment.part_of.len(),
            instance.n()
        )));
    }
    let parts = match instance.kind {
        ProblemKind::Vs => {
            let m = instance.machines.expect("validated");
            if let Some(&p) = assignment.part_of.iter().find(|&&p| p >= m) {
                return Err(Error::PartOutOfRange { part: p, count: m });
            }
            m
        }
        _ => {
            let parts = assignment.part_count();
            if parts == 0 && instance.n() > 0 {
                return Err(Error::Schema("empty assignment".into()));
            }
            parts.max(1)
        }
    };

    let mut loads = vec![vec![Rational::zero(); instance.dim]; parts];
    for (job, &p) in instance.jobs.iter().zip(&assignment.part_of) {
        for (load, coord) in loads[p].iter_mut().zip(&job.coords) {
            *load += coord;
        }
    }

    match instance.kind {
        ProblemKind::Vbp => {
            let feasible = loads
                .iter()
                .all(|part| part.iter().all(|c| *c <= 1));
            Ok(ObjectiveReport {
                value: ObjectiveValue::Exact(Rational::from_int(parts as i64)),
                loads,
                feasible,
            })
        }
        ProblemKind::Vs => {
            let value = vs_objective(&loads, norm);
            Ok(ObjectiveReport {
                loads,
                value,
                feasible: true,
            })
        }
        ProblemKind::Vbc => {
            let covering = loads
                .iter()
                .filter(|part| part.iter().all(|c| *c >= 1))
                .count();
            Ok(ObjectiveReport {
                value: ObjectiveValue::Exact(Rational::from_int(covering as i64)),
                feasible: covering == parts,
                loads,
            })
        }
    }
}

/// VS objective over precomputed per-machine loads.
pub fn vs_objective(loads: &[Vec<Rational>], norm: Norm) -> ObjectiveValue {
    match norm {
        Norm::Infinity => {
            let mut best = Rational::zero();
            for part in loads {
                for c in part {
                    if *c > best {
                        best = c.clone();
                    }
                }
            }
            ObjectiveValue::Exact(best)
        }
        Norm::Finite(r) => {
            // max over coordinates k of (sum over machines of L_i^k ^ r)^(1/r)
            let dim = loads.first().map_or(0, |l| l.len());
            let mut best = Rational::zero();
            for k in 0..dim {
                let mut sum = Rational::zero();
                for part in loads {
                    sum += &part[k].pow(r);
                }
                if sum > best {
                    best = sum;
                }
            }
            match best.nth_root_exact(r) {
                Some(v) => ObjectiveValue::Exact(v),
                None => ObjectiveValue::RthRoot { radicand: best, r },
            }
        }
    }
}
