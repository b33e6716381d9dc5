//! Label Cover instances, exact evaluation and solving, and the
//! clause-variable 3-SAT gadget seeding the long-code reductions.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::Error;

pub const LABELING_CAP: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcEdge {
    pub u: usize,
    pub v: usize,
    /// projection Sigma_L -> Sigma_R
    pub pi: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelCover {
    pub left: usize,
    pub right: usize,
    pub sigma_left: usize,
    pub sigma_right: usize,
    pub edges: Vec<LcEdge>,
}

impl LabelCover {
    pub fn new(
        left: usize,
        right: usize,
        sigma_left: usize,
        sigma_right: usize,
        edges: Vec<LcEdge>,
    ) -> Result<Self, Error> {
        if sigma_left < sigma_right || sigma_right == 0 {
            return Err(Error::AlphabetMismatch(format!(
                "need |Sigma_L| >= |Sigma_R| >= 1, got {sigma_left} < {sigma_right}"
            )));
        }
        for e in &edges {
            if e.u >= left {
                return Err(Error::ElementOutOfRange {
                    element: e.u,
                    universe: left,
                });
            }
            if e.v >= right {
                return Err(Error::ElementOutOfRange {
                    element: e.v,
                    universe: right,
                });
            }
            if e.pi.len() != sigma_left {
                return Err(Error::DimensionMismatch {
                    expected: sigma_left,
                    got: e.pi.len(),
                });
            }
            if let Some(&b) = e.pi.iter().find(|&&b| b >= sigma_right) {
                return Err(Error::ElementOutOfRange {
                    element: b,
                    universe: sigma_right,
                });
            }
        }
        Ok(LabelCover {
            left,
            right,
            sigma_left,
            sigma_right,
            edges,
        })
    }

    /// max degree over right vertices
    pub fn max_right_degree(&self) -> usize {
        let mut deg = vec![0usize; self.right];
        for e in &self.edges {
            deg[e.v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub left_labels: Vec<usize>,
    pub right_labels: Vec<usize>,
}

impl Labeling {
    fn validate(&self, lc: &LabelCover) -> Result<(), Error> {
        if self.left_labels.len() != lc.left {
            return Err(Error::DimensionMismatch {
                expected: lc.left,
                got: self.left_labels.len(),
            });
        }
        if self.right_labels.len() != lc.right {
            return Err(Error::DimensionMismatch {
                expected: lc.right,
                got: self.right_labels.len(),
            });
        }
        if let Some(&a) = self.left_labels.iter().find(|&&a| a >= lc.sigma_left) {
            return Err(Error::ElementOutOfRange {
                element: a,
                universe: lc.sigma_left,
            });
        }
        if let Some(&b) = self.right_labels.iter().find(|&&b| b >= lc.sigma_right) {
            return Err(Error::ElementOutOfRange {
                element: b,
                universe: lc.sigma_right,
            });
        }
        Ok(())
    }
}

/// Exact fraction of edges e = (u,v) with pi_e(sigma(u)) = sigma(v).
/// An empty edge set counts as fully satisfied.
pub fn evaluate(lc: &LabelCover, sigma: &Labeling) -> Result<Rational, Error> {
    sigma.validate(lc)?;
    if lc.edges.is_empty() {
        return Ok(Rational::one());
    }
    let sat = lc
        .edges
        .iter()
        .filter(|e| e.pi[sigma.left_labels[e.u]] == sigma.right_labels[e.v])
        .count();
    Ok(Rational::new(sat as i64, lc.edges.len() as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestLabeling {
    pub value: Rational,
    pub witness: Labeling,
}

/// Exact optimum by enumerating right labelings; for each, every left
/// vertex independently picks the label satisfying the most incident
/// edges (lowest label on ties). Cost |Sigma_R|^R * L * |Sigma_L|.
pub fn best_labeling(lc: &LabelCover) -> Result<BestLabeling, Error> {
    best_labeling_with_cap(lc, LABELING_CAP)
}

pub fn best_labeling_with_cap(lc: &LabelCover, cap: u64) -> Result<BestLabeling, Error> {
    let states = (lc.sigma_right as u64)
        .checked_pow(lc.right as u32)
        .unwrap_or(u64::MAX);
    if states > cap {
        return Err(Error::CapExceeded(format!(
            "{}^{} right labelings exceeds cap {cap}",
            lc.sigma_right, lc.right
        )));
    }
    let mut incident: Vec<Vec<&LcEdge>> = vec![Vec::new(); lc.left];
    for e in &lc.edges {
        incident[e.u].push(e);
    }
    let mut best_sat = 0usize;
    let mut best: Option<Labeling> = None;
    let mut right = vec![0usize; lc.right];
    loop {
        let mut left = vec![0usize; lc.left];
        let mut total = 0usize;
        for u in 0..lc.left {
            let (label, sat) = (0..lc.sigma_left)
                .map(|a| {
                    let s = incident[u]
                        .iter()
                        .filter(|e| e.pi[a] == right[e.v])
                        .count();
                    (a, s)
                })
                .max_by_key(|&(a, s)| (s, std::cmp::Reverse(a)))
                .unwrap_or((0, 0));
            left[u] = label;
            total += sat;
        }
        if best.is_none() || total > best_sat {
            best_sat = total;
            best = Some(Labeling {
                left_labels: left,
                right_labels: right.clone(),
            });
        }
        // next right labeling, lexicographic
        let mut pos = lc.right;
        loop {
            if pos == 0 {
                let witness = best.expect("at least one labeling visited");
                let value = if lc.edges.is_empty() {
                    Rational::one()
                } else {
                    Rational::new(best_sat as i64, lc.edges.len() as i64)
                };
                return Ok(BestLabeling { value, witness });
            }
            pos -= 1;
            if right[pos] + 1 < lc.sigma_right {
                right[pos] += 1;
                for r in right[pos + 1..].iter_mut() {
                    *r = 0;
                }
                break;
            }
            right[pos] = 0;
        }
    }
}

/// 3-CNF clause: three distinct variables with polarities
/// (true = positive literal).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub vars: [usize; 3],
    pub positive: [bool; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCnf {
    pub num_vars: usize,
    pub clauses: Vec<Clause>,
}

impl ThreeCnf {
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            (0..3).any(|i| assignment[c.vars[i]] == c.positive[i])
        })
    }
}

/// Clause-variable Label Cover: left vertices are clauses with labels
/// the 7 satisfying assignments of a 3-clause (Sigma_L = 7), right
/// vertices are variables with Sigma_R = 2, and the edge projection
/// reads off the variable's value in the clause assignment. The formula
/// is satisfiable iff the optimum is 1.
pub fn threesat_to_labelcover(formula: &ThreeCnf) -> Result<LabelCover, Error> {
    let mut edges = Vec::new();
    for (ci, c) in formula.clauses.iter().enumerate() {
        if c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] || c.vars[1] == c.vars[2] {
            return Err(Error::MalformedClause(format!(
                "clause {ci} repeats a variable: {:?}",
                c.vars
            )));
        }
        if let Some(&v) = c.vars.iter().find(|&&v| v >= formula.num_vars) {
            return Err(Error::ElementOutOfRange {
                element: v,
                universe: formula.num_vars,
            });
        }
        // satisfying assignments of the clause over its 3 variables, in
        // ascending binary order (bit i = value of vars[i])
        let sat: Vec<usize> = (0..8usize)
            .filter(|&m| (0..3).any(|i| ((m >> i) & 1 == 1) == c.positive[i]))
            .collect();
        debug_assert_eq!(sat.len(), 7);
        for i in 0..3 {
            let pi = sat.iter().map(|&m| (m >> i) & 1).collect();
            edges.push(LcEdge {
                u: ci,
                v: c.vars[i],
                pi,
            });
        }
    }
    LabelCover::new(formula.clauses.len(), formula.num_vars, 7, 2, edges)
}
