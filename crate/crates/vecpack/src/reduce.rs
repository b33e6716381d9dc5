//! The constructive reductions: set cover to VBP via packing-dimension
//! embeddings, Monochromatic-Clique and balanced hypergraph coloring to
//! VS, lexicographic clique amplification, Label Cover long-code
//! constructions into balanced / rainbow hypergraph coloring, and
//! rainbow coloring to VBC. Each reduction has a verifier producing a
//! GapCertificate with oracle-checked completeness and soundness.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::embed::{full_embedding, Embedding};
use crate::graphs::{self, Coloring, Graph};
use crate::hypergraphs::{
    color_check, index_point, solve_coloring, ColoringMode, Hypergraph,
};
use crate::instance::{
    evaluate, Assignment, Norm, PackingInstance, ProblemKind, VectorJob,
};
use crate::labelcover::{best_labeling, LabelCover, Labeling};
use crate::rational::Rational;
use crate::setsys::SetSystem;
use crate::solve;
use crate::Error;

pub const BHC_ENUM_CAP: u64 = 5_000_000;
pub const RAINBOW_ENUM_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Completeness {
    pub witness_present: bool,
    pub achieved_value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Soundness {
    pub exhaustive: bool,
    pub bound_value: Rational,
}

/// A machine-checked record of one reduction's completeness and
/// soundness directions. `exhaustive` is claimed only when the
/// underlying oracle ran to completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCertificate {
    pub reduction_name: String,
    pub completeness: Completeness,
    pub soundness: Soundness,
    pub parameters: BTreeMap<String, String>,
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

// ---------------------------------------------------------------------------
// set cover -> VBP

#[derive(Clone, Debug)]
pub struct SetcoverVbp {
    pub instance: PackingInstance,
    pub embedding: Embedding,
}

/// Jobs are the embedding images of the elements; a bin is feasible
/// exactly when its elements form a member of the downward closure, so
/// minimum bins = minimum set cover.
pub fn setcover_to_vbp(sys: &SetSystem) -> Result<SetcoverVbp, Error> {
    let embedding = full_embedding(sys)?;
    let jobs = embedding
        .map
        .iter()
        .map(|row| VectorJob::new(row.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let instance = PackingInstance::new(ProblemKind::Vbp, embedding.dim, None, jobs)?;
    Ok(SetcoverVbp {
        instance,
        embedding,
    })
}

pub fn verify_setcover_to_vbp(sys: &SetSystem) -> Result<GapCertificate, Error> {
    let out = setcover_to_vbp(sys)?;
    let cover = solve::setcover(sys, solve::SetCoverMode::Exact)?;

    // completeness: pack each element into the first cover set holding it
    let part_of: Vec<usize> = (0..sys.universe)
        .map(|v| {
            cover
                .witness
                .iter()
                .position(|&s| sys.sets[s].contains(&v))
                .expect("cover covers every element")
        })
        .collect();
    let witness = Assignment::new(part_of);
    let report = evaluate(&out.instance, &witness, Norm::Infinity)?;
    if !report.feasible {
        return Err(Error::Internal(
            "cover-derived packing is infeasible".into(),
        ));
    }
    let achieved = witness.part_count();

    // soundness: the exact VBP optimum matches the exact cover optimum
    let packing = solve::vbp(&out.instance, solve::VbpMode::Exact)?;
    if packing.optimum != cover.optimum {
        return Err(Error::Internal(format!(
            "VBP optimum {} != set cover optimum {}",
            packing.optimum, cover.optimum
        )));
    }
    Ok(GapCertificate {
        reduction_name: "setcover_to_vbp".into(),
        completeness: Completeness {
            witness_present: true,
            achieved_value: Rational::from_int(achieved as i64),
        },
        soundness: Soundness {
            exhaustive: packing.exhaustive && cover.exhaustive,
            bound_value: Rational::from_int(packing.optimum as i64),
        },
        parameters: params(&[
            ("universe", sys.universe.to_string()),
            ("sets", sys.sets.len().to_string()),
            ("dim", out.instance.dim.to_string()),
            ("cover_optimum", cover.optimum.to_string()),
        ]),
    })
}

// ---------------------------------------------------------------------------
// Monochromatic-Clique -> VS

#[derive(Clone, Debug)]
pub struct MonocliqueVs {
    pub instance: PackingInstance,
    pub cliques: Vec<Vec<usize>>,
    /// true when the graph has no B-clique at all; the instance is then
    /// a 1-dimensional all-zero stand-in.
    pub degenerate: bool,
}

/// Vertex i maps to the incidence vector over all B-cliques; machines = k.
pub fn monoclique_to_vs(g: &Graph, k: usize, b: usize) -> Result<MonocliqueVs, Error> {
    if b < 2 {
        return Err(Error::Schema("clique size B must be at least 2".into()));
    }
    if k == 0 {
        return Err(Error::Schema("k must be at least 1".into()));
    }
    let adj = g.adjacency()?;
    let mut cliques = Vec::new();
    let mut subset = Vec::with_capacity(b);
    fn rec(
        adj: &[u64],
        b: usize,
        start: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if subset.len() == b {
            out.push(subset.clone());
            return;
        }
        for v in start..adj.len() {
            if subset.iter().all(|&u| adj[u] & (1 << v) != 0) {
                subset.push(v);
                rec(adj, b, v + 1, subset, out);
                subset.pop();
            }
        }
    }
    rec(&adj, b, 0, &mut subset, &mut cliques);
    let degenerate = cliques.is_empty();
    let dim = cliques.len().max(1);
    let jobs = (0..g.n)
        .map(|v| {
            if degenerate {
                VectorJob::zeros(1)
            } else {
                VectorJob::from_bits(
                    &cliques.iter().map(|t| t.contains(&v)).collect::<Vec<_>>(),
                )
            }
        })
        .collect();
    let instance = PackingInstance::new(ProblemKind::Vs, dim, Some(k), jobs)?;
    Ok(MonocliqueVs {
        instance,
        cliques,
        degenerate,
    })
}

pub fn verify_monoclique_to_vs(g: &Graph, k: usize, b: usize) -> Result<GapCertificate, Error> {
    let out = monoclique_to_vs(g, k, b)?;

    // completeness: a proper k-coloring splits every clique across
    // machines, giving makespan <= 1
    let coloring = graphs::k_colorable(g, k)?;
    let completeness = match &coloring {
        Some(c) => {
            let witness = Assignment::new(c.color_of.clone());
            let report = evaluate(&out.instance, &witness, Norm::Infinity)?;
            let one = Rational::one();
            if !out.degenerate && report.value.cmp_exact(&crate::instance::ObjectiveValue::Exact(one.clone())) == std::cmp::Ordering::Greater {
                return Err(Error::Internal(
                    "proper coloring exceeded makespan 1".into(),
                ));
            }
            let achieved = match report.value {
                crate::instance::ObjectiveValue::Exact(v) => v,
                _ => return Err(Error::Internal("0/1 loads gave irrational makespan".into())),
            };
            Completeness {
                witness_present: true,
                achieved_value: achieved,
            }
        }
        None => Completeness {
            witness_present: false,
            achieved_value: Rational::zero(),
        },
    };

    // soundness: exact minimum makespan, compared against the
    // monochromatic-clique oracle when it fits in cap
    let (exact, exhaustive) = match solve::vs(&out.instance, solve::VsMode::Exact, Norm::Infinity)
    {
        Ok(r) => (Some(r), true),
        Err(Error::CapExceeded(_)) => (None, false),
        Err(e) => return Err(e),
    };
    let bound_value = match &exact {
        Some(r) => match &r.optimum {
            crate::instance::ObjectiveValue::Exact(v) => v.clone(),
            _ => return Err(Error::Internal("0/1 loads gave irrational makespan".into())),
        },
        None => Rational::zero(),
    };
    if let Some(r) = &exact {
        if let Ok(minimax) = graphs::minimax_mono_clique(g, k) {
            if minimax.value >= b {
                let bound = crate::instance::ObjectiveValue::Exact(Rational::from_int(b as i64));
                if r.optimum.cmp_exact(&bound) == std::cmp::Ordering::Less {
                    return Err(Error::Internal(format!(
                        "m(G,{k}) >= {b} but makespan < {b}"
                    )));
                }
            }
        }
    }
    Ok(GapCertificate {
        reduction_name: "monoclique_to_vs".into(),
        completeness,
        soundness: Soundness {
            exhaustive,
            bound_value,
        },
        parameters: params(&[
            ("k", k.to_string()),
            ("B", b.to_string()),
            ("cliques", out.cliques.len().to_string()),
            ("degenerate", out.degenerate.to_string()),
        ]),
    })
}

// ---------------------------------------------------------------------------
// lexicographic amplification

pub fn lex_amplify(g: &Graph, c: usize) -> Result<Graph, Error> {
    graphs::lex_power(g, c)
}

pub fn verify_lex_amplify(g: &Graph, c: usize, k: usize) -> Result<GapCertificate, Error> {
    let amplified = lex_amplify(g, c)?;
    let chi = graphs::invariants(g)?.chi;
    let target = chi.pow(c as u32);

    // completeness: chi(G^C) <= chi(G)^C, witnessed by a coloring
    let witness = graphs::k_colorable(&amplified, target.max(1))?;
    let completeness = match witness {
        Some(_) => Completeness {
            witness_present: true,
            achieved_value: Rational::from_int(target as i64),
        },
        None => {
            return Err(Error::Internal(format!(
                "G^{c} is not {target}-colorable, contradicting the product bound"
            )))
        }
    };

    // soundness: m(G^C, k) >= m(G, k)^C when the oracle fits in cap
    let base = graphs::minimax_mono_clique(g, k)?;
    let (soundness, amplified_m) =
        match graphs::minimax_mono_clique(&amplified, k) {
            Ok(r) => {
                if r.value < base.value.pow(c as u32) {
                    return Err(Error::Internal(format!(
                        "m(G^{c},{k}) = {} < {}^{c}",
                        r.value, base.value
                    )));
                }
                (
                    Soundness {
                        exhaustive: true,
                        bound_value: Rational::from_int(r.value as i64),
                    },
                    r.value.to_string(),
                )
            }
            Err(Error::CapExceeded(_)) => (
                Soundness {
                    exhaustive: false,
                    bound_value: Rational::zero(),
                },
                "cap-exceeded".to_string(),
            ),
            Err(e) => return Err(e),
        };
    Ok(GapCertificate {
        reduction_name: "lex_amplify".into(),
        completeness,
        soundness,
        parameters: params(&[
            ("C", c.to_string()),
            ("k", k.to_string()),
            ("chi", chi.to_string()),
            ("m_base", base.value.to_string()),
            ("m_amplified", amplified_m),
        ]),
    })
}

// ---------------------------------------------------------------------------
// balanced hypergraph coloring -> VS

/// Vertex i maps to its incidence vector over edges; machines = k.
pub fn bhc_to_vs(h: &Hypergraph, k: usize) -> Result<PackingInstance, Error> {
    if k == 0 {
        return Err(Error::Schema("k must be at least 1".into()));
    }
    let d = h.edges.len().max(1);
    let jobs = (0..h.n)
        .map(|v| {
            if h.edges.is_empty() {
                VectorJob::zeros(1)
            } else {
                VectorJob::from_bits(
                    &h.edges.iter().map(|e| e.contains(&v)).collect::<Vec<_>>(),
                )
            }
        })
        .collect();
    PackingInstance::new(ProblemKind::Vs, d, Some(k), jobs)
}

/// `c` is the balance target for the completeness direction.
pub fn verify_bhc_to_vs(h: &Hypergraph, k: usize, c: usize) -> Result<GapCertificate, Error> {
    let instance = bhc_to_vs(h, k)?;
    let uniform = {
        let mut sizes = h.edges.iter().map(Vec::len);
        let first = sizes.next();
        first.filter(|&s| sizes.all(|t| t == s))
    };

    // completeness: a coloring with per-edge multiplicity <= c gives
    // makespan <= c
    let balanced = solve_coloring(h, k, ColoringMode::Balanced(c))?;
    let completeness = match &balanced {
        Some(col) => {
            let check = color_check(h, k, col)?;
            if check.balance > c {
                return Err(Error::Internal("balanced witness failed re-check".into()));
            }
            let witness = Assignment::new(col.color_of.clone());
            let report = evaluate(&instance, &witness, Norm::Infinity)?;
            let achieved = match report.value {
                crate::instance::ObjectiveValue::Exact(v) => v,
                _ => return Err(Error::Internal("0/1 loads gave irrational makespan".into())),
            };
            if achieved > c as i64 {
                return Err(Error::Internal(format!(
                    "balance {c} witness has makespan {achieved}"
                )));
            }
            Completeness {
                witness_present: true,
                achieved_value: achieved,
            }
        }
        None => Completeness {
            witness_present: false,
            achieved_value: Rational::zero(),
        },
    };

    // soundness: exact minimum makespan; when H has no proper k-coloring
    // and is s-uniform, the makespan is at least s
    let (exact, exhaustive) = match solve::vs(&instance, solve::VsMode::Exact, Norm::Infinity) {
        Ok(r) => (Some(r), true),
        Err(Error::CapExceeded(_)) => (None, false),
        Err(e) => return Err(e),
    };
    let bound_value = match &exact {
        Some(r) => match &r.optimum {
            crate::instance::ObjectiveValue::Exact(v) => v.clone(),
            _ => return Err(Error::Internal("0/1 loads gave irrational makespan".into())),
        },
        None => Rational::zero(),
    };
    if let (Some(_), Some(s)) = (&exact, uniform) {
        let proper = solve_coloring(h, k, ColoringMode::Proper)?;
        if proper.is_none() && bound_value < s as i64 {
            return Err(Error::Internal(format!(
                "no proper {k}-coloring but makespan {bound_value} < s={s}"
            )));
        }
    }
    Ok(GapCertificate {
        reduction_name: "bhc_to_vs".into(),
        completeness,
        soundness: Soundness {
            exhaustive,
            bound_value,
        },
        parameters: params(&[
            ("k", k.to_string()),
            ("c", c.to_string()),
            (
                "uniform",
                uniform.map_or("mixed".into(), |s| s.to_string()),
            ),
            ("edges", h.edges.len().to_string()),
        ]),
    })
}

// ---------------------------------------------------------------------------
// Label Cover -> balanced hypergraph coloring (long codes)

fn is_odd_prime(k: usize) -> bool {
    k >= 3 && k % 2 == 1 && (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            rec(m, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut cur, &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct BhcFromLc {
    pub hypergraph: Hypergraph,
    /// per hypergraph edge: (right vertex, the k Label Cover edge
    /// indices supplying the clouds), aligned with hypergraph.edges.
    pub provenance: Vec<(usize, Vec<usize>)>,
    pub k: usize,
    /// long-code arity n = |Sigma_L|
    pub n: usize,
}

impl BhcFromLc {
    /// vertex id of point x in the cloud of left vertex v
    pub fn node(&self, v: usize, x: &[usize]) -> usize {
        v * self.k.pow(self.n as u32) + crate::hypergraphs::point_index(x, self.k)
    }

    pub fn decode(&self, id: usize) -> (usize, Vec<usize>) {
        let cloud = self.k.pow(self.n as u32);
        (id / cloud, index_point(id % cloud, self.k, self.n))
    }
}

/// Long-code construction: one cloud [k]^{|Sigma_L|} per left vertex;
/// for each right vertex u, each k-subset of incident edges with
/// distinct left endpoints, and each choice of k distinct vectors per
/// endpoint, the k^2 chosen nodes form an edge when every
/// (beta, alpha-tuple) preimage satisfies the 2k multiplicity bound.
pub fn labelcover_to_bhc(lc: &LabelCover, k: usize) -> Result<BhcFromLc, Error> {
    labelcover_to_bhc_with_cap(lc, k, BHC_ENUM_CAP)
}

pub fn labelcover_to_bhc_with_cap(
    lc: &LabelCover,
    k: usize,
    cap: u64,
) -> Result<BhcFromLc, Error> {
    if !is_odd_prime(k) {
        return Err(Error::NotOddPrime(k));
    }
    let n = lc.sigma_left;
    let cloud = (k as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if cloud > 4096 {
        return Err(Error::CapExceeded(format!(
            "cloud size {k}^{n} exceeds cap"
        )));
    }
    let cloud = cloud as usize;
    let points: Vec<Vec<usize>> = (0..cloud).map(|i| index_point(i, k, n)).collect();
    let vector_sets = combinations(cloud, k);

    // incident edges per right vertex
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); lc.right];
    for (i, e) in lc.edges.iter().enumerate() {
        incident[e.v].push(i);
    }

    // enumeration budget
    let mut budget: u64 = 0;
    for inc in &incident {
        let distinct: std::collections::BTreeSet<usize> =
            inc.iter().map(|&i| lc.edges[i].u).collect();
        if distinct.len() >= k {
            let tuples = binom(distinct.len() as u64, k as u64)
                .saturating_mul((vector_sets.len() as u64).saturating_pow(k as u32));
            budget = budget.saturating_add(tuples);
        }
    }
    if budget > cap {
        return Err(Error::CapExceeded(format!(
            "edge enumeration budget {budget} exceeds cap {cap}"
        )));
    }

    let mut edges: Vec<(Vec<usize>, (usize, Vec<usize>))> = Vec::new();
    for u in 0..lc.right {
        // lexicographic k-subsets of incident edges, skipping subsets
        // that repeat a left endpoint
        for edge_subset in combinations(incident[u].len(), k) {
            let chosen: Vec<usize> = edge_subset.iter().map(|&p| incident[u][p]).collect();
            let lefts: Vec<usize> = chosen.iter().map(|&i| lc.edges[i].u).collect();
            let mut distinct = lefts.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != k {
                continue;
            }
            // preimage sets per chosen edge and beta
            let preimage: Vec<Vec<Vec<usize>>> = chosen
                .iter()
                .map(|&i| {
                    (0..lc.sigma_right)
                        .map(|beta| {
                            (0..lc.sigma_left)
                                .filter(|&a| lc.edges[i].pi[a] == beta)
                                .collect()
                        })
                        .collect()
                })
                .collect();
            let mut pick = vec![0usize; k];
            enumerate_vector_choices(
                &vector_sets,
                k,
                0,
                &mut pick,
                &mut |pick: &[usize]| {
                    // pick[i] = index into vector_sets for the i-th cloud
                    if !lc_constraint_ok(lc, k, &points, &vector_sets, &preimage, pick) {
                        return;
                    }
                    let mut edge: Vec<usize> = Vec::with_capacity(k * k);
                    for (i, &vs) in pick.iter().enumerate() {
                        for &p in &vector_sets[vs] {
                            edge.push(lefts[i] * cloud + p);
                        }
                    }
                    edge.sort_unstable();
                    edges.push((edge, (u, chosen.clone())));
                },
            );
        }
    }
    edges.sort();
    edges.dedup_by(|a, b| a.0 == b.0);
    let (hedges, provenance): (Vec<_>, Vec<_>) = edges.into_iter().unzip();
    let hypergraph = Hypergraph::new(lc.left * cloud, hedges)?;
    if hypergraph.edges.len() != provenance.len() {
        return Err(Error::Internal("edge/provenance misalignment".into()));
    }
    Ok(BhcFromLc {
        hypergraph,
        provenance,
        k,
        n,
    })
}

fn binom(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let mut out: u64 = 1;
    for i in 0..b.min(a - b) {
        out = out.saturating_mul(a - i) / (i + 1);
    }
    out
}

fn enumerate_vector_choices(
    vector_sets: &[Vec<usize>],
    k: usize,
    i: usize,
    pick: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if i == k {
        visit(pick);
        return;
    }
    for s in 0..vector_sets.len() {
        pick[i] = s;
        enumerate_vector_choices(vector_sets, k, i + 1, pick, visit);
    }
}

/// Eq. lc-constraint: for every beta and every (alpha_1..alpha_k) with
/// pi_i(alpha_i) = beta, each value p appears at position alpha_i across
/// the k^2 chosen vectors at most 2k times.
fn lc_constraint_ok(
    lc: &LabelCover,
    k: usize,
    points: &[Vec<usize>],
    vector_sets: &[Vec<usize>],
    preimage: &[Vec<Vec<usize>>],
    pick: &[usize],
) -> bool {
    for beta in 0..lc.sigma_right {
        if preimage.iter().any(|p| p[beta].is_empty()) {
            continue;
        }
        let mut alpha_idx = vec![0usize; k];
        loop {
            // count per value p
            let mut counts = vec![0usize; k];
            for i in 0..k {
                let alpha = preimage[i][beta][alpha_idx[i]];
                for &pt in &vector_sets[pick[i]] {
                    counts[points[pt][alpha]] += 1;
                }
            }
            if counts.iter().any(|&c| c > 2 * k) {
                return false;
            }
            // next alpha tuple
            let mut pos = k;
            loop {
                if pos == 0 {
                    // exhausted for this beta
                    break;
                }
                pos -= 1;
                if alpha_idx[pos] + 1 < preimage[pos][beta].len() {
                    alpha_idx[pos] += 1;
                    for a in alpha_idx[pos + 1..].iter_mut() {
                        *a = 0;
                    }
                    break;
                }
                alpha_idx[pos] = 0;
            }
            if alpha_idx.iter().all(|&a| a == 0) {
                break;
            }
        }
    }
    true
}

/// Independent post-hoc validator for Eq. lc-constraint over every
/// emitted edge, re-deriving clouds and positions from the provenance.
pub fn validate_lc_constraint(lc: &LabelCover, out: &BhcFromLc) -> Result<(), Error> {
    let k = out.k;
    let cloud = k.pow(out.n as u32);
    for (edge, (u, chosen)) in out.hypergraph.edges.iter().zip(&out.provenance) {
        if edge.len() != k * k {
            return Err(Error::Internal(format!(
                "edge size {} != k^2 = {}",
                edge.len(),
                k * k
            )));
        }
        // vectors per left endpoint
        let mut per_left: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        for &id in edge {
            per_left
                .entry(id / cloud)
                .or_default()
                .push(index_point(id % cloud, k, out.n));
        }
        if per_left.len() != k || per_left.values().any(|v| v.len() != k) {
            return Err(Error::Internal("edge is not k clouds of k vectors".into()));
        }
        for beta in 0..lc.sigma_right {
            let alphas: Vec<Vec<usize>> = chosen
                .iter()
                .map(|&i| {
                    (0..lc.sigma_left)
                        .filter(|&a| lc.edges[i].pi[a] == beta)
                        .collect()
                })
                .collect();
            if alphas.iter().any(|a| a.is_empty()) {
                continue;
            }
            let lefts: Vec<usize> = chosen.iter().map(|&i| lc.edges[i].u).collect();
            let mut idx = vec![0usize; k];
            loop {
                let mut counts = vec![0usize; k];
                for i in 0..k {
                    let alpha = alphas[i][idx[i]];
                    for x in &per_left[&lefts[i]] {
                        counts[x[alpha]] += 1;
                    }
                }
                if counts.iter().any(|&c| c > 2 * k) {
                    return Err(Error::Internal(format!(
                        "edge for right vertex {u} violates the 2k bound"
                    )));
                }
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    if idx[pos] + 1 < alphas[pos].len() {
                        idx[pos] += 1;
                        for a in idx[pos + 1..].iter_mut() {
                            *a = 0;
                        }
                        break;
                    }
                    idx[pos] = 0;
                }
                if idx.iter().all(|&a| a == 0) {
                    break;
                }
            }
        }
    }
    Ok(())
}

/// Dictator coloring for a BHC long-code hypergraph: node (v, x) gets
/// color x_{sigma(v)}.
pub fn bhc_dictator_coloring(out: &BhcFromLc, sigma: &Labeling) -> Result<Coloring, Error> {
    let cloud = out.k.pow(out.n as u32);
    let total = out.hypergraph.n;
    let mut color_of = Vec::with_capacity(total);
    for id in 0..total {
        let (v, x) = out.decode(id);
        let label = *sigma.left_labels.get(v).ok_or_else(|| Error::DimensionMismatch {
            expected: total / cloud,
            got: sigma.left_labels.len(),
        })?;
        if label >= out.n {
            return Err(Error::ElementOutOfRange {
                element: label,
                universe: out.n,
            });
        }
        color_of.push(x[label]);
    }
    Ok(Coloring { color_of })
}

pub fn verify_labelcover_to_bhc(lc: &LabelCover, k: usize) -> Result<GapCertificate, Error> {
    let out = labelcover_to_bhc(lc, k)?;
    validate_lc_constraint(lc, &out)?;

    // completeness: with a perfect labeling, the dictator coloring has
    // per-edge color multiplicity <= 2k
    let best = best_labeling(lc)?;
    let completeness = if best.value == Rational::one() {
        let coloring = bhc_dictator_coloring(&out, &best.witness)?;
        let check = color_check(&out.hypergraph, k, &coloring)?;
        if check.balance > 2 * k {
            return Err(Error::Internal(format!(
                "dictator coloring balance {} > 2k = {}",
                check.balance,
                2 * k
            )));
        }
        Completeness {
            witness_present: true,
            achieved_value: Rational::from_int(check.balance.max(1) as i64),
        }
    } else {
        Completeness {
            witness_present: false,
            achieved_value: Rational::zero(),
        }
    };

    // soundness: exhaustive search for a proper k-coloring; bound 1
    // records that none exists
    let soundness = match solve_coloring(&out.hypergraph, k, ColoringMode::Proper) {
        Ok(None) => Soundness {
            exhaustive: true,
            bound_value: Rational::one(),
        },
        Ok(Some(_)) => Soundness {
            exhaustive: true,
            bound_value: Rational::zero(),
        },
        Err(Error::CapExceeded(_)) => Soundness {
            exhaustive: false,
            bound_value: Rational::zero(),
        },
        Err(e) => return Err(e),
    };
    Ok(GapCertificate {
        reduction_name: "labelcover_to_bhc".into(),
        completeness,
        soundness,
        parameters: params(&[
            ("k", k.to_string()),
            ("n", out.n.to_string()),
            ("vertices", out.hypergraph.n.to_string()),
            ("edges", out.hypergraph.edges.len().to_string()),
            ("lc_optimum", best.value.canonical_string()),
        ]),
    })
}

// ---------------------------------------------------------------------------
// Label Cover -> rainbow hypergraph coloring

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // smaller root wins, for deterministic master numbering
        match ra.cmp(&rb) {
            std::cmp::Ordering::Less => self.parent[rb] = ra,
            std::cmp::Ordering::Greater => self.parent[ra] = rb,
            std::cmp::Ordering::Equal => {}
        }
    }
}

#[derive(Clone, Debug)]
pub struct RainbowFromLc {
    pub hypergraph: Hypergraph,
    /// master node of each original (vertex, point) long-code node;
    /// left-vertex clouds come first, then right-vertex clouds.
    pub master_of: Vec<usize>,
    pub k: usize,
    /// long-code arity n = |Sigma|
    pub n: usize,
    pub left: usize,
    pub right: usize,
}

impl RainbowFromLc {
    fn cloud(&self) -> usize {
        self.k.pow(self.n as u32)
    }

    /// original node id; `w` counts left vertices first, then right.
    pub fn node(&self, w: usize, point: usize) -> usize {
        w * self.cloud() + point
    }
}

/// Long codes [k]^{|Sigma|} for every Label Cover vertex; edges are the
/// supports of 2k-multisets of a cloud covering [k] in every coordinate,
/// i.e. the covering subsets of size at most 2k (the coloring lemma this
/// leans on quantifies over 2k vectors with repetition, and at small
/// cloud sizes the distinct-vector variant is strictly weaker); equality
/// folding identifies x in K_u with y in K_v when x_i = y_{pi(i)} for
/// each Label Cover edge (u,v,pi); edges are rewritten over master nodes
/// and deduplicated.
pub fn labelcover_to_rainbow(lc: &LabelCover, k: usize) -> Result<RainbowFromLc, Error> {
    labelcover_to_rainbow_with_cap(lc, k, RAINBOW_ENUM_CAP)
}

pub fn labelcover_to_rainbow_with_cap(
    lc: &LabelCover,
    k: usize,
    cap: u64,
) -> Result<RainbowFromLc, Error> {
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    if lc.sigma_left != lc.sigma_right {
        return Err(Error::AlphabetMismatch(format!(
            "rainbow reduction needs Sigma_L = Sigma_R, got {} vs {}",
            lc.sigma_left, lc.sigma_right
        )));
    }
    let n = lc.sigma_left;
    let cloud = (k as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if cloud > 4096 {
        return Err(Error::CapExceeded(format!(
            "cloud size {k}^{n} exceeds cap"
        )));
    }
    let cloud = cloud as usize;
    let vertices = lc.left + lc.right;
    let subsets_per_cloud: u64 = (k..=(2 * k).min(cloud))
        .map(|s| binom(cloud as u64, s as u64))
        .fold(0u64, |a, b| a.saturating_add(b));
    let budget = (vertices as u64).saturating_mul(subsets_per_cloud);
    if budget > cap {
        return Err(Error::CapExceeded(format!(
            "edge enumeration budget {budget} exceeds cap {cap}"
        )));
    }
    let points: Vec<Vec<usize>> = (0..cloud).map(|i| index_point(i, k, n)).collect();

    // folding
    let mut uf = UnionFind::new(vertices * cloud);
    for e in &lc.edges {
        for (y_idx, y) in points.iter().enumerate() {
            // x in K_u with x_i = y_{pi(i)}
            let x: Vec<usize> = (0..n).map(|i| y[e.pi[i]]).collect();
            let x_idx = crate::hypergraphs::point_index(&x, k);
            uf.union(e.u * cloud + x_idx, (lc.left + e.v) * cloud + y_idx);
        }
    }
    let mut master_of = vec![0usize; vertices * cloud];
    let mut masters: BTreeMap<usize, usize> = BTreeMap::new();
    for id in 0..vertices * cloud {
        let root = uf.find(id);
        let next = masters.len();
        master_of[id] = *masters.entry(root).or_insert(next);
    }

    // per-cloud covering subsets of size at most 2k (each is the support
    // of a covering 2k-multiset and vice versa; coverage forces >= k)
    let mut edges = Vec::new();
    for size in k..=(2 * k).min(cloud) {
        for subset in combinations(cloud, size) {
            let covers = (0..n).all(|i| {
                let mut seen = vec![false; k];
                for &p in &subset {
                    seen[points[p][i]] = true;
                }
                seen.iter().all(|&s| s)
            });
            if !covers {
                continue;
            }
            for w in 0..vertices {
                let mut edge: Vec<usize> =
                    subset.iter().map(|&p| master_of[w * cloud + p]).collect();
                edge.sort_unstable();
                edge.dedup();
                edges.push(edge);
            }
        }
    }
    edges.sort();
    edges.dedup();
    let hypergraph = Hypergraph::new(masters.len(), edges)?;
    Ok(RainbowFromLc {
        hypergraph,
        master_of,
        k,
        n,
        left: lc.left,
        right: lc.right,
    })
}

/// Dictator coloring on master nodes: node (w, x) claims color
/// x_{sigma(w)}; errors if folding makes the claim inconsistent (which
/// cannot happen for a perfect labeling).
pub fn rainbow_dictator_coloring(
    out: &RainbowFromLc,
    sigma: &Labeling,
) -> Result<Coloring, Error> {
    let cloud = out.cloud();
    let mut color_of = vec![usize::MAX; out.hypergraph.n];
    for w in 0..out.left + out.right {
        let label = if w < out.left {
            sigma.left_labels[w]
        } else {
            sigma.right_labels[w - out.left]
        };
        if label >= out.n {
            return Err(Error::ElementOutOfRange {
                element: label,
                universe: out.n,
            });
        }
        for p in 0..cloud {
            let claimed = index_point(p, out.k, out.n)[label];
            let m = out.master_of[out.node(w, p)];
            if color_of[m] != usize::MAX && color_of[m] != claimed {
                return Err(Error::Internal(
                    "dictator coloring inconsistent on a folded class".into(),
                ));
            }
            color_of[m] = claimed;
        }
    }
    if color_of.iter().any(|&c| c == usize::MAX) {
        return Err(Error::Internal("uncolored master node".into()));
    }
    Ok(Coloring { color_of })
}

pub fn verify_labelcover_to_rainbow(lc: &LabelCover, k: usize) -> Result<GapCertificate, Error> {
    let out = labelcover_to_rainbow(lc, k)?;

    // completeness: a perfect labeling's dictator coloring is k-rainbow
    let best = best_labeling(lc)?;
    let completeness = if best.value == Rational::one() {
        let coloring = rainbow_dictator_coloring(&out, &best.witness)?;
        let check = color_check(&out.hypergraph, k, &coloring)?;
        if !check.rainbow && !out.hypergraph.edges.is_empty() {
            return Err(Error::Internal(
                "dictator coloring is not rainbow on a satisfiable instance".into(),
            ));
        }
        Completeness {
            witness_present: true,
            achieved_value: Rational::from_int(k as i64),
        }
    } else {
        Completeness {
            witness_present: false,
            achieved_value: Rational::zero(),
        }
    };

    // soundness: exhaustive 2-colorability; bound 1 records "not
    // 2-colorable"
    let soundness = if out.hypergraph.edges.is_empty() {
        Soundness {
            exhaustive: true,
            bound_value: Rational::zero(),
        }
    } else {
        match solve_coloring(&out.hypergraph, 2, ColoringMode::TwoColor) {
            Ok(None) => Soundness {
                exhaustive: true,
                bound_value: Rational::one(),
            },
            Ok(Some(_)) => Soundness {
                exhaustive: true,
                bound_value: Rational::zero(),
            },
            Err(Error::CapExceeded(_)) => Soundness {
                exhaustive: false,
                bound_value: Rational::zero(),
            },
            Err(e) => return Err(e),
        }
    };
    Ok(GapCertificate {
        reduction_name: "labelcover_to_rainbow".into(),
        completeness,
        soundness,
        parameters: params(&[
            ("k", k.to_string()),
            ("n", out.n.to_string()),
            ("masters", out.hypergraph.n.to_string()),
            ("edges", out.hypergraph.edges.len().to_string()),
            ("lc_optimum", best.value.canonical_string()),
        ]),
    })
}

// ---------------------------------------------------------------------------
// rainbow coloring -> VBC

/// Vertex i maps to its incidence vector over edges; a k-rainbow
/// coloring partitions the vertices into k covering parts.
pub fn rainbow_to_vbc(h: &Hypergraph) -> Result<PackingInstance, Error> {
    if h.edges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let jobs = (0..h.n)
        .map(|v| {
            VectorJob::from_bits(&h.edges.iter().map(|e| e.contains(&v)).collect::<Vec<_>>())
        })
        .collect();
    PackingInstance::new(ProblemKind::Vbc, h.edges.len(), None, jobs)
}

pub fn verify_rainbow_to_vbc(h: &Hypergraph, k: usize) -> Result<GapCertificate, Error> {
    let instance = rainbow_to_vbc(h)?;

    // completeness: rainbow coloring => k covering parts
    let rainbow = solve_coloring(h, k, ColoringMode::Rainbow)?;
    let completeness = match &rainbow {
        Some(col) => {
            let witness = Assignment::new(col.color_of.clone());
            let report = evaluate(&instance, &witness, Norm::Infinity)?;
            if !report.feasible {
                return Err(Error::Internal(
                    "rainbow coloring gave a non-covering partition".into(),
                ));
            }
            Completeness {
                witness_present: true,
                achieved_value: Rational::from_int(witness.part_count() as i64),
            }
        }
        None => Completeness {
            witness_present: false,
            achieved_value: Rational::zero(),
        },
    };

    // soundness: exact VBC optimum; not 2-colorable => optimum 1
    let (exact, exhaustive) = match solve::vbc(&instance, solve::VbcMode::Exact) {
        Ok(r) => (Some(r), true),
        Err(Error::CapExceeded(_)) => (None, false),
        Err(e) => return Err(e),
    };
    let bound_value = exact
        .as_ref()
        .map_or(Rational::zero(), |r| Rational::from_int(r.optimum as i64));
    if let Some(r) = &exact {
        if let Some(c) = &rainbow {
            let _ = c;
            if r.optimum < k && completeness.witness_present {
                return Err(Error::Internal(format!(
                    "rainbow colorable but VBC optimum {} < k = {k}",
                    r.optimum
                )));
            }
        }
        let two = solve_coloring(h, 2, ColoringMode::TwoColor)?;
        if two.is_none() && r.optimum != 1 {
            return Err(Error::Internal(format!(
                "not 2-colorable but VBC optimum {} != 1",
                r.optimum
            )));
        }
    }
    Ok(GapCertificate {
        reduction_name: "rainbow_to_vbc".into(),
        completeness,
        soundness: Soundness {
            exhaustive,
            bound_value,
        },
        parameters: params(&[
            ("k", k.to_string()),
            ("vertices", h.n.to_string()),
            ("edges", h.edges.len().to_string()),
        ]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelcover::LcEdge;

    fn sys(universe: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::new(universe, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn setcover_to_vbp_fixtures() {
        for (family, expected) in [
            (sys(4, &[&[0, 1], &[2, 3]]), 2usize),
            (sys(3, &[&[0], &[1], &[2]]), 3),
            (sys(3, &[&[0, 1], &[1, 2], &[0, 2]]), 2),
        ] {
            let cert = verify_setcover_to_vbp(&family).unwrap();
            assert!(cert.completeness.witness_present);
            assert!(cert.soundness.exhaustive);
            assert_eq!(cert.soundness.bound_value, expected as i64);
            assert_eq!(cert.completeness.achieved_value, expected as i64);
        }
    }

    #[test]
    fn setcover_to_vbp_random_families() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_000a);
        let mut tried = 0;
        while tried < 12 {
            let n = rng.gen_range(3..=6usize);
            let sets: Vec<Vec<usize>> = (0..rng.gen_range(2..=4))
                .map(|_| {
                    let size = rng.gen_range(1..=2usize);
                    rand::seq::index::sample(&mut rng, n, size).into_vec()
                })
                .collect();
            let Ok(s) = SetSystem::new(n, sets) else { continue };
            let a = crate::setsys::analyze(&s);
            if !a.simple || !a.nontrivial {
                continue;
            }
            let covered: std::collections::BTreeSet<usize> =
                s.sets.iter().flatten().copied().collect();
            if covered.len() != n {
                continue;
            }
            tried += 1;
            let cert = verify_setcover_to_vbp(&s).unwrap();
            assert!(cert.soundness.exhaustive, "{s:?}");
            assert_eq!(
                cert.completeness.achieved_value, cert.soundness.bound_value,
                "{s:?}"
            );
        }
    }

    #[test]
    fn monoclique_fixtures() {
        // K3, k=2, B=2: three edge-cliques, no 2-coloring, makespan 2
        let k3 = Graph::complete(3);
        let out = monoclique_to_vs(&k3, 2, 2).unwrap();
        assert_eq!(out.cliques.len(), 3);
        let cert = verify_monoclique_to_vs(&k3, 2, 2).unwrap();
        assert!(!cert.completeness.witness_present);
        assert!(cert.soundness.exhaustive);
        assert_eq!(cert.soundness.bound_value, 2);

        // P3, k=2, B=2: chi = 2, makespan 1
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let cert = verify_monoclique_to_vs(&p3, 2, 2).unwrap();
        assert!(cert.completeness.witness_present);
        assert_eq!(cert.completeness.achieved_value, 1);

        // edgeless: degenerate zero instance
        let empty = Graph::empty(3);
        let out = monoclique_to_vs(&empty, 2, 2).unwrap();
        assert!(out.degenerate);
        let cert = verify_monoclique_to_vs(&empty, 2, 2).unwrap();
        assert_eq!(cert.soundness.bound_value, 0);
    }

    #[test]
    fn lex_amplify_fixtures() {
        let cert = verify_lex_amplify(&Graph::complete(2), 2, 1).unwrap();
        assert!(cert.completeness.witness_present);
        assert_eq!(cert.completeness.achieved_value, 4); // chi(K2)^2
        assert_eq!(cert.soundness.bound_value, 4); // m(K4, 1) = 4 = 2^2
        assert!(lex_amplify(&Graph::cycle(5), 3).is_err());
        // C5 squared: 3^2 = 9 colors suffice
        let cert = verify_lex_amplify(&Graph::cycle(5), 2, 2).unwrap();
        assert_eq!(cert.completeness.achieved_value, 9);
    }

    #[test]
    fn bhc_to_vs_fixtures() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let cert = verify_bhc_to_vs(&h, 3, 1).unwrap();
        assert!(cert.completeness.witness_present);
        assert_eq!(cert.completeness.achieved_value, 1);

        let fano = Hypergraph::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap();
        let cert = verify_bhc_to_vs(&fano, 2, 2).unwrap();
        assert!(cert.soundness.exhaustive);
        assert!(cert.soundness.bound_value >= 3);

        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let cert = verify_bhc_to_vs(&h, 1, 2).unwrap();
        assert_eq!(cert.soundness.bound_value, 2);
    }

    #[test]
    fn bhc_long_code_trivial_alphabet() {
        // one right vertex, 3 left neighbors, |Sigma| = 1
        let lc = LabelCover::new(
            3,
            1,
            1,
            1,
            (0..3).map(|u| LcEdge { u, v: 0, pi: vec![0] }).collect(),
        )
        .unwrap();
        let out = labelcover_to_bhc(&lc, 3).unwrap();
        assert_eq!(out.hypergraph.n, 9);
        assert_eq!(out.hypergraph.edges.len(), 1);
        assert_eq!(out.hypergraph.edges[0].len(), 9);
        validate_lc_constraint(&lc, &out).unwrap();
        let cert = verify_labelcover_to_bhc(&lc, 3).unwrap();
        assert!(cert.completeness.witness_present);
        assert!(cert.completeness.achieved_value <= 6);
    }

    #[test]
    fn bhc_rejects_non_odd_prime() {
        let lc = LabelCover::new(
            3,
            1,
            1,
            1,
            (0..3).map(|u| LcEdge { u, v: 0, pi: vec![0] }).collect(),
        )
        .unwrap();
        assert!(matches!(
            labelcover_to_bhc(&lc, 4),
            Err(Error::NotOddPrime(4))
        ));
        assert!(matches!(
            labelcover_to_bhc(&lc, 9),
            Err(Error::NotOddPrime(9))
        ));
    }

    fn identity_lc_one_edge() -> LabelCover {
        LabelCover::new(
            1,
            1,
            2,
            2,
            vec![LcEdge {
                u: 0,
                v: 0,
                pi: vec![0, 1],
            }],
        )
        .unwrap()
    }

    #[test]
    fn rainbow_identity_folding() {
        let lc = identity_lc_one_edge();
        let out = labelcover_to_rainbow(&lc, 3).unwrap();
        // two clouds of 9 fold pointwise into 9 masters
        assert_eq!(out.hypergraph.n, 9);
        let cert = verify_labelcover_to_rainbow(&lc, 3).unwrap();
        assert!(cert.completeness.witness_present);
        assert!(cert.soundness.exhaustive);
        // identity instance is 2-colorable, so the soundness bound is 0
        assert_eq!(cert.soundness.bound_value, 0);
    }

    #[test]
    fn rainbow_smallest_clouds() {
        let lc = LabelCover::new(1, 1, 1, 1, vec![]).unwrap();
        let out = labelcover_to_rainbow(&lc, 3).unwrap();
        // two isolated clouds of 3 points; the only covering support per
        // cloud is the full cloud itself
        assert_eq!(out.hypergraph.n, 6);
        assert_eq!(out.hypergraph.edges.len(), 2);
        assert!(out.hypergraph.edges.iter().all(|e| e.len() == 3));
        let cert = verify_labelcover_to_rainbow(&lc, 3).unwrap();
        assert!(cert.completeness.witness_present);
    }

    fn conflicting_projection_lc() -> LabelCover {
        LabelCover::new(
            1,
            1,
            2,
            2,
            vec![
                LcEdge {
                    u: 0,
                    v: 0,
                    pi: vec![0, 1],
                },
                LcEdge {
                    u: 0,
                    v: 0,
                    pi: vec![1, 0],
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn rainbow_conflicting_fixture_not_two_colorable() {
        let lc = conflicting_projection_lc();
        let out = labelcover_to_rainbow(&lc, 3).unwrap();
        // identity + swap folding merges swap-orbits: 6 masters
        assert_eq!(out.hypergraph.n, 6);
        let cert = verify_labelcover_to_rainbow(&lc, 3).unwrap();
        assert!(cert.soundness.exhaustive);
        assert_eq!(cert.soundness.bound_value, 1, "fixture must be non-2-colorable");
    }

    #[test]
    fn rainbow_folding_respects_constraints() {
        use rand::{Rng, SeedableRng};
        let lc = conflicting_projection_lc();
        let out = labelcover_to_rainbow(&lc, 3).unwrap();
        let k = 3usize;
        let cloud = 9usize;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_000b);
        for _ in 0..100 {
            let e = &lc.edges[rng.gen_range(0..lc.edges.len())];
            let y_idx = rng.gen_range(0..cloud);
            let y = index_point(y_idx, k, 2);
            let x: Vec<usize> = (0..2).map(|i| y[e.pi[i]]).collect();
            let x_idx = crate::hypergraphs::point_index(&x, k);
            assert_eq!(
                out.master_of[out.node(e.u, x_idx)],
                out.master_of[out.node(lc.left + e.v, y_idx)]
            );
        }
    }

    #[test]
    fn rainbow_to_vbc_fixtures() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let cert = verify_rainbow_to_vbc(&h, 2).unwrap();
        assert!(cert.completeness.witness_present);
        assert_eq!(cert.soundness.bound_value, 2);

        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let cert = verify_rainbow_to_vbc(&h, 3).unwrap();
        assert_eq!(cert.soundness.bound_value, 3);

        let fano = Hypergraph::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap();
        let cert = verify_rainbow_to_vbc(&fano, 3).unwrap();
        assert_eq!(cert.soundness.bound_value, 1);
        assert!(cert.soundness.exhaustive);

        assert!(matches!(
            rainbow_to_vbc(&Hypergraph::new(2, vec![]).unwrap()),
            Err(Error::EmptyEdgeSet)
        ));
    }
}
