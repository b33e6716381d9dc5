//! Hypergraph coloring kernels: proper / balanced / rainbow / 2-coloring
//! search, the H_r^n[k] generator, and the 1-fixing gadget checker.

use serde::{Deserialize, Serialize};

use crate::graphs::Coloring;
use crate::Error;

pub const COLORING_CAP: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Edges are sorted and must not repeat a vertex.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, Error> {
        let mut norm = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Schema(format!("edge repeats a vertex: {e:?}")));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::ElementOutOfRange {
                    element: v,
                    universe: n,
                });
            }
            norm.push(e);
        }
        norm.sort();
        norm.dedup();
        Ok(Hypergraph { n, edges: norm })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorCheck {
    pub proper: bool,
    pub balance: usize,
    pub rainbow: bool,
}

/// proper: every edge sees at least 2 colors. balance: max color
/// multiplicity within an edge. rainbow: every edge sees all k colors.
pub fn color_check(h: &Hypergraph, k: usize, c: &Coloring) -> Result<ColorCheck, Error> {
    c.validate(h.n, k)?;
    let mut proper = true;
    let mut rainbow = true;
    let mut balance = 0;
    for e in &h.edges {
        let mut counts = vec![0usize; k];
        for &v in e {
            counts[c.color_of[v]] += 1;
        }
        let distinct = counts.iter().filter(|&&x| x > 0).count();
        proper &= distinct >= 2 || e.len() <= 1;
        rainbow &= distinct == k;
        balance = balance.max(counts.iter().copied().max().unwrap_or(0));
    }
    Ok(ColorCheck {
        proper,
        balance,
        rainbow,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringMode {
    Proper,
    Balanced(usize),
    Rainbow,
    TwoColor,
}

/// Backtracking witness search over vertex colorings, or definitive
/// absence. TwoColor is proper coloring with k forced to 2 and vertex 0
/// pinned to color 0.
pub fn solve_coloring(
    h: &Hypergraph,
    k: usize,
    mode: ColoringMode,
) -> Result<Option<Coloring>, Error> {
    solve_coloring_with_cap(h, k, mode, COLORING_CAP)
}

pub fn solve_coloring_with_cap(
    h: &Hypergraph,
    k: usize,
    mode: ColoringMode,
    cap: u64,
) -> Result<Option<Coloring>, Error> {
    let k = match mode {
        ColoringMode::TwoColor => 2,
        _ => k,
    };
    if k == 0 {
        return Err(Error::Schema("k must be at least 1".into()));
    }
    let states = (k as u64).checked_pow(h.n as u32).unwrap_or(u64::MAX);
    if states > cap {
        return Err(Error::CapExceeded(format!(
            "{k}^{} colorings exceeds cap {cap}",
            h.n
        )));
    }

    // edges touching each vertex, for incremental pruning
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    for (i, e) in h.edges.iter().enumerate() {
        for &v in e {
            touching[v].push(i);
        }
    }

    // prune an edge given how many of its vertices are colored so far
    let edge_ok = |e: &[usize], color: &[usize]| -> bool {
        let mut counts = vec![0usize; k];
        let mut uncolored = 0usize;
        for &v in e {
            if color[v] == usize::MAX {
                uncolored += 1;
            } else {
                counts[color[v]] += 1;
            }
        }
        match mode {
            ColoringMode::Proper | ColoringMode::TwoColor => {
                e.len() <= 1
                    || uncolored > 0
                    || counts.iter().filter(|&&x| x > 0).count() >= 2
            }
            ColoringMode::Balanced(c) => counts.iter().all(|&x| x <= c),
            ColoringMode::Rainbow => {
                let missing = counts.iter().filter(|&&x| x == 0).count();
                missing <= uncolored
            }
        }
    };

    fn rec(
        h: &Hypergraph,
        touching: &[Vec<usize>],
        k: usize,
        pin_first: bool,
        edge_ok: &impl Fn(&[usize], &[usize]) -> bool,
        v: usize,
        color: &mut [usize],
    ) -> bool {
        if v == h.n {
            return true;
        }
        let top = if v == 0 && pin_first { 1 } else { k };
        for c in 0..top {
            color[v] = c;
            if touching[v].iter().all(|&i| edge_ok(&h.edges[i], color))
                && rec(h, touching, k, pin_first, edge_ok, v + 1, color)
            {
                return true;
            }
        }
        color[v] = usize::MAX;
        false
    }

    let mut color = vec![usize::MAX; h.n];
    let pin_first = matches!(mode, ColoringMode::TwoColor);
    if rec(h, &touching, k, pin_first, &edge_ok, 0, &mut color) {
        let witness = Coloring { color_of: color };
        let check = color_check(h, k, &witness)?;
        let ok = match mode {
            ColoringMode::Proper | ColoringMode::TwoColor => check.proper,
            ColoringMode::Balanced(c) => check.balance <= c,
            ColoringMode::Rainbow => check.rainbow,
        };
        if !ok {
            return Err(Error::Internal("witness failed re-validation".into()));
        }
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// Point v in [k]^n encoded row-major, first coordinate most significant.
pub fn point_index(point: &[usize], k: usize) -> usize {
    point.iter().fold(0, |acc, &x| acc * k + x)
}

pub fn index_point(mut idx: usize, k: usize, n: usize) -> Vec<usize> {
    let mut p = vec![0; n];
    for j in (0..n).rev() {
        p[j] = idx % k;
        idx /= k;
    }
    p
}

/// H_r^n[k]: vertices are all of [k]^n; a k-subset of vertices forms an
/// edge when the per-coordinate counts of missing values sum to <= r.
pub fn gen_h_r_n_k(k: usize, n: usize, r: usize) -> Result<Hypergraph, Error> {
    if k == 0 || n == 0 {
        return Err(Error::Schema("H_r^n[k] needs k, n >= 1".into()));
    }
    let verts = (k as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if verts > 64 {
        return Err(Error::CapExceeded(format!(
            "{k}^{n} vertices exceeds generator cap 64"
        )));
    }
    let verts = verts as usize;
    let points: Vec<Vec<usize>> = (0..verts).map(|i| index_point(i, k, n)).collect();
    let mut edges = Vec::new();
    let mut subset = Vec::with_capacity(k);
    gen_edges(&points, k, n, r, 0, &mut subset, &mut edges);
    Hypergraph::new(verts, edges)
}

fn gen_edges(
    points: &[Vec<usize>],
    k: usize,
    n: usize,
    r: usize,
    start: usize,
    subset: &mut Vec<usize>,
    edges: &mut Vec<Vec<usize>>,
) {
    if subset.len() == k {
        let mut deficiency = 0;
        for j in 0..n {
            let mut seen = vec![false; k];
            for &v in subset.iter() {
                seen[points[v][j]] = true;
            }
            deficiency += seen.iter().filter(|&&s| !s).count();
        }
        if deficiency <= r {
            edges.push(subset.clone());
        }
        return;
    }
    for v in start..points.len() {
        subset.push(v);
        gen_edges(points, k, n, r, v + 1, subset, edges);
        subset.pop();
    }
}

/// Total function f: [k]^n -> {0,1}, table indexed by point_index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruthTableFn {
    pub k: usize,
    pub n: usize,
    pub table: Vec<u8>,
}

impl TruthTableFn {
    pub fn new(k: usize, n: usize, table: Vec<u8>) -> Result<Self, Error> {
        let size = k.checked_pow(n as u32).ok_or_else(|| {
            Error::CapExceeded(format!("{k}^{n} truth table overflows"))
        })?;
        if table.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                got: table.len(),
            });
        }
        if table.iter().any(|&b| b > 1) {
            return Err(Error::Schema("truth table values must be 0/1".into()));
        }
        Ok(TruthTableFn { k, n, table })
    }

    pub fn eval(&self, point: &[usize]) -> u8 {
        self.table[point_index(point, self.k)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetReport {
    pub two_coloring_property: bool,
    pub one_fixing: bool,
    /// (coordinate l, alpha, beta) with f = 0 on {x_l = alpha} and
    /// f = 1 on {x_l = beta}, when one_fixing holds.
    pub witness: Option<(usize, usize, usize)>,
}

/// two_coloring_property: every multiset of 2k points covering [k] in
/// each coordinate takes both output values. one_fixing: a coordinate
/// and two values fix the output as 0 resp. 1.
pub fn gadget_check(f: &TruthTableFn) -> Result<GadgetReport, Error> {
    let (k, n) = (f.k, f.n);
    let size = f.table.len();

    // one_fixing scan
    let mut witness = None;
    'outer: for l in 0..n {
        let mut all_zero = vec![true; k];
        let mut all_one = vec![true; k];
        for idx in 0..size {
            let p = index_point(idx, k, n);
            let out = f.table[idx];
            all_zero[p[l]] &= out == 0;
            all_one[p[l]] &= out == 1;
        }
        for alpha in 0..k {
            for beta in 0..k {
                if alpha != beta && all_zero[alpha] && all_one[beta] {
                    witness = Some((l, alpha, beta));
                    break 'outer;
                }
            }
        }
    }

    // multisets of 2k points, pruned on achievable per-coordinate coverage
    let points: Vec<Vec<usize>> = (0..size).map(|i| index_point(i, k, n)).collect();
    let mut ok = true;
    let mut chosen: Vec<usize> = Vec::with_capacity(2 * k);
    fn rec(
        f: &TruthTableFn,
        points: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        start: usize,
        ok: &mut bool,
    ) {
        if !*ok {
            return;
        }
        let (k, n) = (f.k, f.n);
        if chosen.len() == 2 * k {
            for j in 0..n {
                let mut seen = vec![false; k];
                for &i in chosen.iter() {
                    seen[points[i][j]] = true;
                }
                if seen.iter().any(|&s| !s) {
                    return;
                }
            }
            let first = f.table[chosen[0]];
            if chosen.iter().all(|&i| f.table[i] == first) {
                *ok = false;
            }
            return;
        }
        // multiset enumeration: indices non-decreasing
        for i in start..points.len() {
            chosen.push(i);
            rec(f, points, chosen, i, ok);
            chosen.pop();
            if !*ok {
                return;
            }
        }
    }
    rec(f, &points, &mut chosen, 0, &mut ok);

    Ok(GadgetReport {
        two_coloring_property: ok,
        one_fixing: witness.is_some(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring(cs: &[usize]) -> Coloring {
        Coloring {
            color_of: cs.to_vec(),
        }
    }

    #[test]
    fn color_check_examples() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let r = color_check(&h, 3, &coloring(&[0, 1, 2])).unwrap();
        assert!(r.proper && r.rainbow && r.balance == 1);
        let r = color_check(&h, 3, &coloring(&[0, 0, 0])).unwrap();
        assert!(!r.proper && r.balance == 3);
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let r = color_check(&h, 2, &coloring(&[0, 1, 0])).unwrap();
        assert!(r.proper && r.rainbow && r.balance == 1);
    }

    fn fano() -> Hypergraph {
        Hypergraph::new(
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
        .unwrap()
    }

    #[test]
    fn fano_not_two_colorable() {
        assert!(solve_coloring(&fano(), 2, ColoringMode::TwoColor)
            .unwrap()
            .is_none());
    }

    #[test]
    fn rainbow_single_edge_and_balanced() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let w = solve_coloring(&h, 3, ColoringMode::Rainbow).unwrap().unwrap();
        assert!(color_check(&h, 3, &w).unwrap().rainbow);
        let h = Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let w = solve_coloring(&h, 2, ColoringMode::Balanced(2)).unwrap().unwrap();
        assert_eq!(color_check(&h, 2, &w).unwrap().balance, 2);
        assert!(solve_coloring(&h, 2, ColoringMode::Balanced(1)).unwrap().is_none());
    }

    #[test]
    fn h_r_n_k_smallest_cases() {
        let h = gen_h_r_n_k(2, 1, 0).unwrap();
        assert_eq!(h.n, 2);
        assert_eq!(h.edges, vec![vec![0, 1]]);
        // k=3, n=1, r=1: full triple plus all triples... only {0,1,2}
        // exists as a 3-subset of 3 vertices; deficiency 0 <= 1.
        let h = gen_h_r_n_k(3, 1, 1).unwrap();
        assert_eq!(h.edges, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn abp20_not_two_colorable() {
        for (k, n) in [(2usize, 2usize), (2, 3), (3, 2)] {
            let h = gen_h_r_n_k(k, n, k / 2).unwrap();
            assert!(
                solve_coloring(&h, 2, ColoringMode::TwoColor).unwrap().is_none(),
                "H_{}^{n}[{k}] unexpectedly 2-colorable",
                k / 2
            );
        }
    }

    #[test]
    fn gadget_examples() {
        // dictator threshold f(x) = [x_0 != 0] over [3]^2
        let k = 3;
        let table: Vec<u8> = (0..9)
            .map(|i| u8::from(index_point(i, k, 2)[0] != 0))
            .collect();
        let f = TruthTableFn::new(k, 2, table).unwrap();
        let rep = gadget_check(&f).unwrap();
        assert!(rep.one_fixing);
        let (l, alpha, _) = rep.witness.unwrap();
        assert_eq!((l, alpha), (0, 0));

        let constant = TruthTableFn::new(3, 1, vec![0, 0, 0]).unwrap();
        let rep = gadget_check(&constant).unwrap();
        assert!(!rep.two_coloring_property);
    }

    #[test]
    fn gadget_lemma_exhaustive_k3_n1() {
        for bits in 0u8..8 {
            let table = vec![bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
            let f = TruthTableFn::new(3, 1, table).unwrap();
            let rep = gadget_check(&f).unwrap();
            if rep.two_coloring_property {
                assert!(rep.one_fixing, "f = {bits:03b}");
            }
        }
    }

    #[test]
    fn gadget_lemma_random_k3_n2() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..10_000 {
            let table: Vec<u8> = (0..9).map(|_| rng.gen_range(0..2u8)).collect();
            let f = TruthTableFn::new(3, 2, table).unwrap();
            let rep = gadget_check(&f).unwrap();
            if rep.two_coloring_property {
                assert!(rep.one_fixing, "{:?}", f.table);
            }
        }
    }

    #[test]
    fn rainbow_implies_proper_and_balance_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0004);
        for _ in 0..300 {
            let n = rng.gen_range(2..=5usize);
            let k = rng.gen_range(2..=3usize);
            let edges: Vec<Vec<usize>> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let size = rng.gen_range(2..=n);
                    rand::seq::index::sample(&mut rng, n, size).into_vec()
                })
                .collect();
            let h = Hypergraph::new(n, edges).unwrap();
            let c = Coloring {
                color_of: (0..n).map(|_| rng.gen_range(0..k)).collect(),
            };
            let r = color_check(&h, k, &c).unwrap();
            if r.rainbow && k >= 2 {
                assert!(r.proper);
            }
            let min_edge = h.edges.iter().map(Vec::len).min().unwrap();
            if r.balance < min_edge {
                assert!(r.proper);
            }
        }
    }

    #[test]
    fn solver_agrees_with_naive_enumeration() {
        // all hypergraphs on n <= 4 vertices with <= 4 edges of size >= 2
        for n in 2..=4usize {
            let mut pool = Vec::new();
            for mask in 1u32..(1 << n) {
                if mask.count_ones() >= 2 {
                    pool.push((0..n).filter(|&v| mask & (1 << v) != 0).collect::<Vec<_>>());
                }
            }
            for picks in 0u32..(1 << pool.len().min(4)) {
                let edges: Vec<Vec<usize>> = pool
                    .iter()
                    .take(4)
                    .enumerate()
                    .filter(|(i, _)| picks & (1 << i) != 0)
                    .map(|(_, e)| e.clone())
                    .collect();
                let h = Hypergraph::new(n, edges).unwrap();
                let fast = solve_coloring(&h, 2, ColoringMode::Proper).unwrap().is_some();
                let naive = (0..(1usize << n)).any(|m| {
                    let c = Coloring {
                        color_of: (0..n).map(|v| (m >> v) & 1).collect(),
                    };
                    color_check(&h, 2, &c).unwrap().proper
                });
                assert_eq!(fast, naive, "{h:?}");
            }
        }
    }
}
