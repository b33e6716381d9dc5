//! Exact graph invariants, k-colorability, lexicographic products, and
//! monochromatic-clique oracles. Everything here is exponential-time
//! exact search behind explicit caps.

use serde::{Deserialize, Serialize};

use crate::Error;

pub const INVARIANT_CAP: usize = 20;
pub const MONO_CLIQUE_CAP: u64 = 1 << 20;

/// Simple undirected graph. Edges are stored sorted with u < v.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::ElementOutOfRange {
                    element: a.max(b),
                    universe: n,
                });
            }
            if a == b {
                return Err(Error::Schema(format!("self-loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Graph { n, edges: norm })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Graph { n, edges }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|v| (v.min((v + 1) % n), v.max((v + 1) % n))).collect();
        Graph::new(n, edges).expect("cycle edges are valid")
    }

    /// Bitmask adjacency rows; requires n <= 64.
    pub fn adjacency(&self) -> Result<Vec<u64>, Error> {
        if self.n > 64 {
            return Err(Error::CapExceeded(format!(
                "bitmask adjacency needs n <= 64, got {}",
                self.n
            )));
        }
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(adj)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub color_of: Vec<usize>,
}

impl Coloring {
    pub fn validate(&self, n: usize, k: usize) -> Result<(), Error> {
        if self.color_of.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.color_of.len(),
            });
        }
        if let Some(&c) = self.color_of.iter().find(|&&c| c >= k) {
            return Err(Error::PartOutOfRange { part: c, count: k });
        }
        Ok(())
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges.iter().all(|&(a, b)| self.color_of[a] != self.color_of[b])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub max_clique: Vec<usize>,
    pub max_independent_set: Vec<usize>,
    pub optimal_coloring: Coloring,
    pub ramsey_ok: bool,
}

/// Largest clique as a bitmask, lexicographically smallest among maximum
/// cliques (by ascending vertex choice).
fn max_clique_mask(adj: &[u64], allowed: u64) -> u64 {
    fn rec(adj: &[u64], cand: u64, current: u64, best: &mut u64) {
        if (current.count_ones() + cand.count_ones()) <= best.count_ones() {
            return;
        }
        if cand == 0 {
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as u64;
            c &= c - 1;
            rec(adj, c & adj[v as usize], current | (1 << v), best);
            if (current.count_ones() + c.count_ones()) <= best.count_ones() {
                break;
            }
        }
    }
    let mut best = 0u64;
    rec(adj, allowed, 0, &mut best);
    best
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

fn binomial(a: u64, b: u64) -> u128 {
    let b = b.min(a - b.min(a));
    let mut out: u128 = 1;
    for i in 0..b {
        out = out.saturating_mul((a - i) as u128) / (i as u128 + 1);
    }
    out
}

pub fn invariants(g: &Graph) -> Result<Invariants, Error> {
    invariants_with_cap(g, INVARIANT_CAP)
}

pub fn invariants_with_cap(g: &Graph, cap: usize) -> Result<Invariants, Error> {
    if g.n > cap {
        return Err(Error::CapExceeded(format!(
            "invariants cap {cap} exceeded by n={}",
            g.n
        )));
    }
    let adj = g.adjacency()?;
    let full = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let clique = max_clique_mask(&adj, full);
    let co_adj: Vec<u64> = (0..g.n)
        .map(|v| full & !adj[v] & !(1 << v))
        .collect();
    let independent = max_clique_mask(&co_adj, full);
    let omega = clique.count_ones() as usize;
    let alpha = independent.count_ones() as usize;
    let mut chi = omega.max(usize::from(g.n > 0));
    let optimal_coloring = loop {
        if let Some(c) = k_colorable(g, chi.max(1))? {
            break c;
        }
        chi += 1;
    };
    let ramsey_ok = (g.n as u128) < binomial((alpha + omega) as u64, omega as u64);
    Ok(Invariants {
        omega,
        alpha,
        chi: chi.max(usize::from(g.n > 0)),
        max_clique: mask_to_vec(clique),
        max_independent_set: mask_to_vec(independent),
        optimal_coloring,
        ramsey_ok,
    })
}

/// Proper k-coloring witness or definitive absence. Symmetry is broken
/// by pre-coloring a greedily-found maximal clique.
pub fn k_colorable(g: &Graph, k: usize) -> Result<Option<Coloring>, Error> {
    if k == 0 {
        return Err(Error::Schema("k must be at least 1".into()));
    }
    let adj = g.adjacency()?;
    // greedy maximal clique from vertex of max degree
    let mut clique: Vec<usize> = Vec::new();
    if g.n > 0 {
        let start = (0..g.n).max_by_key(|&v| adj[v].count_ones()).unwrap();
        clique.push(start);
        let mut cand = adj[start];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            clique.push(v);
            cand &= adj[v];
        }
    }
    if clique.len() > k {
        return Ok(None);
    }
    let mut color = vec![usize::MAX; g.n];
    for (c, &v) in clique.iter().enumerate() {
        color[v] = c;
    }
    let order: Vec<usize> = {
        let mut rest: Vec<usize> = (0..g.n).filter(|v| !clique.contains(v)).collect();
        rest.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
        clique.iter().copied().chain(rest).collect()
    };
    fn rec(adj: &[u64], order: &[usize], pos: usize, k: usize, color: &mut [usize]) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        if color[v] != usize::MAX {
            return rec(adj, order, pos + 1, k, color);
        }
        let mut banned = vec![false; k];
        let mut a = adj[v];
        while a != 0 {
            let u = a.trailing_zeros() as usize;
            a &= a - 1;
            if color[u] != usize::MAX {
                banned[color[u]] = true;
            }
        }
        for c in 0..k {
            if !banned[c] {
                color[v] = c;
                if rec(adj, order, pos + 1, k, color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    if rec(&adj, &order, 0, k, &mut color) {
        let witness = Coloring { color_of: color };
        debug_assert!(witness.is_proper(g));
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// Lexicographic product: (u1,v1) ~ (u2,v2) iff u1 ~ u2 in G, or u1 = u2
/// and v1 ~ v2 in H. Vertex (u,v) is encoded row-major as u*n_H + v.
pub fn lex_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n;
    let mut edges = Vec::new();
    for &(u1, u2) in &g.edges {
        for v1 in 0..nh {
            for v2 in 0..nh {
                edges.push((u1 * nh + v1, u2 * nh + v2));
            }
        }
    }
    for u in 0..g.n {
        for &(v1, v2) in &h.edges {
            edges.push((u * nh + v1, u * nh + v2));
        }
    }
    Graph::new(g.n * nh, edges).expect("product edges are valid")
}

/// G^n for n a power of two, by repeated squaring.
pub fn lex_power(g: &Graph, n: usize) -> Result<Graph, Error> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::Schema(format!("lex_power needs a power of 2 >= 2, got {n}")));
    }
    let mut out = g.clone();
    let mut e = n;
    while e > 1 {
        out = lex_product(&out, &out);
        e /= 2;
    }
    Ok(out)
}

/// Largest clique contained in a single color class of `c`.
pub fn max_mono_clique(g: &Graph, k: usize, c: &Coloring) -> Result<usize, Error> {
    c.validate(g.n, k)?;
    let adj = g.adjacency()?;
    let mut best = 0;
    for color in 0..k {
        let class: u64 = (0..g.n)
            .filter(|&v| c.color_of[v] == color)
            .fold(0, |m, v| m | 1 << v);
        if class.count_ones() as usize > best {
            best = best.max(max_clique_mask(&adj, class).count_ones() as usize);
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minimax {
    pub value: usize,
    pub best_coloring: Coloring,
}

/// m(G,k) = min over all k-colorings of the largest monochromatic
/// clique. Colorings are enumerated as restricted growth strings, which
/// covers every coloring up to color renaming; the reported minimax and
/// witness are the first (lexicographically smallest) optimum.
pub fn minimax_mono_clique(g: &Graph, k: usize) -> Result<Minimax, Error> {
    minimax_mono_clique_with_cap(g, k, MONO_CLIQUE_CAP)
}

pub fn minimax_mono_clique_with_cap(g: &Graph, k: usize, cap: u64) -> Result<Minimax, Error> {
    if k == 0 {
        return Err(Error::Schema("k must be at least 1".into()));
    }
    let states = (k as u64).checked_pow(g.n as u32).unwrap_or(u64::MAX);
    if states > cap {
        return Err(Error::CapExceeded(format!(
            "{k}^{} colorings exceeds cap {cap}",
            g.n
        )));
    }
    if g.n == 0 {
        return Ok(Minimax {
            value: 0,
            best_coloring: Coloring { color_of: vec![] },
        });
    }
    let mut best_value = usize::MAX;
    let mut best: Option<Coloring> = None;
    let mut color = vec![0usize; g.n];
    loop {
        let c = Coloring { color_of: color.clone() };
        let value = max_mono_clique(g, k, &c)?;
        if value < best_value {
            best_value = value;
            best = Some(c);
        }
        // next restricted growth string with values < k
        let mut pos = g.n;
        loop {
            if pos == 0 {
                let witness = best.expect("at least one coloring visited");
                return Ok(Minimax {
                    value: best_value,
                    best_coloring: witness,
                });
            }
            pos -= 1;
            let max_prefix = color[..pos].iter().copied().max().unwrap_or(0);
            let ceiling = if pos == 0 { 0 } else { (max_prefix + 1).min(k - 1) };
            if color[pos] < ceiling {
                color[pos] += 1;
                for c in color[pos + 1..].iter_mut() {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// When k(B-1) >= n a balanced coloring caps every class below B, so the
/// Monochromatic-Clique instance is a YES with this witness; otherwise
/// undecided.
pub fn trivial_mc_decision(n: usize, k: usize, b: usize) -> Option<Coloring> {
    if k == 0 || b == 0 {
        return None;
    }
    if k * (b - 1) >= n {
        let class = (b - 1).max(1);
        Some(Coloring {
            color_of: (0..n).map(|v| v / class).collect(),
        })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_invariants() {
        let inv = invariants(&Graph::cycle(5)).unwrap();
        assert_eq!((inv.omega, inv.alpha, inv.chi), (2, 2, 3));
        assert!(inv.ramsey_ok); // 5 < C(4,2) = 6
        assert!(inv.optimal_coloring.is_proper(&Graph::cycle(5)));
    }

    #[test]
    fn k4_and_empty_invariants() {
        let inv = invariants(&Graph::complete(4)).unwrap();
        assert_eq!((inv.omega, inv.alpha, inv.chi), (4, 1, 4));
        assert!(inv.ramsey_ok); // 4 < C(5,4) = 5
        let inv = invariants(&Graph::empty(3)).unwrap();
        assert_eq!((inv.omega, inv.alpha, inv.chi), (1, 3, 1));
    }

    #[test]
    fn colorability_witness_and_absence() {
        assert!(k_colorable(&Graph::complete(3), 2).unwrap().is_none());
        let w = k_colorable(&Graph::cycle(5), 3).unwrap().unwrap();
        assert!(w.is_proper(&Graph::cycle(5)));
        let g = Graph::cycle(6);
        let w = k_colorable(&g, g.n).unwrap().unwrap();
        assert!(w.is_proper(&g));
    }

    #[test]
    fn lex_product_counts_and_k2_closure() {
        let k2 = Graph::complete(2);
        let p = lex_product(&k2, &k2);
        assert_eq!(p, Graph::complete(4));
        assert_eq!(p.edges.len(), 1 * 4 + 2 * 1);
        assert_eq!(lex_power(&k2, 4).unwrap(), Graph::complete(16));
        assert!(lex_power(&k2, 3).is_err());
        // G with an empty 2-vertex graph: only cross-G edges
        let g = Graph::cycle(4);
        let p = lex_product(&g, &Graph::empty(2));
        assert_eq!(p.edges.len(), 4 * g.edges.len());
    }

    #[test]
    fn minimax_examples() {
        let m = minimax_mono_clique(&Graph::complete(4), 2).unwrap();
        assert_eq!(m.value, 2);
        assert_eq!(max_mono_clique(&Graph::complete(4), 2, &m.best_coloring).unwrap(), 2);
        // forced colorings with k=1
        assert_eq!(minimax_mono_clique(&Graph::complete(2), 1).unwrap().value, 2);
        let k4 = lex_power(&Graph::complete(2), 2).unwrap();
        assert_eq!(minimax_mono_clique(&k4, 1).unwrap().value, 4);
        assert_eq!(minimax_mono_clique(&Graph::empty(3), 2).unwrap().value, 1);
    }

    #[test]
    fn trivial_decision_threshold() {
        let w = trivial_mc_decision(4, 2, 3).unwrap();
        assert!(w.color_of.iter().all(|&c| c < 2));
        assert!(trivial_mc_decision(4, 2, 2).is_none());
        assert!(trivial_mc_decision(1, 1, 2).is_some());
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        (0u32..1 << pairs.len())
            .map(|m| {
                let e = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                Graph::new(n, e).unwrap()
            })
            .collect()
    }

    #[test]
    fn ramsey_bound_holds_everywhere() {
        use rand::{Rng, SeedableRng};
        for n in 1..=6 {
            for g in all_graphs(n) {
                assert!(invariants(&g).unwrap().ramsey_ok, "{g:?}");
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let edges = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            assert!(invariants(&g).unwrap().ramsey_ok, "{g:?}");
        }
    }

    #[test]
    fn chromatic_lexi_squares() {
        use rand::{Rng, SeedableRng};
        let mut graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..10 {
            let edges = (0..5usize)
                .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            graphs.push(Graph::new(5, edges).unwrap());
        }
        for g in graphs {
            let chi = invariants(&g).unwrap().chi;
            let sq = lex_product(&g, &g);
            assert!(k_colorable(&sq, chi * chi).unwrap().is_some(), "{g:?}");
        }
    }

    #[test]
    fn monochromatic_lexi_squares() {
        for n in 1..=4 {
            for g in all_graphs(n) {
                for k in 1..=2usize {
                    let m = minimax_mono_clique(&g, k).unwrap().value;
                    let sq = lex_product(&g, &g);
                    let m2 = minimax_mono_clique(&sq, k).unwrap().value;
                    assert!(m2 >= m * m, "{g:?} k={k}: {m2} < {m}^2");
                }
            }
        }
    }

    #[test]
    fn chi_is_tight() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                let chi = invariants(&g).unwrap().chi;
                assert!(k_colorable(&g, chi).unwrap().is_some());
                if chi > 1 {
                    assert!(k_colorable(&g, chi - 1).unwrap().is_none(), "{g:?}");
                }
            }
        }
    }
}
