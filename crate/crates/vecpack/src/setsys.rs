//! Set-system analysis: simplicity and degree bounds, downward-closure
//! membership, sunflower-bouquet recognition, and the conflict-graph
//! greedy decomposition into bouquet parts.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A family of distinct sets over the universe {0, .., universe-1}.
/// Sets are stored sorted with distinct elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSystem {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetSystem {
    pub fn new(universe: usize, mut sets: Vec<Vec<usize>>) -> Result<Self, Error> {
        for s in sets.iter_mut() {
            s.sort_unstable();
            s.dedup();
            if let Some(&e) = s.iter().find(|&&e| e >= universe) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    universe,
                });
            }
        }
        sets.sort();
        let before = sets.len();
        sets.dedup();
        if sets.len() != before {
            return Err(Error::Schema("duplicate sets in family".into()));
        }
        Ok(SetSystem { universe, sets })
    }

    pub fn set_masks(&self) -> Vec<u64> {
        self.sets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &e| m | (1 << e)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub simple: bool,
    pub k: usize,
    pub delta: usize,
    pub nontrivial: bool,
    pub downward_closed: bool,
}

/// Simplicity, max cardinality k, max element degree delta, coverage.
pub fn analyze(sys: &SetSystem) -> Analysis {
    let masks = sys.set_masks();
    let mut simple = true;
    'outer: for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if (masks[i] & masks[j]).count_ones() > 1 {
                simple = false;
                break 'outer;
            }
        }
    }
    let k = sys.sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut degree = vec![0usize; sys.universe];
    for s in &sys.sets {
        for &e in s {
            degree[e] += 1;
        }
    }
    let delta = degree.iter().copied().max().unwrap_or(0);
    let nontrivial = degree.iter().all(|&d| d > 0) && sys.universe > 0;
    let set_index: BTreeSet<&Vec<usize>> = sys.sets.iter().collect();
    let downward_closed = sys.sets.iter().all(|s| {
        // dropping any single element must stay in the family
        (0..s.len()).all(|i| {
            let mut t = s.clone();
            t.remove(i);
            set_index.contains(&t)
        })
    });
    Analysis {
        simple,
        k,
        delta,
        nontrivial,
        downward_closed,
    }
}

/// Membership of T in the downward closure of the family, optionally
/// augmented by all sets of size <= size_cap avoiding `excluded_core`.
pub fn in_downward_closure(
    sys: &SetSystem,
    t: &[usize],
    excluded_core: Option<&BTreeSet<usize>>,
    size_cap: Option<usize>,
) -> Result<bool, Error> {
    if let Some(&e) = t.iter().find(|&&e| e >= sys.universe) {
        return Err(Error::ElementOutOfRange {
            element: e,
            universe: sys.universe,
        });
    }
    let t_mask: u64 = t.iter().fold(0, |m, &e| m | (1 << e));
    if sys
        .set_masks()
        .iter()
        .any(|&s| t_mask & !s == 0)
    {
        return Ok(true);
    }
    if let (Some(core), Some(cap)) = (excluded_core, size_cap) {
        let core_mask: u64 = core.iter().fold(0, |m, &e| m | (1 << e));
        if t_mask & core_mask == 0 && t_mask.count_ones() as usize <= cap {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Both sunflower-bouquet axioms with respect to core U: every set meets
/// U exactly once, intersecting sets share exactly their core element,
/// and every core element is covered.
pub fn is_sunflower_bouquet(sys: &SetSystem, core: &BTreeSet<usize>) -> Result<bool, Error> {
    if core.is_empty() {
        return Err(Error::EmptyCore);
    }
    if let Some(&e) = core.iter().find(|&&e| e >= sys.universe) {
        return Err(Error::ElementOutOfRange {
            element: e,
            universe: sys.universe,
        });
    }
    let core_mask: u64 = core.iter().fold(0, |m, &e| m | (1 << e));
    let masks = sys.set_masks();
    for &s in &masks {
        if (s & core_mask).count_ones() != 1 {
            return Ok(false);
        }
    }
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            let inter = masks[i] & masks[j];
            if inter != 0 {
                let u1 = masks[i] & core_mask;
                let u2 = masks[j] & core_mask;
                if u1 != u2 || inter != u1 {
                    return Ok(false);
                }
            }
        }
    }
    for &u in core {
        if !masks.iter().any(|&s| s & (1 << u) != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BouquetPart {
    pub core: BTreeSet<usize>,
    /// Sets of the original family meeting this core.
    pub family: SetSystem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BouquetDecomposition {
    pub parts: Vec<BouquetPart>,
    pub colors_used: usize,
}

/// Decomposes a simple non-trivial family into sunflower-bouquet parts
/// via greedy coloring of the conflict graph (elements u, v conflict
/// when sets through them intersect). Greedy order is ascending element
/// index.
pub fn decompose(sys: &SetSystem) -> Result<BouquetDecomposition, Error> {
    let analysis = analyze(sys);
    if !analysis.simple {
        return Err(Error::NotSimple);
    }
    if !analysis.nontrivial {
        return Err(Error::TrivialFamily);
    }
    let k = analysis.k.max(2);
    let delta = analysis.delta;

    let masks = sys.set_masks();
    let n = sys.universe;
    // conflict graph over elements
    let mut adj = vec![0u64; n];
    for i in 0..masks.len() {
        for j in 0..masks.len() {
            if masks[i] & masks[j] != 0 {
                // every u in set i conflicts with every v in set j
                let mut a = masks[i];
                while a != 0 {
                    let u = a.trailing_zeros() as usize;
                    a &= a - 1;
                    adj[u] |= masks[j] & !(1 << u);
                }
            }
        }
    }
    // greedy coloring, ascending element index
    let mut color = vec![usize::MAX; n];
    let mut colors_used = 0;
    for v in 0..n {
        let mut used = vec![false; n + 1];
        let mut a = adj[v];
        while a != 0 {
            let u = a.trailing_zeros() as usize;
            a &= a - 1;
            if color[u] != usize::MAX {
                used[color[u]] = true;
            }
        }
        let c = used.iter().position(|&u| !u).unwrap();
        color[v] = c;
        colors_used = colors_used.max(c + 1);
    }

    let bound = k * (k - 1) * delta * delta + 1;
    debug_assert!(colors_used <= bound, "greedy exceeded degree bound");

    let mut parts = Vec::new();
    for c in 0..colors_used {
        let core: BTreeSet<usize> = (0..n).filter(|&v| color[v] == c).collect();
        let core_mask: u64 = core.iter().fold(0, |m, &e| m | (1 << e));
        let family_sets: Vec<Vec<usize>> = sys
            .sets
            .iter()
            .zip(&masks)
            .filter(|(_, &m)| m & core_mask != 0)
            .map(|(s, _)| s.clone())
            .collect();
        let family = SetSystem::new(sys.universe, family_sets)?;
        if !is_sunflower_bouquet(&family, &core)? {
            return Err(Error::Internal(format!(
                "decomposition part {c} is not a sunflower-bouquet"
            )));
        }
        parts.push(BouquetPart { core, family });
    }
    Ok(BouquetDecomposition { parts, colors_used })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(universe: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::new(universe, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    fn core(elems: &[usize]) -> BTreeSet<usize> {
        elems.iter().copied().collect()
    }

    #[test]
    fn analyze_counts() {
        let a = analyze(&sys(3, &[&[0, 1], &[1, 2]]));
        assert!(a.simple);
        assert_eq!(a.k, 2);
        assert_eq!(a.delta, 2);
        assert!(a.nontrivial);

        let a = analyze(&sys(3, &[&[0, 1, 2], &[0, 1]]));
        assert!(!a.simple);

        let a = analyze(&sys(1, &[]));
        assert!(!a.nontrivial);
    }

    #[test]
    fn downward_closure_membership() {
        let s = sys(4, &[&[0, 1, 2]]);
        assert!(in_downward_closure(&s, &[0, 2], None, None).unwrap());
        let s = sys(4, &[&[0, 1], &[2, 3]]);
        assert!(!in_downward_closure(&s, &[1, 2], None, None).unwrap());
        // the augmented family of the corollary: sets avoiding the core
        let s = sys(5, &[&[0, 1]]);
        let u = core(&[0]);
        assert!(in_downward_closure(&s, &[2, 3], Some(&u), Some(2)).unwrap());
        assert!(!in_downward_closure(&s, &[0, 3], Some(&u), Some(2)).unwrap());
        assert!(in_downward_closure(&s, &[5], None, None).is_err());
    }

    #[test]
    fn bouquet_recognition() {
        assert!(is_sunflower_bouquet(&sys(7, &[&[0, 3], &[0, 4], &[1, 5]]), &core(&[0, 1])).unwrap());
        // sets meet outside the core
        assert!(!is_sunflower_bouquet(&sys(5, &[&[0, 3], &[1, 3]]), &core(&[0, 1])).unwrap());
        // no set through core element
        assert!(!is_sunflower_bouquet(&sys(5, &[&[2, 3]]), &core(&[0])).unwrap());
        assert!(is_sunflower_bouquet(&sys(2, &[&[0]]), &core(&[])).is_err());
    }

    #[test]
    fn bouquet_implies_simple() {
        let fam = sys(7, &[&[0, 3], &[0, 4], &[1, 5]]);
        assert!(is_sunflower_bouquet(&fam, &core(&[0, 1])).unwrap());
        assert!(analyze(&fam).simple);
    }

    #[test]
    fn decompose_two_disjoint_pairs() {
        let d = decompose(&sys(4, &[&[0, 1], &[2, 3]])).unwrap();
        // greedy in ascending order: {0,2} then {1,3}
        assert_eq!(d.colors_used, 2);
        assert_eq!(d.parts[0].core, core(&[0, 2]));
        assert_eq!(d.parts[1].core, core(&[1, 3]));
        for p in &d.parts {
            assert!(is_sunflower_bouquet(&p.family, &p.core).unwrap());
        }
    }

    #[test]
    fn decompose_single_pair() {
        let d = decompose(&sys(2, &[&[0, 1]])).unwrap();
        assert_eq!(d.colors_used, 2);
        assert_eq!(d.parts[0].core, core(&[0]));
        assert_eq!(d.parts[1].core, core(&[1]));
    }

    #[test]
    fn decompose_rejects_non_simple() {
        assert!(matches!(
            decompose(&sys(3, &[&[0, 1, 2], &[0, 1]])),
            Err(Error::NotSimple)
        ));
        assert!(matches!(
            decompose(&sys(3, &[&[0, 1]])),
            Err(Error::TrivialFamily)
        ));
    }

    #[test]
    fn decompose_closure_identity() {
        // intersection of the part closures equals the closure of the family,
        // checked on every subset of size <= k+1
        for fam in [
            sys(4, &[&[0, 1], &[2, 3]]),
            sys(3, &[&[0, 1], &[1, 2], &[0, 2]]),
            sys(6, &[&[0, 1, 2], &[0, 3], &[3, 4], &[2, 5]]),
        ] {
            let a = analyze(&fam);
            let k = a.k.max(2);
            let d = decompose(&fam).unwrap();
            for t_mask in 0u64..(1 << fam.universe) {
                if (t_mask.count_ones() as usize) > k + 1 {
                    continue;
                }
                let t: Vec<usize> =
                    (0..fam.universe).filter(|&e| t_mask & (1 << e) != 0).collect();
                let in_family = in_downward_closure(&fam, &t, None, None).unwrap();
                let in_all_parts = d.parts.iter().all(|p| {
                    in_downward_closure(&p.family, &t, Some(&p.core), Some(k)).unwrap()
                });
                assert_eq!(in_family, in_all_parts, "T = {t:?}");
            }
        }
    }
}
