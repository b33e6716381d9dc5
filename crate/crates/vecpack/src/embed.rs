//! Packing-dimension embeddings. `bouquet_embedding` maps a
//! sunflower-bouquet into [0,1]^(2 + 2kΔ + (kΔ)²) so that the ℓ∞ norm of
//! a subset sum is at most 1 exactly when the subset belongs to the
//! bouquet's downward closure (augmented with small sets off the core).
//! `full_embedding` composes bouquet embeddings over the greedy
//! decomposition to realize the downward closure of an arbitrary simple
//! non-trivial family.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::setsys::{self, SetSystem};
use crate::Error;

/// Element-indexed embedding into [0,1]^dim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub dim: usize,
    /// map[v] is the image of element v.
    pub map: Vec<Vec<Rational>>,
}

impl Embedding {
    pub fn universe(&self) -> usize {
        self.map.len()
    }

    /// Coordinate-wise sum of the images of the elements of `set`.
    pub fn image_sum(&self, set: &[usize]) -> Vec<Rational> {
        let mut sum = vec![Rational::zero(); self.dim];
        for &v in set {
            for (acc, c) in sum.iter_mut().zip(&self.map[v]) {
                *acc += c;
            }
        }
        sum
    }

    /// ℓ∞ norm of the image sum.
    pub fn norm_inf(&self, set: &[usize]) -> Rational {
        self.image_sum(set)
            .into_iter()
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn validate_range(&self) -> Result<(), Error> {
        for row in &self.map {
            if row.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: row.len(),
                });
            }
            for c in row {
                if !c.in_unit_interval() {
                    return Err(Error::CoordinateOutOfRange(c.canonical_string()));
                }
            }
        }
        Ok(())
    }
}

/// Concatenation of two embeddings over the same element domain. The
/// result realizes the intersection of the realized families.
pub fn concat(a: &Embedding, b: &Embedding) -> Result<Embedding, Error> {
    if a.universe() != b.universe() {
        return Err(Error::DomainMismatch {
            left: a.universe(),
            right: b.universe(),
        });
    }
    let map = a
        .map
        .iter()
        .zip(&b.map)
        .map(|(x, y)| x.iter().chain(y).cloned().collect())
        .collect();
    Ok(Embedding {
        dim: a.dim + b.dim,
        map,
    })
}

/// The sunflower-bouquet embedding f = (f0, g, g'), dimension exactly
/// 2 + 2kΔ + (kΔ)². `k` and `delta` may exceed the family's actual
/// maximums; every set must have at most k elements and every element
/// degree at most delta, with k >= 2.
pub fn bouquet_embedding(
    sys: &SetSystem,
    core: &BTreeSet<usize>,
    k: usize,
    delta: usize,
) -> Result<Embedding, Error> {
    if k < 2 {
        return Err(Error::KTooSmall(k));
    }
    if !setsys::is_sunflower_bouquet(sys, core)? {
        return Err(Error::NotBouquet);
    }
    let analysis = setsys::analyze(sys);
    if analysis.k > k || analysis.delta > delta || delta == 0 {
        return Err(Error::Schema(format!(
            "family has k={} delta={}, exceeds declared k={k} delta={delta}",
            analysis.k, analysis.delta
        )));
    }

    let n = sys.universe;
    let cores: Vec<usize> = core.iter().copied().collect();
    let m = cores.len();
    let core_index = |v: usize| cores.iter().position(|&u| u == v);

    // V_i: petals of the i-th sunflower; V_0: elements in no set, off core.
    let mut petal_of = vec![None::<usize>; n];
    for (set, u_i) in sys.sets.iter().map(|s| {
        let u = *s.iter().find(|&&e| core.contains(&e)).expect("bouquet");
        (s, u)
    }) {
        let i = core_index(u_i).unwrap();
        for &v in set {
            if v != u_i {
                petal_of[v] = Some(i);
            }
        }
    }
    let petals: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..n).filter(|&v| petal_of[v] == Some(i)).collect())
        .collect();

    let kd = k * delta;
    let k_i = k as i64;

    // alpha_i = 1 - 1/k + i/(k(m+1)), i = 1..m: distinct rationals in (1-1/k, 1)
    let alpha: Vec<Rational> = (1..=m as i64)
        .map(|i| {
            Rational::one() - Rational::new(1, k_i) + Rational::new(i, k_i * (m as i64 + 1))
        })
        .collect();

    let inv_k = Rational::new(1, k_i);
    let mut map = vec![Vec::with_capacity(2 + 2 * kd + kd * kd); n];

    // f0: (1, 1/k) on the core, (1/k, 1/k) on uncovered elements, (0, 1/k) on petals
    for v in 0..n {
        let first = if core.contains(&v) {
            Rational::one()
        } else if petal_of[v].is_none() {
            inv_k.clone()
        } else {
            Rational::zero()
        };
        map[v].push(first);
        map[v].push(inv_k.clone());
    }

    // g = (f_1, ..., f_{kΔ}): kills sets crossing between sunflowers.
    // Petal lists are padded to length kΔ by repeating the largest petal.
    let padded: Vec<Vec<usize>> = petals
        .iter()
        .map(|p| {
            let mut row = p.clone();
            if let Some(&last) = row.last() {
                while row.len() < kd {
                    row.push(last);
                }
            }
            row
        })
        .collect();
    for l in 0..kd {
        for v in 0..n {
            let (x, y) = if let Some(i) = core_index(v) {
                // f_l(u_i) = (alpha_i, 2 - 1/k - alpha_i)
                (
                    alpha[i].clone(),
                    Rational::from_int(2) - inv_k.clone() - alpha[i].clone(),
                )
            } else if let Some(i) = petal_of[v] {
                if padded[i].get(l) == Some(&v) {
                    // f_l(v_{i,l}) = (1 - alpha_i, alpha_i + 1/k - 1)
                    (
                        Rational::one() - alpha[i].clone(),
                        alpha[i].clone() + inv_k.clone() - Rational::one(),
                    )
                } else {
                    (Rational::zero(), Rational::zero())
                }
            } else {
                (Rational::zero(), Rational::zero())
            };
            map[v].push(x);
            map[v].push(y);
        }
    }

    // g' = (g_1, ..., g_{(kΔ)²}): pins down intra-sunflower sets via the
    // minimal violators {u_i, x, y}. Pair lists are padded by repetition;
    // sunflowers with fewer than two petals contribute zero columns.
    let pair_lists: Vec<Vec<(usize, usize)>> = petals
        .iter()
        .map(|p| {
            let mut pairs = Vec::new();
            for a in 0..p.len() {
                for b in a + 1..p.len() {
                    pairs.push((p[a], p[b]));
                }
            }
            let mut row = pairs.clone();
            if let Some(&last) = pairs.last() {
                while row.len() < kd * kd {
                    row.push(last);
                }
            }
            row
        })
        .collect();
    let core_value = Rational::one() - Rational::new(2, k_i) + Rational::new(1, k_i * k_i);
    for l in 0..kd * kd {
        let mut column = vec![Rational::zero(); n];
        for i in 0..m {
            if let Some(&(x, y)) = pair_lists[i].get(l) {
                let triple = {
                    let mut t = vec![cores[i], x, y];
                    t.sort_unstable();
                    t
                };
                if !setsys::in_downward_closure(sys, &triple, None, None)? {
                    column[cores[i]] = core_value.clone();
                    column[x] = inv_k.clone();
                    column[y] = inv_k.clone();
                }
            }
        }
        for (v, c) in column.into_iter().enumerate() {
            map[v].push(c);
        }
    }

    let emb = Embedding {
        dim: 2 + 2 * kd + kd * kd,
        map,
    };
    emb.validate_range()?;
    Ok(emb)
}

/// Embedding realizing the downward closure of a simple non-trivial
/// family: greedy bouquet decomposition, one bouquet embedding per part,
/// concatenated. Uses k = max(2, max set size) and the actual max
/// degree.
pub fn full_embedding(sys: &SetSystem) -> Result<Embedding, Error> {
    let analysis = setsys::analyze(sys);
    let k = analysis.k.max(2);
    let delta = analysis.delta.max(1);
    let decomposition = setsys::decompose(sys)?;
    let mut acc: Option<Embedding> = None;
    for part in &decomposition.parts {
        let e = bouquet_embedding(&part.family, &part.core, k, delta)?;
        acc = Some(match acc {
            None => e,
            Some(prev) => concat(&prev, &e)?,
        });
    }
    acc.ok_or(Error::TrivialFamily)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub set: Vec<usize>,
    pub expected_member: bool,
    pub norm: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub counterexamples: Vec<Counterexample>,
    pub sets_checked: usize,
}

/// Exhaustively checks `norm(T) <= 1 iff T in the target family` over
/// every subset T with |T| <= size_cap. The target family is the
/// downward closure of `sys`, augmented per `augment_core` when
/// verifying a single bouquet embedding against its corollary family.
/// Checking up to k+1 is complete because coordinates are non-negative
/// and every (k+1)-set already exceeds norm 1.
pub fn verify_embedding(
    sys: &SetSystem,
    emb: &Embedding,
    size_cap: usize,
    augment_core: Option<(&BTreeSet<usize>, usize)>,
    force: bool,
) -> Result<VerificationReport, Error> {
    let k = setsys::analyze(sys).k.max(2);
    let needed = (k + 1).min(sys.universe);
    if size_cap < needed && !force {
        return Err(Error::SizeCapTooSmall {
            cap: size_cap,
            needed,
        });
    }
    if emb.universe() != sys.universe {
        return Err(Error::DomainMismatch {
            left: emb.universe(),
            right: sys.universe,
        });
    }
    let n = sys.universe;
    let mut counterexamples = Vec::new();
    let mut sets_checked = 0usize;
    let mut subset = Vec::new();
    enumerate_subsets(n, size_cap, &mut subset, &mut |t| {
        sets_checked += 1;
        let member = match augment_core {
            Some((core, cap)) => setsys::in_downward_closure(sys, t, Some(core), Some(cap))?,
            None => setsys::in_downward_closure(sys, t, None, None)?,
        };
        let norm = emb.norm_inf(t);
        if (norm <= 1) != member {
            counterexamples.push(Counterexample {
                set: t.to_vec(),
                expected_member: member,
                norm,
            });
        }
        Ok(())
    })?;
    counterexamples.sort_by(|a, b| a.set.cmp(&b.set));
    Ok(VerificationReport {
        ok: counterexamples.is_empty(),
        counterexamples,
        sets_checked,
    })
}

fn enumerate_subsets(
    n: usize,
    max_size: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<(), Error>,
) -> Result<(), Error> {
    visit(current)?;
    if current.len() == max_size {
        return Ok(());
    }
    let start = current.last().map_or(0, |&v| v + 1);
    for v in start..n {
        current.push(v);
        enumerate_subsets(n, max_size, current, visit)?;
        current.pop();
    }
    Ok(())
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
    fn f0_values_on_singleton_bouquet() {
        let s = sys(1, &[&[0]]);
        let e = bouquet_embedding(&s, &core(&[0]), 2, 1).unwrap();
        assert_eq!(e.map[0][0], Rational::one());
        assert_eq!(e.map[0][1], Rational::new(1, 2));
        assert!(e.norm_inf(&[0]) <= 1);
    }

    #[test]
    fn uncovered_element_gets_one_over_k() {
        let s = sys(3, &[&[0, 1]]);
        let e = bouquet_embedding(&s, &core(&[0]), 2, 1).unwrap();
        // element 2 is in no set: f0 = (1/k, 1/k)
        assert_eq!(e.map[2][0], Rational::new(1, 2));
        assert_eq!(e.map[2][1], Rational::new(1, 2));
    }

    #[test]
    fn bouquet_dimension_and_verification() {
        let s = sys(7, &[&[0, 3], &[0, 4], &[1, 5]]);
        let u = core(&[0, 1]);
        let e = bouquet_embedding(&s, &u, 2, 2).unwrap();
        assert_eq!(e.dim, 2 + 8 + 16);
        let rep = verify_embedding(&s, &e, 3, Some((&u, 2)), false).unwrap();
        assert!(rep.ok, "counterexamples: {:?}", rep.counterexamples);
    }

    #[test]
    fn dropping_g_and_gprime_breaks_cross_sunflower_sets() {
        // {0,3} and {1,4} are different sunflowers; f0 alone accepts {0, 4}
        let s = sys(6, &[&[0, 3], &[1, 4]]);
        let u = core(&[0, 1]);
        let full = bouquet_embedding(&s, &u, 2, 1).unwrap();
        let f0_only = Embedding {
            dim: 2,
            map: full.map.iter().map(|row| row[..2].to_vec()).collect(),
        };
        let rep = verify_embedding(&s, &f0_only, 3, Some((&u, 2)), false).unwrap();
        assert!(!rep.ok);
        assert!(rep
            .counterexamples
            .iter()
            .any(|c| !c.expected_member && c.norm <= 1));
    }

    #[test]
    fn all_zero_embedding_is_caught() {
        let s = sys(2, &[&[0]]);
        let zero = Embedding {
            dim: 1,
            map: vec![vec![Rational::zero()]; 2],
        };
        let rep = verify_embedding(&s, &zero, 2, None, false).unwrap();
        assert!(!rep.ok);
        assert!(rep.counterexamples.iter().any(|c| c.set == vec![0, 1]));
    }

    #[test]
    fn concat_norm_is_max_of_parts() {
        let s = sys(4, &[&[0, 1], &[2, 3]]);
        let d = setsys::decompose(&s).unwrap();
        let e1 = bouquet_embedding(&d.parts[0].family, &d.parts[0].core, 2, 1).unwrap();
        let e2 = bouquet_embedding(&d.parts[1].family, &d.parts[1].core, 2, 1).unwrap();
        let c = concat(&e1, &e2).unwrap();
        assert_eq!(c.dim, e1.dim + e2.dim);
        for t in [vec![0], vec![0, 1], vec![1, 2], vec![0, 1, 2, 3]] {
            let expected = e1.norm_inf(&t).max(e2.norm_inf(&t));
            assert_eq!(c.norm_inf(&t), expected);
        }
    }

    #[test]
    fn concat_rejects_domain_mismatch() {
        let a = Embedding {
            dim: 1,
            map: vec![vec![Rational::zero()]; 2],
        };
        let b = Embedding {
            dim: 1,
            map: vec![vec![Rational::zero()]; 3],
        };
        assert!(concat(&a, &b).is_err());
    }

    #[test]
    fn full_embedding_exhaustive_small_families() {
        for fam in [
            sys(4, &[&[0, 1], &[2, 3]]),
            sys(3, &[&[0, 1], &[1, 2], &[0, 2]]),
            sys(6, &[&[0, 1, 2], &[0, 3], &[3, 4], &[2, 5]]),
        ] {
            let e = full_embedding(&fam).unwrap();
            // full sweep: every subset of the universe
            let rep = verify_embedding(&fam, &e, fam.universe, None, false).unwrap();
            assert!(rep.ok, "family {fam:?}: {:?}", rep.counterexamples);
        }
    }

    #[test]
    fn full_embedding_rejects_non_simple() {
        assert!(full_embedding(&sys(3, &[&[0, 1, 2], &[0, 1]])).is_err());
    }

    #[test]
    fn norm_monotone_in_subset() {
        let fam = sys(6, &[&[0, 1, 2], &[0, 3], &[3, 4], &[2, 5]]);
        let e = full_embedding(&fam).unwrap();
        for t_mask in 0u32..(1 << 6) {
            for drop in 0..6 {
                if t_mask & (1 << drop) == 0 {
                    continue;
                }
                let big: Vec<usize> = (0..6).filter(|&v| t_mask & (1 << v) != 0).collect();
                let small: Vec<usize> = big.iter().copied().filter(|&v| v != drop).collect();
                assert!(e.norm_inf(&small) <= e.norm_inf(&big));
            }
        }
    }
}
