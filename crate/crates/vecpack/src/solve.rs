//! Exact and heuristic solvers for VBP, VS, VBC, and set cover. All
//! exact searches are capped and report whether they ran to completion.

use serde::{Deserialize, Serialize};

use crate::instance::{
    evaluate, Assignment, Norm, ObjectiveValue, PackingInstance, ProblemKind,
};
use crate::rational::Rational;
use crate::setsys::SetSystem;
use crate::Error;

pub const VBP_EXACT_CAP: usize = 15;
pub const VS_EXACT_CAP: usize = 14;
pub const VBC_EXACT_CAP: usize = 12;
pub const SETCOVER_EXACT_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult<O, W> {
    pub optimum: O,
    pub witness: W,
    pub exhaustive: bool,
    pub nodes_explored: u64,
}

/// Relabels parts by first occurrence so witnesses are canonical.
fn canonicalize(part_of: &[usize]) -> Assignment {
    let mut remap: Vec<Option<usize>> = vec![None; part_of.len().max(1)];
    let mut next = 0;
    let out = part_of
        .iter()
        .map(|&p| {
            *remap[p].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    Assignment::new(out)
}

fn require_kind(instance: &PackingInstance, kind: ProblemKind) -> Result<(), Error> {
    if instance.kind == kind {
        Ok(())
    } else {
        Err(Error::Schema(format!(
            "expected a {kind:?} instance, got {:?}",
            instance.kind
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VbpMode {
    Exact,
    /// First-Fit over the given job order (identity when None).
    FirstFit(Option<Vec<usize>>),
}

/// Minimum bin count (exact subset DP) or a First-Fit packing.
pub fn vbp(
    instance: &PackingInstance,
    mode: VbpMode,
) -> Result<SolveResult<usize, Assignment>, Error> {
    require_kind(instance, ProblemKind::Vbp)?;
    let n = instance.n();
    match mode {
        VbpMode::FirstFit(order) => {
            let order = match order {
                Some(o) => {
                    let mut seen = vec![false; n];
                    for &j in &o {
                        if j >= n || seen[j] {
                            return Err(Error::Schema(format!("bad job order: {o:?}")));
                        }
                        seen[j] = true;
                    }
                    if o.len() != n {
                        return Err(Error::Schema(format!("bad job order: {o:?}")));
                    }
                    o
                }
                None => (0..n).collect(),
            };
            let mut bins: Vec<Vec<Rational>> = Vec::new();
            let mut part_of = vec![0usize; n];
            let mut nodes = 0u64;
            for &j in &order {
                let job = &instance.jobs[j];
                let slot = bins.iter().position(|bin| {
                    bin.iter()
                        .zip(&job.coords)
                        .all(|(l, c)| l.clone() + c.clone() <= 1)
                });
                nodes += 1;
                let b = match slot {
                    Some(b) => b,
                    None => {
                        bins.push(vec![Rational::zero(); instance.dim]);
                        bins.len() - 1
                    }
                };
                for (l, c) in bins[b].iter_mut().zip(&job.coords) {
                    *l += c;
                }
                part_of[j] = b;
            }
            let witness = canonicalize(&part_of);
            let report = evaluate(instance, &witness, Norm::Infinity)?;
            if !report.feasible {
                return Err(Error::Internal("first-fit packing infeasible".into()));
            }
            Ok(SolveResult {
                optimum: bins.len().max(1).min(if n == 0 { 0 } else { bins.len() }),
                witness,
                exhaustive: false,
                nodes_explored: nodes,
            })
        }
        VbpMode::Exact => {
            if n > VBP_EXACT_CAP {
                return Err(Error::CapExceeded(format!(
                    "exact VBP cap {VBP_EXACT_CAP} exceeded by n={n}"
                )));
            }
            if n == 0 {
                return Ok(SolveResult {
                    optimum: 0,
                    witness: Assignment::new(vec![]),
                    exhaustive: true,
                    nodes_explored: 0,
                });
            }
            let full = (1usize << n) - 1;
            let mut nodes = 0u64;
            // feasibility is downward-monotone in the job subset
            let mut feasible = vec![false; full + 1];
            feasible[0] = true;
            for mask in 1..=full {
                let low = mask.trailing_zeros() as usize;
                if !feasible[mask & (mask - 1)] && mask & (mask - 1) != 0 {
                    continue;
                }
                let mut sum = vec![Rational::zero(); instance.dim];
                let mut m = mask;
                let mut ok = true;
                while m != 0 {
                    let j = m.trailing_zeros() as usize;
                    m &= m - 1;
                    for (s, c) in sum.iter_mut().zip(&instance.jobs[j].coords) {
                        *s += c;
                    }
                }
                for s in &sum {
                    if !(s.clone() <= 1) {
                        ok = false;
                        break;
                    }
                }
                feasible[mask] = ok;
                let _ = low;
            }
            // single jobs must fit
            for j in 0..n {
                if !feasible[1 << j] {
                    return Err(Error::Schema(format!(
                        "job {j} alone exceeds the bin in some coordinate"
                    )));
                }
            }
            let mut dp = vec![u32::MAX; full + 1];
            let mut choice = vec![0usize; full + 1];
            dp[0] = 0;
            for mask in 1..=full {
                let low = 1usize << mask.trailing_zeros();
                // submasks of mask containing the lowest job
                let mut sub = mask;
                loop {
                    if sub & low != 0 && feasible[sub] {
                        nodes += 1;
                        let rest = dp[mask ^ sub];
                        if rest != u32::MAX && rest + 1 < dp[mask] {
                            dp[mask] = rest + 1;
                            choice[mask] = sub;
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & mask;
                }
            }
            let mut part_of = vec![0usize; n];
            let mut mask = full;
            let mut part = 0;
            while mask != 0 {
                let sub = choice[mask];
                let mut m = sub;
                while m != 0 {
                    let j = m.trailing_zeros() as usize;
                    m &= m - 1;
                    part_of[j] = part;
                }
                part += 1;
                mask ^= sub;
            }
            let witness = canonicalize(&part_of);
            let report = evaluate(instance, &witness, Norm::Infinity)?;
            if !report.feasible || witness.part_count() != dp[full] as usize {
                return Err(Error::Internal("VBP witness failed re-validation".into()));
            }
            Ok(SolveResult {
                optimum: dp[full] as usize,
                witness,
                exhaustive: true,
                nodes_explored: nodes,
            })
        }
    }
}

/// Naive partition-enumeration VBP oracle for cross-checking (n <= 10).
pub fn vbp_naive(instance: &PackingInstance) -> Result<usize, Error> {
    require_kind(instance, ProblemKind::Vbp)?;
    let n = instance.n();
    if n == 0 {
        return Ok(0);
    }
    if n > 10 {
        return Err(Error::CapExceeded("naive VBP oracle cap is 10".into()));
    }
    let mut best = usize::MAX;
    let mut part_of = vec![0usize; n];
    loop {
        let a = Assignment::new(part_of.clone());
        let r = evaluate(instance, &a, Norm::Infinity)?;
        if r.feasible {
            best = best.min(a.part_count());
        }
        if !next_rgs(&mut part_of, n) {
            break;
        }
    }
    if best == usize::MAX {
        return Err(Error::Schema("no feasible packing".into()));
    }
    Ok(best)
}

/// Full enumeration of all m^n machine assignments, no pruning.
pub fn vs_naive(instance: &PackingInstance, norm: Norm) -> Result<ObjectiveValue, Error> {
    require_kind(instance, ProblemKind::Vs)?;
    let n = instance.n();
    let m = instance
        .machines
        .ok_or_else(|| Error::Schema("VS needs machines".into()))?;
    let space = (m as u64).saturating_pow(n as u32);
    if space > 1 << 20 {
        return Err(Error::CapExceeded("naive VS oracle cap is 2^20".into()));
    }
    let mut part_of = vec![0usize; n];
    let mut best: Option<ObjectiveValue> = None;
    loop {
        let r = evaluate(instance, &Assignment::new(part_of.clone()), norm)?;
        let better = match &best {
            None => true,
            Some(b) => r.value.cmp_exact(b) == std::cmp::Ordering::Less,
        };
        if better {
            best = Some(r.value);
        }
        // odometer over [0, m)^n
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(best.expect("m >= 1, n >= 0 visited"));
            }
            pos -= 1;
            part_of[pos] += 1;
            if part_of[pos] < m {
                break;
            }
            part_of[pos] = 0;
        }
    }
}

/// Full enumeration of all subfamilies, no pruning.
pub fn setcover_naive(sys: &SetSystem) -> Result<usize, Error> {
    let s = sys.sets.len();
    if s > 16 {
        return Err(Error::CapExceeded("naive set cover oracle cap is 16 sets".into()));
    }
    let masks = sys.set_masks();
    let full: u64 = if sys.universe == 64 {
        u64::MAX
    } else {
        (1u64 << sys.universe) - 1
    };
    let mut best = usize::MAX;
    for pick in 0u64..(1 << s) {
        let mut covered = 0u64;
        for (i, &m) in masks.iter().enumerate() {
            if pick & (1 << i) != 0 {
                covered |= m;
            }
        }
        if covered == full {
            best = best.min(pick.count_ones() as usize);
        }
    }
    if best == usize::MAX {
        return Err(Error::NoCover);
    }
    Ok(best)
}

/// Advances a restricted growth string in place; false when exhausted.
fn next_rgs(s: &mut [usize], max_parts: usize) -> bool {
    let n = s.len();
    let mut pos = n;
    loop {
        if pos == 0 {
            return false;
        }
        pos -= 1;
        let ceiling = s[..pos]
            .iter()
            .copied()
            .max()
            .map_or(0, |m| (m + 1).min(max_parts - 1));
        if s[pos] < ceiling {
            s[pos] += 1;
            for v in s[pos + 1..].iter_mut() {
                *v = 0;
            }
            return true;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VsMode {
    Exact,
    ListGreedy,
}

/// Minimal VS objective over all machine assignments (branch-and-bound),
/// or the list-greedy schedule.
pub fn vs(
    instance: &PackingInstance,
    mode: VsMode,
    norm: Norm,
) -> Result<SolveResult<ObjectiveValue, Assignment>, Error> {
    require_kind(instance, ProblemKind::Vs)?;
    let n = instance.n();
    let m = instance.machines.ok_or_else(|| Error::Schema("VS needs machines".into()))?;
    match mode {
        VsMode::ListGreedy => {
            let mut part_of = vec![0usize; n];
            let mut loads = vec![vec![Rational::zero(); instance.dim]; m];
            for j in 0..n {
                let mut best: Option<(ObjectiveValue, usize)> = None;
                for i in 0..m {
                    for (l, c) in loads[i].iter_mut().zip(&instance.jobs[j].coords) {
                        *l += c;
                    }
                    let v = crate::instance::vs_objective(&loads, norm);
                    for (l, c) in loads[i].iter_mut().zip(&instance.jobs[j].coords) {
                        *l -= c;
                    }
                    let better = match &best {
                        None => true,
                        Some((bv, _)) => v.cmp_exact(bv) == std::cmp::Ordering::Less,
                    };
                    if better {
                        best = Some((v, i));
                    }
                }
                let (_, i) = best.expect("m >= 1");
                part_of[j] = i;
                let coords = instance.jobs[j].coords.clone();
                for (l, c) in loads[i].iter_mut().zip(&coords) {
                    *l += c;
                }
            }
            let witness = Assignment::new(part_of);
            let report = evaluate(instance, &witness, norm)?;
            Ok(SolveResult {
                optimum: report.value,
                witness,
                exhaustive: false,
                nodes_explored: (n * m) as u64,
            })
        }
        VsMode::Exact => {
            // past the job cap, allow only assignment spaces small enough
            // to enumerate outright (few machines)
            let space = (m as u64).saturating_pow(n as u32);
            if n > VS_EXACT_CAP && space > 1 << 22 {
                return Err(Error::CapExceeded(format!(
                    "exact VS cap {VS_EXACT_CAP} exceeded by n={n} with {m} machines"
                )));
            }
            let mut nodes = 0u64;
            let mut best_value: Option<ObjectiveValue> = None;
            let mut best_assign: Option<Vec<usize>> = None;
            let mut part_of = vec![0usize; n];
            let mut loads = vec![vec![Rational::zero(); instance.dim]; m];
            // machine-relabeling symmetry: job j may open machine
            // max(used)+1 at most
            fn rec(
                instance: &PackingInstance,
                norm: Norm,
                j: usize,
                used: usize,
                part_of: &mut Vec<usize>,
                loads: &mut Vec<Vec<Rational>>,
                best_value: &mut Option<ObjectiveValue>,
                best_assign: &mut Option<Vec<usize>>,
                nodes: &mut u64,
            ) {
                *nodes += 1;
                let m = loads.len();
                let partial = crate::instance::vs_objective(loads, norm);
                if let Some(bv) = best_value {
                    // loads only grow, the objective is monotone
                    if partial.cmp_exact(bv) != std::cmp::Ordering::Less {
                        return;
                    }
                }
                if j == instance.n() {
                    *best_value = Some(partial);
                    *best_assign = Some(part_of.clone());
                    return;
                }
                let top = m.min(used + 1);
                for i in 0..top {
                    part_of[j] = i;
                    for (l, c) in loads[i].iter_mut().zip(&instance.jobs[j].coords) {
                        *l += c;
                    }
                    rec(
                        instance,
                        norm,
                        j + 1,
                        used.max(i + 1),
                        part_of,
                        loads,
                        best_value,
                        best_assign,
                        nodes,
                    );
                    for (l, c) in loads[i].iter_mut().zip(&instance.jobs[j].coords) {
                        *l -= c;
                    }
                }
            }
            rec(
                instance,
                norm,
                0,
                0,
                &mut part_of,
                &mut loads,
                &mut best_value,
                &mut best_assign,
                &mut nodes,
            );
            let witness = Assignment::new(best_assign.expect("search visited a leaf"));
            let optimum = best_value.expect("search visited a leaf");
            let report = evaluate(instance, &witness, norm)?;
            if report.value.cmp_exact(&optimum) != std::cmp::Ordering::Equal {
                return Err(Error::Internal("VS witness failed re-validation".into()));
            }
            Ok(SolveResult {
                optimum,
                witness,
                exhaustive: true,
                nodes_explored: nodes,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VbcMode {
    Exact,
    Greedy,
}

/// Maximum number of parts each covering 1 in every coordinate; 0 when
/// even the whole job set fails to cover.
pub fn vbc(
    instance: &PackingInstance,
    mode: VbcMode,
) -> Result<SolveResult<usize, Assignment>, Error> {
    require_kind(instance, ProblemKind::Vbc)?;
    let n = instance.n();
    let total_covers = {
        let all = Assignment::new(vec![0; n]);
        n > 0 && evaluate(instance, &all, Norm::Infinity)?.feasible
    };
    match mode {
        VbcMode::Greedy => {
            let mut part_of = vec![0usize; n];
            let mut parts: Vec<Vec<Rational>> = vec![];
            let mut current = vec![Rational::zero(); instance.dim];
            let mut current_members: Vec<usize> = vec![];
            let mut closed = 0usize;
            let mut nodes = 0u64;
            for j in 0..n {
                nodes += 1;
                for (l, c) in current.iter_mut().zip(&instance.jobs[j].coords) {
                    *l += c;
                }
                current_members.push(j);
                if current.iter().all(|c| *c >= 1) {
                    for &i in &current_members {
                        part_of[i] = closed;
                    }
                    parts.push(std::mem::replace(
                        &mut current,
                        vec![Rational::zero(); instance.dim],
                    ));
                    current_members.clear();
                    closed += 1;
                }
            }
            // leftovers merge into the last closed part (or part 0)
            let dump = closed.saturating_sub(1);
            for &i in &current_members {
                part_of[i] = dump;
            }
            let witness = canonicalize(&part_of);
            let optimum = if closed == 0 { 0 } else { closed };
            let report = evaluate(instance, &witness, Norm::Infinity)?;
            if optimum > 0 && !report.feasible {
                return Err(Error::Internal("greedy covering infeasible".into()));
            }
            Ok(SolveResult {
                optimum,
                witness,
                exhaustive: false,
                nodes_explored: nodes,
            })
        }
        VbcMode::Exact => {
            if n > VBC_EXACT_CAP {
                return Err(Error::CapExceeded(format!(
                    "exact VBC cap {VBC_EXACT_CAP} exceeded by n={n}"
                )));
            }
            if !total_covers {
                return Ok(SolveResult {
                    optimum: 0,
                    witness: Assignment::new(vec![0; n]),
                    exhaustive: true,
                    nodes_explored: 0,
                });
            }
            // upper bound: each part needs every coordinate >= 1
            let mut ub = n;
            for k in 0..instance.dim {
                let mut total = Rational::zero();
                for job in &instance.jobs {
                    total += &job.coords[k];
                }
                let mut t = 0usize;
                while Rational::from_int(t as i64 + 1) <= total {
                    t += 1;
                }
                ub = ub.min(t);
            }
            let mut nodes = 0u64;
            for t in (1..=ub).rev() {
                let mut part_of = vec![usize::MAX; n];
                let mut loads = vec![vec![Rational::zero(); instance.dim]; t];
                if vbc_rec(instance, t, 0, &mut part_of, &mut loads, &mut nodes) {
                    let witness = canonicalize(&part_of);
                    let report = evaluate(instance, &witness, Norm::Infinity)?;
                    if !report.feasible || witness.part_count() != t {
                        return Err(Error::Internal(
                            "VBC witness failed re-validation".into(),
                        ));
                    }
                    return Ok(SolveResult {
                        optimum: t,
                        witness,
                        exhaustive: true,
                        nodes_explored: nodes,
                    });
                }
            }
            Err(Error::Internal(
                "whole set covers but t=1 search failed".into(),
            ))
        }
    }
}

fn vbc_rec(
    instance: &PackingInstance,
    t: usize,
    j: usize,
    part_of: &mut [usize],
    loads: &mut Vec<Vec<Rational>>,
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    let n = instance.n();
    if j == n {
        return loads
            .iter()
            .all(|part| part.iter().all(|c| *c >= 1));
    }
    // prune: remaining mass must fill every part's deficits
    for k in 0..instance.dim {
        let mut deficit = Rational::zero();
        for part in loads.iter() {
            if part[k] < 1 {
                deficit += &(Rational::one() - part[k].clone());
            }
        }
        let mut remaining = Rational::zero();
        for job in &instance.jobs[j..] {
            remaining += &job.coords[k];
        }
        if remaining < deficit {
            return false;
        }
    }
    let used = part_of[..j].iter().copied().max().map_or(0, |m| m + 1);
    let top = t.min(used + 1);
    for i in 0..top {
        part_of[j] = i;
        for (l, c) in loads[i].iter_mut().zip(&instance.jobs[j].coords) {
            *l += c;
        }
        if vbc_rec(instance, t, j + 1, part_of, loads, nodes) {
            return true;
        }
        for (l, c) in loads[i].iter_mut().zip(&instance.jobs[j].coords) {
            *l -= c;
        }
    }
    part_of[j] = usize::MAX;
    false
}

/// Naive partition-enumeration VBC oracle for cross-checking (n <= 8).
pub fn vbc_naive(instance: &PackingInstance) -> Result<usize, Error> {
    require_kind(instance, ProblemKind::Vbc)?;
    let n = instance.n();
    if n == 0 {
        return Ok(0);
    }
    if n > 8 {
        return Err(Error::CapExceeded("naive VBC oracle cap is 8".into()));
    }
    let mut best = 0usize;
    let mut part_of = vec![0usize; n];
    loop {
        let a = Assignment::new(part_of.clone());
        let r = evaluate(instance, &a, Norm::Infinity)?;
        if r.feasible {
            best = best.max(a.part_count());
        }
        if !next_rgs(&mut part_of, n) {
            break;
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetCoverMode {
    Exact,
    Greedy,
}

/// Minimum number of sets whose union is the universe. Exact via DP over
/// covered-element masks; greedy picks the set covering the most new
/// elements (lowest index on ties).
pub fn setcover(
    sys: &SetSystem,
    mode: SetCoverMode,
) -> Result<SolveResult<usize, Vec<usize>>, Error> {
    let n = sys.universe;
    if n > SETCOVER_EXACT_CAP {
        return Err(Error::CapExceeded(format!(
            "set cover cap {SETCOVER_EXACT_CAP} exceeded by universe {n}"
        )));
    }
    let masks = sys.set_masks();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let union = masks.iter().fold(0u64, |a, &m| a | m);
    if union != full {
        return Err(Error::NoCover);
    }
    match mode {
        SetCoverMode::Greedy => {
            let mut covered = 0u64;
            let mut picked = Vec::new();
            let mut nodes = 0u64;
            while covered != full {
                let (best, _) = masks
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (i, (m & !covered).count_ones()))
                    .max_by_key(|&(i, new)| (new, std::cmp::Reverse(i)))
                    .expect("non-empty family");
                nodes += 1;
                covered |= masks[best];
                picked.push(best);
            }
            picked.sort_unstable();
            Ok(SolveResult {
                optimum: picked.len(),
                witness: picked,
                exhaustive: false,
                nodes_explored: nodes,
            })
        }
        SetCoverMode::Exact => {
            let size = full as usize + 1;
            let mut dp = vec![u32::MAX; size];
            let mut choice = vec![usize::MAX; size];
            let mut parent = vec![0u64; size];
            dp[0] = 0;
            let mut nodes = 0u64;
            for mask in 0..size as u64 {
                if dp[mask as usize] == u32::MAX {
                    continue;
                }
                if mask == full {
                    break;
                }
                let low = (!mask & full).trailing_zeros() as usize;
                for (i, &m) in masks.iter().enumerate() {
                    if m & (1 << low) != 0 {
                        nodes += 1;
                        let next = (mask | m) as usize;
                        if dp[mask as usize] + 1 < dp[next] {
                            dp[next] = dp[mask as usize] + 1;
                            choice[next] = i;
                            parent[next] = mask;
                        }
                    }
                }
            }
            let mut picked = Vec::new();
            let mut mask = full;
            while mask != 0 {
                let i = choice[mask as usize];
                debug_assert_ne!(i, usize::MAX);
                picked.push(i);
                mask = parent[mask as usize];
            }
            picked.sort_unstable();
            picked.dedup();
            let covered = picked.iter().fold(0u64, |a, &i| a | masks[i]);
            if covered != full || picked.len() != dp[full as usize] as usize {
                return Err(Error::Internal("set cover witness invalid".into()));
            }
            Ok(SolveResult {
                optimum: dp[full as usize] as usize,
                witness: picked,
                exhaustive: true,
                nodes_explored: nodes,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::VectorJob;

    fn jobs(rows: &[&[(i64, i64)]]) -> Vec<VectorJob> {
        rows.iter()
            .map(|r| {
                VectorJob::new(r.iter().map(|&(p, q)| Rational::new(p, q)).collect()).unwrap()
            })
            .collect()
    }

    fn vbp_inst(rows: &[&[(i64, i64)]]) -> PackingInstance {
        let js = jobs(rows);
        let dim = js[0].dim();
        PackingInstance::new(ProblemKind::Vbp, dim, None, js).unwrap()
    }

    #[test]
    fn vbp_examples() {
        // all three share one bin: the load is exactly (1,1)
        let i = vbp_inst(&[&[(1, 2), (0, 1)], &[(1, 2), (0, 1)], &[(0, 1), (1, 1)]]);
        let r = vbp(&i, VbpMode::Exact).unwrap();
        assert_eq!(r.optimum, 1);
        assert!(r.exhaustive);
        assert_eq!(vbp_naive(&i).unwrap(), 1);
        // a third job that collides in the first coordinate forces 2 bins
        let i = vbp_inst(&[&[(1, 2), (0, 1)], &[(1, 2), (0, 1)], &[(1, 1), (0, 1)]]);
        let r = vbp(&i, VbpMode::Exact).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(vbp_naive(&i).unwrap(), 2);
        let i = vbp_inst(&[&[(1, 1)], &[(1, 1)], &[(1, 1)]]);
        assert_eq!(vbp(&i, VbpMode::Exact).unwrap().optimum, 3);
        assert_eq!(vbp(&i, VbpMode::FirstFit(None)).unwrap().optimum, 3);
    }

    #[test]
    fn first_fit_never_beats_exact_and_naive_agrees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0006);
        for round in 0..200 {
            let n = rng.gen_range(1..=7usize);
            let d = rng.gen_range(1..=3usize);
            let js: Vec<VectorJob> = (0..n)
                .map(|_| {
                    VectorJob::new(
                        (0..d).map(|_| Rational::new(rng.gen_range(0..=4), 4)).collect(),
                    )
                    .unwrap()
                })
                .collect();
            let i = PackingInstance::new(ProblemKind::Vbp, d, None, js).unwrap();
            let exact = vbp(&i, VbpMode::Exact).unwrap();
            let ff = vbp(&i, VbpMode::FirstFit(None)).unwrap();
            assert!(ff.optimum >= exact.optimum, "round {round}");
            if round < 60 {
                assert_eq!(vbp_naive(&i).unwrap(), exact.optimum, "round {round}");
            }
        }
    }

    fn vs_inst(rows: &[&[(i64, i64)]], m: usize) -> PackingInstance {
        let js = jobs(rows);
        let dim = js[0].dim();
        PackingInstance::new(ProblemKind::Vs, dim, Some(m), js).unwrap()
    }

    #[test]
    fn vs_examples() {
        let i = vs_inst(&[&[(1, 1)], &[(1, 1)], &[(1, 1)]], 2);
        let r = vs(&i, VsMode::Exact, Norm::Infinity).unwrap();
        assert_eq!(r.optimum, ObjectiveValue::Exact(Rational::from_int(2)));
        let i = vs_inst(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)]], 1);
        let r = vs(&i, VsMode::Exact, Norm::Finite(2)).unwrap();
        assert_eq!(r.optimum, ObjectiveValue::Exact(Rational::one()));
    }

    #[test]
    fn vs_exact_beats_greedy_and_is_permutation_invariant() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0007);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6usize);
            let d = rng.gen_range(1..=2usize);
            let m = rng.gen_range(1..=3usize);
            let js: Vec<VectorJob> = (0..n)
                .map(|_| {
                    VectorJob::new(
                        (0..d).map(|_| Rational::new(rng.gen_range(0..=3), 3)).collect(),
                    )
                    .unwrap()
                })
                .collect();
            let i = PackingInstance::new(ProblemKind::Vs, d, Some(m), js.clone()).unwrap();
            let exact = vs(&i, VsMode::Exact, Norm::Infinity).unwrap();
            let greedy = vs(&i, VsMode::ListGreedy, Norm::Infinity).unwrap();
            assert_ne!(
                greedy.optimum.cmp_exact(&exact.optimum),
                std::cmp::Ordering::Less
            );
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let pj: Vec<VectorJob> = perm.iter().map(|&j| js[j].clone()).collect();
            let pi = PackingInstance::new(ProblemKind::Vs, d, Some(m), pj).unwrap();
            let pexact = vs(&pi, VsMode::Exact, Norm::Infinity).unwrap();
            assert_eq!(
                pexact.optimum.cmp_exact(&exact.optimum),
                std::cmp::Ordering::Equal
            );
        }
    }

    fn vbc_inst(rows: &[&[(i64, i64)]]) -> PackingInstance {
        let js = jobs(rows);
        let dim = js[0].dim();
        PackingInstance::new(ProblemKind::Vbc, dim, None, js).unwrap()
    }

    #[test]
    fn vbc_examples() {
        let i = vbc_inst(&[&[(1, 1)], &[(1, 1)], &[(1, 1)], &[(1, 1)]]);
        assert_eq!(vbc(&i, VbcMode::Exact).unwrap().optimum, 4);
        let i = vbc_inst(&[&[(1, 2)], &[(1, 4)]]);
        assert_eq!(vbc(&i, VbcMode::Exact).unwrap().optimum, 0);
        // Fano incidence vectors: rows = points, coords = lines
        let lines: [[usize; 3]; 7] = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        let js: Vec<VectorJob> = (0..7)
            .map(|p| {
                VectorJob::from_bits(
                    &(0..7).map(|l| lines[l].contains(&p)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let i = PackingInstance::new(ProblemKind::Vbc, 7, None, js).unwrap();
        // a 2-part covering would be a proper 2-coloring of the Fano plane
        assert_eq!(vbc(&i, VbcMode::Exact).unwrap().optimum, 1);
    }

    #[test]
    fn vbc_greedy_bounds_and_naive_agrees_and_antitone() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0008);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6usize);
            let d = rng.gen_range(1..=2usize);
            let coords: Vec<Vec<Rational>> = (0..n)
                .map(|_| (0..d).map(|_| Rational::new(rng.gen_range(0..=4), 4)).collect())
                .collect();
            let js: Vec<VectorJob> =
                coords.iter().map(|c| VectorJob::new(c.clone()).unwrap()).collect();
            let i = PackingInstance::new(ProblemKind::Vbc, d, None, js).unwrap();
            let exact = vbc(&i, VbcMode::Exact).unwrap();
            let greedy = vbc(&i, VbcMode::Greedy).unwrap();
            assert!(greedy.optimum <= exact.optimum);
            assert_eq!(vbc_naive(&i).unwrap(), exact.optimum);
            // shrink one random coordinate: optimum must not increase
            let mut shrunk = coords.clone();
            let j = rng.gen_range(0..n);
            let k = rng.gen_range(0..d);
            shrunk[j][k] = shrunk[j][k].clone() * Rational::new(1, 2);
            let js: Vec<VectorJob> =
                shrunk.iter().map(|c| VectorJob::new(c.clone()).unwrap()).collect();
            let i2 = PackingInstance::new(ProblemKind::Vbc, d, None, js).unwrap();
            assert!(vbc(&i2, VbcMode::Exact).unwrap().optimum <= exact.optimum);
        }
    }

    fn sys(universe: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::new(universe, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn setcover_examples() {
        let s = sys(4, &[&[0, 1], &[2, 3], &[0, 2], &[1, 3]]);
        let r = setcover(&s, SetCoverMode::Exact).unwrap();
        assert_eq!(r.optimum, 2);
        let s = sys(3, &[&[0], &[1], &[2]]);
        assert_eq!(setcover(&s, SetCoverMode::Exact).unwrap().optimum, 3);
        let s = sys(3, &[&[0, 1]]);
        assert!(matches!(setcover(&s, SetCoverMode::Exact), Err(Error::NoCover)));
    }

    #[test]
    fn setcover_greedy_never_beats_exact() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0009);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8usize);
            let mut sets: Vec<Vec<usize>> = (0..rng.gen_range(1..=6))
                .map(|_| (0..n).filter(|_| rng.gen_bool(0.4)).collect())
                .filter(|s: &Vec<usize>| !s.is_empty())
                .collect();
            sets.push((0..n).collect()); // guarantee coverage
            sets.sort();
            sets.dedup();
            let s = SetSystem::new(n, sets).unwrap();
            let exact = setcover(&s, SetCoverMode::Exact).unwrap();
            let greedy = setcover(&s, SetCoverMode::Greedy).unwrap();
            assert!(greedy.optimum >= exact.optimum);
            let union = greedy
                .witness
                .iter()
                .fold(0u64, |a, &i| a | s.set_masks()[i]);
            assert_eq!(union.count_ones() as usize, n);
        }
    }
}
