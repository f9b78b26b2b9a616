//! Cross-intersecting set-pair systems and their length bounds.
//!
//! A system is a sequence of pairs (A_1, B_1), .., (A_k, B_k). Three variants
//! are supported, each with a closed-form bound on k:
//!
//! * disjoint pairs: |A_i| <= r, |B_i| <= p, A_i ∩ B_i = ∅, and
//!   A_i ∩ B_j ≠ ∅ for i < j; then k <= C(r+p, r).
//! * threshold t: |A_i| <= r, |B_i| <= p, |A_i ∩ B_i| <= t, and
//!   |A_i ∩ B_j| > t for i < j; then k <= C(r+p-2t, r-t).
//! * partitioned: all A_i, B_i transversals of a fixed partition into r
//!   parts, A_i ∩ B_i = ∅, A_i ∩ B_j ≠ ∅ for i < j; then k <= 2^r.
//!
//! `max_system_search` confirms the bounds exhaustively on small ground
//! sets; `verify_extremal_complexes` checks that the matching hypergraph
//! constructions really produce sphere boundaries of the extremal dimension.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::collapse::{self, Decision, SearchConfig};
use crate::complex::Simplex;
use crate::hypergraph;
use crate::mes;
use crate::util::{binomial, for_each_combination, for_each_permutation};
use crate::{Error, Result};

/// Which set-pair lemma a system is measured against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// Disjoint pairs, bound C(r+p, r).
    FranklKalai,
    /// Intersection threshold t, bound C(r+p-2t, r-t).
    Furedi,
    /// Partition transversals, bound 2^r.
    Lnp,
}

/// A concrete set-pair system. `partition` is required by (and only used
/// for) `Lemma::Lnp`; `t` only by `Lemma::Furedi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPairSystem {
    pub a_list: Vec<Simplex>,
    pub b_list: Vec<Simplex>,
    pub r: u32,
    pub p: u32,
    pub t: u32,
    pub partition: Option<Vec<Simplex>>,
}

impl SetPairSystem {
    pub fn len(&self) -> usize {
        self.a_list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_list.is_empty()
    }
}

/// The closed-form bound for systems of this shape.
pub fn lemma_bound(lemma: Lemma, r: u32, p: u32, t: u32) -> Result<u64> {
    match lemma {
        Lemma::FranklKalai => Ok(binomial((r + p) as u64, r as u64)),
        Lemma::Furedi => {
            if t > r.min(p) {
                return Err(Error::InvalidParams("threshold lemma needs t <= min(r, p)"));
            }
            Ok(binomial((r + p - 2 * t) as u64, (r - t) as u64))
        }
        Lemma::Lnp => {
            if r > 63 {
                return Err(Error::InvalidParams("partitioned lemma needs r <= 63"));
            }
            Ok(1u64 << r)
        }
    }
}

/// Checks every condition of the given lemma on the system.
pub fn check_system(sys: &SetPairSystem, lemma: Lemma) -> bool {
    let k = sys.a_list.len();
    if sys.b_list.len() != k {
        return false;
    }
    let size_ok = |a: &Simplex, b: &Simplex| {
        a.size() as u32 <= sys.r && b.size() as u32 <= sys.p
    };
    match lemma {
        Lemma::FranklKalai => {
            for i in 0..k {
                if !size_ok(&sys.a_list[i], &sys.b_list[i]) {
                    return false;
                }
                if sys.a_list[i].intersects(&sys.b_list[i]) {
                    return false;
                }
                for j in i + 1..k {
                    if !sys.a_list[i].intersects(&sys.b_list[j]) {
                        return false;
                    }
                }
            }
            true
        }
        Lemma::Furedi => {
            for i in 0..k {
                if !size_ok(&sys.a_list[i], &sys.b_list[i]) {
                    return false;
                }
                if sys.a_list[i].intersection_size(&sys.b_list[i]) as u32 > sys.t {
                    return false;
                }
                for j in i + 1..k {
                    if sys.a_list[i].intersection_size(&sys.b_list[j]) as u32 <= sys.t {
                        return false;
                    }
                }
            }
            true
        }
        Lemma::Lnp => {
            let Some(parts) = &sys.partition else {
                return false;
            };
            if parts.len() != sys.r as usize {
                return false;
            }
            let transversal =
                |s: &Simplex| parts.iter().all(|part| s.intersection_size(part) == 1);
            for i in 0..k {
                if !transversal(&sys.a_list[i]) || !transversal(&sys.b_list[i]) {
                    return false;
                }
                if sys.a_list[i].intersects(&sys.b_list[i]) {
                    return false;
                }
                for j in i + 1..k {
                    if !sys.a_list[i].intersects(&sys.b_list[j]) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// The classical extremal system for the disjoint-pairs bound: A ranges over
/// the r-subsets of [r+p] in lexicographic order, B is the complement. Its
/// length is exactly C(r+p, r).
pub fn frankl_kalai_witness(r: u32, p: u32) -> SetPairSystem {
    let n = (r + p) as usize;
    let mut a_list = Vec::new();
    let mut b_list = Vec::new();
    for_each_combination(n, r as usize, &mut |combo| {
        let a = Simplex::new(combo.iter().map(|&i| i as u32 + 1));
        let b = Simplex::new((1..=n as u32).filter(|v| !a.contains(*v)));
        a_list.push(a);
        b_list.push(b);
    });
    SetPairSystem {
        a_list,
        b_list,
        r,
        p,
        t: 0,
        partition: None,
    }
}

/// Search parameters for `max_system_search`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaParams {
    FranklKalai { r: u32, p: u32 },
    Furedi { r: u32, p: u32, t: u32 },
    /// Ground set partitioned into parts of these sizes.
    Lnp { part_sizes: Vec<u32> },
}

/// Outcome of the exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The exact maximum system length.
    Exact(u32),
    /// The node budget ran out first.
    Undecided,
}

/// Exhaustively computes the longest system over a ground set of
/// `ground_size` elements (for `Lnp`, the ground is the disjoint
/// union of the parts and `ground_size` is ignored). Ground sets are capped
/// at 8 elements; states are canonicalized under ground relabelings that
/// preserve the structure.
pub fn max_system_search(
    params: &LemmaParams,
    ground_size: u32,
    budget: u64,
) -> Result<SearchOutcome> {
    let g = match params {
        LemmaParams::Lnp { part_sizes } => {
            if part_sizes.is_empty() || part_sizes.iter().any(|&s| s == 0) {
                return Err(Error::InvalidParams("parts must be nonempty"));
            }
            part_sizes.iter().sum::<u32>() as usize
        }
        _ => ground_size as usize,
    };
    if g > 8 {
        return Err(Error::InvalidParams("search ground sets are capped at 8"));
    }

    // Candidate masks for the two lists.
    let all = (1u32 << g) - 1;
    let (a_cands, b_cands): (Vec<u32>, Vec<u32>) = match params {
        LemmaParams::FranklKalai { r, p } | LemmaParams::Furedi { r, p, .. } => {
            let within = |limit: u32| {
                (0..=all)
                    .filter(|m| m.count_ones() <= limit)
                    .collect::<Vec<u32>>()
            };
            (within(*r), within(*p))
        }
        LemmaParams::Lnp { part_sizes } => {
            let mut part_masks = Vec::new();
            let mut next = 0u32;
            for &s in part_sizes {
                part_masks.push(((1u32 << s) - 1) << next);
                next += s;
            }
            let trans: Vec<u32> = (0..=all)
                .filter(|m| part_masks.iter().all(|&pm| (m & pm).count_ones() == 1))
                .collect();
            (trans.clone(), trans)
        }
    };

    let diag_ok = |a: u32, b: u32| match params {
        LemmaParams::FranklKalai { .. } | LemmaParams::Lnp { .. } => a & b == 0,
        LemmaParams::Furedi { t, .. } => (a & b).count_ones() <= *t,
    };
    let tri_ok = |a: u32, b: u32| match params {
        LemmaParams::FranklKalai { .. } | LemmaParams::Lnp { .. } => a & b != 0,
        LemmaParams::Furedi { t, .. } => (a & b).count_ones() > *t,
    };

    // Relabelings the structure is symmetric under: all of S_g, or the
    // part-preserving subgroup in the partitioned case.
    let perms: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        match params {
            LemmaParams::Lnp { part_sizes } => {
                // Product of per-part permutations.
                let mut blocks: Vec<Vec<Vec<usize>>> = Vec::new();
                let mut offset = 0usize;
                for &s in part_sizes {
                    let ids: Vec<usize> = (offset..offset + s as usize).collect();
                    let mut perms_here = Vec::new();
                    for_each_permutation(&ids, &mut |p| perms_here.push(p.to_vec()));
                    blocks.push(perms_here);
                    offset += s as usize;
                }
                let mut acc: Vec<Vec<usize>> = alloc::vec![Vec::new()];
                for block in blocks {
                    let mut next = Vec::new();
                    for prefix in &acc {
                        for perm in &block {
                            let mut merged = prefix.clone();
                            merged.extend_from_slice(perm);
                            next.push(merged);
                        }
                    }
                    acc = next;
                }
                out = acc;
            }
            _ => {
                let ids: Vec<usize> = (0..g).collect();
                for_each_permutation(&ids, &mut |p| out.push(p.to_vec()));
            }
        }
        out
    };
    let apply_perm = |mask: u32, perm: &[usize]| {
        let mut m = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            m |= 1u32 << perm[b];
        }
        m
    };
    let canonical = |aset: &[u32]| -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for perm in &perms {
            let mut mapped: Vec<u32> = aset.iter().map(|&m| apply_perm(m, perm)).collect();
            mapped.sort_unstable();
            if best.as_ref().map_or(true, |b| &mapped < b) {
                best = Some(mapped);
            }
        }
        best.unwrap_or_default()
    };

    // Feasibility of an extension depends only on the set of A's so far:
    // the new B must meet them all, the new A only its own B.
    struct Ctx<'a> {
        a_cands: &'a [u32],
        b_cands: &'a [u32],
        budget: u64,
        cut: bool,
        best: u32,
        seen: BTreeSet<Vec<u32>>,
    }
    let mut ctx = Ctx {
        a_cands: &a_cands,
        b_cands: &b_cands,
        budget,
        cut: false,
        best: 0,
        seen: BTreeSet::new(),
    };

    fn dfs(
        ctx: &mut Ctx,
        aset: &mut Vec<u32>,
        diag_ok: &dyn Fn(u32, u32) -> bool,
        tri_ok: &dyn Fn(u32, u32) -> bool,
        canonical: &dyn Fn(&[u32]) -> Vec<u32>,
    ) {
        ctx.best = ctx.best.max(aset.len() as u32);
        if ctx.budget == 0 {
            ctx.cut = true;
            return;
        }
        ctx.budget -= 1;
        for bi in 0..ctx.b_cands.len() {
            let b = ctx.b_cands[bi];
            if !aset.iter().all(|&a| tri_ok(a, b)) {
                continue;
            }
            for ai in 0..ctx.a_cands.len() {
                let a = ctx.a_cands[ai];
                if !diag_ok(a, b) || aset.contains(&a) {
                    continue;
                }
                aset.push(a);
                let key = canonical(aset);
                if ctx.seen.insert(key) {
                    dfs(ctx, aset, diag_ok, tri_ok, canonical);
                }
                aset.pop();
                if ctx.cut {
                    return;
                }
            }
        }
    }

    let mut aset = Vec::new();
    dfs(&mut ctx, &mut aset, &diag_ok, &tri_ok, &canonical);
    if ctx.cut {
        Ok(SearchOutcome::Undecided)
    } else {
        Ok(SearchOutcome::Exact(ctx.best))
    }
}

/// How the collapsibility floor of an extremal complex was confirmed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FloorCheck {
    /// Exact search refuted (d-1)-collapsibility.
    Searched,
    /// Dimension too large to search; a sphere boundary of dimension d is
    /// never (d-1)-collapsible, asserted structurally.
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalCheck {
    pub name: String,
    pub found_dimension: Option<u64>,
    pub expected_dimension: u64,
    pub floor: FloorCheck,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub checks: Vec<ExtremalCheck>,
}

impl ExtremalReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

const FLOOR_SEARCH_MAX_DIM: u64 = 3;

fn floor_check(x: &crate::complex::SimplicialComplex, dim: u64) -> (FloorCheck, bool) {
    if dim == 0 || dim > FLOOR_SEARCH_MAX_DIM {
        return (FloorCheck::Structural, true);
    }
    let cfg = SearchConfig::default();
    match collapse::is_d_collapsible(x, (dim - 1) as u32, &cfg) {
        Decision::NotCollapsible => (FloorCheck::Searched, true),
        _ => (FloorCheck::Searched, false),
    }
}

fn simplex_boundary_check(name: String, x: &crate::complex::SimplicialComplex, expected: u64) -> ExtremalCheck {
    let found = x.as_simplex_boundary().map(u64::from);
    let recognized = found == Some(expected);
    let (floor, floor_ok) = if recognized {
        floor_check(x, expected)
    } else {
        (FloorCheck::Structural, false)
    };
    ExtremalCheck {
        name,
        found_dimension: found,
        expected_dimension: expected,
        floor,
        ok: recognized && floor_ok,
    }
}

fn cross_polytope_check(name: String, x: &crate::complex::SimplicialComplex, expected: u64) -> ExtremalCheck {
    let found = x.as_cross_polytope_boundary().map(u64::from);
    let recognized = found == Some(expected);
    let (floor, floor_ok) = if recognized {
        floor_check(x, expected)
    } else {
        (FloorCheck::Structural, false)
    };
    ExtremalCheck {
        name,
        found_dimension: found,
        expected_dimension: expected,
        floor,
        ok: recognized && floor_ok,
    }
}

/// Verifies that the extremal hypergraph families hit the closed-form
/// collapsibility bounds as sphere boundaries:
///
/// * covering complex of the complete r-uniform hypergraph on r+p vertices
///   (threshold 1, budget p): boundary of the (C(r+p, r) - 1)-simplex;
/// * intersection complex of the complete r-uniform hypergraph on 2r
///   vertices: boundary of the (C(2r, r) / 2)-cross-polytope;
/// * the base-[t] families with threshold t+1: same with r, p replaced by
///   r-t, p-t;
/// * the complete r-partite hypergraph with all sides 2: boundary of the
///   2^(r-1)-cross-polytope.
///
/// Dimensions up to 3 also get an exact non-(d-1)-collapsibility search.
/// Requires r >= 1, p >= 1, t <= min(r, p) - 1, and small enough parameters
/// that the complexes stay representable (at most 128 complex vertices).
pub fn verify_extremal_complexes(r: u32, p: u32, t: u32) -> Result<ExtremalReport> {
    if r == 0 || p == 0 || t + 1 > r.min(p) {
        return Err(Error::InvalidParams(
            "extremal verification needs r, p >= 1 and t <= min(r, p) - 1",
        ));
    }
    let mut checks = Vec::new();

    // Threshold-1 sharpness.
    let h_cov = hypergraph::complete_uniform(r + p, r)?;
    let x_cov = hypergraph::cov_complex(&h_cov, p, 1)?;
    checks.push(simplex_boundary_check(
        alloc::format!("cov-sharp r={r} p={p}"),
        &x_cov,
        mes::cov_collapsibility_bound(r, p, 0)?,
    ));

    let h_int = hypergraph::complete_uniform(2 * r, r)?;
    let x_int = hypergraph::int_complex(&h_int, 1)?;
    checks.push(cross_polytope_check(
        alloc::format!("int-sharp r={r}"),
        &x_int,
        mes::int_collapsibility_bound(r, 0)?,
    ));

    // Threshold-(t+1) sharpness via the base-[t] families.
    let h1 = hypergraph::family_h1(r, p, t)?;
    let x1 = hypergraph::cov_complex(&h1, p, t + 1)?;
    checks.push(simplex_boundary_check(
        alloc::format!("cov-sharp r={r} p={p} t={t}"),
        &x1,
        mes::cov_collapsibility_bound(r, p, t)?,
    ));

    let h2 = hypergraph::family_h2(r, t)?;
    let x2 = hypergraph::int_complex(&h2, t + 1)?;
    checks.push(cross_polytope_check(
        alloc::format!("int-sharp r={r} t={t}"),
        &x2,
        mes::int_collapsibility_bound(r, t)?,
    ));

    // r-partite, all sides 2.
    checks.push(rpartite_sides2_check(r)?);

    Ok(ExtremalReport { checks })
}

/// The r-partite sides-2 sharpness check alone (cross-polytope of dimension
/// 2^(r-1)). Feasible for r <= 4.
pub fn rpartite_sides2_check(r: u32) -> Result<ExtremalCheck> {
    if r == 0 || r > 6 {
        return Err(Error::InvalidParams("sides-2 check needs 1 <= r <= 6"));
    }
    let sides = alloc::vec![2u32; r as usize];
    let h = hypergraph::complete_r_partite(&sides)?;
    let x = hypergraph::int_complex(&h, 1)?;
    Ok(cross_polytope_check(
        alloc::format!("int-sharp r-partite r={r} sides=2"),
        &x,
        mes::rpartite_int_collapsibility_bound(r)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied())
    }

    #[test]
    fn check_system_examples() {
        // ({1}, {2}), ({2}, {1}) with r = p = 1.
        let sys = SetPairSystem {
            a_list: alloc::vec![s(&[1]), s(&[2])],
            b_list: alloc::vec![s(&[2]), s(&[1])],
            r: 1,
            p: 1,
            t: 0,
            partition: None,
        };
        assert!(check_system(&sys, Lemma::FranklKalai));

        // Same sets, size limit violated.
        let big = SetPairSystem {
            a_list: alloc::vec![s(&[1, 2])],
            b_list: alloc::vec![s(&[3])],
            r: 1,
            p: 1,
            t: 0,
            partition: None,
        };
        assert!(!check_system(&big, Lemma::FranklKalai));

        // Upper-triangle violation: B_2 misses A_1.
        let bad = SetPairSystem {
            a_list: alloc::vec![s(&[1]), s(&[2])],
            b_list: alloc::vec![s(&[2]), s(&[3])],
            r: 1,
            p: 1,
            t: 0,
            partition: None,
        };
        assert!(!check_system(&bad, Lemma::FranklKalai));

        // Threshold variant: |A_i ∩ B_i| <= 1 with overlaps above 1 off the
        // diagonal.
        let th = SetPairSystem {
            a_list: alloc::vec![s(&[1, 2]), s(&[1, 3])],
            b_list: alloc::vec![s(&[1, 3]), s(&[1, 2])],
            r: 2,
            p: 2,
            t: 1,
            partition: None,
        };
        assert!(check_system(&th, Lemma::Furedi));

        // Partitioned: r = 1, parts ({1, 2}).
        let ln = SetPairSystem {
            a_list: alloc::vec![s(&[1]), s(&[2])],
            b_list: alloc::vec![s(&[2]), s(&[1])],
            r: 1,
            p: 1,
            t: 0,
            partition: Some(alloc::vec![s(&[1, 2])]),
        };
        assert!(check_system(&ln, Lemma::Lnp));
    }

    #[test]
    fn witness_systems() {
        for r in 1..=3u32 {
            for p in 1..=3u32 {
                let sys = frankl_kalai_witness(r, p);
                assert_eq!(sys.len() as u64, binomial((r + p) as u64, r as u64));
                assert!(check_system(&sys, Lemma::FranklKalai), "r={r} p={p}");
            }
        }
        let sys = frankl_kalai_witness(2, 1);
        assert_eq!(sys.a_list, alloc::vec![s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]);
        assert_eq!(sys.b_list, alloc::vec![s(&[3]), s(&[2]), s(&[1])]);
    }

    #[test]
    fn max_search_small() {
        // r = p = 1 on 3 points: bound C(2,1) = 2.
        let out = max_system_search(&LemmaParams::FranklKalai { r: 1, p: 1 }, 3, 1_000_000).unwrap();
        assert_eq!(out, SearchOutcome::Exact(2));

        // r = 2, p = 1 on 4 points: bound C(3,2) = 3.
        let out = max_system_search(&LemmaParams::FranklKalai { r: 2, p: 1 }, 4, 1_000_000).unwrap();
        assert_eq!(out, SearchOutcome::Exact(3));

        // Partitioned r = 1 with one part of size 2: bound 2.
        let out = max_system_search(
            &LemmaParams::Lnp {
                part_sizes: alloc::vec![2],
            },
            0,
            1_000_000,
        )
        .unwrap();
        assert_eq!(out, SearchOutcome::Exact(2));

        // Budget exhaustion reports undecided.
        let out = max_system_search(&LemmaParams::FranklKalai { r: 2, p: 2 }, 6, 2).unwrap();
        assert_eq!(out, SearchOutcome::Undecided);

        assert!(max_system_search(&LemmaParams::FranklKalai { r: 1, p: 1 }, 9, 10).is_err());
    }

    #[test]
    fn threshold_search_small() {
        // r = p = 2, t = 1 on 3 points: bound C(2, 1) = 2.
        let out = max_system_search(
            &LemmaParams::Furedi { r: 2, p: 2, t: 1 },
            3,
            1_000_000,
        )
        .unwrap();
        assert_eq!(out, SearchOutcome::Exact(2));
    }

    #[test]
    fn extremal_report_base_case() {
        let report = verify_extremal_complexes(2, 1, 0).unwrap();
        assert!(report.all_ok(), "{report:?}");
        // cov: boundary of the 2-simplex; int: the octahedron.
        assert_eq!(report.checks[0].found_dimension, Some(2));
        assert_eq!(report.checks[1].found_dimension, Some(3));
        assert_eq!(report.checks[0].floor, FloorCheck::Searched);
        assert_eq!(report.checks[1].floor, FloorCheck::Searched);
    }

    #[test]
    fn extremal_report_with_threshold() {
        let report = verify_extremal_complexes(2, 2, 1).unwrap();
        assert!(report.all_ok(), "{report:?}");
        let report = verify_extremal_complexes(1, 2, 0).unwrap();
        assert!(report.all_ok(), "{report:?}");
    }

    #[test]
    fn rpartite_checks() {
        for r in 1..=3 {
            let check = rpartite_sides2_check(r).unwrap();
            assert!(check.ok, "{check:?}");
            assert_eq!(check.found_dimension, Some(1u64 << (r - 1)));
        }
    }

    #[test]
    fn param_validation() {
        assert!(verify_extremal_complexes(0, 1, 0).is_err());
        assert!(verify_extremal_complexes(2, 1, 1).is_err());
        assert!(lemma_bound(Lemma::Furedi, 1, 1, 2).is_err());
        assert_eq!(lemma_bound(Lemma::FranklKalai, 2, 1, 0).unwrap(), 3);
        assert_eq!(lemma_bound(Lemma::Furedi, 2, 2, 1).unwrap(), 2);
        assert_eq!(lemma_bound(Lemma::Lnp, 3, 0, 0).unwrap(), 8);
    }
}
