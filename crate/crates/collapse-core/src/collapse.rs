//! Elementary d-collapses, a greedy collapser, and an exact decision search.
//!
//! A pair `(eta, tau)` is free when `tau` is the unique maximal face
//! containing `eta`. An elementary d-collapse (|eta| <= d) removes the whole
//! interval `{s : eta ⊆ s ⊆ tau}`; a complex is d-collapsible if some
//! sequence of such steps reaches the void complex. Removing a maximal face
//! `tau` via `(tau, tau)` is allowed, and `(∅, tau)` wipes out a complex
//! whose only maximal face is `tau`.
//!
//! The exact search backtracks over every currently free pair, memoizes
//! residual complexes that failed (up to order-preserving vertex relabeling),
//! and gives up with `Undecided` once a node budget is spent.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::complex::{Simplex, SimplicialComplex};
use crate::dense::{self, DenseMap};
use crate::{Error, Result};

/// One elementary collapse: the free face and its unique carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseStep {
    pub free_face: Simplex,
    pub carrier: Simplex,
}

/// A collapse sequence that (claims to) reach the void complex with free
/// faces of size at most `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseCertificate {
    pub d: u32,
    pub steps: Vec<CollapseStep>,
}

/// Outcome of the exact search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Collapsible(CollapseCertificate),
    NotCollapsible,
    /// The node budget ran out (or the complex exceeds 128 vertices).
    Undecided,
}

/// Outcome of the minimal-d search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Collapsibility {
    Exact {
        d: u32,
        certificate: CollapseCertificate,
    },
    /// All smaller d were refuted; the search at `at_d` hit the budget.
    Undecided { at_d: u32 },
}

/// Move ordering for the exact search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MoveOrder {
    /// Largest removed interval first (classic "collapse big things first").
    #[default]
    LargestInterval,
    /// Smallest free face first (the `free_faces` output order).
    SmallestFreeFace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Number of search states to expand before giving up.
    pub budget: u64,
    pub order: MoveOrder,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 10_000_000,
            order: MoveOrder::LargestInterval,
        }
    }
}

fn state_of(x: &SimplicialComplex) -> Option<(DenseMap, Vec<u128>)> {
    let map = DenseMap::from_complex(x)?;
    let masks = map.facet_masks(x);
    Some((map, masks))
}

fn complex_of(map: &DenseMap, state: &[u128]) -> SimplicialComplex {
    if state.is_empty() {
        return SimplicialComplex::void();
    }
    SimplicialComplex::from_facets(state.iter().map(|&m| map.simplex_of(m)))
}

/// All free pairs (eta mask, carrier index) with |eta| <= d.
fn free_pairs(state: &[u128], d: u32) -> Vec<(u128, usize)> {
    let mut out = Vec::new();
    for (i, &tau) in state.iter().enumerate() {
        dense::for_each_small_submask(tau, d as usize, &mut |eta| {
            let unique = state
                .iter()
                .enumerate()
                .all(|(j, &other)| j == i || !dense::is_submask(eta, other));
            if unique {
                out.push((eta, i));
            }
        });
    }
    out
}

fn apply_pair(state: &[u128], eta: u128, tau_idx: usize) -> Vec<u128> {
    let tau = state[tau_idx];
    let mut next: Vec<u128> = state
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != tau_idx)
        .map(|(_, &f)| f)
        .collect();
    // Maximal survivors inside the old carrier: tau minus one vertex of eta.
    let mut bits = eta;
    while bits != 0 {
        let b = bits.trailing_zeros();
        bits &= bits - 1;
        let cand = tau & !(1u128 << b);
        if !next.iter().any(|&f| dense::is_submask(cand, f)) {
            next.push(cand);
        }
    }
    next.sort_by(|a, b| dense::lex_cmp(*a, *b));
    next
}

/// Residual complexes are memoized up to an order-preserving vertex
/// relabeling: sort the facets, relabel vertices by first occurrence, sort
/// again.
fn canonical_key(state: &[u128]) -> Vec<u128> {
    let mut sorted = state.to_vec();
    sorted.sort_by(|a, b| dense::lex_cmp(*a, *b));
    let mut relabel = [u8::MAX; 128];
    let mut next = 0u8;
    for &f in &sorted {
        let mut bits = f;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if relabel[b] == u8::MAX {
                relabel[b] = next;
                next += 1;
            }
        }
    }
    let mut out: Vec<u128> = sorted
        .iter()
        .map(|&f| {
            let mut m = 0u128;
            let mut bits = f;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                m |= 1u128 << relabel[b];
            }
            m
        })
        .collect();
    out.sort_unstable();
    out
}

/// The free pairs of `x` with |free_face| <= d, ordered by free-face size
/// and then lexicographically. The carrier of a free face is determined, so
/// this lists each free face once.
pub fn free_faces(x: &SimplicialComplex, d: u32) -> Vec<CollapseStep> {
    let Some((map, state)) = state_of(x) else {
        panic!("free_faces needs at most 128 vertices");
    };
    let mut pairs = free_pairs(&state, d);
    pairs.sort_by(|a, b| {
        a.0.count_ones()
            .cmp(&b.0.count_ones())
            .then_with(|| dense::lex_cmp(a.0, b.0))
    });
    pairs
        .into_iter()
        .map(|(eta, ti)| CollapseStep {
            free_face: map.simplex_of(eta),
            carrier: map.simplex_of(state[ti]),
        })
        .collect()
}

/// Performs one elementary collapse. Errors if the step is not free in `x`
/// (wrong carrier, carrier not maximal, or free face in another maximal
/// face).
pub fn apply_collapse(x: &SimplicialComplex, step: &CollapseStep) -> Result<SimplicialComplex> {
    let (map, state) = state_of(x).ok_or(Error::InvalidParams("more than 128 vertices"))?;
    let eta = map.mask_of(&step.free_face).ok_or(Error::StepNotFree)?;
    let tau = map.mask_of(&step.carrier).ok_or(Error::StepNotFree)?;
    let Some(ti) = state.iter().position(|&f| f == tau) else {
        return Err(Error::StepNotFree);
    };
    if !dense::is_submask(eta, tau) {
        return Err(Error::StepNotFree);
    }
    let unique = state
        .iter()
        .enumerate()
        .all(|(j, &other)| j == ti || !dense::is_submask(eta, other));
    if !unique {
        return Err(Error::StepNotFree);
    }
    Ok(complex_of(&map, &apply_pair(&state, eta, ti)))
}

/// Outcome of `greedy_collapse`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Collapsed(CollapseCertificate),
    /// No free pair of size <= d; the stuck residual complex.
    Stuck(SimplicialComplex),
}

/// Deterministic greedy collapsing: prefer proper free pairs (eta strictly
/// below its carrier) over removing a whole maximal face, then larger free
/// faces first, ties by lexicographic order. This collapses as long as it
/// can and punctures (removes a maximal face outright) only when stuck.
pub fn greedy_collapse(x: &SimplicialComplex, d: u32) -> GreedyOutcome {
    let Some((map, mut state)) = state_of(x) else {
        panic!("greedy_collapse needs at most 128 vertices");
    };
    let mut steps = Vec::new();
    while !state.is_empty() {
        let pairs = free_pairs(&state, d);
        let best = pairs.into_iter().min_by(|a, b| {
            let improper_a = a.0 == state[a.1];
            let improper_b = b.0 == state[b.1];
            improper_a
                .cmp(&improper_b)
                .then(b.0.count_ones().cmp(&a.0.count_ones()))
                .then_with(|| dense::lex_cmp(a.0, b.0))
        });
        let Some((eta, ti)) = best else {
            return GreedyOutcome::Stuck(complex_of(&map, &state));
        };
        steps.push(CollapseStep {
            free_face: map.simplex_of(eta),
            carrier: map.simplex_of(state[ti]),
        });
        state = apply_pair(&state, eta, ti);
    }
    GreedyOutcome::Collapsed(CollapseCertificate { d, steps })
}

enum SearchResult {
    Yes(Vec<(u128, u128)>), // (eta, tau) per step
    No,
    Cut,
}

struct SearchCtx {
    d: u32,
    order: MoveOrder,
    budget: u64,
    refuted: BTreeSet<Vec<u128>>,
}

fn search(ctx: &mut SearchCtx, state: &[u128]) -> SearchResult {
    if state.is_empty() {
        return SearchResult::Yes(Vec::new());
    }
    if ctx.budget == 0 {
        return SearchResult::Cut;
    }
    ctx.budget -= 1;
    // A single maximal face collapses in one step via (∅, tau).
    if state.len() == 1 {
        return SearchResult::Yes(alloc::vec![(0, state[0])]);
    }
    let key = canonical_key(state);
    if ctx.refuted.contains(&key) {
        return SearchResult::No;
    }
    let mut moves = free_pairs(state, ctx.d);
    if moves.is_empty() {
        ctx.refuted.insert(key);
        return SearchResult::No;
    }
    match ctx.order {
        MoveOrder::LargestInterval => moves.sort_by(|a, b| {
            let ia = state[a.1].count_ones() - a.0.count_ones();
            let ib = state[b.1].count_ones() - b.0.count_ones();
            ib.cmp(&ia)
                .then_with(|| dense::lex_cmp(a.0, b.0))
                .then_with(|| dense::lex_cmp(state[a.1], state[b.1]))
        }),
        MoveOrder::SmallestFreeFace => moves.sort_by(|a, b| {
            a.0.count_ones()
                .cmp(&b.0.count_ones())
                .then_with(|| dense::lex_cmp(a.0, b.0))
        }),
    }
    let mut cut = false;
    for (eta, ti) in moves {
        let child = apply_pair(state, eta, ti);
        match search(ctx, &child) {
            SearchResult::Yes(mut steps) => {
                steps.insert(0, (eta, state[ti]));
                return SearchResult::Yes(steps);
            }
            SearchResult::No => {}
            SearchResult::Cut => {
                cut = true;
                break;
            }
        }
    }
    if cut {
        SearchResult::Cut
    } else {
        ctx.refuted.insert(key);
        SearchResult::No
    }
}

/// Exact decision: is `x` d-collapsible? Complete up to the node budget;
/// `Undecided` only when the budget (or the 128-vertex cap) was hit.
pub fn is_d_collapsible(x: &SimplicialComplex, d: u32, cfg: &SearchConfig) -> Decision {
    if x.is_void() {
        return Decision::Collapsible(CollapseCertificate {
            d,
            steps: Vec::new(),
        });
    }
    let Some((map, state)) = state_of(x) else {
        return Decision::Undecided;
    };
    let mut ctx = SearchCtx {
        d,
        order: cfg.order,
        budget: cfg.budget,
        refuted: BTreeSet::new(),
    };
    match search(&mut ctx, &state) {
        SearchResult::Yes(steps) => Decision::Collapsible(CollapseCertificate {
            d,
            steps: steps
                .into_iter()
                .map(|(eta, tau)| CollapseStep {
                    free_face: map.simplex_of(eta),
                    carrier: map.simplex_of(tau),
                })
                .collect(),
        }),
        SearchResult::No => Decision::NotCollapsible,
        SearchResult::Cut => Decision::Undecided,
    }
}

/// The least d for which `x` is d-collapsible. Every complex is
/// rank-collapsible (repeatedly remove a maximal face), so the scan
/// terminates; it reports `Undecided` at the first d whose search hits the
/// budget.
pub fn collapsibility(x: &SimplicialComplex, cfg: &SearchConfig) -> Collapsibility {
    let max_d = x.rank() as u32;
    for d in 0..=max_d {
        match is_d_collapsible(x, d, cfg) {
            Decision::Collapsible(certificate) => return Collapsibility::Exact { d, certificate },
            Decision::NotCollapsible => {}
            Decision::Undecided => return Collapsibility::Undecided { at_d: d },
        }
    }
    unreachable!("every complex collapses at d = rank")
}

/// Replays a certificate against `x`: every step must be free with
/// |free_face| <= certificate.d at the moment it is applied, and the final
/// state must be void.
pub fn verify_certificate(x: &SimplicialComplex, cert: &CollapseCertificate) -> bool {
    let Some((map, mut state)) = state_of(x) else {
        return false;
    };
    for step in &cert.steps {
        if step.free_face.size() as u32 > cert.d {
            return false;
        }
        let (Some(eta), Some(tau)) = (map.mask_of(&step.free_face), map.mask_of(&step.carrier))
        else {
            return false;
        };
        let Some(ti) = state.iter().position(|&f| f == tau) else {
            return false;
        };
        if !dense::is_submask(eta, tau) {
            return false;
        }
        let unique = state
            .iter()
            .enumerate()
            .all(|(j, &other)| j == ti || !dense::is_submask(eta, other));
        if !unique {
            return false;
        }
        state = apply_pair(&state, eta, ti);
    }
    state.is_empty()
}
