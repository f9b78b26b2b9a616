//! Minimal exclusion sequences and the collapsibility bounds they give.
//!
//! Fix a complex `X`, an ordering `A = (s_1, .., s_m)` of faces that covers
//! every facet, and the increasing order on vertex ids. For a face `f` whose
//! first containing entry is `s_i`, the exclusion sequence has one entry per
//! earlier index `j < i`, each a vertex of `f` outside `s_j`:
//!
//! * old: the earliest previous entry that already avoids `s_j`, if any;
//! * new: otherwise the smallest vertex of `f \ s_j`.
//!
//! The support of `f` is the set of distinct entries. The largest support
//! size over all faces, `d_of_ordering`, is an upper bound for the
//! collapsibility of `X`; it is in turn at most `d_prime`, the largest size
//! of a "surrounded" face witnessed by maximal faces (`SxWitness`).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::dense::{self, DenseMap};
use crate::hypergraph::Graph;
use crate::util::{binomial, for_each_permutation};
use crate::{Error, Result};

/// An ordering of faces of a complex used for exclusion sequences. Valid iff
/// every entry is a face and every facet is contained in some entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetOrdering {
    faces: Vec<Simplex>,
}

impl FacetOrdering {
    /// The maximal faces in their sorted (lexicographic) order.
    pub fn lex(x: &SimplicialComplex) -> Self {
        FacetOrdering {
            faces: if x.is_void() { Vec::new() } else { x.maximal_faces() },
        }
    }

    /// An explicit ordering, validated against `x`.
    pub fn new(x: &SimplicialComplex, faces: Vec<Simplex>) -> Result<Self> {
        let ord = FacetOrdering { faces };
        ord.validate(x)?;
        Ok(ord)
    }

    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    fn validate(&self, x: &SimplicialComplex) -> Result<()> {
        for f in &self.faces {
            if !x.is_face(f) {
                return Err(Error::InvalidOrdering("entry is not a face of the complex"));
            }
        }
        for facet in x.maximal_faces() {
            if !self.faces.iter().any(|f| facet.is_subset_of(f)) {
                return Err(Error::InvalidOrdering(
                    "some facet is contained in no entry",
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MesTag {
    /// Repeats an earlier entry of the same sequence.
    Old,
    /// First occurrence of this vertex in the sequence.
    New,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MesEntry {
    pub vertex: Vertex,
    pub tag: MesTag,
}

/// The exclusion sequence of one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MesResult {
    pub face: Simplex,
    /// 0-based index of the first ordering entry containing the face; the
    /// sequence has exactly this many entries.
    pub first_index: usize,
    pub entries: Vec<MesEntry>,
    /// The distinct vertices appearing in the sequence (all tagged new).
    pub support: Simplex,
}

/// The exclusion sequence of `face` under `ord`.
pub fn mes(x: &SimplicialComplex, ord: &FacetOrdering, face: &Simplex) -> Result<MesResult> {
    ord.validate(x)?;
    if !x.is_face(face) {
        return Err(Error::FaceNotInComplex);
    }
    let map = DenseMap::from_complex(x).ok_or(Error::InvalidParams("more than 128 vertices"))?;
    let ord_masks: Vec<u128> = ord
        .faces
        .iter()
        .map(|f| map.mask_of(f).expect("ordering entries are faces"))
        .collect();
    let fmask = map.mask_of(face).expect("face of the complex");
    let first_index = ord_masks
        .iter()
        .position(|&m| dense::is_submask(fmask, m))
        .expect("a valid ordering covers every face");
    let mut entries: Vec<(usize, MesTag)> = Vec::with_capacity(first_index);
    for &m in &ord_masks[..first_index] {
        let outside = fmask & !m;
        debug_assert_ne!(outside, 0, "face not contained in an earlier entry");
        let old = entries
            .iter()
            .map(|&(b, _)| b)
            .find(|&b| outside >> b & 1 == 1);
        match old {
            Some(b) => entries.push((b, MesTag::Old)),
            None => entries.push((outside.trailing_zeros() as usize, MesTag::New)),
        }
    }
    let support = Simplex::new(entries.iter().map(|&(b, _)| map.vertex_of(b)));
    Ok(MesResult {
        face: face.clone(),
        first_index,
        entries: entries
            .into_iter()
            .map(|(b, tag)| MesEntry {
                vertex: map.vertex_of(b),
                tag,
            })
            .collect(),
        support,
    })
}

/// The largest exclusion-sequence support size over all faces of `x`:
/// an upper bound on the collapsibility of `x`.
pub fn d_of_ordering(x: &SimplicialComplex, ord: &FacetOrdering) -> Result<u32> {
    ord.validate(x)?;
    if x.is_void() {
        return Ok(0);
    }
    let map = DenseMap::from_complex(x).ok_or(Error::InvalidParams("more than 128 vertices"))?;
    let ord_masks: Vec<u128> = ord
        .faces
        .iter()
        .map(|f| map.mask_of(f).expect("ordering entries are faces"))
        .collect();
    let facet_masks = map.facet_masks(x);
    let mut best = 0u32;
    dense::for_each_face(&facet_masks, &mut |fmask, _| {
        // The support is a subset of the face, so small faces cannot improve.
        if fmask.count_ones() <= best {
            return;
        }
        let first = ord_masks
            .iter()
            .position(|&m| dense::is_submask(fmask, m))
            .expect("a valid ordering covers every face");
        let mut chosen: Vec<usize> = Vec::new();
        let mut support = 0u128;
        for &m in &ord_masks[..first] {
            let outside = fmask & !m;
            match chosen.iter().find(|&&b| outside >> b & 1 == 1) {
                Some(_) => {}
                None => {
                    let b = outside.trailing_zeros() as usize;
                    chosen.push(b);
                    support |= 1u128 << b;
                }
            }
        }
        best = best.max(support.count_ones());
    });
    Ok(best)
}

/// Searches all orderings of the maximal faces (at most 7 facets) for the
/// smallest `d_of_ordering`. Returns the minimum and the first ordering
/// attaining it.
pub fn min_ordering_search(x: &SimplicialComplex) -> Result<(u32, FacetOrdering)> {
    let facets = if x.is_void() { Vec::new() } else { x.maximal_faces() };
    if facets.len() > 7 {
        return Err(Error::InvalidParams(
            "ordering search is limited to 7 facets",
        ));
    }
    let mut best: Option<(u32, FacetOrdering)> = None;
    let mut err = None;
    for_each_permutation(&facets, &mut |perm| {
        if err.is_some() {
            return;
        }
        let ord = FacetOrdering {
            faces: perm.to_vec(),
        };
        match d_of_ordering(x, &ord) {
            Ok(d) => {
                if best.as_ref().map_or(true, |(b, _)| d < *b) {
                    best = Some((d, ord));
                }
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(best.expect("at least the identity permutation was tried"))
}

/// Witness for `d_prime`: vertices `v_1..v_k` and maximal faces
/// `s_1..s_{k+1}` with `v_i ∉ s_i` and `v_i ∈ s_j` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SxWitness {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Simplex>,
}

impl SxWitness {
    /// Checks the witness conditions against `x`.
    pub fn check(&self, x: &SimplicialComplex) -> bool {
        let k = self.vertices.len();
        if self.facets.len() != k + 1 {
            return false;
        }
        let maximal = x.maximal_faces();
        if !self.facets.iter().all(|f| maximal.contains(f)) {
            return false;
        }
        for (i, &v) in self.vertices.iter().enumerate() {
            if self.facets[i].contains(v) {
                return false;
            }
            if !self.facets[i + 1..].iter().all(|f| f.contains(v)) {
                return false;
            }
        }
        // The vertices form a face of x (they all lie in the last facet).
        true
    }
}

/// The largest k such that some k vertices and k+1 maximal faces satisfy the
/// exclusion pattern above. Upper bound for every `d_of_ordering`; exact
/// search, feasible for small complexes.
pub fn d_prime(x: &SimplicialComplex) -> Result<(u32, SxWitness)> {
    if x.is_void() {
        return Err(Error::VoidComplex);
    }
    let map = DenseMap::from_complex(x).ok_or(Error::InvalidParams("more than 128 vertices"))?;
    let facets = map.facet_masks(x);
    let n = map.len();

    struct Ctx<'a> {
        facets: &'a [u128],
        n: usize,
        memo: BTreeSet<u128>,
        best: u32,
        best_stack: Vec<(usize, usize)>, // (vertex bit, facet index)
        best_last: usize,
        stack: Vec<(usize, usize)>,
    }

    fn dfs(ctx: &mut Ctx, p: u128) {
        if ctx.stack.len() as u32 > ctx.best {
            ctx.best = ctx.stack.len() as u32;
            ctx.best_stack = ctx.stack.clone();
            ctx.best_last = ctx
                .facets
                .iter()
                .position(|&f| dense::is_submask(p, f))
                .expect("p is a face");
        }
        // Every extension stays inside one facet.
        let cap = ctx
            .facets
            .iter()
            .filter(|&&f| dense::is_submask(p, f))
            .map(|f| f.count_ones())
            .max()
            .unwrap_or(0);
        if cap <= ctx.best {
            return;
        }
        let mut seen_incidence: BTreeSet<Vec<u128>> = BTreeSet::new();
        for v in 0..ctx.n {
            let bit = 1u128 << v;
            if p & bit != 0 {
                continue;
            }
            let pv = p | bit;
            if !ctx.facets.iter().any(|&f| dense::is_submask(pv, f)) {
                continue;
            }
            let Some(fi) = ctx
                .facets
                .iter()
                .position(|&f| dense::is_submask(p, f) && f & bit == 0)
            else {
                continue;
            };
            // Vertices lying in exactly the same facets are interchangeable.
            let incidence: Vec<u128> = ctx
                .facets
                .chunks(128)
                .map(|chunk| {
                    let mut m = 0u128;
                    for (i, &f) in chunk.iter().enumerate() {
                        if f & bit != 0 {
                            m |= 1u128 << i;
                        }
                    }
                    m
                })
                .collect();
            if !seen_incidence.insert(incidence) {
                continue;
            }
            if ctx.memo.insert(pv) {
                ctx.stack.push((v, fi));
                dfs(ctx, pv);
                ctx.stack.pop();
            }
        }
    }

    let mut ctx = Ctx {
        facets: &facets,
        n,
        memo: BTreeSet::new(),
        best: 0,
        best_stack: Vec::new(),
        best_last: 0,
        stack: Vec::new(),
    };
    ctx.best_last = 0; // first facet contains the empty set
    dfs(&mut ctx, 0);

    let vertices: Vec<Vertex> = ctx
        .best_stack
        .iter()
        .map(|&(b, _)| map.vertex_of(b))
        .collect();
    let mut wfacets: Vec<Simplex> = ctx
        .best_stack
        .iter()
        .map(|&(_, fi)| map.simplex_of(facets[fi]))
        .collect();
    wfacets.push(map.simplex_of(facets[ctx.best_last]));
    Ok((ctx.best, SxWitness {
        vertices,
        facets: wfacets,
    }))
}

/// Witness for `k_graph`: vertex pairs with `v_i u_i ∈ E`, `v_i v_j ∉ E`,
/// and `v_i u_j ∉ E` for `i < j`; all 2k vertices distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KgWitness {
    pub v: Vec<Vertex>,
    pub u: Vec<Vertex>,
}

impl KgWitness {
    pub fn check(&self, g: &Graph) -> bool {
        let k = self.v.len();
        if self.u.len() != k {
            return false;
        }
        let mut all: Vec<Vertex> = self.v.iter().chain(self.u.iter()).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * k {
            return false;
        }
        if !all.iter().all(|&w| g.vertices().binary_search(&w).is_ok()) {
            return false;
        }
        for i in 0..k {
            if !g.has_edge(self.v[i], self.u[i]) {
                return false;
            }
            for j in 0..k {
                if i != j && g.has_edge(self.v[i], self.v[j]) {
                    return false;
                }
                if i < j && g.has_edge(self.v[i], self.u[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// The graph analogue of `d_prime`: the largest k admitting pairs
/// `(v_i, u_i)` as in `KgWitness`. Equals `d_prime` of the independence
/// complex.
pub fn k_graph(g: &Graph) -> (u32, KgWitness) {
    let map = DenseMap::try_new(g.vertices().to_vec()).expect("at most 128 graph vertices");
    let n = map.len();
    let adj = g.adjacency(&map);

    struct Ctx<'a> {
        adj: &'a [u128],
        n: usize,
        memo: BTreeSet<(u128, u128)>,
        best: u32,
        best_stack: Vec<(usize, usize)>,
        stack: Vec<(usize, usize)>,
    }

    fn dfs(ctx: &mut Ctx, vs: u128, used: u128) {
        if ctx.stack.len() as u32 > ctx.best {
            ctx.best = ctx.stack.len() as u32;
            ctx.best_stack = ctx.stack.clone();
        }
        // Each further pair needs two fresh vertices.
        let remaining = (ctx.n as u32 - used.count_ones()) / 2;
        if ctx.stack.len() as u32 + remaining <= ctx.best {
            return;
        }
        for v in 0..ctx.n {
            let vbit = 1u128 << v;
            if used & vbit != 0 || ctx.adj[v] & vs != 0 {
                continue;
            }
            // u must be adjacent to v, unused, and miss all previous v's.
            let mut cands = ctx.adj[v] & !used & !vbit;
            while cands != 0 {
                let u = cands.trailing_zeros() as usize;
                cands &= cands - 1;
                if ctx.adj[u] & vs != 0 {
                    continue;
                }
                let ubit = 1u128 << u;
                let state = (vs | vbit, used | vbit | ubit);
                if ctx.memo.insert(state) {
                    ctx.stack.push((v, u));
                    dfs(ctx, state.0, state.1);
                    ctx.stack.pop();
                }
            }
        }
    }

    let mut ctx = Ctx {
        adj: &adj,
        n,
        memo: BTreeSet::new(),
        best: 0,
        best_stack: Vec::new(),
        stack: Vec::new(),
    };
    dfs(&mut ctx, 0, 0);

    let witness = KgWitness {
        v: ctx.best_stack.iter().map(|&(v, _)| map.vertex_of(v)).collect(),
        u: ctx.best_stack.iter().map(|&(_, u)| map.vertex_of(u)).collect(),
    };
    (ctx.best, witness)
}

/// Collapsibility bound for covering complexes with threshold t+1:
/// C(r+p-2t, r-t) - 1. Requires r, p >= 1 and t <= min(r, p) - 1.
pub fn cov_collapsibility_bound(r: u32, p: u32, t: u32) -> Result<u64> {
    if r == 0 || p == 0 || t + 1 > r.min(p) {
        return Err(Error::InvalidParams(
            "cov bound needs r >= 1, p >= 1, t <= min(r, p) - 1",
        ));
    }
    Ok(binomial((r + p - 2 * t) as u64, (r - t) as u64) - 1)
}

/// Collapsibility bound for intersection complexes with threshold t+1:
/// C(2(r-t), r-t) / 2. Requires r >= 1 and t <= r - 1.
pub fn int_collapsibility_bound(r: u32, t: u32) -> Result<u64> {
    if r == 0 || t + 1 > r {
        return Err(Error::InvalidParams("int bound needs r >= 1, t <= r - 1"));
    }
    Ok(binomial(2 * (r - t) as u64, (r - t) as u64) / 2)
}

/// Collapsibility bound for intersection complexes of r-partite hypergraphs:
/// 2^(r-1). Requires 1 <= r <= 63.
pub fn rpartite_int_collapsibility_bound(r: u32) -> Result<u64> {
    if r == 0 || r > 63 {
        return Err(Error::InvalidParams("r-partite bound needs 1 <= r <= 63"));
    }
    Ok(1u64 << (r - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremBounds {
    pub cov_bound: u64,
    pub int_bound: u64,
    pub rpartite_int_bound: u64,
}

/// All three closed-form bounds at once; errors if any hypothesis fails.
pub fn theorem_bounds(r: u32, p: u32, t: u32) -> Result<TheoremBounds> {
    Ok(TheoremBounds {
        cov_bound: cov_collapsibility_bound(r, p, t)?,
        int_bound: int_collapsibility_bound(r, t)?,
        rpartite_int_bound: rpartite_int_collapsibility_bound(r)?,
    })
}
