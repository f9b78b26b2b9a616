//! Hypergraphs and the simplicial complexes they induce.
//!
//! For a hypergraph `H` (a list of distinct nonempty vertex sets) and a
//! threshold `t >= 1`:
//!
//! * `cov_complex(H, p, t)` is the complex of subfamilies `F ⊆ H` whose
//!   `t`-transversal number is at most `p`: some vertex set `C` with
//!   `|C| <= p` meets every member of `F` in at least `t` vertices.
//! * `int_complex(H, t)` is the complex of pairwise `t`-intersecting
//!   subfamilies.
//!
//! Vertices of both complexes are the *indices* of the edges in `H`'s edge
//! list (0-based). The empty subfamily always qualifies, so neither complex
//! is ever void.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::dense::{self, DenseMap};
use crate::util::for_each_combination;
use crate::{Error, Result};

/// A hypergraph: distinct nonempty edges over a ground set of vertex ids.
/// The ground set is the union of the edges. An optional partition of the
/// ground set marks the hypergraph as r-partite: every edge must then pick
/// exactly one vertex from each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    ground: Vec<Vertex>,
    edges: Vec<Simplex>,
    rank: u32,
    parts: Option<Vec<Simplex>>,
}

impl Hypergraph {
    pub fn new(edges: Vec<Simplex>) -> Result<Self> {
        if edges.iter().any(Simplex::is_empty) {
            return Err(Error::InvalidParams("hypergraph edges must be nonempty"));
        }
        let mut sorted = edges.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != edges.len() {
            return Err(Error::InvalidParams("hypergraph edges must be distinct"));
        }
        let mut ground: Vec<Vertex> = edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect();
        ground.sort_unstable();
        ground.dedup();
        let rank = edges.iter().map(Simplex::size).max().unwrap_or(0) as u32;
        Ok(Hypergraph {
            ground,
            edges,
            rank,
            parts: None,
        })
    }

    /// An r-partite hypergraph: `parts` partition the ground set and every
    /// edge meets every part in exactly one vertex.
    pub fn with_parts(edges: Vec<Simplex>, parts: Vec<Simplex>) -> Result<Self> {
        let mut h = Self::new(edges)?;
        if parts.iter().any(Simplex::is_empty) {
            return Err(Error::InvalidParams("partition parts must be nonempty"));
        }
        let total: usize = parts.iter().map(Simplex::size).sum();
        let mut union: Vec<Vertex> = parts
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .collect();
        union.sort_unstable();
        union.dedup();
        if union.len() != total {
            return Err(Error::InvalidParams("partition parts must be disjoint"));
        }
        for v in &h.ground {
            if union.binary_search(v).is_err() {
                return Err(Error::InvalidParams("edge vertex outside the partition"));
            }
        }
        for e in &h.edges {
            for p in &parts {
                if e.intersection_size(p) != 1 {
                    return Err(Error::InvalidParams(
                        "every edge must meet every part exactly once",
                    ));
                }
            }
        }
        h.parts = Some(parts);
        Ok(h)
    }

    pub fn ground(&self) -> &[Vertex] {
        &self.ground
    }

    pub fn edges(&self) -> &[Simplex] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Largest edge size (0 for the empty hypergraph).
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn parts(&self) -> Option<&[Simplex]> {
        self.parts.as_deref()
    }
}

/// A finite simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    verts: Vec<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>, // normalized (min, max)
}

impl Graph {
    pub fn new(vertices: Vec<Vertex>, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut verts = vertices;
        verts.sort_unstable();
        verts.dedup();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParams("graphs have no loops"));
            }
            if verts.binary_search(&a).is_err() || verts.binary_search(&b).is_err() {
                return Err(Error::InvalidParams("edge endpoint outside the vertex set"));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { verts, edges: set })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Adjacency masks over `map`'s bit positions.
    pub(crate) fn adjacency(&self, map: &DenseMap) -> Vec<u128> {
        let mut adj = alloc::vec![0u128; map.len()];
        for &(a, b) in &self.edges {
            let (ia, ib) = (
                map.bit_of(a).expect("edge endpoint in map"),
                map.bit_of(b).expect("edge endpoint in map"),
            );
            adj[ia] |= 1u128 << ib;
            adj[ib] |= 1u128 << ia;
        }
        adj
    }
}

/// The t-transversal number of `H`: the least size of a vertex set meeting
/// every edge in at least `t` vertices. Errors if `t = 0` or some edge has
/// fewer than `t` vertices (then no transversal exists). The empty hypergraph
/// has transversal number 0.
pub fn covering_number(h: &Hypergraph, t: u32) -> Result<u32> {
    if t == 0 {
        return Err(Error::InvalidParams("threshold t must be at least 1"));
    }
    if h.edges.iter().any(|e| (e.size() as u32) < t) {
        return Err(Error::NoTransversal);
    }
    if h.edges.is_empty() {
        return Ok(0);
    }
    let n = h.ground.len();
    for size in 0..=n {
        let mut found = false;
        for_each_combination(n, size, &mut |combo| {
            if found {
                return;
            }
            let c = Simplex::new(combo.iter().map(|&i| h.ground[i]));
            if h.edges.iter().all(|e| e.intersection_size(&c) as u32 >= t) {
                found = true;
            }
        });
        if found {
            return Ok(size as u32);
        }
    }
    // The full ground set meets every edge in |e| >= t vertices.
    unreachable!("full ground set is always a transversal here")
}

/// A cover witness: a vertex set `C` certifying that a subfamily has
/// t-transversal number at most `|C|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    pub cover: Simplex,
    pub threshold: u32,
}

impl CoverWitness {
    /// True iff every given edge meets the cover in at least `threshold`
    /// vertices.
    pub fn covers(&self, edges: &[Simplex]) -> bool {
        edges
            .iter()
            .all(|e| e.intersection_size(&self.cover) as u32 >= self.threshold)
    }
}

fn cov_candidates(h: &Hypergraph, p: u32, t: u32) -> BTreeMap<Simplex, Simplex> {
    // Witness sets C range over subsets of the ground set of size
    // min(p, |ground|); smaller witnesses are dominated by larger ones
    // because membership |A ∩ C| >= t is monotone in C.
    let n = h.ground.len();
    let size = (p as usize).min(n);
    let mut by_face: BTreeMap<Simplex, Simplex> = BTreeMap::new();
    for_each_combination(n, size, &mut |combo| {
        let c = Simplex::new(combo.iter().map(|&i| h.ground[i]));
        let face = Simplex::new(h.edges.iter().enumerate().filter_map(|(i, e)| {
            if e.intersection_size(&c) as u32 >= t {
                Some(i as Vertex)
            } else {
                None
            }
        }));
        by_face.entry(face).or_insert(c);
    });
    by_face
}

/// The complex of subfamilies of `H` with t-transversal number at most `p`.
/// Complex vertices are edge indices into `h.edges()`. With `p = 0` (or no
/// coverable edge at all) this is `{∅}`.
pub fn cov_complex(h: &Hypergraph, p: u32, t: u32) -> Result<SimplicialComplex> {
    Ok(cov_complex_with_witnesses(h, p, t)?.0)
}

/// As `cov_complex`, and for each facet (in facet order) a witness cover.
pub fn cov_complex_with_witnesses(
    h: &Hypergraph,
    p: u32,
    t: u32,
) -> Result<(SimplicialComplex, Vec<CoverWitness>)> {
    if t == 0 {
        return Err(Error::InvalidParams("threshold t must be at least 1"));
    }
    let by_face = cov_candidates(h, p, t);
    let complex = SimplicialComplex::from_facets(
        by_face
            .keys()
            .cloned()
            .chain(core::iter::once(Simplex::empty())),
    );
    // Aligned with maximal_faces(), so the empty complex still reports the
    // witness of its one (empty) maximal face.
    let witnesses = complex
        .maximal_faces()
        .iter()
        .map(|f| CoverWitness {
            cover: by_face.get(f).expect("every facet arose as some F_C").clone(),
            threshold: t,
        })
        .collect();
    Ok((complex, witnesses))
}

/// Edge indices with fewer than `t` vertices can never appear in a pairwise
/// t-intersecting family; both `int_complex` and `disjointness_graph` leave
/// them out.
fn admissible_indices(h: &Hypergraph, t: u32) -> Vec<usize> {
    h.edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.size() as u32 >= t)
        .map(|(i, _)| i)
        .collect()
}

/// The complex of pairwise t-intersecting subfamilies of `H`. Complex
/// vertices are edge indices into `h.edges()`; edges smaller than `t` are
/// dropped (see `int_complex_with_dropped`).
pub fn int_complex(h: &Hypergraph, t: u32) -> Result<SimplicialComplex> {
    Ok(int_complex_with_dropped(h, t)?.0)
}

/// As `int_complex`, also reporting the indices of dropped edges.
pub fn int_complex_with_dropped(
    h: &Hypergraph,
    t: u32,
) -> Result<(SimplicialComplex, Vec<usize>)> {
    if t == 0 {
        return Err(Error::InvalidParams("threshold t must be at least 1"));
    }
    let kept = admissible_indices(h, t);
    let dropped = (0..h.edges.len()).filter(|i| !kept.contains(i)).collect();
    if kept.len() > dense::MAX_DENSE_VERTICES {
        return Err(Error::InvalidParams("more than 128 admissible edges"));
    }
    // Maximal pairwise t-intersecting families are the maximal cliques of the
    // t-intersection graph on the admissible edges.
    let mut adj = alloc::vec![0u128; kept.len()];
    for (a, &ia) in kept.iter().enumerate() {
        for (b, &ib) in kept.iter().enumerate().skip(a + 1) {
            if h.edges[ia].intersection_size(&h.edges[ib]) as u32 >= t {
                adj[a] |= 1u128 << b;
                adj[b] |= 1u128 << a;
            }
        }
    }
    let cliques = maximal_cliques_masks(&adj);
    let complex = SimplicialComplex::from_facets(cliques.into_iter().map(|m| {
        let mut mask = m;
        let mut verts = Vec::new();
        while mask != 0 {
            let b = mask.trailing_zeros() as usize;
            verts.push(kept[b] as Vertex);
            mask &= mask - 1;
        }
        Simplex::new(verts)
    }));
    Ok((complex, dropped))
}

/// The graph on the admissible edge indices of `H` (size >= t) with an edge
/// where two hypergraph edges share fewer than `t` vertices.
pub fn disjointness_graph(h: &Hypergraph, t: u32) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParams("threshold t must be at least 1"));
    }
    let kept = admissible_indices(h, t);
    let verts: Vec<Vertex> = kept.iter().map(|&i| i as Vertex).collect();
    let mut edges = Vec::new();
    for (a, &ia) in kept.iter().enumerate() {
        for &ib in kept.iter().skip(a + 1) {
            if (h.edges[ia].intersection_size(&h.edges[ib]) as u32) < t {
                edges.push((ia as Vertex, ib as Vertex));
            }
        }
    }
    Graph::new(verts, edges)
}

/// The complex of independent sets of `G`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let map = DenseMap::try_new(g.verts.clone()).expect("at most 128 graph vertices");
    let n = map.len();
    let adj = g.adjacency(&map);
    // Maximal independent sets = maximal cliques of the complement.
    let all = if n == 128 { !0u128 } else { (1u128 << n) - 1 };
    let comp: Vec<u128> = (0..n)
        .map(|v| all & !adj[v] & !(1u128 << v))
        .collect();
    let cliques = maximal_cliques_masks(&comp);
    SimplicialComplex::from_facets(cliques.into_iter().map(|m| map.simplex_of(m)))
}

/// Maximal cliques via Bron-Kerbosch with a deterministic pivot (largest
/// candidate coverage, ties to the lowest bit). Returns one mask per clique;
/// the single empty clique for the empty graph.
fn maximal_cliques_masks(adj: &[u128]) -> Vec<u128> {
    let n = adj.len();
    let all = if n == 0 {
        0
    } else if n == 128 {
        !0u128
    } else {
        (1u128 << n) - 1
    };
    let mut out = Vec::new();
    bron_kerbosch(adj, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(adj: &[u128], r: u128, p: u128, x: u128, out: &mut Vec<u128>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot: vertex of P ∪ X covering the most of P.
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    let mut px = p | x;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let cover = (p & adj[u]).count_ones() as usize;
        if pivot == usize::MAX || cover > best {
            pivot = u;
            best = cover;
        }
    }
    let mut cand = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let bit = 1u128 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// The complete r-uniform hypergraph on vertices 1..=n.
pub fn complete_uniform(n: u32, r: u32) -> Result<Hypergraph> {
    if r == 0 || r > n {
        return Err(Error::InvalidParams("complete_uniform needs 1 <= r <= n"));
    }
    let mut edges = Vec::new();
    for_each_combination(n as usize, r as usize, &mut |combo| {
        edges.push(Simplex::new(combo.iter().map(|&i| i as u32 + 1)));
    });
    Hypergraph::new(edges)
}

/// The complete r-partite hypergraph: parts are consecutive runs of 1-based
/// vertex ids with the given sizes, edges all transversals.
pub fn complete_r_partite(sides: &[u32]) -> Result<Hypergraph> {
    if sides.is_empty() || sides.iter().any(|&s| s == 0) {
        return Err(Error::InvalidParams(
            "complete_r_partite needs at least one part, all nonempty",
        ));
    }
    let mut parts: Vec<Simplex> = Vec::with_capacity(sides.len());
    let mut next = 1u32;
    for &s in sides {
        parts.push(Simplex::new(next..next + s));
        next += s;
    }
    let mut edges = Vec::new();
    let mut pick = alloc::vec![0u32; sides.len()];
    loop {
        edges.push(Simplex::new(
            parts
                .iter()
                .zip(&pick)
                .map(|(part, &i)| part.vertices()[i as usize]),
        ));
        // Odometer increment, last part fastest.
        let mut i = sides.len();
        loop {
            if i == 0 {
                return Hypergraph::with_parts(edges, parts);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < sides[i] {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// The r-uniform family over [r+p-t] whose edges all contain the base [t]:
/// every A ∪ [t] with A an (r-t)-subset of {t+1, .., r+p-t}. Requires
/// 0 <= t < min(r, p).
pub fn family_h1(r: u32, p: u32, t: u32) -> Result<Hypergraph> {
    if r == 0 || p == 0 || t >= r.min(p) {
        return Err(Error::InvalidParams("family_h1 needs 0 <= t < min(r, p)"));
    }
    let base: Vec<u32> = (1..=t).collect();
    let free: Vec<u32> = (t + 1..=r + p - t).collect();
    let mut edges = Vec::new();
    for_each_combination(free.len(), (r - t) as usize, &mut |combo| {
        edges.push(Simplex::new(
            base.iter().copied().chain(combo.iter().map(|&i| free[i])),
        ));
    });
    Hypergraph::new(edges)
}

/// The r-uniform family over [2r-t] whose edges all contain the base [t]:
/// every A ∪ [t] with A an (r-t)-subset of {t+1, .., 2r-t}. Requires
/// 0 <= t < r.
pub fn family_h2(r: u32, t: u32) -> Result<Hypergraph> {
    if r == 0 || t >= r {
        return Err(Error::InvalidParams("family_h2 needs 0 <= t < r"));
    }
    let base: Vec<u32> = (1..=t).collect();
    let free: Vec<u32> = (t + 1..=2 * r - t).collect();
    let mut edges = Vec::new();
    for_each_combination(free.len(), (r - t) as usize, &mut |combo| {
        edges.push(Simplex::new(
            base.iter().copied().chain(combo.iter().map(|&i| free[i])),
        ));
    });
    Hypergraph::new(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied())
    }

    fn hg(edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(edges.iter().map(|e| s(e)).collect()).unwrap()
    }

    #[test]
    fn covering_number_examples() {
        assert_eq!(covering_number(&hg(&[&[1], &[2]]), 1), Ok(2));
        // Complete 2-uniform on 3 vertices: one vertex misses one edge.
        let k3 = complete_uniform(3, 2).unwrap();
        assert_eq!(covering_number(&k3, 1), Ok(2));
        assert_eq!(covering_number(&hg(&[&[1, 2], &[3, 4], &[1, 3]]), 1), Ok(2));
        // t larger than an edge: no transversal.
        assert_eq!(
            covering_number(&hg(&[&[1], &[2, 3]]), 2),
            Err(Error::NoTransversal)
        );
        assert_eq!(covering_number(&Hypergraph::new(Vec::new()).unwrap(), 1), Ok(0));
        // t = 2 needs both vertices of an edge.
        assert_eq!(covering_number(&hg(&[&[1, 2], &[2, 3]]), 2), Ok(3));
    }

    #[test]
    fn cov_complex_examples() {
        // K3, p = 1: each vertex covers the two edges through it.
        let k3 = complete_uniform(3, 2).unwrap();
        let x = cov_complex(&k3, 1, 1).unwrap();
        assert_eq!(x.facets().len(), 3);
        assert!(x.facets().iter().all(|f| f.size() == 2));
        assert_eq!(x.as_simplex_boundary(), Some(2));

        // p at least the covering number: the full simplex on all edges.
        let y = cov_complex(&k3, 2, 1).unwrap();
        assert_eq!(y.facets(), &[s(&[0, 1, 2])]);

        // Three singleton edges, p = 1, t = 1: three isolated vertices.
        let z = cov_complex(&hg(&[&[1], &[2], &[3]]), 1, 1).unwrap();
        assert_eq!(z.facets(), &[s(&[0]), s(&[1]), s(&[2])]);

        // p = 0: only the empty family qualifies.
        let w = cov_complex(&k3, 0, 1).unwrap();
        assert!(w.is_empty_complex());
    }

    #[test]
    fn cov_witnesses_cover_their_facets() {
        let h = hg(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4], &[1, 3]]);
        let (x, wits) = cov_complex_with_witnesses(&h, 2, 1).unwrap();
        assert_eq!(x.facets().len(), wits.len());
        for (facet, w) in x.facets().iter().zip(&wits) {
            let edges: Vec<Simplex> = facet
                .vertices()
                .iter()
                .map(|&i| h.edges()[i as usize].clone())
                .collect();
            assert!(w.covers(&edges));
            assert!(w.cover.size() <= 2);
        }
    }

    #[test]
    fn int_complex_examples() {
        // Octahedron: complete 2-uniform on 4 vertices, t = 1.
        let k4 = complete_uniform(4, 2).unwrap();
        let x = int_complex(&k4, 1).unwrap();
        assert_eq!(x.as_cross_polytope_boundary(), Some(3));

        // All edges through one vertex: a full simplex.
        let star = hg(&[&[1, 2], &[1, 3], &[1, 4]]);
        let y = int_complex(&star, 1).unwrap();
        assert_eq!(y.facets(), &[s(&[0, 1, 2])]);

        // Triangle edges plus a disjoint edge.
        let h = hg(&[&[1, 2], &[2, 3], &[1, 3], &[4, 5]]);
        let z = int_complex(&h, 1).unwrap();
        assert_eq!(z.facets(), &[s(&[0, 1, 2]), s(&[3])]);
    }

    #[test]
    fn int_complex_drops_small_edges() {
        let h = hg(&[&[1], &[1, 2], &[2, 3]]);
        let (x, dropped) = int_complex_with_dropped(&h, 2).unwrap();
        assert_eq!(dropped, alloc::vec![0]);
        // {1,2} and {2,3} share one vertex < 2: two isolated vertices.
        assert_eq!(x.facets(), &[s(&[1]), s(&[2])]);
    }

    #[test]
    fn disjointness_graph_examples() {
        let k4 = complete_uniform(4, 2).unwrap();
        let g = disjointness_graph(&k4, 1).unwrap();
        // Perfect matching: {12,34}, {13,24}, {14,23}.
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 3);
        let m: Vec<(u32, u32)> = g.edges().collect();
        assert_eq!(m, alloc::vec![(0, 5), (1, 4), (2, 3)]);

        let star = hg(&[&[1, 2], &[1, 3], &[1, 4]]);
        assert_eq!(disjointness_graph(&star, 1).unwrap().edge_count(), 0);

        let two = hg(&[&[1], &[2]]);
        let g2 = disjointness_graph(&two, 1).unwrap();
        assert_eq!(g2.edge_count(), 1);
    }

    #[test]
    fn int_equals_independence_of_disjointness() {
        for t in 1..=2 {
            let h = hg(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4], &[1, 3], &[5]]);
            let a = int_complex(&h, t).unwrap();
            let b = independence_complex(&disjointness_graph(&h, t).unwrap());
            assert_eq!(a, b, "t = {t}");
        }
    }

    #[test]
    fn independence_complex_examples() {
        let single = Graph::new(alloc::vec![1, 2], [(1, 2)]).unwrap();
        let x = independence_complex(&single);
        assert_eq!(x.facets(), &[s(&[1]), s(&[2])]);

        let edgeless = Graph::new(alloc::vec![1, 2, 3], []).unwrap();
        let y = independence_complex(&edgeless);
        assert_eq!(y.facets(), &[s(&[1, 2, 3])]);

        let c4 = Graph::new(alloc::vec![1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let z = independence_complex(&c4);
        assert_eq!(z.facets(), &[s(&[1, 3]), s(&[2, 4])]);

        let none = Graph::new(Vec::new(), []).unwrap();
        assert!(independence_complex(&none).is_empty_complex());
    }

    #[test]
    fn constructors() {
        let k4 = complete_uniform(4, 2).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.rank(), 2);
        assert_eq!(k4.edges()[0], s(&[1, 2]));

        let b22 = complete_r_partite(&[2, 2]).unwrap();
        assert_eq!(b22.edge_count(), 4);
        assert_eq!(
            b22.edges(),
            &[s(&[1, 3]), s(&[1, 4]), s(&[2, 3]), s(&[2, 4])]
        );
        assert_eq!(b22.parts().unwrap(), &[s(&[1, 2]), s(&[3, 4])]);

        let h1 = family_h1(2, 2, 1).unwrap();
        assert_eq!(h1.edges(), &[s(&[1, 2]), s(&[1, 3])]);
        assert!(family_h1(2, 1, 1).is_err());

        let h2 = family_h2(2, 1).unwrap();
        assert_eq!(h2.edges(), &[s(&[1, 2]), s(&[1, 3])]);
        // t = 0 reduces both families to complete uniform hypergraphs.
        assert_eq!(family_h1(2, 1, 0).unwrap(), complete_uniform(3, 2).unwrap());
        assert_eq!(family_h2(2, 0).unwrap(), complete_uniform(4, 2).unwrap());
    }

    #[test]
    fn constructor_validation() {
        assert!(complete_uniform(2, 3).is_err());
        assert!(complete_uniform(3, 0).is_err());
        assert!(complete_r_partite(&[]).is_err());
        assert!(complete_r_partite(&[2, 0]).is_err());
        assert!(family_h1(2, 1, 2).is_err());
        assert!(family_h2(1, 1).is_err());
        assert!(Hypergraph::new(alloc::vec![s(&[1]), s(&[1])]).is_err());
        assert!(Hypergraph::new(alloc::vec![Simplex::empty()]).is_err());
        assert!(Graph::new(alloc::vec![1], [(1, 1)]).is_err());
        assert!(Graph::new(alloc::vec![1], [(1, 2)]).is_err());
    }

    #[test]
    fn rpartite_sides_two_is_cross_polytope() {
        for r in 1..=3u32 {
            let sides = alloc::vec![2u32; r as usize];
            let h = complete_r_partite(&sides).unwrap();
            let x = int_complex(&h, 1).unwrap();
            assert_eq!(x.as_cross_polytope_boundary(), Some(1 << (r - 1)), "r = {r}");
        }
    }
}
