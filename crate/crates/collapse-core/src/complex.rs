//! Simplicial complexes stored as facet antichains.
//!
//! A complex is closed downward, so the inclusion-maximal faces (facets)
//! determine it. Two degenerate complexes are kept distinct:
//!
//! * the void complex, which has no faces at all, and
//! * the empty complex `{∅}`, whose only face is the empty simplex.
//!
//! Both are stored with an empty facet list; a flag tells them apart. The
//! facet list never contains the empty simplex.

use alloc::vec::Vec;
use core::fmt;

use crate::dense::{self, DenseMap};
use crate::{Error, Result};

pub type Vertex = u32;

/// A finite set of vertices, stored strictly increasing.
///
/// The derived `Ord` is lexicographic on the vertex list with the shorter
/// prefix first, which is the order used for facet lists and face output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Simplex {
    verts: Vec<Vertex>,
}

impl Simplex {
    pub fn new(verts: impl IntoIterator<Item = Vertex>) -> Self {
        let mut verts: Vec<Vertex> = verts.into_iter().collect();
        verts.sort_unstable();
        verts.dedup();
        Simplex { verts }
    }

    pub fn empty() -> Self {
        Simplex { verts: Vec::new() }
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        self.verts.len()
    }

    /// Geometric dimension: `size - 1`, so the empty simplex has dimension -1.
    pub fn dim(&self) -> i64 {
        self.verts.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        if self.verts.len() > other.verts.len() {
            return false;
        }
        let mut it = other.verts.iter();
        'outer: for v in &self.verts {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersection_size(&self, other: &Simplex) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.verts.len() && j < other.verts.len() {
            match self.verts[i].cmp(&other.verts[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn intersects(&self, other: &Simplex) -> bool {
        self.intersection_size(other) > 0
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.verts.iter().chain(other.verts.iter()).copied())
    }

    /// Self with the vertex removed (identity if absent).
    pub fn without(&self, v: Vertex) -> Simplex {
        Simplex {
            verts: self.verts.iter().copied().filter(|&w| w != v).collect(),
        }
    }

    /// Self with the vertex added.
    pub fn with(&self, v: Vertex) -> Simplex {
        if self.contains(v) {
            return self.clone();
        }
        let mut verts = self.verts.clone();
        verts.push(v);
        verts.sort_unstable();
        Simplex { verts }
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Vertex> for Simplex {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Simplex::new(iter)
    }
}

/// A simplicial complex, determined by its facet antichain.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_set: Vec<Vertex>, // sorted union of the facets
    facets: Vec<Simplex>,    // sorted antichain, empty simplex never stored
    void: bool,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex {
            vertex_set: Vec::new(),
            facets: Vec::new(),
            void: true,
        }
    }

    /// The empty complex `{∅}`: one face, the empty simplex.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertex_set: Vec::new(),
            facets: Vec::new(),
            void: false,
        }
    }

    /// The complex generated by the given faces: all subsets of the
    /// candidates. No candidates at all gives the void complex. Dominated
    /// candidates and duplicates are absorbed.
    pub fn from_facets(candidates: impl IntoIterator<Item = Simplex>) -> Self {
        let mut cands: Vec<Simplex> = candidates.into_iter().collect();
        if cands.is_empty() {
            return Self::void();
        }
        cands.sort();
        cands.dedup();
        let facets: Vec<Simplex> = cands
            .iter()
            .filter(|c| {
                !cands
                    .iter()
                    .any(|other| *c != other && c.is_subset_of(other))
            })
            .cloned()
            .collect();
        if facets.len() == 1 && facets[0].is_empty() {
            return Self::empty();
        }
        let mut vertex_set: Vec<Vertex> = facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        vertex_set.sort_unstable();
        vertex_set.dedup();
        SimplicialComplex {
            vertex_set,
            facets,
            void: false,
        }
    }

    /// The full simplex on vertices 1..=n (all subsets). n = 0 gives `{∅}`.
    pub fn full_simplex(n: u32) -> Self {
        Self::from_facets([Simplex::new(1..=n)])
    }

    /// The boundary of the simplex on vertices 1..=n: all proper subsets.
    /// The result has dimension n-2. n = 0 gives the void complex.
    pub fn simplex_boundary(n: u32) -> Self {
        if n == 0 {
            return Self::void();
        }
        Self::from_facets((1..=n).map(|skip| Simplex::new((1..=n).filter(|&v| v != skip))))
    }

    /// The boundary of the k-dimensional cross-polytope: vertices 1..=2k in
    /// antipodal pairs {2i-1, 2i}, facets the 2^k sets picking one vertex
    /// from each pair. k = 0 gives `{∅}`.
    pub fn cross_polytope_boundary(k: u32) -> Self {
        let k = k as usize;
        let mut facets = Vec::with_capacity(1 << k);
        for choice in 0u64..(1 << k) {
            facets.push(Simplex::new((0..k).map(|i| {
                let base = 2 * i as u32 + 1;
                if choice >> i & 1 == 1 {
                    base + 1
                } else {
                    base
                }
            })));
        }
        Self::from_facets(facets)
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// True for `{∅}` (the complex whose only face is the empty simplex).
    pub fn is_empty_complex(&self) -> bool {
        !self.void && self.facets.is_empty()
    }

    /// Sorted union of the facets.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertex_set
    }

    /// The nonempty facets, sorted. Empty for both the void complex and `{∅}`;
    /// use `maximal_faces` to tell those apart.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// The inclusion-maximal faces: `[]` for void, `[∅]` for `{∅}`.
    pub fn maximal_faces(&self) -> Vec<Simplex> {
        if self.void {
            Vec::new()
        } else if self.facets.is_empty() {
            alloc::vec![Simplex::empty()]
        } else {
            self.facets.clone()
        }
    }

    /// Largest facet size (0 for void and `{∅}`).
    pub fn rank(&self) -> usize {
        self.facets.iter().map(Simplex::size).max().unwrap_or(0)
    }

    /// Dimension of the complex: None for void, -1 for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        if self.void {
            None
        } else {
            Some(self.rank() as i64 - 1)
        }
    }

    pub fn is_face(&self, s: &Simplex) -> bool {
        if self.void {
            return false;
        }
        if s.is_empty() {
            return true;
        }
        self.facets.iter().any(|f| s.is_subset_of(f))
    }

    /// The subcomplex of faces avoiding `v` (identity if `v` is absent).
    pub fn deletion(&self, v: Vertex) -> Self {
        Self::from_facets(self.maximal_faces().into_iter().map(|f| f.without(v)))
    }

    /// The link of `v`: all faces `s` with `v ∉ s` and `s ∪ {v}` a face.
    pub fn link(&self, v: Vertex) -> Result<Self> {
        if self.vertex_set.binary_search(&v).is_err() {
            return Err(Error::UnknownVertex(v));
        }
        Ok(Self::from_facets(
            self.facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.without(v)),
        ))
    }

    /// Euler characteristic: the alternating sum of face counts over the
    /// nonempty faces. Undefined (error) on the void complex; 0 for `{∅}`.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if self.void {
            return Err(Error::VoidComplex);
        }
        let map = DenseMap::from_complex(self)
            .ok_or(Error::InvalidParams("more than 128 vertices"))?;
        let masks = map.facet_masks(self);
        let mut chi: i64 = 0;
        dense::for_each_face(&masks, &mut |face, _| {
            let k = face.count_ones();
            if k > 0 {
                chi += if k % 2 == 1 { 1 } else { -1 };
            }
        });
        Ok(chi)
    }

    /// Every face including the empty one, sorted. Empty for the void complex.
    pub fn faces(&self) -> Vec<Simplex> {
        if self.void {
            return Vec::new();
        }
        let map = DenseMap::from_complex(self).expect("face enumeration needs <= 128 vertices");
        let masks = map.facet_masks(self);
        let mut out = Vec::new();
        dense::for_each_face(&masks, &mut |face, _| out.push(map.simplex_of(face)));
        out.sort();
        out
    }

    /// Number of faces including the empty one; 0 for the void complex.
    pub fn face_count(&self) -> u64 {
        if self.void {
            return 0;
        }
        let map = DenseMap::from_complex(self).expect("face enumeration needs <= 128 vertices");
        let masks = map.facet_masks(self);
        let mut n = 0u64;
        dense::for_each_face(&masks, &mut |_, _| n += 1);
        n
    }

    /// Applies a vertex relabeling to every face. `f` must be injective on
    /// the vertex set.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        if self.void {
            return Self::void();
        }
        Self::from_facets(
            self.maximal_faces()
                .into_iter()
                .map(|face| Simplex::new(face.vertices().iter().map(|&v| f(v)))),
        )
    }

    /// If this complex is the boundary of a simplex (all proper subsets of a
    /// vertex set of size n >= 2), returns the dimension n - 1 of that
    /// simplex. The two-point complex counts: it is the boundary of a segment.
    pub fn as_simplex_boundary(&self) -> Option<u32> {
        let n = self.vertex_set.len();
        if n < 2 || self.facets.len() != n {
            return None;
        }
        if self.facets.iter().all(|f| f.size() == n - 1) {
            // n distinct (n-1)-subsets of an n-set are all of them.
            Some(n as u32 - 1)
        } else {
            None
        }
    }

    /// If this complex is the boundary of a k-dimensional cross-polytope
    /// (k >= 1 antipodal vertex pairs, facets exactly the 2^k transversals),
    /// returns k.
    pub fn as_cross_polytope_boundary(&self) -> Option<u32> {
        let nv = self.vertex_set.len();
        if nv == 0 || nv % 2 != 0 {
            return None;
        }
        let k = nv / 2;
        if k >= 64
            || self.facets.len() != 1usize << k
            || !self.facets.iter().all(|f| f.size() == k)
        {
            return None;
        }
        let map = DenseMap::from_complex(self).expect("at most 128 vertices here");
        let masks = map.facet_masks(self);
        // Partner of v: the unique vertex sharing no facet with v.
        let mut pair_of = alloc::vec![usize::MAX; nv];
        for a in 0..nv {
            let mut partner = None;
            for b in 0..nv {
                if a == b {
                    continue;
                }
                let both = (1u128 << a) | (1u128 << b);
                if !masks.iter().any(|&f| dense::is_submask(both, f)) {
                    if partner.is_some() {
                        return None;
                    }
                    partner = Some(b);
                }
            }
            pair_of[a] = partner?;
        }
        for a in 0..nv {
            if pair_of[pair_of[a]] != a {
                return None;
            }
        }
        // Each facet picks exactly one vertex of each pair; with 2^k distinct
        // facets of size k this makes the complex the full transversal set.
        for &f in &masks {
            for a in 0..nv {
                let hits = (f >> a & 1) + (f >> pair_of[a] & 1);
                if hits != 1 {
                    return None;
                }
            }
        }
        Some(k as u32)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return write!(f, "Complex(void)");
        }
        if self.facets.is_empty() {
            return write!(f, "Complex(empty)");
        }
        write!(f, "Complex[")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet:?}")?;
        }
        write!(f, "]")
    }
}
