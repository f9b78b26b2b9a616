//! Dense bitmask views of complexes for the search-heavy code paths.
//!
//! Vertex ids are arbitrary u32s in the public API. Searches map the vertices
//! of one complex onto bit positions 0..n (n <= 128) once and work on u128
//! masks from then on.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::util::for_each_combination;

pub(crate) const MAX_DENSE_VERTICES: usize = 128;

#[derive(Clone, Debug)]
pub(crate) struct DenseMap {
    ids: Vec<Vertex>, // strictly increasing
}

impl DenseMap {
    /// None if there are more than 128 distinct vertices.
    pub fn try_new(mut ids: Vec<Vertex>) -> Option<Self> {
        ids.sort_unstable();
        ids.dedup();
        if ids.len() > MAX_DENSE_VERTICES {
            return None;
        }
        Some(DenseMap { ids })
    }

    pub fn from_complex(x: &SimplicialComplex) -> Option<Self> {
        Self::try_new(x.vertices().to_vec())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn bit_of(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn vertex_of(&self, bit: usize) -> Vertex {
        self.ids[bit]
    }

    /// None if some vertex of `s` is outside the map.
    pub fn mask_of(&self, s: &Simplex) -> Option<u128> {
        let mut m = 0u128;
        for &v in s.vertices() {
            m |= 1u128 << self.bit_of(v)?;
        }
        Some(m)
    }

    pub fn simplex_of(&self, mut mask: u128) -> Simplex {
        let mut verts = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let b = mask.trailing_zeros() as usize;
            verts.push(self.vertex_of(b));
            mask &= mask - 1;
        }
        Simplex::new(verts)
    }

    /// Maximal faces of `x` as masks: empty for the void complex, `[0]` for
    /// the empty complex.
    pub fn facet_masks(&self, x: &SimplicialComplex) -> Vec<u128> {
        if x.is_void() {
            return Vec::new();
        }
        if x.is_empty_complex() {
            return alloc::vec![0u128];
        }
        x.facets()
            .iter()
            .map(|f| self.mask_of(f).expect("facet inside vertex map"))
            .collect()
    }
}

#[inline]
pub(crate) fn is_submask(a: u128, b: u128) -> bool {
    a & !b == 0
}

/// Compares two vertex masks as sorted vertex lists (lexicographic with the
/// shorter prefix first), matching the order on `Simplex`.
pub(crate) fn lex_cmp(a: u128, b: u128) -> Ordering {
    let (mut a, mut b) = (a, b);
    while a != 0 && b != 0 {
        let ta = a.trailing_zeros();
        let tb = b.trailing_zeros();
        match ta.cmp(&tb) {
            Ordering::Equal => {
                a &= a - 1;
                b &= b - 1;
            }
            other => return other,
        }
    }
    a.count_ones().cmp(&b.count_ones())
}

/// Visits every submask of `mask` with at most `max_size` bits, by size and
/// within each size in lexicographic order of the bit combinations.
pub(crate) fn for_each_small_submask(mask: u128, max_size: usize, f: &mut dyn FnMut(u128)) {
    let mut bits: Vec<usize> = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        bits.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    for size in 0..=max_size.min(bits.len()) {
        for_each_combination(bits.len(), size, &mut |combo| {
            let mut sub = 0u128;
            for &i in combo {
                sub |= 1u128 << bits[i];
            }
            f(sub);
        });
    }
}

/// Streams every face of the complex given by `facet_masks` exactly once
/// (first-containment dedup), invoking `f(face, index_of_first_facet)`. The
/// empty face is visited iff `facet_masks` is nonempty.
pub(crate) fn for_each_face(facet_masks: &[u128], f: &mut dyn FnMut(u128, usize)) {
    for (i, &fi) in facet_masks.iter().enumerate() {
        let mut sub = fi;
        loop {
            if !facet_masks[..i].iter().any(|&fj| is_submask(sub, fj)) {
                f(sub, i);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & fi;
        }
    }
}
