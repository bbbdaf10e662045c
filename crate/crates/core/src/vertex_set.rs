use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A subset of the vertices `0..n` of some graph.
///
/// Storage is inline for up to 128 vertices and spills to the heap beyond
/// that. The universe size `n` travels with the set so that membership can
/// be checked against the graph it is used with.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: SmallVec<[u64; 2]>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: SmallVec::from_elem(0, word_count(n)),
        }
    }

    /// Builds a set from explicit members, rejecting any member `>= n`.
    pub fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = VertexSet::new(n);
        for v in members {
            if v >= n {
                return Err(Error::Domain(format!(
                    "vertex {v} out of range for a graph with {n} vertices"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64 && (n == 64 || mask >> n == 0));
        let mut s = VertexSet::new(n);
        if n > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// The low 64 members as a mask. Only meaningful when `universe() <= 64`.
    pub fn to_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// Size of the universe this set is bound to.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.count()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn complement(&self) -> Self {
        VertexSet::full(self.n).and_not(self)
    }
}

impl Bits for VertexSet {
    fn empty(n: usize) -> Self {
        VertexSet::new(n)
    }

    fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(n);
            *w = <u64 as Bits>::full(hi - lo);
        }
        s
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < self.n && (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    fn and(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    fn or(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    fn and_not(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn for_each(&self, mut f: impl FnMut(usize)) {
        for v in self.iter() {
            f(v);
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
