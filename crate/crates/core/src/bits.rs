//! Bitset abstraction shared by the search kernels.
//!
//! Hot loops (maximal independent set enumeration, coloring, clique
//! partition search) are generic over [`Bits`] so that graphs with at most
//! 64 vertices run on a bare `u64` while larger graphs fall back to the
//! multi-word [`VertexSet`](crate::VertexSet).

use std::fmt::Debug;

pub trait Bits: Clone + Eq + Debug {
    /// Empty set over a universe of `n` vertices.
    fn empty(n: usize) -> Self;
    /// The set `{0, .., n-1}`.
    fn full(n: usize) -> Self;
    fn contains(&self, v: usize) -> bool;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn and(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn is_empty(&self) -> bool;
    fn count(&self) -> usize;
    /// Smallest member.
    fn first(&self) -> Option<usize>;
    fn intersects(&self, other: &Self) -> bool;
    fn is_subset(&self, other: &Self) -> bool;
    fn for_each(&self, f: impl FnMut(usize));

    fn members(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count());
        self.for_each(|v| out.push(v));
        out
    }
}

impl Bits for u64 {
    #[inline]
    fn empty(n: usize) -> Self {
        debug_assert!(n <= 64);
        0
    }

    #[inline]
    fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < 64 && (self >> v) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }

    #[inline]
    fn and(&self, other: &Self) -> Self {
        self & other
    }

    #[inline]
    fn or(&self, other: &Self) -> Self {
        self | other
    }

    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }

    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        if *self == 0 {
            None
        } else {
            Some(self.trailing_zeros() as usize)
        }
    }

    #[inline]
    fn intersects(&self, other: &Self) -> bool {
        self & other != 0
    }

    #[inline]
    fn is_subset(&self, other: &Self) -> bool {
        self & !other == 0
    }

    #[inline]
    fn for_each(&self, mut f: impl FnMut(usize)) {
        let mut w = *self;
        while w != 0 {
            f(w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
}
