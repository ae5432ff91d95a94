//! Backtracking search for injective homomorphisms between Cayley groups.
//!
//! A homomorphism is fixed by the images of a generating set. Images are
//! chosen generator by generator; after each choice the partial map is
//! propagated along the Cayley graph of the generators chosen so far and the
//! branch dies on the first conflict or collision.

use super::{invariants, CayleyGroup, SubsetMask};
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 16;

const UNSET: usize = usize::MAX;

/// Greedy generating set: scan elements by decreasing order and keep any
/// element outside the subgroup generated so far.
pub fn generating_set(g: &CayleyGroup) -> Vec<usize> {
    let orders = g.element_orders();
    let mut candidates: Vec<usize> = (1..g.order()).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let mut gens = vec![];
    let mut sub = SubsetMask::zero(g.order());
    for x in candidates {
        if sub.is_full() {
            break;
        }
        if !sub.contains(x) {
            gens.push(x);
            sub = super::subgroup_generated(g, &SubsetMask::from_elements(g.order(), gens.iter().copied()));
        }
    }
    gens
}

pub(crate) struct HomSearch<'a> {
    src: &'a CayleyGroup,
    dst: &'a CayleyGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl HomSearch<'_> {
    fn new<'a>(src: &'a CayleyGroup, dst: &'a CayleyGroup) -> HomSearch<'a> {
        let dst_orders = dst.element_orders();
        Self::with_filter(src, dst, |x, y| src.element_order(x) == dst_orders[y])
    }

    /// Search over generator images `y` of `x` allowed by `admissible(x, y)`.
    pub(crate) fn with_filter<'a>(
        src: &'a CayleyGroup,
        dst: &'a CayleyGroup,
        admissible: impl Fn(usize, usize) -> bool,
    ) -> HomSearch<'a> {
        let gens = generating_set(src);
        let candidates = gens
            .iter()
            .map(|&x| (0..dst.order()).filter(|&y| admissible(x, y)).collect())
            .collect();
        HomSearch {
            src,
            dst,
            gens,
            candidates,
        }
    }

    /// Propagates images of `gens[..=depth]` through the subgroup they
    /// generate. Returns false on inconsistency or non-injectivity.
    fn propagate(&self, images: &[usize], map: &mut [usize], used: &mut [bool]) -> bool {
        map.fill(UNSET);
        used.fill(false);
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for (k, &img) in images.iter().enumerate() {
                let y = self.src.op(x, self.gens[k]);
                let fy = self.dst.op(map[x], img);
                if map[y] == UNSET {
                    if used[fy] {
                        return false;
                    }
                    map[y] = fy;
                    used[fy] = true;
                    queue.push(y);
                } else if map[y] != fy {
                    return false;
                }
            }
        }
        true
    }

    /// Calls `visit` with every injective homomorphism found; stops when it
    /// returns false.
    pub(crate) fn run(&self, mut visit: impl FnMut(&[usize]) -> bool) {
        let n = self.src.order();
        if self.gens.is_empty() {
            visit(&[0]);
            return;
        }
        let mut images = Vec::with_capacity(self.gens.len());
        let mut map = vec![UNSET; n];
        let mut used = vec![false; self.dst.order()];
        self.rec(&mut images, &mut map, &mut used, &mut visit);
    }

    fn rec(
        &self,
        images: &mut Vec<usize>,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let depth = images.len();
        for &c in &self.candidates[depth] {
            images.push(c);
            if self.propagate(images, map, used) {
                if depth + 1 == self.gens.len() {
                    if !visit(map) {
                        return false;
                    }
                } else if !self.rec(images, map, used, visit) {
                    return false;
                }
            }
            images.pop();
        }
        true
    }
}

/// All automorphisms of `g`, sorted lexicographically as permutations of
/// the elements. Orders above [`DEFAULT_AUTOMORPHISM_BOUND`] are refused.
pub fn automorphisms(g: &CayleyGroup) -> Result<Vec<Permutation>> {
    automorphisms_bounded(g, DEFAULT_AUTOMORPHISM_BOUND)
}

pub fn automorphisms_bounded(g: &CayleyGroup, bound: usize) -> Result<Vec<Permutation>> {
    if g.order() > bound {
        return Err(Error::BoundExceeded {
            order: g.order(),
            bound,
        });
    }
    let search = HomSearch::new(g, g);
    let mut out = vec![];
    search.run(|map| {
        debug_assert!(g.is_homomorphism_to(g, map));
        out.push(Permutation::from_images_unchecked(map.to_vec()));
        true
    });
    out.sort();
    Ok(out)
}

/// An isomorphism `g -> h` as a permutation of element labels, if one exists.
pub fn are_isomorphic_groups(g: &CayleyGroup, h: &CayleyGroup) -> Option<Permutation> {
    if !invariants(g).same_invariants(&invariants(h)) {
        return None;
    }
    let search = HomSearch::new(g, h);
    let mut found = None;
    search.run(|map| {
        found = Some(map.to_vec());
        false
    });
    let map = found?;
    assert!(g.is_homomorphism_to(h, &map), "isomorphism witness failed verification");
    Some(Permutation::from_images_unchecked(map))
}
