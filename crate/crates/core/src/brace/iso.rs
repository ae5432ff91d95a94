//! Brace isomorphism invariants and witnesses.

use super::{socle, SkewBrace};
use crate::group::{self, GroupDescriptor, HomSearch};
use crate::ideal;
use crate::perm::Permutation;

/// Isomorphism invariants of a skew brace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraceDescriptor {
    pub order: usize,
    pub additive: GroupDescriptor,
    pub multiplicative: GroupDescriptor,
    pub socle_size: usize,
    pub ideal_count: usize,
    /// Sorted sizes of the principal ideals `<a>`, one entry per element.
    pub principal_ideal_sizes: Vec<usize>,
    pub classical: bool,
    pub trivial: bool,
    pub two_sided: bool,
    pub star_associative: bool,
}

impl BraceDescriptor {
    /// `+ <additive> o <multiplicative>`, using catalog names when known.
    pub fn short_label(&self) -> String {
        format!("+{} o{}", self.additive.label(), self.multiplicative.label())
    }
}

pub fn describe(a: &SkewBrace) -> BraceDescriptor {
    let principal = ideal::principal_ideals(a);
    let mut sizes: Vec<usize> = principal.iter().map(|m| m.len()).collect();
    sizes.sort_unstable();
    BraceDescriptor {
        order: a.order(),
        additive: group::describe(a.additive()),
        multiplicative: group::describe(a.multiplicative()),
        socle_size: socle(a).len(),
        ideal_count: ideal::ideals_from_principal(a, &principal).len(),
        principal_ideal_sizes: sizes,
        classical: a.is_classical(),
        trivial: a.is_trivial(),
        two_sided: a.is_two_sided(),
        star_associative: a.is_star_associative(),
    }
}

/// Per-element invariants preserved by brace isomorphisms.
fn element_profile(a: &SkewBrace) -> Vec<(usize, usize, usize)> {
    let principal = ideal::principal_ideals(a);
    (0..a.order())
        .map(|x| {
            (
                a.additive().element_order(x),
                a.multiplicative().element_order(x),
                principal[x].len(),
            )
        })
        .collect()
}

/// A bijection `phi` with `phi(x + y) = phi(x) + phi(y)` and
/// `phi(x o y) = phi(x) o phi(y)`, if one exists.
pub fn are_isomorphic_braces(a: &SkewBrace, b: &SkewBrace) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    if describe(a) != describe(b) {
        return None;
    }
    isomorphism_with_equal_descriptors(a, b)
}

/// Witness search that skips the descriptor prefilter; callers must already
/// know the descriptors agree.
pub(crate) fn isomorphism_with_equal_descriptors(a: &SkewBrace, b: &SkewBrace) -> Option<Permutation> {
    let pa = element_profile(a);
    let pb = element_profile(b);
    let search = HomSearch::with_filter(a.multiplicative(), b.multiplicative(), |x, y| pa[x] == pb[y]);
    let mut found = None;
    search.run(|map| {
        if a.additive().is_homomorphism_to(b.additive(), map) {
            found = Some(map.to_vec());
            false
        } else {
            true
        }
    });
    let map = found?;
    assert!(
        a.additive().is_homomorphism_to(b.additive(), &map)
            && a.multiplicative().is_homomorphism_to(b.multiplicative(), &map),
        "brace isomorphism witness failed verification"
    );
    Some(Permutation::from_images_unchecked(map))
}
