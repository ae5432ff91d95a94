//! Skew braces of a given order up to isomorphism.
//!
//! A brace with additive group `A` is a map `lambda: A -> Aut(A)` whose graph
//! `{(x, lambda_x)}` is a subgroup of the holomorph `A x| Aut(A)`, with
//! product `(x, f)(y, g) = (x + f(y), f g)`. The search grows such a
//! subgroup one generator at a time: the next generator covers the smallest
//! element not yet covered, and the generated subgroup must keep distinct
//! first coordinates. Candidates for `lambda_x` are reduced to orbits under
//! conjugation by automorphisms that fix `x` and centralize everything
//! chosen so far; isomorphic survivors are removed afterwards.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::brace::{self, BraceDescriptor, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{self, CayleyGroup};

pub const ENUMERATION_MAX_ORDER: usize = 16;

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Reduce candidate automorphisms to conjugation orbits.
    pub prune_symmetry: bool,
    /// Largest additive group whose automorphisms are enumerated.
    pub automorphism_bound: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune_symmetry: true,
            automorphism_bound: ENUMERATION_MAX_ORDER,
        }
    }
}

/// `Aut(A)` as permutations of the elements with a lookup index.
struct AutTable<'a> {
    add: &'a CayleyGroup,
    perms: Vec<Box<[u8]>>,
    index: HashMap<Box<[u8]>, u32>,
}

impl<'a> AutTable<'a> {
    fn new(add: &'a CayleyGroup, bound: usize) -> Result<Self> {
        if add.order() > u8::MAX as usize + 1 {
            return Err(Error::BoundExceeded {
                order: add.order(),
                bound: u8::MAX as usize + 1,
            });
        }
        let perms: Vec<Box<[u8]>> = group::automorphisms_bounded(add, bound)?
            .iter()
            .map(|p| p.images().iter().map(|&x| x as u8).collect())
            .collect();
        let index = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        Ok(AutTable { add, perms, index })
    }

    fn identity(&self) -> u32 {
        // automorphisms are sorted, so the identity comes first
        0
    }

    #[inline]
    fn apply(&self, f: u32, x: usize) -> usize {
        self.perms[f as usize][x] as usize
    }

    fn lookup(&self, images: &[u8]) -> u32 {
        *self.index.get(images).expect("closed under composition")
    }

    /// `z -> f(g(z))`
    fn compose(&self, f: u32, g: u32, buf: &mut [u8]) -> u32 {
        let (f, g) = (&self.perms[f as usize], &self.perms[g as usize]);
        for (z, slot) in buf.iter_mut().enumerate() {
            *slot = f[g[z] as usize];
        }
        self.lookup(buf)
    }

    /// `phi f phi^-1`
    fn conjugate(&self, phi: u32, f: u32, buf: &mut [u8]) -> u32 {
        let (p, f) = (&self.perms[phi as usize], &self.perms[f as usize]);
        for z in 0..p.len() {
            buf[p[z] as usize] = p[f[z] as usize];
        }
        self.lookup(buf)
    }
}

/// A partial brace: a subgroup of the holomorph projecting injectively into
/// `A`, with the symmetries still usable for pruning.
#[derive(Clone)]
struct SearchState {
    /// `lambda[x]` for covered `x`, else `UNSET`.
    lambda: Vec<u32>,
    covered: usize,
    gens: Vec<(usize, u32)>,
    symmetry: Vec<u32>,
}

impl SearchState {
    fn root(auts: &AutTable) -> Self {
        let n = auts.add.order();
        let mut lambda = vec![UNSET; n];
        lambda[0] = auts.identity();
        SearchState {
            lambda,
            covered: 1,
            gens: vec![],
            symmetry: (0..auts.perms.len() as u32).collect(),
        }
    }

    fn next_uncovered(&self) -> Option<usize> {
        self.lambda.iter().position(|&f| f == UNSET)
    }

    /// The subgroup generated by the current one and `(x, f)`, if it still
    /// has distinct first coordinates and order dividing `n`.
    fn extend(&self, auts: &AutTable, x: usize, f: u32, buf: &mut [u8]) -> Option<SearchState> {
        let n = auts.add.order();
        let mut gens = self.gens.clone();
        gens.push((x, f));
        let mut lambda = vec![UNSET; n];
        lambda[0] = auts.identity();
        let mut elems = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let y = elems[i];
            let a = lambda[y];
            for &(gx, gf) in &gens {
                let z = auts.add.op(y, auts.apply(a, gx));
                let h = auts.compose(a, gf, buf);
                if lambda[z] == UNSET {
                    lambda[z] = h;
                    elems.push(z);
                } else if lambda[z] != h {
                    return None;
                }
            }
            i += 1;
        }
        if !n.is_multiple_of(elems.len()) {
            return None;
        }
        Some(SearchState {
            lambda,
            covered: elems.len(),
            gens,
            symmetry: vec![],
        })
    }
}

/// Orbit representatives of `candidates` under conjugation by `group`.
fn orbit_representatives(auts: &AutTable, candidates: &[u32], group: &[u32], buf: &mut [u8]) -> Vec<u32> {
    let mut seen = vec![false; auts.perms.len()];
    let mut reps = vec![];
    for &c in candidates {
        if seen[c as usize] {
            continue;
        }
        reps.push(c);
        for &phi in group {
            seen[auts.conjugate(phi, c, buf) as usize] = true;
        }
    }
    reps
}

/// Children of a node: the candidate generators covering the next element.
fn children(auts: &AutTable, state: &SearchState, opts: &SearchOptions) -> Vec<SearchState> {
    let n = auts.add.order();
    let Some(x) = state.next_uncovered() else {
        return vec![];
    };
    let mut buf = vec![0u8; n];
    let covered: Vec<usize> = (0..n).filter(|&y| state.lambda[y] != UNSET).collect();
    // (x, f) H must avoid H, so x + f(y) is uncovered for covered y
    let candidates: Vec<u32> = (0..auts.perms.len() as u32)
        .filter(|&f| covered.iter().all(|&y| state.lambda[auts.add.op(x, auts.apply(f, y))] == UNSET))
        .collect();
    let stabilizer: Vec<u32> = if opts.prune_symmetry {
        state.symmetry.iter().copied().filter(|&phi| auts.apply(phi, x) == x).collect()
    } else {
        vec![]
    };
    let reps = if opts.prune_symmetry {
        orbit_representatives(auts, &candidates, &stabilizer, &mut buf)
    } else {
        candidates
    };
    reps.into_iter()
        .filter_map(|f| {
            let mut child = state.extend(auts, x, f, &mut buf)?;
            child.symmetry = stabilizer
                .iter()
                .copied()
                .filter(|&phi| auts.conjugate(phi, f, &mut buf) == f)
                .collect();
            Some(child)
        })
        .collect()
}

fn search(auts: &AutTable, state: SearchState, opts: &SearchOptions, out: &mut Vec<Vec<u32>>) {
    if state.covered == auts.add.order() {
        out.push(state.lambda);
        return;
    }
    for child in children(auts, &state, opts) {
        search(auts, child, opts, out);
    }
}

fn brace_from_lambda(auts: &AutTable, lambda: &[u32]) -> SkewBrace {
    let add = auts.add;
    let n = add.order();
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = add.op(x, auts.apply(lambda[x], y));
        }
    }
    let mul = CayleyGroup::validate_flat(n, mul).expect("regular subgroup yields a group");
    SkewBrace::new(add.clone(), mul).expect("regular subgroup yields a skew brace")
}

/// Every brace found by the search, before removing isomorphic copies.
pub fn raw_braces_with_additive_group(add: &CayleyGroup, opts: &SearchOptions) -> Result<Vec<SkewBrace>> {
    let auts = AutTable::new(add, opts.automorphism_bound)?;
    let root = SearchState::root(&auts);
    let lambdas: Vec<Vec<u32>> = if root.covered == add.order() {
        vec![root.lambda]
    } else {
        children(&auts, &root, opts)
            .into_par_iter()
            .flat_map_iter(|child| {
                let mut out = vec![];
                search(&auts, child, opts, &mut out);
                out
            })
            .collect()
    };
    Ok(lambdas.iter().map(|l| brace_from_lambda(&auts, l)).collect())
}

/// All skew braces with additive group `add`, up to isomorphism, sorted by
/// descriptor then tables.
pub fn braces_with_additive_group(add: &CayleyGroup) -> Result<Vec<SkewBrace>> {
    braces_with_additive_group_opts(add, &SearchOptions::default())
}

pub fn braces_with_additive_group_opts(add: &CayleyGroup, opts: &SearchOptions) -> Result<Vec<SkewBrace>> {
    let auts = AutTable::new(add, opts.automorphism_bound)?;
    let reps = dedup_up_to_iso(raw_braces_with_additive_group(add, opts)?);
    let mut out: Vec<(BraceDescriptor, SkewBrace)> = reps
        .into_par_iter()
        .map(|b| {
            let c = canonical_form(&auts, &b);
            (brace::describe(&c), c)
        })
        .collect();
    out.sort_by(|(d1, b1), (d2, b2)| d1.cmp(d2).then_with(|| b1.table_key().cmp(&b2.table_key())));
    Ok(out.into_iter().map(|(_, b)| b).collect())
}

/// The isomorphic copy with the same additive table and the smallest
/// multiplicative table. Isomorphisms between braces sharing an additive
/// table are exactly the automorphisms of that table.
fn canonical_form(auts: &AutTable, b: &SkewBrace) -> SkewBrace {
    let n = b.order();
    let mul = b.multiplicative();
    let mut best: Option<Vec<usize>> = None;
    let mut table = vec![0; n * n];
    for phi in &auts.perms {
        for x in 0..n {
            for y in 0..n {
                table[phi[x] as usize * n + phi[y] as usize] = phi[mul.op(x, y)] as usize;
            }
        }
        if best.as_ref().is_none_or(|t| table < *t) {
            best = Some(table.clone());
        }
    }
    let mul = CayleyGroup::from_flat_unchecked(n, best.expect("Aut(A) is not empty"));
    SkewBrace::new_unchecked(b.additive().clone(), mul)
}

/// Keeps one brace per isomorphism class: the one with the smallest tables.
/// Output is sorted by descriptor, then tables.
pub fn dedup_up_to_iso(list: Vec<SkewBrace>) -> Vec<SkewBrace> {
    let described: Vec<(BraceDescriptor, SkewBrace)> =
        list.into_par_iter().map(|b| (brace::describe(&b), b)).collect();
    let mut buckets: BTreeMap<BraceDescriptor, Vec<SkewBrace>> = BTreeMap::new();
    for (d, b) in described {
        buckets.entry(d).or_default().push(b);
    }
    let buckets: Vec<Vec<SkewBrace>> = buckets.into_values().collect();
    buckets
        .into_par_iter()
        .map(|mut bucket| {
            bucket.sort_by(|a, b| a.table_key().cmp(&b.table_key()));
            bucket.dedup();
            let mut reps: Vec<SkewBrace> = vec![];
            for b in bucket {
                if !reps
                    .iter()
                    .any(|r| brace::isomorphism_with_equal_descriptors(r, &b).is_some())
                {
                    reps.push(b);
                }
            }
            reps
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// All skew braces of order `n` (only those with abelian additive group when
/// `classical_only`), sorted by descriptor then tables.
pub fn enumerate_order(n: usize, classical_only: bool) -> Result<Vec<SkewBrace>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if n > ENUMERATION_MAX_ORDER {
        return Err(Error::BoundExceeded {
            order: n,
            bound: ENUMERATION_MAX_ORDER,
        });
    }
    let groups: Vec<CayleyGroup> = group::catalog_groups(n)?
        .into_iter()
        .filter(|g| !classical_only || g.is_abelian())
        .collect();
    let per_group: Vec<Vec<SkewBrace>> = groups
        .par_iter()
        .map(braces_with_additive_group)
        .collect::<Result<_>>()?;
    let mut all: Vec<(BraceDescriptor, SkewBrace)> = per_group
        .into_iter()
        .flatten()
        .map(|b| (brace::describe(&b), b))
        .collect();
    all.sort_by(|(d1, b1), (d2, b2)| d1.cmp(d2).then_with(|| b1.table_key().cmp(&b2.table_key())));
    // braces over non-isomorphic additive groups are never isomorphic
    debug_assert!(all
        .windows(2)
        .all(|w| w[0].0.additive != w[1].0.additive || w[0].0 != w[1].0 || w[0].1 != w[1].1));
    Ok(all.into_iter().map(|(_, b)| b).collect())
}

/// `(n, s(n), b(n))` for a list of braces of order `n`.
pub fn census_counts(braces: &[SkewBrace]) -> (usize, usize) {
    (braces.len(), braces.iter().filter(|b| b.is_classical()).count())
}
