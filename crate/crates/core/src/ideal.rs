//! Left ideals, ideals and the ideal lattice of a skew brace, plus quotients
//! and sub-braces.

use std::collections::BTreeSet;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{self, CayleyGroup};
use crate::mask::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealKind {
    LeftIdeal,
    Ideal,
}

/// An ideal or left ideal together with the brace it carries.
#[derive(Debug, Clone)]
pub struct IdealRecord {
    pub mask: SubsetMask,
    pub kind: IdealKind,
    /// The sub-brace on `mask`, relabelled so that the `k`-th smallest
    /// member becomes `k`.
    pub as_brace: SkewBrace,
}

fn lambda_invariant(a: &SkewBrace, s: &SubsetMask) -> bool {
    s.iter()
        .all(|x| (0..a.order()).all(|b| s.contains(a.lambda_at(b, x))))
}

/// Additive subgroup stable under every `lambda_a`.
pub fn is_left_ideal(a: &SkewBrace, s: &SubsetMask) -> bool {
    group::is_subgroup(a.additive(), s) && lambda_invariant(a, s)
}

/// Ideal test through the additive characterization: a normal subgroup of
/// `(A, +)` with `a o I = I o a` and `lambda_a(I) = I` for all `a`.
pub fn is_ideal(a: &SkewBrace, s: &SubsetMask) -> bool {
    let verdict = is_ideal_additive(a, s);
    debug_assert_eq!(verdict, is_ideal_by_definition(a, s), "ideal criteria disagree on {s}");
    verdict
}

fn is_ideal_additive(a: &SkewBrace, s: &SubsetMask) -> bool {
    group::is_subgroup(a.additive(), s)
        && group::is_normal_unchecked(a.additive(), s)
        && lambda_invariant(a, s)
        && (0..a.order()).all(|x| {
            let left = SubsetMask::from_elements(a.order(), s.iter().map(|y| a.circ(x, y)));
            s.iter().all(|y| left.contains(a.circ(y, x)))
        })
}

/// The original definition: a normal subgroup of `(A, o)` with
/// `lambda_a(I) = I` and `a + I = I + a` for all `a`.
pub fn is_ideal_by_definition(a: &SkewBrace, s: &SubsetMask) -> bool {
    group::is_subgroup(a.multiplicative(), s)
        && group::is_normal_unchecked(a.multiplicative(), s)
        && lambda_invariant(a, s)
        && (0..a.order()).all(|x| {
            let left = SubsetMask::from_elements(a.order(), s.iter().map(|y| a.plus(x, y)));
            s.iter().all(|y| left.contains(a.plus(y, x)))
        })
}

/// Smallest ideal containing `s` (and `0`).
pub fn ideal_closure(a: &SkewBrace, s: &SubsetMask) -> SubsetMask {
    let n = a.order();
    let mut out = SubsetMask::zero(n);
    let mut members = vec![0];
    let mut queue: Vec<usize> = vec![];
    for x in s.iter() {
        if out.insert(x) {
            members.push(x);
            queue.push(x);
        }
    }
    let push = |y: usize, out: &mut SubsetMask, members: &mut Vec<usize>, queue: &mut Vec<usize>| {
        if out.insert(y) {
            members.push(y);
            queue.push(y);
        }
    };
    while let Some(x) = queue.pop() {
        let mut k = 0;
        while k < members.len() {
            let y = members[k];
            push(a.plus(x, y), &mut out, &mut members, &mut queue);
            push(a.plus(y, x), &mut out, &mut members, &mut queue);
            k += 1;
        }
        for b in 0..n {
            push(a.lambda_at(b, x), &mut out, &mut members, &mut queue);
            push(a.minus(a.plus(b, x), b), &mut out, &mut members, &mut queue);
            push(a.circ(a.circ(b, x), a.circ_inv(b)), &mut out, &mut members, &mut queue);
        }
    }
    debug_assert!(is_ideal(a, &out));
    out
}

/// `<a>` for every element `a`, indexed by element.
pub fn principal_ideals(a: &SkewBrace) -> Vec<SubsetMask> {
    let n = a.order();
    (0..n)
        .map(|x| ideal_closure(a, &SubsetMask::from_elements(n, [x])))
        .collect()
}

/// Closes a family of ideals under sums, starting from the principal
/// ideals. Sorted by size, then bitset value.
pub(crate) fn ideals_from_principal(a: &SkewBrace, principal: &[SubsetMask]) -> Vec<SubsetMask> {
    let generators: BTreeSet<SubsetMask> = principal.iter().cloned().collect();
    let mut found = generators.clone();
    let mut queue: Vec<SubsetMask> = generators.iter().cloned().collect();
    while let Some(i) = queue.pop() {
        for g in &generators {
            if g.is_subset(&i) {
                continue;
            }
            let s = sum_unchecked(a, &i, g);
            if found.insert(s.clone()) {
                queue.push(s);
            }
        }
    }
    found.into_iter().collect()
}

/// Every ideal of `a`, each a sum of principal ideals.
pub fn ideal_masks(a: &SkewBrace) -> Vec<SubsetMask> {
    ideals_from_principal(a, &principal_ideals(a))
}

pub fn all_ideals(a: &SkewBrace) -> Vec<IdealRecord> {
    ideal_masks(a)
        .into_iter()
        .map(|mask| IdealRecord {
            as_brace: sub_brace(a, &mask).expect("ideals are sub-braces"),
            mask,
            kind: IdealKind::Ideal,
        })
        .collect()
}

/// Smallest left ideal containing `x`.
fn principal_left_ideal(a: &SkewBrace, x: usize) -> SubsetMask {
    let n = a.order();
    let orbit = SubsetMask::from_elements(n, (0..n).map(|b| a.lambda_at(b, x)));
    group::subgroup_generated(a.additive(), &orbit)
}

pub fn left_ideal_masks(a: &SkewBrace) -> Vec<SubsetMask> {
    let n = a.order();
    let generators: BTreeSet<SubsetMask> = (0..n).map(|x| principal_left_ideal(a, x)).collect();
    let mut found = generators.clone();
    let mut queue: Vec<SubsetMask> = generators.iter().cloned().collect();
    while let Some(i) = queue.pop() {
        for g in &generators {
            if g.is_subset(&i) {
                continue;
            }
            let s = group::subgroup_generated(a.additive(), &i.union(g));
            debug_assert!(is_left_ideal(a, &s));
            if found.insert(s.clone()) {
                queue.push(s);
            }
        }
    }
    found.into_iter().collect()
}

pub fn all_left_ideals(a: &SkewBrace) -> Vec<IdealRecord> {
    left_ideal_masks(a)
        .into_iter()
        .map(|mask| IdealRecord {
            as_brace: sub_brace(a, &mask).expect("left ideals are sub-braces"),
            kind: if is_ideal(a, &mask) {
                IdealKind::Ideal
            } else {
                IdealKind::LeftIdeal
            },
            mask,
        })
        .collect()
}

pub(crate) fn sum_unchecked(a: &SkewBrace, i: &SubsetMask, j: &SubsetMask) -> SubsetMask {
    group::subgroup_generated(a.additive(), &i.union(j))
}

/// `I + J`, the additive subgroup generated by `I` and `J`.
pub fn ideal_sum(a: &SkewBrace, i: &SubsetMask, j: &SubsetMask) -> Result<SubsetMask> {
    if !is_ideal(a, i) || !is_ideal(a, j) {
        return Err(Error::NotIdeal);
    }
    let s = sum_unchecked(a, i, j);
    debug_assert!(is_ideal(a, &s));
    Ok(s)
}

pub fn ideal_intersection(a: &SkewBrace, i: &SubsetMask, j: &SubsetMask) -> Result<SubsetMask> {
    if !is_ideal(a, i) || !is_ideal(a, j) {
        return Err(Error::NotIdeal);
    }
    Ok(i.intersection(j))
}

/// `X * Y`: the additive subgroup generated by all `x * y`.
pub fn star_subgroup(a: &SkewBrace, x: &SubsetMask, y: &SubsetMask) -> SubsetMask {
    let n = a.order();
    let mut gens = SubsetMask::zero(n);
    for u in x.iter() {
        for v in y.iter() {
            gens.insert(a.star(u, v));
        }
    }
    group::subgroup_generated(a.additive(), &gens)
}

/// A quotient brace `A/I` with the projection `A -> A/I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub brace: SkewBrace,
    /// `projection[x]` is the label of the coset `x + I`.
    pub projection: Vec<usize>,
}

/// `A/I`. Cosets are labelled in order of their smallest member.
pub fn quotient(a: &SkewBrace, i: &SubsetMask) -> Result<Quotient> {
    if !is_ideal(a, i) {
        return Err(Error::NotIdeal);
    }
    let n = a.order();
    let mut projection = vec![usize::MAX; n];
    let mut reps = vec![];
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let label = reps.len();
        reps.push(x);
        for y in i.iter() {
            projection[a.plus(x, y)] = label;
        }
        // x o I is the same coset
        for y in i.iter() {
            if projection[a.circ(x, y)] != label {
                return Err(Error::Consistency(format!(
                    "multiplicative coset of {x} differs from its additive coset"
                )));
            }
        }
    }
    let m = reps.len();
    let mut add = vec![0; m * m];
    let mut mul = vec![0; m * m];
    for (p, &x) in reps.iter().enumerate() {
        for (q, &y) in reps.iter().enumerate() {
            add[p * m + q] = projection[a.plus(x, y)];
            mul[p * m + q] = projection[a.circ(x, y)];
        }
    }
    let brace = SkewBrace::new(
        CayleyGroup::validate_flat(m, add)?,
        CayleyGroup::validate_flat(m, mul)?,
    )?;
    Ok(Quotient { brace, projection })
}

/// The sub-brace on `s` together with the sorted member list (member `k`
/// becomes label `k`).
pub fn sub_brace_with_labels(a: &SkewBrace, s: &SubsetMask) -> Result<(SkewBrace, Vec<usize>)> {
    let closed = s.contains(0)
        && s.iter().all(|x| {
            s.contains(a.neg(x))
                && s.contains(a.circ_inv(x))
                && s.iter().all(|y| s.contains(a.plus(x, y)) && s.contains(a.circ(x, y)))
        });
    if !closed {
        return Err(Error::NotSubBrace);
    }
    let members = s.elements();
    let mut label = vec![usize::MAX; a.order()];
    for (k, &x) in members.iter().enumerate() {
        label[x] = k;
    }
    let m = members.len();
    let mut add = vec![0; m * m];
    let mut mul = vec![0; m * m];
    for (p, &x) in members.iter().enumerate() {
        for (q, &y) in members.iter().enumerate() {
            add[p * m + q] = label[a.plus(x, y)];
            mul[p * m + q] = label[a.circ(x, y)];
        }
    }
    let brace = SkewBrace::new_unchecked(
        CayleyGroup::from_flat_unchecked(m, add),
        CayleyGroup::from_flat_unchecked(m, mul),
    );
    Ok((brace, members))
}

pub fn sub_brace(a: &SkewBrace, s: &SubsetMask) -> Result<SkewBrace> {
    sub_brace_with_labels(a, s).map(|(b, _)| b)
}

/// Relabels a mask of `A` into the labels of a sub-brace with the given
/// member list.
pub fn restrict_mask(members: &[usize], s: &SubsetMask) -> SubsetMask {
    SubsetMask::from_elements(
        members.len(),
        members.iter().enumerate().filter(|(_, &x)| s.contains(x)).map(|(k, _)| k),
    )
}
