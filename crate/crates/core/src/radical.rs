//! Series, nilpotency, solvability, simplicity, primeness and the Baer and
//! Wedderburn radicals.
//!
//! Conventions for the order-1 brace: not simple, not prime, semiprime, and
//! both radicals equal to `{0}`.

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group;
use crate::ideal::{self, ideal_masks, star_subgroup, sum_unchecked};
use crate::mask::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `A^1 = A`, `A^{k+1} = A * A^k`
    Left,
    /// `A^(1) = A`, `A^(k+1) = A^(k) * A`
    Right,
    /// `A_1 = A`, `A_{k+1} = A_k * A_k`
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    /// Distinct terms, starting with the whole brace (or ideal) and ending
    /// with the stable term.
    pub terms: Vec<SubsetMask>,
    /// Index of the stable term in `terms`.
    pub stabilized_at: usize,
    pub reaches_zero: bool,
}

impl SeriesChain {
    pub fn last(&self) -> &SubsetMask {
        &self.terms[self.stabilized_at]
    }
}

/// The series of the sub-brace on `i`, computed with `a`'s tables.
pub fn series_within(a: &SkewBrace, i: &SubsetMask, kind: SeriesKind) -> SeriesChain {
    let mut terms = vec![i.clone()];
    loop {
        let prev = terms.last().unwrap();
        let next = match kind {
            SeriesKind::Left => star_subgroup(a, i, prev),
            SeriesKind::Right => star_subgroup(a, prev, i),
            SeriesKind::Derived => star_subgroup(a, prev, prev),
        };
        debug_assert!(next.is_subset(prev));
        if &next == prev {
            break;
        }
        terms.push(next);
    }
    let stabilized_at = terms.len() - 1;
    let reaches_zero = terms[stabilized_at].is_zero();
    SeriesChain {
        kind,
        terms,
        stabilized_at,
        reaches_zero,
    }
}

pub fn left_series(a: &SkewBrace) -> SeriesChain {
    let chain = series_within(a, &SubsetMask::full(a.order()), SeriesKind::Left);
    for t in &chain.terms {
        assert!(ideal::is_left_ideal(a, t), "left series term {t} is not a left ideal");
    }
    chain
}

pub fn right_series(a: &SkewBrace) -> SeriesChain {
    let chain = series_within(a, &SubsetMask::full(a.order()), SeriesKind::Right);
    for t in &chain.terms {
        assert!(ideal::is_ideal(a, t), "right series term {t} is not an ideal");
    }
    chain
}

pub fn derived_series(a: &SkewBrace) -> SeriesChain {
    let chain = series_within(a, &SubsetMask::full(a.order()), SeriesKind::Derived);
    for pair in chain.terms.windows(2) {
        let (sub, members) = ideal::sub_brace_with_labels(a, &pair[0]).expect("derived term is a sub-brace");
        let next = ideal::restrict_mask(&members, &pair[1]);
        assert!(ideal::is_ideal(&sub, &next), "derived term is not an ideal of its predecessor");
    }
    chain
}

pub fn is_left_nilpotent(a: &SkewBrace) -> bool {
    left_series(a).reaches_zero
}

pub fn is_right_nilpotent(a: &SkewBrace) -> bool {
    right_series(a).reaches_zero
}

pub fn is_solvable(a: &SkewBrace) -> bool {
    derived_series(a).reaches_zero
}

fn ideal_is_solvable(a: &SkewBrace, i: &SubsetMask) -> bool {
    series_within(a, i, SeriesKind::Derived).reaches_zero
}

fn ideal_is_nilpotent(a: &SkewBrace, i: &SubsetMask) -> bool {
    series_within(a, i, SeriesKind::Left).reaches_zero && series_within(a, i, SeriesKind::Right).reaches_zero
}

pub fn is_simple(a: &SkewBrace) -> bool {
    a.order() >= 2 && ideal_masks(a).len() == 2
}

fn prime_in(a: &SkewBrace, ideals: &[SubsetMask]) -> bool {
    if a.order() < 2 {
        return false;
    }
    let nonzero: Vec<&SubsetMask> = ideals.iter().filter(|i| !i.is_zero()).collect();
    nonzero
        .iter()
        .all(|i| nonzero.iter().all(|j| !star_subgroup(a, i, j).is_zero()))
}

fn semiprime_in(a: &SkewBrace, ideals: &[SubsetMask]) -> bool {
    ideals
        .iter()
        .filter(|i| !i.is_zero())
        .all(|i| !star_subgroup(a, i, i).is_zero())
}

pub fn is_prime(a: &SkewBrace) -> bool {
    prime_in(a, &ideal_masks(a))
}

pub fn is_semiprime(a: &SkewBrace) -> bool {
    semiprime_in(a, &ideal_masks(a))
}

fn proper_ideals_with_quotient(
    a: &SkewBrace,
    ideals: &[SubsetMask],
    keep: impl Fn(&SkewBrace) -> bool,
) -> Vec<SubsetMask> {
    ideals
        .iter()
        .filter(|i| !i.is_full())
        .filter(|i| keep(&ideal::quotient(a, i).expect("lattice member is an ideal").brace))
        .cloned()
        .collect()
}

/// Proper ideals `I` with `A/I` prime. The improper ideal `A` is never listed.
pub fn prime_ideals(a: &SkewBrace) -> Vec<SubsetMask> {
    proper_ideals_with_quotient(a, &ideal_masks(a), is_prime)
}

/// Proper ideals `I` with `A/I` semiprime.
pub fn semiprime_ideals(a: &SkewBrace) -> Vec<SubsetMask> {
    proper_ideals_with_quotient(a, &ideal_masks(a), is_semiprime)
}

/// True when `A` is the only prime ideal of `A`.
pub fn has_no_proper_prime_ideals(a: &SkewBrace) -> bool {
    prime_ideals(a).is_empty()
}

/// Intersection of a family of ideals; the empty family gives `A`.
pub fn intersection_or_whole(n: usize, family: &[SubsetMask]) -> SubsetMask {
    family
        .iter()
        .fold(SubsetMask::full(n), |acc, i| acc.intersection(i))
}

/// Whether every sequence `x_0 = x`, `x_{k+1} in <x_k> * <x_k>` eventually
/// hits zero, i.e. no cycle of nonzero elements is reachable from `x`.
pub fn every_n_sequence_reaches_zero(a: &SkewBrace, x: usize) -> bool {
    let n = a.order();
    let mut successors: Vec<Option<Vec<usize>>> = vec![None; n];
    let succ = |y: usize, cache: &mut Vec<Option<Vec<usize>>>| -> Vec<usize> {
        if cache[y].is_none() {
            let p = ideal::ideal_closure(a, &SubsetMask::from_elements(n, [y]));
            let s = star_subgroup(a, &p, &p);
            cache[y] = Some(s.iter().filter(|&z| z != 0).collect());
        }
        cache[y].clone().unwrap()
    };
    if x == 0 {
        return true;
    }
    // 0 unvisited, 1 on stack, 2 finished
    let mut state = vec![0u8; n];
    let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![];
    state[x] = 1;
    let s = succ(x, &mut successors);
    stack.push((x, s, 0));
    while let Some((_, next, pos)) = stack.last_mut() {
        if *pos == next.len() {
            let (node, _, _) = stack.pop().unwrap();
            state[node] = 2;
            continue;
        }
        let y = next[*pos];
        *pos += 1;
        match state[y] {
            1 => return false,
            0 => {
                state[y] = 1;
                let s = succ(y, &mut successors);
                stack.push((y, s, 0));
            }
            _ => {}
        }
    }
    true
}

fn baer_in(a: &SkewBrace, ideals: &[SubsetMask]) -> SubsetMask {
    let mut b = SubsetMask::zero(a.order());
    for i in ideals {
        if !i.is_subset(&b) && ideal_is_solvable(a, i) {
            b = sum_unchecked(a, &b, i);
        }
    }
    assert!(ideal_is_solvable(a, &b), "sum of solvable ideals is not solvable");
    b
}

fn wedderburn_in(a: &SkewBrace, ideals: &[SubsetMask]) -> SubsetMask {
    let mut w = SubsetMask::zero(a.order());
    for i in ideals {
        if !i.is_subset(&w) && ideal_is_nilpotent(a, i) {
            w = sum_unchecked(a, &w, i);
        }
    }
    w
}

/// The largest solvable ideal, which for finite braces is the Baer radical.
pub fn baer_radical(a: &SkewBrace) -> SubsetMask {
    baer_in(a, &ideal_masks(a))
}

/// Sum of the ideals that are both left and right nilpotent.
pub fn wedderburn_radical(a: &SkewBrace) -> SubsetMask {
    wedderburn_in(a, &ideal_masks(a))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalReport {
    pub baer: SubsetMask,
    pub wedderburn: SubsetMask,
    pub prime_ideals: Vec<SubsetMask>,
    pub no_proper_prime_ideals: bool,
    pub is_prime: bool,
    pub is_semiprime: bool,
    pub is_simple: bool,
    pub is_solvable: bool,
    pub is_left_nilpotent: bool,
    pub is_right_nilpotent: bool,
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Consistency(what.to_string()))
    }
}

/// Runs every classifier and checks the relations between them.
pub fn radical_report(a: &SkewBrace) -> Result<RadicalReport> {
    let n = a.order();
    let ideals = ideal_masks(a);
    let baer = baer_in(a, &ideals);
    let wedderburn = wedderburn_in(a, &ideals);
    let primes = proper_ideals_with_quotient(a, &ideals, is_prime);
    let report = RadicalReport {
        no_proper_prime_ideals: primes.is_empty(),
        is_prime: prime_in(a, &ideals),
        is_semiprime: semiprime_in(a, &ideals),
        is_simple: n >= 2 && ideals.len() == 2,
        is_solvable: is_solvable(a),
        is_left_nilpotent: is_left_nilpotent(a),
        is_right_nilpotent: is_right_nilpotent(a),
        prime_ideals: primes,
        baer,
        wedderburn,
    };
    let r = &report;
    ensure(r.wedderburn.is_subset(&r.baer), "W(A) is not contained in B(A)")?;
    ensure(
        intersection_or_whole(n, &r.prime_ideals) == r.baer,
        "B(A) differs from the intersection of prime ideals",
    )?;
    ensure(r.is_semiprime == r.baer.is_zero(), "semiprime does not match B(A) = 0")?;
    ensure(r.baer.is_zero() == r.wedderburn.is_zero(), "B(A) = 0 does not match W(A) = 0")?;
    ensure(r.is_solvable == r.baer.is_full(), "solvable does not match B(A) = A")?;
    let q = ideal::quotient(a, &r.baer)?;
    ensure(baer_radical(&q.brace).is_zero(), "B(A/B(A)) is not zero")?;
    if r.is_prime {
        ensure(r.is_semiprime, "prime brace is not semiprime")?;
        let nonzero: Vec<&SubsetMask> = ideals.iter().filter(|i| !i.is_zero()).collect();
        for i in &nonzero {
            for j in &nonzero {
                ensure(!i.intersection(j).is_zero(), "prime brace has disjoint nonzero ideals")?;
            }
        }
    }
    if n > 1 && (r.is_left_nilpotent || r.is_right_nilpotent) {
        ensure(!r.is_semiprime, "nilpotent brace is semiprime")?;
    }
    if r.is_left_nilpotent || r.is_right_nilpotent {
        ensure(r.is_solvable, "nilpotent brace is not solvable")?;
    }
    if r.is_simple && !a.is_trivial() {
        ensure(r.is_prime, "simple non-trivial brace is not prime")?;
    }
    Ok(report)
}

/// A term of the left series that is not a normal subgroup of `(A, +)`.
pub fn non_normal_left_series_term(a: &SkewBrace) -> Option<(usize, SubsetMask)> {
    left_series(a)
        .terms
        .into_iter()
        .enumerate()
        .find(|(_, t)| !group::is_normal_unchecked(a.additive(), t))
}

/// A term of the derived series that is not an ideal of `A`.
pub fn non_ideal_derived_term(a: &SkewBrace) -> Option<(usize, SubsetMask)> {
    derived_series(a)
        .terms
        .into_iter()
        .enumerate()
        .find(|(_, t)| !ideal::is_ideal(a, t))
}
