#![allow(dead_code)]

pub mod brute;

use std::sync::OnceLock;

use skewbrace::brace::describe;
use skewbrace::enumerate::enumerate_order;
use skewbrace::SkewBrace;

/// Every brace of order `1..=12`, enumerated once per test binary.
pub fn population() -> &'static [Vec<SkewBrace>] {
    static CELL: OnceLock<Vec<Vec<SkewBrace>>> = OnceLock::new();
    CELL.get_or_init(|| (0..=12).map(|n| if n == 0 { vec![] } else { enumerate_order(n, false).unwrap() }).collect())
}

pub fn order(n: usize) -> &'static [SkewBrace] {
    &population()[n]
}

pub fn up_to(n: usize) -> impl Iterator<Item = &'static SkewBrace> {
    (1..=n).flat_map(|k| order(k).iter())
}

/// Braces of order `n` whose groups carry the given catalog names.
pub fn matching(n: usize, additive: &str, multiplicative: &str) -> Vec<&'static SkewBrace> {
    order(n)
        .iter()
        .filter(|b| {
            let d = describe(b);
            d.additive.label() == additive && d.multiplicative.label() == multiplicative
        })
        .collect()
}

/// The unique brace with the given groups satisfying `pred`.
pub fn unique(n: usize, additive: &str, multiplicative: &str, pred: impl Fn(&SkewBrace) -> bool) -> &'static SkewBrace {
    let found: Vec<_> = matching(n, additive, multiplicative).into_iter().filter(|b| pred(b)).collect();
    assert_eq!(found.len(), 1, "expected one brace +{additive} o{multiplicative} of order {n}");
    found[0]
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = skewbrace::SubsetMask> {
    (0u64..1 << n).map(move |bits| skewbrace::SubsetMask::from_elements(n, (0..n).filter(|i| bits >> i & 1 == 1)))
}
