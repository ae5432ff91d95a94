//! Hand-built representatives of every group of order at most 16.

use std::sync::OnceLock;

use super::{are_isomorphic_groups, invariants, CayleyGroup, GroupDescriptor};
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const CATALOG_MAX_ORDER: usize = 16;

pub fn cyclic(n: usize) -> CayleyGroup {
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    CayleyGroup::from_flat_unchecked(n, table)
}

/// `C_m x| C_k` where the generator of `C_k` acts by `x -> r*x mod m`.
/// Element `(a, b)` has label `a + m*b`.
pub fn semidirect_cyclic(m: usize, k: usize, r: usize) -> Result<CayleyGroup> {
    if m == 0 || k == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut rpow = vec![1 % m; k];
    for b in 1..k {
        rpow[b] = rpow[b - 1] * r % m;
    }
    if rpow[k - 1] * r % m != 1 % m {
        return Err(Error::MalformedTable);
    }
    let n = m * k;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (a, b) = (x % m, x / m);
        for y in 0..n {
            let (c, d) = (y % m, y / m);
            let a2 = (a + rpow[b] * c) % m;
            let b2 = (b + d) % k;
            table[x * n + y] = a2 + m * b2;
        }
    }
    CayleyGroup::validate_flat(n, table)
}

/// Dihedral group of order `2m`.
pub fn dihedral(m: usize) -> CayleyGroup {
    semidirect_cyclic(m, 2, m - 1).expect("inversion is an involution")
}

/// Dicyclic group of order `4m`: `<a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>`.
/// Element `a^i x^j` has label `i + 2m*j`.
pub fn dicyclic(m: usize) -> CayleyGroup {
    let h = 2 * m;
    let n = 2 * h;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (i, j) = (x % h, x / h);
        for y in 0..n {
            let (k, l) = (y % h, y / h);
            let z = if j == 0 {
                (i + k) % h + h * l
            } else if l == 0 {
                (i + h - k) % h + h
            } else {
                (i + h - k + m) % h
            };
            table[x * n + y] = z;
        }
    }
    CayleyGroup::validate_flat(n, table).expect("dicyclic presentation")
}

/// `N x| H` with `action[h]` the automorphism of `N` by which `h` acts.
/// Element `(x, h)` has label `x + |N|*h`.
pub fn semidirect(normal: &CayleyGroup, top: &CayleyGroup, action: &[Permutation]) -> Result<CayleyGroup> {
    let (nn, nh) = (normal.order(), top.order());
    if action.len() != nh {
        return Err(Error::MalformedTable);
    }
    for a in action {
        if a.degree() != nn || !normal.is_homomorphism_to(normal, a.images()) {
            return Err(Error::MalformedTable);
        }
    }
    let n = nn * nh;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (a, h1) = (x % nn, x / nn);
        for y in 0..n {
            let (b, h2) = (y % nn, y / nn);
            table[x * n + y] = normal.op(a, action[h1].apply(b)) + nn * top.op(h1, h2);
        }
    }
    CayleyGroup::validate_flat(n, table)
}

/// Action of `C2` on `N` through one involutive automorphism.
fn c2_action(n: usize, f: impl Fn(usize) -> usize) -> Vec<Permutation> {
    vec![
        Permutation::identity(n),
        Permutation::from_images((0..n).map(f).collect()).expect("automorphism"),
    ]
}

fn product(parts: &[CayleyGroup]) -> CayleyGroup {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, g| acc.direct_product(g))
}

fn alternating4() -> CayleyGroup {
    let gens = [
        Permutation::from_one_based(&[2, 3, 1, 4]).unwrap(),
        Permutation::from_one_based(&[2, 1, 4, 3]).unwrap(),
    ];
    CayleyGroup::from_permutation_generators(4, &gens).unwrap()
}

fn build(n: usize) -> Vec<(&'static str, CayleyGroup)> {
    let c = cyclic;
    match n {
        1 => vec![("C1", CayleyGroup::trivial())],
        2 | 3 | 5 | 7 | 11 | 13 => {
            let name = match n {
                2 => "C2",
                3 => "C3",
                5 => "C5",
                7 => "C7",
                11 => "C11",
                _ => "C13",
            };
            vec![(name, c(n))]
        }
        4 => vec![("C4", c(4)), ("C2xC2", product(&[c(2), c(2)]))],
        6 => vec![("C6", c(6)), ("S3", dihedral(3))],
        8 => vec![
            ("C8", c(8)),
            ("C4xC2", product(&[c(4), c(2)])),
            ("C2xC2xC2", product(&[c(2), c(2), c(2)])),
            ("D4", dihedral(4)),
            ("Q8", dicyclic(2)),
        ],
        9 => vec![("C9", c(9)), ("C3xC3", product(&[c(3), c(3)]))],
        10 => vec![("C10", c(10)), ("D5", dihedral(5))],
        12 => vec![
            ("C12", c(12)),
            ("C6xC2", product(&[c(6), c(2)])),
            ("D6", dihedral(6)),
            ("C3:C4", dicyclic(3)),
            ("A4", alternating4()),
        ],
        14 => vec![("C14", c(14)), ("D7", dihedral(7))],
        15 => vec![("C15", c(15))],
        16 => {
            let c4c2 = product(&[c(4), c(2)]);
            // labels of C4xC2: i*2 + j
            let g16_3 = semidirect(
                &c4c2,
                &c(2),
                &c2_action(8, |x| {
                    let (i, j) = (x / 2, x % 2);
                    i * 2 + (j + i) % 2
                }),
            )
            .unwrap();
            let pauli = semidirect(
                &c4c2,
                &c(2),
                &c2_action(8, |x| {
                    let (i, j) = (x / 2, x % 2);
                    ((i + 2 * j) % 4) * 2 + j
                }),
            )
            .unwrap();
            vec![
                ("C16", c(16)),
                ("C8xC2", product(&[c(8), c(2)])),
                ("C4xC4", product(&[c(4), c(4)])),
                ("C4xC2xC2", product(&[c(4), c(2), c(2)])),
                ("C2xC2xC2xC2", product(&[c(2), c(2), c(2), c(2)])),
                ("D8", dihedral(8)),
                ("SD16", semidirect_cyclic(8, 2, 3).unwrap()),
                ("Q16", dicyclic(4)),
                ("M16", semidirect_cyclic(8, 2, 5).unwrap()),
                ("C4:C4", semidirect_cyclic(4, 4, 3).unwrap()),
                ("(C4xC2):C2", g16_3),
                ("D4xC2", product(&[dihedral(4), c(2)])),
                ("Q8xC2", product(&[dicyclic(2), c(2)])),
                ("C4oD4", pauli),
            ]
        }
        _ => unreachable!("order checked by caller"),
    }
}

struct Entry {
    name: &'static str,
    group: CayleyGroup,
    invariants: GroupDescriptor,
}

fn catalog() -> &'static [Vec<Entry>] {
    static CATALOG: OnceLock<Vec<Vec<Entry>>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        (0..=CATALOG_MAX_ORDER)
            .map(|n| {
                if n == 0 {
                    return vec![];
                }
                build(n)
                    .into_iter()
                    .map(|(name, group)| Entry {
                        name,
                        invariants: invariants(&group),
                        group,
                    })
                    .collect()
            })
            .collect()
    })
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if n > CATALOG_MAX_ORDER {
        return Err(Error::BoundExceeded {
            order: n,
            bound: CATALOG_MAX_ORDER,
        });
    }
    Ok(())
}

/// One representative per isomorphism class of groups of order `n`.
pub fn catalog_groups(n: usize) -> Result<Vec<CayleyGroup>> {
    check_order(n)?;
    Ok(catalog()[n].iter().map(|e| e.group.clone()).collect())
}

pub fn catalog_entry(n: usize, id: usize) -> Option<CayleyGroup> {
    check_order(n).ok()?;
    catalog()[n].get(id).map(|e| e.group.clone())
}

/// Display name of catalog entry `id` of order `n`. Panics when absent.
pub fn catalog_name(n: usize, id: usize) -> &'static str {
    catalog()[n][id].name
}

pub(super) fn identify(g: &CayleyGroup, inv: &GroupDescriptor) -> Option<usize> {
    let entries = &catalog()[g.order()];
    let matching: Vec<usize> = (0..entries.len())
        .filter(|&i| entries[i].invariants.same_invariants(inv))
        .collect();
    if matching.len() == 1 {
        return matching.first().copied();
    }
    matching
        .into_iter()
        .find(|&i| are_isomorphic_groups(g, &entries[i].group).is_some())
}
