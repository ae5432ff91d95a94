//! Finite groups given by Cayley tables on `{0..n-1}` with identity `0`.

mod catalog;
mod morphism;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::perm::Permutation;

pub use catalog::{
    catalog_entry, catalog_groups, catalog_name, cyclic, dicyclic, dihedral, semidirect,
    semidirect_cyclic, CATALOG_MAX_ORDER,
};
pub use morphism::{
    are_isomorphic_groups, automorphisms, automorphisms_bounded, generating_set,
    DEFAULT_AUTOMORPHISM_BOUND,
};
pub(crate) use morphism::HomSearch;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl CayleyGroup {
    /// Checks the group axioms for a square table whose identity is `0`.
    pub fn validate(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::MalformedTable);
        }
        Self::validate_flat(n, rows.concat())
    }

    pub(crate) fn validate_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if table.len() != n * n || table.iter().any(|&x| x >= n) {
            return Err(Error::MalformedTable);
        }
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                let r = table[i * n + j];
                if std::mem::replace(&mut row[r], true) {
                    return Err(Error::NotLatin { axis: "row", index: i });
                }
                let c = table[j * n + i];
                if std::mem::replace(&mut col[c], true) {
                    return Err(Error::NotLatin { axis: "column", index: i });
                }
            }
        }
        if (0..n).any(|x| table[x] != x || table[x * n] != x) {
            return Err(Error::IdentityNotZero);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Self::from_flat_unchecked(n, table))
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<usize>) -> Self {
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b;
                    break;
                }
            }
        }
        CayleyGroup { n, table, inv }
    }

    /// Relabels a valid group table so that its identity becomes element `0`
    /// (the old identity and `0` swap labels), then validates.
    pub fn normalize_identity(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::MalformedTable);
        }
        let e = (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x));
        let Some(e) = e else {
            return Err(Error::IdentityNotZero);
        };
        let swap = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[swap(a) * n + swap(b)] = swap(rows[a][b]);
            }
        }
        Self::validate_flat(n, table)
    }

    pub fn trivial() -> Self {
        Self::from_flat_unchecked(1, vec![0])
    }

    /// Builds the group generated by some permutations, labelled by the
    /// lexicographic order of its elements (identity first).
    pub fn from_permutation_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        let elems = closure_of_permutations(degree, gens)?;
        let index: BTreeMap<&Permutation, usize> =
            elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elems.len();
        let mut table = vec![0; n * n];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                let pq = crate::perm::compose(p, q)?;
                table[i * n + j] = index[&pq];
            }
        }
        Self::validate_flat(n, table)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.element_order(x)).collect()
    }

    /// Applies a relabelling `x -> phi(x)` (with `phi(0) = 0`) to the table.
    pub fn relabel(&self, phi: &Permutation) -> Result<CayleyGroup> {
        if phi.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: phi.degree(),
            });
        }
        if phi.apply(0) != 0 {
            return Err(Error::IdentityNotZero);
        }
        let n = self.n;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[phi.apply(a) * n + phi.apply(b)] = phi.apply(self.op(a, b));
            }
        }
        Ok(Self::from_flat_unchecked(n, table))
    }

    /// Direct product with row-major indexing: `(g, h) -> g * |H| + h`.
    pub fn direct_product(&self, other: &CayleyGroup) -> CayleyGroup {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let g = self.op(a / n2, b / n2);
                let h = other.op(a % n2, b % n2);
                table[a * n + b] = g * n2 + h;
            }
        }
        Self::from_flat_unchecked(n, table)
    }

    /// `x -> phi(x)` is an operation-preserving map into `other`.
    pub fn is_homomorphism_to(&self, other: &CayleyGroup, phi: &[usize]) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| phi[self.op(a, b)] == other.op(phi[a], phi[b]))
        })
    }
}

impl fmt::Debug for CayleyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyGroup(order {}", self.n)?;
        if let Some(name) = describe(self).catalog_name() {
            write!(f, ", {name}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn closure_of_permutations(degree: usize, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let mut seen = std::collections::BTreeSet::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = crate::perm::compose(&p, g)?;
            if seen.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The subgroup generated by `s` (always contains `0`).
pub fn subgroup_generated(g: &CayleyGroup, s: &SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::zero(g.order());
    let mut elems = vec![0];
    let gens: Vec<usize> = s.iter().filter(|&x| x != 0).collect();
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &t in &gens {
            let y = g.op(x, t);
            if out.insert(y) {
                elems.push(y);
            }
        }
        i += 1;
    }
    out
}

pub fn is_subgroup(g: &CayleyGroup, s: &SubsetMask) -> bool {
    s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(g.op(a, b))))
}

/// Normality of a subgroup under conjugation `x -> g x g^-1`.
pub fn is_normal_subgroup(g: &CayleyGroup, s: &SubsetMask) -> Result<bool> {
    if !is_subgroup(g, s) {
        return Err(Error::NotSubgroup);
    }
    Ok(is_normal_unchecked(g, s))
}

pub(crate) fn is_normal_unchecked(g: &CayleyGroup, s: &SubsetMask) -> bool {
    (0..g.order()).all(|x| {
        let xi = g.inverse(x);
        s.iter().all(|y| s.contains(g.op(g.op(x, y), xi)))
    })
}

pub fn center(g: &CayleyGroup) -> SubsetMask {
    let n = g.order();
    SubsetMask::from_elements(
        n,
        (0..n).filter(|&z| (0..n).all(|x| g.op(z, x) == g.op(x, z))),
    )
}

/// Left regular representation: `x -> (i -> x*i)`.
///
/// With left-to-right composition, `compose(p_x, p_y) = p_{y*x}`.
pub fn regular_representation(g: &CayleyGroup) -> Vec<Permutation> {
    (0..g.order())
        .map(|x| Permutation::from_images_unchecked(g.row(x).to_vec()))
        .collect()
}

/// Right regular representation: `x -> (i -> i*x)`.
///
/// With left-to-right composition, `compose(p_x, p_y) = p_{x*y}`.
pub fn right_regular_representation(g: &CayleyGroup) -> Vec<Permutation> {
    (0..g.order())
        .map(|x| Permutation::from_images_unchecked((0..g.order()).map(|i| g.op(i, x)).collect()))
        .collect()
}

/// Isomorphism invariants of a group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDescriptor {
    pub order: usize,
    pub abelian: bool,
    /// `(element order, count)` pairs in increasing order.
    pub element_orders: Vec<(usize, usize)>,
    pub center_size: usize,
    /// Position within `catalog_groups(order)` when the group is identified.
    pub catalog_id: Option<usize>,
}

impl GroupDescriptor {
    pub fn catalog_name(&self) -> Option<&'static str> {
        self.catalog_id.map(|i| catalog_name(self.order, i))
    }

    /// Catalog name when identified, else a structural summary.
    pub fn label(&self) -> String {
        match self.catalog_name() {
            Some(s) => s.to_string(),
            None => format!("G{}[z{}]", self.order, self.center_size),
        }
    }

    pub(crate) fn same_invariants(&self, other: &GroupDescriptor) -> bool {
        self.order == other.order
            && self.abelian == other.abelian
            && self.element_orders == other.element_orders
            && self.center_size == other.center_size
    }
}

pub(crate) fn invariants(g: &CayleyGroup) -> GroupDescriptor {
    let mut counts = BTreeMap::new();
    for k in g.element_orders() {
        *counts.entry(k).or_insert(0) += 1;
    }
    GroupDescriptor {
        order: g.order(),
        abelian: g.is_abelian(),
        element_orders: counts.into_iter().collect(),
        center_size: center(g).len(),
        catalog_id: None,
    }
}

pub fn describe(g: &CayleyGroup) -> GroupDescriptor {
    let mut d = invariants(g);
    if g.order() <= CATALOG_MAX_ORDER {
        d.catalog_id = catalog::identify(g, &d);
    }
    d
}

/// Parses the Cayley-table text format: `group <n>` then `n` rows.
pub fn parse_group_text(text: &str) -> Result<CayleyGroup> {
    let mut lines = crate::text::content_lines(text);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `group <n>` header".into(),
    })?;
    let n = crate::text::parse_header(line_no, header, "group")?;
    let rows = crate::text::parse_rows(&mut lines, n)?;
    CayleyGroup::normalize_identity(&rows)
}

pub fn format_group_text(g: &CayleyGroup) -> String {
    let mut s = format!("group {}\n", g.order());
    crate::text::push_rows(&mut s, g);
    s
}
