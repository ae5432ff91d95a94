//! Oracles that share no code with the library search.

use std::collections::BTreeSet;

pub type Table = Vec<Vec<usize>>;

/// Every group table on `0..n` with identity 0, found by filling a Latin
/// square cell by cell and keeping the associative ones.
pub fn group_tables(n: usize) -> Vec<Table> {
    let mut t = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        t[0][i] = i;
        t[i][0] = i;
    }
    let mut out = vec![];
    fill(&mut t, n, 1, 1, &mut out);
    out
}

fn fill(t: &mut Table, n: usize, r: usize, c: usize, out: &mut Vec<Table>) {
    if n <= 1 || r == n {
        if associative(t) {
            out.push(t.clone());
        }
        return;
    }
    let (nr, nc) = if c + 1 == n { (r + 1, 1) } else { (r, c + 1) };
    for v in 0..n {
        if (0..c).any(|j| t[r][j] == v) || (0..r).any(|i| t[i][c] == v) {
            continue;
        }
        t[r][c] = v;
        fill(t, n, nr, nc, out);
    }
    t[r][c] = usize::MAX;
}

fn associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
}

pub fn inverse(t: &Table, a: usize) -> usize {
    (0..t.len()).find(|&b| t[a][b] == 0).unwrap()
}

pub fn is_brace(add: &Table, mul: &Table) -> bool {
    let n = add.len();
    (0..n).all(|a| {
        let na = inverse(add, a);
        (0..n).all(|b| (0..n).all(|c| mul[a][add[b][c]] == add[add[mul[a][b]][na]][mul[a][c]]))
    })
}

/// All permutations of `0..n` fixing 0.
pub fn relabelings(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut p: Vec<usize> = (0..n).collect();
    permute(&mut p, 1, &mut out);
    out
}

fn permute(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k >= p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

fn relabel(t: &Table, p: &[usize]) -> Table {
    let n = t.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[p[x]][p[y]] = p[t[x][y]];
        }
    }
    out
}

/// The lexicographically smallest relabeling of a pair of tables.
pub fn canonical_pair(add: &Table, mul: &Table, perms: &[Vec<usize>]) -> (Table, Table) {
    perms.iter().map(|p| (relabel(add, p), relabel(mul, p))).min().unwrap()
}

pub fn canonical_table(t: &Table, perms: &[Vec<usize>]) -> Table {
    perms.iter().map(|p| relabel(t, p)).min().unwrap()
}

pub fn is_abelian(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| t[x][y] == t[y][x]))
}

/// Isomorphism classes of skew braces of order `n` as canonical table pairs.
pub fn brace_classes(n: usize) -> BTreeSet<(Table, Table)> {
    let tables = group_tables(n);
    let perms = relabelings(n);
    let mut out = BTreeSet::new();
    for add in &tables {
        for mul in &tables {
            if is_brace(add, mul) {
                out.insert(canonical_pair(add, mul, &perms));
            }
        }
    }
    out
}

/// Subsets as bit sets over a brace given by plain tables.
pub struct PlainBrace {
    pub add: Table,
    pub mul: Table,
}

impl PlainBrace {
    pub fn n(&self) -> usize {
        self.add.len()
    }

    fn minus(&self, a: usize, b: usize) -> usize {
        self.add[a][inverse(&self.add, b)]
    }

    fn lambda(&self, a: usize, b: usize) -> usize {
        self.add[inverse(&self.add, a)][self.mul[a][b]]
    }

    pub fn star(&self, a: usize, b: usize) -> usize {
        self.minus(self.lambda(a, b), b)
    }

    fn members(&self, s: u64) -> Vec<usize> {
        (0..self.n()).filter(|i| s >> i & 1 == 1).collect()
    }

    /// Ideal by definition: normal additive subgroup, lambda-invariant, and
    /// `I o a = a o I` with `(I o a) - a` contained in `I`.
    pub fn is_ideal(&self, s: u64) -> bool {
        let m = self.members(s);
        let n = self.n();
        let inside = |x: usize| s >> x & 1 == 1;
        if !inside(0) {
            return false;
        }
        let subgroup = m.iter().all(|&x| m.iter().all(|&y| inside(self.minus(x, y))));
        let normal = m.iter().all(|&x| (0..n).all(|a| inside(self.minus(self.add[a][x], a))));
        let invariant = m.iter().all(|&x| (0..n).all(|a| inside(self.lambda(a, x))));
        let mul_normal = (0..n).all(|a| {
            let left: BTreeSet<usize> = m.iter().map(|&x| self.mul[a][x]).collect();
            let right: BTreeSet<usize> = m.iter().map(|&x| self.mul[x][a]).collect();
            left == right
        });
        let absorbs = m.iter().all(|&x| (0..n).all(|a| inside(self.minus(self.mul[x][a], a))));
        subgroup && normal && invariant && mul_normal && absorbs
    }

    pub fn is_left_ideal(&self, s: u64) -> bool {
        let m = self.members(s);
        let inside = |x: usize| s >> x & 1 == 1;
        inside(0)
            && m.iter().all(|&x| m.iter().all(|&y| inside(self.minus(x, y))))
            && m.iter().all(|&x| (0..self.n()).all(|a| inside(self.lambda(a, x))))
    }

    pub fn ideals(&self) -> Vec<u64> {
        (0u64..1 << self.n()).filter(|&s| self.is_ideal(s)).collect()
    }

    pub fn left_ideals(&self) -> Vec<u64> {
        (0u64..1 << self.n()).filter(|&s| self.is_left_ideal(s)).collect()
    }

    fn subgroup_generated(&self, gens: u64) -> u64 {
        let mut s = gens | 1;
        loop {
            let m = self.members(s);
            let mut next = s;
            for &x in &m {
                for &y in &m {
                    next |= 1 << self.add[x][y];
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Nonzero elements of `<x> * <x>`, with `<x>` the smallest ideal in
    /// `ideals` containing `x`.
    fn successors(&self, ideals: &[u64], x: usize) -> Vec<usize> {
        let p = ideals.iter().copied().filter(|&i| i >> x & 1 == 1).min_by_key(|i| i.count_ones()).unwrap();
        let m = self.members(p);
        let mut gens = 0u64;
        for &u in &m {
            for &v in &m {
                gens |= 1 << self.star(u, v);
            }
        }
        self.members(self.subgroup_generated(gens)).into_iter().filter(|&z| z != 0).collect()
    }

    /// Elements from which no sequence `x_{k+1} in <x_k> * <x_k>` avoids zero
    /// forever, found by transitive closure of the successor graph.
    pub fn reaching_zero(&self) -> u64 {
        let n = self.n();
        let ideals = self.ideals();
        let mut reach = vec![0u64; n];
        for x in 1..n {
            for y in self.successors(&ideals, x) {
                reach[x] |= 1 << y;
            }
        }
        for k in 0..n {
            for x in 0..n {
                if reach[x] >> k & 1 == 1 {
                    reach[x] |= reach[k];
                }
            }
        }
        let on_cycle = |y: usize| reach[y] >> y & 1 == 1;
        let escapes = |x: usize| on_cycle(x) || (0..n).any(|y| reach[x] >> y & 1 == 1 && on_cycle(y));
        (0..n).filter(|&x| !escapes(x)).fold(0, |acc, x| acc | 1 << x)
    }

    /// The sub-brace on the members of `s`, relabeled to `0..|s|`.
    pub fn restrict(&self, s: u64) -> PlainBrace {
        let m = self.members(s);
        let pos = |x: usize| m.iter().position(|&y| y == x).unwrap();
        let table = |t: &Table| m.iter().map(|&x| m.iter().map(|&y| pos(t[x][y])).collect()).collect();
        PlainBrace { add: table(&self.add), mul: table(&self.mul) }
    }

    /// Largest ideal that is Baer radical as a brace in its own right.
    pub fn baer_by_definition(&self) -> u64 {
        let ideals = self.ideals();
        let radical: Vec<u64> = ideals
            .iter()
            .copied()
            .filter(|&i| {
                let sub = self.restrict(i);
                sub.reaching_zero().count_ones() as usize == sub.n()
            })
            .collect();
        let union = radical.iter().fold(0, |acc, i| acc | i);
        ideals.into_iter().filter(|&i| i & union == union).min_by_key(|i| i.count_ones()).unwrap()
    }
}

pub fn plain(a: &skewbrace::SkewBrace) -> PlainBrace {
    PlainBrace { add: a.additive().rows(), mul: a.multiplicative().rows() }
}

pub fn bits(m: &skewbrace::SubsetMask) -> u64 {
    m.iter().fold(0, |acc, x| acc | 1 << x)
}
