//! The Yang–Baxter map of a skew brace and a braid-relation checker.

use super::SkewBrace;

/// A map `r: X x X -> X x X` on `X = {0..n-1}` stored as a table indexed by
/// `x * n + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbMap {
    n: usize,
    table: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YbVerdict {
    Solution,
    NotBijective,
    /// `r1 r2 r1 != r2 r1 r2` on the triple.
    BraidFails(usize, usize, usize),
    /// `y -> first(r(x, y))` is not a permutation.
    LeftDegenerate(usize),
    /// `x -> second(r(x, y))` is not a permutation.
    RightDegenerate(usize),
}

impl YbVerdict {
    pub fn holds(self) -> bool {
        self == YbVerdict::Solution
    }
}

impl YbMap {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let table = (0..n * n).map(|k| f(k / n, k % n)).collect();
        YbMap { n, table }
    }

    /// `r(x, y) = (y, x)`
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, value: (usize, usize)) {
        self.table[x * self.n + y] = value;
    }

    pub fn is_involutive(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                let (u, v) = self.apply(x, y);
                self.apply(u, v) == (x, y)
            })
        })
    }
}

/// `r_A(a, b) = (lambda_a(b), lambda_a(b)' o a o b)`
pub fn yb_map(a: &SkewBrace) -> YbMap {
    YbMap::from_fn(a.order(), |x, y| {
        let u = a.lambda_at(x, y);
        let v = a.circ(a.circ(a.circ_inv(u), x), y);
        (u, v)
    })
}

/// Checks bijectivity, non-degeneracy and the braid relation on all triples.
pub fn verify_yang_baxter(r: &YbMap) -> YbVerdict {
    let n = r.n;
    let mut seen = vec![false; n * n];
    for &(u, v) in &r.table {
        if u >= n || v >= n || std::mem::replace(&mut seen[u * n + v], true) {
            return YbVerdict::NotBijective;
        }
    }
    let mut hit = vec![false; n];
    for x in 0..n {
        hit.fill(false);
        for y in 0..n {
            let u = r.apply(x, y).0;
            if std::mem::replace(&mut hit[u], true) {
                return YbVerdict::LeftDegenerate(x);
            }
        }
    }
    for y in 0..n {
        hit.fill(false);
        for x in 0..n {
            let v = r.apply(x, y).1;
            if std::mem::replace(&mut hit[v], true) {
                return YbVerdict::RightDegenerate(y);
            }
        }
    }
    let r1 = |(x, y, z): (usize, usize, usize)| {
        let (a, b) = r.apply(x, y);
        (a, b, z)
    };
    let r2 = |(x, y, z): (usize, usize, usize)| {
        let (b, c) = r.apply(y, z);
        (x, b, c)
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = (x, y, z);
                if r1(r2(r1(t))) != r2(r1(r2(t))) {
                    return YbVerdict::BraidFails(x, y, z);
                }
            }
        }
    }
    YbVerdict::Solution
}
