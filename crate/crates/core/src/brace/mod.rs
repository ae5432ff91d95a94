//! Skew braces `(A, +, o)` given by two Cayley tables on the same set.
//!
//! Both identities are element `0`. The additive operation is written `+`
//! with inverse `-a`; the multiplicative one `o` with inverse `a'`. The map
//! `lambda_a(b) = -a + a o b` is materialized as an `n x n` table when the
//! brace is validated.
//!
//! "Two-sided" means the opposite distributive law
//! `(a + b) o c = a o c - c + b o c` also holds.

mod iso;
mod ybe;

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{self, CayleyGroup};
use crate::mask::SubsetMask;
use crate::perm::Permutation;

pub use iso::{are_isomorphic_braces, describe, BraceDescriptor};
pub(crate) use iso::isomorphism_with_equal_descriptors;
pub use ybe::{verify_yang_baxter, yb_map, YbMap, YbVerdict};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    add: CayleyGroup,
    mul: CayleyGroup,
    lambda: Vec<usize>,
}

impl SkewBrace {
    /// Validates the brace law `a o (b + c) = a o b - a + a o c` on all
    /// triples and caches the lambda table.
    pub fn new(add: CayleyGroup, mul: CayleyGroup) -> Result<Self> {
        if add.order() != mul.order() {
            return Err(Error::OrderMismatch(add.order(), mul.order()));
        }
        let n = add.order();
        for a in 0..n {
            let neg_a = add.inverse(a);
            for b in 0..n {
                let ab = mul.op(a, b);
                for c in 0..n {
                    let lhs = mul.op(a, add.op(b, c));
                    let rhs = add.op(add.op(ab, neg_a), mul.op(a, c));
                    if lhs != rhs {
                        return Err(Error::BraceLaw(a, b, c));
                    }
                }
            }
        }
        let brace = Self::new_unchecked(add, mul);
        brace.check_lambda_homomorphism()?;
        Ok(brace)
    }

    /// Validates both tables as groups, then the brace law.
    pub fn from_tables(add_rows: &[Vec<usize>], mul_rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(CayleyGroup::validate(add_rows)?, CayleyGroup::validate(mul_rows)?)
    }

    pub(crate) fn new_unchecked(add: CayleyGroup, mul: CayleyGroup) -> Self {
        let n = add.order();
        let mut lambda = vec![0; n * n];
        for a in 0..n {
            let neg_a = add.inverse(a);
            for b in 0..n {
                lambda[a * n + b] = add.op(neg_a, mul.op(a, b));
            }
        }
        SkewBrace { add, mul, lambda }
    }

    /// Each `lambda_a` is an additive automorphism and
    /// `lambda_{a o b} = lambda_a lambda_b`.
    fn check_lambda_homomorphism(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            let row = &self.lambda[a * n..(a + 1) * n];
            if !self.add.is_homomorphism_to(&self.add, row) {
                return Err(Error::Consistency(format!("lambda_{a} is not additive")));
            }
            for b in 0..n {
                let ab = self.mul.op(a, b);
                for c in 0..n {
                    if self.lambda_at(ab, c) != self.lambda_at(a, self.lambda_at(b, c)) {
                        return Err(Error::Consistency(format!(
                            "lambda is not a homomorphism at ({a}, {b})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial brace `a + b = a o b` over `g`.
    pub fn trivial(g: &CayleyGroup) -> Self {
        Self::new_unchecked(g.clone(), g.clone())
    }

    /// Brace from a bijective 1-cocycle given positionally: element `j` of
    /// `g` corresponds to element `j` of `additive`, and `a_i o a_j = a_k`
    /// whenever `g_i g_j = g_k`.
    pub fn from_cocycle(g: &CayleyGroup, additive: &CayleyGroup) -> Result<Self> {
        if g.order() != additive.order() {
            return Err(Error::OrderMismatch(g.order(), additive.order()));
        }
        Self::new(additive.clone(), g.clone()).map_err(|e| match e {
            Error::BraceLaw(a, b, c) => Error::MalformedRecord(format!(
                "positional pairing violates the brace law at ({a}, {b}, {c})"
            )),
            other => other,
        })
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &CayleyGroup {
        &self.add
    }

    pub fn multiplicative(&self) -> &CayleyGroup {
        &self.mul
    }

    #[inline]
    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inverse(a)
    }

    /// `a - b`
    #[inline]
    pub fn minus(&self, a: usize, b: usize) -> usize {
        self.add.op(a, self.add.inverse(b))
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    /// Multiplicative inverse `a'`.
    #[inline]
    pub fn circ_inv(&self, a: usize) -> usize {
        self.mul.inverse(a)
    }

    #[inline]
    pub fn lambda_at(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order() + b]
    }

    /// `lambda_a` as a permutation of the elements.
    pub fn lambda(&self, a: usize) -> Permutation {
        let n = self.order();
        Permutation::from_images_unchecked(self.lambda[a * n..(a + 1) * n].to_vec())
    }

    /// `a * b = lambda_a(b) - b`
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.minus(self.lambda_at(a, b), b)
    }

    pub fn is_classical(&self) -> bool {
        self.add.is_abelian()
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.mul
    }

    pub fn is_two_sided(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.plus(a, b);
                (0..n).all(|c| {
                    let rhs = self.plus(self.minus(self.circ(a, c), c), self.circ(b, c));
                    self.circ(ab, c) == rhs
                })
            })
        })
    }

    pub fn is_star_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.star(a, b);
                (0..n).all(|c| self.star(ab, c) == self.star(a, self.star(b, c)))
            })
        })
    }

    /// Applies the relabelling `x -> phi(x)` (with `phi(0) = 0`) to both tables.
    pub fn relabel(&self, phi: &Permutation) -> Result<SkewBrace> {
        Ok(Self::new_unchecked(self.add.relabel(phi)?, self.mul.relabel(phi)?))
    }

    /// Componentwise product; `(a, b)` has label `a * |B| + b`.
    pub fn direct_product(&self, other: &SkewBrace) -> SkewBrace {
        Self::new_unchecked(
            self.add.direct_product(&other.add),
            self.mul.direct_product(&other.mul),
        )
    }

    /// Tables compared as flat vectors, additive first.
    pub fn table_key(&self) -> (&[usize], &[usize]) {
        (self.add.flat_table(), self.mul.flat_table())
    }
}

impl fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        if n <= crate::group::CATALOG_MAX_ORDER {
            write!(
                f,
                "SkewBrace(order {}, + {}, o {})",
                n,
                group::describe(&self.add).label(),
                group::describe(&self.mul).label()
            )
        } else {
            write!(f, "SkewBrace(order {n})")
        }
    }
}

/// `ker lambda` intersected with the centre of `(A, +)`.
pub fn socle(a: &SkewBrace) -> SubsetMask {
    let n = a.order();
    let z = group::center(a.additive());
    SubsetMask::from_elements(
        n,
        z.iter().filter(|&x| (0..n).all(|b| a.lambda_at(x, b) == b)),
    )
}

/// Parses `brace <n>`, the additive table, then the multiplicative table.
/// The additive identity is relabelled to `0` in both tables.
pub fn parse_brace_text(text: &str) -> Result<SkewBrace> {
    let mut lines = crate::text::content_lines(text);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `brace <n>` header".into(),
    })?;
    let n = crate::text::parse_header(line_no, header, "brace")?;
    let add_rows = crate::text::parse_rows(&mut lines, n)?;
    let mul_rows = crate::text::parse_rows(&mut lines, n)?;
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "unexpected trailing content".into(),
        });
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| add_rows[e][x] == x && add_rows[x][e] == x))
        .ok_or(Error::IdentityNotZero)?;
    let swap = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
    let relabel = |rows: &[Vec<usize>]| -> Vec<Vec<usize>> {
        let mut out = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                out[swap(a)][swap(b)] = swap(rows[a][b]);
            }
        }
        out
    };
    SkewBrace::from_tables(&relabel(&add_rows), &relabel(&mul_rows))
}

pub fn format_brace_text(a: &SkewBrace) -> String {
    let mut s = format!("brace {}\n", a.order());
    crate::text::push_rows(&mut s, a.additive());
    s.push('\n');
    crate::text::push_rows(&mut s, a.multiplicative());
    s
}
