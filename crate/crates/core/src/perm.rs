//! Permutations of `1..=d` stored as 0-based image lists.
//!
//! Composition is left-to-right: `compose(p, q)` applies `p` first, then `q`.
//! The external text form is the 1-based image list, e.g. `[2,3,1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Ordering is lexicographic on image lists (shorter lists first when degrees differ).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::NotAPermutation(format!("{:?}", images)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, as in the text form.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation(format!("{:?}", images)));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self` then `other`: the result maps `x` to `other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        compose(self, other)
    }
}

/// Left-to-right composition: `result(x) = q(p(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(Permutation {
        images: p.images.iter().map(|&x| q.images[x]).collect(),
    })
}

/// Lexicographic comparison of image lists.
pub fn lex_compare(f: &Permutation, g: &Permutation) -> Result<Ordering> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: f.degree(),
            right: g.degree(),
        });
    }
    Ok(f.images.cmp(&g.images))
}

/// Sorts distinct permutations lexicographically.
///
/// Returns the sorted list together with `sigma`, a permutation of positions
/// with `sorted[k] == elems[sigma(k)]`. Reading `sorted` back through
/// `sigma^-1` recovers the original tuple.
pub fn sort_elements(elems: &[Permutation]) -> Result<(Vec<Permutation>, Permutation)> {
    if let Some(first) = elems.first() {
        for p in elems {
            if p.degree() != first.degree() {
                return Err(Error::DegreeMismatch {
                    left: first.degree(),
                    right: p.degree(),
                });
            }
        }
    }
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by(|&a, &b| elems[a].images.cmp(&elems[b].images));
    for w in order.windows(2) {
        if elems[w[0]] == elems[w[1]] {
            let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(Error::DuplicateElement { first, second });
        }
    }
    let sorted = order.iter().map(|&i| elems[i].clone()).collect();
    Ok((sorted, Permutation { images: order }))
}

/// Inverse of [`sort_elements`]: given the sorted list and `sigma`, rebuild
/// the original positional tuple.
pub fn unsort_elements(sorted: &[Permutation], sigma: &Permutation) -> Result<Vec<Permutation>> {
    if sorted.len() != sigma.degree() {
        return Err(Error::DegreeMismatch {
            left: sorted.len(),
            right: sigma.degree(),
        });
    }
    let mut out = vec![None; sorted.len()];
    for (k, p) in sorted.iter().enumerate() {
        out[sigma.apply(k)] = Some(p.clone());
    }
    Ok(out.into_iter().map(|p| p.expect("sigma is a bijection")).collect())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::NotAPermutation(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Permutation { images: vec![] });
        }
        let images = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::NotAPermutation(s.to_string()))?;
        Self::from_one_based(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    fn all_perms(d: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == used.len() {
                out.push(Permutation::from_images(cur.clone()).unwrap());
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = vec![];
        rec(&mut vec![], &mut vec![false; d], &mut out);
        out
    }

    #[test]
    fn compose_examples() {
        let q = p(&[3, 1, 2]);
        assert_eq!(compose(&Permutation::identity(3), &q).unwrap(), q);
        assert_eq!(compose(&p(&[2, 1, 3]), &p(&[2, 1, 3])).unwrap(), p(&[1, 2, 3]));
        // pointwise q(p(x)): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(compose(&p(&[2, 3, 1]), &p(&[2, 1, 3])).unwrap(), p(&[1, 3, 2]));
        assert!(matches!(
            compose(&p(&[1, 2]), &p(&[1, 2, 3])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn lex_examples() {
        let id = Permutation::identity(3);
        for q in all_perms(3) {
            if !q.is_identity() {
                assert_eq!(lex_compare(&id, &q).unwrap(), Ordering::Less);
            }
        }
        assert_eq!(lex_compare(&p(&[2, 1, 3]), &p(&[2, 3, 1])).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&p(&[2, 3, 1]), &p(&[2, 3, 1])).unwrap(), Ordering::Equal);
        assert!(lex_compare(&p(&[1]), &p(&[1, 2])).is_err());
    }

    #[test]
    fn lex_is_total_order_up_to_degree_5() {
        for d in 1..=5 {
            let perms = all_perms(d);
            for a in &perms {
                for b in &perms {
                    let ab = lex_compare(a, b).unwrap();
                    assert_eq!(ab.reverse(), lex_compare(b, a).unwrap());
                    assert_eq!(ab == Ordering::Equal, a == b);
                }
            }
            // Transitivity: sorting by lex_compare yields a chain.
            let mut sorted = perms.clone();
            sorted.sort_by(|a, b| lex_compare(a, b).unwrap());
            for w in sorted.windows(2) {
                assert_eq!(lex_compare(&w[0], &w[1]).unwrap(), Ordering::Less);
            }
            if d <= 4 {
                for a in &perms {
                    for b in &perms {
                        for c in &perms {
                            if lex_compare(a, b).unwrap() == Ordering::Less
                                && lex_compare(b, c).unwrap() == Ordering::Less
                            {
                                assert_eq!(lex_compare(a, c).unwrap(), Ordering::Less);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn compose_associative_with_identity_neutral() {
        for d in 1..=4 {
            let perms = all_perms(d);
            let id = Permutation::identity(d);
            for a in &perms {
                assert_eq!(&compose(&id, a).unwrap(), a);
                assert_eq!(&compose(a, &id).unwrap(), a);
                assert!(compose(a, &a.inverse()).unwrap().is_identity());
                for b in &perms {
                    let ab = compose(a, b).unwrap();
                    for c in &perms {
                        assert_eq!(
                            compose(&ab, c).unwrap(),
                            compose(a, &compose(b, c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sort_examples() {
        let sorted_in = vec![p(&[1, 2, 3]), p(&[2, 3, 1]), p(&[3, 1, 2])];
        let (s, sigma) = sort_elements(&sorted_in).unwrap();
        assert_eq!(s, sorted_in);
        assert!(sigma.is_identity());

        let (s, sigma) = sort_elements(&[p(&[2, 1]), p(&[1, 2])]).unwrap();
        assert_eq!(s, vec![p(&[1, 2]), p(&[2, 1])]);
        assert_eq!(sigma, p(&[2, 1]));

        // Regular representation of C3 listed as (id, x^2, x) where x = [2,3,1].
        let tuple = vec![p(&[1, 2, 3]), p(&[3, 1, 2]), p(&[2, 3, 1])];
        let (s, sigma) = sort_elements(&tuple).unwrap();
        // sorted = [id, x, x^2] = [tuple[0], tuple[2], tuple[1]]
        assert_eq!(s, vec![p(&[1, 2, 3]), p(&[2, 3, 1]), p(&[3, 1, 2])]);
        assert_eq!(sigma, p(&[1, 3, 2]));
        assert_eq!(unsort_elements(&s, &sigma).unwrap(), tuple);

        assert!(matches!(
            sort_elements(&[p(&[2, 1]), p(&[2, 1])]),
            Err(Error::DuplicateElement { .. })
        ));
    }

    #[test]
    fn text_form() {
        let q: Permutation = " [ 2, 3 ,1 ]".parse().unwrap();
        assert_eq!(q, p(&[2, 3, 1]));
        assert_eq!(q.to_string(), "[2,3,1]");
        assert!("[1,1]".parse::<Permutation>().is_err());
        assert!("[0,1]".parse::<Permutation>().is_err());
        assert!("2,1".parse::<Permutation>().is_err());
        assert_eq!("[]".parse::<Permutation>().unwrap().degree(), 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_perm(d: usize) -> impl Strategy<Value = Permutation> {
            Just((0..d).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        }

        proptest! {
            #[test]
            fn sort_then_unsort_round_trips(tuple in proptest::collection::btree_set(arb_perm(6), 1..30)) {
                let mut tuple: Vec<Permutation> = tuple.into_iter().collect();
                tuple.reverse();
                let (sorted, sigma) = sort_elements(&tuple).unwrap();
                prop_assert_eq!(unsort_elements(&sorted, &sigma).unwrap(), tuple);
            }

            #[test]
            fn text_round_trips(q in arb_perm(9)) {
                prop_assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
            }
        }
    }
}
