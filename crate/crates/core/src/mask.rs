use std::cmp::Ordering;
use std::fmt;

/// A subset of `{0..n-1}` stored as a bitset.
///
/// Masks order by size first, then by the bitset read as an unsigned integer
/// (element `i` is bit `i`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    n: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(n: usize) -> Self {
        SubsetMask {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut m = Self::empty(n);
        for i in 0..n {
            m.insert(i);
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        Self::from_elements(n, [0])
    }

    pub fn from_elements(n: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(n);
        for x in elems {
            m.insert(x);
        }
        m
    }

    pub fn parent_order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Returns `true` when `x` was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.n, "element {x} out of range for order {}", self.n);
        let was = self.contains(x);
        self.words[x / 64] |= 1 << (x % 64);
        !was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1 && self.contains(0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| self.contains(x))
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({}; {})", self.n, self)
    }
}

/// Renders as a sorted element list, e.g. `{0,2,4}`.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
