//! Compact brace records and the `SBDB 1` database format.
//!
//! A brace of order `n` is stored as generators of two permutation groups of
//! degree `n`: the right regular representations `a_x = (i -> i + x)` of
//! `(A, +)` and `g_x = (i -> i o x)` of `(A, o)`. Both tuples are indexed by
//! the same elements, so `a_i o a_j = a_k` exactly when `g_i g_j = g_k`.
//! Sorting each generated group lexicographically loses the positions; the
//! permutations `sigma` and `tau` (`sorted[k] = tuple[sigma(k)]`) restore
//! them.
//!
//! ```text
//! SBDB 1
//! brace 3 1
//! gens_add 1
//! [2,3,1]
//! sigma [1,2,3]
//! gens_mul 1
//! [2,3,1]
//! tau [1,2,3]
//! end
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{Read, Write};
use std::sync::OnceLock;

use crate::brace::{self, BraceDescriptor, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{self, CayleyGroup};
use crate::mask::SubsetMask;
use crate::perm::{compose, sort_elements, unsort_elements, Permutation};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DbRecord {
    pub n: usize,
    pub gens_add: Vec<Permutation>,
    pub gens_mul: Vec<Permutation>,
    pub sigma: Permutation,
    pub tau: Permutation,
}

/// Greedy generators: walk the tuple in lexicographic order and keep every
/// element outside the subgroup generated so far.
fn pack_group(g: &CayleyGroup) -> (Vec<Permutation>, Permutation) {
    let tuple = group::right_regular_representation(g);
    let (sorted, sigma) = sort_elements(&tuple).expect("regular representation is faithful");
    let n = g.order();
    let mut labels = vec![];
    let mut gens = vec![];
    let mut sub = SubsetMask::zero(n);
    for (k, p) in sorted.iter().enumerate() {
        let x = sigma.apply(k);
        if !sub.contains(x) {
            labels.push(x);
            gens.push(p.clone());
            sub = group::subgroup_generated(g, &SubsetMask::from_elements(n, labels.iter().copied()));
        }
    }
    (gens, sigma)
}

pub fn pack(a: &SkewBrace) -> DbRecord {
    let (gens_add, sigma) = pack_group(a.additive());
    let (gens_mul, tau) = pack_group(a.multiplicative());
    DbRecord {
        n: a.order(),
        gens_add,
        gens_mul,
        sigma,
        tau,
    }
}

/// The group generated by `gens`, sorted, or an error once it outgrows `n`.
fn bounded_closure(n: usize, gens: &[Permutation], which: &str) -> Result<Vec<Permutation>> {
    for p in gens {
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: p.degree(),
            });
        }
    }
    let id = Permutation::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = compose(&p, g)?;
            if seen.insert(q.clone()) {
                if seen.len() > n {
                    return Err(Error::MalformedRecord(format!(
                        "{which} generators generate more than {n} elements"
                    )));
                }
                queue.push(q);
            }
        }
    }
    if seen.len() != n {
        return Err(Error::OrderMismatch(seen.len(), n));
    }
    Ok(seen.into_iter().collect())
}

/// Table of the group whose elements are `tuple`, with `x * y` the label of
/// `compose(tuple[x], tuple[y])`.
fn table_from_tuple(tuple: &[Permutation], which: &str) -> Result<CayleyGroup> {
    let n = tuple.len();
    if !tuple[0].is_identity() {
        return Err(Error::MalformedRecord(format!(
            "{which} recovery does not put the identity at position 1"
        )));
    }
    let index: HashMap<&Permutation, usize> = tuple.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = vec![0; n * n];
    for (i, p) in tuple.iter().enumerate() {
        for (j, q) in tuple.iter().enumerate() {
            table[i * n + j] = index[&compose(p, q)?];
        }
    }
    CayleyGroup::validate_flat(n, table)
}

fn unpack_group(n: usize, gens: &[Permutation], perm: &Permutation, which: &str) -> Result<CayleyGroup> {
    if perm.degree() != n {
        return Err(Error::MalformedRecord(format!(
            "{which} recovery permutation has degree {}, expected {n}",
            perm.degree()
        )));
    }
    let sorted = bounded_closure(n, gens, which)?;
    let tuple = unsort_elements(&sorted, perm)?;
    let g = table_from_tuple(&tuple, which)?;
    if group::right_regular_representation(&g) != tuple {
        return Err(Error::MalformedRecord(format!(
            "{which} recovery permutation does not restore the element positions"
        )));
    }
    Ok(g)
}

pub fn unpack(rec: &DbRecord) -> Result<SkewBrace> {
    if rec.n == 0 {
        return Err(Error::EmptyOrder);
    }
    let add = unpack_group(rec.n, &rec.gens_add, &rec.sigma, "additive")?;
    let mul = unpack_group(rec.n, &rec.gens_mul, &rec.tau, "multiplicative")?;
    SkewBrace::from_cocycle(&mul, &add)
}

impl DbRecord {
    /// Whether the generators of the additive group commute, i.e. the
    /// brace is classical.
    pub fn is_classical(&self) -> bool {
        self.gens_add.iter().all(|p| {
            self.gens_add
                .iter()
                .all(|q| compose(p, q).ok() == compose(q, p).ok())
        })
    }

    fn push_text(&self, out: &mut String) {
        let list = |out: &mut String, key: &str, gens: &[Permutation]| {
            out.push_str(&format!("{key} {}\n", gens.len()));
            for p in gens {
                out.push_str(&format!("{p}\n"));
            }
        };
        list(out, "gens_add", &self.gens_add);
        out.push_str(&format!("sigma {}\n", self.sigma));
        list(out, "gens_mul", &self.gens_mul);
        out.push_str(&format!("tau {}\n", self.tau));
    }

    /// The record body as it appears in a database file.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        self.push_text(&mut s);
        s
    }
}

#[derive(Debug, Clone)]
pub struct DbEntry {
    pub order: usize,
    /// 1-based position among the braces of this order.
    pub index: usize,
    pub record: DbRecord,
    descriptor: OnceLock<BraceDescriptor>,
}

impl DbEntry {
    pub fn new(order: usize, index: usize, record: DbRecord) -> Self {
        DbEntry {
            order,
            index,
            record,
            descriptor: OnceLock::new(),
        }
    }

    pub fn brace(&self) -> Result<SkewBrace> {
        unpack(&self.record)
    }

    pub fn descriptor(&self) -> Result<&BraceDescriptor> {
        if let Some(d) = self.descriptor.get() {
            return Ok(d);
        }
        let d = brace::describe(&self.brace()?);
        Ok(self.descriptor.get_or_init(|| d))
    }
}

impl PartialEq for DbEntry {
    fn eq(&self, other: &Self) -> bool {
        (self.order, self.index, &self.record) == (other.order, other.index, &other.record)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Database {
    pub version: u32,
    pub entries: Vec<DbEntry>,
}

impl Default for Database {
    fn default() -> Self {
        Database {
            version: FORMAT_VERSION,
            entries: vec![],
        }
    }
}

impl Database {
    /// Packs braces and numbers them per order, sorted by descriptor then by
    /// record text.
    pub fn from_braces(braces: &[SkewBrace]) -> Database {
        let mut by_order: BTreeMap<usize, Vec<(BraceDescriptor, String, DbRecord)>> = BTreeMap::new();
        for b in braces {
            let rec = pack(b);
            by_order
                .entry(b.order())
                .or_default()
                .push((brace::describe(b), rec.to_text(), rec));
        }
        let mut entries = vec![];
        for (order, mut list) in by_order {
            list.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
            for (k, (d, _, rec)) in list.into_iter().enumerate() {
                let e = DbEntry::new(order, k + 1, rec);
                let _ = e.descriptor.set(d);
                entries.push(e);
            }
        }
        Database {
            version: FORMAT_VERSION,
            entries,
        }
    }

    pub fn orders(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.entries.iter().map(|e| e.order).collect();
        set.into_iter().collect()
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &DbEntry> {
        self.entries.iter().filter(move |e| e.order == n)
    }

    pub fn get(&self, order: usize, index: usize) -> Result<&DbEntry> {
        let count = self.of_order(order).count();
        self.of_order(order)
            .find(|e| e.index == index)
            .ok_or(Error::IndexOutOfRange { order, index, count })
    }

    /// Unpacks every record and checks per-order indices run `1..=k`.
    pub fn verify(&self) -> Result<()> {
        let mut next: BTreeMap<usize, usize> = BTreeMap::new();
        for e in &self.entries {
            let expect = next.entry(e.order).or_insert(1);
            if e.index != *expect {
                return Err(Error::MalformedRecord(format!(
                    "brace {} {}: expected index {}",
                    e.order, e.index, expect
                )));
            }
            *expect += 1;
            if e.record.n != e.order {
                return Err(Error::OrderMismatch(e.record.n, e.order));
            }
            let b = e.brace().map_err(|err| {
                Error::MalformedRecord(format!("brace {} {}: {err}", e.order, e.index))
            })?;
            if pack(&b) != e.record {
                return Err(Error::MalformedRecord(format!(
                    "brace {} {} is not in packed normal form",
                    e.order, e.index
                )));
            }
        }
        Ok(())
    }
}

/// `(n, s(n), b(n))` per order present in the database.
pub fn census(db: &Database) -> Vec<(usize, usize, usize)> {
    db.orders()
        .into_iter()
        .map(|n| {
            let s = db.of_order(n).count();
            let b = db.of_order(n).filter(|e| e.record.is_classical()).count();
            (n, s, b)
        })
        .collect()
}

pub fn format_db(db: &Database) -> String {
    let mut out = format!("SBDB {}\n", db.version);
    for e in &db.entries {
        out.push_str(&format!("\nbrace {} {}\n", e.order, e.index));
        e.record.push_text(&mut out);
        out.push_str("end\n");
    }
    out
}

pub fn write_db(db: &Database, mut sink: impl Write) -> Result<()> {
    sink.write_all(format_db(db).as_bytes())
        .map_err(|e| Error::Io(e.to_string()))
}

pub fn read_db(mut source: impl Read) -> Result<Database> {
    let mut text = String::new();
    source
        .read_to_string(&mut text)
        .map_err(|e| Error::Io(e.to_string()))?;
    parse_db(&text)
}

struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self, expecting: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((line, s)) => {
                self.last = line;
                Ok((line, s))
            }
            None => Err(Error::Parse {
                line: self.last + 1,
                message: format!("unexpected end of file, expected {expecting}"),
            }),
        }
    }

    /// `<key> <value>` with the given key.
    fn keyed(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (line, s) = self.next(key)?;
        match s.split_once(char::is_whitespace) {
            Some((k, v)) if k == key => Ok((line, v.trim())),
            _ => Err(Error::Parse {
                line,
                message: format!("expected `{key} ...`"),
            }),
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_perm(line: usize, s: &str, n: usize) -> Result<Permutation> {
    let p: Permutation = s.parse().map_err(|e: Error| parse_error(line, e.to_string()))?;
    if p.degree() != n {
        return Err(parse_error(line, format!("permutation of degree {}, expected {n}", p.degree())));
    }
    Ok(p)
}

fn parse_count(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| parse_error(line, format!("expected a count, found `{s}`")))
}

fn parse_gens(lines: &mut Lines, key: &str, n: usize) -> Result<Vec<Permutation>> {
    let (line, v) = lines.keyed(key)?;
    let k = parse_count(line, v)?;
    (0..k)
        .map(|_| {
            let (line, s) = lines.next("a permutation")?;
            parse_perm(line, s, n)
        })
        .collect()
}

pub fn parse_db(text: &str) -> Result<Database> {
    let mut lines = Lines {
        inner: Box::new(crate::text::content_lines(text)),
        last: 0,
    };
    let (line, header) = lines.next("`SBDB <version>`")?;
    let version = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["SBDB", v] => v,
        _ => return Err(parse_error(line, "expected `SBDB <version>` header")),
    };
    if version != FORMAT_VERSION.to_string() {
        return Err(Error::Version(version.to_string()));
    }
    let mut entries = vec![];
    while let Some((line, s)) = lines.inner.next() {
        lines.last = line;
        let head: Vec<&str> = s.split_whitespace().collect();
        let (order, index) = match head[..] {
            ["brace", n, k] => match (n.parse::<usize>(), k.parse::<usize>()) {
                (Ok(n), Ok(k)) if n > 0 => (n, k),
                _ => return Err(parse_error(line, "expected `brace <order> <index>`")),
            },
            _ => return Err(parse_error(line, "expected `brace <order> <index>`")),
        };
        let gens_add = parse_gens(&mut lines, "gens_add", order)?;
        let (line, v) = lines.keyed("sigma")?;
        let sigma = parse_perm(line, v, order)?;
        let gens_mul = parse_gens(&mut lines, "gens_mul", order)?;
        let (line, v) = lines.keyed("tau")?;
        let tau = parse_perm(line, v, order)?;
        let (line, s) = lines.next("`end`")?;
        if s != "end" {
            return Err(parse_error(line, "expected `end`"));
        }
        entries.push(DbEntry::new(
            order,
            index,
            DbRecord {
                n: order,
                gens_add,
                gens_mul,
                sigma,
                tau,
            },
        ));
    }
    Ok(Database {
        version: FORMAT_VERSION,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_order;
    use crate::group::cyclic;

    #[test]
    fn order_one() {
        let a = SkewBrace::trivial(&CayleyGroup::trivial());
        let rec = pack(&a);
        assert!(rec.gens_add.is_empty() && rec.gens_mul.is_empty());
        assert!(rec.sigma.is_identity() && rec.tau.is_identity());
        assert_eq!(unpack(&rec).unwrap(), a);
    }

    #[test]
    fn trivial_c3_by_hand() {
        // right translations of Z/3: x=1 -> [2,3,1], x=2 -> [3,1,2]; the
        // lex order id < [2,3,1] < [3,1,2] already matches the labels and
        // [2,3,1] alone generates
        let rec = pack(&SkewBrace::trivial(&cyclic(3)));
        let g: Permutation = "[2,3,1]".parse().unwrap();
        assert_eq!(rec.gens_add, vec![g.clone()]);
        assert_eq!(rec.gens_mul, vec![g]);
        assert_eq!(rec.sigma, rec.tau);
        assert!(rec.sigma.is_identity());
    }

    #[test]
    fn round_trip_order_8() {
        for b in enumerate_order(8, false).unwrap() {
            let rec = pack(&b);
            assert_eq!(unpack(&rec).unwrap(), b);
        }
    }

    #[test]
    fn dropped_generator_is_an_order_mismatch() {
        let b = enumerate_order(8, false).unwrap().into_iter().find(|b| pack(b).gens_add.len() > 1).unwrap();
        let mut rec = pack(&b);
        rec.gens_add.pop();
        assert!(matches!(unpack(&rec), Err(Error::OrderMismatch(_, 8))));
    }

    #[test]
    fn corrupted_recovery_permutation_is_rejected() {
        let swap = Permutation::from_images(vec![0, 2, 1, 3, 4, 5, 6, 7]).unwrap();
        for b in enumerate_order(8, false).unwrap() {
            let mut rec = pack(&b);
            // a regular representation sends 0 to x, so sorting keeps labels
            assert!(rec.sigma.is_identity() && rec.tau.is_identity());
            rec.sigma = swap.clone();
            assert!(matches!(unpack(&rec), Err(Error::MalformedRecord(_))));
            let mut rec = pack(&b);
            rec.tau = swap.clone();
            assert!(matches!(unpack(&rec), Err(Error::MalformedRecord(_))));
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        let empty = Database::default();
        assert_eq!(parse_db(&format_db(&empty)).unwrap(), empty);
        let db = Database::from_braces(&enumerate_order(6, false).unwrap());
        let text = format_db(&db);
        let back = parse_db(&text).unwrap();
        assert_eq!(back, db);
        assert_eq!(format_db(&back), text);
        back.verify().unwrap();
        assert_eq!(census(&back), vec![(6, 6, 2)]);

        let cut = &text[..text.len() - 5];
        assert!(matches!(parse_db(cut), Err(Error::Parse { .. })));
        assert!(matches!(parse_db("SBDB 2\n"), Err(Error::Version(_))));
        let commented = text.replacen("SBDB 1\n", "SBDB 1\n# comment\n\n", 1);
        assert_eq!(parse_db(&commented).unwrap(), db);
    }

    #[test]
    fn lookup_by_index() {
        let db = Database::from_braces(&enumerate_order(4, false).unwrap());
        assert!(db.get(4, 4).is_ok());
        assert!(matches!(
            db.get(4, 5),
            Err(Error::IndexOutOfRange { order: 4, index: 5, count: 4 })
        ));
    }
}
