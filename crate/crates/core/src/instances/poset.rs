//! Finite posets given by cover relations.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::canon::canonical_form;
use crate::error::{Error, Result};

/// Largest poset handled; relations are stored as 64-bit rows.
pub const MAX_POSET_SIZE: usize = 64;

/// A finite poset on `0..n`. `less[i] >> j & 1` means `i < j`; the relation
/// is stored transitively closed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    less: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<Value>,
    covers: Vec<(Value, Value)>,
}

pub(crate) fn label_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Transitive closure of a relation on at most 64 points.
fn closure(rows: &mut [u64]) {
    let n = rows.len();
    for k in 0..n {
        for i in 0..n {
            if rows[i] >> k & 1 == 1 {
                rows[i] |= rows[k];
            }
        }
    }
}

impl FinitePoset {
    /// Build from labels and cover (or any generating) relations `a < b`.
    pub fn from_covers(labels: Vec<String>, covers: &[(String, String)]) -> Result<Self> {
        if labels.len() > MAX_POSET_SIZE {
            return Err(Error::InvalidPoset(format!("{} elements exceed the limit of {MAX_POSET_SIZE}", labels.len())));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element `{l}`")));
            }
        }
        let mut rows = vec![0u64; labels.len()];
        for (a, b) in covers {
            let lookup = |x: &String| {
                index.get(x).copied().ok_or_else(|| {
                    Error::InvalidPoset(format!("relation `{a}` < `{b}` mentions unknown element `{x}`"))
                })
            };
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(Error::InvalidPoset(format!("relation `{a}` < `{b}` is a loop")));
            }
            rows[i] |= 1 << j;
        }
        let mut closed = rows.clone();
        closure(&mut closed);
        for (a, b) in covers {
            let (i, j) = (index[a], index[b]);
            if closed[j] >> i & 1 == 1 {
                return Err(Error::InvalidPoset(format!("relation `{a}` < `{b}` lies on a cycle")));
            }
        }
        Ok(FinitePoset { labels, less: closed })
    }

    /// Build from a strict relation given as rows; it is closed transitively.
    pub fn from_relation(rows: Vec<u64>) -> Result<Self> {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::from_relation_labeled(labels, rows)
    }

    pub(crate) fn from_relation_labeled(labels: Vec<String>, mut rows: Vec<u64>) -> Result<Self> {
        if rows.len() > MAX_POSET_SIZE {
            return Err(Error::InvalidPoset(format!("{} elements exceed the limit of {MAX_POSET_SIZE}", rows.len())));
        }
        closure(&mut rows);
        if let Some(i) = (0..rows.len()).find(|&i| rows[i] >> i & 1 == 1) {
            return Err(Error::InvalidPoset(format!("element `{}` lies on a cycle", labels[i])));
        }
        Ok(FinitePoset { labels, less: rows })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PosetJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidPoset(format!("malformed JSON: {e}")))?;
        let labels = raw.elements.iter().map(label_of).collect();
        let covers: Vec<(String, String)> = raw.covers.iter().map(|(a, b)| (label_of(a), label_of(b))).collect();
        Self::from_covers(labels, &covers)
    }

    pub fn to_json(&self) -> String {
        let raw = PosetJson {
            elements: self.labels.iter().map(|l| Value::String(l.clone())).collect(),
            covers: self
                .covers()
                .into_iter()
                .map(|(a, b)| (Value::String(self.labels[a].clone()), Value::String(self.labels[b].clone())))
                .collect(),
        };
        serde_json::to_string(&raw).expect("serializable")
    }

    pub fn empty() -> Self {
        FinitePoset { labels: Vec::new(), less: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn less_rows(&self) -> &[u64] {
        &self.less
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i] >> j & 1 == 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j)
    }

    /// Pairs `(i, j)` with `j` covering `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.less(i, j) && !(0..n).any(|k| self.less(i, k) && self.less(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn all_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    /// Elements with nothing below them.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.size()).filter(|&j| !(0..self.size()).any(|i| self.less(i, j))).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.less[i] == 0).collect()
    }

    /// No two elements are comparable.
    pub fn is_discrete(&self) -> bool {
        self.less.iter().all(|&r| r == 0)
    }

    /// Connected components of the comparability graph, as masks.
    pub fn components(&self) -> Vec<u64> {
        let n = self.size();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = vec![s];
            while let Some(v) = frontier.pop() {
                for w in 0..n {
                    if comp >> w & 1 == 0 && (self.less(v, w) || self.less(w, v)) {
                        comp |= 1 << w;
                        frontier.push(w);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// The subposet on the elements of `mask`.
    pub fn induced(&self, mask: u64) -> FinitePoset {
        let keep: Vec<usize> = (0..self.size()).filter(|&i| mask >> i & 1 == 1).collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let less = keep
            .iter()
            .map(|&i| keep.iter().enumerate().filter(|(_, &j)| self.less(i, j)).fold(0u64, |r, (k, _)| r | 1 << k))
            .collect();
        FinitePoset { labels, less }
    }

    /// Is `mask` closed downward?
    pub fn is_lower_ideal(&self, mask: u64) -> bool {
        (0..self.size()).filter(|&j| mask >> j & 1 == 1).all(|j| {
            (0..self.size()).all(|i| !self.less(i, j) || mask >> i & 1 == 1)
        })
    }

    /// All lower ideals, as masks, in increasing numeric order.
    pub fn lower_ideals(&self) -> Vec<u64> {
        let n = self.size();
        let below: Vec<u64> =
            (0..n).map(|j| (0..n).filter(|&i| self.less(i, j)).fold(0u64, |m, i| m | 1 << i)).collect();
        let mut out = Vec::new();
        // Extend ideals element by element along a linear extension.
        let order = self.linear_extension();
        fn go(k: usize, order: &[usize], below: &[u64], mask: u64, out: &mut Vec<u64>) {
            if k == order.len() {
                out.push(mask);
                return;
            }
            let v = order[k];
            go(k + 1, order, below, mask, out);
            if below[v] & !mask == 0 {
                go(k + 1, order, below, mask | 1 << v, out);
            }
        }
        go(0, &order, &below, 0, &mut out);
        out.sort_unstable();
        out
    }

    /// Elements sorted so that `i < j` in the poset implies `i` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&j| (0..n).filter(|&i| self.less(i, j)).count());
        order
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.size();
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("a.{l}")).collect();
        labels.extend(other.labels.iter().map(|l| format!("b.{l}")));
        let mut less = self.less.clone();
        less.extend(other.less.iter().map(|r| r << shift));
        FinitePoset { labels, less }
    }

    /// Cartesian product with the componentwise order.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.size(), other.size());
        if n * m > MAX_POSET_SIZE {
            return Err(Error::InvalidPoset(format!("product has {} elements, above {MAX_POSET_SIZE}", n * m)));
        }
        let mut labels = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
            }
        }
        let mut less = vec![0u64; n * m];
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    for l in 0..m {
                        if (i, j) != (k, l) && self.leq(i, k) && other.leq(j, l) {
                            less[i * m + j] |= 1 << (k * m + l);
                        }
                    }
                }
            }
        }
        Ok(FinitePoset { labels, less })
    }

    /// Canonical relation rows, identical for isomorphic posets.
    pub fn canonical_rows(&self) -> Vec<u64> {
        canonical_form(&self.less).0
    }

    /// Multiset of cover-relation labels, used in diagnostics.
    pub fn describe(&self) -> String {
        let covers: Vec<String> =
            self.covers().into_iter().map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b])).collect();
        format!("{{{}}}", covers.join(","))
    }
}

/// `n` mutually incomparable elements.
pub fn antichain(n: usize) -> FinitePoset {
    FinitePoset::from_relation(vec![0; n]).expect("antichain is a poset")
}

/// A totally ordered set with `n` elements.
pub fn chain(n: usize) -> FinitePoset {
    FinitePoset::from_relation((0..n).map(|i| if i + 1 < n { 1u64 << (i + 1) } else { 0 }).collect())
        .expect("chain is a poset")
}

/// Subsets of `{1..n}` ordered by inclusion; `n ≤ 6`.
pub fn boolean_lattice(n: usize) -> FinitePoset {
    assert!(n <= 6, "boolean lattice B_n supported for n <= 6");
    let size = 1usize << n;
    let labels = (0..size)
        .map(|s| {
            let items: Vec<String> = (0..n).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    let rows = (0..size)
        .map(|s| (0..size).filter(|&t| t != s && t & s == s).fold(0u64, |r, t| r | 1 << t))
        .collect();
    FinitePoset::from_relation_labeled(labels, rows).expect("boolean lattice is a poset")
}

/// Face lattice of a `k`-gon: empty face, `k` vertices, `k` edges, the
/// polygon itself.
pub fn polygon_face_lattice(k: usize) -> FinitePoset {
    assert!(k >= 2, "a polygon needs at least two vertices");
    let mut labels = vec!["empty".to_string()];
    labels.extend((0..k).map(|i| format!("v{i}")));
    labels.extend((0..k).map(|i| format!("e{i}")));
    labels.push("polygon".into());
    let mut covers = Vec::new();
    for i in 0..k {
        covers.push(("empty".to_string(), format!("v{i}")));
        covers.push((format!("v{i}"), format!("e{i}")));
        covers.push((format!("v{}", (i + 1) % k), format!("e{i}")));
        covers.push((format!("e{i}"), "polygon".to_string()));
    }
    FinitePoset::from_covers(labels, &covers).expect("face lattice is a poset")
}

/// All posets on `n` elements up to isomorphism, keyed by canonical rows.
/// Enumerates naturally labeled strict orders; practical for `n ≤ 6`.
pub fn posets_of_size(n: usize) -> Vec<Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rows = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| {
            (0..n).filter(|&j| rows[i] >> j & 1 == 1).all(|j| rows[j] & !rows[i] == 0)
        });
        if transitive {
            seen.entry(canonical_form(&rows).0).or_insert(());
        }
    }
    seen.into_keys().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_errors() {
        let p = FinitePoset::from_json(r#"{"elements":["a","b","c"],"covers":[["a","b"],["b","c"]]}"#).unwrap();
        assert!(p.less(0, 2));
        let q = FinitePoset::from_json(&p.to_json()).unwrap();
        assert_eq!(p.canonical_rows(), q.canonical_rows());
        let err = FinitePoset::from_json(r#"{"elements":["a"],"covers":[["a","z"]]}"#).unwrap_err();
        assert!(err.to_string().contains("`a` < `z`"));
        let err = FinitePoset::from_json(r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#).unwrap_err();
        assert!(err.to_string().contains("cycle"));
        assert!(FinitePoset::from_json("{").is_err());
        let nums = FinitePoset::from_json(r#"{"elements":[1,2],"covers":[[1,2]]}"#).unwrap();
        assert!(nums.less(0, 1));
    }

    #[test]
    fn ideals_and_components() {
        assert_eq!(antichain(3).lower_ideals().len(), 8);
        assert_eq!(chain(3).lower_ideals().len(), 4);
        assert_eq!(antichain(3).components().len(), 3);
        assert_eq!(chain(3).components().len(), 1);
        assert_eq!(chain(3).minimal(), vec![0]);
        assert!(antichain(2).is_discrete());
    }

    #[test]
    fn constructors() {
        let b3 = boolean_lattice(3);
        assert_eq!(b3.size(), 8);
        assert_eq!(b3.covers().len(), 12);
        let prod = chain(2).product(&chain(2)).unwrap();
        assert_eq!(prod.canonical_rows(), boolean_lattice(2).canonical_rows());
        assert_eq!(polygon_face_lattice(4).size(), 10);
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| posets_of_size(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn relabeled_copies_share_canonical_rows() {
        let a = FinitePoset::from_covers(
            ["x", "y", "z", "w"].map(String::from).to_vec(),
            &[("x".into(), "y".into()), ("x".into(), "z".into()), ("w".into(), "z".into())],
        )
        .unwrap();
        let b = FinitePoset::from_covers(
            ["p", "q", "r", "s"].map(String::from).to_vec(),
            &[("s".into(), "q".into()), ("s".into(), "p".into()), ("r".into(), "p".into())],
        )
        .unwrap();
        assert_eq!(a.canonical_rows(), b.canonical_rows());
    }
}
