//! Compositions, partitions, and the refinement order.
//!
//! Convention: `β ≤ α` means `α` refines `β`, i.e. `I(β) ⊆ I(α)` where
//! `I(a_1,...,a_k) = {a_1, a_1+a_2, ..., a_1+...+a_{k-1}}`. "Coarsenings of β"
//! are the `α ≤ β`; "refinements of α" are the `β ≥ α`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::element::Basis;
use crate::error::{Error, Result};

/// An ordered list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

/// Build a composition from literal parts.
#[macro_export]
macro_rules! comp {
    () => { $crate::Composition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Composition::new(vec![$($x),+]) };
}

impl Composition {
    /// Panics if any part is zero; use [`Composition::try_new`] for input.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive: {parts:?}");
        Composition(parts)
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Parse { position: pos, message: "composition parts must be positive".into() });
        }
        Ok(Composition(parts))
    }

    /// Drop zero entries, as in `(a_1,...,j,a_i-j,...)` with `j = 0`.
    pub fn omitting_zeros(parts: Vec<usize>) -> Self {
        Composition(parts.into_iter().filter(|&p| p > 0).collect())
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(1,1,...,1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `|α|`
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `k(α)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Composition(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// All ways to write `α = βγ`, from `β = ()` to `γ = ()`.
    pub fn deconcatenations(&self) -> impl Iterator<Item = (Composition, Composition)> + '_ {
        (0..=self.len()).map(|i| (Composition(self.0[..i].to_vec()), Composition(self.0[i..].to_vec())))
    }

    /// All factorizations `α = α_1 α_2 ... α_h` into nonempty factors.
    pub fn factorizations(&self) -> Vec<Vec<Composition>> {
        let k = self.len();
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::with_capacity(1 << (k - 1));
        for mask in 0u64..(1 << (k - 1)) {
            let mut pieces = Vec::new();
            let mut start = 0;
            for cut in 1..k {
                if mask >> (cut - 1) & 1 == 1 {
                    pieces.push(Composition(self.0[start..cut].to_vec()));
                    start = cut;
                }
            }
            pieces.push(Composition(self.0[start..].to_vec()));
            out.push(pieces);
        }
        out
    }
}

impl Basis for Composition {
    fn degree(&self) -> usize {
        self.weight()
    }
}

/// Weight first, then fewer parts, then lexicographically larger parts.
fn canonical_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let wa: usize = a.iter().sum();
    let wb: usize = b.iter().sum();
    wa.cmp(&wb).then(a.len().cmp(&b.len())).then_with(|| b.cmp(a))
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    write!(f, "[{}]", parts.join(","))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse { position: 0, message: format!("expected a bracketed list, found `{t}`") })?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 1;
    for piece in inner.split(',') {
        let v: usize = piece.trim().parse().map_err(|_| Error::Parse {
            position: offset,
            message: format!("`{}` is not a positive integer", piece.trim()),
        })?;
        if v == 0 {
            return Err(Error::Parse { position: offset, message: "parts must be positive".into() });
        }
        out.push(v);
        offset += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_list(s)?))
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts; panics on a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive: {parts:?}");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Distinct rearrangements of the parts, i.e. all `α` with `s(α) = λ`.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut v = self.0.clone();
        v.sort_unstable();
        let mut out = vec![Composition(v.clone())];
        while next_permutation(&mut v) {
            out.push(Composition(v.clone()));
        }
        out.sort();
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Basis for Partition {
    fn degree(&self) -> usize {
        self.weight()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Partition::new(parse_list(s)?))
    }
}

/// All compositions of `n` in canonical order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out: Vec<Composition> = (0u64..(1 << (n - 1)))
        .map(|mask| {
            let set: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            composition_from_subset(&set, n).expect("subset within range")
        })
        .collect();
    out.sort();
    out
}

pub fn odd_compositions_of(n: usize) -> Vec<Composition> {
    compositions_of(n).into_iter().filter(Composition::is_odd).collect()
}

pub fn even_compositions_of(n: usize) -> Vec<Composition> {
    compositions_of(n).into_iter().filter(Composition::is_even).collect()
}

/// All partitions of `n` in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `I(α)`
pub fn subset_of(alpha: &Composition) -> BTreeSet<usize> {
    let mut acc = 0;
    let k = alpha.len();
    alpha.0[..k.saturating_sub(1)]
        .iter()
        .map(|p| {
            acc += p;
            acc
        })
        .collect()
}

/// Inverse of [`subset_of`] for compositions of `n`.
pub fn composition_from_subset(set: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if n == 0 {
        return if set.is_empty() {
            Ok(Composition::empty())
        } else {
            Err(Error::WeightMismatch { left: 0, right: *set.iter().next_back().unwrap() })
        };
    }
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::Parse { position: bad, message: format!("{bad} is outside 1..{n}") });
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &s in set.iter().chain(std::iter::once(&n)) {
        parts.push(s - prev);
        prev = s;
    }
    Ok(Composition(parts))
}

/// True iff `β ≤ α`, i.e. `α` refines `β`.
pub fn refines(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.weight() != alpha.weight() {
        return Err(Error::WeightMismatch { left: beta.weight(), right: alpha.weight() });
    }
    Ok(subset_of(beta).is_subset(&subset_of(alpha)))
}

/// All `α ≤ β`: merge adjacent parts of `β` in every way.
pub fn coarsenings(beta: &Composition) -> Vec<Composition> {
    let n = beta.weight();
    let set: Vec<usize> = subset_of(beta).into_iter().collect();
    let mut out: Vec<Composition> = (0u64..(1 << set.len()))
        .map(|mask| {
            let sub: BTreeSet<usize> =
                set.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
            composition_from_subset(&sub, n).expect("subset of I(β)")
        })
        .collect();
    out.sort();
    out
}

/// All `β ≥ α`: split parts of `α` in every way.
pub fn refinements(alpha: &Composition) -> Vec<Composition> {
    let n = alpha.weight();
    let base = subset_of(alpha);
    let free: Vec<usize> = (1..n).filter(|i| !base.contains(i)).collect();
    let mut out: Vec<Composition> = (0u64..(1 << free.len()))
        .map(|mask| {
            let mut sub = base.clone();
            sub.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s));
            composition_from_subset(&sub, n).expect("subset within range")
        })
        .collect();
    out.sort();
    out
}

type ShuffleTable = Vec<(Composition, u64)>;
type ShuffleMemo = RwLock<HashMap<(Composition, Composition), Arc<ShuffleTable>>>;

fn shuffle_memo() -> &'static ShuffleMemo {
    static MEMO: OnceLock<ShuffleMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The overlapping shuffles of `α` and `β` with multiplicities, so that
/// `M_α M_β = Σ mult(γ) M_γ`. Results are memoized process-wide.
pub fn quasi_shuffle(alpha: &Composition, beta: &Composition) -> Arc<ShuffleTable> {
    let key = (alpha.clone(), beta.clone());
    if let Some(hit) = shuffle_memo().read().expect("memo poisoned").get(&key) {
        return hit.clone();
    }
    let table = Arc::new(compute_quasi_shuffle(alpha, beta));
    shuffle_memo().write().expect("memo poisoned").insert(key, table.clone());
    table
}

fn compute_quasi_shuffle(alpha: &Composition, beta: &Composition) -> ShuffleTable {
    if alpha.is_empty() {
        return vec![(beta.clone(), 1)];
    }
    if beta.is_empty() {
        return vec![(alpha.clone(), 1)];
    }
    let a = alpha.0[0];
    let b = beta.0[0];
    let a_tail = Composition(alpha.0[1..].to_vec());
    let b_tail = Composition(beta.0[1..].to_vec());
    let mut acc: HashMap<Composition, u64> = HashMap::new();
    let mut add = |head: usize, table: &ShuffleTable| {
        for (g, m) in table {
            let mut parts = Vec::with_capacity(g.len() + 1);
            parts.push(head);
            parts.extend_from_slice(&g.0);
            *acc.entry(Composition(parts)).or_insert(0) += m;
        }
    };
    add(a, &quasi_shuffle(&a_tail, beta));
    add(b, &quasi_shuffle(alpha, &b_tail));
    add(a + b, &quasi_shuffle(&a_tail, &b_tail));
    let mut out: ShuffleTable = acc.into_iter().collect();
    out.sort();
    out
}

/// `s(α)`
pub fn sort_to_partition(alpha: &Composition) -> Partition {
    Partition::new(alpha.0.clone())
}

/// Merge each maximal segment `(even, ..., even, odd)` into a single part.
/// `None` when the last part is even.
pub fn odd_part(beta: &Composition) -> Option<Composition> {
    let mut out = Vec::new();
    let mut acc = 0;
    for &p in &beta.0 {
        acc += p;
        if p % 2 == 1 {
            out.push(acc);
            acc = 0;
        }
    }
    if acc != 0 {
        return None;
    }
    Some(Composition(out))
}

/// Number of compositions of `n` into odd parts: Fibonacci `f_n`.
pub fn count_odd_compositions(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..n {
        (a, b) = (b, a + b);
    }
    b
}

/// Number of compositions of `n` into even parts: `2^{n/2-1}` for even `n`.
pub fn count_even_compositions(n: usize) -> u64 {
    match n {
        0 => 1,
        n if n % 2 == 1 => 0,
        n => 1 << (n / 2 - 1),
    }
}

/// Classical number-theoretic Möbius function.
pub fn number_mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `ℓ_n = (1/n) Σ_{d|n} μ(n/d) (2^d - 1)`, the number of Lyndon compositions of `n`.
pub fn lyndon_count(n: usize) -> u64 {
    assert!((1..63).contains(&n), "lyndon_count needs 1 <= n < 63");
    let n64 = n as u64;
    let total: i64 = (1..=n64)
        .filter(|d| n64.is_multiple_of(*d))
        .map(|d| number_mobius(n64 / d) * ((1i64 << d) - 1))
        .sum();
    (total / n as i64) as u64
}
