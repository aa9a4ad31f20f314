//! Simple graphs and the chromatic Hopf algebra: isomorphism classes graded
//! by vertex count, disjoint union as product,
//! `Δ(G) = Σ_{S ⊆ V} G|_S ⊗ G|_{V∖S}`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::Value;

use super::canon::canonical_form;
use super::poset::label_of;
use crate::characters::{Character, Functional};
use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::poly::Poly;
use crate::scalar::{Field, Scalar};

/// Largest vertex count for which [`GraphAlgebra`] lists its basis.
pub const GRAPH_ENUMERATION_LIMIT: usize = 6;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

#[derive(Deserialize)]
struct GraphJson {
    vertices: Vec<Value>,
    edges: Vec<(Value, Value)>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>, edges: &[(String, String)]) -> Result<Self> {
        if labels.len() > 64 {
            return Err(Error::InvalidGraph(format!("{} vertices exceed the limit of 64", labels.len())));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{l}`")));
            }
        }
        let mut adj = vec![0u64; labels.len()];
        for (a, b) in edges {
            let lookup = |x: &String| {
                index
                    .get(x)
                    .copied()
                    .ok_or_else(|| Error::InvalidGraph(format!("edge `{a}`-`{b}` mentions unknown vertex `{x}`")))
            };
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(Error::InvalidGraph(format!("edge `{a}`-`{b}` is a loop")));
            }
            if adj[i] >> j & 1 == 1 {
                return Err(Error::InvalidGraph(format!("edge `{a}`-`{b}` is repeated")));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(SimpleGraph { labels, adj })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidGraph(format!("malformed JSON: {e}")))?;
        let labels = raw.vertices.iter().map(label_of).collect();
        let edges: Vec<(String, String)> = raw.edges.iter().map(|(a, b)| (label_of(a), label_of(b))).collect();
        Self::new(labels, &edges)
    }

    pub fn from_adjacency(adj: Vec<u64>) -> Self {
        SimpleGraph { labels: (0..adj.len()).map(|i| i.to_string()).collect(), adj }
    }

    pub fn complete(n: usize) -> Self {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self::from_adjacency((0..n).map(|i| full & !(1 << i)).collect())
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_adjacency(vec![0; n])
    }

    pub fn path(n: usize) -> Self {
        let mut adj = vec![0u64; n];
        for i in 1..n {
            adj[i] |= 1 << (i - 1);
            adj[i - 1] |= 1 << i;
        }
        Self::from_adjacency(adj)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn induced(&self, mask: u64) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.order()).filter(|&i| mask >> i & 1 == 1).collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let adj = keep
            .iter()
            .map(|&i| keep.iter().enumerate().filter(|(_, &j)| self.adjacent(i, j)).fold(0u64, |r, (k, _)| r | 1 << k))
            .collect();
        SimpleGraph { labels, adj }
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("a.{l}")).collect();
        labels.extend(other.labels.iter().map(|l| format!("b.{l}")));
        SimpleGraph { labels, adj }
    }

    pub fn components(&self) -> Vec<u64> {
        let n = self.order();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = vec![s];
            while let Some(v) = frontier.pop() {
                let new = self.adj[v] & !comp;
                comp |= new;
                frontier.extend((0..n).filter(|&w| new >> w & 1 == 1));
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn canonical_rows(&self) -> Vec<u64> {
        canonical_form(&self.adj).0
    }
}

/// Stanley's chromatic symmetric function in `nvars` variables: one monomial
/// `Π x_{κ(v)}` for each proper coloring `κ: V → {1..nvars}`.
pub fn chromatic_symmetric<S: Scalar>(g: &SimpleGraph, nvars: usize) -> Poly<S> {
    let n = g.order();
    let mut out = Poly::zero(nvars);
    let mut colors = vec![0usize; n];
    fn go<S: Scalar>(g: &SimpleGraph, v: usize, nvars: usize, colors: &mut Vec<usize>, out: &mut Poly<S>) {
        if v == colors.len() {
            let mut e = vec![0u32; nvars];
            for &c in colors.iter() {
                e[c] += 1;
            }
            out.add_term(e, S::one());
            return;
        }
        for c in 0..nvars {
            if (0..v).any(|u| g.adjacent(u, v) && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            go(g, v + 1, nvars, colors, out);
        }
    }
    if nvars > 0 || n == 0 {
        go(g, 0, nvars, &mut colors, &mut out);
    }
    out
}

/// Isomorphism class of a simple graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GraphClass {
    rows: Vec<u64>,
}

impl GraphClass {
    pub fn of(g: &SimpleGraph) -> Self {
        GraphClass { rows: g.canonical_rows() }
    }

    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_adjacency(self.rows.clone())
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }
}

impl Basis for GraphClass {
    fn degree(&self) -> usize {
        self.rows.len()
    }
}

/// All graphs on `n` vertices up to isomorphism; practical for `n ≤ 6`.
pub fn graphs_of_order(n: usize) -> Vec<GraphClass> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut adj = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        seen.insert(GraphClass { rows: canonical_form(&adj).0 });
    }
    seen.into_iter().collect()
}

type Coproducts = RwLock<HashMap<GraphClass, Arc<Element<(GraphClass, GraphClass), i64>>>>;

#[derive(Default)]
pub struct GraphAlgebra {
    coproducts: Coproducts,
    bases: RwLock<HashMap<usize, Vec<GraphClass>>>,
}

impl GraphAlgebra {
    pub fn new() -> Self {
        Self::default()
    }
}

impl HopfAlgebra for GraphAlgebra {
    type Basis = GraphClass;

    fn name(&self) -> String {
        "graphs".into()
    }

    fn unit(&self) -> GraphClass {
        GraphClass { rows: Vec::new() }
    }

    fn product(&self, a: &GraphClass, b: &GraphClass) -> Element<GraphClass, i64> {
        Element::basis(GraphClass::of(&a.graph().disjoint_union(&b.graph())))
    }

    fn coproduct(&self, a: &GraphClass) -> Arc<Element<(GraphClass, GraphClass), i64>> {
        if let Some(hit) = self.coproducts.read().expect("cache poisoned").get(a) {
            return hit.clone();
        }
        let g = a.graph();
        let n = g.order();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut out = Element::zero();
        for s in 0..=all {
            out.add_term((GraphClass::of(&g.induced(s)), GraphClass::of(&g.induced(all & !s))), 1);
        }
        let out = Arc::new(out);
        self.coproducts.write().expect("cache poisoned").insert(a.clone(), out.clone());
        out
    }

    fn basis(&self, n: usize) -> Option<Vec<GraphClass>> {
        if n > GRAPH_ENUMERATION_LIMIT {
            return None;
        }
        if let Some(hit) = self.bases.read().expect("cache poisoned").get(&n) {
            return Some(hit.clone());
        }
        let list = graphs_of_order(n);
        self.bases.write().expect("cache poisoned").insert(n, list.clone());
        Some(list)
    }

    fn sample_basis(&self, n: usize) -> Vec<GraphClass> {
        self.basis(n).unwrap_or_else(|| {
            [SimpleGraph::complete(n), SimpleGraph::discrete(n), SimpleGraph::path(n)]
                .iter()
                .map(GraphClass::of)
                .collect()
        })
    }

    fn is_cocommutative(&self) -> bool {
        true
    }

    fn label(&self, b: &GraphClass) -> String {
        let g = b.graph();
        let edges: Vec<String> = (0..g.order())
            .flat_map(|i| (i + 1..g.order()).map(move |j| (i, j)))
            .filter(|&(i, j)| g.adjacent(i, j))
            .map(|(i, j)| format!("{i}-{j}"))
            .collect();
        format!("G{{n={};{}}}", g.order(), edges.join(","))
    }
}

/// `ζ(G) = 1` if `G` has no edges, 0 otherwise.
pub fn graph_zeta<S: Field>(alg: Arc<GraphAlgebra>) -> Character<GraphAlgebra, S> {
    Character::new_unchecked(Functional::from_rule(alg, |g: &GraphClass| {
        if g.is_discrete() {
            S::one()
        } else {
            S::zero()
        }
    }))
}

/// A random character: small rationals on connected graphs, extended
/// multiplicatively over components.
pub fn random_graph_character<S: Field>(alg: Arc<GraphAlgebra>, rng: ChaCha8Rng) -> Character<GraphAlgebra, S> {
    let state = Mutex::new((rng, HashMap::<GraphClass, S>::new()));
    Character::new_unchecked(Functional::from_rule(alg, move |g: &GraphClass| {
        let graph = g.graph();
        let mut acc = S::one();
        for comp in graph.components() {
            let key = GraphClass::of(&graph.induced(comp));
            let mut guard = state.lock().expect("rng poisoned");
            let (rng, values) = &mut *guard;
            let v = values
                .entry(key)
                .or_insert_with(|| S::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                .clone();
            acc = acc * v;
        }
        acc
    }))
}
