//! Sparse graded linear combinations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A basis index with a degree.
pub trait Basis: Clone + Ord + Hash + Debug + Send + Sync + 'static {
    fn degree(&self) -> usize;
}

impl<A: Basis, B: Basis> Basis for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

/// Index of a pure tensor `b1 ⊗ ... ⊗ bk`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor<B>(pub Vec<B>);

impl<B: Basis> Basis for Tensor<B> {
    fn degree(&self) -> usize {
        self.0.iter().map(Basis::degree).sum()
    }
}

/// A finite linear combination of basis indices. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<I, S> {
    terms: BTreeMap<I, S>,
}

impl<I: Basis, S: Scalar> Default for Element<I, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<I: Basis, S: Scalar> Element<I, S> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn basis(index: I) -> Self {
        Self::term(index, S::one())
    }

    pub fn term(index: I, coeff: S) -> Self {
        let mut e = Self::zero();
        e.add_term(index, coeff);
        e
    }

    pub fn from_terms<T: IntoIterator<Item = (I, S)>>(terms: T) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    /// Add `coeff * index` in place.
    pub fn add_term(&mut self, index: I, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Add `scale * other` in place.
    pub fn add_scaled(&mut self, other: &Self, scale: &S) {
        for (i, c) in &other.terms {
            self.add_term(i.clone(), c.clone() * scale.clone());
        }
    }

    pub fn coeff(&self, index: &I) -> S {
        self.terms.get(index).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&I, &S)> {
        self.terms.iter()
    }

    pub fn indices(&self) -> impl Iterator<Item = &I> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(i, c)| (i.clone(), c.clone() * s.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Extend `f` linearly from basis indices.
    pub fn map_linear<J: Basis>(&self, mut f: impl FnMut(&I) -> Element<J, S>) -> Element<J, S> {
        let mut out = Element::zero();
        for (i, c) in &self.terms {
            out.add_scaled(&f(i), c);
        }
        out
    }

    /// Re-index terms, collecting coefficients that land on the same index.
    pub fn map_indices<J: Basis>(&self, mut f: impl FnMut(&I) -> J) -> Element<J, S> {
        Element::from_terms(self.terms.iter().map(|(i, c)| (f(i), c.clone())))
    }

    pub fn filter(&self, mut keep: impl FnMut(&I) -> bool) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| keep(i))
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Apply a linear functional given on basis indices.
    pub fn pair(&self, mut f: impl FnMut(&I) -> S) -> S {
        let mut acc = S::zero();
        for (i, c) in &self.terms {
            acc = acc + c.clone() * f(i);
        }
        acc
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Basis::degree).collect()
    }

    /// The single degree of a homogeneous element; `None` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let d = self.degrees();
        match d.len() {
            0 => Ok(None),
            1 => Ok(d.into_iter().next()),
            _ => Err(Error::NotHomogeneous(d.into_iter().collect())),
        }
    }

    pub fn component(&self, n: usize) -> Self {
        self.filter(|i| i.degree() == n)
    }

    pub fn degree_components(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (i, c) in &self.terms {
            out.entry(i.degree()).or_default().terms.insert(i.clone(), c.clone());
        }
        out
    }

    pub fn tensor<J: Basis>(&self, other: &Element<J, S>) -> Element<(I, J), S> {
        let mut out = Element::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term((a.clone(), b.clone()), x.clone() * y.clone());
            }
        }
        out
    }

    /// Convert coefficients into another scalar type.
    pub fn map_coeffs<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Element<I, T> {
        Element::from_terms(self.terms.iter().map(|(i, c)| (i.clone(), f(c))))
    }

    /// Render as `c1*L1 + c2*L2 - ...` in canonical order: by degree, then by
    /// the rendered label.
    pub fn render(&self, mut label: impl FnMut(&I) -> String) -> String {
        let mut items: Vec<(usize, String, &S)> = self
            .terms
            .iter()
            .map(|(i, c)| (i.degree(), label(i), c))
            .collect();
        items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        if items.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (_, lab, c)) in items.into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&lab);
        }
        out
    }
}

/// `Σ c_i e_i`
pub fn linear_combine<I: Basis, S: Scalar>(pairs: &[(S, &Element<I, S>)]) -> Element<I, S> {
    let mut out = Element::zero();
    for (c, e) in pairs {
        out.add_scaled(e, c);
    }
    out
}

impl<I: Basis, S: Scalar> FromIterator<(I, S)> for Element<I, S> {
    fn from_iter<T: IntoIterator<Item = (I, S)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl<I: Basis, S: Scalar> Add for &Element<I, S> {
    type Output = Element<I, S>;
    fn add(self, rhs: Self) -> Element<I, S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one());
        out
    }
}

impl<I: Basis, S: Scalar> Add for Element<I, S> {
    type Output = Element<I, S>;
    fn add(mut self, rhs: Self) -> Element<I, S> {
        self.add_scaled(&rhs, &S::one());
        self
    }
}

impl<I: Basis, S: Scalar> Sub for &Element<I, S> {
    type Output = Element<I, S>;
    fn sub(self, rhs: Self) -> Element<I, S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}

impl<I: Basis, S: Scalar> Sub for Element<I, S> {
    type Output = Element<I, S>;
    fn sub(mut self, rhs: Self) -> Element<I, S> {
        self.add_scaled(&rhs, &-S::one());
        self
    }
}

impl<I: Basis, S: Scalar> Neg for Element<I, S> {
    type Output = Element<I, S>;
    fn neg(self) -> Element<I, S> {
        self.scale(&-S::one())
    }
}

impl<I: Basis, S: Scalar> Neg for &Element<I, S> {
    type Output = Element<I, S>;
    fn neg(self) -> Element<I, S> {
        self.scale(&-S::one())
    }
}
