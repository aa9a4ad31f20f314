//! Noncommutative symmetric functions in the complete (`H`) basis.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::compositions::{sort_to_partition, Composition};
use crate::element::Element;
use crate::qsym::{CompositionPair, QSym};
use crate::scalar::Scalar;
use crate::sym::{Sym, SymBasis};

#[derive(Clone, PartialEq, Debug)]
pub struct NSym<S> {
    terms: Element<Composition, S>,
}

impl<S: Scalar> NSym<S> {
    pub fn new(terms: Element<Composition, S>) -> Self {
        NSym { terms }
    }

    /// `H_α = H_{a_1} ... H_{a_k}`
    pub fn h(alpha: Composition) -> Self {
        Self::new(Element::basis(alpha))
    }

    pub fn one() -> Self {
        Self::h(Composition::empty())
    }

    pub fn zero() -> Self {
        Self::new(Element::zero())
    }

    pub fn terms(&self) -> &Element<Composition, S> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> S {
        self.terms.coeff(alpha)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.terms.scale(c))
    }

    /// Concatenation product.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Element::zero();
        for (a, x) in self.terms.iter() {
            for (b, y) in other.terms.iter() {
                out.add_term(a.concat(b), x.clone() * y.clone());
            }
        }
        Self::new(out)
    }

    /// `Δ H_n = Σ_{i+j=n} H_i ⊗ H_j`, extended multiplicatively.
    pub fn coproduct(&self) -> Element<CompositionPair, S> {
        self.terms.map_linear(|alpha| {
            let mut acc: Element<CompositionPair, S> = Element::basis((Composition::empty(), Composition::empty()));
            for &n in alpha.parts() {
                let mut next = Element::zero();
                for ((l, r), c) in acc.iter() {
                    for i in 0..=n {
                        let left = if i > 0 { l.concat(&Composition::new(vec![i])) } else { l.clone() };
                        let right = if i < n { r.concat(&Composition::new(vec![n - i])) } else { r.clone() };
                        next.add_term((left, right), c.clone());
                    }
                }
                acc = next;
            }
            acc
        })
    }

    pub fn counit(&self) -> S {
        self.terms.coeff(&Composition::empty())
    }

    /// The quotient map `H_α ↦ h_{s(α)}`.
    pub fn project_to_sym(&self) -> Sym<S> {
        Sym::new(SymBasis::Complete, self.terms.map_indices(sort_to_partition))
    }
}

/// `⟨M_α, H_β⟩ = δ_{αβ}`, extended bilinearly.
pub fn pairing<S: Scalar>(q: &QSym<S>, n: &NSym<S>) -> S {
    let m = q.m_terms();
    n.terms.pair(|b| m.coeff(b))
}

impl<S: Scalar> fmt::Display for NSym<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms.render(|a| format!("H{a}")))
    }
}

impl<S: Scalar> Add for &NSym<S> {
    type Output = NSym<S>;
    fn add(self, rhs: Self) -> NSym<S> {
        NSym::new(&self.terms + &rhs.terms)
    }
}

impl<S: Scalar> Sub for &NSym<S> {
    type Output = NSym<S>;
    fn sub(self, rhs: Self) -> NSym<S> {
        NSym::new(&self.terms - &rhs.terms)
    }
}

impl<S: Scalar> Mul for &NSym<S> {
    type Output = NSym<S>;
    fn mul(self, rhs: Self) -> NSym<S> {
        self.product(rhs)
    }
}
