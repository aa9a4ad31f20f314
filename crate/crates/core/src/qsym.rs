//! Quasi-symmetric functions in the monomial (`M`) and fundamental (`F`)
//! bases.
//!
//! All kernels work in the `M` basis; `F` inputs are converted with the
//! triangular change of basis `F_α = Σ_{β ≥ α} M_β` and converted back.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::compositions::{coarsenings, quasi_shuffle, refinements, Composition};
use crate::element::Element;
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum QSymBasis {
    #[serde(rename = "M")]
    Monomial,
    #[serde(rename = "F")]
    Fundamental,
}

impl QSymBasis {
    pub fn letter(self) -> &'static str {
        match self {
            QSymBasis::Monomial => "M",
            QSymBasis::Fundamental => "F",
        }
    }
}

/// An element of QSym together with the basis its coefficients refer to.
#[derive(Clone, PartialEq, Debug)]
pub struct QSym<S> {
    basis: QSymBasis,
    terms: Element<Composition, S>,
}

pub type CompositionPair = (Composition, Composition);

impl<S: Scalar> QSym<S> {
    pub fn new(basis: QSymBasis, terms: Element<Composition, S>) -> Self {
        QSym { basis, terms }
    }

    pub fn from_m(terms: Element<Composition, S>) -> Self {
        Self::new(QSymBasis::Monomial, terms)
    }

    /// `M_α`
    pub fn m(alpha: Composition) -> Self {
        Self::from_m(Element::basis(alpha))
    }

    /// `F_α`
    pub fn f(alpha: Composition) -> Self {
        Self::new(QSymBasis::Fundamental, Element::basis(alpha))
    }

    pub fn zero() -> Self {
        Self::from_m(Element::zero())
    }

    pub fn one() -> Self {
        Self::m(Composition::empty())
    }

    pub fn basis(&self) -> QSymBasis {
        self.basis
    }

    pub fn terms(&self) -> &Element<Composition, S> {
        &self.terms
    }

    pub fn into_terms(self) -> Element<Composition, S> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Coefficient of `M_α` (or `F_α`, in the `F` basis).
    pub fn coeff(&self, alpha: &Composition) -> S {
        self.terms.coeff(alpha)
    }

    /// The `M`-basis coordinates, converting if needed.
    pub fn m_terms(&self) -> Element<Composition, S> {
        match self.basis {
            QSymBasis::Monomial => self.terms.clone(),
            QSymBasis::Fundamental => f_to_m(&self.terms),
        }
    }

    pub fn in_basis(&self, basis: QSymBasis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        match basis {
            QSymBasis::Monomial => Self::from_m(f_to_m(&self.terms)),
            QSymBasis::Fundamental => Self::new(QSymBasis::Fundamental, m_to_f(&self.terms)),
        }
    }

    pub fn to_m(&self) -> Self {
        self.in_basis(QSymBasis::Monomial)
    }

    pub fn to_f(&self) -> Self {
        self.in_basis(QSymBasis::Fundamental)
    }

    fn from_m_in(basis: QSymBasis, m: Element<Composition, S>) -> Self {
        Self::from_m(m).in_basis(basis)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    /// Product, returned in the basis of `self`.
    pub fn product(&self, other: &Self) -> Self {
        Self::from_m_in(self.basis, m_product(&self.m_terms(), &other.m_terms()))
    }

    /// Coproduct by deconcatenation, with both legs in the basis of `self`.
    pub fn coproduct(&self) -> Element<CompositionPair, S> {
        let d = m_coproduct(&self.m_terms());
        match self.basis {
            QSymBasis::Monomial => d,
            QSymBasis::Fundamental => d.map_linear(|(a, b)| {
                m_to_f(&Element::basis(a.clone())).tensor(&m_to_f(&Element::basis(b.clone())))
            }),
        }
    }

    /// Coefficient of the unit.
    pub fn counit(&self) -> S {
        self.terms.coeff(&Composition::empty())
    }

    pub fn antipode(&self) -> Self {
        Self::from_m_in(self.basis, m_antipode(&self.m_terms()))
    }

    pub fn component(&self, n: usize) -> Self {
        Self::new(self.basis, self.terms.component(n))
    }

    pub fn max_degree(&self) -> usize {
        self.terms.degrees().into_iter().next_back().unwrap_or(0)
    }

    /// Restrict the defining series to `x_1, ..., x_nvars`.
    pub fn expand_truncated(&self, nvars: usize) -> Poly<S> {
        let mut out = Poly::zero(nvars);
        for (alpha, c) in self.m_terms().iter() {
            out = out.add(&expand_monomial(alpha, nvars).scale(c));
        }
        out
    }

    /// Number of variables that represents this element faithfully, with a
    /// margin of two.
    pub fn default_nvars(&self) -> usize {
        self.max_degree().max(1) + 2
    }
}

/// `M_α(x_1..x_n) = Σ_{i_1 < ... < i_k} x_{i_1}^{a_1} ... x_{i_k}^{a_k}`
pub fn expand_monomial<S: Scalar>(alpha: &Composition, nvars: usize) -> Poly<S> {
    fn go<S: Scalar>(parts: &[usize], start: usize, exps: &mut Vec<u32>, out: &mut Poly<S>) {
        let Some((&a, rest)) = parts.split_first() else {
            out.add_term(exps.clone(), S::one());
            return;
        };
        let n = exps.len();
        for i in start..n {
            if n - i < parts.len() {
                break;
            }
            exps[i] = a as u32;
            go(rest, i + 1, exps, out);
            exps[i] = 0;
        }
    }
    let mut out = Poly::zero(nvars);
    go(alpha.parts(), 0, &mut vec![0; nvars], &mut out);
    out
}

/// Bilinear extension of the quasi-shuffle product.
pub fn m_product<S: Scalar>(x: &Element<Composition, S>, y: &Element<Composition, S>) -> Element<Composition, S> {
    let mut out = Element::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca.clone() * cb.clone();
            for (g, mult) in quasi_shuffle(a, b).iter() {
                out.add_term(g.clone(), c.clone() * S::from_u64(*mult).expect("multiplicity fits"));
            }
        }
    }
    out
}

/// `Δ M_α = Σ_{α = βγ} M_β ⊗ M_γ`
pub fn m_coproduct<S: Scalar>(x: &Element<Composition, S>) -> Element<CompositionPair, S> {
    let mut out = Element::zero();
    for (a, c) in x.iter() {
        for pair in a.deconcatenations() {
            out.add_term(pair, c.clone());
        }
    }
    out
}

/// `S(M_β) = (-1)^{k(β)} Σ_{α ≤ rev(β)} M_α`
pub fn m_antipode<S: Scalar>(x: &Element<Composition, S>) -> Element<Composition, S> {
    x.map_linear(|beta| {
        let sign = S::sign(beta.len());
        Element::from_terms(coarsenings(&beta.reverse()).into_iter().map(|a| (a, sign.clone())))
    })
}

/// `F_α = Σ_{β ≥ α} M_β`
pub fn f_to_m<S: Scalar>(x: &Element<Composition, S>) -> Element<Composition, S> {
    x.map_linear(|alpha| Element::from_terms(refinements(alpha).into_iter().map(|b| (b, S::one()))))
}

/// `M_α = Σ_{β ≥ α} (-1)^{k(β)-k(α)} F_β`
pub fn m_to_f<S: Scalar>(x: &Element<Composition, S>) -> Element<Composition, S> {
    x.map_linear(|alpha| {
        Element::from_terms(refinements(alpha).into_iter().map(|b| {
            let s = S::sign(b.len() - alpha.len());
            (b, s)
        }))
    })
}

/// Render a coproduct or other pair-indexed element as `x ⊗ y` terms.
pub fn render_pairs<S: Scalar>(e: &Element<CompositionPair, S>, letter: &str) -> String {
    e.render(|(a, b)| format!("{letter}{a} ⊗ {letter}{b}"))
}

impl<S: Scalar> fmt::Display for QSym<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.basis.letter();
        write!(f, "{}", self.terms.render(|a| format!("{letter}{a}")))
    }
}

impl<S: Scalar> Add for &QSym<S> {
    type Output = QSym<S>;
    fn add(self, rhs: Self) -> QSym<S> {
        let r = rhs.in_basis(self.basis);
        QSym::new(self.basis, &self.terms + &r.terms)
    }
}

impl<S: Scalar> Sub for &QSym<S> {
    type Output = QSym<S>;
    fn sub(self, rhs: Self) -> QSym<S> {
        let r = rhs.in_basis(self.basis);
        QSym::new(self.basis, &self.terms - &r.terms)
    }
}

impl<S: Scalar> Neg for &QSym<S> {
    type Output = QSym<S>;
    fn neg(self) -> QSym<S> {
        QSym::new(self.basis, -&self.terms)
    }
}

impl<S: Scalar> Mul for &QSym<S> {
    type Output = QSym<S>;
    fn mul(self, rhs: Self) -> QSym<S> {
        self.product(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::compositions_of;
    use crate::{comp, Rational};

    type Q = QSym<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn m(terms: &[(i64, Composition)]) -> Q {
        Q::from_m(terms.iter().map(|(c, a)| (a.clone(), r(*c))).collect())
    }

    #[test]
    fn products() {
        let x = Q::m(comp![1]);
        assert_eq!(&x * &x, m(&[(2, comp![1, 1]), (1, comp![2])]));
        let y = m(&[(3, comp![2, 1]), (-1, comp![1])]);
        assert_eq!(&Q::one() * &y, y);
    }

    #[test]
    fn product_matches_expansion_in_four_variables() {
        let x = Q::m(comp![2]);
        let y = Q::m(comp![1, 1]);
        let p = &x * &y;
        assert_eq!(p.expand_truncated(4), x.expand_truncated(4).mul(&y.expand_truncated(4)));
        assert_eq!(p, m(&[(1, comp![2, 1, 1]), (1, comp![1, 2, 1]), (1, comp![1, 1, 2]), (1, comp![3, 1]), (1, comp![1, 3])]));
    }

    #[test]
    fn coproduct_and_counit() {
        let d = Q::m(comp![2]).coproduct();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&(comp![], comp![2])), r(1));
        assert_eq!(Q::m(comp![1, 1]).coproduct().len(), 3);
        assert_eq!(Q::one().coproduct().len(), 1);
        assert_eq!((&m(&[(3, comp![])]) + &Q::m(comp![2])).counit(), r(3));
        assert_eq!(Q::m(comp![1]).counit(), r(0));
        assert_eq!(Q::f(comp![]).counit(), r(1));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(Q::m(comp![4]).antipode(), m(&[(-1, comp![4])]));
        assert_eq!(Q::m(comp![1, 1]).antipode(), m(&[(1, comp![1, 1]), (1, comp![2])]));
        assert_eq!(Q::m(comp![1, 2]).antipode(), m(&[(1, comp![2, 1]), (1, comp![3])]));
    }

    #[test]
    fn fundamental_basis() {
        assert_eq!(Q::f(comp![2]).to_m(), m(&[(1, comp![2]), (1, comp![1, 1])]));
        assert_eq!(Q::f(comp![1, 1]).to_m(), Q::m(comp![1, 1]));
        for n in 0..=7 {
            for b in compositions_of(n) {
                let f = Q::f(b);
                assert_eq!(f.to_m().to_f(), f);
            }
        }
    }

    #[test]
    fn expansions() {
        let p = Q::m(comp![2, 1]).expand_truncated(3);
        assert_eq!(p.terms().count(), 3);
        assert_eq!(p.coeff(&[2, 0, 1]), r(1));
        assert_eq!(Q::m(comp![1, 1]).expand_truncated(2).terms().count(), 1);
        assert_eq!(Q::m(comp![1]).expand_truncated(2).terms().count(), 2);
    }

    #[test]
    fn display() {
        let x = &Q::m(comp![1]) * &Q::m(comp![1]);
        assert_eq!(x.to_string(), "2*M[1,1] + M[2]");
        assert_eq!(Q::one().to_string(), "M[]");
        assert_eq!(Q::zero().to_string(), "0");
        assert_eq!(render_pairs(&Q::m(comp![1]).coproduct(), "M"), "M[1] ⊗ M[] + M[] ⊗ M[1]");
    }
}
