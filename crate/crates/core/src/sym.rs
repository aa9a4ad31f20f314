//! Symmetric functions as a subalgebra of QSym.
//!
//! Elements are stored against one of the `m`, `p`, `e`, `h` bases. The
//! generators are defined through QSym (`p_n = m_(n)`, `e_n = M_(1^n)`,
//! `h_n = Σ_{α ⊨ n} M_α`) and multiplied there, so the embedding into QSym is
//! an algebra map by construction.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::compositions::{partitions_of, sort_to_partition, Composition, Partition};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::linalg;
use crate::qsym::{m_product, QSym};
use crate::scalar::{Field, Scalar};

/// Degree bound used by basis changes unless another is given.
pub const DEFAULT_SYM_DEGREE_BOUND: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SymBasis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "p")]
    Power,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "h")]
    Complete,
}

impl SymBasis {
    pub fn letter(self) -> &'static str {
        match self {
            SymBasis::Monomial => "m",
            SymBasis::Power => "p",
            SymBasis::Elementary => "e",
            SymBasis::Complete => "h",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Sym<S> {
    basis: SymBasis,
    terms: Element<Partition, S>,
}

/// `m_λ = Σ_{s(α) = λ} M_α`
pub fn m_lambda_to_qsym<S: Scalar>(lambda: &Partition) -> QSym<S> {
    QSym::from_m(lambda.rearrangements().into_iter().map(|a| (a, S::one())).collect())
}

/// Read the `m`-coordinates of a QSym element known to be symmetric.
fn symmetric_part<S: Scalar>(x: &Element<Composition, S>) -> Element<Partition, S> {
    x.iter()
        .filter(|(a, _)| a.parts().windows(2).all(|w| w[0] >= w[1]))
        .map(|(a, c)| (sort_to_partition(a), c.clone()))
        .collect()
}

fn m_to_qsym_terms<S: Scalar>(x: &Element<Partition, S>) -> Element<Composition, S> {
    x.map_linear(|l| m_lambda_to_qsym::<S>(l).into_terms())
}

/// Product of two elements given in `m`-coordinates.
fn m_basis_product<S: Scalar>(x: &Element<Partition, S>, y: &Element<Partition, S>) -> Element<Partition, S> {
    symmetric_part(&m_product(&m_to_qsym_terms(x), &m_to_qsym_terms(y)))
}

fn generator_m<S: Scalar>(basis: SymBasis, n: usize) -> Element<Partition, S> {
    match basis {
        SymBasis::Monomial | SymBasis::Power => Element::basis(Partition::new(vec![n])),
        SymBasis::Elementary => Element::basis(Partition::new(vec![1; n])),
        SymBasis::Complete => partitions_of(n).into_iter().map(|l| (l, S::one())).collect(),
    }
}

type ExpansionMemo = RwLock<HashMap<(SymBasis, Partition), Arc<Element<Partition, i64>>>>;

fn expansion_memo() -> &'static ExpansionMemo {
    static MEMO: OnceLock<ExpansionMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `m`-coordinates of the basis element `b_λ` (integral for every basis).
pub fn basis_element_in_m(basis: SymBasis, lambda: &Partition) -> Arc<Element<Partition, i64>> {
    if basis == SymBasis::Monomial {
        return Arc::new(Element::basis(lambda.clone()));
    }
    let key = (basis, lambda.clone());
    if let Some(hit) = expansion_memo().read().expect("memo poisoned").get(&key) {
        return hit.clone();
    }
    let parts = lambda.parts();
    let value = match parts.split_last() {
        None => Element::basis(Partition::empty()),
        Some((&last, rest)) => {
            let head = basis_element_in_m(basis, &Partition::new(rest.to_vec()));
            m_basis_product(&head, &generator_m(basis, last))
        }
    };
    let value = Arc::new(value);
    expansion_memo().write().expect("memo poisoned").insert(key, value.clone());
    value
}

impl<S: Scalar> Sym<S> {
    pub fn new(basis: SymBasis, terms: Element<Partition, S>) -> Self {
        Sym { basis, terms }
    }

    pub fn basis_element(basis: SymBasis, lambda: Partition) -> Self {
        Self::new(basis, Element::basis(lambda))
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_element(SymBasis::Monomial, lambda)
    }

    pub fn p(lambda: Partition) -> Self {
        Self::basis_element(SymBasis::Power, lambda)
    }

    pub fn e(lambda: Partition) -> Self {
        Self::basis_element(SymBasis::Elementary, lambda)
    }

    pub fn h(lambda: Partition) -> Self {
        Self::basis_element(SymBasis::Complete, lambda)
    }

    pub fn one() -> Self {
        Self::m(Partition::empty())
    }

    pub fn zero() -> Self {
        Self::new(SymBasis::Monomial, Element::zero())
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &Element<Partition, S> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> S {
        self.terms.coeff(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    /// `m`-coordinates.
    pub fn m_terms(&self) -> Element<Partition, S> {
        let basis = self.basis;
        self.terms.map_linear(|l| basis_element_in_m(basis, l).map_coeffs(|c| S::from_int(*c)))
    }

    pub fn to_m(&self) -> Self {
        Self::new(SymBasis::Monomial, self.m_terms())
    }

    /// Image in QSym, `M` basis.
    pub fn to_qsym(&self) -> QSym<S> {
        QSym::from_m(m_to_qsym_terms(&self.m_terms()))
    }

    /// Recognize a QSym element as symmetric; fails if its coefficients are
    /// not constant on rearrangement classes.
    pub fn from_qsym(x: &QSym<S>) -> Result<Self> {
        let mx = x.m_terms();
        let candidate = symmetric_part(&mx);
        if m_to_qsym_terms(&candidate) != mx {
            return Err(Error::BasisMismatch(format!("{x} is not symmetric")));
        }
        Ok(Self::new(SymBasis::Monomial, candidate))
    }

    /// Product, returned in the `m` basis.
    pub fn product(&self, other: &Self) -> Self {
        Self::new(SymBasis::Monomial, m_basis_product(&self.m_terms(), &other.m_terms()))
    }
}

impl<S: Field> Sym<S> {
    pub fn change_basis(&self, target: SymBasis) -> Result<Self> {
        self.change_basis_bounded(target, DEFAULT_SYM_DEGREE_BOUND)
    }

    /// Re-express in `target` by solving degree by degree in `m`-coordinates.
    pub fn change_basis_bounded(&self, target: SymBasis, bound: usize) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let m = self.m_terms();
        if target == SymBasis::Monomial {
            return Ok(Self::new(target, m));
        }
        let mut out = Element::zero();
        for (n, part) in m.degree_components() {
            if n > bound {
                return Err(Error::DegreeBound { degree: n, bound });
            }
            let lambdas = partitions_of(n);
            let columns: Vec<Vec<S>> = lambdas
                .iter()
                .map(|l| {
                    let e = basis_element_in_m(target, l);
                    lambdas.iter().map(|mu| S::from_int(e.coeff(mu))).collect()
                })
                .collect();
            let rhs: Vec<S> = lambdas.iter().map(|mu| part.coeff(mu)).collect();
            let x = linalg::solve(&columns, &rhs)
                .ok_or_else(|| Error::BasisMismatch(format!("{} is not a basis in degree {n}", target.letter())))?;
            for (l, c) in lambdas.into_iter().zip(x) {
                out.add_term(l, c);
            }
        }
        Ok(Self::new(target, out))
    }
}

impl<S: Scalar> fmt::Display for Sym<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.basis.letter();
        write!(f, "{}", self.terms.render(|l| format!("{letter}{l}")))
    }
}

impl<S: Scalar> Add for &Sym<S> {
    type Output = Sym<S>;
    fn add(self, rhs: Self) -> Sym<S> {
        if self.basis == rhs.basis {
            Sym::new(self.basis, &self.terms + &rhs.terms)
        } else {
            Sym::new(SymBasis::Monomial, &self.m_terms() + &rhs.m_terms())
        }
    }
}

impl<S: Scalar> Sub for &Sym<S> {
    type Output = Sym<S>;
    fn sub(self, rhs: Self) -> Sym<S> {
        if self.basis == rhs.basis {
            Sym::new(self.basis, &self.terms - &rhs.terms)
        } else {
            Sym::new(SymBasis::Monomial, &self.m_terms() - &rhs.m_terms())
        }
    }
}

impl<S: Scalar> Mul for &Sym<S> {
    type Output = Sym<S>;
    fn mul(self, rhs: Self) -> Sym<S> {
        self.product(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{comp, Rational};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn monomial_embedding() {
        let q: QSym<Rational> = m_lambda_to_qsym(&p(&[2, 1]));
        assert_eq!(q, QSym::from_m([(comp![2, 1], r(1)), (comp![1, 2], r(1))].into_iter().collect()));
    }

    #[test]
    fn generators_in_m() {
        let h2 = Sym::<Rational>::h(p(&[2])).to_m();
        assert_eq!(h2, Sym::new(SymBasis::Monomial, [(p(&[2]), r(1)), (p(&[1, 1]), r(1))].into_iter().collect()));
        let p11 = Sym::<Rational>::p(p(&[1, 1])).to_m();
        assert_eq!(p11.coeff(&p(&[1, 1])), r(2));
        assert_eq!(p11.coeff(&p(&[2])), r(1));
        assert_eq!(Sym::<Rational>::e(p(&[3])).to_qsym(), QSym::m(comp![1, 1, 1]));
    }

    #[test]
    fn basis_change_round_trip() {
        let x = Sym::<Rational>::h(p(&[2, 1]));
        for target in [SymBasis::Power, SymBasis::Elementary, SymBasis::Monomial] {
            let y = x.change_basis(target).unwrap();
            assert_eq!(y.basis(), target);
            assert_eq!(y.to_m(), x.to_m());
        }
        let e2 = Sym::<Rational>::e(p(&[2])).change_basis(SymBasis::Power).unwrap();
        assert_eq!(e2.coeff(&p(&[1, 1])), Rational::new(1.into(), 2.into()));
        assert_eq!(e2.coeff(&p(&[2])), Rational::new((-1).into(), 2.into()));
    }

    #[test]
    fn degree_bound_enforced() {
        let x = Sym::<Rational>::m(p(&[3, 1]));
        assert_eq!(
            x.change_basis_bounded(SymBasis::Power, 3),
            Err(Error::DegreeBound { degree: 4, bound: 3 })
        );
    }

    #[test]
    fn recognition() {
        let q = Sym::<Rational>::h(p(&[2])).to_qsym();
        assert_eq!(Sym::from_qsym(&q).unwrap().coeff(&p(&[1, 1])), r(1));
        assert!(Sym::from_qsym(&QSym::<Rational>::m(comp![1, 2])).is_err());
    }
}
