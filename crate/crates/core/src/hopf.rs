//! Pluggable descriptions of graded connected Hopf algebras.
//!
//! A descriptor supplies structure constants on basis indices; generic code
//! (characters, the universal morphism, membership tests) runs against it.
//! Structure constants are integers for every algebra in this crate.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::compositions::{compositions_of, partitions_of, Composition, Partition};
use crate::element::{Basis, Element};
use crate::nsym::NSym;
use crate::qsym::{m_coproduct, m_product};
use crate::scalar::Scalar;
use crate::sym::{m_lambda_to_qsym, Sym};

pub trait HopfAlgebra: Send + Sync + 'static {
    type Basis: Basis;

    fn name(&self) -> String;

    /// The basis index spanning degree 0.
    fn unit(&self) -> Self::Basis;

    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> Element<Self::Basis, i64>;

    fn coproduct(&self, a: &Self::Basis) -> Arc<Element<(Self::Basis, Self::Basis), i64>>;

    /// Every basis index of degree `n`, when the component is finite and
    /// cheap to list.
    fn basis(&self, n: usize) -> Option<Vec<Self::Basis>>;

    /// A deterministic finite family of degree-`n` basis indices used to
    /// probe algebras whose components cannot be listed.
    fn sample_basis(&self, n: usize) -> Vec<Self::Basis> {
        self.basis(n).unwrap_or_default()
    }

    /// `basis(n)` if available, otherwise `sample_basis(n)`.
    fn test_basis(&self, n: usize) -> Vec<Self::Basis> {
        self.basis(n).unwrap_or_else(|| self.sample_basis(n))
    }

    fn is_cocommutative(&self) -> bool {
        false
    }

    fn label(&self, b: &Self::Basis) -> String;
}

/// Product of two elements.
pub fn multiply<A: HopfAlgebra, S: Scalar>(
    alg: &A,
    x: &Element<A::Basis, S>,
    y: &Element<A::Basis, S>,
) -> Element<A::Basis, S> {
    let mut out = Element::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca.clone() * cb.clone();
            for (g, k) in alg.product(a, b).iter() {
                out.add_term(g.clone(), c.clone() * S::from_int(*k));
            }
        }
    }
    out
}

/// Coproduct of an element.
pub fn comultiply<A: HopfAlgebra, S: Scalar>(
    alg: &A,
    x: &Element<A::Basis, S>,
) -> Element<(A::Basis, A::Basis), S> {
    x.map_linear(|a| alg.coproduct(a).map_coeffs(|k| S::from_int(*k)))
}

/// Coefficient of the unit.
pub fn counit<A: HopfAlgebra, S: Scalar>(alg: &A, x: &Element<A::Basis, S>) -> S {
    x.coeff(&alg.unit())
}

/// Product of tensors, factor by factor.
pub fn tensor_multiply<A: HopfAlgebra, S: Scalar>(
    alg: &A,
    x: &Element<(A::Basis, A::Basis), S>,
    y: &Element<(A::Basis, A::Basis), S>,
) -> Element<(A::Basis, A::Basis), S> {
    let mut out = Element::zero();
    for ((a1, a2), c) in x.iter() {
        for ((b1, b2), d) in y.iter() {
            let left = alg.product(a1, b1);
            let right = alg.product(a2, b2);
            let cd = c.clone() * d.clone();
            for (l, p) in left.iter() {
                for (r, q) in right.iter() {
                    out.add_term((l.clone(), r.clone()), cd.clone() * S::from_int(p * q));
                }
            }
        }
    }
    out
}

/// Pick up to `count` pairs from the test bases with total degree `n`, both
/// factors of positive degree. All pairs are returned when there are at most
/// `count` of them.
pub fn sample_pairs<A: HopfAlgebra>(
    alg: &A,
    n: usize,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(A::Basis, A::Basis)> {
    let by_degree: Vec<Vec<A::Basis>> = (0..n).map(|i| alg.test_basis(i)).collect();
    let total: usize = (1..n).map(|i| by_degree[i].len() * by_degree[n - i].len()).sum();
    if total <= count {
        let mut out = Vec::with_capacity(total);
        for i in 1..n {
            for a in &by_degree[i] {
                for b in &by_degree[n - i] {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        return out;
    }
    let degrees: Vec<usize> = (1..n).filter(|&i| !by_degree[i].is_empty() && !by_degree[n - i].is_empty()).collect();
    (0..count)
        .filter_map(|_| {
            let i = *degrees.choose(rng)?;
            let a = by_degree[i].choose(rng)?.clone();
            let b = by_degree[n - i].choose(rng)?.clone();
            Some((a, b))
        })
        .collect()
}

/// Random element of the given test basis with small integer coefficients.
pub fn random_element<A: HopfAlgebra, S: Scalar>(alg: &A, n: usize, rng: &mut ChaCha8Rng) -> Element<A::Basis, S> {
    let basis = alg.test_basis(n);
    let mut out = Element::zero();
    for b in basis {
        if rng.gen_bool(0.6) {
            out.add_term(b, S::from_int(rng.gen_range(-3..=3)));
        }
    }
    out
}

/// QSym in the monomial basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct QSymAlgebra;

impl HopfAlgebra for QSymAlgebra {
    type Basis = Composition;

    fn name(&self) -> String {
        "qsym".into()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    fn product(&self, a: &Composition, b: &Composition) -> Element<Composition, i64> {
        m_product(&Element::basis(a.clone()), &Element::basis(b.clone()))
    }

    fn coproduct(&self, a: &Composition) -> Arc<Element<(Composition, Composition), i64>> {
        Arc::new(m_coproduct(&Element::basis(a.clone())))
    }

    fn basis(&self, n: usize) -> Option<Vec<Composition>> {
        Some(compositions_of(n))
    }

    fn label(&self, b: &Composition) -> String {
        format!("M{b}")
    }
}

/// Sym in the monomial basis `m_λ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymAlgebra;

impl HopfAlgebra for SymAlgebra {
    type Basis = Partition;

    fn name(&self) -> String {
        "sym".into()
    }

    fn unit(&self) -> Partition {
        Partition::empty()
    }

    fn product(&self, a: &Partition, b: &Partition) -> Element<Partition, i64> {
        Sym::<i64>::m(a.clone()).product(&Sym::m(b.clone())).terms().clone()
    }

    /// `Δ m_λ = Σ_{μ ∪ ν = λ} m_μ ⊗ m_ν`, read off the QSym coproduct at
    /// pairs of weakly decreasing compositions.
    fn coproduct(&self, a: &Partition) -> Arc<Element<(Partition, Partition), i64>> {
        let q = m_lambda_to_qsym::<i64>(a);
        let decreasing = |c: &Composition| c.parts().windows(2).all(|w| w[0] >= w[1]);
        let d = m_coproduct(q.terms());
        Arc::new(
            d.iter()
                .filter(|((x, y), _)| decreasing(x) && decreasing(y))
                .map(|((x, y), c)| ((Partition::new(x.parts().to_vec()), Partition::new(y.parts().to_vec())), *c))
                .collect(),
        )
    }

    fn basis(&self, n: usize) -> Option<Vec<Partition>> {
        Some(partitions_of(n))
    }

    fn is_cocommutative(&self) -> bool {
        true
    }

    fn label(&self, b: &Partition) -> String {
        format!("m{b}")
    }
}

/// NSym in the complete basis `H_α`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NSymAlgebra;

impl HopfAlgebra for NSymAlgebra {
    type Basis = Composition;

    fn name(&self) -> String {
        "nsym".into()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    fn product(&self, a: &Composition, b: &Composition) -> Element<Composition, i64> {
        Element::basis(a.concat(b))
    }

    fn coproduct(&self, a: &Composition) -> Arc<Element<(Composition, Composition), i64>> {
        Arc::new(NSym::<i64>::h(a.clone()).coproduct())
    }

    fn basis(&self, n: usize) -> Option<Vec<Composition>> {
        Some(compositions_of(n))
    }

    fn label(&self, b: &Composition) -> String {
        format!("H{b}")
    }
}

/// The co-opposite algebra: same product, tensor factors of the coproduct
/// swapped.
#[derive(Clone, Debug, Default)]
pub struct Cop<A>(pub A);

impl<A: HopfAlgebra> HopfAlgebra for Cop<A> {
    type Basis = A::Basis;

    fn name(&self) -> String {
        format!("{}_cop", self.0.name())
    }

    fn unit(&self) -> A::Basis {
        self.0.unit()
    }

    fn product(&self, a: &A::Basis, b: &A::Basis) -> Element<A::Basis, i64> {
        self.0.product(a, b)
    }

    fn coproduct(&self, a: &A::Basis) -> Arc<Element<(A::Basis, A::Basis), i64>> {
        Arc::new(self.0.coproduct(a).map_indices(|(x, y)| (y.clone(), x.clone())))
    }

    fn basis(&self, n: usize) -> Option<Vec<A::Basis>> {
        self.0.basis(n)
    }

    fn sample_basis(&self, n: usize) -> Vec<A::Basis> {
        self.0.sample_basis(n)
    }

    fn is_cocommutative(&self) -> bool {
        self.0.is_cocommutative()
    }

    fn label(&self, b: &A::Basis) -> String {
        self.0.label(b)
    }
}

/// Names of the registered descriptors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraName {
    QSym,
    QSymCop,
    Sym,
    Rota,
    Posets,
    Graphs,
}

impl std::str::FromStr for AlgebraName {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "qsym" => AlgebraName::QSym,
            "qsym_cop" => AlgebraName::QSymCop,
            "sym" => AlgebraName::Sym,
            "rota" => AlgebraName::Rota,
            "posets" => AlgebraName::Posets,
            "graphs" => AlgebraName::Graphs,
            other => return Err(crate::Error::UnknownName(other.into())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{comp, Rational};

    #[test]
    fn cop_swaps_legs() {
        let d = Cop(QSymAlgebra).coproduct(&comp![1, 2]);
        assert_eq!(d.coeff(&(comp![2], comp![1])), 1);
        assert_eq!(d.coeff(&(comp![1], comp![2])), 0);
    }

    #[test]
    fn sym_coproduct_of_monomials() {
        let d = SymAlgebra.coproduct(&Partition::new(vec![2, 1]));
        let p = |v: &[usize]| Partition::new(v.to_vec());
        assert_eq!(d.coeff(&(p(&[2]), p(&[1]))), 1);
        assert_eq!(d.coeff(&(p(&[1]), p(&[2]))), 1);
        assert_eq!(d.coeff(&(p(&[]), p(&[2, 1]))), 1);
        assert_eq!(d.len(), 4);
        let d = SymAlgebra.coproduct(&p(&[1, 1]));
        assert_eq!(d.coeff(&(p(&[1]), p(&[1]))), 1);
    }

    #[test]
    fn generic_product_agrees_with_qsym() {
        let x: Element<Composition, Rational> = Element::basis(comp![1]);
        let y = multiply(&QSymAlgebra, &x, &x);
        assert_eq!(y.coeff(&comp![1, 1]), Rational::from_int(2));
    }

    #[test]
    fn registry_names() {
        assert_eq!("qsym_cop".parse::<AlgebraName>().unwrap(), AlgebraName::QSymCop);
        assert!("bogus".parse::<AlgebraName>().is_err());
    }
}
