//! The universal morphism `Ψ: (H, ζ) → (QSym, ζ_Q)` and its specializations.
//!
//! `Ψ(h) = Σ_α ζ_α(h) M_α` where `ζ_α` projects `Δ^{(k-1)}(h)` onto
//! `H_{a_1} ⊗ ... ⊗ H_{a_k}` and applies `ζ^{⊗k}`. Expanding
//! `Δ^{(k-1)} = (id ⊗ Δ^{(k-2)})Δ` gives the recursion used here:
//! `Ψ(b) = ζ(b) M_(n) + Σ c ζ(x) · (deg x) ⊲ Ψ(y)` over the terms `c x ⊗ y`
//! of `Δb` with both factors of positive degree, where `a ⊲ M_γ = M_{(a,γ)}`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::characters::{zeta_qsym, zeta_qsym_on, Character};
use crate::compositions::{coarsenings, compositions_of, odd_part, Composition};
use crate::element::{Basis, Element, Tensor};
use crate::error::{Error, Result};
use crate::hopf::{Cop, HopfAlgebra, QSymAlgebra};
use crate::qsym::QSym;
use crate::scalar::Field;

/// `Δ^{(k-1)}(h)`, with `Δ^{(0)} = id`.
pub fn iterated_coproduct<A: HopfAlgebra, S: Field>(
    alg: &A,
    h: &Element<A::Basis, S>,
    k: usize,
) -> Element<Tensor<A::Basis>, S> {
    assert!(k >= 1, "iterated coproduct needs k >= 1");
    let mut acc: Element<Tensor<A::Basis>, S> = h.map_indices(|b| Tensor(vec![b.clone()]));
    for _ in 1..k {
        let mut next = Element::zero();
        for (Tensor(factors), c) in acc.iter() {
            let (last, head) = factors.split_last().expect("nonempty tensor");
            for ((x, y), d) in alg.coproduct(last).iter() {
                let mut f = head.to_vec();
                f.push(x.clone());
                f.push(y.clone());
                next.add_term(Tensor(f), c.clone() * S::from_int(*d));
            }
        }
        acc = next;
    }
    acc
}

/// `ζ_α(h)` for homogeneous `h` of degree `|α|`.
pub fn zeta_alpha<A: HopfAlgebra, S: Field>(
    zeta: &Character<A, S>,
    alpha: &Composition,
    h: &Element<A::Basis, S>,
) -> Result<S> {
    if let Some(d) = h.homogeneous_degree()? {
        if d != alpha.weight() {
            return Err(Error::DegreeMismatch { expected: alpha.weight(), found: d });
        }
    }
    Ok(h.pair(|b| zeta_alpha_basis(zeta, alpha.parts(), b)))
}

fn zeta_alpha_basis<A: HopfAlgebra, S: Field>(zeta: &Character<A, S>, parts: &[usize], b: &A::Basis) -> S {
    match parts {
        [] => zeta.eval(b),
        [_] => zeta.eval(b),
        [a, rest @ ..] => {
            let alg = zeta.algebra();
            let mut acc = S::zero();
            for ((x, y), c) in alg.coproduct(b).iter() {
                if x.degree() != *a {
                    continue;
                }
                let v = zeta.eval(x);
                if v.is_zero() {
                    continue;
                }
                acc = acc + S::from_int(*c) * v * zeta_alpha_basis(zeta, rest, y);
            }
            acc
        }
    }
}

/// The universal morphism for a fixed character, memoized per basis index.
pub struct UniversalMorphism<A: HopfAlgebra, S> {
    zeta: Character<A, S>,
    cache: RwLock<HashMap<A::Basis, Arc<Element<Composition, S>>>>,
}

impl<A: HopfAlgebra, S: Field> UniversalMorphism<A, S> {
    pub fn new(zeta: Character<A, S>) -> Self {
        UniversalMorphism { zeta, cache: RwLock::new(HashMap::new()) }
    }

    pub fn character(&self) -> &Character<A, S> {
        &self.zeta
    }

    /// `Ψ(b)` in `M` coordinates.
    pub fn apply_basis(&self, b: &A::Basis) -> Arc<Element<Composition, S>> {
        if let Some(v) = self.cache.read().expect("cache poisoned").get(b) {
            return v.clone();
        }
        let v = Arc::new(self.compute(b));
        self.cache.write().expect("cache poisoned").insert(b.clone(), v.clone());
        v
    }

    fn compute(&self, b: &A::Basis) -> Element<Composition, S> {
        let n = b.degree();
        if n == 0 {
            return Element::term(Composition::empty(), self.zeta.eval(b));
        }
        let mut out = Element::term(Composition::new(vec![n]), self.zeta.eval(b));
        for ((x, y), c) in self.zeta.algebra().coproduct(b).iter() {
            let (dx, dy) = (x.degree(), y.degree());
            if dx == 0 || dy == 0 {
                continue;
            }
            let v = self.zeta.eval(x);
            if v.is_zero() {
                continue;
            }
            let w = S::from_int(*c) * v;
            let head = Composition::new(vec![dx]);
            for (g, d) in self.apply_basis(y).iter() {
                out.add_term(head.concat(g), w.clone() * d.clone());
            }
        }
        out
    }

    /// `Ψ(h)`, extended linearly over homogeneous components.
    pub fn apply(&self, h: &Element<A::Basis, S>) -> QSym<S> {
        QSym::from_m(h.map_linear(|b| (*self.apply_basis(b)).clone()))
    }
}

/// `Ψ(h)` for the character `ζ`.
pub fn psi<A: HopfAlgebra, S: Field>(zeta: &Character<A, S>, h: &Element<A::Basis, S>) -> QSym<S> {
    UniversalMorphism::new(zeta.clone()).apply(h)
}

/// `Ψ(M_β) = Σ_{β = β_1 ... β_h} ζ(M_{β_1}) ... ζ(M_{β_h}) M_{(|β_1|, ..., |β_h|)}`,
/// the closed form of the universal morphism from QSym to itself.
pub fn psi_on_qsym<S: Field>(zeta: &Character<QSymAlgebra, S>, x: &QSym<S>) -> QSym<S> {
    QSym::from_m(x.m_terms().map_linear(|beta| {
        let mut out = Element::zero();
        for pieces in beta.factorizations() {
            let mut v = S::one();
            for p in &pieces {
                v = v * zeta.eval(p);
                if v.is_zero() {
                    break;
                }
            }
            if !v.is_zero() {
                out.add_term(Composition::new(pieces.iter().map(Composition::weight).collect()), v);
            }
        }
        out
    }))
}

/// Stembridge's map in closed form:
/// `Θ(M_β) = (-1)^{|β|+k(β)} Σ_{α ≤ odd(β)} 2^{k(α)} M_α` when the last part
/// of `β` is odd, 0 when it is even, and `Θ(1) = 1`.
pub fn theta<S: Field>(x: &QSym<S>) -> QSym<S> {
    QSym::from_m(x.m_terms().map_linear(|beta| {
        let Some(odd) = odd_part(beta) else {
            return Element::zero();
        };
        if beta.is_empty() {
            return Element::basis(Composition::empty());
        }
        let sign = S::sign(beta.weight() + beta.len());
        coarsenings(&odd)
            .into_iter()
            .map(|a| {
                let c = sign.clone() * S::from_int(1 << a.len());
                (a, c)
            })
            .collect()
    }))
}

/// `Ψ₊` and `Ψ₋`, the universal morphisms for the even and odd parts of
/// `ζ_Q`, valid up to a fixed degree.
pub struct CanonicalProjections<S> {
    plus: Character<QSymAlgebra, S>,
    minus: Character<QSymAlgebra, S>,
    bound: usize,
}

impl<S: Field> CanonicalProjections<S> {
    pub fn new(bound: usize) -> Result<Self> {
        let (plus, minus) = zeta_qsym::<S>().even_odd_decompose(bound)?;
        Ok(CanonicalProjections { plus, minus, bound })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn zeta_plus(&self) -> &Character<QSymAlgebra, S> {
        &self.plus
    }

    pub fn zeta_minus(&self) -> &Character<QSymAlgebra, S> {
        &self.minus
    }

    fn check(&self, x: &QSym<S>) -> Result<()> {
        let d = x.max_degree();
        if d > self.bound {
            return Err(Error::DegreeBound { degree: d, bound: self.bound });
        }
        Ok(())
    }

    pub fn psi_plus(&self, x: &QSym<S>) -> Result<QSym<S>> {
        self.check(x)?;
        Ok(psi_on_qsym(&self.plus, x))
    }

    pub fn psi_minus(&self, x: &QSym<S>) -> Result<QSym<S>> {
        self.check(x)?;
        Ok(psi_on_qsym(&self.minus, x))
    }
}

/// `(f * g)(x) = m ∘ (f ⊗ g) ∘ Δ(x)` for linear maps `QSym → QSym`.
pub fn convolve_maps<S: Field>(
    f: impl Fn(&QSym<S>) -> QSym<S>,
    g: impl Fn(&QSym<S>) -> QSym<S>,
    x: &QSym<S>,
) -> QSym<S> {
    let mut out = QSym::zero();
    for ((a, b), c) in x.to_m().coproduct().iter() {
        let term = f(&QSym::m(a.clone())).product(&g(&QSym::m(b.clone())));
        out = &out + &term.scale(c);
    }
    out
}

/// Compare the universal morphism `QSym^cop → QSym` for `ζ_Q⁻¹` (inverse
/// computed in the co-opposite algebra) with the closed-form antipode on
/// every `M_β` with `|β| ≤ n`. Returns the mismatches.
pub fn antipode_via_universality<S: Field>(n: usize) -> Vec<(Composition, QSym<S>, QSym<S>)> {
    let cop = Arc::new(Cop(QSymAlgebra));
    let zeta_inv = zeta_qsym_on::<_, S>(cop).inverse();
    let morphism = UniversalMorphism::new(zeta_inv);
    let mut bad = Vec::new();
    for d in 0..=n {
        for beta in compositions_of(d) {
            let via = morphism.apply(&Element::basis(beta.clone()));
            let direct = QSym::m(beta.clone()).antipode();
            if via != direct {
                bad.push((beta, via, direct));
            }
        }
    }
    bad
}
