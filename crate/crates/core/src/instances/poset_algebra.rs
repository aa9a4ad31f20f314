//! The Hopf algebra of finite posets: isomorphism classes graded by size,
//! disjoint union as product, `Δ(P) = Σ_{I lower ideal} I ⊗ (P ∖ I)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::graded::ideal_lattice;
use super::poset::{posets_of_size, FinitePoset};
use super::rota::GradedPosetClass;
use crate::characters::{Character, Functional};
use crate::element::{Basis, Element};
use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::scalar::Field;

/// Largest size for which [`PosetAlgebra`] lists its basis.
pub const POSET_ENUMERATION_LIMIT: usize = 6;

/// Isomorphism class of a finite poset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PosetClass {
    rows: Vec<u64>,
}

impl PosetClass {
    pub fn of(p: &FinitePoset) -> Self {
        PosetClass { rows: p.canonical_rows() }
    }

    pub fn poset(&self) -> FinitePoset {
        FinitePoset::from_relation(self.rows.clone()).expect("stored order is valid")
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `J(P)` as a class of Rota's algebra.
    pub fn ideal_lattice(&self) -> Result<GradedPosetClass> {
        Ok(GradedPosetClass::of(&ideal_lattice(&self.poset())?))
    }

    /// Whether no two elements are comparable.
    pub fn is_discrete(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }
}

impl Basis for PosetClass {
    fn degree(&self) -> usize {
        self.rows.len()
    }
}

type Coproducts = RwLock<HashMap<PosetClass, Arc<Element<(PosetClass, PosetClass), i64>>>>;

#[derive(Default)]
pub struct PosetAlgebra {
    coproducts: Coproducts,
    bases: RwLock<HashMap<usize, Vec<PosetClass>>>,
}

impl PosetAlgebra {
    pub fn new() -> Self {
        Self::default()
    }
}

impl HopfAlgebra for PosetAlgebra {
    type Basis = PosetClass;

    fn name(&self) -> String {
        "posets".into()
    }

    fn unit(&self) -> PosetClass {
        PosetClass { rows: Vec::new() }
    }

    fn product(&self, a: &PosetClass, b: &PosetClass) -> Element<PosetClass, i64> {
        Element::basis(PosetClass::of(&a.poset().disjoint_union(&b.poset())))
    }

    fn coproduct(&self, a: &PosetClass) -> Arc<Element<(PosetClass, PosetClass), i64>> {
        if let Some(hit) = self.coproducts.read().expect("cache poisoned").get(a) {
            return hit.clone();
        }
        let p = a.poset();
        let all = p.all_mask();
        let mut out = Element::zero();
        for ideal in p.lower_ideals() {
            let left = PosetClass::of(&p.induced(ideal));
            let right = PosetClass::of(&p.induced(all & !ideal));
            out.add_term((left, right), 1);
        }
        let out = Arc::new(out);
        self.coproducts.write().expect("cache poisoned").insert(a.clone(), out.clone());
        out
    }

    fn basis(&self, n: usize) -> Option<Vec<PosetClass>> {
        if n > POSET_ENUMERATION_LIMIT {
            return None;
        }
        if let Some(hit) = self.bases.read().expect("cache poisoned").get(&n) {
            return Some(hit.clone());
        }
        let list: Vec<PosetClass> = posets_of_size(n).into_iter().map(|rows| PosetClass { rows }).collect();
        self.bases.write().expect("cache poisoned").insert(n, list.clone());
        Some(list)
    }

    fn sample_basis(&self, n: usize) -> Vec<PosetClass> {
        self.basis(n).unwrap_or_else(|| {
            let chain = super::poset::chain(n);
            let anti = super::poset::antichain(n);
            vec![PosetClass::of(&chain), PosetClass::of(&anti)]
        })
    }

    fn label(&self, b: &PosetClass) -> String {
        format!("P{}", b.poset().describe())
    }
}

/// `ζ(P) = 1` for every poset.
pub fn poset_zeta<S: Field>(alg: Arc<PosetAlgebra>) -> Character<PosetAlgebra, S> {
    Character::new_unchecked(Functional::from_rule(alg, |_| S::one()))
}

/// `ζ⁻¹(P) = (-1)^{#P}` if `P` is discrete, 0 otherwise.
pub fn poset_mobius_closed<S: Field>(p: &PosetClass) -> S {
    if p.is_discrete() {
        S::sign(p.size())
    } else {
        S::zero()
    }
}

/// `ν(P) = 2^{#Min(P)}`.
pub fn poset_nu_closed<S: Field>(p: &PosetClass) -> S {
    S::from_int(1 << p.poset().minimal().len())
}

/// A random character: independent small rationals on connected posets,
/// extended multiplicatively over connected components.
pub fn random_poset_character<S: Field>(alg: Arc<PosetAlgebra>, rng: ChaCha8Rng) -> Character<PosetAlgebra, S> {
    let state = Mutex::new((rng, HashMap::<PosetClass, S>::new()));
    Character::new_unchecked(Functional::from_rule(alg, move |p: &PosetClass| {
        let poset = p.poset();
        let mut acc = S::one();
        for comp in poset.components() {
            let key = PosetClass::of(&poset.induced(comp));
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

/// `J` on a poset class; fails only if `J(P)` exceeds the size limit.
pub fn j_map(p: &PosetClass) -> Result<GradedPosetClass> {
    p.ideal_lattice()
}

/// `μ(J(P))` from the graded poset.
pub fn mobius_of_ideal_lattice(p: &PosetClass) -> Result<i64> {
    Ok(ideal_lattice(&p.poset())?.mobius())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::instances::poset::{antichain, chain};
    use crate::Rational;

    #[test]
    fn closed_forms_on_small_posets() {
        let alg = Arc::new(PosetAlgebra::new());
        let z = poset_zeta::<Rational>(alg.clone());
        let zi = z.inverse();
        let (nu, _) = z.canonical_characters();
        let a2 = PosetClass::of(&antichain(2));
        let c2 = PosetClass::of(&chain(2));
        assert_eq!(zi.eval(&a2), Rational::from_int(1));
        assert_eq!(zi.eval(&c2), Rational::from_int(0));
        assert_eq!(nu.eval(&c2), Rational::from_int(2));
        assert_eq!(nu.eval(&a2), Rational::from_int(4));
    }

    #[test]
    fn coproduct_counts_ideals() {
        let alg = PosetAlgebra::new();
        let c2 = PosetClass::of(&chain(2));
        let d = alg.coproduct(&c2);
        assert_eq!(d.iter().map(|(_, c)| *c).sum::<i64>(), 3);
        let a2 = PosetClass::of(&antichain(2));
        let one = PosetClass::of(&antichain(1));
        assert_eq!(alg.coproduct(&a2).coeff(&(one.clone(), one)), 2);
    }

    #[test]
    fn random_characters_pass_validation() {
        use rand::SeedableRng;
        let alg = Arc::new(PosetAlgebra::new());
        let c = random_poset_character::<Rational>(alg, ChaCha8Rng::seed_from_u64(3));
        assert!(Character::from_functional(c.functional().clone(), 4).is_ok());
    }
}
