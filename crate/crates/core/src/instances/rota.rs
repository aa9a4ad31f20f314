//! Rota's Hopf algebra of graded posets: isomorphism classes of graded
//! posets with unique `0` and `1`, graded by rank, with the cartesian
//! product and `Δ(P) = Σ_{0 ≤ z ≤ 1} [0, z] ⊗ [z, 1]`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use super::graded::{ideal_lattice, GradedPoset};
use super::poset::{boolean_lattice, chain, polygon_face_lattice, posets_of_size, FinitePoset};
use crate::characters::Character;
use crate::element::{Basis, Element};
use crate::hopf::HopfAlgebra;
use crate::scalar::Field;

/// Isomorphism class of a graded poset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GradedPosetClass {
    rank: usize,
    rows: Vec<u64>,
}

impl GradedPosetClass {
    pub fn of(p: &GradedPoset) -> Self {
        GradedPosetClass { rank: p.rank(), rows: p.poset().canonical_rows() }
    }

    pub fn poset(&self) -> GradedPoset {
        GradedPoset::new(FinitePoset::from_relation(self.rows.clone()).expect("stored order is valid"))
            .expect("stored poset is graded")
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

impl Basis for GradedPosetClass {
    fn degree(&self) -> usize {
        self.rank
    }
}

type Coproducts = RwLock<HashMap<GradedPosetClass, Arc<Element<(GradedPosetClass, GradedPosetClass), i64>>>>;

#[derive(Default)]
pub struct RotaAlgebra {
    coproducts: Coproducts,
}

impl RotaAlgebra {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn class(&self, p: &GradedPoset) -> GradedPosetClass {
        GradedPosetClass::of(p)
    }
}

impl HopfAlgebra for RotaAlgebra {
    type Basis = GradedPosetClass;

    fn name(&self) -> String {
        "rota".into()
    }

    fn unit(&self) -> GradedPosetClass {
        GradedPosetClass::of(&GradedPoset::new(chain(1)).expect("one point is graded"))
    }

    fn product(&self, a: &GradedPosetClass, b: &GradedPosetClass) -> Element<GradedPosetClass, i64> {
        let p = a.poset().product(&b.poset()).expect("product of graded posets within size limit");
        Element::basis(GradedPosetClass::of(&p))
    }

    fn coproduct(&self, a: &GradedPosetClass) -> Arc<Element<(GradedPosetClass, GradedPosetClass), i64>> {
        if let Some(hit) = self.coproducts.read().expect("cache poisoned").get(a) {
            return hit.clone();
        }
        let p = a.poset();
        let mut out = Element::zero();
        for z in 0..p.poset().size() {
            let lower = p.interval(p.bottom(), z).expect("0 <= z");
            let upper = p.interval(z, p.top()).expect("z <= 1");
            out.add_term((GradedPosetClass::of(&lower), GradedPosetClass::of(&upper)), 1);
        }
        let out = Arc::new(out);
        self.coproducts.write().expect("cache poisoned").insert(a.clone(), out.clone());
        out
    }

    /// Components are infinite-dimensional.
    fn basis(&self, _n: usize) -> Option<Vec<GradedPosetClass>> {
        None
    }

    /// Lattices of ideals of every poset on `n` elements (`n ≤ 4`), together
    /// with `B_n`, the chain of rank `n`, and face lattices of polygons in
    /// rank 3.
    fn sample_basis(&self, n: usize) -> Vec<GradedPosetClass> {
        let mut out = BTreeSet::new();
        out.insert(GradedPosetClass::of(&GradedPoset::new(chain(n + 1)).expect("chain is graded")));
        if n <= 6 {
            out.insert(GradedPosetClass::of(&GradedPoset::new(boolean_lattice(n)).expect("B_n is graded")));
        }
        if n <= 4 {
            for rows in posets_of_size(n) {
                let p = FinitePoset::from_relation(rows).expect("enumerated order");
                out.insert(GradedPosetClass::of(&ideal_lattice(&p).expect("J(P) is graded")));
            }
        }
        if n == 3 {
            for k in 2..=5 {
                out.insert(GradedPosetClass::of(&GradedPoset::new(polygon_face_lattice(k)).expect("graded")));
            }
        }
        out.into_iter().collect()
    }

    fn label(&self, b: &GradedPosetClass) -> String {
        format!("R{}", b.poset().poset().describe())
    }
}

/// `ζ(P) = 1` for every graded poset.
pub fn rota_zeta<S: Field>(alg: Arc<RotaAlgebra>) -> Character<RotaAlgebra, S> {
    Character::new_unchecked(crate::Functional::from_rule(alg, |_| S::one()))
}
