use std::sync::Arc;

use combhopf::characters::{zeta_qsym, zeta_qsym_on, zeta_sym};
use combhopf::compositions::{compositions_of, odd_compositions_of, sort_to_partition};
use combhopf::evenodd::eta_basis;
use combhopf::hopf::{multiply, sample_pairs, Cop, NSymAlgebra, QSymAlgebra};
use combhopf::instances::{graph_zeta, poset_zeta, rota_zeta, GraphAlgebra, PosetAlgebra, RotaAlgebra};
use combhopf::instances::graph::graphs_of_order;
use combhopf::universal::{antipode_via_universality, psi, psi_on_qsym, theta, CanonicalProjections, UniversalMorphism};
use combhopf::{Character, Composition, Element, HopfAlgebra, QSym, Rational, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = QSym<Rational>;

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn upto(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(compositions_of).collect()
}

/// Ψ is multiplicative and comultiplicative on sampled basis elements, and
/// `ζ_Q ∘ Ψ = ζ`.
fn check_morphism<A: HopfAlgebra>(zeta: Character<A, Rational>, max_degree: usize, samples: usize) {
    let alg = zeta.algebra().clone();
    let zq = zeta_qsym::<Rational>();
    let morphism = UniversalMorphism::new(zeta.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..=max_degree {
        for b in alg.test_basis(n) {
            let image = morphism.apply(&Element::basis(b.clone()));
            assert_eq!(zq.eval_element(image.terms()), zeta.eval(&b), "ζ_Q(Ψ({}))", alg.label(&b));
            let mut rhs = Element::zero();
            for ((x, y), c) in alg.coproduct(&b).iter() {
                for (u, cu) in morphism.apply_basis(x).iter() {
                    for (v, cv) in morphism.apply_basis(y).iter() {
                        rhs.add_term((u.clone(), v.clone()), r(*c) * cu.clone() * cv.clone());
                    }
                }
            }
            assert_eq!(image.coproduct(), rhs, "ΔΨ({})", alg.label(&b));
        }
        for (a, b) in sample_pairs(alg.as_ref(), n, samples, &mut rng) {
            let ab = multiply(alg.as_ref(), &Element::<_, Rational>::basis(a.clone()), &Element::basis(b.clone()));
            let lhs = morphism.apply(&ab);
            let rhs = morphism.apply(&Element::basis(a.clone())).product(&morphism.apply(&Element::basis(b.clone())));
            assert_eq!(lhs, rhs, "Ψ({} · {})", alg.label(&a), alg.label(&b));
        }
    }
}

#[test]
fn universal_morphism_on_qsym_is_identity_for_zeta() {
    for beta in upto(6) {
        assert_eq!(psi(&zeta_qsym::<Rational>(), &Element::basis(beta.clone())), Q::m(beta));
    }
    check_morphism(zeta_qsym::<Rational>().power(2), 6, 40);
}

#[test]
fn universal_morphism_on_sym_nsym_and_cop() {
    check_morphism(zeta_sym::<Rational>(), 6, 40);
    let nsym = Arc::new(NSymAlgebra);
    let ones = Character::from_rule(nsym, |_: &Composition| r(1), 6).unwrap();
    check_morphism(ones, 5, 40);
    check_morphism(zeta_qsym_on::<_, Rational>(Arc::new(Cop(QSymAlgebra))), 5, 40);
}

#[test]
fn universal_morphism_on_combinatorial_instances() {
    check_morphism(poset_zeta::<Rational>(Arc::new(PosetAlgebra::new())), 5, 30);
    check_morphism(graph_zeta::<Rational>(Arc::new(GraphAlgebra::new())), 5, 30);
    check_morphism(rota_zeta::<Rational>(Arc::new(RotaAlgebra::new())), 4, 30);
}

#[test]
fn recursive_and_closed_forms_agree() {
    let z = zeta_qsym::<Rational>();
    let mut characters: Vec<Character<QSymAlgebra, Rational>> = (-3..=3).map(|m| z.power(m)).collect();
    characters.push(z.canonical_characters().0);
    let (plus, minus) = z.even_odd_decompose(7).unwrap();
    characters.extend([plus, minus]);
    for c in &characters {
        let morphism = UniversalMorphism::new(c.clone());
        for beta in upto(7) {
            let x = Q::m(beta.clone());
            assert_eq!(morphism.apply(x.terms()), psi_on_qsym(c, &x), "M{beta}");
        }
    }
}

#[test]
fn theta_is_absorbed_by_the_odd_projection() {
    let proj = CanonicalProjections::<Rational>::new(6).unwrap();
    for beta in upto(6) {
        let x = Q::m(beta.clone());
        let t = theta(&x);
        assert_eq!(theta(&proj.psi_minus(&x).unwrap()), t, "Θ∘Ψ₋ on M{beta}");
        assert_eq!(proj.psi_minus(&t).unwrap(), t, "Ψ₋∘Θ on M{beta}");
    }
    assert!(proj.psi_minus(&Q::m(Composition::new(vec![7]))).is_err());
}

#[test]
fn theta_matches_psi_of_zeta_squared_on_eta() {
    let z2 = zeta_qsym::<Rational>().power(2);
    for n in 0..=7 {
        for beta in odd_compositions_of(n) {
            let eta = eta_basis::<Rational>(&beta).unwrap();
            assert_eq!(psi_on_qsym(&z2, &eta), theta(&eta), "η{beta}");
        }
    }
    // off the odd subalgebra they differ
    let m2 = Q::m(Composition::new(vec![2]));
    assert_ne!(psi_on_qsym(&z2, &m2), theta(&m2));
}

#[test]
fn chromatic_images_are_symmetric() {
    let z = graph_zeta::<Rational>(Arc::new(GraphAlgebra::new()));
    for n in 0..=5 {
        for g in graphs_of_order(n) {
            let image = psi(&z, &Element::basis(g.clone())).m_terms();
            for (alpha, c) in image.iter() {
                for beta in sort_to_partition(alpha).rearrangements() {
                    assert_eq!(image.coeff(&beta), *c, "{g:?}");
                }
            }
            if n == 0 {
                continue;
            }
            // proper colorings with 1 color exist only without edges
            let m_n = image.coeff(&Composition::new(vec![n]));
            assert_eq!(m_n, r((g.graph().edge_count() == 0) as i64), "{g:?}");
        }
    }
}

#[test]
fn antipode_from_universality() {
    assert!(antipode_via_universality::<Rational>(6).is_empty());
}
