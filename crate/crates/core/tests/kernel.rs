use std::collections::{BTreeMap, BTreeSet, VecDeque};

use combhopf::compositions::{
    composition_from_subset, compositions_of, count_odd_compositions, odd_compositions_of, partitions_of, quasi_shuffle,
    refinements, refines, sort_to_partition, subset_of,
};
use combhopf::nsym::pairing;
use combhopf::qsym::{f_to_m, m_to_f};
use combhopf::{linear_combine, Composition, Element, Field, NSym, QSym, Rational, Scalar, Series, Sym};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

type Q = QSym<Rational>;

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn upto(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(compositions_of).collect()
}

fn composition(max_weight: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=4, 0..=max_weight).prop_map(move |mut parts| {
        while parts.iter().sum::<usize>() > max_weight {
            parts.pop();
        }
        Composition::new(parts)
    })
}

fn m_element(max_weight: usize) -> impl Strategy<Value = Q> {
    prop::collection::vec((composition(max_weight), -3i64..=3), 0..4)
        .prop_map(|terms| Q::from_m(terms.into_iter().map(|(a, c)| (a, r(c))).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_sums_cross_multiply(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let sum = Rational::ratio(a, b) + Rational::ratio(c, d);
        let (p, q) = (sum.numer().clone(), sum.denom().clone());
        prop_assert!(q.is_positive());
        prop_assert!(p.gcd(&q).is_one());
        prop_assert_eq!(p * BigInt::from(b * d), BigInt::from(a * d + b * c) * q);
    }
}

proptest! {
    #[test]
    fn series_times_reciprocal_is_one(head in 1i64..5, tail in prop::collection::vec(-5i64..=5, 0..12), den in 1i64..4) {
        let order = tail.len();
        let mut coeffs = vec![Rational::ratio(head, den)];
        coeffs.extend(tail.iter().map(|&c| Rational::ratio(c, den)));
        let a = Series::new(coeffs, order);
        prop_assert_eq!(a.mul(&a.reciprocal().unwrap()).unwrap(), Series::one(order));
    }

    #[test]
    fn linear_combinations_commute_and_associate(x in m_element(5), y in m_element(5), z in m_element(5), c in -3i64..=3) {
        let (x, y, z) = (x.into_terms(), y.into_terms(), z.into_terms());
        let one = r(1);
        let xy = linear_combine(&[(one.clone(), &x), (r(c), &y)]);
        let yx = linear_combine(&[(r(c), &y), (one.clone(), &x)]);
        prop_assert_eq!(&xy, &yx);
        let left = linear_combine(&[(one.clone(), &xy), (one.clone(), &z)]);
        let yz = linear_combine(&[(r(c), &y), (one.clone(), &z)]);
        let right = linear_combine(&[(one.clone(), &x), (one.clone(), &yz)]);
        prop_assert_eq!(&left, &right);
        prop_assert!(left.iter().all(|(_, v)| !v.is_zero()));
        prop_assert!((&x - &x).is_empty());
    }

    #[test]
    fn products_expand_to_polynomial_products(x in m_element(5), y in m_element(5)) {
        let lhs = x.product(&y).expand_truncated(10);
        let rhs = x.expand_truncated(10).mul(&y.expand_truncated(10));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn subsets_and_compositions_correspond() {
    for alpha in upto(10) {
        let n = alpha.weight();
        assert_eq!(composition_from_subset(&subset_of(&alpha), n).unwrap(), alpha);
    }
    assert!(composition_from_subset(&BTreeSet::from([3]), 3).is_err());
}

#[test]
fn refinement_matches_splitting_closure() {
    for n in 0..=8 {
        for alpha in compositions_of(n) {
            // every refinement reachable by splitting one part at a time
            let mut seen = BTreeSet::from([alpha.clone()]);
            let mut queue = VecDeque::from([alpha.clone()]);
            while let Some(g) = queue.pop_front() {
                for (i, &p) in g.parts().iter().enumerate() {
                    for a in 1..p {
                        let mut parts = g.parts().to_vec();
                        parts.splice(i..=i, [a, p - a]);
                        let h = Composition::new(parts);
                        if seen.insert(h.clone()) {
                            queue.push_back(h);
                        }
                    }
                }
            }
            for beta in compositions_of(n) {
                assert_eq!(refines(&alpha, &beta).unwrap(), seen.contains(&beta), "{beta} vs {alpha}");
            }
            assert_eq!(refinements(&alpha).into_iter().collect::<BTreeSet<_>>(), seen);
        }
    }
}

fn shuffle_multiset(a: &Composition, b: &Composition) -> BTreeMap<Composition, u64> {
    quasi_shuffle(a, b).iter().cloned().collect()
}

/// Number of overlapping shuffles of `k` and `l` letters.
fn delannoy(k: usize, l: usize) -> u64 {
    if k == 0 || l == 0 {
        1
    } else {
        delannoy(k - 1, l) + delannoy(k, l - 1) + delannoy(k - 1, l - 1)
    }
}

#[test]
fn quasi_shuffle_is_commutative_and_associative() {
    let all = upto(6);
    for a in &all {
        for b in all.iter().filter(|b| a.weight() + b.weight() <= 6) {
            let ab = shuffle_multiset(a, b);
            assert_eq!(ab, shuffle_multiset(b, a));
            assert_eq!(ab.values().sum::<u64>(), delannoy(a.len(), b.len()));
            for g in ab.keys() {
                assert!(g.len() <= a.len() + b.len() && g.len() >= a.len().max(b.len()));
            }
            for c in all.iter().filter(|c| a.weight() + b.weight() + c.weight() <= 6) {
                let mut left = BTreeMap::new();
                for (g, m) in &ab {
                    for (h, k) in shuffle_multiset(g, c) {
                        *left.entry(h).or_insert(0) += m * k;
                    }
                }
                let mut right = BTreeMap::new();
                for (g, m) in shuffle_multiset(b, c) {
                    for (h, k) in shuffle_multiset(a, &g) {
                        *right.entry(h).or_insert(0) += m * k;
                    }
                }
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn odd_composition_counts() {
    for n in 0..=12 {
        assert_eq!(count_odd_compositions(n), odd_compositions_of(n).len() as u64);
        let brute = compositions_of(n).into_iter().filter(Composition::is_odd).count() as u64;
        assert_eq!(count_odd_compositions(n), brute);
    }
}

#[test]
fn fundamental_and_monomial_changes_are_inverse() {
    for alpha in upto(8) {
        let m: Element<Composition, Rational> = Element::basis(alpha.clone());
        assert_eq!(m_to_f(&f_to_m(&m)), m);
        assert_eq!(f_to_m(&m_to_f(&m)), m);
    }
}

#[test]
fn antipode_is_multiplicative() {
    let all = upto(6);
    for a in &all {
        for b in all.iter().filter(|b| a.weight() + b.weight() <= 6) {
            let (x, y) = (Q::m(a.clone()), Q::m(b.clone()));
            assert_eq!(x.product(&y).antipode(), x.antipode().product(&y.antipode()));
        }
    }
    // commutative, so S is an involution
    for a in upto(6) {
        assert_eq!(Q::m(a.clone()).antipode().antipode(), Q::m(a));
    }
}

fn is_symmetric(x: &Q) -> bool {
    let m = x.m_terms();
    let symmetric = m.iter().all(|(a, c)| sort_to_partition(a).rearrangements().iter().all(|b| m.coeff(b) == *c));
    symmetric
}

#[test]
fn sym_products_stay_symmetric() {
    for n in 0..=6 {
        for i in 0..=n {
            for l in partitions_of(i) {
                for k in partitions_of(n - i) {
                    let x = Sym::<Rational>::m(l.clone()).to_qsym().product(&Sym::m(k.clone()).to_qsym());
                    assert!(is_symmetric(&x), "m{l}·m{k}");
                    let in_sym = Sym::<Rational>::m(l.clone()).product(&Sym::m(k.clone())).to_qsym();
                    assert_eq!(in_sym, x);
                }
            }
        }
    }
}

#[test]
fn nsym_pairs_dually_with_qsym() {
    let all = upto(6);
    for g in &all {
        let h = NSym::<Rational>::h(g.clone());
        let dh = h.coproduct();
        for a in all.iter().filter(|a| a.weight() <= g.weight()) {
            for b in compositions_of(g.weight() - a.weight()) {
                let lhs = pairing(&Q::m(a.clone()).product(&Q::m(b.clone())), &h);
                assert_eq!(lhs, dh.coeff(&(a.clone(), b.clone())), "⟨M{a}·M{b}, H{g}⟩");
                // ⟨Δ M_g, H_a ⊗ H_b⟩ = ⟨M_g, H_a H_b⟩
                let lhs = Q::m(g.clone()).coproduct().coeff(&(a.clone(), b.clone()));
                let rhs = pairing(&Q::m(g.clone()), &NSym::h(a.clone()).product(&NSym::h(b.clone())));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn projection_to_sym_is_multiplicative_and_dual_to_inclusion() {
    let all = upto(6);
    for a in &all {
        for b in all.iter().filter(|b| a.weight() + b.weight() <= 6) {
            let (x, y) = (NSym::<Rational>::h(a.clone()), NSym::h(b.clone()));
            let lhs = x.product(&y).project_to_sym().to_m();
            let rhs = x.project_to_sym().product(&y.project_to_sym()).to_m();
            assert_eq!(lhs, rhs);
        }
    }
    for beta in &all {
        let image = NSym::<Rational>::h(beta.clone()).project_to_sym();
        for lambda in partitions_of(beta.weight()) {
            let lhs = pairing(&Sym::<Rational>::m(lambda.clone()).to_qsym(), &NSym::h(beta.clone()));
            assert_eq!(lhs, image.coeff(&lambda));
        }
        assert_eq!(image.coeff(&sort_to_partition(beta)), r(1));
    }
}
