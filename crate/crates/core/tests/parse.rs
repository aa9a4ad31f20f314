use num_bigint::BigInt;
use proptest::prelude::*;

use combhopf::compositions::{Composition, Partition};
use combhopf::element::Element;
use combhopf::parse::{element_from_json, parse_element, AnyElement};
use combhopf::qsym::{QSym, QSymBasis};
use combhopf::sym::{Sym, SymBasis};
use combhopf::Rational;

fn ratio() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..12).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn parts() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..4, 0..5)
}

fn qsym() -> impl Strategy<Value = AnyElement<Rational>> {
    (prop::bool::ANY, prop::collection::vec((parts(), ratio()), 0..6)).prop_map(|(fund, terms)| {
        let mut e = Element::zero();
        for (p, c) in terms {
            e.add_term(Composition::new(p), c);
        }
        let basis = if fund { QSymBasis::Fundamental } else { QSymBasis::Monomial };
        AnyElement::QSym(QSym::new(basis, e))
    })
}

fn sym() -> impl Strategy<Value = AnyElement<Rational>> {
    (0usize..4, prop::collection::vec((parts(), ratio()), 0..6)).prop_map(|(b, terms)| {
        let mut e = Element::zero();
        for (p, c) in terms {
            e.add_term(Partition::new(p), c);
        }
        let basis = [SymBasis::Monomial, SymBasis::Power, SymBasis::Elementary, SymBasis::Complete][b];
        AnyElement::Sym(Sym::new(basis, e))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn qsym_text_and_json_round_trip(x in qsym()) {
        let back: AnyElement<Rational> = parse_element(&x.to_string()).unwrap();
        let text = back.to_string();
        prop_assert_eq!(parse_element::<Rational>(&text).unwrap().to_string(), text);
        prop_assert_eq!(back.into_qsym().unwrap().to_m(), x.clone().into_qsym().unwrap().to_m());
        prop_assert_eq!(element_from_json::<Rational>(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn sym_text_and_json_round_trip(x in sym()) {
        let text = x.to_string();
        let back: AnyElement<Rational> = parse_element(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(element_from_json::<Rational>(&x.to_json()).unwrap(), x);
    }
}
