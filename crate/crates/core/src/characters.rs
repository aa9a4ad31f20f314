//! Linear functionals and characters on a graded connected Hopf algebra.
//!
//! A [`Functional`] is an expression tree over group operations (convolution,
//! inverse, bar, square root) whose values are computed per basis index on
//! demand and memoized. This covers algebras such as Rota's, whose homogeneous
//! components are infinite; on algebras with a finite basis listing the
//! per-degree coefficient vectors are available through
//! [`Functional::component`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compositions::Composition;
use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::hopf::{multiply, sample_pairs, HopfAlgebra, QSymAlgebra, SymAlgebra};
use crate::qsym::QSym;
use crate::scalar::{binomial, Field};

/// Sampled basis pairs per degree when validating multiplicativity.
pub const MULTIPLICATIVITY_SAMPLES: usize = 100;

/// Default degree used by character operations in the CLI.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

type Rule<B, S> = Arc<dyn Fn(&B) -> S + Send + Sync>;

enum Op<A: HopfAlgebra, S> {
    Counit,
    Rule(Rule<A::Basis, S>),
    Convolve(Functional<A, S>, Functional<A, S>),
    Inverse(Functional<A, S>),
    Bar(Functional<A, S>),
    Linear(Vec<(S, Functional<A, S>)>),
    /// The unique `ρ` with `ρ_0 = ε` and `outer = ρ · inner · ρ`.
    Sqrt { outer: Functional<A, S>, inner: Functional<A, S> },
}

struct Node<A: HopfAlgebra, S> {
    algebra: Arc<A>,
    op: Op<A, S>,
    cache: RwLock<HashMap<A::Basis, S>>,
}

/// A linear functional `H → k`, given by its values on basis indices.
pub struct Functional<A: HopfAlgebra, S> {
    node: Arc<Node<A, S>>,
}

impl<A: HopfAlgebra, S> Clone for Functional<A, S> {
    fn clone(&self) -> Self {
        Functional { node: self.node.clone() }
    }
}

impl<A: HopfAlgebra, S> fmt::Debug for Functional<A, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match &self.node.op {
            Op::Counit => "counit",
            Op::Rule(_) => "rule",
            Op::Convolve(..) => "convolve",
            Op::Inverse(_) => "inverse",
            Op::Bar(_) => "bar",
            Op::Linear(_) => "linear",
            Op::Sqrt { .. } => "sqrt",
        };
        write!(f, "Functional({} on {})", op, self.node.algebra.name())
    }
}

impl<A: HopfAlgebra, S: Field> Functional<A, S> {
    fn build(algebra: Arc<A>, op: Op<A, S>) -> Self {
        Functional { node: Arc::new(Node { algebra, op, cache: RwLock::new(HashMap::new()) }) }
    }

    fn derived(&self, op: Op<A, S>) -> Self {
        Self::build(self.node.algebra.clone(), op)
    }

    /// `ε`: 1 on the unit, 0 in positive degree.
    pub fn counit(algebra: Arc<A>) -> Self {
        Self::build(algebra, Op::Counit)
    }

    pub fn from_rule(algebra: Arc<A>, rule: impl Fn(&A::Basis) -> S + Send + Sync + 'static) -> Self {
        Self::build(algebra, Op::Rule(Arc::new(rule)))
    }

    pub fn algebra(&self) -> &Arc<A> {
        &self.node.algebra
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.node.algebra, &other.node.algebra)
    }

    /// `φψ = m ∘ (φ ⊗ ψ) ∘ Δ`
    pub fn convolve(&self, other: &Self) -> Self {
        self.derived(Op::Convolve(self.clone(), other.clone()))
    }

    /// Convolution inverse, by the recursion `Σ φ⁻¹(h_1) φ(h_2) = ε(h)`.
    /// Requires `φ(1) = 1`.
    pub fn inverse(&self) -> Result<Self> {
        self.check_unital()?;
        Ok(self.derived(Op::Inverse(self.clone())))
    }

    /// `φ̄(h) = (-1)^n φ(h)` for `h` of degree `n`.
    pub fn bar(&self) -> Self {
        self.derived(Op::Bar(self.clone()))
    }

    pub fn scale(&self, c: S) -> Self {
        self.derived(Op::Linear(vec![(c, self.clone())]))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.derived(Op::Linear(vec![(S::one(), self.clone()), (S::one(), other.clone())]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.derived(Op::Linear(vec![(S::one(), self.clone()), (-S::one(), other.clone())]))
    }

    /// `m`-th convolution power; negative powers go through the inverse.
    pub fn power(&self, m: i64) -> Result<Self> {
        self.check_unital()?;
        let base = if m < 0 { self.inverse()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Self::counit(self.node.algebra.clone());
        let mut sq = base;
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                acc = if first { sq.clone() } else { acc.convolve(&sq) };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.convolve(&sq);
            }
        }
        Ok(acc)
    }

    /// The unique `ρ` with `ρ(1) = 1` and `φ = ρψρ` (`self` is `φ`).
    pub fn sqrt_decompose(&self, psi: &Self) -> Result<Self> {
        self.check_unital()?;
        psi.check_unital()?;
        Ok(self.derived(Op::Sqrt { outer: self.clone(), inner: psi.clone() }))
    }

    fn check_unital(&self) -> Result<()> {
        let u = self.node.algebra.unit();
        if self.eval(&u) != S::one() {
            return Err(Error::NotUnital);
        }
        Ok(())
    }

    /// Value on a basis index.
    pub fn eval(&self, b: &A::Basis) -> S {
        if let Some(v) = self.node.cache.read().expect("cache poisoned").get(b) {
            return v.clone();
        }
        let v = self.compute(b);
        self.node.cache.write().expect("cache poisoned").insert(b.clone(), v.clone());
        v
    }

    /// Value on a linear combination.
    pub fn eval_element(&self, x: &Element<A::Basis, S>) -> S {
        x.pair(|b| self.eval(b))
    }

    fn compute(&self, b: &A::Basis) -> S {
        let alg = &self.node.algebra;
        let n = b.degree();
        match &self.node.op {
            Op::Counit => {
                if n == 0 {
                    S::one()
                } else {
                    S::zero()
                }
            }
            Op::Rule(f) => f(b),
            Op::Convolve(phi, psi) => {
                let mut acc = S::zero();
                for ((x, y), c) in alg.coproduct(b).iter() {
                    let v = phi.eval(x);
                    if v.is_zero() {
                        continue;
                    }
                    acc = acc + S::from_int(*c) * v * psi.eval(y);
                }
                acc
            }
            Op::Inverse(phi) => {
                if n == 0 {
                    return S::one();
                }
                let mut acc = S::zero();
                for ((x, y), c) in alg.coproduct(b).iter() {
                    if y.degree() == 0 {
                        continue;
                    }
                    let v = phi.eval(y);
                    if v.is_zero() {
                        continue;
                    }
                    acc = acc + S::from_int(*c) * self.eval(x) * v;
                }
                -acc
            }
            Op::Bar(phi) => S::sign(n) * phi.eval(b),
            Op::Linear(parts) => {
                let mut acc = S::zero();
                for (c, f) in parts {
                    acc = acc + c.clone() * f.eval(b);
                }
                acc
            }
            Op::Sqrt { outer, inner } => {
                if n == 0 {
                    return S::one();
                }
                // φ(h) = 2ρ(h) + ψ(h) + Σ ρ(h_1)ψ(h_2)ρ(h_3) over the terms of
                // Δ²h with every factor of degree < n.
                let mut lower = S::zero();
                for ((x, yz), c) in alg.coproduct(b).iter() {
                    if x.degree() == n {
                        continue;
                    }
                    let rx = self.eval(x);
                    if rx.is_zero() {
                        continue;
                    }
                    for ((y, z), d) in alg.coproduct(yz).iter() {
                        if y.degree() == n || z.degree() == n {
                            continue;
                        }
                        let v = inner.eval(y);
                        if v.is_zero() {
                            continue;
                        }
                        lower = lower + S::from_int(c * d) * rx.clone() * v * self.eval(z);
                    }
                }
                (outer.eval(b) - inner.eval(b) - lower) / S::from_int(2)
            }
        }
    }

    /// Coefficient vector of the degree-`n` component against
    /// `algebra.basis(n)`.
    pub fn component(&self, n: usize) -> Result<Vec<(A::Basis, S)>> {
        let basis = self
            .node
            .algebra
            .basis(n)
            .ok_or_else(|| Error::NotEnumerable(self.node.algebra.name(), n))?;
        Ok(basis.into_iter().map(|b| {
            let v = self.eval(&b);
            (b, v)
        }).collect())
    }

    /// Agreement on the test basis of every degree `≤ n`. Exhaustive when the
    /// algebra lists its bases, sampled otherwise.
    pub fn equal_through(&self, other: &Self, n: usize) -> bool {
        (0..=n).all(|d| self.node.algebra.test_basis(d).iter().all(|b| self.eval(b) == other.eval(b)))
    }

    /// `φ̄ = φ` through degree `n`.
    pub fn is_even(&self, n: usize) -> bool {
        self.equal_through(&self.bar(), n)
    }

    /// `φ̄ = φ⁻¹` through degree `n`.
    pub fn is_odd(&self, n: usize) -> Result<bool> {
        Ok(self.bar().equal_through(&self.inverse()?, n))
    }

    /// First basis index of degree `≤ n` where the two functionals differ.
    pub fn first_difference(&self, other: &Self, n: usize) -> Option<A::Basis> {
        (0..=n).flat_map(|d| self.node.algebra.test_basis(d)).find(|b| self.eval(b) != other.eval(b))
    }
}

/// A functional known to be multiplicative with `ζ(1) = 1`.
pub struct Character<A: HopfAlgebra, S> {
    functional: Functional<A, S>,
}

impl<A: HopfAlgebra, S> Clone for Character<A, S> {
    fn clone(&self) -> Self {
        Character { functional: self.functional.clone() }
    }
}

impl<A: HopfAlgebra, S> fmt::Debug for Character<A, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({:?})", self.functional)
    }
}

impl<A: HopfAlgebra, S: Field> Character<A, S> {
    /// Wrap a rule after checking `ζ(1) = 1` and multiplicativity on sampled
    /// products of total degree `≤ degree_bound`.
    pub fn from_rule(
        algebra: Arc<A>,
        rule: impl Fn(&A::Basis) -> S + Send + Sync + 'static,
        degree_bound: usize,
    ) -> Result<Self> {
        Self::from_functional(Functional::from_rule(algebra, rule), degree_bound)
    }

    pub fn from_functional(functional: Functional<A, S>, degree_bound: usize) -> Result<Self> {
        functional.check_unital()?;
        check_multiplicative(&functional, degree_bound, 0x5eed)?;
        Ok(Character { functional })
    }

    /// Wrap without validation. For functionals built from characters by
    /// group operations, which are characters automatically.
    pub fn new_unchecked(functional: Functional<A, S>) -> Self {
        Character { functional }
    }

    pub fn counit(algebra: Arc<A>) -> Self {
        Self::new_unchecked(Functional::counit(algebra))
    }

    pub fn functional(&self) -> &Functional<A, S> {
        &self.functional
    }

    pub fn algebra(&self) -> &Arc<A> {
        self.functional.algebra()
    }

    pub fn eval(&self, b: &A::Basis) -> S {
        self.functional.eval(b)
    }

    pub fn eval_element(&self, x: &Element<A::Basis, S>) -> S {
        self.functional.eval_element(x)
    }

    pub fn convolve(&self, other: &Self) -> Self {
        Self::new_unchecked(self.functional.convolve(&other.functional))
    }

    pub fn inverse(&self) -> Self {
        Self::new_unchecked(self.functional.inverse().expect("characters are unital"))
    }

    pub fn bar(&self) -> Self {
        Self::new_unchecked(self.functional.bar())
    }

    pub fn power(&self, m: i64) -> Self {
        Self::new_unchecked(self.functional.power(m).expect("characters are unital"))
    }

    pub fn equal_through(&self, other: &Self, n: usize) -> bool {
        self.functional.equal_through(&other.functional, n)
    }

    pub fn is_even(&self, n: usize) -> bool {
        self.functional.is_even(n)
    }

    pub fn is_odd(&self, n: usize) -> bool {
        self.functional.is_odd(n).expect("characters are unital")
    }

    /// `ζ = ζ₊ζ₋` with `ζ₊` even and `ζ₋` odd. `ζ₊` is the square root of
    /// `ζ̄` relative to `ζ⁻¹`; the components are verified through degree `n`.
    pub fn even_odd_decompose(&self, n: usize) -> Result<(Self, Self)> {
        let plus = self.bar().functional.sqrt_decompose(&self.inverse().functional)?;
        let plus = Self::new_unchecked(plus);
        let minus = plus.inverse().convolve(self);
        if !plus.is_even(n) || !minus.is_odd(n) || !plus.convolve(&minus).equal_through(self, n) {
            return Err(Error::NotMultiplicative("decomposition failed to verify".into()));
        }
        Ok((plus, minus))
    }

    /// `(ν, χ) = (ζ̄⁻¹ζ, ζ̄ζ)`.
    pub fn canonical_characters(&self) -> (Self, Self) {
        let zb = self.bar();
        (zb.inverse().convolve(self), zb.convolve(self))
    }
}

fn check_multiplicative<A: HopfAlgebra, S: Field>(f: &Functional<A, S>, bound: usize, seed: u64) -> Result<()> {
    let alg = f.algebra().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 2..=bound {
        for (a, b) in sample_pairs(alg.as_ref(), n, MULTIPLICATIVITY_SAMPLES, &mut rng) {
            let ab = multiply(alg.as_ref(), &Element::<_, S>::basis(a.clone()), &Element::basis(b.clone()));
            let lhs = f.eval_element(&ab);
            let rhs = f.eval(&a) * f.eval(&b);
            if lhs != rhs {
                return Err(Error::NotMultiplicative(format!(
                    "value {lhs} on {} · {} but product of values is {rhs}",
                    alg.label(&a),
                    alg.label(&b)
                )));
            }
        }
    }
    Ok(())
}

/// `ζ_Q(M_α) = 1` if `k(α) ≤ 1`, else 0.
pub fn zeta_qsym<S: Field>() -> Character<QSymAlgebra, S> {
    Character::new_unchecked(Functional::from_rule(Arc::new(QSymAlgebra), |a: &Composition| {
        if a.len() <= 1 {
            S::one()
        } else {
            S::zero()
        }
    }))
}

/// The same character on any descriptor indexed by compositions in the
/// monomial basis (for example the co-opposite of QSym).
pub fn zeta_qsym_on<A: HopfAlgebra<Basis = Composition>, S: Field>(algebra: Arc<A>) -> Character<A, S> {
    Character::new_unchecked(Functional::from_rule(algebra, |a: &Composition| {
        if a.len() <= 1 {
            S::one()
        } else {
            S::zero()
        }
    }))
}

/// `ζ_S(m_λ) = 1` if `λ` has at most one part.
pub fn zeta_sym<S: Field>() -> Character<SymAlgebra, S> {
    Character::new_unchecked(Functional::from_rule(Arc::new(SymAlgebra), |l: &crate::Partition| {
        if l.len() <= 1 {
            S::one()
        } else {
            S::zero()
        }
    }))
}

/// The character of QSym obtained by setting `x_i = t_i` for finitely many
/// variables and the rest to zero.
pub fn qsym_specialization<S: Field>(point: Vec<S>) -> Character<QSymAlgebra, S> {
    Character::new_unchecked(Functional::from_rule(Arc::new(QSymAlgebra), move |a: &Composition| {
        monomial_at(a.parts(), &point)
    }))
}

/// `M_α(t_1, ..., t_r)` by dynamic programming over the parts.
fn monomial_at<S: Field>(parts: &[usize], point: &[S]) -> S {
    // ways[j] = value of the suffix of parts using variables from index j on.
    let r = point.len();
    let mut ways = vec![S::one(); r + 1];
    for &a in parts.iter().rev() {
        let mut next = vec![S::zero(); r + 1];
        for j in (0..r).rev() {
            let mut p = S::one();
            for _ in 0..a {
                p = p * point[j].clone();
            }
            next[j] = next[j + 1].clone() + p * ways[j + 1].clone();
        }
        ways = next;
    }
    ways[0].clone()
}

/// A random character of QSym: a product of point specializations at small
/// random rationals, one of them twisted by the bar involution, times a
/// random rational power of `ζ_Q`.
pub fn random_qsym_character<S: Field>(rng: &mut ChaCha8Rng) -> Character<QSymAlgebra, S> {
    let point = |rng: &mut ChaCha8Rng| -> Vec<S> {
        let r = rng.gen_range(1..=3);
        (0..r).map(|_| S::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))).collect()
    };
    let a = qsym_specialization::<S>(point(rng));
    let b = qsym_specialization::<S>(point(rng)).bar();
    let m = S::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    let zeta_m = Character::new_unchecked(Functional::from_rule(Arc::new(QSymAlgebra), move |a: &Composition| {
        generalized_binomial(&m, a.len())
    }));
    let ab = a.convolve(&b);
    let ab = if rng.gen_bool(0.5) { ab.inverse() } else { ab };
    ab.convolve(&zeta_m)
}

/// `binom(m, k)` for a scalar `m`.
pub fn generalized_binomial<S: Field>(m: &S, k: usize) -> S {
    let mut acc = S::one();
    for i in 0..k {
        acc = acc * (m.clone() - S::from_int(i as i64)) / S::from_int(i as i64 + 1);
    }
    acc
}

/// `ζ_Q^m(M_β) = binom(m, k(β))`, in closed form.
pub fn zeta_qsym_power_closed<S: Field>(m: i64, beta: &Composition) -> S {
    binomial(m, beta.len())
}

/// Characters addressable by name from the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedCharacter {
    ZetaQ,
    ZetaQInv,
    NuQ,
    ChiQ,
    ZetaS,
    PosetZeta,
    RotaZeta,
    GraphZeta,
}

impl std::str::FromStr for NamedCharacter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "zetaQ" => NamedCharacter::ZetaQ,
            "zetaQ_inv" => NamedCharacter::ZetaQInv,
            "nuQ" => NamedCharacter::NuQ,
            "chiQ" => NamedCharacter::ChiQ,
            "zetaS" => NamedCharacter::ZetaS,
            "poset_zeta" => NamedCharacter::PosetZeta,
            "rota_zeta" => NamedCharacter::RotaZeta,
            "graph_zeta" => NamedCharacter::GraphZeta,
            other => return Err(Error::UnknownName(other.into())),
        })
    }
}

impl NamedCharacter {
    /// The QSym characters in this registry.
    pub fn qsym<S: Field>(self) -> Option<Character<QSymAlgebra, S>> {
        let z = zeta_qsym::<S>();
        match self {
            NamedCharacter::ZetaQ => Some(z),
            NamedCharacter::ZetaQInv => Some(z.inverse()),
            NamedCharacter::NuQ => Some(z.canonical_characters().0),
            NamedCharacter::ChiQ => Some(z.canonical_characters().1),
            _ => None,
        }
    }
}

/// The degree-`n` component `Σ_α φ(M_α) H_α`, as NSym coordinates.
pub fn qsym_component<S: Field>(f: &Functional<QSymAlgebra, S>, n: usize) -> crate::NSym<S> {
    crate::NSym::new(f.component(n).expect("QSym lists its bases").into_iter().collect())
}

/// `φ` evaluated on an arbitrary QSym element (either basis).
pub fn eval_qsym<S: Field>(f: &Functional<QSymAlgebra, S>, x: &QSym<S>) -> S {
    f.eval_element(&x.m_terms())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::compositions_of;
    use crate::scalar::Scalar;
    use crate::{comp, Rational};

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn counit_is_convolution_unit() {
        let z = zeta_qsym::<Rational>();
        let e = Character::counit(z.algebra().clone());
        assert!(e.convolve(&z).equal_through(&z, 5));
        assert!(z.convolve(&e).equal_through(&z, 5));
        assert!(e.inverse().equal_through(&e, 5));
        assert!(e.bar().equal_through(&e, 5));
    }

    #[test]
    fn zeta_inverse_values() {
        let zi = zeta_qsym::<Rational>().inverse();
        for n in 0..=6 {
            for b in compositions_of(n) {
                assert_eq!(zi.eval(&b), Rational::sign(b.len()));
            }
        }
    }

    #[test]
    fn powers_follow_binomials() {
        let z = zeta_qsym::<Rational>();
        assert_eq!(z.power(3).eval(&comp![1, 1]), r(3));
        assert!(z.power(0).equal_through(&Character::counit(z.algebra().clone()), 4));
        assert_eq!(z.power(2).eval(&comp![1, 2, 1]), r(0));
        assert_eq!(z.power(-2).eval(&comp![1, 1]), r(3));
    }

    #[test]
    fn canonical_on_small_degrees() {
        let z = zeta_qsym::<Rational>();
        let (nu, chi) = z.canonical_characters();
        assert_eq!(nu.eval(&comp![1]), r(2));
        assert_eq!(nu.eval(&comp![2]), r(0));
        assert_eq!(nu.eval(&comp![]), r(1));
        assert_eq!(chi.eval(&comp![1, 1]), r(-1));
        assert_eq!(z.bar().eval(&comp![3]), r(-1));
    }

    #[test]
    fn zeta_is_neither_even_nor_odd() {
        let z = zeta_qsym::<Rational>();
        assert!(!z.is_even(3));
        assert!(!z.is_odd(3));
        let (nu, _) = z.canonical_characters();
        assert!(nu.is_odd(6));
    }

    #[test]
    fn square_root_of_equal_pair_is_counit() {
        let z = zeta_qsym::<Rational>();
        let e = Functional::<_, Rational>::counit(z.algebra().clone());
        let rho = e.sqrt_decompose(&e).unwrap();
        assert!(rho.equal_through(&e, 4));
        let f = z.functional();
        let rho = f.sqrt_decompose(f).unwrap();
        assert!(rho.convolve(f).convolve(&rho).equal_through(f, 5));
    }

    #[test]
    fn rule_validation_rejects_non_characters() {
        let bad = Character::<QSymAlgebra, Rational>::from_rule(
            Arc::new(QSymAlgebra),
            |a: &Composition| if a.is_empty() { r(1) } else { r(a.weight() as i64) },
            4,
        );
        assert!(matches!(bad, Err(Error::NotMultiplicative(_))));
        let nonunital =
            Character::<QSymAlgebra, Rational>::from_rule(Arc::new(QSymAlgebra), |_: &Composition| r(2), 3);
        assert_eq!(nonunital.unwrap_err(), Error::NotUnital);
        let ok = Character::<QSymAlgebra, Rational>::from_rule(
            Arc::new(QSymAlgebra),
            |a: &Composition| if a.len() <= 1 { r(1) } else { r(0) },
            6,
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn specializations_are_characters() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3 {
            let c = random_qsym_character::<Rational>(&mut rng);
            assert!(Character::from_functional(c.functional().clone(), 5).is_ok());
        }
        let s = qsym_specialization(vec![r(2), r(3)]);
        assert_eq!(s.eval(&comp![1]), r(5));
        assert_eq!(s.eval(&comp![1, 1]), r(6));
        assert_eq!(s.eval(&comp![2, 1]), r(12));
        assert_eq!(s.eval(&comp![1, 1, 1]), r(0));
    }

    #[test]
    fn float_scalars_work() {
        let z = zeta_qsym::<f64>();
        assert_eq!(z.inverse().eval(&comp![1, 2]), 1.0);
        let (nu, _) = z.canonical_characters();
        assert_eq!(nu.eval(&comp![1]), 2.0);
    }

    #[test]
    fn names() {
        assert_eq!("nuQ".parse::<NamedCharacter>().unwrap(), NamedCharacter::NuQ);
        assert!("zeta".parse::<NamedCharacter>().is_err());
        let nu = NamedCharacter::NuQ.qsym::<Rational>().unwrap();
        assert_eq!(nu.eval(&comp![1, 1]), r(2));
    }
}
