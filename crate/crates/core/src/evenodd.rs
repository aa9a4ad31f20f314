//! Even and odd subalgebras: the generic membership test, the generalized
//! Dehn–Sommerville relations on QSym, explicit bases, and Hilbert series.
//!
//! For a character `ζ`, the odd subalgebra is cut out by
//! `(id ⊗ (ζ̄ - ζ⁻¹) ⊗ id) Δ²(h) = 0`; in QSym the odd subalgebra is spanned
//! by `η_β = Σ_{α ≤ β} 2^{k(α)} M_α` over compositions `β` with odd parts.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::characters::Functional;
use crate::compositions::{
    coarsenings, compositions_of, count_even_compositions, count_odd_compositions, even_compositions_of,
    lyndon_count, odd_compositions_of, partitions_of, Composition, Partition,
};
use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg;
use crate::qsym::QSym;
use crate::scalar::Field;
use crate::series::TruncatedSeries;
use crate::sym::{Sym, SymBasis};

/// Whether `(id ⊗ (φ - ψ) ⊗ id) Δ²(h)` vanishes. `h` must be homogeneous.
pub fn generic_membership<A: HopfAlgebra, S: Field>(
    h: &Element<A::Basis, S>,
    phi: &Functional<A, S>,
    psi: &Functional<A, S>,
) -> Result<bool> {
    h.homogeneous_degree()?;
    let alg = phi.algebra().clone();
    let mut out: Element<(A::Basis, A::Basis), S> = Element::zero();
    for (b, c) in h.iter() {
        for ((x, yz), d) in alg.coproduct(b).iter() {
            for ((y, z), e) in alg.coproduct(yz).iter() {
                let v = phi.eval(y) - psi.eval(y);
                if v.is_zero() {
                    continue;
                }
                out.add_term((x.clone(), z.clone()), c.clone() * S::from_int(d * e) * v);
            }
        }
    }
    Ok(out.is_zero())
}

/// One relation `(α, i)` with a nonzero value.
#[derive(Clone, PartialEq, Debug)]
pub struct Violation<S> {
    pub alpha: Composition,
    pub i: usize,
    pub value: S,
}

/// Nonzero relation values for a homogeneous element; passes iff empty.
#[derive(Clone, PartialEq, Debug)]
pub struct DsReport<S> {
    pub degree: usize,
    pub violations: Vec<Violation<S>>,
}

#[derive(Serialize)]
struct ViolationJson<'a> {
    alpha: &'a [usize],
    i: usize,
    value: String,
}

impl<S: Field> DsReport<S> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// `[{"alpha": [...], "i": k, "value": "p/q"}, ...]`
    pub fn to_json(&self) -> String {
        let items: Vec<ViolationJson> = self
            .violations
            .iter()
            .map(|v| ViolationJson { alpha: v.alpha.parts(), i: v.i, value: v.value.to_string() })
            .collect();
        serde_json::to_string(&items).expect("serializable")
    }

    pub fn value_at(&self, alpha: &Composition, i: usize) -> S {
        self.violations
            .iter()
            .find(|v| &v.alpha == alpha && v.i == i)
            .map(|v| v.value.clone())
            .unwrap_or_else(S::zero)
    }
}

impl<S: Field> fmt::Display for DsReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass (degree {})", self.degree);
        }
        let k = self.violations.len();
        writeln!(f, "fail (degree {}, {k} nonzero relation{})", self.degree, if k == 1 { "" } else { "s" })?;
        for v in &self.violations {
            writeln!(f, "  alpha={} i={} value={}", v.alpha, v.i, v.value)?;
        }
        Ok(())
    }
}

/// Which family of Dehn–Sommerville relations to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DsForm {
    /// From `ζ̄ - ζ⁻¹`.
    E,
    /// Bayer–Billera form, from `χ - ε`.
    B,
}

impl FromStr for DsForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(DsForm::E),
            "B" | "b" => Ok(DsForm::B),
            other => Err(Error::UnknownName(other.into())),
        }
    }
}

fn ds_check<S: Field>(h: &QSym<S>, relation: impl Fn(&Element<Composition, S>, &Composition, usize) -> S) -> Result<DsReport<S>> {
    let m = h.m_terms();
    let Some(n) = m.homogeneous_degree()? else {
        return Ok(DsReport { degree: 0, violations: Vec::new() });
    };
    let mut violations = Vec::new();
    for alpha in compositions_of(n) {
        for i in 0..alpha.len() {
            let value = relation(&m, &alpha, i);
            if !value.is_zero() {
                violations.push(Violation { alpha: alpha.clone(), i: i + 1, value });
            }
        }
    }
    Ok(DsReport { degree: n, violations })
}

/// `E_{α,i}(h) = (-1)^{a_i} f_α(h) - Σ_{β ⊨ a_i} (-1)^{k(β)} f_{α ∘_i β}(h)`
/// where `f_γ(h)` is the coefficient of `M_γ` and `α ∘_i β` replaces the
/// `i`-th part by the parts of `β`.
pub fn ds_check_e<S: Field>(h: &QSym<S>) -> Result<DsReport<S>> {
    ds_check(h, |m, alpha, i| {
        let parts = alpha.parts();
        let ai = parts[i];
        let mut value = S::sign(ai) * m.coeff(alpha);
        for beta in compositions_of(ai) {
            let mut g = parts[..i].to_vec();
            g.extend_from_slice(beta.parts());
            g.extend_from_slice(&parts[i + 1..]);
            value = value - S::sign(beta.len()) * m.coeff(&Composition::new(g));
        }
        value
    })
}

/// `B_{α,i}(h) = Σ_{j=0}^{a_i} (-1)^j f_{(a_1, ..., j, a_i - j, ..., a_k)}(h)`,
/// zero parts omitted.
pub fn ds_check_b<S: Field>(h: &QSym<S>) -> Result<DsReport<S>> {
    ds_check(h, |m, alpha, i| {
        let parts = alpha.parts();
        let ai = parts[i];
        let mut value = S::zero();
        for j in 0..=ai {
            let mut g = parts[..i].to_vec();
            g.push(j);
            g.push(ai - j);
            g.extend_from_slice(&parts[i + 1..]);
            value = value + S::sign(j) * m.coeff(&Composition::omitting_zeros(g));
        }
        value
    })
}

pub fn ds_check_form<S: Field>(h: &QSym<S>, form: DsForm) -> Result<DsReport<S>> {
    match form {
        DsForm::E => ds_check_e(h),
        DsForm::B => ds_check_b(h),
    }
}

/// `η_β = Σ_{α ≤ β} 2^{k(α)} M_α` for `β` with odd parts.
pub fn eta_basis<S: Field>(beta: &Composition) -> Result<QSym<S>> {
    if !beta.is_odd() {
        return Err(Error::NotOdd(beta.to_string()));
    }
    Ok(QSym::from_m(coarsenings(beta).into_iter().map(|a| {
        let c = S::from_int(1 << a.len());
        (a, c)
    }).collect()))
}

/// `η_λ = Σ_{s(α) = λ} η_α` for an odd partition `λ`.
pub fn eta_partition<S: Field>(lambda: &Partition) -> Result<QSym<S>> {
    if !lambda.is_odd() {
        return Err(Error::NotOdd(lambda.to_string()));
    }
    let mut out = QSym::zero();
    for alpha in lambda.rearrangements() {
        out = &out + &eta_basis(&alpha)?;
    }
    Ok(out)
}

/// `{M_α : α ⊨ n, every part even}`.
pub fn even_basis<S: Field>(n: usize) -> Vec<QSym<S>> {
    even_compositions_of(n).into_iter().map(QSym::m).collect()
}

fn m_vector<S: Field>(x: &QSym<S>, index: &[Composition]) -> Vec<S> {
    let m = x.m_terms();
    index.iter().map(|a| m.coeff(a)).collect()
}

/// Coordinates of a homogeneous `h` against `{η_β}` (odd `β`, `|β| = deg h`),
/// or `None` when `h` lies outside their span.
pub fn odd_projection_coords<S: Field>(h: &QSym<S>) -> Result<Option<Vec<(Composition, S)>>> {
    let Some(n) = h.m_terms().homogeneous_degree()? else {
        return Ok(Some(Vec::new()));
    };
    let index = compositions_of(n);
    let odd = odd_compositions_of(n);
    let columns: Vec<Vec<S>> = odd.iter().map(|b| m_vector(&eta_basis(b).expect("odd"), &index)).collect();
    Ok(linalg::solve(&columns, &m_vector(h, &index)).map(|x| odd.into_iter().zip(x).collect()))
}

/// Whether `h` lies in the span of `vectors` (all homogeneous of degree `n`).
pub fn in_span<S: Field>(vectors: &[QSym<S>], h: &QSym<S>, n: usize) -> bool {
    let index = compositions_of(n);
    let columns: Vec<Vec<S>> = vectors.iter().map(|v| m_vector(v, &index)).collect();
    linalg::solve(&columns, &m_vector(h, &index)).is_some()
}

/// Rank of a family of degree-`n` QSym elements.
pub fn span_rank<S: Field>(vectors: &[QSym<S>], n: usize) -> usize {
    let index = compositions_of(n);
    let rows: Vec<Vec<S>> = vectors.iter().map(|v| m_vector(v, &index)).collect();
    linalg::rank(&rows)
}

/// `(ν_S)_n = Σ_{i=0}^{n} e_i h_{n-i}`, in the `m` basis.
pub fn schur_q_component<S: Field>(n: usize) -> Sym<S> {
    let mut out = Sym::zero();
    for i in 0..=n {
        let e = Sym::<S>::e(Partition::new(if i == 0 { vec![] } else { vec![i] }));
        let h = Sym::<S>::h(Partition::new(if i == n { vec![] } else { vec![n - i] }));
        out = &out + &e.product(&h);
    }
    out.to_m()
}

/// `({p_λ}, {η_λ})` over odd partitions `λ ⊢ n`, as QSym elements.
pub fn odd_sym_bases<S: Field>(n: usize) -> (Vec<QSym<S>>, Vec<QSym<S>>) {
    let odd: Vec<Partition> = partitions_of(n).into_iter().filter(Partition::is_odd).collect();
    let p = odd.iter().map(|l| Sym::<S>::p(l.clone()).to_qsym()).collect();
    let eta = odd.iter().map(|l| eta_partition(l).expect("odd")).collect();
    (p, eta)
}

/// `({p_λ}, {m_λ})` over even partitions `λ ⊢ n`, as QSym elements.
pub fn even_sym_bases<S: Field>(n: usize) -> (Vec<QSym<S>>, Vec<QSym<S>>) {
    let even: Vec<Partition> = partitions_of(n).into_iter().filter(Partition::is_even).collect();
    let p = even.iter().map(|l| Sym::<S>::p(l.clone()).to_qsym()).collect();
    let m = even.iter().map(|l| Sym::<S>::m(l.clone()).to_qsym()).collect();
    (p, m)
}

/// Read a Sym functional's degree-`n` component as a symmetric function via
/// `h*_λ ↔ m_λ`: `Σ_λ f(h_λ) m_λ`.
pub fn sym_functional_as_element<S: Field>(f: &Functional<crate::hopf::SymAlgebra, S>, n: usize) -> Sym<S> {
    let mut out = Element::zero();
    for lambda in partitions_of(n) {
        let h = Sym::<S>::h(lambda.clone()).m_terms();
        out.add_term(lambda, f.eval_element(&h));
    }
    Sym::new(SymBasis::Monomial, out)
}

/// The Hilbert series this crate can expand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HilbertSeries {
    /// Odd subalgebra of QSym: `(1 - x²)/(1 - x - x²)`.
    OQ,
    /// Odd subalgebra of Sym: `Π 1/(1 - x^{2n+1})`.
    OS,
    /// Odd subalgebra of NSym: `Π 1/(1 - x^n)^{a_n}` with `a_n` from Lyndon counts.
    ON,
    /// Odd subalgebra of the Malvenuto–Reutenauer algebra.
    OSigma,
    /// Odd subalgebra of the Loday–Ronco algebra.
    OY,
    /// Even subalgebra of QSym: `(1 - x²)/(1 - 2x²)`.
    PiPlus,
    /// Odd subalgebra of QSym, same series as `OQ`.
    PiMinus,
    /// QSym itself: `(1 - x)/(1 - 2x)`.
    QSym,
}

impl FromStr for HilbertSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "OQ" => HilbertSeries::OQ,
            "OS" => HilbertSeries::OS,
            "ON" => HilbertSeries::ON,
            "OSigma" => HilbertSeries::OSigma,
            "OY" => HilbertSeries::OY,
            "PiPlus" => HilbertSeries::PiPlus,
            "PiMinus" => HilbertSeries::PiMinus,
            "QSym" => HilbertSeries::QSym,
            other => return Err(Error::UnknownName(other.into())),
        })
    }
}

fn poly<S: Field>(coeffs: &[i64], order: usize) -> TruncatedSeries<S> {
    TruncatedSeries::new(coeffs.iter().map(|&c| S::from_int(c)).collect(), order)
}

/// `Π_k (1 - x^k)^{-e_k}` truncated at `order`.
fn euler_product<S: Field>(order: usize, exponent: impl Fn(usize) -> i64) -> Result<TruncatedSeries<S>> {
    let mut acc = TruncatedSeries::one(order);
    for k in 1..=order {
        let e = exponent(k);
        if e == 0 {
            continue;
        }
        let mut factor = TruncatedSeries::one(order);
        factor = factor.sub(&TruncatedSeries::monomial(S::one(), k, order))?;
        acc = acc.mul(&factor.pow(-e)?)?;
    }
    Ok(acc)
}

impl HilbertSeries {
    pub fn expand<S: Field>(self, order: usize) -> Result<TruncatedSeries<S>> {
        match self {
            HilbertSeries::OQ | HilbertSeries::PiMinus => poly(&[1, 0, -1], order).div(&poly(&[1, -1, -1], order)),
            HilbertSeries::PiPlus => poly(&[1, 0, -1], order).div(&poly(&[1, 0, -2], order)),
            HilbertSeries::QSym => poly(&[1, -1], order).div(&poly(&[1, -2], order)),
            HilbertSeries::OS => euler_product(order, |k| (k % 2) as i64),
            HilbertSeries::ON => euler_product(order, |k| {
                let l = lyndon_count(k) as i64;
                if k % 2 == 1 {
                    l
                } else {
                    l - 1
                }
            }),
            HilbertSeries::OSigma => {
                // 1/OΣ = 1/(Σ n! x^n) + x²/(1 - x²)
                let mut fact = S::one();
                let sigma = TruncatedSeries::from_fn(order, |n| {
                    if n > 0 {
                        fact = fact.clone() * S::from_int(n as i64);
                    }
                    fact.clone()
                });
                let tail = TruncatedSeries::monomial(S::one(), 2, order).div(&poly(&[1, 0, -1], order))?;
                sigma.reciprocal()?.add(&tail)?.reciprocal()
            }
            HilbertSeries::OY => {
                // 1/OY = 1/YSym - 1/QSym + 1/OQ, with YSym the Catalan series.
                let y = catalan_series::<S>(order);
                let q = HilbertSeries::QSym.expand::<S>(order)?;
                let oq = HilbertSeries::OQ.expand::<S>(order)?;
                y.reciprocal()?.sub(&q.reciprocal()?)?.add(&oq.reciprocal()?)?.reciprocal()
            }
        }
    }
}

/// `Σ C_n x^n` with Catalan numbers `C_n`.
pub fn catalan_series<S: Field>(order: usize) -> TruncatedSeries<S> {
    let mut c = vec![S::one()];
    for n in 1..=order {
        let mut acc = S::zero();
        for i in 0..n {
            acc = acc + c[i].clone() * c[n - 1 - i].clone();
        }
        c.push(acc);
    }
    TruncatedSeries::new(c, order)
}

/// One line of [`hilbert_report`].
#[derive(Clone, Debug)]
pub struct HilbertRow<S> {
    pub name: &'static str,
    pub series: TruncatedSeries<S>,
    /// Dimensions computed from explicit bases, where available.
    pub computed: Option<Vec<u64>>,
}

impl<S: Field> HilbertRow<S> {
    pub fn consistent(&self) -> bool {
        self.computed.as_ref().is_none_or(|dims| {
            dims.iter().enumerate().all(|(n, &d)| self.series.coeff(n) == S::from_int(d as i64))
        })
    }
}

/// All supported series to `x^order` (`order ≤ 16`), with basis counts for
/// `Π₊`, `Π₋`, and the odd subalgebra of Sym.
pub fn hilbert_report<S: Field>(order: usize) -> Result<Vec<HilbertRow<S>>> {
    if order > 16 {
        return Err(Error::DegreeBound { degree: order, bound: 16 });
    }
    let odd_dims: Vec<u64> = (0..=order).map(count_odd_compositions).collect();
    let even_dims: Vec<u64> = (0..=order).map(count_even_compositions).collect();
    let odd_partitions: Vec<u64> =
        (0..=order).map(|n| partitions_of(n).iter().filter(|p| p.is_odd()).count() as u64).collect();
    let rows = [
        ("OQ", HilbertSeries::OQ, Some(odd_dims.clone())),
        ("PiMinus", HilbertSeries::PiMinus, Some(odd_dims)),
        ("PiPlus", HilbertSeries::PiPlus, Some(even_dims)),
        ("OS", HilbertSeries::OS, Some(odd_partitions)),
        ("ON", HilbertSeries::ON, None),
        ("OSigma", HilbertSeries::OSigma, None),
        ("OY", HilbertSeries::OY, None),
    ];
    rows.into_iter()
        .map(|(name, s, computed)| Ok(HilbertRow { name, series: s.expand(order)?, computed }))
        .collect()
}

/// `1/QSym - (1/Π₊ + 1/Π₋ - 1)`, which vanishes identically.
pub fn qsym_split_identity<S: Field>(order: usize) -> Result<TruncatedSeries<S>> {
    let q = HilbertSeries::QSym.expand::<S>(order)?.reciprocal()?;
    let p = HilbertSeries::PiPlus.expand::<S>(order)?.reciprocal()?;
    let m = HilbertSeries::PiMinus.expand::<S>(order)?.reciprocal()?;
    q.sub(&p.add(&m)?.sub(&TruncatedSeries::one(order))?)
}

/// Degree of a homogeneous QSym element, `None` for zero.
pub fn homogeneous_degree<S: Field>(x: &QSym<S>) -> Result<Option<usize>> {
    x.m_terms().homogeneous_degree()
}

/// Whether a QSym element has all terms in degree `n` (or is zero).
pub fn is_degree<S: Field>(x: &QSym<S>, n: usize) -> bool {
    x.m_terms().indices().all(|a| a.degree() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::characters::zeta_qsym;
    use crate::{comp, Rational};

    type Q = QSym<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn m(terms: &[(i64, Composition)]) -> Q {
        Q::from_m(terms.iter().map(|(c, a)| (a.clone(), r(*c))).collect())
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_basis::<Rational>(&comp![1]).unwrap(), m(&[(2, comp![1])]));
        assert_eq!(eta_basis::<Rational>(&comp![1, 1]).unwrap(), m(&[(4, comp![1, 1]), (2, comp![2])]));
        assert_eq!(
            eta_basis::<Rational>(&comp![1, 1, 1]).unwrap(),
            m(&[(8, comp![1, 1, 1]), (4, comp![2, 1]), (4, comp![1, 2]), (2, comp![3])])
        );
        assert!(eta_basis::<Rational>(&comp![2]).is_err());
    }

    #[test]
    fn ds_examples() {
        let b2 = m(&[(1, comp![2]), (2, comp![1, 1])]);
        assert!(ds_check_e(&b2).unwrap().passed());
        assert!(ds_check_b(&b2).unwrap().passed());
        let c3 = m(&[(1, comp![2]), (1, comp![1, 1])]);
        let rb = ds_check_b(&c3).unwrap();
        assert_eq!(rb.value_at(&comp![2], 1), r(1));
        assert!(!ds_check_e(&c3).unwrap().passed());
        assert!(ds_check_e(&Q::zero()).unwrap().passed());
        assert_eq!(rb.to_json(), r#"[{"alpha":[2],"i":1,"value":"1"}]"#);
    }

    #[test]
    fn membership_examples() {
        let z = zeta_qsym::<Rational>();
        let phi = z.bar();
        let psi = z.inverse();
        let eta = eta_basis::<Rational>(&comp![1, 1]).unwrap();
        assert!(generic_membership(eta.terms(), phi.functional(), psi.functional()).unwrap());
        assert!(!generic_membership(Q::m(comp![2]).terms(), phi.functional(), psi.functional()).unwrap());
        assert!(generic_membership(Q::one().terms(), phi.functional(), psi.functional()).unwrap());
    }

    #[test]
    fn projection_coordinates() {
        let b2 = m(&[(1, comp![2]), (2, comp![1, 1])]);
        let c = odd_projection_coords(&b2).unwrap().unwrap();
        assert_eq!(c, vec![(comp![1, 1], Rational::new(1.into(), 2.into()))]);
        assert!(odd_projection_coords(&Q::m(comp![2])).unwrap().is_none());
        assert_eq!(even_basis::<Rational>(4), vec![Q::m(comp![4]), Q::m(comp![2, 2])]);
    }

    #[test]
    fn schur_q() {
        let q1 = schur_q_component::<Rational>(1);
        assert_eq!(q1, Sym::new(SymBasis::Monomial, Element::term(Partition::new(vec![1]), r(2))));
        let q2 = schur_q_component::<Rational>(2);
        assert_eq!(q2.coeff(&Partition::new(vec![2])), r(2));
        assert_eq!(q2.coeff(&Partition::new(vec![1, 1])), r(4));
        assert_eq!(schur_q_component::<Rational>(0), Sym::one());
    }

    #[test]
    fn hilbert_values() {
        let on: Vec<String> = HilbertSeries::ON.expand::<Rational>(7).unwrap().coeffs().iter().map(|c| c.to_string()).collect();
        assert_eq!(on, ["1", "1", "1", "3", "5", "11", "22", "44"]);
        let os = HilbertSeries::OSigma.expand::<Rational>(6).unwrap();
        assert_eq!(os.to_string(), "1,1,1,4,19,105,660");
        assert_eq!(HilbertSeries::PiMinus.expand::<Rational>(8).unwrap().to_string(), "1,1,1,2,3,5,8,13,21");
        assert!(qsym_split_identity::<Rational>(12).unwrap().is_zero());
        for row in hilbert_report::<Rational>(12).unwrap() {
            assert!(row.consistent(), "{}", row.name);
        }
    }

    #[test]
    fn odd_sym_dimensions() {
        let (p, eta) = odd_sym_bases::<Rational>(2);
        assert_eq!((p.len(), eta.len()), (1, 1));
        assert_eq!(odd_sym_bases::<Rational>(3).0.len(), 2);
    }
}
