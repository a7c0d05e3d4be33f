//! Membership in `Int(A)`, in the integral-valued ring on explicit element
//! sets, and in pullbacks `Z[X] + μ(X)·Q[X]`, plus the monic certificates
//! that make integral-valued polynomials integral over those pullbacks.
//!
//! # Deciding `f(A) ⊆ A` with finitely many evaluations
//!
//! Write `f = g/d` with `g ∈ Z[X]`. Then `f(a) ∈ A` iff every coordinate of
//! `g(a)` is divisible by `d`, and by CRT iff it is divisible by each prime
//! power `p^e` exactly dividing `d`. For `x ∈ A`, `g(a + p^e x) - g(a)` lies
//! in `p^e A`: expanding `(a + p^e x)^k` gives `a^k` plus words in `a` and
//! `p^e x`, each containing at least one factor `p^e`. The words do not
//! commute in general, but the scalar `p^e` is central, so the argument does
//! not need commutativity. Hence it suffices to test the `p^(e·r)` coordinate
//! box representatives of `A / p^e A`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{IntPolynomial, RatPolynomial};
use crate::matrix::SpectrumPoly;
use crate::order::{AlgebraElement, Order, ResidueBox};
use crate::par::Strategy;

/// Degree cap for [`certificate_phi`]; beyond it the product is impractical.
pub const MAX_CERTIFICATE_DEGREE: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No,
    /// Every element checked passed, but the question was about an
    /// infinite set and only a finite sample was examined.
    UnknownBounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Counterexample(AlgebraElement),
    Certificate(IntPolynomial),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub checked_count: u64,
}

impl MembershipVerdict {
    fn yes(checked_count: u64) -> Self {
        MembershipVerdict { verdict: Verdict::Yes, witness: None, checked_count }
    }

    fn no(a: AlgebraElement, checked_count: u64) -> Self {
        MembershipVerdict { verdict: Verdict::No, witness: Some(Witness::Counterexample(a)), checked_count }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub fn counterexample(&self) -> Option<&AlgebraElement> {
        match &self.witness {
            Some(Witness::Counterexample(a)) => Some(a),
            _ => None,
        }
    }
}

/// Prime powers `p^e` exactly dividing `n > 0`, by trial division.
pub fn prime_power_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            let mut q = BigInt::one();
            while n.is_multiple_of(&p) {
                n /= &p;
                q *= &p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

pub fn member_int(f: &RatPolynomial, order: &Arc<Order>) -> Result<MembershipVerdict> {
    member_int_with(f, order, Strategy::default())
}

/// Decides `f(A) ⊆ A` exactly by checking residues modulo each prime power
/// of the denominator. On failure the witness is the first failing residue
/// representative, which lies in `A` and has `f(a) ∉ A`.
pub fn member_int_with(f: &RatPolynomial, order: &Arc<Order>, strategy: Strategy) -> Result<MembershipVerdict> {
    let (g, d) = f.normalize();
    if d.is_one() {
        return Ok(MembershipVerdict::yes(0));
    }
    if f.is_constant() {
        let zero = AlgebraElement::zero(order);
        return Ok(if zero.eval(f).is_in_order() {
            MembershipVerdict::yes(1)
        } else {
            MembershipVerdict::no(zero, 1)
        });
    }
    let mut checked = 0u64;
    for q in prime_power_divisors(&d) {
        let modulus = q
            .to_u64()
            .ok_or_else(|| Error::InvalidParameter(format!("prime power {q} too large to enumerate")))?;
        let residues = ResidueBox::new(order, modulus)?;
        let g_mod = IntPolynomial::new(g.coeffs().iter().map(|c| c.mod_floor(&q)).collect());
        let hit = strategy.find_first(residues.len(), |i| {
            let value = order.eval_mod(&g_mod, &residues.coords_at(i), &q);
            value.iter().any(|c| !c.is_zero()).then_some(())
        });
        match hit {
            Some((i, ())) => return Ok(MembershipVerdict::no(residues.element_at(i), checked + i + 1)),
            None => checked += residues.len(),
        }
    }
    Ok(MembershipVerdict::yes(checked))
}

/// Whether `f(a)` is integral over Z, decided on spectra: the roots of `μ_a`
/// are mapped through `f` and the image set must have an integral polynomial.
pub fn value_is_integral(f: &RatPolynomial, a: &AlgebraElement) -> bool {
    SpectrumPoly::from_polynomial(&a.minimal_polynomial())
        .and_then(|s| s.image(f))
        .map(|s| s.is_integral())
        .expect("minimal polynomials have positive degree")
}

fn check_one_order<'a>(elements: &'a [AlgebraElement], what: &'static str) -> Result<&'a Arc<Order>> {
    let first = elements.first().ok_or(Error::EmptyInput(what))?;
    if elements.iter().any(|a| a.order() != first.order()) {
        return Err(Error::OrderMismatch);
    }
    Ok(first.order())
}

pub fn member_intval_on(f: &RatPolynomial, elements: &[AlgebraElement]) -> Result<MembershipVerdict> {
    member_intval_on_with(f, elements, Strategy::default())
}

/// `f(a)` integral for every listed `a`. The answer concerns this finite
/// set only.
pub fn member_intval_on_with(
    f: &RatPolynomial,
    elements: &[AlgebraElement],
    strategy: Strategy,
) -> Result<MembershipVerdict> {
    check_one_order(elements, "element list")?;
    let hit = strategy.find_first_in(elements, |a| (!value_is_integral(f, a)).then_some(()));
    Ok(match hit {
        Some((i, ())) => MembershipVerdict::no(elements[i].clone(), i as u64 + 1),
        None => MembershipVerdict::yes(elements.len() as u64),
    })
}

/// Like [`member_intval_on`], but the elements stand for a sample of the
/// whole order: a pass is reported as [`Verdict::UnknownBounded`].
pub fn member_intval_sampled(f: &RatPolynomial, sample: &[AlgebraElement]) -> Result<MembershipVerdict> {
    let mut v = member_intval_on(f, sample)?;
    if v.verdict == Verdict::Yes {
        v.verdict = Verdict::UnknownBounded;
    }
    Ok(v)
}

/// `f ∈ Z[X] + μ(X)·Q[X]` for monic `μ ∈ Z[X]`: the remainder of `f`
/// modulo `μ` must be integral.
pub fn pullback_member(f: &RatPolynomial, mu: &IntPolynomial) -> Result<bool> {
    Ok(f.rem_monic(&mu.to_rational())?.has_integer_coeffs())
}

fn integral_minpoly(a: &AlgebraElement) -> Result<IntPolynomial> {
    a.minimal_polynomial()
        .to_integer()
        .ok_or_else(|| Error::NotIntegral(a.to_string()))
}

fn check_sample_order(order: &Arc<Order>, sample: &[AlgebraElement]) -> Result<()> {
    if sample.iter().any(|a| a.order() != order) {
        return Err(Error::OrderMismatch);
    }
    Ok(())
}

/// For `f = g/d` integral-valued on the sample and `h ∈ Z[X]`, checks that
/// `d^(n-1)·h(f(X))` lies in `Z[X] + μ_a(X)·Q[X]` for every sampled `a`,
/// where `n` is the order's spectral degree.
pub fn scaling_lemma_check(
    f: &RatPolynomial,
    h: &IntPolynomial,
    order: &Arc<Order>,
    sample: &[AlgebraElement],
) -> Result<bool> {
    check_sample_order(order, sample)?;
    if !member_intval_on(f, sample)?.is_yes() {
        return Err(Error::Precondition("f is not integral-valued on the sample".into()));
    }
    let minpolys = sample.iter().map(integral_minpoly).collect::<Result<Vec<_>>>()?;
    let (_, d) = f.normalize();
    let scale = num_rational::BigRational::from_integer(Pow::pow(&d, order.spectral_degree() as u32 - 1));
    let composite = h.to_rational().compose(f).scale(&scale);
    let results = Strategy::default().map(&minpolys, |mu| pullback_member(&composite, mu));
    results.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}

/// Monic polynomials of degree `k` with coefficients in `[0, m)`, in
/// lexicographic order of the coefficient vector (constant term slowest).
pub fn monic_representatives(m: u64, k: usize) -> impl Iterator<Item = IntPolynomial> {
    let count = m.pow(k as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        for c in coeffs[..k].iter_mut().rev() {
            *c = BigInt::from(idx % m);
            idx /= m;
        }
        coeffs[k] = BigInt::one();
        IntPolynomial::new(coeffs)
    })
}

/// Monic `φ ∈ Z[X]` with `φ(f(X))` in every pullback `Z[X] + μ_a(X)·Q[X]`,
/// `a ∈ A`, whenever `f` is integral-valued on `A`.
///
/// `φ` is the product of all monic polynomials of degree `1..=n` with
/// coefficients in `[0, m)`, `m = d^(2(n-1))`. Every `μ_{f(a)}` is congruent
/// modulo `m` to one of these factors, so no knowledge of which minimal
/// polynomials actually occur is needed.
pub fn certificate_phi(f: &RatPolynomial, order: &Order) -> Result<IntPolynomial> {
    let (_, d) = f.normalize();
    let n = order.spectral_degree();
    let m_big: BigInt = Pow::pow(&d, 2 * (n as u32 - 1));
    let too_large = || Error::CertificateTooLarge(u64::MAX, MAX_CERTIFICATE_DEGREE);
    let m = m_big.to_u64().ok_or_else(too_large)?;
    let mut degree = 0u64;
    for k in 1..=n as u32 {
        let term = m
            .checked_pow(k)
            .and_then(|c| c.checked_mul(k as u64))
            .ok_or_else(too_large)?;
        degree = degree.checked_add(term).ok_or_else(too_large)?;
    }
    if degree > MAX_CERTIFICATE_DEGREE {
        return Err(Error::CertificateTooLarge(degree, MAX_CERTIFICATE_DEGREE));
    }
    let factors: Vec<IntPolynomial> = (1..=n).flat_map(|k| monic_representatives(m, k)).collect();
    Ok(IntPolynomial::product(factors))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub passed: bool,
    /// Sample elements with integral minimal polynomial that were tested.
    pub checked: usize,
    /// Sample elements skipped because their minimal polynomial is not integral.
    pub skipped: usize,
    pub failure: Option<AlgebraElement>,
}

/// `φ(f(X)) ∈ Z[X] + μ_a(X)·Q[X]` for every sampled `a` with integral `μ_a`.
pub fn verify_certificate(
    phi: &IntPolynomial,
    f: &RatPolynomial,
    order: &Arc<Order>,
    sample: &[AlgebraElement],
) -> Result<bool> {
    certificate_report(phi, f, order, sample, Strategy::default()).map(|c| c.passed)
}

pub fn certificate_report(
    phi: &IntPolynomial,
    f: &RatPolynomial,
    order: &Arc<Order>,
    sample: &[AlgebraElement],
    strategy: Strategy,
) -> Result<CertificateCheck> {
    if !phi.is_monic() {
        return Err(Error::NonMonicDivisor);
    }
    check_sample_order(order, sample)?;
    let composite = phi.to_rational().compose(f);
    let minpolys: Vec<Option<IntPolynomial>> = strategy.map(sample, |a| a.minimal_polynomial().to_integer());
    let tested: Vec<(usize, &IntPolynomial)> =
        minpolys.iter().enumerate().filter_map(|(i, m)| m.as_ref().map(|m| (i, m))).collect();
    let failure = strategy
        .find_first_in(&tested, |(_, mu)| {
            (!pullback_member(&composite, mu).expect("minimal polynomials are monic of positive degree")).then_some(())
        })
        .map(|(i, ())| sample[tested[i].0].clone());
    Ok(CertificateCheck {
        passed: failure.is_none(),
        checked: tested.len(),
        skipped: sample.len() - tested.len(),
        failure,
    })
}

/// Per-element outcome of the inclusion chain
/// `pullback at a ⇒ f(a) ∈ A ⇒ f(a) integral`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRow {
    pub pullback: bool,
    pub in_order: bool,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    /// `f` lies in the pullback of every sampled element.
    pub pullback: bool,
    pub member_int: Verdict,
    pub intval: Verdict,
    pub rows: Vec<ChainRow>,
    pub violations: Vec<String>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates the three memberships of the inclusion chain
/// `∩ (Z[X] + μ_a Q[X]) ⊆ Int(A) ⊆ Int(A, A′)` on a sample of `A` and records
/// every implication that fails. A violation indicates a bug.
pub fn chain_check(f: &RatPolynomial, order: &Arc<Order>, sample: &[AlgebraElement]) -> Result<ChainReport> {
    check_sample_order(order, sample)?;
    check_one_order(sample, "sample")?;
    if let Some(a) = sample.iter().find(|a| !a.is_in_order()) {
        return Err(Error::Precondition(format!("sample element {a} is not in the order")));
    }
    let member = member_int(f, order)?;
    let intval = member_intval_on(f, sample)?;
    let rows: Vec<ChainRow> = Strategy::default()
        .map(sample, |a| -> Result<ChainRow> {
            let mu = integral_minpoly(a)?;
            Ok(ChainRow {
                pullback: pullback_member(f, &mu)?,
                in_order: a.eval(f).is_in_order(),
                integral: value_is_integral(f, a),
            })
        })
        .into_iter()
        .collect::<Result<_>>()?;

    let mut violations = Vec::new();
    for (a, row) in sample.iter().zip(&rows) {
        if row.pullback && !row.in_order {
            violations.push(format!("{a}: f in pullback but f(a) not in A"));
        }
        if row.in_order && !row.integral {
            violations.push(format!("{a}: f(a) in A but not integral"));
        }
        if member.is_yes() && !row.in_order {
            violations.push(format!("{a}: f in Int(A) but f(a) not in A"));
        }
    }
    if member.is_yes() && !intval.is_yes() {
        violations.push("f in Int(A) but not integral-valued on the sample".into());
    }
    Ok(ChainReport {
        pullback: rows.iter().all(|r| r.pullback),
        member_int: member.verdict,
        intval: intval.verdict,
        rows,
        violations,
    })
}
