//! Polynomial-coefficient differential operators on `R^n` in normal order
//! (all multiplications left of all derivatives), and the Schrodinger-type
//! representations sending enveloping-algebra elements to such operators.
//!
//! Composition uses the Weyl-algebra rewrite `[d_j, x_j] = 1`:
//!
//! ```text
//! d^q x^r = sum_k k! C(q,k) C(r,k) x^{r-k} d^{q-k}     (per coordinate)
//! ```
//!
//! Generator images for the representation parameter `lambda != 0`:
//!
//! * `PaperLiteral`:  `X_j -> |l|^{1/2} d_j`, `Y_j -> i sgn(l) |l|^{1/2} x_j`,
//!   `T -> i l`. As printed this is *not* a Lie homomorphism for the bracket
//!   `[Y_j, X_j] = 4T` (the commutator comes out `-i l` instead of `4 i l`);
//!   it is kept for auditability.
//! * `Homomorphic` (default): same `X`, `T`, with
//!   `Y_j -> -4 i sgn(l) |l|^{1/2} x_j`, the unique multiple of `x_j` making
//!   every bracket exact.

use crate::algebra::AlgebraElement;
use crate::error::DomainError;
use crate::group::GroupPoint;
use crate::scalar::{crat_to_c64, C64};
use num_complex::Complex;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// `(x-exponents, d-exponents)` of one normal-ordered term.
pub type WeylKey = (Vec<u32>, Vec<u32>);

#[derive(Debug, Clone, PartialEq)]
pub struct WeylOperator {
    n: usize,
    terms: BTreeMap<WeylKey, C64>,
}

impl WeylOperator {
    pub fn zero(n: usize) -> Self {
        WeylOperator {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::monomial(n, &vec![0; n], &vec![0; n], Complex::new(1.0, 0.0))
    }

    pub fn scalar(n: usize, c: C64) -> Self {
        Self::monomial(n, &vec![0; n], &vec![0; n], c)
    }

    pub fn monomial(n: usize, xe: &[u32], de: &[u32], c: C64) -> Self {
        assert_eq!(xe.len(), n);
        assert_eq!(de.len(), n);
        let mut op = Self::zero(n);
        op.insert((xe.to_vec(), de.to_vec()), c);
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<WeylKey, C64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: WeylKey, c: C64) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = *o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: C64) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Normal-ordered composition `self . other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for ((p, q), cl) in &self.terms {
            for ((r, s), cr) in &other.terms {
                // move d^q across x^r coordinate by coordinate
                let kmax: Vec<u32> = q.iter().zip(r).map(|(a, b)| *a.min(b)).collect();
                let mut k = vec![0u32; n];
                loop {
                    let mut fac = 1.0f64;
                    for j in 0..n {
                        fac *= falling_product(q[j], r[j], k[j]);
                    }
                    let xe: Vec<u32> = (0..n).map(|j| p[j] + r[j] - k[j]).collect();
                    let de: Vec<u32> = (0..n).map(|j| q[j] - k[j] + s[j]).collect();
                    out.insert((xe, de), cl * cr * fac);
                    // odometer over k <= kmax
                    let mut j = 0;
                    loop {
                        if j == n {
                            break;
                        }
                        if k[j] < kmax[j] {
                            k[j] += 1;
                            break;
                        }
                        k[j] = 0;
                        j += 1;
                    }
                    if j == n {
                        break;
                    }
                }
            }
        }
        out.prune();
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// Maximum of `|x-degree| + |d-degree|` over the terms; the band width of
    /// the operator in any oscillator ladder basis.
    pub fn total_order(&self) -> u32 {
        self.terms
            .keys()
            .map(|(p, q)| p.iter().sum::<u32>() + q.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Maximum derivative order.
    pub fn derivative_order(&self) -> u32 {
        self.terms
            .keys()
            .map(|(_, q)| q.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute coefficient difference against another operator.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        let mut dev: f64 = 0.0;
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).cloned().collect();
        for k in keys {
            let a = self.terms.get(&k).copied().unwrap_or_else(|| Complex::new(0.0, 0.0));
            let b = other.terms.get(&k).copied().unwrap_or_else(|| Complex::new(0.0, 0.0));
            dev = dev.max((a - b).norm());
        }
        dev
    }

    /// If the operator is `c * identity`, return `c`.
    pub fn as_scalar(&self) -> Option<C64> {
        if self.terms.is_empty() {
            return Some(Complex::new(0.0, 0.0));
        }
        if self.terms.len() == 1 {
            let ((p, q), c) = self.terms.iter().next().unwrap();
            if p.iter().all(|&e| e == 0) && q.iter().all(|&e| e == 0) {
                return Some(*c);
            }
        }
        None
    }
}

fn falling_product(q: u32, r: u32, k: u32) -> f64 {
    // k! * C(q, k) * C(r, k) = prod_{i<k} (q - i)(r - i)/(i + 1)
    let mut acc = 1.0f64;
    for i in 0..k {
        acc *= (q - i) as f64 * (r - i) as f64 / (i + 1) as f64;
    }
    acc
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, q), c) in &self.terms {
            let mut parts = Vec::new();
            for (j, &e) in p.iter().enumerate() {
                if e == 1 {
                    parts.push(format!("x{}", j + 1));
                } else if e > 1 {
                    parts.push(format!("x{}^{}", j + 1, e));
                }
            }
            for (j, &e) in q.iter().enumerate() {
                if e == 1 {
                    parts.push(format!("d{}", j + 1));
                } else if e > 1 {
                    parts.push(format!("d{}^{}", j + 1, e));
                }
            }
            let cs = fmt_c64(*c);
            let s = if parts.is_empty() {
                cs
            } else if *c == Complex::new(1.0, 0.0) {
                parts.join("*")
            } else if *c == Complex::new(-1.0, 0.0) {
                format!("-{}", parts.join("*"))
            } else {
                format!("{}*{}", cs, parts.join("*"))
            };
            if first {
                write!(f, "{s}")?;
                first = false;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
        }
        Ok(())
    }
}

pub fn fmt_c64(c: C64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("({} - {}i)", c.re, -c.im)
    } else {
        format!("({} + {}i)", c.re, c.im)
    }
}

/// Nonzero representation parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepParameter(f64);

impl RepParameter {
    pub fn new(lambda: f64) -> Result<Self, DomainError> {
        if lambda == 0.0 || !lambda.is_finite() {
            return Err(DomainError::ZeroLambda);
        }
        Ok(RepParameter(lambda))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn sign(&self) -> f64 {
        self.0.signum()
    }

    pub fn sqrt_abs(&self) -> f64 {
        self.0.abs().sqrt()
    }
}

/// Generator-image convention for the infinite-dimensional representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    PaperLiteral,
    #[default]
    Homomorphic,
}

fn generator_image(g: crate::algebra::Generator, lam: RepParameter, conv: Convention, n: usize) -> WeylOperator {
    use crate::algebra::Generator as G;
    let rt = lam.sqrt_abs();
    match g {
        G::X(j) => {
            let mut de = vec![0u32; n];
            de[j - 1] = 1;
            WeylOperator::monomial(n, &vec![0; n], &de, Complex::new(rt, 0.0))
        }
        G::Y(j) => {
            let mut xe = vec![0u32; n];
            xe[j - 1] = 1;
            let c = match conv {
                Convention::PaperLiteral => Complex::new(0.0, lam.sign() * rt),
                Convention::Homomorphic => Complex::new(0.0, -4.0 * lam.sign() * rt),
            };
            WeylOperator::monomial(n, &xe, &vec![0; n], c)
        }
        G::T => WeylOperator::scalar(n, Complex::new(0.0, lam.value())),
    }
}

/// Map an algebra element to its normal-ordered operator image on `R^n`.
pub fn represent(p: &AlgebraElement, lam: RepParameter, conv: Convention) -> WeylOperator {
    let n = p.n();
    let mut out = WeylOperator::zero(n);
    for (mon, coeff) in p.terms() {
        let mut acc = WeylOperator::identity(n);
        for g in mon.to_word() {
            acc = acc.compose(&generator_image(g, lam, conv, n));
        }
        out = out.add(&acc.scale(crat_to_c64(coeff)));
    }
    out
}

/// Scalar value of `p` in the finite-dimensional representation indexed by
/// `(a, b)`: `X_j -> i a_j`, `Y_j -> i b_j`, `T -> 0`.
pub fn finite_dim_rep(p: &AlgebraElement, a: &[f64], b: &[f64]) -> Result<C64, DomainError> {
    let n = p.n();
    if a.len() != n || b.len() != n {
        return Err(DomainError::DimensionMismatch {
            left: a.len().max(b.len()),
            right: n,
        });
    }
    let mut acc = Complex::new(0.0, 0.0);
    for (mon, coeff) in p.terms() {
        if mon.c > 0 {
            continue; // T maps to zero
        }
        let mut v = crat_to_c64(coeff);
        for j in 0..n {
            v *= Complex::new(0.0, a[j]).powu(mon.a[j]);
            v *= Complex::new(0.0, b[j]).powu(mon.b[j]);
        }
        acc += v;
    }
    Ok(acc)
}

/// One-dimensional character `chi_w(z, t) = exp(-i Re<w, z>)`, with the
/// Hermitian pairing `<w, z> = sum_j w_j conj(z_j)`.
pub fn character(w: &[C64], g: &GroupPoint) -> Result<C64, DomainError> {
    if w.len() != g.n() {
        return Err(DomainError::DimensionMismatch {
            left: w.len(),
            right: g.n(),
        });
    }
    let (z, _t) = g.to_f64();
    let mut re = 0.0;
    for (wj, zj) in w.iter().zip(&z) {
        re += (wj * zj.conj()).re;
    }
    Ok(Complex::new(0.0, -re).exp())
}

/// Coefficient-level homogeneity scaling report: compares
/// `represent(P, lambda)` against `|lambda|^{alpha/2} represent(P, sgn lambda)`.
#[derive(Debug, Clone)]
pub struct ScalingReport {
    pub degree: u32,
    pub lambda: f64,
    pub max_deviation: f64,
    pub exact: bool,
}

pub fn scaling_check(
    p: &AlgebraElement,
    lam: RepParameter,
    conv: Convention,
) -> Result<ScalingReport, DomainError> {
    let degree = p
        .homogeneous_degree()?
        .ok_or(DomainError::NotHomogeneous)?;
    let reference = RepParameter::new(lam.sign())?;
    let lhs = represent(p, lam, conv);
    let factor = lam.value().abs().powf(degree as f64 / 2.0);
    let rhs = represent(p, reference, conv).scale(Complex::new(factor, 0.0));
    let dev = lhs.max_deviation(&rhs);
    Ok(ScalingReport {
        degree,
        lambda: lam.value(),
        max_deviation: dev,
        exact: dev == 0.0,
    })
}

/// Bracket audit for a convention: reports `[pi(Y_1), pi(X_1)]` against
/// `4 pi(T)` and, when both are scalars, their ratio.
#[derive(Debug, Clone)]
pub struct ConventionAudit {
    pub convention: Convention,
    pub lambda: f64,
    pub commutator_value: C64,
    pub four_pi_t: C64,
    pub mismatch_ratio: Option<C64>,
    pub homomorphic: bool,
}

pub fn convention_audit(lam: RepParameter, conv: Convention) -> ConventionAudit {
    let n = 1;
    use crate::algebra::Generator as G;
    let px = generator_image(G::X(1), lam, conv, n);
    let py = generator_image(G::Y(1), lam, conv, n);
    let pt = generator_image(G::T, lam, conv, n);
    let comm = py.commutator(&px);
    let target = pt.scale(Complex::new(4.0, 0.0));
    let cv = comm.as_scalar().unwrap_or(Complex::new(f64::NAN, 0.0));
    let tv = target.as_scalar().unwrap_or(Complex::new(f64::NAN, 0.0));
    let ratio = if tv.is_zero() { None } else { Some(cv / tv) };
    ConventionAudit {
        convention: conv,
        lambda: lam.value(),
        commutator_value: cv,
        four_pi_t: tv,
        mismatch_ratio: ratio,
        homomorphic: comm.sub(&target).is_zero(),
    }
}
