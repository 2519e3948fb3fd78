//! Exact polynomial functions on `R^{2n+1}` in the real coordinates
//! `(x_1..x_n, y_1..y_n, t)`, with Gaussian-rational coefficients.
//!
//! These are the test functions for the invariance checks: group translations
//! are polynomial maps, so composing with them stays in this class and every
//! identity can be verified with zero error.

use crate::error::DomainError;
use crate::scalar::{crat_one, fmt_crat, fmt_rat, CRat, Rat};
use num_traits::{One, Zero};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent triple `(x-exponents, y-exponents, t-exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VarExponents {
    pub xs: Vec<u32>,
    pub ys: Vec<u32>,
    pub t: u32,
}

impl VarExponents {
    pub fn unit(n: usize) -> Self {
        VarExponents {
            xs: vec![0; n],
            ys: vec![0; n],
            t: 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.xs.iter().sum::<u32>() + self.ys.iter().sum::<u32>() + self.t
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFunction {
    n: usize,
    terms: BTreeMap<VarExponents, CRat>,
}

impl PolyFunction {
    pub fn zero(n: usize) -> Self {
        PolyFunction {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: CRat) -> Self {
        let mut p = Self::zero(n);
        p.insert_term(VarExponents::unit(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, crat_one())
    }

    pub fn x_var(n: usize, j: usize) -> Result<Self, DomainError> {
        check_index(n, j)?;
        let mut e = VarExponents::unit(n);
        e.xs[j - 1] = 1;
        Ok(Self::monomial(n, e, crat_one()))
    }

    pub fn y_var(n: usize, j: usize) -> Result<Self, DomainError> {
        check_index(n, j)?;
        let mut e = VarExponents::unit(n);
        e.ys[j - 1] = 1;
        Ok(Self::monomial(n, e, crat_one()))
    }

    pub fn t_var(n: usize) -> Self {
        let mut e = VarExponents::unit(n);
        e.t = 1;
        Self::monomial(n, e, crat_one())
    }

    pub fn monomial(n: usize, e: VarExponents, c: CRat) -> Self {
        let mut p = Self::zero(n);
        p.insert_term(e, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<VarExponents, CRat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(VarExponents::total_degree)
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, e: VarExponents, c: CRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
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
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = Self::zero(self.n);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = VarExponents {
                    xs: e1.xs.iter().zip(&e2.xs).map(|(a, b)| a + b).collect(),
                    ys: e1.ys.iter().zip(&e2.ys).map(|(a, b)| a + b).collect(),
                    t: e1.t + e2.t,
                };
                out.insert_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative along one variable.
    pub fn derivative(&self, var: Var) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let exp = match var {
                Var::X(j) => e.xs[j - 1],
                Var::Y(j) => e.ys[j - 1],
                Var::T => e.t,
            };
            if exp == 0 {
                continue;
            }
            let mut e2 = e.clone();
            match var {
                Var::X(j) => e2.xs[j - 1] -= 1,
                Var::Y(j) => e2.ys[j - 1] -= 1,
                Var::T => e2.t -= 1,
            }
            out.insert_term(
                e2,
                c.clone() * CRat::new(Rat::from_integer(exp.into()), Rat::zero()),
            );
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, xs: &[Rat], ys: &[Rat], t: &Rat) -> CRat {
        let mut acc = CRat::new(Rat::zero(), Rat::zero());
        for (e, c) in &self.terms {
            let mut v = Rat::one();
            for (j, &p) in e.xs.iter().enumerate() {
                v *= rat_pow(&xs[j], p);
            }
            for (j, &p) in e.ys.iter().enumerate() {
                v *= rat_pow(&ys[j], p);
            }
            v *= rat_pow(t, e.t);
            acc += c.clone() * CRat::new(v, Rat::zero());
        }
        acc
    }

    /// Simultaneous polynomial substitution for all variables.
    pub fn substitute(&self, subs: &Substitution) -> Self {
        assert_eq!(subs.x.len(), self.n);
        let mut max_x = vec![0u32; self.n];
        let mut max_y = vec![0u32; self.n];
        let mut max_t = 0u32;
        for e in self.terms.keys() {
            for j in 0..self.n {
                max_x[j] = max_x[j].max(e.xs[j]);
                max_y[j] = max_y[j].max(e.ys[j]);
            }
            max_t = max_t.max(e.t);
        }
        let pow_table = |p: &PolyFunction, m: u32| -> Vec<PolyFunction> {
            let mut v = vec![PolyFunction::one(self.n)];
            for k in 1..=m {
                v.push(v[(k - 1) as usize].mul(p));
            }
            v
        };
        let x_pows: Vec<_> = (0..self.n)
            .map(|j| pow_table(&subs.x[j], max_x[j]))
            .collect();
        let y_pows: Vec<_> = (0..self.n)
            .map(|j| pow_table(&subs.y[j], max_y[j]))
            .collect();
        let t_pows = pow_table(&subs.t, max_t);

        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut term = PolyFunction::constant(self.n, c.clone());
            for j in 0..self.n {
                if e.xs[j] > 0 {
                    term = term.mul(&x_pows[j][e.xs[j] as usize]);
                }
                if e.ys[j] > 0 {
                    term = term.mul(&y_pows[j][e.ys[j] as usize]);
                }
            }
            if e.t > 0 {
                term = term.mul(&t_pows[e.t as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                json!({
                    "x": e.xs,
                    "y": e.ys,
                    "t": e.t,
                    "coeff": { "re": fmt_rat(&c.re), "im": fmt_rat(&c.im) },
                })
            })
            .collect();
        json!({ "n": self.n, "terms": terms })
    }
}

/// One coordinate direction of `R^{2n+1}` (1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X(usize),
    Y(usize),
    T,
}

/// Replacement polynomials for a simultaneous substitution.
pub struct Substitution {
    pub x: Vec<PolyFunction>,
    pub y: Vec<PolyFunction>,
    pub t: PolyFunction,
}

fn check_index(n: usize, j: usize) -> Result<(), DomainError> {
    if j < 1 || j > n {
        Err(DomainError::IndexOutOfRange { index: j, n })
    } else {
        Ok(())
    }
}

fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base.clone();
    }
    acc
}

impl fmt::Display for PolyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let s = format_term(e, c);
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

fn format_term(e: &VarExponents, c: &CRat) -> String {
    let mut parts = Vec::new();
    for (j, &p) in e.xs.iter().enumerate() {
        if p == 1 {
            parts.push(format!("x{}", j + 1));
        } else if p > 1 {
            parts.push(format!("x{}^{}", j + 1, p));
        }
    }
    for (j, &p) in e.ys.iter().enumerate() {
        if p == 1 {
            parts.push(format!("y{}", j + 1));
        } else if p > 1 {
            parts.push(format!("y{}^{}", j + 1, p));
        }
    }
    if e.t == 1 {
        parts.push("t".to_string());
    } else if e.t > 1 {
        parts.push(format!("t^{}", e.t));
    }
    if parts.is_empty() {
        return fmt_crat(c);
    }
    let mon = parts.join("*");
    if c.is_one() {
        mon
    } else if (-c.clone()).is_one() {
        format!("-{mon}")
    } else {
        format!("{}*{}", fmt_crat(c), mon)
    }
}
