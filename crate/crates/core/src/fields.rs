//! Coordinate realizations of enveloping-algebra elements as differential
//! operators with polynomial coefficients, acting on exact polynomial test
//! functions.
//!
//! Two charts are provided:
//!
//! * `Chart::Standard` -- the usual left-invariant frame on `C^n x R` with the
//!   twisted product `t'' = t + t' + 2 Im <z, z'>`:
//!
//!   ```text
//!   X_j = d/dx_j + 2 y_j d/dt,   Y_j = d/dy_j - 2 x_j d/dt,   T = d/dt.
//!   ```
//!
//! * `Chart::Polarized` -- the frame adapted to the Schrodinger-kernel
//!   coordinates, where the product carries the twist `(x y' - x' y)/2`:
//!
//!   ```text
//!   X_j = d/dx_j - (y_j/2) d/dt,   Y_j = -4 d/dy_j - 2 x_j d/dt,   T = d/dt.
//!   ```
//!
//!   The map `(x, y, t) -> (x, -4y, t)` is an isomorphism between the two
//!   pictures; both frames satisfy `[Y_j, X_k] = 4 delta_{jk} T` exactly
//!   (see `bracket_audit`).

use crate::algebra::AlgebraElement;
use crate::error::DomainError;
use crate::group::GroupPoint;
use crate::poly::{PolyFunction, Substitution, Var, VarExponents};
use crate::scalar::{crat_i, crat_int, crat_one, crat_ratio, rat_int, CRat};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Derivative multi-index, same shape as a variable-exponent triple.
pub type DerivIndex = VarExponents;

/// Differential operator `sum_kappa p_kappa(x, y, t) d^kappa` with polynomial
/// coefficients; closed under composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyOperator {
    n: usize,
    terms: BTreeMap<DerivIndex, PolyFunction>,
}

impl PolyOperator {
    pub fn zero(n: usize) -> Self {
        PolyOperator {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut op = Self::zero(n);
        op.insert(DerivIndex::unit(n), PolyFunction::one(n));
        op
    }

    /// Single term `coeff(x,y,t) * d^kappa`.
    pub fn term(n: usize, kappa: DerivIndex, coeff: PolyFunction) -> Self {
        let mut op = Self::zero(n);
        op.insert(kappa, coeff);
        op
    }

    /// The operator "multiply by p" (order zero).
    pub fn multiplication(p: &PolyFunction) -> Self {
        Self::term(p.n(), DerivIndex::unit(p.n()), p.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<DerivIndex, PolyFunction> {
        &self.terms
    }

    fn insert(&mut self, kappa: DerivIndex, coeff: PolyFunction) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(kappa) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
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
        for (k, p) in &other.terms {
            out.insert(k.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-crat_one())))
    }

    pub fn scale(&self, c: &CRat) -> Self {
        let mut out = Self::zero(self.n);
        for (k, p) in &self.terms {
            let q = p.scale(c);
            if !q.is_zero() {
                out.terms.insert(k.clone(), q);
            }
        }
        out
    }

    /// Apply to a polynomial test function; exact.
    pub fn apply(&self, f: &PolyFunction) -> PolyFunction {
        assert_eq!(self.n, f.n());
        let mut out = PolyFunction::zero(self.n);
        for (kappa, coeff) in &self.terms {
            let mut g = f.clone();
            for (j, &e) in kappa.xs.iter().enumerate() {
                for _ in 0..e {
                    g = g.derivative(Var::X(j + 1));
                }
            }
            for (j, &e) in kappa.ys.iter().enumerate() {
                for _ in 0..e {
                    g = g.derivative(Var::Y(j + 1));
                }
            }
            for _ in 0..kappa.t {
                g = g.derivative(Var::T);
            }
            out = out.add(&coeff.mul(&g));
        }
        out
    }

    /// Operator composition `self . other` via the Leibniz rule, exact.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (kp, cp) in &self.terms {
            for (kq, cq) in &other.terms {
                for_each_sub_index(kp, &mut |nu: &DerivIndex, binom: u64| {
                    // d^nu of the right coefficient
                    let mut dcq = cq.clone();
                    for (j, &e) in nu.xs.iter().enumerate() {
                        for _ in 0..e {
                            dcq = dcq.derivative(Var::X(j + 1));
                        }
                    }
                    for (j, &e) in nu.ys.iter().enumerate() {
                        for _ in 0..e {
                            dcq = dcq.derivative(Var::Y(j + 1));
                        }
                    }
                    for _ in 0..nu.t {
                        dcq = dcq.derivative(Var::T);
                    }
                    if dcq.is_zero() {
                        return;
                    }
                    let kappa = DerivIndex {
                        xs: kp
                            .xs
                            .iter()
                            .zip(&nu.xs)
                            .zip(&kq.xs)
                            .map(|((a, b), c)| a - b + c)
                            .collect(),
                        ys: kp
                            .ys
                            .iter()
                            .zip(&nu.ys)
                            .zip(&kq.ys)
                            .map(|((a, b), c)| a - b + c)
                            .collect(),
                        t: kp.t - nu.t + kq.t,
                    };
                    let coeff = cp.mul(&dcq).scale(&crat_int(binom as i64));
                    out.insert(kappa, coeff);
                });
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Highest total derivative order.
    pub fn order(&self) -> u32 {
        self.terms
            .keys()
            .map(VarExponents::total_degree)
            .max()
            .unwrap_or(0)
    }
}

/// Enumerate all multi-indices `nu <= kappa` with the product of binomial
/// coefficients `prod binom(kappa_i, nu_i)`.
fn for_each_sub_index(kappa: &DerivIndex, f: &mut dyn FnMut(&DerivIndex, u64)) {
    let flat: Vec<u32> = kappa
        .xs
        .iter()
        .chain(kappa.ys.iter())
        .chain(std::iter::once(&kappa.t))
        .copied()
        .collect();
    let mut nu = vec![0u32; flat.len()];
    loop {
        let mut binom = 1u64;
        for (i, &k) in flat.iter().enumerate() {
            binom *= binomial(k, nu[i]);
        }
        let n = kappa.xs.len();
        let idx = DerivIndex {
            xs: nu[..n].to_vec(),
            ys: nu[n..2 * n].to_vec(),
            t: nu[2 * n],
        };
        f(&idx, binom);
        // odometer increment bounded by kappa
        let mut i = 0;
        loop {
            if i == flat.len() {
                return;
            }
            if nu[i] < flat[i] {
                nu[i] += 1;
                break;
            }
            nu[i] = 0;
            i += 1;
        }
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Which left-invariant frame realizes the abstract generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Chart {
    #[default]
    Standard,
    Polarized,
}

/// Coordinate realization of a single generator.
pub fn realize_generator(
    chart: Chart,
    n: usize,
    g: crate::algebra::Generator,
) -> Result<PolyOperator, DomainError> {
    use crate::algebra::Generator as G;
    g.check(n)?;
    let d_t = |op: &mut PolyOperator, coeff: PolyFunction| {
        let mut k = DerivIndex::unit(n);
        k.t = 1;
        op.insert(k, coeff);
    };
    let mut op = PolyOperator::zero(n);
    match (chart, g) {
        (Chart::Standard, G::X(j)) => {
            let mut k = DerivIndex::unit(n);
            k.xs[j - 1] = 1;
            op.insert(k, PolyFunction::one(n));
            d_t(
                &mut op,
                PolyFunction::y_var(n, j)?.scale(&crat_int(2)),
            );
        }
        (Chart::Standard, G::Y(j)) => {
            let mut k = DerivIndex::unit(n);
            k.ys[j - 1] = 1;
            op.insert(k, PolyFunction::one(n));
            d_t(
                &mut op,
                PolyFunction::x_var(n, j)?.scale(&crat_int(-2)),
            );
        }
        (Chart::Polarized, G::X(j)) => {
            let mut k = DerivIndex::unit(n);
            k.xs[j - 1] = 1;
            op.insert(k, PolyFunction::one(n));
            d_t(&mut op, PolyFunction::y_var(n, j)?.scale(&crat_ratio(-1, 2)));
        }
        (Chart::Polarized, G::Y(j)) => {
            let mut k = DerivIndex::unit(n);
            k.ys[j - 1] = 1;
            op.insert(k, PolyFunction::constant(n, crat_int(-4)));
            d_t(
                &mut op,
                PolyFunction::x_var(n, j)?.scale(&crat_int(-2)),
            );
        }
        (_, G::T) => {
            d_t(&mut op, PolyFunction::one(n));
        }
    }
    Ok(op)
}

/// Realize a full algebra element as a polynomial-coefficient operator.
pub fn realize(chart: Chart, p: &AlgebraElement) -> PolyOperator {
    let n = p.n();
    let mut out = PolyOperator::zero(n);
    for (mon, coeff) in p.terms() {
        let mut acc = PolyOperator::identity(n);
        for g in mon.to_word() {
            let gen_op = realize_generator(chart, n, g).expect("valid by construction");
            acc = acc.compose(&gen_op);
        }
        out = out.add(&acc.scale(coeff));
    }
    out
}

/// Apply the standard-chart realization of `p` to a polynomial test function.
pub fn apply(p: &AlgebraElement, f: &PolyFunction) -> Result<PolyFunction, DomainError> {
    if p.n() != f.n() {
        return Err(DomainError::DimensionMismatch {
            left: p.n(),
            right: f.n(),
        });
    }
    Ok(realize(Chart::Standard, p).apply(f))
}

/// Exact composition with the left translation: `(L_g f)(v) = f(g^{-1} v)`.
pub fn left_translate(f: &PolyFunction, g: &GroupPoint) -> Result<PolyFunction, DomainError> {
    let n = f.n();
    if g.n() != n {
        return Err(DomainError::DimensionMismatch {
            left: g.n(),
            right: n,
        });
    }
    let h = g.inverse();
    let mut t_poly = PolyFunction::t_var(n).add(&PolyFunction::constant(
        n,
        CRat::new(h.t.clone(), rat_int(0)),
    ));
    let mut xsubs = Vec::new();
    let mut ysubs = Vec::new();
    for j in 1..=n {
        let hx = h.z[j - 1].re.clone();
        let hy = h.z[j - 1].im.clone();
        xsubs.push(
            PolyFunction::x_var(n, j)?
                .add(&PolyFunction::constant(n, CRat::new(hx.clone(), rat_int(0)))),
        );
        ysubs.push(
            PolyFunction::y_var(n, j)?
                .add(&PolyFunction::constant(n, CRat::new(hy.clone(), rat_int(0)))),
        );
        // twist: t -> t + t_h + 2 sum_j (im(h_j) x_j - re(h_j) y_j)
        t_poly = t_poly
            .add(
                &PolyFunction::x_var(n, j)?
                    .scale(&CRat::new(rat_int(2) * hy, rat_int(0))),
            )
            .sub(
                &PolyFunction::y_var(n, j)?
                    .scale(&CRat::new(rat_int(2) * hx, rat_int(0))),
            );
    }
    Ok(f.substitute(&Substitution {
        x: xsubs,
        y: ysubs,
        t: t_poly,
    }))
}

/// TRUE iff `P(L_g f) = L_g(P f)` exactly, for the standard-chart realization.
pub fn invariance_check(
    p: &AlgebraElement,
    g: &GroupPoint,
    f: &PolyFunction,
) -> Result<bool, DomainError> {
    invariance_check_op(&realize(Chart::Standard, p), g, f)
}

/// Same check for an arbitrary polynomial-coefficient operator (used for
/// negative controls such as multiplication by a coordinate).
pub fn invariance_check_op(
    op: &PolyOperator,
    g: &GroupPoint,
    f: &PolyFunction,
) -> Result<bool, DomainError> {
    let lhs = op.apply(&left_translate(f, g)?);
    let rhs = left_translate(&op.apply(f), g)?;
    Ok(lhs == rhs)
}

/// Result of re-deriving a bracket from composed coordinate operators.
#[derive(Debug, Clone)]
pub struct BracketAudit {
    pub j: usize,
    pub k: usize,
    /// `[Y_j, X_k]` computed as a composition of coordinate operators.
    pub computed: PolyOperator,
    /// The tabulated value `4 delta_{jk} T` in the same chart.
    pub expected: PolyOperator,
    pub matches: bool,
}

/// Recompute `[Y_j, X_k]` from the standard coordinate frame and compare with
/// `4 delta_{jk} T`. This is the ground-truth check behind the bracket table.
pub fn bracket_audit(n: usize, j: usize, k: usize) -> Result<BracketAudit, DomainError> {
    use crate::algebra::Generator as G;
    let yj = realize_generator(Chart::Standard, n, G::Y(j))?;
    let xk = realize_generator(Chart::Standard, n, G::X(k))?;
    let computed = yj.commutator(&xk);
    let tt = realize_generator(Chart::Standard, n, G::T)?;
    let expected = if j == k {
        tt.scale(&crat_int(4))
    } else {
        PolyOperator::zero(n)
    };
    let matches = computed == expected;
    Ok(BracketAudit {
        j,
        k,
        computed,
        expected,
        matches,
    })
}

/// Coordinate expansion audit for the Heisenberg Laplacian: compares the
/// frame-composed realization of `Delta` with the displayed second-order
/// expansion
///
/// ```text
/// sum_j d2/dx_j2 + d2/dy_j2 + 4 y_j d2/dx_j dt - 4 x_j d2/dy_j dt
///       + 4 (x_j^2 + y_j^2) d2/dt2 .
/// ```
pub fn laplacian_expansion_audit(n: usize) -> (PolyOperator, PolyOperator, bool) {
    let realized = realize(Chart::Standard, &crate::algebra::heisenberg_laplacian(n));
    let mut displayed = PolyOperator::zero(n);
    for j in 1..=n {
        let mut kxx = DerivIndex::unit(n);
        kxx.xs[j - 1] = 2;
        displayed = displayed.add(&PolyOperator::term(n, kxx, PolyFunction::one(n)));
        let mut kyy = DerivIndex::unit(n);
        kyy.ys[j - 1] = 2;
        displayed = displayed.add(&PolyOperator::term(n, kyy, PolyFunction::one(n)));
        let mut kxt = DerivIndex::unit(n);
        kxt.xs[j - 1] = 1;
        kxt.t = 1;
        displayed = displayed.add(&PolyOperator::term(
            n,
            kxt,
            PolyFunction::y_var(n, j).unwrap().scale(&crat_int(4)),
        ));
        let mut kyt = DerivIndex::unit(n);
        kyt.ys[j - 1] = 1;
        kyt.t = 1;
        displayed = displayed.add(&PolyOperator::term(
            n,
            kyt,
            PolyFunction::x_var(n, j).unwrap().scale(&crat_int(-4)),
        ));
        let mut ktt = DerivIndex::unit(n);
        ktt.t = 2;
        let xj = PolyFunction::x_var(n, j).unwrap();
        let yj = PolyFunction::y_var(n, j).unwrap();
        displayed = displayed.add(&PolyOperator::term(
            n,
            ktt,
            xj.mul(&xj).add(&yj.mul(&yj)).scale(&crat_int(4)),
        ));
    }
    let matches = realized == displayed;
    (realized, displayed, matches)
}

/// Audit of the displayed first-order factors: compares the realizations of
/// `A = X_1 - iY_1` and `A^dag = X_1 + iY_1` against the printed operators
///
/// ```text
/// A_disp    = d/dx - i d/dy + (2y - 2ix) d/dt
/// Adag_disp = d/dx + i d/dy + (2y + 2ix) d/dt
/// ```
///
/// and returns the two defect operators (realized minus displayed).
pub fn factor_display_audit() -> (PolyOperator, PolyOperator) {
    let n = 1;
    let build_disp = |dy_coeff: CRat, tx_coeff: CRat| -> PolyOperator {
        let mut op = PolyOperator::zero(n);
        let mut kx = DerivIndex::unit(n);
        kx.xs[0] = 1;
        op.insert(kx, PolyFunction::one(n));
        let mut ky = DerivIndex::unit(n);
        ky.ys[0] = 1;
        op.insert(ky, PolyFunction::constant(n, dy_coeff));
        let mut kt = DerivIndex::unit(n);
        kt.t = 1;
        let coeff = PolyFunction::y_var(n, 1)
            .unwrap()
            .scale(&crat_int(2))
            .add(&PolyFunction::x_var(n, 1).unwrap().scale(&tx_coeff));
        op.insert(kt, coeff);
        op
    };
    let a_disp = build_disp(-crat_i(), crat_i() * crat_int(-2));
    let adag_disp = build_disp(crat_i(), crat_i() * crat_int(2));
    let a_real = realize(Chart::Standard, &crate::algebra::factor_a());
    let adag_real = realize(Chart::Standard, &crate::algebra::factor_a_dagger());
    (a_real.sub(&a_disp), adag_real.sub(&adag_disp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{self, Generator as G};
    use crate::scalar::{crat, crat_int, crat_zero, rat, rat_int};

    #[test]
    fn apply_examples() {
        let n = 1;
        // T t^2 = 2t
        let t2 = PolyFunction::t_var(n).pow(2);
        let r = apply(&algebra::t(n), &t2).unwrap();
        assert_eq!(r, PolyFunction::t_var(n).scale(&crat_int(2)));
        // X_1 (x_1 t) = t + 2 x_1 y_1
        let f = PolyFunction::x_var(n, 1).unwrap().mul(&PolyFunction::t_var(n));
        let r = apply(&algebra::x(n, 1).unwrap(), &f).unwrap();
        let expected = PolyFunction::t_var(n).add(
            &PolyFunction::x_var(n, 1)
                .unwrap()
                .mul(&PolyFunction::y_var(n, 1).unwrap())
                .scale(&crat_int(2)),
        );
        assert_eq!(r, expected);
    }

    #[test]
    fn apply_is_homomorphism() {
        let n = 2;
        let p = algebra::sublaplacian(n, &crat(rat(1, 3), rat_int(0)));
        let q = algebra::y(n, 2).unwrap().mul(&algebra::x(n, 1).unwrap());
        let f = PolyFunction::x_var(n, 1)
            .unwrap()
            .mul(&PolyFunction::t_var(n))
            .add(&PolyFunction::y_var(n, 2).unwrap().pow(3));
        let lhs = apply(&p.mul(&q), &f).unwrap();
        let rhs = apply(&p, &apply(&q, &f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn left_translate_examples() {
        let n = 1;
        // g = identity fixes f
        let f = PolyFunction::t_var(n).mul(&PolyFunction::x_var(n, 1).unwrap());
        let e = GroupPoint::identity(n);
        assert_eq!(left_translate(&f, &e).unwrap(), f);
        // n=1, f=t, g=(1,0): L_g f = t + 2y
        let g = GroupPoint::new(vec![crat_int(1)], rat_int(0));
        let lt = left_translate(&PolyFunction::t_var(n), &g).unwrap();
        let expected = PolyFunction::t_var(n)
            .add(&PolyFunction::y_var(n, 1).unwrap().scale(&crat_int(2)));
        assert_eq!(lt, expected);
    }

    #[test]
    fn translate_composition_contravariant() {
        let n = 1;
        let f = PolyFunction::x_var(n, 1)
            .unwrap()
            .pow(2)
            .mul(&PolyFunction::t_var(n));
        let g = GroupPoint::new(vec![crat(rat(1, 2), rat(-1, 3))], rat(2, 5));
        let h = GroupPoint::new(vec![crat(rat(-3, 4), rat(1, 7))], rat(-1, 2));
        let lhs = left_translate(&left_translate(&f, &g).unwrap(), &h).unwrap();
        let rhs = left_translate(&f, &h.multiply(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn invariance_positive_and_negative() {
        let n = 1;
        let g = GroupPoint::new(vec![crat(rat(2, 3), rat(-1, 2))], rat(1, 4));
        let f = PolyFunction::x_var(n, 1)
            .unwrap()
            .mul(&PolyFunction::y_var(n, 1).unwrap())
            .add(&PolyFunction::t_var(n).pow(2));
        for p in [
            algebra::t(n),
            algebra::x(n, 1).unwrap(),
            algebra::y(n, 1).unwrap(),
            algebra::heisenberg_laplacian(n),
            algebra::sublaplacian(n, &crat(rat(1, 2), rat(1, 3))),
        ] {
            assert!(invariance_check(&p, &g, &f).unwrap(), "failed for {p}");
        }
        // negative control: multiplication by x_1 is not left invariant
        let mult = PolyOperator::multiplication(&PolyFunction::x_var(n, 1).unwrap());
        assert!(!invariance_check_op(&mult, &g, &f).unwrap());
    }

    #[test]
    fn bracket_audit_table() {
        for (j, k) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let audit = bracket_audit(2, j, k).unwrap();
            assert!(audit.matches, "bracket [{j},{k}] mismatch");
        }
        // [X_j, T] = [Y_j, T] = 0 as composed operators
        let n = 2;
        let tt = realize_generator(Chart::Standard, n, G::T).unwrap();
        for g in [G::X(1), G::Y(2)] {
            let gg = realize_generator(Chart::Standard, n, g).unwrap();
            assert!(gg.commutator(&tt).is_zero());
        }
        // [X_1, X_2] = [Y_1, Y_2] = 0
        let x1 = realize_generator(Chart::Standard, n, G::X(1)).unwrap();
        let x2 = realize_generator(Chart::Standard, n, G::X(2)).unwrap();
        assert!(x1.commutator(&x2).is_zero());
    }

    #[test]
    fn polarized_frame_same_brackets() {
        let n = 2;
        for (j, k) in [(1, 1), (1, 2), (2, 2)] {
            let yj = realize_generator(Chart::Polarized, n, G::Y(j)).unwrap();
            let xk = realize_generator(Chart::Polarized, n, G::X(k)).unwrap();
            let c = yj.commutator(&xk);
            let expected = if j == k {
                realize_generator(Chart::Polarized, n, G::T)
                    .unwrap()
                    .scale(&crat_int(4))
            } else {
                PolyOperator::zero(n)
            };
            assert_eq!(c, expected);
        }
    }

    #[test]
    fn realize_respects_products() {
        let n = 1;
        let p = algebra::factor_a();
        let q = algebra::factor_a_dagger();
        let lhs = realize(Chart::Standard, &p.mul(&q));
        let rhs = realize(Chart::Standard, &p).compose(&realize(Chart::Standard, &q));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laplacian_expansion_matches_display() {
        let (_, _, ok) = laplacian_expansion_audit(1);
        assert!(ok);
        let (_, _, ok2) = laplacian_expansion_audit(2);
        assert!(ok2);
    }

    #[test]
    fn factor_display_defect_is_4ix_dt() {
        // the realized A differs from the printed one by 4i x d/dt
        let (da, dadag) = factor_display_audit();
        let n = 1;
        let mut kt = DerivIndex::unit(n);
        kt.t = 1;
        let four_i_x = PolyOperator::term(
            n,
            kt.clone(),
            PolyFunction::x_var(n, 1)
                .unwrap()
                .scale(&(crat_i() * crat_int(4))),
        );
        assert_eq!(da, four_i_x);
        let minus_four_i_x = four_i_x.scale(&crat_int(-1));
        assert_eq!(dadag, minus_four_i_x);
        let _ = crat_zero();
    }

    #[test]
    fn eq33_displayed_factors_are_not_invariant() {
        // the printed factors fail left invariance, the repaired ones pass
        let n = 1;
        let (da, _) = factor_display_audit();
        let a_real = realize(Chart::Standard, &algebra::factor_a());
        let a_disp = a_real.sub(&da);
        let g = GroupPoint::new(vec![crat(rat(1, 2), rat(1, 3))], rat_int(0));
        let f = PolyFunction::t_var(n).pow(2);
        assert!(!invariance_check_op(&a_disp, &g, &f).unwrap());
        assert!(invariance_check_op(&a_real, &g, &f).unwrap());
    }
}
