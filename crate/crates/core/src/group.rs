//! Exact arithmetic for the (2n+1)-dimensional Heisenberg group: the
//! underlying manifold is `C^n x R` with coordinates `(z, t)` and twisted
//! product
//!
//! ```text
//! (z,t)(z',t') = (z + z', t + t' + 2 Im <z, z'>),   <z, z'> = sum_j z_j conj(z'_j)
//! ```
//!
//! Convention audit: some sources print the twist as `z.z' = sum z_j zbar_j`
//! (dropping the prime on the right factor). The Hermitian pairing above is
//! the only reading that makes the product associative with inverse
//! `(-z, -t)`; the exact group-axiom tests below pin it down.
//!
//! Dilations: `delta_{s,l}(z,t) = (s*l*z, l^2*t)` for `l > 0`, `s = +/-1`.
//! The `t` factor is the square of the `z` factor; anything else fails the
//! automorphism law (checked exactly in the tests).

use crate::error::DomainError;
use crate::scalar::{crat_to_c64, crat_zero, rat_int, rat_to_f64, CRat, Rat, C64};
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A point `(z, t)` of the group, with exact Gaussian-rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPoint {
    pub z: Vec<CRat>,
    pub t: Rat,
}

impl GroupPoint {
    pub fn new(z: Vec<CRat>, t: Rat) -> Self {
        GroupPoint { z, t }
    }

    pub fn identity(n: usize) -> Self {
        GroupPoint {
            z: vec![crat_zero(); n],
            t: rat_int(0),
        }
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero() && self.z.iter().all(|c| c.is_zero())
    }

    pub fn inverse(&self) -> Self {
        GroupPoint {
            z: self.z.iter().map(|c| -c.clone()).collect(),
            t: -self.t.clone(),
        }
    }

    /// Group product; errors on mismatched ambient dimension.
    pub fn multiply(&self, other: &GroupPoint) -> Result<GroupPoint, DomainError> {
        if self.n() != other.n() {
            return Err(DomainError::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let z: Vec<CRat> = self
            .z
            .iter()
            .zip(&other.z)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        // Im(sum_j z_j conj(z'_j)) computed exactly: Im((a+bi)(c-di)) = bc - ad
        let mut twist = rat_int(0);
        for (a, b) in self.z.iter().zip(&other.z) {
            twist += a.im.clone() * b.re.clone() - a.re.clone() * b.im.clone();
        }
        let t = self.t.clone() + other.t.clone() + rat_int(2) * twist;
        Ok(GroupPoint { z, t })
    }

    /// Floating view for the numeric layers.
    pub fn to_f64(&self) -> (Vec<C64>, f64) {
        (
            self.z.iter().map(crat_to_c64).collect(),
            rat_to_f64(&self.t),
        )
    }
}

impl Serialize for GroupPoint {
    /// Wire format: flat array `[re z_1, im z_1, ..., re z_n, im z_n, t]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2 * self.z.len() + 1))?;
        for c in &self.z {
            seq.serialize_element(&rat_to_f64(&c.re))?;
            seq.serialize_element(&rat_to_f64(&c.im))?;
        }
        seq.serialize_element(&rat_to_f64(&self.t))?;
        seq.end()
    }
}

/// Anisotropic scaling `(z, t) -> (s*l*z, l^2*t)`, `l > 0`, `s = +/-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dilation {
    lambda: Rat,
    sign: i8,
}

impl Dilation {
    pub fn new(lambda: Rat, sign: i8) -> Result<Self, DomainError> {
        if lambda <= rat_int(0) {
            return Err(DomainError::NonPositiveDilation);
        }
        if sign != 1 && sign != -1 {
            return Err(DomainError::InvalidSign(sign));
        }
        Ok(Dilation { lambda, sign })
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn apply(&self, g: &GroupPoint) -> GroupPoint {
        let zfac = if self.sign >= 0 {
            self.lambda.clone()
        } else {
            -self.lambda.clone()
        };
        let z = self
            .z_factor_apply(&zfac, g);
        let t = self.lambda.clone() * self.lambda.clone() * g.t.clone();
        GroupPoint { z, t }
    }

    fn z_factor_apply(&self, zfac: &Rat, g: &GroupPoint) -> Vec<CRat> {
        g.z.iter()
            .map(|c| CRat::new(c.re.clone() * zfac.clone(), c.im.clone() * zfac.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{crat, crat_int, rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_point(rng: &mut ChaCha8Rng, n: usize) -> GroupPoint {
        let mut z = Vec::new();
        for _ in 0..n {
            z.push(crat(
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)),
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)),
            ));
        }
        GroupPoint::new(z, rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)))
    }

    #[test]
    fn identity_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=3 {
            let e = GroupPoint::identity(n);
            let g = random_point(&mut rng, n);
            assert_eq!(e.multiply(&g).unwrap(), g);
            assert_eq!(g.multiply(&e).unwrap(), g);
            assert!(g.multiply(&g.inverse()).unwrap().is_identity());
            assert_eq!(GroupPoint::identity(n).inverse(), GroupPoint::identity(n));
            assert_eq!(g.inverse().inverse(), g);
        }
    }

    #[test]
    fn product_example_n1() {
        // (1, 0) * (i, 0) = (1 + i, -2)
        let g = GroupPoint::new(vec![crat_int(1)], rat_int(0));
        let h = GroupPoint::new(vec![crat(rat_int(0), rat_int(1))], rat_int(0));
        let p = g.multiply(&h).unwrap();
        assert_eq!(p.z[0], crat(rat_int(1), rat_int(1)));
        assert_eq!(p.t, rat_int(-2));
    }

    #[test]
    fn associativity_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 1..=3 {
            for _ in 0..50 {
                let g = random_point(&mut rng, n);
                let h = random_point(&mut rng, n);
                let k = random_point(&mut rng, n);
                let lhs = g.multiply(&h).unwrap().multiply(&k).unwrap();
                let rhs = g.multiply(&h.multiply(&k).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn left_cancel() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_point(&mut rng, 2);
            let h = random_point(&mut rng, 2);
            let back = g.inverse().multiply(&g.multiply(&h).unwrap()).unwrap();
            assert_eq!(back, h);
        }
    }

    #[test]
    fn dilation_is_automorphism_both_signs() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for sign in [1i8, -1] {
            let d = Dilation::new(rat(3, 2), sign).unwrap();
            for _ in 0..40 {
                let g = random_point(&mut rng, 2);
                let h = random_point(&mut rng, 2);
                let lhs = d.apply(&g.multiply(&h).unwrap());
                let rhs = d.apply(&g).multiply(&d.apply(&h)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dilation_examples() {
        let id = Dilation::new(rat_int(1), 1).unwrap();
        let g = GroupPoint::new(vec![crat(rat_int(2), rat(-1, 3))], rat(5, 7));
        assert_eq!(id.apply(&g), g);

        // lambda = 2, sign = +1: (1+i, 3) -> (2+2i, 12)
        let d = Dilation::new(rat_int(2), 1).unwrap();
        let p = GroupPoint::new(vec![crat(rat_int(1), rat_int(1))], rat_int(3));
        let q = d.apply(&p);
        assert_eq!(q.z[0], crat(rat_int(2), rat_int(2)));
        assert_eq!(q.t, rat_int(12));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let g = GroupPoint::identity(1);
        let h = GroupPoint::identity(2);
        assert!(g.multiply(&h).is_err());
    }

    #[test]
    fn json_wire_format() {
        let g = GroupPoint::new(vec![crat(rat(1, 2), rat_int(-1))], rat(3, 4));
        let js = serde_json::to_value(&g).unwrap();
        assert_eq!(js, serde_json::json!([0.5, -1.0, 0.75]));
    }
}
