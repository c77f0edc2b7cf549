//! Incomplete elliptic integral of the first kind and the Jacobi sn function.
//!
//! Both are computed with arithmetic-geometric-mean style iterations, which
//! stay uniformly accurate all the way to the k → 1 limit: F(φ, k) through
//! Carlson's symmetric R_F form evaluated by the duplication theorem, and
//! sn(u, k) through a descending Landen/Gauss transformation.
//!
//! References:
//! * Carlson B C (1977), SIAM J. Math. Anal. 8, 231.
//! * Abramowitz M and Stegun I A (1972), Handbook of Mathematical Functions,
//!   chapters 16 and 17.
//! * Press W H et al. (2007), Numerical Recipes, 3rd ed., section 6.12.

use super::SpecialError;

/// Modulus k of the elliptic functions, constrained to 0 ≤ k ≤ 1.
///
/// The convention throughout is the modulus k itself, not the parameter
/// m = k²  used by some libraries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus(f64);

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self, SpecialError> {
        if !(0.0..=1.0).contains(&k) {
            return Err(SpecialError::Domain(format!(
                "elliptic modulus must satisfy 0 <= k <= 1, got {k}"
            )));
        }
        Ok(Self(k))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Incomplete elliptic integral of the first kind,
/// F(φ, k) = ∫₀^φ dx / sqrt(1 − k² sin²x), for 0 ≤ φ ≤ π/2.
///
/// F is monotone increasing in both arguments. The combination k = 1,
/// φ = π/2 diverges and is rejected.
pub fn elliptic_f(phi: f64, k: EllipticModulus) -> Result<f64, SpecialError> {
    let k = k.get();
    if !phi.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2 + 4.0 * f64::EPSILON).contains(&phi)
    {
        return Err(SpecialError::Domain(format!(
            "elliptic_f requires 0 <= phi <= pi/2, got {phi}"
        )));
    }
    if phi == 0.0 {
        return Ok(0.0);
    }
    let s = phi.sin().min(1.0);
    if k == 1.0 && 1.0 - s * s <= f64::EPSILON {
        return Err(SpecialError::Domain(
            "elliptic_f diverges at k = 1, phi = pi/2".into(),
        ));
    }
    let c2 = (phi.cos()).powi(2);
    let q = (1.0 - s * k) * (1.0 + s * k);
    Ok(s * carlson_rf(c2, q, 1.0)?)
}

/// Complete elliptic integral of the first kind, K(k) = F(π/2, k).
pub fn elliptic_k(k: EllipticModulus) -> Result<f64, SpecialError> {
    elliptic_f(std::f64::consts::FRAC_PI_2, k)
}

/// Jacobi elliptic function sn(u, k).
///
/// sn is odd in u, bounded by 1 in magnitude, reduces to sin u at k = 0 and
/// to tanh u at k = 1, and for k < 1 is periodic with period 4 F(π/2, k).
pub fn jacobi_sn(u: f64, k: EllipticModulus) -> Result<f64, SpecialError> {
    if !u.is_finite() {
        return Err(SpecialError::Domain(format!(
            "jacobi_sn requires finite u, got {u}"
        )));
    }
    Ok(sncndn(u, 1.0 - k.get() * k.get()).0)
}

/// Carlson's symmetric integral R_F(x, y, z) by the duplication theorem.
///
/// Requires x, y, z ≥ 0 with at most one of them zero. The error tolerance
/// gives full double precision (Press et al., section 6.12).
fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64, SpecialError> {
    const ERR_TOL: f64 = 0.0025;
    const THIRD: f64 = 1.0 / 3.0;
    const C1: f64 = 1.0 / 24.0;
    const C2: f64 = 0.1;
    const C3: f64 = 3.0 / 44.0;
    const C4: f64 = 1.0 / 14.0;
    const MAX_ITER: usize = 60;

    let tiny = 5.0 * f64::MIN_POSITIVE;
    let big = 0.2 * f64::MAX;
    if x.min(y).min(z) < 0.0 || (x + y).min(x + z).min(y + z) < tiny || x.max(y).max(z) > big {
        return Err(SpecialError::Domain(
            "carlson_rf arguments must be non-negative with at most one zero".into(),
        ));
    }
    let (mut xt, mut yt, mut zt) = (x, y, z);
    for _ in 0..MAX_ITER {
        let sqrtx = xt.sqrt();
        let sqrty = yt.sqrt();
        let sqrtz = zt.sqrt();
        let alamb = sqrtx * (sqrty + sqrtz) + sqrty * sqrtz;
        xt = 0.25 * (xt + alamb);
        yt = 0.25 * (yt + alamb);
        zt = 0.25 * (zt + alamb);
        let ave = THIRD * (xt + yt + zt);
        let delx = (ave - xt) / ave;
        let dely = (ave - yt) / ave;
        let delz = (ave - zt) / ave;
        if delx.abs().max(dely.abs()).max(delz.abs()) < ERR_TOL {
            let e2 = delx * dely - delz * delz;
            let e3 = delx * dely * delz;
            return Ok((1.0 + (C1 * e2 - C2 - C3 * e3) * e2 + C4 * e3) / ave.sqrt());
        }
    }
    Err(SpecialError::NoConvergence("carlson_rf"))
}

/// Jacobi functions (sn, cn, dn) for parameter kc2 = 1 − k² via the
/// descending Gauss/Landen AGM recursion (Abramowitz & Stegun 16.4).
fn sncndn(u: f64, kc2: f64) -> (f64, f64, f64) {
    const CA: f64 = 1.0e-15;
    if kc2 == 0.0 {
        // k = 1: hyperbolic limit.
        let cn = 1.0 / u.cosh();
        return (u.tanh(), cn, cn);
    }
    if kc2 == 1.0 {
        // k = 0: circular limit.
        return (u.sin(), u.cos(), 1.0);
    }
    let mut emc = kc2;
    let mut a = 1.0_f64;
    let mut dn = 1.0_f64;
    let mut em = [0.0_f64; 16];
    let mut en = [0.0_f64; 16];
    let mut l = 0;
    let mut c = 0.0;
    for i in 0..16 {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= CA * a {
            break;
        }
        emc *= a;
        a = c;
    }
    let u_scaled = c * u;
    let mut sn = u_scaled.sin();
    let mut cn = u_scaled.cos();
    if sn != 0.0 {
        a = cn / sn;
        c *= a;
        for i in (0..=l).rev() {
            let b = em[i];
            a *= c;
            c *= dn;
            dn = (en[i] + a) / (b + a);
            a = c / b;
        }
        let inv = 1.0 / (c * c + 1.0).sqrt();
        sn = inv.copysign(sn);
        cn = c * sn;
    }
    (sn, cn, dn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn modulus(k: f64) -> EllipticModulus {
        EllipticModulus::new(k).unwrap()
    }

    /// Independent oracle: adaptive Simpson quadrature of the defining
    /// integrand 1/sqrt(1 - k^2 sin^2 x), to absolute tolerance ~1e-12.
    fn quadrature_f(phi: f64, k: f64) -> f64 {
        fn integrand(x: f64, k: f64) -> f64 {
            1.0 / (1.0 - (k * x.sin()).powi(2)).sqrt()
        }
        fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
            (b - a) / 6.0 * (fa + 4.0 * fm + fb)
        }
        fn adapt(a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, k: f64, tol: f64) -> f64 {
            let m = 0.5 * (a + b);
            let lm = 0.5 * (a + m);
            let rm = 0.5 * (m + b);
            let flm = integrand(lm, k);
            let frm = integrand(rm, k);
            let left = simpson(a, m, fa, flm, fm);
            let right = simpson(m, b, fm, frm, fb);
            if (left + right - whole).abs() <= 15.0 * tol || b - a < 1e-13 {
                left + right + (left + right - whole) / 15.0
            } else {
                adapt(a, m, fa, flm, fm, left, k, 0.5 * tol)
                    + adapt(m, b, fm, frm, fb, right, k, 0.5 * tol)
            }
        }
        let fa = integrand(0.0, k);
        let fb = integrand(phi, k);
        let fm = integrand(0.5 * phi, k);
        let whole = simpson(0.0, phi, fa, fm, fb);
        adapt(0.0, phi, fa, fm, fb, whole, k, 1e-13)
    }

    #[test]
    fn elliptic_f_matches_quadrature_oracle() {
        // Frozen spot value, cross-checked against the quadrature oracle.
        let f = elliptic_f(0.7, modulus(0.5)).unwrap();
        assert_abs_diff_eq!(f, 0.7136205028677778, epsilon = 1e-14);
        assert_abs_diff_eq!(f, quadrature_f(0.7, 0.5), epsilon = 1e-11);

        // Grid sweep against the oracle.
        for &k in &[0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999] {
            for i in 0..=16 {
                let phi = FRAC_PI_2 * i as f64 / 16.0;
                let f = elliptic_f(phi, modulus(k)).unwrap();
                assert_abs_diff_eq!(f, quadrature_f(phi, k), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn elliptic_f_trivial_values() {
        for &k in &[0.0, 0.3, 1.0] {
            assert_eq!(elliptic_f(0.0, modulus(k)).unwrap(), 0.0);
        }
        assert_abs_diff_eq!(
            elliptic_f(FRAC_PI_2, modulus(0.0)).unwrap(),
            FRAC_PI_2,
            epsilon = 1e-15
        );
        // Frozen complete integrals.
        assert_abs_diff_eq!(
            elliptic_k(modulus(0.5)).unwrap(),
            1.6857503548125960,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            elliptic_k(modulus(0.99)).unwrap(),
            3.3566005233611924,
            epsilon = 1e-13
        );
    }

    #[test]
    fn elliptic_f_monotone_in_both_arguments() {
        let mut prev = -1.0;
        for i in 1..=20 {
            let phi = FRAC_PI_2 * i as f64 / 20.0;
            let f = elliptic_f(phi, modulus(0.6)).unwrap();
            assert!(f > prev);
            prev = f;
        }
        let mut prev = 0.0;
        for i in 0..=20 {
            let k = 0.999 * i as f64 / 20.0;
            let f = elliptic_f(1.1, modulus(k)).unwrap();
            assert!(f >= prev);
            prev = f;
        }
    }

    #[test]
    fn elliptic_f_domain_errors() {
        assert!(elliptic_f(-0.1, modulus(0.5)).is_err());
        assert!(elliptic_f(2.0, modulus(0.5)).is_err());
        assert!(elliptic_f(FRAC_PI_2, modulus(1.0)).is_err());
        assert!(EllipticModulus::new(1.5).is_err());
        assert!(EllipticModulus::new(-0.1).is_err());
        // k = 1 with phi < pi/2 is finite: F(z, 1) = atanh(sin z).
        let z = 0.8_f64;
        let f = elliptic_f(z, modulus(1.0)).unwrap();
        assert_abs_diff_eq!(f, z.sin().atanh(), epsilon = 1e-12);
    }

    #[test]
    fn jacobi_sn_special_moduli() {
        assert_abs_diff_eq!(
            jacobi_sn(FRAC_PI_2, modulus(0.0)).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            jacobi_sn(2.0, modulus(1.0)).unwrap(),
            2.0_f64.tanh(),
            epsilon = 1e-15
        );
        // Frozen reference values (modulus k = sqrt(m)).
        assert_abs_diff_eq!(
            jacobi_sn(1.3, modulus(0.7)).unwrap(),
            0.9214672225114198,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            jacobi_sn(0.5, modulus(0.9)).unwrap(),
            0.4653927499774914,
            epsilon = 1e-12
        );
    }

    #[test]
    fn jacobi_sn_inverts_elliptic_f() {
        // sn(F(z, k), k) = sin z; F from the quadrature-backed implementation.
        for &k in &[0.0, 0.2, 0.3, 0.6, 0.9, 0.99] {
            for i in 0..=10 {
                let z = 1.5 * i as f64 / 10.0;
                let u = elliptic_f(z, modulus(k)).unwrap();
                assert_abs_diff_eq!(jacobi_sn(u, modulus(k)).unwrap(), z.sin(), epsilon = 1e-9);
            }
        }
        let u = elliptic_f(0.6, modulus(0.3)).unwrap();
        assert_abs_diff_eq!(
            jacobi_sn(u, modulus(0.3)).unwrap(),
            0.6_f64.sin(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn jacobi_sn_odd_bounded_periodic() {
        for &k in &[0.1, 0.5, 0.8, 0.99] {
            let period = 4.0 * elliptic_k(modulus(k)).unwrap();
            for i in -7..=7 {
                let u = 0.9 * i as f64;
                let s = jacobi_sn(u, modulus(k)).unwrap();
                assert!(s.abs() <= 1.0 + 1e-15);
                let s_neg = jacobi_sn(-u, modulus(k)).unwrap();
                assert_abs_diff_eq!(s, -s_neg, epsilon = 1e-14);
                let s_per = jacobi_sn(u + period, modulus(k)).unwrap();
                assert_abs_diff_eq!(s, s_per, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn jacobi_sn_small_modulus_matches_sine_expansion() {
        // First-order expansion in m = k^2: sn(u,k) ~ sin u - (m/4)(u - sin u cos u) cos u.
        let k = 1e-4;
        let m = k * k;
        for &u in &[0.3_f64, 1.0, 2.2] {
            let expect = u.sin() - 0.25 * m * (u - u.sin() * u.cos()) * u.cos();
            assert_abs_diff_eq!(jacobi_sn(u, modulus(k)).unwrap(), expect, epsilon = 1e-12);
        }
    }

    proptest::proptest! {
        #[test]
        fn prop_sn_within_unit_interval(u in -20.0..20.0f64, k in 0.0..=1.0f64) {
            let s = jacobi_sn(u, modulus(k)).unwrap();
            proptest::prop_assert!(s.abs() <= 1.0 + 1e-14);
        }

        #[test]
        fn prop_f_agrees_with_quadrature(phi in 0.0..1.57f64, k in 0.0..0.995f64) {
            let f = elliptic_f(phi, modulus(k)).unwrap();
            proptest::prop_assert!((f - quadrature_f(phi, k)).abs() < 1e-10);
        }
    }
}
