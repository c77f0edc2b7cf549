//! Sorted real roots of the intensity cubic n(E1 − n)(E2 − n) − K² = 0.
//!
//! The three roots a ≥ b ≥ c bound the sum-frequency intensity along a
//! classical trajectory: n₃(t) oscillates in [c, b]. They satisfy the Vieta
//! identities a + b + c = E1 + E2, ab + ac + bc = E1·E2, abc = K².

use super::SpecialError;

/// Roots of the intensity cubic, sorted descending (a ≥ b ≥ c).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicRoots {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl CubicRoots {
    /// Whether b and c coincide to within the degeneracy threshold, in which
    /// case the motion is a fixed point with constant n₃ = c.
    pub fn is_degenerate(&self) -> bool {
        let spread = self.a - self.c;
        self.b - self.c < 1e-9 * spread.max(f64::MIN_POSITIVE)
    }
}

/// Solves n³ − (E1+E2) n² + E1·E2 n − K² = 0 for its three real roots.
///
/// Inputs must be realizable: E1, E2 ≥ 0 and K² no larger than the maximum of
/// n(E1−n)(E2−n) over [0, min(E1, E2)]. Violations surface as the
/// `UnphysicalInvariants` error once the cubic discriminant turns negative
/// beyond tolerance.
///
/// Roots come from the trigonometric solution of the depressed cubic followed
/// by one guarded Newton step each, which keeps accuracy near double roots
/// (the no-energy-transfer case is exactly a double root b = c).
pub fn cubic_roots_sorted(e1: f64, e2: f64, k: f64) -> Result<CubicRoots, SpecialError> {
    if !(e1.is_finite() && e2.is_finite() && k.is_finite()) || e1 < 0.0 || e2 < 0.0 {
        return Err(SpecialError::Domain(format!(
            "cubic_roots_sorted requires finite E1, E2 >= 0; got E1={e1}, E2={e2}, K={k}"
        )));
    }
    let s2 = e1 + e2; // a + b + c
    let s1 = e1 * e2; // ab + ac + bc
    let s0 = k * k; // abc

    if s0 == 0.0 {
        // K = 0 factorizes exactly: n (E1 - n)(E2 - n) = 0.
        let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        return Ok(CubicRoots { a: hi, b: lo, c: 0.0 });
    }

    // Depress: n = y + s2/3 gives y^3 + p y + q = 0. Here
    // p = s1 - s2^2/3 = -(e1^2 - e1 e2 + e2^2)/3 <= 0 always.
    let shift = s2 / 3.0;
    let p = s1 - s2 * s2 / 3.0;
    let q = -2.0 * s2 * s2 * s2 / 27.0 + s1 * s2 / 3.0 - s0;

    if p >= -f64::MIN_POSITIVE {
        // e1 = e2 = 0: triple root at the origin (vacuum), K must be 0 too.
        return Err(SpecialError::UnphysicalInvariants { e1, e2, k });
    }

    let m = 2.0 * (-p / 3.0).sqrt();
    // cos(3θ) = 3q / (p m); three real roots require |cos(3θ)| <= 1.
    let cos3t = 3.0 * q / (p * m);
    if cos3t.abs() > 1.0 + 1e-9 {
        return Err(SpecialError::UnphysicalInvariants { e1, e2, k });
    }
    let theta = cos3t.clamp(-1.0, 1.0).acos() / 3.0;

    let mut roots = [0.0_f64; 3];
    for (i, slot) in roots.iter_mut().enumerate() {
        let y = m * (theta - 2.0 * std::f64::consts::PI * i as f64 / 3.0).cos();
        *slot = polish(y + shift, s2, s1, s0);
    }
    roots.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let (a, mut b, mut c) = (roots[0], roots[1], roots[2]);

    // Near a (b, c) double root the direct roots carry sqrt(eps)-level
    // splitting noise. Recenter the pair on the cubic's local maximum
    // n_minus (an exact quadratic in the coefficients) and take the split
    // from the function value there; a value at roundoff level means the
    // discriminant is indistinguishable from an exact double root.
    if b - c < 1e-4 * (a - c) {
        let disc = (s2 * s2 - 3.0 * s1).max(0.0).sqrt();
        let n_minus = (s2 - disc) / 3.0;
        let f0 = ((n_minus - s2) * n_minus + s1) * n_minus - s0;
        let curvature = 2.0 * s2 - 6.0 * n_minus; // -f''(n_minus) > 0
        let noise = 32.0 * f64::EPSILON
            * ((n_minus * (e1 - n_minus) * (e2 - n_minus)).abs() + s0);
        if f0 <= noise || curvature <= 0.0 {
            b = n_minus;
            c = n_minus;
        } else {
            let split = (2.0 * f0 / curvature).sqrt();
            b = n_minus + split;
            c = n_minus - split;
        }
    }

    Ok(CubicRoots { a, b, c })
}

/// One Newton step on f(n) = n³ − s2 n² + s1 n − s0, skipped when the local
/// slope is too small for the step to be trustworthy (near double roots the
/// trigonometric value is already the accurate one).
fn polish(x: f64, s2: f64, s1: f64, s0: f64) -> f64 {
    let f = ((x - s2) * x + s1) * x - s0;
    let df = (3.0 * x - 2.0 * s2) * x + s1;
    if df != 0.0 {
        let step = f / df;
        if step.abs() <= 1e-3 * x.abs().max(1.0) {
            return x - step;
        }
    }
    x
}
