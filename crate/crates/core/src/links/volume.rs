//! The regular ideal octahedron volume.

use std::f64::consts::PI;

/// Catalan's constant from Ramanujan's accelerated series
/// `G = (π/8)·ln(2 + √3) + (3/8)·Σ_{n≥0} 1 / ((2n+1)²·C(2n, n))`.
///
/// Terms shrink by a factor of about 4, so 30 terms exhaust `f64`.
pub fn catalan() -> f64 {
    let mut inverse_binomial = 1.0f64; // 1 / C(2n, n)
    let mut sum = 0.0f64;
    for n in 0..40u32 {
        let odd = (2 * n + 1) as f64;
        sum += inverse_binomial / (odd * odd);
        // C(2n+2, n+1) / C(2n, n) = 2(2n+1)/(n+1)
        inverse_binomial *= (n + 1) as f64 / (2.0 * odd);
    }
    PI / 8.0 * (2.0 + 3f64.sqrt()).ln() + 3.0 / 8.0 * sum
}

/// Volume of the regular ideal octahedron, `4G ≈ 3.663862376708876`.
pub fn v_oct() -> f64 {
    4.0 * catalan()
}

/// Lobachevsky function `Λ(θ) = −∫₀^θ ln|2 sin t| dt`.
///
/// Odd and π-periodic. On `(0, π/2]` the logarithmic singularity is split
/// off as `θ·ln(2θ) − θ` and the smooth remainder `ln(sin t / t)` goes
/// through composite Simpson.
pub fn lobachevsky(theta: f64) -> f64 {
    let reduced = theta.rem_euclid(PI);
    if reduced == 0.0 {
        return 0.0;
    }
    if reduced > PI / 2.0 {
        return -lobachevsky(PI - reduced);
    }
    let th = reduced;
    let smooth = |t: f64| if t == 0.0 { 0.0 } else { (t.sin() / t).ln() };
    let intervals = 4000;
    let h = th / intervals as f64;
    let mut acc = smooth(0.0) + smooth(th);
    for i in 1..intervals {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * smooth(i as f64 * h);
    }
    let remainder = acc * h / 3.0;
    -(th * (2.0 * th).ln() - th + remainder)
}
