//! Gauss-Legendre quadrature on [0, 1] and closed-form integrals of the
//! trigonometric families sin(k pi x), cos(k pi x) over subintervals.

use std::f64::consts::PI;

/// Nodes and weights of the n-point Gauss-Legendre rule mapped to [0, 1].
///
/// Nodes are found by Newton iteration on the Legendre polynomial; the
/// rule is exact for polynomials of degree 2n - 1 and converges
/// spectrally for analytic integrands.
pub fn gauss_legendre_01(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "quadrature order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess on (-1, 1)
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map from (-1, 1) to (0, 1); nodes come out descending in x
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// integral of sin(k pi x) over [a, b]
pub fn int_sin(k: u32, a: f64, b: f64) -> f64 {
    let kp = k as f64 * PI;
    ((kp * a).cos() - (kp * b).cos()) / kp
}

/// integral of cos(k pi x) over [a, b]
pub fn int_cos(k: u32, a: f64, b: f64) -> f64 {
    let kp = k as f64 * PI;
    ((kp * b).sin() - (kp * a).sin()) / kp
}
