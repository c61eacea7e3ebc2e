//! Small numerical helpers shared across modules: deterministic reducers,
//! quadrature rules, interpolation and a tiny dense Cholesky.

/// Pairwise (tree) summation. Order-stable and accurate to ~eps·log2(n),
/// used wherever reducers must be reproducible to 1e-12.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Trapezoid rule over uniformly spaced samples.
pub fn trapezoid(values: &[f64], dx: f64) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let interior: f64 = pairwise_sum(&values[1..n - 1]);
    dx * (0.5 * values[0] + interior + 0.5 * values[n - 1])
}

/// Linear interpolation on a uniform grid with edge clamping.
/// `x0` is the coordinate of `values[0]`.
pub fn interp_linear(values: &[f64], x0: f64, dx: f64, x: f64) -> f64 {
    let n = values.len();
    debug_assert!(n >= 2);
    let s = (x - x0) / dx;
    if s <= 0.0 {
        return values[0];
    }
    if s >= (n - 1) as f64 {
        return values[n - 1];
    }
    let j = s.floor() as usize;
    let f = s - j as f64;
    values[j] * (1.0 - f) + values[j + 1] * f
}

/// Cubic (Catmull-Rom) interpolation on a uniform grid, clamped to linear on
/// the first and last intervals. Error O(h^4) for smooth data.
pub fn interp_cubic(values: &[f64], x0: f64, dx: f64, x: f64) -> f64 {
    let n = values.len();
    debug_assert!(n >= 2);
    let s = (x - x0) / dx;
    if s <= 0.0 {
        return values[0];
    }
    if s >= (n - 1) as f64 {
        return values[n - 1];
    }
    let j = s.floor() as usize;
    let f = s - j as f64;
    if j == 0 || j + 2 >= n {
        return values[j] * (1.0 - f) + values[j + 1] * f;
    }
    let (p0, p1, p2, p3) = (values[j - 1], values[j], values[j + 1], values[j + 2]);
    let a = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
    let b = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    let c = -0.5 * p0 + 0.5 * p2;
    ((a * f + b) * f + c) * f + p1
}

/// Gauss-Legendre nodes and weights on [-1, 1], 16 points.
/// Values from the standard tables, symmetric halves spelled out.
pub const GL16_NODES: [f64; 16] = [
    -0.9894009349916499,
    -0.9445750230732326,
    -0.8656312023878318,
    -0.7554044083550030,
    -0.6178762444026438,
    -0.4580167776572274,
    -0.2816035507792589,
    -0.0950125098376374,
    0.0950125098376374,
    0.2816035507792589,
    0.4580167776572274,
    0.6178762444026438,
    0.7554044083550030,
    0.8656312023878318,
    0.9445750230732326,
    0.9894009349916499,
];
pub const GL16_WEIGHTS: [f64; 16] = [
    0.0271524594117541,
    0.0622535239386479,
    0.0951585116824928,
    0.1246289712555339,
    0.1495959888165767,
    0.1691565193950025,
    0.1826034150449236,
    0.1894506104550685,
    0.1894506104550685,
    0.1826034150449236,
    0.1691565193950025,
    0.1495959888165767,
    0.1246289712555339,
    0.0951585116824928,
    0.0622535239386479,
    0.0271524594117541,
];

/// 16-point Gauss-Legendre quadrature of `f` over [a, b].
pub fn gl16<F: Fn(f64) -> f64>(a: f64, b: f64, f: F) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for i in 0..16 {
        acc += GL16_WEIGHTS[i] * f(mid + half * GL16_NODES[i]);
    }
    acc * half
}

/// Cholesky factorization of a small symmetric PSD matrix (row-major),
/// adding `jitter` on the diagonal when a pivot dips below zero within
/// tolerance. Returns the lower factor L with A = L·L^T.
pub fn cholesky_psd(a: &[f64], n: usize, jitter: f64) -> Option<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[i * n + j];
            for k in 0..j {
                sum -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                let mut d = sum;
                if d < 0.0 && d > -jitter {
                    d = 0.0;
                }
                d += jitter;
                if d < 0.0 {
                    return None;
                }
                l[i * n + i] = d.sqrt();
            } else {
                let piv = l[j * n + j];
                l[i * n + j] = if piv > 0.0 { sum / piv } else { 0.0 };
            }
        }
    }
    Some(l)
}

/// Sample mean and standard error of the mean.
pub fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let mean = pairwise_sum(values) / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let sq: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
    let var = pairwise_sum(&sq) / (n - 1) as f64;
    (mean, (var / n as f64).sqrt())
}

/// Kolmogorov-Smirnov distance between a sample and a CDF given as a
/// callable. The sample is sorted internally.
pub fn ks_distance<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> f64 {
    let mut xs = samples.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    for (k, x) in xs.iter().enumerate() {
        let c = cdf(*x);
        let lo = k as f64 / n;
        let hi = (k + 1) as f64 / n;
        d = d.max((c - lo).abs()).max((hi - c).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_small_input() {
        let v = [1.0, 2.0, 3.0, 4.5];
        assert_eq!(pairwise_sum(&v), (1.0 + 2.0) + (3.0 + 4.5));
    }

    #[test]
    fn trapezoid_integrates_linear_exactly() {
        let xs: Vec<f64> = (0..11).map(|k| k as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x + 1.0).collect();
        let got = trapezoid(&ys, 0.1);
        assert!((got - 2.0).abs() < 1e-14);
    }

    #[test]
    fn gl16_is_exact_on_polynomials() {
        // degree 31 is exact for 16-point Gauss-Legendre
        let got = gl16(0.0, 1.0, |x| x.powi(7));
        assert!((got - 0.125).abs() < 1e-14);
    }

    #[test]
    fn cubic_interp_reproduces_cubic_polynomials() {
        let xs: Vec<f64> = (0..50).map(|k| k as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|x| x * x * x - x).collect();
        let x = 2.3456;
        let got = interp_cubic(&ys, 0.0, 0.1, x);
        assert!((got - (x * x * x - x)).abs() < 1e-12);
    }

    #[test]
    fn cholesky_roundtrips_a_2x2() {
        let a = [2.0, 0.3, 0.3, 1.0];
        let l = cholesky_psd(&a, 2, 0.0).unwrap();
        let a00 = l[0] * l[0];
        let a10 = l[2] * l[0];
        let a11 = l[2] * l[2] + l[3] * l[3];
        assert!((a00 - 2.0).abs() < 1e-14);
        assert!((a10 - 0.3).abs() < 1e-14);
        assert!((a11 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn ks_distance_of_perfect_grid_sample() {
        // uniform grid quantiles against U[0,1]: distance 1/(2n) + 1/(2n)
        let n = 100;
        let xs: Vec<f64> = (0..n).map(|k| (k as f64 + 0.5) / n as f64).collect();
        let d = ks_distance(&xs, |x| x.clamp(0.0, 1.0));
        assert!((d - 0.005).abs() < 1e-12);
    }
}
