//! Interaction-kernel catalog.
//!
//! The kernels are bounded with closed-form sup norms. `CosineDiff` and
//! `CosineY` admit an O(1) evaluation against a measure once weighted
//! cosine/sine moments of the measure are known, which the simulators
//! exploit (see [`TrigPath`]). In dimension d the scalar formulas act
//! componentwise, so the Euclidean sup norm picks up a factor sqrt(d).

use crate::error::Error;
use crate::Result;

/// Bounded interaction kernel K(x, y) acting componentwise in dimension d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    /// K = 0: no interaction.
    Zero,
    /// K(x, y) = a·cos(omega·(x - y)) per component.
    CosineDiff { amp: f64, freq: f64 },
    /// K(x, y) = a·tanh(y - x) per component: odd, attracting.
    TanhAttract { amp: f64 },
    /// K(x, y) = a·(y - x)·exp(-(y - x)^2 / 2) per component.
    BoundedGauss { amp: f64 },
    /// K(x, y) = a·cos(y) per component: independent of x.
    CosineY { amp: f64 },
}

/// Trigonometric fast-path descriptor: the field K*mu evaluated at x equals
/// `amp·(cos(freq·x)·S_c + sin(freq·x)·S_s)` for `CosineDiff` and
/// `amp·S_c` for `CosineY`, where S_c, S_s are the weighted cosine/sine
/// moments of mu at frequency `freq`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TrigPath {
    CosineDiff { amp: f64, freq: f64 },
    CosineY { amp: f64 },
}

impl Kernel {
    /// Analytic supremum of a single component.
    pub fn component_sup(&self) -> f64 {
        match *self {
            Kernel::Zero => 0.0,
            Kernel::CosineDiff { amp, .. } => amp.abs(),
            Kernel::TanhAttract { amp } => amp.abs(),
            Kernel::BoundedGauss { amp } => amp.abs() * (-0.5f64).exp(),
            Kernel::CosineY { amp } => amp.abs(),
        }
    }

    /// Euclidean sup norm in dimension `dim` (componentwise action).
    pub fn sup_norm(&self, dim: usize) -> f64 {
        self.component_sup() * (dim as f64).sqrt()
    }

    /// Scalar evaluation for d = 1. The hot path of every simulator.
    #[inline]
    pub fn eval1(&self, x: f64, y: f64) -> f64 {
        match *self {
            Kernel::Zero => 0.0,
            Kernel::CosineDiff { amp, freq } => amp * (freq * (x - y)).cos(),
            Kernel::TanhAttract { amp } => amp * (y - x).tanh(),
            Kernel::BoundedGauss { amp } => {
                let z = y - x;
                amp * z * (-0.5 * z * z).exp()
            }
            Kernel::CosineY { amp } => amp * y.cos(),
        }
    }

    /// Componentwise evaluation in dimension d, writing into `out`.
    pub fn eval(&self, x: &[f64], y: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), y.len());
        debug_assert_eq!(x.len(), out.len());
        for c in 0..x.len() {
            out[c] = self.eval1(x[c], y[c]);
        }
    }

    /// Fast-path descriptor when the kernel is trigonometric.
    pub fn trig_path(&self) -> Option<TrigPath> {
        match *self {
            Kernel::CosineDiff { amp, freq } => Some(TrigPath::CosineDiff { amp, freq }),
            Kernel::CosineY { amp } => Some(TrigPath::CosineY { amp }),
            _ => None,
        }
    }

    /// Human-readable identifier used in manifests and store headers.
    pub fn id(&self) -> String {
        match *self {
            Kernel::Zero => "zero".to_string(),
            Kernel::CosineDiff { amp, freq } => format!("cosine_diff(a={amp},omega={freq})"),
            Kernel::TanhAttract { amp } => format!("tanh_attract(a={amp})"),
            Kernel::BoundedGauss { amp } => format!("bounded_gauss(a={amp})"),
            Kernel::CosineY { amp } => format!("cosine_y(a={amp})"),
        }
    }
}

/// Evaluate (K * nu)(x) for an atomic measure nu given as `(point, weight)`
/// pairs, d = 1. Weights must be finite; unless `signed` is set they must
/// form a probability vector (sum 1 within 1e-12, nonnegative).
pub fn kernel_convolve_measure(
    kernel: &Kernel,
    atoms: &[(f64, f64)],
    x: f64,
    signed: bool,
) -> Result<f64> {
    let mut sum_w = 0.0;
    for &(_, w) in atoms {
        if !w.is_finite() {
            return Err(Error::Invariant("non-finite weight in atomic measure".into()));
        }
        sum_w += w;
        if !signed && w < 0.0 {
            return Err(Error::Invariant("negative weight in probability measure".into()));
        }
    }
    if !signed && (sum_w - 1.0).abs() > 1e-12 {
        return Err(Error::Invariant(format!(
            "atomic weights sum to {sum_w}, expected 1 within 1e-12"
        )));
    }
    Ok(atoms.iter().map(|&(y, w)| w * kernel.eval1(x, y)).sum())
}
