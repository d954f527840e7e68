//! The gamma subordinator `L`.
//!
//! `L` has Levy density `v(x) = alpha x^{-1} e^{-beta x}` on `x > 0`, so
//! increments over `(s, t]` are Gamma(alpha (t-s), beta) distributed. Two
//! path representations are provided: exact marginal increments on a grid,
//! and a jump series keeping every jump larger than a truncation level
//! `eps` (the process has infinite activity, so some truncation is
//! unavoidable for jump-level output).

use rand::Rng;
use rand_distr::{Distribution, Gamma, Open01, Poisson};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::special::exp_integral_e1;
use crate::Result;

/// Parameters `(alpha, beta)` of the gamma driver: `alpha` scales jump
/// intensity per unit time, `beta` is the inverse jump-size scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaParams {
    alpha: f64,
    beta: f64,
}

impl GammaParams {
    /// Both parameters must be finite and strictly positive.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "alpha must be positive and finite, got {alpha}"
            )));
        }
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "beta must be positive and finite, got {beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Levy density `v(x) = alpha x^{-1} e^{-beta x}` for `x > 0`.
    pub fn levy_density(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!(
                "levy density is supported on x > 0, got {x}"
            )));
        }
        Ok(self.alpha * (-self.beta * x).exp() / x)
    }

    /// Tail mass `nu((x, inf)) = alpha * E1(beta x)` for `x > 0`.
    ///
    /// Strictly decreasing in `x`; this is the jump-series intensity above a
    /// truncation level.
    pub fn levy_tail(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!(
                "levy tail is defined for x > 0, got {x}"
            )));
        }
        Ok(self.alpha * exp_integral_e1(self.beta * x))
    }

    /// Mean of the jump mass discarded below `eps`, per unit time:
    /// `∫_0^eps x v(x) dx = (alpha/beta)(1 - e^{-beta eps})`.
    pub fn discarded_mass_rate(&self, eps: f64) -> f64 {
        self.alpha / self.beta * (1.0 - (-self.beta * eps).exp())
    }

    /// One exact increment `L_{t+dt} - L_t ~ Gamma(alpha dt, beta)`.
    ///
    /// Valid for any `dt > 0`, including shapes far below one.
    pub fn sample_increment<R: Rng + ?Sized>(&self, dt: f64, rng: &mut R) -> Result<f64> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::Domain(format!("dt must be positive, got {dt}")));
        }
        let gamma = Gamma::new(self.alpha * dt, 1.0 / self.beta)
            .map_err(|e| Error::InvalidParameter(format!("gamma sampler: {e}")))?;
        Ok(gamma.sample(rng))
    }

    /// Jump-series path on `[0, T]` keeping jumps larger than `eps`.
    ///
    /// Jumps above `eps` form a Poisson process with intensity
    /// `levy_tail(eps)` per unit time; sizes are drawn by inverting the
    /// normalized tail, times are uniform on `(0, T]`. With `compensate`
    /// the mean of the discarded sub-`eps` jumps is added back as a
    /// deterministic drift.
    pub fn sample_jump_series<R: Rng + ?Sized>(
        &self,
        horizon: f64,
        eps: f64,
        compensate: bool,
        rng: &mut R,
    ) -> Result<DriverJumps> {
        if !(horizon > 0.0) || !horizon.is_finite() {
            return Err(Error::Domain(format!(
                "horizon must be positive, got {horizon}"
            )));
        }
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::Domain(format!(
                "eps must be positive (the driver has infinitely many jumps below any level), got {eps}"
            )));
        }

        let tail = self.levy_tail(eps)?;
        let mean_count = tail * horizon;
        let count = if mean_count > 0.0 {
            let poisson = Poisson::new(mean_count)
                .map_err(|e| Error::InvalidParameter(format!("poisson sampler: {e}")))?;
            poisson.sample(rng) as usize
        } else {
            0
        };

        let mut jumps: Vec<(f64, f64)> = Vec::with_capacity(count);
        for _ in 0..count {
            // u in (0, 1]: times land in (0, T], never exactly 0.
            let u: f64 = 1.0 - rng.random::<f64>();
            let time = u * horizon;
            let v: f64 = rng.sample(Open01);
            let size = self.invert_tail(eps, tail, v);
            jumps.push((time, size));
        }
        // Stable order so that probability-zero ties resolve deterministically.
        jumps.sort_by(|a, b| a.0.total_cmp(&b.0));

        let drift_rate = if compensate {
            self.discarded_mass_rate(eps)
        } else {
            0.0
        };

        Ok(DriverJumps {
            horizon,
            times: jumps.iter().map(|j| j.0).collect(),
            sizes: jumps.iter().map(|j| j.1).collect(),
            eps,
            compensated: compensate,
            drift_rate,
        })
    }

    /// Solve `levy_tail(s) = u * tail_eps` for `s >= eps`.
    ///
    /// Works in `w = beta s`: bisection on `[beta eps, beta eps + 50]` with
    /// Newton polish (`d/dw E1(w) = -e^{-w}/w`), relative tolerance 1e-10.
    /// The bracket misses tail mass below `e^{-50}`, unreachable from a
    /// 53-bit uniform.
    fn invert_tail(&self, eps: f64, tail_eps: f64, u: f64) -> f64 {
        let target = u * tail_eps / self.alpha; // solve E1(w) = target
        let mut lo = self.beta * eps;
        let mut hi = lo + 50.0;
        let g = |w: f64| exp_integral_e1(w) - target;

        // E1 is decreasing: g(lo) >= 0 >= g(hi).
        let mut w = 0.5 * (lo + hi);
        for _ in 0..200 {
            let gw = g(w);
            if gw > 0.0 {
                lo = w;
            } else {
                hi = w;
            }
            // Newton step; keep it only if it stays inside the bracket.
            let slope = -(-w).exp() / w;
            let newton = w - gw / slope;
            w = if newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
            if (hi - lo) <= 1e-10 * w.abs() {
                break;
            }
        }
        let s = w / self.beta;
        if s <= eps {
            eps.next_up()
        } else {
            s
        }
    }
}

/// A truncated jump-series realization of the driver on `[0, T]`.
///
/// `L_t = drift_rate * t + sum of sizes with time <= t`; paths are
/// non-decreasing by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DriverJumps {
    horizon: f64,
    times: Vec<f64>,
    sizes: Vec<f64>,
    eps: f64,
    compensated: bool,
    drift_rate: f64,
}

impl DriverJumps {
    /// Assemble a jump series from raw parts, enforcing the structural
    /// invariants (ascending times in `(0, T]`, sizes above `eps`).
    pub fn from_parts(
        horizon: f64,
        times: Vec<f64>,
        sizes: Vec<f64>,
        eps: f64,
        drift_rate: f64,
    ) -> Result<Self> {
        let d = DriverJumps {
            horizon,
            times,
            sizes,
            eps,
            compensated: drift_rate != 0.0,
            drift_rate,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn sizes(&self) -> &[f64] {
        &self.sizes
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn compensated(&self) -> bool {
        self.compensated
    }

    pub fn drift_rate(&self) -> f64 {
        self.drift_rate
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Path value `L_t`.
    pub fn value_at(&self, t: f64) -> f64 {
        let upto = self.times.partition_point(|&s| s <= t);
        self.drift_rate * t + self.sizes[..upto].iter().sum::<f64>()
    }

    /// Terminal value `L_T`.
    pub fn terminal(&self) -> f64 {
        self.drift_rate * self.horizon + self.sizes.iter().sum::<f64>()
    }

    /// Restrict to jumps above a coarser truncation level.
    ///
    /// Thinning realizes the exact coupling between truncation levels: the
    /// jumps of the `coarser_eps` series are precisely the jumps of this
    /// series exceeding `coarser_eps`. Only uncompensated drivers can be
    /// thinned (the drift would have to be recomputed against parameters
    /// the path does not carry).
    pub fn thin(&self, coarser_eps: f64) -> Result<DriverJumps> {
        if self.compensated {
            return Err(Error::InvalidParameter(
                "cannot thin a compensated driver".into(),
            ));
        }
        if coarser_eps < self.eps {
            return Err(Error::InvalidParameter(format!(
                "thinning level {coarser_eps} is finer than the path's truncation {}",
                self.eps
            )));
        }
        let mut times = Vec::new();
        let mut sizes = Vec::new();
        for (&t, &s) in self.times.iter().zip(&self.sizes) {
            if s > coarser_eps {
                times.push(t);
                sizes.push(s);
            }
        }
        Ok(DriverJumps {
            horizon: self.horizon,
            times,
            sizes,
            eps: coarser_eps,
            compensated: false,
            drift_rate: 0.0,
        })
    }

    /// Check the structural invariants.
    pub fn validate(&self) -> Result<()> {
        if !(self.horizon > 0.0) {
            return Err(Error::InvalidPath(format!(
                "horizon must be positive, got {}",
                self.horizon
            )));
        }
        if self.times.len() != self.sizes.len() {
            return Err(Error::InvalidPath(format!(
                "{} times vs {} sizes",
                self.times.len(),
                self.sizes.len()
            )));
        }
        if self.drift_rate < 0.0 {
            return Err(Error::InvalidPath(format!(
                "negative drift rate {}",
                self.drift_rate
            )));
        }
        let mut prev = 0.0;
        for (i, (&t, &s)) in self.times.iter().zip(&self.sizes).enumerate() {
            if !(t > prev) && !(i == 0 && t > 0.0) {
                return Err(Error::InvalidPath(format!(
                    "times not strictly ascending at index {i}: {prev} then {t}"
                )));
            }
            if t > self.horizon {
                return Err(Error::InvalidPath(format!(
                    "jump time {t} beyond horizon {}",
                    self.horizon
                )));
            }
            if self.eps > 0.0 && !(s > self.eps) {
                return Err(Error::InvalidPath(format!(
                    "jump size {s} at index {i} not above truncation {}",
                    self.eps
                )));
            }
            if !(s > 0.0) {
                return Err(Error::InvalidPath(format!(
                    "jump size {s} at index {i} not positive"
                )));
            }
            prev = t;
        }
        Ok(())
    }
}
