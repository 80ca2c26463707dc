//! Discretized 1-D field configurations and the Gaussian wavefunctionals
//! built on them.

use serde::Serialize;
use std::f64::consts::PI;
use std::io::{self, Write};

use crate::error::FieldError;
use crate::format::sig17;
use crate::nucleation::normalization_constant;
use crate::potential::PotentialParams;
use crate::vacua::VacuumPair;

/// Height of the thin-wall box: one full winding.
pub const BOX_HEIGHT: f64 = 2.0 * PI;
pub const MIN_BOX_GRID_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldGrid {
    xs: Vec<f64>,
    values: Vec<f64>,
}

impl FieldGrid {
    pub fn new(xs: Vec<f64>, values: Vec<f64>) -> Result<Self, FieldError> {
        if xs.len() != values.len() {
            return Err(FieldError::LengthMismatch(xs.len(), values.len()));
        }
        if xs.len() < 2 {
            return Err(FieldError::TooShort(xs.len()));
        }
        if let Some(i) = xs.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(FieldError::NotIncreasing(i + 1));
        }
        Ok(Self { xs, values })
    }

    /// `n` evenly spaced points on `[lo, hi]`, both ends included.
    pub fn uniform(lo: f64, hi: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self, FieldError> {
        let xs = linspace(lo, hi, n);
        let values = xs.iter().map(|&x| f(x)).collect();
        Self::new(xs, values)
    }

    /// Same positions, new values.
    pub fn map_positions(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            xs: self.xs.clone(),
            values: self.xs.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn span(&self) -> f64 {
        self.xs[self.xs.len() - 1] - self.xs[0]
    }

    /// Trapezoid rule for ∫ g(x, φ(x)) dx.
    pub fn trapezoid(&self, g: impl Fn(f64, f64) -> f64) -> f64 {
        let mut prev = g(self.xs[0], self.values[0]);
        let mut sum = 0.0;
        for i in 1..self.xs.len() {
            let cur = g(self.xs[i], self.values[i]);
            sum += 0.5 * (prev + cur) * (self.xs[i] - self.xs[i - 1]);
            prev = cur;
        }
        sum
    }

    /// Two-column CSV with header `x,phi`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "x,phi")?;
        for (x, v) in self.xs.iter().zip(&self.values) {
            writeln!(w, "{},{}", sig17(*x), sig17(*v))?;
        }
        Ok(())
    }
}

pub(crate) fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

/// ∫[½(dφ/dx)² + V₁(φ)] dx with the Planck-time prefactor set to 1.
///
/// The gradient term is exact for the piecewise-linear interpolant; the
/// potential term uses the trapezoid rule.
pub fn static_action(params: &PotentialParams, grid: &FieldGrid) -> f64 {
    let gradient: f64 = grid
        .xs
        .windows(2)
        .zip(grid.values.windows(2))
        .map(|(x, v)| {
            let h = x[1] - x[0];
            let d = v[1] - v[0];
            0.5 * d * d / h
        })
        .sum();
    gradient + grid.trapezoid(|_, phi| params.v1(phi))
}

/// Ψ[φ] = c·exp(−α∫(φ − φ_C)² dx).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussianFunctional {
    center: FieldGrid,
    width_alpha: f64,
    norm_c: f64,
}

impl GaussianFunctional {
    pub fn new(center: FieldGrid, width_alpha: f64, norm_c: f64) -> Result<Self, FieldError> {
        if !(width_alpha > 0.0 && width_alpha.is_finite()) {
            return Err(FieldError::DomainError {
                name: "width_alpha",
                value: width_alpha,
            });
        }
        if !(norm_c > 0.0 && norm_c.is_finite()) {
            return Err(FieldError::DomainError {
                name: "norm_c",
                value: norm_c,
            });
        }
        Ok(Self {
            center,
            width_alpha,
            norm_c,
        })
    }

    pub fn center(&self) -> &FieldGrid {
        &self.center
    }

    pub fn width_alpha(&self) -> f64 {
        self.width_alpha
    }

    pub fn norm_c(&self) -> f64 {
        self.norm_c
    }

    pub fn evaluate(&self, phi: &FieldGrid) -> Result<f64, FieldError> {
        if phi.xs != self.center.xs {
            return Err(FieldError::GridMismatch);
        }
        let sq = phi
            .xs
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                let a = phi.values[i] - self.center.values[i];
                let b = phi.values[i + 1] - self.center.values[i + 1];
                0.5 * (a * a + b * b) * (w[1] - w[0])
            })
            .sum::<f64>();
        Ok(self.norm_c * (-self.width_alpha * sq).exp())
    }
}

pub fn evaluate_functional(g: &GaussianFunctional, phi: &FieldGrid) -> Result<f64, FieldError> {
    g.evaluate(phi)
}

/// Net winding (φ(x_last) − φ(x_first))/2π.
pub fn topological_charge(grid: &FieldGrid) -> f64 {
    (grid.values[grid.values.len() - 1] - grid.values[0]) / (2.0 * PI)
}

/// Momentum-space thin-wall profile √(2/π)·sin(kL/2)/k, with the k → 0
/// limit √(2/π)·L/2.
pub fn thin_wall_basis(k: f64, length_l: f64) -> f64 {
    let c = (2.0 / PI).sqrt();
    if k == 0.0 {
        c * length_l / 2.0
    } else {
        c * (k * length_l / 2.0).sin() / k
    }
}

fn in_support(x: f64, length_l: f64) -> bool {
    let slack = 1e-12 * length_l;
    x >= -slack && x <= length_l + slack
}

/// Box of the given height on `[0, L]`, zero elsewhere, sampled at
/// `grid_n` points across `[−L, 2L]`.
pub fn box_profile(length_l: f64, height: f64, grid_n: usize) -> Result<FieldGrid, FieldError> {
    if !(length_l > 0.0 && length_l.is_finite()) {
        return Err(FieldError::DomainError {
            name: "length_l",
            value: length_l,
        });
    }
    if grid_n < MIN_BOX_GRID_N {
        return Err(FieldError::DomainError {
            name: "grid_n",
            value: grid_n as f64,
        });
    }
    FieldGrid::uniform(-length_l, 2.0 * length_l, grid_n, |x| {
        if in_support(x, length_l) {
            height
        } else {
            0.0
        }
    })
}

/// Positions for a bubble of size `length_l`: `grid_n` points on `[−L, 2L]`.
pub fn bubble_layout(length_l: f64, grid_n: usize) -> Result<FieldGrid, FieldError> {
    box_profile(length_l, 0.0, grid_n)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairOptions {
    /// ε⁺ as a fraction of φ_T − φ_F.
    pub epsilon_plus_fraction: f64,
}

impl Default for PairOptions {
    fn default() -> Self {
        Self {
            epsilon_plus_fraction: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WavefunctionalPair {
    /// Centered on the constant false-vacuum configuration.
    pub initial: GaussianFunctional,
    /// Centered on the bubble: φ_T on `[0, L]`, φ_F outside.
    pub final_state: GaussianFunctional,
    /// φ₀ = φ_F + ε⁺ everywhere.
    pub reference: FieldGrid,
}

/// Initial and final Gaussian wavefunctionals for a vacuum pair, both with
/// α = 1/L and normalized by C₁ ({}_A) and C₂ ({}_B).
pub fn initial_final_pair(
    vacua: &VacuumPair,
    layout: &FieldGrid,
    opts: &PairOptions,
) -> Result<WavefunctionalPair, FieldError> {
    let length = vacua.require_length_scale()?;
    let alpha = 1.0 / length;
    let c1 = normalization_constant(vacua.brace_a, length)?;
    let c2 = normalization_constant(vacua.brace_b, length)?;
    let (phi_f, phi_t) = (vacua.phi_false, vacua.phi_true);
    let eps = opts.epsilon_plus_fraction * (phi_t - phi_f);

    let flat = layout.map_positions(|_| phi_f);
    let bubble = layout.map_positions(|x| if in_support(x, length) { phi_t } else { phi_f });
    let reference = layout.map_positions(|_| phi_f + eps);
    Ok(WavefunctionalPair {
        initial: GaussianFunctional::new(flat, alpha, c1)?,
        final_state: GaussianFunctional::new(bubble, alpha, c2)?,
        reference,
    })
}
