//! Cauchy-problem time stepping and front diagnostics (placeholder; the
//! stepper lands with the traveling-front module).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PdeError {
    #[error("placeholder")]
    Placeholder,
}

/// A spatial snapshot on a uniform grid: `values[i]` lives at `x0 + i h`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    pub x0: f64,
    pub h: f64,
    pub values: Vec<f64>,
}

impl GridFunction {
    pub fn sample<F: Fn(f64) -> f64>(x0: f64, h: f64, n: usize, f: F) -> Self {
        let values = (0..n).map(|i| f(x0 + i as f64 * h)).collect();
        GridFunction { x0, h, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.h
    }

    pub fn x_end(&self) -> f64 {
        self.x(self.len().saturating_sub(1))
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Trapezoid-rule integral of the samples.
    pub fn mass(&self) -> f64 {
        crate::math::trapezoid(&self.values, self.h)
    }

    /// Linear interpolation; clamps outside the grid.
    pub fn interp(&self, x: f64) -> f64 {
        let t = (x - self.x0) / self.h;
        if t <= 0.0 {
            return self.values[0];
        }
        let n = self.len();
        if t >= (n - 1) as f64 {
            return self.values[n - 1];
        }
        let i = t.floor() as usize;
        let frac = t - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    /// Max-norm distance to another function on the same grid.
    pub fn max_abs_diff(&self, other: &GridFunction) -> f64 {
        assert_eq!(self.len(), other.len());
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: f64) -> GridFunction {
        GridFunction {
            x0: self.x0,
            h: self.h,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}
