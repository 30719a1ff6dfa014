use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{norm2, LinearOperator};
use crate::error::{Error, Result};

/// Settings for [`power_spectral_radius`].
#[derive(Debug, Clone, Copy)]
pub struct PowerOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub seed: u64,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 10_000,
            seed: 0x5eed,
        }
    }
}

/// Estimates `max |λ|` of an operator with real spectrum by power iteration.
///
/// Each step applies the operator twice and takes `sqrt(‖A²x‖/‖x‖)`, so a
/// dominant pair `±λ` does not cause oscillation. The estimate sequence
/// converges linearly; iteration stops once the Aitken-extrapolated distance
/// to the limit falls below `tol · estimate`.
pub fn power_spectral_radius<A: LinearOperator + ?Sized>(a: &A, opts: PowerOptions) -> Result<f64> {
    let n = a.dim();
    if n == 0 {
        return Ok(0.0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let nx = norm2(&x);
    x.iter_mut().for_each(|v| *v /= nx);
    let mut y = vec![0.0; n];
    let mut z = vec![0.0; n];

    let mut history: Vec<f64> = Vec::new();
    for _ in 0..opts.max_iter {
        a.apply(&x, &mut y);
        a.apply(&y, &mut z);
        let nz = norm2(&z);
        if nz == 0.0 {
            return Ok(0.0);
        }
        let est = nz.sqrt();
        z.iter().zip(x.iter_mut()).for_each(|(zi, xi)| *xi = zi / nz);
        history.push(est);

        let k = history.len();
        if k >= 3 {
            let d1 = history[k - 1] - history[k - 2];
            let d0 = history[k - 2] - history[k - 3];
            if d1 == 0.0 {
                return Ok(est);
            }
            let q = (d1 / d0).abs();
            let remaining = if q < 1.0 && d0 != 0.0 {
                d1.abs() * q / (1.0 - q)
            } else {
                f64::INFINITY
            };
            if remaining <= opts.tol * est && d1.abs() <= opts.tol * est {
                return Ok(est);
            }
        }
    }
    Err(Error::NotConverged {
        solver: "power iteration",
        iterations: opts.max_iter,
        residual: history.last().copied().unwrap_or(f64::NAN),
    })
}
