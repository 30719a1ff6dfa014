use super::assembly::{assemble_subdomain_mass, assemble_subdomain_stiffness};
use super::grid::{GridSpec, Side};
use crate::error::{check_len, Result};
use crate::linalg::dot;

/// `‖u_I − u_h‖_{L²}` and `|u_I − u_h|_{H¹}` over the whole square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorNorms {
    pub l2: f64,
    pub h1_semi: f64,
}

impl ErrorNorms {
    pub fn l2_squared(&self) -> f64 {
        self.l2 * self.l2
    }

    pub fn h1_semi_squared(&self) -> f64 {
        self.h1_semi * self.h1_semi
    }
}

/// Norms of the difference between the nodal interpolant of `exact` and the
/// discrete solution given by its two subdomain vectors, evaluated exactly
/// with the element mass and stiffness forms.
pub fn error_norms(
    grid: &GridSpec,
    left: &[f64],
    right: &[f64],
    exact: &dyn Fn(f64, f64) -> f64,
) -> Result<ErrorNorms> {
    let mut l2 = 0.0;
    let mut h1 = 0.0;
    for (side, u) in [(Side::Left, left), (Side::Right, right)] {
        check_len(grid.subdomain_unknowns(side), u.len())?;
        let e: Vec<f64> = u
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let (x, y) = grid.coordinates(side, k);
                exact(x, y) - v
            })
            .collect();
        let m = assemble_subdomain_mass(grid, side);
        let a = assemble_subdomain_stiffness(grid, side);
        l2 += dot(&m.spmv(&e)?, &e);
        h1 += dot(&a.spmv(&e)?, &e);
    }
    Ok(ErrorNorms {
        l2: l2.max(0.0).sqrt(),
        h1_semi: h1.max(0.0).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interpolant(g: &GridSpec, side: Side, f: &dyn Fn(f64, f64) -> f64) -> Vec<f64> {
        (0..g.subdomain_unknowns(side))
            .map(|k| {
                let (x, y) = g.coordinates(side, k);
                f(x, y)
            })
            .collect()
    }

    #[test]
    fn interpolant_has_zero_error() {
        let g = GridSpec::new(3).unwrap();
        let u = |x: f64, y: f64| x * (1.0 - x) * y * (1.0 - y);
        let e = error_norms(
            &g,
            &interpolant(&g, Side::Left, &u),
            &interpolant(&g, Side::Right, &u),
            &u,
        )
        .unwrap();
        assert_eq!(e, ErrorNorms { l2: 0.0, h1_semi: 0.0 });
    }

    #[test]
    fn hat_function_norms() {
        // single interior hat at (1/4, 1/2) on n = 2: ‖φ‖² = h²/2, |φ|²_H1 = 4
        let g = GridSpec::new(2).unwrap();
        let mut left = vec![0.0; 6];
        left[1] = -1.0;
        let e = error_norms(&g, &left, &vec![0.0; 6], &|_, _| 0.0).unwrap();
        let h = g.h();
        assert!((e.l2_squared() - h * h / 2.0).abs() < 1e-15);
        assert!((e.h1_semi_squared() - 4.0).abs() < 1e-14);
    }
}
