use super::grid::{GridSpec, Side};
use crate::error::{check_len, Result};
use crate::linalg::{SparseMatrix, SymTridiagonal};

/// How `(f, φ_k)` is evaluated on each triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoadRule {
    /// Integrate the P1 interpolant of `f` against the hat functions, i.e. apply
    /// the consistent element mass matrix to the vertex values of `f`.
    #[default]
    Interpolated,
    /// Collapsed 4×4 Gauss rule, exact for polynomials of degree 7.
    Exact,
}

/// One triangle of the criss grid: physical vertices and the local unknown
/// index of each vertex (`None` on the Dirichlet boundary).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Triangle {
    pub vertices: [(f64, f64); 3],
    pub nodes: [Option<usize>; 3],
}

impl Triangle {
    pub fn area(&self) -> f64 {
        let [(x0, y0), (x1, y1), (x2, y2)] = self.vertices;
        0.5 * ((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)).abs()
    }

    /// Constant gradients of the three barycentric coordinates.
    pub fn gradients(&self) -> [(f64, f64); 3] {
        let [(x0, y0), (x1, y1), (x2, y2)] = self.vertices;
        let det = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0);
        [
            ((y1 - y2) / det, (x2 - x1) / det),
            ((y2 - y0) / det, (x0 - x2) / det),
            ((y0 - y1) / det, (x1 - x0) / det),
        ]
    }

    pub fn stiffness(&self) -> [[f64; 3]; 3] {
        let g = self.gradients();
        let a = self.area();
        let mut k = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                k[i][j] = a * (g[i].0 * g[j].0 + g[i].1 * g[j].1);
            }
        }
        k
    }

    pub fn mass(&self) -> [[f64; 3]; 3] {
        let a = self.area() / 12.0;
        let mut m = [[a; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2.0 * a;
        }
        m
    }

    pub fn point(&self, l1: f64, l2: f64) -> (f64, f64) {
        let [(x0, y0), (x1, y1), (x2, y2)] = self.vertices;
        (
            x0 + l1 * (x1 - x0) + l2 * (x2 - x0),
            y0 + l1 * (y1 - y0) + l2 * (y2 - y0),
        )
    }
}

/// Every triangle of the subdomain, each cell cut by its `/` diagonal.
pub(crate) fn triangles(grid: &GridSpec, side: Side) -> Vec<Triangle> {
    let cells = grid.cells();
    let scale = cells as f64;
    let mut out = Vec::with_capacity(2 * cells * grid.columns(side));
    for ix in grid.cell_columns(side) {
        for iy in 0..cells {
            let corners = [(ix, iy), (ix + 1, iy), (ix + 1, iy + 1), (ix, iy + 1)];
            for tri in [[0, 1, 2], [0, 2, 3]] {
                let v = tri.map(|k| corners[k]);
                out.push(Triangle {
                    vertices: v.map(|(a, b)| (a as f64 / scale, b as f64 / scale)),
                    nodes: v.map(|(a, b)| grid.node_at(side, a, b)),
                });
            }
        }
    }
    out
}

fn assemble_element_matrix(grid: &GridSpec, side: Side, local: impl Fn(&Triangle) -> [[f64; 3]; 3]) -> SparseMatrix {
    let n = grid.subdomain_unknowns(side);
    let mut triplets = Vec::new();
    for t in triangles(grid, side) {
        let k = local(&t);
        for (a, na) in t.nodes.iter().enumerate() {
            let Some(i) = na else { continue };
            for (b, nb) in t.nodes.iter().enumerate() {
                if let Some(j) = nb {
                    triplets.push((*i, *j, k[a][b]));
                }
            }
        }
    }
    SparseMatrix::from_triplets(n, n, &triplets).pruned(1e-14)
}

/// Five-point Laplacian (scaled by `h²`, i.e. diagonal 4 and neighbour
/// couplings −1) on the unknowns of one subdomain, with every neighbour
/// outside the subdomain treated as a homogeneous Dirichlet node.
pub fn assemble_a0(grid: &GridSpec, side: Side) -> SparseMatrix {
    let m = grid.n_interface();
    let cols = grid.columns(side);
    let n = cols * m;
    let mut t = Vec::with_capacity(5 * n);
    for c in 1..=cols {
        for r in 1..=m {
            let i = grid.local_index(c, r);
            t.push((i, i, 4.0));
            if r > 1 {
                t.push((i, i - 1, -1.0));
            }
            if r < m {
                t.push((i, i + 1, -1.0));
            }
            if c > 1 {
                t.push((i, i - m, -1.0));
            }
            if c < cols {
                t.push((i, i + m, -1.0));
            }
        }
    }
    SparseMatrix::from_triplets(n, n, &t)
}

/// P1 stiffness of the subdomain with homogeneous Dirichlet data on the outer
/// boundary and a natural condition on the interface, assembled element by
/// element. Equals `A₀ − Rᵀ A_Γ R`.
pub fn assemble_subdomain_stiffness(grid: &GridSpec, side: Side) -> SparseMatrix {
    assemble_element_matrix(grid, side, Triangle::stiffness)
}

/// P1 mass matrix of the subdomain unknowns.
pub fn assemble_subdomain_mass(grid: &GridSpec, side: Side) -> SparseMatrix {
    assemble_element_matrix(grid, side, Triangle::mass)
}

/// `M_Γ = (h/6)·tridiag(1, 4, 1)`, the Gram matrix of the interface hats.
pub fn assemble_interface_mass(grid: &GridSpec) -> SymTridiagonal {
    let h = grid.h();
    SymTridiagonal::toeplitz(grid.n_interface(), 4.0 * h / 6.0, h / 6.0)
}

/// `A_Γ = ½·tridiag(−1, 4, −1)`, the interface block removed from `A₀` by the
/// natural boundary condition.
pub fn assemble_interface_stiffness(grid: &GridSpec) -> SymTridiagonal {
    SymTridiagonal::toeplitz(grid.n_interface(), 2.0, -0.5)
}

/// `R_h v`: the interface block of a subdomain vector.
pub fn apply_restriction<'a>(grid: &GridSpec, side: Side, v: &'a [f64]) -> Result<&'a [f64]> {
    check_len(grid.subdomain_unknowns(side), v.len())?;
    Ok(&v[grid.interface_offset(side)..])
}

/// `R_hᵀ g`: pads an interface vector with zeros.
pub fn apply_restriction_adjoint(grid: &GridSpec, side: Side, g: &[f64]) -> Result<Vec<f64>> {
    check_len(grid.n_interface(), g.len())?;
    let mut v = vec![0.0; grid.subdomain_unknowns(side)];
    v[grid.interface_offset(side)..].copy_from_slice(g);
    Ok(v)
}

// Collapsed Gauss-Legendre on the reference triangle, as (l1, l2, weight)
// with weights summing to 1/2.
fn collapsed_gauss() -> Vec<(f64, f64, f64)> {
    const X: [f64; 4] = [
        -0.861_136_311_594_052_6,
        -0.339_981_043_584_856_3,
        0.339_981_043_584_856_3,
        0.861_136_311_594_052_6,
    ];
    const W: [f64; 4] = [
        0.347_854_845_137_453_9,
        0.652_145_154_862_546_1,
        0.652_145_154_862_546_1,
        0.347_854_845_137_453_9,
    ];
    let mut pts = Vec::with_capacity(16);
    for (xa, wa) in X.iter().zip(W) {
        for (xb, wb) in X.iter().zip(W) {
            let s = 0.5 * (xa + 1.0);
            let t = 0.5 * (xb + 1.0);
            pts.push((s, t * (1.0 - s), wa * wb * 0.25 * (1.0 - s)));
        }
    }
    pts
}

/// `(f, φ_k)_{Ω_i}` for every unknown of the subdomain.
pub fn assemble_load(grid: &GridSpec, side: Side, f: &dyn Fn(f64, f64) -> f64, rule: LoadRule) -> Vec<f64> {
    let mut b = vec![0.0; grid.subdomain_unknowns(side)];
    let quad = collapsed_gauss();
    for t in triangles(grid, side) {
        let local = match rule {
            LoadRule::Interpolated => {
                let fv = t.vertices.map(|(x, y)| f(x, y));
                let m = t.mass();
                [0, 1, 2].map(|a| (0..3).map(|c| m[a][c] * fv[c]).sum::<f64>())
            }
            LoadRule::Exact => {
                let jac = 2.0 * t.area();
                let mut acc = [0.0; 3];
                for &(l1, l2, w) in &quad {
                    let (x, y) = t.point(l1, l2);
                    let fw = jac * w * f(x, y);
                    acc[0] += fw * (1.0 - l1 - l2);
                    acc[1] += fw * l1;
                    acc[2] += fw * l2;
                }
                acc
            }
        };
        for (a, node) in t.nodes.iter().enumerate() {
            if let Some(i) = node {
                b[*i] += local[a];
            }
        }
    }
    b
}

/// Single-domain P1 system on the whole square (global numbering of
/// [`GridSpec::global_index`]): the five-point matrix and the load vector.
pub fn assemble_global(
    grid: &GridSpec,
    f: &dyn Fn(f64, f64) -> f64,
    rule: LoadRule,
) -> Result<(SparseMatrix, Vec<f64>)> {
    let m = grid.n_interface();
    let mut t = Vec::with_capacity(5 * m * m);
    for ix in 1..=m {
        for iy in 1..=m {
            let i = (ix - 1) * m + (iy - 1);
            t.push((i, i, 4.0));
            let neighbours = [(ix - 1, iy), (ix + 1, iy), (ix, iy - 1), (ix, iy + 1)];
            for j in neighbours.into_iter().filter_map(|(a, b)| grid.global_index(a, b)) {
                t.push((i, j, -1.0));
            }
        }
    }
    let a = SparseMatrix::from_triplets(m * m, m * m, &t);
    let left = assemble_load(grid, Side::Left, f, rule);
    let right = assemble_load(grid, Side::Right, f, rule);
    // interface entries appear in both halves and must be summed
    let mut b = grid.merge(&left, &right)?;
    let ic = grid.interface_column();
    let off = grid.interface_offset(Side::Right);
    for r in 1..=m {
        b[(ic - 1) * m + (r - 1)] += right[off + r - 1];
    }
    Ok((a, b))
}
