use crate::error::{Error, Result};

/// Which half of the split square a subdomain occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Ω₁, to the left of the interface.
    Left,
    /// Ω₂, to the right of the interface.
    Right,
}

/// Uniform criss grid of the unit square with a vertical interface.
///
/// The square has `2n` cells per direction, `h = 1/(2n)`. The interface is the
/// grid line `x = interface_column · h` (the midline unless built with
/// [`GridSpec::with_interface`]).
///
/// Subdomain unknowns are numbered column by column, bottom to top inside a
/// column, with the interface column last. Left columns count from `x = h`
/// rightwards, right columns count from `x = 1 − h` leftwards, so in both
/// subdomains the interface block is the trailing `2n − 1` entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    n: usize,
    interface_column: usize,
}

impl GridSpec {
    /// Grid split at `x = 1/2`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("grid parameter n must be at least 1".into()));
        }
        Ok(Self { n, interface_column: n })
    }

    /// Grid split at `x = interface_column / (2n)`.
    pub fn with_interface(n: usize, interface_column: usize) -> Result<Self> {
        let g = Self::new(n)?;
        if interface_column == 0 || interface_column >= 2 * n {
            return Err(Error::InvalidArgument(format!(
                "interface column {interface_column} must lie strictly inside 1..{}",
                2 * n
            )));
        }
        Ok(Self { interface_column, ..g })
    }

    /// Off-centre split whose interface is the grid line nearest `x = 1/3`.
    pub fn third_split(n: usize) -> Result<Self> {
        let col = ((2 * n) as f64 / 3.0).round().max(1.0) as usize;
        Self::with_interface(n, col.min(2 * n - 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        1.0 / self.cells() as f64
    }

    /// Cells per direction, `2n`.
    pub fn cells(&self) -> usize {
        2 * self.n
    }

    pub fn interface_column(&self) -> usize {
        self.interface_column
    }

    pub fn is_symmetric(&self) -> bool {
        self.interface_column == self.n
    }

    /// Interface nodes, `2n − 1`.
    pub fn n_interface(&self) -> usize {
        2 * self.n - 1
    }

    /// Columns of unknowns in a subdomain, interface column included.
    pub fn columns(&self, side: Side) -> usize {
        match side {
            Side::Left => self.interface_column,
            Side::Right => self.cells() - self.interface_column,
        }
    }

    pub fn subdomain_unknowns(&self, side: Side) -> usize {
        self.columns(side) * self.n_interface()
    }

    /// Unknowns per subdomain on the symmetric split, `(2n − 1)·n`.
    pub fn n_subdomain_unknowns(&self) -> usize {
        self.subdomain_unknowns(Side::Left)
    }

    /// Offset of the interface block inside a subdomain vector.
    pub fn interface_offset(&self, side: Side) -> usize {
        self.subdomain_unknowns(side) - self.n_interface()
    }

    /// Local index of the node in column `c` (1-based from the outer boundary)
    /// and row `r` (1-based from the bottom).
    pub fn local_index(&self, c: usize, r: usize) -> usize {
        (c - 1) * self.n_interface() + (r - 1)
    }

    /// Integer x-coordinate (in units of `h`) of local column `c`.
    pub fn grid_x(&self, side: Side, c: usize) -> usize {
        match side {
            Side::Left => c,
            Side::Right => self.cells() - c,
        }
    }

    /// Local index of the grid point `(ix·h, iy·h)` if it is an unknown of `side`.
    pub fn node_at(&self, side: Side, ix: usize, iy: usize) -> Option<usize> {
        if iy == 0 || iy >= self.cells() {
            return None;
        }
        let c = match side {
            Side::Left => ix,
            Side::Right => self.cells().checked_sub(ix)?,
        };
        (c >= 1 && c <= self.columns(side)).then(|| self.local_index(c, iy))
    }

    /// Physical coordinates of a local unknown.
    pub fn coordinates(&self, side: Side, index: usize) -> (f64, f64) {
        let m = self.n_interface();
        let c = index / m + 1;
        let r = index % m + 1;
        let scale = self.cells() as f64;
        (self.grid_x(side, c) as f64 / scale, r as f64 / scale)
    }

    /// Range of cell x-indices covered by a subdomain.
    pub(crate) fn cell_columns(&self, side: Side) -> std::ops::Range<usize> {
        match side {
            Side::Left => 0..self.interface_column,
            Side::Right => self.interface_column..self.cells(),
        }
    }

    /// Interior unknowns of the whole square, `(2n − 1)²`.
    pub fn global_unknowns(&self) -> usize {
        self.n_interface() * self.n_interface()
    }

    /// Index of interior grid point `(ix, iy)` in the single-domain numbering
    /// (column-major, left to right).
    pub fn global_index(&self, ix: usize, iy: usize) -> Option<usize> {
        let m = self.n_interface();
        (ix >= 1 && ix <= m && iy >= 1 && iy <= m).then(|| (ix - 1) * m + (iy - 1))
    }

    /// Scatters the two subdomain vectors into the single-domain numbering.
    /// Interface values are taken from the left vector.
    pub fn merge(&self, left: &[f64], right: &[f64]) -> Result<Vec<f64>> {
        crate::error::check_len(self.subdomain_unknowns(Side::Left), left.len())?;
        crate::error::check_len(self.subdomain_unknowns(Side::Right), right.len())?;
        let m = self.n_interface();
        let mut out = vec![0.0; self.global_unknowns()];
        for (side, v) in [(Side::Right, right), (Side::Left, left)] {
            for c in 1..=self.columns(side) {
                let ix = self.grid_x(side, c);
                for r in 1..=m {
                    out[(ix - 1) * m + (r - 1)] = v[self.local_index(c, r)];
                }
            }
        }
        Ok(out)
    }
}
