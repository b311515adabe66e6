use crate::MeshError;

/// Uniform cell-centered grid on the unit square.
///
/// Cells are indexed `(ix, iy)` with `ix` fastest (row-major over `iy`), cell
/// centers at `(x0 + (ix + 1/2)·dx, y0 + (iy + 1/2)·dy)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuredGrid {
    pub nx: usize,
    pub ny: usize,
    pub dx: f64,
    pub dy: f64,
    pub origin: (f64, f64),
}

impl StructuredGrid {
    pub fn n_cells(&self) -> usize {
        self.nx * self.ny
    }

    /// Flat cell index, `ix` fastest.
    #[inline]
    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        iy * self.nx + ix
    }

    #[inline]
    pub fn center(&self, ix: usize, iy: usize) -> (f64, f64) {
        (
            self.origin.0 + (ix as f64 + 0.5) * self.dx,
            self.origin.1 + (iy as f64 + 0.5) * self.dy,
        )
    }

    /// Cell-center coordinates for every cell, flat order.
    pub fn centers(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.n_cells());
        for iy in 0..self.ny {
            for ix in 0..self.nx {
                out.push(self.center(ix, iy));
            }
        }
        out
    }
}

/// Builds a unit-square grid with `nx` by `ny` cells, spacing `1/nx` and `1/ny`
/// per axis.
pub fn make_structured(nx: usize, ny: usize) -> Result<StructuredGrid, MeshError> {
    if nx < 2 || ny < 2 {
        return Err(MeshError::InvalidDimension(format!(
            "grid needs at least 2 cells per axis, got {nx}x{ny}"
        )));
    }
    Ok(StructuredGrid {
        nx,
        ny,
        dx: 1.0 / nx as f64,
        dy: 1.0 / ny as f64,
        origin: (0.0, 0.0),
    })
}
