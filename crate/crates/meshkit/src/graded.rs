use crate::MeshError;

/// Channel grid with uniform streamwise spacing and wall-symmetric geometric
/// grading across the channel. Both axes span `[0, 1]`.
///
/// Cells are indexed `(i_stream, j_cross)`, `i_stream` fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedGrid {
    pub n_stream: usize,
    pub n_cross: usize,
    pub stream_spacings: Vec<f64>,
    pub cross_spacings: Vec<f64>,
    pub ratio: f64,
}

impl GradedGrid {
    pub fn n_cells(&self) -> usize {
        self.n_stream * self.n_cross
    }

    #[inline]
    pub fn idx(&self, i_stream: usize, j_cross: usize) -> usize {
        j_cross * self.n_stream + i_stream
    }

    /// Cell-center coordinates along one axis from its spacing list.
    fn centers_of(spacings: &[f64]) -> Vec<f64> {
        let mut out = Vec::with_capacity(spacings.len());
        let mut edge = 0.0;
        for &s in spacings {
            out.push(edge + 0.5 * s);
            edge += s;
        }
        out
    }

    pub fn stream_centers(&self) -> Vec<f64> {
        Self::centers_of(&self.stream_spacings)
    }

    pub fn cross_centers(&self) -> Vec<f64> {
        Self::centers_of(&self.cross_spacings)
    }

    /// `(x, y)` cell centers for every cell, flat order. Streamwise axis is x.
    pub fn centers(&self) -> Vec<(f64, f64)> {
        let sx = self.stream_centers();
        let sy = self.cross_centers();
        let mut out = Vec::with_capacity(self.n_cells());
        for &y in &sy {
            for &x in &sx {
                out.push((x, y));
            }
        }
        out
    }
}

/// Builds the graded channel grid: `n_stream` uniform cells along the channel,
/// `n_cross` cells across it forming two mirrored geometric progressions with
/// the smallest cells at the walls. `ratio` is the constant factor between
/// adjacent cross spacings on each half; 1 degenerates to uniform.
pub fn make_graded(n_stream: usize, n_cross: usize, ratio: f64) -> Result<GradedGrid, MeshError> {
    if n_stream < 2 {
        return Err(MeshError::InvalidDimension(format!(
            "n_stream must be at least 2, got {n_stream}"
        )));
    }
    if n_cross < 2 || n_cross % 2 != 0 {
        return Err(MeshError::InvalidDimension(format!(
            "n_cross must be even and at least 2, got {n_cross}"
        )));
    }
    if !(ratio >= 1.0) || !ratio.is_finite() {
        return Err(MeshError::InvalidGrading(format!(
            "grading ratio must be finite and >= 1, got {ratio}"
        )));
    }

    let half = n_cross / 2;
    // Wall cell width from the geometric series summing each half to 1/2.
    let s0 = if ratio == 1.0 {
        1.0 / n_cross as f64
    } else {
        0.5 * (ratio - 1.0) / (ratio.powi(half as i32) - 1.0)
    };

    let mut cross = Vec::with_capacity(n_cross);
    let mut w = s0;
    for _ in 0..half {
        cross.push(w);
        w *= ratio;
    }
    for j in (0..half).rev() {
        cross.push(cross[j]);
    }

    let stream = vec![1.0 / n_stream as f64; n_stream];

    Ok(GradedGrid {
        n_stream,
        n_cross,
        stream_spacings: stream,
        cross_spacings: cross,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_channel_dimensions() {
        let g = make_graded(240, 60, 1.1).unwrap();
        assert_eq!(g.cross_spacings.len(), 60);
        assert_eq!(g.stream_spacings.len(), 240);
        let min = g.cross_spacings.iter().cloned().fold(f64::INFINITY, f64::min);
        assert_eq!(g.cross_spacings[0], min);
        assert_eq!(g.cross_spacings[59], min);
    }

    #[test]
    fn ratio_one_degenerates_to_uniform() {
        let g = make_graded(10, 4, 1.0).unwrap();
        for &s in &g.cross_spacings {
            assert!((s - 0.25).abs() < 1e-15);
        }
        for &s in &g.stream_spacings {
            assert!((s - 0.1).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_form_half_channel() {
        // ratio 2, half of 4 cells: widths s0, 2*s0 summing to 0.5 => s0 = 1/6.
        let g = make_graded(4, 4, 2.0).unwrap();
        let expect = [1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0];
        for (s, e) in g.cross_spacings.iter().zip(expect) {
            assert!((s - e).abs() < 1e-15, "{s} vs {e}");
        }
    }

    #[test]
    fn rejects_odd_cross_count() {
        assert!(matches!(
            make_graded(8, 5, 1.2),
            Err(MeshError::InvalidDimension(_))
        ));
    }

    #[test]
    fn rejects_ratio_below_one() {
        assert!(matches!(
            make_graded(8, 4, 0.9),
            Err(MeshError::InvalidGrading(_))
        ));
        assert!(matches!(
            make_graded(8, 4, f64::NAN),
            Err(MeshError::InvalidGrading(_))
        ));
    }
}
