//! Discretized complex torus ℂⁿ/Λ.
//!
//! Fields live on a periodic grid over the *active* complex coordinates;
//! along inactive coordinates every field is constant and the corresponding
//! array axis is omitted. Real direction 2k is Re z_k, direction 2k+1 is
//! Im z_k.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

#[derive(Debug, thiserror::Error)]
pub enum GridError {
    #[error("complex dimension must be at least 3, got {0}")]
    DimensionTooSmall(usize),
    #[error("active coordinate {0} out of range for dimension {1}")]
    ActiveOutOfRange(usize, usize),
    #[error("resolution {0} invalid: active directions need even resolutions ≥ 4")]
    BadResolution(usize),
    #[error("period must be positive, got {0}")]
    BadPeriod(f64),
    #[error("expected {expected} resolutions, got {got}")]
    BadResolutionCount { expected: usize, got: usize },
}

struct FftPair {
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

/// Discretization of a complex torus.
pub struct TorusGrid {
    n: usize,
    active: Vec<usize>,
    /// Per real direction (2n entries); inactive directions hold 1.
    resolutions: Vec<usize>,
    /// Period length per real direction (2n entries).
    periods: Vec<f64>,
    /// Storage axes: resolutions of the active real directions, in order.
    shape: Vec<usize>,
    /// Global real direction of each storage axis.
    axis_dir: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
    ffts: HashMap<usize, FftPair>,
}

impl std::fmt::Debug for TorusGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TorusGrid")
            .field("n", &self.n)
            .field("active", &self.active)
            .field("shape", &self.shape)
            .finish()
    }
}

impl TorusGrid {
    /// Grid with the given active complex coordinates, one resolution per
    /// active real direction (x then y per active coordinate), and period 2π
    /// in every real direction.
    pub fn new(n: usize, active: &[usize], res_active: &[usize]) -> Result<Arc<Self>, GridError> {
        let periods = vec![2.0 * PI; 2 * n];
        Self::with_periods(n, active, res_active, &periods)
    }

    pub fn with_periods(
        n: usize,
        active: &[usize],
        res_active: &[usize],
        periods: &[f64],
    ) -> Result<Arc<Self>, GridError> {
        if n < 3 {
            return Err(GridError::DimensionTooSmall(n));
        }
        if periods.len() != 2 * n {
            return Err(GridError::BadResolutionCount {
                expected: 2 * n,
                got: periods.len(),
            });
        }
        for &p in periods {
            if !(p > 0.0) {
                return Err(GridError::BadPeriod(p));
            }
        }
        let mut active: Vec<usize> = active.to_vec();
        active.sort_unstable();
        active.dedup();
        for &a in &active {
            if a >= n {
                return Err(GridError::ActiveOutOfRange(a, n));
            }
        }
        if res_active.len() != 2 * active.len() {
            return Err(GridError::BadResolutionCount {
                expected: 2 * active.len(),
                got: res_active.len(),
            });
        }
        let mut resolutions = vec![1usize; 2 * n];
        let mut shape = Vec::new();
        let mut axis_dir = Vec::new();
        for (i, &a) in active.iter().enumerate() {
            for s in 0..2 {
                let nres = res_active[2 * i + s];
                if nres < 4 || nres % 2 != 0 {
                    return Err(GridError::BadResolution(nres));
                }
                resolutions[2 * a + s] = nres;
                shape.push(nres);
                axis_dir.push(2 * a + s);
            }
        }
        let len: usize = shape.iter().product::<usize>().max(1);
        let mut strides = vec![1usize; shape.len()];
        for i in (0..shape.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * shape[i + 1];
        }
        let mut planner = FftPlanner::new();
        let mut ffts = HashMap::new();
        for &s in &shape {
            ffts.entry(s).or_insert_with(|| FftPair {
                fwd: planner.plan_fft_forward(s),
                inv: planner.plan_fft_inverse(s),
            });
        }
        Ok(Arc::new(Self {
            n,
            active,
            resolutions,
            periods: periods.to_vec(),
            shape,
            axis_dir,
            strides,
            len,
            ffts,
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn is_active(&self, coord: usize) -> bool {
        self.active.contains(&coord)
    }

    pub fn resolutions(&self) -> &[usize] {
        &self.resolutions
    }

    pub fn periods(&self) -> &[f64] {
        &self.periods
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// Storage axis of a real direction, if that direction is active.
    pub fn axis_of_dir(&self, dir: usize) -> Option<usize> {
        self.axis_dir.iter().position(|&d| d == dir)
    }

    /// Real coordinates (length 2n) of a grid point; inactive directions
    /// report 0.
    pub fn coords(&self, mut idx: usize) -> Vec<f64> {
        let mut out = vec![0.0; 2 * self.n];
        for ax in 0..self.shape.len() {
            let i = idx / self.strides[ax];
            idx %= self.strides[ax];
            let d = self.axis_dir[ax];
            out[d] = self.periods[d] * i as f64 / self.shape[ax] as f64;
        }
        out
    }

    /// Complex coordinate z_k of a grid point.
    pub fn z(&self, idx: usize, k: usize) -> Complex64 {
        let c = self.coords(idx);
        Complex64::new(c[2 * k], c[2 * k + 1])
    }

    /// Lebesgue measure of one grid cell, including the full periods of the
    /// inactive directions.
    pub fn cell_measure(&self) -> f64 {
        let mut m = 1.0;
        for d in 0..2 * self.n {
            m *= self.periods[d] / self.resolutions[d] as f64;
        }
        m
    }

    pub(crate) fn fft_pair(&self, len: usize) -> (&Arc<dyn Fft<f64>>, &Arc<dyn Fft<f64>>) {
        let p = &self.ffts[&len];
        (&p.fwd, &p.inv)
    }

    pub(crate) fn stride(&self, axis: usize) -> usize {
        self.strides[axis]
    }

    /// Signed integer frequency of mode index m on an axis of length nres.
    pub(crate) fn signed_freq(m: usize, nres: usize) -> i64 {
        if m <= nres / 2 {
            if m == nres / 2 {
                // Nyquist; callers decide how to treat it
                m as i64
            } else {
                m as i64
            }
        } else {
            m as i64 - nres as i64
        }
    }

    /// Angular wavenumber of mode m for a storage axis.
    pub(crate) fn wavenumber(&self, axis: usize, m: usize) -> f64 {
        let nres = self.shape[axis];
        let d = self.axis_dir[axis];
        2.0 * PI * Self::signed_freq(m, nres) as f64 / self.periods[d]
    }
}
