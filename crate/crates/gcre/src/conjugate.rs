//! Discrete Legendre-Fenchel machinery for sampled 1D convex functions.
//!
//! A [`SampledFunction`] stores values of a function on a strictly
//! increasing grid together with an [`Extension`] describing the behavior
//! beyond the grid hull. The transform of a sampled function is evaluated
//! as a maximum over grid points,
//!
//! ```text
//! f*(s) = max_i { s * x_i - f(x_i) },
//! ```
//!
//! which is the exact conjugate of the piecewise-linear interpolant with
//! infinite-outside extension. The duality gap `f(x) + f*(y) - x*y` is
//! nonnegative whenever `f` is convex and `f*` is its computed conjugate.

use crate::error::{Error, Result};

/// Behavior of a sampled function beyond its grid hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extension {
    /// `+inf` outside the grid: the function has a bounded effective domain.
    InfiniteOutside,
    /// Continue with the slope of the first/last segment.
    LinearOutside,
}

/// A function sampled on a strictly increasing grid, interpolated linearly
/// between samples.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
    extension: Extension,
}

impl SampledFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, extension: Extension) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidInput(format!(
                "grid has {} points but values has {}",
                grid.len(),
                values.len()
            )));
        }
        if grid.len() < 2 {
            return Err(Error::InvalidInput(
                "sampled function needs at least 2 points".into(),
            ));
        }
        if !grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "grid must be strictly increasing".into(),
            ));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("values must be finite".into()));
        }
        Ok(Self {
            grid,
            values,
            extension,
        })
    }

    /// Sample a closure on `n` equispaced points of `[a, b]`.
    pub fn from_fn(a: f64, b: f64, n: usize, extension: Extension, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n < 2 || !(a < b) {
            return Err(Error::InvalidInput("need n >= 2 and a < b".into()));
        }
        let grid: Vec<f64> = (0..n)
            .map(|i| a + (b - a) * (i as f64) / ((n - 1) as f64))
            .collect();
        let values = grid.iter().map(|&x| f(x)).collect();
        Self::new(grid, values, extension)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn extension(&self) -> Extension {
        self.extension
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Piecewise-linear evaluation. Outside the hull, returns `+inf` or the
    /// linear continuation depending on the extension flag.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.grid.len();
        if x < self.grid[0] || x > self.grid[n - 1] {
            return match self.extension {
                Extension::InfiniteOutside => f64::INFINITY,
                Extension::LinearOutside => {
                    if x < self.grid[0] {
                        let s = (self.values[1] - self.values[0]) / (self.grid[1] - self.grid[0]);
                        self.values[0] + s * (x - self.grid[0])
                    } else {
                        let s = (self.values[n - 1] - self.values[n - 2])
                            / (self.grid[n - 1] - self.grid[n - 2]);
                        self.values[n - 1] + s * (x - self.grid[n - 1])
                    }
                }
            };
        }
        match self.grid.binary_search_by(|g| g.total_cmp(&x)) {
            Ok(i) => self.values[i],
            Err(i) => {
                // grid[i-1] < x < grid[i]
                let t = (x - self.grid[i - 1]) / (self.grid[i] - self.grid[i - 1]);
                self.values[i - 1] + t * (self.values[i] - self.values[i - 1])
            }
        }
    }
}

/// The discrete Legendre-Fenchel transform of `f` at the given slopes:
/// `f*(s) = max_i { s*x_i - f(x_i) }`.
///
/// The maximizing grid index is nondecreasing in the slope (the objective
/// has increasing differences in `(s, x)`), so a single forward sweep over
/// the grid evaluates all slopes in `O(n + m)`. Values beyond the sampled
/// domain are truncated at the grid hull: with the infinite-outside
/// extension this is the exact conjugate of the extended function, with the
/// linear-outside extension it is a finite truncation of a conjugate that
/// is `+inf` outside the slope range of `f`.
pub fn discrete_conjugate(f: &SampledFunction, slopes: &[f64]) -> Result<SampledFunction> {
    if slopes.len() < 2 {
        return Err(Error::InvalidInput("need at least 2 slopes".into()));
    }
    if !slopes.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(
            "slopes must be strictly increasing".into(),
        ));
    }
    let x = f.grid();
    let v = f.values();
    let n = x.len();
    let mut values = Vec::with_capacity(slopes.len());
    let mut k = 0usize; // rightmost maximizer so far
    for &s in slopes {
        while k + 1 < n && s * x[k + 1] - v[k + 1] >= s * x[k] - v[k] {
            k += 1;
        }
        values.push(s * x[k] - v[k]);
    }
    let extension = match f.extension() {
        Extension::InfiniteOutside => Extension::LinearOutside,
        Extension::LinearOutside => Extension::InfiniteOutside,
    };
    SampledFunction::new(slopes.to_vec(), values, extension)
}

/// One evaluation of the duality gap `f(x) + f*(y) - x*y`.
///
/// `+inf` is the sentinel for a point outside the hull of an
/// infinite-outside function. For convex `f` and `f_star` its computed
/// conjugate, the gap is nonnegative up to roundoff (`>= -1e-12`).
pub fn fenchel_young_gap(f: &SampledFunction, f_star: &SampledFunction, x: f64, y: f64) -> f64 {
    let a = f.eval(x);
    let b = f_star.eval(y);
    if a == f64::INFINITY || b == f64::INFINITY {
        return f64::INFINITY;
    }
    a + b - x * y
}

/// A recorded gap evaluation at one primal/dual point pair.
#[derive(Debug, Clone, Copy)]
pub struct GapEvaluation {
    pub primal_point: f64,
    pub dual_point: f64,
    pub gap: f64,
}

impl GapEvaluation {
    pub fn new(f: &SampledFunction, f_star: &SampledFunction, x: f64, y: f64) -> Self {
        Self {
            primal_point: x,
            dual_point: y,
            gap: fenchel_young_gap(f, f_star, x, y),
        }
    }
}

/// The biconjugate of `f` on its own grid: the lower convex envelope of the
/// sample points. Convex inputs are fixed points; a second application
/// returns its input bitwise.
pub fn biconjugate(f: &SampledFunction) -> Result<SampledFunction> {
    let mut values = f.values().to_vec();
    // Iterate the envelope to a pointwise fixed point. Each pass is
    // monotone nonincreasing, so the loop terminates; two passes suffice in
    // practice, the bound is a safeguard.
    for _ in 0..64 {
        let next = envelope_pass(f.grid(), &values);
        if next == values {
            break;
        }
        values = next;
    }
    SampledFunction::new(f.grid().to_vec(), values, f.extension())
}

/// One lower-convex-envelope pass (monotone chain over the sample points).
/// Collinear points are kept so that values already on the envelope are
/// copied through unchanged.
fn envelope_pass(grid: &[f64], values: &[f64]) -> Vec<f64> {
    let n = grid.len();
    let mut hull: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // pop b when it lies strictly above chord a-i
            let cross = (grid[b] - grid[a]) * (values[i] - values[a])
                - (grid[i] - grid[a]) * (values[b] - values[a]);
            if cross < 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let mut out = values.to_vec();
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        for j in a + 1..b {
            let t = (grid[j] - grid[a]) / (grid[b] - grid[a]);
            let interp = values[a] + t * (values[b] - values[a]);
            if interp < out[j] {
                out[j] = interp;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// O(n*m) reference for the discrete conjugate.
    pub fn brute_conjugate(f: &SampledFunction, slopes: &[f64]) -> Vec<f64> {
        slopes
            .iter()
            .map(|&s| {
                f.grid()
                    .iter()
                    .zip(f.values())
                    .map(|(&x, &v)| s * x - v)
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect()
    }

    fn quadratic() -> SampledFunction {
        SampledFunction::from_fn(-5.0, 5.0, 201, Extension::InfiniteOutside, |x| 0.5 * x * x)
            .unwrap()
    }

    fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| a + (b - a) * (i as f64) / ((n - 1) as f64))
            .collect()
    }

    /// Random convex piecewise-linear function: integrate increasing slopes.
    pub fn random_convex(rng: &mut impl Rng, n: usize) -> SampledFunction {
        let a = -3.0 + rng.gen::<f64>();
        let b = 2.0 + rng.gen::<f64>();
        let grid = linspace(a, b, n);
        let mut slopes: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-4.0..4.0)).collect();
        slopes.sort_by(f64::total_cmp);
        let mut values = vec![rng.gen_range(-1.0..1.0)];
        for i in 0..n - 1 {
            let dv = slopes[i] * (grid[i + 1] - grid[i]);
            let last = *values.last().unwrap();
            values.push(last + dv);
        }
        SampledFunction::new(grid, values, Extension::InfiniteOutside).unwrap()
    }

    #[test]
    fn conjugate_of_quadratic_is_quadratic() {
        let f = quadratic();
        let slopes = linspace(-3.0, 3.0, 121);
        let fs = discrete_conjugate(&f, &slopes).unwrap();
        // grid resolution bound h^2/2 with h = 0.05
        let h: f64 = 0.05;
        for (&s, &v) in fs.grid().iter().zip(fs.values()) {
            assert!((v - 0.5 * s * s).abs() <= h * h / 2.0 + 1e-14, "s={s} v={v}");
        }
    }

    #[test]
    fn conjugate_of_abs() {
        let f = SampledFunction::from_fn(-5.0, 5.0, 201, Extension::InfiniteOutside, f64::abs)
            .unwrap();
        let inner = discrete_conjugate(&f, &[-0.9, -0.5, 0.0, 0.5, 0.9]).unwrap();
        for &v in inner.values() {
            assert!(v.abs() <= 1e-12, "indicator of [-1,1] should vanish inside");
        }
        let outer = discrete_conjugate(&f, &[1.5, 2.0]).unwrap();
        // finite-grid truncation of +inf: supporting value at x = 5
        assert!((outer.values()[1] - (5.0 * 2.0 - 5.0)).abs() <= 1e-12);
    }

    #[test]
    fn conjugate_of_affine() {
        // exactly representable data: integer grid, f = 3x + 1
        let grid: Vec<f64> = (-5..=5).map(|i| i as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&x| 3.0 * x + 1.0).collect();
        let f = SampledFunction::new(grid, values, Extension::InfiniteOutside).unwrap();
        let fs = discrete_conjugate(&f, &[2.0, 3.0, 4.0]).unwrap();
        assert_eq!(fs.values()[1], -1.0);
        // away from the slope, grows with grid radius
        assert_eq!(fs.values()[0], -2.0 * -5.0 - (3.0 * -5.0 + 1.0));
        assert_eq!(fs.values()[2], 4.0 * 5.0 - (3.0 * 5.0 + 1.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SampledFunction::new(vec![0.0, 0.0], vec![1.0, 1.0], Extension::InfiniteOutside)
            .is_err());
        assert!(SampledFunction::new(vec![0.0], vec![1.0], Extension::InfiniteOutside).is_err());
        let f = quadratic();
        assert!(discrete_conjugate(&f, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn gap_arithmetic() {
        let f = quadratic();
        let fs = discrete_conjugate(&f, &linspace(-5.0, 5.0, 201).to_vec()).unwrap();
        let g = fenchel_young_gap(&f, &fs, 2.0, 3.0);
        assert!((g - 0.5).abs() < 2e-3, "g={g}"); // 2 + 4.5 - 6 with grid error
        let g0 = fenchel_young_gap(&f, &fs, 1.0, 1.0);
        assert!(g0.abs() < 2e-3 && g0 >= -1e-12);
    }

    #[test]
    fn gap_sentinel_outside_hull() {
        let f = quadratic();
        let fs = discrete_conjugate(&f, &[-1.0, 0.0, 1.0]).unwrap();
        assert_eq!(fenchel_young_gap(&f, &fs, 6.0, 0.0), f64::INFINITY);
        let e = GapEvaluation::new(&f, &fs, 6.0, 0.0);
        assert_eq!(e.gap, f64::INFINITY);
    }

    #[test]
    fn gaps_nonnegative_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let f = random_convex(&mut rng, 40);
            let slopes = linspace(-4.5, 4.5, 60);
            let fs = discrete_conjugate(&f, &slopes).unwrap();
            let brute = brute_conjugate(&f, &slopes);
            for (a, b) in fs.values().iter().zip(&brute) {
                assert!((a - b).abs() <= 1e-13);
            }
            let (ga, gb) = (f.grid()[0], *f.grid().last().unwrap());
            for _ in 0..200 {
                let x = rng.gen_range(ga..gb);
                let y = rng.gen_range(-4.5..4.5);
                assert!(fenchel_young_gap(&f, &fs, x, y) >= -1e-12);
            }
        }
    }

    #[test]
    fn order_reversal() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let grid = linspace(-2.0, 2.0, 50);
        let f = random_convex(&mut rng, 50);
        // g >= f pointwise on a shared grid
        let fv: Vec<f64> = grid.iter().map(|&x| f.eval(x)).collect();
        let gv: Vec<f64> = fv.iter().map(|&v| v + 0.5).collect();
        let f = SampledFunction::new(grid.clone(), fv, Extension::InfiniteOutside).unwrap();
        let g = SampledFunction::new(grid, gv, Extension::InfiniteOutside).unwrap();
        let slopes = linspace(-3.0, 3.0, 31);
        let fs = discrete_conjugate(&f, &slopes).unwrap();
        let gs = discrete_conjugate(&g, &slopes).unwrap();
        for (a, b) in gs.values().iter().zip(fs.values()) {
            assert!(a <= b);
        }
    }

    #[test]
    fn biconjugate_of_convex_is_identity() {
        let f = SampledFunction::from_fn(-2.0, 2.0, 401, Extension::InfiniteOutside, |x| {
            x.powi(4)
        })
        .unwrap();
        let fss = biconjugate(&f).unwrap();
        let max_err = f
            .values()
            .iter()
            .zip(fss.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(max_err <= 5e-4, "max_err={max_err}");
    }

    #[test]
    fn biconjugate_double_well_matches_hull_oracle() {
        let f = SampledFunction::from_fn(-3.0, 3.0, 241, Extension::InfiniteOutside, |x| {
            ((x + 1.0) * (x + 1.0)).min((x - 1.0) * (x - 1.0))
        })
        .unwrap();
        let fss = biconjugate(&f).unwrap();
        // oracle: brute-force lower convex hull via double conjugation over
        // all secant slopes
        let mut slopes: Vec<f64> = f
            .grid()
            .windows(2)
            .zip(f.values().windows(2))
            .map(|(x, v)| (v[1] - v[0]) / (x[1] - x[0]))
            .collect();
        slopes.sort_by(f64::total_cmp);
        slopes.dedup();
        for (i, &x) in f.grid().iter().enumerate() {
            let hull = slopes
                .iter()
                .map(|&s| {
                    let fstar = f
                        .grid()
                        .iter()
                        .zip(f.values())
                        .map(|(&xx, &vv)| s * xx - vv)
                        .fold(f64::NEG_INFINITY, f64::max);
                    s * x - fstar
                })
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(
                (fss.values()[i] - hull).abs() <= 1e-12,
                "node {i}: {} vs {}",
                fss.values()[i],
                hull
            );
            // f** = 0 on [-1, 1]
            if x.abs() <= 1.0 {
                assert!(fss.values()[i].abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn biconjugate_affine_exact() {
        let grid: Vec<f64> = (0..8).map(|i| i as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&x| 3.0 * x + 1.0).collect();
        let f = SampledFunction::new(grid, values.clone(), Extension::InfiniteOutside).unwrap();
        let fss = biconjugate(&f).unwrap();
        assert_eq!(fss.values(), &values[..]);
    }

    #[test]
    fn biconjugate_idempotent_bitwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = rng.gen_range(5..120);
            let grid = linspace(-2.0, 2.0, n);
            let values: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let f = SampledFunction::new(grid, values, Extension::InfiniteOutside).unwrap();
            let once = biconjugate(&f).unwrap();
            let twice = biconjugate(&once).unwrap();
            assert_eq!(once.values(), twice.values());
        }
    }
}
