//! Deterministic one-dimensional quadrature.
//!
//! Everything is built from fixed Gauss-Legendre panels: node/weight sets are
//! computed once per order by Newton iteration on the Legendre polynomials
//! (no tables, no external dependency) and cached. Panel subdivision is
//! always explicit and deterministic, so every integral in the crate is
//! bit-reproducible; accumulation uses Neumaier compensated summation so the
//! result is independent of evaluation order to ~1e-16.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Compensated (Neumaier) accumulator: order-stable summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    /// Fresh accumulator at zero.
    pub fn new() -> Self {
        Self::default()
    }

    /// Add one term.
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Current compensated total.
    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sum an iterator with compensation.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = NeumaierSum::new();
    for v in values {
        acc.add(v);
    }
    acc.total()
}

fn gl_cache() -> &'static Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss-Legendre nodes and weights on [-1, 1] for the given order.
///
/// Computed by Newton iteration on P_n (converges to machine precision in a
/// handful of steps) and cached per order.
pub fn gauss_legendre(order: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    assert!(order >= 1, "quadrature order must be at least 1");
    if let Some(hit) = gl_cache().lock().unwrap().get(&order) {
        return hit.clone();
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Recurrence: (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 1..n {
                let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x.abs();
        nodes[n - 1 - i] = x.abs();
        weights[i] = w;
        weights[n - 1 - i] = w;
        if n % 2 == 1 && i == n / 2 {
            nodes[i] = 0.0;
        }
    }
    let arc = Arc::new((nodes, weights));
    gl_cache().lock().unwrap().insert(order, arc.clone());
    arc
}

/// A fixed set of quadrature nodes and weights on some interval union.
#[derive(Debug, Clone)]
pub struct Panels {
    /// Evaluation abscissae.
    pub nodes: Vec<f64>,
    /// Matching weights.
    pub weights: Vec<f64>,
}

impl Panels {
    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when no nodes are present.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// `n_panels` equal Gauss-Legendre panels of order `order` on [lo, hi].
pub fn gauss_panels(lo: f64, hi: f64, n_panels: usize, order: usize) -> Panels {
    assert!(hi >= lo, "inverted interval [{lo}, {hi}]");
    let gl = gauss_legendre(order);
    let (xg, wg) = (&gl.0, &gl.1);
    let n = n_panels.max(1);
    let width = (hi - lo) / n as f64;
    let mut nodes = Vec::with_capacity(n * order);
    let mut weights = Vec::with_capacity(n * order);
    for p in 0..n {
        let mid = lo + (p as f64 + 0.5) * width;
        let half = 0.5 * width;
        for (x, w) in xg.iter().zip(wg) {
            nodes.push(mid + half * x);
            weights.push(half * w);
        }
    }
    Panels { nodes, weights }
}

/// Gauss-Legendre panels over explicit edges (for graded/log-spaced grids).
pub fn gauss_panels_edges(edges: &[f64], order: usize) -> Panels {
    assert!(edges.len() >= 2, "need at least two edges");
    let gl = gauss_legendre(order);
    let (xg, wg) = (&gl.0, &gl.1);
    let mut nodes = Vec::with_capacity((edges.len() - 1) * order);
    let mut weights = Vec::with_capacity((edges.len() - 1) * order);
    for pair in edges.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        assert!(hi >= lo, "edges must be nondecreasing");
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        for (x, w) in xg.iter().zip(wg) {
            nodes.push(mid + half * x);
            weights.push(half * w);
        }
    }
    Panels { nodes, weights }
}

/// Geometrically spaced edges from `lo` to `hi` (both positive).
pub fn log_edges(lo: f64, hi: f64, n_panels: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo, "log edges need 0 < lo < hi");
    let n = n_panels.max(1);
    let ratio = (hi / lo).ln() / n as f64;
    (0..=n).map(|i| lo * (ratio * i as f64).exp()).collect()
}

/// Integrate `f` over fixed panels with compensated accumulation.
pub fn integrate_panels(panels: &Panels, mut f: impl FnMut(f64) -> f64) -> f64 {
    let mut acc = NeumaierSum::new();
    for (&x, &w) in panels.nodes.iter().zip(&panels.weights) {
        acc.add(w * f(x));
    }
    acc.total()
}

/// Integrate with panel doubling until two successive resolutions agree.
///
/// Returns `(value, error_estimate)` where the estimate is the difference of
/// the last two refinement levels. Deterministic: the refinement ladder is
/// fixed by the arguments. Panics never; a failure to reach `rel_tol` within
/// `max_doublings` returns the best value with its (larger) error estimate.
pub fn integrate_refining(
    lo: f64,
    hi: f64,
    base_panels: usize,
    order: usize,
    rel_tol: f64,
    max_doublings: u32,
    mut f: impl FnMut(f64) -> f64,
) -> (f64, f64) {
    let mut n = base_panels.max(1);
    let mut prev = integrate_panels(&gauss_panels(lo, hi, n, order), &mut f);
    let mut best = prev;
    let mut err = f64::INFINITY;
    for _ in 0..max_doublings {
        n *= 2;
        let cur = integrate_panels(&gauss_panels(lo, hi, n, order), &mut f);
        err = (cur - prev).abs();
        best = cur;
        let scale = cur.abs().max(1e-300);
        if err <= rel_tol * scale {
            return (best, err);
        }
        prev = cur;
    }
    (best, err)
}

/// Chebyshev interpolant of a smooth function on `[lo, hi]`.
///
/// Built on Chebyshev-Gauss nodes; evaluation uses the Clenshaw recurrence.
/// Intended to cache expensive smooth integrands (for example, converged
/// cubature values as a function of the dimensionless size) so that a
/// subsequent frequency quadrature can sample them cheaply.
#[derive(Debug, Clone)]
pub struct ChebyshevFit {
    lo: f64,
    hi: f64,
    coef: Vec<f64>,
}

impl ChebyshevFit {
    /// Fit `f` with `n` nodes on `[lo, hi]`. `f` may fail; the first error
    /// aborts the fit.
    pub fn try_new<E>(
        lo: f64,
        hi: f64,
        n: usize,
        mut f: impl FnMut(f64) -> std::result::Result<f64, E>,
    ) -> std::result::Result<Self, E> {
        assert!(n >= 1 && hi > lo, "Chebyshev fit needs n >= 1 and hi > lo");
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        let mut vals = Vec::with_capacity(n);
        for k in 0..n {
            let t = (std::f64::consts::PI * (k as f64 + 0.5) / n as f64).cos();
            vals.push(f(mid + half * t)?);
        }
        let mut coef = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = NeumaierSum::new();
            for (k, &v) in vals.iter().enumerate() {
                let angle = std::f64::consts::PI * j as f64 * (k as f64 + 0.5) / n as f64;
                acc.add(v * angle.cos());
            }
            coef.push(2.0 / n as f64 * acc.total());
        }
        coef[0] *= 0.5;
        Ok(ChebyshevFit { lo, hi, coef })
    }

    /// Fit an infallible function.
    pub fn new(lo: f64, hi: f64, n: usize, mut f: impl FnMut(f64) -> f64) -> Self {
        let fit: std::result::Result<Self, std::convert::Infallible> =
            Self::try_new(lo, hi, n, |x| Ok(f(x)));
        match fit {
            Ok(v) => v,
            Err(never) => match never {},
        }
    }

    /// Evaluate the interpolant at `x` (clamped to the fit interval).
    pub fn eval(&self, x: f64) -> f64 {
        let t = ((2.0 * x - self.lo - self.hi) / (self.hi - self.lo)).clamp(-1.0, 1.0);
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for &c in self.coef.iter().skip(1).rev() {
            let b0 = 2.0 * t * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        t * b1 - b2 + self.coef[0]
    }

    /// Magnitude of the last retained coefficient: a proxy for the
    /// truncation error of the interpolant.
    pub fn tail_estimate(&self) -> f64 {
        self.coef.last().copied().unwrap_or(0.0).abs()
    }
}
