//! Quadrature rules: fixed Gauss-Legendre, globally adaptive Gauss-Kronrod
//! (7/15 points) and tanh-sinh for integrable endpoint singularities.

use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex;

use crate::error::{Result, ZetaError};

/// Integrand values the adaptive rules can accumulate.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex<f64> {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult<V> {
    pub value: V,
    /// Estimated absolute error, including a rounding floor.
    pub error: f64,
    /// Integral of the magnitude of the integrand.
    pub abs_integral: f64,
    pub evaluations: usize,
}

/// n-point Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi's initial guess then Newton on P_n
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        self.nodes.iter().zip(&self.weights).map(move |(&x, &w)| (c + h * x, h * w))
    }

    pub fn integrate<V: QuadValue>(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> V) -> V {
        let mut acc = V::zero();
        for (x, w) in self.mapped(a, b) {
            acc = acc + f(x) * w;
        }
        acc
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<V: QuadValue>(f: &mut impl FnMut(f64) -> V, a: f64, b: f64) -> (V, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut absk = fc.magnitude() * WGK[7];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        let s = f1 + f2;
        kron = kron + s * WGK[j];
        absk += (f1.magnitude() + f2.magnitude()) * WGK[j];
        if j % 2 == 1 {
            gauss = gauss + s * WG[j / 2];
        }
    }
    let kron = kron * h;
    let gauss = gauss * h;
    let absk = absk * h.abs();
    // the embedded Gauss rule error bounds the Kronrod error conservatively
    let err = (kron - gauss).magnitude();
    (kron, err, absk)
}

struct Segment<V> {
    a: f64,
    b: f64,
    value: V,
    error: f64,
    abs: f64,
}

impl<V> PartialEq for Segment<V> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<V> Eq for Segment<V> {}
impl<V> PartialOrd for Segment<V> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl<V> Ord for Segment<V> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Gauss-Kronrod integration of `f` over `[a, b]`.
///
/// Stops once the summed error estimate is below `max(abs_tol, rel_tol *
/// |value|)`. The reported error never falls below a rounding floor of
/// `50 eps` times the integral of `|f|`.
pub fn integrate_adaptive<V: QuadValue>(
    mut f: impl FnMut(f64) -> V,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<QuadResult<V>> {
    if a == b {
        return Ok(QuadResult {
            value: V::zero(),
            error: 0.0,
            abs_integral: 0.0,
            evaluations: 0,
        });
    }
    let mut heap = BinaryHeap::new();
    let (v, e, ab) = gk15(&mut f, a, b);
    let mut evaluations = 15;
    heap.push(Segment { a, b, value: v, error: e, abs: ab });
    let mut total = v;
    let mut total_err = e;
    let mut total_abs = ab;
    let floor = |abs: f64| 50.0 * f64::EPSILON * abs;
    for _ in 0..max_subdivisions {
        let tol = abs_tol.max(rel_tol * total.magnitude());
        if total_err <= tol || total_err <= floor(total_abs) {
            return Ok(QuadResult {
                value: total,
                error: total_err.max(floor(total_abs)),
                abs_integral: total_abs,
                evaluations,
            });
        }
        let seg = heap.pop().expect("heap never empty");
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a.min(seg.b) || mid >= seg.a.max(seg.b) {
            heap.push(seg);
            break;
        }
        let (v1, e1, a1) = gk15(&mut f, seg.a, mid);
        let (v2, e2, a2) = gk15(&mut f, mid, seg.b);
        evaluations += 30;
        total = total - seg.value + v1 + v2;
        total_err += e1 + e2 - seg.error;
        total_abs += a1 + a2 - seg.abs;
        heap.push(Segment { a: seg.a, b: mid, value: v1, error: e1, abs: a1 });
        heap.push(Segment { a: mid, b: seg.b, value: v2, error: e2, abs: a2 });
    }
    // re-sum to avoid drift in the running totals
    let mut value = V::zero();
    let mut error = 0.0;
    let mut abs = 0.0;
    for s in heap.iter() {
        value = value + s.value;
        error += s.error;
        abs += s.abs;
    }
    let tol = abs_tol.max(rel_tol * value.magnitude());
    if error <= tol || error <= floor(abs) {
        Ok(QuadResult { value, error: error.max(floor(abs)), abs_integral: abs, evaluations })
    } else {
        Err(ZetaError::QuadratureFailure(format!(
            "error estimate {error:.3e} above tolerance {tol:.3e} on [{a}, {b}] after {max_subdivisions} subdivisions"
        )))
    }
}

/// Tanh-sinh (double exponential) integration over `[a, b]`.
///
/// The integrand receives the abscissa together with its distance to the
/// nearer endpoint, so callers can evaluate singular factors such as
/// `log|x - a|` without cancellation.
pub fn integrate_tanh_sinh(
    mut f: impl FnMut(f64, f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_levels: usize,
) -> Result<QuadResult<f64>> {
    let half = 0.5 * (b - a);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut h = 1.0;
    let mut evaluations = 0usize;
    // node at t: x = tanh(pi/2 sinh t), weight = pi/2 cosh t / cosh^2(pi/2 sinh t)
    let eval_node = |t: f64, f: &mut dyn FnMut(f64, f64) -> f64| -> (f64, f64) {
        let u = half_pi * t.sinh();
        let ch = u.cosh();
        let w = half_pi * t.cosh() / (ch * ch);
        // distance from the endpoint: 1 - |tanh u| = 1 / (e^{|u|} cosh u)
        let d = half / (u.abs().exp() * ch);
        let x = if t >= 0.0 { b - d } else { a + d };
        if d <= 0.0 || !w.is_finite() || w == 0.0 {
            return (0.0, 0.0);
        }
        let fx = f(x, d);
        (fx * w * half, fx.abs() * w * half)
    };
    let t_max = 6.5;
    let (mut sum, mut abs_sum) = {
        let (v, av) = eval_node(0.0, &mut f);
        evaluations += 1;
        (v, av)
    };
    let mut k = 1;
    loop {
        let t = k as f64 * h;
        if t > t_max {
            break;
        }
        let (v1, a1) = eval_node(t, &mut f);
        let (v2, a2) = eval_node(-t, &mut f);
        evaluations += 2;
        sum += v1 + v2;
        abs_sum += a1 + a2;
        k += 1;
    }
    let mut estimate = sum * h;
    let mut prev = f64::NAN;
    let mut prev2: f64;
    for _level in 0..max_levels {
        h *= 0.5;
        let mut k = 1;
        loop {
            let t = k as f64 * h;
            if t > t_max {
                break;
            }
            let (v1, a1) = eval_node(t, &mut f);
            let (v2, a2) = eval_node(-t, &mut f);
            evaluations += 2;
            sum += v1 + v2;
            abs_sum += a1 + a2;
            k += 2;
        }
        prev2 = prev;
        prev = estimate;
        estimate = sum * h;
        let diff = (estimate - prev).abs();
        // the error roughly squares with each halving once in the asymptotic regime
        let err = if prev2.is_finite() {
            let d2 = (prev - prev2).abs();
            if d2 > 0.0 && diff < d2 {
                (diff * diff / d2).max(diff * 1e-2)
            } else {
                diff
            }
        } else {
            diff
        };
        let floor = 50.0 * f64::EPSILON * abs_sum * h;
        if err <= tol || err <= floor {
            return Ok(QuadResult {
                value: estimate,
                error: err.max(floor),
                abs_integral: abs_sum * h,
                evaluations,
            });
        }
    }
    Err(ZetaError::QuadratureFailure(format!(
        "tanh-sinh did not reach {tol:.3e} on [{a}, {b}]"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(10);
        let v = rule.integrate(0.0, 2.0, |x: f64| x.powi(19));
        assert!((v - 2f64.powi(20) / 20.0).abs() < 1e-9);
        let w: f64 = rule.mapped(-1.0, 1.0).map(|(_, w)| w).sum();
        assert!((w - 2.0).abs() < 1e-15);
    }

    #[test]
    fn adaptive_handles_peaks_and_complex_values() {
        let r = integrate_adaptive(|x: f64| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-10, 1e-12, 500).unwrap();
        let exact = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!((r.value - exact).abs() < 1e-8, "{} vs {}", r.value, exact);
        let c = integrate_adaptive(|x: f64| Complex::new(0.0, x).exp(), 0.0, 10.0, 1e-12, 1e-12, 200).unwrap();
        let exact = (Complex::new(0.0, 10.0).exp() - 1.0) / Complex::new(0.0, 1.0);
        assert!((c.value - exact).norm() < 1e-11);
    }

    #[test]
    fn tanh_sinh_log_singularity() {
        // int_0^1 ln x dx = -1, with the singular end at x = 0
        let r = integrate_tanh_sinh(|x, d| if x < 0.5 { d.ln() } else { x.ln() }, 0.0, 1.0, 1e-13, 12).unwrap();
        assert!((r.value + 1.0).abs() < 1e-12, "{}", r.value);
        // int_0^1 x^{-1/2} dx = 2
        let r = integrate_tanh_sinh(|x, d| if x < 0.5 { 1.0 / d.sqrt() } else { 1.0 / x.sqrt() }, 0.0, 1.0, 1e-12, 12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10);
    }
}
