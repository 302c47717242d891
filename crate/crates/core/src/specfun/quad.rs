//! Numerical integration on finite and semi-infinite intervals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::gamma::log_gamma_unchecked;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureKind {
    /// Globally adaptive Gauss–Kronrod (10/21). Semi-infinite domains are
    /// mapped onto `[0, 1)` through `x = a + t/(1 − t)`.
    AdaptiveFinite,
    /// Fixed generalized Gauss–Laguerre rule with weight `t^α e^{−t}`.
    GaussLaguerre,
    /// Adaptive Gauss–Kronrod on `[a, cutoff]`, discarding the rest.
    TruncatedSemiInfinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub kind: QuadratureKind,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Node count for Gauss–Laguerre.
    pub node_count: usize,
    /// Exponent `α` of the Gauss–Laguerre weight `t^α e^{−t}`.
    pub laguerre_alpha: f64,
    /// Upper limit used by `TruncatedSemiInfinite`.
    pub cutoff: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            kind: QuadratureKind::AdaptiveFinite,
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
            node_count: 48,
            laguerre_alpha: 0.0,
            cutoff: f64::INFINITY,
        }
    }
}

impl QuadratureSpec {
    pub fn adaptive(abs_tol: f64, rel_tol: f64) -> Self {
        Self { abs_tol, rel_tol, ..Self::default() }
    }

    pub fn gauss_laguerre(node_count: usize, alpha: f64) -> Self {
        Self {
            kind: QuadratureKind::GaussLaguerre,
            node_count,
            laguerre_alpha: alpha,
            ..Self::default()
        }
    }

    pub fn truncated(cutoff: f64, abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            kind: QuadratureKind::TruncatedSemiInfinite,
            cutoff,
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::invalid("abs_tol", self.abs_tol, "tolerance must be > 0"));
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::invalid("rel_tol", self.rel_tol, "tolerance must be > 0"));
        }
        if self.kind == QuadratureKind::GaussLaguerre {
            if self.node_count < 2 {
                return Err(Error::invalid("node_count", self.node_count as f64, "need at least 2 nodes"));
            }
            if !(self.laguerre_alpha > -1.0) {
                return Err(Error::invalid("laguerre_alpha", self.laguerre_alpha, "must exceed -1"));
            }
        }
        if self.max_subdivisions == 0 {
            return Err(Error::invalid("max_subdivisions", 0.0, "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite(f64, f64),
    /// `[a, ∞)`.
    SemiInfinite(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
    pub subdivisions: usize,
}

/// Integrate `f` over `domain`. Fails with [`Error::Quadrature`] (carrying the
/// partial estimate) when the requested tolerance is not met.
pub fn integrate<F>(f: F, domain: Domain, spec: &QuadratureSpec) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    match (spec.kind, domain) {
        (_, Domain::Finite(a, b)) if spec.kind != QuadratureKind::GaussLaguerre => {
            check_finite_interval(a, b)?;
            adaptive_gk(&f, a, b, spec)
        }
        (QuadratureKind::AdaptiveFinite, Domain::SemiInfinite(a)) => {
            check_finite_interval(a, a)?;
            let mapped = |t: f64| {
                let one_minus = 1.0 - t;
                let x = a + t / one_minus;
                if !x.is_finite() {
                    return 0.0;
                }
                f(x) / (one_minus * one_minus)
            };
            adaptive_gk(&mapped, 0.0, 1.0, spec)
        }
        (QuadratureKind::TruncatedSemiInfinite, Domain::SemiInfinite(a)) => {
            if !(spec.cutoff.is_finite() && spec.cutoff > a) {
                return Err(Error::invalid("cutoff", spec.cutoff, "must be finite and above the lower limit"));
            }
            adaptive_gk(&f, a, spec.cutoff, spec)
        }
        (QuadratureKind::GaussLaguerre, Domain::SemiInfinite(a)) => gauss_laguerre_integral(&f, a, spec),
        (QuadratureKind::GaussLaguerre, Domain::Finite(..)) => Err(Error::domain(
            "Gauss-Laguerre needs a semi-infinite domain",
        )),
        _ => unreachable!(),
    }
}

fn check_finite_interval(a: f64, b: f64) -> Result<()> {
    if !a.is_finite() {
        return Err(Error::invalid("a", a, "limit must be finite"));
    }
    if !b.is_finite() {
        return Err(Error::invalid("b", b, "limit must be finite"));
    }
    Ok(())
}

// Gauss–Kronrod 10/21 nodes on [0, 1] (positive half; index 10 is the centre).
const XGK: [f64; 11] = [
    0.995_657_163_025_808_1,
    0.973_906_528_517_171_7,
    0.930_157_491_355_708_2,
    0.865_063_366_688_984_5,
    0.780_817_726_586_416_9,
    0.679_409_568_299_024_4,
    0.562_757_134_668_604_7,
    0.433_395_394_129_247_2,
    0.294_392_862_701_460_2,
    0.148_874_338_981_631_2,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874,
    0.032_558_162_307_964_725,
    0.054_755_896_574_351_995,
    0.075_039_674_810_919_96,
    0.093_125_454_583_697_6,
    0.109_387_158_802_297_64,
    0.123_491_976_262_065_84,
    0.134_709_217_311_473_34,
    0.142_775_938_577_060_09,
    0.147_739_104_901_338_49,
    0.149_445_554_002_916_9,
];
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7, 9).
const WG: [f64; 5] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982_04,
    0.269_266_719_309_996_35,
    0.295_524_224_714_752_87,
];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

fn adaptive_gk<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    let (value, error) = gk21(f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    let mut subdivisions = 0;
    let mut evaluations = 21;
    loop {
        let tol = spec.abs_tol.max(spec.rel_tol * total.abs());
        if total_err <= tol {
            break;
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::Quadrature {
                estimate: total,
                error: total_err,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap never empties");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval cannot be split further in floating point
            heap.push(worst);
            return Err(Error::Quadrature {
                estimate: total,
                error: total_err,
                subdivisions,
            });
        }
        let (v1, e1) = gk21(f, worst.a, mid);
        let (v2, e2) = gk21(f, mid, worst.b);
        evaluations += 42;
        subdivisions += 1;
        heap.push(Segment { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, error: e2 });
        // re-sum from the segment list to avoid drift
        let (mut s, mut c) = (0.0, 0.0);
        let mut err = 0.0;
        for seg in heap.iter() {
            neumaier(&mut s, &mut c, seg.value);
            err += seg.error;
        }
        total = s + c;
        total_err = err;
    }
    Ok(QuadratureResult {
        value: total,
        error: total_err,
        evaluations,
        subdivisions,
    })
}

#[inline]
pub(crate) fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

/// Nodes and weights of the `n`-point generalized Gauss–Laguerre rule for
/// the weight `x^α e^{−x}` on `[0, ∞)`.
pub fn gauss_laguerre_rule(n: usize, alpha: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n < 2 {
        return Err(Error::invalid("node_count", n as f64, "need at least 2 nodes"));
    }
    if !(alpha > -1.0) {
        return Err(Error::invalid("alpha", alpha, "must exceed -1"));
    }
    let nf = n as f64;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut z = 0.0;
    let log_norm = log_gamma_unchecked(alpha + nf) - log_gamma_unchecked(nf);
    for i in 0..n {
        if i == 0 {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * nf + 1.8 * alpha);
        } else if i == 1 {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * nf);
        } else {
            let ai = (i - 1) as f64;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) * (z - x[i - 2])
                / (1.0 + 0.3 * alpha);
        }
        let mut converged = false;
        let mut p2 = 0.0;
        let mut pp = 0.0;
        for _ in 0..200 {
            let mut p1 = 1.0;
            p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf - 1.0 + alpha - z) * p2 - (jf - 1.0 + alpha) * p3) / jf;
            }
            pp = (nf * p1 - (nf + alpha) * p2) / z;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("Gauss-Laguerre node refinement"));
        }
        x[i] = z;
        w[i] = -log_norm.exp() / (pp * nf * p2);
    }
    Ok((x, w))
}

fn gauss_laguerre_sum<F: Fn(f64) -> f64>(f: &F, a: f64, n: usize, alpha: f64) -> Result<f64> {
    let (x, w) = gauss_laguerre_rule(n, alpha)?;
    let (mut s, mut c) = (0.0, 0.0);
    for (xi, wi) in x.iter().zip(&w) {
        // remove the weight from the integrand
        let g = f(a + xi) * xi.exp() / xi.powf(alpha);
        neumaier(&mut s, &mut c, wi * g);
    }
    Ok(s + c)
}

fn gauss_laguerre_integral<F: Fn(f64) -> f64>(f: &F, a: f64, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    let n = spec.node_count;
    let coarse_n = (3 * n / 4).max(2);
    let value = gauss_laguerre_sum(f, a, n, spec.laguerre_alpha)?;
    let coarse = gauss_laguerre_sum(f, a, coarse_n, spec.laguerre_alpha)?;
    let error = (value - coarse).abs();
    let tol = spec.abs_tol.max(spec.rel_tol * value.abs());
    if error > tol {
        return Err(Error::Quadrature { estimate: value, error, subdivisions: 0 });
    }
    Ok(QuadratureResult {
        value,
        error,
        evaluations: n + coarse_n,
        subdivisions: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{laguerre, log_gamma};

    fn quad(f: impl Fn(f64) -> f64, d: Domain) -> f64 {
        integrate(f, d, &QuadratureSpec::default()).unwrap().value
    }

    #[test]
    fn elementary_integrals() {
        assert!((quad(|x| (-x).exp(), Domain::SemiInfinite(0.0)) - 1.0).abs() < 1e-13);
        assert!((quad(|x| x.powi(3), Domain::Finite(0.0, 1.0)) - 0.25).abs() < 1e-15);
        let n = quad(|z| (-z).exp() * z * z * (2.0 - z).powi(2), Domain::SemiInfinite(0.0));
        assert!((n - 8.0).abs() < 1e-11);
        // oscillatory Bessel-type integrand
        let s = quad(|x| (x * 37.0).sin() / (1.0 + x), Domain::Finite(0.0, 5.0));
        let reference = integrate(
            |x| (x * 37.0).sin() / (1.0 + x),
            Domain::Finite(0.0, 5.0),
            &QuadratureSpec::adaptive(1e-14, 1e-10),
        )
        .unwrap()
        .value;
        assert!((s - reference).abs() < 1e-12);
    }

    #[test]
    fn gauss_laguerre_is_exact_for_polynomials() {
        let spec = QuadratureSpec::gauss_laguerre(8, 0.0);
        let v = integrate(|z| (-z).exp() * z * z * (2.0 - z).powi(2), Domain::SemiInfinite(0.0), &spec)
            .unwrap()
            .value;
        assert!((v - 8.0).abs() < 1e-12);
        let (x, w) = gauss_laguerre_rule(12, 1.5).unwrap();
        let total: f64 = w.iter().sum();
        let want = log_gamma(2.5).unwrap().exp();
        assert!((total - want).abs() < 1e-13 * want);
        assert!(x.windows(2).all(|p| p[1] > p[0]));
    }

    #[test]
    fn truncated_domain() {
        let spec = QuadratureSpec::truncated(50.0, 1e-14, 1e-13);
        let v = integrate(|x| (-x).exp(), Domain::SemiInfinite(0.0), &spec).unwrap().value;
        assert!((v - (1.0 - (-50f64).exp())).abs() < 1e-13);
    }

    #[test]
    fn laguerre_normalisation_identity() {
        for &a in &[0.5, 1.0, 2.3] {
            for l in 0..=10u32 {
                let got = quad(
                    |z| (-z).exp() * z.powf(a + 1.0) * laguerre(l, a, z).unwrap().powi(2),
                    Domain::SemiInfinite(0.0),
                );
                let lf = l as f64;
                let want = (2.0 * lf + 1.0 + a)
                    * (log_gamma(lf + 1.0 + a).unwrap() - log_gamma(lf + 1.0).unwrap()).exp();
                assert!(((got - want) / want).abs() <= 1e-8, "l={l} a={a}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn reports_non_convergence_with_partial_estimate() {
        let spec = QuadratureSpec {
            max_subdivisions: 3,
            ..QuadratureSpec::adaptive(1e-15, 1e-15)
        };
        let err = integrate(|x| 1.0 / x.sqrt(), Domain::Finite(0.0, 1.0), &spec).unwrap_err();
        match err {
            Error::Quadrature { estimate, subdivisions, .. } => {
                assert!(estimate > 1.0 && estimate < 2.0);
                assert_eq!(subdivisions, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let bad = QuadratureSpec { abs_tol: 0.0, ..Default::default() };
        assert!(integrate(|x| x, Domain::Finite(0.0, 1.0), &bad).is_err());
        let bad = QuadratureSpec::gauss_laguerre(1, 0.0);
        assert!(integrate(|x| x, Domain::SemiInfinite(0.0), &bad).is_err());
        let gl = QuadratureSpec::gauss_laguerre(10, 0.0);
        assert!(integrate(|x| x, Domain::Finite(0.0, 1.0), &gl).is_err());
    }
}
