//! Alternation pdfs, Gaussian fits and parameter sweeps.
//!
//! The theoretical pdf weights every bracelet equally (class-uniform). A
//! random shuffle of beads weights every linear arrangement equally
//! (chain-uniform). The two differ only through bracelets with nontrivial
//! symmetry, which become rare quickly as `N` grows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::counting::alternation_distribution;
use crate::error::{Error, Result};
use crate::necklace::NecklaceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Theoretical,
    Empirical,
}

/// Probability distribution over even alternation counts.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretePdf {
    entries: BTreeMap<u64, f64>,
    provenance: Provenance,
}

impl DiscretePdf {
    /// Wraps raw entries. No normalization is applied.
    pub fn from_entries(entries: BTreeMap<u64, f64>, provenance: Provenance) -> Self {
        DiscretePdf { entries, provenance }
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn entries(&self) -> &BTreeMap<u64, f64> {
        &self.entries
    }

    /// Probability at `alpha`; zero off the support.
    pub fn get(&self, alpha: u64) -> f64 {
        self.entries.get(&alpha).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    pub fn mean(&self) -> f64 {
        self.entries.iter().map(|(&a, &p)| a as f64 * p).sum::<f64>() / self.total()
    }

    pub fn std_dev(&self) -> f64 {
        let mu = self.mean();
        let var = self
            .entries
            .iter()
            .map(|(&a, &p)| p * (a as f64 - mu).powi(2))
            .sum::<f64>()
            / self.total();
        var.sqrt()
    }

    /// Smallest `alpha` of maximal probability.
    pub fn argmax(&self) -> Option<u64> {
        self.entries
            .iter()
            .fold(None, |best: Option<(u64, f64)>, (&a, &p)| match best {
                Some((_, bp)) if bp >= p => best,
                _ => Some((a, p)),
            })
            .map(|(a, _)| a)
    }
}

/// Exact class-uniform pdf `P(alpha) = count(alpha) / total`. Each
/// probability is one correctly rounded division of big integers.
pub fn theoretical_pdf(spec: NecklaceSpec) -> Result<DiscretePdf> {
    let dist = alternation_distribution(spec)?;
    let total = BigInt::from(dist.values().sum::<num_bigint::BigUint>());
    let entries = dist
        .into_iter()
        .map(|(alpha, c)| {
            let p = BigRational::new(BigInt::from(c), total.clone());
            (alpha.get(), p.to_f64().expect("probability in [0, 1]"))
        })
        .collect();
    Ok(DiscretePdf::from_entries(entries, Provenance::Theoretical))
}

/// `A * exp(-(alpha - alpha0)^2 / (2 sigma^2))` fitted to a pdf.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianFit {
    pub alpha0: f64,
    pub sigma: f64,
    /// Peak height, i.e. the curve's value at `alpha0`.
    pub amplitude: f64,
    /// Root-mean-square residual over the fitted points.
    pub rmse: f64,
}

impl GaussianFit {
    pub fn eval(&self, alpha: f64) -> f64 {
        gauss(self.amplitude, self.alpha0, self.sigma, alpha)
    }
}

fn gauss(a: f64, mu: f64, sigma: f64, x: f64) -> f64 {
    let z = (x - mu) / sigma;
    a * (-0.5 * z * z).exp()
}

const SIGMA_FLOOR: f64 = 1e-6;
const REL_TOL: f64 = 1e-9;
const MAX_ITER: usize = 10_000;

/// Unweighted least-squares Gaussian fit over the nonzero points of `pdf`.
///
/// Starts from the pdf's weighted mean and standard deviation with the
/// largest entry as amplitude, then runs Levenberg-Marquardt until the
/// relative parameter change drops below `1e-9`.
pub fn fit_gaussian(pdf: &DiscretePdf) -> Result<GaussianFit> {
    let pts: Vec<(f64, f64)> = pdf
        .entries()
        .iter()
        .filter(|(_, &p)| p > 0.0)
        .map(|(&a, &p)| (a as f64, p))
        .collect();
    if pts.len() < 3 {
        return Err(Error::SupportTooSmall { points: pts.len() });
    }
    let mass: f64 = pts.iter().map(|p| p.1).sum();
    let mu0 = pts.iter().map(|(x, y)| x * y).sum::<f64>() / mass;
    let var0 = pts.iter().map(|(x, y)| y * (x - mu0).powi(2)).sum::<f64>() / mass;
    let a0 = pts.iter().map(|p| p.1).fold(f64::MIN, f64::max);
    let mut theta = [a0, mu0, var0.sqrt()];
    if theta[2] < SIGMA_FLOOR {
        return Err(Error::DegenerateSigma(SIGMA_FLOOR));
    }

    let cost = |t: &[f64; 3]| -> f64 {
        pts.iter().map(|&(x, y)| (gauss(t[0], t[1], t[2], x) - y).powi(2)).sum()
    };
    let mut current = cost(&theta);
    let mut lambda = 1e-3;

    for _ in 0..MAX_ITER {
        let (a, mu, s) = (theta[0], theta[1], theta[2]);
        let mut jtj = [[0.0f64; 3]; 3];
        let mut jtr = [0.0f64; 3];
        for &(x, y) in &pts {
            let e = gauss(1.0, mu, s, x);
            let d = x - mu;
            let row = [e, a * e * d / (s * s), a * e * d * d / (s * s * s)];
            let r = a * e - y;
            for i in 0..3 {
                jtr[i] += row[i] * r;
                for j in 0..3 {
                    jtj[i][j] += row[i] * row[j];
                }
            }
        }

        let mut m = jtj;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += lambda * jtj[i][i];
        }
        let Some(step) = solve3(m, [-jtr[0], -jtr[1], -jtr[2]]) else {
            lambda *= 10.0;
            continue;
        };
        let trial = [theta[0] + step[0], theta[1] + step[1], theta[2] + step[2]];
        let trial_cost = cost(&trial);
        if trial_cost <= current {
            let rel = (0..3)
                .map(|i| step[i].abs() / trial[i].abs().max(f64::MIN_POSITIVE))
                .fold(0.0, f64::max);
            theta = trial;
            current = trial_cost;
            lambda = (lambda / 10.0).max(1e-12);
            if theta[2].abs() < SIGMA_FLOOR {
                return Err(Error::DegenerateSigma(SIGMA_FLOOR));
            }
            if rel < REL_TOL {
                break;
            }
        } else {
            lambda *= 10.0;
            // No representable step improves the cost: at the minimum.
            if lambda > 1e16 {
                break;
            }
        }
    }

    let sigma = theta[2].abs();
    if sigma < SIGMA_FLOOR {
        return Err(Error::DegenerateSigma(SIGMA_FLOOR));
    }
    Ok(GaussianFit {
        alpha0: theta[1],
        sigma,
        amplitude: theta[0],
        rmse: (current / pts.len() as f64).sqrt(),
    })
}

/// Gaussian elimination with partial pivoting on a 3x3 system.
fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            let pivot_row = m[col];
            for (dst, src) in m[row].iter_mut().zip(pivot_row).skip(col) {
                *dst -= f * src;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let s: f64 = (i + 1..3).map(|k| m[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / m[i][i];
    }
    Some(x)
}

/// One sweep row: the content it was computed for and the fit, or the
/// error that prevented it.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub spec: NecklaceSpec,
    /// False when the requested ratio did not divide `N` and the split was rounded.
    pub exact_split: bool,
    pub fit: Result<GaussianFit>,
}

fn fit_row(spec: NecklaceSpec, exact_split: bool) -> SweepRow {
    let fit = theoretical_pdf(spec).and_then(|pdf| fit_gaussian(&pdf));
    SweepRow { spec, exact_split, fit }
}

/// Fixed white count, varying black count. Rows follow input order.
pub fn sweep_fixed_at(n_at: u64, gc_values: &[u64]) -> Result<Vec<SweepRow>> {
    if gc_values.is_empty() {
        return Err(Error::InvalidInput("sweep needs at least one n_gc value".into()));
    }
    Ok(gc_values
        .par_iter()
        .map(|&n_gc| match NecklaceSpec::new(n_at, n_gc) {
            Ok(spec) => fit_row(spec, true),
            Err(e) => SweepRow { spec: NecklaceSpec { n_at, n_gc }, exact_split: true, fit: Err(e) },
        })
        .collect())
}

/// Result of a fixed-ratio sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSweep {
    pub rows: Vec<SweepRow>,
    /// Least-squares slope of `alpha0` against `N` over the rows that fitted.
    pub slope: Option<f64>,
}

/// Splits `n` in the ratio `gc : at`. When `gc + at` does not divide `n`,
/// `n_at` is rounded to the nearest integer (halves round up) and `n_gc`
/// takes the rest.
pub fn split_by_ratio(n: u64, gc: u64, at: u64) -> (NecklaceSpec, bool) {
    let parts = gc + at;
    let exact = n.is_multiple_of(parts);
    let n_at = (2 * n * at + parts) / (2 * parts);
    (NecklaceSpec { n_at, n_gc: n - n_at }, exact)
}

/// Fixed `n_gc : n_at` ratio, varying total length `N`.
pub fn sweep_fixed_ratio(ratio_gc_to_at: (u64, u64), n_values: &[u64]) -> Result<RatioSweep> {
    let (gc, at) = ratio_gc_to_at;
    if gc == 0 || at == 0 {
        return Err(Error::InvalidInput("ratio parts must be positive".into()));
    }
    if n_values.is_empty() {
        return Err(Error::InvalidInput("sweep needs at least one N value".into()));
    }
    let rows: Vec<SweepRow> = n_values
        .par_iter()
        .map(|&n| {
            let (spec, exact) = split_by_ratio(n, gc, at);
            match NecklaceSpec::new(spec.n_at, spec.n_gc) {
                Ok(spec) => fit_row(spec, exact),
                Err(e) => SweepRow { spec, exact_split: exact, fit: Err(e) },
            }
        })
        .collect();
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| r.fit.as_ref().ok().map(|f| (r.spec.len() as f64, f.alpha0)))
        .collect();
    Ok(RatioSweep { slope: ols_slope(&pts), rows })
}

/// Ordinary least-squares slope; `None` for fewer than two distinct abscissae.
pub fn ols_slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: u64, b: u64) -> NecklaceSpec {
        NecklaceSpec::new(a, b).unwrap()
    }

    fn synthetic(a: f64, mu: f64, sigma: f64, lo: u64, hi: u64) -> DiscretePdf {
        let entries = (lo..=hi).step_by(2).map(|x| (x, gauss(a, mu, sigma, x as f64))).collect();
        DiscretePdf::from_entries(entries, Provenance::Empirical)
    }

    #[test]
    fn theoretical_examples() {
        let p = theoretical_pdf(spec(2, 2)).unwrap();
        assert_eq!(p.entries().iter().map(|(&a, &v)| (a, v)).collect::<Vec<_>>(), vec![(0, 0.0), (2, 0.5), (4, 0.5)]);
        let p = theoretical_pdf(spec(1, 1)).unwrap();
        assert_eq!(p.get(2), 1.0);
        assert_eq!(p.provenance(), Provenance::Theoretical);
    }

    #[test]
    fn theoretical_pdf_is_normalized() {
        for (a, b) in [(1, 1), (3, 7), (10, 10), (40, 60), (50, 50), (100, 25), (7, 0)] {
            let p = theoretical_pdf(spec(a, b)).unwrap();
            assert!((p.total() - 1.0).abs() < 1e-12, "({a}, {b}): {}", p.total());
            assert!(p.entries().keys().all(|k| k % 2 == 0 && *k <= 2 * a.min(b)));
        }
    }

    #[test]
    fn recovers_synthetic_gaussian() {
        let fit = fit_gaussian(&synthetic(0.08, 50.0, 5.0, 30, 70)).unwrap();
        assert!((fit.amplitude - 0.08).abs() < 1e-6 * 0.08);
        assert!((fit.alpha0 - 50.0).abs() < 1e-6 * 50.0);
        assert!((fit.sigma - 5.0).abs() < 1e-6 * 5.0);
        assert!(fit.rmse < 1e-10);
    }

    #[test]
    fn recovers_across_widths() {
        for sigma in [1.0, 2.5, 4.0, 7.5, 12.0, 20.0] {
            let mu = 101.3;
            let lo = 0;
            let hi = 202 + (8.0 * sigma) as u64;
            let fit = fit_gaussian(&synthetic(0.3, mu, sigma, lo, hi)).unwrap();
            assert!((fit.amplitude / 0.3 - 1.0).abs() < 1e-6, "{sigma}: {fit:?}");
            assert!((fit.alpha0 / mu - 1.0).abs() < 1e-6, "{sigma}: {fit:?}");
            assert!((fit.sigma / sigma - 1.0).abs() < 1e-6, "{sigma}: {fit:?}");
        }
    }

    #[test]
    fn symmetric_pdf_centers_exactly() {
        let entries = [(2, 0.25), (4, 0.5), (6, 0.25)].into_iter().collect();
        let fit = fit_gaussian(&DiscretePdf::from_entries(entries, Provenance::Empirical)).unwrap();
        assert_eq!(fit.alpha0, 4.0);
        assert!((fit.eval(fit.alpha0) - fit.amplitude).abs() < 1e-15);
    }

    #[test]
    fn small_support_rejected() {
        let p = theoretical_pdf(spec(1, 1)).unwrap();
        assert_eq!(fit_gaussian(&p), Err(Error::SupportTooSmall { points: 1 }));
        let p = theoretical_pdf(spec(2, 2)).unwrap();
        assert_eq!(fit_gaussian(&p), Err(Error::SupportTooSmall { points: 2 }));
    }

    #[test]
    fn ratio_split() {
        assert_eq!(split_by_ratio(84, 6, 1), (spec(12, 72), true));
        assert_eq!(split_by_ratio(84, 2, 1), (spec(28, 56), true));
        assert_eq!(split_by_ratio(10, 2, 1), (spec(3, 7), false));
        assert_eq!(split_by_ratio(11, 1, 1), (spec(6, 5), false));
    }

    #[test]
    fn slope_of_line() {
        let pts: Vec<(f64, f64)> = (0..5).map(|i| (i as f64, 2.0 * i as f64 + 1.0)).collect();
        assert!((ols_slope(&pts).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(ols_slope(&pts[..1]), None);
    }

    #[test]
    fn sweep_reports_row_errors_and_continues() {
        let rows = sweep_fixed_at(1, &[1, 5, 0]).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(matches!(rows[0].fit, Err(Error::SupportTooSmall { .. })));
        // n_at = 1 always gives support {0, 2} at most.
        assert!(rows[1].fit.is_err());
        assert!(sweep_fixed_at(1, &[]).is_err());
        let rows = sweep_fixed_at(10, &[10, 20]).unwrap();
        assert!(rows.iter().all(|r| r.fit.is_ok()));
    }
}
