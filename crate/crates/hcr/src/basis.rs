//! Orthonormal function bases on the unit interval.
//!
//! Two continuous families are provided, both orthonormal under
//! ∫₀¹ f_i f_j dx = δ_ij:
//!
//! * rescaled Legendre polynomials f_j(x) = √(2j+1)·P_j(2x−1) (default),
//! * the cosine family {1, √2 cos(πx), √2 cos(2πx), …}.
//!
//! A weighted discrete basis over a categorical alphabet is built by
//! Gram–Schmidt under the frequency-weighted scalar product
//! [f, g] = Σ_x w_x f_x g_x.

use crate::error::{Error, Result};

/// Highest polynomial degree accepted anywhere a degree is configured.
pub const MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Legendre,
    Cosine,
}

impl std::fmt::Display for BasisKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisKind::Legendre => write!(f, "legendre"),
            BasisKind::Cosine => write!(f, "cosine"),
        }
    }
}

impl std::str::FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "legendre" => Ok(BasisKind::Legendre),
            "cosine" => Ok(BasisKind::Cosine),
            other => Err(Error::Config(format!(
                "unknown basis {other:?} (expected legendre or cosine)"
            ))),
        }
    }
}

/// f_j(x) for the chosen family. Errors when x is outside [0, 1].
pub fn eval_basis(kind: BasisKind, j: usize, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "basis argument {x} outside [0, 1]"
        )));
    }
    Ok(eval_basis_unchecked(kind, j, x))
}

/// f_j(x) without the domain check, for hot paths where x is normalized by
/// construction.
#[inline]
pub(crate) fn eval_basis_unchecked(kind: BasisKind, j: usize, x: f64) -> f64 {
    match kind {
        BasisKind::Legendre => {
            let u = 2.0 * x - 1.0;
            legendre_raw(j, u) * ((2 * j + 1) as f64).sqrt()
        }
        BasisKind::Cosine => {
            if j == 0 {
                1.0
            } else {
                std::f64::consts::SQRT_2 * (j as f64 * std::f64::consts::PI * x).cos()
            }
        }
    }
}

/// Fill `out[j] = f_j(x)` for j = 0..out.len() in one recurrence pass.
#[inline]
pub(crate) fn eval_all_unchecked(kind: BasisKind, x: f64, out: &mut [f64]) {
    if out.is_empty() {
        return;
    }
    out[0] = 1.0;
    match kind {
        BasisKind::Legendre => {
            let u = 2.0 * x - 1.0;
            let mut p_prev = 1.0;
            let mut p = u;
            for (j, slot) in out.iter_mut().enumerate().skip(1) {
                if j > 1 {
                    let k = j - 1;
                    let p_next = ((2 * k + 1) as f64 * u * p - k as f64 * p_prev) / (k + 1) as f64;
                    p_prev = p;
                    p = p_next;
                }
                *slot = p * ((2 * j + 1) as f64).sqrt();
            }
        }
        BasisKind::Cosine => {
            // cos(jθ) by the Chebyshev recurrence
            let theta = std::f64::consts::PI * x;
            let c1 = theta.cos();
            let mut c_prev = 1.0;
            let mut c = c1;
            for (j, slot) in out.iter_mut().enumerate().skip(1) {
                if j > 1 {
                    let c_next = 2.0 * c1 * c - c_prev;
                    c_prev = c;
                    c = c_next;
                }
                *slot = std::f64::consts::SQRT_2 * c;
            }
        }
    }
}

/// Σ_j coeffs[j] f_j(x), single recurrence pass.
#[inline]
pub(crate) fn eval_poly_unchecked(kind: BasisKind, coeffs: &[f64], x: f64) -> f64 {
    match kind {
        BasisKind::Legendre => {
            let u = 2.0 * x - 1.0;
            let mut acc = coeffs[0];
            let mut p_prev = 1.0;
            let mut p = u;
            for (j, &a) in coeffs.iter().enumerate().skip(1) {
                if j > 1 {
                    let k = j - 1;
                    let p_next = ((2 * k + 1) as f64 * u * p - k as f64 * p_prev) / (k + 1) as f64;
                    p_prev = p;
                    p = p_next;
                }
                acc += a * p * ((2 * j + 1) as f64).sqrt();
            }
            acc
        }
        BasisKind::Cosine => {
            let theta = std::f64::consts::PI * x;
            let c1 = theta.cos();
            let mut acc = coeffs[0];
            let mut c_prev = 1.0;
            let mut c = c1;
            for (j, &a) in coeffs.iter().enumerate().skip(1) {
                if j > 1 {
                    let c_next = 2.0 * c1 * c - c_prev;
                    c_prev = c;
                    c = c_next;
                }
                acc += a * std::f64::consts::SQRT_2 * c;
            }
            acc
        }
    }
}

/// P_j(u) on [-1, 1] by the three-term recurrence.
#[inline]
fn legendre_raw(j: usize, u: f64) -> f64 {
    match j {
        0 => 1.0,
        1 => u,
        _ => {
            let mut p_prev = 1.0;
            let mut p = u;
            for k in 1..j {
                let p_next = ((2 * k + 1) as f64 * u * p - k as f64 * p_prev) / (k + 1) as f64;
                p_prev = p;
                p = p_next;
            }
            p
        }
    }
}

/// ∫₀ˣ f_j(t) dt for the rescaled Legendre family, j ≥ 1, via
/// ∫ P_j = (P_{j+1} − P_{j−1}) / (2j+1) on [-1, 1]. Used by the synthetic
/// sampler's closed-form CDF.
pub(crate) fn legendre_antiderivative(j: usize, x: f64) -> f64 {
    debug_assert!(j >= 1);
    let u = 2.0 * x - 1.0;
    let p_hi = legendre_raw(j + 1, u);
    let p_lo = legendre_raw(j - 1, u);
    // boundary terms at u = -1 cancel: P_{j+1}(-1) = P_{j-1}(-1)
    ((2 * j + 1) as f64).sqrt() * (p_hi - p_lo) / (2.0 * (2 * j + 1) as f64)
}

/// Orthonormal vectors over a categorical alphabet under the
/// frequency-weighted scalar product.
#[derive(Debug, Clone)]
pub struct DiscreteBasis {
    /// Distinct levels in first-appearance order.
    pub levels: Vec<String>,
    /// Level frequencies; sum to 1.
    pub weights: Vec<f64>,
    /// vectors[j][l] = f_j at level l, for j = 0..=m. f_0 is the constant-1
    /// vector, so the zeroth coefficient of any expansion is the total mass.
    pub vectors: Vec<Vec<f64>>,
}

impl DiscreteBasis {
    /// [f, g] = Σ_l w_l f_l g_l
    pub fn scalar_product(&self, f: &[f64], g: &[f64]) -> f64 {
        let mut acc = crate::quad::KahanSum::new();
        for ((&w, &a), &b) in self.weights.iter().zip(f).zip(g) {
            acc.add(w * a * b);
        }
        acc.value()
    }
}

/// Build the weighted discrete basis of degree m from observed symbols.
///
/// Levels are ranked in first-appearance order; each level's seed position is
/// its tie-centered empirical quantile, and the seed vectors f_j(position)
/// are orthonormalized by modified Gram–Schmidt under the weighted product.
/// Each vector is signed so that its entry at the last level is positive.
pub fn build_discrete_basis(values: &[String], m: usize) -> Result<DiscreteBasis> {
    if values.is_empty() {
        return Err(Error::Domain("discrete basis from empty column".into()));
    }
    let mut levels: Vec<String> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    let mut index: std::collections::HashMap<&str, usize> = std::collections::HashMap::new();
    for v in values {
        match index.get(v.as_str()) {
            Some(&i) => counts[i] += 1,
            None => {
                index.insert(v.as_str(), levels.len());
                levels.push(v.clone());
                counts.push(1);
            }
        }
    }
    let s = levels.len();
    if m >= s {
        return Err(Error::Domain(format!(
            "discrete basis degree {m} requires more than {m} distinct levels, found {s}"
        )));
    }
    let n = values.len() as f64;
    let weights: Vec<f64> = counts.iter().map(|&c| c as f64 / n).collect();

    // tie-centered quantile of each level block, in level order
    let mut positions = vec![0.0; s];
    let mut cum = 0usize;
    for (l, &c) in counts.iter().enumerate() {
        positions[l] = (2 * cum + c) as f64 / (2.0 * n);
        cum += c;
    }

    let mut vectors: Vec<Vec<f64>> = (0..=m)
        .map(|j| {
            positions
                .iter()
                .map(|&x| eval_basis_unchecked(BasisKind::Legendre, j, x))
                .collect()
        })
        .collect();

    let basis_stub = DiscreteBasis {
        levels: levels.clone(),
        weights: weights.clone(),
        vectors: Vec::new(),
    };
    for j in 0..=m {
        for k in 0..j {
            let (done, rest) = vectors.split_at_mut(j);
            let proj = basis_stub.scalar_product(&done[k], &rest[0]);
            for (slot, &b) in rest[0].iter_mut().zip(&done[k]) {
                *slot -= proj * b;
            }
        }
        let norm = basis_stub.scalar_product(&vectors[j], &vectors[j]).sqrt();
        if norm < 1e-12 {
            return Err(Error::Domain(format!(
                "discrete basis degenerates at degree {j}"
            )));
        }
        for slot in vectors[j].iter_mut() {
            *slot /= norm;
        }
        // deterministic sign: last level with a non-negligible entry is positive
        if let Some(&pivot) = vectors[j].iter().rev().find(|v| v.abs() > 1e-12) {
            if pivot < 0.0 {
                for slot in vectors[j].iter_mut() {
                    *slot = -*slot;
                }
            }
        }
    }

    Ok(DiscreteBasis {
        levels,
        weights,
        vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::rule64;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    // closed forms as printed oracles
    fn f1(x: f64) -> f64 {
        3f64.sqrt() * (2.0 * x - 1.0)
    }
    fn f2(x: f64) -> f64 {
        5f64.sqrt() * (6.0 * x * x - 6.0 * x + 1.0)
    }
    fn f3(x: f64) -> f64 {
        7f64.sqrt() * (20.0 * x.powi(3) - 30.0 * x * x + 12.0 * x - 1.0)
    }
    fn f4(x: f64) -> f64 {
        3.0 * (70.0 * x.powi(4) - 140.0 * x.powi(3) + 90.0 * x * x - 20.0 * x + 1.0)
    }

    #[test]
    fn printed_values() {
        assert_relative_eq!(
            eval_basis(BasisKind::Legendre, 1, 1.0).unwrap(),
            3f64.sqrt(),
            epsilon = 1e-14
        );
        assert_eq!(eval_basis(BasisKind::Legendre, 1, 0.5).unwrap(), 0.0);
        assert_relative_eq!(
            eval_basis(BasisKind::Legendre, 2, 0.5).unwrap(),
            -5f64.sqrt() / 2.0,
            epsilon = 1e-14
        );
        assert_relative_eq!(
            eval_basis(BasisKind::Cosine, 2, 0.25).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        assert_eq!(eval_basis(BasisKind::Cosine, 0, 0.3).unwrap(), 1.0);
    }

    #[test]
    fn domain_checked() {
        assert!(eval_basis(BasisKind::Legendre, 1, -0.1).is_err());
        assert!(eval_basis(BasisKind::Cosine, 1, 1.1).is_err());
    }

    #[test]
    fn recurrence_matches_closed_forms() {
        for i in 0..1000 {
            let x = i as f64 / 999.0;
            assert_relative_eq!(
                eval_basis_unchecked(BasisKind::Legendre, 1, x),
                f1(x),
                epsilon = 1e-12
            );
            assert_relative_eq!(
                eval_basis_unchecked(BasisKind::Legendre, 2, x),
                f2(x),
                epsilon = 1e-12
            );
            assert_relative_eq!(
                eval_basis_unchecked(BasisKind::Legendre, 3, x),
                f3(x),
                epsilon = 1e-12
            );
            assert_relative_eq!(
                eval_basis_unchecked(BasisKind::Legendre, 4, x),
                f4(x),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn continuous_orthonormality() {
        let rule = rule64();
        for kind in [BasisKind::Legendre, BasisKind::Cosine] {
            for i in 0..=10usize {
                for j in 0..=10usize {
                    let got = rule.integrate(|x| {
                        eval_basis_unchecked(kind, i, x) * eval_basis_unchecked(kind, j, x)
                    });
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (got - want).abs() < 1e-9,
                        "{kind} <f{i}, f{j}> = {got}"
                    );
                }
            }
        }
    }

    #[test]
    fn eval_all_consistent() {
        let mut out = vec![0.0; 13];
        for kind in [BasisKind::Legendre, BasisKind::Cosine] {
            for i in 0..50 {
                let x = i as f64 / 49.0;
                eval_all_unchecked(kind, x, &mut out);
                for (j, &v) in out.iter().enumerate() {
                    assert_relative_eq!(v, eval_basis_unchecked(kind, j, x), epsilon = 1e-13);
                }
            }
        }
    }

    #[test]
    fn poly_eval_consistent() {
        let coeffs = [1.0, 0.4, -0.3, 0.2, -0.1, 0.05];
        for kind in [BasisKind::Legendre, BasisKind::Cosine] {
            for i in 0..50 {
                let x = i as f64 / 49.0;
                let direct: f64 = coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, &a)| a * eval_basis_unchecked(kind, j, x))
                    .sum();
                assert_relative_eq!(
                    eval_poly_unchecked(kind, &coeffs, x),
                    direct,
                    epsilon = 1e-13
                );
            }
        }
    }

    #[test]
    fn antiderivative_matches_quadrature() {
        let rule = rule64();
        for j in 1..=9usize {
            for &x in &[0.1, 0.25, 0.5, 0.8, 1.0] {
                // ∫₀ˣ f_j dt by rescaled quadrature on [0, x]
                let want = rule.integrate(|t| eval_basis_unchecked(BasisKind::Legendre, j, t * x)) * x;
                assert_relative_eq!(legendre_antiderivative(j, x), want, epsilon = 1e-12);
            }
            // whole-interval integral of any non-constant member vanishes
            assert_relative_eq!(legendre_antiderivative(j, 1.0), 0.0, epsilon = 1e-12);
        }
    }

    fn strings(values: &[&str]) -> Vec<String> {
        values.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn discrete_binary_balanced() {
        let vals = strings(&["0", "1", "0", "1"]);
        let basis = build_discrete_basis(&vals, 1).unwrap();
        assert_eq!(basis.vectors[0], vec![1.0, 1.0]);
        assert_relative_eq!(basis.vectors[1][0], -1.0, epsilon = 1e-12);
        assert_relative_eq!(basis.vectors[1][1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn discrete_binary_skewed() {
        // P(first) = 3/4: f1 = (-1/sqrt(3), sqrt(3)) up to sign
        let vals = strings(&["a", "a", "a", "b"]);
        let basis = build_discrete_basis(&vals, 1).unwrap();
        assert_relative_eq!(basis.vectors[1][0], -1.0 / 3f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(basis.vectors[1][1], 3f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn discrete_degree_must_fit_alphabet() {
        let vals = strings(&["a", "b", "a"]);
        assert!(build_discrete_basis(&vals, 2).is_err());
        assert!(build_discrete_basis(&vals, 1).is_ok());
    }

    proptest! {
        #[test]
        fn discrete_orthonormality(counts in proptest::collection::vec(1usize..20, 2..=10)) {
            let mut vals = Vec::new();
            for (l, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    vals.push(format!("L{l}"));
                }
            }
            let s = counts.len();
            let m = s - 1;
            let basis = build_discrete_basis(&vals, m).unwrap();
            let wsum: f64 = basis.weights.iter().sum();
            prop_assert!((wsum - 1.0).abs() < 1e-12);
            for j in 0..=m {
                for k in 0..=m {
                    let got = basis.scalar_product(&basis.vectors[j], &basis.vectors[k]);
                    let want = if j == k { 1.0 } else { 0.0 };
                    prop_assert!((got - want).abs() < 1e-9, "[f{}, f{}] = {}", j, k, got);
                }
            }
        }
    }
}
