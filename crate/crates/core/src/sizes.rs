//! Closed-form family sizes, lower bounds and the choice of k.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// Exact rational used for the bounds.
pub type Rational = Ratio<i64>;

/// |C| = (2m+1)(2n+b+1) + n with m = ⌊k/2⌋, n = k − m.
pub fn size_c(k: u32, b: u32) -> u64 {
    let (m, n) = ((k / 2) as u64, (k - k / 2) as u64);
    (2 * m + 1) * (2 * n + b as u64 + 1) + n
}

/// |Γ| = |C| + (g − 2k)(4m + 3).
pub fn size_gamma(g: u32, b: u32, k: u32) -> u64 {
    assert!(g > 2 * k, "need g - 2k >= 1");
    size_c(k, b) + (g - 2 * k) as u64 * (4 * (k / 2) as u64 + 3)
}

/// |Ω| = (g − 2k)(2k + 2).
pub fn size_omega(g: u32, k: u32) -> u64 {
    assert!(g > 2 * k, "need g - 2k >= 1");
    (g - 2 * k) as u64 * (2 * k as u64 + 2)
}

/// g²/3 + 5g/18 − 1 + b(g − 2)/3.
pub fn bound_a(g: u32, b: u32) -> Rational {
    let (g, b) = (g as i64, b as i64);
    Rational::new(g * g, 3) + Rational::new(5 * g, 18) - 1 + Rational::new(b * (g - 2), 3)
}

/// (g² + 3g + 2)/4.
pub fn bound_b(g: u32) -> Rational {
    let g = g as i64;
    Rational::new(g * g + 3 * g + 2, 4)
}

pub fn default_k_a(g: u32) -> u32 {
    (g / 3).max(2).min(g.saturating_sub(1) / 2)
}

pub fn default_k_b(g: u32) -> u32 {
    (g / 4).max(1).min(g.saturating_sub(1) / 2)
}

/// The single-expression size obtained by substituting k = ⌊g/3⌋.
pub fn theorem_a_closed_form(g: u32, b: u32) -> u64 {
    let (g, b) = (g as u64, b as u64);
    let t = g / 3;
    let s = g / 6;
    t * t + 5 * t / 2 + 1 + (g - 2 * t) * (4 * s + 3) + (2 * s + 1) * b
}

/// Largest |Γ| over 2 ≤ k ≤ (g−1)/2; the smallest maximizer wins ties.
pub fn optimal_k_a(g: u32, b: u32) -> Option<u32> {
    (2..=g.saturating_sub(1) / 2).max_by_key(|&k| (size_gamma(g, b, k), std::cmp::Reverse(k)))
}

/// Largest |Ω| over 1 ≤ k ≤ (g−1)/2; the smallest maximizer wins ties.
pub fn optimal_k_b(g: u32) -> Option<u32> {
    (1..=g.saturating_sub(1) / 2).max_by_key(|&k| (size_omega(g, k), std::cmp::Reverse(k)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedSizes {
    pub g: u32,
    pub b: u32,
    pub k: u32,
    pub size_c: u64,
    pub size_gamma: Option<u64>,
    pub size_omega: Option<u64>,
    /// `"n/d"` strings; exact.
    pub bound_a: String,
    pub bound_b: String,
    pub optimal_k_a: Option<u32>,
    pub optimal_k_b: Option<u32>,
}

/// Every size and bound for one (g, b, k).
pub fn predicted_sizes(g: u32, b: u32, k: u32) -> PredictedSizes {
    let legal = g > 2 * k;
    PredictedSizes {
        g,
        b,
        k,
        size_c: size_c(k, b),
        size_gamma: legal.then(|| size_gamma(g, b, k)),
        size_omega: (legal && b == 0).then(|| size_omega(g, k)),
        bound_a: bound_a(g, b).to_string(),
        bound_b: bound_b(g).to_string(),
        optimal_k_a: optimal_k_a(g, b),
        optimal_k_b: optimal_k_b(g),
    }
}
