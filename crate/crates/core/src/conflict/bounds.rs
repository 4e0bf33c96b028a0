use num_bigint::BigUint;

use crate::hypergraph::{Hypergraph, DEFAULT_EXHAUSTIVE_LIMIT};

/// Closed-form bounds and threshold predictions for the single conflict
/// chromatic number. Logarithms are natural. `None` marks a formula that is
/// not applicable to the instance.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoryBounds {
    pub average_degree: f64,
    pub max_degree: usize,
    pub degeneracy: usize,
    /// `ceil((d / ln d)^(1/r))`, average degree `d >= 3`.
    pub avg_deg_lower: Option<u64>,
    /// `ceil((d / (r ln d))^(1/(r-1)))` for the correspondence chromatic
    /// number, `d >= 3`.
    pub dp_lower: Option<u64>,
    /// `ceil(r * Delta^(1/r))`, maximum degree `Delta >= 1`.
    pub max_deg_upper: Option<u64>,
    /// Degeneracy plus one.
    pub degeneracy_upper: u64,
    /// `sqrt(n / (2 ln n))`, `n >= 2`.
    pub threshold_complete_graph: Option<f64>,
    /// `(n^(r-1) / (r! ln n))^(1/r)`, `n >= 2`.
    pub threshold_complete_uniform: Option<f64>,
    /// `(rho / ln rho)^(1/r)` with `rho` the maximum density, `rho > 1`.
    pub threshold_density: Option<f64>,
    /// Whether `rho` above was computed exactly.
    pub density_exact: bool,
}

/// `ceil(r * delta^(1/r))` in exact integer arithmetic: the least `t` with
/// `t^r >= r^r * delta`.
pub fn ceil_root_product(r: usize, delta: u64) -> u64 {
    let target = BigUint::from(r).pow(r as u32) * BigUint::from(delta);
    let mut t = (r as f64 * (delta as f64).powf(1.0 / r as f64)).floor() as u64;
    t = t.saturating_sub(1);
    while BigUint::from(t).pow(r as u32) < target {
        t += 1;
    }
    t
}

pub fn theory_bounds(h: &Hypergraph) -> TheoryBounds {
    let r = h.uniformity();
    let rf = r as f64;
    let n = h.num_vertices();
    let d = h.average_degree();
    let max_degree = h.max_degree();
    let degeneracy = h.degeneracy_order().degeneracy;

    let lower_applicable = d >= 3.0;
    let avg_deg_lower = lower_applicable.then(|| (d / d.ln()).powf(1.0 / rf).ceil() as u64);
    let dp_lower =
        lower_applicable.then(|| (d / (rf * d.ln())).powf(1.0 / (rf - 1.0)).ceil() as u64);
    let max_deg_upper = (max_degree > 0).then(|| ceil_root_product(r, max_degree as u64));

    let nf = n as f64;
    let threshold_complete_graph = (n >= 2).then(|| (nf / (2.0 * nf.ln())).sqrt());
    let threshold_complete_uniform = (n >= 2).then(|| {
        let r_factorial: f64 = (1..=r).map(|i| i as f64).product();
        (nf.powf(rf - 1.0) / (r_factorial * nf.ln())).powf(1.0 / rf)
    });

    let (threshold_density, density_exact) = match h.max_density(DEFAULT_EXHAUSTIVE_LIMIT) {
        Ok(md) => {
            let rho = *md.value.numer() as f64 / *md.value.denom() as f64;
            (
                (rho > 1.0).then(|| (rho / rho.ln()).powf(1.0 / rf)),
                md.exact,
            )
        }
        Err(_) => (None, false),
    };

    TheoryBounds {
        average_degree: d,
        max_degree,
        degeneracy,
        avg_deg_lower,
        dp_lower,
        max_deg_upper,
        degeneracy_upper: degeneracy as u64 + 1,
        threshold_complete_graph,
        threshold_complete_uniform,
        threshold_density,
        density_exact,
    }
}
