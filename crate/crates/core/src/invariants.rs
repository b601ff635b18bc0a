//! Closed-form graph invariants and the per-chain report.
//!
//! Kirchhoff indices are exact rationals built from the Lucas companions
//! (S_n, T_n): the cycle contribution (32n³−2n)/3 plus 576·n²·T_n over
//! S_n + 2 (Möbius) or S_n − 2 (cylinder). Spanning-tree counts are
//! 2n(S_n ± 2). The Wiener closed forms are the polynomials
//! 32n³ + 16n² + 4n (Möbius) and 32n³ + 16n² − 8n (cylinder); the Möbius
//! one is oracle-verified for every n ≥ 2, but the cylinder one disagrees
//! with the exact BFS distance sum by 16n at every order checked (the true
//! sums fit 32n³ + 16n² + 8n), and reports flag this. See
//! [`InvariantReport::wiener_formula_valid`].

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{ChainGraph, ChainVariant};
use crate::laplacian::laplacian;
use crate::matrix::decimal_string;
use crate::oracles;
use crate::sequences::{det_ls, lucas, minor_sum};
use crate::spectral;

/// Largest vertex count for which reports run the exact BFS Wiener oracle.
const WIENER_ORACLE_VERTEX_CAP: usize = 1024;

fn big(n: usize) -> BigInt {
    BigInt::from(n as u64)
}

/// Exact Kirchhoff index: (32n³−2n)/3 + 576·n²·T_n/(S_n ± 2).
pub fn kirchhoff_closed(n: usize, variant: ChainVariant) -> BigRational {
    assert!(n >= 1, "chain order must be at least 1");
    let n_big = big(n);
    let cubic = BigInt::from(32) * &n_big * &n_big * &n_big - BigInt::from(2) * &n_big;
    // 32n³−2n = 2n(4n−1)(4n+1) is always divisible by 3
    assert!((&cubic % BigInt::from(3)).is_zero(), "cycle term must be integral");
    let cycle_term = BigRational::from_integer(cubic / BigInt::from(3));
    let (_, t_n) = lucas(n);
    let numerator = BigInt::from(576) * &n_big * &n_big * t_n;
    cycle_term + BigRational::new(numerator, det_ls(n, variant))
}

/// Floating Kirchhoff index via the reciprocal-eigenvalue formula
/// |V|·Σ_{k≥2} 1/μ_k. Guards against a near-zero algebraic connectivity.
pub fn kirchhoff_spectral(g: &ChainGraph) -> Result<f64> {
    let eig = spectral::symmetric_eigenvalues(&laplacian(g))?;
    if eig.len() > 1 && eig[1] < 1e-12 {
        return Err(Error::NearSingularSpectrum(eig[1]));
    }
    let sum: f64 = eig.iter().skip(1).map(|v| 1.0 / v).sum();
    Ok(g.vertex_count() as f64 * sum)
}

/// Kirchhoff index of the cycle C_m: (m³−m)/12.
pub fn kirchhoff_cycle(m: usize) -> Result<BigRational> {
    if m < 3 {
        return Err(Error::CycleTooSmall(m));
    }
    let m_big = big(m);
    Ok(BigRational::new(
        (&m_big * &m_big * &m_big) - &m_big,
        BigInt::from(12),
    ))
}

/// Σ 1/β over the eigenvalues of L_S, as the exact rational
/// minor_sum/det = 72·n·T_n/(S_n ± 2).
pub fn sum_reciprocal_ls(n: usize, variant: ChainVariant) -> BigRational {
    BigRational::new(minor_sum(n), det_ls(n, variant))
}

/// Closed-form Wiener polynomial. Certified against the BFS oracle for the
/// Möbius family at n ≥ 2 only; the cylinder polynomial is refuted by the
/// oracle at every order (see the module docs).
pub fn wiener_closed(n: usize, variant: ChainVariant) -> BigInt {
    assert!(n >= 1, "chain order must be at least 1");
    let n_big = big(n);
    let base = BigInt::from(32) * &n_big * &n_big * &n_big + BigInt::from(16) * &n_big * &n_big;
    match variant {
        ChainVariant::Mobius => base + BigInt::from(4) * &n_big,
        ChainVariant::Cylinder => base - BigInt::from(8) * &n_big,
    }
}

/// Number of spanning trees: 2n(S_n + 2) for Möbius, 2n(S_n − 2) for
/// cylinder.
pub fn complexity_closed(n: usize, variant: ChainVariant) -> BigInt {
    assert!(n >= 1, "chain order must be at least 1");
    BigInt::from(2) * big(n) * det_ls(n, variant)
}

/// Exact ratio of the closed-form Wiener and Kirchhoff values. The Wiener
/// closed forms are certified for n ≥ 2 only.
pub fn ratio(n: usize, variant: ChainVariant) -> BigRational {
    assert!(n >= 2, "ratio uses the Wiener closed form, certified for n >= 2");
    BigRational::from_integer(wiener_closed(n, variant)) / kirchhoff_closed(n, variant)
}

/// Provenance of the values in a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Spectral,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Spectral => "spectral",
            Method::Oracle => "oracle",
        }
    }
}

/// Invariants of one (n, variant) chain.
///
/// `wiener` holds the exact BFS distance sum whenever 8n ≤ 1024 and the
/// closed-form polynomial beyond that; `wiener_formula_valid` records
/// whether the polynomial agrees with the graph (computed exactly in oracle
/// range, extrapolated from the certified pattern outside it: true for
/// Möbius with n ≥ 2, false for the cylinder family).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub variant: ChainVariant,
    pub kf: BigRational,
    pub wiener: BigInt,
    pub wiener_formula_valid: bool,
    pub complexity: BigInt,
    pub ratio: BigRational,
    pub method: Method,
}

/// Closed-form report for one chain; the Wiener entry is oracle-backed in
/// the range described on [`InvariantReport`].
pub fn compute_report(n: usize, variant: ChainVariant) -> Result<InvariantReport> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let kf = kirchhoff_closed(n, variant);
    let complexity = complexity_closed(n, variant);
    let polynomial = wiener_closed(n, variant);
    let (wiener, formula_valid) = if 8 * n <= WIENER_ORACLE_VERTEX_CAP {
        let g = crate::graph::build_chain(n, variant)?;
        let exact = oracles::wiener_bfs(&g);
        let valid = exact == polynomial;
        (exact, valid)
    } else {
        (
            polynomial,
            matches!(variant, ChainVariant::Mobius),
        )
    };
    let ratio = BigRational::from_integer(wiener.clone()) / &kf;
    Ok(InvariantReport {
        n,
        variant,
        kf,
        wiener,
        wiener_formula_valid: formula_valid,
        complexity,
        ratio,
        method: Method::ClosedForm,
    })
}

impl InvariantReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "variant": self.variant.name(),
            "kf": {
                "num": self.kf.numer().to_string(),
                "den": self.kf.denom().to_string(),
            },
            "kf_decimal": decimal_string(&self.kf, 2),
            "wiener": self.wiener.to_string(),
            "wiener_formula_valid": self.wiener_formula_valid,
            "complexity": self.complexity.to_string(),
            "ratio": {
                "num": self.ratio.numer().to_string(),
                "den": self.ratio.denom().to_string(),
            },
            "ratio_decimal": decimal_string(&self.ratio, 4),
            "method": self.method.as_str(),
        })
    }

    pub fn csv_header() -> &'static str {
        "n,variant,kf_num,kf_den,kf_decimal,wiener,wiener_formula_valid,complexity,ratio_decimal,method"
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.variant.name(),
            self.kf.numer(),
            self.kf.denom(),
            decimal_string(&self.kf, 2),
            self.wiener,
            self.wiener_formula_valid,
            self.complexity,
            decimal_string(&self.ratio, 4),
            self.method.as_str(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_chain;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn kirchhoff_closed_examples() {
        assert_eq!(kirchhoff_closed(1, ChainVariant::Mobius), rat(28, 1));
        assert_eq!(kirchhoff_closed(1, ChainVariant::Cylinder), rat(214, 7));
        assert_eq!(kirchhoff_closed(2, ChainVariant::Mobius), rat(804, 5));
        assert_eq!(
            decimal_string(&kirchhoff_closed(2, ChainVariant::Cylinder), 2),
            "161.14"
        );
        assert_eq!(
            decimal_string(&kirchhoff_closed(3, ChainVariant::Mobius), 2),
            "459.17"
        );
    }

    #[test]
    fn kirchhoff_cycle_examples() {
        assert_eq!(kirchhoff_cycle(4).unwrap(), rat(5, 1));
        assert_eq!(kirchhoff_cycle(3).unwrap(), rat(2, 1));
        assert_eq!(kirchhoff_cycle(12).unwrap(), rat(143, 1));
        assert!(kirchhoff_cycle(2).is_err());
    }

    #[test]
    fn kirchhoff_spectral_matches_closed() {
        for (n, variant, places) in [
            (1, ChainVariant::Mobius, 1e-6),
            (1, ChainVariant::Cylinder, 1e-6),
            (5, ChainVariant::Mobius, 5e-3),
        ] {
            let g = build_chain(n, variant).unwrap();
            let spectral = kirchhoff_spectral(&g).unwrap();
            let closed = kirchhoff_closed(n, variant).to_f64().unwrap();
            assert!(
                (spectral - closed).abs() < places,
                "n={n} {variant}: {spectral} vs {closed}"
            );
        }
        let g5 = build_chain(5, ChainVariant::Mobius).unwrap();
        assert!((kirchhoff_spectral(&g5).unwrap() - 1811.07).abs() < 0.005);
    }

    #[test]
    fn sum_reciprocal_examples() {
        assert_eq!(sum_reciprocal_ls(1, ChainVariant::Mobius), rat(9, 4));
        assert_eq!(sum_reciprocal_ls(1, ChainVariant::Cylinder), rat(18, 7));
        assert_eq!(sum_reciprocal_ls(2, ChainVariant::Mobius), rat(24, 5));
    }

    #[test]
    fn wiener_polynomial_values() {
        assert_eq!(wiener_closed(2, ChainVariant::Mobius), BigInt::from(328));
        assert_eq!(wiener_closed(2, ChainVariant::Cylinder), BigInt::from(304));
        assert_eq!(wiener_closed(3, ChainVariant::Mobius), BigInt::from(1020));
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity_closed(1, ChainVariant::Mobius), BigInt::from(64));
        assert_eq!(complexity_closed(1, ChainVariant::Cylinder), BigInt::from(56));
        assert_eq!(
            complexity_closed(4, ChainVariant::Mobius),
            BigInt::from(6451232u64)
        );
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(wiener_closed(15, ChainVariant::Mobius), BigInt::from(111660));
        let r15 = ratio(15, ChainVariant::Mobius);
        assert_eq!(decimal_string(&r15, 4), "2.7694");
        assert_eq!(decimal_string(&ratio(2, ChainVariant::Mobius), 4), "2.0398");
        let r1000 = ratio(1000, ChainVariant::Mobius);
        let dev = (BigRational::from_integer(BigInt::from(3)) - r1000).abs();
        assert!(dev < rat(5, 1000));
        assert!(dev > rat(1, 1000));
    }

    #[test]
    fn report_uses_oracle_wiener_and_flags() {
        let r = compute_report(1, ChainVariant::Mobius).unwrap();
        assert_eq!(r.wiener, BigInt::from(50));
        assert!(!r.wiener_formula_valid);
        assert_eq!(r.kf, rat(28, 1));
        assert_eq!(r.complexity, BigInt::from(64));

        let r = compute_report(1, ChainVariant::Cylinder).unwrap();
        assert_eq!(r.wiener, BigInt::from(56));
        assert!(!r.wiener_formula_valid);

        let r = compute_report(2, ChainVariant::Mobius).unwrap();
        assert_eq!(r.wiener, BigInt::from(328));
        assert!(r.wiener_formula_valid);

        // the cylinder polynomial is refuted by the oracle
        let r = compute_report(2, ChainVariant::Cylinder).unwrap();
        assert_eq!(r.wiener, BigInt::from(336));
        assert!(!r.wiener_formula_valid);

        // beyond the oracle cap the closed form is reported, flag extrapolated
        let r = compute_report(200, ChainVariant::Mobius).unwrap();
        assert_eq!(r.wiener, wiener_closed(200, ChainVariant::Mobius));
        assert!(r.wiener_formula_valid);
        let r = compute_report(200, ChainVariant::Cylinder).unwrap();
        assert!(!r.wiener_formula_valid);
    }

    #[test]
    fn report_json_shape() {
        let r = compute_report(5, ChainVariant::Mobius).unwrap();
        let v = r.to_json();
        assert_eq!(v["kf_decimal"], "1811.07");
        assert_eq!(v["complexity"], "241651520");
        assert_eq!(v["variant"], "mobius");
        assert_eq!(v["method"], "closed_form");
        let csv = r.to_csv_row();
        assert!(csv.starts_with("5,mobius,"));
    }
}
