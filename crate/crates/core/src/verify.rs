//! The cross-verification battery.
//!
//! Every identity the crate relies on is checked here against an
//! independent route: closed forms against brute-force oracles, recurrences
//! against closed forms, exact values against floating spectra. Each check
//! carries its own size cap; `n_max` additionally bounds the graph orders.
//!
//! A full run currently reports one failing identity: the cylinder Wiener
//! closed form does not match the BFS distance sum (it is off by 16n at
//! every order in oracle range). That is a finding about the closed form,
//! not a bug in the oracle; see the module docs on [`crate::invariants`].

use num::{BigInt, BigRational, One, Signed, ToPrimitive};

use crate::error::Result;
use crate::graph::{build_chain, ChainVariant};
use crate::invariants;
use crate::laplacian::{self, cycle_laplacian, decompose, expected_ls, laplacian};
use crate::matrix::decimal_string;
use crate::oracles::{self, ResistanceSum};
use crate::sequences::{self, MinorKind};
use crate::spectral;

/// Outcome of one identity check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, detail: detail.into() }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, detail: detail.into() }
    }

    fn from_failures(name: impl Into<String>, failures: Vec<String>, scope: String) -> Self {
        if failures.is_empty() {
            Self::pass(name, scope)
        } else {
            Self::fail(name, failures.join("; "))
        }
    }
}

/// A batch of check results.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            if check.passed {
                out.push_str(&format!("ok   {} ({})\n", check.name, check.detail));
            } else {
                out.push_str(&format!("FAIL {}: {}\n", check.name, check.detail));
            }
        }
        if self.all_passed() {
            out.push_str(&format!("RESULT: PASS ({} checks)\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "RESULT: FAIL ({} of {} checks failed)\n",
                self.failed_count(),
                self.checks.len()
            ));
        }
        out
    }
}

fn cap(n_max: usize, check_cap: usize) -> usize {
    n_max.min(check_cap)
}

/// Compare a candidate Kirchhoff value against the exact resistance oracle.
/// Exposed so that fault-injection tests can feed tampered closed forms.
pub fn check_kirchhoff_value(
    n: usize,
    variant: ChainVariant,
    candidate: &BigRational,
) -> Result<CheckResult> {
    let g = build_chain(n, variant)?;
    let name = format!("kirchhoff value vs resistance oracle (n={n}, {variant})");
    match oracles::kirchhoff_resistance(&g)? {
        ResistanceSum::Exact(oracle) => {
            if &oracle == candidate {
                Ok(CheckResult::pass(name, format!("both {}", decimal_string(&oracle, 2))))
            } else {
                Ok(CheckResult::fail(
                    name,
                    format!(
                        "closed form {} ({}) != oracle {} ({})",
                        candidate,
                        decimal_string(candidate, 2),
                        oracle,
                        decimal_string(&oracle, 2)
                    ),
                ))
            }
        }
        ResistanceSum::Approximate(v) => Ok(CheckResult::fail(
            name,
            format!("oracle fell back to a floating estimate {v}; exact comparison impossible"),
        )),
    }
}

/// Run the whole battery. `n_max >= 1` bounds the graph orders; algebraic
/// identities keep their own fixed spans.
pub fn run_verification(n_max: usize) -> Result<VerificationReport> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut report = VerificationReport::default();

    report.checks.push(check_graph_structure(cap(n_max, 12))?);
    report.checks.push(check_block_templates(cap(n_max, 3))?);
    report.checks.push(check_l_a_shared(cap(n_max, 8))?);
    report.checks.push(check_block_reconstruction(cap(n_max, 8))?);
    report.checks.push(check_spectrum_factorization(cap(n_max, 8))?);
    report.checks.push(check_l_a_cycle_spectrum(cap(n_max, 8))?);
    report.checks.push(check_definiteness(cap(n_max, 8))?);
    report.checks.push(check_lucas_norm(200));
    report.checks.push(check_minor_routes(60));
    report.checks.push(check_minor_determinants(16));
    report.checks.push(check_det_ls(cap(n_max, 6), cap(n_max, 50)));
    report.checks.push(check_minor_sum_bruteforce(cap(n_max, 3))?);
    report.checks.push(check_charpoly_identities(cap(n_max, 4))?);
    report.checks.push(check_kirchhoff_resistance(cap(n_max, 5))?);
    report.checks.push(check_kirchhoff_spectral(cap(n_max, 8))?);
    report.checks.push(check_complexity(cap(n_max, 6))?);
    report.checks.push(check_complexity_spectral(cap(n_max, 8))?);
    report.checks.push(check_wiener_closed_vs_bfs(cap(n_max, 8))?);
    report.checks.push(check_wiener_order_one_flag()?);
    report.checks.push(check_kf_decomposition_identity(cap(n_max, 50)));
    report.checks.push(check_cross_variant(cap(n_max, 200)));
    report.checks.push(check_ratio_convergence());
    report.checks.push(check_reciprocal_sum_routes(cap(n_max, 50)));

    Ok(report)
}

fn check_graph_structure(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let g = build_chain(n, variant)?;
            if g.vertex_count() != 8 * n || g.edge_count() != 10 * n {
                failures.push(format!("n={n} {variant}: wrong counts"));
            }
            let degree_sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
            if degree_sum != 20 * n {
                failures.push(format!("n={n} {variant}: degree sum {degree_sum}"));
            }
            if !g.is_connected() {
                failures.push(format!("n={n} {variant}: disconnected"));
            }
            let sizes = g.rungless_component_sizes();
            let expected = match variant {
                ChainVariant::Mobius => vec![8 * n],
                ChainVariant::Cylinder => vec![4 * n, 4 * n],
            };
            if sizes != expected {
                failures.push(format!("n={n} {variant}: rungless components {sizes:?}"));
            }
            if build_chain(n, variant)?.canonical_edge_list() != g.canonical_edge_list() {
                failures.push(format!("n={n} {variant}: non-deterministic edge list"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "graph structure (counts, degrees, connectivity, rungless cycles, determinism)",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_block_templates(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let blocks = decompose(&build_chain(n, variant)?)?;
            if blocks.l_s != expected_ls(n, variant) {
                failures.push(format!("n={n} {variant}: L_S deviates from the band template"));
            }
            if blocks.l_a != cycle_laplacian(4 * n)? {
                failures.push(format!("n={n} {variant}: L_A is not the C_{} Laplacian", 4 * n));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "decomposition blocks match the banded templates",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_l_a_shared(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        let mob = decompose(&build_chain(n, ChainVariant::Mobius)?)?;
        let cyl = decompose(&build_chain(n, ChainVariant::Cylinder)?)?;
        if mob.l_a != cyl.l_a {
            failures.push(format!("n={n}: L_A differs between variants"));
        }
    }
    Ok(CheckResult::from_failures(
        "L_A is identical for both variants",
        failures,
        format!("n <= {n_cap}"),
    ))
}

fn check_block_reconstruction(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let g = build_chain(n, variant)?;
            let lap = laplacian(&g);
            let blocks = decompose(&g)?;
            let v11 = blocks.reconstruct_v11();
            let v12 = blocks.reconstruct_v12();
            if !v11.is_integer() || !v12.is_integer() {
                failures.push(format!("n={n} {variant}: non-integer reconstruction"));
                continue;
            }
            let half = 4 * n;
            let mut ok = true;
            for i in 0..half {
                for j in 0..half {
                    ok &= v11.get(i, j) == lap.get(i, j);
                    ok &= v12.get(i, j) == lap.get(i, half + j);
                }
            }
            if !ok {
                failures.push(format!("n={n} {variant}: blocks disagree with adjacency"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "block reconstruction (L_A ± L_S)/2 matches the Laplacian",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_spectrum_factorization(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let g = build_chain(n, variant)?;
            if !laplacian::spectrum_factorization_check(&g, 1e-9)? {
                failures.push(format!("n={n} {variant}: spectra differ beyond 1e-9"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "L(G) spectrum equals the union of L_A and L_S spectra (1e-9)",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_l_a_cycle_spectrum(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        let blocks = decompose(&build_chain(n, ChainVariant::Mobius)?)?;
        let eig = spectral::symmetric_eigenvalues(&blocks.l_a)?;
        let expect = spectral::cycle_spectrum(4 * n);
        let dist = spectral::spectrum_distance(&eig, &expect);
        if dist > 1e-9 {
            failures.push(format!("n={n}: max deviation {dist:e}"));
        }
    }
    Ok(CheckResult::from_failures(
        "L_A spectrum equals the closed-form cycle spectrum (1e-9)",
        failures,
        format!("n <= {n_cap}"),
    ))
}

fn check_definiteness(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let g = build_chain(n, variant)?;
            let eig = spectral::symmetric_eigenvalues(&laplacian(&g))?;
            let zeros = eig.iter().filter(|&&v| v.abs() < 1e-9).count();
            if zeros != 1 || eig[0].abs() > 1e-9 || eig[1] < 1e-9 {
                failures.push(format!("n={n} {variant}: Laplacian kernel not 1-dimensional"));
            }
            if eig.iter().any(|&v| v < -1e-9) {
                failures.push(format!("n={n} {variant}: Laplacian not PSD"));
            }
            let blocks = decompose(&g)?;
            let beta = spectral::symmetric_eigenvalues(&blocks.l_s)?;
            if beta[0] <= 1e-9 {
                failures.push(format!("n={n} {variant}: L_S not positive definite"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "L(G) PSD with a single zero eigenvalue; L_S positive definite",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_lucas_norm(k_cap: usize) -> CheckResult {
    let mut failures = Vec::new();
    let four = BigInt::from(4);
    for (k, (s, t)) in sequences::lucas_sequence(k_cap).iter().enumerate() {
        if s * s - BigInt::from(896) * t * t != four {
            failures.push(format!("k={k}"));
        }
    }
    CheckResult::from_failures(
        "Lucas norm identity S² − 896T² = 4",
        failures,
        format!("k <= {k_cap}"),
    )
}

fn check_minor_routes(j_cap: usize) -> CheckResult {
    let mut failures = Vec::new();
    for kind in [MinorKind::Standard, MinorKind::Primed] {
        let by_recurrence = sequences::minor_sequence(kind, j_cap);
        for (j, recurrence) in by_recurrence.iter().enumerate() {
            let closed = sequences::minor_closed_form(kind, j);
            if recurrence != &closed {
                failures.push(format!(
                    "j={j} {kind:?}: recurrence {recurrence} != closed form {closed}"
                ));
            }
        }
    }
    CheckResult::from_failures(
        "minor recurrences agree with the closed forms",
        failures,
        format!("j <= {j_cap}, both families"),
    )
}

fn check_minor_determinants(j_cap: usize) -> CheckResult {
    let mut failures = Vec::new();
    for kind in [MinorKind::Standard, MinorKind::Primed] {
        let matrix = sequences::minor_matrix(kind, j_cap);
        let seq = sequences::minor_sequence(kind, j_cap);
        for j in 1..=j_cap {
            let det = matrix.leading_principal_submatrix(j).determinant();
            if det != BigRational::from_integer(seq[j].clone()) {
                failures.push(format!("j={j} {kind:?}: det {det} != {}", seq[j]));
            }
        }
    }
    CheckResult::from_failures(
        "minor values equal exact leading principal determinants",
        failures,
        format!("j <= {j_cap}, both families"),
    )
}

fn check_det_ls(det_cap: usize, range_cap: usize) -> CheckResult {
    let mut failures = Vec::new();
    for n in 1..=det_cap {
        for variant in ChainVariant::BOTH {
            let closed = BigRational::from_integer(sequences::det_ls(n, variant));
            let exact = decompose(&build_chain(n, variant).unwrap())
                .unwrap()
                .l_s
                .determinant();
            if closed != exact {
                failures.push(format!("n={n} {variant}: {closed} != det {exact}"));
            }
        }
    }
    let four = BigInt::from(4);
    for n in 1..=range_cap {
        let diff = sequences::det_ls(n, ChainVariant::Mobius)
            - sequences::det_ls(n, ChainVariant::Cylinder);
        if diff != four {
            failures.push(format!("n={n}: variant det difference {diff}"));
        }
    }
    CheckResult::from_failures(
        "det L_S: closed form vs exact determinant; variant difference is 4",
        failures,
        format!("exact dets n <= {det_cap}; difference n <= {range_cap}"),
    )
}

fn check_minor_sum_bruteforce(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        let closed_classes = sequences::minor_sum_by_residue(n);
        let closed_total = sequences::minor_sum(n);
        for variant in ChainVariant::BOTH {
            let blocks = decompose(&build_chain(n, variant)?)?;
            let brute_classes = oracles::principal_minor_sum_by_residue(&blocks.l_s);
            let brute_total = oracles::principal_minor_sum_bruteforce(&blocks.l_s);
            if brute_total != BigRational::from_integer(closed_total.clone()) {
                failures.push(format!("n={n} {variant}: total {brute_total} != {closed_total}"));
            }
            for (r, (closed, brute)) in closed_classes.iter().zip(&brute_classes).enumerate() {
                if brute != &BigRational::from_integer(closed.clone()) {
                    failures.push(format!("n={n} {variant} class {r}: {brute} != {closed}"));
                }
            }
        }
    }
    Ok(CheckResult::from_failures(
        "principal minor sums (total and residue classes) match brute force",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_charpoly_identities(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let blocks = decompose(&build_chain(n, variant)?)?;
            let poly = oracles::charpoly_exact(&blocks.l_s);
            let det = BigRational::from_integer(sequences::det_ls(n, variant));
            if poly.determinant() != det {
                failures.push(format!("n={n} {variant}: charpoly det mismatch"));
            }
            let minor_sum = BigRational::from_integer(sequences::minor_sum(n));
            if poly.principal_minor_sum() != minor_sum {
                failures.push(format!("n={n} {variant}: charpoly minor-sum mismatch"));
            }
            // Σ 1/β = minor sum / det via Vieta
            let reciprocal = poly.principal_minor_sum() / poly.determinant();
            if reciprocal != invariants::sum_reciprocal_ls(n, variant) {
                failures.push(format!("n={n} {variant}: reciprocal-sum mismatch"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "characteristic polynomial coefficients match dets, minor sums and Σ1/β",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_kirchhoff_resistance(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let closed = invariants::kirchhoff_closed(n, variant);
            let check = check_kirchhoff_value(n, variant, &closed)?;
            if !check.passed {
                failures.push(check.detail);
            }
        }
    }
    Ok(CheckResult::from_failures(
        "Kirchhoff closed form equals the exact resistance oracle",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_kirchhoff_spectral(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let g = build_chain(n, variant)?;
            let spectral_value = invariants::kirchhoff_spectral(&g)?;
            let closed = invariants::kirchhoff_closed(n, variant).to_f64().unwrap();
            if ((spectral_value - closed) / closed).abs() > 1e-6 {
                failures.push(format!("n={n} {variant}: {spectral_value} vs {closed}"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "Kirchhoff closed form agrees with the spectral formula (1e-6 relative)",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_complexity(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let g = build_chain(n, variant)?;
            let closed = invariants::complexity_closed(n, variant);
            let oracle = oracles::spanning_trees(&g)?;
            if closed != oracle {
                failures.push(format!("n={n} {variant}: closed {closed} != cofactor {oracle}"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "spanning-tree closed form equals the matrix-tree cofactor",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_complexity_spectral(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let g = build_chain(n, variant)?;
            let exact = invariants::complexity_closed(n, variant).to_f64().unwrap();
            let spectral_value = oracles::spanning_trees_spectral(&g)?;
            if ((spectral_value - exact) / exact).abs() > 1e-6 {
                failures.push(format!("n={n} {variant}: {spectral_value} vs {exact}"));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "spanning-tree count agrees with the eigenvalue product (1e-6 relative)",
        failures,
        format!("n <= {n_cap}, both variants"),
    ))
}

fn check_wiener_closed_vs_bfs(n_cap: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 2..=n_cap {
        for variant in ChainVariant::BOTH {
            let closed = invariants::wiener_closed(n, variant);
            let oracle = oracles::wiener_bfs(&build_chain(n, variant)?);
            if closed != oracle {
                failures.push(format!(
                    "n={n} {variant}: closed form {closed} != BFS distance sum {oracle}"
                ));
            }
        }
    }
    Ok(CheckResult::from_failures(
        "Wiener closed forms equal the BFS oracle",
        failures,
        format!("2 <= n <= {n_cap}, both variants"),
    ))
}

fn check_wiener_order_one_flag() -> Result<CheckResult> {
    let mut failures = Vec::new();
    for variant in ChainVariant::BOTH {
        let report = invariants::compute_report(1, variant)?;
        let bfs = oracles::wiener_bfs(&build_chain(1, variant)?);
        if report.wiener != bfs {
            failures.push(format!("{variant}: report wiener {} != BFS {bfs}", report.wiener));
        }
        let matches = bfs == invariants::wiener_closed(1, variant);
        if report.wiener_formula_valid != matches {
            failures.push(format!("{variant}: flag {} is wrong", report.wiener_formula_valid));
        }
    }
    Ok(CheckResult::from_failures(
        "order-1 reports carry the BFS value and the formula-match flag",
        failures,
        "n = 1, both variants".to_string(),
    ))
}

fn check_kf_decomposition_identity(n_cap: usize) -> CheckResult {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        let eight_n = BigRational::from_integer(BigInt::from(8 * n as u64));
        let cycle_part = BigRational::new(
            BigInt::from(16 * (n * n) as u64) - BigInt::one(),
            BigInt::from(12),
        );
        // 8n(16n²−1)/12 = 2·Kf(C_{4n})
        let twice_cycle_kf = BigRational::from_integer(BigInt::from(2))
            * invariants::kirchhoff_cycle(4 * n).unwrap();
        if &eight_n * &cycle_part != twice_cycle_kf {
            failures.push(format!("n={n}: cycle identity"));
        }
        for variant in ChainVariant::BOTH {
            let assembled =
                &eight_n * (&cycle_part + invariants::sum_reciprocal_ls(n, variant));
            if assembled != invariants::kirchhoff_closed(n, variant) {
                failures.push(format!("n={n} {variant}: decomposition identity"));
            }
        }
    }
    CheckResult::from_failures(
        "Kf = 8n((16n²−1)/12 + Σ1/β) and 8n(16n²−1)/12 = 2·Kf(C_4n)",
        failures,
        format!("n <= {n_cap}, both variants"),
    )
}

fn check_cross_variant(n_cap: usize) -> CheckResult {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        if invariants::kirchhoff_closed(n, ChainVariant::Cylinder)
            <= invariants::kirchhoff_closed(n, ChainVariant::Mobius)
        {
            failures.push(format!("n={n}: Kf(cylinder) not larger"));
        }
        let diff = invariants::wiener_closed(n, ChainVariant::Mobius)
            - invariants::wiener_closed(n, ChainVariant::Cylinder);
        if diff != BigInt::from(12 * n as u64) {
            failures.push(format!("n={n}: closed-form Wiener difference {diff}"));
        }
    }
    CheckResult::from_failures(
        "cross-variant: Kf(cylinder) > Kf(Möbius); closed-form Wiener difference 12n",
        failures,
        format!("n <= {n_cap}"),
    )
}

fn check_ratio_convergence() -> CheckResult {
    let mut failures = Vec::new();
    let three = BigRational::from_integer(BigInt::from(3));
    for variant in ChainVariant::BOTH {
        let mut previous: Option<BigRational> = None;
        for n in 2..=200 {
            let r = invariants::ratio(n, variant);
            if r >= three {
                failures.push(format!("n={n} {variant}: ratio not below 3"));
            }
            if let Some(prev) = previous {
                if r <= prev {
                    failures.push(format!("n={n} {variant}: ratio not increasing"));
                }
            }
            previous = Some(r);
        }
        let deviation = (&three - invariants::ratio(1000, variant)).abs();
        if deviation >= BigRational::new(BigInt::from(5), BigInt::from(1000)) {
            failures.push(format!(
                "{variant}: |3 − ratio(1000)| = {} not below 0.005",
                decimal_string(&deviation, 6)
            ));
        }
    }
    CheckResult::from_failures(
        "W/Kf ratio strictly increasing (2..200), below 3, within 0.005 of 3 at n=1000",
        failures,
        "both variants".to_string(),
    )
}

fn check_reciprocal_sum_routes(n_cap: usize) -> CheckResult {
    let mut failures = Vec::new();
    for n in 1..=n_cap {
        for variant in ChainVariant::BOTH {
            let direct = invariants::sum_reciprocal_ls(n, variant);
            let assembled = BigRational::new(sequences::minor_sum(n), sequences::det_ls(n, variant));
            if direct != assembled {
                failures.push(format!("n={n} {variant}"));
            }
        }
    }
    CheckResult::from_failures(
        "Σ1/β equals minor sum over determinant",
        failures,
        format!("n <= {n_cap}, both variants"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tampered_kirchhoff_is_detected() {
        // the order-1 Möbius value computed with the cylinder denominator
        // (S_n − 2 instead of S_n + 2) lands in the 30.57 region; the
        // resistance oracle must flag it against the true 28
        let tampered = invariants::kirchhoff_closed(1, ChainVariant::Cylinder);
        let check = check_kirchhoff_value(1, ChainVariant::Mobius, &tampered).unwrap();
        assert!(!check.passed);
        assert!(check.detail.contains("30.57"));
        assert!(check.detail.contains("28"));

        let honest = invariants::kirchhoff_closed(1, ChainVariant::Mobius);
        assert!(check_kirchhoff_value(1, ChainVariant::Mobius, &honest).unwrap().passed);
    }

    #[test]
    fn battery_finds_only_the_cylinder_wiener_mismatch() {
        let report = run_verification(3).unwrap();
        assert!(report.checks.len() >= 20);
        let failed: Vec<&CheckResult> = report.checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(failed.len(), 1, "unexpected failures: {:?}", failed);
        assert!(failed[0].name.contains("Wiener closed forms"));
        assert!(failed[0].detail.contains("cylinder"));
        assert!(!report.all_passed());
    }
}
