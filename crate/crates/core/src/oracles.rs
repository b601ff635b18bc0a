//! Independent brute-force computations used to validate every closed form.
//!
//! Nothing here reuses a closed form under test: resistance sums come from
//! exact grounded-Laplacian solves, Wiener indices from per-source BFS,
//! spanning-tree counts from a cofactor determinant, and characteristic
//! polynomials from the Faddeev-LeVerrier recursion.

use std::collections::VecDeque;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::ChainGraph;
use crate::laplacian::laplacian;
use crate::matrix::RationalMatrix;
use crate::spectral;

/// Monic characteristic polynomial det(xI − A) with exact coefficients;
/// `coeffs[i]` multiplies x^i, the leading coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigRational>,
}

impl CharPoly {
    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Constant term, equal to (−1)^dim · det(A).
    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn determinant(&self) -> BigRational {
        let det = self.constant_term().clone();
        if self.dim() % 2 == 1 {
            -det
        } else {
            det
        }
    }

    /// Sum of all (dim−1)-order principal minors, read off the x¹
    /// coefficient as (−1)^{dim−1}·coeff(1).
    pub fn principal_minor_sum(&self) -> BigRational {
        let c1 = self.coeff(1).clone();
        if (self.dim() - 1) % 2 == 1 {
            -c1
        } else {
            c1
        }
    }
}

/// Exact characteristic polynomial by the Faddeev-LeVerrier recursion.
///
/// M_1 = I, c_{n−1} = −tr(A); then M_k = A·M_{k−1} + c_{n−k+1}·I and
/// c_{n−k} = −tr(A·M_k)/k. The division by k is exact over the rationals.
pub fn charpoly_exact(m: &RationalMatrix) -> CharPoly {
    let n = m.dim();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    if n == 0 {
        return CharPoly { coeffs };
    }
    let mut mk = RationalMatrix::identity(n);
    let mut am = m.matmul(&mk);
    coeffs[n - 1] = -am.trace();
    for k in 2..=n {
        mk = am.clone();
        let shift = coeffs[n - k + 1].clone();
        for i in 0..n {
            let v = mk.get(i, i) + &shift;
            mk.set(i, i, v);
        }
        am = m.matmul(&mk);
        coeffs[n - k] = -am.trace() / BigRational::from_integer(BigInt::from(k as u64));
    }
    CharPoly { coeffs }
}

/// Σ_i det(m with row/column i deleted), by explicit deletion.
pub fn principal_minor_sum_bruteforce(m: &RationalMatrix) -> BigRational {
    principal_minor_sum_by_residue(m).into_iter().sum()
}

/// The same sum bucketed by the deleted 1-based index mod 4.
pub fn principal_minor_sum_by_residue(m: &RationalMatrix) -> [BigRational; 4] {
    let mut buckets = [
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];
    for i in 0..m.dim() {
        buckets[(i + 1) % 4] += m.delete_row_col(i).determinant();
    }
    buckets
}

/// Result of a resistance-sum computation: exact when the grounded solve is
/// affordable, a floating spectral estimate otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum ResistanceSum {
    Exact(BigRational),
    Approximate(f64),
}

/// Kirchhoff index of a connected graph given its Laplacian: ground one
/// vertex, invert the reduced Laplacian exactly once, and read every
/// pairwise resistance off the inverse as r_ij = G_ii + G_jj − 2G_ij.
pub fn resistance_sum_exact(lap: &RationalMatrix) -> Result<BigRational> {
    let reduced = lap.delete_row_col(0);
    let g = reduced.inverse()?;
    let dim = g.dim();
    let mut total = BigRational::zero();
    // pairs (ground, i): r = G_ii
    for i in 0..dim {
        total += g.get(i, i);
    }
    for i in 0..dim {
        for j in i + 1..dim {
            let two_gij = BigRational::from_integer(BigInt::from(2)) * g.get(i, j);
            total += g.get(i, i) + g.get(j, j) - two_gij;
        }
    }
    Ok(total)
}

/// Resistance-sum Kirchhoff index of a chain graph.
///
/// Exact for 8n ≤ 64; beyond that a floating spectral fallback
/// (|V|·Σ_{k≥2} 1/μ_k) is returned and flagged as approximate.
pub fn kirchhoff_resistance(g: &ChainGraph) -> Result<ResistanceSum> {
    let lap = laplacian(g);
    if g.vertex_count() <= 64 {
        Ok(ResistanceSum::Exact(resistance_sum_exact(&lap)?))
    } else {
        let eig = spectral::symmetric_eigenvalues(&lap)?;
        let sum: f64 = eig.iter().skip(1).map(|v| 1.0 / v).sum();
        Ok(ResistanceSum::Approximate(g.vertex_count() as f64 * sum))
    }
}

/// Wiener index: BFS from every source, distances summed over unordered
/// pairs.
pub fn wiener_bfs(g: &ChainGraph) -> BigInt {
    BigInt::from(wiener_bfs_adjacency(&g.adjacency()))
}

pub fn wiener_bfs_adjacency(adj: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    let mut total: u64 = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        dist.fill(usize::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        total += dist.iter().map(|&d| d as u64).sum::<u64>();
    }
    total / 2
}

/// Number of spanning trees via the matrix-tree cofactor: delete one
/// row/column of the Laplacian and take the exact determinant.
pub fn spanning_trees(g: &ChainGraph) -> Result<BigInt> {
    spanning_trees_of_laplacian(&laplacian(g))
}

pub fn spanning_trees_of_laplacian(lap: &RationalMatrix) -> Result<BigInt> {
    let det = lap.delete_row_col(0).determinant();
    if !det.is_integer() || det.is_negative() {
        return Err(Error::SingularMatrix);
    }
    Ok(det.to_integer())
}

/// Kirchhoff index of the cycle C_m by the exact resistance oracle
/// (test and verification helper, independent of the (m³−m)/12 closed form).
pub fn cycle_kirchhoff_resistance(m: usize) -> Result<BigRational> {
    resistance_sum_exact(&crate::laplacian::cycle_laplacian(m)?)
}

/// Floating cross-check of the matrix-tree value: (1/|V|)·∏ nonzero
/// eigenvalues of the Laplacian.
pub fn spanning_trees_spectral(g: &ChainGraph) -> Result<f64> {
    let eig = spectral::symmetric_eigenvalues(&laplacian(g))?;
    let product: f64 = eig.iter().skip(1).product();
    Ok(product / g.vertex_count() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_chain, ChainVariant};
    use crate::laplacian::cycle_laplacian;
    use num::ToPrimitive;
    use proptest::prelude::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn charpoly_examples() {
        // fixed 4x4 L_S of the order-1 Möbius chain
        let ls = RationalMatrix::from_i64_rows(&[
            vec![4, -1, 0, 1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![1, 0, -1, 4],
        ]);
        let p = charpoly_exact(&ls);
        // x^4 - 12x^3 + 48x^2 - 72x + 32; eigenvalues {2, 4, 3±√5}
        let expect = [32i64, -72, 48, -12, 1];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(p.coeff(i), &rat(c), "coefficient of x^{i}");
        }
        assert_eq!(p.determinant(), rat(32));
        assert_eq!(p.principal_minor_sum(), rat(72));

        let c4 = charpoly_exact(&cycle_laplacian(4).unwrap());
        let expect = [0i64, -16, 20, -8, 1];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(c4.coeff(i), &rat(c));
        }

        let id2 = charpoly_exact(&RationalMatrix::identity(2));
        assert_eq!(id2.coeff(0), &rat(1));
        assert_eq!(id2.coeff(1), &rat(-2));
        assert_eq!(id2.coeff(2), &rat(1));
    }

    #[test]
    fn minor_sum_examples() {
        let ls = RationalMatrix::from_i64_rows(&[
            vec![4, -1, 0, 1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![1, 0, -1, 4],
        ]);
        assert_eq!(principal_minor_sum_bruteforce(&ls), rat(72));
        let buckets = principal_minor_sum_by_residue(&ls);
        assert_eq!(buckets, [rat(10), rat(10), rat(26), rat(26)]);
        assert_eq!(
            principal_minor_sum_bruteforce(&cycle_laplacian(4).unwrap()),
            rat(16)
        );
        assert_eq!(principal_minor_sum_bruteforce(&RationalMatrix::zeros(3)), rat(0));
    }

    #[test]
    fn resistance_examples() {
        let g = build_chain(1, ChainVariant::Mobius).unwrap();
        assert_eq!(kirchhoff_resistance(&g).unwrap(), ResistanceSum::Exact(rat(28)));
        let g = build_chain(1, ChainVariant::Cylinder).unwrap();
        assert_eq!(
            kirchhoff_resistance(&g).unwrap(),
            ResistanceSum::Exact(BigRational::new(BigInt::from(214), BigInt::from(7)))
        );
        assert_eq!(cycle_kirchhoff_resistance(4).unwrap(), rat(5));
        assert_eq!(cycle_kirchhoff_resistance(12).unwrap(), rat(143));
    }

    #[test]
    fn resistance_fallback_is_approximate() {
        let g = build_chain(9, ChainVariant::Mobius).unwrap(); // 72 vertices
        match kirchhoff_resistance(&g).unwrap() {
            ResistanceSum::Approximate(v) => assert!(v > 0.0),
            ResistanceSum::Exact(_) => panic!("expected the floating fallback above 64 vertices"),
        }
    }

    #[test]
    fn wiener_examples() {
        // oracle-frozen values; the order-1 chains fall outside the closed forms
        let cases = [
            (1, ChainVariant::Mobius, 50u64),
            (1, ChainVariant::Cylinder, 56),
            (2, ChainVariant::Mobius, 328),
            (2, ChainVariant::Cylinder, 336),
            (3, ChainVariant::Mobius, 1020),
            (3, ChainVariant::Cylinder, 1032),
        ];
        for (n, variant, expect) in cases {
            let g = build_chain(n, variant).unwrap();
            assert_eq!(wiener_bfs(&g), BigInt::from(expect), "n={n} {variant}");
        }
        // W(C_8) = 4^3
        let mut adj = vec![Vec::new(); 8];
        for i in 0..8 {
            adj[i].push((i + 1) % 8);
            adj[(i + 1) % 8].push(i);
        }
        assert_eq!(wiener_bfs_adjacency(&adj), 64);
    }

    #[test]
    fn spanning_tree_examples() {
        let cases = [
            (1, ChainVariant::Mobius, 64i64),
            (2, ChainVariant::Cylinder, 3584),
            (3, ChainVariant::Mobius, 161472),
        ];
        for (n, variant, expect) in cases {
            let g = build_chain(n, variant).unwrap();
            assert_eq!(spanning_trees(&g).unwrap(), BigInt::from(expect));
        }
    }

    #[test]
    fn spectral_tree_count_agrees() {
        for variant in ChainVariant::BOTH {
            let g = build_chain(3, variant).unwrap();
            let exact = spanning_trees(&g).unwrap().to_f64().unwrap();
            let spectral = spanning_trees_spectral(&g).unwrap();
            assert!((spectral - exact).abs() / exact < 1e-6);
        }
    }

    proptest! {
        // dual routes on random symmetric integer matrices: the x¹ coefficient
        // of the characteristic polynomial against explicit minor deletion,
        // and the constant term against the determinant.
        #[test]
        fn charpoly_routes_agree(vals in prop::collection::vec(-4i64..=4, 10)) {
            let mut m = RationalMatrix::zeros(4);
            let mut it = vals.into_iter();
            for i in 0..4 {
                for j in i..4 {
                    let v = rat(it.next().unwrap());
                    m.set(i, j, v.clone());
                    m.set(j, i, v);
                }
            }
            let p = charpoly_exact(&m);
            prop_assert_eq!(p.determinant(), m.determinant());
            prop_assert_eq!(p.principal_minor_sum(), principal_minor_sum_bruteforce(&m));
        }
    }
}
