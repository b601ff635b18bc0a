//! Exact Laplacians and the pairing-automorphism block decomposition.
//!
//! Vertices are ordered plain row first, primed row second, so the Laplacian
//! splits into four 4n×4n blocks with L_{V1V1} = L_{V2V2} and
//! L_{V1V2} = L_{V2V1}. An orthogonal change of basis block-diagonalizes it
//! into L_A = L_{V1V1} + L_{V1V2} and L_S = L_{V1V1} − L_{V1V2}; the
//! transform itself is never materialized (forming the sum and difference is
//! algebraically equivalent and keeps the arithmetic rational). L_A always
//! equals the Laplacian of the cycle C_{4n}; the closure variant only moves
//! the corner entries of L_S (+1 for Möbius, −1 for cylinder).

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::graph::ChainGraph;
use crate::matrix::RationalMatrix;
use crate::spectral;

/// Laplacian matrix L = D − A over exact rationals, in matrix-index order.
pub fn laplacian(g: &ChainGraph) -> RationalMatrix {
    let nv = g.vertex_count();
    let mut m = RationalMatrix::zeros(nv);
    for (u, v) in g.edges_by_index() {
        let minus_one = BigRational::from_integer(BigInt::from(-1));
        m.set(u, v, minus_one.clone());
        m.set(v, u, minus_one);
        let du = m.get(u, u) + BigRational::from_integer(BigInt::from(1));
        m.set(u, u, du);
        let dv = m.get(v, v) + BigRational::from_integer(BigInt::from(1));
        m.set(v, v, dv);
    }
    m
}

/// Laplacian of the cycle C_m.
pub fn cycle_laplacian(m: usize) -> Result<RationalMatrix> {
    if m < 3 {
        return Err(Error::CycleTooSmall(m));
    }
    Ok(RationalMatrix::from_fn(m, |i, j| {
        let v: i64 = if i == j {
            2
        } else if (i + 1) % m == j || (j + 1) % m == i {
            -1
        } else {
            0
        };
        BigRational::from_integer(BigInt::from(v))
    }))
}

/// The two spectral blocks of a chain Laplacian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// L_{V1V1} + L_{V1V2}; equals the Laplacian of C_{4n} for both variants.
    pub l_a: RationalMatrix,
    /// L_{V1V1} − L_{V1V2}; positive definite, corners ±1 by variant.
    pub l_s: RationalMatrix,
}

impl BlockDecomposition {
    /// Recover L_{V1V1} = (L_A + L_S)/2.
    pub fn reconstruct_v11(&self) -> RationalMatrix {
        self.l_a
            .add(&self.l_s)
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }

    /// Recover L_{V1V2} = (L_A − L_S)/2.
    pub fn reconstruct_v12(&self) -> RationalMatrix {
        self.l_a
            .sub(&self.l_s)
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }
}

/// Split the Laplacian along the plain/primed pairing.
///
/// Fails with `PairingMismatch` if the blocks do not satisfy
/// L_{V1V1} = L_{V2V2} and L_{V1V2} = L_{V2V1}, i.e. if the equal-index
/// pairing is not an automorphism of the graph.
pub fn decompose(g: &ChainGraph) -> Result<BlockDecomposition> {
    let lap = laplacian(g);
    let half = 4 * g.n();
    let v11 = RationalMatrix::from_fn(half, |i, j| lap.get(i, j).clone());
    let v12 = RationalMatrix::from_fn(half, |i, j| lap.get(i, half + j).clone());
    let v21 = RationalMatrix::from_fn(half, |i, j| lap.get(half + i, j).clone());
    let v22 = RationalMatrix::from_fn(half, |i, j| lap.get(half + i, half + j).clone());
    if v11 != v22 || v12 != v21 {
        return Err(Error::PairingMismatch);
    }
    Ok(BlockDecomposition {
        l_a: v11.add(&v12),
        l_s: v11.sub(&v12),
    })
}

/// True iff the eigenvalue multiset of L(G) equals the union of the L_A and
/// L_S multisets within `tol`, elementwise after sorting.
pub fn spectrum_factorization_check(g: &ChainGraph, tol: f64) -> Result<bool> {
    let full = spectral::symmetric_eigenvalues(&laplacian(g))?;
    let blocks = decompose(g)?;
    let mut union = spectral::symmetric_eigenvalues(&blocks.l_a)?;
    union.extend(spectral::symmetric_eigenvalues(&blocks.l_s)?);
    union.sort_by(f64::total_cmp);
    Ok(spectral::spectrum_distance(&full, &union) <= tol)
}

/// The expected L_S of a chain of order n: the tridiagonal minor matrix of
/// the Standard family with corner entries +1 (Möbius) or −1 (cylinder).
pub fn expected_ls(n: usize, variant: crate::graph::ChainVariant) -> RationalMatrix {
    use crate::graph::ChainVariant;
    use crate::sequences::{minor_matrix, MinorKind};
    let dim = 4 * n;
    let mut m = minor_matrix(MinorKind::Standard, dim);
    let corner = match variant {
        ChainVariant::Mobius => 1,
        ChainVariant::Cylinder => -1,
    };
    let corner = BigRational::from_integer(BigInt::from(corner));
    m.set(0, dim - 1, corner.clone());
    m.set(dim - 1, 0, corner);
    m
}

/// Row sums of a Laplacian are zero; exposed for sanity checks.
pub fn row_sums_zero(m: &RationalMatrix) -> bool {
    (0..m.dim()).all(|i| m.row_sum(i).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_chain, ChainVariant, VertexId};

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn laplacian_basics() {
        let g = build_chain(1, ChainVariant::Mobius).unwrap();
        let lap = laplacian(&g);
        assert_eq!(lap.dim(), 8);
        assert_eq!(lap.trace(), rat(20));
        assert!(row_sums_zero(&lap));
        assert!(lap.is_symmetric());
        let i = g.matrix_index(VertexId::plain(1));
        let j = g.matrix_index(VertexId::primed(1));
        assert_eq!(lap.get(i, j), &rat(-1));
    }

    #[test]
    fn decompose_matches_displayed_blocks() {
        let g = build_chain(1, ChainVariant::Mobius).unwrap();
        let blocks = decompose(&g).unwrap();
        let expect_ls = RationalMatrix::from_i64_rows(&[
            vec![4, -1, 0, 1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![1, 0, -1, 4],
        ]);
        assert_eq!(blocks.l_s, expect_ls);
        let expect_la = RationalMatrix::from_i64_rows(&[
            vec![2, -1, 0, -1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![-1, 0, -1, 2],
        ]);
        assert_eq!(blocks.l_a, expect_la);
        assert_eq!(blocks.l_a, cycle_laplacian(4).unwrap());

        let cyl = decompose(&build_chain(1, ChainVariant::Cylinder).unwrap()).unwrap();
        assert_eq!(cyl.l_s.get(0, 3), &rat(-1));
        assert_eq!(cyl.l_s.get(3, 0), &rat(-1));
        assert_eq!(cyl.l_a, blocks.l_a);
    }

    #[test]
    fn template_match_small_orders() {
        for n in 1..=3 {
            for variant in ChainVariant::BOTH {
                let blocks = decompose(&build_chain(n, variant).unwrap()).unwrap();
                assert_eq!(blocks.l_s, expected_ls(n, variant), "n={n} {variant}");
                assert_eq!(blocks.l_a, cycle_laplacian(4 * n).unwrap());
            }
        }
    }

    #[test]
    fn reconstruction_is_integral_and_matches_adjacency() {
        for variant in ChainVariant::BOTH {
            let g = build_chain(2, variant).unwrap();
            let lap = laplacian(&g);
            let blocks = decompose(&g).unwrap();
            let v11 = blocks.reconstruct_v11();
            let v12 = blocks.reconstruct_v12();
            assert!(v11.is_integer());
            assert!(v12.is_integer());
            for i in 0..8 {
                for j in 0..8 {
                    assert_eq!(v11.get(i, j), lap.get(i, j));
                    assert_eq!(v12.get(i, j), lap.get(i, 8 + j));
                }
            }
        }
    }

    #[test]
    fn factorization_check_small() {
        assert!(spectrum_factorization_check(
            &build_chain(1, ChainVariant::Mobius).unwrap(),
            1e-9
        )
        .unwrap());
        assert!(spectrum_factorization_check(
            &build_chain(3, ChainVariant::Cylinder).unwrap(),
            1e-9
        )
        .unwrap());
    }

    #[test]
    fn l_a_spectrum_is_cycle_spectrum() {
        let g = build_chain(1, ChainVariant::Mobius).unwrap();
        let blocks = decompose(&g).unwrap();
        let eig = spectral::symmetric_eigenvalues(&blocks.l_a).unwrap();
        let expect = [0.0, 2.0, 2.0, 4.0];
        for (a, b) in eig.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn cycle_laplacian_rejects_small() {
        assert!(cycle_laplacian(2).is_err());
        assert_eq!(cycle_laplacian(3).unwrap().trace(), rat(6));
    }
}
