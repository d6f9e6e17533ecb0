//! Dimensions of irreducible representations of the rank-`g` symplectic
//! Lie algebra by the Weyl dimension formula, and the dimension-level
//! verification of the quotient and derivation decompositions.

use num::{BigInt, BigRational, One, ToPrimitive};
use serde::Serialize;

use crate::derivations::derivation_kernel;
use crate::error::{Error, Result};
use crate::free_lie::p_dim;
use crate::symplectic::Genus;

/// A partition indexing an irreducible representation: weakly decreasing
/// positive parts, at most `g` of them at genus `g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn label(&self) -> String {
        let inner = self
            .parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!("[{inner}]")
    }
}

/// Dimension of the irreducible representation indexed by `lambda` for the
/// rank-`g` symplectic Lie algebra, by the Weyl dimension formula over the
/// positive roots of type C.
///
/// With `l_i = lambda_i + g - i + 1` and `m_i = g - i + 1`, the dimension
/// is `prod_{i<j} (l_i^2 - l_j^2)/(m_i^2 - m_j^2) * prod_i l_i/m_i`. The
/// rational product always collapses to an integer; this is asserted.
pub fn weyl_dim(lambda: &Partition, genus: Genus) -> Result<usize> {
    let g = genus.get();
    if lambda.len() > g {
        return Err(Error::InvalidPartition(format!(
            "partition {} has more than g = {g} parts",
            lambda.label()
        )));
    }
    let l: Vec<i64> = (0..g)
        .map(|i| {
            let part = lambda.parts.get(i).copied().unwrap_or(0) as i64;
            part + (g - i) as i64
        })
        .collect();
    let m: Vec<i64> = (0..g).map(|i| (g - i) as i64).collect();
    let mut dim = BigRational::one();
    for i in 0..g {
        for j in i + 1..g {
            let num = BigInt::from(l[i] * l[i] - l[j] * l[j]);
            let den = BigInt::from(m[i] * m[i] - m[j] * m[j]);
            dim *= BigRational::new(num, den);
        }
        dim *= BigRational::new(BigInt::from(l[i]), BigInt::from(m[i]));
    }
    assert!(dim.is_integer(), "Weyl product must be an integer");
    Ok(dim
        .to_integer()
        .to_usize()
        .expect("representation dimension fits in usize"))
}

#[derive(Clone, Debug, Serialize)]
pub struct PDecompositionRow {
    pub m: usize,
    pub lambda: String,
    pub p_dim: usize,
    pub weyl_dim: usize,
    pub matches: bool,
    /// Set when the partition has exactly `g` parts, the boundary case of
    /// the indexing convention.
    pub boundary_partition: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PDecompositionReport {
    pub genus: usize,
    pub rows: Vec<PDecompositionRow>,
    pub all_match: bool,
}

/// The partitions of the irreducible pieces of `p(-m)` for `m = 1, 2, 3`.
pub fn p_partition(m: usize) -> Partition {
    let parts = match m {
        1 => vec![1],
        2 => vec![1, 1],
        3 => vec![2, 1],
        _ => panic!("decomposition rows are tabulated for m <= 3"),
    };
    Partition::new(parts).expect("fixed partitions are valid")
}

/// Checks that the quotient piece dimensions match the Weyl dimensions of
/// their irreducible decomposition for `m = 1, 2, 3`.
pub fn check_p_decomposition(genus: Genus) -> PDecompositionReport {
    let rows: Vec<PDecompositionRow> = (1..=3)
        .map(|m| {
            let lambda = p_partition(m);
            let weyl = weyl_dim(&lambda, genus).expect("partitions fit every g >= 2");
            let p = p_dim(genus, m);
            PDecompositionRow {
                m,
                lambda: lambda.label(),
                p_dim: p,
                weyl_dim: weyl,
                matches: p == weyl,
                boundary_partition: lambda.len() == genus.get(),
            }
        })
        .collect();
    let all_match = rows.iter().all(|r| r.matches);
    PDecompositionReport {
        genus: genus.get(),
        rows,
        all_match,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DerDecompositionReport {
    pub genus: usize,
    pub kernel_dim: usize,
    pub expected: usize,
    pub matches: bool,
}

/// Checks that the computed weight -2 derivation space has dimension
/// `weyl([2,2]) + weyl([1,1])`.
pub fn check_der_decomposition(genus: Genus) -> DerDecompositionReport {
    let kernel = derivation_kernel(genus, 2);
    let expected = weyl_dim(&Partition::new(vec![2, 2]).unwrap(), genus).unwrap()
        + weyl_dim(&Partition::new(vec![1, 1]).unwrap(), genus).unwrap();
    DerDecompositionReport {
        genus: genus.get(),
        kernel_dim: kernel.dim(),
        expected,
        matches: kernel.dim() == expected,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepRingReport {
    pub genus: usize,
    pub m: usize,
    pub domain_dim: usize,
    pub target_dim: usize,
    pub residue_rank: usize,
    pub surjective: bool,
    pub kernel_dim: usize,
    /// `2g * dim p(-1-m) - dim p(-2-m)`.
    pub expected: usize,
    pub matches: bool,
}

/// Dimension-level verification of the virtual identity expressing the
/// weight `-m` derivations through the quotient pieces: the kernel of the
/// residue map on `Hom(H, p(-1-m))` has dimension `2g * dim p(-1-m) -
/// dim p(-2-m)`, with surjectivity of the residue map verified by rank.
pub fn check_rep_ring_dims(genus: Genus, m: usize) -> Result<RepRingReport> {
    if m != 1 && m != 2 {
        return Err(Error::InvalidPartition(format!(
            "dimension identity tabulated for m in {{1, 2}}, got {m}"
        )));
    }
    let kernel = derivation_kernel(genus, m);
    let expected = genus.letters() * p_dim(genus, m + 1) - p_dim(genus, m + 2);
    Ok(RepRingReport {
        genus: genus.get(),
        m,
        domain_dim: kernel.domain_dim,
        target_dim: kernel.target_dim,
        residue_rank: kernel.residue_rank,
        surjective: kernel.residue_rank == kernel.target_dim,
        kernel_dim: kernel.dim(),
        expected,
        matches: kernel.dim() == expected && kernel.residue_rank == kernel.target_dim,
    })
}

/// Integrality spot check used by the verification suite: the rational
/// Weyl product collapses to an integer (already asserted inside
/// `weyl_dim`; surfaced here as a named check).
pub fn weyl_integrality(genus: Genus, lambdas: &[Partition]) -> Result<Vec<(String, usize)>> {
    lambdas
        .iter()
        .map(|l| Ok((l.label(), weyl_dim(l, genus)?)))
        .collect()
}

/// Helper used widely in checks: `weyl_dim` of an ad-hoc partition.
pub fn weyl(parts: &[usize], genus: Genus) -> usize {
    weyl_dim(&Partition::new(parts.to_vec()).expect("valid parts"), genus)
        .expect("partition fits genus")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus(g: usize) -> Genus {
        Genus::new(g).unwrap()
    }

    #[test]
    fn weyl_standard_examples() {
        for g in 2..=5 {
            assert_eq!(weyl(&[1], genus(g)), 2 * g);
            assert_eq!(weyl(&[1, 1], genus(g)), 2 * g * g - g - 1);
        }
        // Exterior cube: binomial(2g, 3) - 2g at g = 3.
        assert_eq!(weyl(&[1, 1, 1], genus(3)), 14);
        assert_eq!(weyl(&[2, 1], genus(2)), 16);
        assert_eq!(weyl(&[2, 2], genus(2)), 14);
        assert_eq!(weyl(&[2, 2], genus(3)), 90);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(weyl_dim(&Partition::new(vec![1, 1, 1]).unwrap(), genus(2)).is_err());
    }

    #[test]
    fn p_decomposition_small_genera() {
        for g in 2..=4 {
            let report = check_p_decomposition(genus(g));
            assert!(report.all_match, "{report:?}");
        }
    }

    #[test]
    fn rep_ring_identity_m1_genus_2() {
        let report = check_rep_ring_dims(genus(2), 1).unwrap();
        assert!(report.surjective);
        assert!(report.matches);
        // 2g * dim p(-2) - dim p(-3) = 4*5 - 16.
        assert_eq!(report.expected, 4);
    }

    #[test]
    fn der_decomposition_genus_2() {
        let report = check_der_decomposition(genus(2));
        assert_eq!(report.expected, 19);
        assert!(report.matches);
    }
}
