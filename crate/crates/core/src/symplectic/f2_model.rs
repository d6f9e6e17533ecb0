//! The mod-2 even-subset model of `H`: even subsets of the Weierstrass
//! point set `W = {1, ..., 2g+2}` modulo complementation, with the
//! intersection-count pairing and the induced symplectic action of
//! permutations of `W`.

use std::collections::BTreeSet;

use super::Genus;
use crate::error::{Error, Result};

/// Mod-2 rank of a set of bit rows.
fn f2_rank(rows: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &row in rows {
        let mut r = row;
        for &b in &basis {
            let lead = 1u32 << (31 - b.leading_zeros());
            if r & lead != 0 {
                r ^= b;
            }
        }
        if r != 0 {
            basis.push(r);
        }
    }
    basis.len()
}

/// The class of an even subset of `W` modulo complementation, stored as the
/// canonical representative that excludes the last point `2g+2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct F2SubsetClass {
    genus: Genus,
    /// Bit `i` set means point `i+1` is in the representative.
    bits: u32,
}

impl F2SubsetClass {
    pub fn new(genus: Genus, subset: &BTreeSet<usize>) -> Result<Self> {
        if subset.len() % 2 != 0 {
            return Err(Error::OddSubset);
        }
        let n = genus.points();
        let mut bits: u32 = 0;
        for &p in subset {
            if p < 1 || p > n {
                return Err(Error::UnknownPoint(p));
            }
            bits |= 1 << (p - 1);
        }
        Ok(Self::from_bits(genus, bits))
    }

    fn from_bits(genus: Genus, bits: u32) -> Self {
        let n = genus.points();
        let full = (1u32 << n) - 1;
        let canonical = if bits & (1 << (n - 1)) != 0 {
            bits ^ full
        } else {
            bits
        };
        F2SubsetClass {
            genus,
            bits: canonical,
        }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// The canonical representative as a point set.
    pub fn representative(&self) -> BTreeSet<usize> {
        (1..=self.genus.points())
            .filter(|&p| self.bits & (1 << (p - 1)) != 0)
            .collect()
    }

    /// Coordinates over the basis classes of `{i, 2g+2}`, `i = 1..2g`,
    /// packed as a `2g`-bit vector.
    ///
    /// The representative without the last point is a symmetric difference
    /// of such pairs; the single relation `sum_{i=1}^{2g+1} [{i, 2g+2}] = 0`
    /// eliminates the pair through point `2g+1`.
    pub fn coords(&self) -> u32 {
        let g2 = self.genus.letters(); // 2g
        let mask = (1u32 << g2) - 1;
        let mut coords = self.bits & mask;
        if self.bits & (1 << g2) != 0 {
            coords ^= mask;
        }
        coords
    }
}

/// The quotient space of even subsets modulo complementation: dimension and
/// a basis.
#[derive(Clone, Debug)]
pub struct F2ClassSpace {
    pub genus: Genus,
    pub dim: usize,
    pub basis: Vec<F2SubsetClass>,
}

/// Builds the even-subset quotient space. The dimension is computed by a
/// rank oracle over all even characteristic vectors modulo the
/// complementation relation and must come out as `2g`.
pub fn f2_class_space(genus: Genus) -> F2ClassSpace {
    let n = genus.points();
    let full = (1u32 << n) - 1;
    // Rank of the space of even subsets, then quotient by span{e_W}.
    let even_rows: Vec<u32> = (0..(1u32 << n))
        .filter(|s| s.count_ones() % 2 == 0)
        .collect();
    let even_rank = f2_rank(&even_rows);
    let relation_rank = f2_rank(&[full]);
    let dim = even_rank - relation_rank;

    let basis: Vec<F2SubsetClass> = (1..=genus.letters())
        .map(|i| {
            let set: BTreeSet<usize> = [i, n].into_iter().collect();
            F2SubsetClass::new(genus, &set).expect("basis pair is even and in range")
        })
        .collect();
    F2ClassSpace { genus, dim, basis }
}

/// The mod-2 pairing `e_S . e_T = #(S intersect T) mod 2`. Well defined on
/// classes because both subsets are even and `|W|` is even.
pub fn f2_pairing(s: &F2SubsetClass, t: &F2SubsetClass) -> Result<u8> {
    super::check_same_genus(s.genus, t.genus)?;
    Ok(((s.bits & t.bits).count_ones() % 2) as u8)
}

/// A square matrix over the two-element field, rows as bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct F2Matrix {
    pub size: usize,
    /// `rows[i]` bit `j` is the entry at row `i`, column `j`.
    pub rows: Vec<u32>,
}

impl F2Matrix {
    pub fn identity(size: usize) -> Self {
        F2Matrix {
            size,
            rows: (0..size).map(|i| 1 << i).collect(),
        }
    }

    pub fn from_columns(size: usize, cols: &[u32]) -> Self {
        let rows = (0..size)
            .map(|i| {
                let mut r = 0u32;
                for (j, &col) in cols.iter().enumerate() {
                    if col & (1 << i) != 0 {
                        r |= 1 << j;
                    }
                }
                r
            })
            .collect();
        F2Matrix { size, rows }
    }

    pub fn transpose(&self) -> F2Matrix {
        F2Matrix::from_columns(self.size, &self.rows)
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u32;
                for j in 0..self.size {
                    if r & (1 << j) != 0 {
                        acc ^= other.rows[j];
                    }
                }
                acc
            })
            .collect();
        F2Matrix {
            size: self.size,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        f2_rank(&self.rows)
    }
}

/// Gram matrix of the mod-2 pairing on the canonical basis classes.
pub fn f2_gram(genus: Genus) -> F2Matrix {
    let space = f2_class_space(genus);
    let size = space.basis.len();
    let rows = (0..size)
        .map(|i| {
            let mut r = 0u32;
            for j in 0..size {
                if f2_pairing(&space.basis[i], &space.basis[j]).expect("same genus") == 1 {
                    r |= 1 << j;
                }
            }
            r
        })
        .collect();
    F2Matrix { size, rows }
}

/// The matrix of the action of a permutation of `W` on the even-subset
/// quotient. The action preserves the pairing, and the representation is
/// faithful.
pub fn perm_to_sp_f2(genus: Genus, perm: &[usize]) -> Result<F2Matrix> {
    let n = genus.points();
    if perm.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n + 1];
    for &p in perm {
        if p < 1 || p > n {
            return Err(Error::UnknownPoint(p));
        }
        if seen[p] {
            return Err(Error::InvalidDescriptor(format!(
                "permutation repeats point {p}"
            )));
        }
        seen[p] = true;
    }
    let cols: Vec<u32> = (1..=genus.letters())
        .map(|i| {
            let image: BTreeSet<usize> = [perm[i - 1], perm[n - 1]].into_iter().collect();
            F2SubsetClass::new(genus, &image)
                .expect("image of a pair is an even subset")
                .coords()
        })
        .collect();
    Ok(F2Matrix::from_columns(genus.letters(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use std::collections::HashSet;

    fn g2() -> Genus {
        Genus::new(2).unwrap()
    }

    fn class(g: Genus, pts: &[usize]) -> F2SubsetClass {
        F2SubsetClass::new(g, &pts.iter().copied().collect()).unwrap()
    }

    #[test]
    fn quotient_dimension_is_2g() {
        for g in 2..=5 {
            let genus = Genus::new(g).unwrap();
            let space = f2_class_space(genus);
            assert_eq!(space.dim, 2 * g);
            assert_eq!(space.basis.len(), 2 * g);
        }
    }

    #[test]
    fn complement_identification() {
        let g = g2();
        assert!(class(g, &[]).is_zero());
        assert!(class(g, &[1, 2, 3, 4, 5, 6]).is_zero());
        assert_eq!(class(g, &[1, 2]), class(g, &[3, 4, 5, 6]));
        assert!(!class(g, &[1, 2]).is_zero());
    }

    #[test]
    fn odd_subsets_rejected() {
        assert!(F2SubsetClass::new(g2(), &[1, 2, 3].into()).is_err());
    }

    #[test]
    fn pairing_examples() {
        let g = g2();
        assert_eq!(f2_pairing(&class(g, &[1, 2]), &class(g, &[2, 3])).unwrap(), 1);
        assert_eq!(f2_pairing(&class(g, &[1, 2]), &class(g, &[1, 2])).unwrap(), 0);
        assert_eq!(f2_pairing(&class(g, &[1, 2]), &class(g, &[3, 4])).unwrap(), 0);
    }

    #[test]
    fn pairing_invariant_under_complementation() {
        let g = g2();
        let pairs = [(vec![1, 2], vec![2, 3]), (vec![1, 4], vec![2, 3, 4, 5])];
        for (s, t) in pairs {
            let cs = class(g, &s);
            // Complement of t.
            let tc: Vec<usize> = (1..=6).filter(|p| !t.contains(p)).collect();
            assert_eq!(
                f2_pairing(&cs, &class(g, &t)).unwrap(),
                f2_pairing(&cs, &class(g, &tc)).unwrap()
            );
        }
    }

    #[test]
    fn gram_nondegenerate() {
        for g in 2..=5 {
            let genus = Genus::new(g).unwrap();
            let gram = f2_gram(genus);
            assert_eq!(gram.rank(), 2 * g);
        }
    }

    #[test]
    fn identity_permutation_is_identity_matrix() {
        let g = g2();
        let perm: Vec<usize> = (1..=6).collect();
        assert_eq!(perm_to_sp_f2(g, &perm).unwrap(), F2Matrix::identity(4));
    }

    #[test]
    fn transposition_fixes_its_pair_class() {
        let g = g2();
        let perm = vec![2, 1, 3, 4, 5, 6];
        let m = perm_to_sp_f2(g, &perm).unwrap();
        let v = class(g, &[1, 2]).coords();
        // Apply m to v: column combination.
        let mt = m.transpose();
        let mut image = 0u32;
        for j in 0..4 {
            if v & (1 << j) != 0 {
                image ^= mt.rows[j];
            }
        }
        assert_eq!(image, v);
    }

    #[test]
    fn permutations_preserve_pairing() {
        let g = g2();
        let gram = f2_gram(g);
        for perm in (1..=6).permutations(6).step_by(31) {
            let m = perm_to_sp_f2(g, &perm).unwrap();
            assert_eq!(m.transpose().mul(&gram).mul(&m), gram);
        }
    }

    #[test]
    fn representation_faithful_exhaustive_genus_2() {
        let g = g2();
        let mut seen = HashSet::new();
        for perm in (1..=6).permutations(6) {
            let m = perm_to_sp_f2(g, &perm).unwrap();
            assert!(seen.insert(m.rows));
        }
        assert_eq!(seen.len(), 720);
    }
}
