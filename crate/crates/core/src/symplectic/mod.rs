//! The symplectic space `H` of rank `2g` with its fixed basis
//! `a_1, b_1, ..., a_g, b_g`, the intersection pairing, and the exterior,
//! symmetric and tensor constructions built on top of it.

mod f2_model;
mod tensor;
mod wedge;

pub use f2_model::{
    f2_class_space, f2_gram, f2_pairing, perm_to_sp_f2, F2ClassSpace, F2Matrix, F2SubsetClass,
};
pub use tensor::Tensor;
pub use wedge::{
    project_hat_theta, project_mod_theta, sym_product, theta, theta_subset, wedge_to_tensor,
    BiVector, SymSqBiVector, VClass,
};

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{rat_int, Rational};

/// Genus of the underlying surface. Everything in scope assumes `g >= 2`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Genus(usize);

impl Genus {
    pub fn new(g: usize) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidGenus(g));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of basis letters of `H`, i.e. `2g`.
    pub fn letters(self) -> usize {
        2 * self.0
    }

    /// Number of Weierstrass points, i.e. `2g + 2`.
    pub fn points(self) -> usize {
        2 * self.0 + 2
    }

    /// Dimension of the exterior square of `H`: `g(2g - 1)`.
    pub fn wedge_dim(self) -> usize {
        self.0 * (2 * self.0 - 1)
    }

    /// Dimension of `V`, the exterior square modulo the symplectic form.
    pub fn v_dim(self) -> usize {
        self.wedge_dim() - 1
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn check_same_genus(left: Genus, right: Genus) -> Result<()> {
    if left != right {
        return Err(Error::GenusMismatch {
            left: left.get(),
            right: right.get(),
        });
    }
    Ok(())
}

/// A basis letter of `H`. Letters are totally ordered handle by handle,
/// `a_1 < b_1 < a_2 < b_2 < ...`, which is also the alphabet order used by
/// the Lyndon machinery.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u8);

impl Letter {
    /// The letter `a_handle` (1-indexed).
    pub fn a(handle: usize) -> Letter {
        Letter((2 * (handle - 1)) as u8)
    }

    /// The letter `b_handle` (1-indexed).
    pub fn b(handle: usize) -> Letter {
        Letter((2 * (handle - 1) + 1) as u8)
    }

    pub fn from_rank(rank: u8) -> Letter {
        Letter(rank)
    }

    /// Position in the alphabet order.
    pub fn rank(self) -> u8 {
        self.0
    }

    pub fn is_a(self) -> bool {
        self.0 % 2 == 0
    }

    /// 1-indexed handle this letter belongs to.
    pub fn handle(self) -> usize {
        (self.0 / 2) as usize + 1
    }

    /// The other letter of the same handle.
    pub fn partner(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    /// All letters of genus `g` in alphabet order.
    pub fn all(g: Genus) -> impl Iterator<Item = Letter> {
        (0..g.letters()).map(|r| Letter(r as u8))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.is_a() { 'a' } else { 'b' }, self.handle())
    }
}

/// Intersection pairing of two basis letters: `<a_i, b_i> = 1`,
/// `<b_i, a_i> = -1`, all other pairs `0`.
pub fn letter_pairing(x: Letter, y: Letter) -> i64 {
    if x.partner() == y {
        if x.is_a() {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// A vector of `H` in exact coordinates over the letter basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HVector {
    genus: Genus,
    coords: BTreeMap<Letter, Rational>,
}

impl HVector {
    pub fn zero(genus: Genus) -> Self {
        HVector {
            genus,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(genus: Genus, letter: Letter) -> Self {
        let mut v = HVector::zero(genus);
        v.add_term(letter, rat_int(1));
        v
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn add_term(&mut self, letter: Letter, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let e = self.coords.entry(letter).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.coords.remove(&letter);
        }
    }

    pub fn coeff(&self, letter: Letter) -> Rational {
        self.coords.get(&letter).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Letter, &Rational)> {
        self.coords.iter().map(|(l, c)| (*l, c))
    }

    pub fn scaled(&self, factor: &Rational) -> HVector {
        let mut out = HVector::zero(self.genus);
        for (l, c) in self.terms() {
            out.add_term(l, c * factor);
        }
        out
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{l}")?;
        }
        Ok(())
    }
}

/// The symplectic pairing on `H`: bilinear, antisymmetric, with
/// `<a_i, b_j> = delta_ij`.
pub fn pairing(u: &HVector, v: &HVector) -> Result<Rational> {
    check_same_genus(u.genus, v.genus)?;
    let mut out = Rational::zero();
    for (x, c) in u.terms() {
        let d = v.coeff(x.partner());
        if d.is_zero() {
            continue;
        }
        let sign = letter_pairing(x, x.partner());
        out += c * &d * rat_int(sign);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SparseMatrix;

    #[test]
    fn genus_bounds() {
        assert!(Genus::new(1).is_err());
        assert_eq!(Genus::new(2).unwrap().letters(), 4);
        assert_eq!(Genus::new(3).unwrap().points(), 8);
    }

    #[test]
    fn pairing_basis_conventions() {
        let g = Genus::new(2).unwrap();
        let a1 = HVector::basis(g, Letter::a(1));
        let b1 = HVector::basis(g, Letter::b(1));
        let a2 = HVector::basis(g, Letter::a(2));
        assert_eq!(pairing(&a1, &b1).unwrap(), rat_int(1));
        assert_eq!(pairing(&b1, &a1).unwrap(), rat_int(-1));
        assert_eq!(pairing(&a1, &a2).unwrap(), rat_int(0));
    }

    #[test]
    fn pairing_rejects_genus_mismatch() {
        let u = HVector::basis(Genus::new(2).unwrap(), Letter::a(1));
        let v = HVector::basis(Genus::new(3).unwrap(), Letter::b(1));
        assert!(pairing(&u, &v).is_err());
    }

    #[test]
    fn gram_matrix_is_standard_block_form() {
        for g in 2..=5 {
            let g = Genus::new(g).unwrap();
            let n = g.letters();
            let gram = SparseMatrix::from_triplets(
                n,
                n,
                Letter::all(g).flat_map(|x| {
                    Letter::all(g).filter_map(move |y| {
                        let p = letter_pairing(x, y);
                        (p != 0).then(|| (x.rank() as usize, y.rank() as usize, rat_int(p)))
                    })
                }),
            )
            .unwrap();
            // One antisymmetric 2x2 block per handle, determinant +1 overall.
            for x in Letter::all(g) {
                for y in Letter::all(g) {
                    let expected = if x.handle() == y.handle() && x != y {
                        if x.is_a() {
                            1
                        } else {
                            -1
                        }
                    } else {
                        0
                    };
                    assert_eq!(gram.get(x.rank() as usize, y.rank() as usize), rat_int(expected));
                }
            }
            assert_eq!(gram.determinant().unwrap(), rat_int(1));
        }
    }

    #[test]
    fn letter_names() {
        assert_eq!(Letter::a(1).to_string(), "a1");
        assert_eq!(Letter::b(3).to_string(), "b3");
        assert_eq!(Letter::a(2).partner(), Letter::b(2));
    }
}
