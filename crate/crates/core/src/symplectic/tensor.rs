//! Sparse homogeneous tensors over the letter basis of `H`.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use super::{Genus, Letter};
use crate::linalg::Rational;

/// A homogeneous element of the `degree`-th tensor power of `H`.
///
/// Words are packed into a single index with the first letter most
/// significant, so the numeric order of codes is the lexicographic order of
/// words in the alphabet order of [`Letter`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    genus: Genus,
    degree: usize,
    coords: BTreeMap<usize, Rational>,
}

pub(crate) fn pack_word(g: Genus, letters: &[Letter]) -> usize {
    letters
        .iter()
        .fold(0usize, |acc, l| acc * g.letters() + l.rank() as usize)
}

pub(crate) fn unpack_word(g: Genus, code: usize, degree: usize) -> Vec<Letter> {
    let base = g.letters();
    let mut out = vec![Letter::from_rank(0); degree];
    let mut rest = code;
    for i in (0..degree).rev() {
        out[i] = Letter::from_rank((rest % base) as u8);
        rest /= base;
    }
    out
}

impl Tensor {
    pub fn zero(genus: Genus, degree: usize) -> Self {
        Tensor {
            genus,
            degree,
            coords: BTreeMap::new(),
        }
    }

    pub fn monomial(genus: Genus, letters: &[Letter], coeff: Rational) -> Self {
        let mut t = Tensor::zero(genus, letters.len());
        t.add_code(pack_word(genus, letters), coeff);
        t
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub(crate) fn add_code(&mut self, code: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let e = self.coords.entry(code).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.coords.remove(&code);
        }
    }

    pub fn add_word(&mut self, letters: &[Letter], coeff: Rational) {
        debug_assert_eq!(letters.len(), self.degree);
        self.add_code(pack_word(self.genus, letters), coeff);
    }

    pub fn add_assign_scaled(&mut self, other: &Tensor, factor: &Rational) {
        debug_assert_eq!(self.degree, other.degree);
        for (&code, c) in &other.coords {
            self.add_code(code, c * factor);
        }
    }

    pub fn coeff_word(&self, letters: &[Letter]) -> Rational {
        self.coords
            .get(&pack_word(self.genus, letters))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn codes(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().map(|(&c, v)| (c, v))
    }

    pub fn words(&self) -> impl Iterator<Item = (Vec<Letter>, &Rational)> {
        self.coords
            .iter()
            .map(|(&code, v)| (unpack_word(self.genus, code, self.degree), v))
    }

    /// Concatenation product `self (x) other`.
    pub fn tensor_product(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.genus, self.degree + other.degree);
        let shift = self.genus.letters().pow(other.degree as u32);
        for (cx, vx) in self.codes() {
            for (cy, vy) in other.codes() {
                out.add_code(cx * shift + cy, vx * vy);
            }
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (word, c)) in self.words().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*")?;
            for (j, l) in word.iter().enumerate() {
                if j > 0 {
                    write!(f, "(x)")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}
