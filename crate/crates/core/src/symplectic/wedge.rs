//! The exterior square of `H`, its symmetric square, the element `theta`
//! and the two projections attached to it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::Zero;

use super::tensor::Tensor;
use super::{check_same_genus, letter_pairing, Genus, Letter};
use crate::error::{Error, Result};
use crate::linalg::{rat, rat_int, Rational};

/// An element of the exterior square of `H`, stored on wedge monomials
/// `s ^ t` with `s < t` in the letter order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiVector {
    genus: Genus,
    coords: BTreeMap<(Letter, Letter), Rational>,
}

impl BiVector {
    pub fn zero(genus: Genus) -> Self {
        BiVector {
            genus,
            coords: BTreeMap::new(),
        }
    }

    /// The wedge `x ^ y` of two basis letters.
    pub fn wedge(genus: Genus, x: Letter, y: Letter) -> Self {
        let mut v = BiVector::zero(genus);
        v.add_wedge(x, y, rat_int(1));
        v
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    /// Adds `coeff * (x ^ y)`, normalizing the monomial orientation.
    pub fn add_wedge(&mut self, x: Letter, y: Letter, coeff: Rational) {
        if x == y || coeff.is_zero() {
            return;
        }
        let (key, signed) = if x < y {
            ((x, y), coeff)
        } else {
            ((y, x), -coeff)
        };
        let e = self.coords.entry(key).or_insert_with(Rational::zero);
        *e += signed;
        if e.is_zero() {
            self.coords.remove(&key);
        }
    }

    /// Signed coefficient of `x ^ y`.
    pub fn coeff(&self, x: Letter, y: Letter) -> Rational {
        if x == y {
            return Rational::zero();
        }
        let (key, sign) = if x < y { ((x, y), 1) } else { ((y, x), -1) };
        self.coords
            .get(&key)
            .map(|c| c * rat_int(sign))
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((Letter, Letter), &Rational)> {
        self.coords.iter().map(|(&k, v)| (k, v))
    }

    pub fn add_assign_scaled(&mut self, other: &BiVector, factor: &Rational) {
        for ((s, t), c) in other.terms() {
            self.add_wedge(s, t, c * factor);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> BiVector {
        let mut out = BiVector::zero(self.genus);
        out.add_assign_scaled(self, factor);
        out
    }

    pub fn sub(&self, other: &BiVector) -> BiVector {
        let mut out = self.clone();
        out.add_assign_scaled(other, &rat_int(-1));
        out
    }

    /// All wedge monomials `(s, t)` with `s < t` in a fixed order; this is
    /// the coordinate order used for matrices over the exterior square.
    pub fn monomials(genus: Genus) -> Vec<(Letter, Letter)> {
        let mut out = Vec::with_capacity(genus.wedge_dim());
        for s in Letter::all(genus) {
            for t in Letter::all(genus) {
                if s < t {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// Full pairing contraction: the image of `hat-theta` is exactly the
    /// kernel of this functional.
    pub fn contraction(&self) -> Rational {
        let mut out = Rational::zero();
        for ((s, t), c) in self.terms() {
            let p = letter_pairing(s, t);
            if p != 0 {
                out += c * rat_int(p);
            }
        }
        out
    }
}

impl fmt::Display for BiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((s, t), c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{s}^{t}")?;
        }
        Ok(())
    }
}

/// The symplectic form element `theta = sum_i a_i ^ b_i`.
pub fn theta(genus: Genus) -> BiVector {
    let mut v = BiVector::zero(genus);
    for i in 1..=genus.get() {
        v.add_wedge(Letter::a(i), Letter::b(i), rat_int(1));
    }
    v
}

/// The handle-restricted form `theta_I = sum_{i in I} a_i ^ b_i`.
pub fn theta_subset(genus: Genus, handles: &BTreeSet<usize>) -> Result<BiVector> {
    let mut v = BiVector::zero(genus);
    for &i in handles {
        if i < 1 || i > genus.get() {
            return Err(Error::IndexOutOfRange(format!(
                "handle {i} outside 1..={}",
                genus.get()
            )));
        }
        v.add_wedge(Letter::a(i), Letter::b(i), rat_int(1));
    }
    Ok(v)
}

/// A coset of the line spanned by `theta` in the exterior square, stored
/// through its canonical representative: the coefficient of `a_g ^ b_g`
/// is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VClass {
    rep: BiVector,
}

impl VClass {
    pub fn genus(&self) -> Genus {
        self.rep.genus()
    }

    pub fn zero(genus: Genus) -> Self {
        VClass {
            rep: BiVector::zero(genus),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The canonical representative inside the exterior square.
    pub fn lift(&self) -> BiVector {
        self.rep.clone()
    }

    pub fn add_assign_scaled(&mut self, other: &VClass, factor: &Rational) {
        self.rep.add_assign_scaled(&other.rep, factor);
    }

    pub fn scaled(&self, factor: &Rational) -> VClass {
        VClass {
            rep: self.rep.scaled(factor),
        }
    }

    pub fn sub(&self, other: &VClass) -> VClass {
        VClass {
            rep: self.rep.sub(&other.rep),
        }
    }

    /// Canonical coordinate order of `V`: all wedge monomials except
    /// `a_g ^ b_g`.
    pub fn monomials(genus: Genus) -> Vec<(Letter, Letter)> {
        let top = (Letter::a(genus.get()), Letter::b(genus.get()));
        BiVector::monomials(genus)
            .into_iter()
            .filter(|&m| m != top)
            .collect()
    }

    /// Dense canonical coordinates, following [`VClass::monomials`].
    pub fn coordinates(&self) -> Vec<Rational> {
        VClass::monomials(self.genus())
            .into_iter()
            .map(|(s, t)| self.rep.coeff(s, t))
            .collect()
    }

    /// The canonical basis of `V` as classes of single wedge monomials.
    pub fn basis(genus: Genus) -> Vec<VClass> {
        VClass::monomials(genus)
            .into_iter()
            .map(|(s, t)| project_mod_theta(&BiVector::wedge(genus, s, t)))
            .collect()
    }
}

impl fmt::Display for VClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// The quotient projection onto `V`: subtracts the unique multiple of
/// `theta` that zeroes the `a_g ^ b_g` coefficient. Linear with kernel
/// exactly the line spanned by `theta`.
pub fn project_mod_theta(x: &BiVector) -> VClass {
    let g = x.genus();
    let top = x.coeff(Letter::a(g.get()), Letter::b(g.get()));
    let mut rep = x.clone();
    if !top.is_zero() {
        rep.add_assign_scaled(&theta(g), &-top);
    }
    VClass { rep }
}

/// The pairing-orthogonal projection `u ^ v -> u ^ v - (<u,v>/g) theta`,
/// realizing `V` as the submodule of the exterior square killed by the
/// full contraction.
pub fn project_hat_theta(x: &BiVector) -> BiVector {
    let g = x.genus();
    let mut out = x.clone();
    let mut correction = Rational::zero();
    for ((s, t), c) in x.terms() {
        let p = letter_pairing(s, t);
        if p != 0 {
            correction += c * rat_int(p);
        }
    }
    if !correction.is_zero() {
        let factor = -correction * rat(1, g.get() as i64);
        out.add_assign_scaled(&theta(g), &factor);
    }
    out
}

/// The inclusion of the exterior square into the tensor square,
/// `u ^ v -> u (x) v - v (x) u`.
pub fn wedge_to_tensor(x: &BiVector) -> Tensor {
    let mut out = Tensor::zero(x.genus(), 2);
    for ((s, t), c) in x.terms() {
        out.add_word(&[s, t], c.clone());
        out.add_word(&[t, s], -c);
    }
    out
}

/// An element of the symmetric square of the exterior square: a rational
/// combination of unordered products of wedge monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymSqBiVector {
    genus: Genus,
    // Key: unordered pair of monomial positions (i <= j) in the order of
    // `BiVector::monomials`.
    coords: BTreeMap<(u32, u32), Rational>,
}

impl SymSqBiVector {
    pub fn zero(genus: Genus) -> Self {
        SymSqBiVector {
            genus,
            coords: BTreeMap::new(),
        }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Number of unordered-product monomials: `N(N+1)/2` with
    /// `N = g(2g-1)`.
    pub fn dim(genus: Genus) -> usize {
        let n = genus.wedge_dim();
        n * (n + 1) / 2
    }

    pub fn add_pair(&mut self, i: u32, j: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = if i <= j { (i, j) } else { (j, i) };
        let e = self.coords.entry(key).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.coords.remove(&key);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &SymSqBiVector, factor: &Rational) {
        for (&(i, j), c) in &other.coords {
            self.add_pair(i, j, c * factor);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> SymSqBiVector {
        let mut out = SymSqBiVector::zero(self.genus);
        out.add_assign_scaled(self, factor);
        out
    }

    pub fn sub(&self, other: &SymSqBiVector) -> SymSqBiVector {
        let mut out = self.clone();
        out.add_assign_scaled(other, &rat_int(-1));
        out
    }

    /// Terms as `((i, j), coeff)` with `i <= j` indexing
    /// `BiVector::monomials`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coords.iter().map(|(&k, v)| (k, v))
    }

    /// The monomial basis `{mu_i mu_j : i <= j}` as elements.
    pub fn basis(genus: Genus) -> Vec<SymSqBiVector> {
        let n = genus.wedge_dim() as u32;
        let mut out = Vec::with_capacity(SymSqBiVector::dim(genus));
        for i in 0..n {
            for j in i..n {
                let mut s = SymSqBiVector::zero(genus);
                s.add_pair(i, j, rat_int(1));
                out.push(s);
            }
        }
        out
    }
}

/// Symmetric product of two exterior-square elements. For `x = sum c_i mu_i`
/// this expands `x * x` as `sum c_i^2 (mu_i mu_i) + sum_{i<j} 2 c_i c_j
/// (mu_i mu_j)`.
pub fn sym_product(x: &BiVector, y: &BiVector) -> Result<SymSqBiVector> {
    check_same_genus(x.genus(), y.genus())?;
    let genus = x.genus();
    let monomials = BiVector::monomials(genus);
    let index: BTreeMap<(Letter, Letter), u32> = monomials
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i as u32))
        .collect();
    let mut out = SymSqBiVector::zero(genus);
    for ((sx, tx), cx) in x.terms() {
        let ix = index[&(sx, tx)];
        for ((sy, ty), cy) in y.terms() {
            let iy = index[&(sy, ty)];
            out.add_pair(ix, iy, cx * cy);
        }
    }
    Ok(out)
}
