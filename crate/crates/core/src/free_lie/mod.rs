//! The free Lie algebra on the letters of `H` in Lyndon coordinates, the
//! graded ideal generated by `theta`, and the quotient pieces `p(-m)`.
//!
//! Brackets are computed by expanding into the tensor algebra and reading
//! the result back through the triangularity of Lyndon bracketings: the
//! lexicographically smallest word of an expansion is the Lyndon word
//! itself, with coefficient 1.

mod context;
mod ideal;
mod lyndon;

pub use ideal::IdealComponent;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::Zero;

use context::context;
use lyndon::pack;

use crate::linalg::{rat_int, Rational};
use crate::symplectic::{Genus, Letter, Tensor};

/// A Lyndon word over the letter alphabet: strictly smaller than all of its
/// proper cyclic rotations in the alphabet order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LyndonWord {
    letters: Vec<Letter>,
}

impl LyndonWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The Lyndon basis of the degree-`k` component, in lexicographic order.
pub fn lyndon_basis(degree: usize, genus: Genus) -> Vec<LyndonWord> {
    assert!(degree >= 1, "degree must be positive");
    let table = context(genus).degree(degree);
    table
        .words
        .iter()
        .map(|w| LyndonWord {
            letters: w.iter().map(|&r| Letter::from_rank(r)).collect(),
        })
        .collect()
}

/// Dimension of the degree-`k` component of the free Lie algebra on `n`
/// letters: `(1/k) sum_{d | k} mu(d) n^{k/d}`.
pub fn witt_dim(n: usize, k: usize) -> usize {
    assert!(n >= 1 && k >= 1);
    let mobius = |mut m: usize| -> i64 {
        let mut mu = 1i64;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if m > 1 {
            mu = -mu;
        }
        mu
    };
    let mut total: i64 = 0;
    for d in 1..=k {
        if k % d == 0 {
            total += mobius(d) * (n as i64).pow((k / d) as u32);
        }
    }
    debug_assert!(total > 0 && total % k as i64 == 0);
    (total / k as i64) as usize
}

/// A homogeneous element of the free Lie algebra in Lyndon coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement {
    genus: Genus,
    degree: usize,
    /// Coordinates over the Lyndon basis of `degree`, keyed by basis index.
    coords: BTreeMap<usize, Rational>,
}

impl LieElement {
    pub fn zero(genus: Genus, degree: usize) -> Self {
        LieElement {
            genus,
            degree,
            coords: BTreeMap::new(),
        }
    }

    /// The degree-1 element given by a single letter.
    pub fn letter(genus: Genus, letter: Letter) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(letter.rank() as usize, rat_int(1));
        LieElement {
            genus,
            degree: 1,
            coords,
        }
    }

    pub fn from_coords(genus: Genus, degree: usize, coords: BTreeMap<usize, Rational>) -> Self {
        let dim = context(genus).degree(degree).dim();
        assert!(coords.keys().all(|&i| i < dim), "coordinate out of range");
        LieElement {
            genus,
            degree,
            coords: coords.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
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

    pub fn coeff(&self, index: usize) -> Rational {
        self.coords.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().map(|(&i, v)| (i, v))
    }

    pub fn add_assign_scaled(&mut self, other: &LieElement, factor: &Rational) {
        debug_assert_eq!(self.degree, other.degree);
        debug_assert_eq!(self.genus, other.genus);
        for (&i, c) in &other.coords {
            let e = self.coords.entry(i).or_insert_with(Rational::zero);
            *e += c * factor;
            if e.is_zero() {
                self.coords.remove(&i);
            }
        }
    }

    pub fn scaled(&self, factor: &Rational) -> LieElement {
        let mut out = LieElement::zero(self.genus, self.degree);
        out.add_assign_scaled(self, factor);
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &rat_int(-1));
        out
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let table = context(self.genus).degree(self.degree);
        for (i, (&idx, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let word = LyndonWord {
                letters: table.words[idx].iter().map(|&r| Letter::from_rank(r)).collect(),
            };
            write!(f, "{c}*[{word}]")?;
        }
        Ok(())
    }
}

/// Rewrites a homogeneous tensor known to lie in the Lie subalgebra back
/// into Lyndon coordinates by peeling leading words.
fn tensor_to_lyndon(
    genus: Genus,
    degree: usize,
    mut t: BTreeMap<usize, Rational>,
) -> BTreeMap<usize, Rational> {
    let table = context(genus).degree(degree);
    let mut out = BTreeMap::new();
    while let Some((code, coeff)) = t.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let idx = table
            .index_of_code(code)
            .expect("leading word of a Lie element must be Lyndon");
        for &(wc, k) in &table.expansions[idx] {
            if wc == code {
                continue;
            }
            let e = t.entry(wc).or_insert_with(Rational::zero);
            *e -= &coeff * rat_int(k);
            if e.is_zero() {
                t.remove(&wc);
            }
        }
        out.insert(idx, coeff);
    }
    out
}

fn expand_to_codes(x: &LieElement) -> BTreeMap<usize, Rational> {
    let table = context(x.genus).degree(x.degree);
    let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
    for (idx, c) in x.terms() {
        for &(code, k) in &table.expansions[idx] {
            let e = out.entry(code).or_insert_with(Rational::zero);
            *e += c * rat_int(k);
            if e.is_zero() {
                out.remove(&code);
            }
        }
    }
    out
}

/// The Lie bracket, re-expressed in the Lyndon basis of the summed degree.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    assert_eq!(x.genus, y.genus, "bracket of elements over different genera");
    let genus = x.genus;
    let degree = x.degree + y.degree;
    let tx = expand_to_codes(x);
    let ty = expand_to_codes(y);
    let letters = genus.letters();
    let shift_y = letters.pow(y.degree as u32);
    let shift_x = letters.pow(x.degree as u32);
    let mut t: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut add = |code: usize, v: Rational| {
        if v.is_zero() {
            return;
        }
        let e = t.entry(code).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            t.remove(&code);
        }
    };
    for (&cx, vx) in &tx {
        for (&cy, vy) in &ty {
            add(cx * shift_y + cy, vx * vy);
            add(cy * shift_x + cx, -(vx * vy));
        }
    }
    LieElement {
        genus,
        degree,
        coords: tensor_to_lyndon(genus, degree, t),
    }
}

/// The bracket-expansion embedding into the tensor algebra,
/// `[u, v] -> u (x) v - v (x) u` recursively.
pub fn lie_to_tensor(x: &LieElement) -> Tensor {
    let mut out = Tensor::zero(x.genus, x.degree);
    for (code, v) in expand_to_codes(x) {
        out.add_code(code, v);
    }
    out
}

/// `theta` as a Lie element: `sum_i [a_i, b_i]` in degree 2.
pub fn theta_lie(genus: Genus) -> LieElement {
    let mut out = LieElement::zero(genus, 2);
    for i in 1..=genus.get() {
        let ab = bracket(
            &LieElement::letter(genus, Letter::a(i)),
            &LieElement::letter(genus, Letter::b(i)),
        );
        out.add_assign_scaled(&ab, &rat_int(1));
    }
    out
}

/// `theta_I` as a Lie element.
pub fn theta_lie_subset(genus: Genus, handles: &std::collections::BTreeSet<usize>) -> LieElement {
    let mut out = LieElement::zero(genus, 2);
    for &i in handles {
        assert!(i >= 1 && i <= genus.get(), "handle out of range");
        let ab = bracket(
            &LieElement::letter(genus, Letter::a(i)),
            &LieElement::letter(genus, Letter::b(i)),
        );
        out.add_assign_scaled(&ab, &rat_int(1));
    }
    out
}

/// The degree-`k` component of the ideal generated by `theta`, `k >= 2`.
pub fn ideal_component(genus: Genus, degree: usize) -> Arc<IdealComponent> {
    context(genus).ideal(degree)
}

/// Dimension of `p(-m)`, the degree-`m` piece of the quotient by the
/// theta-ideal.
pub fn p_dim(genus: Genus, m: usize) -> usize {
    if m == 1 {
        return genus.letters();
    }
    context(genus).degree(m).dim() - ideal_component(genus, m).dim()
}

/// A canonical coset representative in `p(-m)`: coordinates over the fixed
/// complement of `J_m` inside the Lyndon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PElement {
    genus: Genus,
    degree: usize,
    /// Keyed by position in the complement coordinate list.
    coords: BTreeMap<usize, Rational>,
}

impl PElement {
    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, position: usize) -> Rational {
        self.coords
            .get(&position)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().map(|(&i, v)| (i, v))
    }

    /// The canonical representative back inside the free Lie algebra.
    pub fn lift(&self) -> LieElement {
        if self.degree == 1 {
            return LieElement {
                genus: self.genus,
                degree: 1,
                coords: self.coords.clone(),
            };
        }
        let component = ideal_component(self.genus, self.degree);
        let free = component.free_cols();
        LieElement {
            genus: self.genus,
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .map(|(&pos, v)| (free[pos], v.clone()))
                .collect(),
        }
    }

    /// The canonical basis of `p(-m)` (complement coordinates).
    pub fn basis(genus: Genus, degree: usize) -> Vec<PElement> {
        (0..p_dim(genus, degree))
            .map(|pos| PElement {
                genus,
                degree,
                coords: [(pos, rat_int(1))].into_iter().collect(),
            })
            .collect()
    }
}

/// Canonical reduction into `p(-m)`. Degree 1 passes through unchanged;
/// in higher degree the pivot coordinates of `J_m` are eliminated.
pub fn reduce_mod_ideal(x: &LieElement) -> PElement {
    if x.degree == 1 {
        return PElement {
            genus: x.genus,
            degree: 1,
            coords: x.coords.clone(),
        };
    }
    let component = ideal_component(x.genus, x.degree);
    let reduced = component.reduce(x);
    let free = component.free_cols();
    let coords = reduced
        .coords
        .iter()
        .map(|(&i, v)| {
            let pos = free
                .binary_search(&i)
                .expect("reduced element supported on the complement");
            (pos, v.clone())
        })
        .collect();
    PElement {
        genus: x.genus,
        degree: x.degree,
        coords,
    }
}

/// Convenience: the Lyndon basis element at `index` of a given degree.
pub fn basis_element(genus: Genus, degree: usize, index: usize) -> LieElement {
    let dim = context(genus).degree(degree).dim();
    assert!(index < dim, "basis index out of range");
    LieElement {
        genus,
        degree,
        coords: [(index, rat_int(1))].into_iter().collect(),
    }
}

/// Index of a Lyndon word given by its letters, if it is one.
pub fn word_index(genus: Genus, letters: &[Letter]) -> Option<usize> {
    let table = context(genus).degree(letters.len());
    let raw: Vec<u8> = letters.iter().map(|l| l.rank()).collect();
    table.index_of_code(pack(genus.letters(), &raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn g2() -> Genus {
        Genus::new(2).unwrap()
    }

    fn letter(g: Genus, l: Letter) -> LieElement {
        LieElement::letter(g, l)
    }

    #[test]
    fn lyndon_counts_match_witt() {
        for g in 2..=5 {
            let genus = Genus::new(g).unwrap();
            for k in 1..=5 {
                assert_eq!(lyndon_basis(k, genus).len(), witt_dim(2 * g, k), "g={g} k={k}");
            }
        }
    }

    #[test]
    fn basis_words_are_lyndon() {
        // Strictly smaller than every proper rotation.
        let g = g2();
        for k in 1..=4 {
            for word in lyndon_basis(k, g) {
                let letters = word.letters();
                for cut in 1..letters.len() {
                    let rotation: Vec<Letter> = letters[cut..]
                        .iter()
                        .chain(&letters[..cut])
                        .copied()
                        .collect();
                    assert!(letters < rotation.as_slice(), "{word}");
                }
            }
        }
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_dim(4, 2), 6);
        assert_eq!(witt_dim(4, 3), 20);
        assert_eq!(witt_dim(4, 4), 60);
        assert_eq!(witt_dim(7, 1), 7);
    }

    #[test]
    fn bracket_antisymmetry_on_letters() {
        let g = g2();
        let a1 = letter(g, Letter::a(1));
        assert!(bracket(&a1, &a1).is_zero());
        let b1 = letter(g, Letter::b(1));
        let ab = bracket(&a1, &b1);
        let ba = bracket(&b1, &a1);
        assert_eq!(ba, ab.scaled(&rat_int(-1)));
        // [a1, b1] is the degree-2 basis element of the word a1.b1.
        let idx = word_index(g, &[Letter::a(1), Letter::b(1)]).unwrap();
        assert_eq!(ab, basis_element(g, 2, idx));
    }

    #[test]
    fn bracket_bilinearity() {
        let g = g2();
        let a1 = letter(g, Letter::a(1));
        let b1 = letter(g, Letter::b(1));
        let ab = bracket(&a1, &b1);
        let mut sum = bracket(&ab, &a1);
        sum.add_assign_scaled(&bracket(&ab.scaled(&rat_int(-1)), &a1), &rat_int(1));
        assert!(sum.is_zero());
    }

    #[test]
    fn jacobi_identity_exact() {
        let g = g2();
        let x = letter(g, Letter::a(1));
        let mut y = letter(g, Letter::b(1));
        y.add_assign_scaled(&letter(g, Letter::a(2)), &rat(3, 2));
        let mut z = letter(g, Letter::b(2));
        z.add_assign_scaled(&letter(g, Letter::a(1)), &rat(-1, 3));
        let mut total = bracket(&x, &bracket(&y, &z));
        total.add_assign_scaled(&bracket(&y, &bracket(&z, &x)), &rat_int(1));
        total.add_assign_scaled(&bracket(&z, &bracket(&x, &y)), &rat_int(1));
        assert!(total.is_zero());
    }

    #[test]
    fn lie_to_tensor_examples() {
        let g = g2();
        let a1 = Letter::a(1);
        let b1 = Letter::b(1);
        let a2 = Letter::a(2);
        let ab = bracket(&letter(g, a1), &letter(g, b1));
        let t = lie_to_tensor(&ab);
        assert_eq!(t.coeff_word(&[a1, b1]), rat_int(1));
        assert_eq!(t.coeff_word(&[b1, a1]), rat_int(-1));

        let nested = bracket(&ab, &letter(g, a2));
        let t3 = lie_to_tensor(&nested);
        assert_eq!(t3.coeff_word(&[a1, b1, a2]), rat_int(1));
        assert_eq!(t3.coeff_word(&[b1, a1, a2]), rat_int(-1));
        assert_eq!(t3.coeff_word(&[a2, a1, b1]), rat_int(-1));
        assert_eq!(t3.coeff_word(&[a2, b1, a1]), rat_int(1));
    }

    #[test]
    fn theta_lie_matches_wedge_embedding() {
        for g in 2..=3 {
            let genus = Genus::new(g).unwrap();
            let lie = lie_to_tensor(&theta_lie(genus));
            let wedge = crate::symplectic::wedge_to_tensor(&crate::symplectic::theta(genus));
            assert_eq!(lie, wedge);
        }
    }

    #[test]
    fn ideal_dimensions_genus_2() {
        let g = g2();
        assert_eq!(ideal_component(g, 2).dim(), 1);
        assert_eq!(ideal_component(g, 3).dim(), 4);
        assert_eq!(p_dim(g, 1), 4);
        assert_eq!(p_dim(g, 2), 5);
        assert_eq!(p_dim(g, 3), 16);
    }

    #[test]
    fn reduce_kills_the_ideal() {
        let g = g2();
        let t = theta_lie(g);
        assert!(reduce_mod_ideal(&t).is_zero());
        let ta1 = bracket(&t, &letter(g, Letter::a(1)));
        assert!(reduce_mod_ideal(&ta1).is_zero());
    }

    #[test]
    fn reduce_is_idempotent() {
        let g = g2();
        for idx in 0..witt_dim(4, 3) {
            let x = basis_element(g, 3, idx);
            let p = reduce_mod_ideal(&x);
            assert_eq!(reduce_mod_ideal(&p.lift()), p);
        }
    }

    #[test]
    fn kernel_of_reduce_has_ideal_dimension() {
        let g = g2();
        for k in 2..=4 {
            let dim = lyndon_basis(k, g).len();
            let rows = p_dim(g, k);
            let m = crate::linalg::SparseMatrix::from_triplets(
                rows,
                dim,
                (0..dim).flat_map(|j| {
                    reduce_mod_ideal(&basis_element(g, k, j))
                        .terms()
                        .map(|(pos, v)| (pos, j, v.clone()))
                        .collect::<Vec<_>>()
                }),
            )
            .unwrap();
            assert_eq!(dim - m.rank(), ideal_component(g, k).dim());
        }
    }

    #[test]
    fn reduce_is_linear() {
        let g = g2();
        let x = basis_element(g, 3, 2).scaled(&rat(5, 3));
        let y = basis_element(g, 3, 7);
        let mut sum = x.clone();
        sum.add_assign_scaled(&y, &rat_int(2));
        let mut expected = reduce_mod_ideal(&x).lift();
        expected.add_assign_scaled(&reduce_mod_ideal(&y).lift(), &rat_int(2));
        assert_eq!(reduce_mod_ideal(&sum).lift(), expected);
    }
}
