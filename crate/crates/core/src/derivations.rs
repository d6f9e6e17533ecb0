//! Negative-weight derivations of the quotient Lie algebra: the map `phi`
//! from the symmetric square of the exterior square, the contraction
//! projections onto the exterior square, the section `j_theta`, and the
//! kernel computation identifying the weight -2 derivation space.

use num::Zero;

use crate::error::{Error, Result};
use crate::free_lie::{
    bracket, ideal_component, lie_to_tensor, p_dim, reduce_mod_ideal, LieElement, PElement,
};
use crate::linalg::{rat, rat_int, Rational, SparseMatrix};
use crate::symplectic::{
    letter_pairing, project_hat_theta, project_mod_theta, sym_product, theta, BiVector, Genus,
    HVector, Letter, SymSqBiVector, Tensor, VClass,
};

/// A degree `-m` derivation candidate: one image of degree `m+1` per basis
/// letter, extended to the whole free Lie algebra by the Leibniz rule.
///
/// When `reduced` is set the images are canonical representatives modulo
/// the theta-ideal and the derivation is considered as acting on the
/// quotient; annihilation residues are then computed there as well.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationCandidate {
    genus: Genus,
    shift: usize,
    images: Vec<LieElement>,
    reduced: bool,
}

impl DerivationCandidate {
    pub fn zero(genus: Genus, shift: usize) -> Self {
        let images = Letter::all(genus)
            .map(|_| LieElement::zero(genus, shift + 1))
            .collect();
        DerivationCandidate {
            genus,
            shift,
            images,
            reduced: false,
        }
    }

    pub fn from_images(genus: Genus, shift: usize, images: Vec<LieElement>, reduced: bool) -> Self {
        assert_eq!(images.len(), genus.letters());
        assert!(images.iter().all(|e| e.degree() == shift + 1));
        DerivationCandidate {
            genus,
            shift,
            images,
            reduced,
        }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    /// The degree shift `m`.
    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn image(&self, letter: Letter) -> &LieElement {
        &self.images[letter.rank() as usize]
    }

    pub fn images(&self) -> &[LieElement] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(LieElement::is_zero)
    }

    pub fn add_assign_scaled(&mut self, other: &DerivationCandidate, factor: &Rational) {
        debug_assert_eq!(self.shift, other.shift);
        for (img, o) in self.images.iter_mut().zip(&other.images) {
            img.add_assign_scaled(o, factor);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> DerivationCandidate {
        let mut out = self.clone();
        for img in out.images.iter_mut() {
            *img = img.scaled(factor);
        }
        out
    }

    pub fn sub(&self, other: &DerivationCandidate) -> DerivationCandidate {
        let mut out = self.clone();
        out.add_assign_scaled(other, &rat_int(-1));
        out
    }

    /// Extends the derivation to the tensor algebra by the Leibniz rule.
    /// Used as an independent expansion oracle against
    /// [`annihilation_residue`].
    pub fn derive_tensor(&self, t: &Tensor) -> Tensor {
        let out_degree = t.degree() + self.shift;
        let mut out = Tensor::zero(self.genus, out_degree);
        let image_tensors: Vec<Tensor> = self.images.iter().map(lie_to_tensor).collect();
        for (word, coeff) in t.words() {
            for (pos, &l) in word.iter().enumerate() {
                let replacement = &image_tensors[l.rank() as usize];
                if replacement.is_zero() {
                    continue;
                }
                let prefix = Tensor::monomial(self.genus, &word[..pos], rat_int(1));
                let suffix = Tensor::monomial(self.genus, &word[pos + 1..], rat_int(1));
                let piece = prefix.tensor_product(replacement).tensor_product(&suffix);
                out.add_assign_scaled(&piece, coeff);
            }
        }
        out
    }
}

/// The value of the extended derivation on `theta`, by the Leibniz rule:
/// `sum_i [d(a_i), b_i] + [a_i, d(b_i)]` in degree `m+2`. The derivation
/// descends to the quotient exactly when this vanishes; for reduced
/// candidates the residue is returned as its canonical representative in
/// `p(-m-2)`.
pub fn annihilation_residue(d: &DerivationCandidate) -> LieElement {
    let genus = d.genus;
    let mut out = LieElement::zero(genus, d.shift + 2);
    for i in 1..=genus.get() {
        let a = Letter::a(i);
        let b = Letter::b(i);
        out.add_assign_scaled(
            &bracket(d.image(a), &LieElement::letter(genus, b)),
            &rat_int(1),
        );
        out.add_assign_scaled(
            &bracket(&LieElement::letter(genus, a), d.image(b)),
            &rat_int(1),
        );
    }
    if d.reduced {
        reduce_mod_ideal(&out).lift()
    } else {
        out
    }
}

/// A derivation candidate of shift 2 that annihilates `theta` (raw in the
/// free algebra when unreduced, modulo the ideal when reduced).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Der2Element {
    candidate: DerivationCandidate,
}

impl Der2Element {
    pub fn new(candidate: DerivationCandidate) -> Result<Self> {
        if candidate.shift != 2 {
            return Err(Error::DimensionMismatch(format!(
                "weight -2 derivation with shift {}",
                candidate.shift
            )));
        }
        if !annihilation_residue(&candidate).is_zero() {
            return Err(Error::InvalidDescriptor(
                "derivation does not annihilate theta".into(),
            ));
        }
        Ok(Der2Element { candidate })
    }

    pub fn candidate(&self) -> &DerivationCandidate {
        &self.candidate
    }

    pub fn genus(&self) -> Genus {
        self.candidate.genus
    }
}

fn decode_monomials(genus: Genus) -> Vec<(Letter, Letter)> {
    BiVector::monomials(genus)
}

/// The equivariant map from the symmetric square of the exterior square to
/// derivation candidates of shift 2.
///
/// On a monomial `(u1 ^ v1)(u2 ^ v2)` the image of a letter `x` is
/// `<u1,x>[v1,[u2,v2]] + <v1,x>[[u2,v2],u1] + <u2,x>[v2,[u1,v1]] +
/// <v2,x>[[u1,v1],u2]`.
pub fn phi(s: &SymSqBiVector) -> DerivationCandidate {
    let genus = s.genus();
    let monomials = decode_monomials(genus);
    // Bracket [u, v] of each wedge monomial, reused across terms.
    let mono_brackets: Vec<LieElement> = monomials
        .iter()
        .map(|&(u, v)| {
            bracket(
                &LieElement::letter(genus, u),
                &LieElement::letter(genus, v),
            )
        })
        .collect();

    let mut d = DerivationCandidate::zero(genus, 2);
    for ((i, j), coeff) in s.terms() {
        let (u1, v1) = monomials[i as usize];
        let (u2, v2) = monomials[j as usize];
        let br1 = &mono_brackets[i as usize];
        let br2 = &mono_brackets[j as usize];
        // (letter paired against x, bracket expression, left-of-bracket?).
        let pieces: [(Letter, &LieElement, Letter, bool); 4] = [
            (u1, br2, v1, true),
            (v1, br2, u1, false),
            (u2, br1, v2, true),
            (v2, br1, u2, false),
        ];
        for (probe, inner, outer, outer_left) in pieces {
            let x = probe.partner();
            let sign = letter_pairing(probe, x);
            debug_assert!(sign != 0);
            let outer_elem = LieElement::letter(genus, outer);
            let term = if outer_left {
                bracket(&outer_elem, inner)
            } else {
                bracket(inner, &outer_elem)
            };
            let factor = coeff * rat_int(sign);
            d.images[x.rank() as usize].add_assign_scaled(&term, &factor);
        }
    }
    d
}

/// The slot contraction of the triple tensor power:
/// `u (x) v (x) w -> <u, v> w`.
pub fn p_h(t: &Tensor) -> HVector {
    assert_eq!(t.degree(), 3, "p_H contracts degree-3 tensors");
    let genus = t.genus();
    let mut out = HVector::zero(genus);
    for (word, coeff) in t.words() {
        let p = letter_pairing(word[0], word[1]);
        if p != 0 {
            out.add_term(word[2], coeff * rat_int(p));
        }
    }
    out
}

/// The contraction of a letter-indexed family of triple tensors into the
/// exterior square: `gamma -> sum_i a_i ^ p_H(gamma(b_i)) - b_i ^
/// p_H(gamma(a_i))`.
pub fn p_lambda2(genus: Genus, gamma: &[Tensor]) -> BiVector {
    assert_eq!(gamma.len(), genus.letters());
    let mut out = BiVector::zero(genus);
    for i in 1..=genus.get() {
        let a = Letter::a(i);
        let b = Letter::b(i);
        for (l, c) in p_h(&gamma[b.rank() as usize]).terms() {
            out.add_wedge(a, l, c.clone());
        }
        for (l, c) in p_h(&gamma[a.rank() as usize]).terms() {
            out.add_wedge(b, l, -c.clone());
        }
    }
    out
}

/// The projection of a shift-2 derivation into the exterior square: embed
/// the letter images into the tensor algebra and contract.
pub fn pi_lambda2(d: &DerivationCandidate) -> BiVector {
    assert_eq!(d.shift(), 2, "projection defined for shift-2 derivations");
    assert!(
        !d.is_reduced(),
        "projection needs free-algebra images, not quotient representatives"
    );
    let tensors: Vec<Tensor> = d.images().iter().map(lie_to_tensor).collect();
    p_lambda2(d.genus(), &tensors)
}

/// Closed form of the composition of [`pi_lambda2`] with [`phi`]:
/// `(u1^v1)(u2^v2) -> 4[<u1,v1> v2^u2 + <v2,u2> u1^v1] + 2[<u1,v2> v1^u2 +
/// <v1,u2> u1^v2 + <u1,u2> v2^v1 + <v2,v1> u1^u2]`.
///
/// Must agree with the two-step route for every input; the dual-path
/// equality is part of the verification suite.
pub fn pi_phi_closed_form(s: &SymSqBiVector) -> BiVector {
    let genus = s.genus();
    let monomials = decode_monomials(genus);
    let mut out = BiVector::zero(genus);
    for ((i, j), coeff) in s.terms() {
        let (u1, v1) = monomials[i as usize];
        let (u2, v2) = monomials[j as usize];
        let mut add = |p: i64, weight: i64, x: Letter, y: Letter| {
            if p != 0 {
                out.add_wedge(x, y, coeff * rat_int(p * weight));
            }
        };
        add(letter_pairing(u1, v1), 4, v2, u2);
        add(letter_pairing(v2, u2), 4, u1, v1);
        add(letter_pairing(u1, v2), 2, v1, u2);
        add(letter_pairing(v1, u2), 2, u1, v2);
        add(letter_pairing(u1, u2), 2, v2, v1);
        add(letter_pairing(v2, v1), 2, u1, u2);
    }
    out
}

/// Multiplication by `theta` after lifting a class of `V` through the
/// pairing-orthogonal section.
pub fn j_theta(v: &VClass) -> SymSqBiVector {
    let genus = v.genus();
    let lifted = project_hat_theta(&v.lift());
    sym_product(&theta(genus), &lifted).expect("same genus")
}

/// The composition `hat-theta . pi_{Lambda^2 H} . phi`. Its image lies in
/// the pairing-orthogonal complement of `theta`.
pub fn pi_hat(s: &SymSqBiVector) -> BiVector {
    project_hat_theta(&pi_lambda2(&phi(s)))
}

/// Splits off the `V`-component through `phi`: the returned vector has
/// vanishing `pi_hat`, so its image under `phi` lies in the complementary
/// irreducible summand of the weight -2 derivation space.
pub fn v_prime_residual(s: &SymSqBiVector) -> SymSqBiVector {
    let genus = s.genus();
    let hat = pi_hat(s);
    let class = project_mod_theta(&hat);
    let correction = j_theta(&class);
    let mut out = s.clone();
    let factor = rat(1, 4 * (genus.get() as i64 + 1));
    out.add_assign_scaled(&correction, &factor);
    out
}

/// Kernel data of the residue map on `Hom(H, p(-1-m)) -> p(-2-m)`.
pub struct DerivationKernel {
    pub genus: Genus,
    pub shift: usize,
    /// Dimension of `Hom(H, p(-1-m))`.
    pub domain_dim: usize,
    /// Dimension of `p(-2-m)`.
    pub target_dim: usize,
    /// Rank of the residue map (surjective when equal to `target_dim`).
    pub residue_rank: usize,
    /// Kernel vectors in domain coordinates `(letter, basis of p(-1-m))`.
    pub kernel: Vec<Vec<Rational>>,
}

impl DerivationKernel {
    pub fn dim(&self) -> usize {
        self.kernel.len()
    }

    /// Rebuilds a kernel vector as a reduced derivation candidate.
    pub fn candidate(&self, index: usize) -> DerivationCandidate {
        let genus = self.genus;
        let image_degree = self.shift + 1;
        let basis_lifts: Vec<LieElement> = PElement::basis(genus, image_degree)
            .iter()
            .map(PElement::lift)
            .collect();
        let per_letter = basis_lifts.len();
        let mut images: Vec<LieElement> = Letter::all(genus)
            .map(|_| LieElement::zero(genus, image_degree))
            .collect();
        for (col, coeff) in self.kernel[index].iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let letter = col / per_letter;
            let beta = col % per_letter;
            images[letter].add_assign_scaled(&basis_lifts[beta], coeff);
        }
        DerivationCandidate::from_images(genus, self.shift, images, true)
    }

    /// Coordinates of a reduced candidate in the domain basis, for span
    /// membership tests.
    pub fn coordinates_of(&self, d: &DerivationCandidate) -> Vec<Rational> {
        assert_eq!(d.shift(), self.shift);
        let per_letter = p_dim(self.genus, self.shift + 1);
        let mut out = vec![Rational::zero(); self.domain_dim];
        for (r, img) in d.images().iter().enumerate() {
            let p = reduce_mod_ideal(img);
            for (pos, c) in p.terms() {
                out[r * per_letter + pos] = c.clone();
            }
        }
        out
    }
}

/// Computes the kernel of the theta-annihilation residue on
/// `Hom(H, p(-1-m))`, with residues reduced into `p(-2-m)`.
pub fn derivation_kernel(genus: Genus, shift: usize) -> DerivationKernel {
    assert!(shift >= 1);
    let image_degree = shift + 1;
    let residue_degree = shift + 2;
    let p_image = PElement::basis(genus, image_degree);
    let per_letter = p_image.len();
    let domain_dim = genus.letters() * per_letter;
    let target_dim = p_dim(genus, residue_degree);
    // Positions of complement coordinates come from the reduction itself.
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
    for (r, x) in Letter::all(genus).enumerate() {
        let partner = LieElement::letter(genus, x.partner());
        for (beta_idx, beta) in p_image.iter().enumerate() {
            let lift = beta.lift();
            // Single-letter candidate x -> lift: only the handle of x
            // contributes to the residue.
            let residue = if x.is_a() {
                bracket(&lift, &partner)
            } else {
                bracket(&partner, &lift)
            };
            let reduced = reduce_mod_ideal(&residue);
            let col = r * per_letter + beta_idx;
            for (pos, c) in reduced.terms() {
                triplets.push((pos, col, c.clone()));
            }
        }
    }
    let matrix = SparseMatrix::from_triplets(target_dim, domain_dim, triplets)
        .expect("residue matrix construction");
    let residue_rank = matrix.rank();
    let kernel = matrix.kernel_basis();
    DerivationKernel {
        genus,
        shift,
        domain_dim,
        target_dim,
        residue_rank,
        kernel,
    }
}

/// Exact basis of the weight -2 derivation space of the quotient: the
/// kernel of the annihilation residue inside `Hom(H, p(-3))`, residues
/// computed in `p(-4)`.
pub fn der2_basis(genus: Genus) -> Vec<Der2Element> {
    let kernel = derivation_kernel(genus, 2);
    (0..kernel.dim())
        .map(|i| {
            Der2Element::new(kernel.candidate(i)).expect("kernel element annihilates theta")
        })
        .collect()
}

// Touch the degree-4 ideal so `der2_basis` timings stay comparable across
// repeated calls in the verification driver.
pub fn warm_tables(genus: Genus, max_degree: usize) {
    for k in 2..=max_degree {
        let _ = ideal_component(genus, k);
    }
}
