//! Graded components of the ideal generated by `theta` inside the free Lie
//! algebra, with the fixed complement used to represent the quotient.

use std::sync::Arc;

use num::Zero;

use super::context::LieCtx;
use super::{bracket, theta_lie, LieElement};
use crate::linalg::{rref, Rational, Rref};
use crate::symplectic::{Genus, Letter};

/// The degree-`k` piece `J_k` of the ideal generated by `theta`, stored as
/// a reduced row echelon basis over the Lyndon coordinates of that degree.
/// The non-pivot coordinates form the fixed complement realizing the
/// quotient `p(-k)`.
pub struct IdealComponent {
    genus: Genus,
    degree: usize,
    reduced: Rref,
    free_cols: Vec<usize>,
}

impl IdealComponent {
    /// `J_2`: the line spanned by `theta` itself.
    pub(crate) fn generator(ctx: &Arc<LieCtx>) -> IdealComponent {
        let t = theta_lie(ctx.genus);
        IdealComponent::from_spanning(ctx, 2, vec![t])
    }

    /// `J_{k+1} = [J_k, L_1]`: valid because the free Lie algebra is
    /// generated in degree 1.
    pub(crate) fn extend(ctx: &Arc<LieCtx>, prev: &IdealComponent) -> IdealComponent {
        let degree = prev.degree + 1;
        let mut spanning = Vec::new();
        for j in prev.basis() {
            for letter in Letter::all(ctx.genus) {
                let l = LieElement::letter(ctx.genus, letter);
                spanning.push(bracket(&j, &l));
            }
        }
        IdealComponent::from_spanning(ctx, degree, spanning)
    }

    fn from_spanning(
        ctx: &Arc<LieCtx>,
        degree: usize,
        spanning: Vec<LieElement>,
    ) -> IdealComponent {
        let cols = ctx.degree(degree).dim();
        let rows: Vec<Vec<(usize, Rational)>> = spanning
            .into_iter()
            .map(|e| e.coords.into_iter().collect())
            .collect();
        let reduced = rref(rows, cols);
        let free_cols = reduced.free_cols();
        IdealComponent {
            genus: ctx.genus,
            degree,
            reduced,
            free_cols,
        }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.reduced.rank()
    }

    /// The echelon basis of `J_k` as Lie elements (linearly independent).
    pub fn basis(&self) -> Vec<LieElement> {
        self.reduced
            .rows
            .iter()
            .map(|row| LieElement {
                genus: self.genus,
                degree: self.degree,
                coords: row.iter().cloned().collect(),
            })
            .collect()
    }

    /// Positions of the complement coordinates inside the Lyndon basis.
    pub(crate) fn free_cols(&self) -> &[usize] {
        &self.free_cols
    }

    /// Canonical representative of `x` modulo `J_k`: the pivot coordinates
    /// are eliminated, leaving a vector supported on the complement.
    pub(crate) fn reduce(&self, x: &LieElement) -> LieElement {
        let row: Vec<(usize, Rational)> = x.coords.iter().map(|(&c, v)| (c, v.clone())).collect();
        let reduced = self.reduced.reduce_vector(&row);
        LieElement {
            genus: self.genus,
            degree: self.degree,
            coords: reduced.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn contains(&self, x: &LieElement) -> bool {
        self.reduce(x).is_zero()
    }
}
