//! Symmetric separating curve descriptors, the twist values of the
//! hyperelliptic Johnson homomorphisms, the Collino monodromy, and the
//! identities tying them together.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::derivations::{phi, pi_lambda2, v_prime_residual, Der2Element};
use crate::error::{Error, Result};
use crate::free_lie::reduce_mod_ideal;
use crate::linalg::{rat, rat_int};
use crate::symplectic::{
    project_mod_theta, sym_product, theta, theta_subset, BiVector, Genus, Letter,
    VClass,
};

/// The labeled Weierstrass point set `W = {1, ..., 2g+2}`.
#[derive(Clone, Copy, Debug)]
pub struct WeierstrassConfig {
    genus: Genus,
}

impl WeierstrassConfig {
    pub fn new(genus: Genus) -> Self {
        WeierstrassConfig { genus }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn count(&self) -> usize {
        self.genus.points()
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> {
        1..=self.count()
    }

    pub fn contains(&self, q: usize) -> bool {
        q >= 1 && q <= self.count()
    }
}

/// A formal model of a symmetric separating curve: side genus `i`, an odd
/// point subset `A` with `|A| = 2i+1` on the genus-`i` side, and the handle
/// subset `I` with `|I| = i` carried by that side.
///
/// A symmetric separating curve double-covers an arc in the quotient
/// sphere; the genus-`i` side is branched over an odd number `2i+1` of
/// points, which is why the odd size is a typed invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistDescriptor {
    genus: Genus,
    side_genus: usize,
    points: BTreeSet<usize>,
    handles: BTreeSet<usize>,
}

impl TwistDescriptor {
    pub fn new(
        genus: Genus,
        side_genus: usize,
        points: BTreeSet<usize>,
        handles: BTreeSet<usize>,
    ) -> Result<Self> {
        let g = genus.get();
        if side_genus < 1 || side_genus > g - 1 {
            return Err(Error::InvalidDescriptor(format!(
                "side genus must satisfy 1 <= i <= g-1, got i={side_genus} at g={g}"
            )));
        }
        if points.len() != 2 * side_genus + 1 {
            return Err(Error::InvalidDescriptor(format!(
                "|A| must be 2i+1 = {}, got {}",
                2 * side_genus + 1,
                points.len()
            )));
        }
        if let Some(&p) = points.iter().find(|&&p| p < 1 || p > genus.points()) {
            return Err(Error::UnknownPoint(p));
        }
        if handles.len() != side_genus {
            return Err(Error::InvalidDescriptor(format!(
                "|I| must be i = {side_genus}, got {}",
                handles.len()
            )));
        }
        if let Some(&h) = handles.iter().find(|&&h| h < 1 || h > g) {
            return Err(Error::IndexOutOfRange(format!("handle {h} outside 1..={g}")));
        }
        Ok(TwistDescriptor {
            genus,
            side_genus,
            points,
            handles,
        })
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn side_genus(&self) -> usize {
        self.side_genus
    }

    pub fn points(&self) -> &BTreeSet<usize> {
        &self.points
    }

    pub fn handles(&self) -> &BTreeSet<usize> {
        &self.handles
    }

    pub fn contains_point(&self, q: usize) -> bool {
        self.points.contains(&q)
    }

    pub fn complement_handles(&self) -> BTreeSet<usize> {
        (1..=self.genus.get())
            .filter(|h| !self.handles.contains(h))
            .collect()
    }

    /// `theta' = theta_I`, the form of the `A` side.
    pub fn theta_prime(&self) -> BiVector {
        theta_subset(self.genus, &self.handles).expect("validated handles")
    }

    /// `theta'' = theta_{I^c}`, the form of the opposite side.
    pub fn theta_double_prime(&self) -> BiVector {
        theta_subset(self.genus, &self.complement_handles()).expect("validated handles")
    }

    /// Compact identifier used in CSV columns and reports.
    pub fn id(&self) -> String {
        let mut out = format!("i{}", self.side_genus);
        out.push_str("_A");
        for (k, p) in self.points.iter().enumerate() {
            if k > 0 {
                out.push('-');
            }
            let _ = write!(out, "{p}");
        }
        out.push_str("_I");
        for (k, h) in self.handles.iter().enumerate() {
            if k > 0 {
                out.push('-');
            }
            let _ = write!(out, "{h}");
        }
        out
    }
}

/// A monodromy value: a class in `V`, always in canonical form.
pub type MonodromyValue = VClass;

fn check_point(genus: Genus, q: usize) -> Result<()> {
    if q < 1 || q > genus.points() {
        return Err(Error::UnknownPoint(q));
    }
    Ok(())
}

fn half_phi_square(side: &BiVector) -> Der2Element {
    let sq = sym_product(side, side).expect("same genus");
    let candidate = phi(&sq).scaled(&rat(1, 2));
    Der2Element::new(candidate).expect("phi images annihilate theta")
}

/// The twist value of the hyperelliptic Johnson homomorphism based at `q`
/// on the twist described by `d`.
///
/// For `q` on the `A` side the value is `phi((theta'')^2)/2`; for `q` on
/// the opposite side it is `phi((theta')^2)/2`. The opposite-side rule is
/// forced by the combination `zeta_D = phi((theta')^2 - (theta'')^2)/2`
/// representing the based difference.
pub fn tau_hyp(d: &TwistDescriptor, q: usize) -> Result<Der2Element> {
    check_point(d.genus, q)?;
    let side = if d.contains_point(q) {
        d.theta_double_prime()
    } else {
        d.theta_prime()
    };
    Ok(half_phi_square(&side))
}

/// The `V`-projected twist value: the class of the exterior-square
/// contraction of [`tau_hyp`].
pub fn tau_tilde(d: &TwistDescriptor, q: usize) -> Result<MonodromyValue> {
    let value = tau_hyp(d, q)?;
    Ok(project_mod_theta(&pi_lambda2(value.candidate())))
}

/// The derivation `zeta_D = phi((theta')^2 - (theta'')^2)/2` representing
/// the difference of twist values across the curve.
pub fn zeta_derivation(d: &TwistDescriptor) -> Der2Element {
    let tp = d.theta_prime();
    let tpp = d.theta_double_prime();
    let s = sym_product(&tp, &tp)
        .expect("same genus")
        .sub(&sym_product(&tpp, &tpp).expect("same genus"));
    Der2Element::new(phi(&s.scaled(&rat(1, 2)))).expect("phi images annihilate theta")
}

/// The Collino monodromy of the twist: zero when `q1` and `q2` lie on the
/// same side of the curve, and `4 theta(side of q2) mod theta` when the
/// curve separates them. Swapping the points negates the value modulo
/// `theta`.
pub fn pi_z(d: &TwistDescriptor, q1: usize, q2: usize) -> Result<MonodromyValue> {
    check_point(d.genus, q1)?;
    check_point(d.genus, q2)?;
    if q1 == q2 {
        return Err(Error::SamePoint);
    }
    if d.contains_point(q1) == d.contains_point(q2) {
        return Ok(VClass::zero(d.genus));
    }
    let side_of_q2 = if d.contains_point(q2) {
        d.theta_prime()
    } else {
        d.theta_double_prime()
    };
    Ok(project_mod_theta(&side_of_q2.scaled(&rat_int(4))))
}

/// The extension-class monodromy: `(2g+1)` times [`pi_z`].
pub fn pi_e(d: &TwistDescriptor, q1: usize, q2: usize) -> Result<MonodromyValue> {
    let z = pi_z(d, q1, q2)?;
    Ok(z.scaled(&rat_int(2 * d.genus.get() as i64 + 1)))
}

/// One checked instance of the twist-difference identity.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremAEntry {
    pub descriptor: String,
    pub q1: usize,
    pub q2: usize,
    pub separated: bool,
    pub holds: bool,
}

/// Report of the identity `tau_tilde(q2) - tau_tilde(q1) = (g+1) pi_Z`
/// over a family of descriptors and all ordered point pairs.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremAReport {
    pub genus: usize,
    pub checked: usize,
    pub failures: usize,
    pub entries: Vec<TheoremAEntry>,
}

impl TheoremAReport {
    pub fn all_hold(&self) -> bool {
        self.failures == 0
    }
}

pub fn verify_theorem_a(genus: Genus, family: &[TwistDescriptor]) -> Result<TheoremAReport> {
    let w = WeierstrassConfig::new(genus);
    let mut entries = Vec::new();
    let mut failures = 0;
    for d in family {
        // The twist value depends only on the side of the base point.
        let q_in = *d.points().iter().next().expect("descriptor has points");
        let q_out = w
            .labels()
            .find(|q| !d.contains_point(*q))
            .expect("|A| < 2g+2");
        let value_in = tau_tilde(d, q_in)?;
        let value_out = tau_tilde(d, q_out)?;
        for q1 in w.labels() {
            for q2 in w.labels() {
                if q1 == q2 {
                    continue;
                }
                let t1 = if d.contains_point(q1) { &value_in } else { &value_out };
                let t2 = if d.contains_point(q2) { &value_in } else { &value_out };
                let lhs = t2.sub(t1);
                let rhs = pi_z(d, q1, q2)?.scaled(&rat_int(genus.get() as i64 + 1));
                let holds = lhs == rhs;
                if !holds {
                    failures += 1;
                }
                entries.push(TheoremAEntry {
                    descriptor: d.id(),
                    q1,
                    q2,
                    separated: d.contains_point(q1) != d.contains_point(q2),
                    holds,
                });
            }
        }
    }
    Ok(TheoremAReport {
        genus: genus.get(),
        checked: entries.len(),
        failures,
        entries,
    })
}

/// Report of the chain showing that twist-value differences land in `V`.
#[derive(Clone, Debug, Serialize)]
pub struct KeyLemmaReport {
    pub descriptor: String,
    /// `theta'^2/2 - theta''^2/2 + theta'' theta = theta^2/2` exactly.
    pub symmetric_identity: bool,
    /// Every letter image of `phi(theta^2)` reduces to zero in the quotient.
    pub theta_square_trivial: bool,
    /// `pi_hat` of the V-corrected preimage of `zeta_D` vanishes.
    pub residual_orthogonal: bool,
    /// The corrected preimage equals `(1/2 - (g-i)/g) theta^2` on the nose.
    pub residual_matches_theta_square: bool,
}

impl KeyLemmaReport {
    pub fn all_hold(&self) -> bool {
        self.symmetric_identity
            && self.theta_square_trivial
            && self.residual_orthogonal
            && self.residual_matches_theta_square
    }
}

pub fn key_lemma_check(d: &TwistDescriptor) -> KeyLemmaReport {
    let genus = d.genus;
    let g = genus.get() as i64;
    let t = theta(genus);
    let tp = d.theta_prime();
    let tpp = d.theta_double_prime();
    let theta_sq = sym_product(&t, &t).expect("same genus");

    // (a) The symmetric-square identity.
    let mut lhs = sym_product(&tp, &tp).expect("same genus").scaled(&rat(1, 2));
    lhs.add_assign_scaled(&sym_product(&tpp, &tpp).expect("same genus"), &rat(-1, 2));
    lhs.add_assign_scaled(&sym_product(&tpp, &t).expect("same genus"), &rat_int(1));
    let symmetric_identity = lhs == theta_sq.scaled(&rat(1, 2));

    // (b) phi(theta^2) acts trivially on the quotient.
    let d_theta = phi(&theta_sq);
    let theta_square_trivial = Letter::all(genus)
        .all(|l| reduce_mod_ideal(d_theta.image(l)).is_zero());

    // (c) The V-corrected preimage of zeta_D.
    let mut s = sym_product(&tp, &tp).expect("same genus").scaled(&rat(1, 2));
    s.add_assign_scaled(&sym_product(&tpp, &tpp).expect("same genus"), &rat(-1, 2));
    let residual = v_prime_residual(&s);
    let residual_orthogonal = crate::derivations::pi_hat(&residual).is_zero();
    let i = d.side_genus as i64;
    let expected = theta_sq.scaled(&(rat(1, 2) - rat(g - i, g)));
    let residual_matches_theta_square = residual == expected;

    KeyLemmaReport {
        descriptor: d.id(),
        symmetric_identity,
        theta_square_trivial,
        residual_orthogonal,
        residual_matches_theta_square,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::annihilation_residue;
    use crate::symplectic::Letter;

    fn g2() -> Genus {
        Genus::new(2).unwrap()
    }

    fn descriptor_123(g: Genus) -> TwistDescriptor {
        TwistDescriptor::new(g, 1, [1, 2, 3].into(), [1].into()).unwrap()
    }

    #[test]
    fn descriptor_validation() {
        let g = g2();
        assert!(TwistDescriptor::new(g, 0, [].into(), [].into()).is_err());
        assert!(TwistDescriptor::new(g, 2, [1, 2, 3, 4, 5].into(), [1, 2].into()).is_err());
        let err = TwistDescriptor::new(g, 1, [1, 2].into(), [1].into()).unwrap_err();
        assert!(err.to_string().contains("|A| must be 2i+1"));
        assert!(TwistDescriptor::new(g, 1, [1, 2, 9].into(), [1].into()).is_err());
        assert!(TwistDescriptor::new(g, 1, [1, 2, 3].into(), [1, 2].into()).is_err());
        assert!(descriptor_123(g).id().starts_with("i1_A1-2-3"));
    }

    #[test]
    fn tau_hyp_sides() {
        let g = g2();
        let d = descriptor_123(g);
        // q on the A side reads theta'' = a2^b2.
        let expected = half_phi_square(&d.theta_double_prime());
        assert_eq!(tau_hyp(&d, 1).unwrap(), expected);
        // q on the opposite side reads theta' = a1^b1.
        let expected = half_phi_square(&d.theta_prime());
        assert_eq!(tau_hyp(&d, 4).unwrap(), expected);
        assert!(tau_hyp(&d, 7).is_err());
        // Twist values annihilate theta in the free algebra.
        let v = tau_hyp(&d, 1).unwrap();
        assert!(annihilation_residue(v.candidate()).is_zero());
    }

    #[test]
    fn tau_tilde_canonical_values() {
        let g = g2();
        let d = descriptor_123(g);
        // 6 a1^b1 for q in A; -6 a1^b1 outside.
        let six_ab = project_mod_theta(
            &BiVector::wedge(g, Letter::a(1), Letter::b(1)).scaled(&rat_int(6)),
        );
        assert_eq!(tau_tilde(&d, 1).unwrap(), six_ab);
        assert_eq!(tau_tilde(&d, 4).unwrap(), six_ab.scaled(&rat_int(-1)));
    }

    #[test]
    fn tau_tilde_depends_only_on_the_side() {
        let g = g2();
        let d = descriptor_123(g);
        let inside = tau_tilde(&d, 1).unwrap();
        for q in 2..=3 {
            assert_eq!(tau_tilde(&d, q).unwrap(), inside);
        }
        let outside = tau_tilde(&d, 4).unwrap();
        for q in 5..=6 {
            assert_eq!(tau_tilde(&d, q).unwrap(), outside);
        }
        assert_ne!(inside, outside);
    }

    #[test]
    fn tau_tilde_sums_to_zero_over_points() {
        for g in 2..=3 {
            let genus = Genus::new(g).unwrap();
            let d = if g == 2 {
                descriptor_123(genus)
            } else {
                TwistDescriptor::new(genus, 2, [2, 3, 4, 5, 6].into(), [1, 3].into()).unwrap()
            };
            let mut sum = VClass::zero(genus);
            for q in WeierstrassConfig::new(genus).labels() {
                sum.add_assign_scaled(&tau_tilde(&d, q).unwrap(), &rat_int(1));
            }
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn pi_z_values() {
        let g = g2();
        let d = descriptor_123(g);
        // Separating pair: 4 theta'' = 4 a2^b2 = -4 a1^b1 canonical.
        let expected = project_mod_theta(
            &BiVector::wedge(g, Letter::a(2), Letter::b(2)).scaled(&rat_int(4)),
        );
        assert_eq!(pi_z(&d, 1, 4).unwrap(), expected);
        assert!(pi_z(&d, 1, 2).unwrap().is_zero());
        // Swap reads theta' = a1^b1.
        let swapped = project_mod_theta(
            &BiVector::wedge(g, Letter::a(1), Letter::b(1)).scaled(&rat_int(4)),
        );
        assert_eq!(pi_z(&d, 4, 1).unwrap(), swapped);
        // Antisymmetry modulo theta.
        let mut sum = pi_z(&d, 1, 4).unwrap();
        sum.add_assign_scaled(&pi_z(&d, 4, 1).unwrap(), &rat_int(1));
        assert!(sum.is_zero());
        assert!(pi_z(&d, 1, 1).is_err());
    }

    #[test]
    fn pi_e_is_2g_plus_1_multiple() {
        let g = g2();
        let d = descriptor_123(g);
        let z = pi_z(&d, 1, 4).unwrap();
        assert_eq!(pi_e(&d, 1, 4).unwrap(), z.scaled(&rat_int(5)));
        assert!(pi_e(&d, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn theorem_a_genus_2() {
        let g = g2();
        let d = descriptor_123(g);
        let report = verify_theorem_a(g, &[d.clone()]).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.checked, 30);
        // The headline difference: -12 a1^b1 = 3 * (-4 a1^b1).
        let diff = tau_tilde(&d, 4).unwrap().sub(&tau_tilde(&d, 1).unwrap());
        assert_eq!(
            diff,
            project_mod_theta(
                &BiVector::wedge(g, Letter::a(1), Letter::b(1)).scaled(&rat_int(-12))
            )
        );
    }

    #[test]
    fn zeta_projection_value() {
        let g = g2();
        let d = descriptor_123(g);
        let zeta = zeta_derivation(&d);
        let projected = project_mod_theta(&pi_lambda2(zeta.candidate()));
        let expected = project_mod_theta(&d.theta_double_prime().scaled(&rat_int(2 * 6)));
        assert_eq!(projected, expected);
    }

    #[test]
    fn key_lemma_genus_2() {
        let g = g2();
        for d in [
            descriptor_123(g),
            TwistDescriptor::new(g, 1, [2, 4, 6].into(), [2].into()).unwrap(),
        ] {
            let report = key_lemma_check(&d);
            assert!(report.all_hold(), "{report:?}");
        }
    }
}
