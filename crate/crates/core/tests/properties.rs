//! Property tests for the algebraic invariants that hold on every input,
//! not just on the worked examples.

use proptest::prelude::*;

use hypjohnson_core::free_lie::{basis_element, bracket, lie_to_tensor, lyndon_basis, LieElement};
use hypjohnson_core::linalg::{rat, rat_int, Rational, SparseMatrix};
use hypjohnson_core::symplectic::{
    pairing, project_hat_theta, project_mod_theta, BiVector, Genus, HVector, Letter,
};
use num::Zero;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn small_matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(small_rational(), rows * cols).prop_map(move |entries| {
            SparseMatrix::from_rows(
                entries
                    .chunks(cols)
                    .map(|chunk| chunk.to_vec())
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        })
    })
}

fn hvector(genus: Genus) -> impl Strategy<Value = HVector> {
    proptest::collection::vec(small_rational(), genus.letters()).prop_map(move |coords| {
        let mut v = HVector::zero(genus);
        for (r, c) in coords.into_iter().enumerate() {
            v.add_term(Letter::from_rank(r as u8), c);
        }
        v
    })
}

fn bivector(genus: Genus) -> impl Strategy<Value = BiVector> {
    proptest::collection::vec(small_rational(), genus.wedge_dim()).prop_map(move |coords| {
        let mut v = BiVector::zero(genus);
        for ((s, t), c) in BiVector::monomials(genus).into_iter().zip(coords) {
            v.add_wedge(s, t, c);
        }
        v
    })
}

fn lie_element(genus: Genus, degree: usize) -> impl Strategy<Value = LieElement> {
    let dim = lyndon_basis(degree, genus).len();
    proptest::collection::vec(-4i64..=4, dim).prop_map(move |coords| {
        let mut out = LieElement::zero(genus, degree);
        for (idx, c) in coords.into_iter().enumerate() {
            if c != 0 {
                out.add_assign_scaled(&basis_element(genus, degree, idx), &rat_int(c));
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity_is_cols(m in small_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn kernel_vectors_are_exact(m in small_matrix()) {
        for v in m.kernel_basis() {
            let image = m.mul_vector(&v).unwrap();
            prop_assert!(image.iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn rank_invariant_under_scaling_and_permutation(m in small_matrix(), factor in 1i64..=5) {
        let rows: Vec<Vec<Rational>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
            .collect();
        let mut scaled: Vec<Vec<Rational>> = rows
            .iter()
            .map(|row| row.iter().map(|x| x * rat_int(factor)).collect())
            .collect();
        scaled.reverse();
        let permuted = SparseMatrix::from_rows(scaled).unwrap();
        prop_assert_eq!(m.rank(), permuted.rank());
    }

    #[test]
    fn pairing_is_antisymmetric_and_bilinear(
        u in hvector(Genus::new(2).unwrap()),
        v in hvector(Genus::new(2).unwrap()),
        w in hvector(Genus::new(2).unwrap()),
        c in small_rational(),
    ) {
        let g = Genus::new(2).unwrap();
        let uv = pairing(&u, &v).unwrap();
        let vu = pairing(&v, &u).unwrap();
        prop_assert_eq!(&uv, &(-vu));
        // <u + c w, v> = <u, v> + c <w, v>.
        let mut ucw = u.clone();
        for (l, x) in w.terms() {
            ucw.add_term(l, x * &c);
        }
        let lhs = pairing(&ucw, &v).unwrap();
        let rhs = uv + pairing(&w, &v).unwrap() * &c;
        prop_assert_eq!(lhs, rhs);
        let _ = g;
    }

    #[test]
    fn hat_projection_properties(x in bivector(Genus::new(3).unwrap())) {
        let hat = project_hat_theta(&x);
        // Same class, contraction-free, idempotent, difference in <theta>.
        prop_assert_eq!(project_mod_theta(&hat), project_mod_theta(&x));
        prop_assert!(hat.contraction().is_zero());
        prop_assert_eq!(project_hat_theta(&hat), hat.clone());
        prop_assert!(project_mod_theta(&x.sub(&hat)).is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric(
        x in lie_element(Genus::new(2).unwrap(), 2),
        y in lie_element(Genus::new(2).unwrap(), 2),
    ) {
        let xy = bracket(&x, &y);
        let yx = bracket(&y, &x);
        prop_assert_eq!(xy, yx.scaled(&rat_int(-1)));
    }

    #[test]
    fn bracket_tensor_expansion_is_commutator(
        x in lie_element(Genus::new(2).unwrap(), 1),
        y in lie_element(Genus::new(2).unwrap(), 2),
    ) {
        // lie_to_tensor([x, y]) = x (x) y - y (x) x in the tensor algebra.
        let lhs = lie_to_tensor(&bracket(&x, &y));
        let tx = lie_to_tensor(&x);
        let ty = lie_to_tensor(&y);
        let mut rhs = tx.tensor_product(&ty);
        rhs.add_assign_scaled(&ty.tensor_product(&tx), &rat_int(-1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_holds_on_random_elements(
        x in lie_element(Genus::new(2).unwrap(), 1),
        y in lie_element(Genus::new(2).unwrap(), 1),
        z in lie_element(Genus::new(2).unwrap(), 2),
    ) {
        let mut total = bracket(&x, &bracket(&y, &z));
        total.add_assign_scaled(&bracket(&y, &bracket(&z, &x)), &rat_int(1));
        total.add_assign_scaled(&bracket(&z, &bracket(&x, &y)), &rat_int(1));
        prop_assert!(total.is_zero());
    }
}
