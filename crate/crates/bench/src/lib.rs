//! Input builders shared by the criterion benchmarks.

use hypjohnson_core::symplectic::{sym_product, theta_subset, Genus, SymSqBiVector};
use hypjohnson_core::TwistDescriptor;

pub fn genus(g: usize) -> Genus {
    Genus::new(g).expect("benchmark genus")
}

/// The square of a restricted form, the shape every twist value feeds to
/// the derivation map.
pub fn handle_square(g: Genus, handles: &[usize]) -> SymSqBiVector {
    let t = theta_subset(g, &handles.iter().copied().collect()).expect("valid handles");
    sym_product(&t, &t).expect("same genus")
}

/// The descriptor used as the standard benchmark input.
pub fn standard_descriptor(g: Genus) -> TwistDescriptor {
    let i = 1;
    TwistDescriptor::new(g, i, [1, 2, 3].into(), [1].into()).expect("valid descriptor")
}
