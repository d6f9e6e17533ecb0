//! Class matrices of twist values over descriptor families, and the
//! rank/row-space verification of the span of Weierstrass and Collino
//! classes.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat_int, Rational, SparseMatrix};
use crate::monodromy::{tau_tilde, TwistDescriptor, WeierstrassConfig};
use crate::symplectic::{Genus, VClass};
use num::Zero;

/// An ordered, duplicate-free family of twist descriptors over one genus.
#[derive(Clone, Debug)]
pub struct TwistFamily {
    genus: Genus,
    descriptors: Vec<TwistDescriptor>,
}

impl TwistFamily {
    pub fn new(genus: Genus, descriptors: Vec<TwistDescriptor>) -> Result<Self> {
        if descriptors.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for d in &descriptors {
            if d.genus() != genus {
                return Err(Error::GenusMismatch {
                    left: genus.get(),
                    right: d.genus().get(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        for d in &descriptors {
            if !seen.insert(d.id()) {
                return Err(Error::DuplicateDescriptor);
            }
        }
        Ok(TwistFamily { genus, descriptors })
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.descriptors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.descriptors.is_empty()
    }

    pub fn descriptors(&self) -> &[TwistDescriptor] {
        &self.descriptors
    }
}

/// Which standard family to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    /// Consecutive cyclic arcs `A = {r, ..., r+2i}` with `I = {1, ..., i}`.
    Consecutive,
    /// Every odd point subset paired with every handle subset of the
    /// matching size.
    Augmented,
}

impl FamilyKind {
    pub fn parse(s: &str) -> Result<FamilyKind> {
        match s {
            "consecutive" => Ok(FamilyKind::Consecutive),
            "augmented" => Ok(FamilyKind::Augmented),
            other => Err(Error::InvalidDescriptor(format!(
                "unknown family kind '{other}' (expected consecutive|augmented)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Consecutive => "consecutive",
            FamilyKind::Augmented => "augmented",
        }
    }
}

/// The consecutive-arc family: for each side genus `i`, all cyclic windows
/// of `2i+1` points paired with the handle set `{1, ..., i}`.
pub fn canonical_family(genus: Genus) -> TwistFamily {
    let g = genus.get();
    let n = genus.points();
    let mut descriptors = Vec::new();
    for i in 1..g {
        let handles: BTreeSet<usize> = (1..=i).collect();
        for r in 1..=n {
            let points: BTreeSet<usize> = (0..2 * i + 1).map(|t| (r - 1 + t) % n + 1).collect();
            descriptors.push(
                TwistDescriptor::new(genus, i, points, handles.clone())
                    .expect("canonical descriptor is well formed"),
            );
        }
    }
    TwistFamily::new(genus, descriptors).expect("cyclic windows are distinct")
}

/// The widened family: every odd point subset of each size paired with
/// every handle subset of the matching size.
pub fn augmented_family(genus: Genus) -> TwistFamily {
    let g = genus.get();
    let n = genus.points();
    let mut descriptors = Vec::new();
    for i in 1..g {
        for points in (1..=n).combinations(2 * i + 1) {
            for handles in (1..=g).combinations(i) {
                descriptors.push(
                    TwistDescriptor::new(
                        genus,
                        i,
                        points.iter().copied().collect(),
                        handles.iter().copied().collect(),
                    )
                    .expect("augmented descriptor is well formed"),
                );
            }
        }
    }
    TwistFamily::new(genus, descriptors).expect("combinations are distinct")
}

pub fn family(genus: Genus, kind: FamilyKind) -> TwistFamily {
    match kind {
        FamilyKind::Consecutive => canonical_family(genus),
        FamilyKind::Augmented => augmented_family(genus),
    }
}

/// The matrix of projected twist values: rows indexed by Weierstrass
/// points, columns by `(descriptor, canonical V coordinate)` pairs.
pub struct ClassMatrix {
    genus: Genus,
    descriptor_ids: Vec<String>,
    matrix: SparseMatrix,
}

/// Evaluates the projected twist values of the family into a class matrix.
/// Values depend only on the handle set and the side of the base point, so
/// they are cached per handle set.
pub fn class_matrix(family: &TwistFamily) -> Result<ClassMatrix> {
    let genus = family.genus();
    let w = WeierstrassConfig::new(genus);
    let v_dim = genus.v_dim();
    let rows = w.count();
    let cols = family.len() * v_dim;

    let mut cache: HashMap<Vec<usize>, (VClass, VClass)> = HashMap::new();
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
    for (d_idx, d) in family.descriptors().iter().enumerate() {
        let key: Vec<usize> = d.handles().iter().copied().collect();
        if !cache.contains_key(&key) {
            let q_in = *d.points().iter().next().expect("descriptor has points");
            let q_out = w
                .labels()
                .find(|q| !d.contains_point(*q))
                .expect("|A| < 2g+2");
            let value = (tau_tilde(d, q_in)?, tau_tilde(d, q_out)?);
            cache.insert(key.clone(), value);
        }
        let (value_in, value_out) = &cache[&key];
        for q in w.labels() {
            let value = if d.contains_point(q) { value_in } else { value_out };
            for (c_idx, coord) in value.coordinates().into_iter().enumerate() {
                if !coord.is_zero() {
                    triplets.push((q - 1, d_idx * v_dim + c_idx, coord));
                }
            }
        }
    }
    Ok(ClassMatrix {
        genus,
        descriptor_ids: family.descriptors().iter().map(TwistDescriptor::id).collect(),
        matrix: SparseMatrix::from_triplets(rows, cols, triplets)?,
    })
}

impl ClassMatrix {
    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn descriptor_count(&self) -> usize {
        self.descriptor_ids.len()
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn row_vector(&self, q: usize) -> Result<Vec<Rational>> {
        if !WeierstrassConfig::new(self.genus).contains(q) {
            return Err(Error::UnknownPoint(q));
        }
        Ok((0..self.matrix.cols())
            .map(|c| self.matrix.get(q - 1, c))
            .collect())
    }

    /// Whether every column sums to zero over the Weierstrass points — the
    /// generator-level shadow of the single relation among the classes.
    pub fn column_sums_zero(&self) -> bool {
        let mut sums = vec![Rational::zero(); self.matrix.cols()];
        for q in 1..=self.matrix.rows() {
            for (c, s) in sums.iter_mut().enumerate() {
                *s += self.matrix.get(q - 1, c);
            }
        }
        sums.iter().all(Rational::is_zero)
    }

    /// Long-format CSV: one line per entry, exact fractions.
    pub fn to_csv(&self) -> String {
        let v_monomials = VClass::monomials(self.genus);
        let mut out = String::from("point,descriptor,coord,value\n");
        let v_dim = self.genus.v_dim();
        for q in 1..=self.matrix.rows() {
            for (d_idx, id) in self.descriptor_ids.iter().enumerate() {
                for (c_idx, (s, t)) in v_monomials.iter().enumerate() {
                    let value = self.matrix.get(q - 1, d_idx * v_dim + c_idx);
                    let _ = writeln!(out, "{q},{id},{s}^{t},{value}");
                }
            }
        }
        out
    }
}

/// Rank of the full class matrix over all `2g+2` Weierstrass rows. Always
/// at most `2g+1` by the column-sum relation.
pub fn weierstrass_rank(m: &ClassMatrix) -> usize {
    m.matrix.rank()
}

/// Rank of the difference rows `row(q) - row(base)`, `q != base`.
pub fn collino_rank(m: &ClassMatrix, base: usize) -> Result<usize> {
    Ok(collino_matrix(m, base)?.rank())
}

fn collino_matrix(m: &ClassMatrix, base: usize) -> Result<SparseMatrix> {
    let w = WeierstrassConfig::new(m.genus);
    if !w.contains(base) {
        return Err(Error::UnknownPoint(base));
    }
    let base_row = m.row_vector(base)?;
    let cols = m.matrix.cols();
    let mut triplets = Vec::new();
    let mut r = 0;
    for q in w.labels() {
        if q == base {
            continue;
        }
        let row = m.row_vector(q)?;
        for c in 0..cols {
            let v = &row[c] - &base_row[c];
            if !v.is_zero() {
                triplets.push((r, c, v));
            }
        }
        r += 1;
    }
    SparseMatrix::from_triplets(w.count() - 1, cols, triplets)
}

/// Whether the Weierstrass row space and the Collino difference row space
/// coincide, by mutual membership checks.
pub fn row_spaces_equal(m: &ClassMatrix, base: usize) -> Result<bool> {
    let collino = collino_matrix(m, base)?;
    for q in WeierstrassConfig::new(m.genus).labels() {
        if !collino.in_row_space(&m.row_vector(q)?)? {
            return Ok(false);
        }
    }
    for r in 0..collino.rows() {
        let row: Vec<Rational> = (0..collino.cols()).map(|c| collino.get(r, c)).collect();
        if !m.matrix.in_row_space(&row)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The integral-combination identity: for every point `q_i`,
/// `(2g+2) row(q_i) = sum_j (row(q_i) - row(q_j))` exactly.
pub fn remark_check(m: &ClassMatrix) -> bool {
    let w = WeierstrassConfig::new(m.genus);
    let n = w.count() as i64;
    let cols = m.matrix.cols();
    let rows: Vec<Vec<Rational>> = w
        .labels()
        .map(|q| m.row_vector(q).expect("label in range"))
        .collect();
    for row_i in &rows {
        let mut rhs = vec![Rational::zero(); cols];
        for row_j in &rows {
            for c in 0..cols {
                rhs[c] += &row_i[c] - &row_j[c];
            }
        }
        for c in 0..cols {
            if rhs[c] != &row_i[c] * rat_int(n) {
                return false;
            }
        }
    }
    true
}

/// Summary of the span computation over one family.
#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub genus: usize,
    pub family: String,
    pub descriptor_count: usize,
    pub weierstrass_rank: usize,
    pub collino_rank: usize,
    pub base_point: usize,
    pub row_space_equal: bool,
    pub column_sums_zero: bool,
    pub remark_holds: bool,
    /// The structural upper bound `2g+1`.
    pub rank_bound: usize,
    pub bound_met: bool,
}

/// Runs the full span verification for one family kind. The base point
/// for the difference classes defaults to the last Weierstrass point.
pub fn span_report(genus: Genus, kind: FamilyKind) -> Result<SpanReport> {
    let fam = family(genus, kind);
    let m = class_matrix(&fam)?;
    let base = genus.points();
    let w_rank = weierstrass_rank(&m);
    let c_rank = collino_rank(&m, base)?;
    let bound = 2 * genus.get() + 1;
    Ok(SpanReport {
        genus: genus.get(),
        family: kind.name().to_string(),
        descriptor_count: fam.len(),
        weierstrass_rank: w_rank,
        collino_rank: c_rank,
        base_point: base,
        row_space_equal: row_spaces_equal(&m, base)?,
        column_sums_zero: m.column_sums_zero(),
        remark_holds: remark_check(&m),
        rank_bound: bound,
        bound_met: w_rank == bound && c_rank == bound,
    })
}
