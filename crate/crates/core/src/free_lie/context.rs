//! Per-genus caches of basis and ideal tables. Tables are computed once and
//! shared read-only afterwards, so all public operations stay pure.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use super::ideal::IdealComponent;
use super::lyndon::DegreeTable;
use crate::symplectic::Genus;

pub(crate) struct LieCtx {
    pub genus: Genus,
    degrees: Mutex<BTreeMap<usize, Arc<DegreeTable>>>,
    ideals: Mutex<BTreeMap<usize, Arc<IdealComponent>>>,
}

static CONTEXTS: Lazy<Mutex<HashMap<usize, Arc<LieCtx>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub(crate) fn context(genus: Genus) -> Arc<LieCtx> {
    let mut map = CONTEXTS.lock().expect("context cache poisoned");
    map.entry(genus.get())
        .or_insert_with(|| {
            Arc::new(LieCtx {
                genus,
                degrees: Mutex::new(BTreeMap::new()),
                ideals: Mutex::new(BTreeMap::new()),
            })
        })
        .clone()
}

impl LieCtx {
    /// The degree-`k` basis table, building all lower degrees as needed.
    pub fn degree(&self, k: usize) -> Arc<DegreeTable> {
        assert!(k >= 1, "degree must be positive");
        let mut tables = self.degrees.lock().expect("degree cache poisoned");
        if let Some(t) = tables.get(&k) {
            return t.clone();
        }
        for d in 1..=k {
            if tables.contains_key(&d) {
                continue;
            }
            let lower: Vec<Arc<DegreeTable>> =
                (1..d).map(|j| tables[&j].clone()).collect();
            let lower_refs: Vec<&DegreeTable> = lower.iter().map(Arc::as_ref).collect();
            let table = DegreeTable::build(self.genus.letters(), d, &lower_refs);
            tables.insert(d, Arc::new(table));
        }
        tables[&k].clone()
    }

    /// The degree-`k` component of the ideal generated by `theta`,
    /// `k >= 2`; built recursively from `J_2`.
    pub fn ideal(self: &Arc<Self>, k: usize) -> Arc<IdealComponent> {
        assert!(k >= 2, "the ideal starts in degree 2");
        {
            let ideals = self.ideals.lock().expect("ideal cache poisoned");
            if let Some(i) = ideals.get(&k) {
                return i.clone();
            }
        }
        // Build outside the lock: construction brackets through this
        // context and must not deadlock.
        let component = if k == 2 {
            IdealComponent::generator(self)
        } else {
            let prev = self.ideal(k - 1);
            IdealComponent::extend(self, &prev)
        };
        let mut ideals = self.ideals.lock().expect("ideal cache poisoned");
        ideals
            .entry(k)
            .or_insert_with(|| Arc::new(component))
            .clone()
    }
}
