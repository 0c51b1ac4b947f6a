use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::classes::{ClassId, ClassLattice};
use crate::error::{Error, Result};

/// Handle to a registered symbol; ordering follows insertion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub u32);

#[derive(Clone, Debug)]
struct Entry {
    name: String,
    classes: Vec<ClassId>,
}

/// Append-only table of named symbols carrying unit-class tags.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    lattice: ClassLattice,
    entries: Vec<Entry>,
    index: BTreeMap<String, SymbolId>,
}

impl SymbolTable {
    pub fn new(lattice: ClassLattice) -> Self {
        SymbolTable {
            lattice,
            entries: Vec::new(),
            index: BTreeMap::new(),
        }
    }

    pub fn lattice(&self) -> &ClassLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn register(&mut self, name: &str, classes: &[ClassId]) -> Result<SymbolId> {
        if self.index.contains_key(name) {
            return Err(Error::Symbol(alloc::format!("duplicate symbol {name}")));
        }
        if let Some(c) = classes.iter().find(|c| c.0 as usize >= self.lattice.len()) {
            return Err(Error::Symbol(alloc::format!("unknown class {}", c.0)));
        }
        let id = SymbolId(self.entries.len() as u32);
        self.entries.push(Entry {
            name: name.to_string(),
            classes: classes.to_vec(),
        });
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn get(&self, name: &str) -> Option<SymbolId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.entries[id.0 as usize].name
    }

    pub fn classes(&self, id: SymbolId) -> &[ClassId] {
        &self.entries[id.0 as usize].classes
    }

    pub fn contains(&self, id: SymbolId) -> bool {
        (id.0 as usize) < self.entries.len()
    }

    /// True when some tag of `id` lies below `ctx` in the lattice.
    pub fn is_unit(&self, id: SymbolId, ctx: ClassId) -> bool {
        self.classes(id)
            .iter()
            .any(|&c| self.lattice.is_unit_in(c, ctx))
    }
}
