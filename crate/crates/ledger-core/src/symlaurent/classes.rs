use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Index of a unit-class label inside a [`ClassLattice`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(pub u16);

impl ClassId {
    /// ℚ: nonzero rationals are units everywhere.
    pub const RATIONAL: ClassId = ClassId(0);
    /// E ⊗ K, through a fixed embedding σ.
    pub const E_TENSOR_K: ClassId = ClassId(1);
    /// E ⊗ K′ with K′ the Galois closure of K.
    pub const K_GALOIS: ClassId = ClassId(2);
    /// E(π) ⊗ L′ with L′ the Galois closure of L.
    pub const L_GALOIS: ClassId = ClassId(3);
    /// E(ψ)E, without L′.
    pub const E_PSI_E: ClassId = ClassId(4);
    /// E(ψ)EL′.
    pub const E_PSI_E_LGAL: ClassId = ClassId(5);
    /// Home of D_K^{1/2}; contained in nothing unless configured.
    pub const DISC_K: ClassId = ClassId(6);
    /// Never a unit in any context.
    pub const TRANSCENDENTAL: ClassId = ClassId(7);
}

/// Partially ordered set of unit classes. An edge `a -> b` means every unit of
/// class `a` is also a unit in context `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLattice {
    labels: Vec<String>,
    up: Vec<Vec<u16>>,
}

impl Default for ClassLattice {
    fn default() -> Self {
        Self::standard()
    }
}

impl ClassLattice {
    /// The configuration used throughout the crate. D_K^{1/2} is kept as a
    /// tracked atom: `DISC_K` sits below no context.
    pub fn standard() -> Self {
        let labels = [
            "RATIONAL",
            "E_TENSOR_K",
            "K_GALOIS",
            "L_GALOIS",
            "E_PSI_E",
            "E_PSI_E_LGAL",
            "DISC_K",
            "TRANSCENDENTAL",
        ];
        let mut lat = ClassLattice {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            up: vec![Vec::new(); labels.len()],
        };
        for (a, b) in [
            (ClassId::RATIONAL, ClassId::E_TENSOR_K),
            (ClassId::E_TENSOR_K, ClassId::K_GALOIS),
            (ClassId::K_GALOIS, ClassId::L_GALOIS),
            (ClassId::L_GALOIS, ClassId::E_PSI_E_LGAL),
            (ClassId::RATIONAL, ClassId::E_PSI_E),
            (ClassId::E_PSI_E, ClassId::E_PSI_E_LGAL),
        ] {
            lat.add_containment(a, b)
                .expect("standard lattice is acyclic");
        }
        lat
    }

    /// Standard lattice plus `DISC_K -> K_GALOIS`, i.e. D_K^{1/2} treated as an
    /// element of the Galois closure.
    pub fn with_discriminant_absorbed() -> Self {
        let mut lat = Self::standard();
        lat.add_containment(ClassId::DISC_K, ClassId::K_GALOIS)
            .expect("acyclic");
        lat
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, c: ClassId) -> &str {
        &self.labels[c.0 as usize]
    }

    pub fn find(&self, name: &str) -> Option<ClassId> {
        self.labels
            .iter()
            .position(|l| l == name)
            .map(|i| ClassId(i as u16))
    }

    pub fn add_label(&mut self, name: &str) -> Result<ClassId> {
        if self.find(name).is_some() {
            return Err(Error::Classes(alloc::format!("duplicate label {name}")));
        }
        self.labels.push(name.to_string());
        self.up.push(Vec::new());
        Ok(ClassId((self.labels.len() - 1) as u16))
    }

    /// Declare `sub ≤ sup`. Rejects cycles and edges leaving `TRANSCENDENTAL`.
    pub fn add_containment(&mut self, sub: ClassId, sup: ClassId) -> Result<()> {
        let n = self.labels.len();
        if sub.0 as usize >= n || sup.0 as usize >= n {
            return Err(Error::Classes("unknown label".to_string()));
        }
        if sub == ClassId::TRANSCENDENTAL {
            return Err(Error::Classes(
                "TRANSCENDENTAL cannot be contained in a context".to_string(),
            ));
        }
        if sub == sup || self.reaches(sup, sub) {
            return Err(Error::Classes(alloc::format!(
                "edge {} -> {} creates a cycle",
                self.label(sub),
                self.label(sup)
            )));
        }
        if !self.up[sub.0 as usize].contains(&sup.0) {
            self.up[sub.0 as usize].push(sup.0);
        }
        Ok(())
    }

    fn reaches(&self, from: ClassId, to: ClassId) -> bool {
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![from.0];
        while let Some(c) = stack.pop() {
            if c == to.0 {
                return true;
            }
            if core::mem::replace(&mut seen[c as usize], true) {
                continue;
            }
            stack.extend(self.up[c as usize].iter().copied());
        }
        false
    }

    /// Whether a symbol of class `class` is invertible in context `ctx`.
    pub fn is_unit_in(&self, class: ClassId, ctx: ClassId) -> bool {
        class != ClassId::TRANSCENDENTAL && self.reaches(class, ctx)
    }
}
