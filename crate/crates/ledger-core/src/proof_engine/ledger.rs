//! The period ledger: free abelian group on period symbols, relations that
//! declare monomials to be units, and lattice membership over ℤ.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::symlaurent::{ClassId, ClassLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `Plus` for +1, `Minus` for −1.
    pub fn from_i(e: i64) -> Sign {
        if e >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn times(self, e: i64) -> Sign {
        if e >= 0 {
            self
        } else {
            self.flip()
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Atoms of the ledger.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PeriodSym {
    TwoPiI,
    /// D_K^{1/2}.
    DiscKHalf,
    /// δ([ε_L]) for the global Artin motive.
    DeltaEpsL,
    /// δ_σ([ε_L]).
    DeltaEpsLAt(u32),
    /// δ_σ(A) for an Artin motive A; `trivial` means A = E(0).
    DeltaA {
        name: String,
        sigma: u32,
        trivial: bool,
    },
    /// δ_σ(M), or δ(M) when `sigma` is `None`.
    DeltaM {
        motive: String,
        sigma: Option<u32>,
    },
    /// c^±_σ(M), or c^±(M) when `sigma` is `None`.
    CPM {
        motive: String,
        sigma: Option<u32>,
        sign: Sign,
    },
    /// Q_{j,σ}(M).
    QMot {
        j: u32,
        sigma: u32,
    },
    /// Q_σ(χ).
    QChi(u32),
    /// a^±_σ(χ).
    APM {
        sigma: u32,
        sign: Sign,
    },
    /// e_τ = ±1.
    ETau(String),
    /// CM period p(character; place or det∘x).
    CM {
        character: String,
        at: String,
    },
    QHol,
    QAhol,
    /// Q(π_τ; β_j), the automorphic name of Q_{j,σ}.
    QAut {
        tau: u32,
        j: u32,
    },
    /// The standard L-value at the point under study.
    LStd,
    ZetaInt(String),
    /// Auxiliary named quantity (determinants, L-values of other motives…).
    Aux(String),
}

impl PeriodSym {
    pub fn class(&self) -> ClassId {
        match self {
            PeriodSym::DiscKHalf => ClassId::DISC_K,
            PeriodSym::DeltaEpsLAt(_) => ClassId::L_GALOIS,
            PeriodSym::DeltaA { trivial: true, .. } => ClassId::RATIONAL,
            PeriodSym::ETau(_) => ClassId::RATIONAL,
            _ => ClassId::TRANSCENDENTAL,
        }
    }

    pub fn c(motive: &str, sigma: Option<u32>, sign: Sign) -> PeriodSym {
        PeriodSym::CPM {
            motive: motive.to_string(),
            sigma,
            sign,
        }
    }

    pub fn delta(motive: &str, sigma: Option<u32>) -> PeriodSym {
        PeriodSym::DeltaM {
            motive: motive.to_string(),
            sigma,
        }
    }

    pub fn aux(name: &str) -> PeriodSym {
        PeriodSym::Aux(name.to_string())
    }
}

impl fmt::Display for PeriodSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |s: &Option<u32>| match s {
            Some(k) => alloc::format!("_{}", k + 1),
            None => String::new(),
        };
        match self {
            PeriodSym::TwoPiI => f.write_str("(2pi i)"),
            PeriodSym::DiscKHalf => f.write_str("D_K^(1/2)"),
            PeriodSym::DeltaEpsL => f.write_str("delta[eps_L]"),
            PeriodSym::DeltaEpsLAt(s) => write!(f, "delta_{}[eps_L]", s + 1),
            PeriodSym::DeltaA { name, sigma, .. } => write!(f, "delta_{}({name})", sigma + 1),
            PeriodSym::DeltaM { motive, sigma } => write!(f, "delta{}({motive})", at(sigma)),
            PeriodSym::CPM {
                motive,
                sigma,
                sign,
            } => {
                write!(f, "c{}{}({motive})", sign.as_char(), at(sigma))
            }
            PeriodSym::QMot { j, sigma } => write!(f, "Q_{{{},{}}}", j, sigma + 1),
            PeriodSym::QChi(s) => write!(f, "Q_{}(chi)", s + 1),
            PeriodSym::APM { sigma, sign } => write!(f, "a{}_{}(chi)", sign.as_char(), sigma + 1),
            PeriodSym::ETau(t) => write!(f, "e_{t}"),
            PeriodSym::CM { character, at } => write!(f, "p({character};{at})"),
            PeriodSym::QHol => f.write_str("Q^hol"),
            PeriodSym::QAhol => f.write_str("Q^ahol"),
            PeriodSym::QAut { tau, j } => write!(f, "Q(pi_{};beta_{j})", tau + 1),
            PeriodSym::LStd => f.write_str("L^S(m,pi x psi,St)"),
            PeriodSym::ZetaInt(n) => write!(f, "Z[{n}]"),
            PeriodSym::Aux(n) => f.write_str(n),
        }
    }
}

/// Monomial in period symbols with integer exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct PeriodExpr(BTreeMap<PeriodSym, i64>);

impl PeriodExpr {
    pub fn one() -> Self {
        PeriodExpr::default()
    }

    pub fn sym(s: PeriodSym) -> Self {
        Self::one().times(s, 1)
    }

    /// Multiplies in `s^k`.
    pub fn times(mut self, s: PeriodSym, k: i64) -> Self {
        if k != 0 {
            let e = self.0.entry(s.clone()).or_insert(0);
            *e += k;
            if *e == 0 {
                self.0.remove(&s);
            }
        }
        self
    }

    pub fn mul(&self, other: &PeriodExpr) -> PeriodExpr {
        let mut out = self.clone();
        for (s, &k) in &other.0 {
            out = out.times(s.clone(), k);
        }
        out
    }

    pub fn pow(&self, k: i64) -> PeriodExpr {
        if k == 0 {
            return PeriodExpr::one();
        }
        PeriodExpr(self.0.iter().map(|(s, &e)| (s.clone(), e * k)).collect())
    }

    pub fn inv(&self) -> PeriodExpr {
        self.pow(-1)
    }

    pub fn div(&self, other: &PeriodExpr) -> PeriodExpr {
        self.mul(&other.inv())
    }

    pub fn exponent(&self, s: &PeriodSym) -> i64 {
        self.0.get(s).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PeriodSym, i64)> {
        self.0.iter().map(|(s, &e)| (s, e))
    }

    /// Drops every symbol that is a unit in `ctx`.
    pub fn modulo_units(&self, ctx: ClassId, lattice: &ClassLattice) -> PeriodExpr {
        PeriodExpr(
            self.0
                .iter()
                .filter(|(s, _)| !lattice.is_unit_in(s.class(), ctx))
                .map(|(s, &e)| (s.clone(), e))
                .collect(),
        )
    }

    /// Renames symbols; exponents of colliding images add up.
    pub fn map_symbols(&self, f: impl Fn(&PeriodSym) -> PeriodSym) -> PeriodExpr {
        let mut out = PeriodExpr::one();
        for (s, &e) in &self.0 {
            out = out.times(f(s), e);
        }
        out
    }
}

impl fmt::Display for PeriodExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, &e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// How an axiom entered the ledger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    /// Proved statement imported with its citation.
    Cited,
    /// Checked in this crate (determinant identity, earlier derivation).
    Verified,
    /// Identification of two names for the same quantity.
    Definition,
    /// Analytic input that is not recomputed.
    Analytic,
    /// Assumed statement (conjectural or expected refinement).
    Assumption,
}

impl Grade {
    pub fn as_str(self) -> &'static str {
        match self {
            Grade::Cited => "cited",
            Grade::Verified => "verified",
            Grade::Definition => "definition",
            Grade::Analytic => "analytic-input",
            Grade::Assumption => "assumption",
        }
    }
}

/// "`relation` is a unit in `context`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub name: String,
    pub relation: PeriodExpr,
    pub context: ClassId,
    pub anchor: String,
    pub grade: Grade,
}

impl Axiom {
    pub fn new(
        name: &str,
        relation: PeriodExpr,
        context: ClassId,
        anchor: &str,
        grade: Grade,
    ) -> Self {
        assert!(!anchor.is_empty(), "axiom {name} needs an anchor");
        Axiom {
            name: name.to_string(),
            relation,
            context,
            anchor: anchor.to_string(),
            grade,
        }
    }

    /// `lhs ∼ rhs`, stored as `lhs·rhs⁻¹`.
    pub fn equiv(
        name: &str,
        lhs: PeriodExpr,
        rhs: PeriodExpr,
        context: ClassId,
        anchor: &str,
        grade: Grade,
    ) -> Self {
        Self::new(name, lhs.div(&rhs), context, anchor, grade)
    }
}

/// Result of a membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeOutcome {
    pub member: bool,
    /// Integer multiplicity of each axiom in the certificate (nonzero only).
    pub combination: Vec<(String, BigInt)>,
    /// Part of the target carried by unit symbols of the context.
    pub unit_part: PeriodExpr,
    /// Canonical residue modulo the lattice; trivial iff `member`.
    pub residual: PeriodExpr,
    /// Axioms whose context is not contained in the requested one.
    pub unusable: Vec<String>,
}

fn hnf_reduce(rows: &mut Vec<(Vec<BigInt>, Vec<BigInt>)>, ncols: usize) -> Vec<(usize, usize)> {
    // Row-style Hermite form; returns (row, pivot column) pairs.
    let mut pivots = Vec::new();
    let mut p = 0;
    for col in 0..ncols {
        if p >= rows.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in p..rows.len() {
                if !rows[i].0[col].is_zero()
                    && best.is_none_or(|b| rows[i].0[col].abs() < rows[b].0[col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(p, b);
            let mut done = true;
            for i in p + 1..rows.len() {
                if rows[i].0[col].is_zero() {
                    continue;
                }
                let q = rows[i].0[col].div_floor(&rows[p].0[col]);
                let (head, tail) = rows.split_at_mut(i);
                let src = &head[p];
                let dst = &mut tail[0];
                for k in 0..ncols {
                    let d = &q * &src.0[k];
                    dst.0[k] -= d;
                }
                for k in 0..src.1.len() {
                    let d = &q * &src.1[k];
                    dst.1[k] -= d;
                }
                if !dst.0[col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if p < rows.len() && !rows[p].0[col].is_zero() {
            if rows[p].0[col].is_negative() {
                let row = &mut rows[p];
                for x in row.0.iter_mut().chain(row.1.iter_mut()) {
                    *x = -x.clone();
                }
            }
            for i in 0..p {
                let q = rows[i].0[col].div_floor(&rows[p].0[col]);
                if q.is_zero() {
                    continue;
                }
                let (head, tail) = rows.split_at_mut(p);
                let src = &tail[0];
                let dst = &mut head[i];
                for k in 0..ncols {
                    let d = &q * &src.0[k];
                    dst.0[k] -= d;
                }
                for k in 0..src.1.len() {
                    let d = &q * &src.1[k];
                    dst.1[k] -= d;
                }
            }
            pivots.push((p, col));
            p += 1;
        }
    }
    pivots
}

/// Decides whether `target` lies in the subgroup generated by the usable
/// axiom relations and the unit symbols of `ctx`.
pub fn lattice_check(
    target: &PeriodExpr,
    axioms: &[Axiom],
    ctx: ClassId,
    lattice: &ClassLattice,
) -> LatticeOutcome {
    let (usable, unusable): (Vec<&Axiom>, Vec<&Axiom>) = axioms
        .iter()
        .partition(|a| lattice.is_unit_in(a.context, ctx));
    let mut coords: BTreeMap<PeriodSym, usize> = BTreeMap::new();
    let projected: Vec<PeriodExpr> = usable
        .iter()
        .map(|a| a.relation.modulo_units(ctx, lattice))
        .collect();
    let t_proj = target.modulo_units(ctx, lattice);
    for e in projected.iter().chain(core::iter::once(&t_proj)) {
        for (s, _) in e.iter() {
            let n = coords.len();
            coords.entry(s.clone()).or_insert(n);
        }
    }
    let ncols = coords.len();
    let to_vec = |e: &PeriodExpr| {
        let mut v = vec![BigInt::zero(); ncols];
        for (s, k) in e.iter() {
            v[coords[s]] = BigInt::from(k);
        }
        v
    };
    let k = usable.len();
    let mut rows: Vec<(Vec<BigInt>, Vec<BigInt>)> = projected
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut id = vec![BigInt::zero(); k];
            id[i] = BigInt::one();
            (to_vec(e), id)
        })
        .collect();
    let pivots = hnf_reduce(&mut rows, ncols);

    let mut t = to_vec(&t_proj);
    let mut comb = vec![BigInt::zero(); k];
    for &(r, col) in &pivots {
        let q = t[col].div_floor(&rows[r].0[col]);
        if q.is_zero() {
            continue;
        }
        for c in 0..ncols {
            t[c] -= &q * &rows[r].0[c];
        }
        for a in 0..k {
            comb[a] += &q * &rows[r].1[a];
        }
    }
    let names: Vec<PeriodSym> = {
        let mut v = vec![PeriodSym::TwoPiI; ncols];
        for (s, &i) in &coords {
            v[i] = s.clone();
        }
        v
    };
    let mut residual = PeriodExpr::one();
    for (i, x) in t.iter().enumerate() {
        if !x.is_zero() {
            residual = residual.times(names[i].clone(), x.to_i64().unwrap_or(i64::MAX));
        }
    }
    let member = residual.is_one();
    let mut explained = PeriodExpr::one();
    let mut combination = Vec::new();
    for (a, c) in usable.iter().zip(&comb) {
        if c.is_zero() {
            continue;
        }
        let ci = c.to_i64().expect("certificate coefficient fits in i64");
        explained = explained.mul(&a.relation.pow(ci));
        combination.push((a.name.clone(), c.clone()));
    }
    let unit_part = if member {
        target.div(&explained)
    } else {
        PeriodExpr::one()
    };
    debug_assert!(!member || unit_part.modulo_units(ctx, lattice).is_one());
    LatticeOutcome {
        member,
        combination,
        unit_part,
        residual,
        unusable: unusable.iter().map(|a| a.name.clone()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(j: u32) -> PeriodSym {
        PeriodSym::QMot { j, sigma: 0 }
    }

    fn pair_axiom() -> Axiom {
        Axiom::equiv(
            "pair",
            PeriodExpr::one().times(q(1), 1).times(q(2), 1),
            PeriodExpr::sym(PeriodSym::TwoPiI).times(PeriodSym::DiscKHalf, 1),
            ClassId::E_TENSOR_K,
            "Q_1 Q_2 ~ 2pi i D_K^(1/2)",
            Grade::Cited,
        )
    }

    #[test]
    fn axiom_is_member_of_its_own_lattice() {
        let lat = ClassLattice::standard();
        let a = pair_axiom();
        let out = lattice_check(&a.relation, &[a.clone()], ClassId::E_TENSOR_K, &lat);
        assert!(out.member);
        assert_eq!(out.combination, vec![("pair".to_string(), BigInt::one())]);
        assert!(out.residual.is_one());
        let out = lattice_check(&a.relation.pow(-3), &[a], ClassId::E_TENSOR_K, &lat);
        assert_eq!(out.combination[0].1, BigInt::from(-3));
    }

    #[test]
    fn two_pi_i_alone_is_not_a_unit() {
        let lat = ClassLattice::standard();
        let t = PeriodExpr::sym(PeriodSym::TwoPiI);
        let out = lattice_check(&t, &[pair_axiom()], ClassId::L_GALOIS, &lat);
        assert!(!out.member);
        assert!(!out.residual.is_one());
    }

    #[test]
    fn discriminant_absorbed_only_when_asked() {
        let target = PeriodExpr::one()
            .times(q(1), 1)
            .times(q(2), 1)
            .times(PeriodSym::TwoPiI, -1);
        let lat = ClassLattice::standard();
        assert!(!lattice_check(&target, &[pair_axiom()], ClassId::K_GALOIS, &lat).member);
        let lat = ClassLattice::with_discriminant_absorbed();
        let out = lattice_check(&target, &[pair_axiom()], ClassId::K_GALOIS, &lat);
        assert!(out.member);
        assert_eq!(out.unit_part, PeriodExpr::sym(PeriodSym::DiscKHalf));
    }

    #[test]
    fn context_too_large_makes_axiom_unusable() {
        let lat = ClassLattice::standard();
        let a = Axiom::equiv(
            "wide",
            PeriodExpr::sym(q(1)),
            PeriodExpr::sym(PeriodSym::TwoPiI),
            ClassId::L_GALOIS,
            "Q_1 ~ 2pi i",
            Grade::Cited,
        );
        let out = lattice_check(&a.relation, &[a.clone()], ClassId::E_TENSOR_K, &lat);
        assert!(!out.member);
        assert_eq!(out.unusable, vec!["wide".to_string()]);
    }

    #[test]
    fn needs_nontrivial_integer_combination() {
        // x² y and x y² generate x³ y³ via sum but not x y
        let x = PeriodSym::aux("x");
        let y = PeriodSym::aux("y");
        let mk = |n: &str, a: i64, b: i64| {
            Axiom::new(
                n,
                PeriodExpr::one().times(x.clone(), a).times(y.clone(), b),
                ClassId::RATIONAL,
                "gen",
                Grade::Definition,
            )
        };
        let ax = [mk("g1", 2, 1), mk("g2", 1, 2)];
        let lat = ClassLattice::standard();
        let t = PeriodExpr::one().times(x.clone(), 3).times(y.clone(), 3);
        let out = lattice_check(&t, &ax, ClassId::RATIONAL, &lat);
        assert!(out.member);
        let mut rebuilt = PeriodExpr::one();
        for (name, k) in &out.combination {
            let a = ax.iter().find(|a| &a.name == name).unwrap();
            rebuilt = rebuilt.mul(&a.relation.pow(i64::try_from(k.clone()).unwrap()));
        }
        assert_eq!(rebuilt, t);
        let t = PeriodExpr::one().times(x, 1).times(y, 1);
        assert!(!lattice_check(&t, &ax, ClassId::RATIONAL, &lat).member);
    }
}
