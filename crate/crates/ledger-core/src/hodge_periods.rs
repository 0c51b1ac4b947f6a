//! Regular polarized Hodge–de Rham data in generic coordinates: the period
//! matrix P̃ = (P̃⁺; P̃⁻), its Deligne-period minors, quadratic periods
//! Q_j = λ_j μ_j δ(A)⁻¹, and the Tate/Artin twist and discriminant rules.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::proof_engine::ledger::{Axiom, Grade, PeriodExpr, PeriodSym, Sign};
use crate::symlaurent::{
    det, ClassId, ClassLattice, LaurentPoly, Matrix, Monomial, RatFunc, SymbolId, SymbolTable,
};

/// Strictly decreasing Hodge numbers per embedding σ (one coefficient
/// embedding φ is modelled at a time).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeProfile {
    pub d: usize,
    pub w: i64,
    pub p: Vec<Vec<i64>>,
}

impl HodgeProfile {
    pub fn new(w: i64, p: Vec<Vec<i64>>) -> Result<Self> {
        let d = p.first().map_or(0, |v| v.len());
        for v in &p {
            if v.len() != d {
                return Err(Error::Dimension("Hodge vectors differ in length".into()));
            }
            if !v.windows(2).all(|x| x[0] > x[1]) {
                return Err(Error::Domain(alloc::format!(
                    "{v:?} is not strictly decreasing"
                )));
            }
        }
        Ok(HodgeProfile { d, w, p })
    }

    pub fn e(&self) -> usize {
        self.p.len()
    }
}

/// Frobenius eigenvalues λ_j as Laurent monomials: λ_j for j ≤ ⌊d/2⌋ are
/// free symbols, λ_{d+1−j} = λ_j⁻¹ and the middle one is ε.
#[derive(Clone, Debug)]
pub struct FrobeniusData {
    pub lambda: Vec<LaurentPoly>,
    pub epsilon: i8,
}

/// Generic regular polarized structure of rank d, built from free period
/// coordinates ã^±_{ij} and the Frobenius relations between columns j and
/// d+1−j.
#[derive(Clone, Debug)]
pub struct PolarizedInstance {
    pub d: usize,
    pub d_plus: usize,
    pub d_minus: usize,
    pub epsilon: i8,
    pub a_trivial: bool,
    pub table: SymbolTable,
    pub plus: Matrix,
    pub minus: Matrix,
    pub frobenius: FrobeniusData,
    pub mu: Vec<SymbolId>,
    pub delta_a: SymbolId,
}

fn sign_poly(s: Sign) -> LaurentPoly {
    match s {
        Sign::Plus => LaurentPoly::one(),
        Sign::Minus => LaurentPoly::int(-1),
    }
}

/// Whether (d, d_plus, ε) can come from an actual structure: the Frobenius
/// swaps the Hodge pairs, so d^+ − d^− is 0 for even d and ε for odd d.
pub fn is_admissible(d: usize, d_plus: usize, epsilon: i8) -> bool {
    if d_plus > d {
        return false;
    }
    if d % 2 == 0 {
        2 * d_plus == d
    } else {
        let m = (d + 1) / 2;
        (d_plus == m && epsilon == 1) || (d_plus + 1 == m && epsilon == -1)
    }
}

pub fn build_generic_instance(
    d: usize,
    d_plus: usize,
    epsilon: i8,
    a_trivial: bool,
) -> Result<PolarizedInstance> {
    build_generic_instance_in(d, d_plus, epsilon, a_trivial, ClassLattice::standard())
}

pub fn build_generic_instance_in(
    d: usize,
    d_plus: usize,
    epsilon: i8,
    a_trivial: bool,
    lattice: ClassLattice,
) -> Result<PolarizedInstance> {
    if d == 0 || d_plus > d {
        return Err(Error::Domain(alloc::format!(
            "need 0 ≤ d_plus ≤ d and d ≥ 1, got d={d}, d_plus={d_plus}"
        )));
    }
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::Domain("ε must be ±1".into()));
    }
    let half = d / 2;
    if d % 2 == 1 {
        let m = half + 1;
        if d_plus != m && d_plus + 1 != m {
            return Err(Error::Domain(alloc::format!(
                "odd d={d} needs d_plus ∈ {{{}, {m}}}",
                m - 1
            )));
        }
        if (d_plus == m) != (epsilon == 1) {
            return Err(Error::Domain(alloc::format!(
                "d={d}, d_plus={d_plus} forces ε = {}",
                if d_plus == m { 1 } else { -1 }
            )));
        }
    }
    let d_minus = d - d_plus;
    let mut table = SymbolTable::new(lattice);
    let delta_a = table.register(
        "deltaA",
        &[if a_trivial {
            ClassId::RATIONAL
        } else {
            ClassId::TRANSCENDENTAL
        }],
    )?;
    let mut lam_syms = Vec::new();
    for j in 1..=half {
        lam_syms.push(table.register(&alloc::format!("lambda{j}"), &[ClassId::TRANSCENDENTAL])?);
    }
    let mut mu = Vec::new();
    for j in 1..=d {
        mu.push(table.register(&alloc::format!("mu{j}"), &[ClassId::E_TENSOR_K])?);
    }
    let lambda: Vec<LaurentPoly> = (1..=d)
        .map(|j| {
            if j <= half {
                LaurentPoly::var(lam_syms[j - 1])
            } else if d % 2 == 1 && j == half + 1 {
                LaurentPoly::int(epsilon as i64)
            } else {
                LaurentPoly::monomial(Monomial::from_pairs([(lam_syms[d - j], -1)]))
            }
        })
        .collect();
    let mut blocks = [Vec::new(), Vec::new()];
    for (b, (sign, rows)) in [(Sign::Plus, d_plus), (Sign::Minus, d_minus)]
        .into_iter()
        .enumerate()
    {
        let tag = sign.as_char();
        let mut mat = vec![vec![LaurentPoly::zero(); d]; rows];
        for (i, row) in mat.iter_mut().enumerate() {
            for j in 1..=d {
                let entry = if j <= half {
                    LaurentPoly::var(table.register(
                        &alloc::format!("a{tag}[{},{j}]", i + 1),
                        &[ClassId::TRANSCENDENTAL],
                    )?)
                } else if d % 2 == 1 && j == half + 1 {
                    // F acts by ε on the middle line, so only the ε-block survives
                    let survives = (sign == Sign::Plus) == (epsilon == 1);
                    if survives {
                        LaurentPoly::var(table.register(
                            &alloc::format!("a{tag}[{},{j}]", i + 1),
                            &[ClassId::TRANSCENDENTAL],
                        )?)
                    } else {
                        LaurentPoly::zero()
                    }
                } else {
                    let partner = row[d - j].clone();
                    &(&sign_poly(sign) * &lambda[j - 1]) * &partner
                };
                row[j - 1] = entry;
            }
        }
        blocks[b] = mat;
    }
    let [plus, minus] = blocks;
    let inst = PolarizedInstance {
        d,
        d_plus,
        d_minus,
        epsilon,
        a_trivial,
        table,
        plus,
        minus,
        frobenius: FrobeniusData { lambda, epsilon },
        mu,
        delta_a,
    };
    inst.check_relations()?;
    Ok(inst)
}

impl PolarizedInstance {
    /// Q_j = λ_j μ_j δ(A)⁻¹ (1-based j).
    pub fn q(&self, j: usize) -> Result<LaurentPoly> {
        if j == 0 || j > self.d {
            return Err(Error::Dimension(alloc::format!(
                "Q_{j} out of range 1..{}",
                self.d
            )));
        }
        let m = Monomial::from_pairs([(self.mu[j - 1], 1), (self.delta_a, -1)]);
        Ok(self.frobenius.lambda[j - 1].mul_monomial(&m))
    }

    /// Confirms ã^±_{i,d+1−j} = ±δ(A)⁻¹ μ_j Q_j⁻¹ ã^±_{ij} for every entry
    /// and λ_j λ_{d+1−j} = 1.
    pub fn check_relations(&self) -> Result<()> {
        let d = self.d;
        for j in 1..=d {
            let prod = &self.frobenius.lambda[j - 1] * &self.frobenius.lambda[d - j];
            if prod != LaurentPoly::one() {
                return Err(Error::Domain(alloc::format!("λ_{j}·λ_{} ≠ 1", d + 1 - j)));
            }
            let qinv = self.q(j)?.pow(-1)?;
            let factor = qinv.mul_monomial(&Monomial::from_pairs([
                (self.mu[j - 1], 1),
                (self.delta_a, -1),
            ]));
            for (sign, mat) in [(Sign::Plus, &self.plus), (Sign::Minus, &self.minus)] {
                for row in mat {
                    let rhs = &(&sign_poly(sign) * &factor) * &row[j - 1];
                    if row[d - j] != rhs {
                        return Err(Error::Domain(alloc::format!(
                            "column relation fails between columns {j} and {}",
                            d + 1 - j
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The full d×d matrix P̃ with the plus rows on top.
    pub fn p_tilde(&self) -> Matrix {
        self.plus.iter().chain(&self.minus).cloned().collect()
    }

    /// Rows of ã^± restricted to the given 1-based columns, each optionally
    /// scaled.
    pub fn columns(&self, sign: Sign, cols: &[(usize, LaurentPoly)]) -> Matrix {
        let mat = match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        };
        mat.iter()
            .map(|row| cols.iter().map(|(j, s)| s * &row[j - 1]).collect())
            .collect()
    }

    pub fn d_sign(&self, sign: Sign) -> usize {
        match sign {
            Sign::Plus => self.d_plus,
            Sign::Minus => self.d_minus,
        }
    }
}

/// δ_σ ∼ det(P̃)⁻¹.
pub fn delta_of(inst: &PolarizedInstance) -> Result<RatFunc> {
    let dp = det(&inst.p_tilde())?;
    if dp.is_zero() {
        return Err(Error::Degenerate(alloc::format!(
            "det P̃ vanishes identically for d={}, d_plus={}",
            inst.d,
            inst.d_plus
        )));
    }
    RatFunc::new(LaurentPoly::one(), dp)
}

/// c^±(M^∨) ∼ det of the leading d^±×d^± block of P̃^±.
pub fn c_dual_pm(inst: &PolarizedInstance, sign: Sign) -> Result<LaurentPoly> {
    let k = inst.d_sign(sign);
    let mat = match sign {
        Sign::Plus => &inst.plus,
        Sign::Minus => &inst.minus,
    };
    let block: Matrix = mat.iter().map(|row| row[..k].to_vec()).collect();
    det(&block)
}

/// Q_j as a Laurent monomial in the instance's symbols.
pub fn quadratic_period(inst: &PolarizedInstance, j: usize) -> Result<LaurentPoly> {
    inst.q(j)
}

/// Name of M(t).
pub fn tate_twisted(motive: &str, t: i64) -> String {
    alloc::format!("{motive}({t})")
}

/// Name of M ⊗ A.
pub fn artin_twisted(motive: &str, artin: &str) -> String {
    alloc::format!("{motive}(x){artin}")
}

/// Artin motive [ε] of rank one with Frobenius sign ε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinTwist {
    pub name: String,
    pub eps: i8,
    pub trivial: bool,
}

fn c_sym(motive: &str, sigma: u32, sign: Sign) -> PeriodSym {
    PeriodSym::c(motive, Some(sigma), sign)
}

/// Tate twist rules for M(t) and, when given, the Artin twist rule for M ⊗ A,
/// all at the embedding σ.
pub fn twist_rules(
    motive: &str,
    d: usize,
    d_plus: usize,
    t: i64,
    artin: Option<&ArtinTwist>,
    sigma: u32,
) -> Vec<Axiom> {
    let d_minus = d - d_plus;
    let dsign = |s: Sign| if s == Sign::Plus { d_plus } else { d_minus } as i64;
    let twisted = tate_twisted(motive, t);
    let mut out = vec![Axiom::equiv(
        &alloc::format!("delta-twist[{twisted},{}]", sigma + 1),
        PeriodExpr::sym(PeriodSym::delta(&twisted, Some(sigma))),
        PeriodExpr::sym(PeriodSym::delta(motive, Some(sigma)))
            .times(PeriodSym::TwoPiI, t * d as i64),
        ClassId::E_TENSOR_K,
        "delta_sigma(M(t)) ~ (2pi i)^(td) delta_sigma(M)",
        Grade::Cited,
    )];
    for sign in [Sign::Plus, Sign::Minus] {
        let src = if t % 2 == 0 { sign } else { sign.flip() };
        out.push(Axiom::equiv(
            &alloc::format!("c-twist[{twisted},{},{}]", sigma + 1, sign.as_char()),
            PeriodExpr::sym(c_sym(&twisted, sigma, sign)),
            PeriodExpr::sym(c_sym(motive, sigma, src)).times(PeriodSym::TwoPiI, t * dsign(src)),
            ClassId::E_TENSOR_K,
            if t % 2 == 0 {
                "c^pm_sigma(M(t)) ~ (2pi i)^(t d^pm) c^pm_sigma(M), t even"
            } else {
                "c^pm_sigma(M(t)) ~ (2pi i)^(t d^mp) c^mp_sigma(M), t odd"
            },
            Grade::Cited,
        ));
    }
    if let Some(a) = artin {
        let name = artin_twisted(motive, &a.name);
        let delta_a = PeriodSym::DeltaA {
            name: a.name.clone(),
            sigma,
            trivial: a.trivial,
        };
        for sign in [Sign::Plus, Sign::Minus] {
            let src = sign.times(a.eps as i64);
            out.push(Axiom::equiv(
                &alloc::format!("c-artin[{name},{},{}]", sigma + 1, sign.as_char()),
                PeriodExpr::sym(c_sym(&name, sigma, sign)),
                PeriodExpr::sym(c_sym(motive, sigma, src)).times(delta_a.clone(), dsign(src)),
                ClassId::E_TENSOR_K,
                "c^pm_sigma(M (x) [eps]) ~ c^(pm eps)_sigma(M) delta_sigma([eps])^(d^(pm eps))",
                Grade::Cited,
            ));
        }
    }
    out
}

/// δ_σ(M)² ∼ δ_σ(A)^d (2πi)^{−wd}.
pub fn delta_squared_axiom(
    motive: &str,
    d: usize,
    w: i64,
    artin: &ArtinTwist,
    sigma: u32,
) -> Axiom {
    Axiom::equiv(
        &alloc::format!("delta-squared[{motive},{}]", sigma + 1),
        PeriodExpr::one().times(PeriodSym::delta(motive, Some(sigma)), 2),
        PeriodExpr::one()
            .times(
                PeriodSym::DeltaA {
                    name: artin.name.clone(),
                    sigma,
                    trivial: artin.trivial,
                },
                d as i64,
            )
            .times(PeriodSym::TwoPiI, -w * d as i64),
        ClassId::E_TENSOR_K,
        "delta_sigma(M)^2 ~ delta_sigma(A)^d (2pi i)^(-wd)",
        Grade::Cited,
    )
}

/// Discriminant factorizations of the global periods into local ones over
/// the `e` embeddings of K.
pub fn yoshida_axioms(motive: &str, d: usize, d_plus: usize, e: usize) -> Vec<Axiom> {
    let d_minus = d - d_plus;
    let mut out = Vec::new();
    for (sign, ds) in [(Sign::Plus, d_plus), (Sign::Minus, d_minus)] {
        let mut rhs = PeriodExpr::one().times(PeriodSym::DiscKHalf, ds as i64);
        for s in 0..e as u32 {
            rhs = rhs.times(c_sym(motive, s, sign), 1);
        }
        out.push(Axiom::equiv(
            &alloc::format!("yoshida-c[{motive},{}]", sign.as_char()),
            PeriodExpr::sym(PeriodSym::c(motive, None, sign)),
            rhs,
            ClassId::K_GALOIS,
            "c^pm(M) ~ D_K^(d^pm/2) prod_sigma c^pm_sigma(M)",
            Grade::Cited,
        ));
    }
    let mut rhs = PeriodExpr::one().times(PeriodSym::DiscKHalf, d as i64);
    for s in 0..e as u32 {
        rhs = rhs.times(PeriodSym::delta(motive, Some(s)), 1);
    }
    out.push(Axiom::equiv(
        &alloc::format!("yoshida-delta[{motive}]"),
        PeriodExpr::sym(PeriodSym::delta(motive, None)),
        rhs,
        ClassId::K_GALOIS,
        "delta(M) ~ D_K^(d/2) prod_sigma delta_sigma(M)",
        Grade::Cited,
    ));
    out
}

/// First and second bilinear relations on a pairing support given as
/// 1-based index pairs: no (i,j) with p_i + p_j > w, and every (i, d+1−i)
/// present.
pub fn check_hodge_riemann(p: &[i64], w: i64, support: &[(usize, usize)]) -> bool {
    let d = p.len();
    if support
        .iter()
        .any(|&(i, j)| i == 0 || j == 0 || i > d || j > d)
    {
        return false;
    }
    let avoids = support.iter().all(|&(i, j)| p[i - 1] + p[j - 1] <= w);
    let nondegenerate = (1..=d).all(|i| support.contains(&(i, d + 1 - i)));
    avoids && nondegenerate
}

/// Scalar ±1 as a Laurent constant.
pub fn pm_one(s: Sign) -> LaurentPoly {
    sign_poly(s)
}

#[cfg(test)]
mod tests;
