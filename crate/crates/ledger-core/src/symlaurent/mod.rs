//! Exact sparse Laurent polynomials over ℚ in tagged symbols, symbolic
//! determinants and proportionality modulo units.

mod classes;
mod poly;
mod ratfunc;
mod table;

pub use classes::{ClassId, ClassLattice};
pub use poly::{rat, LaurentPoly, Monomial, MonomialDisplay, PolyDisplay, Rat};
pub use ratfunc::RatFunc;
pub use table::{SymbolId, SymbolTable};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<LaurentPoly>>;

/// Exact determinant by cofactor expansion memoized over column subsets.
pub fn det(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    if let Some(bad) = m.iter().position(|row| row.len() != n) {
        return Err(Error::Dimension(alloc::format!(
            "row {bad} has {} entries, expected {n}",
            m[bad].len()
        )));
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    if n > 20 {
        return Err(Error::Dimension(alloc::format!("{n}x{n} is too large")));
    }
    // minors[mask] = det of the last popcount(mask) rows on the columns in mask
    let full = (1usize << n) - 1;
    let mut minors: Vec<Option<LaurentPoly>> = vec![None; 1 << n];
    minors[0] = Some(LaurentPoly::one());
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = LaurentPoly::zero();
        let mut sign_pos = true;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                if let Some(sub) = &minors[mask & !(1 << col)] {
                    if !sub.is_zero() {
                        let t = entry * sub;
                        acc = if sign_pos { &acc + &t } else { &acc - &t };
                    }
                }
            }
            sign_pos = !sign_pos;
        }
        minors[mask] = Some(acc);
    }
    Ok(minors[full].take().unwrap_or_default())
}

/// Searches for a rational `c` and a monomial `u` built from units of
/// `unit_context` with `lhs = c·u·rhs`. The candidate comes from the quotient
/// of leading terms and is confirmed by exact multiplication.
pub fn proportional_up_to_units(
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
    unit_context: ClassId,
    table: &SymbolTable,
) -> Result<Option<(Rat, Monomial)>> {
    let Some((mr, cr)) = rhs.leading_term() else {
        return Err(Error::Domain(String::from("rhs is zero")));
    };
    let Some((ml, cl)) = lhs.leading_term() else {
        return Ok(None);
    };
    let u = ml.div(mr);
    let c = cl / cr;
    if !u.symbols().all(|s| table.is_unit(s, unit_context)) {
        return Ok(None);
    }
    if rhs.mul_monomial(&u).scale(&c) == *lhs {
        Ok(Some((c, u)))
    } else {
        Ok(None)
    }
}
