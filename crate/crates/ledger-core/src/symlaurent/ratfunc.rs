use alloc::string::String;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::poly::{LaurentPoly, Rat};
use super::table::SymbolTable;
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials. A monomial denominator is always absorbed
/// into the numerator; anything else stays as an explicit, unreduced pair.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain(String::from("zero denominator")));
        }
        Ok(RatFunc { num, den }.normalized())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    fn normalized(self) -> Self {
        if let Some((m, c)) = self.den.as_term() {
            let inv = m.inv();
            let c = c.recip();
            RatFunc {
                num: self.num.mul_monomial(&inv).scale(&c),
                den: LaurentPoly::one(),
            }
        } else {
            self
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// True when the denominator is the constant 1 after normalization.
    pub fn is_reduced(&self) -> bool {
        self.den.as_term().is_some()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.is_reduced() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn to_canonical(&self, table: &SymbolTable) -> String {
        if self
            .den
            .as_term()
            .is_some_and(|(m, c)| m.is_one() && c.is_one())
        {
            self.num.to_canonical(table)
        } else {
            alloc::format!(
                "({}) / ({})",
                self.num.to_canonical(table),
                self.den.to_canonical(table)
            )
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .normalized()
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RatFunc {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .normalized()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}
