//! The prime field with three elements.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of F₃, stored as a residue in `{0, 1, 2}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F3(u8);

impl F3 {
    pub const ZERO: F3 = F3(0);
    pub const ONE: F3 = F3(1);
    pub const TWO: F3 = F3(2);

    /// Reduces an arbitrary integer mod 3.
    pub fn new(value: i64) -> Self {
        F3(value.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `(-1)^k`.
    pub fn sign(k: usize) -> Self {
        if k.is_multiple_of(2) {
            F3::ONE
        } else {
            F3::TWO
        }
    }
}

impl From<u8> for F3 {
    fn from(value: u8) -> Self {
        F3(value % 3)
    }
}

impl Add for F3 {
    type Output = F3;
    fn add(self, rhs: F3) -> F3 {
        F3((self.0 + rhs.0) % 3)
    }
}

impl AddAssign for F3 {
    fn add_assign(&mut self, rhs: F3) {
        *self = *self + rhs;
    }
}

impl Sub for F3 {
    type Output = F3;
    fn sub(self, rhs: F3) -> F3 {
        F3((self.0 + 3 - rhs.0) % 3)
    }
}

impl SubAssign for F3 {
    fn sub_assign(&mut self, rhs: F3) {
        *self = *self - rhs;
    }
}

impl Mul for F3 {
    type Output = F3;
    fn mul(self, rhs: F3) -> F3 {
        F3((self.0 * rhs.0) % 3)
    }
}

impl MulAssign for F3 {
    fn mul_assign(&mut self, rhs: F3) {
        *self = *self * rhs;
    }
}

impl Neg for F3 {
    type Output = F3;
    fn neg(self) -> F3 {
        F3((3 - self.0) % 3)
    }
}

impl fmt::Display for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_three() {
        assert_eq!(F3::new(4), F3::ONE);
        assert_eq!(F3::new(-1), F3::TWO);
        assert_eq!(F3::ONE + F3::TWO, F3::ZERO);
        assert_eq!(F3::TWO * F3::TWO, F3::ONE);
        assert_eq!(-F3::ONE, F3::TWO);
        assert_eq!(F3::ZERO - F3::ONE, F3::TWO);
        assert_eq!(F3::sign(3), F3::TWO);
        assert_eq!(F3::sign(4), F3::ONE);
    }
}
