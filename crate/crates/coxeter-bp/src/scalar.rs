//! Exact scalars for reflection representations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The minimal ring interface the reflection engine needs.
pub trait Ring:
    Copy
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// Sign as a real number.
    fn signum(self) -> Ordering;
    fn is_zero(self) -> bool {
        self.signum() == Ordering::Equal
    }
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_int(n: i64) -> Self {
        n
    }
    fn signum(self) -> Ordering {
        self.cmp(&0)
    }
}

/// An element `a + b*phi` of the ring of integers of Q(sqrt 5), where
/// `phi = (1 + sqrt 5) / 2` is the golden ratio, so `phi^2 = phi + 1`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPhi {
    pub a: i64,
    pub b: i64,
}

impl ZPhi {
    pub const PHI: ZPhi = ZPhi { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> ZPhi {
        ZPhi { a, b }
    }

    /// Galois conjugate, sending phi to 1 - phi.
    pub fn conjugate(self) -> ZPhi {
        ZPhi::new(self.a + self.b, -self.b)
    }

    /// Floating-point value, for display only.
    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }
}

impl Add for ZPhi {
    type Output = ZPhi;
    fn add(self, o: ZPhi) -> ZPhi {
        ZPhi::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for ZPhi {
    type Output = ZPhi;
    fn sub(self, o: ZPhi) -> ZPhi {
        ZPhi::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi::new(-self.a, -self.b)
    }
}

impl Mul for ZPhi {
    type Output = ZPhi;
    fn mul(self, o: ZPhi) -> ZPhi {
        // (a + b phi)(c + d phi) = ac + (ad + bc) phi + bd (phi + 1)
        let bd = self.b * o.b;
        ZPhi::new(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)
    }
}

impl Ring for ZPhi {
    fn zero() -> Self {
        ZPhi::new(0, 0)
    }
    fn one() -> Self {
        ZPhi::new(1, 0)
    }
    fn from_int(n: i64) -> Self {
        ZPhi::new(n, 0)
    }
    fn signum(self) -> Ordering {
        // 2(a + b phi) = (2a + b) + b sqrt5
        let x = 2 * self.a + self.b;
        let y = self.b;
        match (x.cmp(&0), y.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (sx, sy) if sx == sy => sx,
            (sx, _) => {
                let x2 = (x as i128) * (x as i128);
                let y2 = 5 * (y as i128) * (y as i128);
                if x2 > y2 {
                    sx
                } else {
                    sx.reverse()
                }
            }
        }
    }
}

impl fmt::Debug for ZPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ZPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}phi"),
            (a, b) if b < 0 => write!(f, "{a}-{}phi", -b),
            (a, b) => write!(f, "{a}+{b}phi"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_squared() {
        let p = ZPhi::PHI;
        assert_eq!(p * p, p + ZPhi::one());
    }

    #[test]
    fn signs_of_small_values() {
        assert_eq!(ZPhi::new(-1, 1).signum(), Ordering::Greater); // phi - 1 > 0
        assert_eq!(ZPhi::new(2, -1).signum(), Ordering::Greater); // 2 - phi > 0
        assert_eq!(ZPhi::new(1, -1).signum(), Ordering::Less); // 1 - phi < 0
        assert_eq!(ZPhi::new(-2, 1).signum(), Ordering::Less);
        assert_eq!(ZPhi::new(0, 0).signum(), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn sign_matches_float(a in -1000i64..1000, b in -1000i64..1000) {
            let z = ZPhi::new(a, b);
            let f = z.to_f64();
            prop_assume!(f.abs() > 1e-6);
            prop_assert_eq!(z.signum(), f.partial_cmp(&0.0).unwrap());
        }

        #[test]
        fn multiplication_is_commutative_and_matches_float(
            a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50
        ) {
            let x = ZPhi::new(a, b);
            let y = ZPhi::new(c, d);
            prop_assert_eq!(x * y, y * x);
            prop_assert!(((x * y).to_f64() - x.to_f64() * y.to_f64()).abs() < 1e-6);
        }
    }
}
