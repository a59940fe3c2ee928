use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::arith::{gcd, squarefree_split};

/// An exact real number `z·√s` with `s` squarefree (and `s = 1` when `z = 0`).
///
/// Ordering is by real value and is computed exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Surd {
    z: i64,
    s: u64,
}

impl Surd {
    pub const ZERO: Surd = Surd { z: 0, s: 1 };

    /// `z·√s`, normalised so the radicand is squarefree.
    pub fn new(z: i64, s: u64) -> Self {
        if z == 0 || s == 0 {
            return Self::ZERO;
        }
        let (f, t) = squarefree_split(s);
        Surd { z: z * f as i64, s: t }
    }

    pub fn integer(z: i64) -> Self {
        Self::new(z, 1)
    }

    /// `√k`, e.g. `√(p^k)` = `p^(k/2)` or `p^((k-1)/2)·√p`.
    pub fn sqrt(k: u64) -> Self {
        Self::new(1, k)
    }

    pub fn coefficient(&self) -> i64 {
        self.z
    }

    pub fn radicand(&self) -> u64 {
        self.s
    }

    pub fn value(&self) -> f64 {
        self.z as f64 * (self.s as f64).sqrt()
    }

    pub fn abs(&self) -> Self {
        Surd { z: self.z.abs(), s: self.s }
    }

    /// The exact square `z²s`.
    pub fn square(&self) -> u128 {
        (self.z.unsigned_abs() as u128).pow(2) * self.s as u128
    }

    pub fn is_zero(&self) -> bool {
        self.z == 0
    }
}

impl Mul for Surd {
    type Output = Surd;

    fn mul(self, rhs: Surd) -> Surd {
        // √s₁·√s₂ = g·√(s₁s₂/g²) with g = gcd(s₁, s₂), both radicands squarefree.
        let g = gcd(self.s, rhs.s);
        let z = self.z * rhs.z * g as i64;
        Surd::new(z, (self.s / g) * (rhs.s / g))
    }
}

impl Neg for Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        Surd { z: -self.z, s: self.s }
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.z.signum(), other.z.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        let by_magnitude = self.square().cmp(&other.square());
        if sa < 0 {
            by_magnitude.reverse()
        } else {
            by_magnitude
        }
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.z, self.s) {
            (z, 1) => write!(f, "{z}"),
            (1, s) => write!(f, "√{s}"),
            (-1, s) => write!(f, "-√{s}"),
            (z, s) => write!(f, "{z}√{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalisation() {
        assert_eq!(Surd::sqrt(49), Surd::integer(7));
        assert_eq!(Surd::sqrt(343), Surd::new(7, 7));
        assert_eq!(Surd::sqrt(28), Surd::new(2, 7));
        assert_eq!(Surd::new(0, 5), Surd::ZERO);
        assert_eq!(Surd::new(0, 5).radicand(), 1);
    }

    #[test]
    fn products() {
        let r7 = Surd::sqrt(7);
        assert_eq!(r7 * r7, Surd::integer(7));
        assert_eq!(Surd::integer(-1) * r7, Surd::new(-1, 7));
        assert_eq!(Surd::sqrt(5) * r7, Surd::sqrt(35));
        assert!(((Surd::sqrt(5) * r7).value() - 5f64.sqrt() * 7f64.sqrt()).abs() < 1e-12);
        assert_eq!(Surd::new(2, 6) * Surd::new(3, 10), Surd::new(12, 15));
    }

    #[test]
    fn exact_order() {
        let mut v = vec![
            Surd::integer(6),
            Surd::sqrt(35),
            Surd::ZERO,
            Surd::new(-2, 7),
            Surd::integer(-5),
            Surd::sqrt(2),
        ];
        v.sort();
        let values: Vec<f64> = v.iter().map(Surd::value).collect();
        assert!(values.windows(2).all(|w| w[0] < w[1]), "{values:?}");
    }

    #[test]
    fn rendering() {
        assert_eq!(Surd::new(-2, 7).to_string(), "-2√7");
        assert_eq!(Surd::sqrt(7).to_string(), "√7");
        assert_eq!(Surd::new(-1, 7).to_string(), "-√7");
        assert_eq!(Surd::integer(49).to_string(), "49");
    }

    fn surd() -> impl Strategy<Value = Surd> {
        (-50i64..=50, 1u64..=10_000).prop_map(|(z, s)| Surd::new(z, s))
    }

    proptest! {
        #[test]
        fn multiplication_laws(x in surd(), y in surd(), w in surd()) {
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y) * w, x * (y * w));
            let exact = (x * y).value();
            let float = x.value() * y.value();
            prop_assert!((exact - float).abs() <= 1e-12 * float.abs().max(1.0));
        }

        #[test]
        fn order_agrees_with_floats(x in surd(), y in surd()) {
            if (x.value() - y.value()).abs() > 1e-9 {
                prop_assert_eq!(x < y, x.value() < y.value());
            } else {
                prop_assert_eq!(x == y, x.cmp(&y) == Ordering::Equal);
            }
        }
    }
}
