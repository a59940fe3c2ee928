//! Exact arithmetic in PSL₂(ℤ/nℤ).
//!
//! Elements are 2×2 matrices of residues mod `n` with determinant 1, taken
//! up to sign. Each element is stored by the lexicographically smaller of its
//! two sign representatives, so equality and hashing are structural.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::arith::{factorize, residue};
use crate::error::{Error, Result};

/// Largest modulus for which whole-group enumeration is allowed by default.
pub const DEFAULT_DART_CAP: u64 = 30;

/// An element of PSL₂(ℤ/nℤ): `[a b; c d]` mod `n`, identified with its negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveMatrix {
    n: u64,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

fn negate(x: u64, n: u64) -> u64 {
    (n - x) % n
}

impl ProjectiveMatrix {
    /// Canonical element for the matrix `[a b; c d]` with entries taken mod `n`.
    pub fn new(a: i64, b: i64, c: i64, d: i64, n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        let (a, b, c, d) = (residue(a, n), residue(b, n), residue(c, n), residue(d, n));
        let det = (a as u128 * d as u128 + (n as u128 - b as u128 * c as u128 % n as u128))
            % n as u128;
        if det != 1 {
            return Err(Error::NotUnimodular { a, b, c, d, n });
        }
        Ok(Self::canonical(a, b, c, d, n))
    }

    fn canonical(a: u64, b: u64, c: u64, d: u64, n: u64) -> Self {
        let pos = (a, b, c, d);
        let neg = (negate(a, n), negate(b, n), negate(c, n), negate(d, n));
        let (a, b, c, d) = pos.min(neg);
        Self { n, a, b, c, d }
    }

    pub fn identity(n: u64) -> Result<Self> {
        Self::new(1, 0, 0, 1, n)
    }

    /// The order-3 generator `X = [0 1; -1 1]`.
    pub fn x(n: u64) -> Result<Self> {
        Self::new(0, 1, -1, 1, n)
    }

    /// The parabolic generator `Y = [1 1; 0 1]`.
    pub fn y(n: u64) -> Result<Self> {
        Self::new(1, 1, 0, 1, n)
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> (u64, u64, u64, u64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        let n = self.n;
        let mul = |x: u64, y: u64, z: u64, w: u64| (x * y + z * w) % n;
        Ok(Self::canonical(
            mul(self.a, other.a, self.b, other.c),
            mul(self.a, other.b, self.b, other.d),
            mul(self.c, other.a, self.d, other.c),
            mul(self.c, other.b, self.d, other.d),
            n,
        ))
    }

    /// Inverse by the adjugate `[d -b; -c a]`.
    pub fn inverse(&self) -> Self {
        let n = self.n;
        Self::canonical(self.d, negate(self.b, n), negate(self.c, n), self.a, n)
    }

    pub fn is_identity(&self) -> bool {
        (self.a, self.b, self.c, self.d) == (1 % self.n, 0, 0, 1 % self.n)
    }

    /// Entrywise reduction to level `m`, a homomorphism PSL₂(ℤ/n) → PSL₂(ℤ/m).
    pub fn reduce(&self, m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::ModulusTooSmall(m));
        }
        if self.n % m != 0 {
            return Err(Error::NotDivisor { n: self.n, m });
        }
        Ok(Self::canonical(self.a % m, self.b % m, self.c % m, self.d % m, m))
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]@{}", self.a, self.b, self.c, self.d, self.n)
    }
}

/// |PSL₂(ℤ/nℤ)| from the closed form `n³ ∏(1 - 1/p²) / 2` (and 6 for n = 2).
pub fn group_order(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    if n == 2 {
        return Ok(6);
    }
    let mut order = n * n * n;
    for (p, _) in factorize(n) {
        order = order / (p * p) * (p * p - 1);
    }
    Ok(order / 2)
}

fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Closure of a set of generators under right multiplication, by breadth-first search.
pub(crate) fn closure<T, F>(generators: &[T], identity: T, mul: F) -> Vec<T>
where
    T: Copy + Eq + std::hash::Hash + Ord,
    F: Fn(&T, &T) -> T,
{
    let mut seen = HashSet::from([identity]);
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for h in generators {
            let gh = mul(&g, h);
            if seen.insert(gh) {
                queue.push_back(gh);
            }
        }
    }
    let mut out: Vec<T> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// All of PSL₂(ℤ/nℤ), generated from `X` and `Y`, in sorted order.
pub fn enumerate_group(n: u64) -> Result<Vec<ProjectiveMatrix>> {
    enumerate_group_capped(n, DEFAULT_DART_CAP)
}

pub fn enumerate_group_capped(n: u64, cap: u64) -> Result<Vec<ProjectiveMatrix>> {
    check_cap(n, cap)?;
    let gens = [ProjectiveMatrix::x(n)?, ProjectiveMatrix::y(n)?];
    Ok(closure(&gens, ProjectiveMatrix::identity(n)?, |g, h| {
        g.multiply(h).expect("same modulus")
    }))
}

/// Number of level-`n` elements that reduce to the identity at level `m`.
pub fn kernel_size(n: u64, m: u64) -> Result<u64> {
    kernel_size_capped(n, m, DEFAULT_DART_CAP)
}

pub fn kernel_size_capped(n: u64, m: u64, cap: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    if n % m != 0 {
        return Err(Error::NotDivisor { n, m });
    }
    let mut count = 0;
    for g in enumerate_group_capped(n, cap)? {
        if g.reduce(m)?.is_identity() {
            count += 1;
        }
    }
    Ok(count)
}
