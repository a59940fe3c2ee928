use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::Surd;
use crate::error::{Error, Result};

/// A multiset of exact eigenvalues, kept in ascending order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Spectrum {
    entries: BTreeMap<Surd, u64>,
}

impl Spectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (Surd, u64)>>(entries: I) -> Self {
        let mut out = Self::new();
        for (value, mult) in entries {
            out.insert(value, mult);
        }
        out
    }

    /// Adds `mult` copies of `value`; zero multiplicities are ignored.
    pub fn insert(&mut self, value: Surd, mult: u64) {
        if mult > 0 {
            *self.entries.entry(value).or_insert(0) += mult;
        }
    }

    /// `(eigenvalue, multiplicity)` pairs in ascending order of eigenvalue.
    pub fn iter(&self) -> impl Iterator<Item = (Surd, u64)> + '_ {
        self.entries.iter().map(|(&v, &m)| (v, m))
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, value: &Surd) -> u64 {
        self.entries.get(value).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `k·sp`: every eigenvalue multiplied by `k`.
    pub fn scale(&self, k: i64) -> Result<Spectrum> {
        if k == 0 {
            return Err(Error::InvalidParameter("spectrum scale factor must be nonzero".into()));
        }
        let k = Surd::integer(k);
        Ok(Self::from_entries(self.iter().map(|(v, m)| (k * v, m))))
    }

    pub fn negated(&self) -> Spectrum {
        self.scale(-1).expect("nonzero factor")
    }

    /// `sp₁·sp₂ = {λμ^(m·l)}`, the spectrum of a tensor product.
    pub fn product(&self, other: &Spectrum) -> Spectrum {
        let mut out = Spectrum::new();
        for (x, m) in self.iter() {
            for (y, l) in other.iter() {
                out.insert(x * y, m * l);
            }
        }
        out
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut out = self.clone();
        for (v, m) in other.iter() {
            out.insert(v, m);
        }
        out
    }

    /// Whether every eigenvalue of `self` occurs in `other` at least as often.
    pub fn is_submultiset_of(&self, other: &Spectrum) -> bool {
        self.iter().all(|(v, m)| other.multiplicity(&v) >= m)
    }

    pub fn largest(&self) -> Option<Surd> {
        self.entries.keys().next_back().copied()
    }

    /// Largest `|λ|` over eigenvalues whose modulus differs from `degree`.
    ///
    /// For a connected `degree`-regular graph this skips the trivial eigenvalue
    /// `degree` (and `-degree` when the graph is bipartite).
    pub fn second_largest_modulus(&self, degree: u64) -> Option<Surd> {
        let trivial = Surd::integer(degree as i64);
        self.entries.keys().map(Surd::abs).filter(|a| *a != trivial).max()
    }

    /// Sum of the eigenvalues, grouped by radicand: `s ↦ Σ m·z`.
    ///
    /// Square roots of distinct squarefree integers are linearly independent
    /// over ℚ, so the sum is zero iff every component is.
    pub fn trace_by_radicand(&self) -> BTreeMap<u64, i128> {
        let mut out = BTreeMap::new();
        for (v, m) in self.iter() {
            *out.entry(v.radicand()).or_insert(0) += v.coefficient() as i128 * m as i128;
        }
        out
    }

    pub fn is_traceless(&self) -> bool {
        self.trace_by_radicand().values().all(|&t| t == 0)
    }

    /// Serialisable records, ascending by value.
    pub fn records(&self) -> Vec<SpectrumRecord> {
        self.iter()
            .map(|(v, m)| SpectrumRecord {
                z: Some(v.coefficient()),
                s: Some(v.radicand()),
                value: format_decimal(v.value()),
                multiplicity: m,
            })
            .collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^({m})")?;
            }
        }
        write!(f, "}}")
    }
}

/// One eigenvalue of a serialised spectrum. `z` and `s` are absent for numeric entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumRecord {
    pub z: Option<i64>,
    pub s: Option<u64>,
    pub value: String,
    pub multiplicity: u64,
}

/// Fixed-point rendering with 12 significant digits for `|x| ≥ 1` and 11
/// decimals below that, so round-off noise around zero prints as zero.
/// Never prints `-0`.
pub fn format_decimal(x: f64) -> String {
    const DIGITS: i32 = 12;
    let magnitude = if x == 0.0 { 1 } else { x.abs().log10().floor() as i32 + 1 };
    let decimals = (DIGITS - magnitude).clamp(0, DIGITS - 1) as usize;
    let text = format!("{x:.decimals$}");
    // values like -1e-13 round to "-0.000…"
    if text.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        text.trim_start_matches('-').to_string()
    } else {
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(z: i64) -> Surd {
        Surd::integer(z)
    }

    fn sp(entries: &[(Surd, u64)]) -> Spectrum {
        Spectrum::from_entries(entries.iter().copied())
    }

    fn sp7() -> Spectrum {
        let r7 = Surd::sqrt(7);
        sp(&[(-r7, 8), (int(-1), 7), (r7, 8), (int(7), 1)])
    }

    #[test]
    fn scaling() {
        let r7 = Surd::sqrt(7);
        let scaled = sp7().scale(7).unwrap();
        assert_eq!(scaled, sp(&[(-r7 * int(7), 8), (int(-7), 7), (r7 * int(7), 8), (int(49), 1)]));
        assert_eq!(sp7().scale(1).unwrap(), sp7());
        let sp4 = sp(&[(int(-2), 2), (int(0), 3), (int(4), 1)]);
        assert_eq!(sp4.scale(2).unwrap(), sp(&[(int(-4), 2), (int(0), 3), (int(8), 1)]));
        assert!(sp4.scale(0).is_err());
    }

    #[test]
    fn products() {
        let r7 = Surd::sqrt(7);
        let sp2 = sp(&[(int(-1), 2), (int(2), 1)]);
        let expected = sp(&[
            (int(-7), 2),
            (Surd::new(-2, 7), 8),
            (int(-2), 7),
            (-r7, 16),
            (int(1), 14),
            (r7, 16),
            (Surd::new(2, 7), 8),
            (int(14), 1),
        ]);
        assert_eq!(sp2.product(&sp7()), expected);

        let sp4 = sp(&[(int(-2), 2), (int(0), 3), (int(4), 1)]);
        let p = sp4.product(&sp7());
        // 0^(3) against all 24 eigenvalues of sp₃(7)
        assert_eq!(p.multiplicity(&Surd::ZERO), 72);
        assert_eq!(p.multiplicity(&Surd::new(-2, 7)), 16);
        assert_eq!(p.total_multiplicity(), 6 * 24);

        let unit = sp(&[(int(1), 1)]);
        assert_eq!(unit.product(&sp7()), sp7());
    }

    #[test]
    fn unions() {
        let a = sp(&[(Surd::new(-2, 7), 16)]);
        let b = sp(&[(Surd::new(-2, 7), 72)]);
        assert_eq!(a.union(&b), sp(&[(Surd::new(-2, 7), 88)]));
        assert_eq!(sp7().union(&Spectrum::new()), sp7());
    }

    #[test]
    fn trace_and_extremes() {
        assert!(sp7().is_traceless());
        assert!(!sp(&[(int(1), 1)]).is_traceless());
        assert_eq!(sp7().largest(), Some(int(7)));
        assert_eq!(sp7().second_largest_modulus(7), Some(Surd::sqrt(7)));
    }

    #[test]
    fn display_and_records() {
        assert_eq!(sp7().to_string(), "{-√7^(8), -1^(7), √7^(8), 7}");
        let recs = sp7().records();
        assert_eq!(recs[0].value, "-2.64575131106");
        assert_eq!(recs[3].value, "7.00000000000");
        assert_eq!(format_decimal(49.0), "49.0000000000");
        assert_eq!(format_decimal(-1e-13), "0.00000000000");
        assert_eq!(format_decimal(0.0), "0.00000000000");
        assert_eq!(format_decimal(-0.5), "-0.50000000000");
        assert_eq!(format_decimal(1234.5), "1234.50000000");
    }

    fn spectrum() -> impl Strategy<Value = Spectrum> {
        prop::collection::vec(((-6i64..=6), (1u64..=12), (1u64..=5)), 0..6).prop_map(|v| {
            Spectrum::from_entries(v.into_iter().map(|(z, s, m)| (Surd::new(z, s), m)))
        })
    }

    proptest! {
        #[test]
        fn union_is_commutative_and_associative(a in spectrum(), b in spectrum(), c in spectrum()) {
            prop_assert_eq!(a.union(&b), b.union(&a));
            prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
            prop_assert_eq!(a.union(&b).total_multiplicity(), a.total_multiplicity() + b.total_multiplicity());
        }

        #[test]
        fn product_multiplies_sizes(a in spectrum(), b in spectrum()) {
            let p = a.product(&b);
            prop_assert_eq!(p.total_multiplicity(), a.total_multiplicity() * b.total_multiplicity());
            prop_assert_eq!(p, b.product(&a));
        }
    }
}
