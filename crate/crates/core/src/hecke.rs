//! The bipartite Hecke graphs of the maps M₄(n) and M₆(n).
//!
//! Every Farey class `[a/c]ₙ` gives one even vertex `[a/c√λ]` and one odd
//! vertex `[a√λ/c]`, with `λ = 2` for `q = 4` and `λ = 3` for `q = 6`. An even
//! `[a/c√λ]` and an odd `[b√λ/d]` are adjacent iff `ad − λbc ≡ ±1 (mod n)`.

use std::fmt;

use crate::arith::{gcd, is_prime, residue};
use crate::coverings::{check_graph_covering, fibers, index_map};
use crate::error::{Error, Result};
use crate::farey::{build_graph, enumerate_vertices, FareyVertex, DEFAULT_GRAPH_CAP};
use crate::graph::RegularGraph;
use crate::spectra::{closed_form_spectrum, ramanujan_bound_holds, Spectrum};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeckeFamily {
    /// `q = 4`, multiplier 2, odd levels.
    Four,
    /// `q = 6`, multiplier 3, levels prime to 3.
    Six,
}

impl HeckeFamily {
    pub fn from_q(q: u64) -> Result<Self> {
        match q {
            4 => Ok(Self::Four),
            6 => Ok(Self::Six),
            _ => Err(Error::InvalidParameter(format!("Hecke family must be 4 or 6, got {q}"))),
        }
    }

    pub fn q(self) -> u64 {
        match self {
            Self::Four => 4,
            Self::Six => 6,
        }
    }

    /// The square `λ²` of the translation length: 2 or 3.
    pub fn multiplier(self) -> u64 {
        match self {
            Self::Four => 2,
            Self::Six => 3,
        }
    }

    /// Whether level `n` is admissible: odd for `q = 4`, prime to 3 for `q = 6`.
    pub fn admits(self, n: u64) -> bool {
        n >= 2 && gcd(n, self.multiplier()) == 1
    }

    fn check(self, n: u64) -> Result<()> {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        if !self.admits(n) {
            return Err(Error::InvalidParameter(format!(
                "level {n} is not admissible for q = {}: it must be prime to {}",
                self.q(),
                self.multiplier()
            )));
        }
        if n > DEFAULT_GRAPH_CAP {
            return Err(Error::CapExceeded { n, cap: DEFAULT_GRAPH_CAP });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeckeVertex {
    family: HeckeFamily,
    parity: Parity,
    class: FareyVertex,
}

impl HeckeVertex {
    pub fn new(family: HeckeFamily, parity: Parity, a: i64, c: i64, n: u64) -> Result<Self> {
        family.check(n)?;
        Ok(Self { family, parity, class: FareyVertex::new(a, c, n)? })
    }

    pub fn family(&self) -> HeckeFamily {
        self.family
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// The underlying residue class `(a, c)` as a Farey vertex.
    pub fn class(&self) -> FareyVertex {
        self.class
    }

    pub fn modulus(&self) -> u64 {
        self.class.modulus()
    }
}

impl fmt::Display for HeckeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, c) = self.class.pair();
        let (n, k) = (self.modulus(), self.family.multiplier());
        match self.parity {
            Parity::Even => write!(f, "{a}/{c}√{k}@{n}"),
            Parity::Odd => write!(f, "{a}√{k}/{c}@{n}"),
        }
    }
}

/// All even vertices followed by all odd vertices, each in Farey enumeration order.
pub fn enumerate_hecke_vertices(family: HeckeFamily, n: u64) -> Result<Vec<HeckeVertex>> {
    family.check(n)?;
    let classes = enumerate_vertices(n)?;
    Ok([Parity::Even, Parity::Odd]
        .into_iter()
        .flat_map(|parity| classes.iter().map(move |&class| HeckeVertex { family, parity, class }))
        .collect())
}

/// Even `[a/c√λ]` and odd `[b√λ/d]` are adjacent iff `ad − λbc ≡ ±1 (mod n)`.
pub fn hecke_adjacent(u: &HeckeVertex, v: &HeckeVertex) -> Result<bool> {
    if u.family != v.family {
        return Err(Error::InvalidParameter("Hecke vertices from different families".into()));
    }
    if u.modulus() != v.modulus() {
        return Err(Error::ModulusMismatch(u.modulus(), v.modulus()));
    }
    let (even, odd) = match (u.parity, v.parity) {
        (Parity::Even, Parity::Odd) => (u, v),
        (Parity::Odd, Parity::Even) => (v, u),
        _ => return Ok(false),
    };
    let n = u.modulus();
    let (a, c) = even.class.pair();
    let (b, d) = odd.class.pair();
    let det = residue(a as i64 * d as i64 - u.family.multiplier() as i64 * b as i64 * c as i64, n);
    Ok(det == 1 || det == n - 1)
}

pub fn build_hecke_graph(family: HeckeFamily, n: u64) -> Result<RegularGraph<HeckeVertex>> {
    let vertices = enumerate_hecke_vertices(family, n)?;
    RegularGraph::from_predicate(vertices, |u, v| hecke_adjacent(u, v).expect("same family and level"))
}

/// Projection onto the Farey graph: `[a/c√λ] ↦ [a/c]` and `[b√λ/d] ↦ [λb/d]`.
pub fn hecke_projection(v: &HeckeVertex) -> FareyVertex {
    let (a, c) = v.class.pair();
    let n = v.modulus();
    match v.parity {
        Parity::Even => v.class,
        Parity::Odd => FareyVertex::new((v.family.multiplier() * a) as i64, c as i64, n)
            .expect("multiplier is a unit at admissible levels"),
    }
}

/// The projection is two-to-one, separates parities, and is a graph covering.
pub fn verify_hecke_covering(family: HeckeFamily, n: u64) -> Result<Verdict> {
    let cover = build_hecke_graph(family, n)?;
    let base = build_graph(n)?;
    let map = index_map(&cover, &base, |v| Ok(hecke_projection(v)))?;
    for (b, fiber) in fibers(&map, base.vertex_count()).iter().enumerate() {
        let parities: Vec<Parity> = fiber.iter().map(|&w| cover.label(w).parity).collect();
        if parities.len() != 2 || parities[0] == parities[1] {
            return Ok(Verdict::fail(format!(
                "fiber of {} has parities {parities:?}, expected one even and one odd vertex",
                base.label(b)
            )));
        }
    }
    Ok(check_graph_covering(&cover, &base, &map))
}

/// `−sp₃(n) ∪ sp₃(n)`.
pub fn hecke_spectrum(family: HeckeFamily, n: u64) -> Result<Spectrum> {
    family.check(n)?;
    let sp = closed_form_spectrum(n)?;
    Ok(sp.negated().union(&sp))
}

pub fn hecke_diameter(family: HeckeFamily, n: u64) -> Result<usize> {
    build_hecke_graph(family, n)?.diameter()
}

/// Ramanujan test at a prime level, ignoring the trivial eigenvalues `±p`.
pub fn hecke_ramanujan(family: HeckeFamily, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let sp = hecke_spectrum(family, p)?;
    let lambda = sp.second_largest_modulus(p).expect("spectrum has nontrivial eigenvalues");
    Ok(ramanujan_bound_holds(lambda, p))
}
