//! Vertices and underlying graphs of the Farey maps M₃(n).
//!
//! A vertex `[a/c]ₙ` is a pair of residues with `gcd(a, c, n) = 1`, taken up to
//! simultaneous negation. Two vertices `[a/c]ₙ` and `[b/d]ₙ` are adjacent iff
//! `ad - bc ≡ ±1 (mod n)`.

use std::fmt;

use crate::arith::{factorize, gcd, is_prime, mod_inverse, residue};
use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::verdict::Verdict;

/// Largest level for which `build_graph` runs by default (1,740 vertices at n = 59).
pub const DEFAULT_GRAPH_CAP: u64 = 60;

/// The vertex `[a/c]ₙ` of M₃(n), stored by its lexicographically smaller sign representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyVertex {
    n: u64,
    a: u64,
    c: u64,
}

impl FareyVertex {
    pub fn new(a: i64, c: i64, n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        let (a, c) = (residue(a, n), residue(c, n));
        if gcd(gcd(a, c), n) != 1 {
            return Err(Error::NotPrimitive { a, c, n });
        }
        Ok(Self::canonical(a, c, n))
    }

    fn canonical(a: u64, c: u64, n: u64) -> Self {
        let neg = ((n - a) % n, (n - c) % n);
        let (a, c) = (a, c).min(neg);
        Self { n, a, c }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Canonical numerator and denominator residues.
    pub fn pair(&self) -> (u64, u64) {
        (self.a, self.c)
    }

    pub fn is_pole(&self) -> bool {
        self.c == 0
    }

    /// The vertex `[a/c]ₘ` for a divisor `m` of the level.
    pub fn reduce(&self, m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::ModulusTooSmall(m));
        }
        if self.n % m != 0 {
            return Err(Error::NotDivisor { n: self.n, m });
        }
        Ok(Self::canonical(self.a % m, self.c % m, m))
    }

    /// The vertex `[ua/uc]ₙ` for a unit `u`.
    pub fn scale(&self, u: u64) -> Result<Self> {
        Self::new((u * self.a) as i64, (u * self.c) as i64, self.n)
    }

    /// `ad - bc mod n` for the stored representatives.
    pub fn determinant_with(&self, other: &Self) -> u64 {
        let n = self.n;
        (self.a * other.c + n * n - other.a * self.c % n) % n
    }
}

impl fmt::Display for FareyVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}@{}", self.a, self.c, self.n)
    }
}

/// Number of vertices of M₃(n): `(n²/2) ∏_{p|n} (1 - 1/p²)`, and 3 for n = 2.
pub fn vertex_count(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    if n == 2 {
        return Ok(3);
    }
    let mut count = n * n;
    for (p, _) in factorize(n) {
        count = count / (p * p) * (p * p - 1);
    }
    Ok(count / 2)
}

/// Image of a vertex of M₃(p) in `{0, …, p}`: `p` for a pole, `ac⁻¹` otherwise.
pub(crate) fn slope(v: &FareyVertex) -> u64 {
    let p = v.n;
    match mod_inverse(v.c, p) {
        None => p,
        Some(inv) => v.a * inv % p,
    }
}

/// Position of `v` in the poles-and-stars order of M₃(p), p prime.
///
/// The `(p+1)`-vertex star of the `k`-th pole `[k/0]` (1 ≤ k ≤ (p-1)/2, or k = 1
/// when p = 2) occupies positions `(k-1)(p+1) .. k(p+1)`, and within a star a
/// vertex sits at its slope. Vertices with equal slope are then a multiple of
/// `p+1` positions apart.
fn star_position(v: &FareyVertex) -> u64 {
    let p = v.n;
    let star = if v.c == 0 {
        v.a
    } else {
        let inv = mod_inverse(v.c, p).expect("prime level");
        inv.min(p - inv)
    };
    (star - 1) * (p + 1) + slope(v)
}

/// All vertices of M₃(n).
///
/// For prime `n` the order is poles-and-stars (see [`star_position`]); otherwise
/// vertices are sorted lexicographically by canonical `(a, c)`.
pub fn enumerate_vertices(n: u64) -> Result<Vec<FareyVertex>> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let mut out = Vec::new();
    for a in 0..n {
        for c in 0..n {
            if gcd(gcd(a, c), n) == 1 {
                let v = FareyVertex::canonical(a, c, n);
                if v.pair() == (a, c) {
                    out.push(v);
                }
            }
        }
    }
    if is_prime(n) {
        out.sort_by_key(star_position);
    }
    Ok(out)
}

/// `[a/c]ₙ ~ [b/d]ₙ` iff `ad - bc ≡ ±1 (mod n)`.
pub fn adjacent(u: &FareyVertex, v: &FareyVertex) -> Result<bool> {
    if u.n != v.n {
        return Err(Error::ModulusMismatch(u.n, v.n));
    }
    let n = u.n;
    // Flipping the sign of one representative maps Δ to -Δ; try both explicitly.
    let det = u.determinant_with(v);
    let flipped = (n - det) % n;
    Ok(det == 1 % n || flipped == 1 % n)
}

fn check_graph_cap(n: u64, cap: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// The underlying graph 𝒢₃(n) of M₃(n).
pub fn build_graph(n: u64) -> Result<RegularGraph<FareyVertex>> {
    build_graph_capped(n, DEFAULT_GRAPH_CAP)
}

pub fn build_graph_capped(n: u64, cap: u64) -> Result<RegularGraph<FareyVertex>> {
    check_graph_cap(n, cap)?;
    RegularGraph::from_predicate(enumerate_vertices(n)?, |u, v| {
        adjacent(u, v).expect("same level")
    })
}

/// The poles `[a/0]ₙ`, `gcd(a, n) = 1`, sorted by `a`.
pub fn poles(n: u64) -> Result<Vec<FareyVertex>> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let mut out: Vec<FareyVertex> = (1..n)
        .filter(|&a| gcd(a, n) == 1)
        .map(|a| FareyVertex::canonical(a, 0, n))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A vertex together with its neighbours, as graph indices.
pub fn star(graph: &RegularGraph<FareyVertex>, vertex: usize) -> Vec<usize> {
    let mut out = vec![vertex];
    out.extend_from_slice(graph.neighbours(vertex));
    out.sort_unstable();
    out
}

/// Number of walks of length 2 between `[1/0]ₙ` and `[b/d]ₙ`.
///
/// With `r = gcd(d, n)`, each of the congruences `xd ≡ b ± 1 (mod n)` has `r`
/// solutions when `r | b ± 1` and none otherwise. At n = 2 the two
/// congruences coincide and are counted once.
pub fn walks2_count(n: u64, b: i64, d: i64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let (bn, dn) = (residue(b, n), residue(d, n));
    if gcd(gcd(bn, dn), n) != 1 {
        return Err(Error::NotPrimitive { a: bn, c: dn, n });
    }
    let r = gcd(dn, n);
    let count = if r == 1 {
        2
    } else if r == 2 && bn % 2 == 1 {
        4
    } else {
        let plus = residue(b + 1, r) == 0;
        let minus = residue(b - 1, r) == 0;
        r * (plus as u64 + minus as u64)
    };
    Ok(if n == 2 { count / 2 } else { count })
}

/// Checks [`walks2_count`] against the `([1/0]ₙ, v)` row of `A²` for every vertex `v`.
pub fn verify_walk_counts(graph: &RegularGraph<FareyVertex>) -> Result<Verdict> {
    let n = graph.label(0).modulus();
    let size = graph.vertex_count();
    let origin = graph
        .index_of(&FareyVertex::new(1, 0, n)?)
        .expect("[1/0] is a vertex");
    let squared = graph.adjacency_squared();
    for (j, v) in graph.labels().iter().enumerate() {
        let (b, d) = v.pair();
        let predicted = walks2_count(n, b as i64, d as i64)?;
        let observed = squared[origin * size + j] as u64;
        if predicted != observed {
            return Ok(Verdict::fail(format!(
                "n={n}: walks to {v}: formula {predicted}, A² entry {observed}"
            )));
        }
    }
    Ok(Verdict::Pass)
}

/// Checks that `A² - nI` vanishes off the diagonal wherever `ad - bc ≡ 0 (mod n)`.
pub fn verify_zero_determinant_entries(graph: &RegularGraph<FareyVertex>) -> Result<Verdict> {
    let size = graph.vertex_count();
    let squared = graph.adjacency_squared();
    for i in 0..size {
        for j in 0..size {
            let (u, v) = (graph.label(i), graph.label(j));
            if i != j && u.determinant_with(v) == 0 && squared[i * size + j] != 0 {
                return Ok(Verdict::fail(format!(
                    "A² entry ({u}, {v}) is {} although ad - bc ≡ 0",
                    squared[i * size + j]
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(a: i64, c: i64, n: u64) -> FareyVertex {
        FareyVertex::new(a, c, n).unwrap()
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(vertex_count(2).unwrap(), 3);
        assert_eq!(vertex_count(3).unwrap(), 4);
        assert_eq!(vertex_count(4).unwrap(), 6);
        assert_eq!(vertex_count(49).unwrap(), 8 + 511 + 144 + 504 + 8 + 1);
        assert_eq!(vertex_count(1), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn enumeration_matches_count() {
        for n in 2..=60 {
            assert_eq!(enumerate_vertices(n).unwrap().len() as u64, vertex_count(n).unwrap());
        }
    }

    #[test]
    fn small_vertex_sets() {
        let mut two = enumerate_vertices(2).unwrap();
        two.sort();
        let mut expected = vec![fv(1, 0, 2), fv(0, 1, 2), fv(1, 1, 2)];
        expected.sort();
        assert_eq!(two, expected);

        let five = enumerate_vertices(5).unwrap();
        assert!(five.contains(&fv(2, 2, 5)) && five.contains(&fv(1, 1, 5)));
        assert_ne!(fv(2, 2, 5), fv(1, 1, 5));
        assert!(five.contains(&fv(2, 0, 5)));
        assert_ne!(fv(2, 0, 5), fv(1, 0, 5));
        assert_eq!(fv(4, 0, 5), fv(1, 0, 5));
    }

    #[test]
    fn non_primitive_pairs_are_rejected() {
        assert!(matches!(FareyVertex::new(2, 0, 4), Err(Error::NotPrimitive { .. })));
        assert!(matches!(FareyVertex::new(3, 6, 9), Err(Error::NotPrimitive { .. })));
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(&fv(1, 0, 4), &fv(3, 1, 4)).unwrap());
        assert!(!adjacent(&fv(1, 0, 4), &fv(1, 2, 4)).unwrap());
        assert_eq!(adjacent(&fv(1, 0, 4), &fv(1, 0, 5)), Err(Error::ModulusMismatch(4, 5)));
        for n in 2..=12 {
            for v in enumerate_vertices(n).unwrap() {
                assert!(!adjacent(&v, &v).unwrap());
            }
        }
    }

    #[test]
    fn adjacency_is_sign_invariant() {
        for n in [5u64, 8, 9] {
            let vs = enumerate_vertices(n).unwrap();
            for u in &vs {
                for v in &vs {
                    let (a, c) = u.pair();
                    let (b, d) = v.pair();
                    let raw = |x: i64, y: i64, z: i64, w: i64| residue(x * w - z * y, n);
                    let n1 = (1 % n, n - 1);
                    for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let det = raw(sa * a as i64, sa * c as i64, sb * b as i64, sb * d as i64);
                        assert_eq!(det == n1.0 || det == n1.1, adjacent(u, v).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn small_graphs() {
        let k3 = build_graph(2).unwrap();
        assert_eq!((k3.vertex_count(), k3.degree()), (3, 2));
        let k4 = build_graph(3).unwrap();
        assert_eq!((k4.vertex_count(), k4.degree()), (4, 3));
        let icosahedron = build_graph(5).unwrap();
        assert_eq!((icosahedron.vertex_count(), icosahedron.degree()), (12, 5));
        assert_eq!(icosahedron.edge_count(), 30);
        assert!(matches!(build_graph(61), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn graphs_are_regular_and_connected() {
        for n in 2..=30 {
            let g = build_graph(n).unwrap();
            assert_eq!(g.degree() as u64, n);
            assert!(g.is_connected(), "n = {n}");
        }
    }

    #[test]
    fn pole_lists() {
        assert_eq!(poles(5).unwrap(), vec![fv(1, 0, 5), fv(2, 0, 5)]);
        assert_eq!(poles(7).unwrap().len(), 3);
        assert_eq!(poles(2).unwrap(), vec![fv(1, 0, 2)]);
    }

    #[test]
    fn stars_of_poles_partition_prime_levels() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = build_graph(p).unwrap();
            let mut covered = vec![0; g.vertex_count()];
            for pole in poles(p).unwrap() {
                let s = star(&g, g.index_of(&pole).unwrap());
                assert_eq!(s.len() as u64, p + 1);
                for i in s {
                    covered[i] += 1;
                }
            }
            assert!(covered.iter().all(|&c| c == 1), "p = {p}");
        }
    }

    #[test]
    fn prime_order_groups_stars() {
        let vs = enumerate_vertices(7).unwrap();
        assert_eq!(vs[7], fv(1, 0, 7));
        assert_eq!(vs[15], fv(2, 0, 7));
        let positions: Vec<u64> = vs.iter().map(star_position).collect();
        assert_eq!(positions, (0..24).collect::<Vec<_>>());
    }

    #[test]
    fn walk_count_examples() {
        assert_eq!(walks2_count(4, 1, 2).unwrap(), 4);
        assert_eq!(walks2_count(9, 1, 3).unwrap(), 3);
        assert_eq!(walks2_count(5, 0, 1).unwrap(), 2);
        assert!(walks2_count(4, 2, 0).is_err());
    }

    /// Common neighbours of `[1/0]` and `v`, counted directly on vertex labels.
    fn common_neighbours(n: u64, v: &FareyVertex) -> u64 {
        let origin = fv(1, 0, n);
        enumerate_vertices(n)
            .unwrap()
            .iter()
            .filter(|w| adjacent(&origin, w).unwrap() && adjacent(w, v).unwrap())
            .count() as u64
    }

    #[test]
    fn walk_counts_match_brute_force() {
        for n in 2..=12 {
            for v in enumerate_vertices(n).unwrap() {
                let (b, d) = v.pair();
                assert_eq!(walks2_count(n, b as i64, d as i64).unwrap(), common_neighbours(n, &v));
            }
        }
        for n in 2..=20 {
            assert!(verify_walk_counts(&build_graph(n).unwrap()).unwrap().is_pass());
            assert!(verify_zero_determinant_entries(&build_graph(n).unwrap()).unwrap().is_pass());
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(build_graph(2).unwrap().diameter().unwrap(), 1);
        assert_eq!(build_graph(4).unwrap().diameter().unwrap(), 2);
        assert_eq!(build_graph(5).unwrap().diameter().unwrap(), 3);
        assert_eq!(build_graph(7).unwrap().diameter().unwrap(), 3);
        // K3 ⊗ K4 is the one level above 4 with diameter 2.
        assert_eq!(build_graph(6).unwrap().diameter().unwrap(), 2);
        for n in (5..=24).filter(|&n| n != 6) {
            assert_eq!(build_graph(n).unwrap().diameter().unwrap(), 3, "n = {n}");
        }
    }

    #[test]
    fn export_format() {
        let text = build_graph(2).unwrap().to_adjacency_list();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.contains(&"1/0@2: 0/1@2 1/1@2"));
    }
}
