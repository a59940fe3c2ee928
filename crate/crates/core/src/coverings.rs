//! Coverings between Farey graphs and their products.
//!
//! A covering is given as a vertex map `cover index -> base index`. Two checks
//! are provided: the fiber-adjacency count of a `d`-fold ramified map covering,
//! and the closed-neighbourhood bijection of an (unramified) graph covering.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::arith::{crt, gcd, is_prime, mod_inverse};
use crate::error::{Error, Result};
use crate::farey::{build_graph, enumerate_vertices, vertex_count, FareyVertex};
use crate::graph::{complete_graph, Pair, RegularGraph};
use crate::psl2::{closure, group_order, ProjectiveMatrix, DEFAULT_DART_CAP};
use crate::verdict::Verdict;

pub use crate::graph::tensor_product;

fn check_divisor(n: u64, m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    if n % m != 0 {
        return Err(Error::NotDivisor { n, m });
    }
    Ok(())
}

/// `[a/c]ₙ ↦ [a/c]ₘ` over every vertex of level `n`, in enumeration order.
pub fn reduction_vertex_map(n: u64, m: u64) -> Result<Vec<(FareyVertex, FareyVertex)>> {
    check_divisor(n, m)?;
    enumerate_vertices(n)?.into_iter().map(|v| Ok((v, v.reduce(m)?))).collect()
}

/// Index form of a vertex map between two labelled graphs.
pub fn index_map<A, B, F>(cover: &RegularGraph<A>, base: &RegularGraph<B>, f: F) -> Result<Vec<usize>>
where
    B: Eq + Hash + Clone,
    F: Fn(&A) -> Result<B>,
{
    let lookup: HashMap<B, usize> = base.labels().iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    cover
        .labels()
        .iter()
        .map(|l| {
            let image = f(l)?;
            lookup
                .get(&image)
                .copied()
                .ok_or_else(|| Error::InvalidParameter("vertex image is not a base vertex".into()))
        })
        .collect()
}

/// Members of each fiber, indexed by base vertex.
pub fn fibers(map: &[usize], base_size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); base_size];
    for (w, &v) in map.iter().enumerate() {
        out[v].push(w);
    }
    out
}

/// Every cover vertex over `v` is adjacent to exactly `d` vertices over each
/// neighbour of `v`, and to nothing else.
pub fn check_fiber_adjacency<A, B>(
    cover: &RegularGraph<A>,
    base: &RegularGraph<B>,
    map: &[usize],
    d: usize,
) -> Verdict {
    if cover.degree() != d * base.degree() {
        return Verdict::fail(format!(
            "cover degree {} is not {d} times base degree {}",
            cover.degree(),
            base.degree()
        ));
    }
    let fibers = fibers(map, base.vertex_count());
    if let Some(v) = fibers.iter().position(Vec::is_empty) {
        return Verdict::fail(format!("base vertex {v} has an empty fiber"));
    }
    for (v, fiber) in fibers.iter().enumerate() {
        for &w in fiber {
            for &v2 in base.neighbours(v) {
                let count = cover.neighbours(w).iter().filter(|&&u| map[u] == v2).count();
                if count != d {
                    return Verdict::fail(format!(
                        "base edge ({v}, {v2}): cover vertex {w} meets the fiber of {v2} {count} times, expected {d}"
                    ));
                }
            }
        }
    }
    Verdict::Pass
}

/// Graph covering: each closed neighbourhood maps bijectively onto the closed
/// neighbourhood of its image.
pub fn check_graph_covering<A, B>(cover: &RegularGraph<A>, base: &RegularGraph<B>, map: &[usize]) -> Verdict {
    for w in 0..cover.vertex_count() {
        let v = map[w];
        let mut image: Vec<usize> = cover.neighbours(w).iter().map(|&u| map[u]).collect();
        image.push(v);
        image.sort_unstable();
        let mut target = base.neighbours(v).to_vec();
        target.push(v);
        target.sort_unstable();
        if image != target {
            return Verdict::fail(format!(
                "closed neighbourhood of cover vertex {w} maps to {image:?}, expected {target:?}"
            ));
        }
    }
    Verdict::Pass
}

/// Level reduction from `n` to `m` as a fiber-adjacency covering with `d = n/m`.
pub fn verify_map_covering(n: u64, m: u64) -> Result<Verdict> {
    check_divisor(n, m)?;
    let cover = build_graph(n)?;
    let base = build_graph(m)?;
    let map = index_map(&cover, &base, |v| v.reduce(m))?;
    let sizes: Vec<usize> = fibers(&map, base.vertex_count()).iter().map(Vec::len).collect();
    let expected = (vertex_count(n)? / vertex_count(m)?) as usize;
    if let Some(v) = sizes.iter().position(|&s| s != expected) {
        return Ok(Verdict::fail(format!("fiber of base vertex {v} has {} members, expected {expected}", sizes[v])));
    }
    Ok(check_fiber_adjacency(&cover, &base, &map, (n / m) as usize))
}

/// Kernel order of the covering from level `n` to level `m`: `d³`, or 4 when `d = 2`.
pub fn claimed_kernel_order(n: u64, m: u64) -> Result<u64> {
    check_divisor(n, m)?;
    let d = n / m;
    Ok(if d == 2 { 4 } else { d * d * d })
}

/// `|PSL₂(ℤ/n)| / |PSL₂(ℤ/m)|`, the kernel order forced by surjectivity of reduction.
pub fn kernel_index(n: u64, m: u64) -> Result<u64> {
    check_divisor(n, m)?;
    Ok(group_order(n)? / group_order(m)?)
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// `[a/0]ₚ ↦ p` and `[a/b]ₚ ↦ ab⁻¹`, onto the vertices `0..=p` of `K_{p+1}`.
pub fn complete_graph_projection(p: u64) -> Result<Vec<(FareyVertex, u64)>> {
    check_odd_prime(p)?;
    let vertices = enumerate_vertices(p)?;
    Ok(vertices.into_iter().map(|v| (v, project_to_complete(&v))).collect())
}

fn project_to_complete(v: &FareyVertex) -> u64 {
    let p = v.modulus();
    let (a, b) = v.pair();
    match mod_inverse(b, p) {
        None => p,
        Some(inv) => a * inv % p,
    }
}

/// The projection is a `(p−1)/2`-sheeted graph covering of `K_{p+1}`.
pub fn verify_complete_graph_covering(p: u64) -> Result<Verdict> {
    check_odd_prime(p)?;
    let cover = build_graph(p)?;
    let base = complete_graph(p as usize + 1);
    let map = index_map(&cover, &base, |v| Ok(project_to_complete(v) as usize))?;
    let sheets = ((p - 1) / 2) as usize;
    if let Some((v, f)) = fibers(&map, base.vertex_count()).iter().enumerate().find(|(_, f)| f.len() != sheets) {
        return Ok(Verdict::fail(format!("fiber of {v} has {} members, expected {sheets}", f.len())));
    }
    Ok(check_graph_covering(&cover, &base, &map))
}

/// Darts of the parallel product: the subgroup of `G(n₁) × G(n₂)` generated by
/// `(X, X)` and `(Y, Y)`.
pub fn parallel_product_darts(n1: u64, n2: u64) -> Result<Vec<(ProjectiveMatrix, ProjectiveMatrix)>> {
    for n in [n1, n2] {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        if n > DEFAULT_DART_CAP {
            return Err(Error::CapExceeded { n, cap: DEFAULT_DART_CAP });
        }
    }
    let gens = [
        (ProjectiveMatrix::x(n1)?, ProjectiveMatrix::x(n2)?),
        (ProjectiveMatrix::y(n1)?, ProjectiveMatrix::y(n2)?),
    ];
    let identity = (ProjectiveMatrix::identity(n1)?, ProjectiveMatrix::identity(n2)?);
    Ok(closure(&gens, identity, |g, h| {
        (g.0.multiply(&h.0).expect("same modulus"), g.1.multiply(&h.1).expect("same modulus"))
    }))
}

/// The unit `u` mod `lm` with `u ≡ 1 (mod l)` and `u ≡ −1 (mod m)`.
pub fn double_cover_unit(l: u64, m: u64) -> Result<u64> {
    if l < 3 || m < 3 {
        return Err(Error::InvalidParameter(format!("double cover needs l, m >= 3, got ({l}, {m})")));
    }
    crt(1, l, m - 1, m).ok_or(Error::NotCoprime(l, m))
}

fn twice_odd(n: u64) -> bool {
    n % 4 == 2
}

/// Level `lm` double covers the tensor product of levels `l` and `m`: the map
/// `[a/c] ↦ ([a/c]ₗ, [a/c]ₘ)` is two-to-one with `[a/c]` and `[ua/uc]` in each
/// fiber, and it is a graph covering.
pub fn verify_double_cover(l: u64, m: u64) -> Result<Verdict> {
    if twice_odd(l) || twice_odd(m) {
        return Err(Error::InvalidParameter(format!("neither of ({l}, {m}) may be twice an odd integer")));
    }
    if gcd(l, m) != 1 {
        return Err(Error::NotCoprime(l, m));
    }
    let u = double_cover_unit(l, m)?;
    let n = l * m;
    let cover = build_graph(n)?;
    let base = tensor_product(&build_graph(l)?, &build_graph(m)?);
    let map = index_map(&cover, &base, |v| Ok(Pair(v.reduce(l)?, v.reduce(m)?)))?;

    let fibers = fibers(&map, base.vertex_count());
    let mut image_size = 0;
    for (b, fiber) in fibers.iter().enumerate() {
        match fiber.as_slice() {
            [] => {}
            &[w1, w2] => {
                image_size += 1;
                let partner = cover.label(w1).scale(u)?;
                if partner != *cover.label(w2) {
                    return Ok(Verdict::fail(format!(
                        "fiber of {} is {{{}, {}}}, but the partner of {} is {}",
                        base.label(b),
                        cover.label(w1),
                        cover.label(w2),
                        cover.label(w1),
                        partner
                    )));
                }
            }
            other => {
                return Ok(Verdict::fail(format!("fiber of {} has {} members", base.label(b), other.len())));
            }
        }
    }
    if 2 * image_size != cover.vertex_count() {
        return Ok(Verdict::fail(format!("image has {image_size} vertices for {} cover vertices", cover.vertex_count())));
    }
    if image_size != base.vertex_count() {
        return Ok(Verdict::fail(format!(
            "image has {image_size} of the {} product vertices",
            base.vertex_count()
        )));
    }
    Ok(check_fiber_adjacency(&cover, &base, &map, 1).and_then(|| check_graph_covering(&cover, &base, &map)))
}

/// Fiber sizes of a vertex map, as `size -> number of fibers of that size`.
pub fn fiber_size_histogram<V: Ord + Clone>(images: impl IntoIterator<Item = V>) -> BTreeMap<usize, usize> {
    let mut counts: BTreeMap<V, usize> = BTreeMap::new();
    for v in images {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut out = BTreeMap::new();
    for size in counts.into_values() {
        *out.entry(size).or_insert(0) += 1;
    }
    out
}
