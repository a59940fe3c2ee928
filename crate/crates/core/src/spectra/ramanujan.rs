use super::{closed_form_spectrum, Surd};
use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::farey::{build_graph, vertex_count};
use crate::verdict::Verdict;

/// Second-largest eigenvalue modulus of the Farey graph of level `n > 4`.
///
/// With `p` the smallest prime factor of `n` this is `n/2` for `p = 2` and
/// `n/√p` for `p > 3`. For `p = 3` it is `n/3`, unless the next prime factor
/// `q` is 5 or 7, where `n/√q > n/3` wins.
pub fn lambda1(n: u64) -> Result<Surd> {
    if n <= 4 {
        return Err(Error::InvalidParameter(format!("lambda1 needs n > 4, got {n}")));
    }
    let factors = factorize(n);
    let p = factors[0].0;
    Ok(match (p, factors.get(1).map(|f| f.0)) {
        (2, _) => Surd::integer((n / 2) as i64),
        (3, Some(q)) if q < 9 => Surd::new((n / q) as i64, q),
        (3, _) => Surd::integer((n / 3) as i64),
        _ => Surd::new((n / p) as i64, p),
    })
}

/// `λ² < 4(degree − 1)`, decided exactly.
pub fn ramanujan_bound_holds(lambda: Surd, degree: u64) -> bool {
    lambda.square() < 4 * (degree as u128).saturating_sub(1)
}

/// Whether the Farey graph of level `n` is Ramanujan.
pub fn is_ramanujan(n: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let lambda = if n <= 4 {
        closed_form_spectrum(n)?.second_largest_modulus(n).expect("base spectra have nontrivial part")
    } else {
        lambda1(n)?
    };
    Ok(ramanujan_bound_holds(lambda, n))
}

/// Checks that `A² − pI` consists of `h × h` equal blocks `2(J − I)` of size
/// `p + 1`, with the vertices ordered pole by pole, each pole followed by its
/// star.
pub fn verify_block_structure(p: u64) -> Result<Verdict> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("block structure needs a prime p > 3, got {p}")));
    }
    let graph = build_graph(p)?;
    let size = graph.vertex_count();
    let block = (p + 1) as usize;
    if size as u64 != vertex_count(p)? || size % block != 0 {
        return Ok(Verdict::fail(format!("{size} vertices do not split into blocks of {block}")));
    }
    let a2 = graph.adjacency_squared();
    for i in 0..size {
        for j in 0..size {
            let entry = a2[i * size + j] as i64 - if i == j { p as i64 } else { 0 };
            let expected = if i % block == j % block { 0 } else { 2 };
            if entry != expected {
                return Ok(Verdict::fail(format!(
                    "entry ({i}, {j}) between {} and {} is {entry}, expected {expected}",
                    graph.label(i),
                    graph.label(j)
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda1_values() {
        assert_eq!(lambda1(14).unwrap(), Surd::integer(7));
        assert_eq!(lambda1(9).unwrap(), Surd::integer(3));
        assert_eq!(lambda1(35).unwrap(), Surd::new(7, 5));
        assert_eq!(lambda1(15).unwrap(), Surd::new(3, 5));
        assert_eq!(lambda1(21).unwrap(), Surd::new(3, 7));
        assert_eq!(lambda1(39).unwrap(), Surd::integer(13));
        assert!(lambda1(4).is_err());
    }

    #[test]
    fn lambda1_matches_numeric_spectrum() {
        use crate::spectra::{numeric_spectrum, DEFAULT_EIGEN_TOL};
        for n in [6, 9, 10, 12, 15, 21, 25] {
            let numeric = numeric_spectrum(&build_graph(n).unwrap(), DEFAULT_EIGEN_TOL).unwrap();
            let second = numeric
                .entries()
                .iter()
                .map(|e| e.0.abs())
                .filter(|a| (a - n as f64).abs() > 1e-6)
                .fold(0.0, f64::max);
            assert!((second - lambda1(n).unwrap().value()).abs() < 1e-8, "n={n}: {second}");
        }
    }

    #[test]
    fn lambda1_matches_closed_form() {
        for n in 5..=60 {
            let sp = closed_form_spectrum(n).unwrap();
            assert_eq!(sp.second_largest_modulus(n), Some(lambda1(n).unwrap()), "n={n}");
        }
    }

    #[test]
    fn classification() {
        let listed = [4, 6, 8, 9, 10, 12, 14, 15, 21, 27, 33];
        for n in 2..=40 {
            let expected = is_prime(n) || listed.contains(&n);
            assert_eq!(is_ramanujan(n).unwrap(), expected, "n={n}");
        }
        assert!(is_ramanujan(1).is_err());
    }

    #[test]
    fn block_structure() {
        for p in [5, 7, 11, 13] {
            assert!(verify_block_structure(p).unwrap().is_pass(), "p={p}");
        }
        for bad in [2, 3, 9, 15] {
            assert!(verify_block_structure(bad).is_err());
        }
    }
}
