//! Small integer helpers shared by the modular constructions.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `x mod n` for a signed `x`, in `[0, n)`.
pub fn residue(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i64 % n as i64, n as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(residue(old_s, n))
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}

/// Splits `s` into `(f, t)` with `s = f² t` and `t` squarefree.
pub fn squarefree_split(s: u64) -> (u64, u64) {
    let mut f = 1;
    let mut t = 1;
    for (p, k) in factorize(s) {
        f *= p.pow(k / 2);
        if k % 2 == 1 {
            t *= p;
        }
    }
    (f, t)
}

/// Unique `x mod l*m` with `x ≡ r1 (mod l)` and `x ≡ r2 (mod m)`, for coprime `l, m`.
pub fn crt(r1: u64, l: u64, r2: u64, m: u64) -> Option<u64> {
    let inv = mod_inverse(l % m, m)?;
    let lm = l * m;
    // x = r1 + l * t, with l t ≡ r2 - r1 (mod m)
    let diff = residue(r2 as i64 - r1 as i64, m);
    let t = (diff as u128 * inv as u128 % m as u128) as u64;
    Some((r1 + l * t) % lm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 5), Some(2));
        assert_eq!(mod_inverse(2, 4), None);
        for n in 2..40u64 {
            for a in 1..n {
                match mod_inverse(a, n) {
                    Some(x) => assert_eq!(a * x % n, 1 % n),
                    None => assert_ne!(gcd(a, n), 1),
                }
            }
        }
    }

    #[test]
    fn factorisation_round_trips() {
        for n in 2..500u64 {
            let f = factorize(n);
            assert_eq!(f.iter().map(|&(p, k)| p.pow(k)).product::<u64>(), n);
            assert!(f.iter().all(|&(p, _)| is_prime(p)));
        }
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_split(49), (7, 1));
        assert_eq!(squarefree_split(343), (7, 7));
        assert_eq!(squarefree_split(20), (2, 5));
        assert_eq!(squarefree_split(1), (1, 1));
    }

    #[test]
    fn chinese_remainder() {
        assert_eq!(crt(1, 3, 4, 5), Some(4));
        assert_eq!(crt(1, 4, 4, 5), Some(9));
        assert_eq!(crt(1, 5, 2, 3), Some(11));
        assert_eq!(crt(1, 4, 1, 6), None);
    }
}
