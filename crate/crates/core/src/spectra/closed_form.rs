use super::{Spectrum, Surd};
use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::farey::vertex_count;

fn int(z: i64) -> Surd {
    Surd::integer(z)
}

/// The spectra of the three smallest Farey graphs.
pub fn base_spectrum(n: u64) -> Option<Spectrum> {
    let entries: &[(i64, u64)] = match n {
        2 => &[(-1, 2), (2, 1)],
        3 => &[(-1, 3), (3, 1)],
        4 => &[(-2, 2), (0, 3), (4, 1)],
        _ => return None,
    };
    Some(Spectrum::from_entries(entries.iter().map(|&(z, m)| (int(z), m))))
}

/// Exact spectrum of the Farey graph of level `n`.
///
/// Prime powers are handled directly; other levels are assembled from their
/// prime-power parts by tensor-product spectra plus a `±√n` correction.
pub fn closed_form_spectrum(n: u64) -> Result<Spectrum> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let factors = factorize(n);
    if factors.len() == 1 {
        let (p, k) = factors[0];
        return prime_power_spectrum(p, k);
    }
    if factors[0] == (2, 1) {
        let odd = closed_form_spectrum(n / 2)?;
        return Ok(base_spectrum(2).unwrap().product(&odd));
    }
    let mut iter = factors.into_iter();
    let (p, k) = iter.next().unwrap();
    let mut level = p.pow(k);
    let mut acc = prime_power_spectrum(p, k)?;
    for (p, k) in iter {
        let q = p.pow(k);
        acc = combine_coprime(&acc, level, &prime_power_spectrum(p, k)?, q)?;
        level *= q;
    }
    Ok(acc)
}

/// `sp(l)·sp(m) ∪ {±√(lm)^(N/4)}` with `N` the vertex count at level `lm`.
fn combine_coprime(sp_l: &Spectrum, l: u64, sp_m: &Spectrum, m: u64) -> Result<Spectrum> {
    let lm = l * m;
    let total = vertex_count(lm)?;
    if total % 4 != 0 {
        return Err(Error::InvalidParameter(format!(
            "cannot combine levels {l} and {m}: vertex count {total} is not divisible by 4"
        )));
    }
    let root = Surd::sqrt(lm);
    let mut out = sp_l.product(sp_m);
    out.insert(-root, total / 4);
    out.insert(root, total / 4);
    Ok(out)
}

fn prime_power_spectrum(p: u64, k: u32) -> Result<Spectrum> {
    let n = p.pow(k);
    if let Some(sp) = base_spectrum(n) {
        return Ok(sp);
    }
    if k == 1 {
        let m = (p - 3) * (p + 1) / 4;
        let root = Surd::sqrt(p);
        return Ok(Spectrum::from_entries([(-root, m), (int(-1), p), (root, m), (int(p as i64), 1)]));
    }
    let lower = prime_power_spectrum(p, k - 1)?;
    let c = (p - 1) * vertex_count(n / p)?;
    let root = Surd::sqrt(n);
    let mut out = lower.scale(p as i64)?;
    out.insert(-root, p * c / 2);
    out.insert(Surd::ZERO, c);
    out.insert(root, p * c / 2);
    Ok(out)
}
