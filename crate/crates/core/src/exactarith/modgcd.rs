//! Univariate gcd over Z by modular images and Chinese remaindering.
//!
//! The integer gcd in `num-bigint` is Stein's binary algorithm, which is
//! quadratic in the bit length; the heuristic evaluation gcd would feed it
//! integers with hundreds of thousands of bits. Working modulo 62-bit primes
//! keeps all inner loops in machine words.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::upoly::Poly;

const PRIME_COUNT: usize = 1536;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes just below 2^62.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_COUNT);
        let mut n = (1u64 << 62) - 1;
        while out.len() < PRIME_COUNT {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

pub(crate) fn reduce(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd of two polynomials over F_p.
pub(crate) fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        let db = b.len() - 1;
        while a.len() >= b.len() {
            let c = mul_mod(*a.last().unwrap(), inv, p);
            let shift = a.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                let t = mul_mod(c, bj, p);
                a[shift + j] = (a[shift + j] + p - t) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        let inv = inv_mod(l, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

pub(crate) fn content(p: &Poly<BigInt>) -> BigInt {
    p.coeffs()
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the integer content and makes the leading coefficient positive.
pub(crate) fn primitive(p: &Poly<BigInt>) -> Poly<BigInt> {
    if p.is_zero() {
        return p.clone();
    }
    let mut c = content(p);
    if p.lead().unwrap().is_negative() {
        c = -c;
    }
    Poly::new(p.coeffs().iter().map(|a| a / &c).collect())
}

fn sym_lift(r: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    if r > half {
        r - m
    } else {
        r.clone()
    }
}

/// Gcd over Z[X] including the integer content, leading coefficient positive.
/// Returns `None` only if the prime table is exhausted.
pub(crate) fn gcd_univariate(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Option<Poly<BigInt>> {
    if a.is_zero() {
        return Some(normalize_sign(b));
    }
    if b.is_zero() {
        return Some(normalize_sign(a));
    }
    let c = content(a).gcd(&content(b));
    let pa = primitive(a);
    let pb = primitive(b);
    if pa.is_constant() || pb.is_constant() {
        return Some(Poly::constant(c));
    }
    let d = pa.lead().unwrap().gcd(pb.lead().unwrap());

    let mut acc: Option<(Vec<BigInt>, BigInt, usize)> = None;
    let mut prev: Option<Vec<BigInt>> = None;
    for &p in primes() {
        let la = reduce(pa.lead().unwrap(), p);
        let lb = reduce(pb.lead().unwrap(), p);
        if la == 0 || lb == 0 {
            continue;
        }
        let am: Vec<u64> = pa.coeffs().iter().map(|x| reduce(x, p)).collect();
        let bm: Vec<u64> = pb.coeffs().iter().map(|x| reduce(x, p)).collect();
        let g = gcd_mod(&am, &bm, p);
        let dg = g.len() - 1;
        if dg == 0 {
            return Some(Poly::constant(c));
        }
        let dm = reduce(&d, p);
        let gs: Vec<BigInt> = g.iter().map(|&x| BigInt::from(mul_mod(x, dm, p))).collect();
        let pb_big = BigInt::from(p);
        acc = match acc.take() {
            Some((res, m, deg)) if deg == dg => {
                // x = r1 + m * ((r2 - r1) * m^{-1} mod p)
                let minv = inv_mod(reduce(&m, p), p);
                let combined = res
                    .iter()
                    .zip(gs.iter())
                    .map(|(r1, r2)| {
                        let diff = (r2 - r1).mod_floor(&pb_big).to_u64().unwrap();
                        let k = mul_mod(diff, minv, p);
                        r1 + &m * BigInt::from(k)
                    })
                    .collect();
                Some((combined, m * &pb_big, deg))
            }
            Some((res, m, deg)) if deg < dg => Some((res, m, deg)),
            _ => Some((gs, pb_big.clone(), dg)),
        };
        let (res, m, _) = acc.as_ref().unwrap();
        let half = m >> 1;
        let lifted: Vec<BigInt> = res.iter().map(|r| sym_lift(r, m, &half)).collect();
        if prev.as_ref() == Some(&lifted) {
            let cand = primitive(&Poly::new(lifted.clone()));
            if pa.exact_div(&cand).is_some() && pb.exact_div(&cand).is_some() {
                return Some(cand.scale(&c));
            }
        }
        prev = Some(lifted);
    }
    None
}

pub(crate) fn normalize_sign(p: &Poly<BigInt>) -> Poly<BigInt> {
    match p.lead() {
        Some(l) if l.sign() == Sign::Minus => -p,
        _ => p.clone(),
    }
}

/// Primitive pseudo-remainder sequence gcd; the slow but assumption-free route.
pub(crate) fn prs_gcd_univariate(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    if a.is_zero() {
        return normalize_sign(b);
    }
    if b.is_zero() {
        return normalize_sign(a);
    }
    let c = content(a).gcd(&content(b));
    let (mut f, mut g) = (primitive(a), primitive(b));
    if f.deg() < g.deg() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = primitive(&r);
    }
    primitive(&f).scale(&c)
}

fn pseudo_rem(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    let lb = b.lead().unwrap().clone();
    let db = b.deg();
    let mut r = a.clone();
    while !r.is_zero() && r.deg() >= db {
        let lr = r.lead().unwrap().clone();
        let k = (r.deg() - db) as usize;
        r = &r.scale(&lb) - &b.shift(k).scale(&lr);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> Poly<BigInt> {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn primes_are_prime_and_large() {
        let ps = primes();
        assert!(ps.iter().take(20).all(|&p| is_prime_u64(p) && p > 1 << 61));
        assert!(!is_prime_u64(561));
        assert!(is_prime_u64(1_000_000_007));
    }

    #[test]
    fn modular_and_prs_agree() {
        let a = &(&z(&[1, -1]).pow(3) * &z(&[2, 0, 3])) * &z(&[7, 1]);
        let b = &(&z(&[1, -1]).pow(2) * &z(&[2, 0, 3])) * &z(&[-5, 4, 9]);
        let g1 = gcd_univariate(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(4))).unwrap();
        let g2 = prs_gcd_univariate(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(4)));
        assert_eq!(g1, g2);
        assert_eq!(g1, (&z(&[1, -1]).pow(2) * &z(&[2, 0, 3])).scale(&BigInt::from(2)));
    }
}
