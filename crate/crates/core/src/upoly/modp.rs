//! Dense polynomials over a word-size prime field, used for modular gcd and
//! resultant shortcuts. Coefficients are low degree first, trimmed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{UniPoly, Var};

/// Primes just below `2^62`.
pub const PRIMES: [u64; 24] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
    4611686018427387701,
    4611686018427387631,
    4611686018427387617,
    4611686018427387587,
    4611686018427387461,
    4611686018427387421,
    4611686018427387409,
    4611686018427387329,
    4611686018427387323,
    4611686018427387301,
    4611686018427387271,
    4611686018427387241,
    4611686018427387139,
    4611686018427387131,
    4611686018427387127,
    4611686018427387113,
];

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a != 0, "inverse of zero");
    pow(a, p - 2, p)
}

pub fn reduce_int(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("reduced below p")
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn reduce(f: &UniPoly, p: u64) -> Vec<u64> {
    trim(f.coeffs().iter().map(|c| reduce_int(c, p)).collect())
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
}

pub fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    assert!(!g.is_empty(), "division by zero polynomial");
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let li = inv(*g.last().unwrap(), p);
    while r.len() > dg && !r.is_empty() {
        let c = mul(*r.last().unwrap(), li, p);
        let shift = r.len() - 1 - dg;
        for (i, &gc) in g.iter().enumerate() {
            r[i + shift] = sub(r[i + shift], mul(c, gc, p), p);
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Quotient and remainder of `f` by nonzero `g`.
pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let g = trim(g.to_vec());
    assert!(!g.is_empty(), "division by zero polynomial");
    let mut r = trim(f.to_vec());
    let dg = g.len() - 1;
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - dg];
    let li = inv(*g.last().unwrap(), p);
    while r.len() > dg {
        let c = mul(*r.last().unwrap(), li, p);
        let shift = r.len() - 1 - dg;
        q[shift] = c;
        for (i, &gc) in g.iter().enumerate() {
            r[i + shift] = sub(r[i + shift], mul(c, gc, p), p);
        }
        r.pop();
    }
    (trim(q), trim(r))
}

pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul(c, i as u64 % p, p))
            .collect(),
    )
}

pub fn poly_mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = add(out[i + j], mul(a, b, p), p);
        }
    }
    trim(out)
}

/// Yun decomposition of `f` into monic squarefree factors with their
/// multiplicities; valid when `p` exceeds the degree.
pub fn squarefree_decomposition(f: &[u64], p: u64) -> Vec<(Vec<u64>, u32)> {
    let f = monic(&trim(f.to_vec()), p);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let df = derivative(&f, p);
    let a0 = gcd(&f, &df, p);
    let mut b = divrem(&f, &a0, p).0;
    let mut c = divrem(&df, &a0, p).0;
    let mut d = poly_sub(&c, &derivative(&b, p), p);
    let mut i = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d, p);
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        b = divrem(&b, &a, p).0;
        c = divrem(&d, &a, p).0;
        d = poly_sub(&c, &derivative(&b, p), p);
        i += 1;
    }
    out
}

fn poly_sub(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let n = f.len().max(g.len());
    trim(
        (0..n)
            .map(|k| {
                sub(
                    f.get(k).copied().unwrap_or(0),
                    g.get(k).copied().unwrap_or(0),
                    p,
                )
            })
            .collect(),
    )
}

pub fn monic(f: &[u64], p: u64) -> Vec<u64> {
    match f.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv(l, p);
            f.iter().map(|&c| mul(c, li, p)).collect()
        }
    }
}

pub fn gcd(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `Res(f, g)` over the field, with the usual Sylvester sign convention.
pub fn resultant(f: &[u64], g: &[u64], p: u64) -> u64 {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut acc = 1u64;
    loop {
        let m = a.len() - 1;
        let n = b.len() - 1;
        if n == 0 {
            return mul(acc, pow(b[0], m as u64, p), p);
        }
        let r = poly_rem(&a, &b, p);
        if r.is_empty() {
            return 0;
        }
        let k = r.len() - 1;
        if (m * n) % 2 == 1 {
            acc = sub(0, acc, p);
        }
        acc = mul(acc, pow(*b.last().unwrap(), (m - k) as u64, p), p);
        a = b;
        b = r;
    }
}

/// Newton interpolation through `(xs[i], ys[i])`, distinct nodes.
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub(c[i], c[i - 1], p);
            let den = sub(xs[i], xs[i - j], p);
            c[i] = mul(num, inv(den, p), p);
        }
    }
    let mut out = vec![0u64; 1];
    out[0] = c[n - 1];
    for i in (0..n - 1).rev() {
        // out = out * (x - xs[i]) + c[i]
        let mut next = vec![0u64; out.len() + 1];
        for (k, &o) in out.iter().enumerate() {
            next[k + 1] = add(next[k + 1], o, p);
            next[k] = sub(next[k], mul(o, xs[i], p), p);
        }
        next[0] = add(next[0], c[i], p);
        out = next;
    }
    trim(out)
}

/// Symmetric-range lift of residues modulo `m` to an integer polynomial.
pub fn lift_symmetric(residues: &[BigInt], m: &BigInt, var: Var) -> UniPoly {
    let half: BigInt = m >> 1;
    UniPoly::new(
        residues
            .iter()
            .map(|r| if r > &half { r - m } else { r.clone() })
            .collect(),
        var,
    )
}

/// Chinese remaindering of coefficient vectors: combines `(a mod m)` with
/// `(b mod p)` into residues modulo `m*p`.
pub fn crt_combine(a: &[BigInt], m: &BigInt, b: &[u64], p: u64) -> Vec<BigInt> {
    let m_mod_p = reduce_int(m, p);
    let m_inv = inv(m_mod_p, p);
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let ak = a.get(k).cloned().unwrap_or_default();
            let bk = b.get(k).copied().unwrap_or(0);
            let ak_p = reduce_int(&ak, p);
            let h = mul(sub(bk, ak_p, p), m_inv, p);
            ak + m * BigInt::from(h)
        })
        .collect()
}
