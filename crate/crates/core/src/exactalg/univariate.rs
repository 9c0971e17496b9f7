//! Univariate helpers: rational roots over Q, roots in F_p.
//!
//! Coefficient vectors are little-endian: `c[0] + c[1] t + c[2] t^2 + ...`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::field::{Field, Fp, Modulus, Q};

fn trim<C: Field>(mut c: Vec<C>) -> Vec<C> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

pub fn eval<C: Field>(c: &[C], x: &C) -> C {
    let d = x.domain();
    c.iter()
        .rev()
        .fold(C::zero_in(&d), |acc, a| acc * x.clone() + a.clone())
}

/// Divide by `(t - r)`; returns quotient and remainder.
pub fn deflate<C: Field>(c: &[C], r: &C) -> (Vec<C>, C) {
    let d = r.domain();
    if c.is_empty() {
        return (vec![], C::zero_in(&d));
    }
    let n = c.len() - 1;
    let mut q = vec![C::zero_in(&d); n];
    let mut acc = C::zero_in(&d);
    for i in (0..=n).rev() {
        acc = acc * r.clone() + c[i].clone();
        if i > 0 {
            q[i - 1] = acc.clone();
        }
    }
    (q, acc)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            out.push(i.clone());
            let j = &n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

/// Rational roots with multiplicities, ascending. Uses the rational root
/// theorem on the integer-cleared polynomial; meant for small coefficients.
pub fn rational_roots(coeffs: &[Q]) -> Vec<(Q, u32)> {
    let mut c = trim(coeffs.to_vec());
    let mut out: Vec<(Q, u32)> = Vec::new();
    // roots at zero
    let mut zero_mult = 0;
    while c.len() > 1 && Field::is_zero(&c[0]) {
        c.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((Q::zero_in(&()), zero_mult));
    }
    if c.len() <= 1 {
        return out;
    }
    let ints = super::field::clear_row_denominators(&c);
    let lead = ints.last().unwrap().clone();
    let constant = ints[0].clone();
    let mut candidates = Vec::new();
    for p in divisors(&constant) {
        for q in divisors(&lead) {
            let r = Q::new(p.clone(), q.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        let mut mult = 0;
        loop {
            let (q, rem) = deflate(&c, &r);
            if !Field::is_zero(&rem) || c.len() <= 1 {
                break;
            }
            c = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

// --- F_p[t] arithmetic on little-endian vectors ---

fn poly_mulmod(a: &[Fp], b: &[Fp], m: &[Fp]) -> Vec<Fp> {
    let p = m[0].modulus();
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![Fp::zero_in(&p); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = prod[i + j] + *x * *y;
        }
    }
    poly_rem(&prod, m)
}

fn poly_rem(a: &[Fp], m: &[Fp]) -> Vec<Fp> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let inv = m[dm].inverse().expect("nonzero leading coefficient");
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let f = *r.last().unwrap() * inv;
        for (i, c) in m.iter().enumerate() {
            r[k + i] = r[k + i] - f * *c;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last() {
        let inv = l.inverse().unwrap();
        a = a.into_iter().map(|x| x * inv).collect();
    }
    a
}

fn poly_powmod(base: &[Fp], mut e: u64, m: &[Fp]) -> Vec<Fp> {
    let p = m[0].modulus();
    let mut acc = vec![Fp::one_in(&p)];
    let mut b = poly_rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m);
        }
        b = poly_mulmod(&b, &b, m);
        e >>= 1;
    }
    acc
}

fn sub_poly(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    let p = a.first().or(b.first()).unwrap().modulus();
    let n = a.len().max(b.len());
    let z = Fp::zero_in(&p);
    trim(
        (0..n)
            .map(|i| *a.get(i).unwrap_or(&z) - *b.get(i).unwrap_or(&z))
            .collect(),
    )
}

/// Distinct roots in F_p of a nonzero polynomial, ascending by residue.
/// Isolates the split part with `gcd(f, t^p - t)`, then splits it with
/// random `gcd(g, (t + a)^((p-1)/2) - 1)`.
pub fn roots_mod_p<R: Rng>(coeffs: &[Fp], rng: &mut R) -> Vec<Fp> {
    let f = trim(coeffs.to_vec());
    if f.len() <= 1 {
        return vec![];
    }
    let m = f[0].modulus();
    let p = m.0;
    let x = vec![Fp::zero_in(&m), Fp::one_in(&m)];
    let xp = poly_powmod(&x, p, &f);
    let g = poly_gcd(&f, &sub_poly(&xp, &x));
    let mut out = Vec::new();
    split(&g, m, rng, &mut out);
    out.sort_by_key(|r| r.value());
    out
}

fn split<R: Rng>(g: &[Fp], m: Modulus, rng: &mut R, out: &mut Vec<Fp>) {
    let deg = g.len().saturating_sub(1);
    if deg == 0 {
        return;
    }
    if deg == 1 {
        out.push(-g[0] * g[1].inverse().unwrap());
        return;
    }
    if m.0 == 2 {
        for v in 0..2 {
            let r = Fp::new(v, m);
            if eval(g, &r).is_zero() {
                out.push(r);
            }
        }
        return;
    }
    loop {
        let a = Fp::new(rng.gen_range(0..m.0) as i128, m);
        let shifted = vec![a, Fp::one_in(&m)];
        let h = poly_powmod(&shifted, (m.0 - 1) / 2, g);
        let d = poly_gcd(g, &sub_poly(&h, &[Fp::one_in(&m)]));
        let dd = d.len().saturating_sub(1);
        if dd > 0 && dd < deg {
            let (q, _) = divide(g, &d);
            split(&d, m, rng, out);
            split(&q, m, rng, out);
            return;
        }
    }
}

fn divide(a: &[Fp], b: &[Fp]) -> (Vec<Fp>, Vec<Fp>) {
    let p = a[0].modulus();
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let inv = b[db].inverse().unwrap();
    let mut q = vec![Fp::zero_in(&p); r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = *r.last().unwrap() * inv;
        q[k] = f;
        for (i, c) in b.iter().enumerate() {
            r[k + i] = r[k + i] - f * *c;
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// Roots of `a t^2 + b t + c` in F_p (odd p), with `a != 0`.
pub fn quadratic_roots(a: Fp, b: Fp, c: Fp) -> Vec<Fp> {
    let m = a.modulus();
    let two = Fp::from_int(2, &m);
    let four = Fp::from_int(4, &m);
    let disc = b * b - four * a * c;
    let Some(s) = disc.sqrt() else { return vec![] };
    let inv = (two * a).inverse().unwrap();
    let r1 = (-b + s) * inv;
    let r2 = (-b - s) * inv;
    if r1 == r2 {
        vec![r1]
    } else {
        vec![r1, r2]
    }
}
