//! Seeded randomness and prime selection. Every random choice in the crate
//! flows from a `u64` seed through ChaCha8.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Fp, Modulus, Q};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Default 31-bit prime used when none is requested.
pub const DEFAULT_PRIME: Modulus = Modulus(2147483629);

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
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
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform random prime in `[2^30, 2^31)`.
pub fn random_prime_31<R: Rng>(rng: &mut R) -> Modulus {
    loop {
        let n = rng.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime(n) {
            return Modulus(n);
        }
    }
}

/// Random 31-bit prime with `p = 1 mod 3`, so F_p contains cube roots of unity.
pub fn random_prime_1_mod_3<R: Rng>(rng: &mut R) -> Modulus {
    loop {
        let p = random_prime_31(rng);
        if p.0 % 3 == 1 {
            return p;
        }
    }
}

/// A primitive cube root of unity in F_p; requires `p = 1 mod 3`.
pub fn cube_root_of_unity(m: Modulus) -> Option<Fp> {
    if m.0 % 3 != 1 {
        return None;
    }
    let e = (m.0 - 1) / 3;
    (2..m.0)
        .map(|g| Fp::new(g as i128, m).pow(e))
        .find(|z| !z.is_one())
}

/// Random rational `n/d` with `|n| <= bound` and `1 <= d <= den_bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64, den_bound: i64) -> Q {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=den_bound);
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_fp<R: Rng>(rng: &mut R, m: Modulus) -> Fp {
    Fp::new(rng.gen_range(0..m.0) as i128, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(DEFAULT_PRIME.0));
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483647 * 3));
        assert!(!is_prime(561));
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes.len(), 25);
    }

    #[test]
    fn cube_roots() {
        let mut rng = rng_from_seed(7);
        let p = random_prime_1_mod_3(&mut rng);
        let z = cube_root_of_unity(p).unwrap();
        assert!(!z.is_one());
        assert!(z.pow(3).is_one());
        assert!(cube_root_of_unity(Modulus(11)).is_none());
    }

    #[test]
    fn seeded_primes_are_reproducible() {
        let a = random_prime_31(&mut rng_from_seed(3));
        let b = random_prime_31(&mut rng_from_seed(3));
        assert_eq!(a, b);
        assert!(a.0 >= 1 << 30 && a.0 < 1 << 31);
    }
}
