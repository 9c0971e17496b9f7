//! Coefficient domains: exact rationals and prime-field residues.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Q = BigRational;

/// A commutative field with exact arithmetic.
///
/// Elements carry their domain (`()` for the rationals, the modulus for a
/// prime field). Arithmetic between elements of different domains is a
/// programming error and panics; matrix-level entry points check domains up
/// front and report [`crate::Error::DomainMismatch`] instead.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Domain: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn domain(&self) -> Self::Domain;
    fn zero_in(d: &Self::Domain) -> Self;
    fn one_in(d: &Self::Domain) -> Self;
    fn from_int(n: i64, d: &Self::Domain) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.domain())
    }

    /// Multiplier putting a coefficient list (leading coefficient first) into
    /// canonical form. Rationals: integral, content 1, positive leading
    /// coefficient. Prime field: monic.
    fn canonical_multiplier(coeffs: &[&Self]) -> Self;

    /// Rank of a dense row-major matrix. Rows must share one length.
    fn rank_of(mut rows: Vec<Vec<Self>>) -> usize {
        gaussian_rank(&mut rows)
    }

    /// `(is_negative, absolute value as text)` for the polynomial printer.
    fn fmt_abs(&self) -> (bool, String);
}

/// Plain Gaussian elimination over a field; returns the rank.
pub(crate) fn gaussian_rank<F: Field>(rows: &mut [Vec<F>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot_row: Vec<F> = rows[rank].iter().map(|x| x.clone() * inv.clone()).collect();
        for r in rank + 1..nrows {
            let factor = rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..ncols {
                if pivot_row[c].is_zero() {
                    continue;
                }
                let v = rows[r][c].clone() - factor.clone() * pivot_row[c].clone();
                rows[r][c] = v;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

impl Field for Q {
    type Domain = ();

    fn domain(&self) {}

    fn zero_in(_: &()) -> Self {
        Q::zero()
    }

    fn one_in(_: &()) -> Self {
        Q::one()
    }

    fn from_int(n: i64, _: &()) -> Self {
        Q::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn canonical_multiplier(coeffs: &[&Self]) -> Self {
        let Some(lead) = coeffs.first() else {
            return Q::one();
        };
        let den_lcm = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut m = Q::from_integer(den_lcm.clone());
        let scaled: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let content = scaled.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !content.is_zero() {
            m /= Q::from_integer(content);
        }
        if lead.is_negative() {
            m = -m;
        }
        m
    }

    fn rank_of(rows: Vec<Vec<Self>>) -> usize {
        let ints = rows
            .into_iter()
            .map(|r| clear_row_denominators(&r))
            .collect();
        fraction_free_rank(ints)
    }

    fn fmt_abs(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

/// Scale a rational row to a primitive integer row.
pub(crate) fn clear_row_denominators(row: &[Q]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut ints: Vec<BigInt> = row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    make_primitive(&mut ints);
    ints
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Fraction-free integer elimination. Each step combines rows through the
/// lcm of the two pivot entries and strips the integer content of the
/// updated row, which keeps entries from growing like plain Bareiss would on
/// the sparse matrices used here.
pub(crate) fn fraction_free_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // smallest pivot, then sparsest row
        let piv = (rank..nrows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| {
                (
                    rows[r][col].bits(),
                    rows[r].iter().filter(|x| !x.is_zero()).count(),
                )
            });
        let Some(piv) = piv else { continue };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let row_mult = p / &g;
            let piv_mult = &row[col] / &g;
            for c in col..ncols {
                let a = &row[c];
                let b = &pivot_row[c];
                if b.is_zero() {
                    if !a.is_zero() && !row_mult.is_one() {
                        row[c] = a * &row_mult;
                    }
                    continue;
                }
                row[c] = a * &row_mult - b * &piv_mult;
            }
            make_primitive(&mut row[col..]);
        }
        rank += 1;
    }
    rank
}

/// Modulus of a prime field. Must be prime and below 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
pub struct Modulus(pub u64);

impl Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Residue modulo a prime, stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i128, m: Modulus) -> Self {
        let p = m.0 as i128;
        Fp {
            value: value.rem_euclid(p) as u64,
            modulus: m.0,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        Modulus(self.modulus)
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp {
            value: 1 % self.modulus,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Square root by Tonelli-Shanks, if one exists.
    pub fn sqrt(&self) -> Option<Fp> {
        let p = self.modulus;
        if self.value == 0 {
            return Some(*self);
        }
        if p == 2 {
            return Some(*self);
        }
        if self.pow((p - 1) / 2).value != 1 {
            return None;
        }
        let m = self.modulus();
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = Fp::new(2, m);
        while z.pow((p - 1) / 2).value == 1 {
            z = z + Fp::new(1, m);
        }
        let mut c = z.pow(q);
        let mut x = self.pow(q.div_ceil(2));
        let mut t = self.pow(q);
        let mut big_m = s;
        while t.value != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt.value != 1 {
                tt = tt * tt;
                i += 1;
            }
            let b = c.pow(1 << (big_m - i - 1));
            x = x * b;
            c = b * b;
            t = t * c;
            big_m = i;
        }
        Some(x)
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.modulus, other.modulus, "prime-field moduli differ");
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        self.check(&o);
        let s = self.value as u128 + o.value as u128;
        Fp {
            value: (s % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        self.check(&o);
        let v = if self.value >= o.value {
            self.value - o.value
        } else {
            self.modulus - (o.value - self.value)
        };
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        self.check(&o);
        let v = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Fp {
            value: v as u64,
            modulus: self.modulus,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus - self.value
        };
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Field for Fp {
    type Domain = Modulus;

    fn domain(&self) -> Modulus {
        Modulus(self.modulus)
    }

    fn zero_in(d: &Modulus) -> Self {
        Fp {
            value: 0,
            modulus: d.0,
        }
    }

    fn one_in(d: &Modulus) -> Self {
        Fp {
            value: 1 % d.0,
            modulus: d.0,
        }
    }

    fn from_int(n: i64, d: &Modulus) -> Self {
        Fp::new(n as i128, *d)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }

    fn canonical_multiplier(coeffs: &[&Self]) -> Self {
        match coeffs.first() {
            Some(lead) => lead.inverse().expect("leading coefficient is nonzero"),
            None => Fp {
                value: 1,
                modulus: 2,
            },
        }
    }

    fn fmt_abs(&self) -> (bool, String) {
        (false, self.value.to_string())
    }
}

/// Reduce a rational modulo `p`; `None` when `p` divides the denominator.
pub fn reduce_rational(q: &Q, m: Modulus) -> Option<Fp> {
    let p = BigInt::from(m.0);
    let num = q.numer().mod_floor(&p).to_u64().expect("residue fits");
    let den = q.denom().mod_floor(&p).to_u64().expect("residue fits");
    let den = Fp {
        value: den,
        modulus: m.0,
    };
    let inv = den.inverse()?;
    Some(
        Fp {
            value: num,
            modulus: m.0,
        } * inv,
    )
}

/// Shorthand for an integer rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_multiplier() {
        let a = qr(-1, 2);
        let b = qr(3, 4);
        let m = Q::canonical_multiplier(&[&a, &b]);
        // (-1/2, 3/4) -> (2, -3)
        assert_eq!(a * m.clone(), qi(2));
        assert_eq!(b * m, qi(-3));
    }

    #[test]
    fn fp_arithmetic_and_inverse() {
        let m = Modulus(101);
        let a = Fp::new(-3, m);
        assert_eq!(a.value(), 98);
        assert_eq!(a * a.inverse().unwrap(), Fp::one_in(&m));
        assert_eq!(
            reduce_rational(&qr(1, 2), m).unwrap() * Fp::new(2, m),
            Fp::one_in(&m)
        );
        assert!(reduce_rational(&qr(1, 101), m).is_none());
    }

    #[test]
    fn tonelli_shanks_roots() {
        let m = Modulus(2147483629);
        for v in [2i128, 3, 5, 7, 11, 1234567, 99991] {
            let x = Fp::new(v, m);
            match x.sqrt() {
                Some(r) => assert_eq!(r * r, x),
                None => assert_ne!(x.pow((m.0 - 1) / 2).value(), 1),
            }
        }
        // p = 1 mod 8 exercises the loop
        let m = Modulus(998244353);
        let x = Fp::new(5, m) * Fp::new(5, m);
        let r = x.sqrt().unwrap();
        assert_eq!(r * r, x);
    }

    #[test]
    fn fraction_free_rank_matches_field_rank() {
        let rows = vec![
            vec![qi(1), qi(2), qi(3)],
            vec![qi(2), qi(4), qi(6)],
            vec![qr(1, 3), qi(0), qi(1)],
        ];
        assert_eq!(Q::rank_of(rows.clone()), 2);
        let mut r = rows;
        assert_eq!(gaussian_rank(&mut r), 2);
    }

    #[test]
    #[should_panic(expected = "moduli differ")]
    fn mixing_moduli_panics() {
        let _ = Fp::new(1, Modulus(7)) + Fp::new(1, Modulus(11));
    }
}
