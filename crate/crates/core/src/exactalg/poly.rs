//! Sparse multivariate polynomials keyed by exponent vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::field::{Field, Fp, Modulus, Q};
use crate::{Error, Result};

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then `x0` before `x1` before ...).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exps(e: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(o.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in descending
/// graded-lex order (`x0^d` first).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d as u16);
            out.push(Monomial::from_exps(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Sparse polynomial in `nvars` variables over the field `C`.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C: Field> {
    nvars: usize,
    domain: C::Domain,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Field> Poly<C> {
    pub fn zero(nvars: usize, domain: C::Domain) -> Self {
        Poly {
            nvars,
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        let domain = c.domain();
        let mut p = Self::zero(nvars, domain);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize, domain: C::Domain) -> Self {
        Self::constant(C::one_in(&domain), nvars)
    }

    pub fn var(nvars: usize, i: usize, domain: C::Domain) -> Self {
        let mut p = Self::zero(nvars, domain.clone());
        p.add_term(Monomial::var(nvars, i), C::one_in(&domain));
        p
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero(m.nvars(), c.domain());
        p.add_term(m, c);
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[C], domain: C::Domain) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, domain);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        domain: C::Domain,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut p = Self::zero(nvars, domain);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> &C::Domain {
        &self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Degree in variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i] as u32).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous in the first `k` variables of degree `d`.
    pub fn is_homogeneous_in(&self, k: usize, d: u32) -> bool {
        self.terms
            .keys()
            .all(|m| m.0[..k].iter().map(|&e| e as u32).sum::<u32>() == d)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| C::zero_in(&self.domain))
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.domain.clone());
        }
        Poly {
            nvars: self.nvars,
            domain: self.domain.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(self.nvars, self.domain.clone());
        if c.is_zero() {
            return out;
        }
        for (k, a) in &self.terms {
            out.terms.insert(k.mul(m), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars, self.domain.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.domain.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut k = m.clone();
            k.0[i] -= 1;
            out.add_term(k, c.clone() * C::from_int(e as i64, &self.domain));
        }
        out
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars, "evaluation point arity");
        let mut acc = C::zero_in(&self.domain);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Ring homomorphism `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Poly<C>]) -> Result<Poly<C>> {
        if images.len() != self.nvars {
            return Err(Error::Arity {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let m = match images.first() {
            Some(p) => p.nvars,
            None => 0,
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != m) {
            return Err(Error::Arity {
                expected: m,
                found: bad.nvars,
            });
        }
        let mut out = Poly::zero(m, self.domain.clone());
        // cache powers of each image
        let mut powers: Vec<Vec<Poly<C>>> = images
            .iter()
            .map(|p| vec![Poly::one(m, self.domain.clone()), p.clone()])
            .collect();
        for (mono, c) in &self.terms {
            let mut t = Poly::constant(c.clone(), m);
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitute constants for a subset of variables, keeping the arity.
    pub fn specialize(&self, var: usize, value: &C) -> Poly<C> {
        let mut out = Poly::zero(self.nvars, self.domain.clone());
        for (m, c) in &self.terms {
            let mut k = m.clone();
            let e = k.0[var];
            k.0[var] = 0;
            let mut t = c.clone();
            for _ in 0..e {
                t = t * value.clone();
            }
            out.add_term(k, t);
        }
        out
    }

    /// Coefficients of the powers of variable `var`: `self = sum_k var^k * out[k]`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly<C>> {
        let top = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Poly::zero(self.nvars, self.domain.clone()); top + 1];
        for (m, c) in &self.terms {
            let mut k = m.clone();
            let e = k.0[var] as usize;
            k.0[var] = 0;
            out[e].add_term(k, c.clone());
        }
        out
    }

    /// Drop variables `keep`-complement, which must not occur; reorders the
    /// remaining variables as listed in `keep`.
    pub fn project_vars(&self, keep: &[usize]) -> Result<Poly<C>> {
        let mut out = Poly::zero(keep.len(), self.domain.clone());
        for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 && !keep.contains(&i) {
                    return Err(Error::Precondition(format!(
                        "variable {i} occurs but is being dropped"
                    )));
                }
            }
            out.add_term(Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        Ok(out)
    }

    /// Embed into a ring with more variables: variable `i` goes to `targets[i]`.
    pub fn embed(&self, nvars: usize, targets: &[usize]) -> Poly<C> {
        assert_eq!(targets.len(), self.nvars);
        let mut out = Poly::zero(nvars, self.domain.clone());
        for (m, c) in &self.terms {
            let mut k = Monomial::one(nvars);
            for (i, &e) in m.0.iter().enumerate() {
                k.0[targets[i]] += e;
            }
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Field>(&self, domain: D::Domain, mut f: impl FnMut(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.nvars, domain);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Canonical representative of the line spanned by `self`.
    pub fn normalized(&self) -> Poly<C> {
        let coeffs: Vec<&C> = self.terms.values().rev().collect();
        if coeffs.is_empty() {
            return self.clone();
        }
        let m = C::canonical_multiplier(&coeffs);
        self.scale(&m)
    }

    /// True iff `self = c * other` for some scalar `c` (zero allowed).
    pub fn is_scalar_multiple_of(&self, other: &Poly<C>) -> bool {
        self.is_zero() || (!other.is_zero() && self.normalized() == other.normalized())
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Poly<C>) -> Option<Poly<C>> {
        let (lm, lc) = g.leading_term()?;
        let inv = lc.inverse()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars, self.domain.clone());
        while let Some((m, c)) = rem.leading_term() {
            let k = m.div(lm)?;
            let qc = c.clone() * inv.clone();
            let step = g.mul_monomial(&k, &qc);
            rem = &rem - &step;
            quot.add_term(k, qc);
        }
        Some(quot)
    }

    /// Dense coefficient vector over the given monomial basis; fails if a
    /// term lies outside the basis.
    pub fn coords(&self, basis: &[Monomial]) -> Result<Vec<C>> {
        let mut out = vec![C::zero_in(&self.domain); basis.len()];
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for (m, c) in &self.terms {
            let i = index.get(m).ok_or_else(|| {
                Error::Precondition(format!("term {:?} outside the monomial basis", m.0))
            })?;
            out[*i] = c.clone();
        }
        Ok(out)
    }

    pub fn from_coords(basis: &[Monomial], coords: &[C], domain: C::Domain) -> Poly<C> {
        let n = basis.first().map(|m| m.nvars()).unwrap_or(0);
        Poly::from_terms(n, domain, basis.iter().cloned().zip(coords.iter().cloned()))
    }

    fn check_compat(&self, o: &Poly<C>) {
        assert_eq!(self.nvars, o.nvars, "polynomial arities differ");
        assert_eq!(
            self.domain, o.domain,
            "polynomial coefficient domains differ"
        );
    }
}

impl Poly<Q> {
    /// Reduce modulo `p`; fails if `p` divides a denominator.
    pub fn reduce_mod(&self, m: Modulus) -> Result<Poly<Fp>> {
        let mut out = Poly::zero(self.nvars, m);
        for (k, c) in &self.terms {
            let r = super::field::reduce_rational(c, m)
                .ok_or_else(|| Error::Precondition(format!("prime {m} divides a denominator")))?;
            out.add_term(k.clone(), r);
        }
        Ok(out)
    }
}

impl<'a, C: Field> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        self.check_compat(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Field> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        self.check_compat(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Field> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        self.check_compat(o);
        let mut out = Poly::zero(self.nvars, self.domain.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Field> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            nvars: self.nvars,
            domain: self.domain.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Variable names used when printing and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vars(pub Vec<String>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// `prefix0, prefix1, ...`
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Vars((0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    /// `prefix0..prefix{n-1}` followed by `t`.
    pub fn indexed_with_t(prefix: &str, n: usize) -> Self {
        let mut v = Self::indexed(prefix, n);
        v.0.push("t".into());
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

/// Displays a polynomial with named variables, terms in descending graded-lex order.
pub struct Display<'a, C: Field> {
    poly: &'a Poly<C>,
    vars: &'a Vars,
}

impl<C: Field> Poly<C> {
    pub fn display<'a>(&'a self, vars: &'a Vars) -> Display<'a, C> {
        assert_eq!(vars.len(), self.nvars, "variable names for every variable");
        Display { poly: self, vars }
    }

    pub fn to_string_with(&self, vars: &Vars) -> String {
        self.display(vars).to_string()
    }
}

impl<C: Field> fmt::Display for Display<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let (neg, abs) = c.fmt_abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.degree() == 0 {
                factors.push(abs);
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.0[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.0[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{qi, qr};
    use super::*;

    fn x(i: usize) -> Poly<Q> {
        Poly::var(3, i, ())
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::from_exps(&[2, 0, 0]);
        let b = Monomial::from_exps(&[1, 1, 0]);
        let c = Monomial::from_exps(&[0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
        let m = monomials_of_degree(3, 2);
        assert_eq!(m.len(), 6);
        assert_eq!(m[0], a);
        assert!(m.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn zero_has_no_degree() {
        let z = Poly::<Q>::zero(3, ());
        assert_eq!(z.degree(), None);
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p, z);
    }

    #[test]
    fn display_canonical() {
        let p = &(&x(0) * &x(0)).scale(&qi(3)) - &(&x(1) * &x(2)).scale(&qr(1, 2));
        let v = Vars::indexed("x", 3);
        assert_eq!(p.to_string_with(&v), "3*x0^2 - 1/2*x1*x2");
        assert_eq!(Poly::<Q>::constant(qi(-5), 3).to_string_with(&v), "-5");
    }

    #[test]
    fn substitute_square() {
        let f = &x(0) * &x(0);
        let y = |i| Poly::<Q>::var(2, i, ());
        let g = f.substitute(&[&y(0) + &y(1), y(0), y(1)]).unwrap();
        let s = &y(0) + &y(1);
        assert_eq!(g, &s * &s);
        assert!(f.substitute(&[y(0)]).is_err());
    }

    #[test]
    fn exact_division() {
        let a = &x(0) + &x(1);
        let b = &x(1) - &x(2).scale(&qi(2));
        let f = &a * &b;
        assert_eq!(f.div_exact(&a).unwrap(), b);
        assert!(f.div_exact(&(&x(0) + &x(2))).is_none());
    }

    #[test]
    fn normalization_up_to_scalar() {
        let a = &x(0).scale(&qr(-2, 3)) + &x(1);
        let b = a.scale(&qr(7, 5));
        assert_eq!(a.normalized(), b.normalized());
        assert!(b.is_scalar_multiple_of(&a));
        assert!(!x(0).is_scalar_multiple_of(&x(1)));
    }
}
