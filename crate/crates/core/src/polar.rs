//! Polar quadric systems of cubic forms in six variables.
//!
//! A cubic lives in `x0..x5` followed by optional parameters (the
//! deformation parameter `t`). Quadric coefficient matrices have entries in
//! the parameter variables only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{monomials_of_degree, rank, Field, Matrix, Monomial, Poly, Q};
use crate::{Error, Result};

/// Number of homogeneous coordinates on P^5.
pub const AMBIENT: usize = 6;

/// A cubic fourfold `F`, homogeneous of degree 3 in `x0..x5`, possibly
/// depending on trailing parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicFourfold {
    poly: Poly<Q>,
}

impl CubicFourfold {
    pub fn new(poly: Poly<Q>) -> Result<Self> {
        if poly.nvars() < AMBIENT {
            return Err(Error::Arity {
                expected: AMBIENT,
                found: poly.nvars(),
            });
        }
        if poly.is_zero() {
            return Err(Error::ZeroInput("cubic form is zero".into()));
        }
        if !poly.is_homogeneous_in(AMBIENT, 3) {
            return Err(Error::Precondition(
                "cubic form must be homogeneous of degree 3 in x0..x5".into(),
            ));
        }
        Ok(CubicFourfold { poly })
    }

    pub fn fermat() -> Self {
        let mut p = Poly::zero(AMBIENT, ());
        for i in 0..AMBIENT {
            let mut m = Monomial::one(AMBIENT);
            m.0[i] = 3;
            p.add_term(m, Q::one());
        }
        CubicFourfold { poly: p }
    }

    pub fn poly(&self) -> &Poly<Q> {
        &self.poly
    }

    pub fn nparams(&self) -> usize {
        self.poly.nvars() - AMBIENT
    }

    /// Substitute a value for parameter `k`.
    pub fn specialize(&self, k: usize, value: &Q) -> Result<CubicFourfold> {
        let p = self.poly.specialize(AMBIENT + k, value);
        let keep: Vec<usize> = (0..self.poly.nvars())
            .filter(|&i| i != AMBIENT + k)
            .collect();
        CubicFourfold::new(p.project_vars(&keep)?)
    }

    /// `F(A x)` for a 6x6 rational matrix `A` (parameter-free cubics).
    pub fn compose_linear(&self, a: &Matrix<Q>) -> Result<CubicFourfold> {
        if a.rows() != AMBIENT || a.cols() != AMBIENT {
            return Err(Error::Shape("change of coordinates must be 6x6".into()));
        }
        let n = self.poly.nvars();
        let mut images: Vec<Poly<Q>> = (0..AMBIENT)
            .map(|i| {
                let mut row = vec![Q::zero(); n];
                row[..AMBIENT].clone_from_slice(a.row(i));
                Poly::linear(&row, ())
            })
            .collect();
        for k in AMBIENT..n {
            images.push(Poly::var(n, k, ()));
        }
        CubicFourfold::new(self.poly.substitute(&images)?)
    }

    /// Coordinates in the basis of the 56 cubic monomials (graded-lex).
    pub fn coefficient_vector(&self) -> Result<Vec<Q>> {
        if self.nparams() != 0 {
            return Err(Error::Precondition(
                "coefficient vector of a parametric cubic".into(),
            ));
        }
        self.poly.coords(&cubic_monomials())
    }
}

/// The 56 degree-3 monomials in `x0..x5`, descending graded-lex.
pub fn cubic_monomials() -> Vec<Monomial> {
    monomials_of_degree(AMBIENT, 3)
}

/// The 21 degree-2 monomials in `x0..x5`, descending graded-lex.
pub fn quadric_monomials() -> Vec<Monomial> {
    monomials_of_degree(AMBIENT, 2)
}

/// A quadratic form in `x0..x5` (plus parameters), with its symmetric
/// matrix view `q(x) = x^T M x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    poly: Poly<Q>,
}

impl QuadraticForm {
    pub fn new(poly: Poly<Q>) -> Result<Self> {
        if poly.nvars() < AMBIENT {
            return Err(Error::Arity {
                expected: AMBIENT,
                found: poly.nvars(),
            });
        }
        if !poly.is_homogeneous_in(AMBIENT, 2) {
            return Err(Error::Precondition(
                "quadratic form must be homogeneous of degree 2 in x0..x5".into(),
            ));
        }
        Ok(QuadraticForm { poly })
    }

    pub fn from_matrix(m: &Matrix<Q>) -> Result<Self> {
        if m.rows() != AMBIENT || !m.is_symmetric() {
            return Err(Error::Shape("quadric matrix must be symmetric 6x6".into()));
        }
        let mut p = Poly::zero(AMBIENT, ());
        for i in 0..AMBIENT {
            for j in i..AMBIENT {
                let c = if i == j {
                    m.get(i, i).clone()
                } else {
                    m.get(i, j).clone() * Q::from_integer(2.into())
                };
                let mut mono = Monomial::one(AMBIENT);
                mono.0[i] += 1;
                mono.0[j] += 1;
                p.add_term(mono, c);
            }
        }
        Ok(QuadraticForm { poly: p })
    }

    pub fn poly(&self) -> &Poly<Q> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn nparams(&self) -> usize {
        self.poly.nvars() - AMBIENT
    }

    /// Symmetric 6x6 matrix with entries polynomial in the parameters.
    pub fn matrix(&self) -> Matrix<Poly<Q>> {
        let np = self.nparams();
        let mut m = Matrix::from_fn(AMBIENT, AMBIENT, |_, _| Poly::zero(np, ()));
        let half = Q::new(BigInt::one(), BigInt::from(2));
        for (mono, c) in self.poly.terms() {
            let e = mono.exps();
            let idx: Vec<usize> = (0..AMBIENT)
                .flat_map(|i| std::iter::repeat_n(i, e[i] as usize))
                .collect();
            let param = Monomial::from_exps(&e[AMBIENT..]);
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                let mut v = m.get(i, i).clone();
                v.add_term(param, c.clone());
                m.set(i, i, v);
            } else {
                for (a, b) in [(i, j), (j, i)] {
                    let mut v = m.get(a, b).clone();
                    v.add_term(param.clone(), c.clone() * half.clone());
                    m.set(a, b, v);
                }
            }
        }
        m
    }

    /// Scalar matrix of a parameter-free quadric.
    pub fn scalar_matrix(&self) -> Result<Matrix<Q>> {
        if self.nparams() != 0 {
            return Err(Error::Precondition("quadric depends on parameters".into()));
        }
        Ok(self.matrix().map(|p| p.coeff(&Monomial::one(0))))
    }

    /// Coordinates in the basis of the 21 quadric monomials (parameter-free).
    pub fn coefficient_vector(&self) -> Result<Vec<Q>> {
        if self.nparams() != 0 {
            return Err(Error::Precondition(
                "coefficient vector of a parametric quadric".into(),
            ));
        }
        self.poly.coords(&quadric_monomials())
    }
}

/// `(dF/dx0, ..., dF/dx5)`.
pub fn partials(f: &CubicFourfold) -> Vec<QuadraticForm> {
    (0..AMBIENT)
        .map(|i| QuadraticForm {
            poly: f.poly.derivative(i),
        })
        .collect()
}

/// Dimension of the span of the six partials (rank of the 6x21 coefficient
/// matrix). Parametric cubics must be specialized first.
pub fn polar_dimension(f: &CubicFourfold) -> Result<usize> {
    if f.nparams() != 0 {
        return Err(Error::Precondition(
            "polar dimension is defined after specializing the parameters; use generic_polar_dimension".into(),
        ));
    }
    let rows = partials(f)
        .iter()
        .map(|q| q.coefficient_vector())
        .collect::<Result<Vec<_>>>()?;
    rank(&Matrix::from_rows(rows)?)
}

/// Polar dimension after substituting the given values for the parameters.
/// Callers pick a random rational value and record it.
pub fn generic_polar_dimension(f: &CubicFourfold, values: &[Q]) -> Result<usize> {
    if values.len() != f.nparams() {
        return Err(Error::Arity {
            expected: f.nparams(),
            found: values.len(),
        });
    }
    let mut g = f.clone();
    for v in values {
        g = g.specialize(0, v)?;
    }
    polar_dimension(&g)
}

/// The polar quadric `sum p_i dF/dx_i` of a point `p` of P^5.
pub fn polar_quadric(f: &CubicFourfold, p: &[Q]) -> Result<QuadraticForm> {
    if p.len() != AMBIENT {
        return Err(Error::InvalidPoint(format!(
            "point of P^5 needs 6 coordinates, got {}",
            p.len()
        )));
    }
    if p.iter().all(Field::is_zero) {
        return Err(Error::InvalidPoint(
            "the zero vector is not a point of P^5".into(),
        ));
    }
    let n = f.poly.nvars();
    let mut acc = Poly::zero(n, ());
    for (i, d) in partials(f).into_iter().enumerate() {
        acc = &acc + &d.poly.scale(&p[i]);
    }
    Ok(QuadraticForm { poly: acc })
}

/// Matrix of the general polar quadric `sum y_l dF/dx_l`, with entries in
/// `y0..y5` followed by the cubic's parameters.
pub fn general_polar_matrix(f: &CubicFourfold) -> Matrix<Poly<Q>> {
    let np = f.nparams();
    let n = AMBIENT + np;
    let targets: Vec<usize> = (AMBIENT..n).collect();
    let mut out = Matrix::from_fn(AMBIENT, AMBIENT, |_, _| Poly::zero(n, ()));
    for (l, d) in partials(f).into_iter().enumerate() {
        let y = Poly::var(n, l, ());
        let m = d.matrix();
        for i in 0..AMBIENT {
            for j in 0..AMBIENT {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let lifted = e.embed(n, &targets);
                let v = out.get(i, j) + &(&y * &lifted);
                out.set(i, j, v);
            }
        }
    }
    out
}

/// Canonical integer representative of a projective point: denominators
/// cleared, content removed, first nonzero entry positive.
pub fn canonical_point(p: &[Q]) -> Result<Vec<BigInt>> {
    if p.iter().all(Field::is_zero) {
        return Err(Error::InvalidPoint("zero vector".into()));
    }
    let lcm = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let first_neg = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x /= &g;
        if first_neg {
            *x = -x.clone();
        }
    }
    Ok(ints)
}
