//! Exact scalar arithmetic, sparse multivariate polynomials and exact linear
//! algebra over the rationals and prime fields.

pub mod field;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod random;
pub mod univariate;

pub use field::{qi, qr, reduce_rational, Field, Fp, Modulus, Q};
pub use matrix::{det, det_poly_matrix, kernel_basis, rank, rref, solve, Matrix};
pub use parse::{parse_poly, parse_rational, parse_rows, parse_vector};
pub use poly::{monomials_of_degree, Monomial, Poly, Vars};

/// Apply `images` to every entry of a polynomial matrix.
pub fn substitute_matrix<C: Field>(
    m: &Matrix<Poly<C>>,
    images: &[Poly<C>],
) -> crate::Result<Matrix<Poly<C>>> {
    let rows = m
        .to_rows()
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|p| p.substitute(images))
                .collect::<crate::Result<Vec<_>>>()
        })
        .collect::<crate::Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}
