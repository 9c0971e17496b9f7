//! Dense matrices and exact linear algebra: rank, reduced echelon form,
//! kernels, determinants of scalar and polynomial matrices.

use std::fmt::Debug;

use super::field::Field;
use super::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "ragged rows: expected {cols} entries, found {}",
                bad.len()
            )));
        }
        let nrows = rows.len();
        Ok(Matrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<C: Field> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize, d: &C::Domain) -> Self {
        Matrix::from_fn(rows, cols, |_, _| C::zero_in(d))
    }

    pub fn identity(n: usize, d: &C::Domain) -> Self {
        Matrix::from_fn(
            n,
            n,
            |i, j| if i == j { C::one_in(d) } else { C::zero_in(d) },
        )
    }

    pub fn mul(&self, o: &Matrix<C>) -> Result<Matrix<C>> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let d = self.domain_or_default(o)?;
        Ok(Matrix::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(C::zero_in(&d), |acc, k| {
                acc + self.get(i, k).clone() * o.get(k, j).clone()
            })
        }))
    }

    pub fn mul_vec(&self, v: &[C]) -> Result<Vec<C>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a.clone() * b.clone())
                    .reduce(|a, b| a + b)
                    .unwrap_or_else(|| C::zero_in(&v_domain(v)))
            })
            .collect())
    }

    fn domain_or_default(&self, o: &Matrix<C>) -> Result<C::Domain> {
        let a = common_domain(self.entries().chain(o.entries()))?;
        a.ok_or_else(|| Error::Shape("empty matrix".into()))
    }
}

fn v_domain<C: Field>(v: &[C]) -> C::Domain {
    v.first().map(|c| c.domain()).expect("nonempty vector")
}

/// The single domain shared by all entries; `None` if there are no entries.
pub fn common_domain<'a, C: Field + 'a>(
    entries: impl Iterator<Item = &'a C>,
) -> Result<Option<C::Domain>> {
    let mut dom: Option<C::Domain> = None;
    for e in entries {
        let d = e.domain();
        match &dom {
            None => dom = Some(d),
            Some(x) if *x != d => return Err(Error::DomainMismatch(format!("{x:?} vs {d:?}"))),
            _ => {}
        }
    }
    Ok(dom)
}

/// Rank of a scalar matrix. Over the rationals this runs fraction-free
/// integer elimination.
pub fn rank<C: Field>(m: &Matrix<C>) -> Result<usize> {
    if common_domain(m.entries())?.is_none() {
        return Ok(0);
    }
    Ok(C::rank_of(m.to_rows()))
}

/// Reduced row echelon form and pivot columns.
pub fn rref<C: Field>(m: &Matrix<C>) -> Result<(Matrix<C>, Vec<usize>)> {
    let Some(d) = common_domain(m.entries())? else {
        return Ok((m.clone(), vec![]));
    };
    let mut a = m.to_rows();
    let (nr, nc) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let _ = d;
    Ok((Matrix::from_rows(a)?, pivots))
}

/// Reduced-echelon basis of the right null space: one vector per free
/// column, with a 1 in that column and zeros in the other free columns.
pub fn kernel_basis<C: Field>(m: &Matrix<C>, d: &C::Domain) -> Result<Vec<Vec<C>>> {
    if let Some(md) = common_domain(m.entries())? {
        if md != *d {
            return Err(Error::DomainMismatch(format!("{md:?} vs {d:?}")));
        }
    }
    let (r, pivots) = rref(m)?;
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![C::zero_in(d); m.cols];
        v[f] = C::one_in(d);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, f).clone();
        }
        basis.push(v);
    }
    Ok(basis)
}

/// One solution of `m x = b`, if any.
pub fn solve<C: Field>(m: &Matrix<C>, b: &[C], d: &C::Domain) -> Result<Option<Vec<C>>> {
    if b.len() != m.rows {
        return Err(Error::Shape(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows
        )));
    }
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug)?;
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![C::zero_in(d); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, m.cols).clone();
    }
    Ok(Some(x))
}

/// Determinant of a square scalar matrix.
pub fn det<C: Field>(m: &Matrix<C>) -> Result<C> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let Some(d) = common_domain(m.entries())? else {
        return Err(Error::Shape("determinant of an empty matrix".into()));
    };
    let n = m.rows;
    let mut a = m.to_rows();
    let mut acc = C::one_in(&d);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(C::zero_in(&d));
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        acc = acc * a[c][c].clone();
        let inv = a[c][c].inverse().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * inv.clone();
            for j in c..n {
                let v = a[i][j].clone() - f.clone() * a[c][j].clone();
                a[i][j] = v;
            }
        }
    }
    Ok(acc)
}

/// Determinant of a square matrix of polynomials by dynamic programming over
/// row subsets: the minor on rows `S` and the first `|S|` columns is expanded
/// along its last column, and every such minor is computed once.
pub fn det_poly_matrix<C: Field>(m: &Matrix<Poly<C>>) -> Result<Poly<C>> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Err(Error::Shape("determinant of an empty matrix".into()));
    }
    if n > 20 {
        return Err(Error::Shape(format!(
            "subset-minor determinant limited to n <= 20, got {n}"
        )));
    }
    let first = m.get(0, 0);
    let (nvars, dom) = (first.nvars(), first.domain().clone());
    for e in m.entries() {
        if e.nvars() != nvars {
            return Err(Error::Arity {
                expected: nvars,
                found: e.nvars(),
            });
        }
        if *e.domain() != dom {
            return Err(Error::DomainMismatch(format!(
                "{dom:?} vs {:?}",
                e.domain()
            )));
        }
    }
    let size = 1usize << n;
    let mut minors: Vec<Option<Poly<C>>> = vec![None; size];
    minors[0] = Some(Poly::one(nvars, dom.clone()));
    // masks grouped by popcount so each level only reads the previous one
    let mut by_count: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 0..size {
        by_count[mask.count_ones() as usize].push(mask);
    }
    for k in 1..=n {
        let col = k - 1;
        for &mask in &by_count[k] {
            let mut acc = Poly::zero(nvars, dom.clone());
            let mut pos = 0;
            for r in 0..n {
                if mask & (1 << r) == 0 {
                    continue;
                }
                let entry = m.get(r, col);
                if !entry.is_zero() {
                    if let Some(sub) = &minors[mask & !(1 << r)] {
                        if !sub.is_zero() {
                            let t = entry * sub;
                            // sign of the cofactor at (pos, k-1) inside the k x k minor
                            acc = if (pos + col) % 2 == 0 {
                                &acc + &t
                            } else {
                                &acc - &t
                            };
                        }
                    }
                }
                pos += 1;
            }
            minors[mask] = Some(acc);
        }
        for &mask in &by_count[k - 1] {
            minors[mask] = None;
        }
    }
    Ok(minors[size - 1].take().expect("full minor"))
}

#[cfg(test)]
mod tests {
    use super::super::field::{qi, Fp, Modulus, Q};
    use super::*;

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| qi(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Q>::identity(6, &())).unwrap(), 6);
        assert_eq!(rank(&qm(&[&[1, 2], &[2, 4]])).unwrap(), 1);
        assert_eq!(rank(&qm(&[&[0, 0], &[0, 0]])).unwrap(), 0);
    }

    #[test]
    fn kernel_examples() {
        let z = qm(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let k = kernel_basis(&z, &()).unwrap();
        assert_eq!(k.len(), 3);
        assert_eq!(k[0], vec![qi(1), qi(0), qi(0)]);
        assert!(kernel_basis(&Matrix::<Q>::identity(4, &()), &())
            .unwrap()
            .is_empty());
        let k = kernel_basis(&qm(&[&[1, 1, 0]]), &()).unwrap();
        assert_eq!(
            k,
            vec![vec![qi(-1), qi(1), qi(0)], vec![qi(0), qi(0), qi(1)]]
        );
    }

    #[test]
    fn mixed_moduli_rejected() {
        let m =
            Matrix::from_rows(vec![vec![Fp::new(1, Modulus(7)), Fp::new(1, Modulus(11))]]).unwrap();
        assert!(matches!(rank(&m), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn non_square_determinants() {
        let m: Matrix<Poly<Q>> = Matrix::from_fn(2, 3, |_, _| Poly::one(1, ()));
        assert!(matches!(det_poly_matrix(&m), Err(Error::Shape(_))));
        assert!(matches!(det(&qm(&[&[1, 2, 3]])), Err(Error::Shape(_))));
    }

    #[test]
    fn one_by_one_and_diagonal() {
        let f = Poly::<Q>::var(2, 0, ());
        let m = Matrix::from_rows(vec![vec![f.clone()]]).unwrap();
        assert_eq!(det_poly_matrix(&m).unwrap(), f);
        let l = |i| Poly::<Q>::var(6, i, ());
        let diag = Matrix::from_fn(6, 6, |i, j| if i == j { l(i) } else { Poly::zero(6, ()) });
        let expect = (0..6).fold(Poly::one(6, ()), |acc, i| &acc * &l(i));
        assert_eq!(det_poly_matrix(&diag).unwrap(), expect);
    }

    #[test]
    fn scalar_det_and_solve() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(&m).unwrap(), qi(18));
        let x = solve(&m, &[qi(3), qi(5), qi(5)], &()).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![qi(3), qi(5), qi(5)]);
        let sing = qm(&[&[1, 1], &[1, 1]]);
        assert!(solve(&sing, &[qi(1), qi(2)], &()).unwrap().is_none());
    }
}
