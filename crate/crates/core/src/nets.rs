//! Nets of quadrics, planes of P^5 and discriminant sextics.

use crate::exactalg::{det_poly_matrix, kernel_basis, rank, Field, Matrix, Poly, Vars, Q};
use crate::polar::{general_polar_matrix, polar_quadric, CubicFourfold, QuadraticForm, AMBIENT};
use crate::{Error, Result};

/// Names of the net coordinates.
pub fn net_vars() -> Vars {
    Vars::indexed("l", 3)
}

/// An ordered triple of independent symmetric 6x6 matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetOfQuadrics {
    mats: [Matrix<Q>; 3],
}

impl NetOfQuadrics {
    pub fn new(mats: [Matrix<Q>; 3]) -> Result<Self> {
        for m in &mats {
            if m.rows() != AMBIENT || m.cols() != AMBIENT || !m.is_symmetric() {
                return Err(Error::Shape(
                    "net members must be symmetric 6x6 matrices".into(),
                ));
            }
        }
        let net = NetOfQuadrics { mats };
        if rank(&net.coefficient_matrix()?)? < 3 {
            return Err(Error::DegenerateNet(
                "the three quadrics are linearly dependent".into(),
            ));
        }
        Ok(net)
    }

    pub fn from_forms(forms: &[QuadraticForm]) -> Result<Self> {
        if forms.len() != 3 {
            return Err(Error::Shape(format!(
                "a net needs 3 quadrics, got {}",
                forms.len()
            )));
        }
        let m: Vec<Matrix<Q>> = forms
            .iter()
            .map(|q| q.scalar_matrix())
            .collect::<Result<_>>()?;
        let [a, b, c]: [Matrix<Q>; 3] = m.try_into().expect("three matrices");
        NetOfQuadrics::new([a, b, c])
    }

    pub fn matrices(&self) -> &[Matrix<Q>; 3] {
        &self.mats
    }

    pub fn forms(&self) -> Vec<QuadraticForm> {
        self.mats
            .iter()
            .map(|m| QuadraticForm::from_matrix(m).expect("validated"))
            .collect()
    }

    /// 3x21 matrix of quadric coefficients.
    pub fn coefficient_matrix(&self) -> Result<Matrix<Q>> {
        let rows = self
            .mats
            .iter()
            .map(|m| QuadraticForm::from_matrix(m)?.coefficient_vector())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    /// Unordered equality: the two nets span the same space of quadrics.
    pub fn same_span(&self, other: &NetOfQuadrics) -> Result<bool> {
        let a = self.coefficient_matrix()?;
        let mut rows = a.to_rows();
        rows.extend(other.coefficient_matrix()?.to_rows());
        Ok(rank(&Matrix::from_rows(rows)?)? == 3)
    }

    /// `l0*M0 + l1*M1 + l2*M2`.
    pub fn linear_matrix(&self) -> Matrix<Poly<Q>> {
        Matrix::from_fn(AMBIENT, AMBIENT, |i, j| {
            let c: Vec<Q> = self.mats.iter().map(|m| m.get(i, j).clone()).collect();
            Poly::linear(&c, ())
        })
    }

    /// Change of net coordinates: member `j` becomes `sum_i a[i][j] * M_i`,
    /// so the discriminant becomes `Delta(a * l)`.
    pub fn reparametrize(&self, a: &Matrix<Q>) -> Result<NetOfQuadrics> {
        if a.rows() != 3 || a.cols() != 3 {
            return Err(Error::Shape("net reparametrization must be 3x3".into()));
        }
        let mats: Vec<Matrix<Q>> = (0..3)
            .map(|j| {
                Matrix::from_fn(AMBIENT, AMBIENT, |r, c| {
                    (0..3).fold(Q::zero_in(&()), |acc, i| {
                        acc + a.get(i, j).clone() * self.mats[i].get(r, c).clone()
                    })
                })
            })
            .collect();
        let [x, y, z]: [Matrix<Q>; 3] = mats.try_into().expect("three matrices");
        NetOfQuadrics::new([x, y, z])
    }

    /// Ambient change of coordinates `M -> P^T M P`.
    pub fn congruence(&self, p: &Matrix<Q>) -> Result<NetOfQuadrics> {
        let pt = p.transpose();
        let mats: Vec<Matrix<Q>> = self
            .mats
            .iter()
            .map(|m| pt.mul(m)?.mul(p))
            .collect::<Result<_>>()?;
        let [x, y, z]: [Matrix<Q>; 3] = mats.try_into().expect("three matrices");
        NetOfQuadrics::new([x, y, z])
    }
}

/// A plane of P^5 as a 3x6 parametrization (rows span it) and/or three
/// linear equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneInP5 {
    parametrization: Option<Matrix<Q>>,
    equations: Option<Matrix<Q>>,
}

fn check_rank3(m: &Matrix<Q>, what: &str) -> Result<()> {
    if m.rows() != 3 || m.cols() != AMBIENT {
        return Err(Error::Shape(format!("{what} must be 3x6")));
    }
    let r = rank(m)?;
    if r != 3 {
        return Err(Error::DegenerateNet(format!(
            "{what} has rank {r}, expected 3"
        )));
    }
    Ok(())
}

impl PlaneInP5 {
    pub fn from_parametrization(p: Matrix<Q>) -> Result<Self> {
        check_rank3(&p, "plane parametrization")?;
        Ok(PlaneInP5 {
            parametrization: Some(p),
            equations: None,
        })
    }

    pub fn from_equations(e: Matrix<Q>) -> Result<Self> {
        check_rank3(&e, "plane equations")?;
        Ok(PlaneInP5 {
            parametrization: None,
            equations: Some(e),
        })
    }

    /// Both representations, checked against each other.
    pub fn new(p: Matrix<Q>, e: Matrix<Q>) -> Result<Self> {
        check_rank3(&p, "plane parametrization")?;
        check_rank3(&e, "plane equations")?;
        let prod = p.mul(&e.transpose())?;
        if prod.entries().any(|x| !Field::is_zero(x)) {
            return Err(Error::Precondition(
                "equations do not vanish on the parametrization".into(),
            ));
        }
        Ok(PlaneInP5 {
            parametrization: Some(p),
            equations: Some(e),
        })
    }

    pub fn parametrization(&self) -> Option<&Matrix<Q>> {
        self.parametrization.as_ref()
    }

    pub fn equations(&self) -> Option<&Matrix<Q>> {
        self.equations.as_ref()
    }

    /// Parametrization, computing it from the equations if needed.
    pub fn rows(&self) -> Result<Matrix<Q>> {
        Ok(plane_conversion(self)?.parametrization.expect("filled in"))
    }

    /// Coordinate plane spanned by `e_a, e_b, e_c`.
    pub fn coordinate(idx: [usize; 3]) -> Result<Self> {
        let p = Matrix::from_fn(3, AMBIENT, |r, c| {
            if c == idx[r] {
                Q::one_in(&())
            } else {
                Q::zero_in(&())
            }
        });
        PlaneInP5::from_parametrization(p)
    }
}

/// Fill in whichever representation is missing. Each side is the canonical
/// reduced-echelon kernel basis of the other, so applying this twice is a
/// no-op.
pub fn plane_conversion(plane: &PlaneInP5) -> Result<PlaneInP5> {
    match (&plane.parametrization, &plane.equations) {
        (Some(p), Some(e)) => PlaneInP5::new(p.clone(), e.clone()),
        (Some(p), None) => {
            check_rank3(p, "plane parametrization")?;
            let e = Matrix::from_rows(kernel_basis(p, &())?)?;
            PlaneInP5::new(p.clone(), e)
        }
        (None, Some(e)) => {
            check_rank3(e, "plane equations")?;
            let p = Matrix::from_rows(kernel_basis(e, &())?)?;
            PlaneInP5::new(p, e.clone())
        }
        (None, None) => Err(Error::Precondition("plane has no representation".into())),
    }
}

/// The net of polar quadrics of the rows of the plane parametrization.
pub fn net_from_plane(f: &CubicFourfold, plane: &PlaneInP5) -> Result<NetOfQuadrics> {
    if f.nparams() != 0 {
        return Err(Error::Precondition(
            "specialize the cubic's parameters before forming a net".into(),
        ));
    }
    let p = plane.rows()?;
    let forms = (0..3)
        .map(|i| polar_quadric(f, p.row(i)))
        .collect::<Result<Vec<_>>>()?;
    NetOfQuadrics::from_forms(&forms).map_err(|e| match e {
        Error::DegenerateNet(_) => {
            Error::DegenerateNet("the polar quadrics of the plane are dependent".into())
        }
        other => other,
    })
}

/// A ternary sextic (possibly with trailing parameters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSextic {
    poly: Poly<Q>,
}

impl PlaneSextic {
    pub fn new(poly: Poly<Q>) -> Result<Self> {
        if poly.nvars() < 3 || !poly.is_homogeneous_in(3, 6) {
            return Err(Error::Precondition(
                "plane sextic must be homogeneous of degree 6 in 3 variables".into(),
            ));
        }
        if poly.is_zero() {
            return Err(Error::ZeroInput("plane sextic is zero".into()));
        }
        Ok(PlaneSextic { poly })
    }

    pub fn poly(&self) -> &Poly<Q> {
        &self.poly
    }
}

/// Discriminant of a net: a sextic curve, or the whole plane when the net
/// lies in the discriminant hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discriminant {
    Curve(PlaneSextic),
    Improper,
}

impl Discriminant {
    pub fn curve(&self) -> Option<&PlaneSextic> {
        match self {
            Discriminant::Curve(c) => Some(c),
            Discriminant::Improper => None,
        }
    }

    pub fn poly(&self) -> Poly<Q> {
        match self {
            Discriminant::Curve(c) => c.poly.clone(),
            Discriminant::Improper => Poly::zero(3, ()),
        }
    }
}

/// `det(l0*M0 + l1*M1 + l2*M2)` in `l0, l1, l2`.
pub fn discriminant_sextic(net: &NetOfQuadrics) -> Result<Discriminant> {
    let d = det_poly_matrix(&net.linear_matrix())?;
    if d.is_zero() {
        return Ok(Discriminant::Improper);
    }
    Ok(Discriminant::Curve(PlaneSextic::new(d)?))
}

/// Determinant of the general polar matrix: the discriminant hypersurface
/// of the whole polar system, in `y0..y5` followed by the cubic's parameters.
pub fn polar_discriminant(f: &CubicFourfold) -> Result<Poly<Q>> {
    det_poly_matrix(&general_polar_matrix(f))
}

/// Pull a polynomial in `y0..y5` (plus `k` trailing parameters) back along
/// the plane parametrization `y = sum_i l_i * row_i`; the result is in
/// `l0, l1, l2` followed by the same parameters.
pub fn restrict_to_plane(g: &Poly<Q>, plane: &PlaneInP5) -> Result<Poly<Q>> {
    if g.nvars() < AMBIENT {
        return Err(Error::Arity {
            expected: AMBIENT,
            found: g.nvars(),
        });
    }
    let p = plane.rows()?;
    let k = g.nvars() - AMBIENT;
    let n = 3 + k;
    let mut images: Vec<Poly<Q>> = (0..AMBIENT)
        .map(|c| {
            let mut coeffs: Vec<Q> = (0..3).map(|r| p.get(r, c).clone()).collect();
            coeffs.resize(n, Q::zero_in(&()));
            Poly::linear(&coeffs, ())
        })
        .collect();
    for j in 0..k {
        images.push(Poly::var(n, 3 + j, ()));
    }
    g.substitute(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, parse_rows, qi};

    fn diag(d: [i64; 6]) -> Matrix<Q> {
        Matrix::from_fn(6, 6, |i, j| if i == j { qi(d[i]) } else { qi(0) })
    }

    #[test]
    fn fermat_coordinate_net_is_improper() {
        let f = CubicFourfold::fermat();
        let plane = PlaneInP5::coordinate([0, 1, 2]).unwrap();
        let net = net_from_plane(&f, &plane).unwrap();
        assert_eq!(net.matrices()[0], diag([3, 0, 0, 0, 0, 0]));
        assert_eq!(net.matrices()[2], diag([0, 0, 3, 0, 0, 0]));
        assert_eq!(discriminant_sextic(&net).unwrap(), Discriminant::Improper);
    }

    #[test]
    fn fermat_polar_discriminant() {
        let d = polar_discriminant(&CubicFourfold::fermat()).unwrap();
        let y = Vars::indexed("y", 6);
        assert_eq!(d, parse_poly("729*y0*y1*y2*y3*y4*y5", &y).unwrap());
    }

    #[test]
    fn dependent_nets_are_rejected() {
        let e = NetOfQuadrics::new([
            diag([1, 0, 0, 0, 0, 0]),
            diag([2, 0, 0, 0, 0, 0]),
            diag([0, 1, 0, 0, 0, 0]),
        ]);
        assert!(matches!(e, Err(Error::DegenerateNet(_))));
        let p =
            Matrix::from_rows(parse_rows("1,0,0,0,0,0;0,1,0,0,0,0;1,1,0,0,0,0").unwrap()).unwrap();
        assert!(PlaneInP5::from_parametrization(p).is_err());
    }

    #[test]
    fn plane_conversion_round_trip() {
        let plane = PlaneInP5::coordinate([0, 1, 2]).unwrap();
        let full = plane_conversion(&plane).unwrap();
        let e = full.equations().unwrap();
        assert_eq!(
            *e,
            Matrix::from_rows(parse_rows("0,0,0,1,0,0;0,0,0,0,1,0;0,0,0,0,0,1").unwrap()).unwrap()
        );
        assert_eq!(plane_conversion(&full).unwrap(), full);
        let back = plane_conversion(&PlaneInP5::from_equations(e.clone()).unwrap()).unwrap();
        assert_eq!(back.parametrization(), full.parametrization());
    }

    #[test]
    fn coordinate_vs_unordered_span() {
        let f = CubicFourfold::fermat();
        let a = net_from_plane(&f, &PlaneInP5::coordinate([0, 1, 2]).unwrap()).unwrap();
        let b = net_from_plane(&f, &PlaneInP5::coordinate([2, 0, 1]).unwrap()).unwrap();
        let c = net_from_plane(&f, &PlaneInP5::coordinate([0, 1, 3]).unwrap()).unwrap();
        assert!(a.same_span(&b).unwrap());
        assert!(!a.same_span(&c).unwrap());
    }
}
