//! The deformations `F_ijk(t) = t*x_i*x_j*x_k + sum x_l^3` of the Fermat
//! cubic, their polar discriminants, Hesse degenerations and the restriction
//! to the plane `N0`.

use crate::exactalg::random::{cube_root_of_unity, random_prime_1_mod_3, rng_from_seed};
use crate::exactalg::univariate::{rational_roots, roots_mod_p};
use crate::exactalg::{qi, qr, rank, Field, Fp, Matrix, Modulus, Monomial, Poly, Vars, Q};
use crate::nets::{restrict_to_plane, PlaneInP5};
use crate::polar::{general_polar_matrix, CubicFourfold, AMBIENT};
use crate::sexticlab::jacobian_scheme_degree;
use crate::{Error, Result};

/// Index of `t` in `y0..y5, t` and `x0..x5, t`.
pub const T: usize = AMBIENT;

pub fn y_vars() -> Vars {
    Vars::indexed_with_t("y", AMBIENT)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeformationFamily {
    triple: [usize; 3],
}

impl DeformationFamily {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        if i >= AMBIENT || j >= AMBIENT || k >= AMBIENT {
            return Err(Error::Precondition(format!(
                "indices ({i},{j},{k}) must lie in 0..5"
            )));
        }
        if i == j || j == k || i == k {
            return Err(Error::Precondition(format!(
                "indices ({i},{j},{k}) must be distinct"
            )));
        }
        Ok(DeformationFamily { triple: [i, j, k] })
    }

    /// All 20 unordered triples, ascending.
    pub fn all() -> Vec<DeformationFamily> {
        let mut out = Vec::new();
        for i in 0..AMBIENT {
            for j in i + 1..AMBIENT {
                for k in j + 1..AMBIENT {
                    out.push(DeformationFamily { triple: [i, j, k] });
                }
            }
        }
        out
    }

    pub fn triple(&self) -> [usize; 3] {
        self.triple
    }

    /// The triple sorted ascending.
    pub fn sorted(&self) -> [usize; 3] {
        let mut s = self.triple;
        s.sort();
        s
    }

    /// Indices not in the triple, ascending.
    pub fn complement(&self) -> [usize; 3] {
        let c: Vec<usize> = (0..AMBIENT).filter(|l| !self.triple.contains(l)).collect();
        [c[0], c[1], c[2]]
    }

    /// `F_ijk(t)` in `x0..x5, t`.
    pub fn cubic(&self) -> CubicFourfold {
        let n = AMBIENT + 1;
        let mut p = Poly::zero(n, ());
        for l in 0..AMBIENT {
            let mut m = Monomial::one(n);
            m.0[l] = 3;
            p.add_term(m, qi(1));
        }
        let mut m = Monomial::one(n);
        for &l in &self.triple {
            m.0[l] += 1;
        }
        m.0[T] = 1;
        p.add_term(m, qi(1));
        CubicFourfold::new(p).expect("valid family")
    }
}

/// Matrix of the general polar quadric `sum y_l dF/dx_l`, entries in
/// `y0..y5, t`.
pub fn family_polar_matrix(fam: &DeformationFamily) -> Matrix<Poly<Q>> {
    general_polar_matrix(&fam.cubic())
}

pub fn family_discriminant(fam: &DeformationFamily) -> Result<Poly<Q>> {
    crate::nets::polar_discriminant(&fam.cubic())
}

fn y(l: usize) -> Poly<Q> {
    Poly::var(AMBIENT + 1, l, ())
}

/// `(27 + t^3/4) y_i y_j y_k - (3/4) t^2 (y_i^3 + y_j^3 + y_k^3)` in
/// `y0..y5, t`.
pub fn hesse_factor(fam: &DeformationFamily) -> Poly<Q> {
    let [i, j, k] = fam.triple;
    let t = y(T);
    let a = &Poly::constant(qi(27), AMBIENT + 1) + &t.pow(3).scale(&qr(1, 4));
    let prod = &(&y(i) * &y(j)) * &y(k);
    let cubes = &(&y(i).pow(3) + &y(j).pow(3)) + &y(k).pow(3);
    &(&a * &prod) - &(&t.pow(2).scale(&qr(3, 4)) * &cubes)
}

/// The closed form `27 y_a y_b y_c * hesse_factor` of the discriminant.
pub fn expected_family_discriminant(fam: &DeformationFamily) -> Poly<Q> {
    let [a, b, c] = fam.complement();
    let lines = (&(&y(a) * &y(b)) * &y(c)).scale(&qi(27));
    &lines * &hesse_factor(fam)
}

/// `y_a - y_i - y_j + y_k`, `y_b - y_i + y_j - 2 y_k`, `y_c - y_i - 2 y_j - 3 y_k`
/// with `(a, b, c)` the complement and `(i, j, k)` the sorted triple; for
/// `(1, 3, 5)` this is the plane `N0` literally. Rows of the parametrization
/// correspond to the coordinates `y_i, y_j, y_k`.
pub fn n0_plane(fam: &DeformationFamily) -> Result<PlaneInP5> {
    let [i, j, k] = fam.sorted();
    let [a, b, c] = fam.complement();
    // y_a, y_b, y_c as combinations of (y_i, y_j, y_k)
    let images: [(usize, [i64; 3]); 3] = [(a, [1, 1, -1]), (b, [1, -1, 2]), (c, [1, 2, 3])];
    let mut p = Matrix::zeros(3, AMBIENT, &());
    let mut e = Matrix::zeros(3, AMBIENT, &());
    for (r, &coord) in [i, j, k].iter().enumerate() {
        p.set(r, coord, qi(1));
        for (dep, w) in &images {
            p.set(r, *dep, qi(w[r]));
        }
    }
    for (r, (dep, w)) in images.iter().enumerate() {
        e.set(r, *dep, qi(1));
        for (s, &coord) in [i, j, k].iter().enumerate() {
            e.set(r, coord, qi(-w[s]));
        }
    }
    PlaneInP5::new(p, e)
}

/// Names of the plane coordinates of `n0_plane`.
pub fn n0_vars(fam: &DeformationFamily) -> Vars {
    let s = fam.sorted();
    Vars::new(&[
        format!("y{}", s[0]),
        format!("y{}", s[1]),
        format!("y{}", s[2]),
    ])
}

/// `D(t) = sum t^m D_m` of ternary sextics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticPencil {
    terms: Vec<Poly<Q>>,
}

impl SexticPencil {
    pub fn new(terms: Vec<Poly<Q>>) -> Result<Self> {
        if terms.first().is_none_or(|d| d.is_zero()) {
            return Err(Error::ZeroInput(
                "the constant member of the pencil is zero".into(),
            ));
        }
        for d in &terms {
            if d.nvars() != 3 || !d.is_homogeneous_in(3, 6) {
                return Err(Error::Precondition(
                    "pencil members must be ternary sextics".into(),
                ));
            }
        }
        Ok(SexticPencil { terms })
    }

    pub fn terms(&self) -> &[Poly<Q>] {
        &self.terms
    }

    pub fn at(&self, t0: &Q) -> Poly<Q> {
        let mut acc = Poly::zero(3, ());
        let mut pw = qi(1);
        for d in &self.terms {
            acc = &acc + &d.scale(&pw);
            pw *= t0.clone();
        }
        acc
    }
}

/// Restrict the family discriminant to `n0_plane` and expand in `t`.
pub fn restrict_to_n0(fam: &DeformationFamily) -> Result<SexticPencil> {
    let disc = family_discriminant(fam)?;
    let r = restrict_to_plane(&disc, &n0_plane(fam)?)?;
    let mut terms: Vec<Poly<Q>> = r
        .coefficients_in(3)
        .iter()
        .map(|c| c.project_vars(&[0, 1, 2]))
        .collect::<Result<_>>()?;
    terms.resize(4, Poly::zero(3, ()));
    SexticPencil::new(terms)
}

/// The three lines of `D_0` besides the coordinate lines, in plane coordinates.
pub fn n0_triangle() -> [Poly<Q>; 3] {
    let l = |c: [i64; 3]| Poly::linear(&[qi(c[0]), qi(c[1]), qi(c[2])], ());
    [l([1, 1, -1]), l([1, -1, 2]), l([1, 2, 3])]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tangency {
    Order(usize),
    Infinite,
}

/// First `m >= 1` with `D_m` not a scalar multiple of `D_0`.
pub fn tangency_order(pencil: &SexticPencil) -> Tangency {
    let d0 = &pencil.terms[0];
    for (m, d) in pencil.terms.iter().enumerate().skip(1) {
        if !d.is_scalar_multiple_of(d0) {
            return Tangency::Order(m);
        }
    }
    Tangency::Infinite
}

/// Rank of a symmetric matrix of polynomials at a point; `t0` supplies the
/// trailing parameter when the matrix has one.
pub fn quadric_rank_at(m: &Matrix<Poly<Q>>, point: &[Q], t0: Option<&Q>) -> Result<usize> {
    if point.iter().all(Field::is_zero) {
        return Err(Error::InvalidPoint("zero vector".into()));
    }
    let mut values = point.to_vec();
    if let Some(t) = t0 {
        values.push(t.clone());
    }
    let n = m.get(0, 0).nvars();
    if values.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: values.len(),
        });
    }
    rank(&m.map(|e| e.evaluate(&values)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSplitting {
    pub t: Q,
    /// Hesse factor at `t`, in `y_i, y_j, y_k`.
    pub cubic: Poly<Q>,
    /// The three lines `y_i + z^m y_j + z^2m y_k` over `F_p`.
    pub lines: Vec<Poly<Fp>>,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub m: u32,
    /// `t^3 - 9 z^m t^2 + 108`, little-endian over `F_p`.
    pub coeffs: Vec<Fp>,
    pub roots: Vec<Fp>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HesseReport {
    pub prime: Modulus,
    pub zeta: Fp,
    pub rational_roots: Vec<(Q, u32)>,
    pub splittings: Vec<LineSplitting>,
    pub branches: Vec<Branch>,
    /// The product of the three branches is `(t^3 + 108)^3 - 729 t^6`.
    pub branch_product_identity: bool,
    /// The Hesse factor at `t = 1` is a smooth cubic.
    pub smooth_at_one: bool,
}

fn ternary_factor(fam: &DeformationFamily, t0: &Q) -> Result<Poly<Q>> {
    let [i, j, k] = fam.triple;
    let h = hesse_factor(fam).specialize(T, t0);
    h.project_vars(&[i, j, k])
}

fn mul_univariate(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    let m = a[0].modulus();
    let mut out = vec![Fp::zero_in(&m); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + *x * *y;
        }
    }
    out
}

/// Degenerations of the Hesse factor into triangles of lines.
pub fn hesse_degenerations(fam: &DeformationFamily, seed: u64) -> Result<HesseReport> {
    let mut rng = rng_from_seed(seed);
    let p = random_prime_1_mod_3(&mut rng);
    let zeta =
        cube_root_of_unity(p).ok_or_else(|| Error::Precondition(format!("{p} is not 1 mod 3")))?;
    // 27 + t^3/4 = (9/4) t^2, cleared
    let roots = rational_roots(&[qi(108), qi(0), qi(-9), qi(1)]);
    let mut splittings = Vec::new();
    for (t0, _) in &roots {
        let cubic = ternary_factor(fam, t0)?;
        let reduced = cubic.reduce_mod(p)?;
        let one = Fp::one_in(&p);
        let lines: Vec<Poly<Fp>> = (0..3u64)
            .map(|m| Poly::linear(&[one, zeta.pow(m), zeta.pow(2 * m)], p))
            .collect();
        let mut rest = Some(reduced);
        for l in &lines {
            rest = rest.and_then(|r| r.div_exact(l));
        }
        let certified = rest.is_some_and(|q| q.degree() == Some(0));
        splittings.push(LineSplitting {
            t: t0.clone(),
            cubic,
            lines,
            certified,
        });
    }
    let f = |v: i128| Fp::new(v, p);
    let branch = |m: u32| vec![f(108), f(0), -f(9) * zeta.pow(m as u64), f(1)];
    let branches: Vec<Branch> = (1..3u32)
        .map(|m| {
            let coeffs = branch(m);
            let roots = roots_mod_p(&coeffs, &mut rng);
            Branch { m, coeffs, roots }
        })
        .collect();
    let product = mul_univariate(&mul_univariate(&branch(0), &branch(1)), &branch(2));
    // (t^3 + 108)^3 - 729 t^6
    let a = vec![f(108), f(0), f(0), f(1)];
    let mut expected = mul_univariate(&mul_univariate(&a, &a), &a);
    expected[6] = expected[6] - f(729);
    let smooth_at_one = jacobian_scheme_degree(&ternary_factor(fam, &qi(1))?)?.delta() == Some(0);
    Ok(HesseReport {
        prime: p,
        zeta,
        rational_roots: roots,
        splittings,
        branches,
        branch_product_identity: product == expected,
        smooth_at_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    #[test]
    fn closed_form_matrix_and_discriminant() {
        let fam = DeformationFamily::new(1, 3, 5).unwrap();
        let m = family_polar_matrix(&fam);
        let v = y_vars();
        let e = |s: &str| parse_poly(s, &v).unwrap();
        for i in 0..6 {
            assert_eq!(*m.get(i, i), e(&format!("3*y{i}")));
        }
        assert_eq!(*m.get(1, 3), e("1/2*t*y5"));
        assert_eq!(*m.get(5, 1), e("1/2*t*y3"));
        assert_eq!(*m.get(3, 5), e("1/2*t*y1"));
        assert_eq!(*m.get(0, 1), e("0"));
        let d = family_discriminant(&fam).unwrap();
        let formula = e("27*y0*y2*y4*((27 + t^3/4)*y1*y3*y5 - 3/4*t^2*(y1^3 + y3^3 + y5^3))");
        assert_eq!(d, formula);
        assert_eq!(d, expected_family_discriminant(&fam));
        assert_eq!(d.specialize(T, &qi(0)), e("729*y0*y1*y2*y3*y4*y5"));
    }

    #[test]
    fn bad_triples() {
        assert!(DeformationFamily::new(1, 1, 2).is_err());
        assert!(DeformationFamily::new(0, 1, 6).is_err());
        assert_eq!(DeformationFamily::all().len(), 20);
    }

    #[test]
    fn n0_pencil() {
        let fam = DeformationFamily::new(1, 3, 5).unwrap();
        let plane = n0_plane(&fam).unwrap();
        let pv = n0_vars(&fam);
        assert_eq!(pv.0, vec!["y1", "y3", "y5"]);
        let pencil = restrict_to_n0(&fam).unwrap();
        let [l1, l2, l3] = n0_triangle();
        let coords = parse_poly("y1*y3*y5", &pv).unwrap();
        let expected = (&(&(&l1 * &l2) * &l3) * &coords).scale(&qi(729));
        assert_eq!(pencil.terms()[0], expected);
        assert!(pencil.terms()[1].is_zero());
        assert_eq!(tangency_order(&pencil), Tangency::Order(2));
        let tri = &(&l1 * &l2) * &l3;
        for t0 in [1, 2, 5] {
            assert!(pencil.at(&qi(t0)).div_exact(&tri).is_some());
        }
        assert!(plane.equations().is_some());
    }

    #[test]
    fn tangency_edge_cases() {
        let v = Vars::new(&["x", "y", "z"]);
        let d0 = parse_poly("x^6 + y^6 + z^6", &v).unwrap();
        let d1 = parse_poly("x*y^5", &v).unwrap();
        let z = Poly::zero(3, ());
        assert_eq!(
            tangency_order(&SexticPencil::new(vec![d0.clone(), d1]).unwrap()),
            Tangency::Order(1)
        );
        let constant = SexticPencil::new(vec![d0.clone(), z.clone(), z.clone(), z]).unwrap();
        assert_eq!(tangency_order(&constant), Tangency::Infinite);
        assert!(SexticPencil::new(vec![Poly::zero(3, ()), d0]).is_err());
    }

    #[test]
    fn hesse() {
        let fam = DeformationFamily::new(1, 3, 5).unwrap();
        let r = hesse_degenerations(&fam, 0).unwrap();
        assert_eq!(r.rational_roots, vec![(qi(-3), 1), (qi(6), 2)]);
        assert!(r.splittings.iter().all(|s| s.certified));
        assert!(r.branch_product_identity);
        assert!(r.smooth_at_one);
        assert_eq!(r.prime.0 % 3, 1);
        let v = Vars::new(&["y1", "y3", "y5"]);
        let six = r.splittings.iter().find(|s| s.t == qi(6)).unwrap();
        assert_eq!(
            six.cubic,
            parse_poly("-27*(y1^3 + y3^3 + y5^3 - 3*y1*y3*y5)", &v).unwrap()
        );
    }

    #[test]
    fn fermat_ranks() {
        let fam = DeformationFamily::new(1, 3, 5).unwrap();
        let m = family_polar_matrix(&fam);
        let z = qi(0);
        let pt = |v: [i64; 6]| v.iter().map(|&x| qi(x)).collect::<Vec<_>>();
        assert_eq!(
            quadric_rank_at(&m, &pt([1, 1, 1, 1, 0, 0]), Some(&z)).unwrap(),
            4
        );
        assert_eq!(
            quadric_rank_at(&m, &pt([1, 1, 1, 1, 1, 0]), Some(&z)).unwrap(),
            5
        );
        assert_eq!(
            quadric_rank_at(&m, &pt([1, 2, 3, 4, 5, 6]), Some(&z)).unwrap(),
            6
        );
        assert!(quadric_rank_at(&m, &pt([1, 2, 3, 4, 5, 6]), None).is_err());
    }
}
