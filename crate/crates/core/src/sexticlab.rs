//! Singularities of ternary forms.
//!
//! The Jacobian-scheme degree is read off the Hilbert function of
//! `R/(f_x, f_y, f_z)` at three consecutive degrees past the socle degree of
//! a smooth curve of the same degree.

use std::collections::HashMap;

use serde::Serialize;

use crate::exactalg::{kernel_basis, monomials_of_degree, rank, Field, Matrix, Monomial, Poly, Q};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeStatus {
    /// Smooth: the window values are all zero.
    Empty,
    Finite(usize),
    NotStabilized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointType {
    Node,
    NonNode,
    Nonsingular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularReport<C: Field> {
    pub degree: u32,
    /// `(m, dim (R/J)_m)` for the window degrees.
    pub window: Vec<(u32, usize)>,
    pub status: SchemeStatus,
    pub points: Vec<(Vec<C>, PointType)>,
}

impl<C: Field> SingularReport<C> {
    pub fn delta(&self) -> Option<usize> {
        match self.status {
            SchemeStatus::Empty => Some(0),
            SchemeStatus::Finite(d) => Some(d),
            SchemeStatus::NotStabilized => None,
        }
    }

    pub fn all_nodes(&self) -> bool {
        self.points.iter().all(|(_, t)| *t == PointType::Node)
    }
}

fn ternary_degree<C: Field>(f: &Poly<C>) -> Result<u32> {
    if f.nvars() != 3 {
        return Err(Error::Arity {
            expected: 3,
            found: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroInput("ternary form is zero".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::Precondition(
            "ternary form is not homogeneous".into(),
        ));
    }
    Ok(f.degree().expect("nonzero"))
}

/// `dim (R/J)_m`, where `J` is generated by the partials of `f`.
pub fn hilbert_value<C: Field>(f: &Poly<C>, m: u32) -> Result<usize> {
    let d = ternary_degree(f)?;
    let cols = monomials_of_degree(3, m);
    if d == 0 || m + 1 < d {
        return Ok(cols.len());
    }
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let zero = C::zero_in(f.domain());
    let mut rows = Vec::new();
    for i in 0..3 {
        let g = f.derivative(i);
        if g.is_zero() {
            continue;
        }
        for u in monomials_of_degree(3, m + 1 - d) {
            let mut row = vec![zero.clone(); cols.len()];
            for (mono, c) in g.terms() {
                row[index[&mono.mul(&u)]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(cols.len());
    }
    Ok(cols.len() - rank(&Matrix::from_rows(rows)?)?)
}

/// Degrees at which the Hilbert function is sampled for a form of degree `d`.
pub fn stabilization_window(d: u32) -> [u32; 3] {
    let base = if d >= 2 { 3 * (d - 2) + 1 } else { 1 };
    [base, base + 1, base + 2]
}

pub fn jacobian_scheme_degree<C: Field>(f: &Poly<C>) -> Result<SingularReport<C>> {
    let d = ternary_degree(f)?;
    let window = stabilization_window(d)
        .iter()
        .map(|&m| Ok((m, hilbert_value(f, m)?)))
        .collect::<Result<Vec<_>>>()?;
    let v = window[0].1;
    let status = if window.iter().any(|w| w.1 != v) {
        SchemeStatus::NotStabilized
    } else if v == 0 {
        SchemeStatus::Empty
    } else {
        SchemeStatus::Finite(v)
    };
    Ok(SingularReport {
        degree: d,
        window,
        status,
        points: vec![],
    })
}

/// Jacobian-scheme degree plus the classification of caller-supplied
/// singular points.
pub fn analyze_with_points<C: Field>(f: &Poly<C>, points: &[Vec<C>]) -> Result<SingularReport<C>> {
    let mut r = jacobian_scheme_degree(f)?;
    for p in points {
        r.points.push((p.clone(), classify_singular_point(f, p)?));
    }
    Ok(r)
}

/// Local type of the curve `f = 0` at a point on it.
pub fn classify_singular_point<C: Field>(f: &Poly<C>, point: &[C]) -> Result<PointType> {
    ternary_degree(f)?;
    if point.len() != 3 || point.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidPoint(
            "expected a nonzero point with 3 coordinates".into(),
        ));
    }
    if !f.evaluate(point).is_zero() {
        return Err(Error::InvalidPoint("point is not on the curve".into()));
    }
    let dom = f.domain().clone();
    let k = point
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero point");
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    // x = u*e_a + v*e_b + w*p sends (0:0:1) to p
    let images: Vec<Poly<C>> = (0..3)
        .map(|r| {
            let mut c = vec![C::zero_in(&dom); 3];
            if r == others[0] {
                c[0] = C::one_in(&dom);
            }
            if r == others[1] {
                c[1] = C::one_in(&dom);
            }
            c[2] = point[r].clone();
            Poly::linear(&c, dom.clone())
        })
        .collect();
    let g = f.substitute(&images)?;
    let coeff = |a: u16, b: u16| -> C {
        let mut out = C::zero_in(&dom);
        for (m, c) in g.terms() {
            if m.0[0] == a && m.0[1] == b {
                out = out + c.clone();
            }
        }
        out
    };
    if !coeff(1, 0).is_zero() || !coeff(0, 1).is_zero() {
        return Ok(PointType::Nonsingular);
    }
    let (a, b, c) = (coeff(2, 0), coeff(1, 1), coeff(0, 2));
    let disc = b.clone() * b - C::from_int(4, &dom) * a * c;
    Ok(if disc.is_zero() {
        PointType::NonNode
    } else {
        PointType::Node
    })
}

fn projectively_equal<C: Field>(p: &[C], q: &[C]) -> bool {
    (0..p.len()).all(|i| {
        (i + 1..p.len())
            .all(|j| (p[i].clone() * q[j].clone() - p[j].clone() * q[i].clone()).is_zero())
    })
}

/// Values of the degree-`d` monomials at `p`.
pub fn evaluation_row<C: Field>(p: &[C], d: u32) -> Vec<C> {
    let dom = p[0].domain();
    monomials_of_degree(3, d)
        .iter()
        .map(|m| {
            let mut v = C::one_in(&dom);
            for (x, &e) in p.iter().zip(m.0.iter()) {
                for _ in 0..e {
                    v = v * x.clone();
                }
            }
            v
        })
        .collect()
}

/// Rank of the evaluation matrix of degree-`d` monomials at the points,
/// and whether it equals the number of points.
pub fn nodes_impose_independent_conditions<C: Field>(
    points: &[Vec<C>],
    d: u32,
) -> Result<(usize, bool)> {
    for (i, p) in points.iter().enumerate() {
        if p.len() != 3 || p.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidPoint(format!(
                "point {i} is not a point of the plane"
            )));
        }
        for (j, q) in points[..i].iter().enumerate() {
            if projectively_equal(p, q) {
                return Err(Error::Precondition(format!("points {j} and {i} coincide")));
            }
        }
    }
    if points.is_empty() {
        return Ok((0, true));
    }
    let rows: Vec<Vec<C>> = points.iter().map(|p| evaluation_row(p, d)).collect();
    let r = rank(&Matrix::from_rows(rows)?)?;
    Ok((r, r == points.len()))
}

/// Coefficient vector `(a0, a1, a2)` of a linear form.
pub fn line_coefficients(l: &Poly<Q>) -> Result<[Q; 3]> {
    if l.nvars() != 3 || l.degree() != Some(1) || !l.is_homogeneous() {
        return Err(Error::Precondition(
            "expected a nonzero ternary linear form".into(),
        ));
    }
    let v = l.coords(&monomials_of_degree(3, 1))?;
    Ok([v[0].clone(), v[1].clone(), v[2].clone()])
}

pub fn cross(a: &[Q], b: &[Q]) -> [Q; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Pairwise intersection points of lines, or an error if two lines
/// coincide or three pass through one point.
pub fn pairwise_intersections(lines: &[Poly<Q>]) -> Result<Vec<Vec<Q>>> {
    let coeffs = lines
        .iter()
        .map(line_coefficients)
        .collect::<Result<Vec<_>>>()?;
    let mut pts: Vec<Vec<Q>> = Vec::new();
    for i in 0..coeffs.len() {
        for j in i + 1..coeffs.len() {
            let p = cross(&coeffs[i], &coeffs[j]);
            if p.iter().all(Field::is_zero) {
                return Err(Error::Precondition(format!("lines {i} and {j} coincide")));
            }
            if pts.iter().any(|q| projectively_equal(q, &p)) {
                return Err(Error::Precondition(
                    "three of the lines are concurrent".into(),
                ));
            }
            pts.push(p.to_vec());
        }
    }
    Ok(pts)
}

/// Linear functionals on degree-`d` forms whose common kernel is the forms
/// vanishing at the points of `line = 0` cut out by `other`, i.e. the
/// remainder of `S|line` modulo `other|line` in an affine parameter. Needs
/// `other|line` of full degree with distinct roots, so the functionals stand
/// in for evaluation at those (possibly irrational) points.
pub fn line_section_functionals(line: &Poly<Q>, other: &Poly<Q>, d: u32) -> Result<Vec<Vec<Q>>> {
    let l = line_coefficients(line)?;
    let e = other
        .degree()
        .ok_or_else(|| Error::ZeroInput("residual curve is zero".into()))?;
    // two independent points A, B on the line with other(B) != 0
    let candidates: Vec<[Q; 3]> = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut v = [Q::zero_in(&()), Q::zero_in(&()), Q::zero_in(&())];
            v[i] = l[j].clone();
            v[j] = -l[i].clone();
            v
        })
        .filter(|v| v.iter().any(|c| !Field::is_zero(c)))
        .collect();
    let mut chosen = None;
    'outer: for (ai, a) in candidates.iter().enumerate() {
        for (bi, b) in candidates.iter().enumerate() {
            if ai == bi || cross(a, b).iter().all(Field::is_zero) {
                continue;
            }
            for k in 0..8i64 {
                // B + k*A keeps B's independence from A
                let bk: Vec<Q> = (0..3)
                    .map(|r| b[r].clone() + Q::from_int(k, &()) * a[r].clone())
                    .collect();
                if !Field::is_zero(&other.evaluate(&bk)) {
                    chosen = Some((a.to_vec(), bk));
                    break 'outer;
                }
            }
        }
    }
    let (a, b) =
        chosen.ok_or_else(|| Error::Precondition("residual curve contains the line".into()))?;
    let param = |p: &Poly<Q>| -> Result<Vec<Q>> {
        // coefficients in tau of p(A + tau*B)
        let images: Vec<Poly<Q>> = (0..3)
            .map(|r| Poly::linear(&[a[r].clone(), b[r].clone()], ()))
            .collect();
        let g = p.substitute(&images)?;
        let top = g.degree_in(1).unwrap_or(0) as usize;
        let mut out = vec![Q::zero_in(&()); top + 1];
        for (m, c) in g.terms() {
            out[m.0[1] as usize] = out[m.0[1] as usize].clone() + c.clone();
        }
        Ok(out)
    };
    let g = param(other)?;
    if g.len() != e as usize + 1 {
        return Err(Error::Precondition(
            "residual curve restricted to the line drops degree".into(),
        ));
    }
    if !squarefree(&g) {
        return Err(Error::Precondition(
            "residual curve is tangent to the line".into(),
        ));
    }
    let monos = monomials_of_degree(3, d);
    let mut cols: Vec<Vec<Q>> = Vec::with_capacity(monos.len());
    for m in &monos {
        let s = param(&Poly::monomial(m.clone(), Q::one_in(&())))?;
        let mut r = rem(&s, &g);
        r.resize(e as usize, Q::zero_in(&()));
        cols.push(r);
    }
    Ok((0..e as usize)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect())
}

fn rem(a: &[Q], m: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv = m[dm].inverse().expect("monic divisor");
    while r.len() > dm {
        let top = r.pop().expect("nonempty");
        if Field::is_zero(&top) {
            continue;
        }
        let f = top * inv.clone();
        let k = r.len() - dm;
        for i in 0..dm {
            r[k + i] = r[k + i].clone() - f.clone() * m[i].clone();
        }
    }
    r
}

fn squarefree(g: &[Q]) -> bool {
    let dg: Vec<Q> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| Q::from_int(i as i64, &()) * c.clone())
        .collect();
    let (mut a, mut b) = (g.to_vec(), dg);
    let trim = |v: &mut Vec<Q>| {
        while v.last().is_some_and(Field::is_zero) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let mut r = rem(&a, &b);
        trim(&mut r);
        a = b;
        b = r;
    }
    a.len() == 1
}

/// Rank of the conditions imposed on degree-`d` forms by rational points
/// together with line sections `(line, residual)`.
pub fn conditions_rank(
    points: &[Vec<Q>],
    sections: &[(Poly<Q>, Poly<Q>)],
    d: u32,
) -> Result<(usize, usize)> {
    let mut rows: Vec<Vec<Q>> = points.iter().map(|p| evaluation_row(p, d)).collect();
    for (l, o) in sections {
        rows.extend(line_section_functionals(l, o, d)?);
    }
    let n = rows.len();
    Ok((rank(&Matrix::from_rows(rows)?)?, n))
}

/// Basis of the cubics singular at `v` (kernel of the gradient conditions).
pub fn nodal_cubics_at<C: Field>(v: &[C]) -> Result<Vec<Poly<C>>> {
    if v.len() != 3 || v.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidPoint(
            "expected a nonzero point with 3 coordinates".into(),
        ));
    }
    let dom = v[0].domain();
    let monos = monomials_of_degree(3, 3);
    let rows: Vec<Vec<C>> = (0..3)
        .map(|i| {
            monos
                .iter()
                .map(|m| {
                    Poly::monomial(m.clone(), C::one_in(&dom))
                        .derivative(i)
                        .evaluate(v)
                })
                .collect()
        })
        .collect();
    Ok(kernel_basis(&Matrix::from_rows(rows)?, &dom)?
        .into_iter()
        .map(|k| Poly::from_coords(&monos, &k, dom.clone()))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleLemmaReport {
    pub vertices: Vec<Vec<Q>>,
    pub system_dims: [usize; 3],
    pub span_dim: usize,
    pub intersection_dim: usize,
    pub representative: Poly<Q>,
    pub matches_product: bool,
    /// `T * representative`, the sextic at which the systems meet.
    pub sextic: Poly<Q>,
}

fn check_triangle(t: &[Poly<Q>; 3], name: &str) -> Result<Vec<[Q; 3]>> {
    let c = t
        .iter()
        .map(line_coefficients)
        .collect::<Result<Vec<_>>>()?;
    for i in 0..3 {
        for j in i + 1..3 {
            if cross(&c[i], &c[j]).iter().all(Field::is_zero) {
                return Err(Error::Precondition(format!(
                    "{name} repeats a line (sides {i} and {j})"
                )));
            }
        }
    }
    let m = Matrix::from_rows(c.iter().map(|r| r.to_vec()).collect())?;
    if rank(&m)? < 3 {
        return Err(Error::Precondition(format!(
            "{name} has three concurrent sides"
        )));
    }
    Ok(c)
}

/// Span and intersection of the three systems of cubics nodal at the
/// vertices of `tbar`.
pub fn triangle_lemma_check(t: &[Poly<Q>; 3], tbar: &[Poly<Q>; 3]) -> Result<TriangleLemmaReport> {
    let ct = check_triangle(t, "first triangle")?;
    let cb = check_triangle(tbar, "second triangle")?;
    for (i, a) in ct.iter().enumerate() {
        for (j, b) in cb.iter().enumerate() {
            if cross(a, b).iter().all(Field::is_zero) {
                return Err(Error::Precondition(format!(
                    "side {i} of the first triangle is side {j} of the second"
                )));
            }
        }
    }
    let verts = |c: &[[Q; 3]]| -> Vec<Vec<Q>> {
        [(1, 2), (0, 2), (0, 1)]
            .iter()
            .map(|&(i, j)| cross(&c[i], &c[j]).to_vec())
            .collect()
    };
    let vt = verts(&ct);
    let vb = verts(&cb);
    for (i, p) in vt.iter().enumerate() {
        for (j, q) in vb.iter().enumerate() {
            if projectively_equal(p, q) {
                return Err(Error::Precondition(format!(
                    "vertex {i} of the first triangle is vertex {j} of the second"
                )));
            }
        }
    }
    let monos = monomials_of_degree(3, 3);
    let systems = vb
        .iter()
        .map(|v| nodal_cubics_at(v))
        .collect::<Result<Vec<_>>>()?;
    let dims = [systems[0].len(), systems[1].len(), systems[2].len()];
    let span_rows: Vec<Vec<Q>> = systems
        .iter()
        .flatten()
        .map(|p| p.coords(&monos))
        .collect::<Result<_>>()?;
    let span_dim = rank(&Matrix::from_rows(span_rows)?)?;
    // cubics singular at all three vertices
    let mut cond = Vec::new();
    for v in &vb {
        for i in 0..3 {
            cond.push(
                monos
                    .iter()
                    .map(|m| {
                        Poly::monomial(m.clone(), Q::one_in(&()))
                            .derivative(i)
                            .evaluate(v)
                    })
                    .collect(),
            );
        }
    }
    let inter = kernel_basis(&Matrix::from_rows(cond)?, &())?;
    let representative = inter
        .first()
        .map(|k| Poly::from_coords(&monos, k, ()).normalized())
        .unwrap_or_else(|| Poly::zero(3, ()));
    let product = &(&tbar[0] * &tbar[1]) * &tbar[2];
    let matches_product = inter.len() == 1 && representative.is_scalar_multiple_of(&product);
    let sextic = &(&(&t[0] * &t[1]) * &t[2]) * &representative;
    Ok(TriangleLemmaReport {
        vertices: vb,
        system_dims: dims,
        span_dim,
        intersection_dim: inter.len(),
        representative,
        matches_product,
        sextic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, qi, Fp, Modulus, Vars};

    fn v() -> Vars {
        Vars::new(&["x", "y", "z"])
    }

    fn p(s: &str) -> Poly<Q> {
        parse_poly(s, &v()).unwrap()
    }

    #[test]
    fn fermat_sextic_is_smooth() {
        let r = jacobian_scheme_degree(&p("x^6 + y^6 + z^6")).unwrap();
        assert_eq!(r.status, SchemeStatus::Empty);
        assert_eq!(r.window, vec![(13, 0), (14, 0), (15, 0)]);
    }

    #[test]
    fn six_lines() {
        let lines: Vec<Poly<Q>> = ["x", "y", "z", "x + y + z", "x + 2*y + 3*z", "x + 5*y + 7*z"]
            .iter()
            .map(|s| p(s))
            .collect();
        let f = lines.iter().skip(1).fold(lines[0].clone(), |a, b| &a * b);
        let pts = pairwise_intersections(&lines).unwrap();
        assert_eq!(pts.len(), 15);
        let r = analyze_with_points(&f, &pts).unwrap();
        assert_eq!(r.delta(), Some(15));
        assert!(r.all_nodes());
        let fp = f.reduce_mod(Modulus(1_000_003)).unwrap();
        assert_eq!(jacobian_scheme_degree(&fp).unwrap().delta(), Some(15));
    }

    #[test]
    fn double_line_does_not_stabilize() {
        let r = jacobian_scheme_degree(&p("x^2*y*z*(x+y+z)*(x-y)")).unwrap();
        assert_eq!(r.status, SchemeStatus::NotStabilized);
    }

    #[test]
    fn classify() {
        assert_eq!(
            classify_singular_point(&p("x*y*z"), &[qi(1), qi(0), qi(0)]).unwrap(),
            PointType::Node
        );
        assert_eq!(
            classify_singular_point(&p("y^2*z - x^3"), &[qi(0), qi(0), qi(1)]).unwrap(),
            PointType::NonNode
        );
        assert_eq!(
            classify_singular_point(&p("x^6 + y^6 - z^6"), &[qi(1), qi(0), qi(1)]).unwrap(),
            PointType::Nonsingular
        );
        assert!(matches!(
            classify_singular_point(&p("x*y*z"), &[qi(1), qi(1), qi(1)]),
            Err(Error::InvalidPoint(_))
        ));
        let m = Modulus(13);
        let f = p("x^6 + y^6 + z^6").reduce_mod(m).unwrap();
        // 2^6 = 64 = -1 mod 13
        let pt = [Fp::new(1, m), Fp::new(0, m), Fp::new(2, m)];
        assert_eq!(
            classify_singular_point(&f, &pt).unwrap(),
            PointType::Nonsingular
        );
    }

    #[test]
    fn independence() {
        let pts = vec![
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0)],
            vec![qi(0), qi(0), qi(1)],
        ];
        assert_eq!(
            nodes_impose_independent_conditions(&pts, 6).unwrap(),
            (3, true)
        );
        let many: Vec<Vec<Q>> = (0..29).map(|i| vec![qi(1), qi(i), qi(i * i + 1)]).collect();
        let (r, ok) = nodes_impose_independent_conditions(&many, 6).unwrap();
        assert!(r <= 28 && !ok);
        let dup = vec![vec![qi(1), qi(2), qi(3)], vec![qi(2), qi(4), qi(6)]];
        assert!(nodes_impose_independent_conditions(&dup, 6).is_err());
    }

    #[test]
    fn line_sections_match_rational_points() {
        // split residual, so the functionals can be compared with evaluations
        let line = p("x - y");
        let other = p("(x - z)*(x - 2*z)*(x + 3*z)");
        let f = line_section_functionals(&line, &other, 6).unwrap();
        let pts = [
            vec![qi(1), qi(1), qi(1)],
            vec![qi(2), qi(2), qi(1)],
            vec![qi(-3), qi(-3), qi(1)],
        ];
        let ev: Vec<Vec<Q>> = pts.iter().map(|q| evaluation_row(q, 6)).collect();
        let mut both = f.clone();
        both.extend(ev.clone());
        let rf = rank(&Matrix::from_rows(f).unwrap()).unwrap();
        let re = rank(&Matrix::from_rows(ev).unwrap()).unwrap();
        let rb = rank(&Matrix::from_rows(both).unwrap()).unwrap();
        assert_eq!((rf, re, rb), (3, 3, 3));
        assert!(line_section_functionals(&line, &p("(x - z)^2*(x + z)"), 6).is_err());
    }

    #[test]
    fn nodal_cubics() {
        let b = nodal_cubics_at(&[qi(0), qi(0), qi(1)]).unwrap();
        assert_eq!(b.len(), 7);
        let excluded = [p("x*z^2"), p("y*z^2"), p("z^3")];
        for q in &b {
            assert_eq!(q.len(), 1);
            assert!(!excluded.contains(q));
        }
        for q in nodal_cubics_at(&[qi(1), qi(1), qi(1)]).unwrap() {
            for i in 0..3 {
                assert!(Field::is_zero(&q.derivative(i).evaluate(&[
                    qi(1),
                    qi(1),
                    qi(1)
                ])));
            }
        }
    }

    #[test]
    fn triangle_lemma_fixture() {
        let t = [p("x"), p("y"), p("z")];
        let tb = [p("x + y + z"), p("x + 2*y + 3*z"), p("x + 5*y + 7*z")];
        let r = triangle_lemma_check(&t, &tb).unwrap();
        assert_eq!(r.system_dims, [7, 7, 7]);
        assert_eq!(r.span_dim, 10);
        assert_eq!(r.intersection_dim, 1);
        assert!(r.matches_product);
        let bad = [p("x + y + z"), p("2*x + 2*y + 2*z"), p("x + 5*y + 7*z")];
        assert!(matches!(
            triangle_lemma_check(&t, &bad),
            Err(Error::Precondition(_))
        ));
        let shared = [p("x"), p("x + 2*y + 3*z"), p("x + 5*y + 7*z")];
        assert!(triangle_lemma_check(&t, &shared).is_err());
    }
}
