//! Plane projections of hyperplane sections of the sextic Del Pezzo
//! surface, over a prime field.
//!
//! The surface is the image of P^2 under the cubics through three
//! non-collinear points; a hyperplane section is a cubic `h` through them,
//! and its image under three of those cubics `(g1 : g2 : g3)` is a plane
//! sextic recovered by interpolation.

use serde::Serialize;

use crate::exactalg::random::{
    random_fp, random_prime_31, rng_from_seed, SeededRng, DEFAULT_PRIME,
};
use crate::exactalg::univariate::roots_mod_p;
use crate::exactalg::{kernel_basis, monomials_of_degree, rank, Field, Fp, Matrix, Modulus, Poly};
use crate::sexticlab::{evaluation_row, jacobian_scheme_degree};
use crate::{Error, Result};

/// Points fitted per image sextic.
pub const FIT_POINTS: usize = 60;
/// Fresh points the fitted sextic must vanish on.
pub const CHECK_POINTS: usize = 200;
const RESAMPLES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelPezzoSetup {
    pub prime: Modulus,
    pub seed: u64,
    pub base: [Vec<Fp>; 3],
    /// Basis of the cubics through the base points.
    pub cubics: Vec<Poly<Fp>>,
    /// The projection `(g1 : g2 : g3)`.
    pub g: [Poly<Fp>; 3],
}

fn det3(p: &[Vec<Fp>; 3]) -> Fp {
    let m = |i: usize, j: usize| p[i][j];
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

fn random_point(rng: &mut SeededRng, p: Modulus) -> Vec<Fp> {
    (0..3).map(|_| random_fp(rng, p)).collect()
}

fn random_combination(basis: &[Poly<Fp>], rng: &mut SeededRng, p: Modulus) -> Poly<Fp> {
    basis.iter().fold(Poly::zero(3, p), |acc, b| {
        &acc + &b.scale(&random_fp(rng, p))
    })
}

fn cubic_coords(polys: &[Poly<Fp>]) -> Result<Matrix<Fp>> {
    let monos = monomials_of_degree(3, 3);
    Matrix::from_rows(
        polys
            .iter()
            .map(|q| q.coords(&monos))
            .collect::<Result<_>>()?,
    )
}

impl DelPezzoSetup {
    /// Setup with given base points; the projection is drawn from `rng`.
    pub fn with_base_points(base: [Vec<Fp>; 3], seed: u64, rng: &mut SeededRng) -> Result<Self> {
        let p = base[0][0].modulus();
        if base
            .iter()
            .any(|b| b.len() != 3 || b.iter().any(|c| c.modulus() != p))
        {
            return Err(Error::Precondition(
                "base points need 3 coordinates in one prime field".into(),
            ));
        }
        if det3(&base).is_zero() {
            return Err(Error::Precondition("base points are collinear".into()));
        }
        let monos = monomials_of_degree(3, 3);
        let rows: Vec<Vec<Fp>> = base.iter().map(|b| evaluation_row(b, 3)).collect();
        let cubics: Vec<Poly<Fp>> = kernel_basis(&Matrix::from_rows(rows)?, &p)?
            .into_iter()
            .map(|k| Poly::from_coords(&monos, &k, p))
            .collect();
        if cubics.len() != 7 || rank(&cubic_coords(&cubics)?)? != 7 {
            return Err(Error::Precondition(
                "cubics through the base points do not form a 7-dimensional space".into(),
            ));
        }
        loop {
            let g: Vec<Poly<Fp>> = (0..3)
                .map(|_| random_combination(&cubics, rng, p))
                .collect();
            if rank(&cubic_coords(&g)?)? == 3 {
                let [a, b, c]: [Poly<Fp>; 3] = g.try_into().expect("three cubics");
                return Ok(DelPezzoSetup {
                    prime: p,
                    seed,
                    base,
                    cubics,
                    g: [a, b, c],
                });
            }
        }
    }

    pub fn random(seed: u64, p: Modulus, rng: &mut SeededRng) -> Result<Self> {
        loop {
            let base = [
                random_point(rng, p),
                random_point(rng, p),
                random_point(rng, p),
            ];
            if !det3(&base).is_zero() {
                return Self::with_base_points(base, seed, rng);
            }
        }
    }

    fn image(&self, q: &[Fp]) -> Option<Vec<Fp>> {
        let v: Vec<Fp> = self.g.iter().map(|g| g.evaluate(q)).collect();
        if v.iter().all(|c| c.is_zero()) {
            None
        } else {
            Some(v)
        }
    }

    /// Cubics through the base points that are singular at `q`.
    pub fn nodal_at(&self, q: &[Fp]) -> Result<Vec<Poly<Fp>>> {
        let p = self.prime;
        let mut rows: Vec<Vec<Fp>> = self.base.iter().map(|b| evaluation_row(b, 3)).collect();
        let monos = monomials_of_degree(3, 3);
        for i in 0..3 {
            rows.push(
                monos
                    .iter()
                    .map(|m| {
                        Poly::monomial(m.clone(), Fp::one_in(&p))
                            .derivative(i)
                            .evaluate(q)
                    })
                    .collect(),
            );
        }
        Ok(kernel_basis(&Matrix::from_rows(rows)?, &p)?
            .into_iter()
            .map(|k| Poly::from_coords(&monos, &k, p))
            .collect())
    }

    /// `e_a e_b` line products for the three pairs of base points.
    pub fn triangle(&self) -> Poly<Fp> {
        let line = |a: &[Fp], b: &[Fp]| {
            let c = [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ];
            Poly::linear(&c, self.prime)
        };
        let [e1, e2, e3] = &self.base;
        &(&line(e1, e2) * &line(e1, e3)) * &line(e2, e3)
    }
}

/// Points of `h = 0` (and of the exceptional curves over base points where
/// `h` is singular), pushed forward by the projection.
fn sample_image_points(
    setup: &DelPezzoSetup,
    h: &Poly<Fp>,
    n: usize,
    rng: &mut SeededRng,
) -> Result<Vec<Vec<Fp>>> {
    let p = setup.prime;
    let singular_base: Vec<usize> = (0..3)
        .filter(|&k| (0..3).all(|i| h.derivative(i).evaluate(&setup.base[k]).is_zero()))
        .collect();
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0usize;
    let mut turn = 0usize;
    while out.len() < n {
        attempts += 1;
        if attempts > 50 * n + 1000 {
            return Err(Error::DegenerateImage(
                "could not sample enough points on the section".into(),
            ));
        }
        turn += 1;
        let k = turn % 3;
        let e = &setup.base[k];
        let w = random_point(rng, p);
        if !singular_base.is_empty() && turn.is_multiple_of(4) {
            // tangent direction w at a base point where h is singular
            let b = &setup.base[singular_base[turn % singular_base.len()]];
            let img: Vec<Fp> = setup
                .g
                .iter()
                .map(|g| {
                    (0..3).fold(Fp::zero_in(&p), |acc, i| {
                        acc + g.derivative(i).evaluate(b) * w[i]
                    })
                })
                .collect();
            if img.iter().any(|c| !c.is_zero()) {
                out.push(img);
            }
            continue;
        }
        // h(e + u w) = c1 u + c2 u^2 + c3 u^3
        let images: Vec<Poly<Fp>> = (0..3)
            .map(|i| &Poly::constant(e[i], 1) + &Poly::var(1, 0, p).scale(&w[i]))
            .collect();
        let hu = h.substitute(&images)?;
        let mut c: Vec<Fp> = (0..=3)
            .map(|d| hu.coeff(&crate::exactalg::Monomial::from_exps(&[d])))
            .collect();
        c.remove(0);
        for u in roots_mod_p(&c, rng) {
            if u.is_zero() {
                continue;
            }
            let q: Vec<Fp> = (0..3).map(|i| e[i] + u * w[i]).collect();
            if let Some(img) = setup.image(&q) {
                out.push(img);
            }
        }
    }
    out.truncate(n);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageSextic {
    pub poly: Poly<Fp>,
    pub fit_points: usize,
    pub check_points: usize,
    pub verified: bool,
}

/// Implicit equation of the image of `h = 0` under the projection.
pub fn image_sextic(
    setup: &DelPezzoSetup,
    h: &Poly<Fp>,
    rng: &mut SeededRng,
) -> Result<ImageSextic> {
    if h.nvars() != 3 || !h.is_homogeneous() || h.degree() != Some(3) {
        return Err(Error::Precondition(
            "section must be a ternary cubic".into(),
        ));
    }
    if setup.base.iter().any(|b| !h.evaluate(b).is_zero()) {
        return Err(Error::Precondition(
            "section does not pass through the base points".into(),
        ));
    }
    let pts = sample_image_points(setup, h, FIT_POINTS, rng)?;
    let rows: Vec<Vec<Fp>> = pts.iter().map(|q| evaluation_row(q, 6)).collect();
    let ker = kernel_basis(&Matrix::from_rows(rows)?, &setup.prime)?;
    if ker.len() != 1 {
        return Err(Error::DegenerateImage(format!(
            "interpolation kernel has dimension {}",
            ker.len()
        )));
    }
    let poly = Poly::from_coords(&monomials_of_degree(3, 6), &ker[0], setup.prime).normalized();
    let fresh = sample_image_points(setup, h, CHECK_POINTS, rng)?;
    let verified = fresh.iter().all(|q| poly.evaluate(q).is_zero());
    Ok(ImageSextic {
        poly,
        fit_points: pts.len(),
        check_points: fresh.len(),
        verified,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionKind {
    Smooth,
    OneNodal,
    Triangle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionOutcome {
    pub kind: SectionKind,
    /// Jacobian-scheme degree of the section cubic itself.
    pub section_delta: Option<usize>,
    pub image_delta: Option<usize>,
    pub verified: bool,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub seed: u64,
    pub prime: u64,
    pub base_points: Vec<Vec<u64>>,
    pub attempts: usize,
    pub sections: Vec<SectionOutcome>,
}

impl ExperimentReport {
    /// `(smooth, one-nodal, triangle)` node counts.
    pub fn counts(&self) -> Vec<Option<usize>> {
        self.sections.iter().map(|s| s.image_delta).collect()
    }
}

fn section(
    setup: &DelPezzoSetup,
    kind: SectionKind,
    rng: &mut SeededRng,
) -> Result<SectionOutcome> {
    let p = setup.prime;
    let want = match kind {
        SectionKind::Smooth => Some(0),
        SectionKind::OneNodal => Some(1),
        SectionKind::Triangle => Some(3),
    };
    let mut h;
    let mut tries = 0;
    loop {
        tries += 1;
        h = match kind {
            SectionKind::Smooth => random_combination(&setup.cubics, rng, p),
            SectionKind::OneNodal => {
                let q = random_point(rng, p);
                random_combination(&setup.nodal_at(&q)?, rng, p)
            }
            SectionKind::Triangle => setup.triangle(),
        };
        if h.degree() == Some(3) && jacobian_scheme_degree(&h)?.delta() == want {
            break;
        }
        if tries > RESAMPLES {
            return Err(Error::DegenerateImage(format!("no {kind:?} section found")));
        }
    }
    let section_delta = jacobian_scheme_degree(&h)?.delta();
    let img = image_sextic(setup, &h, rng)?;
    let image_delta = jacobian_scheme_degree(&img.poly)?.delta();
    let names = crate::exactalg::Vars::new(&["x", "y", "z"]);
    Ok(SectionOutcome {
        kind,
        section_delta,
        image_delta,
        verified: img.verified,
        image: format!("{}", img.poly.display(&names)),
    })
}

/// Random setup over `F_p`, then the three kinds of sections.
pub fn run_experiment(seed: u64, p: Modulus) -> Result<ExperimentReport> {
    if !crate::exactalg::random::is_prime(p.0) || p.0 < 1 << 20 {
        return Err(Error::Precondition(format!("{p} is not a large prime")));
    }
    let mut rng = rng_from_seed(seed);
    let mut last = None;
    for attempt in 1..=RESAMPLES {
        let setup = DelPezzoSetup::random(seed, p, &mut rng)?;
        match run_on(&setup, &mut rng) {
            Ok(sections) => {
                return Ok(ExperimentReport {
                    seed,
                    prime: p.0,
                    base_points: setup
                        .base
                        .iter()
                        .map(|b| b.iter().map(|c| c.value()).collect())
                        .collect(),
                    attempts: attempt,
                    sections,
                })
            }
            Err(e @ Error::DegenerateImage(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::DegenerateImage("setup failed".into())))
}

pub fn run_on(setup: &DelPezzoSetup, rng: &mut SeededRng) -> Result<Vec<SectionOutcome>> {
    [
        SectionKind::Smooth,
        SectionKind::OneNodal,
        SectionKind::Triangle,
    ]
    .iter()
    .map(|&k| section(setup, k, rng))
    .collect()
}

/// The default prime and two more drawn from the seed.
pub fn experiment_primes(seed: u64) -> Vec<Modulus> {
    let mut rng = rng_from_seed(seed ^ 0x05ee_d0f9_e1e5);
    let mut out = vec![DEFAULT_PRIME];
    while out.len() < 3 {
        let p = random_prime_31(&mut rng);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}
