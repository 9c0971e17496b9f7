//! Recover every cubic whose partials at prescribed slots are multiples of
//! prescribed quadrics.
//!
//! Unknowns are the 56 cubic coefficients (graded-lex) followed by one
//! scalar per slot; equations equate `dF/dx_i` with `s * Q` coefficient by
//! coefficient.

use serde::Serialize;

use crate::exactalg::{
    kernel_basis, parse_poly,
    random::{random_fp, random_prime_31, rng_from_seed},
    reduce_rational, solve, Field, Fp, Matrix, Monomial, Poly, Vars, Q,
};
use crate::nets::{net_from_plane, NetOfQuadrics, PlaneInP5};
use crate::polar::{cubic_monomials, quadric_monomials, CubicFourfold, QuadraticForm, AMBIENT};
use crate::{Error, Result};

/// Distinct slots paired with nonzero parameter-free quadrics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotAssignment {
    pairs: Vec<(usize, QuadraticForm)>,
}

impl SlotAssignment {
    pub fn new(pairs: Vec<(usize, QuadraticForm)>) -> Result<Self> {
        if pairs.is_empty() || pairs.len() > AMBIENT {
            return Err(Error::Precondition(format!(
                "an assignment has 1 to 6 slots, got {}",
                pairs.len()
            )));
        }
        let mut seen = [false; AMBIENT];
        for (slot, q) in &pairs {
            if *slot >= AMBIENT {
                return Err(Error::Precondition(format!(
                    "slot {slot} is out of range 0..5"
                )));
            }
            if std::mem::replace(&mut seen[*slot], true) {
                return Err(Error::Precondition(format!("slot {slot} assigned twice")));
            }
            if q.is_zero() {
                return Err(Error::Precondition(format!(
                    "slot {slot} has the zero quadric"
                )));
            }
            if q.nparams() != 0 {
                return Err(Error::Precondition(format!(
                    "slot {slot} quadric depends on parameters"
                )));
            }
        }
        Ok(SlotAssignment { pairs })
    }

    pub fn pairs(&self) -> &[(usize, QuadraticForm)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Same assignment with each quadric multiplied by the given scalar.
    pub fn rescaled(&self, c: &[Q]) -> Result<Self> {
        if c.len() != self.pairs.len() {
            return Err(Error::Arity {
                expected: self.pairs.len(),
                found: c.len(),
            });
        }
        let pairs = self
            .pairs
            .iter()
            .zip(c)
            .map(|((s, q), k)| Ok((*s, QuadraticForm::new(q.poly().scale(k))?)))
            .collect::<Result<Vec<_>>>()?;
        SlotAssignment::new(pairs)
    }
}

/// Kernel element: cubic coefficients and the slot scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelElement {
    pub cubic: Vec<Q>,
    pub scalars: Vec<Q>,
}

impl KernelElement {
    pub fn cubic_poly(&self) -> Poly<Q> {
        Poly::from_coords(&cubic_monomials(), &self.cubic, ())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrationResult {
    pub basis: Vec<KernelElement>,
    pub affine_dimension: usize,
    /// `affine_dimension - 1`; `-1` for the empty family.
    pub projective_dimension: i64,
    pub all_scalars_nonzero: bool,
    /// Random combination used as the simultaneous witness, with its prime.
    pub witness_seed: u64,
    pub witness_prime: Option<u64>,
}

/// The linear system of the assignment, `21 * slots` rows by `56 + slots`
/// columns.
pub fn integration_matrix(assignment: &SlotAssignment) -> Result<Matrix<Q>> {
    let cubics = cubic_monomials();
    let quads = quadric_monomials();
    let k = assignment.len();
    let col_of = |m: &Monomial| cubics.iter().position(|c| c == m).expect("cubic monomial");
    let mut rows = Vec::with_capacity(quads.len() * k);
    for (l, (slot, q)) in assignment.pairs().iter().enumerate() {
        let qc = q.coefficient_vector()?;
        for (qi, qm) in quads.iter().enumerate() {
            let mut row = vec![Q::zero_in(&()); cubics.len() + k];
            let mut up = qm.clone();
            up.0[*slot] += 1;
            row[col_of(&up)] = Q::from_int(up.0[*slot] as i64, &());
            row[cubics.len() + l] = -qc[qi].clone();
            rows.push(row);
        }
    }
    Matrix::from_rows(rows)
}

pub fn integrate_net(assignment: &SlotAssignment, seed: u64) -> Result<IntegrationResult> {
    let m = integration_matrix(assignment)?;
    let k = assignment.len();
    let n = cubic_monomials().len();
    let basis: Vec<KernelElement> = kernel_basis(&m, &())?
        .into_iter()
        .map(|v| KernelElement {
            cubic: v[..n].to_vec(),
            scalars: v[n..].to_vec(),
        })
        .collect();
    let affine = basis.len();
    let each_slot_nonzero = (0..k).all(|l| basis.iter().any(|b| !Field::is_zero(&b.scalars[l])));
    let mut witness_prime = None;
    let mut all_nonzero = false;
    if each_slot_nonzero {
        let mut rng = rng_from_seed(seed);
        'primes: for _ in 0..8 {
            let p = random_prime_31(&mut rng);
            let mut reduced: Vec<Vec<Fp>> = Vec::new();
            for b in &basis {
                let r: Option<Vec<Fp>> = b.scalars.iter().map(|s| reduce_rational(s, p)).collect();
                match r {
                    Some(r) => reduced.push(r),
                    None => continue 'primes,
                }
            }
            for _ in 0..8 {
                let coeffs: Vec<Fp> = (0..affine).map(|_| random_fp(&mut rng, p)).collect();
                let ok = (0..k).all(|l| {
                    let s = reduced
                        .iter()
                        .zip(&coeffs)
                        .fold(Fp::zero_in(&p), |acc, (r, c)| acc + r[l] * *c);
                    !s.is_zero()
                });
                if ok {
                    witness_prime = Some(p.0);
                    all_nonzero = true;
                    break 'primes;
                }
            }
        }
    }
    Ok(IntegrationResult {
        basis,
        affine_dimension: affine,
        projective_dimension: affine as i64 - 1,
        all_scalars_nonzero: all_nonzero,
        witness_seed: seed,
        witness_prime,
    })
}

/// Check that every basis element satisfies `dF/dx_slot = s * Q` exactly.
pub fn resubstitute(assignment: &SlotAssignment, result: &IntegrationResult) -> bool {
    result.basis.iter().all(|b| {
        let f = b.cubic_poly();
        assignment
            .pairs()
            .iter()
            .zip(&b.scalars)
            .all(|((slot, q), s)| f.derivative(*slot) == q.poly().scale(s))
    })
}

/// Whether `f` is the cubic part of some element of the solution space.
pub fn family_contains(result: &IntegrationResult, f: &CubicFourfold) -> Result<bool> {
    let target = f.coefficient_vector()?;
    if result.basis.is_empty() {
        return Ok(target.iter().all(Field::is_zero));
    }
    let cols = Matrix::from_fn(target.len(), result.basis.len(), |r, c| {
        result.basis[c].cubic[r].clone()
    });
    Ok(solve(&cols, &target, &())?.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub affine_dimension: usize,
    pub projective_dimension: i64,
    pub projective_dimension_is_10: bool,
    pub member: bool,
}

/// Integrate the net of `f` along `plane` with the given slots and report
/// the family dimension and whether `f` belongs to it.
pub fn fiber_dimension_report(
    f: &CubicFourfold,
    plane: &PlaneInP5,
    assignment: &SlotAssignment,
    seed: u64,
) -> Result<FiberReport> {
    let net = net_from_plane(f, plane)?;
    if assignment.len() != 3 {
        return Err(Error::Precondition(
            "the assignment must carry the three quadrics of the net".into(),
        ));
    }
    let given = NetOfQuadrics::from_forms(
        &assignment
            .pairs()
            .iter()
            .map(|(_, q)| q.clone())
            .collect::<Vec<_>>(),
    )?;
    if !net.same_span(&given)? {
        return Err(Error::Precondition(
            "assignment quadrics do not span the net of the plane".into(),
        ));
    }
    let r = integrate_net(assignment, seed)?;
    Ok(FiberReport {
        affine_dimension: r.affine_dimension,
        projective_dimension: r.projective_dimension,
        projective_dimension_is_10: r.projective_dimension == 10,
        member: family_contains(&r, f)?,
    })
}

fn xs() -> Vars {
    Vars::indexed("x", AMBIENT)
}

const EXAMPLE_Q: [&str; 3] = [
    "3*x0^2 + 2*x0*x5 + 3*x1^2 + 4*x1*x4 + 16*x2*x3 + 4*x2*x5 + x3*x5 + 6*x1*x5",
    "2*x0*x1 + 4/3*x0*x4 + 2*x0*x5 + 2*x1*x5 + 3*x2^2 + 3*x3^2 + 2*x3*x4 + 6*x4*x5 + 3*x2*x3",
    "16/9*x0*x3 + 4/9*x0*x5 + 2*x1*x2 + x1*x3 - 2*x2*x5 + 3*x4^2 + 3*x5^2",
];

const EXAMPLE_F: &str =
    "x0^3 + x0^2*x5 + 3*x0*x1^2 + 4*x0*x1*x4 + 16*x0*x2*x3 + 4*x0*x2*x5 + x0*x3*x5 \
    + 6*x0*x1*x5 + 3*x1^2*x5 + 9*x1*x2^2 + 9*x1*x3^2 + 6*x1*x3*x4 + 18*x1*x4*x5 \
    + 9*x1*x2*x3 - 9*x2^2*x5 + 27*x2*x4^2 + 27*x2*x5^2";

/// The three worked-example quadrics.
pub fn example_quadrics() -> Vec<QuadraticForm> {
    EXAMPLE_Q
        .iter()
        .map(|s| {
            QuadraticForm::new(parse_poly(s, &xs()).expect("fixture parses"))
                .expect("fixture is a quadric")
        })
        .collect()
}

/// The worked-example quadrics at slots 0, 1, 2.
pub fn example_assignment() -> SlotAssignment {
    SlotAssignment::new(example_quadrics().into_iter().enumerate().collect())
        .expect("fixture assignment")
}

/// The closed-form member `a * (...) + C(x3, x4, x5)` of the worked example.
pub fn example_cubic(a: &Q, c: &Poly<Q>) -> Result<CubicFourfold> {
    if c.nvars() != 3 {
        return Err(Error::Arity {
            expected: 3,
            found: c.nvars(),
        });
    }
    let base = parse_poly(EXAMPLE_F, &xs())
        .expect("fixture parses")
        .scale(a);
    CubicFourfold::new(&base + &c.embed(AMBIENT, &[3, 4, 5]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{qi, qr};

    #[test]
    fn worked_example_family() {
        let a = example_assignment();
        let r = integrate_net(&a, 0).unwrap();
        assert_eq!(r.affine_dimension, 11);
        assert_eq!(r.projective_dimension, 10);
        assert!(r.all_scalars_nonzero);
        assert!(resubstitute(&a, &r));
        for b in &r.basis {
            assert_eq!(b.scalars[1], qi(3) * b.scalars[0].clone());
            assert_eq!(b.scalars[2], qi(3) * b.scalars[1].clone());
        }
        assert_eq!(
            crate::exactalg::rank(&integration_matrix(&a).unwrap()).unwrap(),
            48
        );
        let f = example_cubic(&qi(1), &Poly::zero(3, ())).unwrap();
        assert!(family_contains(&r, &f).unwrap());
    }

    #[test]
    fn single_slot() {
        let q = QuadraticForm::new(parse_poly("3*x0^2", &xs()).unwrap()).unwrap();
        let r = integrate_net(&SlotAssignment::new(vec![(0, q)]).unwrap(), 0).unwrap();
        assert_eq!(r.affine_dimension, 36);
        assert!(r.all_scalars_nonzero);
    }

    #[test]
    fn mixed_partial_obstruction() {
        let q0 = QuadraticForm::new(parse_poly("x1^2", &xs()).unwrap()).unwrap();
        let q1 = QuadraticForm::new(parse_poly("x2^2", &xs()).unwrap()).unwrap();
        let a = SlotAssignment::new(vec![(0, q0), (1, q1)]).unwrap();
        let r = integrate_net(&a, 0).unwrap();
        assert!(r.basis.iter().all(|b| b.scalars[0] == qi(0)));
        assert!(!r.all_scalars_nonzero);
        assert!(resubstitute(&a, &r));
    }

    #[test]
    fn malformed_assignments() {
        let q = QuadraticForm::new(parse_poly("x1^2", &xs()).unwrap()).unwrap();
        assert!(SlotAssignment::new(vec![]).is_err());
        assert!(SlotAssignment::new(vec![(0, q.clone()), (0, q.clone())]).is_err());
        assert!(SlotAssignment::new(vec![(6, q)]).is_err());
        let z = QuadraticForm::new(Poly::zero(6, ())).unwrap();
        assert!(SlotAssignment::new(vec![(1, z)]).is_err());
    }

    #[test]
    fn fiber_report_for_the_worked_example() {
        let f = example_cubic(
            &qr(2, 5),
            &parse_poly("x3^3 - x4*x5^2", &Vars::new(&["x3", "x4", "x5"])).unwrap(),
        )
        .unwrap();
        let plane = PlaneInP5::coordinate([0, 1, 2]).unwrap();
        let rep = fiber_dimension_report(&f, &plane, &example_assignment(), 0).unwrap();
        assert!(rep.projective_dimension_is_10);
        assert!(rep.member);
        let wrong = PlaneInP5::coordinate([0, 1, 3]).unwrap();
        assert!(matches!(
            fiber_dimension_report(&f, &wrong, &example_assignment(), 0),
            Err(Error::Precondition(_))
        ));
    }
}
