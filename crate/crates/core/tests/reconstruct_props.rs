use polarnet::exactalg::random::{random_rational, rng_from_seed};
use polarnet::exactalg::{parse_poly, qi, rank, Matrix, Poly, Vars, Q};
use polarnet::polar::{partials, polar_dimension, CubicFourfold, QuadraticForm};
use polarnet::reconstruct::{
    example_assignment, example_cubic, example_quadrics, family_contains, integrate_net,
    resubstitute, SlotAssignment,
};
use proptest::prelude::*;

fn cubic_span_rank(rows: Vec<Vec<Q>>) -> usize {
    rank(&Matrix::from_rows(rows).unwrap()).unwrap()
}

#[test]
fn closed_form_members_have_the_expected_partials() {
    // direct check of dF/dx_l = s_l Q_l with s = (a, 3a, 9a)
    let qs = example_quadrics();
    let c = parse_poly(
        "x3^3 - 2*x3*x4*x5 + 7*x5^3",
        &Vars::new(&["x3", "x4", "x5"]),
    )
    .unwrap();
    let a = qi(2);
    let f = example_cubic(&a, &c).unwrap();
    let ps = partials(&f);
    for (l, s) in [(0, qi(1)), (1, qi(3)), (2, qi(9))] {
        assert_eq!(
            ps[l].poly(),
            &qs[l].poly().scale(&(s * a.clone())),
            "slot {l}"
        );
    }
    let r = integrate_net(&example_assignment(), 0).unwrap();
    assert!(family_contains(&r, &f).unwrap());
}

#[test]
fn general_member_of_the_example_has_full_polar_dimension() {
    let r = integrate_net(&example_assignment(), 0).unwrap();
    let mut rng = rng_from_seed(8);
    let mut coeffs = vec![qi(0); 56];
    for b in &r.basis {
        let k = random_rational(&mut rng, 9, 4);
        for (c, v) in coeffs.iter_mut().zip(&b.cubic) {
            *c += k.clone() * v;
        }
    }
    let f = CubicFourfold::new(Poly::from_coords(
        &polarnet::polar::cubic_monomials(),
        &coeffs,
        (),
    ))
    .unwrap();
    assert_eq!(polar_dimension(&f).unwrap(), 6);
}

#[test]
fn fermat_coordinate_slots() {
    // a x0^3 + b x1^3 + c x2^3 + C(x3, x4, x5): 3 + 10 parameters
    let xs = Vars::indexed("x", 6);
    let pairs = (0..3)
        .map(|i| {
            (
                i,
                QuadraticForm::new(parse_poly(&format!("3*x{i}^2"), &xs).unwrap()).unwrap(),
            )
        })
        .collect();
    let a = SlotAssignment::new(pairs).unwrap();
    let r = integrate_net(&a, 0).unwrap();
    assert_eq!(r.affine_dimension, 13);
    assert_eq!(r.projective_dimension, 12);
    assert!(resubstitute(&a, &r));
}

#[test]
fn single_slot_family() {
    // dF/dx0 = s Q0 fixes the x0-part up to s; the 35 cubics in x1..x5 stay free
    let a = SlotAssignment::new(vec![(0, example_quadrics().remove(0))]).unwrap();
    let r = integrate_net(&a, 0).unwrap();
    assert_eq!(r.affine_dimension, 36);
}

#[test]
fn incompatible_quadrics_force_zero_scalars() {
    // dF/dx0 = s0 x1^2 and dF/dx1 = s1 x0^2 need d^2F/dx0dx1 = 2 s0 x1 = 2 s1 x0
    let xs = Vars::indexed("x", 6);
    let q = |s: &str| QuadraticForm::new(parse_poly(s, &xs).unwrap()).unwrap();
    let a = SlotAssignment::new(vec![(0, q("x1^2")), (1, q("x0^2"))]).unwrap();
    let r = integrate_net(&a, 0).unwrap();
    assert!(!r.all_scalars_nonzero);
    assert!(r
        .basis
        .iter()
        .all(|b| b.scalars.iter().all(|s| *s == qi(0))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn rescaling_quadrics_keeps_the_family(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let c: Vec<Q> = (0..3).map(|_| loop {
            let v = random_rational(&mut rng, 9, 5);
            if v != qi(0) { break v; }
        }).collect();
        let base = example_assignment();
        let r0 = integrate_net(&base, seed).unwrap();
        let r1 = integrate_net(&base.rescaled(&c).unwrap(), seed).unwrap();
        prop_assert_eq!(r0.affine_dimension, r1.affine_dimension);
        let a: Vec<Vec<Q>> = r0.basis.iter().map(|b| b.cubic.clone()).collect();
        let b: Vec<Vec<Q>> = r1.basis.iter().map(|b| b.cubic.clone()).collect();
        let both: Vec<Vec<Q>> = a.iter().chain(&b).cloned().collect();
        let ra = cubic_span_rank(a);
        prop_assert_eq!(ra, cubic_span_rank(b));
        prop_assert_eq!(ra, cubic_span_rank(both));
        // the scalars of a fixed cubic scale by 1/c
        for e in &r1.basis {
            let f = CubicFourfold::new(e.cubic_poly()).unwrap();
            let ps = partials(&f);
            for (k, (slot, q)) in base.pairs().iter().enumerate() {
                let s = e.scalars[k].clone() * c[k].clone();
                prop_assert_eq!(ps[*slot].poly(), &q.poly().scale(&s));
            }
        }
    }
}

#[test]
fn fermat_fiber_over_a_coordinate_plane() {
    use polarnet::nets::PlaneInP5;
    use polarnet::reconstruct::fiber_dimension_report;
    let xs = Vars::indexed("x", 6);
    let pairs = (0..3)
        .map(|i| {
            (
                i,
                QuadraticForm::new(parse_poly(&format!("3*x{i}^2"), &xs).unwrap()).unwrap(),
            )
        })
        .collect();
    let a = SlotAssignment::new(pairs).unwrap();
    let plane = PlaneInP5::coordinate([0, 1, 2]).unwrap();
    let r = fiber_dimension_report(&CubicFourfold::fermat(), &plane, &a, 0).unwrap();
    assert!(r.member);
    assert_eq!(r.affine_dimension, 13);
    assert!(!r.projective_dimension_is_10);
}

#[test]
fn mixed_partial_obstruction_on_one_slot() {
    // dF/dx0 = s0 x1^2 and dF/dx1 = s1 x2^2: the mixed partial forces s0 = 0
    let xs = Vars::indexed("x", 6);
    let q = |s: &str| QuadraticForm::new(parse_poly(s, &xs).unwrap()).unwrap();
    let a = SlotAssignment::new(vec![(0, q("x1^2")), (1, q("x2^2"))]).unwrap();
    let r = integrate_net(&a, 0).unwrap();
    assert!(!r.all_scalars_nonzero);
    assert!(r.basis.iter().all(|b| b.scalars[0] == qi(0)));
}
