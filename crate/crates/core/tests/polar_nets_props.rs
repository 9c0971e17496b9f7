use polarnet::exactalg::random::{random_prime_31, random_rational, rng_from_seed};
use polarnet::exactalg::{det, qi, Field, Matrix, Poly, Q};
use polarnet::nets::{
    discriminant_sextic, net_from_plane, polar_discriminant, restrict_to_plane, NetOfQuadrics,
    PlaneInP5,
};
use polarnet::polar::{
    partials, polar_dimension, polar_quadric, CubicFourfold, QuadraticForm, AMBIENT,
};
use polarnet::sexticlab::jacobian_scheme_degree;
use polarnet::verify::{
    random_cubic, random_invertible, random_net, random_plane, random_symmetric,
};
use proptest::prelude::*;

fn point(seed: u64) -> Vec<Q> {
    let mut rng = rng_from_seed(seed);
    loop {
        let p: Vec<Q> = (0..AMBIENT)
            .map(|_| random_rational(&mut rng, 6, 3))
            .collect();
        if p.iter().any(|c| !Field::is_zero(c)) {
            return p;
        }
    }
}

#[test]
fn fermat_net_on_a_coordinate_plane_is_diagonal() {
    let rows = Matrix::from_fn(3, AMBIENT, |i, j| qi((i == j) as i64));
    let net = net_from_plane(
        &CubicFourfold::fermat(),
        &PlaneInP5::from_parametrization(rows).unwrap(),
    )
    .unwrap();
    for (i, m) in net.matrices().iter().enumerate() {
        let expected = Matrix::from_fn(AMBIENT, AMBIENT, |r, c| {
            qi(if r == c && r == i { 3 } else { 0 })
        });
        assert_eq!(m, &expected);
    }
}

#[test]
fn rank_two_plane_is_rejected() {
    let rows = Matrix::from_fn(3, AMBIENT, |i, j| qi(((i % 2) == j) as i64));
    assert!(PlaneInP5::from_parametrization(rows).is_err());
}

#[test]
fn fermat_plane_sections_are_nonzero() {
    let mut rng = rng_from_seed(5);
    for _ in 0..5 {
        let net = net_from_plane(&CubicFourfold::fermat(), &random_plane(&mut rng)).unwrap();
        let d = discriminant_sextic(&net).unwrap().poly();
        assert_eq!(d.degree(), Some(6));
    }
}

#[test]
fn generic_plane_sextic_is_smooth() {
    let mut rng = rng_from_seed(17);
    let p = random_prime_31(&mut rng);
    let f = random_cubic(&mut rng, 56);
    assert_eq!(polar_dimension(&f).unwrap(), 6);
    let net = net_from_plane(&f, &random_plane(&mut rng)).unwrap();
    let d = discriminant_sextic(&net).unwrap().poly();
    let r = jacobian_scheme_degree(&d.reduce_mod(p).unwrap()).unwrap();
    assert_eq!(r.delta(), Some(0));
    assert!(r.window.iter().all(|(_, h)| *h == 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn euler_identity(seed in any::<u64>()) {
        let f = random_cubic(&mut rng_from_seed(seed), 14);
        let sum = partials(&f).iter().enumerate().fold(Poly::zero(AMBIENT, ()), |acc, (i, q)| {
            &acc + &(&Poly::var(AMBIENT, i, ()) * q.poly())
        });
        prop_assert_eq!(sum, f.poly().scale(&qi(3)));
    }

    #[test]
    fn polar_quadric_is_linear(seed in any::<u64>()) {
        let f = random_cubic(&mut rng_from_seed(seed), 14);
        let (p, q) = (point(seed ^ 1), point(seed ^ 2));
        let (a, b) = (qi(3), Q::new(qi(-2).numer().clone(), qi(5).numer().clone()));
        let comb: Vec<Q> = p.iter().zip(&q).map(|(x, y)| a.clone() * x + b.clone() * y).collect();
        prop_assume!(comb.iter().any(|c| !Field::is_zero(c)));
        let lhs = polar_quadric(&f, &comb).unwrap();
        let rhs = &polar_quadric(&f, &p).unwrap().poly().scale(&a) + &polar_quadric(&f, &q).unwrap().poly().scale(&b);
        prop_assert_eq!(lhs.poly(), &rhs);
    }

    #[test]
    fn polar_dimension_is_coordinate_free(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let f = random_cubic(&mut rng, 8);
        let a = random_invertible(AMBIENT, &mut rng);
        prop_assert_eq!(polar_dimension(&f.compose_linear(&a).unwrap()).unwrap(), polar_dimension(&f).unwrap());
    }

    #[test]
    fn matrix_and_polynomial_views_agree(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let m = random_symmetric(&mut rng);
        let q = QuadraticForm::from_matrix(&m).unwrap();
        prop_assert_eq!(&q.scalar_matrix().unwrap(), &m);
        let x = point(seed ^ 3);
        let mx = m.mul_vec(&x).unwrap();
        let xmx = x.iter().zip(&mx).fold(qi(0), |acc, (a, b)| acc + a.clone() * b);
        prop_assert_eq!(q.poly().evaluate(&x), xmx);
    }

    #[test]
    fn discriminant_reparametrization(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let net = random_net(&mut rng);
        let a = random_invertible(3, &mut rng);
        let d = discriminant_sextic(&net).unwrap().poly();
        let images: Vec<Poly<Q>> = (0..3).map(|i| Poly::linear(a.row(i), ())).collect();
        let moved = net.reparametrize(&a).unwrap();
        prop_assert_eq!(discriminant_sextic(&moved).unwrap().poly(), d.substitute(&images).unwrap());
        prop_assert!(moved.same_span(&net).unwrap());
    }

    #[test]
    fn discriminant_congruence(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let net = random_net(&mut rng);
        let p = random_invertible(AMBIENT, &mut rng);
        let dp = det(&p).unwrap();
        let lhs = discriminant_sextic(&net.congruence(&p).unwrap()).unwrap().poly();
        prop_assert_eq!(lhs, discriminant_sextic(&net).unwrap().poly().scale(&(dp.clone() * dp)));
    }

    #[test]
    fn restrict_then_det(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let f = random_cubic(&mut rng, 12);
        let plane = random_plane(&mut rng);
        let Ok(net) = net_from_plane(&f, &plane) else { return Ok(()) };
        let full = restrict_to_plane(&polar_discriminant(&f).unwrap(), &plane).unwrap();
        prop_assert_eq!(discriminant_sextic(&net).unwrap().poly(), full);
    }
}

#[test]
fn dependent_matrices_do_not_form_a_net() {
    let mut rng = rng_from_seed(3);
    let a = random_symmetric(&mut rng);
    let b = random_symmetric(&mut rng);
    let c = Matrix::from_fn(AMBIENT, AMBIENT, |i, j| {
        a.get(i, j).clone() + b.get(i, j).clone()
    });
    assert!(NetOfQuadrics::new([a, b, c]).is_err());
}
