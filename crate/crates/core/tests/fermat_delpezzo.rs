use polarnet::delpezzo::{experiment_primes, image_sextic, run_experiment, DelPezzoSetup};
use polarnet::exactalg::random::{random_fp, rng_from_seed, DEFAULT_PRIME};
use polarnet::exactalg::{det_poly_matrix, qi, Fp, Monomial, Poly, Q};
use polarnet::fermatlab::{
    family_discriminant, family_polar_matrix, hesse_degenerations, hesse_factor, n0_plane,
    restrict_to_n0, DeformationFamily,
};
use polarnet::nets::restrict_to_plane;
use polarnet::polar::AMBIENT;
use polarnet::sexticlab::jacobian_scheme_degree;

fn fam(i: usize, j: usize, k: usize) -> DeformationFamily {
    DeformationFamily::new(i, j, k).unwrap()
}

#[test]
fn every_triple_starts_at_the_fermat_discriminant() {
    let target = Poly::monomial(Monomial::from_exps(&[1, 1, 1, 1, 1, 1, 0]), qi(729));
    for f in DeformationFamily::all() {
        assert_eq!(
            family_discriminant(&f).unwrap().specialize(AMBIENT, &qi(0)),
            target
        );
    }
}

#[test]
fn matrix_determinant_agrees_with_discriminant() {
    for f in [fam(1, 3, 5), fam(0, 2, 4), fam(0, 1, 2)] {
        assert_eq!(
            det_poly_matrix(&family_polar_matrix(&f)).unwrap(),
            family_discriminant(&f).unwrap()
        );
    }
}

#[test]
fn relabelled_triples_have_relabelled_matrices() {
    // sigma swaps 0<->1, 2<->3, 4<->5, taking (1,3,5) to (0,2,4)
    let sigma = [1usize, 0, 3, 2, 5, 4, 6];
    let rename: Vec<Poly<Q>> = sigma
        .iter()
        .map(|&s| Poly::var(AMBIENT + 1, s, ()))
        .collect();
    let a = family_polar_matrix(&fam(1, 3, 5));
    let b = family_polar_matrix(&fam(0, 2, 4));
    for r in 0..AMBIENT {
        for c in 0..AMBIENT {
            assert_eq!(
                b.get(sigma[r], sigma[c]),
                &a.get(r, c).substitute(&rename).unwrap()
            );
        }
    }
    let d = family_discriminant(&fam(1, 3, 5))
        .unwrap()
        .substitute(&rename)
        .unwrap();
    assert_eq!(d, family_discriminant(&fam(0, 2, 4)).unwrap());
}

#[test]
fn pencil_restriction_commutes_with_specialization() {
    let f = fam(1, 3, 5);
    let pencil = restrict_to_n0(&f).unwrap();
    let disc = family_discriminant(&f).unwrap();
    let plane = n0_plane(&f).unwrap();
    for t0 in [qi(0), qi(1), qi(6)] {
        let direct = restrict_to_plane(&disc.specialize(AMBIENT, &t0), &plane)
            .unwrap()
            .project_vars(&[0, 1, 2])
            .unwrap();
        assert_eq!(pencil.at(&t0), direct, "t = {t0}");
    }
}

#[test]
fn pencil_at_the_double_root_is_singular_beyond_the_triangle() {
    // at t = 6 the cubic factor is itself three lines
    let d6 = restrict_to_n0(&fam(1, 3, 5)).unwrap().at(&qi(6));
    let r = jacobian_scheme_degree(&d6.reduce_mod(DEFAULT_PRIME).unwrap()).unwrap();
    assert!(r.delta().unwrap() > 12);
}

#[test]
fn hesse_cubic_at_one_is_smooth() {
    let r = hesse_degenerations(&fam(1, 3, 5), 0).unwrap();
    assert!(r.smooth_at_one);
    let g = hesse_factor(&fam(1, 3, 5))
        .specialize(AMBIENT, &qi(1))
        .project_vars(&[1, 3, 5])
        .unwrap();
    assert_eq!(jacobian_scheme_degree(&g).unwrap().delta(), Some(0));
}

#[test]
fn hesse_splittings_hold_for_other_seeds() {
    for seed in 1..4 {
        let r = hesse_degenerations(&fam(0, 2, 4), seed).unwrap();
        assert!(r.splittings.iter().all(|s| s.certified));
        assert!(r.branch_product_identity);
    }
}

#[test]
fn cubic_system_dimensions() {
    let mut rng = rng_from_seed(2);
    let setup = DelPezzoSetup::random(2, DEFAULT_PRIME, &mut rng).unwrap();
    assert_eq!(setup.cubics.len(), 7);
    let q: Vec<Fp> = (0..3).map(|_| random_fp(&mut rng, DEFAULT_PRIME)).collect();
    assert_eq!(setup.nodal_at(&q).unwrap().len(), 4);
}

#[test]
fn collinear_base_points_are_rejected() {
    let p = DEFAULT_PRIME;
    let f = |v: [i128; 3]| v.iter().map(|&x| Fp::new(x, p)).collect::<Vec<_>>();
    let mut rng = rng_from_seed(0);
    assert!(DelPezzoSetup::with_base_points(
        [f([1, 0, 0]), f([0, 1, 0]), f([1, 1, 0])],
        0,
        &mut rng
    )
    .is_err());
}

#[test]
fn image_of_a_smooth_section_vanishes_on_fresh_points() {
    let mut rng = rng_from_seed(6);
    let setup = DelPezzoSetup::random(6, DEFAULT_PRIME, &mut rng).unwrap();
    let h = setup
        .cubics
        .iter()
        .fold(Poly::zero(3, DEFAULT_PRIME), |a, c| {
            &a + &c.scale(&random_fp(&mut rng, DEFAULT_PRIME))
        });
    let img = image_sextic(&setup, &h, &mut rng).unwrap();
    assert!(img.verified);
    assert_eq!(img.poly.degree(), Some(6));
}

#[test]
fn experiment_is_stable_for_another_seed() {
    for p in experiment_primes(7) {
        let r = run_experiment(7, p).unwrap();
        assert_eq!(r.counts(), vec![Some(9), Some(10), Some(15)], "p = {}", p.0);
    }
}
