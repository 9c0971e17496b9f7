use polarnet::exactalg::random::{random_prime_31, random_rational, rng_from_seed};
use polarnet::exactalg::{
    det, det_poly_matrix, kernel_basis, monomials_of_degree, qi, rank, reduce_rational, Field, Fp,
    Matrix, Monomial, Poly, Q,
};
use polarnet::verify::random_matrix;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn sparse_poly(seed: u64, nvars: usize, max_deg: u32, terms: usize) -> Poly<Q> {
    let mut rng = rng_from_seed(seed);
    let mut p = Poly::zero(nvars, ());
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let m = monomials_of_degree(nvars, d)
            .choose(&mut rng)
            .unwrap()
            .clone();
        p.add_term(m, random_rational(&mut rng, 7, 3));
    }
    p
}

/// Term-by-term evaluation, written independently of the library.
fn naive_eval(p: &Poly<Q>, x: &[Q]) -> Q {
    let mut s = qi(0);
    for (m, c) in p.terms() {
        let mut t = c.clone();
        for (i, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                t *= &x[i];
            }
        }
        s += t;
    }
    s
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut s = qi(0);
    for j in 0..n {
        let minor: Vec<Vec<Q>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].clone() * cofactor_det(&minor);
        if j % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    s
}

#[test]
fn small_ranks() {
    let id = Matrix::<Q>::identity(6, &());
    assert_eq!(rank(&id).unwrap(), 6);
    let m = Matrix::from_rows(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).unwrap();
    assert_eq!(rank(&m).unwrap(), 1);
}

#[test]
fn rank_over_q_and_mod_random_primes() {
    let mut rng = rng_from_seed(11);
    for _ in 0..5 {
        let r = rng.gen_range(1..6);
        let m = random_matrix(7, r, &mut rng, 9, 4)
            .mul(&random_matrix(r, 8, &mut rng, 9, 4))
            .unwrap();
        let rq = rank(&m).unwrap();
        let mut equal = 0;
        for _ in 0..10 {
            let p = random_prime_31(&mut rng);
            let Some(red) = m
                .to_rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| reduce_rational(x, p))
                        .collect::<Option<Vec<Fp>>>()
                })
                .collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            let rp = rank(&Matrix::from_rows(red).unwrap()).unwrap();
            assert!(rq >= rp);
            equal += (rq == rp) as usize;
        }
        assert!(equal >= 9, "{equal} of 10 primes agree");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn degree_is_additive(a in any::<u64>(), b in any::<u64>()) {
        let f = sparse_poly(a, 4, 4, 5);
        let g = sparse_poly(b, 4, 4, 5);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!((&f * &g).degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
    }

    #[test]
    fn evaluate_matches_naive_evaluation(seed in any::<u64>()) {
        let f = sparse_poly(seed, 3, 5, 8);
        let mut rng = rng_from_seed(seed ^ 1);
        for _ in 0..10 {
            let x: Vec<Q> = (0..3).map(|_| random_rational(&mut rng, 9, 5)).collect();
            prop_assert_eq!(f.evaluate(&x), naive_eval(&f, &x));
        }
    }

    #[test]
    fn substitute_then_evaluate(seed in any::<u64>()) {
        let f = sparse_poly(seed, 3, 3, 6);
        let images: Vec<Poly<Q>> = (0..3).map(|i| sparse_poly(seed.wrapping_add(i as u64 + 1), 2, 2, 3)).collect();
        let g = f.substitute(&images).unwrap();
        let mut rng = rng_from_seed(seed ^ 2);
        for _ in 0..10 {
            let x: Vec<Q> = (0..2).map(|_| random_rational(&mut rng, 9, 5)).collect();
            let y: Vec<Q> = images.iter().map(|h| naive_eval(h, &x)).collect();
            prop_assert_eq!(g.evaluate(&x), naive_eval(&f, &y));
        }
    }

    #[test]
    fn det_matches_cofactor_expansion(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = rng_from_seed(seed);
        let m = random_matrix(n, n, &mut rng, 9, 3);
        prop_assert_eq!(det(&m).unwrap(), cofactor_det(&m.to_rows()));
    }

    #[test]
    fn polynomial_det_matches_pointwise_det(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = rng_from_seed(seed);
        let m: Matrix<Poly<Q>> = Matrix::from_fn(n, n, |_, _| {
            let c: Vec<Q> = (0..3).map(|_| random_rational(&mut rng, 5, 2)).collect();
            Poly::linear(&c, ())
        });
        let d = det_poly_matrix(&m).unwrap();
        let p = random_prime_31(&mut rng);
        for _ in 0..3 {
            let x: Vec<Q> = (0..3).map(|_| qi(rng.gen_range(-50..50))).collect();
            let at = m.map(|e| e.evaluate(&x));
            prop_assert_eq!(d.evaluate(&x), det(&at).unwrap());
            // and once more through F_p
            let atp = at.map(|v| reduce_rational(v, p).unwrap());
            prop_assert_eq!(reduce_rational(&d.evaluate(&x), p).unwrap(), det(&atp).unwrap());
        }
    }

    #[test]
    fn congruence_scales_determinant(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let n = 4;
        let a = random_matrix(n, n, &mut rng, 4, 2);
        let b = random_matrix(n, n, &mut rng, 4, 2);
        let sym = |m: &Matrix<Q>| Matrix::from_fn(n, n, |i, j| m.get(i, j).clone() + m.get(j, i).clone());
        let (a, b) = (sym(&a), sym(&b));
        let m: Matrix<Poly<Q>> = Matrix::from_fn(n, n, |i, j| Poly::linear(&[a.get(i, j).clone(), b.get(i, j).clone()], ()));
        let p = random_matrix(n, n, &mut rng, 3, 1);
        let cong = |x: &Matrix<Q>| p.transpose().mul(x).unwrap().mul(&p).unwrap();
        let (ca, cb) = (cong(&a), cong(&b));
        let mc: Matrix<Poly<Q>> = Matrix::from_fn(n, n, |i, j| Poly::linear(&[ca.get(i, j).clone(), cb.get(i, j).clone()], ()));
        let lhs = det_poly_matrix(&mc).unwrap();
        let dp = det(&p).unwrap();
        prop_assert_eq!(lhs, det_poly_matrix(&m).unwrap().scale(&(dp.clone() * dp)));
    }

    #[test]
    fn kernel_vectors_resubstitute(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let r = rng.gen_range(1..5);
        let m = random_matrix(6, r, &mut rng, 5, 3).mul(&random_matrix(r, 7, &mut rng, 5, 3)).unwrap();
        let k = kernel_basis(&m, &()).unwrap();
        prop_assert_eq!(k.len(), 7 - rank(&m).unwrap());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Field::is_zero));
        }
    }

    #[test]
    fn monomial_count(n in 1usize..7, d in 0u32..5) {
        // C(n + d - 1, d)
        let mut c = 1u64;
        for i in 0..d as u64 {
            c = c * (n as u64 + i) / (i + 1);
        }
        prop_assert_eq!(monomials_of_degree(n, d).len() as u64, c);
        let _ = Monomial::one(n);
    }
}
