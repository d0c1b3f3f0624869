use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

use rotcirc::classifier::{
    cyclic_subgroup, expected_class_count, is_semiregular, is_semiregular_by_prime_orders,
};
use rotcirc::numtheory::{
    crt_combine, euler_phi, gcd, mod_pow, multiplicative_order, primitive_root,
};
use rotcirc::rotation::{fixed_set_separates_by_orbits, is_complete_rotation};
use rotcirc::*;

fn scan_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    k
}

fn big_ord_p(mut x: BigUint, p: u32) -> u32 {
    let p = BigUint::from(p);
    let mut k = 0;
    while !x.is_zero() && (&x % &p).is_zero() {
        x /= &p;
        k += 1;
    }
    k
}

proptest! {
    #[test]
    fn order_matches_linear_scan(m in 2u64..=10_000, a in 1u64..10_000) {
        let a = a % m;
        prop_assume!(a != 0 && gcd(a, m) == 1);
        let k = multiplicative_order(a, m).unwrap();
        prop_assert_eq!(k, scan_order(a, m));
        prop_assert_eq!(mod_pow(a, k, m).unwrap(), 1 % m);
    }

    #[test]
    fn crt_reduces_to_each_residue(
        ps in proptest::sample::subsequence(vec![3u64, 5, 7, 11, 13, 17, 19, 23], 1..4),
        exps in proptest::collection::vec(1u32..3, 3),
        seed in any::<u64>(),
    ) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let pairs: Vec<(u64, u64)> = ps
            .iter()
            .zip(exps.iter().cycle())
            .map(|(&p, &e)| {
                let q = p.pow(e);
                (rng.gen_range(0..q), q)
            })
            .collect();
        let x = crt_combine(&pairs).unwrap();
        let n: u64 = pairs.iter().map(|&(_, q)| q).product();
        prop_assert!(x < n);
        for (r, q) in pairs {
            prop_assert_eq!(x % q, r);
        }
    }

    #[test]
    fn connectivity_routes_agree(n in 3u64..=500, picks in proptest::collection::vec(1u64..500, 1..4)) {
        let conn: Vec<u64> = picks
            .iter()
            .map(|&s| 1 + s % (n - 1))
            .flat_map(|s| [s, n - s])
            .collect();
        let g = Circulant::new(n, conn).unwrap();
        prop_assert_eq!(g.is_connected(), g.is_connected_arith());
        for v in [0, n / 2, n - 1] {
            prop_assert_eq!(g.neighbors(v).unwrap().len(), g.degree());
        }
    }
}

#[test]
fn random_circulants_connectivity_and_diameter() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(3..=500u64);
        let k = rng.gen_range(1..=3);
        let conn: Vec<u64> = (0..k)
            .map(|_| rng.gen_range(1..n))
            .flat_map(|s| [s, n - s])
            .collect();
        let g = Circulant::new(n, conn).unwrap();
        assert_eq!(g.is_connected(), g.is_connected_arith(), "{g:?}");
        if g.is_connected() {
            let d0 = g.diameter().unwrap();
            let max = (0..5)
                .map(|_| g.eccentricity(rng.gen_range(0..n)).unwrap())
                .max()
                .unwrap();
            assert_eq!(d0, max);
        }
    }
}

#[test]
fn iso_multiplier_preserves_adjacency() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let mut hits = 0;
    for _ in 0..300 {
        let n = rng.gen_range(5..=120u64);
        let s = rng.gen_range(1..n);
        let t = rng.gen_range(1..n);
        let a = Circulant::new(n, [1, n - 1, s, n - s]).unwrap();
        let b = Circulant::new(n, [1, n - 1, t, n - t]).unwrap();
        if let Some(sigma) = a.iso_multiplier(&b).unwrap() {
            hits += 1;
            for u in 0..n {
                for v in a.neighbors_iter(u) {
                    assert!(b.are_adjacent(u * sigma % n, v * sigma % n));
                }
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn valuations_with_big_integers() {
    for p in [3u32, 5, 7] {
        for k in 0..=3u32 {
            for s in 1..p {
                let exp = p.pow(k) * s;
                let base = BigUint::from(p - 1).pow(exp);
                let value = if s % 2 == 0 {
                    base - BigUint::one()
                } else {
                    base + BigUint::one()
                };
                assert_eq!(big_ord_p(value, p), k + 1, "p={p} k={k} s={s}");
            }
        }
    }
}

#[test]
fn primitive_roots_generate() {
    for p in [
        3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
        97,
    ] {
        let mut e = 1;
        while p.pow(e) <= 10_000 {
            let q = p.pow(e);
            let eta = primitive_root(p, e).unwrap();
            let mut orbit = std::collections::HashSet::new();
            let mut x = 1u64;
            loop {
                x = x * eta % q;
                if !orbit.insert(x) {
                    break;
                }
            }
            assert_eq!(
                orbit.len() as u64,
                euler_phi(&factorize(q).unwrap()),
                "{p}^{e}"
            );
            assert_eq!(multiplicative_order(eta % p, p).unwrap(), p - 1);
            e += 1;
        }
    }
}

#[test]
fn classes_satisfy_structural_invariants() {
    for n in (3..=600u64).step_by(2) {
        let f = factorize(n).unwrap();
        for d in admissible_degrees(&f).unwrap() {
            let classes = enumerate_classes(&f, d).unwrap();
            assert_eq!(classes.len() as u64, expected_class_count(&f, d).unwrap());
            for c in &classes {
                assert_eq!(multiplicative_order(c.h, n).unwrap(), d);
                assert_eq!(mod_pow(c.h, d / 2, n).unwrap(), n - 1);
                assert!(c.subgroup.iter().all(|&s| c.subgroup.contains(&(n - s))));
                let g = c.circulant().unwrap();
                let mut scaled = g.scaled_connection(c.h);
                scaled.sort_unstable();
                assert_eq!(scaled, c.subgroup);
                assert!(is_complete_rotation(&g, c.h).unwrap());
                assert_eq!(
                    is_semiregular(n, &c.subgroup),
                    is_semiregular_by_prime_orders(&f, c.h).unwrap()
                );
                let report = rotation_report(n, c.h).unwrap();
                assert_eq!(report.fixed.is_empty(), is_semiregular(n, &c.subgroup));
            }
        }
    }
}

#[test]
fn orbit_decomposition_invariants() {
    for n in [15u64, 27, 45, 63, 81, 100, 121, 125, 243, 343, 375] {
        for w in (1..n).filter(|&w| gcd(w, n) == 1) {
            let r = rotation_report(n, w).unwrap();
            assert_eq!((r.fixed.len() + r.free.len()) as u64, n - 1);
            assert!(r.orbits.iter().all(|o| r.d.is_multiple_of(o.len() as u64)));
            assert!(r
                .orbits
                .iter()
                .all(|o| (o.len() as u64 == r.d) != r.fixed.contains(o[0])));
            assert!(r.fixed.iter().all(|x| r.fixed.contains(x * w % n)));
        }
    }
}

#[test]
fn orbit_path_criterion_matches_bfs_cut() {
    // rotational circulants Cay(Z_n, <w>) with -1 in <w>
    let mut checked = 0;
    for n in (5..=2000u64).step_by(7) {
        for w in (2..n).filter(|&w| gcd(w, n) == 1).take(12) {
            let sub = cyclic_subgroup(w, n);
            if !sub.contains(&(n - 1)) {
                continue;
            }
            let g = Circulant::new(n, sub).unwrap();
            let r = rotation_report(n, w).unwrap();
            if n as usize - r.fixed.len() < 2 {
                continue;
            }
            assert_eq!(
                g.is_vertex_cut(&r.fixed).unwrap(),
                fixed_set_separates_by_orbits(&g, &r),
                "n={n} w={w}"
            );
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn gamma_grid_invariants() {
    for p in [3u64, 5, 7] {
        for e in [3u32, 4] {
            for r in 0..e {
                let rep = verify_theorem_q(p, e, r).unwrap();
                assert!(rep.holds(), "{rep:?}");
                assert_eq!(rep.vertex_cut, r >= 1);
                assert_eq!(rep.fixed_size, p.pow(e - 1) - 1);
                if r + 1 < e {
                    assert!(rep.fixed_formula_ok && rep.free_orbits_ok);
                    assert_eq!(rep.rotation_fixed_size, rep.fixed_size);
                } else {
                    // h = -1: the cycle, whose rotation fixes nothing
                    assert_eq!(rep.spec.h, rep.spec.q - 1);
                    assert_eq!(rep.rotation_fixed_size, 0);
                }
            }
        }
    }
}

#[test]
fn harts_and_tl_invariants() {
    for k in 2..=20u64 {
        let tl = tl_graph(k).unwrap();
        let class = FrobeniusClass::from_generator(tl.n(), 3 * k + 2).unwrap();
        assert_eq!(class.d, 6);
        assert_eq!(class.subgroup, tl.connection_set());
        assert!(verify_first_kind_frobenius(&class).unwrap().holds());
        assert_eq!(harts_iso_tl(k).unwrap(), 3 * k);
        let harts = harts_graph(k).unwrap();
        let tl_prev = Circulant::new(harts.n(), {
            let n = harts.n();
            [1, n - 1, 3 * k - 1, n - 3 * k + 1, 3 * k - 2, n - 3 * k + 2]
        })
        .unwrap();
        assert!(harts.iso_multiplier(&tl_prev).unwrap().is_some());
        assert_eq!(tl.diameter().unwrap(), k);
        assert_eq!(harts.diameter().unwrap(), k - 1);
    }
}
