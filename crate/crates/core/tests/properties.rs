use std::sync::Arc;

use polyadic_core::arith::gcd;
use polyadic_core::gf::Gf;
use polyadic_core::gray::{gray_generator_matrix, gray_map, gray_weight};
use polyadic_core::linalg::{codes_equal, GeneratorMatrix};
use polyadic_core::ring_r::{build_ring, RElement, RPoly, RingSpec};
use polyadic_core::{CyclicAmbient, Distance, Fe, GrayMatrix, Poly, RCode};
use proptest::prelude::*;

const EXT_ORDERS: [u64; 8] = [4, 8, 9, 16, 25, 27, 49, 121];
const SMALL_Q: [u64; 5] = [2, 3, 4, 5, 7];

fn field(q: u64) -> Arc<Gf> {
    Gf::from_order(q).unwrap()
}

fn elem(f: &Gf, i: u64) -> Fe {
    f.elem(i % f.q() as u64).unwrap()
}

fn splitting_degree(q: u64, n: usize) -> u32 {
    let (q, n) = (q as usize % n, n);
    let mut x = q % n;
    let mut d = 1;
    while x != 1 % n {
        x = x * q % n;
        d += 1;
    }
    d
}

/// `(q, n)` with `gcd(n, q) = 1` and a splitting field small enough to build.
fn length_for(qs: &'static [u64], max_n: usize) -> impl Strategy<Value = (u64, usize)> {
    (prop::sample::select(qs), 2..=max_n).prop_filter("n coprime to q, small splitting field", |&(q, n)| {
        gcd(q, n as u64) == 1 && (q as f64).powi(splitting_degree(q, n) as i32) < 1e15
    })
}

fn coset_union(amb: &CyclicAmbient, pick: &[usize]) -> Vec<usize> {
    let cosets = &amb.cosets().cosets;
    let mut t: Vec<usize> = pick.iter().flat_map(|&c| cosets[c % cosets.len()].clone()).collect();
    t.sort();
    t.dedup();
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(q in prop::sample::select(&EXT_ORDERS[..]), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let f = field(q);
        let (x, y, z) = (elem(&f, x), elem(&f, y), elem(&f, z));
        prop_assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        if x != Fe::ZERO {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), Fe::ONE);
        }
        let p = f.p() as u64;
        prop_assert_eq!(f.pow(f.add(x, y), p), f.add(f.pow(x, p), f.pow(y, p)));
    }

    #[test]
    fn generator_has_full_order(q in prop::sample::select(&EXT_ORDERS[..])) {
        let f = field(q);
        let g = f.generator();
        let order = q - 1;
        prop_assert_eq!(f.pow(g, order), Fe::ONE);
        for d in (1..order).filter(|d| order % d == 0) {
            prop_assert_ne!(f.pow(g, d), Fe::ONE);
        }
    }

    #[test]
    fn cosets_partition_and_factors_multiply_out((q, n) in length_for(&SMALL_Q, 40)) {
        let f = field(q);
        let amb = CyclicAmbient::new(n, f.clone()).unwrap();
        let mut seen = vec![0; n];
        for c in &amb.cosets().cosets {
            for &i in c {
                seen[i] += 1;
                prop_assert!(c.contains(&(i * q as usize % n)));
            }
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
        let product = amb.factors().iter().fold(Poly::one(), |acc, p| acc.mul(p, &f));
        prop_assert_eq!(product, Poly::xn_minus_one(n, &f));
    }

    #[test]
    fn idempotents_of_coset_unions((q, n) in length_for(&SMALL_Q, 30), a in prop::collection::vec(0usize..64, 0..5), b in prop::collection::vec(0usize..64, 0..5)) {
        let amb = CyclicAmbient::new(n, field(q)).unwrap();
        let (ta, tb) = (coset_union(&amb, &a), coset_union(&amb, &b));
        let (ea, eb) = (amb.idempotent(&ta).unwrap(), amb.idempotent(&tb).unwrap());
        prop_assert_eq!(amb.mul_mod(&ea, &ea), ea.clone());
        prop_assert_eq!(amb.zero_set(&ea), ta.clone());
        let union: Vec<usize> = { let mut u = [ta.clone(), tb.clone()].concat(); u.sort(); u.dedup(); u };
        let meet: Vec<usize> = ta.iter().copied().filter(|i| tb.contains(i)).collect();
        prop_assert_eq!(amb.idempotent(&union).unwrap(), amb.mul_mod(&ea, &eb));
        prop_assert_eq!(amb.idempotent(&meet).unwrap(), amb.sub(&amb.add(&ea, &eb), &amb.mul_mod(&ea, &eb)));
    }

    #[test]
    fn cyclic_dimensions_and_duals((q, n) in length_for(&SMALL_Q, 30), a in prop::collection::vec(0usize..64, 0..5), b in prop::collection::vec(0usize..64, 0..5)) {
        let amb = CyclicAmbient::new(n, field(q)).unwrap();
        let ca = amb.code(&coset_union(&amb, &a)).unwrap();
        let cb = amb.code(&coset_union(&amb, &b)).unwrap();
        let dual = amb.dual(&ca).unwrap();
        prop_assert_eq!(ca.dimension + dual.dimension, n);
        let ga = amb.generator_matrix(&ca);
        prop_assert_eq!(ga.k(), ca.dimension);
        prop_assert!(codes_equal(&amb.generator_matrix(&dual), &ga.dual()).unwrap());
        let (s, i) = (amb.sum(&ca, &cb).unwrap(), amb.intersect(&ca, &cb).unwrap());
        prop_assert_eq!(ca.dimension + cb.dimension, s.dimension + i.dimension);
        prop_assert!(codes_equal(&amb.generator_matrix(&s), &ga.sum(&amb.generator_matrix(&cb)).unwrap()).unwrap());
    }
}

fn random_matrix(q: u64, n: usize, rows: &[Vec<u64>]) -> GeneratorMatrix {
    let f = field(q);
    let rows = rows.iter().map(|r| r.iter().take(n).map(|&x| elem(&f, x)).collect()).collect();
    GeneratorMatrix::from_rows(f, n, rows).unwrap()
}

/// Every `F_q` combination of the rows, by direct counting.
fn naive_min_distance(g: &GeneratorMatrix) -> Option<usize> {
    let f = g.field();
    let q = f.q() as u64;
    let k = g.k();
    let mut best = None;
    for code in 1..q.pow(k as u32) {
        let mut word = vec![Fe::ZERO; g.n()];
        let mut x = code;
        for row in g.rows() {
            let c = f.elem(x % q).unwrap();
            x /= q;
            for (w, &r) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(c, r));
            }
        }
        let wt = word.iter().filter(|&&w| w != Fe::ZERO).count();
        if wt > 0 {
            best = Some(best.map_or(wt, |b: usize| b.min(wt)));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn linear_code_invariants(q in prop::sample::select(&SMALL_Q[..]), n in 1usize..9, rows in prop::collection::vec(prop::collection::vec(any::<u64>(), 9), 0..5)) {
        let g = random_matrix(q, n, &rows);
        let dual = g.dual();
        prop_assert_eq!(g.k() + dual.k(), n);
        let hull = g.intersect(&dual).unwrap();
        prop_assert_eq!(hull.k(), g.hull_dimension());
        prop_assert_eq!(g.is_lcd(), hull.k() == 0);
        match g.min_distance(1_000_000) {
            Distance::Exact(d) => {
                prop_assert_eq!(Some(d), naive_min_distance(&g));
                prop_assert!(d + g.k() <= n + 1);
            }
            Distance::Undefined => prop_assert_eq!(g.k(), 0),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn budget_gives_an_upper_bound(q in prop::sample::select(&[3u64, 5][..]), rows in prop::collection::vec(prop::collection::vec(any::<u64>(), 10), 4..6)) {
        let g = random_matrix(q, 10, &rows);
        let exact = g.min_distance(1_000_000).exact().unwrap();
        match g.min_distance(20) {
            Distance::Interval { lower, upper } => prop_assert!(lower <= exact && exact <= upper),
            Distance::Exact(d) => prop_assert_eq!(d, exact),
            Distance::Undefined => prop_assert!(false),
        }
    }
}

/// Ring with `k = l = 2` over GF(q) and a Gray matrix with `V V^T = lambda I`.
fn ring_and_v(q: u64) -> (Arc<RingSpec>, GrayMatrix) {
    let f = field(q);
    let ring = build_ring(f.clone(), vec![f.elem(0).unwrap(), f.elem(1).unwrap()], vec![f.elem(0).unwrap(), f.elem(1).unwrap()]).unwrap();
    let v = match q {
        4 => GrayMatrix::preset("C4", &f, 4),
        _ => GrayMatrix::preset("H4", &f, 4),
    }
    .unwrap();
    (ring, v)
}

fn random_rcode(ring: &Arc<RingSpec>, amb: &CyclicAmbient, picks: &[Vec<usize>]) -> RCode {
    let sets: Vec<Vec<usize>> = picks.iter().take(ring.kl()).map(|p| coset_union(amb, p)).collect();
    RCode::from_defining_sets(ring.clone(), amb, &sets).unwrap()
}

fn random_word(ring: &RingSpec, n: usize, raw: &[u64]) -> Vec<RElement> {
    let f = ring.field();
    (0..n).map(|p| RElement((0..ring.kl()).map(|s| elem(f, raw[(p * ring.kl() + s) % raw.len()])).collect())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gray_map_preserves_duality((q, n) in length_for(&[3, 4, 5, 7, 13], 14), picks in prop::collection::vec(prop::collection::vec(0usize..32, 0..4), 4)) {
        let (ring, v) = ring_and_v(q);
        prop_assert!(v.lambda().is_some());
        let amb = CyclicAmbient::new(n, ring.field().clone()).unwrap();
        let c = random_rcode(&ring, &amb, &picks);
        let image = gray_generator_matrix(&c, &amb, &v).unwrap();
        let dual_image = gray_generator_matrix(&c.dual(&amb).unwrap(), &amb, &v).unwrap();
        prop_assert!(codes_equal(&dual_image, &image.dual()).unwrap());
        prop_assert_eq!(image.k(), c.log_size());
    }

    #[test]
    fn gray_map_is_linear_and_injective(q in prop::sample::select(&[3u64, 4, 5, 7][..]), n in 1usize..8, x in prop::collection::vec(any::<u64>(), 1..40), y in prop::collection::vec(any::<u64>(), 1..40)) {
        let (ring, v) = ring_and_v(q);
        let f = ring.field().clone();
        let (x, y) = (random_word(&ring, n, &x), random_word(&ring, n, &y));
        let sum: Vec<RElement> = x.iter().zip(&y).map(|(a, b)| a.add(b, &f)).collect();
        let (px, py) = (gray_map(&x, &v).unwrap(), gray_map(&y, &v).unwrap());
        let expected: Vec<Fe> = px.iter().zip(&py).map(|(&a, &b)| f.add(a, b)).collect();
        prop_assert_eq!(gray_map(&sum, &v).unwrap(), expected);
        prop_assert_eq!(gray_weight(&x, &v).unwrap() == 0, x.iter().all(RElement::is_zero));
    }

    #[test]
    fn ring_code_sizes_and_generators((q, n) in length_for(&[3, 4, 5, 7], 16), picks in prop::collection::vec(prop::collection::vec(0usize..32, 0..4), 4)) {
        let (ring, _) = ring_and_v(q);
        let f = ring.field().clone();
        let amb = CyclicAmbient::new(n, f.clone()).unwrap();
        let c = random_rcode(&ring, &amb, &picks);
        let degrees: usize = c.components.iter().map(|x| x.generator.degree().unwrap_or(0)).sum();
        prop_assert_eq!(c.log_size(), ring.kl() * n - degrees);
        let xn = Poly::xn_minus_one(n, &f);
        for comp in &c.components {
            prop_assert!(xn.rem(&comp.generator, &f).is_zero());
        }
        let g = c.generator();
        prop_assert_eq!(g.components.len(), ring.kl());
    }

    #[test]
    fn bivariate_display_round_trips(q in prop::sample::select(&[3u64, 5, 7, 13][..]), n in 1usize..6, raw in prop::collection::vec(any::<u64>(), 1..30)) {
        let (ring, _) = ring_and_v(q);
        let f = ring.field().clone();
        let comps = (0..ring.kl()).map(|s| Poly::new((0..n).map(|t| elem(&f, raw[(s * n + t) % raw.len()])).collect())).collect();
        let p = RPoly::from_components(n, comps);
        prop_assert_eq!(RPoly::parse(&ring, n, &p.display(&ring)).unwrap(), p.clone());
        for t in 0..n {
            let x = p.coeff(t);
            prop_assert_eq!(ring.from_biv(&ring.to_biv(&x)), x);
        }
    }
}
