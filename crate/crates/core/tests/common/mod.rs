#![allow(dead_code)]

use polyadic_core::arith::gcd;
use polyadic_core::reference::{Instance, InstanceSpec, SplitPreference};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FIELDS: [u64; 6] = [3, 4, 5, 7, 9, 13];

/// Ring shapes `(k, l)` with `kl <= 4`, not both 1.
const SHAPES: [(usize, usize); 5] = [(1, 2), (2, 1), (2, 2), (1, 3), (3, 1)];

fn roots(rng: &mut ChaCha8Rng, q: u64, count: usize) -> Vec<i64> {
    let mut all: Vec<i64> = (0..q as i64).collect();
    all.shuffle(rng);
    all.truncate(count);
    all
}

fn gray_for(rng: &mut ChaCha8Rng, spec: InstanceSpec, q: u64, kl: usize) -> InstanceSpec {
    let odd_prime = q % 2 == 1 && [3, 5, 7, 13].contains(&q);
    match (kl, q) {
        (4, 4) if rng.random_bool(0.5) => spec.with_gray("C4"),
        (4, q) if q % 2 == 1 && rng.random_bool(0.5) => spec.with_gray("H4"),
        (2, q) if odd_prime && rng.random_bool(0.5) => {
            let mut s = spec;
            s.gray = polyadic_core::reference::GraySpec::Rows(vec![vec![1, 1], vec![1, q as u32 - 1]]);
            s
        }
        _ => spec.with_gray("I"),
    }
}

/// Seeded instances with `n <= 60`, `q` in [`FIELDS`], `m` in `{2, 3, 4}` and
/// `kl <= 4` for which a splitting exists.
pub fn random_instances(seed: u64, count: usize) -> Vec<(String, InstanceSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prefs = [SplitPreference::First, SplitPreference::NegOneFixes, SplitPreference::NegOneSwaps];
    let mut out = Vec::new();
    while out.len() < count {
        let q = *FIELDS.choose(&mut rng).unwrap();
        let n = rng.random_range(3..=60usize);
        if gcd(n as u64, q) != 1 {
            continue;
        }
        let m = rng.random_range(2..=4usize);
        let (k, l) = *SHAPES.choose(&mut rng).unwrap();
        let alpha = roots(&mut rng, q, k);
        let beta = roots(&mut rng, q, l);
        let base = InstanceSpec::new(q, &alpha, &beta, n, m).expect("field order in range");
        let mut spec = gray_for(&mut rng, base, q, k * l);
        spec.prefer = *prefs.choose(&mut rng).unwrap();
        if Instance::build(&spec).is_err() {
            spec.prefer = SplitPreference::First;
            if Instance::build(&spec).is_err() {
                continue;
            }
        }
        let label = format!("q={q} n={n} m={m} alpha={alpha:?} beta={beta:?} prefer={:?}", spec.prefer);
        out.push((label, spec));
    }
    out
}
