//! Seeded generation of small valid generalized effect algebras.

use rand::Rng;

use crate::algebra::AlgebraTable;
use crate::axioms::check_gea_axioms;

fn build(n: usize, sums: &[(usize, usize, usize)]) -> AlgebraTable {
    let labels = (0..n)
        .map(|i| if i == 0 { "0".to_string() } else { format!("e{i}") })
        .collect();
    AlgebraTable::new(labels, 0, None, sums.iter().copied()).expect("indices are in range")
}

/// A random GEA on `n` elements labelled `0, e1, .., e{n-1}`.
///
/// Starts from the algebra with only trivial sums and repeatedly proposes a
/// commuting pair `x + y = z` (or, less often, two such pairs at once so that
/// chains like `h + h = 2h, h + 2h = 3h` are reachable), keeping a proposal
/// only if the axioms still hold. Every returned table passes
/// [`check_gea_axioms`].
pub fn random_gea<R: Rng>(n: usize, rng: &mut R) -> AlgebraTable {
    assert!(n >= 1, "an algebra needs a zero");
    let mut sums = vec![(0, 0, 0)];
    for i in 1..n {
        sums.push((0, i, i));
        sums.push((i, 0, i));
    }
    if n < 2 {
        return build(n, &sums);
    }
    let propose = |rng: &mut R, sums: &[(usize, usize, usize)]| {
        let x = rng.random_range(1..n);
        let y = rng.random_range(1..n);
        let z = rng.random_range(1..n);
        let fresh = !sums.iter().any(|&(a, b, _)| (a, b) == (x, y) || (a, b) == (y, x));
        fresh.then_some((x, y, z))
    };
    let attempts = 4 * n * n;
    for _ in 0..attempts {
        let mut candidate = sums.clone();
        let count = if rng.random_bool(0.25) { 2 } else { 1 };
        for _ in 0..count {
            if let Some((x, y, z)) = propose(rng, &candidate) {
                candidate.push((x, y, z));
                if x != y {
                    candidate.push((y, x, z));
                }
            }
        }
        if candidate.len() == sums.len() {
            continue;
        }
        let Ok(table) = AlgebraTable::new(
            (0..n).map(|i| i.to_string()).collect(),
            0,
            None,
            candidate.iter().copied(),
        ) else {
            continue;
        };
        if check_gea_axioms(&table).passed {
            sums = candidate;
        }
    }
    build(n, &sums)
}
