use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::Slope;

/// Binomial coefficient as an exact big integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The Catalan number `C(2n, n)/(n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// The Fuss–Catalan number `C((k + 1)n, n)/(kn + 1)`.
pub fn fuss_catalan(k: usize, n: usize) -> BigUint {
    binomial((k + 1) * n, n) / BigUint::from(k * n + 1)
}

/// Number of `(a, b)`-Dyck paths of size `n` by Grossman's formula: the sum
/// over partitions `1^{k_1} 2^{k_2} …` of `n` of `∏ A_j^{k_j} / k_j!`, where
/// `A_j = C((a + b)j, aj) / (j(a + b))`.
pub fn count_paths(slope: Slope) -> BigUint {
    let (a, b, n) = (slope.a(), slope.b(), slope.n());
    let weights: Vec<BigRational> = (0..=n)
        .map(|j| {
            if j == 0 {
                return BigRational::zero();
            }
            BigRational::new(
                binomial((a + b) * j, a * j).into(),
                BigUint::from(j * (a + b)).into(),
            )
        })
        .collect();
    let mut total = BigRational::zero();
    let mut mult = vec![0usize; n + 1];
    sum_over_partitions(n, n, &mut mult, &weights, &mut total);
    assert!(total.is_integer(), "Grossman sum is not integral: {total}");
    total
        .to_integer()
        .to_biguint()
        .expect("Grossman sum is non-negative")
}

/// Adds the term of every partition of `rest` into parts `≤ max_part`
/// (with the parts already fixed in `mult`) to `total`.
fn sum_over_partitions(
    rest: usize,
    max_part: usize,
    mult: &mut [usize],
    weights: &[BigRational],
    total: &mut BigRational,
) {
    if rest == 0 {
        let mut term = BigRational::one();
        for (j, &k) in mult.iter().enumerate().skip(1) {
            for i in 1..=k {
                term *= &weights[j];
                term /= BigRational::from_integer(i.into());
            }
        }
        *total += term;
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        mult[part] += 1;
        sum_over_partitions(rest - part, part, mult, weights, total);
        mult[part] -= 1;
    }
}

/// [`count_paths`] as a machine integer, when it fits.
pub fn count_paths_u64(slope: Slope) -> Option<u64> {
    count_paths(slope).to_u64()
}
