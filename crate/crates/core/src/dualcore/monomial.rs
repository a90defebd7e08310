use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Exponent vector of a monomial in `m` variables.
///
/// Ordered deg-lex: total degree first, then lexicographically with variable 1
/// most significant, so that in increasing order `1 < x1 < x2 < x1^2 < x1*x2 < x2^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    exps: Vec<u32>,
    degree: u32,
}

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    /// The unit vector `delta_j` (0-based `j`).
    pub fn unit(nvars: usize, j: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[j] = 1;
        Self { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.nvars(), other.nvars());
        MultiIndex {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self - other` when `other <= self` componentwise.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(MultiIndex {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn with_increment(&self, j: usize) -> MultiIndex {
        let mut out = self.clone();
        out.exps[j] += 1;
        out.degree += 1;
        out
    }

    pub fn with_decrement(&self, j: usize) -> Option<MultiIndex> {
        if self.exps[j] == 0 {
            return None;
        }
        let mut out = self.clone();
        out.exps[j] -= 1;
        out.degree -= 1;
        Some(out)
    }

    /// `alpha! = prod alpha_i!`
    pub fn factorial(&self) -> BigInt {
        self.exps.iter().fold(BigInt::one(), |acc, &e| {
            (1..=e).fold(acc, |a, k| a * BigInt::from(k))
        })
    }

    /// `binom(self, alpha) = prod binom(self_i, alpha_i)`, zero unless `alpha <= self`.
    pub fn binom(&self, alpha: &MultiIndex) -> BigInt {
        self.exps
            .iter()
            .zip(&alpha.exps)
            .fold(BigInt::one(), |acc, (&b, &a)| acc * binomial(b as u64, a as u64))
    }

    /// Extends with trailing zero exponents up to `nvars` variables.
    pub fn padded(&self, nvars: usize) -> MultiIndex {
        debug_assert!(nvars >= self.nvars());
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        MultiIndex {
            exps,
            degree: self.degree,
        }
    }

    /// Variables that actually occur, as `(index, exponent)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| (i, *e))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All multi-indices in `nvars` variables of total degree exactly `degree`, increasing deg-lex.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<MultiIndex> {
    fn fill(out: &mut Vec<MultiIndex>, cur: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(MultiIndex::new(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            fill(out, cur, pos + 1, left - e);
        }
        cur[pos] = 0;
    }
    if nvars == 0 {
        return if degree == 0 {
            vec![MultiIndex::zero(0)]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    fill(&mut out, &mut vec![0; nvars], 0, degree);
    out
}

/// The basis `E` of `R / M^{s+1}`: every multi-index of degree `<= s`, increasing deg-lex.
/// Its length is `binom(m + s, s)`.
pub fn monomial_basis(nvars: usize, s: u32) -> Vec<MultiIndex> {
    (0..=s).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_small_cases() {
        let b = monomial_basis(1, 3);
        assert_eq!(
            b.iter().map(|m| m.exps().to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        let b = monomial_basis(2, 1);
        assert_eq!(
            b.iter().map(|m| m.exps().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 0], vec![1, 0], vec![0, 1]]
        );
        assert_eq!(monomial_basis(3, 3).len(), 20);
    }

    #[test]
    fn basis_is_sorted_and_sized() {
        for m in 1..=4 {
            for s in 0..=4 {
                let b = monomial_basis(m, s);
                assert_eq!(
                    BigInt::from(b.len()),
                    binomial((m as u64) + s as u64, s as u64)
                );
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn degree_two_order() {
        let q = monomials_of_degree(3, 2);
        let e: Vec<_> = q.iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(
            e,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn binom_and_factorial() {
        let b = MultiIndex::new(vec![2, 2]);
        let a = MultiIndex::new(vec![1, 1]);
        assert_eq!(b.binom(&a), BigInt::from(4));
        assert_eq!(MultiIndex::new(vec![3, 2]).factorial(), BigInt::from(12));
        assert_eq!(b.checked_sub(&a), Some(MultiIndex::new(vec![1, 1])));
        assert_eq!(a.checked_sub(&b), None);
    }
}
