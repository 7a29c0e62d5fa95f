use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::Field;
use crate::error::{AlgebraError, Result};

/// Arbitrary precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Rationals {
    pub fn int(&self, n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    pub fn frac(&self, num: i64, den: i64) -> Rational {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_i64(&self, n: i64) -> Rational {
        self.int(n)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u128> {
        None
    }

    fn primitive_root(&self, n: u64) -> Result<Rational> {
        match n {
            1 => Ok(self.one()),
            2 => Ok(-self.one()),
            _ => Err(AlgebraError::NoRootOfUnity { n, field: self.name() }),
        }
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> Rational {
        let num: i64 = rng.gen_range(-20..=20);
        let den: i64 = rng.gen_range(1..=6);
        self.frac(num, den)
    }

    fn format_elem(&self, a: &Rational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Rational> {
        parse_rational(s)
    }

    fn name(&self) -> String {
        "Q".to_string()
    }

    /// Fraction-free (Bareiss) elimination after clearing denominators row by row.
    fn rank(&self, rows: &[Vec<Rational>]) -> usize {
        let mut m: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();
        let n_rows = m.len();
        let n_cols = m.first().map_or(0, Vec::len);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..n_cols {
            if rank == n_rows {
                break;
            }
            let Some(pivot) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            for i in rank + 1..n_rows {
                for j in col + 1..n_cols {
                    let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
        }
        rank
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(AlgebraError::parse("empty rational"));
    }
    let parse_int = |x: &str| -> Result<BigInt> {
        x.parse::<BigInt>()
            .map_err(|_| AlgebraError::parse(format!("invalid integer `{x}`")))
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(&t)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(AlgebraError::parse("zero denominator"));
            }
            let num = parse_int(n)?;
            let r = Rational::new(num, den);
            debug_assert!(r.denom().is_positive());
            Ok(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::linalg::rank_by_elimination;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reduced_with_positive_denominator() {
        let q = Rationals;
        let x = q.parse_elem("4/-6").unwrap();
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
        assert_eq!(q.format_elem(&x), "-2/3");
        assert_eq!(q.format_elem(&q.int(5)), "5");
        assert!(q.parse_elem("1/0").is_err());
        assert!(q.parse_elem("x").is_err());
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let a = q.random_elem(&mut rng);
            let b = q.random_elem(&mut rng);
            let c = q.random_elem(&mut rng);
            assert_eq!(q.mul(&q.mul(&a, &b), &c), q.mul(&a, &q.mul(&b, &c)));
            assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
            if let Some(ai) = q.inv(&a) {
                assert!(q.is_one(&q.mul(&a, &ai)));
            } else {
                assert!(q.is_zero(&a));
            }
        }
    }

    #[test]
    fn bareiss_rank_matches_plain_elimination() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..200 {
            let rows = 1 + trial % 5;
            let cols = 1 + (trial / 5) % 5;
            let mut m: Vec<Vec<Rational>> = (0..rows)
                .map(|_| (0..cols).map(|_| q.random_elem(&mut rng)).collect())
                .collect();
            // force some dependent rows
            if rows > 2 && trial % 3 == 0 {
                let dep: Vec<Rational> = m[0].iter().zip(&m[1]).map(|(a, b)| a + b).collect();
                m[rows - 1] = dep;
            }
            assert_eq!(q.rank(&m), rank_by_elimination(&q, &m));
        }
    }
}
