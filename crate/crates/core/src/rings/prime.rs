use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, RngCore};

use super::{finite_primitive_root, Field, FiniteField};
use crate::error::{AlgebraError, Result};

/// Deterministic primality: trial division up to 2^20, then strong
/// pseudoprime tests to the first twelve prime bases (exact for u64).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const TRIAL_LIMIT: u64 = 1 << 20;
    let mut d = 2;
    while d * d <= n && d <= TRIAL_LIMIT {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    if d * d > n {
        return true;
    }
    let mut odd = n - 1;
    let mut twos = 0;
    while odd % 2 == 0 {
        odd /= 2;
        twos += 1;
    }
    'bases: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..twos {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// The prime field F_p; elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer into the field.
    pub fn reduce(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| pow_mod(*a, self.p - 2, self.p))
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u128> {
        Some(self.p as u128)
    }

    fn primitive_root(&self, n: u64) -> Result<u64> {
        finite_primitive_root(self, n)
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u64> {
        let r = super::rational::parse_rational(s)?;
        let num = self.reduce(r.numer());
        let den = self.reduce(r.denom());
        self.div(&num, &den)
            .map_err(|_| AlgebraError::parse(format!("`{s}` has a denominator divisible by {}", self.p)))
    }

    fn name(&self) -> String {
        format!("F{}", self.p)
    }
}

impl FiniteField for PrimeField {
    fn size(&self) -> u128 {
        self.p as u128
    }

    fn index_of(&self, a: &u64) -> u128 {
        *a as u128
    }

    fn element_at(&self, index: u128) -> u64 {
        (index % self.p as u128) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::has_exact_order;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn primitive_roots_are_smallest_of_exact_order() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.primitive_root(3).unwrap(), 2);
        assert_eq!(f7.primitive_root(1).unwrap(), 1);
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.primitive_root(4).unwrap(), 2);
        assert!(matches!(
            f5.primitive_root(3),
            Err(AlgebraError::NoRootOfUnity { .. })
        ));
        assert!(matches!(
            f5.primitive_root(5),
            Err(AlgebraError::CharacteristicDivides { .. })
        ));
        // brute-force scan oracle
        for p in [7u64, 11, 13, 31] {
            let f = PrimeField::new(p).unwrap();
            for n in (1..p).filter(|n| (p - 1) % n == 0) {
                let scan = (1..p).find(|x| has_exact_order(&f, x, n)).unwrap();
                assert_eq!(f.primitive_root(n).unwrap(), scan, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let f = PrimeField::new(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let a = f.random_elem(&mut rng);
            let b = f.random_elem(&mut rng);
            let c = f.random_elem(&mut rng);
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            assert_eq!(f.add(&f.sub(&a, &b), &b), a);
            if a != 0 {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn parses_negative_and_fractional_residues() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.parse_elem("-1").unwrap(), 6);
        assert_eq!(f.parse_elem("1/3").unwrap(), 5);
        assert!(f.parse_elem("1/7").is_err());
    }
}
