use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::IrreducibilityError;

/// A univariate polynomial over `F_p`, coefficients in ascending powers
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> FpPoly {
        let mut f = FpPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    /// Reduces integer coefficients (ascending powers) modulo `p`.
    pub fn from_integers(p: u64, coeffs: &[BigInt]) -> FpPoly {
        let modulus = BigInt::from(p);
        let reduced = coeffs
            .iter()
            .map(|c| {
                let r = ((c % &modulus) + &modulus) % &modulus;
                r.to_u64().expect("residue fits in u64")
            })
            .collect();
        FpPoly::new(p, reduced)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn x(p: u64) -> FpPoly {
        FpPoly::new(p, vec![0, 1])
    }

    fn sub(&self, other: &FpPoly) -> FpPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        FpPoly::new(self.p, c)
    }

    fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::new(self.p, Vec::new());
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, c)
    }

    /// Remainder of division by a nonzero `m`.
    pub fn rem(&self, m: &FpPoly) -> FpPoly {
        let dm = m.degree().expect("division by zero polynomial");
        let inv = pow_mod(m.coeffs[dm], self.p - 2, self.p);
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let top = r.len() - 1;
            let factor = mul_mod(r[top], inv, self.p);
            if factor != 0 {
                for (j, &c) in m.coeffs.iter().enumerate() {
                    let idx = top - dm + j;
                    r[idx] = (r[idx] + self.p - mul_mod(factor, c, self.p)) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        FpPoly::new(self.p, r)
    }

    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn pow_mod_poly(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }
}

/// Decides irreducibility of `f mod prime` (ascending integer coefficients)
/// by checking `gcd(f, X^(p^i) − X) = 1` for `i ≤ deg f / 2`. If `f` has
/// positive degree and the prime does not divide its leading coefficient,
/// a `true` result implies `f` is irreducible over the rationals.
pub fn modp_irreducible(f: &[BigInt], prime: u64) -> Result<bool, IrreducibilityError> {
    let Some(lead) = f.iter().rposition(|c| !c.is_zero()) else {
        return Err(IrreducibilityError::ZeroPolynomial);
    };
    if !is_prime(prime) || (&f[lead] % BigInt::from(prime)).is_zero() {
        return Err(IrreducibilityError::BadPrime(prime));
    }
    let g = FpPoly::from_integers(prime, &f[..=lead]);
    let d = lead;
    if d == 0 {
        return Ok(false);
    }
    let x = FpPoly::x(prime);
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = h.pow_mod_poly(prime, &g);
        if g.gcd(&h.sub(&x)).degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}
