//! Arithmetic over the prime field Z_p and the two length-p vector families
//! (constant and arithmetic progression) every construction formula is built from.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Trial-division primality test. `p` stays small here, so nothing fancier is needed.
pub fn check_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An odd prime modulus p >= 3, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    /// p = 2 is rejected: the constructions need (p-1)/2 to be an integer.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 3 && check_prime(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Convenience for index arithmetic.
    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    pub fn residue(self, value: i64) -> Residue {
        Residue::new(value, self)
    }

    /// All residues 0, 1, ..., p-1 in order.
    pub fn residues(self) -> impl Iterator<Item = Residue> {
        (0..self.0).map(move |v| Residue {
            value: v,
            modulus: self,
        })
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of Z_p, canonically represented in [0, p).
///
/// Residues carry their modulus; mixing moduli is a programming error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: PrimeModulus,
}

impl Residue {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        let p = modulus.0 as i64;
        Residue {
            value: value.rem_euclid(p) as u64,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn as_usize(self) -> usize {
        self.value as usize
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse, by Fermat exponentiation: a^(p-2) mod p.
    pub fn inverse(self) -> Result<Residue> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        let p = self.modulus.0;
        let mut base = self.value;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Ok(Residue {
            value: acc,
            modulus: self.modulus,
        })
    }

    fn check_same_modulus(self, other: Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli: {} vs {}",
            self.modulus, other.modulus
        );
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check_same_modulus(rhs);
        Residue {
            value: (self.value + rhs.value) % self.modulus.0,
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.check_same_modulus(rhs);
        Residue {
            value: (self.value + self.modulus.0 - rhs.value) % self.modulus.0,
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue {
            value: (self.modulus.0 - self.value) % self.modulus.0,
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check_same_modulus(rhs);
        Residue {
            value: self.value * rhs.value % self.modulus.0,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A length-p vector of residues: one column-group segment of a matrix row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PVector {
    entries: Vec<Residue>,
}

impl PVector {
    pub fn entries(&self) -> &[Residue] {
        &self.entries
    }

    pub fn get(&self, c: usize) -> Residue {
        self.entries[c]
    }
}

/// Free-function form of [`Residue::inverse`].
pub fn mod_inverse(a: Residue) -> Result<Residue> {
    a.inverse()
}

/// The constant vector (i, i, ..., i) of length p.
pub fn const_vec(i: Residue) -> PVector {
    PVector {
        entries: vec![i; i.modulus().as_usize()],
    }
}

/// The progression vector (i, i+1, ..., i+p-1) mod p.
pub fn prog_vec(i: Residue) -> PVector {
    let p = i.modulus();
    PVector {
        entries: (0..p.value() as i64).map(|c| i + p.residue(c)).collect(),
    }
}
