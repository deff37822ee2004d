//! Coefficient rings for group algebras: finite fields and `Z_{p^k}`.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use crate::numtheory::{inv_mod, prime_power};

/// A finite commutative ring with identity.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Copy + Eq + Hash + Ord + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Multiplicative inverse, if the element is a unit.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;
    /// Number of elements.
    fn size(&self) -> u64;
    fn render(&self, a: Self::Elem) -> String;
    /// Integer code of an element, used for serialization and hashing.
    fn code(&self, a: Self::Elem) -> u64;
    /// Short name such as `F9` or `Z4`.
    fn label(&self) -> String;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }
}

impl Ring for Field {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        Field::zero(self)
    }
    fn one(&self) -> FieldElement {
        Field::one(self)
    }
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        Field::add(self, a, b)
    }
    fn neg(&self, a: FieldElement) -> FieldElement {
        Field::neg(self, a)
    }
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        Field::mul(self, a, b)
    }
    fn from_i64(&self, n: i64) -> FieldElement {
        self.from_int(n)
    }
    fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        Field::inv(self, a).ok()
    }
    fn characteristic(&self) -> u64 {
        Field::characteristic(self)
    }
    fn size(&self) -> u64 {
        self.order()
    }
    fn render(&self, a: FieldElement) -> String {
        Field::render(self, a)
    }
    fn label(&self) -> String {
        format!("F{}", self.order())
    }
    fn code(&self, a: FieldElement) -> u64 {
        a.value()
    }
}

/// The chain ring `Z_{p^k}` with maximal ideal `(p)` and nilpotency index `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMod {
    p: u64,
    k: u32,
    modulus: u64,
}

impl ZMod {
    pub fn new(p: u64, k: u32) -> Result<ZMod> {
        if !crate::numtheory::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let modulus = p
            .checked_pow(k)
            .filter(|&m| m <= 1 << 32)
            .ok_or(Error::FieldTooLarge { p, m: k })?;
        Ok(ZMod { p, k, modulus })
    }

    /// Parses `Z4`, `Z_9`, `z8`.
    pub fn parse(s: &str) -> Result<ZMod> {
        let t = s.trim();
        let digits = t
            .strip_prefix(['Z', 'z'])
            .map(|r| r.trim_start_matches('_'))
            .ok_or_else(|| Error::Parse(s.into()))?;
        let n: u64 = digits.parse().map_err(|_| Error::Parse(s.into()))?;
        let (p, k) = prime_power(n).ok_or_else(|| Error::Parse(s.into()))?;
        ZMod::new(p, k)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Nilpotency index of the maximal ideal.
    pub fn nilpotency(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residue of `a` modulo the maximal ideal.
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    pub fn name(&self) -> String {
        format!("Z{}", self.modulus)
    }
}

impl Ring for ZMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }
    fn neg(&self, a: u64) -> u64 {
        (self.modulus - a) % self.modulus
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.modulus as i64) as u64
    }
    fn inv(&self, a: u64) -> Option<u64> {
        inv_mod(a, self.modulus)
    }
    fn characteristic(&self) -> u64 {
        self.modulus
    }
    fn size(&self) -> u64 {
        self.modulus
    }
    fn render(&self, a: u64) -> String {
        a.to_string()
    }
    fn label(&self) -> String {
        self.name()
    }
    fn code(&self, a: u64) -> u64 {
        a
    }
}
