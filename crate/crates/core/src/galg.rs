//! The group algebra `RG` as dense coefficient vectors indexed by group
//! elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement<R: Ring> {
    group: Group,
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero(group: &Group, ring: &R) -> Self {
        AlgebraElement {
            group: group.clone(),
            ring: ring.clone(),
            coeffs: vec![ring.zero(); group.order()],
        }
    }

    pub fn one(group: &Group, ring: &R) -> Self {
        Self::basis(group, ring, group.identity())
    }

    /// The group element `g` as an algebra element.
    pub fn basis(group: &Group, ring: &R, g: usize) -> Self {
        let mut e = Self::zero(group, ring);
        e.coeffs[g] = ring.one();
        e
    }

    pub fn scalar(group: &Group, ring: &R, c: R::Elem) -> Self {
        let mut e = Self::zero(group, ring);
        e.coeffs[group.identity()] = c;
        e
    }

    pub fn from_coeffs(group: &Group, ring: &R, coeffs: Vec<R::Elem>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::Invariant(format!(
                "coefficient vector of length {} for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        Ok(AlgebraElement {
            group: group.clone(),
            ring: ring.clone(),
            coeffs,
        })
    }

    /// Sum of the listed group elements (with multiplicity).
    pub fn sum_of(group: &Group, ring: &R, elements: &[usize]) -> Self {
        let mut e = Self::zero(group, ring);
        for &g in elements {
            e.coeffs[g] = ring.add(e.coeffs[g], ring.one());
        }
        e
    }

    /// `(1/|H|) sum_{h in H} h` for the listed subgroup elements.
    pub fn hat(group: &Group, ring: &R, subgroup: &[usize]) -> Result<Self> {
        let n = subgroup.len() as i64;
        let inv = ring
            .inv(ring.from_i64(n))
            .ok_or(Error::NotSemisimple {
                characteristic: ring.characteristic(),
                order: n as u64,
            })?;
        let mut e = Self::zero(group, ring);
        for &h in subgroup {
            e.coeffs[h] = inv;
        }
        Ok(e)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, g: usize) -> R::Elem {
        self.coeffs[g]
    }

    pub fn set_coeff(&mut self, g: usize, c: R::Elem) {
        self.coeffs[g] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| self.ring.is_zero(c))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| !self.ring.is_zero(self.coeffs[i]))
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| !self.ring.is_zero(c)).count()
    }

    fn zip(&self, other: &Self, f: impl Fn(R::Elem, R::Elem) -> R::Elem) -> Self {
        assert_eq!(self.group, other.group, "operands from different group algebras");
        AlgebraElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| self.ring.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        self.scale(self.ring.neg(self.ring.one()))
    }

    pub fn scale(&self, c: R::Elem) -> Self {
        AlgebraElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| self.ring.mul(c, a)).collect(),
        }
    }

    /// Convolution: `(ab)_k = sum_{gh = k} a_g b_h`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group, "operands from different group algebras");
        let r = &self.ring;
        let mut out = vec![r.zero(); self.coeffs.len()];
        let rhs: Vec<(usize, R::Elem)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| !r.is_zero(c))
            .map(|(i, &c)| (i, c))
            .collect();
        for (g, &a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for &(h, b) in &rhs {
                let k = self.group.op(g, h);
                out[k] = r.add(out[k], r.mul(a, b));
            }
        }
        AlgebraElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs: out,
        }
    }

    /// Left translate `g * self`.
    pub fn translate(&self, g: usize) -> Self {
        let mut out = vec![self.ring.zero(); self.coeffs.len()];
        for (h, &c) in self.coeffs.iter().enumerate() {
            out[self.group.op(g, h)] = c;
        }
        AlgebraElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs: out,
        }
    }

    /// Right translate `self * g`.
    pub fn translate_right(&self, g: usize) -> Self {
        let mut out = vec![self.ring.zero(); self.coeffs.len()];
        for (h, &c) in self.coeffs.iter().enumerate() {
            out[self.group.op(h, g)] = c;
        }
        AlgebraElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs: out,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.group, &self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Commutes with every generator of the group.
    pub fn is_central(&self) -> bool {
        self.group
            .generators()
            .into_iter()
            .all(|g| self.translate(g) == self.translate_right(g))
    }

    pub fn is_orthogonal(&self, other: &Self) -> bool {
        self.mul(other).is_zero() && other.mul(self).is_zero()
    }

    /// The classical involution `sum a_g g -> sum a_g g^{-1}`.
    pub fn involution(&self) -> Self {
        let mut out = vec![self.ring.zero(); self.coeffs.len()];
        for (g, &c) in self.coeffs.iter().enumerate() {
            out[self.group.inv(g)] = c;
        }
        AlgebraElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs: out,
        }
    }

    /// Applies a permutation of group elements: the coefficient of `g`
    /// moves to `perm[g]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = vec![self.ring.zero(); self.coeffs.len()];
        for (g, &c) in self.coeffs.iter().enumerate() {
            out[perm[g]] = c;
        }
        AlgebraElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs: out,
        }
    }

    /// Integer codes of the coefficients, for hashing and serialization.
    pub fn coeff_codes(&self) -> Vec<u64> {
        self.coeffs.iter().map(|&c| self.ring.code(c)).collect()
    }

    /// `c1*g1 + c2*g2 + ...` over the support, in element order.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|g| format!("{}*{}", self.ring.render(self.coeffs[g]), self.group.label(g)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.name(),
            "coefficients": self.coeff_codes(),
        })
    }
}

impl<R: Ring> fmt::Debug for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<R: Ring> fmt::Display for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<R: Ring> Add for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;
    fn add(self, rhs: Self) -> AlgebraElement<R> {
        AlgebraElement::add(self, rhs)
    }
}

impl<R: Ring> Sub for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;
    fn sub(self, rhs: Self) -> AlgebraElement<R> {
        AlgebraElement::sub(self, rhs)
    }
}

impl<R: Ring> Mul for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;
    fn mul(self, rhs: Self) -> AlgebraElement<R> {
        AlgebraElement::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;
    fn neg(self) -> AlgebraElement<R> {
        AlgebraElement::neg(self)
    }
}
