//! Exact arithmetic in prime fields `F_p` and extensions `F_{p^m}`.
//!
//! Elements of `F_{p^m}` are stored as the integer whose base-`p` digits are
//! the coefficients of the polynomial representative, least significant digit
//! first. The constant polynomials therefore coincide with the residues
//! `0..p`, which keeps the prime subfield trivially embedded.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, is_prime};

/// An element of some [`Field`]. Arithmetic goes through the owning field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u64);

impl FieldElement {
    pub fn value(self) -> u64 {
        self.0
    }
}

const MAX_ORDER: u128 = 1 << 32;
const TABLE_LIMIT: u64 = 1 << 16;

struct Inner {
    p: u64,
    m: u32,
    q: u64,
    /// Monic modulus, low degree first, length `m + 1`.
    modulus: Vec<u64>,
    /// `exp[i] = g^i` and `log[g^i] = i` for a primitive element `g`.
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

/// A finite field `F_{p^m}`. Cheap to clone; clones share storage.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.m > 1 {
            write!(f, " [{}]", render_poly(&self.0.modulus, "x"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    /// `F_{p^m}` with the first irreducible monic modulus in lexicographic
    /// order (coefficient of `x^0` varying fastest).
    pub fn new(p: u64, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = match (p as u128).checked_pow(m) {
            Some(q) if q <= MAX_ORDER => q as u64,
            _ => return Err(Error::FieldTooLarge { p, m }),
        };
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            find_irreducible(p, m as usize)
        };
        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            tables: None,
        };
        if m > 1 && q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// The field with `q` elements, `q` a prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        match factorize(q).as_slice() {
            [(p, m)] => Field::new(*p, *m),
            _ => Err(Error::Parse(format!("field order {q} is not a prime power"))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u64)
    }

    /// The element with packed index `v` (see module docs).
    pub fn element(&self, v: u64) -> Result<FieldElement> {
        if v < self.0.q {
            Ok(FieldElement(v))
        } else {
            Err(Error::Parse(format!("{v} is not an element of {self}")))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    /// Polynomial-basis coordinates, low degree first.
    pub fn coordinates(&self, x: FieldElement) -> Vec<u64> {
        let mut v = x.0;
        (0..self.0.m)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    pub fn from_coordinates(&self, digits: &[u64]) -> FieldElement {
        let p = self.0.p;
        let mut v = 0u64;
        for &d in digits.iter().take(self.0.m as usize).rev() {
            v = v * p + d % p;
        }
        FieldElement(v)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.0.p;
        if self.0.m == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { p - a.0 });
        }
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u64, 1u64);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        if self.0.m == 1 {
            return FieldElement(((a.0 as u128 * b.0 as u128) % self.0.p as u128) as u64);
        }
        if let Some((exp, log)) = &self.0.tables {
            let n = self.0.q - 1;
            let i = (log[a.0 as usize] as u64 + log[b.0 as usize] as u64) % n;
            return FieldElement(exp[i as usize] as u64);
        }
        self.poly_mul(a, b)
    }

    fn poly_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        let x = self.coordinates(a);
        let y = self.coordinates(b);
        let mut prod = vec![0u64; x.len() + y.len() - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        poly_rem_monic(&mut prod, &self.0.modulus, p);
        self.from_coordinates(&prod)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        if let Some((exp, log)) = &self.0.tables {
            let n = self.0.q - 1;
            let i = (n - log[a.0 as usize] as u64) % n;
            return Ok(FieldElement(exp[i as usize] as u64));
        }
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The Frobenius map `x -> x^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.0.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let n = self.0.q - 1;
        let mut t = n;
        for (r, _) in factorize(n) {
            while t.is_multiple_of(r) && self.pow(a, t / r) == self.one() {
                t /= r;
            }
        }
        Ok(t)
    }

    /// The first element, in packed-index order, generating `F_q^*`.
    pub fn primitive_element(&self) -> FieldElement {
        self.primitive_root_of_unity(self.0.q - 1)
            .expect("the multiplicative group is cyclic")
    }

    /// An element of multiplicative order exactly `e`.
    ///
    /// Scans `x = 1, 2, ...` and returns the first `x^((q-1)/e)` of order `e`.
    pub fn primitive_root_of_unity(&self, e: u64) -> Result<FieldElement> {
        let n = self.0.q - 1;
        if e == 0 || !n.is_multiple_of(e) {
            return Err(Error::NoRootOfUnity {
                order: e,
                field_order: self.0.q,
            });
        }
        let k = n / e;
        for x in 1..self.0.q {
            let y = self.pow(FieldElement(x), k);
            if self.element_order(y)? == e {
                return Ok(y);
            }
        }
        unreachable!("a cyclic group of order {n} has elements of every order dividing it")
    }

    /// Embedding of a subfield `sub` into `self`.
    pub fn embedding(&self, sub: &Field) -> Result<Embedding> {
        if sub.0.p != self.0.p || !self.0.m.is_multiple_of(sub.0.m) {
            return Err(Error::Unsupported(format!("{sub} is not a subfield of {self}")));
        }
        let images: Vec<FieldElement> = if sub.0.m == 1 {
            sub.elements().collect()
        } else {
            // A root of the subfield modulus lies in the multiplicative
            // subgroup of order |sub| - 1.
            let k = (self.0.q - 1) / (sub.0.q - 1);
            let g = self.pow(self.primitive_element(), k);
            let root = (0..sub.0.q - 1)
                .map(|j| self.pow(g, j))
                .find(|&r| {
                    let mut acc = self.zero();
                    for &c in sub.0.modulus.iter().rev() {
                        acc = self.add(self.mul(acc, r), FieldElement(c));
                    }
                    acc == self.zero()
                })
                .ok_or_else(|| Error::Invariant("subfield modulus has no root".into()))?;
            sub.elements()
                .map(|x| {
                    let mut acc = self.zero();
                    for c in sub.coordinates(x).into_iter().rev() {
                        acc = self.add(self.mul(acc, root), FieldElement(c));
                    }
                    acc
                })
                .collect()
        };
        let back = images
            .iter()
            .enumerate()
            .map(|(i, &y)| (y, FieldElement(i as u64)))
            .collect();
        Ok(Embedding { images, back })
    }

    /// Human-readable form: residues for prime fields, polynomials in `z`
    /// otherwise.
    pub fn render(&self, a: FieldElement) -> String {
        if self.0.m == 1 {
            return a.0.to_string();
        }
        render_poly(&self.coordinates(a), "z")
    }
}

/// An injective field homomorphism from a subfield.
#[derive(Clone, Debug)]
pub struct Embedding {
    images: Vec<FieldElement>,
    back: HashMap<FieldElement, FieldElement>,
}

impl Embedding {
    pub fn image(&self, x: FieldElement) -> FieldElement {
        self.images[x.0 as usize]
    }

    /// The preimage of `y`, if `y` lies in the image.
    pub fn preimage(&self, y: FieldElement) -> Option<FieldElement> {
        self.back.get(&y).copied()
    }
}

fn render_poly(coeffs: &[u64], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn build_tables(inner: &Inner) -> (Vec<u32>, Vec<u32>) {
    let tmp = Field(Arc::new(Inner {
        p: inner.p,
        m: inner.m,
        q: inner.q,
        modulus: inner.modulus.clone(),
        tables: None,
    }));
    let g = tmp.primitive_element();
    let n = (inner.q - 1) as usize;
    let mut exp = vec![0u32; n];
    let mut log = vec![0u32; inner.q as usize];
    let mut x = tmp.one();
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x.0 as u32;
        log[x.0 as usize] = i as u32;
        x = tmp.poly_mul(x, g);
    }
    (exp, log)
}

// Dense polynomials over F_p, low degree first.

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem_monic(a: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let m = modulus.len() - 1;
    while a.len() > m {
        let lead = a.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let off = a.len() - m;
        for (i, &c) in modulus[..m].iter().enumerate() {
            a[off + i] = (a[off + i] + (p - lead) * c % p) % p;
        }
    }
    trim(a);
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv_lead = crate::numtheory::inv_mod(b[db], p).expect("nonzero leading coefficient");
    while r.len() > db && !r.is_empty() {
        let factor = r[r.len() - 1] * inv_lead % p;
        let off = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            r[off + i] = (r[off + i] + (p - factor) * c % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem_monic(&mut prod, modulus, p);
    prod
}

fn poly_powmod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, modulus, p);
        }
        b = poly_mulmod(&b, &b, modulus, p);
        e >>= 1;
    }
    acc
}

/// Irreducibility of a monic `f` of degree `m` over `F_p`:
/// `gcd(f, x^(p^i) - x) = 1` for all `1 <= i <= m/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for _ in 1..=m / 2 {
        xp = poly_powmod(&xp, p, f, p);
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        if diff.is_empty() {
            return false;
        }
        if poly_gcd(f, &diff, p).len() > 1 {
            return false;
        }
    }
    true
}

fn find_irreducible(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    for idx in 0..count {
        let mut f = Vec::with_capacity(m + 1);
        let mut v = idx;
        for _ in 0..m {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_fields() -> Vec<Field> {
        [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2), (2, 6), (3, 3)]
            .into_iter()
            .map(|(p, m)| Field::new(p, m).unwrap())
            .collect()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1), Err(Error::NotPrime(4)));
        assert!(matches!(Field::new(2, 33), Err(Error::FieldTooLarge { .. })));
        assert_eq!(Field::new(2, 0), Err(Error::ZeroDegree));
        assert!(Field::new(2, 32).is_ok());
    }

    #[test]
    fn prime_field_modulus_is_x() {
        assert_eq!(Field::prime(2).unwrap().modulus(), &[0, 1]);
        // x^2+x+1 is the only irreducible quadratic over F_2.
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        // x^2+1 is irreducible over F_3 and comes first.
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if a != f.zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one(), "{f:?}");
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if f.order() <= 27 {
                        for &c in &els {
                            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_and_polynomial_products_agree() {
        let f = Field::new(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.poly_mul(a, b));
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_prime_field() {
        for f in small_fields() {
            let fixed = f.elements().filter(|&a| f.frobenius(a) == a).count() as u64;
            assert_eq!(fixed, f.characteristic());
            for a in f.elements() {
                assert_eq!(f.pow(a, f.order()), a);
            }
            // Frobenius is injective.
            let mut imgs: Vec<_> = f.elements().map(|a| f.frobenius(a)).collect();
            imgs.sort();
            imgs.dedup();
            assert_eq!(imgs.len() as u64, f.order());
        }
    }

    #[test]
    fn nine_element_group_is_cyclic() {
        let f = Field::new(3, 2).unwrap();
        let orders: Vec<u64> = f.elements().skip(1).map(|a| f.element_order(a).unwrap()).collect();
        assert!(orders.contains(&8));
        assert!(orders.iter().all(|o| 8 % o == 0));
    }

    #[test]
    fn element_orders_in_f7() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.element_order(f.one()).unwrap(), 1);
        assert_eq!(f.element_order(f.from_int(3)).unwrap(), 6);
        assert_eq!(f.element_order(f.from_int(2)).unwrap(), 3);
        assert_eq!(f.element_order(f.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn roots_of_unity() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.primitive_root_of_unity(2).unwrap(), f3.from_int(2));
        let f7 = Field::prime(7).unwrap();
        let z = f7.primitive_root_of_unity(3).unwrap();
        assert!(z == f7.from_int(2) || z == f7.from_int(4));
        let f4 = Field::new(2, 2).unwrap();
        let w = f4.primitive_root_of_unity(3).unwrap();
        let s = f4.add(f4.add(f4.mul(w, w), w), f4.one());
        assert_eq!(s, f4.zero());
        assert!(matches!(f7.primitive_root_of_unity(4), Err(Error::NoRootOfUnity { .. })));
    }

    #[test]
    fn reproducible_modulus() {
        for (p, m) in [(2, 5), (3, 4), (5, 3)] {
            assert_eq!(Field::new(p, m).unwrap().modulus(), Field::new(p, m).unwrap().modulus());
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = Field::new(2, 20).unwrap();
        let g = f.primitive_root_of_unity(1023 * 1025).unwrap();
        assert_eq!(f.element_order(g).unwrap(), (1 << 20) - 1);
        let x = f.element(123_456).unwrap();
        assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
    }

    #[test]
    fn subfield_embedding_is_a_homomorphism() {
        let big = Field::new(2, 6).unwrap();
        for sub in [Field::new(2, 2).unwrap(), Field::new(2, 3).unwrap()] {
            let emb = big.embedding(&sub).unwrap();
            for a in sub.elements() {
                assert_eq!(emb.preimage(emb.image(a)), Some(a));
                for b in sub.elements() {
                    assert_eq!(emb.image(sub.mul(a, b)), big.mul(emb.image(a), emb.image(b)));
                    assert_eq!(emb.image(sub.add(a, b)), big.add(emb.image(a), emb.image(b)));
                }
            }
        }
        assert!(big.embedding(&Field::new(2, 4).unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn element_order_divides_group_order(idx in 1u64..625) {
            let f = Field::new(5, 4).unwrap();
            let a = f.element(idx).unwrap();
            let o = f.element_order(a).unwrap();
            prop_assert_eq!(624 % o, 0);
            prop_assert_eq!(f.pow(a, o), f.one());
        }

        #[test]
        fn inverse_in_large_prime_field(a in 1u64..4_294_967_291) {
            let f = Field::prime(4_294_967_291).unwrap();
            let x = f.element(a).unwrap();
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        }
    }
}
