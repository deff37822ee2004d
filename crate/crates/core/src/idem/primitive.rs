//! Complete systems of primitive idempotents for abelian group algebras.

use serde::Serialize;

use super::{check_semisimple, e_h, hat_in, Idempotent, IdempotentSystem, Label};
use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use crate::galg::AlgebraElement;
use crate::group::Group;
use crate::groups::{cocyclic_subgroups, power_orbits, AbelianGroup, Subgroup};
use crate::numtheory::{euler_phi, order_mod, prime_power};

/// Largest splitting field the character route will build.
const SPLITTING_FIELD_LIMIT: u128 = 1 << 32;

/// All primitive idempotents of `F_q G`. Uses character orbits over a
/// splitting field when one fits in 32 bits, and otherwise splits the
/// Frobenius-fixed subalgebra directly.
pub fn primitive_idempotents(g: &AbelianGroup, f: &Field) -> Result<IdempotentSystem<Field>> {
    check_semisimple(g.order(), f)?;
    if splitting_degree(g, f)?.1 <= SPLITTING_FIELD_LIMIT {
        primitive_idempotents_by_characters(g, f)
    } else {
        primitive_idempotents_rational(g, f)
    }
}

/// `(m, q^m)` with `m` the order of `q` modulo `exp(G)`.
fn splitting_degree(g: &AbelianGroup, f: &Field) -> Result<(u32, u128)> {
    let m = order_mod(f.order(), g.exponent())?;
    let size = (f.order() as u128)
        .checked_pow(m as u32)
        .unwrap_or(u128::MAX);
    Ok((m as u32, size))
}

/// Character-orbit route: `e_O = |G|^-1 sum_g (sum_{v in O} zeta^-<v,g>) g`
/// for each orbit `O` of `v -> q v` on the dual group.
pub fn primitive_idempotents_by_characters(
    g: &AbelianGroup,
    f: &Field,
) -> Result<IdempotentSystem<Field>> {
    check_semisimple(g.order(), f)?;
    let (m, _) = splitting_degree(g, f)?;
    let big = Field::new(f.characteristic(), f.degree() * m)?;
    let emb = big.embedding(f)?;
    let e = g.exponent();
    let zeta = big.primitive_root_of_unity(e)?;
    let powers: Vec<FieldElement> = (0..e).map(|k| big.pow(zeta, k)).collect();
    let n = g.order();
    let inv_n = f
        .inv(f.from_int(n as i64))
        .expect("order is a unit in a semisimple algebra");
    let group = Group::abelian(g.clone());
    let exps: Vec<Vec<u64>> = (0..n).map(|x| g.exponents(x)).collect();
    let weights: Vec<u64> = g.factors().iter().map(|&ni| e / ni).collect();
    let pairing = |v: usize, x: usize| -> u64 {
        let mut s = 0u128;
        for k in 0..weights.len() {
            s += exps[v][k] as u128 * exps[x][k] as u128 * weights[k] as u128;
        }
        (s % e as u128) as u64
    };
    let mut members = Vec::new();
    for orbit in power_orbits(g, f.order()) {
        let mut coeffs = Vec::with_capacity(n);
        for x in 0..n {
            let mut s = big.zero();
            for &v in &orbit {
                s = big.add(s, powers[((e - pairing(v, x)) % e) as usize]);
            }
            let c = emb.preimage(s).ok_or_else(|| {
                Error::Invariant(format!(
                    "orbit sum coefficient {} is not fixed by Frobenius",
                    big.render(s)
                ))
            })?;
            coeffs.push(f.mul(c, inv_n));
        }
        members.push(Idempotent {
            label: Label::CharacterOrbit {
                representative: orbit[0],
                size: orbit.len(),
            },
            element: AlgebraElement::from_coeffs(&group, f, coeffs)?,
        });
    }
    Ok(IdempotentSystem {
        group,
        ring: f.clone(),
        members,
        primitive: true,
    })
}

/// Sparse structure constants of the algebra spanned by `q`-orbit sums.
struct OrbitAlgebra {
    f: Field,
    /// `products[i][j]` lists `(l, c)` with `O_i O_j = sum c O_l`.
    products: Vec<Vec<Vec<(usize, FieldElement)>>>,
    dim: usize,
}

impl OrbitAlgebra {
    fn new(g: &AbelianGroup, f: &Field, orbits: &[Vec<usize>]) -> OrbitAlgebra {
        let n = g.order();
        let mut which = vec![0usize; n];
        for (i, o) in orbits.iter().enumerate() {
            for &x in o {
                which[x] = i;
            }
        }
        let dim = orbits.len();
        let mut products = vec![vec![Vec::new(); dim]; dim];
        let mut counts = vec![0u64; dim];
        for i in 0..dim {
            for j in 0..dim {
                counts.iter_mut().for_each(|c| *c = 0);
                for &x in &orbits[i] {
                    for &y in &orbits[j] {
                        counts[which[g.op(x, y)]] += 1;
                    }
                }
                for (l, &c) in counts.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let per = c / orbits[l].len() as u64;
                    let v = f.from_int((per % f.characteristic()) as i64);
                    if v != f.zero() {
                        products[i][j].push((l, v));
                    }
                }
            }
        }
        OrbitAlgebra {
            f: f.clone(),
            products,
            dim,
        }
    }

    fn mul(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.f;
        let mut out = vec![f.zero(); self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == f.zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == f.zero() {
                    continue;
                }
                let xy = f.mul(x, y);
                for &(l, c) in &self.products[i][j] {
                    out[l] = f.add(out[l], f.mul(xy, c));
                }
            }
        }
        out
    }

    fn pow(&self, a: &[FieldElement], mut e: u64, one: &[FieldElement]) -> Vec<FieldElement> {
        let mut base = a.to_vec();
        let mut acc = one.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Rational route: every idempotent of `F_q G` is constant on orbits of
/// `g -> g^q`, and the algebra of such elements is split, so its primitive
/// idempotents are obtained by refining with the eigenprojections
/// `e (1 - (b - lambda)^(q-1))` over a basis `b`.
pub fn primitive_idempotents_rational(
    g: &AbelianGroup,
    f: &Field,
) -> Result<IdempotentSystem<Field>> {
    check_semisimple(g.order(), f)?;
    let q = f.order();
    let orbits = power_orbits(g, q);
    let alg = OrbitAlgebra::new(g, f, &orbits);
    let dim = alg.dim;
    let mut one = vec![f.zero(); dim];
    one[0] = f.one();
    let mut idems: Vec<Vec<FieldElement>> = vec![one.clone()];
    for j in 0..dim {
        if idems.len() == dim {
            break;
        }
        let mut next = Vec::new();
        for e in &idems {
            let mut basis = vec![f.zero(); dim];
            basis[j] = f.one();
            let x = alg.mul(e, &basis);
            let mut covered = vec![f.zero(); dim];
            for lambda in f.elements() {
                let y: Vec<FieldElement> = x
                    .iter()
                    .zip(e)
                    .map(|(&xi, &ei)| f.sub(xi, f.mul(lambda, ei)))
                    .collect();
                let z = alg.pow(&y, q - 1, e);
                let proj: Vec<FieldElement> = e.iter().zip(&z).map(|(&a, &b)| f.sub(a, b)).collect();
                if proj.iter().any(|&c| c != f.zero()) {
                    covered = covered.iter().zip(&proj).map(|(&a, &b)| f.add(a, b)).collect();
                    next.push(proj);
                }
                if covered == *e {
                    break;
                }
            }
        }
        idems = next;
    }
    if idems.len() != dim {
        return Err(Error::Invariant(format!(
            "split into {} idempotents, expected {dim}",
            idems.len()
        )));
    }
    let group = Group::abelian(g.clone());
    let mut which = vec![0usize; g.order()];
    for (i, o) in orbits.iter().enumerate() {
        for &x in o {
            which[x] = i;
        }
    }
    let mut elements: Vec<AlgebraElement<Field>> = idems
        .iter()
        .map(|c| {
            let coeffs = (0..g.order()).map(|x| c[which[x]]).collect();
            AlgebraElement::from_coeffs(&group, f, coeffs)
        })
        .collect::<Result<_>>()?;
    elements.sort_by_key(|e| e.coeff_codes());
    let members = elements
        .into_iter()
        .enumerate()
        .map(|(i, element)| Idempotent {
            label: Label::Rational(i),
            element,
        })
        .collect();
    Ok(IdempotentSystem {
        group,
        ring: f.clone(),
        members,
        primitive: true,
    })
}

/// Whether `e` is primitive relative to a complete primitive system: `e`
/// absorbs exactly one member and equals it.
pub fn is_primitive(e: &AlgebraElement<Field>, system: &IdempotentSystem<Field>) -> Result<bool> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let absorbed: Vec<&AlgebraElement<Field>> =
        system.elements().filter(|&x| &e.mul(x) == x).collect();
    Ok(absorbed.len() == 1 && absorbed[0] == e)
}

/// Which of the four exponent conditions under which every `e_H` is
/// primitive holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitivityReport {
    pub q: u64,
    pub exponent: u64,
    /// `exp(G) = 2` and `q` odd.
    pub case_a: bool,
    /// `exp(G) = 4` and `q = 3 mod 4`.
    pub case_b: bool,
    /// `exp(G) = p^n` and `o(q) = phi(p^n)`.
    pub case_c: bool,
    /// `exp(G) = 2p^n` and `o(q) = phi(p^n)` modulo `2p^n`.
    pub case_d: bool,
    /// Prediction: the `e_H` system is the primitive system.
    pub all_e_h_primitive: bool,
}

pub fn primitivity_conditions(q: u64, g: &AbelianGroup) -> PrimitivityReport {
    let e = g.exponent();
    let case_a = e == 2 && q % 2 == 1;
    let case_b = e == 4 && q % 4 == 3;
    let full_order = |modulus: u64, pn: u64| {
        order_mod(q, modulus).map(|t| t == euler_phi(pn)).unwrap_or(false)
    };
    let case_c = prime_power(e).is_some_and(|_| full_order(e, e));
    let case_d = e.is_multiple_of(2)
        && prime_power(e / 2).is_some_and(|(p, _)| p != 2)
        && full_order(e, e / 2);
    PrimitivityReport {
        q,
        exponent: e,
        case_a,
        case_b,
        case_c,
        case_d,
        all_e_h_primitive: case_a || case_b || case_c || case_d,
    }
}

/// The map sending a primitive idempotent `e != G^` to the unique co-cyclic
/// `H` with `e e_H = e`, and `G^` to `G`.
pub struct PhiMap {
    group: AbelianGroup,
    whole: AlgebraElement<Field>,
    table: Vec<(Subgroup, AlgebraElement<Field>)>,
}

impl PhiMap {
    pub fn new(g: &AbelianGroup, f: &Field) -> Result<PhiMap> {
        let group = Group::abelian(g.clone());
        let whole = hat_in(&group, f, &g.whole())?;
        let table = cocyclic_subgroups(g)?
            .into_iter()
            .map(|h| {
                let e = e_h(g, f, &h)?;
                Ok((h, e))
            })
            .collect::<Result<_>>()?;
        Ok(PhiMap {
            group: g.clone(),
            whole,
            table,
        })
    }

    pub fn e_h_table(&self) -> &[(Subgroup, AlgebraElement<Field>)] {
        &self.table
    }

    pub fn apply(&self, e: &AlgebraElement<Field>) -> Result<Subgroup> {
        if *e == self.whole {
            return Ok(self.group.whole());
        }
        let mut hit = None;
        for (h, eh) in &self.table {
            let prod = e.mul(eh);
            if prod == *e {
                if hit.is_some() {
                    return Err(Error::Invariant("two co-cyclic subgroups absorb e".into()));
                }
                hit = Some(h.clone());
            } else if !prod.is_zero() {
                return Err(Error::Invariant(
                    "e e_H is neither 0 nor e; e is not primitive".into(),
                ));
            }
        }
        hit.ok_or_else(|| Error::Invariant("no co-cyclic subgroup absorbs e".into()))
    }
}

/// Primitive idempotents `e` with `e H^ = 0` for every nontrivial subgroup.
/// It suffices to test subgroups of prime order.
pub fn essential_idempotents(
    g: &AbelianGroup,
    f: &Field,
    system: &IdempotentSystem<Field>,
) -> Result<Vec<AlgebraElement<Field>>> {
    let group = Group::abelian(g.clone());
    let mut minimal: Vec<Subgroup> = Vec::new();
    for x in 1..g.order() {
        if crate::numtheory::is_prime(g.element_order(x)) {
            let h = g.subgroup_generated(&[x]);
            if !minimal.contains(&h) {
                minimal.push(h);
            }
        }
    }
    let hats: Vec<AlgebraElement<Field>> = minimal
        .iter()
        .map(|h| hat_in(&group, f, h))
        .collect::<Result<_>>()?;
    let out: Vec<AlgebraElement<Field>> = system
        .elements()
        .filter(|e| hats.iter().all(|h| e.mul(h).is_zero()))
        .cloned()
        .collect();
    if !out.is_empty() && !g.is_cyclic() {
        return Err(Error::Invariant(format!(
            "{} is not cyclic but has essential idempotents",
            g.name()
        )));
    }
    Ok(out)
}
