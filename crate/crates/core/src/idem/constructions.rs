//! Explicit idempotent constructions for cyclic `p`-groups, groups of order
//! `2p^n`, `C_{2^m}` with `q = 3 mod 8`, and binary algebras of groups whose
//! order has two or three prime factors.

use super::{check_semisimple, hat_in, sharp_within, Idempotent, IdempotentSystem, Label};
use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::galg::AlgebraElement;
use crate::group::Group;
use crate::groups::{all_subgroups, AbelianGroup, Subgroup};
use crate::numtheory::{euler_phi, gcd, generates_units, is_prime, order_mod, prime_power};

fn named(label: impl Into<String>, element: AlgebraElement<Field>) -> Idempotent<Field> {
    Idempotent {
        label: Label::Named(label.into()),
        element,
    }
}

/// Chain idempotents of a cyclic `p`-group `C_{p^n}`: `e_0 = G^` and
/// `e_i = G_i^ - G_{i-1}^` with `G_i = <g^{p^i}>`. Flagged primitive when
/// `o(q) = phi(p^n)`.
pub fn cyclic_chain_idempotents(g: &AbelianGroup, f: &Field) -> Result<IdempotentSystem<Field>> {
    let (p, n) = prime_power(g.order() as u64)
        .filter(|_| g.is_cyclic())
        .ok_or_else(|| Error::Hypothesis(format!("{} is not a cyclic p-group", g.name())))?;
    check_semisimple(g.order(), f)?;
    let group = Group::abelian(g.clone());
    let chain: Vec<Subgroup> = (0..=n)
        .map(|i| g.subgroup_generated(&[g.scale(1, p.pow(i))]))
        .collect();
    let hats: Vec<AlgebraElement<Field>> = chain
        .iter()
        .map(|h| hat_in(&group, f, h))
        .collect::<Result<_>>()?;
    let mut members = vec![named("e_0", hats[0].clone())];
    for i in 1..=n as usize {
        members.push(named(format!("e_{i}"), &hats[i] - &hats[i - 1]));
    }
    let pn = g.order() as u64;
    Ok(IdempotentSystem {
        group,
        ring: f.clone(),
        members,
        primitive: order_mod(f.order(), pn)? == euler_phi(pn),
    })
}

/// For `G = C_2 x C_{p^n}` with `t` generating `C_2`: the products
/// `(1 + t)/2 e_i` and `(1 - t)/2 e_i` with `e_i` the chain idempotents of
/// the `p`-part. Flagged primitive when `o(q) = phi(p^n)` modulo `2p^n`.
pub fn order_2pn_idempotents(g: &AbelianGroup, f: &Field) -> Result<IdempotentSystem<Field>> {
    let (p, n) = match g.factors() {
        [2, pn] => prime_power(*pn).filter(|&(p, _)| p != 2),
        _ => None,
    }
    .ok_or_else(|| Error::Hypothesis(format!("{} is not C2 x C(p^n), p odd", g.name())))?;
    check_semisimple(g.order(), f)?;
    let group = Group::abelian(g.clone());
    let t = g.index(&[1, 0]);
    let a = g.index(&[0, 1]);
    let chain: Vec<Subgroup> = (0..=n)
        .map(|i| g.subgroup_generated(&[g.scale(a, p.pow(i))]))
        .collect();
    let hats: Vec<AlgebraElement<Field>> = chain
        .iter()
        .map(|h| hat_in(&group, f, h))
        .collect::<Result<_>>()?;
    let half = f.inv(f.from_int(2))?;
    let one = AlgebraElement::one(&group, f);
    let tt = AlgebraElement::basis(&group, f, t);
    let plus = (&one + &tt).scale(half);
    let minus = (&one - &tt).scale(half);
    let mut members = Vec::new();
    for i in 0..=n as usize {
        let e = if i == 0 {
            hats[0].clone()
        } else {
            &hats[i] - &hats[i - 1]
        };
        members.push(named(format!("(1+t)/2 e_{i}"), &plus * &e));
        members.push(named(format!("(1-t)/2 e_{i}"), &minus * &e));
    }
    let pn = p.pow(n);
    Ok(IdempotentSystem {
        group,
        ring: f.clone(),
        members,
        primitive: order_mod(f.order(), 2 * pn)? == euler_phi(pn),
    })
}

/// The explicit primitive system of `F_q C_{2^m}` for `q = 3 mod 8`, `m >= 3`:
/// `e_0, e_1, e_2` and `e_k, e'_k` for `3 <= k <= m`, where
/// `e_k = (1 - a^{2^{k-1}}) (sum_{j < 2^{m-k}} a^{j 2^k}) (2 + s a^{2^{k-3}} + s a^{3 2^{k-3}}) / 2^{m-k+3}`
/// with `s = alpha` (and `-alpha` for `e'_k`), `alpha^2 = -2`.
pub fn mod8_cyclic_2m_idempotents(m: u32, f: &Field) -> Result<IdempotentSystem<Field>> {
    if m < 3 {
        return Err(Error::Hypothesis("the mod-8 construction needs m >= 3".into()));
    }
    if f.order() % 8 != 3 {
        return Err(Error::Hypothesis(format!("q = {} is not 3 mod 8", f.order())));
    }
    let minus_two = f.from_int(-2);
    let alpha = f
        .elements()
        .find(|&x| f.mul(x, x) == minus_two)
        .ok_or_else(|| Error::Invariant("-2 is not a square although q = 3 mod 8".into()))?;
    let n = 1u64 << m;
    let g = AbelianGroup::cyclic(n)?;
    let group = Group::abelian(g);
    let poly = |terms: &[(u64, crate::ffield::FieldElement)]| {
        let mut e = AlgebraElement::zero(&group, f);
        for &(k, c) in terms {
            let i = (k % n) as usize;
            e.set_coeff(i, f.add(e.coeff(i), c));
        }
        e
    };
    let inv_pow2 = |k: u32| f.inv(f.from_int(1i64 << k)).expect("q is odd");
    let one = f.one();
    let neg = f.neg(one);
    let sign = |j: u64| if j.is_multiple_of(2) { one } else { neg };

    let e0 = poly(&(0..n).map(|j| (j, one)).collect::<Vec<_>>()).scale(inv_pow2(m));
    let e1 = poly(&(0..n).map(|j| (j, sign(j))).collect::<Vec<_>>()).scale(inv_pow2(m));
    let e2 = poly(&(0..n / 2).map(|j| (2 * j, sign(j))).collect::<Vec<_>>()).scale(inv_pow2(m - 1));
    let mut members = vec![named("e_0", e0), named("e_1", e1), named("e_2", e2)];
    for k in 3..=m {
        let s = 1u64 << (k - 3);
        let factor = poly(&[(0, one), (1 << (k - 1), neg)]);
        let sum = poly(&(0..(1u64 << (m - k))).map(|j| (j << k, one)).collect::<Vec<_>>());
        let base = &factor * &sum;
        for (name, a) in [(format!("e_{k}"), alpha), (format!("e'_{k}"), f.neg(alpha))] {
            let t = poly(&[(0, f.from_int(2)), (s, a), (3 * s, a)]);
            members.push(named(name, (&base * &t).scale(inv_pow2(m - k + 3))));
        }
    }
    Ok(IdempotentSystem {
        group,
        ring: f.clone(),
        members,
        primitive: true,
    })
}

fn require_binary(f: &Field) -> Result<()> {
    if f.order() != 2 {
        return Err(Error::Hypothesis("construction is over F_2".into()));
    }
    Ok(())
}

fn is_quadratic_residue(x: u64, p: u64) -> bool {
    crate::numtheory::pow_mod(x, (p - 1) / 2, p) == 1
}

/// `u = sum_{x QR} a^x` and `u' = sum_{x non-QR} a^x` over `1 <= x < p`,
/// both with an extra `1` when `p = 3 mod 4`. When 2 generates `U(Z_p)`
/// these exponent sets are the even and odd powers of 2.
fn uv_raw(group: &Group, f: &Field, a: usize, p: u64) -> (AlgebraElement<Field>, AlgebraElement<Field>) {
    let mut u = AlgebraElement::zero(group, f);
    let mut v = AlgebraElement::zero(group, f);
    if p % 4 == 3 {
        u.set_coeff(0, f.one());
        v.set_coeff(0, f.one());
    }
    for x in 1..p {
        let ax = group.pow(a, x);
        let target = if is_quadratic_residue(x, p) { &mut u } else { &mut v };
        target.set_coeff(ax, f.add(target.coeff(ax), f.one()));
    }
    (u, v)
}

/// The pair `(u, u')` attached to an element `a` of odd prime order `p` in a
/// binary group algebra.
pub fn uv_elements(
    group: &Group,
    f: &Field,
    a: usize,
    p: u64,
) -> Result<(AlgebraElement<Field>, AlgebraElement<Field>)> {
    require_binary(f)?;
    if p == 2 || !is_prime(p) {
        return Err(Error::Hypothesis(format!("{p} is not an odd prime")));
    }
    if group.element_order(a) != p {
        return Err(Error::Hypothesis(format!("element does not have order {p}")));
    }
    Ok(uv_raw(group, f, a, p))
}

/// Hypotheses on the primes of `G = G_p x G_q` for the binary two-prime
/// construction.
pub fn two_prime_hypotheses(p: u64, q: u64) -> Result<()> {
    if p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q) {
        return Err(Error::Hypothesis(format!("{p}, {q} are not distinct odd primes")));
    }
    if gcd(p - 1, q - 1) != 2 {
        return Err(Error::Hypothesis(format!("gcd({}, {}) != 2", p - 1, q - 1)));
    }
    for r in [p, q] {
        if !generates_units(2, r * r) {
            return Err(Error::Hypothesis(format!("2 does not generate U(Z_{})", r * r)));
        }
    }
    if gcd(p - 1, q) != 1 || gcd(p, q - 1) != 1 {
        return Err(Error::Hypothesis("cross gcd condition fails".into()));
    }
    Ok(())
}

fn two_primes(g: &AbelianGroup) -> Result<(u64, u64)> {
    match g.primes().as_slice() {
        [p, q] => Ok((*p, *q)),
        _ => Err(Error::Hypothesis(format!("{} is not divisible by exactly two primes", g.name()))),
    }
}

fn cocyclic_within(g: &AbelianGroup, ambient: &Subgroup, h: &Subgroup) -> bool {
    h.order() < ambient.order() && h.is_subgroup_of(ambient) && sharp_within(g, ambient, h).is_ok()
}

/// `(u H^, u' H^)` for `H` co-cyclic in the Sylow subgroup `gp`, built from
/// the first element of `H# \ H`.
fn uv_for(
    g: &AbelianGroup,
    group: &Group,
    f: &Field,
    gp: &Subgroup,
    h: &Subgroup,
    p: u64,
) -> Result<(AlgebraElement<Field>, AlgebraElement<Field>, AlgebraElement<Field>)> {
    let s = sharp_within(g, gp, h)?;
    let a = s
        .elements()
        .iter()
        .copied()
        .find(|&x| !h.contains(x))
        .expect("H# is strictly larger than H");
    let (u, u2) = uv_raw(group, f, a, p);
    let hh = hat_in(group, f, h)?;
    let e = &hh - &hat_in(group, f, &s)?;
    Ok((&u * &hh, &u2 * &hh, e))
}

/// The two primitive idempotents `e_1(H, K)`, `e_2(H, K)` splitting
/// `e_H e_K` in `F_2(G_p x G_q)`.
pub fn e1e2(
    g: &AbelianGroup,
    f: &Field,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<(AlgebraElement<Field>, AlgebraElement<Field>)> {
    require_binary(f)?;
    let (p, q) = two_primes(g)?;
    two_prime_hypotheses(p, q)?;
    let (gp, gq) = (g.sylow(p), g.sylow(q));
    if !cocyclic_within(g, &gp, h) || !cocyclic_within(g, &gq, k) {
        return Err(Error::NotCocyclic);
    }
    let group = Group::abelian(g.clone());
    let (uh, u2h, eh) = uv_for(g, &group, f, &gp, h, p)?;
    let (vk, v2k, ek) = uv_for(g, &group, f, &gq, k, q)?;
    let e1 = &(&uh * &vk) + &(&u2h * &v2k);
    let e2 = &(&uh * &v2k) + &(&u2h * &vk);
    if &e1 + &e2 != &eh * &ek {
        return Err(Error::Invariant("e_1 + e_2 != e_H e_K".into()));
    }
    Ok((e1, e2))
}

/// The binary primitive system of `G_p x G_q`: `G_p^ G_q^`, `G_p^ e_K`,
/// `e_H G_q^` and the pairs `e_1(H,K), e_2(H,K)`.
pub fn two_prime_idempotents(g: &AbelianGroup, f: &Field) -> Result<IdempotentSystem<Field>> {
    require_binary(f)?;
    let (p, q) = two_primes(g)?;
    two_prime_hypotheses(p, q)?;
    let group = Group::abelian(g.clone());
    let (gp, gq) = (g.sylow(p), g.sylow(q));
    let subs = all_subgroups(g)?;
    let sp: Vec<&Subgroup> = subs.iter().filter(|h| cocyclic_within(g, &gp, h)).collect();
    let sq: Vec<&Subgroup> = subs.iter().filter(|k| cocyclic_within(g, &gq, k)).collect();
    let hp = hat_in(&group, f, &gp)?;
    let hq = hat_in(&group, f, &gq)?;
    let e_of = |amb: &Subgroup, h: &Subgroup| -> Result<AlgebraElement<Field>> {
        Ok(&hat_in(&group, f, h)? - &hat_in(&group, f, &sharp_within(g, amb, h)?)?)
    };
    let mut members = vec![Idempotent {
        label: Label::Whole,
        element: &hp * &hq,
    }];
    for k in &sq {
        members.push(named(format!("G_p^ e_K, K={}", k.render(g)), &hp * &e_of(&gq, k)?));
    }
    for h in &sp {
        members.push(named(format!("e_H G_q^, H={}", h.render(g)), &e_of(&gp, h)? * &hq));
    }
    for h in &sp {
        for k in &sq {
            let (e1, e2) = e1e2(g, f, h, k)?;
            let tag = format!("H={}, K={}", h.render(g), k.render(g));
            members.push(named(format!("e_1({tag})"), e1));
            members.push(named(format!("e_2({tag})"), e2));
        }
    }
    Ok(IdempotentSystem {
        group,
        ring: f.clone(),
        members,
        primitive: true,
    })
}

pub fn three_prime_hypotheses(p1: u64, p2: u64, p3: u64) -> Result<()> {
    let ps = [p1, p2, p3];
    for (i, &p) in ps.iter().enumerate() {
        if p == 2 || !is_prime(p) {
            return Err(Error::Hypothesis(format!("{p} is not an odd prime")));
        }
        if !generates_units(2, p) {
            return Err(Error::Hypothesis(format!("2 does not generate U(Z_{p})")));
        }
        for &r in &ps[i + 1..] {
            if r == p {
                return Err(Error::Hypothesis("primes are not distinct".into()));
            }
            if gcd(p - 1, r - 1) != 2 {
                return Err(Error::Hypothesis(format!("gcd({}, {}) != 2", p - 1, r - 1)));
            }
        }
    }
    Ok(())
}

/// The fourteen primitive idempotents of `F_2(C_{p1} x C_{p2} x C_{p3})`.
pub fn three_prime_idempotents(p1: u64, p2: u64, p3: u64) -> Result<IdempotentSystem<Field>> {
    three_prime_hypotheses(p1, p2, p3)?;
    let f = Field::prime(2)?;
    let g = AbelianGroup::new(&[p1, p2, p3])?;
    let group = Group::abelian(g.clone());
    let gen = |p: u64| {
        let pos = g.factors().iter().position(|&n| n == p).expect("factor present");
        g.generators()[pos]
    };
    let (a, b, c) = (gen(p1), gen(p2), gen(p3));
    let hat_of = |x: usize| hat_in(&group, &f, &g.subgroup_generated(&[x]));
    let (ah, bh, ch) = (hat_of(a)?, hat_of(b)?, hat_of(c)?);
    let one = AlgebraElement::one(&group, &f);
    let (na, nb, nc) = (&one - &ah, &one - &bh, &one - &ch);
    let (u, u2) = uv_raw(&group, &f, a, p1);
    let (v, v2) = uv_raw(&group, &f, b, p2);
    let (w, w2) = uv_raw(&group, &f, c, p3);
    let m = |x: &AlgebraElement<Field>, y: &AlgebraElement<Field>| x * y;
    let big_e = m(&m(&na, &nb), &nc);
    let list = vec![
        ("e_0", m(&m(&ah, &bh), &ch)),
        ("e_1", m(&m(&ah, &bh), &nc)),
        ("e_2", m(&m(&ah, &nb), &ch)),
        ("e_3", m(&m(&na, &bh), &ch)),
        ("e_4", m(&(&m(&u, &v) + &m(&u2, &v2)), &ch)),
        ("e_5", m(&(&m(&u2, &v) + &m(&u, &v2)), &ch)),
        ("e_6", m(&(&m(&u, &w) + &m(&u2, &w2)), &bh)),
        ("e_7", m(&(&m(&u2, &w) + &m(&u, &w2)), &bh)),
        ("e_8", m(&(&m(&v, &w) + &m(&v2, &w2)), &ah)),
        ("e_9", m(&(&m(&v2, &w) + &m(&v, &w2)), &ah)),
        ("e_10", &(&big_e + &m(&m(&u2, &v2), &w)) + &m(&m(&u, &v), &w2)),
        ("e_11", &(&big_e + &m(&m(&u2, &v2), &w2)) + &m(&m(&u, &v), &w)),
        ("e_12", &(&big_e + &m(&m(&u2, &v), &w)) + &m(&m(&u, &v2), &w2)),
        ("e_13", &(&big_e + &m(&m(&u, &v2), &w)) + &m(&m(&u2, &v), &w2)),
    ];
    Ok(IdempotentSystem {
        group,
        ring: f.clone(),
        members: list.into_iter().map(|(l, e)| named(l, e)).collect(),
        primitive: true,
    })
}
