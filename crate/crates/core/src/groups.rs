//! Finite abelian groups as products of cyclic factors.
//!
//! Factor orders are normalized to the primary decomposition: prime powers
//! sorted by prime, larger powers first (`C6 -> C2xC3`, `C3xC9 -> C9xC3`).
//! Elements are indexed in mixed radix with the first coordinate most
//! significant, so index order is lexicographic order of exponent vectors and
//! the identity has index 0.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
pub use crate::numtheory::{divisor_count, euler_phi};
use crate::numtheory::{factorize, gcd, lcm};

/// Default bound on `|G|` for subgroup and automorphism enumeration.
pub const GROUP_BUDGET: usize = 10_000;
/// Default bound on the number of candidate maps tried by [`automorphisms`].
pub const AUTOMORPHISM_BUDGET: u128 = 1_000_000;
/// Bound on the number of subgroups collected by [`all_subgroups`].
pub const SUBGROUP_COUNT_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    name: String,
    factors: Vec<u64>,
    strides: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    /// The group `C_{n_1} x ... x C_{n_k}`. Factors equal to 1 are dropped.
    pub fn new(factors: &[u64]) -> Result<AbelianGroup> {
        let mut primary = Vec::new();
        for &n in factors {
            if n == 0 {
                return Err(Error::InvalidGroup("cyclic factor of order 0".into()));
            }
            for (p, e) in factorize(n) {
                primary.push((p, p.pow(e)));
            }
        }
        primary.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let factors: Vec<u64> = primary.into_iter().map(|(_, q)| q).collect();
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n as usize))
            .filter(|&o| o <= u32::MAX as usize)
            .ok_or_else(|| Error::InvalidGroup("group order too large".into()))?;
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1] as usize;
        }
        let name = if factors.is_empty() {
            "C1".to_string()
        } else {
            factors
                .iter()
                .map(|n| format!("C{n}"))
                .collect::<Vec<_>>()
                .join("x")
        };
        Ok(AbelianGroup {
            name,
            factors,
            strides,
            order,
        })
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: u64) -> Result<AbelianGroup> {
        AbelianGroup::new(&[n])
    }

    /// Parses `C9xC3`, `c4`, `C2 x C2`. The display name keeps the input
    /// spelling, normalized to upper case without spaces.
    pub fn parse(s: &str) -> Result<AbelianGroup> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse(s.into()));
        }
        let mut orders = Vec::new();
        for part in compact.split(['x', 'X']) {
            let digits = part
                .strip_prefix(['C', 'c'])
                .map(|d| d.trim_start_matches('_'))
                .ok_or_else(|| Error::Parse(s.into()))?;
            let n: u64 = digits.parse().map_err(|_| Error::Parse(s.into()))?;
            if n == 0 {
                return Err(Error::Parse(s.into()));
            }
            orders.push(n);
        }
        let mut g = AbelianGroup::new(&orders)?;
        g.name = orders
            .iter()
            .map(|n| format!("C{n}"))
            .collect::<Vec<_>>()
            .join("x");
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Primary factor orders.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponent() as usize == self.order
    }

    /// `Some(p)` when `|G|` is a power of the prime `p` (and `|G| > 1`).
    pub fn p_group_prime(&self) -> Option<u64> {
        match factorize(self.order as u64).as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        factorize(self.order as u64).into_iter().map(|(p, _)| p).collect()
    }

    pub fn exponents(&self, mut i: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.factors.len()];
        for (k, &n) in self.factors.iter().enumerate().rev() {
            out[k] = (i % n as usize) as u64;
            i /= n as usize;
        }
        out
    }

    pub fn index(&self, exps: &[u64]) -> usize {
        exps.iter()
            .zip(&self.factors)
            .zip(&self.strides)
            .map(|((&e, &n), &s)| (e % n) as usize * s)
            .sum()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// The canonical generators: unit exponent vectors.
    pub fn generators(&self) -> Vec<usize> {
        self.strides.clone()
    }

    pub fn op(&self, mut i: usize, mut j: usize) -> usize {
        if self.factors.len() == 1 {
            let n = self.order;
            let s = i + j;
            return if s >= n { s - n } else { s };
        }
        let mut out = 0usize;
        for (&n, &s) in self.factors.iter().zip(&self.strides).rev() {
            let n = n as usize;
            let d = (i % n + j % n) % n;
            out += d * s;
            i /= n;
            j /= n;
        }
        out
    }

    pub fn inv(&self, mut i: usize) -> usize {
        let mut out = 0usize;
        for (&n, &s) in self.factors.iter().zip(&self.strides).rev() {
            let n = n as usize;
            out += ((n - i % n) % n) * s;
            i /= n;
        }
        out
    }

    /// `k * x` in additive notation.
    pub fn scale(&self, i: usize, k: u64) -> usize {
        let e: Vec<u64> = self
            .exponents(i)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &n)| ((x as u128 * k as u128) % n as u128) as u64)
            .collect();
        self.index(&e)
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.exponents(i)
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &n)| lcm(acc, n / gcd(x, n)))
    }

    /// Exponent-vector notation, e.g. `(2,1)`.
    pub fn label(&self, i: usize) -> String {
        let e = self.exponents(i);
        format!(
            "({})",
            e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }

    /// `<v, g> = sum v_i g_i (exp/n_i) mod exp`, the exponent of
    /// `chi_v(g)` with respect to a fixed root of unity of order `exp(G)`.
    pub fn pairing(&self, v: usize, g: usize) -> u64 {
        let e = self.exponent();
        let (vv, gg) = (self.exponents(v), self.exponents(g));
        let mut s = 0u128;
        for k in 0..self.factors.len() {
            s += vv[k] as u128 * gg[k] as u128 * (e / self.factors[k]) as u128;
        }
        (s % e as u128) as u64
    }

    /// The Sylow `p`-subgroup.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let gens: Vec<usize> = self
            .factors
            .iter()
            .zip(&self.strides)
            .filter(|(&n, _)| n % p == 0)
            .map(|(_, &s)| s)
            .collect();
        self.subgroup_generated(&gens)
    }

    /// The whole group as a subgroup.
    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order).collect(),
            generators: self.generators(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    /// Closure of a generating list.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut mark = vec![false; self.order];
        mark[0] = true;
        let mut elements = vec![0usize];
        for &g in gens {
            let mut k = 0;
            while k < elements.len() {
                let mut y = self.op(elements[k], g);
                while !mark[y] {
                    mark[y] = true;
                    elements.push(y);
                    y = self.op(y, g);
                }
                k += 1;
            }
        }
        elements.sort_unstable();
        let generators = minimal_generators(self, &elements);
        Subgroup {
            elements,
            generators,
        }
    }

    /// Builds a subgroup from an element set, checking closure.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.first() != Some(&0) || els.iter().any(|&x| x >= self.order) {
            return Err(Error::InvalidGroup("not a subgroup".into()));
        }
        let set: HashSet<usize> = els.iter().copied().collect();
        for &x in &els {
            for &y in &els {
                if !set.contains(&self.op(x, y)) {
                    return Err(Error::InvalidGroup("subset is not closed".into()));
                }
            }
        }
        let generators = minimal_generators(self, &els);
        Ok(Subgroup {
            elements: els,
            generators,
        })
    }

    /// Order of `x H` in `G/H`, where `in_h` marks the elements of `H`.
    fn quotient_order(&self, x: usize, in_h: &[bool]) -> u64 {
        let mut y = x;
        let mut k = 1;
        while !in_h[y] {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    /// A generator of `G/H` when the quotient is cyclic.
    pub fn coset_generator(&self, h: &Subgroup) -> Option<usize> {
        let index = (self.order / h.order()) as u64;
        let in_h = h.membership(self.order);
        (0..self.order).find(|&x| self.quotient_order(x, &in_h) == index)
    }

    pub fn is_cocyclic(&self, h: &Subgroup) -> bool {
        h.order() < self.order && self.coset_generator(h).is_some()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Minimal generating list: repeatedly take the first element of largest
/// order modulo the span so far. An element of maximal order generates a
/// direct summand, so this yields as many generators as invariant factors.
fn minimal_generators(g: &AbelianGroup, elements: &[usize]) -> Vec<usize> {
    let mut in_h = vec![false; g.order()];
    in_h[0] = true;
    let mut span = vec![0usize];
    let mut gens = Vec::new();
    while span.len() < elements.len() {
        let mut best = (0u64, 0usize);
        for &x in elements {
            let o = g.quotient_order(x, &in_h);
            if o > best.0 {
                best = (o, x);
                if o as usize * span.len() == elements.len() {
                    break;
                }
            }
        }
        let x = best.1;
        gens.push(x);
        let mut k = 0;
        while k < span.len() {
            let mut y = g.op(span[k], x);
            while !in_h[y] {
                in_h[y] = true;
                span.push(y);
                y = g.op(y, x);
            }
            k += 1;
        }
    }
    gens
}

/// A subgroup, identified by its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn membership(&self, group_order: usize) -> Vec<bool> {
        let mut m = vec![false; group_order];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    /// `<g1,g2>` in exponent-vector notation; `{1}` for the trivial subgroup.
    pub fn render(&self, g: &AbelianGroup) -> String {
        if self.is_trivial() {
            return "{1}".into();
        }
        format!(
            "<{}>",
            self.generators
                .iter()
                .map(|&x| g.label(x))
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn sort_subgroups(list: &mut [Subgroup]) {
    list.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
}

fn check_group_budget(g: &AbelianGroup, budget: usize) -> Result<()> {
    if g.order() > budget {
        return Err(Error::BudgetExceeded {
            what: "subgroup enumeration",
            needed: g.order() as u128,
            budget: budget as u128,
        });
    }
    Ok(())
}

/// Every subgroup exactly once, sorted by (order, element list).
pub fn all_subgroups(g: &AbelianGroup) -> Result<Vec<Subgroup>> {
    all_subgroups_with_budget(g, GROUP_BUDGET)
}

pub fn all_subgroups_with_budget(g: &AbelianGroup, budget: usize) -> Result<Vec<Subgroup>> {
    check_group_budget(g, budget)?;
    let n = g.order();
    // Cyclic subgroups first.
    let mut cyclic: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for x in 0..n {
        let mut els = vec![0usize];
        let mut y = x;
        while y != 0 {
            els.push(y);
            y = g.op(y, x);
        }
        els.sort_unstable();
        if seen.insert(els.clone()) {
            cyclic.push(els);
        }
    }
    // Close under joins with cyclic subgroups.
    let mut all: Vec<Vec<usize>> = cyclic.clone();
    let mut frontier = cyclic.clone();
    let mut mark = vec![false; n];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                if c.iter().all(|x| s.binary_search(x).is_ok()) {
                    continue;
                }
                let mut join = Vec::with_capacity(s.len() * c.len());
                for &a in s {
                    for &b in c {
                        let y = g.op(a, b);
                        if !mark[y] {
                            mark[y] = true;
                            join.push(y);
                        }
                    }
                }
                for &y in &join {
                    mark[y] = false;
                }
                join.sort_unstable();
                if seen.insert(join.clone()) {
                    if seen.len() > SUBGROUP_COUNT_BUDGET {
                        return Err(Error::BudgetExceeded {
                            what: "subgroup count",
                            needed: seen.len() as u128,
                            budget: SUBGROUP_COUNT_BUDGET as u128,
                        });
                    }
                    all.push(join.clone());
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = all
        .into_iter()
        .map(|elements| {
            let generators = minimal_generators(g, &elements);
            Subgroup {
                elements,
                generators,
            }
        })
        .collect();
    sort_subgroups(&mut out);
    Ok(out)
}

/// Subgroups `H` with `G/H` cyclic and nontrivial.
pub fn cocyclic_subgroups(g: &AbelianGroup) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g)?
        .into_iter()
        .filter(|h| g.is_cocyclic(h))
        .collect())
}

/// For a `p`-group `G` and co-cyclic `H`, the unique `H#` containing `H`
/// with `|H#/H| = p`.
pub fn sharp(g: &AbelianGroup, h: &Subgroup) -> Result<Subgroup> {
    let p = g
        .p_group_prime()
        .ok_or_else(|| Error::Hypothesis(format!("{} is not a p-group", g.name())))?;
    let x = g
        .coset_generator(h)
        .filter(|_| h.order() < g.order())
        .ok_or(Error::NotCocyclic)?;
    let index = (g.order() / h.order()) as u64;
    let y = g.scale(x, index / p);
    let mut gens = h.generators().to_vec();
    gens.push(y);
    Ok(g.subgroup_generated(&gens))
}

/// An automorphism, stored by the images of the canonical generators and as
/// a full permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    images: Vec<usize>,
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn identity(g: &AbelianGroup) -> Automorphism {
        Automorphism {
            images: g.generators(),
            perm: (0..g.order()).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// `self after other`.
    pub fn compose(&self, other: &Automorphism, g: &AbelianGroup) -> Automorphism {
        let perm: Vec<usize> = other.perm.iter().map(|&x| self.perm[x]).collect();
        let images = g.generators().iter().map(|&x| perm[x]).collect();
        Automorphism { images, perm }
    }

    pub fn inverse(&self, g: &AbelianGroup) -> Automorphism {
        let mut perm = vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            perm[y] = x;
        }
        let images = g.generators().iter().map(|&x| perm[x]).collect();
        Automorphism { images, perm }
    }

    pub fn map_subgroup(&self, g: &AbelianGroup, h: &Subgroup) -> Subgroup {
        let mut els: Vec<usize> = h.elements().iter().map(|&x| self.perm[x]).collect();
        els.sort_unstable();
        let generators = h.generators().iter().map(|&x| self.perm[x]).collect();
        let _ = g;
        Subgroup {
            elements: els,
            generators,
        }
    }
}

pub fn automorphisms(g: &AbelianGroup) -> Result<Vec<Automorphism>> {
    automorphisms_with_budget(g, AUTOMORPHISM_BUDGET)
}

/// All automorphisms by brute force over generator images.
pub fn automorphisms_with_budget(g: &AbelianGroup, budget: u128) -> Result<Vec<Automorphism>> {
    check_group_budget(g, GROUP_BUDGET)?;
    let n = g.order();
    let candidates: Vec<Vec<usize>> = g
        .factors()
        .iter()
        .map(|&ni| (0..n).filter(|&x| ni % g.element_order(x) == 0).collect())
        .collect();
    let total = candidates
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded {
            what: "automorphism search",
            needed: total,
            budget,
        });
    }
    let k = candidates.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    let mut mark = vec![false; n];
    loop {
        let images: Vec<usize> = (0..k).map(|i| candidates[i][choice[i]]).collect();
        // phi(x) = sum x_i * images[i]; build via mixed-radix order so that
        // each element is the image predecessor plus one generator.
        let mut perm = vec![0usize; n];
        let mut ok = true;
        for x in 1..n {
            // The last coordinate varies fastest: x = (x - stride_last) + e_last
            // unless that digit is zero, then reuse the carry position.
            let e = g.exponents(x);
            let pos = (0..k).rev().find(|&i| e[i] != 0).unwrap();
            let prev = x - g.strides[pos];
            let y = g.op(perm[prev], images[pos]);
            perm[x] = y;
            if mark[y] || y == 0 {
                ok = false;
                break;
            }
            mark[y] = true;
        }
        for &y in &perm {
            mark[y] = false;
        }
        if ok {
            out.push(Automorphism { images, perm });
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
        }
        if k == 0 {
            return Ok(out);
        }
    }
}

/// A character table of `G` over a splitting field.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub zeta: FieldElement,
    /// `values[v][g] = chi_v(g)`.
    pub values: Vec<Vec<FieldElement>>,
}

/// The characters `chi_v(g) = zeta^<v,g>` for a fixed `zeta` of order `exp(G)`.
pub fn characters(g: &AbelianGroup, f: &Field) -> Result<CharacterTable> {
    let e = g.exponent();
    let zeta = f.primitive_root_of_unity(e)?;
    let powers: Vec<FieldElement> = (0..e).map(|k| f.pow(zeta, k)).collect();
    let n = g.order();
    let values = (0..n)
        .map(|v| (0..n).map(|x| powers[g.pairing(v, x) as usize]).collect())
        .collect();
    Ok(CharacterTable { zeta, values })
}

/// Orbits of `x -> q x` on the group, each sorted, ordered by least element.
pub fn power_orbits(g: &AbelianGroup, q: u64) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut y = x;
        while !seen[y] {
            seen[y] = true;
            orbit.push(y);
            y = g.scale(y, q);
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Partition of subgroups into orbits under `Aut(G)`.
pub fn subgroup_orbits(
    g: &AbelianGroup,
    subgroups: &[Subgroup],
    auts: &[Automorphism],
) -> Vec<Vec<usize>> {
    let pos: HashMap<&[usize], usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, h)| (h.elements(), i))
        .collect();
    let mut class = vec![usize::MAX; subgroups.len()];
    let mut out = Vec::new();
    for i in 0..subgroups.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = Vec::new();
        for a in auts {
            let img = a.map_subgroup(g, &subgroups[i]);
            if let Some(&j) = pos.get(img.elements()) {
                if class[j] == usize::MAX {
                    class[j] = id;
                    members.push(j);
                }
            }
        }
        if class[i] == usize::MAX {
            class[i] = id;
            members.push(i);
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
