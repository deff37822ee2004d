//! Cyclic codes over the chain rings `Z_{p^k}`.
//!
//! Ideals of `R C_n` with `gcd(p, n) = 1` are direct sums `⊕ <p^{k_i} e_i>`
//! where `e_i` runs over the lifts of the primitive idempotents of `F_p C_n`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::codes::Code;
use crate::groups::AbelianGroup;
use crate::idem::{primitive_idempotents, Idempotent, IdempotentSystem};
use crate::numtheory::gcd;
use crate::{AlgebraElement, Error, Field, Group, Result, Ring, ZMod};

/// Chain rings handled here are the residue rings `Z_{p^k}`.
pub type ChainRing = ZMod;

/// Default cap on brute-force enumerations of ideal elements.
pub const ENUMERATION_BUDGET: u128 = 1 << 20;

/// Generators `p^j` of the ideal chain `R ⊃ <p> ⊃ ... ⊃ <p^k> = 0`.
pub fn ideal_chain(r: &ChainRing) -> Vec<u64> {
    (0..=r.nilpotency())
        .map(|j| r.prime().pow(j) % r.modulus())
        .collect()
}

/// Size of the ideal `<p^j>` of `Z_{p^k}`.
pub fn ideal_size(r: &ChainRing, j: u32) -> u64 {
    r.prime().pow(r.nilpotency() - j.min(r.nilpotency()))
}

pub fn residue_field(r: &ChainRing) -> Field {
    Field::prime(r.prime()).expect("chain ring prime is prime")
}

/// Iterations of `e -> 3e^2 - 2e^3` that take an idempotent mod `p` to one mod `p^k`.
pub fn hensel_iterations(k: u32) -> u32 {
    if k <= 1 {
        0
    } else {
        (32 - (k - 1).leading_zeros()) + 1
    }
}

/// Lifts an idempotent system over `F_p` to one over `Z_{p^k}`.
pub fn lift_idempotents(
    system: &IdempotentSystem<Field>,
    r: &ChainRing,
) -> Result<IdempotentSystem<ZMod>> {
    let f = &system.ring;
    if !f.is_prime_field() || f.characteristic() != r.prime() {
        return Err(Error::Hypothesis(format!(
            "source field F_{} is not the residue field of {}",
            f.order(),
            r.name()
        )));
    }
    let n = system.group.order() as u64;
    if gcd(n, r.prime()) != 1 {
        return Err(Error::NotSemisimple {
            characteristic: r.prime(),
            order: n,
        });
    }
    let rounds = hensel_iterations(r.nilpotency());
    let three = AlgebraElement::scalar(&system.group, r, 3);
    let two = AlgebraElement::scalar(&system.group, r, 2);
    let mut members = Vec::with_capacity(system.len());
    for m in &system.members {
        let coeffs = m.element.coeffs().iter().map(|c| c.value()).collect();
        let mut e = AlgebraElement::from_coeffs(&system.group, r, coeffs)?;
        for _ in 0..rounds {
            let e2 = &e * &e;
            let e3 = &e2 * &e;
            e = &(&three * &e2) - &(&two * &e3);
        }
        if !e.is_idempotent() {
            return Err(Error::Invariant(format!("lift of {} is not idempotent", m.label)));
        }
        if reduce(&e) != m.element.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>() {
            return Err(Error::Invariant(format!("lift of {} does not reduce to it", m.label)));
        }
        members.push(Idempotent {
            label: m.label.clone(),
            element: e,
        });
    }
    let lifted = IdempotentSystem {
        group: system.group.clone(),
        ring: r.clone(),
        members,
        primitive: system.primitive,
    };
    lifted.verify()?;
    Ok(lifted)
}

fn reduce(e: &AlgebraElement<ZMod>) -> Vec<u64> {
    e.coeffs().iter().map(|&c| e.ring().reduce(c)).collect()
}

/// An ideal `⊕ <p^{k_i} e_i>` of `R C_n`, one exponent per primitive idempotent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingCode {
    pub exponents: Vec<u32>,
}

impl RingCode {
    pub fn is_zero(&self, t: u32) -> bool {
        self.exponents.iter().all(|&k| k == t)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.exponents.iter().map(|k| k.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// The group ring `Z_{p^k} C_n` with its lifted primitive idempotents.
#[derive(Clone, Debug)]
pub struct CyclicRingAlgebra {
    pub ring: ChainRing,
    pub n: u64,
    pub residue: IdempotentSystem<Field>,
    pub lifted: IdempotentSystem<ZMod>,
    /// `F_p`-dimension of each component.
    pub weights: Vec<usize>,
    /// `involution[r] = s` when `e_r* = e_s`.
    pub involution: Vec<usize>,
}

impl CyclicRingAlgebra {
    pub fn new(r: &ChainRing, n: u64) -> Result<CyclicRingAlgebra> {
        let g = AbelianGroup::cyclic(n)?;
        let residue = primitive_idempotents(&g, &residue_field(r))?;
        let lifted = lift_idempotents(&residue, r)?;
        let weights = residue
            .elements()
            .map(|e| Code::from_idempotent(e).map(|c| c.dimension()))
            .collect::<Result<Vec<_>>>()?;
        let involution = lifted
            .elements()
            .map(|e| {
                lifted.position(&e.involution()).ok_or_else(|| {
                    Error::Invariant("involution does not permute the idempotents".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicRingAlgebra {
            ring: r.clone(),
            n,
            residue,
            lifted,
            weights,
            involution,
        })
    }

    pub fn group(&self) -> &Group {
        &self.lifted.group
    }

    pub fn nilpotency(&self) -> u32 {
        self.ring.nilpotency()
    }

    /// Number of primitive idempotents (`m + 1`).
    pub fn components(&self) -> usize {
        self.lifted.len()
    }

    pub fn code(&self, exponents: Vec<u32>) -> Result<RingCode> {
        if exponents.len() != self.components() {
            return Err(Error::Hypothesis(format!(
                "{} exponents for {} components",
                exponents.len(),
                self.components()
            )));
        }
        if let Some(k) = exponents.iter().find(|&&k| k > self.nilpotency()) {
            return Err(Error::Hypothesis(format!(
                "exponent {k} exceeds nilpotency index {}",
                self.nilpotency()
            )));
        }
        Ok(RingCode { exponents })
    }

    pub fn whole(&self) -> RingCode {
        RingCode {
            exponents: vec![0; self.components()],
        }
    }

    pub fn zero_code(&self) -> RingCode {
        RingCode {
            exponents: vec![self.nilpotency(); self.components()],
        }
    }

    /// `(t + 1)^{m + 1}`.
    pub fn code_count(&self) -> BigUint {
        BigUint::from(self.nilpotency() + 1).pow(self.components() as u32)
    }

    pub fn enumerate_codes(&self) -> Result<Vec<RingCode>> {
        self.enumerate_codes_with_budget(ENUMERATION_BUDGET)
    }

    /// Every exponent tuple, in lexicographic order.
    pub fn enumerate_codes_with_budget(&self, budget: u128) -> Result<Vec<RingCode>> {
        let base = self.nilpotency() as u128 + 1;
        let count = base
            .checked_pow(self.components() as u32)
            .filter(|&c| c <= budget)
            .ok_or(Error::BudgetExceeded {
                what: "ring code census",
                needed: base.saturating_pow(self.components() as u32),
                budget,
            })?;
        let m = self.components();
        let codes: Vec<RingCode> = (0..count)
            .into_par_iter()
            .map(|mut i| {
                let mut exponents = vec![0u32; m];
                for slot in exponents.iter_mut().rev() {
                    *slot = (i % base) as u32;
                    i /= base;
                }
                RingCode { exponents }
            })
            .collect();
        Ok(codes)
    }

    /// `|F_p|^{Σ (t - k_s) w_s}`.
    pub fn codeword_count(&self, c: &RingCode) -> BigUint {
        let t = self.nilpotency();
        let e: usize = c
            .exponents
            .iter()
            .zip(&self.weights)
            .map(|(&k, &w)| (t - k) as usize * w)
            .sum();
        BigUint::from(self.ring.prime()).pow(e as u32)
    }

    /// The generators `p^{k_i} e_i` of the nonzero summands.
    pub fn generators(&self, c: &RingCode) -> Vec<AlgebraElement<ZMod>> {
        let t = self.nilpotency();
        c.exponents
            .iter()
            .zip(self.lifted.elements())
            .filter(|(&k, _)| k < t)
            .map(|(&k, e)| e.scale(self.ring.prime().pow(k) % self.ring.modulus()))
            .collect()
    }

    /// `⊕ <p^{t - k_r} e_r*>`, with the exponent of `e_r` moved to slot `involution[r]`.
    pub fn dual_code(&self, c: &RingCode) -> RingCode {
        let t = self.nilpotency();
        let mut exponents = vec![t; self.components()];
        for (r, &k) in c.exponents.iter().enumerate() {
            exponents[self.involution[r]] = t - k;
        }
        RingCode { exponents }
    }

    pub fn is_self_dual(&self, c: &RingCode) -> bool {
        self.dual_code(c) == *c
    }

    /// The codes `<p^{t-1} e_i>`.
    pub fn minimal_codes(&self) -> Vec<RingCode> {
        let t = self.nilpotency();
        (0..self.components())
            .map(|i| {
                let mut exponents = vec![t; self.components()];
                exponents[i] = t - 1;
                RingCode { exponents }
            })
            .collect()
    }

    /// All elements of the code, by closing its generators' translates under addition.
    pub fn codewords(&self, c: &RingCode, budget: u128) -> Result<HashSet<Vec<u64>>> {
        let needed = self.codeword_count(c);
        if needed > BigUint::from(budget) {
            return Err(Error::BudgetExceeded {
                what: "ring code elements",
                needed: u128::try_from(&needed).unwrap_or(u128::MAX),
                budget,
            });
        }
        let spanning: Vec<Vec<u64>> = self
            .generators(c)
            .iter()
            .flat_map(|x| self.translates(x.coeffs()))
            .collect();
        Ok(self.additive_closure(&spanning))
    }

    /// The Euclidean annihilator of the code, by scanning all of `R^n`.
    pub fn annihilator(&self, c: &RingCode, budget: u128) -> Result<HashSet<Vec<u64>>> {
        let total = (self.ring.modulus() as u128)
            .checked_pow(self.n as u32)
            .filter(|&s| s <= budget)
            .ok_or(Error::BudgetExceeded {
                what: "annihilator scan",
                needed: (self.ring.modulus() as u128).saturating_pow(self.n as u32),
                budget,
            })?;
        let spanning: Vec<Vec<u64>> = self
            .generators(c)
            .iter()
            .flat_map(|x| self.translates(x.coeffs()))
            .collect();
        let q = self.ring.modulus();
        let n = self.n as usize;
        Ok((0..total)
            .into_par_iter()
            .map(|i| decode(i, q, n))
            .filter(|x| {
                spanning.iter().all(|y| {
                    x.iter()
                        .zip(y)
                        .fold(0u64, |acc, (&a, &b)| self.ring.add(acc, self.ring.mul(a, b)))
                        == 0
                })
            })
            .collect())
    }

    /// Whether every nonzero codeword generates the whole code.
    pub fn is_minimal(&self, c: &RingCode, budget: u128) -> Result<bool> {
        let words = self.codewords(c, budget)?;
        if words.len() == 1 {
            return Ok(false);
        }
        Ok(words
            .iter()
            .filter(|w| w.iter().any(|&x| x != 0))
            .all(|w| self.additive_closure(&self.translates(w)).len() == words.len()))
    }

    /// Every ideal of `R C_n`, as sorted element sets: principal ideals closed under sums.
    pub fn all_ideals(&self, budget: u128) -> Result<Vec<BTreeSet<Vec<u64>>>> {
        let q = self.ring.modulus();
        let n = self.n as usize;
        let total = (q as u128)
            .checked_pow(n as u32)
            .filter(|&s| s <= budget)
            .ok_or(Error::BudgetExceeded {
                what: "ideal lattice",
                needed: (q as u128).saturating_pow(n as u32),
                budget,
            })?;
        let mut ideals: BTreeSet<BTreeSet<Vec<u64>>> = (0..total)
            .map(|i| {
                let x = decode(i, q, n);
                self.additive_closure(&self.translates(&x)).into_iter().collect()
            })
            .collect();
        loop {
            let list: Vec<_> = ideals.iter().cloned().collect();
            let mut grew = false;
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    let gens: Vec<Vec<u64>> = list[i].iter().chain(&list[j]).cloned().collect();
                    let sum: BTreeSet<Vec<u64>> = self.additive_closure(&gens).into_iter().collect();
                    grew |= ideals.insert(sum);
                }
            }
            if !grew {
                return Ok(ideals.into_iter().collect());
            }
        }
    }

    fn translates(&self, x: &[u64]) -> Vec<Vec<u64>> {
        let n = self.n as usize;
        (0..n)
            .map(|s| {
                let mut y = vec![0; n];
                for (g, &c) in x.iter().enumerate() {
                    y[(g + s) % n] = c;
                }
                y
            })
            .collect()
    }

    fn additive_closure(&self, spanning: &[Vec<u64>]) -> HashSet<Vec<u64>> {
        let zero = vec![0u64; self.n as usize];
        let mut seen = HashSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for s in spanning {
                let y: Vec<u64> = x.iter().zip(s).map(|(&a, &b)| self.ring.add(a, b)).collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    pub fn to_json(&self, codes: &[RingCode]) -> Value {
        json!({
            "ring": self.ring.name(),
            "group": format!("C{}", self.n),
            "nilpotency": self.nilpotency(),
            "components": self.components(),
            "weights": self.weights,
            "involution": self.involution,
            "idempotents": self.lifted.to_json(),
            "code_count": self.code_count().to_string(),
            "codes": codes.iter().map(|c| {
                let d = self.dual_code(c);
                json!({
                    "exponents": c.exponents,
                    "codewords": self.codeword_count(c).to_string(),
                    "dual": d.exponents,
                    "dual_codewords": self.codeword_count(&d).to_string(),
                    "self_dual": d == *c,
                })
            }).collect::<Vec<_>>(),
        })
    }
}

fn decode(mut i: u128, q: u64, n: usize) -> Vec<u64> {
    let mut x = vec![0u64; n];
    for slot in x.iter_mut() {
        *slot = (i % q as u128) as u64;
        i /= q as u128;
    }
    x
}
