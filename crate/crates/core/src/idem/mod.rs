//! Idempotents of group algebras: the subgroup idempotents `e_H`, complete
//! primitive systems, and explicit constructions for special families.

mod constructions;
mod primitive;

use std::fmt;

use serde_json::{json, Value};

pub use constructions::{
    cyclic_chain_idempotents, e1e2, order_2pn_idempotents, mod8_cyclic_2m_idempotents,
    three_prime_hypotheses, three_prime_idempotents, two_prime_hypotheses,
    two_prime_idempotents, uv_elements,
};
pub use primitive::{
    essential_idempotents, is_primitive, primitive_idempotents,
    primitive_idempotents_by_characters, primitive_idempotents_rational,
    primitivity_conditions, PhiMap, PrimitivityReport,
};

use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::galg::AlgebraElement;
use crate::group::Group;
use crate::groups::{cocyclic_subgroups, power_orbits, AbelianGroup, Subgroup};
use crate::numtheory::gcd;
use crate::ring::Ring;

/// Where an idempotent came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    /// The averaged sum of the whole group.
    Whole,
    /// `e_H` for a co-cyclic subgroup, rendered by its generators.
    Cocyclic(String),
    /// Sum over an orbit of characters under `chi -> chi^q`.
    CharacterOrbit { representative: usize, size: usize },
    /// Found by splitting the Frobenius-fixed subalgebra.
    Rational(usize),
    /// A named member of an explicit construction.
    Named(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Whole => write!(f, "G^"),
            Label::Cocyclic(h) => write!(f, "e_H, H={h}"),
            Label::CharacterOrbit {
                representative,
                size,
            } => write!(f, "orbit of chi_{representative} (size {size})"),
            Label::Rational(i) => write!(f, "rational component {i}"),
            Label::Named(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent<R: Ring> {
    pub label: Label,
    pub element: AlgebraElement<R>,
}

/// A list of idempotents meant to be pairwise orthogonal and sum to 1.
#[derive(Clone, Debug)]
pub struct IdempotentSystem<R: Ring> {
    pub group: Group,
    pub ring: R,
    pub members: Vec<Idempotent<R>>,
    /// Whether the construction claims every member is primitive.
    pub primitive: bool,
}

impl<R: Ring> IdempotentSystem<R> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &AlgebraElement<R>> {
        self.members.iter().map(|m| &m.element)
    }

    pub fn sum(&self) -> AlgebraElement<R> {
        self.elements()
            .fold(AlgebraElement::zero(&self.group, &self.ring), |acc, e| &acc + e)
    }

    /// Checks: every member a nonzero idempotent, pairwise orthogonal, and
    /// the members sum to 1.
    pub fn verify(&self) -> Result<()> {
        for (i, m) in self.members.iter().enumerate() {
            if m.element.is_zero() {
                return Err(Error::Invariant(format!("member {i} ({}) is zero", m.label)));
            }
            if !m.element.is_idempotent() {
                return Err(Error::Invariant(format!(
                    "member {i} ({}) is not idempotent",
                    m.label
                )));
            }
        }
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if !self.members[i].element.is_orthogonal(&self.members[j].element) {
                    return Err(Error::Invariant(format!(
                        "members {i} ({}) and {j} ({}) are not orthogonal",
                        self.members[i].label, self.members[j].label
                    )));
                }
            }
        }
        if self.sum() != AlgebraElement::one(&self.group, &self.ring) {
            return Err(Error::Invariant("members do not sum to 1".into()));
        }
        Ok(())
    }

    /// Position of a member equal to `e`.
    pub fn position(&self, e: &AlgebraElement<R>) -> Option<usize> {
        self.members.iter().position(|m| &m.element == e)
    }

    /// Same members regardless of order.
    pub fn same_members(&self, other: &IdempotentSystem<R>) -> bool {
        self.len() == other.len() && other.elements().all(|e| self.position(e).is_some())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.name(),
            "primitive": self.primitive,
            "members": self.members.iter().map(|m| json!({
                "label": m.label.to_string(),
                "coefficients": m.element.coeff_codes(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn check_semisimple(order: usize, f: &Field) -> Result<()> {
    if gcd(f.characteristic(), order as u64) != 1 {
        return Err(Error::NotSemisimple {
            characteristic: f.characteristic(),
            order: order as u64,
        });
    }
    Ok(())
}

/// `H^` for a subgroup of an abelian group.
pub fn hat(g: &AbelianGroup, f: &Field, h: &Subgroup) -> Result<AlgebraElement<Field>> {
    AlgebraElement::hat(&Group::abelian(g.clone()), f, h.elements())
}

pub(crate) fn hat_in(group: &Group, f: &Field, h: &Subgroup) -> Result<AlgebraElement<Field>> {
    AlgebraElement::hat(group, f, h.elements())
}

/// The unique `H#` with `H < H# <= ambient` and `|H#/H| = p`, where
/// `ambient / H` is a cyclic `p`-group.
pub(crate) fn sharp_within(g: &AbelianGroup, ambient: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    let index = ambient.order() / h.order();
    let p = crate::numtheory::prime_power(index as u64)
        .map(|(p, _)| p)
        .ok_or(Error::NotCocyclic)?;
    let in_h = h.membership(g.order());
    let x = ambient
        .elements()
        .iter()
        .copied()
        .find(|&x| {
            let mut y = x;
            let mut k = 1;
            while !in_h[y] {
                y = g.op(y, x);
                k += 1;
            }
            k == index
        })
        .ok_or(Error::NotCocyclic)?;
    let y = g.scale(x, index as u64 / p);
    let mut gens = h.generators().to_vec();
    gens.push(y);
    Ok(g.subgroup_generated(&gens))
}

/// `e_H`: for `p`-groups `H^ - H#^`; in general the product over Sylow
/// components, taking `G_p^` where `H_p = G_p`.
pub fn e_h(g: &AbelianGroup, f: &Field, h: &Subgroup) -> Result<AlgebraElement<Field>> {
    check_semisimple(g.order(), f)?;
    if !g.is_cocyclic(h) {
        return Err(Error::NotCocyclic);
    }
    let group = Group::abelian(g.clone());
    let mut acc = AlgebraElement::one(&group, f);
    for p in g.primes() {
        let gp = g.sylow(p);
        let hp_elements: Vec<usize> = h.elements().iter().copied().filter(|&x| gp.contains(x)).collect();
        let factor = if hp_elements.len() == gp.order() {
            hat_in(&group, f, &gp)?
        } else {
            let hp = g.subgroup_from_elements(&hp_elements)?;
            let s = sharp_within(g, &gp, &hp)?;
            &hat_in(&group, f, &hp)? - &hat_in(&group, f, &s)?
        };
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// `{G^} U {e_H : H co-cyclic}`. Flagged primitive when its size equals the
/// number of simple components.
pub fn idempotent_system(g: &AbelianGroup, f: &Field) -> Result<IdempotentSystem<Field>> {
    check_semisimple(g.order(), f)?;
    let group = Group::abelian(g.clone());
    let mut members = vec![Idempotent {
        label: Label::Whole,
        element: hat_in(&group, f, &g.whole())?,
    }];
    for h in cocyclic_subgroups(g)? {
        members.push(Idempotent {
            label: Label::Cocyclic(h.render(g)),
            element: e_h(g, f, &h)?,
        });
    }
    let components = power_orbits(g, f.order()).len();
    Ok(IdempotentSystem {
        primitive: members.len() == components,
        group,
        ring: f.clone(),
        members,
    })
}
