//! `G`-equivalence of codes and `G`-isomorphism of subgroups, by explicit
//! action of `Aut(G)` on idempotents and subgroups.

use std::cmp::Reverse;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{Code, ENUMERATION_BUDGET};
use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::galg::AlgebraElement;
use crate::group::Group;
use crate::groups::{all_subgroups, automorphisms, cocyclic_subgroups, subgroup_orbits, AbelianGroup, Automorphism, Subgroup};
use crate::idem::{hat, primitive_idempotents, IdempotentSystem, PhiMap};
use crate::numtheory::{divisor_count, euler_phi, order_mod, prime_power};
use crate::ring::Ring;

/// The linear extension of a permutation of `G` to the group algebra. The
/// coefficient of `g` moves to `perm[g]`.
pub fn apply_permutation<R: Ring>(perm: &[usize], alpha: &AlgebraElement<R>) -> Result<AlgebraElement<R>> {
    let n = alpha.group().order();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&y| y >= n || std::mem::replace(&mut seen[y], true)) {
        return Err(Error::Invariant("map is not a bijection of the group".into()));
    }
    Ok(alpha.permute(perm))
}

pub fn apply_automorphism<R: Ring>(psi: &Automorphism, alpha: &AlgebraElement<R>) -> Result<AlgebraElement<R>> {
    apply_permutation(psi.permutation(), alpha)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceClass {
    /// Indices into the primitive system.
    pub members: Vec<usize>,
    /// Member with the lexicographically least coefficient vector.
    pub representative: usize,
    pub dimension: usize,
    pub min_weight: usize,
    pub weight_distribution: Vec<u128>,
    /// `Phi(e)` of each member, rendered.
    pub subgroups: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub group: AbelianGroup,
    pub field: Field,
    pub system: IdempotentSystem<Field>,
    /// Sorted by dimension, then decreasing weight.
    pub classes: Vec<EquivalenceClass>,
    /// `Aut(G)`-orbits on `S_cc(G) U {G}`.
    pub subgroup_classes: Vec<Vec<Subgroup>>,
    /// Observations that contradict an expected correspondence without
    /// violating an exact invariant.
    pub findings: Vec<String>,
}

impl EquivalenceReport {
    pub fn class_of(&self, member: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.members.contains(&member))
            .expect("classes partition the system")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.group.name(),
            "q": self.field.order(),
            "classes": self.classes.iter().map(|c| serde_json::json!({
                "members": c.members,
                "representative": self.system.members[c.representative].element.coeff_codes(),
                "dimension": c.dimension,
                "min_weight": c.min_weight,
                "weight_distribution": c.weight_distribution.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "subgroups": c.subgroups,
            })).collect::<Vec<_>>(),
            "subgroup_classes": self.subgroup_classes.iter()
                .map(|c| c.iter().map(|h| h.render(&self.group)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "findings": self.findings,
        })
    }
}

pub fn g_equivalence_classes(g: &AbelianGroup, f: &Field) -> Result<EquivalenceReport> {
    g_equivalence_classes_with_budget(g, f, ENUMERATION_BUDGET)
}

/// Orbits of the primitive system under `Aut(G)`, with per-class code data.
/// Errors if an automorphism maps a primitive idempotent outside the system,
/// if an orbit mixes code parameters, or if `Phi` fails to commute with the
/// action on some orbit edge.
pub fn g_equivalence_classes_with_budget(g: &AbelianGroup, f: &Field, budget: u128) -> Result<EquivalenceReport> {
    let system = primitive_idempotents(g, f)?;
    let auts = automorphisms(g)?;
    let phi = PhiMap::new(g, f)?;
    let index: HashMap<Vec<u64>, usize> = system
        .elements()
        .enumerate()
        .map(|(i, e)| (e.coeff_codes(), i))
        .collect();
    let images: Vec<Subgroup> = system.elements().map(|e| phi.apply(e)).collect::<Result<_>>()?;
    let edges: Vec<Vec<usize>> = system
        .members
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            auts.iter()
                .map(|psi| {
                    let img = apply_automorphism(psi, &m.element)?;
                    let j = *index
                        .get(&img.coeff_codes())
                        .ok_or_else(|| Error::Invariant("automorphism image is not a primitive idempotent".into()))?;
                    if psi.map_subgroup(g, &images[i]).elements() != images[j].elements() {
                        return Err(Error::Invariant("Phi does not commute with the automorphism".into()));
                    }
                    Ok(j)
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    let mut uf = UnionFind::new(system.len());
    for (i, js) in edges.iter().enumerate() {
        for &j in js {
            uf.union(i, j);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_pos: HashMap<usize, usize> = HashMap::new();
    for i in 0..system.len() {
        let r = uf.find(i);
        let pos = *root_pos.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[pos].push(i);
    }

    let params: Vec<(usize, Vec<u128>)> = system
        .elements()
        .map(|e| {
            let code = Code::from_idempotent(e)?;
            Ok((code.dimension(), code.weight_distribution_with_budget(budget)?))
        })
        .collect::<Result<_>>()?;
    let mut classes = Vec::new();
    for members in groups {
        let first = &params[members[0]];
        if members.iter().any(|&i| &params[i] != first) {
            return Err(Error::Invariant("an orbit mixes code parameters".into()));
        }
        let representative = *members
            .iter()
            .min_by_key(|&&i| system.members[i].element.coeff_codes())
            .unwrap();
        let min_weight = first.1.iter().skip(1).position(|&c| c > 0).map_or(0, |w| w + 1);
        classes.push(EquivalenceClass {
            subgroups: members.iter().map(|&i| images[i].render(g)).collect(),
            members,
            representative,
            dimension: first.0,
            min_weight,
            weight_distribution: first.1.clone(),
        });
    }
    classes.sort_by_key(|c| {
        (c.dimension, Reverse(c.min_weight), system.members[c.representative].element.coeff_codes())
    });

    let mut subs = cocyclic_subgroups(g)?;
    subs.push(g.whole());
    let subgroup_classes: Vec<Vec<Subgroup>> = subgroup_orbits(g, &subs, &auts)
        .into_iter()
        .map(|c| c.into_iter().map(|i| subs[i].clone()).collect())
        .collect();

    // Equal subgroup class of Phi-images should force code equivalence.
    let mut findings = Vec::new();
    let sub_class = |h: &Subgroup| subgroup_classes.iter().position(|c| c.contains(h));
    let code_class = |i: usize| classes.iter().position(|c| c.members.contains(&i));
    for i in 0..system.len() {
        for j in i + 1..system.len() {
            let same_sub = sub_class(&images[i]) == sub_class(&images[j]);
            if same_sub && code_class(i) != code_class(j) {
                findings.push(format!(
                    "members {i} and {j} have G-isomorphic Phi-images but are not G-equivalent"
                ));
            }
        }
    }
    let image_classes: std::collections::BTreeSet<Option<usize>> = images.iter().map(sub_class).collect();
    if classes.len() != image_classes.len() {
        findings.push(format!(
            "{} code classes against {} subgroup classes of Phi-images",
            classes.len(),
            image_classes.len()
        ));
    }
    Ok(EquivalenceReport {
        group: g.clone(),
        field: f.clone(),
        system,
        classes,
        subgroup_classes,
        findings,
    })
}

/// `Aut(G)`-orbits on all subgroups, each orbit sorted, orbits ordered by
/// their first member.
pub fn g_isomorphism_classes(g: &AbelianGroup) -> Result<Vec<Vec<Subgroup>>> {
    let subs = all_subgroups(g)?;
    let auts = automorphisms(g)?;
    Ok(subgroup_orbits(g, &subs, &auts)
        .into_iter()
        .map(|c| c.into_iter().map(|i| subs[i].clone()).collect())
        .collect())
}

/// Class count against `tau(exp G)`, and pairs of inequivalent classes with
/// equal weight distributions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauCensus {
    pub classes: usize,
    pub tau: u64,
    /// Class count equals `tau(exp G)`.
    pub count_matches_tau: bool,
    /// Class indices (into the report) of inequivalent classes with equal
    /// weight distributions.
    pub equal_distribution_pairs: Vec<(usize, usize)>,
}

pub fn tau_census(report: &EquivalenceReport) -> TauCensus {
    let tau = divisor_count(report.group.exponent());
    let mut pairs = Vec::new();
    for (i, a) in report.classes.iter().enumerate() {
        for (j, b) in report.classes.iter().enumerate().skip(i + 1) {
            if a.weight_distribution == b.weight_distribution {
                pairs.push((i, j));
            }
        }
    }
    TauCensus {
        classes: report.classes.len(),
        tau,
        count_matches_tau: report.classes.len() as u64 == tau,
        equal_distribution_pairs: pairs,
    }
}

/// One row of the predicted table for `(C_{p^r})^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomocyclicRow {
    /// 0 for `G^`, else the chain index `i`.
    pub index: u32,
    pub expected_dimension: u64,
    pub expected_weight: u64,
    pub dimension: usize,
    pub min_weight: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomocyclicReport {
    pub p: u64,
    pub r: u32,
    pub m: usize,
    pub classes: usize,
    pub rows: Vec<HomocyclicRow>,
    /// For each primitive `e != G^`: `(member, K, h, i)` with
    /// `e = K^ (<h^{p^i}>^ - <h^{p^{i-1}}>^)`.
    pub factorizations: Vec<(usize, String, String, u32)>,
}

/// Checks that every primitive idempotent of `F_q (C_{p^r})^m` other than
/// `G^` has the form `K^ (<h^{p^i}>^ - <h^{p^{i-1}}>^)` with
/// `K = (C_{p^r})^{m-1}` a complement of `<h>`, and tabulates parameters
/// against `dim = p^{i-1}(p-1)`, `d = 2 p^{r(m-1) + r - i}`.
pub fn homocyclic_idempotent_form(g: &AbelianGroup, f: &Field) -> Result<HomocyclicReport> {
    let (p, r) = prime_power(g.exponent())
        .filter(|_| g.factors().iter().all(|&n| n == g.exponent()))
        .ok_or_else(|| Error::Hypothesis(format!("{} is not homocyclic of prime-power exponent", g.name())))?;
    let m = g.rank();
    let pr = g.exponent();
    if order_mod(f.order(), pr)? != euler_phi(pr) {
        return Err(Error::Hypothesis(format!("o({} mod {pr}) != phi({pr})", f.order())));
    }
    let report = g_equivalence_classes(g, f)?;
    let group = Group::abelian(g.clone());
    let big = (pr as usize).pow(m as u32 - 1);
    let complements: Vec<Subgroup> = all_subgroups(g)?
        .into_iter()
        .filter(|k| {
            let socle = k.elements().iter().filter(|&&x| g.scale(x, p) == g.identity()).count();
            k.order() == big && socle == (p as usize).pow(m as u32 - 1)
        })
        .collect();
    let whole = hat(g, f, &g.whole())?;
    let mut factorizations = Vec::new();
    for (idx, e) in report.system.elements().enumerate() {
        if *e == whole {
            continue;
        }
        let mut found = None;
        'search: for k in complements.iter().filter(|k| {
            hat(g, f, k).map(|kh| &e.mul(&kh) == e).unwrap_or(false)
        }) {
            let kh = hat(g, f, k)?;
            for h in (0..g.order()).filter(|&h| g.element_order(h) == pr && !k.contains(g.scale(h, pr / p))) {
                for i in 1..=r {
                    let lo = g.subgroup_generated(&[g.scale(h, p.pow(i))]);
                    let hi = g.subgroup_generated(&[g.scale(h, p.pow(i - 1))]);
                    let cand = &kh * &(&AlgebraElement::hat(&group, f, lo.elements())? - &AlgebraElement::hat(&group, f, hi.elements())?);
                    if cand == *e {
                        found = Some((idx, k.render(g), g.label(h), i));
                        break 'search;
                    }
                }
            }
        }
        factorizations.push(found.ok_or_else(|| {
            Error::Invariant(format!("member {idx} has no factorization K^ e_h"))
        })?);
    }
    let mut rows = Vec::new();
    for c in &report.classes {
        let e = &report.system.members[c.representative].element;
        let index = if *e == whole {
            0
        } else {
            factorizations.iter().find(|t| t.0 == c.representative).map(|t| t.3).unwrap()
        };
        let (expected_dimension, expected_weight) = if index == 0 {
            (1, g.order() as u64)
        } else {
            (
                p.pow(index - 1) * (p - 1),
                2 * p.pow(r * (m as u32 - 1) + r - index),
            )
        };
        rows.push(HomocyclicRow {
            index,
            expected_dimension,
            expected_weight,
            dimension: c.dimension,
            min_weight: c.min_weight,
        });
    }
    rows.sort_by_key(|r| r.index);
    Ok(HomocyclicReport {
        p,
        r,
        m,
        classes: report.classes.len(),
        rows,
        factorizations,
    })
}

/// Representatives of the `G`-isomorphism classes of `S_cc(G) U {G}` for
/// `G = C_{p^n} x C_p`: `G`, `<a>`, `<a^{p^j}> x <b>` for `1 <= j < n`,
/// `<a^{p^j} b>` for `1 <= j <= n - 2`, and `<b>`.
pub fn cpn_cp_subgroup_representatives(g: &AbelianGroup) -> Result<Vec<Subgroup>> {
    let (p, n) = match g.factors() {
        [big, small] => prime_power(*big)
            .filter(|&(p, n)| n >= 2 && *small == p)
            .ok_or_else(|| Error::Hypothesis(format!("{} is not C(p^n) x C(p)", g.name())))?,
        _ => return Err(Error::Hypothesis(format!("{} is not C(p^n) x C(p)", g.name()))),
    };
    let a = g.index(&[1, 0]);
    let b = g.index(&[0, 1]);
    let ap = |j: u32| g.scale(a, p.pow(j));
    let mut reps = vec![g.whole(), g.subgroup_generated(&[a])];
    for j in 1..n {
        reps.push(g.subgroup_generated(&[ap(j), b]));
        if j + 2 <= n {
            reps.push(g.subgroup_generated(&[g.op(ap(j), b)]));
        }
    }
    reps.push(g.subgroup_generated(&[b]));
    Ok(reps)
}
