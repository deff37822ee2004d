//! Dihedral groups `D_n = <a, b | a^n = b^2 = 1, bab = a^-1>` and their
//! group algebras.

use std::fmt;

use serde::Serialize;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::galg::AlgebraElement;
use crate::group::Group;
use crate::groups::GROUP_BUDGET;
use crate::numtheory::{euler_phi, factorize, gcd, order_mod, pow_mod};

/// `D_n` of order `2n`; `a^i b^j` has index `i + n j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DihedralGroup {
    n: u64,
}

impl DihedralGroup {
    pub fn new(n: u64) -> Result<DihedralGroup> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("D{n} needs n >= 2")));
        }
        if n > u32::MAX as u64 / 2 {
            return Err(Error::InvalidGroup("group order too large".into()));
        }
        Ok(DihedralGroup { n })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn order(&self) -> usize {
        2 * self.n as usize
    }

    /// Index of `a^i b^j`.
    pub fn element(&self, i: u64, j: u64) -> usize {
        ((i % self.n) + self.n * (j % 2)) as usize
    }

    /// `(i, j)` with the element equal to `a^i b^j`.
    pub fn parts(&self, x: usize) -> (u64, u64) {
        let x = x as u64;
        (x % self.n, x / self.n)
    }

    pub fn a(&self) -> usize {
        self.element(1, 0)
    }

    pub fn b(&self) -> usize {
        self.element(0, 1)
    }

    /// `a^i b^j * a^k b^l = a^{i + (-1)^j k} b^{j + l}`.
    pub fn op(&self, x: usize, y: usize) -> usize {
        let (i, j) = self.parts(x);
        let (k, l) = self.parts(y);
        let r = if j == 0 { i + k } else { i + self.n - k };
        self.element(r, j + l)
    }

    pub fn inv(&self, x: usize) -> usize {
        let (i, j) = self.parts(x);
        if j == 1 {
            x
        } else {
            self.element(self.n - i, 0)
        }
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let (i, j) = self.parts(x);
        if j == 1 {
            2
        } else {
            self.n / gcd(i, self.n)
        }
    }

    pub fn generators(&self) -> Vec<usize> {
        vec![self.a(), self.b()]
    }

    pub fn label(&self, x: usize) -> String {
        let (i, j) = self.parts(x);
        let a = match i {
            0 => String::new(),
            1 => "a".into(),
            _ => format!("a^{i}"),
        };
        let b = if j == 1 { "b" } else { "" };
        if a.is_empty() && b.is_empty() {
            "1".into()
        } else {
            format!("{a}{b}")
        }
    }
}

impl fmt::Display for DihedralGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.n)
    }
}

/// Conjugacy classes of a finite group, each sorted, ordered by least element.
pub fn conjugacy_classes(g: &Group) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > GROUP_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "conjugacy classes",
            needed: n as u128,
            budget: GROUP_BUDGET as u128,
        });
    }
    let mut class_of = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|h| g.op(g.op(h, x), g.inv(h))).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            class_of[y] = out.len();
        }
        out.push(class);
    }
    Ok(out)
}

/// Simple-component counts of `F_q G` and `Q G`, from orbits of conjugacy
/// classes under `x -> x^q` and under all `x -> x^r`, `r` coprime to `|G|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCounts {
    pub over_fq: usize,
    pub over_rationals: usize,
}

impl ComponentCounts {
    /// `F_q G` has as few components as `Q G`.
    pub fn minimal(&self) -> bool {
        self.over_fq == self.over_rationals
    }
}

pub fn simple_component_counts(g: &Group, q: u64) -> Result<ComponentCounts> {
    let n = g.order() as u64;
    if gcd(q, n) != 1 {
        return Err(Error::NotSemisimple {
            characteristic: q,
            order: n,
        });
    }
    let classes = conjugacy_classes(g)?;
    let mut class_of = vec![0usize; g.order()];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let units: Vec<u64> = (1..n.max(2)).filter(|&r| gcd(r, n) == 1).collect();
    let count = |exps: &[u64]| {
        let mut seen = vec![false; classes.len()];
        let mut orbits = 0;
        for start in 0..classes.len() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(c) = stack.pop() {
                let x = classes[c][0];
                for &r in exps {
                    let d = class_of[g.pow(x, r)];
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
        }
        orbits
    };
    Ok(ComponentCounts {
        over_fq: count(&[q % n.max(2)]),
        over_rationals: count(&units),
    })
}

/// The conditions on `(n, q)` under which `F_q D_n` has as many simple
/// components as `Q D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DihedralCondition {
    /// `n = 2` or `4`, `q` odd.
    I,
    /// `n = 2^m`, `m >= 3`, `q = 3` or `5 mod 8`.
    II,
    /// `n = p^m`, `q` generates `U(Z_{p^m})`.
    III,
    /// `n = p^m`, `q` generates the squares, `-1` not a square.
    IV,
    /// `n = 2p^m`, `q` generates `U(Z_{p^m})`.
    V,
    /// `n = 2p^m`, `q` generates the squares, `-1` not a square.
    VI,
    /// `n = 4p^m`, `4 | phi(p^m)`, `q` generates `U(Z_{p^m})`.
    VII,
    /// `n = 4p^m`, `4 !| phi(p^m)`, `q = 1 mod 4`, `q` generates `U(Z_{p^m})`.
    VIII,
    /// `n = 4p^m`, `4 !| phi(p^m)`, `q = 3 mod 4`, `o(q) = phi(p^m)/2`.
    IX,
    /// `n = p1^m1 p2^m2`, `gcd(phi, phi) = 2`, `<q, -1> = U(Z_n)`.
    X,
    /// `n = 2 p1^m1 p2^m2` with the same requirement on the odd part.
    XI,
}

/// Which condition, if any, `(n, q)` satisfies. Requires `gcd(q, 2n) = 1`.
pub fn dihedral_condition(n: u64, q: u64) -> Option<DihedralCondition> {
    use DihedralCondition::*;
    if n < 2 || gcd(q, 2 * n) != 1 {
        return None;
    }
    let two = n.trailing_zeros();
    let odd = n >> two;
    let odd_factors = factorize(odd);
    let ord = |m: u64| order_mod(q, m).unwrap_or(0);
    let generates = |pm: u64| ord(pm) == euler_phi(pm);
    let squares = |pm: u64, p: u64| ord(pm) * 2 == euler_phi(pm) && p % 4 == 3;
    match (two, odd_factors.as_slice()) {
        (1 | 2, []) => Some(I),
        (m, []) if m >= 3 && matches!(q % 8, 3 | 5) => Some(II),
        (0, [(p, k)]) => {
            let pm = p.pow(*k);
            if generates(pm) {
                Some(III)
            } else if squares(pm, *p) {
                Some(IV)
            } else {
                None
            }
        }
        (1, [(p, k)]) => {
            let pm = p.pow(*k);
            if generates(pm) {
                Some(V)
            } else if squares(pm, *p) {
                Some(VI)
            } else {
                None
            }
        }
        (2, [(p, k)]) => {
            let pm = p.pow(*k);
            let phi = euler_phi(pm);
            if phi.is_multiple_of(4) {
                generates(pm).then_some(VII)
            } else if q % 4 == 1 {
                generates(pm).then_some(VIII)
            } else {
                (ord(pm) * 2 == phi).then_some(IX)
            }
        }
        (0 | 1, [(p1, k1), (p2, k2)]) => {
            let (a, b) = (p1.pow(*k1), p2.pow(*k2));
            // The printed requirement "q or -q has order phi/2" is not
            // enough on its own (n = 21, q = 5 has -1 in <q>); what is
            // needed is <q, -1> = U(Z_n), i.e. o(q) = phi/2 and -1 not in <q>.
            let half = euler_phi(a * b) / 2;
            let minus_one_in_q = (1..=half).any(|k| pow_mod(q, k, odd) == odd - 1);
            let ok = gcd(euler_phi(a), euler_phi(b)) == 2 && ord(odd) == half && !minus_one_in_q;
            match (ok, two) {
                (true, 0) => Some(X),
                (true, _) => Some(XI),
                _ => None,
            }
        }
        _ => None,
    }
}

/// One prime-power part `p^m` of `n` and the chosen chain index `i`:
/// `i = 0` is `C_{p^m}^`, otherwise `C_{p^{m-i}}^ - C_{p^{m-i+1}}^`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Part {
    p: u64,
    m: u32,
    i: u32,
}

/// A central idempotent of `F_q D_n` from the product construction.
#[derive(Clone, Debug)]
pub struct DihedralIdempotent {
    pub label: String,
    pub element: AlgebraElement<Field>,
    /// `Some(true)` for the `b^` half, `Some(false)` for `1 - b^`, `None`
    /// when the rotation part is not split by `b`.
    pub b_part: Option<bool>,
    parts: Vec<Part>,
}

fn rotation_hat(d: &DihedralGroup, group: &Group, f: &Field, order: u64) -> Result<AlgebraElement<Field>> {
    let step = d.n() / order;
    let els: Vec<usize> = (0..order).map(|k| d.element(k * step, 0)).collect();
    AlgebraElement::hat(group, f, &els)
}

/// The central idempotents of `F_q D_n` built as products over the prime
/// parts of `n` of chain idempotents of `<a>`, with the factors on which
/// `a` acts by `+-1` split by `b^` and `1 - b^`. Requires one of the
/// minimality conditions on `(n, q)`.
pub fn dihedral_idempotents(n: u64, f: &Field) -> Result<Vec<DihedralIdempotent>> {
    let q = f.order();
    if dihedral_condition(n, q).is_none() {
        return Err(Error::Hypothesis(format!(
            "(n, q) = ({n}, {q}) meets none of the minimality conditions"
        )));
    }
    let d = DihedralGroup::new(n)?;
    let group = Group::dihedral(n)?;
    let one = AlgebraElement::one(&group, f);
    let bh = AlgebraElement::hat(&group, f, &[0, d.b()])?;
    let nb = &one - &bh;
    let factors: Vec<(u64, u32)> = factorize(n);
    let mut out = Vec::new();
    let mut choice = vec![0u32; factors.len()];
    loop {
        let parts: Vec<Part> = factors
            .iter()
            .zip(&choice)
            .map(|(&(p, m), &i)| Part { p, m, i })
            .collect();
        let mut e = one.clone();
        let mut names = Vec::new();
        for part in &parts {
            let pm = part.p.pow(part.m);
            let factor = if part.i == 0 {
                names.push(format!("C{pm}^"));
                rotation_hat(&d, &group, f, pm)?
            } else {
                let lo = part.p.pow(part.m - part.i);
                names.push(format!("(C{lo}^ - C{}^)", lo * part.p));
                &rotation_hat(&d, &group, f, lo)? - &rotation_hat(&d, &group, f, lo * part.p)?
            };
            e = &e * &factor;
        }
        let rotation = names.join(" ");
        // a acts by +-1 exactly when every odd part is trivial and the
        // 2-part index is at most 1.
        let real = parts.iter().all(|pt| pt.i == 0 || (pt.p == 2 && pt.i == 1));
        if real {
            out.push(DihedralIdempotent {
                label: format!("b^ {rotation}"),
                element: &bh * &e,
                b_part: Some(true),
                parts: parts.clone(),
            });
            out.push(DihedralIdempotent {
                label: format!("(1 - b^) {rotation}"),
                element: &nb * &e,
                b_part: Some(false),
                parts,
            });
        } else {
            out.push(DihedralIdempotent {
                label: rotation,
                element: e,
                b_part: None,
                parts,
            });
        }
        let Some(k) = (0..factors.len()).rev().find(|&k| choice[k] < factors[k].1) else {
            break;
        };
        choice[k] += 1;
        for c in choice[k + 1..].iter_mut() {
            *c = 0;
        }
    }
    Ok(out)
}

/// Computed code parameters of one dihedral idempotent next to the printed
/// table formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralRow {
    pub label: String,
    pub dimension: usize,
    pub min_weight: usize,
    pub expected_dimension: u64,
    pub expected_weight: u64,
    /// Set when the computed values disagree with the printed formula.
    pub finding: Option<String>,
}

/// Printed `(dimension, weight)` for a row. Stray indices in the printed
/// dimension column of the mixed rows are read as the row's own index.
fn printed_parameters(n: u64, item: &DihedralIdempotent) -> (u64, u64) {
    if item.b_part.is_some() {
        return (1, 2 * n);
    }
    // A single factor C_2 (n = 2 * odd with two odd primes) does not
    // contribute to the printed dimension.
    let lone_two = n % 4 == 2 && item.parts.len() == 3;
    let mut dim = 1;
    let mut weight = 1;
    let mut nontrivial = 0;
    for pt in &item.parts {
        weight *= pt.p.pow(pt.m - pt.i);
        if pt.i > 0 {
            nontrivial += 1;
            if !(lone_two && pt.p == 2) {
                dim *= 2 * euler_phi(pt.p.pow(pt.i));
            }
        }
    }
    (dim, weight << nontrivial.max(1))
}

pub fn dihedral_code_table(n: u64, f: &Field) -> Result<Vec<DihedralRow>> {
    dihedral_code_table_with_budget(n, f, crate::codes::ENUMERATION_BUDGET)
}

pub fn dihedral_code_table_with_budget(n: u64, f: &Field, budget: u128) -> Result<Vec<DihedralRow>> {
    dihedral_idempotents(n, f)?
        .iter()
        .map(|item| {
            let code = Code::from_idempotent(&item.element)?;
            let (expected_dimension, expected_weight) = printed_parameters(n, item);
            let dimension = code.dimension();
            let min_weight = code.minimum_weight_with_budget(budget)?;
            let mut notes = Vec::new();
            if dimension as u64 != expected_dimension {
                notes.push(format!("dimension {dimension}, table gives {expected_dimension}"));
            }
            if min_weight as u64 != expected_weight {
                notes.push(format!("weight {min_weight}, table gives {expected_weight}"));
            }
            Ok(DihedralRow {
                label: item.label.clone(),
                dimension,
                min_weight,
                expected_dimension,
                expected_weight,
                finding: (!notes.is_empty()).then(|| format!("suspected misprint: {}", notes.join("; "))),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn dn(n: u64) -> Group {
        Group::dihedral(n).unwrap()
    }

    #[test]
    fn relations() {
        for n in [2u64, 3, 4, 9, 12] {
            let d = DihedralGroup::new(n).unwrap();
            let (a, b) = (d.a(), d.b());
            let g = dn(n);
            assert_eq!(g.pow(a, n), 0);
            assert_eq!(g.op(b, b), 0);
            assert_eq!(g.op(g.op(b, a), b), g.inv(a));
            assert_eq!(g.order() as u64, 2 * n);
            for x in 0..g.order() {
                for y in 0..g.order() {
                    for z in [0, a, b, g.op(a, b)] {
                        assert_eq!(g.op(g.op(x, y), z), g.op(x, g.op(y, z)));
                    }
                }
            }
        }
        assert!(DihedralGroup::new(1).is_err());
    }

    /// Oracle: conjugacy classes by brute-force conjugation over all pairs.
    fn brute_classes(g: &Group) -> usize {
        let n = g.order();
        let mut reps: Vec<std::collections::BTreeSet<usize>> = Vec::new();
        for x in 0..n {
            let c: std::collections::BTreeSet<usize> = (0..n).map(|h| g.op(g.op(g.inv(h), x), h)).collect();
            if !reps.contains(&c) {
                reps.push(c);
            }
        }
        reps.len()
    }

    #[test]
    fn classes() {
        let c = conjugacy_classes(&dn(3)).unwrap();
        assert_eq!(c, vec![vec![0], vec![1, 2], vec![3, 4, 5]]);
        assert_eq!(conjugacy_classes(&dn(4)).unwrap().len(), 5);
        let ab = Group::parse("C4xC3").unwrap();
        assert!(conjugacy_classes(&ab).unwrap().iter().all(|c| c.len() == 1));
        for n in 2..15 {
            assert_eq!(conjugacy_classes(&dn(n)).unwrap().len(), brute_classes(&dn(n)));
        }
    }

    #[test]
    fn component_counts() {
        assert!(simple_component_counts(&dn(3), 5).unwrap().minimal());
        assert!(simple_component_counts(&dn(4), 3).unwrap().minimal());
        let c9 = Group::parse("C9").unwrap();
        let c = simple_component_counts(&c9, 7).unwrap();
        assert!(!c.minimal());
        assert_eq!(c.over_rationals, 3);
        assert!(simple_component_counts(&dn(3), 3).is_err());
    }

    #[test]
    fn conditions_match_census() {
        for n in 2..=60u64 {
            for q in [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43] {
                if gcd(q, 2 * n) != 1 {
                    continue;
                }
                let census = simple_component_counts(&dn(n), q).unwrap().minimal();
                assert_eq!(dihedral_condition(n, q).is_some(), census, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn emitted_systems() {
        for (n, q) in [(4, 3), (3, 5), (9, 5), (8, 3), (8, 5), (6, 5), (12, 5), (5, 3), (15, 2), (21, 5)] {
            let fq = f(q);
            let Ok(items) = dihedral_idempotents(n, &fq) else {
                assert!(dihedral_condition(n, q).is_none());
                continue;
            };
            let g = dn(n);
            let mut sum = AlgebraElement::zero(&g, &fq);
            let mut dims = 0;
            for (i, x) in items.iter().enumerate() {
                assert!(x.element.is_idempotent() && x.element.is_central(), "{n} {q} {}", x.label);
                for y in &items[i + 1..] {
                    assert!(x.element.is_orthogonal(&y.element));
                }
                sum = &sum + &x.element;
                dims += Code::from_idempotent(&x.element).unwrap().dimension();
            }
            assert_eq!(sum, AlgebraElement::one(&g, &fq));
            assert_eq!(dims as u64, 2 * n);
            assert_eq!(items.len(), simple_component_counts(&g, q).unwrap().over_fq);
        }
        assert!(dihedral_idempotents(7, &f(2)).is_err());
        assert!(dihedral_idempotents(7, &f(3)).is_ok());
        assert!(dihedral_idempotents(7, &f(5)).is_ok());
        assert!(dihedral_idempotents(7, &f(29)).is_err());
    }

    #[test]
    fn labels_small_cases() {
        let items = dihedral_idempotents(3, &f(5)).unwrap();
        let labels: Vec<&str> = items.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, vec!["b^ C3^", "(1 - b^) C3^", "(C1^ - C3^)"]);
        assert_eq!(dihedral_idempotents(4, &f(3)).unwrap().len(), 5);
    }

    #[test]
    fn code_tables() {
        let rows = dihedral_code_table(3, &f(5)).unwrap();
        assert_eq!((rows[2].dimension, rows[2].min_weight), (4, 2));
        assert_eq!((rows[0].dimension, rows[0].min_weight), (1, 6));
        assert!(rows.iter().all(|r| r.finding.is_none()));
        let rows = dihedral_code_table(4, &f(3)).unwrap();
        let r = rows.iter().find(|r| r.label == "b^ (C2^ - C4^)").unwrap();
        assert_eq!((r.dimension, r.min_weight), (1, 8));
        assert!(rows.iter().all(|r| r.finding.is_none()), "{rows:?}");
        let rows = dihedral_code_table(8, &f(3)).unwrap();
        assert!(rows.iter().all(|r| r.finding.is_none()), "{rows:?}");
    }
}
