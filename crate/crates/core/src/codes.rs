//! Ideals of `F_q G` viewed as linear codes of length `|G|`.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use crate::galg::AlgebraElement;
use crate::group::Group;
use crate::groups::AbelianGroup;
use crate::idem::{cyclic_chain_idempotents, e_h};
use crate::linalg::{in_row_space, rank, rref};
use crate::numtheory::order_mod;

/// Default cap on `q^dim` for exhaustive codeword enumeration.
pub const ENUMERATION_BUDGET: u128 = 1 << 24;

/// The ideal `F_q G * generator`, stored as a row-reduced basis.
#[derive(Clone, Debug)]
pub struct Code {
    generator: AlgebraElement<Field>,
    basis: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Code {
    /// The left ideal spanned by `{g * e : g in G}`. For central `e` (always
    /// the case when `G` is abelian) this is the two-sided ideal.
    pub fn from_idempotent(e: &AlgebraElement<Field>) -> Result<Code> {
        let n = e.group().order();
        let rows: Vec<Vec<FieldElement>> = (0..n).map(|g| e.translate(g).into_coeffs()).collect();
        let (basis, pivots) = rref(e.ring(), &rows)?;
        Ok(Code {
            generator: e.clone(),
            basis,
            pivots,
        })
    }

    pub fn generator(&self) -> &AlgebraElement<Field> {
        &self.generator
    }

    pub fn group(&self) -> &Group {
        self.generator.group()
    }

    pub fn field(&self) -> &Field {
        self.generator.ring()
    }

    pub fn length(&self) -> usize {
        self.group().order()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// A zero generator gives the zero code; legal, but usually a mistake.
    pub fn is_zero_code(&self) -> bool {
        self.basis.is_empty()
    }

    /// Row-reduced basis as algebra elements.
    pub fn basis(&self) -> Vec<AlgebraElement<Field>> {
        self.basis
            .iter()
            .map(|r| AlgebraElement::from_coeffs(self.group(), self.field(), r.clone()).expect("row length"))
            .collect()
    }

    pub fn contains(&self, v: &AlgebraElement<Field>) -> bool {
        v.coeffs().len() == self.length() && in_row_space(self.field(), &self.basis, &self.pivots, v.coeffs())
    }

    /// Equality as subspaces.
    pub fn same_ideal(&self, other: &Code) -> bool {
        self.dimension() == other.dimension() && other.basis().iter().all(|v| self.contains(v))
    }

    pub fn minimum_weight(&self) -> Result<usize> {
        self.minimum_weight_with_budget(ENUMERATION_BUDGET)
    }

    /// Exact minimum weight of a nonzero codeword. The zero code reports 0.
    pub fn minimum_weight_with_budget(&self, budget: u128) -> Result<usize> {
        Ok(self.scan(budget, false)?.0)
    }

    pub fn weight_distribution(&self) -> Result<Vec<u128>> {
        self.weight_distribution_with_budget(ENUMERATION_BUDGET)
    }

    /// `counts[w]` = number of codewords of weight `w`, trailing zeros trimmed.
    pub fn weight_distribution_with_budget(&self, budget: u128) -> Result<Vec<u128>> {
        let mut counts = self.scan(budget, true)?.1.expect("requested distribution");
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(counts)
    }

    /// All nonzero codewords share one weight. Vacuously true for the zero code.
    pub fn is_constant_weight(&self) -> Result<bool> {
        let d = self.weight_distribution()?;
        Ok(d.iter().skip(1).filter(|&&c| c > 0).count() <= 1)
    }

    /// Whether `basis` is a basis of this code made of vectors of equal
    /// weight. Errors if it does not span the code.
    pub fn visible_basis_check(&self, basis: &[AlgebraElement<Field>]) -> Result<bool> {
        let rows: Vec<Vec<FieldElement>> = basis.iter().map(|b| b.coeffs().to_vec()).collect();
        if rank(self.field(), &rows)? != self.dimension() || !basis.iter().all(|b| self.contains(b)) {
            return Err(Error::Invariant("basis does not span the code".into()));
        }
        Ok(basis.windows(2).all(|w| w[0].weight() == w[1].weight()))
    }

    fn check_budget(&self, budget: u128) -> Result<()> {
        let needed = (self.field().order() as u128)
            .checked_pow(self.dimension() as u32)
            .unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded {
                what: "codewords",
                needed,
                budget,
            });
        }
        Ok(())
    }

    /// Enumerates one representative of each line `F_q^* v`: vectors whose
    /// first nonzero message digit is 1. Work is split by the leading
    /// position and a short prefix of the following digits.
    fn scan(&self, budget: u128, distribution: bool) -> Result<(usize, Option<Vec<u128>>)> {
        self.check_budget(budget)?;
        let n = self.length();
        let k = self.dimension();
        if k == 0 {
            return Ok((0, distribution.then(|| vec![1])));
        }
        let f = self.field();
        let q = f.order() as usize;
        let split = (1..).find(|&d| q.pow(d) >= 16).unwrap() as usize;
        let mut tasks = Vec::new();
        for lead in 0..k {
            let depth = split.min(k - lead - 1);
            for prefix in 0..q.pow(depth as u32) {
                tasks.push((lead, depth, prefix));
            }
        }
        let best = AtomicUsize::new(n + 1);
        let binary = f.order() == 2;
        let packed: Vec<Vec<u64>> = if binary { self.basis.iter().map(|r| pack(r)).collect() } else { Vec::new() };
        let merged = tasks
            .into_par_iter()
            .map(|(lead, depth, prefix)| {
                let mut counts = if distribution { vec![0u128; n + 1] } else { Vec::new() };
                if !distribution && best.load(Ordering::Relaxed) == 1 {
                    return counts;
                }
                let mut digits = vec![0usize; depth];
                let mut x = prefix;
                for d in digits.iter_mut() {
                    *d = x % q;
                    x /= q;
                }
                let free = k - lead - 1 - depth;
                let mut record = |w: usize| {
                    if distribution {
                        counts[w] += 1;
                    } else {
                        best.fetch_min(w, Ordering::Relaxed);
                    }
                };
                if binary {
                    let mut word = packed[lead].clone();
                    for (i, &d) in digits.iter().enumerate() {
                        if d == 1 {
                            xor(&mut word, &packed[lead + 1 + i]);
                        }
                    }
                    gray_binary(&mut word, &packed[lead + 1 + depth..], free, &mut record);
                } else {
                    let elems: Vec<FieldElement> = f.elements().collect();
                    let mut word = self.basis[lead].clone();
                    for (i, &d) in digits.iter().enumerate() {
                        axpy(f, &mut word, elems[d], &self.basis[lead + 1 + i]);
                    }
                    gray_qary(f, &elems, &mut word, &self.basis[lead + 1 + depth..], &mut record);
                }
                counts
            })
            .reduce(Vec::new, |mut a, b| {
                if a.is_empty() {
                    return b;
                }
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            });
        if distribution {
            let mut counts: Vec<u128> = merged.iter().map(|&c| c * (q as u128 - 1)).collect();
            counts[0] = 1;
            let min = counts.iter().skip(1).position(|&c| c > 0).map_or(0, |i| i + 1);
            Ok((min, Some(counts)))
        } else {
            Ok((best.into_inner(), None))
        }
    }
}

fn pack(row: &[FieldElement]) -> Vec<u64> {
    let mut out = vec![0u64; row.len().div_ceil(64)];
    for (i, c) in row.iter().enumerate() {
        if c.value() != 0 {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

fn xor(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

fn axpy(f: &Field, word: &mut [FieldElement], c: FieldElement, row: &[FieldElement]) {
    if c == f.zero() {
        return;
    }
    for (x, &y) in word.iter_mut().zip(row) {
        *x = f.add(*x, f.mul(c, y));
    }
}

/// Visits `word + sum c_i rows[i]` for all binary `c`, in Gray order.
fn gray_binary(word: &mut [u64], rows: &[Vec<u64>], free: usize, visit: &mut impl FnMut(usize)) {
    visit(popcount(word));
    for step in 1u64..(1u64 << free) {
        xor(word, &rows[step.trailing_zeros() as usize]);
        visit(popcount(word));
    }
}

/// Modular `q`-ary Gray code over the digit indices of `elems`: each step
/// advances exactly one digit by one index position.
fn gray_qary(
    f: &Field,
    elems: &[FieldElement],
    word: &mut [FieldElement],
    rows: &[Vec<FieldElement>],
    visit: &mut impl FnMut(usize),
) {
    let q = elems.len();
    let deltas: Vec<FieldElement> = (0..q).map(|d| f.sub(elems[(d + 1) % q], elems[d])).collect();
    let zero = f.zero();
    let mut weight = word.iter().filter(|&&x| x != zero).count();
    visit(weight);
    let mut counter = vec![0usize; rows.len()];
    let mut gray = vec![0usize; rows.len()];
    loop {
        let Some(j) = counter.iter().position(|&c| c + 1 < q) else {
            return;
        };
        for c in counter[..j].iter_mut() {
            *c = 0;
        }
        counter[j] += 1;
        let delta = deltas[gray[j]];
        gray[j] = (gray[j] + 1) % q;
        for (x, &y) in word.iter_mut().zip(&rows[j]) {
            if y == zero {
                continue;
            }
            let was = *x != zero;
            *x = f.add(*x, f.mul(delta, y));
            match (was, *x != zero) {
                (true, false) => weight -= 1,
                (false, true) => weight += 1,
                _ => {}
            }
        }
        visit(weight);
    }
}

/// `C_1 + ... + C_r` for codes whose generators are pairwise orthogonal.
pub fn direct_sum(codes: &[Code]) -> Result<Code> {
    let first = codes
        .first()
        .ok_or_else(|| Error::Invariant("direct sum of no codes".into()))?;
    for (i, a) in codes.iter().enumerate() {
        if a.group() != first.group() || a.field() != first.field() {
            return Err(Error::Invariant("codes live in different algebras".into()));
        }
        for (j, b) in codes.iter().enumerate().skip(i + 1) {
            if !a.generator.is_orthogonal(&b.generator) {
                return Err(Error::Invariant(format!("generators {i} and {j} are not orthogonal")));
            }
        }
    }
    let sum = codes.iter().skip(1).fold(first.generator.clone(), |acc, c| &acc + &c.generator);
    let code = Code::from_idempotent(&sum)?;
    let expected: usize = codes.iter().map(Code::dimension).sum();
    if code.dimension() != expected {
        return Err(Error::Invariant(format!(
            "direct sum has dimension {}, expected {expected}",
            code.dimension()
        )));
    }
    Ok(code)
}

/// Computed against predicted parameters of one chain code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCodeParameters {
    pub index: usize,
    pub dimension: usize,
    pub min_weight: usize,
    pub expected_dimension: usize,
    pub expected_weight: usize,
}

impl ChainCodeParameters {
    pub fn matches(&self) -> bool {
        self.dimension == self.expected_dimension && self.min_weight == self.expected_weight
    }
}

/// Dimension and weight of each chain code `I_i = F_q C_{2^m} e_i` next to
/// the predictions `dim I_0 = 1, d(I_0) = 2^m` and
/// `dim I_i = 2^{i-1}, d(I_i) = 2^{m-i+1}`.
pub fn cyclic_2m_parameters(m: u32, f: &Field) -> Result<Vec<ChainCodeParameters>> {
    let g = AbelianGroup::cyclic(1 << m)?;
    let system = cyclic_chain_idempotents(&g, f)?;
    system
        .elements()
        .enumerate()
        .map(|(i, e)| {
            let code = Code::from_idempotent(e)?;
            Ok(ChainCodeParameters {
                index: i,
                dimension: code.dimension(),
                min_weight: code.minimum_weight()?,
                expected_dimension: if i == 0 { 1 } else { 1 << (i - 1) },
                expected_weight: if i == 0 { 1 << m } else { 1 << (m - i as u32 + 1) },
            })
        })
        .collect()
}

/// `F_q G e_H + F_q G e_K` in `F_q(C_p x C_p)` for distinct subgroups `H`,
/// `K` of order `p`. Returns `(dimension, minimum weight)`.
pub fn two_sylow_direct_sum(
    g: &AbelianGroup,
    f: &Field,
    h: &crate::groups::Subgroup,
    k: &crate::groups::Subgroup,
) -> Result<(usize, usize)> {
    let p = match g.factors() {
        [a, b] if a == b && crate::numtheory::is_prime(*a) => *a,
        _ => return Err(Error::Hypothesis(format!("{} is not C_p x C_p", g.name()))),
    };
    if order_mod(f.order(), p)? != p - 1 {
        return Err(Error::Hypothesis(format!("q = {} does not generate U(Z_{p})", f.order())));
    }
    if h.elements() == k.elements() {
        return Err(Error::Invariant("summands must come from distinct subgroups".into()));
    }
    let code = direct_sum(&[
        Code::from_idempotent(&e_h(g, f, h)?)?,
        Code::from_idempotent(&e_h(g, f, k)?)?,
    ])?;
    Ok((code.dimension(), code.minimum_weight()?))
}

/// The two-summand code of `F_q(C_p x C_p)` built from `<a>` and `<b>`.
pub fn complementary_pair_sum(p: u64, f: &Field) -> Result<(usize, usize)> {
    let g = AbelianGroup::new(&[p, p])?;
    let h = g.subgroup_generated(&[g.index(&[1, 0])]);
    let k = g.subgroup_generated(&[g.index(&[0, 1])]);
    two_sylow_direct_sum(&g, f, &h, &k)
}

/// For a primitive `e` that is not essential, a prime-order subgroup `H`
/// with `e H^ = e`; every codeword of `F_q G e` is then constant on the
/// cosets of `H`, which is checked on the basis. `None` when `e` is
/// essential.
pub fn repetition_subgroup(g: &AbelianGroup, e: &AlgebraElement<Field>) -> Result<Option<crate::groups::Subgroup>> {
    let f = e.ring();
    let code = Code::from_idempotent(e)?;
    let mut seen: Vec<crate::groups::Subgroup> = Vec::new();
    for x in 1..g.order() {
        if !crate::numtheory::is_prime(g.element_order(x)) {
            continue;
        }
        let h = g.subgroup_generated(&[x]);
        if seen.contains(&h) {
            continue;
        }
        let hh = crate::idem::hat(g, f, &h)?;
        if &e.mul(&hh) == e {
            let constant = code.basis().iter().all(|b| b.translate(x) == *b);
            if !constant {
                return Err(Error::Invariant("e H^ = e but codewords are not constant on cosets of H".into()));
            }
            return Ok(Some(h));
        }
        seen.push(h);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idem::{hat, primitive_idempotents};
    use proptest::prelude::*;

    fn grp(s: &str) -> AbelianGroup {
        AbelianGroup::parse(s).unwrap()
    }

    fn f(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    /// Independent oracle: enumerate every message vector in counting order
    /// and multiply out against the basis directly.
    fn brute_distribution(c: &Code) -> Vec<u128> {
        let fld = c.field();
        let q = fld.order() as usize;
        let elems: Vec<_> = fld.elements().collect();
        let basis = c.basis();
        let mut counts = vec![0u128; c.length() + 1];
        for mut x in 0..q.pow(c.dimension() as u32) {
            let mut v = AlgebraElement::zero(c.group(), fld);
            for b in &basis {
                v = &v + &b.scale(elems[x % q]);
                x /= q;
            }
            counts[v.weight()] += 1;
        }
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    #[test]
    fn table_one_codes() {
        let g = grp("C9xC3");
        let f2 = f(2);
        let gr = Group::abelian(g.clone());
        let whole = Code::from_idempotent(&hat(&g, &f2, &g.whole()).unwrap()).unwrap();
        assert_eq!(whole.dimension(), 1);
        assert_eq!(whole.minimum_weight().unwrap(), 27);
        assert_eq!(whole.weight_distribution().unwrap().iter().filter(|&&c| c > 0).count(), 2);
        assert!(whole.is_constant_weight().unwrap());
        let b = g.subgroup_generated(&[g.index(&[0, 1])]);
        let e1 = Code::from_idempotent(&e_h(&g, &f2, &b).unwrap()).unwrap();
        assert_eq!((e1.dimension(), e1.minimum_weight().unwrap()), (6, 6));
        let a = g.subgroup_generated(&[g.index(&[1, 0])]);
        let e2 = Code::from_idempotent(&e_h(&g, &f2, &a).unwrap()).unwrap();
        assert_eq!((e2.dimension(), e2.minimum_weight().unwrap()), (2, 18));
        let full = Code::from_idempotent(&AlgebraElement::one(&gr, &f2)).unwrap();
        assert_eq!(full.dimension(), 27);
    }

    #[test]
    fn zero_code() {
        let gr = Group::parse("C5").unwrap();
        let c = Code::from_idempotent(&AlgebraElement::zero(&gr, &f(2))).unwrap();
        assert!(c.is_zero_code());
        assert_eq!(c.weight_distribution().unwrap(), vec![1]);
        assert_eq!(c.minimum_weight().unwrap(), 0);
        assert!(c.is_constant_weight().unwrap());
    }

    #[test]
    fn repetition_code() {
        for (s, q) in [("C7", 2), ("C5", 3), ("C3xC3", 4), ("D5", 3)] {
            let gr = Group::parse(s).unwrap();
            let fq = f(q);
            let all: Vec<usize> = (0..gr.order()).collect();
            let c = Code::from_idempotent(&AlgebraElement::hat(&gr, &fq, &all).unwrap()).unwrap();
            let mut expect = vec![0u128; gr.order() + 1];
            expect[0] = 1;
            expect[gr.order()] = q as u128 - 1;
            assert_eq!(c.weight_distribution().unwrap(), expect);
        }
    }

    #[test]
    fn distributions_match_oracle() {
        let cases = [("C9xC3", 2), ("C7", 2), ("C8", 3), ("C2xC3", 5), ("C5", 4), ("C4", 9)];
        for (s, q) in cases {
            let g = grp(s);
            let fq = f(q);
            for e in primitive_idempotents(&g, &fq).unwrap().elements() {
                let c = Code::from_idempotent(e).unwrap();
                if c.dimension() > 6 {
                    continue;
                }
                let d = c.weight_distribution().unwrap();
                assert_eq!(d, brute_distribution(&c), "{s} over F_{q}");
                assert_eq!(d.iter().sum::<u128>(), (q as u128).pow(c.dimension() as u32));
                let min = d.iter().skip(1).position(|&x| x > 0).unwrap() + 1;
                assert_eq!(c.minimum_weight().unwrap(), min);
                assert!(min <= e.weight());
            }
        }
    }

    #[test]
    fn budget_guard() {
        let gr = Group::parse("C30").unwrap();
        let c = Code::from_idempotent(&AlgebraElement::one(&gr, &f(7))).unwrap();
        assert!(matches!(c.minimum_weight(), Err(Error::BudgetExceeded { .. })));
        let small = Code::from_idempotent(&AlgebraElement::one(&Group::parse("C4").unwrap(), &f(3))).unwrap();
        assert!(small.weight_distribution_with_budget(80).is_err());
        assert_eq!(small.minimum_weight_with_budget(81).unwrap(), 1);
    }

    #[test]
    fn wedderburn_dimensions() {
        for (s, q) in [("C9xC3", 2), ("C27xC3", 2), ("C3xC11", 2), ("C16", 3), ("C4xC4", 5), ("C7", 2)] {
            let g = grp(s);
            let total: usize = primitive_idempotents(&g, &f(q))
                .unwrap()
                .elements()
                .map(|e| Code::from_idempotent(e).unwrap().dimension())
                .sum();
            assert_eq!(total, g.order(), "{s}");
        }
    }

    #[test]
    fn direct_sums_in_c9() {
        let g = grp("C9");
        let sys = cyclic_chain_idempotents(&g, &f(2)).unwrap();
        let codes: Vec<Code> = sys.elements().map(|e| Code::from_idempotent(e).unwrap()).collect();
        let w = |ix: &[usize]| {
            let parts: Vec<Code> = ix.iter().map(|&i| codes[i].clone()).collect();
            direct_sum(&parts).unwrap().minimum_weight().unwrap()
        };
        assert_eq!(w(&[1, 2]), 2);
        assert_eq!(w(&[0, 1]), 3);
        assert_eq!(w(&[0, 1, 2]), 1);
        assert!(direct_sum(&[codes[1].clone(), codes[1].clone()]).is_err());
        assert!(direct_sum(&[]).is_err());
    }

    #[test]
    fn visible_bases() {
        let g = grp("C8");
        let f3 = f(3);
        let sys = cyclic_chain_idempotents(&g, &f3).unwrap();
        let e2 = &sys.members[2].element;
        let code = Code::from_idempotent(e2).unwrap();
        let b: Vec<_> = (0..code.dimension()).map(|j| e2.translate(j)).collect();
        assert!(code.visible_basis_check(&b).unwrap());
        assert!(code.visible_basis_check(&b[..1]).is_err());

        let g = grp("C7");
        let f2 = f(2);
        let whole = Code::from_idempotent(&hat(&g, &f2, &g.whole()).unwrap()).unwrap();
        assert!(whole.visible_basis_check(&whole.basis()).unwrap());
        let sys = primitive_idempotents(&g, &f2).unwrap();
        let sum = direct_sum(&[
            Code::from_idempotent(&sys.members[0].element).unwrap(),
            Code::from_idempotent(&sys.members[1].element).unwrap(),
        ])
        .unwrap();
        let rows = sum.basis();
        let weights: Vec<usize> = rows.iter().map(|r| r.weight()).collect();
        assert_eq!(
            sum.visible_basis_check(&rows).unwrap(),
            weights.windows(2).all(|w| w[0] == w[1])
        );
    }

    #[test]
    fn chain_parameters_2m() {
        for q in [3, 5, 7, 9, 11] {
            for m in 1..=if q < 9 { 4 } else { 3 } {
                let rows = cyclic_2m_parameters(m, &f(q)).unwrap();
                assert_eq!(rows.len(), m as usize + 1);
                for r in &rows {
                    assert!(r.matches(), "q={q} m={m} {r:?}");
                }
            }
        }
        let rows = cyclic_2m_parameters(3, &f(3)).unwrap();
        assert_eq!((rows[2].dimension, rows[2].min_weight), (2, 4));
        assert_eq!((rows[0].dimension, rows[0].min_weight), (1, 8));
        assert!(cyclic_2m_parameters(3, &f(2)).is_err());
    }

    #[test]
    fn two_sylow_sums() {
        assert_eq!(complementary_pair_sum(3, &f(2)).unwrap(), (4, 4));
        assert_eq!(complementary_pair_sum(5, &f(2)).unwrap(), (8, 8));
        assert!(complementary_pair_sum(7, &f(2)).is_err());
        let g = AbelianGroup::new(&[3, 3]).unwrap();
        let h = g.subgroup_generated(&[1]);
        assert!(two_sylow_direct_sum(&g, &f(2), &h, &h).is_err());
    }

    #[test]
    fn essential_or_repetition() {
        use crate::idem::essential_idempotents;
        for (s, q, essential) in [("C7", 2, 2), ("C9", 2, 1), ("C3xC3", 2, 0), ("C15", 2, 2), ("C5xC5", 3, 0)] {
            let g = grp(s);
            let sys = primitive_idempotents(&g, &f(q)).unwrap();
            let ess = essential_idempotents(&g, &f(q), &sys).unwrap();
            assert_eq!(ess.len(), essential, "{s}");
            for e in sys.elements() {
                let rep = repetition_subgroup(&g, e).unwrap();
                assert_eq!(rep.is_none(), ess.contains(e));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn random_ideals(coeffs in proptest::collection::vec(0u64..3, 10)) {
            let gr = Group::parse("C10").unwrap();
            let f3 = f(3);
            let v: Vec<_> = coeffs.iter().map(|&c| f3.from_int(c as i64)).collect();
            let e = AlgebraElement::from_coeffs(&gr, &f3, v).unwrap();
            let c = Code::from_idempotent(&e).unwrap();
            prop_assert!(c.contains(&e));
            for b in c.basis() {
                prop_assert!(c.contains(&(&b * &e)));
            }
            let d = c.weight_distribution().unwrap();
            prop_assert_eq!(d.iter().sum::<u128>(), 3u128.pow(c.dimension() as u32));
            if c.dimension() <= 5 {
                prop_assert_eq!(d, brute_distribution(&c));
            }
        }
    }
}
