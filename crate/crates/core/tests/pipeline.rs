use galcodes::chainring::{CyclicRingAlgebra, ENUMERATION_BUDGET};
use galcodes::codes::Code;
use galcodes::equiv::g_equivalence_classes;
use galcodes::idem::{idempotent_system, primitive_idempotents, primitive_idempotents_rational};
use galcodes::report::{code_table, render_all, Format};
use galcodes::{AbelianGroup, Field, ZMod};
use num_bigint::BigUint;
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn cocyclic_system_matches_primitive_system_when_q_generates() {
    // 2 generates U(Z_9) and U(Z_3), so every e_H is primitive
    let g = AbelianGroup::parse("C9xC3").unwrap();
    let f = Field::prime(2).unwrap();
    let eh = idempotent_system(&g, &f).unwrap();
    let prim = primitive_idempotents(&g, &f).unwrap();
    assert!(eh.same_members(&prim));
}

#[test]
fn equivalence_classes_partition_by_parameters() {
    let g = AbelianGroup::parse("C5xC5").unwrap();
    let f = Field::prime(2).unwrap();
    let r = g_equivalence_classes(&g, &f).unwrap();
    let members: usize = r.classes.iter().map(|c| c.members.len()).sum();
    assert_eq!(members, r.system.len());
    for c in &r.classes {
        for &m in &c.members {
            let code = Code::from_idempotent(&r.system.members[m].element).unwrap();
            assert_eq!(code.dimension(), c.dimension);
        }
    }
}

#[test]
fn report_round_trips_through_json() {
    let g = AbelianGroup::cyclic(15).unwrap();
    let f = Field::prime(2).unwrap();
    let s = primitive_idempotents(&g, &f).unwrap();
    let t = code_table("C15", &s, 1 << 20).unwrap();
    let text = render_all(&[t], Format::Json);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let dims: u64 = v[0]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dimension"].as_u64().unwrap())
        .sum();
    assert_eq!(dims, 15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn primitive_systems_are_complete(n in 1u64..40, qi in 0usize..4) {
        let q = [2u64, 3, 4, 5][qi];
        prop_assume!(gcd(n, q) == 1);
        let g = AbelianGroup::cyclic(n).unwrap();
        let f = Field::with_order(q).unwrap();
        let s = primitive_idempotents(&g, &f).unwrap();
        s.verify().unwrap();
        let dims: usize = s.elements().map(|e| Code::from_idempotent(e).unwrap().dimension()).sum();
        prop_assert_eq!(dims as u64, n);
    }

    #[test]
    fn rational_route_agrees(n in 1u64..30) {
        prop_assume!(n % 3 != 0);
        let g = AbelianGroup::cyclic(n).unwrap();
        let f = Field::prime(3).unwrap();
        let a = primitive_idempotents(&g, &f).unwrap();
        let b = primitive_idempotents_rational(&g, &f).unwrap();
        prop_assert!(a.same_members(&b));
    }

    #[test]
    fn ring_duals_pair_up(ring in 0usize..3, pick in 0usize..64) {
        let (r, n) = [(ZMod::new(2, 2).unwrap(), 7), (ZMod::new(3, 2).unwrap(), 2), (ZMod::new(2, 3).unwrap(), 3)][ring].clone();
        let a = CyclicRingAlgebra::new(&r, n).unwrap();
        let codes = a.enumerate_codes().unwrap();
        let c = &codes[pick % codes.len()];
        let d = a.dual_code(c);
        prop_assert_eq!(a.dual_code(&d), c.clone());
        prop_assert_eq!(a.codeword_count(c) * a.codeword_count(&d), BigUint::from(r.modulus()).pow(n as u32));
        let words = a.codewords(c, ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(BigUint::from(words.len()), a.codeword_count(c));
    }
}
