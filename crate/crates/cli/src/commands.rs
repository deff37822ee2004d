//! Builds the tables for each subcommand.

use galcodes::chainring::CyclicRingAlgebra;
use galcodes::dihedral::{dihedral_condition, dihedral_code_table_with_budget, dihedral_idempotents, simple_component_counts};
use galcodes::equiv::g_equivalence_classes_with_budget;
use galcodes::idem::{
    cyclic_chain_idempotents, idempotent_system, order_2pn_idempotents, mod8_cyclic_2m_idempotents,
    primitive_idempotents, three_prime_idempotents, two_prime_idempotents, IdempotentSystem,
};
use galcodes::numtheory::prime_power;
use galcodes::report::{chainring_table, code_table, dihedral_table, equivalence_table, idempotent_table, Table};
use galcodes::{AbelianGroup, Error, Field, Group, Result, ZMod};
use serde_json::json;

/// Which idempotent list to build for an abelian group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Construction {
    /// Complete primitive system from character orbits.
    Primitive,
    /// The subgroup idempotents `e_H` over co-cyclic subgroups.
    Cocyclic,
    /// Chain idempotents of a cyclic p-group.
    Chain,
    /// `(1 +- t)/2 e_i` for `C_2 x C_{p^n}`.
    Order2pn,
    /// Explicit list for `C_{2^m}` with `q = 3 mod 8`.
    Mod8,
    /// Products `e_H e_K` and `u`, `u'` splits for two primes.
    TwoPrime,
    /// The fourteen idempotents for three primes over `F_2`.
    ThreePrime,
}

#[derive(Clone, Debug)]
pub enum Target {
    Abelian(AbelianGroup),
    Dihedral(u64),
}

pub fn parse_group(s: &str) -> Result<Target> {
    match Group::parse(s)? {
        Group::Abelian(g) => Ok(Target::Abelian((*g).clone())),
        Group::Dihedral(d) => Ok(Target::Dihedral(d.n())),
    }
}

fn abelian(s: &str) -> Result<AbelianGroup> {
    match parse_group(s)? {
        Target::Abelian(g) => Ok(g),
        Target::Dihedral(_) => Err(Error::Unsupported(format!("{s} is not abelian"))),
    }
}

pub fn field(q: u64) -> Result<Field> {
    Field::with_order(q)
}

fn system(g: &AbelianGroup, f: &Field, c: Construction) -> Result<IdempotentSystem<Field>> {
    let s = match c {
        Construction::Primitive => primitive_idempotents(g, f)?,
        Construction::Cocyclic => idempotent_system(g, f)?,
        Construction::Chain => cyclic_chain_idempotents(g, f)?,
        Construction::Order2pn => order_2pn_idempotents(g, f)?,
        Construction::Mod8 => {
            let (p, m) = prime_power(g.order() as u64)
                .filter(|&(p, _)| p == 2 && g.is_cyclic())
                .ok_or_else(|| Error::Hypothesis(format!("{} is not a cyclic 2-group", g.name())))?;
            debug_assert_eq!(p, 2);
            mod8_cyclic_2m_idempotents(m, f)?
        }
        Construction::TwoPrime => two_prime_idempotents(g, f)?,
        Construction::ThreePrime => {
            let primes = g.factors();
            if primes.len() != 3 || f.order() != 2 {
                return Err(Error::Hypothesis(
                    "the three-prime construction needs C_p1 x C_p2 x C_p3 over F_2".into(),
                ));
            }
            three_prime_idempotents(primes[0], primes[1], primes[2])?
        }
    };
    s.verify()?;
    Ok(s)
}

fn construction_name(c: Construction) -> &'static str {
    match c {
        Construction::Primitive => "primitive idempotents",
        Construction::Cocyclic => "subgroup idempotents e_H",
        Construction::Chain => "chain idempotents",
        Construction::Order2pn => "idempotents (1 +- t)/2 e_i",
        Construction::Mod8 => "explicit q = 3 mod 8 idempotents",
        Construction::TwoPrime => "two-prime idempotents",
        Construction::ThreePrime => "three-prime idempotents",
    }
}

pub fn idempotents(group: &str, q: u64, c: Construction) -> Result<Vec<Table>> {
    let f = field(q)?;
    match parse_group(group)? {
        Target::Abelian(g) => {
            let s = system(&g, &f, c)?;
            let title = format!("{} of F{}({})", capitalize(construction_name(c)), q, g.name());
            Ok(vec![idempotent_table(&title, &s)])
        }
        Target::Dihedral(n) => Ok(vec![dihedral_idempotent_table(n, &f)?]),
    }
}

pub fn codes(group: &str, q: u64, c: Construction, budget: u128) -> Result<Vec<Table>> {
    let f = field(q)?;
    match parse_group(group)? {
        Target::Abelian(g) => {
            let s = system(&g, &f, c)?;
            let title = format!("Codes of the {} of F{}({})", construction_name(c), q, g.name());
            Ok(vec![code_table(&title, &s, budget)?])
        }
        Target::Dihedral(n) => dihedral(n, q, budget),
    }
}

pub fn equivalence(group: &str, q: u64, budget: u128) -> Result<Vec<Table>> {
    let g = abelian(group)?;
    let f = field(q)?;
    let report = g_equivalence_classes_with_budget(&g, &f, budget)?;
    let title = format!("G-equivalence classes of minimal codes of F{}({})", q, g.name());
    Ok(vec![equivalence_table(&title, &report)])
}

fn dihedral_idempotent_table(n: u64, f: &Field) -> Result<Table> {
    let items = dihedral_idempotents(n, f)?;
    let mut t = Table::new(
        format!("Central idempotents of F{}(D{})", f.order(), n),
        &["label", "idempotent", "support"],
    )
    .json_column("coefficients");
    for it in &items {
        t.push(vec![
            json!(it.label),
            json!(it.element.render()),
            json!(it.element.weight()),
            json!(it.element.coeff_codes()),
        ]);
    }
    let group = Group::dihedral(n)?;
    let counts = simple_component_counts(&group, f.order())?;
    let cond = dihedral_condition(n, f.order()).map_or("none".to_string(), |c| format!("{c:?}"));
    t.notes.push(format!(
        "{} idempotents; q-class census {}; minimality condition {cond}",
        items.len(),
        counts.over_fq
    ));
    Ok(t)
}

pub fn dihedral(n: u64, q: u64, budget: u128) -> Result<Vec<Table>> {
    let f = field(q)?;
    let ids = dihedral_idempotent_table(n, &f)?;
    let rows = dihedral_code_table_with_budget(n, &f, budget)?;
    let codes = dihedral_table(&format!("Minimal codes of F{q}(D{n})"), &rows);
    Ok(vec![ids, codes])
}

pub fn chainring(ring: &str, group: &str) -> Result<Vec<Table>> {
    let r = ZMod::parse(ring)?;
    let g = abelian(group)?;
    if !g.is_cyclic() {
        return Err(Error::Unsupported(format!("{} is not cyclic", g.name())));
    }
    let alg = CyclicRingAlgebra::new(&r, g.order() as u64)?;
    let codes = alg.enumerate_codes()?;
    let ids = idempotent_table(
        &format!("Lifted primitive idempotents of {}(C{})", r.name(), alg.n),
        &alg.lifted,
    );
    let title = format!("Cyclic codes of {}(C{}) and their duals", r.name(), alg.n);
    Ok(vec![ids, chainring_table(&title, &alg, &codes)])
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    c.next()
        .map(|f| f.to_uppercase().chain(c).collect())
        .unwrap_or_default()
}
