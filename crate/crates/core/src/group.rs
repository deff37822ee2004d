//! A finite group handle covering the abelian and dihedral families.

use std::fmt;
use std::sync::Arc;

use crate::dihedral::DihedralGroup;
use crate::error::{Error, Result};
use crate::groups::AbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    Abelian(Arc<AbelianGroup>),
    Dihedral(Arc<DihedralGroup>),
}

impl Group {
    /// Parses `C9xC3` style abelian groups and `D4` / `D_4` dihedral groups.
    pub fn parse(s: &str) -> Result<Group> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix(['D', 'd']) {
            let n: u64 = rest
                .trim_start_matches('_')
                .parse()
                .map_err(|_| Error::Parse(s.into()))?;
            return Ok(Group::Dihedral(Arc::new(DihedralGroup::new(n)?)));
        }
        Ok(Group::Abelian(Arc::new(AbelianGroup::parse(t)?)))
    }

    pub fn abelian(g: AbelianGroup) -> Group {
        Group::Abelian(Arc::new(g))
    }

    pub fn dihedral(n: u64) -> Result<Group> {
        Ok(Group::Dihedral(Arc::new(DihedralGroup::new(n)?)))
    }

    pub fn as_abelian(&self) -> Option<&AbelianGroup> {
        match self {
            Group::Abelian(g) => Some(g),
            Group::Dihedral(_) => None,
        }
    }

    pub fn as_dihedral(&self) -> Option<&DihedralGroup> {
        match self {
            Group::Dihedral(g) => Some(g),
            Group::Abelian(_) => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, Group::Abelian(_))
    }

    pub fn name(&self) -> String {
        match self {
            Group::Abelian(g) => g.name().to_string(),
            Group::Dihedral(g) => format!("D{}", g.n()),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Group::Abelian(g) => g.order(),
            Group::Dihedral(g) => g.order(),
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        match self {
            Group::Abelian(g) => g.op(i, j),
            Group::Dihedral(g) => g.op(i, j),
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        match self {
            Group::Abelian(g) => g.inv(i),
            Group::Dihedral(g) => g.inv(i),
        }
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k % self.element_order(i) {
            acc = self.op(acc, i);
        }
        acc
    }

    pub fn element_order(&self, i: usize) -> u64 {
        match self {
            Group::Abelian(g) => g.element_order(i),
            Group::Dihedral(g) => g.element_order(i),
        }
    }

    /// A generating set (canonical generators of the presentation).
    pub fn generators(&self) -> Vec<usize> {
        match self {
            Group::Abelian(g) => g.generators(),
            Group::Dihedral(g) => g.generators(),
        }
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            Group::Abelian(g) => g.label(i),
            Group::Dihedral(g) => g.label(i),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
