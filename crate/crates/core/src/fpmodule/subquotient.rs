use crate::error::Result;
use crate::groebner::{ideal_intersection, FreeElement, Ideal};
use crate::poly::Ring;

use super::module::FPModule;
use super::submodule::{colon_by_element, preimage, Submodule};

/// `(A + B) / B` for `A` given by generators and `B` a submodule of the same
/// free module. Kernels modulo images (homology, Ext) are handled in this
/// form before being re-presented as [`FPModule`]s.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ring: Ring,
    generators: Vec<FreeElement>,
    relations: Submodule,
    shifts: Option<Vec<i32>>,
}

impl Subquotient {
    /// `shifts` grades the ambient free module, if known.
    pub fn new(generators: Vec<FreeElement>, relations: Submodule, shifts: Option<Vec<i32>>) -> Self {
        Subquotient {
            ring: relations.ring().clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            relations,
            shifts,
        }
    }

    pub fn generators(&self) -> &[FreeElement] {
        &self.generators
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.nonzero_element()?.is_none())
    }

    /// The normal form of the first generator outside the relations.
    pub fn nonzero_element(&self) -> Result<Option<FreeElement>> {
        for g in &self.generators {
            let r = self.relations.normal_form(g)?;
            if !r.is_zero() {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }

    /// `p ∈ Supp` for a prime `p`: some generator `a` has `(B : a) ⊆ p`.
    pub fn support_contains(&self, p: &Ideal) -> Result<bool> {
        for g in &self.generators {
            if self.relations.contains(g)? {
                continue;
            }
            if p.contains_ideal(&colon_by_element(&self.relations, g)?)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn annihilator(&self) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for g in &self.generators {
            let c = colon_by_element(&self.relations, g)?;
            acc = if acc.is_unit()? {
                c
            } else {
                ideal_intersection(&acc, &c)?
            };
        }
        acc.reduced()
    }

    /// A presentation: generators become `e_1..e_k`, relations are the
    /// syzygies modulo `B`. Graded when every generator is homogeneous for
    /// the ambient shifts.
    pub fn present(&self) -> Result<FPModule> {
        let relations = preimage(&self.ring, &self.generators, &self.relations)?;
        let grading = self.shifts.as_ref().and_then(|s| {
            self.generators
                .iter()
                .map(|g| g.homogeneous_degree(s).flatten().map(|d| d as i32))
                .collect::<Option<Vec<i32>>>()
        });
        match FPModule::from_submodule(relations.clone(), grading) {
            Ok(m) => Ok(m),
            Err(_) => FPModule::from_submodule(relations, None),
        }
    }
}
