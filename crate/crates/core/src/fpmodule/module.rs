use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{ideal_intersection, FreeElement, Ideal};
use crate::poly::{check_same, Polynomial, Ring};

use super::submodule::{colon_by_element, Submodule};

/// A finitely presented module `R^rank / relations`, optionally graded by
/// per-generator degree shifts.
#[derive(Clone, PartialEq)]
pub struct FPModule {
    ring: Ring,
    rank: usize,
    relations: Submodule,
    grading: Option<Vec<i32>>,
}

impl FPModule {
    /// Validates ranks and, when graded, that each relation is homogeneous
    /// for the shifts (`deg(m e_i) = deg m + shifts[i]`).
    pub fn present(
        ring: &Ring,
        rank: usize,
        relations: Vec<FreeElement>,
        grading: Option<Vec<i32>>,
    ) -> Result<FPModule> {
        let relations = Submodule::new(ring, rank, relations)?;
        FPModule::from_submodule(relations, grading)
    }

    pub fn from_submodule(relations: Submodule, grading: Option<Vec<i32>>) -> Result<FPModule> {
        let rank = relations.rank();
        if let Some(shifts) = &grading {
            if shifts.len() != rank {
                return Err(Error::LengthMismatch(format!(
                    "{} degree shifts for {} generators",
                    shifts.len(),
                    rank
                )));
            }
            for r in relations.generators() {
                if r.homogeneous_degree(shifts).is_none() {
                    return Err(Error::NotHomogeneous(r.to_string()));
                }
            }
        }
        Ok(FPModule {
            ring: relations.ring().clone(),
            rank,
            relations,
            grading,
        })
    }

    /// The free module `R^rank`, graded with zero shifts.
    pub fn free(ring: &Ring, rank: usize) -> FPModule {
        FPModule {
            ring: ring.clone(),
            rank,
            relations: Submodule::zero(ring, rank),
            grading: Some(vec![0; rank]),
        }
    }

    /// `R / I`, graded exactly when every generator of `I` is homogeneous.
    pub fn cyclic(ideal: &Ideal) -> FPModule {
        let ring = ideal.ring();
        let rels: Vec<FreeElement> = ideal
            .generators()
            .iter()
            .map(|g| FreeElement::single(ring, 1, 0, g.clone()))
            .collect();
        let graded = ideal.generators().iter().all(Polynomial::is_homogeneous);
        FPModule::present(ring, 1, rels, graded.then(|| vec![0])).expect("valid presentation")
    }

    /// The same presentation with standard grading if every relation is
    /// homogeneous for zero shifts.
    pub fn with_standard_grading(&self) -> Option<FPModule> {
        FPModule::from_submodule(self.relations.clone(), Some(vec![0; self.rank])).ok()
    }

    pub fn ungraded(&self) -> FPModule {
        FPModule {
            grading: None,
            ..self.clone()
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn grading(&self) -> Option<&[i32]> {
        self.grading.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.grading.is_some()
    }

    /// Presentation matrix with one row per generator and one column per
    /// relation.
    pub fn matrix(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rank)
            .map(|i| {
                self.relations
                    .generators()
                    .iter()
                    .map(|r| r.component(i).clone())
                    .collect()
            })
            .collect()
    }

    /// Whether every generator `e_i` lies in the relations.
    pub fn is_zero(&self) -> Result<bool> {
        self.relations.is_everything()
    }

    /// `M / (f_1, ..., f_k) M`. The grading survives when each `f_j` is
    /// homogeneous.
    pub fn quotient_by_sequence(&self, f: &[Polynomial]) -> Result<FPModule> {
        let relations = self.relations.plus_multiples(f)?;
        let grading = if f.iter().all(Polynomial::is_homogeneous) {
            self.grading.clone()
        } else {
            None
        };
        FPModule::from_submodule(relations, grading)
    }

    /// `ann(M) = ∩_i (N : e_i)`; the unit ideal for the zero module.
    pub fn annihilator(&self) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for i in 0..self.rank {
            let e = FreeElement::basis(&self.ring, self.rank, i);
            let c = colon_by_element(&self.relations, &e)?;
            acc = if acc.is_unit()? {
                c.reduced()?
            } else {
                ideal_intersection(&acc, &c)?
            };
        }
        acc.reduced()
    }

    /// `p ∈ Supp(M)`, i.e. `ann(M) ⊆ p` for a prime `p`. Decided generator by
    /// generator: `ann(M) ⊆ p` iff some `(N : e_i) ⊆ p`.
    pub fn support_contains(&self, p: &Ideal) -> Result<bool> {
        check_same(&self.ring, p.ring())?;
        for i in 0..self.rank {
            let e = FreeElement::basis(&self.ring, self.rank, i);
            if self.relations.contains(&e)? {
                continue;
            }
            if p.contains_ideal(&colon_by_element(&self.relations, &e)?)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `dim R / ann(M)` from the initial ideal of the annihilator; `-1` for
    /// the zero module.
    pub fn krull_dimension(&self) -> Result<i64> {
        self.annihilator()?.dimension()
    }

    /// `M ⊗ R[t]`: the same presentation over the ring with one fresh
    /// variable appended.
    pub fn adjoin_variable(&self) -> Result<FPModule> {
        let name = self.ring.fresh_name("t");
        let ext = self.ring.extend(&name)?;
        self.transfer(&ext)
    }

    /// Rewrites the presentation over `target`, matching variables by name.
    pub fn transfer(&self, target: &Ring) -> Result<FPModule> {
        FPModule::from_submodule(self.relations.transfer(target)?, self.grading.clone())
    }

    /// `M^k` with block-diagonal relations.
    pub fn power(&self, k: usize) -> FPModule {
        FPModule {
            ring: self.ring.clone(),
            rank: k * self.rank,
            relations: self.relations.power(k),
            grading: self.grading.as_ref().map(|s| s.repeat(k)),
        }
    }

    /// Whether a vector of the ambient free module is zero in `M`.
    pub fn is_zero_element(&self, v: &FreeElement) -> Result<bool> {
        self.relations.contains(v)
    }
}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FPModule(R^{} / {:?}, grading {:?})",
            self.rank,
            self.relations.generators(),
            self.grading
        )
    }
}
