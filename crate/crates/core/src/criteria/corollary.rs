use crate::error::{Error, Result};
use crate::fpmodule::FPModule;
use crate::groebner::{radical_membership, Ideal};
use crate::poly::Polynomial;

use super::depth::depth_ext;
use super::regular::is_regular;
use super::verdict::{DepthValue, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corollary2Outcome {
    /// Hypothesis and premise hold, and `g` is regular.
    Confirmed,
    HypothesisNotSatisfied,
    /// `f` is not regular, so nothing is claimed about `g`.
    PremiseNotSatisfied,
    /// Hypothesis and premise hold but `g` is not regular.
    Inconsistent,
}

impl Corollary2Outcome {
    pub fn describe(self) -> &'static str {
        match self {
            Corollary2Outcome::Confirmed => "confirmed",
            Corollary2Outcome::HypothesisNotSatisfied => "hypothesis not satisfied",
            Corollary2Outcome::PremiseNotSatisfied => "premise not satisfied",
            Corollary2Outcome::Inconsistent => "inconsistent",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corollary2Report {
    pub hypothesis: bool,
    pub f_regular: Option<Verdict>,
    pub g_regular: Option<Verdict>,
    pub outcome: Corollary2Outcome,
}

/// `Supp(M/gM) ⊆ Supp(M/fM)`, i.e. `ann(M/fM) ⊆ √ann(M/gM)`. For `M = R`
/// this is `f_i ∈ √(g)` for every `i`.
pub fn support_contained(m: &FPModule, f: &[Polynomial], g: &[Polynomial]) -> Result<bool> {
    let ring = m.ring();
    let (big, small) = if m.rank() == 1 && m.relations().is_zero() {
        (Ideal::new(ring, f.to_vec())?, Ideal::new(ring, g.to_vec())?)
    } else {
        (
            m.quotient_by_sequence(f)?.annihilator()?,
            m.quotient_by_sequence(g)?.annihilator()?,
        )
    };
    for a in big.generators() {
        if !radical_membership(a, &small)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If `Supp(M/gM) ⊆ Supp(M/fM)` and `f` is regular on `M`, then `g` is too.
pub fn corollary2_check(m: &FPModule, f: &[Polynomial], g: &[Polynomial]) -> Result<Corollary2Report> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch(format!(
            "sequences of lengths {} and {}",
            f.len(),
            g.len()
        )));
    }
    if !support_contained(m, f, g)? {
        return Ok(Corollary2Report {
            hypothesis: false,
            f_regular: None,
            g_regular: None,
            outcome: Corollary2Outcome::HypothesisNotSatisfied,
        });
    }
    let fv = is_regular(f, m)?;
    if !fv.holds {
        return Ok(Corollary2Report {
            hypothesis: true,
            f_regular: Some(fv),
            g_regular: None,
            outcome: Corollary2Outcome::PremiseNotSatisfied,
        });
    }
    let gv = is_regular(g, m)?;
    let outcome = if gv.holds {
        Corollary2Outcome::Confirmed
    } else {
        Corollary2Outcome::Inconsistent
    };
    Ok(Corollary2Report {
        hypothesis: true,
        f_regular: Some(fv),
        g_regular: Some(gv),
        outcome,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SopOutcome {
    /// A system of parameters on a Cohen–Macaulay module, and regular.
    Confirmed,
    NotSystemOfParameters,
    NotCohenMacaulay,
    /// A system of parameters on a Cohen–Macaulay module that is not regular.
    Inconsistent,
}

impl SopOutcome {
    pub fn describe(self) -> &'static str {
        match self {
            SopOutcome::Confirmed => "confirmed",
            SopOutcome::NotSystemOfParameters => "not a system of parameters",
            SopOutcome::NotCohenMacaulay => "not Cohen-Macaulay",
            SopOutcome::Inconsistent => "inconsistent",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SopReport {
    pub dimension: i64,
    pub quotient_dimension: i64,
    pub depth: DepthValue,
    pub is_sop: bool,
    pub is_cohen_macaulay: bool,
    pub regular: Option<Verdict>,
    pub outcome: SopOutcome,
}

/// On a graded Cohen–Macaulay module every homogeneous system of parameters
/// is a regular sequence.
pub fn sop_regular_check(m: &FPModule, f: &[Polynomial]) -> Result<SopReport> {
    if !m.is_graded() {
        return Err(Error::Ungraded);
    }
    if m.is_zero()? {
        return Err(Error::Precondition("the module is zero".into()));
    }
    if let Some(p) = f.iter().find(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous(p.to_string()));
    }
    let dimension = m.krull_dimension()?;
    if f.len() as i64 != dimension {
        return Err(Error::LengthMismatch(format!(
            "{} elements for a module of dimension {dimension}",
            f.len()
        )));
    }
    let quotient_dimension = m.quotient_by_sequence(f)?.krull_dimension()?;
    let is_sop = quotient_dimension <= 0;
    let depth = depth_ext(m)?;
    let is_cohen_macaulay = depth == DepthValue::Finite(dimension as usize);
    let (regular, outcome) = if !is_sop {
        (None, SopOutcome::NotSystemOfParameters)
    } else if !is_cohen_macaulay {
        (None, SopOutcome::NotCohenMacaulay)
    } else {
        let v = is_regular(f, m)?;
        let o = if v.holds {
            SopOutcome::Confirmed
        } else {
            SopOutcome::Inconsistent
        };
        (Some(v), o)
    };
    Ok(SopReport {
        dimension,
        quotient_dimension,
        depth,
        is_sop,
        is_cohen_macaulay,
        regular,
        outcome,
    })
}

