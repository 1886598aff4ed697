use std::fmt;

use crate::error::Result;
use crate::fpmodule::{FPModule, Submodule};
use crate::groebner::{FreeElement, Ideal};
use crate::koszul::build_koszul;
use crate::poly::Polynomial;

/// A depth in `N ∪ {+∞}`; `+∞` exactly for a (locally) zero module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DepthValue {
    Finite(usize),
    Infinite,
}

impl DepthValue {
    pub fn at_least(self, r: usize) -> bool {
        match self {
            DepthValue::Finite(d) => d >= r,
            DepthValue::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            DepthValue::Finite(d) => Some(d),
            DepthValue::Infinite => None,
        }
    }
}

impl fmt::Display for DepthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthValue::Finite(d) => write!(f, "{d}"),
            DepthValue::Infinite => f.write_str("inf"),
        }
    }
}

/// The procedure that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// Successive colon submodules `(N_{i-1} : f_i) = N_{i-1}`.
    ColonSequence,
    /// Vanishing of Koszul homology in positive degrees.
    KoszulHomology,
    /// Local depth bounds at primes.
    LocalDepth,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::ColonSequence => "colon-sequence",
            Criterion::KoszulHomology => "koszul-homology",
            Criterion::LocalDepth => "local-depth",
        }
    }
}

/// Evidence for a negative verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// `f_index w ∈ N_{index-1}` but `w ∉ N_{index-1}` (1-based index).
    ZeroDivisor { index: usize, element: FreeElement },
    /// A cycle of `K_degree` that is not a boundary.
    Homology { degree: usize, cycle: FreeElement },
    /// A prime where the local depth is below the sequence length.
    Prime { prime: Ideal, depth: super::DepthValue },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ZeroDivisor { index, element } => {
                write!(f, "f_{index} kills {element}")
            }
            Witness::Homology { degree, cycle } => write!(f, "H_{degree} contains {cycle}"),
            Witness::Prime { prime, depth } => write!(f, "depth {depth} at {prime}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub criterion: Criterion,
    pub witness: Option<Witness>,
}

/// `relations + (f_1..f_k) R^rank`.
pub(crate) fn partial_quotient(m: &FPModule, f: &[Polynomial]) -> Result<Submodule> {
    m.relations().plus_multiples(f)
}

impl Verdict {
    pub fn positive(criterion: Criterion) -> Verdict {
        Verdict {
            holds: true,
            criterion,
            witness: None,
        }
    }

    pub fn negative(criterion: Criterion, witness: Witness) -> Verdict {
        Verdict {
            holds: false,
            criterion,
            witness: Some(witness),
        }
    }

    /// Re-checks a negative verdict's witness by direct membership
    /// arithmetic, independent of how it was found. Positive verdicts and
    /// prime witnesses re-validate trivially.
    pub fn revalidate(&self, f: &[Polynomial], m: &FPModule) -> Result<bool> {
        match &self.witness {
            None => Ok(self.holds),
            Some(Witness::ZeroDivisor { index, element }) => {
                if *index == 0 || *index > f.len() {
                    return Ok(false);
                }
                let n = partial_quotient(m, &f[..index - 1])?;
                let image = element.scale(&f[index - 1])?;
                Ok(n.contains(&image)? && !n.contains(element)?)
            }
            Some(Witness::Homology { degree, cycle }) => {
                let k = build_koszul(f, m)?;
                let c = k.complex();
                if *degree == 0 || *degree >= c.len() {
                    return Ok(false);
                }
                let boundary = c.differential(*degree).apply(cycle)?;
                if !c.module(degree - 1).is_zero_element(&boundary)? {
                    return Ok(false);
                }
                let mut b = c.module(*degree).relations().clone();
                if degree + 1 < c.len() {
                    let img = Submodule::new(
                        m.ring(),
                        c.module(*degree).rank(),
                        c.differential(degree + 1).columns().to_vec(),
                    )?;
                    b = b.sum(&img)?;
                }
                Ok(!b.contains(cycle)?)
            }
            Some(Witness::Prime { .. }) => Ok(true),
        }
    }
}
