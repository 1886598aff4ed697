use std::fmt;

use crate::error::{Error, Result};
use crate::fpmodule::{ExtComplex, FPModule};
use crate::groebner::Ideal;
use crate::poly::Ring;

/// How a candidate's primality is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeAssertion {
    /// Taken on the caller's word.
    UserAsserted,
    /// Generated by a set of variables, hence prime.
    VerifiedMonomial,
}

/// An ideal treated as a prime. Monomial primes are recognised
/// structurally; anything else is the caller's assertion.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeCandidate {
    ideal: Ideal,
    variables: Option<Vec<usize>>,
}

impl PrimeCandidate {
    /// Rejects the unit ideal; stores the reduced Gröbner basis.
    pub fn new(ideal: &Ideal) -> Result<PrimeCandidate> {
        let reduced = ideal.reduced()?;
        if reduced.is_unit()? {
            return Err(Error::UnitIdeal);
        }
        let variables = reduced
            .generators()
            .iter()
            .map(|g| {
                let (m, _) = g.leading_term()?;
                (g.terms().len() == 1 && m.degree() == 1).then(|| m.support().next().expect("degree one"))
            })
            .collect::<Option<Vec<usize>>>()
            .map(|mut v| {
                v.sort_unstable();
                v
            });
        let ideal = match &variables {
            Some(v) => Ideal::from_variables(ideal.ring(), v),
            None => reduced,
        };
        Ok(PrimeCandidate { ideal, variables })
    }

    /// The prime generated by the variables with the given indices.
    pub fn from_variables(ring: &Ring, indices: &[usize]) -> PrimeCandidate {
        let mut v = indices.to_vec();
        v.sort_unstable();
        v.dedup();
        PrimeCandidate {
            ideal: Ideal::from_variables(ring, &v),
            variables: Some(v),
        }
    }

    /// The irrelevant ideal `(x_1, ..., x_n)`.
    pub fn irrelevant(ring: &Ring) -> PrimeCandidate {
        let all: Vec<usize> = (0..ring.nvars()).collect();
        PrimeCandidate::from_variables(ring, &all)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn assertion(&self) -> PrimeAssertion {
        if self.variables.is_some() {
            PrimeAssertion::VerifiedMonomial
        } else {
            PrimeAssertion::UserAsserted
        }
    }

    /// Variable indices, for monomial primes.
    pub fn variables(&self) -> Option<&[usize]> {
        self.variables.as_deref()
    }

    /// Sort key: monomial primes by size then indices, others after by text.
    pub(crate) fn sort_key(&self) -> (usize, Vec<usize>, String) {
        match &self.variables {
            Some(v) => (v.len(), v.clone(), String::new()),
            None => (usize::MAX, Vec::new(), self.to_string()),
        }
    }
}

impl fmt::Display for PrimeCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    /// Exactly the associated primes (from monomial enumeration).
    Complete,
    /// Caller-supplied candidates; other primes may be missing.
    CandidatesOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrimeSet {
    pub primes: Vec<PrimeCandidate>,
    pub completeness: Completeness,
}

impl PrimeSet {
    pub fn candidates(mut primes: Vec<PrimeCandidate>) -> PrimeSet {
        primes.sort_by_key(PrimeCandidate::sort_key);
        PrimeSet {
            primes,
            completeness: Completeness::CandidatesOnly,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.completeness == Completeness::Complete
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeMembership {
    pub in_supp: bool,
    pub in_ass: bool,
}

/// `p ∈ Ass(M)` iff `p ∈ Supp Hom(R/p, M)`.
pub(crate) fn in_ass(m: &FPModule, p: &PrimeCandidate) -> Result<bool> {
    ExtComplex::new(p.ideal(), m, 0)?
        .subquotient(0)?
        .support_contains(p.ideal())
}

pub fn prime_membership(m: &FPModule, p: &PrimeCandidate) -> Result<PrimeMembership> {
    let in_supp = m.support_contains(p.ideal())?;
    let in_ass = in_supp && in_ass(m, p)?;
    Ok(PrimeMembership { in_supp, in_ass })
}

/// Whether the relations have a Gröbner basis of monomial vectors, so the
/// module is isomorphic to one with monomial relations.
pub fn is_monomial_presentable(m: &FPModule) -> Result<bool> {
    if m.relations().is_zero() {
        return Ok(true);
    }
    Ok(m.relations().groebner()?.is_monomial())
}

/// All `2^n` variable-subset primes, smallest first.
pub(crate) fn monomial_primes(ring: &Ring) -> Vec<PrimeCandidate> {
    let n = ring.nvars();
    let mut out: Vec<PrimeCandidate> = (0u64..(1u64 << n))
        .map(|mask| {
            let vars: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            PrimeCandidate::from_variables(ring, &vars)
        })
        .collect();
    out.sort_by_key(PrimeCandidate::sort_key);
    out
}

/// The primes of `Supp(M)` generated by variables.
pub fn monomial_support(m: &FPModule) -> Result<Vec<PrimeCandidate>> {
    let mut out = Vec::new();
    for p in monomial_primes(m.ring()) {
        if m.support_contains(p.ideal())? {
            out.push(p);
        }
    }
    Ok(out)
}

/// `Ass(M)` for a module with monomial relations: every associated prime
/// is then generated by variables, so testing all `2^n` of them is exact.
pub fn monomial_ass(m: &FPModule) -> Result<PrimeSet> {
    if !is_monomial_presentable(m)? {
        return Err(Error::NonMonomial(
            "associated primes are only enumerated for monomial relations".into(),
        ));
    }
    let mut primes = Vec::new();
    for p in monomial_support(m)? {
        if in_ass(m, &p)? {
            primes.push(p);
        }
    }
    Ok(PrimeSet {
        primes,
        completeness: Completeness::Complete,
    })
}
