use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fpmodule::FPModule;
use crate::poly::Polynomial;

use super::depth::local_depth;
use super::primes::{
    in_ass, is_monomial_presentable, monomial_ass, monomial_support, Completeness, PrimeCandidate,
    PrimeSet,
};
use super::regular::is_regular;
use super::verdict::{DepthValue, Verdict};

#[derive(Debug, Clone, PartialEq)]
pub struct PrimeRow {
    pub prime: PrimeCandidate,
    pub local_depth: DepthValue,
    pub meets_bound: bool,
}

/// The three equivalent conditions for `f` to be regular on `M`:
/// (i) regularity, (ii) `depth M_p >= r` on `Supp(M/fM)`, (iii) the same on
/// `Ass(M/fM)`. Condition (ii) is only evaluated on the primes listed in
/// `supp_rows`.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub length: usize,
    pub regular: Verdict,
    pub ass: PrimeSet,
    pub ass_rows: Vec<PrimeRow>,
    pub supp_rows: Vec<PrimeRow>,
    pub condition_iii: bool,
    pub condition_ii: bool,
    pub inconsistencies: Vec<String>,
}

impl TheoremReport {
    pub fn consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }
}

struct DepthCache<'a> {
    module: &'a FPModule,
    seen: BTreeMap<String, DepthValue>,
}

impl DepthCache<'_> {
    fn row(&mut self, p: &PrimeCandidate, r: usize) -> Result<PrimeRow> {
        let key = p.to_string();
        let d = match self.seen.get(&key) {
            Some(d) => *d,
            None => {
                let d = local_depth(self.module, p)?;
                self.seen.insert(key, d);
                d
            }
        };
        Ok(PrimeRow {
            prime: p.clone(),
            local_depth: d,
            meets_bound: d.at_least(r),
        })
    }
}

/// Evaluates (i) by Koszul homology and (iii)/(ii) by local depths.
///
/// When `M/fM` has monomial relations its associated primes are enumerated
/// exactly and (ii) is checked on its monomial support primes plus any
/// candidates. Otherwise only the supplied candidates are used (those in
/// `Ass(M/fM)` for (iii), those in `Supp(M/fM)` for (ii)); with `strict` this
/// is an error. Any disagreement that the equivalence rules out is recorded
/// as an inconsistency.
pub fn theorem_crosscheck(
    m: &FPModule,
    f: &[Polynomial],
    candidates: Option<&PrimeSet>,
    strict: bool,
) -> Result<TheoremReport> {
    let r = f.len();
    let quotient = m.quotient_by_sequence(f)?;
    let extra: &[PrimeCandidate] = candidates.map_or(&[], |c| &c.primes);

    let (ass, mut supp_primes) = if is_monomial_presentable(&quotient)? {
        (monomial_ass(&quotient)?, monomial_support(&quotient)?)
    } else {
        if candidates.is_none() {
            return Err(Error::NonMonomial(
                "M/fM is not monomial; supply candidate primes".into(),
            ));
        }
        if strict {
            return Err(Error::IncompleteInStrictMode);
        }
        let mut ass = Vec::new();
        for p in extra {
            if quotient.support_contains(p.ideal())? && in_ass(&quotient, p)? {
                ass.push(p.clone());
            }
        }
        (PrimeSet::candidates(ass), Vec::new())
    };
    for p in extra {
        if !supp_primes.iter().any(|q| q.ideal() == p.ideal())
            && quotient.support_contains(p.ideal())?
        {
            supp_primes.push(p.clone());
        }
    }
    supp_primes.sort_by_key(PrimeCandidate::sort_key);

    let regular = is_regular(f, m)?;
    let mut cache = DepthCache {
        module: m,
        seen: BTreeMap::new(),
    };
    let ass_rows = ass
        .primes
        .iter()
        .map(|p| cache.row(p, r))
        .collect::<Result<Vec<_>>>()?;
    let supp_rows = supp_primes
        .iter()
        .map(|p| cache.row(p, r))
        .collect::<Result<Vec<_>>>()?;
    let condition_iii = ass_rows.iter().all(|row| row.meets_bound);
    let condition_ii = supp_rows.iter().all(|row| row.meets_bound);

    let mut inconsistencies = Vec::new();
    if regular.holds {
        for row in ass_rows.iter().chain(&supp_rows) {
            if !row.meets_bound {
                inconsistencies.push(format!(
                    "(i) holds but depth at {} is {} < {r}",
                    row.prime, row.local_depth
                ));
            }
        }
    } else if ass.completeness == Completeness::Complete && condition_iii {
        inconsistencies.push(format!(
            "(iii) holds on the complete set Ass(M/fM) but (i) fails"
        ));
    }
    Ok(TheoremReport {
        length: r,
        regular,
        ass,
        ass_rows,
        supp_rows,
        condition_iii,
        condition_ii,
        inconsistencies,
    })
}
