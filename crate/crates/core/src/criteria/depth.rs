use crate::error::{Error, Result};
use crate::fpmodule::{ExtComplex, FPModule};
use crate::poly::check_same;

use super::primes::PrimeCandidate;
use super::verdict::DepthValue;

/// `depth M_p = min{i : p ∈ Supp Ext^i(R/p, M)}`, `+∞` when `M_p = 0`.
/// The search stops at the number of variables.
pub fn local_depth(m: &FPModule, p: &PrimeCandidate) -> Result<DepthValue> {
    check_same(m.ring(), p.ideal().ring())?;
    if !m.support_contains(p.ideal())? {
        return Ok(DepthValue::Infinite);
    }
    let n = m.ring().nvars();
    let ext = ExtComplex::new(p.ideal(), m, n)?;
    for i in 0..=n {
        if ext.subquotient(i)?.support_contains(p.ideal())? {
            return Ok(DepthValue::Finite(i));
        }
    }
    Err(Error::SearchExhausted { bound: n })
}

/// Depth at the irrelevant ideal. For graded modules this is the depth of
/// `M`; the zero module has depth `+∞`.
pub fn depth_ext(m: &FPModule) -> Result<DepthValue> {
    local_depth(m, &PrimeCandidate::irrelevant(m.ring()))
}
