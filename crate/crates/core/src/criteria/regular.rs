use crate::error::Result;
use crate::fpmodule::{colon_submodule, FPModule};
use crate::groebner::FreeElement;
use crate::koszul::build_koszul;
use crate::poly::{check_same, Polynomial};

use super::verdict::{partial_quotient, Criterion, Verdict, Witness};

/// Scales a vector so its leading coefficient (first non-zero component,
/// leading term) is one.
pub(crate) fn monic_vector(v: &FreeElement) -> Result<FreeElement> {
    match v.components().iter().find(|c| !c.is_zero()) {
        Some(c) => {
            let inv = c.leading_coeff().expect("non-zero").inv()?;
            v.scale(&Polynomial::constant(v.ring(), inv))
        }
        None => Ok(v.clone()),
    }
}

/// Each `f_i` is a non-zero divisor on `M / (f_1..f_{i-1}) M`, with no
/// requirement that the final quotient be non-zero. The witness is the
/// first `(i, w)` with `f_i w = 0`, `w ≠ 0` there, `w` a reduced normal form.
pub fn is_strongly_regular(f: &[Polynomial], m: &FPModule) -> Result<Verdict> {
    for fi in f {
        check_same(m.ring(), fi.ring())?;
    }
    for i in 0..f.len() {
        let n = partial_quotient(m, &f[..i])?;
        if n.is_everything()? {
            break;
        }
        let candidates = if f[i].is_zero() {
            (0..m.rank())
                .map(|j| FreeElement::basis(m.ring(), m.rank(), j))
                .collect()
        } else {
            colon_submodule(&n, &f[i])?.generators().to_vec()
        };
        for c in candidates {
            let w = n.normal_form(&c)?;
            if !w.is_zero() {
                return Ok(Verdict::negative(
                    Criterion::ColonSequence,
                    Witness::ZeroDivisor {
                        index: i + 1,
                        element: monic_vector(&w)?,
                    },
                ));
            }
        }
    }
    Ok(Verdict::positive(Criterion::ColonSequence))
}

/// `H_i(f; M) = 0` for every `i >= 1`; the witness is a non-boundary cycle
/// in the smallest non-vanishing degree.
pub fn is_regular(f: &[Polynomial], m: &FPModule) -> Result<Verdict> {
    let k = build_koszul(f, m)?;
    for i in 1..=f.len() {
        if let Some(cycle) = k.homology_witness(i)? {
            return Ok(Verdict::negative(
                Criterion::KoszulHomology,
                Witness::Homology {
                    degree: i,
                    cycle: monic_vector(&cycle)?,
                },
            ));
        }
    }
    Ok(Verdict::positive(Criterion::KoszulHomology))
}
