use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg;
use crate::poly::{monomials_of_degree, Monomial};

use super::module::FPModule;

fn basis_of_degree(nvars: usize, shifts: &[i32], d: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (i, &s) in shifts.iter().enumerate() {
        let e = d - s as i64;
        if e >= 0 {
            out.extend(monomials_of_degree(nvars, e as u32).into_iter().map(|m| (i, m)));
        }
    }
    out
}

impl FPModule {
    /// `dim_k M_d` by dense linear algebra: the span of all `x^a r_j` of
    /// degree `d` inside `(R^rank)_d`. No Gröbner basis is used.
    pub fn hilbert_function(&self, d: i64) -> Result<u64> {
        let shifts = self.grading().ok_or(Error::Ungraded)?;
        let ring = self.ring();
        let n = ring.nvars();
        let basis = basis_of_degree(n, shifts, d);
        let index: HashMap<(usize, Monomial), usize> =
            basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        let zero = ring.field().zero();
        let mut rows: Vec<Vec<FieldElem>> = Vec::new();
        for r in self.relations().generators() {
            let Some(Some(deg)) = r.homogeneous_degree(shifts) else {
                continue;
            };
            if deg > d {
                continue;
            }
            for mult in monomials_of_degree(n, (d - deg) as u32) {
                let mut row = vec![zero.clone(); basis.len()];
                for (i, c) in r.components().iter().enumerate() {
                    for (m, k) in c.terms() {
                        row[index[&(i, m.mul(&mult))]] = k.clone();
                    }
                }
                rows.push(row);
            }
        }
        Ok((basis.len() - linalg::rank(&rows)) as u64)
    }

    /// The number of standard monomials of degree `d`: terms `m e_i` not
    /// divisible by any leading term of the relations' Gröbner basis.
    pub fn standard_monomial_count(&self, d: i64) -> Result<u64> {
        let shifts = self.grading().ok_or(Error::Ungraded)?;
        let leads = if self.relations().is_zero() {
            Vec::new()
        } else {
            self.relations().groebner()?.leading_terms()
        };
        let count = basis_of_degree(self.ring().nvars(), shifts, d)
            .into_iter()
            .filter(|(i, m)| !leads.iter().any(|(l, p)| p == i && l.divides(m)))
            .count();
        Ok(count as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::PolyRing;

    #[test]
    fn polynomial_ring_counts() {
        let r = PolyRing::standard(&["x", "y"]);
        let m = FPModule::free(&r, 1);
        for d in 0..6 {
            assert_eq!(m.hilbert_function(d).unwrap(), d as u64 + 1);
        }
    }

    #[test]
    fn quotient_counts_agree() {
        let r = PolyRing::standard(&["x", "y"]);
        let m = FPModule::cyclic(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap());
        assert_eq!(m.hilbert_function(3).unwrap(), 1);
        let m = FPModule::cyclic(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap());
        assert_eq!(m.hilbert_function(1).unwrap(), 2);
        for d in 2..6 {
            assert_eq!(m.hilbert_function(d).unwrap(), 0);
            assert_eq!(m.standard_monomial_count(d).unwrap(), 0);
        }
    }

    #[test]
    fn ungraded_is_rejected() {
        let r = PolyRing::standard(&["x"]);
        let m = FPModule::cyclic(&Ideal::parse(&r, &["x - 1"]).unwrap());
        assert_eq!(m.hilbert_function(1), Err(Error::Ungraded));
    }
}
