use crate::error::Result;
use crate::groebner::{schreyer_syzygies, Ambient, FreeElement, GroebnerBasis};

use super::map::{Complex, ModuleMap};
use super::module::FPModule;

/// Columns of `d_1, ..., d_length` of a Schreyer resolution of `M`: `d_1`
/// is the Gröbner basis of the relations, each later map the Schreyer
/// syzygies of the previous basis.
pub(crate) fn resolution_columns(m: &FPModule, length: usize) -> Result<Vec<Vec<FreeElement>>> {
    let ring = m.ring();
    let mut out: Vec<Vec<FreeElement>> = Vec::with_capacity(length);
    if length == 0 {
        return Ok(out);
    }
    if m.relations().is_zero() {
        out.resize(length, Vec::new());
        return Ok(out);
    }
    let mut gb: GroebnerBasis = m.relations().groebner()?.clone();
    out.push(gb.elements());
    while out.len() < length {
        if gb.is_empty() {
            out.push(Vec::new());
            continue;
        }
        let (order, syz) = schreyer_syzygies(&gb)?;
        let next = GroebnerBasis::from_parts(ring, Ambient::Free(gb.len()), order, syz);
        out.push(next.elements());
        gb = next;
    }
    Ok(out)
}

/// Degrees of the images of the basis vectors, if all are homogeneous.
fn column_shifts(cols: &[FreeElement], shifts: Option<&[i32]>) -> Option<Vec<i32>> {
    let s = shifts?;
    cols.iter()
        .map(|c| c.homogeneous_degree(s).flatten().map(|d| d as i32))
        .collect()
}

/// `F_length -> ... -> F_1 -> F_0`, `F_0` the ambient free module of `M`.
/// Ranks become zero once the resolution terminates.
pub fn free_resolution(m: &FPModule, length: usize) -> Result<Complex> {
    let ring = m.ring();
    let cols = resolution_columns(m, length)?;
    let f0 = match m.grading() {
        Some(s) => FPModule::present(ring, m.rank(), Vec::new(), Some(s.to_vec()))?,
        None => FPModule::present(ring, m.rank(), Vec::new(), None)?,
    };
    let mut modules = vec![f0];
    let mut maps = Vec::with_capacity(length);
    for c in cols {
        let prev = modules.last().expect("non-empty").clone();
        let shifts = column_shifts(&c, prev.grading());
        let next = FPModule::present(ring, c.len(), Vec::new(), shifts)?;
        maps.push(ModuleMap::unchecked(next.clone(), prev, c)?);
        modules.push(next);
    }
    Complex::unchecked(modules, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::PolyRing;

    #[test]
    fn koszul_resolution_ranks() {
        let r = PolyRing::standard(&["x", "y"]);
        let m = FPModule::cyclic(&Ideal::parse(&r, &["x", "y"]).unwrap());
        let c = free_resolution(&m, 3).unwrap();
        assert_eq!(c.ranks(), vec![1, 2, 1, 0]);
        assert!(c.verify_d_squared().unwrap());
    }

    #[test]
    fn free_module_resolution() {
        let r = PolyRing::standard(&["x", "y"]);
        let c = free_resolution(&FPModule::free(&r, 2), 2).unwrap();
        assert_eq!(c.ranks(), vec![2, 0, 0]);
    }

    #[test]
    fn interior_homology_vanishes() {
        let r = PolyRing::standard(&["x", "y", "z"]);
        let m = FPModule::cyclic(&Ideal::parse(&r, &["x^2", "x*y", "y*z^2"]).unwrap());
        let c = free_resolution(&m, 4).unwrap();
        assert!(c.verify_d_squared().unwrap());
        for i in 1..4 {
            assert!(c.homology_subquotient(i).unwrap().is_zero().unwrap(), "H_{i}");
        }
    }
}
