use crate::error::Result;
use crate::groebner::{FreeElement, Ideal};
use crate::poly::{check_same, Polynomial};

use super::module::FPModule;
use super::resolution::resolution_columns;
use super::subquotient::Subquotient;
use super::submodule::{preimage, Submodule};

/// `Ext^i(R/I, M)` for all `i` up to a bound, sharing one resolution of
/// `R/I`. `Hom(F_j, M) = M^{b_j}` and the coboundary `M^{b_j} -> M^{b_j+1}`
/// is the transpose of `d_{j+1}` acting blockwise.
pub(crate) struct ExtComplex {
    module: FPModule,
    maps: Vec<Vec<FreeElement>>,
    ranks: Vec<usize>,
}

impl ExtComplex {
    /// Prepares `Ext^i` for `i <= max_index`.
    pub fn new(ideal: &Ideal, module: &FPModule, max_index: usize) -> Result<ExtComplex> {
        check_same(ideal.ring(), module.ring())?;
        let quotient = FPModule::cyclic(ideal);
        let maps = resolution_columns(&quotient, max_index + 1)?;
        let mut ranks = vec![1];
        ranks.extend(maps.iter().map(Vec::len));
        Ok(ExtComplex {
            module: module.clone(),
            maps,
            ranks,
        })
    }

    /// Columns of the coboundary `M^{b_j} -> M^{b_{j+1}}` on ambient free
    /// modules.
    fn coboundary(&self, j: usize) -> Vec<FreeElement> {
        let ring = self.module.ring();
        let m = self.module.rank();
        let (bj, bn) = (self.ranks[j], self.ranks[j + 1]);
        let d = &self.maps[j];
        let mut cols = Vec::with_capacity(m * bj);
        for k in 0..bj {
            for c in 0..m {
                let mut comps = vec![Polynomial::zero(ring); m * bn];
                for (l, col) in d.iter().enumerate() {
                    comps[l * m + c] = col.component(k).clone();
                }
                cols.push(FreeElement::new(ring, comps).expect("same ring"));
            }
        }
        cols
    }

    pub fn subquotient(&self, i: usize) -> Result<Subquotient> {
        let ring = self.module.ring();
        let m = self.module.rank();
        let rel = self.module.relations();
        let (bi, bn) = (self.ranks[i], self.ranks[i + 1]);
        let cycles = if bn == 0 || m == 0 {
            Submodule::everything(ring, m * bi)
        } else {
            preimage(ring, &self.coboundary(i), &rel.power(bn))?
        };
        let mut boundaries = rel.power(bi);
        if i > 0 {
            let img = Submodule::new(ring, m * bi, self.coboundary(i - 1))?;
            boundaries = boundaries.sum(&img)?;
        }
        Ok(Subquotient::new(cycles.generators().to_vec(), boundaries, None))
    }
}

/// `Ext^i_R(R/I, M)`, presented as a module.
pub fn ext_module(i: usize, ideal: &Ideal, module: &FPModule) -> Result<FPModule> {
    ExtComplex::new(ideal, module, i)?.subquotient(i)?.present()
}
