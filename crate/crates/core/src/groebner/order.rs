use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Monomial, TermOrder};

/// Extension of a monomial order to module terms `m * e_i`.
///
/// In every variant a smaller basis index counts as larger, so `e_0` is the
/// biggest basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Compare monomials first, then positions.
    TermOverPosition(TermOrder),
    /// Compare positions first, then monomials.
    PositionOverTerm(TermOrder),
    /// Positions below `split` dominate all others; term-over-position
    /// inside each block. An element whose leading term lies in the second
    /// block has no terms in the first.
    Split { order: TermOrder, split: usize },
    /// Order induced on a syzygy module by the leading terms of a Gröbner
    /// basis, possibly iterated along a resolution.
    Schreyer(Arc<SchreyerFrame>),
}

/// Flattened description of an (iterated) Schreyer order.
///
/// Basis vector `e_i` of this level maps to the base-level term
/// `images[i] = (monomial, position)`. Ties between equal base images are
/// broken level by level through `chains[i]`, the sequence of basis indices
/// that `e_i` passes through from level 1 up to this level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreyerFrame {
    base: ModuleOrder,
    images: Vec<(Monomial, usize)>,
    chains: Vec<Vec<usize>>,
}

impl SchreyerFrame {
    pub fn level(&self) -> usize {
        self.chains.first().map_or(1, Vec::len)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn base(&self) -> &ModuleOrder {
        &self.base
    }
}

impl ModuleOrder {
    pub fn term_order(&self) -> TermOrder {
        match self {
            ModuleOrder::TermOverPosition(o) | ModuleOrder::PositionOverTerm(o) => *o,
            ModuleOrder::Split { order, .. } => *order,
            ModuleOrder::Schreyer(f) => f.base.term_order(),
        }
    }

    pub fn is_schreyer(&self) -> bool {
        matches!(self, ModuleOrder::Schreyer(_))
    }

    pub fn cmp(&self, am: &Monomial, ai: usize, bm: &Monomial, bi: usize) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition(o) => o.cmp(am, bm).then_with(|| bi.cmp(&ai)),
            ModuleOrder::PositionOverTerm(o) => bi.cmp(&ai).then_with(|| o.cmp(am, bm)),
            ModuleOrder::Split { order, split } => (ai < *split)
                .cmp(&(bi < *split))
                .then_with(|| order.cmp(am, bm))
                .then_with(|| bi.cmp(&ai)),
            ModuleOrder::Schreyer(f) => {
                let (la, pa) = &f.images[ai];
                let (lb, pb) = &f.images[bi];
                f.base
                    .cmp(&am.mul(la), *pa, &bm.mul(lb), *pb)
                    .then_with(|| {
                        for (x, y) in f.chains[ai].iter().zip(&f.chains[bi]) {
                            match y.cmp(x) {
                                Ordering::Equal => continue,
                                o => return o,
                            }
                        }
                        Ordering::Equal
                    })
            }
        }
    }

    /// The Schreyer order on the free module whose basis vectors map to
    /// elements with the given leading terms `(monomial, position)` under
    /// `self`.
    pub fn schreyer(&self, leads: &[(Monomial, usize)]) -> ModuleOrder {
        let frame = match self {
            ModuleOrder::Schreyer(prev) => SchreyerFrame {
                base: prev.base.clone(),
                images: leads
                    .iter()
                    .map(|(m, i)| (m.mul(&prev.images[*i].0), prev.images[*i].1))
                    .collect(),
                chains: leads
                    .iter()
                    .enumerate()
                    .map(|(l, (_, i))| {
                        let mut c = prev.chains[*i].clone();
                        c.push(l);
                        c
                    })
                    .collect(),
            },
            base => SchreyerFrame {
                base: base.clone(),
                images: leads.to_vec(),
                chains: (0..leads.len()).map(|l| vec![l]).collect(),
            },
        };
        ModuleOrder::Schreyer(Arc::new(frame))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn top_and_pot() {
        let top = ModuleOrder::TermOverPosition(TermOrder::Grevlex);
        let pot = ModuleOrder::PositionOverTerm(TermOrder::Grevlex);
        // x e_1 vs y^2 e_0
        assert_eq!(top.cmp(&m(&[1, 0]), 1, &m(&[0, 2]), 0), Ordering::Less);
        assert_eq!(pot.cmp(&m(&[1, 0]), 1, &m(&[0, 2]), 0), Ordering::Less);
        assert_eq!(pot.cmp(&m(&[1, 0]), 0, &m(&[0, 2]), 1), Ordering::Greater);
        assert_eq!(top.cmp(&m(&[1, 0]), 0, &m(&[1, 0]), 1), Ordering::Greater);
    }

    #[test]
    fn schreyer_breaks_ties_by_index() {
        let top = ModuleOrder::TermOverPosition(TermOrder::Grevlex);
        // leads x and y in rank 1
        let s = top.schreyer(&[(m(&[1, 0]), 0), (m(&[0, 1]), 0)]);
        // y e_0 and x e_1 both map to x*y; e_0 wins
        assert_eq!(s.cmp(&m(&[0, 1]), 0, &m(&[1, 0]), 1), Ordering::Greater);
        // x e_1 (image x y) vs x e_0 (image x^2)
        assert_eq!(s.cmp(&m(&[1, 0]), 1, &m(&[1, 0]), 0), Ordering::Less);
    }
}
