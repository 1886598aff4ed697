use crate::error::{Error, Result};
use crate::poly::{check_same, Monomial, Polynomial, Ring};

use super::engine::{Engine, Vector};
use super::{FreeElement, ModuleOrder};

/// Whether a basis lives in the ring itself or in a free module `R^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Ideal,
    Free(usize),
}

impl Ambient {
    pub fn rank(self) -> usize {
        match self {
            Ambient::Ideal => 1,
            Ambient::Free(s) => s,
        }
    }
}

/// A Gröbner basis for an ideal or a submodule of a free module, for a
/// fixed module order. Bases produced by Buchberger's algorithm are reduced;
/// bases produced by the Schreyer construction are only auto-reduced.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    ambient: Ambient,
    order: ModuleOrder,
    elements: Vec<Vector>,
}

impl GroebnerBasis {
    pub(crate) fn compute(
        ring: &Ring,
        ambient: Ambient,
        order: ModuleOrder,
        gens: &[Vector],
    ) -> Result<Self> {
        let elements = Engine::new(&order, ring.degree_cap()).groebner(gens)?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            ambient,
            order,
            elements,
        })
    }

    pub(crate) fn from_parts(
        ring: &Ring,
        ambient: Ambient,
        order: ModuleOrder,
        elements: Vec<Vector>,
    ) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            ambient,
            order,
            elements,
        }
    }

    pub(crate) fn engine(&self) -> Engine<'_> {
        Engine::new(&self.order, self.ring.degree_cap())
    }

    pub(crate) fn vectors(&self) -> &[Vector] {
        &self.elements
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.ambient.rank()
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements as polynomials (first component), for ideal bases.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements()
            .into_iter()
            .map(|v| v.component(0).clone())
            .collect()
    }

    pub fn elements(&self) -> Vec<FreeElement> {
        self.elements
            .iter()
            .map(|v| FreeElement::from_vector(&self.ring, self.rank(), v))
            .collect()
    }

    /// Leading terms `(monomial, position)` in basis order.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elements
            .iter()
            .map(|v| (v.terms[0].mon.clone(), v.terms[0].pos))
            .collect()
    }

    pub fn normal_form(&self, v: &FreeElement) -> Result<FreeElement> {
        check_same(&self.ring, v.ring())?;
        if v.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: v.rank(),
            });
        }
        let e = self.engine();
        let r = e.reduce(&v.to_vector(&e), &self.elements);
        Ok(FreeElement::from_vector(&self.ring, self.rank(), &r))
    }

    pub fn normal_form_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        let v = FreeElement::new(&self.ring, vec![f.clone()])?;
        Ok(self.normal_form(&v)?.component(0).clone())
    }

    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form_poly(f)?.is_zero())
    }

    /// True when the basis generates the whole ambient module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank()).all(|i| {
            self.elements
                .iter()
                .any(|v| v.terms[0].pos == i && v.terms[0].mon.is_one())
        })
    }

    /// Re-checks the Buchberger criterion on the stored elements.
    pub fn verify(&self) -> bool {
        self.engine().is_groebner(&self.elements)
    }

    /// No leading term divides another.
    pub fn is_auto_reduced(&self) -> bool {
        let leads = self.leading_terms();
        leads.iter().enumerate().all(|(i, (m, p))| {
            leads
                .iter()
                .enumerate()
                .all(|(j, (n, q))| i == j || p != q || !n.divides(m))
        })
    }

    /// Whether every element is a single term `m * e_i`.
    pub fn is_monomial(&self) -> bool {
        self.elements.iter().all(Vector::is_monomial)
    }
}

/// Reduced Gröbner basis of an ideal in the ring's order.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let order = ModuleOrder::TermOverPosition(ring.order());
    let engine = Engine::new(&order, ring.degree_cap());
    let mut vs = Vec::with_capacity(gens.len());
    for g in gens {
        check_same(ring, g.ring())?;
        vs.push(FreeElement::new(ring, vec![g.clone()])?.to_vector(&engine));
    }
    GroebnerBasis::compute(ring, Ambient::Ideal, order, &vs)
}

/// Reduced Gröbner basis of a submodule of `R^rank`, term over position.
pub fn buchberger_module(ring: &Ring, rank: usize, gens: &[FreeElement]) -> Result<GroebnerBasis> {
    let order = ModuleOrder::TermOverPosition(ring.order());
    let engine = Engine::new(&order, ring.degree_cap());
    let mut vs = Vec::with_capacity(gens.len());
    for g in gens {
        check_same(ring, g.ring())?;
        if g.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: g.rank(),
            });
        }
        vs.push(g.to_vector(&engine));
    }
    GroebnerBasis::compute(ring, Ambient::Free(rank), order, &vs)
}
