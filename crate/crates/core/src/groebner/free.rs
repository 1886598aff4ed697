use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{check_same, Polynomial, Ring};

use super::engine::{Engine, Term, Vector};

/// An element of the free module `R^s`, as a vector of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeElement {
    ring: Ring,
    components: Vec<Polynomial>,
}

impl FreeElement {
    pub fn new(ring: &Ring, components: Vec<Polynomial>) -> Result<Self> {
        for c in &components {
            check_same(ring, c.ring())?;
        }
        Ok(FreeElement {
            ring: ring.clone(),
            components,
        })
    }

    /// Parses each component with the polynomial syntax.
    pub fn parse(ring: &Ring, components: &[&str]) -> Result<Self> {
        let comps = components
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, comps)
    }

    pub fn zero(ring: &Ring, rank: usize) -> Self {
        FreeElement {
            ring: ring.clone(),
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    /// The basis vector `e_i` of `R^rank`.
    pub fn basis(ring: &Ring, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[i] = Polynomial::one(ring);
        v
    }

    /// `f * e_i`.
    pub fn single(ring: &Ring, rank: usize, i: usize, f: Polynomial) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[i] = f;
        v
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, f: &Polynomial) -> Result<FreeElement> {
        let comps = self
            .components
            .iter()
            .map(|c| c.try_mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeElement {
            ring: self.ring.clone(),
            components: comps,
        })
    }

    pub fn try_add(&self, other: &FreeElement) -> Result<FreeElement> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeElement {
            ring: self.ring.clone(),
            components: comps,
        })
    }

    pub fn try_sub(&self, other: &FreeElement) -> Result<FreeElement> {
        self.try_add(&other.scale(&Polynomial::from_i64(&self.ring, -1))?)
    }

    /// Homogeneous of some degree with respect to generator shifts `shifts`
    /// (the term `m e_i` has degree `deg m + shifts[i]`). Returns that degree.
    pub fn homogeneous_degree(&self, shifts: &[i32]) -> Option<Option<i64>> {
        let mut deg: Option<i64> = None;
        for (i, c) in self.components.iter().enumerate() {
            for (m, _) in c.terms() {
                let d = m.degree() as i64 + shifts[i] as i64;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        Some(deg)
    }

    /// Whether this is a single term `c * m * e_i`.
    pub fn is_monomial_vector(&self) -> bool {
        self.components.iter().map(|c| c.terms().len()).sum::<usize>() == 1
    }

    /// Rewrites the components over `target`, matching variables by name.
    pub fn transfer(&self, target: &Ring) -> Result<FreeElement> {
        let comps = self
            .components
            .iter()
            .map(|c| c.transfer(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeElement {
            ring: target.clone(),
            components: comps,
        })
    }

    pub(crate) fn to_vector(&self, engine: &Engine<'_>) -> Vector {
        let terms = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(pos, c)| {
                c.terms().iter().map(move |(m, k)| Term {
                    mon: m.clone(),
                    pos,
                    coeff: k.clone(),
                })
            })
            .collect();
        engine.normalize(terms)
    }

    pub(crate) fn from_vector(ring: &Ring, rank: usize, v: &Vector) -> FreeElement {
        let mut buckets: Vec<Vec<_>> = vec![Vec::new(); rank];
        for t in &v.terms {
            buckets[t.pos].push((t.mon.clone(), t.coeff.clone()));
        }
        FreeElement {
            ring: ring.clone(),
            components: buckets
                .into_iter()
                .map(|b| Polynomial::from_terms(ring, b).expect("same ring"))
                .collect(),
        }
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.len() == 1 {
            return write!(f, "{}", self.components[0]);
        }
        f.write_str("(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement{self}")
    }
}
