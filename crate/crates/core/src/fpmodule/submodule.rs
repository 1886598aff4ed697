use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_module, syzygies, Engine, FreeElement, GroebnerBasis, Ideal, ModuleOrder, Vector,
};
use crate::poly::{check_same, Polynomial, Ring};

/// A submodule of the free module `R^rank`, given by generators, with a
/// lazily computed Gröbner basis (term over position unless supplied).
#[derive(Clone)]
pub struct Submodule {
    ring: Ring,
    rank: usize,
    generators: Vec<FreeElement>,
    gb: OnceLock<GroebnerBasis>,
}

impl Submodule {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, rank: usize, generators: Vec<FreeElement>) -> Result<Submodule> {
        for g in &generators {
            check_same(ring, g.ring())?;
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring, rank: usize) -> Submodule {
        Submodule::new(ring, rank, Vec::new()).expect("empty")
    }

    /// The whole free module `R^rank`.
    pub fn everything(ring: &Ring, rank: usize) -> Submodule {
        let gens = (0..rank).map(|i| FreeElement::basis(ring, rank, i)).collect();
        Submodule::new(ring, rank, gens).expect("basis")
    }

    /// A submodule whose generators are already a Gröbner basis.
    pub(crate) fn with_basis(ring: &Ring, rank: usize, gb: GroebnerBasis) -> Submodule {
        let lock = OnceLock::new();
        let gens = gb.elements();
        let _ = lock.set(gb);
        Submodule {
            ring: ring.clone(),
            rank,
            generators: gens,
            gb: lock,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeElement] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger_module(&self.ring, self.rank, &self.generators)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// The same submodule, generated by its Gröbner basis.
    pub fn reduced(&self) -> Result<Submodule> {
        Ok(Submodule::with_basis(&self.ring, self.rank, self.groebner()?.clone()))
    }

    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        if self.is_zero() {
            check_same(&self.ring, v.ring())?;
            return Ok(v.is_zero());
        }
        self.groebner()?.contains(v)
    }

    pub fn normal_form(&self, v: &FreeElement) -> Result<FreeElement> {
        if self.is_zero() {
            return Ok(v.clone());
        }
        self.groebner()?.normal_form(v)
    }

    pub fn contains_submodule(&self, other: &Submodule) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    /// Whether the submodule is all of `R^rank`.
    pub fn is_everything(&self) -> Result<bool> {
        if self.rank == 0 {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        Ok(self.groebner()?.is_everything())
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Submodule::new(&self.ring, self.rank, gens)
    }

    /// `N + (f_1, ..., f_k) R^rank`.
    pub fn plus_multiples(&self, f: &[Polynomial]) -> Result<Submodule> {
        let mut gens = self.generators.clone();
        for fj in f {
            check_same(&self.ring, fj.ring())?;
            for i in 0..self.rank {
                gens.push(FreeElement::single(&self.ring, self.rank, i, fj.clone()));
            }
        }
        Submodule::new(&self.ring, self.rank, gens)
    }

    /// `N^k` inside `R^(k * rank)`, copy `c` occupying positions
    /// `c * rank .. (c + 1) * rank`.
    pub fn power(&self, k: usize) -> Submodule {
        let mut gens = Vec::with_capacity(k * self.generators.len());
        for c in 0..k {
            for g in &self.generators {
                let mut comps = vec![Polynomial::zero(&self.ring); k * self.rank];
                comps[c * self.rank..(c + 1) * self.rank].clone_from_slice(g.components());
                gens.push(FreeElement::new(&self.ring, comps).expect("same ring"));
            }
        }
        Submodule::new(&self.ring, k * self.rank, gens).expect("ranks match")
    }

    pub fn transfer(&self, target: &Ring) -> Result<Submodule> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.transfer(target))
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(target, self.rank, gens)
    }
}

impl PartialEq for Submodule {
    /// Structural equality of generator lists; use [`Submodule::equals`]
    /// for equality as submodules.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.rank == other.rank && self.generators == other.generators
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule(rank {}, {:?})", self.rank, self.generators)
    }
}

/// `{v in R^a : sum_j v_j columns[j] in target}`, where the columns live in
/// `R^b` and `target` is a submodule of `R^b`. Returned generated by a
/// Gröbner basis.
pub(crate) fn preimage(
    ring: &Ring,
    columns: &[FreeElement],
    target: &Submodule,
) -> Result<Submodule> {
    let a = columns.len();
    let b = target.rank();
    for c in columns {
        check_same(ring, c.ring())?;
        if c.rank() != b {
            return Err(Error::RankMismatch {
                expected: b,
                found: c.rank(),
            });
        }
    }
    if a == 0 {
        return Ok(Submodule::zero(ring, 0));
    }
    let top = ModuleOrder::TermOverPosition(ring.order());
    let engine = Engine::new(&top, ring.degree_cap());
    let mut gens: Vec<Vector> = columns.iter().map(|c| c.to_vector(&engine)).collect();
    if !target.is_zero() {
        let gb = target.groebner()?;
        gens.extend(gb.elements().iter().map(|g| g.to_vector(&engine)));
    }
    let syz = syzygies(ring, b, &gens)?;
    let projected: Vec<FreeElement> = syz
        .iter()
        .map(|v| {
            let head = Vector {
                terms: v.terms.iter().filter(|t| t.pos < a).cloned().collect(),
            };
            FreeElement::from_vector(ring, a, &head)
        })
        .collect();
    Submodule::new(ring, a, projected)?.reduced()
}

/// `(N : f) = {v : f v in N}`, via syzygies of `f e_1, ..., f e_m` together
/// with the generators of `N`.
pub fn colon_submodule(n: &Submodule, f: &Polynomial) -> Result<Submodule> {
    check_same(n.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ring = n.ring();
    let cols: Vec<FreeElement> = (0..n.rank())
        .map(|i| FreeElement::single(ring, n.rank(), i, f.clone()))
        .collect();
    preimage(ring, &cols, n)
}

/// `(N : v) = {a in R : a v in N}` as an ideal.
pub(crate) fn colon_by_element(n: &Submodule, v: &FreeElement) -> Result<Ideal> {
    let sub = preimage(n.ring(), std::slice::from_ref(v), n)?;
    let gens = sub
        .generators()
        .iter()
        .map(|g| g.component(0).clone())
        .collect();
    Ideal::new(n.ring(), gens)
}
