use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poly::{check_same, Monomial, PolyRing, Polynomial, Ring, TermOrder};

use super::basis::{buchberger, GroebnerBasis};

/// An ideal of a polynomial ring, with a lazily computed, write-once
/// Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            check_same(ring, g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn parse(ring: &Ring, generators: &[&str]) -> Result<Ideal> {
        let gens = generators
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The irrelevant ideal `(x_1, ..., x_n)`.
    pub fn irrelevant(ring: &Ring) -> Ideal {
        Ideal::new(ring, ring.variables_as_polys()).expect("same ring")
    }

    /// The prime generated by the variables with the given indices.
    pub fn from_variables(ring: &Ring, indices: &[usize]) -> Ideal {
        Ideal::new(ring, indices.iter().map(|&i| ring.var(i)).collect()).expect("same ring")
    }

    pub(crate) fn with_basis(ring: &Ring, generators: Vec<Polynomial>, gb: GroebnerBasis) -> Ideal {
        let lock = OnceLock::new();
        let _ = lock.set(gb);
        Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: lock,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.ring, &self.generators)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// The ideal generated by its reduced Gröbner basis.
    pub fn reduced(&self) -> Result<Ideal> {
        let gb = self.groebner()?.clone();
        Ok(Ideal::with_basis(&self.ring, gb.polynomials(), gb))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        self.groebner()?.contains_poly(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner()?.normal_form_poly(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_everything())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut g = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                g.push(a * b);
            }
        }
        Ideal::new(&self.ring, g)
    }

    /// Leading monomials of the reduced Gröbner basis.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner()?
            .leading_terms()
            .into_iter()
            .map(|(m, _)| m)
            .collect())
    }

    /// Whether the ideal is generated by monomials (its reduced basis is).
    pub fn is_monomial(&self) -> Result<bool> {
        Ok(self.groebner()?.is_monomial())
    }

    /// Krull dimension of `R / I`: the largest set of variables containing
    /// the support of no leading monomial; `-1` for the unit ideal.
    pub fn dimension(&self) -> Result<i64> {
        if self.is_unit()? {
            return Ok(-1);
        }
        let leads = self.leading_monomials()?;
        Ok(independent_set_dimension(self.ring.nvars(), &leads) as i64)
    }

    pub fn transfer(&self, target: &Ring) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.transfer(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

/// Size of the largest variable subset `S` such that no monomial in `leads`
/// has its support inside `S`.
pub(crate) fn independent_set_dimension(nvars: usize, leads: &[Monomial]) -> usize {
    let masks: Vec<u64> = leads
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for s in 0u64..(1u64 << nvars) {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    best
}

impl PartialEq for Ideal {
    /// Structural equality of generator lists; use [`Ideal::equals`] for
    /// ideal equality.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// Membership of `f` in `I` via the normal form against a Gröbner basis.
pub fn membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// `I ∩ k[remaining variables]`, via a block order that puts the dropped
/// variables first. The result lives in the original ring.
pub fn elimination(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
        return Err(Error::OutOfRange {
            index: bad,
            max: n.saturating_sub(1),
        });
    }
    if drop.is_empty() {
        return ideal.reduced();
    }
    let mut names: Vec<String> = Vec::with_capacity(n);
    for &i in drop {
        if !names.contains(&ring.variables()[i]) {
            names.push(ring.variables()[i].clone());
        }
    }
    let k = names.len();
    for (i, v) in ring.variables().iter().enumerate() {
        if !drop.contains(&i) {
            names.push(v.clone());
        }
    }
    let elim_ring = PolyRing::new(&names, ring.field(), TermOrder::Elimination(k))?
        .with_degree_cap(ring.degree_cap());
    let moved = ideal.transfer(&elim_ring)?;
    let gb = moved.groebner()?;
    let kept = gb
        .polynomials()
        .into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|p| p.transfer(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)?.reduced()
}

fn with_fresh_variable(ring: &Ring) -> Result<(Ring, Polynomial)> {
    let name = ring.fresh_name("t");
    let ext = ring.extend(&name)?;
    let t = ext.var(ext.nvars() - 1);
    Ok((ext, t))
}

/// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same(a.ring(), b.ring())?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let (ext, t) = with_fresh_variable(ring)?;
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&t * &g.transfer(&ext)?);
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.transfer(&ext)?);
    }
    let eliminated = elimination(&Ideal::new(&ext, gens)?, &[ext.nvars() - 1])?;
    eliminated.transfer(ring)?.reduced()
}

/// `(I : f) = {a : a f ∈ I}`, computed as `(I ∩ (f)) / f`.
pub fn colon_ideal(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    check_same(ideal.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ring = ideal.ring();
    let meet = ideal_intersection(ideal, &Ideal::new(ring, vec![f.clone()])?)?;
    let mut quotients = Vec::new();
    for g in meet.generators() {
        match g.exact_div(f)? {
            Some(q) => quotients.push(q),
            None => return Err(Error::Internal("intersection with (f) not divisible by f".into())),
        }
    }
    Ideal::new(ring, quotients)?.reduced()
}

/// `f ∈ √I` iff `1 ∈ I + (t f - 1)` in `R[t]`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    check_same(ideal.ring(), f.ring())?;
    let (ext, t) = with_fresh_variable(ideal.ring())?;
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.transfer(&ext))
        .collect::<Result<Vec<_>>>()?;
    gens.push(&(&t * &f.transfer(&ext)?) - &Polynomial::one(&ext));
    Ideal::new(&ext, gens)?.is_unit()
}

/// `(I : f^∞)` by eliminating `t` from `I + (t f - 1)`.
pub fn saturation(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    check_same(ideal.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ring = ideal.ring();
    let (ext, t) = with_fresh_variable(ring)?;
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.transfer(&ext))
        .collect::<Result<Vec<_>>>()?;
    gens.push(&(&t * &f.transfer(&ext)?) - &Polynomial::one(&ext));
    let eliminated = elimination(&Ideal::new(&ext, gens)?, &[ext.nvars() - 1])?;
    eliminated.transfer(ring)?.reduced()
}
