//! Reduction and Buchberger's algorithm on sparse module vectors.
//!
//! Ideals are handled as submodules of the rank-one free module, so a single
//! implementation serves both.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::Monomial;

use super::ModuleOrder;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub pos: usize,
    pub coeff: FieldElem,
}

/// Terms sorted strictly descending under the engine's module order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mon.degree()).max().unwrap_or(0)
    }

    /// Whether every term sits in one position with a single monomial.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
}

pub(crate) struct Engine<'a> {
    pub order: &'a ModuleOrder,
    pub cap: u32,
}

impl<'a> Engine<'a> {
    pub fn new(order: &'a ModuleOrder, cap: u32) -> Self {
        Engine { order, cap }
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp(&a.mon, a.pos, &b.mon, b.pos)
    }

    /// Sorts, merges duplicate terms and drops zeros.
    pub fn normalize(&self, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| self.cmp(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon && last.pos == t.pos => {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t)
                    }
                }
            }
        }
        Vector { terms: out }
    }

    /// `p + c * m * g`, all slices sorted descending.
    pub fn axpy(&self, p: &[Term], c: &FieldElem, m: &Monomial, g: &[Term]) -> Vec<Term> {
        let scaled: Vec<Term> = g
            .iter()
            .map(|t| Term {
                mon: t.mon.mul(m),
                pos: t.pos,
                coeff: t.coeff.mul(c),
            })
            .collect();
        let mut out = Vec::with_capacity(p.len() + scaled.len());
        let (mut i, mut j) = (0, 0);
        while i < p.len() && j < scaled.len() {
            match self.cmp(&p[i], &scaled[j]) {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(scaled[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = p[i].coeff.add(&scaled[j].coeff);
                    if !s.is_zero() {
                        out.push(Term {
                            mon: p[i].mon.clone(),
                            pos: p[i].pos,
                            coeff: s,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&p[i..]);
        out.extend(scaled.into_iter().skip(j));
        out
    }

    pub fn add(&self, a: &Vector, b: &Vector) -> Vector {
        let one = match b.lead() {
            Some(t) => t.coeff.field().one(),
            None => return a.clone(),
        };
        let m = Monomial::one(b.terms[0].mon.arity());
        Vector {
            terms: self.axpy(&a.terms, &one, &m, &b.terms),
        }
    }

    pub fn scale(&self, v: &Vector, c: &FieldElem, m: &Monomial) -> Vector {
        if c.is_zero() {
            return Vector::default();
        }
        Vector {
            terms: v
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.mul(m),
                    pos: t.pos,
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn monic(&self, v: Vector) -> Vector {
        match v.lead() {
            Some(t) if !t.coeff.is_one() => {
                let inv = t.coeff.inv().expect("non-zero lead");
                let one = Monomial::one(t.mon.arity());
                self.scale(&v, &inv, &one)
            }
            _ => v,
        }
    }

    fn find_divisor(&self, t: &Term, basis: &[Vector]) -> Option<(usize, Monomial)> {
        basis.iter().enumerate().find_map(|(k, g)| {
            let l = g.lead()?;
            if l.pos == t.pos {
                t.mon.div(&l.mon).map(|q| (k, q))
            } else {
                None
            }
        })
    }

    /// Full normal form with respect to `basis` (leading terms reduced first,
    /// divisors tried in list order).
    pub fn reduce(&self, v: &Vector, basis: &[Vector]) -> Vector {
        self.reduce_inner(v, basis, None)
    }

    /// Normal form plus the quotient terms `(basis index, monomial, coeff)`
    /// with `v = sum coeff * monomial * basis[index] + remainder`.
    pub fn reduce_tracking(
        &self,
        v: &Vector,
        basis: &[Vector],
    ) -> (Vector, Vec<(usize, Monomial, FieldElem)>) {
        let mut quotients = Vec::new();
        let r = self.reduce_inner(v, basis, Some(&mut quotients));
        (r, quotients)
    }

    fn reduce_inner(
        &self,
        v: &Vector,
        basis: &[Vector],
        mut track: Option<&mut Vec<(usize, Monomial, FieldElem)>>,
    ) -> Vector {
        let mut p = v.terms.clone();
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            match self.find_divisor(&p[start], basis) {
                Some((k, q)) => {
                    let g = &basis[k].terms;
                    let c = p[start].coeff.div(&g[0].coeff).expect("non-zero lead");
                    p = self.axpy(&p[start + 1..], &c.neg(), &q, &g[1..]);
                    start = 0;
                    if let Some(tr) = track.as_deref_mut() {
                        tr.push((k, q, c));
                    }
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Vector { terms: rem }
    }

    /// Whether the leading terms of `s` and `t` have coprime monomials and
    /// the product criterion may be applied.
    fn coprime_criterion(&self, a: &Term, b: &Term, rank_one: bool) -> bool {
        rank_one && a.mon.is_coprime(&b.mon)
    }

    /// S-vector of two monic elements with leading terms in the same position.
    pub fn s_vector(&self, a: &Vector, b: &Vector) -> Vector {
        let (la, lb) = (&a.terms[0], &b.terms[0]);
        let l = la.mon.lcm(&lb.mon);
        let ma = l.div(&la.mon).expect("lcm");
        let mb = l.div(&lb.mon).expect("lcm");
        let ca = la.coeff.inv().expect("non-zero");
        let cb = lb.coeff.inv().expect("non-zero");
        let sa = self.scale(&Vector { terms: a.terms[1..].to_vec() }, &ca, &ma);
        Vector {
            terms: self.axpy(&sa.terms, &cb.neg(), &mb, &b.terms[1..]),
        }
    }

    fn check_cap(&self, degree: u32) -> Result<()> {
        if degree > self.cap {
            Err(Error::DegreeCap {
                degree,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
    /// descending leading term. Uses the normal selection strategy with the
    /// product criterion (rank one only) and the chain criterion.
    pub fn groebner(&self, gens: &[Vector]) -> Result<Vec<Vector>> {
        let rank_one = !self.order.is_schreyer()
            && gens.iter().all(|g| g.terms.iter().all(|t| t.pos == 0));
        let mut basis: Vec<Vector> = Vec::new();
        let mut pending: Vec<Pair> = Vec::new();
        let mut pending_keys: HashSet<(usize, usize)> = HashSet::new();

        for g in gens {
            self.check_cap(g.max_degree())?;
            let r = self.reduce(g, &basis);
            if !r.is_zero() {
                self.insert(self.monic(r), &mut basis, &mut pending, &mut pending_keys)?;
            }
        }

        while !pending.is_empty() {
            let idx = self.select(&pending);
            let pair = pending.swap_remove(idx);
            pending_keys.remove(&(pair.i, pair.j));
            let (a, b) = (&basis[pair.i], &basis[pair.j]);
            if self.coprime_criterion(&a.terms[0], &b.terms[0], rank_one) {
                continue;
            }
            if self.chain_criterion(&pair, &basis, &pending_keys) {
                continue;
            }
            let s = self.s_vector(a, b);
            let r = self.reduce(&s, &basis);
            if !r.is_zero() {
                self.check_cap(r.max_degree())?;
                self.insert(self.monic(r), &mut basis, &mut pending, &mut pending_keys)?;
            }
        }
        Ok(self.finalize(basis))
    }

    fn insert(
        &self,
        g: Vector,
        basis: &mut Vec<Vector>,
        pending: &mut Vec<Pair>,
        keys: &mut HashSet<(usize, usize)>,
    ) -> Result<()> {
        let j = basis.len();
        let lead = g.terms[0].clone();
        for (i, h) in basis.iter().enumerate() {
            let hl = &h.terms[0];
            if hl.pos != lead.pos {
                continue;
            }
            let lcm = hl.mon.lcm(&lead.mon);
            self.check_cap(lcm.degree())?;
            pending.push(Pair {
                i,
                j,
                lcm,
                pos: lead.pos,
            });
            keys.insert((i, j));
        }
        basis.push(g);
        Ok(())
    }

    fn select(&self, pending: &[Pair]) -> usize {
        let mut best = 0;
        for k in 1..pending.len() {
            let (a, b) = (&pending[k], &pending[best]);
            let o = self
                .order
                .cmp(&a.lcm, a.pos, &b.lcm, b.pos)
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if o == Ordering::Less {
                best = k;
            }
        }
        best
    }

    fn chain_criterion(
        &self,
        pair: &Pair,
        basis: &[Vector],
        pending: &HashSet<(usize, usize)>,
    ) -> bool {
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        basis.iter().enumerate().any(|(k, g)| {
            k != pair.i
                && k != pair.j
                && g.terms[0].pos == pair.pos
                && g.terms[0].mon.divides(&pair.lcm)
                && !pending.contains(&key(pair.i, k))
                && !pending.contains(&key(pair.j, k))
        })
    }

    /// Drops elements with redundant leading terms, tail-reduces the rest and
    /// sorts by descending leading term.
    fn finalize(&self, basis: Vec<Vector>) -> Vec<Vector> {
        let keep: Vec<bool> = (0..basis.len())
            .map(|k| {
                let lk = &basis[k].terms[0];
                !basis.iter().enumerate().any(|(l, g)| {
                    let ll = &g.terms[0];
                    l != k
                        && ll.pos == lk.pos
                        && ll.mon.divides(&lk.mon)
                        && (ll.mon != lk.mon || l < k)
                })
            })
            .collect();
        let minimal: Vec<Vector> = basis
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| k.then_some(g))
            .collect();
        let mut reduced: Vec<Vector> = (0..minimal.len())
            .map(|k| {
                let others: Vec<Vector> = minimal
                    .iter()
                    .enumerate()
                    .filter(|(l, _)| *l != k)
                    .map(|(_, g)| g.clone())
                    .collect();
                let head = Vector {
                    terms: vec![minimal[k].terms[0].clone()],
                };
                let tail = self.reduce(
                    &Vector {
                        terms: minimal[k].terms[1..].to_vec(),
                    },
                    &others,
                );
                self.monic(self.add(&head, &tail))
            })
            .collect();
        reduced.sort_by(|a, b| self.cmp(&b.terms[0], &a.terms[0]));
        reduced
    }

    /// Buchberger criterion: every S-vector of same-position pairs reduces to 0.
    pub fn is_groebner(&self, basis: &[Vector]) -> bool {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if basis[i].terms[0].pos != basis[j].terms[0].pos {
                    continue;
                }
                let s = self.s_vector(&basis[i], &basis[j]);
                if !self.reduce(&s, basis).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}
