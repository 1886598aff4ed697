//! Syzygy modules: Schreyer's construction on a Gröbner basis, and the
//! position-elimination method for arbitrary generating lists.

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::fpmodule::Submodule;
use crate::poly::{Monomial, Ring};

use super::basis::{Ambient, GroebnerBasis};
use super::engine::{Engine, Term, Vector};
use super::ModuleOrder;

/// Syzygies of an arbitrary list of vectors in `R^rank`, computed as the
/// second-block part of a Gröbner basis of `(g_i | e_i)` in `R^(rank + s)`
/// under an order in which the first `rank` positions dominate. The output
/// is sorted term-over-position in `R^s`.
pub(crate) fn syzygies(ring: &Ring, rank: usize, gens: &[Vector]) -> Result<Vec<Vector>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let n = ring.nvars();
    let one = ring.field().one();
    let order = ModuleOrder::Split {
        order: ring.order(),
        split: rank,
    };
    let engine = Engine::new(&order, ring.degree_cap());
    let ext: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms = g.terms.clone();
            terms.push(Term {
                mon: Monomial::one(n),
                pos: rank + i,
                coeff: one.clone(),
            });
            engine.normalize(terms)
        })
        .collect();
    let gb = engine.groebner(&ext)?;
    let top = ModuleOrder::TermOverPosition(ring.order());
    let out_engine = Engine::new(&top, ring.degree_cap());
    Ok(gb
        .into_iter()
        .filter(|v| v.terms[0].pos >= rank)
        .map(|v| {
            out_engine.normalize(
                v.terms
                    .into_iter()
                    .map(|t| Term {
                        mon: t.mon,
                        pos: t.pos - rank,
                        coeff: t.coeff,
                    })
                    .collect(),
            )
        })
        .collect())
}

/// Schreyer syzygies of a Gröbner basis: one per minimal pair, read off from
/// the standard representation of the S-vector. The result is a Gröbner basis
/// for the induced Schreyer order, returned with that order.
pub(crate) fn schreyer_syzygies(gb: &GroebnerBasis) -> Result<(ModuleOrder, Vec<Vector>)> {
    let g = gb.vectors();
    let leads = gb.leading_terms();
    let order1 = gb.order().schreyer(&leads);
    let e0 = gb.engine();
    let e1 = Engine::new(&order1, gb.ring().degree_cap());
    let mut out = Vec::new();
    for i in 0..g.len() {
        let (li, pi) = &leads[i];
        let cands: Vec<(usize, Monomial)> = (i + 1..g.len())
            .filter(|&j| leads[j].1 == *pi)
            .map(|j| (j, li.lcm(&leads[j].0).div(li).expect("lcm")))
            .collect();
        for (a, (j, m)) in cands.iter().enumerate() {
            let redundant = cands
                .iter()
                .enumerate()
                .any(|(b, (_, n))| b != a && n.divides(m) && (n != m || b < a));
            if redundant {
                continue;
            }
            let lj = &leads[*j].0;
            let mj = li.lcm(lj).div(lj).expect("lcm");
            let s = e0.s_vector(&g[i], &g[*j]);
            let (r, quotients) = e0.reduce_tracking(&s, g);
            if !r.is_zero() {
                return Err(Error::Internal(
                    "Schreyer construction on a non-Gröbner basis".into(),
                ));
            }
            let ci = g[i].terms[0].coeff.inv()?;
            let cj = g[*j].terms[0].coeff.inv()?;
            let mut terms = vec![
                Term {
                    mon: m.clone(),
                    pos: i,
                    coeff: ci,
                },
                Term {
                    mon: mj,
                    pos: *j,
                    coeff: cj.neg(),
                },
            ];
            terms.extend(quotients.into_iter().map(|(k, q, c): (usize, Monomial, FieldElem)| Term {
                mon: q,
                pos: k,
                coeff: c.neg(),
            }));
            let v = e1.normalize(terms);
            debug_assert!(v.terms[0].pos == i && v.terms[0].mon == *m);
            out.push(e1.monic(v));
        }
    }
    Ok((order1, out))
}

/// The syzygy module of a Gröbner basis `G = (G_1..G_s)`: all
/// `(a_1..a_s)` with `sum a_i G_i = 0`. The returned submodule of `R^s`
/// carries its generators as a Gröbner basis for the Schreyer order.
pub fn syzygy_basis(gb: &GroebnerBasis) -> Result<Submodule> {
    let (order, vs) = schreyer_syzygies(gb)?;
    let s = gb.len();
    let basis = GroebnerBasis::from_parts(gb.ring(), Ambient::Free(s), order, vs);
    Ok(Submodule::with_basis(gb.ring(), s, basis))
}
