#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use regseq::poly::Monomial;
use regseq::{FPModule, Field, FieldElem, FreeElement, Ideal, PolyRing, Polynomial, Ring, TermOrder};

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn ring(n: usize, field: Field) -> Ring {
    PolyRing::new(&VARS[..n], field, TermOrder::Grevlex).unwrap()
}

pub fn gf() -> Field {
    Field::default()
}

pub fn poly(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

pub fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|t| poly(r, t)).collect()
}

pub fn cyclic(r: &Ring, gens: &[&str]) -> FPModule {
    FPModule::cyclic(&Ideal::parse(r, gens).unwrap())
}

pub fn monomial(r: &Ring, exps: &[u32]) -> Polynomial {
    Polynomial::monomial(r, Monomial::from_exponents(exps), r.field().one())
}

pub fn random_exponents(rng: &mut ChaCha8Rng, n: usize, min_deg: u32, max_deg: u32) -> Vec<u32> {
    let d = rng.gen_range(min_deg..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// A module with monomial relations: `R/I` for a monomial ideal, or a rank
/// two quotient by monomial vectors. At most five relations of degree <= 4.
pub fn random_monomial_module(rng: &mut ChaCha8Rng, r: &Ring) -> FPModule {
    let n = r.nvars();
    let rank = if rng.gen_bool(0.25) { 2 } else { 1 };
    let count = rng.gen_range(0..=5);
    let mut rels = Vec::new();
    for _ in 0..count {
        let m = monomial(r, &random_exponents(rng, n, 1, 4));
        let i = rng.gen_range(0..rank);
        rels.push(FreeElement::single(r, rank, i, m));
    }
    FPModule::present(r, rank, rels, Some(vec![0; rank])).unwrap()
}

/// Variables or products of variables, length 1..=3.
pub fn random_variable_sequence(rng: &mut ChaCha8Rng, r: &Ring) -> Vec<Polynomial> {
    let n = r.nvars();
    let len = rng.gen_range(1..=3);
    if rng.gen_bool(0.4) {
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(rng);
        return vars
            .into_iter()
            .take(len)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                monomial(r, &e)
            })
            .collect();
    }
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.7) {
                let mut e = vec![0; n];
                e[rng.gen_range(0..n)] = 1;
                monomial(r, &e)
            } else {
                monomial(r, &random_exponents(rng, n, 2, 2))
            }
        })
        .collect()
}

/// A random homogeneous polynomial of degree `d` with small coefficients.
pub fn random_form(rng: &mut ChaCha8Rng, r: &Ring, d: u32, terms: usize) -> Polynomial {
    let n = r.nvars();
    let mut acc = Polynomial::zero(r);
    for _ in 0..terms {
        let e = random_exponents(rng, n, d, d);
        let c = rng.gen_range(-3i64..=3);
        acc = &acc + &Polynomial::monomial(r, Monomial::from_exponents(&e), r.field().from_i64(c));
    }
    acc
}

/// A graded module with homogeneous (not necessarily monomial) relations.
pub fn random_graded_module(rng: &mut ChaCha8Rng, r: &Ring) -> FPModule {
    let rank = rng.gen_range(1..=2);
    let shifts: Vec<i32> = (0..rank).map(|_| rng.gen_range(0..=1)).collect();
    let count = rng.gen_range(0..=3);
    let mut rels = Vec::new();
    for _ in 0..count {
        let deg = rng.gen_range(2..=3) as i32;
        let comps: Vec<Polynomial> = shifts
            .iter()
            .map(|&s| {
                if rng.gen_bool(0.6) {
                    random_form(rng, r, (deg - s) as u32, 2)
                } else {
                    Polynomial::zero(r)
                }
            })
            .collect();
        rels.push(FreeElement::new(r, comps).unwrap());
    }
    FPModule::present(r, rank, rels, Some(shifts)).unwrap()
}

pub fn permutations<T: Clone>(v: &[T]) -> Vec<Vec<T>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head.clone());
            out.push(p);
        }
    }
    out
}

pub fn shuffled<T: Clone>(rng: &mut ChaCha8Rng, v: &[T]) -> Vec<T> {
    let mut w = v.to_vec();
    w.shuffle(rng);
    w
}

/// Dense linear algebra over GF(p) on `u64`, written independently of the
/// library so it can serve as an oracle.
pub mod oracle {
    use super::*;

    pub fn residue(c: &FieldElem) -> (u64, u64) {
        match c {
            FieldElem::Mod { value, modulus } => (*value as u64, *modulus as u64),
            FieldElem::Rat(_) => panic!("oracle works over prime fields"),
        }
    }

    fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    }

    /// Row-reduces in place; returns pivot columns.
    pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
                continue;
            };
            rows.swap(r, k);
            let inv = pow(rows[r][c], p - 2, p);
            for x in rows[r].iter_mut() {
                *x = *x * inv % p;
            }
            for k in 0..rows.len() {
                if k != r && rows[k][c] != 0 {
                    let f = rows[k][c];
                    for j in 0..ncols {
                        rows[k][j] = (rows[k][j] + p - f * rows[r][j] % p) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        pivots
    }

    pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
        let mut m = rows.to_vec();
        rref(&mut m, p).len()
    }

    pub fn in_span(rows: &[Vec<u64>], v: &[u64], p: u64) -> bool {
        let mut m = rows.to_vec();
        let r0 = rank(&m, p);
        m.push(v.to_vec());
        rank(&m, p) == r0
    }

    /// Basis of `{x : A x = 0}` for `A` given by rows.
    pub fn nullspace(rows: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
        let mut m = rows.to_vec();
        let pivots = rref(&mut m, p);
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![0u64; ncols];
            x[free] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                x[pc] = (p - row[free]) % p;
            }
            out.push(x);
        }
        out
    }

    pub fn monomials(n: usize, d: i64) -> Vec<Vec<u32>> {
        if d < 0 {
            return Vec::new();
        }
        if n == 0 {
            return if d == 0 { vec![vec![]] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for e in 0..=d as u32 {
            for mut rest in monomials(n - 1, d - e as i64) {
                rest.insert(0, e);
                out.push(rest);
            }
        }
        out
    }

    /// Coordinates of `(R^rank)_d` for the given shifts.
    pub struct Graded {
        pub n: usize,
        pub shifts: Vec<i32>,
        pub p: u64,
    }

    impl Graded {
        pub fn basis(&self, d: i64) -> Vec<(usize, Vec<u32>)> {
            let mut out = Vec::new();
            for (i, &s) in self.shifts.iter().enumerate() {
                for m in monomials(self.n, d - s as i64) {
                    out.push((i, m));
                }
            }
            out
        }

        fn degree(&self, v: &FreeElement) -> Option<i64> {
            let mut deg = None;
            for (i, c) in v.components().iter().enumerate() {
                for (m, _) in c.terms() {
                    let d = m.degree() as i64 + self.shifts[i] as i64;
                    assert!(deg.is_none_or(|e| e == d), "inhomogeneous vector {v}");
                    deg = Some(d);
                }
            }
            deg
        }

        /// Coordinates of `mult * v` in degree `d`.
        fn coords(&self, v: &FreeElement, mult: &[u32], basis: &[(usize, Vec<u32>)]) -> Vec<u64> {
            let mut row = vec![0u64; basis.len()];
            for (i, c) in v.components().iter().enumerate() {
                for (m, k) in c.terms() {
                    let e: Vec<u32> = m.exponents().iter().zip(mult).map(|(a, b)| a + b).collect();
                    let pos = basis.iter().position(|(j, b)| *j == i && *b == e).unwrap();
                    row[pos] = residue(k).0;
                }
            }
            row
        }

        /// Rows spanning the degree `d` part of the submodule generated by
        /// homogeneous `gens`.
        pub fn span(&self, gens: &[FreeElement], d: i64) -> Vec<Vec<u64>> {
            let basis = self.basis(d);
            let mut rows = Vec::new();
            for g in gens {
                let Some(dg) = self.degree(g) else { continue };
                for mult in monomials(self.n, d - dg) {
                    rows.push(self.coords(g, &mult, &basis));
                }
            }
            rows
        }

        pub fn vector(&self, v: &FreeElement, d: i64) -> Vec<u64> {
            let basis = self.basis(d);
            let zero = vec![0u32; self.n];
            if v.is_zero() {
                return vec![0; basis.len()];
            }
            assert_eq!(self.degree(v), Some(d));
            self.coords(v, &zero, &basis)
        }

        pub fn element(&self, r: &Ring, coords: &[u64], d: i64) -> FreeElement {
            let basis = self.basis(d);
            let mut comps = vec![Polynomial::zero(r); self.shifts.len()];
            for ((i, m), &c) in basis.iter().zip(coords) {
                if c != 0 {
                    let t = Polynomial::monomial(r, Monomial::from_exponents(m), r.field().from_i64(c as i64));
                    comps[*i] = &comps[*i] + &t;
                }
            }
            FreeElement::new(r, comps).unwrap()
        }

        /// Whether homogeneous `v` of degree `d` lies in the span of `gens`.
        pub fn contains(&self, gens: &[FreeElement], v: &FreeElement) -> bool {
            if v.is_zero() {
                return true;
            }
            let d = self.degree(v).unwrap();
            in_span(&self.span(gens, d), &self.vector(v, d), self.p)
        }

        /// A basis of `{w in (R^rank)_d : sum_i w_i c_i in N}` where the
        /// columns `c_i` are homogeneous of degree `shifts[i] + e` in a free
        /// module graded by `target`, and `N` is spanned by `target_rels`.
        pub fn preimage(
            &self,
            r: &Ring,
            columns: &[FreeElement],
            e: i64,
            target: &Graded,
            target_rels: &[FreeElement],
            d: i64,
        ) -> Vec<FreeElement> {
            let src = self.basis(d);
            let tgt = target.basis(d + e);
            let nrows = target.span(target_rels, d + e);
            // Unknowns: coefficients of w, then coefficients on the rows of N.
            let ncols = src.len() + nrows.len();
            let mut eqs = vec![vec![0u64; ncols]; tgt.len()];
            for (k, (i, m)) in src.iter().enumerate() {
                let img = columns[*i].clone();
                if img.is_zero() {
                    continue;
                }
                let col = target.coords(&img, m, &tgt);
                for (row, &c) in eqs.iter_mut().zip(&col) {
                    row[k] = c;
                }
            }
            for (j, nr) in nrows.iter().enumerate() {
                for (row, &c) in eqs.iter_mut().zip(nr) {
                    row[src.len() + j] = (self.p - c) % self.p;
                }
            }
            let sols = nullspace(&eqs, ncols, self.p);
            sols.into_iter()
                .map(|s| self.element(r, &s[..src.len()], d))
                .collect()
        }
    }

    /// The ambient grading of a graded module over GF(p).
    pub fn graded(m: &FPModule) -> Graded {
        let p = match m.ring().field() {
            Field::Prime(p) => p as u64,
            Field::Rational => panic!("oracle works over prime fields"),
        };
        Graded {
            n: m.ring().nvars(),
            shifts: m.grading().expect("graded").to_vec(),
            p,
        }
    }

    /// `dim_k M_d` computed with the oracle's own elimination.
    pub fn hilbert(m: &FPModule, d: i64) -> u64 {
        let g = graded(m);
        let total = g.basis(d).len();
        (total - rank(&g.span(m.relations().generators(), d), g.p)) as u64
    }

    /// Elements `w` of degree `d` with `f w = 0` in `M` but `w != 0` in `M`,
    /// as a count: `dim {w : f w in N}_d - dim N_d`.
    pub fn zero_divisor_dimension(m: &FPModule, f: &Polynomial, d: i64) -> usize {
        let g = graded(m);
        let e = f.total_degree().unwrap() as i64;
        let r = m.ring();
        let columns: Vec<FreeElement> = (0..m.rank())
            .map(|i| FreeElement::single(r, m.rank(), i, f.clone()))
            .collect();
        let pre = g.preimage(r, &columns, e, &g, m.relations().generators(), d);
        let rels = g.span(m.relations().generators(), d);
        let rows: Vec<Vec<u64>> = pre.iter().map(|w| g.vector(w, d)).collect();
        rank(&rows, g.p) - rank(&rels, g.p)
    }
}
