//! The Koszul complex `K(f_1..f_r; M)` and its homology.

use crate::criteria::DepthValue;
use crate::error::{Error, Result};
use crate::fpmodule::{Complex, FPModule, ModuleMap, Subquotient};
use crate::groebner::FreeElement;
use crate::poly::{check_same, Polynomial};

/// All `k`-subsets of `0..r`, in colexicographic order.
pub fn colex_subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            rec(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, r, k, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// `K_i = M^{C(r, i)}` with basis indexed by `i`-subsets in colex order; the
/// differential sends `e_S` to `sum_k (-1)^k f_{s_k} e_{S - s_k}`, `k` the
/// 0-based position in `S`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    sequence: Vec<Polynomial>,
    base: FPModule,
    subsets: Vec<Vec<Vec<usize>>>,
    complex: Complex,
}

pub fn build_koszul(f: &[Polynomial], m: &FPModule) -> Result<KoszulComplex> {
    for fj in f {
        check_same(m.ring(), fj.ring())?;
    }
    let ring = m.ring();
    let r = f.len();
    let rank = m.rank();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=r).map(|k| colex_subsets(r, k)).collect();
    let degrees: Option<Vec<i32>> = f
        .iter()
        .map(|p| {
            if p.is_zero() {
                Some(0)
            } else if p.is_homogeneous() {
                p.total_degree().map(|d| d as i32)
            } else {
                None
            }
        })
        .collect();

    let mut modules = Vec::with_capacity(r + 1);
    for subs in &subsets {
        let grading = match (m.grading(), &degrees) {
            (Some(s), Some(deg)) => Some(
                subs.iter()
                    .flat_map(|set| {
                        let shift: i32 = set.iter().map(|&j| deg[j]).sum();
                        s.iter().map(move |&x| x + shift)
                    })
                    .collect(),
            ),
            _ => None,
        };
        modules.push(FPModule::from_submodule(m.relations().power(subs.len()), grading)?);
    }

    let mut differentials = Vec::with_capacity(r);
    for i in 1..=r {
        let lower = &subsets[i - 1];
        let target_rank = rank * lower.len();
        let mut cols = Vec::with_capacity(rank * subsets[i].len());
        for set in &subsets[i] {
            for c in 0..rank {
                let mut comps = vec![Polynomial::zero(ring); target_rank];
                for (k, &j) in set.iter().enumerate() {
                    let face: Vec<usize> = set.iter().copied().filter(|&x| x != j).collect();
                    let idx = lower.iter().position(|s| *s == face).expect("face");
                    let entry = if k % 2 == 0 { f[j].clone() } else { -&f[j] };
                    comps[idx * rank + c] = entry;
                }
                cols.push(FreeElement::new(ring, comps)?);
            }
        }
        differentials.push(ModuleMap::unchecked(modules[i].clone(), modules[i - 1].clone(), cols)?);
    }
    let complex = Complex::unchecked(modules, differentials)?;
    Ok(KoszulComplex {
        sequence: f.to_vec(),
        base: m.clone(),
        subsets,
        complex,
    })
}

impl KoszulComplex {
    pub fn sequence(&self) -> &[Polynomial] {
        &self.sequence
    }

    pub fn base(&self) -> &FPModule {
        &self.base
    }

    pub fn length(&self) -> usize {
        self.sequence.len()
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    /// The subsets indexing the copies of `M` in `K_i`.
    pub fn subsets(&self, i: usize) -> &[Vec<usize>] {
        &self.subsets[i]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.complex.ranks()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.length() {
            return Err(Error::OutOfRange {
                index: i,
                max: self.length(),
            });
        }
        Ok(())
    }

    pub fn homology_subquotient(&self, i: usize) -> Result<Subquotient> {
        self.check_index(i)?;
        self.complex.homology_subquotient(i)
    }

    /// A cycle of `K_i` that is not a boundary, if `H_i ≠ 0`.
    pub fn homology_witness(&self, i: usize) -> Result<Option<FreeElement>> {
        self.homology_subquotient(i)?.nonzero_element()
    }

    pub fn homology_vanishes(&self, i: usize) -> Result<bool> {
        Ok(self.homology_witness(i)?.is_none())
    }
}

/// `H_i(f; M) = ker d_i / im d_{i+1}`, presented.
pub fn koszul_homology(k: &KoszulComplex, i: usize) -> Result<FPModule> {
    k.homology_subquotient(i)?.present()
}

/// Depth at the irrelevant ideal as `n - max{i : H_i(x_1..x_n; M) ≠ 0}`.
/// Requires a graded module; the zero module has infinite depth.
pub fn depth_via_koszul(m: &FPModule) -> Result<DepthValue> {
    if !m.is_graded() {
        return Err(Error::Ungraded);
    }
    if m.is_zero()? {
        return Ok(DepthValue::Infinite);
    }
    let n = m.ring().nvars();
    let k = build_koszul(&m.ring().variables_as_polys(), m)?;
    for i in (0..=n).rev() {
        if !k.homology_vanishes(i)? {
            return Ok(DepthValue::Finite(n - i));
        }
    }
    Err(Error::Internal("non-zero module with vanishing H_0".into()))
}
