use crate::error::{Error, Result};
use crate::groebner::FreeElement;
use crate::poly::{check_same, Polynomial};

use super::module::FPModule;
use super::subquotient::Subquotient;
use super::submodule::{preimage, Submodule};

/// A homomorphism of finitely presented modules given by the images of the
/// source generators in the target's ambient free module.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    columns: Vec<FreeElement>,
}

impl ModuleMap {
    /// Checks that every source relation maps into the target relations.
    pub fn new(source: FPModule, target: FPModule, columns: Vec<FreeElement>) -> Result<ModuleMap> {
        let map = ModuleMap::unchecked(source, target, columns)?;
        for r in map.source.relations().generators() {
            if !map.target.is_zero_element(&map.apply(r)?)? {
                return Err(Error::IllDefinedMap(format!(
                    "relation {r} does not map into the target relations"
                )));
            }
        }
        Ok(map)
    }

    /// `rows[i][j]` is the `i`-th component of the image of `e_j`.
    pub fn from_rows(source: FPModule, target: FPModule, rows: Vec<Vec<Polynomial>>) -> Result<ModuleMap> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::LengthMismatch(format!(
                "matrix must be {} x {}",
                target.rank(),
                source.rank()
            )));
        }
        let columns = (0..source.rank())
            .map(|j| FreeElement::new(source.ring(), rows.iter().map(|r| r[j].clone()).collect()))
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::new(source, target, columns)
    }

    pub(crate) fn unchecked(source: FPModule, target: FPModule, columns: Vec<FreeElement>) -> Result<ModuleMap> {
        check_same(source.ring(), target.ring())?;
        if columns.len() != source.rank() {
            return Err(Error::RankMismatch {
                expected: source.rank(),
                found: columns.len(),
            });
        }
        for c in &columns {
            check_same(source.ring(), c.ring())?;
            if c.rank() != target.rank() {
                return Err(Error::RankMismatch {
                    expected: target.rank(),
                    found: c.rank(),
                });
            }
        }
        Ok(ModuleMap {
            source,
            target,
            columns,
        })
    }

    pub fn identity(m: &FPModule) -> ModuleMap {
        let cols = (0..m.rank())
            .map(|i| FreeElement::basis(m.ring(), m.rank(), i))
            .collect();
        ModuleMap::unchecked(m.clone(), m.clone(), cols).expect("square")
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn columns(&self) -> &[FreeElement] {
        &self.columns
    }

    /// The `target_rank x source_rank` matrix.
    pub fn matrix(&self) -> Vec<Vec<Polynomial>> {
        (0..self.target.rank())
            .map(|i| self.columns.iter().map(|c| c.component(i).clone()).collect())
            .collect()
    }

    /// Image of a vector of the source's ambient free module.
    pub fn apply(&self, v: &FreeElement) -> Result<FreeElement> {
        if v.rank() != self.source.rank() {
            return Err(Error::RankMismatch {
                expected: self.source.rank(),
                found: v.rank(),
            });
        }
        let mut acc = FreeElement::zero(self.source.ring(), self.target.rank());
        for (c, col) in v.components().iter().zip(&self.columns) {
            if !c.is_zero() {
                acc = acc.try_add(&col.scale(c)?)?;
            }
        }
        Ok(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let cols = other
            .columns
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::unchecked(other.source.clone(), self.target.clone(), cols)
    }

    /// Whether every generator maps to zero in the target.
    pub fn is_zero(&self) -> Result<bool> {
        for c in &self.columns {
            if !self.target.is_zero_element(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{v in source ambient : φ(v) = 0 in target}` as a submodule of the
    /// source's ambient free module (relations of the source included).
    pub(crate) fn kernel_lifts(&self) -> Result<Submodule> {
        if self.source.rank() == 0 {
            return Ok(Submodule::zero(self.source.ring(), 0));
        }
        if self.target.rank() == 0 {
            return Ok(Submodule::everything(self.source.ring(), self.source.rank()));
        }
        preimage(self.source.ring(), &self.columns, self.target.relations())
    }
}

/// The kernel of a map, presented, with the lifts of its generators to the
/// source's ambient free module.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub module: FPModule,
    pub embedding: Vec<FreeElement>,
}

pub fn kernel(map: &ModuleMap) -> Result<Kernel> {
    let lifts = map.kernel_lifts()?;
    let sq = Subquotient::new(
        lifts.generators().to_vec(),
        map.source().relations().clone(),
        map.source().grading().map(<[i32]>::to_vec),
    );
    let module = sq.present()?;
    Ok(Kernel {
        module,
        embedding: sq.generators().to_vec(),
    })
}

/// A chain complex `C_len -> ... -> C_1 -> C_0`, stored with
/// `differentials[i - 1] = d_i : C_i -> C_{i-1}`.
#[derive(Clone, Debug)]
pub struct Complex {
    modules: Vec<FPModule>,
    differentials: Vec<ModuleMap>,
}

impl Complex {
    /// Validates shapes and `d ∘ d = 0`.
    pub fn new(modules: Vec<FPModule>, differentials: Vec<ModuleMap>) -> Result<Complex> {
        let c = Complex::unchecked(modules, differentials)?;
        if !c.verify_d_squared()? {
            return Err(Error::IllDefinedMap("consecutive differentials do not compose to zero".into()));
        }
        Ok(c)
    }

    pub(crate) fn unchecked(modules: Vec<FPModule>, differentials: Vec<ModuleMap>) -> Result<Complex> {
        if modules.is_empty() || differentials.len() + 1 != modules.len() {
            return Err(Error::LengthMismatch(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.source().rank() != modules[i + 1].rank() || d.target().rank() != modules[i].rank() {
                return Err(Error::LengthMismatch(format!("differential d_{} has the wrong shape", i + 1)));
            }
        }
        Ok(Complex {
            modules,
            differentials,
        })
    }

    /// Number of modules.
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn module(&self, i: usize) -> &FPModule {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[FPModule] {
        &self.modules
    }

    /// `d_i : C_i -> C_{i-1}` for `1 <= i < len`.
    pub fn differential(&self, i: usize) -> &ModuleMap {
        &self.differentials[i - 1]
    }

    pub fn differentials(&self) -> &[ModuleMap] {
        &self.differentials
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FPModule::rank).collect()
    }

    /// Checks `d_i ∘ d_{i+1} = 0` by membership in the relations of `C_{i-1}`.
    pub fn verify_d_squared(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].compose(&w[1])?.is_zero()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `ker d_i / im d_{i+1}` before re-presentation.
    pub fn homology_subquotient(&self, i: usize) -> Result<Subquotient> {
        if i >= self.modules.len() {
            return Err(Error::OutOfRange {
                index: i,
                max: self.modules.len() - 1,
            });
        }
        let c = &self.modules[i];
        let cycles = if i == 0 {
            Submodule::everything(c.ring(), c.rank())
        } else {
            self.differentials[i - 1].kernel_lifts()?
        };
        let mut boundaries = c.relations().clone();
        if i + 1 < self.modules.len() {
            let img = Submodule::new(c.ring(), c.rank(), self.differentials[i].columns().to_vec())?;
            boundaries = boundaries.sum(&img)?;
        }
        Ok(Subquotient::new(
            cycles.generators().to_vec(),
            boundaries,
            c.grading().map(<[i32]>::to_vec),
        ))
    }

    pub fn homology(&self, i: usize) -> Result<FPModule> {
        self.homology_subquotient(i)?.present()
    }
}
