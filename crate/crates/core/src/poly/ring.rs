use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

use super::{Monomial, Polynomial, TermOrder};

/// Default total-degree cap for Gröbner computations.
pub const DEFAULT_DEGREE_CAP: u32 = 60;

/// `k[x_1..x_n]` together with its monomial order and resource cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    variables: Vec<String>,
    field: Field,
    order: TermOrder,
    degree_cap: u32,
}

/// Shared handle to a ring; every polynomial carries one.
pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: AsRef<str>>(variables: &[S], field: Field, order: TermOrder) -> Result<Ring> {
        let variables: Vec<String> = variables.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Precondition(format!("invalid variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::Precondition(format!("duplicate variable `{v}`")));
            }
        }
        if let TermOrder::Elimination(k) = order {
            if k > variables.len() {
                return Err(Error::Precondition(format!(
                    "elimination block {k} exceeds {} variables",
                    variables.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing {
            variables,
            field,
            order,
            degree_cap: DEFAULT_DEGREE_CAP,
        }))
    }

    /// Grevlex over GF(32003).
    pub fn standard<S: AsRef<str>>(variables: &[S]) -> Ring {
        Self::new(variables, Field::default(), TermOrder::Grevlex).expect("valid variable names")
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn with_degree_cap(&self, cap: u32) -> Ring {
        let mut r = self.clone();
        r.degree_cap = cap;
        Arc::new(r)
    }

    pub fn with_order(&self, order: TermOrder) -> Ring {
        let mut r = self.clone();
        r.order = order;
        Arc::new(r)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(self: &Ring, i: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::variable(self.nvars(), i), self.field.one())
    }

    /// Generators of the irrelevant ideal `(x_1, ..., x_n)`.
    pub fn variables_as_polys(self: &Ring) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// A variable name not used by this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}{i}"))
            .find(|c| self.var_index(c).is_none())
            .expect("infinitely many candidates")
    }

    /// This ring with `name` appended as a new last variable; same field,
    /// order kind and cap.
    pub fn extend(&self, name: &str) -> Result<Ring> {
        let mut vars = self.variables.clone();
        vars.push(name.to_string());
        let order = match self.order {
            TermOrder::Elimination(_) => TermOrder::Grevlex,
            o => o,
        };
        let r = PolyRing::new(&vars, self.field, order)?;
        Ok(r.with_degree_cap(self.degree_cap))
    }

    /// Same ring with the given field.
    pub fn with_field(&self, field: Field) -> Ring {
        let mut r = self.clone();
        r.field = field;
        Arc::new(r)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}
