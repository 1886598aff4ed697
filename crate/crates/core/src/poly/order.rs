use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// A monomial order on `k[x_1..x_n]`.
///
/// `Elimination(k)` is the block order that first compares the leading `k`
/// variables by graded reverse lexicographic order and breaks ties with
/// grevlex on the remaining ones; any polynomial whose leading monomial is
/// free of the first block lies entirely in the subring of the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    Grevlex,
    Elimination(usize),
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::Grevlex
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // a smaller exponent in the last differing variable wins
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            TermOrder::Lex => lex(a, b),
            TermOrder::Grevlex => grevlex(a, b),
            TermOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::Grevlex => "grevlex".into(),
            TermOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}
