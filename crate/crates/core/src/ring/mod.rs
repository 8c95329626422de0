//! Exact multivariate polynomial arithmetic over ℚ and 𝔽_p.

mod field;
mod monomial;
mod poly;

use std::collections::HashSet;
use std::sync::Arc;

pub use field::{Coeff, Field};
pub use monomial::{BaseOrder, Monomial, MonomialOrder};
pub use poly::{normal_form, s_polynomial, Polynomial};

pub(crate) use poly::{reduce, spoly};

use crate::error::{Error, Result};

/// A standard-graded polynomial ring `k[x_1, ..., x_n]` together with the
/// monomial order its polynomials are sorted by.
///
/// Two rings with the same variables and field but different orders are
/// the "same ring" for membership purposes; see [`Ring::same_base`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], characteristic: u64) -> Result<Arc<Ring>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::invalid("a ring needs at least one variable"));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::invalid(format!("`{name}` is not a valid variable name")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::invalid(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Ring {
            names,
            field: Field::from_characteristic(characteristic)?,
            order: MonomialOrder::GrevLex,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and coefficient field, regardless of order.
    pub fn same_base(&self, other: &Ring) -> bool {
        self.names == other.names && self.field == other.field
    }

    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<Ring> {
        if self.order == order {
            return self.clone();
        }
        Arc::new(Ring {
            names: self.names.clone(),
            field: self.field,
            order,
        })
    }

    /// Appends `extra` fresh variables (named so they cannot collide with
    /// user variables) and uses `order` on the larger ring.
    pub(crate) fn extended(&self, extra: usize, order: MonomialOrder) -> Arc<Ring> {
        let mut names = self.names.clone();
        for k in 0..extra {
            let mut name = format!("_t{k}");
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        Arc::new(Ring {
            names,
            field: self.field,
            order,
        })
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
