use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::Multigrading;
use crate::monomial::TermOrder;
use crate::poly::Polynomial;

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
///
/// Rings are shared behind an [`Arc`]; polynomials keep a handle to theirs.
#[derive(Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    vars: Vec<String>,
    field: F,
    order: TermOrder,
    grading: Option<Multigrading>,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new<S: AsRef<str>>(vars: &[S], field: F, order: TermOrder) -> Result<RingRef<F>> {
        Self::build(
            vars.iter().map(|s| s.as_ref().to_string()).collect(),
            field,
            order,
            None,
        )
    }

    pub fn with_grading<S: AsRef<str>>(
        vars: &[S],
        field: F,
        order: TermOrder,
        grading: Multigrading,
    ) -> Result<RingRef<F>> {
        Self::build(
            vars.iter().map(|s| s.as_ref().to_string()).collect(),
            field,
            order,
            Some(grading),
        )
    }

    fn build(
        vars: Vec<String>,
        field: F,
        order: TermOrder,
        grading: Option<Multigrading>,
    ) -> Result<RingRef<F>> {
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::Domain(format!("`{v}` is not a valid variable name")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::NameCollision(v.clone()));
            }
        }
        order.validate(vars.len())?;
        if let Some(g) = &grading {
            if g.rows() > 0 && g.ncols() != vars.len() {
                return Err(Error::Domain(format!(
                    "grading has {} columns for {} variables",
                    g.ncols(),
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing {
            vars,
            field,
            order,
            grading,
        }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn grading(&self) -> Option<&Multigrading> {
        self.grading.as_ref()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The same variables and field under another order (grading kept).
    pub fn with_order(&self, order: TermOrder) -> Result<RingRef<F>> {
        Self::build(self.vars.clone(), self.field.clone(), order, self.grading.clone())
    }

    /// Same ring with `grading` attached.
    pub fn graded(&self, grading: Multigrading) -> Result<RingRef<F>> {
        Self::build(
            self.vars.clone(),
            self.field.clone(),
            self.order.clone(),
            Some(grading),
        )
    }

    /// A name not yet used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        fresh_name(self.vars.iter().map(String::as_str), base)
    }

    pub fn gen(self: &Arc<Self>, name: &str) -> Result<Polynomial<F>> {
        Ok(Polynomial::var(self, self.var_index(name)?))
    }

    /// All variables as polynomials.
    pub fn gens(self: &Arc<Self>) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| Polynomial::var(self, i)).collect()
    }

    pub fn same(a: &RingRef<F>, b: &RingRef<F>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl<F: Field> fmt::Debug for PolyRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] ({})",
            self.field.spec(),
            self.vars.join(", "),
            self.order
        )
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn fresh_name<'a>(used: impl Iterator<Item = &'a str> + Clone, base: &str) -> String {
    if !used.clone().any(|v| v == base) {
        return base.to_string();
    }
    (0..)
        .map(|i| format!("{base}{i}"))
        .find(|cand| !used.clone().any(|v| v == cand))
        .expect("unbounded search")
}
