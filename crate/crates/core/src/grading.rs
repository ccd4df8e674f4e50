use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// An integer weight matrix: row `r` assigns `weights[r][i]` to variable `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Multigrading {
    weights: Vec<Vec<i64>>,
}

/// Result of a homogeneity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(Vec<i64>),
    /// Two terms with different degrees.
    Inhomogeneous { first: Vec<i64>, second: Vec<i64> },
}

impl Homogeneity {
    pub fn degree(&self) -> Option<&[i64]> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            Homogeneity::Inhomogeneous { .. } => None,
        }
    }
}

impl Multigrading {
    pub fn new(weights: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(first) = weights.first() {
            if weights.iter().any(|row| row.len() != first.len()) {
                return Err(Error::Domain("ragged weight matrix".into()));
            }
        }
        Ok(Multigrading { weights })
    }

    /// Total degree.
    pub fn standard(nvars: usize) -> Self {
        Multigrading {
            weights: vec![vec![1; nvars]],
        }
    }

    /// `Z^n` grading where variable `i` has degree `e_i`.
    pub fn fine(nvars: usize) -> Self {
        let weights = (0..nvars)
            .map(|r| (0..nvars).map(|c| i64::from(r == c)).collect())
            .collect();
        Multigrading { weights }
    }

    /// A single-row grading with the given weights.
    pub fn weighted(weights: Vec<i64>) -> Self {
        Multigrading {
            weights: vec![weights],
        }
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn rows(&self) -> usize {
        self.weights.len()
    }

    pub fn ncols(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    /// Some row has every weight strictly positive.
    pub fn is_positive(&self) -> bool {
        self.weights
            .iter()
            .any(|row| !row.is_empty() && row.iter().all(|&w| w > 0))
    }

    pub fn degree_of(&self, m: &Monomial) -> Vec<i64> {
        self.weights
            .iter()
            .map(|row| {
                row.iter()
                    .zip(m.exponents())
                    .map(|(w, &e)| w * i64::from(e))
                    .sum()
            })
            .collect()
    }

    /// Common degree of all terms of `f` (zero vector for the zero
    /// polynomial), or two differing term degrees.
    pub fn degree_vector<F: Field>(&self, f: &Polynomial<F>) -> Result<Homogeneity> {
        if self.ncols() != f.ring().nvars() && self.rows() > 0 {
            return Err(Error::RingMismatch);
        }
        let mut terms = f.terms().iter();
        let Some(first) = terms.next() else {
            return Ok(Homogeneity::Homogeneous(vec![0; self.rows()]));
        };
        let d0 = self.degree_of(&first.mono);
        for t in terms {
            let d = self.degree_of(&t.mono);
            if d != d0 {
                return Ok(Homogeneity::Inhomogeneous {
                    first: d0,
                    second: d,
                });
            }
        }
        Ok(Homogeneity::Homogeneous(d0))
    }

    pub fn is_homogeneous<F: Field>(&self, f: &Polynomial<F>) -> bool {
        matches!(self.degree_vector(f), Ok(Homogeneity::Homogeneous(_)))
    }
}
