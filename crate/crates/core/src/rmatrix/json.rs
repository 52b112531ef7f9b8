use serde::Serialize;

use super::RMatrix;
use crate::matrix::SparseMatrix;
use crate::reps::matrix_latex;
use crate::scalar::{PointValue, ScalarWire};

/// Nonzero entries `R^{ca}_{db}` as `[c, a, d, b, value]`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RMatrixWire {
    pub n: usize,
    pub entries: Vec<(usize, usize, usize, usize, ScalarWire)>,
}

/// Point-evaluated entries: value `p + r·sqrt(d)` as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointMatrixWire {
    pub n: usize,
    pub v: String,
    pub radicand: String,
    pub entries: Vec<(usize, usize, usize, usize, String, String)>,
}

impl RMatrix {
    pub fn to_wire(&self) -> RMatrixWire {
        let n = self.n;
        RMatrixWire {
            n,
            entries: self
                .matrix
                .triplets()
                .map(|(r, c, x)| (r / n + 1, r % n + 1, c / n + 1, c % n + 1, x.to_wire()))
                .collect(),
        }
    }

    pub fn to_latex(&self) -> String {
        matrix_latex(&self.alg, &self.matrix)
    }
}

impl PointMatrixWire {
    pub fn new(m: &SparseMatrix<PointValue>, n: usize, v: &crate::scalar::Rational) -> Self {
        let radicand = m.triplets().next().map(|(_, _, x)| x.radicand().to_string()).unwrap_or_else(|| "0".into());
        PointMatrixWire {
            n,
            v: v.to_string(),
            radicand,
            entries: m
                .triplets()
                .map(|(r, c, x)| {
                    (r / n + 1, r % n + 1, c / n + 1, c % n + 1, x.rational().to_string(), x.irrational().to_string())
                })
                .collect(),
        }
    }
}
