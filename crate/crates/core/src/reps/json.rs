use serde::Serialize;

use super::{Matrix, Representation};
use crate::ncalg::json_support::coeff_latex;
use crate::ncalg::Algebra;
use crate::scalar::ScalarWire;

/// Sparse triplets `(row, column, value)` with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixWire {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, ScalarWire)>,
}

impl MatrixWire {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixWire {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.triplets().map(|(r, c, x)| (r + 1, c + 1, x.to_wire())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationWire {
    pub label: String,
    pub dim: usize,
    pub weights: Vec<Vec<i64>>,
    pub e: Vec<MatrixWire>,
    pub f: Vec<MatrixWire>,
}

impl Representation {
    pub fn to_wire(&self) -> RepresentationWire {
        let r = self.algebra().rank();
        RepresentationWire {
            label: self.label().to_string(),
            dim: self.dim(),
            weights: self.weights().to_vec(),
            e: (0..r).map(|i| MatrixWire::from_matrix(self.e_mat(i))).collect(),
            f: (0..r).map(|i| MatrixWire::from_matrix(self.f_mat(i))).collect(),
        }
    }
}

/// `pmatrix` block.
pub fn matrix_latex(alg: &Algebra, m: &Matrix) -> String {
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols())
            .map(|c| match m.get(r, c) {
                None => "0".to_string(),
                Some(x) => {
                    let (neg, body) = coeff_latex(alg, x);
                    if neg {
                        format!("-{body}")
                    } else {
                        body
                    }
                }
            })
            .collect();
        rows.push(cells.join(" & "));
    }
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}
