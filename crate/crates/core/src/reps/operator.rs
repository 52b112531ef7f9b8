use super::{Matrix, Representation};
use crate::ncalg::{Algebra, NcExpr};
use crate::Error;

/// Square matrix of algebra elements, e.g. `(L^±)^a_b`; indices are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorMatrix {
    alg: Algebra,
    dim: usize,
    entries: Vec<NcExpr>,
}

impl OperatorMatrix {
    pub fn zeros(alg: &Algebra, dim: usize) -> Self {
        OperatorMatrix { alg: alg.clone(), dim, entries: vec![NcExpr::zero(alg); dim * dim] }
    }

    pub fn from_fn<F>(alg: &Algebra, dim: usize, mut f: F) -> Result<Self, Error>
    where
        F: FnMut(usize, usize) -> Result<NcExpr, Error>,
    {
        let mut out = Self::zeros(alg, dim);
        for a in 0..dim {
            for b in 0..dim {
                out.set(a, b, f(a, b)?)?;
            }
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize) -> &NcExpr {
        &self.entries[a * self.dim + b]
    }

    pub fn set(&mut self, a: usize, b: usize, x: NcExpr) -> Result<(), Error> {
        if x.algebra() != &self.alg {
            return Err(Error::ContextMismatch);
        }
        if a >= self.dim || b >= self.dim {
            return Err(Error::IndexOutOfRange(format!("({}, {}) in {}x{0}", a + 1, b + 1, self.dim)));
        }
        self.entries[a * self.dim + b] = x;
        Ok(())
    }

    pub fn map<F: Fn(&NcExpr) -> NcExpr>(&self, f: F) -> Self {
        OperatorMatrix { alg: self.alg.clone(), dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    /// `D((L)^a_b)` for every entry.
    pub fn evaluate(&self, rep: &Representation) -> Result<Vec<Vec<Matrix>>, Error> {
        (0..self.dim).map(|a| (0..self.dim).map(|b| rep.evaluate(self.get(a, b))).collect()).collect()
    }
}
