//! Matrix representations, evaluation of expressions, tensor products through the
//! coproduct, and relation checks.
//!
//! `D(x)[r][c]` is the coefficient of basis vector `r` in `x` applied to basis vector `c`.

mod checks;
mod json;
mod operator;

use std::collections::HashMap;
use std::sync::Mutex;

use crate::matrix::SparseMatrix;
use crate::ncalg::{Algebra, CartanType, Letter, Monomial, NcExpr, TMono, TensorExpr};
use crate::scalar::Scalar;
use crate::Error;

pub use checks::{check_hopf, check_relations};
pub(crate) use checks::residual_detail;
pub use json::{matrix_latex, MatrixWire, RepresentationWire};
pub use operator::OperatorMatrix;

pub type Matrix = SparseMatrix<Scalar>;

/// Generator matrices plus `t`-weights: `D(t_j)` is diagonal with entry `q_j^{μ_j(a)}` on
/// basis vector `a`, where `μ(a)` is stored in fundamental-weight coordinates.
pub struct Representation {
    alg: Algebra,
    dim: usize,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
    weights: Vec<Vec<i64>>,
    label: String,
    word_cache: Mutex<HashMap<Vec<Letter>, Matrix>>,
}

impl Clone for Representation {
    fn clone(&self) -> Self {
        Representation {
            alg: self.alg.clone(),
            dim: self.dim,
            e: self.e.clone(),
            f: self.f.clone(),
            weights: self.weights.clone(),
            label: self.label.clone(),
            word_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation({}, dim {})", self.label, self.dim)
    }
}

impl Representation {
    /// Assemble from raw data; `weights[a]` is the weight of basis vector `a`.
    pub fn new(
        alg: &Algebra,
        e: Vec<Matrix>,
        f: Vec<Matrix>,
        weights: Vec<Vec<i64>>,
        label: impl Into<String>,
    ) -> Result<Self, Error> {
        let dim = weights.len();
        let r = alg.rank();
        if e.len() != r || f.len() != r {
            return Err(Error::Dimension(format!("expected {r} generator matrices")));
        }
        if e.iter().chain(&f).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension(format!("generator matrices must be {dim}x{dim}")));
        }
        if weights.iter().any(|w| w.len() != r) {
            return Err(Error::Dimension(format!("weights must have {r} components")));
        }
        Ok(Representation {
            alg: alg.clone(),
            dim,
            e,
            f,
            weights,
            label: label.into(),
            word_cache: Mutex::new(HashMap::new()),
        })
    }

    /// The `(N+1)`-dimensional representation of `U_q(A_N)`: `t_j` has exponent
    /// `δ_{aj} - δ_{(a-1)j}` on basis `a`, `D(e_j)` is `1` at `(j, j+1)` and `D(f_j)` at
    /// `(j+1, j)` (1-based).
    pub fn minimal_an(n: usize) -> Result<Self, Error> {
        let alg = Algebra::a(n)?;
        let k = alg.scalars();
        let dim = n + 1;
        let unit = |r: usize, c: usize| Matrix::from_triplets(dim, dim, k, [(r, c, k.one())]);
        let e = (0..n).map(|j| unit(j, j + 1)).collect();
        let f = (0..n).map(|j| unit(j + 1, j)).collect();
        let weights = (0..dim)
            .map(|a| (0..n).map(|j| i64::from(a == j) - i64::from(a == j + 1)).collect())
            .collect();
        Self::new(&alg, e, f, weights, format!("A{n} minimal"))
    }

    /// The 7-dimensional representation of `U_q(G_2)`, with `[2]^{1/2}` as the adjoined `s`.
    pub fn minimal_g2() -> Self {
        let alg = Algebra::g2();
        let k = alg.scalars();
        let s = k.sqrt().expect("G2 field has s");
        let m = |entries: &[(usize, usize, &Scalar)]| {
            Matrix::from_triplets(7, 7, k, entries.iter().map(|&(r, c, x)| (r - 1, c - 1, x.clone())))
        };
        let one = k.one();
        let e1 = m(&[(2, 3, &one), (5, 6, &one)]);
        let f1 = m(&[(3, 2, &one), (6, 5, &one)]);
        let e2 = m(&[(1, 2, &one), (6, 7, &one), (3, 4, &s), (4, 5, &s)]);
        let f2 = m(&[(2, 1, &one), (7, 6, &one), (4, 3, &s), (5, 4, &s)]);
        let mu1 = [0, 1, -1, 0, 1, -1, 0];
        let mu2 = [1, -1, 2, 0, -2, 1, -1];
        let weights = (0..7).map(|a| vec![mu1[a], mu2[a]]).collect();
        Self::new(&alg, vec![e1, e2], vec![f1, f2], weights, "G2 minimal").expect("G2 data is consistent")
    }

    /// The minimal representation of the given algebra.
    pub fn minimal(alg: &Algebra) -> Self {
        match alg.cartan_type() {
            CartanType::A(n) => Self::minimal_an(n).expect("N >= 1"),
            CartanType::G2 => Self::minimal_g2(),
        }
    }

    /// `R1 ⊗ R2` with generators acting through the coproduct; basis `(a1, a2) -> a1·dim2 + a2`.
    pub fn tensor(r1: &Representation, r2: &Representation) -> Result<Self, Error> {
        if r1.alg != r2.alg {
            return Err(Error::ContextMismatch);
        }
        let alg = &r1.alg;
        let mut e = Vec::new();
        let mut f = Vec::new();
        for i in 1..=alg.rank() {
            e.push(evaluate_tensor(&crate::ncalg::coproduct(&NcExpr::e(alg, i)?), &[r1, r2])?);
            f.push(evaluate_tensor(&crate::ncalg::coproduct(&NcExpr::f(alg, i)?), &[r1, r2])?);
        }
        let mut weights = Vec::with_capacity(r1.dim * r2.dim);
        for w1 in &r1.weights {
            for w2 in &r2.weights {
                weights.push(w1.iter().zip(w2).map(|(a, b)| a + b).collect());
            }
        }
        Self::new(alg, e, f, weights, format!("({}) x ({})", r1.label, r2.label))
    }

    /// `R ⊗ R` of the minimal representation.
    pub fn tensor_square(alg: &Algebra) -> Self {
        let m = Self::minimal(alg);
        Self::tensor(&m, &m).expect("same algebra")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Weight of basis vector `a` (0-based), fundamental-weight coordinates.
    pub fn weight(&self, a: usize) -> &[i64] {
        &self.weights[a]
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// `D(e_i)`, 0-based `i`.
    pub fn e_mat(&self, i: usize) -> &Matrix {
        &self.e[i]
    }

    /// `D(f_i)`, 0-based `i`.
    pub fn f_mat(&self, i: usize) -> &Matrix {
        &self.f[i]
    }

    pub fn letter(&self, l: Letter) -> &Matrix {
        match l {
            Letter::E(i) => &self.e[i as usize],
            Letter::F(i) => &self.f[i as usize],
        }
    }

    /// Copy with the entry `(r, c)` of `D(e_i)` replaced; used for negative controls.
    pub fn with_e_entry(&self, i: usize, r: usize, c: usize, x: Scalar) -> Self {
        let mut out = self.clone();
        let mut trip: Vec<(usize, usize, Scalar)> =
            self.e[i].triplets().filter(|&(a, b, _)| (a, b) != (r, c)).map(|(a, b, y)| (a, b, y.clone())).collect();
        trip.push((r, c, x));
        out.e[i] = Matrix::from_triplets(self.dim, self.dim, self.alg.scalars(), trip);
        out.label = format!("{} (modified)", self.label);
        out
    }

    /// `v`-exponent of `t`-monomial `t` on basis vector `a`.
    pub fn t_exponent(&self, t: &TMono, a: usize) -> Result<i64, Error> {
        let l = self.alg.root_order();
        let num: i64 =
            t.numerators().iter().enumerate().map(|(j, &k)| k * self.alg.scale(j) * self.weights[a][j]).sum();
        if num % l != 0 {
            return Err(Error::NotRepresentable(format!(
                "t-monomial {:?}/{l} on basis {} of {}",
                t.numerators(),
                a + 1,
                self.label
            )));
        }
        Ok(num / l)
    }

    /// Diagonal entries of `D(t)`.
    pub fn t_diagonal(&self, t: &TMono) -> Result<Vec<Scalar>, Error> {
        (0..self.dim).map(|a| Ok(self.alg.scalars().v_pow(self.t_exponent(t, a)?))).collect()
    }

    pub fn t_matrix(&self, t: &TMono) -> Result<Matrix, Error> {
        Ok(Matrix::diagonal(self.t_diagonal(t)?, self.alg.scalars()))
    }

    /// `D(word)`, cached.
    pub fn word_matrix(&self, word: &[Letter]) -> Result<Matrix, Error> {
        if let Some(l) = word.iter().find(|l| l.index() >= self.alg.rank()) {
            return Err(Error::IndexOutOfRange(l.name()));
        }
        if word.is_empty() {
            return Ok(Matrix::identity(self.dim, self.alg.scalars()));
        }
        if let Some(m) = self.word_cache.lock().expect("cache lock").get(word) {
            return Ok(m.clone());
        }
        let m = if word.len() == 1 {
            self.letter(word[0]).clone()
        } else {
            let head = self.word_matrix(&word[..word.len() - 1])?;
            head.mul(self.letter(word[word.len() - 1]))
        };
        self.word_cache.lock().expect("cache lock").insert(word.to_vec(), m.clone());
        Ok(m)
    }

    pub fn monomial_matrix(&self, m: &Monomial) -> Result<Matrix, Error> {
        let w = self.word_matrix(&m.word)?;
        if m.t.is_identity() {
            return Ok(w);
        }
        let diag = self.t_diagonal(&m.t)?;
        Ok(w.scale_columns(&diag))
    }

    /// `D(x)`; an algebra homomorphism from free words with `t`-commutation.
    pub fn evaluate(&self, x: &NcExpr) -> Result<Matrix, Error> {
        if x.algebra() != &self.alg {
            return Err(Error::ContextMismatch);
        }
        let k = self.alg.scalars();
        let mut acc = Matrix::zeros(self.dim, self.dim, k);
        for (m, c) in x.terms() {
            acc = acc.add(&self.monomial_matrix(m)?.scale(c));
        }
        Ok(acc)
    }
}

/// `Σ c · D_1(m_1) ⊗ … ⊗ D_k(m_k)`.
pub fn evaluate_tensor(x: &TensorExpr, reps: &[&Representation]) -> Result<Matrix, Error> {
    if x.arity() != reps.len() {
        return Err(Error::Dimension(format!("tensor of arity {} on {} representations", x.arity(), reps.len())));
    }
    let k = x.algebra().scalars();
    let dim: usize = reps.iter().map(|r| r.dim).product();
    let mut acc = Matrix::zeros(dim, dim, k);
    for (ms, c) in x.terms() {
        let mut m = reps[0].monomial_matrix(&ms[0])?;
        for (r, mono) in reps.iter().zip(ms).skip(1) {
            m = m.kron(&r.monomial_matrix(mono)?);
        }
        acc = acc.add(&m.scale(c));
    }
    Ok(acc)
}

/// `D(x)` for a sum of products, computed as `Σ D(x_1)…D(x_k)` without expanding.
pub fn evaluate_product(reps: &Representation, factors: &[&NcExpr]) -> Result<Matrix, Error> {
    let mut acc = Matrix::identity(reps.dim, reps.alg.scalars());
    for x in factors {
        acc = acc.mul(&reps.evaluate(x)?);
    }
    Ok(acc)
}
