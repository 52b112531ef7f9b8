//! Cartan data of the supported algebras and the scalar field they live over.

use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::scalar::{bracket_two, Scalar, ScalarSpec};
use crate::Error;

pub type Q64 = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    /// `A_N`, `N >= 1`.
    A(usize),
    G2,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    d: Vec<Q64>,
    inv_cartan: Vec<Vec<Q64>>,
    /// `L · d_i`, so that `q_i = v^{scale_i}`.
    scale: Vec<i64>,
    scalars: ScalarSpec,
}

/// `U_q(g)` for `g = A_N` or `G_2`: Cartan matrix, symmetrizers `d_i` (longest root
/// has `d = 1`), inverse Cartan matrix, and the scalar field with `q = v^L`.
#[derive(Clone, Debug)]
pub struct Algebra(Arc<Inner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// `U_q(A_N)` over `Q(v)` with `q = v^{N+1}`.
    pub fn a(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("A_N needs N >= 1".into()));
        }
        let cartan = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let scalars = ScalarSpec::rational(n as u32 + 1);
        Self::build(CartanType::A(n), cartan, vec![Q64::one(); n], scalars)
    }

    /// `U_q(G_2)` with `a = [[2,-1],[-3,2]]`, `d = (1, 1/3)`, `q = v^3` (so `q_2 = v`),
    /// and `s = [2]_{q_2}^{1/2}` adjoined.
    pub fn g2() -> Self {
        let scalars = ScalarSpec::new(3, Some(bracket_two())).expect("valid G2 field");
        Self::build(CartanType::G2, vec![vec![2, -1], vec![-3, 2]], vec![Q64::one(), Q64::new(1, 3)], scalars)
            .expect("G2 Cartan data is consistent")
    }

    /// Parse `a<N>`, `aN:<N>`, `a:<N>` or `g2`.
    pub fn parse(name: &str) -> Result<Self, Error> {
        let lower = name.trim().to_ascii_lowercase();
        if lower == "g2" {
            return Ok(Self::g2());
        }
        let rest = lower
            .strip_prefix("an:")
            .or_else(|| lower.strip_prefix("a:"))
            .or_else(|| lower.strip_prefix('a'))
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown algebra {name:?}")))?;
        let n: usize = rest.parse().map_err(|_| Error::InvalidAlgebra(format!("unknown algebra {name:?}")))?;
        Self::a(n)
    }

    fn build(cartan_type: CartanType, cartan: Vec<Vec<i64>>, d: Vec<Q64>, scalars: ScalarSpec) -> Result<Self, Error> {
        let r = cartan.len();
        for i in 0..r {
            for j in 0..r {
                if d[i] * Q64::from(cartan[i][j]) != d[j] * Q64::from(cartan[j][i]) {
                    return Err(Error::InvalidAlgebra(format!("not symmetrizable at ({i}, {j})")));
                }
            }
        }
        let inv_cartan = invert_rational(&cartan)
            .ok_or_else(|| Error::InvalidAlgebra("singular Cartan matrix".into()))?;
        let l = Q64::from(scalars.root_order() as i64);
        let scale = d
            .iter()
            .map(|&di| {
                let s = di * l;
                s.is_integer()
                    .then(|| s.to_integer())
                    .ok_or_else(|| Error::InvalidAlgebra(format!("q^{di} not representable")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Algebra(Arc::new(Inner { cartan_type, cartan, d, inv_cartan, scale, scalars })))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.0.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.0.cartan.len()
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.0.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.0.cartan
    }

    pub fn d(&self, i: usize) -> Q64 {
        self.0.d[i]
    }

    pub fn inv_cartan(&self, i: usize, j: usize) -> Q64 {
        self.0.inv_cartan[i][j]
    }

    /// `L`, with `q = v^L`.
    pub fn root_order(&self) -> i64 {
        self.0.scalars.root_order() as i64
    }

    /// `L · d_i`: `q_i = v^{scale(i)}`.
    pub fn scale(&self, i: usize) -> i64 {
        self.0.scale[i]
    }

    pub fn scalars(&self) -> &ScalarSpec {
        &self.0.scalars
    }

    /// `q_i^k`.
    pub fn q_i_pow(&self, i: usize, k: i64) -> Scalar {
        self.0.scalars.v_pow(self.scale(i) * k)
    }

    /// `ω_i = q_i - q_i^{-1}`.
    pub fn omega(&self, i: usize) -> Scalar {
        self.q_i_pow(i, 1) - self.q_i_pow(i, -1)
    }

    /// `[m]_{q_i}`.
    pub fn qnum_i(&self, i: usize, m: i64) -> Scalar {
        self.0.scalars.qnum(m, self.d(i)).expect("q_i is representable")
    }

    /// `v`-exponent of `q^{(α_i, α_j)} = q^{d_i a_ij}`.
    pub fn root_form_exp(&self, i: usize, j: usize) -> i64 {
        self.scale(i) * self.cartan(i, j)
    }

    /// `v`-exponent of `q^{(μ, ν)}` for weights in fundamental-weight coordinates,
    /// `(μ, ν) = Σ d_i (a^{-1})_{ij} μ_i ν_j`.
    pub fn weight_form_exp(&self, mu: &[i64], nu: &[i64]) -> Result<i64, Error> {
        let r = self.rank();
        let mut acc = Q64::zero();
        for i in 0..r {
            for j in 0..r {
                acc += Q64::from(self.scale(i)) * self.inv_cartan(i, j) * Q64::from(mu[i] * nu[j]);
            }
        }
        if !acc.is_integer() {
            return Err(Error::NotRepresentable(format!("q^(({mu:?},{nu:?})) = v^{acc}")));
        }
        Ok(acc.to_integer())
    }

    /// Root-lattice coordinates of a weight difference given in fundamental-weight
    /// coordinates: solves `δ_k = Σ_j a_kj m_j`.
    pub fn to_root_coords(&self, delta: &[i64]) -> Vec<Q64> {
        let r = self.rank();
        (0..r)
            .map(|j| (0..r).map(|k| self.inv_cartan(j, k) * Q64::from(delta[k])).sum())
            .collect()
    }

    /// Fundamental-weight coordinates of the simple root `α_j`: column `j` of `a`.
    pub fn simple_root_weight(&self, j: usize) -> Vec<i64> {
        (0..self.rank()).map(|k| self.cartan(k, j)).collect()
    }
}

fn invert_rational(a: &[Vec<i64>]) -> Option<Vec<Vec<Q64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q64>> = a.iter().map(|r| r.iter().map(|&x| Q64::from(x)).collect()).collect();
    let mut inv: Vec<Vec<Q64>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Q64::one() } else { Q64::zero() }).collect()).collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        inv.swap(k, p);
        let piv = m[k][k];
        for j in 0..n {
            m[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k];
                for j in 0..n {
                    let (mk, ik) = (m[k][j], inv[k][j]);
                    m[i][j] -= f * mk;
                    inv[i][j] -= f * ik;
                }
            }
        }
    }
    Some(inv)
}
