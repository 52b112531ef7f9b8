//! The Drinfeld pairing between the `e`- and `f`-parts, Gram matrices on words of a fixed
//! weight, dual bases and the graded pieces of the truncated universal R.
//!
//! Conventions: `⟨e_i, f_j⟩ = -δ_ij / ω_i`, `⟨t^λ, t^μ⟩ = q^{-Σ λ_i μ_j d_i a_ij}`, and
//! `⟨x, y y'⟩ = ⟨x_(1), y⟩⟨x_(2), y'⟩` with `Δ(e) = e⊗1 + t⊗e`. Peeling the first letter
//! `f_j` off the right argument picks every occurrence `p` of `e_j` in the left word:
//!
//! ```text
//! ⟨e_{i_1}…e_{i_m}, f_j y'⟩ = Σ_{p : i_p = j} ⟨e_j, f_j⟩ · q^{Σ_{l<p} d_{i_l} a_{i_l j}} · ⟨e-word without p, y'⟩
//! ```
//!
//! where the `q`-power comes from commuting the `t_{i_l}` (`l < p`) in the left tensor
//! factor past `e_j`. `t`-monomials standing to the right of the words factor out.

mod json;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::matrix::{bareiss_rank, invert_dense};
use crate::ncalg::{Algebra, Letter, Monomial, NcExpr, TMono, Word};
use crate::report::Report;
use crate::scalar::{LaurentPoly, Scalar};
use crate::Error;

pub use json::DualPairSetWire;

/// All words of weight `beta` (letters `kind(i)` repeated `beta_i` times), in lexicographic
/// order with `x_1 < x_2 < …`.
pub fn words_of_weight(beta: &[i64], kind: fn(u8) -> Letter) -> Vec<Word> {
    let mut out = Vec::new();
    let mut counts: Vec<i64> = beta.to_vec();
    let total: i64 = beta.iter().sum();
    let mut cur = Vec::with_capacity(total as usize);
    fn rec(counts: &mut [i64], cur: &mut Vec<Letter>, left: i64, kind: fn(u8) -> Letter, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(kind(i as u8));
                rec(counts, cur, left - 1, kind, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    if beta.iter().all(|&b| b >= 0) {
        rec(&mut counts, &mut cur, total, kind, &mut out);
    }
    out
}

/// `⟨w, w'⟩ / Π_j ⟨e_j, f_j⟩^{β_j}` for an `e`-word `w` and an `f`-word `w'`, a Laurent
/// polynomial with integer coefficients.
pub fn pair_words_normalized(alg: &Algebra, w: &[Letter], wf: &[Letter]) -> LaurentPoly {
    let m = w.len();
    if m != wf.len() || m > 63 {
        return LaurentPoly::zero();
    }
    let mut ew = vec![0usize; m];
    let mut fw = vec![0usize; m];
    for (k, l) in w.iter().enumerate() {
        ew[k] = l.index();
    }
    for (k, l) in wf.iter().enumerate() {
        fw[k] = l.index();
    }
    let mut cnt = vec![0i64; alg.rank()];
    for &i in &ew {
        cnt[i] += 1;
    }
    for &j in &fw {
        cnt[j] -= 1;
    }
    if cnt.iter().any(|&c| c != 0) {
        return LaurentPoly::zero();
    }
    // memo over the set of remaining positions of w; the f-word is consumed left to right,
    // so the number of consumed letters is m - popcount(mask).
    let mut memo: HashMap<u64, LaurentPoly> = HashMap::new();
    fn go(alg: &Algebra, ew: &[usize], fw: &[usize], mask: u64, memo: &mut HashMap<u64, LaurentPoly>) -> LaurentPoly {
        if mask == 0 {
            return LaurentPoly::one();
        }
        if let Some(x) = memo.get(&mask) {
            return x.clone();
        }
        let k = ew.len() - mask.count_ones() as usize;
        let j = fw[k];
        let mut acc = LaurentPoly::zero();
        let mut shift = 0i64;
        for (p, &i) in ew.iter().enumerate() {
            if mask & (1 << p) == 0 {
                continue;
            }
            if i == j {
                let rest = go(alg, ew, fw, mask & !(1 << p), memo);
                acc = acc.add(&rest.shift(shift));
            }
            shift += alg.root_form_exp(i, j);
        }
        memo.insert(mask, acc.clone());
        acc
    }
    go(alg, &ew, &fw, (1u64 << m) - 1, &mut memo)
}

/// `Π_j ⟨e_j, f_j⟩^{β_j} = Π_j (-1/ω_j)^{β_j}`.
pub fn weight_factor(alg: &Algebra, beta: &[i64]) -> Result<Scalar, Error> {
    let mut c = alg.scalars().one();
    for (j, &b) in beta.iter().enumerate() {
        let base = (-alg.omega(j)).inv()?;
        c = &c * &base.pow(b)?;
    }
    Ok(c)
}

/// `v`-exponent of `⟨t^λ, t^μ⟩ = q^{-Σ λ_i μ_j d_i a_ij}`.
pub fn pair_tmonos(alg: &Algebra, lambda: &TMono, mu: &TMono) -> Result<i64, Error> {
    let l = alg.root_order();
    let (a, b) = (lambda.numerators(), mu.numerators());
    let mut num = 0i64;
    for i in 0..alg.rank() {
        for j in 0..alg.rank() {
            num += a[i] * b[j] * alg.scale(i) * alg.cartan(i, j);
        }
    }
    if num % (l * l) != 0 {
        return Err(Error::NotRepresentable(format!("pairing of t-monomials {a:?}/{l}, {b:?}/{l}")));
    }
    Ok(-num / (l * l))
}

/// `⟨x, y⟩` for `x` built from `e`-words and `t`-monomials and `y` from `f`-words and
/// `t`-monomials; bilinear over scalars.
pub fn pair_words(x: &NcExpr, y: &NcExpr) -> Result<Scalar, Error> {
    let alg = x.algebra();
    if y.algebra() != alg {
        return Err(Error::ContextMismatch);
    }
    let k = alg.scalars();
    let mut acc = k.zero();
    for (mx, cx) in x.terms() {
        if mx.word.iter().any(|l| !l.is_e()) {
            return Err(Error::MixedWord);
        }
        for (my, cy) in y.terms() {
            if my.word.iter().any(|l| l.is_e()) {
                return Err(Error::MixedWord);
            }
            let p = pair_words_normalized(alg, &mx.word, &my.word);
            if p.is_zero() {
                continue;
            }
            let beta = crate::ncalg::weight_of(alg, &mx.word)?;
            let tt = pair_tmonos(alg, &mx.t, &my.t)?;
            let val = (&k.from_laurent(p) * &weight_factor(alg, &beta)?).shift(tt);
            acc = &acc + &(&(cx * cy) * &val);
        }
    }
    Ok(acc)
}

fn f_of(i: u8) -> Letter {
    Letter::F(i)
}

fn e_of(i: u8) -> Letter {
    Letter::E(i)
}

/// `e`-word to the `f`-word with the same index sequence.
pub fn bar_word(w: &[Letter]) -> Word {
    w.iter().map(|l| l.swap_kind()).collect()
}

/// `G_{jk} = ⟨w_j, w̄_k⟩` over all words of weight `beta`, lexicographic order.
pub fn gram_matrix(alg: &Algebra, beta: &[i64]) -> Result<Vec<Vec<Scalar>>, Error> {
    let c = weight_factor(alg, beta)?;
    let words = words_of_weight(beta, e_of);
    let k = alg.scalars();
    Ok(normalized_gram(alg, &words)
        .into_iter()
        .map(|row| row.into_iter().map(|p| &k.from_laurent(p) * &c).collect())
        .collect())
}

fn normalized_gram(alg: &Algebra, words: &[Word]) -> Vec<Vec<LaurentPoly>> {
    let bars: Vec<Word> = words.iter().map(|w| bar_word(w)).collect();
    words
        .par_iter()
        .map(|w| bars.iter().map(|wf| pair_words_normalized(alg, w, wf)).collect())
        .collect()
}

/// Bases of the weight-`beta` `e`- and `f`-words, their Gram matrix, and dual terms
/// `(u^i, v_i)` with each `v_i` a single `f`-word and `⟨u^i, v_k⟩ = δ_ik`.
#[derive(Clone, Debug)]
pub struct DualPairSet {
    pub alg: Algebra,
    pub beta: Vec<i64>,
    pub e_words: Vec<Word>,
    pub f_words: Vec<Word>,
    pub gram: Vec<Vec<Scalar>>,
    pub rank: usize,
    pub terms: Vec<(NcExpr, NcExpr)>,
}

impl DualPairSet {
    pub fn height(&self) -> i64 {
        self.beta.iter().sum()
    }

    /// First index pair `(j, k)` violating `Σ_i ⟨w_j, v_i⟩⟨u^i, w̄_k⟩ = G_jk`; `None` if it holds.
    pub fn reconstruction_defect(&self) -> Result<Option<(usize, usize)>, Error> {
        let alg = &self.alg;
        let n = self.e_words.len();
        let left: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                let w = NcExpr::word(alg, self.e_words[j].clone());
                self.terms.iter().map(|(_, v)| pair_words(&w, v)).collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        let right: Vec<Vec<Scalar>> = self
            .terms
            .iter()
            .map(|(u, _)| {
                (0..n)
                    .map(|k| pair_words(u, &NcExpr::word(alg, self.f_words[k].clone())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        for j in 0..n {
            for k in 0..n {
                let s = (0..self.rank).fold(alg.scalars().zero(), |acc, i| &acc + &(&left[j][i] * &right[i][k]));
                if s != self.gram[j][k] {
                    return Ok(Some((j, k)));
                }
            }
        }
        Ok(None)
    }
}

/// Dual pair set for `beta`, with pivot choice by Bareiss elimination.
pub fn dual_pair_basis(alg: &Algebra, beta: &[i64]) -> Result<DualPairSet, Error> {
    if beta.len() != alg.rank() || beta.iter().any(|&b| b < 0) {
        return Err(Error::IndexOutOfRange(format!("weight {beta:?} is not in Q+")));
    }
    let k = alg.scalars();
    let e_words = words_of_weight(beta, e_of);
    let f_words = words_of_weight(beta, f_of);
    let c = weight_factor(alg, beta)?;
    let norm: Vec<Vec<Scalar>> =
        normalized_gram(alg, &e_words).into_iter().map(|r| r.into_iter().map(|p| k.from_laurent(p)).collect()).collect();
    let profile = bareiss_rank(&norm, k);
    let sub: Vec<Vec<Scalar>> = profile
        .pivot_rows
        .iter()
        .map(|&j| profile.pivot_cols.iter().map(|&kk| norm[j][kk].clone()).collect())
        .collect();
    let inv = invert_dense(sub, k).ok_or_else(|| Error::NotRepresentable("singular pivot block".into()))?;
    let cinv = c.inv()?;
    let terms = (0..profile.rank)
        .map(|i| {
            let u = NcExpr::from_terms(
                alg,
                profile.pivot_rows.iter().enumerate().map(|(jj, &j)| {
                    (
                        Monomial { word: e_words[j].clone(), t: TMono::identity(alg.rank()) },
                        &inv[i][jj] * &cinv,
                    )
                }),
            );
            let v = NcExpr::word(alg, f_words[profile.pivot_cols[i]].clone());
            (u, v)
        })
        .collect();
    let gram = norm.into_iter().map(|r| r.into_iter().map(|x| &x * &c).collect()).collect();
    Ok(DualPairSet { alg: alg.clone(), beta: beta.to_vec(), e_words, f_words, gram, rank: profile.rank, terms })
}

/// All `beta ∈ Q+` of height at most `h`, ordered by height then lexicographically.
pub fn weights_up_to_height(rank: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    fn rec(prefix: &mut Vec<i64>, rank: usize, left: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == rank {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=left {
            prefix.push(b);
            rec(prefix, rank, left - b, out);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), rank, h, &mut out);
    out.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    out
}

/// Dual pair sets for every `beta` of height `<= max_height`, computed in parallel.
pub fn truncated_r_terms(alg: &Algebra, max_height: i64) -> Result<Vec<DualPairSet>, Error> {
    if max_height < 0 {
        return Err(Error::IndexOutOfRange("negative height bound".into()));
    }
    weights_up_to_height(alg.rank(), max_height).par_iter().map(|b| dual_pair_basis(alg, b)).collect()
}

/// Dual pair sets for a given list of weights, computed in parallel.
pub fn dual_pair_sets(alg: &Algebra, betas: &[Vec<i64>]) -> Result<BTreeMap<Vec<i64>, DualPairSet>, Error> {
    let sets: Vec<DualPairSet> = betas.par_iter().map(|b| dual_pair_basis(alg, b)).collect::<Result<_, _>>()?;
    Ok(sets.into_iter().map(|s| (s.beta.clone(), s)).collect())
}

/// Whether `x` (pure `e`) pairs to zero with every `f`-word of its weight, or (pure `f`)
/// every `e`-word pairs to zero with it.
pub fn in_radical(x: &NcExpr) -> Result<bool, Error> {
    let alg = x.algebra();
    let Some((m, _)) = x.terms().next() else { return Ok(true) };
    let is_e = m.word.first().is_none_or(|l| l.is_e());
    let beta = crate::ncalg::weight_of(alg, &m.word)?;
    if is_e {
        for wf in words_of_weight(&beta, f_of) {
            if !pair_words(x, &NcExpr::word(alg, wf))?.is_zero() {
                return Ok(false);
            }
        }
    } else {
        for w in words_of_weight(&beta, e_of) {
            if !pair_words(&NcExpr::word(alg, w), x)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn words_up_to(rank: usize, kind: fn(u8) -> Letter, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Word> = layer
            .iter()
            .flat_map(|w| {
                (0..rank as u8).map(move |i| {
                    let mut v = w.clone();
                    v.push(kind(i));
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every `x s y` with `s` a q-Serre element, `x`, `y` words of the same kind and total
/// height at most `max_height` lies in the radical of the pairing.
pub fn check_serre_radical(alg: &Algebra, max_height: usize) -> Result<Report, Error> {
    use crate::ncalg::{serre_element, GeneratorKind};
    let mut report = Report::new(format!("Serre ideal in the radical, height <= {max_height}"));
    let r = alg.rank();
    for (kind, letter) in [(GeneratorKind::E, e_of as fn(u8) -> Letter), (GeneratorKind::F, f_of)] {
        for i in 1..=r {
            for j in (1..=r).filter(|&j| j != i) {
                let s = serre_element(alg, i, j, kind)?;
                let hs = (2 - alg.cartan(i - 1, j - 1)) as usize;
                if hs > max_height {
                    continue;
                }
                let pads = words_up_to(r, letter, max_height - hs);
                let cases: Vec<(&Word, &Word)> = pads
                    .iter()
                    .flat_map(|x| pads.iter().map(move |y| (x, y)))
                    .filter(|(x, y)| x.len() + y.len() + hs <= max_height)
                    .collect();
                let results: Vec<(String, Result<bool, Error>)> = cases
                    .into_par_iter()
                    .map(|(x, y)| {
                        let el = &(&NcExpr::word(alg, x.clone()) * &s) * &NcExpr::word(alg, y.clone());
                        let show = |w: &Word| w.iter().map(|l| l.name()).collect::<Vec<_>>().join(" ");
                        let kind = if letter(0).is_e() { "e" } else { "f" };
                        (format!("[{}] S{kind}({i},{j}) [{}]", show(x), show(y)), in_radical(&el))
                    })
                    .collect();
                for (name, res) in results {
                    match res {
                        Ok(true) => report.pass(name),
                        Ok(false) => report.fail(name, "pairs nontrivially with some word"),
                        Err(e) => report.fail(name, e.to_string()),
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{serre_element, GeneratorKind};

    fn e(alg: &Algebra, s: &str) -> NcExpr {
        NcExpr::word(alg, s.split_whitespace().map(|x| Letter::parse(x).unwrap()).collect())
    }

    #[test]
    fn base_values() {
        let a = Algebra::a(2).unwrap();
        let x = pair_words(&e(&a, "e1"), &e(&a, "f1")).unwrap();
        assert_eq!(x, -a.omega(0).inv().unwrap());
        assert!(pair_words(&e(&a, "e1"), &e(&a, "f2")).unwrap().is_zero());
        assert!(pair_words(&e(&a, "e1"), &e(&a, "f1 f1")).unwrap().is_zero());
        assert!(matches!(pair_words(&e(&a, "f1"), &e(&a, "f1")), Err(Error::MixedWord)));
    }

    #[test]
    fn degree_two_by_hand() {
        // ⟨e1 e2, f1 f2⟩: peel f1 -> position 1 (no t in front): ⟨e1,f1⟩⟨e2,f2⟩.
        // ⟨e1 e2, f2 f1⟩: peel f2 -> position 2, t1 in front contributes q^{a12} = q^{-1}.
        let a = Algebra::a(2).unwrap();
        let k = a.scalars();
        let w = a.omega(0).inv().unwrap();
        let base = &w * &w;
        assert_eq!(pair_words(&e(&a, "e1 e2"), &e(&a, "f1 f2")).unwrap(), base);
        assert_eq!(pair_words(&e(&a, "e1 e2"), &e(&a, "f2 f1")).unwrap(), &base * &k.v_pow(-3));
        let g = gram_matrix(&a, &[1, 1]).unwrap();
        assert_eq!(g.len(), 2);
        let d = dual_pair_basis(&a, &[1, 1]).unwrap();
        assert_eq!(d.rank, 2);
    }

    #[test]
    fn a1_square() {
        // ⟨e e, f f⟩ = ⟨e,f⟩^2 (1 + q^2) with q = v^2.
        let a = Algebra::a(1).unwrap();
        let k = a.scalars();
        let w = a.omega(0).inv().unwrap();
        let expect = &(&w * &w) * &(k.one() + k.v_pow(4));
        assert_eq!(pair_words(&e(&a, "e1 e1"), &e(&a, "f1 f1")).unwrap(), expect);
        let d = dual_pair_basis(&a, &[2]).unwrap();
        assert_eq!(d.rank, 1);
        assert_eq!(d.terms[0].1, e(&a, "f1 f1"));
    }

    #[test]
    fn trivial_weights() {
        let a = Algebra::a(2).unwrap();
        let g = gram_matrix(&a, &[0, 0]).unwrap();
        assert!(g[0][0].is_one());
        let d = dual_pair_basis(&a, &[1, 0]).unwrap();
        assert_eq!(d.terms[0].0, e(&a, "e1").scale(&-a.omega(0)));
        assert_eq!(d.terms[0].1, e(&a, "f1"));
        let t = truncated_r_terms(&Algebra::a(1).unwrap(), 2).unwrap();
        assert_eq!(t.iter().map(|s| s.beta.clone()).collect::<Vec<_>>(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(truncated_r_terms(&a, 1).unwrap().len(), 3);
    }

    #[test]
    fn t_pairing() {
        let g = Algebra::g2();
        let t1 = TMono::new(&g, &[crate::ncalg::Q64::from(1), 0.into()]).unwrap();
        let t2 = TMono::new(&g, &[0.into(), crate::ncalg::Q64::from(1)]).unwrap();
        // q^{-d1 a11} = q^{-2} = v^{-6}; q^{-d1 a12} = q = v^3
        assert_eq!(pair_tmonos(&g, &t1, &t1).unwrap(), -6);
        assert_eq!(pair_tmonos(&g, &t1, &t2).unwrap(), 3);
        assert_eq!(pair_tmonos(&g, &t2, &t1).unwrap(), 3);
    }

    #[test]
    fn serre_in_radical_and_reconstruction() {
        let a = Algebra::a(2).unwrap();
        let s = serre_element(&a, 1, 2, GeneratorKind::E).unwrap();
        assert!(in_radical(&s).unwrap());
        let sf = serre_element(&a, 2, 1, GeneratorKind::F).unwrap();
        assert!(in_radical(&sf).unwrap());
        assert!(!in_radical(&e(&a, "e1 e1 e2")).unwrap());
        let d = dual_pair_basis(&a, &[2, 1]).unwrap();
        assert_eq!(d.rank, 2);
        assert_eq!(d.reconstruction_defect().unwrap(), None);
        let g = Algebra::g2();
        let d = dual_pair_basis(&g, &[1, 2]).unwrap();
        assert_eq!(d.reconstruction_defect().unwrap(), None);
        assert!(in_radical(&serre_element(&g, 2, 1, GeneratorKind::E).unwrap()).unwrap());
    }

    #[test]
    fn serre_ideal_is_radical_in_a2() {
        let r = check_serre_radical(&Algebra::a(2).unwrap(), 3).unwrap();
        assert!(r.passed());
        assert!(!r.items.is_empty());
    }
}
