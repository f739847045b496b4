//! Per-degree change-of-basis matrices, built once and shared.
//!
//! Every matrix row expresses one basis element in power sums, indexed by
//! position in [`partitions_of`]. Inverses map power-sum coordinates back.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition, SkewDiagram};
use crate::symfunc::{complete_homogeneous_p, Basis, SymFunc};
use crate::tableau::kostka;

pub(crate) type Matrix = Vec<Vec<BigRational>>;

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_λ = Σ_μ R[λ][μ] m_μ`; lower triangular in the canonical order.
    #[cfg_attr(not(test), allow(dead_code))]
    pub p_to_m: Vec<Vec<BigInt>>,
    to_p: [Matrix; 5],
    from_p: [Matrix; 5],
}

fn slot(b: Basis) -> usize {
    match b {
        Basis::E => 0,
        Basis::H => 1,
        Basis::M => 2,
        Basis::P => 3,
        Basis::S => 4,
    }
}

impl DegreeTables {
    /// Row `i`: the power-sum coordinates of `b_{parts[i]}`.
    pub fn to_p(&self, b: Basis) -> &Matrix {
        &self.to_p[slot(b)]
    }

    /// Row `i`: the `b`-coordinates of `p_{parts[i]}`.
    pub fn p_to(&self, b: Basis) -> &Matrix {
        &self.from_p[slot(b)]
    }

    fn build(n: usize) -> DegreeTables {
        let parts = partitions_of(n);
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let size = parts.len();

        let p_to_m: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|lambda| {
                let expansion = power_sum_in_monomials(lambda);
                let mut row = vec![BigInt::zero(); size];
                for (mu, c) in expansion {
                    row[index[&mu]] = c;
                }
                row
            })
            .collect();

        // Forward substitution: m_λ = (p_λ - Σ_{μ before λ} R[λ][μ] m_μ) / R[λ][λ].
        let mut m_to_p: Matrix = Vec::with_capacity(size);
        for (i, row) in p_to_m.iter().enumerate() {
            let mut acc = unit(size, i);
            for (j, r) in row.iter().enumerate().take(i) {
                if r.is_zero() {
                    continue;
                }
                let r = BigRational::from_integer(r.clone());
                for (a, m) in acc.iter_mut().zip(&m_to_p[j]) {
                    *a -= &r * m;
                }
            }
            debug_assert!(row[(i + 1)..].iter().all(Zero::is_zero));
            let diag = BigRational::from_integer(row[i].clone());
            for a in &mut acc {
                *a /= &diag;
            }
            m_to_p.push(acc);
        }

        let kostka: Vec<Vec<u64>> = parts
            .iter()
            .map(|lambda| {
                let shape = SkewDiagram::straight(lambda.clone());
                parts.iter().map(|mu| kostka(&shape, mu).expect("same size")).collect()
            })
            .collect();

        let s_to_p: Matrix = kostka
            .iter()
            .map(|krow| {
                let mut row = vec![BigRational::zero(); size];
                for (k, m_row) in krow.iter().zip(&m_to_p) {
                    if *k == 0 {
                        continue;
                    }
                    let k = BigRational::from_integer(BigInt::from(*k));
                    for (a, m) in row.iter_mut().zip(m_row) {
                        *a += &k * m;
                    }
                }
                row
            })
            .collect();

        let h_to_p: Matrix = parts
            .iter()
            .map(|lambda| dense_row(&complete_homogeneous_p(lambda), &index, size))
            .collect();
        let e_to_p: Matrix = parts
            .iter()
            .map(|lambda| dense_row(&complete_homogeneous_p(lambda).omega(), &index, size))
            .collect();
        let p_to_p: Matrix = (0..size).map(|i| unit(size, i)).collect();
        let p_to_m_rational: Matrix = p_to_m
            .iter()
            .map(|row| row.iter().cloned().map(BigRational::from_integer).collect())
            .collect();

        let e_inv = invert(&e_to_p);
        let h_inv = invert(&h_to_p);
        let s_inv = invert(&s_to_p);
        DegreeTables {
            parts,
            index,
            p_to_m,
            from_p: [e_inv, h_inv, p_to_m_rational, p_to_p.clone(), s_inv],
            to_p: [e_to_p, h_to_p, m_to_p, p_to_p, s_to_p],
        }
    }
}

fn unit(size: usize, i: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); size];
    v[i] = BigRational::one();
    v
}

fn dense_row(f: &SymFunc, index: &HashMap<Partition, usize>, size: usize) -> Vec<BigRational> {
    let mut row = vec![BigRational::zero(); size];
    for (lambda, c) in f.terms() {
        row[index[lambda]] = c.clone();
    }
    row
}

/// `p_λ` in the monomial basis, built one factor at a time with
/// `m_μ p_r = Σ_ν mult_ν(new part) m_ν`, where `ν` adds `r` to one distinct
/// part value of `μ` or appends a new part `r`.
pub(crate) fn power_sum_in_monomials(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut current: BTreeMap<Partition, BigInt> = BTreeMap::from([(Partition::empty(), BigInt::one())]);
    for &r in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (mu, c) in &current {
            for (a, _) in mu.multiplicities() {
                let mut parts = mu.parts().to_vec();
                let pos = parts.iter().position(|&x| x == a).expect("part present");
                parts[pos] = a + r;
                let nu = Partition::from_unsorted(parts);
                let mult = nu.parts().iter().filter(|&&x| x == a + r).count();
                *next.entry(nu).or_insert_with(BigInt::zero) += c * BigInt::from(mult);
            }
            let nu = mu.union(&Partition::row(r));
            let mult = nu.parts().iter().filter(|&&x| x == r).count();
            *next.entry(nu).or_insert_with(BigInt::zero) += c * BigInt::from(mult);
        }
        current = next;
    }
    current
}

/// Gauss-Jordan inverse over the rationals. Panics on a singular matrix,
/// which cannot happen for a change of basis.
pub(crate) fn invert(a: &Matrix) -> Matrix {
    let n = a.len();
    let mut work: Matrix = a.to_vec();
    let mut inv: Matrix = (0..n).map(|i| unit(n, i)).collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .expect("change-of-basis matrix is invertible");
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].clone();
        for x in &mut work[col] {
            *x /= &p;
        }
        for x in &mut inv[col] {
            *x /= &p;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            let (pivot_work, pivot_inv) = (work[col].clone(), inv[col].clone());
            for (x, y) in work[r].iter_mut().zip(&pivot_work) {
                *x -= &factor * y;
            }
            for (x, y) in inv[r].iter_mut().zip(&pivot_inv) {
                *x -= &factor * y;
            }
        }
    }
    inv
}

type Slot = Arc<OnceLock<Arc<DegreeTables>>>;

/// Tables for degree `n`, built on first use. Concurrent callers asking for
/// the same degree wait for a single build.
pub(crate) fn tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Slot>>> = OnceLock::new();
    let slot = {
        let mut map = CACHE
            .get_or_init(Default::default)
            .lock()
            .expect("table cache poisoned");
        map.entry(n).or_default().clone()
    };
    slot.get_or_init(|| Arc::new(DegreeTables::build(n))).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn single_step_rule() {
        // p_1 p_1 = m_2 + 2 m_11
        let got = power_sum_in_monomials(&part("[1,1]"));
        assert_eq!(
            got,
            BTreeMap::from([(part("[2]"), BigInt::from(1)), (part("[1,1]"), BigInt::from(2))])
        );
        // p_21 = m_3 + m_21
        let got = power_sum_in_monomials(&part("[2,1]"));
        assert_eq!(
            got,
            BTreeMap::from([(part("[3]"), BigInt::from(1)), (part("[2,1]"), BigInt::from(1))])
        );
    }

    #[test]
    fn triangular_with_multiplicity_diagonal() {
        let t = tables(6);
        for (i, lambda) in t.parts.iter().enumerate() {
            assert_eq!(
                t.p_to_m[i][i],
                BigInt::from(lambda.multiplicity_factorials()),
                "{lambda}"
            );
            for j in i + 1..t.parts.len() {
                assert!(t.p_to_m[i][j].is_zero());
            }
        }
    }

    #[test]
    fn inverse_of_small_matrix() {
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let a = vec![vec![q(0, 1), q(2, 1)], vec![q(1, 1), q(1, 3)]];
        let inv = invert(&a);
        assert_eq!(inv, vec![vec![q(-1, 6), q(1, 1)], vec![q(1, 2), q(0, 1)]]);
    }
}
