//! The ring of symmetric functions over the rationals.
//!
//! A [`SymFunc`] is stored in the power-sum basis: products concatenate
//! parts, and both `ω` and the Hall scalar product act diagonally there.
//! The other four classical bases are reached through cached per-degree
//! change-of-basis matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition, SkewDiagram};
use crate::tableau::lr_expand;
use crate::tables::tables;

/// Exact rational coefficients.
pub type Rational = BigRational;

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Elementary.
    E,
    /// Complete homogeneous.
    H,
    /// Monomial.
    M,
    /// Power sum.
    P,
    /// Schur.
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::E, Basis::H, Basis::M, Basis::P, Basis::S];

    pub fn symbol(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::M => 'm',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn from_symbol(c: char) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.symbol() == c)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(Basis::from_symbol), chars.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::Domain(format!("unknown basis {s:?}, expected one of e, h, m, p, s"))),
        }
    }
}

/// A symmetric function, possibly mixing degrees, as power-sum coefficients.
///
/// Zero coefficients are never stored; the constant term is keyed by `∅`.
/// Terms iterate by degree, then in the canonical partition order.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

/// Sign pattern of the power-sum coefficients, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PSignature {
    Zero,
    Positive { witness: Partition },
    Negative { witness: Partition },
    Mixed { positive: Partition, negative: Partition },
}

impl PSignature {
    pub fn is_positive(&self) -> bool {
        matches!(self, PSignature::Positive { .. })
    }
}

/// `h_r = Σ_{μ ⊢ r} z_μ^{-1} p_μ`.
fn complete_homogeneous_single(r: usize) -> SymFunc {
    SymFunc::from_p_terms(partitions_of(r).into_iter().map(|mu| {
        let z = BigInt::from(mu.z());
        (mu, Rational::new(BigInt::one(), z))
    }))
}

/// `h_λ = h_{λ_1} ⋯ h_{λ_ℓ}` in power sums.
pub(crate) fn complete_homogeneous_p(lambda: &Partition) -> SymFunc {
    lambda
        .parts()
        .iter()
        .fold(SymFunc::one(), |acc, &r| &acc * &complete_homogeneous_single(r))
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SymFunc::from_p_terms([(Partition::empty(), c)])
    }

    /// `p_λ`.
    pub fn power_sum(lambda: Partition) -> Self {
        SymFunc::from_p_terms([(lambda, Rational::one())])
    }

    /// Sums power-sum terms, merging repeats and dropping zeros.
    pub fn from_p_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SymFunc::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    /// `Σ c_λ b_λ` for coefficients given in basis `b`.
    pub fn from_basis_terms(b: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SymFunc::zero();
        for (lambda, c) in terms {
            if !c.is_zero() {
                out = out + SymFunc::from_basis(b, &lambda).scale(&c);
            }
        }
        out
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The basis element `b_λ`. Every basis gives `1` at `λ = ∅`.
    pub fn from_basis(b: Basis, lambda: &Partition) -> Self {
        match b {
            Basis::P => SymFunc::power_sum(lambda.clone()),
            Basis::H => complete_homogeneous_p(lambda),
            // e_λ = ω(h_λ)
            Basis::E => complete_homogeneous_p(lambda).omega(),
            Basis::M | Basis::S => {
                let t = tables(lambda.size());
                let row = &t.to_p(b)[t.index[lambda]];
                SymFunc::from_p_terms(
                    t.parts
                        .iter()
                        .cloned()
                        .zip(row.iter().cloned()),
                )
            }
        }
    }

    /// The skew Schur function `s_D = Σ_ν c_{Dν} s_ν`.
    pub fn skew_schur(shape: &SkewDiagram) -> Self {
        let mut out = SymFunc::zero();
        for (nu, c) in lr_expand(shape) {
            out = out + SymFunc::from_basis(Basis::S, &nu).scale(&Rational::from_integer(BigInt::from(c)));
        }
        out
    }

    /// Power-sum terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    /// Power-sum coefficient of `p_λ`.
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees carrying a nonzero term, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        ds.dedup();
        ds
    }

    /// The single degree of a nonzero homogeneous function.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// The constant term, when the function is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.degrees().as_slice() {
            [] => Some(Rational::zero()),
            [0] => Some(self.coeff(&Partition::empty())),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, a)| (l.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(SymFunc::one(), |acc, _| &acc * self)
    }

    /// The involution `ω`: `ω(p_λ) = (-1)^{|λ| - ℓ(λ)} p_λ`.
    pub fn omega(&self) -> Self {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| {
                    let c = if (l.size() - l.len()) % 2 == 1 { -c } else { c.clone() };
                    (l.clone(), c)
                })
                .collect(),
        }
    }

    /// Hall scalar product: `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
    pub fn scalar_product(&self, other: &SymFunc) -> Rational {
        let mut total = Rational::zero();
        for (lambda, a) in &self.terms {
            if let Some(b) = other.terms.get(lambda) {
                total += a * b * Rational::from_integer(BigInt::from(lambda.z()));
            }
        }
        total
    }

    /// Signs of the power-sum coefficients. Witnesses are the first
    /// partition, in canonical order, carrying each sign.
    pub fn p_signature(&self) -> PSignature {
        let positive = self.terms.iter().find(|(_, c)| c.is_positive()).map(|(l, _)| l.clone());
        let negative = self.terms.iter().find(|(_, c)| c.is_negative()).map(|(l, _)| l.clone());
        match (positive, negative) {
            (None, None) => PSignature::Zero,
            (Some(witness), None) => PSignature::Positive { witness },
            (None, Some(witness)) => PSignature::Negative { witness },
            (Some(positive), Some(negative)) => PSignature::Mixed { positive, negative },
        }
    }

    /// Coefficients `c_λ` with `Σ c_λ b_λ = self`, zeros omitted.
    pub fn to_basis(&self, b: Basis) -> BTreeMap<Partition, Rational> {
        if b == Basis::P {
            return self.terms.clone();
        }
        let mut out = BTreeMap::new();
        for n in self.degrees() {
            let t = tables(n);
            let inv = t.p_to(b);
            let mut coords = vec![Rational::zero(); t.parts.len()];
            for (lambda, a) in self.terms.range(Partition::row(n)..=Partition::column(n)) {
                for (c, x) in coords.iter_mut().zip(&inv[t.index[lambda]]) {
                    if !x.is_zero() {
                        *c += a * x;
                    }
                }
            }
            for (lambda, c) in t.parts.iter().zip(coords) {
                if !c.is_zero() {
                    out.insert(lambda.clone(), c);
                }
            }
        }
        out
    }

    /// Image in `k` variables `x_1..x_k`, built from the monomial expansion:
    /// `m_λ` contributes every distinct rearrangement of its exponents.
    pub fn expand_in_variables(&self, k: usize) -> Polynomial {
        let mut poly = Polynomial::zero(k);
        for (lambda, c) in self.to_basis(Basis::M) {
            if lambda.len() > k {
                continue;
            }
            let mut exps: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
            exps.resize(k, 0);
            exps.sort_unstable();
            loop {
                poly.add_term(exps.clone(), c.clone());
                if !next_permutation(&mut exps) {
                    break;
                }
            }
        }
        poly
    }

    /// Text form in basis `b`, e.g. `m[2,1] + 2*m[1,1,1]`.
    pub fn display_in(&self, b: Basis) -> String {
        format_terms(b, &self.to_basis(b))
    }

    pub fn to_json(&self, b: Basis) -> SymFuncJson {
        SymFuncJson {
            basis: b,
            terms: self
                .to_basis(b)
                .into_iter()
                .map(|(partition, c)| JsonTerm {
                    partition,
                    coeff: format!("{}/{}", c.numer(), c.denom()),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SymFuncJson) -> Result<Self> {
        let terms = json
            .terms
            .iter()
            .map(|t| Ok((t.partition.clone(), parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymFunc::from_basis_terms(json.basis, terms))
    }
}

/// Renders `Σ c_λ b_λ` with terms in the given (canonical) order.
pub fn format_terms(b: Basis, terms: &BTreeMap<Partition, Rational>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (lambda, c)) in terms.iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (i, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            _ => {
                out.push(' ');
                out.push_str(sign);
                out.push(' ');
            }
        }
        let magnitude = c.abs();
        if lambda.is_empty() {
            out.push_str(&magnitude.to_string());
        } else {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push(b.symbol());
            out.push_str(&lambda.to_string());
        }
    }
    out
}

/// Parses `"n"` or `"n/d"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Json(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// JSON form: `{"basis": "p", "terms": [{"partition": [2,1], "coeff": "1/2"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: Basis,
    pub terms: Vec<JsonTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub partition: Partition,
    pub coeff: String,
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(Basis::P, &self.terms))
    }
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;

    fn add(mut self, rhs: SymFunc) -> SymFunc {
        for (l, c) in rhs.terms {
            self.add_term(l, c);
        }
        self
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.into_iter().map(|(l, c)| (l, -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl<'a> Mul<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;

    /// `p_λ p_μ = p_{λ∪μ}`, extended bilinearly.
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &rhs.terms {
                out.add_term(l1.union(l2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

/// A polynomial in `x_1..x_k` with rational coefficients, keyed by exponent vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term(vec![0; vars], Rational::one());
        p
    }

    /// The single variable `x_i`, 1-based.
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut exps = vec![0; vars];
        exps[i - 1] = 1;
        let mut p = Polynomial::zero(vars);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn num_vars(&self) -> usize {
        self.vars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Value with every variable set to 1: the sum of the coefficients.
    pub fn evaluate_at_ones(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing lexicographic order of exponents, e.g. `x1^2 + x1*x2 + x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| match e {
                    1 => format!("x{}", v + 1),
                    _ => format!("x{}^{e}", v + 1),
                })
                .collect();
            let magnitude = c.abs();
            match (vars.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => f.write_str(&vars.join("*"))?,
                (false, false) => write!(f, "{magnitude}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Product of the integers as a rational.
pub(crate) fn to_rational(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p_terms(terms: &[(&str, Rational)]) -> SymFunc {
        SymFunc::from_p_terms(terms.iter().map(|(l, c)| (part(l), c.clone())))
    }

    #[test]
    fn basis_elements_in_power_sums() {
        assert_eq!(
            SymFunc::from_basis(Basis::P, &part("[2,1]")),
            p_terms(&[("[2,1]", q(1, 1))])
        );
        assert_eq!(
            SymFunc::from_basis(Basis::H, &part("[3]")),
            p_terms(&[("[3]", q(1, 3)), ("[2,1]", q(1, 2)), ("[1,1,1]", q(1, 6))])
        );
        assert_eq!(
            SymFunc::from_basis(Basis::E, &part("[2]")),
            p_terms(&[("[1,1]", q(1, 2)), ("[2]", q(-1, 2))])
        );
        for b in Basis::ALL {
            assert_eq!(SymFunc::from_basis(b, &Partition::empty()), SymFunc::one());
        }
    }

    #[test]
    fn strips_give_products() {
        let h2 = SymFunc::from_basis(Basis::H, &part("[2]"));
        assert_eq!(SymFunc::skew_schur(&"[2]/[]".parse().unwrap()), h2);
        let e2 = SymFunc::from_basis(Basis::E, &part("[2]"));
        assert_eq!(SymFunc::skew_schur(&"[1,1]/[]".parse().unwrap()), e2);
        assert_eq!(
            SymFunc::skew_schur(&"[3,1]/[1]".parse().unwrap()),
            SymFunc::from_basis(Basis::H, &part("[2,1]"))
        );
    }

    #[test]
    fn products() {
        let p2 = SymFunc::power_sum(part("[2]"));
        let p1 = SymFunc::power_sum(part("[1]"));
        assert_eq!(&p2 * &p1, SymFunc::power_sum(part("[2,1]")));
        let m1 = SymFunc::from_basis(Basis::M, &part("[1]"));
        let sq = (&m1 * &m1).to_basis(Basis::M);
        assert_eq!(sq, BTreeMap::from([(part("[2]"), q(1, 1)), (part("[1,1]"), q(2, 1))]));
        let e2 = SymFunc::from_basis(Basis::E, &part("[2]"));
        let e1 = SymFunc::from_basis(Basis::E, &part("[1]"));
        assert_eq!(&e2 * &e1, SymFunc::from_basis(Basis::E, &part("[2,1]")));
    }

    #[test]
    fn conversions() {
        let s21 = SymFunc::from_basis(Basis::S, &part("[2,1]"));
        assert_eq!(
            s21.to_basis(Basis::M),
            BTreeMap::from([(part("[2,1]"), q(1, 1)), (part("[1,1,1]"), q(2, 1))])
        );
        for n in 1..=6 {
            let en = SymFunc::from_basis(Basis::E, &Partition::row(n));
            assert_eq!(en.to_basis(Basis::M), BTreeMap::from([(Partition::column(n), q(1, 1))]));
        }
        let p11 = SymFunc::from_basis(Basis::P, &part("[1,1]"));
        assert_eq!(p11.to_basis(Basis::E), BTreeMap::from([(part("[1,1]"), q(1, 1))]));
        assert!(SymFunc::zero().to_basis(Basis::S).is_empty());
    }

    #[test]
    fn omega_examples() {
        let h2 = SymFunc::from_basis(Basis::H, &part("[2]"));
        assert_eq!(h2.omega(), SymFunc::from_basis(Basis::E, &part("[2]")));
        let s21 = SymFunc::from_basis(Basis::S, &part("[2,1]"));
        assert_eq!(s21.omega(), s21);
        assert_eq!(SymFunc::power_sum(part("[2]")).omega(), -SymFunc::power_sum(part("[2]")));
    }

    #[test]
    fn scalar_products() {
        let p2 = SymFunc::power_sum(part("[2]"));
        let p11 = SymFunc::power_sum(part("[1,1]"));
        assert_eq!(p2.scalar_product(&p11), q(0, 1));
        assert_eq!(p2.scalar_product(&p2), q(2, 1));
        let s21 = SymFunc::from_basis(Basis::S, &part("[2,1]"));
        assert_eq!(s21.scalar_product(&s21), q(1, 1));
    }

    #[test]
    fn signatures() {
        assert!(SymFunc::from_basis(Basis::H, &part("[3]")).p_signature().is_positive());
        assert_eq!(
            SymFunc::from_basis(Basis::E, &part("[2]")).p_signature(),
            PSignature::Mixed {
                positive: part("[1,1]"),
                negative: part("[2]")
            }
        );
        assert_eq!(SymFunc::zero().p_signature(), PSignature::Zero);
        assert!(matches!(
            (-SymFunc::one()).p_signature(),
            PSignature::Negative { .. }
        ));
    }

    #[test]
    fn variable_expansions() {
        let p2 = SymFunc::power_sum(part("[2]")).expand_in_variables(2);
        assert_eq!(p2.to_string(), "x1^2 + x2^2");
        let e2 = SymFunc::from_basis(Basis::E, &part("[2]")).expand_in_variables(2);
        assert_eq!(e2.to_string(), "x1*x2");
        let h2 = SymFunc::from_basis(Basis::H, &part("[2]")).expand_in_variables(2);
        assert_eq!(h2.to_string(), "x1^2 + x1*x2 + x2^2");
        let m111 = SymFunc::from_basis(Basis::M, &part("[1,1,1]")).expand_in_variables(2);
        assert_eq!(m111, Polynomial::zero(2));
    }

    #[test]
    fn text_rendering() {
        let s21 = SymFunc::from_basis(Basis::S, &part("[2,1]"));
        assert_eq!(s21.display_in(Basis::M), "m[2,1] + 2*m[1,1,1]");
        assert_eq!(
            SymFunc::from_basis(Basis::E, &part("[2]")).display_in(Basis::P),
            "-1/2*p[2] + 1/2*p[1,1]"
        );
        assert_eq!(SymFunc::zero().display_in(Basis::S), "0");
        let f = SymFunc::constant(q(-3, 2)) + SymFunc::power_sum(part("[1]"));
        assert_eq!(f.display_in(Basis::P), "-3/2 + p[1]");
    }

    #[test]
    fn json_round_trip() {
        let f = SymFunc::from_basis(Basis::E, &part("[2]"));
        let json = f.to_json(Basis::P);
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(
            text,
            r#"{"basis":"p","terms":[{"partition":[2],"coeff":"-1/2"},{"partition":[1,1],"coeff":"1/2"}]}"#
        );
        let back: SymFuncJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SymFunc::from_json(&back).unwrap(), f);
        let s = f.to_json(Basis::S);
        assert_eq!(SymFunc::from_json(&s).unwrap(), f);
        let bad = r#"{"basis":"p","terms":[{"partition":[1,2],"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<SymFuncJson>(bad).is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
