use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap as HashMap;

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::var::VarId;
use super::weights::WeightVector;
use super::PolyError;

/// Degree of a polynomial in one variable. The zero polynomial has degree
/// `NegInfinity`, which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in strictly decreasing graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality. The zero
/// polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Coeff)>,
}

/// Products with more term pairs than this are split across threads.
const PAR_MUL_THRESHOLD: usize = 1 << 14;

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Coeff::one())
    }

    pub fn constant(c: impl Into<Coeff>) -> MultiPoly {
        let c = c.into();
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: vec![(Monomial::one(), c)],
        }
    }

    pub fn var(v: VarId) -> MultiPoly {
        MultiPoly::term(Coeff::one(), Monomial::var(v))
    }

    pub fn term(c: impl Into<Coeff>, m: Monomial) -> MultiPoly {
        let c = c.into();
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: vec![(m, c)] }
    }

    /// Collects arbitrary terms, summing repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(terms: I) -> MultiPoly {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::default();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => *e += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Coeff>) -> MultiPoly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { terms }
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Coefficient of an exact monomial (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.iter().flat_map(|(m, _)| m.vars()).collect()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in_var(&self, v: VarId) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(v))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn scale(&self, c: &Coeff) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        // Multiplying by a monomial preserves the order of terms.
        MultiPoly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &Coeff| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), conv(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(c))));
        MultiPoly { terms: out }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, true)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if short.len() == 1 {
            let (m, c) = &short.terms[0];
            return MultiPoly {
                terms: long.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
            };
        }
        if short.len() * long.len() >= PAR_MUL_THRESHOLD && crate::par::enabled() {
            let chunk = short.len().div_ceil(crate::par::threads().max(1)).max(1);
            let pieces: Vec<&[(Monomial, Coeff)]> = short.terms.chunks(chunk).collect();
            let partials = crate::par::map(&pieces, |piece| {
                let part = MultiPoly {
                    terms: piece.to_vec(),
                };
                part.mul_serial(long)
            });
            return crate::par::sum_tree(partials);
        }
        short.mul_serial(long)
    }

    fn mul_serial(&self, other: &MultiPoly) -> MultiPoly {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity_and_hasher(self.len() * other.len() / 2 + 1, Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: VarId) -> MultiPoly {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let (e, rest) = m.split_var(v);
            if e == 0 {
                return None;
            }
            let m = rest.mul(&Monomial::var_pow(v, e - 1));
            Some((m, c * &Coeff::from(e as i64)))
        });
        MultiPoly::from_terms(terms)
    }

    /// `[c_0, …, c_d]` with `self = Σ c_i v^i`; `[0]` for the zero polynomial.
    pub fn coeffs_in_var(&self, v: VarId) -> Vec<MultiPoly> {
        let d = match self.degree_in_var(v) {
            Degree::NegInfinity => return vec![MultiPoly::zero()],
            Degree::Finite(d) => d as usize,
        };
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                // Removing one variable can reorder terms.
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MultiPoly { terms: ts }
            })
            .collect()
    }

    /// Inverse of [`coeffs_in_var`](Self::coeffs_in_var).
    pub fn from_coeffs_in_var(v: VarId, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul_monomial(&Monomial::var_pow(v, i as u32)));
            }
        }
        acc
    }

    /// Exact quotient `self / g`.
    pub fn exact_divide(&self, g: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let (lm, lc) = g.leading_term().ok_or(PolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        if g.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let q = m.div(lm).ok_or(PolyError::NotDivisible)?;
                terms.push((q, c / lc));
            }
            return Ok(MultiPoly { terms });
        }
        let mut rem: BTreeMap<Monomial, Coeff> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        let tail = &g.terms[1..];
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lm).ok_or(PolyError::NotDivisible)?;
            let qc = &c / lc;
            for (gm, gc) in tail {
                let prod = gm.mul(&qm);
                let delta = gc * &qc;
                match rem.get_mut(&prod) {
                    Some(e) => {
                        *e -= &delta;
                        if e.is_zero() {
                            rem.remove(&prod);
                        }
                    }
                    None => {
                        rem.insert(prod, -delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        // Leading terms of the remainder strictly decrease, so the quotient is
        // already sorted.
        Ok(MultiPoly { terms: quotient })
    }

    /// Largest `m` with `v^m | self`.
    pub fn divisibility_order(&self, v: VarId) -> Result<u32, PolyError> {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(v))
            .min()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// The common weighted degree of all terms, if there is one.
    pub fn qh_degree(&self, w: &WeightVector) -> Result<Option<u64>, PolyError> {
        let mut degs = self.terms.iter().map(|(m, _)| w.degree_of(m));
        let first = degs.next().ok_or(PolyError::ZeroPolynomial)?;
        Ok(degs.all(|d| d == first).then_some(first))
    }

    /// Simultaneous substitution `v ↦ image` for every binding.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, MultiPoly>) -> MultiPoly {
        let bound: BTreeSet<VarId> = bindings.keys().copied().collect();
        let independent = bindings
            .values()
            .all(|img| img.vars().is_disjoint(&bound));
        if independent {
            let mut acc = self.clone();
            for (&v, img) in bindings {
                acc = acc.substitute_var(v, img);
            }
            acc
        } else {
            self.substitute_termwise(bindings)
        }
    }

    /// Horner evaluation in `v` with polynomial image.
    pub fn substitute_var(&self, v: VarId, image: &MultiPoly) -> MultiPoly {
        if self.degree_in_var(v) == Degree::Finite(0) || self.is_zero() {
            return self.clone();
        }
        let cs = self.coeffs_in_var(v);
        let mut acc = cs.last().cloned().unwrap_or_default();
        for c in cs.iter().rev().skip(1) {
            acc = acc.mul(image).add(c);
        }
        acc
    }

    fn substitute_termwise(&self, bindings: &BTreeMap<VarId, MultiPoly>) -> MultiPoly {
        let mut powers: HashMap<(VarId, u32), MultiPoly> = HashMap::default();
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut t = MultiPoly::constant(c.clone());
            for (v, e) in m.iter() {
                match bindings.get(&v) {
                    Some(img) => {
                        let p = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        t = t.mul(p);
                    }
                    None => kept.push((v, e)),
                }
            }
            acc = acc.add(&t.mul_monomial(&Monomial::from_pairs(kept)));
        }
        acc
    }

    /// Binds some variables to constants, leaving the rest symbolic.
    pub fn specialize(&self, point: &BTreeMap<VarId, Coeff>) -> MultiPoly {
        let mut powers: HashMap<(VarId, u32), Coeff> = HashMap::default();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for (v, e) in m.iter() {
                match point.get(&v) {
                    Some(x) => {
                        let p = powers.entry((v, e)).or_insert_with(|| x.pow(e));
                        coeff *= p;
                    }
                    None => kept.push((v, e)),
                }
            }
            (Monomial::from_pairs(kept), coeff)
        });
        MultiPoly::from_terms(terms)
    }

    /// Exact value at a point binding every variable of `self`.
    pub fn evaluate(&self, point: &BTreeMap<VarId, Coeff>) -> Result<Coeff, PolyError> {
        let mut powers: HashMap<(VarId, u32), Coeff> = HashMap::default();
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = point.get(&v).ok_or(PolyError::UnboundVariable(v))?;
                let p = powers.entry((v, e)).or_insert_with(|| x.pow(e));
                t *= p;
            }
            acc += &t;
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl From<VarId> for MultiPoly {
    fn from(v: VarId) -> Self {
        MultiPoly::var(v)
    }
}
