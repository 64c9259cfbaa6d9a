use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::VarId;

type Exps = SmallVec<[(VarId, u32); 8]>;

/// A power product. Exponents are stored sorted by variable with no zero
/// entries; the total degree is cached for the graded comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    exps: Exps,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        let mut exps = Exps::new();
        exps.push((v, e));
        Monomial { degree: e, exps }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Monomial {
        let mut exps: Exps = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|a| a.0);
        let mut merged = Exps::new();
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial { degree, exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, v: VarId) -> u32 {
        match self.exps.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Exps::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut exps = Exps::with_capacity(self.exps.len());
        let mut j = 0;
        let b = &other.exps;
        for &(v, e) in &self.exps {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                match e.cmp(&b[j].1) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => exps.push((v, e - b[j].1)),
                }
                j += 1;
            } else {
                exps.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            exps,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    /// Returns `(exponent of v, self with v removed)`.
    pub fn split_var(&self, v: VarId) -> (u32, Monomial) {
        match self.exps.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => {
                let e = self.exps[i].1;
                let mut exps = self.exps.clone();
                exps.remove(i);
                (
                    e,
                    Monomial {
                        degree: self.degree - e,
                        exps,
                    },
                )
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Weighted degree under `weight`.
    pub fn weighted_degree(&self, weight: impl Fn(VarId) -> u64) -> u64 {
        self.exps.iter().map(|&(v, e)| weight(v) * e as u64).sum()
    }

    /// All divisors, including `1` and `self`.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one()];
        for &(v, e) in &self.exps {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for m in &out {
                for k in 0..=e {
                    next.push(m.mul(&Monomial::var_pow(v, k)));
                }
            }
            out = next;
        }
        out
    }
}

/// Graded lexicographic order: total degree first, then the exponent of the
/// smallest variable in which the two differ (larger exponent is greater).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.exps, &other.exps);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // The one containing the smaller variable has the
                        // larger exponent there.
                        return if va < vb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> VarId {
        VarId::a(i)
    }

    #[test]
    fn grlex_examples() {
        let m = |p: &[(usize, u32)]| Monomial::from_pairs(p.iter().map(|&(i, e)| (a(i), e)));
        // degree dominates
        assert!(m(&[(3, 3)]) > m(&[(1, 2)]));
        // a1 is the most significant variable
        assert!(m(&[(1, 1)]) > m(&[(2, 1)]));
        assert!(m(&[(1, 1), (3, 1)]) > m(&[(2, 2)]));
        assert!(m(&[(1, 2), (2, 1)]) > m(&[(1, 1), (2, 2)]));
        assert_eq!(m(&[(1, 1), (2, 1)]).cmp(&m(&[(2, 1), (1, 1)])), Ordering::Equal);
    }

    #[test]
    fn division_and_divisors() {
        let m = Monomial::from_pairs([(a(1), 2), (a(3), 1)]);
        let d = Monomial::from_pairs([(a(1), 1)]);
        assert_eq!(m.div(&d).unwrap(), Monomial::from_pairs([(a(1), 1), (a(3), 1)]));
        assert!(m.div(&Monomial::var(a(2))).is_none());
        assert!(m.div(&Monomial::var_pow(a(3), 2)).is_none());
        assert_eq!(m.divisors().len(), 6);
        assert!(m.divisors().iter().all(|x| x.divides(&m)));
    }

    #[test]
    fn from_pairs_merges() {
        let m = Monomial::from_pairs([(a(2), 1), (a(1), 0), (a(2), 2)]);
        assert_eq!(m, Monomial::var_pow(a(2), 3));
        assert_eq!(m.degree(), 3);
    }
}
