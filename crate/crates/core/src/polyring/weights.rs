use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::var::VarId;

/// Quasi-homogeneous weights. Variables without an explicit weight weigh 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector {
    weights: BTreeMap<VarId, u64>,
}

impl WeightVector {
    pub fn new() -> WeightVector {
        WeightVector::default()
    }

    /// `w(a_j) = j` for `1 <= j <= n`: each `a_j` is a degree-`j` symmetric
    /// function of the roots.
    pub fn discriminant(n: usize) -> WeightVector {
        let mut w = WeightVector::new();
        for j in 1..=n {
            w.set(VarId::a(j), j as u64);
        }
        w
    }

    pub fn set(&mut self, v: VarId, weight: u64) -> &mut Self {
        self.weights.insert(v, weight);
        self
    }

    pub fn with(mut self, v: VarId, weight: u64) -> Self {
        self.set(v, weight);
        self
    }

    pub fn get(&self, v: VarId) -> u64 {
        self.weights.get(&v).copied().unwrap_or(0)
    }

    pub fn degree_of(&self, m: &Monomial) -> u64 {
        m.weighted_degree(|v| self.get(v))
    }
}
