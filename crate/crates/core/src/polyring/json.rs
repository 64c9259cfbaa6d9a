//! The polynomial interchange format:
//! `{"vars": ["a1", …], "terms": [{"coeff": "p/q", "exps": {"a1": 3}}, …]}`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Coeff, Monomial, MultiPoly, PolyError, VarId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub exps: BTreeMap<String, u32>,
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        PolyJson {
            vars: p.vars().iter().map(|v| v.name()).collect(),
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: m.iter().map(|(v, e)| (v.name(), e)).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for MultiPoly {
    type Error = PolyError;

    fn try_from(j: &PolyJson) -> Result<Self, PolyError> {
        let fmt = |s: String| PolyError::Format(s);
        let declared: HashSet<&str> = j.vars.iter().map(String::as_str).collect();
        if declared.len() != j.vars.len() {
            return Err(fmt("duplicate entry in \"vars\"".into()));
        }
        let mut seen = HashSet::new();
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let c: Coeff = t.coeff.parse().map_err(|e| fmt(format!("{e}")))?;
            if c.is_zero() {
                return Err(fmt("zero coefficient".into()));
            }
            let mut pairs = Vec::with_capacity(t.exps.len());
            for (name, &e) in &t.exps {
                if !declared.contains(name.as_str()) {
                    return Err(fmt(format!("variable {name:?} missing from \"vars\"")));
                }
                if e == 0 {
                    return Err(fmt(format!("zero exponent for {name:?}")));
                }
                pairs.push((VarId::named(name), e));
            }
            let m = Monomial::from_pairs(pairs);
            if !seen.insert(m.clone()) {
                return Err(fmt(format!("duplicate monomial {m}")));
            }
            terms.push((m, c));
        }
        Ok(MultiPoly::from_terms(terms))
    }
}

impl MultiPoly {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("polynomial JSON is always representable")
    }

    pub fn from_json_str(s: &str) -> Result<MultiPoly, PolyError> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Format(e.to_string()))?;
        MultiPoly::try_from(&j)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        MultiPoly::try_from(&j).map_err(serde::de::Error::custom)
    }
}
