//! Variable identifiers and their fixed total order.
//!
//! Order is kind-major, index-minor: `a1 < a2 < … < x < lambda < b1 < b2 <
//! … < generic`. Generic variables are interned and ordered by first
//! interning, which never changes within a process. A `VarId` is a packed
//! `u32` whose integer order is the variable order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const KIND_SHIFT: u32 = 28;
const INDEX_MASK: u32 = (1 << KIND_SHIFT) - 1;

const KIND_A: u32 = 0;
const KIND_X: u32 = 1;
const KIND_LAMBDA: u32 = 2;
const KIND_B: u32 = 3;
const KIND_GENERIC: u32 = 4;

/// A variable of the polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(u32);

/// Unpacked view of a [`VarId`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// Coefficient `a_i` of the generic monic polynomial, `i >= 1`.
    A(usize),
    /// The indeterminate `x`.
    X,
    /// The double-root parameter.
    Lambda,
    /// Coefficient `b_i` of the cofactor `Q`, `i >= 1`.
    B(usize),
    Generic(String),
}

struct Interner {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        RwLock::new(Interner {
            names: Vec::new(),
            ids: HashMap::new(),
        })
    })
}

impl VarId {
    pub const X: VarId = VarId(KIND_X << KIND_SHIFT);
    pub const LAMBDA: VarId = VarId(KIND_LAMBDA << KIND_SHIFT);

    pub fn a(i: usize) -> VarId {
        assert!(i >= 1 && (i as u32) <= INDEX_MASK, "a-index out of range");
        VarId(KIND_A << KIND_SHIFT | i as u32)
    }

    pub fn b(i: usize) -> VarId {
        assert!(i >= 1 && (i as u32) <= INDEX_MASK, "b-index out of range");
        VarId(KIND_B << KIND_SHIFT | i as u32)
    }

    /// Resolves a name. Structured names (`a3`, `x`, `lambda`, `b2`) map to
    /// their kind; anything else is interned as a generic variable.
    pub fn named(name: &str) -> VarId {
        if let Some(v) = Self::parse_structured(name) {
            return v;
        }
        let lock = interner();
        if let Some(&id) = lock.read().unwrap().ids.get(name) {
            return VarId(KIND_GENERIC << KIND_SHIFT | id);
        }
        let mut w = lock.write().unwrap();
        let id = match w.ids.get(name) {
            Some(&id) => id,
            None => {
                let id = w.names.len() as u32;
                assert!(id <= INDEX_MASK, "too many generic variables");
                w.names.push(name.to_string());
                w.ids.insert(name.to_string(), id);
                id
            }
        };
        VarId(KIND_GENERIC << KIND_SHIFT | id)
    }

    fn parse_structured(name: &str) -> Option<VarId> {
        match name {
            "x" => return Some(VarId::X),
            "lambda" => return Some(VarId::LAMBDA),
            _ => {}
        }
        let index = |rest: &str| -> Option<usize> {
            if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            rest.parse::<usize>().ok().filter(|&i| i as u64 <= INDEX_MASK as u64)
        };
        if let Some(rest) = name.strip_prefix('a') {
            return index(rest).map(VarId::a);
        }
        if let Some(rest) = name.strip_prefix('b') {
            return index(rest).map(VarId::b);
        }
        None
    }

    pub fn kind(&self) -> VarKind {
        let idx = (self.0 & INDEX_MASK) as usize;
        match self.0 >> KIND_SHIFT {
            KIND_A => VarKind::A(idx),
            KIND_X => VarKind::X,
            KIND_LAMBDA => VarKind::Lambda,
            KIND_B => VarKind::B(idx),
            _ => VarKind::Generic(interner().read().unwrap().names[idx].clone()),
        }
    }

    /// The `a`-index, if this is a coefficient variable.
    pub fn a_index(&self) -> Option<usize> {
        (self.0 >> KIND_SHIFT == KIND_A).then_some((self.0 & INDEX_MASK) as usize)
    }

    pub fn name(&self) -> String {
        match self.kind() {
            VarKind::A(i) => format!("a{i}"),
            VarKind::X => "x".to_string(),
            VarKind::Lambda => "lambda".to_string(),
            VarKind::B(i) => format!("b{i}"),
            VarKind::Generic(s) => s,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for VarId {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(VarId::named(s))
    }
}

impl Serialize for VarId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for VarId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s.is_empty() {
            return Err(serde::de::Error::custom("empty variable name"));
        }
        Ok(VarId::named(&s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_major_index_minor() {
        let mut vs = [VarId::named("zeta"),
            VarId::b(1),
            VarId::LAMBDA,
            VarId::X,
            VarId::a(10),
            VarId::a(2)];
        vs.sort();
        let names: Vec<_> = vs.iter().map(|v| v.name()).collect();
        assert_eq!(names, ["a2", "a10", "x", "lambda", "b1", "zeta"]);
    }

    #[test]
    fn structured_names_round_trip() {
        for name in ["a1", "a12", "x", "lambda", "b3"] {
            assert_eq!(VarId::named(name).name(), name);
        }
        assert!(matches!(VarId::named("a0").kind(), VarKind::Generic(_)));
        assert!(matches!(VarId::named("a01").kind(), VarKind::Generic(_)));
        assert_eq!(VarId::named("t"), VarId::named("t"));
        assert_eq!(VarId::a(4).a_index(), Some(4));
        assert_eq!(VarId::b(4).a_index(), None);
    }

    #[test]
    fn generics_follow_interning_order() {
        let first = VarId::named("var_first_interned");
        let second = VarId::named("a_var_second_interned");
        assert!(first < second);
        assert!(VarId::b(9999) < first);
    }
}
