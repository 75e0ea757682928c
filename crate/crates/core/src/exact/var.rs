//! Global variable registry.
//!
//! Every polynomial variable is an index into one process-wide table. The
//! table is seeded with the fixed variable universe used throughout the crate
//! (trace coordinates, matrix indeterminates, torus coordinates, generator
//! names), so the monomial order of all standard expressions is identical in
//! every run. Ad-hoc names are appended on first use.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// Variable handle. Ordering follows registration order; earlier variables
/// are larger in the monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

struct Registry {
    names: Vec<&'static str>,
    laurent: Vec<bool>,
    index: HashMap<&'static str, u32>,
}

impl Registry {
    fn insert(&mut self, name: &str, laurent: bool) -> u32 {
        let id = self.names.len() as u32;
        let name: &'static str = Box::leak(name.to_owned().into_boxed_str());
        self.names.push(name);
        self.laurent.push(laurent);
        self.index.insert(name, id);
        id
    }
}

/// Number of torus coordinates `x1..xN` registered as Laurent variables.
pub const TORUS_VARS: usize = 12;

fn standard_names() -> Vec<(String, bool)> {
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut push = |s: String, l: bool| out.push((s, l));
    for s in ["t1", "t2", "t12"] {
        push(s.into(), false);
    }
    for copy in 1..=2 {
        for s in ["t1", "t2", "t12"] {
            push(format!("{s}_{copy}"), false);
        }
    }
    for m in ["a", "b"] {
        for ij in ["11", "12", "21", "22"] {
            push(format!("{m}{ij}"), false);
        }
    }
    for i in 1..=2 {
        for (j, k) in [(1, 1), (1, 2), (2, 2)] {
            push(format!("a_{i}_{j}_{k}"), false);
        }
    }
    for (j, k) in [(1, 1), (1, 2), (2, 2)] {
        push(format!("b_{j}_{k}"), false);
    }
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                push(format!("c_{i}_{j}_{k}"), false);
            }
        }
    }
    for g in 1..=4 {
        push(format!("g{g}"), false);
    }
    for j in 1..=TORUS_VARS {
        push(format!("x{j}"), true);
    }
    for s in ["x", "y", "z", "w", "u", "v"] {
        push(s.into(), false);
    }
    for i in 1..=8 {
        for j in (i + 1)..=8 {
            push(format!("s_{i}_{j}"), false);
        }
    }
    out
}

fn registry() -> &'static RwLock<Registry> {
    static REGISTRY: OnceLock<RwLock<Registry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut reg = Registry { names: Vec::new(), laurent: Vec::new(), index: HashMap::new() };
        for (name, laurent) in standard_names() {
            reg.insert(&name, laurent);
        }
        RwLock::new(reg)
    })
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    name != "i" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Var {
    fn register(name: &str, laurent: bool) -> Result<Var> {
        if !valid_name(name) {
            return Err(Error::InvalidVariable(name.to_owned()));
        }
        if let Some(v) = Var::lookup(name) {
            if laurent && !v.is_laurent() {
                return Err(Error::LaurentConflict(name.to_owned()));
            }
            return Ok(v);
        }
        let mut reg = registry().write().expect("variable registry poisoned");
        // Another thread may have raced us between the read and the write.
        if let Some(&id) = reg.index.get(name) {
            return Ok(Var(id));
        }
        Ok(Var(reg.insert(name, laurent)))
    }

    /// Looks up or registers an ordinary (non-Laurent) variable.
    ///
    /// Panics on a malformed name; use [`Var::try_new`] for user input.
    pub fn new(name: &str) -> Var {
        Var::try_new(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(name: &str) -> Result<Var> {
        Var::register(name, false)
    }

    /// Looks up or registers a Laurent variable (negative exponents allowed).
    pub fn laurent(name: &str) -> Result<Var> {
        Var::register(name, true)
    }

    pub fn lookup(name: &str) -> Option<Var> {
        let reg = registry().read().expect("variable registry poisoned");
        reg.index.get(name).map(|&id| Var(id))
    }

    pub fn name(self) -> &'static str {
        registry().read().expect("variable registry poisoned").names[self.0 as usize]
    }

    pub fn is_laurent(self) -> bool {
        registry().read().expect("variable registry poisoned").laurent[self.0 as usize]
    }

    /// Torus coordinate `x_j` (1-based).
    pub fn torus(j: usize) -> Var {
        assert!((1..=TORUS_VARS).contains(&j), "torus index out of range");
        Var::lookup(&format!("x{j}")).expect("torus variables are pre-registered")
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_order_is_fixed() {
        assert!(Var::new("t1") < Var::new("t2"));
        assert!(Var::new("t2") < Var::new("t12"));
        assert!(Var::new("t12") < Var::new("t1_1"));
        assert!(Var::new("x") < Var::new("y"));
    }

    #[test]
    fn torus_vars_are_laurent() {
        assert!(Var::torus(1).is_laurent());
        assert!(!Var::new("t1").is_laurent());
        assert!(matches!(Var::laurent("t1"), Err(Error::LaurentConflict(_))));
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Var::try_new("1abc").is_err());
        assert!(Var::try_new("i").is_err());
        assert!(Var::try_new("a-b").is_err());
        assert_eq!(Var::try_new("fresh_name_7").unwrap().name(), "fresh_name_7");
    }
}
