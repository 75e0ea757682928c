//! Minimal zero-sum multisets over `(ℤ/m)^N`, Davenport constants, and the
//! generating sets they induce for invariants of central quotients.
//!
//! Enumeration walks zero-sum-free multisets `T` in sorted order, keeping the
//! set of subset sums of `T`. Every minimal zero-sum multiset `U` of length at
//! least two arises exactly once, as `T ∪ {−ΣT}` with `T = U` minus one copy
//! of its largest element, so the output needs no deduplication.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::WeightVector;

/// Default ceiling on the group order `m^N`.
pub const DEFAULT_BUDGET: u64 = 4096;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "CHARVAR_BUDGET";

/// Upper limit on the group order `m^N` for enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    /// [`BUDGET_ENV`] if set to a positive integer, else the default.
    pub fn from_env() -> Budget {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&b| b > 0)
            .map_or_else(Budget::default, Budget)
    }

    fn check(self, m: u32, n: usize) -> Result<usize> {
        if m == 0 || n == 0 {
            return Err(Error::Input("modulus and rank must be positive".into()));
        }
        let order = (m as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        if order > self.0 {
            return Err(Error::BudgetExceeded { needed: order, budget: self.0 });
        }
        Ok(order as usize)
    }
}

/// The group `(ℤ/m)^N` with elements numbered by [`WeightVector::index`].
struct Group {
    m: u32,
    n: usize,
    order: usize,
    digits: Vec<Vec<u32>>,
}

impl Group {
    fn new(m: u32, n: usize, order: usize) -> Group {
        let digits = (0..order).map(|i| WeightVector::from_index(m, n, i).entries().to_vec()).collect();
        Group { m, n, order, digits }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (&self.digits[a], &self.digits[b]);
        (0..self.n).rev().fold(0, |acc, k| acc * self.m as usize + ((da[k] + db[k]) % self.m) as usize)
    }

    fn neg(&self, a: usize) -> usize {
        let d = &self.digits[a];
        (0..self.n).rev().fold(0, |acc, k| acc * self.m as usize + ((self.m - d[k]) % self.m) as usize)
    }

    fn vector(&self, a: usize) -> WeightVector {
        WeightVector::from_index(self.m, self.n, a)
    }
}

/// Subset-sum set as a bitset over the group.
#[derive(Clone)]
struct SumSet(Vec<u64>);

impl SumSet {
    fn empty(order: usize) -> SumSet {
        SumSet(vec![0; order.div_ceil(64)])
    }

    fn contains(&self, a: usize) -> bool {
        self.0[a / 64] >> (a % 64) & 1 == 1
    }

    fn insert(&mut self, a: usize) {
        self.0[a / 64] |= 1 << (a % 64);
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }

    /// Sums of `T ∪ {v}` given the sums of `T`.
    fn extend(&self, g: &Group, v: usize) -> SumSet {
        let mut out = self.clone();
        out.insert(v);
        for s in self.iter() {
            out.insert(g.add(s, v));
        }
        out
    }
}

/// A minimal zero-sum multiset, sorted by element index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroSumMultiset {
    elements: Vec<WeightVector>,
}

impl ZeroSumMultiset {
    /// Validates minimality by brute force over all submultisets.
    pub fn new(mut elements: Vec<WeightVector>) -> Result<ZeroSumMultiset> {
        elements.sort_by_key(WeightVector::index);
        if !is_minimal_zero_sum(&elements) {
            return Err(Error::Input("not a minimal zero-sum multiset".into()));
        }
        Ok(ZeroSumMultiset { elements })
    }

    pub fn elements(&self) -> &[WeightVector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for ZeroSumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ZeroSumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Independent checker: total sum is zero and no proper nonempty
/// submultiset (taken by position) sums to zero.
pub fn is_minimal_zero_sum(elements: &[WeightVector]) -> bool {
    let Some(first) = elements.first() else { return false };
    let len = elements.len();
    assert!(len < 64, "submultiset check limited to 63 elements");
    let zero = WeightVector::zero(first.modulus(), first.rank());
    let full: u64 = if len == 64 { u64::MAX } else { (1 << len) - 1 };
    for mask in 1..=full {
        let sum = (0..len).filter(|&i| mask >> i & 1 == 1).fold(zero.clone(), |acc, i| acc.add(&elements[i]));
        if sum.is_zero() != (mask == full) {
            return false;
        }
    }
    true
}

fn walk(g: &Group, seq: &mut Vec<usize>, sums: &SumSet, total: usize, visit: &mut impl FnMut(&[usize], usize)) {
    visit(seq, total);
    let start = seq.last().copied().unwrap_or(1);
    for v in start..g.order {
        if sums.contains(g.neg(v)) {
            continue;
        }
        let next = sums.extend(g, v);
        seq.push(v);
        walk(g, seq, &next, g.add(total, v), visit);
        seq.pop();
    }
}

/// Visits every nonempty zero-sum-free sorted multiset with its sum.
fn for_each_zero_sum_free(g: &Group, mut visit: impl FnMut(&[usize], usize)) {
    let mut seq = Vec::new();
    walk(g, &mut seq, &SumSet::empty(g.order), 0, &mut |s, total| {
        if !s.is_empty() {
            visit(s, total);
        }
    });
}

/// All of `𝒱(m, N)`, sorted by length and then by element indices.
pub fn minimal_zero_sum_multisets(m: u32, n: usize, budget: Budget) -> Result<Vec<ZeroSumMultiset>> {
    let order = budget.check(m, n)?;
    let g = Group::new(m, n, order);
    let mut raw: Vec<Vec<usize>> = vec![vec![0]];
    for_each_zero_sum_free(&g, |seq, total| {
        let closing = g.neg(total);
        if closing >= *seq.last().expect("nonempty") {
            let mut u = seq.to_vec();
            u.push(closing);
            raw.push(u);
        }
    });
    raw.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(raw.into_iter().map(|u| ZeroSumMultiset { elements: u.into_iter().map(|i| g.vector(i)).collect() }).collect())
}

/// Davenport constant: the maximal length of a minimal zero-sum multiset,
/// i.e. one more than the longest zero-sum-free multiset.
pub fn davenport(m: u32, n: usize, budget: Budget) -> Result<usize> {
    let order = budget.check(m, n)?;
    let g = Group::new(m, n, order);
    let mut memo = HashMap::new();
    Ok(longest_extension(&g, &SumSet::empty(order), 1, &mut memo) + 1)
}

/// Longest zero-sum-free extension using elements `≥ start`. It depends on
/// the prefix only through its subset sums, which makes it memoizable.
fn longest_extension(g: &Group, sums: &SumSet, start: usize, memo: &mut HashMap<(Vec<u64>, usize), usize>) -> usize {
    let key = (sums.0.clone(), start);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut best = 0;
    for v in start..g.order {
        if !sums.contains(g.neg(v)) {
            best = best.max(1 + longest_extension(g, &sums.extend(g, v), v, memo));
        }
    }
    memo.insert(key, best);
    best
}

/// `N(m − 1) + 1`.
pub fn davenport_lower_bound(m: u32, n: usize) -> usize {
    n * (m as usize - 1) + 1
}

/// `(m − 1)(1 + (N − 1)·m·ln m) + 1`, rounded outward to the next float.
pub fn davenport_upper_bound(m: u32, n: usize) -> f64 {
    let m_f = m as f64;
    let bound = (m_f - 1.0) * (1.0 + (n as f64 - 1.0) * m_f * m_f.ln()) + 1.0;
    bound * (1.0 + 4.0 * f64::EPSILON) + f64::EPSILON
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    Trace,
    QInvariant,
}

/// A generator of the ambient invariant ring with its weight in `(ℤ/m)^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGenerator {
    pub name: String,
    pub weight: WeightVector,
    pub kind: GeneratorKind,
}

impl WeightedGenerator {
    pub fn new(name: &str, m: u32, weight: &[i64], kind: GeneratorKind) -> WeightedGenerator {
        WeightedGenerator { name: name.to_owned(), weight: WeightVector::new(m, weight.to_vec()), kind }
    }
}

/// A product of generators, stored as sorted generator positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Product {
    pub factors: Vec<usize>,
}

impl Product {
    /// Names with multiplicities, e.g. `["t1", "t1"]`.
    pub fn names<'a>(&self, gens: &'a [WeightedGenerator]) -> Vec<&'a str> {
        self.factors.iter().map(|&i| gens[i].name.as_str()).collect()
    }

    /// `t1^2`, `t1*t2*t12`.
    pub fn render(&self, gens: &[WeightedGenerator]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < self.factors.len() {
            let f = self.factors[k];
            let run = self.factors[k..].iter().take_while(|&&x| x == f).count();
            parts.push(if run == 1 { gens[f].name.clone() } else { format!("{}^{run}", gens[f].name) });
            k += run;
        }
        parts.join("*")
    }
}

/// Multisets of size `k` drawn from `items`, as sorted vectors.
fn multichoose(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (pos, &x) in items.iter().enumerate() {
        for mut rest in multichoose(&items[pos..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Every product `g₁⋯g_k` of generators whose weight multiset lies in
/// `𝒱(m, N)`, sorted by degree and then by factors.
pub fn synthesize_generators(gens: &[WeightedGenerator], m: u32, n: usize, budget: Budget) -> Result<Vec<Product>> {
    for g in gens {
        if g.weight.modulus() != m || g.weight.rank() != n {
            return Err(Error::Input(format!("generator `{}` has a weight outside (Z/{m})^{n}", g.name)));
        }
    }
    let mut by_weight: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, g) in gens.iter().enumerate() {
        by_weight.entry(g.weight.index()).or_default().push(i);
    }
    let mut out = Vec::new();
    for u in minimal_zero_sum_multisets(m, n, budget)? {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for v in u.elements() {
            *counts.entry(v.index()).or_default() += 1;
        }
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for (w, k) in counts {
            let Some(pool) = by_weight.get(&w) else {
                partial.clear();
                break;
            };
            let choices = multichoose(pool, k);
            partial = partial
                .iter()
                .flat_map(|p| choices.iter().map(move |c| [p.as_slice(), c.as_slice()].concat()))
                .collect();
        }
        for mut f in partial {
            f.sort_unstable();
            out.push(Product { factors: f });
        }
    }
    out.sort_by(|a, b| a.factors.len().cmp(&b.factors.len()).then_with(|| a.factors.cmp(&b.factors)));
    Ok(out)
}

/// JSON input for generator synthesis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub m: u32,
    #[serde(rename = "N")]
    pub n: usize,
    pub generators: Vec<GeneratorEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub weight: Vec<i64>,
    #[serde(default = "default_kind")]
    pub kind: GeneratorKind,
}

fn default_kind() -> GeneratorKind {
    GeneratorKind::Trace
}

impl GeneratorSpec {
    pub fn generators(&self) -> Result<Vec<WeightedGenerator>> {
        self.generators
            .iter()
            .map(|e| {
                if e.weight.len() != self.n {
                    return Err(Error::Input(format!(
                        "weight of `{}` has length {}, expected {}",
                        e.name,
                        e.weight.len(),
                        self.n
                    )));
                }
                Ok(WeightedGenerator::new(&e.name, self.m, &e.weight, e.kind))
            })
            .collect()
    }
}

/// The PSL(2) weights: `τ₁ ↦ (1,0)`, `τ₂ ↦ (0,1)`, `τ₁₂ ↦ (1,1)` in `(ℤ/2)²`.
pub fn psl2_generators() -> Vec<WeightedGenerator> {
    vec![
        WeightedGenerator::new("t1", 2, &[1, 0], GeneratorKind::Trace),
        WeightedGenerator::new("t2", 2, &[0, 1], GeneratorKind::Trace),
        WeightedGenerator::new("t12", 2, &[1, 1], GeneratorKind::Trace),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(m: u32, e: &[i64]) -> WeightVector {
        WeightVector::new(m, e.to_vec())
    }

    fn render(sets: &[ZeroSumMultiset]) -> Vec<String> {
        sets.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn v22_is_the_five_multisets() {
        let v = minimal_zero_sum_multisets(2, 2, Budget::default()).unwrap();
        assert_eq!(render(&v), ["{(0,0)}", "{(1,0),(1,0)}", "{(0,1),(0,1)}", "{(1,1),(1,1)}", "{(1,0),(0,1),(1,1)}"]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(render(&minimal_zero_sum_multisets(1, 3, Budget::default()).unwrap()), ["{(0,0,0)}"]);
        assert_eq!(render(&minimal_zero_sum_multisets(2, 1, Budget::default()).unwrap()), ["{(0)}", "{(1),(1)}"]);
        assert_eq!(davenport(1, 2, Budget::default()).unwrap(), 1);
    }

    #[test]
    fn davenport_examples() {
        assert_eq!(davenport(2, 2, Budget::default()).unwrap(), 3);
        assert_eq!(davenport(3, 2, Budget::default()).unwrap(), 5);
        assert_eq!(davenport(4, 2, Budget::default()).unwrap(), 7);
    }

    #[test]
    fn budget_guard() {
        assert_eq!(davenport(3, 3, Budget(20)).unwrap_err(), Error::BudgetExceeded { needed: 27, budget: 20 });
    }

    #[test]
    fn checker_rejects_non_minimal() {
        assert!(is_minimal_zero_sum(&[wv(2, &[1, 0]), wv(2, &[1, 0])]));
        assert!(!is_minimal_zero_sum(&[wv(2, &[1, 0]), wv(2, &[1, 0]), wv(2, &[0, 0])]));
        assert!(!is_minimal_zero_sum(&[wv(3, &[1]), wv(3, &[1])]));
        assert!(ZeroSumMultiset::new(vec![wv(3, &[1]), wv(3, &[2])]).is_ok());
        assert!(ZeroSumMultiset::new(vec![wv(3, &[1])]).is_err());
    }

    #[test]
    fn psl2_synthesis() {
        let gens = psl2_generators();
        let out: Vec<String> =
            synthesize_generators(&gens, 2, 2, Budget::default()).unwrap().iter().map(|p| p.render(&gens)).collect();
        assert_eq!(out, ["t1^2", "t2^2", "t12^2", "t1*t2*t12"]);
    }

    #[test]
    fn synthesis_edge_cases() {
        let zero = vec![WeightedGenerator::new("z", 2, &[0, 0], GeneratorKind::Trace)];
        let out = synthesize_generators(&zero, 2, 2, Budget::default()).unwrap();
        assert_eq!(out.iter().map(|p| p.render(&zero)).collect::<Vec<_>>(), ["z"]);

        let mixed = vec![
            WeightedGenerator::new("t1", 2, &[1, 0], GeneratorKind::Trace),
            WeightedGenerator::new("Q", 2, &[1, 0], GeneratorKind::QInvariant),
        ];
        let out = synthesize_generators(&mixed, 2, 2, Budget::default()).unwrap();
        assert_eq!(out.iter().map(|p| p.render(&mixed)).collect::<Vec<_>>(), ["t1^2", "t1*Q", "Q^2"]);
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{"m":2,"N":2,"generators":[{"name":"t1","weight":[1,0]},{"name":"Q","weight":[1,0],"kind":"q-invariant"}]}"#;
        let spec: GeneratorSpec = serde_json::from_str(text).unwrap();
        let gens = spec.generators().unwrap();
        assert_eq!(gens[1].kind, GeneratorKind::QInvariant);
        assert_eq!(gens[0].weight, wv(2, &[1, 0]));
    }
}
