//! Sparse multivariate Laurent polynomials over ℚ(i).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::GaussianRational;
use super::var::Var;
use crate::error::{Error, Result};

/// A power product of registered variables, stored sparsely as
/// `(variable, exponent)` pairs sorted by variable with no zero exponents.
///
/// `Ord` is the graded lexicographic order: total degree first, then the
/// exponent of the earliest-registered variable, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    /// Negative exponents are rejected unless the variable is Laurent.
    pub fn from_exponents<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Result<Monomial> {
        let mut acc: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        let m = Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect());
        m.check_laurent()?;
        Ok(m)
    }

    fn check_laurent(&self) -> Result<()> {
        for &(v, e) in &self.0 {
            if e < 0 && !v.is_laurent() {
                return Err(Error::LaurentViolation(v.name().to_owned()));
            }
        }
        Ok(())
    }

    pub fn exponents(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0.binary_search_by(|(w, _)| w.cmp(&v)).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k as i32)).collect())
    }

    /// Inverse monomial; only defined when every variable is Laurent.
    pub fn inverse(&self) -> Result<Monomial> {
        let m = Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect());
        m.check_laurent()?;
        Ok(m)
    }

    /// Quotient `self / other` when `other` divides `self` without producing
    /// negative exponents on non-Laurent variables.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let inv = Monomial(other.0.iter().map(|&(v, e)| (v, -e)).collect());
        let q = self.mul(&inv);
        q.check_laurent().ok().map(|_| q)
    }

    /// Applies a variable renaming (which need not preserve order).
    pub fn rename(&self, f: &impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_exponents(self.0.iter().map(|&(v, e)| (f(v), e))).expect("renaming preserves exponents")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
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
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
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

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn constant(c: GaussianRational) -> Polynomial {
        Polynomial::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Polynomial {
        Polynomial::constant(GaussianRational::from_int(n))
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::term(GaussianRational::one(), Monomial::var(v))
    }

    /// Shorthand for `Polynomial::var(Var::new(name))`.
    pub fn named(name: &str) -> Polynomial {
        Polynomial::var(Var::new(name))
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Polynomial {
        Polynomial::term(GaussianRational::one(), m)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussianRational)>>(it: I) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<GaussianRational> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one()))
        } else {
            None
        }
    }

    /// Single term with coefficient one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.leading_term() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under the ring homomorphism sending each variable to its
    /// binding. Every variable of `self` must be bound; a negative exponent
    /// requires the binding to be an invertible monomial term.
    pub fn substitute(&self, bindings: &HashMap<Var, Polynomial>) -> Result<Polynomial> {
        let mut powers: HashMap<(Var, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.exponents() {
                if let std::collections::hash_map::Entry::Vacant(slot) = powers.entry((v, e)) {
                    let b = bindings.get(&v).ok_or_else(|| Error::UnboundVariable(v.name().to_owned()))?;
                    let p = if e >= 0 {
                        b.pow(e as u32)
                    } else {
                        b.inverse_term()
                            .ok_or_else(|| Error::NonInvertibleBinding(v.name().to_owned()))??
                            .pow((-e) as u32)
                    };
                    slot.insert(p);
                }
                acc = &acc * &powers[&(v, e)];
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Inverse of a single nonzero term; `None` if `self` is not a term.
    fn inverse_term(&self) -> Option<Result<Polynomial>> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.leading_term()?;
        Some(m.inverse().map(|mi| Polynomial::term(c.inv().expect("stored coefficients are nonzero"), mi)))
    }

    /// Evaluates at scalar values.
    pub fn evaluate(&self, values: &HashMap<Var, GaussianRational>) -> Result<GaussianRational> {
        let bindings: HashMap<Var, Polynomial> =
            values.iter().map(|(&v, c)| (v, Polynomial::constant(c.clone()))).collect();
        let p = self.substitute(&bindings)?;
        Ok(p.constant_value().expect("all variables bound to constants"))
    }

    /// Substitutes only the variables present in `bindings`, leaving the
    /// rest untouched.
    pub fn substitute_partial(&self, bindings: &HashMap<Var, Polynomial>) -> Result<Polynomial> {
        let mut full = bindings.clone();
        for v in self.variables() {
            full.entry(v).or_insert_with(|| Polynomial::var(v));
        }
        self.substitute(&full)
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())))
    }

    /// Coefficient vector against a fixed list of monomials; `None` if some
    /// term falls outside the list.
    pub fn coordinates(&self, basis: &HashMap<Monomial, usize>) -> Option<BTreeMap<usize, GaussianRational>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            out.insert(*basis.get(m)?, c.clone());
        }
        Some(out)
    }

    /// Splits `self` into homogeneous components under a grading that
    /// assigns a weight to every variable.
    pub fn grade_components<W: Weight>(&self, weights: &HashMap<Var, W>, zero: &W) -> Result<BTreeMap<W, Polynomial>> {
        let mut out: BTreeMap<W, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut w = zero.clone();
            for &(v, e) in m.exponents() {
                let wv = weights.get(&v).ok_or_else(|| Error::UnweightedVariable(v.name().to_owned()))?;
                w = w.plus(&wv.times(e as i64));
            }
            out.entry(w).or_default().add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Parses the text format produced by `Display`.
    pub fn parse(text: &str) -> Result<Polynomial> {
        let mut p = Parser::new(text);
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

/// Gradings usable with [`Polynomial::grade_components`].
pub trait Weight: Clone + Ord {
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, k: i64) -> Self;
}

impl Weight for i64 {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, k: i64) -> Self {
        self * k
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::int(1)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<GaussianRational> for Polynomial {
    fn from(c: GaussianRational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative_real = c.is_real() && c.re() < &num_rational::BigRational::zero();
            let mag = if negative_real { -c } else { c.clone() };
            match (k, negative_real) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Polynomial::parse(s)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        Parser { chars: text.chars().collect(), pos: 0 }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_owned() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = self.sign().unwrap_or(false);
        let mut acc = Polynomial::zero();
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.sign() {
                Some(n) => negate = n,
                None => return Ok(acc),
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(')
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn digits(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits parse"))
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    d
                } else {
                    num_bigint::BigInt::one()
                };
                Polynomial::constant(num_rational::BigRational::new(num, den).into())
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if name == "i" {
                    Polynomial::constant(GaussianRational::i())
                } else {
                    let v = Var::try_new(&name)
                        .map_err(|_| Error::Parse { pos: start, msg: format!("invalid variable `{name}`") })?;
                    Polynomial::var(v)
                }
            }
            _ => return Err(self.error("expected a coefficient, variable or `(`")),
        };
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let negative = self.sign() == Some(true);
        let e = self.digits()?;
        let e: u32 = u32::try_from(&e).map_err(|_| self.error("exponent too large"))?;
        if !negative {
            return Ok(base.pow(e));
        }
        match base.inverse_term() {
            Some(Ok(inv)) => Ok(inv.pow(e)),
            Some(Err(err)) => Err(err),
            None => Err(Error::Parse { pos: at, msg: "negative power of a non-monomial".into() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn difference_of_squares_over_gaussian_rationals() {
        let x = Polynomial::named("x");
        let iy = Polynomial::named("y").scale(&GaussianRational::i());
        let prod = &(&x + &iy) * &(&x - &iy);
        assert_eq!(prod, p("x^2 + y^2"));
        assert_eq!(prod.to_string(), "x^2 + y^2");
    }

    #[test]
    fn additive_identity() {
        let q = p("3*x*y - 1/2");
        assert_eq!(&q + &Polynomial::zero(), q);
    }

    #[test]
    fn square_of_trace_relation() {
        let lhs = p("t1*t12 - t2").pow(2);
        assert_eq!(lhs, p("t1^2*t12^2 - 2*t1*t2*t12 + t2^2"));
        assert_eq!(lhs.to_string(), "t1^2*t12^2 - 2*t1*t2*t12 + t2^2");
    }

    #[test]
    fn substitute_binomial_and_constants() {
        let x = Var::new("x");
        let mut b = HashMap::new();
        b.insert(x, p("y + 1"));
        assert_eq!(p("x^2").substitute(&b).unwrap(), p("y^2 + 2*y + 1"));
        assert_eq!(p("7/3").substitute(&HashMap::new()).unwrap(), p("7/3"));
        let err = p("x*z").substitute(&b).unwrap_err();
        assert_eq!(err, Error::UnboundVariable("z".into()));
    }

    #[test]
    fn substitute_generator_image() {
        let mut b = HashMap::new();
        b.insert(Var::new("a_1_1_1"), p("t1_1^2"));
        assert_eq!(p("a_1_1_1").substitute(&b).unwrap(), p("t1_1^2"));
    }

    #[test]
    fn laurent_exponents_checked() {
        assert!(p("x1^-1*x1").is_one());
        assert_eq!(Polynomial::parse("t1^-1").unwrap_err(), Error::LaurentViolation("t1".into()));
        let x1 = Var::torus(1);
        let mut b = HashMap::new();
        b.insert(x1, p("x2"));
        assert_eq!(p("x1^-2").substitute(&b).unwrap(), p("x2^-2"));
        b.insert(x1, p("x2 + 1"));
        assert!(matches!(p("x1^-1").substitute(&b), Err(Error::NonInvertibleBinding(_))));
    }

    #[test]
    fn printing_with_complex_coefficients() {
        let q = p("2*t1_1^2*t12_2 - (1/2 + 1 i)*t2_1");
        assert_eq!(q.to_string(), "2*t1_1^2*t12_2 + (-1/2 - 1 i)*t2_1");
        assert_eq!(Polynomial::parse(&q.to_string()).unwrap(), q);
        assert_eq!(p("i*x - i*x"), Polynomial::zero());
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn parse_errors_report_position() {
        match Polynomial::parse("x + * y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Polynomial::parse("(x + y").is_err());
        assert!(Polynomial::parse("1/0").is_err());
        assert!(Polynomial::parse("(x+y)^-1").is_err());
    }

    #[test]
    fn grlex_order() {
        let m = |s: &str| p(s).as_monomial().unwrap().clone();
        assert!(m("x^2") > m("x*y"));
        assert!(m("x*y") > m("y^2"));
        assert!(m("y^3") > m("x^2"));
        assert!(m("t1*t12") > m("t2"));
    }

    #[test]
    fn grade_components_by_degree() {
        let x = Var::new("x");
        let y = Var::new("y");
        let weights: HashMap<Var, i64> = [(x, 1), (y, 1)].into_iter().collect();
        let comps = p("x^2 + x*y + y + 3").grade_components(&weights, &0).unwrap();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[&2], p("x^2 + x*y"));
        assert_eq!(comps[&0], p("3"));
        assert!(p("x*z").grade_components(&weights, &0).is_err());
    }
}
