//! Exact arithmetic foundation: arbitrary-precision rationals, sparse
//! multivariate polynomials and normalized rational functions over them.
//!
//! Everything is immutable and canonical: a `MultiPoly` stores no zero
//! coefficients and a `RatFunc` is always fully reduced with a monic
//! denominator, so structural equality is mathematical equality.

pub mod gcd;
pub mod json;
pub mod parse;

pub use gcd::poly_gcd;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The exact coefficient field: arbitrary-precision rationals.
///
/// `BigRational` keeps gcd(|num|, den) = 1 with den > 0 by construction,
/// which is exactly the canonical form required here.
pub type Scalar = BigRational;

pub fn scalar_from_i64(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Parse "p" or "p/q" into a scalar.
pub fn scalar_from_str(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("invalid rational literal: {s:?}"));
    let mut it = s.splitn(2, '/');
    let num: BigInt = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match it.next() {
        None => Ok(Scalar::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Scalar::new(num, den))
        }
    }
}

/// "p" when integral, otherwise "p/q".
pub fn scalar_to_string(s: &Scalar) -> String {
    s.to_string()
}

// --------------------------------------------------------------------- VarId

const FAMILY_LETTERS: [char; 4] = ['x', 'y', 'z', 'k'];

/// A lattice variable: a simple-root family (color) and a site on the chain.
///
/// Variables are totally ordered by chain position (site first, then family),
/// which agrees with position = (site-1)(n-1) + family for every rank n that
/// can contain both variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VarId {
    pub family: u32,
    pub site: u32,
}

impl VarId {
    pub fn new(family: u32, site: u32) -> VarId {
        assert!(site >= 1, "site must be >= 1");
        VarId { family, site }
    }

    /// Canonical name: x/y/z/k for families 0..3, otherwise "v{family}_{site}".
    pub fn name(&self) -> String {
        match FAMILY_LETTERS.get(self.family as usize) {
            Some(c) => format!("{}{}", c, self.site),
            None => format!("v{}_{}", self.family, self.site),
        }
    }

    pub fn from_name(s: &str) -> Result<VarId> {
        let bad = || Error::Parse(format!("invalid variable name: {s:?}"));
        if let Some(rest) = s.strip_prefix('v') {
            if let Some((f, st)) = rest.split_once('_') {
                let family: u32 = f.parse().map_err(|_| bad())?;
                let site: u32 = st.parse().map_err(|_| bad())?;
                if site == 0 {
                    return Err(bad());
                }
                return Ok(VarId { family, site });
            }
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let family = FAMILY_LETTERS
            .iter()
            .position(|c| *c == letter)
            .ok_or_else(bad)? as u32;
        let site: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if site == 0 {
            return Err(bad());
        }
        Ok(VarId { family, site })
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.site, self.family).cmp(&(other.site, other.family))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Shorthand used pervasively in tests and examples.
pub fn var(family: u32, site: u32) -> VarId {
    VarId::new(family, site)
}

// ------------------------------------------------------------------ Monomial

/// A power product of lattice variables. Stored exponents are strictly
/// positive; the empty product is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>, // sorted by VarId, exponents > 0
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_pairs(pairs: &[(VarId, u32)]) -> Monomial {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for &(v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// self / other, if other divides self.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let mut rem = e;
            while j < other.exps.len() && other.exps[j].0 < v {
                return None; // divisor has a variable we lack
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                if other.exps[j].1 > e {
                    return None;
                }
                rem = e - other.exps[j].1;
                j += 1;
            }
            if rem > 0 {
                out.push((v, rem));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { exps: out })
    }

    /// Component-wise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                out.push((v, e.min(other.exps[j].1)));
            }
        }
        Monomial { exps: out }
    }

    fn rename<F: Fn(VarId) -> VarId>(&self, f: &F) -> Monomial {
        let pairs: Vec<(VarId, u32)> = self.exps.iter().map(|&(v, e)| (f(v), e)).collect();
        Monomial::from_pairs(&pairs)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, ties broken by the first
    /// chain-order variable whose exponents differ (higher exponent on the
    /// earlier variable wins).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match self.degree().cmp(&other.degree()) {
            std::cmp::Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    std::cmp::Ordering::Less => return std::cmp::Ordering::Greater,
                    std::cmp::Ordering::Greater => return std::cmp::Ordering::Less,
                    std::cmp::Ordering::Equal => {
                        match ea.cmp(&eb) {
                            std::cmp::Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
                // the side that still has a variable has a nonzero exponent
                // on an earlier position than anything remaining on the other
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (None, Some(_)) => return std::cmp::Ordering::Less,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (v, e) in self.iter() {
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

// ----------------------------------------------------------------- MultiPoly

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>, // no zero coefficients
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        MultiPoly { terms }
    }

    pub fn from_i64(c: i64) -> MultiPoly {
        MultiPoly::constant(scalar_from_i64(c))
    }

    pub fn variable(v: VarId) -> MultiPoly {
        MultiPoly::from_term(Monomial::var(v), Scalar::one())
    }

    pub fn from_term(m: Monomial, c: Scalar) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Leading (monomial, coefficient) under the graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            out.extend(m.vars());
        }
        out
    }

    pub fn max_var_degree(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: VarId) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let lowered = m.try_div(&Monomial::var(v)).expect("exponent checked");
            out.add_term(lowered, c * scalar_from_i64(e as i64));
        }
        out
    }

    /// Relabel variables. The map must be injective on the occurring variables.
    pub fn rename<F: Fn(VarId) -> VarId>(&self, f: F) -> Result<MultiPoly> {
        check_injective(&self.vars(), &f)?;
        Ok(self.rename_unchecked(&f))
    }

    pub(crate) fn rename_unchecked<F: Fn(VarId) -> VarId>(&self, f: &F) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.rename(f), c.clone())))
    }

    /// Exact evaluation; every occurring variable must be assigned.
    pub fn eval(&self, point: &BTreeMap<VarId, Scalar>) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for (v, e) in m.iter() {
                let val = point
                    .get(&v)
                    .ok_or_else(|| Error::MissingAssignment(v.name()))?;
                prod *= val.pow(e as i32);
            }
            total += prod;
        }
        Ok(total)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn try_div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&(Scalar::one() / c)));
        }
        let (dm, dc) = d.leading().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero");
            let qm = rm.try_div(dm)?;
            let qc = rc / dc;
            let t = MultiPoly::from_term(qm, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&(Scalar::one() / lc))
    }
}

fn check_injective<F: Fn(VarId) -> VarId>(vars: &BTreeSet<VarId>, f: &F) -> Result<()> {
    let mut images = BTreeSet::new();
    for &v in vars {
        if !images.insert(f(v)) {
            return Err(Error::NonInjectiveSubstitution);
        }
    }
    Ok(())
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        // iterate the smaller operand on the outside
        let (a, b) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // descending monomial order
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_unit() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}{}", abs, m)?;
            }
        }
        Ok(())
    }
}

// ------------------------------------------------------------------- RatFunc

/// Normalized quotient of two polynomials: den != 0, gcd(num, den) = 1 and
/// the denominator is monic under the graded lexicographic order, so equal
/// rational functions have identical stored form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: MultiPoly::one(),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.try_div_exact(&g).expect("gcd divides"),
                den.try_div_exact(&g).expect("gcd divides"),
            )
        };
        Ok(Self::from_reduced(num, den))
    }

    /// num/den already coprime; just make the denominator monic.
    fn from_reduced(num: MultiPoly, den: MultiPoly) -> RatFunc {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = Scalar::one() / lc;
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Normalize num / (prod of hinted factors^mult) without ever running a
    /// gcd of two large polynomials: whole factors are divided out of the
    /// numerator first, then each remaining factor is gcd-split against the
    /// numerator (cheap asymmetric gcds) until every factor is coprime to it,
    /// which certifies the quotient as fully reduced.
    pub(crate) fn from_factored_den(num: MultiPoly, den_factors: &[(MultiPoly, u32)]) -> Result<RatFunc> {
        let mut num = num;
        let mut rest: Vec<(MultiPoly, u32)> = Vec::new();
        for (f, mult) in den_factors {
            if f.is_zero() {
                return Err(Error::DivisionByZero);
            }
            if f.constant_value().is_some() {
                let c = f.constant_value().unwrap().pow(*mult as i32);
                num = num.scale(&(Scalar::one() / c));
                continue;
            }
            let mut mult = *mult;
            if num.is_zero() {
                continue;
            }
            while mult > 0 {
                match num.try_div_exact(f) {
                    Some(q) => {
                        num = q;
                        mult -= 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                rest.push((f.clone(), mult));
            }
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: MultiPoly::one(),
            });
        }
        // split remaining factors against the numerator until pairwise coprime
        loop {
            let mut progressed = false;
            let mut idx = 0;
            while idx < rest.len() {
                let g = poly_gcd(&num, &rest[idx].0)?;
                if g.constant_value().is_none() {
                    num = num.try_div_exact(&g).expect("gcd divides");
                    let (phi, e) = rest[idx].clone();
                    let q = phi.try_div_exact(&g).expect("gcd divides");
                    if e == 1 {
                        rest.remove(idx);
                    } else {
                        rest[idx].1 = e - 1;
                    }
                    if q.constant_value().is_none() {
                        rest.push((q, 1));
                    } else {
                        let c = q.constant_value().unwrap();
                        num = num.scale(&(Scalar::one() / c));
                    }
                    progressed = true;
                    if num.constant_value().is_some() {
                        break;
                    }
                } else {
                    idx += 1;
                }
            }
            if !progressed || num.constant_value().is_some() {
                break;
            }
        }
        let mut den = MultiPoly::one();
        for (f, mult) in rest {
            den = &den * &f.pow(mult);
        }
        // every factor of den is coprime to num, hence so is den
        Ok(RatFunc::from_reduced(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Scalar) -> RatFunc {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn from_i64(c: i64) -> RatFunc {
        RatFunc::from_poly(MultiPoly::from_i64(c))
    }

    pub fn variable(v: VarId) -> RatFunc {
        RatFunc::from_poly(MultiPoly::variable(v))
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(MultiPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(MultiPoly::one())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = poly_gcd(&self.den, &other.den).expect("nonzero dens");
        if g.is_constant() {
            let num = &(&self.num * &other.den) + &(&other.num * &self.den);
            let den = &self.den * &other.den;
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc::from_reduced(num, den);
        }
        let db = self.den.try_div_exact(&g).expect("gcd divides");
        let dd = other.den.try_div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &dd) + &(&other.num * &db);
        if num.is_zero() {
            return RatFunc::zero();
        }
        // any remaining common factor divides g
        let h = poly_gcd(&num, &g).expect("nonzero");
        let (num, g) = if h.is_constant() {
            (num, g)
        } else {
            (
                num.try_div_exact(&h).expect("gcd divides"),
                g.try_div_exact(&h).expect("gcd divides"),
            )
        };
        let den = &(&g * &db) * &dd;
        RatFunc::from_reduced(num, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let g1 = poly_gcd(&self.num, &other.den).expect("nonzero");
        let g2 = poly_gcd(&other.num, &self.den).expect("nonzero");
        let n1 = self.num.try_div_exact(&g1).expect("gcd divides");
        let n2 = other.num.try_div_exact(&g2).expect("gcd divides");
        let d1 = self.den.try_div_exact(&g2).expect("gcd divides");
        let d2 = other.den.try_div_exact(&g1).expect("gcd divides");
        RatFunc::from_reduced(&n1 * &n2, &d1 * &d2)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&RatFunc::from_reduced(other.den.clone(), other.num.clone())))
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::one().div(self)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = if e >= 0 {
            (self.num.pow(e as u32), self.den.pow(e as u32))
        } else {
            (self.den.pow((-e) as u32), self.num.pow((-e) as u32))
        };
        // powers of a reduced fraction stay reduced
        Ok(RatFunc::from_reduced(num, den))
    }

    /// Exact quotient-rule derivative.
    pub fn derivative(&self, v: VarId) -> RatFunc {
        let num = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        if num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(num, &self.den * &self.den).expect("den nonzero")
    }

    /// Variable relabeling; the map must be injective on occurring variables.
    pub fn rename<F: Fn(VarId) -> VarId>(&self, f: F) -> Result<RatFunc> {
        check_injective(&self.vars(), &f)?;
        let num = self.num.rename_unchecked(&f);
        let den = self.den.rename_unchecked(&f);
        // relabeling preserves coprimality; only re-normalize the leading coeff
        Ok(RatFunc::from_reduced(num, den))
    }

    /// Substitute with an explicit finite map; unmapped variables stay fixed.
    pub fn substitute(&self, map: &BTreeMap<VarId, VarId>) -> Result<RatFunc> {
        self.rename(|v| map.get(&v).copied().unwrap_or(v))
    }

    pub fn eval(&self, point: &BTreeMap<VarId, Scalar>) -> Result<Scalar> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn parse(s: &str) -> Result<RatFunc> {
        parse::parse_ratfunc(s)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value().map(|c| c.is_one()).unwrap_or(false) {
            if self.num.num_terms() > 1 {
                return write!(f, "{}", self.num);
            }
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> VarId {
        var(0, i)
    }

    fn p(s: &str) -> MultiPoly {
        let r = RatFunc::parse(s).unwrap();
        assert!(r.den().constant_value().map(|c| c.is_one()).unwrap_or(false));
        r.num().clone()
    }

    #[test]
    fn chain_order_is_site_then_family() {
        assert!(var(0, 1) < var(1, 1));
        assert!(var(1, 1) < var(0, 2));
        assert!(var(3, 1) < var(0, 2));
    }

    #[test]
    fn distributive_expansion() {
        let lhs = &p("x1 + x2") * &p("x2 + x3");
        assert_eq!(lhs, p("x1 x2 + x1 x3 + x2^2 + x2 x3"));
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let q = p("3x1^2 - x2");
        assert_eq!(&q + &MultiPoly::zero(), q);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn monomial_order_examples() {
        // x1x2 > x1x3 > x2^2 > x2x3 under graded lex with chain order
        let m = |s: &str| p(s).leading().unwrap().0.clone();
        assert!(m("x1 x2") > m("x1 x3"));
        assert!(m("x1 x3") > m("x2^2"));
        assert!(m("x2^2") > m("x2 x3"));
        assert!(m("x1^2") > m("x1 x2"));
        assert!(m("x1") > m("1"));
    }

    #[test]
    fn ratfunc_normalizes() {
        // (2 x1 x2) / (4 x2^2) reduces to x1 / (2 x2), stored with monic den
        let r = RatFunc::new(p("2 x1 x2"), p("4 x2^2")).unwrap();
        assert_eq!(r.num(), &p("1/2 x1"));
        assert_eq!(r.den(), &p("x2"));
        assert_eq!(r, RatFunc::parse("x1/(2 x2)").unwrap());
    }

    #[test]
    fn den_is_monic() {
        let r = RatFunc::new(p("x1"), p("2 x2")).unwrap();
        assert!(r.den().leading_coeff().is_one());
        assert_eq!(r.num(), &p("1/2 x1"));
    }

    #[test]
    fn sub_self_is_zero_and_mul_inverse() {
        let a = RatFunc::parse("(x1 + x2)/(x2 (x1 + x2 + x3))").unwrap();
        assert!(a.sub(&a).is_zero());
        let inv = RatFunc::parse("1/x2").unwrap();
        let x2 = RatFunc::parse("x2").unwrap();
        assert_eq!(inv.mul(&x2), RatFunc::one());
    }

    #[test]
    fn derivative_power_rule_and_absent_var() {
        let f = RatFunc::parse("x1 x2^2").unwrap();
        assert_eq!(f.derivative(x(2)), RatFunc::parse("2 x1 x2").unwrap());
        let g = RatFunc::parse("x1 + x2 + x3").unwrap();
        assert!(g.derivative(x(4)).is_zero());
    }

    #[test]
    fn eval_pole_and_value() {
        let f = RatFunc::parse("1/x2").unwrap();
        let mut pt = BTreeMap::new();
        pt.insert(x(2), Scalar::zero());
        assert!(matches!(f.eval(&pt), Err(Error::Pole)));
        pt.insert(x(2), scalar_from_i64(4));
        assert_eq!(f.eval(&pt).unwrap(), scalar_from_str("1/4").unwrap());
    }

    #[test]
    fn rename_identity_and_involution() {
        let f = RatFunc::parse("(x1 + x2)/(x3)").unwrap();
        assert_eq!(f.rename(|v| v).unwrap(), f);
        let swap = |v: VarId| -> VarId {
            match v.site {
                1 => var(v.family, 3),
                3 => var(v.family, 1),
                s => var(v.family, s),
            }
        };
        let g = f.rename(swap).unwrap();
        assert_eq!(g.rename(swap).unwrap(), f);
        assert_ne!(g, f);
    }

    #[test]
    fn rename_rejects_collisions() {
        let f = RatFunc::parse("x1 + x2").unwrap();
        let res = f.rename(|_| var(0, 7));
        assert!(matches!(res, Err(Error::NonInjectiveSubstitution)));
    }

    #[test]
    fn division_by_zero_ratfunc() {
        let a = RatFunc::parse("x1").unwrap();
        assert!(matches!(a.div(&RatFunc::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_roundtrip_shape() {
        let r = RatFunc::parse("(x1 x2 + x2^2)/(x2 x3)").unwrap();
        assert_eq!(r.to_string(), "(x1 + x2)/(x3)");
    }
}
