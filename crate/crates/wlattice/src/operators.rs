//! First-order derivations on the lattice: the screening-derived operators D,
//! the family-graded weight (degree-counting) operators H, their action on
//! rational functions, and operator commutators.

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::ring::json::{poly_from_json, poly_to_json};
use crate::ring::{Monomial, MultiPoly, RatFunc, Scalar, VarId};
use serde_json::{Map, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

/// A first-order derivation  sum_v c_v d/dv  with polynomial coefficients.
/// At most one term per target; stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DiffOperator {
    terms: BTreeMap<VarId, MultiPoly>,
}

impl DiffOperator {
    pub fn zero() -> DiffOperator {
        DiffOperator::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiPoly, VarId)>>(it: I) -> DiffOperator {
        let mut op = DiffOperator::zero();
        for (coef, target) in it {
            op.add_term(coef, target);
        }
        op
    }

    pub fn add_term(&mut self, coef: MultiPoly, target: VarId) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(target).or_default();
        *entry = &*entry + &coef;
        if entry.is_zero() {
            self.terms.remove(&target);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (VarId, &MultiPoly)> {
        self.terms.iter().map(|(&v, c)| (v, c))
    }

    pub fn coefficient(&self, target: VarId) -> Option<&MultiPoly> {
        self.terms.get(&target)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// All variables involved (targets and coefficient variables).
    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut out = BTreeSet::new();
        for (v, c) in &self.terms {
            out.insert(*v);
            out.extend(c.vars());
        }
        out
    }

    /// Apply to a polynomial:  sum_v c_v dp/dv.
    pub fn apply_poly(&self, p: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&v, coef) in &self.terms {
            let dp = p.derivative(v);
            if !dp.is_zero() {
                out = &out + &(coef * &dp);
            }
        }
        out
    }

    /// Apply to a rational function, exactly. The whole sum is assembled over
    /// the common denominator den^2 so that exact annihilation costs no gcd.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let n = f.num();
        let d = f.den();
        let mut total = MultiPoly::zero();
        for (&v, coef) in &self.terms {
            let nv = n.derivative(v);
            let dv = d.derivative(v);
            if nv.is_zero() && dv.is_zero() {
                continue;
            }
            let quot_num = &(&nv * d) - &(n * &dv);
            if !quot_num.is_zero() {
                total = &total + &(coef * &quot_num);
            }
        }
        if total.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::from_factored_den(total, &[(d.clone(), 2)]).expect("den nonzero")
    }

    /// Lie bracket [self, other]: again first order, with coefficient of d/dw
    /// equal to sum_v (a_v d(b_w)/dv - b_v d(a_w)/dv).
    pub fn commutator(&self, other: &DiffOperator) -> DiffOperator {
        let mut out = DiffOperator::zero();
        let targets: BTreeSet<VarId> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for &w in &targets {
            let mut c = MultiPoly::zero();
            if let Some(bw) = other.terms.get(&w) {
                c = &c + &self.apply_poly(bw);
            }
            if let Some(aw) = self.terms.get(&w) {
                c = &c - &other.apply_poly(aw);
            }
            out.add_term(c, w);
        }
        out
    }

    /// Relabel targets and coefficients; the map must be injective on all
    /// involved variables. Conjugating an annihilator by a chain shift gives
    /// the annihilator of the shifted generator.
    pub fn rename<F: Fn(VarId) -> VarId>(&self, f: F) -> Result<DiffOperator> {
        let vars = self.vars();
        let mut images = BTreeSet::new();
        for &v in &vars {
            if !images.insert(f(v)) {
                return Err(Error::NonInjectiveSubstitution);
            }
        }
        let mut out = DiffOperator::zero();
        for (&v, coef) in &self.terms {
            out.add_term(coef.rename_unchecked(&f), f(v));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> DiffOperator {
        DiffOperator::from_terms(self.terms.iter().map(|(&v, k)| (k.scale(c), v)))
    }

    pub fn add(&self, other: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (&v, c) in &other.terms {
            out.add_term(c.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &DiffOperator) -> DiffOperator {
        self.add(&other.scale(&crate::ring::scalar_from_i64(-1)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(v, c)| {
                    let mut obj = Map::new();
                    obj.insert("coef".into(), poly_to_json(c));
                    obj.insert("var".into(), Value::String(v.name()));
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<DiffOperator> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("operator JSON must be an array".into()))?;
        let mut out = DiffOperator::zero();
        for t in arr {
            let coef = poly_from_json(
                t.get("coef")
                    .ok_or_else(|| Error::Parse("missing \"coef\"".into()))?,
            )?;
            let var = t
                .get("var")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("missing \"var\"".into()))?;
            out.add_term(coef, VarId::from_name(var)?);
        }
        Ok(out)
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}) d/d{}", c, v.name())?;
        }
        Ok(())
    }
}

fn check_window(window: &RangeInclusive<u32>) -> Result<(u32, u32)> {
    let (lo, hi) = (*window.start(), *window.end());
    if lo < 1 || hi < lo {
        return Err(Error::InvalidWindow);
    }
    Ok((lo, hi))
}

/// The truncated screening sum's site window used throughout: sites 1..3.
pub const DEFAULT_WINDOW: RangeInclusive<u32> = 1..=3;

/// Screening-derived operator D for one family over a site window.
///
/// For each site i in the window, the variable v = v_{fam,i} contributes
/// v^2 d/dv (the equal-site term carries half the Cartan diagonal) plus
/// a_{fam, fam(w)} * v * w * d/dw for every chain variable w strictly before
/// v and inside the window's chain span. The global factor 2 of the classical
/// limit is divided out.
pub fn screening_operator(
    spec: &LatticeSpec,
    family: u32,
    window: RangeInclusive<u32>,
) -> Result<DiffOperator> {
    spec.check_family(family)?;
    let (lo, hi) = check_window(&window)?;
    let floor = spec.position(VarId::new(0, lo));
    let mut op = DiffOperator::zero();
    for site in lo..=hi {
        let v = VarId::new(family, site);
        op.add_term(
            MultiPoly::from_term(Monomial::from_pairs(&[(v, 2)]), Scalar::from_integer(1.into())),
            v,
        );
        let pv = spec.position(v);
        for p in floor..pv {
            let w = spec.var_at(p);
            let a = spec.cartan_entry(family, w.family);
            if a == 0 {
                continue;
            }
            let coef = MultiPoly::from_term(
                Monomial::from_pairs(&[(v, 1), (w, 1)]),
                crate::ring::scalar_from_i64(a),
            );
            op.add_term(coef, w);
        }
    }
    Ok(op)
}

/// Family-graded weight operator H: the Cartan row (normalized primitive)
/// times the Euler operator of each family over the site window.
pub fn weight_operator(
    spec: &LatticeSpec,
    family: u32,
    window: RangeInclusive<u32>,
) -> Result<DiffOperator> {
    spec.check_family(family)?;
    let (lo, hi) = check_window(&window)?;
    let row: Vec<i64> = (0..spec.families())
        .map(|b| spec.cartan_entry(family, b))
        .collect();
    let g = row
        .iter()
        .fold(0i64, |acc, &x| num_integer::gcd(acc, x.abs()))
        .max(1);
    let mut op = DiffOperator::zero();
    for (b, &c) in row.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for site in lo..=hi {
            let v = VarId::new(b as u32, site);
            let coef = MultiPoly::from_term(
                Monomial::var(v),
                crate::ring::scalar_from_i64(c / g),
            );
            op.add_term(coef, v);
        }
    }
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::gcd::Lcg;
    use crate::ring::{scalar_from_i64, var};

    fn p(s: &str) -> MultiPoly {
        RatFunc::parse(s).unwrap().num().clone()
    }

    fn op(terms: &[(&str, &str)]) -> DiffOperator {
        DiffOperator::from_terms(
            terms
                .iter()
                .map(|&(c, v)| (p(c), VarId::from_name(v).unwrap())),
        )
    }

    #[test]
    fn screening_sl2_golden() {
        let spec = LatticeSpec::new(2).unwrap();
        let d = screening_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        let expect = op(&[
            ("x1 (x1 + 2 x2 + 2 x3)", "x1"),
            ("x2 (x2 + 2 x3)", "x2"),
            ("x3^2", "x3"),
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn weight_sl2_golden() {
        let spec = LatticeSpec::new(2).unwrap();
        let h = weight_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        assert_eq!(h, op(&[("x1", "x1"), ("x2", "x2"), ("x3", "x3")]));
    }

    #[test]
    fn screening_sl3_cross_terms() {
        let spec = LatticeSpec::new(3).unwrap();
        let dx = screening_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        assert_eq!(dx.coefficient(var(1, 1)), Some(&p("-y1 (x2 + x3)")));
        assert_eq!(dx.coefficient(var(1, 2)), Some(&p("-y2 x3")));
        assert_eq!(dx.coefficient(var(1, 3)), None);
        let dy = screening_operator(&spec, 1, DEFAULT_WINDOW).unwrap();
        let expect = op(&[
            ("y1 (y1 + 2 y2 + 2 y3)", "y1"),
            ("y2 (y2 + 2 y3)", "y2"),
            ("y3^2", "y3"),
            ("-x1 (y1 + y2 + y3)", "x1"),
            ("-x2 (y2 + y3)", "x2"),
            ("-x3 y3", "x3"),
        ]);
        assert_eq!(dy, expect);
    }

    #[test]
    fn screening_sl5_family_k() {
        let spec = LatticeSpec::new(5).unwrap();
        let dk = screening_operator(&spec, 3, DEFAULT_WINDOW).unwrap();
        assert_eq!(dk.coefficient(var(2, 1)), Some(&p("-z1 (k1 + k2 + k3)")));
        assert_eq!(dk.coefficient(var(2, 2)), Some(&p("-z2 (k2 + k3)")));
        assert_eq!(dk.coefficient(var(2, 3)), Some(&p("-z3 k3")));
        // non-adjacent families contribute nothing
        assert_eq!(dk.coefficient(var(0, 1)), None);
        assert_eq!(dk.coefficient(var(1, 2)), None);
    }

    #[test]
    fn weight_sl4_goldens() {
        let spec = LatticeSpec::new(4).unwrap();
        let hy = weight_operator(&spec, 1, DEFAULT_WINDOW).unwrap();
        let expect = op(&[
            ("2 y1", "y1"),
            ("2 y2", "y2"),
            ("2 y3", "y3"),
            ("-x1", "x1"),
            ("-x2", "x2"),
            ("-x3", "x3"),
            ("-z1", "z1"),
            ("-z2", "z2"),
            ("-z3", "z3"),
        ]);
        assert_eq!(hy, expect);
        let hx = weight_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        assert_eq!(hx.coefficient(var(2, 1)), None); // no Z terms in H_X
    }

    #[test]
    fn invalid_family_is_an_error() {
        let spec = LatticeSpec::new(2).unwrap();
        assert!(screening_operator(&spec, 1, DEFAULT_WINDOW).is_err());
        assert!(weight_operator(&spec, 5, DEFAULT_WINDOW).is_err());
    }

    #[test]
    fn apply_degree_counting() {
        let spec = LatticeSpec::new(2).unwrap();
        let h = weight_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        let f = RatFunc::parse("x1 x2^2").unwrap();
        assert_eq!(h.apply(&f), RatFunc::parse("3 x1 x2^2").unwrap());
        assert!(h.apply(&RatFunc::one()).is_zero());
    }

    #[test]
    fn self_commutator_vanishes() {
        let spec = LatticeSpec::new(3).unwrap();
        let d = screening_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        assert!(d.commutator(&d).is_zero());
    }

    #[test]
    fn weight_screening_commutator_sl2() {
        // D raises the degree by one, so [H, D] = D exactly
        let spec = LatticeSpec::new(2).unwrap();
        let d = screening_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        let h = weight_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        assert_eq!(h.commutator(&d), d);
    }

    #[test]
    fn jacobi_identity_random_operators() {
        let mut rng = Lcg::new(777);
        for _ in 0..20 {
            let a = rand_op(&mut rng);
            let b = rand_op(&mut rng);
            let c = rand_op(&mut rng);
            let j = a
                .commutator(&b)
                .commutator(&c)
                .add(&b.commutator(&c).commutator(&a))
                .add(&c.commutator(&a).commutator(&b));
            assert!(j.is_zero(), "jacobi failed");
        }
    }

    #[test]
    fn apply_satisfies_leibniz() {
        let mut rng = Lcg::new(4242);
        let spec = LatticeSpec::new(3).unwrap();
        let d = screening_operator(&spec, 1, DEFAULT_WINDOW).unwrap();
        for _ in 0..25 {
            let f = rand_ratfunc(&mut rng);
            let g = rand_ratfunc(&mut rng);
            let lhs = d.apply(&f.mul(&g));
            let rhs = d.apply(&f).mul(&g).add(&f.mul(&d.apply(&g)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn json_roundtrip() {
        let spec = LatticeSpec::new(3).unwrap();
        let d = screening_operator(&spec, 0, DEFAULT_WINDOW).unwrap();
        let j = d.to_json();
        assert_eq!(DiffOperator::from_json(&j).unwrap(), d);
        let s1 = serde_json::to_string(&j).unwrap();
        let s2 = serde_json::to_string(&DiffOperator::from_json(&j).unwrap().to_json()).unwrap();
        assert_eq!(s1, s2);
    }

    fn rand_op(rng: &mut Lcg) -> DiffOperator {
        let mut op = DiffOperator::zero();
        for _ in 0..2 {
            let target = var((rng.next() % 2) as u32, 1 + (rng.next() % 2) as u32);
            op.add_term(rand_poly(rng), target);
        }
        op
    }

    fn rand_poly(rng: &mut Lcg) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for _ in 0..2 {
            let mut pairs = Vec::new();
            for f in 0..2u32 {
                for s in 1..=2u32 {
                    let e = (rng.next() % 2) as u32;
                    if e > 0 {
                        pairs.push((var(f, s), e));
                    }
                }
            }
            out = &out
                + &MultiPoly::from_term(
                    Monomial::from_pairs(&pairs),
                    scalar_from_i64((rng.next() % 5) as i64 - 2),
                );
        }
        out
    }

    fn rand_ratfunc(rng: &mut Lcg) -> RatFunc {
        let num = rand_poly(rng);
        loop {
            let den = rand_poly(rng);
            if !den.is_zero() {
                return RatFunc::new(num, den).unwrap();
            }
        }
    }
}
