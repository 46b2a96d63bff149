//! Multivariate polynomial gcd.
//!
//! Strategy: strip monomial content, try exact division both ways, then prove
//! variables out of the gcd with univariate images (sound degree bounds under
//! a leading-coefficient check) and finish with a primitive pseudo-remainder
//! sequence on the variable with the smallest certified bound.

use super::{Monomial, MultiPoly, Scalar, VarId};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Greatest common divisor, normalized monic under the graded lex order.
///
/// Errors if both inputs are zero.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    Ok(gcd_inner(a, b).monic())
}

fn mono_content(p: &MultiPoly) -> Monomial {
    let mut it = p.iter();
    let mut acc = it.next().expect("nonzero").0.clone();
    for (m, _) in it {
        acc = acc.gcd(m);
        if acc.is_unit() {
            break;
        }
    }
    acc
}

fn div_monomial(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.is_unit() {
        return p.clone();
    }
    MultiPoly::from_terms(
        p.iter()
            .map(|(k, c)| (k.try_div(m).expect("content divides"), c.clone())),
    )
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let ma = mono_content(a);
    let mb = mono_content(b);
    let mg = ma.gcd(&mb);
    let ap = div_monomial(a, &ma);
    let bp = div_monomial(b, &mb);
    gcd_monomial_free(&ap, &bp).mul_monomial(&mg)
}

fn gcd_monomial_free(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a == b {
        return a.clone();
    }
    if *a == -b {
        return a.clone();
    }
    // cheap exact-division wins: nested denominators hit this constantly
    let (small, large) = if a.num_terms() <= b.num_terms() {
        (a, b)
    } else {
        (b, a)
    };
    if large.try_div_exact(small).is_some() {
        return small.clone();
    }

    let shared: Vec<VarId> = a.vars().intersection(&b.vars()).copied().collect();
    if shared.is_empty() {
        return MultiPoly::one();
    }

    let mut rng = Lcg::new(0x9e3779b97f4a7c15);
    let mut best: Option<(VarId, u32)> = None;
    for &v in &shared {
        let cap = a.max_var_degree(v).min(b.max_var_degree(v));
        let bound = match image_degree_bound(a, b, v, &mut rng) {
            Some(d) => d.min(cap),
            None => cap,
        };
        if bound == 0 {
            continue; // v provably absent from the gcd
        }
        if best.map(|(_, d)| bound < d).unwrap_or(true) {
            best = Some((v, bound));
        }
    }
    let main = match best {
        None => return MultiPoly::one(),
        Some((v, _)) => v,
    };
    prs_gcd(a, b, main)
}

/// Sound upper bound for deg_v(gcd): evaluate all other variables at a point
/// where lc_v(a) stays nonzero; then deg_v gcd <= deg of the univariate gcd
/// of the images. Takes the minimum over a few points, since a single image
/// can overshoot.
fn image_degree_bound(a: &MultiPoly, b: &MultiPoly, v: VarId, rng: &mut Lcg) -> Option<u32> {
    let mut others: Vec<VarId> = a.vars().union(&b.vars()).copied().collect();
    others.retain(|&w| w != v);
    let lc_a = lc_in_var(a, v);
    let mut best: Option<u32> = None;
    let mut successes = 0;
    for _ in 0..10 {
        let point: BTreeMap<VarId, Scalar> = others
            .iter()
            .map(|&w| (w, super::scalar_from_i64(1 + (rng.next() % 97) as i64)))
            .collect();
        if lc_a.eval(&point).expect("point complete").is_zero() {
            continue;
        }
        let ua = univariate_image(a, v, &point);
        let ub = univariate_image(b, v, &point);
        let d = univariate_gcd_degree(ua, ub);
        best = Some(best.map_or(d, |x| x.min(d)));
        if d == 0 {
            break;
        }
        successes += 1;
        if successes >= 3 {
            break;
        }
    }
    best
}

fn lc_in_var(p: &MultiPoly, v: VarId) -> MultiPoly {
    let d = p.max_var_degree(v);
    MultiPoly::from_terms(p.iter().filter_map(|(m, c)| {
        if m.exponent(v) == d {
            let rest = m
                .try_div(&Monomial::from_pairs(&[(v, d)]))
                .expect("exponent matches");
            Some((rest, c.clone()))
        } else {
            None
        }
    }))
}

fn univariate_image(p: &MultiPoly, v: VarId, point: &BTreeMap<VarId, Scalar>) -> Vec<Scalar> {
    let d = p.max_var_degree(v) as usize;
    let mut coeffs = vec![Scalar::zero(); d + 1];
    for (m, c) in p.iter() {
        let e = m.exponent(v) as usize;
        let mut prod = c.clone();
        for (w, k) in m.iter() {
            if w != v {
                prod *= point[&w].pow(k as i32);
            }
        }
        coeffs[e] += prod;
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

/// Degree of gcd of two univariate polynomials over Q (monic Euclid).
fn univariate_gcd_degree(mut a: Vec<Scalar>, mut b: Vec<Scalar>) -> u32 {
    let trim = |v: &mut Vec<Scalar>| {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b, with b made monic first
        let lead = b.last().unwrap().clone();
        for c in b.iter_mut() {
            *c /= lead.clone();
        }
        while a.len() >= b.len() && !a.is_empty() {
            let k = a.len() - b.len();
            let f = a.last().unwrap().clone();
            for (i, bc) in b.iter().enumerate() {
                let v = &a[k + i] - &(bc * &f);
                a[k + i] = v;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if a.is_empty() {
        0 // unreachable for nonzero inputs
    } else {
        (a.len() - 1) as u32
    }
}

// ----------------------------------------------------- primitive PRS backend

type Uni = BTreeMap<u32, MultiPoly>; // exponent in main var -> coefficient

fn to_uni(p: &MultiPoly, v: VarId) -> Uni {
    let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (m, c) in p.iter() {
        let e = m.exponent(v);
        let rest = if e == 0 {
            m.clone()
        } else {
            m.try_div(&Monomial::from_pairs(&[(v, e)])).expect("exp ok")
        };
        let entry = out.entry(e).or_default();
        *entry = &*entry + &MultiPoly::from_term(rest, c.clone());
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn from_uni(u: &Uni, v: VarId) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (&e, c) in u {
        out = &out + &c.mul_monomial(&Monomial::from_pairs(&[(v, e)]));
    }
    out
}

fn uni_degree(u: &Uni) -> u32 {
    *u.keys().next_back().expect("nonzero")
}

fn uni_content(u: &Uni) -> MultiPoly {
    let mut it = u.values();
    let mut acc = it.next().expect("nonzero").clone();
    for c in it {
        if acc.is_constant() {
            break;
        }
        acc = gcd_inner(&acc, c);
    }
    acc
}

fn uni_divide(u: &Uni, d: &MultiPoly) -> Uni {
    if d.constant_value().is_some() {
        let inv = Scalar::one() / d.constant_value().unwrap();
        return u.iter().map(|(&e, c)| (e, c.scale(&inv))).collect();
    }
    u.iter()
        .map(|(&e, c)| (e, c.try_div_exact(d).expect("content divides")))
        .collect()
}

fn uni_primitive(u: &Uni) -> Uni {
    uni_divide(u, &uni_content(u))
}

/// Pseudo-remainder of f by g in the main variable.
fn pseudo_rem(f: &Uni, g: &Uni, v: VarId) -> Uni {
    let dg = uni_degree(g);
    let lg = g[&dg].clone();
    let mut r = f.clone();
    while !r.is_empty() && uni_degree(&r) >= dg {
        let dr = uni_degree(&r);
        let lr = r[&dr].clone();
        let shift = dr - dg;
        // r = lg*r - lr * x^shift * g
        let mut next: Uni = BTreeMap::new();
        for (&e, c) in &r {
            let entry = next.entry(e).or_default();
            *entry = &*entry + &(c * &lg);
        }
        for (&e, c) in g {
            let entry = next.entry(e + shift).or_default();
            *entry = &*entry - &(c * &lr);
        }
        next.retain(|_, c| !c.is_zero());
        let _ = v;
        r = next;
    }
    r
}

fn prs_gcd(a: &MultiPoly, b: &MultiPoly, v: VarId) -> MultiPoly {
    let ua = to_uni(a, v);
    let ub = to_uni(b, v);
    let ca = uni_content(&ua);
    let cb = uni_content(&ub);
    let shared = if ca.is_constant() || cb.is_constant() {
        MultiPoly::one()
    } else {
        gcd_inner(&ca, &cb)
    };
    let mut r0 = uni_divide(&ua, &ca);
    let mut r1 = uni_divide(&ub, &cb);
    if uni_degree(&r0) < uni_degree(&r1) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        let r = pseudo_rem(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_empty() {
            BTreeMap::new()
        } else {
            uni_primitive(&r)
        };
    }
    let g = from_uni(&uni_primitive(&r0), v);
    &g * &shared
}

/// Minimal deterministic generator for evaluation points (not user-facing).
pub(crate) struct Lcg(u64);

impl Lcg {
    pub(crate) fn new(seed: u64) -> Lcg {
        Lcg(seed | 1)
    }
    pub(crate) fn next(&mut self) -> u64 {
        // splitmix64
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RatFunc;

    fn p(s: &str) -> MultiPoly {
        RatFunc::parse(s).unwrap().num().clone()
    }

    #[test]
    fn monomial_gcd() {
        let g = poly_gcd(&p("2 x1 x2"), &p("4 x2^2")).unwrap();
        assert_eq!(g, p("x2"));
    }

    #[test]
    fn gcd_with_one() {
        let g = poly_gcd(&p("x1^3 + x2"), &p("1")).unwrap();
        assert_eq!(g, p("1"));
    }

    #[test]
    fn both_zero_is_an_error() {
        assert!(matches!(
            poly_gcd(&MultiPoly::zero(), &MultiPoly::zero()),
            Err(Error::UndefinedGcd)
        ));
    }

    #[test]
    fn structured_common_factor() {
        // derived check: verify by exact division both ways
        let a = &(&p("x1 + x2") * &p("x1 + x2")) * &p("x2 + x3");
        let b = &p("x1 + x2") * &p("x3 + x4");
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, p("x1 + x2"));
        let qa = a.try_div_exact(&g).unwrap();
        let qb = b.try_div_exact(&g).unwrap();
        assert_eq!(&qa * &g, a);
        assert_eq!(&qb * &g, b);
        assert_eq!(poly_gcd(&qa, &qb).unwrap(), p("1"));
    }

    #[test]
    fn coprime_inputs() {
        let g = poly_gcd(&p("x1 x2 + 1"), &p("x1 + x2 + x3")).unwrap();
        assert_eq!(g, p("1"));
    }

    #[test]
    fn gcd_contract_randomized() {
        // products of random small factors share exactly the planted factor
        let mut rng = Lcg::new(12345);
        for _ in 0..60 {
            let f = rand_poly(&mut rng);
            let a0 = rand_poly(&mut rng);
            let b0 = rand_poly(&mut rng);
            if f.is_zero() || a0.is_zero() || b0.is_zero() {
                continue;
            }
            let a = &f * &a0;
            let b = &f * &b0;
            let g = poly_gcd(&a, &b).unwrap();
            assert!(a.try_div_exact(&g).is_some());
            assert!(b.try_div_exact(&g).is_some());
            // planted factor divides the gcd
            assert!(g.try_div_exact(&poly_gcd(&f, &g).unwrap()).is_some());
            let qa = a.try_div_exact(&g).unwrap();
            let qb = b.try_div_exact(&g).unwrap();
            assert_eq!(poly_gcd(&qa, &qb).unwrap(), p("1"));
        }
    }

    fn rand_poly(rng: &mut Lcg) -> MultiPoly {
        use crate::ring::{scalar_from_i64, var, Monomial};
        let nterms = 1 + (rng.next() % 3) as usize;
        let mut out = MultiPoly::zero();
        for _ in 0..nterms {
            let mut pairs = Vec::new();
            for f in 0..2u32 {
                for s in 1..=2u32 {
                    let e = (rng.next() % 3) as u32;
                    if e > 0 {
                        pairs.push((var(f, s), e));
                    }
                }
            }
            let c = (rng.next() % 7) as i64 - 3;
            out = &out + &MultiPoly::from_term(Monomial::from_pairs(&pairs), scalar_from_i64(c));
        }
        out
    }
}
