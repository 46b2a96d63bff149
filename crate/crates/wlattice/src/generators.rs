//! The canonical generators tau_k: the universal closed form, chain shifts,
//! annihilator conjugation, and substitution-symmetry checks.

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::operators::{screening_operator, weight_operator, DiffOperator, DEFAULT_WINDOW};
use crate::ring::{MultiPoly, RatFunc, Scalar, VarId};
use std::collections::BTreeMap;
use std::fmt;

/// The paper's two stacked conventions: a generator or its reciprocal. Both
/// are first integrals of the same derivation system.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Orientation {
    #[default]
    Direct,
    Inverse,
}

impl Orientation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Orientation::Direct => "direct",
            Orientation::Inverse => "inverse",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Orientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Orientation> {
        match s {
            "direct" => Ok(Orientation::Direct),
            "inverse" => Ok(Orientation::Inverse),
            _ => Err(Error::Parse(format!(
                "orientation must be \"direct\" or \"inverse\", got {s:?}"
            ))),
        }
    }
}

/// One generator tau_k^{(n)} with its construction metadata.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TauGenerator {
    n: u32,
    index: u64,
    orientation: Orientation,
    value: RatFunc,
}

impl TauGenerator {
    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn value(&self) -> &RatFunc {
        &self.value
    }

    /// Chain positions touched: index-1 .. index-1 + 3(n-1) - 1.
    pub fn support_window(&self) -> (u64, u64) {
        (self.index - 1, 3 * (self.n as u64 - 1))
    }
}

fn weakly_increasing(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, idx: usize, lo: u32, hi: u32) {
        if idx == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi {
            cur[idx] = v;
            rec(out, cur, idx + 1, v, hi);
        }
    }
    rec(&mut out, &mut cur, 0, lo, hi);
    out
}

fn tuple_sum(spec: &LatticeSpec, bound: u32, offset: u32) -> MultiPoly {
    let m = spec.families() as usize;
    let mut total = MultiPoly::zero();
    for t in weakly_increasing(m, 1, bound) {
        let mut mono = Vec::with_capacity(m);
        for (f, &site) in t.iter().enumerate() {
            mono.push((VarId::new(f as u32, site + offset), 1));
        }
        total = &total
            + &MultiPoly::from_term(crate::ring::Monomial::from_pairs(&mono), Scalar::from_integer(1.into()));
    }
    total
}

/// The universal closed form of tau_1^{(n)}.
///
/// Direct orientation: N1 N2 / (prod_f v_{f,2} * N3), where N1 sums the
/// products v_{0,i_1} ... v_{m-1,i_m} over weakly increasing index tuples
/// bounded by 2, N2 is the same with all indices shifted up by one, and N3
/// the same sum bounded by 3. Inverse orientation is the reciprocal.
pub fn tau_closed_form(spec: &LatticeSpec, orientation: Orientation) -> RatFunc {
    let n1 = tuple_sum(spec, 2, 0);
    let n2 = tuple_sum(spec, 2, 1);
    let n3 = tuple_sum(spec, 3, 0);
    let mid_pairs: Vec<(VarId, u32)> = (0..spec.families())
        .map(|f| (VarId::new(f, 2), 1))
        .collect();
    let mid = MultiPoly::from_term(crate::ring::Monomial::from_pairs(&mid_pairs), Scalar::from_integer(1.into()));
    let num = &n1 * &n2;
    let den = &mid * &n3;
    let direct = RatFunc::new(num, den).expect("denominator nonzero");
    match orientation {
        Orientation::Direct => direct,
        Orientation::Inverse => direct.recip().expect("tau nonzero"),
    }
}

/// tau_k^{(n)}: the (k-1)-step chain shift of tau_1.
pub fn tau(spec: &LatticeSpec, index: u64, orientation: Orientation) -> Result<TauGenerator> {
    if index < 1 {
        return Err(Error::InvalidInput("generator index must be >= 1".into()));
    }
    let base = tau_closed_form(spec, orientation);
    let shift = spec.shift_map(index - 1);
    let value = base.rename(|v| shift.apply(v))?;
    Ok(TauGenerator {
        n: spec.rank(),
        index,
        orientation,
        value,
    })
}

/// tau_1 .. tau_count, one orientation.
pub fn tau_family(
    spec: &LatticeSpec,
    orientation: Orientation,
    count: u64,
) -> Result<Vec<TauGenerator>> {
    (1..=count).map(|k| tau(spec, k, orientation)).collect()
}

/// All annihilating operators of tau_index: each family's D and H over the
/// default window, conjugated by the chain shift that produces tau_index.
pub fn annihilators_for(spec: &LatticeSpec, index: u64) -> Result<Vec<DiffOperator>> {
    if index < 1 {
        return Err(Error::InvalidInput("generator index must be >= 1".into()));
    }
    let shift = spec.shift_map(index - 1);
    let mut out = Vec::new();
    for family in 0..spec.families() {
        let d = screening_operator(spec, family, DEFAULT_WINDOW)?;
        let h = weight_operator(spec, family, DEFAULT_WINDOW)?;
        out.push(d.rename(|v| shift.apply(v))?);
        out.push(h.rename(|v| shift.apply(v))?);
    }
    Ok(out)
}

/// True iff f is fixed by the substitution (exact equality of normal forms).
pub fn check_symmetry(f: &RatFunc, map: &BTreeMap<VarId, VarId>) -> Result<bool> {
    Ok(&f.substitute(map)? == f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::var;

    fn rf(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    #[test]
    fn sl2_closed_form_golden() {
        let spec = LatticeSpec::new(2).unwrap();
        let t = tau_closed_form(&spec, Orientation::Direct);
        assert_eq!(t, rf("(x1 + x2)(x2 + x3)/(x2 (x1 + x2 + x3))"));
        let ti = tau_closed_form(&spec, Orientation::Inverse);
        assert_eq!(ti, rf("x2 (x1 + x2 + x3)/((x1 + x2)(x2 + x3))"));
    }

    #[test]
    fn sl3_closed_forms_golden() {
        let spec = LatticeSpec::new(3).unwrap();
        let direct = tau_closed_form(&spec, Orientation::Direct);
        assert_eq!(
            direct,
            rf("(x1 y1 + x1 y2 + x2 y2)(x2 y2 + x2 y3 + x3 y3) / (x2 y2 (x1 y1 + x1 y2 + x1 y3 + x2 y2 + x2 y3 + x3 y3))")
        );
        let inv = tau_closed_form(&spec, Orientation::Inverse);
        assert_eq!(
            inv,
            rf("x2 y2 (x3 y3 + x2 (y2 + y3) + x1 (y1 + y2 + y3)) / ((x2 y2 + x1 (y1 + y2)) (x3 y3 + x2 (y2 + y3)))")
        );
    }

    #[test]
    fn sl2_shift_golden() {
        let spec = LatticeSpec::new(2).unwrap();
        let t2 = tau(&spec, 2, Orientation::Direct).unwrap();
        // the shift rule forces x3, x4 in the shifted denominators
        assert_eq!(t2.value(), &rf("(x2 + x3)(x3 + x4)/(x3 (x2 + x3 + x4))"));
        let t1 = tau(&spec, 1, Orientation::Direct).unwrap();
        assert_eq!(t1.value(), &tau_closed_form(&spec, Orientation::Direct));
    }

    #[test]
    fn sl3_shift_golden() {
        let spec = LatticeSpec::new(3).unwrap();
        let t2 = tau(&spec, 2, Orientation::Inverse).unwrap();
        assert_eq!(
            t2.value(),
            &rf("x3 y2 (x2 y1 + (x3 + x4)(y1 + y2) + x4 y3) / ((x2 y1 + x3 (y1 + y2))(x3 y2 + x4 (y2 + y3)))")
        );
    }

    #[test]
    fn sl5_pattern_golden() {
        // explicit tuple enumeration, independent of the builder's recursion
        let spec = LatticeSpec::new(5).unwrap();
        let t = tau_closed_form(&spec, Orientation::Direct);
        let n1 = "x1 y1 z1 k1 + x1 y1 z1 k2 + x1 y1 z2 k2 + x1 y2 z2 k2 + x2 y2 z2 k2";
        let n2 = "x2 y2 z2 k2 + x2 y2 z2 k3 + x2 y2 z3 k3 + x2 y3 z3 k3 + x3 y3 z3 k3";
        let n3 = "x1 y1 z1 k1 + x1 y1 z1 k2 + x1 y1 z1 k3 + x1 y1 z2 k2 + x1 y1 z2 k3 + x1 y1 z3 k3 \
                  + x1 y2 z2 k2 + x1 y2 z2 k3 + x1 y2 z3 k3 + x1 y3 z3 k3 \
                  + x2 y2 z2 k2 + x2 y2 z2 k3 + x2 y2 z3 k3 + x2 y3 z3 k3 + x3 y3 z3 k3";
        let expect = rf(&format!("({n1})({n2}) / (x2 y2 z2 k2 ({n3}))"));
        assert_eq!(t, expect);
    }

    #[test]
    fn annihilation_all_ranks_first_generator() {
        for n in 2..=5u32 {
            let spec = LatticeSpec::new(n).unwrap();
            for orientation in [Orientation::Direct, Orientation::Inverse] {
                let t = tau_closed_form(&spec, orientation);
                for op in annihilators_for(&spec, 1).unwrap() {
                    assert!(op.apply(&t).is_zero(), "n={n} {orientation}");
                }
            }
        }
    }

    #[test]
    fn annihilation_of_shifted_generators() {
        let spec = LatticeSpec::new(3).unwrap();
        for k in [2u64, 5, 7] {
            let t = tau(&spec, k, Orientation::Direct).unwrap();
            for op in annihilators_for(&spec, k).unwrap() {
                assert!(op.apply(t.value()).is_zero(), "k={k}");
            }
        }
    }

    #[test]
    fn shift_periodicity_is_relabeling() {
        let spec = LatticeSpec::new(3).unwrap();
        let period = 3 * (spec.rank() as u64 - 1);
        for k in 1..=3u64 {
            let a = tau(&spec, k, Orientation::Direct).unwrap();
            let b = tau(&spec, k + period, Orientation::Direct).unwrap();
            let shift = spec.shift_map(period);
            assert_eq!(&a.value().rename(|v| shift.apply(v)).unwrap(), b.value());
        }
    }

    #[test]
    fn support_window() {
        let spec = LatticeSpec::new(4).unwrap();
        let t = tau(&spec, 3, Orientation::Direct).unwrap();
        assert_eq!(t.support_window(), (2, 9));
        let vars = t.value().vars();
        let lo = vars.iter().map(|&v| spec.position(v)).min().unwrap();
        let hi = vars.iter().map(|&v| spec.position(v)).max().unwrap();
        assert_eq!((lo, hi), (2, 2 + 9 - 1));
    }

    #[test]
    fn symmetry_identity_and_involution() {
        let f = rf("(x1 + x2)/(x3 y1)");
        assert!(check_symmetry(&f, &BTreeMap::new()).unwrap());
        // a swap applied twice is the identity
        let mut swap = BTreeMap::new();
        swap.insert(var(0, 1), var(0, 3));
        swap.insert(var(0, 3), var(0, 1));
        let once = f.substitute(&swap).unwrap();
        assert_ne!(once, f);
        assert_eq!(once.substitute(&swap).unwrap(), f);
    }
}
