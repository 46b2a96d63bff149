//! Exact Laurent-polynomial decomposition of a bracket in the generators:
//! dense exponent-basis enumeration, a random-evaluation exact linear system,
//! fraction-free / modular solving, and identity verification.

pub mod solver;

use crate::error::{Error, Result};
use crate::generators::Orientation;
use crate::ring::{scalar_from_i64, scalar_to_string, MultiPoly, RatFunc, Scalar, VarId};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt;

/// All exponent tuples in [lo, hi]^m, enumerated in odometer order with the
/// last coordinate fastest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentBasis {
    m: usize,
    lo: i64,
    hi: i64,
    tuples: Vec<Vec<i64>>,
}

impl LaurentBasis {
    pub fn enumerate(m: usize, lo: i64, hi: i64) -> Result<LaurentBasis> {
        if m == 0 {
            return Err(Error::InvalidInput("basis needs at least one generator".into()));
        }
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "empty exponent range [{lo}, {hi}]"
            )));
        }
        let width = (hi - lo + 1) as usize;
        let size = width
            .checked_pow(m as u32)
            .ok_or_else(|| Error::InvalidInput("basis too large".into()))?;
        let mut tuples = Vec::with_capacity(size);
        let mut cur = vec![lo; m];
        loop {
            tuples.push(cur.clone());
            let mut idx = m;
            loop {
                if idx == 0 {
                    return Ok(LaurentBasis { m, lo, hi, tuples });
                }
                idx -= 1;
                if cur[idx] < hi {
                    cur[idx] += 1;
                    for c in &mut cur[idx + 1..] {
                        *c = lo;
                    }
                    break;
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.m
    }

    pub fn bounds(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn tuples(&self) -> &[Vec<i64>] {
        &self.tuples
    }
}

/// How a decomposition is checked.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum VerifyMode {
    /// Symbolic for small variable counts (<= 9 lattice variables), sampled
    /// with 50 fresh points above.
    #[default]
    Auto,
    Symbolic,
    Sampled(u32),
}

/// Verification certificate carried by a result.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerifyCert {
    Symbolic,
    Sampled { count: u32, note: String },
}

impl VerifyCert {
    pub fn label(&self) -> String {
        match self {
            VerifyCert::Symbolic => "symbolic".into(),
            VerifyCert::Sampled { count, .. } => format!("sampled({count})"),
        }
    }
}

/// Outcome of `verify_identity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verification {
    Pass(VerifyCert),
    Fail { witness: String },
}

#[derive(Clone, Debug)]
pub struct DecompConfig {
    pub seed: u64,
    /// Sampling bound B: coordinates are uniform in [1, B].
    pub sample_bound: u64,
    /// Extra sample rows beyond the basis size, to expose rank deficiencies.
    pub samples_extra: usize,
    pub verify: VerifyMode,
    /// Widen the exponent range by 1 in each direction, up to this many
    /// times, when the system is not representable.
    pub max_widenings: u32,
    pub max_redraws: u32,
    /// Recorded into the result when the generators came from tau's.
    pub orientation: Option<Orientation>,
}

impl Default for DecompConfig {
    fn default() -> Self {
        DecompConfig {
            seed: 20240,
            sample_bound: 11,
            samples_extra: 8,
            verify: VerifyMode::Auto,
            max_widenings: 2,
            max_redraws: 20_000,
            orientation: None,
        }
    }
}

/// The sampled exact linear system: one row per accepted random point.
/// Row entries are products of generator values to basis exponents; the
/// right-hand side is F at the point.
pub struct LinearSystem {
    pub basis: LaurentBasis,
    pub points: Vec<BTreeMap<VarId, Scalar>>,
    /// Per point, the generator values (all nonzero).
    pub gen_values: Vec<Vec<Scalar>>,
    pub rhs: Vec<Scalar>,
}

impl LinearSystem {
    pub fn rows(&self) -> usize {
        self.rhs.len()
    }

    /// Entry (row, basis column), computed from the cached generator values.
    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        tuple_value(&self.gen_values[row], &self.basis.tuples()[col])
    }
}

fn tuple_value(gen_values: &[Scalar], tuple: &[i64]) -> Scalar {
    let mut acc = Scalar::one();
    for (t, &e) in gen_values.iter().zip(tuple) {
        if e != 0 {
            acc *= t.pow(e as i32);
        }
    }
    acc
}

/// Deterministic stream of sample coordinates.
pub(crate) struct SplitMix(u64);

impl SplitMix {
    pub(crate) fn new(seed: u64) -> SplitMix {
        SplitMix(seed)
    }
    pub(crate) fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

fn draw_points(
    f: &RatFunc,
    gens: &[RatFunc],
    count: usize,
    bound: u64,
    rng: &mut SplitMix,
    max_redraws: u32,
) -> Result<(Vec<BTreeMap<VarId, Scalar>>, Vec<Vec<Scalar>>, Vec<Scalar>)> {
    let mut vars: Vec<VarId> = f.vars().into_iter().collect();
    for g in gens {
        for v in g.vars() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    vars.sort();
    let mut points = Vec::with_capacity(count);
    let mut gen_values = Vec::with_capacity(count);
    let mut rhs = Vec::with_capacity(count);
    let mut redraws = 0u32;
    while points.len() < count {
        let point: BTreeMap<VarId, Scalar> = vars
            .iter()
            .map(|&v| (v, scalar_from_i64(1 + (rng.next() % bound) as i64)))
            .collect();
        let accepted = (|| -> Result<(Vec<Scalar>, Scalar)> {
            let mut tv = Vec::with_capacity(gens.len());
            for g in gens {
                let val = g.eval(&point)?;
                if val.is_zero() {
                    return Err(Error::Pole); // zero is as unusable as a pole
                }
                tv.push(val);
            }
            let fv = f.eval(&point)?;
            Ok((tv, fv))
        })();
        match accepted {
            Ok((tv, fv)) => {
                points.push(point);
                gen_values.push(tv);
                rhs.push(fv);
            }
            Err(Error::Pole) => {
                redraws += 1;
                if redraws > max_redraws {
                    return Err(Error::DegenerateSampling(redraws));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok((points, gen_values, rhs))
}

/// Assemble the exact linear system from `samples` accepted random points
/// (coordinates uniform in [1, config.sample_bound], deterministic from
/// config.seed; points where any denominator or generator vanishes are
/// rejected and redrawn).
pub fn build_system(
    f: &RatFunc,
    gens: &[RatFunc],
    basis: &LaurentBasis,
    samples: usize,
    config: &DecompConfig,
) -> Result<LinearSystem> {
    if gens.is_empty() || gens.len() != basis.arity() {
        return Err(Error::InvalidInput(
            "generator count must match the basis arity".into(),
        ));
    }
    if gens.iter().any(|g| g.is_zero()) {
        return Err(Error::InvalidInput("generators must be nonzero".into()));
    }
    if samples < basis.len() {
        return Err(Error::InvalidInput(format!(
            "need at least {} samples for a basis of that size, got {samples}",
            basis.len()
        )));
    }
    let mut rng = SplitMix::new(config.seed);
    let (points, gen_values, rhs) = draw_points(
        f,
        gens,
        samples,
        config.sample_bound.max(2),
        &mut rng,
        config.max_redraws,
    )?;
    Ok(LinearSystem {
        basis: basis.clone(),
        points,
        gen_values,
        rhs,
    })
}

/// An exact Laurent polynomial in abstract generator symbols t_1..t_m,
/// together with how it was verified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompResult {
    coeffs: BTreeMap<Vec<i64>, Scalar>,
    orientation: Option<Orientation>,
    verification: VerifyCert,
}

impl DecompResult {
    pub fn coeffs(&self) -> &BTreeMap<Vec<i64>, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, tuple: &[i64]) -> Scalar {
        self.coeffs.get(tuple).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn orientation(&self) -> Option<Orientation> {
        self.orientation
    }

    pub fn verification(&self) -> &VerifyCert {
        &self.verification
    }

    /// Coefficients as (tuple, value) in deterministic (lexicographic) order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let mut obj = Map::new();
                obj.insert("c".into(), Value::String(scalar_to_string(c)));
                obj.insert("e".into(), json!(e));
                Value::Object(obj)
            })
            .collect();
        let mut obj = Map::new();
        obj.insert("coeffs".into(), Value::Array(coeffs));
        if let Some(o) = self.orientation {
            obj.insert("orientation".into(), Value::String(o.as_str().into()));
        }
        obj.insert(
            "verified".into(),
            Value::String(self.verification.label()),
        );
        Value::Object(obj)
    }
}

impl fmt::Display for DecompResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
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
            let mut printed = false;
            if !abs.is_one() || e.iter().all(|&x| x == 0) {
                write!(f, "{}", abs)?;
                printed = true;
            }
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if printed {
                    f.write_str(" ")?;
                }
                if exp == 1 {
                    write!(f, "t{}", k + 1)?;
                } else {
                    write!(f, "t{}^{}", k + 1, exp)?;
                }
                printed = true;
            }
        }
        Ok(())
    }
}

/// Solve for the exact coefficients of F over the basis, verify the identity,
/// and return the nonzero coefficients.
///
/// On "not representable", the exponent range is widened by one in each
/// direction and the solve retried, up to `config.max_widenings` times.
pub fn solve_decomposition(
    f: &RatFunc,
    gens: &[RatFunc],
    basis: &LaurentBasis,
    config: &DecompConfig,
) -> Result<DecompResult> {
    let mut widen = 0u32;
    loop {
        let attempt_basis;
        let basis_ref = if widen == 0 {
            basis
        } else {
            let (lo, hi) = basis.bounds();
            attempt_basis =
                LaurentBasis::enumerate(basis.arity(), lo - widen as i64, hi + widen as i64)?;
            &attempt_basis
        };
        match attempt(f, gens, basis_ref, config) {
            Err(Error::NotRepresentable) if widen < config.max_widenings => {
                widen += 1;
            }
            other => return other,
        }
    }
}

fn attempt(
    f: &RatFunc,
    gens: &[RatFunc],
    basis: &LaurentBasis,
    config: &DecompConfig,
) -> Result<DecompResult> {
    if f.is_zero() {
        return Ok(DecompResult {
            coeffs: BTreeMap::new(),
            orientation: config.orientation,
            verification: VerifyCert::Symbolic,
        });
    }
    let samples = basis.len() + config.samples_extra;
    let sys = build_system(f, gens, basis, samples, config)?;
    let solution = solver::solve(&sys)?;
    let mut coeffs = BTreeMap::new();
    for (tuple, c) in basis.tuples().iter().zip(solution) {
        if !c.is_zero() {
            coeffs.insert(tuple.clone(), c);
        }
    }
    let candidate = DecompResult {
        coeffs,
        orientation: config.orientation,
        verification: VerifyCert::Symbolic, // placeholder until verified
    };
    match verify_identity(f, gens, &candidate, config.verify, config)? {
        Verification::Pass(cert) => Ok(DecompResult {
            verification: cert,
            ..candidate
        }),
        Verification::Fail { witness } => Err(Error::VerificationFailed { witness }),
    }
}

/// Check F = sum c_e prod gens^e, symbolically or on fresh sample points.
pub fn verify_identity(
    f: &RatFunc,
    gens: &[RatFunc],
    result: &DecompResult,
    mode: VerifyMode,
    config: &DecompConfig,
) -> Result<Verification> {
    let mode = match mode {
        VerifyMode::Auto => {
            let mut vars = f.vars();
            for g in gens {
                vars.extend(g.vars());
            }
            if vars.len() <= 9 {
                VerifyMode::Symbolic
            } else {
                VerifyMode::Sampled(50)
            }
        }
        m => m,
    };
    match mode {
        VerifyMode::Symbolic => {
            if symbolic_identity_holds(f, gens, result.coeffs()) {
                Ok(Verification::Pass(VerifyCert::Symbolic))
            } else {
                let witness = find_witness(f, gens, result, config)?;
                Ok(Verification::Fail { witness })
            }
        }
        VerifyMode::Sampled(k) => {
            let degree_bound = identity_degree_bound(f, gens, result);
            // keep each sample's failure probability below 1/8 even when the
            // solve used a small sampling range
            let bound = config.sample_bound.max(8 * degree_bound.max(1));
            let mut rng = SplitMix::new(config.seed ^ 0xa5a5_5a5a_dead_beef);
            let (_, gen_values, rhs) =
                draw_points(f, gens, k as usize, bound, &mut rng, config.max_redraws)?;
            for (row, fv) in rhs.iter().enumerate() {
                let mut acc = Scalar::zero();
                for (tuple, c) in result.coeffs() {
                    acc += c * &tuple_value(&gen_values[row], tuple);
                }
                if &acc != fv {
                    return Ok(Verification::Fail {
                        witness: format!(
                            "sample {row}: expected {}, decomposition gives {}",
                            scalar_to_string(fv),
                            scalar_to_string(&acc)
                        ),
                    });
                }
            }
            let note = format!(
                "probabilistic: identity of total degree <= {degree_bound}; \
                 each of {k} independent points over [1, {bound}] misses a nonzero \
                 difference with probability <= {degree_bound}/{bound}"
            );
            Ok(Verification::Pass(VerifyCert::Sampled { count: k, note }))
        }
        VerifyMode::Auto => unreachable!(),
    }
}

/// Exact check of F = P(gens) by cross-multiplication over the common
/// denominator; costs polynomial arithmetic only, no gcds.
fn symbolic_identity_holds(
    f: &RatFunc,
    gens: &[RatFunc],
    coeffs: &BTreeMap<Vec<i64>, Scalar>,
) -> bool {
    if coeffs.is_empty() {
        return f.is_zero();
    }
    let m = gens.len();
    let mut hi = vec![0i64; m];
    let mut lo = vec![0i64; m];
    for tuple in coeffs.keys() {
        for (i, &e) in tuple.iter().enumerate() {
            hi[i] = hi[i].max(e);
            lo[i] = lo[i].max(-e);
        }
    }
    // power tables: num^0..num^{lo+hi}, den^0..den^{lo+hi}
    let mut num_pows: Vec<Vec<MultiPoly>> = Vec::with_capacity(m);
    let mut den_pows: Vec<Vec<MultiPoly>> = Vec::with_capacity(m);
    for (i, g) in gens.iter().enumerate() {
        let top = (lo[i] + hi[i]) as usize;
        let mut np = vec![MultiPoly::one()];
        let mut dp = vec![MultiPoly::one()];
        for k in 0..top {
            np.push(&np[k] * g.num());
            dp.push(&dp[k] * g.den());
        }
        num_pows.push(np);
        den_pows.push(dp);
    }
    // common denominator D = prod den_i^{hi_i} num_i^{lo_i}
    let mut common = MultiPoly::one();
    for i in 0..m {
        common = &common * &den_pows[i][hi[i] as usize];
        common = &common * &num_pows[i][lo[i] as usize];
    }
    // P_num = sum_e c_e prod num_i^{lo_i + e_i} den_i^{hi_i - e_i}
    let mut p_num = MultiPoly::zero();
    for (tuple, c) in coeffs {
        let mut term = MultiPoly::constant(c.clone());
        for (i, &e) in tuple.iter().enumerate() {
            term = &term * &num_pows[i][(lo[i] + e) as usize];
            term = &term * &den_pows[i][(hi[i] - e) as usize];
        }
        p_num = &p_num + &term;
    }
    &(f.num() * &common) == &(&p_num * f.den())
}

fn identity_degree_bound(f: &RatFunc, gens: &[RatFunc], result: &DecompResult) -> u64 {
    let mut per_gen_max = vec![0u64; gens.len()];
    for tuple in result.coeffs().keys() {
        for (i, &e) in tuple.iter().enumerate() {
            per_gen_max[i] = per_gen_max[i].max(e.unsigned_abs());
        }
    }
    let mut d = f.num().degree() + f.den().degree();
    for (g, &e) in gens.iter().zip(&per_gen_max) {
        d += e * (g.num().degree() + g.den().degree());
    }
    d
}

fn find_witness(
    f: &RatFunc,
    gens: &[RatFunc],
    result: &DecompResult,
    config: &DecompConfig,
) -> Result<String> {
    let degree_bound = identity_degree_bound(f, gens, result);
    let bound = config.sample_bound.max(8 * degree_bound.max(1));
    let mut rng = SplitMix::new(config.seed ^ 0x1357_9bdf_2468_ace0);
    for _ in 0..200 {
        let (points, gen_values, rhs) = draw_points(f, gens, 1, bound, &mut rng, config.max_redraws)?;
        let mut acc = Scalar::zero();
        for (tuple, c) in result.coeffs() {
            acc += c * &tuple_value(&gen_values[0], tuple);
        }
        if acc != rhs[0] {
            let assignment: Vec<String> = points[0]
                .iter()
                .map(|(v, x)| format!("{}={}", v.name(), scalar_to_string(x)))
                .collect();
            return Ok(format!(
                "{{{}}}: F = {}, decomposition = {}",
                assignment.join(", "),
                scalar_to_string(&rhs[0]),
                scalar_to_string(&acc)
            ));
        }
    }
    Ok("symbolic mismatch (no sampled witness found)".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{tau_family, Orientation};
    use crate::lattice::LatticeSpec;

    #[test]
    fn basis_sizes_and_order() {
        let b = LaurentBasis::enumerate(2, 0, 3).unwrap();
        assert_eq!(b.len(), 16);
        assert_eq!(b.tuples()[0], vec![0, 0]);
        assert_eq!(b.tuples()[1], vec![0, 1]);
        assert_eq!(b.tuples()[15], vec![3, 3]);
        let b = LaurentBasis::enumerate(6, -1, 1).unwrap();
        assert_eq!(b.len(), 729);
        let b = LaurentBasis::enumerate(1, 0, 0).unwrap();
        assert_eq!(b.len(), 1);
        assert!(LaurentBasis::enumerate(2, 1, 0).is_err());
    }

    #[test]
    fn build_system_shape_and_determinism() {
        let spec = LatticeSpec::new(2).unwrap();
        let taus = tau_family(&spec, Orientation::Inverse, 2).unwrap();
        let gens: Vec<RatFunc> = taus.iter().map(|t| t.value().clone()).collect();
        let basis = LaurentBasis::enumerate(2, 0, 3).unwrap();
        let cfg = DecompConfig::default();
        let f = gens[0].clone();
        let s1 = build_system(&f, &gens, &basis, 16, &cfg).unwrap();
        assert_eq!(s1.rows(), 16);
        let s2 = build_system(&f, &gens, &basis, 16, &cfg).unwrap();
        assert_eq!(s1.points, s2.points);
        assert_eq!(s1.rhs, s2.rhs);
        assert!(build_system(&f, &gens, &basis, 15, &cfg).is_err());
    }

    #[test]
    fn decompose_single_generator() {
        // F = gens_1 exactly -> unit coefficient vector
        let spec = LatticeSpec::new(2).unwrap();
        let taus = tau_family(&spec, Orientation::Inverse, 2).unwrap();
        let gens: Vec<RatFunc> = taus.iter().map(|t| t.value().clone()).collect();
        let basis = LaurentBasis::enumerate(2, 0, 3).unwrap();
        let cfg = DecompConfig::default();
        let r = solve_decomposition(&gens[0], &gens, &basis, &cfg).unwrap();
        assert_eq!(r.coeffs().len(), 1);
        assert_eq!(r.coeff(&[1, 0]), scalar_from_i64(1));
        assert!(matches!(r.verification(), VerifyCert::Symbolic));
    }

    #[test]
    fn decompose_zero_is_empty() {
        let spec = LatticeSpec::new(2).unwrap();
        let taus = tau_family(&spec, Orientation::Inverse, 2).unwrap();
        let gens: Vec<RatFunc> = taus.iter().map(|t| t.value().clone()).collect();
        let basis = LaurentBasis::enumerate(2, 0, 3).unwrap();
        let r = solve_decomposition(&RatFunc::zero(), &gens, &basis, &DecompConfig::default())
            .unwrap();
        assert!(r.is_zero());
        assert_eq!(r.to_json()["coeffs"], json!([]));
        assert_eq!(format!("{r}"), "0");
    }

    #[test]
    fn unrepresentable_reports_or_escalates() {
        // x1 alone cannot be written in tau's of sl2 within a tight range
        let spec = LatticeSpec::new(2).unwrap();
        let taus = tau_family(&spec, Orientation::Inverse, 2).unwrap();
        let gens: Vec<RatFunc> = taus.iter().map(|t| t.value().clone()).collect();
        let basis = LaurentBasis::enumerate(2, 0, 1).unwrap();
        let cfg = DecompConfig {
            max_widenings: 1,
            ..DecompConfig::default()
        };
        let err = solve_decomposition(&RatFunc::parse("x1").unwrap(), &gens, &basis, &cfg)
            .unwrap_err();
        assert!(matches!(err, Error::NotRepresentable));
    }

    #[test]
    fn verification_rejects_perturbed_coefficients() {
        let spec = LatticeSpec::new(2).unwrap();
        let taus = tau_family(&spec, Orientation::Inverse, 2).unwrap();
        let gens: Vec<RatFunc> = taus.iter().map(|t| t.value().clone()).collect();
        let basis = LaurentBasis::enumerate(2, 0, 3).unwrap();
        let cfg = DecompConfig::default();
        let good = solve_decomposition(&gens[0], &gens, &basis, &cfg).unwrap();
        let mut bad_coeffs = good.coeffs().clone();
        // perturb one coefficient by 1
        let key = vec![1, 0];
        bad_coeffs.insert(key.clone(), good.coeff(&key) + scalar_from_i64(1));
        let bad = DecompResult {
            coeffs: bad_coeffs,
            orientation: None,
            verification: VerifyCert::Symbolic,
        };
        match verify_identity(&gens[0], &gens, &bad, VerifyMode::Symbolic, &cfg).unwrap() {
            Verification::Fail { witness } => assert!(!witness.is_empty()),
            Verification::Pass(_) => panic!("perturbed decomposition must fail"),
        }
        match verify_identity(&gens[0], &gens, &bad, VerifyMode::Sampled(20), &cfg).unwrap() {
            Verification::Fail { witness } => assert!(!witness.is_empty()),
            Verification::Pass(_) => panic!("perturbed decomposition must fail sampling"),
        }
    }

    #[test]
    fn json_shape() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![1, 1, 0], scalar_from_i64(-2));
        let r = DecompResult {
            coeffs,
            orientation: Some(Orientation::Inverse),
            verification: VerifyCert::Symbolic,
        };
        let s = serde_json::to_string(&r.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"coeffs":[{"c":"-2","e":[1,1,0]}],"orientation":"inverse","verified":"symbolic"}"#
        );
        assert_eq!(format!("{r}"), "-2 t1 t2");
    }
}
