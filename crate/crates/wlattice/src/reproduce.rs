//! The full verification table: every reference identity the engine must
//! reproduce, runnable as a batch (`wlattice reproduce`) and asserted by the
//! acceptance test suite.

use crate::bracket::poisson_bracket;
use crate::decompose::{
    solve_decomposition, DecompConfig, DecompResult, LaurentBasis, SplitMix, VerifyCert,
    VerifyMode,
};
use crate::generators::{
    annihilators_for, check_symmetry, tau, tau_family, Orientation,
};
use crate::lattice::LatticeSpec;
use crate::operators::{screening_operator, weight_operator, DiffOperator, DEFAULT_WINDOW};
use crate::reference;
use crate::ring::{poly_gcd, scalar_from_i64, Monomial, MultiPoly, RatFunc, Scalar, VarId};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::time::Instant;

/// One line of the verification report.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: String,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(id: &str, label: &str, passed: bool, detail: String) -> CheckOutcome {
        CheckOutcome {
            id: id.into(),
            label: label.into(),
            passed,
            detail,
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{status} [{}] {}", self.id, self.label)
        } else {
            format!("{status} [{}] {} — {}", self.id, self.label, self.detail)
        }
    }
}

fn rf(s: &str) -> RatFunc {
    RatFunc::parse(s).expect("reference expression parses")
}

fn spec(n: u32) -> LatticeSpec {
    LatticeSpec::new(n).expect("rank >= 2")
}

// ------------------------------------------------------------- criterion 1

/// Generator golden tests.
pub fn criterion_1_generators() -> Vec<CheckOutcome> {
    let start = Instant::now();
    let mut out = Vec::new();

    let t21 = tau(&spec(2), 1, Orientation::Direct).unwrap();
    out.push(CheckOutcome::new(
        "1a",
        "tau_1 of sl2, direct, equals the printed closed form",
        t21.value() == &rf("(x1 + x2)(x2 + x3)/(x2 (x1 + x2 + x3))"),
        String::new(),
    ));

    let t31 = tau(&spec(3), 1, Orientation::Inverse).unwrap();
    out.push(CheckOutcome::new(
        "1b",
        "tau_1 of sl3, inverse, equals the printed closed form",
        t31.value()
            == &rf("x2 y2 (x3 y3 + x2 (y2 + y3) + x1 (y1 + y2 + y3)) /\
                   ((x2 y2 + x1 (y1 + y2)) (x3 y3 + x2 (y2 + y3)))"),
        String::new(),
    ));

    let t41 = tau(&spec(4), 1, Orientation::Direct).unwrap();
    let published = reference::sl4_elimination_integral();
    out.push(CheckOutcome::new(
        "1c",
        "tau_1 of sl4 matches the published elimination integral",
        published == t41.value().neg(),
        "documented variant: published form = -tau (t -> -t)".into(),
    ));

    let t51 = tau(&spec(5), 1, Orientation::Direct).unwrap();
    let n1 = "x1 y1 z1 k1 + x1 y1 z1 k2 + x1 y1 z2 k2 + x1 y2 z2 k2 + x2 y2 z2 k2";
    let n2 = "x2 y2 z2 k2 + x2 y2 z2 k3 + x2 y2 z3 k3 + x2 y3 z3 k3 + x3 y3 z3 k3";
    let n3 = "x1 y1 z1 k1 + x1 y1 z1 k2 + x1 y1 z1 k3 + x1 y1 z2 k2 + x1 y1 z2 k3 + x1 y1 z3 k3 \
              + x1 y2 z2 k2 + x1 y2 z2 k3 + x1 y2 z3 k3 + x1 y3 z3 k3 \
              + x2 y2 z2 k2 + x2 y2 z2 k3 + x2 y2 z3 k3 + x2 y3 z3 k3 + x3 y3 z3 k3";
    out.push(CheckOutcome::new(
        "1d",
        "tau_1 of sl5 matches the universal pattern (explicit enumeration)",
        t51.value() == &rf(&format!("({n1})({n2}) / (x2 y2 z2 k2 ({n3}))")),
        String::new(),
    ));

    let elapsed = start.elapsed();
    out.push(CheckOutcome::new(
        "1e",
        "generator golden tests finish within 10 s",
        elapsed.as_secs_f64() < 10.0,
        format!("{elapsed:.2?}"),
    ));
    out
}

// ------------------------------------------------------------- criterion 2

/// Annihilation suite: all D and H kill tau_k for one full shift period.
pub fn criterion_2_annihilation() -> Vec<CheckOutcome> {
    let start = Instant::now();
    let mut out = Vec::new();
    for n in 2..=5u32 {
        let sp = spec(n);
        let period = 3 * (n as u64 - 1);
        let mut failures = Vec::new();
        for k in 1..=period {
            let ops = annihilators_for(&sp, k).unwrap();
            for orientation in [Orientation::Direct, Orientation::Inverse] {
                if k > 1 && orientation == Orientation::Inverse {
                    continue; // reciprocal checked on the base generator
                }
                let t = tau(&sp, k, orientation).unwrap();
                for (i, op) in ops.iter().enumerate() {
                    if !op.apply(t.value()).is_zero() {
                        failures.push(format!("n={n} k={k} {orientation} op#{i}"));
                    }
                }
            }
        }
        out.push(CheckOutcome::new(
            &format!("2.{n}"),
            &format!("sl{n}: every D and H annihilates tau_k through one full period"),
            failures.is_empty(),
            if failures.is_empty() {
                format!("{} operators x {period} shifts", 2 * (n - 1))
            } else {
                failures.join(", ")
            },
        ));
    }
    let elapsed = start.elapsed();
    out.push(CheckOutcome::new(
        "2e",
        "annihilation suite finishes within 60 s",
        elapsed.as_secs_f64() < 60.0,
        format!("{elapsed:.2?}"),
    ));
    out
}

// ------------------------------------------------------------- criterion 3

fn expected_op(terms: &[(&str, &str)]) -> DiffOperator {
    DiffOperator::from_terms(terms.iter().map(|&(c, v)| {
        (
            rf(c).num().clone(),
            VarId::from_name(v).expect("valid name"),
        )
    }))
}

/// Every printed operator, term for term.
pub fn criterion_3_operator_goldens() -> Vec<CheckOutcome> {
    struct Golden {
        id: &'static str,
        label: &'static str,
        n: u32,
        family: u32,
        kind: char, // 'D' or 'H'
        terms: &'static [(&'static str, &'static str)],
    }
    const X_PART: [(&str, &str); 3] = [
        ("x1 (x1 + 2 x2 + 2 x3)", "x1"),
        ("x2 (x2 + 2 x3)", "x2"),
        ("x3^2", "x3"),
    ];
    let goldens = [
        Golden { id: "3a", label: "screening D_X of sl2", n: 2, family: 0, kind: 'D', terms: &X_PART },
        Golden { id: "3b", label: "weight H_X of sl2", n: 2, family: 0, kind: 'H',
                 terms: &[("x1", "x1"), ("x2", "x2"), ("x3", "x3")] },
        Golden { id: "3c", label: "screening D_X of sl3", n: 3, family: 0, kind: 'D',
                 terms: &[
                     ("x1 (x1 + 2 x2 + 2 x3)", "x1"), ("x2 (x2 + 2 x3)", "x2"), ("x3^2", "x3"),
                     ("-y1 (x2 + x3)", "y1"), ("-y2 x3", "y2"),
                 ] },
        Golden { id: "3d", label: "screening D_Y of sl3", n: 3, family: 1, kind: 'D',
                 terms: &[
                     ("y1 (y1 + 2 y2 + 2 y3)", "y1"), ("y2 (y2 + 2 y3)", "y2"), ("y3^2", "y3"),
                     ("-x1 (y1 + y2 + y3)", "x1"), ("-x2 (y2 + y3)", "x2"), ("-x3 y3", "x3"),
                 ] },
        Golden { id: "3e", label: "weight H_X of sl3", n: 3, family: 0, kind: 'H',
                 terms: &[
                     ("2 x1", "x1"), ("2 x2", "x2"), ("2 x3", "x3"),
                     ("-y1", "y1"), ("-y2", "y2"), ("-y3", "y3"),
                 ] },
        Golden { id: "3f", label: "weight H_Y of sl3", n: 3, family: 1, kind: 'H',
                 terms: &[
                     ("2 y1", "y1"), ("2 y2", "y2"), ("2 y3", "y3"),
                     ("-x1", "x1"), ("-x2", "x2"), ("-x3", "x3"),
                 ] },
        Golden { id: "3g", label: "screening D_X of sl4", n: 4, family: 0, kind: 'D',
                 terms: &[
                     ("x1 (x1 + 2 x2 + 2 x3)", "x1"), ("x2 (x2 + 2 x3)", "x2"), ("x3^2", "x3"),
                     ("-y1 (x2 + x3)", "y1"), ("-y2 x3", "y2"),
                 ] },
        Golden { id: "3h", label: "screening D_Y of sl4", n: 4, family: 1, kind: 'D',
                 terms: &[
                     ("y1 (y1 + 2 y2 + 2 y3)", "y1"), ("y2 (y2 + 2 y3)", "y2"), ("y3^2", "y3"),
                     ("-x1 (y1 + y2 + y3)", "x1"), ("-x2 (y2 + y3)", "x2"), ("-x3 y3", "x3"),
                     ("-z1 (y2 + y3)", "z1"), ("-z2 y3", "z2"),
                 ] },
        Golden { id: "3i", label: "screening D_Z of sl4", n: 4, family: 2, kind: 'D',
                 terms: &[
                     ("z1 (z1 + 2 z2 + 2 z3)", "z1"), ("z2 (z2 + 2 z3)", "z2"), ("z3^2", "z3"),
                     ("-y1 (z1 + z2 + z3)", "y1"), ("-y2 (z2 + z3)", "y2"), ("-y3 z3", "y3"),
                 ] },
        Golden { id: "3j", label: "weight H_X of sl4", n: 4, family: 0, kind: 'H',
                 terms: &[
                     ("2 x1", "x1"), ("2 x2", "x2"), ("2 x3", "x3"),
                     ("-y1", "y1"), ("-y2", "y2"), ("-y3", "y3"),
                 ] },
        Golden { id: "3k", label: "weight H_Y of sl4", n: 4, family: 1, kind: 'H',
                 terms: &[
                     ("2 y1", "y1"), ("2 y2", "y2"), ("2 y3", "y3"),
                     ("-x1", "x1"), ("-x2", "x2"), ("-x3", "x3"),
                     ("-z1", "z1"), ("-z2", "z2"), ("-z3", "z3"),
                 ] },
        Golden { id: "3l", label: "weight H_Z of sl4", n: 4, family: 2, kind: 'H',
                 terms: &[
                     ("2 z1", "z1"), ("2 z2", "z2"), ("2 z3", "z3"),
                     ("-y1", "y1"), ("-y2", "y2"), ("-y3", "y3"),
                 ] },
        Golden { id: "3m", label: "screening D_X of sl5", n: 5, family: 0, kind: 'D',
                 terms: &[
                     ("x1 (x1 + 2 x2 + 2 x3)", "x1"), ("x2 (x2 + 2 x3)", "x2"), ("x3^2", "x3"),
                     ("-y1 (x2 + x3)", "y1"), ("-y2 x3", "y2"),
                 ] },
        Golden { id: "3n", label: "screening D_Y of sl5", n: 5, family: 1, kind: 'D',
                 terms: &[
                     ("y1 (y1 + 2 y2 + 2 y3)", "y1"), ("y2 (y2 + 2 y3)", "y2"), ("y3^2", "y3"),
                     ("-x1 (y1 + y2 + y3)", "x1"), ("-x2 (y2 + y3)", "x2"), ("-x3 y3", "x3"),
                     ("-z1 (y2 + y3)", "z1"), ("-z2 y3", "z2"),
                 ] },
        Golden { id: "3o", label: "screening D_Z of sl5", n: 5, family: 2, kind: 'D',
                 terms: &[
                     ("z1 (z1 + 2 z2 + 2 z3)", "z1"), ("z2 (z2 + 2 z3)", "z2"), ("z3^2", "z3"),
                     ("-y1 (z1 + z2 + z3)", "y1"), ("-y2 (z2 + z3)", "y2"), ("-y3 z3", "y3"),
                     ("-k1 (z2 + z3)", "k1"), ("-k2 z3", "k2"),
                 ] },
        Golden { id: "3p", label: "screening D_K of sl5", n: 5, family: 3, kind: 'D',
                 terms: &[
                     ("k1 (k1 + 2 k2 + 2 k3)", "k1"), ("k2 (k2 + 2 k3)", "k2"), ("k3^2", "k3"),
                     ("-z1 (k1 + k2 + k3)", "z1"), ("-z2 (k2 + k3)", "z2"), ("-z3 k3", "z3"),
                 ] },
        Golden { id: "3q", label: "weight H_X of sl5", n: 5, family: 0, kind: 'H',
                 terms: &[
                     ("2 x1", "x1"), ("2 x2", "x2"), ("2 x3", "x3"),
                     ("-y1", "y1"), ("-y2", "y2"), ("-y3", "y3"),
                 ] },
        Golden { id: "3r", label: "weight H_Y of sl5", n: 5, family: 1, kind: 'H',
                 terms: &[
                     ("2 y1", "y1"), ("2 y2", "y2"), ("2 y3", "y3"),
                     ("-x1", "x1"), ("-x2", "x2"), ("-x3", "x3"),
                     ("-z1", "z1"), ("-z2", "z2"), ("-z3", "z3"),
                 ] },
        Golden { id: "3s", label: "weight H_Z of sl5", n: 5, family: 2, kind: 'H',
                 terms: &[
                     ("2 z1", "z1"), ("2 z2", "z2"), ("2 z3", "z3"),
                     ("-y1", "y1"), ("-y2", "y2"), ("-y3", "y3"),
                     ("-k1", "k1"), ("-k2", "k2"), ("-k3", "k3"),
                 ] },
        Golden { id: "3t", label: "weight H_K of sl5", n: 5, family: 3, kind: 'H',
                 terms: &[
                     ("2 k1", "k1"), ("2 k2", "k2"), ("2 k3", "k3"),
                     ("-z1", "z1"), ("-z2", "z2"), ("-z3", "z3"),
                 ] },
    ];
    goldens
        .iter()
        .map(|g| {
            let sp = spec(g.n);
            let built = match g.kind {
                'D' => screening_operator(&sp, g.family, DEFAULT_WINDOW),
                _ => weight_operator(&sp, g.family, DEFAULT_WINDOW),
            }
            .unwrap();
            let expected = expected_op(g.terms);
            CheckOutcome::new(g.id, g.label, built == expected, String::new())
        })
        .collect()
}

// ------------------------------------------------------------- criterion 4

/// Compare a computed value against a reference, allowing one global sign.
/// Returns (passed, sign description).
fn match_up_to_sign(got: &RatFunc, want: &RatFunc) -> (bool, &'static str) {
    if got == want {
        (true, "+1")
    } else if got == &want.neg() {
        (true, "-1")
    } else {
        (false, "no match")
    }
}

/// Bracket values against the printed forms, plus locality zeros.
pub fn criterion_4_bracket_values() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let sp2 = spec(2);
    let taus2 = tau_family(&sp2, Orientation::Inverse, 5).unwrap();
    let f2 = poisson_bracket(&sp2, taus2[0].value(), taus2[1].value());
    let (ok, sign) = match_up_to_sign(&f2, &reference::sl2_f2());
    out.push(CheckOutcome::new(
        "4a",
        "{tau_1, tau_2} of sl2 equals the printed value",
        ok,
        format!("global sign constant {sign}"),
    ));
    let f3 = poisson_bracket(&sp2, taus2[0].value(), taus2[2].value());
    let (ok, sign) = match_up_to_sign(&f3, &reference::sl2_f3());
    out.push(CheckOutcome::new(
        "4b",
        "{tau_1, tau_3} of sl2 equals the printed value",
        ok,
        format!("global sign constant {sign}"),
    ));
    let zeros2 = [4u64, 5]
        .iter()
        .all(|&j| poisson_bracket(&sp2, taus2[0].value(), taus2[j as usize - 1].value()).is_zero());
    out.push(CheckOutcome::new(
        "4c",
        "sl2 locality: {tau_1, tau_j} = 0 for j - 1 >= 3",
        zeros2,
        "j = 4, 5".into(),
    ));
    let sp3 = spec(3);
    let taus3 = tau_family(&sp3, Orientation::Inverse, 8).unwrap();
    let zeros3 = [7u64, 8]
        .iter()
        .all(|&j| poisson_bracket(&sp3, taus3[0].value(), taus3[j as usize - 1].value()).is_zero());
    out.push(CheckOutcome::new(
        "4d",
        "sl3 locality: {tau_1, tau_j} = 0 for j - 1 >= 6",
        zeros3,
        "j = 7, 8".into(),
    ));
    out
}

// ------------------------------------------------------------- criterion 5

fn coeffs_match(result: &DecompResult, expected: &[(Vec<i64>, i64)]) -> bool {
    if result.coeffs().len() != expected.len() {
        return false;
    }
    expected
        .iter()
        .all(|(e, c)| result.coeff(e) == scalar_from_i64(*c))
}

fn cert_label(r: &DecompResult) -> String {
    r.verification().label()
}

/// Decomposition reproduction: sl2 table, sl3 table, and both worked
/// problems with their printed inputs.
pub fn criterion_5_decompositions() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let cfg = DecompConfig::default();

    // (a) sl2
    let sp2 = spec(2);
    let taus2 = tau_family(&sp2, Orientation::Inverse, 3).unwrap();
    let gens2: Vec<RatFunc> = taus2.iter().map(|t| t.value().clone()).collect();
    let f2 = poisson_bracket(&sp2, taus2[0].value(), taus2[1].value());
    let cfg2 = DecompConfig {
        orientation: Some(Orientation::Inverse),
        ..cfg.clone()
    };
    let r = solve_decomposition(
        &f2,
        &gens2[..2],
        &LaurentBasis::enumerate(2, 0, 3).unwrap(),
        &cfg2,
    )
    .unwrap();
    out.push(CheckOutcome::new(
        "5a1",
        "sl2 F_2 decomposes to the printed polynomial (basis [0,3]^2)",
        coeffs_match(&r, &reference::sl2_f2_coeffs())
            && matches!(r.verification(), VerifyCert::Symbolic),
        format!(
            "global constant {}, verified {}",
            reference::SL2_GLOBAL_CONSTANT,
            cert_label(&r)
        ),
    ));
    let f3 = poisson_bracket(&sp2, taus2[0].value(), taus2[2].value());
    let r = solve_decomposition(
        &f3,
        &gens2,
        &LaurentBasis::enumerate(3, 0, 3).unwrap(),
        &cfg2,
    )
    .unwrap();
    out.push(CheckOutcome::new(
        "5a2",
        "sl2 F_3 decomposes to the printed polynomial (basis [0,3]^3)",
        coeffs_match(&r, &reference::sl2_f3_coeffs()),
        format!(
            "global constant {}, verified {}",
            reference::SL2_GLOBAL_CONSTANT,
            cert_label(&r)
        ),
    ));

    // (b) sl3, j = 2..6
    let sp3 = spec(3);
    let taus3 = tau_family(&sp3, Orientation::Inverse, 6).unwrap();
    let gens3: Vec<RatFunc> = taus3.iter().map(|t| t.value().clone()).collect();
    for j in 2..=6usize {
        let fj = poisson_bracket(&sp3, taus3[0].value(), taus3[j - 1].value());
        let basis = LaurentBasis::enumerate(j, 0, 2).unwrap();
        let r = solve_decomposition(&fj, &gens3[..j], &basis, &cfg2).unwrap();
        out.push(CheckOutcome::new(
            &format!("5b{j}"),
            &format!("sl3 F_{j} decomposes to the printed polynomial times the global constant"),
            coeffs_match(&r, &reference::sl3_fj_coeffs(j)),
            format!(
                "global constant {}, verified {}",
                reference::SL3_GLOBAL_CONSTANT,
                cert_label(&r)
            ),
        ));
    }

    // (c) worked problems with printed inputs
    let t0 = Instant::now();
    let cfg_sym = DecompConfig {
        verify: VerifyMode::Symbolic,
        ..cfg.clone()
    };
    let r = solve_decomposition(
        &reference::worked_f2(),
        &reference::worked_f2_gens(),
        &LaurentBasis::enumerate(2, 0, 3).unwrap(),
        &cfg_sym,
    )
    .unwrap();
    let f2_time = t0.elapsed();
    out.push(CheckOutcome::new(
        "5c1",
        "worked decomposition f2 reproduces -2(-1+t1)t1(-1+t2)t2, symbolic",
        coeffs_match(&r, &reference::worked_f2_coeffs())
            && matches!(r.verification(), VerifyCert::Symbolic)
            && f2_time.as_secs_f64() < 5.0,
        format!("{f2_time:.2?}"),
    ));

    let t0 = Instant::now();
    let cfg_sampled = DecompConfig {
        verify: VerifyMode::Sampled(50),
        ..cfg
    };
    let r = solve_decomposition(
        &reference::worked_f6(),
        &reference::worked_f6_gens(),
        &LaurentBasis::enumerate(6, -1, 1).unwrap(),
        &cfg_sampled,
    )
    .unwrap();
    let f6_time = t0.elapsed();
    out.push(CheckOutcome::new(
        "5c2",
        "worked decomposition f6 reproduces the Laurent form over 729 tuples, sampled(50)",
        coeffs_match(&r, &reference::worked_f6_coeffs())
            && matches!(r.verification(), VerifyCert::Sampled { count: 50, .. })
            && f6_time.as_secs_f64() < 300.0,
        format!("{f6_time:.2?}"),
    ));
    out
}

// ------------------------------------------------------------- criterion 6

/// Substitution symmetries of the published bracket data.
pub fn criterion_6_symmetries() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let sl3_map = reference::sl3_reversal();
    out.push(CheckOutcome::new(
        "6a",
        "the sl3 bracket datum F_6 is invariant under the reversal",
        check_symmetry(&reference::sym_sl3_f6(), &sl3_map).unwrap(),
        String::new(),
    ));
    let sp3 = spec(3);
    let dir3 = tau_family(&sp3, Orientation::Direct, 6).unwrap();
    for (a, b) in reference::SL3_PAIRINGS {
        let lhs = dir3[a - 1].value();
        let rhs = dir3[b - 1].value().substitute(&sl3_map).unwrap();
        out.push(CheckOutcome::new(
            &format!("6b{a}{b}"),
            &format!("sl3 reversal maps generator {b} to generator {a}"),
            lhs == &rhs,
            String::new(),
        ));
    }
    let sl4_map = reference::sl4_swap_reversal();
    out.push(CheckOutcome::new(
        "6c",
        "the sl4 bracket datum F_9 is invariant under the swap-reversal",
        check_symmetry(&reference::sym_sl4_f9(), &sl4_map).unwrap(),
        String::new(),
    ));
    let gens4 = reference::sym_sl4_gens();
    for (a, b) in reference::SL4_PAIRINGS {
        let lhs = &gens4[a - 1];
        let rhs = gens4[b - 1].substitute(&sl4_map).unwrap();
        out.push(CheckOutcome::new(
            &format!("6d{a}{b}"),
            &format!("sl4 swap-reversal maps generator {b} to generator {a}"),
            lhs == &rhs,
            String::new(),
        ));
    }
    out
}

// ------------------------------------------------------------- criterion 7

/// Commutator suite.
pub fn criterion_7_commutators() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut rng = SplitMix::new(0xc0371);
    let mut jacobi_ok = true;
    for _ in 0..20 {
        let a = rand_operator(&mut rng);
        let b = rand_operator(&mut rng);
        let c = rand_operator(&mut rng);
        let j = a
            .commutator(&b)
            .commutator(&c)
            .add(&b.commutator(&c).commutator(&a))
            .add(&c.commutator(&a).commutator(&b));
        if !j.is_zero() {
            jacobi_ok = false;
            break;
        }
    }
    out.push(CheckOutcome::new(
        "7a",
        "operator commutator satisfies the Jacobi identity (20 random cases)",
        jacobi_ok,
        String::new(),
    ));
    let sp3 = spec(3);
    let dx = screening_operator(&sp3, 0, DEFAULT_WINDOW).unwrap();
    let dy = screening_operator(&sp3, 1, DEFAULT_WINDOW).unwrap();
    let comm = dx.commutator(&dy);
    let mut closure_ok = !comm.is_zero();
    for orientation in [Orientation::Direct, Orientation::Inverse] {
        let t = tau(&sp3, 1, orientation).unwrap();
        closure_ok &= comm.apply(t.value()).is_zero();
    }
    out.push(CheckOutcome::new(
        "7b",
        "[D_X, D_Y] of sl3 is a new operator yet annihilates tau_1 exactly",
        closure_ok,
        String::new(),
    ));
    let sp2 = spec(2);
    let d = screening_operator(&sp2, 0, DEFAULT_WINDOW).unwrap();
    let h = weight_operator(&sp2, 0, DEFAULT_WINDOW).unwrap();
    out.push(CheckOutcome::new(
        "7c",
        "[H, D] = D for sl2 (D is homogeneous of degree one)",
        h.commutator(&d) == d,
        String::new(),
    ));
    out
}

// ------------------------------------------------------------- criterion 8

/// Randomized exact property suites.
pub fn criterion_8_properties() -> Vec<CheckOutcome> {
    let start = Instant::now();
    let mut out = Vec::new();
    let sp = spec(3);
    let mut rng = SplitMix::new(0x8f8f8f);

    let mut antisym = true;
    let mut bilinear = true;
    let mut leibniz = true;
    for _ in 0..100 {
        let f = rand_ratfunc(&mut rng);
        let g = rand_ratfunc(&mut rng);
        let h = rand_ratfunc(&mut rng);
        let fg = poisson_bracket(&sp, &f, &g);
        antisym &= fg == poisson_bracket(&sp, &g, &f).neg();
        bilinear &= poisson_bracket(&sp, &f.add(&g), &h)
            == poisson_bracket(&sp, &f, &h).add(&poisson_bracket(&sp, &g, &h));
        leibniz &= poisson_bracket(&sp, &f.mul(&g), &h)
            == poisson_bracket(&sp, &f, &h)
                .mul(&g)
                .add(&f.mul(&poisson_bracket(&sp, &g, &h)));
    }
    out.push(CheckOutcome::new(
        "8a",
        "bracket antisymmetry and bilinearity (100 random cases)",
        antisym && bilinear,
        String::new(),
    ));
    out.push(CheckOutcome::new(
        "8b",
        "bracket Leibniz rule (100 random cases)",
        leibniz,
        String::new(),
    ));

    let mut jacobi = true;
    for _ in 0..20 {
        let f = rand_small_ratfunc(&mut rng);
        let g = rand_small_ratfunc(&mut rng);
        let h = rand_small_ratfunc(&mut rng);
        let j = poisson_bracket(&sp, &f, &poisson_bracket(&sp, &g, &h))
            .add(&poisson_bracket(&sp, &g, &poisson_bracket(&sp, &h, &f)))
            .add(&poisson_bracket(&sp, &h, &poisson_bracket(&sp, &f, &g)));
        jacobi &= j.is_zero();
    }
    out.push(CheckOutcome::new(
        "8c",
        "bracket Jacobi identity (20 random cases)",
        jacobi,
        String::new(),
    ));

    let mut deriv_leibniz = true;
    for _ in 0..100 {
        let f = rand_ratfunc(&mut rng);
        let g = rand_ratfunc(&mut rng);
        let v = VarId::new((rng.next() % 2) as u32, 1 + (rng.next() % 2) as u32);
        let lhs = f.mul(&g).derivative(v);
        let rhs = f.derivative(v).mul(&g).add(&f.mul(&g.derivative(v)));
        deriv_leibniz &= lhs == rhs;
    }
    out.push(CheckOutcome::new(
        "8d",
        "derivative Leibniz rule (100 random cases)",
        deriv_leibniz,
        String::new(),
    ));

    let mut canonical = true;
    let mut gcd_contract = true;
    for _ in 0..100 {
        let p = rand_poly(&mut rng, 4);
        let q = loop {
            let q = rand_poly(&mut rng, 4);
            if !q.is_zero() {
                break q;
            }
        };
        canonical &= RatFunc::new(&p * &q, q.clone()).unwrap() == RatFunc::from_poly(p.clone());
        if !p.is_zero() {
            let g = poly_gcd(&(&p * &q), &q).unwrap();
            let qa = (&p * &q).try_div_exact(&g);
            let qb = q.try_div_exact(&g);
            gcd_contract &= match (qa, qb) {
                (Some(a), Some(b)) => poly_gcd(&a, &b).unwrap() == MultiPoly::one(),
                _ => false,
            };
        }
    }
    out.push(CheckOutcome::new(
        "8e",
        "normalization cancels exactly: (p q)/q = p (100 random cases)",
        canonical,
        String::new(),
    ));
    out.push(CheckOutcome::new(
        "8f",
        "gcd contract: cofactors are coprime after division (100 random cases)",
        gcd_contract,
        String::new(),
    ));

    let mut eval_hom = true;
    for _ in 0..100 {
        let f = rand_ratfunc(&mut rng);
        let g = rand_ratfunc(&mut rng);
        let mut point = BTreeMap::new();
        let mut vars = f.vars();
        vars.extend(g.vars());
        for v in vars {
            point.insert(v, scalar_from_i64(1 + (rng.next() % 13) as i64));
        }
        match (f.eval(&point), g.eval(&point), f.mul(&g).eval(&point)) {
            (Ok(a), Ok(b), Ok(ab)) => eval_hom &= a * b == ab,
            _ => {} // pole-free requirement not met; skip
        }
    }
    out.push(CheckOutcome::new(
        "8g",
        "evaluation is a homomorphism on pole-free points (100 random cases)",
        eval_hom,
        String::new(),
    ));

    // decomposition round-trip on random Laurent polynomials
    let sp2 = spec(2);
    let taus = tau_family(&sp2, Orientation::Inverse, 3).unwrap();
    let gens: Vec<RatFunc> = taus.iter().map(|t| t.value().clone()).collect();
    let mut roundtrip = true;
    for case in 0..5 {
        let m = 2 + (case % 2) as usize;
        let mut truth: BTreeMap<Vec<i64>, Scalar> = BTreeMap::new();
        for _ in 0..4 {
            let tuple: Vec<i64> = (0..m).map(|_| (rng.next() % 4) as i64 - 1).collect();
            let c = scalar_from_i64((rng.next() % 9) as i64 - 4);
            if !c.is_zero() {
                truth.insert(tuple, c);
            }
        }
        let mut f = RatFunc::zero();
        for (tuple, c) in &truth {
            let mut term = RatFunc::constant(c.clone());
            for (i, &e) in tuple.iter().enumerate() {
                term = term.mul(&gens[i].pow(e).unwrap());
            }
            f = f.add(&term);
        }
        let basis = LaurentBasis::enumerate(m, -1, 2).unwrap();
        let cfg = DecompConfig {
            seed: 7000 + case,
            ..DecompConfig::default()
        };
        let r = solve_decomposition(&f, &gens[..m], &basis, &cfg).unwrap();
        roundtrip &= r.coeffs() == &truth;
    }
    out.push(CheckOutcome::new(
        "8h",
        "decomposition round-trip recovers random Laurent polynomials exactly",
        roundtrip,
        "5 cases, exponents in [-1, 2]".into(),
    ));

    // determinism under a fixed seed
    let f2 = poisson_bracket(&sp2, taus[0].value(), taus[1].value());
    let basis = LaurentBasis::enumerate(2, 0, 3).unwrap();
    let cfg = DecompConfig::default();
    let r1 = solve_decomposition(&f2, &gens[..2], &basis, &cfg).unwrap();
    let r2 = solve_decomposition(&f2, &gens[..2], &basis, &cfg).unwrap();
    let bytes1 = serde_json::to_string(&r1.to_json()).unwrap();
    let bytes2 = serde_json::to_string(&r2.to_json()).unwrap();
    out.push(CheckOutcome::new(
        "8i",
        "identical config and seed give bit-identical results",
        r1 == r2 && bytes1 == bytes2,
        String::new(),
    ));

    let elapsed = start.elapsed();
    out.push(CheckOutcome::new(
        "8j",
        "property suites finish within 3 minutes",
        elapsed.as_secs_f64() < 180.0,
        format!("{elapsed:.2?}"),
    ));
    out
}

/// Run every criterion and collect the report.
pub fn run_full_suite() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    out.extend(criterion_1_generators());
    out.extend(criterion_2_annihilation());
    out.extend(criterion_3_operator_goldens());
    out.extend(criterion_4_bracket_values());
    out.extend(criterion_5_decompositions());
    out.extend(criterion_6_symmetries());
    out.extend(criterion_7_commutators());
    out.extend(criterion_8_properties());
    out
}

// ------------------------------------------------------- random generators

/// Small random polynomials: up to `nvars` of x1, y1, x2, y2, degree at most
/// one per variable, one or two terms. Bracket identities square and cube
/// these sizes, so lean inputs keep the 100-case suites quick while still
/// exercising every code path exactly.
fn rand_poly(rng: &mut SplitMix, nvars: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    let terms = 1 + (rng.next() % 2) as usize;
    for _ in 0..terms {
        let mut pairs = Vec::new();
        for i in 0..nvars {
            if rng.next() % 3 == 0 {
                pairs.push((VarId::new(i % 2, i / 2 + 1), 1));
            }
        }
        out = &out
            + &MultiPoly::from_term(
                Monomial::from_pairs(&pairs),
                scalar_from_i64((rng.next() % 9) as i64 - 4),
            );
    }
    out
}

fn rand_ratfunc(rng: &mut SplitMix) -> RatFunc {
    let num = rand_poly(rng, 4);
    loop {
        let den = if rng.next() % 2 == 0 {
            MultiPoly::from_term(
                Monomial::from_pairs(&[
                    (VarId::new(0, 1), (rng.next() % 2) as u32),
                    (VarId::new(1, 1), (rng.next() % 2) as u32),
                ]),
                scalar_from_i64(1),
            )
        } else {
            rand_poly(rng, 2)
        };
        if !den.is_zero() {
            return RatFunc::new(num, den).unwrap();
        }
    }
}

fn rand_small_ratfunc(rng: &mut SplitMix) -> RatFunc {
    let num = rand_poly(rng, 3);
    let e = (rng.next() % 2) as u32;
    let den = MultiPoly::from_term(
        Monomial::from_pairs(&[(VarId::new(0, 1), e)]),
        scalar_from_i64(1),
    );
    RatFunc::new(num, den).unwrap()
}

fn rand_operator(rng: &mut SplitMix) -> DiffOperator {
    let mut op = DiffOperator::zero();
    for _ in 0..2 {
        let target = VarId::new((rng.next() % 2) as u32, 1 + (rng.next() % 2) as u32);
        op.add_term(rand_poly(rng, 4), target);
    }
    op
}
