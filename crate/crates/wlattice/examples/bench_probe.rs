use std::time::Instant;
use wlattice::decompose::{solve_decomposition, DecompConfig, LaurentBasis, VerifyMode};
use wlattice::generators::{tau_family, Orientation};
use wlattice::lattice::LatticeSpec;
use wlattice::{bracket, reference};

fn main() {
    let spec = LatticeSpec::new(3).unwrap();
    let taus = tau_family(&spec, Orientation::Inverse, 7).unwrap();

    for j in 2..=7u64 {
        let t = Instant::now();
        let f = bracket::poisson_bracket(&spec, taus[0].value(), taus[(j - 1) as usize].value());
        eprintln!(
            "F_{j}^(3): {:?}  (zero={}, num terms={}, den terms={})",
            t.elapsed(),
            f.is_zero(),
            f.num().num_terms(),
            f.den().num_terms()
        );
    }

    let t = Instant::now();
    let basis = LaurentBasis::enumerate(2, 0, 3).unwrap();
    let r = solve_decomposition(
        &reference::worked_f2(),
        &reference::worked_f2_gens(),
        &basis,
        &DecompConfig::default(),
    )
    .unwrap();
    eprintln!("worked f2 decomposition: {:?} -> {}", t.elapsed(), r);

    let t = Instant::now();
    let basis = LaurentBasis::enumerate(6, -1, 1).unwrap();
    let cfg = DecompConfig {
        verify: VerifyMode::Sampled(50),
        ..DecompConfig::default()
    };
    let r = solve_decomposition(
        &reference::worked_f6(),
        &reference::worked_f6_gens(),
        &basis,
        &cfg,
    )
    .unwrap();
    eprintln!("worked f6 decomposition: {:?} -> {}", t.elapsed(), r);

    let t = Instant::now();
    let f6 = bracket::poisson_bracket(&spec, taus[0].value(), taus[5].value());
    let gens: Vec<_> = taus[..6].iter().map(|t| t.value().clone()).collect();
    let basis = LaurentBasis::enumerate(6, 0, 2).unwrap();
    let r = solve_decomposition(&f6, &gens, &basis, &cfg).unwrap();
    eprintln!("engine F_6^(3) decomposition: {:?} -> {}", t.elapsed(), r);

    // symbolic verification cost for the 16-column worked problem
    let t = Instant::now();
    let basis = LaurentBasis::enumerate(2, 0, 3).unwrap();
    let cfg = DecompConfig {
        verify: VerifyMode::Symbolic,
        ..DecompConfig::default()
    };
    let r = solve_decomposition(
        &reference::worked_f2(),
        &reference::worked_f2_gens(),
        &basis,
        &cfg,
    )
    .unwrap();
    eprintln!(
        "worked f2, symbolic verify: {:?} ({} coeffs)",
        t.elapsed(),
        r.coeffs().len()
    );
}
