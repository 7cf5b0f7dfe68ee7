//! Acceptance gate. One test per criterion; each writes a single
//! `criterion N ...: PASS|FAIL` line to stderr (uncaptured) and then asserts.

mod common;

use std::f64::consts::PI;
use std::io::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use densitycheck::dims::{
    check_density_requirement_a, field_dims, infer_field_dimension, Dim, TermSpec,
};
use densitycheck::experiment::{
    external_potential, inner_product, normalize_kg_state, run_orthogonality_experiment,
    ExperimentConfig, ExternalCharge, KgState,
};
use densitycheck::fieldops::{
    dirac_current, dirac_hamiltonian_apply, dirac_time_residual, kg_current, kg_density_at,
    kg_hamiltonian_density_at, DiracFieldConfig, KgPlaneWave, ScalarFieldConfig, Spinor,
    SpinorPlaneWave,
};
use densitycheck::numerics::{
    divergence_residual, integrate_ball, observed_order, solve_well_mode, spherical_harmonic,
    BallGrid, Lattice, Resolution,
};
use densitycheck::symexpr::library::{
    dirac_density, dirac_lagrangian, kg_density, kg_hamiltonian_density, kg_lagrangian,
};
use densitycheck::symexpr::{
    classify_time_symmetry, euler_lagrange, legendre_transform, substitute_real, Polynomial,
    Symbol, TermSymmetry,
};
use densitycheck::tolerances::{
    CONTINUITY_CONSTANT_ABS, EIGEN_SHIFT_ABS, GRAM_ABS, LINEARITY_REL, MIN_OBSERVED_ORDER,
    ORACLE_REL, ORTHOGONALITY_ABS, SIGNIFICANCE_FACTOR, VOLUME_REL, WELL_ZERO_ABS,
};

fn verdict(n: u32, name: &str, failures: &[String]) {
    let line = if failures.is_empty() {
        format!("criterion {n} {name}: PASS")
    } else {
        format!("criterion {n} {name}: FAIL ({})", failures.join("; "))
    };
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(failures.is_empty(), "{line}");
}

fn require(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn golden(name: &str) -> Polynomial {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap().parse().unwrap()
}

#[test]
fn criterion_1_dimensions() {
    let mut f = Vec::new();
    let dirac = infer_field_dimension(Dim::integer(-1), true).unwrap();
    let scalar = infer_field_dimension(Dim::integer(-2), true).unwrap();
    require(
        &mut f,
        dirac == Dim::new(-3, 2),
        format!("spinor dimension {dirac}"),
    );
    require(
        &mut f,
        scalar == Dim::integer(-1),
        format!("scalar dimension {scalar}"),
    );

    let spinors = field_dims(&[("psi", dirac), ("psibar", dirac)]);
    let scalars = field_dims(&[("phi", scalar), ("phi*", scalar), ("V", Dim::integer(-1))]);
    let psi_dagger_psi = TermSpec::new(&[("psibar", 1), ("psi", 1)], 0, Dim::DIMENSIONLESS);
    require(
        &mut f,
        check_density_requirement_a(&psi_dagger_psi, &spinors).unwrap(),
        "psi^dagger psi",
    );
    // Both pieces of the scalar density: the time-derivative bilinear and the eV term.
    let kinetic = TermSpec::new(&[("phi*", 1), ("phi", 1)], 1, Dim::DIMENSIONLESS);
    let coupled = TermSpec::new(&[("V", 1), ("phi*", 1), ("phi", 1)], 0, Dim::DIMENSIONLESS);
    require(
        &mut f,
        check_density_requirement_a(&kinetic, &scalars).unwrap(),
        "scalar density, derivative term",
    );
    require(
        &mut f,
        check_density_requirement_a(&coupled, &scalars).unwrap(),
        "scalar density, potential term",
    );
    let bare = TermSpec::new(&[("phi*", 1), ("phi", 1)], 0, Dim::DIMENSIONLESS);
    require(
        &mut f,
        !check_density_requirement_a(&bare, &scalars).unwrap(),
        "phi* phi must fail",
    );
    verdict(1, "dimension suite", &f);
}

#[test]
fn criterion_2_symbolic() {
    let mut f = Vec::new();
    let el_dirac = euler_lagrange(&dirac_lagrangian(), Symbol::PsiBar).unwrap();
    require(
        &mut f,
        el_dirac == golden("dirac_field_equation.txt"),
        "spinor field equation differs from golden",
    );
    let el_kg = euler_lagrange(&kg_lagrangian(), Symbol::PhiStar).unwrap();
    require(
        &mut f,
        el_kg == golden("kg_field_equation.txt"),
        "scalar field equation differs from golden",
    );

    let h_kg = legendre_transform(&kg_lagrangian(), &[Symbol::Phi, Symbol::PhiStar]).unwrap();
    let stated = kg_hamiltonian_density();
    if h_kg != stated {
        let extra = h_kg.sub(&stated);
        let terms: Vec<String> = extra.to_string().lines().map(str::to_string).collect();
        f.push(format!(
            "scalar Legendre transform != squared-moduli Hamiltonian density, difference {}",
            terms.join(" + ")
        ));
    }
    let h_dirac = legendre_transform(&dirac_lagrangian(), &[Symbol::Psi, Symbol::PsiBar]).unwrap();
    require(
        &mut f,
        !h_dirac.contains_time_derivative(),
        "spinor Legendre transform keeps a time derivative",
    );
    verdict(2, "symbolic suite", &f);
}

#[test]
fn criterion_3_symmetry() {
    let mut f = Vec::new();
    let pair = (Symbol::Phi, Symbol::PhiStar);
    let h = classify_time_symmetry(&kg_hamiltonian_density(), pair);
    let rho = classify_time_symmetry(&kg_density(), pair);
    let dirac = classify_time_symmetry(&dirac_density(), (Symbol::Psi, Symbol::PsiBar));
    require(
        &mut f,
        h == TermSymmetry::Symmetric,
        format!("scalar energy density: {h:?}"),
    );
    require(
        &mut f,
        rho == TermSymmetry::Antisymmetric,
        format!("scalar density: {rho:?}"),
    );
    require(
        &mut f,
        dirac == TermSymmetry::NoTimeDerivative,
        format!("spinor density: {dirac:?}"),
    );
    let real = substitute_real(&kg_density(), true);
    require(
        &mut f,
        real.is_zero(),
        format!("real scalar density has {} terms", real.len()),
    );
    verdict(3, "symmetry classification", &f);
}

fn kg_superposition(h: f64) -> f64 {
    let w1 = KgPlaneWave::new(Complex64::new(0.8, 0.1), [0.9, -0.4, 0.3], 1.0, -1).unwrap();
    let w2 = KgPlaneWave::new(Complex64::new(-0.3, 0.5), [-0.5, 1.2, 0.7], 1.0, -1).unwrap();
    let n = (0.8 / h).round() as usize + 1;
    let lat = Lattice::new([0.0; 4], [0.5 * h, h, h, h], [5, n, n, n]);
    let cfg = ScalarFieldConfig::from_fn(lat, |x| {
        let (g1, g2) = (w1.gradient(x), w2.gradient(x));
        (
            w1.value(x) + w2.value(x),
            w1.time_derivative(x) + w2.time_derivative(x),
            std::array::from_fn(|k| g1[k] + g2[k]),
        )
    });
    divergence_residual(&kg_current(&cfg, 0.0)).unwrap()
}

fn dirac_superposition(h: f64) -> f64 {
    let w1 = SpinorPlaneWave::new([0.7, 0.2, -0.5], 1.0, 1).unwrap();
    let w2 = SpinorPlaneWave::new([-0.4, 0.9, 0.6], 1.0, 2).unwrap();
    let n = (0.8 / h).round() as usize + 1;
    let lat = Lattice::new([0.0; 4], [0.5 * h, h, h, h], [5, n, n, n]);
    let cfg = DiracFieldConfig::from_fn(lat, |x| w1.value(x) + w2.value(x));
    divergence_residual(&dirac_current(&cfg)).unwrap()
}

#[test]
fn criterion_4_continuity() {
    let mut f = Vec::new();
    let lat = Lattice::new([0.0; 4], [0.1; 4], [3, 4, 4, 4]);
    let spinor = SpinorPlaneWave::new([0.4, -1.1, 0.7], 0.9, 2).unwrap();
    let r = divergence_residual(&dirac_current(&DiracFieldConfig::from_fn(lat, |x| {
        spinor.value(x)
    })))
    .unwrap();
    require(
        &mut f,
        r <= CONTINUITY_CONSTANT_ABS,
        format!("spinor plane wave residual {r:e}"),
    );
    let scalar = KgPlaneWave::new(Complex64::new(0.6, -0.3), [0.5, 0.1, -0.4], 0.8, -1).unwrap();
    let cfg = ScalarFieldConfig::from_fn(lat, |x| {
        (
            scalar.value(x),
            scalar.time_derivative(x),
            scalar.gradient(x),
        )
    });
    let r = divergence_residual(&kg_current(&cfg, 1.0)).unwrap();
    require(
        &mut f,
        r <= CONTINUITY_CONSTANT_ABS,
        format!("scalar plane wave residual {r:e}"),
    );

    for (name, run) in [
        ("scalar", kg_superposition as fn(f64) -> f64),
        ("spinor", dirac_superposition),
    ] {
        let (coarse, fine) = (run(0.2), run(0.1));
        let order = observed_order(coarse, fine);
        require(
            &mut f,
            order >= MIN_OBSERVED_ORDER,
            format!("{name} superposition order {order:.3}"),
        );
    }
    verdict(4, "continuity", &f);
}

fn hamiltonian_residual(h: f64) -> (f64, f64) {
    let w = SpinorPlaneWave::new([0.7, -0.4, 1.1], 1.0, 1).unwrap();
    let lat = Lattice::spatial(0.2, [0.1, -0.3, 0.5], h, 5);
    let cfg = DiracFieldConfig::from_fn(lat, |x| w.value(x));
    let psi_t: Vec<Spinor> = lat
        .points()
        .map(|x| w.value(x) * Complex64::new(0.0, -w.energy))
        .collect();
    let residual = dirac_time_residual(&cfg, &psi_t, 1.0, 0.0).unwrap();
    // |sin(ph)/h − p| ≤ |p|³h²/6 per axis, and each α^k is unitary.
    let c = w.momentum.iter().map(|p| p.abs().powi(3)).sum::<f64>() * w.amplitude.norm() / 6.0;
    (residual, c)
}

#[test]
fn criterion_5_dirac_consistency() {
    let mut f = Vec::new();
    let (h1, h2) = (0.1, 0.05);
    let ((r1, c), (r2, _)) = (hamiltonian_residual(h1), hamiltonian_residual(h2));
    require(
        &mut f,
        r1 <= c * h1 * h1 && r2 <= c * h2 * h2,
        format!("residuals {r1:e}, {r2:e} above C h^2 with C = {c:e}"),
    );
    let order = observed_order(r1, r2);
    require(
        &mut f,
        order >= MIN_OBSERVED_ORDER,
        format!("order {order:.3}"),
    );

    let (e, v) = (0.7, 0.35);
    let w = SpinorPlaneWave::new([0.3, -0.2, 0.5], 1.2, 2).unwrap();
    let lat = Lattice::spatial(0.0, [0.0; 3], 0.05, 3);
    let bare = DiracFieldConfig::from_fn(lat, |x| w.value(x));
    let dressed = bare.clone().with_potential(|_| [v, 0.0, 0.0, 0.0]);
    let h0 = dirac_hamiltonian_apply(&bare, 1.2, e).unwrap();
    let hv = dirac_hamiltonian_apply(&dressed, 1.2, e).unwrap();
    for ((idx, a), (_, b)) in h0.iter().zip(&hv) {
        let psi = bare.psi[lat.index(*idx)];
        let shift = (psi.adjoint() * (b - a))[(0, 0)] / psi.norm_squared();
        require(
            &mut f,
            (shift - Complex64::new(e * v, 0.0)).norm() <= EIGEN_SHIFT_ABS,
            format!("shift {shift}"),
        );
    }
    verdict(5, "Dirac consistency", &f);
}

#[test]
fn criterion_6_positive_definiteness() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut c = || Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
    let lat = Lattice::new([0.0; 4], [1.0; 4], [1, 100, 10, 10]);
    let spinors: Vec<Spinor> = (0..lat.len())
        .map(|_| Spinor::new(c(), c(), c(), c()))
        .collect();
    let cfg = DiracFieldConfig {
        lattice: lat,
        potential: vec![[0.0; 4]; spinors.len()],
        psi: spinors,
    };
    let negative = dirac_current(&cfg).rho.iter().filter(|&&r| r < 0.0).count();
    require(
        &mut f,
        negative == 0,
        format!("{negative} negative spinor densities out of {}", lat.len()),
    );

    let (mut pos, mut neg, mut bad_energy) = (0, 0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
    for _ in 0..10_000 {
        let mut c = || Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let (phi, dt, grad) = (c(), c(), [c(), c(), c()]);
        let v = rng.random_range(-1.0..1.0);
        let a = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let e = rng.random_range(-1.0..1.0);
        let rho = kg_density_at(phi, dt, v, e);
        if rho > 0.0 {
            pos += 1;
        } else if rho < 0.0 {
            neg += 1;
        }
        if kg_hamiltonian_density_at(phi, dt, grad, v, a, e, 1.0) < 0.0 {
            bad_energy += 1;
        }
    }
    require(
        &mut f,
        pos >= 1 && neg >= 1,
        format!("scalar density signs: {pos} positive, {neg} negative"),
    );
    require(
        &mut f,
        bad_energy == 0,
        format!("{bad_energy} negative scalar energy densities"),
    );
    verdict(6, "positive definiteness", &f);
}

#[test]
fn criterion_7_orthogonality_experiment() {
    let mut f = Vec::new();
    let report = run_orthogonality_experiment(&ExperimentConfig::default()).unwrap();
    let i01 = report.i01.value.norm();
    require(&mut f, i01 <= ORTHOGONALITY_ABS, format!("|I01| = {i01:e}"));

    let at = |d: f64| {
        report
            .interaction
            .iter()
            .find(|p| p.d == d)
            .unwrap()
            .normalized
    };
    let u2 = at(2.0);
    require(
        &mut f,
        u2.value.norm() > SIGNIFICANCE_FACTOR * u2.error,
        format!("|U(2)| = {:e}, error {:e}", u2.value.norm(), u2.error),
    );
    let oracle = common::simpson_u(1.0, 1.0, 2.0, 1.0);
    let rel = ((u2.value.re - oracle) / oracle)
        .abs()
        .max(u2.value.im.abs() / oracle.abs());
    require(
        &mut f,
        rel <= ORACLE_REL,
        format!("U(2) vs brute-force reference: relative {rel:e}"),
    );
    let sweep = [at(1.5).value.norm(), u2.value.norm(), at(4.0).value.norm()];
    require(
        &mut f,
        sweep[0] > sweep[1] && sweep[1] > sweep[2],
        format!("|U| over d = 1.5, 2, 4: {sweep:?}"),
    );

    let grid = BallGrid::new(1.0, Resolution::default()).unwrap();
    let a = normalize_kg_state(&KgState::lowest(0, 1.0, 1.0, 1).unwrap(), &grid).unwrap();
    let b = normalize_kg_state(&KgState::lowest(1, 1.0, 1.0, 1).unwrap(), &grid).unwrap();
    let u = |e: f64, q: f64| {
        let v = external_potential(&ExternalCharge { q, d: 2.0 }, &grid).unwrap();
        inner_product(&a, &b, &v, e, &grid, 0.0)
            .unwrap()
            .interaction
    };
    let base = u(1.0, 1.0);
    for (e, q, k) in [
        (2.0, 1.0, 2.0),
        (1.0, 2.0, 2.0),
        (3.0, 1.0, 3.0),
        (1.0, 0.25, 0.25),
    ] {
        let rel = (u(e, q) - base * k).norm() / (base * k).norm();
        require(
            &mut f,
            rel <= LINEARITY_REL,
            format!("linearity at e = {e}, q = {q}: {rel:e}"),
        );
    }
    for (name, v) in [
        ("r^2", (|r: f64| r * r) as fn(f64) -> f64),
        ("1/(1+r)", |r| 1.0 / (1.0 + r)),
    ] {
        let samples = grid.sample_real(|r, _, _| v(r));
        let uc = inner_product(&a, &b, &samples, 1.0, &grid, 0.0)
            .unwrap()
            .interaction
            .norm();
        require(
            &mut f,
            uc <= u2.error.max(1e-14),
            format!("central V = {name} gives |U| = {uc:e}"),
        );
    }
    verdict(7, "orthogonality experiment", &f);
}

#[test]
fn criterion_8_numerics_substrate() {
    let mut f = Vec::new();
    for radius in [1.0, 2.5] {
        let grid = BallGrid::new(radius, Resolution::default()).unwrap();
        let vol = integrate_ball(&vec![Complex64::new(1.0, 0.0); grid.len()], &grid)
            .unwrap()
            .re;
        let exact = 4.0 / 3.0 * PI * radius.powi(3);
        require(
            &mut f,
            ((vol - exact) / exact).abs() <= VOLUME_REL,
            format!("volume at R = {radius}: {vol}"),
        );
    }
    let grid = BallGrid::new(1.0, Resolution::default()).unwrap();
    let lm: Vec<(u32, i32)> = (0..=2u32)
        .flat_map(|l| (-(l as i32)..=l as i32).map(move |m| (l, m)))
        .collect();
    let mut worst: f64 = 0.0;
    for &(l1, m1) in &lm {
        for &(l2, m2) in &lm {
            let g = grid.integrate_sphere(|t, p| {
                spherical_harmonic(l1, m1, t, p).unwrap().conj()
                    * spherical_harmonic(l2, m2, t, p).unwrap()
            });
            let target = if (l1, m1) == (l2, m2) { 1.0 } else { 0.0 };
            worst = worst.max((g - Complex64::new(target, 0.0)).norm());
        }
    }
    require(
        &mut f,
        worst <= GRAM_ABS,
        format!("Gram deviation {worst:e}"),
    );
    let kr = solve_well_mode(1, 1.0, 1.0).unwrap().k;
    require(
        &mut f,
        (kr - 4.493409457909064).abs() <= WELL_ZERO_ABS,
        format!("p-wave kR = {kr}"),
    );
    verdict(8, "numerics substrate", &f);
}
