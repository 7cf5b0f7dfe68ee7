//! The claim matrix: one function per subcommand, each returning its checks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use densitycheck::dims::{
    check_density_requirement_a, field_dims, infer_field_dimension, Dim, TermSpec,
};
use densitycheck::experiment::{run_orthogonality_experiment, ExperimentConfig, ExperimentReport};
use densitycheck::fieldops::{
    dirac_current, dirac_hamiltonian_apply, dirac_time_residual, kg_current, kg_density_at,
    kg_hamiltonian_density_at, DiracFieldConfig, KgPlaneWave, ScalarFieldConfig, Spinor,
    SpinorPlaneWave,
};
use densitycheck::numerics::{divergence_residual, observed_order, Lattice};
use densitycheck::report::{Check, ClaimReport};
use densitycheck::symexpr::library::{
    dirac_density, dirac_lagrangian, kg_density, kg_hamiltonian_density, kg_lagrangian,
};
use densitycheck::symexpr::{
    classify_time_symmetry, euler_lagrange, legendre_transform, substitute_real, FieldExpr,
    Polynomial, Symbol, TermSymmetry,
};
use densitycheck::tolerances::{CONTINUITY_CONSTANT_ABS, EIGEN_SHIFT_ABS, MIN_OBSERVED_ORDER};
use densitycheck::Result;

const SCALAR_FIELD_EQUATION: &str = include_str!("../../core/tests/golden/kg_field_equation.txt");
const SPINOR_FIELD_EQUATION: &str =
    include_str!("../../core/tests/golden/dirac_field_equation.txt");

pub fn dimensions() -> Result<ClaimReport> {
    let mut r = ClaimReport::default();
    let spinor = infer_field_dimension(Dim::integer(-1), true)?;
    let scalar = infer_field_dimension(Dim::integer(-2), true)?;
    r.push(Check::new(
        "spinor_field_dimension",
        "a first-order bilinear Lagrangian fixes the spinor field at L^-3/2",
        spinor == Dim::new(-3, 2),
        format!("dim(psi) = {spinor}"),
    ));
    r.push(Check::new(
        "scalar_field_dimension",
        "a second-order bilinear Lagrangian fixes the scalar field at L^-1",
        scalar == Dim::integer(-1),
        format!("dim(phi) = {scalar}"),
    ));
    let spinors = field_dims(&[("psi", spinor), ("psibar", spinor)]);
    let scalars = field_dims(&[("phi", scalar), ("phi*", scalar), ("V", Dim::integer(-1))]);
    let cases = [
        (
            "spinor_density_dimension",
            "psi^dagger psi",
            TermSpec::new(&[("psibar", 1), ("psi", 1)], 0, Dim::DIMENSIONLESS),
            &spinors,
            true,
        ),
        (
            "scalar_density_derivative_term",
            "phi* d_t phi",
            TermSpec::new(&[("phi*", 1), ("phi", 1)], 1, Dim::DIMENSIONLESS),
            &scalars,
            true,
        ),
        (
            "scalar_density_potential_term",
            "e V phi* phi",
            TermSpec::new(&[("V", 1), ("phi*", 1), ("phi", 1)], 0, Dim::DIMENSIONLESS),
            &scalars,
            true,
        ),
        (
            "bare_scalar_bilinear_is_not_a_density",
            "phi* phi",
            TermSpec::new(&[("phi*", 1), ("phi", 1)], 0, Dim::DIMENSIONLESS),
            &scalars,
            false,
        ),
    ];
    for (name, label, term, dims, expect) in cases {
        let ok = check_density_requirement_a(&term, dims)?;
        let verb = if expect { "has" } else { "lacks" };
        r.push(Check::new(
            name,
            format!("{label} {verb} the dimension of a density, L^-3"),
            ok == expect,
            format!(
                "dim({label}) = {}",
                densitycheck::dims::term_dimension(&term, dims)?
            ),
        ));
    }
    Ok(r)
}

fn equal_check(name: &str, claim: &str, got: &Polynomial, want: &Polynomial) -> Check {
    let diff = got.sub(want);
    let detail = if diff.is_zero() {
        format!("{} terms, identical", got.len())
    } else {
        let terms: Vec<String> = diff.to_string().lines().map(str::to_string).collect();
        format!("difference: {}", terms.join(" + "))
    };
    Check::new(name, claim, diff.is_zero(), detail)
}

pub fn derive() -> Result<ClaimReport> {
    let mut r = ClaimReport::default();
    let spinor_golden: Polynomial = SPINOR_FIELD_EQUATION.parse()?;
    let scalar_golden: Polynomial = SCALAR_FIELD_EQUATION.parse()?;
    r.push(equal_check(
        "spinor_field_equation",
        "varying psibar gives the Dirac equation with minimal coupling",
        &euler_lagrange(&dirac_lagrangian(), Symbol::PsiBar)?,
        &spinor_golden,
    ));
    r.push(equal_check(
        "scalar_field_equation",
        "varying phi* gives the minimally coupled Klein-Gordon equation",
        &euler_lagrange(&kg_lagrangian(), Symbol::PhiStar)?,
        &scalar_golden,
    ));

    let h = legendre_transform(&kg_lagrangian(), &[Symbol::Phi, Symbol::PhiStar])?;
    let stated = kg_hamiltonian_density();
    r.push(equal_check(
        "scalar_legendre_equals_stated_hamiltonian_density",
        "the Legendre transform of the scalar Lagrangian is the squared-moduli Hamiltonian density",
        &h,
        &stated,
    ));
    let shift = (FieldExpr::sym(Symbol::Charge) * FieldExpr::sym(Symbol::V))
        .canonical()?
        .try_mul(&kg_density())?;
    r.push(equal_check(
        "scalar_legendre_identity",
        "the Legendre transform equals the squared-moduli density plus eV times the charge density",
        &h,
        &stated.add(&shift),
    ));
    let no_v = |p: &Polynomial| p.filter(|m| !m.contains_symbol(Symbol::V));
    r.push(equal_check(
        "scalar_legendre_without_potential",
        "with V = 0 the Legendre transform is the squared-moduli density",
        &no_v(&h),
        &no_v(&stated),
    ));
    let hd = legendre_transform(&dirac_lagrangian(), &[Symbol::Psi, Symbol::PsiBar])?;
    r.push(Check::new(
        "spinor_legendre_without_time_derivatives",
        "the spinor Hamiltonian density contains no time derivative",
        !hd.contains_time_derivative(),
        format!("{} terms", hd.len()),
    ));
    Ok(r)
}

fn symmetry_check(name: &str, claim: &str, got: TermSymmetry, want: TermSymmetry) -> Check {
    Check::new(name, claim, got == want, format!("{got:?}"))
}

pub fn symmetry() -> Result<ClaimReport> {
    let mut r = ClaimReport::default();
    let pair = (Symbol::Phi, Symbol::PhiStar);
    r.push(symmetry_check(
        "scalar_energy_density_symmetric",
        "the highest time derivatives of the scalar energy density are symmetric under phi <-> phi*",
        classify_time_symmetry(&kg_hamiltonian_density(), pair),
        TermSymmetry::Symmetric,
    ));
    r.push(symmetry_check(
        "scalar_charge_density_antisymmetric",
        "the highest time derivatives of the scalar charge density are antisymmetric",
        classify_time_symmetry(&kg_density(), pair),
        TermSymmetry::Antisymmetric,
    ));
    r.push(symmetry_check(
        "spinor_density_static",
        "the spinor density has no time derivative",
        classify_time_symmetry(&dirac_density(), (Symbol::Psi, Symbol::PsiBar)),
        TermSymmetry::NoTimeDerivative,
    ));
    let real = substitute_real(&kg_density(), true);
    r.push(Check::new(
        "real_scalar_density_vanishes",
        "a real scalar field without coupling has zero charge density",
        real.is_zero(),
        format!("{} terms remain", real.len()),
    ));
    Ok(r)
}

fn scalar_superposition_residual(h: f64) -> Result<f64> {
    let w1 = KgPlaneWave::new(Complex64::new(0.8, 0.1), [0.9, -0.4, 0.3], 1.0, -1)?;
    let w2 = KgPlaneWave::new(Complex64::new(-0.3, 0.5), [-0.5, 1.2, 0.7], 1.0, -1)?;
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
    divergence_residual(&kg_current(&cfg, 0.0))
}

fn spinor_superposition_residual(h: f64) -> Result<f64> {
    let w1 = SpinorPlaneWave::new([0.7, 0.2, -0.5], 1.0, 1)?;
    let w2 = SpinorPlaneWave::new([-0.4, 0.9, 0.6], 1.0, 2)?;
    let n = (0.8 / h).round() as usize + 1;
    let lat = Lattice::new([0.0; 4], [0.5 * h, h, h, h], [5, n, n, n]);
    divergence_residual(&dirac_current(&DiracFieldConfig::from_fn(lat, |x| {
        w1.value(x) + w2.value(x)
    })))
}

pub fn continuity() -> Result<ClaimReport> {
    let mut r = ClaimReport::default();
    let lat = Lattice::new([0.0; 4], [0.1; 4], [3, 4, 4, 4]);
    let spinor = SpinorPlaneWave::new([0.4, -1.1, 0.7], 0.9, 2)?;
    let res = divergence_residual(&dirac_current(&DiracFieldConfig::from_fn(lat, |x| {
        spinor.value(x)
    })))?;
    r.push(
        Check::new(
            "spinor_plane_wave_conserved",
            "the spinor current of a plane wave satisfies the continuity equation",
            res <= CONTINUITY_CONSTANT_ABS,
            format!("max residual {res:.3e}"),
        )
        .with_value("residual", res),
    );
    let scalar = KgPlaneWave::new(Complex64::new(0.6, -0.3), [0.5, 0.1, -0.4], 0.8, -1)?;
    let cfg = ScalarFieldConfig::from_fn(lat, |x| {
        (
            scalar.value(x),
            scalar.time_derivative(x),
            scalar.gradient(x),
        )
    });
    let res = divergence_residual(&kg_current(&cfg, 1.0))?;
    r.push(
        Check::new(
            "scalar_plane_wave_conserved",
            "the scalar current of a plane wave satisfies the continuity equation",
            res <= CONTINUITY_CONSTANT_ABS,
            format!("max residual {res:.3e}"),
        )
        .with_value("residual", res),
    );
    for (name, run) in [
        (
            "scalar",
            scalar_superposition_residual as fn(f64) -> Result<f64>,
        ),
        ("spinor", spinor_superposition_residual),
    ] {
        let (coarse, fine) = (run(0.2)?, run(0.1)?);
        let order = observed_order(coarse, fine);
        r.push(
            Check::new(
                format!("{name}_superposition_converges"),
                format!(
                    "the {name} continuity residual on a superposition falls at second order in h"
                ),
                order >= MIN_OBSERVED_ORDER,
                format!("observed order {order:.4}"),
            )
            .with_value("residual_h", coarse)
            .with_value("residual_h_half", fine)
            .with_value("order", order),
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let sample_lat = Lattice::new([0.0; 4], [1.0; 4], [1, 100, 10, 10]);
    let c = |rng: &mut ChaCha8Rng| {
        Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
    };
    let psi: Vec<Spinor> = (0..sample_lat.len())
        .map(|_| Spinor::new(c(&mut rng), c(&mut rng), c(&mut rng), c(&mut rng)))
        .collect();
    let cfg = DiracFieldConfig {
        lattice: sample_lat,
        potential: vec![[0.0; 4]; psi.len()],
        psi,
    };
    let negative = dirac_current(&cfg).rho.iter().filter(|&&x| x < 0.0).count();
    r.push(Check::new(
        "spinor_density_non_negative",
        "the spinor density is never negative",
        negative == 0,
        format!("{negative} negative of {} random spinors", sample_lat.len()),
    ));

    let (mut pos, mut neg, mut bad) = (0, 0, 0);
    for _ in 0..10_000 {
        let (phi, dt) = (c(&mut rng), c(&mut rng));
        let grad = [c(&mut rng), c(&mut rng), c(&mut rng)];
        let v = rng.random_range(-1.0..1.0);
        let a = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let e = rng.random_range(-1.0..1.0);
        let rho = kg_density_at(phi, dt, v, e);
        pos += usize::from(rho > 0.0);
        neg += usize::from(rho < 0.0);
        bad += usize::from(kg_hamiltonian_density_at(phi, dt, grad, v, a, e, 1.0) < 0.0);
    }
    r.push(Check::new(
        "scalar_density_indefinite",
        "the scalar charge density takes both signs",
        pos > 0 && neg > 0,
        format!("{pos} positive, {neg} negative of 10000 random samples"),
    ));
    r.push(Check::new(
        "scalar_energy_density_non_negative",
        "the scalar energy density is never negative",
        bad == 0,
        format!("{bad} negative of 10000 random samples"),
    ));
    Ok(r)
}

fn plane_wave_hamiltonian_residual(h: f64) -> Result<(f64, f64)> {
    let w = SpinorPlaneWave::new([0.7, -0.4, 1.1], 1.0, 1)?;
    let lat = Lattice::spatial(0.2, [0.1, -0.3, 0.5], h, 5);
    let cfg = DiracFieldConfig::from_fn(lat, |x| w.value(x));
    let psi_t: Vec<Spinor> = lat
        .points()
        .map(|x| w.value(x) * Complex64::new(0.0, -w.energy))
        .collect();
    let residual = dirac_time_residual(&cfg, &psi_t, 1.0, 0.0)?;
    let bound = w.momentum.iter().map(|p| p.abs().powi(3)).sum::<f64>() * w.amplitude.norm() / 6.0;
    Ok((residual, bound))
}

pub fn dirac_consistency() -> Result<ClaimReport> {
    let mut r = ClaimReport::default();
    let (h1, h2) = (0.1, 0.05);
    let (r1, c) = plane_wave_hamiltonian_residual(h1)?;
    let (r2, _) = plane_wave_hamiltonian_residual(h2)?;
    let order = observed_order(r1, r2);
    r.push(
        Check::new(
            "hamiltonian_generates_time_evolution",
            "H psi = i d_t psi on exact plane waves, central differences converging at second order",
            order >= MIN_OBSERVED_ORDER && r1 <= c * h1 * h1 && r2 <= c * h2 * h2,
            format!("residual {r1:.3e} at h = {h1}, {r2:.3e} at h = {h2}, order {order:.4}"),
        )
        .with_value("residual_h", r1)
        .with_value("residual_h_half", r2)
        .with_value("order", order)
        .with_value("bound_constant", c),
    );

    let (mass, e, v) = (1.2, 0.7, 0.35);
    let w = SpinorPlaneWave::new([0.3, -0.2, 0.5], mass, 2)?;
    let lat = Lattice::spatial(0.0, [0.0; 3], 0.05, 3);
    let bare = DiracFieldConfig::from_fn(lat, |x| w.value(x));
    let dressed = bare.clone().with_potential(|_| [v, 0.0, 0.0, 0.0]);
    let h0 = dirac_hamiltonian_apply(&bare, mass, e)?;
    let hv = dirac_hamiltonian_apply(&dressed, mass, e)?;
    let mut worst: f64 = 0.0;
    for ((idx, a), (_, b)) in h0.iter().zip(&hv) {
        let psi = bare.psi[lat.index(*idx)];
        let shift = (psi.adjoint() * (b - a))[(0, 0)] / psi.norm_squared();
        worst = worst.max((shift - Complex64::new(e * v, 0.0)).norm());
    }
    r.push(
        Check::new(
            "constant_potential_shifts_energy",
            "a constant potential V shifts the spinor energy by eV",
            worst <= EIGEN_SHIFT_ABS,
            format!("max |shift - eV| = {worst:.3e}"),
        )
        .with_value("deviation", worst),
    );

    let rest = SpinorPlaneWave::new([0.0; 3], mass, 1)?;
    let rest_lat = Lattice::spatial(0.0, [0.0; 3], 0.1, 3);
    let cfg = DiracFieldConfig::from_fn(rest_lat, |x| rest.value(x))
        .with_potential(|_| [v, 0.0, 0.0, 0.0]);
    let out = dirac_hamiltonian_apply(&cfg, mass, e)?;
    let psi = rest.value([0.0; 4]);
    let dev = (out[0].1 - psi * Complex64::new(mass + e * v, 0.0)).norm();
    r.push(Check::new(
        "rest_spinor_energy",
        "a spinor at rest in a constant potential has energy m + eV",
        dev <= EIGEN_SHIFT_ABS,
        format!("|H psi - (m + eV) psi| = {dev:.3e}"),
    ));

    let moving = DiracFieldConfig::from_fn(lat, |x| w.value(x));
    let gauged = moving
        .clone()
        .with_potential(|x| [x[1].sin(), 2.0 * x[2], -1.0, x[3] * x[1]]);
    r.push(Check::new(
        "spinor_current_ignores_potential",
        "the spinor current does not depend on the external potential",
        dirac_current(&moving) == dirac_current(&gauged),
        "bit-identical with and without potential".to_string(),
    ));
    Ok(r)
}

pub fn orthogonality(config: &ExperimentConfig) -> Result<(ClaimReport, ExperimentReport)> {
    let report = run_orthogonality_experiment(config)?;
    Ok((report.checks.clone(), report))
}
