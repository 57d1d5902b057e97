use std::f64::consts::PI;

use phasespin_core::clifford::grade_of;
use phasespin_core::entangle::{
    bipartite_closed_form, bipartite_expectation, partial_expectation, spinor_bell_gram, standard_name,
};
use phasespin_core::oracle::{born_probability, oracle_bipartite, oracle_partial, spin_state};
use phasespin_core::sigma::{components, from_spherical};
use phasespin_core::spin::{rotate_spin, sg_measure};
use phasespin_core::str_ext::{build_str_frame, sigma_table_mismatches};
use phasespin_core::{bell_state, make_spin, Algebra, BellVariant, Multivector, Particle, PhaseVar, SpinBasis};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::format::{g15, Report};
use crate::CliError;

/// Fixed direction `u` and the unit in-plane direction `w ⟂ u` of the sweep
/// `v(θ) = cos θ u + sin θ w`, so that `θ` is the angle between `u` and `v`.
pub fn sweep_axes(cfg: &RunConfig) -> Result<(Multivector, Multivector), CliError> {
    let (first, second) = cfg.plane.unwrap_or(crate::config::Plane::Xz).axes();
    let (u, v) = cfg.directions();
    let u = u.unwrap_or(first);
    let cand = v.unwrap_or(second);
    let along = cand.dot(&u)?;
    let w = &cand - &u.scale(along);
    let n = w.norm();
    if n < 1e-9 {
        return Err(CliError::Usage("sweep direction is parallel to --u; pass --v or another --plane".into()));
    }
    Ok((u, w.scale(1.0 / n)))
}

/// Grid `0..=180` degrees with `samples` points.
pub fn theta_grid(samples: u64) -> impl Iterator<Item = f64> {
    let last = (samples - 1) as f64;
    (0..samples).map(move |k| 180.0 * k as f64 / last)
}

fn along(u: &Multivector, w: &Multivector, theta_deg: f64) -> Multivector {
    let (s, c) = (theta_deg * PI / 180.0).sin_cos();
    &u.scale(c) + &w.scale(s)
}

pub fn curve(cfg: &RunConfig) -> Result<Report, CliError> {
    let mu = cfg.state.unwrap_or(0);
    let variant: BellVariant = cfg.variant.map(Into::into).unwrap_or(BellVariant::Y);
    let pair = bell_state(mu, variant).map_err(|e| CliError::Usage(e.to_string()))?;
    let name = standard_name(mu)?;
    let (u, w) = sweep_axes(cfg)?;
    let mut r = Report::new(vec!["theta_deg", "e_model", "e_oracle", "abs_diff"], cfg.tol);
    for theta in theta_grid(cfg.samples.unwrap_or(181)) {
        let v = along(&u, &w, theta);
        let model = bipartite_expectation(&pair, &u, &v)?;
        let oracle = oracle_bipartite(name, components(&u), components(&v));
        let diff = (model - oracle).abs();
        r.observe(diff, || format!("theta {} deg", g15(theta)));
        r.push(vec![theta.into(), model.into(), oracle.into(), diff.into()]);
    }
    Ok(r)
}

pub fn single(cfg: &RunConfig) -> Result<Report, CliError> {
    let (u, w) = sweep_axes(cfg)?;
    let spin = rotate_spin(&make_spin(SpinBasis::Up, PhaseVar::fresh())?, &u)?;
    let [x, y, z] = components(&u);
    let state = spin_state(z.clamp(-1.0, 1.0).acos(), y.atan2(x));
    let mut r = Report::new(
        vec!["theta_deg", "p_coincide", "p_anti", "correlation", "born_plus", "born_minus", "abs_diff"],
        cfg.tol,
    );
    for theta in theta_grid(cfg.samples.unwrap_or(181)) {
        let v = along(&u, &w, theta);
        let rec = sg_measure(&spin, &v)?;
        let (bp, bm) = born_probability(state, components(&v));
        let diff = (rec.p_coincide - bp).abs().max((rec.p_anti - bm).abs());
        r.observe(diff, || format!("theta {} deg", g15(theta)));
        r.push(vec![
            theta.into(),
            rec.p_coincide.into(),
            rec.p_anti.into(),
            rec.correlation.into(),
            bp.into(),
            bm.into(),
            diff.into(),
        ]);
    }
    Ok(r)
}

pub fn gram(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut r = Report::new(vec!["kind", "mu", "nu0", "nu1", "nu2", "nu3"], cfg.tol);
    for (kind, full) in [("full", true), ("measured", false)] {
        let g = spinor_bell_gram(full)?;
        for (mu, row) in g.iter().enumerate() {
            for (nu, x) in row.iter().enumerate() {
                if mu != nu {
                    r.observe(x.abs(), || format!("{kind} ({mu},{nu})"));
                }
            }
            let mut cells = vec![kind.into(), mu.into()];
            cells.extend(row.iter().map(|&x| x.into()));
            r.push(cells);
        }
        r.matrices.push((kind, g));
    }
    Ok(r)
}

/// Uniform random unit vector.
pub fn random_unit(rng: &mut ChaCha8Rng) -> Multivector {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(-PI..PI);
    from_spherical(z.acos(), phi)
}

pub fn difftest(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.unwrap_or(42));
    let pairs: Vec<(Multivector, Multivector)> = (0..cfg.samples.unwrap_or(1000))
        .map(|_| (random_unit(&mut rng), random_unit(&mut rng)))
        .collect();
    let mut r = Report::new(
        vec!["mu", "state", "bipartite_max_dev", "closed_form_max_dev", "partial_max_dev"],
        cfg.tol,
    );
    for mu in 0..4u8 {
        let name = standard_name(mu)?;
        let full = bell_state(mu, BellVariant::Y)?;
        // reduced states are only defined for the unsigned or doubly primed forms
        let reduced = bell_state(
            mu,
            if matches!(mu, 1 | 2) {
                BellVariant::YDoublePrime
            } else {
                BellVariant::Y
            },
        )?;
        let (mut bip, mut closed, mut part) = (0.0f64, 0.0f64, 0.0f64);
        let mut worst = (0.0f64, 0usize);
        for (i, (u, v)) in pairs.iter().enumerate() {
            let model = bipartite_expectation(&full, u, v)?;
            let d = (model - oracle_bipartite(name, components(u), components(v))).abs();
            if d > worst.0 {
                worst = (d, i);
            }
            bip = bip.max(d);
            closed = closed.max((model - bipartite_closed_form(mu, u, v)?).abs());
            for (which, first) in [(Particle::First, true), (Particle::Second, false)] {
                let m = partial_expectation(&reduced, u, which)?;
                part = part.max((m - oracle_partial(name, components(u), first)).abs());
            }
        }
        let (u, v) = &pairs[worst.1];
        r.observe(bip, || format!("mu {mu} bipartite at u={:?} v={:?}", components(u), components(v)));
        r.observe(closed, || format!("mu {mu} closed form"));
        r.observe(part, || format!("mu {mu} partial"));
        r.push(vec![mu.into(), name.to_string().into(), bip.into(), closed.into(), part.into()]);
    }
    Ok(r)
}

fn random_mv(rng: &mut ChaCha8Rng, alg: &'static Algebra) -> Multivector {
    let c = (0..alg.size()).map(|_| rng.random_range(-1.0..=1.0)).collect();
    Multivector::from_coeffs(alg, c).expect("length matches algebra")
}

/// One row per identity suite: `(name, cases, max error)`.
pub fn algebra_suites(alg: &'static Algebra, samples: u64, rng: &mut ChaCha8Rng) -> Vec<(&'static str, u64, f64)> {
    let mut out = Vec::new();
    let mut assoc = 0.0f64;
    let mut rev = 0.0f64;
    let mut central = 0.0f64;
    let i = Multivector::pseudoscalar(alg);
    for _ in 0..samples {
        let (a, b, c) = (random_mv(rng, alg), random_mv(rng, alg), random_mv(rng, alg));
        assoc = assoc.max((&(&a * &b) * &c).max_abs_diff(&(&a * &(&b * &c))));
        rev = rev.max((&a * &b).reverse().max_abs_diff(&(&b.reverse() * &a.reverse())));
        central = central.max((&i * &a).max_abs_diff(&(&a * &i)));
    }
    for blade in 0..alg.size() {
        let e = Multivector::blade(alg, blade, 1.0);
        central = central.max((&i * &e).max_abs_diff(&(&e * &i)));
    }
    let mut metric = 0.0f64;
    for (k, m) in alg.signature().metric().iter().enumerate() {
        let e = Multivector::blade(alg, 1 << k, 1.0);
        metric = metric.max((&e * &e).max_abs_diff(&Multivector::scalar(alg, *m as f64)));
    }
    metric = metric.max((&i * &i).max_abs_diff(&Multivector::scalar(alg, -1.0)));
    out.push(("associativity", samples, assoc));
    out.push(("metric", alg.dim() as u64 + 1, metric));
    out.push(("centrality", samples + alg.size() as u64, central));
    out.push(("reverse", samples, rev));
    debug_assert_eq!(grade_of(alg.pseudoscalar_blade()), alg.dim());
    out
}

pub fn algebra_check(cfg: &RunConfig) -> Result<Report, CliError> {
    let dims: Vec<u8> = cfg.dim.map_or(vec![3, 5], |d| vec![d]);
    let samples = cfg.samples.unwrap_or(10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.unwrap_or(42));
    let mut r = Report::new(vec!["dim", "suite", "cases", "max_error"], cfg.tol);
    for dim in dims {
        let alg = match dim {
            3 => Algebra::euclidean3(),
            5 => Algebra::str(),
            d => return Err(CliError::Usage(format!("--dim must be 3 or 5, got {d}"))),
        };
        let mut rows = algebra_suites(alg, samples, &mut rng);
        if dim == 5 {
            let frame = build_str_frame();
            let bad = sigma_table_mismatches(&frame) as f64;
            rows.push(("sigma-embedding", 64, bad));
            if let Err(msg) = frame.check_invariants() {
                r.failures.push(format!("dim 5 frame: {msg}"));
            }
        }
        for (suite, cases, err) in rows {
            r.observe(err, || format!("dim {dim} {suite}"));
            r.push(vec![dim.into(), suite.into(), (cases as usize).into(), err.into()]);
        }
    }
    Ok(r)
}
