use mbk_core::angles::{wrap, PI, TAU};
use mbk_core::bmeasure::{
    build_b_measure, choose_base_arc, existence_gate, measure_from_sidecar, sample_partner_map,
    verify_b_measure_with, AngularMeasure, GateClass, NuOnArc, UnitCdf, VerifyConfig,
};
use mbk_core::io::{self, BodyDescriptor, MeasureSidecar};
use mbk_core::staircase::{assign_levels, build_measure, PerfectSet};
use mbk_core::zoo::make_body;
use mbk_core::PlanarBody;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fs;
use std::path::Path;

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
    fn gate(message: impl Into<String>) -> Self {
        CliError { code: 3, message: message.into() }
    }
    fn verification(message: impl Into<String>) -> Self {
        CliError { code: 4, message: message.into() }
    }
}

type CliResult = Result<(), CliError>;

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn load_body(
    path: &Path,
    depth_override: Option<u32>,
    epsilon_override: Option<f64>,
) -> Result<(BodyDescriptor, PlanarBody), CliError> {
    let text = read_file(path)?;
    let mut desc = io::parse_body_descriptor(&text).map_err(|e| CliError::input(e.to_string()))?;
    if let BodyDescriptor::CantorBump { depth, epsilon } = &mut desc {
        if let Some(d) = depth_override {
            *depth = d;
        }
        if let Some(e) = epsilon_override {
            *epsilon = e;
        }
    }
    let body = make_body(&desc).map_err(|e| CliError::input(e.to_string()))?;
    Ok((desc, body))
}

fn ensure_out(dir: &Path) -> CliResult {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::input(format!("cannot create {}: {e}", dir.display())))
}

fn write_out(path: &Path, contents: &str) -> CliResult {
    fs::write(path, contents)
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

/// Scan resolution fine enough to separate the body's smallest features:
/// component merging uses twice the resolution, which must stay below the
/// half-width of the smallest gap so midpoints stay separate from the
/// retained intervals next to them.
fn default_resolution(desc: &BodyDescriptor) -> f64 {
    match desc {
        BodyDescriptor::CantorBump { depth, .. } => {
            let feature = (PI / 2.0) / 3f64.powi(*depth as i32);
            (feature / 8.0).clamp(1e-6, 1e-3)
        }
        _ => 1e-3,
    }
}

pub fn analyze(
    body_path: &Path,
    resolution: Option<f64>,
    tol: f64,
    depth: Option<u32>,
    epsilon: Option<f64>,
    out: &Path,
) -> CliResult {
    let (desc, body) = load_body(body_path, depth, epsilon)?;
    let resolution = resolution.unwrap_or_else(|| default_resolution(&desc));
    if resolution <= 0.0 || tol <= 0.0 {
        return Err(CliError::input("resolution and tol must be positive"));
    }
    ensure_out(out)?;

    let gate = existence_gate(&body, resolution, tol)
        .map_err(|e| CliError::input(e.to_string()))?;
    let auerbach = mbk_core::auerbach_set(&body, resolution, tol)
        .map_err(|e| CliError::input(e.to_string()))?;
    let segments = mbk_core::segment_set(&body, 1e-9);

    let mut csv = Vec::new();
    io::write_auerbach_csv(&mut csv, &auerbach)
        .map_err(|e| CliError::input(e.to_string()))?;
    write_out(&out.join("auerbach.csv"), std::str::from_utf8(&csv).unwrap())?;

    let mut csv = Vec::new();
    io::write_segments_csv(&mut csv, &segments)
        .map_err(|e| CliError::input(e.to_string()))?;
    write_out(&out.join("segments.csv"), std::str::from_utf8(&csv).unwrap())?;

    write_out(&out.join("body.svg"), &crate::svg::body_svg(&body, &auerbach, &segments))?;

    let class = match gate.class {
        GateClass::Finite => "finite",
        GateClass::PositiveWidth => "positive_width",
        GateClass::CantorLike => "cantor_like",
    };
    let components: Vec<serde_json::Value> = gate
        .components
        .iter()
        .map(|c| serde_json::json!([c.start, c.end, c.isolated]))
        .collect();
    let gate_json = serde_json::json!({
        "exists": gate.exists,
        "classification": class,
        "n_components": gate.components.len(),
        "n_positive_width": gate.n_positive_width,
        "components": components,
        "refinement_counts": gate.refinement_counts,
        "resolution": gate.resolution,
        "note": gate.note,
        "body_hash": io::body_hash(&desc),
    });
    write_out(&out.join("gate.json"), &serde_json::to_string_pretty(&gate_json).unwrap())?;

    println!(
        "gate: {} (classification: {class}, components: {}, positive width: {})",
        if gate.exists { "exists" } else { "not exists" },
        gate.components.len(),
        gate.n_positive_width
    );
    if gate.class == GateClass::Finite && gate.components.len() <= 32 {
        let pts: Vec<String> =
            gate.components.iter().map(|c| format!("{:.9}", c.midpoint())).collect();
        println!("isolated points of A(K) \\ E(K): [{}]", pts.join(", "));
    }
    println!("note: {}", gate.note);
    Ok(())
}

#[allow(clippy::too_many_arguments, clippy::type_complexity)]
pub fn measure(
    body_path: &Path,
    resolution: Option<f64>,
    tol: f64,
    nu_arg: &str,
    depth: u32,
    epsilon: Option<f64>,
    grid: usize,
    out: &Path,
) -> CliResult {
    let (desc, body) = load_body(body_path, None, epsilon)?;
    let resolution = resolution.unwrap_or_else(|| default_resolution(&desc));
    ensure_out(out)?;

    let gate = existence_gate(&body, resolution, tol)
        .map_err(|e| CliError::input(e.to_string()))?;
    if !gate.exists {
        return Err(CliError::gate(format!(
            "no measure with the quarter-turn property exists for this body \
             (classification: {:?} at resolution {resolution})",
            gate.class
        )));
    }
    let base = choose_base_arc(&body, &gate, tol).map_err(|e| CliError::gate(e.to_string()))?;

    // Source measure ν on [0, 1], then placed on the angular frame.
    let (nu_kind, gaps01, nu_grid, unit, frame): (
        String,
        Vec<[f64; 2]>,
        Option<Vec<[f64; 2]>>,
        UnitCdf,
        (f64, f64),
    ) = match nu_arg {
        "auto" => {
            let gaps = base.set.gaps().iter().map(|&(a, b)| [a, b]).collect();
            (
                "auto".into(),
                gaps,
                None,
                UnitCdf::Staircase(build_measure(&base.set)),
                (base.frame_lo, base.frame_hi),
            )
        }
        "uniform" => {
            let set = PerfectSet::full_interval();
            (
                "uniform".into(),
                vec![],
                None,
                UnitCdf::Staircase(build_measure(&set)),
                (base.a, base.a + wrap(base.b - base.a)),
            )
        }
        "cantor" => {
            if depth > mbk_core::staircase::MAX_CANTOR_DEPTH {
                return Err(CliError::input(format!(
                    "--depth {depth} exceeds the supported maximum {}",
                    mbk_core::staircase::MAX_CANTOR_DEPTH
                )));
            }
            let set = PerfectSet::cantor(depth);
            let gaps = set.gaps().iter().map(|&(a, b)| [a, b]).collect();
            (
                "cantor".into(),
                gaps,
                None,
                UnitCdf::Staircase(build_measure(&set)),
                (base.a, base.a + wrap(base.b - base.a)),
            )
        }
        other => {
            let path = other.strip_prefix("file:").ok_or_else(|| {
                CliError::input(format!(
                    "--nu must be auto, uniform, cantor or file:<path>, got {other}"
                ))
            })?;
            let rows = io::read_two_column_csv(&read_file(Path::new(path))?)
                .map_err(|e| CliError::input(e.to_string()))?;
            let grid_rows: Vec<[f64; 2]> = rows.iter().map(|&(x, y)| [x, y]).collect();
            let cdf = UnitCdf::from_grid(
                rows.iter().map(|r| r.0).collect(),
                rows.iter().map(|r| r.1).collect(),
                0.05,
            )
            .map_err(|e| CliError::input(e.to_string()))?;
            (
                format!("file:{path}"),
                vec![],
                Some(grid_rows),
                cdf,
                (base.a, base.a + wrap(base.b - base.a)),
            )
        }
    };

    let nu = NuOnArc::new(frame.0, frame.1, unit).map_err(|e| CliError::input(e.to_string()))?;
    // The partner map must span the ν frame; for non-auto sources sample it
    // over the whole base arc.
    let phi_domain: Vec<(f64, f64)> = if nu_kind == "auto" {
        base.kept.clone()
    } else {
        vec![frame]
    };
    let phi = sample_partner_map(&body, &phi_domain, 33, tol.max(1e-9)).map_err(|e| {
        CliError::input(format!(
            "cannot sample the partner map over the base arc ({e}); the source measure must be \
             supported inside A(K) \\ E(K) — use --nu auto for bodies with sparse structure"
        ))
    })?;
    let (phi_xs, phi_ys) = phi.samples();
    let sidecar = MeasureSidecar {
        body: desc.clone(),
        body_hash: io::body_hash(&desc),
        a: base.a,
        b: base.b,
        frame_lo: frame.0,
        frame_hi: frame.1,
        nu_kind,
        gaps01,
        nu_grid,
        phi_xs: phi_xs.to_vec(),
        phi_ys: phi_ys.to_vec(),
        grid_size: grid,
        normalization: "total_mass_2pi".into(),
    };
    let mu = build_b_measure(nu, phi).map_err(|e| CliError::input(e.to_string()))?;

    let mut csv = Vec::new();
    io::write_cdf_csv(&mut csv, "theta", "g", 0.0, TAU, grid, |t| mu.cdf(t))
        .map_err(|e| CliError::input(e.to_string()))?;
    write_out(&out.join("measure.csv"), std::str::from_utf8(&csv).unwrap())?;
    write_out(
        &out.join("measure.json"),
        &serde_json::to_string_pretty(&sidecar).unwrap(),
    )?;
    write_out(
        &out.join("measure.svg"),
        &crate::svg::cdf_svg("theta", "G", 0.0, TAU, 1024, |t| mu.cdf(t)),
    )?;
    println!(
        "measure built: a = {:.12}, b = {:.12}, support frame [{:.12}, {:.12}], total mass {:.12}",
        base.a,
        base.b,
        frame.0,
        frame.1,
        mu.total_mass()
    );
    Ok(())
}

pub fn verify(
    body_path: &Path,
    measure_arg: &str,
    tol: f64,
    samples: usize,
    resolution: Option<f64>,
    out: &Path,
) -> CliResult {
    let (desc, body) = load_body(body_path, None, None)?;
    let resolution = resolution.unwrap_or_else(|| default_resolution(&desc));
    ensure_out(out)?;

    let mu = match measure_arg {
        "uniform" => AngularMeasure::uniform(),
        "arclength" => AngularMeasure::arc_length(&body),
        path => {
            let text = read_file(Path::new(path))?;
            if path.ends_with(".json") {
                let sc: MeasureSidecar = serde_json::from_str(&text)
                    .map_err(|e| CliError::input(format!("bad sidecar: {e}")))?;
                if sc.body_hash != io::body_hash(&desc) {
                    return Err(CliError::input("measure sidecar was built for a different body"));
                }
                measure_from_sidecar(&sc).map_err(|e| CliError::input(e.to_string()))?
            } else {
                let rows = io::read_two_column_csv(&text)
                    .map_err(|e| CliError::input(e.to_string()))?;
                AngularMeasure::from_grid(
                    rows.iter().map(|r| r.0).collect(),
                    rows.iter().map(|r| r.1).collect(),
                )
                .map_err(|e| CliError::input(e.to_string()))?
            }
        }
    };

    // MBK_SEED pins the extra randomized sample angles.
    let seed = std::env::var("MBK_SEED").ok().and_then(|s| s.parse::<u64>().ok()).unwrap_or(17);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extra: Vec<f64> = (0..256).map(|_| rng.gen_range(0.0..TAU)).collect();

    let mut config = VerifyConfig::new(samples, tol);
    config.resolution = resolution;
    config.extra_samples = extra;
    let report = verify_b_measure_with(&body, &mu, &config)
        .map_err(|e| CliError::input(e.to_string()))?;

    write_out(&out.join("report.json"), &serde_json::to_string_pretty(&report).unwrap())?;
    println!(
        "verify: {} (max π/2 deviation {:.3e}, mass residual {:.3e}, symmetry {:.3e}, \
         atom {:.3e}, support leak {:.3e})",
        if report.pass { "pass" } else { "fail" },
        report.max_pi_half_deviation,
        report.total_mass_residual,
        report.symmetry_residual,
        report.atom_estimate,
        report.support_leak
    );
    if report.pass {
        Ok(())
    } else {
        Err(CliError::verification(format!(
            "verification failed at tol {tol}: max π/2 deviation {:.6e}",
            report.max_pi_half_deviation
        )))
    }
}

pub fn staircase(
    set_path: Option<&Path>,
    cantor_depth: Option<u32>,
    grid: usize,
    out: &Path,
) -> CliResult {
    let set = match (set_path, cantor_depth) {
        (Some(path), None) => {
            let text = read_file(path)?;
            let desc = io::parse_set_descriptor(&text)
                .map_err(|e| CliError::input(e.to_string()))?;
            desc.build().map_err(|e| CliError::input(e.to_string()))?
        }
        (None, Some(d)) => {
            if d > mbk_core::staircase::MAX_CANTOR_DEPTH {
                return Err(CliError::input(format!(
                    "--cantor-depth {d} exceeds the supported maximum {}",
                    mbk_core::staircase::MAX_CANTOR_DEPTH
                )));
            }
            PerfectSet::cantor(d)
        }
        _ => {
            return Err(CliError::input(
                "exactly one of --set or --cantor-depth is required",
            ))
        }
    };
    ensure_out(out)?;

    let f = assign_levels(&set);
    let m = build_measure(&set);

    let mut csv = Vec::new();
    io::write_cdf_csv(&mut csv, "x", "f", 0.0, 1.0, grid, |x| f.eval(x))
        .map_err(|e| CliError::input(e.to_string()))?;
    write_out(&out.join("f.csv"), std::str::from_utf8(&csv).unwrap())?;

    let mut csv = Vec::new();
    io::write_cdf_csv(&mut csv, "x", "cdf", 0.0, 1.0, grid, |x| m.cdf(x))
        .map_err(|e| CliError::input(e.to_string()))?;
    write_out(&out.join("cdf.csv"), std::str::from_utf8(&csv).unwrap())?;

    write_out(
        &out.join("staircase.svg"),
        &crate::svg::cdf_svg("x", "f", 0.0, 1.0, 1024, |x| f.eval(x)),
    )?;
    println!(
        "staircase built: {} gaps, lambda(H) = {:.12}",
        set.gaps().len(),
        set.lebesgue()
    );
    Ok(())
}
