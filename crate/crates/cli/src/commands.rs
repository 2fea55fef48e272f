//! Command implementations. Each returns a [`Report`]; rendering and exit
//! codes live in the binary.

use deltashell::{
    aggregate_bounds, bargmann_bound, birman_schwinger_trace, check_continuous_spectrum,
    check_discrete, check_self_adjoint, check_semibounded, count_bound_states_with_tol,
    default_inertia_tol, fd_count, gershgorin_classify, inertia, kac_krein_check, kappa_matrix,
    matrix_bargmann, multidim_verdicts, necessary_conditions, oscillation_report,
    total_bound_states_capped, ChannelSpec, EssentialSpectrum, ShellConfig,
};
use serde_json::{json, Value};

use crate::problem::{ProblemFile, SweepAxis};
use crate::report::Report;
use crate::CliError;

/// Flag overrides merged over the `[analysis]` section.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub tol: Option<f64>,
    pub oracle: bool,
    pub lmax: Option<u32>,
    pub length: Option<f64>,
    pub mesh: Option<f64>,
}

struct Analysis {
    tol: Option<f64>,
    oracle: bool,
    lmax: u32,
    length: Option<f64>,
    mesh: Option<f64>,
}

fn analysis(problem: &ProblemFile, opts: &Options) -> Analysis {
    let section = problem.analysis.unwrap_or_default();
    Analysis {
        tol: opts.tol.or(section.tol),
        oracle: opts.oracle || section.oracle.unwrap_or(false),
        lmax: opts.lmax.or(section.lmax).unwrap_or(10_000),
        length: opts.length.or(section.length),
        mesh: opts.mesh.or(section.mesh),
    }
}

fn shells_json(config: &ShellConfig<f64>) -> Value {
    json!({
        "radii": config.radii().collect::<Vec<f64>>(),
        "strengths": config.strengths().collect::<Vec<f64>>(),
    })
}

fn effective_l_of(problem: &ProblemFile) -> Result<(ChannelSpec<f64>, f64), CliError> {
    let channel = problem.channel()?;
    let l = channel
        .effective_l()
        .map_err(|e| CliError::invalid(format!("[channel] invalid: {e}")))?;
    Ok((channel, l))
}

/// Exact channel count with the signature breakdown.
pub fn run_kappa(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    let config = problem.config()?;
    let (channel, l) = effective_l_of(problem)?;
    let opts = analysis(problem, opts);

    let mut report = Report::new(
        "kappa",
        json!({ "shells": shells_json(&config), "l": l }),
    );

    let outcome = count_bound_states_with_tol(&config, &channel, opts.tol)?;
    report.push_count("kappa_minus", outcome.count);
    report.push_count("kappa_plus_strengths", config.positive_count());
    report.push_count("kappa_minus_strengths", config.negative_count());

    if l > -0.5 && !config.is_empty() {
        let m = kappa_matrix(&config, l)?;
        let tol = opts.tol.unwrap_or_else(|| default_inertia_tol(&m.entries));
        let sig = inertia(&m.entries, tol);
        report.push_result(
            "matrix_inertia",
            json!({
                "kappa_minus": sig.kappa_minus,
                "kappa_zero": sig.kappa_zero,
                "kappa_plus": sig.kappa_plus,
                "tolerance": sig.tolerance,
            }),
        );
    } else if l == -0.5 {
        report.warn("borderline channel: counted by zero-energy oscillation, no matrix signature");
    }

    if let Some((lo, hi)) = outcome.degenerate {
        report.warn(format!(
            "counting matrix is numerically singular (zero determinant): the count would be {lo} or {hi} under an infinitesimal perturbation; the exact-zero reading gives {}",
            outcome.count
        ));
    }

    if opts.oracle {
        let oracle = oscillation_report(&config, l)?;
        report.push_count("oscillation_count", oracle.count);
        report.push_result("oracle_agrees", oracle.count == outcome.count);
        if oracle.count != outcome.count {
            report.warn("oscillation oracle disagrees with the matrix count");
        }
    }
    Ok(report)
}

/// Bounds and certificates for a channel.
pub fn run_bounds(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    let config = problem.config()?;
    let (channel, l) = effective_l_of(problem)?;
    let opts = analysis(problem, opts);

    let mut report = Report::new(
        "bounds",
        json!({ "shells": shells_json(&config), "l": l }),
    );

    let measure = config.attractive_measure();
    let bound = bargmann_bound(&measure, l)?;
    report.push_result("bargmann_bound", bound);
    report.push_result(
        "birman_schwinger_trace_at_zero",
        birman_schwinger_trace(&measure, l, 0.0)?,
    );

    if measure.is_empty() {
        report.push_count("kappa_minus", 0);
        report.push_verdict(
            "channel",
            &deltashell::Verdict::holds(
                deltashell::negcount::ID_SIGN_BOUND,
                "no attractive shells, so the count is zero",
            ),
        );
        return Ok(report);
    }

    let exact = count_bound_states_with_tol(&config, &channel, opts.tol)?;
    report.push_count("kappa_minus", exact.count);

    if l > -0.5 {
        let nc = necessary_conditions(&config, l)?;
        report.push_verdict("channel", &nc.max_count_possible);
        report.push_verdict("channel", &nc.positivity_possible);

        if config.all_attractive() {
            let mb = matrix_bargmann(&config, l)?;
            report.push_result("operator_norm", mb.operator_norm);
            report.push_verdict("channel", &mb.norm_check);
            report.push_verdict("channel", &mb.row_positivity);

            let weights = problem
                .gershgorin
                .as_ref()
                .and_then(|g| g.weights.clone())
                .unwrap_or_else(|| vec![1.0; config.len()]);
            let positive_set: Vec<usize> = problem
                .gershgorin
                .as_ref()
                .and_then(|g| g.positive_set.clone())
                .unwrap_or_default()
                .iter()
                .map(|&k| k.wrapping_sub(1))
                .collect();
            match gershgorin_classify(&config, l, &weights, &positive_set) {
                Ok(out) => {
                    report.push_verdict("channel", &out.verdict);
                    if let Some(k) = out.implied_count {
                        report.push_count("gershgorin_implied_count", k);
                    }
                }
                Err(e) => report.warn(format!("disk-separation test not applicable: {e}")),
            }
        } else {
            report.warn(
                "family has repulsive shells: norm certificate and disk tests need an all-attractive family",
            );
        }
        if l == 0.0 {
            let kk = kac_krein_check(&measure);
            report.push_result("kac_krein_sup", kk.sup_value);
            report.push_verdict("channel", &kk.sufficient);
            report.push_verdict("channel", &kk.necessary);
        }
    } else {
        report.warn("borderline channel: matrix-based certificates do not apply");
    }

    if opts.oracle {
        let oracle = oscillation_report(&config, l)?;
        report.push_count("oscillation_count", oracle.count);
        report.push_result("oracle_agrees", oracle.count == exact.count);
    }
    Ok(report)
}

/// Criterion verdicts for the channel operator and the full operator.
pub fn run_criteria(problem: &ProblemFile, _opts: &Options) -> Result<Report, CliError> {
    let config = problem.config_or_empty()?;
    let tail = problem.tail()?;
    let n = problem.space.map(|s| s.n).unwrap_or(3);

    let mut report = Report::new(
        "criteria",
        json!({
            "shells": shells_json(&config),
            "family": format!("{tail:?}"),
            "n": n,
        }),
    );

    report.push_verdict("channel/self-adjoint", &check_self_adjoint(&config, &tail));
    report.push_verdict("channel/semibounded", &check_semibounded(&config, &tail));
    match check_discrete(&config, &tail) {
        Ok(v) => report.push_verdict("channel/discrete", &v),
        Err(e) => report.push_verdict(
            "channel/discrete",
            &deltashell::Verdict::inconclusive("molchanov-window-divergence", e.to_string()),
        ),
    }
    report.push_verdict(
        "channel/continuous-spectrum",
        &check_continuous_spectrum(&config, &tail),
    );

    let lifted = multidim_verdicts(&config, &tail, n)?;
    report.push_verdict("space/self-adjoint", &lifted.self_adjoint);
    report.push_verdict("space/semibounded", &lifted.semibounded);
    report.push_verdict("space/discrete", &lifted.discrete);
    report.push_verdict("space/essential-spectrum", &lifted.essential_verdict);
    report.push_result(
        "n_pm",
        if lifted.deficiency_infinite {
            "infinite"
        } else {
            "equal (0,0) or settled by the verdicts above"
        },
    );
    report.push_result(
        "essential_spectrum",
        match lifted.essential_spectrum {
            EssentialSpectrum::PositiveHalfLine => "positive half line",
            EssentialSpectrum::Empty => "empty",
            EssentialSpectrum::Undetermined => "undetermined",
        },
    );
    Ok(report)
}

/// Total count over all channels with the per-channel ledger.
pub fn run_total(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    let config = problem.config()?;
    let n = problem.space()?;
    let opts = analysis(problem, opts);

    let (total, ledger) = total_bound_states_capped(&config, n, opts.lmax)?;
    let mut report = Report::new(
        "total",
        json!({ "shells": shells_json(&config), "n": n }),
    );
    report.push_count("kappa_minus_total", total);
    report.push_result(
        "ledger",
        serde_json::to_value(&ledger).expect("ledger serializes"),
    );
    report.push_result("truncation_l", ledger.truncation_ell);
    report.push_result("truncation_reason", ledger.truncation_reason.as_str());
    if ledger.entries.iter().any(|e| e.degenerate) {
        report.warn("some channels had numerically singular counting matrices; their exact-zero counts were used");
    }

    match aggregate_bounds(&config, n) {
        Ok(bounds) => {
            report.push_count("channel_sum_bound", bounds.per_channel_sum);
            report.push_result("closed_form_bound", bounds.closed_form);
            report.push_result("bound_formula", bounds.formula);
            if n == 2 && !config.attractive_measure().is_empty() {
                report.warn(
                    "the planar estimate weighs the borderline channel by its log mass and can undercount the critically coupled s-channel; the exact total above is authoritative",
                );
            }
        }
        Err(e) => report.warn(format!("aggregate bounds unavailable: {e}")),
    }
    Ok(report)
}

/// Rows of the ledger CSV (`l,l_eff,mult,kappa`).
pub fn ledger_csv(report: &Report) -> Option<String> {
    let ledger = report
        .results
        .iter()
        .find(|item| item.name == "ledger")?;
    let entries = ledger.value.get("entries")?.as_array()?;
    let mut out = String::from("l,l_eff,mult,kappa\n");
    for e in entries {
        out.push_str(&format!(
            "{},{},{},{}\n",
            e.get("ell")?.as_u64()?,
            e.get("l_eff")?.as_f64()?,
            e.get("multiplicity")?.as_u64()?,
            e.get("kappa")?.as_u64()?,
        ));
    }
    Some(out)
}

/// Grid sweep over one or two scalar parameters, counting per cell.
pub fn run_sweep(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    let config = problem.config()?;
    let (_, l) = effective_l_of(problem)?;
    let section = problem
        .sweep
        .as_ref()
        .ok_or_else(|| CliError::invalid("sweep needs a [sweep] section"))?;
    let opts = analysis(problem, opts);

    let x_values = axis_values(&section.x)?;
    let y_values = match &section.y {
        Some(axis) => Some((axis, axis_values(axis)?)),
        None => None,
    };

    let mut rows: Vec<Value> = Vec::new();
    let mut csv = String::new();
    match &y_values {
        Some((y_axis, _)) => {
            csv.push_str(&format!("{},{},kappa\n", axis_name(&section.x), axis_name(y_axis)));
        }
        None => csv.push_str(&format!("{},kappa\n", axis_name(&section.x))),
    }

    let mut warned = false;
    for &x in &x_values {
        let cells: Vec<f64> = match &y_values {
            Some((_, ys)) => ys.clone(),
            None => vec![f64::NAN],
        };
        for &y in &cells {
            let mut cfg_pairs: Vec<(f64, f64)> =
                config.shells().iter().map(|s| (s.radius, s.strength)).collect();
            let mut l_cell = l;
            apply_axis(&section.x, x, &mut cfg_pairs, &mut l_cell)?;
            if let Some((y_axis, _)) = &y_values {
                apply_axis(y_axis, y, &mut cfg_pairs, &mut l_cell)?;
            }
            let kappa = ShellConfig::normalize(&cfg_pairs)
                .ok()
                .and_then(|cfg| {
                    count_bound_states_with_tol(&cfg, &ChannelSpec::Raw(l_cell), opts.tol).ok()
                })
                .map(|o| o.count);
            let kappa_txt = match kappa {
                Some(k) => k.to_string(),
                None => {
                    if !warned {
                        warned = true;
                    }
                    "nan".to_string()
                }
            };
            match &y_values {
                Some(_) => {
                    csv.push_str(&format!("{x},{y},{kappa_txt}\n"));
                    rows.push(json!({ "x": x, "y": y, "kappa": kappa }));
                }
                None => {
                    csv.push_str(&format!("{x},{kappa_txt}\n"));
                    rows.push(json!({ "x": x, "kappa": kappa }));
                }
            }
        }
    }

    let mut report = Report::new(
        "sweep",
        json!({
            "shells": shells_json(&config),
            "l": l,
            "x": axis_name(&section.x),
            "y": y_values.as_ref().map(|(a, _)| axis_name(a)),
        }),
    );
    report.push_count("cells", rows.len());
    report.push_result("rows", Value::Array(rows));
    report.push_result("csv", csv);
    if warned {
        report.warn("some sweep cells were not evaluable (degenerate configuration) and carry kappa = nan");
    }
    Ok(report)
}

/// The CSV body of a sweep report.
pub fn sweep_csv(report: &Report) -> Option<String> {
    report
        .results
        .iter()
        .find(|item| item.name == "csv")
        .and_then(|item| item.value.as_str().map(str::to_string))
}

fn axis_name(axis: &SweepAxis) -> String {
    match axis.param.as_str() {
        "l" => "l".to_string(),
        other => format!("{}{}", other, axis.index.unwrap_or(1)),
    }
}

fn axis_values(axis: &SweepAxis) -> Result<Vec<f64>, CliError> {
    if axis.steps < 2 {
        return Err(CliError::invalid("[sweep] axes need at least 2 steps"));
    }
    let n = axis.steps;
    Ok((0..n)
        .map(|i| axis.from + (axis.to - axis.from) * i as f64 / (n - 1) as f64)
        .collect())
}

fn apply_axis(
    axis: &SweepAxis,
    value: f64,
    pairs: &mut [(f64, f64)],
    l: &mut f64,
) -> Result<(), CliError> {
    match axis.param.as_str() {
        "l" => {
            *l = value;
            Ok(())
        }
        kind @ ("strength" | "radius") => {
            let idx = axis.index.unwrap_or(1);
            if idx == 0 || idx > pairs.len() {
                return Err(CliError::invalid(format!(
                    "[sweep] shell index {idx} out of range (1..={})",
                    pairs.len()
                )));
            }
            if kind == "strength" {
                pairs[idx - 1].1 = value;
            } else {
                pairs[idx - 1].0 = value;
            }
            Ok(())
        }
        other => Err(CliError::invalid(format!(
            "[sweep] param must be strength, radius or l, got `{other}`"
        ))),
    }
}

/// Cross-checks the matrix count against the oscillation oracle and, when a
/// grid is configured, the finite-difference counter.
pub fn run_oracle_check(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    let config = problem.config()?;
    let (channel, l) = effective_l_of(problem)?;
    let opts = analysis(problem, opts);

    let mut report = Report::new(
        "oracle-check",
        json!({ "shells": shells_json(&config), "l": l }),
    );

    let exact = count_bound_states_with_tol(&config, &channel, opts.tol)?;
    let oracle = oscillation_report(&config, l)?;
    report.push_count("kappa_minus", exact.count);
    report.push_count("oscillation_count", oracle.count);
    let mut agree = exact.count == oracle.count;
    if oracle.boundary_zero {
        report.warn("a zero of the zero-energy solution sits on a shell radius (threshold configuration)");
        if let Some((lo, hi)) = oracle.perturbed {
            report.warn(format!(
                "strength perturbations of relative size 1e-9 change the oscillation count between {lo} and {hi}"
            ));
        }
    }

    if let (Some(length), Some(mesh)) = (opts.length, opts.mesh) {
        let fd = fd_count(&config, l, length, mesh)?;
        report.push_count("fd_count", fd);
        agree = agree && fd == exact.count;
    }
    report.push_result("agreement", agree);
    if !agree {
        report.warn("counters disagree; inspect the configuration for threshold degeneracy");
    }
    Ok(report)
}
