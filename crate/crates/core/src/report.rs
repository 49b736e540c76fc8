//! Measured-vs-predicted comparison and text/CSV/JSON rendering.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{require_positive, Result};
use crate::model::ResistanceBreakdown;
use crate::network::ValidationReport;
use crate::stats::{ContactDistribution, SweepResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonResult {
    pub predicted: f64,
    pub measured: f64,
    /// measured / predicted
    pub ratio: f64,
}

pub fn compare_measurement(predicted: f64, measured: f64) -> Result<ComparisonResult> {
    require_positive("predicted", predicted)?;
    require_positive("measured", measured)?;
    Ok(ComparisonResult {
        predicted,
        measured,
        ratio: measured / predicted,
    })
}

/// Formats `x` with `digits` significant figures, switching to exponent
/// notation outside [1e-3, 1e4).
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-3..4).contains(&mag) {
        let decimals = (digits as i32 - 1 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.prec$e}", prec = digits - 1)
    }
}

const SIG: usize = 4;

pub fn breakdown_table(b: &ResistanceBreakdown) -> String {
    let width = b
        .per_layer
        .iter()
        .map(|l| l.name.len())
        .chain([5])
        .max()
        .unwrap_or(5);
    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {:>11}  {:>7}", "layer", "R (ohm)", "share");
    for l in &b.per_layer {
        let share = 100.0 * l.resistance / b.total;
        let _ = writeln!(
            out,
            "{:<width$}  {:>11}  {:>6.2}%",
            l.name,
            format_sig(l.resistance, SIG),
            share
        );
    }
    let _ = writeln!(out, "{:<width$}  {:>11}", "total", format_sig(b.total, SIG));
    out
}

pub fn breakdown_csv(b: &ResistanceBreakdown) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["layer", "resistance_ohm"])?;
    for l in &b.per_layer {
        w.write_record([l.name.as_str(), &l.resistance.to_string()])?;
    }
    w.write_record(["total", &b.total.to_string()])?;
    Ok(into_string(w))
}

fn into_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is utf-8")
}

fn acf_column(p: &crate::stats::SweepPoint, acf_name: Option<&str>) -> f64 {
    acf_name.and_then(|n| p.breakdown.get(n)).unwrap_or(0.0)
}

/// Columns `parameter,value,acf_ohm,total_ohm` then one per layer, full
/// precision.
pub fn sweep_csv(sweep: &SweepResult, acf_name: Option<&str>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let layer_names: Vec<&str> = sweep
        .points
        .first()
        .map(|p| p.breakdown.per_layer.iter().map(|l| l.name.as_str()).collect())
        .unwrap_or_default();
    let mut header = vec!["parameter", "value", "acf_ohm", "total_ohm"];
    header.extend(&layer_names);
    w.write_record(&header)?;
    for p in &sweep.points {
        let mut row = vec![
            sweep.parameter.as_str().to_string(),
            p.value.to_string(),
            acf_column(p, acf_name).to_string(),
            p.total.to_string(),
        ];
        row.extend(p.breakdown.per_layer.iter().map(|l| l.resistance.to_string()));
        w.write_record(&row)?;
    }
    Ok(into_string(w))
}

pub fn sweep_table(sweep: &SweepResult, acf_name: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>16}  {:>11}  {:>11}", sweep.parameter.as_str(), "ACF (ohm)", "total (ohm)");
    for p in &sweep.points {
        let _ = writeln!(
            out,
            "{:>16}  {:>11}  {:>11}",
            format_sig(p.value, SIG),
            format_sig(acf_column(p, acf_name), SIG),
            format_sig(p.total, SIG)
        );
    }
    out
}

pub fn validation_table(report: &ValidationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<10}  {:>11}  {:>11}  {:>10}", "layer", "closed", "network", "rel.err");
    for l in &report.per_layer_detail {
        let _ = writeln!(
            out,
            "{:<10}  {:>11}  {:>11}  {:>10.3e}",
            l.name,
            format_sig(l.closed_form, SIG),
            format_sig(l.network_solve, SIG),
            l.relative_error
        );
    }
    let _ = writeln!(
        out,
        "{:<10}  {:>11}  {:>11}  {:>10.3e}",
        "total",
        format_sig(report.closed_form, SIG),
        format_sig(report.network_solve, SIG),
        report.relative_error
    );
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "{verdict} (tolerance {:e})", report.tolerance);
    out
}

pub fn validation_csv(report: &ValidationReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["layer", "closed_form_ohm", "network_ohm", "relative_error"])?;
    for l in &report.per_layer_detail {
        w.write_record([
            l.name.clone(),
            l.closed_form.to_string(),
            l.network_solve.to_string(),
            l.relative_error.to_string(),
        ])?;
    }
    w.write_record([
        "total".to_string(),
        report.closed_form.to_string(),
        report.network_solve.to_string(),
        report.relative_error.to_string(),
    ])?;
    Ok(into_string(w))
}

pub fn distribution_table(d: &ContactDistribution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trials      {}", d.trials);
    let _ = writeln!(out, "expected    {}", format_sig(d.expected, SIG));
    let _ = writeln!(out, "mean        {}", format_sig(d.mean, SIG));
    let _ = writeln!(out, "variance    {}", format_sig(d.variance(), SIG));
    let _ = writeln!(out, "std. error  {}", format_sig(d.poisson_standard_error(), SIG));
    let _ = writeln!(out, "range       {}..={}", d.min(), d.max());
    out
}

pub fn distribution_csv(d: &ContactDistribution) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["trial", "contacts"])?;
    for (i, c) in d.counts.iter().enumerate() {
        w.write_record([i.to_string(), c.to_string()])?;
    }
    Ok(into_string(w))
}

pub fn comparison_table(c: &ComparisonResult) -> String {
    format!(
        "predicted  {} ohm\nmeasured   {} ohm\nratio      {}\n",
        format_sig(c.predicted, SIG),
        format_sig(c.measured, SIG),
        format_sig(c.ratio, 3)
    )
}

pub fn comparison_csv(c: &ComparisonResult) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["predicted_ohm", "measured_ohm", "ratio"])?;
    w.write_record([c.predicted.to_string(), c.measured.to_string(), c.ratio.to_string()])?;
    Ok(into_string(w))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{equivalent_resistance, StackAssembly};

    #[test]
    fn ratios() {
        let c = compare_measurement(0.1645, 0.5).unwrap();
        assert!((c.ratio - 3.04).abs() <= 0.01, "{}", c.ratio);
        assert_eq!(compare_measurement(0.37, 0.37).unwrap().ratio, 1.0);
        assert_eq!(compare_measurement(0.06, 0.6).unwrap().ratio, 10.0);
        assert!(compare_measurement(0.0, 0.5).is_err());
        assert!(compare_measurement(0.1, -0.5).is_err());
    }

    #[test]
    fn significant_figures() {
        assert_eq!(format_sig(3.89747e-5, 4), "3.897e-5");
        assert_eq!(format_sig(0.16207, 4), "0.1621");
        assert_eq!(format_sig(4.0016e-4, 4), "4.002e-4");
        assert_eq!(format_sig(1.7368e-3, 4), "0.001737");
        assert_eq!(format_sig(21.6, 4), "21.60");
        assert_eq!(format_sig(12346.0, 4), "1.235e4");
        assert_eq!(format_sig(0.0, 4), "0");
    }

    #[test]
    fn table_lists_every_layer() {
        let b = equivalent_resistance(&StackAssembly::paper_default()).unwrap();
        let t = breakdown_table(&b);
        for name in ["Al", "UBM", "Au_bump", "ACF", "ITO", "total"] {
            assert!(t.contains(name), "{t}");
        }
        assert!(t.contains("3.897e-5"));
        let csv = breakdown_csv(&b).unwrap();
        assert_eq!(csv.lines().count(), 7);
    }
}
