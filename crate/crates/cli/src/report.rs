//! CSV and SVG emission for sweep results.
//!
//! The CSV header names every column, units embedded in the names; rows
//! follow the sweep-value order of the result. The SVG is a static line
//! chart with one series per (parameter combination, method).

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use crate::experiment::{MethodStats, SweepResult, SweepVariable};

fn fmt_value(x: f64) -> String {
    // Sweep values round-trip exactly.
    format!("{x}")
}

fn fmt_stat(x: f64) -> String {
    format!("{x:.6}")
}

fn column_prefix(label: &str) -> String {
    if label.is_empty() {
        String::new()
    } else {
        format!("{label}_")
    }
}

/// Renders the result as CSV text.
pub fn csv_string(result: &SweepResult) -> String {
    let mut header: Vec<String> = vec![result.variable.column_name().to_string()];
    for label in &result.series_labels {
        let p = column_prefix(label);
        header.push(format!("{p}mean_covered"));
        header.push(format!("{p}std_covered"));
        header.push(format!("{p}mean_altitude_m"));
        header.push(format!("{p}mean_eirp_dbm"));
        if result.variable == SweepVariable::Beamwidth {
            header.push(format!("{p}tx_power_dbm"));
        }
        let has_baselines = result.rows.first().is_some_and(|r| {
            r.per_series
                .first()
                .is_some_and(|s| s.min_sum_distance.is_some())
        });
        if has_baselines {
            header.push(format!("{p}minsum_mean_covered"));
            header.push(format!("{p}minsum_std_covered"));
            header.push(format!("{p}random_mean_covered"));
            header.push(format!("{p}random_std_covered"));
        }
    }
    header.push("trials".to_string());

    let mut out = header.join(",");
    out.push('\n');
    for row in &result.rows {
        let mut cells: Vec<String> = vec![fmt_value(row.sweep_value)];
        for stats in &row.per_series {
            cells.push(fmt_stat(stats.optimal.mean_covered));
            cells.push(fmt_stat(stats.optimal.std_covered));
            cells.push(fmt_stat(stats.optimal.mean_altitude_m));
            cells.push(fmt_stat(stats.optimal.mean_eirp_dbm));
            if result.variable == SweepVariable::Beamwidth {
                cells.push(fmt_stat(stats.tx_power_dbm.unwrap_or(f64::NAN)));
            }
            if let Some(b) = &stats.min_sum_distance {
                cells.push(fmt_stat(b.mean_covered));
                cells.push(fmt_stat(b.std_covered));
            }
            if let Some(b) = &stats.random {
                cells.push(fmt_stat(b.mean_covered));
                cells.push(fmt_stat(b.std_covered));
            }
        }
        cells.push(result.trials.to_string());
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Writes the CSV; errors carry the path.
pub fn emit_csv(result: &SweepResult, path: impl AsRef<Path>) -> io::Result<()> {
    let path = path.as_ref();
    fs::write(path, csv_string(result))
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

struct ChartSeries {
    name: String,
    dashed: bool,
    points: Vec<(f64, f64)>,
}

fn chart_series(result: &SweepResult) -> Vec<ChartSeries> {
    let mut series = Vec::new();
    for (si, label) in result.series_labels.iter().enumerate() {
        let name = |method: &str| {
            if label.is_empty() {
                method.to_string()
            } else {
                format!("{label} {method}")
            }
        };
        let collect = |pick: fn(&crate::experiment::SeriesStats) -> Option<MethodStats>| {
            result
                .rows
                .iter()
                .filter_map(|r| pick(&r.per_series[si]).map(|m| (r.sweep_value, m.mean_covered)))
                .collect::<Vec<_>>()
        };
        series.push(ChartSeries {
            name: name("optimal"),
            dashed: false,
            points: collect(|s| Some(s.optimal)),
        });
        let minsum = collect(|s| s.min_sum_distance);
        if !minsum.is_empty() {
            series.push(ChartSeries {
                name: name("min sum distance"),
                dashed: true,
                points: minsum,
            });
        }
        let random = collect(|s| s.random);
        if !random.is_empty() {
            series.push(ChartSeries {
                name: name("random"),
                dashed: true,
                points: random,
            });
        }
    }
    series
}

/// Renders the result as a static SVG line chart.
pub fn svg_string(result: &SweepResult) -> String {
    let width = 880.0;
    let height = 560.0;
    let (ml, mr, mt, mb) = (75.0, 30.0, 40.0, 65.0);
    let plot_w = width - ml - mr;
    let plot_h = height - mt - mb;

    let series = if result.rows.is_empty() {
        Vec::new()
    } else {
        chart_series(result)
    };
    let xs: Vec<f64> = result.rows.iter().map(|r| r.sweep_value).collect();
    let (x_min, x_max) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
            (lo.min(*x), hi.max(*x))
        });
    let y_max = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.1))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let x_span = if x_max > x_min { x_max - x_min } else { 1.0 };
    let sx = |x: f64| ml + (x - x_min) / x_span * plot_w;
    let sy = |y: f64| mt + plot_h - y / (y_max * 1.05) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\" font-size=\"13\">"
    );
    let _ = writeln!(
        svg,
        "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    );
    // Axes.
    let _ = writeln!(
        svg,
        "<line x1=\"{ml}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        mt + plot_h,
        ml + plot_w,
        mt + plot_h
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{ml}\" y1=\"{mt}\" x2=\"{ml}\" y2=\"{}\" stroke=\"black\"/>",
        mt + plot_h
    );
    // Ticks.
    if !result.rows.is_empty() {
        for k in 0..=5 {
            let x = x_min + x_span * k as f64 / 5.0;
            let px = sx(x);
            let _ = writeln!(
                svg,
                "<line x1=\"{px}\" y1=\"{}\" x2=\"{px}\" y2=\"{}\" stroke=\"black\"/>\
                 <text x=\"{px}\" y=\"{}\" text-anchor=\"middle\">{x:.1}</text>",
                mt + plot_h,
                mt + plot_h + 6.0,
                mt + plot_h + 22.0
            );
            let y = y_max * 1.05 * k as f64 / 5.0;
            let py = sy(y);
            let _ = writeln!(
                svg,
                "<line x1=\"{}\" y1=\"{py}\" x2=\"{ml}\" y2=\"{py}\" stroke=\"black\"/>\
                 <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{y:.1}</text>",
                ml - 6.0,
                ml - 10.0,
                py + 4.0
            );
        }
    }
    // Axis labels.
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
        ml + plot_w / 2.0,
        height - 18.0,
        result.variable.axis_label()
    );
    let _ = writeln!(
        svg,
        "<text x=\"20\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {})\">\
         mean covered UAV users</text>",
        mt + plot_h / 2.0,
        mt + plot_h / 2.0
    );
    // Series.
    for (i, s) in series.iter().enumerate() {
        if s.points.is_empty() {
            continue;
        }
        let color = PALETTE[i % PALETTE.len()];
        let dash = if s.dashed {
            " stroke-dasharray=\"6 4\""
        } else {
            ""
        };
        let path: Vec<String> = s
            .points
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", sx(*x), sy(*y)))
            .collect();
        let _ = writeln!(
            svg,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"{dash} points=\"{}\"/>",
            path.join(" ")
        );
        for (x, y) in &s.points {
            let _ = writeln!(
                svg,
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>",
                sx(*x),
                sy(*y)
            );
        }
        // Legend entry.
        let ly = mt + 8.0 + i as f64 * 18.0;
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{color}\" \
             stroke-width=\"2\"{dash}/><text x=\"{}\" y=\"{}\">{}</text>",
            ml + plot_w - 180.0,
            ml + plot_w - 150.0,
            ml + plot_w - 144.0,
            ly + 4.0,
            s.name
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Writes the SVG; errors carry the path.
pub fn emit_svg(result: &SweepResult, path: impl AsRef<Path>) -> io::Result<()> {
    let path = path.as_ref();
    fs::write(path, svg_string(result))
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}
