//! `plot`: exact sampling on a uniform grid, rendered as CSV or SVG.

use std::fmt::Write as _;
use std::io::Write;

use anyhow::{bail, Result};
use gauss_appell::gauss_appell::gap_explicit;
use gauss_appell::rational::{
    format_rational, int, parse_rational, to_f64, to_significant_decimal,
};
use gauss_appell::{AppellFamily, HypergeomParams, Rational};

use crate::args::{Format, PlotArgs};
use crate::config::{require_params, resolve_family};

pub const SIGNIFICANT_DIGITS: usize = 12;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 56.0;
const TICKS: usize = 5;

/// `x_i = xmin + i (xmax - xmin) / (samples - 1)`.
pub fn grid(xmin: &Rational, xmax: &Rational, samples: usize) -> Result<Vec<Rational>> {
    if samples < 2 {
        bail!("--samples must be at least 2 (got {samples})");
    }
    if xmin >= xmax {
        bail!("--xmin must be below --xmax");
    }
    let step = (xmax - xmin) / int(samples as i64 - 1);
    Ok((0..samples).map(|i| xmin + &step * int(i as i64)).collect())
}

pub struct Curve {
    pub family: AppellFamily,
    pub params: HypergeomParams,
    pub n: usize,
    pub points: Vec<(Rational, Rational)>,
}

pub fn sample_curve(args: &PlotArgs) -> Result<Curve> {
    let family = resolve_family(&args.family)?;
    let params = require_params(&args.params)?;
    let xs = grid(
        &parse_rational(&args.xmin)?,
        &parse_rational(&args.xmax)?,
        args.samples,
    )?;
    let poly = gap_explicit(&family, &params, args.n)?;
    let points = xs.into_iter().map(|x| {
        let y = poly.evaluate(&x);
        (x, y)
    });
    Ok(Curve {
        family,
        params,
        n: args.n,
        points: points.collect(),
    })
}

pub fn render_csv(curve: &Curve) -> String {
    let mut s = String::from("x,y\n");
    for (x, y) in &curve.points {
        let _ = writeln!(
            s,
            "{},{}",
            to_significant_decimal(x, SIGNIFICANT_DIGITS),
            to_significant_decimal(y, SIGNIFICANT_DIGITS)
        );
    }
    s
}

pub fn title(curve: &Curve) -> String {
    let p = &curve.params;
    format!(
        "{} n={} (a,b;c)=({},{};{})",
        curve.family.name(),
        curve.n,
        format_rational(&p.a),
        format_rational(&p.b),
        format_rational(&p.c)
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn render_svg(curve: &Curve) -> String {
    let xs: Vec<f64> = curve.points.iter().map(|(x, _)| to_f64(x)).collect();
    let ys: Vec<f64> = curve.points.iter().map(|(_, y)| to_f64(y)).collect();
    let (x0, x1) = (xs[0], xs[xs.len() - 1]);
    let mut y0 = ys.iter().copied().fold(f64::INFINITY, f64::min);
    let mut y1 = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if y1 - y0 < 1e-12 {
        y0 -= 1.0;
        y1 += 1.0;
    } else {
        let pad = 0.05 * (y1 - y0);
        y0 -= pad;
        y1 += pad;
    }
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);
    let axis_y = if (y0..=y1).contains(&0.0) {
        py(0.0)
    } else {
        HEIGHT - MARGIN
    };
    let axis_x = if (x0..=x1).contains(&0.0) {
        px(0.0)
    } else {
        MARGIN
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="15">{}</text>"#,
        WIDTH / 2.0,
        escape(&title(curve))
    );
    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN:.2}" y1="{axis_y:.2}" x2="{:.2}" y2="{axis_y:.2}" stroke="black"/>"#,
        WIDTH - MARGIN
    );
    let _ = writeln!(
        s,
        r#"<line x1="{axis_x:.2}" y1="{MARGIN:.2}" x2="{axis_x:.2}" y2="{:.2}" stroke="black"/>"#,
        HEIGHT - MARGIN
    );
    for i in 0..=TICKS {
        let t = i as f64 / TICKS as f64;
        let (xv, yv) = (x0 + t * (x1 - x0), y0 + t * (y1 - y0));
        let (tx, ty) = (px(xv), py(yv));
        let _ = writeln!(
            s,
            r#"<line x1="{tx:.2}" y1="{:.2}" x2="{tx:.2}" y2="{:.2}" stroke="black"/><text x="{tx:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="11">{}</text>"#,
            axis_y - 4.0,
            axis_y + 4.0,
            axis_y + 16.0,
            tick_label(xv)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{:.2}" y2="{ty:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end" font-family="sans-serif" font-size="11">{}</text>"#,
            axis_x - 4.0,
            axis_x + 4.0,
            axis_x - 6.0,
            ty + 4.0,
            tick_label(yv)
        );
    }
    let pts: Vec<String> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| format!("{:.2},{:.2}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
        pts.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

pub fn cmd_plot(args: &PlotArgs, out: &mut dyn Write) -> Result<()> {
    let body = match args.format {
        Format::Csv => render_csv(&sample_curve(args)?),
        Format::Svg => render_svg(&sample_curve(args)?),
        other => bail!("plot supports --format csv|svg, not {other:?}"),
    };
    out.write_all(body.as_bytes())?;
    Ok(())
}
