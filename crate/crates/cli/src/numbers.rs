//! `numbers`: Appell numbers and log-derivative coefficients of a family.

use std::io::Write;

use anyhow::{bail, Result};
use gauss_appell::rational::format_rational;
use gauss_appell::{appell_numbers, beta_coefficients, Error};
use serde::Serialize;

use crate::args::{Format, NumbersArgs};
use crate::config::resolve_family;
use crate::gen::convention_label;

pub const BETA_UNDEFINED: &str = "undefined (A_0=0)";

#[derive(Debug, Serialize)]
pub struct NumbersRecord {
    pub family: String,
    pub convention: Option<String>,
    pub order: usize,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    pub beta: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn numbers_record(args: &NumbersArgs) -> Result<NumbersRecord> {
    let family = resolve_family(&args.family)?;
    let a = appell_numbers(&family, args.order).values;
    let (beta, note) = match beta_coefficients(&family, args.order) {
        Ok(b) => (Some(b.iter().map(format_rational).collect()), None),
        Err(Error::NotStrictAppell(_)) => (None, Some(format!("beta {BETA_UNDEFINED}"))),
        Err(e) => return Err(e.into()),
    };
    Ok(NumbersRecord {
        family: family.name().to_string(),
        convention: convention_label(&family),
        order: args.order,
        a: a.iter().map(format_rational).collect(),
        beta,
        note,
    })
}

pub fn cmd_numbers(args: &NumbersArgs, out: &mut dyn Write) -> Result<()> {
    let r = numbers_record(args)?;
    match args.format {
        Format::Text => {
            let label = match &r.convention {
                Some(c) => format!("{}({c})", r.family),
                None => r.family.clone(),
            };
            writeln!(out, "family: {label}")?;
            writeln!(out, "A: {}", r.a.join(","))?;
            match &r.beta {
                Some(b) => writeln!(out, "beta: {}", b.join(","))?,
                None => writeln!(out, "beta: {BETA_UNDEFINED}")?,
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *out, &r)?;
            out.write_all(b"\n")?;
        }
        Format::Csv => {
            writeln!(out, "k,A,beta")?;
            for (k, a) in r.a.iter().enumerate() {
                let b = r.beta.as_ref().map_or("", |b| b[k].as_str());
                writeln!(out, "{k},{a},{b}")?;
            }
        }
        other => bail!("numbers supports --format text|json|csv, not {other:?}"),
    }
    Ok(())
}
