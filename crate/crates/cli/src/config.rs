//! Resolution of raw command-line flags into validated run settings.

use anyhow::{bail, Context, Result};
use gauss_appell::rational::parse_rational;
use gauss_appell::sampling::sample_params;
use gauss_appell::{builtin_family, AppellFamily, FamilyName, HypergeomParams};

use crate::args::{FamilyArgs, ParamArgs, SamplingArgs};

/// Extra truncation order kept beyond the largest requested index.
pub const ORDER_HEADROOM: usize = 6;

pub fn resolve_family(args: &FamilyArgs) -> Result<AppellFamily> {
    let name: FamilyName = args.family.parse()?;
    if name == FamilyName::Custom {
        let list = args
            .custom
            .as_deref()
            .context("--family custom needs --custom A0,A1,...")?;
        let coeffs = list
            .split(',')
            .map(|s| parse_rational(s).map_err(anyhow::Error::from))
            .collect::<Result<Vec<_>>>()?;
        return Ok(AppellFamily::custom(coeffs));
    }
    if args.custom.is_some() {
        bail!("--custom only applies to --family custom");
    }
    Ok(builtin_family(&args.family, args.euler_convention)?)
}

/// `Some` when all of `--a --b --c` are given, `None` when none are.
pub fn resolve_params(args: &ParamArgs) -> Result<Option<HypergeomParams>> {
    match (&args.a, &args.b, &args.c) {
        (None, None, None) => Ok(None),
        (Some(a), Some(b), Some(c)) => Ok(Some(HypergeomParams::new(
            parse_rational(a)?,
            parse_rational(b)?,
            parse_rational(c)?,
        ))),
        _ => bail!("give all of --a, --b, --c or none of them"),
    }
}

pub fn require_params(args: &ParamArgs) -> Result<HypergeomParams> {
    resolve_params(args)?.context("this command needs concrete --a, --b and --c")
}

/// Explicit parameters when given, otherwise `trials` triples from `seed`.
pub fn parameter_set(
    params: Option<&HypergeomParams>,
    sampling: &SamplingArgs,
) -> Vec<HypergeomParams> {
    match params {
        Some(p) => vec![p.clone()],
        None => sample_params(sampling.seed, sampling.trials),
    }
}

/// Parses `5`, `0,2,4` or the inclusive range `0..4` (also `0..=4`).
pub fn parse_n_set(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: usize = lo
            .trim()
            .parse()
            .with_context(|| format!("bad range start in `{s}`"))?;
        let hi: usize = hi
            .trim()
            .parse()
            .with_context(|| format!("bad range end in `{s}`"))?;
        if lo > hi {
            bail!("empty range `{s}`");
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad index `{t}`"))
        })
        .collect()
}

/// Truncation order for a run; must leave `ORDER_HEADROOM` above `max_n`.
pub fn resolve_order(order: Option<usize>, max_n: usize) -> Result<usize> {
    let min = max_n + ORDER_HEADROOM;
    match order {
        None => Ok(min),
        Some(o) if o >= min => Ok(o),
        Some(o) => {
            bail!("--order {o} is below the required {min} (max n {max_n} + {ORDER_HEADROOM})")
        }
    }
}
