use std::str::FromStr;

use hypercolor::{Error, Result};

/// Parses a comma list whose items are values or inclusive ranges `a..b`.
pub fn parse_grid<T>(spec: &str) -> Result<Vec<T>>
where
    T: FromStr + Copy + PartialOrd + TryFrom<u64> + Into<u64>,
{
    let bad = || Error::Config(format!("cannot parse grid `{spec}`"));
    let mut values = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let lo: T = lo.trim().parse().map_err(|_| bad())?;
                let hi: T = hi
                    .trim_start_matches('=')
                    .trim()
                    .parse()
                    .map_err(|_| bad())?;
                if lo > hi {
                    return Err(Error::Config(format!("empty range `{item}`")));
                }
                for v in lo.into()..=hi.into() {
                    values.push(T::try_from(v).map_err(|_| bad())?);
                }
            }
            None => values.push(item.parse().map_err(|_| bad())?),
        }
    }
    if values.is_empty() {
        return Err(Error::Config(format!("grid `{spec}` is empty")));
    }
    Ok(values)
}

/// Comma-separated floats.
pub fn parse_floats(spec: &str) -> Result<Vec<f64>> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Config(format!("cannot parse number `{s}`")))
        })
        .collect()
}
