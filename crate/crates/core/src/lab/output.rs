use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::ScanRow;
use crate::error::{Error, Result};
use crate::stats::Estimate;
use crate::Color;

pub const CSV_HEADER: [&str; 17] = [
    "experiment",
    "family",
    "n",
    "r",
    "k",
    "sigma",
    "extra",
    "trials",
    "successes",
    "failures",
    "timeouts",
    "p_hat",
    "ci_low",
    "ci_high",
    "ref_value",
    "seed",
    "elapsed_ms",
];

pub const ESTIMATE_HEADER: [&str; 12] = [
    "family",
    "n",
    "r",
    "k",
    "trials",
    "successes",
    "failures",
    "timeouts",
    "p_hat",
    "ci_low",
    "ci_high",
    "seed",
];

/// Six significant digits, `%g` style: trailing zeros dropped, exponent
/// form below `1e-4` and from `1e6` on.
pub fn format_g(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (5 - exp) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn row_record(row: &ScanRow) -> [String; 17] {
    let e = &row.estimate;
    [
        row.experiment.clone(),
        row.family.clone(),
        row.n.to_string(),
        row.r.to_string(),
        row.k.to_string(),
        row.sigma.map(|s| s.to_string()).unwrap_or_default(),
        row.extra.clone(),
        e.trials().to_string(),
        e.successes.to_string(),
        e.failures.to_string(),
        e.timeouts.to_string(),
        format_g(e.p_hat),
        format_g(e.ci_low),
        format_g(e.ci_high),
        format_g(row.ref_value),
        row.seed.to_string(),
        row.elapsed_ms.to_string(),
    ]
}

/// Header plus one line per row.
pub fn write_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row_record(row))?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(rows: &[ScanRow], path: impl AsRef<Path>) -> Result<()> {
    let file = BufWriter::new(File::create(path)?);
    write_csv(rows, file)
}

/// Reads rows written by [`write_csv`]. Rates come back rounded to six
/// significant digits; pruning summaries are not serialized.
pub fn parse_csv<R: Read>(input: R) -> Result<Vec<ScanRow>> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers()?.clone();
    if !header.iter().eq(CSV_HEADER) {
        return Err(Error::parse(1, "unexpected CSV header"));
    }
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let line = i + 2;
        let field = |j: usize| record.get(j).unwrap_or("");
        fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
            s.parse()
                .map_err(|_| Error::parse(line, format!("bad number `{s}`")))
        }
        let trials: u64 = num(line, field(7))?;
        let estimate = Estimate {
            successes: num(line, field(8))?,
            failures: num(line, field(9))?,
            timeouts: num(line, field(10))?,
            p_hat: num(line, field(11))?,
            ci_low: num(line, field(12))?,
            ci_high: num(line, field(13))?,
        };
        if estimate.trials() != trials {
            return Err(Error::parse(line, "trials do not match the outcome counts"));
        }
        rows.push(ScanRow {
            experiment: field(0).to_string(),
            family: field(1).to_string(),
            n: num(line, field(2))?,
            r: num(line, field(3))?,
            k: num(line, field(4))?,
            sigma: match field(5) {
                "" => None,
                s => Some(num::<Color>(line, s)?),
            },
            extra: field(6).to_string(),
            estimate,
            ref_value: num(line, field(14))?,
            seed: num(line, field(15))?,
            elapsed_ms: num(line, field(16))?,
            prune: None,
        });
    }
    Ok(rows)
}

/// One `conflict estimate` result.
#[derive(Clone, Debug, PartialEq)]
pub struct EstimateRecord {
    pub family: String,
    pub n: usize,
    pub r: usize,
    pub k: Color,
    pub seed: u64,
    pub estimate: Estimate,
}

pub fn write_estimate_csv<W: Write>(records: &[EstimateRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(ESTIMATE_HEADER)?;
    for rec in records {
        let e = &rec.estimate;
        w.write_record([
            rec.family.clone(),
            rec.n.to_string(),
            rec.r.to_string(),
            rec.k.to_string(),
            e.trials().to_string(),
            e.successes.to_string(),
            e.failures.to_string(),
            e.timeouts.to_string(),
            format_g(e.p_hat),
            format_g(e.ci_low),
            format_g(e.ci_high),
            rec.seed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
