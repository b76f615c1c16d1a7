//! Rows for bound-scaling sweeps over a graph family.

use serde::Serialize;

use crate::boundary::boundary;
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::inequality::{inequality_report_from, Rational};

/// Bound checks that produce sweep rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SweepCheck {
    /// Observed `|∂G|` against `|V| / (2Δ·diam)`.
    Thm1,
    /// Smallest slice against the refined slice bound.
    Thm2,
    /// `|(∂G)*|` against the integer threshold `⌈log2(Δ + 2)⌉`.
    Mps,
}

impl SweepCheck {
    pub fn name(self) -> &'static str {
        match self {
            SweepCheck::Thm1 => "thm1",
            SweepCheck::Thm2 => "thm2",
            SweepCheck::Mps => "mps",
        }
    }

    pub fn parse_list(spec: &str) -> Result<Vec<SweepCheck>> {
        let all = [SweepCheck::Thm1, SweepCheck::Thm2, SweepCheck::Mps];
        if spec.trim() == "all" {
            return Ok(all.to_vec());
        }
        spec.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                all.into_iter()
                    .find(|c| c.name() == s)
                    .ok_or_else(|| Error::InvalidParams(format!("unknown sweep check {s:?}")))
            })
            .collect()
    }
}

/// One CSV row. Field order is the column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub diam: u32,
    pub boundary_size: usize,
    pub cejz_size: usize,
    pub bound_value_num: i64,
    pub bound_value_den: i64,
    pub margin_num: i64,
    pub margin_den: i64,
    pub pass: bool,
    pub check: &'static str,
}

/// Builds one instance of `family` and emits a row per requested check.
pub fn sweep_rows(family: &Family, seed: u64, checks: &[SweepCheck]) -> Result<Vec<SweepRow>> {
    let built = family.build(seed)?;
    let report = boundary(&built.graph)?;
    let bounds = inequality_report_from(&report)?;
    let row = |check: SweepCheck, bound: Rational, margin: Rational, pass: bool| SweepRow {
        family: family.name().to_string(),
        params: family.params(),
        n: bounds.n,
        m: bounds.m,
        delta: bounds.max_degree,
        diam: bounds.diameter,
        boundary_size: bounds.boundary_size,
        cejz_size: bounds.cejz_size,
        bound_value_num: *bound.numer(),
        bound_value_den: *bound.denom(),
        margin_num: *margin.numer(),
        margin_den: *margin.denom(),
        pass,
        check: check.name(),
    };
    Ok(checks
        .iter()
        .map(|&check| match check {
            SweepCheck::Thm1 => row(
                check,
                bounds.theorem1.bound,
                bounds.theorem1.margin,
                bounds.theorem1.pass,
            ),
            SweepCheck::Thm2 => {
                let tight = bounds.tightest_source();
                row(
                    check,
                    bounds.theorem2_refined_bound,
                    tight.check.margin,
                    bounds.theorem2.iter().all(|s| s.holds()),
                )
            }
            SweepCheck::Mps => row(
                check,
                Rational::from_integer(i64::from(bounds.mps.threshold)),
                Rational::from_integer(bounds.mps.margin),
                bounds.mps.pass,
            ),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rows() {
        let sizes: Vec<(usize, usize)> = [5, 10]
            .iter()
            .map(|&n| {
                let rows = sweep_rows(&Family::Grid(vec![n, n]), 0, &[SweepCheck::Thm1]).unwrap();
                (rows[0].boundary_size, rows[0].cejz_size)
            })
            .collect();
        assert_eq!(sizes, vec![(16, 4), (36, 4)]);
    }

    #[test]
    fn thm1_row_for_ten_by_ten() {
        let rows = sweep_rows(
            &Family::Grid(vec![10, 10]),
            0,
            &[SweepCheck::Thm1, SweepCheck::Mps],
        )
        .unwrap();
        let thm1 = &rows[0];
        assert_eq!((thm1.bound_value_num, thm1.bound_value_den), (25, 36));
        assert_eq!((thm1.margin_num, thm1.margin_den), (36 * 36 - 25, 36));
        assert!(thm1.pass);
        let mps = &rows[1];
        assert_eq!((mps.bound_value_num, mps.margin_num), (3, 1));
    }

    #[test]
    fn parse() {
        assert_eq!(SweepCheck::parse_list("all").unwrap().len(), 3);
        assert!(SweepCheck::parse_list("thm1,prop4").is_err());
    }
}
