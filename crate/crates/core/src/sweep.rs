//! Tabulated parameter sweeps.
//!
//! A [`SweepSeries`] is a small, self-describing table: one named sweep
//! parameter, a fixed set of named value columns, and rows appended in
//! strictly increasing parameter order. Keeping the names on the data (and
//! enforcing the ordering at the point of insertion) lets the CSV layer
//! stay a dumb formatter.

use crate::error::{Error, Result};

/// One row of a sweep: the parameter and its computed values.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub parameter: f64,
    pub values: Vec<f64>,
}

/// An ordered table of sweep results.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSeries {
    parameter_name: String,
    value_names: Vec<String>,
    records: Vec<SweepRecord>,
}

impl SweepSeries {
    /// Empty series with the given column names.
    pub fn new(parameter_name: impl Into<String>, value_names: Vec<String>) -> Self {
        assert!(
            !value_names.is_empty(),
            "a series needs at least one value column"
        );
        Self {
            parameter_name: parameter_name.into(),
            value_names,
            records: Vec::new(),
        }
    }

    pub fn parameter_name(&self) -> &str {
        &self.parameter_name
    }

    pub fn value_names(&self) -> &[String] {
        &self.value_names
    }

    pub fn records(&self) -> &[SweepRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Appends a row; the parameter must exceed the previous row's and the
    /// number of values must match the declared columns.
    pub fn push_record(&mut self, parameter: f64, values: Vec<f64>) -> Result<()> {
        if values.len() != self.value_names.len() {
            return Err(Error::DimensionMismatch {
                expected: self.value_names.len(),
                got: values.len(),
            });
        }
        if !parameter.is_finite() {
            return Err(Error::InvalidRange(format!(
                "sweep parameter {parameter} is not finite"
            )));
        }
        if let Some(last) = self.records.last() {
            if parameter <= last.parameter {
                return Err(Error::InvalidRange(format!(
                    "sweep parameter {parameter} does not exceed previous {}",
                    last.parameter
                )));
            }
        }
        self.records.push(SweepRecord { parameter, values });
        Ok(())
    }

    /// All parameter values, in order.
    pub fn parameters(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.parameter).collect()
    }

    /// Copy of a value column by name, `None` if no such column exists.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.value_names.iter().position(|n| n == name)?;
        Some(self.records.iter().map(|r| r.values[k]).collect())
    }
}

/// `steps` evenly spaced points from `start` to `end`, both included.
///
/// The endpoints are returned exactly as given (no accumulated rounding),
/// and interior points use the non-accumulating form
/// `start + (end - start) * i / (steps - 1)`.
pub fn linear_grid(start: f64, end: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 2, "a grid needs at least two points");
    let range = end - start;
    let denom = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i == steps - 1 {
                end
            } else {
                start + range * (i as f64 / denom)
            }
        })
        .collect()
}
