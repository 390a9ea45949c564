use serde::{Deserialize, Serialize};

/// Per-degree `K`-dimensions of a graded `P_0`-module over a window of
/// degrees starting at `start`.
///
/// When `finite_length` is set the window covers the whole support and
/// ends with a zero; `regularity` is the last degree with a nonzero value
/// (`None` for the zero module) and `length` the total dimension. When the
/// scan hit its degree cap both are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    pub start: i64,
    pub values: Vec<u64>,
    pub finite_length: bool,
    pub regularity: Option<i64>,
    pub length: Option<u64>,
}

impl HilbertFunction {
    /// A complete Hilbert function; `values` must end with a zero and be
    /// zero in every later degree.
    pub fn finite(start: i64, values: Vec<u64>) -> Self {
        debug_assert_eq!(values.last(), Some(&0));
        let regularity = values
            .iter()
            .rposition(|&v| v != 0)
            .map(|i| start + i as i64);
        let length = Some(values.iter().sum());
        HilbertFunction { start, values, finite_length: true, regularity, length }
    }

    /// A window that stopped at the degree cap.
    pub fn truncated(start: i64, values: Vec<u64>) -> Self {
        HilbertFunction { start, values, finite_length: false, regularity: None, length: None }
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    /// Value in degree `i`: zero below the window and, for finite length,
    /// above it. `None` past the end of a truncated window.
    pub fn value(&self, i: i64) -> Option<u64> {
        if i < self.start {
            return Some(0);
        }
        match self.values.get((i - self.start) as usize) {
            Some(&v) => Some(v),
            None if self.finite_length => Some(0),
            None => None,
        }
    }

    /// Coefficientwise sum over the common known window.
    pub fn sum<'a>(parts: impl IntoIterator<Item = &'a HilbertFunction>, start: i64) -> Self {
        let parts: Vec<&HilbertFunction> = parts.into_iter().collect();
        let finite = parts.iter().all(|p| p.finite_length);
        let end = if finite {
            parts.iter().map(|p| p.end()).max().unwrap_or(start).max(start)
        } else {
            parts.iter().filter(|p| !p.finite_length).map(|p| p.end()).min().unwrap()
        };
        let values: Vec<u64> = (start..=end)
            .map(|i| parts.iter().map(|p| p.value(i).unwrap_or(0)).sum())
            .collect();
        if finite {
            let mut values = values;
            if values.last() != Some(&0) {
                values.push(0);
            }
            HilbertFunction::finite(start, values)
        } else {
            HilbertFunction::truncated(start, values)
        }
    }
}
