use std::fmt::Write as _;

use super::BlockSpec;
use crate::{Error, Result};

/// Eigenvalue vector tagged with its block layout.
///
/// When `ordered_within_blocks` is set, values inside each block are
/// non-increasing; blocks are concatenated in block order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub blocks: BlockSpec,
    pub ordered_within_blocks: bool,
}

impl Spectrum {
    /// A single block holding `values` as given.
    pub fn unordered(values: Vec<f64>) -> Self {
        let blocks = BlockSpec::single(values.len().max(1));
        Self {
            values,
            blocks,
            ordered_within_blocks: false,
        }
    }

    /// Sorts each block descending.
    pub fn ordered(mut values: Vec<f64>, blocks: BlockSpec) -> Result<Self> {
        if blocks.total() != values.len() {
            return Err(Error::BlockMismatch(format!(
                "{} values for blocks {:?}",
                values.len(),
                blocks.dims()
            )));
        }
        for (start, &d) in blocks.offsets().iter().zip(blocks.dims()) {
            values[*start..start + d].sort_by(|a, b| b.total_cmp(a));
        }
        Ok(Self {
            values,
            blocks,
            ordered_within_blocks: true,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Checks the within-block ordering invariant.
    pub fn is_ordered(&self) -> bool {
        self.blocks
            .offsets()
            .iter()
            .zip(self.blocks.dims())
            .all(|(&s, &d)| self.values[s..s + d].windows(2).all(|w| w[0] >= w[1]))
    }

    /// CSV rows `block,index,value` (1-based block and within-block index).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("block,index,value\n");
        self.write_csv_rows(&mut out);
        out
    }

    pub(crate) fn write_csv_rows(&self, out: &mut String) {
        for (k, (&s, &d)) in self.blocks.offsets().iter().zip(self.blocks.dims()).enumerate() {
            for i in 0..d {
                let _ = writeln!(out, "{},{},{}", k + 1, i + 1, self.values[s + i]);
            }
        }
    }
}
