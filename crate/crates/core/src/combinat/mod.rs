//! Inhomogeneous random words and their RSK shapes.

mod alphabet;
mod enumerate;
mod greene;
mod partition;
mod rsk;
mod word;

pub use alphabet::{AlphabetDistribution, SUM_TOLERANCE};
pub use enumerate::{
    exhaustive_shape_pmf, exhaustive_shape_pmf_exact, EXACT_ENUMERATION_LIMIT,
    FLOAT_ENUMERATION_LIMIT,
};
pub use greene::{greene_sums, greene_sums_brute, greene_sums_oracle};
pub use partition::{partitions, Partition};
pub use rsk::{longest_weakly_increasing, rsk, rsk_shape, ShapeInserter, TableauPair};
pub use word::{sample_word, Word};
pub(crate) use word::sample_letters;
