use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::exactlin::{rat, Rational};

/// Vector with 1-based sparse integer entries.
pub fn v(dim: usize, terms: &[(usize, i64)]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for &(i, c) in terms {
        out[i - 1] += rat(c);
    }
    out
}

/// Bracket table from 1-based tuples with sparse integer values.
pub fn sc(arity: usize, dim: usize, entries: &[(&[usize], &[(usize, i64)])]) -> StructureConstants {
    StructureConstants::canonicalize(
        arity,
        dim,
        entries.iter().map(|(k, val)| (k.to_vec(), v(dim, val))),
    )
    .unwrap()
}
