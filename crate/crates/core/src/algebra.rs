//! n-ary antisymmetric brackets given by structure constants.
//!
//! A bracket of arity `n` on a `d`-dimensional space is stored on strictly
//! increasing index tuples only; antisymmetry fills in the rest. Indices are
//! 0-based internally and 1-based (`e1, …, ed`) in everything user-facing.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, format_rational, is_zero_vector, unit_vector, Rational, Subspace};

/// Sorts `indices`, returning the sorted tuple and whether the permutation
/// was odd. `None` when an index repeats.
pub(crate) fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = indices.to_vec();
    let mut odd = false;
    // insertion sort; tuples have at most a handful of entries
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

/// All strictly increasing `k`-tuples drawn from `0..n`, in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

pub(crate) fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

/// Renders a coordinate vector as `e1 - 2 e3 + 1/2 e4`.
pub fn format_element(v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = *c < Rational::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            out.push_str(&format_rational(&magnitude));
            out.push(' ');
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Structure constants of an `arity`-ary skew-symmetric bracket.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    arity: usize,
    dim: usize,
    table: BTreeMap<Vec<usize>, Vec<Rational>>,
}

impl StructureConstants {
    pub fn abelian(arity: usize, dim: usize) -> Self {
        assert!(arity >= 2, "bracket arity must be at least 2");
        Self { arity, dim, table: BTreeMap::new() }
    }

    /// Builds a bracket from raw assignments `[e_{i1},…,e_{in}] = value` with
    /// 1-based, possibly unordered indices. Tuples are reordered with the
    /// sign of the permutation; zero values are dropped.
    pub fn canonicalize<I>(arity: usize, dim: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<Rational>)>,
    {
        let mut table = BTreeMap::new();
        for (tuple, value) in raw {
            if tuple.len() != arity {
                return Err(Error::Arity { expected: arity, got: tuple.len() });
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: value.len() });
            }
            if let Some(&index) = tuple.iter().find(|&&i| i == 0 || i > dim) {
                return Err(Error::IndexOutOfRange { index, dim });
            }
            let zero_based: Vec<usize> = tuple.iter().map(|i| i - 1).collect();
            let Some((key, odd)) = sort_with_sign(&zero_based) else {
                if is_zero_vector(&value) {
                    continue;
                }
                return Err(Error::Antisymmetry { tuple });
            };
            let value = if odd { value.into_iter().map(|x| -x).collect() } else { value };
            match table.entry(key) {
                Entry::Occupied(_) => return Err(Error::DuplicateDefinition { tuple }),
                Entry::Vacant(slot) => {
                    slot.insert(value);
                }
            }
        }
        table.retain(|_, v: &mut Vec<Rational>| !is_zero_vector(v));
        Ok(Self { arity: arity.max(2), dim, table })
    }

    /// Internal constructor from 0-based increasing keys. Zero entries are dropped.
    pub(crate) fn from_increasing(
        arity: usize,
        dim: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<Rational>)>,
    ) -> Self {
        let table = entries
            .into_iter()
            .filter(|(k, v)| {
                debug_assert!(k.len() == arity && k.windows(2).all(|w| w[0] < w[1]));
                !is_zero_vector(v)
            })
            .collect();
        Self { arity, dim, table }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// Nonzero entries keyed by 0-based increasing tuples.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Rational>)> {
        self.table.iter()
    }

    /// Bracket of basis vectors `e_{i1},…,e_{in}` (0-based, any order).
    pub fn basis_bracket(&self, indices: &[usize]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        self.accumulate_basis(indices, &Rational::one(), &mut out);
        out
    }

    fn accumulate_basis(&self, indices: &[usize], factor: &Rational, out: &mut [Rational]) {
        let Some((key, odd)) = sort_with_sign(indices) else { return };
        if let Some(v) = self.table.get(&key) {
            let f = if odd { -factor.clone() } else { factor.clone() };
            axpy(out, &f, v);
        }
    }

    /// Multilinear, antisymmetric evaluation of the bracket.
    pub fn bracket(&self, args: &[&[Rational]]) -> Result<Vec<Rational>> {
        if args.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, got: args.len() });
        }
        if let Some(a) = args.iter().find(|a| a.len() != self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, got: a.len() });
        }
        Ok(self.bracket_unchecked(args))
    }

    pub(crate) fn bracket_unchecked(&self, args: &[&[Rational]]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        if self.table.is_empty() {
            return out;
        }
        let supports: Vec<Vec<usize>> = args
            .iter()
            .map(|a| (0..a.len()).filter(|&i| !a[i].is_zero()).collect())
            .collect();
        let mut indices = Vec::with_capacity(self.arity);
        self.expand(args, &supports, &mut indices, Rational::one(), &mut out);
        out
    }

    fn expand(
        &self,
        args: &[&[Rational]],
        supports: &[Vec<usize>],
        indices: &mut Vec<usize>,
        coeff: Rational,
        out: &mut [Rational],
    ) {
        let slot = indices.len();
        if slot == args.len() {
            self.accumulate_basis(indices, &coeff, out);
            return;
        }
        for &i in &supports[slot] {
            if indices.contains(&i) {
                continue;
            }
            indices.push(i);
            self.expand(args, supports, indices, &coeff * &args[slot][i], out);
            indices.pop();
        }
    }

    /// Span of all bracket values, i.e. the derived subalgebra `[A,…,A]`.
    pub fn derived_span(&self) -> Subspace {
        Subspace::span(self.dim, self.table.values().cloned()).expect("values have length dim")
    }

    /// `Σ cᵢ·selfᵢ` on tables of matching shape.
    pub fn linear_combination(terms: &[(Rational, &StructureConstants)]) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::Contract("empty linear combination".into()));
        };
        let (arity, dim) = (first.arity, first.dim);
        let mut table: BTreeMap<Vec<usize>, Vec<Rational>> = BTreeMap::new();
        for (c, s) in terms {
            if s.arity != arity {
                return Err(Error::Arity { expected: arity, got: s.arity });
            }
            if s.dim != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: s.dim });
            }
            for (k, v) in &s.table {
                let slot = table.entry(k.clone()).or_insert_with(|| vec![Rational::zero(); dim]);
                axpy(slot, c, v);
            }
        }
        Ok(Self::from_increasing(arity, dim, table))
    }

    /// Checks the fundamental (Filippov) identity
    /// `[x₁…x_{n−1},[y₁…yₙ]] = Σᵢ [y₁…[x₁…x_{n−1},yᵢ]…yₙ]`
    /// on increasing basis tuples, which suffices by multilinearity.
    /// For arity 2 this is the Jacobi identity.
    pub fn verify_identity(&self) -> IdentityReport {
        let n = self.arity;
        let basis: Vec<Vec<Rational>> = (0..self.dim).map(|i| unit_vector(self.dim, i)).collect();
        let mut violations = Vec::new();
        if self.table.is_empty() {
            return IdentityReport { violations };
        }
        for x in increasing_tuples(self.dim, n - 1) {
            for y in increasing_tuples(self.dim, n) {
                let defect = self.fundamental_defect(
                    &x.iter().map(|&i| basis[i].as_slice()).collect::<Vec<_>>(),
                    &y.iter().map(|&i| basis[i].as_slice()).collect::<Vec<_>>(),
                );
                if !is_zero_vector(&defect) {
                    violations.push(IdentityViolation { x: one_based(&x), y: one_based(&y), defect });
                }
            }
        }
        IdentityReport { violations }
    }

    /// Left side minus right side of the fundamental identity.
    pub(crate) fn fundamental_defect(&self, x: &[&[Rational]], y: &[&[Rational]]) -> Vec<Rational> {
        let inner = self.bracket_unchecked(y);
        let mut args: Vec<&[Rational]> = x.to_vec();
        args.push(&inner);
        let mut defect = self.bracket_unchecked(&args);
        for i in 0..y.len() {
            let mut xa: Vec<&[Rational]> = x.to_vec();
            xa.push(y[i]);
            let moved = self.bracket_unchecked(&xa);
            let mut ya: Vec<&[Rational]> = y.to_vec();
            ya[i] = &moved;
            let term = self.bracket_unchecked(&ya);
            axpy(&mut defect, &-Rational::one(), &term);
        }
        defect
    }

    /// Raw assignments with 1-based indices, in key order.
    pub fn to_raw(&self) -> Vec<(Vec<usize>, Vec<Rational>)> {
        self.table.iter().map(|(k, v)| (one_based(k), v.clone())).collect()
    }
}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureConstants(arity {}, dim {}) {{{}}}", self.arity, self.dim, self)
    }
}

impl fmt::Display for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.table.is_empty() {
            return write!(f, "abelian");
        }
        let parts: Vec<String> = self
            .table
            .iter()
            .map(|(k, v)| {
                let args: Vec<String> = k.iter().map(|i| format!("e{}", i + 1)).collect();
                format!("[{}] = {}", args.join(","), format_element(v))
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    /// 1-based indices of the outer arguments `x₁…x_{n−1}`.
    pub x: Vec<usize>,
    /// 1-based indices of the inner arguments `y₁…yₙ`.
    pub y: Vec<usize>,
    pub defect: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub violations: Vec<IdentityViolation>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use proptest::prelude::*;

    pub(crate) fn vec_of(dim: usize, terms: &[(usize, i64)]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for &(i, c) in terms {
            v[i - 1] += rat(c);
        }
        v
    }

    fn m5() -> StructureConstants {
        StructureConstants::canonicalize(2, 4, [(vec![2, 4], vec_of(4, &[(3, 1)]))]).unwrap()
    }

    #[test]
    fn repeated_argument_gives_zero() {
        let a = m5();
        let e2 = unit_vector(4, 1);
        assert!(is_zero_vector(&a.bracket(&[&e2, &e2]).unwrap()));
    }

    #[test]
    fn m5_brackets() {
        let a = m5();
        let (e2, e4) = (unit_vector(4, 1), unit_vector(4, 3));
        assert_eq!(a.bracket(&[&e2, &e4]).unwrap(), vec_of(4, &[(3, 1)]));
        // [e2+e4, e4] = [e2,e4] + [e4,e4]
        let sum = vec_of(4, &[(2, 1), (4, 1)]);
        assert_eq!(a.bracket(&[&sum, &e4]).unwrap(), vec_of(4, &[(3, 1)]));
        assert_eq!(a.bracket(&[&e4, &e2]).unwrap(), vec_of(4, &[(3, -1)]));
    }

    #[test]
    fn wrong_argument_count() {
        let e1 = unit_vector(4, 0);
        assert_eq!(m5().bracket(&[&e1]), Err(Error::Arity { expected: 2, got: 1 }));
    }

    #[test]
    fn canonicalize_reorders_with_sign() {
        let a = StructureConstants::canonicalize(2, 4, [(vec![4, 2], vec_of(4, &[(3, -1)]))]).unwrap();
        assert_eq!(a, m5());
    }

    #[test]
    fn canonicalize_rejects_duplicates_and_repeats() {
        let dup = StructureConstants::canonicalize(
            2,
            4,
            [(vec![2, 4], vec_of(4, &[(3, 1)])), (vec![4, 2], vec_of(4, &[(3, -1)]))],
        );
        assert_eq!(dup, Err(Error::DuplicateDefinition { tuple: vec![4, 2] }));
        let rep = StructureConstants::canonicalize(3, 3, [(vec![1, 1, 2], vec_of(3, &[(3, 1)]))]);
        assert_eq!(rep, Err(Error::Antisymmetry { tuple: vec![1, 1, 2] }));
        let oob = StructureConstants::canonicalize(2, 3, [(vec![1, 4], vec_of(3, &[(3, 1)]))]);
        assert_eq!(oob, Err(Error::IndexOutOfRange { index: 4, dim: 3 }));
    }

    #[test]
    fn abelian_satisfies_identity() {
        for n in 2..5 {
            assert!(StructureConstants::abelian(n, 5).verify_identity().is_ok());
        }
    }

    #[test]
    fn jacobi_violation_detected() {
        // M⁵ plus [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=e3: the Jacobi sum on
        // (e1,e2,e3) is [e1,e3] + [e2,-e2] + [e3,e1] = e2 - e2 = 0 ... but
        // (e1,e2,e4) gives [e1,[e2,e4]] = [e1,e3] = e2 ≠ 0.
        let a = StructureConstants::canonicalize(
            2,
            4,
            [
                (vec![2, 4], vec_of(4, &[(3, 1)])),
                (vec![1, 2], vec_of(4, &[(1, 1)])),
                (vec![1, 3], vec_of(4, &[(2, 1)])),
                (vec![2, 3], vec_of(4, &[(3, 1)])),
            ],
        )
        .unwrap();
        let report = a.verify_identity();
        assert!(!report.is_ok());
        // x = e1, y = (e2, e4): [e1,[e2,e4]] - [[e1,e2],e4] - [e2,[e1,e4]] = e2 - [e1,e4] - 0 = e2
        let v = report.violations.iter().find(|v| v.x == vec![1] && v.y == vec![2, 4]).unwrap();
        assert_eq!(v.defect, vec_of(4, &[(2, 1)]));
    }

    #[test]
    fn display_and_formatting() {
        assert_eq!(m5().to_string(), "[e2,e4] = e3");
        assert_eq!(format_element(&vec_of(3, &[(1, -1), (3, 2)])), "-e1 + 2 e3");
        assert_eq!(format_element(&vec_of(3, &[])), "0");
    }

    fn random_algebra() -> impl Strategy<Value = (usize, StructureConstants)> {
        (2usize..=3, 3usize..=4).prop_flat_map(|(n, d)| {
            let keys = increasing_tuples(d, n);
            proptest::collection::vec(proptest::collection::vec(-2i64..=2, d), keys.len()).prop_map(
                move |vals| {
                    let raw = keys
                        .iter()
                        .zip(vals)
                        .map(|(k, v)| (one_based(k), v.into_iter().map(rat).collect()));
                    (d, StructureConstants::canonicalize(n, d, raw).unwrap())
                },
            )
        })
    }

    proptest! {
        #[test]
        fn bracket_is_antisymmetric(
            (d, a) in random_algebra(),
            args in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 3),
            swap in 0usize..2,
        ) {
            let n = a.arity();
            let args: Vec<Vec<Rational>> = args.iter().take(n).map(|v| v[..d].iter().map(|&x| rat(x)).collect()).collect();
            let refs: Vec<&[Rational]> = args.iter().map(|v| v.as_slice()).collect();
            let mut swapped = refs.clone();
            let swap = swap % (n - 1);
            swapped.swap(swap, swap + 1);
            let lhs = a.bracket(&refs).unwrap();
            let rhs: Vec<Rational> = a.bracket(&swapped).unwrap().into_iter().map(|x| -x).collect();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bracket_is_linear_in_each_slot(
            (d, a) in random_algebra(),
            args in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 4),
            alpha in -3i64..=3,
            beta in -3i64..=3,
            slot in 0usize..2,
        ) {
            let n = a.arity();
            let vecs: Vec<Vec<Rational>> = args.iter().map(|v| v[..d].iter().map(|&x| rat(x)).collect()).collect();
            let (u, w) = (&vecs[n], &vecs[0]);
            let mix: Vec<Rational> = u.iter().zip(w).map(|(p, q)| rat(alpha) * p + rat(beta) * q).collect();
            let at = |x: &[Rational]| {
                let mut refs: Vec<&[Rational]> = vecs[..n].iter().map(|v| v.as_slice()).collect();
                refs[slot] = x;
                a.bracket(&refs).unwrap()
            };
            let mut expected = vec![Rational::zero(); d];
            axpy(&mut expected, &rat(alpha), &at(u));
            axpy(&mut expected, &rat(beta), &at(w));
            prop_assert_eq!(at(&mix), expected);
        }

        #[test]
        fn identity_check_ignores_insertion_order((d, a) in random_algebra()) {
            let mut raw = a.to_raw();
            raw.reverse();
            let b = StructureConstants::canonicalize(a.arity(), d, raw).unwrap();
            prop_assert_eq!(a.verify_identity().is_ok(), b.verify_identity().is_ok());
            prop_assert_eq!(a, b);
        }
    }
}
