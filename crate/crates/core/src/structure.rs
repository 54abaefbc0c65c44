//! Subalgebras, ideals, derived and central series, the center, and the
//! transfer statements between a Lie algebra and its induced 3-Lie algebra.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::algebra::{increasing_tuples, StructureConstants};
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vector, nullspace, solve, Matrix, Rational, Subspace};
use crate::induce::{check_trace, induce_bracket, LinearForm};

fn check_ambient(a: &StructureConstants, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: s.ambient_dim() });
    }
    Ok(())
}

fn require_lie(a: &StructureConstants) -> Result<()> {
    if a.arity() != 2 {
        return Err(Error::Arity { expected: 2, got: a.arity() });
    }
    Ok(())
}

/// Span of `[b₁,…,bₙ]` with each `bᵢ` a basis vector of `parts[i]`.
pub fn product_span(a: &StructureConstants, parts: &[&Subspace]) -> Result<Subspace> {
    if parts.len() != a.arity() {
        return Err(Error::Arity { expected: a.arity(), got: parts.len() });
    }
    for p in parts {
        check_ambient(a, p)?;
    }
    let bases: Vec<Vec<Vec<Rational>>> = parts.iter().map(|p| p.basis_vectors()).collect();
    let mut values = Vec::new();
    if a.is_abelian() || bases.iter().any(|b| b.is_empty()) {
        return Ok(Subspace::zero(a.dim()));
    }
    let mut choice = vec![0usize; bases.len()];
    loop {
        let args: Vec<&[Rational]> =
            choice.iter().enumerate().map(|(i, &c)| bases[i][c].as_slice()).collect();
        let value = a.bracket_unchecked(&args);
        if !is_zero_vector(&value) {
            values.push(value);
        }
        let mut slot = 0;
        loop {
            if slot == choice.len() {
                return Subspace::span(a.dim(), values);
            }
            choice[slot] += 1;
            if choice[slot] < bases[slot].len() {
                break;
            }
            choice[slot] = 0;
            slot += 1;
        }
    }
}

pub fn is_subalgebra(a: &StructureConstants, s: &Subspace) -> Result<bool> {
    check_ambient(a, s)?;
    let parts = vec![s; a.arity()];
    product_span(a, &parts)?.leq(s)
}

pub fn is_ideal(a: &StructureConstants, s: &Subspace) -> Result<bool> {
    check_ambient(a, s)?;
    ideal_product(a, s)?.leq(s)
}

/// `[S, A, …, A]`.
fn ideal_product(a: &StructureConstants, s: &Subspace) -> Result<Subspace> {
    let full = Subspace::full(a.dim());
    let mut parts = vec![&full; a.arity()];
    parts[0] = s;
    product_span(a, &parts)
}

/// Smallest ideal containing `s`.
pub fn ideal_closure(a: &StructureConstants, s: &Subspace) -> Result<Subspace> {
    let mut current = s.clone();
    loop {
        let next = current.sum(&ideal_product(a, &current)?)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Distinct ideals generated by nonempty subsets of the basis vectors.
pub fn basis_generated_ideals(a: &StructureConstants) -> Vec<Subspace> {
    let d = a.dim();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << d) {
        let indices: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        let ideal = ideal_closure(a, &Subspace::coordinate(d, &indices)).expect("matching dims");
        let key: Vec<Vec<Rational>> = ideal.basis_vectors();
        if seen.insert(key) {
            out.push(ideal);
        }
    }
    out
}

/// Heuristic simplicity test: `D¹ ≠ 0` and no proper nonzero ideal is
/// generated by a subset of the given basis. Not a decision procedure.
pub fn looks_simple(a: &StructureConstants) -> bool {
    if a.is_abelian() {
        return false;
    }
    let d = a.dim();
    basis_generated_ideals(a).iter().all(|i| i.is_zero() || i.dim() == d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealTransfer {
    /// `[A,A] ⊆ J` or `J ⊆ ker τ`.
    pub predicted: bool,
    /// `J` is an ideal of the induced 3-Lie algebra.
    pub direct: bool,
}

/// Compares the ideal criterion for the induced algebra with a direct check.
pub fn ideal_transfer(a: &StructureConstants, tau: &LinearForm, j: &Subspace) -> Result<IdealTransfer> {
    require_lie(a)?;
    check_trace(a, tau)?;
    if !is_ideal(a, j)? {
        return Err(Error::NotAnIdeal);
    }
    let derived_inside = a.derived_span().leq(j)?;
    let in_kernel = j.basis_vectors().iter().all(|b| tau.eval(b).map_or(false, |x| x.is_zero()));
    let induced = induce_bracket(a, tau)?;
    Ok(IdealTransfer { predicted: derived_inside || in_kernel, direct: is_ideal(&induced, j)? })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    Central,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Term 0 is the whole algebra. The list ends at the first zero term or
    /// at the first repeated term.
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    /// Least `p` with a zero term.
    pub class: Option<usize>,
}

impl SeriesReport {
    /// Term `p`, repeating the final term past the end of the list.
    pub fn term(&self, p: usize) -> &Subspace {
        &self.terms[p.min(self.terms.len() - 1)]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

fn series(a: &StructureConstants, kind: SeriesKind) -> SeriesReport {
    let full = Subspace::full(a.dim());
    let mut terms = vec![full.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = match kind {
            SeriesKind::Derived => product_span(a, &vec![last; a.arity()]),
            SeriesKind::Central => ideal_product(a, last),
        }
        .expect("matching dims");
        let repeated = next == *last;
        terms.push(next);
        if repeated {
            break;
        }
    }
    let class = terms.iter().position(Subspace::is_zero);
    SeriesReport { kind, terms, stabilized: true, class }
}

pub fn derived_series(a: &StructureConstants) -> SeriesReport {
    series(a, SeriesKind::Derived)
}

pub fn central_series(a: &StructureConstants) -> SeriesReport {
    series(a, SeriesKind::Central)
}

pub fn solvability_class(a: &StructureConstants) -> Option<usize> {
    derived_series(a).class
}

pub fn nilpotency_class(a: &StructureConstants) -> Option<usize> {
    central_series(a).class
}

/// `{x : [x, e_{i₁}, …, e_{i_{n−1}}] = 0 for every basis tuple}`.
pub fn center(a: &StructureConstants) -> Subspace {
    let d = a.dim();
    let mut rows = Vec::new();
    for tuple in increasing_tuples(d, a.arity() - 1) {
        let columns: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut idx = vec![i];
                idx.extend(&tuple);
                a.basis_bracket(&idx)
            })
            .collect();
        for q in 0..d {
            let row: Vec<Rational> = columns.iter().map(|c| c[q].clone()).collect();
            if !is_zero_vector(&row) {
                rows.push(row);
            }
        }
    }
    nullspace(&Matrix::from_rows(d, rows).expect("row width d"))
}

/// `D²(A_τ) = 0`.
pub fn check_induced_solvable(a: &StructureConstants, tau: &LinearForm) -> Result<bool> {
    require_lie(a)?;
    let induced = induce_bracket(a, tau)?;
    Ok(derived_series(&induced).term(2).is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesInclusion {
    /// `C^p(A_τ) ⊆ C^p(A)` for every `p`.
    pub holds: bool,
    /// Some `i` has `[i,x,y]_τ = [x,y]` for all `x, y`.
    pub equality_hypothesis: Option<Vec<Rational>>,
    /// `C^p(A_τ) = C^p(A)` for every `p`.
    pub equal: bool,
}

/// Solves `[i, e_j, e_k]_τ = [e_j, e_k]` for `i` over all basis pairs.
pub fn equality_witness(a: &StructureConstants, induced: &StructureConstants) -> Option<Vec<Rational>> {
    let d = a.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for pair in increasing_tuples(d, 2) {
        let columns: Vec<Vec<Rational>> = (0..d)
            .map(|m| induced.basis_bracket(&[m, pair[0], pair[1]]))
            .collect();
        let target = a.basis_bracket(&pair);
        for q in 0..d {
            rows.push(columns.iter().map(|c| c[q].clone()).collect::<Vec<_>>());
            rhs.push(target[q].clone());
        }
    }
    if rows.is_empty() {
        return Some(vec![Rational::zero(); d]);
    }
    let m = Matrix::from_rows(d, rows).expect("row width d");
    solve(&m, &rhs).expect("matching lengths")
}

/// Termwise comparison of the central series of `A_τ` and `A`.
pub fn check_series_inclusion(a: &StructureConstants, tau: &LinearForm) -> Result<SeriesInclusion> {
    require_lie(a)?;
    let induced = induce_bracket(a, tau)?;
    let lie = central_series(a);
    let tri = central_series(&induced);
    let len = lie.terms.len().max(tri.terms.len());
    let mut holds = true;
    let mut equal = true;
    for p in 0..len {
        holds &= tri.term(p).leq(lie.term(p))?;
        equal &= tri.term(p) == lie.term(p);
    }
    Ok(SeriesInclusion { holds, equality_hypothesis: equality_witness(a, &induced), equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::induce::induced_family;
    use crate::testutil::{sc, v};

    fn gl2() -> StructureConstants {
        sc(2, 4, &[(&[1, 2], &[(2, 2)]), (&[1, 3], &[(3, -2)]), (&[2, 3], &[(1, 1)])])
    }

    fn m4() -> StructureConstants {
        sc(2, 4, &[(&[2, 4], &[(3, 1)]), (&[3, 4], &[(3, 1)])])
    }

    fn m5() -> StructureConstants {
        sc(2, 4, &[(&[2, 4], &[(3, 1)])])
    }

    fn m8() -> StructureConstants {
        sc(2, 4, &[(&[1, 2], &[(2, 1)]), (&[3, 4], &[(4, 1)])])
    }

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::new(c.iter().map(|&x| rat(x)).collect())
    }

    fn coord(d: usize, one_based: &[usize]) -> Subspace {
        Subspace::coordinate(d, &one_based.iter().map(|i| i - 1).collect::<Vec<_>>())
    }

    #[test]
    fn product_span_examples() {
        let full = Subspace::full(4);
        let zero = Subspace::zero(4);
        assert!(product_span(&gl2(), &[&zero, &full]).unwrap().is_zero());
        assert_eq!(product_span(&m5(), &[&full, &full]).unwrap(), coord(4, &[3]));
        assert_eq!(product_span(&gl2(), &[&full, &full]).unwrap(), coord(4, &[1, 2, 3]));
        assert!(product_span(&gl2(), &[&full]).is_err());
    }

    #[test]
    fn ideals_and_subalgebras() {
        for a in [gl2(), m5(), m8()] {
            assert!(is_ideal(&a, &Subspace::zero(4)).unwrap());
            assert!(is_ideal(&a, &Subspace::full(4)).unwrap());
        }
        assert!(is_ideal(&m8(), &coord(4, &[1, 2])).unwrap());
        assert!(!is_ideal(&gl2(), &coord(4, &[2])).unwrap());
        assert!(is_subalgebra(&gl2(), &coord(4, &[1, 2])).unwrap());
    }

    #[test]
    fn lie_subalgebras_stay_subalgebras() {
        for a in [gl2(), m4(), m5(), m8()] {
            let fam = induced_family(&a);
            for mask in 1u32..16 {
                let idx: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
                let s = Subspace::coordinate(4, &idx);
                if !is_subalgebra(&a, &s).unwrap() {
                    continue;
                }
                for (_, t) in &fam {
                    assert!(is_subalgebra(t, &s).unwrap());
                }
            }
        }
    }

    #[test]
    fn ideal_transfer_examples() {
        let r = ideal_transfer(&m4(), &form(&[1, 1, 0, 1]), &coord(4, &[3])).unwrap();
        assert_eq!(r, IdealTransfer { predicted: true, direct: true });
        let r = ideal_transfer(&m8(), &form(&[1, 0, 1, 0]), &coord(4, &[2])).unwrap();
        assert_eq!(r, IdealTransfer { predicted: true, direct: true });
        let r = ideal_transfer(&m8(), &form(&[1, 0, 1, 0]), &coord(4, &[1, 2])).unwrap();
        assert_eq!(r, IdealTransfer { predicted: false, direct: false });
        let err = ideal_transfer(&gl2(), &form(&[0, 0, 0, 1]), &coord(4, &[2])).unwrap_err();
        assert_eq!(err, Error::NotAnIdeal);
    }

    #[test]
    fn series_examples() {
        let ab = StructureConstants::abelian(2, 3);
        assert_eq!(solvability_class(&ab), Some(1));
        assert_eq!(nilpotency_class(&ab), Some(1));
        assert_eq!(center(&ab), Subspace::full(3));

        let c = central_series(&m5());
        assert_eq!(c.terms[1], coord(4, &[3]));
        assert_eq!(c.class, Some(2));

        assert_eq!(center(&gl2()), coord(4, &[4]));
        assert_eq!(solvability_class(&gl2()), None);
        let d = derived_series(&gl2());
        assert_eq!(d.dims(), vec![4, 3, 3]);
        assert_eq!(nilpotency_class(&m8()), None);
    }

    #[test]
    fn three_lie_center() {
        let t = sc(3, 4, &[(&[2, 3, 4], &[(1, 1)])]);
        assert_eq!(center(&t), coord(4, &[1]));
    }

    #[test]
    fn induced_solvability() {
        assert!(check_induced_solvable(&StructureConstants::abelian(2, 3), &form(&[1, 0, 0])).unwrap());
        assert!(check_induced_solvable(&gl2(), &form(&[0, 0, 0, 1])).unwrap());
        let t = induce_bracket(&gl2(), &form(&[0, 0, 0, 1])).unwrap();
        let d = derived_series(&t);
        assert_eq!(d.terms[1], coord(4, &[1, 2, 3]));
        assert!(d.terms[2].is_zero());
    }

    #[test]
    fn series_inclusion_examples() {
        let r = check_series_inclusion(&m5(), &form(&[1, 0, 0, 0])).unwrap();
        assert!(r.holds);
        let t = induce_bracket(&m5(), &form(&[1, 0, 0, 0])).unwrap();
        assert_eq!(central_series(&t).terms[1], coord(4, &[3]));

        let r = check_series_inclusion(&gl2(), &form(&[0, 0, 0, 1])).unwrap();
        assert!(r.holds);
        // i = e4 gives [e4,x,y]_τ = [x,y], so the two series agree
        assert_eq!(r.equality_hypothesis, Some(v(4, &[(4, 1)])));
        assert!(r.equal);
    }

    #[test]
    fn equality_hypothesis_can_fail() {
        // M⁸ with τ = x1 + x3: [e3,e4] = e4 is never [i,e3,e4]_τ since
        // [i,e3,e4]_τ = τ(i)e4 + τ(e3)[e4,i] + τ(e4)[i,e3]
        let r = check_series_inclusion(&m8(), &form(&[1, 0, 1, 0])).unwrap();
        assert!(r.holds);
        if r.equality_hypothesis.is_some() {
            assert!(r.equal);
        }
    }

    #[test]
    fn closure_and_simplicity() {
        assert_eq!(ideal_closure(&gl2(), &coord(4, &[2])).unwrap(), coord(4, &[1, 2, 3]));
        let sl2 = sc(2, 3, &[(&[1, 2], &[(2, 2)]), (&[1, 3], &[(3, -2)]), (&[2, 3], &[(1, 1)])]);
        assert!(looks_simple(&sl2));
        assert!(!looks_simple(&gl2()));
        assert!(!looks_simple(&m5()));
    }

    #[test]
    fn nilpotency_transfers() {
        for a in [m5(), StructureConstants::abelian(2, 4)] {
            let p = nilpotency_class(&a).unwrap();
            for (_, t) in induced_family(&a) {
                assert!(nilpotency_class(&t).unwrap() <= p);
            }
        }
    }
}
