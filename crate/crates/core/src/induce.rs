//! Traces of a bracket and the induced bracket of one higher arity.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{increasing_tuples, one_based, StructureConstants};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, dot, format_rational, is_zero_vector, Rational, Subspace};

/// A linear form `τ(x) = Σ tᵢ xᵢ`, stored by its coefficient row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); dim] }
    }

    /// The coordinate form `x ↦ x_i` (0-based `i`).
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); dim];
        coeffs[i] = Rational::one();
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(dot(&self.coeffs, x))
    }

    /// Same form on a larger space, zero on the new coordinates.
    pub fn extend_by_zero(&self, dim: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dim, Rational::zero());
        Self { coeffs }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = crate::algebra::format_element(&self.coeffs).replace('e', "x");
        write!(f, "{s}")
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "LinearForm[{}]", parts.join(", "))
    }
}

/// The traces of a bracket: forms vanishing on every bracket value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSpace {
    pub space: Subspace,
}

impl TraceSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Canonical basis of the trace space.
    pub fn basis(&self) -> Vec<LinearForm> {
        self.space.basis_vectors().into_iter().map(LinearForm::new).collect()
    }

    pub fn contains(&self, tau: &LinearForm) -> Result<bool> {
        self.space.contains(tau.coeffs())
    }
}

pub fn trace_space(a: &StructureConstants) -> TraceSpace {
    TraceSpace { space: a.derived_span().annihilator() }
}

/// `Ok(())` when `τ` kills every bracket value, else the first failing tuple.
pub fn check_trace(a: &StructureConstants, tau: &LinearForm) -> Result<()> {
    if tau.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: tau.dim() });
    }
    for (k, val) in a.entries() {
        if !dot(tau.coeffs(), val).is_zero() {
            return Err(Error::NotATrace { tuple: one_based(k) });
        }
    }
    Ok(())
}

/// `φ_τ(x₁,…,x_{n+1}) = Σ_k (−1)^(k−1) τ(x_k) φ(x₁,…,x̂_k,…,x_{n+1})`.
/// For a Lie bracket this is the cyclic sum `τ(x)[y,z] + τ(y)[z,x] + τ(z)[x,y]`.
pub fn induce_bracket(a: &StructureConstants, tau: &LinearForm) -> Result<StructureConstants> {
    check_trace(a, tau)?;
    let d = a.dim();
    let mut entries = Vec::new();
    for tuple in increasing_tuples(d, a.arity() + 1) {
        let mut value = vec![Rational::zero(); d];
        for k in 0..tuple.len() {
            let t = &tau.coeffs()[tuple[k]];
            if t.is_zero() {
                continue;
            }
            let mut rest = tuple.clone();
            rest.remove(k);
            let inner = a.basis_bracket(&rest);
            let sign = if k % 2 == 0 { t.clone() } else { -t.clone() };
            axpy(&mut value, &sign, &inner);
        }
        entries.push((tuple, value));
    }
    Ok(StructureConstants::from_increasing(a.arity() + 1, d, entries))
}

/// One induced algebra per canonical basis trace. By linearity in `τ`,
/// the algebra induced by `Σ tᵢ τᵢ` is the matching combination of these.
pub fn induced_family(a: &StructureConstants) -> Vec<(LinearForm, StructureConstants)> {
    trace_space(a)
        .basis()
        .into_iter()
        .map(|tau| {
            let induced = induce_bracket(a, &tau).expect("basis trace");
            (tau, induced)
        })
        .collect()
}
