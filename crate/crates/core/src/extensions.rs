//! Central extensions by a one-dimensional center `𝕂c`, with `c` appended
//! as the last basis vector.

use crate::algebra::{increasing_tuples, one_based, StructureConstants};
use crate::cohomology::{coboundary, coboundary_space, cyclic_lift, Coeffs, Cochain, Theory};
use crate::error::{Error, Result};
use crate::induce::{check_trace, induce_bracket, LinearForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralExtension {
    pub base: StructureConstants,
    pub cocycle: Cochain,
    /// Bracket on `A ⊕ 𝕂c`, dimension `d + 1`.
    pub total: StructureConstants,
}

fn theory_for(a: &StructureConstants) -> Result<Theory> {
    match a.arity() {
        2 => Ok(Theory::Lie),
        3 => Ok(Theory::TriLie),
        n => Err(Error::Arity { expected: 3, got: n }),
    }
}

fn check_form(a: &StructureConstants, omega: &Cochain) -> Result<Theory> {
    let theory = theory_for(a)?;
    if omega.theory() != theory || omega.coeffs() != Coeffs::Scalar || omega.degree() != 2 {
        return Err(Error::CochainShape(format!(
            "expected a scalar {} 2-cochain",
            theory.name()
        )));
    }
    if omega.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: omega.dim() });
    }
    if !omega.is_fully_skew() {
        return Err(Error::CochainShape("the form must be skew in all arguments".into()));
    }
    Ok(theory)
}

/// `[x₁,…,xₙ]_c = [x₁,…,xₙ] + ω(x₁,…,xₙ)c` and `[…,c]_c = 0`, without
/// checking that `ω` is a cocycle.
pub fn extension_bracket(a: &StructureConstants, omega: &Cochain) -> Result<StructureConstants> {
    check_form(a, omega)?;
    let d = a.dim();
    let entries = increasing_tuples(d, a.arity()).into_iter().map(|k| {
        let mut v = a.basis_bracket(&k);
        v.push(omega.eval_basis(&k).swap_remove(0));
        (k, v)
    });
    Ok(StructureConstants::from_increasing(a.arity(), d + 1, entries))
}

pub fn central_extend(a: &StructureConstants, omega: &Cochain) -> Result<CentralExtension> {
    check_form(a, omega)?;
    let defect = coboundary(a, omega)?;
    if let Some((k, _)) = defect.entries().next() {
        return Err(Error::NotACocycle { tuple: one_based(k) });
    }
    Ok(CentralExtension { base: a.clone(), cocycle: omega.clone(), total: extension_bracket(a, omega)? })
}

/// `ω_τ(x,y,z) = τ(x)ω(y,z) + τ(y)ω(z,x) + τ(z)ω(x,y)`.
pub fn omega_tau(tau: &LinearForm, omega: &Cochain) -> Result<Cochain> {
    if omega.coeffs() != Coeffs::Scalar {
        return Err(Error::CochainShape("expected a scalar cochain".into()));
    }
    cyclic_lift(omega, tau)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedExtension {
    /// Central extension of the Lie algebra by `ω`.
    pub lie: CentralExtension,
    /// Central extension of the induced 3-Lie algebra by `ω_τ`.
    pub trilie: CentralExtension,
    pub omega_tau: Cochain,
}

/// Extends `τ` by `τ(c) = 0`, induces from the extended Lie algebra, and
/// checks the result is the central extension of `A_τ` by `ω_τ`.
pub fn induce_extension(a: &StructureConstants, tau: &LinearForm, omega: &Cochain) -> Result<InducedExtension> {
    if a.arity() != 2 {
        return Err(Error::Arity { expected: 2, got: a.arity() });
    }
    check_trace(a, tau)?;
    let lie = central_extend(a, omega)?;
    let tau_bar = tau.extend_by_zero(a.dim() + 1);
    let from_extension = induce_bracket(&lie.total, &tau_bar)?;
    let w = omega_tau(tau, omega)?;
    let trilie = central_extend(&induce_bracket(a, tau)?, &w)?;
    if from_extension != trilie.total {
        return Err(Error::Contract("inducing does not commute with extending".into()));
    }
    Ok(InducedExtension { lie, trilie, omega_tau: w })
}

/// Whether `ω` is a coboundary, i.e. the extension it defines is trivial.
pub fn is_trivial_extension(a: &StructureConstants, omega: &Cochain) -> Result<bool> {
    let theory = check_form(a, omega)?;
    if let Some((k, _)) = coboundary(a, omega)?.entries().next() {
        return Err(Error::NotACocycle { tuple: one_based(k) });
    }
    coboundary_space(a, theory, Coeffs::Scalar, 2)?.contains(&omega.coords())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::testutil::sc;

    fn m4() -> StructureConstants {
        sc(2, 4, &[(&[2, 4], &[(3, 1)]), (&[3, 4], &[(3, 1)])])
    }

    fn scalar(theory: Theory, d: usize, entries: &[(&[usize], i64)]) -> Cochain {
        Cochain::from_assignments(
            theory,
            Coeffs::Scalar,
            2,
            d,
            entries.iter().map(|(k, c)| (k.to_vec(), vec![rat(*c)])),
        )
        .unwrap()
    }

    fn tau() -> LinearForm {
        LinearForm::coordinate(4, 0)
    }

    #[test]
    fn zero_form_gives_direct_sum() {
        let ext = central_extend(&m4(), &Cochain::zero(Theory::Lie, Coeffs::Scalar, 2, 4)).unwrap();
        assert_eq!(ext.total, sc(2, 5, &[(&[2, 4], &[(3, 1)]), (&[3, 4], &[(3, 1)])]));
        let r = induce_extension(&m4(), &tau(), &Cochain::zero(Theory::Lie, Coeffs::Scalar, 2, 4)).unwrap();
        assert!(r.omega_tau.is_zero());
        assert!(is_trivial_extension(&m4(), &Cochain::zero(Theory::Lie, Coeffs::Scalar, 2, 4)).unwrap());
    }

    #[test]
    fn lambda_example() {
        let lambda = scalar(Theory::Lie, 4, &[(&[1, 2], 1)]);
        let ext = central_extend(&m4(), &lambda).unwrap();
        let expected = sc(2, 5, &[(&[1, 2], &[(5, 1)]), (&[2, 4], &[(3, 1)]), (&[3, 4], &[(3, 1)])]);
        assert_eq!(ext.total, expected);

        let r = induce_extension(&m4(), &tau(), &lambda).unwrap();
        assert!(r.omega_tau.is_zero());
        assert_eq!(r.trilie.total, sc(3, 5, &[(&[1, 2, 4], &[(3, 1)]), (&[1, 3, 4], &[(3, 1)])]));
        assert!(!is_trivial_extension(&m4(), &lambda).unwrap());
        let induced = induce_bracket(&m4(), &tau()).unwrap();
        assert!(is_trivial_extension(&induced, &r.omega_tau).unwrap());
    }

    #[test]
    fn mu_example() {
        let mu = scalar(Theory::Lie, 4, &[(&[2, 4], 1), (&[3, 4], -1)]);
        let ext = central_extend(&m4(), &mu).unwrap();
        let expected = sc(2, 5, &[(&[2, 4], &[(3, 1), (5, 1)]), (&[3, 4], &[(3, 1), (5, -1)])]);
        assert_eq!(ext.total, expected);

        let r = induce_extension(&m4(), &tau(), &mu).unwrap();
        let expected =
            sc(3, 5, &[(&[1, 2, 4], &[(3, 1), (5, 1)]), (&[1, 3, 4], &[(3, 1), (5, -1)])]);
        assert_eq!(r.trilie.total, expected);
        let induced = induce_bracket(&m4(), &tau()).unwrap();
        assert!(!is_trivial_extension(&induced, &r.omega_tau).unwrap());
    }

    #[test]
    fn non_cocycle_is_rejected() {
        // ω₁₃ must vanish for a cocycle on this algebra
        let bad = scalar(Theory::Lie, 4, &[(&[1, 3], 1)]);
        assert!(matches!(central_extend(&m4(), &bad), Err(Error::NotACocycle { .. })));
        let total = extension_bracket(&m4(), &bad).unwrap();
        assert!(!total.verify_identity().is_ok());
    }

    #[test]
    fn trilie_form_must_be_skew() {
        let induced = induce_bracket(&m4(), &tau()).unwrap();
        let pair_only = scalar(Theory::TriLie, 4, &[(&[1, 2, 3], 1)]);
        assert!(matches!(central_extend(&induced, &pair_only), Err(Error::CochainShape(_))));
    }

    #[test]
    fn omega_tau_is_skew() {
        let mu = scalar(Theory::Lie, 4, &[(&[2, 4], 1), (&[3, 4], -1)]);
        let w = omega_tau(&tau(), &mu).unwrap();
        assert!(w.is_fully_skew());
        assert_eq!(w.eval_basis(&[3, 1, 0]), vec![rat(-1)]);
    }
}
