//! Foldy–Wouthuysen assembly of Dirac eigenstates from SUSY partner pairs.

use num_complex::Complex64;

use super::params::{at_threshold, epsilon0, fw_mixing_coefficients, PhysicalParams};
use crate::angular::Sign;
use crate::consts::PARTNER_RESIDUAL_TOL;
use crate::error::{domain, Error, Result};
use crate::fields::{DiracSpinor, RadialFunction, SpinorField};

/// Dirac eigenstate for the SUSY eigenvalue `eps` on the given branch: `(c+ψ+, c-ψ-)` for `+`,
/// `(-c-ψ+, c+ψ-)` for `-`. At `eps = ε0` the state is `(ψ+, 0)` or `(0, ψ-)`.
///
/// When `d_dagger_psi_plus` (a grid evaluation of `D†ψ+`) is given, the partner relation
/// `D†ψ+ = sqrt(2mc²(ε - ε0)) ψ-` is checked to `PARTNER_RESIDUAL_TOL` relative.
pub fn assemble_dirac_state(
    psi_plus: &SpinorField,
    psi_minus: &SpinorField,
    eps: f64,
    branch: Sign,
    p: &PhysicalParams,
    d_dagger_psi_plus: Option<&RadialFunction>,
) -> Result<DiracSpinor> {
    let eps0 = epsilon0(p);
    if eps < eps0 && !at_threshold(eps, eps0) {
        return Err(domain("assemble_dirac_state", format!("eps = {eps} below ε0 = {eps0}")));
    }
    if at_threshold(eps, eps0) {
        let zero_minus = SpinorField::new(RadialFunction::zeros(*psi_plus.radial.grid()), psi_minus.ch);
        let zero_plus = SpinorField::new(RadialFunction::zeros(*psi_minus.radial.grid()), psi_plus.ch);
        return match branch {
            Sign::Plus => DiracSpinor::new(psi_plus.clone(), zero_minus),
            Sign::Minus => DiracSpinor::new(zero_plus, psi_minus.clone()),
        };
    }
    if let Some(dpsi) = d_dagger_psi_plus {
        let lambda = (2.0 * p.mc2() * (eps - eps0)).sqrt();
        let expected = psi_minus.radial.scaled(Complex64::new(lambda, 0.0));
        let residual = dpsi.sub(&expected)?.norm() / lambda;
        if !(residual <= PARTNER_RESIDUAL_TOL) {
            return Err(Error::InconsistentPair {
                residual,
                tolerance: PARTNER_RESIDUAL_TOL,
            });
        }
    }
    let (cp, cm) = fw_mixing_coefficients(eps, eps0)?;
    let (a, b) = match branch {
        Sign::Plus => (cp, cm),
        Sign::Minus => (-cm, cp),
    };
    DiracSpinor::new(
        SpinorField::new(psi_plus.radial.scaled(Complex64::new(a, 0.0)), psi_plus.ch),
        SpinorField::new(psi_minus.radial.scaled(Complex64::new(b, 0.0)), psi_minus.ch),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::Channel;
    use crate::fields::RadialGrid;

    fn pair() -> (SpinorField, SpinorField) {
        let g = RadialGrid::uniform(0.0, 20.0, 2001).unwrap();
        let a = RadialFunction::from_fn(g, |r| (-r * r / 2.0).exp()).unwrap().normalized().unwrap();
        let b = RadialFunction::from_fn(g, |r| r * (-r * r / 2.0).exp()).unwrap().normalized().unwrap();
        let ch = Channel::radial(1, Sign::Plus).unwrap();
        (SpinorField::new(a, ch), SpinorField::new(b, ch.flipped()))
    }

    #[test]
    fn branches_are_orthonormal() {
        let (a, b) = pair();
        let p = PhysicalParams::natural();
        let s = assemble_dirac_state(&a, &b, 2.5, Sign::Plus, &p, None).unwrap();
        let t = assemble_dirac_state(&a, &b, 2.5, Sign::Minus, &p, None).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() < 1e-10);
        assert!((t.norm_sqr() - 1.0).abs() < 1e-10);
        assert!(s.inner(&t).unwrap().norm() < 1e-12);
    }

    #[test]
    fn threshold_state_has_single_block() {
        let (a, b) = pair();
        let p = PhysicalParams::natural();
        let s = assemble_dirac_state(&a, &b, 0.5, Sign::Plus, &p, None).unwrap();
        assert_eq!(s.lower.radial.max_abs(), 0.0);
        assert_eq!(s.upper, a);
    }

    #[test]
    fn inconsistent_pair_is_rejected() {
        let (a, b) = pair();
        let p = PhysicalParams::natural();
        let r = assemble_dirac_state(&a, &b, 2.5, Sign::Plus, &p, Some(&a.radial));
        assert!(matches!(r, Err(Error::InconsistentPair { .. })));
    }
}
