use crate::freealg::NcPoly;
use crate::rewrite::{RewriteError, RewriteSystem};
use crate::scalar::Scalar;
use thiserror::Error;

type Poly = NcPoly<Scalar>;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("identity has degree {degree} but the system is completed to {bound}; increase --bound")]
    BoundTooLow { degree: usize, bound: usize },
    #[error(transparent)]
    Rewrite(RewriteError),
}

impl From<RewriteError> for VerifyError {
    fn from(e: RewriteError) -> Self {
        match e {
            RewriteError::BoundExceeded { degree, bound } => VerifyError::BoundTooLow { degree, bound },
            e => VerifyError::Rewrite(e),
        }
    }
}

/// Outcome of checking `lhs ≡ rhs` modulo the ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub passed: bool,
    /// Maximal word length of `lhs - rhs`, 0 for an exact zero.
    pub degree: usize,
    /// Terms of `lhs - rhs` before reduction.
    pub terms: usize,
    pub reduction_steps: usize,
    /// Nonzero normal form on failure.
    pub witness: Option<Poly>,
}

pub fn verify_identity(
    lhs: &Poly,
    rhs: &Poly,
    sys: &RewriteSystem<Scalar>,
) -> Result<IdentityReport, VerifyError> {
    let diff = lhs.sub(rhs);
    let degree = diff.degree().unwrap_or(0);
    let (nf, steps) = sys.reduce_counted(&diff)?;
    let passed = nf.is_zero();
    Ok(IdentityReport {
        passed,
        degree,
        terms: diff.len(),
        reduction_steps: steps,
        witness: if passed { None } else { Some(nf) },
    })
}
