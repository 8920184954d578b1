use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{UniPoly, UpolyError};
use crate::numeric::rational::is_perfect_square;
use crate::Rational;

/// Exact square root `q` (positive leading coefficient) with `q^2 = p`.
///
/// Coefficients are solved from the top down over the rationals; any
/// integral square root of an integer polynomial is found this way, and the
/// final multiplication is the proof.
pub fn poly_square_root(p: &UniPoly) -> Result<UniPoly, UpolyError> {
    let d = p.degree().ok_or(UpolyError::ZeroPolynomial)?;
    if d % 2 == 1 {
        return Err(UpolyError::NotPerfectSquare);
    }
    let m = d / 2;
    let lead = is_perfect_square(&p.leading_coeff()).ok_or(UpolyError::NotPerfectSquare)?;
    let mut q: Vec<Rational> = vec![Rational::zero(); m + 1];
    q[m] = Rational::from_integer(lead);
    let two_lead = &q[m] * Rational::from_integer(BigInt::from(2));
    for k in (0..m).rev() {
        // Coefficient of x^(m+k): 2 q_m q_k + sum_{i+j=m+k, k<i,j<m} q_i q_j.
        let mut acc = Rational::from_integer(p.coeff(m + k));
        for i in (k + 1)..m {
            let j = m + k - i;
            if j > k && j < m {
                acc -= &q[i] * &q[j];
            }
        }
        q[k] = acc / &two_lead;
    }
    if q.iter().any(|c| !c.denom().is_one()) {
        return Err(UpolyError::NotPerfectSquare);
    }
    let root = UniPoly::new(q.into_iter().map(|c| c.to_integer()).collect(), p.var());
    if &(&root * &root) != p {
        return Err(UpolyError::NotPerfectSquare);
    }
    debug_assert!(root.leading_coeff().is_positive());
    Ok(root)
}
