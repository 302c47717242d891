use crate::error::{Error, Result};

/// Generalized Laguerre polynomial `L_l^a(z)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k + 1 + a − z) L_k − (k + a) L_{k−1}`.
pub fn laguerre(l: u32, a: f64, z: f64) -> Result<f64> {
    check(a, z)?;
    Ok(laguerre_pair(l, a, z).0)
}

/// `(L_l^a(z), L_{l−1}^a(z))`, with `L_{−1} ≡ 0`.
pub(crate) fn laguerre_pair(l: u32, a: f64, z: f64) -> (f64, f64) {
    if l == 0 {
        return (1.0, 0.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - z;
    for k in 1..l {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + a - z) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// `d/dz L_l^a(z) = −L_{l−1}^{a+1}(z)`.
pub fn laguerre_derivative(l: u32, a: f64, z: f64) -> Result<f64> {
    check(a, z)?;
    if l == 0 {
        return Ok(0.0);
    }
    Ok(-laguerre_pair(l - 1, a + 1.0, z).0)
}

fn check(a: f64, z: f64) -> Result<()> {
    if !(a.is_finite() && a > -1.0) {
        return Err(Error::invalid("a", a, "Laguerre order must exceed -1"));
    }
    if !z.is_finite() {
        return Err(Error::invalid("z", z, "argument must be finite"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn low_orders() {
        assert_eq!(laguerre(0, 1.7, 5.3).unwrap(), 1.0);
        for &(a, z) in &[(0.0, 0.0), (1.5, 2.0), (-0.5, 7.25), (3.0, 0.1)] {
            assert!((laguerre(1, a, z).unwrap() - (1.0 + a - z)).abs() < 1e-15);
            let explicit = z * z / 2.0 - (a + 2.0) * z + (a + 1.0) * (a + 2.0) / 2.0;
            assert!((laguerre(2, a, z).unwrap() - explicit).abs() < 1e-13);
        }
        assert!((laguerre(2, 0.5, 1.0).unwrap() + 0.125).abs() < 1e-15);
    }

    #[test]
    fn value_at_origin_is_binomial() {
        // L_l^a(0) = Γ(l+a+1) / (l! Γ(a+1))
        for l in 0..15u32 {
            for &a in &[0.0, 0.5, 2.3] {
                let want = (crate::specfun::log_gamma(l as f64 + a + 1.0).unwrap()
                    - crate::specfun::log_gamma(l as f64 + 1.0).unwrap()
                    - crate::specfun::log_gamma(a + 1.0).unwrap())
                .exp();
                let got = laguerre(l, a, 0.0).unwrap();
                assert!((got - want).abs() <= 1e-12 * want, "l={l} a={a}");
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let (l, a, z) = (6, 1.3, 3.7);
        let h = 1e-5;
        let fd = (laguerre(l, a, z + h).unwrap() - laguerre(l, a, z - h).unwrap()) / (2.0 * h);
        assert!((laguerre_derivative(l, a, z).unwrap() - fd).abs() < 1e-7);
    }

    #[test]
    fn rejects_order_below_minus_one() {
        assert!(laguerre(3, -1.0, 1.0).is_err());
        assert!(laguerre(3, -2.5, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn recurrence_residual(l in 1u32..30, a in -0.9f64..5.0, z in 0.0f64..50.0) {
            let lm1 = laguerre(l - 1, a, z).unwrap();
            let l0 = laguerre(l, a, z).unwrap();
            let lp1 = laguerre(l + 1, a, z).unwrap();
            let lf = l as f64;
            let terms = [(lf + 1.0) * lp1, (2.0 * lf + 1.0 + a - z) * l0, (lf + a) * lm1];
            let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs())).max(1e-300);
            let residual = terms[0] - terms[1] + terms[2];
            prop_assert!(residual.abs() <= 1e-10 * scale);
        }
    }
}
