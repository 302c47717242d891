use crate::error::{Error, Result};

/// Taylor coefficients of `1/Γ(1+z)` about `z = 0`.
pub(crate) const RGAMMA1P: [f64; 31] = [
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
    1.7144063219273374334e-20,
    1.3373517304936931149e-22,
];

/// `1/Γ(1+z) − 1`, accurate for `|z| ≤ 1/2`.
fn rgamma1p_minus_one(z: f64) -> f64 {
    let mut acc = 0.0;
    for &c in RGAMMA1P[1..].iter().rev() {
        acc = acc * z + c;
    }
    acc * z
}

/// `ln Γ(1+z)` for `|z| ≤ 1/2`.
fn ln_gamma1p_small(z: f64) -> f64 {
    -rgamma1p_minus_one(z).ln_1p()
}

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn stirling(x: f64) -> f64 {
    // Bernoulli corrections B_{2k} / (2k (2k-1) x^{2k-1})
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
    ];
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for &c in C.iter().rev() {
        series = series * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + series * inv
}

/// Natural log of the gamma function for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::invalid("x", x, "log_gamma requires a finite x > 0"));
    }
    Ok(log_gamma_unchecked(x))
}

pub(crate) fn log_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        ln_gamma1p_small(x) - x.ln()
    } else if x <= 1.5 {
        ln_gamma1p_small(x - 1.0)
    } else if x <= 2.5 {
        let z = x - 2.0;
        z.ln_1p() + ln_gamma1p_small(z)
    } else if x < 12.0 {
        // shift down into [1.5, 2.5]
        let mut y = x;
        let mut prod = 1.0;
        while y > 2.5 {
            y -= 1.0;
            prod *= y;
        }
        let z = y - 2.0;
        prod.ln() + z.ln_1p() + ln_gamma1p_small(z)
    } else {
        stirling(x)
    }
}

/// `Γ(x)` for `x > 0` (overflows to infinity past `x ≈ 171.6`).
pub fn gamma(x: f64) -> Result<f64> {
    Ok(log_gamma(x)?.exp())
}
