//! Closed-form bin integrals and the sine integral.

use std::f64::consts::FRAC_PI_2;

// 8-point Gauss-Legendre on [-1, 1].
const GL_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// Gauss-Legendre over `[a, b]` split into `panels` equal pieces.
pub(crate) fn gauss_legendre(a: f64, b: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        let half = 0.5 * h;
        let mut s = 0.0;
        for (x, w) in GL_NODES.iter().zip(GL_WEIGHTS) {
            s += w * (f(mid - half * x) + f(mid + half * x));
        }
        total += half * s;
    }
    total
}

/// `Si(x) = ∫_0^x sin(u)/u du`.
pub fn sine_integral(x: f64) -> f64 {
    if x < 0.0 {
        return -sine_integral(-x);
    }
    if x == 0.0 {
        return 0.0;
    }
    if x <= 40.0 {
        let panels = x.ceil() as usize;
        gauss_legendre(0.0, x, panels, |u| u.sin() / u)
    } else {
        // Si(x) = π/2 - f(x)cos x - g(x)sin x with asymptotic auxiliary
        // series; at x > 40 the smallest term is below 1e-17.
        let inv2 = 1.0 / (x * x);
        let (mut f, mut g) = (0.0, 0.0);
        let mut tf = 1.0 / x;
        let mut tg = inv2;
        for k in 0..20 {
            f += tf;
            g += tg;
            let kf = (2 * k + 1) as f64;
            let kg = (2 * k + 2) as f64;
            tf *= -kf * (kf + 1.0) * inv2;
            tg *= -kg * (kg + 1.0) * inv2;
            if tf.abs() < 1e-18 * f.abs() && tg.abs() < 1e-18 * g.abs() {
                break;
            }
        }
        FRAC_PI_2 - f * x.cos() - g * x.sin()
    }
}

/// `∫_a^b cos(tτ) dτ`.
#[inline]
pub fn cos_integral(t: f64, a: f64, b: f64) -> f64 {
    if t == 0.0 {
        return b - a;
    }
    let half = 0.5 * (b - a);
    2.0 * (t * 0.5 * (a + b)).cos() * (t * half).sin() / t
}

/// `1 - sin(x)/x` without cancellation near zero.
#[inline]
fn one_minus_sinc(x: f64) -> f64 {
    if x.abs() < 1e-3 {
        let x2 = x * x;
        x2 / 6.0 - x2 * x2 / 120.0
    } else {
        1.0 - x.sin() / x
    }
}

/// `∫_a^b sin²(ts) ds`.
#[inline]
pub fn sin2_integral(t: f64, a: f64, b: f64) -> f64 {
    // ½∫(1 - cos 2ts) = ½[h(1 - cos tm) + cos(tm)·h(1 - sinc(th))]
    // with h = b - a, m = a + b.
    let h = b - a;
    let tm = t * (a + b);
    let s = (0.5 * tm).sin();
    0.5 * (h * 2.0 * s * s + tm.cos() * h * one_minus_sinc(t * h))
}

/// `∫_a^b sin²(ts)/s² ds` for `0 <= a < b`.
pub fn sin2_over_s2_integral(t: f64, a: f64, b: f64) -> f64 {
    let t = t.abs();
    if t == 0.0 {
        return 0.0;
    }
    // antiderivative -sin²(ts)/s + t·Si(2ts), vanishing at s = 0
    let anti = |s: f64| {
        if s == 0.0 {
            0.0
        } else {
            let v = (t * s).sin();
            -v * v / s + t * sine_integral(2.0 * t * s)
        }
    };
    anti(b) - anti(a)
}
