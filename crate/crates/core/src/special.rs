//! Standard normal distribution function and its inverse.

use crate::error::{Error, Result};

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// Standard normal CDF.
///
/// Evaluated as `erfc(-x / sqrt 2) / 2` with the FreeBSD/musl rational
/// approximations of `erfc` (through `libm`), which are accurate to about one
/// ulp over the whole line, so the lower tail keeps full relative precision.
pub fn normal_cdf(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(x));
    }
    Ok(phi(x))
}

#[inline]
pub(crate) fn phi(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

// AS241 coefficients as published.
#[allow(clippy::excessive_precision)]
const A: [f64; 8] = [
    3.387_132_872_796_366_608,
    1.331_416_678_917_843_774_5e2,
    1.971_590_950_306_551_442_7e3,
    1.373_169_376_550_946_112_5e4,
    4.592_195_393_154_987_145_7e4,
    6.726_577_092_700_870_085_3e4,
    3.343_057_558_358_812_810_5e4,
    2.509_080_928_730_122_672_7e3,
];
#[allow(clippy::excessive_precision)]
const B: [f64; 8] = [
    1.0,
    4.231_333_070_160_091_125_2e1,
    6.871_870_074_920_579_083e2,
    5.394_196_021_424_751_107_7e3,
    2.121_379_430_158_659_586_7e4,
    3.930_789_580_009_271_061e4,
    2.872_908_573_572_194_267_4e4,
    5.226_495_278_852_854_561e3,
];
#[allow(clippy::excessive_precision)]
const C: [f64; 8] = [
    1.423_437_110_749_683_577_34,
    4.630_337_846_156_545_295_9,
    5.769_497_221_460_691_405_5,
    3.647_848_324_763_204_605_04,
    1.270_458_252_452_368_382_58,
    2.417_807_251_774_506_117_7e-1,
    2.272_384_498_926_918_458_33e-2,
    7.745_450_142_783_414_076_4e-4,
];
#[allow(clippy::excessive_precision)]
const D: [f64; 8] = [
    1.0,
    2.053_191_626_637_758_821_87,
    1.676_384_830_183_803_849_4,
    6.897_673_349_851_000_045_5e-1,
    1.481_039_764_274_800_745_9e-1,
    1.519_866_656_361_645_719_66e-2,
    5.475_938_084_995_344_946e-4,
    1.050_750_071_644_416_843_24e-9,
];
#[allow(clippy::excessive_precision)]
const E: [f64; 8] = [
    6.657_904_643_501_103_777_2,
    5.463_784_911_164_114_369_9,
    1.784_826_539_917_291_335_8,
    2.965_605_718_285_048_912_3e-1,
    2.653_218_952_657_612_309_3e-2,
    1.242_660_947_388_078_438_6e-3,
    2.711_555_568_743_487_578_15e-5,
    2.010_334_399_292_288_132_65e-7,
];
#[allow(clippy::excessive_precision)]
const F: [f64; 8] = [
    1.0,
    5.998_322_065_558_879_376_9e-1,
    1.369_298_809_227_358_053_1e-1,
    1.487_536_129_085_061_485_25e-2,
    7.868_691_311_456_132_591e-4,
    1.846_318_317_510_054_681_8e-5,
    1.421_511_758_316_445_888_7e-7,
    2.044_263_103_389_939_785_64e-15,
];

#[inline]
fn ratio(num: &[f64; 8], den: &[f64; 8], x: f64) -> f64 {
    let mut n = num[7];
    let mut d = den[7];
    for k in (0..7).rev() {
        n = n * x + num[k];
        d = d * x + den[k];
    }
    n / d
}

/// Inverse standard normal CDF for `p` in (0, 1) (Wichura, AS241 PPND16).
#[inline]
pub fn inverse_normal_cdf(p: f64) -> f64 {
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        return q * ratio(&A, &B, 0.180_625 - q * q);
    }
    let tail = if q < 0.0 { p } else { 1.0 - p };
    let r = libm::sqrt(-libm::log(tail));
    let z = if r <= 5.0 {
        ratio(&C, &D, r - 1.6)
    } else {
        ratio(&E, &F, r - 5.0)
    };
    if q < 0.0 {
        -z
    } else {
        z
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    /// Adaptive Simpson integration of the standard normal density from
    /// `lower` to `upper`, kept independent of `erfc`.
    fn density_integral(lower: f64, upper: f64) -> f64 {
        fn density(x: f64) -> f64 {
            libm::exp(-0.5 * x * x) / libm::sqrt(2.0 * core::f64::consts::PI)
        }
        fn simpson(a: f64, b: f64) -> f64 {
            (b - a) / 6.0 * (density(a) + 4.0 * density(0.5 * (a + b)) + density(b))
        }
        fn adapt(a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
            let m = 0.5 * (a + b);
            let left = simpson(a, m);
            let right = simpson(m, b);
            let delta = left + right - whole;
            if depth == 0 || delta.abs() <= 15.0 * tol {
                left + right + delta / 15.0
            } else {
                adapt(a, m, left, tol / 2.0, depth - 1) + adapt(m, b, right, tol / 2.0, depth - 1)
            }
        }
        adapt(lower, upper, simpson(lower, upper), 1e-14, 50)
    }

    fn phi_by_quadrature(x: f64) -> f64 {
        // Mass below -12 is under 2e-33.
        density_integral(-12.0, x)
    }

    #[test]
    fn quadrature_oracle_matches() {
        for &x in &[-6.0, -3.0, -2.0, -1.349, -1.0, -0.3, 0.0, 0.7, 1.0, 2.5, 5.0] {
            let oracle = phi_by_quadrature(x);
            assert!((normal_cdf(x).unwrap() - oracle).abs() <= 1e-10, "x = {x}");
        }
    }

    #[test]
    fn anchor_values() {
        assert_eq!(normal_cdf(0.0).unwrap(), 0.5);
        assert!((normal_cdf(-1.349).unwrap() - 0.08866).abs() < 1e-4);
        assert!((normal_cdf(-1.349).unwrap() - 0.088_668_483_045_465_17).abs() < 1e-15);
        assert!((normal_cdf(-2.0).unwrap() - 0.022_750_131_948_179_207).abs() < 1e-16);
        // Relative precision in the far tail.
        let tail = normal_cdf(-30.0).unwrap();
        assert!((tail / 4.906_713_927_148_187e-198 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn symmetry() {
        for i in -80..=80 {
            let x = i as f64 / 10.0;
            let s = normal_cdf(x).unwrap() + normal_cdf(-x).unwrap();
            assert!((s - 1.0).abs() <= 1e-12, "x = {x}");
        }
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(normal_cdf(f64::NAN), Err(Error::Domain(x)) if x.is_nan()));
        assert!(normal_cdf(f64::INFINITY).is_err());
        assert!(normal_cdf(f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn inverse_matches_high_precision_values() {
        let cases = [
            (1e-300, -37.047_096_299_361_2),
            (1e-20, -9.262_340_089_798_408),
            (1e-10, -6.361_340_902_404_056),
            (0.001, -3.090_232_306_167_813_5),
            (0.02425, -1.972_961_051_311_884_9),
            (0.075, -1.439_531_470_938_456),
            (0.5, 0.0),
            (0.7, 0.524_400_512_708_040_8),
            (0.925, 1.439_531_470_938_456),
            (0.99, 2.326_347_874_040_841),
        ];
        for (p, z) in cases {
            let got = inverse_normal_cdf(p);
            assert!((got - z).abs() <= 1e-14 * z.abs().max(1.0), "p = {p}: {got} vs {z}");
        }
    }

    #[test]
    fn inverse_round_trips() {
        for i in 1..1000 {
            let p = i as f64 / 1000.0;
            assert!((phi(inverse_normal_cdf(p)) - p).abs() < 1e-15, "p = {p}");
        }
    }
}
