//! Adaptive Gauss-Kronrod (G7-K15) quadrature for complex-valued integrands
//! on the real line. Used by the Mellin-Barnes contour engine.

use num_complex::Complex64;

/// K15 abscissae on [0, 1] side (symmetric rule), QUADPACK dqk15 constants.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

/// G7 weights for the odd-indexed Kronrod abscissae (plus center).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_97,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// One quadrature panel: value with an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Panel {
    pub a: f64,
    pub b: f64,
    pub value: Complex64,
    pub err: f64,
    /// ∫ |f| estimate over the panel (cancellation diagnostics).
    pub resabs: f64,
}

/// Apply the G7-K15 pair to `f` on `[a, b]`.
pub fn g7k15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.norm();

    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        let fsum = f1 + f2;
        kronrod += WGK[j] * fsum;
        resabs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }

    let value = kronrod * half;
    let raw = ((kronrod - gauss) * half).norm();
    let resabs = resabs * half.abs();
    // QUADPACK-style rescaling of the raw difference.
    let err = if resabs > 0.0 && raw > 0.0 {
        let scale = (200.0 * raw / resabs).powf(1.5);
        if scale < 1.0 { resabs * scale } else { resabs }
    } else {
        raw
    }
    .max(50.0 * f64::EPSILON * resabs);

    Panel { a, b, value, err, resabs }
}

/// Running totals for a panel collection.
#[derive(Debug, Clone, Copy, Default)]
pub struct Totals {
    pub value: Complex64,
    pub err: f64,
    pub resabs: f64,
    pub evals: usize,
}

/// Adaptive bisection over an explicit work list: the worst panel is split
/// until the summed error estimate meets `target_abs` or the evaluation
/// budget is spent. Returns false if the budget ran out first.
pub fn refine<F: Fn(f64) -> Complex64>(
    f: &F,
    panels: &mut Vec<Panel>,
    totals: &mut Totals,
    target_abs: impl Fn(&Totals) -> f64,
    max_evals: usize,
) -> bool {
    loop {
        if totals.err <= target_abs(totals) {
            return true;
        }
        if totals.evals >= max_evals || panels.is_empty() {
            return false;
        }
        // worst panel
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.err.total_cmp(&b.1.err))
            .expect("non-empty");
        let worst = panels.swap_remove(idx);
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval exhausted at f64 resolution; keep it and give up on it
            totals.err -= worst.err;
            totals.evals += 1;
            let mut dead = worst;
            dead.err = 0.0;
            panels.push(dead);
            continue;
        }
        let left = g7k15(f, worst.a, mid);
        let right = g7k15(f, mid, worst.b);
        totals.value += left.value + right.value - worst.value;
        totals.err += left.err + right.err - worst.err;
        totals.resabs += left.resabs + right.resabs - worst.resabs;
        totals.evals += 30;
        panels.push(left);
        panels.push(right);
    }
}

/// Seed `panels`/`totals` with fresh panels covering `[a, b]` in `count`
/// equal segments.
pub fn seed<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    count: usize,
    panels: &mut Vec<Panel>,
    totals: &mut Totals,
) {
    let step = (b - a) / count as f64;
    for i in 0..count {
        let pa = a + step * i as f64;
        let pb = if i + 1 == count { b } else { a + step * (i + 1) as f64 };
        let p = g7k15(f, pa, pb);
        totals.value += p.value;
        totals.err += p.err;
        totals.resabs += p.resabs;
        totals.evals += 15;
        panels.push(p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_exact() {
        // K15 integrates degree ≤ 22 exactly; check x^8 on [0, 2].
        let p = g7k15(&|x| Complex64::new(x.powi(8), 0.0), 0.0, 2.0);
        let exact = 2.0f64.powi(9) / 9.0;
        assert!((p.value.re - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn oscillatory_adaptive() {
        // ∫₀^{2π} cos(10 x) e^{-x} dx = (1 - e^{-2π}) / 101
        let f = |x: f64| Complex64::new((10.0 * x).cos() * (-x).exp(), 0.0);
        let mut panels = Vec::new();
        let mut totals = Totals::default();
        seed(&f, 0.0, 2.0 * PI, 4, &mut panels, &mut totals);
        let ok = refine(
            &f,
            &mut panels,
            &mut totals,
            |t| (1e-13 * t.value.norm()).max(2e-14 * t.resabs),
            100_000,
        );
        assert!(ok);
        let exact = (1.0 - (-2.0 * PI).exp()) / 101.0;
        assert!((totals.value.re - exact).abs() < 1e-12);
    }
}
