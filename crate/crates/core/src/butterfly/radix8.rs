use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::{load, rotate, store, twiddle};
use crate::plan::TwiddleTable;

/// `a z` with `a = (1 - i)/sqrt(2)`, or `conj(a) z` when `CONJ`.
#[inline(always)]
fn mul_a<const CONJ: bool>(z: Complex64) -> Complex64 {
    let s = FRAC_1_SQRT_2;
    if CONJ {
        Complex64::new((z.re - z.im) * s, (z.re + z.im) * s)
    } else {
        Complex64::new((z.re + z.im) * s, (z.im - z.re) * s)
    }
}

/// `b z` with `b = -(1 + i)/sqrt(2)`, or `conj(b) z` when `CONJ`.
#[inline(always)]
fn mul_b<const CONJ: bool>(z: Complex64) -> Complex64 {
    let s = FRAC_1_SQRT_2;
    if CONJ {
        Complex64::new(-(z.re + z.im) * s, (z.re - z.im) * s)
    } else {
        Complex64::new((z.im - z.re) * s, -(z.re + z.im) * s)
    }
}

/// `x := A_{8,n} x`, or `conj(A_{8,n}) x` when `CONJ`.
pub(super) fn forward<const CONJ: bool>(re: &mut [f64], im: &mut [f64], tw: &TwiddleTable) {
    let n = re.len();
    let mut k = 8;
    while k <= n {
        let l = k / 8;
        let step = n / k;
        for block in (0..n).step_by(k) {
            for j in 0..l {
                let idx: [usize; 8] = std::array::from_fn(|m| block + m * l + j);
                let z: [Complex64; 8] = std::array::from_fn(|m| {
                    let v = load(re, im, idx[m]);
                    if m == 0 {
                        v
                    } else {
                        twiddle::<CONJ>(tw, m * j * step) * v
                    }
                });
                let (t1, t2) = (z[0] + z[4], z[0] - z[4]);
                let (t3, t4) = (z[1] + z[5], z[1] - z[5]);
                let (t5, t6) = (z[2] + z[6], z[2] - z[6]);
                let (t7, t8) = (z[3] + z[7], z[3] - z[7]);
                let (a4, b4) = (mul_a::<CONJ>(t4), mul_b::<CONJ>(t4));
                let (a8, b8) = (mul_a::<CONJ>(t8), mul_b::<CONJ>(t8));
                let (r3, r6, r7) = (rotate::<CONJ>(t3), rotate::<CONJ>(t6), rotate::<CONJ>(t7));
                store(re, im, idx[0], t1 + t3 + t5 + t7);
                store(re, im, idx[1], t2 + a4 + r6 + b8);
                store(re, im, idx[2], t1 + r3 - t5 - r7);
                store(re, im, idx[3], t2 + b4 - r6 + a8);
                store(re, im, idx[4], t1 - t3 + t5 - t7);
                store(re, im, idx[5], t2 - a4 + r6 - b8);
                store(re, im, idx[6], t1 - r3 - t5 + r7);
                store(re, im, idx[7], t2 - b4 - r6 - a8);
            }
        }
        k *= 8;
    }
}

/// `x := A_{8,n}^T x`; stages in descending order.
pub(super) fn transposed(re: &mut [f64], im: &mut [f64], tw: &TwiddleTable) {
    let n = re.len();
    let mut k = n;
    while k >= 8 {
        let l = k / 8;
        let step = n / k;
        for block in (0..n).step_by(k) {
            for j in 0..l {
                let idx: [usize; 8] = std::array::from_fn(|m| block + m * l + j);
                let z: [Complex64; 8] = std::array::from_fn(|m| load(re, im, idx[m]));
                let w1 = tw.get(j * step);
                let w2 = tw.get(2 * j * step);
                let w4 = tw.get(4 * j * step);
                let w6 = tw.get(6 * j * step);
                let (t1, t2) = (z[0] + z[4], w1 * (z[0] - z[4]));
                let (t3, t4) = (z[1] + z[5], w1 * (z[1] - z[5]));
                let (t5, t6) = (z[2] + z[6], w1 * (z[2] - z[6]));
                let (t7, t8) = (z[3] + z[7], w1 * (z[3] - z[7]));
                let (a4, b4) = (mul_a::<false>(t4), mul_b::<false>(t4));
                let (a8, b8) = (mul_a::<false>(t8), mul_b::<false>(t8));
                let (r3, r6, r7) = (
                    rotate::<false>(t3),
                    rotate::<false>(t6),
                    rotate::<false>(t7),
                );
                store(re, im, idx[0], t1 + t3 + t5 + t7);
                store(re, im, idx[1], t2 + a4 + r6 + b8);
                store(re, im, idx[2], w2 * (t1 + r3 - t5 - r7));
                store(re, im, idx[3], w2 * (t2 + b4 - r6 + a8));
                store(re, im, idx[4], w4 * (t1 - t3 + t5 - t7));
                store(re, im, idx[5], w4 * (t2 - a4 + r6 - b8));
                store(re, im, idx[6], w6 * (t1 - r3 - t5 + r7));
                store(re, im, idx[7], w6 * (t2 - b4 - r6 - a8));
            }
        }
        k /= 8;
    }
}
