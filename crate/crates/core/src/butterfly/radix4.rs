use super::{load, rotate, store, twiddle};
use crate::plan::TwiddleTable;

/// `x := A_{4,n} x`, or `conj(A_{4,n}) x` when `CONJ`.
pub(super) fn forward<const CONJ: bool>(re: &mut [f64], im: &mut [f64], tw: &TwiddleTable) {
    let n = re.len();
    let mut k = 4;
    while k <= n {
        let l = k / 4;
        let step = n / k;
        for block in (0..n).step_by(k) {
            for j in 0..l {
                let i0 = block + j;
                let (i1, i2, i3) = (i0 + l, i0 + 2 * l, i0 + 3 * l);
                let z1 = load(re, im, i0);
                let z2 = twiddle::<CONJ>(tw, j * step) * load(re, im, i1);
                let z3 = twiddle::<CONJ>(tw, 2 * j * step) * load(re, im, i2);
                let z4 = twiddle::<CONJ>(tw, 3 * j * step) * load(re, im, i3);
                let (t1, t2) = (z1 + z3, z1 - z3);
                let (t3, t4) = (z2 + z4, z2 - z4);
                let r4 = rotate::<CONJ>(t4);
                store(re, im, i0, t1 + t3);
                store(re, im, i1, t2 + r4);
                store(re, im, i2, t1 - t3);
                store(re, im, i3, t2 - r4);
            }
        }
        k *= 4;
    }
}

/// `x := A_{4,n}^T x`; stages in descending order.
pub(super) fn transposed(re: &mut [f64], im: &mut [f64], tw: &TwiddleTable) {
    let n = re.len();
    let mut k = n;
    while k >= 4 {
        let l = k / 4;
        let step = n / k;
        for block in (0..n).step_by(k) {
            for j in 0..l {
                let i0 = block + j;
                let (i1, i2, i3) = (i0 + l, i0 + 2 * l, i0 + 3 * l);
                let w1 = tw.get(j * step);
                let w2 = tw.get(2 * j * step);
                let z1 = load(re, im, i0);
                let z2 = load(re, im, i1);
                let z3 = load(re, im, i2);
                let z4 = load(re, im, i3);
                let (t1, t2) = (z1 + z3, w1 * (z1 - z3));
                let (t3, t4) = (z2 + z4, w1 * (z2 - z4));
                let r4 = rotate::<false>(t4);
                store(re, im, i0, t1 + t3);
                store(re, im, i1, t2 + r4);
                store(re, im, i2, w2 * (t1 - t3));
                store(re, im, i3, w2 * (t2 - r4));
            }
        }
        k /= 4;
    }
}
