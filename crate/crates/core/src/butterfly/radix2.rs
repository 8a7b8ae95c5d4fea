use super::{load, store, twiddle};
use crate::plan::TwiddleTable;

/// `x := A_{2,n} x`, or `conj(A_{2,n}) x` when `CONJ`.
pub(super) fn forward<const CONJ: bool>(re: &mut [f64], im: &mut [f64], tw: &TwiddleTable) {
    let n = re.len();
    let mut k = 2;
    while k <= n {
        let half = k / 2;
        let step = n / k;
        for block in (0..n).step_by(k) {
            for j in 0..half {
                let lo = block + j;
                let hi = lo + half;
                let tau = twiddle::<CONJ>(tw, j * step) * load(re, im, hi);
                let z = load(re, im, lo);
                store(re, im, hi, z - tau);
                store(re, im, lo, z + tau);
            }
        }
        k *= 2;
    }
}

/// `x := A_{2,n}^T x`; stages in descending order.
pub(super) fn transposed(re: &mut [f64], im: &mut [f64], tw: &TwiddleTable) {
    let n = re.len();
    let mut k = n;
    while k >= 2 {
        let half = k / 2;
        let step = n / k;
        for block in (0..n).step_by(k) {
            for j in 0..half {
                let lo = block + j;
                let hi = lo + half;
                let tau = load(re, im, hi);
                let z = load(re, im, lo);
                store(re, im, hi, tw.get(j * step) * (z - tau));
                store(re, im, lo, z + tau);
            }
        }
        k /= 2;
    }
}
