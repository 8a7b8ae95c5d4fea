mod common;

use common::{buffer_strategy, plan_and_buffer, plan_and_two_buffers};
use pafft::oracle::{naive_dft_tensor, tolerance, Direction};
use pafft::{
    butterfly_conjugate, butterfly_forward, butterfly_transposed, fft_backward, fft_forward,
    permute_1d, permute_tensor, Complex64, ComplexBuffer, Plan, Radix,
};
use proptest::prelude::*;

fn radix_and_1d(max_bits: u32) -> impl Strategy<Value = (Plan, ComplexBuffer)> {
    (prop::sample::select(Radix::ALL.to_vec()), 1..=max_bits)
        .prop_filter("size must be a radix power", |(r, bits)| {
            bits % r.bits() == 0
        })
        .prop_flat_map(|(r, bits)| {
            let plan = Plan::new_1d(r, 1 << bits).unwrap();
            let len = plan.len();
            (Just(plan), buffer_strategy(len))
        })
}

fn naive_1d(x: &ComplexBuffer, plan: &Plan) -> ComplexBuffer {
    naive_dft_tensor(x, plan.shape(), Direction::Forward).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decimation_in_time((plan, x) in radix_and_1d(10)) {
        let mut y = x.clone();
        permute_1d(&mut y, &plan, 0).unwrap();
        butterfly_forward(&mut y, &plan, 0).unwrap();
        prop_assert!(y.max_abs_diff(&naive_1d(&x, &plan)) <= tolerance(plan.len(), x.max_abs()));
    }

    #[test]
    fn decimation_in_frequency((plan, x) in radix_and_1d(10)) {
        let mut y = x.clone();
        butterfly_transposed(&mut y, &plan, 0).unwrap();
        permute_1d(&mut y, &plan, 0).unwrap();
        prop_assert!(y.max_abs_diff(&naive_1d(&x, &plan)) <= tolerance(plan.len(), x.max_abs()));
    }

    #[test]
    fn inverse_through_conjugate_butterflies((plan, x) in radix_and_1d(10)) {
        let mut y = naive_1d(&x, &plan);
        permute_1d(&mut y, &plan, 0).unwrap();
        butterfly_conjugate(&mut y, &plan, 0).unwrap();
        y.scale(1.0 / plan.len() as f64);
        prop_assert!(y.max_abs_diff(&x) <= tolerance(plan.len(), x.max_abs()));
    }

    #[test]
    fn conjugate_kernel_is_conjugated_forward((plan, x) in radix_and_1d(12)) {
        let conj = |b: &ComplexBuffer| -> ComplexBuffer { b.iter().map(|z| z.conj()).collect() };
        let mut a = x.clone();
        butterfly_conjugate(&mut a, &plan, 0).unwrap();
        let mut b = conj(&x);
        butterfly_forward(&mut b, &plan, 0).unwrap();
        prop_assert!(a.max_abs_diff(&conj(&b)) <= 1e-14);
    }

    #[test]
    fn forward_matches_oracle((plan, x) in plan_and_buffer(3, 10)) {
        let mut y = x.clone();
        fft_forward(&mut y, &plan).unwrap();
        let expected = naive_dft_tensor(&x, plan.shape(), Direction::Forward).unwrap();
        prop_assert!(y.max_abs_diff(&expected) <= tolerance(plan.len(), x.max_abs()));
    }

    #[test]
    fn backward_matches_oracle((plan, x) in plan_and_buffer(3, 10)) {
        let mut y = x.clone();
        fft_backward(&mut y, &plan).unwrap();
        let expected = naive_dft_tensor(&x, plan.shape(), Direction::Backward).unwrap();
        prop_assert!(y.max_abs_diff(&expected) <= tolerance(plan.len(), x.max_abs()));
    }

    #[test]
    fn parseval((plan, x) in plan_and_buffer(3, 12)) {
        let mut y = x.clone();
        fft_forward(&mut y, &plan).unwrap();
        let expected = plan.len() as f64 * x.norm_sqr();
        prop_assert!((y.norm_sqr() - expected).abs() <= 1e-10 * expected);
    }

    #[test]
    fn linearity(
        (plan, x, y) in plan_and_two_buffers(3, 12),
        alpha in (-2.0f64..2.0, -2.0f64..2.0),
        beta in (-2.0f64..2.0, -2.0f64..2.0),
    ) {
        let (alpha, beta) = (Complex64::new(alpha.0, alpha.1), Complex64::new(beta.0, beta.1));
        let mut combo: ComplexBuffer = x.iter().zip(y.iter()).map(|(a, b)| alpha * a + beta * b).collect();
        let scale = combo.max_abs();
        fft_forward(&mut combo, &plan).unwrap();
        let (mut fx, mut fy) = (x.clone(), y.clone());
        fft_forward(&mut fx, &plan).unwrap();
        fft_forward(&mut fy, &plan).unwrap();
        let expected: ComplexBuffer = fx.iter().zip(fy.iter()).map(|(a, b)| alpha * a + beta * b).collect();
        let tol = tolerance(plan.len(), scale.max(4.0 * x.max_abs().max(y.max_abs())));
        prop_assert!(combo.max_abs_diff(&expected) <= tol);
    }

    #[test]
    fn ordered_and_unordered_decompose_bitwise((plan, x) in plan_and_buffer(3, 12)) {
        let mut a = x.clone();
        fft_forward(&mut a, &plan).unwrap();
        let mut b = x.clone();
        permute_tensor(&mut b, &plan).unwrap();
        pafft::fft_forward_unordered(&mut b, &plan).unwrap();
        prop_assert!(a.bitwise_eq(&b));
    }
}

#[test]
fn radices_agree_at_4096() {
    let x: ComplexBuffer = (0..4096)
        .map(|k| Complex64::new((k as f64 * 0.731).sin(), (k as f64 * 0.293).cos()))
        .collect();
    let outputs: Vec<ComplexBuffer> = Radix::ALL
        .iter()
        .map(|&r| {
            let plan = Plan::new_1d(r, 4096).unwrap();
            let mut y = x.clone();
            fft_forward(&mut y, &plan).unwrap();
            y
        })
        .collect();
    let tol = tolerance(4096, x.max_abs());
    assert!(outputs[0].max_abs_diff(&outputs[1]) <= tol);
    assert!(outputs[0].max_abs_diff(&outputs[2]) <= tol);
    assert!(outputs[1].max_abs_diff(&outputs[2]) <= tol);
}
