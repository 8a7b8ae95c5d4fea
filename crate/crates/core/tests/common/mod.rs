#![allow(dead_code)]

use pafft::{ComplexBuffer, Plan, Radix, TensorShape};
use proptest::prelude::*;

/// A radix and a shape whose dimensions are powers of it, with at most
/// `max_bits` total bits (total size `<= 2^max_bits`).
pub fn plan_strategy(max_dims: usize, max_bits: u32) -> impl Strategy<Value = Plan> {
    (prop::sample::select(Radix::ALL.to_vec()), 1..=max_dims)
        .prop_flat_map(move |(radix, d)| {
            let max_t = (max_bits / radix.bits()).max(1);
            (Just(radix), prop::collection::vec(1..=max_t, d))
        })
        .prop_filter("total size too large", move |(radix, depths)| {
            depths.iter().sum::<u32>() * radix.bits() <= max_bits
        })
        .prop_map(|(radix, depths)| {
            let dims: Vec<usize> = depths
                .iter()
                .map(|&t| 1usize << (t * radix.bits()))
                .collect();
            Plan::new(radix, TensorShape::new(dims).unwrap()).unwrap()
        })
}

pub fn buffer_strategy(len: usize) -> impl Strategy<Value = ComplexBuffer> {
    (
        prop::collection::vec(-1.0f64..1.0, len),
        prop::collection::vec(-1.0f64..1.0, len),
    )
        .prop_map(|(re, im)| ComplexBuffer::from_parts(re, im).unwrap())
}

pub fn plan_and_buffer(
    max_dims: usize,
    max_bits: u32,
) -> impl Strategy<Value = (Plan, ComplexBuffer)> {
    plan_strategy(max_dims, max_bits).prop_flat_map(|plan| {
        let len = plan.len();
        (Just(plan), buffer_strategy(len))
    })
}

pub fn plan_and_two_buffers(
    max_dims: usize,
    max_bits: u32,
) -> impl Strategy<Value = (Plan, ComplexBuffer, ComplexBuffer)> {
    plan_strategy(max_dims, max_bits).prop_flat_map(|plan| {
        let len = plan.len();
        (Just(plan), buffer_strategy(len), buffer_strategy(len))
    })
}
