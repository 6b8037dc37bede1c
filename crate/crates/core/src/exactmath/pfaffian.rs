//! Pfaffians by first-row expansion.
//!
//! `Pf(A) = sum_j (-1)^(j+1) a_{0j} Pf(A without rows/cols 0 and j)`, with
//! sub-Pfaffians memoized by the bitmask of the indices still present. Sizes
//! here never exceed a few dozen, so the memo table stays small.

use std::collections::HashMap;
use std::ops::{Mul, Neg};

use num_traits::{One, Zero};

pub(crate) fn pfaffian_by_expansion<T, F>(n: usize, entry: F) -> T
where
    T: Clone + Zero + One + Neg<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
    F: Fn(usize, usize) -> T,
{
    assert!(n % 2 == 0, "pfaffian of odd size");
    assert!(n < 64, "pfaffian size limited to 63");
    if n == 0 {
        return T::one();
    }
    let table: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mut memo: HashMap<u64, T> = HashMap::new();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    expand(full, &table, &mut memo)
}

fn expand<T>(mask: u64, a: &[Vec<T>], memo: &mut HashMap<u64, T>) -> T
where
    T: Clone + Zero + One + Neg<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if mask == 0 {
        return T::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let first = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << first);
    let mut acc = T::zero();
    let mut sign_positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = &a[first][j];
        if !entry.is_zero() {
            let sub = expand(rest & !(1u64 << j), a, memo);
            if !sub.is_zero() {
                let term = entry * &sub;
                acc = if sign_positive { acc + term } else { acc + (-term) };
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(mask, acc.clone());
    acc
}
