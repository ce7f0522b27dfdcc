//! Truncated univariate power series over exact big integers.
//!
//! Everything here is a plain coefficient vector `c[0..=bound]`. The two
//! primitives — multiply by (1 - q^r) and divide by (1 - q^r) — compose into
//! all the single-variable generating functions the verifiers need: Molien
//! class traces, the invariant-count product series, q-factorials and the
//! coinvariant truncation identities.

use num::BigInt;

/// The series 1 truncated at `bound` (coefficients 0..=bound).
pub fn one(bound: u32) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); bound as usize + 1];
    c[0] = BigInt::from(1);
    c
}

/// In-place multiplication by (1 - q^r).
pub fn mul_one_minus(c: &mut [BigInt], r: u32) {
    let r = r as usize;
    if r == 0 {
        for x in c.iter_mut() {
            *x = BigInt::from(0);
        }
        return;
    }
    for d in (r..c.len()).rev() {
        let lower = c[d - r].clone();
        c[d] -= lower;
    }
}

/// In-place division by (1 - q^r), i.e. multiplication by Σ_j q^{rj}.
pub fn div_one_minus(c: &mut [BigInt], r: u32) {
    let r = r as usize;
    assert!(r > 0, "cannot divide by zero series");
    for d in r..c.len() {
        let lower = c[d - r].clone();
        c[d] += lower;
    }
}

/// Truncated product of two series, same bound as the inputs.
pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    use num::Zero;
    let n = a.len();
    let mut out = vec![BigInt::from(0); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= n {
                break;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Π_{parts p of tau} (1 - q^p)^{-power}, truncated at `bound`: the graded
/// trace of a permutation with cycle type `tau` on `power` sets of variables.
pub fn cycle_trace_series(tau: &[u32], power: u32, bound: u32) -> Vec<BigInt> {
    let mut c = one(bound);
    for &p in tau {
        for _ in 0..power {
            div_one_minus(&mut c, p);
        }
    }
    c
}

/// The q-factorial [n]_q! = Π_{i=1}^{n} (1 + q + … + q^{i-1}), truncated.
pub fn q_factorial(n: u32, bound: u32) -> Vec<BigInt> {
    let mut c = one(bound);
    for i in 1..=n {
        div_one_minus(&mut c, 1);
        mul_one_minus(&mut c, i);
    }
    c
}
