//! Truncated power series in `x` with coefficients in a target algebra.
//!
//! A series is a coefficient vector `c[0..=order]`; everything above
//! `x^order` is dropped.

use crate::algebra::{AlgebraElement, BasisKind};

/// `f * g mod x^(order+1)`.
pub fn mul_truncated(f: &[AlgebraElement], g: &[AlgebraElement], order: usize, kind: BasisKind) -> Vec<AlgebraElement> {
    let mut out = vec![AlgebraElement::zero(kind); order + 1];
    for (i, fi) in f.iter().enumerate().take(order + 1) {
        if fi.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate().take(order + 1 - i) {
            if gj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(fi * gj);
        }
    }
    out
}

/// `f(g(x)) mod x^(order+1)`, assuming `g` has no constant term.
pub fn compose_truncated(f: &[AlgebraElement], g: &[AlgebraElement], order: usize, kind: BasisKind) -> Vec<AlgebraElement> {
    debug_assert!(g.first().is_none_or(AlgebraElement::is_zero));
    let mut out = vec![AlgebraElement::zero(kind); order + 1];
    // power = g^k, starting at g^0 = 1
    let mut power = vec![AlgebraElement::zero(kind); order + 1];
    power[0] = AlgebraElement::one(kind);
    for (k, fk) in f.iter().enumerate().take(order + 1) {
        if k > 0 {
            power = mul_truncated(&power, g, order, kind);
        }
        if fk.is_zero() {
            continue;
        }
        for (n, p) in power.iter().enumerate() {
            if !p.is_zero() {
                out[n] = &out[n] + &(fk * p);
            }
        }
    }
    out
}
