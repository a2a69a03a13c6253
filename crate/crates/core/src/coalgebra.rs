//! Iterated reduced coproducts of connected coalgebras.

use crate::linear::{Combination, Tensor};

/// A connected coalgebra given by its reduced coproduct on basis elements
/// of the augmentation ideal.
pub trait ReducedCoproduct {
    type Basis: Clone + Ord;

    /// `D'(b) = D(b) - 1 (x) b - b (x) 1`, as 2-tuples.
    fn reduced_coproduct(&self, b: &Self::Basis) -> Tensor<Self::Basis>;
}

/// `D'^[n](x)`, unfolded as `(D'^[n-1] (x) Id) o D'`.
pub fn iterated_reduced<C: ReducedCoproduct>(c: &C, x: &Combination<C::Basis>, n: usize) -> Tensor<C::Basis> {
    assert!(n >= 1, "iterated coproduct needs n >= 1");
    let mut acc: Tensor<C::Basis> = x.iter().map(|(b, v)| (vec![b.clone()], v.clone())).collect();
    for _ in 1..n {
        if acc.is_zero() {
            break;
        }
        acc = acc.map_slot(0, |b| c.reduced_coproduct(b));
    }
    acc
}

/// `D'^[n](x)` unfolded as `(D'^[k] (x) D'^[n-k]) o D'` for `1 <= k < n`.
/// Agrees with [`iterated_reduced`] by coassociativity.
pub fn iterated_reduced_split<C: ReducedCoproduct>(
    c: &C,
    x: &Combination<C::Basis>,
    n: usize,
    k: usize,
) -> Tensor<C::Basis> {
    assert!(1 <= k && k < n, "split point out of range");
    let mut out = Tensor::zero();
    for (b, v) in x {
        for (pair, w) in &c.reduced_coproduct(b) {
            let left = iterated_reduced(c, &Combination::basis(pair[0].clone()), k);
            let right = iterated_reduced(c, &Combination::basis(pair[1].clone()), n - k);
            out.add_scaled(&left.tensor(&right), &(v * w));
        }
    }
    out
}
