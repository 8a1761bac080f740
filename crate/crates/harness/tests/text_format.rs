//! Bit-exact round trips of the counterexample text format.

use hilbert_axioms::{BoolMatrix, Complex64, Matrix};
use hilbert_axioms_harness::text::{format_matrix, format_relation, parse_matrix, parse_relation};
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    any::<f64>().prop_filter("finite", |x| x.is_finite())
}

proptest! {
    #[test]
    fn real_matrices((m, n) in (0usize..5, 0usize..5), seed in prop::collection::vec(finite(), 25)) {
        let a = Matrix::from_fn(m, n, |i, j| seed[i * 5 + j]);
        let back = parse_matrix::<f64>(&format_matrix(&a)).unwrap();
        prop_assert_eq!(back.shape(), a.shape());
        for (x, y) in back.as_slice().iter().zip(a.as_slice()) {
            prop_assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn complex_matrices(n in 0usize..4, parts in prop::collection::vec((finite(), finite()), 16)) {
        let a = Matrix::from_fn(n, n, |i, j| {
            let (re, im) = parts[i * 4 + j];
            Complex64::new(re, im)
        });
        let back = parse_matrix::<Complex64>(&format_matrix(&a)).unwrap();
        for (x, y) in back.as_slice().iter().zip(a.as_slice()) {
            prop_assert_eq!(x.re.to_bits(), y.re.to_bits());
            prop_assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
    }

    #[test]
    fn relations(m in 0usize..5, n in 0usize..5, bits in any::<u32>()) {
        let r = BoolMatrix::from_fn(m, n, |i, j| bits >> (i * 5 + j) & 1 == 1);
        prop_assert_eq!(parse_relation(&format_relation(&r)).unwrap(), r);
    }
}
