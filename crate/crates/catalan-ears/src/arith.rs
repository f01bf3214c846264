//! Exact arbitrary-precision arithmetic: binomial coefficients, Catalan
//! numbers, powers of two, and division that asserts divisibility.

use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision nonnegative integer. All counts and identity values
/// in this crate are `Nat`s; only indices are machine-width.
pub type Nat = BigUint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    /// An exact division had a nonzero remainder. Every division in the
    /// closed forms and identities must be exact; a remainder means a
    /// transcription bug, not a rounding issue.
    #[error("non-exact division: {numerator} / {divisor} leaves remainder {remainder}")]
    NonExactDivision {
        numerator: Nat,
        divisor: Nat,
        remainder: Nat,
    },
    #[error("division by zero")]
    DivisionByZero,
}

/// `n` choose `k`, with the usual convention that out-of-range `k`
/// (negative or above `n`) gives 0.
pub fn binomial(n: u64, k: i64) -> Nat {
    if k < 0 || k as u64 > n {
        return Nat::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Nat::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step: the running
        // value is binomial(n, i + 1) times an integer prefix.
        acc = exact_div(&(acc * Nat::from(n - i)), &Nat::from(i + 1))
            .expect("binomial product step must divide exactly");
    }
    acc
}

/// `2^m`, exactly.
pub fn pow2(m: u64) -> Nat {
    Nat::one() << m
}

/// Quotient of `a / b`, asserting the remainder is zero.
pub fn exact_div(a: &Nat, b: &Nat) -> Result<Nat, ArithError> {
    if b.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if !r.is_zero() {
        return Err(ArithError::NonExactDivision {
            numerator: a.clone(),
            divisor: b.clone(),
            remainder: r,
        });
    }
    Ok(q)
}

static CATALAN_MEMO: OnceLock<Mutex<Vec<Nat>>> = OnceLock::new();

/// The `n`-th Catalan number, memoized.
///
/// Entries are filled in order via `C_m = C_{m-1} * 2(2m - 1) / (m + 1)`,
/// which divides exactly at every step. The memo behaves as if each entry is
/// computed once; concurrent callers see identical values.
pub fn catalan(n: u64) -> Nat {
    let memo = CATALAN_MEMO.get_or_init(|| Mutex::new(vec![Nat::one()]));
    let mut table = memo.lock().expect("catalan memo poisoned");
    while (table.len() as u64) <= n {
        let m = table.len() as u64;
        let prev = table.last().expect("memo seeded with C_0");
        let next = exact_div(&(prev * Nat::from(2 * (2 * m - 1))), &Nat::from(m + 1))
            .expect("catalan recurrence step must divide exactly");
        table.push(next);
    }
    table[n as usize].clone()
}

/// Convenience for tests and tables: a `Nat` from a small constant.
pub fn nat(v: u64) -> Nat {
    Nat::from(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: Pascal's triangle built row by row with plain
    /// additions, no multiplicative shortcuts.
    fn pascal_rows(max_n: usize) -> Vec<Vec<Nat>> {
        let mut rows: Vec<Vec<Nat>> = vec![vec![Nat::one()]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![Nat::one()];
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(Nat::one());
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_identity_and_out_of_range() {
        assert_eq!(binomial(0, 0), nat(1));
        assert_eq!(binomial(7, 0), nat(1));
        assert_eq!(binomial(3, 4), nat(0));
        assert_eq!(binomial(3, -1), nat(0));
    }

    #[test]
    fn binomial_matches_pascal_oracle() {
        let rows = pascal_rows(64);
        // Frozen spot value from the oracle: row 5 gives 1,5,10,10,5,1.
        assert_eq!(rows[5][2], nat(10));
        assert_eq!(binomial(5, 2), nat(10));
        for (n, row) in rows.iter().enumerate() {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as i64), expected, "binom({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=64u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), binomial(n, (n - k) as i64));
            }
        }
    }

    #[test]
    fn pow2_doubling_oracle() {
        assert_eq!(pow2(0), nat(1));
        assert_eq!(pow2(1), nat(2));
        let mut doubled = Nat::one();
        for m in 0..=80u64 {
            assert_eq!(pow2(m), doubled);
            doubled = &doubled * 2u32;
        }
        assert_eq!(pow2(10), nat(1024));
    }

    #[test]
    fn catalan_base_values() {
        assert_eq!(catalan(0), nat(1));
        assert_eq!(catalan(3), nat(5));
        assert_eq!(catalan(8), nat(1430));
    }

    #[test]
    fn catalan_segner_recurrence() {
        for n in 0..=30u64 {
            let sum: Nat = (0..=n).map(|i| catalan(i) * catalan(n - i)).sum();
            assert_eq!(catalan(n + 1), sum, "Segner at n={n}");
        }
    }

    #[test]
    fn catalan_as_binomial_difference() {
        for n in 0..=64u64 {
            let expected = binomial(2 * n, n as i64) - binomial(2 * n, n as i64 + 1);
            assert_eq!(catalan(n), expected, "n={n}");
        }
    }

    #[test]
    fn exact_div_rejects_remainder() {
        assert_eq!(exact_div(&nat(12), &nat(4)), Ok(nat(3)));
        let err = exact_div(&nat(13), &nat(4)).unwrap_err();
        assert!(matches!(err, ArithError::NonExactDivision { .. }));
        assert_eq!(exact_div(&nat(5), &nat(0)), Err(ArithError::DivisionByZero));
    }

    proptest! {
        #[test]
        fn pascal_rule_holds(n in 1u64..64, k in 1i64..64) {
            prop_assume!(k as u64 <= n);
            let lhs = binomial(n, k);
            let rhs = binomial(n - 1, k - 1) + binomial(n - 1, k);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
