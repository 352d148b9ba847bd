//! Barnes G at positive integers.

use num_bigint::BigUint;
use num_traits::One;

/// `G(n) = 1! 2! ... (n-2)!` for `n >= 3`, with `G(1) = G(2) = 1`.
pub fn barnes_g_integer(n: u32) -> BigUint {
    assert!(n >= 1, "Barnes G is tabulated from n = 1");
    let mut g = BigUint::one();
    let mut fact = BigUint::one();
    for k in 1..n.saturating_sub(1) {
        fact *= k;
        g *= &fact;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(barnes_g_integer(1), BigUint::from(1u32));
        assert_eq!(barnes_g_integer(2), BigUint::from(1u32));
        assert_eq!(barnes_g_integer(3), BigUint::from(1u32));
        assert_eq!(barnes_g_integer(5), BigUint::from(12u32));
        assert_eq!(barnes_g_integer(9), BigUint::from(125_411_328_000u64));
    }

    #[test]
    fn recurrence_with_gamma() {
        // G(n+1) = Gamma(n) G(n) = (n-1)! G(n)
        let mut fact = BigUint::one();
        for n in 1..30u32 {
            if n > 1 {
                fact *= n - 1;
            }
            assert_eq!(barnes_g_integer(n + 1), &fact * barnes_g_integer(n));
        }
    }
}
