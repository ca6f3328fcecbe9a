use crate::error::{Error, Result};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(b1, b2)` with `a1*b1 + a2*b2 = n`, non-negative and with `b1` as small
/// as possible. Every `n` above `a1*a2 - a1 - a2` has such a pair when the
/// two coefficients are coprime.
pub fn frobenius_decompose(a1: u64, a2: u64, n: u64) -> Result<(u64, u64)> {
    if a1 == 0 || a2 == 0 {
        return Err(Error::BadParams("coefficients must be positive".into()));
    }
    if gcd(a1, a2) != 1 {
        return Err(Error::NotCoprime(a1, a2));
    }
    // b1 only matters modulo a2
    for b1 in 0..a2 {
        let Some(rest) = n.checked_sub(a1 * b1) else { break };
        if rest % a2 == 0 {
            return Ok((b1, rest / a2));
        }
    }
    let frobenius = a1 as i64 * a2 as i64 - a1 as i64 - a2 as i64;
    Err(Error::BelowFrobenius { a1, a2, n, frobenius })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(frobenius_decompose(3, 4, 6), Ok((2, 0)));
        assert!(matches!(frobenius_decompose(3, 4, 5), Err(Error::BelowFrobenius { frobenius: 5, .. })));
        assert!(matches!(frobenius_decompose(5, 6, 19), Err(Error::BelowFrobenius { frobenius: 19, .. })));
        assert_eq!(frobenius_decompose(4, 6, 10), Err(Error::NotCoprime(4, 6)));
        assert_eq!(frobenius_decompose(1, 7, 0), Ok((0, 0)));
    }
}
