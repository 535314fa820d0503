use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization(pub Vec<(BigUint, u32)>);

impl Factorization {
    pub fn value(&self) -> BigUint {
        self.0.iter().map(|(p, e)| p.pow(*e)).product()
    }
}

impl fmt::Display for Factorization {
    /// `2^21 * 3^5 * 5^2 * 7`; the empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Trial division.
pub fn factorize(n: &BigUint) -> Factorization {
    let mut out = Vec::new();
    if n.is_zero() {
        return Factorization(out);
    }
    let mut n = n.clone();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    Factorization(out)
}
