//! Exact rational arithmetic for density thresholds.
//!
//! Density comparisons decide branches (Δ ≥ 2·mad, c = ⌈2·mad⌉), so floating
//! point is off the table. Values stay small here: numerators are bounded by
//! m·n and denominators by a small multiple of n², well inside i128 range for
//! cross-multiplied comparisons.

use std::cmp::Ordering;
use std::fmt;

/// A reduced fraction with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl Ratio {
    pub fn new(num: i128, den: i128) -> Ratio {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn int(v: i128) -> Ratio {
        Ratio { num: v, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i128 {
        -(-self.num).div_euclid(self.den)
    }

    pub fn recip(&self) -> Ratio {
        assert!(self.num != 0, "reciprocal of zero");
        Ratio::new(self.den, self.num)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self.num.checked_mul(other.den).expect("ratio overflow");
        let rhs = other.num.checked_mul(self.den).expect("ratio overflow");
        lhs.cmp(&rhs)
    }
}

impl std::ops::Add for Ratio {
    type Output = Ratio;
    fn add(self, rhs: Ratio) -> Ratio {
        Ratio::new(
            self.num * rhs.den + rhs.num * self.den,
            self.den * rhs.den,
        )
    }
}

impl std::ops::Sub for Ratio {
    type Output = Ratio;
    fn sub(self, rhs: Ratio) -> Ratio {
        Ratio::new(
            self.num * rhs.den - rhs.num * self.den,
            self.den * rhs.den,
        )
    }
}

impl std::ops::Mul for Ratio {
    type Output = Ratio;
    fn mul(self, rhs: Ratio) -> Ratio {
        // Reduce crosswise first to keep intermediates small.
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        Ratio::new(
            (self.num / g1) * (rhs.num / g2),
            (self.den / g2) * (rhs.den / g1),
        )
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for Ratio {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Ratio, String> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: i128 = n.trim().parse().map_err(|e| format!("{e}"))?;
        let den: i128 = d.trim().parse().map_err(|e| format!("{e}"))?;
        if den == 0 {
            return Err("zero denominator".into());
        }
        Ok(Ratio::new(num, den))
    }
}

/// The fraction with the smallest denominator in the closed interval
/// [lo, hi], ties broken towards the smaller numerator. Standard
/// continued-fraction descent.
pub fn simplest_between(lo: Ratio, hi: Ratio) -> Ratio {
    assert!(lo <= hi);
    if lo.ceil() <= hi.floor() {
        return Ratio::int(lo.ceil());
    }
    // Both strictly inside the same integer gap.
    let k = lo.floor();
    let inner = simplest_between((hi - Ratio::int(k)).recip(), (lo - Ratio::int(k)).recip());
    Ratio::int(k) + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_ordering() {
        assert_eq!(Ratio::new(24, 10), Ratio::new(12, 5));
        assert_eq!(Ratio::new(-3, -6), Ratio::new(1, 2));
        assert_eq!(Ratio::new(3, -6), Ratio::new(-1, 2));
        assert!(Ratio::new(1, 3) < Ratio::new(1, 2));
        assert!(Ratio::int(2) > Ratio::new(9, 5));
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(Ratio::new(7, 2).floor(), 3);
        assert_eq!(Ratio::new(7, 2).ceil(), 4);
        assert_eq!(Ratio::new(-7, 2).floor(), -4);
        assert_eq!(Ratio::new(-7, 2).ceil(), -3);
        assert_eq!(Ratio::int(5).ceil(), 5);
    }

    #[test]
    fn arithmetic() {
        let a = Ratio::new(1, 2);
        let b = Ratio::new(1, 3);
        assert_eq!(a + b, Ratio::new(5, 6));
        assert_eq!(a - b, Ratio::new(1, 6));
        assert_eq!(a * b, Ratio::new(1, 6));
    }

    #[test]
    fn simplest_fraction_in_interval() {
        // Unique denominator-bounded fraction in a tight interval.
        assert_eq!(
            simplest_between(Ratio::new(239, 100), Ratio::new(241, 100)),
            Ratio::new(12, 5)
        );
        // Integer endpoints take priority.
        assert_eq!(
            simplest_between(Ratio::new(5, 2), Ratio::new(7, 2)),
            Ratio::int(3)
        );
        // Degenerate interval.
        assert_eq!(
            simplest_between(Ratio::new(3, 7), Ratio::new(3, 7)),
            Ratio::new(3, 7)
        );
        assert_eq!(
            simplest_between(Ratio::new(7, 10), Ratio::new(4, 5)),
            Ratio::new(3, 4)
        );
    }

    #[test]
    fn display_round_trip() {
        let r = Ratio::new(24, 5);
        assert_eq!(r.to_string(), "24/5");
        assert_eq!("24/5".parse::<Ratio>().unwrap(), r);
        assert_eq!("3".parse::<Ratio>().unwrap(), Ratio::int(3));
    }
}
