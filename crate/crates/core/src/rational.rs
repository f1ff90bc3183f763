//! Exact rationals used for every fixity comparison.

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

/// Renders `p/q` always, including integers (`13/1`), so that CSV columns
/// parse uniformly.
pub fn render(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Ratio::from_integer(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_reduced() {
        assert_eq!(render(&ratio(14, 30)), "7/15");
        assert_eq!(render(&int(13)), "13/1");
        assert_eq!(render(&int(0)), "0/1");
    }
}
