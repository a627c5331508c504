//! Predicted Turán exponents for cancellative and union-free r-graphs.

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Exponent bounds as exact rationals. The cancellative fields are present
/// only for `t ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentPrediction {
    pub r: usize,
    pub t: usize,
    /// `⌊2r/(t+2)⌋ + (2r mod (t+2))/(t+1)`
    pub lower_cancellative: Option<Ratio<i64>>,
    /// `⌈r/(⌊t/2⌋+1)⌉`
    pub upper_cancellative: Option<Ratio<i64>>,
    /// `gcd(2r − x, t+1) = 1`
    pub log_boost_cancellative: Option<bool>,
    /// `⌈(2r−t−1)/(t+2)⌉`
    pub x: Option<i64>,
    /// `r/(t−1)`
    pub lower_union_free: Ratio<i64>,
    /// `⌈r/(t−1)⌉`
    pub upper_union_free: Ratio<i64>,
    /// `gcd(r, t−1) = 1`
    pub log_boost_union_free: bool,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// Evaluates the exponent formulas for `(r, t)`. Requires `r ≥ 3`, `t ≥ 2`.
pub fn predicted_exponents(r: usize, t: usize) -> Result<ExponentPrediction> {
    if r < 3 || t < 2 {
        return Err(Error::InvalidParameter(format!(
            "exponent formulas need r ≥ 3 and t ≥ 2 (got r={r}, t={t})"
        )));
    }
    let (ri, ti) = (r as i64, t as i64);

    let (lower_c, upper_c, boost_c, x) = if t >= 3 {
        let x = ceil_div(2 * ri - ti - 1, ti + 2);
        let lower = Ratio::from_integer(Integer::div_floor(&(2 * ri), &(ti + 2)))
            + Ratio::new((2 * ri).mod_floor(&(ti + 2)), ti + 1);
        let upper = Ratio::from_integer(ceil_div(ri, ti / 2 + 1));
        let boost = (2 * ri - x).gcd(&(ti + 1)) == 1;
        (Some(lower), Some(upper), Some(boost), Some(x))
    } else {
        (None, None, None, None)
    };

    Ok(ExponentPrediction {
        r,
        t,
        lower_cancellative: lower_c,
        upper_cancellative: upper_c,
        log_boost_cancellative: boost_c,
        x,
        lower_union_free: Ratio::new(ri, ti - 1),
        upper_union_free: Ratio::from_integer(ceil_div(ri, ti - 1)),
        log_boost_union_free: ri.gcd(&(ti - 1)) == 1,
    })
}

pub(crate) fn ratio_f64(q: Ratio<i64>) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

#[derive(Serialize)]
struct Rational {
    value: f64,
    exact: String,
}

impl From<Ratio<i64>> for Rational {
    fn from(q: Ratio<i64>) -> Self {
        Rational {
            value: ratio_f64(q),
            exact: q.to_string(),
        }
    }
}

impl ExponentPrediction {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "t": self.t,
            "lower_cancellative": self.lower_cancellative.map(Rational::from),
            "upper_cancellative": self.upper_cancellative.map(Rational::from),
            "log_boost_cancellative": self.log_boost_cancellative,
            "x": self.x,
            "lower_union_free": Rational::from(self.lower_union_free),
            "upper_union_free": Rational::from(self.upper_union_free),
            "log_boost_union_free": self.log_boost_union_free,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r3_t3() {
        let p = predicted_exponents(3, 3).unwrap();
        assert_eq!(p.lower_cancellative, Some(Ratio::new(5, 4)));
        assert_eq!(p.upper_cancellative, Some(Ratio::from_integer(2)));
        assert_eq!(p.x, Some(1));
        assert_eq!(p.log_boost_cancellative, Some(true));
        assert_eq!(p.lower_union_free, Ratio::new(3, 2));
        assert_eq!(p.upper_union_free, Ratio::from_integer(2));
    }

    #[test]
    fn r4_t3_union_free_determined() {
        let p = predicted_exponents(4, 3).unwrap();
        assert_eq!(p.lower_union_free, Ratio::from_integer(2));
        assert_eq!(p.upper_union_free, Ratio::from_integer(2));
        assert!(!p.log_boost_union_free);
    }

    #[test]
    fn r4_t2_degenerate() {
        let p = predicted_exponents(4, 2).unwrap();
        assert_eq!(p.lower_union_free, Ratio::from_integer(4));
        assert!(p.lower_cancellative.is_none());
        assert!(predicted_exponents(2, 3).is_err());
        assert!(predicted_exponents(3, 1).is_err());
    }

    #[test]
    fn r4_t4_x() {
        assert_eq!(predicted_exponents(4, 4).unwrap().x, Some(1));
    }

    #[test]
    fn lower_bound_equals_alteration_exponent() {
        // (2r − x)/(t + 1) is the exponent of the (tr + x, t + 2) constraint
        for r in 3..12i64 {
            for t in 3..12i64 {
                let p = predicted_exponents(r as usize, t as usize).unwrap();
                let x = p.x.unwrap();
                assert!((0..r).contains(&x));
                assert_eq!(p.lower_cancellative.unwrap(), Ratio::new(2 * r - x, t + 1));
                assert!(p.lower_cancellative <= p.upper_cancellative);
                assert!(p.lower_union_free <= p.upper_union_free);
                // and never exceeds the pair-constraint exponent x + 1
                assert!(p.lower_cancellative.unwrap() <= Ratio::from_integer(x + 1));
            }
        }
    }
}
