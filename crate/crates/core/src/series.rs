//! Truncated formal power series with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        PowerSeries { coeffs }
    }

    /// Integer coefficients, zero-padded or truncated to `order`.
    pub fn from_integers(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order).map(|k| rat(values.get(k).copied().unwrap_or(0))).collect();
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::from_integers(&[], order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::from_integers(&[1], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        PowerSeries::from_integers(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    ///
    /// # Panics
    /// If `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    fn same_order(&self, other: &PowerSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.same_order(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.same_order(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.same_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// `self / other`, requiring a nonzero constant term in `other`.
    pub fn checked_div(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.same_order(other)?;
        let g0 = &other.coeffs[0];
        if g0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut h: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc -= &other.coeffs[k] * &h[n - k];
            }
            h.push(acc / g0);
        }
        Ok(PowerSeries { coeffs: h })
    }

    pub fn scale(&self, factor: &BigRational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiply by `x`, dropping the top coefficient.
    pub fn mul_x(&self) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(BigRational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        PowerSeries { coeffs }
    }

    /// Divide by `x`: requires a zero constant term; the result has order one
    /// less.
    pub fn div_x(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Keep coefficients up to `order`.
    pub fn truncate(&self, order: usize) -> PowerSeries {
        assert!(order <= self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// `self(inner(x))` by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let n = self.order();
        let mut acc = PowerSeries::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// The square root with constant term 1; `self` must have constant term 1.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let two = rat(2);
        let mut g: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        g.push(BigRational::one());
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &g[k] * &g[n - k];
            }
            g.push(acc / &two);
        }
        Ok(PowerSeries { coeffs: g })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as integers, failing on the first non-integer.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerCoefficient {
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }
}

/// Catalan generating function: `c_0 = 1`, `c_{n+1} = sum c_i c_{n-i}`.
pub fn catalan(order: usize) -> PowerSeries {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for n in 0..order {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    PowerSeries {
        coeffs: c.into_iter().map(BigRational::from_integer).collect(),
    }
}

/// `(8x^2 + 12x - 1 + (1 - 8x)^{3/2}) / (32x)`: the skew-indecomposable
/// members of Av(1342).
pub fn gf_av1342_skew_indecomposable(order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(Error::Precondition("order must be at least 1".into()));
    }
    let m = order + 1;
    let base = PowerSeries::from_integers(&[1, -8], m);
    let three_halves = base.checked_mul(&base.sqrt()?)?;
    let numerator = PowerSeries::from_integers(&[-1, 12, 8], m).checked_add(&three_halves)?;
    // the constant terms -1 and +1 cancel; anything else is an arithmetic bug
    let out = numerator
        .div_x()?
        .scale(&BigRational::new(BigInt::one(), BigInt::from(32)));
    nonnegative_integers(&out)?;
    Ok(out)
}

/// Generating function of the nonempty 1342-avoiders (equivalently the
/// 3124-avoiders). The class is a sequence of skew-indecomposable blocks, so
/// it is `f / (1 - f)` for `f` = [`gf_av1342_skew_indecomposable`].
pub fn gf_av1342(order: usize) -> Result<PowerSeries> {
    let f = gf_av1342_skew_indecomposable(order)?;
    let out = f.checked_div(&PowerSeries::one(order).checked_sub(&f)?)?;
    nonnegative_integers(&out)?;
    Ok(out)
}

fn nonnegative_integers(s: &PowerSeries) -> Result<()> {
    let ints = s.to_integers()?;
    match ints.iter().position(|c| c.is_negative()) {
        Some(index) => Err(Error::NonIntegerCoefficient {
            index,
            value: ints[index].to_string(),
        }),
        None => Ok(()),
    }
}

/// `A(x) = C(x C(x))`.
pub fn gf_a(order: usize) -> PowerSeries {
    let c = catalan(order);
    c.compose(&c.mul_x()).expect("x C(x) has zero constant term")
}

/// `B(x) = A(x) (C(x) - 1)`.
pub fn gf_b(order: usize) -> PowerSeries {
    let c = catalan(order);
    let c_minus_one = c.checked_sub(&PowerSeries::one(order)).unwrap();
    gf_a(order).checked_mul(&c_minus_one).unwrap()
}

/// `1 / (1 - x C(x C(x)))`, the generating function of Av(3124, 1234)
/// including the empty permutation.
pub fn gf_av3124_1234(order: usize) -> Result<PowerSeries> {
    let denom = PowerSeries::one(order).checked_sub(&gf_a(order).mul_x())?;
    let out = PowerSeries::one(order).checked_div(&denom)?;
    out.to_integers()?;
    Ok(out)
}

impl fmt::Display for PowerSeries {
    /// One `n: coefficient` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{k}: {c}")?;
        }
        Ok(())
    }
}

impl From<PowerSeries> for SeriesRepr {
    fn from(s: PowerSeries) -> Self {
        SeriesRepr {
            order: s.order(),
            coeffs: s
                .coeffs
                .iter()
                .map(|c| format!("{}/{}", c.numer(), c.denom()))
                .collect(),
        }
    }
}

impl TryFrom<SeriesRepr> for PowerSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coeffs.len() != r.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficients, got {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            )));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
                    .and_then(|q| {
                        if q.denom().is_zero() {
                            Err(Error::Parse("zero denominator".into()))
                        } else {
                            Ok(q)
                        }
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries { coeffs })
    }
}
