//! The completion-count polynomial in two bases: offset falling factorials
//! `(λ-λ0)(λ-λ0-1)…(λ-λ0-r+1)` and plain powers of `λ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::ExactInt;

/// Monic polynomial `Σ m[r]·(λ-λ0)_r`, with the equivalent monomial
/// coefficients cached. Equality compares the monomial coefficients.
#[derive(Debug, Clone)]
pub struct PartialChromaticPolynomial<T> {
    lambda0: usize,
    falling: Vec<T>,
    monomial: Vec<T>,
}

impl<T: PartialEq> PartialEq for PartialChromaticPolynomial<T> {
    fn eq(&self, other: &Self) -> bool {
        self.monomial == other.monomial
    }
}

impl<T: Eq> Eq for PartialChromaticPolynomial<T> {}

/// Builds the polynomial from its falling-factorial coefficients `m`,
/// expanding each basis element by repeated multiplication with
/// `(λ - λ0 - r)`.
pub fn assemble_polynomial<T: ExactInt>(
    lambda0: usize,
    m: Vec<T>,
) -> Result<PartialChromaticPolynomial<T>> {
    let Some(last) = m.last() else {
        return Err(Error::NoCoefficients);
    };
    if !last.is_one() {
        return Err(Error::NotMonic);
    }
    let degree = m.len() - 1;
    let mut monomial = vec![T::zero(); degree + 1];
    // basis[k] is the coefficient of λ^k in (λ-λ0)(λ-λ0-1)…(λ-λ0-r+1)
    let mut basis = vec![T::one()];
    for (r, coeff) in m.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            monomial[k] = monomial[k].try_add(&coeff.try_mul(b)?)?;
        }
        if r < degree {
            let shift = T::try_from_u64((lambda0 + r) as u64)?;
            let mut next = vec![T::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] = next[k + 1].try_add(b)?;
                next[k] = next[k].try_sub(&shift.try_mul(b)?)?;
            }
            basis = next;
        }
    }
    Ok(PartialChromaticPolynomial {
        lambda0,
        falling: m,
        monomial,
    })
}

impl<T: ExactInt> PartialChromaticPolynomial<T> {
    pub fn lambda0(&self) -> usize {
        self.lambda0
    }

    pub fn degree(&self) -> usize {
        self.falling.len() - 1
    }

    /// `m[r]`, the coefficient of `(λ-λ0)(λ-λ0-1)…(λ-λ0-r+1)`.
    pub fn falling_coeffs(&self) -> &[T] {
        &self.falling
    }

    /// `c[k]`, the coefficient of `λ^k`.
    pub fn monomial_coeffs(&self) -> &[T] {
        &self.monomial
    }

    pub fn is_monic(&self) -> bool {
        self.falling.last().is_some_and(T::is_one) && self.monomial.last().is_some_and(T::is_one)
    }

    /// Value at `lambda`, computed from the falling-factorial form.
    ///
    /// For `lambda >= λ0` this is the number of completions; below `λ0` it
    /// is only the polynomial's value.
    pub fn evaluate(&self, lambda: i64) -> Result<T> {
        let x = T::try_from_i64(lambda)?.try_sub(&T::try_from_u64(self.lambda0 as u64)?)?;
        let mut acc = T::zero();
        for (r, m) in self.falling.iter().enumerate().rev() {
            let factor = x.try_sub(&T::try_from_u64(r as u64)?)?;
            acc = m.try_add(&factor.try_mul(&acc)?)?;
        }
        Ok(acc)
    }

    /// Value at `lambda` from the monomial form (Horner).
    pub fn evaluate_monomial(&self, lambda: i64) -> Result<T> {
        let x = T::try_from_i64(lambda)?;
        self.monomial
            .iter()
            .rev()
            .try_fold(T::zero(), |acc, c| acc.try_mul(&x)?.try_add(c))
    }

    /// Recovers the polynomial from its values `f(λ0), f(λ0+1), …`.
    ///
    /// `m[r] = Δ^r f(λ0) / r!`; a difference that is not divisible by `r!`
    /// means the samples do not come from an integer-valued count.
    pub fn from_samples(lambda0: usize, samples: &[T]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::NoCoefficients);
        }
        let mut diffs = samples.to_vec();
        let mut m = Vec::with_capacity(samples.len());
        let mut factorial = T::one();
        for order in 0..samples.len() {
            if order > 0 {
                factorial = factorial.try_mul(&T::try_from_u64(order as u64)?)?;
                for k in 0..diffs.len() - 1 {
                    diffs[k] = diffs[k + 1].try_sub(&diffs[k])?;
                }
                diffs.pop();
            }
            let (q, rem) = diffs[0].div_rem(&factorial);
            if !rem.is_zero() {
                return Err(Error::NonIntegralDifference { order });
            }
            m.push(q);
        }
        assemble_polynomial(lambda0, m)
    }

    /// Compact JSON: `{"lambda0":…,"degree":…,"falling":[…],"monomial":[…]}`
    /// with coefficients as decimal strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("string-only payload")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("string-only payload")
    }

    fn to_wire(&self) -> Wire {
        Wire {
            lambda0: self.lambda0,
            degree: self.degree(),
            falling: self.falling.iter().map(T::to_string).collect(),
            monomial: self.monomial.iter().map(T::to_string).collect(),
        }
    }

    /// Parses [`to_json`](Self::to_json) output, checking that the two
    /// bases describe the same polynomial.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let parse = |list: &[String]| -> Result<Vec<T>> {
            list.iter()
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Json(format!("bad integer {s:?}")))
                })
                .collect()
        };
        let falling = parse(&wire.falling)?;
        let monomial = parse(&wire.monomial)?;
        if falling.len() != wire.degree + 1 || monomial.len() != wire.degree + 1 {
            return Err(Error::Json(
                "coefficient count does not match degree".into(),
            ));
        }
        let p = assemble_polynomial(wire.lambda0, falling)?;
        if p.monomial != monomial {
            return Err(Error::Json(
                "falling and monomial coefficients disagree".into(),
            ));
        }
        Ok(p)
    }
}

/// Samples the oracle at `λ0, …, λ0 + (N - t)` and interpolates.
pub fn interpolate_from_oracle<T, F>(
    g: &Graph,
    c: &PartialColoring,
    mut oracle: F,
) -> Result<PartialChromaticPolynomial<T>>
where
    T: ExactInt,
    F: FnMut(u64) -> Result<T>,
{
    assert_eq!(
        g.vertex_count(),
        c.vertex_count(),
        "coloring is for a different graph"
    );
    let lambda0 = c.lambda0();
    let samples = (0..=c.uncolored_count())
        .map(|k| oracle((lambda0 + k) as u64))
        .collect::<Result<Vec<T>>>()?;
    PartialChromaticPolynomial::from_samples(lambda0, &samples)
}

#[derive(Serialize, Deserialize)]
struct Wire {
    lambda0: usize,
    degree: usize,
    falling: Vec<String>,
    monomial: Vec<String>,
}

impl<T: ExactInt> fmt::Display for PartialChromaticPolynomial<T> {
    /// Monomial form, e.g. `lambda^2 - 3*lambda + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.monomial.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "lambda".to_string(),
                _ => format!("lambda^{k}"),
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{var}")?,
                _ => write!(f, "{mag}*{var}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
