//! Canonical text and JSON forms.
//!
//! Text uses the expression grammar (`t3 - 1/3*t1*t2`), so it parses back.
//! JSON is a list of `[[e(t1), e(t-1), .., e(t-4), e(t5)], "num/den"]` pairs.
//! Both list terms in descending graded-lex order over all nine exponents.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{
    BasePolynomial, Coordinate, FreePolynomial, Monomial, NormalForm, PolyError, Rational,
};

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `"n"` or `"n/d"` (with `d != 0`).
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let bad = || PolyError::BadCoefficient(s.to_string());
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn full_exponents(k: usize, m: &Monomial) -> [u16; 9] {
    let mut e = [0u16; 9];
    e[..8].copy_from_slice(m.exponents());
    e[8] = k as u16;
    e
}

fn sorted_terms(p: &FreePolynomial) -> Vec<([u16; 9], &Rational)> {
    let mut terms: Vec<_> = p
        .terms()
        .map(|(k, m, c)| (full_exponents(k, m), c))
        .collect();
    terms.sort_by(|(x, _), (y, _)| {
        let dx: u32 = x.iter().map(|&e| e as u32).sum();
        let dy: u32 = y.iter().map(|&e| e as u32).sum();
        dy.cmp(&dx).then_with(|| y.cmp(x))
    });
    terms
}

fn write_terms(f: &mut fmt::Formatter<'_>, p: &FreePolynomial) -> fmt::Result {
    let terms = sorted_terms(p);
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (exps, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let mag = c.abs();
        let factors: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(slot, &e)| {
                let v = Coordinate::from_slot(slot);
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            f.write_str(&format_rational(&mag))?;
        } else if mag.is_one() {
            f.write_str(&factors.join("*"))?;
        } else {
            write!(f, "{}*{}", format_rational(&mag), factors.join("*"))?;
        }
    }
    Ok(())
}

impl fmt::Display for FreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self)
    }
}

impl fmt::Display for BasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &FreePolynomial::from_base(self.clone()))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.lift())
    }
}

/// One JSON term: nine exponents (`t5` last) and a `"num/den"` coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm(pub Vec<u16>, pub String);

impl FreePolynomial {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        sorted_terms(self)
            .into_iter()
            .map(|(e, c)| JsonTerm(e.to_vec(), format!("{}/{}", c.numer(), c.denom())))
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self, PolyError> {
        let mut coeffs: Vec<Vec<(Monomial, Rational)>> = Vec::new();
        for JsonTerm(exps, coef) in terms {
            if exps.len() != 9 {
                return Err(PolyError::BadExponentVector(exps.len()));
            }
            let c = parse_rational(coef)?;
            let mut base = [0u16; 8];
            base.copy_from_slice(&exps[..8]);
            let k = exps[8] as usize;
            if coeffs.len() <= k {
                coeffs.resize_with(k + 1, Vec::new);
            }
            coeffs[k].push((Monomial::new(base), c));
        }
        Ok(Self::from_coefficients(
            coeffs.into_iter().map(BasePolynomial::from_terms).collect(),
        ))
    }
}

impl Serialize for FreePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FreePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        Self::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.lift().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NormalForm {
    /// Any free-ring term list is accepted and reduced.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(FreePolynomial::deserialize(deserializer)?.reduce())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    #[test]
    fn text_form_orders_terms() {
        let t = |c| FreePolynomial::var(c);
        let f = t(Coordinate::T3) - (t(Coordinate::T1) * t(Coordinate::T2)).scale(&rational(1, 3));
        assert_eq!(f.to_string(), "-1/3*t1*t2 + t3");
        let g = t(Coordinate::T5).pow(2) - FreePolynomial::from_integer(2);
        assert_eq!(g.to_string(), "t5^2 - 2");
        assert_eq!(FreePolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let f = FreePolynomial::var(Coordinate::T5).scale(&rational(-2, 3));
        let v = serde_json::to_string(&f).unwrap();
        assert_eq!(v, r#"[[[0,0,0,0,0,0,0,0,1],"-2/3"]]"#);
        let back: FreePolynomial = serde_json::from_str(&v).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_bad_terms() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rational(3, 2));
        let bad = vec![JsonTerm(vec![0; 8], "1/1".into())];
        assert_eq!(
            FreePolynomial::from_json_terms(&bad),
            Err(PolyError::BadExponentVector(8))
        );
    }
}
