//! Adjudication of an enclosure against a value printed with finitely many
//! digits.

use super::Interval;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Adjudication {
    Confirms,
    Tighter,
    Contradicts,
    Inconclusive,
}

impl Adjudication {
    pub fn is_ok(self) -> bool {
        matches!(self, Adjudication::Confirms | Adjudication::Tighter)
    }
}

/// A decimal `±M × 10^(exp - digits)` as printed, e.g. `6.7934⋯e−4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedDecimal {
    pub negative: bool,
    pub mantissa: u64,
    pub digits: u32,
    pub exp10: i32,
    pub truncated: bool,
}

impl PrintedDecimal {
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed printed decimal {text:?}"));
        let mut s: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        let mut truncated = false;
        for marker in ["\u{22ef}", "\u{2026}", "..."] {
            if s.contains(marker) {
                truncated = true;
                s = s.replace(marker, "");
            }
        }
        let (body, exp10) = split_exponent(&s).ok_or_else(bad)?;
        let (negative, body) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let mantissa: u64 = format!("{int_part}{frac}").parse().map_err(|_| bad())?;
        if mantissa >= 1 << 53 {
            return Err(bad());
        }
        Ok(PrintedDecimal { negative, mantissa, digits: frac.len() as u32, exp10, truncated })
    }

    /// One unit in the last printed digit.
    pub fn unit(&self) -> Interval {
        pow10(self.exp10 - self.digits as i32)
    }

    pub fn value(&self) -> Interval {
        self.signed(self.mantissa as f64 * self.unit())
    }

    fn signed(&self, x: Interval) -> Interval {
        if self.negative {
            -x
        } else {
            x
        }
    }

    /// The window `[v − u, v + u]`, returned as the enclosures of its two
    /// endpoints.
    fn window(&self) -> (Interval, Interval) {
        let u = self.unit();
        let m = self.mantissa as f64;
        let a = self.signed((m - 1.0) * u);
        let b = self.signed((m + 1.0) * u);
        if self.negative {
            (b, a)
        } else {
            (a, b)
        }
    }
}

fn split_exponent(s: &str) -> Option<(&str, i32)> {
    for sep in ["\u{d7}10^", "x10^", "*10^", "\u{d7}10", "e", "E"] {
        if let Some((body, exp)) = s.split_once(sep) {
            return exp.parse().ok().map(|e| (body, e));
        }
    }
    Some((s, 0))
}

/// Enclosure of `10^k`.
pub(crate) fn pow10(k: i32) -> Interval {
    if (0..=22).contains(&k) {
        Interval::point(10f64.powi(k))
    } else if (-22..0).contains(&k) {
        Interval::ONE / Interval::point(10f64.powi(-k))
    } else {
        Interval::point(10.0).powi(k)
    }
}

/// Compares an enclosure with a printed decimal, allowing one unit of slack
/// in the last printed digit on either side.
pub fn matches_printed(a: Interval, printed: &str) -> Result<Adjudication> {
    let p = PrintedDecimal::parse(printed)?;
    Ok(adjudicate_decimal(a, &p))
}

pub(crate) fn adjudicate_decimal(a: Interval, p: &PrintedDecimal) -> Adjudication {
    let (lo, hi) = p.window();
    let outer = Interval::new(lo.lo(), hi.hi());
    if a.is_empty() || a.is_disjoint(&outer) {
        return Adjudication::Contradicts;
    }
    if lo.hi() <= hi.lo() {
        let inner = Interval::new(lo.hi(), hi.lo());
        if a.subset_of(&inner) {
            let tight = p.unit().lo() / 100.0;
            if a.interior_of(&inner) && a.width() < tight {
                return Adjudication::Tighter;
            }
            return Adjudication::Confirms;
        }
    }
    Adjudication::Inconclusive
}

/// A printed value, together with the relation it asserts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum PrintedValue {
    /// `value = d.ddd⋯`
    Decimal { text: String },
    /// The quantity is at most the printed value.
    AtMost { text: String },
    /// The quantity is at least the printed value.
    AtLeast { text: String },
    /// An exact rational such as `1/92`.
    Rational { num: i64, den: i64 },
    /// An exact integer assembly result.
    Integer { value: i64 },
}

impl PrintedValue {
    pub fn decimal(text: &str) -> Self {
        PrintedValue::Decimal { text: text.to_string() }
    }

    pub fn at_most(text: &str) -> Self {
        PrintedValue::AtMost { text: text.to_string() }
    }

    pub fn adjudicate(&self, a: Interval) -> Result<Adjudication> {
        use Adjudication::*;
        Ok(match self {
            PrintedValue::Decimal { text } => matches_printed(a, text)?,
            PrintedValue::AtMost { text } => {
                let v = PrintedDecimal::parse(text)?.value();
                if a.hi() <= v.lo() {
                    Confirms
                } else if a.lo() > v.hi() {
                    Contradicts
                } else {
                    Inconclusive
                }
            }
            PrintedValue::AtLeast { text } => {
                let v = PrintedDecimal::parse(text)?.value();
                if a.lo() >= v.hi() {
                    Confirms
                } else if a.hi() < v.lo() {
                    Contradicts
                } else {
                    Inconclusive
                }
            }
            PrintedValue::Rational { num, den } => {
                let r = Interval::ratio(*num, *den);
                if a.is_disjoint(&r) {
                    Contradicts
                } else if r.subset_of(&a) && a.width() <= 1e-12 * r.mag() {
                    Confirms
                } else {
                    Inconclusive
                }
            }
            PrintedValue::Integer { value } => {
                let v = *value as f64;
                if a.is_point() && a.lo() == v {
                    Confirms
                } else if !a.contains(v) {
                    Contradicts
                } else {
                    Inconclusive
                }
            }
        })
    }

    pub fn text(&self) -> String {
        match self {
            PrintedValue::Decimal { text } => text.clone(),
            PrintedValue::AtMost { text } => format!("<= {text}"),
            PrintedValue::AtLeast { text } => format!(">= {text}"),
            PrintedValue::Rational { num, den } => format!("{num}/{den}"),
            PrintedValue::Integer { value } => value.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_notation() {
        let p = PrintedDecimal::parse("6.7934\u{22ef}\u{d7}10^{\u{2212}4}").unwrap();
        assert_eq!((p.mantissa, p.digits, p.exp10, p.truncated), (67934, 4, -4, true));
        let q = PrintedDecimal::parse("1.7700\u{22ef} \u{d7} 10^8").unwrap();
        assert_eq!((q.mantissa, q.digits, q.exp10), (17700, 4, 8));
        let r = PrintedDecimal::parse("-0.121585107").unwrap();
        assert!(r.negative && r.digits == 9);
        assert!(PrintedDecimal::parse("abc").is_err());
        assert!(PrintedDecimal::parse("1.2.3").is_err());
    }

    #[test]
    fn documented_examples() {
        let a = Interval::new(36.7590, 36.7599);
        assert_eq!(matches_printed(a, "36.759\u{22ef}").unwrap(), Adjudication::Confirms);
        let b = Interval::new(5.0, 5.1);
        assert_eq!(matches_printed(b, "36.759").unwrap(), Adjudication::Contradicts);
        let c = Interval::new(0.0, 100.0);
        assert_eq!(matches_printed(c, "36.759").unwrap(), Adjudication::Inconclusive);
    }

    #[test]
    fn tight_enclosures_are_tighter() {
        let a = Interval::new(2.4234834, 2.4234835);
        assert_eq!(matches_printed(a, "2.4234\u{22ef}").unwrap(), Adjudication::Tighter);
    }

    #[test]
    fn relations() {
        let a = Interval::new(1.0964, 1.0965);
        assert_eq!(PrintedValue::at_most("1.1").adjudicate(a).unwrap(), Adjudication::Confirms);
        let r = PrintedValue::Rational { num: 1, den: 92 };
        assert_eq!(r.adjudicate(Interval::ratio(1, 92)).unwrap(), Adjudication::Confirms);
        assert_eq!(r.adjudicate(Interval::ratio(1, 91)).unwrap(), Adjudication::Contradicts);
    }
}
