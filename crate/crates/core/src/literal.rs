//! Text forms of elements and parameters.
//!
//! Term syntax, whitespace-insensitive:
//!
//! ```text
//! element := ["+"|"-"] term (("+"|"-") term)*
//! term    := coef | [coef ["*"]] ["i*"] unit
//! coef    := 7 | 3/4 | 0.25
//! unit    := 1 | e0 … e7 | i | j | k
//! ```
//!
//! `i` and `j` stand for e1 and e2. `k` is e4 in octonions and e3 in
//! quaternions. The `i*` prefix marks the imaginary part of a complex element;
//! on its own `i` is always the unit e1.
//!
//! JSON forms are accepted too: a coefficient array (`[a0, …, a7]`), a pair
//! of arrays for complex elements, and `{"coeffs": …, "params": …}` for an
//! element carrying its own parameters. Scalars may be integers, `"p/q"`
//! strings or decimal numbers (read exactly, so `0.1` is one tenth).

use serde_json::Value;

use crate::complex::{ComplexOctonion, ComplexQuaternion};
use crate::error::ParseError;
use crate::octonion::Octonion;
use crate::params::{OctParams, QuatParams};
use crate::quaternion::Quaternion;
use crate::scalar::{format_rational, int, parse_rational, Rational};
use crate::zorn::ZornElement;

fn element_error(literal: &str, reason: impl Into<String>) -> ParseError {
    ParseError::Element { literal: literal.to_string(), reason: reason.into() }
}

fn params_error(literal: &str, reason: impl Into<String>) -> ParseError {
    ParseError::Params { literal: literal.to_string(), reason: reason.into() }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Units {
    Quaternion,
    Octonion,
}

impl Units {
    fn dim(self) -> usize {
        match self {
            Units::Quaternion => 4,
            Units::Octonion => 8,
        }
    }

    fn lookup(self, name: &str) -> Option<usize> {
        let k = match name {
            "1" => 0,
            "i" => 1,
            "j" => 2,
            "k" => match self {
                Units::Quaternion => 3,
                Units::Octonion => 4,
            },
            _ => name.strip_prefix('e')?.parse::<usize>().ok()?,
        };
        (k < self.dim()).then_some(k)
    }
}

fn split_coefficient(term: &str) -> (&str, &str) {
    let bytes = term.as_bytes();
    let mut end = 0;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end > 0 && end < bytes.len() && (bytes[end] == b'/' || bytes[end] == b'.') {
        let mut j = end + 1;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        if bytes[end] == b'.' || j > end + 1 {
            end = j;
        }
    }
    term.split_at(end)
}

/// Parses the term syntax into real and imaginary coefficient vectors.
fn parse_terms(literal: &str, units: Units, complex: bool) -> Result<(Vec<Rational>, Vec<Rational>), ParseError> {
    let text: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(element_error(literal, "empty literal"));
    }
    let mut re = vec![int(0); units.dim()];
    let mut im = vec![int(0); units.dim()];
    let mut rest = text.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut negative = false;
        match rest.as_bytes()[0] {
            b'+' => rest = &rest[1..],
            b'-' => {
                negative = true;
                rest = &rest[1..];
            }
            _ if !first => return Err(element_error(literal, "terms must be joined by + or -")),
            _ => {}
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        if term.is_empty() {
            return Err(element_error(literal, "empty term"));
        }
        let (coef_text, mut unit) = split_coefficient(term);
        let coef = if coef_text.is_empty() {
            int(1)
        } else {
            parse_rational(coef_text).ok_or_else(|| element_error(literal, format!("bad coefficient `{coef_text}`")))?
        };
        if !coef_text.is_empty() {
            if let Some(u) = unit.strip_prefix('*') {
                unit = u;
                if unit.is_empty() {
                    return Err(element_error(literal, format!("dangling `*` in `{term}`")));
                }
            }
        }
        let imaginary = match unit.strip_prefix("i*") {
            Some(u) if complex => {
                unit = u;
                true
            }
            Some(_) => return Err(element_error(literal, "`i*` marks a complex part, but this algebra is real")),
            None => false,
        };
        let k = if unit.is_empty() {
            if coef_text.is_empty() {
                return Err(element_error(literal, format!("missing unit in `{term}`")));
            }
            0
        } else {
            units.lookup(unit).ok_or_else(|| element_error(literal, format!("unknown unit `{unit}`")))?
        };
        let value = if negative { -coef } else { coef };
        let slot = if imaginary { &mut im[k] } else { &mut re[k] };
        *slot += value;
    }
    Ok((re, im))
}

fn scalar_from_json(v: &Value, literal: &str) -> Result<Rational, ParseError> {
    let parsed = match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Some(int(i)),
            None => parse_rational(&n.to_string()),
        },
        Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| element_error(literal, format!("bad scalar {v}")))
}

fn array_from_json(v: &Value, len: usize, literal: &str) -> Result<Vec<Rational>, ParseError> {
    let items = v.as_array().ok_or_else(|| element_error(literal, "expected a coefficient array"))?;
    if items.len() != len {
        return Err(element_error(literal, format!("expected {len} coefficients, got {}", items.len())));
    }
    items.iter().map(|x| scalar_from_json(x, literal)).collect()
}

fn parse_json(literal: &str) -> Result<Value, ParseError> {
    serde_json::from_str(literal).map_err(|e| element_error(literal, e.to_string()))
}

fn is_json(literal: &str) -> bool {
    matches!(literal.trim_start().as_bytes().first(), Some(b'[' | b'{'))
}

fn params_field<'a>(v: &'a Value, literal: &str) -> Result<Option<&'a Value>, ParseError> {
    match v {
        Value::Object(map) => {
            if let Some(key) = map.keys().find(|k| *k != "coeffs" && *k != "params") {
                return Err(element_error(literal, format!("unexpected field `{key}`")));
            }
            Ok(map.get("params"))
        }
        _ => Ok(None),
    }
}

fn coeffs_field<'a>(v: &'a Value, literal: &str) -> Result<&'a Value, ParseError> {
    match v {
        Value::Object(map) => map.get("coeffs").ok_or_else(|| element_error(literal, "missing `coeffs`")),
        other => Ok(other),
    }
}

pub fn parse_quaternion(literal: &str, params: &QuatParams) -> Result<Quaternion, ParseError> {
    let (coeffs, params) = if is_json(literal) {
        let v = parse_json(literal)?;
        let own = match params_field(&v, literal)? {
            Some(p) => quat_params_from_json(p, literal)?,
            None => params.clone(),
        };
        (array_from_json(coeffs_field(&v, literal)?, 4, literal)?, own)
    } else {
        (parse_terms(literal, Units::Quaternion, false)?.0, params.clone())
    };
    Ok(Quaternion::new(coeffs.try_into().unwrap(), params))
}

pub fn parse_octonion(literal: &str, params: &OctParams) -> Result<Octonion, ParseError> {
    let (coeffs, params) = if is_json(literal) {
        let v = parse_json(literal)?;
        let own = match params_field(&v, literal)? {
            Some(p) => oct_params_from_json(p, literal)?,
            None => params.clone(),
        };
        (array_from_json(coeffs_field(&v, literal)?, 8, literal)?, own)
    } else {
        (parse_terms(literal, Units::Octonion, false)?.0, params.clone())
    };
    Ok(Octonion::new(coeffs.try_into().unwrap(), params))
}

fn complex_parts(literal: &str, units: Units) -> Result<(Vec<Rational>, Vec<Rational>), ParseError> {
    if !is_json(literal) {
        return parse_terms(literal, units, true);
    }
    let v = parse_json(literal)?;
    let (re, im) = match &v {
        Value::Array(parts) if parts.len() == 2 && parts.iter().all(Value::is_array) => (&parts[0], &parts[1]),
        Value::Object(map) if map.len() == 2 && map.contains_key("re") && map.contains_key("im") => (&map["re"], &map["im"]),
        _ => return Err(element_error(literal, "expected [[re…], [im…]] or {\"re\": …, \"im\": …}")),
    };
    Ok((array_from_json(re, units.dim(), literal)?, array_from_json(im, units.dim(), literal)?))
}

pub fn parse_complex_octonion(literal: &str) -> Result<ComplexOctonion, ParseError> {
    let (re, im) = complex_parts(literal, Units::Octonion)?;
    let p = OctParams::cayley();
    Ok(ComplexOctonion { re: Octonion::new(re.try_into().unwrap(), p.clone()), im: Octonion::new(im.try_into().unwrap(), p) })
}

pub fn parse_complex_quaternion(literal: &str) -> Result<ComplexQuaternion, ParseError> {
    let (re, im) = complex_parts(literal, Units::Quaternion)?;
    let p = QuatParams::hamilton();
    Ok(ComplexQuaternion { re: Quaternion::new(re.try_into().unwrap(), p.clone()), im: Quaternion::new(im.try_into().unwrap(), p) })
}

/// A Zorn element as the flat array `[a, b, u1, u2, u3, v1, v2, v3]`.
pub fn parse_zorn(literal: &str) -> Result<ZornElement, ParseError> {
    let v = parse_json(literal)?;
    let flat = array_from_json(&v, 8, literal)?;
    Ok(ZornElement::from_flat(flat.try_into().unwrap()))
}

fn param_list(literal: &str, names: &[&str]) -> Result<Vec<Rational>, ParseError> {
    let t = literal.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| params_error(literal, e.to_string()))?;
        let map = v.as_object().ok_or_else(|| params_error(literal, "expected an object"))?;
        if let Some(key) = map.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(params_error(literal, format!("unexpected field `{key}`")));
        }
        return names
            .iter()
            .map(|n| {
                let x = map.get(*n).ok_or_else(|| params_error(literal, format!("missing `{n}`")))?;
                scalar_from_json(x, literal).map_err(|_| params_error(literal, format!("bad value for `{n}`")))
            })
            .collect();
    }
    if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| params_error(literal, e.to_string()))?;
        return array_from_json(&v, names.len(), literal).map_err(|_| params_error(literal, format!("expected {} values", names.len())));
    }
    let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != names.len() {
        return Err(params_error(literal, format!("expected {} comma-separated values", names.len())));
    }
    parts
        .iter()
        .map(|p| parse_rational(p).ok_or_else(|| params_error(literal, format!("bad value `{}`", p.trim()))))
        .collect()
}

fn quat_params_from_json(v: &Value, literal: &str) -> Result<QuatParams, ParseError> {
    parse_quat_params(&v.to_string()).map_err(|e| element_error(literal, e.to_string()))
}

fn oct_params_from_json(v: &Value, literal: &str) -> Result<OctParams, ParseError> {
    parse_oct_params(&v.to_string()).map_err(|e| element_error(literal, e.to_string()))
}

/// `β1,β2`, `[β1,β2]` or `{"beta1": …, "beta2": …}`.
pub fn parse_quat_params(literal: &str) -> Result<QuatParams, ParseError> {
    let v = param_list(literal, &["beta1", "beta2"])?;
    let [b1, b2]: [Rational; 2] = v.try_into().unwrap();
    Ok(QuatParams::new(b1, b2))
}

/// `α,β,γ`, `[α,β,γ]` or `{"alpha": …, "beta": …, "gamma": …}`.
pub fn parse_oct_params(literal: &str) -> Result<OctParams, ParseError> {
    let v = param_list(literal, &["alpha", "beta", "gamma"])?;
    let [a, b, g]: [Rational; 3] = v.try_into().unwrap();
    Ok(OctParams::new(a, b, g))
}

fn unit_name(k: usize) -> String {
    if k == 0 {
        String::new()
    } else {
        format!("e{k}")
    }
}

/// Appends `coef·unit` to `out`, e.g. `- 3/4*i*e2`.
fn push_term(out: &mut String, coef: &Rational, unit: &str) {
    use num_traits::{One, Signed};
    let negative = coef.is_negative();
    let mag = coef.abs();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let text = format_rational(&mag);
    match (unit.is_empty(), mag.is_one()) {
        (true, _) => out.push_str(&text),
        (false, true) => out.push_str(unit),
        (false, false) if mag.is_integer() && !unit.starts_with('i') => {
            out.push_str(&text);
            out.push_str(unit);
        }
        (false, false) => {
            out.push_str(&text);
            out.push('*');
            out.push_str(unit);
        }
    }
}

fn format_parts(re: &[Rational], im: &[Rational]) -> String {
    use num_traits::Zero;
    let mut out = String::new();
    for (k, c) in re.iter().enumerate() {
        if !c.is_zero() {
            push_term(&mut out, c, &unit_name(k));
        }
    }
    for (k, c) in im.iter().enumerate() {
        if !c.is_zero() {
            let unit = if k == 0 { "i*1".to_string() } else { format!("i*e{k}") };
            push_term(&mut out, c, &unit);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_quaternion(q: &Quaternion) -> String {
    format_parts(&q.coeffs, &[])
}

pub fn format_octonion(x: &Octonion) -> String {
    format_parts(&x.coeffs, &[])
}

pub fn format_complex_octonion(a: &ComplexOctonion) -> String {
    format_parts(&a.re.coeffs, &a.im.coeffs)
}

pub fn format_complex_quaternion(q: &ComplexQuaternion) -> String {
    format_parts(&q.re.coeffs, &q.im.coeffs)
}

/// JSON value of a scalar: a number for integers that fit in `i64`, otherwise
/// a `"p/q"` or decimal string.
pub fn scalar_json(r: &Rational) -> Value {
    use num_traits::ToPrimitive;
    match (r.is_integer(), r.numer().to_i64()) {
        (true, Some(i)) => Value::from(i),
        _ => Value::from(format_rational(r)),
    }
}

pub fn coeffs_json(coeffs: &[Rational]) -> Value {
    Value::Array(coeffs.iter().map(scalar_json).collect())
}

pub fn format_zorn(z: &ZornElement) -> String {
    coeffs_json(&z.to_flat()).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Octonion {
        parse_octonion(s, &OctParams::cayley()).unwrap()
    }

    #[test]
    fn terms_and_aliases() {
        assert_eq!(o("e5"), Octonion::basis(5, OctParams::cayley()));
        assert_eq!(o("k"), Octonion::basis(4, OctParams::cayley()));
        assert_eq!(o(" 1 + 2 e1 - 3/4*e7 ").coeffs[7], -Rational::new(3.into(), 4.into()));
        assert_eq!(o("-i").coeffs[1], int(-1));
        assert_eq!(o("e1 + e1").coeffs[1], int(2));
        assert_eq!(o("0.5e2").coeffs[2], Rational::new(1.into(), 2.into()));
        let q = parse_quaternion("k", &QuatParams::hamilton()).unwrap();
        assert_eq!(q.coeffs[3], int(1));
    }

    #[test]
    fn rejects_malformed_terms() {
        for bad in ["", "e8", "2*", "e1e2", "x", "i*e2", "+", "1 -", "3/0e1"] {
            assert!(parse_octonion(bad, &OctParams::cayley()).is_err(), "{bad}");
        }
        assert!(parse_quaternion("e4", &QuatParams::hamilton()).is_err());
    }

    #[test]
    fn complex_terms() {
        let a = parse_complex_octonion("i*e2").unwrap();
        assert_eq!(a.im, Octonion::basis(2, OctParams::cayley()));
        let b = parse_complex_octonion("e1 - 2*i*1").unwrap();
        assert_eq!(b.re.coeffs[1], int(1));
        assert_eq!(b.im.coeffs[0], int(-2));
        assert_eq!(format_complex_octonion(&b), "e1 - 2*i*1");
    }

    #[test]
    fn json_forms() {
        assert_eq!(o("[0,0,0,0,0,1,0,0]"), o("e5"));
        assert_eq!(o("[\"1/2\",0,0,0,0,0,0,0.25]"), o("1/2 + 0.25e7"));
        let own = parse_octonion(r#"{"coeffs":[1,0,0,0,0,0,0,0],"params":{"alpha":1,"beta":1,"gamma":-1}}"#, &OctParams::cayley()).unwrap();
        assert_eq!(own.params, OctParams::from_ints(1, 1, -1));
        let a = parse_complex_octonion("[[1,0,0,0,0,0,0,0],[0,0,1,0,0,0,0,0]]").unwrap();
        assert_eq!(a, parse_complex_octonion("1 + i*e2").unwrap());
        assert!(parse_octonion("[1,2]", &OctParams::cayley()).is_err());
        assert!(parse_zorn("[1,1,0,0,0,0,0,0]").is_ok());
    }

    #[test]
    fn params_forms() {
        assert_eq!(parse_oct_params("1,1,-1").unwrap(), OctParams::from_ints(1, 1, -1));
        assert_eq!(parse_oct_params("(1, -1, 2)").unwrap(), OctParams::from_ints(1, -1, 2));
        assert_eq!(parse_quat_params(r#"{"beta1":2,"beta2":"3"}"#).unwrap(), QuatParams::from_ints(2, 3));
        assert_eq!(parse_oct_params("[1,\"1/2\",-1]").unwrap(), OctParams::new(Rational::from_integer(1.into()), Rational::new(1.into(), 2.into()), Rational::from_integer((-1).into())));
        assert!(parse_quat_params("1,2,3").is_err());
        assert!(parse_oct_params(r#"{"alpha":1,"beta":1}"#).is_err());
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(format_octonion(&o("1 + 2e1 - e3")), "1 + 2e1 - e3");
        assert_eq!(format_octonion(&o("-e5")), "-e5");
        assert_eq!(format_octonion(&o("0")), "0");
        assert_eq!(format_octonion(&o("-3/4e2")), "-3/4*e2");
    }
}
