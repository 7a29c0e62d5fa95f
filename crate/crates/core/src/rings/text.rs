//! Shared text format for polynomials and field elements.
//!
//! A polynomial prints as a sum of `c*m` terms in the caller's term order,
//! where `m` is a product of `var^k` factors and `c` is the coefficient's own
//! text. Coefficients that are not plain numbers are parenthesized. The same
//! grammar is parsed back: terms split at top-level `+`/`-`, factors at
//! top-level `*`, and every factor that is not a known variable power is a
//! coefficient factor handed to the coefficient parser.

use crate::error::{AlgebraError, Result};

fn is_plain_number(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty() && body.chars().all(|c| c.is_ascii_digit() || c == '/')
}

fn wrap(coeff: &str) -> String {
    if is_plain_number(coeff) {
        coeff.to_string()
    } else {
        format!("({coeff})")
    }
}

/// Joins `(coefficient text, monomial text)` pairs; an empty monomial is the constant term.
pub fn join_terms(terms: &[(String, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    if terms.len() == 1 && terms[0].1.is_empty() {
        return terms[0].0.clone();
    }
    let mut out = String::new();
    for (i, (coeff, mono)) in terms.iter().enumerate() {
        let term = if mono.is_empty() {
            wrap(coeff)
        } else if coeff == "1" {
            mono.clone()
        } else if coeff == "-1" {
            format!("-{mono}")
        } else {
            format!("{}*{mono}", wrap(coeff))
        };
        if i == 0 {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

/// `var`, `var^k` formatting for one factor of a monomial.
pub fn var_power(var: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Splits at top-level `+` and `-` into `(negated, body)` terms.
pub fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negated = false;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(AlgebraError::parse(format!("unbalanced parentheses in `{s}`")));
                }
                current.push(c);
            }
            '+' | '-' if depth == 0 && !current.trim_end().ends_with('^') && !current.trim_end().ends_with('/') => {
                let body = current.trim().to_string();
                if !body.is_empty() {
                    terms.push((negated, body));
                    negated = c == '-';
                } else if c == '-' {
                    negated = !negated;
                }
                current.clear();
            }
            c if c.is_whitespace() => current.push(' '),
            _ => current.push(c),
        }
    }
    if depth != 0 {
        return Err(AlgebraError::parse(format!("unbalanced parentheses in `{s}`")));
    }
    let body = current.trim().to_string();
    if body.is_empty() {
        return Err(AlgebraError::parse(format!("dangling operator or empty input in `{s}`")));
    }
    terms.push((negated, body));
    Ok(terms)
}

/// Splits a term at top-level `*`.
pub fn split_factors(term: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in term.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth -= 1;
                current.push(c);
            }
            '*' if depth == 0 => {
                out.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    out.push(current.trim().to_string());
    out
}

/// Removes one pair of enclosing parentheses if they wrap the whole string.
pub fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return t;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return inner.trim();
        }
    }
    t
}

/// Recognizes `var` or `var^k` for one of the given variable names.
pub fn parse_var_power(factor: &str, vars: &[String]) -> Result<Option<(usize, u32)>> {
    let (name, exp) = match factor.split_once('^') {
        Some((n, e)) => (n.trim(), Some(e.trim())),
        None => (factor.trim(), None),
    };
    let Some(idx) = vars.iter().position(|v| v == name) else {
        return Ok(None);
    };
    let k = match exp {
        None => 1,
        Some(e) => e
            .parse::<u32>()
            .map_err(|_| AlgebraError::parse(format!("invalid exponent in `{factor}`")))?,
    };
    Ok(Some((idx, k)))
}

/// A parsed term: sign, exponent vector over `vars`, and coefficient factors still in text form.
pub struct RawTerm {
    pub negated: bool,
    pub exponents: Vec<u32>,
    pub coeff_factors: Vec<String>,
}

pub fn parse_terms(s: &str, vars: &[String]) -> Result<Vec<RawTerm>> {
    let mut out = Vec::new();
    for (negated, body) in split_terms(s)? {
        let mut exponents = vec![0u32; vars.len()];
        let mut coeff_factors = Vec::new();
        for factor in split_factors(&body) {
            if factor.is_empty() {
                return Err(AlgebraError::parse(format!("empty factor in `{body}`")));
            }
            match parse_var_power(&factor, vars)? {
                Some((i, k)) => exponents[i] += k,
                None => coeff_factors.push(strip_parens(&factor).to_string()),
            }
        }
        out.push(RawTerm { negated, exponents, coeff_factors });
    }
    Ok(out)
}
