//! Line-oriented text formats for presentations, braids, representations,
//! monodromy data and threshold tables.
//!
//! Word grammar: whitespace-separated tokens over the generator names.
//! `-x` or `X` is the inverse of `x`, `x^3` a power, and `[a,b]` the
//! commutator (nesting allowed; the two sides may be multi-token words).
//! Relators are one word per `rel:` line; `u = v` relations are written as
//! `u v^-1`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use pi1_core::algebra::numberfield::NumberField;
use pi1_core::alexander::{RepTemplate, SymEntry, SymTerm};
use pi1_core::presentations::Presentation;
use pi1_core::topology::{MonodromyData, ThresholdInstance};
use pi1_core::words::{BraidWord, FreeEndomorphism, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// Commutator expansion convention for the `[a,b]` sugar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CommutatorConvention {
    /// `[a,b] = a b a^-1 b^-1`
    #[default]
    AbAB,
    /// `[a,b] = a^-1 b^-1 a b`
    ABab,
}

impl CommutatorConvention {
    fn expand(&self, a: &Word, b: &Word) -> Word {
        match self {
            CommutatorConvention::AbAB => Word::commutator(a, b),
            CommutatorConvention::ABab => a
                .inverse()
                .concat(&b.inverse())
                .concat(a)
                .concat(b),
        }
    }
}

/// Split a word string into top-level tokens, keeping bracket groups whole.
fn tokenize(s: &str) -> Result<Vec<String>, ParseError> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return err("unbalanced ']'");
                }
                current.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if depth != 0 {
        return err("unbalanced '['");
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    Ok(tokens)
}

/// Parse one word over the named generators.
pub fn parse_word(
    s: &str,
    gens: &[String],
    conv: CommutatorConvention,
) -> Result<Word, ParseError> {
    let mut word = Word::identity();
    for token in tokenize(s)? {
        word = word.concat(&parse_token(&token, gens, conv)?);
    }
    Ok(word)
}

fn parse_token(
    token: &str,
    gens: &[String],
    conv: CommutatorConvention,
) -> Result<Word, ParseError> {
    // split off a trailing ^exp (outside brackets)
    let (body, exp) = match split_exponent(token) {
        Some((b, e)) => (b, e),
        None => (token, 1),
    };
    let base = if let Some(inner) = body.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| ParseError(format!("malformed commutator `{token}`")))?;
        let (lhs, rhs) = split_top_comma(inner)
            .ok_or_else(|| ParseError(format!("commutator `{token}` needs a top-level comma")))?;
        let a = parse_word(lhs, gens, conv)?;
        let b = parse_word(rhs, gens, conv)?;
        conv.expand(&a, &b)
    } else {
        let (name, invert) = if let Some(stripped) = body.strip_prefix('-') {
            (stripped.to_string(), true)
        } else if body.chars().next().is_some_and(|c| c.is_uppercase())
            && !gens.iter().any(|g| g == body)
        {
            (body.to_lowercase(), true)
        } else {
            (body.to_string(), false)
        };
        let idx = gens
            .iter()
            .position(|g| *g == name)
            .ok_or_else(|| ParseError(format!("unknown generator `{name}`")))?;
        if invert {
            Word::gen_inv(idx)
        } else {
            Word::gen(idx)
        }
    };
    Ok(base.pow(exp))
}

fn split_exponent(token: &str) -> Option<(&str, i32)> {
    let mut depth = 0;
    for (i, ch) in token.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '^' if depth == 0 => {
                let exp = token[i + 1..].parse::<i32>().ok()?;
                return Some((&token[..i], exp));
            }
            _ => {}
        }
    }
    None
}

fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_presentation(
    text: &str,
    conv: CommutatorConvention,
) -> Result<Presentation, ParseError> {
    let mut gens: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for line in content_lines(text) {
        if let Some(rest) = line.strip_prefix("gens:") {
            if gens.is_some() {
                return err("duplicate `gens:` line");
            }
            gens = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let gens = gens
                .as_ref()
                .ok_or_else(|| ParseError("`rel:` before `gens:`".into()))?;
            relators.push(parse_word(rest, gens, conv)?);
        } else {
            return err(format!("unrecognized line `{line}`"));
        }
    }
    let gens = gens.ok_or_else(|| ParseError("missing `gens:` line".into()))?;
    Presentation::new(gens, relators).map_err(|e| ParseError(e.to_string()))
}

pub fn serialize_presentation(p: &Presentation) -> String {
    let mut out = format!("gens: {}\n", p.gens().join(" "));
    for r in p.relators() {
        out.push_str(&format!("rel: {}\n", serialize_word(p, r)));
    }
    out
}

/// Words serialize with `-name` inverses and `^k` powers, re-parseable by
/// `parse_word`.
pub fn serialize_word(p: &Presentation, w: &Word) -> String {
    if w.is_empty() {
        return String::new();
    }
    let letters = w.letters();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        let name = &p.gens()[l.unsigned_abs() as usize - 1];
        let tok = match (l > 0, run) {
            (true, 1) => name.clone(),
            (false, 1) => format!("-{name}"),
            (true, _) => format!("{name}^{run}"),
            (false, _) => format!("{name}^-{run}"),
        };
        parts.push(tok);
        i += run;
    }
    parts.join(" ")
}

pub fn parse_braids(text: &str) -> Result<(usize, Vec<BraidWord>), ParseError> {
    let mut strands: Option<usize> = None;
    let mut braids = Vec::new();
    for line in content_lines(text) {
        if let Some(rest) = line.strip_prefix("strands:") {
            strands = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad strand count `{rest}`")))?,
            );
        } else if let Some(rest) = line.strip_prefix("word:") {
            let n = strands.ok_or_else(|| ParseError("`word:` before `strands:`".into()))?;
            let mut letters = Vec::new();
            for tok in rest.split_whitespace() {
                let (inv, body) = if let Some(b) = tok.strip_prefix('S') {
                    (true, b)
                } else if let Some(b) = tok.strip_prefix('s') {
                    (false, b)
                } else {
                    return err(format!("braid letter `{tok}` must start with s or S"));
                };
                let k: i32 = body
                    .parse()
                    .map_err(|_| ParseError(format!("bad braid letter `{tok}`")))?;
                letters.push(if inv { -k } else { k });
            }
            braids.push(
                BraidWord::new(n, letters).map_err(|e| ParseError(e.to_string()))?,
            );
        } else {
            return err(format!("unrecognized line `{line}`"));
        }
    }
    let strands = strands.ok_or_else(|| ParseError("missing `strands:` line".into()))?;
    Ok((strands, braids))
}

pub fn serialize_braid(b: &BraidWord) -> String {
    let word = b
        .letters()
        .iter()
        .map(|&l| {
            if l > 0 {
                format!("s{l}")
            } else {
                format!("S{}", -l)
            }
        })
        .collect::<Vec<_>>()
        .join(" ");
    format!("strands: {}\nword: {}\n", b.strands(), word)
}

pub fn parse_monodromy(text: &str) -> Result<MonodromyData, ParseError> {
    let mut rank: Option<usize> = None;
    let mut loops: Option<usize> = None;
    let mut maps: Vec<FreeEndomorphism> = Vec::new();
    for line in content_lines(text) {
        if let Some(rest) = line.strip_prefix("rank:") {
            rank = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad rank `{rest}`")))?,
            );
        } else if let Some(rest) = line.strip_prefix("loops:") {
            loops = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad loop count `{rest}`")))?,
            );
        } else if let Some(rest) = line.strip_prefix("map") {
            let m = rank.ok_or_else(|| ParseError("`map` before `rank:`".into()))?;
            let gens: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
            let body = rest
                .split_once(':')
                .ok_or_else(|| ParseError(format!("malformed map line `{line}`")))?
                .1;
            let images: Vec<Word> = body
                .split('|')
                .map(|part| parse_word(part, &gens, CommutatorConvention::default()))
                .collect::<Result<_, _>>()?;
            if images.len() != m {
                return err(format!(
                    "map line has {} images, rank is {m}",
                    images.len()
                ));
            }
            maps.push(
                FreeEndomorphism::new(m, images).map_err(|e| ParseError(e.to_string()))?,
            );
        } else {
            return err(format!("unrecognized line `{line}`"));
        }
    }
    let rank = rank.ok_or_else(|| ParseError("missing `rank:` line".into()))?;
    if let Some(l) = loops {
        if l != maps.len() {
            return err(format!("declared {l} loops but found {} maps", maps.len()));
        }
    }
    MonodromyData::new(rank, maps).map_err(|e| ParseError(e.to_string()))
}

pub fn parse_threshold(text: &str) -> Result<ThresholdInstance, ParseError> {
    let mut values: Option<Vec<String>> = None;
    let mut entries: Vec<(usize, bool)> = Vec::new();
    for line in content_lines(text) {
        if let Some(rest) = line.strip_prefix("values:") {
            values = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("set:") {
            let values = values
                .as_ref()
                .ok_or_else(|| ParseError("`set:` before `values:`".into()))?;
            let (members, verdict) = rest
                .split_once("=>")
                .ok_or_else(|| ParseError(format!("missing `=>` in `{line}`")))?;
            let mut mask = 0usize;
            for name in members.split_whitespace() {
                if name == "-" {
                    continue;
                }
                let bit = values
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| ParseError(format!("unknown value `{name}`")))?;
                mask |= 1 << bit;
            }
            let verdict = match verdict.trim() {
                "yes" => true,
                "no" => false,
                other => return err(format!("verdict must be yes/no, got `{other}`")),
            };
            entries.push((mask, verdict));
        } else {
            return err(format!("unrecognized line `{line}`"));
        }
    }
    let values = values.ok_or_else(|| ParseError("missing `values:` line".into()))?;
    let size = 1usize << values.len();
    let mut table = vec![None; size];
    for (mask, verdict) in entries {
        if table[mask].replace(verdict).is_some() {
            return err(format!("duplicate entry for subset mask {mask}"));
        }
    }
    let table: Vec<bool> = table
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| ParseError(format!("missing entry for subset mask {i}"))))
        .collect::<Result<_, _>>()?;
    ThresholdInstance::new(values, table).map_err(|e| ParseError(e.to_string()))
}


/// Serialize a concrete representation as plain `xi`-polynomial entries,
/// re-parseable by [`parse_representation`].
pub fn serialize_representation(
    rep: &pi1_core::alexander::Representation,
    gens: &[String],
) -> String {
    use num_traits::Zero;
    let field = rep.field();
    let mut out = String::new();
    let min_poly = field
        .min_poly()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(pow, c)| {
            let mono = match pow {
                0 => String::new(),
                1 => "xi".to_string(),
                _ => format!("xi^{pow}"),
            };
            if mono.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                mono
            } else {
                format!("{c}{mono}")
            }
        })
        .collect::<Vec<_>>()
        .join("+");
    out.push_str(&format!("field: {}\n", min_poly.replace("+-", "-")));
    for (g, name) in gens.iter().enumerate() {
        out.push_str(&format!("eps {name} = {}\n", rep.eps()[g]));
    }
    for (g, name) in gens.iter().enumerate() {
        let m = rep.matrix(g);
        let rows: Vec<String> = (0..rep.degree())
            .map(|i| {
                let cols: Vec<String> = (0..rep.degree())
                    .map(|j| nf_entry_string(&m[(i, j)]))
                    .collect();
                format!("[{}]", cols.join(", "))
            })
            .collect();
        out.push_str(&format!("mat {name} = [{}]\n", rows.join(", ")));
    }
    out
}

fn nf_entry_string(e: &pi1_core::algebra::numberfield::NFElem) -> String {
    use num_traits::Zero;
    let mut parts: Vec<String> = Vec::new();
    for (pow, c) in e.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = if c.denom().is_one() {
            format!("{}", c.numer())
        } else {
            format!("{}/{}", c.numer(), c.denom())
        };
        let piece = match pow {
            0 => coeff,
            1 => format!("{coeff}*xi"),
            _ => format!("{coeff}*xi^{pow}"),
        };
        parts.push(piece);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

// ---- representation files ----

/// `field:` line, `eps <gen> = <int>` lines, `mat <gen> = [[..],[..]]` lines.
/// Entries are sums of terms over `xi`, `sqrt2` and `i` with rational
/// coefficients.
pub fn parse_representation(
    text: &str,
    gens: &[String],
) -> Result<RepTemplate, ParseError> {
    let mut field: Option<Arc<NumberField>> = None;
    let mut eps: Vec<Option<i64>> = vec![None; gens.len()];
    let mut mats: Vec<Option<Vec<Vec<SymEntry>>>> = vec![None; gens.len()];
    for line in content_lines(text) {
        if let Some(rest) = line.strip_prefix("field:") {
            field = Some(parse_field(rest.trim())?);
        } else if let Some(rest) = line.strip_prefix("eps") {
            let (name, value) = rest
                .split_once('=')
                .ok_or_else(|| ParseError(format!("malformed eps line `{line}`")))?;
            let idx = gen_index(gens, name.trim())?;
            eps[idx] = Some(
                value
                    .trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad eps value `{value}`")))?,
            );
        } else if let Some(rest) = line.strip_prefix("mat") {
            let (name, value) = rest
                .split_once('=')
                .ok_or_else(|| ParseError(format!("malformed mat line `{line}`")))?;
            let idx = gen_index(gens, name.trim())?;
            mats[idx] = Some(parse_matrix(value.trim())?);
        } else {
            return err(format!("unrecognized line `{line}`"));
        }
    }
    let field = field.ok_or_else(|| ParseError("missing `field:` line".into()))?;
    let eps: Vec<i64> = eps
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| ParseError(format!("missing eps for `{}`", gens[i]))))
        .collect::<Result<_, _>>()?;
    let mats: Vec<Vec<Vec<SymEntry>>> = mats
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| ParseError(format!("missing mat for `{}`", gens[i]))))
        .collect::<Result<_, _>>()?;
    let degree = mats[0].len();
    for m in &mats {
        if m.len() != degree || m.iter().any(|row| row.len() != degree) {
            return err("all matrices must be square of the same size");
        }
    }
    Ok(RepTemplate { field, eps, mats })
}

fn gen_index(gens: &[String], name: &str) -> Result<usize, ParseError> {
    gens.iter()
        .position(|g| g == name)
        .ok_or_else(|| ParseError(format!("unknown generator `{name}`")))
}

/// Defining polynomial like `xi^4+1` or `x^4 + 1` (monic, integer
/// coefficients).
fn parse_field(s: &str) -> Result<Arc<NumberField>, ParseError> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut push = |pow: usize, c: BigInt| {
        if coeffs.len() <= pow {
            coeffs.resize(pow + 1, BigInt::from(0));
        }
        coeffs[pow] += c;
    };
    for term in split_signed_terms(&cleaned) {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1i64, b),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coeff_str, pow) = if let Some(ix) = body.find('x') {
            let var_part = &body[ix..];
            let pow = match var_part.split_once('^') {
                Some((_, p)) => p
                    .parse::<usize>()
                    .map_err(|_| ParseError(format!("bad power in `{term}`")))?,
                None => 1,
            };
            (&body[..ix], pow)
        } else {
            (body, 0)
        };
        let coeff_str = coeff_str.trim_end_matches('*');
        let c: BigInt = if coeff_str.is_empty() {
            BigInt::one()
        } else {
            coeff_str
                .parse()
                .map_err(|_| ParseError(format!("bad coefficient in `{term}`")))?
        };
        push(pow, c * sign);
    }
    if coeffs.len() < 2 {
        return err("defining polynomial must have degree >= 1");
    }
    if !coeffs.last().unwrap().is_one() {
        return err("defining polynomial must be monic");
    }
    Ok(NumberField::new("xi", coeffs))
}

fn split_signed_terms(s: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut current = String::new();
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with('^') {
            terms.push(std::mem::take(&mut current));
            if ch == '-' {
                current.push('-');
            }
        } else {
            current.push(ch);
        }
    }
    terms.push(current);
    terms.into_iter().filter(|t| !t.is_empty()).collect()
}

/// `[[a, b], [c, d]]` with symbolic entries.
fn parse_matrix(s: &str) -> Result<Vec<Vec<SymEntry>>, ParseError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| ParseError(format!("matrix must be bracketed: `{s}`")))?;
    let mut rows = Vec::new();
    let mut depth = 0;
    let mut start = None;
    for (i, ch) in inner.char_indices() {
        match ch {
            '[' => {
                if depth == 0 {
                    start = Some(i + 1);
                }
                depth += 1;
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    let row_src = &inner[start.take().unwrap()..i];
                    let row: Vec<SymEntry> = row_src
                        .split(',')
                        .map(|e| parse_entry(e.trim()))
                        .collect::<Result<_, _>>()?;
                    rows.push(row);
                }
            }
            _ => {}
        }
    }
    if rows.is_empty() {
        return err("matrix has no rows");
    }
    Ok(rows)
}

/// Entry grammar: signed terms, each a product of factors joined by `*` (or
/// a single symbol with optional `/int` divisor), factors being rationals,
/// `xi[^k]`, `sqrt2`, or `i`.
fn parse_entry(s: &str) -> Result<SymEntry, ParseError> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return err("empty matrix entry");
    }
    let mut terms = Vec::new();
    for term in split_signed_terms(&cleaned) {
        let (mut coeff, body) = match term.strip_prefix('-') {
            Some(b) => (-BigRational::one(), b.to_string()),
            None => (BigRational::one(), term),
        };
        if body.is_empty() {
            return err("dangling sign in entry");
        }
        let mut xi_pow = 0u32;
        let mut sym = SymTerm::One;
        for factor in body.split('*') {
            if factor.is_empty() {
                return err(format!("empty factor in `{s}`"));
            }
            // allow `/int` on any factor
            let (factor, divisor) = match factor.split_once('/') {
                Some((f, d)) => {
                    let d: BigInt = d
                        .parse()
                        .map_err(|_| ParseError(format!("bad divisor in `{factor}`")))?;
                    (f, Some(d))
                }
                None => (factor, None),
            };
            if factor == "sqrt2" {
                if sym != SymTerm::One {
                    return err("at most one of sqrt2/i per term");
                }
                sym = SymTerm::Sqrt2;
            } else if factor == "i" {
                if sym != SymTerm::One {
                    return err("at most one of sqrt2/i per term");
                }
                sym = SymTerm::I;
            } else if let Some(rest) = factor.strip_prefix("xi") {
                let pow = match rest.strip_prefix('^') {
                    Some(p) => p
                        .parse::<u32>()
                        .map_err(|_| ParseError(format!("bad xi power `{factor}`")))?,
                    None if rest.is_empty() => 1,
                    None => return err(format!("bad factor `{factor}`")),
                };
                xi_pow += pow;
            } else if factor.is_empty() {
                // pure `/d` factor like the divisor of `sqrt2/2`
            } else {
                let n: BigInt = factor
                    .parse()
                    .map_err(|_| ParseError(format!("bad factor `{factor}`")))?;
                coeff *= BigRational::from_integer(n);
            }
            if let Some(d) = divisor {
                coeff /= BigRational::from_integer(d);
            }
        }
        terms.push((coeff, xi_pow, sym));
    }
    Ok(SymEntry { terms })
}
