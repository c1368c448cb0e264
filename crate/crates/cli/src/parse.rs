//! Text forms accepted on the command line.
//!
//! Words: comma-separated generator indices (`2,1,0`), letter form
//! (`s2s1s0`), `e` or the empty string for the identity, an optional
//! `:inv` suffix, or element JSON.
//!
//! Weights: JSON or sums such as `L0+L1`, `2L0-w1`, `L0+1/2delta`, where
//! `Li` is an affine fundamental weight, `wi` a finite fundamental weight
//! and `delta` (or `d`) the null root.
//!
//! Coweights: JSON or sums such as `-Lv1-Lv3`, `wv1+wv2`, `d`, `K`, where
//! `Lvi` is an affine fundamental coweight and `wvi` a finite one.

use affdem::rational::{int, parse_rat};
use affdem::{AffineWeylGroup, Coweight, FiniteCartanData, OrderKind, Rat, Twist, Weight, WeylElt};
use anyhow::{anyhow, bail, Context, Result};

use crate::json::{from_str, CoweightJson, ElementJson, WeightJson};

pub fn parse_word(group: &AffineWeylGroup, s: &str) -> Result<WeylElt> {
    let s = s.trim();
    if s.starts_with('{') {
        return from_str::<ElementJson>(s, "element")?.to_element(group);
    }
    let (body, invert) = match s.strip_suffix(":inv") {
        Some(b) => (b.trim(), true),
        None => (s, false),
    };
    let letters = parse_letters(body).with_context(|| format!("invalid word `{s}`"))?;
    let u = group.from_word(&letters).with_context(|| format!("invalid word `{s}`"))?;
    Ok(if invert { group.inverse(&u) } else { u })
}

fn parse_letters(body: &str) -> Result<Vec<usize>> {
    if body.is_empty() || body == "e" {
        return Ok(Vec::new());
    }
    if let Some(rest) = body.strip_prefix('s') {
        return rest.split('s').map(|t| Ok(t.parse::<usize>()?)).collect();
    }
    body.split(',').map(|t| Ok(t.trim().parse::<usize>()?)).collect()
}

/// Splits `a+b-c` into signed terms, each with its coefficient and symbol.
fn terms(s: &str) -> Result<Vec<(Rat, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut flush = |cur: &mut String, negative: bool| -> Result<()> {
        if cur.is_empty() {
            bail!("empty term in `{s}`");
        }
        let split = cur.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(|| anyhow!("term `{cur}` has no symbol"))?;
        let (coef, sym) = cur.split_at(split);
        let coef = coef.trim_end_matches('*');
        let mut c = if coef.is_empty() { int(1) } else { parse_rat(coef)? };
        if negative {
            c = -c;
        }
        out.push((c, sym.to_string()));
        cur.clear();
        Ok(())
    };
    for (pos, ch) in s.chars().filter(|c| !c.is_whitespace()).enumerate() {
        match ch {
            '+' | '-' if pos == 0 => negative = ch == '-',
            '+' | '-' => {
                flush(&mut cur, negative)?;
                negative = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    flush(&mut cur, negative)?;
    Ok(out)
}

fn index(sym: &str, prefix: &str) -> Option<usize> {
    sym.strip_prefix(prefix).and_then(|t| t.parse().ok())
}

pub fn parse_weight(data: &FiniteCartanData, s: &str) -> Result<Weight> {
    let s = s.trim();
    if s.starts_with('{') {
        return from_str::<WeightJson>(s, "weight")?.to_weight(data);
    }
    let mut acc = data.zero_weight();
    for (c, sym) in terms(s).with_context(|| format!("invalid weight `{s}`"))? {
        let basis = if sym == "delta" || sym == "d" {
            data.null_root()
        } else if let Some(i) = index(&sym, "L") {
            data.affine_fundamental_weight(i)?
        } else if let Some(i) = index(&sym, "w") {
            if i == 0 || i > data.rank() {
                bail!("finite fundamental weight index {i} out of range");
            }
            let mut w = data.zero_weight();
            w.fin[i - 1] = int(1);
            w
        } else {
            bail!("unknown weight symbol `{sym}`");
        };
        acc = &acc + &basis.scale(&c);
    }
    Ok(acc)
}

pub fn parse_coweight(data: &FiniteCartanData, s: &str) -> Result<Coweight> {
    let s = s.trim();
    if s.starts_with('{') {
        return from_str::<CoweightJson>(s, "coweight")?.to_coweight(data);
    }
    let mut acc = data.zero_coweight();
    for (c, sym) in terms(s).with_context(|| format!("invalid coweight `{s}`"))? {
        let basis = if sym == "d" {
            data.affine_fundamental_coweight(0)?
        } else if sym == "K" {
            data.central_coweight()
        } else if let Some(i) = index(&sym, "Lv") {
            data.affine_fundamental_coweight(i)?
        } else if let Some(i) = index(&sym, "wv") {
            data.fundamental_coweight(i)?
        } else {
            bail!("unknown coweight symbol `{sym}`");
        };
        acc = &acc + &basis.scale(&c);
    }
    Ok(acc)
}

/// Resolves `std`, `opp`, `semi` or `twisted`; the last needs a coweight.
pub fn parse_kind(group: &AffineWeylGroup, kind: &str, eta: Option<&str>) -> Result<OrderKind> {
    Ok(match kind {
        "std" | "standard" => OrderKind::Standard,
        "opp" | "opposite" => OrderKind::Opposite,
        "semi" | "semi-infinite" => OrderKind::SemiInfinite,
        "twisted" => {
            let eta = eta.ok_or_else(|| anyhow!("--kind twisted requires --eta"))?;
            OrderKind::Twisted(Twist::new(group, &parse_coweight(group.data(), eta)?)?)
        }
        other => bail!("unknown order kind `{other}`; expected std, opp, semi or twisted"),
    })
}
