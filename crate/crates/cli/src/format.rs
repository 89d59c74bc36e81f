// SPDX-License-Identifier: Apache-2.0

//! Line-oriented `.bmod` module files and `.surg` surgery files.
//!
//! ```text
//! # comment
//! module "example-A"
//! block kind=symmetric prime="1 0 0 0 1" mult=1
//! block kind=hyperbolic prime="2 1 1" mult=1
//! block kind=symmetric prime="1 0 1" mult=1 pairing="1/2" offset=1
//! ```
//!
//! ```text
//! leaf 1: gen=1 poly="0 1" offset=-2
//! leaf 2: gen=2 poly="1"
//! ```
//!
//! Coefficients are listed from the constant term up. Generator indices in
//! surgery files are 1-based and refer to the validated generator order.

use std::collections::BTreeMap;
use std::fmt;

use blanchfield_core::module::{validate_module, BlanchfieldModule, BlockKind, BlockSpec, ModuleElement};
use blanchfield_core::surgery::SurgeryDatum;
use blanchfield_core::{Error, LPoly, Poly};

/// Input error tied to a line of a named file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub file: String,
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "{}:{}: {}", self.file, l, self.message),
            None => write!(f, "{}: {}", self.file, self.message),
        }
    }
}

impl std::error::Error for InputError {}

#[derive(Debug, Clone)]
pub struct ModuleFile {
    pub name: String,
    pub blocks: Vec<BlockSpec>,
    pub module: BlanchfieldModule,
}

/// Splits `key=value` tokens, honouring double quotes.
fn tokens(line: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => quoted = !quoted,
            c if c.is_whitespace() && !quoted => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if quoted {
        return Err("unterminated quote".into());
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn fields(tokens: &[String]) -> Result<BTreeMap<&str, &str>, String> {
    let mut map = BTreeMap::new();
    for t in tokens {
        let (k, v) = t.split_once('=').ok_or_else(|| format!("expected key=value, found '{t}'"))?;
        if map.insert(k, v).is_some() {
            return Err(format!("duplicate field '{k}'"));
        }
    }
    Ok(map)
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a).trim()
}

fn int_field<T: std::str::FromStr>(map: &BTreeMap<&str, &str>, key: &str) -> Result<Option<T>, String> {
    map.get(key)
        .map(|v| v.parse::<T>().map_err(|_| format!("invalid {key} '{v}'")))
        .transpose()
}

fn poly_field(map: &BTreeMap<&str, &str>, key: &str) -> Result<Option<Poly>, String> {
    map.get(key)
        .map(|v| Poly::parse(v).map_err(|e| format!("invalid {key} \"{v}\": {e}")))
        .transpose()
}

fn parse_block(rest: &[String]) -> Result<BlockSpec, String> {
    let map = fields(rest)?;
    for k in map.keys() {
        if !["kind", "prime", "mult", "pairing", "offset"].contains(k) {
            return Err(format!("unknown field '{k}'"));
        }
    }
    let kind = match map.get("kind").copied() {
        Some("symmetric") => BlockKind::Symmetric,
        Some("hyperbolic") => BlockKind::Hyperbolic,
        Some(other) => return Err(format!("unknown kind '{other}'")),
        None => return Err("missing kind".into()),
    };
    let prime = poly_field(&map, "prime")?.ok_or("missing prime")?;
    if prime.is_zero() {
        return Err("prime is zero".into());
    }
    let mult: u32 = int_field(&map, "mult")?.ok_or("missing mult")?;
    let offset: i64 = int_field(&map, "offset")?.unwrap_or(0);
    let pairing = poly_field(&map, "pairing")?;
    if pairing.is_none() && map.contains_key("offset") {
        return Err("offset without pairing".into());
    }
    Ok(match (kind, pairing) {
        (BlockKind::Symmetric, Some(p)) => {
            BlockSpec::symmetric_with(prime, mult, LPoly::new(offset, p.into_coeffs()))
        }
        (BlockKind::Symmetric, None) => BlockSpec::symmetric(prime, mult),
        (BlockKind::Hyperbolic, None) => BlockSpec::hyperbolic(prime, mult),
        (BlockKind::Hyperbolic, Some(_)) => return Err("hyperbolic blocks take no pairing".into()),
    })
}

pub fn parse_module(file: &str, text: &str) -> Result<ModuleFile, InputError> {
    let err = |line: Option<usize>, message: String| InputError { file: file.into(), line, message };
    let mut name = None;
    let mut blocks = Vec::new();
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let toks = tokens(line).map_err(|m| err(Some(n + 1), m))?;
        match toks[0].as_str() {
            "module" => {
                if name.is_some() {
                    return Err(err(Some(n + 1), "duplicate module header".into()));
                }
                if toks.len() != 2 {
                    return Err(err(Some(n + 1), "expected module \"<name>\"".into()));
                }
                name = Some(toks[1].clone());
            }
            "block" => {
                let spec = parse_block(&toks[1..]).map_err(|m| err(Some(n + 1), m))?;
                validate_module(std::slice::from_ref(&spec)).map_err(|e| err(Some(n + 1), e.to_string()))?;
                blocks.push(spec);
                lines.push(n + 1);
            }
            other => return Err(err(Some(n + 1), format!("unknown directive '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| err(None, "missing module header".into()))?;
    if blocks.is_empty() {
        return Err(err(None, "no blocks".into()));
    }
    let module = validate_module(&blocks).map_err(|e| err(lines.last().copied(), e.to_string()))?;
    Ok(ModuleFile { name, blocks, module })
}

pub fn parse_surgery(file: &str, text: &str, module: &BlanchfieldModule) -> Result<SurgeryDatum, InputError> {
    let err = |line: Option<usize>, message: String| InputError { file: file.into(), line, message };
    let mut leaves = [module.zero(), module.zero(), module.zero()];
    let mut seen = false;
    for (n, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let at = |m: String| err(Some(n + 1), m);
        let toks = tokens(line).map_err(at)?;
        if toks[0] != "leaf" || toks.len() < 3 {
            return Err(at("expected leaf <1|2|3>: gen=<index> poly=\"...\"".into()));
        }
        let slot = match toks[1].as_str() {
            "1:" => 0,
            "2:" => 1,
            "3:" => 2,
            other => return Err(at(format!("invalid leaf '{other}'"))),
        };
        let map = fields(&toks[2..]).map_err(at)?;
        for k in map.keys() {
            if !["gen", "poly", "offset"].contains(k) {
                return Err(at(format!("unknown field '{k}'")));
            }
        }
        let gen: usize = int_field(&map, "gen").map_err(at)?.ok_or_else(|| at("missing gen".into()))?;
        if gen == 0 || gen > module.len() {
            return Err(at(format!("generator {gen} out of range 1..={}", module.len())));
        }
        let poly = poly_field(&map, "poly").map_err(at)?.ok_or_else(|| at("missing poly".into()))?;
        let offset: i64 = int_field(&map, "offset").map_err(at)?.unwrap_or(0);
        let term: ModuleElement = module
            .monomial_element(gen - 1, &LPoly::new(offset, poly.into_coeffs()))
            .map_err(|e: Error| at(e.to_string()))?;
        leaves[slot] = &leaves[slot] + &term;
        seen = true;
    }
    if !seen {
        return Err(err(None, "no leaf lines".into()));
    }
    Ok(SurgeryDatum { leaves })
}

/// Writes a surgery datum in `.surg` form, one line per nonzero coordinate.
pub fn format_surgery(s: &SurgeryDatum) -> String {
    let mut out = String::new();
    for (j, leaf) in s.leaves.iter().enumerate() {
        for (g, p) in leaf.coords().iter().enumerate() {
            if !p.is_zero() {
                out.push_str(&format!("leaf {}: gen={} poly=\"{}\"\n", j + 1, g + 1, p.to_coeff_string()));
            }
        }
    }
    out
}
