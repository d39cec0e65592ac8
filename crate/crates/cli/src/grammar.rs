//! Text forms of spectra and signatures.
//!
//! Spectra: `mu(k,n)`, `nu(n)`, `riesz(p/q,n)`, `haar(n,…)`, `dirac(n,…)`,
//! `conv(x, …)`, `mix(w: x, …)`, `pow(x, m)`, `prod(x, …)`, `twist(x)`,
//! `normalize(p/q, x)`. This is the same grammar `Display` prints.
//!
//! Signatures: `lambda=2,1;d=0` or a weight tuple `m1,m2,…,mn`; components
//! of a product signature are separated by `|`.

use ugap_core::combinatorics::{Partition, Signature};
use ugap_core::rational::{self, Rational};
use ugap_core::spectra::{CentralSpectrum, ProductSignature};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

fn err<T>(msg: impl Into<String>) -> PResult<T> {
    Err(ParseError(msg.into()))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(format!("expected '{c}' at offset {} in {:?}", self.pos, self.src))
        }
    }

    fn ident(&mut self) -> PResult<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(rest.len());
        if len == 0 {
            return err(format!("expected a name at offset {} in {:?}", self.pos, self.src));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    /// A number token: digits with optional sign, `/` and `.`.
    fn atom(&mut self) -> PResult<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '/' || c == '.' || c == '-'))
            .unwrap_or(rest.len());
        if len == 0 {
            return err(format!("expected a number at offset {} in {:?}", self.pos, self.src));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn usize(&mut self) -> PResult<usize> {
        let a = self.atom()?;
        a.parse().or_else(|_| err(format!("expected a non-negative integer, got {a:?}")))
    }

    fn rational(&mut self) -> PResult<Rational> {
        let a = self.atom()?;
        rational::parse(a).ok_or_else(|| ParseError(format!("expected a rational, got {a:?}")))
    }

    fn usize_list(&mut self) -> PResult<Vec<usize>> {
        let mut v = vec![self.usize()?];
        while self.eat(',') {
            v.push(self.usize()?);
        }
        Ok(v)
    }

    fn spectrum_list(&mut self) -> PResult<Vec<CentralSpectrum>> {
        let mut v = vec![self.spectrum()?];
        while self.eat(',') {
            v.push(self.spectrum()?);
        }
        Ok(v)
    }

    fn spectrum(&mut self) -> PResult<CentralSpectrum> {
        let name = self.ident()?;
        self.expect('(')?;
        let core = |r: ugap_core::Result<CentralSpectrum>| r.map_err(|e| ParseError(e.to_string()));
        let spec = match name {
            "mu" => {
                let k = self.usize()?;
                self.expect(',')?;
                let n = self.usize()?;
                core(CentralSpectrum::mu(k, n))?
            }
            "nu" => core(CentralSpectrum::nu(self.usize()?))?,
            "riesz" => {
                let delta = self.rational()?;
                self.expect(',')?;
                let n = self.usize()?;
                core(CentralSpectrum::riesz(delta, n))?
            }
            "haar" => core(CentralSpectrum::haar(&self.usize_list()?))?,
            "dirac" => core(CentralSpectrum::dirac(&self.usize_list()?))?,
            "conv" => core(CentralSpectrum::convolve(self.spectrum_list()?))?,
            "prod" => core(CentralSpectrum::product(self.spectrum_list()?))?,
            "mix" => {
                let mut terms = Vec::new();
                loop {
                    let w = self.rational()?;
                    self.expect(':')?;
                    terms.push((w, self.spectrum()?));
                    if !self.eat(',') {
                        break;
                    }
                }
                core(CentralSpectrum::mix(terms))?
            }
            "pow" => {
                let child = self.spectrum()?;
                self.expect(',')?;
                let m = self.usize()?;
                let m = u32::try_from(m).or_else(|_| err("power too large"))?;
                core(CentralSpectrum::power(child, m))?
            }
            "twist" => CentralSpectrum::twist(self.spectrum()?),
            "normalize" => {
                let delta = self.rational()?;
                self.expect(',')?;
                core(CentralSpectrum::normalize(delta, self.spectrum()?))?
            }
            other => return err(format!("unknown spectrum constructor {other:?}")),
        };
        self.expect(')')?;
        Ok(spec)
    }
}

pub fn parse_spectrum(src: &str) -> PResult<CentralSpectrum> {
    let mut p = Parser { src, pos: 0 };
    let spec = p.spectrum()?;
    p.skip_ws();
    if p.pos != src.len() {
        return err(format!("trailing input at offset {} in {src:?}", p.pos));
    }
    Ok(spec)
}

/// One signature of `U(n)`.
pub fn parse_signature(src: &str, n: usize) -> PResult<Signature> {
    let s = src.trim();
    let core = |r: ugap_core::Result<Signature>| r.map_err(|e| ParseError(e.to_string()));
    if s.starts_with("lambda") {
        let mut lambda = None;
        let mut d = None;
        for field in s.split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| ParseError(format!("expected key=value, got {field:?}")))?;
            match key.trim() {
                "lambda" => {
                    lambda = Some(
                        value
                            .parse::<Partition>()
                            .map_err(|e| ParseError(e.to_string()))?,
                    )
                }
                "d" => {
                    d = Some(
                        value
                            .trim()
                            .parse::<i64>()
                            .or_else(|_| err(format!("d must be an integer, got {value:?}")))?,
                    )
                }
                other => return err(format!("unknown signature field {other:?}")),
            }
        }
        let lambda = lambda.ok_or_else(|| ParseError("missing lambda".into()))?;
        return core(Signature::from_canonical(n, lambda, d.unwrap_or(0)));
    }
    let weights = s
        .split(',')
        .map(|w| w.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .or_else(|_| err(format!("expected lambda=..;d=.. or a weight tuple, got {src:?}")))?;
    if weights.len() != n {
        return err(format!("weight tuple has {} entries, U({n}) needs {n}", weights.len()));
    }
    core(Signature::from_weights(&weights))
}

/// A signature of `∏ U(group[i])`, components separated by `|`.
pub fn parse_product_signature(src: &str, group: &[usize]) -> PResult<ProductSignature> {
    let parts: Vec<&str> = src.split('|').collect();
    if parts.len() != group.len() {
        return err(format!(
            "signature has {} components, the group has {} factors",
            parts.len(),
            group.len()
        ));
    }
    parts
        .iter()
        .zip(group)
        .map(|(p, &n)| parse_signature(p, n))
        .collect::<PResult<Vec<_>>>()
        .map(ProductSignature::new)
}

/// Comma-separated positive integers.
pub fn parse_dims(src: &str) -> Result<Vec<usize>, String> {
    src.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected comma-separated integers, got {src:?}"))
        })
        .collect()
}
