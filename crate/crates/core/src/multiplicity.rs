//! Multiplicity functions and their Jordan matrices.
//!
//! A finitely supported multiplicity function assigns a multiplicity to each
//! pair (eigenvalue `μ`, block size `n`). It is stored as a canonical block list
//! and determines `J(ℵ) = ⊕ (μ·1 + N_n)^{⊕ mult}`.

use std::cmp::Ordering;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::{c, CMatrix, C64};

/// One `(μ, size, mult)` entry of a multiplicity function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Block {
    pub mu: C64,
    pub size: usize,
    pub mult: usize,
}

impl Block {
    pub fn new(mu: C64, size: usize, mult: usize) -> Self {
        Block { mu, size, mult }
    }

    fn key_cmp(&self, other: &Block) -> Ordering {
        self.mu
            .re
            .total_cmp(&other.mu.re)
            .then(self.mu.im.total_cmp(&other.mu.im))
            .then(self.size.cmp(&other.size))
    }
}

/// Canonically ordered, validated block list.
///
/// Blocks are sorted by `(Re μ, Im μ, size)` and entries sharing `(μ, size)`
/// are merged by adding multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityFunction {
    blocks: Vec<Block>,
}

impl MultiplicityFunction {
    pub fn new(blocks: impl IntoIterator<Item = Block>) -> Result<Self> {
        let mut blocks: Vec<Block> = blocks.into_iter().collect();
        for (i, b) in blocks.iter().enumerate() {
            if !(b.mu.re.is_finite() && b.mu.im.is_finite()) {
                return Err(Error::spec(format!("blocks[{i}].mu"), "mu must be finite"));
            }
            if b.size < 1 {
                return Err(Error::spec(format!("blocks[{i}].size"), "size must be ≥ 1"));
            }
            if b.mult < 1 {
                return Err(Error::spec(format!("blocks[{i}].mult"), "mult must be ≥ 1"));
            }
        }
        if blocks.is_empty() {
            return Err(Error::spec(
                "blocks",
                "at least one block is required (dim V ≥ 1)",
            ));
        }
        // -0.0 and 0.0 must land in the same bucket
        for b in &mut blocks {
            b.mu = c(b.mu.re + 0.0, b.mu.im + 0.0);
        }
        blocks.sort_by(Block::key_cmp);
        let mut merged: Vec<Block> = Vec::with_capacity(blocks.len());
        for b in blocks {
            match merged.last_mut() {
                Some(last) if last.key_cmp(&b) == Ordering::Equal => last.mult += b.mult,
                _ => merged.push(b),
            }
        }
        Ok(MultiplicityFunction { blocks: merged })
    }

    /// Convenience constructor from `(μ, size, mult)` triples.
    pub fn from_triples(triples: &[(C64, usize, usize)]) -> Result<Self> {
        Self::new(
            triples
                .iter()
                .map(|&(mu, size, mult)| Block::new(mu, size, mult)),
        )
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// `dim V = Σ size·mult`.
    pub fn dim_v(&self) -> usize {
        self.blocks.iter().map(|b| b.size * b.mult).sum()
    }

    /// True iff `J(ℵ) = 0`, i.e. every block is a `1×1` block with `μ = 0`.
    pub fn is_abelian(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.size == 1 && b.mu == C64::new(0.0, 0.0))
    }

    /// `tr J(ℵ) = Σ size·mult·μ`.
    pub fn trace(&self) -> C64 {
        self.blocks
            .iter()
            .map(|b| b.mu * (b.size * b.mult) as f64)
            .sum()
    }

    pub fn build_jordan(&self) -> JordanMatrix {
        let d = self.dim_v();
        let mut entries = CMatrix::zeros(d, d);
        let mut layout = Vec::new();
        let mut offset = 0;
        for b in &self.blocks {
            for _ in 0..b.mult {
                for k in 0..b.size {
                    entries[(offset + k, offset + k)] = b.mu;
                    if k + 1 < b.size {
                        entries[(offset + k, offset + k + 1)] = c(1.0, 0.0);
                    }
                }
                layout.push((b.mu, b.size));
                offset += b.size;
            }
        }
        JordanMatrix { entries, layout }
    }

    pub fn parse(text: &[u8]) -> Result<Self> {
        let value: Value = serde_json::from_slice(text)
            .map_err(|e| Error::spec("$", format!("malformed JSON: {e}")))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let blocks = value
            .get("blocks")
            .ok_or_else(|| Error::spec("blocks", "missing field"))?
            .as_array()
            .ok_or_else(|| Error::spec("blocks", "expected an array"))?;
        let mut out = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            let mu = crate::json::complex_from_json(
                b.get("mu")
                    .ok_or_else(|| Error::spec(format!("blocks[{i}].mu"), "missing field"))?,
                &format!("blocks[{i}].mu"),
            )?;
            let size = positive_int(b, "size", i)?;
            let mult = positive_int(b, "mult", i)?;
            out.push(Block::new(mu, size, mult));
        }
        Self::new(out)
    }

    /// Canonical serialization: sorted blocks, floats with 17 significant digits.
    pub fn serialize(&self) -> String {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                format!(
                    "{{\"mu\":[{},{}],\"size\":{},\"mult\":{}}}",
                    float17(b.mu.re),
                    float17(b.mu.im),
                    b.size,
                    b.mult
                )
            })
            .collect();
        format!("{{\"blocks\":[{}]}}", blocks.join(","))
    }
}

fn positive_int(block: &Value, field: &str, i: usize) -> Result<usize> {
    let path = format!("blocks[{i}].{field}");
    let raw = block
        .get(field)
        .ok_or_else(|| Error::spec(&path, "missing field"))?;
    if let Some(n) = raw.as_u64() {
        if n == 0 {
            return Err(Error::spec(&path, format!("{field} must be ≥ 1")));
        }
        return usize::try_from(n).map_err(|_| Error::spec(&path, "value too large"));
    }
    if raw.as_i64().is_some() {
        return Err(Error::spec(&path, format!("{field} must be ≥ 1")));
    }
    Err(Error::spec(&path, "expected an integer"))
}

/// `x` in scientific notation with 17 significant digits.
pub(crate) fn float17(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

/// Block-diagonal Jordan matrix together with its block layout.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanMatrix {
    entries: CMatrix,
    layout: Vec<(C64, usize)>,
}

impl JordanMatrix {
    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    /// `(μ, size)` of every block in storage order, multiplicities expanded.
    pub fn layout(&self) -> &[(C64, usize)] {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// `e^{tJ}`, computed block by block as `e^{tμ} Σ_{k<n} t^k N^k / k!`.
    pub fn exp(&self, t: C64) -> CMatrix {
        let d = self.dim();
        let mut out = CMatrix::zeros(d, d);
        let mut offset = 0;
        for &(mu, n) in &self.layout {
            let scale = (t * mu).exp();
            // coefficient of N^k
            let mut coeff = scale;
            for k in 0..n {
                for r in 0..n - k {
                    out[(offset + r, offset + r + k)] = coeff;
                }
                coeff = coeff * t / (k + 1) as f64;
            }
            offset += n;
        }
        out
    }

    /// `J e^{tJ}`, the `t`-derivative of [`exp`](Self::exp).
    pub fn exp_derivative(&self, t: C64) -> CMatrix {
        &self.entries * self.exp(t)
    }
}
