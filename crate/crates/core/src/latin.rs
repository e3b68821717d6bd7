//! Latin squares: the mixing function `φ : A × A → A` whose rows and columns
//! are all permutations.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::Symbol;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    q: usize,
    table: Vec<Symbol>,
    // inv_first[a * q + c] = b with φ(a, b) = c
    inv_first: Vec<Symbol>,
    // inv_second[b * q + c] = a with φ(a, b) = c
    inv_second: Vec<Symbol>,
}

impl LatinSquare {
    /// `table[a * q + b] = φ(a, b)`.
    pub fn new(q: usize, table: Vec<Symbol>) -> Result<Self> {
        if !(2..=256).contains(&q) {
            return Err(Error::InvalidAlphabet(q));
        }
        if table.len() != q * q {
            return Err(Error::TableSize { expected: q * q, got: table.len() });
        }
        if let Some(i) = table.iter().position(|&s| s as usize >= q) {
            return Err(Error::InvalidLatinSquare(format!(
                "entry ({}, {}) = {} is outside 0..{q}",
                i / q,
                i % q,
                table[i]
            )));
        }
        const UNSET: Symbol = Symbol::MAX;
        let mut inv_first = vec![UNSET; q * q];
        let mut inv_second = vec![UNSET; q * q];
        let mut seen_in_col = vec![false; q * q];
        for a in 0..q {
            let mut seen = vec![false; q];
            for b in 0..q {
                let c = table[a * q + b] as usize;
                if core::mem::replace(&mut seen[c], true) {
                    return Err(Error::InvalidLatinSquare(format!("row {a} repeats symbol {c}")));
                }
                if core::mem::replace(&mut seen_in_col[b * q + c], true) {
                    return Err(Error::InvalidLatinSquare(format!("column {b} repeats symbol {c}")));
                }
                inv_first[a * q + c] = b as Symbol;
                inv_second[b * q + c] = a as Symbol;
            }
        }
        Ok(Self { q, table, inv_first, inv_second })
    }

    /// `φ(a, b) = a + b mod q`.
    pub fn cyclic(q: usize) -> Result<Self> {
        let table = (0..q * q).map(|i| ((i / q + i % q) % q) as Symbol).collect();
        Self::new(q, table)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Row-major entries.
    pub fn table(&self) -> &[Symbol] {
        &self.table
    }

    fn check(&self, s: Symbol) -> Result<usize> {
        if (s as usize) < self.q {
            Ok(s as usize)
        } else {
            Err(Error::SymbolOutOfRange { symbol: s as usize, coordinate: 0, q: self.q })
        }
    }

    /// `φ(a, b)`.
    pub fn apply(&self, a: Symbol, b: Symbol) -> Result<Symbol> {
        Ok(self.table[self.check(a)? * self.q + self.check(b)?])
    }

    /// The `b` with `φ(a, b) = c`.
    pub fn inv_first(&self, a: Symbol, c: Symbol) -> Result<Symbol> {
        Ok(self.inv_first[self.check(a)? * self.q + self.check(c)?])
    }

    /// The `a` with `φ(a, b) = c`.
    pub fn inv_second(&self, b: Symbol, c: Symbol) -> Result<Symbol> {
        Ok(self.inv_second[self.check(b)? * self.q + self.check(c)?])
    }

    // Unchecked forms for inner loops; symbols are already validated.
    #[inline]
    pub(crate) fn mix(&self, a: Symbol, b: Symbol) -> Symbol {
        self.table[a as usize * self.q + b as usize]
    }

    #[inline]
    pub(crate) fn unmix_first(&self, a: Symbol, c: Symbol) -> Symbol {
        self.inv_first[a as usize * self.q + c as usize]
    }

    #[inline]
    pub(crate) fn unmix_second(&self, b: Symbol, c: Symbol) -> Symbol {
        self.inv_second[b as usize * self.q + c as usize]
    }
}
