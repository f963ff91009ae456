//! Canonical text format for expansions.
//!
//! ```text
//! space: hermitian
//! disc: -3
//! weight: 10
//! trace_bound: 2
//! coefficients:
//! 0,0,0,0 = 1
//! 1,0,0,0 = 264
//! ```
//!
//! `disc` appears only for hermitian expansions. Keys are `t` (elliptic),
//! `a,b2,c` (siegel, `b2` twice the off-diagonal entry) or `a,x,y,c`
//! (hermitian, off-diagonal numerator `x + y·ω_K`). Entries are listed in
//! canonical index order, zeros omitted; the output for a given expansion
//! is byte-for-byte deterministic.

use std::fmt::Write as _;

use super::{EllipticLattice, Expansion, IndexLattice, Space};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::hermitian::{HermitianLattice, ImagQuadField};
use crate::siegel::SiegelLattice;

pub(super) fn serialize<L: IndexLattice>(e: &Expansion<L>) -> String {
    let mut out = String::new();
    match e.space() {
        Space::Elliptic => out.push_str("space: elliptic\n"),
        Space::Siegel => out.push_str("space: siegel\n"),
        Space::Hermitian(d) => {
            let _ = write!(out, "space: hermitian\ndisc: {d}\n");
        }
    }
    let _ = write!(out, "weight: {}\ntrace_bound: {}\ncoefficients:\n", e.weight(), e.trace_bound());
    for (index, c) in e.nonzero() {
        let _ = writeln!(out, "{} = {}", e.lattice().key(index), c);
    }
    out
}

/// An expansion on any of the three supported lattices.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyExpansion {
    Elliptic(Expansion<EllipticLattice>),
    Siegel(Expansion<SiegelLattice>),
    Hermitian(Expansion<HermitianLattice>),
}

impl AnyExpansion {
    pub fn space(&self) -> Space {
        match self {
            AnyExpansion::Elliptic(e) => e.space(),
            AnyExpansion::Siegel(e) => e.space(),
            AnyExpansion::Hermitian(e) => e.space(),
        }
    }

    pub fn weight(&self) -> i64 {
        match self {
            AnyExpansion::Elliptic(e) => e.weight(),
            AnyExpansion::Siegel(e) => e.weight(),
            AnyExpansion::Hermitian(e) => e.weight(),
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            AnyExpansion::Elliptic(e) => e.serialize(),
            AnyExpansion::Siegel(e) => e.serialize(),
            AnyExpansion::Hermitian(e) => e.serialize(),
        }
    }
}

impl From<Expansion<EllipticLattice>> for AnyExpansion {
    fn from(e: Expansion<EllipticLattice>) -> Self {
        AnyExpansion::Elliptic(e)
    }
}

impl From<Expansion<SiegelLattice>> for AnyExpansion {
    fn from(e: Expansion<SiegelLattice>) -> Self {
        AnyExpansion::Siegel(e)
    }
}

impl From<Expansion<HermitianLattice>> for AnyExpansion {
    fn from(e: Expansion<HermitianLattice>) -> Self {
        AnyExpansion::Hermitian(e)
    }
}

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next non-blank line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        self.iter
            .by_ref()
            .map(|(i, l)| (i + 1, l))
            .find(|(_, l)| !l.trim().is_empty())
    }
}

fn err(line: usize, offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        offset,
        message: message.into(),
    }
}

fn header<'a>(lines: &mut Lines<'a>, name: &str) -> Result<(usize, &'a str)> {
    let (n, l) = lines
        .next()
        .ok_or_else(|| err(0, 0, format!("missing header field `{name}`")))?;
    let (k, v) = l
        .split_once(':')
        .ok_or_else(|| err(n, 0, format!("expected `{name}: ...`")))?;
    if k.trim() != name {
        return Err(err(n, 0, format!("expected header field `{name}`, found `{}`", k.trim())));
    }
    Ok((n, v.trim()))
}

fn header_int<T: std::str::FromStr>(lines: &mut Lines<'_>, name: &str) -> Result<T> {
    let (n, v) = header(lines, name)?;
    v.parse()
        .map_err(|_| err(n, name.len() + 1, format!("invalid value `{v}` for `{name}`")))
}

fn body<L: IndexLattice>(
    lines: &mut Lines<'_>,
    lattice: L,
    weight: i64,
    trace_bound: u32,
) -> Result<Expansion<L>> {
    let (n, l) = lines.next().ok_or_else(|| err(0, 0, "missing `coefficients:`"))?;
    if l.trim() != "coefficients:" {
        return Err(err(n, 0, "expected `coefficients:`"));
    }
    let mut e = Expansion::zero(lattice.clone(), weight, trace_bound);
    while let Some((n, l)) = lines.next() {
        let eq = l.find('=').ok_or_else(|| err(n, 0, "expected `key = value`"))?;
        let (k, v) = (&l[..eq], &l[eq + 1..]);
        let index = lattice
            .parse_key(k)
            .ok_or_else(|| err(n, 0, format!("invalid index key `{}`", k.trim())))?;
        let value: Rational = v
            .trim()
            .parse()
            .map_err(|_| err(n, eq + 1, format!("invalid rational `{}`", v.trim())))?;
        if !lattice.is_psd(&index) || lattice.trace(&index) > trace_bound {
            return Err(err(n, 0, format!("index `{}` outside the truncation", k.trim())));
        }
        if e.coeffs.contains_key(&index) {
            return Err(err(n, 0, format!("duplicate index `{}`", k.trim())));
        }
        if !value.is_zero() {
            e.coeffs.insert(index, value);
        }
    }
    Ok(e)
}

/// Parses any expansion file.
pub fn parse_any(text: &str) -> Result<AnyExpansion> {
    let mut lines = Lines {
        iter: text.lines().enumerate(),
    };
    let (n, space) = header(&mut lines, "space")?;
    match space {
        "elliptic" => {
            let weight = header_int(&mut lines, "weight")?;
            let bound = header_int(&mut lines, "trace_bound")?;
            Ok(AnyExpansion::Elliptic(body(&mut lines, EllipticLattice, weight, bound)?))
        }
        "siegel" => {
            let weight = header_int(&mut lines, "weight")?;
            let bound = header_int(&mut lines, "trace_bound")?;
            Ok(AnyExpansion::Siegel(body(&mut lines, SiegelLattice, weight, bound)?))
        }
        "hermitian" => {
            let disc: i64 = header_int(&mut lines, "disc")?;
            let field = ImagQuadField::new(disc).map_err(|e| err(n + 1, 0, e.to_string()))?;
            let weight = header_int(&mut lines, "weight")?;
            let bound = header_int(&mut lines, "trace_bound")?;
            Ok(AnyExpansion::Hermitian(body(
                &mut lines,
                HermitianLattice::new(field),
                weight,
                bound,
            )?))
        }
        other => Err(err(n, 7, format!("unknown space `{other}`"))),
    }
}
