//! Covers of Ziegler spectra by closed pieces: opaque pieces stand for the spectra of
//! tame concealed or canonical algebras, tube pieces are closures of non-stable tubes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{SymbolicSubset, ZgSpace};
use crate::error::{Error, Result};

/// One of the tubular types `(2,2,2,2)`, `(3,3,3)`, `(2,4,4)`, `(2,3,6)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TubularType(Vec<usize>);

impl TubularType {
    pub fn new(mut weights: Vec<usize>) -> Result<TubularType> {
        weights.sort_unstable();
        match weights.as_slice() {
            [2, 2, 2, 2] | [3, 3, 3] | [2, 4, 4] | [2, 3, 6] => Ok(TubularType(weights)),
            _ => Err(Error::BadTubularType(format!("{weights:?}"))),
        }
    }

    pub fn weights(&self) -> &[usize] {
        &self.0
    }

    /// Rank of the tube of the tame hereditary algebra holding the extension module; the
    /// extension turns it into a tube with `rank + 1` rays at the mouth.
    pub fn extension_rank(&self) -> usize {
        self.0.last().expect("nonempty") - 1
    }
}

impl FromStr for TubularType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let weights: std::result::Result<Vec<usize>, _> = body.split(',').map(|w| w.trim().parse()).collect();
        TubularType::new(weights.map_err(|_| Error::BadTubularType(s.to_string()))?)
    }
}

impl fmt::Display for TubularType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", w.join(","))
    }
}

/// A piece of a cover; tube pieces carry their `Γ(p, n, m)` parameters, composite pieces their
/// own cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverPiece {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tube: Option<(usize, usize, usize)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<CoverPiece>,
}

impl CoverPiece {
    fn opaque(label: String) -> CoverPiece {
        CoverPiece { label, tube: None, parts: Vec::new() }
    }

    fn tube(label: String, params: (usize, usize, usize)) -> CoverPiece {
        CoverPiece { label, tube: Some(params), parts: Vec::new() }
    }
}

/// Closed pieces whose union is the spectrum, with the named overlaps between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumCover {
    pub name: String,
    pub pieces: Vec<CoverPiece>,
    /// `(piece, piece, shared part)`.
    pub identifications: Vec<(String, String, String)>,
}

/// The trace of a subset on one piece: symbolic on tube pieces, a declared flag on opaque ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trace {
    Tube(SymbolicSubset),
    Opaque { closed: bool },
}

/// A subset of a covered space, given by its traces; missing pieces carry the empty trace.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverSubset {
    pub traces: BTreeMap<String, Trace>,
}

fn cyclic(i: i64, period: i64) -> i64 {
    i.rem_euclid(period)
}

/// Cover of the spectrum of `E_i`: the two neighbouring algebras and the tube pieces between them.
/// For `i ≡ 2 (mod 3)` there is one tube per weight, otherwise a single extension tube.
pub fn cover_e(i: i64, ty: &TubularType, period: i64) -> SpectrumCover {
    let d = |k: i64| format!("Zg(D_{})", cyclic(k, period));
    let mut pieces = vec![CoverPiece::opaque(d(i - 1))];
    if cyclic(i, 3) == 2 {
        for (k, w) in ty.weights().iter().enumerate() {
            pieces.push(CoverPiece::tube(format!("cl(T_{},{})", cyclic(i, period), k + 1), (0, w - 1, w - 1)));
        }
    } else {
        pieces.push(CoverPiece::tube(format!("cl(T_{})", cyclic(i, period)), (ty.extension_rank() - 1, 1, 1)));
    }
    pieces.push(CoverPiece::opaque(d(i)));
    SpectrumCover {
        name: format!("Zg(E_{})", cyclic(i, period)),
        pieces,
        identifications: vec![(d(i - 1), d(i), format!("Zg(C_{})", cyclic(i, period)))],
    }
}

/// Cover of the spectrum of the orbit algebra of period `s`: `3s` pieces `Zg(𝒟_i)` and `3s`
/// pieces `Zg(ℰ_i)`, the latter covered as in [`cover_e`].
pub fn cover_galois(ty: &TubularType, s: usize) -> Result<SpectrumCover> {
    if s == 0 {
        return Err(Error::BadParams("period must be positive".into()));
    }
    let period = 3 * s as i64;
    let dd = |k: i64| format!("Zg(𝒟_{})", cyclic(k, period));
    let ee = |k: i64| format!("Zg(ℰ_{})", cyclic(k, period));
    let mut pieces = Vec::new();
    let mut identifications = Vec::new();
    for i in 0..period {
        pieces.push(CoverPiece::opaque(dd(i)));
        let inner = cover_e(i, ty, period);
        pieces.push(CoverPiece { label: ee(i), tube: None, parts: inner.pieces });
        identifications.push((ee(i), dd(i - 1), format!("Zg(D_{})", cyclic(i - 1, period))));
        identifications.push((ee(i), dd(i), format!("Zg(D_{i})")));
    }
    Ok(SpectrumCover { name: format!("Zg(T_{s}{ty})"), pieces, identifications })
}

/// Cover of the spectrum of the trivial extension: the orbit algebra of period one.
pub fn cover_trivial_extension(ty: &TubularType) -> SpectrumCover {
    cover_galois(ty, 1).expect("period one is valid")
}

impl SpectrumCover {
    /// Every tube piece, at any nesting level.
    pub fn tube_pieces(&self) -> Vec<&CoverPiece> {
        fn walk<'a>(ps: &'a [CoverPiece], out: &mut Vec<&'a CoverPiece>) {
            for p in ps {
                if p.tube.is_some() {
                    out.push(p);
                }
                walk(&p.parts, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.pieces, &mut out);
        out
    }

    fn leaf(&self, label: &str) -> Option<&CoverPiece> {
        fn find<'a>(ps: &'a [CoverPiece], label: &str) -> Option<&'a CoverPiece> {
            ps.iter().find_map(|p| if p.label == label && p.parts.is_empty() { Some(p) } else { find(&p.parts, label) })
        }
        find(&self.pieces, label)
    }

    /// A subset is closed when every trace is closed in its piece.
    pub fn is_closed(&self, subset: &CoverSubset) -> Result<bool> {
        let mut closed = true;
        for (label, trace) in &subset.traces {
            let piece = self.leaf(label).ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            closed &= match (trace, piece.tube) {
                (Trace::Opaque { closed }, None) => *closed,
                (Trace::Tube(s), Some((p, n, m))) => ZgSpace::new(p, n, m)?.is_closed(s),
                _ => return Err(Error::BadInput(format!("trace of the wrong kind on {label}"))),
            };
        }
        Ok(closed)
    }
}
