//! The closure of a tube in the Ziegler spectrum, on symbolic subsets: finitely many vertices,
//! cofinite tails of rays, and the infinite-dimensional points (one prüfer module per ray, one
//! adic module per coray, one generic module).

mod cover;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tube::{build_gamma, Family, TubeVertex};

pub use cover::{cover_e, cover_galois, cover_trivial_extension, CoverPiece, CoverSubset, SpectrumCover, Trace, TubularType};

/// An infinite-dimensional point: prüfer and adic points are indexed by ray and coray.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InfinitePoint {
    Prufer(usize),
    Adic(usize),
    Generic,
}

impl fmt::Display for InfinitePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfinitePoint::Prufer(r) => write!(f, "prufer:{r}"),
            InfinitePoint::Adic(c) => write!(f, "adic:{c}"),
            InfinitePoint::Generic => write!(f, "generic"),
        }
    }
}

impl FromStr for InfinitePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadInput(format!("bad point {s:?}"));
        match s.split_once(':') {
            None if s == "generic" => Ok(InfinitePoint::Generic),
            Some(("prufer", k)) => Ok(InfinitePoint::Prufer(k.parse().map_err(|_| bad())?)),
            Some(("adic", k)) => Ok(InfinitePoint::Adic(k.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for InfinitePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for InfinitePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Any point of the closure of a tube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZgPoint {
    Finite(TubeVertex),
    Infinite(InfinitePoint),
}

impl fmt::Display for ZgPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZgPoint::Finite(v) => write!(f, "{v}"),
            ZgPoint::Infinite(p) => write!(f, "{p}"),
        }
    }
}

/// A tail `{ V[j] : j >= from }` of the ray with the given index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayTail {
    pub ray: usize,
    pub from: usize,
}

/// Finitely many vertices, plus ray tails, plus infinite points. Always kept in a normal form, so
/// equal sets compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicSubset {
    vertices: BTreeSet<TubeVertex>,
    tails: BTreeMap<usize, usize>,
    points: BTreeSet<InfinitePoint>,
}

#[derive(Serialize, Deserialize)]
struct SubsetDescriptor {
    #[serde(default)]
    vertices: Vec<TubeVertex>,
    #[serde(default)]
    ray_tails: Vec<RayTail>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    holes: Vec<TubeVertex>,
    #[serde(default)]
    points: Vec<InfinitePoint>,
}

impl SymbolicSubset {
    pub fn vertices(&self) -> &BTreeSet<TubeVertex> {
        &self.vertices
    }

    pub fn tails(&self) -> Vec<RayTail> {
        self.tails.iter().map(|(r, f)| RayTail { ray: *r, from: *f }).collect()
    }

    pub fn points(&self) -> &BTreeSet<InfinitePoint> {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.tails.is_empty() && self.points.is_empty()
    }

    pub fn has_infinitely_many_vertices(&self) -> bool {
        !self.tails.is_empty()
    }

    pub fn to_json(&self) -> String {
        let d = SubsetDescriptor {
            vertices: self.vertices.iter().copied().collect(),
            ray_tails: self.tails(),
            holes: Vec::new(),
            points: self.points.iter().copied().collect(),
        };
        serde_json::to_string(&d).expect("subset descriptors serialize")
    }
}

/// The closure of the tube `Γ(p, n, m)` in the Ziegler spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZgSpace {
    pub p: usize,
    pub n: usize,
    pub m: usize,
    rays: Vec<(Family, usize)>,
    coray_ends: Vec<TubeVertex>,
    meets: Vec<BTreeSet<usize>>,
}

impl ZgSpace {
    pub fn new(p: usize, n: usize, m: usize) -> Result<ZgSpace> {
        let rank = p + n + 1;
        let depth = 4 * (rank + m + 2);
        let tube = build_gamma(p, n, m, depth)?;
        let rays: Vec<(Family, usize)> = tube.maximal_rays().iter().map(|r| r.first().ray()).collect();
        let corays = tube.maximal_corays();
        let mut coray_ends = Vec::new();
        let mut meets = Vec::new();
        for c in &corays {
            if c.vertices.len() < 2 * rank {
                return Err(Error::BadParams("coray too short to reach its periodic part".into()));
            }
            // One turn around the tube far from the mouth visits each ray it will keep visiting.
            let turn = &c.vertices[c.vertices.len() - rank..];
            let hit: BTreeSet<usize> =
                turn.iter().map(|v| rays.iter().position(|r| *r == v.ray()).expect("vertex on a ray")).collect();
            coray_ends.push(c.first());
            meets.push(hit);
        }
        Ok(ZgSpace { p, n, m, rays, coray_ends, meets })
    }

    pub fn rays(&self) -> &[(Family, usize)] {
        &self.rays
    }

    pub fn coray_ends(&self) -> &[TubeVertex] {
        &self.coray_ends
    }

    /// Whether the coray meets the ray infinitely often.
    pub fn coray_meets_ray(&self, coray: usize, ray: usize) -> bool {
        self.meets[coray].contains(&ray)
    }

    fn ray_index(&self, v: &TubeVertex) -> Result<usize> {
        if v.j == 0 {
            return Err(Error::BadInput(format!("{v} is not a vertex of the tube")));
        }
        self.rays.iter().position(|r| *r == v.ray()).ok_or_else(|| Error::BadInput(format!("{v} is not a vertex of the tube")))
    }

    fn check_point(&self, p: &InfinitePoint) -> Result<()> {
        let ok = match p {
            InfinitePoint::Prufer(r) => *r < self.rays.len(),
            InfinitePoint::Adic(c) => *c < self.coray_ends.len(),
            InfinitePoint::Generic => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadInput(format!("no point {p}")))
        }
    }

    pub fn infinite_points(&self) -> Vec<InfinitePoint> {
        (0..self.rays.len())
            .map(InfinitePoint::Prufer)
            .chain((0..self.coray_ends.len()).map(InfinitePoint::Adic))
            .chain([InfinitePoint::Generic])
            .collect()
    }

    /// Builds a subset after validating every vertex, ray and point.
    pub fn subset(
        &self,
        vertices: impl IntoIterator<Item = TubeVertex>,
        tails: impl IntoIterator<Item = RayTail>,
        holes: impl IntoIterator<Item = TubeVertex>,
        points: impl IntoIterator<Item = InfinitePoint>,
    ) -> Result<SymbolicSubset> {
        let mut s = SymbolicSubset::default();
        let mut gaps = BTreeSet::new();
        for v in vertices {
            self.ray_index(&v)?;
            s.vertices.insert(v);
        }
        for t in tails {
            if t.ray >= self.rays.len() || t.from == 0 {
                return Err(Error::BadInput(format!("bad ray tail {t:?}")));
            }
            let e = s.tails.entry(t.ray).or_insert(t.from);
            *e = (*e).min(t.from);
        }
        for h in holes {
            self.ray_index(&h)?;
            gaps.insert(h);
        }
        for p in points {
            self.check_point(&p)?;
            s.points.insert(p);
        }
        Ok(self.normalize(s, &gaps))
    }

    pub fn subset_from_json(&self, json: &str) -> Result<SymbolicSubset> {
        let d: SubsetDescriptor = serde_json::from_str(json).map_err(|e| Error::BadInput(e.to_string()))?;
        self.subset(d.vertices, d.ray_tails, d.holes, d.points)
    }

    pub fn empty(&self) -> SymbolicSubset {
        SymbolicSubset::default()
    }

    /// The whole closure: every vertex and every infinite point.
    pub fn whole(&self) -> SymbolicSubset {
        SymbolicSubset {
            tails: (0..self.rays.len()).map(|r| (r, 1)).collect(),
            points: self.infinite_points().into_iter().collect(),
            ..SymbolicSubset::default()
        }
    }

    /// One full ray, given by index.
    pub fn ray(&self, ray: usize) -> Result<SymbolicSubset> {
        self.subset([], [RayTail { ray, from: 1 }], [], [])
    }

    fn in_tail(&self, s: &SymbolicSubset, v: &TubeVertex) -> bool {
        self.ray_index(v).ok().and_then(|r| s.tails.get(&r)).is_some_and(|from| v.j >= *from)
    }

    /// Canonical form: each tail starts past its last hole and right after the last vertex
    /// missing from its ray, so no holes remain.
    fn normalize(&self, mut s: SymbolicSubset, holes: &BTreeSet<TubeVertex>) -> SymbolicSubset {
        let inside: Vec<TubeVertex> = s.vertices.iter().filter(|v| self.in_tail(&s, v)).copied().collect();
        for v in inside {
            s.vertices.remove(&v);
        }
        let rays: Vec<usize> = s.tails.keys().copied().collect();
        for r in rays {
            let (family, i) = self.rays[r];
            let from = s.tails[&r];
            let last_hole = holes.iter().filter(|h| h.ray() == (family, i) && h.j >= from).map(|h| h.j).max();
            let mut from = match last_hole {
                Some(h) => {
                    for j in from..h {
                        let v = TubeVertex::new(family, i, j);
                        if !holes.contains(&v) {
                            s.vertices.insert(v);
                        }
                    }
                    h + 1
                }
                None => from,
            };
            while from > 1 && s.vertices.remove(&TubeVertex::new(family, i, from - 1)) {
                from -= 1;
            }
            s.tails.insert(r, from);
        }
        s
    }

    pub fn contains(&self, s: &SymbolicSubset, p: &ZgPoint) -> bool {
        match p {
            ZgPoint::Finite(v) => s.vertices.contains(v) || self.in_tail(s, v),
            ZgPoint::Infinite(q) => s.points.contains(q),
        }
    }

    pub fn union(&self, a: &SymbolicSubset, b: &SymbolicSubset) -> SymbolicSubset {
        let mut out = SymbolicSubset {
            vertices: a.vertices.union(&b.vertices).copied().collect(),
            tails: a.tails.clone(),
            points: a.points.union(&b.points).copied().collect(),
        };
        for (r, f) in &b.tails {
            let e = out.tails.entry(*r).or_insert(*f);
            *e = (*e).min(*f);
        }
        self.normalize(out, &BTreeSet::new())
    }

    pub fn intersection(&self, a: &SymbolicSubset, b: &SymbolicSubset) -> SymbolicSubset {
        let both = |v: &TubeVertex| self.contains(a, &ZgPoint::Finite(*v)) && self.contains(b, &ZgPoint::Finite(*v));
        let tails: BTreeMap<usize, usize> =
            a.tails.iter().filter_map(|(r, f)| b.tails.get(r).map(|g| (*r, (*f).max(*g)))).collect();
        let out = SymbolicSubset {
            vertices: a.vertices.iter().chain(&b.vertices).filter(|v| both(v)).copied().collect(),
            tails,
            points: a.points.intersection(&b.points).copied().collect(),
        };
        self.normalize(out, &BTreeSet::new())
    }

    pub fn is_subset(&self, a: &SymbolicSubset, b: &SymbolicSubset) -> bool {
        self.intersection(a, b) == *a
    }

    pub fn remove(&self, s: &SymbolicSubset, p: &ZgPoint) -> SymbolicSubset {
        let mut out = s.clone();
        let mut gaps = BTreeSet::new();
        match p {
            ZgPoint::Finite(v) => {
                out.vertices.remove(v);
                if self.in_tail(s, v) {
                    gaps.insert(*v);
                }
            }
            ZgPoint::Infinite(q) => {
                out.points.remove(q);
            }
        }
        self.normalize(out, &gaps)
    }

    /// Adds the prüfer point of every ray and the adic point of every coray carrying infinitely
    /// many points, then the generic point if anything infinite is present.
    pub fn closure(&self, s: &SymbolicSubset) -> SymbolicSubset {
        let mut out = s.clone();
        for r in s.tails.keys() {
            out.points.insert(InfinitePoint::Prufer(*r));
        }
        for (c, hit) in self.meets.iter().enumerate() {
            if s.tails.keys().any(|r| hit.contains(r)) {
                out.points.insert(InfinitePoint::Adic(c));
            }
        }
        if !out.tails.is_empty() || !out.points.is_empty() {
            out.points.insert(InfinitePoint::Generic);
        }
        out
    }

    pub fn is_closed(&self, s: &SymbolicSubset) -> bool {
        self.closure(s) == *s
    }

    /// Whether `p` is isolated in `s`, i.e. not in the closure of the rest of `s`.
    pub fn is_isolated(&self, s: &SymbolicSubset, p: &ZgPoint) -> bool {
        self.contains(s, p) && !self.contains(&self.closure(&self.remove(s, p)), p)
    }

    /// Removes the isolated points of a closed subset. Vertices are always isolated, since the
    /// closure never adds vertices.
    pub fn cb_derivative(&self, s: &SymbolicSubset) -> Result<SymbolicSubset> {
        if !self.is_closed(s) {
            return Err(Error::NotClosed);
        }
        let limits: BTreeSet<InfinitePoint> =
            s.points.iter().filter(|q| !self.is_isolated(s, &ZgPoint::Infinite(**q))).copied().collect();
        Ok(SymbolicSubset { points: limits, ..SymbolicSubset::default() })
    }

    /// The successive derivatives of the whole space, ending with the empty set.
    pub fn derivative_chain(&self) -> Vec<SymbolicSubset> {
        let mut chain = vec![self.whole()];
        while !chain.last().expect("nonempty").is_empty() {
            let next = self.cb_derivative(chain.last().expect("nonempty")).expect("derivatives of closed sets are closed");
            chain.push(next);
        }
        chain
    }

    pub fn cb_rank(&self, p: &ZgPoint) -> Result<usize> {
        if let ZgPoint::Finite(v) = p {
            self.ray_index(v)?;
        }
        if let ZgPoint::Infinite(q) = p {
            self.check_point(q)?;
        }
        let chain = self.derivative_chain();
        Ok(chain.iter().position(|s| !self.contains(s, p)).expect("chain ends empty") - 1)
    }

    pub fn summary(&self) -> ZgSummary {
        let rank = |q: InfinitePoint| self.cb_rank(&ZgPoint::Infinite(q)).expect("valid point");
        ZgSummary {
            params: (self.p, self.n, self.m),
            rays: self.rays.iter().map(|(f, i)| TubeVertex::new(*f, *i, 1).to_string()).collect(),
            coray_ends: self.coray_ends.iter().map(ToString::to_string).collect(),
            prufer: self.rays.len(),
            adic: self.coray_ends.len(),
            generic: 1,
            cb_ranks: self.infinite_points().into_iter().map(|q| (q.to_string(), rank(q))).collect(),
            vertex_cb_rank: 0,
            space_cb_rank: self.derivative_chain().len() - 2,
        }
    }
}

/// The infinite-dimensional points and Cantor-Bendixson ranks of a tube closure.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ZgSummary {
    pub params: (usize, usize, usize),
    pub rays: Vec<String>,
    pub coray_ends: Vec<String>,
    pub prufer: usize,
    pub adic: usize,
    pub generic: usize,
    pub cb_ranks: BTreeMap<String, usize>,
    pub vertex_cb_rank: usize,
    pub space_cb_rank: usize,
}
