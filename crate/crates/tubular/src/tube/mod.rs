//! Translation quivers `Γ(p, n, m)` of non-stable tubes, truncated at a depth, with ray and coray
//! insertions, structural validation and mesh additivity checks.

mod dot;
mod insertion;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dot::to_dot;
pub use insertion::{coray_insertion, ray_insertion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
    Z,
}

/// A vertex `X_i[j]`, `Y_i[j]` or `Z_i[j]`; `j >= 1` is the position along its ray.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Family, usize, usize)", into = "(Family, usize, usize)")]
pub struct TubeVertex {
    pub family: Family,
    pub i: usize,
    pub j: usize,
}

impl From<(Family, usize, usize)> for TubeVertex {
    fn from((family, i, j): (Family, usize, usize)) -> Self {
        TubeVertex { family, i, j }
    }
}

impl From<TubeVertex> for (Family, usize, usize) {
    fn from(v: TubeVertex) -> Self {
        (v.family, v.i, v.j)
    }
}

impl TubeVertex {
    pub fn new(family: Family, i: usize, j: usize) -> TubeVertex {
        TubeVertex { family, i, j }
    }

    /// The ray this vertex lies on, as `(family, i)`.
    pub fn ray(&self) -> (Family, usize) {
        (self.family, self.i)
    }
}

impl fmt::Display for TubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}[{}]", self.family, self.i, self.j)
    }
}

impl FromStr for TubeVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadInput(format!("bad tube vertex {s:?}"));
        let s = s.trim();
        let family = match s.chars().next() {
            Some('X') => Family::X,
            Some('Y') => Family::Y,
            Some('Z') => Family::Z,
            _ => return Err(bad()),
        };
        let rest = &s[1..];
        let (i, rest) = rest.split_once('[').ok_or_else(bad)?;
        let j = rest.strip_suffix(']').ok_or_else(bad)?;
        Ok(TubeVertex::new(family, i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?))
    }
}

/// Arrows either point away from the mouth (along rays) or towards it (along corays).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ArrowKind {
    Ray,
    Coray,
}

/// `Γ(p, n, m)` restricted to vertices with `j <= depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeQuiver {
    pub p: usize,
    pub n: usize,
    pub m: usize,
    pub depth: usize,
    vertices: BTreeSet<TubeVertex>,
    arrows: BTreeMap<(TubeVertex, TubeVertex), ArrowKind>,
    tau: BTreeMap<TubeVertex, TubeVertex>,
    projective: BTreeSet<TubeVertex>,
    injective: BTreeSet<TubeVertex>,
}

/// JSON form of a tube quiver.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TubeSpec {
    pub p: usize,
    pub n: usize,
    pub m: usize,
    pub depth: usize,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, ArrowKind)>,
    pub tau: Vec<(String, String)>,
    pub projective: Vec<String>,
    pub injective: Vec<String>,
}

fn x(i: usize, j: usize) -> TubeVertex {
    TubeVertex::new(Family::X, i, j)
}

fn y(i: usize, j: usize) -> TubeVertex {
    TubeVertex::new(Family::Y, i, j)
}

fn z(i: usize, j: usize) -> TubeVertex {
    TubeVertex::new(Family::Z, i, j)
}

/// Every arrow of `Γ(p, n, m)` leaving level `j` of the listed clauses.
fn arrows_at(p: usize, n: usize, m: usize, j: usize) -> Vec<(TubeVertex, TubeVertex, ArrowKind)> {
    use ArrowKind::{Coray, Ray};
    let mut out = Vec::new();
    for i in 0..=n - m {
        out.push((x(i, j), x(i, j + 1), Ray));
    }
    for i in 1..=n - m {
        out.push((x(i - 1, j), x(i, j), Coray));
    }
    if m == 0 && p == 0 {
        out.push((x(n, j + 1), x(0, j), Coray));
    }
    if m >= 1 {
        out.push((x(n - m, j), y(1, j), Coray));
        for i in 1..=m {
            out.push((y(i, j), y(i, j + 1), Ray));
        }
        for i in 1..m {
            out.push((y(i, j + 1), y(i + 1, j), Coray));
        }
        if p >= 1 {
            out.push((y(m, j + 2), z(1, j), Coray));
        } else {
            out.push((y(m, j + 2), x(0, j), Coray));
        }
    }
    if p >= 1 {
        out.push((z(p, j + 1), x(0, j), Coray));
        for i in 1..=p {
            out.push((z(i, j), z(i, j + 1), Ray));
        }
        for i in 1..p {
            out.push((z(i, j + 1), z(i + 1, j), Coray));
        }
        if m == 0 {
            out.push((x(n, j + 1), z(1, j), Coray));
        }
    }
    out
}

/// The translate of a vertex of `Γ(p, n, m)`, `None` on projective vertices.
fn tau_of(p: usize, n: usize, m: usize, v: TubeVertex) -> Option<TubeVertex> {
    let j = v.j;
    match v.family {
        Family::X if v.i >= 1 => (j >= 2).then(|| x(v.i - 1, j - 1)),
        Family::X => Some(if p >= 1 {
            z(p, j)
        } else if m >= 1 {
            y(m, j + 1)
        } else {
            x(n, j)
        }),
        Family::Y if v.i == 1 => (j >= 2).then(|| x(n - m, j - 1)),
        Family::Y => (j >= 2).then(|| y(v.i - 1, j)),
        Family::Z if v.i > 1 => Some(z(v.i - 1, j)),
        Family::Z => Some(if m >= 1 { y(m, j + 1) } else { x(n, j) }),
    }
}

/// Builds `Γ(p, n, m)` up to `depth`.
pub fn build_gamma(p: usize, n: usize, m: usize, depth: usize) -> Result<TubeQuiver> {
    if m > n {
        return Err(Error::BadParams(format!("need m <= n, got n = {n}, m = {m}")));
    }
    if depth < 3.max(m + 2) {
        return Err(Error::BadParams(format!("depth {depth} is below {}", 3.max(m + 2))));
    }
    let mut vertices = BTreeSet::new();
    for j in 1..=depth {
        for i in 0..=n - m {
            vertices.insert(x(i, j));
        }
        for i in 1..=m {
            vertices.insert(y(i, j));
        }
        for i in 1..=p {
            vertices.insert(z(i, j));
        }
    }
    let mut arrows = BTreeMap::new();
    for j in 1..=depth {
        for (s, t, k) in arrows_at(p, n, m, j) {
            if vertices.contains(&s) && vertices.contains(&t) {
                arrows.insert((s, t), k);
            }
        }
    }
    let tau: BTreeMap<TubeVertex, TubeVertex> = vertices
        .iter()
        .filter_map(|&v| tau_of(p, n, m, v).filter(|t| vertices.contains(t)).map(|t| (v, t)))
        .collect();
    let projective: BTreeSet<TubeVertex> = (1..=n - m).map(|i| x(i, 1)).chain((1..=m).map(|i| y(i, 1))).collect();
    let injective: BTreeSet<TubeVertex> = (1..=m).map(|i| y(i, 1)).collect();
    Ok(TubeQuiver { p, n, m, depth, vertices, arrows, tau, projective, injective })
}

/// A maximal ray (vertices from its start) or coray (vertices from its end backwards).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ray {
    pub vertices: Vec<TubeVertex>,
}

impl Ray {
    pub fn first(&self) -> TubeVertex {
        self.vertices[0]
    }
}

impl TubeQuiver {
    pub(crate) fn from_parts(
        (p, n, m, depth): (usize, usize, usize, usize),
        vertices: BTreeSet<TubeVertex>,
        arrows: BTreeMap<(TubeVertex, TubeVertex), ArrowKind>,
        tau: BTreeMap<TubeVertex, TubeVertex>,
        projective: BTreeSet<TubeVertex>,
        injective: BTreeSet<TubeVertex>,
    ) -> TubeQuiver {
        TubeQuiver { p, n, m, depth, vertices, arrows, tau, projective, injective }
    }

    pub fn vertices(&self) -> &BTreeSet<TubeVertex> {
        &self.vertices
    }

    pub fn contains(&self, v: &TubeVertex) -> bool {
        self.vertices.contains(v)
    }

    pub fn arrows(&self) -> &BTreeMap<(TubeVertex, TubeVertex), ArrowKind> {
        &self.arrows
    }

    pub fn tau_map(&self) -> &BTreeMap<TubeVertex, TubeVertex> {
        &self.tau
    }

    pub fn tau(&self, v: &TubeVertex) -> Option<TubeVertex> {
        self.tau.get(v).copied()
    }

    pub fn tau_inverse(&self, v: &TubeVertex) -> Option<TubeVertex> {
        self.tau.iter().find(|(_, t)| *t == v).map(|(u, _)| *u)
    }

    pub fn is_projective(&self, v: &TubeVertex) -> bool {
        self.projective.contains(v)
    }

    pub fn is_injective(&self, v: &TubeVertex) -> bool {
        self.injective.contains(v)
    }

    pub fn projective_vertices(&self) -> &BTreeSet<TubeVertex> {
        &self.projective
    }

    pub fn injective_vertices(&self) -> &BTreeSet<TubeVertex> {
        &self.injective
    }

    pub fn projective_injective_vertices(&self) -> Vec<TubeVertex> {
        self.projective.intersection(&self.injective).copied().collect()
    }

    pub fn successors(&self, v: &TubeVertex) -> Vec<TubeVertex> {
        self.arrows.keys().filter(|(s, _)| s == v).map(|(_, t)| *t).collect()
    }

    pub fn predecessors(&self, v: &TubeVertex) -> Vec<TubeVertex> {
        self.arrows.keys().filter(|(_, t)| t == v).map(|(s, _)| *s).collect()
    }

    fn successor_of_kind(&self, v: &TubeVertex, kind: ArrowKind) -> Option<TubeVertex> {
        self.arrows.iter().find(|((s, _), k)| s == v && **k == kind).map(|((_, t), _)| *t)
    }

    fn predecessor_of_kind(&self, v: &TubeVertex, kind: ArrowKind) -> Option<TubeVertex> {
        self.arrows.iter().find(|((_, t), k)| t == v && **k == kind).map(|((s, _), _)| *s)
    }

    /// Maximal rays, in vertex order of their first vertices.
    pub fn maximal_rays(&self) -> Vec<Ray> {
        let starts: Vec<TubeVertex> =
            self.vertices.iter().filter(|v| self.predecessor_of_kind(v, ArrowKind::Ray).is_none()).copied().collect();
        starts
            .into_iter()
            .map(|s| {
                let mut vertices = vec![s];
                while let Some(next) = self.successor_of_kind(vertices.last().expect("nonempty"), ArrowKind::Ray) {
                    vertices.push(next);
                }
                Ray { vertices }
            })
            .collect()
    }

    /// Maximal corays, each listed from its end vertex backwards, in vertex order of the ends.
    ///
    /// Only vertices at least two levels below the truncation can be recognised as ends.
    pub fn maximal_corays(&self) -> Vec<Ray> {
        let ends: Vec<TubeVertex> = self
            .vertices
            .iter()
            .filter(|v| v.j + 2 <= self.depth && self.successor_of_kind(v, ArrowKind::Coray).is_none())
            .copied()
            .collect();
        ends.into_iter()
            .map(|e| {
                let mut vertices = vec![e];
                while let Some(prev) = self.predecessor_of_kind(vertices.last().expect("nonempty"), ArrowKind::Coray) {
                    vertices.push(prev);
                }
                Ray { vertices }
            })
            .collect()
    }

    /// Vertices near the mouth: fewer than two arrows in or out, away from the truncation.
    pub fn mouth(&self) -> Vec<TubeVertex> {
        self.vertices
            .iter()
            .filter(|v| v.j + 2 <= self.depth && (self.predecessors(v).len() < 2 || self.successors(v).len() < 2))
            .copied()
            .collect()
    }

    /// Translation pairs `(v, tau v)` with both ends on the mouth.
    pub fn mouth_translates(&self) -> Vec<(TubeVertex, TubeVertex)> {
        let mouth: BTreeSet<TubeVertex> = self.mouth().into_iter().collect();
        self.tau.iter().filter(|(v, t)| mouth.contains(v) && mouth.contains(t)).map(|(v, t)| (*v, *t)).collect()
    }

    /// Whether a sectional path from `v` never branches (checked below the truncation).
    pub fn is_ray_vertex(&self, v: &TubeVertex) -> bool {
        if !self.contains(v) {
            return false;
        }
        let mut prev: Option<TubeVertex> = None;
        let mut cur = *v;
        while cur.j + 2 <= self.depth {
            let next: Vec<TubeVertex> = self
                .successors(&cur)
                .into_iter()
                .filter(|w| prev.is_none_or(|p| self.tau(w) != Some(p)))
                .collect();
            if next.len() != 1 {
                return false;
            }
            prev = Some(cur);
            cur = next[0];
        }
        true
    }

    /// Dual of [`TubeQuiver::is_ray_vertex`]: sectional paths ending at `v` never branch.
    pub fn is_coray_vertex(&self, v: &TubeVertex) -> bool {
        if !self.contains(v) {
            return false;
        }
        let mut prev: Option<TubeVertex> = None;
        let mut cur = *v;
        while cur.j + 3 <= self.depth {
            let before: Vec<TubeVertex> = self
                .predecessors(&cur)
                .into_iter()
                .filter(|w| prev.is_none_or(|p| self.tau(&p) != Some(*w)))
                .collect();
            if before.len() != 1 {
                return false;
            }
            prev = Some(cur);
            cur = before[0];
        }
        true
    }

    /// The quiver restricted to `j <= depth`.
    pub fn truncate(&self, depth: usize) -> TubeQuiver {
        let keep = |v: &TubeVertex| v.j <= depth;
        TubeQuiver {
            p: self.p,
            n: self.n,
            m: self.m,
            depth: depth.min(self.depth),
            vertices: self.vertices.iter().filter(|v| keep(v)).copied().collect(),
            arrows: self.arrows.iter().filter(|((s, t), _)| keep(s) && keep(t)).map(|(a, k)| (*a, *k)).collect(),
            tau: self.tau.iter().filter(|(v, t)| keep(v) && keep(t)).map(|(v, t)| (*v, *t)).collect(),
            projective: self.projective.iter().filter(|v| keep(v)).copied().collect(),
            injective: self.injective.iter().filter(|v| keep(v)).copied().collect(),
        }
    }

    /// Structural audit; returns the list of problems found (empty when valid).
    pub fn validate(&self) -> std::result::Result<(), Vec<String>> {
        let mut problems = Vec::new();
        let interior = |v: &TubeVertex| v.j + 3 <= self.depth;
        for v in self.vertices.iter().filter(|v| interior(v)) {
            match self.tau(v) {
                None if !self.is_projective(v) => problems.push(format!("{v} is not projective but has no translate")),
                Some(_) if self.is_projective(v) => problems.push(format!("{v} is projective but has a translate")),
                _ => {}
            }
            if let Some(t) = self.tau(v) {
                let into: BTreeSet<TubeVertex> = self.predecessors(v).into_iter().collect();
                let out: BTreeSet<TubeVertex> = self.successors(&t).into_iter().collect();
                if into != out {
                    problems.push(format!("mesh at {v} does not close: into {into:?}, out of {t} {out:?}"));
                }
            }
            if self.is_injective(v) != self.tau_inverse(v).is_none() {
                problems.push(format!("injective flag of {v} disagrees with the translation"));
            }
        }
        let rays = self.maximal_rays();
        if rays.len() != self.p + self.n + 1 {
            problems.push(format!("{} rays, expected {}", rays.len(), self.p + self.n + 1));
        }
        let corays = self.maximal_corays();
        if corays.len() != self.p + self.m + 1 {
            problems.push(format!("{} corays, expected {}", corays.len(), self.p + self.m + 1));
        }
        for (name, family) in [("rays", &rays), ("corays", &corays)] {
            let mut seen = BTreeSet::new();
            for r in family {
                for v in &r.vertices {
                    if !seen.insert(*v) {
                        problems.push(format!("{v} lies on two {name}"));
                    }
                }
            }
            if let Some(missing) = self.vertices.iter().find(|v| interior(v) && !seen.contains(v)) {
                problems.push(format!("{missing} lies on none of the {name}"));
            }
        }
        // Far from the mouth, tau winds once around the tube: p+n+1 steps visit every ray once
        // and come back to the starting ray.
        let period = self.p + self.n + 1;
        for v in self.vertices.iter().filter(|v| v.j >= 4 && v.j + 4 <= self.depth) {
            let mut cur = *v;
            let mut visited = BTreeSet::new();
            let mut complete = true;
            for _ in 0..period {
                visited.insert(cur.ray());
                match self.tau(&cur) {
                    Some(t) => cur = t,
                    None => {
                        complete = false;
                        break;
                    }
                }
            }
            if complete && (visited.len() != period || cur.ray() != v.ray()) {
                problems.push(format!("translation orbit of {v} does not wind once around the tube"));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems)
        }
    }

    /// Checks `dim tau v + dim v = sum of dims of the middle terms` at every non-projective vertex
    /// whose mesh is fully assigned and lies below the truncation. Returns the violations.
    pub fn mesh_additivity_check(&self, dims: &BTreeMap<TubeVertex, Vec<i64>>) -> Vec<String> {
        let mut out = Vec::new();
        for (v, t) in &self.tau {
            if v.j + 2 > self.depth {
                continue;
            }
            let middle = self.predecessors(v);
            let Some(dv) = dims.get(v) else { continue };
            let Some(dt) = dims.get(t) else { continue };
            let Some(mids) = middle.iter().map(|u| dims.get(u)).collect::<Option<Vec<_>>>() else { continue };
            let lhs: Vec<i64> = dv.iter().zip(dt).map(|(a, b)| a + b).collect();
            let mut rhs = vec![0; lhs.len()];
            for d in mids {
                for (r, x) in rhs.iter_mut().zip(d) {
                    *r += x;
                }
            }
            if lhs != rhs {
                out.push(format!("mesh ending at {v}: {lhs:?} != {rhs:?}"));
            }
        }
        out
    }

    pub fn to_spec(&self) -> TubeSpec {
        let s = |v: &TubeVertex| v.to_string();
        TubeSpec {
            p: self.p,
            n: self.n,
            m: self.m,
            depth: self.depth,
            vertices: self.vertices.iter().map(s).collect(),
            arrows: self.arrows.iter().map(|((a, b), k)| (s(a), s(b), *k)).collect(),
            tau: self.tau.iter().map(|(a, b)| (s(a), s(b))).collect(),
            projective: self.projective.iter().map(s).collect(),
            injective: self.injective.iter().map(s).collect(),
        }
    }
}
