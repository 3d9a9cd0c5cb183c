use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linear::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Loops and parallel arrows are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(labels: &[&str]) -> Self {
        let mut q = Quiver::new();
        for l in labels {
            q.add_vertex(l).expect("distinct vertex labels");
        }
        q
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if self.vertex_index(label).is_some() {
            return Err(Error::BadInput(format!("duplicate vertex {label:?}")));
        }
        self.vertices.push(label.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, label: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrow_index(label).is_some() || self.vertex_index(label).is_some() {
            return Err(Error::BadInput(format!("duplicate label {label:?}")));
        }
        let s = self.vertex_index(source).ok_or_else(|| Error::UnknownLabel(source.to_string()))?;
        let t = self.vertex_index(target).ok_or_else(|| Error::UnknownLabel(target.to_string()))?;
        self.arrows.push(Arrow { label: label.to_string(), source: s, target: t });
        Ok(self.arrows.len() - 1)
    }

    pub fn add_arrow_idx(&mut self, label: &str, source: usize, target: usize) -> Result<usize> {
        if self.arrow_index(label).is_some() {
            return Err(Error::BadInput(format!("duplicate label {label:?}")));
        }
        assert!(source < self.vertices.len() && target < self.vertices.len());
        self.arrows.push(Arrow { label: label.to_string(), source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrow(&self, k: usize) -> &Arrow {
        &self.arrows[k]
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&k| self.arrows[k].source == v)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Arrow multiplicities keyed by (source label, target label).
    pub fn multigraph(&self) -> BTreeMap<(String, String), usize> {
        let mut m = BTreeMap::new();
        for a in &self.arrows {
            *m.entry((self.vertices[a.source].clone(), self.vertices[a.target].clone())).or_insert(0) += 1;
        }
        m
    }

    /// Equality as labeled-vertex multigraphs, ignoring arrow labels.
    pub fn same_multigraph(&self, other: &Quiver) -> bool {
        let mut a = self.vertices.clone();
        let mut b = other.vertices.clone();
        a.sort();
        b.sort();
        a == b && self.multigraph() == other.multigraph()
    }

    /// All paths of length exactly `len`, in lexicographic order of arrow indices.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.num_vertices()).map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &out {
                for k in self.arrows_from(p.target) {
                    next.push(p.then_arrow(self, k));
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn to_spec(&self) -> QuiverSpec {
        QuiverSpec {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowSpec {
                    label: a.label.clone(),
                    src: self.vertices[a.source].clone(),
                    tgt: self.vertices[a.target].clone(),
                })
                .collect(),
        }
    }

    pub fn from_spec(spec: &QuiverSpec) -> Result<Quiver> {
        let mut q = Quiver::new();
        for v in &spec.vertices {
            q.add_vertex(v)?;
        }
        for a in &spec.arrows {
            q.add_arrow(&a.label, &a.src, &a.tgt)?;
        }
        Ok(q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub label: String,
    pub src: String,
    pub tgt: String,
}

/// JSON form of a quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
}

/// A path, stored with its arrows in the order they are traversed.
/// Its written (composition) form lists them right to left: `ba` means first `a`, then `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, k: usize) -> Path {
        let a = q.arrow(k);
        Path { source: a.source, target: a.target, arrows: vec![k] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn then_arrow(&self, q: &Quiver, k: usize) -> Path {
        let a = q.arrow(k);
        assert_eq!(a.source, self.target, "arrow not composable with path");
        let mut arrows = self.arrows.clone();
        arrows.push(k);
        Path { source: self.source, target: a.target, arrows }
    }

    /// `self` followed by `next`; `None` when not composable.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path { source: self.source, target: next.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    /// Arrow labels in composition order (last traversed first).
    pub fn written(&self, q: &Quiver) -> Vec<String> {
        self.arrows.iter().rev().map(|&k| q.arrow(k).label.clone()).collect()
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            format!("e_{}", q.vertices()[self.source])
        } else {
            self.written(q).join(" ")
        }
    }

    /// Parses arrow labels given in composition order.
    pub fn from_written(q: &Quiver, labels: &[&str]) -> Result<Path> {
        if labels.is_empty() {
            return Err(Error::BadInput("empty path needs a vertex".into()));
        }
        let mut ks = Vec::with_capacity(labels.len());
        for l in labels.iter().rev() {
            ks.push(q.arrow_index(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
        }
        let mut p = Path::arrow(q, ks[0]);
        for &k in &ks[1..] {
            if q.arrow(k).source != p.target {
                return Err(Error::BadInput(format!("path {labels:?} is not composable")));
            }
            p = p.then_arrow(q, k);
        }
        Ok(p)
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Relation {
        Relation { terms }
    }

    /// Builds a relation from `(coefficient, "c b a")` pairs, paths written in composition order
    /// with space-separated arrow labels.
    pub fn parse(q: &Quiver, terms: &[(Scalar, &str)]) -> Result<Relation> {
        let mut out = Vec::new();
        for (c, w) in terms {
            let labels: Vec<&str> = w.split_whitespace().collect();
            out.push((c.clone(), Path::from_written(q, &labels)?));
        }
        Ok(Relation { terms: out })
    }

    pub fn from_ints(q: &Quiver, terms: &[(i64, &str)]) -> Result<Relation> {
        let t: Vec<(Scalar, &str)> = terms.iter().map(|(c, w)| (Scalar::from_int(*c), *w)).collect();
        Relation::parse(q, &t)
    }

    /// Checks that paths are parallel and have length at least 2.
    pub fn check_admissible(&self, q: &Quiver) -> Result<()> {
        let Some((_, first)) = self.terms.first() else {
            return Ok(());
        };
        for (_, p) in &self.terms {
            if p.len() < 2 {
                return Err(Error::NotAdmissible(format!("path {} has length {}", p.label(q), p.len())));
            }
            if p.source != first.source || p.target != first.target {
                return Err(Error::NotAdmissible(format!(
                    "paths {} and {} are not parallel",
                    first.label(q),
                    p.label(q)
                )));
            }
        }
        Ok(())
    }

    pub fn reversed(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() }
    }

    pub fn to_spec(&self, q: &Quiver) -> Vec<RelationTerm> {
        self.terms.iter().map(|(c, p)| RelationTerm { coef: c.clone(), path: p.written(q) }).collect()
    }

    pub fn from_spec(q: &Quiver, spec: &[RelationTerm]) -> Result<Relation> {
        let mut terms = Vec::new();
        for t in spec {
            let labels: Vec<&str> = t.path.iter().map(String::as_str).collect();
            terms.push((t.coef.clone(), Path::from_written(q, &labels)?));
        }
        Ok(Relation { terms })
    }

    pub fn display(&self, q: &Quiver) -> String {
        let parts: Vec<String> = self.terms.iter().map(|(c, p)| format!("({c}) {}", p.label(q))).collect();
        format!("{} = 0", parts.join(" + "))
    }
}

/// JSON form of one relation term; `path` is in composition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coef: Scalar,
    pub path: Vec<String>,
}
