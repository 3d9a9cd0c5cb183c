//! Ray and coray insertion. The surgery runs on anonymous vertex ids; the result is then renamed
//! into canonical `X`/`Y`/`Z` coordinates read off from the shape of the quiver.

use std::collections::{BTreeMap, BTreeSet};

use super::{ArrowKind, Family, TubeQuiver, TubeVertex};
use crate::error::{Error, Result};

struct Draft {
    names: Vec<TubeVertex>,
    arrows: BTreeMap<(usize, usize), ArrowKind>,
    tau: BTreeMap<usize, usize>,
    projective: BTreeSet<usize>,
    injective: BTreeSet<usize>,
}

impl Draft {
    fn from_tube(t: &TubeQuiver) -> (Draft, BTreeMap<TubeVertex, usize>) {
        let names: Vec<TubeVertex> = t.vertices().iter().copied().collect();
        let id: BTreeMap<TubeVertex, usize> = names.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        let draft = Draft {
            arrows: t.arrows().iter().map(|((a, b), k)| ((id[a], id[b]), *k)).collect(),
            tau: t.tau_map().iter().map(|(a, b)| (id[a], id[b])).collect(),
            projective: t.projective_vertices().iter().map(|v| id[v]).collect(),
            injective: t.injective_vertices().iter().map(|v| id[v]).collect(),
            names,
        };
        (draft, id)
    }

    fn fresh(&mut self) -> usize {
        self.names.push(TubeVertex::new(Family::X, usize::MAX, 0));
        self.names.len() - 1
    }

    fn next(&self, v: usize, kind: ArrowKind) -> Option<usize> {
        self.arrows.iter().find(|((s, _), k)| *s == v && **k == kind).map(|((_, t), _)| *t)
    }

    fn prev(&self, v: usize, kind: ArrowKind) -> Option<usize> {
        self.arrows.iter().find(|((_, t), k)| *t == v && **k == kind).map(|((s, _), _)| *s)
    }

    /// Reads canonical coordinates off the quiver: rays are ordered cyclically around the mouth,
    /// the projective rays form one block (projective-injective last), `X0` precedes the block.
    fn canonicalize(self, depth: usize) -> Result<TubeQuiver> {
        let shape = |msg: String| Error::NonCanonicalShape(msg);
        let count = self.names.len();
        let starts: Vec<usize> = (0..count).filter(|&v| self.prev(v, ArrowKind::Ray).is_none()).collect();
        let mut ray_of = vec![usize::MAX; count];
        let mut position = vec![0usize; count];
        for (r, &s) in starts.iter().enumerate() {
            let mut cur = Some(s);
            let mut j = 1;
            while let Some(v) = cur {
                if ray_of[v] != usize::MAX {
                    return Err(shape("a ray closes up on itself".into()));
                }
                ray_of[v] = r;
                position[v] = j;
                j += 1;
                cur = self.next(v, ArrowKind::Ray);
            }
        }
        if ray_of.contains(&usize::MAX) {
            return Err(shape("some vertex lies on no ray".into()));
        }
        // Each ray start has a unique coray predecessor; its ray comes just before.
        let mut following = vec![usize::MAX; starts.len()];
        for (r, &s) in starts.iter().enumerate() {
            let w = self.prev(s, ArrowKind::Coray).ok_or_else(|| shape("a ray start has no coray predecessor".into()))?;
            if following[ray_of[w]] != usize::MAX {
                return Err(shape("two rays follow the same ray".into()));
            }
            following[ray_of[w]] = r;
        }
        let mut cycle = vec![0usize];
        while cycle.len() < starts.len() {
            let nxt = following[*cycle.last().expect("nonempty")];
            if nxt == 0 {
                return Err(shape("rays do not form a single cycle".into()));
            }
            cycle.push(nxt);
        }
        #[derive(PartialEq, Clone, Copy)]
        enum Sort {
            Plain,
            Projective,
            Both,
        }
        let sort = |r: usize| {
            let s = starts[r];
            match (self.projective.contains(&s), self.injective.contains(&s)) {
                (true, true) => Sort::Both,
                (true, false) => Sort::Projective,
                (false, _) => Sort::Plain,
            }
        };
        let k = cycle.len();
        let begin = (0..k)
            .find(|&a| sort(cycle[a]) != Sort::Plain && sort(cycle[(a + k - 1) % k]) == Sort::Plain)
            .ok_or_else(|| shape("no projective ray, coordinates are not determined".into()))?;
        let order: Vec<usize> = (0..k).map(|a| cycle[(begin + a) % k]).collect();
        let sorts: Vec<Sort> = order.iter().map(|&r| sort(r)).collect();
        let x_count = sorts.iter().take_while(|s| **s == Sort::Projective).count();
        let y_count = sorts[x_count..].iter().take_while(|s| **s == Sort::Both).count();
        let plain = k - x_count - y_count;
        if plain == 0 || sorts[x_count + y_count..].iter().any(|s| *s != Sort::Plain) {
            return Err(shape("projective rays do not form one block".into()));
        }
        let mut ray_name = vec![(Family::X, 0); k];
        for (a, &r) in order.iter().enumerate() {
            ray_name[r] = if a < x_count {
                (Family::X, a + 1)
            } else if a < x_count + y_count {
                (Family::Y, a - x_count + 1)
            } else if a == k - 1 {
                (Family::X, 0)
            } else {
                (Family::Z, a - x_count - y_count + 1)
            };
        }
        let name = |v: usize| {
            let (f, i) = ray_name[ray_of[v]];
            TubeVertex::new(f, i, position[v])
        };
        let keep = |v: usize| position[v] <= depth;
        let vertices = (0..count).filter(|&v| keep(v)).map(name).collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|((a, b), _)| keep(*a) && keep(*b))
            .map(|((a, b), kd)| ((name(*a), name(*b)), *kd))
            .collect();
        let tau = self.tau.iter().filter(|(a, b)| keep(**a) && keep(**b)).map(|(a, b)| (name(*a), name(*b))).collect();
        let projective = self.projective.iter().filter(|v| keep(**v)).map(|v| name(*v)).collect();
        let injective = self.injective.iter().filter(|v| keep(**v)).map(|v| name(*v)).collect();
        Ok(TubeQuiver::from_parts(
            (plain - 1, x_count + y_count, y_count, depth),
            vertices,
            arrows,
            tau,
            projective,
            injective,
        ))
    }
}

/// Inserts a new ray next to the ray starting at the ray vertex `v`. The result is exact one level
/// below the input truncation.
pub fn ray_insertion(t: &TubeQuiver, v: &TubeVertex) -> Result<TubeQuiver> {
    if !t.is_ray_vertex(v) {
        return Err(Error::NotRayVertex(v.to_string()));
    }
    let (mut d, id) = Draft::from_tube(t);
    let mut ray = vec![id[v]];
    while let Some(next) = d.next(*ray.last().expect("nonempty"), ArrowKind::Ray) {
        ray.push(next);
    }
    let new: Vec<usize> = ray.iter().map(|_| d.fresh()).collect();
    for (k, &old) in ray.iter().enumerate() {
        let moved: Vec<(usize, ArrowKind)> = d
            .arrows
            .iter()
            .filter(|((s, _), kd)| *s == old && **kd == ArrowKind::Coray)
            .map(|((_, w), kd)| (*w, *kd))
            .collect();
        for (w, kd) in moved {
            d.arrows.remove(&(old, w));
            d.arrows.insert((new[k], w), kd);
        }
        d.arrows.insert((old, new[k]), ArrowKind::Coray);
        if k + 1 < ray.len() {
            d.arrows.insert((new[k], new[k + 1]), ArrowKind::Ray);
        }
    }
    let pos: BTreeMap<usize, usize> = ray.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let retarget: Vec<(usize, usize)> = d
        .tau
        .iter()
        .filter(|(_, w)| pos.contains_key(w))
        .map(|(u, w)| (*u, new[pos[w]]))
        .collect();
    d.tau.extend(retarget);
    for k in 0..ray.len() {
        if k + 1 < ray.len() {
            d.tau.insert(new[k + 1], ray[k]);
            d.injective.remove(&ray[k]);
        }
        if t.is_injective(&d.names[ray[k]]) {
            d.injective.insert(new[k]);
        }
    }
    d.projective.insert(new[0]);
    d.canonicalize(t.depth.saturating_sub(1))
}

/// Inserts a new coray next to the coray ending at the coray vertex `v`. The result is exact one
/// level below the input truncation.
pub fn coray_insertion(t: &TubeQuiver, v: &TubeVertex) -> Result<TubeQuiver> {
    if !t.is_coray_vertex(v) {
        return Err(Error::NotCorayVertex(v.to_string()));
    }
    let (mut d, id) = Draft::from_tube(t);
    let mut coray = vec![id[v]];
    while let Some(prev) = d.prev(*coray.last().expect("nonempty"), ArrowKind::Coray) {
        coray.push(prev);
    }
    let new: Vec<usize> = coray.iter().map(|_| d.fresh()).collect();
    for (k, &old) in coray.iter().enumerate() {
        let moved: Vec<(usize, ArrowKind)> = d
            .arrows
            .iter()
            .filter(|((_, s), kd)| *s == old && **kd == ArrowKind::Ray)
            .map(|((w, _), kd)| (*w, *kd))
            .collect();
        for (w, kd) in moved {
            d.arrows.remove(&(w, old));
            d.arrows.insert((w, new[k]), kd);
        }
        d.arrows.insert((new[k], old), ArrowKind::Ray);
        if k + 1 < coray.len() {
            d.arrows.insert((new[k + 1], new[k]), ArrowKind::Coray);
        }
    }
    let old_tau: BTreeMap<usize, usize> = d.tau.clone();
    for k in 0..coray.len() {
        match old_tau.get(&coray[k]) {
            Some(u) => {
                d.tau.insert(new[k], *u);
            }
            None => {
                if t.is_projective(&d.names[coray[k]]) {
                    d.projective.insert(new[k]);
                }
            }
        }
        if k + 1 < coray.len() {
            d.tau.insert(coray[k], new[k + 1]);
            d.projective.remove(&coray[k]);
        } else {
            d.tau.remove(&coray[k]);
        }
    }
    d.injective.insert(new[0]);
    d.canonicalize(t.depth.saturating_sub(1))
}
