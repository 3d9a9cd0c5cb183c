use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Scalar};

use super::quiver::{Path, Quiver, Relation};
use super::structure::{Sparse, StructureAlgebra};

pub const DEFAULT_CAP: usize = 64;

/// Upper bound on enumerated paths; larger presentations are rejected as bad input.
const PATH_LIMIT: usize = 200_000;

/// `kQ / I` with a path basis and structure constants.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Least `N` with every path of length `N` in the ideal.
    pub nilpotency: usize,
    pub basis: Vec<Path>,
    pub structure: Arc<StructureAlgebra>,
    /// Coordinates of every path of length below `nilpotency`.
    reductions: HashMap<(usize, Vec<usize>), Sparse>,
}

fn column_order(a: &Path, b: &Path) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

/// Paths of length at most `max_len` grouped by length.
fn paths_up_to(q: &Quiver, max_len: usize) -> Result<Vec<Vec<Path>>> {
    let mut by_len = vec![(0..q.num_vertices()).map(Path::trivial).collect::<Vec<_>>()];
    let mut total = by_len[0].len();
    for l in 1..=max_len {
        let mut next = Vec::new();
        for p in &by_len[l - 1] {
            for k in q.arrows_from(p.target) {
                next.push(p.then_arrow(q, k));
            }
        }
        total += next.len();
        if total > PATH_LIMIT {
            return Err(Error::BadInput(format!("more than {PATH_LIMIT} paths of length <= {max_len}")));
        }
        by_len.push(next);
    }
    Ok(by_len)
}

/// The elements `w rho u` (first `w`, then `rho`, then `u`) with terms of length above `max_len`
/// dropped, grouped by (source, target).
fn ideal_generators(
    rels: &[Relation],
    by_len: &[Vec<Path>],
    max_len: usize,
) -> HashMap<(usize, usize), Vec<Vec<(Scalar, Path)>>> {
    let mut gens: HashMap<(usize, usize), Vec<Vec<(Scalar, Path)>>> = HashMap::new();
    for rel in rels {
        let Some((_, p0)) = rel.terms.first() else { continue };
        let min_len = rel.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
        if min_len > max_len {
            continue;
        }
        let budget = max_len - min_len;
        for lw in 0..=budget {
            for w in by_len[lw].iter().filter(|w| w.target == p0.source) {
                for lu in 0..=(budget - lw) {
                    for u in by_len[lu].iter().filter(|u| u.source == p0.target) {
                        let mut terms = Vec::new();
                        for (c, p) in &rel.terms {
                            if lw + p.len() + lu <= max_len {
                                let full = w.then(p).and_then(|x| x.then(u)).expect("composable");
                                terms.push((c.clone(), full));
                            }
                        }
                        if !terms.is_empty() {
                            gens.entry((w.source, u.target)).or_default().push(terms);
                        }
                    }
                }
            }
        }
    }
    gens
}

/// Builds `kQ / I` for admissible relations, discovering the nilpotency bound.
///
/// For each `N` the ideal `I + R^(N+1)` is spanned in the paths of length at most `N`; once it
/// contains every path of length `N`, the quotient is `kQ / (I + R^N)` with the shortest paths
/// (in "longest first, then lexicographic" elimination order) as basis.
pub fn build_algebra(q: &Quiver, rels: &[Relation], cap: usize) -> Result<BoundQuiverAlgebra> {
    for r in rels {
        r.check_admissible(q)?;
    }
    let rels: Vec<Relation> = rels.iter().filter(|r| !r.terms.is_empty()).cloned().collect();
    let nv = q.num_vertices();
    for n in 1..=cap {
        let by_len = paths_up_to(q, n)?;
        if by_len[n].is_empty() {
            return finish(q, &rels, n, &by_len);
        }
        let gens = ideal_generators(&rels, &by_len, n);
        let mut ok = true;
        'blocks: for s in 0..nv {
            for t in 0..nv {
                let top: Vec<&Path> = by_len[n].iter().filter(|p| p.source == s && p.target == t).collect();
                if top.is_empty() {
                    continue;
                }
                let Some(rows) = gens.get(&(s, t)) else {
                    ok = false;
                    break 'blocks;
                };
                let mut cols: Vec<&Path> = by_len.iter().flatten().filter(|p| p.source == s && p.target == t).collect();
                cols.sort_by(|a, b| column_order(a, b));
                let index: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();
                let mut g = Matrix::zeros(rows.len(), cols.len());
                for (r, terms) in rows.iter().enumerate() {
                    for (c, p) in terms {
                        g.add_to(r, index[p], c);
                    }
                }
                let shorter: Vec<usize> = (top.len()..cols.len()).collect();
                if g.rank() != top.len() + g.select_columns(&shorter).rank() {
                    ok = false;
                    break 'blocks;
                }
            }
        }
        if ok {
            let by_len = paths_up_to(q, n - 1)?;
            return finish(q, &rels, n, &by_len);
        }
    }
    Err(Error::NotFiniteDimensional { cap })
}

/// Reduces all paths of length below `n` modulo the ideal and assembles the structure constants.
fn finish(q: &Quiver, rels: &[Relation], n: usize, by_len: &[Vec<Path>]) -> Result<BoundQuiverAlgebra> {
    let max_len = n - 1;
    let by_len = &by_len[..=max_len.min(by_len.len() - 1)];
    let gens = ideal_generators(rels, by_len, max_len);
    let nv = q.num_vertices();
    let mut basis: Vec<Path> = Vec::new();
    // (path, reduction as combination of basis paths)
    let mut pivot_rules: Vec<(Path, Vec<(Scalar, Path)>)> = Vec::new();
    for s in 0..nv {
        for t in 0..nv {
            let mut cols: Vec<&Path> = by_len.iter().flatten().filter(|p| p.source == s && p.target == t).collect();
            if cols.is_empty() {
                continue;
            }
            cols.sort_by(|a, b| column_order(a, b));
            let rows = gens.get(&(s, t)).map(Vec::as_slice).unwrap_or(&[]);
            let index: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            let mut g = Matrix::zeros(rows.len(), cols.len());
            for (r, terms) in rows.iter().enumerate() {
                for (c, p) in terms {
                    g.add_to(r, index[p], c);
                }
            }
            let ech = g.echelon();
            let mut is_pivot = vec![false; cols.len()];
            for &p in &ech.pivots {
                is_pivot[p] = true;
            }
            for (c, p) in cols.iter().enumerate() {
                if !is_pivot[c] {
                    basis.push((*p).clone());
                }
            }
            for (r, &pc) in ech.pivots.iter().enumerate() {
                let mut rule = Vec::new();
                for c in (pc + 1)..cols.len() {
                    let x = ech.matrix.get(r, c);
                    if !x.is_zero() {
                        debug_assert!(!is_pivot[c]);
                        rule.push((-x, cols[c].clone()));
                    }
                }
                pivot_rules.push((cols[pc].clone(), rule));
            }
        }
    }
    basis.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let bindex: HashMap<Path, usize> = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut reductions: HashMap<(usize, Vec<usize>), Sparse> = HashMap::new();
    for (i, p) in basis.iter().enumerate() {
        reductions.insert((p.source, p.arrows.clone()), vec![(i, Scalar::one())]);
    }
    for (p, rule) in pivot_rules {
        let mut v: Sparse = rule.into_iter().map(|(c, b)| (bindex[&b], c)).collect();
        v.sort_by_key(|(k, _)| *k);
        reductions.insert((p.source, p.arrows.clone()), v);
    }
    let structure = assemble_structure(q, &basis, &reductions);
    Ok(BoundQuiverAlgebra {
        quiver: q.clone(),
        relations: rels.to_vec(),
        nilpotency: n,
        basis,
        structure: Arc::new(structure),
        reductions,
    })
}

fn assemble_structure(q: &Quiver, basis: &[Path], reductions: &HashMap<(usize, Vec<usize>), Sparse>) -> StructureAlgebra {
    let labels = basis.iter().map(|p| p.label(q)).collect();
    let objects = q.vertices().to_vec();
    let grading = basis.iter().map(|p| (p.source, p.target)).collect();
    let idempotents: Vec<usize> = (0..q.num_vertices())
        .map(|v| basis.iter().position(|p| p.is_trivial() && p.source == v).expect("trivial path in basis"))
        .collect();
    let alg = StructureAlgebra::new(labels, objects, grading, idempotents, |i, j| {
        // b_i * b_j: first b_j then b_i
        let first = &basis[j];
        let second = &basis[i];
        let joined = first.then(second).expect("composable pair");
        reductions.get(&(joined.source, joined.arrows)).cloned().unwrap_or_default()
    });
    let gens: Vec<usize> = (0..q.num_arrows())
        .map(|k| basis.iter().position(|p| p.arrows == [k]).expect("arrow in basis"))
        .collect();
    let words = basis.iter().map(|p| p.arrows.clone()).collect();
    alg.with_generators(gens, words)
}

impl BoundQuiverAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.quiver.vertex_index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn arrow(&self, label: &str) -> Result<usize> {
        self.quiver.arrow_index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Coordinates of an arbitrary path in the basis.
    pub fn reduce_path(&self, p: &Path) -> Sparse {
        if p.len() >= self.nilpotency {
            return Vec::new();
        }
        self.reductions.get(&(p.source, p.arrows.clone())).cloned().unwrap_or_default()
    }

    pub fn reduce_path_dense(&self, p: &Path) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (k, c) in self.reduce_path(p) {
            v[k] = c;
        }
        v
    }

    /// Index of a basis element given by its path.
    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis.iter().position(|b| b == p)
    }

    /// Element for the arrow `k`, as a dense vector.
    pub fn arrow_element(&self, k: usize) -> Vec<Scalar> {
        self.reduce_path_dense(&Path::arrow(&self.quiver, k))
    }

    /// Evaluates a relation in the algebra.
    pub fn evaluate(&self, rel: &Relation) -> Vec<Scalar> {
        let mut total = vec![Scalar::zero(); self.dim()];
        for (c, p) in &rel.terms {
            for (k, x) in self.reduce_path(p) {
                total[k] += c * &x;
            }
        }
        total
    }

    /// Paths of length below the nilpotency bound, i.e. the spanning set of the quotient.
    pub fn short_paths(&self) -> Vec<Path> {
        let mut keys: Vec<Path> =
            self.reductions.keys().map(|(s, arrows)| path_from(&self.quiver, *s, arrows)).collect();
        keys.sort();
        keys
    }

    /// The opposite algebra on the opposite quiver, basis order preserved.
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        let quiver = self.quiver.opposite();
        let basis: Vec<Path> = self.basis.iter().map(Path::reversed).collect();
        let reductions = self
            .reductions
            .iter()
            .map(|((s, arrows), v)| {
                let p = path_from(&self.quiver, *s, arrows).reversed();
                ((p.source, p.arrows), v.clone())
            })
            .collect();
        let structure = assemble_structure(&quiver, &basis, &reductions);
        BoundQuiverAlgebra {
            quiver,
            relations: self.relations.iter().map(Relation::reversed).collect(),
            nilpotency: self.nilpotency,
            basis,
            structure: Arc::new(structure),
            reductions,
        }
    }
}

fn path_from(q: &Quiver, s: usize, arrows: &[usize]) -> Path {
    let mut p = Path::trivial(s);
    for &k in arrows {
        p = p.then_arrow(q, k);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver_algebra::verify_relations;

    fn kronecker() -> Quiver {
        let mut q = Quiver::with_vertices(&["1", "2"]);
        q.add_arrow("a", "2", "1").unwrap();
        q.add_arrow("b", "2", "1").unwrap();
        q
    }

    #[test]
    fn kronecker_has_dimension_four() {
        let a = build_algebra(&kronecker(), &[], DEFAULT_CAP).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.nilpotency, 2);
        let s = &a.structure;
        assert!(s.associativity_failure().is_none());
        assert!(s.check_idempotents());
    }

    #[test]
    fn loop_is_infinite() {
        let mut q = Quiver::with_vertices(&["v"]);
        q.add_arrow("x", "v", "v").unwrap();
        assert_eq!(build_algebra(&q, &[], 10).unwrap_err(), Error::NotFiniteDimensional { cap: 10 });
    }

    #[test]
    fn loop_with_nilpotent_relation() {
        let mut q = Quiver::with_vertices(&["v"]);
        q.add_arrow("x", "v", "v").unwrap();
        let r = Relation::from_ints(&q, &[(1, "x x x")]).unwrap();
        let a = build_algebra(&q, &[r], 10).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.nilpotency, 3);
    }

    #[test]
    fn short_path_relation_rejected() {
        let q = kronecker();
        let r = Relation::from_ints(&q, &[(1, "a"), (-1, "b")]).unwrap();
        assert!(matches!(build_algebra(&q, &[r], 10), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn commutative_square() {
        let mut q = Quiver::with_vertices(&["1", "2", "3", "4"]);
        q.add_arrow("a", "1", "2").unwrap();
        q.add_arrow("b", "2", "4").unwrap();
        q.add_arrow("c", "1", "3").unwrap();
        q.add_arrow("d", "3", "4").unwrap();
        let r = Relation::from_ints(&q, &[(1, "b a"), (-1, "d c")]).unwrap();
        let a = build_algebra(&q, std::slice::from_ref(&r), DEFAULT_CAP).unwrap();
        // 4 idempotents, 4 arrows, one class of length-2 paths
        assert_eq!(a.dim(), 9);
        assert!(a.evaluate(&r).iter().all(Scalar::is_zero));
        assert!(a.structure.associativity_failure().is_none());
        let ext = a.structure.ext_quiver().unwrap();
        assert!(ext.same_multigraph(&q));
        let assignment: Vec<Vec<Scalar>> = (0..4).map(|k| a.arrow_element(k)).collect();
        assert!(verify_relations(&a.structure, &q, &assignment, &[r]).unwrap());
    }

    #[test]
    fn kronecker_arrows_are_independent() {
        let q = kronecker();
        let a = build_algebra(&q, &[], DEFAULT_CAP).unwrap();
        let assignment: Vec<Vec<Scalar>> = (0..2).map(|k| a.arrow_element(k)).collect();
        let r = Relation::from_ints(&q, &[(1, "a"), (-1, "b")]).unwrap();
        assert!(!verify_relations(&a.structure, &q, &assignment, &[r]).unwrap());
        assert!(verify_relations(&a.structure, &q, &assignment, &[]).unwrap());
    }

    #[test]
    fn opposite_structure_matches() {
        let mut q = Quiver::with_vertices(&["1", "2", "3"]);
        q.add_arrow("a", "1", "2").unwrap();
        q.add_arrow("b", "2", "3").unwrap();
        q.add_arrow("c", "1", "2").unwrap();
        let r = Relation::from_ints(&q, &[(1, "b a"), (2, "b c")]).unwrap();
        let a = build_algebra(&q, &[r], DEFAULT_CAP).unwrap();
        let op = a.opposite();
        assert_eq!(*op.structure, a.structure.opposite());
        let rebuilt = build_algebra(&op.quiver, &op.relations, DEFAULT_CAP).unwrap();
        assert_eq!(rebuilt.dim(), a.dim());
    }
}
