use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Scalar};
use crate::quiver_algebra::{Sparse, StructureAlgebra};
use crate::representation::Representation;

/// A basis element of a levelled algebra: an element of `R` or of its dual `R*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Base(usize),
    Dual(usize),
}

/// A finite window `[lo, hi]` of the repetitive category of `R`, or (with `period = Some(s)`) the
/// orbit algebra of the repetitive category under the `s`-th power of the Nakayama shift.
///
/// Objects are `(v, level)` at index `(level - lo) * n + v`. Each level lists `b` for every basis
/// element `b: s -> t` of `R`, then (unless it is the top level of a window) the dual element
/// `b*: (t, level) -> (s, level + 1)`.
#[derive(Clone, Debug)]
pub struct RepetitiveWindow {
    pub base: Arc<StructureAlgebra>,
    pub lo: i64,
    pub hi: i64,
    pub period: Option<usize>,
    pub algebra: Arc<StructureAlgebra>,
    parts: Vec<(Part, i64)>,
    starts: Vec<(usize, Option<usize>)>,
}

impl RepetitiveWindow {
    fn build(r: Arc<StructureAlgebra>, lo: i64, hi: i64, period: Option<usize>) -> RepetitiveWindow {
        let d = r.dim();
        let n = r.num_objects();
        let levels = (hi - lo + 1) as usize;
        let wrap = period.is_some();
        let mut parts = Vec::new();
        let mut starts = Vec::with_capacity(levels);
        let mut grading = Vec::new();
        let mut labels = Vec::new();
        for k in 0..levels {
            let level = lo + k as i64;
            let base_start = parts.len();
            for b in 0..d {
                let (s, t) = r.grading(b);
                parts.push((Part::Base(b), level));
                grading.push((s + k * n, t + k * n));
                labels.push(format!("{}@{level}", r.labels()[b]));
            }
            let dual_start = if wrap || k + 1 < levels {
                let start = parts.len();
                let next = (k + 1) % levels;
                for b in 0..d {
                    let (s, t) = r.grading(b);
                    parts.push((Part::Dual(b), level));
                    grading.push((t + k * n, s + next * n));
                    labels.push(format!("{}*@{level}", r.labels()[b]));
                }
                Some(start)
            } else {
                None
            };
            starts.push((base_start, dual_start));
        }
        let objects: Vec<String> =
            (0..levels).flat_map(|k| r.objects().iter().map(move |o| format!("{o}@{}", lo + k as i64))).collect();
        let idempotents: Vec<usize> = (0..levels).flat_map(|k| (0..n).map(move |v| (k, v))).map(|(k, v)| starts[k].0 + r.idempotent(v)).collect();
        let level_index = |level: i64| (level - lo) as usize;
        let dual_index = |b: usize, level: i64| starts[level_index(level)].1.expect("dual level") + b;
        let product = |i: usize, j: usize| -> Sparse {
            let (pi, li) = parts[i];
            let (pj, lj) = parts[j];
            match (pi, pj) {
                (Part::Base(x), Part::Base(y)) => {
                    let off = starts[level_index(li)].0;
                    r.product(x, y).iter().map(|(k, c)| (off + k, c.clone())).collect()
                }
                // (x . y*)(a) = y*(a x): the coefficient of y in a x, for a from t(x) to t(y).
                (Part::Base(x), Part::Dual(y)) => r
                    .block(r.target(x), r.target(y))
                    .iter()
                    .filter_map(|&a| coefficient(r.product(a, x), y).map(|c| (dual_index(a, lj), c)))
                    .collect(),
                // (x* . y)(a) = x*(y a): the coefficient of x in y a, for a from s(x) to s(y).
                (Part::Dual(x), Part::Base(y)) => r
                    .block(r.source(x), r.source(y))
                    .iter()
                    .filter_map(|&a| coefficient(r.product(y, a), x).map(|c| (dual_index(a, li), c)))
                    .collect(),
                (Part::Dual(_), Part::Dual(_)) => Sparse::new(),
            }
        };
        let algebra = StructureAlgebra::new(labels, objects, grading, idempotents, product);
        RepetitiveWindow { base: r, lo, hi, period, algebra: Arc::new(algebra), parts, starts }
    }

    pub fn levels(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// Object index of `(v, level)`, if the level lies in the window.
    pub fn object(&self, v: usize, level: i64) -> Option<usize> {
        (self.lo..=self.hi).contains(&level).then(|| (level - self.lo) as usize * self.base.num_objects() + v)
    }

    /// `(v, level)` of an object index.
    pub fn object_part(&self, o: usize) -> (usize, i64) {
        let n = self.base.num_objects();
        (o % n, self.lo + (o / n) as i64)
    }

    /// What a basis element is: a base or dual element of `R`, at its starting level.
    pub fn part(&self, idx: usize) -> (Part, i64) {
        self.parts[idx]
    }

    /// Basis index of a base or dual element at a level, if present in the window.
    pub fn index(&self, part: Part, level: i64) -> Option<usize> {
        if !(self.lo..=self.hi).contains(&level) {
            return None;
        }
        let (base, dual) = self.starts[(level - self.lo) as usize];
        match part {
            Part::Base(b) => Some(base + b),
            Part::Dual(b) => dual.map(|s| s + b),
        }
    }

    /// The same window moved `k` levels up; basis and object indices carry over unchanged.
    pub fn shifted(&self, k: i64) -> RepetitiveWindow {
        match self.period {
            Some(_) => self.clone(),
            None => RepetitiveWindow::build(self.base.clone(), self.lo + k, self.hi + k, None),
        }
    }

    /// The Nakayama shift `k` times on a basis element, staying inside this window.
    pub fn shift_element(&self, idx: usize, k: i64) -> Option<usize> {
        let (part, level) = self.parts[idx];
        match self.period {
            Some(s) => {
                let target = (level - self.lo + k).rem_euclid(s as i64) + self.lo;
                self.index(part, target)
            }
            None => self.index(part, level + k),
        }
    }
}

fn coefficient(s: &Sparse, k: usize) -> Option<Scalar> {
    s.iter().find(|(i, _)| *i == k).map(|(_, c)| c.clone())
}

/// The repetitive category of `R` restricted to the levels `lo..=hi`.
pub fn repetitive_window(r: Arc<StructureAlgebra>, lo: i64, hi: i64) -> Result<RepetitiveWindow> {
    if lo > hi {
        return Err(Error::BadParams(format!("empty level range {lo}..{hi}")));
    }
    Ok(RepetitiveWindow::build(r, lo, hi, None))
}

/// The orbit algebra of the repetitive category under the `s`-th power of the Nakayama shift:
/// objects `(v, k)` for `k` in `0..s`, with duals wrapping from level `s - 1` to level `0`.
pub fn orbit_algebra(r: Arc<StructureAlgebra>, s: usize) -> Result<RepetitiveWindow> {
    if s == 0 {
        return Err(Error::BadParams("period must be at least 1".into()));
    }
    Ok(RepetitiveWindow::build(r, 0, s as i64 - 1, Some(s)))
}

/// The trivial extension `R ⋉ R*` with basis `R` followed by the dual basis of `R`.
pub fn trivial_extension(r: &StructureAlgebra) -> StructureAlgebra {
    let w = RepetitiveWindow::build(Arc::new(r.clone()), 0, 0, Some(1));
    let labels = r.labels().iter().cloned().chain(r.labels().iter().map(|l| format!("{l}*"))).collect();
    let alg = Arc::try_unwrap(w.algebra).unwrap_or_else(|a| (*a).clone());
    alg.with_labels(labels).with_object_labels(r.objects().to_vec())
}

/// Moves a module on a window `k` levels up, returning the shifted window with it.
pub fn nakayama_shift(w: &RepetitiveWindow, m: &Representation, k: i64) -> Result<(RepetitiveWindow, Representation)> {
    if !crate::representation::same_algebra(m.algebra(), &w.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let shifted = w.shifted(k);
    let moved = Representation::new(shifted.algebra.clone(), m.dims().to_vec(), m.maps().to_vec())?;
    Ok((shifted, moved))
}

/// Per block `(s, t)` (index `s * n + t`), bases of the right and left socles of `A`: elements `x`
/// with `x r = 0`, resp. `r x = 0`, for every radical element `r`.
fn socles(a: &StructureAlgebra) -> (Vec<Matrix>, Vec<Matrix>) {
    let n = a.num_objects();
    let rad = a.radical_blocks();
    let mut right = Vec::with_capacity(n * n);
    let mut left = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let dim = a.block_dim(s, t);
            let unit = |i: usize| {
                let mut v = vec![Scalar::zero(); dim];
                v[i] = Scalar::one();
                v
            };
            let mut right_rows: Vec<Vec<Scalar>> = Vec::new();
            let mut left_rows: Vec<Vec<Scalar>> = Vec::new();
            for u in 0..n {
                // x r for r in rad from u to s.
                let r = &rad[u * n + s];
                for c in 0..r.cols() {
                    let rv = r.column(c);
                    let images: Vec<Vec<Scalar>> = (0..dim).map(|i| a.block_mul(&unit(i), (s, t), &rv, (u, s))).collect();
                    right_rows.extend(transpose_rows(&images, a.block_dim(u, t)));
                }
                // r x for r in rad from t to u.
                let r = &rad[t * n + u];
                for c in 0..r.cols() {
                    let rv = r.column(c);
                    let images: Vec<Vec<Scalar>> = (0..dim).map(|i| a.block_mul(&rv, (t, u), &unit(i), (s, t))).collect();
                    left_rows.extend(transpose_rows(&images, a.block_dim(s, u)));
                }
            }
            right.push(Matrix::from_rows_with_width(right_rows, dim).expect("uniform rows").kernel());
            left.push(Matrix::from_rows_with_width(left_rows, dim).expect("uniform rows").kernel());
        }
    }
    (right, left)
}

/// Rows of the matrix whose columns are `images` (each of length `len`).
fn transpose_rows(images: &[Vec<Scalar>], len: usize) -> Vec<Vec<Scalar>> {
    (0..len).map(|r| images.iter().map(|col| col[r].clone()).collect()).collect()
}

fn same_span(x: &Matrix, y: &Matrix) -> bool {
    x.cols() == y.cols() && Matrix::hstack(&[x, y]).rank() == x.cols()
}

/// Dimension of the socle of `A`, after checking it is a two-sided ideal.
pub fn socle_dim(a: &StructureAlgebra) -> Result<usize> {
    let (right, left) = socles(a);
    if right.iter().zip(&left).any(|(r, l)| !same_span(r, l)) {
        return Err(Error::SocleNotTwoSided);
    }
    Ok(right.iter().map(Matrix::cols).sum())
}

/// `A / soc A` for an algebra whose left and right socles agree.
///
/// The quotient basis is a set of original basis elements complementing the socle in each block;
/// objects whose idempotent lies in the socle disappear.
pub fn socle_quotient(a: &StructureAlgebra) -> Result<StructureAlgebra> {
    let (right, left) = socles(a);
    if right.iter().zip(&left).any(|(r, l)| !same_span(r, l)) {
        return Err(Error::SocleNotTwoSided);
    }
    let n = a.num_objects();
    // Per block: coordinate order with the idempotent last, and the reduced socle rows.
    let mut kept = vec![false; a.dim()];
    let mut reducers: Vec<Vec<(usize, Vec<(usize, Scalar)>)>> = vec![Vec::new(); n * n];
    for s in 0..n {
        for t in 0..n {
            let block = a.block(s, t);
            let mut order: Vec<usize> = (0..block.len()).collect();
            if s == t {
                let e = a.block_position(a.idempotent(s));
                order.retain(|&i| i != e);
                order.push(e);
            }
            let soc = &right[s * n + t];
            let rows: Vec<Vec<Scalar>> =
                (0..soc.cols()).map(|c| order.iter().map(|&i| soc.get(i, c).clone()).collect()).collect();
            let ech = Matrix::from_rows_with_width(rows, block.len()).expect("uniform rows").echelon();
            let pivots: Vec<usize> = ech.pivots.iter().map(|&p| order[p]).collect();
            for (pos, &b) in block.iter().enumerate() {
                kept[b] = !pivots.contains(&pos);
            }
            for (r, &p) in ech.pivots.iter().enumerate() {
                let rest: Vec<(usize, Scalar)> = (0..block.len())
                    .filter(|&c| c != p && !ech.matrix.get(r, c).is_zero())
                    .map(|c| (block[order[c]], ech.matrix.get(r, c).clone()))
                    .collect();
                reducers[s * n + t].push((block[order[p]], rest));
            }
        }
    }
    let objs: Vec<usize> = (0..n).filter(|&v| kept[a.idempotent(v)]).collect();
    let keep: Vec<usize> = (0..a.dim()).filter(|&b| kept[b]).collect();
    let mut new_index = vec![usize::MAX; a.dim()];
    for (k, &b) in keep.iter().enumerate() {
        new_index[b] = k;
    }
    let obj_index = |o: usize| objs.iter().position(|&x| x == o).expect("kept object");
    let reduce = |v: &Sparse, block: usize| -> Sparse {
        let mut dense: std::collections::BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        for (p, rest) in &reducers[block] {
            if let Some(c) = dense.remove(p) {
                // p = -sum(rest) modulo the socle.
                for (q, x) in rest {
                    *dense.entry(*q).or_insert_with(Scalar::zero) -= &(&c * x);
                }
            }
        }
        dense.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (new_index[k], c)).collect()
    };
    let q = StructureAlgebra::new(
        keep.iter().map(|&b| a.labels()[b].clone()).collect(),
        objs.iter().map(|&o| a.objects()[o].clone()).collect(),
        keep.iter().map(|&b| (obj_index(a.source(b)), obj_index(a.target(b)))).collect(),
        objs.iter().map(|&o| new_index[a.idempotent(o)]).collect(),
        |i, j| {
            let (bi, bj) = (keep[i], keep[j]);
            reduce(a.product(bi, bj), a.source(bj) * n + a.target(bi))
        },
    );
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver_algebra::{build_algebra, Quiver, Relation, DEFAULT_CAP};

    fn kronecker() -> Arc<StructureAlgebra> {
        let mut q = Quiver::with_vertices(&["1", "2"]);
        q.add_arrow("a", "2", "1").unwrap();
        q.add_arrow("b", "2", "1").unwrap();
        build_algebra(&q, &[], DEFAULT_CAP).unwrap().structure
    }

    fn truncated(k: usize) -> Arc<StructureAlgebra> {
        let mut q = Quiver::with_vertices(&["v"]);
        q.add_arrow("x", "v", "v").unwrap();
        let word = vec!["x"; k].join(" ");
        let r = Relation::from_ints(&q, &[(1, word.as_str())]).unwrap();
        build_algebra(&q, &[r], DEFAULT_CAP).unwrap().structure
    }

    fn a2() -> Arc<StructureAlgebra> {
        let mut q = Quiver::with_vertices(&["1", "2"]);
        q.add_arrow("a", "1", "2").unwrap();
        build_algebra(&q, &[], DEFAULT_CAP).unwrap().structure
    }

    fn field() -> Arc<StructureAlgebra> {
        build_algebra(&Quiver::with_vertices(&["v"]), &[], DEFAULT_CAP).unwrap().structure
    }

    fn same_table(a: &StructureAlgebra, b: &StructureAlgebra) -> bool {
        a.dim() == b.dim()
            && a.num_objects() == b.num_objects()
            && a.idempotents() == b.idempotents()
            && (0..a.dim()).all(|i| a.grading(i) == b.grading(i) && (0..a.dim()).all(|j| a.product(i, j) == b.product(i, j)))
    }

    #[test]
    fn trivial_extension_of_field_is_dual_numbers() {
        let t = trivial_extension(&field());
        assert_eq!(t.dim(), 2);
        assert_eq!(t.radical().cols(), 1);
        assert_eq!(socle_quotient(&t).unwrap().dim(), 1);
    }

    #[test]
    fn trivial_extension_doubles_dimension_and_is_associative() {
        for r in [kronecker(), a2(), truncated(3)] {
            let t = trivial_extension(&r);
            assert_eq!(t.dim(), 2 * r.dim());
            assert!(t.associativity_failure().is_none());
            assert!(t.check_idempotents());
            // Each projective has a simple socle.
            assert_eq!(socle_dim(&t).unwrap(), r.num_objects());
            let n = r.num_objects();
            for s in 0..n {
                for u in 0..n {
                    assert_eq!(t.block_dim(s, u), r.block_dim(s, u) + r.block_dim(u, s));
                }
            }
        }
    }

    #[test]
    fn socle_quotient_of_trivial_extension() {
        for r in [kronecker(), a2()] {
            let t = trivial_extension(&r);
            let q = socle_quotient(&t).unwrap();
            assert_eq!(q.dim(), 2 * r.dim() - r.num_objects());
            assert!(q.associativity_failure().is_none());
            assert!(q.check_idempotents());
        }
    }

    #[test]
    fn socle_quotient_of_truncated_polynomials() {
        let q = socle_quotient(&truncated(3)).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(same_table(&q, &truncated(2)));
    }

    #[test]
    fn non_selfinjective_socle_is_one_sided() {
        assert_eq!(socle_quotient(&a2()).unwrap_err(), Error::SocleNotTwoSided);
    }

    #[test]
    fn window_of_one_level_is_the_base() {
        let r = kronecker();
        let w = repetitive_window(r.clone(), 0, 0).unwrap();
        assert!(same_table(&w.algebra, &r));
    }

    #[test]
    fn window_hom_spaces_follow_the_level_rule() {
        let r = kronecker();
        let n = r.num_objects();
        let w = repetitive_window(r.clone(), -1, 1).unwrap();
        assert!(w.algebra.associativity_failure().is_none());
        assert!(w.algebra.check_idempotents());
        for i in 0..n {
            for j in 0..n {
                for m in -1..=1 {
                    for l in -1..=1 {
                        let expected = if l == m {
                            r.block_dim(i, j)
                        } else if l == m + 1 {
                            r.block_dim(j, i)
                        } else {
                            0
                        };
                        let (a, b) = (w.object(i, m).unwrap(), w.object(j, l).unwrap());
                        assert_eq!(w.algebra.block_dim(a, b), expected);
                    }
                }
            }
        }
        assert_eq!(repetitive_window(r.clone(), 0, 1).unwrap().algebra.dim(), 3 * r.dim());
    }

    #[test]
    fn orbit_algebra_with_period_one_is_the_trivial_extension() {
        for r in [kronecker(), a2()] {
            let o = orbit_algebra(r.clone(), 1).unwrap();
            assert!(same_table(&o.algebra, &trivial_extension(&r)));
            let o2 = orbit_algebra(r.clone(), 2).unwrap();
            assert_eq!(o2.algebra.dim(), 4 * r.dim());
            assert!(o2.algebra.associativity_failure().is_none());
        }
    }

    #[test]
    fn nakayama_shift_round_trips() {
        let r = kronecker();
        let w = repetitive_window(r, 0, 2).unwrap();
        for idx in 0..w.algebra.dim() {
            if let Some(up) = w.shift_element(idx, 1) {
                assert_eq!(w.shift_element(up, -1), Some(idx));
                assert!(w.algebra.block_dim(w.algebra.source(idx), w.algebra.target(idx)) > 0);
            }
        }
        let s = Representation::simple(w.algebra.clone(), w.object(1, 0).unwrap());
        let (up, moved) = nakayama_shift(&w, &s, 1).unwrap();
        assert_eq!(up.lo, 1);
        let (back, again) = nakayama_shift(&up, &moved, -1).unwrap();
        assert_eq!(back.lo, 0);
        assert_eq!(again.dims(), s.dims());
    }
}
