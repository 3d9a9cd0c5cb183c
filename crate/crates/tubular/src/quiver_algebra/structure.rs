use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Scalar};

use super::quiver::{Quiver, Relation};

/// Sparse vector: (basis index, nonzero coefficient), sorted by index.
pub type Sparse = Vec<(usize, Scalar)>;

pub fn sparse_to_dense(s: &Sparse, d: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    for (i, c) in s {
        v[*i] += c;
    }
    v
}

pub fn dense_to_sparse(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// A finite-dimensional algebra given by a basis and a multiplication table.
///
/// Every basis element is homogeneous: it lies in `e_t A e_s` for a single pair of objects,
/// recorded as its grading `(s, t)` ("a morphism from s to t"). The product `b_i * b_j` means
/// "first `b_j`, then `b_i`" and can be nonzero only when `target(b_j) == source(b_i)`.
///
/// `gens` is a generating set of basis elements and `words[b]` writes `b` as a product of
/// generators (positions in `gens`, in the order they are applied); idempotents have empty words.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    labels: Vec<String>,
    objects: Vec<String>,
    grading: Vec<(usize, usize)>,
    idempotents: Vec<usize>,
    table: Vec<Sparse>,
    gens: Vec<usize>,
    words: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    block_pos: Vec<usize>,
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.objects.len() == other.objects.len()
            && self.grading == other.grading
            && self.idempotents == other.idempotents
            && self.table == other.table
            && self.gens == other.gens
            && self.words == other.words
    }
}

impl Eq for StructureAlgebra {}

impl StructureAlgebra {
    /// Builds the algebra from a product rule; `product(i, j)` is only queried for composable pairs.
    /// Generators default to every non-idempotent basis element.
    pub fn new(
        labels: Vec<String>,
        objects: Vec<String>,
        grading: Vec<(usize, usize)>,
        idempotents: Vec<usize>,
        mut product: impl FnMut(usize, usize) -> Sparse,
    ) -> StructureAlgebra {
        let d = labels.len();
        assert_eq!(grading.len(), d);
        assert_eq!(idempotents.len(), objects.len());
        let mut table = vec![Sparse::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                if grading[i].0 == grading[j].1 {
                    let mut p = product(i, j);
                    p.retain(|(_, c)| !c.is_zero());
                    p.sort_by_key(|(k, _)| *k);
                    debug_assert!(p.iter().all(|(k, _)| grading[*k] == (grading[j].0, grading[i].1)));
                    table[i * d + j] = p;
                }
            }
        }
        let is_idem: Vec<bool> = (0..d).map(|i| idempotents.contains(&i)).collect();
        let gens: Vec<usize> = (0..d).filter(|&i| !is_idem[i]).collect();
        let mut words = vec![Vec::new(); d];
        for (pos, &g) in gens.iter().enumerate() {
            words[g] = vec![pos];
        }
        let n = objects.len();
        let mut blocks = vec![Vec::new(); n * n];
        let mut block_pos = vec![0; d];
        for (i, &(s, t)) in grading.iter().enumerate() {
            block_pos[i] = blocks[s * n + t].len();
            blocks[s * n + t].push(i);
        }
        StructureAlgebra { labels, objects, grading, idempotents, table, gens, words, blocks, block_pos }
    }

    /// Replaces the generating set; `words[b]` lists generator positions in application order.
    pub fn with_generators(mut self, gens: Vec<usize>, words: Vec<Vec<usize>>) -> StructureAlgebra {
        assert_eq!(words.len(), self.dim());
        self.gens = gens;
        self.words = words;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> StructureAlgebra {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn with_object_labels(mut self, objects: Vec<String>) -> StructureAlgebra {
        assert_eq!(objects.len(), self.objects.len());
        self.objects = objects;
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn grading(&self, b: usize) -> (usize, usize) {
        self.grading[b]
    }

    pub fn source(&self, b: usize) -> usize {
        self.grading[b].0
    }

    pub fn target(&self, b: usize) -> usize {
        self.grading[b].1
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn is_idempotent_basis(&self, b: usize) -> bool {
        self.idempotents.contains(&b)
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn word(&self, b: usize) -> &[usize] {
        &self.words[b]
    }

    /// Basis elements of `e_t A e_s`.
    pub fn block(&self, s: usize, t: usize) -> &[usize] {
        &self.blocks[s * self.objects.len() + t]
    }

    /// Position of basis element `b` inside its block.
    pub fn block_position(&self, b: usize) -> usize {
        self.block_pos[b]
    }

    pub fn block_dim(&self, s: usize, t: usize) -> usize {
        self.block(s, t).len()
    }

    /// `b_i * b_j`
    pub fn product(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, b: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[b] = Scalar::one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = self.product(i, j);
                if p.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Matrix of `y -> x * y`.
    pub fn left_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols, d)
    }

    /// Matrix of `y -> y * x`.
    pub fn right_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&cols, d)
    }

    /// First basis triple `(i, j, k)` with `(b_i b_j) b_k != b_i (b_j b_k)`.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if self.source(i) != self.target(j) {
                    continue;
                }
                for k in 0..d {
                    if self.source(j) != self.target(k) {
                        continue;
                    }
                    let mut lhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, c) in self.product(i, j) {
                        for (m, e) in self.product(*l, k) {
                            *lhs.entry(*m).or_insert_with(Scalar::zero) += c * e;
                        }
                    }
                    let mut rhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, c) in self.product(j, k) {
                        for (m, e) in self.product(i, *l) {
                            *rhs.entry(*m).or_insert_with(Scalar::zero) += c * e;
                        }
                    }
                    lhs.retain(|_, c| !c.is_zero());
                    rhs.retain(|_, c| !c.is_zero());
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Idempotent axioms: `e_t b = b = b e_s` for `b` in `e_t A e_s`, idempotents lie in their own
    /// diagonal block (so their sum acts as the unit).
    pub fn check_idempotents(&self) -> bool {
        for (v, &e) in self.idempotents.iter().enumerate() {
            if self.grading[e] != (v, v) {
                return false;
            }
        }
        for b in 0..self.dim() {
            let (s, t) = self.grading[b];
            let unit = vec![(b, Scalar::one())];
            if self.product(self.idempotents[t], b) != &unit || self.product(b, self.idempotents[s]) != &unit {
                return false;
            }
        }
        true
    }

    /// The algebra with reversed multiplication.
    pub fn opposite(&self) -> StructureAlgebra {
        let d = self.dim();
        let grading: Vec<(usize, usize)> = self.grading.iter().map(|&(s, t)| (t, s)).collect();
        let op = StructureAlgebra::new(
            self.labels.clone(),
            self.objects.clone(),
            grading,
            self.idempotents.clone(),
            |i, j| self.table[j * d + i].clone(),
        );
        let words = self
            .words
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w.reverse();
                w
            })
            .collect();
        op.with_generators(self.gens.clone(), words)
    }

    /// Full subcategory on the given objects, with the same product.
    pub fn full_subalgebra(&self, objs: &[usize]) -> StructureAlgebra {
        let keep: Vec<usize> =
            (0..self.dim()).filter(|&b| objs.contains(&self.source(b)) && objs.contains(&self.target(b))).collect();
        let mut new_index = vec![usize::MAX; self.dim()];
        for (k, &b) in keep.iter().enumerate() {
            new_index[b] = k;
        }
        let obj_index = |o: usize| objs.iter().position(|&x| x == o).expect("kept object");
        StructureAlgebra::new(
            keep.iter().map(|&b| self.labels[b].clone()).collect(),
            objs.iter().map(|&o| self.objects[o].clone()).collect(),
            keep.iter().map(|&b| (obj_index(self.source(b)), obj_index(self.target(b)))).collect(),
            objs.iter().map(|&o| new_index[self.idempotents[o]]).collect(),
            |i, j| self.product(keep[i], keep[j]).iter().map(|(k, c)| (new_index[*k], c.clone())).collect(),
        )
    }

    /// Product of a block element of `e_u A e_t` with one of `e_t A e_s`, in coordinates of
    /// `e_u A e_s`.
    pub fn block_mul(&self, x: &[Scalar], xb: (usize, usize), y: &[Scalar], yb: (usize, usize)) -> Vec<Scalar> {
        let (s, t) = yb;
        let (t2, u) = xb;
        assert_eq!(t, t2);
        let out_block = self.block(s, u);
        let mut out = vec![Scalar::zero(); out_block.len()];
        let xs = self.block(t, u);
        let ys = self.block(s, t);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (k, e) in self.product(xs[a], ys[b]) {
                    out[self.block_pos[*k]] += &c * e;
                }
            }
        }
        out
    }

    /// Per-block bases (as columns in block coordinates) of `S * T` for block-decomposed subspaces.
    fn block_product_spaces(&self, left: &[Matrix], right: &[Matrix]) -> Vec<Matrix> {
        let n = self.num_objects();
        let mut out = Vec::with_capacity(n * n);
        for s in 0..n {
            for u in 0..n {
                let rows = self.block_dim(s, u);
                let mut cols = Vec::new();
                for t in 0..n {
                    let l = &left[t * n + u];
                    let r = &right[s * n + t];
                    for a in 0..l.cols() {
                        let x = l.column(a);
                        for b in 0..r.cols() {
                            let y = r.column(b);
                            let p = self.block_mul(&x, (t, u), &y, (s, t));
                            if p.iter().any(|c| !c.is_zero()) {
                                cols.push(p);
                            }
                        }
                    }
                }
                let m = Matrix::from_columns(&cols, rows);
                out.push(m.column_space());
            }
        }
        out
    }

    /// The Jacobson radical, block by block: entry `s * n + t` is a basis (columns, block
    /// coordinates) of `e_t rad e_s`. Uses the trace form of the regular representation, which
    /// detects the radical in characteristic zero.
    pub fn radical_blocks(&self) -> Vec<Matrix> {
        let d = self.dim();
        let n = self.num_objects();
        let traces: Vec<Scalar> = (0..d)
            .map(|k| {
                let mut t = Scalar::zero();
                for j in 0..d {
                    for (l, c) in self.product(k, j) {
                        if *l == j {
                            t += c;
                        }
                    }
                }
                t
            })
            .collect();
        let mut out = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let rows_b = self.block(s, t);
                let cols_b = self.block(t, s);
                // x in e_t A e_s is radical iff Tr(L_{x y}) = 0 for all y in e_s A e_t.
                let mut g = Matrix::zeros(cols_b.len(), rows_b.len());
                for (a, &i) in rows_b.iter().enumerate() {
                    for (b, &j) in cols_b.iter().enumerate() {
                        let mut acc = Scalar::zero();
                        for (k, c) in self.product(i, j) {
                            if !traces[*k].is_zero() {
                                acc += c * &traces[*k];
                            }
                        }
                        g.set(b, a, acc);
                    }
                }
                out.push(g.kernel());
            }
        }
        debug_assert!(self.is_nilpotent(&out), "trace-form radical is not nilpotent");
        out
    }

    /// Checks that the block-decomposed subspace generates a nilpotent ideal power chain.
    pub fn is_nilpotent(&self, space: &[Matrix]) -> bool {
        let mut power = space.to_vec();
        for _ in 0..=self.dim() {
            if power.iter().all(|m| m.cols() == 0) {
                return true;
            }
            power = self.block_product_spaces(&power, space);
        }
        false
    }

    /// The radical as a `dim x r` matrix of columns in the full basis.
    pub fn radical(&self) -> Matrix {
        self.assemble(&self.radical_blocks())
    }

    fn assemble(&self, blocks: &[Matrix]) -> Matrix {
        let n = self.num_objects();
        let mut cols = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let m = &blocks[s * n + t];
                let idx = self.block(s, t);
                for c in 0..m.cols() {
                    let mut v = vec![Scalar::zero(); self.dim()];
                    for (r, &b) in idx.iter().enumerate() {
                        v[b] = m.get(r, c).clone();
                    }
                    cols.push(v);
                }
            }
        }
        Matrix::from_columns(&cols, self.dim())
    }

    pub fn radical_squared_blocks(&self, rad: &[Matrix]) -> Vec<Matrix> {
        self.block_product_spaces(rad, rad)
    }

    fn check_basic(&self, rad: &[Matrix]) -> Result<()> {
        let n = self.num_objects();
        for v in 0..n {
            let top = self.block_dim(v, v) - rad[v * n + v].cols();
            if top != 1 {
                return Err(Error::NotBasic(format!(
                    "top of the endomorphisms at {} has dimension {top}",
                    self.objects[v]
                )));
            }
        }
        Ok(())
    }

    /// The Gabriel quiver: `dim e_t (rad / rad^2) e_s` arrows from `s` to `t`.
    pub fn ext_quiver(&self) -> Result<Quiver> {
        let rad = self.radical_blocks();
        self.check_basic(&rad)?;
        let rad2 = self.radical_squared_blocks(&rad);
        let n = self.num_objects();
        let labels: Vec<&str> = self.objects.iter().map(String::as_str).collect();
        let mut q = Quiver::with_vertices(&labels);
        for s in 0..n {
            for t in 0..n {
                let k = rad[s * n + t].cols() - rad2[s * n + t].cols();
                for c in 0..k {
                    q.add_arrow_idx(&format!("{}->{}#{}", self.objects[s], self.objects[t], c), s, t)?;
                }
            }
        }
        Ok(q)
    }

    /// Evaluates a path of the given quiver under an arrow assignment.
    pub fn evaluate_path(&self, assignment: &[Vec<Scalar>], arrows: &[usize]) -> Vec<Scalar> {
        let mut acc: Option<Vec<Scalar>> = None;
        for &k in arrows {
            acc = Some(match acc {
                None => assignment[k].clone(),
                Some(x) => self.mul(&assignment[k], &x),
            });
        }
        acc.expect("nonempty path")
    }

    /// The element `sum x_b b` as a printable combination.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let parts: Vec<String> =
            x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("{c}*[{}]", self.labels[i])).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Checks relations of a presentation inside `a`.
///
/// `assignment[k]` is the element assigned to arrow `k` of `q`; quiver vertices are matched with
/// algebra objects by label. Every assigned element must lie in the radical, in the block given by
/// its arrow, and their residues must span `rad / rad^2`. Returns whether every relation vanishes.
pub fn verify_relations(a: &StructureAlgebra, q: &Quiver, assignment: &[Vec<Scalar>], rels: &[Relation]) -> Result<bool> {
    if assignment.len() != q.num_arrows() {
        return Err(Error::BadAssignment(format!("{} elements for {} arrows", assignment.len(), q.num_arrows())));
    }
    let obj: Vec<usize> = q
        .vertices()
        .iter()
        .map(|v| a.object_index(v).ok_or_else(|| Error::BadAssignment(format!("vertex {v} is not an object"))))
        .collect::<Result<_>>()?;
    let n = a.num_objects();
    let rad = a.radical_blocks();
    let rad2 = a.radical_squared_blocks(&rad);
    let mut per_block: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n * n];
    for (k, x) in assignment.iter().enumerate() {
        let arrow = q.arrow(k);
        let (s, t) = (obj[arrow.source], obj[arrow.target]);
        if x.len() != a.dim() {
            return Err(Error::BadAssignment(format!("element for {} has wrong length", arrow.label)));
        }
        if x.iter().enumerate().any(|(b, c)| !c.is_zero() && a.grading(b) != (s, t)) {
            return Err(Error::BadAssignment(format!("element for {} is not in the arrow's block", arrow.label)));
        }
        let coords: Vec<Scalar> = a.block(s, t).iter().map(|&b| x[b].clone()).collect();
        let r = &rad[s * n + t];
        if Matrix::hstack(&[r, &Matrix::column_vector(&coords)]).rank() != r.cols() {
            return Err(Error::BadAssignment(format!("element for {} is not radical", arrow.label)));
        }
        per_block[s * n + t].push(coords);
    }
    for s in 0..n {
        for t in 0..n {
            let i = s * n + t;
            let assigned = Matrix::from_columns(&per_block[i], a.block_dim(s, t));
            if Matrix::hstack(&[&rad2[i], &assigned]).rank() != rad[i].cols() {
                return Err(Error::BadAssignment(format!(
                    "assigned elements do not span rad/rad^2 from {} to {}",
                    a.objects()[s],
                    a.objects()[t]
                )));
            }
        }
    }
    for rel in rels {
        let mut total = vec![Scalar::zero(); a.dim()];
        for (c, p) in &rel.terms {
            if p.is_trivial() {
                return Err(Error::NotAdmissible("trivial path in relation".into()));
            }
            let v = a.evaluate_path(assignment, &p.arrows);
            for (t, x) in total.iter_mut().zip(v) {
                *t += c * &x;
            }
        }
        if total.iter().any(|c| !c.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}
