//! Covering functors between locally bounded categories, given on finite windows, with
//! morphism lifts, push-down and pull-up of modules, and the Galois covering of an orbit algebra
//! by the repetitive category.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::constructions::{orbit_algebra, repetitive_window, RepetitiveWindow};
use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Scalar};
use crate::quiver_algebra::StructureAlgebra;
use crate::representation::{Morphism, Representation};

/// A linear functor `F` from a finite window of the source category to the target: an object map
/// and the image of every source basis element, in target coordinates.
#[derive(Clone, Debug)]
pub struct CoveringMap {
    pub source: Arc<StructureAlgebra>,
    pub target: Arc<StructureAlgebra>,
    objects: Vec<usize>,
    images: Vec<Vec<Scalar>>,
}

/// The components `β^{a1}_{(a2)}` (or `β^{(a1)}_{a2}`) of a lifted morphism, one per fiber object,
/// as source elements.
pub type Lift = Vec<(usize, Vec<Scalar>)>;

impl CoveringMap {
    pub fn new(
        source: Arc<StructureAlgebra>,
        target: Arc<StructureAlgebra>,
        objects: Vec<usize>,
        images: Vec<Vec<Scalar>>,
    ) -> Result<CoveringMap> {
        if objects.len() != source.num_objects() || images.len() != source.dim() {
            return Err(Error::BadInput("object or basis map has the wrong length".into()));
        }
        if objects.iter().any(|&o| o >= target.num_objects()) {
            return Err(Error::BadInput("object map leaves the target".into()));
        }
        for (b, img) in images.iter().enumerate() {
            if img.len() != target.dim() {
                return Err(Error::BadInput("image of the wrong length".into()));
            }
            let (s, t) = source.grading(b);
            let allowed: BTreeSet<usize> = target.block(objects[s], objects[t]).iter().copied().collect();
            if img.iter().enumerate().any(|(k, x)| !x.is_zero() && !allowed.contains(&k)) {
                return Err(Error::BadInput(format!("image of {} is not homogeneous", source.labels()[b])));
            }
        }
        Ok(CoveringMap { source, target, objects, images })
    }

    pub fn object(&self, a: usize) -> usize {
        self.objects[a]
    }

    pub fn image(&self, b: usize) -> &[Scalar] {
        &self.images[b]
    }

    /// Image of a source element given in full coordinates.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.target.dim()];
        for (b, c) in x.iter().enumerate() {
            if !c.is_zero() {
                for (o, y) in out.iter_mut().zip(&self.images[b]) {
                    *o += &(c * y);
                }
            }
        }
        out
    }

    /// Source objects over a target object, in index order.
    pub fn fiber(&self, b: usize) -> Vec<usize> {
        (0..self.objects.len()).filter(|&a| self.objects[a] == b).collect()
    }

    /// Checks that identities go to identities and products to products.
    pub fn check_functor(&self) -> Result<()> {
        let (src, tgt) = (&self.source, &self.target);
        for v in 0..src.num_objects() {
            if self.images[src.idempotent(v)] != tgt.basis_vector(tgt.idempotent(self.objects[v])) {
                return Err(Error::NotCovering(format!("identity of {} is not preserved", src.objects()[v])));
            }
        }
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                if src.target(j) != src.source(i) {
                    continue;
                }
                let lhs = self.apply(&sparse_dense(src.product(i, j), src.dim()));
                let rhs = tgt.mul(&self.images[i], &self.images[j]);
                if lhs != rhs {
                    return Err(Error::NotCovering(format!(
                        "product {} {} is not preserved",
                        src.labels()[i],
                        src.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Columns: images of the bases of `A(a1, a2)` for `a2` over `b2`, in block coordinates of
    /// `B(F a1, b2)`. Also returns the column ranges.
    fn domain_fixed_matrix(&self, a1: usize, b2: usize) -> (Matrix, Vec<(usize, Vec<usize>)>) {
        let rows = self.target.block(self.objects[a1], b2);
        let mut cols = Vec::new();
        let mut parts = Vec::new();
        for a2 in self.fiber(b2) {
            let block = self.source.block(a1, a2).to_vec();
            cols.extend(block.iter().map(|&b| rows.iter().map(|&r| self.images[b][r].clone()).collect::<Vec<_>>()));
            parts.push((a2, block));
        }
        (Matrix::from_columns(&cols, rows.len()), parts)
    }

    fn codomain_fixed_matrix(&self, b1: usize, a2: usize) -> (Matrix, Vec<(usize, Vec<usize>)>) {
        let rows = self.target.block(b1, self.objects[a2]);
        let mut cols = Vec::new();
        let mut parts = Vec::new();
        for a1 in self.fiber(b1) {
            let block = self.source.block(a1, a2).to_vec();
            cols.extend(block.iter().map(|&b| rows.iter().map(|&r| self.images[b][r].clone()).collect::<Vec<_>>()));
            parts.push((a1, block));
        }
        (Matrix::from_columns(&cols, rows.len()), parts)
    }

    /// The covering property: `⊕_{F a2 = b2} A(a1, a2) → B(F a1, b2)` is bijective for every `a1` in
    /// `domain_fixed`, and `⊕_{F a1 = b1} A(a1, a2) → B(b1, F a2)` for every `a2` in `codomain_fixed`.
    pub fn check_covering(&self, domain_fixed: &[usize], codomain_fixed: &[usize]) -> Result<()> {
        for &a1 in domain_fixed {
            for b2 in 0..self.target.num_objects() {
                let (m, _) = self.domain_fixed_matrix(a1, b2);
                if !(m.is_square() && (m.rows() == 0 || m.is_invertible())) {
                    return Err(Error::NotCovering(format!(
                        "morphisms out of {} to the fiber of {} are not bijective",
                        self.source.objects()[a1],
                        self.target.objects()[b2]
                    )));
                }
            }
        }
        for &a2 in codomain_fixed {
            for b1 in 0..self.target.num_objects() {
                let (m, _) = self.codomain_fixed_matrix(b1, a2);
                if !(m.is_square() && (m.rows() == 0 || m.is_invertible())) {
                    return Err(Error::NotCovering(format!(
                        "morphisms from the fiber of {} into {} are not bijective",
                        self.target.objects()[b1],
                        self.source.objects()[a2]
                    )));
                }
            }
        }
        Ok(())
    }

    fn homogeneous_block(&self, beta: &[Scalar]) -> Result<Option<(usize, usize)>> {
        let mut found = None;
        for (k, x) in beta.iter().enumerate() {
            if !x.is_zero() {
                let g = self.target.grading(k);
                if found.is_some_and(|f| f != g) {
                    return Err(Error::BadInput("morphism is not homogeneous".into()));
                }
                found = Some(g);
            }
        }
        Ok(found)
    }

    fn solve_lift(&self, m: &Matrix, parts: Vec<(usize, Vec<usize>)>, rows: &[usize], beta: &[Scalar]) -> Result<Lift> {
        let rhs: Vec<Scalar> = rows.iter().map(|&r| beta[r].clone()).collect();
        let inv = m.inverse().ok_or_else(|| Error::NotCovering("lift is not unique".into()))?;
        let coords = inv.mul_vec(&rhs);
        let mut out = Vec::new();
        let mut k = 0;
        for (obj, block) in parts {
            let mut x = vec![Scalar::zero(); self.source.dim()];
            for b in block {
                x[b] = coords[k].clone();
                k += 1;
            }
            out.push((obj, x));
        }
        Ok(out)
    }

    /// The unique family `β^{a1}_{(a2)}` with `Σ F(β^{a1}_{(a2)}) = β`, for `β` out of `F a1`.
    pub fn lift_domain_fixed(&self, beta: &[Scalar], a1: usize) -> Result<Lift> {
        let Some((b1, b2)) = self.homogeneous_block(beta)? else { return Ok(Vec::new()) };
        if b1 != self.objects[a1] {
            return Err(Error::BadInput("morphism does not start at the image of the object".into()));
        }
        let (m, parts) = self.domain_fixed_matrix(a1, b2);
        let rows = self.target.block(b1, b2).to_vec();
        self.solve_lift(&m, parts, &rows, beta)
    }

    /// The unique family `β^{(a1)}_{a2}` with `Σ F(β^{(a1)}_{a2}) = β`, for `β` into `F a2`.
    pub fn lift_codomain_fixed(&self, beta: &[Scalar], a2: usize) -> Result<Lift> {
        let Some((b1, b2)) = self.homogeneous_block(beta)? else { return Ok(Vec::new()) };
        if b2 != self.objects[a2] {
            return Err(Error::BadInput("morphism does not end at the image of the object".into()));
        }
        let (m, parts) = self.codomain_fixed_matrix(b1, a2);
        let rows = self.target.block(b1, b2).to_vec();
        self.solve_lift(&m, parts, &rows, beta)
    }

    fn fiber_offsets(&self, dims: &[usize], b: usize) -> (Vec<(usize, usize)>, usize) {
        let mut out = Vec::new();
        let mut total = 0;
        for a in self.fiber(b) {
            out.push((a, total));
            total += dims[a];
        }
        (out, total)
    }

    /// Push-down `(F_λ M)(b) = ⊕_{F a = b} M(a)`. Every object supporting `M` must be among
    /// `complete`, the objects whose outgoing lifts stay inside the window.
    pub fn push_down(&self, m: &Representation, complete: &[usize]) -> Result<Representation> {
        if m.dims().len() != self.source.num_objects() {
            return Err(Error::AlgebraMismatch);
        }
        if (0..m.dims().len()).any(|a| m.dim_at(a) > 0 && !complete.contains(&a)) {
            return Err(Error::NotFinitelySupported);
        }
        let tgt = &self.target;
        let dims: Vec<usize> = (0..tgt.num_objects()).map(|b| self.fiber_offsets(m.dims(), b).1).collect();
        let mut maps = Vec::new();
        for &g in tgt.gens() {
            let (b1, b2) = tgt.grading(g);
            let (from, _) = self.fiber_offsets(m.dims(), b1);
            let (to, _) = self.fiber_offsets(m.dims(), b2);
            let mut mat = Matrix::zeros(dims[b2], dims[b1]);
            let beta = tgt.basis_vector(g);
            for &(a1, c0) in &from {
                if m.dim_at(a1) == 0 {
                    continue;
                }
                for (a2, x) in self.lift_domain_fixed(&beta, a1)? {
                    let r0 = to.iter().find(|(a, _)| *a == a2).map(|(_, o)| *o).expect("fiber object");
                    let act = m.action_of(&x, a1, a2);
                    for r in 0..act.rows() {
                        for c in 0..act.cols() {
                            mat.add_to(r0 + r, c0 + c, act.get(r, c));
                        }
                    }
                }
            }
            maps.push(mat);
        }
        Representation::new(tgt.clone(), dims, maps)
    }

    /// Push-down of a morphism: block diagonal over each fiber.
    pub fn push_down_morphism(&self, f: &Morphism, m: &Representation, n: &Representation) -> Morphism {
        (0..self.target.num_objects())
            .map(|b| {
                let (fm, tm) = self.fiber_offsets(m.dims(), b);
                let (fnn, tn) = self.fiber_offsets(n.dims(), b);
                let mut out = Matrix::zeros(tn, tm);
                for ((a, cm), (_, cn)) in fm.iter().zip(&fnn) {
                    for r in 0..f[*a].rows() {
                        for c in 0..f[*a].cols() {
                            out.set(cn + r, cm + c, f[*a].get(r, c).clone());
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// Pull-up `X ∘ F`, restricted to `objects` (zero elsewhere). The restriction is a module
    /// when `objects` is convex.
    pub fn pull_up(&self, x: &Representation, objects: &[usize]) -> Result<Representation> {
        if x.dims().len() != self.target.num_objects() {
            return Err(Error::AlgebraMismatch);
        }
        let src = &self.source;
        let keep = |a: usize| objects.contains(&a);
        let dims: Vec<usize> = (0..src.num_objects()).map(|a| if keep(a) { x.dim_at(self.objects[a]) } else { 0 }).collect();
        let maps = src
            .gens()
            .iter()
            .map(|&g| {
                let (s, t) = src.grading(g);
                if keep(s) && keep(t) {
                    x.action_of(&self.images[g], self.objects[s], self.objects[t])
                } else {
                    Matrix::zeros(dims[t], dims[s])
                }
            })
            .collect();
        Representation::new(src.clone(), dims, maps)
    }

    /// Unit `M → (F_λ M) ∘ F` restricted to `objects`: `M(a)` included as the summand at `a`.
    pub fn unit(&self, m: &Representation, objects: &[usize]) -> Morphism {
        (0..self.source.num_objects())
            .map(|a| {
                let (offsets, total) = self.fiber_offsets(m.dims(), self.objects[a]);
                let rows = if objects.contains(&a) { total } else { 0 };
                let mut out = Matrix::zeros(rows, m.dim_at(a));
                if rows > 0 {
                    let off = offsets.iter().find(|(b, _)| *b == a).map(|(_, o)| *o).expect("fiber object");
                    for k in 0..m.dim_at(a) {
                        out.set(off + k, k, Scalar::one());
                    }
                }
                out
            })
            .collect()
    }

    /// Counit `F_λ(X ∘ F) → X` on the summands over `objects`: the sum of the copies of `X(b)`.
    pub fn counit(&self, x: &Representation, objects: &[usize]) -> Morphism {
        (0..self.target.num_objects())
            .map(|b| {
                let copies = self.fiber(b).into_iter().filter(|a| objects.contains(a)).count();
                let d = x.dim_at(b);
                let mut out = Matrix::zeros(d, d * copies);
                for c in 0..copies {
                    for k in 0..d {
                        out.set(k, c * d + k, Scalar::one());
                    }
                }
                out
            })
            .collect()
    }
}

fn sparse_dense(s: &[(usize, Scalar)], d: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    for (k, x) in s {
        v[*k] += x;
    }
    v
}

/// The Galois covering of the orbit algebra of period `s` by the repetitive window `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct GaloisCovering {
    pub window: RepetitiveWindow,
    pub orbit: RepetitiveWindow,
    pub map: CoveringMap,
}

impl GaloisCovering {
    fn objects_at(&self, levels: impl Iterator<Item = i64>) -> Vec<usize> {
        let n = self.window.base.num_objects();
        levels.flat_map(|l| (0..n).filter_map(move |v| self.window.object(v, l))).collect()
    }

    /// Objects whose outgoing morphisms all stay inside the window.
    pub fn domain_complete(&self) -> Vec<usize> {
        self.objects_at(self.window.lo..self.window.hi)
    }

    /// Objects whose incoming morphisms all come from inside the window.
    pub fn codomain_complete(&self) -> Vec<usize> {
        self.objects_at(self.window.lo + 1..=self.window.hi)
    }

    pub fn objects_between(&self, lo: i64, hi: i64) -> Vec<usize> {
        self.objects_at(lo.max(self.window.lo)..=hi.min(self.window.hi))
    }
}

/// `F: R̂ → R̂/(ν^s)` on the levels `lo..=hi`: `(v, l) ↦ (v, l mod s)`, and likewise on basis
/// elements.
pub fn galois_covering(r: Arc<StructureAlgebra>, s: usize, lo: i64, hi: i64) -> Result<GaloisCovering> {
    let window = repetitive_window(r.clone(), lo, hi)?;
    let orbit = orbit_algebra(r, s)?;
    let n = window.base.num_objects();
    let period = s as i64;
    let objects: Vec<usize> = (0..window.algebra.num_objects())
        .map(|o| {
            let (v, l) = window.object_part(o);
            orbit.object(v, l.rem_euclid(period)).expect("orbit level")
        })
        .collect();
    debug_assert_eq!(objects.len(), n * window.levels());
    let images: Vec<Vec<Scalar>> = (0..window.algebra.dim())
        .map(|b| {
            let (part, l) = window.part(b);
            let idx = orbit.index(part, l.rem_euclid(period)).expect("orbit element");
            orbit.algebra.basis_vector(idx)
        })
        .collect();
    let map = CoveringMap::new(window.algebra.clone(), orbit.algebra.clone(), objects, images)?;
    Ok(GaloisCovering { window, orbit, map })
}
