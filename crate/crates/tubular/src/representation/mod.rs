//! Finite-dimensional representations: hom spaces, endomorphism algebras, indecomposability,
//! indecomposable projectives and injectives, duality and the Auslander-Reiten translate.

mod ar;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linear::{complement_standard, Matrix, Scalar};
use crate::quiver_algebra::{BoundQuiverAlgebra, StructureAlgebra};

pub use ar::{ar_translate, ar_translate_inverse, projective_cover, ProjectiveCover};

/// One matrix per object: `f[v]` maps `M(v)` to `N(v)`.
pub type Morphism = Vec<Matrix>;

const ISO_SEED: u64 = 0x7ab1_e5ee_d000_0001;

/// A module over a [`StructureAlgebra`], given by one matrix per generator.
///
/// For a generator `g` from `s` to `t` the matrix has shape `dims[t] x dims[s]`; the action of
/// any basis element is the product of generator matrices along its word.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<StructureAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Indecomposability {
    Indecomposable,
    Decomposable,
    /// Endomorphism ring has no nontrivial idempotent found but its top is bigger than the field.
    IndecomposableNonSplit,
}

/// JSON form: dimensions keyed by object label, matrices keyed by generator label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationSpec {
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<Scalar>>>,
}

pub fn same_algebra(a: &Arc<StructureAlgebra>, b: &Arc<StructureAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    pub fn new(algebra: Arc<StructureAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let m = Representation::new_unchecked(algebra, dims, maps)?;
        m.check()?;
        Ok(m)
    }

    /// Shape checks only; the module axioms are not verified.
    pub fn new_unchecked(algebra: Arc<StructureAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        if dims.len() != algebra.num_objects() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions for {} objects",
                dims.len(),
                algebra.num_objects()
            )));
        }
        if maps.len() != algebra.gens().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} generators",
                maps.len(),
                algebra.gens().len()
            )));
        }
        for (k, &g) in algebra.gens().iter().enumerate() {
            let (s, t) = algebra.grading(g);
            if maps[k].shape() != (dims[t], dims[s]) {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix for {} has shape {:?}, expected {:?}",
                    algebra.labels()[g],
                    maps[k].shape(),
                    (dims[t], dims[s])
                )));
            }
        }
        Ok(Representation { algebra, dims, maps })
    }

    /// Representation of a bound quiver algebra from per-vertex dimensions and per-arrow matrices.
    pub fn from_arrows(a: &BoundQuiverAlgebra, dims: &[(&str, usize)], maps: &[(&str, Matrix)]) -> Result<Representation> {
        let mut d = vec![0; a.num_vertices()];
        for (v, n) in dims {
            d[a.vertex(v)?] = *n;
        }
        let mut m: Vec<Matrix> = a
            .quiver
            .arrows()
            .iter()
            .map(|arr| Matrix::zeros(d[arr.target], d[arr.source]))
            .collect();
        for (l, x) in maps {
            m[a.arrow(l)?] = x.clone();
        }
        Representation::new(a.structure.clone(), d, m)
    }

    pub fn zero(algebra: Arc<StructureAlgebra>) -> Representation {
        let dims = vec![0; algebra.num_objects()];
        let maps = algebra.gens().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { algebra, dims, maps }
    }

    pub fn simple(algebra: Arc<StructureAlgebra>, v: usize) -> Representation {
        let mut dims = vec![0; algebra.num_objects()];
        dims[v] = 1;
        let maps = algebra
            .gens()
            .iter()
            .map(|&g| {
                let (s, t) = algebra.grading(g);
                Matrix::zeros(dims[t], dims[s])
            })
            .collect();
        Representation { algebra, dims, maps }
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn generator_map(&self, k: usize) -> &Matrix {
        &self.maps[k]
    }

    /// The matrix by which basis element `b` acts.
    pub fn action(&self, b: usize) -> Matrix {
        let (s, _) = self.algebra.grading(b);
        let mut acc = Matrix::identity(self.dims[s]);
        for &k in self.algebra.word(b) {
            acc = self.maps[k].mul(&acc);
        }
        acc
    }

    /// Action of a homogeneous element of `e_t A e_s` given in full-basis coordinates.
    pub fn action_of(&self, x: &[Scalar], s: usize, t: usize) -> Matrix {
        let mut acc = Matrix::zeros(self.dims[t], self.dims[s]);
        for &b in self.algebra.block(s, t) {
            if !x[b].is_zero() {
                acc.add_scaled(&x[b], &self.action(b));
            }
        }
        acc
    }

    /// Verifies `g . (b . m) = (g b) . m` for every generator `g` and basis element `b`, which by
    /// induction on word length makes the action well defined.
    pub fn check(&self) -> Result<()> {
        let a = &self.algebra;
        let actions: Vec<Matrix> = (0..a.dim()).map(|b| self.action(b)).collect();
        for (k, &g) in a.gens().iter().enumerate() {
            let (s, t) = a.grading(g);
            for b in 0..a.dim() {
                if a.target(b) != s {
                    continue;
                }
                let lhs = self.maps[k].mul(&actions[b]);
                let mut rhs = Matrix::zeros(self.dims[t], self.dims[a.source(b)]);
                for (c, x) in a.product(g, b) {
                    rhs.add_scaled(x, &actions[*c]);
                }
                if lhs != rhs {
                    return Err(Error::InvalidRepresentation(format!(
                        "relation violated: {} after {}",
                        a.labels()[g],
                        a.labels()[b]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(x.rows() + y.rows(), x.cols() + y.cols());
                m.set_block(0, 0, x);
                m.set_block(x.rows(), x.cols(), y);
                m
            })
            .collect();
        Ok(Representation { algebra: self.algebra.clone(), dims, maps })
    }

    pub fn direct_sum_all(algebra: Arc<StructureAlgebra>, parts: &[Representation]) -> Result<Representation> {
        let mut acc = Representation::zero(algebra);
        for p in parts {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// The same module viewed over a structurally equal algebra.
    pub fn rebase(&self, algebra: Arc<StructureAlgebra>) -> Result<Representation> {
        if !same_algebra(&self.algebra, &algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation { algebra, dims: self.dims.clone(), maps: self.maps.clone() })
    }

    /// The standard dual, a module over the opposite algebra.
    pub fn dual(&self) -> Representation {
        self.dual_over(Arc::new(self.algebra.opposite())).expect("opposite algebra matches")
    }

    pub fn dual_over(&self, opposite: Arc<StructureAlgebra>) -> Result<Representation> {
        if *opposite != self.algebra.opposite() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation {
            algebra: opposite,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        })
    }

    /// Indecomposable projective `A(v, -)`: at `w` the basis elements from `v` to `w`, acted on by
    /// left multiplication.
    pub fn projective(algebra: Arc<StructureAlgebra>, v: usize) -> Representation {
        let a = &algebra;
        let n = a.num_objects();
        let dims: Vec<usize> = (0..n).map(|w| a.block_dim(v, w)).collect();
        let maps = a
            .gens()
            .iter()
            .map(|&g| {
                let (s, t) = a.grading(g);
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for (col, &b) in a.block(v, s).iter().enumerate() {
                    for (c, x) in a.product(g, b) {
                        m.set(a.block_position(*c), col, x.clone());
                    }
                }
                m
            })
            .collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    /// Indecomposable injective `D A(-, v)`: at `w` the dual of the basis elements from `w` to `v`.
    pub fn injective(algebra: Arc<StructureAlgebra>, v: usize) -> Representation {
        let a = &algebra;
        let n = a.num_objects();
        let dims: Vec<usize> = (0..n).map(|w| a.block_dim(w, v)).collect();
        let maps = a
            .gens()
            .iter()
            .map(|&g| {
                let (s, t) = a.grading(g);
                // row b' in block(t, v), column b in block(s, v): coefficient of b in b' g
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for (row, &bp) in a.block(t, v).iter().enumerate() {
                    for (c, x) in a.product(bp, g) {
                        m.set(row, a.block_position(*c), x.clone());
                    }
                }
                m
            })
            .collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    pub fn is_projective_indecomposable_at(&self, v: usize) -> Result<bool> {
        is_isomorphic(self, &Representation::projective(self.algebra.clone(), v))
    }

    /// Sum of the images of all non-identity basis elements, per object (columns span).
    pub fn radical_subspaces(&self) -> Vec<Matrix> {
        let a = &self.algebra;
        (0..a.num_objects())
            .map(|w| {
                let mut blocks = Vec::new();
                for b in 0..a.dim() {
                    if a.target(b) == w && !a.is_idempotent_basis(b) && self.dims[a.source(b)] > 0 {
                        blocks.push(self.action(b));
                    }
                }
                let refs: Vec<&Matrix> = blocks.iter().collect();
                if refs.is_empty() {
                    Matrix::zeros(self.dims[w], 0)
                } else {
                    Matrix::hstack(&refs).column_space()
                }
            })
            .collect()
    }

    /// Per object, vectors whose residues form a basis of the top `M / rad M`.
    pub fn top_lifts(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.radical_subspaces()
            .iter()
            .enumerate()
            .map(|(w, rad)| {
                complement_standard(rad)
                    .into_iter()
                    .map(|i| {
                        let mut e = vec![Scalar::zero(); self.dims[w]];
                        e[i] = Scalar::one();
                        e
                    })
                    .collect()
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.top_lifts().iter().map(Vec::len).collect()
    }

    /// Submodule spanned per object by the given independent columns; fails if not closed.
    pub fn submodule(&self, bases: &[Matrix]) -> Result<Representation> {
        let a = &self.algebra;
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (k, &g) in a.gens().iter().enumerate() {
            let (s, t) = a.grading(g);
            let image = self.maps[k].mul(&bases[s]);
            let x = bases[t]
                .solve_matrix(&image)
                .map_err(|_| Error::InvalidRepresentation("subspaces are not a submodule".into()))?;
            maps.push(x);
        }
        Ok(Representation { algebra: self.algebra.clone(), dims, maps })
    }

    pub fn to_spec(&self) -> RepresentationSpec {
        let a = &self.algebra;
        RepresentationSpec {
            dims: a.objects().iter().cloned().zip(self.dims.iter().copied()).collect(),
            maps: a.gens().iter().enumerate().map(|(k, &g)| (a.labels()[g].clone(), self.maps[k].to_rows())).collect(),
        }
    }

    pub fn from_spec(algebra: Arc<StructureAlgebra>, spec: &RepresentationSpec) -> Result<Representation> {
        let mut dims = vec![0; algebra.num_objects()];
        for (l, n) in &spec.dims {
            let v = algebra.object_index(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            dims[v] = *n;
        }
        let mut maps = Vec::new();
        for &g in algebra.gens() {
            let (s, t) = algebra.grading(g);
            let label = &algebra.labels()[g];
            let m = match spec.maps.get(label) {
                Some(rows) if dims[t] > 0 => Matrix::from_rows_with_width(rows.clone(), dims[s])?,
                _ => Matrix::zeros(dims[t], dims[s]),
            };
            maps.push(m);
        }
        for l in spec.maps.keys() {
            if !algebra.gens().iter().any(|&g| &algebra.labels()[g] == l) {
                return Err(Error::UnknownLabel(l.clone()));
            }
        }
        Representation::new(algebra, dims, maps)
    }
}

/// Basis of `Hom(M, N)`: all families `f` with `f_t M(g) = N(g) f_s` for every generator `g`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let a = &m.algebra;
    let objs = a.num_objects();
    let mut offset = vec![0; objs + 1];
    for v in 0..objs {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[objs];
    let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (k, &g) in a.gens().iter().enumerate() {
        let (s, t) = a.grading(g);
        let mg = &m.maps[k];
        let ng = &n.maps[k];
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut eq = Vec::new();
                for kk in 0..m.dims[t] {
                    let x = mg.get(kk, c);
                    if !x.is_zero() {
                        eq.push((offset[t] + r * m.dims[t] + kk, x.clone()));
                    }
                }
                for kk in 0..n.dims[s] {
                    let x = ng.get(r, kk);
                    if !x.is_zero() {
                        eq.push((offset[s] + kk * m.dims[s] + c, -x));
                    }
                }
                if !eq.is_empty() {
                    rows.push(eq);
                }
            }
        }
    }
    let mut sys = Matrix::zeros(rows.len(), unknowns);
    for (i, eq) in rows.iter().enumerate() {
        for (j, x) in eq {
            sys.add_to(i, *j, x);
        }
    }
    let ker = sys.kernel();
    Ok((0..ker.cols())
        .map(|c| {
            (0..objs)
                .map(|v| {
                    let mut f = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for cc in 0..m.dims[v] {
                            f.set(r, cc, ker.get(offset[v] + r * m.dims[v] + cc, c).clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

pub fn is_morphism(f: &Morphism, m: &Representation, n: &Representation) -> bool {
    let a = &m.algebra;
    a.gens().iter().enumerate().all(|(k, &g)| {
        let (s, t) = a.grading(g);
        f[t].mul(&m.maps[k]) == n.maps[k].mul(&f[s])
    })
}

pub fn compose(f: &Morphism, g: &Morphism) -> Morphism {
    // f after g
    f.iter().zip(g).map(|(x, y)| x.mul(y)).collect()
}

pub fn identity_morphism(m: &Representation) -> Morphism {
    m.dims.iter().map(|&d| Matrix::identity(d)).collect()
}

pub fn combine(coeffs: &[Scalar], basis: &[Morphism], m: &Representation, n: &Representation) -> Morphism {
    let mut out: Morphism = (0..m.dims.len()).map(|v| Matrix::zeros(n.dims[v], m.dims[v])).collect();
    for (c, f) in coeffs.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(f) {
            o.add_scaled(c, x);
        }
    }
    out
}

pub fn is_invertible_morphism(f: &Morphism) -> bool {
    f.iter().all(Matrix::is_invertible)
}

fn flatten(f: &Morphism) -> Vec<Scalar> {
    f.iter().flat_map(|m| m.to_rows().into_iter().flatten()).collect()
}

/// `End(M)` as a one-object algebra whose basis contains the identity.
pub fn end_algebra(m: &Representation) -> Result<(StructureAlgebra, Vec<Morphism>)> {
    let mut basis = hom_space(m, m)?;
    let id = identity_morphism(m);
    let coords = Matrix::from_columns(&basis.iter().map(flatten).collect::<Vec<_>>(), flatten(&id).len());
    let sol = coords.solve(&flatten(&id))?;
    let pivot = sol.particular.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroModule)?;
    basis[pivot] = id;
    let r = basis.len();
    let flat = Matrix::from_columns(&basis.iter().map(flatten).collect::<Vec<_>>(), flatten(&basis[0]).len());
    let mut table = vec![Vec::new(); r * r];
    for i in 0..r {
        for j in 0..r {
            let p = compose(&basis[i], &basis[j]);
            let x = flat.solve(&flatten(&p))?.particular;
            table[i * r + j] = x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        }
    }
    let alg = StructureAlgebra::new(
        (0..r).map(|i| if i == pivot { "id".to_string() } else { format!("f{i}") }).collect(),
        vec!["M".into()],
        vec![(0, 0); r],
        vec![pivot],
        |i, j| table[i * r + j].clone(),
    );
    Ok((alg, basis))
}

/// Characteristic polynomial coefficients `c_0 .. c_n` (monic, `c_n = 1`) by Faddeev-LeVerrier.
fn char_poly(a: &Matrix) -> Vec<Scalar> {
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&mk);
        for i in 0..n {
            next.add_to(i, i, &coeffs[n - k + 1]);
        }
        let am = a.mul(&next);
        let tr: Scalar = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[n - k] = -(tr / Scalar::from_int(k as i64));
        mk = next;
    }
    coeffs
}

/// Rational roots of a polynomial, by the rational root test on an integral multiple.
fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, ToPrimitive};
    let mut c: Vec<Scalar> = coeffs.to_vec();
    let mut roots = Vec::new();
    while c.len() > 1 && c[0].is_zero() {
        roots.push(Scalar::zero());
        c.remove(0);
    }
    if c.len() <= 1 {
        return roots;
    }
    let mut lcm = BigInt::from(1);
    for x in &c {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let divisors = |v: &BigInt| -> Option<Vec<i64>> {
        let v = v.abs().to_i64()?;
        if v > 1_000_000 {
            return None;
        }
        Some((1..=v).filter(|d| v % d == 0).collect())
    };
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let r = Scalar::new(sign * p, *q);
                if roots.contains(&r) {
                    continue;
                }
                let mut acc = Scalar::zero();
                for x in c.iter().rev() {
                    acc = acc * &r + x;
                }
                if acc.is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn total_matrix(f: &Morphism) -> Matrix {
    let rows: usize = f.iter().map(Matrix::rows).sum();
    let cols: usize = f.iter().map(Matrix::cols).sum();
    let mut out = Matrix::zeros(rows, cols);
    let (mut r, mut c) = (0, 0);
    for x in f {
        out.set_block(r, c, x);
        r += x.rows();
        c += x.cols();
    }
    out
}

fn is_nilpotent_matrix(m: &Matrix) -> bool {
    let n = m.rows();
    let mut p = m.clone();
    let mut k = 1;
    while k < n.max(1) {
        p = p.mul(&p);
        k *= 2;
    }
    p.is_zero()
}

/// Three-valued indecomposability test based on the endomorphism algebra.
pub fn indecomposability(m: &Representation) -> Result<Indecomposability> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let (end, basis) = end_algebra(m)?;
    let rad = end.radical();
    if end.dim() - rad.cols() == 1 {
        return Ok(Indecomposability::Indecomposable);
    }
    // End(M) is not local iff some endomorphism is neither nilpotent nor invertible.
    let mut candidates: Vec<Morphism> = basis.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    for _ in 0..4 {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect();
        candidates.push(combine(&coeffs, &basis, m, m));
    }
    for f in &candidates {
        let t = total_matrix(f);
        for lambda in rational_roots(&char_poly(&t)) {
            let mut shifted = t.clone();
            for i in 0..t.rows() {
                shifted.add_to(i, i, &-lambda.clone());
            }
            if !is_nilpotent_matrix(&shifted) {
                return Ok(Indecomposability::Decomposable);
            }
        }
    }
    Ok(Indecomposability::IndecomposableNonSplit)
}

/// `true` for indecomposable modules. A non-split endomorphism top is reported on stderr.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    match indecomposability(m)? {
        Indecomposability::Indecomposable => Ok(true),
        Indecomposability::Decomposable => Ok(false),
        Indecomposability::IndecomposableNonSplit => {
            eprintln!("warning: endomorphism ring has a non-split top; treating module as indecomposable");
            Ok(true)
        }
    }
}

/// An isomorphism `M -> N` if one is found among seeded random combinations of a hom basis.
pub fn find_isomorphism(m: &Representation, n: &Representation) -> Result<Option<Morphism>> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims != n.dims {
        return Ok(None);
    }
    let basis = hom_space(m, n)?;
    if m.is_zero() {
        return Ok(Some(combine(&[], &[], m, n)));
    }
    if basis.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    for _ in 0..24 {
        let coeffs: Vec<Scalar> = (0..basis.len())
            .map(|_| Scalar::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
            .collect();
        let f = combine(&coeffs, &basis, m, n);
        if is_invertible_morphism(&f) {
            return Ok(Some(f));
        }
    }
    for k in 0..basis.len() {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|i| Scalar::from_int(((i + k) % basis.len() + 1) as i64)).collect();
        let f = combine(&coeffs, &basis, m, n);
        if is_invertible_morphism(&f) {
            return Ok(Some(f));
        }
        if is_invertible_morphism(&basis[k]) {
            return Ok(Some(basis[k].clone()));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver_algebra::{build_algebra, Quiver, DEFAULT_CAP};

    pub(crate) fn kronecker() -> BoundQuiverAlgebra {
        let mut q = Quiver::with_vertices(&["1", "2"]);
        q.add_arrow("a", "2", "1").unwrap();
        q.add_arrow("b", "2", "1").unwrap();
        build_algebra(&q, &[], DEFAULT_CAP).unwrap()
    }

    pub(crate) fn regular(a: &BoundQuiverAlgebra, lambda: i64) -> Representation {
        Representation::from_arrows(
            a,
            &[("1", 1), ("2", 1)],
            &[("a", Matrix::from_i64(&[&[1]])), ("b", Matrix::from_i64(&[&[lambda]]))],
        )
        .unwrap()
    }

    #[test]
    fn projective_dimension_vectors() {
        let a = kronecker();
        assert_eq!(Representation::projective(a.structure.clone(), 0).dims(), &[1, 0]);
        assert_eq!(Representation::projective(a.structure.clone(), 1).dims(), &[2, 1]);
        assert_eq!(Representation::injective(a.structure.clone(), 0).dims(), &[1, 2]);
        for v in 0..2 {
            Representation::projective(a.structure.clone(), v).check().unwrap();
            Representation::injective(a.structure.clone(), v).check().unwrap();
        }
    }

    #[test]
    fn yoneda_dimension() {
        let a = kronecker();
        let m = regular(&a, 3).direct_sum(&Representation::simple(a.structure.clone(), 1)).unwrap();
        for v in 0..2 {
            let p = Representation::projective(a.structure.clone(), v);
            assert_eq!(hom_dim(&p, &m).unwrap(), m.dim_at(v));
        }
    }

    #[test]
    fn regular_modules_are_orthogonal() {
        let a = kronecker();
        // oracle: f1 * 1 = 1 * f2 and f1 * lambda = mu * f2 forces f = 0 unless lambda = mu
        assert_eq!(hom_dim(&regular(&a, 2), &regular(&a, 5)).unwrap(), 0);
        assert_eq!(hom_dim(&regular(&a, 2), &regular(&a, 2)).unwrap(), 1);
    }

    #[test]
    fn simples_are_orthogonal_and_indecomposable() {
        let a = kronecker();
        let s0 = Representation::simple(a.structure.clone(), 0);
        let s1 = Representation::simple(a.structure.clone(), 1);
        assert_eq!(hom_dim(&s0, &s1).unwrap(), 0);
        assert!(is_indecomposable(&s0).unwrap());
        assert!(is_indecomposable(&regular(&a, 7)).unwrap());
        assert!(!is_indecomposable(&s0.direct_sum(&s0).unwrap()).unwrap());
        assert!(!is_indecomposable(&regular(&a, 1).direct_sum(&regular(&a, 2)).unwrap()).unwrap());
        assert_eq!(is_indecomposable(&Representation::zero(a.structure.clone())), Err(Error::ZeroModule));
    }

    #[test]
    fn invalid_maps_rejected() {
        let mut q = Quiver::with_vertices(&["1", "2", "3"]);
        q.add_arrow("a", "1", "2").unwrap();
        q.add_arrow("b", "2", "3").unwrap();
        let r = crate::quiver_algebra::Relation::from_ints(&q, &[(1, "b a")]).unwrap();
        let a = build_algebra(&q, &[r], DEFAULT_CAP).unwrap();
        let one = Matrix::from_i64(&[&[1]]);
        let bad = Representation::from_arrows(&a, &[("1", 1), ("2", 1), ("3", 1)], &[("a", one.clone()), ("b", one)]);
        assert!(matches!(bad, Err(Error::InvalidRepresentation(_))));
    }

    #[test]
    fn duality() {
        let a = kronecker();
        let m = regular(&a, 4);
        let d = m.dual();
        assert_eq!(d.dims(), m.dims());
        d.check().unwrap();
        let dd = d.dual().rebase(a.structure.clone()).unwrap();
        assert!(is_isomorphic(&dd, &m).unwrap());
        let s = Representation::simple(a.structure.clone(), 1);
        assert!(is_isomorphic(&s.dual(), &Representation::simple(d.algebra().clone(), 1)).unwrap());
        let p = Representation::projective(a.structure.clone(), 1).dual();
        let i = Representation::injective(p.algebra().clone(), 1);
        assert!(is_isomorphic(&p, &i).unwrap());
    }

    #[test]
    fn spec_roundtrip() {
        let a = kronecker();
        let m = regular(&a, 3);
        let back = Representation::from_spec(a.structure.clone(), &m.to_spec()).unwrap();
        assert_eq!(back.maps(), m.maps());
    }

    #[test]
    fn char_poly_and_roots() {
        let m = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        let c = char_poly(&m);
        assert_eq!(c, vec![Scalar::from_int(6), Scalar::from_int(-5), Scalar::one()]);
        let mut r = rational_roots(&c);
        r.sort();
        assert_eq!(r, vec![Scalar::from_int(2), Scalar::from_int(3)]);
    }
}
