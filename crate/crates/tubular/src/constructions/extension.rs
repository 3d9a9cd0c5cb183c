use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Scalar};
use crate::quiver_algebra::{build_algebra, BoundQuiverAlgebra, Path, Quiver, Relation, DEFAULT_CAP};
use crate::representation::{ar_translate, hom_space, is_indecomposable, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    Extension,
    Coextension,
}

/// Result of a one-point extension `R[X]` or coextension `[X]R`.
///
/// The new vertex is appended after the old ones and old arrows keep their indices, so old
/// vertices and arrows embed by the identity on indices.
#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub kind: ExtensionKind,
    pub algebra: BoundQuiverAlgebra,
    pub base: BoundQuiverAlgebra,
    pub module: Representation,
    /// Index of the new vertex.
    pub vertex: usize,
    /// New arrows as (arrow index, old vertex at the other end, lifted top/socle vector of the module).
    pub new_arrows: Vec<(usize, usize, Vec<Scalar>)>,
    /// For a coextension: the extension of the opposite algebra it was built from.
    opposite: Option<Box<ExtensionResult>>,
}

fn fresh_label(q: &Quiver, wanted: &str) -> String {
    let taken = |l: &str| q.vertex_index(l).is_some() || q.arrow_index(l).is_some();
    if !taken(wanted) {
        return wanted.to_string();
    }
    (1..).map(|i| format!("{wanted}{i}")).find(|l| !taken(l)).expect("unbounded")
}

/// `R[X]`: adds a vertex whose projective has radical `X`, with default vertex label `w`.
pub fn one_point_extension(r: &BoundQuiverAlgebra, x: &Representation) -> Result<ExtensionResult> {
    one_point_extension_labeled(r, x, "w")
}

pub fn one_point_extension_labeled(r: &BoundQuiverAlgebra, x: &Representation, label: &str) -> Result<ExtensionResult> {
    extend(r, x, label, false)
}

/// Builds `R[X]`; `reversed_names` labels new arrows as pointing into the new vertex, for use on
/// the opposite side of a coextension.
fn extend(r: &BoundQuiverAlgebra, x: &Representation, label: &str, reversed_names: bool) -> Result<ExtensionResult> {
    let a = &r.structure;
    if !crate::representation::same_algebra(x.algebra(), a) {
        return Err(Error::AlgebraMismatch);
    }
    let mut q = r.quiver.clone();
    let label = fresh_label(&q, label);
    let omega = q.add_vertex(&label)?;
    let lifts = x.top_lifts();
    let mut summands: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (v, vs) in lifts.into_iter().enumerate() {
        for m in vs {
            summands.push((v, m));
        }
    }
    let mut new_arrows = Vec::new();
    for (l, (v, m)) in summands.iter().enumerate() {
        let twins = summands.iter().filter(|(u, _)| u == v).count();
        let vname = &r.quiver.vertices()[*v];
        let base = if reversed_names { format!("{vname}->{label}") } else { format!("{label}->{vname}") };
        let name = if twins > 1 { format!("{base}#{l}") } else { base };
        let k = q.add_arrow_idx(&fresh_label(&q, &name), omega, *v)?;
        new_arrows.push((k, *v, m.clone()));
    }
    // Kernel of the projective cover sum_l P(v_l) -> X, one relation per kernel vector.
    let mut relations = r.relations.clone();
    for u in 0..a.num_objects() {
        let mut cols = Vec::new();
        let mut index = Vec::new();
        for (l, (v, m)) in summands.iter().enumerate() {
            for &b in a.block(*v, u) {
                cols.push(x.action(b).mul_vec(m));
                index.push((l, b));
            }
        }
        if cols.is_empty() {
            continue;
        }
        let pi = Matrix::from_columns(&cols, x.dim_at(u));
        let ker = pi.kernel();
        for c in 0..ker.cols() {
            let mut terms = Vec::new();
            for (row, &(l, b)) in index.iter().enumerate() {
                let coef = ker.get(row, c);
                if coef.is_zero() {
                    continue;
                }
                let start = Path::arrow(&q, new_arrows[l].0);
                let path = start.then(&r.basis[b]).expect("composable");
                terms.push((coef.clone(), path));
            }
            relations.push(Relation::new(terms));
        }
    }
    let algebra = build_algebra(&q, &relations, DEFAULT_CAP.max(r.nilpotency + 2))?;
    if algebra.dim() != r.dim() + x.total_dim() + 1 {
        return Err(Error::InvalidRepresentation(format!(
            "extension has dimension {}, expected {}",
            algebra.dim(),
            r.dim() + x.total_dim() + 1
        )));
    }
    Ok(ExtensionResult { kind: ExtensionKind::Extension, algebra, base: r.clone(), module: x.clone(), vertex: omega, new_arrows, opposite: None })
}

/// `[X]R = (R^op[DX])^op`: adds a vertex whose injective has `X` as the quotient by its socle.
pub fn one_point_coextension(r: &BoundQuiverAlgebra, x: &Representation) -> Result<ExtensionResult> {
    one_point_coextension_labeled(r, x, "s")
}

pub fn one_point_coextension_labeled(r: &BoundQuiverAlgebra, x: &Representation, label: &str) -> Result<ExtensionResult> {
    let op = r.opposite();
    let dx = x.dual_over(op.structure.clone())?;
    let ext = extend(&op, &dx, label, true)?;
    let algebra = ext.algebra.opposite();
    Ok(ExtensionResult {
        kind: ExtensionKind::Coextension,
        algebra,
        base: r.clone(),
        module: x.clone(),
        vertex: ext.vertex,
        new_arrows: ext.new_arrows.clone(),
        opposite: Some(Box::new(ext)),
    })
}

impl ExtensionResult {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Projective of the new algebra at the extension vertex.
    pub fn new_projective(&self) -> Representation {
        Representation::projective(self.algebra.structure.clone(), self.vertex)
    }

    pub fn new_injective(&self) -> Representation {
        Representation::injective(self.algebra.structure.clone(), self.vertex)
    }
}

fn check_base(res: &ExtensionResult, m: &Representation) -> Result<()> {
    if crate::representation::same_algebra(m.algebra(), &res.base.structure) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// The zero embedding: `M` with `0` at the new vertex. Works for extensions and coextensions.
pub fn extend_zero(res: &ExtensionResult, m: &Representation) -> Result<Representation> {
    check_base(res, m)?;
    let mut dims = m.dims().to_vec();
    dims.push(0);
    let mut maps = m.maps().to_vec();
    for (_, v, _) in &res.new_arrows {
        maps.push(match res.kind {
            ExtensionKind::Extension => Matrix::zeros(dims[*v], 0),
            ExtensionKind::Coextension => Matrix::zeros(0, dims[*v]),
        });
    }
    Representation::new(res.algebra.structure.clone(), dims, maps)
}

/// Same as [`extend_zero`]; named for the coextension side.
pub fn coextend_zero(res: &ExtensionResult, m: &Representation) -> Result<Representation> {
    if res.kind != ExtensionKind::Coextension {
        return Err(Error::BadInput("coextend_zero needs a coextension".into()));
    }
    extend_zero(res, m)
}

/// `M` with `Hom(X, M)` at the extension vertex; the new arrow to `v` sends `f` to `f_v(m)` for the
/// lifted top vector `m` of `X` at `v`.
pub fn extend_hom(res: &ExtensionResult, m: &Representation) -> Result<Representation> {
    if res.kind != ExtensionKind::Extension {
        return Err(Error::BadInput("extend_hom needs an extension".into()));
    }
    check_base(res, m)?;
    let basis = hom_space(&res.module, m)?;
    let h = basis.len();
    let mut dims = m.dims().to_vec();
    dims.push(h);
    let mut maps = m.maps().to_vec();
    for (_, v, lift) in &res.new_arrows {
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|f| f[*v].mul_vec(lift)).collect();
        maps.push(Matrix::from_columns(&cols, dims[*v]));
    }
    Representation::new(res.algebra.structure.clone(), dims, maps)
}

/// `M` with `D Hom(M, X)` at the coextension vertex, computed as the dual of the hom extension
/// over the opposite algebra.
pub fn coextend_tensor(res: &ExtensionResult, m: &Representation) -> Result<Representation> {
    let Some(op) = &res.opposite else {
        return Err(Error::BadInput("coextend_tensor needs a coextension".into()));
    };
    check_base(res, m)?;
    let dm = m.dual_over(op.base.structure.clone())?;
    let lifted = extend_hom(op, &dm)?;
    lifted.dual().rebase(res.algebra.structure.clone())
}

/// An iterated construction together with its individual steps.
#[derive(Clone, Debug)]
pub struct IteratedExtension {
    pub algebra: BoundQuiverAlgebra,
    pub steps: Vec<ExtensionResult>,
}

/// `A[S, n, m]`: `n` one-point extensions, each by the projective at the previous new vertex
/// (starting with `S`), then `m` coextensions by `tau^j P_n` for `j = 0 .. m-1`, where `P_n` is
/// carried along each coextension by the zero embedding.
///
/// `S` is checked to be indecomposable; being simple regular is the caller's responsibility.
pub fn build_asnm(a: &BoundQuiverAlgebra, s: &Representation, n: usize, m: usize) -> Result<IteratedExtension> {
    if m > n {
        return Err(Error::BadParams(format!("need m <= n, got n = {n}, m = {m}")));
    }
    if !is_indecomposable(s)? {
        return Err(Error::BadParams("S must be indecomposable".into()));
    }
    let mut cur = a.clone();
    let mut steps = Vec::new();
    let mut p = s.clone();
    for i in 1..=n {
        let ext = one_point_extension_labeled(&cur, &p, &format!("w{i}"))?;
        cur = ext.algebra.clone();
        p = ext.new_projective();
        steps.push(ext);
    }
    let mut carried = p;
    for j in 0..m {
        let mut w = carried.clone();
        for _ in 0..j {
            w = ar_translate(&w)?;
        }
        let co = one_point_coextension_labeled(&cur, &w, &format!("s{}", j + 1))?;
        carried = coextend_zero(&co, &carried)?;
        cur = co.algebra.clone();
        steps.push(co);
    }
    Ok(IteratedExtension { algebra: cur, steps })
}

/// Dimension of `e_t R e_s` for every pair of old vertices, in the new algebra and in the base.
pub fn old_hom_dims_preserved(res: &ExtensionResult) -> bool {
    let n = res.base.num_vertices();
    (0..n).all(|s| (0..n).all(|t| res.base.structure.block_dim(s, t) == res.algebra.structure.block_dim(s, t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::{hom_dim, is_isomorphic};

    fn kronecker() -> BoundQuiverAlgebra {
        let mut q = Quiver::with_vertices(&["c1", "c2"]);
        q.add_arrow("b1", "c2", "c1").unwrap();
        q.add_arrow("b2", "c2", "c1").unwrap();
        build_algebra(&q, &[], DEFAULT_CAP).unwrap()
    }

    fn regular(a: &BoundQuiverAlgebra, lambda: i64) -> Representation {
        Representation::from_arrows(
            a,
            &[("c1", 1), ("c2", 1)],
            &[("b1", Matrix::from_i64(&[&[lambda]])), ("b2", Matrix::from_i64(&[&[1]]))],
        )
        .unwrap()
    }

    #[test]
    fn zero_module_gives_product_with_field() {
        let a = kronecker();
        let z = Representation::zero(a.structure.clone());
        let e = one_point_extension(&a, &z).unwrap();
        assert_eq!(e.dim(), a.dim() + 1);
        assert!(e.new_arrows.is_empty());
        let c = one_point_coextension(&a, &z).unwrap();
        assert_eq!(c.dim(), a.dim() + 1);
    }

    #[test]
    fn extension_by_regular_module() {
        let a = kronecker();
        let s = regular(&a, 2);
        let e = one_point_extension(&a, &s).unwrap();
        assert_eq!(e.dim(), a.dim() + 2 + 1);
        assert!(old_hom_dims_preserved(&e));
        // radical of the new projective is X
        let p = e.new_projective();
        assert_eq!(p.dims(), &[1, 1, 1]);
        let hom = extend_hom(&e, &s).unwrap();
        assert_eq!(hom.dims(), &[1, 1, 1]);
        let zero = extend_zero(&e, &s).unwrap();
        assert_eq!(zero.dims(), &[1, 1, 0]);
        // Hom(X, R_3) = 0 so both embeddings agree
        let other = regular(&a, 3);
        let h = extend_hom(&e, &other).unwrap();
        let z = extend_zero(&e, &other).unwrap();
        assert_eq!(h.dims(), z.dims());
        assert_eq!(h.maps(), z.maps());
    }

    #[test]
    fn coextension_functors() {
        let a = kronecker();
        let s = regular(&a, 2);
        let c = one_point_coextension(&a, &s).unwrap();
        assert_eq!(c.dim(), a.dim() + 3);
        let t = coextend_tensor(&c, &s).unwrap();
        assert_eq!(t.dims()[c.vertex], hom_dim(&s, &s).unwrap());
        let other = regular(&a, -1);
        let t = coextend_tensor(&c, &other).unwrap();
        let z = coextend_zero(&c, &other).unwrap();
        assert!(is_isomorphic(&t, &z).unwrap());
        // the coextension is the opposite of the extension of the opposite
        let op = a.opposite();
        let e = one_point_extension_labeled(&op, &s.dual_over(op.structure.clone()).unwrap(), "s").unwrap();
        assert_eq!(*c.algebra.opposite().structure, *e.algebra.structure);
    }

    #[test]
    fn asnm_trivial_case() {
        let a = kronecker();
        let s = regular(&a, 2);
        let r = build_asnm(&a, &s, 0, 0).unwrap();
        assert_eq!(*r.algebra.structure, *a.structure);
    }

    #[test]
    fn kronecker_asnm_projective_injectives() {
        let a = kronecker();
        let s = regular(&a, 2);
        let r = build_asnm(&a, &s, 2, 2).unwrap();
        let alg = &r.algebra;
        assert_eq!(alg.num_vertices(), 6);
        let order: Vec<usize> = ["w2", "w1", "c2", "c1", "s1", "s2"].iter().map(|l| alg.vertex(l).unwrap()).collect();
        let digits = |m: &Representation| order.iter().map(|&v| m.dims()[v].to_string()).collect::<String>();
        let mut found = Vec::new();
        for v in 0..6 {
            let p = Representation::projective(alg.structure.clone(), v);
            for u in 0..6 {
                let i = Representation::injective(alg.structure.clone(), u);
                if is_isomorphic(&p, &i).unwrap() {
                    found.push(digits(&p));
                }
            }
        }
        found.sort();
        assert_eq!(found, vec!["011111".to_string(), "111110".to_string()]);
    }
}
