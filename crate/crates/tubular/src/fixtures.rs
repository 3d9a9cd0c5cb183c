//! Named example algebras and modules, and the checks run against them by `example --verify`.
//!
//! Relations are written in composition order: `"b a"` means first `a`, then `b`.
//!
//! Vertex naming in the Kronecker tower `C[S,2,2]`: the Kronecker vertices are `c1` (sink) and `c2`,
//! the extension vertices are `w1`, `w2` (`w2` is the source) and the coextension vertices are
//! `s1`, `s2` (`s2` is the sink). Dimension vectors are listed in the order
//! `w2 w1 c2 c1 s1 s2`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::constructions::{build_asnm, one_point_extension_labeled, trivial_extension, IteratedExtension};
use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Scalar};
use crate::quiver_algebra::{build_algebra, verify_relations, BoundQuiverAlgebra, Path, Quiver, Relation, StructureAlgebra, DEFAULT_CAP};
use crate::representation::{ar_translate, hom_dim, is_indecomposable, is_isomorphic, Representation};
use crate::tube::{build_gamma, Family, TubeVertex};

pub const EXAMPLE_NAMES: &[&str] =
    &["kronecker", "kronecker-S22", "canonical-333", "e6-extension", "a-x11", "trivext-333", "gamma-232"];

/// Kronecker quiver `c2 => c1` with arrows `b1`, `b2`.
pub fn kronecker() -> BoundQuiverAlgebra {
    let mut q = Quiver::with_vertices(&["c1", "c2"]);
    q.add_arrow("b1", "c2", "c1").expect("fresh label");
    q.add_arrow("b2", "c2", "c1").expect("fresh label");
    build_algebra(&q, &[], DEFAULT_CAP).expect("Kronecker algebra")
}

/// The simple regular Kronecker module with `b1 = lambda`, `b2 = 1`.
pub fn kronecker_regular(a: &BoundQuiverAlgebra, lambda: &Scalar) -> Representation {
    Representation::from_arrows(
        a,
        &[("c1", 1), ("c2", 1)],
        &[("b1", Matrix::from_rows(vec![vec![lambda.clone()]])), ("b2", Matrix::from_i64(&[&[1]]))],
    )
    .expect("regular module")
}

/// Hereditary algebra of Euclidean type E6: three arms `2 -> 1 -> 0`, `4 -> 3 -> 0`, `6 -> 5 -> 0`.
pub fn e6_hereditary() -> BoundQuiverAlgebra {
    let mut q = Quiver::with_vertices(&["0", "1", "2", "3", "4", "5", "6"]);
    for (l, s, t) in [("a0", "1", "0"), ("a1", "2", "1"), ("b0", "3", "0"), ("b1", "4", "3"), ("c0", "5", "0"), ("c1", "6", "5")] {
        q.add_arrow(l, s, t).expect("fresh label");
    }
    build_algebra(&q, &[], DEFAULT_CAP).expect("E6 algebra")
}

/// The simple regular module of the rank 2 tube: `k^2` at the sink, `k` elsewhere, with the three
/// arms entering along `(1,0)`, `(1,1)` and `(0,1)`.
pub fn e6_regular_simple(a: &BoundQuiverAlgebra) -> Representation {
    Representation::from_arrows(
        a,
        &[("0", 2), ("1", 1), ("2", 1), ("3", 1), ("4", 1), ("5", 1), ("6", 1)],
        &[
            ("a0", Matrix::from_i64(&[&[1], &[0]])),
            ("b0", Matrix::from_i64(&[&[1], &[1]])),
            ("c0", Matrix::from_i64(&[&[0], &[1]])),
            ("a1", Matrix::from_i64(&[&[1]])),
            ("b1", Matrix::from_i64(&[&[1]])),
            ("c1", Matrix::from_i64(&[&[1]])),
        ],
    )
    .expect("regular simple")
}

/// Quiver of the canonical algebra of type (3,3,3): source `w`, sink `0`, arms through `2, 1`,
/// `4, 3` and `6, 5`.
pub fn canonical_333_quiver() -> Quiver {
    let mut q = Quiver::with_vertices(&["0", "1", "2", "3", "4", "5", "6", "w"]);
    for (l, s, t) in [
        ("a0", "1", "0"),
        ("a1", "2", "1"),
        ("a2", "w", "2"),
        ("b0", "3", "0"),
        ("b1", "4", "3"),
        ("b2", "w", "4"),
        ("c0", "5", "0"),
        ("c1", "6", "5"),
        ("c2", "w", "6"),
    ] {
        q.add_arrow(l, s, t).expect("fresh label");
    }
    q
}

pub fn canonical_333_relation(q: &Quiver) -> Relation {
    Relation::from_ints(q, &[(1, "a0 a1 a2"), (1, "b0 b1 b2"), (1, "c0 c1 c2")]).expect("relation")
}

/// The canonical tubular algebra of type (3,3,3), built from its presentation.
pub fn canonical_333() -> BoundQuiverAlgebra {
    let q = canonical_333_quiver();
    let r = canonical_333_relation(&q);
    build_algebra(&q, &[r], DEFAULT_CAP).expect("canonical algebra")
}

/// The trivial extension quiver: the canonical quiver plus `d`, `e` from `0` to `w`.
pub fn trivext_quiver() -> Quiver {
    let mut q = canonical_333_quiver();
    q.add_arrow("d", "0", "w").expect("fresh label");
    q.add_arrow("e", "0", "w").expect("fresh label");
    q
}

pub fn trivext_relations(q: &Quiver) -> Vec<Relation> {
    let rels: &[&[(i64, &str)]] = &[
        &[(1, "a0 a1 a2"), (1, "b0 b1 b2"), (1, "c0 c1 c2")],
        &[(1, "c2 d")],
        &[(1, "a2 e")],
        &[(1, "b2 d"), (-1, "b2 e")],
        &[(1, "e a0")],
        &[(1, "d c0")],
        &[(1, "d b0"), (-1, "e b0")],
        &[(1, "a1 a2 d a0 a1")],
        &[(1, "b1 b2 d b0 b1")],
        &[(1, "c1 c2 e c0 c1")],
    ];
    rels.iter().map(|r| Relation::from_ints(q, r).expect("relation")).collect()
}

/// Quiver of `C[S,2,2]`, using the construction's vertex names.
pub fn kronecker_s22_quiver() -> Quiver {
    let mut q = Quiver::with_vertices(&["w2", "w1", "c2", "c1", "s1", "s2"]);
    for (l, s, t) in [
        ("alpha1", "w2", "w1"),
        ("alpha2", "w1", "c2"),
        ("beta1", "c2", "c1"),
        ("beta2", "c2", "c1"),
        ("gamma1", "c1", "s1"),
        ("gamma2", "s1", "s2"),
    ] {
        q.add_arrow(l, s, t).expect("fresh label");
    }
    q
}

pub fn kronecker_s22_relations(q: &Quiver, lambda: &Scalar) -> Vec<Relation> {
    let l = lambda.clone();
    vec![
        Relation::parse(q, &[(Scalar::one(), "beta1 alpha2"), (-l.clone(), "beta2 alpha2")]).expect("relation"),
        Relation::parse(q, &[(Scalar::one(), "gamma1 beta1"), (-l, "gamma1 beta2")]).expect("relation"),
        Relation::from_ints(q, &[(1, "gamma2 gamma1 beta1 alpha2 alpha1")]).expect("relation"),
    ]
}

/// `C[S,2,2]` for the Kronecker algebra and `S = R_lambda`.
pub fn kronecker_s22(lambda: &Scalar) -> Result<IteratedExtension> {
    let c = kronecker();
    let s = kronecker_regular(&c, lambda);
    build_asnm(&c, &s, 2, 2)
}

/// Quiver of `A[X,1,1]` for the E6 algebra: the canonical quiver (extension vertex `w1`) with
/// two arrows `d`, `e` from `0` to the coextension vertex `s1`.
pub fn a_x11_quiver() -> Quiver {
    let mut q = Quiver::with_vertices(&["0", "1", "2", "3", "4", "5", "6", "w1", "s1"]);
    for (l, s, t) in [
        ("a3", "1", "0"),
        ("a2", "2", "1"),
        ("a1", "w1", "2"),
        ("b3", "3", "0"),
        ("b2", "4", "3"),
        ("b1", "w1", "4"),
        ("c3", "5", "0"),
        ("c2", "6", "5"),
        ("c1", "w1", "6"),
        ("d", "0", "s1"),
        ("e", "0", "s1"),
    ] {
        q.add_arrow(l, s, t).expect("fresh label");
    }
    q
}

pub fn a_x11_relations(q: &Quiver) -> Vec<Relation> {
    let rels: &[&[(i64, &str)]] = &[
        &[(1, "e a3")],
        &[(1, "d b3"), (-1, "e b3")],
        &[(1, "d c3")],
        &[(1, "a3 a2 a1"), (1, "b3 b2 b1"), (1, "c3 c2 c1")],
    ];
    rels.iter().map(|r| Relation::from_ints(q, r).expect("relation")).collect()
}

/// Element of `a` given by an arrow of its presentation.
fn arrow_vec(a: &BoundQuiverAlgebra, label: &str) -> Result<Vec<Scalar>> {
    Ok(a.arrow_element(a.arrow(label)?))
}

fn path_vec(a: &BoundQuiverAlgebra, written: &[&str]) -> Result<Vec<Scalar>> {
    Ok(a.reduce_path_dense(&Path::from_written(&a.quiver, written)?))
}

fn scaled(x: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    x.iter().map(|v| v * c).collect()
}

fn add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Scalars `(x, y, z)`, unique up to a common factor, with `x u + y v + z w = 0`.
fn linear_dependency(vectors: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
    let d = vectors[0].len();
    let k = Matrix::from_columns(vectors, d).kernel();
    if k.cols() != 1 {
        return Err(Error::BadInput(format!("expected a single dependency, found {}", k.cols())));
    }
    Ok(k.column(0))
}

/// Arrow assignment for the canonical relation on the three arms: the arms' first arrows (those
/// leaving the source) are rescaled by a dependency among the three long paths.
fn canonical_assignment(
    a: &BoundQuiverAlgebra,
    q: &Quiver,
    arms: [[&str; 3]; 3],
    images: &dyn Fn(&str) -> Option<String>,
) -> Result<Vec<Vec<Scalar>>> {
    let paths: Vec<Vec<Scalar>> = arms
        .iter()
        .map(|arm| {
            let labels: Vec<String> = arm.iter().map(|l| images(l).expect("mapped arrow")).collect();
            let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            path_vec(a, &refs)
        })
        .collect::<Result<_>>()?;
    let dep = linear_dependency(&paths)?;
    let mut out = Vec::with_capacity(q.num_arrows());
    for arrow in q.arrows() {
        let image = images(&arrow.label).ok_or_else(|| Error::UnknownLabel(arrow.label.clone()))?;
        let mut v = arrow_vec(a, &image)?;
        for (k, arm) in arms.iter().enumerate() {
            if arm[2] == arrow.label {
                v = scaled(&v, &dep[k]);
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// A single named check with its expected and computed values.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    /// `golden` for values taken from worked examples, `derived` for independently computed ones.
    pub kind: String,
}

impl Check {
    fn new(name: &str, expected: impl ToString, got: impl ToString, golden: bool) -> Check {
        Check {
            name: name.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
            kind: if golden { "golden" } else { "derived" }.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.got
    }
}

fn ext_quiver_matches(a: &StructureAlgebra, q: &Quiver) -> Result<bool> {
    Ok(a.ext_quiver()?.same_multigraph(q))
}

/// Dimension vectors, as digit strings in `order`, of the projectives isomorphic to injectives.
pub fn projective_injective_digits(a: &Arc<StructureAlgebra>, order: &[usize]) -> Result<Vec<String>> {
    let n = a.num_objects();
    let mut found = Vec::new();
    for v in 0..n {
        let p = Representation::projective(a.clone(), v);
        for u in 0..n {
            if is_isomorphic(&p, &Representation::injective(a.clone(), u))? {
                found.push(order.iter().map(|&o| p.dims()[o].to_string()).collect::<String>());
            }
        }
    }
    found.sort();
    Ok(found)
}

fn kronecker_checks() -> Result<Vec<Check>> {
    let a = kronecker();
    let r = kronecker_regular(&a, &Scalar::from_int(2));
    let p2 = Representation::projective(a.structure.clone(), 1);
    Ok(vec![
        Check::new("dimension", 4, a.dim(), false),
        Check::new("projective dims at c2", "[2, 1]", format!("{:?}", p2.dims()), false),
        Check::new("tau R_2 isomorphic to R_2", true, is_isomorphic(&ar_translate(&r)?, &r)?, true),
        Check::new("End R_2", 1, hom_dim(&r, &r)?, false),
    ])
}

fn kronecker_s22_checks() -> Result<Vec<Check>> {
    let lambda = Scalar::from_int(2);
    let built = kronecker_s22(&lambda)?;
    let a = &built.algebra;
    let q = kronecker_s22_quiver();
    let order: Vec<usize> = q.vertices().iter().map(|l| a.vertex(l)).collect::<Result<_>>()?;
    let assignment: Vec<Vec<Scalar>> = ["w2->w1", "w1->c2", "b1", "b2", "c1->s1", "s1->s2"]
        .iter()
        .map(|l| arrow_vec(a, l))
        .collect::<Result<_>>()?;
    let rels = kronecker_s22_relations(&q, &lambda);
    let s = kronecker_regular(&kronecker(), &lambda);
    let s_digits: String = {
        let mut d = [0; 6];
        d[2] = s.dims()[1];
        d[3] = s.dims()[0];
        d.iter().map(ToString::to_string).collect()
    };
    Ok(vec![
        Check::new("vertices", 6, a.num_vertices(), true),
        Check::new("quiver", true, ext_quiver_matches(&a.structure, &q)?, true),
        Check::new(
            "projective-injectives",
            "[\"011111\", \"111110\"]",
            format!("{:?}", projective_injective_digits(&a.structure, &order)?),
            true,
        ),
        Check::new("relations", true, verify_relations(&a.structure, &q, &assignment, &rels)?, true),
        Check::new("dimension of S", "001100", s_digits, true),
        Check::new(
            "dimension",
            a.dim(),
            kronecker().dim() + built.steps.iter().map(|s| s.module.total_dim() + 1).sum::<usize>(),
            false,
        ),
    ])
}

fn canonical_checks() -> Result<Vec<Check>> {
    let e6 = e6_hereditary();
    let x = e6_regular_simple(&e6);
    let ext = one_point_extension_labeled(&e6, &x, "w")?;
    let a = &ext.algebra;
    let q = canonical_333_quiver();
    let images = |l: &str| -> Option<String> {
        Some(match l {
            "a2" => "w->2".into(),
            "b2" => "w->4".into(),
            "c2" => "w->6".into(),
            other => other.into(),
        })
    };
    let assignment = canonical_assignment(a, &q, [["a0", "a1", "a2"], ["b0", "b1", "b2"], ["c0", "c1", "c2"]], &images)?;
    let rel = canonical_333_relation(&q);
    let direct = canonical_333();
    Ok(vec![
        Check::new("dimension", e6.dim() + x.total_dim() + 1, a.dim(), false),
        Check::new("dimension from presentation", direct.dim(), a.dim(), false),
        Check::new("quiver", true, ext_quiver_matches(&a.structure, &q)?, true),
        Check::new("relation", true, verify_relations(&a.structure, &q, &assignment, &[rel])?, true),
    ])
}

fn e6_checks() -> Result<Vec<Check>> {
    let a = e6_hereditary();
    let x = e6_regular_simple(&a);
    let tx = ar_translate(&x)?;
    let ttx = ar_translate(&tx)?;
    Ok(vec![
        Check::new("dimension", 16, a.dim(), false),
        Check::new("X indecomposable", true, is_indecomposable(&x)?, true),
        Check::new("tau X isomorphic to X", false, is_isomorphic(&tx, &x)?, true),
        Check::new("tau^2 X isomorphic to X", true, is_isomorphic(&ttx, &x)?, true),
    ])
}

/// `A[X,1,1]` for the E6 algebra with the checks of its presentation.
pub fn a_x11() -> Result<IteratedExtension> {
    let e6 = e6_hereditary();
    let x = e6_regular_simple(&e6);
    build_asnm(&e6, &x, 1, 1)
}

/// `d`, `e` in the span of the coextension arrows, with `d c3 = 0`, `e a3 = 0`, `d b3 = e b3`.
fn coextension_pair(a: &BoundQuiverAlgebra, arrows: &[Vec<Scalar>], a3: &[Scalar], b3: &[Scalar], c3: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let s = &a.structure;
    let killing = |y: &[Scalar]| -> Result<Vec<Scalar>> {
        let images: Vec<Vec<Scalar>> = arrows.iter().map(|x| s.mul(x, y)).collect();
        let k = Matrix::from_columns(&images, s.dim()).kernel();
        if k.cols() != 1 {
            return Err(Error::BadInput("coextension arrows do not split as expected".into()));
        }
        let c = k.column(0);
        Ok(arrows.iter().zip(&c).fold(vec![Scalar::zero(); s.dim()], |acc, (x, ci)| add(&acc, &scaled(x, ci))))
    };
    let d = killing(c3)?;
    let e = killing(a3)?;
    let db = s.mul(&d, b3);
    let eb = s.mul(&e, b3);
    let ratio = Matrix::from_columns(&[eb], s.dim()).solve(&db).map_err(Error::from)?;
    Ok((d, scaled(&e, &ratio.particular[0])))
}

fn a_x11_checks() -> Result<Vec<Check>> {
    let built = a_x11()?;
    let a = &built.algebra;
    let q = a_x11_quiver();
    let images = |l: &str| -> Option<String> {
        Some(match l {
            "a3" => "a0".into(),
            "a2" => "a1".into(),
            "a1" => "w1->2".into(),
            "b3" => "b0".into(),
            "b2" => "b1".into(),
            "b1" => "w1->4".into(),
            "c3" => "c0".into(),
            "c2" => "c1".into(),
            "c1" => "w1->6".into(),
            "d" | "e" => "a0".into(),
            _ => return None,
        })
    };
    let mut assignment = canonical_assignment(a, &q, [["a3", "a2", "a1"], ["b3", "b2", "b1"], ["c3", "c2", "c1"]], &images)?;
    let new_arrows: Vec<Vec<Scalar>> = built.steps[1].new_arrows.iter().map(|(k, _, _)| a.arrow_element(*k)).collect();
    let (d, e) = coextension_pair(a, &new_arrows, &arrow_vec(a, "a0")?, &arrow_vec(a, "b0")?, &arrow_vec(a, "c0")?)?;
    let di = q.arrow_index("d").expect("arrow d");
    let ei = q.arrow_index("e").expect("arrow e");
    assignment[di] = d;
    assignment[ei] = e;
    let rels = a_x11_relations(&q);
    Ok(vec![
        Check::new("vertices", 9, a.num_vertices(), true),
        Check::new("coextension arrows", 2, new_arrows.len(), true),
        Check::new("quiver", true, ext_quiver_matches(&a.structure, &q)?, true),
        Check::new("relations", true, verify_relations(&a.structure, &q, &assignment, &rels)?, true),
    ])
}

/// Arrow assignment for the trivial extension: old arrows map to themselves, `d` and `e` to the
/// dual elements vanishing on the `c`-path (resp. `a`-path) and agreeing on the `b`-path.
pub fn trivext_assignment(r: &BoundQuiverAlgebra, t: &StructureAlgebra, q: &Quiver) -> Result<Vec<Vec<Scalar>>> {
    let d = r.dim();
    let lift = |x: Vec<Scalar>| -> Vec<Scalar> { x.into_iter().chain(std::iter::repeat_n(Scalar::zero(), d)).collect() };
    let w = r.vertex("w")?;
    let zero = r.vertex("0")?;
    let block = r.structure.block(w, zero).to_vec();
    let coords = |written: &[&str]| -> Result<Vec<Scalar>> {
        let v = path_vec(r, written)?;
        Ok(block.iter().map(|&b| v[b].clone()).collect())
    };
    let pa = coords(&["a0", "a1", "a2"])?;
    let pb = coords(&["b0", "b1", "b2"])?;
    let pc = coords(&["c0", "c1", "c2"])?;
    // A functional phi on the block, given by its values on basis elements, as an element of R*.
    let functional = |conditions: &[(&Vec<Scalar>, Scalar)]| -> Result<Vec<Scalar>> {
        let rows: Vec<Vec<Scalar>> = conditions.iter().map(|(p, _)| (*p).clone()).collect();
        let rhs: Vec<Scalar> = conditions.iter().map(|(_, v)| v.clone()).collect();
        let phi = Matrix::from_rows_with_width(rows, block.len()).map_err(Error::from)?.solve(&rhs).map_err(Error::from)?.particular;
        let mut out = vec![Scalar::zero(); 2 * d];
        for (k, &b) in block.iter().enumerate() {
            out[d + b] = phi[k].clone();
        }
        Ok(out)
    };
    let delta = functional(&[(&pc, Scalar::zero()), (&pb, Scalar::one())])?;
    let eps = functional(&[(&pa, Scalar::zero()), (&pb, Scalar::one())])?;
    debug_assert_eq!(t.dim(), 2 * d);
    q.arrows()
        .iter()
        .map(|arrow| match arrow.label.as_str() {
            "d" => Ok(delta.clone()),
            "e" => Ok(eps.clone()),
            l => Ok(lift(arrow_vec(r, l)?)),
        })
        .collect()
}

fn trivext_checks() -> Result<Vec<Check>> {
    let r = canonical_333();
    let t = trivial_extension(&r.structure);
    let q = trivext_quiver();
    let ext = t.ext_quiver()?;
    let assignment = trivext_assignment(&r, &t, &q)?;
    let rels = trivext_relations(&q);
    Ok(vec![
        Check::new("dimension", 2 * r.dim(), t.dim(), false),
        Check::new("vertices", 8, ext.num_vertices(), true),
        Check::new("arrows", 11, ext.num_arrows(), true),
        Check::new("quiver", true, ext.same_multigraph(&q), true),
        Check::new("relations", true, verify_relations(&t, &q, &assignment, &rels)?, true),
    ])
}

/// The vertices and arrows drawn in the picture of `Γ(2,3,2)` near its mouth.
pub fn gamma_232_drawing() -> Result<(BTreeSet<TubeVertex>, BTreeSet<(TubeVertex, TubeVertex)>)> {
    let drawn = [
        "Z1[1] Z1[2]", "Z1[2] Z2[1]", "Z2[1] Z2[2]", "Z2[2] X0[1]", "X0[1] X0[2]", "X0[2] X1[2]", "X1[2] X1[3]",
        "X1[3] Y1[3]", "Y1[3] Y1[4]", "Y1[4] Y2[3]", "Y2[3] Z1[1]", "Y2[3] Y2[4]", "X0[1] X1[1]", "X1[1] Y1[1]",
        "Y1[1] Y1[2]", "X1[1] X1[2]", "X1[2] Y1[2]", "Y1[2] Y1[3]", "Y1[2] Y2[1]", "Y1[3] Y2[2]", "Y2[1] Y2[2]",
        "Y2[2] Y2[3]", "Y2[4] Z1[2]", "Z1[2] Z1[3]", "Z1[3] Z2[2]", "Z2[2] Z2[3]", "Z2[3] X0[2]", "X0[2] X0[3]",
        "X0[3] X1[3]", "X1[3] X1[4]", "X1[4] Y1[4]", "Y1[4] Y1[5]", "Y1[5] Y2[4]",
    ];
    let mut vertices = BTreeSet::new();
    let mut arrows = BTreeSet::new();
    for a in drawn {
        let (s, e) = a.split_once(' ').expect("pair");
        let (s, e) = (s.parse::<TubeVertex>()?, e.parse::<TubeVertex>()?);
        vertices.insert(s);
        vertices.insert(e);
        arrows.insert((s, e));
    }
    Ok((vertices, arrows))
}

fn gamma_232_checks() -> Result<Vec<Check>> {
    let t = build_gamma(2, 3, 2, 4)?;
    let pi: Vec<String> = t.projective_injective_vertices().iter().map(ToString::to_string).collect();
    let mouth: Vec<String> = t
        .mouth_translates()
        .iter()
        .map(|(v, u)| format!("{u}<-{v}"))
        .collect();
    let y = |i, j| TubeVertex::new(Family::Y, i, j);
    let (drawn_vertices, drawn_arrows) = gamma_232_drawing()?;
    let wide = build_gamma(2, 3, 2, 5)?;
    let induced: BTreeSet<(TubeVertex, TubeVertex)> = wide
        .arrows()
        .keys()
        .filter(|(a, b)| drawn_vertices.contains(a) && drawn_vertices.contains(b))
        .copied()
        .collect();
    let show = |s: &BTreeSet<(TubeVertex, TubeVertex)>| s.iter().map(|(a, b)| format!("{a}->{b}")).collect::<Vec<_>>().join(" ");
    Ok(vec![
        Check::new("projective-injectives", "[\"Y1[1]\", \"Y2[1]\"]", format!("{pi:?}"), true),
        Check::new(
            "mouth translates",
            "[\"Z2[1]<-X0[1]\", \"Y2[2]<-Z1[1]\", \"Z1[1]<-Z2[1]\"]",
            format!("{mouth:?}"),
            true,
        ),
        Check::new("drawn arrows", show(&drawn_arrows), show(&induced), true),
        Check::new("rays", 6, t.maximal_rays().len(), true),
        Check::new("corays", 5, t.maximal_corays().len(), true),
        Check::new("Y1[1] projective", true, t.is_projective(&y(1, 1)), true),
        Check::new("valid", true, t.validate().is_ok(), false),
    ])
}

/// Runs the checks of a named example.
pub fn verify_example(name: &str) -> Result<Vec<Check>> {
    match name {
        "kronecker" => kronecker_checks(),
        "kronecker-S22" => kronecker_s22_checks(),
        "canonical-333" => canonical_checks(),
        "e6-extension" => e6_checks(),
        "a-x11" => a_x11_checks(),
        "trivext-333" => trivext_checks(),
        "gamma-232" => gamma_232_checks(),
        other => Err(Error::UnknownLabel(other.to_string())),
    }
}
