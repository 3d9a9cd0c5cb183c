use std::sync::Arc;

use crate::error::Result;
use crate::exact_linear::{Matrix, Scalar};

use super::{Morphism, Representation};

/// A projective cover `P -> M` with `P` a sum of indecomposable projectives.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Summands in order: `(object, lifted top vector in M(object))`.
    pub summands: Vec<(usize, Vec<Scalar>)>,
    pub projective: Representation,
    pub map: Morphism,
}

/// Projective cover built from lifts of a basis of the top of `M`.
pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    let a = m.algebra().clone();
    let n = a.num_objects();
    let lifts = m.top_lifts();
    let mut summands = Vec::new();
    for (v, vs) in lifts.into_iter().enumerate() {
        for x in vs {
            summands.push((v, x));
        }
    }
    let parts: Vec<Representation> = summands.iter().map(|(v, _)| Representation::projective(a.clone(), *v)).collect();
    let projective = Representation::direct_sum_all(a.clone(), &parts)?;
    // At object w, the summand for (v, x) contributes columns b . x for b in block(v, w).
    let map = (0..n)
        .map(|w| {
            let mut cols = Vec::new();
            for (v, x) in &summands {
                for &b in a.block(*v, w) {
                    cols.push(m.action(b).mul_vec(x));
                }
            }
            Matrix::from_columns(&cols, m.dim_at(w))
        })
        .collect();
    Ok(ProjectiveCover { summands, projective, map })
}

/// `tau M = D Tr M`, computed as the kernel of the Nakayama functor applied to a minimal
/// projective presentation `P1 -> P0 -> M -> 0`.
pub fn ar_translate(m: &Representation) -> Result<Representation> {
    let a = m.algebra().clone();
    let n = a.num_objects();
    if m.is_zero() {
        return Ok(Representation::zero(a));
    }
    let cover0 = projective_cover(m)?;
    let p0 = &cover0.projective;
    let kernel_bases: Vec<Matrix> = cover0.map.iter().map(Matrix::kernel).collect();
    let k = p0.submodule(&kernel_bases)?;
    if k.is_zero() {
        return Ok(Representation::zero(a));
    }
    let cover1 = projective_cover(&k)?;
    // Offsets of the P0 summands inside P0(u), per object u.
    let mut offsets = vec![Vec::with_capacity(cover0.summands.len()); n];
    for (u, offs) in offsets.iter_mut().enumerate() {
        let mut acc = 0;
        for (v, _) in &cover0.summands {
            offs.push(acc);
            acc += a.block_dim(*v, u);
        }
    }
    // a_{(v,k),(u,l)} in block(v, u): the (v,k) component of the P1 generator (u,l) inside P0(u).
    let comps: Vec<Vec<Vec<Scalar>>> = cover1
        .summands
        .iter()
        .map(|(u, y)| {
            let in_p0 = kernel_bases[*u].mul_vec(y);
            cover0
                .summands
                .iter()
                .enumerate()
                .map(|(idx, (v, _))| {
                    let off = offsets[*u][idx];
                    in_p0[off..off + a.block_dim(*v, *u)].to_vec()
                })
                .collect()
        })
        .collect();
    // V_z = sum over P1 summands (u,l) of block(z, u); W_z = sum over P0 summands (v,k) of block(z, v).
    let v_layout = |z: usize| -> Vec<usize> {
        let mut offs = Vec::new();
        let mut acc = 0;
        for (u, _) in &cover1.summands {
            offs.push(acc);
            acc += a.block_dim(z, *u);
        }
        offs.push(acc);
        offs
    };
    let w_layout = |z: usize| -> Vec<usize> {
        let mut offs = Vec::new();
        let mut acc = 0;
        for (v, _) in &cover0.summands {
            offs.push(acc);
            acc += a.block_dim(z, *v);
        }
        offs.push(acc);
        offs
    };
    let mut kernels = Vec::with_capacity(n);
    for z in 0..n {
        let vo = v_layout(z);
        let wo = w_layout(z);
        let mut f = Matrix::zeros(*vo.last().unwrap(), *wo.last().unwrap());
        for (l, (u, _)) in cover1.summands.iter().enumerate() {
            for (kk, (v, _)) in cover0.summands.iter().enumerate() {
                let coeff = &comps[l][kk];
                if coeff.iter().all(Scalar::is_zero) {
                    continue;
                }
                for (ci, _) in a.block(z, *v).iter().enumerate() {
                    let mut c = vec![Scalar::zero(); a.block_dim(z, *v)];
                    c[ci] = Scalar::one();
                    let prod = a.block_mul(coeff, (*v, *u), &c, (z, *v));
                    for (r, x) in prod.into_iter().enumerate() {
                        if !x.is_zero() {
                            f.set(vo[l] + r, wo[kk] + ci, x);
                        }
                    }
                }
            }
        }
        kernels.push(f.transpose().kernel());
    }
    let dims: Vec<usize> = kernels.iter().map(Matrix::cols).collect();
    let mut maps = Vec::with_capacity(a.gens().len());
    for &g in a.gens() {
        let (s, t) = a.grading(g);
        // R_g : V_t -> V_s, c -> c g ; tau M(g) is the restriction of its transpose.
        let vs = v_layout(s);
        let vt = v_layout(t);
        let mut r = Matrix::zeros(*vs.last().unwrap(), *vt.last().unwrap());
        let gvec = {
            let mut e = vec![Scalar::zero(); a.block_dim(s, t)];
            e[a.block_position(g)] = Scalar::one();
            e
        };
        for (l, (u, _)) in cover1.summands.iter().enumerate() {
            for ci in 0..a.block_dim(t, *u) {
                let mut c = vec![Scalar::zero(); a.block_dim(t, *u)];
                c[ci] = Scalar::one();
                let prod = a.block_mul(&c, (t, *u), &gvec, (s, t));
                for (row, x) in prod.into_iter().enumerate() {
                    if !x.is_zero() {
                        r.set(vs[l] + row, vt[l] + ci, x);
                    }
                }
            }
        }
        let image = r.transpose().mul(&kernels[s]);
        maps.push(kernels[t].solve_matrix(&image)?);
    }
    Representation::new(a, dims, maps)
}

/// `tau^- M = D tau D M`, computed over the opposite algebra.
pub fn ar_translate_inverse(m: &Representation) -> Result<Representation> {
    let op = Arc::new(m.algebra().opposite());
    let d = m.dual_over(op)?;
    let t = ar_translate(&d)?;
    t.dual().rebase(m.algebra().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::tests::{kronecker, regular};
    use crate::representation::{is_isomorphic, is_morphism};

    #[test]
    fn cover_is_surjective_morphism() {
        let a = kronecker();
        let m = regular(&a, 2);
        let c = projective_cover(&m).unwrap();
        assert!(is_morphism(&c.map, &c.projective, &m));
        assert!(c.map.iter().zip(m.dims()).all(|(f, &d)| f.rank() == d));
        assert_eq!(c.projective.top_dims(), m.top_dims());
    }

    #[test]
    fn projectives_translate_to_zero() {
        let a = kronecker();
        for v in 0..2 {
            let p = Representation::projective(a.structure.clone(), v);
            assert!(ar_translate(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn homogeneous_kronecker_modules_are_tau_periodic() {
        let a = kronecker();
        for lambda in [0, 2, -3] {
            let m = regular(&a, lambda);
            let t = ar_translate(&m).unwrap();
            assert!(is_isomorphic(&t, &m).unwrap());
            let back = ar_translate_inverse(&t).unwrap();
            assert!(is_isomorphic(&back, &m).unwrap());
        }
    }

    #[test]
    fn kronecker_simple_injective_translate() {
        let a = kronecker();
        let s = Representation::simple(a.structure.clone(), 1);
        let t = ar_translate(&s).unwrap();
        // Cartan C = [[1,2],[0,1]] (entry (i,j) = paths j -> i); Phi = -C^T C^{-1} maps (0,1) to (2,3).
        assert_eq!(t.dims(), &[2, 3]);
        t.check().unwrap();
    }
}
