use std::collections::HashMap;

use super::{Base, CellId, PrecubicalComplex, PrecubicalMap};
use crate::error::{Error, Result};

/// Levelwise pullback `K ×_M L` with its two projections.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub complex: PrecubicalComplex,
    pub left: PrecubicalMap,
    pub right: PrecubicalMap,
}

/// Pullback of `p : K → M` and `q : L → M`: the `n`-cells are the pairs
/// `(c, c')` with `p(c) = q(c')`, faces act coordinatewise. The result is
/// bi-pointed when both maps are and the base pairs match.
pub fn pullback(
    k: &PrecubicalComplex,
    p: &PrecubicalMap,
    l: &PrecubicalComplex,
    q: &PrecubicalMap,
) -> Result<Pullback> {
    let top = k.dims().len().min(l.dims().len());
    let mut pairs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(top);
    let mut index: Vec<HashMap<(usize, usize), usize>> = Vec::with_capacity(top);
    for d in 0..top {
        let mut by_image: HashMap<usize, Vec<usize>> = HashMap::new();
        for c in l.cells_of_dim(d) {
            by_image.entry(q.apply(c).index).or_default().push(c.index);
        }
        let mut row = Vec::new();
        for c in k.cells_of_dim(d) {
            if let Some(partners) = by_image.get(&p.apply(c).index) {
                row.extend(partners.iter().map(|&c2| (c.index, c2)));
            }
        }
        index.push(row.iter().enumerate().map(|(n, &pr)| (pr, n)).collect());
        pairs.push(row);
    }
    let base = match (k.base(), l.base()) {
        (Some(bk), Some(bl)) if p.bipointed && q.bipointed => {
            let init = index[0].get(&(bk.init, bl.init)).copied();
            let fin = index[0].get(&(bk.fin, bl.fin)).copied();
            match (init, fin) {
                (Some(init), Some(fin)) => Some(Base { init, fin }),
                _ => return Err(Error::contract("base points do not lie over a common base")),
            }
        }
        _ => None,
    };
    let counts = pairs.iter().map(Vec::len).collect();
    let complex = PrecubicalComplex::from_face_fn(counts, base, |c, i, eps| {
        let (a, b) = pairs[c.dim][c.index];
        let fa = k.face(CellId::new(c.dim, a), i, eps);
        let fb = l.face(CellId::new(c.dim, b), i, eps);
        index[c.dim - 1][&(fa.index, fb.index)]
    })?;
    let labels = pairs
        .iter()
        .enumerate()
        .map(|(d, row)| {
            row.iter()
                .map(|&(a, b)| {
                    format!(
                        "({},{})",
                        k.label(CellId::new(d, a)),
                        l.label(CellId::new(d, b))
                    )
                })
                .collect()
        })
        .collect();
    let complex = complex.with_labels(labels);
    let n = complex.dims().len();
    let left = PrecubicalMap::new(
        pairs[..n].iter().map(|row| row.iter().map(|pr| pr.0).collect()).collect(),
        base.is_some(),
    );
    let right = PrecubicalMap::new(
        pairs[..n].iter().map(|row| row.iter().map(|pr| pr.1).collect()).collect(),
        base.is_some(),
    );
    Ok(Pullback {
        complex,
        left,
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::complexes::{standard_cube, unique_map_to_z, z_complex, YComplex};
    use crate::cubical::find_isomorphism;

    #[test]
    fn pullback_along_identity_of_z() {
        let sq = standard_cube(2);
        let z = z_complex(2);
        let to_z = unique_map_to_z(&sq, 2).unwrap();
        let pb = pullback(&sq, &to_z, &z, &PrecubicalMap::identity(&z)).unwrap();
        assert!(find_isomorphism(&pb.complex, &sq).is_some());
        pb.left.validate(&pb.complex, &sq).unwrap();
        pb.right.validate(&pb.complex, &z).unwrap();
    }

    #[test]
    fn pullback_of_y_two_over_z_tilde() {
        let y = YComplex::new(2, &Caps::default()).unwrap();
        let p = y.projection();
        let pb = pullback(&y.complex, &p, &y.complex, &p).unwrap();
        assert_eq!(pb.complex.count(2), 4);
        assert!(pb.complex.validate().is_empty());
        for c in pb.complex.cells() {
            assert_eq!(p.apply(pb.left.apply(c)), p.apply(pb.right.apply(c)));
        }
    }

    #[test]
    fn vertex_only_pullback_is_product() {
        let k = PrecubicalComplex::from_face_fn(vec![3], None, |_, _, _| 0).unwrap();
        let l = PrecubicalComplex::from_face_fn(vec![2], None, |_, _, _| 0).unwrap();
        let z = z_complex(0);
        let pk = unique_map_to_z(&k, 0).unwrap();
        let pl = unique_map_to_z(&l, 0).unwrap();
        let pb = pullback(&k, &pk, &l, &pl).unwrap();
        assert_eq!(pb.complex.dims(), &[6]);
        let _ = z;
    }
}
