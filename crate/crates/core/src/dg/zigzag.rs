use std::collections::BTreeMap;

use serde::Serialize;

use super::algebra::{apply_images, DgAlgebra};
use super::cohomology::{cohomology, cohomology_preferring};
use super::errors::{FormalityError, ValidationError};
use super::purity::{purity_check_and_bigrade, BigradedAlgebra};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use crate::Result;

/// `H <- B -> R~ -> A`: each arrow a unital dg-algebra map inducing an
/// isomorphism on cohomology. Maps are stored by images of source basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Zigzag<K> {
    pub h: DgAlgebra<K>,
    pub b: DgAlgebra<K>,
    pub r_tilde: DgAlgebra<K>,
    pub a: DgAlgebra<K>,
    /// Weight of every basis element of `R~`.
    pub weights: Vec<i64>,
    /// `B -> H`.
    pub projection: Matrix<K>,
    /// `B -> R~`.
    pub truncation: Matrix<K>,
    /// `R~ -> A`.
    pub inclusion: Matrix<K>,
    pub r: K,
}

/// `(i, j) -> dim H^i` of the weight-`j` column complex of `R~`.
pub fn bigraded_cohomology<K: Scalar>(b: &BigradedAlgebra<K>) -> BTreeMap<(i32, i64), usize> {
    let a = &b.algebra;
    let mut weights: Vec<i64> = b.weights.clone();
    weights.sort_unstable();
    weights.dedup();
    let mut out = BTreeMap::new();
    for &j in &weights {
        for i in a.degree_list() {
            let cells = |deg: i32| -> Vec<usize> {
                (0..a.dim()).filter(|&k| a.degrees[k] == deg && b.weights[k] == j).collect()
            };
            let here = cells(i);
            if here.is_empty() {
                continue;
            }
            let d_here: Vec<Vec<K>> = here.iter().map(|&k| a.differential[k].clone()).collect();
            let kernel = here.len() - linalg::rank(&d_here);
            let d_below: Vec<Vec<K>> = cells(i - 1).iter().map(|&k| a.differential[k].clone()).collect();
            let dim = kernel - linalg::rank(&d_below);
            if dim > 0 {
                out.insert((i, j), dim);
            }
        }
    }
    out
}

/// Runs the purity check and builds the truncation zigzag.
///
/// `B` is spanned by the diagonal cocycles of `R~^i_i` and all of `R~^i_j`
/// with `j > i`; `B -> H` kills the off-diagonal part and sends a diagonal
/// cocycle to its class.
pub fn formality_zigzag<K: Scalar>(a: &DgAlgebra<K>, r: &K) -> Result<Zigzag<K>> {
    let big = purity_check_and_bigrade(a, r)?;
    for ((i, j), dim) in bigraded_cohomology(&big) {
        if j != i as i64 {
            return Err(FormalityError::Obstruction { degree: i, weight: j, dimension: dim }.into());
        }
    }
    let rt = &big.algebra;
    let n = rt.dim();

    // basis of B in R~ coordinates, degree by degree
    let mut bvecs: Vec<Vec<K>> = Vec::new();
    let mut bnames: Vec<String> = Vec::new();
    let mut bdegrees: Vec<i32> = Vec::new();
    let mut diagonal: Vec<bool> = Vec::new();
    for i in rt.degree_list() {
        let diag: Vec<usize> = (0..n).filter(|&k| rt.degrees[k] == i && big.weights[k] == i as i64).collect();
        let m: Matrix<K> = (0..n).map(|c| diag.iter().map(|&k| rt.differential[k][c].clone()).collect()).collect();
        let mut cocycles: Vec<Vec<K>> = linalg::kernel(&m, diag.len())
            .into_iter()
            .map(|local| {
                let mut v = vec![K::zero(); n];
                for (x, &k) in local.into_iter().zip(&diag) {
                    v[k] = x;
                }
                v
            })
            .collect();
        if diag.contains(&rt.unit) {
            let picks = linalg::extend_basis(&[rt.unit_vector()], &cocycles);
            cocycles =
                std::iter::once(rt.unit_vector()).chain(picks.into_iter().map(|p| cocycles[p].clone())).collect();
        }
        for (k, z) in cocycles.into_iter().enumerate() {
            let nz: Vec<usize> = (0..n).filter(|&c| !z[c].is_zero()).collect();
            bnames.push(if nz.len() == 1 && z[nz[0]].is_one() { rt.names[nz[0]].clone() } else { format!("z{i}_{k}") });
            bvecs.push(z);
            bdegrees.push(i);
            diagonal.push(true);
        }
        for k in (0..n).filter(|&k| rt.degrees[k] == i && big.weights[k] > i as i64) {
            bnames.push(rt.names[k].clone());
            bvecs.push(rt.basis_vector(k));
            bdegrees.push(i);
            diagonal.push(false);
        }
    }
    let bunit = bvecs
        .iter()
        .position(|v| *v == rt.unit_vector())
        .ok_or_else(|| FormalityError::invariant("unit is not in B"))?;
    let in_b = |v: &[K], what: &str| -> Result<Vec<K>> {
        linalg::solve_in_span(&bvecs, v)
            .ok_or_else(|| FormalityError::invariant(format!("B is not closed: {what}")).into())
    };
    let bdim = bvecs.len();
    let mut b = DgAlgebra::new(bnames, bdegrees, bunit);
    for x in 0..bdim {
        for y in 0..bdim {
            b.products[x][y] =
                in_b(&rt.mul(&bvecs[x], &bvecs[y]), &format!("product ({}, {})", b.names[x], b.names[y]))?;
        }
        b.differential[x] = in_b(&rt.d(&bvecs[x]), &format!("d({})", b.names[x]))?;
    }
    let mut fb = Vec::with_capacity(bdim);
    for x in 0..bdim {
        let fx = rt.apply_f(&bvecs[x]).expect("automorphism present");
        fb.push(in_b(&fx, &format!("F({})", b.names[x]))?);
    }
    b.automorphism = Some(fb);

    // H with representatives taken from the diagonal cocycles of B
    let preferred: Vec<Vec<K>> = (0..bdim).filter(|&k| diagonal[k]).map(|k| b.basis_vector(k)).collect();
    let hb = cohomology_preferring(&b, &preferred);
    if hb.total() == 0 {
        return Err(FormalityError::AcyclicAlgebra.into());
    }
    let mut hreps: Vec<Vec<K>> = Vec::new();
    let mut hnames: Vec<String> = Vec::new();
    let mut hdegrees: Vec<i32> = Vec::new();
    let mut offset: BTreeMap<i32, usize> = BTreeMap::new();
    for part in &hb.degrees {
        offset.insert(part.degree, hreps.len());
        for (k, rep) in part.representatives.iter().enumerate() {
            if rep.iter().zip(&diagonal).any(|(x, &diag)| !x.is_zero() && !diag) {
                return Err(FormalityError::invariant("cohomology class without diagonal representative").into());
            }
            let nz: Vec<usize> = (0..bdim).filter(|&c| !rep[c].is_zero()).collect();
            hnames.push(if nz.len() == 1 && rep[nz[0]].is_one() {
                b.names[nz[0]].clone()
            } else {
                format!("h{}_{k}", part.degree)
            });
            hreps.push(rep.clone());
            hdegrees.push(part.degree);
        }
    }
    let hdim = hreps.len();
    let hunit = hreps.iter().position(|v| *v == b.unit_vector()).ok_or(FormalityError::AcyclicAlgebra)?;
    let to_h = |v: &[K], deg: i32| -> Result<Vec<K>> {
        let mut out = vec![K::zero(); hdim];
        if linalg::is_zero_vec(v) {
            return Ok(out);
        }
        let c = hb.class_of(deg, v).ok_or_else(|| FormalityError::invariant("not a cocycle of B"))?;
        let start = *offset.get(&deg).ok_or_else(|| FormalityError::invariant("class in a degree outside B"))?;
        for (k, x) in c.into_iter().enumerate() {
            out[start + k] = x;
        }
        Ok(out)
    };
    let mut h = DgAlgebra::new(hnames, hdegrees.clone(), hunit);
    for x in 0..hdim {
        for y in 0..hdim {
            h.products[x][y] = to_h(&b.mul(&hreps[x], &hreps[y]), hdegrees[x] + hdegrees[y])?;
        }
    }
    let mut fh = Vec::with_capacity(hdim);
    for x in 0..hdim {
        fh.push(to_h(&b.apply_f(&hreps[x]).expect("automorphism present"), hdegrees[x])?);
    }
    h.automorphism = Some(fh);
    let mut projection = Vec::with_capacity(bdim);
    for k in 0..bdim {
        projection.push(if diagonal[k] { to_h(&b.basis_vector(k), b.degrees[k])? } else { vec![K::zero(); hdim] });
    }

    Ok(Zigzag {
        h,
        b,
        r_tilde: big.algebra.clone(),
        a: a.clone(),
        weights: big.weights.clone(),
        projection,
        truncation: bvecs,
        inclusion: big.inclusion.clone(),
        r: r.clone(),
    })
}

/// One named check with an optional failure witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    fn pass(name: &str) -> Self {
        Check { name: name.into(), passed: true, witness: None }
    }

    fn fail(name: &str, witness: String) -> Self {
        Check { name: name.into(), passed: false, witness: Some(witness) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraCheck {
    pub name: String,
    pub dimension: usize,
    pub cohomology: BTreeMap<i32, usize>,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ValidationError>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapCertificate {
    pub name: String,
    pub source: String,
    pub target: String,
    pub checks: Vec<Check>,
    pub source_ranks: BTreeMap<i32, usize>,
    pub target_ranks: BTreeMap<i32, usize>,
    /// Rank of the induced map on `H^i`.
    pub induced_ranks: BTreeMap<i32, usize>,
}

impl MapCertificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZigzagCertificate {
    pub algebras: Vec<AlgebraCheck>,
    pub maps: Vec<MapCertificate>,
    pub all_passed: bool,
}

/// Re-derives every claim about `z` from its data alone.
pub fn verify_zigzag<K: Scalar>(z: &Zigzag<K>) -> ZigzagCertificate {
    let named = [("H", &z.h), ("B", &z.b), ("R~", &z.r_tilde), ("A", &z.a)];
    let algebras: Vec<AlgebraCheck> = named
        .iter()
        .map(|(name, alg)| {
            let error = alg.validate().err();
            let shape_ok = error.as_ref().is_none_or(|e| e.axiom != super::errors::Axiom::Shape);
            AlgebraCheck {
                name: name.to_string(),
                dimension: alg.dim(),
                cohomology: if shape_ok { cohomology(alg).graded_dims() } else { BTreeMap::new() },
                valid: error.is_none(),
                error,
            }
        })
        .collect();
    let shapes_ok = algebras.iter().all(|c| c.error.as_ref().is_none_or(|e| e.axiom != super::errors::Axiom::Shape));
    let maps = if shapes_ok {
        vec![
            certify_map("projection", ("B", &z.b), ("H", &z.h), &z.projection),
            certify_map("truncation", ("B", &z.b), ("R~", &z.r_tilde), &z.truncation),
            certify_map("inclusion", ("R~", &z.r_tilde), ("A", &z.a), &z.inclusion),
        ]
    } else {
        Vec::new()
    };
    let all_passed = shapes_ok && algebras.iter().all(|c| c.valid) && maps.iter().all(MapCertificate::passed);
    ZigzagCertificate { algebras, maps, all_passed }
}

fn certify_map<K: Scalar>(
    name: &str,
    (sname, s): (&str, &DgAlgebra<K>),
    (tname, t): (&str, &DgAlgebra<K>),
    images: &Matrix<K>,
) -> MapCertificate {
    let hs = cohomology(s);
    let ht = cohomology(t);
    let mut cert = MapCertificate {
        name: name.into(),
        source: sname.into(),
        target: tname.into(),
        checks: Vec::new(),
        source_ranks: hs.graded_dims(),
        target_ranks: ht.graded_dims(),
        induced_ranks: BTreeMap::new(),
    };
    if images.len() != s.dim() || images.iter().any(|v| v.len() != t.dim()) {
        cert.checks.push(Check::fail("shape", format!("expected {} images of length {}", s.dim(), t.dim())));
        return cert;
    }
    cert.checks.push(Check::pass("shape"));
    let f = |v: &[K]| apply_images(images, v, t.dim());

    let bad_degree = (0..s.dim()).find(|&a| !t.is_homogeneous(&images[a], s.degrees[a]));
    cert.checks.push(match bad_degree {
        None => Check::pass("degree"),
        Some(a) => Check::fail("degree", format!("{} -> {}", s.names[a], t.fmt(&images[a]))),
    });

    cert.checks.push(if images[s.unit] == t.unit_vector() {
        Check::pass("unital")
    } else {
        Check::fail("unital", format!("1 -> {}", t.fmt(&images[s.unit])))
    });

    let mut mult = Check::pass("multiplicative");
    'outer: for x in 0..s.dim() {
        for y in 0..s.dim() {
            let lhs = f(&s.products[x][y]);
            let rhs = t.mul(&images[x], &images[y]);
            if lhs != rhs {
                mult = Check::fail(
                    "multiplicative",
                    format!("({}, {}): f(xy) = {} but f(x)f(y) = {}", s.names[x], s.names[y], t.fmt(&lhs), t.fmt(&rhs)),
                );
                break 'outer;
            }
        }
    }
    cert.checks.push(mult);

    let bad_chain = (0..s.dim()).find(|&x| f(&s.differential[x]) != t.d(&images[x]));
    cert.checks.push(match bad_chain {
        None => Check::pass("chain-map"),
        Some(x) => Check::fail("chain-map", format!("f(d {0}) != d f({0})", s.names[x])),
    });

    cert.checks.push(if cert.source_ranks == cert.target_ranks {
        Check::pass("cohomology-ranks")
    } else {
        Check::fail("cohomology-ranks", format!("{:?} vs {:?}", cert.source_ranks, cert.target_ranks))
    });

    let mut induced = Check::pass("induced-isomorphism");
    for part in &hs.degrees {
        if part.dim() == 0 {
            continue;
        }
        let mut columns: Vec<Vec<K>> = Vec::new();
        for rep in &part.representatives {
            match ht.class_of(part.degree, &f(rep)) {
                Some(c) => columns.push(c),
                None => {
                    induced = Check::fail("induced-isomorphism", format!("f({}) is not a cocycle", s.fmt(rep)));
                    break;
                }
            }
        }
        let rank = linalg::rank(&columns);
        cert.induced_ranks.insert(part.degree, rank);
        if induced.passed && rank < part.dim() {
            induced = Check::fail("induced-isomorphism", format!("rank {rank} < {} on H^{}", part.dim(), part.degree));
        }
    }
    cert.checks.push(induced);
    cert
}
