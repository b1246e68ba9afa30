use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinat::{
    all_roots, centralizer_data, positive_roots, symmetric_group, Root, SemisimplePoint, WeylElement,
};
use crate::{fmt_rational, Error, Rational, Result};

/// Where a datum came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatumKind {
    /// The Springer resolution `G x^B n -> N` of `GL(n)`.
    Nilpotent,
    /// The `(s, q0)`-fixed points of the Springer resolution.
    FixedPoint { s: Vec<Rational>, q0: Rational },
}

/// A finite family of `B`-stable weight sets for a (possibly Levi) subgroup of `GL(n)`.
///
/// Each piece `V^i` is a multiplicity-free set of roots of `GL(n)`, the
/// `T`-weights of a `B`-stable subspace of the representation whose weights
/// are `weight_support`. The acting group is `group` with positive roots
/// `positive_group_roots`; Weyl group lengths are measured against them.
#[derive(Clone, Debug)]
pub struct SpringerDatum {
    pub n: usize,
    pub kind: DatumKind,
    /// Block label per coordinate of `s` (all zero for the nilpotent datum).
    pub levels: Vec<usize>,
    /// The Weyl group of the acting group, in total order.
    pub group: Vec<WeylElement>,
    pub positive_group_roots: Vec<Root>,
    pub weight_support: BTreeSet<Root>,
    pub pieces: Vec<BTreeSet<Root>>,
    /// Coset representative labelling each piece (identity for the nilpotent datum).
    pub piece_labels: Vec<WeylElement>,
}

impl SpringerDatum {
    pub fn ambient_roots(&self) -> Vec<Root> {
        all_roots(self.n)
    }

    /// `d_i = dim G(s)/B(s) + dim V^i`.
    pub fn component_dims(&self) -> Vec<usize> {
        let flag = self.positive_group_roots.len();
        self.pieces.iter().map(|v| flag + v.len()).collect()
    }

    pub fn group_length(&self, w: &WeylElement) -> usize {
        w.length_relative_to(&self.positive_group_roots)
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.group.iter().any(|g| g == w)
    }

    pub fn to_doc(&self) -> DatumDoc {
        DatumDoc {
            group: GroupDoc {
                n: self.n,
                levels: self.levels.clone(),
                order: self.group.len(),
                positive_roots: self.positive_group_roots.clone(),
            },
            kind: match &self.kind {
                DatumKind::Nilpotent => "nilpotent".into(),
                DatumKind::FixedPoint { .. } => "fixed-point".into(),
            },
            s: match &self.kind {
                DatumKind::Nilpotent => None,
                DatumKind::FixedPoint { s, .. } => Some(s.iter().map(fmt_rational).collect()),
            },
            q0: match &self.kind {
                DatumKind::Nilpotent => None,
                DatumKind::FixedPoint { q0, .. } => Some(fmt_rational(q0)),
            },
            weight_support: self.weight_support.iter().copied().collect(),
            pieces: self.pieces.iter().map(|v| v.iter().copied().collect()).collect(),
            piece_labels: self.piece_labels.iter().map(WeylElement::one_line).collect(),
            component_dims: self.component_dims(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupDoc {
    pub n: usize,
    pub levels: Vec<usize>,
    pub order: usize,
    pub positive_roots: Vec<Root>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DatumDoc {
    pub group: GroupDoc,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q0: Option<String>,
    pub weight_support: Vec<Root>,
    pub pieces: Vec<Vec<Root>>,
    pub piece_labels: Vec<Vec<usize>>,
    pub component_dims: Vec<usize>,
}

/// The Springer resolution datum: one piece `Phi^+` for the full group `S_n`.
pub fn nilpotent_datum(n: usize) -> Result<SpringerDatum> {
    let g = symmetric_group(n)?;
    let pos = positive_roots(n);
    Ok(SpringerDatum {
        n,
        kind: DatumKind::Nilpotent,
        levels: vec![0; n],
        group: g.elements_in_total_order(),
        positive_group_roots: pos.clone(),
        weight_support: all_roots(n).into_iter().collect(),
        pieces: vec![pos.into_iter().collect()],
        piece_labels: vec![WeylElement::identity(n)],
    })
}

/// The `(s, q0)`-fixed-point datum.
///
/// Fixed weights are the roots with `s_i / s_j = q0`; the acting group is the
/// centralizer `W(s)`, and there is one piece `V ∩ w(Phi^+)` for every
/// minimal representative `w` of `W(s)\W`. `B`-stability of each piece is
/// checked, not assumed.
pub fn fixed_point_datum(p: &SemisimplePoint) -> Result<SpringerDatum> {
    let n = p.rank();
    let s = p.s();
    let q0 = p.q0();
    let support: BTreeSet<Root> = all_roots(n).into_iter().filter(|r| &(&s[r.i] / &s[r.j]) == q0).collect();
    let c = centralizer_data(p)?;
    let mut group = c.subgroup.clone();
    group.sort();
    let pieces: Vec<BTreeSet<Root>> = c
        .coset_reps
        .iter()
        .map(|w| {
            let inv = w.inverse();
            support.iter().copied().filter(|r| inv.act_on_root(*r).is_positive()).collect()
        })
        .collect();
    let datum = SpringerDatum {
        n,
        kind: DatumKind::FixedPoint { s: s.to_vec(), q0: q0.clone() },
        levels: p.levels(),
        group,
        positive_group_roots: c.positive_roots.clone(),
        weight_support: support,
        pieces,
        piece_labels: c.coset_reps.clone(),
    };
    let violations = validate_b_stable(&datum);
    if let Some(v) = violations.first() {
        return Err(Error::Invariant(format!(
            "fixed-point piece {} is not B(s)-stable: {:?} + {:?} = {:?} missing",
            v.piece, v.alpha, v.beta, v.sum
        )));
    }
    Ok(datum)
}

/// `alpha` in piece `i` and `beta` positive for the group, but `alpha + beta`
/// is a weight of the representation missing from the piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityViolation {
    pub piece: usize,
    pub alpha: Root,
    pub beta: Root,
    pub sum: Root,
}

pub fn validate_b_stable(d: &SpringerDatum) -> Vec<StabilityViolation> {
    let mut out = Vec::new();
    for (i, piece) in d.pieces.iter().enumerate() {
        for alpha in piece {
            for beta in &d.positive_group_roots {
                if let Some(sum) = alpha.sum(beta) {
                    if d.weight_support.contains(&sum) && !piece.contains(&sum) {
                        out.push(StabilityViolation { piece: i, alpha: *alpha, beta: *beta, sum });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_examples() {
        let d = nilpotent_datum(1).unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.component_dims(), vec![0]);
        let d = nilpotent_datum(2).unwrap();
        assert_eq!(d.pieces[0].iter().copied().collect::<Vec<_>>(), vec![Root::new(0, 1)]);
        assert_eq!(d.component_dims(), vec![2]);
        let d = nilpotent_datum(3).unwrap();
        assert_eq!(d.pieces[0].len(), 3);
        assert_eq!(d.component_dims(), vec![6]);
        assert!(nilpotent_datum(9).is_err());
    }

    #[test]
    fn fixed_point_examples() {
        let d = fixed_point_datum(&SemisimplePoint::from_ints(&[1, 2], 2).unwrap()).unwrap();
        assert_eq!(d.weight_support.iter().copied().collect::<Vec<_>>(), vec![Root::new(1, 0)]);
        assert_eq!(d.group.len(), 1);
        let mut sizes: Vec<_> = d.pieces.iter().map(BTreeSet::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![0, 1]);
        let mut dims = d.component_dims();
        dims.sort();
        assert_eq!(dims, vec![0, 1]);

        let d = fixed_point_datum(&SemisimplePoint::from_ints(&[1, 1], 3).unwrap()).unwrap();
        assert!(d.weight_support.is_empty());
        assert_eq!(d.group.len(), 2);
        assert_eq!(d.pieces.len(), 1);
        assert!(d.pieces[0].is_empty());

        assert!(SemisimplePoint::from_ints(&[1, 2], 1).is_err());
    }

    #[test]
    fn stability_examples() {
        assert!(validate_b_stable(&nilpotent_datum(3).unwrap()).is_empty());
        let mut d = nilpotent_datum(3).unwrap();
        d.pieces[0].remove(&Root::new(0, 2));
        let v = validate_b_stable(&d);
        assert!(v.contains(&StabilityViolation {
            piece: 0,
            alpha: Root::new(0, 1),
            beta: Root::new(1, 2),
            sum: Root::new(0, 2)
        }));
        let mut d = nilpotent_datum(3).unwrap();
        d.pieces[0].clear();
        assert!(validate_b_stable(&d).is_empty());
    }

    #[test]
    fn fixed_point_data_are_stable() {
        for (s, q) in
            [(vec![1, 2, 4], 2), (vec![1, 1, 2], 2), (vec![2, 1, 2], 2), (vec![1, 2, 1], 2), (vec![4, 2, 1, 2], 2)]
        {
            let d = fixed_point_datum(&SemisimplePoint::from_ints(&s, q).unwrap()).unwrap();
            assert!(validate_b_stable(&d).is_empty());
        }
    }
}
