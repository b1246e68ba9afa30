//! Finite-dimensional dg-algebras with an automorphism `F`: exact
//! validation, cohomology, purity detection and an explicit formality zigzag
//! `H <- B -> R~ -> A`.
//!
//! If `F` acts on `H^i` by `r^i`, then `A` decomposes into generalized
//! eigenspaces `A^i_j` (eigenvalue `r^j`), giving the bigraded algebra `R~`.
//! Its cohomology sits on the diagonal `i = j`, and the weight-wise
//! truncation `B` (diagonal cocycles plus everything with `j > i`) maps
//! quasi-isomorphically both into `R~` and onto `H`.

mod algebra;
mod cohomology;
pub mod corpus;
mod doc;
mod errors;
mod purity;
mod zigzag;

pub use algebra::{apply_images, fmt_vector, DgAlgebra};
pub use cohomology::{cohomology, cohomology_preferring, Cohomology, DegreeCohomology};
pub use doc::{map_to_doc, BasisEntry, DgAlgebraDoc, SparseVec, WeightEntry, ZigzagAlgebras, ZigzagDoc, ZigzagMaps};
pub use errors::{Axiom, FormalityError, ValidationError};
pub use purity::{purity_check, purity_check_and_bigrade, BigradedAlgebra};
pub use zigzag::{
    bigraded_cohomology, formality_zigzag, verify_zigzag, AlgebraCheck, Check, MapCertificate, Zigzag,
    ZigzagCertificate,
};

#[cfg(test)]
mod tests {
    use super::corpus::{corpus, Expected};
    use super::*;
    use crate::{Error, Rational};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn corpus_behaves_as_expected() {
        for entry in corpus() {
            assert!(entry.algebra.dim() <= 12);
            let got = formality_zigzag(&entry.algebra, &entry.r);
            match (&entry.expected, got) {
                (Expected::Certified, Ok(z)) => {
                    let cert = verify_zigzag(&z);
                    assert!(cert.all_passed, "{}: {cert:#?}", entry.name);
                }
                (Expected::Invalid(axiom), Err(Error::Validation(e))) => assert_eq!(e.axiom, *axiom, "{}", entry.name),
                (Expected::NotPure { degree }, Err(Error::Formality(FormalityError::NotPure { degree: d, .. }))) => {
                    assert_eq!(d, *degree, "{}", entry.name)
                }
                (Expected::Spectral { degree }, Err(Error::Formality(FormalityError::Spectral { degree: d, .. }))) => {
                    assert_eq!(d, *degree, "{}", entry.name)
                }
                (e, got) => panic!("{}: expected {e:?}, got {got:?}", entry.name),
            }
        }
    }

    #[test]
    fn zero_differential_gives_identity_zigzag() {
        let a = corpus::exterior(&r(2));
        let z = formality_zigzag(&a, &r(2)).unwrap();
        assert_eq!(z.h, z.b);
        assert_eq!(z.b.names, a.names);
        assert_eq!(z.r_tilde, a);
        assert_eq!(z.weights, vec![0, 1, 2, 3]);
    }

    #[test]
    fn acyclic_pair_truncates_to_unit() {
        let z = formality_zigzag(&corpus::acyclic_pair(&r(4)), &r(4)).unwrap();
        assert_eq!(z.b.names, vec!["e".to_string()]);
        assert_eq!(z.h.names, vec!["e".to_string()]);
        assert!(verify_zigzag(&z).all_passed);
    }

    #[test]
    fn leibniz_witness() {
        let err = corpus::leibniz_violation().validate().unwrap_err();
        assert_eq!(err.axiom, Axiom::Leibniz);
        assert_eq!(err.witness, vec!["x".to_string(), "a".to_string()]);
    }

    #[test]
    fn perturbed_structure_constant_is_caught() {
        let mut z = formality_zigzag(&corpus::tensor(&r(3), 2), &r(3)).unwrap();
        assert!(verify_zigzag(&z).all_passed);
        let (x, a) = (z.a.index_of("x").unwrap(), z.a.index_of("a").unwrap());
        let xa = z.a.index_of("xa").unwrap();
        z.a.products[x][a][xa] = r(2);
        let cert = verify_zigzag(&z);
        assert!(!cert.all_passed);
        let incl = cert.maps.iter().find(|m| m.name == "inclusion").unwrap();
        let mult = incl.checks.iter().find(|c| c.name == "multiplicative").unwrap();
        assert!(!mult.passed);
        assert!(mult.witness.as_ref().unwrap().starts_with("(x, a)"));
    }

    #[test]
    fn broken_map_is_caught() {
        let mut z = formality_zigzag(&corpus::acyclic_pair(&r(4)), &r(4)).unwrap();
        z.projection[0][0] = r(2);
        let cert = verify_zigzag(&z);
        let proj = &cert.maps[0];
        assert!(!proj.checks.iter().find(|c| c.name == "unital").unwrap().passed);
    }

    #[test]
    fn weights_are_additive() {
        let z = formality_zigzag(&corpus::tensor(&r(3), 2), &r(3)).unwrap();
        let a = &z.r_tilde;
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                for (k, c) in a.products[x][y].iter().enumerate() {
                    if *c != r(0) {
                        assert_eq!(z.weights[k], z.weights[x] + z.weights[y]);
                    }
                }
            }
            for (k, c) in a.differential[x].iter().enumerate() {
                if *c != r(0) {
                    assert_eq!(z.weights[k], z.weights[x]);
                }
            }
        }
    }
}
