use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::algebra::DgAlgebra;
use super::zigzag::Zigzag;
use crate::scalar::Scalar;
use crate::{parse_rational, Error, Rational, Result};

/// Sparse vector: basis name to rational string.
pub type SparseVec = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub degree: i32,
}

/// JSON form of a dg-algebra.
///
/// Products with the unit that are not listed default to the unit law, and
/// basis elements missing from `automorphism` are fixed by it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DgAlgebraDoc {
    pub basis: Vec<BasisEntry>,
    pub unit: String,
    #[serde(default)]
    pub products: Vec<(String, String, SparseVec)>,
    #[serde(default)]
    pub differential: Vec<(String, SparseVec)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Vec<(String, SparseVec)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
}

fn sparse<K: Scalar>(names: &[String], v: &[K]) -> SparseVec {
    names.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n.clone(), c.to_string())).collect()
}

/// Nonzero images of a linear map, keyed by source basis name.
pub fn map_to_doc<K: Scalar>(images: &[Vec<K>], source: &[String], target: &[String]) -> Vec<(String, SparseVec)> {
    images
        .iter()
        .zip(source)
        .filter(|(v, _)| v.iter().any(|c| !c.is_zero()))
        .map(|(v, n)| (n.clone(), sparse(target, v)))
        .collect()
}

impl<K: Scalar> DgAlgebra<K> {
    pub fn to_doc(&self, r: Option<&K>) -> DgAlgebraDoc {
        let n = self.dim();
        let mut products = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let v = &self.products[a][b];
                let implied =
                    (a == self.unit || b == self.unit) && *v == self.basis_vector(if a == self.unit { b } else { a });
                if !implied && v.iter().any(|c| !c.is_zero()) {
                    products.push((self.names[a].clone(), self.names[b].clone(), sparse(&self.names, v)));
                }
            }
        }
        let automorphism = self.automorphism.as_ref().map(|f| {
            (0..n)
                .filter(|&a| f[a] != self.basis_vector(a))
                .map(|a| (self.names[a].clone(), sparse(&self.names, &f[a])))
                .collect()
        });
        DgAlgebraDoc {
            basis: self
                .names
                .iter()
                .zip(&self.degrees)
                .map(|(name, &degree)| BasisEntry { name: name.clone(), degree })
                .collect(),
            unit: self.names[self.unit].clone(),
            products,
            differential: map_to_doc(&self.differential, &self.names, &self.names),
            automorphism,
            r: r.map(|x| x.to_string()),
        }
    }
}

impl DgAlgebraDoc {
    /// Builds the algebra (not yet validated) and the optional parameter `r`.
    pub fn build(&self) -> Result<(DgAlgebra<Rational>, Option<Rational>)> {
        let names: Vec<String> = self.basis.iter().map(|b| b.name.clone()).collect();
        if names.is_empty() {
            return Err(Error::input("basis is empty"));
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (k, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), k).is_some() {
                return Err(Error::input(format!("duplicate basis name {name:?}")));
            }
        }
        let lookup =
            |name: &str| index.get(name).copied().ok_or_else(|| Error::input(format!("unknown basis name {name:?}")));
        let vector = |v: &SparseVec| -> Result<Vec<(usize, Rational)>> {
            v.iter().map(|(k, c)| Ok((lookup(k)?, parse_rational(c)?))).collect()
        };
        let unit = lookup(&self.unit)?;
        let mut a = DgAlgebra::new(names.clone(), self.basis.iter().map(|b| b.degree).collect(), unit);

        let mut seen = std::collections::HashSet::new();
        for (x, y, v) in &self.products {
            let (i, j) = (lookup(x)?, lookup(y)?);
            if !seen.insert((i, j)) {
                return Err(Error::input(format!("product ({x}, {y}) listed twice")));
            }
            a.set_product(i, j, &vector(v)?);
        }
        let mut seen = std::collections::HashSet::new();
        for (x, v) in &self.differential {
            let i = lookup(x)?;
            if !seen.insert(i) {
                return Err(Error::input(format!("differential of {x} listed twice")));
            }
            a.set_differential(i, &vector(v)?);
        }
        if let Some(entries) = &self.automorphism {
            let mut images = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for (x, v) in entries {
                let i = lookup(x)?;
                if !seen.insert(i) {
                    return Err(Error::input(format!("automorphism of {x} listed twice")));
                }
                images.push((i, vector(v)?));
            }
            a.set_automorphism(&images);
        }
        let r = self.r.as_deref().map(parse_rational).transpose()?;
        Ok((a, r))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightEntry {
    pub name: String,
    pub degree: i32,
    pub weight: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZigzagAlgebras {
    pub h: DgAlgebraDoc,
    pub b: DgAlgebraDoc,
    pub r_tilde: DgAlgebraDoc,
    pub a: DgAlgebraDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZigzagMaps {
    pub projection: Vec<(String, SparseVec)>,
    pub truncation: Vec<(String, SparseVec)>,
    pub inclusion: Vec<(String, SparseVec)>,
}

/// JSON form of `H <- B -> R~ -> A`.
#[derive(Clone, Debug, Serialize)]
pub struct ZigzagDoc {
    pub r: String,
    pub weights: Vec<WeightEntry>,
    pub algebras: ZigzagAlgebras,
    pub maps: ZigzagMaps,
}

impl<K: Scalar> Zigzag<K> {
    pub fn to_doc(&self) -> ZigzagDoc {
        ZigzagDoc {
            r: self.r.to_string(),
            weights: self
                .r_tilde
                .names
                .iter()
                .zip(&self.r_tilde.degrees)
                .zip(&self.weights)
                .map(|((name, &degree), &weight)| WeightEntry { name: name.clone(), degree, weight })
                .collect(),
            algebras: ZigzagAlgebras {
                h: self.h.to_doc(None),
                b: self.b.to_doc(None),
                r_tilde: self.r_tilde.to_doc(None),
                a: self.a.to_doc(Some(&self.r)),
            },
            maps: ZigzagMaps {
                projection: map_to_doc(&self.projection, &self.b.names, &self.h.names),
                truncation: map_to_doc(&self.truncation, &self.b.names, &self.r_tilde.names),
                inclusion: map_to_doc(&self.inclusion, &self.r_tilde.names, &self.a.names),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::corpus;

    #[test]
    fn round_trip() {
        for entry in corpus::corpus() {
            let doc = entry.algebra.to_doc(Some(&entry.r));
            let text = serde_json::to_string(&doc).unwrap();
            let back: DgAlgebraDoc = serde_json::from_str(&text).unwrap();
            let (a, r) = back.build().unwrap();
            assert_eq!(a, entry.algebra, "{}", entry.name);
            assert_eq!(r, Some(entry.r.clone()));
        }
    }

    #[test]
    fn bad_documents() {
        let parse = |s: &str| {
            serde_json::from_str::<DgAlgebraDoc>(s)
                .map_err(|e| e.to_string())
                .and_then(|d| d.build().map_err(|e| e.to_string()))
        };
        assert!(parse(r#"{"basis":[{"name":"1","degree":0}],"unit":"u"}"#).is_err());
        assert!(parse(r#"{"basis":[{"name":"1","degree":0},{"name":"1","degree":1}],"unit":"1"}"#).is_err());
        assert!(parse(r#"{"basis":[{"name":"1","degree":0}],"unit":"1","differential":[["1",{"1":"0.5"}]]}"#).is_err());
        assert!(parse(r#"{"basis":[{"name":"1","degree":0}],"unit":"1","extra":1}"#).is_err());
        let (a, r) = serde_json::from_str::<DgAlgebraDoc>(
            r#"{"basis":[{"name":"e","degree":0},{"name":"a","degree":1},{"name":"b","degree":2}],
                "unit":"e","differential":[["a",{"b":"1"}]],
                "automorphism":[["a",{"a":"4"}],["b",{"b":"4"}]],"r":"4"}"#,
        )
        .unwrap()
        .build()
        .unwrap();
        assert_eq!(a.validate(), Ok(()));
        assert_eq!(r, Some(Rational::from_integer(4.into())));
    }
}
