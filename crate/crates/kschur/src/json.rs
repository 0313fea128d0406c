//! JSON forms of the library types.
//!
//! Coefficients are strings so arbitrary-precision integers survive every
//! JSON reader. Terms are listed in canonical order (length, then
//! lexicographic canonical word); h-coefficients in partition order.

use std::collections::BTreeMap;

use kschur_core::root_system::{CorootVector, WeightVector};
use kschur_core::{
    AffinePermutation, BoundedPartition, HExpansion, KSchur, NilCoxeterElement, Rank, Word,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub k: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCoeffJson {
    pub partition: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HExpansionJson {
    pub k: usize,
    pub h_coeffs: Vec<HCoeffJson>,
}

/// `𝔰_λ` with both expansions; also the on-disk cache format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSchurJson {
    pub k: usize,
    pub lambda: Vec<usize>,
    pub element: ElementJson,
    pub h_expansion: HExpansionJson,
}

fn parse_coeff(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Format(format!("coefficient {s:?} is not an integer")))
}

pub fn element_to_json(a: &NilCoxeterElement) -> ElementJson {
    ElementJson {
        k: a.rank().k(),
        terms: a
            .canonical_terms()
            .into_iter()
            .map(|(word, c)| TermJson {
                word: word.letters().to_vec(),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

/// Words may be any reduced word; repeated elements are summed.
pub fn element_from_json(json: &ElementJson) -> Result<NilCoxeterElement> {
    let rank = Rank::new(json.k)?;
    let mut out = NilCoxeterElement::zero(rank);
    for term in &json.terms {
        let word = Word::new(rank, term.word.clone())?;
        let w = AffinePermutation::from_word(&word);
        if w.length() != word.len() {
            return Err(Error::Format(format!("word {word} is not reduced")));
        }
        out.add_term(w, parse_coeff(&term.coeff)?);
    }
    Ok(out)
}

pub fn h_expansion_to_json(h: &HExpansion) -> HExpansionJson {
    HExpansionJson {
        k: h.rank().k(),
        h_coeffs: h
            .coeffs()
            .iter()
            .map(|(mu, c)| HCoeffJson {
                partition: mu.rows().to_vec(),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

pub fn h_expansion_from_json(json: &HExpansionJson, degree: usize) -> Result<HExpansion> {
    let rank = Rank::new(json.k)?;
    let mut coeffs = BTreeMap::new();
    for entry in &json.h_coeffs {
        let mu = BoundedPartition::new(rank, entry.partition.clone())?;
        if coeffs.insert(mu, parse_coeff(&entry.coeff)?).is_some() {
            return Err(Error::Format(format!(
                "partition {:?} listed twice",
                entry.partition
            )));
        }
    }
    Ok(HExpansion::new(rank, degree, coeffs)?)
}

pub fn kschur_to_json(s: &KSchur) -> KSchurJson {
    KSchurJson {
        k: s.lambda.rank().k(),
        lambda: s.lambda.rows().to_vec(),
        element: element_to_json(&s.element),
        h_expansion: h_expansion_to_json(&s.h_expansion),
    }
}

/// Structural decoding only; whether the content really is `𝔰_λ` is the
/// caller's business.
pub fn kschur_from_json(json: &KSchurJson) -> Result<KSchur> {
    let rank = Rank::new(json.k)?;
    let lambda = BoundedPartition::new(rank, json.lambda.clone())?;
    if json.element.k != json.k || json.h_expansion.k != json.k {
        return Err(Error::Format("rank differs between fields".into()));
    }
    Ok(KSchur {
        element: element_from_json(&json.element)?,
        h_expansion: h_expansion_from_json(&json.h_expansion, lambda.size())?,
        lambda,
    })
}

/// Coroots as `n` integers.
pub fn coroot_to_json(mu: &CorootVector) -> Vec<i64> {
    mu.coords().to_vec()
}

/// Weights as `n + 1` integers, the `δ` coordinate last.
pub fn weight_to_json(lam: &WeightVector) -> Vec<i64> {
    let mut out = lam.fw_coords().to_vec();
    out.push(lam.delta_coord());
    out
}

pub fn weight_from_json(rank: Rank, coords: &[i64]) -> Result<WeightVector> {
    let (delta, fw) = coords
        .split_last()
        .ok_or_else(|| Error::Format("empty weight".into()))?;
    Ok(WeightVector::new(rank, fw.to_vec(), *delta)?)
}

pub fn coroot_from_json(rank: Rank, coords: &[i64]) -> Result<CorootVector> {
    Ok(CorootVector::new(rank, coords.to_vec())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kschur_core::nilcoxeter::h_gen;

    fn rank(k: usize) -> Rank {
        Rank::new(k).unwrap()
    }

    #[test]
    fn element_roundtrip_and_order() {
        let h2 = h_gen(rank(3), 2).unwrap();
        let json = element_to_json(&h2);
        let words: Vec<_> = json.terms.iter().map(|t| t.word.clone()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert!(json.terms.iter().all(|t| t.coeff == "1"));
        assert_eq!(element_from_json(&json).unwrap(), h2);
        let text = serde_json::to_string(&json).unwrap();
        assert!(
            text.starts_with(r#"{"k":3,"terms":[{"word":[0,3],"coeff":"1"},{"word":[1,0]"#),
            "{text}"
        );
    }

    #[test]
    fn rejects_bad_elements() {
        let bad = ElementJson {
            k: 2,
            terms: vec![TermJson {
                word: vec![1, 1],
                coeff: "1".into(),
            }],
        };
        assert!(matches!(element_from_json(&bad), Err(Error::Format(_))));
        let bad = ElementJson {
            k: 2,
            terms: vec![TermJson {
                word: vec![1],
                coeff: "x".into(),
            }],
        };
        assert!(element_from_json(&bad).is_err());
        let bad = ElementJson {
            k: 2,
            terms: vec![TermJson {
                word: vec![3],
                coeff: "1".into(),
            }],
        };
        assert!(matches!(element_from_json(&bad), Err(Error::Domain(_))));
        let bad = ElementJson {
            k: 1,
            terms: vec![],
        };
        assert!(element_from_json(&bad).is_err());
    }

    #[test]
    fn big_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let json = ElementJson {
            k: 2,
            terms: vec![TermJson {
                word: vec![0],
                coeff: big.to_string(),
            }],
        };
        let a = element_from_json(&json).unwrap();
        assert_eq!(element_to_json(&a), json);
    }

    #[test]
    fn vectors() {
        let r = rank(2);
        let lam = WeightVector::simple_root(r, 0).unwrap();
        assert_eq!(weight_to_json(&lam), vec![2, -1, -1, 1]);
        assert_eq!(weight_from_json(r, &weight_to_json(&lam)).unwrap(), lam);
        let c = CorootVector::central(r);
        assert_eq!(coroot_from_json(r, &coroot_to_json(&c)).unwrap(), c);
        assert!(weight_from_json(r, &[]).is_err());
    }
}
