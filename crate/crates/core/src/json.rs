//! JSON interchange: posets (and frames, which share the format), maps,
//! spectra, sublocales and witness pairs.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::duality::DualSpace;
use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::order::Poset;

/// `{"n": 3, "le": [[0, 1], [1, 2], [0, 2]], "labels": ["a", "b", "c"]}`.
/// Reflexive pairs are optional; the relation must already be transitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub le: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PosetJson {
    /// Strict pairs only, in index order.
    pub fn from_poset(poset: &Poset) -> Self {
        PosetJson {
            n: poset.len(),
            le: poset.pairs().into_iter().filter(|(i, j)| i != j).collect(),
            labels: poset.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let poset = Poset::from_pairs(self.n, &self.le)?;
        match &self.labels {
            Some(labels) => poset.with_labels(labels.clone()),
            None => Ok(poset),
        }
    }

    pub fn to_frame(&self) -> Result<Frame> {
        Frame::from_poset(self.to_poset()?)
    }
}

/// `{"source": <poset>, "target": <poset>, "table": [..]}`, used both for
/// lattice maps between frames and monotone maps between posets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub source: PosetJson,
    pub target: PosetJson,
    pub table: Vec<usize>,
}

/// `{"filters": [[..], ..], "le": [[i, j], ..]}`: each prime filter as the
/// element indices it contains, and the strict inclusion order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub filters: Vec<Vec<usize>>,
    pub le: Vec<(usize, usize)>,
}

impl SpectrumJson {
    pub fn from_space(space: &DualSpace) -> Self {
        SpectrumJson {
            filters: space.filters().iter().map(BitSet::to_vec).collect(),
            le: space.poset().pairs().into_iter().filter(|(i, j)| i != j).collect(),
        }
    }
}

/// A pair of elements witnessing the failure of a law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub a: usize,
    pub b: usize,
}

impl From<(usize, usize)> for WitnessPair {
    fn from((a, b): (usize, usize)) -> Self {
        WitnessPair { a, b }
    }
}

/// A sublocale as its sorted member indices.
pub fn sublocale_json(members: &BitSet) -> Vec<usize> {
    members.to_vec()
}

/// Parse JSON, reporting syntax and shape errors with line and column.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    parse::<PosetJson>(text)?.to_poset()
}

pub fn parse_frame(text: &str) -> Result<Frame> {
    parse::<PosetJson>(text)?.to_frame()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::c3;

    #[test]
    fn poset_round_trip() {
        let p = Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap().with_labels(vec!["0".into(), "a".into(), "b".into()]).unwrap();
        let text = serde_json::to_string(&PosetJson::from_poset(&p)).unwrap();
        assert_eq!(text, r#"{"n":3,"le":[[0,1],[0,2]],"labels":["0","a","b"]}"#);
        let back = parse_poset(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.labels(), p.labels());
    }

    #[test]
    fn errors_carry_position() {
        let err = parse_poset("{\n  \"n\": 2,\n  \"le\": [[0, 1]\n}").unwrap_err();
        assert!(matches!(err, Error::Json { line: 4, .. }), "{err:?}");
        assert!(matches!(parse_poset(r#"{"n":2,"le":[[0,1],[1,0]]}"#), Err(Error::NotAntisymmetric(..))));
        assert!(matches!(parse_frame(r#"{"n":2,"le":[]}"#), Err(Error::NoMeet(..))));
    }

    #[test]
    fn spectrum_of_c3() {
        let frame = c3();
        let json = SpectrumJson::from_space(frame.spectrum().unwrap());
        assert_eq!(json.filters.len(), 2);
        assert_eq!(json.le.len(), 1);
    }
}
