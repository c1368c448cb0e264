//! JSON forms of elements, weights, coweights and inequalities.
//!
//! Rationals are written as `"p/q"` strings and read from strings or
//! integers.

use affdem::rational::parse_rat;
use affdem::{AffineWeylGroup, Coweight, FiniteCartanData, Inequality, Rat, Weight, WeylElt};
use anyhow::{bail, Context, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => parse_rat(&s).map(JsonRat).map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(JsonRat(affdem::rational::int(n))),
        }
    }
}

fn rats(v: &[Rat]) -> Vec<JsonRat> {
    v.iter().cloned().map(JsonRat).collect()
}

fn unwrap_rats(v: &[JsonRat]) -> Vec<Rat> {
    v.iter().map(|r| r.0.clone()).collect()
}

/// An element by its canonical word, with the finite matrix and
/// translation part. On input the word alone suffices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub word: Vec<usize>,
    #[serde(default)]
    pub fin_matrix: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub xi: Option<Vec<i64>>,
}

impl ElementJson {
    pub fn new(group: &AffineWeylGroup, u: &WeylElt) -> Self {
        ElementJson { word: group.canonical_word(u), fin_matrix: Some(group.fin_matrix(u)), xi: Some(u.xi().to_vec()) }
    }

    /// Rebuilds the element, checking the word against the matrix form
    /// when both are present.
    pub fn to_element(&self, group: &AffineWeylGroup) -> Result<WeylElt> {
        let from_word = group.from_word(&self.word)?;
        match (&self.fin_matrix, &self.xi) {
            (Some(m), Some(xi)) => {
                let from_matrix = group.from_matrix(m, xi)?;
                if from_matrix != from_word {
                    bail!("word and (fin_matrix, xi) describe different elements");
                }
                Ok(from_word)
            }
            (None, None) => Ok(from_word),
            _ => bail!("fin_matrix and xi must be given together"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub fin: Vec<JsonRat>,
    pub level: JsonRat,
    pub delta: JsonRat,
}

impl WeightJson {
    pub fn new(w: &Weight) -> Self {
        WeightJson { fin: rats(&w.fin), level: JsonRat(w.level.clone()), delta: JsonRat(w.delta.clone()) }
    }

    pub fn to_weight(&self, data: &FiniteCartanData) -> Result<Weight> {
        Ok(data.weight(unwrap_rats(&self.fin), self.level.0.clone(), self.delta.0.clone())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoweightJson {
    pub fin: Vec<JsonRat>,
    pub d: JsonRat,
    pub k: JsonRat,
}

impl CoweightJson {
    pub fn new(c: &Coweight) -> Self {
        CoweightJson { fin: rats(&c.fin), d: JsonRat(c.d.clone()), k: JsonRat(c.k.clone()) }
    }

    pub fn to_coweight(&self, data: &FiniteCartanData) -> Result<Coweight> {
        Ok(data.coweight(unwrap_rats(&self.fin), self.d.0.clone(), self.k.0.clone())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityJson {
    pub family: String,
    pub i: usize,
    pub v: ElementJson,
    pub normal: CoweightJson,
    pub rhs: JsonRat,
}

impl InequalityJson {
    pub fn new(group: &AffineWeylGroup, ineq: &Inequality) -> Self {
        InequalityJson {
            family: ineq.family.label().to_string(),
            i: ineq.index,
            v: ElementJson::new(group, &ineq.v),
            normal: CoweightJson::new(&ineq.normal),
            rhs: JsonRat(ineq.rhs.clone()),
        }
    }
}

/// A polytope vertex with one element `q` carrying `λ` to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub weight: WeightJson,
    pub q: ElementJson,
}

impl VertexJson {
    pub fn new(group: &AffineWeylGroup, mu: &Weight, q: &WeylElt) -> Self {
        VertexJson { weight: WeightJson::new(mu), q: ElementJson::new(group, q) }
    }
}

pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str, what: &str) -> Result<T> {
    serde_json::from_str(s).with_context(|| format!("invalid {what} JSON"))
}
