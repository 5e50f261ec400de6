//! Order embeddings of posets into Boolean lattices, and their verification.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::SubsetMask;

/// Images of the elements `0..n` of a poset as subsets of `[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    m: usize,
    images: Vec<SubsetMask>,
}

impl Embedding {
    /// Every image must live in ground set `[m]`.
    pub fn new(m: usize, images: Vec<SubsetMask>) -> Result<Embedding> {
        if let Some((j, img)) = images
            .iter()
            .enumerate()
            .find(|(_, s)| s.ground_size() != m)
        {
            return Err(Error::InvalidArgument(format!(
                "image of element {j} lives in [{}], expected [{m}]",
                img.ground_size()
            )));
        }
        Ok(Embedding { m, images })
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[SubsetMask] {
        &self.images
    }

    pub fn image(&self, element: usize) -> &SubsetMask {
        &self.images[element]
    }

    /// Largest ground element used by any image.
    pub fn max_ground_element(&self) -> usize {
        self.images
            .iter()
            .filter_map(SubsetMask::max_element)
            .max()
            .unwrap_or(0)
    }

    /// The same images in the larger ground set `[m]`.
    pub fn widened(&self, m: usize) -> Result<Embedding> {
        let images = self
            .images
            .iter()
            .map(|s| s.with_ground_size(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Embedding { m, images })
    }
}

/// The downset embedding into `[n]`: element `j` maps to
/// `{ i + 1 : i ⪯ j }`.
pub fn folklore_embed(poset: &Poset) -> Embedding {
    let n = poset.len();
    let images = (0..n)
        .map(|j| {
            let mut img = SubsetMask::empty(n);
            img.insert(j + 1);
            for i in poset.predecessors(j) {
                img.insert(i + 1);
            }
            img
        })
        .collect();
    Embedding { m: n, images }
}

/// Why an embedding failed to be order-faithful.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The embedding has the wrong number of images.
    Length { expected: usize, actual: usize },
    /// Two distinct elements share an image.
    NotInjective { u: usize, v: usize },
    /// `u ⪯ v` but `f(u) ⊄ f(v)`.
    LostRelation { u: usize, v: usize },
    /// `u ⋠ v` but `f(u) ⊆ f(v)`.
    FakeRelation { u: usize, v: usize },
}

impl Violation {
    /// The offending ordered pair, if there is one.
    pub fn witness(&self) -> Option<(usize, usize)> {
        match *self {
            Violation::Length { .. } => None,
            Violation::NotInjective { u, v }
            | Violation::LostRelation { u, v }
            | Violation::FakeRelation { u, v } => Some((u, v)),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Length { expected, actual } => {
                write!(f, "expected {expected} images, got {actual}")
            }
            Violation::NotInjective { u, v } => write!(f, "elements {u} and {v} share an image"),
            Violation::LostRelation { u, v } => {
                write!(f, "{u} ⪯ {v} but f({u}) is not contained in f({v})")
            }
            Violation::FakeRelation { u, v } => {
                write!(f, "{u} and {v} are not related but f({u}) ⊆ f({v})")
            }
        }
    }
}

/// Checks `u ⪯ v ⟺ f(u) ⊆ f(v)` for every ordered pair, plus injectivity.
///
/// Pairs are scanned with `u` as the outer index, and the first failing pair
/// is returned.
pub fn check_embedding(poset: &Poset, embedding: &Embedding) -> Result<(), Violation> {
    let n = poset.len();
    if embedding.len() != n {
        return Err(Violation::Length {
            expected: n,
            actual: embedding.len(),
        });
    }
    let images = embedding.images();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if u < v && images[u] == images[v] {
                return Err(Violation::NotInjective { u, v });
            }
            let related = poset.less(u, v);
            let contained = images[u].is_subset(&images[v]);
            match (related, contained) {
                (true, false) => return Err(Violation::LostRelation { u, v }),
                (false, true) => return Err(Violation::FakeRelation { u, v }),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Text form: a header `n=<n> m=<m>`, then one line `j: <subset>` per
/// element `j` (0-indexed) with the subset written as 1-indexed
/// comma-separated ground elements, `-` when empty.
impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} m={}", self.images.len(), self.m)?;
        for (j, img) in self.images.iter().enumerate() {
            writeln!(f, "{j}: {img}")?;
        }
        Ok(())
    }
}

fn parse_key(line: usize, field: &str, key: &str) -> Result<usize> {
    field
        .strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected `{key}=<int>`, got {field:?}")))
}

impl FromStr for Embedding {
    type Err = Error;

    fn from_str(text: &str) -> Result<Embedding> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(hl, "header must be `n=<n> m=<m>`"));
        }
        let n = parse_key(hl, fields[0], "n")?;
        let m = parse_key(hl, fields[1], "m")?;

        let mut images = Vec::with_capacity(n);
        for (line, body) in lines {
            let (idx, set) = body
                .split_once(':')
                .ok_or_else(|| Error::parse(line, "expected `j: <subset>`"))?;
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::parse(line, format!("bad element index {idx:?}")))?;
            if idx != images.len() {
                return Err(Error::parse(
                    line,
                    format!("expected element {}, got {idx}", images.len()),
                ));
            }
            let img = SubsetMask::parse(m, set).map_err(|e| Error::parse(line, e.to_string()))?;
            images.push(img);
        }
        if images.len() != n {
            return Err(Error::parse(
                hl,
                format!("header says n={n}, found {} images", images.len()),
            ));
        }
        Ok(Embedding { m, images })
    }
}
