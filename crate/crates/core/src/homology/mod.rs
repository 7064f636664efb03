//! Exact reduced homology over the integers.
//!
//! Homology is always reduced: the chain complex is augmented by a single
//! (−1)-cell, so the empty complex has `H̃_{-1} = Z` and behaves as `S^{-1}`.

mod chains;
mod graph;
mod matrix;
mod reference;
mod snf;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graphs::Vertex;

use chains::Chains;

pub use graph::independence_homology;
pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm};
#[doc(hidden)]
pub use reference::reference_smith_diagonal;

/// `Z^betti ⊕ Z/d_1 ⊕ ... ⊕ Z/d_r` with `d_1 | d_2 | ... | d_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub(crate) fn new(betti: usize, torsion: Vec<BigInt>) -> Self {
        let torsion = torsion
            .into_iter()
            .map(|d| d.magnitude().clone())
            .filter(|d| !d.is_one())
            .collect();
        HomologyGroup {
            betti,
            torsion: invariant_factors(torsion),
        }
    }

    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    fn tensor(&self, other: &HomologyGroup) -> HomologyGroup {
        let mut torsion = Vec::new();
        for _ in 0..self.betti {
            torsion.extend(other.torsion.iter().cloned());
        }
        for _ in 0..other.betti {
            torsion.extend(self.torsion.iter().cloned());
        }
        torsion.extend(self.tor(other));
        HomologyGroup {
            betti: self.betti * other.betti,
            torsion,
        }
    }

    fn tor(&self, other: &HomologyGroup) -> Vec<BigUint> {
        let mut out = Vec::new();
        for a in &self.torsion {
            for b in &other.torsion {
                let g = a.gcd(b);
                if !g.is_one() {
                    out.push(g);
                }
            }
        }
        out
    }

    fn direct_sum(&mut self, other: HomologyGroup) {
        self.betti += other.betti;
        self.torsion.extend(other.torsion);
    }

    fn normalize(&mut self) {
        self.torsion = invariant_factors(std::mem::take(&mut self.torsion));
    }
}

/// Rewrites a list of cyclic orders as invariant factors in divisibility order.
fn invariant_factors(mut d: Vec<BigUint>) -> Vec<BigUint> {
    d.retain(|x| !x.is_one());
    d.sort();
    loop {
        let mut stable = true;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if !d[j].is_multiple_of(&d[i]) {
                    let (g, l) = (d[i].gcd(&d[j]), d[i].lcm(&d[j]));
                    d[i] = g;
                    d[j] = l;
                    stable = false;
                }
            }
        }
        if stable {
            d.retain(|x| !x.is_one());
            return d;
        }
    }
}

/// Reduced homology groups by degree; only nonzero groups are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    groups: BTreeMap<i32, HomologyGroup>,
}

impl HomologyProfile {
    /// All reduced groups vanish (the profile of a point).
    pub fn zero() -> Self {
        Self::default()
    }

    /// `S^n` for `n ≥ −1`.
    pub fn sphere(n: i32) -> Self {
        Self::wedge_of_spheres(n, 1)
    }

    /// A wedge of `count` copies of `S^n`.
    pub fn wedge_of_spheres(n: i32, count: usize) -> Self {
        let mut p = Self::zero();
        p.insert(n, HomologyGroup::free(count));
        p
    }

    pub fn insert(&mut self, degree: i32, group: HomologyGroup) {
        assert!(degree >= -1, "reduced homology starts in degree -1");
        if group.is_zero() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, group);
        }
    }

    pub fn get(&self, degree: i32) -> Option<&HomologyGroup> {
        self.groups.get(&degree)
    }

    pub fn betti(&self, degree: i32) -> usize {
        self.get(degree).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, degree: i32) -> &[BigUint] {
        self.get(degree).map_or(&[], |g| &g.torsion)
    }

    pub fn groups(&self) -> impl Iterator<Item = (i32, &HomologyGroup)> {
        self.groups.iter().map(|(k, g)| (*k, g))
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| !g.torsion.is_empty())
    }

    /// The degree `n` when this is the profile of `S^n`.
    pub fn as_sphere(&self) -> Option<i32> {
        match self.groups.iter().next() {
            Some((&k, g)) if self.groups.len() == 1 && g.betti == 1 && g.torsion.is_empty() => {
                Some(k)
            }
            _ => None,
        }
    }

    /// `(n, count)` when this is the profile of a wedge of `count ≥ 1` copies of `S^n`.
    pub fn as_wedge(&self) -> Option<(i32, usize)> {
        match self.groups.iter().next() {
            Some((&k, g)) if self.groups.len() == 1 && g.torsion.is_empty() => Some((k, g.betti)),
            _ => None,
        }
    }

    /// Point profile or a single sphere.
    pub fn is_point_or_sphere(&self) -> bool {
        self.is_zero() || self.as_sphere().is_some()
    }

    /// Moves every group up by `d` degrees (the effect of `d` suspensions).
    pub fn shift(&self, d: i32) -> Result<Self> {
        let mut out = Self::zero();
        for (&k, g) in &self.groups {
            if k + d < -1 {
                return Err(Error::param(format!(
                    "cannot desuspend: group in degree {k} would land below -1"
                )));
            }
            out.groups.insert(k + d, g.clone());
        }
        Ok(out)
    }

    pub fn suspend(&self) -> Self {
        self.shift(1).expect("suspension raises degrees")
    }

    /// Homology of the join: `H̃_{n+1}(K*L) = ⊕_{i+j=n} H̃_i⊗H̃_j ⊕ ⊕_{i+j=n-1} Tor(H̃_i,H̃_j)`.
    pub fn join(&self, other: &HomologyProfile) -> HomologyProfile {
        let mut acc: BTreeMap<i32, HomologyGroup> = BTreeMap::new();
        for (&i, a) in &self.groups {
            for (&j, b) in &other.groups {
                acc.entry(i + j + 1).or_default().direct_sum(a.tensor(b));
                let tor = a.tor(b);
                if !tor.is_empty() {
                    acc.entry(i + j + 2).or_default().direct_sum(HomologyGroup {
                        betti: 0,
                        torsion: tor,
                    });
                }
            }
        }
        let mut out = Self::zero();
        for (k, mut g) in acc {
            g.normalize();
            out.insert(k, g);
        }
        out
    }

    /// Lowest degree with a nonzero group.
    pub fn min_degree(&self) -> Option<i32> {
        self.groups.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.groups.keys().next_back().copied()
    }

    pub fn connectivity(&self) -> Connectivity {
        match self.min_degree() {
            None => Connectivity::All,
            Some(k) => Connectivity::UpTo(k - 1),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, g) in &self.groups {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "H{k} = ")?;
            let mut parts = Vec::new();
            match g.betti {
                0 => {}
                1 => parts.push("Z".to_string()),
                b => parts.push(format!("Z^{b}")),
            }
            parts.extend(g.torsion.iter().map(|d| format!("Z/{d}")));
            write!(f, "{}", parts.join(" + "))?;
        }
        Ok(())
    }
}

/// Largest `c` with `H̃_i = 0` for all `i ≤ c`, or `All` when everything vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connectivity {
    UpTo(i32),
    All,
}

impl Connectivity {
    /// Whether the connectivity is at least `c`.
    pub fn at_least(self, c: i64) -> bool {
        match self {
            Connectivity::All => true,
            Connectivity::UpTo(k) => i64::from(k) >= c,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::All => write!(f, "all"),
            Connectivity::UpTo(k) => write!(f, "{k}"),
        }
    }
}

impl Serialize for Connectivity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Connectivity::All => s.serialize_str("all"),
            Connectivity::UpTo(k) => s.serialize_i32(*k),
        }
    }
}

impl<'de> Deserialize<'de> for Connectivity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Level(i32),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Level(k) => Ok(Connectivity::UpTo(k)),
            Raw::Word(w) if w == "all" => Ok(Connectivity::All),
            Raw::Word(w) => Err(de::Error::custom(format!("bad connectivity {w:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    betti: usize,
    torsion: Vec<TorsionJson>,
}

/// Torsion coefficients print as JSON numbers, or as decimal strings beyond `u64`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TorsionJson {
    Small(u64),
    Big(String),
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.groups.len()))?;
        for (k, g) in &self.groups {
            let torsion = g
                .torsion
                .iter()
                .map(|d| match d.to_u64() {
                    Some(x) => TorsionJson::Small(x),
                    None => TorsionJson::Big(d.to_string()),
                })
                .collect();
            map.serialize_entry(
                &k.to_string(),
                &GroupJson {
                    betti: g.betti,
                    torsion,
                },
            )?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for HomologyProfile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, GroupJson> = BTreeMap::deserialize(d)?;
        let mut out = HomologyProfile::zero();
        for (k, g) in raw {
            let degree: i32 = k
                .parse()
                .map_err(|_| de::Error::custom(format!("bad degree {k:?}")))?;
            if degree < -1 {
                return Err(de::Error::custom(format!("degree {degree} below -1")));
            }
            let torsion = g
                .torsion
                .into_iter()
                .map(|t| match t {
                    TorsionJson::Small(x) => Ok(BigUint::from(x)),
                    TorsionJson::Big(s) => s
                        .parse::<BigUint>()
                        .map_err(|_| de::Error::custom(format!("bad torsion coefficient {s:?}"))),
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if torsion.iter().any(|t| *t < BigUint::from(2u8)) {
                return Err(de::Error::custom("torsion coefficients must be at least 2"));
            }
            let group = HomologyGroup {
                betti: g.betti,
                torsion: invariant_factors(torsion),
            };
            out.insert(degree, group);
        }
        Ok(out)
    }
}

/// Reduced integral homology of `k`.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    if k.is_empty() {
        return HomologyProfile::sphere(-1);
    }
    if has_cone_vertex(k) {
        return HomologyProfile::zero();
    }
    let (n, facets) = relabel_facets(k);
    if n <= 128 {
        Chains::<u128>::from_facets(&facets).homology()
    } else {
        Chains::<Vec<u32>>::from_facets(&facets).homology()
    }
}

pub fn homological_connectivity(k: &SimplicialComplex) -> Connectivity {
    reduced_homology(k).connectivity()
}

/// A vertex lying in every facet makes the complex a cone.
fn has_cone_vertex(k: &SimplicialComplex) -> bool {
    let facets = k.facets();
    let Some((first, rest)) = facets.split_first() else {
        return false;
    };
    first
        .vertices()
        .iter()
        .any(|v| rest.iter().all(|f| f.contains(*v)))
}

fn relabel_facets(k: &SimplicialComplex) -> (usize, Vec<Vec<u32>>) {
    let verts = k.vertices();
    let facets = k
        .facets()
        .iter()
        .map(|f| {
            f.vertices()
                .iter()
                .map(|v| verts.binary_search(v).expect("facet vertex") as u32)
                .collect()
        })
        .collect();
    (verts.len(), facets)
}

/// Signed boundary matrix `∂_k : C_k → C_{k−1}` with simplices in lex order.
/// `∂_0` is the augmentation onto the single (−1)-cell; `∂_{−1}` has no rows.
pub fn boundary_matrix(k: &SimplicialComplex, degree: i32) -> Result<IntegerMatrix> {
    if degree < -1 || degree > k.dim() {
        return Err(Error::param(format!(
            "degree {degree} outside -1..={}",
            k.dim()
        )));
    }
    if degree == -1 {
        return Ok(IntegerMatrix::zeros(0, 1));
    }
    let faces = k.faces();
    let of_dim = |d: i32| -> Vec<Vec<Vertex>> {
        faces
            .iter()
            .filter(|f| f.dim() as i32 == d)
            .map(|f| f.vertices().to_vec())
            .collect()
    };
    let cells = of_dim(degree);
    if degree == 0 {
        let cols = cells.iter().map(|_| vec![(0, BigInt::one())]).collect();
        return Ok(IntegerMatrix::from_columns(1, cols));
    }
    let lower = of_dim(degree - 1);
    let cols = cells
        .iter()
        .map(|cell| {
            let mut col: Vec<(usize, BigInt)> = (0..cell.len())
                .map(|i| {
                    let mut face = cell.clone();
                    face.remove(i);
                    let row = lower.binary_search(&face).expect("face present");
                    (row, BigInt::from(if i % 2 == 0 { 1 } else { -1 }))
                })
                .collect();
            col.sort_by_key(|e| e.0);
            col
        })
        .collect();
    Ok(IntegerMatrix::from_columns(lower.len(), cols))
}

/// Homology by the textbook route: dense boundary matrices reduced by the
/// reference Smith form. Only for small complexes.
#[doc(hidden)]
pub fn reference_homology(k: &SimplicialComplex) -> HomologyProfile {
    let dim = k.dim();
    let mut profile = HomologyProfile::zero();
    if dim < 0 {
        return HomologyProfile::sphere(-1);
    }
    let diag: Vec<Vec<BigInt>> = (0..=dim + 1)
        .map(|d| {
            if d > dim {
                Vec::new()
            } else {
                reference_smith_diagonal(&boundary_matrix(k, d).expect("in range").to_dense())
            }
        })
        .collect();
    let rank = |d: i32| -> usize {
        if d < 0 || d > dim {
            0
        } else {
            diag[d as usize].len()
        }
    };
    let faces = k.faces();
    for d in -1..=dim {
        let n = if d == -1 {
            1
        } else {
            faces.iter().filter(|f| f.dim() as i32 == d).count()
        };
        let torsion = if d + 1 <= dim {
            diag[(d + 1) as usize].clone()
        } else {
            Vec::new()
        };
        profile.insert(d, HomologyGroup::new(n - rank(d) - rank(d + 1), torsion));
    }
    profile
}

pub(crate) fn chains_homology_of_graph(nbr: &[crate::graphs::bitset::BitSet]) -> HomologyProfile {
    if nbr.is_empty() {
        return HomologyProfile::sphere(-1);
    }
    if nbr.len() <= 128 {
        Chains::<u128>::from_independent_sets(nbr).homology()
    } else {
        Chains::<Vec<u32>>::from_independent_sets(nbr).homology()
    }
}

#[cfg(test)]
mod tests;
