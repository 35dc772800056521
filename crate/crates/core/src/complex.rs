use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, VarSet};

/// Simplicial complex on the vertex set `{1, ..., n}`, stored as the
/// antichain of facets. No facets at all is the void complex; the single
/// facet `{}` is the empty complex. Both are legal and kept distinct.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Builds a complex from any family of faces, keeping the maximal ones.
    pub fn from_facets<I: IntoIterator<Item = VarSet>>(n: usize, faces: I) -> Result<Self> {
        if n > VarSet::MAX_VARS {
            return Err(Error::resource(format!(
                "complexes support at most {} vertices, got {n}",
                VarSet::MAX_VARS
            )));
        }
        let full = VarSet::full(n);
        let mut candidates = Vec::new();
        for f in faces {
            if !f.is_subset_of(full) {
                return Err(Error::input(format!(
                    "facet {f} has a vertex outside 1..={n}"
                )));
            }
            candidates.push(f);
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(candidates),
        })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    /// The complex `{{}}` with no vertices but one (empty) face.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VarSet::empty()],
        }
    }

    pub fn full_simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VarSet::full(n)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VarSet::empty()]
    }

    /// Dimension: largest facet cardinality minus one. `None` for the void
    /// complex, `Some(-1)` for the empty complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.card() as i64 - 1).max()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Every face, grouped by cardinality; `faces[c]` holds the masks of the
    /// cardinality `c` faces in ascending mask order.
    pub fn faces_by_card(&self) -> Result<Vec<Vec<u32>>> {
        faces_by_card_of(&mask_vec(&self.facets))
    }

    /// Number of faces of each cardinality, starting with the empty face.
    /// Errors on the void complex, which has no f-vector.
    pub fn f_vector(&self) -> Result<FVector> {
        if self.is_void() {
            return Err(Error::input("the void complex has no f-vector"));
        }
        let faces = self.faces_by_card()?;
        Ok(FVector::new(
            faces.iter().map(|layer| layer.len() as u64).collect(),
        ))
    }

    /// Subcomplex generated by the facets of cardinality exactly `k + 1`.
    /// Void when the complex has no facet of that size.
    pub fn pure_skeleton(&self, k: usize) -> Result<Self> {
        match self.dim() {
            None => Err(Error::input("pure skeleton of the void complex")),
            Some(d) if (k as i64) > d => Err(Error::input(format!(
                "pure skeleton index {k} exceeds dimension {d}"
            ))),
            Some(_) => Ok(SimplicialComplex {
                n: self.n,
                facets: self
                    .facets
                    .iter()
                    .copied()
                    .filter(|f| f.card() == k + 1)
                    .collect(),
            }),
        }
    }

    /// Induced subcomplex on `w`: the faces contained in `w`, renumbered to
    /// the vertex set `{1, ..., |w|}` preserving order.
    pub fn induced_subcomplex(&self, w: VarSet) -> Self {
        let members: Vec<usize> = w.iter().collect();
        let relabel = |face: VarSet| -> VarSet {
            let mut mask = 0u32;
            for (new_idx, &old) in members.iter().enumerate() {
                if face.contains(old) {
                    mask |= 1 << new_idx;
                }
            }
            VarSet::from_mask(mask)
        };
        let induced = maximalize(self.facets.iter().map(|f| f.intersection(w)).collect());
        SimplicialComplex {
            n: members.len(),
            facets: induced.into_iter().map(relabel).collect(),
        }
    }

    /// A vertex lying in every facet, if one exists. Cones are acyclic, which
    /// makes this the cheap skip test in homology sweeps.
    pub fn cone_apex(&self) -> Option<usize> {
        let first = *self.facets.first()?;
        let common = self
            .facets
            .iter()
            .fold(first, |acc, f| acc.intersection(*f));
        common.min_member()
    }

    /// Stanley-Reisner complex of a squarefree ideal: the faces are the
    /// supports of the squarefree monomials outside the ideal. Facets are
    /// computed as complements of the minimal transversals of the generator
    /// supports. The zero ideal gives the full simplex.
    pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.ambient_vars();
        if !ideal.is_squarefree() {
            return Err(Error::input(
                "Stanley-Reisner complex requires a squarefree ideal",
            ));
        }
        if !ideal.is_proper() {
            return Err(Error::input(
                "Stanley-Reisner complex requires a proper ideal",
            ));
        }
        if n > VarSet::MAX_VARS {
            return Err(Error::resource(format!(
                "Stanley-Reisner complex needs ambient <= {}, got {n}",
                VarSet::MAX_VARS
            )));
        }
        let supports: Vec<VarSet> = ideal.generators().iter().map(Monomial::support).collect();
        let facets = minimal_transversals(&supports)
            .into_iter()
            .map(|t| t.complement(n));
        SimplicialComplex::from_facets(n, facets)
    }

    /// Inverse of `stanley_reisner`: the ideal generated by the minimal
    /// non-faces. Errors on the void complex, which corresponds to no ideal.
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::input(
                "the void complex has no Stanley-Reisner ideal",
            ));
        }
        let cofacets: Vec<VarSet> = self.facets.iter().map(|f| f.complement(self.n)).collect();
        let gens = minimal_transversals(&cofacets)
            .into_iter()
            .map(|s| Monomial::squarefree(self.n, s))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Parses the complex text format: an `n=<int>` header, then one facet
    /// per line as comma separated vertex indices (`-` for the empty facet).
    /// Blank lines and `#` comments are ignored. No facet lines is the void
    /// complex.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut facets = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n=") {
                if n.is_some() {
                    return Err(Error::input(format!("line {lineno}: duplicate n= header")));
                }
                let parsed: usize = rest.trim().parse().map_err(|_| {
                    Error::input(format!("line {lineno}: bad vertex count '{rest}'"))
                })?;
                if parsed > VarSet::MAX_VARS {
                    return Err(Error::input(format!(
                        "line {lineno}: vertex count {parsed} exceeds {}",
                        VarSet::MAX_VARS
                    )));
                }
                n = Some(parsed);
                continue;
            }
            let n = n.ok_or_else(|| {
                Error::input(format!("line {lineno}: facet before the n= header"))
            })?;
            if line == "-" {
                facets.push(VarSet::empty());
                continue;
            }
            let mut facet = VarSet::empty();
            for token in line.split(',') {
                let v: usize = token.trim().parse().map_err(|_| {
                    Error::input(format!("line {lineno}: bad vertex '{}'", token.trim()))
                })?;
                if v == 0 || v > n {
                    return Err(Error::input(format!(
                        "line {lineno}: vertex {v} outside 1..={n}"
                    )));
                }
                facet = facet.with(v);
            }
            facets.push(facet);
        }
        let n = n.ok_or_else(|| Error::input("missing n= header"))?;
        SimplicialComplex::from_facets(n, facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        if self.is_void() {
            writeln!(f, "# void complex")?;
        }
        for facet in &self.facets {
            if facet.is_empty() {
                writeln!(f, "-")?;
            } else {
                let mut first = true;
                for v in facet.iter() {
                    if !first {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                    first = false;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex(n={}, facets=[", self.n)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

pub(crate) fn mask_vec(facets: &[VarSet]) -> Vec<u32> {
    facets.iter().map(|f| f.mask()).collect()
}

/// Keeps the maximal sets, sorted by mask value.
fn maximalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.card()));
    let mut kept: Vec<VarSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Face enumeration shared with the homology sweep: expand every facet's
/// subset lattice into a deduplicating set, then bucket by cardinality.
pub(crate) fn faces_by_card_of(facet_masks: &[u32]) -> Result<Vec<Vec<u32>>> {
    use std::collections::HashSet;
    let max_card = facet_masks
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let limit = limits::max_enumeration();
    let mut seen: HashSet<u32> = HashSet::new();
    for &facet in facet_masks {
        // Carry-Rippler subset walk, including the empty set.
        let mut sub = facet;
        loop {
            seen.insert(sub);
            if seen.len() > limit {
                return Err(Error::resource(format!(
                    "face enumeration exceeded {limit} faces"
                )));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & facet;
        }
    }
    let mut layers: Vec<Vec<u32>> = vec![Vec::new(); max_card + 1];
    for mask in seen {
        layers[mask.count_ones() as usize].push(mask);
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    Ok(layers)
}

/// Minimal transversals of a set family: inclusion-minimal sets meeting every
/// member. An empty family has the single transversal `{}`; a family
/// containing the empty set has none.
pub(crate) fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut partial = vec![VarSet::empty()];
    for &edge in edges {
        let mut next: Vec<VarSet> = Vec::new();
        for &t in &partial {
            if !t.intersection(edge).is_empty() {
                next.push(t);
            } else {
                for v in edge.iter() {
                    next.push(t.with(v));
                }
            }
        }
        // Keep the antichain of minimal sets.
        next.sort_by_key(|s| s.card());
        let mut pruned: Vec<VarSet> = Vec::new();
        for s in next {
            if !pruned.iter().any(|p| p.is_subset_of(s)) {
                pruned.push(s);
            }
        }
        partial = pruned;
    }
    partial.sort();
    partial
}

/// Face counts by cardinality, starting with the empty face, so
/// `entry(0) = 1` for every nonvoid complex and `entry(r)` counts the faces
/// with `r` vertices.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Count of faces with `r` vertices; zero past the dimension.
    pub fn entry(&self, r: usize) -> u64 {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_faces(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
