use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::arith::binomial_u128;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::limits;
use crate::monomial::{Monomial, VarSet};

/// Sanity cap on parsed ambient sizes. Computation paths apply their own
/// tighter bounds; this only rejects nonsense headers.
const MAX_AMBIENT: usize = 4096;

/// Monomial ideal given by its unique minimal generating set, kept sorted in
/// the canonical monomial order. An empty generator list is the zero ideal;
/// the generator `1` alone is the unit ideal.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    #[serde(rename = "generators")]
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens` in `n` variables, reducing to the
    /// minimal generating set.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.ambient() != n {
                return Err(Error::input(format!(
                    "generator {g} lives in {} variables, expected {n}",
                    g.ambient()
                )));
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    /// Builds from a nonempty generator list, inferring the ambient size.
    pub fn normalize(gens: Vec<Monomial>) -> Result<Self> {
        let n = gens.first().map(Monomial::ambient).ok_or_else(|| {
            Error::input("cannot infer ambient size from an empty generator list")
        })?;
        Self::new(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::unit(n)],
        }
    }

    pub fn ambient_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// True for the zero ideal and anything short of the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal generated by all degree `j` monomials of the ideal.
    pub fn degree_slice(&self, j: usize) -> Result<MonomialIdeal> {
        let gens = monomials_of_degree(self.n, j)?
            .into_iter()
            .filter(|m| self.contains(m))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Ideal generated by the squarefree degree `j` monomials of the ideal.
    /// Note a non-squarefree generator divides no squarefree monomial, so it
    /// contributes nothing here.
    pub fn squarefree_slice(&self, j: usize) -> Result<MonomialIdeal> {
        if self.n > VarSet::MAX_VARS {
            return Err(Error::resource(format!(
                "squarefree enumeration needs ambient <= {}, got {}",
                VarSet::MAX_VARS,
                self.n
            )));
        }
        let gens = (1..=self.n)
            .combinations(j)
            .map(|c| Monomial::squarefree(self.n, VarSet::from_indices(c)))
            .filter(|m| self.contains(m))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Stanley-Reisner complex of the ideal. Requires a proper squarefree
    /// ideal; the zero ideal gives the full simplex.
    pub fn stanley_reisner(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::stanley_reisner(self)
    }

    /// Parses the ideal text format: an `n=<int>` header line, then one
    /// monomial per line as `*`-joined `x<i>` / `x<i>^<e>` tokens (or `1`).
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut gens = Vec::new();
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
                    Error::input(format!("line {lineno}: bad ambient size '{rest}'"))
                })?;
                if parsed > MAX_AMBIENT {
                    return Err(Error::input(format!(
                        "line {lineno}: ambient size {parsed} exceeds {MAX_AMBIENT}"
                    )));
                }
                n = Some(parsed);
                continue;
            }
            let n = n.ok_or_else(|| {
                Error::input(format!("line {lineno}: monomial before the n= header"))
            })?;
            gens.push(parse_monomial(n, line, lineno)?);
        }
        let n = n.ok_or_else(|| Error::input("missing n= header"))?;
        MonomialIdeal::new(n, gens)
    }
}

fn parse_monomial(n: usize, line: &str, lineno: usize) -> Result<Monomial> {
    if line == "1" {
        return Ok(Monomial::unit(n));
    }
    let mut exps = vec![0u32; n];
    for token in line.split('*') {
        let token = token.trim();
        let body = token
            .strip_prefix('x')
            .ok_or_else(|| Error::input(format!("line {lineno}: unknown token '{token}'")))?;
        let (idx_str, exp_str) = match body.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (body, None),
        };
        let idx: usize = idx_str
            .parse()
            .map_err(|_| Error::input(format!("line {lineno}: bad variable index in '{token}'")))?;
        if idx == 0 || idx > n {
            return Err(Error::input(format!(
                "line {lineno}: variable x{idx} outside 1..={n}"
            )));
        }
        let exp: u32 = match exp_str {
            Some(e) => e
                .parse()
                .map_err(|_| Error::input(format!("line {lineno}: bad exponent in '{token}'")))?,
            None => 1,
        };
        exps[idx - 1] += exp;
    }
    Ok(Monomial::new(exps))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        if self.is_zero() {
            writeln!(f, "# zero ideal")?;
        }
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.gens.iter().map(ToString::to_string).join(", ")
        )
    }
}

/// Reduces to the minimal generating set: drops duplicates and anything
/// divisible by another generator, then sorts canonically.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// All monomials of total degree `d` in `n` variables, canonical order.
pub fn monomials_of_degree(n: usize, d: usize) -> Result<Vec<Monomial>> {
    let count = binomial_u128(n + d.saturating_sub(1), d);
    if count > limits::max_enumeration() as u128 {
        return Err(Error::resource(format!(
            "enumerating {count} monomials of degree {d} in {n} variables"
        )));
    }
    if n == 0 {
        return Ok(if d == 0 {
            vec![Monomial::unit(0)]
        } else {
            Vec::new()
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut exps = vec![0u32; n];
    fill(&mut out, &mut exps, 0, d);
    out.sort();
    return Ok(out);

    fn fill(out: &mut Vec<Monomial>, exps: &mut [u32], idx: usize, remaining: usize) {
        if idx + 1 == exps.len() {
            exps[idx] = remaining as u32;
            out.push(Monomial::new(exps.to_vec()));
            exps[idx] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[idx] = e as u32;
            fill(out, exps, idx + 1, remaining - e);
        }
        exps[idx] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_ideal, sqf};

    #[test]
    fn normalize_removes_redundant_generators() {
        let x1 = Monomial::new(vec![1, 0, 0]);
        let x1x2 = Monomial::new(vec![1, 1, 0]);
        let x2x3 = Monomial::new(vec![0, 1, 1]);
        let i = MonomialIdeal::normalize(vec![x1x2, x1.clone(), x2x3.clone(), x1.clone()]).unwrap();
        assert_eq!(i.generators(), &[x1, x2x3]);
    }

    #[test]
    fn normalize_is_idempotent_and_order_free() {
        let gens = vec![
            Monomial::new(vec![2, 1, 0]),
            Monomial::new(vec![1, 0, 1]),
            Monomial::new(vec![2, 1, 1]),
            Monomial::new(vec![0, 3, 0]),
        ];
        let mut rev = gens.clone();
        rev.reverse();
        let a = MonomialIdeal::normalize(gens).unwrap();
        let b = MonomialIdeal::normalize(rev).unwrap();
        assert_eq!(a, b);
        let again = MonomialIdeal::new(3, a.generators().to_vec()).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn unit_ideal_collapses() {
        let i = MonomialIdeal::new(2, vec![Monomial::unit(2), Monomial::new(vec![1, 1])]).unwrap();
        assert!(i.is_unit());
        assert!(!i.is_proper());
        assert_eq!(i.generators().len(), 1);
    }

    #[test]
    fn zero_ideal_flags() {
        let z = MonomialIdeal::zero(4);
        assert!(z.is_zero());
        assert!(z.is_proper());
        assert_eq!(z.min_degree(), None);
        assert!(!z.contains(&Monomial::new(vec![1, 0, 0, 0])));
    }

    #[test]
    fn membership_is_divisibility() {
        let i = example_ideal();
        assert!(i.contains(&sqf(9, &[1, 2, 3, 7])));
        assert!(!i.contains(&sqf(9, &[1, 2, 4, 5, 8])));
        let deep = sqf(9, &[4, 5, 6, 7]).mul(&sqf(9, &[4, 5]));
        assert!(i.contains(&deep));
    }

    #[test]
    fn degree_slice_matches_enumeration_oracle() {
        let i = example_ideal();
        let slice = i.degree_slice(3).unwrap();
        assert_eq!(slice.generators(), &[sqf(9, &[1, 2, 3])]);

        // Oracle: every degree-4 monomial in the slice ideal must be a
        // degree-4 member of the original, and conversely.
        let slice4 = i.degree_slice(4).unwrap();
        for m in monomials_of_degree(9, 4).unwrap() {
            assert_eq!(slice4.contains(&m), i.contains(&m), "mismatch at {m}");
        }
    }

    #[test]
    fn degree_slice_of_nonsquarefree() {
        // Slicing picks up padded multiples of lower degree generators.
        let i = MonomialIdeal::new(
            2,
            vec![Monomial::new(vec![2, 0]), Monomial::new(vec![0, 3])],
        )
        .unwrap();
        let s = i.degree_slice(3).unwrap();
        let expected = vec![
            Monomial::new(vec![3, 0]),
            Monomial::new(vec![2, 1]),
            Monomial::new(vec![0, 3]),
        ];
        assert_eq!(s.generators(), expected.as_slice());
    }

    #[test]
    fn squarefree_slice_drops_nonsquarefree_generators() {
        let i = MonomialIdeal::new(1, vec![Monomial::new(vec![2])]).unwrap();
        assert!(i.squarefree_slice(2).unwrap().is_zero());
    }

    #[test]
    fn squarefree_slice_of_example() {
        let i = example_ideal();
        let s = i.squarefree_slice(4).unwrap();
        let mut expected = vec![sqf(9, &[4, 5, 6, 7])];
        for v in 4..=9 {
            expected.push(sqf(9, &[1, 2, 3, v]));
        }
        expected.sort();
        assert_eq!(s.generators(), expected.as_slice());
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let text = "# comment\nn=9\n\nx1*x2*x3\nx4*x5*x6*x7\nx1*x2*x4*x5*x8*x9\n";
        let i = MonomialIdeal::parse(text).unwrap();
        assert_eq!(i, example_ideal());
        let printed = i.to_string();
        assert_eq!(MonomialIdeal::parse(&printed).unwrap(), i);
    }

    #[test]
    fn parse_exponents_and_unit() {
        let i = MonomialIdeal::parse("n=3\nx1^2*x3\nx2\n").unwrap();
        assert_eq!(
            i.generators(),
            &[Monomial::new(vec![0, 1, 0]), Monomial::new(vec![2, 0, 1]),]
        );
        let u = MonomialIdeal::parse("n=2\n1\n").unwrap();
        assert!(u.is_unit());
        let z = MonomialIdeal::parse("n=5\n").unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = MonomialIdeal::parse("n=2\ny1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = MonomialIdeal::parse("x1\n").unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");
        let err = MonomialIdeal::parse("n=2\nx3\n").unwrap_err();
        assert!(err.to_string().contains("x3"), "{err}");
        assert!(MonomialIdeal::parse("").is_err());
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 4).unwrap().len(), 15);
        assert_eq!(monomials_of_degree(9, 3).unwrap().len(), 165);
        assert_eq!(monomials_of_degree(0, 0).unwrap().len(), 1);
        assert_eq!(monomials_of_degree(0, 2).unwrap().len(), 0);
    }

    #[test]
    fn json_roundtrip_uses_bare_exponent_vectors() {
        let i = MonomialIdeal::parse("n=3\nx1^2*x3\nx2\n").unwrap();
        let json = serde_json::to_string(&i).unwrap();
        assert_eq!(json, r#"{"n":3,"generators":[[0,1,0],[2,0,1]]}"#);
        let back: MonomialIdeal = serde_json::from_str(&json).unwrap();
        assert_eq!(back, i);
    }
}
