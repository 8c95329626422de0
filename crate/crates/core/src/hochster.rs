//! Stanley–Reisner complexes and Hochster's formula for the `Z^n`-graded
//! pieces of `H^i_m(R/I)` when `I` is a squarefree monomial ideal.
//!
//! Faces are bitmasks over the variables, so at most 63 vertices are
//! supported.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::primdec::monomial_generators;

/// A simplicial complex on vertices `0..n`, stored by its facets.
/// `facets == [0]` is the complex `{∅}`; an empty facet list is the void
/// complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > 63 {
            return Err(Error::Unsupported("more than 63 vertices".into()));
        }
        let all: BTreeSet<u64> = facets.into_iter().collect();
        if all.iter().any(|&f| f >> n != 0) {
            return Err(Error::invalid("facet uses a vertex outside the vertex set"));
        }
        let facets = all
            .iter()
            .copied()
            .filter(|&f| !all.iter().any(|&g| g != f && g & f == f))
            .collect();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// Dimension, with `{∅}` of dimension −1 and the void complex −2.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
            .unwrap_or(-2)
    }

    pub fn link(&self, face: u64) -> Result<SimplicialComplex> {
        if !self.contains(face) {
            return Err(Error::invalid(format!("{face:#b} is not a face")));
        }
        SimplicialComplex::from_facets(
            self.n,
            self.facets
                .iter()
                .filter(|&&f| f & face == face)
                .map(|&f| f & !face),
        )
    }

    /// All faces grouped by dimension: entry `k` holds the faces of
    /// dimension `k - 1`.
    pub fn faces_by_dim(&self) -> Vec<Vec<u64>> {
        let mut all = BTreeSet::new();
        for &f in &self.facets {
            // enumerate subsets of f
            let mut s = f;
            loop {
                all.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let top = (self.dim() + 1).max(0) as usize;
        let mut out = vec![Vec::new(); if self.facets.is_empty() { 0 } else { top + 1 }];
        for s in all {
            out[s.count_ones() as usize].push(s);
        }
        out
    }

    /// `dim H̃^k(Δ; F)` for `k = -1, 0, ..., dim Δ`, where `F` is `Q` for
    /// characteristic 0 and `F_p` otherwise. Entry `k + 1` holds degree `k`.
    pub fn reduced_cohomology_ranks(&self, characteristic: u32) -> Vec<usize> {
        let faces = self.faces_by_dim();
        if faces.is_empty() {
            return Vec::new();
        }
        // ranks[k] = rank of the coboundary C^{k-1} -> C^k (faces[k-1] -> faces[k])
        let mut ranks = vec![0usize; faces.len() + 1];
        for k in 1..faces.len() {
            ranks[k] = coboundary_rank(&faces[k - 1], &faces[k], characteristic);
        }
        (0..faces.len())
            .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }
}

fn coboundary_rank(lower: &[u64], upper: &[u64], characteristic: u32) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(upper.len());
    for &tau in upper {
        let mut row = vec![0i64; lower.len()];
        for (pos, v) in bits(tau).enumerate() {
            let sigma = tau & !(1u64 << v);
            let col = lower.binary_search(&sigma).expect("boundary faces are faces");
            row[col] = if pos % 2 == 0 { 1 } else { -1 };
        }
        rows.push(row);
    }
    if characteristic == 0 {
        rank_rational(rows)
    } else {
        rank_mod_p(rows, characteristic as i64)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

// fraction-free elimination keeps all entries integral
fn rank_rational(rows: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: Vec<Vec<i64>>, p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let inv = |a: i64| {
        // Fermat inverse
        let (mut base, mut e, mut acc) = (a, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let iv = inv(m[rank][col]);
        for v in &mut m[rank][col..] {
            *v = *v * iv % p;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (v, pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *v = (*v - f * pv).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The Stanley–Reisner complex of a proper squarefree monomial ideal:
/// faces are the supports `σ` with `x^σ ∉ I`.
pub fn stanley_reisner(ideal: &Ideal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::invalid("the unit ideal has no Stanley–Reisner complex"));
    }
    let n = ideal.ring().nvars();
    if n > 63 {
        return Err(Error::Unsupported("more than 63 variables".into()));
    }
    let gens = monomial_generators(ideal)?;
    let mut masks = Vec::with_capacity(gens.len());
    for g in &gens {
        if !g.is_squarefree() {
            return Err(Error::invalid(format!("{ideal} is not squarefree")));
        }
        masks.push(g.support().fold(0u64, |acc, i| acc | 1 << i));
    }
    let full = if n == 63 { u64::MAX >> 1 } else { (1u64 << n) - 1 };
    let is_face = |s: u64| masks.iter().all(|&g| g & !s != 0);
    let faces: Vec<u64> = (0..=full).filter(|&s| is_face(s)).collect();
    SimplicialComplex::from_facets(n, faces)
}

/// `dim_F H^i_m(R/I)_α` by Hochster's formula: zero unless `α ≤ 0` and its
/// negative support `σ` is a face, in which case it is
/// `dim H̃^{i-|σ|-1}(lk σ)`.
pub fn hochster_rank(
    complex: &SimplicialComplex,
    i: i64,
    degree: &[i64],
    characteristic: u32,
) -> Result<usize> {
    if degree.len() != complex.vertex_count() {
        return Err(Error::invalid(format!(
            "degree has {} entries for {} variables",
            degree.len(),
            complex.vertex_count()
        )));
    }
    if degree.iter().any(|&a| a > 0) {
        return Ok(0);
    }
    let sigma = degree
        .iter()
        .enumerate()
        .filter(|(_, &a)| a < 0)
        .fold(0u64, |acc, (k, _)| acc | 1 << k);
    if !complex.contains(sigma) {
        return Ok(0);
    }
    let ranks = complex.link(sigma)?.reduced_cohomology_ranks(characteristic);
    let k = i - sigma.count_ones() as i64 - 1;
    Ok(usize::try_from(k + 1)
        .ok()
        .and_then(|idx| ranks.get(idx).copied())
        .unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterReport {
    pub d: i64,
    /// `(α, dim H^d_m(R/I)_α)` for the requested degrees.
    pub ranks: Vec<(Vec<i64>, usize)>,
    /// Some squarefree degree `-σ` carries a nonzero piece.
    pub nonvanishing: bool,
}

fn squarefree_degrees(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u64..1 << n).map(move |s| (0..n).map(|k| -((s >> k & 1) as i64)).collect())
}

/// Ranks of `H^d_m(R/I)` at the given multidegrees, `d = dim R/I`. The
/// default box is every squarefree degree `-σ`. Over the coefficient field
/// of the ring of `I`.
pub fn top_local_cohomology_ranks(ideal: &Ideal, degrees: Option<&[Vec<i64>]>) -> Result<HochsterReport> {
    let complex = stanley_reisner(ideal)?;
    let n = complex.vertex_count();
    if n > 20 {
        return Err(Error::Unsupported(
            "Hochster ranks are enumerated for at most 20 variables".into(),
        ));
    }
    let ch = ideal.ring().characteristic() as u32;
    let d = ideal.krull_dim();
    let mut nonvanishing = false;
    let mut all = Vec::new();
    for alpha in squarefree_degrees(n) {
        let r = hochster_rank(&complex, d, &alpha, ch)?;
        nonvanishing |= r > 0;
        all.push((alpha, r));
    }
    let ranks = match degrees {
        None => all,
        Some(ds) => ds
            .iter()
            .map(|alpha| Ok((alpha.clone(), hochster_rank(&complex, d, alpha, ch)?)))
            .collect::<Result<_>>()?,
    };
    Ok(HochsterReport {
        d,
        ranks,
        nonvanishing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;
    use std::sync::Arc;

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()).unwrap()
    }

    fn euler_from_faces(c: &SimplicialComplex) -> i64 {
        c.faces_by_dim()
            .iter()
            .enumerate()
            .map(|(k, f)| {
                if k % 2 == 1 {
                    f.len() as i64
                } else {
                    -(f.len() as i64)
                }
            })
            .sum()
    }

    fn euler_from_ranks(c: &SimplicialComplex, ch: u32) -> i64 {
        c.reduced_cohomology_ranks(ch)
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }

    #[test]
    fn spheres_and_points() {
        let empty = SimplicialComplex::from_facets(3, [0]).unwrap();
        assert_eq!(empty.reduced_cohomology_ranks(0), vec![1]);
        let two_points = SimplicialComplex::from_facets(2, [0b01, 0b10]).unwrap();
        assert_eq!(two_points.reduced_cohomology_ranks(0), vec![0, 1]);
        let circle = SimplicialComplex::from_facets(3, [0b011, 0b110, 0b101]).unwrap();
        assert_eq!(circle.reduced_cohomology_ranks(0), vec![0, 0, 1]);
        let disk = SimplicialComplex::from_facets(3, [0b111]).unwrap();
        assert_eq!(disk.reduced_cohomology_ranks(0), vec![0, 0, 0, 0]);
        assert_eq!(euler_from_faces(&circle), euler_from_ranks(&circle, 0));
    }

    #[test]
    fn torsion_shows_in_characteristic_two() {
        // six-vertex real projective plane
        let tri = [
            [1, 2, 4],
            [1, 2, 6],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
            [2, 5, 6],
            [3, 4, 6],
            [4, 5, 6],
        ];
        let rp2 = SimplicialComplex::from_facets(
            6,
            tri.iter().map(|f| f.iter().fold(0u64, |m, v| m | 1 << (v - 1))),
        )
        .unwrap();
        assert_eq!(rp2.reduced_cohomology_ranks(0), vec![0, 0, 0, 0]);
        assert_eq!(rp2.reduced_cohomology_ranks(2), vec![0, 0, 1, 1]);
        assert_eq!(euler_from_faces(&rp2), euler_from_ranks(&rp2, 2));
    }

    #[test]
    fn link_of_a_vertex() {
        let circle = SimplicialComplex::from_facets(3, [0b011, 0b110, 0b101]).unwrap();
        let lk = circle.link(0b001).unwrap();
        assert_eq!(lk.facets(), &[0b010, 0b100]);
        assert!(circle.link(0b111).is_err());
    }

    #[test]
    fn stanley_reisner_examples() {
        let r = Ring::new(&["x", "y", "z"], 0).unwrap();
        let c = stanley_reisner(&ideal(&r, &["x*y"])).unwrap();
        assert_eq!(c.facets(), &[0b101, 0b110]);
        let c = stanley_reisner(&Ideal::zero(&r)).unwrap();
        assert_eq!(c.facets(), &[0b111]);
        let c = stanley_reisner(&Ideal::maximal(&r)).unwrap();
        assert_eq!(c.facets(), &[0]);
        assert!(stanley_reisner(&ideal(&r, &["x^2"])).is_err());
    }

    #[test]
    fn hochster_examples() {
        let r = Ring::new(&["x", "y"], 0).unwrap();
        let rep = top_local_cohomology_ranks(&ideal(&r, &["x*y"]), None).unwrap();
        assert_eq!(rep.d, 1);
        assert!(rep.nonvanishing);
        let at = |a: &[i64]| rep.ranks.iter().find(|(d, _)| d == a).unwrap().1;
        assert_eq!(at(&[-1, 0]), 1);
        assert_eq!(at(&[0, -1]), 1);
        assert_eq!(at(&[0, 0]), 1);
        assert_eq!(at(&[-1, -1]), 0);

        let r = Ring::new(&["x", "y", "z"], 0).unwrap();
        let rep =
            top_local_cohomology_ranks(&ideal(&r, &["x"]), Some(&[vec![0, -1, -1], vec![1, 0, 0]])).unwrap();
        assert_eq!(rep.ranks, vec![(vec![0, -1, -1], 1), (vec![1, 0, 0], 0)]);

        let rep = top_local_cohomology_ranks(&Ideal::zero(&r), None).unwrap();
        assert_eq!(rep.d, 3);
        let nonzero: Vec<_> = rep.ranks.iter().filter(|(_, k)| *k > 0).collect();
        assert_eq!(nonzero, vec![&(vec![-1, -1, -1], 1)]);
    }

    #[test]
    fn characteristic_independent_for_small_complexes() {
        for p in [0, 2, 3, 7] {
            let r = Ring::new(&["x", "y", "z", "w"], p).unwrap();
            let rep = top_local_cohomology_ranks(&ideal(&r, &["x*y", "z*w"]), None).unwrap();
            let r0 = Ring::new(&["x", "y", "z", "w"], 0).unwrap();
            let rep0 = top_local_cohomology_ranks(&ideal(&r0, &["x*y", "z*w"]), None).unwrap();
            assert_eq!(rep, rep0);
        }
    }
}
