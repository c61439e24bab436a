//! Graded integer presentations of `H*(G(d,n))` and `H*(LG(d,2r))`.
//!
//! Both rings are generated by `c_1, ..., c_d` of the tautological subbundle
//! (`c_i` in cohomological degree `2i`):
//!
//! - `G(d,n)`: relations `h_j` for `n-d < j <= n`, where `Σ h_j` is the
//!   inverse of `1 - c_1 + c_2 - ...` (complete homogeneous functions of the
//!   Chern roots).
//! - `LG(d,2r)` (isotropic `d`-planes for a nondegenerate alternating form on
//!   a `2r`-space): relations are the components of `1 / (c · c̄)` of weight
//!   `2(r-d+1), ..., 2r`, with `c̄ = 1 - c_1 + c_2 - ...`. In the roots these
//!   are `h_j(x_1^2, ..., x_d^2)` for `r-d < j <= r`.
//!
//! Graded pieces are computed degree by degree: the relation ideal in weight
//! `w` is spanned by (relation × monomial) products, its rank over `Q` is read
//! off an integer echelon form, and torsion from elementary divisors.
//! Monomials are ordered graded-lexicographically (larger exponent of `c_1`
//! first); pivots land on the larger monomials so the reported basis consists
//! of the lex-smallest standard monomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chern::{
    dual_total_class, generic_total_class, monomial_weight, qtilde, series_inverse, total_class_product, ChernPoly,
    Monomial,
};
use crate::error::{invalid, Error, Result};
use crate::linalg::{echelon, Echelon};
use crate::partitions::{enumerate_box_partitions, enumerate_strict_partitions, BoxConstraint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "label", rename_all = "snake_case")]
pub enum PresentationKind {
    /// `H*(G(d,n))`.
    Grassmannian { d: usize, n: usize },
    /// `H*(LG(d,2r))`, nondegenerate form of rank `2r`.
    Isotropic { d: usize, r: usize },
}

impl PresentationKind {
    pub fn num_generators(&self) -> usize {
        match *self {
            PresentationKind::Grassmannian { d, .. } | PresentationKind::Isotropic { d, .. } => d,
        }
    }

    /// Complex dimension of the variety, i.e. the top nonzero weight.
    pub fn dimension(&self) -> usize {
        match *self {
            PresentationKind::Grassmannian { d, n } => d * (n - d),
            PresentationKind::Isotropic { d, r } => 2 * d * (r - d) + d * (d + 1) / 2,
        }
    }

    pub fn cache_key(&self) -> String {
        match *self {
            PresentationKind::Grassmannian { d, n } => format!("grassmannian-d{d}-n{n}"),
            PresentationKind::Isotropic { d, r } => format!("isotropic-d{d}-r{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPresentation {
    pub kind: PresentationKind,
    pub num_generators: usize,
    /// Cohomological degrees of `c_1, ..., c_d`: `2, 4, ..., 2d`.
    pub generator_degrees: Vec<u32>,
    pub relations: Vec<ChernPoly>,
}

impl RingPresentation {
    fn new(kind: PresentationKind, relations: Vec<ChernPoly>) -> Result<Self> {
        let d = kind.num_generators();
        for (i, rel) in relations.iter().enumerate() {
            if !rel.is_homogeneous() {
                return Err(Error::Verification(format!("relation {i} is not homogeneous")));
            }
            if rel.max_generator() > d {
                return Err(Error::Verification(format!("relation {i} uses a generator beyond c_{d}")));
            }
        }
        Ok(RingPresentation {
            kind,
            num_generators: d,
            generator_degrees: (1..=d as u32).map(|i| 2 * i).collect(),
            relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
        })
    }

    /// Rows spanning the relation ideal in weight `w`, as coefficient vectors
    /// over `monomials` (which must be the weight-`w` monomials in order).
    fn ideal_rows(&self, w: u32, index: &HashMap<Monomial, usize>) -> Vec<Vec<BigInt>> {
        let ncols = index.len();
        let mut rows = Vec::new();
        for rel in &self.relations {
            let Some(rw) = rel.homogeneous_weight() else { continue };
            if rw > w {
                continue;
            }
            for m in weight_monomials(self.num_generators, w - rw) {
                let mut row = vec![BigInt::zero(); ncols];
                for (rm, c) in rel.terms() {
                    let mut prod = m.clone();
                    if prod.len() < rm.len() {
                        prod.resize(rm.len(), 0);
                    }
                    for (p, e) in prod.iter_mut().zip(rm) {
                        *p += e;
                    }
                    while prod.last() == Some(&0) {
                        prod.pop();
                    }
                    row[index[&prod]] += c;
                }
                rows.push(row);
            }
        }
        rows
    }
}

/// Monomials in `c_1..c_d` of weight `w`, graded-lex descending, trimmed.
pub fn weight_monomials(d: usize, w: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = enumerate_box_partitions(w, BoxConstraint::unbounded_length(d as u32))
        .into_iter()
        .map(|lam| {
            let mut m = vec![0u32; d];
            for &p in lam.parts() {
                m[p as usize - 1] += 1;
            }
            while m.last() == Some(&0) {
                m.pop();
            }
            m
        })
        .collect();
    out.sort_by(|a, b| {
        let pad = |v: &Monomial| {
            let mut v = v.clone();
            v.resize(d, 0);
            v
        };
        pad(b).cmp(&pad(a))
    });
    out
}

fn monomial_index(monos: &[Monomial]) -> HashMap<Monomial, usize> {
    monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

/// Presentation of `H*(G(d,n))`.
pub fn grassmannian_presentation(d: usize, n: usize) -> Result<RingPresentation> {
    if d == 0 || d > n {
        return invalid(format!("grassmannian needs 1 <= d <= n, got d={d}, n={n}"));
    }
    let c = generic_total_class(d);
    let h = series_inverse(&dual_total_class(&c), n)?;
    RingPresentation::new(PresentationKind::Grassmannian { d, n }, h[n - d + 1..=n].to_vec())
}

/// Presentation of `H*(LG(d,2r))`.
pub fn isotropic_presentation(d: usize, r: usize) -> Result<RingPresentation> {
    if d == 0 || d > r {
        return invalid(format!("isotropic grassmannian needs 1 <= d <= r, got d={d}, r={r}"));
    }
    let c = generic_total_class(d);
    let prod = total_class_product(&c, &dual_total_class(&c), 2 * r);
    let inv = series_inverse(&prod, 2 * r)?;
    let rels = (r - d + 1..=r).map(|j| inv[2 * j].clone()).collect();
    RingPresentation::new(PresentationKind::Isotropic { d, r }, rels)
}

/// One graded piece of a quotient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRow {
    /// Cohomological degree (twice the weight).
    pub degree: u32,
    pub rank: u64,
    pub torsion: Vec<u64>,
    #[serde(skip)]
    pub num_monomials: usize,
    #[serde(skip)]
    pub basis: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTable {
    pub kind: PresentationKind,
    pub rows: Vec<GradedRow>,
}

impl GradedTable {
    /// Ranks in even degrees `0, 2, 4, ...`.
    pub fn ranks(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.rank).collect()
    }

    /// Rank in cohomological degree `p`; odd degrees are zero.
    pub fn rank_at(&self, p: u32) -> u64 {
        if p % 2 == 1 {
            return 0;
        }
        self.rows.iter().find(|r| r.degree == p).map_or(0, |r| r.rank)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.rows.iter().all(|r| r.torsion.is_empty())
    }

    pub fn total_rank(&self) -> u64 {
        self.rows.iter().map(|r| r.rank).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,rank,torsion\n");
        for r in &self.rows {
            let tors: Vec<String> = r.torsion.iter().map(|t| t.to_string()).collect();
            out.push_str(&format!("{},{},{}\n", r.degree, r.rank, tors.join(" ")));
        }
        out
    }
}

fn weight_piece(pres: &RingPresentation, w: u32) -> Result<(GradedRow, Echelon)> {
    let monos = weight_monomials(pres.num_generators, w);
    let index = monomial_index(&monos);
    let ech = echelon(pres.ideal_rows(w, &index), monos.len());
    let torsion = ech
        .torsion()
        .into_iter()
        .map(|t| t.to_u64().ok_or_else(|| Error::Overflow(format!("torsion coefficient {t} in weight {w}"))))
        .collect::<Result<Vec<u64>>>()?;
    let basis = ech.free_cols().into_iter().map(|i| monos[i].clone()).collect::<Vec<_>>();
    let row = GradedRow {
        degree: 2 * w,
        rank: (monos.len() - ech.rank()) as u64,
        torsion,
        num_monomials: monos.len(),
        basis,
    };
    Ok((row, ech))
}

/// Rank and torsion of every even degree `<= up_to_degree`.
pub fn graded_table(pres: &RingPresentation, up_to_degree: u32) -> Result<GradedTable> {
    let rows = (0..=up_to_degree / 2)
        .into_par_iter()
        .map(|w| weight_piece(pres, w).map(|(row, _)| row))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedTable { kind: pres.kind, rows })
}

fn hilbert_memo() -> &'static Mutex<HashMap<PresentationKind, Vec<u64>>> {
    static MEMO: OnceLock<Mutex<HashMap<PresentationKind, Vec<u64>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Ranks by weight `0..=dimension` (memoised per presentation).
pub fn hilbert_function(kind: PresentationKind) -> Result<Vec<u64>> {
    if let Some(v) = hilbert_memo().lock().unwrap().get(&kind) {
        return Ok(v.clone());
    }
    let pres = match kind {
        PresentationKind::Grassmannian { d, n } => grassmannian_presentation(d, n)?,
        PresentationKind::Isotropic { d, r } => isotropic_presentation(d, r)?,
    };
    let table = graded_table(&pres, 2 * kind.dimension() as u32)?;
    let ranks = table.ranks();
    hilbert_memo().lock().unwrap().insert(kind, ranks.clone());
    Ok(ranks)
}

/// The map on one half-degree of `H*(G(d,2r)) -> H*(LG(d,2r))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionRow {
    pub half_degree: u32,
    pub rank_source: u64,
    pub rank_target: u64,
    pub image_rank: u64,
    pub kernel_rank: u64,
    pub well_defined: bool,
    pub surjective: bool,
    pub injective: bool,
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub d: usize,
    pub n: usize,
    pub r: usize,
    /// Bijectivity is asserted for half-degrees `<= bound`; `None` when it is
    /// asserted in every degree (`d <= 1`).
    pub asserted_bijective_up_to: Option<u32>,
    pub rows: Vec<RestrictionRow>,
    /// First half-degree where the map is not bijective, if any.
    pub first_non_bijective: Option<u32>,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Compares the graded pieces of `G(d,2r)` and `LG(d,2r)` under `c_i ↦ c_i`
/// for every half-degree `p <= p_max`.
pub fn restriction_report(d: usize, n: usize, r: usize, p_max: u32) -> Result<RestrictionReport> {
    if n != 2 * r {
        return invalid(format!("restriction needs n = 2r, got n={n}, r={r}"));
    }
    let source = grassmannian_presentation(d, n)?;
    let target = isotropic_presentation(d, r)?;
    let bound = if d <= 1 { None } else { Some((2 * (r - d) + 1) as u32) };

    let rows = (0..=p_max)
        .into_par_iter()
        .map(|p| {
            let monos = weight_monomials(d, p);
            let index = monomial_index(&monos);
            let src = echelon(source.ideal_rows(p, &index), monos.len());
            let tgt = echelon(target.ideal_rows(p, &index), monos.len());
            let well_defined = src.rows.iter().all(|row| lattice_contains(&tgt, row));
            let rank_source = (monos.len() - src.rank()) as u64;
            let rank_target = (monos.len() - tgt.rank()) as u64;
            // Same generators on both sides: once the map is well defined,
            // every monomial hits its class, so the image is everything.
            let image_rank = if well_defined { rank_target } else { 0 };
            let kernel_rank = rank_source - image_rank.min(rank_source);
            let surjective = well_defined && image_rank == rank_target;
            let injective = well_defined && kernel_rank == 0;
            RestrictionRow {
                half_degree: p,
                rank_source,
                rank_target,
                image_rank,
                kernel_rank,
                well_defined,
                surjective,
                injective,
                bijective: surjective && injective,
            }
        })
        .collect::<Vec<_>>();

    let first_non_bijective = rows.iter().find(|r| !r.bijective).map(|r| r.half_degree);
    let mut witness = None;
    for row in &rows {
        if !row.well_defined || !row.surjective {
            witness = Some(format!("half-degree {}: map not surjective", row.half_degree));
            break;
        }
        if bound.is_none_or(|b| row.half_degree <= b) && !row.bijective {
            witness = Some(format!(
                "half-degree {}: ranks {} -> {} but bijectivity is expected",
                row.half_degree, row.rank_source, row.rank_target
            ));
            break;
        }
    }
    Ok(RestrictionReport {
        d,
        n,
        r,
        asserted_bijective_up_to: bound,
        rows,
        first_non_bijective,
        passed: witness.is_none(),
        witness,
    })
}

/// Whether `v` lies in the lattice spanned by the rows of `e`.
fn lattice_contains(e: &Echelon, v: &[BigInt]) -> bool {
    use num_integer::Integer;
    let mut v = v.to_vec();
    for (row, &col) in e.rows.iter().zip(&e.pivot_cols) {
        if v[col].is_zero() {
            continue;
        }
        let (q, rem) = v[col].div_rem(&row[col]);
        if !rem.is_zero() {
            return false;
        }
        for (x, y) in v[col..].iter_mut().zip(&row[col..]) {
            *x -= &q * y;
        }
    }
    v.iter().all(|x| x.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QtildeBasisRow {
    pub half_degree: u32,
    pub ring_rank: u64,
    pub num_classes: usize,
    /// Relations plus Q̃-images span the whole lattice of monomials.
    pub spans: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QtildeBasisReport {
    pub r: usize,
    pub rows: Vec<QtildeBasisRow>,
    pub passed: bool,
}

/// Checks that `{Q̃_μ(c(S*)) : μ strict, μ_1 <= r}` is a `Z`-basis of every
/// graded piece of `H*(LG(r,2r))`.
///
/// In weight `w` the images are a basis exactly when their number equals the
/// rank of the piece and, together with the relations, they generate all of
/// `Z^{monomials}`.
pub fn qtilde_basis_report(r: usize) -> Result<QtildeBasisReport> {
    let pres = isotropic_presentation(r, r)?;
    let dual = dual_total_class(&generic_total_class(r));
    let top = (r * (r + 1) / 2) as u32;
    let rows = (0..=top)
        .into_par_iter()
        .map(|w| {
            let monos = weight_monomials(r, w);
            let index = monomial_index(&monos);
            let mut rows = pres.ideal_rows(w, &index);
            let ideal_rank = echelon(rows.clone(), monos.len()).rank();
            let ring_rank = (monos.len() - ideal_rank) as u64;
            let classes = enumerate_strict_partitions(w, r as u32);
            for mu in &classes {
                let q = qtilde(mu, &dual);
                let mut row = vec![BigInt::zero(); monos.len()];
                for (m, c) in q.terms() {
                    debug_assert_eq!(monomial_weight(m), w);
                    row[index[m]] += c;
                }
                rows.push(row);
            }
            let all = echelon(rows, monos.len());
            let spans = all.rank() == monos.len() && all.torsion().is_empty();
            QtildeBasisRow { half_degree: w, ring_rank, num_classes: classes.len(), spans }
        })
        .collect::<Vec<_>>();
    let passed = rows.iter().all(|row| row.spans && row.num_classes as u64 == row.ring_rank);
    Ok(QtildeBasisReport { r, rows, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::count_box_partitions;
    use num_traits::ToPrimitive;

    fn ranks(pres: &RingPresentation, cap: u32) -> Vec<u64> {
        graded_table(pres, cap).unwrap().ranks()
    }

    #[test]
    fn projective_line() {
        let g = grassmannian_presentation(1, 2).unwrap();
        assert_eq!(g.relations.len(), 1);
        assert_eq!(g.relations[0], ChernPoly::gen(1).pow(2));
        assert_eq!(ranks(&g, 4), vec![1, 1, 0]);

        let lg = isotropic_presentation(1, 1).unwrap();
        assert_eq!(ranks(&lg, 4), vec![1, 1, 0]);
    }

    #[test]
    fn grassmannian_examples() {
        let g = grassmannian_presentation(2, 4).unwrap();
        let t = graded_table(&g, 8).unwrap();
        assert_eq!(t.ranks(), vec![1, 1, 2, 1, 1]);
        assert!(t.is_torsion_free());
        assert_eq!(ranks(&grassmannian_presentation(2, 5).unwrap(), 12), vec![1, 1, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn isotropic_examples() {
        let t = graded_table(&isotropic_presentation(2, 2).unwrap(), 6).unwrap();
        assert_eq!(t.ranks(), vec![1, 1, 1, 1]);
        assert!(t.is_torsion_free());
        assert_eq!(ranks(&isotropic_presentation(2, 3).unwrap(), 14), vec![1, 1, 2, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn degree_zero_is_rank_one() {
        for pres in [grassmannian_presentation(3, 6).unwrap(), isotropic_presentation(2, 4).unwrap()] {
            assert_eq!(graded_table(&pres, 0).unwrap().ranks(), vec![1]);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(grassmannian_presentation(3, 2).is_err());
        assert!(isotropic_presentation(3, 2).is_err());
        assert!(grassmannian_presentation(0, 2).is_err());
        assert!(restriction_report(2, 5, 2, 4).is_err());
    }

    #[test]
    fn odd_degrees_vanish() {
        let t = graded_table(&grassmannian_presentation(2, 4).unwrap(), 8).unwrap();
        assert_eq!(t.rank_at(3), 0);
        assert_eq!(t.rank_at(4), 2);
    }

    #[test]
    fn hilbert_matches_box_counts_small() {
        for n in 1..=6 {
            for d in 1..=n {
                let h = hilbert_function(PresentationKind::Grassmannian { d, n }).unwrap();
                for (w, &rank) in h.iter().enumerate() {
                    let expected = count_box_partitions(w as u32, BoxConstraint::new((n - d) as u32, d));
                    assert_eq!(rank, expected.to_u64().unwrap(), "G({d},{n}) weight {w}");
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let rep = restriction_report(2, 4, 2, 4).unwrap();
        assert!(rep.passed, "{:?}", rep.witness);
        assert!(rep.rows.iter().all(|r| r.surjective));
        assert!(rep.rows[0].bijective && rep.rows[1].bijective);
        assert_eq!((rep.rows[2].rank_source, rep.rows[2].rank_target), (2, 1));
        assert_eq!(rep.first_non_bijective, Some(2));

        for r in 1..=4 {
            let rep = restriction_report(1, 2 * r, r, 2 * r as u32).unwrap();
            assert!(rep.rows.iter().all(|row| row.bijective), "d=1, r={r}");
        }

        let rep = restriction_report(2, 6, 3, 8).unwrap();
        assert!(rep.passed);
        assert!(rep.rows[..=3].iter().all(|r| r.bijective));
        assert_eq!(rep.first_non_bijective, Some(4));
    }

    #[test]
    fn qtilde_basis_small() {
        for r in 1..=3 {
            let rep = qtilde_basis_report(r).unwrap();
            assert!(rep.passed, "r={r}: {:?}", rep.rows);
        }
    }

    #[test]
    fn weight_monomials_are_grlex_descending() {
        let m = weight_monomials(3, 3);
        assert_eq!(m, vec![vec![3], vec![1, 1], vec![0, 0, 1]]);
    }
}
