//! Orbit cells of `LG(d, V; 2r)`: isotropic `d`-planes in an `n`-space carrying
//! an alternating form of rank `2r` with kernel `K` of dimension `k = n - 2r`.
//!
//! Fix a flag `V_1 ⊂ ... ⊂ V_n` with `V_k = K` whose image in `V/K` is an
//! isotropic flag (`V_{k+j}^⊥ = V_{n-j}` modulo `K`). A plane `Λ` has jumps
//! `λ_1 < ... < λ_d` where `dim(Λ ∩ V_j)` increases. The first `c_k` jumps
//! lie in `K`; the rest, shifted by `k`, are jumps of an isotropic plane of
//! `V/K` and never pair up to `2r + 1`.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::partitions::{box_partition_counts, BoxConstraint};
use crate::rings::{hilbert_function, PresentationKind};
use crate::table::BettiTable;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrbitSignature {
    pub jumps: Vec<u32>,
    /// `c_k`: number of jumps inside the kernel.
    pub kernel_count: usize,
}

impl OrbitSignature {
    /// Validates `jumps` against `(n, d, r)`.
    pub fn new(jumps: Vec<u32>, n: u32, d: usize, r: u32) -> Result<Self> {
        check_params(n, d, r)?;
        let k = n - 2 * r;
        if jumps.len() != d {
            return invalid(format!("expected {d} jumps, got {}", jumps.len()));
        }
        if jumps.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!("jumps {jumps:?} are not strictly increasing"));
        }
        if jumps.first().is_some_and(|&j| j < 1) || jumps.last().is_some_and(|&j| j > n) {
            return invalid(format!("jumps {jumps:?} leave [1, {n}]"));
        }
        let kernel_count = jumps.iter().filter(|&&j| j <= k).count();
        let outer = &jumps[kernel_count..];
        for (i, &a) in outer.iter().enumerate() {
            for &b in &outer[i..] {
                if (a - k) + (b - k) == 2 * r + 1 {
                    return invalid(format!("jumps {jumps:?} pair up to {} outside the kernel", 2 * r + 1));
                }
            }
        }
        Ok(OrbitSignature { jumps, kernel_count })
    }

    /// `c_j = #{i : λ_i <= j}` for `j = 0..=n`.
    pub fn incidence(&self, n: u32) -> Vec<usize> {
        (0..=n).map(|j| self.jumps.iter().filter(|&&l| l <= j).count()).collect()
    }
}

fn check_params(n: u32, d: usize, r: u32) -> Result<()> {
    if 2 * r > n {
        return invalid(format!("form rank 2r={} exceeds n={n}", 2 * r));
    }
    let k = n - 2 * r;
    if d as u32 > k + r {
        return invalid(format!("no isotropic {d}-plane: d > k + r = {}", k + r));
    }
    Ok(())
}

fn combinations(n: u32, d: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < left as u32 {
                break;
            }
            cur.push(x);
            rec(x + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, d, &mut Vec::new(), &mut out);
    out
}

/// All nonempty orbits, in lexicographic order of jumps.
pub fn enumerate_orbit_signatures(n: u32, d: usize, r: u32) -> Result<Vec<OrbitSignature>> {
    check_params(n, d, r)?;
    Ok(combinations(n, d).into_iter().filter_map(|j| OrbitSignature::new(j, n, d, r).ok()).collect())
}

/// Cell dimension of an isotropic plane with jumps `mu` in a `2r`-space.
///
/// The plane has an echelon basis with free entries `Σ (μ_i - i)`; isotropy
/// imposes one independent linear condition for each pair `i < l` with
/// `μ_i + μ_l > 2r + 1` and none otherwise.
pub fn isotropic_cell_dimension(mu: &[u32], r: u32) -> u32 {
    let free: u32 = mu.iter().enumerate().map(|(i, &m)| m - 1 - i as u32).sum();
    let mut conditions = 0;
    for (i, &a) in mu.iter().enumerate() {
        conditions += mu[i + 1..].iter().filter(|&&b| a + b > 2 * r + 1).count() as u32;
    }
    free - conditions
}

/// Dimension of the orbit of `sig`: kernel Schubert cell in `G(c_k, k)`,
/// isotropic cell in `V/K`, plus `(k - c_k)(d - c_k)` for the extension.
pub fn orbit_dimension(sig: &OrbitSignature, n: u32, d: usize, r: u32) -> Result<u32> {
    let checked = OrbitSignature::new(sig.jumps.clone(), n, d, r)?;
    if checked.kernel_count != sig.kernel_count {
        return invalid(format!("kernel count {} does not match jumps {:?}", sig.kernel_count, sig.jumps));
    }
    let k = n - 2 * r;
    let c = sig.kernel_count;
    let kernel: u32 = sig.jumps[..c].iter().enumerate().map(|(i, &l)| l - 1 - i as u32).sum();
    let outer: Vec<u32> = sig.jumps[c..].iter().map(|&l| l - k).collect();
    Ok(kernel + isotropic_cell_dimension(&outer, r) + (k - c as u32) * (d - c) as u32)
}

/// Number of cells of each dimension, by direct enumeration.
pub fn cell_histogram(n: u32, d: usize, r: u32) -> Result<Vec<u64>> {
    let sigs = enumerate_orbit_signatures(n, d, r)?;
    let dims = sigs.par_iter().map(|s| orbit_dimension(s, n, d, r)).collect::<Result<Vec<u32>>>()?;
    let mut hist = vec![0u64; dims.iter().max().map_or(0, |&m| m as usize + 1)];
    for dim in dims {
        hist[dim as usize] += 1;
    }
    Ok(hist)
}

fn grassmannian_ranks(c: usize, k: u32) -> Vec<u64> {
    let bx = BoxConstraint::new(k - c as u32, c);
    box_partition_counts(bx, c as u32 * (k - c as u32))
        .iter()
        .map(|x| x.to_u64().expect("Grassmannian Betti number fits in u64"))
        .collect()
}

fn isotropic_ranks(d: usize, r: u32) -> Result<Vec<u64>> {
    if d == 0 {
        return Ok(vec![1]);
    }
    hilbert_function(PresentationKind::Isotropic { d, r: r as usize })
}

/// Ranks of `A_p(LG(d, V; 2r))` for `p <= p_max` (index is the dimension
/// `p`), from the stratification by `c = dim(Λ ∩ K)`.
///
/// Each stratum fibres over `G(c, K) × LG(d - c, V/K)` with affine fibres of
/// dimension `(k - c)(d - c)`, so its ranks are the convolution of the two
/// factors shifted by that dimension.
pub fn chow_ranks_decomposition(n: u32, d: usize, r: u32, p_max: u32) -> Result<BettiTable> {
    check_params(n, d, r)?;
    let k = n - 2 * r;
    let lo = d.saturating_sub(r as usize);
    let hi = d.min(k as usize);
    let mut ranks = vec![0u64; p_max as usize + 1];
    for c in lo..=hi {
        let g = grassmannian_ranks(c, k);
        let lg = isotropic_ranks(d - c, r)?;
        let shift = (k as usize - c) * (d - c);
        for (p1, &a) in g.iter().enumerate() {
            for (p2, &b) in lg.iter().enumerate() {
                let p = p1 + p2 + shift;
                if p <= p_max as usize {
                    ranks[p] += a * b;
                }
            }
        }
    }
    Ok(BettiTable::range_limited(ranks, p_max + 1).with_note("indexed by dimension p of A_p"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateRestrictionRow {
    pub p: u32,
    pub rank_isotropic: u64,
    pub rank_grassmannian: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateRestrictionReport {
    pub n: u32,
    pub d: usize,
    pub r: u32,
    /// Equality of ranks is required for `p <= equality_up_to`.
    pub equality_up_to: u32,
    pub rows: Vec<DegenerateRestrictionRow>,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Rank comparisons implied by `A_p(G(d,n)) -> A_p(LG(d,V;2r))` being
/// surjective in every degree and injective for `p <= 2(n - d - r) + 1`.
pub fn verify_restriction_bounds_degenerate(n: u32, d: usize, r: u32, p_max: u32) -> Result<DegenerateRestrictionReport> {
    let lg = chow_ranks_decomposition(n, d, r, p_max)?;
    let g = if d == 0 { vec![1] } else { grassmannian_ranks(d, n) };
    let equality_up_to = 2 * (n - d as u32 - r) + 1;
    let mut rows = Vec::new();
    let mut witness = None;
    for p in 0..=p_max {
        let rank_isotropic = lg.get(p).valid().unwrap_or(0);
        let rank_grassmannian = g.get(p as usize).copied().unwrap_or(0);
        if witness.is_none() {
            if rank_isotropic > rank_grassmannian {
                witness = Some(format!("p={p}: rank {rank_isotropic} exceeds Grassmannian rank {rank_grassmannian}"));
            } else if p <= equality_up_to && rank_isotropic != rank_grassmannian {
                witness = Some(format!("p={p}: ranks {rank_isotropic} != {rank_grassmannian} in the injective range"));
            }
        }
        rows.push(DegenerateRestrictionRow { p, rank_isotropic, rank_grassmannian });
    }
    Ok(DegenerateRestrictionReport { n, d, r, equality_up_to, rows, passed: witness.is_none(), witness })
}
