//! Thresholds, Lefschetz ranges and Betti tables of degeneracy loci.
//!
//! For a morphism `u: E -> F` of bundles of ranks `e <= f` on a projective
//! variety `X`, `D_r` is the locus where `rank u <= r`, of expected dimension
//! `δ(r) = dim X - (f-r)(e-r)`. For a skew morphism `E -> E* ⊗ L`, `A_r` is
//! the locus where `rank u <= 2r`, of expected dimension
//! `α(r) = dim X - C(e-2r, 2)`. For two maximal isotropic subbundles `E, F`
//! of an orthogonal bundle, `O^r` is where `dim(E ∩ F) >= r` with the same
//! parity, of expected codimension `C(r, 2)`.
//!
//! Amplitude of the relevant bundle and emptiness of the next smaller locus
//! are hypotheses supplied by the caller. They are recorded, not checked.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::{box_partition_counts, strict_partition_counts, BoxConstraint};
use crate::table::BettiTable;

/// A projective variety known through its dimension and Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientData {
    pub dim_x: u32,
    /// `h^0 .. h^{2 dim X}`, zero-padded.
    pub betti: Vec<u64>,
}

impl AmbientData {
    pub fn new(dim_x: u32, mut betti: Vec<u64>) -> Result<Self> {
        let len = 2 * dim_x as usize + 1;
        if betti.first().copied().unwrap_or(0) < 1 {
            return invalid("ambient h^0 must be at least 1");
        }
        if betti.iter().skip(len).any(|&b| b != 0) {
            return invalid(format!("ambient Betti numbers beyond degree {} must vanish", 2 * dim_x));
        }
        betti.resize(len, 0);
        Ok(AmbientData { dim_x, betti })
    }

    pub fn point() -> Self {
        AmbientData { dim_x: 0, betti: vec![1] }
    }

    pub fn projective_space(n: u32) -> Self {
        let betti = (0..=2 * n).map(|p| u64::from(p % 2 == 0)).collect();
        AmbientData { dim_x: n, betti }
    }

    /// Jacobian of a genus `g` curve: `h^k = C(2g, k)`.
    pub fn jacobian(g: u32) -> Self {
        let betti = (0..=2 * g).map(|k| binomial(2 * g as u64, k as u64)).collect();
        AmbientData { dim_x: g, betti }
    }

    /// `h^p(X)`, zero outside `0..=2 dim X`.
    pub fn h(&self, p: i64) -> u64 {
        if p < 0 {
            return 0;
        }
        self.betti.get(p as usize).copied().unwrap_or(0)
    }

    pub fn has_odd_cohomology(&self) -> bool {
        self.betti.iter().skip(1).step_by(2).any(|&b| b != 0)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MorphismKind {
    /// `u: E -> F`, ranks `e <= f`, locus `D_r`.
    General { e: u32, f: u32, r: u32 },
    /// `u: E -> E* ⊗ L` skew, locus `A_r`.
    Skew { e: u32, r: u32 },
    /// Maximal isotropic `E, F`; locus `O^r` inside `X = O^k`.
    Orthogonal { r: u32, k: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismSetup {
    #[serde(flatten)]
    pub kind: MorphismKind,
    /// The next smaller locus (`D_{r-1}`, `A_{r-1}`) is asserted empty.
    pub lower_locus_empty: bool,
    /// The positivity hypothesis on the morphism bundle is asserted.
    pub amplitude_assumed: bool,
}

impl MorphismSetup {
    pub fn general(e: u32, f: u32, r: u32) -> Result<Self> {
        Self::from_kind(MorphismKind::General { e, f, r })
    }

    pub fn skew(e: u32, r: u32) -> Result<Self> {
        Self::from_kind(MorphismKind::Skew { e, r })
    }

    pub fn orthogonal(r: u32, k: u32) -> Result<Self> {
        Self::from_kind(MorphismKind::Orthogonal { r, k })
    }

    pub fn from_kind(kind: MorphismKind) -> Result<Self> {
        match kind {
            MorphismKind::General { e, f, r } if !(r <= e && e <= f) => {
                return invalid(format!("general setup needs 0 <= r <= e <= f, got e={e}, f={f}, r={r}"))
            }
            MorphismKind::Skew { e, r } if 2 * r > e => {
                return invalid(format!("skew setup needs 2r <= e, got e={e}, r={r}"))
            }
            MorphismKind::Orthogonal { r, k } if k > r || (r - k) % 2 == 1 => {
                return invalid(format!("orthogonal setup needs k <= r with r - k even, got r={r}, k={k}"))
            }
            _ => {}
        }
        Ok(MorphismSetup { kind, lower_locus_empty: true, amplitude_assumed: true })
    }

    /// Expected codimension of the locus.
    pub fn expected_codimension(&self) -> i64 {
        match self.kind {
            MorphismKind::General { e, f, r } => (f as i64 - r as i64) * (e as i64 - r as i64),
            MorphismKind::Skew { e, r } => choose2(e as i64 - 2 * r as i64),
            MorphismKind::Orthogonal { r, .. } => choose2(r as i64),
        }
    }

    /// Hypotheses the caller vouches for, in words.
    pub fn assumptions(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (bundle, lower) = match self.kind {
            MorphismKind::General { r, .. } => ("Hom(E,F)", format!("D_{} is empty", r as i64 - 1)),
            MorphismKind::Skew { r, .. } => ("∧²E* ⊗ L", format!("A_{} is empty", r as i64 - 1)),
            MorphismKind::Orthogonal { r, .. } => ("E* ⊗ F* ⊗ L", format!("O^{} is empty", r + 2)),
        };
        if self.amplitude_assumed {
            out.push(format!("{bundle} is ample (asserted, not verified)"));
        }
        if self.lower_locus_empty {
            out.push(format!("{lower} (asserted, not verified)"));
        }
        out.push("ranks only; integral isomorphism and torsion are not computed".to_string());
        out
    }
}

/// `δ(r) = dim X - (f-r)(e-r)`.
pub fn delta(dim_x: u32, e: u32, f: u32, r: u32) -> i64 {
    dim_x as i64 - (f as i64 - r as i64) * (e as i64 - r as i64)
}

/// `α(r) = dim X - C(e-2r, 2)`.
pub fn alpha(dim_x: u32, e: u32, r: u32) -> i64 {
    dim_x as i64 - choose2(e as i64 - 2 * r as i64)
}

/// `ε(0)=1, ε(1)=2`, then `0` on even and `1` on odd arguments.
pub fn epsilon(m: u32) -> u32 {
    match m {
        0 => 1,
        1 => 2,
        _ => m % 2,
    }
}

/// `m + 1` for `m < 4`, otherwise the remainder of `m` mod 4.
pub fn epsilon_prime(m: u32) -> u32 {
    if m < 4 {
        m + 1
    } else {
        m % 4
    }
}

/// Largest `m <= 2r+1` with `δ(r - [m/2]) >= ε(m)`.
pub fn lefschetz_max_m_general(dim_x: u32, e: u32, f: u32, r: u32) -> Option<u32> {
    (0..=2 * r + 1).rev().find(|&m| delta(dim_x, e, f, r - m / 2) >= epsilon(m) as i64)
}

/// Largest `m <= 4r+3` with `α(r - [m/4]) >= ε′(m)`.
pub fn lefschetz_max_m_skew(dim_x: u32, e: u32, r: u32) -> Option<u32> {
    (0..=4 * r + 3).rev().find(|&m| alpha(dim_x, e, r - m / 4) >= epsilon_prime(m) as i64)
}

/// Connectedness inputs: `X` is `d`-connected, and the morphism has rank at
/// most `k` everywhere (general), or `X = O^k` (orthogonal), or rank at most
/// `2k` (skew).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectednessInput {
    pub d: i64,
    pub k: u32,
}

/// The locus is `c`-connected for the returned `c`.
pub fn connectedness_bound(setup: &MorphismSetup, input: ConnectednessInput) -> Result<i64> {
    let d = input.d;
    let k = input.k;
    match setup.kind {
        MorphismKind::General { e, f, r } => {
            if k < r || k > e {
                return invalid(format!("connectedness needs r <= k <= e, got k={k}"));
            }
            Ok(d - (f as i64 - r as i64) * (e as i64 - r as i64) + (e as i64 - k as i64) * (f as i64 - k as i64))
        }
        MorphismKind::Skew { e, r } => {
            if k < r || 2 * k > e {
                return invalid(format!("connectedness needs r <= k <= e/2, got k={k}"));
            }
            // A_r = O^{e-2r} and the ambient is O^{e-2k}.
            Ok(d - choose2(e as i64 - 2 * r as i64) + choose2(e as i64 - 2 * k as i64))
        }
        MorphismKind::Orthogonal { r, .. } => {
            if k > r || (r - k) % 2 == 1 {
                return invalid(format!("connectedness needs k <= r with r - k even, got k={k}"));
            }
            Ok(d - choose2(r as i64) + choose2(k as i64))
        }
    }
}

/// Default connectedness inputs for an irreducible `X`: it is
/// `(dim X - 1)`-connected and the morphism is unconstrained.
pub fn default_connectedness(setup: &MorphismSetup, dim_x: u32) -> ConnectednessInput {
    let k = match setup.kind {
        MorphismKind::General { e, .. } => e,
        MorphismKind::Skew { e, .. } => e / 2,
        MorphismKind::Orthogonal { k, .. } => k,
    };
    ConnectednessInput { d: dim_x as i64 - 1, k }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdsReport {
    pub setup: MorphismSetup,
    pub dim_x: u32,
    pub expected_dimension: i64,
    pub expected_codimension: i64,
    /// `[t, δ(t)]` or `[t, α(t)]` for `t = 0..=r`; empty for the orthogonal
    /// kind.
    pub threshold_by_rank: Vec<(u32, i64)>,
    /// `[m, ε(m)]` or `[m, ε′(m)]` over the range scanned for Lefschetz `m`.
    pub epsilon_table: Vec<(u32, u32)>,
    /// `H^p(X) -> H^p(locus)` is bijective for `p <= m`.
    pub lefschetz_max_m: Option<u32>,
    pub connectedness_input: ConnectednessInput,
    pub connectedness: i64,
}

pub fn thresholds_report(setup: &MorphismSetup, dim_x: u32) -> Result<ThresholdsReport> {
    thresholds_report_with(setup, dim_x, default_connectedness(setup, dim_x))
}

pub fn thresholds_report_with(setup: &MorphismSetup, dim_x: u32, conn: ConnectednessInput) -> Result<ThresholdsReport> {
    MorphismSetup::from_kind(setup.kind)?;
    let setup = *setup;
    let connectedness = connectedness_bound(&setup, conn)?;
    let (threshold_by_rank, epsilon_table, lefschetz_max_m) = match setup.kind {
        MorphismKind::General { e, f, r } => (
            (0..=r).map(|t| (t, delta(dim_x, e, f, t))).collect(),
            (0..=2 * r + 1).map(|m| (m, epsilon(m))).collect(),
            lefschetz_max_m_general(dim_x, e, f, r),
        ),
        MorphismKind::Skew { e, r } => (
            (0..=r).map(|t| (t, alpha(dim_x, e, t))).collect(),
            (0..=4 * r + 3).map(|m| (m, epsilon_prime(m))).collect(),
            lefschetz_max_m_skew(dim_x, e, r),
        ),
        MorphismKind::Orthogonal { .. } => (Vec::new(), Vec::new(), None),
    };
    Ok(ThresholdsReport {
        setup,
        dim_x,
        expected_dimension: dim_x as i64 - setup.expected_codimension(),
        expected_codimension: setup.expected_codimension(),
        threshold_by_rank,
        epsilon_table,
        lefschetz_max_m,
        connectedness_input: conn,
        connectedness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub name: String,
    pub cases: u64,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub checks: Vec<InequalityCheck>,
    pub passed: bool,
}

impl GrowthReport {
    fn from_checks(checks: Vec<InequalityCheck>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        GrowthReport { checks, passed }
    }
}

struct Tally {
    name: String,
    cases: u64,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally { name: name.to_string(), cases: 0, witness: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(what());
        }
    }

    fn finish(self) -> InequalityCheck {
        InequalityCheck { passed: self.witness.is_none(), name: self.name, cases: self.cases, witness: self.witness }
    }
}

/// `δ(t) >= δ(t-s) + s(s+2)` for `0 <= s <= t <= r`, and
/// `ε(t) + [t/2]([t/2]+2) > t` for `t <= t_max`.
pub fn verify_growth_general(e: u32, f: u32, r: u32, t_max: u32) -> Result<GrowthReport> {
    if r >= e || e > f {
        return invalid(format!("growth check needs r < e <= f, got e={e}, f={f}, r={r}"));
    }
    let mut a = Tally::new("delta_growth");
    for t in 0..=r {
        for s in 0..=t {
            let (lhs, rhs) = (delta(0, e, f, t), delta(0, e, f, t - s) + (s * (s + 2)) as i64);
            a.check(lhs >= rhs, || format!("e={e} f={f} t={t} s={s}: {lhs} < {rhs}"));
        }
    }
    Ok(GrowthReport::from_checks(vec![a.finish(), epsilon_growth(t_max)]))
}

/// `α(t) >= α(t-s) + s(2s+3)` for `0 <= s <= t <= r`, and
/// `ε′(t) + [t/4](2[t/4]+3) > t` for `t <= t_max`.
pub fn verify_growth_skew(e: u32, r: u32, t_max: u32) -> Result<GrowthReport> {
    if e < 2 * r + 2 {
        return invalid(format!("skew growth check needs e >= 2r + 2, got e={e}, r={r}"));
    }
    let mut a = Tally::new("alpha_growth");
    for t in 0..=r {
        for s in 0..=t {
            let (lhs, rhs) = (alpha(0, e, t), alpha(0, e, t - s) + (s * (2 * s + 3)) as i64);
            a.check(lhs >= rhs, || format!("e={e} t={t} s={s}: {lhs} < {rhs}"));
        }
    }
    Ok(GrowthReport::from_checks(vec![a.finish(), epsilon_prime_growth(t_max)]))
}

fn epsilon_growth(t_max: u32) -> InequalityCheck {
    let mut b = Tally::new("epsilon_growth");
    for t in 0..=t_max {
        let h = t / 2;
        b.check(epsilon(t) + h * (h + 2) > t, || format!("t={t}"));
    }
    b.finish()
}

fn epsilon_prime_growth(t_max: u32) -> InequalityCheck {
    let mut b = Tally::new("epsilon_prime_growth");
    for t in 0..=t_max {
        let q = t / 4;
        b.check(epsilon_prime(t) + q * (2 * q + 3) > t, || format!("t={t}"));
    }
    b.finish()
}

/// All four inequalities over every admissible `e, f <= bound` and
/// `t <= t_max`.
pub fn verify_growth_inequalities(bound: u32, t_max: u32) -> GrowthReport {
    let mut merged: Vec<InequalityCheck> = Vec::new();
    let mut absorb = |rep: GrowthReport| {
        for c in rep.checks {
            match merged.iter_mut().find(|m| m.name == c.name) {
                Some(m) => {
                    m.cases += c.cases;
                    if m.witness.is_none() {
                        m.witness = c.witness;
                    }
                    m.passed = m.witness.is_none();
                }
                None => merged.push(c),
            }
        }
    };
    for e in 1..=bound {
        for f in e..=bound {
            for r in 0..e {
                absorb(verify_growth_general(e, f, r, 0).expect("admissible"));
            }
        }
        for r in (0..=e.saturating_sub(2) / 2).filter(|_| e >= 2) {
            absorb(verify_growth_skew(e, r, 0).expect("admissible"));
        }
    }
    let mut checks: Vec<InequalityCheck> = merged.into_iter().filter(|c| !c.name.starts_with("epsilon")).collect();
    checks.push(epsilon_growth(t_max));
    checks.push(epsilon_prime_growth(t_max));
    GrowthReport::from_checks(checks)
}

fn to_u64(x: &BigUint, what: &str) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::Overflow(format!("{what} does not fit in u64")))
}

/// `Σ_q N(q) h^{p - step·q}(X)` for `p < len`.
fn transform(ambient: &AmbientData, weights: &[BigUint], step: i64, len: usize) -> Result<Vec<u64>> {
    let weights = weights.iter().map(|w| to_u64(w, "partition count")).collect::<Result<Vec<_>>>()?;
    (0..len as i64)
        .map(|p| {
            let mut acc: u64 = 0;
            for (q, &n) in weights.iter().enumerate() {
                let term = n
                    .checked_mul(ambient.h(p - step * q as i64))
                    .and_then(|t| acc.checked_add(t))
                    .ok_or_else(|| Error::Overflow(format!("Betti number in degree {p}")))?;
                acc = term;
            }
            Ok(acc)
        })
        .collect()
}

fn limited(ambient: &AmbientData, weights: &[BigUint], step: i64, bound: i64) -> Result<BettiTable> {
    if bound <= 0 {
        return Ok(BettiTable::range_limited(Vec::new(), 0).with_note("expected dimension <= 0: empty validity range"));
    }
    let bound = u32::try_from(bound).map_err(|_| Error::Overflow("validity bound".into()))?;
    Ok(BettiTable::range_limited(transform(ambient, weights, step, bound as usize)?, bound))
}

/// `h^p(D_r) = Σ_{λ ⊂ (e-r) × r} h^{p - 2|λ|}(X)` for `p < δ(r)`.
pub fn betti_degeneracy(ambient: &AmbientData, e: u32, f: u32, r: u32) -> Result<BettiTable> {
    MorphismSetup::general(e, f, r)?;
    let bound = delta(ambient.dim_x, e, f, r);
    let up_to = (bound.max(0) / 2) as u32;
    let weights = box_partition_counts(BoxConstraint::new(r, (e - r) as usize), up_to);
    limited(ambient, &weights, 2, bound)
}

/// `h^p(A_r) = Σ_q P(q; parts <= r) h^{p - 4q}(X)` for `p < α(r)`, with no
/// bound on the number of parts.
pub fn betti_skew(ambient: &AmbientData, e: u32, r: u32) -> Result<BettiTable> {
    MorphismSetup::skew(e, r)?;
    let bound = alpha(ambient.dim_x, e, r);
    let up_to = (bound.max(0) / 4) as u32;
    let weights = box_partition_counts(BoxConstraint::unbounded_length(r), up_to);
    limited(ambient, &weights, 4, bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fiber", rename_all = "snake_case")]
pub enum Fiber {
    /// `G(d, e)`.
    Grassmann { d: u32, e: u32 },
    /// `LG(r, 2r)`.
    Lagrangian { r: u32 },
}

impl Fiber {
    pub fn dimension(&self) -> u32 {
        match *self {
            Fiber::Grassmann { d, e } => d * (e - d),
            Fiber::Lagrangian { r } => r * (r + 1) / 2,
        }
    }
}

/// Betti numbers of a bundle over `X` with the given fibre, exact in all
/// degrees.
pub fn fibration_betti(ambient: &AmbientData, fiber: Fiber) -> Result<BettiTable> {
    let weights = match fiber {
        Fiber::Grassmann { d, e } => {
            if d > e {
                return invalid(format!("Grassmann fibre needs d <= e, got d={d}, e={e}"));
            }
            box_partition_counts(BoxConstraint::new(e - d, d as usize), d * (e - d))
        }
        Fiber::Lagrangian { r } => strict_partition_counts(r, r * (r + 1) / 2),
    };
    let top = 2 * (ambient.dim_x + fiber.dimension()) as usize + 1;
    Ok(BettiTable::exact(transform(ambient, &weights, 2, top)?))
}

/// The ambient `X` of an orthogonal setup is `O^0` (even) or `O^1` (odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// `h^p(O^4)` (even) or `h^p(O^3)` (odd) in low degrees when the next locus
/// (`O^6`, resp. `O^5`) is empty: equal to `h^p(X)` for `p <= 3`, one more
/// than `h^4(X)` at `p = 4`.
pub fn betti_orthogonal_special(ambient: &AmbientData, parity: Parity) -> Result<BettiTable> {
    let loss = match parity {
        Parity::Even => 9,
        Parity::Odd => 4,
    };
    let bound = (ambient.dim_x as i64 - loss).clamp(0, 5) as u32;
    let ranks = (0..bound as i64).map(|p| ambient.h(p) + u64::from(p == 4)).collect();
    let t = BettiTable::range_limited(ranks, bound);
    Ok(if bound == 0 { t.with_note("ambient dimension too small: empty validity range") } else { t })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SkewToOrthogonal {
    pub r_prime: u32,
    pub expected_codimension: u64,
}

/// `A_r = O^{e - 2r}`.
pub fn skew_to_orthogonal(e: u32, r: u32) -> Result<SkewToOrthogonal> {
    MorphismSetup::skew(e, r)?;
    let r_prime = e - 2 * r;
    Ok(SkewToOrthogonal { r_prime, expected_codimension: binomial(r_prime as u64, 2) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilons() {
        assert_eq!([epsilon(0), epsilon(1), epsilon(4), epsilon(5)], [1, 2, 0, 1]);
        assert_eq!([epsilon_prime(2), epsilon_prime(7), epsilon_prime(8)], [3, 3, 0]);
        assert_eq!((0..4).map(epsilon_prime).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn brill_noether_delta() {
        // f - r = g - d + s, e - r = s + 1 on a Jacobian of dimension g.
        for (g, d, s) in [(4u32, 2u32, 0u32), (6, 4, 1), (10, 7, 2)] {
            let e = 20;
            let r = e - s - 1;
            let f = e + g - 1 - d;
            assert_eq!(delta(g, e, f, r), g as i64 - ((s + 1) * (g - d + s)) as i64);
        }
    }

    #[test]
    fn skew_thresholds_example() {
        let s = MorphismSetup::skew(6, 2).unwrap();
        let rep = thresholds_report(&s, 10).unwrap();
        assert_eq!(rep.expected_dimension, 9);
        assert_eq!(rep.threshold_by_rank, vec![(0, -5), (1, 4), (2, 9)]);
        // m = 11 needs α(0) >= 3; m = 7 needs α(1) = 4 >= 3.
        assert_eq!(rep.lefschetz_max_m, Some(7));
        assert_eq!(rep.epsilon_table.len(), 12);
    }

    #[test]
    fn connectedness_values() {
        let s = MorphismSetup::general(3, 4, 1).unwrap();
        let c = connectedness_bound(&s, ConnectednessInput { d: 9, k: 2 }).unwrap();
        assert_eq!(c, 9 - 6 + 2);
        // k = r + 1 gives d - e - f + 2r + 1.
        assert_eq!(c, 9 - 3 - 4 + 2 + 1);
        let o = MorphismSetup::orthogonal(4, 0).unwrap();
        assert_eq!(connectedness_bound(&o, ConnectednessInput { d: 9, k: 0 }).unwrap(), 3);
        assert!(MorphismSetup::orthogonal(3, 0).is_err());
    }

    #[test]
    fn growth_small() {
        assert!(verify_growth_general(3, 5, 2, 100).unwrap().passed);
        assert!(verify_growth_skew(6, 2, 100).unwrap().passed);
        assert!(verify_growth_general(3, 5, 3, 0).is_err());
        assert!(verify_growth_skew(5, 2, 0).is_err());
    }

    #[test]
    fn divisor_is_lefschetz() {
        let x = AmbientData::projective_space(6);
        let t = betti_degeneracy(&x, 1, 1, 0).unwrap();
        assert_eq!(t.valid_below, Some(5));
        assert_eq!(t.ranks(), &x.betti[..5]);
    }

    #[test]
    fn point_has_empty_range() {
        let t = betti_degeneracy(&AmbientData::point(), 2, 2, 1).unwrap();
        assert!(t.is_empty_range());
        assert!(betti_degeneracy(&AmbientData::point(), 2, 3, 3).is_err());
    }

    #[test]
    fn skew_examples() {
        let x = AmbientData::projective_space(9);
        let t = betti_skew(&x, 5, 1).unwrap();
        assert_eq!(t.valid_below, Some(6));
        assert_eq!(t.get(4).valid(), Some(2));
        assert_eq!(t.get(3).valid(), Some(0));
        let t0 = betti_skew(&x, 4, 0).unwrap();
        assert_eq!(t0.ranks(), &x.betti[..3]);
        assert!(betti_skew(&x, 3, 2).is_err());
    }

    #[test]
    fn fibrations() {
        let lg = fibration_betti(&AmbientData::point(), Fiber::Lagrangian { r: 2 }).unwrap();
        assert_eq!(lg.ranks(), &[1, 0, 1, 0, 1, 0, 1]);
        let p1 = fibration_betti(&AmbientData::projective_space(1), Fiber::Grassmann { d: 1, e: 2 }).unwrap();
        assert_eq!(p1.ranks(), &[1, 0, 2, 0, 1]);
        let g = fibration_betti(&AmbientData::point(), Fiber::Grassmann { d: 2, e: 4 }).unwrap();
        assert_eq!(g.ranks(), &[1, 0, 1, 0, 2, 0, 1, 0, 1]);
    }

    #[test]
    fn orthogonal_special() {
        let mut betti = vec![1, 0, 1, 0, 3];
        betti.resize(41, 0);
        let x = AmbientData::new(20, betti).unwrap();
        let t = betti_orthogonal_special(&x, Parity::Even).unwrap();
        assert_eq!(t.ranks(), &[1, 0, 1, 0, 4]);
        let small = AmbientData::projective_space(9);
        assert!(betti_orthogonal_special(&small, Parity::Even).unwrap().is_empty_range());
        assert_eq!(betti_orthogonal_special(&small, Parity::Odd).unwrap().valid_below, Some(5));
    }

    #[test]
    fn skew_orthogonal_translation() {
        assert_eq!(skew_to_orthogonal(6, 2).unwrap(), SkewToOrthogonal { r_prime: 2, expected_codimension: 1 });
        assert_eq!(skew_to_orthogonal(5, 2).unwrap().expected_codimension, 0);
        assert_eq!(skew_to_orthogonal(8, 4).unwrap().r_prime, 0);
        assert!(skew_to_orthogonal(5, 3).is_err());
    }

    #[test]
    fn ambient_validation() {
        assert!(AmbientData::new(1, vec![0, 0, 1]).is_err());
        assert!(AmbientData::new(1, vec![1, 0, 1, 0, 1]).is_err());
        assert_eq!(AmbientData::new(2, vec![1]).unwrap().betti.len(), 5);
        assert_eq!(AmbientData::jacobian(2).betti, vec![1, 4, 6, 4, 1]);
    }
}
