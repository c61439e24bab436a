//! Exact integer linear algebra: row echelon form by unimodular row
//! operations, rank, and elementary divisors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A row echelon form of an integer matrix reached by unimodular row
/// operations, so it spans the same lattice as the input rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub ncols: usize,
    /// Nonzero rows; row `i` has its leading entry in `pivot_cols[i]`.
    pub rows: Vec<Vec<BigInt>>,
    pub pivot_cols: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn pivots_are_units(&self) -> bool {
        self.rows.iter().zip(&self.pivot_cols).all(|(r, &c)| r[c].abs().is_one())
    }

    pub fn free_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivot_cols {
            is_pivot[c] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Invariant factors `> 1` of `Z^ncols / rowspace`.
    pub fn torsion(&self) -> Vec<BigInt> {
        if self.pivots_are_units() {
            return Vec::new();
        }
        elementary_divisors(self.rows.clone(), self.ncols).into_iter().filter(|d| !d.is_one()).collect()
    }
}

fn sub_multiple(target: &mut [BigInt], src: &[BigInt], q: &BigInt, from: usize) {
    for (t, s) in target[from..].iter_mut().zip(&src[from..]) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Integer types the echelon routine can run in. Checked operations return
/// `None` on overflow.
trait Scalar: Clone + Integer + Signed {
    fn cmul(&self, o: &Self) -> Option<Self>;
    fn csub(&self, o: &Self) -> Option<Self>;
    fn cadd(&self, o: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn cmul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn csub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn cadd(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
}

impl Scalar for BigInt {
    fn cmul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn csub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn cadd(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
}

/// `a -= q * b` on columns `from..`.
fn axpy<T: Scalar>(a: &mut [T], b: &[T], q: &T, from: usize) -> Option<()> {
    for (x, y) in a[from..].iter_mut().zip(&b[from..]) {
        if !y.is_zero() {
            *x = x.csub(&q.cmul(y)?)?;
        }
    }
    Some(())
}

/// `s * a + t * b` on columns `from..`.
fn combine<T: Scalar>(s: &T, a: &[T], t: &T, b: &[T], from: usize) -> Option<Vec<T>> {
    let mut out = vec![T::zero(); a.len()];
    for i in from..a.len() {
        out[i] = s.cmul(&a[i])?.cadd(&t.cmul(&b[i])?)?;
    }
    Some(out)
}

fn leading<T: Scalar>(v: &[T]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Reduces `v` against the unit pivots of `basis` and the non-unit pivots
/// that divide it. Returns the leading column of what is left, if any.
fn reduce<T: Scalar>(v: &mut [T], basis: &[Option<Vec<T>>]) -> Option<Option<usize>> {
    while let Some(c) = leading(v) {
        match &basis[c] {
            Some(p) if v[c].is_multiple_of(&p[c]) => {
                let q = v[c].div_floor(&p[c]);
                axpy(v, p, &q, c)?;
            }
            _ => return Some(Some(c)),
        }
    }
    Some(None)
}

/// Installs `v` as the pivot row of column `c` and clears (unit pivot) or
/// reduces (other pivots) column `c` in the rest of the basis.
fn install<T: Scalar>(basis: &mut [Option<Vec<T>>], mut v: Vec<T>, c: usize) -> Option<()> {
    if v[c].is_negative() {
        for x in v.iter_mut() {
            *x = -x.clone();
        }
    }
    let lead = v[c].clone();
    for other in basis.iter_mut().flatten() {
        if other[c].is_zero() {
            continue;
        }
        let q = if lead.is_one() { other[c].clone() } else { Integer::div_floor(&other[c], &lead) };
        axpy(other, &v, &q, c)?;
    }
    basis[c] = Some(v);
    Some(())
}

/// Builds a triangular basis indexed by pivot column with unimodular row
/// operations only.
///
/// Rows whose leading entry is a unit become pivots immediately and are
/// cleared from every other basis row. Rows that would need a non-unit
/// pivot are set aside and retried once no more unit pivots appear, since
/// later rows often supply a unit in that column; only the leftovers go
/// through two-row gcd steps. This keeps entries small on saturated
/// lattices.
fn insert_all<T: Scalar>(rows: impl Iterator<Item = Vec<T>>, ncols: usize) -> Option<Vec<Option<Vec<T>>>> {
    let mut basis: Vec<Option<Vec<T>>> = vec![None; ncols];
    let mut pending: Vec<Vec<T>> = rows.collect();
    loop {
        let mut deferred = Vec::new();
        let mut progress = false;
        for mut v in pending {
            match reduce(&mut v, &basis)? {
                None => {}
                Some(c) if basis[c].is_none() && v[c].abs().is_one() => {
                    install(&mut basis, v, c)?;
                    progress = true;
                }
                Some(_) => deferred.push(v),
            }
        }
        pending = deferred;
        if !progress || pending.is_empty() {
            break;
        }
    }
    for mut v in pending {
        while let Some(c) = reduce(&mut v, &basis)? {
            let Some(p) = basis[c].as_mut() else {
                install(&mut basis, v, c)?;
                break;
            };
            let e = p[c].extended_gcd(&v[c]);
            let (a, b) = (p[c].div_floor(&e.gcd), v[c].div_floor(&e.gcd));
            let new_p = combine(&e.x, p, &e.y, &v, c)?;
            v = combine(&b, p, &(-a), &v, c)?;
            basis[c] = None;
            install(&mut basis, new_p, c)?;
        }
    }
    Some(basis)
}

fn to_echelon<T: Scalar>(basis: Vec<Option<Vec<T>>>, ncols: usize, conv: impl Fn(T) -> BigInt) -> Echelon {
    let mut rows = Vec::new();
    let mut pivot_cols = Vec::new();
    for (c, row) in basis.into_iter().enumerate() {
        if let Some(row) = row {
            pivot_cols.push(c);
            rows.push(row.into_iter().map(&conv).collect());
        }
    }
    Echelon { ncols, rows, pivot_cols }
}

/// Brings `rows` to row echelon form. The result spans the same lattice.
///
/// Runs in `i128` while every intermediate entry fits and repeats the same
/// steps in big integers otherwise.
pub fn echelon(rows: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let small: Option<Vec<Vec<i128>>> = rows.iter().map(|r| r.iter().map(|x| x.to_i128()).collect()).collect();
    if let Some(basis) = small.and_then(|m| insert_all(m.into_iter(), ncols)) {
        return to_echelon(basis, ncols, BigInt::from);
    }
    echelon_big(rows, ncols)
}

fn echelon_big(rows: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let basis = insert_all(rows.into_iter(), ncols).expect("big integers do not overflow");
    to_echelon(basis, ncols, |x| x)
}

pub fn rank(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    echelon(rows, ncols).rank()
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the
/// next, all positive.
pub fn elementary_divisors(mut m: Vec<Vec<BigInt>>, ncols: usize) -> Vec<BigInt> {
    let nrows = m.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        let mut done = true;
        for i in t + 1..nrows {
            if m[i][t].is_zero() {
                continue;
            }
            let q = m[i][t].div_floor(&m[t][t]);
            let (head, tail) = m.split_at_mut(i);
            sub_multiple(&mut tail[0], &head[t], &q, t);
            if !m[i][t].is_zero() {
                done = false;
            }
        }
        for j in t + 1..ncols {
            if m[t][j].is_zero() {
                continue;
            }
            let q = m[t][j].div_floor(&m[t][t]);
            for row in m.iter_mut().skip(t) {
                let v = &q * &row[t];
                row[j] -= v;
            }
            if !m[t][j].is_zero() {
                done = false;
            }
        }
        if !done {
            continue;
        }
        // The pivot must divide the rest of the block; otherwise fold an
        // offending row into row t and repeat.
        let p = m[t][t].clone();
        let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !m[i][j].is_multiple_of(&p)));
        if let Some(i) = bad {
            let (head, tail) = m.split_at_mut(i);
            for (a, b) in head[t].iter_mut().zip(&tail[0]) {
                *a += b;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}
