//! Exact rational linear algebra on small dense matrices.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = Rational64;

/// Dense row-major rational matrix.
pub type QMat = Vec<Vec<Q>>;

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

/// The rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Zero vector of length `n`.
pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

/// `a + b`.
pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a - b`.
pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `c * a`.
pub fn scale(c: Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

/// `a += c * b` in place.
pub fn axpy(a: &mut [Q], c: Q, b: &[Q]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += c * y;
    }
}

/// Bilinear form `a^T g b`.
pub fn bilinear(g: &[Vec<Q>], a: &[Q], b: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                s += ai * g[i][j] * bj;
            }
        }
    }
    s
}

/// Matrix-vector product.
pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |s, (a, b)| s + a * b))
        .collect()
}

/// Matrix product.
pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> QMat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![zeros(m); n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Identity matrix.
pub fn identity(n: usize) -> QMat {
    (0..n).map(|i| unit(n, i)).collect()
}

/// Solves `a x = b` for square nonsingular `a`; `None` if singular.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: QMat = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(*bi);
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                axpy(&mut m[r], -f, &pivot_row);
            }
        }
    }
    Some(m.into_iter().map(|r| r[n]).collect())
}

/// Inverse of a square matrix; `None` if singular.
pub fn inverse(a: &[Vec<Q>]) -> Option<QMat> {
    let n = a.len();
    let cols: Option<Vec<Vec<Q>>> = (0..n).map(|j| solve(a, &unit(n, j))).collect();
    let cols = cols?;
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect())
}

/// Basis of the right null space of `a`.
pub fn nullspace(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: QMat = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pr = m[r].clone();
                axpy(&mut m[i], -f, &pr);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zeros(cols);
            v[f] = Q::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][f];
            }
            v
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector with positive leading sign.
pub fn primitive_integer(v: &[Q]) -> Vec<i64> {
    let l = v
        .iter()
        .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * qi(l)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| num_integer::gcd(acc, *x));
    let g = if g == 0 { 1 } else { g };
    let sign = if ints.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
        -1
    } else {
        1
    };
    ints.iter().map(|x| sign * x / g).collect()
}

/// True when every entry is an integer.
pub fn is_integral(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// If `a = t b` for some rational `t`, returns `t`.
pub fn proportion(a: &[Q], b: &[Q]) -> Option<Q> {
    let j = b.iter().position(|x| !x.is_zero())?;
    let t = a[j] / b[j];
    a.iter().zip(b).all(|(x, y)| *x == t * y).then_some(t)
}

/// Absolute value helper re-exported for callers that avoid importing traits.
pub fn qabs(x: Q) -> Q {
    x.abs()
}
