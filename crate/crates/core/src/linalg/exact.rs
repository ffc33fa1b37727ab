//! Integer kernels: fraction-free (Bareiss) elimination and the
//! Faddeev–LeVerrier characteristic polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Rank and determinant of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDet {
    pub rank: usize,
    pub det: BigInt,
}

/// Fraction-free elimination in checked `i128`; `None` on overflow.
fn bareiss_i128(n: usize, entries: &[i64]) -> Option<(usize, i128)> {
    let mut a: Vec<i128> = entries.iter().map(|&v| v as i128).collect();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(piv) = (row..n).find(|&i| a[i * n + col] != 0) else {
            continue;
        };
        if piv != row {
            for j in 0..n {
                a.swap(piv * n + j, row * n + j);
            }
            sign = -sign;
        }
        let p = a[row * n + col];
        for i in (row + 1)..n {
            let f = a[i * n + col];
            for j in (col + 1)..n {
                let lhs = a[i * n + j].checked_mul(p)?;
                let rhs = f.checked_mul(a[row * n + j])?;
                a[i * n + j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i * n + col] = 0;
        }
        prev = p;
        row += 1;
    }
    let det = if row == n { sign * a[n * n - 1] } else { 0 };
    Some((row, det))
}

fn bareiss_big(n: usize, entries: &[i64]) -> (usize, BigInt) {
    let mut a: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
    let mut prev = BigInt::one();
    let mut negate = false;
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(piv) = (row..n).find(|&i| !a[i * n + col].is_zero()) else {
            continue;
        };
        if piv != row {
            for j in 0..n {
                a.swap(piv * n + j, row * n + j);
            }
            negate = !negate;
        }
        let p = a[row * n + col].clone();
        for i in (row + 1)..n {
            let f = a[i * n + col].clone();
            for j in (col + 1)..n {
                let v = (&a[i * n + j] * &p - &f * &a[row * n + j]) / &prev;
                a[i * n + j] = v;
            }
            a[i * n + col] = BigInt::zero();
        }
        prev = p;
        row += 1;
    }
    let det = if row == n {
        let d = a[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    } else {
        BigInt::zero()
    };
    (row, det)
}

/// Exact rank and determinant by Bareiss elimination.
pub fn rank_det(n: usize, entries: &[i64]) -> RankDet {
    match bareiss_i128(n, entries) {
        Some((rank, det)) => RankDet {
            rank,
            det: BigInt::from(det),
        },
        None => {
            let (rank, det) = bareiss_big(n, entries);
            RankDet { rank, det }
        }
    }
}

/// Coefficients `c_0..=c_n` of det(xI − A), ascending, with `c_n = 1`.
///
/// Faddeev–LeVerrier: `M_k = A M_{k−1} + c_{n−k+1} I`, `c_{n−k} = −tr(A M_k)/k`.
/// The division is exact over the integers.
pub fn char_poly_i128(n: usize, entries: &[i64]) -> Result<Vec<i128>> {
    let a: Vec<i128> = entries.iter().map(|&v| v as i128).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![0i128; n * n];
    let mut am = vec![0i128; n * n];
    for k in 1..=n {
        let idx = n - k;
        let overflow = Error::CharPolyOverflow { index: idx };
        // M_k = A M_{k-1} + c_{n-k+1} I, using am = A M_{k-1} from the previous step
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = am[i * n + j];
            }
            m[i * n + i] = m[i * n + i].checked_add(c[idx + 1]).ok_or(overflow.clone())?;
        }
        let mut trace: i128 = 0;
        for i in 0..n {
            for j in 0..n {
                let mut s: i128 = 0;
                for l in 0..n {
                    let av = a[i * n + l];
                    if av == 0 {
                        continue;
                    }
                    let t = av.checked_mul(m[l * n + j]).ok_or(overflow.clone())?;
                    s = s.checked_add(t).ok_or(overflow.clone())?;
                }
                am[i * n + j] = s;
            }
            trace = trace.checked_add(am[i * n + i]).ok_or(overflow.clone())?;
        }
        let k_i = k as i128;
        debug_assert_eq!(trace % k_i, 0, "Faddeev–LeVerrier division must be exact");
        c[idx] = -(trace / k_i);
    }
    Ok(c)
}

pub(crate) fn big_to_i128(v: &BigInt) -> Option<i128> {
    v.to_i128()
}

pub(crate) fn big_abs_f64(v: &BigInt) -> f64 {
    v.abs().to_f64().unwrap_or(f64::INFINITY)
}
