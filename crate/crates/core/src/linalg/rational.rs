//! Exact rational row reduction, used to ingest realized arrangements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type RatVector = Vec<BigRational>;

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[RatVector], cols: usize) -> (Vec<RatVector>, Vec<usize>) {
    let mut m: Vec<RatVector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (a, b) = if i < r {
                    let (h, t) = m.split_at_mut(r);
                    (&mut h[i], &t[0])
                } else {
                    let (h, t) = m.split_at_mut(i);
                    (&mut t[0], &h[r])
                };
                for (x, y) in a.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[RatVector], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn nullspace(rows: &[RatVector], cols: usize) -> Vec<RatVector> {
    let (red, pivots) = rref(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(xs: &[i64]) -> RatVector {
        xs.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    }

    #[test]
    fn nullspace_of_plane() {
        let rows = vec![q(&[1, 1, 1])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&rows[0], v).is_zero());
        }
        assert_eq!(rank(&[q(&[1, 2]), q(&[2, 4])], 2), 1);
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-3).into(), 4.into()),
        ];
        assert_eq!(
            primitive_integer(&v),
            vec![BigInt::from(2), BigInt::from(-3)]
        );
    }
}
