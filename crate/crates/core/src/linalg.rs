//! Fraction-free elimination over [`Scalar`] matrices.

use crate::exact::{ExactError, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Row with the fewest terms among nonzero candidates in `col`, from `start`.
fn choose_pivot(m: &Matrix, start: usize, col: usize) -> Option<usize> {
    (start..m.len())
        .filter(|&i| !m[i][col].is_zero())
        .min_by_key(|&i| (m[i][col].term_count(), i))
}

/// Bareiss elimination in place. Returns the pivot columns; every division
/// is exact. The sign of the row permutation is returned alongside.
fn bareiss_echelon(
    m: &mut Matrix,
    stop_on_missing_pivot: bool,
) -> Result<(Vec<usize>, bool), ExactError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = Scalar::one();
    let mut pivots = Vec::new();
    let mut negated = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = choose_pivot(m, r, c) else {
            if stop_on_missing_pivot {
                return Ok((pivots, negated));
            }
            continue;
        };
        if p != r {
            m.swap(p, r);
            negated = !negated;
        }
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let lead = m[i][c].clone();
            for j in c + 1..cols {
                let num = m[i][j].try_mul(&pivot)?.try_sub(&m[r][j].try_mul(&lead)?)?;
                m[i][j] = num.try_div(&prev)?;
            }
            m[i][c] = Scalar::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Ok((pivots, negated))
}

/// Determinant of a square matrix without assuming any structure.
pub fn determinant(a: &Matrix) -> Result<Scalar, ExactError> {
    let n = a.len();
    if n == 0 {
        return Ok(Scalar::one());
    }
    assert!(
        a.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    let mut m = a.clone();
    let (pivots, negated) = bareiss_echelon(&mut m, true)?;
    if pivots.len() < n {
        return Ok(Scalar::zero());
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negated { -d } else { d })
}

/// Basis of `{x : a·x = 0}`. Entries must be numeric so the back
/// substitution can divide by pivots.
///
/// Each basis vector has a 1 in one free column and 0 in the others.
pub fn kernel(a: &Matrix) -> Result<Vec<Vec<Scalar>>, ExactError> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let (pivots, _) = bareiss_echelon(&mut m, false)?;
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Scalar::zero(); cols];
        x[f] = Scalar::one();
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut s = Scalar::zero();
            for j in pc + 1..cols {
                if !x[j].is_zero() && !m[row][j].is_zero() {
                    s = s.try_add(&m[row][j].try_mul(&x[j])?)?;
                }
            }
            x[pc] = s.neg_ref().try_div(&m[row][pc])?;
        }
        out.push(x);
    }
    Ok(out)
}

pub fn mat_vec(a: &Matrix, x: &[Scalar]) -> Result<Vec<Scalar>, ExactError> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .try_fold(Scalar::zero(), |acc, (r, v)| acc.try_add(&r.try_mul(v)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
            .collect()
    }

    #[test]
    fn numeric_determinants() {
        assert_eq!(
            determinant(&m(&[&["2", "1"], &["1", "3"]])).unwrap(),
            Scalar::int(5)
        );
        assert_eq!(
            determinant(&m(&[&["0", "1"], &["1", "0"]])).unwrap(),
            Scalar::int(-1)
        );
        assert_eq!(
            determinant(&m(&[&["1", "2"], &["2", "4"]])).unwrap(),
            Scalar::zero()
        );
        assert_eq!(determinant(&Vec::new()).unwrap(), Scalar::one());
        let d = determinant(&m(&[
            &["1/2", "√2", "0"],
            &["1", "1", "3"],
            &["0", "2", "1"],
        ]))
        .unwrap();
        assert_eq!(d, "-5/2 - √2".parse().unwrap());
    }

    #[test]
    fn symbolic_determinant() {
        let d = determinant(&m(&[&["a", "b"], &["c", "d"]])).unwrap();
        assert_eq!(d, "a*d - b*c".parse().unwrap());
        let d = determinant(&m(&[&["x", "1", "0"], &["1", "x", "1"], &["0", "1", "x"]])).unwrap();
        assert_eq!(d, "x^3 - 2*x".parse().unwrap());
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let a = m(&[&["0", "-10"], &["0", "0"]]);
        assert_eq!(
            kernel(&a).unwrap(),
            vec![vec![Scalar::one(), Scalar::zero()]]
        );
        let a = m(&[&["1", "2", "3"], &["2", "4", "6"]]);
        let k = kernel(&a).unwrap();
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(mat_vec(&a, x).unwrap().iter().all(Scalar::is_zero));
        }
        assert!(kernel(&m(&[&["1", "1"], &["0", "1"]])).unwrap().is_empty());
    }
}
