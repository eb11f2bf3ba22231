//! Exact Cartan matrix arithmetic: determinant, inverse and magnitude.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kupisch::{HomDim, KupischSeries};

pub type Rational = Ratio<i128>;

/// Wire form of a rational: `{"num": p, "den": q}` in lowest terms, `q > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i128,
    pub den: i128,
}

impl From<Rational> for RationalJson {
    fn from(r: Rational) -> Self {
        RationalJson {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl From<RationalJson> for Rational {
    fn from(r: RationalJson) -> Self {
        Rational::new(r.num, r.den)
    }
}

/// `c_ij = dim e_i A e_j`: how often `j` occurs in the window
/// `i, i+1, ..., i+c_i-1` (mod `n` for cyclic algebras).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CartanMatrix {
    rows: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn of(a: &KupischSeries) -> Self {
        let n = a.len();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for t in 0..a.entries()[i] {
                row[(i + t) % n] += 1;
            }
        }
        CartanMatrix { rows }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == rows.len()), "matrix must be square");
        CartanMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// Fraction-free (Bareiss) elimination; every intermediate value is a
    /// minor of the matrix, so each division is exact.
    pub fn determinant(&self) -> Result<i128> {
        let n = self.size();
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<Vec<i128>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let mut negate = false;
        let mut prev: i128 = 1;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = m[i][j].checked_mul(m[k][k]).ok_or(Error::Overflow)?;
                    let b = m[i][k].checked_mul(m[k][j]).ok_or(Error::Overflow)?;
                    m[i][j] = a.checked_sub(b).ok_or(Error::Overflow)? / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        let det = m[n - 1][n - 1];
        Ok(if negate { -det } else { det })
    }

    /// Gauss-Jordan inverse over the rationals.
    pub fn inverse(&self) -> Result<Vec<Vec<Rational>>> {
        let n = self.size();
        let mut left: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x as i128)).collect())
            .collect();
        let mut right: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !left[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            left.swap(col, pivot);
            right.swap(col, pivot);
            let p = left[col][col];
            for j in 0..n {
                left[col][j] /= p;
                right[col][j] /= p;
            }
            for r in 0..n {
                if r == col || left[r][col].is_zero() {
                    continue;
                }
                let factor = left[r][col];
                for j in 0..n {
                    let l = left[col][j];
                    let q = right[col][j];
                    left[r][j] -= factor * l;
                    right[r][j] -= factor * q;
                }
            }
        }
        Ok(right)
    }
}

pub fn cartan_matrix(a: &KupischSeries) -> CartanMatrix {
    CartanMatrix::of(a)
}

pub fn cartan_determinant(a: &KupischSeries) -> Result<i128> {
    CartanMatrix::of(a).determinant()
}

/// Sum of all entries of the inverse Cartan matrix. Defined whenever the
/// Cartan matrix is invertible, including some algebras of infinite global
/// dimension.
pub fn magnitude(a: &KupischSeries) -> Result<Rational> {
    let inverse = CartanMatrix::of(a).inverse()?;
    Ok(inverse.iter().flatten().fold(Rational::zero(), |acc, &x| acc + x))
}

/// Alternating sum `sum_k (-1)^k dim Ext^k(A/J, A/J)` over `k = 0..=gldim`.
pub fn magnitude_via_ext(a: &KupischSeries) -> Result<i64> {
    let g = a
        .global_dimension()
        .finite()
        .ok_or(Error::InfiniteGlobalDimension)?;
    let n = a.len();
    let mut total = 0i64;
    for k in 0..=g {
        let mut dim = 0i64;
        for i in 0..n {
            for j in 0..n {
                dim += a.ext_dimension(i, j, k)? as i64;
            }
        }
        total += if k % 2 == 0 { dim } else { -dim };
    }
    Ok(total)
}

/// Number of simples whose projective dimension is even.
pub fn even_pdim_simple_count(a: &KupischSeries) -> Result<usize> {
    let dims = a.simple_projective_dimensions();
    if dims.iter().any(|d| !d.is_finite()) {
        return Err(Error::InfiniteGlobalDimension);
    }
    Ok(dims
        .iter()
        .filter(|d| matches!(d, HomDim::Finite(p) if p % 2 == 0))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(s: &str) -> KupischSeries {
        s.parse().unwrap()
    }

    /// Leibniz expansion over all permutations (Heap's algorithm).
    fn leibniz(m: &CartanMatrix) -> i128 {
        let n = m.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut c = vec![0usize; n];
        let mut sign = 1i128;
        let term = |p: &[usize], s: i128| -> i128 {
            s * p.iter().enumerate().map(|(i, &j)| m.get(i, j) as i128).product::<i128>()
        };
        let mut total = term(&perm, sign);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                sign = -sign;
                total += term(&perm, sign);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        total
    }

    #[test]
    fn printed_cartan_matrices() {
        let linear = CartanMatrix::of(&series("[3,4,4,3,2,1]"));
        assert_eq!(
            linear.rows(),
            &[
                vec![1, 1, 1, 0, 0, 0],
                vec![0, 1, 1, 1, 1, 0],
                vec![0, 0, 1, 1, 1, 1],
                vec![0, 0, 0, 1, 1, 1],
                vec![0, 0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 0, 1],
            ]
        );
        let cyclic = CartanMatrix::of(&series("[3,3,3,4]"));
        assert_eq!(
            cyclic.rows(),
            &[vec![1, 1, 1, 0], vec![0, 1, 1, 1], vec![1, 0, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(CartanMatrix::of(&series("[1]")).rows(), &[vec![1]]);
        // Window longer than n wraps more than once.
        assert_eq!(CartanMatrix::of(&series("[2,3]")).rows(), &[vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn determinants_match_leibniz() {
        for s in ["[3,4,4,3,2,1]", "[3,3,3,4]", "[2,2]", "[6,8,9,9,8,7]", "[4,4,5,5,4]", "[1]"] {
            let m = CartanMatrix::of(&series(s));
            assert_eq!(m.determinant().unwrap(), leibniz(&m), "{s}");
        }
        assert_eq!(cartan_determinant(&series("[3,4,4,3,2,1]")).unwrap(), 1);
        assert_eq!(cartan_determinant(&series("[3,3,3,4]")).unwrap(), 1);
        assert_eq!(cartan_determinant(&series("[2,2]")).unwrap(), 0);
        let swapped = CartanMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(swapped.determinant().unwrap(), -1);
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = CartanMatrix::of(&series("[6,8,9,9,8,7]"));
        let inv = m.inverse().unwrap();
        for i in 0..m.size() {
            for (j, _) in inv.iter().enumerate() {
                let dot = (0..m.size())
                    .fold(Rational::zero(), |acc, k| acc + Rational::from_integer(m.get(i, k) as i128) * inv[k][j]);
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(dot, expected);
            }
        }
    }

    #[test]
    fn magnitudes() {
        assert_eq!(magnitude(&series("[3,4,4,3,2,1]")).unwrap(), Rational::from_integer(2));
        assert_eq!(magnitude(&series("[3,3,3,4]")).unwrap(), Rational::from_integer(1));
        assert_eq!(magnitude(&series("[1]")).unwrap(), Rational::from_integer(1));
        assert_eq!(magnitude(&series("[2,2]")), Err(Error::SingularMatrix));
        // Invertible but of infinite global dimension: weight 2 loop.
        let wide = series("cyclic:[2]");
        assert_eq!(magnitude(&wide).unwrap(), Rational::new(1, 2));
    }

    #[test]
    fn magnitude_by_ext() {
        assert_eq!(magnitude_via_ext(&series("[3,4,4,3,2,1]")).unwrap(), 2);
        assert_eq!(magnitude_via_ext(&series("[1]")).unwrap(), 1);
        assert_eq!(magnitude_via_ext(&series("[6,8,9,9,8,7]")).unwrap(), 1);
        assert_eq!(magnitude_via_ext(&series("[2,2]")), Err(Error::InfiniteGlobalDimension));
    }

    #[test]
    fn even_counts() {
        assert_eq!(even_pdim_simple_count(&series("[3,3,3,4]")).unwrap(), 1);
        assert_eq!(even_pdim_simple_count(&series("[3,4,4,3,2,1]")).unwrap(), 2);
        assert_eq!(even_pdim_simple_count(&series("[1]")).unwrap(), 1);
        assert_eq!(even_pdim_simple_count(&series("[2,2]")), Err(Error::InfiniteGlobalDimension));
    }

    #[test]
    fn rational_json_shape() {
        let j = serde_json::to_string(&RationalJson::from(Rational::new(6, -4))).unwrap();
        assert_eq!(j, r#"{"num":-3,"den":2}"#);
        let m = serde_json::to_string(&CartanMatrix::of(&series("[2,1]"))).unwrap();
        assert_eq!(m, "[[1,1],[0,1]]");
    }
}
