//! Orthonormal descriptions of the classical types `B_n` and `C_n`.
//!
//! Vectors are integer coordinates in an orthonormal basis `L_1, ..., L_n`.
//! Simple roots follow the Bourbaki numbering:
//!
//! * `B_n`: `α_m = L_m - L_{m+1}` for `m < n`, `α_n = L_n`
//! * `C_n`: `α_m = L_m - L_{m+1}` for `m < n`, `α_n = 2 L_n`
//!
//! Positive roots are `L_i ± L_j` (`i < j`) together with `L_i` for `B_n`
//! and `2 L_i` for `C_n`.

use super::RootType;

/// Simple roots `α_1, ..., α_n` in `L`-coordinates.
pub fn simple_roots(label: RootType, n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|m| {
            let mut v = vec![0; n];
            if m + 1 < n {
                v[m] = 1;
                v[m + 1] = -1;
            } else {
                v[m] = match label {
                    RootType::C => 2,
                    _ => 1,
                };
            }
            v
        })
        .collect()
}

/// All positive roots in `L`-coordinates.
pub fn orthonormal_positive_roots(label: RootType, n: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = vec![0; n];
            minus[i] = 1;
            minus[j] = -1;
            roots.push(minus);
            let mut plus = vec![0; n];
            plus[i] = 1;
            plus[j] = 1;
            roots.push(plus);
        }
        let mut short_or_long = vec![0; n];
        short_or_long[i] = match label {
            RootType::C => 2,
            _ => 1,
        };
        roots.push(short_or_long);
    }
    roots
}

/// Expresses an `L`-vector in the simple-root basis. The change of basis is
/// bidiagonal, so forward substitution suffices; returns `None` if the vector
/// is not an integral combination.
pub fn to_simple_coords(label: RootType, v: &[i64]) -> Option<Vec<i64>> {
    let n = v.len();
    let simple = simple_roots(label, n);
    let mut c = vec![0i64; n];
    for m in 0..n {
        // x_m = c_m (α_m)_m + c_{m-1} (α_{m-1})_m
        let carry = if m > 0 { c[m - 1] * simple[m - 1][m] } else { 0 };
        let rest = v[m] - carry;
        let diag = simple[m][m];
        if rest % diag != 0 {
            return None;
        }
        c[m] = rest / diag;
    }
    Some(c)
}

/// Inverse of [`to_simple_coords`].
pub fn to_orthonormal(label: RootType, coeffs: &[i64]) -> Vec<i64> {
    let n = coeffs.len();
    let simple = simple_roots(label, n);
    let mut v = vec![0; n];
    for (c, alpha) in coeffs.iter().zip(&simple) {
        for (x, a) in v.iter_mut().zip(alpha) {
            *x += c * a;
        }
    }
    v
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_short_root() {
        // L_1 = α_1 + α_2 + α_3 in B_3
        assert_eq!(
            to_simple_coords(RootType::B, &[1, 0, 0]),
            Some(vec![1, 1, 1])
        );
    }

    #[test]
    fn c3_long_root() {
        // 2 L_1 = 2α_1 + 2α_2 + α_3 in C_3
        assert_eq!(
            to_simple_coords(RootType::C, &[2, 0, 0]),
            Some(vec![2, 2, 1])
        );
        // L_1 alone is not in the root lattice of C_n
        assert_eq!(to_simple_coords(RootType::C, &[1, 0, 0]), None);
    }

    #[test]
    fn round_trip() {
        for label in [RootType::B, RootType::C] {
            for root in orthonormal_positive_roots(label, 5) {
                let c = to_simple_coords(label, &root).unwrap();
                assert_eq!(to_orthonormal(label, &c), root);
            }
        }
    }
}
