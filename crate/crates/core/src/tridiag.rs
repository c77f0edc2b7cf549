//! Eigendecomposition of real symmetric tridiagonal matrices.
//!
//! QL iteration with implicit shifts (Press et al., Numerical Recipes,
//! section 11.4), with eigenvector accumulation. The interaction Hamiltonian
//! of each invariant subspace is exactly tridiagonal, so this is all the
//! linear algebra the quantum engine needs.

/// Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric
/// tridiagonal matrix. Eigenvector j occupies `vectors[j*dim .. (j+1)*dim]`
/// (column-major).
#[derive(Debug, Clone)]
pub struct TridiagEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

/// Diagonalizes the symmetric tridiagonal matrix with diagonal `diag` and
/// subdiagonal `offdiag` (`offdiag[i]` couples rows i and i+1).
///
/// Panics if `offdiag.len() + 1 != diag.len()` or the iteration fails to
/// converge (which does not happen for finite inputs; 50 sweeps per
/// eigenvalue is far beyond the usual 4-6).
pub fn eigh_tridiagonal(diag: &[f64], offdiag: &[f64]) -> TridiagEigen {
    let n = diag.len();
    assert!(n > 0, "empty matrix");
    assert_eq!(offdiag.len() + 1, n, "offdiag length must be dim - 1");

    let mut d = diag.to_vec();
    let mut e = Vec::with_capacity(n);
    e.extend_from_slice(offdiag);
    e.push(0.0);

    // Rotation accumulator, column-major, starts as the identity.
    let mut z = vec![0.0_f64; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }

    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a negligible subdiagonal element to split the matrix.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "tridiagonal QL failed to converge");

            // Implicit shift from the 2x2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // Accumulate the rotation into eigenvector columns i, i+1.
                let (left, right) = z.split_at_mut((i + 1) * n);
                let col_i = &mut left[i * n..];
                let col_ip1 = &mut right[..n];
                for k in 0..n {
                    f = col_ip1[k];
                    col_ip1[k] = s * col_i[k] + c * f;
                    col_i[k] = c * col_i[k] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // Sort ascending, permuting eigenvector columns alongside.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let mut vectors = vec![0.0_f64; n * n];
    for (dst, &src) in order.iter().enumerate() {
        vectors[dst * n..(dst + 1) * n].copy_from_slice(&z[src * n..(src + 1) * n]);
    }
    TridiagEigen { values, vectors }
}
