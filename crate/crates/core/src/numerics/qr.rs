use super::{CMatrix, Complex};
use crate::error::{Error, Result};

/// Householder QR of a square matrix, `a = q · r`.
///
/// The diagonal of `r` is made real and nonnegative by moving phases into
/// `q`. With that convention the factorization of a full-rank matrix is
/// unique, which is what makes QR of a Ginibre matrix Haar distributed.
/// Columns that are already zero below the diagonal are left alone, so
/// rank-deficient input still factors (with a zero on the diagonal of `r`).
pub fn qr_decompose(a: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut r = a.clone();
    let mut q = CMatrix::identity(n);
    let mut v = vec![Complex::new(0.0, 0.0); n];

    for k in 0..n.saturating_sub(1) {
        let xnorm = (k..n).map(|i| r[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() == 0.0 {
            Complex::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * xnorm;
        for i in k..n {
            v[i] = r[(i, k)];
        }
        v[k] -= alpha;
        let vnorm_sqr: f64 = (k..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm_sqr == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm_sqr;

        // r ← (I − β v v†) r
        for j in k..n {
            let s: Complex = (k..n).map(|i| v[i].conj() * r[(i, j)]).sum();
            let s = s * beta;
            for i in k..n {
                let vi = v[i];
                r[(i, j)] -= vi * s;
            }
        }
        // q ← q (I − β v v†)
        for i in 0..n {
            let s: Complex = (k..n).map(|l| q[(i, l)] * v[l]).sum();
            let s = s * beta;
            for l in k..n {
                let vl = v[l].conj();
                q[(i, l)] -= s * vl;
            }
        }
    }

    for j in 0..n {
        for i in j + 1..n {
            r[(i, j)] = Complex::new(0.0, 0.0);
        }
        let d = r[(j, j)];
        let m = d.norm();
        if m == 0.0 {
            continue;
        }
        let phase = d / m;
        for l in j..n {
            r[(j, l)] *= phase.conj();
        }
        r[(j, j)] = Complex::new(m, 0.0);
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    Ok((q, r))
}
