use super::{CMatrix, Complex, MAX_DIM};
use crate::error::{Error, Result};
use crate::tolerance::TOL;

/// Unitary similarity to upper Hessenberg form by Householder reflections.
pub fn hessenberg(a: &CMatrix) -> Result<CMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut h = a.clone();
    let mut v = vec![Complex::new(0.0, 0.0); n];
    for k in 0..n.saturating_sub(2) {
        let xnorm = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            Complex::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        for i in k + 1..n {
            v[i] = h[(i, k)];
        }
        v[k + 1] += phase * xnorm;
        let vnorm_sqr: f64 = (k + 1..n).map(|i| v[i].norm_sqr()).sum();
        let beta = 2.0 / vnorm_sqr;

        for j in k..n {
            let s: Complex = (k + 1..n).map(|i| v[i].conj() * h[(i, j)]).sum::<Complex>() * beta;
            for i in k + 1..n {
                let vi = v[i];
                h[(i, j)] -= vi * s;
            }
        }
        for i in 0..n {
            let s: Complex = (k + 1..n).map(|l| h[(i, l)] * v[l]).sum::<Complex>() * beta;
            for l in k + 1..n {
                let vl = v[l].conj();
                h[(i, l)] -= s * vl;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = Complex::new(0.0, 0.0);
        }
    }
    Ok(h)
}

/// All eigenvalues of a square matrix of size at most 8, with multiplicity.
///
/// Hessenberg reduction followed by explicitly shifted complex QR sweeps
/// (Wilkinson shift, Givens rotations) with deflation at negligible
/// subdiagonals. Order of the result is unspecified.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<Complex>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n > MAX_DIM {
        return Err(Error::TooLarge(n));
    }
    if a.as_slice()
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::NonFinite);
    }
    let mut h = hessenberg(a)?;
    let scale = h.norm();
    let mut eig = Vec::with_capacity(n);
    if scale == 0.0 {
        eig.resize(n, Complex::new(0.0, 0.0));
        return Ok(eig);
    }

    let mut hi = n - 1;
    let mut sweeps = 0usize;
    while hi > 0 {
        let lo = active_block_start(&h, hi, scale);
        if lo == hi {
            eig.push(h[(hi, hi)]);
            hi -= 1;
            sweeps = 0;
            continue;
        }
        sweeps += 1;
        if sweeps > TOL.eigen_max_sweeps {
            return Err(Error::NoConvergence { sweeps: sweeps - 1 });
        }
        let shift = if sweeps.is_multiple_of(10) {
            // Break cycles with an ad hoc shift.
            h[(hi, hi)] + Complex::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_sweep(&mut h, lo, hi, shift);
    }
    eig.push(h[(0, 0)]);
    Ok(eig)
}

/// Index of the first row of the unreduced block ending at `hi`; zeroes the
/// subdiagonal entry that splits it off.
fn active_block_start(h: &CMatrix, hi: usize, scale: f64) -> usize {
    let mut l = hi;
    while l > 0 {
        let mut s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
        if s == 0.0 {
            s = scale;
        }
        if h[(l, l - 1)].norm() <= f64::EPSILON * s {
            break;
        }
        l -= 1;
    }
    l
}

/// Eigenvalue of the trailing 2×2 block closer to its last diagonal entry.
fn wilkinson_shift(h: &CMatrix, hi: usize) -> Complex {
    let a = h[(hi - 1, hi - 1)];
    let b = h[(hi - 1, hi)];
    let c = h[(hi, hi - 1)];
    let d = h[(hi, hi)];
    let mean = (a + d) * 0.5;
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let l1 = mean + disc;
    let l2 = mean - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// One shifted QR step `H − μI = QR, H ← RQ + μI` on rows/cols `lo..=hi`.
fn qr_sweep(h: &mut CMatrix, lo: usize, hi: usize, shift: Complex) {
    for k in lo..=hi {
        h[(k, k)] -= shift;
    }
    let mut rotations = [(Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)); 8];
    for k in lo..hi {
        let x = h[(k, k)];
        let y = h[(k + 1, k)];
        let r = x.norm().hypot(y.norm());
        let (c, s) = if r == 0.0 {
            (Complex::new(1.0, 0.0), Complex::new(0.0, 0.0))
        } else {
            (x / r, y / r)
        };
        rotations[k] = (c, s);
        for j in k..=hi {
            let top = h[(k, j)];
            let bot = h[(k + 1, j)];
            h[(k, j)] = c.conj() * top + s.conj() * bot;
            h[(k + 1, j)] = c * bot - s * top;
        }
        h[(k + 1, k)] = Complex::new(0.0, 0.0);
    }
    for k in lo..hi {
        let (c, s) = rotations[k];
        for i in lo..=(k + 2).min(hi) {
            let left = h[(i, k)];
            let right = h[(i, k + 1)];
            h[(i, k)] = c * left + s * right;
            h[(i, k + 1)] = c.conj() * right - s.conj() * left;
        }
    }
    for k in lo..=hi {
        h[(k, k)] += shift;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn sorted_re(mut v: Vec<Complex>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re));
        v.into_iter().map(|z| z.re).collect()
    }

    #[test]
    fn diagonal_spectrum() {
        let d = CMatrix::from_diagonal(&[c(3.0, 0.0), c(1.0, 0.0), c(4.0, 0.0), c(1.0, 0.0)]);
        let ev = sorted_re(eigenvalues(&d).unwrap());
        assert_eq!(ev, vec![1.0, 1.0, 3.0, 4.0]);
    }

    #[test]
    fn identity_spectrum() {
        let ev = eigenvalues(&CMatrix::identity(4)).unwrap();
        assert_eq!(ev.len(), 4);
        assert!(ev.iter().all(|z| (z - c(1.0, 0.0)).norm() < 1e-15));
    }

    #[test]
    fn rotation_has_complex_pair() {
        let m = CMatrix::from_rows(&[[c(0.0, 0.0), c(-1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        let mut ev = eigenvalues(&m).unwrap();
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((ev[1] - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn jordan_block_converges() {
        let m = CMatrix::from_rows(&[
            [c(2.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)],
        ]);
        let ev = eigenvalues(&m).unwrap();
        assert!(ev.iter().all(|z| (z - c(2.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn companion_matrix_roots() {
        // x^4 - 10x^3 + 35x^2 - 50x + 24 = (x-1)(x-2)(x-3)(x-4)
        let m = CMatrix::from_rows(&[
            [c(10.0, 0.0), c(-35.0, 0.0), c(50.0, 0.0), c(-24.0, 0.0)],
            [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        ]);
        let ev = sorted_re(eigenvalues(&m).unwrap());
        for (got, want) in ev.iter().zip([1.0, 2.0, 3.0, 4.0]) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn zero_and_scalar_matrices() {
        assert_eq!(
            eigenvalues(&CMatrix::zeros(3, 3)).unwrap(),
            vec![c(0.0, 0.0); 3]
        );
        let one = CMatrix::from_rows(&[[c(2.5, -1.0)]]);
        assert_eq!(eigenvalues(&one).unwrap(), vec![c(2.5, -1.0)]);
    }

    #[test]
    fn hessenberg_shape_and_similarity() {
        let a = CMatrix::from_fn(6, 6, |i, j| {
            c((i * 7 + j * 3) as f64 % 5.0 - 2.0, (i + j) as f64 * 0.1)
        });
        let h = hessenberg(&a).unwrap();
        for i in 0..6usize {
            for j in 0..i.saturating_sub(1) {
                assert_eq!(h[(i, j)], c(0.0, 0.0));
            }
        }
        assert!((h.trace() - a.trace()).norm() < 1e-12);
        assert!((h.norm() - a.norm()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            eigenvalues(&CMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            eigenvalues(&CMatrix::identity(9)),
            Err(Error::TooLarge(9))
        ));
    }
}
