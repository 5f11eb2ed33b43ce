//! LLL reduction of ideal lattices for the Minkowski form
//! `T2(x) = sum |sigma_k(x)|^2`.
//!
//! Floating point only steers the reduction; the basis is transformed by
//! exact integer row operations, so the result spans the same lattice.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use crate::exactla::MonicIntPoly;

/// All complex roots, by Durand–Kerner iteration.
pub(crate) fn complex_roots(chi: &MonicIntPoly) -> Vec<Complex64> {
    let c: Vec<f64> = chi.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect();
    let n = chi.degree();
    let eval = |z: Complex64| c.iter().fold(Complex64::zero(), |acc, &a| acc * z + a);
    let radius = 1.0 + c.iter().skip(1).fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 * radius {
            break;
        }
    }
    z
}

fn embed(row: &[BigInt], roots: &[Complex64]) -> Vec<Complex64> {
    let coeffs: Vec<f64> = row.iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect();
    roots
        .iter()
        .map(|&r| coeffs.iter().rev().fold(Complex64::zero(), |acc, &a| acc * r + a))
        .collect()
}

fn dot(x: &[Complex64], y: &[Complex64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a * b.conj()).re).sum()
}

/// LLL-reduced basis (`delta = 3/4`) of the lattice with the given rows.
pub(crate) fn lll(rows: &[Vec<BigInt>], roots: &[Complex64]) -> Vec<Vec<BigInt>> {
    let n = rows.len();
    let mut b: Vec<Vec<BigInt>> = rows.to_vec();
    let mut e: Vec<Vec<Complex64>> = b.iter().map(|r| embed(r, roots)).collect();
    let mut k = 1;
    let mut iterations = 0;
    while k < n && iterations < 10_000 {
        iterations += 1;
        for j in (0..k).rev() {
            let (mu, _) = gram_schmidt_coeff(&e, k, j);
            if mu.abs() > 0.5 {
                let q = mu.round();
                let qi = BigInt::from_f64(q).unwrap_or_default();
                let (bj, ej) = (b[j].clone(), e[j].clone());
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= &qi * y;
                }
                for (x, y) in e[k].iter_mut().zip(&ej) {
                    *x -= y * q;
                }
            }
        }
        let (star, norms) = orthogonalize(&e);
        let mu = dot(&e[k], &star[k - 1]) / norms[k - 1];
        if norms[k] >= (0.75 - mu * mu) * norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            e.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    b
}

fn orthogonalize(e: &[Vec<Complex64>]) -> (Vec<Vec<Complex64>>, Vec<f64>) {
    let mut star: Vec<Vec<Complex64>> = Vec::with_capacity(e.len());
    let mut norms = Vec::with_capacity(e.len());
    for v in e {
        let mut w = v.clone();
        for (s, &ns) in star.iter().zip(&norms) {
            let mu = dot(v, s) / ns;
            for (x, y) in w.iter_mut().zip(s) {
                *x -= y * mu;
            }
        }
        norms.push(dot(&w, &w).max(f64::MIN_POSITIVE));
        star.push(w);
    }
    (star, norms)
}

fn gram_schmidt_coeff(e: &[Vec<Complex64>], k: usize, j: usize) -> (f64, f64) {
    let (star, norms) = orthogonalize(&e[..=j]);
    (dot(&e[k], &star[j]) / norms[j], norms[j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::hnf;

    #[test]
    fn roots_of_cubic() {
        let chi = MonicIntPoly::from_i64(&[1, 0, -1, -1]).unwrap();
        let r = complex_roots(&chi);
        let real: Vec<f64> = r.iter().filter(|z| z.im.abs() < 1e-9).map(|z| z.re).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0] - 1.324_717_957_244_746).abs() < 1e-10);
    }

    #[test]
    fn reduction_keeps_the_lattice() {
        let chi = MonicIntPoly::from_i64(&[1, 0, 0, -6]).unwrap();
        let roots = complex_roots(&chi);
        let rows: Vec<Vec<BigInt>> = [[1i64, 0, 0], [917, 1, 0], [413, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let red = lll(&rows, &roots);
        assert_eq!(hnf(&red, 3).unwrap(), hnf(&rows, 3).unwrap());
        let t2 = |r: &Vec<BigInt>| {
            let e = embed(r, &roots);
            dot(&e, &e)
        };
        assert!(red.iter().all(|r| t2(r) < 1e3), "{red:?}");
    }
}
