//! Exactly verified lower bounds on eigenvalue counts.
//!
//! Floating point only proposes test vectors; the conclusion rests on an exact
//! integer Gram matrix. If the form `x ↦ xᵀ(M − bI)x` is positive definite on
//! a `k`-dimensional subspace, then `M` has at least `k` eigenvalues above `b`.

use super::matrix::IntMatrix;

const SCALE: f64 = (1u64 << 20) as f64;
const TINY: f64 = 1e-9;

/// `true` only if `m` provably has at least `count` eigenvalues greater than
/// `bound`. A `false` answer proves nothing.
///
/// Test vectors come from a floating-point `LDLᵀ` factorisation of
/// `bound·I − m` with symmetric diagonal pivoting: each negative pivot `d_k`
/// yields `x = L⁻ᵀ e_k` with `xᵀ(bound·I − m)x = d_k`, and these vectors are
/// mutually orthogonal for the form.
pub fn exceeds_with_witness(m: &IntMatrix, bound: i64, count: usize) -> bool {
    let n = m.order();
    if count == 0 {
        return true;
    }
    if count > n {
        return false;
    }
    let mut a: Vec<f64> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            (i64::from(i == j) * bound - m.get(i, j)) as f64
        })
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let swap = |a: &mut Vec<f64>, perm: &mut Vec<usize>, k: usize, p: usize| {
        if p != k {
            perm.swap(k, p);
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            for r in 0..n {
                a.swap(r * n + k, r * n + p);
            }
        }
    };
    // after a step at k, a[i][k] for i past the pivot block holds column k of L;
    // each negative direction is a vector z with xᵀ(bound·I − m)x < 0 for x = L⁻ᵀz
    let mut directions: Vec<Vec<f64>> = Vec::with_capacity(count);
    let mut k = 0;
    while k < n && directions.len() < count {
        let p = (k..n)
            .max_by(|&x, &y| a[x * n + x].abs().total_cmp(&a[y * n + y].abs()))
            .expect("nonempty range");
        if a[p * n + p].abs() > TINY {
            swap(&mut a, &mut perm, k, p);
            let d = a[k * n + k];
            if d < 0.0 {
                let mut z = vec![0.0; n];
                z[k] = 1.0;
                directions.push(z);
            }
            for i in k + 1..n {
                let l = a[i * n + k] / d;
                if l != 0.0 {
                    for j in k + 1..n {
                        a[i * n + j] -= l * a[k * n + j];
                    }
                }
            }
            for i in k + 1..n {
                a[i * n + k] /= d;
                a[k * n + i] = a[i * n + k];
            }
            k += 1;
            continue;
        }
        // only zero diagonals remain: pivot on the 2x2 block with the largest
        // off-diagonal entry, which is indefinite
        let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i * n + j].abs() > TINY)
            .max_by(|&(i, j), &(u, v)| a[i * n + j].abs().total_cmp(&a[u * n + v].abs()))
        else {
            break;
        };
        swap(&mut a, &mut perm, k, i);
        swap(&mut a, &mut perm, k + 1, j);
        let (e11, e12, e22) = (a[k * n + k], a[k * n + k + 1], a[(k + 1) * n + k + 1]);
        let det = e11 * e22 - e12 * e12;
        let half_trace = (e11 + e22) / 2.0;
        let low = half_trace - (half_trace * half_trace - det).sqrt();
        let mut z = vec![0.0; n];
        z[k] = e12;
        z[k + 1] = low - e11;
        directions.push(z);
        // L columns for the block: [a_ik, a_i,k+1] E⁻¹
        for r in k + 2..n {
            let (c1, c2) = (a[r * n + k], a[r * n + k + 1]);
            a[r * n + k] = (c1 * e22 - c2 * e12) / det;
            a[r * n + k + 1] = (c2 * e11 - c1 * e12) / det;
        }
        for r in k + 2..n {
            for c in k + 2..n {
                a[r * n + c] -= a[r * n + k] * a[k * n + c] + a[r * n + k + 1] * a[(k + 1) * n + c];
            }
        }
        for r in k + 2..n {
            a[k * n + r] = a[r * n + k];
            a[(k + 1) * n + r] = a[r * n + k + 1];
        }
        a[(k + 1) * n + k] = 0.0;
        a[k * n + k + 1] = 0.0;
        k += 2;
    }
    if directions.len() < count {
        return false;
    }
    let vectors: Vec<Vec<i64>> = directions
        .iter()
        .map(|z| {
            let y = back_substitute(&a, n, k, z);
            let mut x = vec![0; n];
            for (i, &v) in y.iter().enumerate() {
                x[perm[i]] = v;
            }
            x
        })
        .collect();
    exact_gram_is_positive_definite(m, bound, &vectors)
}

/// Solves `Lᵀ x = z`, where the first `factored` columns of the unit lower
/// triangle are stored below the diagonal of `a` and the rest is the identity,
/// then scales and rounds to integers.
fn back_substitute(a: &[f64], n: usize, factored: usize, z: &[f64]) -> Vec<i64> {
    let mut x = z.to_vec();
    for i in (0..factored.min(n)).rev() {
        let mut s = 0.0;
        for j in i + 1..n {
            s += a[j * n + i] * x[j];
        }
        x[i] = z[i] - s;
    }
    let top = x.iter().fold(0.0f64, |t, v| t.max(v.abs()));
    x.iter().map(|v| (v / top * SCALE).round() as i64).collect()
}

/// Gram matrix of `m − bound·I` on `vectors`, tested for positive definiteness exactly.
fn exact_gram_is_positive_definite(m: &IntMatrix, bound: i64, vectors: &[Vec<i64>]) -> bool {
    let n = m.order();
    let image: Vec<Vec<i128>> = vectors
        .iter()
        .map(|x| {
            (0..n)
                .map(|i| {
                    let row: i128 = (0..n).map(|j| m.get(i, j) as i128 * x[j] as i128).sum();
                    row - bound as i128 * x[i] as i128
                })
                .collect()
        })
        .collect();
    let mut gram = Vec::with_capacity(vectors.len());
    for x in vectors {
        let mut row = Vec::with_capacity(vectors.len());
        for y in &image {
            let v: i128 = x.iter().zip(y).map(|(&a, &b)| a as i128 * b).sum();
            let Ok(v) = i64::try_from(v) else {
                return false;
            };
            row.push(v);
        }
        gram.push(row);
    }
    IntMatrix::from_rows(&gram).is_positive_definite()
}
