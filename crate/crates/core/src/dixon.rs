//! Burnside–Dixon computation of the complex irreducible character table.
//!
//! The class-sum matrices of the group algebra commute and share a basis of
//! eigenvectors whose entries are the central characters
//! ω(K_j) = |K_j|·χ(z_j)/χ(1). Since these are algebraic integers in the
//! cyclotomic field of the group exponent e, the whole computation can be
//! carried out in GF(p) for a prime p ≡ 1 (mod e) with p > 2√|G|: the
//! common eigenspaces are one-dimensional, degrees are recovered from the
//! orthogonality relation, and the complex values are reconstructed from
//! eigenvalue multiplicities of the power map under a fixed correspondence
//! between the chosen e-th root of unity mod p and exp(2πi/e).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::modp::{is_prime, poly_roots, Gf, MatGf};

/// Hard cap for the prime search; far above anything a desk-scale group needs.
const PRIME_BOUND: u64 = 1 << 31;

/// Class multiplication coefficients `a[i][j][k]`, the number of pairs
/// `(x, y) ∈ K_i × K_j` with `xy` equal to the fixed representative of `K_k`.
pub fn class_constants(group: &GroupTable) -> Vec<Vec<Vec<u64>>> {
    let m = group.num_classes();
    let mut a = vec![vec![vec![0u64; m]; m]; m];
    for k in 0..m {
        let z = group.classes()[k].representative;
        for x in 0..group.order() {
            let i = group.class_of(x);
            let y = group.mul(group.inv(x), z);
            let j = group.class_of(y);
            a[i][j][k] += 1;
        }
    }
    a
}

/// Smallest prime ≡ 1 (mod e) exceeding 2√|G|.
pub fn dixon_prime(order: usize, exponent: usize) -> Result<u64> {
    let e = exponent as u64;
    let lower = (2.0 * (order as f64).sqrt()).floor() as u64;
    let mut p = e + 1;
    while p <= lower || !is_prime(p) {
        p += e;
        if p >= PRIME_BOUND {
            return Err(Error::PrimeSearchFailed { modulus: e, lower, bound: PRIME_BOUND });
        }
    }
    Ok(p)
}

/// The table over GF(p): one row per character, plus exact degrees.
struct ModularTable {
    gf: Gf,
    /// `values[t][k] = χ_t(z_k) mod p`.
    values: Vec<Vec<u64>>,
    degrees: Vec<u64>,
}

/// Full Burnside–Dixon run for `group`, producing complex values and exact
/// integer degrees. Rows are in a deterministic but unsorted order; the
/// caller sorts.
pub fn character_table(group: &GroupTable) -> Result<(Vec<Vec<Complex64>>, Vec<u64>, u64)> {
    let exponent = group.exponent();
    let p = dixon_prime(group.order(), exponent)?;
    let gf = Gf::new(p);
    let modular = modular_table(group, &gf)?;
    let complex = lift_to_complex(group, &modular, exponent as u64)?;
    Ok((complex, modular.degrees, p))
}

fn modular_table(group: &GroupTable, gf: &Gf) -> Result<ModularTable> {
    let m = group.num_classes();
    let order = group.order() as u64;
    let a = class_constants(group);

    // (A_i)[j][k] = a[i][j][k]; the vector u with u_k = ω(K_k) satisfies
    // A_i u = ω(K_i) u.
    let matrices: Vec<MatGf> = (0..m)
        .map(|i| {
            let mut mat = MatGf::zeros(m, m);
            for j in 0..m {
                for k in 0..m {
                    mat.set(j, k, a[i][j][k] % gf.p);
                }
            }
            mat
        })
        .collect();

    // Successively refine the common eigenspace decomposition.
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![MatGf::identity(m).data.chunks(m).map(|r| r.to_vec()).collect()];
    for mat in &matrices {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_invariant_subspace(gf, mat, &basis));
        }
        subspaces = next;
    }
    if let Some(bad) = subspaces.iter().find(|s| s.len() != 1) {
        return Err(Error::DegenerateEigenspace { dim: bad.len() });
    }

    // Normalize each eigenvector so the identity-class entry is 1
    // (ω(K_0) = 1 since class 0 is the identity class).
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(m);
    for basis in subspaces {
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::DegenerateEigenspace { dim: 0 });
        }
        let scale = gf.inv(v[0]);
        omegas.push(v.iter().map(|&x| gf.mul(x, scale)).collect());
    }

    // Degrees from Σ_k ω_k ω_{k*} / |K_k| = |G| / χ(1)².
    let sizes: Vec<u64> = group.classes().iter().map(|k| k.size as u64).collect();
    let inv_class: Vec<usize> = (0..m).map(|k| group.inverse_class(k)).collect();
    let max_degree = (group.order() as f64).sqrt() as u64 + 1;
    let mut degrees = Vec::with_capacity(m);
    let mut values = Vec::with_capacity(m);
    for u in &omegas {
        let mut s = 0u64;
        for k in 0..m {
            let term = gf.mul(gf.mul(u[k], u[inv_class[k]]), gf.inv(sizes[k] % gf.p));
            s = gf.add(s, term);
        }
        if s == 0 {
            return Err(Error::DegenerateEigenspace { dim: 0 });
        }
        let d_sq = gf.mul(order % gf.p, gf.inv(s));
        let d = (1..=max_degree)
            .find(|&d| gf.mul(d % gf.p, d % gf.p) == d_sq)
            .ok_or(Error::DegenerateEigenspace { dim: 0 })?;
        // χ(z_k) = χ(1) · ω_k / |K_k| in GF(p).
        let row: Vec<u64> = (0..m)
            .map(|k| gf.mul(gf.mul(d % gf.p, u[k]), gf.inv(sizes[k] % gf.p)))
            .collect();
        degrees.push(d);
        values.push(row);
    }
    Ok(ModularTable { gf: *gf, values, degrees })
}

/// Splits an invariant subspace (rows of `basis`) into the eigenspaces of
/// `mat` restricted to it.
fn split_invariant_subspace(gf: &Gf, mat: &MatGf, basis: &[Vec<u64>]) -> Vec<Vec<Vec<u64>>> {
    let d = basis.len();
    let m = basis[0].len();

    // Restricted matrix R with columns solving  mat·b_c = Σ_r R[r][c] b_r.
    // Solve the joint system [Bᵀ | mat·Bᵀ] by elimination.
    let mut aug = MatGf::zeros(m, d + d);
    for (c, b) in basis.iter().enumerate() {
        let image = mat.mul_vec(gf, b);
        for r in 0..m {
            aug.set(r, c, b[r]);
            aug.set(r, d + c, image[r]);
        }
    }
    let pivots = aug.rref(gf);
    debug_assert_eq!(pivots.len(), d, "basis rows must be independent");
    let mut restricted = MatGf::zeros(d, d);
    for c in 0..d {
        for r in 0..d {
            restricted.set(r, c, aug.at(r, d + c));
        }
    }

    let mut roots = poly_roots(gf, &restricted.char_poly(gf));
    roots.sort_unstable();
    let mut out = Vec::new();
    for lambda in roots {
        let mut shifted = restricted.clone();
        for i in 0..d {
            let v = gf.sub(shifted.at(i, i), lambda);
            shifted.set(i, i, v);
        }
        for coords in shifted.nullspace(gf) {
            // Back to ambient coordinates.
            let mut v = vec![0u64; m];
            for (r, &c) in coords.iter().enumerate() {
                if c != 0 {
                    for k in 0..m {
                        v[k] = gf.add(v[k], gf.mul(c, basis[r][k]));
                    }
                }
            }
            out.push(vec![v]);
        }
    }
    // Group eigenvectors by eigenvalue into subspaces.
    regroup_by_eigenvalue(gf, mat, out)
}

fn regroup_by_eigenvalue(gf: &Gf, mat: &MatGf, singles: Vec<Vec<Vec<u64>>>) -> Vec<Vec<Vec<u64>>> {
    let mut grouped: Vec<(u64, Vec<Vec<u64>>)> = Vec::new();
    for s in singles {
        let v = s.into_iter().next().unwrap();
        let image = mat.mul_vec(gf, &v);
        let pos = v.iter().position(|&x| x != 0).unwrap();
        let lambda = gf.mul(image[pos], gf.inv(v[pos]));
        match grouped.iter_mut().find(|(l, _)| *l == lambda) {
            Some((_, vs)) => vs.push(v),
            None => grouped.push((lambda, vec![v])),
        }
    }
    grouped.into_iter().map(|(_, vs)| vs).collect()
}

/// Reconstructs complex character values from the modular table.
///
/// For a class representative z of order d, the character value is a sum
/// of d-th roots of unity with multiplicities
/// `m_j = (1/d) Σ_s χ(z^s) w^{−js}` where w is the chosen root of order d
/// in GF(p); the same sum over exp(2πij/d) gives the complex value.
fn lift_to_complex(
    group: &GroupTable,
    table: &ModularTable,
    exponent: u64,
) -> Result<Vec<Vec<Complex64>>> {
    let gf = &table.gf;
    let m = group.num_classes();
    let z = gf.root_of_unity(exponent);

    // Power-map class data per class.
    let mut power_classes: Vec<Vec<usize>> = Vec::with_capacity(m);
    for class in group.classes() {
        let rep = class.representative;
        let d = group.element_order(rep);
        let mut powers = Vec::with_capacity(d);
        let mut acc = group.identity();
        for _ in 0..d {
            powers.push(group.class_of(acc));
            acc = group.mul(acc, rep);
        }
        power_classes.push(powers);
    }

    let tau = std::f64::consts::TAU;
    let mut out = Vec::with_capacity(table.values.len());
    for (t, row) in table.values.iter().enumerate() {
        let degree = table.degrees[t];
        let mut complex_row = Vec::with_capacity(m);
        for (k, powers) in power_classes.iter().enumerate() {
            let d = powers.len() as u64;
            let w = gf.pow(z, exponent / d);
            let w_inv = gf.inv(w);
            let d_inv = gf.inv(d % gf.p);
            let mut value = Complex64::new(0.0, 0.0);
            for j in 0..d {
                let mut s_acc = 0u64;
                let mut w_pow = 1u64; // w^{−js}
                let step = gf.pow(w_inv, j);
                for &cls in powers {
                    s_acc = gf.add(s_acc, gf.mul(row[cls], w_pow));
                    w_pow = gf.mul(w_pow, step);
                }
                let mult = gf.mul(d_inv, s_acc);
                if mult > degree {
                    return Err(Error::DegenerateEigenspace { dim: 0 });
                }
                if mult != 0 {
                    let angle = tau * j as f64 / d as f64;
                    value += Complex64::new(angle.cos(), angle.sin()) * mult as f64;
                }
            }
            complex_row.push(value);
        }
        out.push(complex_row);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(images: &[&[u32]]) -> GroupTable {
        let gens: Vec<Permutation> =
            images.iter().map(|im| Permutation::new(im.to_vec()).unwrap()).collect();
        GroupTable::build(&gens, 600).unwrap()
    }

    #[test]
    fn prime_selection() {
        // |A₅| = 60, exponent 30 → 31; |S₄| = 24, exponent 12 → 13.
        assert_eq!(dixon_prime(60, 30).unwrap(), 31);
        assert_eq!(dixon_prime(24, 12).unwrap(), 13);
        // Exponent 2, |G| = 8: need odd p > 5.65 → 7.
        assert_eq!(dixon_prime(8, 2).unwrap(), 7);
    }

    #[test]
    fn class_constants_row_sums() {
        // Σ_k a[i][j][k]·|K_k| = |K_i||K_j|.
        let g = group(&[&[1, 0, 2], &[1, 2, 0]]);
        let a = class_constants(&g);
        let m = g.num_classes();
        for i in 0..m {
            for j in 0..m {
                let total: u64 = (0..m).map(|k| a[i][j][k] * g.classes()[k].size as u64).sum();
                let expect = (g.classes()[i].size * g.classes()[j].size) as u64;
                assert_eq!(total, expect);
            }
        }
    }

    #[test]
    fn trivial_group_table() {
        let g = group(&[&[0]]);
        let (values, degrees, _) = character_table(&g).unwrap();
        assert_eq!(degrees, vec![1]);
        assert_eq!(values.len(), 1);
        assert!((values[0][0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn s3_degrees_and_values() {
        let g = group(&[&[1, 0, 2], &[1, 2, 0]]);
        let (values, mut degrees, _) = character_table(&g).unwrap();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2]);
        // Every value is real for S₃ and the degree-2 row is (2, −1, 0)
        // on classes (identity, 3-cycles, transpositions).
        for row in &values {
            for v in row {
                assert!(v.im.abs() < 1e-12);
            }
        }
        let deg2 = values
            .iter()
            .find(|row| (row[0].re - 2.0).abs() < 1e-9)
            .expect("degree-2 character");
        assert!((deg2[1].re + 1.0).abs() < 1e-9);
        assert!(deg2[2].re.abs() < 1e-9);
    }

    #[test]
    fn a5_degrees_and_golden_ratio() {
        let g = group(&[&[1, 2, 3, 4, 0], &[1, 2, 0, 3, 4]]);
        let (values, mut degrees, p) = character_table(&g).unwrap();
        assert_eq!(p, 31);
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 3, 3, 4, 5]);
        // The degree-3 rows take (1±√5)/2 on the two classes of 5-cycles
        // (classes 1 and 2 in size order: sizes 12, 12).
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        let psi = (1.0 - 5.0_f64.sqrt()) / 2.0;
        let (_, raw_degrees, _) = character_table(&g).unwrap();
        for (row, &d) in values.iter().zip(raw_degrees.iter()) {
            if d == 3 {
                let a = row[1].re;
                let b = row[2].re;
                assert!(
                    ((a - phi).abs() < 1e-9 && (b - psi).abs() < 1e-9)
                        || ((a - psi).abs() < 1e-9 && (b - phi).abs() < 1e-9),
                    "degree-3 values on 5-cycle classes: {a}, {b}"
                );
            }
        }
    }

    #[test]
    fn degree_squares_sum_to_order() {
        for gens in [
            vec![vec![1u32, 0, 2, 3], vec![1, 2, 3, 0]],       // S₄
            vec![vec![1u32, 2, 0, 3], vec![0, 2, 3, 1]],       // A₄
        ] {
            let perms: Vec<&[u32]> = gens.iter().map(|v| v.as_slice()).collect();
            let g = group(&perms);
            let (_, degrees, _) = character_table(&g).unwrap();
            let total: u64 = degrees.iter().map(|d| d * d).sum();
            assert_eq!(total, g.order() as u64);
        }
    }
}
