//! Exact sparse matrices over a [`FieldSpec`] with rank, pivot profile and
//! kernel computations.
//!
//! Every routine first splits the matrix into the connected components of
//! its row/column incidence graph. The matrices built from multigraded
//! multiplication maps fall apart into many small blocks this way, and
//! rank, pivot columns and kernels are all additive over blocks.
//!
//! Over `F_p` blocks are eliminated densely with `u64` residues. Over `Q`
//! each block is scaled to integer rows and eliminated fraction-free
//! (Bareiss); a reduction modulo a large prime certifies full rank first,
//! since `rank_Q >= rank_p` always holds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{inv_mod, FieldSpec, Scalar};

/// Prime used for the modular full-rank certificate over `Q`.
const CERT_PRIME: u64 = 2_147_483_629;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    nrows: usize,
    ncols: usize,
    field: FieldSpec,
    /// Row-major, each row sorted by column, no stored zeros.
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl ScalarMatrix {
    pub fn zeros(nrows: usize, ncols: usize, field: FieldSpec) -> Self {
        ScalarMatrix { nrows, ncols, field, rows: vec![Vec::new(); nrows] }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        field: FieldSpec,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (r, c, v) in entries {
            assert!(r < nrows && c < ncols, "entry ({r}, {c}) out of range");
            assert_eq!(v.field(), field);
            rows[r].push((c, v));
        }
        for row in &mut rows {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv = &*lv + &v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        ScalarMatrix { nrows, ncols, field, rows }
    }

    pub fn from_integer_rows(field: FieldSpec, ncols: usize, data: &[Vec<i64>]) -> Self {
        Self::from_triplets(
            data.len(),
            ncols,
            field,
            data.iter().enumerate().flat_map(|(r, row)| {
                assert_eq!(row.len(), ncols);
                row.iter()
                    .enumerate()
                    .map(move |(c, &v)| (r, c, Scalar::from_i64(v, field)))
            }),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.rows[r]
            .binary_search_by_key(&c, |(cc, _)| *cc)
            .map(|i| self.rows[r][i].1.clone())
            .unwrap_or_else(|_| Scalar::zero(self.field))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> ScalarMatrix {
        Self::from_triplets(
            self.ncols,
            self.nrows,
            self.field,
            self.entries().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    /// `M * v` for a coordinate vector of length `ncols`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                row.iter().fold(Scalar::zero(self.field), |acc, (c, a)| &acc + &(a * &v[*c]))
            })
            .collect()
    }

    /// Connected components of the bipartite row/column incidence graph,
    /// as `(rows, cols)` index lists. Components without entries are
    /// omitted, so empty rows and columns belong to no block.
    fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.nrows + self.ncols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (r, c, _) in self.entries() {
            let a = find(&mut parent, r);
            let b = find(&mut parent, self.nrows + c);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut touched = vec![false; n];
        for (r, c, _) in self.entries() {
            touched[r] = true;
            touched[self.nrows + c] = true;
        }
        for v in (0..n).filter(|&v| touched[v]) {
            let root = find(&mut parent, v);
            if slot[root] == usize::MAX {
                slot[root] = out.len();
                out.push((Vec::new(), Vec::new()));
            }
            let block = &mut out[slot[root]];
            if v < self.nrows {
                block.0.push(v);
            } else {
                block.1.push(v - self.nrows);
            }
        }
        out
    }

    fn block_rows(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<(usize, &Scalar)>> {
        let mut local = vec![usize::MAX; self.ncols];
        for (i, &c) in cols.iter().enumerate() {
            local[c] = i;
        }
        rows.iter()
            .map(|&r| self.rows[r].iter().map(|(c, v)| (local[*c], v)).collect())
            .collect()
    }
}

/// Rank over the matrix's field.
pub fn rank(m: &ScalarMatrix) -> usize {
    m.blocks()
        .iter()
        .map(|(rows, cols)| block_rank(m, rows, cols))
        .sum()
}

/// Rank together with the pivot columns, in increasing order. The pivots
/// are the greedy left-to-right choice of independent columns.
pub fn rank_profile(m: &ScalarMatrix) -> (usize, Vec<usize>) {
    let mut pivots = Vec::new();
    for (rows, cols) in m.blocks() {
        let local = block_pivots(m, &rows, &cols);
        pivots.extend(local.into_iter().map(|i| cols[i]));
    }
    pivots.sort_unstable();
    (pivots.len(), pivots)
}

/// Basis of the right null space `{v : M v = 0}`.
pub fn kernel_basis(m: &ScalarMatrix) -> Vec<Vec<Scalar>> {
    let field = m.field;
    let mut basis = Vec::new();
    let mut covered = vec![false; m.ncols];
    let mut rank_total = 0;
    for (rows, cols) in m.blocks() {
        for &c in &cols {
            covered[c] = true;
        }
        let (rref, pivots) = block_rref(m, &rows, &cols);
        rank_total += pivots.len();
        let mut is_pivot = vec![false; cols.len()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..cols.len()).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(field); m.ncols];
            v[cols[free]] = Scalar::one(field);
            for (row, &p) in rref.iter().zip(&pivots) {
                v[cols[p]] = -&row[free];
            }
            basis.push(v);
        }
    }
    // columns with no entries at all
    for c in (0..m.ncols).filter(|&c| !covered[c]) {
        let mut v = vec![Scalar::zero(field); m.ncols];
        v[c] = Scalar::one(field);
        basis.push(v);
    }
    debug_assert_eq!(m.ncols, rank_total + basis.len(), "rank-nullity");
    basis
}

fn block_rank(m: &ScalarMatrix, rows: &[usize], cols: &[usize]) -> usize {
    let local = m.block_rows(rows, cols);
    match m.field {
        FieldSpec::PrimeField(p) => {
            let p = p as u64;
            let dense = dense_mod(&local, cols.len(), p, |v| v.reduce_mod(p).unwrap());
            modp_eliminate(dense, cols.len(), p).len()
        }
        FieldSpec::Rationals => {
            let full = rows.len().min(cols.len());
            if let Some(dense) = try_dense_mod(&local, cols.len(), CERT_PRIME) {
                if modp_eliminate(dense, cols.len(), CERT_PRIME).len() == full {
                    return full;
                }
            }
            bareiss_eliminate(integer_rows(&local, cols.len()), cols.len()).len()
        }
    }
}

fn block_pivots(m: &ScalarMatrix, rows: &[usize], cols: &[usize]) -> Vec<usize> {
    let local = m.block_rows(rows, cols);
    match m.field {
        FieldSpec::PrimeField(p) => {
            let p = p as u64;
            let dense = dense_mod(&local, cols.len(), p, |v| v.reduce_mod(p).unwrap());
            modp_eliminate(dense, cols.len(), p)
        }
        FieldSpec::Rationals => {
            // a full column rank certificate fixes every column as a pivot
            if let Some(dense) = try_dense_mod(&local, cols.len(), CERT_PRIME) {
                let piv = modp_eliminate(dense, cols.len(), CERT_PRIME);
                if piv.len() == cols.len() {
                    return piv;
                }
            }
            bareiss_eliminate(integer_rows(&local, cols.len()), cols.len())
        }
    }
}

fn dense_mod(
    local: &[Vec<(usize, &Scalar)>],
    ncols: usize,
    p: u64,
    reduce: impl Fn(&Scalar) -> u64,
) -> Vec<Vec<u64>> {
    local
        .iter()
        .map(|row| {
            let mut d = vec![0u64; ncols];
            for (c, v) in row {
                d[*c] = reduce(v) % p;
            }
            d
        })
        .collect()
}

fn try_dense_mod(local: &[Vec<(usize, &Scalar)>], ncols: usize, p: u64) -> Option<Vec<Vec<u64>>> {
    let mut out = Vec::with_capacity(local.len());
    for row in local {
        let mut d = vec![0u64; ncols];
        for (c, v) in row {
            d[*c] = v.reduce_mod(p)?;
        }
        out.push(d);
    }
    Some(out)
}

/// Row-reduces in place and returns the pivot columns.
fn modp_eliminate(mut a: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(pr) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &mut head[r];
        for x in pivot_row[c..].iter_mut() {
            *x = *x * inv % p;
        }
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let f = p - f;
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = (*x + f * y) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn integer_rows(local: &[Vec<(usize, &Scalar)>], ncols: usize) -> Vec<Vec<BigInt>> {
    local
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| {
                acc.lcm(v.as_rational().expect("rational entry").denom())
            });
            let mut d = vec![BigInt::zero(); ncols];
            for (c, v) in row {
                let q = v.as_rational().unwrap();
                d[*c] = q.numer() * (&lcm / q.denom());
            }
            d
        })
        .collect()
}

/// Fraction-free elimination; every division is exact by Sylvester's
/// identity. Returns the pivot columns.
fn bareiss_eliminate(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(pr) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = &pivot_row[c];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for k in c + 1..ncols {
                let v = pv * &row[k] - &f * &pivot_row[k];
                row[k] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = pv.clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form of a block over its field, returned as the
/// nonzero rows (dense, block-local columns) and their pivot columns.
fn block_rref(m: &ScalarMatrix, rows: &[usize], cols: &[usize]) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let field = m.field;
    let local = m.block_rows(rows, cols);
    let ncols = cols.len();
    let mut a: Vec<Vec<Scalar>> = local
        .iter()
        .map(|row| {
            let mut d = vec![Scalar::zero(field); ncols];
            for (c, v) in row {
                d[*c] = (*v).clone();
            }
            d
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(pr) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn certificate_prime_is_prime() {
        assert!(crate::field::is_prime(CERT_PRIME));
    }

    #[test]
    fn identity_and_proportional_rows() {
        let id = ScalarMatrix::from_integer_rows(Q, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(rank(&id), 3);
        let m = ScalarMatrix::from_integer_rows(Q, 2, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn rank_mod_three() {
        // det = -3
        let m = ScalarMatrix::from_integer_rows(FieldSpec::PrimeField(3), 2, &[vec![1, 2], vec![2, 1]]);
        assert_eq!(rank(&m), 1);
        let q = ScalarMatrix::from_integer_rows(Q, 2, &[vec![1, 2], vec![2, 1]]);
        assert_eq!(rank(&q), 2);
    }

    #[test]
    fn profiles() {
        let id = ScalarMatrix::from_integer_rows(Q, 2, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(rank_profile(&id), (2, vec![0, 1]));
        let m = ScalarMatrix::from_integer_rows(Q, 2, &[vec![0, 1], vec![0, 2]]);
        assert_eq!(rank_profile(&m), (1, vec![1]));
        let m = ScalarMatrix::from_integer_rows(Q, 3, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(rank_profile(&m), (1, vec![0]));
    }

    #[test]
    fn kernels() {
        let z = ScalarMatrix::zeros(2, 3, Q);
        assert_eq!(kernel_basis(&z).len(), 3);
        let m = ScalarMatrix::from_integer_rows(Q, 2, &[vec![1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Scalar::from_i64(-1, Q), Scalar::from_i64(1, Q)]);
        assert!(m.apply(&k[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn bareiss_path_is_taken_for_singular_blocks() {
        // singular over Q, so the modular certificate cannot conclude
        let m = ScalarMatrix::from_integer_rows(
            Q,
            3,
            &[vec![2, 4, 6], vec![1, 3, 5], vec![3, 7, 11], vec![7, 1, 4]],
        );
        assert_eq!(rank(&m), 3);
        let s = ScalarMatrix::from_integer_rows(Q, 3, &[vec![2, 4, 6], vec![1, 3, 5], vec![3, 7, 11]]);
        assert_eq!(rank(&s), 2);
        assert_eq!(rank_profile(&s), (2, vec![0, 1]));
    }

    #[test]
    fn fractional_entries() {
        let half = Scalar::from_i64(2, Q).inv().unwrap();
        let third = Scalar::from_i64(3, Q).inv().unwrap();
        let m = ScalarMatrix::from_triplets(
            2,
            2,
            Q,
            [
                (0, 0, half.clone()),
                (0, 1, third.clone()),
                (1, 0, Scalar::from_i64(3, Q)),
                (1, 1, Scalar::from_i64(2, Q)),
            ],
        );
        assert_eq!(rank(&m), 1);
    }
}
