//! Cross-check of the graded components against a naive dense elimination
//! that builds the multiplication map straight from the terms of `f`.

use lcreg_core::{
    lefschetz_power, parse_bipoly, rank, sub_component_dimension, top_component_dimension, BiPoly,
    FieldSpec, Presentation,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

fn exponent_vectors(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in (0..=degree).rev() {
        for mut rest in exponent_vectors(nvars - 1, degree - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        let pivot: Vec<BigRational> = rows[r].iter().map(|v| v * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// `(rows, cols, rank)` of the degree-`i` map
/// `x^alpha z^c -> sum coef * x^(alpha + beta) z^(c - gamma)` over the terms `coef x^beta y^gamma`.
fn naive_slice(f: &BiPoly, m: usize, n: usize, j: i64, i: u32) -> (usize, usize, usize) {
    let (a, b) = f.bidegree().unwrap();
    let k = (-(n as i64) - j) as u32;
    let targets: Vec<(Vec<u32>, Vec<u32>)> = exponent_vectors(m, i)
        .into_iter()
        .flat_map(|x| exponent_vectors(n, k).into_iter().map(move |z| (x.clone(), z)))
        .collect();
    let sources: Vec<(Vec<u32>, Vec<u32>)> = if i < a {
        Vec::new()
    } else {
        exponent_vectors(m, i - a)
            .into_iter()
            .flat_map(|x| exponent_vectors(n, k + b).into_iter().map(move |z| (x.clone(), z)))
            .collect()
    };
    let mut rows = vec![vec![BigRational::zero(); sources.len()]; targets.len()];
    for (col, (xs, zs)) in sources.iter().enumerate() {
        for ((xm, ym), coef) in f.terms() {
            if zs.iter().zip(ym.exponents()).any(|(c, g)| c < g) {
                continue;
            }
            let x: Vec<u32> = xs.iter().zip(xm.exponents()).map(|(p, q)| p + q).collect();
            let z: Vec<u32> = zs.iter().zip(ym.exponents()).map(|(c, g)| c - g).collect();
            let row = targets.iter().position(|t| t.0 == x && t.1 == z).unwrap();
            rows[row][col] += coef.as_rational().unwrap();
        }
    }
    let r = dense_rank(rows);
    (targets.len(), sources.len(), r)
}

fn random_form(rng: &mut ChaCha8Rng, m: usize, n: usize, a: u32, b: u32) -> BiPoly {
    loop {
        let mut terms = Vec::new();
        for x in exponent_vectors(m, a) {
            for y in exponent_vectors(n, b) {
                if rng.gen_bool(0.6) {
                    let c: i64 = rng.gen_range(-3..=3);
                    let sign = if c < 0 { "-" } else { "+" };
                    terms.push(format!("{sign} {}*{}*{}", c.abs(), mono('x', &x), mono('y', &y)));
                }
            }
        }
        if terms.is_empty() {
            continue;
        }
        let text = terms.join(" ");
        let f = parse_bipoly(text.trim_start_matches("+ "), m, n, Q).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

fn mono(var: char, e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, p)| format!("{var}{}^{p}", i + 1))
        .collect();
    if parts.is_empty() { "1".into() } else { parts.join("*") }
}

fn compare(f: &BiPoly, m: usize, n: usize, j: i64, degrees: u32) {
    let p = Presentation::build(f, j).unwrap();
    for i in 0..degrees {
        let (rows, cols, r) = naive_slice(f, m, n, j, i);
        let slice = lcreg_core::component_matrix(&p, i);
        assert_eq!((slice.matrix.nrows(), slice.matrix.ncols()), (rows, cols), "{f} j={j} i={i}");
        assert_eq!(rank(&slice.matrix), r, "{f} j={j} i={i}");
        assert_eq!(top_component_dimension(&p, i), (rows - r) as u64, "{f} j={j} i={i}");
        assert_eq!(sub_component_dimension(&p, i), (cols - r) as u64, "{f} j={j} i={i}");
    }
}

#[test]
fn diagonal_powers_match_naive_elimination() {
    for (n, r) in [(2, 1), (2, 2), (3, 1), (2, 3)] {
        let f = lefschetz_power(n, r, Q).unwrap();
        for j in [-(n as i64), -(n as i64) - 1, -(n as i64) - 3] {
            compare(&f, n, n, j, 7);
        }
    }
}

#[test]
fn random_forms_match_naive_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (m, n, a, b) in [(2, 2, 1, 1), (2, 2, 2, 1), (3, 2, 1, 1), (2, 3, 1, 1), (2, 2, 1, 2), (3, 3, 1, 1)] {
        for _ in 0..3 {
            let f = random_form(&mut rng, m, n, a, b);
            for j in [-(n as i64), -(n as i64) - 2] {
                compare(&f, m, n, j, 6);
            }
        }
    }
}
