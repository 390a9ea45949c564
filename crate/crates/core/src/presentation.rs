//! Free presentation of the top local cohomology component.
//!
//! For a bihomogeneous `g` of bidegree `(A, B)` and `j <= -n`, the
//! component `H^n(P/gP)_j` is the cokernel of multiplication by `g`
//!
//! ```text
//!   ⊕_{|c| = k+B} P_0(-A) z^c  --g-->  ⊕_{|t| = k} P_0 z^t,   k = -n-j,
//! ```
//!
//! where `z^c` is sent to `Σ_{β <= c} g_β z^{c-β}`. The kernel of the same
//! map is `H^{n-1}(P/gP)_j`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::ScalarMatrix;
use crate::parse::parse_bihomogeneous;
use crate::poly::{monomials_of_degree, BiPoly, Bidegree, Monomial, Poly, XMonomial, ZMonomial};

/// All z-monomials of one degree, sorted lex-descending with
/// `z1 > z2 > ... > zn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZBasis {
    degree: u32,
    monomials: Vec<ZMonomial>,
    index: HashMap<ZMonomial, usize>,
}

impl ZBasis {
    pub fn new(degree: u32, n: usize) -> Self {
        let monomials = monomials_of_degree(n, degree);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        ZBasis { degree, monomials, index }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[ZMonomial] {
        &self.monomials
    }

    pub fn position(&self, z: &ZMonomial) -> Option<usize> {
        self.index.get(z).copied()
    }
}

pub fn z_basis(d: u32, n: usize) -> ZBasis {
    ZBasis::new(d, n)
}

#[derive(Debug, Clone)]
pub struct Presentation {
    j: i64,
    g: BiPoly,
    bidegree: Bidegree,
    target: ZBasis,
    source: ZBasis,
    /// For each source monomial, the `(target index, g_β)` pairs of its
    /// image, by increasing target index.
    columns: Vec<Vec<(usize, Poly)>>,
}

impl Presentation {
    pub fn build(g: &BiPoly, j: i64) -> Result<Self> {
        let n = g.n();
        let bidegree = g.require_bidegree()?;
        if bidegree.1 == 0 {
            return Err(Error::InvalidParameter(
                "multiplier must have positive y-degree".into(),
            ));
        }
        if j > -(n as i64) {
            return Err(Error::ComponentVanishes { j, n });
        }
        let k = (-(n as i64) - j) as u32;
        let target = ZBasis::new(k, n);
        let source = ZBasis::new(k + bidegree.1, n);
        let coeffs = g.y_coefficients();
        let columns = source
            .monomials()
            .iter()
            .map(|c| {
                let mut col: Vec<(usize, Poly)> = coeffs
                    .iter()
                    .filter_map(|(beta, g_beta)| {
                        let t = beta.quotient_of(c)?;
                        Some((target.position(&t).expect("degree k"), g_beta.clone()))
                    })
                    .collect();
                col.sort_by_key(|(t, _)| *t);
                col
            })
            .collect();
        Ok(Presentation { j, g: g.clone(), bidegree, target, source, columns })
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn m(&self) -> usize {
        self.g.m()
    }

    pub fn field(&self) -> FieldSpec {
        self.g.field()
    }

    pub fn multiplier(&self) -> &BiPoly {
        &self.g
    }

    pub fn bidegree(&self) -> Bidegree {
        self.bidegree
    }

    /// x-degree shift of the source module.
    pub fn shift(&self) -> u32 {
        self.bidegree.0
    }

    /// `k = -n - j`, the degree of the target basis.
    pub fn k(&self) -> u32 {
        self.target.degree
    }

    pub fn target_basis(&self) -> &ZBasis {
        &self.target
    }

    pub fn source_basis(&self) -> &ZBasis {
        &self.source
    }

    pub fn columns(&self) -> &[Vec<(usize, Poly)>] {
        &self.columns
    }

    /// Column `c` as a dense vector of coefficient polynomials over the
    /// target basis.
    pub fn column_vector(&self, c: usize) -> Vec<Poly> {
        let mut v = vec![Poly::zero(self.m(), self.field()); self.target.len()];
        for (t, p) in &self.columns[c] {
            v[*t] = p.clone();
        }
        v
    }

    pub fn component_matrix(&self, i: u32) -> ComponentMatrix {
        component_matrix(self, i)
    }

    pub fn to_record(&self) -> PresentationRecord {
        let z = |m: &ZMonomial| m.fmt_with('z');
        PresentationRecord {
            n: self.n(),
            m: self.m(),
            j: self.j,
            field: self.field(),
            g: self.g.to_string(),
            shift: self.shift(),
            target: self.target.monomials().iter().map(z).collect(),
            source: self.source.monomials().iter().map(z).collect(),
            columns: self
                .columns
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|(t, p)| (z(&self.target.monomials()[*t]), p.to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    /// Rebuilds from a printed record, checking that the stored matrix
    /// agrees with the one derived from the multiplier.
    pub fn from_record(rec: &PresentationRecord) -> Result<Self> {
        let g = parse_bihomogeneous(&rec.g, rec.m, rec.n, rec.field)?;
        let p = Presentation::build(&g, rec.j)?;
        if &p.to_record() != rec {
            return Err(Error::InvalidParameter(
                "presentation record does not match its multiplier".into(),
            ));
        }
        Ok(p)
    }
}

pub fn build_presentation(g: &BiPoly, j: i64) -> Result<Presentation> {
    Presentation::build(g, j)
}

/// Printed form of a [`Presentation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    pub n: usize,
    pub m: usize,
    pub j: i64,
    pub field: FieldSpec,
    pub g: String,
    pub shift: u32,
    pub target: Vec<String>,
    pub source: Vec<String>,
    /// Per source monomial, `(target monomial, entry)` pairs.
    pub columns: Vec<Vec<(String, String)>>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, col) in self.source.monomials().iter().zip(&self.columns) {
            let image: Vec<String> = col
                .iter()
                .map(|(t, p)| format!("({p})*{}", self.target.monomials()[*t].fmt_with('z')))
                .collect();
            let image = if image.is_empty() { "0".to_string() } else { image.join(" + ") };
            writeln!(f, "{} -> {}", c.fmt_with('z'), image)?;
        }
        Ok(())
    }
}

/// The x-degree `i` slice of the presentation matrix.
#[derive(Debug, Clone)]
pub struct ComponentMatrix {
    pub degree: u32,
    pub matrix: ScalarMatrix,
    /// `(x^u, target index)`, x-major.
    pub row_labels: Vec<(XMonomial, usize)>,
    /// `(x^v, source index)`, x-major.
    pub col_labels: Vec<(XMonomial, usize)>,
}

/// Matrix of multiplication by `g` from the degree-`i` part of the source
/// (x-degree `i - A`) to the degree-`i` part of the target.
///
/// Rows and columns are ordered x-monomial major, both factors
/// lex-descending.
pub fn component_matrix(p: &Presentation, i: u32) -> ComponentMatrix {
    let m = p.m();
    let nt = p.target.len();
    let ns = p.source.len();
    let row_x = monomials_of_degree(m, i);
    let col_x = match i.checked_sub(p.shift()) {
        Some(d) => monomials_of_degree(m, d),
        None => Vec::new(),
    };
    let row_index: HashMap<&Monomial, usize> =
        row_x.iter().enumerate().map(|(idx, x)| (x, idx)).collect();

    let mut triplets = Vec::new();
    for (vi, v) in col_x.iter().enumerate() {
        for (c, col) in p.columns.iter().enumerate() {
            let col_idx = vi * ns + c;
            for (t, g_beta) in col {
                for (w, coef) in g_beta.terms() {
                    let u = v.mul(w);
                    let ui = row_index[&u];
                    triplets.push((ui * nt + t, col_idx, coef.clone()));
                }
            }
        }
    }
    let matrix = ScalarMatrix::from_triplets(row_x.len() * nt, col_x.len() * ns, p.field(), triplets);
    let row_labels = row_x
        .iter()
        .flat_map(|x| (0..nt).map(move |t| (x.clone(), t)))
        .collect();
    let col_labels = col_x
        .iter()
        .flat_map(|x| (0..ns).map(move |c| (x.clone(), c)))
        .collect();
    ComponentMatrix { degree: i, matrix, row_labels, col_labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::parse::parse_bipoly;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn zs(b: &ZBasis) -> Vec<String> {
        b.monomials().iter().map(|m| m.fmt_with('z')).collect()
    }

    #[test]
    fn z_bases() {
        assert_eq!(zs(&z_basis(2, 2)), ["z1^2", "z1*z2", "z2^2"]);
        assert_eq!(zs(&z_basis(0, 3)), ["1"]);
        assert_eq!(zs(&z_basis(1, 3)), ["z1", "z2", "z3"]);
    }

    #[test]
    fn columns_of_diagonal_form() {
        let f = parse_bipoly("x1*y1 + x2*y2", 2, 2, Q).unwrap();
        let p = build_presentation(&f, -3).unwrap();
        assert_eq!(zs(p.target_basis()), ["z1", "z2"]);
        assert_eq!(zs(p.source_basis()), ["z1^2", "z1*z2", "z2^2"]);
        let rec = p.to_record();
        let col = |c: usize| -> Vec<(String, String)> { rec.columns[c].clone() };
        assert_eq!(col(0), [("z1".into(), "x1".into())]);
        assert_eq!(col(1), [("z1".into(), "x2".into()), ("z2".into(), "x1".into())]);
        assert_eq!(col(2), [("z2".into(), "x2".into())]);
    }

    #[test]
    fn columns_skip_incomparable_betas() {
        let f = parse_bipoly("x1^2*y1^2", 2, 2, Q).unwrap();
        let p = build_presentation(&f, -3).unwrap();
        assert_eq!(p.source_basis().degree(), 3);
        let rec = p.to_record();
        assert_eq!(rec.columns[0], [("z1".to_string(), "x1^2".to_string())]);
        assert!(rec.columns[3].is_empty());
    }

    #[test]
    fn smallest_component_has_one_row() {
        let f = parse_bipoly("x1*y1^2 + x2*y2^2", 2, 2, Q).unwrap();
        let p = build_presentation(&f, -2).unwrap();
        assert_eq!(zs(p.target_basis()), ["1"]);
    }

    #[test]
    fn rejects_vanishing_components_and_bad_multipliers() {
        let f = parse_bipoly("x1*y1 + x2*y2", 2, 2, Q).unwrap();
        assert_eq!(
            build_presentation(&f, -1).unwrap_err(),
            Error::ComponentVanishes { j: -1, n: 2 }
        );
        let g = parse_bipoly("x1*y1 + x2", 2, 2, Q).unwrap();
        assert!(matches!(build_presentation(&g, -3), Err(Error::NotBihomogeneous { .. })));
    }

    #[test]
    fn component_slices() {
        let f = parse_bipoly("x1*y1 + x2*y2", 2, 2, Q).unwrap();
        let p = build_presentation(&f, -3).unwrap();
        let c0 = component_matrix(&p, 0);
        assert_eq!((c0.matrix.nrows(), c0.matrix.ncols()), (2, 0));
        let c1 = component_matrix(&p, 1);
        assert_eq!((c1.matrix.nrows(), c1.matrix.ncols()), (4, 3));
        assert_eq!(rank(&c1.matrix), 3);
        let c2 = component_matrix(&p, 2);
        assert_eq!((c2.matrix.nrows(), c2.matrix.ncols()), (6, 6));
        assert_eq!(rank(&c2.matrix), 6);
    }

    #[test]
    fn record_round_trip() {
        let f = parse_bipoly("3*x1^2*y2 - x2^2*y1 + x1*x2*y1", 2, 2, Q).unwrap();
        let p = build_presentation(&f, -4).unwrap();
        let rec = p.to_record();
        let back = Presentation::from_record(&rec).unwrap();
        assert_eq!(back.to_record(), rec);
        let mut bad = rec.clone();
        bad.columns[0].clear();
        assert!(Presentation::from_record(&bad).is_err());
    }
}
