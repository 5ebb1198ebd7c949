//! Parabolic combinatorics: dimension arithmetic for P, L, U attached to a
//! block decomposition, double cosets of two parabolics as margin-constrained
//! integer matrices, the block-transposition permutation behind the braid,
//! and the shift-dimension identity for the unipotent quotient.
//!
//! No group elements are ever materialized: a double coset is exactly its
//! matrix of block intersection dimensions.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Block dimensions n_1..n_k of a decomposition V = V^1 + ... + V^k.
/// Zero-dimensional blocks are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        Self { parts: parts.into() }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Complex dimensions of GL(V) and of the parabolic data attached to a
/// composition: dim G = N^2, dim L = sum n_i^2, dim U = sum_{i<j} n_i n_j,
/// dim P = dim L + dim U.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDims {
    pub dim_g: u64,
    pub dim_l: u64,
    pub dim_u: u64,
    pub dim_p: u64,
}

pub fn group_dims(c: &Composition) -> GroupDims {
    let n = c.total() as u64;
    let dim_g = n * n;
    let dim_l: u64 = c.parts.iter().map(|&p| (p * p) as u64).sum();
    // strictly-upper blocks: (N^2 - sum n_i^2) / 2
    let dim_u = (dim_g - dim_l) / 2;
    GroupDims { dim_g, dim_l, dim_u, dim_p: dim_l + dim_u }
}

/// A double coset of two parabolics, recorded as the matrix of nonnegative
/// block dimensions with prescribed margins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetMatrix {
    rows: Composition,
    cols: Composition,
    entries: Vec<Vec<usize>>,
}

impl CosetMatrix {
    pub fn rows(&self) -> &Composition {
        &self.rows
    }

    pub fn cols(&self) -> &Composition {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.entries[r][c]
    }

    /// Builds a coset matrix, checking that the entries realize the margins.
    pub fn new(rows: Composition, cols: Composition, entries: Vec<Vec<usize>>) -> Result<Self> {
        if entries.len() != rows.len()
            || entries.iter().any(|r| r.len() != cols.len())
            || entries
                .iter()
                .zip(&rows.parts)
                .any(|(r, &want)| r.iter().sum::<usize>() != want)
            || (0..cols.len())
                .any(|c| entries.iter().map(|r| r[c]).sum::<usize>() != cols.parts[c])
        {
            return Err(Error::MarginMismatch {
                row_total: rows.total(),
                col_total: cols.total(),
            });
        }
        Ok(Self { rows, cols, entries })
    }
}

impl<'de> serde::Deserialize<'de> for CosetMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rows: Composition,
            cols: Composition,
            entries: Vec<Vec<usize>>,
        }
        let r = Repr::deserialize(d)?;
        Self::new(r.rows, r.cols, r.entries)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

/// Enumerates all nonnegative integer matrices with the given row and
/// column sums, in decreasing row-major lexicographic order (the first
/// cell takes its largest feasible value first).
pub fn double_cosets(rows: &Composition, cols: &Composition) -> Result<Vec<CosetMatrix>> {
    if rows.total() != cols.total() {
        return Err(Error::MarginMismatch {
            row_total: rows.total(),
            col_total: cols.total(),
        });
    }
    let mut out = Vec::new();
    let mut entries = vec![vec![0usize; cols.len()]; rows.len()];
    let mut col_rem: Vec<usize> = cols.parts.clone();
    fill_rows(rows, cols, 0, &mut entries, &mut col_rem, &mut out);
    Ok(out)
}

fn fill_rows(
    rows: &Composition,
    cols: &Composition,
    row: usize,
    entries: &mut Vec<Vec<usize>>,
    col_rem: &mut Vec<usize>,
    out: &mut Vec<CosetMatrix>,
) {
    if row == rows.parts.len() {
        out.push(CosetMatrix {
            rows: rows.clone(),
            cols: cols.clone(),
            entries: entries.clone(),
        });
        return;
    }
    fill_cells(rows, cols, row, 0, rows.parts[row], entries, col_rem, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_cells(
    rows: &Composition,
    cols: &Composition,
    row: usize,
    col: usize,
    remaining: usize,
    entries: &mut Vec<Vec<usize>>,
    col_rem: &mut Vec<usize>,
    out: &mut Vec<CosetMatrix>,
) {
    if col == col_rem.len() {
        debug_assert_eq!(remaining, 0);
        fill_rows(rows, cols, row + 1, entries, col_rem, out);
        return;
    }
    let suffix: usize = col_rem[col + 1..].iter().sum();
    let hi = remaining.min(col_rem[col]);
    let lo = remaining.saturating_sub(suffix);
    if lo > hi {
        return;
    }
    let mut v = hi;
    loop {
        entries[row][col] = v;
        col_rem[col] -= v;
        fill_cells(rows, cols, row, col + 1, remaining - v, entries, col_rem, out);
        col_rem[col] += v;
        entries[row][col] = 0;
        if v == lo {
            break;
        }
        v -= 1;
    }
}

/// All quadruples (i,j,k,l) with i+j = n, k+l = m, i+k = p, j+l = q_deg,
/// in increasing i. The margins force i to range over
/// max(0, p-m) ..= min(n, p).
pub fn quadruples(n: usize, m: usize, p: usize, q_deg: usize) -> Result<Vec<[usize; 4]>> {
    if n + m != p + q_deg {
        return Err(Error::DegreeMismatch { n, m, p, q: q_deg });
    }
    let mut out = Vec::new();
    for i in 0..=n.min(p) {
        let (j, k) = (n - i, p - i);
        if k > m {
            continue;
        }
        let l = m - k;
        debug_assert_eq!(j + l, q_deg);
        out.push([i, j, k, l]);
    }
    Ok(out)
}

/// A permutation of {1..n} stored as its list of 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl<'de> serde::Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Self::from_images(images).map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(Error::Parse(format!("images do not form a permutation of 1..={n}")));
            }
            seen[im - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based position a.
    pub fn image(&self, a: usize) -> usize {
        self.images[a - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (a, &im) in self.images.iter().enumerate() {
            images[im - 1] = a + 1;
        }
        Self { images }
    }
}

/// The permutation s_{k,l} of {1..kl} with s(1 + t + n*l) = 1 + n + t*k for
/// 0 <= t < l, 0 <= n < k: transposition of a k x l block grid, the strand
/// diagram underlying the braid between a product of k coproducts and l
/// products.
pub fn braid_permutation(k: usize, l: usize) -> Permutation {
    let mut images = vec![0; k * l];
    for n in 0..k {
        for t in 0..l {
            images[t + n * l] = 1 + n + t * k;
        }
    }
    Permutation { images }
}

/// Sum of w[a]*w[b] over crossing pairs a < b with p(a) > p(b).
pub fn weighted_inversions(p: &Permutation, w: &[u64]) -> Result<u64> {
    if w.len() != p.degree() {
        return Err(Error::WeightLength { got: w.len(), want: p.degree() });
    }
    let mut total = 0u64;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if p.images[a] > p.images[b] {
                total += w[a] * w[b];
            }
        }
    }
    Ok(total)
}

/// Block dimension data d[m][r] = dim V_r^m for a k x l refinement
/// V = + over m,r of V_r^m.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DimsGrid {
    d: Vec<Vec<u64>>,
}

impl<'de> serde::Deserialize<'de> for DimsGrid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u64>>::deserialize(d)?;
        Self::new(rows).map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

impl DimsGrid {
    /// Builds a grid from rows d[m][r]; all rows must have equal length.
    pub fn new(d: Vec<Vec<u64>>) -> Result<Self> {
        let width = d.first().map_or(0, |row| row.len());
        if d.iter().any(|row| row.len() != width) {
            return Err(Error::Parse("ragged dimension grid".into()));
        }
        Ok(Self { d })
    }

    /// Number of outer blocks k.
    pub fn k(&self) -> usize {
        self.d.len()
    }

    /// Number of inner blocks l.
    pub fn l(&self) -> usize {
        self.d.first().map_or(0, |row| row.len())
    }

    pub fn entry(&self, m: usize, r: usize) -> u64 {
        self.d[m][r]
    }

    /// Entries in source order V_1^1,...,V_l^1,V_1^2,...: position
    /// 1 + t + (m-1)l holds d[m][t+1], i.e. a plain row-major flatten.
    pub fn flatten(&self) -> Vec<u64> {
        self.d.iter().flatten().copied().collect()
    }
}

/// The fiber dimension A = sum over m<n, r>s of dim V_r^m * dim V_s^n;
/// doubled and negated it is the total braiding shift.
pub fn shift_dimension(g: &DimsGrid) -> u64 {
    let (k, l) = (g.k(), g.l());
    let mut total = 0u64;
    for m in 0..k {
        for n in m + 1..k {
            for r in 0..l {
                for s in 0..r {
                    total += g.entry(m, r) * g.entry(n, s);
                }
            }
        }
    }
    total
}

/// Dimensions of the unipotent group U_W, of U_W meet P_V, and of the
/// quotient: Hom-blocks Hom(V_r^m, V_s^n) with r > s, restricted to all
/// (m,n), to m >= n, and to m < n respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentDims {
    pub dim_uw: u64,
    pub dim_uw_cap_pv: u64,
    pub dim_quotient: u64,
}

pub fn unipotent_dims(g: &DimsGrid) -> UnipotentDims {
    let (k, l) = (g.k(), g.l());
    let mut uw = 0u64;
    let mut cap = 0u64;
    for m in 0..k {
        for n in 0..k {
            for r in 0..l {
                for s in 0..r {
                    let hom = g.entry(m, r) * g.entry(n, s);
                    uw += hom;
                    if m >= n {
                        cap += hom;
                    }
                }
            }
        }
    }
    UnipotentDims { dim_uw: uw, dim_uw_cap_pv: cap, dim_quotient: uw - cap }
}

/// The braiding degree d = (total of a)(total of b); the braiding shifts
/// by -2d, i.e. multiplies by q^-2d at the scalar level.
pub fn braiding_shift(a: &Composition, b: &Composition) -> u64 {
    (a.total() as u64) * (b.total() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts)
    }

    #[test]
    fn group_dims_examples() {
        assert_eq!(
            group_dims(&comp(&[1, 1])),
            GroupDims { dim_g: 4, dim_l: 2, dim_u: 1, dim_p: 3 }
        );
        for n in 0..7u64 {
            let d = group_dims(&comp(&[n as usize]));
            assert_eq!(d, GroupDims { dim_g: n * n, dim_l: n * n, dim_u: 0, dim_p: n * n });
        }
        assert_eq!(
            group_dims(&comp(&[2, 1])),
            GroupDims { dim_g: 9, dim_l: 5, dim_u: 2, dim_p: 7 }
        );
    }

    #[test]
    fn double_cosets_examples() {
        let ms = double_cosets(&comp(&[1, 1]), &comp(&[1, 1])).unwrap();
        let got: Vec<_> = ms.iter().map(|m| m.entries.clone()).collect();
        assert_eq!(got, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]]);

        let ms = double_cosets(&comp(&[1, 2]), &comp(&[2, 1])).unwrap();
        let got: Vec<_> = ms.iter().map(|m| m.entries.clone()).collect();
        assert_eq!(got, vec![vec![vec![1, 0], vec![1, 1]], vec![vec![0, 1], vec![2, 0]]]);

        let ms = double_cosets(&comp(&[5]), &comp(&[5])).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].entries, vec![vec![5]]);
    }

    #[test]
    fn double_cosets_margin_check() {
        for m in &double_cosets(&comp(&[3, 2, 1]), &comp(&[2, 2, 2])).unwrap() {
            for (r, row) in m.entries.iter().enumerate() {
                assert_eq!(row.iter().sum::<usize>(), m.rows.parts[r]);
            }
            for c in 0..m.cols.len() {
                let col: usize = m.entries.iter().map(|row| row[c]).sum();
                assert_eq!(col, m.cols.parts[c]);
            }
        }
        assert!(matches!(
            double_cosets(&comp(&[1]), &comp(&[2])),
            Err(Error::MarginMismatch { .. })
        ));
    }

    #[test]
    fn double_cosets_degenerate_margins() {
        // zero blocks must not break enumeration
        let ms = double_cosets(&comp(&[0, 2]), &comp(&[1, 0, 1])).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].entries, vec![vec![0, 0, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn quadruples_examples() {
        assert_eq!(
            quadruples(1, 1, 1, 1).unwrap(),
            vec![[0, 1, 1, 0], [1, 0, 0, 1]]
        );
        for n in 0..5 {
            assert_eq!(quadruples(n, 0, n, 0).unwrap(), vec![[n, 0, 0, 0]]);
        }
        assert_eq!(
            quadruples(2, 2, 2, 2).unwrap(),
            vec![[0, 2, 2, 0], [1, 1, 1, 1], [2, 0, 0, 2]]
        );
        assert!(quadruples(2, 1, 2, 2).is_err());
    }

    #[test]
    fn quadruple_count_formula() {
        for n in 0..=6 {
            for m in 0..=6 {
                for p in 0..=n + m {
                    let q = n + m - p;
                    let count = quadruples(n, m, p, q).unwrap().len();
                    let lo = p.saturating_sub(m);
                    let hi = n.min(p);
                    let expected = if hi >= lo { hi - lo + 1 } else { 0 };
                    assert_eq!(count, expected);
                }
            }
        }
    }

    #[test]
    fn braid_permutation_examples() {
        assert_eq!(braid_permutation(2, 2).images(), &[1, 3, 2, 4]);
        assert_eq!(braid_permutation(1, 5), Permutation::identity(5));
        assert_eq!(braid_permutation(2, 3).images(), &[1, 3, 5, 2, 4, 6]);
    }

    #[test]
    fn weighted_inversions_examples() {
        let id = Permutation::identity(4);
        assert_eq!(weighted_inversions(&id, &[7, 1, 3, 2]).unwrap(), 0);
        let swap = Permutation::from_images(vec![2, 1]).unwrap();
        assert_eq!(weighted_inversions(&swap, &[3, 4]).unwrap(), 12);
        let s22 = braid_permutation(2, 2);
        assert_eq!(weighted_inversions(&s22, &[1, 1, 1, 1]).unwrap(), 1);
        assert!(matches!(
            weighted_inversions(&s22, &[1, 1]),
            Err(Error::WeightLength { got: 2, want: 4 })
        ));
    }

    #[test]
    fn shift_dimension_examples() {
        let ones22 = DimsGrid::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(shift_dimension(&ones22), 1);
        let ones23 = DimsGrid::new(vec![vec![1, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(shift_dimension(&ones23), 3);
        let thin = DimsGrid::new(vec![vec![4, 2, 9]]).unwrap();
        assert_eq!(shift_dimension(&thin), 0);
    }

    #[test]
    fn unipotent_dims_examples() {
        let ones22 = DimsGrid::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(
            unipotent_dims(&ones22),
            UnipotentDims { dim_uw: 4, dim_uw_cap_pv: 3, dim_quotient: 1 }
        );
        let thin = DimsGrid::new(vec![vec![3, 1, 4, 1]]).unwrap();
        assert_eq!(unipotent_dims(&thin).dim_quotient, 0);
        let ones23 = DimsGrid::new(vec![vec![1, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(
            unipotent_dims(&ones23),
            UnipotentDims { dim_uw: 12, dim_uw_cap_pv: 9, dim_quotient: 3 }
        );
    }

    #[test]
    fn braiding_shift_examples() {
        assert_eq!(braiding_shift(&comp(&[1]), &comp(&[1])), 1);
        assert_eq!(braiding_shift(&comp(&[0]), &comp(&[3, 7])), 0);
        assert_eq!(braiding_shift(&comp(&[2, 1]), &comp(&[1, 1, 1])), 9);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::from_images(vec![1, 3, 2]).is_ok());
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 3]).is_err());
    }

    #[test]
    fn coset_matrix_json() {
        let ms = double_cosets(&comp(&[1, 2]), &comp(&[2, 1])).unwrap();
        let js = serde_json::to_string(&ms[0]).unwrap();
        assert_eq!(js, r#"{"rows":[1,2],"cols":[2,1],"entries":[[1,0],[1,1]]}"#);
        let back: CosetMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, ms[0]);
    }
}
