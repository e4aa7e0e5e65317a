use super::{LinMap, Scalar};
use crate::error::{Error, Result};

/// Reduced row echelon form in place; returns the pivot columns.
fn rref_rows(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        for x in m[r][c..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let support: Vec<usize> = (c..ncols).filter(|&j| !m[r][j].is_zero()).collect();
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &(&f * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl LinMap {
    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (LinMap, Vec<usize>) {
        let cols = self.cols();
        let mut rows = self.clone().into_rows();
        let piv = rref_rows(&mut rows, cols);
        (LinMap::from_row_vecs(rows, cols), piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows()
    }

    /// Canonical basis of the kernel, as the columns of a `cols × k` matrix
    /// whose transpose is in reduced row echelon form.
    pub fn kernel(&self) -> LinMap {
        let n = self.cols();
        let (r, piv) = self.rref();
        let mut is_pivot = vec![false; n];
        for &p in &piv {
            is_pivot[p] = true;
        }
        let vecs: Vec<Vec<Scalar>> = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); n];
                v[f] = Scalar::one();
                for (k, &p) in piv.iter().enumerate() {
                    v[p] = -r.get(k, f);
                }
                v
            })
            .collect();
        canonical_span(vecs, n)
    }

    /// Canonical basis of the column space, in the same form as [`kernel`](Self::kernel).
    pub fn image(&self) -> LinMap {
        let rows = self.transpose().into_rows();
        canonical_span(rows, self.rows())
    }

    pub fn inverse(&self) -> Option<LinMap> {
        if !self.is_square() {
            return None;
        }
        let u = solve_factor(self, &LinMap::identity(self.rows())).ok()??;
        Some(u)
    }
}

/// Column-reduced echelon basis of the span of `vecs` in dimension `n`.
fn canonical_span(mut vecs: Vec<Vec<Scalar>>, n: usize) -> LinMap {
    let piv = rref_rows(&mut vecs, n);
    vecs.truncate(piv.len());
    LinMap::from_row_vecs(vecs, n).transpose()
}

/// `u` with `through ∘ u = h`, or `None` if `h` does not factor.
/// Free variables are set to zero, so the answer is deterministic.
pub fn solve_factor(through: &LinMap, h: &LinMap) -> Result<Option<LinMap>> {
    if through.rows() != h.rows() {
        return Err(Error::shape(
            "solve_factor",
            format!("through: {}x{}", through.rows(), through.cols()),
            format!("h: {}x{}", h.rows(), h.cols()),
        ));
    }
    let k = through.cols();
    let m = h.cols();
    let aug = through.hstack(h)?;
    let (r, piv) = aug.rref();
    if piv.iter().any(|&p| p >= k) {
        return Ok(None);
    }
    let mut u = LinMap::zeros(k, m);
    for (row, &p) in piv.iter().enumerate() {
        for j in 0..m {
            u.set(p, j, r.get(row, k + j).clone());
        }
    }
    Ok(Some(u))
}

/// `u` with `u ∘ through = h`, or `None`.
pub fn solve_right_factor(through: &LinMap, h: &LinMap) -> Result<Option<LinMap>> {
    if through.cols() != h.cols() {
        return Err(Error::shape(
            "solve_right_factor",
            format!("through: {}x{}", through.rows(), through.cols()),
            format!("h: {}x{}", h.rows(), h.cols()),
        ));
    }
    Ok(solve_factor(&through.transpose(), &h.transpose())?.map(|u| u.transpose()))
}

fn parallel(op: &'static str, f: &LinMap, g: &LinMap) -> Result<()> {
    if f.shape() != g.shape() {
        return Err(Error::shape(
            op,
            format!("f: {}x{}", f.rows(), f.cols()),
            format!("g: {}x{}", g.rows(), g.cols()),
        ));
    }
    Ok(())
}

/// Inclusion of `ker(f − g)`; its column count is the dimension of the equalizer.
pub fn equalizer(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    parallel("equalizer", f, g)?;
    Ok((f - g).kernel())
}

/// Canonical projection onto `target / im(f − g)`.
///
/// With `R` the reduced row echelon form of `(f − g)ᵀ`, the non-pivot
/// coordinates form the quotient basis and each pivot coordinate is rewritten
/// through its row of `R`.
pub fn coequalizer(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    parallel("coequalizer", f, g)?;
    let t = f.rows();
    let (r, piv) = (f - g).transpose().rref();
    let mut is_pivot = vec![false; t];
    for &p in &piv {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..t).filter(|&k| !is_pivot[k]).collect();
    let mut proj = LinMap::zeros(free.len(), t);
    for (q, &k) in free.iter().enumerate() {
        proj.set(q, k, Scalar::one());
    }
    for (row, &p) in piv.iter().enumerate() {
        for (q, &k) in free.iter().enumerate() {
            proj.set(q, p, -r.get(row, k));
        }
    }
    Ok(proj)
}
