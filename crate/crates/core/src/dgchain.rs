//! Bounded chain complexes over Q with homological differentials and Koszul
//! signs, dg comodules over a bialgebra in degree 0, and the comparison
//! between dg and graded mapping comodules.
//!
//! A complex is stored degreewise; most constructions go through the total
//! space `⊕X_n` with basis ordered by degree, where `d` is one block matrix.

use crate::adjlift::{enriched_hom_data, mapping_comodule_data, LiftedRightAdjoint};
use crate::comodcat::{self, cofree, restrict_comodule, Comodule};
use crate::error::{Error, Result};
use crate::exactlin::{id, solve_factor, solve_maps, LinMap, Scalar};
use crate::hopf::comodule_tensor;
use crate::report::Report;
use crate::structures::FinBialgebra;

/// Dimensions of a bounded graded space, degrees `min_deg ..`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedModule {
    pub min_deg: i64,
    pub dims: Vec<usize>,
}

impl GradedModule {
    pub fn dim(&self, n: i64) -> usize {
        let k = n - self.min_deg;
        if k < 0 {
            return 0;
        }
        self.dims.get(k as usize).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Leading and trailing zero degrees removed (empty when zero).
    pub fn trimmed(&self) -> GradedModule {
        let Some(first) = self.dims.iter().position(|&d| d > 0) else {
            return GradedModule::default();
        };
        let last = self.dims.iter().rposition(|&d| d > 0).unwrap();
        GradedModule {
            min_deg: self.min_deg + first as i64,
            dims: self.dims[first..=last].to_vec(),
        }
    }

    /// Convolution of dimension sequences.
    pub fn tensor(&self, other: &GradedModule) -> GradedModule {
        if self.dims.is_empty() || other.dims.is_empty() {
            return GradedModule::default();
        }
        let mut dims = vec![0; self.dims.len() + other.dims.len() - 1];
        for (i, a) in self.dims.iter().enumerate() {
            for (j, b) in other.dims.iter().enumerate() {
                dims[i + j] += a * b;
            }
        }
        GradedModule {
            min_deg: self.min_deg + other.min_deg,
            dims,
        }
        .trimmed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    min_deg: i64,
    dims: Vec<usize>,
    /// `diffs[k] = d_{min_deg+k+1}`.
    diffs: Vec<LinMap>,
}

impl ChainComplex {
    pub fn new(min_deg: i64, dims: Vec<usize>, diffs: Vec<LinMap>) -> Result<Self> {
        if diffs.len() != dims.len().saturating_sub(1) {
            return Err(Error::shape(
                "chain complex",
                format!("{} differentials", diffs.len()),
                format!("{} degrees", dims.len()),
            ));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.shape() != (dims[k], dims[k + 1]) {
                return Err(Error::shape(
                    "differential",
                    format!("d_{} is {}x{}", min_deg + k as i64 + 1, d.rows(), d.cols()),
                    format!("expected {}x{}", dims[k], dims[k + 1]),
                ));
            }
        }
        Ok(ChainComplex { min_deg, dims, diffs })
    }

    pub fn zero() -> Self {
        ChainComplex::new(0, vec![], vec![]).unwrap()
    }

    /// `𝕂^dim` in one degree.
    pub fn concentrated(deg: i64, dim: usize) -> Self {
        ChainComplex::new(deg, vec![dim], vec![]).unwrap()
    }

    /// From a total differential on a basis whose degrees are nondecreasing.
    pub fn from_total(degrees: &[i64], d: &LinMap) -> Result<Self> {
        if d.shape() != (degrees.len(), degrees.len()) {
            return Err(Error::shape("total differential", format!("{}x{}", d.rows(), d.cols()), format!("{} basis vectors", degrees.len())));
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Mismatch("basis degrees must be nondecreasing".into()));
        }
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if !d.get(i, j).is_zero() && degrees[i] + 1 != degrees[j] {
                    return Err(Error::Mismatch("total differential does not lower degree by one".into()));
                }
            }
        }
        let Some(&min_deg) = degrees.first() else {
            return Ok(ChainComplex::zero());
        };
        let max = *degrees.last().unwrap();
        let dims: Vec<usize> = (min_deg..=max)
            .map(|n| degrees.iter().filter(|&&g| g == n).count())
            .collect();
        let mut offs = vec![0];
        for dd in &dims {
            offs.push(offs.last().unwrap() + dd);
        }
        let diffs = (1..dims.len())
            .map(|k| {
                LinMap::from_fn(dims[k - 1], dims[k], |i, j| d.get(offs[k - 1] + i, offs[k] + j).clone())
            })
            .collect();
        ChainComplex::new(min_deg, dims, diffs)
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.dims.len() as i64 - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: i64) -> usize {
        self.graded().dim(n)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Position of degree `n` inside the total space.
    pub fn offset(&self, n: i64) -> usize {
        let k = (n - self.min_deg).clamp(0, self.dims.len() as i64) as usize;
        self.dims[..k].iter().sum()
    }

    /// `d_n: X_n → X_{n−1}` (zero outside the stored range).
    pub fn d(&self, n: i64) -> LinMap {
        let k = n - self.min_deg;
        if k >= 1 && (k as usize) < self.dims.len() {
            self.diffs[k as usize - 1].clone()
        } else {
            LinMap::zeros(self.dim(n - 1), self.dim(n))
        }
    }

    /// Degree of each total basis vector.
    pub fn degrees(&self) -> Vec<i64> {
        self.dims
            .iter()
            .enumerate()
            .flat_map(|(k, &d)| std::iter::repeat_n(self.min_deg + k as i64, d))
            .collect()
    }

    pub fn total_differential(&self) -> LinMap {
        let n = self.total_dim();
        let mut out = LinMap::zeros(n, n);
        for (k, d) in self.diffs.iter().enumerate() {
            let deg = self.min_deg + k as i64 + 1;
            let (r0, c0) = (self.offset(deg - 1), self.offset(deg));
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    out.set(r0 + i, c0 + j, d.get(i, j).clone());
                }
            }
        }
        out
    }

    pub fn graded(&self) -> GradedModule {
        GradedModule {
            min_deg: self.min_deg,
            dims: self.dims.clone(),
        }
    }

    pub fn validate(&self) -> Report {
        validate_complex(self)
    }
}

/// `d_{n−1}∘d_n` per degree, reported as `dd-degree-n`.
pub fn validate_complex(x: &ChainComplex) -> Report {
    let mut r = Report::new();
    for n in x.min_deg + 2..=x.max_deg() {
        let dd = x.d(n - 1) * x.d(n);
        if !dd.is_zero() {
            r.fail(format!("dd-degree-{n}"), dd);
        }
    }
    r
}

pub fn forget_to_graded(x: &ChainComplex) -> GradedModule {
    x.graded()
}

/// Stable sort of basis vectors by degree: `(sorted degrees, P)` with `P` the
/// permutation matrix taking old coordinates to new ones.
pub fn sort_by_degree(degrees: &[i64]) -> (Vec<i64>, LinMap) {
    let mut order: Vec<usize> = (0..degrees.len()).collect();
    order.sort_by_key(|&i| degrees[i]);
    let p = LinMap::from_fn(degrees.len(), degrees.len(), |i, j| {
        if order[i] == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    (order.iter().map(|&i| degrees[i]).collect(), p)
}

fn sign_diag(degrees: &[i64]) -> LinMap {
    LinMap::from_fn(degrees.len(), degrees.len(), |i, j| {
        if i != j {
            Scalar::zero()
        } else if degrees[i].rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    })
}

fn tensor_degrees(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().flat_map(|&p| b.iter().map(move |&q| p + q)).collect()
}

/// Permutation from the flat `X_tot⊗Y_tot` basis to the degree-sorted basis
/// of `X⊗Y`; within a degree, `X_p⊗Y_q` blocks come in increasing `p`.
pub fn tensor_sorting(x: &ChainComplex, y: &ChainComplex) -> LinMap {
    sort_by_degree(&tensor_degrees(&x.degrees(), &y.degrees())).1
}

/// `d(x⊗y) = dx⊗y + (−1)^p x⊗dy`.
pub fn tensor_complex(x: &ChainComplex, y: &ChainComplex) -> ChainComplex {
    let (dx, dy) = (x.total_differential(), y.total_differential());
    let flat = dx.kron(&id(y.total_dim())) + sign_diag(&x.degrees()).kron(&dy);
    let (degs, p) = sort_by_degree(&tensor_degrees(&x.degrees(), &y.degrees()));
    ChainComplex::from_total(&degs, &(&p * flat * p.transpose())).expect("tensor differential has degree -1")
}

fn hom_degrees(x: &ChainComplex, y: &ChainComplex) -> Vec<i64> {
    let (dx, dy) = (x.degrees(), y.degrees());
    dy.iter().flat_map(|&q| dx.iter().map(move |&p| q - p)).collect()
}

/// Flat `Hom(X_tot, Y_tot)` (row-major `f`) to the degree-sorted basis of `[X,Y]`.
pub fn hom_sorting(x: &ChainComplex, y: &ChainComplex) -> LinMap {
    sort_by_degree(&hom_degrees(x, y)).1
}

/// Differential of `[X,Y]` on the flat basis: `d(f) = d_Y∘f − (−1)^n f∘d_X`.
pub fn hom_differential_flat(x: &ChainComplex, y: &ChainComplex) -> LinMap {
    let (dx, dy) = (x.total_differential(), y.total_differential());
    let (nx, ny) = (x.total_dim(), y.total_dim());
    dy.kron(&id(nx)) - id(ny).kron(&dx.transpose()) * sign_diag(&hom_degrees(x, y))
}

/// `[X,Y]_n = Π_p Hom(X_p, Y_{p+n})`.
pub fn hom_complex(x: &ChainComplex, y: &ChainComplex) -> ChainComplex {
    let (degs, p) = sort_by_degree(&hom_degrees(x, y));
    let d = &p * hom_differential_flat(x, y) * p.transpose();
    ChainComplex::from_total(&degs, &d).expect("hom differential has degree -1")
}

/// Chain maps `X → Y` as total block-diagonal matrices, solved degree by
/// degree from `d_n^Y f_n = f_{n−1} d_n^X`.
pub fn chain_maps(x: &ChainComplex, y: &ChainComplex) -> Vec<LinMap> {
    let lo = x.min_deg.min(y.min_deg);
    let hi = x.max_deg().max(y.max_deg());
    let degs: Vec<i64> = (lo..=hi).collect();
    let sizes: Vec<usize> = degs.iter().map(|&n| y.dim(n) * x.dim(n)).collect();
    let total: usize = sizes.iter().sum();
    let mut offs = vec![0];
    for s in &sizes {
        offs.push(offs.last().unwrap() + s);
    }
    let block = |v: &LinMap, k: usize| {
        let n = degs[k];
        LinMap::from_fn(y.dim(n), x.dim(n), |i, j| v.get(offs[k] + i * x.dim(n) + j, 0).clone())
    };
    // one equation block per degree n: d^Y_n f_n − f_{n−1} d^X_n
    let coeff_cols: Vec<LinMap> = (0..total)
        .map(|u| {
            let e = LinMap::basis_vector(total, u);
            let parts: Vec<LinMap> = (0..degs.len())
                .map(|k| {
                    let n = degs[k];
                    let fn_ = block(&e, k);
                    let prev = if k > 0 { block(&e, k - 1) } else { LinMap::zeros(y.dim(n - 1), x.dim(n - 1)) };
                    (y.d(n) * fn_ - prev * x.d(n)).vectorize()
                })
                .collect();
            parts.iter().fold(LinMap::zeros(0, 1), |acc, p| acc.vstack(p).unwrap())
        })
        .collect();
    let eqs = coeff_cols.first().map_or(0, |c| c.rows());
    let coeff = LinMap::from_fn(eqs, total, |i, j| coeff_cols[j].get(i, 0).clone());
    let kernel = coeff.kernel();
    (0..kernel.cols())
        .map(|c| {
            let v = kernel.column(c);
            let mut out = LinMap::zeros(y.total_dim(), x.total_dim());
            for (k, &n) in degs.iter().enumerate() {
                let b = block(&v, k);
                let (r0, c0) = (y.offset(n), x.offset(n));
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
            }
            out
        })
        .collect()
}

/// Degree-`n` cycles of a complex, as columns in `X_n`.
pub fn cycles(x: &ChainComplex, n: i64) -> LinMap {
    x.d(n).kernel()
}

/// `X⊗Y → Y⊗X`, `x⊗y ↦ (−1)^{pq} y⊗x`, in the degree-sorted bases.
pub fn koszul_symmetry(x: &ChainComplex, y: &ChainComplex) -> LinMap {
    let (nx, ny) = (x.total_dim(), y.total_dim());
    let (dx, dy) = (x.degrees(), y.degrees());
    let mut flat = LinMap::symmetry(nx, ny);
    for i in 0..nx {
        for j in 0..ny {
            if (dx[i] * dy[j]).rem_euclid(2) == 1 {
                flat.set(j * nx + i, i * ny + j, -Scalar::one());
            }
        }
    }
    tensor_sorting(y, x) * flat * tensor_sorting(x, y).transpose()
}

/// A complex with a degreewise coaction over a bialgebra concentrated in degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgComodule {
    over: FinBialgebra,
    complex: ChainComplex,
    /// `ρ_n: X_n → X_n⊗H`, indexed from `min_deg`.
    coactions: Vec<LinMap>,
}

impl DgComodule {
    pub fn new(over: FinBialgebra, complex: ChainComplex, coactions: Vec<LinMap>) -> Result<Self> {
        if coactions.len() != complex.dims.len() {
            return Err(Error::shape("dg comodule", format!("{} coactions", coactions.len()), format!("{} degrees", complex.dims.len())));
        }
        let h = over.dim();
        for (k, r) in coactions.iter().enumerate() {
            let d = complex.dims[k];
            if r.shape() != (d * h, d) {
                return Err(Error::shape(
                    "degree coaction",
                    format!("{}x{}", r.rows(), r.cols()),
                    format!("expected {}x{}", d * h, d),
                ));
            }
        }
        Ok(DgComodule { over, complex, coactions })
    }

    /// The unit: `𝕂` in degree 0 with coaction `u_H`.
    pub fn unit(h: &FinBialgebra) -> Self {
        DgComodule::new(h.clone(), ChainComplex::concentrated(0, 1), vec![h.algebra().unit().clone()]).unwrap()
    }

    pub fn over(&self) -> &FinBialgebra {
        &self.over
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn coactions(&self) -> &[LinMap] {
        &self.coactions
    }

    /// The degree-`n` comodule (zero outside the range).
    pub fn part(&self, n: i64) -> Comodule {
        let k = n - self.complex.min_deg;
        let c = self.over.coalgebra().clone();
        if k < 0 || k as usize >= self.coactions.len() {
            return Comodule::new(c, 0, LinMap::zeros(0, 0)).unwrap();
        }
        Comodule::new(c, self.complex.dims[k as usize], self.coactions[k as usize].clone()).unwrap()
    }

    /// Underlying ungraded comodule on the total space.
    pub fn total_comodule(&self) -> Comodule {
        let blocks: Vec<&LinMap> = self.coactions.iter().collect();
        Comodule::new(self.over.coalgebra().clone(), self.complex.total_dim(), LinMap::direct_sum(&blocks)).unwrap()
    }

    /// From a total coaction that preserves degrees.
    pub fn from_total(over: &FinBialgebra, complex: ChainComplex, coaction: &LinMap) -> Result<Self> {
        let h = over.dim();
        let coactions = (complex.min_deg..=complex.max_deg())
            .filter(|_| !complex.dims.is_empty())
            .map(|n| {
                let (o, d) = (complex.offset(n), complex.dim(n));
                LinMap::from_fn(d * h, d, |i, j| coaction.get(o * h + i, o + j).clone())
            })
            .collect();
        let out = DgComodule::new(over.clone(), complex, coactions)?;
        if out.total_comodule().coaction() != coaction {
            return Err(Error::Mismatch("coaction does not preserve degrees".into()));
        }
        Ok(out)
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        r.absorb("complex", self.complex.validate());
        let h = self.over.dim();
        for n in self.complex.min_deg..=self.complex.max_deg() {
            r.absorb(&format!("degree-{n}"), self.part(n).validate());
            if n > self.complex.min_deg {
                let d = self.complex.d(n);
                r.expect_eq(
                    format!("chain-map-degree-{n}"),
                    &(self.part(n - 1).coaction() * &d),
                    &(d.kron(&id(h)) * self.part(n).coaction()),
                );
            }
        }
        r
    }

    /// Transported degreewise along invertible maps `a_n`.
    pub fn transport(&self, maps: &[LinMap]) -> Result<Self> {
        let x = &self.complex;
        if maps.len() != x.dims.len() {
            return Err(Error::shape("dg transport", format!("{} maps", maps.len()), format!("{} degrees", x.dims.len())));
        }
        let inv: Vec<LinMap> = maps
            .iter()
            .map(|a| a.inverse().ok_or_else(|| Error::Mismatch("transport needs invertible maps".into())))
            .collect::<Result<_>>()?;
        let h = self.over.dim();
        let diffs = (1..x.dims.len()).map(|k| &maps[k - 1] * &x.diffs[k - 1] * &inv[k]).collect();
        let coactions = (0..x.dims.len())
            .map(|k| maps[k].kron(&id(h)) * &self.coactions[k] * &inv[k])
            .collect();
        DgComodule::new(self.over.clone(), ChainComplex::new(x.min_deg, x.dims.clone(), diffs)?, coactions)
    }

    /// Direct sum (degrees aligned).
    pub fn direct_sum(&self, other: &DgComodule) -> Result<Self> {
        if self.over != other.over {
            return Err(Error::Mismatch("dg comodules over different bialgebras".into()));
        }
        let (a, b) = (&self.complex, &other.complex);
        if a.dims.is_empty() {
            return Ok(other.clone());
        }
        if b.dims.is_empty() {
            return Ok(self.clone());
        }
        let lo = a.min_deg.min(b.min_deg);
        let hi = a.max_deg().max(b.max_deg());
        let dims: Vec<usize> = (lo..=hi).map(|n| a.dim(n) + b.dim(n)).collect();
        let diffs = (lo + 1..=hi).map(|n| LinMap::direct_sum(&[&a.d(n), &b.d(n)])).collect();
        let coactions = (lo..=hi)
            .map(|n| {
                let p = comodcat::comodule_product(self.over.coalgebra(), &[self.part(n), other.part(n)]).unwrap();
                p.coaction().clone()
            })
            .collect();
        DgComodule::new(self.over.clone(), ChainComplex::new(lo, dims, diffs)?, coactions)
    }
}

/// `V⊗W` with the Koszul differential and the tensor coaction.
pub fn dg_tensor(v: &DgComodule, w: &DgComodule) -> Result<DgComodule> {
    let complex = tensor_complex(&v.complex, &w.complex);
    let t = comodule_tensor(&v.over, &v.total_comodule(), &w.total_comodule())?;
    let p = tensor_sorting(&v.complex, &w.complex);
    let coaction = p.kron(&id(v.over.dim())) * t.coaction() * p.transpose();
    DgComodule::from_total(&v.over, complex, &coaction)
}

/// Degree-0 chain maps that are comodule maps, as total matrices.
pub fn dg_hom_space(a: &DgComodule, b: &DgComodule) -> Vec<LinMap> {
    let (x, y) = (&a.complex, &b.complex);
    let (dx, dy) = (x.degrees(), y.degrees());
    let (ra, rb) = (a.total_comodule(), b.total_comodule());
    let (tx, ty) = (x.total_differential(), y.total_differential());
    let h = a.over.dim();
    solve_maps(x.total_dim(), y.total_dim(), |f| {
        let off_degree = LinMap::from_fn(f.rows(), f.cols(), |i, j| {
            if dy[i] == dx[j] {
                Scalar::zero()
            } else {
                f.get(i, j).clone()
            }
        });
        let chain = &ty * f - f * &tx;
        let comod = rb.coaction() * f - f.kron(&id(h)) * ra.coaction();
        off_degree.vectorize().vstack(&chain.vectorize()).unwrap().vstack(&comod.vectorize()).unwrap()
    })
}

/// Whether `-⊗H` commutes with `U_d` at `x`: dims and the comultiplication
/// component per degree. `h` is `H` as a complex; nonzero differentials on it
/// are allowed and noted.
pub fn check_computed_on_graded(h: &ChainComplex, samples: &[ChainComplex]) -> Report {
    let mut r = Report::new();
    if h.diffs.iter().any(|d| !d.is_zero()) {
        r.note("H has a nonzero differential; U_d forgets only the differential, so this is not a negative case");
    }
    for (i, x) in samples.iter().enumerate() {
        let dg = forget_to_graded(&tensor_complex(x, h)).trimmed();
        let gr = forget_to_graded(x).tensor(&forget_to_graded(h));
        if dg != gr {
            r.fail(format!("sample {i}: dims"), LinMap::zeros(0, 0));
        }
    }
    r
}

/// Same check for `H` a bialgebra in degree 0, including the structure maps:
/// the degree-`n` block of `id⊗Δ` on `U_d(X⊗H)` is `id_{X_n}⊗Δ`.
pub fn check_computed_on_graded_bialgebra(h: &FinBialgebra, samples: &[ChainComplex]) -> Report {
    let hc = ChainComplex::concentrated(0, h.dim());
    let mut r = check_computed_on_graded(&hc, samples);
    let c = h.coalgebra();
    for (i, x) in samples.iter().enumerate() {
        let qx = tensor_complex(x, &hc);
        let w_total = id(x.total_dim()).kron(c.comult());
        for n in x.min_deg..=x.max_deg() {
            let (o, d) = (qx.offset(n), qx.dim(n));
            let hh = h.dim();
            let block = LinMap::from_fn(d * hh, d, |a, b| w_total.get(o * hh + a, o + b).clone());
            r.expect_eq(format!("sample {i}: comult-degree-{n}"), &block, &c.comonad_comult(x.dim(n)));
            r.expect_eq(
                format!("sample {i}: differential-degree-{n}"),
                &qx.d(n),
                &x.d(n).kron(&id(hh)),
            );
        }
    }
    r
}

/// Which right adjoint to transfer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `⟨Z, V⟩`, right adjoint of `V⊗-`.
    Mapping,
    /// `{W, Z}`, right adjoint of `-⊗W`.
    Enriched,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferCheck {
    pub hypotheses: Report,
    pub conclusion: Report,
    /// The dg mapping object.
    pub mapping: DgComodule,
    /// Degree and dimension of each graded piece of the graded mapping object.
    pub graded_dims: Vec<(i64, usize)>,
}

impl TransferCheck {
    pub fn is_ok(&self) -> bool {
        self.hypotheses.is_ok() && self.conclusion.is_ok()
    }
}

fn lifted(h: &FinBialgebra, pairing: Pairing, z: &Comodule, v: &Comodule) -> Result<LiftedRightAdjoint> {
    match pairing {
        Pairing::Mapping => mapping_comodule_data(h, z, v),
        Pairing::Enriched => enriched_hom_data(h, v, z),
    }
}

fn same_span(a: &LinMap, b: &LinMap) -> bool {
    let (ra, rb) = (a.rank(), b.rank());
    ra == rb && a.hstack(b).map(|m| m.rank() == ra).unwrap_or(false)
}

/// Compare the dg mapping object (equalizer taken in complexes) with the
/// graded one (degreewise equalizers of the ungraded construction), and
/// check the hypotheses that make the canonical comparison an isomorphism.
pub fn transfer_iso_check(h: &FinBialgebra, z: &DgComodule, v: &DgComodule, pairing: Pairing) -> Result<TransferCheck> {
    for (name, m) in [("z", z), ("v", v)] {
        if m.over != *h {
            return Err(Error::Mismatch(format!("{name} is over a different bialgebra")));
        }
        let r = m.validate();
        if !r.is_ok() {
            return Err(Error::Invalid(r));
        }
    }
    let nh = h.dim();
    let c = h.coalgebra();
    let (zx, vx) = (&z.complex, &v.complex);
    let (nz, nv) = (zx.total_dim(), vx.total_dim());
    let mut hyp = Report::new();
    let mut con = Report::new();

    // U_d commutes with the tensor and with cofree comodules
    let t = dg_tensor(v, z)?;
    for n in t.complex.min_deg..=t.complex.max_deg() {
        let parts: Vec<Comodule> = (vx.min_deg..=vx.max_deg())
            .map(|p| comodule_tensor(h, &v.part(p), &z.part(n - p)))
            .collect::<Result<_>>()?;
        let graded = comodcat::comodule_product(c, &parts)?;
        hyp.expect_eq(format!("commutes-tensor-degree-{n}"), t.part(n).coaction(), graded.coaction());
    }
    let hom = hom_complex(vx, zx);
    hyp.absorb(
        "commutes-cofree",
        check_computed_on_graded_bialgebra(h, std::slice::from_ref(&hom)),
    );

    // cobar pair Z⊗H ⇉ Z⊗H⊗H: kernel in complexes vs degreewise kernels
    let zc = z.total_comodule();
    let cobar = zc.coaction().kron(&id(nh)) - id(nz).kron(c.comult());
    let whole = cobar.kernel();
    let mut per_degree = LinMap::zeros(nz * nh, 0);
    for n in zx.min_deg..=zx.max_deg() {
        let sel = selection(nz * nh, |i| zx.degrees()[i / nh] == n);
        per_degree = per_degree.hstack(&(&sel * (&cobar * &sel).kernel()))?;
    }
    if !same_span(&whole, &per_degree) || !same_span(&whole, zc.coaction()) {
        hyp.fail("equalizer-preservation/cobar", whole);
    }

    // the lifting pair on Z⊗V*⊗H
    let data = lifted(h, pairing, &zc, &v.total_comodule())?;
    let diff = &data.pair.0.map - &data.pair.1.map;
    let (zdeg, vdeg) = (zx.degrees(), vx.degrees());
    let deg_of = |i: usize| {
        let pair = i / nh;
        zdeg[pair / nv] - vdeg[pair % nv]
    };
    let d_total = hom_differential_flat(vx, zx).kron(&id(nh));
    let lo = zx.min_deg - vx.max_deg();
    let hi = zx.max_deg() - vx.min_deg;
    let empty = nz == 0 || nv == 0;
    let degrees: Vec<i64> = if empty { vec![] } else { (lo..=hi).collect() };
    let space = nz * nv * nh;

    let mut incl_dg: Vec<LinMap> = Vec::new();
    let mut all_dg = LinMap::zeros(space, 0);
    let mut graded_dims = Vec::new();
    let mut comodules = Vec::new();
    for &n in &degrees {
        let sel = selection(space, |i| deg_of(i) == n);
        let incl = &sel * (&diff * &sel).kernel();
        all_dg = all_dg.hstack(&incl)?;

        // graded side: block by block from ungraded constructions
        let mut incl_gr = LinMap::zeros(space, 0);
        let mut blocks = Vec::new();
        for p in vx.min_deg..=vx.max_deg() {
            let q = p + n;
            let (zq, vp) = (z.part(q), v.part(p));
            if zq.dim() == 0 || vp.dim() == 0 {
                continue;
            }
            let local = lifted(h, pairing, &zq, &vp)?;
            let (oz, ov) = (zx.offset(q), vx.offset(p));
            let embed = LinMap::from_fn(space, zq.dim() * vp.dim() * nh, |row, col| {
                let (pair, hh) = (col / nh, col % nh);
                let (a, b) = (pair / vp.dim(), pair % vp.dim());
                if row == ((oz + a) * nv + ov + b) * nh + hh {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            });
            incl_gr = incl_gr.hstack(&(embed * &local.inclusion))?;
            blocks.push(local.comodule);
        }
        let graded = comodcat::comodule_product(c, &blocks)?;
        graded_dims.push((n, graded.dim()));

        let restricted = restrict_comodule(&cofree(c, nz * nv), &incl)?;
        match solve_factor(&incl_gr, &incl)? {
            Some(cmp) if cmp.is_invertible() && comodcat::is_comodule_morphism(&restricted, &graded, &cmp) => {}
            _ => con.fail(format!("comparison-degree-{n}"), incl.clone()),
        }
        comodules.push(restricted);
        incl_dg.push(incl);
    }
    if !same_span(&all_dg, &data.inclusion) {
        hyp.fail("equalizer-preservation/mapping", data.inclusion.clone());
    }

    // differential induced on the dg equalizer
    let mut diffs = Vec::new();
    for k in 1..incl_dg.len() {
        match solve_factor(&incl_dg[k - 1], &(&d_total * &incl_dg[k]))? {
            Some(d) => diffs.push(d),
            None => {
                con.fail(format!("subcomplex-degree-{}", degrees[k]), incl_dg[k].clone());
                diffs.push(LinMap::zeros(incl_dg[k - 1].cols(), incl_dg[k].cols()));
            }
        }
    }
    let dims: Vec<usize> = incl_dg.iter().map(LinMap::cols).collect();
    let complex = ChainComplex::new(degrees.first().copied().unwrap_or(0), dims, diffs)?;
    let mapping = DgComodule::new(h.clone(), complex, comodules.iter().map(|m| m.coaction().clone()).collect())?;
    con.absorb("mapping", mapping.validate());
    Ok(TransferCheck {
        hypotheses: hyp,
        conclusion: con,
        mapping,
        graded_dims,
    })
}

/// Columns `e_i` for the indices selected by `keep`.
fn selection(n: usize, keep: impl Fn(usize) -> bool) -> LinMap {
    let idx: Vec<usize> = (0..n).filter(|&i| keep(i)).collect();
    id(n).select_columns(&idx)
}
