//! Finite-dimensional coalgebras, algebras and bialgebras.
//!
//! A coalgebra `C` is the comonad `X ↦ X⊗C` with `w_X = id_X⊗Δ` and
//! `n_X = id_X⊗ε`; an algebra `A` is the monad `X ↦ X⊗A`.

use crate::error::{Error, Result};
use crate::exactlin::{id, tensor, LinMap, Scalar};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinCoalgebra {
    dim: usize,
    comult: LinMap,
    counit: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAlgebra {
    dim: usize,
    mult: LinMap,
    unit: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinBialgebra {
    coalgebra: FinCoalgebra,
    algebra: FinAlgebra,
}

fn expect_shape(what: &'static str, m: &LinMap, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::shape(
            what,
            format!("{}x{}", m.rows(), m.cols()),
            format!("expected {rows}x{cols}"),
        ));
    }
    Ok(())
}

impl FinCoalgebra {
    /// `comult: C → C⊗C` is `dim² × dim`, `counit: C → 𝕂` is `1 × dim`.
    pub fn new(dim: usize, comult: LinMap, counit: LinMap) -> Result<Self> {
        expect_shape("coalgebra comult", &comult, dim * dim, dim)?;
        expect_shape("coalgebra counit", &counit, 1, dim)?;
        Ok(FinCoalgebra { dim, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    /// The ground field as a coalgebra.
    pub fn ground() -> Self {
        FinCoalgebra::new(1, id(1), id(1)).unwrap()
    }

    /// `n` group-like basis vectors: `Δe_i = e_i⊗e_i`, `ε(e_i) = 1`.
    pub fn grouplike(n: usize) -> Self {
        let mut comult = LinMap::zeros(n * n, n);
        for i in 0..n {
            comult.set(i * n + i, i, Scalar::one());
        }
        let counit = LinMap::from_fn(1, n, |_, _| Scalar::one());
        FinCoalgebra::new(n, comult, counit).unwrap()
    }

    /// Truncated divided powers: `Δx_k = Σ_{i+j=k} x_i⊗x_j`, `ε(x_k) = δ_{k0}`.
    pub fn divided_power(n: usize) -> Self {
        let mut comult = LinMap::zeros(n * n, n);
        for k in 0..n {
            for i in 0..=k {
                comult.set(i * n + (k - i), k, Scalar::one());
            }
        }
        let counit = LinMap::from_fn(1, n, |_, j| if j == 0 { Scalar::one() } else { Scalar::zero() });
        FinCoalgebra::new(n, comult, counit).unwrap()
    }

    /// Structure transported along an isomorphism `p: C → C'`.
    pub fn transport(&self, p: &LinMap) -> Result<Self> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Mismatch("transport needs an invertible map".into()))?;
        FinCoalgebra::new(self.dim, p.kron(p) * &self.comult * &pinv, &self.counit * &pinv)
    }

    /// Tensor product coalgebra `C⊗D`.
    pub fn tensor(&self, other: &FinCoalgebra) -> Self {
        let (c, d) = (self.dim, other.dim);
        let mid = tensor(&[&id(c), &LinMap::symmetry(c, d), &id(d)]);
        FinCoalgebra {
            dim: c * d,
            comult: mid * self.comult.kron(&other.comult),
            counit: self.counit.kron(&other.counit),
        }
    }

    /// Coassociativity and the two counit laws.
    pub fn validate(&self) -> Report {
        let n = self.dim;
        let mut r = Report::new();
        r.expect_eq(
            "coassociativity",
            &(self.comult.kron(&id(n)) * &self.comult),
            &(id(n).kron(&self.comult) * &self.comult),
        );
        r.expect_eq("counit-left", &(self.counit.kron(&id(n)) * &self.comult), &id(n));
        r.expect_eq("counit-right", &(id(n).kron(&self.counit) * &self.comult), &id(n));
        r
    }

    /// `w_X = id_X⊗Δ : X⊗C → X⊗C⊗C`.
    pub fn comonad_comult(&self, x: usize) -> LinMap {
        id(x).kron(&self.comult)
    }

    /// `n_X = id_X⊗ε : X⊗C → X`.
    pub fn comonad_counit(&self, x: usize) -> LinMap {
        id(x).kron(&self.counit)
    }

    /// Comonad identities for `X ↦ X⊗C` at a space of dimension `x`.
    pub fn check_comonad_laws(&self, x: usize) -> Report {
        let c = self.dim;
        let w = self.comonad_comult(x);
        let mut r = Report::new();
        r.expect_eq(
            "comonad-coassociativity",
            &(self.comonad_comult(x * c) * &w),
            &(w.kron(&id(c)) * &w),
        );
        r.expect_eq("comonad-counit-outer", &(self.comonad_counit(x * c) * &w), &id(x * c));
        r.expect_eq(
            "comonad-counit-inner",
            &(self.comonad_counit(x).kron(&id(c)) * &w),
            &id(x * c),
        );
        r
    }
}

impl FinAlgebra {
    /// `mult: A⊗A → A` is `dim × dim²`, `unit: 𝕂 → A` is `dim × 1`.
    pub fn new(dim: usize, mult: LinMap, unit: LinMap) -> Result<Self> {
        expect_shape("algebra mult", &mult, dim, dim * dim)?;
        expect_shape("algebra unit", &unit, dim, 1)?;
        Ok(FinAlgebra { dim, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn ground() -> Self {
        FinAlgebra::new(1, id(1), id(1)).unwrap()
    }

    /// `𝕂^n` with componentwise product.
    pub fn product(n: usize) -> Self {
        dual_algebra(&FinCoalgebra::grouplike(n))
    }

    /// Full matrix algebra `M_n` on the basis of matrix units `E_{ij}` (flat `i·n+j`).
    pub fn matrix(n: usize) -> Self {
        let d = n * n;
        let mut mult = LinMap::zeros(d, d * d);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult.set(i * n + k, (i * n + j) * d + (j * n + k), Scalar::one());
                }
            }
        }
        let unit = LinMap::from_fn(d, 1, |r, _| if r / n == r % n { Scalar::one() } else { Scalar::zero() });
        FinAlgebra::new(d, mult, unit).unwrap()
    }

    /// Truncated polynomial algebra `𝕂[x]/xⁿ`.
    pub fn truncated_polynomial(n: usize) -> Self {
        dual_algebra(&FinCoalgebra::divided_power(n))
    }

    pub fn transport(&self, p: &LinMap) -> Result<Self> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Mismatch("transport needs an invertible map".into()))?;
        FinAlgebra::new(self.dim, p * &self.mult * pinv.kron(&pinv), p * &self.unit)
    }

    pub fn tensor(&self, other: &FinAlgebra) -> Self {
        let (a, b) = (self.dim, other.dim);
        let mid = tensor(&[&id(a), &LinMap::symmetry(b, a), &id(b)]);
        FinAlgebra {
            dim: a * b,
            mult: self.mult.kron(&other.mult) * mid,
            unit: self.unit.kron(&other.unit),
        }
    }

    pub fn validate(&self) -> Report {
        let n = self.dim;
        let mut r = Report::new();
        r.expect_eq(
            "associativity",
            &(&self.mult * self.mult.kron(&id(n))),
            &(&self.mult * id(n).kron(&self.mult)),
        );
        r.expect_eq("unit-left", &(&self.mult * self.unit.kron(&id(n))), &id(n));
        r.expect_eq("unit-right", &(&self.mult * id(n).kron(&self.unit)), &id(n));
        r
    }
}

impl FinBialgebra {
    pub fn new(coalgebra: FinCoalgebra, algebra: FinAlgebra) -> Result<Self> {
        if coalgebra.dim != algebra.dim {
            return Err(Error::shape(
                "bialgebra",
                format!("coalgebra dim {}", coalgebra.dim),
                format!("algebra dim {}", algebra.dim),
            ));
        }
        Ok(FinBialgebra { coalgebra, algebra })
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim
    }

    pub fn coalgebra(&self) -> &FinCoalgebra {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn ground() -> Self {
        FinBialgebra::new(FinCoalgebra::ground(), FinAlgebra::ground()).unwrap()
    }

    /// Group bialgebra `𝕂[G]` for the multiplication table `mul[g][h]`,
    /// with element 0 the identity.
    pub fn group(mul: &[Vec<usize>]) -> Self {
        let n = mul.len();
        let mut m = LinMap::zeros(n, n * n);
        for (g, row) in mul.iter().enumerate() {
            for (h, &gh) in row.iter().enumerate() {
                m.set(gh, g * n + h, Scalar::one());
            }
        }
        let algebra = FinAlgebra::new(n, m, LinMap::basis_vector(n, 0)).unwrap();
        FinBialgebra::new(FinCoalgebra::grouplike(n), algebra).unwrap()
    }

    /// Whether `Δ` and `ε` are algebra maps, together with the underlying
    /// coalgebra and algebra axioms (reported under `coalgebra/` and `algebra/`).
    pub fn validate(&self) -> Report {
        let n = self.dim();
        let (d, e) = (&self.coalgebra.comult, &self.coalgebra.counit);
        let (m, u) = (&self.algebra.mult, &self.algebra.unit);
        let mut r = Report::new();
        r.absorb("coalgebra", self.coalgebra.validate());
        r.absorb("algebra", self.algebra.validate());
        let middle = tensor(&[&id(n), &LinMap::symmetry(n, n), &id(n)]);
        r.expect_eq("comult-multiplicative", &(d * m), &(m.kron(m) * middle * d.kron(d)));
        r.expect_eq("comult-unital", &(d * u), &u.kron(u));
        r.expect_eq("counit-multiplicative", &(e * m), &e.kron(e));
        r.expect_eq("counit-unital", &(e * u), &id(1));
        r
    }
}

/// Dual coalgebra `A*`: `Δ = mᵀ`, `ε = uᵀ`, using `(A⊗A)* = A*⊗A*` in the flat basis.
pub fn dual_coalgebra(a: &FinAlgebra) -> FinCoalgebra {
    FinCoalgebra {
        dim: a.dim,
        comult: a.mult.transpose(),
        counit: a.unit.transpose(),
    }
}

/// Dual algebra `C*`: `m = Δᵀ`, `u = εᵀ`.
pub fn dual_algebra(c: &FinCoalgebra) -> FinAlgebra {
    FinAlgebra {
        dim: c.dim,
        mult: c.comult.transpose(),
        unit: c.counit.transpose(),
    }
}

/// A structure map together with its kind.
#[derive(Clone, Debug)]
pub enum StructMorphism<'a> {
    Coalgebra {
        source: &'a FinCoalgebra,
        target: &'a FinCoalgebra,
        map: &'a LinMap,
    },
    Algebra {
        source: &'a FinAlgebra,
        target: &'a FinAlgebra,
        map: &'a LinMap,
    },
    Bialgebra {
        source: &'a FinBialgebra,
        target: &'a FinBialgebra,
        map: &'a LinMap,
    },
}

/// Failed defining squares of a structure morphism.
pub fn check_morphism(m: &StructMorphism<'_>) -> Result<Report> {
    match *m {
        StructMorphism::Coalgebra { source, target, map } => {
            expect_shape("coalgebra morphism", map, target.dim, source.dim)?;
            let mut r = Report::new();
            r.expect_eq("comult-preserved", &(&target.comult * map), &(map.kron(map) * &source.comult));
            r.expect_eq("counit-preserved", &(&target.counit * map), &source.counit);
            Ok(r)
        }
        StructMorphism::Algebra { source, target, map } => {
            expect_shape("algebra morphism", map, target.dim, source.dim)?;
            let mut r = Report::new();
            r.expect_eq("mult-preserved", &(map * &source.mult), &(&target.mult * map.kron(map)));
            r.expect_eq("unit-preserved", &(map * &source.unit), &target.unit);
            Ok(r)
        }
        StructMorphism::Bialgebra { source, target, map } => {
            let mut r = check_morphism(&StructMorphism::Coalgebra {
                source: &source.coalgebra,
                target: &target.coalgebra,
                map,
            })?;
            r.absorb(
                "algebra",
                check_morphism(&StructMorphism::Algebra {
                    source: &source.algebra,
                    target: &target.algebra,
                    map,
                })?,
            );
            Ok(r)
        }
    }
}

/// Named finite groups used throughout: tables with identity at index 0.
pub mod groups {
    pub fn cyclic(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect()
    }

    /// `Z/2 × Z/2` with element `2a + b` for `(a, b)`.
    pub fn klein() -> Vec<Vec<usize>> {
        (0..4).map(|g| (0..4).map(|h| g ^ h).collect()).collect()
    }

    /// `S_3` as permutations of `{0,1,2}` in lexicographic order.
    pub fn symmetric3() -> Vec<Vec<usize>> {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| index([g[h[0]], g[h[1]], g[h[2]]]))
                    .collect()
            })
            .collect()
    }
}
