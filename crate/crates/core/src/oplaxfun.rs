//! Oplax comonad functors `F = -⊗W : (Vect, -⊗C) → (Vect, -⊗D)`.
//!
//! A natural transformation `FQ → RF` between such functors is `id_X⊗b`
//! for a single map `b: C⊗W → W⊗D`, so the whole structure is `b`.

use crate::comodcat::{self, cofree, Comodule, ComoduleMorphism};
use crate::error::{Error, Result};
use crate::exactlin::{id, tensor, LinMap};
use crate::report::Report;
use crate::structures::FinCoalgebra;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OplaxStructure {
    source: FinCoalgebra,
    target: FinCoalgebra,
    carrier: usize,
    b: LinMap,
}

impl OplaxStructure {
    /// `b: C⊗W → W⊗D` is `(w·d) × (c·w)`.
    pub fn new(source: FinCoalgebra, target: FinCoalgebra, carrier: usize, b: LinMap) -> Result<Self> {
        let want = (carrier * target.dim(), source.dim() * carrier);
        if b.shape() != want {
            return Err(Error::shape(
                "oplax structure b",
                format!("{}x{}", b.rows(), b.cols()),
                format!("expected {}x{}", want.0, want.1),
            ));
        }
        Ok(OplaxStructure { source, target, carrier, b })
    }

    pub fn source(&self) -> &FinCoalgebra {
        &self.source
    }

    pub fn target(&self) -> &FinCoalgebra {
        &self.target
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn b(&self) -> &LinMap {
        &self.b
    }

    /// The identity functor with the identity structure.
    pub fn identity(c: &FinCoalgebra) -> Self {
        OplaxStructure::new(c.clone(), c.clone(), 1, id(c.dim())).unwrap()
    }

    /// `U_Q ⊗ W` into plain vector spaces: `b = ε_C⊗id_W`.
    pub fn forgetful(c: &FinCoalgebra, w: usize) -> Self {
        OplaxStructure::new(c.clone(), FinCoalgebra::ground(), w, c.counit().kron(&id(w))).unwrap()
    }

    /// `b = (id_W⊗φ)∘σ_{C,W}` for a coalgebra map `φ: C → D`.
    pub fn from_coalgebra_map(c: &FinCoalgebra, d: &FinCoalgebra, phi: &LinMap, w: usize) -> Result<Self> {
        if phi.shape() != (d.dim(), c.dim()) {
            return Err(Error::shape(
                "coalgebra map",
                format!("{}x{}", phi.rows(), phi.cols()),
                format!("expected {}x{}", d.dim(), c.dim()),
            ));
        }
        let b = id(w).kron(phi) * LinMap::symmetry(c.dim(), w);
        OplaxStructure::new(c.clone(), d.clone(), w, b)
    }

    /// Pasting `F'F Q → F' R F → S F' F`: component `(id_W⊗b')∘(b⊗id_{W'})`.
    pub fn then(&self, next: &OplaxStructure) -> Result<Self> {
        if self.target != next.source {
            return Err(Error::Mismatch("composable oplax structures need matching comonads".into()));
        }
        let (w1, w2) = (self.carrier, next.carrier);
        let b = id(w1).kron(&next.b) * self.b.kron(&id(w2));
        OplaxStructure::new(self.source.clone(), next.target.clone(), w1 * w2, b)
    }

    /// `-⊗(W⊕W')` with the blockwise structure.
    pub fn direct_sum(&self, other: &OplaxStructure) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Mismatch("direct sum needs equal comonads".into()));
        }
        let (c, d) = (self.source.dim(), self.target.dim());
        let (w1, w2) = (self.carrier, other.carrier);
        let w = w1 + w2;
        let mut b = LinMap::zeros(w * d, c * w);
        for ci in 0..c {
            for x in 0..w1 {
                for y in 0..w1 {
                    for k in 0..d {
                        b.set(y * d + k, ci * w + x, self.b.get(y * d + k, ci * w1 + x).clone());
                    }
                }
            }
            for x in 0..w2 {
                for y in 0..w2 {
                    for k in 0..d {
                        b.set((w1 + y) * d + k, ci * w + w1 + x, other.b.get(y * d + k, ci * w2 + x).clone());
                    }
                }
            }
        }
        OplaxStructure::new(self.source.clone(), self.target.clone(), w, b)
    }

    /// Structure transported along invertible maps of `C`, `W` and `D`
    /// (`p: C → C'`, `a: W → W'`, `q: D → D'`).
    pub fn transport(&self, p: &LinMap, a: &LinMap, q: &LinMap) -> Result<Self> {
        let inv = |m: &LinMap| {
            m.inverse()
                .ok_or_else(|| Error::Mismatch("transport needs invertible maps".into()))
        };
        let (pinv, ainv) = (inv(p)?, inv(a)?);
        let b = a.kron(q) * &self.b * pinv.kron(&ainv);
        OplaxStructure::new(self.source.transport(p)?, self.target.transport(q)?, self.carrier, b)
    }

    pub fn validate(&self) -> Report {
        validate_oplax(self)
    }
}

/// Residuals of the counit and comultiplication squares.
pub fn validate_oplax(s: &OplaxStructure) -> Report {
    let (c, d, w) = (s.source.dim(), s.target.dim(), s.carrier);
    let b = &s.b;
    let mut r = Report::new();
    r.expect_eq(
        "counit-square",
        &(id(w).kron(s.target.counit()) * b),
        &s.source.counit().kron(&id(w)),
    );
    let lhs = b.kron(&id(d)) * id(c).kron(b) * s.source.comult().kron(&id(w));
    let rhs = id(w).kron(s.target.comult()) * b;
    r.expect_eq("comult-square", &lhs, &rhs);
    r
}

/// `(V⊗W, (ρ_V⊗id_W);(id_V⊗b))`.
pub fn lift_comodule(s: &OplaxStructure, v: &Comodule) -> Result<Comodule> {
    if v.over() != &s.source {
        return Err(Error::Mismatch("comodule is not over the source coalgebra".into()));
    }
    let n = v.dim();
    let coaction = id(n).kron(&s.b) * v.coaction().kron(&id(s.carrier));
    Comodule::new(s.target.clone(), n * s.carrier, coaction)
}

/// `f⊗id_W` between the lifts.
pub fn lift_morphism(s: &OplaxStructure, f: &ComoduleMorphism) -> Result<ComoduleMorphism> {
    ComoduleMorphism::new(
        lift_comodule(s, &f.source)?,
        lift_comodule(s, &f.target)?,
        f.map.kron(&id(s.carrier)),
    )
}

/// Recover `b = (ε_C⊗id_{W⊗D})∘c` from the coaction `c` a lifting assigns to `cofree(𝕂)⊗W`.
pub fn extract_oplax(
    source: &FinCoalgebra,
    target: &FinCoalgebra,
    carrier: usize,
    coaction: &LinMap,
) -> Result<OplaxStructure> {
    let (c, d, w) = (source.dim(), target.dim(), carrier);
    if coaction.shape() != (c * w * d, c * w) {
        return Err(Error::shape(
            "lifted cofree coaction",
            format!("{}x{}", coaction.rows(), coaction.cols()),
            format!("expected {}x{}", c * w * d, c * w),
        ));
    }
    let b = source.counit().kron(&id(w * d)) * coaction;
    OplaxStructure::new(source.clone(), target.clone(), carrier, b)
}

/// Coaction of the lift of `cofree(𝕂) = (C, Δ)`.
pub fn lifted_cofree_coaction(s: &OplaxStructure) -> LinMap {
    lift_comodule(s, &cofree(&s.source, 1))
        .expect("cofree comodule is over the source")
        .coaction()
        .clone()
}

/// Witness for [`is_comonad_functor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorWitness {
    /// `b⁻¹`.
    Inverse(LinMap),
    /// A nonzero vector killed by `b`.
    Kernel(LinMap),
    /// A nonzero covector killing the image of `b` (when `b` is injective but not onto).
    Cokernel(LinMap),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonadFunctorCheck {
    pub invertible: bool,
    pub witness: FunctorWitness,
    /// For each sampled `X`: `(dim X, comparison invertible)`.
    pub comparisons: Vec<(usize, bool)>,
}

impl ComonadFunctorCheck {
    /// Whether every sampled comparison map agreed with the invertibility of `b`.
    pub fn consistent(&self) -> bool {
        self.comparisons
            .iter()
            .all(|&(x, inv)| if x == 0 { inv } else { inv == self.invertible })
    }
}

/// Comparison `F_cog L^Q(X) → L^R F(X)`: the adjunct of `F(n_X) = id_X⊗ε_C⊗id_W`
/// under `U_R ⊣ L^R`.
pub fn comparison_map(s: &OplaxStructure, x: usize) -> LinMap {
    let lifted = lift_comodule(s, &cofree(&s.source, x)).expect("cofree comodule is over the source");
    let counit_image = tensor(&[&id(x), s.source.counit(), &id(s.carrier)]);
    comodcat::cofree_adjunct(&lifted, &counit_image)
}

/// Whether `b` is invertible, with witness, plus the comparison map at the
/// given sample dimensions.
pub fn is_comonad_functor(s: &OplaxStructure, sample_dims: &[usize]) -> ComonadFunctorCheck {
    let b = &s.b;
    let witness = if let Some(inv) = b.inverse() {
        FunctorWitness::Inverse(inv)
    } else {
        let k = b.kernel();
        if k.cols() > 0 {
            FunctorWitness::Kernel(k.column(0))
        } else {
            FunctorWitness::Cokernel(b.transpose().kernel().column(0).transpose())
        }
    };
    let comparisons = sample_dims
        .iter()
        .map(|&x| (x, comparison_map(s, x).is_invertible()))
        .collect();
    ComonadFunctorCheck {
        invertible: matches!(witness, FunctorWitness::Inverse(_)),
        witness,
        comparisons,
    }
}

/// `F(ΠV_i) → ΠF(V_i)`, i.e. the rows `π_i⊗id_W` stacked.
pub fn product_comparison(s: &OplaxStructure, vs: &[Comodule]) -> Result<LinMap> {
    let dims: Vec<usize> = vs.iter().map(Comodule::dim).collect();
    let total: usize = dims.iter().sum();
    let legs: Vec<LinMap> = comodcat::product_projections(&dims)
        .iter()
        .map(|p| p.kron(&id(s.carrier)))
        .collect();
    comodcat::product_pairing(&legs, total * s.carrier)
}

/// Lift along a product of oplax structures in `Comonads`: componentwise.
pub fn lift_product(
    pair: (&OplaxStructure, &OplaxStructure),
    v: (&Comodule, &Comodule),
) -> Result<(Comodule, Comodule)> {
    Ok((lift_comodule(pair.0, v.0)?, lift_comodule(pair.1, v.1)?))
}

/// A natural transformation `id⊗a : -⊗W → -⊗W'` between two oplax structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransData {
    pub source: OplaxStructure,
    pub target: OplaxStructure,
    pub a: LinMap,
}

impl NatTransData {
    pub fn new(source: OplaxStructure, target: OplaxStructure, a: LinMap) -> Result<Self> {
        if source.source != target.source || source.target != target.target {
            return Err(Error::Mismatch("2-cell between oplax structures with different comonads".into()));
        }
        if a.shape() != (target.carrier, source.carrier) {
            return Err(Error::shape(
                "natural transformation component",
                format!("{}x{}", a.rows(), a.cols()),
                format!("expected {}x{}", target.carrier, source.carrier),
            ));
        }
        Ok(NatTransData { source, target, a })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtLiftCheck {
    /// `(a⊗id_D)∘b = b'∘(id_C⊗a)`.
    pub lifts: bool,
    pub report: Report,
    /// Per sampled comodule: is `id_V⊗a` a comodule morphism between the lifts.
    pub sampled: Vec<bool>,
}

impl NtLiftCheck {
    /// The equation holds exactly when every sampled `id_V⊗a` is a morphism.
    pub fn agrees(&self) -> bool {
        self.sampled.iter().all(|&s| s) == self.lifts
    }
}

/// The component equation, and `id_V⊗a` on each sample.
pub fn nt_lifts(n: &NatTransData, samples: &[Comodule]) -> Result<NtLiftCheck> {
    let c = n.source.source.dim();
    let d = n.source.target.dim();
    let mut report = Report::new();
    report.expect_eq(
        "component-equation",
        &(n.a.kron(&id(d)) * &n.source.b),
        &(&n.target.b * id(c).kron(&n.a)),
    );
    let mut sampled = Vec::with_capacity(samples.len());
    for v in samples {
        let lv = lift_comodule(&n.source, v)?;
        let lw = lift_comodule(&n.target, v)?;
        sampled.push(comodcat::is_comodule_morphism(&lv, &lw, &id(v.dim()).kron(&n.a)));
    }
    Ok(NtLiftCheck {
        lifts: report.is_ok(),
        report,
        sampled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodcat::is_comodule_morphism;
    use crate::structures::{groups, FinBialgebra};

    fn kz2() -> FinCoalgebra {
        FinBialgebra::group(&groups::cyclic(2)).coalgebra().clone()
    }

    #[test]
    fn validate_examples() {
        for c in [kz2(), FinCoalgebra::divided_power(3), FinCoalgebra::ground()] {
            assert!(OplaxStructure::identity(&c).validate().is_ok());
            for w in 0..3 {
                assert!(OplaxStructure::forgetful(&c, w).validate().is_ok());
            }
        }
        let zero = OplaxStructure::new(kz2(), kz2(), 1, LinMap::zeros(2, 2)).unwrap();
        assert!(zero.validate().has("counit-square"));
    }

    #[test]
    fn lift_examples() {
        let c = kz2();
        let v = cofree(&c, 2);
        assert_eq!(lift_comodule(&OplaxStructure::identity(&c), &v).unwrap(), v);
        let u = lift_comodule(&OplaxStructure::forgetful(&c, 1), &v).unwrap();
        assert_eq!(u.coaction(), &id(4));
        // b = id_W ⊗ ... with C = D: W = 𝕂², b = σ_{C,W} makes cofree(𝕂)⊗W the diagonal coaction
        let s = OplaxStructure::from_coalgebra_map(&c, &c, &id(2), 2).unwrap();
        assert!(s.validate().is_ok());
        let l = lift_comodule(&s, &cofree(&c, 1)).unwrap();
        assert!(l.validate().is_ok());
        // basis (g_i, w) sits in degree i
        for i in 0..2 {
            for w in 0..2 {
                let col = l.coaction().column(i * 2 + w);
                let expect = LinMap::basis_vector(4, i * 2 + w).kron(&LinMap::basis_vector(2, i));
                assert_eq!(col, expect);
            }
        }
    }

    #[test]
    fn extract_examples() {
        let c = FinCoalgebra::divided_power(2);
        let s = OplaxStructure::identity(&c);
        let e = extract_oplax(&c, &c, 1, &lifted_cofree_coaction(&s)).unwrap();
        assert_eq!(e.b(), &id(2));
        let f = OplaxStructure::forgetful(&c, 2);
        let e = extract_oplax(&c, f.target(), 2, &lifted_cofree_coaction(&f)).unwrap();
        assert_eq!(e.b(), &c.counit().kron(&id(2)));
    }

    #[test]
    fn comonad_functor_examples() {
        let c = kz2();
        let r = is_comonad_functor(&OplaxStructure::identity(&c), &[0, 1, 2, 3]);
        assert!(r.invertible && r.consistent());
        let f = OplaxStructure::forgetful(&c, 2);
        let r = is_comonad_functor(&f, &[0, 1, 2, 3]);
        assert!(!r.invertible && r.consistent());
        let FunctorWitness::Kernel(k) = &r.witness else {
            panic!("expected kernel witness");
        };
        assert!((f.b() * k).is_zero() && !k.is_zero());
        // the kernel vector lies in ker(ε)⊗W
        assert!((c.counit().kron(&id(2)) * k).is_zero());
    }

    #[test]
    fn comparison_is_id_tensor_b() {
        let c = FinCoalgebra::divided_power(2);
        let s = OplaxStructure::from_coalgebra_map(&c, &c, &id(2), 2).unwrap();
        for x in 0..3 {
            assert_eq!(comparison_map(&s, x), id(x).kron(s.b()));
        }
    }

    #[test]
    fn invertible_b_preserves_products() {
        let c = kz2();
        let s = OplaxStructure::from_coalgebra_map(&c, &c, &id(2), 2).unwrap();
        assert!(s.b().is_invertible());
        let vs = [cofree(&c, 1), cofree(&c, 2)];
        let prod = comodcat::comodule_product(&c, &vs).unwrap();
        let lifted: Vec<Comodule> = vs.iter().map(|v| lift_comodule(&s, v).unwrap()).collect();
        let prod_lift = comodcat::comodule_product(&c, &lifted).unwrap();
        let cmp = product_comparison(&s, &vs).unwrap();
        assert!(cmp.is_invertible());
        assert!(is_comodule_morphism(&lift_comodule(&s, &prod).unwrap(), &prod_lift, &cmp));
    }

    #[test]
    fn nt_lifts_examples() {
        let c = kz2();
        let s = OplaxStructure::from_coalgebra_map(&c, &c, &id(2), 1).unwrap();
        let samples = [cofree(&c, 1), cofree(&c, 2)];
        let n = NatTransData::new(s.clone(), s.clone(), id(1)).unwrap();
        let r = nt_lifts(&n, &samples).unwrap();
        assert!(r.lifts && r.agrees());
        let n = NatTransData::new(s.clone(), s.clone(), LinMap::zeros(1, 1)).unwrap();
        assert!(nt_lifts(&n, &samples).unwrap().lifts);
        // b' shifts degrees by the swap coalgebra automorphism; a = swap on W = 𝕂²
        let swap = LinMap::from_ints(&[&[0, 1], &[1, 0]]);
        let s1 = OplaxStructure::from_coalgebra_map(&c, &c, &id(2), 2).unwrap();
        let s2 = OplaxStructure::from_coalgebra_map(&c, &c, &swap, 2).unwrap();
        assert!(s2.validate().is_ok());
        let n = NatTransData::new(s1, s2, swap).unwrap();
        let r = nt_lifts(&n, &samples).unwrap();
        assert!(!r.lifts && r.agrees());
        assert!(r.report.has("component-equation"));
    }

    #[test]
    fn composition_law() {
        let c = FinCoalgebra::divided_power(2);
        let s1 = OplaxStructure::from_coalgebra_map(&c, &c, &id(2), 2).unwrap();
        let s2 = OplaxStructure::forgetful(&c, 2);
        let comp = s1.then(&s2).unwrap();
        assert!(comp.validate().is_ok());
        let v = cofree(&c, 2);
        let two_step = lift_comodule(&s2, &lift_comodule(&s1, &v).unwrap()).unwrap();
        assert_eq!(lift_comodule(&comp, &v).unwrap(), two_step);
    }
}
