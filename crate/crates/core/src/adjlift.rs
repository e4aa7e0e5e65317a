//! Adjunctions `-⊗W ⊣ -⊗V` (V dual to W through a pairing), Kelly's
//! bijection between oplax structures on the left adjoint and lax
//! structures on the right one, the lifted right adjoint as a coreflexive
//! equalizer, mapping comodules, and the LQR factorization.

use crate::comodcat::{self, cofree, comodule_equalizer, is_comodule_morphism, Comodule, ComoduleMorphism};
use crate::error::{Error, Result};
use crate::exactlin::{id, solve_factor, tensor, LinMap};
use crate::hopf::comodule_tensor;
use crate::oplaxfun::{lift_comodule, OplaxStructure};
use crate::report::Report;
use crate::structures::{FinAlgebra, FinBialgebra, FinCoalgebra};

/// `L = -⊗W ⊣ R = -⊗V` with unit `coev: 𝕂 → W⊗V` and counit `ev: V⊗W → 𝕂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionData {
    dim: usize,
    unit: LinMap,
    counit: LinMap,
}

impl AdjunctionData {
    /// Checks both triangle identities.
    pub fn new(dim: usize, unit: LinMap, counit: LinMap) -> Result<Self> {
        if unit.shape() != (dim * dim, 1) || counit.shape() != (1, dim * dim) {
            return Err(Error::shape(
                "adjunction unit/counit",
                format!("{}x{} and {}x{}", unit.rows(), unit.cols(), counit.rows(), counit.cols()),
                format!("{0}x1 and 1x{0}", dim * dim),
            ));
        }
        let adj = AdjunctionData { dim, unit, counit };
        let r = adj.validate();
        if !r.is_ok() {
            return Err(Error::Invalid(r));
        }
        Ok(adj)
    }

    /// `ev(v_i⊗w_j) = g[i][j]`, `coev = Σ g⁻¹[j][i] w_j⊗v_i`.
    pub fn with_pairing(g: &LinMap) -> Result<Self> {
        let ginv = g
            .inverse()
            .ok_or_else(|| Error::Mismatch("pairing must be nondegenerate".into()))?;
        AdjunctionData::new(g.rows(), ginv.vectorize(), g.vectorize().transpose())
    }

    /// The standard basis pairing.
    pub fn standard(dim: usize) -> Self {
        AdjunctionData::with_pairing(&id(dim)).unwrap()
    }

    /// `Id ⊣ Id`.
    pub fn identity() -> Self {
        AdjunctionData::standard(1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn validate(&self) -> Report {
        let w = self.dim;
        let mut r = Report::new();
        r.expect_eq("triangle-left", &(id(w).kron(&self.counit) * self.unit.kron(&id(w))), &id(w));
        r.expect_eq("triangle-right", &(self.counit.kron(&id(w)) * id(w).kron(&self.unit)), &id(w));
        r
    }

    /// `k*: V → V` dual to `k: W → W` under the pairing.
    pub fn dual_map(&self, k: &LinMap) -> LinMap {
        let w = self.dim;
        tensor(&[&self.counit, &id(w)]) * tensor(&[&id(w), k, &id(w)]) * id(w).kron(&self.unit)
    }
}

/// `b̂: V⊗C → D⊗V`, a lax comonad functor structure on `R = -⊗V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxStructure {
    source: FinCoalgebra,
    target: FinCoalgebra,
    carrier: usize,
    bhat: LinMap,
}

impl LaxStructure {
    pub fn new(source: FinCoalgebra, target: FinCoalgebra, carrier: usize, bhat: LinMap) -> Result<Self> {
        let want = (target.dim() * carrier, carrier * source.dim());
        if bhat.shape() != want {
            return Err(Error::shape(
                "lax structure",
                format!("{}x{}", bhat.rows(), bhat.cols()),
                format!("expected {}x{}", want.0, want.1),
            ));
        }
        Ok(LaxStructure { source, target, carrier, bhat })
    }

    /// `C`, the comonad on the side `R` lands in.
    pub fn source(&self) -> &FinCoalgebra {
        &self.source
    }

    pub fn target(&self) -> &FinCoalgebra {
        &self.target
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn bhat(&self) -> &LinMap {
        &self.bhat
    }

    pub fn validate(&self) -> Report {
        let (c, v) = (self.source.dim(), self.carrier);
        let b = &self.bhat;
        let mut r = Report::new();
        r.expect_eq(
            "counit-square",
            &(self.target.counit().kron(&id(v)) * b),
            &id(v).kron(self.source.counit()),
        );
        let d = self.target.dim();
        let lhs = self.target.comult().kron(&id(v)) * b;
        let rhs = id(d).kron(b) * b.kron(&id(c)) * id(v).kron(self.source.comult());
        r.expect_eq("comult-square", &lhs, &rhs);
        r
    }
}

fn check_carrier(adj: &AdjunctionData, carrier: usize) -> Result<()> {
    if adj.dim != carrier {
        return Err(Error::Mismatch(format!(
            "adjunction on a {}-dimensional space, structure carrier {}",
            adj.dim, carrier
        )));
    }
    Ok(())
}

fn require_ok(r: Report) -> Result<()> {
    if r.is_ok() {
        Ok(())
    } else {
        Err(Error::Invalid(r))
    }
}

/// `b̂ = (ev⊗id_{D⊗V})(id_V⊗b⊗id_V)(id_{V⊗C}⊗coev)`.
pub fn kelly_oplax_to_lax(adj: &AdjunctionData, s: &OplaxStructure) -> Result<LaxStructure> {
    check_carrier(adj, s.carrier())?;
    require_ok(s.validate())?;
    Ok(kelly_to_lax_unchecked(adj, s))
}

fn kelly_to_lax_unchecked(adj: &AdjunctionData, s: &OplaxStructure) -> LaxStructure {
    let (c, d, w) = (s.source().dim(), s.target().dim(), adj.dim);
    let bhat = adj.counit.kron(&id(d * w))
        * tensor(&[&id(w), s.b(), &id(w)])
        * id(w * c).kron(&adj.unit);
    LaxStructure::new(s.source().clone(), s.target().clone(), w, bhat).expect("kelly shape")
}

/// `b = (id_{W⊗D}⊗ev)(id_W⊗b̂⊗id_W)(coev⊗id_{C⊗W})`.
pub fn kelly_lax_to_oplax(adj: &AdjunctionData, s: &LaxStructure) -> Result<OplaxStructure> {
    check_carrier(adj, s.carrier)?;
    require_ok(s.validate())?;
    let (c, d, w) = (s.source.dim(), s.target.dim(), adj.dim);
    let b = id(w * d).kron(&adj.counit)
        * tensor(&[&id(w), &s.bhat, &id(w)])
        * adj.unit.kron(&id(c * w));
    OplaxStructure::new(s.source.clone(), s.target.clone(), w, b)
}

/// The right adjoint of `lift_comodule(s, -)` evaluated at `z`: the
/// equalizer `E → cofree(Z⊗V) ⇉ cofree(Z⊗D⊗V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedRightAdjoint {
    pub adjunction: AdjunctionData,
    pub structure: OplaxStructure,
    pub lax: LaxStructure,
    pub z: Comodule,
    pub comodule: Comodule,
    /// `E → Z⊗V⊗C`.
    pub inclusion: LinMap,
    /// `ρ_Z⊗id_{V⊗C}` and `(id_Z⊗b̂⊗id_C)(id_{Z⊗V}⊗Δ_C)`.
    pub pair: (ComoduleMorphism, ComoduleMorphism),
}

impl LiftedRightAdjoint {
    /// `id_Z⊗ε_D⊗id_{V⊗C}`, a left inverse of both maps of the pair.
    pub fn common_retraction(&self) -> LinMap {
        let (z, v, c) = (self.z.dim(), self.adjunction.dim, self.structure.source().dim());
        tensor(&[&id(z), self.structure.target().counit(), &id(v * c)])
    }

    /// `f: lift(V') → Z` to its adjunct `V' → E`.
    pub fn forward(&self, vp: &Comodule, f: &LinMap) -> Result<LinMap> {
        let (z, w) = (self.z.dim(), self.adjunction.dim);
        let c = self.structure.source().dim();
        if f.shape() != (z, vp.dim() * w) {
            return Err(Error::shape("adjunct", format!("{}x{}", f.rows(), f.cols()), format!("{}x{}", z, vp.dim() * w)));
        }
        let underlying = f.kron(&id(w)) * id(vp.dim()).kron(&self.adjunction.unit);
        let into_cofree = underlying.kron(&id(c)) * vp.coaction();
        solve_factor(&self.inclusion, &into_cofree)?
            .ok_or_else(|| Error::Unsolvable("adjunct does not factor through the equalizer".into()))
    }

    /// `g: V' → E` back to `lift(V') → Z`.
    pub fn backward(&self, g: &LinMap) -> LinMap {
        let (z, w) = (self.z.dim(), self.adjunction.dim);
        let to_zv = tensor(&[&id(z * w), self.structure.source().counit()]) * &self.inclusion * g;
        id(z).kron(&self.adjunction.counit) * to_zv.kron(&id(w))
    }

    /// `k: Z → Z'` induces `E → E'` on the equalizers.
    pub fn map_in_z(&self, other: &LiftedRightAdjoint, k: &LinMap) -> Result<LinMap> {
        let (v, c) = (self.adjunction.dim, self.structure.source().dim());
        let h = k.kron(&id(v * c)) * &self.inclusion;
        solve_factor(&other.inclusion, &h)?
            .ok_or_else(|| Error::Unsolvable("induced map does not preserve the equalizer".into()))
    }
}

pub fn lifted_right_adjoint(adj: &AdjunctionData, s: &OplaxStructure, z: &Comodule) -> Result<LiftedRightAdjoint> {
    let lax = kelly_oplax_to_lax(adj, s)?;
    if z.over() != s.target() {
        return Err(Error::Mismatch("comodule is not over the target coalgebra".into()));
    }
    require_ok(z.validate())?;
    let (c, d, v, zd) = (s.source(), s.target(), adj.dim, z.dim());
    let src = cofree(c, zd * v);
    let tgt = cofree(c, zd * d.dim() * v);
    let map1 = z.coaction().kron(&id(v * c.dim()));
    let map2 = tensor(&[&id(zd), lax.bhat(), &id(c.dim())]) * id(zd * v).kron(c.comult());
    let f1 = ComoduleMorphism::new(src.clone(), tgt.clone(), map1)?;
    let f2 = ComoduleMorphism::new(src, tgt, map2)?;
    let (comodule, incl) = comodule_equalizer(&f1, &f2)?;
    Ok(LiftedRightAdjoint {
        adjunction: adj.clone(),
        structure: s.clone(),
        lax,
        z: z.clone(),
        comodule,
        inclusion: incl.map,
        pair: (f1, f2),
    })
}

fn random_combination(basis: &[LinMap], rows: usize, cols: usize, seed: usize) -> LinMap {
    // deterministic spread of small coefficients
    basis.iter().enumerate().fold(LinMap::zeros(rows, cols), |acc, (i, b)| {
        let k = ((i * 7 + seed * 3) % 5) as i64 - 2;
        acc + b.scale(&crate::Scalar::from_int(k))
    })
}

/// Explicit bijection `Hom(lift V', Z) ≅ Hom(V', E)` on each sample:
/// dimensions, both round trips on bases, and naturality in `V'` against
/// an endomorphism of each sample.
pub fn certify_lifted_adjunction(r: &LiftedRightAdjoint, samples: &[Comodule]) -> Result<Report> {
    let mut rep = Report::new();
    for (i, vp) in samples.iter().enumerate() {
        let lifted = lift_comodule(&r.structure, vp)?;
        let left = comodcat::comodule_hom_space(&lifted, &r.z)?;
        let right = comodcat::comodule_hom_space(vp, &r.comodule)?;
        let tag = |s: &str| format!("sample {i}: {s}");
        if left.len() != right.len() {
            rep.fail(tag("hom-dimensions"), LinMap::from_ints(&[&[left.len() as i64 - right.len() as i64]]));
            continue;
        }
        for f in &left {
            let g = r.forward(vp, f)?;
            if !is_comodule_morphism(vp, &r.comodule, &g) {
                rep.fail(tag("forward-not-morphism"), g.clone());
            }
            rep.expect_eq(tag("backward-forward"), &r.backward(&g), f);
        }
        for g in &right {
            let f = r.backward(g);
            if !is_comodule_morphism(&lifted, &r.z, &f) {
                rep.fail(tag("backward-not-morphism"), f.clone());
            }
            rep.expect_eq(tag("forward-backward"), &r.forward(vp, &f)?, g);
        }
        let ends = comodcat::comodule_hom_space(vp, vp)?;
        let k = random_combination(&ends, vp.dim(), vp.dim(), i);
        let f = random_combination(&left, r.z.dim(), lifted.dim(), i + 1);
        let lhs = r.forward(vp, &(&f * k.kron(&id(r.adjunction.dim))))?;
        let rhs = r.forward(vp, &f)? * &k;
        rep.expect_eq(tag("natural-in-source"), &lhs, &rhs);
    }
    Ok(rep)
}

/// Oplax structure on `Y ↦ Y⊗V` over a bialgebra, `c⊗v ↦ v_0⊗v_1·c`; its
/// lift of `Y` is `V⊗Y` transported along the symmetry.
pub fn left_tensor_structure(h: &FinBialgebra, v: &Comodule) -> Result<OplaxStructure> {
    if v.over() != h.coalgebra() {
        return Err(Error::Mismatch("comodule over a different coalgebra".into()));
    }
    let (n, k) = (h.dim(), v.dim());
    let b = id(k).kron(h.algebra().mult()) * v.coaction().kron(&id(n)) * LinMap::symmetry(n, k);
    OplaxStructure::new(h.coalgebra().clone(), h.coalgebra().clone(), k, b)
}

/// Oplax structure on `Y ↦ Y⊗W`, `c⊗w ↦ w_0⊗c·w_1`; its lift of `Y` is the
/// comodule tensor `Y⊗W` on the nose.
pub fn right_tensor_structure(h: &FinBialgebra, w: &Comodule) -> Result<OplaxStructure> {
    if w.over() != h.coalgebra() {
        return Err(Error::Mismatch("comodule over a different coalgebra".into()));
    }
    let (n, k) = (h.dim(), w.dim());
    let b = id(k).kron(h.algebra().mult()) * LinMap::symmetry(n, k).kron(&id(n)) * id(n).kron(w.coaction());
    OplaxStructure::new(h.coalgebra().clone(), h.coalgebra().clone(), k, b)
}

/// `⟨Z, V⟩`: right adjoint of `V⊗-`, inside `Z⊗V*⊗H`.
pub fn mapping_comodule_data(h: &FinBialgebra, z: &Comodule, v: &Comodule) -> Result<LiftedRightAdjoint> {
    let s = left_tensor_structure(h, v)?;
    lifted_right_adjoint(&AdjunctionData::standard(v.dim()), &s, z)
}

pub fn mapping_comodule(h: &FinBialgebra, z: &Comodule, v: &Comodule) -> Result<Comodule> {
    Ok(mapping_comodule_data(h, z, v)?.comodule)
}

/// `{W, Z}`: right adjoint of `-⊗W`, inside `Z⊗W*⊗H`.
pub fn enriched_hom_data(h: &FinBialgebra, w: &Comodule, z: &Comodule) -> Result<LiftedRightAdjoint> {
    let s = right_tensor_structure(h, w)?;
    lifted_right_adjoint(&AdjunctionData::standard(w.dim()), &s, z)
}

pub fn enriched_hom(h: &FinBialgebra, w: &Comodule, z: &Comodule) -> Result<Comodule> {
    Ok(enriched_hom_data(h, w, z)?.comodule)
}

/// Map `{W,Z} → {W',Z}` (or `⟨Z,V⟩ → ⟨Z,V'⟩`) induced contravariantly by
/// `k: W' → W` (resp. `V' → V`): `id_Z⊗k*⊗id_H` restricted.
pub fn map_in_carrier(from: &LiftedRightAdjoint, to: &LiftedRightAdjoint, k: &LinMap) -> Result<LinMap> {
    let (z, c) = (from.z.dim(), from.structure.source().dim());
    let (wf, wt) = (from.adjunction.dim, to.adjunction.dim);
    if k.shape() != (wf, wt) {
        return Err(Error::shape("carrier map", format!("{}x{}", k.rows(), k.cols()), format!("{wf}x{wt}")));
    }
    // standard pairings on both sides, so k* is the transpose
    let h = tensor(&[&id(z), &k.transpose(), &id(c)]) * &from.inclusion;
    solve_factor(&to.inclusion, &h)?
        .ok_or_else(|| Error::Unsolvable("induced map does not preserve the equalizer".into()))
}

/// Degree-`g` part `{x : ρ(x) = x⊗e_g}` of a comodule over a group bialgebra.
pub fn degree_part(v: &Comodule, g: usize) -> LinMap {
    let n = v.over().dim();
    (v.coaction() - &id(v.dim()).kron(&LinMap::basis_vector(n, g))).kernel()
}

/// Dimensions of the degree parts, when they span (i.e. `v` is graded).
pub fn graded_dims(v: &Comodule) -> Option<Vec<usize>> {
    let dims: Vec<usize> = (0..v.over().dim()).map(|g| degree_part(v, g).cols()).collect();
    (dims.iter().sum::<usize>() == v.dim()).then_some(dims)
}

/// Graded-hom count `Σ_h dim V_h · dim Z_{h·g}` for a group with table `mul`.
pub fn graded_hom_oracle(mul: &[Vec<usize>], z: &[usize], v: &[usize]) -> Vec<usize> {
    (0..mul.len())
        .map(|g| (0..mul.len()).map(|h| v[h] * z[mul[h][g]]).sum())
        .collect()
}

/// Same count for `{W, Z}`: `Σ_h dim W_h · dim Z_{g·h}`.
pub fn enriched_hom_oracle(mul: &[Vec<usize>], w: &[usize], z: &[usize]) -> Vec<usize> {
    (0..mul.len())
        .map(|g| (0..mul.len()).map(|h| w[h] * z[mul[g][h]]).sum())
        .collect()
}

/// Two tensor-hom bijections for one triple `(v, w, z)`, with round trips and
/// one naturality square per variable. Endomorphisms for naturality are
/// taken from the given coefficients seed.
pub fn verify_tce(h: &FinBialgebra, triples: &[(Comodule, Comodule, Comodule)], seed: usize) -> Result<Report> {
    let mut rep = Report::new();
    for (t, (v, w, z)) in triples.iter().enumerate() {
        let tag = |s: &str| format!("triple {t}: {s}");
        let vw = comodule_tensor(h, v, w)?;
        let homs = comodcat::comodule_hom_space(&vw, z)?;
        let mapping = mapping_comodule_data(h, z, v)?;
        let enriched = enriched_hom_data(h, w, z)?;
        let into_mapping = comodcat::comodule_hom_space(w, &mapping.comodule)?;
        let into_enriched = comodcat::comodule_hom_space(v, &enriched.comodule)?;
        if homs.len() != into_mapping.len() || homs.len() != into_enriched.len() {
            rep.fail(
                tag("dims"),
                LinMap::from_ints(&[&[homs.len() as i64, into_mapping.len() as i64, into_enriched.len() as i64]]),
            );
            continue;
        }
        let (dv, dw) = (v.dim(), w.dim());
        let sig_wv = LinMap::symmetry(dw, dv);
        let sig_vw = LinMap::symmetry(dv, dw);
        // Hom(v⊗w, z) ≅ Hom(w, ⟨z,v⟩) through lift(w) = w⊗v ≅ v⊗w
        let phi1 = |f: &LinMap| mapping.forward(w, &(f * &sig_wv));
        let psi1 = |g: &LinMap| mapping.backward(g) * &sig_vw;
        // Hom(v⊗w, z) ≅ Hom(v, {w,z}) directly
        let phi2 = |f: &LinMap| enriched.forward(v, f);
        let psi2 = |g: &LinMap| enriched.backward(g);
        for f in &homs {
            let g1 = phi1(f)?;
            if !is_comodule_morphism(w, &mapping.comodule, &g1) {
                rep.fail(tag("mapping/forward-not-morphism"), g1.clone());
            }
            rep.expect_eq(tag("mapping/roundtrip-hom"), &psi1(&g1), f);
            let g2 = phi2(f)?;
            if !is_comodule_morphism(v, &enriched.comodule, &g2) {
                rep.fail(tag("enriched/forward-not-morphism"), g2.clone());
            }
            rep.expect_eq(tag("enriched/roundtrip-hom"), &psi2(&g2), f);
        }
        for g in &into_mapping {
            rep.expect_eq(tag("mapping/roundtrip-adjunct"), &phi1(&psi1(g))?, g);
        }
        for g in &into_enriched {
            rep.expect_eq(tag("enriched/roundtrip-adjunct"), &phi2(&psi2(g))?, g);
        }
        if homs.is_empty() {
            continue;
        }
        let f = random_combination(&homs, z.dim(), dv * dw, seed + t);
        let endo = |m: &Comodule, s: usize| -> Result<LinMap> {
            let basis = comodcat::comodule_hom_space(m, m)?;
            Ok(random_combination(&basis, m.dim(), m.dim(), s))
        };
        let (kv, kw, kz) = (endo(v, seed + t + 1)?, endo(w, seed + t + 2)?, endo(z, seed + t + 3)?);

        // naturality of Φ1
        rep.expect_eq(
            tag("mapping/natural-w"),
            &phi1(&(&f * id(dv).kron(&kw)))?,
            &(phi1(&f)? * &kw),
        );
        rep.expect_eq(
            tag("mapping/natural-z"),
            &phi1(&(&kz * &f))?,
            &(mapping.map_in_z(&mapping, &kz)? * phi1(&f)?),
        );
        rep.expect_eq(
            tag("mapping/natural-v"),
            &phi1(&(&f * kv.kron(&id(dw))))?,
            &(map_in_carrier(&mapping, &mapping, &kv)? * phi1(&f)?),
        );
        // naturality of Φ2
        rep.expect_eq(
            tag("enriched/natural-v"),
            &phi2(&(&f * kv.kron(&id(dw))))?,
            &(phi2(&f)? * &kv),
        );
        rep.expect_eq(
            tag("enriched/natural-z"),
            &phi2(&(&kz * &f))?,
            &(enriched.map_in_z(&enriched, &kz)? * phi2(&f)?),
        );
        rep.expect_eq(
            tag("enriched/natural-w"),
            &phi2(&(&f * id(dv).kron(&kw)))?,
            &(map_in_carrier(&enriched, &enriched, &kw)? * phi2(&f)?),
        );
    }
    Ok(rep)
}

/// `LQR = -⊗K` with `K = V⊗C⊗W`, together with the factorization
/// `(C, Q) → (D, LQR) → (D, O)` of an oplax structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LqrFactorization {
    pub comonad: FinCoalgebra,
    pub first: OplaxStructure,
    pub second: OplaxStructure,
}

pub fn factor_comonad(adj: &AdjunctionData, s: &OplaxStructure) -> Result<LqrFactorization> {
    check_carrier(adj, s.carrier())?;
    require_ok(s.validate())?;
    let c = s.source();
    let (nc, w) = (c.dim(), adj.dim);
    let k = w * nc * w;
    let comult = tensor(&[&id(w * nc), &adj.unit, &id(nc * w)]) * tensor(&[&id(w), c.comult(), &id(w)]);
    let counit = &adj.counit * tensor(&[&id(w), c.counit(), &id(w)]);
    let comonad = FinCoalgebra::new(k, comult, counit)?;
    require_ok(comonad.validate())?;
    let first = OplaxStructure::new(c.clone(), comonad.clone(), w, adj.unit.kron(&id(nc * w)))?;
    let second_b = adj.counit.kron(&id(s.target().dim())) * id(w).kron(s.b());
    let second = OplaxStructure::new(comonad.clone(), s.target().clone(), 1, second_b)?;
    let mut r = Report::new();
    r.absorb("first", first.validate());
    r.absorb("second", second.validate());
    r.expect_eq("factorization", first.then(&second)?.b(), s.b());
    require_ok(r)?;
    Ok(LqrFactorization { comonad, first, second })
}

/// Strength `t: H⊗P → P` of `F = -⊗P` against `G = -⊗H`: the module axioms.
pub fn check_strength(h: &FinAlgebra, p: usize, t: &LinMap) -> Result<Report> {
    let n = h.dim();
    if t.shape() != (p, n * p) {
        return Err(Error::shape("strength", format!("{}x{}", t.rows(), t.cols()), format!("{}x{}", p, n * p)));
    }
    let mut r = Report::new();
    r.expect_eq("strength-associativity", &(t * id(n).kron(t)), &(t * h.mult().kron(&id(p))));
    r.expect_eq("strength-unit", &(t * h.unit().kron(&id(p))), &id(p));
    Ok(r)
}

/// Result of [`check_strong_adjunction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongAdjunctionCheck {
    pub report: Report,
    /// `Ψ∘Φ = id` and `Φ∘Ψ = id` on the sampled hom spaces.
    pub mutually_inverse: bool,
}

impl StrongAdjunctionCheck {
    pub fn agrees(&self) -> bool {
        self.report.is_ok() == self.mutually_inverse
    }
}

/// Strengths `τ_L: W → W`, `τ_R: V → V` for the identity functor, the
/// strong-unit and strong-counit squares, and the composites
/// `Φ(g) = (g⊗τ_R)(id⊗coev)`, `Ψ(h) = (id⊗ev)(h⊗τ_L)` on hom spaces of the
/// given sample sizes `(dim X, dim Y)`.
pub fn check_strong_adjunction(
    adj: &AdjunctionData,
    tau_l: &LinMap,
    tau_r: &LinMap,
    samples: &[(usize, usize)],
) -> Result<StrongAdjunctionCheck> {
    let w = adj.dim;
    if tau_l.shape() != (w, w) || tau_r.shape() != (w, w) {
        return Err(Error::shape("strong adjunction", "strength components", format!("{w}x{w}")));
    }
    let mut report = Report::new();
    report.expect_eq("strong-unit", &(tau_l.kron(tau_r) * &adj.unit), &adj.unit);
    report.expect_eq("strong-counit", &(&adj.counit * tau_r.kron(tau_l)), &adj.counit);
    let mut mutually_inverse = true;
    for &(x, y) in samples {
        let phi = |g: &LinMap| g.kron(tau_r) * id(x).kron(&adj.unit);
        let psi = |h: &LinMap| id(y).kron(&adj.counit) * h.kron(tau_l);
        for i in 0..y {
            for j in 0..x * w {
                let g = LinMap::unit(y, x * w, i, j);
                mutually_inverse &= psi(&phi(&g)) == g;
            }
        }
        for i in 0..y * w {
            for j in 0..x {
                let h = LinMap::unit(y * w, x, i, j);
                mutually_inverse &= phi(&psi(&h)) == h;
            }
        }
    }
    Ok(StrongAdjunctionCheck { report, mutually_inverse })
}
