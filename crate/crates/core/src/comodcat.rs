//! Right comodules over a coalgebra (coalgebras for `Q = -⊗C`) and modules
//! over an algebra (algebras for `M = -⊗A`), with hom spaces, cofree/free
//! objects and the finite (co)limits the forgetful functors create.

use crate::error::{Error, Result};
use crate::exactlin::{self, id, LinMap};
use crate::report::Report;
use crate::structures::{FinAlgebra, FinCoalgebra};

/// A space `V` with coaction `ρ: V → V⊗C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Comodule {
    over: FinCoalgebra,
    dim: usize,
    coaction: LinMap,
}

/// A space `V` with action `V⊗A → V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOverAlgebra {
    over: FinAlgebra,
    dim: usize,
    action: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleMorphism {
    pub source: Comodule,
    pub target: Comodule,
    pub map: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub source: ModuleOverAlgebra,
    pub target: ModuleOverAlgebra,
    pub map: LinMap,
}

impl Comodule {
    pub fn new(over: FinCoalgebra, dim: usize, coaction: LinMap) -> Result<Self> {
        let want = (dim * over.dim(), dim);
        if coaction.shape() != want {
            return Err(Error::shape(
                "comodule coaction",
                format!("{}x{}", coaction.rows(), coaction.cols()),
                format!("expected {}x{}", want.0, want.1),
            ));
        }
        Ok(Comodule { over, dim, coaction })
    }

    pub fn over(&self) -> &FinCoalgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    /// `v ↦ v⊗g` for a group-like `g` (given as a `dim(C) × 1` column).
    pub fn trivial(over: &FinCoalgebra, grouplike: &LinMap, dim: usize) -> Result<Self> {
        Comodule::new(over.clone(), dim, id(dim).kron(grouplike))
    }

    /// Isomorphic comodule obtained by transporting along invertible `p: V → V'`.
    pub fn transport(&self, p: &LinMap) -> Result<Self> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Mismatch("transport needs an invertible map".into()))?;
        let c = self.over.dim();
        Comodule::new(self.over.clone(), self.dim, p.kron(&id(c)) * &self.coaction * pinv)
    }

    pub fn validate(&self) -> Report {
        validate_comodule(self)
    }
}

pub fn validate_comodule(v: &Comodule) -> Report {
    let (n, c) = (v.dim, v.over.dim());
    let rho = &v.coaction;
    let mut r = Report::new();
    r.expect_eq(
        "coassociativity",
        &(rho.kron(&id(c)) * rho),
        &(id(n).kron(v.over.comult()) * rho),
    );
    r.expect_eq("counit", &(id(n).kron(v.over.counit()) * rho), &id(n));
    r
}

/// `L^Q(X) = (X⊗C, id_X⊗Δ)`.
pub fn cofree(c: &FinCoalgebra, x: usize) -> Comodule {
    Comodule::new(c.clone(), x * c.dim(), c.comonad_comult(x)).expect("cofree shape")
}

/// `f: U(V) → X` corresponds to `(f⊗id_C)∘ρ_V : V → L^Q(X)`.
pub fn cofree_adjunct(v: &Comodule, f: &LinMap) -> LinMap {
    f.kron(&id(v.over.dim())) * &v.coaction
}

/// Inverse of [`cofree_adjunct`]: `g ↦ (id_X⊗ε)∘g`.
pub fn cofree_unadjunct(c: &FinCoalgebra, x: usize, g: &LinMap) -> LinMap {
    c.comonad_counit(x) * g
}

fn same_coalgebra(v: &Comodule, w: &Comodule) -> Result<()> {
    if v.over != w.over {
        return Err(Error::Mismatch("comodules over different coalgebras".into()));
    }
    Ok(())
}

impl ComoduleMorphism {
    pub fn new(source: Comodule, target: Comodule, map: LinMap) -> Result<Self> {
        same_coalgebra(&source, &target)?;
        if map.shape() != (target.dim, source.dim) {
            return Err(Error::shape(
                "comodule morphism",
                format!("{}x{}", map.rows(), map.cols()),
                format!("expected {}x{}", target.dim, source.dim),
            ));
        }
        Ok(ComoduleMorphism { source, target, map })
    }

    /// Residual of `ρ_W∘f = (f⊗id_C)∘ρ_V`.
    pub fn check(&self) -> Report {
        let mut r = Report::new();
        r.expect_eq(
            "intertwining",
            &(&self.target.coaction * &self.map),
            &(self.map.kron(&id(self.source.over.dim())) * &self.source.coaction),
        );
        r
    }
}

/// Whether `f` intertwines the coactions of `v` and `w`.
pub fn is_comodule_morphism(v: &Comodule, w: &Comodule, f: &LinMap) -> bool {
    ComoduleMorphism::new(v.clone(), w.clone(), f.clone())
        .map(|m| m.check().is_ok())
        .unwrap_or(false)
}

/// Basis of `Hom_Cog(V, W)`, each map `dim W × dim V`, in canonical order.
pub fn comodule_hom_space(v: &Comodule, w: &Comodule) -> Result<Vec<LinMap>> {
    same_coalgebra(v, w)?;
    let (nv, nw, c) = (v.dim, w.dim, v.over.dim());
    let (rv, rw) = (&v.coaction, &w.coaction);
    let mut coeff = LinMap::zeros(nw * c * nv, nw * nv);
    for wp in 0..nw {
        for k in 0..c {
            for v0 in 0..nv {
                let eq = (wp * c + k) * nv + v0;
                for r in 0..nw {
                    let a = rw.get(wp * c + k, r);
                    if !a.is_zero() {
                        let cur = coeff.get(eq, r * nv + v0) + a;
                        coeff.set(eq, r * nv + v0, cur);
                    }
                }
                for col in 0..nv {
                    let b = rv.get(col * c + k, v0);
                    if !b.is_zero() {
                        let cur = coeff.get(eq, wp * nv + col) - b;
                        coeff.set(eq, wp * nv + col, cur);
                    }
                }
            }
        }
    }
    Ok(exactlin::basis_from_kernel(&coeff.kernel(), nw, nv))
}

fn parallel_comodule(f: &ComoduleMorphism, g: &ComoduleMorphism) -> Result<()> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Mismatch("not a parallel pair of comodule morphisms".into()));
    }
    Ok(())
}

/// Equalizer of comodule morphisms: the underlying equalizer with the
/// coaction induced through `inclusion⊗id_C` (certified by an exact solve).
pub fn comodule_equalizer(
    f: &ComoduleMorphism,
    g: &ComoduleMorphism,
) -> Result<(Comodule, ComoduleMorphism)> {
    parallel_comodule(f, g)?;
    let incl = exactlin::equalizer(&f.map, &g.map)?;
    let e = restrict_comodule(&f.source, &incl)?;
    let m = ComoduleMorphism::new(e.clone(), f.source.clone(), incl)?;
    Ok((e, m))
}

/// The subcomodule spanned by the injective map `incl: E → V`, when `V`'s
/// coaction restricts to it.
pub fn restrict_comodule(v: &Comodule, incl: &LinMap) -> Result<Comodule> {
    let c = v.over.dim();
    let through = incl.kron(&id(c));
    let target = &v.coaction * incl;
    let rho = exactlin::solve_factor(&through, &target)?
        .ok_or_else(|| Error::Unsolvable("coaction does not restrict to the subspace".into()))?;
    Comodule::new(v.over.clone(), incl.cols(), rho)
}

/// Coequalizer of comodule morphisms, with the coaction induced on the quotient.
pub fn comodule_coequalizer(
    f: &ComoduleMorphism,
    g: &ComoduleMorphism,
) -> Result<(Comodule, ComoduleMorphism)> {
    parallel_comodule(f, g)?;
    let proj = exactlin::coequalizer(&f.map, &g.map)?;
    let c = f.target.over.dim();
    let h = proj.kron(&id(c)) * &f.target.coaction;
    let rho = exactlin::solve_right_factor(&proj, &h)?
        .ok_or_else(|| Error::Unsolvable("coaction does not descend to the quotient".into()))?;
    let q = Comodule::new(f.target.over.clone(), proj.rows(), rho)?;
    let m = ComoduleMorphism::new(f.target.clone(), q.clone(), proj)?;
    Ok((q, m))
}

/// Finite product: direct sum with block-diagonal coaction. Under the flat
/// index convention `(⊕V_i)⊗C = ⊕(V_i⊗C)` blockwise, so no reindexing is needed.
pub fn comodule_product(over: &FinCoalgebra, vs: &[Comodule]) -> Result<Comodule> {
    if vs.iter().any(|v| &v.over != over) {
        return Err(Error::Mismatch("product of comodules over different coalgebras".into()));
    }
    let blocks: Vec<&LinMap> = vs.iter().map(|v| &v.coaction).collect();
    let dim = vs.iter().map(|v| v.dim).sum();
    Comodule::new(over.clone(), dim, LinMap::direct_sum(&blocks))
}

/// Projections `ΠV_i → V_j` for a direct sum with the given block dimensions.
pub fn product_projections(dims: &[usize]) -> Vec<LinMap> {
    let total: usize = dims.iter().sum();
    let mut off = 0;
    dims.iter()
        .map(|&d| {
            let p = LinMap::from_fn(d, total, |i, j| {
                if j == off + i {
                    crate::Scalar::one()
                } else {
                    crate::Scalar::zero()
                }
            });
            off += d;
            p
        })
        .collect()
}

/// The map into a product induced by a cone `h_i: T → V_i`.
pub fn product_pairing(legs: &[LinMap], source_dim: usize) -> Result<LinMap> {
    legs.iter()
        .try_fold(LinMap::zeros(0, source_dim), |acc, h| acc.vstack(h))
}

impl ModuleOverAlgebra {
    pub fn new(over: FinAlgebra, dim: usize, action: LinMap) -> Result<Self> {
        let want = (dim, dim * over.dim());
        if action.shape() != want {
            return Err(Error::shape(
                "module action",
                format!("{}x{}", action.rows(), action.cols()),
                format!("expected {}x{}", want.0, want.1),
            ));
        }
        Ok(ModuleOverAlgebra { over, dim, action })
    }

    pub fn over(&self) -> &FinAlgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn validate(&self) -> Report {
        let (n, a) = (self.dim, self.over.dim());
        let act = &self.action;
        let mut r = Report::new();
        r.expect_eq(
            "associativity",
            &(act * act.kron(&id(a))),
            &(act * id(n).kron(self.over.mult())),
        );
        r.expect_eq("unit", &(act * id(n).kron(self.over.unit())), &id(n));
        r
    }

    pub fn transport(&self, p: &LinMap) -> Result<Self> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Mismatch("transport needs an invertible map".into()))?;
        let a = self.over.dim();
        ModuleOverAlgebra::new(self.over.clone(), self.dim, p * &self.action * pinv.kron(&id(a)))
    }
}

/// Free module `(X⊗A, id_X⊗m)`.
pub fn free_module(a: &FinAlgebra, x: usize) -> ModuleOverAlgebra {
    ModuleOverAlgebra::new(a.clone(), x * a.dim(), id(x).kron(a.mult())).expect("free module shape")
}

impl ModuleMorphism {
    pub fn new(source: ModuleOverAlgebra, target: ModuleOverAlgebra, map: LinMap) -> Result<Self> {
        if source.over != target.over {
            return Err(Error::Mismatch("modules over different algebras".into()));
        }
        if map.shape() != (target.dim, source.dim) {
            return Err(Error::shape(
                "module morphism",
                format!("{}x{}", map.rows(), map.cols()),
                format!("expected {}x{}", target.dim, source.dim),
            ));
        }
        Ok(ModuleMorphism { source, target, map })
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new();
        r.expect_eq(
            "intertwining",
            &(&self.map * &self.source.action),
            &(&self.target.action * self.map.kron(&id(self.source.over.dim()))),
        );
        r
    }
}

/// Basis of `Hom_M(M, N)`.
pub fn module_hom_space(m: &ModuleOverAlgebra, n: &ModuleOverAlgebra) -> Result<Vec<LinMap>> {
    if m.over != n.over {
        return Err(Error::Mismatch("modules over different algebras".into()));
    }
    let (nm, nn, a) = (m.dim, n.dim, m.over.dim());
    let mut coeff = LinMap::zeros(nn * nm * a, nn * nm);
    for np in 0..nn {
        for m0 in 0..nm {
            for k in 0..a {
                let eq = np * nm * a + m0 * a + k;
                for col in 0..nm {
                    let x = m.action.get(col, m0 * a + k);
                    if !x.is_zero() {
                        let cur = coeff.get(eq, np * nm + col) + x;
                        coeff.set(eq, np * nm + col, cur);
                    }
                }
                for r in 0..nn {
                    let y = n.action.get(np, r * a + k);
                    if !y.is_zero() {
                        let cur = coeff.get(eq, r * nm + m0) - y;
                        coeff.set(eq, r * nm + m0, cur);
                    }
                }
            }
        }
    }
    Ok(exactlin::basis_from_kernel(&coeff.kernel(), nn, nm))
}

/// Coequalizer of module morphisms with the action induced on the quotient.
pub fn module_coequalizer(
    f: &ModuleMorphism,
    g: &ModuleMorphism,
) -> Result<(ModuleOverAlgebra, ModuleMorphism)> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Mismatch("not a parallel pair of module morphisms".into()));
    }
    let proj = exactlin::coequalizer(&f.map, &g.map)?;
    let a = f.target.over.dim();
    let act = exactlin::solve_right_factor(&proj.kron(&id(a)), &(&proj * &f.target.action))?
        .ok_or_else(|| Error::Unsolvable("action does not descend to the quotient".into()))?;
    let q = ModuleOverAlgebra::new(f.target.over.clone(), proj.rows(), act)?;
    let m = ModuleMorphism::new(f.target.clone(), q.clone(), proj)?;
    Ok((q, m))
}

/// Universal property of [`comodule_equalizer`] against one cone `k: T → V`
/// with `f∘k = g∘k`: inclusion is a morphism, the underlying map is the
/// `Vect` equalizer verbatim, and `k` factors through a unique morphism.
pub fn check_equalizer_universal(
    f: &ComoduleMorphism,
    g: &ComoduleMorphism,
    t: &Comodule,
    k: &LinMap,
) -> Result<Report> {
    let (e, incl) = comodule_equalizer(f, g)?;
    let mut r = Report::new();
    r.absorb("inclusion", incl.check());
    r.expect_eq("underlying", &incl.map, &exactlin::equalizer(&f.map, &g.map)?);
    r.expect_eq("cone", &(&f.map * k), &(&g.map * k));
    match exactlin::solve_factor(&incl.map, k)? {
        Some(u) => {
            if !is_comodule_morphism(t, &e, &u) {
                r.fail("factor-not-morphism", u.clone());
            }
            if !incl.map.is_injective() {
                r.fail("factor-not-unique", incl.map.clone());
            }
        }
        None => r.fail("no-factorization", k.clone()),
    }
    Ok(r)
}

/// Universal property of [`comodule_product`] against legs `h_i: T → V_i`.
pub fn check_product_universal(over: &FinCoalgebra, vs: &[Comodule], t: &Comodule, legs: &[LinMap]) -> Result<Report> {
    let p = comodule_product(over, vs)?;
    let dims: Vec<usize> = vs.iter().map(|v| v.dim).collect();
    let proj = product_projections(&dims);
    let pair = product_pairing(legs, t.dim)?;
    let mut r = Report::new();
    for (i, (pi, v)) in proj.iter().zip(vs).enumerate() {
        if !is_comodule_morphism(&p, v, pi) {
            r.fail(format!("projection-{i}"), pi.clone());
        }
        r.expect_eq(format!("leg-{i}"), &(pi * &pair), &legs[i]);
    }
    if !is_comodule_morphism(t, &p, &pair) {
        r.fail("pairing-not-morphism", pair.clone());
    }
    // uniqueness: the projections are jointly injective
    let joint = product_pairing(&proj, p.dim)?;
    if !joint.is_injective() {
        r.fail("pairing-not-unique", joint);
    }
    Ok(r)
}

/// Universal property of [`module_coequalizer`] against a cocone `k: N → T`
/// with `k∘f = k∘g`.
pub fn check_coequalizer_universal(
    f: &ModuleMorphism,
    g: &ModuleMorphism,
    t: &ModuleOverAlgebra,
    k: &LinMap,
) -> Result<Report> {
    let (q, proj) = module_coequalizer(f, g)?;
    let mut r = Report::new();
    r.absorb("projection", proj.check());
    r.expect_eq("underlying", &proj.map, &exactlin::coequalizer(&f.map, &g.map)?);
    r.expect_eq("cocone", &(k * &f.map), &(k * &g.map));
    match exactlin::solve_right_factor(&proj.map, k)? {
        Some(u) => {
            let m = ModuleMorphism::new(q, t.clone(), u.clone())?;
            r.absorb("factor", m.check());
            if !proj.map.is_surjective() {
                r.fail("factor-not-unique", proj.map.clone());
            }
        }
        None => r.fail("no-factorization", k.clone()),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{groups, FinBialgebra};

    fn kz2() -> FinBialgebra {
        FinBialgebra::group(&groups::cyclic(2))
    }

    fn line(deg: usize) -> Comodule {
        let h = kz2();
        Comodule::trivial(h.coalgebra(), &LinMap::basis_vector(2, deg), 1).unwrap()
    }

    #[test]
    fn validate_examples() {
        let h = kz2();
        let triv = Comodule::trivial(h.coalgebra(), h.algebra().unit(), 3).unwrap();
        assert!(triv.validate().is_ok());
        assert!(cofree(h.coalgebra(), 1).validate().is_ok());
        let zero = Comodule::new(h.coalgebra().clone(), 2, LinMap::zeros(4, 2)).unwrap();
        let r = zero.validate();
        assert!(r.has("counit") && !r.has("coassociativity"));
    }

    #[test]
    fn cofree_examples() {
        let c = FinCoalgebra::divided_power(3);
        let k = cofree(&c, 1);
        assert_eq!(k.coaction(), c.comult());
        let g = cofree(&FinCoalgebra::ground(), 3);
        assert_eq!(g.coaction(), &id(3));
        let h = kz2();
        for x in 1..4 {
            let homs = comodule_hom_space(&line(1), &cofree(h.coalgebra(), x)).unwrap();
            assert_eq!(homs.len(), x);
        }
    }

    #[test]
    fn cofree_adjunction_round_trip() {
        let h = kz2();
        let v = cofree(h.coalgebra(), 1);
        let f = LinMap::from_ints(&[&[1, 2], &[3, 4], &[0, 1]]);
        let g = cofree_adjunct(&v, &f);
        assert!(is_comodule_morphism(&v, &cofree(h.coalgebra(), 3), &g));
        assert_eq!(cofree_unadjunct(h.coalgebra(), 3, &g), f);
    }

    #[test]
    fn hom_space_examples() {
        let v = cofree(kz2().coalgebra(), 2);
        let homs = comodule_hom_space(&v, &v).unwrap();
        let span = LinMap::from_fn(16, homs.len(), |i, j| homs[j].get(i / 4, i % 4).clone());
        assert!(exactlin::solve_factor(&span, &id(4).vectorize()).unwrap().is_some());
        assert!(comodule_hom_space(&line(0), &line(1)).unwrap().is_empty());
        let h = kz2();
        let triv = Comodule::trivial(h.coalgebra(), h.algebra().unit(), 1).unwrap();
        assert_eq!(comodule_hom_space(&triv, &cofree(h.coalgebra(), 3)).unwrap().len(), 3);
        for f in comodule_hom_space(&v, &v).unwrap() {
            assert!(is_comodule_morphism(&v, &v, &f));
        }
    }

    #[test]
    fn equalizer_examples() {
        let h = kz2();
        let reg = cofree(h.coalgebra(), 1);
        let swap = LinMap::from_ints(&[&[0, 1], &[1, 0]]);
        // the swap is not a comodule map of the regular comodule over 𝕂[Z/2]
        assert!(!is_comodule_morphism(&reg, &reg, &swap));
        let idm = ComoduleMorphism::new(reg.clone(), reg.clone(), id(2)).unwrap();
        let (e, incl) = comodule_equalizer(&idm, &idm).unwrap();
        assert_eq!(e, reg);
        assert_eq!(incl.map, id(2));
        let proj = ComoduleMorphism::new(reg.clone(), reg.clone(), LinMap::from_ints(&[&[1, 0], &[0, 0]])).unwrap();
        assert!(proj.check().is_ok());
        let (e, incl) = comodule_equalizer(&idm, &proj).unwrap();
        assert_eq!(e.dim(), 1);
        assert!(incl.check().is_ok());
        assert_eq!(incl.map, exactlin::equalizer(&idm.map, &proj.map).unwrap());
    }

    #[test]
    fn equalizer_of_identity_and_swap_on_cofree() {
        // swap⊗id_H on L(𝕂²) is a comodule map; its fixed part is L(span{(1,1)})
        let h = kz2();
        let v = cofree(h.coalgebra(), 2);
        let swap = LinMap::from_ints(&[&[0, 1], &[1, 0]]).kron(&id(2));
        let idm = ComoduleMorphism::new(v.clone(), v.clone(), id(4)).unwrap();
        let sw = ComoduleMorphism::new(v.clone(), v.clone(), swap).unwrap();
        assert!(sw.check().is_ok());
        let (e, incl) = comodule_equalizer(&idm, &sw).unwrap();
        assert_eq!(e, cofree(h.coalgebra(), 1));
        assert_eq!(incl.map, LinMap::from_ints(&[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]));
    }

    #[test]
    fn product_examples() {
        let h = kz2();
        let c = h.coalgebra();
        assert_eq!(comodule_product(c, &[]).unwrap().dim(), 0);
        let v = cofree(c, 1);
        assert_eq!(comodule_product(c, std::slice::from_ref(&v)).unwrap(), v);
        let parts = [line(0), line(1), v.clone()];
        let p = comodule_product(c, &parts).unwrap();
        assert!(p.validate().is_ok());
        for (pr, part) in product_projections(&[1, 1, 2]).iter().zip(&parts) {
            assert!(is_comodule_morphism(&p, part, pr));
        }
        let w = cofree(c, 1);
        let lhs = comodule_hom_space(&w, &p).unwrap().len();
        let rhs: usize = parts.iter().map(|x| comodule_hom_space(&w, x).unwrap().len()).sum();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn module_coequalizer_presents_module() {
        let a = FinAlgebra::product(2);
        let n = a.dim();
        // V = the first projection character, as a 1-dim module
        let v = ModuleOverAlgebra::new(a.clone(), 1, LinMap::from_ints(&[&[1, 0]])).unwrap();
        assert!(v.validate().is_ok());
        let fva = free_module(&a, 1);
        let fvaa = free_module(&a, n);
        let act_id = ModuleMorphism::new(fvaa.clone(), fva.clone(), v.action().kron(&id(n))).unwrap();
        let mult = ModuleMorphism::new(fvaa.clone(), fva.clone(), id(1).kron(a.mult())).unwrap();
        assert!(act_id.check().is_ok() && mult.check().is_ok());
        let (q, proj) = module_coequalizer(&act_id, &mult).unwrap();
        assert!(proj.check().is_ok());
        assert_eq!(q.dim(), v.dim());
        let induced = exactlin::solve_right_factor(&proj.map, v.action()).unwrap().unwrap();
        assert!(induced.is_invertible());
        assert!(ModuleMorphism::new(q, v, induced).unwrap().check().is_ok());
    }

    #[test]
    fn module_coequalizer_of_equal_maps_is_target() {
        let a = FinAlgebra::matrix(2);
        let m = free_module(&a, 1);
        let f = ModuleMorphism::new(m.clone(), m.clone(), id(4)).unwrap();
        let (q, p) = module_coequalizer(&f, &f).unwrap();
        assert_eq!(q, m);
        assert_eq!(p.map, id(4));
    }

    #[test]
    fn module_hom_space_of_free_module() {
        let a = FinAlgebra::truncated_polynomial(3);
        let m = free_module(&a, 1);
        // Hom_A(A, A) ≅ A
        assert_eq!(module_hom_space(&m, &m).unwrap().len(), 3);
    }
}
