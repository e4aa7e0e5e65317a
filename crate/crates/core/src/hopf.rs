//! Bialgebras as Hopf comonads `-⊗H`, the induced monoidal structure on
//! comodules, convolution algebras and the strength validators.

use crate::comodcat::{self, cofree, Comodule};
use crate::error::{Error, Result};
use crate::exactlin::{id, tensor, LinMap, Scalar};
use crate::oplaxfun::{lift_comodule, OplaxStructure};
use crate::report::Report;
use crate::structures::{dual_algebra, FinAlgebra, FinBialgebra, FinCoalgebra};

/// `-⊗H` with lax structure `φ_{X,Y}: X⊗H⊗Y⊗H → X⊗Y⊗H` and unit `u_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfComonadData {
    bialgebra: FinBialgebra,
}

impl HopfComonadData {
    pub fn bialgebra(&self) -> &FinBialgebra {
        &self.bialgebra
    }

    pub fn lax_pair(&self, x: usize, y: usize) -> LinMap {
        lax_pair(self.bialgebra.algebra(), x, y)
    }

    pub fn lax_unit(&self) -> &LinMap {
        self.bialgebra.algebra().unit()
    }
}

/// `(id_{X⊗Y}⊗m)∘(id_X⊗σ_{H,Y}⊗id_H)`.
pub fn lax_pair(a: &FinAlgebra, x: usize, y: usize) -> LinMap {
    let h = a.dim();
    id(x * y).kron(a.mult()) * tensor(&[&id(x), &LinMap::symmetry(h, y), &id(h)])
}

/// `(lax_pair(a, x, y)⊗id_tail)∘f` without materializing the shuffle.
pub fn apply_lax_pair(a: &FinAlgebra, x: usize, y: usize, tail: usize, f: &LinMap) -> LinMap {
    let h = a.dim();
    let m = a.mult();
    assert_eq!(f.rows(), x * h * y * h * tail, "apply_lax_pair: row count");
    let cols = f.cols();
    let mut out = vec![Scalar::zero(); x * y * h * tail * cols];
    for i in 0..x {
        for s in 0..h {
            for j in 0..y {
                for t in 0..h {
                    for k in 0..tail {
                        let src = (((i * h + s) * y + j) * h + t) * tail + k;
                        let nz: Vec<(usize, &Scalar)> =
                            f.row(src).iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
                        if nz.is_empty() {
                            continue;
                        }
                        for p in 0..h {
                            let c = m.get(p, s * h + t);
                            if c.is_zero() {
                                continue;
                            }
                            let dst = (((i * y + j) * h + p) * tail + k) * cols;
                            for &(col, v) in &nz {
                                out[dst + col] += &(c * v);
                            }
                        }
                    }
                }
            }
        }
    }
    LinMap::new(x * y * h * tail, cols, out).expect("apply_lax_pair shape")
}

/// Bialgebra check that each square corresponds to.
pub fn corresponding_axiom(square: &str) -> Option<&'static str> {
    Some(match square {
        "lax-associativity" => "algebra/associativity",
        "lax-unit-left" => "algebra/unit-left",
        "lax-unit-right" => "algebra/unit-right",
        "w-monoidal" => "comult-multiplicative",
        "w-unit" => "comult-unital",
        "n-monoidal" => "counit-multiplicative",
        "n-unit" => "counit-unital",
        _ => return None,
    })
}

/// The Hopf comonad squares for `Q = -⊗C` with the lax structure coming
/// from `a`, at objects of dimensions `x, y, z`. Works on unchecked data.
pub fn hopf_squares(c: &FinCoalgebra, a: &FinAlgebra, x: usize, y: usize, z: usize) -> Result<Report> {
    let h = c.dim();
    if a.dim() != h {
        return Err(Error::shape("hopf squares", format!("coalgebra dim {h}"), format!("algebra dim {}", a.dim())));
    }
    let (d, e) = (c.comult(), c.counit());
    let u = a.unit();
    let phi = |p: usize, q: usize, tail: usize, f: &LinMap| apply_lax_pair(a, p, q, tail, f);
    let mut r = Report::new();

    let lhs = phi(x * y, z, 1, &phi(x, y, z * h, &id(x * h * y * h * z * h)));
    let rhs = phi(x, y * z, 1, &id(x * h).kron(&phi(y, z, 1, &id(y * h * z * h))));
    r.expect_eq("lax-associativity", &lhs, &rhs);
    r.expect_eq("lax-unit-left", &phi(1, x, 1, &u.kron(&id(x * h))), &id(x * h));
    r.expect_eq("lax-unit-right", &phi(x, 1, 1, &id(x * h).kron(u)), &id(x * h));

    // QQ is lax monoidal through (φ⊗id_H)∘φ_{QX,QY}
    let phi2 = |p: usize, q: usize, f: &LinMap| phi(p, q, h, &phi(p * h, q * h, 1, f));
    let w = |p: usize| id(p).kron(d);
    let pair = id(x * h * y * h);
    r.expect_eq(
        "w-monoidal",
        &(w(x * y) * phi(x, y, 1, &pair)),
        &phi2(x, y, &w(x).kron(&w(y))),
    );
    r.expect_eq("w-unit", &(d * u), &(u.kron(&id(h)) * u));
    let n = |p: usize| id(p).kron(e);
    r.expect_eq("n-monoidal", &(n(x * y) * phi(x, y, 1, &pair)), &n(x).kron(&n(y)));
    r.expect_eq("n-unit", &(e * u), &id(1));
    Ok(r)
}

/// Sample dimensions at which [`hopf_from_bialgebra`] certifies the squares.
pub const SQUARE_SAMPLES: [(usize, usize, usize); 4] = [(1, 1, 1), (2, 1, 1), (1, 3, 2), (2, 2, 1)];

/// Validates `h` and certifies the Hopf comonad squares on sample objects.
pub fn hopf_from_bialgebra(h: &FinBialgebra) -> Result<HopfComonadData> {
    let report = h.validate();
    if !report.is_ok() {
        return Err(Error::Invalid(report));
    }
    for &(x, y, z) in &SQUARE_SAMPLES {
        let r = hopf_squares(h.coalgebra(), h.algebra(), x, y, z)?;
        if !r.is_ok() {
            return Err(Error::Invalid(r));
        }
    }
    Ok(HopfComonadData { bialgebra: h.clone() })
}

/// `(ρ_V⊗ρ_W); (id_V⊗σ_{H,W}⊗id_H); (id_{V⊗W}⊗m_H)`, on unchecked data.
pub fn tensor_coaction(a: &FinAlgebra, v: &LinMap, vdim: usize, w: &LinMap, wdim: usize) -> LinMap {
    apply_lax_pair(a, vdim, wdim, 1, &v.kron(w))
}

pub fn comodule_tensor(h: &FinBialgebra, v: &Comodule, w: &Comodule) -> Result<Comodule> {
    if v.over() != h.coalgebra() || w.over() != h.coalgebra() {
        return Err(Error::Mismatch("comodule tensor over a different coalgebra".into()));
    }
    let coaction = tensor_coaction(h.algebra(), v.coaction(), v.dim(), w.coaction(), w.dim());
    Comodule::new(h.coalgebra().clone(), v.dim() * w.dim(), coaction)
}

/// `(𝕂, u_H)`.
pub fn unit_comodule(h: &FinBialgebra) -> Comodule {
    Comodule::new(h.coalgebra().clone(), 1, h.algebra().unit().clone()).expect("unit shape")
}

/// Read `(m_H, u_H)` back from the comodule tensor: `m = (ε⊗ε⊗id)∘ρ_{C⊗C}` on
/// two cofree comodules, `u` is the unit comodule's coaction.
pub fn readback_lax(h: &FinBialgebra) -> Result<(LinMap, LinMap)> {
    let c = h.coalgebra();
    let reg = cofree(c, 1);
    let t = comodule_tensor(h, &reg, &reg)?;
    let m = tensor(&[c.counit(), c.counit(), &id(c.dim())]) * t.coaction();
    Ok((m, unit_comodule(h).coaction().clone()))
}

/// Comodule-level shadow of the bialgebra axioms on `(c, a)`: the tensor of
/// cofree comodules and the unit are comodules, and the tensor is strictly
/// associative and unital.
pub fn lifted_tensor_report(c: &FinCoalgebra, a: &FinAlgebra) -> Result<Report> {
    let n = c.dim();
    if a.dim() != n {
        return Err(Error::shape("lifted tensor", format!("coalgebra dim {n}"), format!("algebra dim {}", a.dim())));
    }
    let mut r = Report::new();
    let reg = c.comult();
    let pair = tensor_coaction(a, reg, n, reg, n);
    r.absorb("tensor-comodule", comodcat::validate_comodule(&Comodule::new(c.clone(), n * n, pair.clone())?));
    r.absorb("unit-comodule", comodcat::validate_comodule(&Comodule::new(c.clone(), 1, a.unit().clone())?));
    let left = tensor_coaction(a, &pair, n * n, reg, n);
    let right = tensor_coaction(a, reg, n, &tensor_coaction(a, reg, n, reg, n), n * n);
    r.expect_eq("tensor-associative", &left, &right);
    r.expect_eq("tensor-unital-left", &tensor_coaction(a, a.unit(), 1, reg, n), reg);
    r.expect_eq("tensor-unital-right", &tensor_coaction(a, reg, n, a.unit(), 1), reg);
    Ok(r)
}

/// Whether `m_H∘σ = m_H`; when it is, also checks that `σ_{V,W}` is a comodule
/// morphism `V⊗W → W⊗V` on the given samples.
pub fn check_symmetric_hopf(h: &FinBialgebra, samples: &[Comodule]) -> Result<bool> {
    let n = h.dim();
    let m = h.algebra().mult();
    let symmetric = &(m * LinMap::symmetry(n, n)) == m;
    if symmetric {
        for v in samples {
            for w in samples {
                let vw = comodule_tensor(h, v, w)?;
                let wv = comodule_tensor(h, w, v)?;
                if !comodcat::is_comodule_morphism(&vw, &wv, &LinMap::symmetry(v.dim(), w.dim())) {
                    return Err(Error::Unsolvable("commutative multiplication but symmetry is not a comodule map".into()));
                }
            }
        }
    }
    Ok(symmetric)
}

/// `Hom(C, A)` with `f*g = m_A∘(f⊗g)∘Δ_C` and unit `u_A∘ε_C`; basis
/// `e_{ij} = (c_j* ↦ a_i)` at flat index `i·dim(C)+j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionAlgebra {
    pub coalg: FinCoalgebra,
    pub alg: FinAlgebra,
    pub result: FinAlgebra,
}

impl ConvolutionAlgebra {
    /// Convolution product of two maps `C → A`.
    pub fn convolve(&self, f: &LinMap, g: &LinMap) -> LinMap {
        self.alg.mult() * f.kron(g) * self.coalg.comult()
    }

    /// The basis vector for a map `C → A`.
    pub fn element(f: &LinMap) -> LinMap {
        f.vectorize()
    }
}

pub fn convolution_algebra(c: &FinCoalgebra, a: &FinAlgebra) -> ConvolutionAlgebra {
    let (dc, da) = (c.dim(), a.dim());
    let n = dc * da;
    let (m, d) = (a.mult(), c.comult());
    let mut mult = LinMap::zeros(n, n * n);
    // e_{ij} * e_{kl} = m[:, (i,k)] ⊗ Δ[(j,l), :]
    for i in 0..da {
        for j in 0..dc {
            for k in 0..da {
                for l in 0..dc {
                    let col = (i * dc + j) * n + (k * dc + l);
                    for p in 0..da {
                        let mp = m.get(p, i * da + k);
                        if mp.is_zero() {
                            continue;
                        }
                        for q in 0..dc {
                            let dq = d.get(j * dc + l, q);
                            if !dq.is_zero() {
                                mult.set(p * dc + q, col, mp * dq);
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = (a.unit() * c.counit()).vectorize();
    ConvolutionAlgebra {
        coalg: c.clone(),
        alg: a.clone(),
        result: FinAlgebra::new(n, mult, unit).expect("convolution shape"),
    }
}

/// The two coherence squares for a strength `s: A → A⊗H*` of the module
/// monad `-⊗A` over the Hopf comonad `-⊗H`:
/// multiplication `(m_A⊗m_{H*})(id_A⊗σ⊗id_{H*})(s⊗s) = s∘m_A` and
/// unit `s∘u_A = u_A⊗u_{H*}`.
pub fn check_module_monad_strength(s: &LinMap, a: &FinAlgebra, h: &FinBialgebra) -> Result<Report> {
    let (na, nh) = (a.dim(), h.dim());
    if s.shape() != (na * nh, na) {
        return Err(Error::shape(
            "module monad strength",
            format!("{}x{}", s.rows(), s.cols()),
            format!("expected {}x{}", na * nh, na),
        ));
    }
    let hd = dual_algebra(h.coalgebra());
    let mut r = Report::new();
    let lhs = a.mult().kron(hd.mult()) * tensor(&[&id(na), &LinMap::symmetry(nh, na), &id(nh)]) * s.kron(s);
    r.expect_eq("strength-multiplication", &lhs, &(s * a.mult()));
    r.expect_eq("strength-unit", &(s * a.unit()), &a.unit().kron(hd.unit()));
    Ok(r)
}

/// Trivial strength `a ↦ a⊗ε` (the transpose of `u_{H*}` is `ε`).
pub fn trivial_strength(a: &FinAlgebra, h: &FinBialgebra) -> LinMap {
    id(a.dim()).kron(&h.coalgebra().counit().transpose())
}

/// Result of [`check_lax_monoidal_lift`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxMonoidalLiftCheck {
    /// The monoidality squares for `b`.
    pub square_holds: bool,
    pub report: Report,
    /// The comparison `F(V)⊗F(V') → F(V⊗V')` (and the unit comparison) are
    /// comodule morphisms on every sampled pair.
    pub comparison_holds: bool,
}

impl LaxMonoidalLiftCheck {
    pub fn agrees(&self) -> bool {
        self.square_holds == self.comparison_holds
    }
}

/// `-⊗W` lax monoidal through the algebra `W`, with oplax structure
/// `b: H⊗W → W⊗H'` between two Hopf comonads.
pub fn check_lax_monoidal_lift(
    h: &FinBialgebra,
    h2: &FinBialgebra,
    w: &FinAlgebra,
    s: &OplaxStructure,
    samples: &[(Comodule, Comodule)],
) -> Result<LaxMonoidalLiftCheck> {
    if s.source() != h.coalgebra() || s.target() != h2.coalgebra() || s.carrier() != w.dim() {
        return Err(Error::Mismatch("oplax structure does not match the bialgebras and W".into()));
    }
    let (n, n2, k) = (h.dim(), h2.dim(), w.dim());
    let b = s.b();
    let mut report = Report::new();
    let lhs = b
        * h.algebra().mult().kron(w.mult())
        * tensor(&[&id(n), &LinMap::symmetry(k, n), &id(k)]);
    let rhs = w.mult().kron(h2.algebra().mult())
        * tensor(&[&id(k), &LinMap::symmetry(n2, k), &id(n2)])
        * b.kron(b);
    report.expect_eq("monoidal-square", &lhs, &rhs);
    report.expect_eq(
        "unit-square",
        &(b * h.algebra().unit().kron(w.unit())),
        &w.unit().kron(h2.algebra().unit()),
    );

    let mut comparison_holds = {
        let lifted_unit = lift_comodule(s, &unit_comodule(h))?;
        comodcat::is_comodule_morphism(&unit_comodule(h2), &lifted_unit, w.unit())
    };
    for (v, v2) in samples {
        let src = comodule_tensor(h2, &lift_comodule(s, v)?, &lift_comodule(s, v2)?)?;
        let tgt = lift_comodule(s, &comodule_tensor(h, v, v2)?)?;
        let cmp = id(v.dim() * v2.dim()).kron(w.mult()) * tensor(&[&id(v.dim()), &LinMap::symmetry(k, v2.dim()), &id(k)]);
        comparison_holds &= comodcat::is_comodule_morphism(&src, &tgt, &cmp);
    }
    Ok(LaxMonoidalLiftCheck {
        square_holds: report.is_ok(),
        report,
        comparison_holds,
    })
}

/// `b(c⊗w) = w_1⊗c·w_2`: `H` acting on itself, lax monoidal through `m_H`.
pub fn regular_lift(h: &FinBialgebra) -> OplaxStructure {
    let n = h.dim();
    let b = id(n).kron(h.algebra().mult())
        * LinMap::symmetry(n, n).kron(&id(n))
        * id(n).kron(h.coalgebra().comult());
    OplaxStructure::new(h.coalgebra().clone(), h.coalgebra().clone(), n, b).expect("regular lift shape")
}

/// `(ε ± χ)/2` in the convolution algebra of a group coalgebra with values in
/// `𝕂`, for the character `χ` of a cyclic group of order 2.
pub fn sign_idempotents(conv: &ConvolutionAlgebra) -> (LinMap, LinMap) {
    let unit = conv.result.unit().clone();
    let n = unit.rows();
    let chi = LinMap::from_fn(n, 1, |i, _| if i == 0 { Scalar::one() } else { -Scalar::one() });
    let half = Scalar::ratio(1, 2).unwrap();
    (
        (&unit + &chi).scale(&half),
        (&unit - &chi).scale(&half),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{check_morphism, groups, StructMorphism};

    fn kz2() -> FinBialgebra {
        FinBialgebra::group(&groups::cyclic(2))
    }

    fn broken_counit() -> FinBialgebra {
        let h = kz2();
        let c = FinCoalgebra::new(2, h.coalgebra().comult().clone(), LinMap::from_ints(&[&[1, 0]])).unwrap();
        FinBialgebra::new(c, h.algebra().clone()).unwrap()
    }

    #[test]
    fn shuffled_pair_matches_matrix() {
        let a = FinBialgebra::group(&groups::cyclic(3)).algebra().clone();
        let mut rng = crate::random::seeded(3);
        for (x, y, tail) in [(1, 1, 1), (2, 1, 3), (1, 2, 2)] {
            let f = crate::random::matrix(&mut rng, x * 3 * y * 3 * tail, 2);
            assert_eq!(apply_lax_pair(&a, x, y, tail, &f), lax_pair(&a, x, y).kron(&id(tail)) * &f);
        }
    }

    #[test]
    fn hopf_examples() {
        assert!(hopf_from_bialgebra(&FinBialgebra::ground()).is_ok());
        let d = hopf_from_bialgebra(&kz2()).unwrap();
        for x in 0..=3 {
            for y in 0..=3 {
                assert!(hopf_squares(d.bialgebra().coalgebra(), d.bialgebra().algebra(), x, y, 1).unwrap().is_ok());
            }
        }
        let Err(Error::Invalid(r)) = hopf_from_bialgebra(&broken_counit()) else {
            panic!("broken counit accepted");
        };
        assert!(r.has("counit-multiplicative"));
    }

    #[test]
    fn broken_axioms_match_squares() {
        let b = broken_counit();
        let sq = hopf_squares(b.coalgebra(), b.algebra(), 1, 1, 1).unwrap();
        let bialg = b.validate();
        for f in &sq.failures {
            assert!(bialg.has(corresponding_axiom(&f.check).unwrap()), "{}", f.check);
        }
        assert!(sq.has("n-monoidal"));
    }

    #[test]
    fn tensor_examples() {
        let h = kz2();
        let g = LinMap::basis_vector(2, 1);
        let line = Comodule::trivial(h.coalgebra(), &g, 1).unwrap();
        let t = comodule_tensor(&h, &line, &line).unwrap();
        assert_eq!(t.coaction(), &LinMap::basis_vector(2, 0));
        let v = cofree(h.coalgebra(), 2);
        let u = unit_comodule(&h);
        assert_eq!(comodule_tensor(&h, &u, &v).unwrap(), v);
        assert_eq!(comodule_tensor(&h, &u, &u).unwrap(), u);
        assert_eq!(u.coaction(), &LinMap::basis_vector(2, 0));
        let (m, unit) = readback_lax(&h).unwrap();
        assert_eq!((&m, &unit), (h.algebra().mult(), h.algebra().unit()));
    }

    #[test]
    fn lifted_tensor_iff_bialgebra() {
        let h = kz2();
        assert!(lifted_tensor_report(h.coalgebra(), h.algebra()).unwrap().is_ok());
        let b = broken_counit();
        assert!(!lifted_tensor_report(b.coalgebra(), b.algebra()).unwrap().is_ok());
    }

    #[test]
    fn symmetric_examples() {
        let h = kz2();
        let samples = [cofree(h.coalgebra(), 1), unit_comodule(&h)];
        assert!(check_symmetric_hopf(&h, &samples).unwrap());
        assert!(check_symmetric_hopf(&FinBialgebra::ground(), &[]).unwrap());
        assert!(!check_symmetric_hopf(&FinBialgebra::group(&groups::symmetric3()), &[]).unwrap());
    }

    #[test]
    fn convolution_examples() {
        let a = FinAlgebra::truncated_polynomial(2);
        let conv = convolution_algebra(&FinCoalgebra::ground(), &a);
        assert_eq!(conv.result, a);
        let conv = convolution_algebra(kz2().coalgebra(), &FinAlgebra::ground());
        assert!(conv.result.validate().is_ok());
        let prod = FinAlgebra::product(2);
        let iso = check_morphism(&StructMorphism::Algebra {
            source: &conv.result,
            target: &prod,
            map: &id(2),
        })
        .unwrap();
        assert!(iso.is_ok());
        let (p, q) = sign_idempotents(&conv);
        let m = conv.result.mult();
        assert_eq!(m * p.kron(&p), p);
        assert_eq!(m * q.kron(&q), q);
        assert!((m * p.kron(&q)).is_zero());
        assert_eq!(&p + &q, conv.result.unit().clone());
    }

    #[test]
    fn strength_examples() {
        let h = kz2();
        let k = FinAlgebra::ground();
        assert!(check_module_monad_strength(&trivial_strength(&k, &h), &k, &h).unwrap().is_ok());
        let a = FinAlgebra::truncated_polynomial(2);
        let g = FinBialgebra::ground();
        assert!(check_module_monad_strength(&id(2), &a, &g).unwrap().is_ok());
        let mut s = trivial_strength(&a, &h);
        s.set(0, 1, Scalar::one());
        assert!(!check_module_monad_strength(&s, &a, &h).unwrap().is_ok());
    }

    #[test]
    fn lax_monoidal_lift_examples() {
        let h = kz2();
        let samples = vec![(cofree(h.coalgebra(), 1), cofree(h.coalgebra(), 1))];
        let id_lift = OplaxStructure::identity(h.coalgebra());
        let r = check_lax_monoidal_lift(&h, &h, &FinAlgebra::ground(), &id_lift, &samples).unwrap();
        assert!(r.square_holds && r.agrees());
        let r = check_lax_monoidal_lift(&h, &h, h.algebra(), &regular_lift(&h), &samples).unwrap();
        assert!(regular_lift(&h).validate().is_ok());
        assert!(r.square_holds && r.agrees());
        let swap = LinMap::from_ints(&[&[0, 1], &[1, 0]]);
        let broken = OplaxStructure::from_coalgebra_map(h.coalgebra(), h.coalgebra(), &swap, 1).unwrap();
        assert!(broken.validate().is_ok());
        let r = check_lax_monoidal_lift(&h, &h, &FinAlgebra::ground(), &broken, &samples).unwrap();
        assert!(!r.square_holds && r.agrees());
    }
}
